//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::Rng;
use stabtherm::json::to_pretty;
use stabtherm::suites::{self, trial_rng};
use stabtherm_core::coeff::{int, ratio};
use stabtherm_core::mite::{is_mite_on, k_body_mite, l_local_mite};
use stabtherm_core::parent::energy_moments;
use stabtherm_core::{models, oracle, Graph, PauliHamiltonian, StabilizerTableau};

const SEED: u64 = 20_240_611;
const NOGO_BUDGET: u64 = 20_000;

type Check = Result<String, String>;
type Criterion = (u32, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// `‖Hψ‖` on the graph state, from the dense statevector.
fn residual(h: &PauliHamiltonian, g: &Graph) -> f64 {
    let psi = oracle::statevector(g).unwrap();
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for (p, c) in h.float_terms() {
        for (o, v) in out.iter_mut().zip(oracle::apply_pauli(&p, &psi)) {
            *o += v * c;
        }
    }
    oracle::norm(&out)
}

fn exact_zero_energy(h: &PauliHamiltonian, t: &StabilizerTableau) -> bool {
    let (mean, second) = energy_moments(h, t).unwrap();
    mean.is_zero() && second.is_zero()
}

fn criterion_1() -> Check {
    for n in [8, 10, 12] {
        let m = models::g1_model(n, int(1)).unwrap();
        let (t, g, h) = (&m.tableau, m.graph.as_ref().unwrap(), m.hamiltonian.as_ref().unwrap());
        ensure(exact_zero_energy(h, t), format!("N={n}: <H> or <H^2> nonzero"))?;
        ensure(residual(h, g) < 1e-10, format!("N={n}: statevector residual"))?;
        ensure(k_body_mite(t, 3).holds, format!("N={n}: 3-body MITE fails"))?;
        ensure(!k_body_mite(t, 4).holds, format!("N={n}: 4-body MITE holds"))?;
        let k1 = g.stabilizer_generator(0);
        ensure(k1.weight() == 4 && t.contains(&k1), format!("N={n}: K^(1) is not a weight-4 element"))?;
        ensure(!is_mite_on(t, &k1.support()).holds, format!("N={n}: supp K^(1) is maximally mixed"))?;
        ensure(l_local_mite(t, n / 2 - 1).holds, format!("N={n}: (N/2-1)-local MITE fails"))?;
        ensure(m.check_claims().unwrap().iter().all(|o| o.passed()), format!("N={n}: model claim list"))?;
    }
    Ok("G1 at N=8,10,12: zero energy exact, 3-body true, 4-body false (K^(1) witness), (N/2-1)-local true".into())
}

fn criterion_2() -> Check {
    let mut rng = trial_rng(SEED, 2);
    let mut draws = Vec::new();
    for n in [5, 7, 9] {
        let graph = Graph::g2(n).unwrap();
        let t = graph.to_stabilizer();
        for _ in 0..3 {
            let j: Vec<_> = (0..3).map(|_| ratio(rng.random_range(-20..=20), rng.random_range(1..=7))).collect();
            let h = models::g2_hamiltonian(n, &j[0], &j[1], &j[2]).unwrap();
            ensure(exact_zero_energy(&h, &t), format!("N={n}, J={j:?}: not zero energy"))?;
            ensure(residual(&h, &graph) < 1e-9, format!("N={n}: statevector residual"))?;
            draws.push(format!("({})", j.iter().map(stabtherm_core::coeff::format_rational).collect::<Vec<_>>().join(", ")));
        }
        ensure(k_body_mite(&t, 2).holds, format!("N={n}: 2-body MITE fails"))?;
        ensure(!k_body_mite(&t, 3).holds, format!("N={n}: 3-body MITE holds"))?;
        ensure(l_local_mite(&t, (n - 1) / 2).holds, format!("N={n}: (N-1)/2-local MITE fails"))?;
    }
    let cluster = models::cluster_1d_model(8).unwrap().tableau;
    ensure(!l_local_mite(&cluster, 3).holds, "cluster N=8: 3-local MITE holds")?;
    let eap = models::eap_tableau(8).unwrap();
    ensure(!k_body_mite(&eap, 2).holds, "EAP N=8: 2-body MITE holds")?;
    ensure(l_local_mite(&eap, 4).holds, "EAP N=8: 4-local MITE fails")?;
    Ok(format!("G2 at N=5,7,9 with J draws [{}]; cluster N=8 3-local false; EAP N=8 2-body false, 4-local true", draws.join(", ")))
}

fn round_trip_json() -> Result<(String, String), String> {
    let a = suites::round_trip("g1", 10, 100, SEED).map_err(|e| e.to_string())?;
    let b = suites::round_trip("g2", 9, 100, SEED).map_err(|e| e.to_string())?;
    Ok((to_pretty(&a), to_pretty(&b)))
}

fn criterion_3() -> Check {
    let mut parts = Vec::new();
    for (model, n) in [("g1", 10), ("g2", 9)] {
        let r = suites::round_trip(model, n, 100, SEED).map_err(|e| e.to_string())?;
        ensure(r.trials.len() == 100, "trial count")?;
        let bad: Vec<_> = r.trials.iter().filter(|t| !(t.zero_energy && t.reconstructed)).map(|t| t.trial).collect();
        ensure(bad.is_empty(), format!("{model} N={n}: failing trials {bad:?}"))?;
        parts.push(format!("{model} N={n}: {} orbits of {} a=±1 factorizations, 100/100 exact", r.orbits, r.real_factorizations));
    }
    Ok(parts.join("; "))
}

fn nogo_json() -> String {
    to_pretty(&suites::no_go_suite(&[8, 10], 100, NOGO_BUDGET, 100, SEED))
}

fn criterion_4() -> Check {
    let report = suites::no_go_suite(&[8, 10], 100, NOGO_BUDGET, 100, SEED);
    for u in &report.unfiltered {
        ensure(
            u.support_violations == 0 && u.weight_violations == 0,
            format!("N={}: {} support and {} weight violations", u.n, u.support_violations, u.weight_violations),
        )?;
    }
    let summary: Vec<String> = report
        .filtered
        .iter()
        .map(|f| {
            format!("N={}: {}/{} groups with δ≥5 in {} draws (δ histogram {:?})", f.n, f.qualifying, f.target, f.draws, f.delta_histogram)
        })
        .collect();
    for f in &report.filtered {
        ensure(f.with_factorizations == 0, format!("N={}: a δ≥5 group admits a two-body factorization", f.n))?;
        ensure(
            f.qualifying == f.target,
            format!("could not draw the required δ≥5 groups: {}; unfiltered bounds hold", summary.join("; ")),
        )?;
    }
    Ok(summary.join("; "))
}

/// Same property at N=18, where δ ≥ 5 groups are common. Reported only.
fn criterion_4_substitute() -> String {
    let f = suites::filtered_draws(18, 5, 100, NOGO_BUDGET, SEED);
    let u = suites::unfiltered_audit(12, 50, SEED);
    format!(
        "N=18: {}/{} δ≥5 groups in {} draws, {} with two-body factorizations; N=12 unfiltered: {} factorizations, {} violations",
        f.qualifying,
        f.target,
        f.draws,
        f.with_factorizations,
        u.factorizations,
        u.support_violations + u.weight_violations
    )
}

fn oracle_json() -> Result<String, String> {
    suites::oracle_equivalence(500, 10, SEED).map(|r| to_pretty(&r)).map_err(|e| e.to_string())
}

fn criterion_5() -> Check {
    let r = suites::oracle_equivalence(500, 10, SEED).map_err(|e| e.to_string())?;
    ensure(
        r.rdm_discrepancies == 0 && r.graph_criterion_discrepancies == 0,
        format!(
            "{} rdm and {} graph-criterion discrepancies; first: {}",
            r.rdm_discrepancies,
            r.graph_criterion_discrepancies,
            r.first_discrepancy.unwrap_or_default()
        ),
    )?;
    Ok(format!(
        "{} graphs, {} subsystems ({} MITE), max MITE trace distance {:.1e}, min non-MITE {:.3}",
        r.graphs, r.subsystems, r.mite_subsystems, r.max_distance_mite.0, r.min_distance_not_mite.0
    ))
}

fn criterion_6() -> Check {
    let r = suites::calibration(20, 1000, 20, 1000, 1.0, SEED).map_err(|e| e.to_string())?;
    let (goe, poisson) = (r.goe_mean_r_tilde.0, r.poisson_mean_r_tilde.0);
    let msg = format!("GOE <r>={goe:.4} (target 0.5307±0.005), uniform <r>={poisson:.4} (target 0.3863±0.01)");
    ensure((goe - 0.5307).abs() <= 0.005 && (poisson - 0.3863).abs() <= 0.01, msg.clone())?;
    Ok(msg)
}

fn nonintegrability_json() -> Result<String, String> {
    suites::nonintegrability(14, 0.5).map(|(s, _)| to_pretty(&s)).map_err(|e| e.to_string())
}

fn criterion_7() -> Check {
    let (s, _) = suites::nonintegrability(14, 0.5).map_err(|e| e.to_string())?;
    let r = s.mean_r_tilde.0;
    let msg = format!(
        "N=14 pooled over {} sectors (dim {}): <r>={r:.4} from {} ratios, closer to GOE: {}, degeneracy warnings: {}",
        s.sectors.len(),
        s.total_dimension,
        s.pooled_r_count,
        s.closer_to_goe,
        s.degeneracy_count
    );
    ensure(r >= 0.48 && s.closer_to_goe && s.degeneracy_count == 0, msg.clone())?;
    Ok(msg)
}

fn criterion_8() -> Check {
    let artifacts = || -> Result<Vec<(&'static str, String)>, String> {
        let (rt1, rt2) = round_trip_json()?;
        Ok(vec![
            ("criterion 3 (g1)", rt1),
            ("criterion 3 (g2)", rt2),
            ("criterion 4", nogo_json()),
            ("criterion 5", oracle_json()?),
            ("criterion 7", nonintegrability_json()?),
        ])
    };
    let mut runs = Vec::new();
    for threads in [1, 4, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| e.to_string())?;
        runs.push((threads, pool.install(artifacts)?));
    }
    let (_, reference) = &runs[0];
    for (threads, run) in &runs[1..] {
        for ((name, a), (_, b)) in reference.iter().zip(run) {
            ensure(a == b, format!("{name} differs between 1 and {threads} threads"))?;
        }
    }
    let bytes: usize = reference.iter().map(|(_, s)| s.len()).sum();
    Ok(format!("{} JSON artifacts ({bytes} bytes) identical at 1, 4 and 8 threads", reference.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, criterion_1, Duration::from_secs(10)),
        (2, criterion_2, Duration::from_secs(10)),
        (3, criterion_3, Duration::from_secs(30)),
        (4, criterion_4, Duration::from_secs(120)),
        (5, criterion_5, Duration::from_secs(300)),
        (6, criterion_6, Duration::from_secs(120)),
        (7, criterion_7, Duration::from_secs(600)),
        (8, criterion_8, Duration::from_secs(1800)),
    ];
    let mut failed = Vec::new();
    for (id, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {id}: PASS ({:.2} s) {msg}", elapsed.as_secs_f64()),
            Err(msg) => {
                println!("criterion {id}: FAIL ({:.2} s) {msg}", elapsed.as_secs_f64());
                failed.push(id);
            }
        }
        if id == 4 {
            println!("criterion 4 substitute (informative, not scored): {}", criterion_4_substitute());
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 8 criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
