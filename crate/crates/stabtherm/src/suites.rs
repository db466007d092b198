//! Seeded batch experiments with deterministic JSON reports.
//!
//! Every randomized suite derives one ChaCha8 stream per trial from
//! `(seed, trial)` and collects results in trial order, so reports do not
//! depend on the worker count.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use stabtherm_core::coeff::{int, ratio};
use stabtherm_core::parent::{
    assemble_orbits, decompose, enumerate_factorizations, real_bundles, translation_orbits, verify_zero_eigenstate,
};
use stabtherm_core::{models, oracle, Coeff, Graph, StabilizerTableau, Support};

use crate::error::{Error, Result};
use crate::json::F17;
use crate::rdm::distance_from_maximally_mixed;
use crate::spectral::{
    eigenvalues, goe_eigenvalues, poisson_levels, poisson_mean, pooled_mean, pooling_sectors, r_statistics, sector_basis, SpectrumReport,
    DEFAULT_DIMENSION_LIMIT, GOE_MEAN,
};

/// Stream `trial` of the generator seeded by `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Nonzero rational `±p/q` with `1 ≤ p ≤ 9`, `1 ≤ q ≤ 6`.
pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Coeff {
    let p: i64 = rng.random_range(1..=9);
    let q: i64 = rng.random_range(1..=6);
    let sign = if rng.random::<bool>() { 1 } else { -1 };
    ratio(sign * p, q)
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTripTrial {
    pub trial: u64,
    pub terms: usize,
    pub classes: usize,
    pub zero_energy: bool,
    pub reconstructed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTripReport {
    pub model: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub factorizations: usize,
    pub real_factorizations: usize,
    pub orbits: usize,
    pub trials: Vec<RoundTripTrial>,
    pub all_passed: bool,
}

/// Synthesizes `H` from all `a = ±1` two-body factorizations with one
/// random rational coefficient per translation orbit, then checks
/// annihilation and exact decompose/reassemble round trips.
pub fn round_trip(model: &str, n: usize, trials: u64, seed: u64) -> Result<RoundTripReport> {
    let bundle = models::build(model, n, &[])?;
    let t = &bundle.tableau;
    let all = enumerate_factorizations(t, 2);
    let real = real_bundles(&all);
    let orbits = translation_orbits(&real);
    let rows: Vec<Result<RoundTripTrial>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let coeffs: Vec<Coeff> = orbits.iter().map(|_| random_coefficient(&mut rng)).collect();
            let h = assemble_orbits(n, &orbits, &coeffs)?;
            let zero_energy = verify_zero_eigenstate(&h, t)?;
            let cert = decompose(&h, t)?;
            let back = cert.reconstruct(t)?;
            Ok(RoundTripTrial { trial, terms: h.len(), classes: cert.class_table.len(), zero_energy, reconstructed: back == h })
        })
        .collect();
    let trials = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let all_passed = trials.iter().all(|r| r.zero_energy && r.reconstructed);
    Ok(RoundTripReport {
        model: model.to_string(),
        n,
        m: 2,
        seed,
        factorizations: all.len(),
        real_factorizations: real.len(),
        orbits: orbits.len(),
        trials,
        all_passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FilteredDraws {
    pub n: usize,
    pub target: usize,
    pub draws: u64,
    /// Draws whose minimum weight is at least `min_delta`.
    pub qualifying: usize,
    /// Counts keyed by `δ` for `δ < min_delta`; larger values are pooled
    /// under `min_delta`.
    pub delta_histogram: BTreeMap<usize, usize>,
    /// Qualifying groups whose two-body enumeration was nonempty.
    pub with_factorizations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnfilteredAudit {
    pub n: usize,
    pub groups: usize,
    pub factorizations: usize,
    /// Factorizations with `|supp g| > |supp P| + |supp Q|`.
    pub support_violations: usize,
    /// Factorizations with `max(|supp P|, |supp Q|) < ⌈δ/2⌉`.
    pub weight_violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct NoGoSuiteReport {
    pub seed: u64,
    pub m: usize,
    pub min_delta: usize,
    pub filtered: Vec<FilteredDraws>,
    pub unfiltered: Vec<UnfilteredAudit>,
}

/// Draws random maximal groups at `n` until `target` of them have
/// `δ ≥ min_delta` or `budget` draws are spent, and enumerates two-body
/// factorizations for the qualifying ones.
pub fn filtered_draws(n: usize, min_delta: usize, target: usize, budget: u64, seed: u64) -> FilteredDraws {
    const CHUNK: u64 = 512;
    let mut histogram = BTreeMap::new();
    let mut qualifying = Vec::new();
    let mut draws = 0;
    while draws < budget && qualifying.len() < target {
        let end = (draws + CHUNK).min(budget);
        let batch: Vec<(u64, usize, Option<StabilizerTableau>)> = (draws..end)
            .into_par_iter()
            .map(|i| {
                let t = StabilizerTableau::random(n, &mut trial_rng(seed, i));
                match t.min_weight(min_delta - 1) {
                    Some(d) => (i, d, None),
                    None => (i, min_delta, Some(t)),
                }
            })
            .collect();
        for (i, d, t) in batch {
            if qualifying.len() >= target {
                break;
            }
            draws = i + 1;
            *histogram.entry(d).or_insert(0) += 1;
            if let Some(t) = t {
                qualifying.push(t);
            }
        }
    }
    let with_factorizations = qualifying.par_iter().filter(|t| !enumerate_factorizations(t, 2).is_empty()).count();
    FilteredDraws { n, target, draws, qualifying: qualifying.len(), delta_histogram: histogram, with_factorizations }
}

pub fn unfiltered_audit(n: usize, groups: u64, seed: u64) -> UnfilteredAudit {
    let rows: Vec<(usize, usize, usize)> = (0..groups)
        .into_par_iter()
        .map(|i| {
            let t = StabilizerTableau::random(n, &mut trial_rng(seed, i));
            let delta = t.distance();
            let fs = enumerate_factorizations(&t, 2);
            let support = fs.iter().filter(|f| f.g.weight() > f.p.weight() + f.q.weight()).count();
            let weight = fs.iter().filter(|f| f.max_weight() < delta.div_ceil(2)).count();
            (fs.len(), support, weight)
        })
        .collect();
    UnfilteredAudit {
        n,
        groups: groups as usize,
        factorizations: rows.iter().map(|r| r.0).sum(),
        support_violations: rows.iter().map(|r| r.1).sum(),
        weight_violations: rows.iter().map(|r| r.2).sum(),
    }
}

pub fn no_go_suite(ns: &[usize], target: usize, budget: u64, unfiltered_groups: u64, seed: u64) -> NoGoSuiteReport {
    let min_delta = 5;
    NoGoSuiteReport {
        seed,
        m: 2,
        min_delta,
        filtered: ns.iter().map(|&n| filtered_draws(n, min_delta, target, budget, seed ^ n as u64)).collect(),
        unfiltered: ns.iter().map(|&n| unfiltered_audit(n, unfiltered_groups, seed.wrapping_add(1) ^ n as u64)).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub seed: u64,
    pub graphs: usize,
    pub subsystems: usize,
    pub mite_subsystems: usize,
    pub rdm_discrepancies: usize,
    pub graph_criterion_discrepancies: usize,
    /// Largest `‖ρ_A − I/d‖₁` among subsystems the kernel calls MITE.
    pub max_distance_mite: F17,
    /// Smallest `‖ρ_A − I/d‖₁` among the rest.
    pub min_distance_not_mite: F17,
    pub first_discrepancy: Option<String>,
}

/// Trace-norm threshold for the maximal-mixedness test.
pub const MIXEDNESS_TOLERANCE: f64 = 1e-12;

fn subsystems(n: usize) -> Vec<Support> {
    let mut out = Vec::new();
    for k in 1..=4.min(n) {
        stabtherm_core::subsets::for_each(n, k, |s| out.push(Support::new(s.iter().copied())));
    }
    for l in 1..=n {
        for start in 0..n {
            let w = Support::window(start, l, n);
            if w.len() > 4 && !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

/// Compares kernel MITE verdicts with reduced density matrices of the
/// graph state and with the adjacency criterion on random graphs.
pub fn oracle_equivalence(graphs: u64, max_n: usize, seed: u64) -> Result<OracleReport> {
    struct Row {
        subsystems: usize,
        mite: usize,
        rdm_bad: usize,
        graph_bad: usize,
        max_mite: f64,
        min_not: f64,
        first: Option<String>,
    }
    let rows: Vec<Result<Row>> = (0..graphs)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let n = rng.random_range(2..=max_n);
            let p = rng.random_range(0.15..0.85);
            let g = Graph::random(n, p, &mut rng);
            let t = g.to_stabilizer();
            let psi = oracle::statevector(&g)?;
            let mut row = Row { subsystems: 0, mite: 0, rdm_bad: 0, graph_bad: 0, max_mite: 0.0, min_not: f64::INFINITY, first: None };
            for a in subsystems(n) {
                let kernel = stabtherm_core::mite::is_mite_on(&t, &a).holds;
                let dist = distance_from_maximally_mixed(&psi, n, a.as_slice());
                let by_rdm = dist < MIXEDNESS_TOLERANCE;
                let by_graph = stabtherm_core::mite::graph_mite_criterion(&g, &a)?;
                row.subsystems += 1;
                if kernel {
                    row.mite += 1;
                    row.max_mite = row.max_mite.max(dist);
                } else {
                    row.min_not = row.min_not.min(dist);
                }
                if kernel != by_rdm {
                    row.rdm_bad += 1;
                }
                if kernel != by_graph {
                    row.graph_bad += 1;
                }
                if (kernel != by_rdm || kernel != by_graph) && row.first.is_none() {
                    row.first = Some(format!("graph {i} (N={n}) subsystem {a}: kernel {kernel}, rdm {by_rdm}, graph {by_graph}"));
                }
            }
            Ok(row)
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(OracleReport {
        seed,
        graphs: rows.len(),
        subsystems: rows.iter().map(|r| r.subsystems).sum(),
        mite_subsystems: rows.iter().map(|r| r.mite).sum(),
        rdm_discrepancies: rows.iter().map(|r| r.rdm_bad).sum(),
        graph_criterion_discrepancies: rows.iter().map(|r| r.graph_bad).sum(),
        max_distance_mite: F17(rows.iter().map(|r| r.max_mite).fold(0.0, f64::max)),
        min_distance_not_mite: F17(rows.iter().map(|r| r.min_not).fold(f64::INFINITY, f64::min)),
        first_discrepancy: rows.into_iter().find_map(|r| r.first),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SectorSummary {
    pub sector: String,
    pub dimension: usize,
    pub mean_r_tilde: F17,
    pub r_count: usize,
    pub degeneracy_count: usize,
    /// Smallest `|E|` in the sector.
    pub min_abs_energy: F17,
}

#[derive(Clone, Debug, Serialize)]
pub struct PooledSpectrum {
    pub n: usize,
    pub central_fraction: F17,
    pub sectors: Vec<SectorSummary>,
    pub total_dimension: usize,
    pub pooled_r_count: usize,
    pub mean_r_tilde: F17,
    pub degeneracy_count: usize,
    pub goe_reference: F17,
    pub poisson_reference: F17,
    pub closer_to_goe: bool,
    /// Some sector contains an eigenvalue within `1e-9` of zero.
    pub zero_energy_level: bool,
}

/// Pooled `r̃` over `sectors`, each analysed independently.
pub fn pooled_spectrum(
    h: &stabtherm_core::PauliHamiltonian,
    sectors: &[stabtherm_core::SymmetrySpec],
    central_fraction: f64,
) -> Result<(PooledSpectrum, Vec<(String, SpectrumReport)>)> {
    let n = h.n_qubits();
    let reports: Vec<Result<(String, SpectrumReport)>> = sectors
        .par_iter()
        .map(|s| {
            let basis = sector_basis(n, s)?;
            let ev = eigenvalues(h, &basis, DEFAULT_DIMENSION_LIMIT)?;
            Ok((s.to_string(), r_statistics(&ev, central_fraction)?))
        })
        .collect();
    let reports = reports.into_iter().collect::<Result<Vec<_>>>()?;
    let plain: Vec<SpectrumReport> = reports.iter().map(|(_, r)| r.clone()).collect();
    let mean = pooled_mean(&plain);
    let summaries: Vec<SectorSummary> = reports
        .iter()
        .map(|(name, r)| SectorSummary {
            sector: name.clone(),
            dimension: r.sector_dimension,
            mean_r_tilde: r.mean_r_tilde,
            r_count: r.r_values.len(),
            degeneracy_count: r.degeneracy_count,
            min_abs_energy: F17(r.eigenvalues.iter().map(|e| e.0.abs()).fold(f64::INFINITY, f64::min)),
        })
        .collect();
    let summary = PooledSpectrum {
        n,
        central_fraction: F17(central_fraction),
        total_dimension: summaries.iter().map(|s| s.dimension).sum(),
        pooled_r_count: summaries.iter().map(|s| s.r_count).sum(),
        degeneracy_count: summaries.iter().map(|s| s.degeneracy_count).sum(),
        zero_energy_level: summaries.iter().any(|s| s.min_abs_energy.0 < 1e-9),
        sectors: summaries,
        mean_r_tilde: F17(mean),
        goe_reference: F17(GOE_MEAN),
        poisson_reference: F17(poisson_mean()),
        closer_to_goe: (mean - GOE_MEAN).abs() < (mean - poisson_mean()).abs(),
    };
    Ok((summary, reports))
}

/// The unit-coupling first-family Hamiltonian pooled over `k = 0..=N/2` at
/// `P_X = P_Z = +1`, inversion resolved at `k = 0, N/2`.
pub fn nonintegrability(n: usize, central_fraction: f64) -> Result<(PooledSpectrum, Vec<(String, SpectrumReport)>)> {
    let h = models::g1_hamiltonian(n, &int(1))?;
    pooled_spectrum(&h, &pooling_sectors(n, Some(1), Some(1), true), central_fraction)
}

#[derive(Clone, Debug, Serialize)]
pub struct CalibrationReport {
    pub seed: u64,
    pub goe_matrices: usize,
    pub goe_size: usize,
    pub goe_mean_r_tilde: F17,
    pub poisson_sets: usize,
    pub poisson_levels: usize,
    pub poisson_mean_r_tilde: F17,
    pub central_fraction: F17,
}

pub fn calibration(
    matrices: usize,
    size: usize,
    sets: usize,
    levels: usize,
    central_fraction: f64,
    seed: u64,
) -> Result<CalibrationReport> {
    let pool = |reports: Vec<Result<SpectrumReport>>| -> Result<f64> { Ok(pooled_mean(&reports.into_iter().collect::<Result<Vec<_>>>()?)) };
    let goe = pool(
        (0..matrices as u64)
            .into_par_iter()
            .map(|i| r_statistics(&goe_eigenvalues(size, &mut trial_rng(seed, i)), central_fraction))
            .collect(),
    )?;
    let poisson = pool(
        (0..sets as u64)
            .into_par_iter()
            .map(|i| r_statistics(&poisson_levels(levels, &mut trial_rng(seed ^ 0x5eed, i)), central_fraction))
            .collect(),
    )?;
    if !goe.is_finite() || !poisson.is_finite() {
        return Err(Error::TooFewLevels(0));
    }
    Ok(CalibrationReport {
        seed,
        goe_matrices: matrices,
        goe_size: size,
        goe_mean_r_tilde: F17(goe),
        poisson_sets: sets,
        poisson_levels: levels,
        poisson_mean_r_tilde: F17(poisson),
        central_fraction: F17(central_fraction),
    })
}
