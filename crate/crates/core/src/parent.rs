//! Parent Hamiltonians of stabilizer states.
//!
//! A traceless `H = Σ h(P) P` annihilates `|ψ_G⟩` iff it can be written as
//! `Σ c(P,Q) (P − a_{P,Q} Q)` where `a_{P,Q}·P·Q ∈ G`. This module enumerates
//! the factorizations `g = a·P·Q` of low-weight group elements, assembles
//! Hamiltonians from them, decomposes a given Hamiltonian back into the
//! canonical coefficients, and audits the few-body no-go bound.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::{Coeff, GaussRational};
use crate::error::{Error, Result};
use crate::hamiltonian::PauliHamiltonian;
use crate::pauli::{Pauli, PauliString, Phase};
use crate::stabilizer::StabilizerTableau;
use crate::subsets;

/// `g = a·p·q` with `g ∈ G` (own sign), `p`, `q` nonidentity Pauli strings
/// with prefactor 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Factorization {
    pub g: PauliString,
    pub p: PauliString,
    pub q: PauliString,
    pub a: Phase,
}

impl Factorization {
    /// Builds the factorization of `g` through `p`, `q`, computing `a`.
    /// Returns `None` unless `p·q` has the letters of `g`.
    pub fn from_parts(g: PauliString, p: PauliString, q: PauliString) -> Option<Self> {
        let pq = p.mul_unchecked(&q);
        if !pq.same_letters(&g) || p.is_identity() || q.is_identity() {
            return None;
        }
        let a = Phase::from_exponent(u32::from(g.phase_exp()) + 4 - u32::from(pq.phase_exp()));
        Some(Factorization { g, p, q, a })
    }

    /// The reversed pair `(q, p)` with `a_{Q,P} = a_{P,Q}^{-1}`.
    pub fn swapped(&self) -> Factorization {
        Factorization::from_parts(self.g.clone(), self.q.clone(), self.p.clone()).expect("swap of a valid factorization")
    }

    /// `a·p·q`, which must equal `g` exactly.
    pub fn product(&self) -> PauliString {
        self.p.mul_unchecked(&self.q).scaled(self.a)
    }

    pub fn max_weight(&self) -> usize {
        self.p.weight().max(self.q.weight())
    }

    /// Cyclic relabeling of all three strings.
    pub fn translate(&self, shift: usize) -> Factorization {
        Factorization { g: self.g.translate(shift), p: self.p.translate(shift), q: self.q.translate(shift), a: self.a }
    }
}

/// The three nonidentity letters other than `s`.
fn others(s: Pauli) -> [Pauli; 2] {
    match s {
        Pauli::X => [Pauli::Y, Pauli::Z],
        Pauli::Y => [Pauli::X, Pauli::Z],
        Pauli::Z => [Pauli::X, Pauli::Y],
        Pauli::I => unreachable!("support sites carry a letter"),
    }
}

const LETTERS: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Every ordered split of `g` into `(P, Q)` with both weights at most `m`.
struct Splitter<'a> {
    g: &'a PauliString,
    m: usize,
    /// Support sites of `g` with their letters.
    on: Vec<(usize, Pauli)>,
    /// Sites outside the support of `g`.
    off: Vec<usize>,
    p: Vec<Pauli>,
    q: Vec<Pauli>,
}

impl<'a> Splitter<'a> {
    fn new(g: &'a PauliString, m: usize) -> Self {
        let n = g.n_qubits();
        Splitter {
            g,
            m,
            on: g.letters().collect(),
            off: (0..n).filter(|&s| g.pauli_at(s) == Pauli::I).collect(),
            p: alloc::vec![Pauli::I; n],
            q: alloc::vec![Pauli::I; n],
        }
    }

    fn run(mut self, out: &mut Vec<Factorization>) {
        self.recurse(0, 0, 0, out);
    }

    fn recurse(&mut self, idx: usize, wp: usize, wq: usize, out: &mut Vec<Factorization>) {
        if wp > self.m || wq > self.m {
            return;
        }
        if idx < self.on.len() {
            // On the support: (σ, I), (I, σ), or the two other letters.
            let (site, s) = self.on[idx];
            let [u, v] = others(s);
            for (lp, lq) in [(s, Pauli::I), (Pauli::I, s), (u, v), (v, u)] {
                self.p[site] = lp;
                self.q[site] = lq;
                self.recurse(idx + 1, wp + usize::from(lp != Pauli::I), wq + usize::from(lq != Pauli::I), out);
            }
            self.p[site] = Pauli::I;
            self.q[site] = Pauli::I;
            return;
        }
        // Shared sites outside supp(g) carry the same letter on P and Q.
        let room = self.m - wp.max(wq);
        for extra in 0..=room.min(self.off.len()) {
            subsets::for_each(self.off.len(), extra, |chosen| {
                let mut letters = alloc::vec![0usize; extra];
                loop {
                    let mut p = self.p.clone();
                    let mut q = self.q.clone();
                    for (slot, &c) in chosen.iter().enumerate() {
                        p[self.off[c]] = LETTERS[letters[slot]];
                        q[self.off[c]] = LETTERS[letters[slot]];
                    }
                    if let Some(f) = Factorization::from_parts(self.g.clone(), PauliString::from_paulis(&p), PauliString::from_paulis(&q)) {
                        out.push(f);
                    }
                    // Odometer over the 3^extra letter choices.
                    let mut k = 0;
                    while k < extra {
                        letters[k] += 1;
                        if letters[k] < 3 {
                            break;
                        }
                        letters[k] = 0;
                        k += 1;
                    }
                    if k == extra {
                        break;
                    }
                }
            });
        }
    }
}

/// All factorizations `a·P·Q = g` with `g ∈ G ∖ {I}` and
/// `1 ≤ |supp P|, |supp Q| ≤ m`, sorted by `(g, P, Q)`.
///
/// `(P, Q)` and `(Q, P)` are both listed.
pub fn enumerate_factorizations(t: &StabilizerTableau, m: usize) -> Vec<Factorization> {
    let n = t.n_qubits();
    assert!(m >= 1 && m <= n, "m must lie in 1..=N");
    let elements = t.elements_up_to_weight(2 * m);
    let mut out = Vec::new();
    for g in &elements {
        Splitter::new(g, m).run(&mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Factorizations with `a = ±1`, the only ones usable as standalone
/// real-coefficient bundles.
pub fn real_bundles(fs: &[Factorization]) -> Vec<Factorization> {
    fs.iter().filter(|f| f.a.is_real()).cloned().collect()
}

/// Groups factorizations into orbits of the cyclic shift. Orbits are keyed
/// and sorted by their lexicographically smallest `(P, Q)` member.
pub fn translation_orbits(fs: &[Factorization]) -> Vec<Vec<Factorization>> {
    let mut orbits: BTreeMap<(PauliString, PauliString), Vec<Factorization>> = BTreeMap::new();
    for f in fs {
        let n = f.p.n_qubits();
        let key = (0..n).map(|s| (f.p.translate(s), f.q.translate(s))).min().expect("n ≥ 1");
        orbits.entry(key).or_default().push(f.clone());
    }
    orbits.into_values().collect()
}

/// Index of the orbit containing the pair `(p, q)`.
pub fn find_orbit(orbits: &[Vec<Factorization>], p: &PauliString, q: &PauliString) -> Option<usize> {
    orbits.iter().position(|o| o.iter().any(|f| f.p == *p && f.q == *q))
}

/// `H = Σ c (P − a Q)` re-expanded in the Pauli basis.
///
/// Fails with [`Error::NonHermitianResult`] if some resulting `h(P)` is not
/// real.
pub fn assemble<'a>(n: usize, terms: impl IntoIterator<Item = (&'a Factorization, GaussRational)>) -> Result<PauliHamiltonian> {
    let mut acc: BTreeMap<PauliString, GaussRational> = BTreeMap::new();
    for (f, c) in terms {
        if f.p.n_qubits() != n {
            return Err(Error::DimensionMismatch { left: n, right: f.p.n_qubits() });
        }
        *acc.entry(f.p.clone()).or_insert_with(GaussRational::zero) += &c;
        let aq = -c.times_phase(f.a);
        *acc.entry(f.q.clone()).or_insert_with(GaussRational::zero) += &aq;
    }
    let bad: Vec<_> = acc.iter().filter(|(_, v)| !v.is_real()).map(|(p, _)| p.to_string()).collect();
    if !bad.is_empty() {
        return Err(Error::NonHermitianResult(bad));
    }
    let mut h = PauliHamiltonian::new(n);
    for (p, v) in acc {
        if !v.re.is_zero() {
            h.add_term(&p, v.re)?;
        }
    }
    Ok(h)
}

/// Assembles with one real coefficient per orbit (`coeffs[k]` for
/// `orbits[k]`).
pub fn assemble_orbits(n: usize, orbits: &[Vec<Factorization>], coeffs: &[Coeff]) -> Result<PauliHamiltonian> {
    if orbits.len() != coeffs.len() {
        return Err(Error::DimensionMismatch { left: orbits.len(), right: coeffs.len() });
    }
    assemble(n, orbits.iter().zip(coeffs).flat_map(|(o, c)| o.iter().map(move |f| (f, GaussRational::real(c.clone())))))
}

/// `⟨ψ_G|H|ψ_G⟩` and `⟨ψ_G|H²|ψ_G⟩`, exactly.
///
/// Cross terms `⟨PQ⟩` vanish unless `P` and `Q` lie in the same coset of G,
/// so the double sum runs within classes only.
pub fn energy_moments(h: &PauliHamiltonian, t: &StabilizerTableau) -> Result<(GaussRational, GaussRational)> {
    if h.n_qubits() != t.n_qubits() {
        return Err(Error::DimensionMismatch { left: h.n_qubits(), right: t.n_qubits() });
    }
    let mut mean = GaussRational::zero();
    let mut classes: BTreeMap<PauliString, Vec<(&PauliString, &Coeff)>> = BTreeMap::new();
    for (p, c) in h.terms() {
        if let Some(ph) = t.expectation_phase(p) {
            mean += &GaussRational::from_phase(ph).scale(c);
        }
        classes.entry(t.coset_representative(p)).or_default().push((p, c));
    }
    let mut square = GaussRational::zero();
    for members in classes.values() {
        for (p, cp) in members {
            for (q, cq) in members {
                let ph = t.expectation_phase(&p.mul_unchecked(q)).expect("same coset");
                square += &GaussRational::from_phase(ph).scale(&(*cp * *cq));
            }
        }
    }
    Ok((mean, square))
}

/// True iff `H|ψ_G⟩ = 0`, decided by `⟨H⟩ = ⟨H²⟩ = 0` in exact arithmetic.
pub fn verify_zero_eigenstate(h: &PauliHamiltonian, t: &StabilizerTableau) -> Result<bool> {
    let (mean, square) = energy_moments(h, t)?;
    Ok(mean.is_zero() && square.is_zero())
}

/// One `∼`-class of Pauli strings meeting the support of `h`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassEntry {
    /// Reference member `P₀` (smallest member in the support of `h`).
    pub reference: PauliString,
    /// `(Q, h(Q), a_{Q,P₀})` for every `Q` in the class with `h(Q) ≠ 0`.
    pub members: Vec<(PauliString, Coeff, Phase)>,
    /// Number of nonidentity strings in the class: `2^N`, or `2^N − 1`
    /// when the class is G itself.
    pub n_p: BigInt,
    /// `Σ_Q h(Q) a_{Q,P₀}`, zero for an annihilating `h`.
    pub balance: GaussRational,
}

/// Canonical coefficients `c(P,Q) = −(1/n_P) a_{Q,P} h(Q)` for a Hamiltonian
/// annihilating `|ψ_G⟩`.
///
/// Only pairs with both strings in the support of `h` are stored. Pairs with
/// `Q ∉ supp(h)` have `c = 0`; pairs with `P ∉ supp(h)` contribute to
/// `h(Q)` uniformly and are summed analytically in [`Self::reconstruct`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionCertificate {
    pub n: usize,
    /// Keyed by the coset representative of the class.
    pub class_table: BTreeMap<PauliString, ClassEntry>,
    pub c_values: BTreeMap<(PauliString, PauliString), GaussRational>,
}

/// `a_{Q,P}`: the phase with `a·Q·P ∈ G`, if `Q ∼ P`.
fn relation_phase(t: &StabilizerTableau, q: &PauliString, p: &PauliString) -> Option<Phase> {
    t.expectation_phase(&q.mul_unchecked(p)).map(Phase::inverse)
}

/// Partitions `supp(h)` into classes, checks the per-class balance and
/// emits the canonical coefficients.
///
/// Fails with [`Error::NotAnnihilating`] on the first class (in canonical
/// order) whose balance is nonzero.
pub fn decompose(h: &PauliHamiltonian, t: &StabilizerTableau) -> Result<DecompositionCertificate> {
    let n = t.n_qubits();
    if h.n_qubits() != n {
        return Err(Error::DimensionMismatch { left: h.n_qubits(), right: n });
    }
    let mut grouped: BTreeMap<PauliString, Vec<(PauliString, Coeff)>> = BTreeMap::new();
    for (p, c) in h.terms() {
        grouped.entry(t.coset_representative(p)).or_default().push((p.clone(), c.clone()));
    }
    let full = BigInt::one() << n;
    let mut class_table = BTreeMap::new();
    let mut c_values = BTreeMap::new();
    for (rep, members) in grouped {
        let reference = members[0].0.clone();
        let mut balance = GaussRational::zero();
        let mut rows = Vec::with_capacity(members.len());
        for (q, hq) in &members {
            let a = relation_phase(t, q, &reference).expect("members of one class are related");
            balance += &GaussRational::from_phase(a).scale(hq);
            rows.push((q.clone(), hq.clone(), a));
        }
        if !balance.is_zero() {
            return Err(Error::NotAnnihilating { representative: rep.to_string() });
        }
        let n_p = if rep.is_identity() { &full - 1 } else { full.clone() };
        let inv_n = Coeff::new(BigInt::one(), n_p.clone());
        for (p, _) in &members {
            for (q, hq) in &members {
                let a_qp = relation_phase(t, q, p).expect("same class");
                let c = GaussRational::from_phase(a_qp).scale(&(-(hq * &inv_n)));
                c_values.insert((p.clone(), q.clone()), c);
            }
        }
        class_table.insert(rep, ClassEntry { reference, members: rows, n_p, balance });
    }
    Ok(DecompositionCertificate { n, class_table, c_values })
}

impl DecompositionCertificate {
    /// Re-expands `Σ_{P,Q} c(P,Q)(P − a_{P,Q} Q)` into `h′`.
    ///
    /// For each `R` in a class, `h′(R) = Σ_Q c(R,Q) − Σ_P c(P,R) a_{P,R}`.
    /// The first sum runs over the stored pairs. Every term of the second
    /// sum equals `(1/n_P) a_{R,P} a_{P,R} h(R)`; it is evaluated from each
    /// stored `P`, checked to be the same for all of them, and multiplied by
    /// `n_P`.
    pub fn reconstruct(&self, t: &StabilizerTableau) -> Result<PauliHamiltonian> {
        let mut h = PauliHamiltonian::new(self.n);
        for entry in self.class_table.values() {
            for (r, _, _) in &entry.members {
                let mut explicit = GaussRational::zero();
                for (q, _, _) in &entry.members {
                    explicit += &self.c_values[&(r.clone(), q.clone())];
                }
                let mut per_p: Option<GaussRational> = None;
                for (p, _, _) in &entry.members {
                    let a_pr = relation_phase(t, p, r).ok_or_else(|| Error::InvalidArgument("class mismatch".to_string()))?;
                    let term = -self.c_values[&(p.clone(), r.clone())].times_phase(a_pr);
                    match &per_p {
                        None => per_p = Some(term),
                        Some(prev) if *prev == term => {}
                        Some(_) => return Err(Error::InvalidArgument(alloc::format!("phase reciprocity fails at {r}"))),
                    }
                }
                let remainder = per_p.expect("class is nonempty").scale(&Coeff::from_integer(entry.n_p.clone()));
                let total = explicit + remainder;
                if !total.is_real() {
                    return Err(Error::NonHermitianResult(alloc::vec![r.to_string()]));
                }
                if !total.re.is_zero() {
                    h.add_term(r, total.re)?;
                }
            }
        }
        Ok(h)
    }
}

/// Outcome of the few-body no-go audit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NoGoReport {
    pub n: usize,
    pub m: usize,
    /// `δ(G)` if it is at most `2m + 1`; `None` means `δ(G) > 2m + 1`.
    pub delta: Option<usize>,
    pub factorization_count: usize,
    /// If some nonzero `m`-body Hamiltonian annihilates the state, the
    /// largest `k` with `k`-body MITE still allowed: `min(δ − 1, 2m − 1)`.
    pub mite_ceiling: Option<usize>,
    /// A factorization of the heaviest `g` found.
    pub witness: Option<Factorization>,
    /// `δ(G) > 2m` implies no factorizations; false would be a bug.
    pub consistent: bool,
}

pub fn no_go_audit(t: &StabilizerTableau, m: usize) -> NoGoReport {
    let n = t.n_qubits();
    let delta = t.min_weight(2 * m + 1);
    let fs = enumerate_factorizations(t, m);
    let witness = fs.iter().max_by(|x, y| x.g.weight().cmp(&y.g.weight()).then_with(|| y.cmp(x))).cloned();
    let exceeds = delta.is_none_or(|d| d > 2 * m);
    let consistent = !exceeds || fs.is_empty();
    let mite_ceiling = (!fs.is_empty()).then(|| {
        let d = delta.expect("factorizations imply δ ≤ 2m");
        (d - 1).min(2 * m - 1)
    });
    NoGoReport { n, m, delta, factorization_count: fs.len(), mite_ceiling, witness, consistent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;
    use crate::graph::Graph;

    fn p(s: &str, n: usize) -> PauliString {
        PauliString::parse(s, n).unwrap()
    }

    #[test]
    fn lowering_operator_on_zero() {
        let t = StabilizerTableau::all_zeros(1);
        let fs = enumerate_factorizations(&t, 1);
        let f = Factorization { g: p("Z1", 1), p: p("X1", 1), q: p("Y1", 1), a: Phase::MINUS_I };
        assert!(fs.contains(&f));
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn g1_contains_the_model_bundle() {
        let t = Graph::g1(12).unwrap().to_stabilizer();
        let fs = enumerate_factorizations(&t, 2);
        let f = Factorization { g: p("X1 X2 Z6 Z9", 12), p: p("Z6 Z9", 12), q: p("X1 X2", 12), a: Phase::ONE };
        assert!(fs.contains(&f));
        for f in &fs {
            assert_eq!(f.product(), f.g);
            assert!(t.contains(&f.g));
            assert!(f.max_weight() <= 2);
            assert!(f.g.weight() <= f.p.weight() + f.q.weight());
            assert!(fs.contains(&f.swapped()));
            assert_eq!(f.a * f.swapped().a, Phase::ONE);
        }
    }

    #[test]
    fn g2_contains_the_field_bundle() {
        let t = Graph::g2(9).unwrap().to_stabilizer();
        let fs = enumerate_factorizations(&t, 2);
        for i in 0..9 {
            let f = Factorization {
                g: Graph::g2(9).unwrap().stabilizer_generator(i),
                p: p("Z5 Z6", 9).translate(i),
                q: p("X1", 9).translate(i),
                a: Phase::ONE,
            };
            assert!(fs.contains(&f), "{i}");
        }
    }

    #[test]
    fn bell_decomposition() {
        let t = StabilizerTableau::from_generators(&[p("X1 X2", 2), p("Z1 Z2", 2)]).unwrap();
        let h = PauliHamiltonian::from_terms(2, [(&p("Z1 Z2", 2), int(1)), (&p("X1 X2", 2), int(-1))]).unwrap();
        assert!(verify_zero_eigenstate(&h, &t).unwrap());
        let cert = decompose(&h, &t).unwrap();
        assert_eq!(cert.class_table.len(), 1);
        let entry = cert.class_table.values().next().unwrap();
        assert_eq!(entry.n_p, BigInt::from(3));
        assert_eq!(cert.reconstruct(&t).unwrap(), h);

        let bad = PauliHamiltonian::from_terms(2, [(&p("Z1 Z2", 2), int(1)), (&p("X1 X2", 2), int(1))]).unwrap();
        assert!(matches!(decompose(&bad, &t), Err(Error::NotAnnihilating { .. })));
        assert!(!verify_zero_eigenstate(&bad, &t).unwrap());
    }

    #[test]
    fn moments_detect_nonzero_variance() {
        let t = StabilizerTableau::all_zeros(1);
        let h = PauliHamiltonian::from_terms(1, [(&p("X1", 1), int(1)), (&p("Y1", 1), int(1))]).unwrap();
        let (mean, sq) = energy_moments(&h, &t).unwrap();
        assert!(mean.is_zero());
        assert_eq!(sq, GaussRational::real(int(2)));
        let zs: Vec<_> = (0..3).map(|i| PauliString::single(3, i, Pauli::Z)).collect();
        let z = PauliHamiltonian::from_terms(3, zs.iter().map(|s| (s, int(1)))).unwrap();
        let (mean, _) = energy_moments(&z, &StabilizerTableau::all_zeros(3)).unwrap();
        assert_eq!(mean, GaussRational::real(int(3)));
    }

    #[test]
    fn imaginary_bundle_is_rejected() {
        let f = Factorization { g: p("Z1", 1), p: p("X1", 1), q: p("Y1", 1), a: Phase::MINUS_I };
        assert!(matches!(assemble(1, [(&f, GaussRational::real(int(1)))]), Err(Error::NonHermitianResult(_))));
    }

    #[test]
    fn no_go_examples() {
        let r = no_go_audit(&Graph::g1(12).unwrap().to_stabilizer(), 2);
        assert_eq!(r.delta, Some(4));
        assert!(r.factorization_count > 0);
        assert_eq!(r.mite_ceiling, Some(3));
        assert!(r.consistent);

        let prod = no_go_audit(&StabilizerTableau::all_zeros(4), 1);
        assert_eq!(prod.delta, Some(1));
        assert!(prod.factorization_count > 0);
    }
}
