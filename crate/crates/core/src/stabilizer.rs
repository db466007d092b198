//! Maximal stabilizer groups.
//!
//! A [`StabilizerTableau`] holds `N` commuting, independent, Hermitian
//! generators in reduced row echelon form over GF(2) on the `(x | z)`
//! matrix (all x columns first, then all z columns). Because the form is
//! fully reduced, membership of a Pauli string is read off its bits at the
//! pivot columns, and the residual after reduction is a canonical coset
//! representative.

use alloc::vec::Vec;

use rand::Rng;

use crate::bits::{self, BitVec};
use crate::error::{Error, Result};
use crate::pauli::{PauliString, Phase, Support};
use crate::subsets;

/// Certificate that `∏ generators^coefficients = sign · p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElementWitness {
    pub coefficients: BitVec,
    pub sign: i8,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StabilizerTableau {
    n: usize,
    generators: Vec<PauliString>,
    /// Pivot column of each generator in the `(x | z)` layout.
    pivots: Vec<usize>,
}

#[inline]
fn col_bit(p: &PauliString, col: usize, n: usize) -> bool {
    if col < n {
        p.x_bits().get(col)
    } else {
        p.z_bits().get(col - n)
    }
}

fn first_col(p: &PauliString) -> Option<usize> {
    let n = p.n_qubits();
    p.x_bits().first_one().or_else(|| p.z_bits().first_one().map(|c| c + n))
}

/// Incremental reduced-echelon basis of commuting Hermitian Pauli strings.
#[derive(Default)]
struct Echelon {
    rows: Vec<PauliString>,
    pivots: Vec<usize>,
}

enum Insert {
    Added,
    /// The row reduced to `±I`; carries the residual prefactor.
    Reduced(Phase),
}

impl Echelon {
    fn reduce(&self, p: &PauliString) -> PauliString {
        let n = p.n_qubits();
        let mut r = p.clone();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if col_bit(&r, c, n) {
                r = r.mul_unchecked(row);
            }
        }
        r
    }

    fn insert(&mut self, p: &PauliString) -> Insert {
        let r = self.reduce(p);
        let Some(c) = first_col(&r) else {
            return Insert::Reduced(r.prefactor());
        };
        let n = p.n_qubits();
        for row in self.rows.iter_mut() {
            if col_bit(row, c, n) {
                *row = row.mul_unchecked(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, r);
        Insert::Added
    }
}

/// Canonical reduced-echelon generators for the group generated by
/// commuting Hermitian `elements`; dependent entries are dropped.
fn canonical_span(elements: &[PauliString]) -> Vec<PauliString> {
    let mut e = Echelon::default();
    for p in elements {
        e.insert(p);
    }
    e.rows
}

impl StabilizerTableau {
    /// Validates `gens` as a maximal stabilizer group and brings it to
    /// canonical form.
    pub fn from_generators(gens: &[PauliString]) -> Result<Self> {
        let n = gens.first().map(PauliString::n_qubits).unwrap_or(0);
        if n == 0 {
            return Err(Error::GeneratorCount { expected: 1, found: 0 });
        }
        for g in gens {
            if g.n_qubits() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.n_qubits() });
            }
        }
        for (i, g) in gens.iter().enumerate() {
            if !g.is_hermitian() {
                return Err(Error::NonHermitianGenerator(i));
            }
        }
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !gens[i].commutes_unchecked(&gens[j]) {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }
        let mut e = Echelon::default();
        for (i, g) in gens.iter().enumerate() {
            if let Insert::Reduced(phase) = e.insert(g) {
                return Err(if phase == Phase::MINUS_ONE { Error::MinusIdentity } else { Error::Dependent(i) });
            }
        }
        if gens.len() != n {
            return Err(Error::GeneratorCount { expected: n, found: gens.len() });
        }
        Ok(StabilizerTableau { n, generators: e.rows, pivots: e.pivots })
    }

    /// The computational-basis state `|0…0⟩`, stabilized by every `Z_i`.
    pub fn all_zeros(n: usize) -> Self {
        let gens: Vec<_> = (0..n).map(|i| PauliString::single(n, i, crate::pauli::Pauli::Z)).collect();
        Self::from_generators(&gens).expect("Z_i generate a maximal group")
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// Canonical generators.
    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    /// Bits of `p` at the pivot columns: the unique combination of
    /// generators whose letters could equal `p`'s.
    fn coefficients_for(&self, p: &PauliString) -> BitVec {
        BitVec::from_indices(self.n, self.pivots.iter().enumerate().filter(|(_, &c)| col_bit(p, c, self.n)).map(|(k, _)| k))
    }

    /// Product of generators selected by `coefficients`.
    pub fn product(&self, coefficients: &BitVec) -> PauliString {
        coefficients.ones().fold(PauliString::identity(self.n), |acc, k| acc.mul_unchecked(&self.generators[k]))
    }

    /// If `±p ∈ G`, the sign `s` with `s·p ∈ G` and its generator combination.
    pub fn membership(&self, p: &PauliString) -> Result<Option<GroupElementWitness>> {
        if p.n_qubits() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: p.n_qubits() });
        }
        let Some(sigma) = p.sign() else {
            return Ok(None);
        };
        let coefficients = self.coefficients_for(p);
        let prod = self.product(&coefficients);
        if !prod.same_letters(p) {
            return Ok(None);
        }
        let tau = prod.sign().expect("products of commuting Hermitian generators are Hermitian");
        Ok(Some(GroupElementWitness { coefficients, sign: tau * sigma }))
    }

    /// `⟨ψ_G| p |ψ_G⟩` for any phase of `p`: `Some(λ)` with `⟨p⟩ = λ`, or
    /// `None` when the expectation vanishes.
    pub fn expectation_phase(&self, p: &PauliString) -> Option<Phase> {
        debug_assert_eq!(p.n_qubits(), self.n);
        let prod = self.product(&self.coefficients_for(p));
        if !prod.same_letters(p) {
            return None;
        }
        // prod = τ·P0 ∈ G gives ⟨P0⟩ = τ, and p = φ·P0.
        Some(prod.prefactor() * p.prefactor())
    }

    /// `⟨ψ_G| p |ψ_G⟩ ∈ {+1, -1, 0}` for Hermitian `p`.
    pub fn expectation(&self, p: &PauliString) -> i8 {
        match self.expectation_phase(p) {
            Some(ph) => ph.sign().unwrap_or(0),
            None => 0,
        }
    }

    /// True iff `p ∈ G` with its own sign.
    pub fn contains(&self, p: &PauliString) -> bool {
        p.n_qubits() == self.n && self.expectation_phase(p) == Some(Phase::ONE)
    }

    /// Canonical representative of the coset `P·G` (letters only): the
    /// residual of `p` after clearing every pivot column.
    pub fn coset_representative(&self, p: &PauliString) -> PauliString {
        let mut r = p.unsigned();
        for (row, &c) in self.generators.iter().zip(&self.pivots) {
            if col_bit(&r, c, self.n) {
                r = r.mul_unchecked(row);
            }
        }
        r.unsigned()
    }

    /// Generators (canonical form) of `{g ∈ G : supp(g) ⊆ a}`.
    pub fn subgroup_supported_in(&self, a: &Support) -> Vec<PauliString> {
        let outside = a.complement(self.n).to_bitvec(self.n);
        let rows: Vec<BitVec> = self.generators.iter().map(|g| g.x_bits().and(&outside).concat(&g.z_bits().and(&outside))).collect();
        let kernel = bits::left_kernel(&rows);
        if kernel.is_empty() {
            return Vec::new();
        }
        let elements: Vec<PauliString> = kernel.iter().map(|c| self.product(c)).collect();
        canonical_span(&elements)
    }

    /// Faster emptiness test for [`Self::subgroup_supported_in`].
    pub fn has_element_supported_in(&self, a: &Support) -> bool {
        let outside = a.complement(self.n).to_bitvec(self.n);
        let rows: Vec<BitVec> = self.generators.iter().map(|g| g.x_bits().and(&outside).concat(&g.z_bits().and(&outside))).collect();
        bits::rank(&rows) < self.n
    }

    /// First size-`k` subset (colex order) carrying a nonidentity group
    /// element, with the canonical generators of that subgroup.
    pub fn first_supported_subset(&self, k: usize) -> Option<(Support, Vec<PauliString>)> {
        subsets::find_first(self.n, k, |s| {
            let a = Support::new(s.iter().copied());
            if self.has_element_supported_in(&a) {
                let sub = self.subgroup_supported_in(&a);
                Some((a, sub))
            } else {
                None
            }
        })
    }

    /// `δ(G)` if it is at most `bound`, else `None`.
    ///
    /// Scans all supports of size `1..=bound`; the cost is
    /// `O(Σ_{j ≤ bound} C(N, j) · N³/64)` word operations.
    pub fn min_weight(&self, bound: usize) -> Option<usize> {
        (1..=bound.min(self.n)).find(|&j| self.first_supported_subset(j).is_some())
    }

    /// `δ(G)`, the minimum weight of a nonidentity element.
    pub fn distance(&self) -> usize {
        self.min_weight(self.n).expect("a maximal group has elements supported on all sites")
    }

    /// Every element `g ∈ G` with `1 ≤ |supp(g)| ≤ max_weight`, sorted and
    /// deduplicated.
    pub fn elements_up_to_weight(&self, max_weight: usize) -> Vec<PauliString> {
        let w = max_weight.min(self.n);
        if w == 0 {
            return Vec::new();
        }
        let mut found: Vec<PauliString> = subsets::map_all(self.n, w, |s| {
            let a = Support::new(s.iter().copied());
            if !self.has_element_supported_in(&a) {
                return Vec::new();
            }
            let gens = self.subgroup_supported_in(&a);
            span_elements(&gens)
        })
        .into_iter()
        .flatten()
        .filter(|g| !g.is_identity())
        .collect();
        found.sort();
        found.dedup();
        found
    }

    /// All `2^N` group elements. Intended for small N.
    pub fn elements(&self) -> Vec<PauliString> {
        span_elements(&self.generators)
    }

    /// True iff the cyclic shift `j → j+1` maps G onto itself.
    pub fn is_translation_invariant(&self) -> bool {
        self.generators.iter().all(|g| self.contains(&g.translate(1)))
    }

    /// A random maximal stabilizer group.
    ///
    /// Generators are drawn one at a time, uniformly from the symplectic
    /// complement of those already chosen (rejecting the current span), with
    /// random signs.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        assert!(n > 0);
        let mut chosen: Vec<PauliString> = Vec::with_capacity(n);
        let mut span_rows: Vec<BitVec> = Vec::with_capacity(n);
        while chosen.len() < n {
            // v = (vx | vz) commutes with g iff (gz | gx) · v = 0.
            let basis: Vec<BitVec> = if chosen.is_empty() {
                (0..2 * n).map(|i| BitVec::from_indices(2 * n, [i])).collect()
            } else {
                let constraints: Vec<BitVec> = chosen.iter().map(|g| g.z_bits().concat(g.x_bits())).collect();
                let transposed: Vec<BitVec> = (0..2 * n)
                    .map(|col| {
                        BitVec::from_indices(constraints.len(), constraints.iter().enumerate().filter(|(_, r)| r.get(col)).map(|(i, _)| i))
                    })
                    .collect();
                bits::left_kernel(&transposed)
            };
            let mut v = BitVec::zeros(2 * n);
            for b in &basis {
                if rng.random::<bool>() {
                    v.xor_assign(b);
                }
            }
            if v.is_zero() {
                continue;
            }
            span_rows.push(v.clone());
            if bits::rank(&span_rows) < span_rows.len() {
                span_rows.pop();
                continue;
            }
            let p = PauliString::hermitian_from_bits(v.slice(0, n), v.slice(n, n));
            chosen.push(if rng.random::<bool>() { p } else { p.negated() });
        }
        Self::from_generators(&chosen).expect("construction yields a valid maximal group")
    }
}

/// All products of subsets of `gens` (which must commute).
pub fn span_elements(gens: &[PauliString]) -> Vec<PauliString> {
    let Some(n) = gens.first().map(PauliString::n_qubits) else {
        return Vec::new();
    };
    let mut out = alloc::vec![PauliString::identity(n)];
    for g in gens {
        let extra: Vec<PauliString> = out.iter().map(|e| e.mul_unchecked(g)).collect();
        out.extend(extra);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::Pauli;
    use alloc::vec;
    use rand::SeedableRng;

    fn p(s: &str, n: usize) -> PauliString {
        PauliString::parse(s, n).unwrap()
    }

    fn bell() -> StabilizerTableau {
        StabilizerTableau::from_generators(&[p("X1 X2", 2), p("Z1 Z2", 2)]).unwrap()
    }

    fn g1_12() -> StabilizerTableau {
        let n = 12;
        let gens: Vec<_> = (0..n)
            .map(|i| {
                PauliString::from_sparse(n, [(i, Pauli::X), ((i + 5) % n, Pauli::Z), ((i + 6) % n, Pauli::Z), ((i + 7) % n, Pauli::Z)])
            })
            .collect();
        StabilizerTableau::from_generators(&gens).unwrap()
    }

    #[test]
    fn bell_pair_is_valid() {
        let t = bell();
        assert_eq!(t.n_qubits(), 2);
        assert_eq!(t.generators().len(), 2);
    }

    #[test]
    fn opposite_signs_give_minus_identity() {
        let err = StabilizerTableau::from_generators(&[p("X1 X2", 2), p("-X1 X2", 2)]).unwrap_err();
        assert_eq!(err, Error::MinusIdentity);
    }

    #[test]
    fn rejections() {
        assert_eq!(StabilizerTableau::from_generators(&[p("X1", 2), p("Z1", 2)]).unwrap_err(), Error::NonCommuting(0, 1));
        assert_eq!(StabilizerTableau::from_generators(&[p("X1", 2), p("X1", 2)]).unwrap_err(), Error::Dependent(1));
        assert_eq!(StabilizerTableau::from_generators(&[p("+iX1", 2), p("Z2", 2)]).unwrap_err(), Error::NonHermitianGenerator(0));
        assert_eq!(StabilizerTableau::from_generators(&[p("X1", 2)]).unwrap_err(), Error::GeneratorCount { expected: 2, found: 1 });
    }

    #[test]
    fn eap_generators_are_valid() {
        let n = 8;
        let mut gens = Vec::new();
        for i in 0..4 {
            gens.push(PauliString::from_sparse(n, [(i, Pauli::X), (i + 4, Pauli::X)]));
            gens.push(PauliString::from_sparse(n, [(i, Pauli::Z), (i + 4, Pauli::Z)]));
        }
        let t = StabilizerTableau::from_generators(&gens).unwrap();
        assert_eq!(t.min_weight(2), Some(2));
    }

    #[test]
    fn bell_membership() {
        let t = bell();
        let w = t.membership(&p("Y1 Y2", 2)).unwrap().unwrap();
        assert_eq!(w.sign, -1);
        assert_eq!(t.product(&w.coefficients), p("-Y1 Y2", 2));
        assert!(t.membership(&p("X1", 2)).unwrap().is_none());
        assert!(t.membership(&p("X1", 3)).is_err());
    }

    #[test]
    fn g1_membership_and_expectation() {
        let t = g1_12();
        let w = t.membership(&p("X1 X2 Z6 Z9", 12)).unwrap().unwrap();
        assert_eq!(w.sign, 1);
        assert_eq!(t.expectation(&p("X1 Z6 Z7 Z8", 12)), 1);
        assert_eq!(t.expectation(&PauliString::identity(12)), 1);
        assert_eq!(t.expectation(&p("Z3", 12)), 0);
    }

    #[test]
    fn subgroup_examples() {
        let t = g1_12();
        assert!(t.subgroup_supported_in(&Support::from_one_based([1, 2, 3])).is_empty());
        let sub = t.subgroup_supported_in(&Support::from_one_based([1, 6, 7, 8]));
        assert_eq!(sub, vec![p("X1 Z6 Z7 Z8", 12)]);
        assert!(bell().subgroup_supported_in(&Support::from_one_based([1])).is_empty());
        assert_eq!(t.subgroup_supported_in(&Support::full(12)).len(), 12);
        assert!(t.subgroup_supported_in(&Support::empty()).is_empty());
    }

    #[test]
    fn g1_distance_is_four() {
        assert_eq!(g1_12().min_weight(4), Some(4));
        assert_eq!(g1_12().min_weight(3), None);
    }

    #[test]
    fn coset_representatives_agree_within_cosets() {
        let t = g1_12();
        let a = p("Z3 X4", 12);
        let g = p("X1 Z6 Z7 Z8", 12);
        assert_eq!(t.coset_representative(&a), t.coset_representative(&(&a * &g)));
        assert!(t.coset_representative(&g).is_identity());
    }

    #[test]
    fn random_groups_are_valid_and_seeded() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a = StabilizerTableau::random(9, &mut rng);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let b = StabilizerTableau::random(9, &mut rng);
        assert_eq!(a, b);
        assert_eq!(a.elements().len(), 512);
    }

    #[test]
    fn translation_invariance() {
        assert!(g1_12().is_translation_invariant());
        assert!(!StabilizerTableau::from_generators(&[p("Z1", 2), p("X2", 2)]).unwrap().is_translation_invariant());
    }

    #[test]
    fn elements_up_to_weight_match_enumeration() {
        let t = g1_12();
        let mut brute: Vec<_> = t.elements().into_iter().filter(|g| (1..=4).contains(&g.weight())).collect();
        brute.sort();
        assert_eq!(t.elements_up_to_weight(4), brute);
    }
}
