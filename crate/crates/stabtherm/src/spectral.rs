//! Symmetry-resolved exact diagonalization and level-spacing statistics.
//!
//! Basis states are computational basis states `|s⟩` with qubit `j` stored
//! in bit `j` of `s`, matching [`stabtherm_core::oracle`]. Sector basis
//! vectors are normalized group averages `Σ_γ χ(γ)* U_γ |s⟩` over the group
//! generated by translation `T`, site inversion `P` and the global flip
//! `P_X`; `P_Z` is diagonal and acts as a parity filter.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Matrix3, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use stabtherm_core::symmetry::{broken_symmetries, SymmetrySpec};
use stabtherm_core::PauliHamiltonian;

use crate::error::{Error, Result};
use crate::json::F17;

/// Largest N for which sector bases are built.
pub const BASIS_QUBIT_LIMIT: usize = 24;
/// Default cap on sector dimension for dense diagonalization.
pub const DEFAULT_DIMENSION_LIMIT: usize = 20_000;
/// Gaps below this fraction of the spectral width count as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

const ABSENT: u32 = u32::MAX;

/// Orthonormal basis of one joint symmetry sector.
#[derive(Clone, Debug)]
pub struct SectorBasis {
    n: usize,
    spec: SymmetrySpec,
    vectors: Vec<Vec<(u32, Complex64)>>,
    /// `state → (vector index, amplitude)`; `ABSENT` if outside the sector.
    lookup: Vec<(u32, Complex64)>,
}

impl SectorBasis {
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> SymmetrySpec {
        self.spec
    }

    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// Sparse `(state, amplitude)` list of basis vector `i`.
    pub fn vector(&self, i: usize) -> &[(u32, Complex64)] {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[Vec<(u32, Complex64)>] {
        &self.vectors
    }

    /// `⟨v_i | s⟩*`-free lookup: the basis vector containing `s` and the
    /// amplitude of `s` in it.
    pub fn locate(&self, s: u32) -> Option<(usize, Complex64)> {
        let (i, a) = self.lookup[s as usize];
        (i != ABSENT).then_some((i as usize, a))
    }
}

struct GroupElement {
    shift: usize,
    invert: bool,
    flip: bool,
    /// `χ(γ)*`.
    weight: Complex64,
}

fn rotate(s: u32, shift: usize, n: usize) -> u32 {
    if shift == 0 {
        return s;
    }
    let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    ((s << shift) | (s >> (n - shift))) & mask
}

fn reverse(s: u32, n: usize) -> u32 {
    s.reverse_bits() >> (32 - n)
}

impl GroupElement {
    fn apply(&self, s: u32, n: usize) -> u32 {
        let mut t = s;
        if self.flip {
            t ^= (1u32 << n) - 1;
        }
        if self.invert {
            t = reverse(t, n);
        }
        rotate(t, self.shift, n)
    }
}

fn validate(n: usize, s: &SymmetrySpec) -> Result<()> {
    if n == 0 || n > BASIS_QUBIT_LIMIT {
        return Err(Error::IncompatibleSpec(format!("N = {n} outside 1..={BASIS_QUBIT_LIMIT}")));
    }
    for (name, v) in [("p", s.inversion), ("px", s.spin_flip_x), ("pz", s.spin_flip_z)] {
        if let Some(v) = v {
            if v != 1 && v != -1 {
                return Err(Error::IncompatibleSpec(format!("{name} must be ±1")));
            }
        }
    }
    if let Some(k) = s.momentum {
        if k >= n {
            return Err(Error::IncompatibleSpec(format!("momentum index {k} must be below N = {n}")));
        }
        if s.inversion.is_some() && k != 0 && 2 * k != n {
            return Err(Error::IncompatibleSpec(format!("inversion maps momentum {k} to {}; resolve it only at k = 0 or k = N/2", n - k)));
        }
    }
    if n % 2 == 1 && s.spin_flip_x.is_some() && s.spin_flip_z.is_some() {
        return Err(Error::IncompatibleSpec("P_X and P_Z anticommute for odd N".to_string()));
    }
    Ok(())
}

/// The orthonormal orbit-sum basis of the joint eigenspace selected by `s`.
pub fn sector_basis(n: usize, s: &SymmetrySpec) -> Result<SectorBasis> {
    validate(n, s)?;
    let mut group = Vec::new();
    let shifts: Vec<usize> = if s.momentum.is_some() { (0..n).collect() } else { vec![0] };
    let inversions: &[bool] = if s.inversion.is_some() { &[false, true] } else { &[false] };
    let flips: &[bool] = if s.spin_flip_x.is_some() { &[false, true] } else { &[false] };
    for &t in &shifts {
        for &invert in inversions {
            for &flip in flips {
                let mut chi = Complex64::new(1.0, 0.0);
                if let Some(k) = s.momentum {
                    // Exact ±1 at k = 0 and k = N/2 keeps real sectors real.
                    let kt = (k * t) % n;
                    chi *= if kt == 0 {
                        Complex64::new(1.0, 0.0)
                    } else if 2 * kt == n {
                        Complex64::new(-1.0, 0.0)
                    } else {
                        Complex64::from_polar(1.0, 2.0 * PI * kt as f64 / n as f64)
                    };
                }
                if invert {
                    chi *= f64::from(s.inversion.unwrap());
                }
                if flip {
                    chi *= f64::from(s.spin_flip_x.unwrap());
                }
                group.push(GroupElement { shift: t, invert, flip, weight: chi.conj() });
            }
        }
    }
    let size = 1usize << n;
    let mut visited = vec![false; size];
    let mut lookup = vec![(ABSENT, Complex64::new(0.0, 0.0)); size];
    let mut vectors = Vec::new();
    let mut acc: Vec<(u32, Complex64)> = Vec::with_capacity(group.len());
    for seed in 0..size as u32 {
        if visited[seed as usize] {
            continue;
        }
        if let Some(pz) = s.spin_flip_z {
            let parity = if seed.count_ones() % 2 == 0 { 1 } else { -1 };
            if parity != pz {
                visited[seed as usize] = true;
                continue;
            }
        }
        acc.clear();
        for g in &group {
            let t = g.apply(seed, n);
            visited[t as usize] = true;
            match acc.iter_mut().find(|(st, _)| *st == t) {
                Some(entry) => entry.1 += g.weight,
                None => acc.push((t, g.weight)),
            }
        }
        acc.retain(|(_, a)| a.norm() > 1e-9);
        let norm2: f64 = acc.iter().map(|(_, a)| a.norm_sqr()).sum();
        if norm2 < 1e-12 {
            continue;
        }
        let inv = 1.0 / norm2.sqrt();
        let mut v: Vec<(u32, Complex64)> = acc.iter().map(|&(st, a)| (st, a * inv)).collect();
        v.sort_by_key(|&(st, _)| st);
        let idx = vectors.len() as u32;
        for &(st, a) in &v {
            lookup[st as usize] = (idx, a);
        }
        vectors.push(v);
    }
    if vectors.is_empty() {
        return Err(Error::DimensionZero(s.to_string()));
    }
    Ok(SectorBasis { n, spec: *s, vectors, lookup })
}

struct Term {
    x: u32,
    z: u32,
    /// `c · i^k`.
    factor: Complex64,
}

fn mask(bits: &stabtherm_core::BitVec) -> u32 {
    bits.ones().fold(0u32, |m, j| m | (1 << j))
}

fn terms_of(h: &PauliHamiltonian) -> Vec<Term> {
    h.float_terms()
        .into_iter()
        .map(|(p, c)| {
            let phase = match p.phase_exp() {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
            Term { x: mask(p.x_bits()), z: mask(p.z_bits()), factor: phase * c }
        })
        .collect()
}

/// `⟨v_a|H|v_b⟩` for the sector basis.
pub fn sector_matrix(h: &PauliHamiltonian, basis: &SectorBasis) -> DMatrix<Complex64> {
    let dim = basis.dimension();
    let terms = terms_of(h);
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for (b, vb) in basis.vectors.iter().enumerate() {
        for &(s, amp) in vb {
            for t in &terms {
                let sign = if (s & t.z).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
                let target = s ^ t.x;
                if let Some((a, amp_a)) = basis.locate(target) {
                    m[(a, b)] += amp_a.conj() * t.factor * amp * sign;
                }
            }
        }
    }
    m
}

/// All eigenvalues of `h` restricted to the sector, ascending.
///
/// Fails if `h` breaks a symmetry resolved by the basis or the dimension
/// exceeds `limit`.
pub fn eigenvalues(h: &PauliHamiltonian, basis: &SectorBasis, limit: usize) -> Result<Vec<f64>> {
    if h.n_qubits() != basis.n {
        return Err(Error::Core(stabtherm_core::Error::DimensionMismatch { left: h.n_qubits(), right: basis.n }));
    }
    let broken = broken_symmetries(h, &basis.spec);
    if !broken.is_empty() {
        return Err(Error::SymmetryBroken(broken.join(", ")));
    }
    let dim = basis.dimension();
    if dim > limit {
        return Err(Error::TooLarge { dim, limit });
    }
    let m = sector_matrix(h, basis);
    let mut ev: Vec<f64> = if m.iter().all(|z| z.im == 0.0) {
        let re = m.map(|z| z.re);
        SymmetricEigen::new(re).eigenvalues.iter().copied().collect()
    } else {
        SymmetricEigen::new(m).eigenvalues.iter().copied().collect()
    };
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Gap-ratio statistics of one sector.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub sector_dimension: usize,
    pub eigenvalues: Vec<F17>,
    pub retained_levels: usize,
    pub r_values: Vec<F17>,
    pub mean_r_tilde: F17,
    pub central_fraction_used: F17,
    /// Gaps below `DEGENERACY_TOLERANCE × width`; excluded from `r_values`.
    pub degeneracy_count: usize,
}

impl SpectrumReport {
    pub fn r(&self) -> Vec<f64> {
        self.r_values.iter().map(|x| x.0).collect()
    }
}

/// Keeps the central `central_fraction` of `levels` by index and computes
/// `r̃_i = min(r_i, 1/r_i)` with `r_i = s_{i+1}/s_i`.
pub fn r_statistics(levels: &[f64], central_fraction: f64) -> Result<SpectrumReport> {
    if !(central_fraction > 0.0 && central_fraction <= 1.0) {
        return Err(Error::Config(format!("central fraction {central_fraction} outside (0, 1]")));
    }
    let mut sorted = levels.to_vec();
    sorted.sort_by(f64::total_cmp);
    let total = sorted.len();
    let keep = ((total as f64) * central_fraction).round() as usize;
    if keep < 4 {
        return Err(Error::TooFewLevels(keep));
    }
    let start = (total - keep) / 2;
    let retained = &sorted[start..start + keep];
    let width = sorted[total - 1] - sorted[0];
    let tol = DEGENERACY_TOLERANCE * width;
    let gaps: Vec<f64> = retained.windows(2).map(|w| w[1] - w[0]).collect();
    let degeneracy_count = gaps.iter().filter(|&&s| s <= tol).count();
    let r: Vec<f64> = gaps
        .windows(2)
        .filter(|w| w[0] > tol && w[1] > tol)
        .map(|w| {
            let ratio = w[1] / w[0];
            ratio.min(1.0 / ratio)
        })
        .collect();
    let mean = if r.is_empty() { f64::NAN } else { r.iter().sum::<f64>() / r.len() as f64 };
    Ok(SpectrumReport {
        sector_dimension: total,
        eigenvalues: sorted.iter().copied().map(F17).collect(),
        retained_levels: keep,
        r_values: r.into_iter().map(F17).collect(),
        mean_r_tilde: F17(mean),
        central_fraction_used: F17(central_fraction),
        degeneracy_count,
    })
}

/// Mean over the concatenated `r̃` values of independently analysed sectors.
pub fn pooled_mean(reports: &[SpectrumReport]) -> f64 {
    let (sum, count) = reports.iter().flat_map(|r| r.r_values.iter()).fold((0.0, 0usize), |(s, c), x| (s + x.0, c + 1));
    sum / count as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ensemble {
    Goe,
    Poisson,
}

/// Folded Poisson density `2/(1+r)²` on `[0, 1]`.
pub fn poisson_density(r: f64) -> f64 {
    2.0 / ((1.0 + r) * (1.0 + r))
}

/// Folded GOE surmise `(27/4)(r+r²)/(1+r+r²)^{5/2}` on `[0, 1]`.
pub fn goe_density(r: f64) -> f64 {
    6.75 * (r + r * r) / (1.0 + r + r * r).powf(2.5)
}

pub fn reference_distributions(kind: Ensemble, grid: &[f64]) -> Vec<f64> {
    let f = match kind {
        Ensemble::Goe => goe_density,
        Ensemble::Poisson => poisson_density,
    };
    grid.iter().map(|&r| f(r)).collect()
}

/// `2 ln 2 − 1`.
pub fn poisson_mean() -> f64 {
    2.0 * std::f64::consts::LN_2 - 1.0
}

/// Large-matrix GOE value of `⟨r̃⟩`.
pub const GOE_MEAN: f64 = 0.5307;

/// Composite Simpson rule with `steps` (even) intervals.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, steps: usize) -> f64 {
    let h = (b - a) / steps as f64;
    let mut s = f(a) + f(b);
    for i in 1..steps {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// One histogram bin with bin-averaged reference densities.
#[derive(Clone, Debug, Serialize)]
pub struct HistogramRow {
    pub lo: F17,
    pub hi: F17,
    pub density: F17,
    pub goe: F17,
    pub poisson: F17,
}

pub fn histogram(r: &[f64], bins: usize) -> Vec<HistogramRow> {
    let mut counts = vec![0usize; bins];
    for &x in r {
        let b = ((x * bins as f64) as usize).min(bins - 1);
        counts[b] += 1;
    }
    let w = 1.0 / bins as f64;
    counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let (lo, hi) = (i as f64 * w, (i + 1) as f64 * w);
            HistogramRow {
                lo: F17(lo),
                hi: F17(hi),
                density: F17(if r.is_empty() { 0.0 } else { c as f64 / (r.len() as f64 * w) }),
                goe: F17(simpson(goe_density, lo, hi, 64) / w),
                poisson: F17(simpson(poisson_density, lo, hi, 64) / w),
            }
        })
        .collect()
}

pub fn histogram_csv(rows: &[HistogramRow]) -> String {
    let mut s = String::from("bin_lo,bin_hi,empirical_density,goe_reference,poisson_reference\n");
    for row in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            crate::json::format_f17(row.lo.0),
            crate::json::format_f17(row.hi.0),
            crate::json::format_f17(row.density.0),
            crate::json::format_f17(row.goe.0),
            crate::json::format_f17(row.poisson.0)
        ));
    }
    s
}

pub fn eigenvalues_csv(levels: &[f64]) -> String {
    let mut s = String::from("index,energy\n");
    for (i, e) in levels.iter().enumerate() {
        s.push_str(&format!("{i},{}\n", crate::json::format_f17(*e)));
    }
    s
}

/// Eigenvalues of `(A + Aᵀ)/2` with i.i.d. standard normal `A`.
pub fn goe_eigenvalues<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Vec<f64> {
    let mut m = DMatrix::<f64>::zeros(size, size);
    for i in 0..size {
        for j in 0..=i {
            let x: f64 = rng.sample(StandardNormal);
            let v = if i == j { x } else { x / std::f64::consts::SQRT_2 };
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// `r̃` of one 3×3 GOE matrix; its density is exactly the surmise.
pub fn goe3_ratio<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let mut m = Matrix3::<f64>::zeros();
    for i in 0..3 {
        for j in 0..=i {
            let x: f64 = rng.sample(StandardNormal);
            let v = if i == j { x } else { x / std::f64::consts::SQRT_2 };
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    let r = (ev[2] - ev[1]) / (ev[1] - ev[0]);
    r.min(1.0 / r)
}

/// `count` i.i.d. uniform levels on `[0, 1)`, sorted.
pub fn poisson_levels<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<f64> {
    let mut v: Vec<f64> = (0..count).map(|_| rng.random::<f64>()).collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Translation sectors `k = 0..=N/2` at fixed flip eigenvalues, with
/// inversion resolved (both parities) where it commutes with `T`.
///
/// Sectors `k` and `N − k` are mirror images under inversion, so only
/// one of each pair is listed.
pub fn pooling_sectors(n: usize, px: Option<i8>, pz: Option<i8>, resolve_inversion: bool) -> Vec<SymmetrySpec> {
    let mut out = Vec::new();
    for k in 0..=n / 2 {
        let base = SymmetrySpec { momentum: Some(k), inversion: None, spin_flip_x: px, spin_flip_z: pz };
        if resolve_inversion && (k == 0 || 2 * k == n) {
            out.push(base.with_inversion(1));
            out.push(base.with_inversion(-1));
        } else {
            out.push(base);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use stabtherm_core::coeff::int;
    use stabtherm_core::{Pauli, PauliString};

    fn sum_z(n: usize) -> PauliHamiltonian {
        let zs: Vec<_> = (0..n).map(|i| PauliString::single(n, i, Pauli::Z)).collect();
        PauliHamiltonian::from_terms(n, zs.iter().map(|p| (p, int(1)))).unwrap()
    }

    #[test]
    fn two_site_momentum_zero() {
        let b = sector_basis(2, &SymmetrySpec::NONE.with_momentum(0)).unwrap();
        assert_eq!(b.dimension(), 3);
        let h = 1.0 / 2f64.sqrt();
        assert_eq!(b.vector(0), &[(0, Complex64::new(1.0, 0.0))]);
        assert_eq!(b.vector(1).len(), 2);
        assert!((b.vector(1)[0].1.re - h).abs() < 1e-15);
        assert_eq!(b.vector(2), &[(3, Complex64::new(1.0, 0.0))]);
    }

    #[test]
    fn free_spins() {
        let b = sector_basis(4, &SymmetrySpec::NONE).unwrap();
        let ev = eigenvalues(&sum_z(4), &b, DEFAULT_DIMENSION_LIMIT).unwrap();
        let expected = [-4.0, -2.0, -2.0, -2.0, -2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0, 2.0, 2.0, 2.0, 4.0];
        for (a, b) in ev.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_incompatible_specs() {
        assert!(matches!(sector_basis(8, &SymmetrySpec::NONE.with_momentum(1).with_inversion(1)), Err(Error::IncompatibleSpec(_))));
        assert!(sector_basis(8, &SymmetrySpec::NONE.with_momentum(4).with_inversion(1)).is_ok());
        assert!(matches!(sector_basis(5, &SymmetrySpec::NONE.with_flips(1, 1)), Err(Error::IncompatibleSpec(_))));
        assert!(matches!(sector_basis(4, &SymmetrySpec::NONE.with_momentum(4)), Err(Error::IncompatibleSpec(_))));
        // k = 1 keeps only |01⟩ − |10⟩, which has P_Z = −1.
        let odd_momentum = SymmetrySpec { momentum: Some(1), inversion: None, spin_flip_x: Some(1), spin_flip_z: Some(1) };
        assert!(matches!(sector_basis(2, &odd_momentum), Err(Error::DimensionZero(_))));
    }

    #[test]
    fn symmetry_breaking_hamiltonian_is_rejected() {
        let mut h = sum_z(4);
        h.add_term(&PauliString::single(4, 0, Pauli::X), int(1)).unwrap();
        let b = sector_basis(4, &SymmetrySpec::NONE.with_momentum(0)).unwrap();
        assert!(matches!(eigenvalues(&h, &b, 100), Err(Error::SymmetryBroken(_))));
        let b = sector_basis(4, &SymmetrySpec::NONE).unwrap();
        assert!(matches!(eigenvalues(&h, &b, 8), Err(Error::TooLarge { dim: 16, limit: 8 })));
    }

    #[test]
    fn picket_fence() {
        let levels: Vec<f64> = (0..20).map(f64::from).collect();
        let r = r_statistics(&levels, 1.0).unwrap();
        assert!(r.r().iter().all(|&x| (x - 1.0).abs() < 1e-12));
        assert_eq!(r.r_values.len(), 18);
        assert!(matches!(r_statistics(&levels[..3], 1.0), Err(Error::TooFewLevels(3))));
        let half = r_statistics(&levels, 0.5).unwrap();
        assert_eq!(half.retained_levels, 10);
        assert_eq!(half.r_values.len(), 8);
    }

    #[test]
    fn degeneracies_are_counted() {
        let r = r_statistics(&[0.0, 1.0, 1.0, 2.5, 3.0, 4.2], 1.0).unwrap();
        assert_eq!(r.degeneracy_count, 1);
        assert_eq!(r.r_values.len(), 2);
    }

    #[test]
    fn affine_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let levels = poisson_levels(200, &mut rng);
        let a = r_statistics(&levels, 0.5).unwrap();
        let moved: Vec<f64> = levels.iter().map(|x| 3.5 * x - 7.0).collect();
        let b = r_statistics(&moved, 0.5).unwrap();
        for (x, y) in a.r().iter().zip(b.r()) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn reference_curves_are_normalized() {
        assert!((simpson(goe_density, 0.0, 1.0, 20_000) - 1.0).abs() < 1e-6);
        assert!((simpson(poisson_density, 0.0, 1.0, 20_000) - 1.0).abs() < 1e-6);
        assert_eq!(goe_density(0.0), 0.0);
        assert_eq!(poisson_density(0.0), 2.0);
        let grid = [0.0, 0.5, 1.0];
        assert_eq!(reference_distributions(Ensemble::Poisson, &grid)[2], 0.5);
        let mean = simpson(|r| r * poisson_density(r), 0.0, 1.0, 20_000);
        assert!((mean - poisson_mean()).abs() < 1e-9);
    }

    #[test]
    fn goe3_histogram_matches_surmise() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let r: Vec<f64> = (0..1_000_000).map(|_| goe3_ratio(&mut rng)).collect();
        let rows = histogram(&r, 20);
        let sup = rows.iter().map(|row| (row.density.0 - row.goe.0).abs()).fold(0.0, f64::max);
        assert!(sup < 0.02, "sup deviation {sup}");
    }

    #[test]
    fn pooling_sector_list() {
        let s = pooling_sectors(14, Some(1), Some(1), true);
        assert_eq!(s.len(), 10);
        assert_eq!(s[0], SymmetrySpec::FULLY_SYMMETRIC);
        assert_eq!(pooling_sectors(5, None, None, true).len(), 4);
    }
}
