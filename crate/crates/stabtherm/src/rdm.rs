//! Reduced density matrices of dense statevectors.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

/// `ρ_A = Tr_{Ā} |ψ⟩⟨ψ|` with qubit `j` in bit `j` of the state index.
/// Row index bit `i` corresponds to `a[i]`.
pub fn reduced_density_matrix(psi: &[Complex64], n: usize, a: &[usize]) -> DMatrix<Complex64> {
    assert_eq!(psi.len(), 1 << n);
    let env: Vec<usize> = (0..n).filter(|j| !a.contains(j)).collect();
    let (da, de) = (1usize << a.len(), 1usize << env.len());
    let mut m = DMatrix::<Complex64>::zeros(da, de);
    for (s, amp) in psi.iter().enumerate() {
        let ia = a.iter().enumerate().fold(0, |acc, (i, &q)| acc | ((s >> q & 1) << i));
        let ie = env.iter().enumerate().fold(0, |acc, (i, &q)| acc | ((s >> q & 1) << i));
        m[(ia, ie)] = *amp;
    }
    &m * m.adjoint()
}

/// `‖ρ_A − I/d_A‖₁`.
///
/// For `|A| > N/2` the smaller complement is diagonalized instead: `ρ_A`
/// shares its nonzero spectrum with `ρ_Ā` and has `d_A − d_Ā` extra zeros.
pub fn distance_from_maximally_mixed(psi: &[Complex64], n: usize, a: &[usize]) -> f64 {
    let da = (1u64 << a.len()) as f64;
    let small_side = 2 * a.len() <= n;
    let sub: Vec<usize> = if small_side { a.to_vec() } else { (0..n).filter(|j| !a.contains(j)).collect() };
    let rho = reduced_density_matrix(psi, n, &sub);
    let ev = SymmetricEigen::new(rho).eigenvalues;
    let explicit: f64 = ev.iter().map(|l| (l - 1.0 / da).abs()).sum();
    if small_side {
        explicit
    } else {
        let db = (1u64 << sub.len()) as f64;
        explicit + (da - db) / da
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use stabtherm_core::{oracle, Graph};

    #[test]
    fn bell_pair_marginal_is_mixed() {
        let s = 1.0 / 2f64.sqrt();
        let psi = [Complex64::new(s, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(s, 0.0)];
        assert!(distance_from_maximally_mixed(&psi, 2, &[0]) < 1e-15);
        assert!((distance_from_maximally_mixed(&psi, 2, &[0, 1]) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn complement_shortcut_matches_direct() {
        let g = Graph::g2(7).unwrap();
        let psi = oracle::statevector(&g).unwrap();
        let a = [0, 1, 2, 4, 5];
        let rho = reduced_density_matrix(&psi, 7, &a);
        let d = 32.0;
        let direct: f64 = SymmetricEigen::new(rho).eigenvalues.iter().map(|l| (l - 1.0 / d).abs()).sum();
        assert!((direct - distance_from_maximally_mixed(&psi, 7, &a)).abs() < 1e-12);
    }

    #[test]
    fn product_state_is_never_mixed() {
        let psi = oracle::statevector(&Graph::edgeless(3)).unwrap();
        assert!((distance_from_maximally_mixed(&psi, 3, &[1]) - 1.0).abs() < 1e-12);
    }
}
