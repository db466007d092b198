//! Dense statevector oracle for small N.
//!
//! Qubit `j` is bit `j` of the basis-state index. These routines exist to
//! cross-check the symbolic stabilizer code and are exponential in N.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::PauliString;
use crate::stabilizer::StabilizerTableau;

/// Default cap on N for dense vectors: `2^14` amplitudes (256 KiB).
pub const ORACLE_LIMIT: usize = 14;

fn inv_sqrt_pow2(n: usize) -> f64 {
    let half = 1.0 / (1u64 << (n / 2)) as f64;
    if n % 2 == 1 {
        half * core::f64::consts::FRAC_1_SQRT_2
    } else {
        half
    }
}

/// `∏_{edges} CZ_{ab} |+⟩^{⊗N}` with `N ≤ ORACLE_LIMIT`.
pub fn statevector(g: &Graph) -> Result<Vec<Complex64>> {
    statevector_with_limit(g, ORACLE_LIMIT)
}

pub fn statevector_with_limit(g: &Graph, limit: usize) -> Result<Vec<Complex64>> {
    let n = g.n_vertices();
    if n > limit || n >= 63 {
        return Err(Error::TooLarge { n, limit });
    }
    let masks: Vec<u64> = (0..n).map(|a| g.neighbors(a).filter(|&b| b > a).fold(0u64, |m, b| m | (1 << b))).collect();
    let amp = inv_sqrt_pow2(n);
    Ok((0..1u64 << n)
        .map(|s| {
            let mut parity = 0u32;
            for (a, m) in masks.iter().enumerate() {
                if s >> a & 1 == 1 {
                    parity += (s & m).count_ones();
                }
            }
            Complex64::new(if parity.is_multiple_of(2) { amp } else { -amp }, 0.0)
        })
        .collect())
}

/// `p |state⟩` for `p = i^k X^x Z^z`.
pub fn apply_pauli(p: &PauliString, state: &[Complex64]) -> Vec<Complex64> {
    let n = p.n_qubits();
    assert_eq!(state.len(), 1usize << n);
    let xm = p.x_bits().ones().fold(0usize, |m, j| m | (1 << j));
    let zm = p.z_bits().ones().fold(0usize, |m, j| m | (1 << j));
    let phase = match p.phase_exp() {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut out = vec![Complex64::new(0.0, 0.0); state.len()];
    for (s, amp) in state.iter().enumerate() {
        let sign = if (s & zm).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        out[s ^ xm] = phase * amp * sign;
    }
    out
}

pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn norm(a: &[Complex64]) -> f64 {
    libm::sqrt(a.iter().map(|x| x.norm_sqr()).sum())
}

/// `⟨state| p |state⟩`.
pub fn expectation(p: &PauliString, state: &[Complex64]) -> Complex64 {
    inner(state, &apply_pauli(p, state))
}

/// The stabilizer state of `t` as a dense vector, up to a global phase.
pub fn tableau_statevector(t: &StabilizerTableau) -> Result<Vec<Complex64>> {
    let n = t.n_qubits();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge { n, limit: ORACLE_LIMIT });
    }
    for seed in 0..1usize << n {
        let mut v = vec![Complex64::new(0.0, 0.0); 1 << n];
        v[seed] = Complex64::new(1.0, 0.0);
        for g in t.generators() {
            let gv = apply_pauli(g, &v);
            for (a, b) in v.iter_mut().zip(gv) {
                *a = (*a + b) * 0.5;
            }
        }
        let nv = norm(&v);
        if nv > 1e-6 {
            v.iter_mut().for_each(|a| *a /= nv);
            return Ok(v);
        }
    }
    unreachable!("projector onto a stabilizer state has a nonzero column")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::Pauli;

    fn close(a: &[Complex64], b: &[Complex64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12)
    }

    #[test]
    fn edgeless_pair_is_plus_plus() {
        let v = statevector(&Graph::edgeless(2)).unwrap();
        assert!(close(&v, &[Complex64::new(0.5, 0.0); 4]));
    }

    #[test]
    fn single_edge_flips_last_amplitude() {
        let v = statevector(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap();
        let h = Complex64::new(0.5, 0.0);
        assert!(close(&v, &[h, h, h, -h]));
    }

    #[test]
    fn star_cluster_generators_fix_the_state() {
        let g = Graph::g2(5).unwrap();
        let v = statevector(&g).unwrap();
        assert!((norm(&v) - 1.0).abs() < 1e-12);
        for i in 0..5 {
            assert!(close(&apply_pauli(&g.stabilizer_generator(i), &v), &v));
        }
    }

    #[test]
    fn too_large() {
        assert_eq!(statevector(&Graph::edgeless(15)), Err(Error::TooLarge { n: 15, limit: 14 }));
    }

    #[test]
    fn tableau_state_matches_graph_state() {
        let g = Graph::cycle(5).unwrap();
        let a = statevector(&g).unwrap();
        let b = tableau_statevector(&g.to_stabilizer()).unwrap();
        assert!((inner(&a, &b).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pauli_action_matches_matrices() {
        // Y|0⟩ = i|1⟩.
        let v = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let out = apply_pauli(&PauliString::single(1, 0, Pauli::Y), &v);
        assert!(close(&out, &[Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)]));
    }
}
