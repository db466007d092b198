//! Traceless Hamiltonians as sparse maps `P ↦ h(P)` over prefactor-1 Pauli
//! strings with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::ToString;

use num_traits::Zero;

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::pauli::PauliString;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PauliHamiltonian {
    n: usize,
    terms: BTreeMap<PauliString, Coeff>,
    locality: usize,
}

impl PauliHamiltonian {
    pub fn new(n: usize) -> Self {
        PauliHamiltonian { n, terms: BTreeMap::new(), locality: 0 }
    }

    /// Builds `Σ c·p`. Signs carried by the strings are folded into the
    /// coefficients.
    pub fn from_terms<'a>(n: usize, terms: impl IntoIterator<Item = (&'a PauliString, Coeff)>) -> Result<Self> {
        let mut h = Self::new(n);
        for (p, c) in terms {
            h.add_term(p, c)?;
        }
        Ok(h)
    }

    /// Adds `c·p` to the Hamiltonian. `p` must be Hermitian and not the
    /// identity.
    pub fn add_term(&mut self, p: &PauliString, c: Coeff) -> Result<()> {
        if p.n_qubits() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: p.n_qubits() });
        }
        let Some(sign) = p.sign() else {
            return Err(Error::InvalidArgument(alloc::format!("term {p} is not Hermitian")));
        };
        if p.is_identity() {
            return Err(Error::InvalidArgument("identity term in a traceless Hamiltonian".to_string()));
        }
        let c = if sign < 0 { -c } else { c };
        let key = p.unsigned();
        let entry = self.terms.entry(key).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
            self.locality = self.terms.keys().map(PauliString::weight).max().unwrap_or(0);
        } else {
            self.locality = self.locality.max(p.weight());
        }
        Ok(())
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `max_P |supp(P)|` over nonzero terms.
    pub fn locality(&self) -> usize {
        self.locality
    }

    pub fn coefficient(&self, p: &PauliString) -> Coeff {
        self.terms.get(&p.unsigned()).cloned().unwrap_or_else(Coeff::zero)
    }

    /// `(P, h(P))` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, &Coeff)> {
        self.terms.iter()
    }

    /// Relabels every term by `site j → perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> PauliHamiltonian {
        let mut out = Self::new(self.n);
        for (p, c) in &self.terms {
            out.add_term(&p.permute(perm), c.clone()).expect("relabeling keeps terms valid");
        }
        out
    }

    pub fn translate(&self, shift: usize) -> PauliHamiltonian {
        let perm: alloc::vec::Vec<usize> = (0..self.n).map(|j| (j + shift) % self.n).collect();
        self.permute(&perm)
    }

    /// Multiplies every coefficient by `s`.
    pub fn scaled(&self, s: &Coeff) -> PauliHamiltonian {
        let mut out = Self::new(self.n);
        for (p, c) in &self.terms {
            out.add_term(p, c * s).expect("valid");
        }
        out
    }

    /// `Σ h(P) P` with `f64` coefficients, for numerics.
    pub fn float_terms(&self) -> alloc::vec::Vec<(PauliString, f64)> {
        self.terms.iter().map(|(p, c)| (p.clone(), coeff::to_f64(c))).collect()
    }
}

impl core::fmt::Display for PauliHamiltonian {
    /// One `coefficient<TAB>string` line per term.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (p, c) in &self.terms {
            writeln!(f, "{}\t{}", coeff::format_rational(c), p)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    fn p(s: &str, n: usize) -> PauliString {
        PauliString::parse(s, n).unwrap()
    }

    #[test]
    fn signs_fold_into_coefficients() {
        let mut h = PauliHamiltonian::new(3);
        h.add_term(&p("-X1 X2", 3), int(2)).unwrap();
        assert_eq!(h.coefficient(&p("X1 X2", 3)), int(-2));
        assert_eq!(h.locality(), 2);
    }

    #[test]
    fn cancellation_updates_locality() {
        let mut h = PauliHamiltonian::new(3);
        h.add_term(&p("Z1", 3), int(1)).unwrap();
        h.add_term(&p("X1 X2 X3", 3), int(1)).unwrap();
        assert_eq!(h.locality(), 3);
        h.add_term(&p("X1 X2 X3", 3), int(-1)).unwrap();
        assert_eq!(h.locality(), 1);
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn rejects_identity_and_non_hermitian() {
        let mut h = PauliHamiltonian::new(2);
        assert!(h.add_term(&PauliString::identity(2), int(1)).is_err());
        assert!(h.add_term(&p("+iX1", 2), int(1)).is_err());
        assert!(h.add_term(&p("X1", 3), int(1)).is_err());
    }

    #[test]
    fn translation() {
        let h = PauliHamiltonian::from_terms(4, [(&p("Z1 Z4", 4), int(1))]).unwrap();
        assert_eq!(h.translate(1).coefficient(&p("Z1 Z2", 4)), int(1));
    }
}
