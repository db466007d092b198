//! Discrete symmetries of Pauli Hamiltonians on a ring: translation `T`,
//! site inversion `P: j → N−1−j`, and the global flips `P_X = ⊗X`,
//! `P_Z = ⊗Z`.
//!
//! All checks act on the term list only.

use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::hamiltonian::PauliHamiltonian;
use crate::pauli::PauliString;

/// A joint symmetry sector. `None` leaves a symmetry unresolved.
///
/// `momentum = Some(k)` selects the `T` eigenvalue `e^{2πik/N}`; the other
/// fields are eigenvalues `±1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SymmetrySpec {
    pub momentum: Option<usize>,
    pub inversion: Option<i8>,
    pub spin_flip_x: Option<i8>,
    pub spin_flip_z: Option<i8>,
}

impl SymmetrySpec {
    pub const NONE: SymmetrySpec = SymmetrySpec { momentum: None, inversion: None, spin_flip_x: None, spin_flip_z: None };

    /// The fully symmetric sector `T = P = P_X = P_Z = 1`.
    pub const FULLY_SYMMETRIC: SymmetrySpec =
        SymmetrySpec { momentum: Some(0), inversion: Some(1), spin_flip_x: Some(1), spin_flip_z: Some(1) };

    pub fn with_momentum(mut self, k: usize) -> Self {
        self.momentum = Some(k);
        self
    }

    pub fn with_inversion(mut self, s: i8) -> Self {
        self.inversion = Some(s);
        self
    }

    pub fn with_flips(mut self, px: i8, pz: i8) -> Self {
        self.spin_flip_x = Some(px);
        self.spin_flip_z = Some(pz);
        self
    }
}

impl fmt::Display for SymmetrySpec {
    /// `k=0,p=1,px=1,pz=1`, listing only resolved symmetries (`all` if none).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = alloc::vec::Vec::new();
        if let Some(k) = self.momentum {
            parts.push(alloc::format!("k={k}"));
        }
        for (name, v) in [("p", self.inversion), ("px", self.spin_flip_x), ("pz", self.spin_flip_z)] {
            if let Some(v) = v {
                parts.push(alloc::format!("{name}={v}"));
            }
        }
        if parts.is_empty() {
            f.write_str("all")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for SymmetrySpec {
    type Err = Error;

    /// Parses comma-separated `key=value` pairs: `k=<momentum>`, `t=1`
    /// (shorthand for `k=0`), `p=±1`, `px=±1`, `pz=±1`. `all` or the empty
    /// string leaves everything unresolved.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut spec = SymmetrySpec::NONE;
        let s = s.trim();
        if s.is_empty() || s == "all" {
            return Ok(spec);
        }
        let bad = |msg: &str| Error::InvalidArgument(alloc::format!("sector `{s}`: {msg}"));
        for item in s.split(',') {
            let (key, value) = item.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let value = value.trim();
            let sign = || match value {
                "1" | "+1" => Ok(1i8),
                "-1" => Ok(-1i8),
                _ => Err(bad("eigenvalue must be +1 or -1")),
            };
            match key.trim() {
                "k" => spec.momentum = Some(value.parse().map_err(|_| bad("momentum must be a nonnegative integer"))?),
                "t" => {
                    if sign()? != 1 {
                        return Err(bad("t accepts only 1; use k=<index> for other momenta"));
                    }
                    spec.momentum = Some(0);
                }
                "p" => spec.inversion = Some(sign()?),
                "px" => spec.spin_flip_x = Some(sign()?),
                "pz" => spec.spin_flip_z = Some(sign()?),
                other => return Err(Error::InvalidArgument(alloc::format!("unknown sector key `{other}`"))),
            }
        }
        Ok(spec)
    }
}

/// `j → N−1−j`.
pub fn inversion_permutation(n: usize) -> alloc::vec::Vec<usize> {
    (0..n).map(|j| n - 1 - j).collect()
}

/// `U P U†` for `U = ⊗X`: a sign `(−1)^{#(Y,Z letters)}`.
pub fn flip_x(p: &PauliString) -> PauliString {
    if p.z_bits().count_ones() % 2 == 1 {
        p.negated()
    } else {
        p.clone()
    }
}

/// `U P U†` for `U = ⊗Z`: a sign `(−1)^{#(X,Y letters)}`.
pub fn flip_z(p: &PauliString) -> PauliString {
    if p.x_bits().count_ones() % 2 == 1 {
        p.negated()
    } else {
        p.clone()
    }
}

fn conjugated(h: &PauliHamiltonian, f: impl Fn(&PauliString) -> PauliString) -> PauliHamiltonian {
    let mut out = PauliHamiltonian::new(h.n_qubits());
    for (p, c) in h.terms() {
        out.add_term(&f(p), c.clone()).expect("conjugation keeps terms Hermitian and nonidentity");
    }
    out
}

pub fn is_translation_invariant(h: &PauliHamiltonian) -> bool {
    h.translate(1) == *h
}

pub fn is_inversion_invariant(h: &PauliHamiltonian) -> bool {
    h.permute(&inversion_permutation(h.n_qubits())) == *h
}

pub fn is_flip_x_invariant(h: &PauliHamiltonian) -> bool {
    conjugated(h, flip_x) == *h
}

pub fn is_flip_z_invariant(h: &PauliHamiltonian) -> bool {
    conjugated(h, flip_z) == *h
}

/// True iff every symmetry resolved in `s` maps the term list of `h`
/// (with coefficients) onto itself.
pub fn check_symmetries(h: &PauliHamiltonian, s: &SymmetrySpec) -> bool {
    (s.momentum.is_none() || is_translation_invariant(h))
        && (s.inversion.is_none() || is_inversion_invariant(h))
        && (s.spin_flip_x.is_none() || is_flip_x_invariant(h))
        && (s.spin_flip_z.is_none() || is_flip_z_invariant(h))
}

/// Names of the symmetries resolved in `s` that `h` breaks.
pub fn broken_symmetries(h: &PauliHamiltonian, s: &SymmetrySpec) -> alloc::vec::Vec<alloc::string::String> {
    let mut out = alloc::vec::Vec::new();
    if s.momentum.is_some() && !is_translation_invariant(h) {
        out.push("translation".to_string());
    }
    if s.inversion.is_some() && !is_inversion_invariant(h) {
        out.push("inversion".to_string());
    }
    if s.spin_flip_x.is_some() && !is_flip_x_invariant(h) {
        out.push("spin_flip_x".to_string());
    }
    if s.spin_flip_z.is_some() && !is_flip_z_invariant(h) {
        out.push("spin_flip_z".to_string());
    }
    out
}
