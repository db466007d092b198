//! N-qubit Pauli strings in the binary-symplectic representation.
//!
//! A [`PauliString`] stores an operator as `i^k · ∏_j X_j^{x_j} Z_j^{z_j}`
//! with the per-site convention `Y = iXZ`. The prefactor-1 Hermitian string
//! `Y` therefore has `x = z = 1` and `k = 1`. Products are closed-form:
//!
//! ```text
//! (i^a X^x1 Z^z1)(i^b X^x2 Z^z2) = i^(a + b + 2·(z1·x2)) X^(x1⊕x2) Z^(z1⊕z2)
//! ```
//!
//! The text form is a prefix from `+`, `-`, `+i`, `-i` giving the phase
//! relative to the prefactor-1 string, then `letter site` tokens with
//! 1-based sites, e.g. `+X1 Z5 Z6 Z7`. The identity prints as `+I`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    #[inline]
    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    #[inline]
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    fn from_letter(c: char) -> Option<Pauli> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// A phase `i^k`, `k ∈ {0,1,2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    #[inline]
    pub const fn from_exponent(k: u32) -> Phase {
        Phase((k % 4) as u8)
    }

    #[inline]
    pub const fn exponent(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    #[inline]
    pub fn inverse(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    /// `+1` or `-1` for real phases.
    pub fn sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// `(re, im)` as small integers.
    pub fn as_gaussian(self) -> (i8, i8) {
        match self.0 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        }
    }
}

impl core::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        })
    }
}

/// A set of sites, stored sorted and 0-based. Displays 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Support {
    sites: Vec<usize>,
}

impl Support {
    pub fn new(sites: impl IntoIterator<Item = usize>) -> Self {
        let mut sites: Vec<usize> = sites.into_iter().collect();
        sites.sort_unstable();
        sites.dedup();
        Support { sites }
    }

    /// Builds a support from 1-based site labels.
    pub fn from_one_based(sites: impl IntoIterator<Item = usize>) -> Self {
        Self::new(sites.into_iter().map(|s| {
            assert!(s >= 1, "1-based site labels start at 1");
            s - 1
        }))
    }

    pub fn empty() -> Self {
        Support::default()
    }

    pub fn full(n: usize) -> Self {
        Support { sites: (0..n).collect() }
    }

    /// The cyclic window `{start, start+1, …, start+len-1} mod n`.
    pub fn window(start: usize, len: usize, n: usize) -> Self {
        Self::new((0..len).map(|d| (start + d) % n))
    }

    pub fn from_bitvec(bits: &BitVec) -> Self {
        Support { sites: bits.ones().collect() }
    }

    pub fn to_bitvec(&self, n: usize) -> BitVec {
        BitVec::from_indices(n, self.sites.iter().copied())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn contains(&self, site: usize) -> bool {
        self.sites.binary_search(&site).is_ok()
    }

    pub fn is_subset_of(&self, other: &Support) -> bool {
        self.sites.iter().all(|s| other.contains(*s))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sites
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.sites.iter().copied()
    }

    /// Sites in `0..n` not in this support.
    pub fn complement(&self, n: usize) -> Support {
        Support { sites: (0..n).filter(|s| !self.contains(*s)).collect() }
    }

    pub fn max_site(&self) -> Option<usize> {
        self.sites.last().copied()
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.sites.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s + 1)?;
        }
        f.write_str("}")
    }
}

/// An N-qubit Pauli operator `i^k · ∏ X^x Z^z`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
    phase_exp: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString { x: BitVec::zeros(n), z: BitVec::zeros(n), phase_exp: 0 }
    }

    /// Builds `i^phase_exp · X^x Z^z` from raw parts.
    pub fn from_parts(x: BitVec, z: BitVec, phase_exp: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch { left: x.len(), right: z.len() });
        }
        Ok(PauliString { x, z, phase_exp: phase_exp % 4 })
    }

    /// The prefactor-1 string with the given `(x, z)` pattern.
    pub fn hermitian_from_bits(x: BitVec, z: BitVec) -> Self {
        assert_eq!(x.len(), z.len());
        let y = x.and_count(&z);
        PauliString { x, z, phase_exp: (y % 4) as u8 }
    }

    /// The prefactor-1 string with the given letter on each site.
    pub fn from_paulis(letters: &[Pauli]) -> Self {
        Self::from_sparse(letters.len(), letters.iter().copied().enumerate())
    }

    /// The prefactor-1 string acting with `letter` on each listed 0-based site.
    /// Later entries for the same site overwrite earlier ones.
    pub fn from_sparse(n: usize, terms: impl IntoIterator<Item = (usize, Pauli)>) -> Self {
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        for (site, p) in terms {
            let (xb, zb) = p.bits();
            x.set(site, xb);
            z.set(site, zb);
        }
        Self::hermitian_from_bits(x, z)
    }

    pub fn single(n: usize, site: usize, letter: Pauli) -> Self {
        Self::from_sparse(n, [(site, letter)])
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    #[inline]
    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    /// Exponent `k` of `i^k` in the `X^x Z^z` convention.
    #[inline]
    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    #[inline]
    pub fn y_count(&self) -> u32 {
        self.x.and_count(&self.z)
    }

    /// Phase relative to the prefactor-1 string with the same letters.
    #[inline]
    pub fn prefactor(&self) -> Phase {
        Phase::from_exponent(self.phase_exp as u32 + 4 - self.y_count() % 4)
    }

    /// True iff the operator equals its adjoint, i.e. the prefactor is `±1`.
    #[inline]
    pub fn is_hermitian(&self) -> bool {
        self.prefactor().is_real()
    }

    /// `+1`/`-1` prefactor for Hermitian strings.
    pub fn sign(&self) -> Option<i8> {
        self.prefactor().sign()
    }

    /// The same letters with prefactor 1.
    pub fn unsigned(&self) -> PauliString {
        Self::hermitian_from_bits(self.x.clone(), self.z.clone())
    }

    /// Same letters, prefactor replaced by `prefactor`.
    pub fn with_prefactor(&self, prefactor: Phase) -> PauliString {
        let mut out = self.unsigned();
        out.phase_exp = (Phase::from_exponent(out.phase_exp as u32) * prefactor).exponent();
        out
    }

    /// Multiplies the operator by a phase.
    pub fn scaled(&self, phase: Phase) -> PauliString {
        let mut out = self.clone();
        out.phase_exp = (out.phase_exp + phase.exponent()) % 4;
        out
    }

    pub fn negated(&self) -> PauliString {
        self.scaled(Phase::MINUS_ONE)
    }

    pub fn pauli_at(&self, site: usize) -> Pauli {
        Pauli::from_bits(self.x.get(site), self.z.get(site))
    }

    /// True iff the letters are all `I` (any phase).
    #[inline]
    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// True iff the letters agree, ignoring the phase.
    #[inline]
    pub fn same_letters(&self, other: &PauliString) -> bool {
        self.x == other.x && self.z == other.z
    }

    pub fn support_bits(&self) -> BitVec {
        self.x.or(&self.z)
    }

    pub fn support(&self) -> Support {
        Support::from_bitvec(&self.support_bits())
    }

    pub fn weight(&self) -> usize {
        self.support_bits().count_ones() as usize
    }

    fn check_dims(&self, other: &PauliString) -> Result<()> {
        if self.n_qubits() != other.n_qubits() {
            Err(Error::DimensionMismatch { left: self.n_qubits(), right: other.n_qubits() })
        } else {
            Ok(())
        }
    }

    /// The exact operator product `self · other`, phase included.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_dims(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &PauliString) -> PauliString {
        let sign = if self.z.dot(&other.x) { 2 } else { 0 };
        PauliString { x: self.x.xor(&other.x), z: self.z.xor(&other.z), phase_exp: (self.phase_exp + other.phase_exp + sign) % 4 }
    }

    /// True iff `self · other = other · self`.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.commutes_unchecked(other))
    }

    #[inline]
    pub(crate) fn commutes_unchecked(&self, other: &PauliString) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// Cyclic relabeling `site j → j + shift (mod N)`.
    pub fn translate(&self, shift: usize) -> PauliString {
        PauliString { x: self.x.rotate(shift), z: self.z.rotate(shift), phase_exp: self.phase_exp }
    }

    /// Relabels `site j → perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> PauliString {
        PauliString { x: self.x.permute(perm), z: self.z.permute(perm), phase_exp: self.phase_exp }
    }

    /// `(site, letter)` pairs on the support, increasing in site.
    pub fn letters(&self) -> impl Iterator<Item = (usize, Pauli)> + '_ {
        self.support_bits().ones().map(|s| (s, self.pauli_at(s))).collect::<Vec<_>>().into_iter()
    }

    /// Parses the text form with an explicit qubit count.
    pub fn parse(text: &str, n: usize) -> Result<PauliString> {
        let (prefactor, tokens) = split_prefix(text)?;
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        let mut seen = BitVec::zeros(n);
        for tok in &tokens {
            let Some((letter, site)) = tok else {
                continue;
            };
            if *site == 0 || *site > n {
                return Err(Error::SiteOutOfRange { site: *site, n });
            }
            let s = site - 1;
            if seen.get(s) {
                return Err(perr(text, "repeated site"));
            }
            seen.set(s, true);
            let (xb, zb) = letter.bits();
            x.set(s, xb);
            z.set(s, zb);
        }
        Ok(PauliString::hermitian_from_bits(x, z).with_prefactor(prefactor))
    }

    /// Largest 1-based site mentioned in a text form (0 for `+I`).
    pub fn max_site_in(text: &str) -> Result<usize> {
        let (_, tokens) = split_prefix(text)?;
        Ok(tokens.iter().flatten().map(|(_, s)| *s).max().unwrap_or(0))
    }

    fn sort_key(&self) -> (usize, usize, Vec<(usize, Pauli)>, u8) {
        (self.n_qubits(), self.weight(), self.letters().collect(), self.phase_exp)
    }
}

fn perr(input: &str, reason: &'static str) -> Error {
    Error::ParsePauli { input: input.to_string(), reason }
}

type Tokens = Vec<Option<(Pauli, usize)>>;

fn split_prefix(text: &str) -> Result<(Phase, Tokens)> {
    let t = text.trim();
    let (prefactor, rest) = if let Some(r) = t.strip_prefix("+i") {
        (Phase::I, r)
    } else if let Some(r) = t.strip_prefix("-i") {
        (Phase::MINUS_I, r)
    } else if let Some(r) = t.strip_prefix('+') {
        (Phase::ONE, r)
    } else if let Some(r) = t.strip_prefix('-') {
        (Phase::MINUS_ONE, r)
    } else {
        (Phase::ONE, t)
    };
    let mut tokens = Vec::new();
    let words: Vec<&str> = rest.split_whitespace().collect();
    if words.is_empty() {
        return Err(perr(text, "no operator tokens"));
    }
    for w in &words {
        let mut chars = w.chars();
        let letter = chars.next().and_then(Pauli::from_letter).ok_or_else(|| perr(text, "bad letter"))?;
        let digits = chars.as_str();
        if digits.is_empty() {
            if letter == Pauli::I && words.len() == 1 {
                tokens.push(None);
                continue;
            }
            return Err(perr(text, "missing site index"));
        }
        let site: usize = digits.parse().map_err(|_| perr(text, "bad site index"))?;
        if letter == Pauli::I {
            tokens.push(None);
        } else {
            tokens.push(Some((letter, site)));
        }
    }
    Ok((prefactor, tokens))
}

impl Ord for PauliString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::ops::Mul for &PauliString {
    type Output = PauliString;

    /// Panics on a qubit-count mismatch; see [`PauliString::multiply`].
    fn mul(self, rhs: &PauliString) -> PauliString {
        self.multiply(rhs).expect("qubit count mismatch in Pauli product")
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefactor())?;
        if self.is_identity() {
            return f.write_str("I");
        }
        let mut first = true;
        for (site, p) in self.letters() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}{}", p.letter(), site + 1)?;
        }
        Ok(())
    }
}

/// Convenience: render a list of strings joined by `", "`.
pub fn join(items: &[PauliString]) -> String {
    let mut out = String::new();
    for (k, p) in items.iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        out.push_str(&p.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str, n: usize) -> PauliString {
        PauliString::parse(s, n).unwrap()
    }

    #[test]
    fn x_times_y_is_i_z() {
        let out = p("X1", 1).multiply(&p("Y1", 1)).unwrap();
        assert_eq!(out, p("+iZ1", 1));
        assert_eq!(out.prefactor(), Phase::I);
    }

    #[test]
    fn y1z2_times_z1y2_is_x1x2() {
        let out = &p("Y1 Z2", 2) * &p("Z1 Y2", 2);
        assert_eq!(out, p("+X1 X2", 2));
    }

    #[test]
    fn identity_is_neutral() {
        let a = p("-iX1 Y3 Z4", 5);
        let id = PauliString::identity(5);
        assert_eq!(&id * &a, a);
        assert_eq!(&a * &id, a);
    }

    #[test]
    fn commutation_examples() {
        assert!(!p("X1", 1).commutes(&p("Z1", 1)).unwrap());
        assert!(p("X1 X2", 2).commutes(&p("Z1 Z2", 2)).unwrap());
        assert!(!p("Z1 Z4", 8).commutes(&p("X1 X2", 8)).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(p("X1", 1).multiply(&p("X1", 2)), Err(Error::DimensionMismatch { left: 1, right: 2 })));
        assert!(p("X1", 1).commutes(&p("X1", 2)).is_err());
    }

    #[test]
    fn supports() {
        let k1 = p("X1 Z6 Z7 Z8", 12);
        assert_eq!(k1.weight(), 4);
        assert_eq!(k1.support(), Support::from_one_based([1, 6, 7, 8]));
        assert_eq!(PauliString::identity(4).weight(), 0);
        assert!(PauliString::identity(4).support().is_empty());
        let prod = &p("X1 X2", 3) * &p("X2 X3", 3);
        assert_eq!(prod.support(), Support::from_one_based([1, 3]));
    }

    #[test]
    fn hermiticity_flags() {
        assert!(p("Y1", 1).is_hermitian());
        assert!(p("-Y1 Y2", 2).is_hermitian());
        assert!(!p("+iX1", 1).is_hermitian());
        let xz = PauliString::from_parts(BitVec::from_indices(1, [0]), BitVec::from_indices(1, [0]), 0).unwrap();
        assert!(!xz.is_hermitian()); // XZ = -iY
        assert_eq!(xz, p("-iY1", 1));
    }

    #[test]
    fn text_round_trip() {
        for s in ["+X1 Z5 Z6 Z7", "-Y2", "+iX1 Y2 Z3", "-iZ4", "+I"] {
            assert_eq!(p(s, 7).to_string(), s);
        }
        assert_eq!(p("Z3 X1", 3).to_string(), "+X1 Z3");
    }

    #[test]
    fn parse_errors() {
        assert!(PauliString::parse("X0", 3).is_err());
        assert!(PauliString::parse("X4", 3).is_err());
        assert!(PauliString::parse("X1 Z1", 3).is_err());
        assert!(PauliString::parse("Q1", 3).is_err());
        assert!(PauliString::parse("", 3).is_err());
        assert!(PauliString::parse("+", 3).is_err());
    }

    #[test]
    fn translate_wraps() {
        assert_eq!(p("X1 Z8", 8).translate(1), p("Z1 X2", 8));
        assert_eq!(p("X1", 5).translate(5), p("X1", 5));
    }

    #[test]
    fn ordering_is_by_weight_then_sites() {
        let mut v = vec![p("X1 X2", 3), p("Z3", 3), p("X1", 3), p("Z1", 3)];
        v.sort();
        assert_eq!(join(&v), "+X1, +Z1, +Z3, +X1 X2");
    }
}
