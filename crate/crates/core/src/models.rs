//! Ready-made stabilizer states with their parent Hamiltonians and expected
//! thermal profiles.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamiltonian::PauliHamiltonian;
use crate::mite;
use crate::parent::{self, Factorization};
use crate::pauli::{Pauli, PauliString};
use crate::stabilizer::StabilizerTableau;

/// Model identifiers accepted by [`build`].
pub const MODEL_NAMES: [&str; 4] = ["eap", "g1", "g2", "cluster"];

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClaimKind {
    /// `H|ψ⟩ = 0`.
    ZeroEnergy,
    KBodyMite(usize),
    LLocalMite(usize),
    /// `element ∈ G`, so the state is not maximally mixed on its support.
    Witness(PauliString),
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimKind::ZeroEnergy => f.write_str("zero-energy eigenstate"),
            ClaimKind::KBodyMite(k) => write!(f, "{k}-body MITE"),
            ClaimKind::LLocalMite(l) => write!(f, "{l}-local MITE"),
            ClaimKind::Witness(g) => write!(f, "not MITE on {} (witness {g})", g.support()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Claim {
    pub kind: ClaimKind,
    /// `None` marks a quantity that is computed and reported but has no
    /// stated expectation.
    pub expected: Option<bool>,
    pub source: &'static str,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub observed: bool,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        self.claim.expected.is_none_or(|e| e == self.observed)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelBundle {
    pub name: String,
    pub tableau: StabilizerTableau,
    pub graph: Option<Graph>,
    pub hamiltonian: Option<PauliHamiltonian>,
    /// Named couplings used to build `hamiltonian`.
    pub couplings: Vec<(String, Coeff)>,
    /// Translation-orbit representatives of the factorizations whose
    /// bundles make up `hamiltonian`, one per coupling.
    pub bundles: Vec<Factorization>,
    pub claims: Vec<Claim>,
}

impl ModelBundle {
    pub fn n_qubits(&self) -> usize {
        self.tableau.n_qubits()
    }

    pub fn evaluate(&self, kind: &ClaimKind) -> Result<bool> {
        let t = &self.tableau;
        Ok(match kind {
            ClaimKind::ZeroEnergy => match &self.hamiltonian {
                Some(h) => parent::verify_zero_eigenstate(h, t)?,
                None => return Err(Error::InvalidArgument(alloc::format!("model {} has no Hamiltonian", self.name))),
            },
            ClaimKind::KBodyMite(k) => mite::k_body_mite(t, *k).holds,
            ClaimKind::LLocalMite(l) => mite::l_local_mite(t, *l).holds,
            ClaimKind::Witness(g) => t.contains(g) && !mite::is_mite_on(t, &g.support()).holds,
        })
    }

    /// Evaluates every claim. A claim fails when the observed value differs
    /// from an explicit expectation.
    pub fn check_claims(&self) -> Result<Vec<ClaimOutcome>> {
        self.claims.iter().map(|c| Ok(ClaimOutcome { claim: c.clone(), observed: self.evaluate(&c.kind)? })).collect()
    }
}

fn claim(kind: ClaimKind, expected: bool, source: &'static str) -> Claim {
    Claim { kind, expected: Some(expected), source }
}

fn report(kind: ClaimKind, source: &'static str) -> Claim {
    Claim { kind, expected: None, source }
}

fn sparse(n: usize, letters: &[(usize, Pauli)]) -> PauliString {
    PauliString::from_sparse(n, letters.iter().map(|&(s, l)| (s % n, l)))
}

/// Generators `X_i X_{i+N/2}`, `Z_i Z_{i+N/2}` for `i < N/2`.
pub fn eap_tableau(n: usize) -> Result<StabilizerTableau> {
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let h = n / 2;
    let gens: Vec<PauliString> =
        (0..h).flat_map(|i| [sparse(n, &[(i, Pauli::X), (i + h, Pauli::X)]), sparse(n, &[(i, Pauli::Z), (i + h, Pauli::Z)])]).collect();
    StabilizerTableau::from_generators(&gens)
}

pub fn eap_model(n: usize) -> Result<ModelBundle> {
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    let h = n / 2;
    Ok(ModelBundle {
        name: "eap".to_string(),
        tableau: eap_tableau(n)?,
        graph: None,
        hamiltonian: None,
        couplings: Vec::new(),
        bundles: Vec::new(),
        claims: alloc::vec![
            claim(ClaimKind::KBodyMite(1), true, "every single-site marginal of an antipodal Bell-pair state is maximally mixed"),
            claim(ClaimKind::KBodyMite(2), false, "antipodal pair correlations deviate from thermal values at the two-body level"),
            claim(
                ClaimKind::Witness(sparse(n, &[(0, Pauli::X), (h, Pauli::X)])),
                true,
                "the pair operator on sites 1 and 1+N/2 is a stabilizer"
            ),
            claim(ClaimKind::LLocalMite(h), true, "no window of N/2 consecutive sites contains a full antipodal pair"),
        ],
    })
}

/// `J Σ_i (Z_i Z_{i+3} − X_i X_{i+1})`.
pub fn g1_hamiltonian(n: usize, j: &Coeff) -> Result<PauliHamiltonian> {
    let mut h = PauliHamiltonian::new(n);
    for i in 0..n {
        h.add_term(&sparse(n, &[(i, Pauli::Z), (i + 3, Pauli::Z)]), j.clone())?;
        h.add_term(&sparse(n, &[(i, Pauli::X), (i + 1, Pauli::X)]), -j.clone())?;
    }
    Ok(h)
}

/// The factorization `K^{(0)} K^{(1)} = (Z_{N/2−1} Z_{N/2+2})(X_0 X_1)` whose
/// translates generate the G₁ Hamiltonian.
pub fn g1_bundle(n: usize) -> Result<Factorization> {
    let g = Graph::g1(n)?;
    let h = n / 2;
    let elem = g.stabilizer_generator(0).multiply(&g.stabilizer_generator(1))?;
    let p = sparse(n, &[(h - 1, Pauli::Z), (h + 2, Pauli::Z)]);
    let q = sparse(n, &[(0, Pauli::X), (1, Pauli::X)]);
    Factorization::from_parts(elem, p, q).ok_or_else(|| Error::InvalidArgument("bundle does not factor the element".to_string()))
}

pub fn g1_model(n: usize, j: Coeff) -> Result<ModelBundle> {
    let graph = Graph::g1(n)?;
    let h = n / 2;
    Ok(ModelBundle {
        name: "g1".to_string(),
        tableau: graph.to_stabilizer(),
        hamiltonian: Some(g1_hamiltonian(n, &j)?),
        couplings: alloc::vec![("J".to_string(), j)],
        bundles: alloc::vec![g1_bundle(n)?],
        claims: alloc::vec![
            claim(ClaimKind::ZeroEnergy, true, "summing (Z Z − X X)|G1⟩ = 0 over all sites annihilates the state"),
            claim(ClaimKind::KBodyMite(3), true, "the graph criterion holds for every three-site subset when N ≥ 8"),
            claim(ClaimKind::KBodyMite(4), false, "the four-site support of a graph generator is not maximally mixed"),
            claim(ClaimKind::Witness(graph.stabilizer_generator(0)), true, "K(1) is a weight-four stabilizer"),
            claim(ClaimKind::LLocalMite(h - 1), true, "windows of N/2 − 1 consecutive sites are maximally mixed"),
            report(ClaimKind::LLocalMite(h), "computed only; no stated expectation for windows of N/2 sites"),
        ],
        graph: Some(graph),
    })
}

/// `Σ_i [J₁(Z_i Z_{i+2} − X_i X_{i+1}) + J₂(Z_i Z_{i+1} − X_i) + J₃(Y_i Z_{i+1} − Z_i Y_{i+1})]`.
pub fn g2_hamiltonian(n: usize, j1: &Coeff, j2: &Coeff, j3: &Coeff) -> Result<PauliHamiltonian> {
    let mut h = PauliHamiltonian::new(n);
    for i in 0..n {
        h.add_term(&sparse(n, &[(i, Pauli::Z), (i + 2, Pauli::Z)]), j1.clone())?;
        h.add_term(&sparse(n, &[(i, Pauli::X), (i + 1, Pauli::X)]), -j1.clone())?;
        h.add_term(&sparse(n, &[(i, Pauli::Z), (i + 1, Pauli::Z)]), j2.clone())?;
        h.add_term(&sparse(n, &[(i, Pauli::X)]), -j2.clone())?;
        h.add_term(&sparse(n, &[(i, Pauli::Y), (i + 1, Pauli::Z)]), j3.clone())?;
        h.add_term(&sparse(n, &[(i, Pauli::Z), (i + 1, Pauli::Y)]), -j3.clone())?;
    }
    Ok(h)
}

/// Orbit representatives of the three G₂ bundles, in the order `J₁, J₂, J₃`:
///
/// - `K^{(0)}K^{(1)} = (Z_h Z_{h+2})(X_0 X_1)`,
/// - `K^{(0)} = (Z_h Z_{h+1})(X_0)`,
/// - `K^{(0)}K^{(h+1)} = (Y_0 Z_1)(Z_h Y_{h+1})`,
///
/// with `h = (N−1)/2`.
pub fn g2_bundles(n: usize) -> Result<[Factorization; 3]> {
    let g = Graph::g2(n)?;
    let h = (n - 1) / 2;
    let k = |v: usize| g.stabilizer_generator(v % n);
    let mk = |elem: PauliString, p: PauliString, q: PauliString| {
        Factorization::from_parts(elem, p, q).ok_or_else(|| Error::InvalidArgument("bundle does not factor the element".to_string()))
    };
    Ok([
        mk(k(0).multiply(&k(1))?, sparse(n, &[(h, Pauli::Z), (h + 2, Pauli::Z)]), sparse(n, &[(0, Pauli::X), (1, Pauli::X)]))?,
        mk(k(0), sparse(n, &[(h, Pauli::Z), (h + 1, Pauli::Z)]), sparse(n, &[(0, Pauli::X)]))?,
        mk(k(0).multiply(&k(h + 1))?, sparse(n, &[(0, Pauli::Y), (1, Pauli::Z)]), sparse(n, &[(h, Pauli::Z), (h + 1, Pauli::Y)]))?,
    ])
}

pub fn g2_model(n: usize, j1: Coeff, j2: Coeff, j3: Coeff) -> Result<ModelBundle> {
    let graph = Graph::g2(n)?;
    let h = (n - 1) / 2;
    Ok(ModelBundle {
        name: "g2".to_string(),
        tableau: graph.to_stabilizer(),
        hamiltonian: Some(g2_hamiltonian(n, &j1, &j2, &j3)?),
        bundles: g2_bundles(n)?.to_vec(),
        couplings: alloc::vec![("J1".to_string(), j1), ("J2".to_string(), j2), ("J3".to_string(), j3)],
        claims: alloc::vec![
            claim(ClaimKind::ZeroEnergy, true, "the star-cluster state is a zero-energy eigenstate for arbitrary real couplings"),
            claim(ClaimKind::KBodyMite(2), true, "the graph criterion holds for every pair of sites"),
            claim(ClaimKind::KBodyMite(3), false, "graph generators have weight three"),
            claim(ClaimKind::LLocalMite(h), true, "windows of (N−1)/2 consecutive sites are maximally mixed"),
        ],
        graph: Some(graph),
    })
}

pub fn cluster_1d_model(n: usize) -> Result<ModelBundle> {
    let graph = Graph::cycle(n)?;
    let witness = sparse(n, &[(0, Pauli::Z), (1, Pauli::X), (2, Pauli::Z)]);
    let claims = if n >= 5 {
        alloc::vec![
            claim(ClaimKind::LLocalMite(3), false, "stabilizers act on three consecutive sites"),
            claim(ClaimKind::Witness(witness), true, "Z X Z on three consecutive sites is a stabilizer"),
            claim(ClaimKind::LLocalMite(2), true, "no stabilizer fits inside two consecutive sites"),
            claim(ClaimKind::KBodyMite(2), true, "minimum stabilizer weight is three on rings of at least five sites"),
        ]
    } else {
        alloc::vec![
            report(ClaimKind::LLocalMite(2), "computed only on small rings"),
            report(ClaimKind::LLocalMite(3), "computed only on small rings"),
            report(ClaimKind::KBodyMite(2), "computed only on small rings"),
        ]
    };
    Ok(ModelBundle {
        name: "cluster".to_string(),
        tableau: graph.to_stabilizer(),
        graph: Some(graph),
        hamiltonian: None,
        couplings: Vec::new(),
        bundles: Vec::new(),
        claims,
    })
}

/// Builds a model by name. `couplings` fills `J` (g1) or `J1, J2, J3` (g2)
/// in order; missing entries default to 1.
pub fn build(name: &str, n: usize, couplings: &[Coeff]) -> Result<ModelBundle> {
    let c = |i: usize| couplings.get(i).cloned().unwrap_or_else(crate::coeff::one);
    match name {
        "eap" => eap_model(n),
        "g1" => g1_model(n, c(0)),
        "g2" => g2_model(n, c(0), c(1), c(2)),
        "cluster" => cluster_1d_model(n),
        other => Err(Error::InvalidArgument(alloc::format!("unknown model `{other}` (expected one of eap, g1, g2, cluster)"))),
    }
}
