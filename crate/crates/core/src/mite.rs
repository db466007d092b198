//! Microscopic thermal equilibrium at infinite temperature.
//!
//! A stabilizer state is maximally mixed on `A` iff no nonidentity element of
//! its group is supported inside `A`. Scans report the first violating
//! subsystem in colex order (windows: by starting site) together with the
//! first canonical generator of the subgroup supported there.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{PauliString, Support};
use crate::stabilizer::StabilizerTableau;

/// Which thermal property a verdict is about.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MiteProperty {
    KBody(usize),
    LLocal(usize),
    Subsystem(Support),
}

impl fmt::Display for MiteProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MiteProperty::KBody(k) => write!(f, "{k}-body"),
            MiteProperty::LLocal(l) => write!(f, "{l}-local"),
            MiteProperty::Subsystem(a) => write!(f, "subsystem {a}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MiteVerdict {
    pub property: MiteProperty,
    pub holds: bool,
    /// A subsystem where the reduced state is not maximally mixed, and a
    /// group element supported inside it.
    pub violating_witness: Option<(Support, PauliString)>,
}

impl MiteVerdict {
    fn from_scan(property: MiteProperty, hit: Option<(Support, Vec<PauliString>)>) -> Self {
        let violating_witness = hit.map(|(a, sub)| (a, sub.into_iter().next().expect("nonempty subgroup")));
        MiteVerdict { property, holds: violating_witness.is_none(), violating_witness }
    }
}

pub fn is_mite_on(t: &StabilizerTableau, a: &Support) -> MiteVerdict {
    let sub = t.subgroup_supported_in(a);
    let hit = (!sub.is_empty()).then(|| (a.clone(), sub));
    MiteVerdict::from_scan(MiteProperty::Subsystem(a.clone()), hit)
}

/// MITE on every `k`-subset; equivalent to `k < δ(G)`.
pub fn k_body_mite(t: &StabilizerTableau, k: usize) -> MiteVerdict {
    assert!(k >= 1 && k <= t.n_qubits(), "k must lie in 1..=N");
    MiteVerdict::from_scan(MiteProperty::KBody(k), t.first_supported_subset(k))
}

/// MITE on every cyclic window of `l` consecutive sites.
pub fn l_local_mite(t: &StabilizerTableau, l: usize) -> MiteVerdict {
    let n = t.n_qubits();
    assert!(l >= 1 && l <= n, "l must lie in 1..=N");
    let starts = if l == n { 1 } else { n };
    let hit = (0..starts).find_map(|s| {
        let a = Support::window(s, l, n);
        t.has_element_supported_in(&a).then(|| {
            let sub = t.subgroup_supported_in(&a);
            (a, sub)
        })
    });
    MiteVerdict::from_scan(MiteProperty::LLocal(l), hit)
}

/// Largest `l` with `l`-local MITE (0 if even single sites fail).
pub fn max_local(t: &StabilizerTableau) -> usize {
    (1..=t.n_qubits()).take_while(|&l| l_local_mite(t, l).holds).last().unwrap_or(0)
}

/// Largest `k` with `k`-body MITE, i.e. `δ(G) - 1`.
pub fn max_uniformity(t: &StabilizerTableau) -> usize {
    t.distance() - 1
}

/// Largest subset size accepted by [`graph_mite_criterion`].
pub const GRAPH_CRITERION_LIMIT: usize = 24;

/// Graph-state test for MITE on `a`: every nonempty `B ⊆ a` has some vertex
/// outside `a` with an odd number of neighbours in `B`.
pub fn graph_mite_criterion(g: &Graph, a: &Support) -> Result<bool> {
    let m = a.len();
    if m > GRAPH_CRITERION_LIMIT {
        return Err(Error::SubsetLimitExceeded { size: m, limit: GRAPH_CRITERION_LIMIT });
    }
    let n = g.n_vertices();
    let outside = a.complement(n).to_bitvec(n);
    let members = a.as_slice();
    // Walk all nonempty B in Gray-code order, keeping the XOR of their
    // adjacency rows.
    let mut parity = BitVec::zeros(n);
    for i in 1u64..(1u64 << m) {
        let flip = i.trailing_zeros() as usize;
        parity.xor_assign(g.neighbor_bits(members[flip]));
        if parity.and_count(&outside) == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
