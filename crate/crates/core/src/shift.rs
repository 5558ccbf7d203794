//! The representation-shift graph over `S_r`: vertices are ordered pairs
//! `(a0, a1)`, each with one out-edge `(a0, a1) -> (a1, a0^-1 * a1)`.
//!
//! The edge map is a bijection, so the graph decomposes into disjoint cycles;
//! a cycle of length `p` carries exactly `p` representations of the rank-2
//! free group subject to the recurrence `a_{m+2} = a_m^-1 * a_{m+1}` (one per
//! rotation, i.e. per iterate of the shift).

use crate::perm::{count_involutions, Degree, Perm, Rank};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// A vertex `(a0, a1)` of the shift graph; both components share one degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    a0: Perm,
    a1: Perm,
}

impl Vertex {
    /// Panics if the two components have different degrees.
    pub fn new(a0: Perm, a1: Perm) -> Self {
        assert_eq!(a0.degree(), a1.degree(), "vertex: degree mismatch");
        Vertex { a0, a1 }
    }

    pub fn a0(&self) -> Perm {
        self.a0
    }

    pub fn a1(&self) -> Perm {
        self.a1
    }

    pub fn degree(&self) -> Degree {
        self.a0.degree()
    }

    pub fn ranks(&self) -> (Rank, Rank) {
        (self.a0.rank(), self.a1.rank())
    }
}

/// One step along the unique out-edge: `(a0, a1) -> (a1, a0^-1 * a1)`.
pub fn step(v: Vertex) -> Vertex {
    let a2 = v.a0.inverse().compose(&v.a1);
    Vertex { a0: v.a1, a1: a2 }
}

/// The inverse edge map: `(a1, a2) -> (a1 * a2^-1, a1)`.
pub fn step_back(v: Vertex) -> Vertex {
    let a0 = v.a0.compose(&v.a1.inverse());
    Vertex { a0, a1: v.a0 }
}

/// Cycle classification: a cycle is type I when it passes through a vertex
/// with equal components, type II otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum CycleKind {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
}

/// A least-period solution `(a_0, ..., a_{p-1})` of the shift recurrence,
/// stored in canonical rotation: `(rank(a_0), rank(a_1))` is lexicographically
/// minimal over all rotations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftCycle {
    degree: Degree,
    seq: Vec<Perm>,
    kind: CycleKind,
}

impl ShiftCycle {
    pub fn degree(&self) -> Degree {
        self.degree
    }

    /// Least period `p` (= number of vertices on the cycle).
    pub fn period(&self) -> usize {
        self.seq.len()
    }

    /// The canonical rotation `(a_0, ..., a_{p-1})`.
    pub fn seq(&self) -> &[Perm] {
        &self.seq
    }

    pub fn ranks(&self) -> Vec<Rank> {
        self.seq.iter().map(|p| p.rank()).collect()
    }

    pub fn kind(&self) -> CycleKind {
        self.kind
    }

    /// The canonical vertex `(a_0, a_1)` (for `p = 1`, both components equal).
    pub fn canonical_vertex(&self) -> Vertex {
        let a0 = self.seq[0];
        let a1 = self.seq[1 % self.seq.len()];
        Vertex { a0, a1 }
    }

    pub fn is_trivial(&self) -> bool {
        self.seq.len() == 1 && self.seq[0].is_identity()
    }

    /// Element at position `m`, indices taken mod `p`.
    pub fn at(&self, m: usize) -> Perm {
        self.seq[m % self.seq.len()]
    }

    /// Rebuilds a cycle from its rank sequence, validating the recurrence,
    /// least-periodicity, and canonical rotation.
    pub fn from_ranks(d: Degree, ranks: &[u32]) -> crate::error::Result<ShiftCycle> {
        use crate::error::Error;
        if ranks.is_empty() {
            return Err(Error::InvalidCycle("empty sequence".into()));
        }
        let seq: Vec<Perm> = ranks
            .iter()
            .map(|&k| Perm::from_rank(Rank(k), d))
            .collect::<crate::error::Result<_>>()?;
        let p = seq.len();
        for m in 0..p {
            if seq[m].inverse().compose(&seq[(m + 1) % p]) != seq[(m + 2) % p] {
                return Err(Error::InvalidCycle(format!(
                    "recurrence fails at position {m}"
                )));
            }
        }
        for q in 1..p {
            if p % q == 0 && (0..p).all(|m| seq[m] == seq[m % q]) {
                return Err(Error::InvalidCycle(format!(
                    "period {p} is not least (repeats with {q})"
                )));
            }
        }
        let start = (seq[0].rank(), seq[1 % p].rank());
        for k in 1..p {
            if (seq[k].rank(), seq[(k + 1) % p].rank()) < start {
                return Err(Error::InvalidCycle(
                    "sequence is not in canonical rotation".into(),
                ));
            }
        }
        let kind = if (0..p).any(|m| seq[m] == seq[(m + 1) % p]) {
            CycleKind::TypeI
        } else {
            CycleKind::TypeII
        };
        Ok(ShiftCycle {
            degree: d,
            seq,
            kind,
        })
    }
}

/// The `k`-th rotation of the cycle's sequence — the `k`-th iterate of the
/// corresponding representation under the shift map.
pub fn shift_rotate(c: &ShiftCycle, k: usize) -> Vec<Perm> {
    let p = c.period();
    (0..p).map(|m| c.at(m + k)).collect()
}

/// Walks the full cycle through `v` and returns it in canonical rotation.
///
/// Termination is guaranteed: the edge map is a bijection on a finite set,
/// so the forward orbit of every vertex is a cycle.
pub fn cycle_through(v: Vertex) -> ShiftCycle {
    let mut min_vertex = v;
    let mut w = step(v);
    while w != v {
        if w < min_vertex {
            min_vertex = w;
        }
        w = step(w);
    }
    collect_from_min(min_vertex)
}

/// Collects the cycle starting from its (already known) minimal vertex.
fn collect_from_min(start: Vertex) -> ShiftCycle {
    let mut seq = vec![start.a0];
    let mut kind = if start.a0 == start.a1 {
        CycleKind::TypeI
    } else {
        CycleKind::TypeII
    };
    let mut w = step(start);
    while w != start {
        seq.push(w.a0);
        if w.a0 == w.a1 {
            kind = CycleKind::TypeI;
        }
        w = step(w);
    }
    ShiftCycle {
        degree: start.degree(),
        seq,
        kind,
    }
}

/// The decomposition of the full vertex set into disjoint cycles, sorted by
/// canonical vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleSet {
    degree: Degree,
    cycles: Vec<ShiftCycle>,
}

impl CycleSet {
    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn cycles(&self) -> &[ShiftCycle] {
        &self.cycles
    }

    pub fn iter(&self) -> impl Iterator<Item = &ShiftCycle> {
        self.cycles.iter()
    }

    /// Total number of representations = sum of periods = `(r!)^2`.
    pub fn total_reps(&self) -> u64 {
        self.cycles.iter().map(|c| c.period() as u64).sum()
    }

    pub fn count_by_kind(&self, kind: CycleKind) -> u64 {
        self.cycles.iter().filter(|c| c.kind() == kind).count() as u64
    }

    /// Rebuilds a `CycleSet` from externally stored cycles (e.g. a cache),
    /// re-sorting by canonical vertex.
    pub fn from_cycles(degree: Degree, mut cycles: Vec<ShiftCycle>) -> Self {
        cycles.sort_by_key(|c| c.canonical_vertex());
        CycleSet { degree, cycles }
    }
}

/// Decomposes the whole `(r!)^2` vertex space into cycles.
///
/// The vertex space is swept in lexicographic order of rank pairs and each
/// cycle is reported exactly once, from its minimal vertex. Work is
/// partitioned over the current rayon pool; the result is independent of the
/// worker count.
pub fn enumerate_cycles(d: Degree) -> CycleSet {
    let order = d.order() as u64;
    let elements: Vec<Perm> = d.elements().collect();
    let n_vertices = order * order;

    let vertex_of = |id: u64| -> Vertex {
        let i = (id / order) as usize;
        let j = (id % order) as usize;
        Vertex {
            a0: elements[i],
            a1: elements[j],
        }
    };
    let id_of = |v: &Vertex| -> u64 { (v.a0.rank().0 as u64 - 1) * order + (v.a1.rank().0 as u64 - 1) };

    let chunk = 4096u64;
    let n_chunks = n_vertices.div_ceil(chunk);
    let mut cycles: Vec<ShiftCycle> = (0..n_chunks)
        .into_par_iter()
        .flat_map_iter(|ci| {
            let lo = ci * chunk;
            let hi = (lo + chunk).min(n_vertices);
            (lo..hi).filter_map(move |id| {
                let v = vertex_of(id);
                // v starts a cycle record iff it is the minimal vertex of
                // its cycle; abort the walk as soon as a smaller id shows up.
                let mut w = step(v);
                while w != v {
                    if id_of(&w) < id {
                        return None;
                    }
                    w = step(w);
                }
                Some(collect_from_min(v))
            })
        })
        .collect();
    cycles.sort_by_key(|c| c.canonical_vertex());
    CycleSet { degree: d, cycles }
}

/// Closed forms for the type I side: `(1 + n_r + r!) / 2` cycles carrying
/// `3 r! - 2` representations, where `n_r` counts the involutions.
pub fn type1_closed_form(d: Degree) -> (u64, u64) {
    let n_r = count_involutions(d);
    let order = d.order() as u64;
    ((1 + n_r + order) / 2, 3 * order - 2)
}

/// Directed-graph text export: one node per vertex labeled `"(i, j)"` by
/// ranks, one edge per step, nodes emitted cycle by cycle in canonical order.
pub fn to_dot(cs: &CycleSet) -> String {
    let mut out = String::from("digraph shift {\n");
    for c in cs.iter() {
        let p = c.period();
        for m in 0..p {
            let (i, j) = (c.at(m).rank(), c.at(m + 1).rank());
            let (k, l) = (c.at(m + 1).rank(), c.at(m + 2).rank());
            let _ = writeln!(out, "  \"({i}, {j})\" -> \"({k}, {l})\";");
        }
    }
    out.push_str("}\n");
    out
}
