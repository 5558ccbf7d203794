//! Level-by-level extension of shift cycles up the tower of commutator
//! subgroups `K_3 ⊂ K_4 ⊂ ... ⊂ K_n`, and lifts to the braid groups `B_n`.
//!
//! A representation of `K_n` is a cycle rotation `(a_0, ..., a_{p-1})` plus
//! values `b_3, ..., b_{n-1}` for the remaining generators. The defining
//! relations are:
//!
//! * `a_m a_{m+2} = a_{m+1}` (the shift recurrence, built into the cycle);
//! * `a_m b_3 a_{m+2} = b_3 a_{m+1} b_3` for all `m`;
//! * `a_m b_i = b_i a_{m+1}` for `i >= 4` and all `m`;
//! * `b_i b_j = b_j b_i` for `|i-j| >= 2`, and
//!   `b_i b_j b_i = b_j b_i b_j` for `|i-j| = 1`.
//!
//! All relation families are quantified over every `m` mod `p`, so validity
//! of a `b`-sequence does not depend on the rotation; enumeration therefore
//! works on whole cycles ("classes") and expands to individual
//! representations only on demand.

use crate::error::{Error, Result};
use crate::perm::{Degree, Perm};
use crate::shift::{enumerate_cycles, shift_rotate, ShiftCycle};
use rayon::prelude::*;

/// A cycle together with a valid `b`-sequence: the orbit of `p`
/// representations of `K_n`, one per rotation (`n = 3 + bseq.len()`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TowerClass {
    cycle: ShiftCycle,
    bseq: Vec<Perm>,
}

impl TowerClass {
    pub fn new(cycle: ShiftCycle, bseq: Vec<Perm>) -> Self {
        TowerClass { cycle, bseq }
    }

    pub fn cycle(&self) -> &ShiftCycle {
        &self.cycle
    }

    /// The values `(b_3, ..., b_{n-1})`; empty at level 3.
    pub fn bseq(&self) -> &[Perm] {
        &self.bseq
    }

    pub fn level(&self) -> u32 {
        3 + self.bseq.len() as u32
    }

    pub fn degree(&self) -> Degree {
        self.cycle.degree()
    }

    pub fn period(&self) -> usize {
        self.cycle.period()
    }

    /// Number of representations in this class (= the period).
    pub fn rep_count(&self) -> u64 {
        self.period() as u64
    }

    /// True when every generator image is the identity.
    pub fn is_trivial(&self) -> bool {
        self.cycle.is_trivial() && self.bseq.iter().all(|b| b.is_identity())
    }

    pub fn has_nontrivial_bseq(&self) -> bool {
        self.bseq.iter().any(|b| !b.is_identity())
    }

    /// The generator images `{a_0, ..., a_{p-1}, b_3, ..., b_{n-1}}`.
    pub fn generators(&self) -> Vec<Perm> {
        let mut gens = self.cycle.seq().to_vec();
        gens.extend_from_slice(&self.bseq);
        gens
    }

    pub fn rep(&self, rotation: usize) -> TowerRep {
        TowerRep {
            cycle: self.cycle.clone(),
            rotation: rotation % self.period(),
            bseq: self.bseq.clone(),
        }
    }

    /// All `p` representations of the class.
    pub fn reps(&self) -> impl Iterator<Item = TowerRep> + '_ {
        (0..self.period()).map(move |k| self.rep(k))
    }
}

/// One representation of `K_n`: a cycle, a rotation, and the `b`-sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TowerRep {
    cycle: ShiftCycle,
    rotation: usize,
    bseq: Vec<Perm>,
}

impl TowerRep {
    pub fn level(&self) -> u32 {
        3 + self.bseq.len() as u32
    }

    pub fn cycle(&self) -> &ShiftCycle {
        &self.cycle
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn bseq(&self) -> &[Perm] {
        &self.bseq
    }

    /// The rotated sequence `(a_0, ..., a_{p-1})` of this representation.
    pub fn seq(&self) -> Vec<Perm> {
        shift_rotate(&self.cycle, self.rotation)
    }

    /// Checks the complete defining relation set from scratch.
    pub fn satisfies_relations(&self) -> bool {
        check_relations(&self.seq(), &self.bseq)
    }
}

/// Full relation check for a candidate `(a`-sequence, `b`-sequence`)` pair,
/// independent of how it was produced.
pub fn check_relations(seq: &[Perm], bseq: &[Perm]) -> bool {
    let p = seq.len();
    let at = |m: usize| seq[m % p];
    // shift recurrence
    for m in 0..p {
        if at(m).compose(&at(m + 2)) != at(m + 1) {
            return false;
        }
    }
    // mixed relation for b_3
    if let Some(b3) = bseq.first() {
        for m in 0..p {
            if at(m).compose(b3).compose(&at(m + 2)) != b3.compose(&at(m + 1)).compose(b3) {
                return false;
            }
        }
    }
    // b_i (i >= 4) commutes with the shift: a_m b_i = b_i a_{m+1}
    for b in bseq.iter().skip(1) {
        for m in 0..p {
            if at(m).compose(b) != b.compose(&at(m + 1)) {
                return false;
            }
        }
    }
    // relations among the b_i themselves
    for i in 0..bseq.len() {
        for j in i + 1..bseq.len() {
            let (x, y) = (&bseq[i], &bseq[j]);
            if j - i == 1 {
                if x.compose(y).compose(x) != y.compose(x).compose(y) {
                    return false;
                }
            } else if x.compose(y) != y.compose(x) {
                return false;
            }
        }
    }
    true
}

/// True iff `x` intertwines consecutive terms: `a_m x = x a_{m+1}` for all
/// `m` mod `p`.
fn intertwines(seq: &[Perm], x: &Perm) -> bool {
    let p = seq.len();
    (0..p).all(|m| seq[m].compose(x) == x.compose(&seq[(m + 1) % p]))
}

fn commutes(x: &Perm, y: &Perm) -> bool {
    x.compose(y) == y.compose(x)
}

fn braids(x: &Perm, y: &Perm) -> bool {
    x.compose(y).compose(x) == y.compose(x).compose(y)
}

/// The extension relation from `K_3` to `K_4`:
/// `a_m b_3 a_{m+2} = b_3 a_{m+1} b_3` for all `m` mod `p`.
/// Panics if the degrees differ.
pub fn check_k4(cycle: &ShiftCycle, b3: &Perm) -> bool {
    assert_eq!(cycle.degree(), b3.degree(), "check_k4: degree mismatch");
    let p = cycle.period();
    (0..p).all(|m| {
        cycle.at(m).compose(b3).compose(&cycle.at(m + 2))
            == b3.compose(&cycle.at(m + 1)).compose(b3)
    })
}

/// All candidates for the next generator image `b_n` of a level-`n` class
/// (`n >= 4`), identity included. The conditions are exactly the new
/// relations the added generator must satisfy:
///
/// * `a_m x = x a_{m+1}` for all `m` (checked first; strongest filter),
/// * `x b_i = b_i x` for `3 <= i <= n-2`,
/// * `x b_{n-1} x = b_{n-1} x b_{n-1}`.
pub fn valid_b_next(class: &TowerClass) -> Vec<Perm> {
    assert!(class.level() >= 4, "valid_b_next: level must be >= 4");
    let seq = class.cycle.seq();
    let (last, commuting) = class.bseq.split_last().expect("level >= 4 has b values");
    class
        .degree()
        .elements()
        .filter(|x| {
            intertwines(seq, x)
                && commuting.iter().all(|b| commutes(x, b))
                && braids(x, last)
        })
        .collect()
}

/// All `c` satisfying the braid-lift conditions for a class:
/// `a_m c = c a_{m+1}` for all `m`, and `c b_i = b_i c` for every `i`.
pub fn braid_intertwiners(class: &TowerClass) -> Vec<Perm> {
    let seq = class.cycle.seq();
    class
        .degree()
        .elements()
        .filter(|c| intertwines(seq, c) && class.bseq.iter().all(|b| commutes(c, b)))
        .collect()
}

/// The set `Hom(K_n, S_r)`, held as classes (cycle + `b`-sequence); each
/// class stands for `period` representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnHom {
    degree: Degree,
    level: u32,
    classes: Vec<TowerClass>,
}

impl KnHom {
    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn classes(&self) -> &[TowerClass] {
        &self.classes
    }

    /// `|Hom(K_n, S_r)|`: one representation per class rotation.
    pub fn total_reps(&self) -> u64 {
        self.classes.iter().map(|c| c.rep_count()).sum()
    }

    pub fn nontrivial_classes(&self) -> impl Iterator<Item = &TowerClass> {
        self.classes.iter().filter(|c| !c.is_trivial())
    }

    /// Materializes every representation (use at small scales only).
    pub fn all_reps(&self) -> Vec<TowerRep> {
        self.classes.iter().flat_map(|c| c.reps()).collect()
    }

    pub fn from_classes(degree: Degree, level: u32, mut classes: Vec<TowerClass>) -> Self {
        classes.sort_by_key(class_sort_key);
        KnHom { degree, level, classes }
    }
}

fn class_sort_key(c: &TowerClass) -> (crate::shift::Vertex, Vec<crate::perm::Rank>) {
    (
        c.cycle.canonical_vertex(),
        c.bseq.iter().map(|b| b.rank()).collect(),
    )
}

/// Enumerates `Hom(K_n, S_r)` level by level. Identity-valued `b` branches
/// are kept (they carry the correct representation counts at `n < 5`); each
/// class reports its own triviality.
pub fn enumerate_hom_kn(n: u32, d: Degree) -> Result<KnHom> {
    if n < 3 {
        return Err(Error::InvalidLevel {
            n,
            reason: "the tower starts at level 3".into(),
        });
    }
    let cycles = enumerate_cycles(d);
    let mut classes: Vec<TowerClass> = cycles
        .cycles()
        .iter()
        .map(|c| TowerClass {
            cycle: c.clone(),
            bseq: Vec::new(),
        })
        .collect();
    for _ in 3..n {
        classes = extend_classes(&classes, d);
    }
    Ok(KnHom::from_classes(d, n, classes))
}

fn extend_classes(classes: &[TowerClass], d: Degree) -> Vec<TowerClass> {
    let elements: Vec<Perm> = d.elements().collect();
    classes
        .par_iter()
        .flat_map_iter(|class| {
            let candidates: Vec<Perm> = if class.level() == 3 {
                elements
                    .iter()
                    .filter(|b| check_k4(&class.cycle, b))
                    .copied()
                    .collect()
            } else {
                valid_b_next(class)
            };
            candidates.into_iter().map(move |b| {
                let mut bseq = class.bseq.clone();
                bseq.push(b);
                TowerClass {
                    cycle: class.cycle.clone(),
                    bseq,
                }
            })
        })
        .collect()
}

/// A class of braid-group representations: a `K_n` class together with all
/// its lift values `c` (images of the first braid generator).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidClass {
    tower: TowerClass,
    lifts: Vec<Perm>,
}

impl BraidClass {
    pub fn new(tower: TowerClass, mut lifts: Vec<Perm>) -> Self {
        lifts.sort_by_key(|c| c.rank());
        BraidClass { tower, lifts }
    }

    pub fn tower(&self) -> &TowerClass {
        &self.tower
    }

    pub fn lifts(&self) -> &[Perm] {
        &self.lifts
    }

    pub fn rep_count(&self) -> u64 {
        self.tower.rep_count() * self.lifts.len() as u64
    }

    pub fn reps(&self) -> impl Iterator<Item = BraidRep> + '_ {
        self.tower
            .reps()
            .flat_map(move |rep| self.lifts.iter().map(move |&c| BraidRep { rep: rep.clone(), c }))
    }
}

/// One representation of `B_n`: a representation of `K_n` plus the braid
/// lift value `c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidRep {
    pub rep: TowerRep,
    pub c: Perm,
}

impl BraidRep {
    /// Checks the lift conditions on this concrete rotation.
    pub fn satisfies_relations(&self) -> bool {
        let seq = self.rep.seq();
        self.rep.satisfies_relations()
            && intertwines(&seq, &self.c)
            && self.rep.bseq().iter().all(|b| commutes(&self.c, b))
    }
}

/// The set `Hom(B_n, S_r)` as classes; each class stands for
/// `period * lifts.len()` representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BnHom {
    degree: Degree,
    level: u32,
    classes: Vec<BraidClass>,
}

impl BnHom {
    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn classes(&self) -> &[BraidClass] {
        &self.classes
    }

    pub fn total_reps(&self) -> u64 {
        self.classes.iter().map(|c| c.rep_count()).sum()
    }

    pub fn all_reps(&self) -> Vec<BraidRep> {
        self.classes.iter().flat_map(|c| c.reps()).collect()
    }

    pub fn from_classes(degree: Degree, level: u32, mut classes: Vec<BraidClass>) -> Self {
        classes.sort_by_key(|b| class_sort_key(&b.tower));
        BnHom {
            degree,
            level,
            classes,
        }
    }
}

/// Enumerates `Hom(B_n, S_r)` directly: every `K_n` class is solved for its
/// lift values; classes without lifts are dropped.
pub fn enumerate_hom_bn(n: u32, d: Degree) -> Result<BnHom> {
    let kn = enumerate_hom_kn(n, d)?;
    let classes: Vec<BraidClass> = kn
        .classes()
        .par_iter()
        .filter_map(|class| {
            let lifts = braid_intertwiners(class);
            if lifts.is_empty() {
                None
            } else {
                Some(BraidClass {
                    tower: class.clone(),
                    lifts,
                })
            }
        })
        .collect();
    Ok(BnHom {
        degree: d,
        level: n,
        classes,
    })
}

/// Enumerates `Hom(B_n, S_r)` by the interleaved ladder: rung `i` derives
/// both `Hom(B_i, S_r)` and `Hom(K_{i+1}, S_r)` from `Hom(K_i, S_r)` and
/// `Hom(B_{i-1}, S_r)`, testing only the commuting/braiding condition of `c`
/// against the newest generator image. Must agree with
/// [`enumerate_hom_bn`]; the equivalence is covered by tests.
pub fn enumerate_hom_bn_ladder(n: u32, d: Degree) -> Result<BnHom> {
    if n < 3 {
        return Err(Error::InvalidLevel {
            n,
            reason: "braid groups are handled from level 3 up".into(),
        });
    }
    // base rungs: Hom(K_3) = the cycles; Hom(B_3) by solving the intertwiner
    // condition on bare cycles; Hom(K_4) by the b_3 relation.
    let k3 = enumerate_hom_kn(3, d)?;
    let mut bn_prev: Vec<BraidClass> = k3
        .classes()
        .iter()
        .filter_map(|class| {
            let lifts = braid_intertwiners(class);
            (!lifts.is_empty()).then(|| BraidClass {
                tower: class.clone(),
                lifts,
            })
        })
        .collect();
    if n == 3 {
        bn_prev.sort_by_key(|b| class_sort_key(&b.tower));
        return Ok(BnHom {
            degree: d,
            level: 3,
            classes: bn_prev,
        });
    }
    let mut kn_cur = enumerate_hom_kn(4, d)?;
    let mut i = 4;
    loop {
        // here: kn_cur = Hom(K_i), bn_prev = Hom(B_{i-1})
        let bn_cur = rung_braid(&kn_cur, &bn_prev);
        if i == n {
            let mut classes = bn_cur;
            classes.sort_by_key(|b| class_sort_key(&b.tower));
            return Ok(BnHom {
                degree: d,
                level: n,
                classes,
            });
        }
        let kn_next = KnHom::from_classes(d, i + 1, rung_tower(&kn_cur, &bn_prev));
        kn_cur = kn_next;
        bn_prev = bn_cur;
        i += 1;
    }
}

fn braid_prefix_index(
    prev_bn: &[BraidClass],
) -> std::collections::HashMap<(crate::shift::Vertex, Vec<crate::perm::Rank>), &BraidClass> {
    prev_bn
        .iter()
        .map(|b| (class_sort_key(&b.tower), b))
        .collect()
}

/// Rung `i`, braid half: `[C, b_3..b_{i-1}]` moves up to `Hom(B_i)` with
/// every prefix-compatible `c` that commutes with `b_{i-1}`.
fn rung_braid(kn: &KnHom, prev_bn: &[BraidClass]) -> Vec<BraidClass> {
    let index = braid_prefix_index(prev_bn);
    let mut out = Vec::new();
    for class in kn.classes() {
        let prefix = TowerClass {
            cycle: class.cycle.clone(),
            bseq: class.bseq[..class.bseq.len() - 1].to_vec(),
        };
        let Some(prev) = index.get(&class_sort_key(&prefix)) else {
            continue;
        };
        let newest = class.bseq.last().expect("rungs start above level 3");
        let lifts: Vec<Perm> = prev
            .lifts
            .iter()
            .filter(|c| commutes(c, newest))
            .copied()
            .collect();
        if !lifts.is_empty() {
            out.push(BraidClass {
                tower: class.clone(),
                lifts,
            });
        }
    }
    out
}

/// Rung `i`, tower half: `[C, b_3..b_{i-1}]` moves up to `Hom(K_{i+1})` by
/// taking `b_i = c` for every prefix-compatible `c` that braids with
/// `b_{i-1}`.
fn rung_tower(kn: &KnHom, prev_bn: &[BraidClass]) -> Vec<TowerClass> {
    let index = braid_prefix_index(prev_bn);
    let mut out = Vec::new();
    for class in kn.classes() {
        let prefix = TowerClass {
            cycle: class.cycle.clone(),
            bseq: class.bseq[..class.bseq.len() - 1].to_vec(),
        };
        let Some(prev) = index.get(&class_sort_key(&prefix)) else {
            continue;
        };
        let newest = class.bseq.last().expect("rungs start above level 3");
        for c in prev.lifts.iter().filter(|c| braids(c, newest)) {
            let mut bseq = class.bseq.clone();
            bseq.push(*c);
            out.push(TowerClass {
                cycle: class.cycle.clone(),
                bseq,
            });
        }
    }
    out
}

/// True iff every generator image of every class is even. All classes must
/// sit at one common level `n >= 5`.
pub fn parity_audit(classes: &[TowerClass]) -> Result<bool> {
    if let Some(first) = classes.first() {
        let n = first.level();
        if n < 5 {
            return Err(Error::InvalidLevel {
                n,
                reason: "parity audit applies from level 5 up".into(),
            });
        }
        if classes.iter().any(|c| c.level() != n) {
            return Err(Error::InvalidLevel {
                n,
                reason: "parity audit requires a common level".into(),
            });
        }
    }
    Ok(classes.iter().all(|c| {
        c.generators()
            .iter()
            .all(|g| g.parity() == crate::perm::Parity::Even)
    }))
}
