//! Transitive-representation counts, subgroup-index counts, and probes of
//! the two triviality/transitivity conjectures.
//!
//! A subgroup of index exactly `r` pulls back to `(r-1)!` transitive
//! representations into `S_r`, so subgroup counts are transitive counts
//! divided by `(r-1)!`; non-divisibility can only come from a counting bug
//! and is treated as one.

use crate::error::{Error, Result};
use crate::perm::{is_transitive, Degree};
use crate::shift::CycleKind;
use crate::tower::{enumerate_hom_bn, enumerate_hom_kn, KnHom};
use serde::{Deserialize, Serialize};

/// Counts for one `(n, r)` pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: u32,
    pub degree: u8,
    pub total_reps: u64,
    /// Distinct type I cycles underlying at least one representation.
    pub type1_cycles: u64,
    /// Distinct type II cycles underlying at least one representation.
    pub type2_cycles: u64,
    pub transitive_reps: u64,
    pub subgroup_count: u64,
    /// Set when `(n, r)` falls in the conjectures' domain (`n >= 5`,
    /// `r <= n`), absent otherwise.
    pub conjecture_holds: Option<bool>,
}

fn factorial(k: u8) -> u64 {
    (1..=k as u64).product()
}

/// Number of representations in `Hom(K_n, S_r)` whose generator images act
/// with a single orbit; each transitive class contributes its period.
pub fn transitive_reps(n: u32, d: Degree) -> Result<u64> {
    Ok(transitive_reps_of(&enumerate_hom_kn(n, d)?))
}

pub(crate) fn transitive_reps_of(hom: &KnHom) -> u64 {
    hom.classes()
        .iter()
        .filter(|c| is_transitive(&c.generators(), c.degree()))
        .map(|c| c.rep_count())
        .sum()
}

/// Closed form for the transitive representations on the type I side:
/// `3 (r-1)!` (the cycles of the `r`-cycles of `S_r`).
pub fn transitive_type1_closed_form(d: Degree) -> u64 {
    3 * factorial(d.get() - 1)
}

/// Number of subgroups of `K_n` with index exactly `r`.
/// Panics if the transitive count is not divisible by `(r-1)!`.
pub fn subgroup_count(n: u32, d: Degree) -> Result<u64> {
    let transitive = transitive_reps(n, d)?;
    let divisor = factorial(d.get() - 1);
    assert_eq!(
        transitive % divisor,
        0,
        "transitive count {transitive} not divisible by (r-1)! = {divisor}: counting bug"
    );
    Ok(transitive / divisor)
}

/// Number of subgroups of `B_n` with index exactly `r`, counted through the
/// transitive braid representations. Same divisibility contract as
/// [`subgroup_count`].
pub fn braid_subgroup_count(n: u32, d: Degree) -> Result<u64> {
    let bn = enumerate_hom_bn(n, d)?;
    let mut transitive = 0u64;
    for class in bn.classes() {
        let base = class.tower().generators();
        for c in class.lifts() {
            let mut gens = base.clone();
            gens.push(*c);
            if is_transitive(&gens, d) {
                transitive += class.tower().rep_count();
            }
        }
    }
    let divisor = factorial(d.get() - 1);
    assert_eq!(
        transitive % divisor,
        0,
        "transitive braid count {transitive} not divisible by (r-1)! = {divisor}: counting bug"
    );
    Ok(transitive / divisor)
}

/// Probes the conjectures at one instance.
///
/// For `r <= n-1`: true iff `Hom(K_n, S_r)` contains only the trivial
/// representation. For `r = n`: true iff every nontrivial representation is
/// transitive. Other `(n, r)` pairs are out of domain.
pub fn conjecture_probe(n: u32, d: Degree) -> Result<bool> {
    let r = d.get();
    if n < 5 || r as u32 > n {
        return Err(Error::ConjectureDomain { n, r });
    }
    let hom = enumerate_hom_kn(n, d)?;
    if (r as u32) < n {
        Ok(hom.nontrivial_classes().count() == 0)
    } else {
        Ok(hom
            .nontrivial_classes()
            .all(|c| is_transitive(&c.generators(), d)))
    }
}

/// Assembles the full report for `(n, r)`.
pub fn census(n: u32, d: Degree) -> Result<CensusReport> {
    let hom = enumerate_hom_kn(n, d)?;
    let mut seen_vertices = std::collections::BTreeSet::new();
    let mut type1 = 0u64;
    let mut type2 = 0u64;
    for class in hom.classes() {
        if seen_vertices.insert(class.cycle().canonical_vertex()) {
            match class.cycle().kind() {
                CycleKind::TypeI => type1 += 1,
                CycleKind::TypeII => type2 += 1,
            }
        }
    }
    let transitive = transitive_reps_of(&hom);
    let divisor = factorial(d.get() - 1);
    assert_eq!(transitive % divisor, 0, "divisibility violated: counting bug");
    let conjecture_holds = if n >= 5 && d.get() as u32 <= n {
        Some(conjecture_probe(n, d)?)
    } else {
        None
    };
    Ok(CensusReport {
        n,
        degree: d.get(),
        total_reps: hom.total_reps(),
        type1_cycles: type1,
        type2_cycles: type2,
        transitive_reps: transitive,
        subgroup_count: transitive / divisor,
        conjecture_holds,
    })
}
