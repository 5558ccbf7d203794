//! JSON wire format. Permutations travel as lexicographic ranks only, never
//! as image sequences; each document is tagged with its degree, so the ranks
//! are unambiguous. Field order is fixed by struct declaration order.

use crate::census::CensusReport;
use crate::error::{Error, Result};
use crate::perm::{Degree, Perm, Rank};
use crate::shift::{CycleKind, CycleSet, ShiftCycle};
use crate::tower::{BnHom, BraidClass, KnHom, TowerClass};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycleJson {
    pub vertex: (u32, u32),
    pub period: usize,
    pub seq: Vec<u32>,
    pub kind: CycleKind,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycleSetJson {
    pub degree: u8,
    pub cycle_count: usize,
    pub total_reps: u64,
    pub cycles: Vec<CycleJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TowerClassJson {
    pub vertex: (u32, u32),
    pub period: usize,
    pub seq: Vec<u32>,
    pub kind: CycleKind,
    pub bseq: Vec<u32>,
    pub trivial: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KnHomJson {
    pub level: u32,
    pub degree: u8,
    pub total_reps: u64,
    pub classes: Vec<TowerClassJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BraidClassJson {
    pub vertex: (u32, u32),
    pub period: usize,
    pub seq: Vec<u32>,
    pub kind: CycleKind,
    pub bseq: Vec<u32>,
    pub lifts: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BnHomJson {
    pub level: u32,
    pub degree: u8,
    pub total_reps: u64,
    pub classes: Vec<BraidClassJson>,
}

fn cycle_to_json(c: &ShiftCycle) -> CycleJson {
    let (v0, v1) = c.canonical_vertex().ranks();
    CycleJson {
        vertex: (v0.0, v1.0),
        period: c.period(),
        seq: c.ranks().iter().map(|r| r.0).collect(),
        kind: c.kind(),
    }
}

fn cycle_from_json(j: &CycleJson, d: Degree) -> Result<ShiftCycle> {
    let c = ShiftCycle::from_ranks(d, &j.seq)?;
    let (v0, v1) = c.canonical_vertex().ranks();
    if (v0.0, v1.0) != j.vertex || c.period() != j.period || c.kind() != j.kind {
        return Err(Error::InvalidCycle(
            "stored vertex/period/kind disagree with the sequence".into(),
        ));
    }
    Ok(c)
}

fn ranks_to_perms(ranks: &[u32], d: Degree) -> Result<Vec<Perm>> {
    ranks.iter().map(|&k| Perm::from_rank(Rank(k), d)).collect()
}

impl From<&CycleSet> for CycleSetJson {
    fn from(cs: &CycleSet) -> Self {
        CycleSetJson {
            degree: cs.degree().get(),
            cycle_count: cs.cycles().len(),
            total_reps: cs.total_reps(),
            cycles: cs.iter().map(cycle_to_json).collect(),
        }
    }
}

impl TryFrom<&CycleSetJson> for CycleSet {
    type Error = Error;

    fn try_from(j: &CycleSetJson) -> Result<CycleSet> {
        let d = Degree::new(j.degree)?;
        let cycles: Vec<ShiftCycle> = j
            .cycles
            .iter()
            .map(|c| cycle_from_json(c, d))
            .collect::<Result<_>>()?;
        Ok(CycleSet::from_cycles(d, cycles))
    }
}

impl From<&KnHom> for KnHomJson {
    fn from(hom: &KnHom) -> Self {
        KnHomJson {
            level: hom.level(),
            degree: hom.degree().get(),
            total_reps: hom.total_reps(),
            classes: hom
                .classes()
                .iter()
                .map(|class| {
                    let cj = cycle_to_json(class.cycle());
                    TowerClassJson {
                        vertex: cj.vertex,
                        period: cj.period,
                        seq: cj.seq,
                        kind: cj.kind,
                        bseq: class.bseq().iter().map(|b| b.rank().0).collect(),
                        trivial: class.is_trivial(),
                    }
                })
                .collect(),
        }
    }
}

impl TryFrom<&KnHomJson> for KnHom {
    type Error = Error;

    fn try_from(j: &KnHomJson) -> Result<KnHom> {
        let d = Degree::new(j.degree)?;
        let classes: Vec<TowerClass> = j
            .classes
            .iter()
            .map(|cj| {
                let cycle = ShiftCycle::from_ranks(d, &cj.seq)?;
                Ok(TowerClass::new(cycle, ranks_to_perms(&cj.bseq, d)?))
            })
            .collect::<Result<_>>()?;
        Ok(KnHom::from_classes(d, j.level, classes))
    }
}

impl From<&BnHom> for BnHomJson {
    fn from(hom: &BnHom) -> Self {
        BnHomJson {
            level: hom.level(),
            degree: hom.degree().get(),
            total_reps: hom.total_reps(),
            classes: hom
                .classes()
                .iter()
                .map(|class| {
                    let cj = cycle_to_json(class.tower().cycle());
                    BraidClassJson {
                        vertex: cj.vertex,
                        period: cj.period,
                        seq: cj.seq,
                        kind: cj.kind,
                        bseq: class.tower().bseq().iter().map(|b| b.rank().0).collect(),
                        lifts: class.lifts().iter().map(|c| c.rank().0).collect(),
                    }
                })
                .collect(),
        }
    }
}

impl TryFrom<&BnHomJson> for BnHom {
    type Error = Error;

    fn try_from(j: &BnHomJson) -> Result<BnHom> {
        let d = Degree::new(j.degree)?;
        let classes: Vec<BraidClass> = j
            .classes
            .iter()
            .map(|cj| {
                let cycle = ShiftCycle::from_ranks(d, &cj.seq)?;
                let tower = TowerClass::new(cycle, ranks_to_perms(&cj.bseq, d)?);
                Ok(BraidClass::new(tower, ranks_to_perms(&cj.lifts, d)?))
            })
            .collect::<Result<_>>()?;
        Ok(BnHom::from_classes(d, j.level, classes))
    }
}

/// Serializes any of the wire documents with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn census_report_from_json(text: &str) -> Result<CensusReport> {
    serde_json::from_str(text).map_err(|e| Error::InvalidConfig(format!("bad census JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::shift::enumerate_cycles;
    use crate::tower::{enumerate_hom_bn, enumerate_hom_kn};

    fn deg(r: u8) -> Degree {
        Degree::new(r).unwrap()
    }

    #[test]
    fn cycle_set_round_trips() {
        for r in 2..=4u8 {
            let cs = enumerate_cycles(deg(r));
            let dto = CycleSetJson::from(&cs);
            let text = to_json_string(&dto);
            let back: CycleSetJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back, dto);
            assert_eq!(CycleSet::try_from(&back).unwrap(), cs);
        }
    }

    #[test]
    fn kn_hom_round_trips() {
        for (n, r) in [(3u32, 3u8), (4, 3), (4, 4), (5, 4)] {
            let hom = enumerate_hom_kn(n, deg(r)).unwrap();
            let dto = KnHomJson::from(&hom);
            let back: KnHomJson = serde_json::from_str(&to_json_string(&dto)).unwrap();
            assert_eq!(back, dto);
            assert_eq!(KnHom::try_from(&back).unwrap(), hom);
        }
    }

    #[test]
    fn bn_hom_round_trips() {
        for (n, r) in [(3u32, 3u8), (4, 4), (5, 3)] {
            let hom = enumerate_hom_bn(n, deg(r)).unwrap();
            let dto = BnHomJson::from(&hom);
            let back: BnHomJson = serde_json::from_str(&to_json_string(&dto)).unwrap();
            assert_eq!(back, dto);
            assert_eq!(BnHom::try_from(&back).unwrap(), hom);
        }
    }

    #[test]
    fn census_round_trips() {
        let rep = census(3, deg(3)).unwrap();
        let text = to_json_string(&rep);
        assert_eq!(census_report_from_json(&text).unwrap(), rep);
    }

    #[test]
    fn tampered_cycle_data_rejected() {
        let cs = enumerate_cycles(deg(3));
        let mut dto = CycleSetJson::from(&cs);
        dto.cycles[0].seq = vec![2, 3]; // breaks the recurrence
        assert!(CycleSet::try_from(&dto).is_err());
    }
}
