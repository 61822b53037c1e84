use std::collections::{BTreeMap, BTreeSet};

use super::{ChordDiagram, ChordId, Component, DiagramSum, Kind};
use crate::linalg::{Echelon, SparseRow};
use crate::scalars::{Rational, Ring};

/// Largest degree for enumeration and relator generation.
pub const MAX_DEGREE: usize = 4;

/// An endpoint to insert: in `gap` of `comp`, ordered by `tie` among the
/// insertions sharing that gap.
#[derive(Clone, Copy)]
struct Insert {
    comp: usize,
    gap: usize,
    tie: u8,
    label: ChordId,
}

fn gaps(c: &Component) -> usize {
    match c.kind {
        Kind::Circle => c.slots.len().max(1),
        Kind::Interval => c.slots.len() + 1,
    }
}

fn insert_all(d: &ChordDiagram, ins: &[Insert]) -> ChordDiagram {
    let comps = d
        .comps
        .iter()
        .enumerate()
        .map(|(ci, c)| {
            let mut here: Vec<&Insert> = ins.iter().filter(|i| i.comp == ci).collect();
            here.sort_by_key(|i| (i.gap, i.tie));
            let mut slots = Vec::with_capacity(c.slots.len() + here.len());
            let mut it = here.into_iter().peekable();
            for g in 0..=c.slots.len() {
                while let Some(i) = it.next_if(|i| i.gap == g) {
                    slots.push(i.label);
                }
                if g < c.slots.len() {
                    slots.push(c.slots[g]);
                }
            }
            Component { kind: c.kind, slots }
        })
        .collect();
    ChordDiagram { comps }
}

fn next_label(d: &ChordDiagram) -> ChordId {
    d.chords().keys().next_back().map_or(0, |&k| k + 1)
}

/// All gap positions `(comp, gap)` of a diagram.
fn all_gaps(d: &ChordDiagram) -> Vec<(usize, usize)> {
    d.comps.iter().enumerate().flat_map(|(ci, c)| (0..gaps(c)).map(move |g| (ci, g))).collect()
}

/// Every canonical diagram of the given degree on the skeleton, sorted.
pub fn enumerate_diagrams(kinds: &[Kind], degree: usize) -> Vec<ChordDiagram> {
    assert!(degree <= MAX_DEGREE, "degree cap is {MAX_DEGREE}");
    let mut level: BTreeSet<ChordDiagram> = BTreeSet::new();
    level.insert(ChordDiagram::empty(kinds));
    for _ in 0..degree {
        let mut next = BTreeSet::new();
        for d in &level {
            let label = next_label(d);
            let gs = all_gaps(d);
            for (i, &(ca, ga)) in gs.iter().enumerate() {
                for &(cb, gb) in &gs[i..] {
                    let a = Insert { comp: ca, gap: ga, tie: 0, label };
                    let b = Insert { comp: cb, gap: gb, tie: 1, label };
                    next.insert(insert_all(d, &[a, b]).canonical());
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// All 4T relators of degree `m`. Each is built from a degree-(m−1)
/// diagram, one of its chords with endpoints P and Q, and a gap G: a new
/// chord runs from G to a point next to P or Q, and the relator is
/// `D(after P) − D(before P) − D(before Q) + D(after Q)`.
pub fn four_term_relators(kinds: &[Kind], m: usize) -> Vec<DiagramSum<Rational>> {
    if m < 2 {
        return Vec::new();
    }
    let mut seen: BTreeSet<Vec<(ChordDiagram, Rational)>> = BTreeSet::new();
    let mut out = Vec::new();
    for d in enumerate_diagrams(kinds, m - 1) {
        let label = next_label(&d);
        let gs = all_gaps(&d);
        for (_, (p, q)) in d.chords() {
            for &(cg, gg) in &gs {
                let near = |s: super::Slot, after: bool| -> ChordDiagram {
                    let c = &d.comps[s.comp];
                    let gap = if after {
                        match c.kind {
                            Kind::Circle => (s.index + 1) % c.slots.len(),
                            Kind::Interval => s.index + 1,
                        }
                    } else {
                        s.index
                    };
                    // the moving endpoint sits closest to the fixed chord
                    let (tm, tg) = if after { (0, 1) } else { (1, 0) };
                    insert_all(
                        &d,
                        &[
                            Insert { comp: s.comp, gap, tie: tm, label },
                            Insert { comp: cg, gap: gg, tie: tg, label },
                        ],
                    )
                };
                let mut rel = DiagramSum::new();
                rel.add_term(near(p, true), Rational::one());
                rel.add_term(near(p, false), Rational::from_int(-1));
                rel.add_term(near(q, false), Rational::from_int(-1));
                rel.add_term(near(q, true), Rational::one());
                if rel.is_zero() {
                    continue;
                }
                let mut key: Vec<(ChordDiagram, Rational)> = rel.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
                if key[0].1.is_negative() {
                    key.iter_mut().for_each(|(_, v)| *v = v.neg());
                }
                if seen.insert(key) {
                    out.push(rel);
                }
            }
        }
    }
    out
}

fn to_row(s: &DiagramSum<Rational>) -> SparseRow<ChordDiagram> {
    s.iter().map(|(d, c)| (d.clone(), c.clone())).collect()
}

/// Span of the 4T relators of one degree on one skeleton.
pub struct FourTermSpan {
    ech: Echelon<ChordDiagram>,
}

impl FourTermSpan {
    pub fn new(kinds: &[Kind], m: usize) -> Self {
        let mut ech = Echelon::new();
        for r in four_term_relators(kinds, m) {
            ech.insert(to_row(&r));
        }
        FourTermSpan { ech }
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn contains(&self, s: &DiagramSum<Rational>) -> bool {
        self.ech.contains(to_row(s))
    }

    /// Normal form of `s` modulo the relators.
    pub fn reduce(&self, s: &DiagramSum<Rational>) -> BTreeMap<ChordDiagram, Rational> {
        self.ech.reduce(to_row(s))
    }
}

/// `dim A_m` of the skeleton, by exact elimination.
pub fn quotient_dimension(kinds: &[Kind], m: usize) -> usize {
    enumerate_diagrams(kinds, m).len() - FourTermSpan::new(kinds, m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_one_circle() {
        let c = [Kind::Circle];
        assert_eq!(enumerate_diagrams(&c, 0).len(), 1);
        assert_eq!(enumerate_diagrams(&c, 1).len(), 1);
        assert_eq!(enumerate_diagrams(&c, 2).len(), 2);
        assert_eq!(enumerate_diagrams(&c, 3).len(), 5);
    }

    #[test]
    fn relators_have_four_terms_or_fewer() {
        for r in four_term_relators(&[Kind::Circle], 3) {
            assert!(r.len() <= 4);
            assert!(r.iter().all(|(d, _)| d.degree() == 3));
        }
    }
}
