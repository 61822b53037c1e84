//! Strand segments of a sliced tangle and how they join into components.

use std::collections::BTreeMap;

use super::word::{Event, Gen, Sign, TangleWord};
use crate::diagrams::{ChordDiagram, ChordId, Component, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    Boundary(usize),
    /// Joined to the same end of another segment by a cup or cap.
    Link(usize),
    Open,
}

#[derive(Clone, Debug)]
struct Seg {
    sign: Sign,
    top: End,
    bottom: End,
}

/// Segments created so far and the segment at each strand position.
#[derive(Clone, Debug)]
pub struct Skeleton {
    segs: Vec<Seg>,
    pos: Vec<usize>,
}

/// Segments of one component in orientation order.
#[derive(Clone, Debug)]
pub struct CompPath {
    pub kind: Kind,
    pub segs: Vec<usize>,
}

impl Skeleton {
    pub fn new(top: &[Sign]) -> Self {
        let segs = top.iter().enumerate().map(|(i, &s)| Seg { sign: s, top: End::Boundary(i), bottom: End::Open }).collect();
        Skeleton { segs, pos: (0..top.len()).collect() }
    }

    pub fn width(&self) -> usize {
        self.pos.len()
    }

    pub fn seg_at(&self, p: usize) -> usize {
        self.pos[p]
    }

    pub fn sign_of(&self, seg: usize) -> Sign {
        self.segs[seg].sign
    }

    pub fn sign_at(&self, p: usize) -> Sign {
        self.segs[self.pos[p]].sign
    }

    pub fn swap(&mut self, p: usize) {
        self.pos.swap(p, p + 1);
    }

    pub fn cup(&mut self, p: usize, a: Sign, b: Sign) {
        let (i, j) = (self.segs.len(), self.segs.len() + 1);
        self.segs.push(Seg { sign: a, top: End::Link(j), bottom: End::Open });
        self.segs.push(Seg { sign: b, top: End::Link(i), bottom: End::Open });
        self.pos.splice(p..p, [i, j]);
    }

    pub fn cap(&mut self, p: usize) {
        let (i, j) = (self.pos[p], self.pos[p + 1]);
        self.segs[i].bottom = End::Link(j);
        self.segs[j].bottom = End::Link(i);
        self.pos.drain(p..p + 2);
    }

    /// Marks the remaining strands as the bottom boundary.
    pub fn finish(&mut self) {
        for (k, &s) in self.pos.iter().enumerate() {
            self.segs[s].bottom = End::Boundary(k);
        }
    }

    /// Applies a word event, ignoring chords.
    pub fn step(&mut self, e: &Event) {
        match e.gen {
            Gen::Cross { .. } => self.swap(e.pos),
            Gen::Cup(a, b) => self.cup(e.pos, a, b),
            Gen::Cap(..) => self.cap(e.pos),
            Gen::Id(_) | Gen::Kink(_) => {}
        }
    }

    /// Components of a finished skeleton: intervals ordered by their
    /// starting boundary point (top first), then circles.
    pub fn components(&self) -> Vec<CompPath> {
        let entry = |s: &Seg| match s.sign {
            Sign::Plus => s.top,
            Sign::Minus => s.bottom,
        };
        let exit = |s: &Seg| match s.sign {
            Sign::Plus => s.bottom,
            Sign::Minus => s.top,
        };
        let mut starts: Vec<((u8, usize), usize)> = self
            .segs
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match entry(s) {
                End::Boundary(k) => Some(((if s.sign == Sign::Plus { 0 } else { 1 }, k), i)),
                _ => None,
            })
            .collect();
        starts.sort();
        let mut used = vec![false; self.segs.len()];
        let mut out = Vec::new();
        let walk = |start: usize, used: &mut Vec<bool>| -> Vec<usize> {
            let mut path = Vec::new();
            let mut cur = start;
            loop {
                used[cur] = true;
                path.push(cur);
                match exit(&self.segs[cur]) {
                    End::Link(q) if !used[q] => cur = q,
                    _ => break,
                }
            }
            path
        };
        for (_, s) in starts {
            out.push(CompPath { kind: Kind::Interval, segs: walk(s, &mut used) });
        }
        for s in 0..self.segs.len() {
            if !used[s] {
                out.push(CompPath { kind: Kind::Circle, segs: walk(s, &mut used) });
            }
        }
        out
    }
}

/// Endpoint of a chord: a segment and the rank of the endpoint along the
/// segment in time order.
pub type Foot = (u32, u32);

/// Builds the diagram of chords given by their feet on a finished skeleton.
/// Along a downward segment feet are read in time order, along an upward
/// one in reverse.
pub fn assemble(sk: &Skeleton, comps: &[CompPath], chords: &[(Foot, Foot)]) -> ChordDiagram {
    let mut seg_place: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (ci, c) in comps.iter().enumerate() {
        for (k, &s) in c.segs.iter().enumerate() {
            seg_place.insert(s, (ci, k));
        }
    }
    let mut per_comp: Vec<Vec<((usize, i64), ChordId)>> = vec![Vec::new(); comps.len()];
    for (label, (p, q)) in chords.iter().enumerate() {
        for &(seg, rank) in [p, q] {
            let (ci, k) = seg_place[&(seg as usize)];
            let r = match sk.sign_of(seg as usize) {
                Sign::Plus => rank as i64,
                Sign::Minus => -(rank as i64),
            };
            per_comp[ci].push(((k, r), label as ChordId));
        }
    }
    let comps = comps
        .iter()
        .zip(per_comp)
        .map(|(c, mut feet)| {
            feet.sort();
            Component { kind: c.kind, slots: feet.into_iter().map(|(_, l)| l).collect() }
        })
        .collect();
    ChordDiagram::new(comps).expect("assembled diagram").canonical()
}

/// The skeleton of a word after all its events.
pub fn skeleton_of(word: &TangleWord) -> (Skeleton, Vec<CompPath>) {
    let mut sk = Skeleton::new(word.top());
    for e in word.events() {
        sk.step(&e);
    }
    sk.finish();
    let comps = sk.components();
    (sk, comps)
}

/// Component kinds of a word, in the order used for its diagrams.
pub fn word_kinds(word: &TangleWord) -> Vec<Kind> {
    skeleton_of(word).1.iter().map(|c| c.kind).collect()
}

/// Blackboard framing of each component: signed self-crossings plus kinks.
pub fn framings(word: &TangleWord) -> Vec<i64> {
    let mut sk = Skeleton::new(word.top());
    let mut marks: Vec<(usize, usize, i64)> = Vec::new();
    for e in word.events() {
        match e.gen {
            Gen::Cross { positive, .. } => {
                let s = if positive { 1 } else { -1 } * sk.sign_at(e.pos).value() * sk.sign_at(e.pos + 1).value();
                marks.push((sk.seg_at(e.pos), sk.seg_at(e.pos + 1), s));
            }
            Gen::Kink(positive) => {
                let s = sk.seg_at(e.pos);
                marks.push((s, s, if positive { 1 } else { -1 }));
            }
            _ => {}
        }
        sk.step(&e);
    }
    sk.finish();
    let comps = sk.components();
    let mut comp_of = vec![0; sk.segs.len()];
    for (ci, c) in comps.iter().enumerate() {
        for &s in &c.segs {
            comp_of[s] = ci;
        }
    }
    let mut f = vec![0; comps.len()];
    for (a, b, s) in marks {
        if comp_of[a] == comp_of[b] {
            f[comp_of[a]] += s;
        }
    }
    f
}

/// The chord diagram with one chord per double point of the word.
pub fn diagram_of_singular(word: &TangleWord) -> ChordDiagram {
    let mut sk = Skeleton::new(word.top());
    let mut count: BTreeMap<usize, u32> = BTreeMap::new();
    let mut chords = Vec::new();
    for e in word.events() {
        if let Gen::Cross { sing: true, .. } = e.gen {
            let mut foot = |seg: usize| {
                let c = count.entry(seg).or_insert(0);
                *c += 1;
                (seg as u32, *c - 1)
            };
            let p = foot(sk.seg_at(e.pos));
            let q = foot(sk.seg_at(e.pos + 1));
            chords.push((p, q));
        }
        sk.step(&e);
    }
    sk.finish();
    let comps = sk.components();
    assemble(&sk, &comps, &chords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kontsevich::parse_word;

    #[test]
    fn trefoil_is_one_circle_with_framing_three() {
        let w = parse_word("braid[2]: s1 s1 s1 ; close").unwrap();
        assert_eq!(word_kinds(&w), vec![Kind::Circle]);
        assert_eq!(framings(&w), vec![3]);
        let hopf = parse_word("braid[2]: s1 s1 ; close").unwrap();
        assert_eq!(word_kinds(&hopf), vec![Kind::Circle, Kind::Circle]);
        assert_eq!(framings(&hopf), vec![0, 0]);
    }

    #[test]
    fn singular_diagrams() {
        let w = parse_word("braid[2]: s1 sing s1 sing s1 k1 ; close").unwrap();
        assert_eq!(diagram_of_singular(&w), ChordDiagram::circle(&[0, 1, 0, 1]).canonical());
        let w = parse_word("braid[3]: s1 sing s2 sing ; close").unwrap();
        assert_eq!(diagram_of_singular(&w), ChordDiagram::circle(&[0, 0, 1, 1]).canonical());
    }
}
