//! Chord diagrams on skeletons of circles and intervals.

mod fourterm;

pub use fourterm::{enumerate_diagrams, four_term_relators, quotient_dimension, FourTermSpan, MAX_DEGREE};

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::scalars::{Rational, Ring};

pub type ChordId = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("chord {0} does not have exactly two endpoints")]
    BadChord(ChordId),
    #[error("component {0} does not exist")]
    NoComponent(usize),
    #[error("component {0} is not a {1}")]
    WrongKind(usize, &'static str),
    #[error("slit point {0} is not a gap of the circle")]
    BadSlitPoint(usize),
    #[error("cabling needs q ≥ 1")]
    ZeroCable,
    #[error("malformed diagram JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Circle,
    Interval,
}

/// One skeleton component: chord labels in orientation order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub kind: Kind,
    pub slots: Vec<ChordId>,
}

/// Chord diagram with components in a fixed order. Circle slot lists are
/// cyclic, interval slot lists run from the start to the end point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    comps: Vec<Component>,
}

/// Position of one chord endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub comp: usize,
    pub index: usize,
}

impl ChordDiagram {
    pub fn new(comps: Vec<Component>) -> Result<Self, DiagramError> {
        let mut count: BTreeMap<ChordId, usize> = BTreeMap::new();
        for c in &comps {
            for &s in &c.slots {
                *count.entry(s).or_insert(0) += 1;
            }
        }
        if let Some((&k, _)) = count.iter().find(|(_, &n)| n != 2) {
            return Err(DiagramError::BadChord(k));
        }
        Ok(ChordDiagram { comps })
    }

    /// Chordless diagram on the given skeleton.
    pub fn empty(kinds: &[Kind]) -> Self {
        ChordDiagram { comps: kinds.iter().map(|&kind| Component { kind, slots: Vec::new() }).collect() }
    }

    pub fn circle(slots: &[ChordId]) -> Self {
        ChordDiagram::new(vec![Component { kind: Kind::Circle, slots: slots.to_vec() }]).unwrap()
    }

    pub fn interval(slots: &[ChordId]) -> Self {
        ChordDiagram::new(vec![Component { kind: Kind::Interval, slots: slots.to_vec() }]).unwrap()
    }

    pub fn components(&self) -> &[Component] {
        &self.comps
    }

    pub fn kinds(&self) -> Vec<Kind> {
        self.comps.iter().map(|c| c.kind).collect()
    }

    pub fn degree(&self) -> usize {
        self.comps.iter().map(|c| c.slots.len()).sum::<usize>() / 2
    }

    pub fn is_closed(&self) -> bool {
        self.comps.iter().all(|c| c.kind == Kind::Circle)
    }

    /// Both endpoints of every chord, first endpoint in component-then-slot order.
    pub fn chords(&self) -> BTreeMap<ChordId, (Slot, Slot)> {
        let mut first: BTreeMap<ChordId, Slot> = BTreeMap::new();
        let mut out = BTreeMap::new();
        for (ci, c) in self.comps.iter().enumerate() {
            for (i, &s) in c.slots.iter().enumerate() {
                let here = Slot { comp: ci, index: i };
                match first.remove(&s) {
                    Some(p) => {
                        out.insert(s, (p, here));
                    }
                    None => {
                        first.insert(s, here);
                    }
                }
            }
        }
        out
    }

    /// True when some chord has both endpoints on one component and no
    /// other chord separates them, i.e. every other chord has zero or two
    /// endpoints strictly between them.
    pub fn has_isolated_chord(&self) -> bool {
        let chords = self.chords();
        chords.iter().any(|(&k, &(p, q))| {
            p.comp == q.comp
                && chords.iter().all(|(&j, &(a, b))| {
                    let inside = |s: Slot| s.comp == p.comp && s.index > p.index && s.index < q.index;
                    j == k || inside(a) == inside(b)
                })
        })
    }

    /// Canonical representative: chords relabelled by first appearance,
    /// minimised over rotations of each circle.
    pub fn canonical(&self) -> ChordDiagram {
        let rot_counts: Vec<usize> = self
            .comps
            .iter()
            .map(|c| if c.kind == Kind::Circle { c.slots.len().max(1) } else { 1 })
            .collect();
        let mut best: Option<Vec<Component>> = None;
        let mut rot = vec![0usize; self.comps.len()];
        loop {
            let cand = relabel(&self.comps, &rot);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
            // odometer over rotation choices
            let mut k = 0;
            while k < rot.len() {
                rot[k] += 1;
                if rot[k] < rot_counts[k] {
                    break;
                }
                rot[k] = 0;
                k += 1;
            }
            if k == rot.len() {
                break;
            }
        }
        ChordDiagram { comps: best.unwrap() }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Rotates circle `comp` so that it starts at slot `r`.
    pub fn rotated(&self, comp: usize, r: usize) -> ChordDiagram {
        let mut d = self.clone();
        let c = &mut d.comps[comp];
        if c.kind == Kind::Circle && !c.slots.is_empty() {
            let r = r % c.slots.len();
            c.slots.rotate_left(r);
        }
        d
    }

    /// Disjoint union, `rhs` components appended.
    pub fn disjoint_union(&self, rhs: &ChordDiagram) -> ChordDiagram {
        let shift = self.chords().keys().next_back().map_or(0, |&k| k + 1);
        let mut comps = self.comps.clone();
        comps.extend(rhs.comps.iter().map(|c| Component { kind: c.kind, slots: c.slots.iter().map(|s| s + shift).collect() }));
        ChordDiagram { comps }
    }

    /// Concatenation along matching intervals: `self` first, then `rhs`.
    pub fn stack_intervals(&self, rhs: &ChordDiagram) -> ChordDiagram {
        assert_eq!(self.kinds(), rhs.kinds(), "stacking needs equal skeletons");
        let shift = self.chords().keys().next_back().map_or(0, |&k| k + 1);
        let comps = self
            .comps
            .iter()
            .zip(&rhs.comps)
            .map(|(a, b)| {
                let mut slots = a.slots.clone();
                slots.extend(b.slots.iter().map(|s| s + shift));
                Component { kind: a.kind, slots }
            })
            .collect();
        ChordDiagram { comps }
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .comps
            .iter()
            .map(|c| {
                json!({
                    "kind": match c.kind { Kind::Circle => "circle", Kind::Interval => "interval" },
                    "slots": c.slots.len(),
                })
            })
            .collect();
        let chords: Vec<Value> =
            self.chords().values().map(|(p, q)| json!([[p.comp, p.index], [q.comp, q.index]])).collect();
        json!({ "components": comps, "chords": chords })
    }

    pub fn from_json(v: &Value) -> Result<Self, DiagramError> {
        let bad = |m: &str| DiagramError::Json(m.into());
        let comps = v.get("components").and_then(Value::as_array).ok_or_else(|| bad("missing components"))?;
        let mut built = Vec::new();
        for c in comps {
            let kind = match c.get("kind").and_then(Value::as_str) {
                Some("circle") => Kind::Circle,
                Some("interval") => Kind::Interval,
                _ => return Err(bad("kind must be circle or interval")),
            };
            let n = c.get("slots").and_then(Value::as_u64).ok_or_else(|| bad("slots must be a count"))? as usize;
            built.push((kind, vec![None; n]));
        }
        let chords = v.get("chords").and_then(Value::as_array).ok_or_else(|| bad("missing chords"))?;
        for (k, ch) in chords.iter().enumerate() {
            let ends = ch.as_array().filter(|e| e.len() == 2).ok_or_else(|| bad("chord must have two endpoints"))?;
            for e in ends {
                let pos = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("endpoint must be [component, slot]"))?;
                let ci = pos[0].as_u64().ok_or_else(|| bad("component index"))? as usize;
                let si = pos[1].as_u64().ok_or_else(|| bad("slot index"))? as usize;
                let slot = built.get_mut(ci).and_then(|c| c.1.get_mut(si)).ok_or_else(|| bad("endpoint out of range"))?;
                if slot.is_some() {
                    return Err(bad("two endpoints share a slot"));
                }
                *slot = Some(k as ChordId);
            }
        }
        let comps = built
            .into_iter()
            .map(|(kind, slots)| {
                let slots = slots.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| bad("empty slot"))?;
                Ok(Component { kind, slots })
            })
            .collect::<Result<Vec<_>, DiagramError>>()?;
        ChordDiagram::new(comps)
    }
}

fn relabel(comps: &[Component], rot: &[usize]) -> Vec<Component> {
    let mut map: BTreeMap<ChordId, ChordId> = BTreeMap::new();
    comps
        .iter()
        .zip(rot)
        .map(|(c, &r)| {
            let n = c.slots.len();
            let slots = (0..n)
                .map(|i| {
                    let s = c.slots[(i + r) % n];
                    let next = map.len() as ChordId;
                    *map.entry(s).or_insert(next)
                })
                .collect();
            Component { kind: c.kind, slots }
        })
        .collect()
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ChordDiagram {
    /// `O(0 1 0 1)` for circles, `|(0 0)` for intervals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let s: Vec<String> = c.slots.iter().map(|x| x.to_string()).collect();
            match c.kind {
                Kind::Circle => write!(f, "O({})", s.join(" "))?,
                Kind::Interval => write!(f, "|({})", s.join(" "))?,
            }
        }
        Ok(())
    }
}

pub fn canonical_form(d: &ChordDiagram) -> ChordDiagram {
    d.canonical()
}

/// Formal linear combination of canonical diagrams.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiagramSum<R> {
    terms: BTreeMap<ChordDiagram, R>,
}

impl<R: Ring> DiagramSum<R> {
    pub fn new() -> Self {
        DiagramSum { terms: BTreeMap::new() }
    }

    pub fn single(d: ChordDiagram, c: R) -> Self {
        let mut s = Self::new();
        s.add_term(d, c);
        s
    }

    pub fn add_term(&mut self, d: ChordDiagram, c: R) {
        if c.is_zero() {
            return;
        }
        let d = d.canonical();
        let e = self.terms.entry(d.clone()).or_insert_with(R::zero);
        e.add_assign(&c);
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&R::one().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        DiagramSum { terms: self.terms.iter().map(|(d, v)| (d.clone(), v.mul(c))).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ChordDiagram, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &ChordDiagram) -> R {
        self.terms.get(&d.canonical()).cloned().unwrap_or_else(R::zero)
    }

    /// Terms of exactly degree `m`.
    pub fn degree_part(&self, m: usize) -> Self {
        DiagramSum { terms: self.terms.iter().filter(|(d, _)| d.degree() == m).map(|(d, c)| (d.clone(), c.clone())).collect() }
    }

    /// Lowest degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(ChordDiagram::degree).min()
    }

    pub fn map_diagrams(&self, mut f: impl FnMut(&ChordDiagram) -> ChordDiagram) -> Self {
        let mut out = Self::new();
        for (d, c) in &self.terms {
            out.add_term(f(d), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(d, c)| json!({ "diagram": d.to_json(), "coeff": c.to_json() })).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, DiagramError> {
        let arr = v.as_array().ok_or_else(|| DiagramError::Json("diagram sum must be an array".into()))?;
        let mut out = Self::new();
        for t in arr {
            let d = ChordDiagram::from_json(t.get("diagram").ok_or_else(|| DiagramError::Json("missing diagram".into()))?)?;
            let c = R::from_json(t.get("coeff").ok_or_else(|| DiagramError::Json("missing coeff".into()))?)
                .map_err(|e| DiagramError::Json(e.to_string()))?;
            out.add_term(d, c);
        }
        Ok(out)
    }
}

impl<R: Ring> FromIterator<(ChordDiagram, R)> for DiagramSum<R> {
    fn from_iter<I: IntoIterator<Item = (ChordDiagram, R)>>(iter: I) -> Self {
        let mut s = Self::new();
        for (d, c) in iter {
            s.add_term(d, c);
        }
        s
    }
}

impl<R: Ring> fmt::Debug for DiagramSum<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c})·{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Replaces component `comp` by `q` parallel copies at positions
/// `comp..comp+q` and sums over all lifts of its chord endpoints.
pub fn cable_diagram(d: &ChordDiagram, comp: usize, q: usize) -> Result<DiagramSum<Rational>, DiagramError> {
    if q == 0 {
        return Err(DiagramError::ZeroCable);
    }
    let c = d.comps.get(comp).ok_or(DiagramError::NoComponent(comp))?;
    let e = c.slots.len();
    let mut out = DiagramSum::new();
    let mut choice = vec![0usize; e];
    loop {
        let mut copies: Vec<Component> = (0..q).map(|_| Component { kind: c.kind, slots: Vec::new() }).collect();
        for (i, &s) in c.slots.iter().enumerate() {
            copies[choice[i]].slots.push(s);
        }
        let mut comps = d.comps[..comp].to_vec();
        comps.extend(copies);
        comps.extend(d.comps[comp + 1..].iter().cloned());
        out.add_term(ChordDiagram { comps }, Rational::one());
        let mut k = 0;
        while k < e {
            choice[k] += 1;
            if choice[k] < q {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == e {
            break;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlitMode {
    /// Cut the circle in the gap before slot `point`.
    Slit { point: usize },
    Close,
}

/// Converts component `comp` between circle and interval.
pub fn slit_close(d: &ChordDiagram, comp: usize, mode: SlitMode) -> Result<ChordDiagram, DiagramError> {
    let c = d.comps.get(comp).ok_or(DiagramError::NoComponent(comp))?;
    let mut out = d.clone();
    match mode {
        SlitMode::Slit { point } => {
            if c.kind != Kind::Circle {
                return Err(DiagramError::WrongKind(comp, "circle"));
            }
            if point >= c.slots.len().max(1) {
                return Err(DiagramError::BadSlitPoint(point));
            }
            let oc = &mut out.comps[comp];
            oc.kind = Kind::Interval;
            if !oc.slots.is_empty() {
                oc.slots.rotate_left(point);
            }
        }
        SlitMode::Close => {
            if c.kind != Kind::Interval {
                return Err(DiagramError::WrongKind(comp, "interval"));
            }
            out.comps[comp].kind = Kind::Circle;
        }
    }
    Ok(out)
}

/// Uniformly random placement of `degree` chords on the given skeleton:
/// endpoints are inserted one chord at a time into random gaps.
pub fn random_diagram<G: rand::Rng>(rng: &mut G, kinds: &[Kind], degree: usize) -> ChordDiagram {
    let mut comps: Vec<Component> = kinds.iter().map(|&kind| Component { kind, slots: Vec::new() }).collect();
    for k in 0..degree as ChordId {
        for _ in 0..2 {
            let ci = rng.gen_range(0..comps.len());
            let n = comps[ci].slots.len();
            let pos = rng.gen_range(0..=n);
            comps[ci].slots.insert(pos, k);
        }
    }
    ChordDiagram { comps }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_invariance() {
        let d = ChordDiagram::circle(&[0, 1, 0, 1]);
        assert_eq!(d.canonical(), d.rotated(0, 1).canonical());
        let e = ChordDiagram::circle(&[5, 0, 0, 5]);
        assert_eq!(e.canonical(), ChordDiagram::circle(&[0, 0, 1, 1]));
    }

    #[test]
    fn degrees_distinguish() {
        assert_ne!(ChordDiagram::circle(&[0, 0]).canonical(), ChordDiagram::circle(&[0, 0, 1, 1]).canonical());
    }

    #[test]
    fn cable_counts() {
        let empty = ChordDiagram::empty(&[Kind::Circle]);
        assert_eq!(cable_diagram(&empty, 0, 2).unwrap().len(), 1);
        let one = ChordDiagram::circle(&[0, 0]);
        let c = cable_diagram(&one, 0, 2).unwrap();
        let total: Rational = c.iter().map(|(_, v)| v.clone()).fold(Rational::zero(), |a, b| a.add(&b));
        assert_eq!(total, Rational::from_int(4));
        assert!(c.iter().all(|(d, _)| d.degree() == 1 && d.components().len() == 2));
    }

    #[test]
    fn slit_roundtrip() {
        let d = ChordDiagram::circle(&[0, 1, 0, 1]);
        let s = slit_close(&d, 0, SlitMode::Slit { point: 1 }).unwrap();
        assert_eq!(s.components()[0].kind, Kind::Interval);
        let c = slit_close(&s, 0, SlitMode::Close).unwrap();
        assert_eq!(c.canonical(), d.canonical());
        let empty = slit_close(&ChordDiagram::empty(&[Kind::Circle]), 0, SlitMode::Slit { point: 0 }).unwrap();
        assert_eq!(empty, ChordDiagram::empty(&[Kind::Interval]));
    }

    #[test]
    fn json_roundtrip() {
        let d = ChordDiagram::new(vec![
            Component { kind: Kind::Circle, slots: vec![0, 1, 0] },
            Component { kind: Kind::Interval, slots: vec![1] },
        ])
        .unwrap();
        assert_eq!(ChordDiagram::from_json(&d.to_json()).unwrap().canonical(), d.canonical());
    }

    #[test]
    fn isolated_chords() {
        assert!(ChordDiagram::circle(&[0, 0, 1, 1]).has_isolated_chord());
        assert!(!ChordDiagram::circle(&[0, 1, 0, 1]).has_isolated_chord());
        assert!(ChordDiagram::interval(&[0, 1, 1, 0]).has_isolated_chord());
        assert!(!ChordDiagram::interval(&[0, 1, 0, 1]).has_isolated_chord());
    }
}
