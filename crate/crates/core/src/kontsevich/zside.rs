//! Chord-diagram side: runs a primitive program on chord states.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::associator::Associator;
use super::planner::{plan, zigzag, Letter, Op, Trie};
use super::skeleton::{assemble, Foot, Skeleton};
use super::word::{Sign, TangleWord};
use super::KontsevichError;
use crate::diagrams::{ChordDiagram, DiagramSum, FourTermSpan, Kind};
use crate::scalars::{Rational, Ring};

type Key = Vec<(Foot, Foot)>;
type States = HashMap<Key, Rational>;
/// Interval diagrams given by the slot pairs of their chords.
type Correction = [(Vec<(u32, u32)>, Rational)];

/// Truncated Kontsevich value: a sum of diagrams on the word's skeleton.
#[derive(Clone, Debug, PartialEq)]
pub struct ZValue {
    kinds: Vec<Kind>,
    order: usize,
    sum: DiagramSum<Rational>,
}

impl ZValue {
    pub fn kinds(&self) -> &[Kind] {
        &self.kinds
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn sum(&self) -> &DiagramSum<Rational> {
        &self.sum
    }

    pub fn coeff(&self, d: &ChordDiagram) -> Rational {
        self.sum.coeff(&d.canonical())
    }

    pub fn degree_part(&self, m: usize) -> DiagramSum<Rational> {
        self.sum.degree_part(m)
    }

    /// Lowest degree with a nonzero part modulo 4T.
    pub fn leading_degree(&self) -> Option<usize> {
        (0..=self.order).find(|&m| {
            let part = self.degree_part(m);
            !part.is_zero() && !FourTermSpan::new(&self.kinds, m).contains(&part)
        })
    }

    /// Equality modulo 4T in every degree.
    pub fn equivalent(&self, other: &ZValue) -> bool {
        self.kinds == other.kinds
            && (0..=self.order.min(other.order)).all(|m| {
                let diff = self.degree_part(m).sub(&other.degree_part(m));
                diff.is_zero() || FourTermSpan::new(&self.kinds, m).contains(&diff)
            })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "skeleton": self.kinds.iter().map(|k| match k { Kind::Circle => "circle", Kind::Interval => "interval" }).collect::<Vec<_>>(),
            "terms": self.sum.iter().map(|(d, c)| json!({"degree": d.degree(), "diagram": d.to_json(), "coeff": c.to_string()})).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<ZValue, KontsevichError> {
        let bad = |m: &str| KontsevichError::Syntax(format!("z value json: {m}"));
        let order = v["order"].as_u64().ok_or_else(|| bad("missing order"))? as usize;
        let kinds = v["skeleton"]
            .as_array()
            .ok_or_else(|| bad("missing skeleton"))?
            .iter()
            .map(|k| match k.as_str() {
                Some("circle") => Ok(Kind::Circle),
                Some("interval") => Ok(Kind::Interval),
                _ => Err(bad("bad component kind")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut sum = DiagramSum::new();
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let d = ChordDiagram::from_json(&t["diagram"]).map_err(|e| bad(&e.to_string()))?;
            let c = Rational::from_json(&t["coeff"]).map_err(|e| bad(&e.to_string()))?;
            if d.kinds() != kinds || d.degree() > order {
                return Err(bad("term does not fit the skeleton"));
            }
            sum.add_term(d, c);
        }
        Ok(ZValue { kinds, order, sum })
    }
}

struct Engine<'a> {
    order: usize,
    sk: Skeleton,
    correction: Option<&'a Correction>,
}

fn degree(k: &Key) -> usize {
    k.len()
}

fn count_on(k: &Key, seg: u32) -> u32 {
    k.iter().map(|(p, q)| (p.0 == seg) as u32 + (q.0 == seg) as u32).sum()
}

fn add_state(s: &mut States, mut k: Key, c: Rational) {
    if c.is_zero() {
        return;
    }
    k.sort_unstable();
    let e = s.entry(k).or_insert_with(Rational::zero);
    e.add_assign(&c);
}

impl Engine<'_> {
    fn orient(&self, seg: usize) -> i64 {
        self.sk.sign_of(seg).value()
    }

    fn apply_letter(&self, states: &States, l: &Letter) -> States {
        let mut out = States::new();
        for (k, c) in states {
            if degree(k) >= self.order {
                continue;
            }
            match l {
                Letter::Chords(pairs) => {
                    for &(a, b) in pairs {
                        let (sa, sb) = (self.sk.seg_at(a), self.sk.seg_at(b));
                        let s = self.orient(sa) * self.orient(sb);
                        let mut nk = k.clone();
                        nk.push(((sa as u32, count_on(k, sa as u32)), (sb as u32, count_on(k, sb as u32))));
                        add_state(&mut out, nk, c.mul(&Rational::from_int(s)));
                    }
                }
                Letter::Casimir(p) => {
                    let s = self.sk.seg_at(*p) as u32;
                    let n = count_on(k, s);
                    let mut nk = k.clone();
                    nk.push(((s, n), (s, n + 1)));
                    add_state(&mut out, nk, c.clone());
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn apply_elem(&self, states: &States, letters: &[Letter], terms: &[(Rational, Vec<u8>)]) -> States {
        let trie = Trie::build(terms, self.order);
        let mut out = States::new();
        let mut stack: Vec<(&Trie, States)> = vec![(&trie, states.clone())];
        while let Some((node, cur)) = stack.pop() {
            if let Some(c) = &node.coeff {
                for (k, v) in &cur {
                    add_state(&mut out, k.clone(), v.mul(c));
                }
            }
            for (l, child) in &node.children {
                let next = self.apply_letter(&cur, &letters[*l as usize]);
                if !next.is_empty() {
                    stack.push((child, next));
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn run(&mut self, ops: &[Op], mut states: States) -> States {
        for op in ops {
            match op {
                Op::Elem { letters, terms } => states = self.apply_elem(&states, letters, terms),
                Op::Swap(p) => self.sk.swap(*p),
                Op::RawCup(p) => self.sk.cup(*p, Sign::Plus, Sign::Minus),
                Op::RawCap(p) => self.sk.cap(*p),
                Op::Correct(p) => {
                    let corr = self.correction.expect("correction");
                    let s = self.sk.seg_at(*p) as u32;
                    let mut out = States::new();
                    for (k, c) in &states {
                        let n = count_on(k, s);
                        for (chords, y) in corr {
                            if degree(k) + chords.len() > self.order {
                                continue;
                            }
                            let mut nk = k.clone();
                            nk.extend(chords.iter().map(|&(i, j)| ((s, n + i), (s, n + j))));
                            add_state(&mut out, nk, c.mul(y));
                        }
                    }
                    out.retain(|_, v| !v.is_zero());
                    states = out;
                }
            }
        }
        states
    }
}

fn finish(mut sk: Skeleton, states: States, order: usize) -> ZValue {
    sk.finish();
    let comps = sk.components();
    let kinds = comps.iter().map(|c| c.kind).collect();
    let mut sum = DiagramSum::new();
    for (k, c) in states {
        sum.add_term(assemble(&sk, &comps, &k), c);
    }
    ZValue { kinds, order, sum }
}

fn initial() -> States {
    States::from([(Key::new(), Rational::one())])
}

/// Interval diagrams as slot-index pairs of each chord.
fn chord_slots(d: &ChordDiagram) -> Vec<(u32, u32)> {
    d.chords().values().map(|(p, q)| (p.index as u32, q.index as u32)).collect()
}

fn stack_sums(a: &DiagramSum<Rational>, b: &DiagramSum<Rational>, order: usize) -> DiagramSum<Rational> {
    let mut out = DiagramSum::new();
    for (x, c) in a.iter() {
        for (y, e) in b.iter() {
            if x.degree() + y.degree() <= order {
                out.add_term(x.stack_intervals(y), c.mul(e));
            }
        }
    }
    out
}

/// The zigzag defect `X` on one interval.
pub fn zigzag_defect(assoc: &Associator, order: usize) -> DiagramSum<Rational> {
    let mut e = Engine { order, sk: Skeleton::new(&[Sign::Plus]), correction: None };
    let states = e.run(&zigzag(assoc), initial());
    finish(e.sk, states, order).sum
}

/// `X^{-1}` as a power series in `1 − X`.
pub fn correction_inverse(assoc: &Associator, order: usize) -> DiagramSum<Rational> {
    let x = zigzag_defect(assoc, order);
    let unit = DiagramSum::single(ChordDiagram::empty(&[Kind::Interval]), Rational::one());
    let dev = unit.sub(&x);
    let mut out = unit.clone();
    let mut pow = unit;
    for _ in 0..order {
        pow = stack_sums(&pow, &dev, order);
        if pow.is_zero() {
            break;
        }
        out = out.add(&pow);
    }
    out
}

/// Runs a program on chord states starting from `top`.
pub fn run_program(ops: &[Op], top: &[Sign], assoc: &Associator, order: usize) -> ZValue {
    let corr_sum = correction_inverse(assoc, order);
    let corr: Vec<(Vec<(u32, u32)>, Rational)> = corr_sum.iter().map(|(d, c)| (chord_slots(d), c.clone())).collect();
    let mut e = Engine { order, sk: Skeleton::new(top), correction: Some(&corr) };
    let states = e.run(ops, initial());
    finish(e.sk, states, order)
}

/// Truncated Kontsevich value of a word.
pub fn z_eval(word: &TangleWord, order: usize) -> Result<ZValue, KontsevichError> {
    let assoc = Associator::cached(order)?;
    let ops = plan(word, &assoc, order);
    Ok(run_program(&ops, word.top(), &assoc, order))
}
