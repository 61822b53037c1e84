//! Turns a word into primitive operations on left-nested strand objects.
//!
//! A crossing at `p` is conjugated by the associator moving strand `p` out
//! of the nest `L` of strands to its left. Cups and caps use the raw
//! pairings, the corrected coevaluation and, for the reversed duality, the
//! braiding and the twist `θ = exp(h·C/2)`.

use super::associator::Associator;
use super::horizontal::Elem;
use super::word::{Gen, Sign, TangleWord};
use crate::scalars::{Rational, Ring};

/// A degree-1 generator: a sum of chords between strand positions, or the
/// Casimir on one strand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    Chords(Vec<(usize, usize)>),
    Casimir(usize),
}

#[derive(Clone, Debug)]
pub enum Op {
    /// `Σ c·w` over words in `letters`; the last letter acts first.
    Elem { letters: Vec<Letter>, terms: Vec<(Rational, Vec<u8>)> },
    Swap(usize),
    /// `1 → V⊗V*` at positions `p, p+1`.
    RawCup(usize),
    /// `V*⊗V → 1` at positions `p, p+1`.
    RawCap(usize),
    /// Inverse of the zigzag defect on the downward strand at `p`.
    Correct(usize),
}

/// Sign of the twist inserted by `kink+`.
pub const KINK_TWIST: i64 = 1;

fn exp_terms(c: &Rational, order: usize) -> Vec<(Rational, Vec<u8>)> {
    let mut out = Vec::new();
    let mut coef = Rational::one();
    for k in 0..=order {
        out.push((coef.clone(), vec![0u8; k]));
        coef = coef.mul(c).mul(&Rational::new(1, k as i64 + 1));
    }
    out
}

fn exp_op(letter: Letter, c: Rational, order: usize) -> Op {
    Op::Elem { letters: vec![letter], terms: exp_terms(&c, order) }
}

/// `s·(exp(ht/2) − exp(−ht/2))` on a chord.
fn sing_op(p: usize, s: i64, order: usize) -> Op {
    let half = Rational::new(1, 2);
    let plus = exp_terms(&half, order);
    let minus = exp_terms(&half.neg(), order);
    let terms = plus
        .into_iter()
        .zip(minus)
        .map(|((a, w), (b, _))| (a.sub(&b).mul(&Rational::from_int(s)), w))
        .filter(|(c, _)| !c.is_zero())
        .collect();
    Op::Elem { letters: vec![Letter::Chords(vec![(p, p + 1)])], terms }
}

fn assoc_op(p: usize, e: &Elem) -> Option<Op> {
    if p == 0 {
        return None;
    }
    let left = Letter::Chords((0..p).map(|l| (l, p)).collect());
    let right = Letter::Chords(vec![(p, p + 1)]);
    Some(Op::Elem { letters: vec![left, right], terms: e.iter().map(|(w, c)| (c.clone(), w.clone())).collect() })
}

pub fn twist_op(p: usize, power: i64, order: usize) -> Op {
    exp_op(Letter::Casimir(p), Rational::new(power, 2), order)
}

fn braid_op(p: usize, positive: bool, order: usize) -> Op {
    exp_op(Letter::Chords(vec![(p, p + 1)]), Rational::new(if positive { 1 } else { -1 }, 2), order)
}

/// Primitive program of a word, truncated at `order`.
pub fn plan(word: &TangleWord, assoc: &Associator, order: usize) -> Vec<Op> {
    let mut obj: Vec<Sign> = word.top().to_vec();
    let mut ops = Vec::new();
    let phi = |p| assoc_op(p, assoc.phi());
    let phi_inv = |p| assoc_op(p, assoc.phi_inv());
    for e in word.events() {
        let p = e.pos;
        match e.gen {
            Gen::Id(_) => {}
            Gen::Cross { positive, sing } => {
                ops.extend(phi(p));
                if sing {
                    ops.push(sing_op(p, obj[p].value() * obj[p + 1].value(), order));
                } else {
                    ops.push(braid_op(p, positive, order));
                }
                ops.push(Op::Swap(p));
                ops.extend(phi_inv(p));
                obj.swap(p, p + 1);
            }
            Gen::Cup(a, b) => {
                ops.push(Op::RawCup(p));
                ops.push(Op::Correct(p));
                if a == Sign::Minus {
                    ops.push(braid_op(p, true, order));
                    ops.push(Op::Swap(p));
                    ops.push(twist_op(p + 1, 1, order));
                }
                ops.extend(phi_inv(p));
                obj.splice(p..p, [a, b]);
            }
            Gen::Cap(a, _) => {
                ops.extend(phi(p));
                if a == Sign::Plus {
                    ops.push(twist_op(p, 1, order));
                    ops.push(braid_op(p, true, order));
                    ops.push(Op::Swap(p));
                }
                ops.push(Op::RawCap(p));
                obj.drain(p..p + 2);
            }
            Gen::Kink(positive) => {
                ops.push(twist_op(p, if positive { KINK_TWIST } else { -KINK_TWIST }, order));
            }
        }
    }
    ops
}

/// The zigzag `(id⊗ev)∘Φ∘(coev⊗id)` on one downward strand.
pub fn zigzag(assoc: &Associator) -> Vec<Op> {
    let mut ops = vec![Op::RawCup(0)];
    ops.extend(assoc_op(1, assoc.phi()));
    ops.push(Op::RawCap(1));
    ops
}

/// Words of an `Elem` grouped into a trie along their order of action.
pub struct Trie {
    pub coeff: Option<Rational>,
    pub children: Vec<(u8, Trie)>,
}

impl Trie {
    pub fn build(terms: &[(Rational, Vec<u8>)], order: usize) -> Trie {
        let mut root = Trie { coeff: None, children: Vec::new() };
        for (c, w) in terms {
            if w.len() > order || c.is_zero() {
                continue;
            }
            let mut node = &mut root;
            for &l in w.iter().rev() {
                let idx = match node.children.iter().position(|(x, _)| *x == l) {
                    Some(i) => i,
                    None => {
                        node.children.push((l, Trie { coeff: None, children: Vec::new() }));
                        node.children.len() - 1
                    }
                };
                node = &mut node.children[idx].1;
            }
            node.coeff = Some(node.coeff.take().map_or(c.clone(), |x| x.add(c)));
        }
        root
    }
}
