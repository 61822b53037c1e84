//! Horizontal chord algebras `A^h_n` and the free algebra on two letters.
//!
//! Generators `t_ab` (a < b) carry level `b`. Words are kept with
//! non-increasing levels, using `[t_ab, t_ak] = t_ak t_bk − t_bk t_ak` and
//! `[t_ab, t_bk] = t_bk t_ak − t_ak t_bk` for `b < k` and commutation of
//! disjoint generators. Within one level the algebra is free.

use std::cell::RefCell;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use crate::scalars::{Rational, Ring};

pub type Word = Vec<u8>;
pub type Elem = BTreeMap<Word, Rational>;

pub fn add_into(acc: &mut Elem, w: Word, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            o.get_mut().add_assign(c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub fn elem_add(a: &Elem, b: &Elem) -> Elem {
    let mut out = a.clone();
    for (w, c) in b {
        add_into(&mut out, w.clone(), c);
    }
    out
}

pub fn elem_sub(a: &Elem, b: &Elem) -> Elem {
    elem_add(a, &elem_scale(b, &Rational::from_int(-1)))
}

pub fn elem_scale(a: &Elem, c: &Rational) -> Elem {
    if c.is_zero() {
        return Elem::new();
    }
    a.iter().map(|(w, v)| (w.clone(), v.mul(c))).collect()
}

pub fn degree_part(a: &Elem, k: usize) -> Elem {
    a.iter().filter(|(w, _)| w.len() == k).map(|(w, v)| (w.clone(), v.clone())).collect()
}

pub fn one() -> Elem {
    let mut e = Elem::new();
    e.insert(Vec::new(), Rational::one());
    e
}

/// Product in the free algebra, truncated above degree `max`.
pub fn free_mul(a: &Elem, b: &Elem, max: usize) -> Elem {
    let mut out = Elem::new();
    for (u, x) in a {
        for (v, y) in b {
            if u.len() + v.len() > max {
                continue;
            }
            let mut w = u.clone();
            w.extend_from_slice(v);
            add_into(&mut out, w, &x.mul(y));
        }
    }
    out
}

/// `exp(x)` for `x` without constant term, truncated above `max`.
pub fn free_exp(x: &Elem, max: usize) -> Elem {
    let mut out = one();
    let mut pow = one();
    for k in 1..=max {
        pow = elem_scale(&free_mul(&pow, x, max), &Rational::new(1, k as i64));
        if pow.is_empty() {
            break;
        }
        out = elem_add(&out, &pow);
    }
    out
}

/// Right-normed bracket `[x1,[x2,…,xk]]` of letters.
pub fn right_normed(letters: &[u8]) -> Elem {
    let mut acc: Elem = BTreeMap::from([(vec![*letters.last().unwrap()], Rational::one())]);
    for &l in letters[..letters.len() - 1].iter().rev() {
        let x: Elem = BTreeMap::from([(vec![l], Rational::one())]);
        let max = usize::MAX;
        acc = elem_sub(&free_mul(&x, &acc, max), &free_mul(&acc, &x, max));
    }
    acc
}

/// `A^h_n` with memoised normal ordering.
pub struct Horizontal {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), u8>,
    memo: RefCell<HashMap<Word, Vec<(Word, Rational)>>>,
}

impl Horizontal {
    pub fn new(n: usize) -> Self {
        let mut pairs = Vec::new();
        for b in 1..n {
            for a in 0..b {
                pairs.push((a, b));
            }
        }
        let index = pairs.iter().enumerate().map(|(i, &p)| (p, i as u8)).collect();
        Horizontal { n, pairs, index, memo: RefCell::new(HashMap::new()) }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn pair(&self, g: u8) -> (usize, usize) {
        self.pairs[g as usize]
    }

    fn level(&self, g: u8) -> usize {
        self.pairs[g as usize].1
    }

    pub fn gen_id(&self, a: usize, b: usize) -> u8 {
        let key = if a < b { (a, b) } else { (b, a) };
        self.index[&key]
    }

    /// `t_ab` as an element.
    pub fn t(&self, a: usize, b: usize) -> Elem {
        BTreeMap::from([(vec![self.gen_id(a, b)], Rational::one())])
    }

    fn normalize_word(&self, w: &[u8]) -> Vec<(Word, Rational)> {
        if let Some(r) = self.memo.borrow().get(w) {
            return r.clone();
        }
        let bad = (0..w.len().saturating_sub(1)).find(|&i| self.level(w[i]) < self.level(w[i + 1]));
        let result = match bad {
            None => vec![(w.to_vec(), Rational::one())],
            Some(i) => {
                let (g, h) = (w[i], w[i + 1]);
                let (a, b) = self.pair(g);
                let (c, k) = self.pair(h);
                let mut parts: Vec<(Word, Rational)> = Vec::new();
                let splice = |mid: &[u8]| -> Word {
                    let mut v = w[..i].to_vec();
                    v.extend_from_slice(mid);
                    v.extend_from_slice(&w[i + 2..]);
                    v
                };
                parts.push((splice(&[h, g]), Rational::one()));
                let (tak, tbk) = (self.gen_id(a, k), self.gen_id(b, k));
                if c == a {
                    parts.push((splice(&[tak, tbk]), Rational::one()));
                    parts.push((splice(&[tbk, tak]), Rational::from_int(-1)));
                } else if c == b {
                    parts.push((splice(&[tbk, tak]), Rational::one()));
                    parts.push((splice(&[tak, tbk]), Rational::from_int(-1)));
                }
                let mut acc = Elem::new();
                for (pw, pc) in parts {
                    for (nw, nc) in self.normalize_word(&pw) {
                        add_into(&mut acc, nw, &nc.mul(&pc));
                    }
                }
                acc.into_iter().collect()
            }
        };
        self.memo.borrow_mut().insert(w.to_vec(), result.clone());
        result
    }

    pub fn normalize(&self, x: &Elem) -> Elem {
        let mut out = Elem::new();
        for (w, c) in x {
            for (nw, nc) in self.normalize_word(w) {
                add_into(&mut out, nw, &nc.mul(c));
            }
        }
        out
    }

    /// Product truncated above degree `max`, in normal form.
    pub fn mul(&self, a: &Elem, b: &Elem, max: usize) -> Elem {
        self.normalize(&free_mul(a, b, max))
    }

    /// `exp(c·x)` for a degree-1 element `x`.
    pub fn exp(&self, x: &Elem, c: &Rational, max: usize) -> Elem {
        self.normalize(&free_exp(&elem_scale(x, c), max))
    }

    /// Image of `x` under `t_ab ↦ t_{f(a) f(b)}`.
    pub fn relabel(&self, x: &Elem, f: &[usize]) -> Elem {
        let raw: Elem = x
            .iter()
            .map(|(w, c)| {
                let nw = w
                    .iter()
                    .map(|&g| {
                        let (a, b) = self.pair(g);
                        self.gen_id(f[a], f[b])
                    })
                    .collect();
                (nw, c.clone())
            })
            .collect();
        self.normalize(&raw)
    }

    /// Substitutes the two letters of a free-algebra element.
    pub fn substitute(&self, x: &Elem, images: [&Elem; 2], max: usize) -> Elem {
        let mut out = Elem::new();
        for (w, c) in x {
            if w.len() > max {
                continue;
            }
            let mut term = one();
            for &l in w {
                term = free_mul(&term, images[l as usize], max);
            }
            for (tw, tc) in term {
                add_into(&mut out, tw, &tc.mul(c));
            }
        }
        self.normalize(&out)
    }
}

/// A morphism between permuted strand orders: first apply `elem`, then move
/// the strand at position `i` to position `perm[i]`.
#[derive(Clone, Debug)]
pub struct PermElem {
    pub perm: Vec<usize>,
    pub elem: Elem,
}

impl PermElem {
    pub fn plain(n: usize, elem: Elem) -> Self {
        PermElem { perm: (0..n).collect(), elem }
    }

    /// `later ∘ earlier`.
    pub fn then(&self, later: &PermElem, alg: &Horizontal, max: usize) -> PermElem {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        let pulled = alg.relabel(&later.elem, &inv);
        PermElem {
            perm: self.perm.iter().map(|&p| later.perm[p]).collect(),
            elem: alg.mul(&pulled, &self.elem, max),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_term_in_normal_form() {
        let h = Horizontal::new(3);
        let max = 4;
        // [t01, t02 + t12] = 0
        let x = h.t(0, 1);
        let y = elem_add(&h.t(0, 2), &h.t(1, 2));
        let c = elem_sub(&h.mul(&x, &y, max), &h.mul(&y, &x, max));
        assert!(c.is_empty());
        // t01 + t02 + t12 is central
        let z = elem_add(&h.t(0, 1), &y);
        for g in [h.t(0, 1), h.t(0, 2), h.t(1, 2)] {
            let c = elem_sub(&h.mul(&z, &g, max), &h.mul(&g, &z, max));
            assert!(c.is_empty());
        }
    }

    #[test]
    fn free_lie_dimensions() {
        use crate::linalg::Echelon;
        let dims: Vec<usize> = (1..=4)
            .map(|k| {
                let mut e = Echelon::new();
                for m in 0..(1u32 << k) {
                    let letters: Vec<u8> = (0..k).map(|i| (m >> i & 1) as u8).collect();
                    e.insert(right_normed(&letters));
                }
                e.rank()
            })
            .collect();
        assert_eq!(dims, vec![2, 1, 2, 3]);
    }
}
