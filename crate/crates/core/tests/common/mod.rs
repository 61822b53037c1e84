//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use superchord::diagrams::{ChordDiagram, Kind};
use superchord::liesuper::{InvariantTensor, Representation};
use superchord::scalars::{Rational, Ring};
use superchord::supergraded::Mat;

/// Sign of sorting `parities` into `order` by adjacent swaps.
fn bubble_sign(mut items: Vec<(usize, bool)>) -> bool {
    let mut odd = false;
    let n = items.len();
    for i in 0..n {
        for j in 0..n - 1 - i {
            if items[j].0 > items[j + 1].0 {
                if items[j].1 && items[j + 1].1 {
                    odd = !odd;
                }
                items.swap(j, j + 1);
            }
        }
    }
    odd
}

/// Weight of a diagram by summing over every generator assignment and
/// every basis index along each component.
///
/// Returns the scalar for closed diagrams, and for a single interval the
/// full operator.
pub fn brute_weight<R: Ring>(t: &InvariantTensor<R>, v: &Representation<R>, d: &ChordDiagram) -> Mat<R> {
    let comps = d.components();
    let chords: Vec<_> = d.chords().into_values().collect();
    let gens: Vec<(usize, usize, R)> = t.terms().map(|(i, j, c)| (i, j, c.clone())).collect();
    let dim = v.dim();
    let par = v.carrier().parities().to_vec();
    let long = comps.iter().any(|c| c.kind == Kind::Interval);
    assert!(!long || comps.len() == 1);
    let mut total = Mat::zeros(if long { dim } else { 1 }, if long { dim } else { 1 });

    // tensor position of each endpoint: per component, slots read backwards
    let mut rank = HashMap::new();
    let mut pos = 0;
    for (ci, c) in comps.iter().enumerate() {
        for s in (0..c.slots.len()).rev() {
            rank.insert((ci, s), pos);
            pos += 1;
        }
    }

    let m = chords.len();
    let mut pick = vec![0usize; m];
    loop {
        let mut coeff = R::one();
        let mut ends = Vec::new();
        let mut at: HashMap<(usize, usize), usize> = HashMap::new();
        for (k, (p, q)) in chords.iter().enumerate() {
            let (i, j, c) = &gens[pick[k]];
            coeff = coeff.mul(c);
            ends.push((rank[&(p.comp, p.index)], v.gen_parity(*i)));
            ends.push((rank[&(q.comp, q.index)], v.gen_parity(*j)));
            at.insert((p.comp, p.index), *i);
            at.insert((q.comp, q.index), *j);
        }
        if bubble_sign(ends) {
            coeff = coeff.neg();
        }
        if !coeff.is_zero() {
            let mut scalar = coeff;
            for (ci, c) in comps.iter().enumerate() {
                let n = c.slots.len();
                // chains a_0 → a_1 → … → a_n with ρ(x_s)[a_{s+1}, a_s]
                let mut chain: Vec<(usize, usize, R)> = (0..dim).map(|a| (a, a, R::one())).collect();
                for s in 0..n {
                    let act = v.action(at[&(ci, s)]);
                    let mut next = Vec::new();
                    for (start, a, x) in &chain {
                        for b in 0..dim {
                            let e = act.get(b, *a);
                            if !e.is_zero() {
                                next.push((*start, b, x.mul(e)));
                            }
                        }
                    }
                    chain = next;
                }
                match c.kind {
                    Kind::Circle => {
                        let mut tr = R::zero();
                        for (start, end, x) in chain {
                            if start == end {
                                if par[start] {
                                    tr = tr.sub(&x);
                                } else {
                                    tr.add_assign(&x);
                                }
                            }
                        }
                        scalar = scalar.mul(&tr);
                    }
                    Kind::Interval => {
                        for (start, end, x) in chain {
                            total.add_at(end, start, &x.mul(&scalar));
                        }
                        scalar = R::zero();
                    }
                }
            }
            if !long {
                total.add_at(0, 0, &scalar);
            }
        }
        let mut k = 0;
        while k < m {
            pick[k] += 1;
            if pick[k] < gens.len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
        if k == m {
            break;
        }
    }
    total
}

/// Integer polynomial in `z`, lowest degree first.
pub type ZPoly = Vec<i64>;

fn padd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n).map(|k| a.get(k).unwrap_or(&0) + b.get(k).unwrap_or(&0)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn pshift(a: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return a.clone();
    }
    let mut out = vec![0];
    out.extend(a);
    out
}

fn pneg(a: &ZPoly) -> ZPoly {
    a.iter().map(|x| -x).collect()
}

/// Hecke algebra element in the permutation basis `T_w`.
type Hecke = HashMap<Vec<usize>, ZPoly>;

fn hadd(h: &mut Hecke, w: Vec<usize>, c: ZPoly) {
    let e = h.entry(w.clone()).or_default();
    *e = padd(e, &c);
    if e.is_empty() {
        h.remove(&w);
    }
}

/// Right multiplication by `T_i`, with `T_i² = z·T_i + 1`.
fn times_t(h: &Hecke, i: usize) -> Hecke {
    let mut out = Hecke::new();
    for (w, c) in h {
        let mut ws = w.clone();
        ws.swap(i, i + 1);
        if w[i] < w[i + 1] {
            hadd(&mut out, ws, c.clone());
        } else {
            hadd(&mut out, w.clone(), pshift(c));
            hadd(&mut out, ws, c.clone());
        }
    }
    out
}

/// Right multiplication by `T_i^{-1} = T_i − z`.
fn times_t_inv(h: &Hecke, i: usize) -> Hecke {
    let mut out = times_t(h, i);
    for (w, c) in h {
        hadd(&mut out, w.clone(), pneg(&pshift(c)));
    }
    out
}

fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    'outer: loop {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

/// Trace with `tr(1) = 1` on one strand, `tr(x) = 0` for `x` on fewer
/// strands than `n ≥ 2`, and `tr(x T_{n−1} y) = tr(xy)`.
fn trace(h: &Hecke, n: usize) -> ZPoly {
    if n == 1 {
        return h.get(&vec![0]).cloned().unwrap_or_default();
    }
    let mut acc = ZPoly::new();
    for (w, c) in h {
        let j = w[n - 1];
        if j == n - 1 {
            continue;
        }
        // w = (s_j ⋯ s_{n−2}) · u with u fixing the last point
        let mut cyc: Vec<usize> = (0..n).collect();
        for i in j..n - 1 {
            cyc.swap(i, i + 1);
        }
        let mut cinv = vec![0; n];
        for (k, &x) in cyc.iter().enumerate() {
            cinv[x] = k;
        }
        let u: Vec<usize> = (0..n).map(|k| cinv[w[k]]).collect();
        assert_eq!(u[n - 1], n - 1);
        let mut x: Hecke = Hecke::from([((0..n - 1).collect::<Vec<_>>(), vec![1])]);
        for i in j..n - 2 {
            x = times_t(&x, i);
        }
        for i in reduced_word(&u[..n - 1]) {
            x = times_t(&x, i);
        }
        let t = trace(&x, n - 1);
        let mut prod = vec![0; t.len() + c.len()];
        for (a, x) in t.iter().enumerate() {
            for (b, y) in c.iter().enumerate() {
                prod[a + b] += x * y;
            }
        }
        acc = padd(&acc, &prod);
    }
    acc
}

/// Conway polynomial of the closure of an `n`-strand braid given as
/// signed 1-based generators.
pub fn conway(n: usize, braid: &[i64]) -> ZPoly {
    let mut h: Hecke = Hecke::from([((0..n).collect::<Vec<_>>(), vec![1])]);
    for &g in braid {
        let i = g.unsigned_abs() as usize - 1;
        h = if g > 0 { times_t(&h, i) } else { times_t_inv(&h, i) };
    }
    let mut p = trace(&h, n);
    p.resize(p.len().max(3), 0);
    p
}

/// `c₂`, the `z²` coefficient.
pub fn conway_c2(n: usize, braid: &[i64]) -> Rational {
    Rational::from_int(conway(n, braid)[2])
}
