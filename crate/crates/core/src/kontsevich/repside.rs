//! Representation side: runs a primitive program on tensor states with
//! coefficients graded by powers of `h`.

use std::collections::HashMap;

use super::associator::Associator;
use super::planner::{plan, zigzag, Letter, Op, Trie};
use super::word::{Sign, TangleWord};
use super::KontsevichError;
use crate::liesuper::{dual, InvariantTensor, Representation};
use crate::scalars::{sign, HSeries, Rational, Ring};
use crate::supergraded::Mat;

/// Value of a word on the representation side: a series for closed words,
/// otherwise a series of operators from the top to the bottom object.
#[derive(Clone, Debug, PartialEq)]
pub enum WzValue<R: Ring> {
    Scalar(HSeries<R>),
    Operator(Vec<Mat<R>>),
}

impl<R: Ring> WzValue<R> {
    /// The series, or `λ(h)` when every coefficient is `λ_k·Id`.
    pub fn scalar_series(&self) -> Option<HSeries<R>> {
        match self {
            WzValue::Scalar(s) => Some(s.clone()),
            WzValue::Operator(ms) => {
                let c: Option<Vec<R>> =
                    ms.iter().map(|m| if m.is_zero() { Some(R::zero()) } else { m.scalar_value() }).collect();
                c.map(|c| HSeries::from_coeffs(ms.len() - 1, c))
            }
        }
    }
}

type Key = (u32, Vec<u8>);
type States<R> = HashMap<Key, Vec<R>>;
/// Column-sparse operator: for each input index, the nonzero outputs.
type Sparse<R> = Vec<Vec<(u8, R)>>;

fn sparse<R: Ring>(m: &Mat<R>) -> Sparse<R> {
    let mut cols = vec![Vec::new(); m.cols()];
    for (i, j, v) in m.triplets() {
        cols[j].push((i as u8, v.clone()));
    }
    cols
}

/// `Σ t^{ij} ρ_a(e_i)⊗ρ_b(e_j)` on input pairs, the sign for the
/// first factor's own vector included; `odd` entries still owe the sign of
/// the strands in between.
type TwoBody<R> = HashMap<(u8, u8), Vec<(u8, u8, R, bool)>>;

struct Tables<R> {
    parity: Vec<bool>,
    two: [[TwoBody<R>; 2]; 2],
    casimir: [Sparse<R>; 2],
    correction: Vec<Sparse<R>>,
}

fn two_body<R: Ring>(t: &InvariantTensor<R>, a: &Representation<R>, b: &Representation<R>, parity: &[bool]) -> TwoBody<R> {
    let mut out: TwoBody<R> = HashMap::new();
    for (i, j, c) in t.terms() {
        let odd = a.gen_parity(i);
        let (sa, sb) = (sparse(a.action(i)), sparse(b.action(j)));
        for (ia, col_a) in sa.iter().enumerate() {
            for (ra, va) in col_a {
                let s: R = sign(odd && parity[ia]);
                let base = c.mul(va).mul(&s);
                for (ib, col_b) in sb.iter().enumerate() {
                    for (rb, vb) in col_b {
                        out.entry((ia as u8, ib as u8)).or_default().push((*ra, *rb, base.mul(vb), odd));
                    }
                }
            }
        }
    }
    out
}

struct Engine<'a, R> {
    order: usize,
    tables: &'a Tables<R>,
    /// 0 for `V`, 1 for `V*` at each position.
    types: Vec<usize>,
}

fn add_shifted<R: Ring>(out: &mut States<R>, key: Key, src: &[R], val: &R, shift: usize, order: usize) {
    let e = out.entry(key).or_insert_with(|| vec![R::zero(); order + 1]);
    for k in 0..=order - shift {
        if !src[k].is_zero() {
            e[k + shift].add_assign(&src[k].mul(val));
        }
    }
}

fn prune<R: Ring>(s: &mut States<R>) {
    s.retain(|_, v| v.iter().any(|x| !x.is_zero()));
}

impl<R: Ring> Engine<'_, R> {
    fn apply_letter(&self, states: &States<R>, l: &Letter) -> States<R> {
        let mut out = States::new();
        let tb = self.tables;
        for ((col, idx), ser) in states {
            if ser[..self.order].iter().all(R::is_zero) {
                continue;
            }
            match l {
                Letter::Chords(pairs) => {
                    for &(a, b) in pairs {
                        let (a, b) = (a.min(b), a.max(b));
                        let table = &tb.two[self.types[a]][self.types[b]];
                        let Some(entries) = table.get(&(idx[a], idx[b])) else { continue };
                        let between = idx[a + 1..b].iter().filter(|&&x| tb.parity[x as usize]).count() % 2 == 1;
                        for (ra, rb, v, odd) in entries {
                            let mut ni = idx.clone();
                            ni[a] = *ra;
                            ni[b] = *rb;
                            let v = if *odd && between { v.neg() } else { v.clone() };
                            add_shifted(&mut out, (*col, ni), ser, &v, 1, self.order);
                        }
                    }
                }
                Letter::Casimir(p) => {
                    for (r, v) in &tb.casimir[self.types[*p]][idx[*p] as usize] {
                        let mut ni = idx.clone();
                        ni[*p] = *r;
                        add_shifted(&mut out, (*col, ni), ser, v, 1, self.order);
                    }
                }
            }
        }
        prune(&mut out);
        out
    }

    fn apply_elem(&self, states: &States<R>, letters: &[Letter], terms: &[(Rational, Vec<u8>)]) -> States<R> {
        let trie = Trie::build(terms, self.order);
        let mut out = States::new();
        let mut stack: Vec<(&Trie, States<R>)> = vec![(&trie, states.clone())];
        while let Some((node, cur)) = stack.pop() {
            if let Some(c) = &node.coeff {
                let c = R::from_rational(c);
                for (k, v) in &cur {
                    add_shifted(&mut out, k.clone(), v, &c, 0, self.order);
                }
            }
            for (l, child) in &node.children {
                let next = self.apply_letter(&cur, &letters[*l as usize]);
                if !next.is_empty() {
                    stack.push((child, next));
                }
            }
        }
        prune(&mut out);
        out
    }

    fn run(&mut self, ops: &[Op], mut states: States<R>) -> States<R> {
        let tb = self.tables;
        let dim = tb.parity.len();
        for op in ops {
            match op {
                Op::Elem { letters, terms } => states = self.apply_elem(&states, letters, terms),
                Op::Swap(p) => {
                    let p = *p;
                    states = states
                        .into_iter()
                        .map(|((col, mut idx), ser)| {
                            let odd = tb.parity[idx[p] as usize] && tb.parity[idx[p + 1] as usize];
                            idx.swap(p, p + 1);
                            let ser = if odd { ser.iter().map(R::neg).collect() } else { ser };
                            ((col, idx), ser)
                        })
                        .collect();
                    self.types.swap(p, p + 1);
                }
                Op::RawCup(p) => {
                    let p = *p;
                    let mut out = States::new();
                    for ((col, idx), ser) in states {
                        for i in 0..dim as u8 {
                            let mut ni = idx.clone();
                            ni.splice(p..p, [i, i]);
                            out.insert((col, ni), ser.clone());
                        }
                    }
                    states = out;
                    self.types.splice(p..p, [0, 1]);
                }
                Op::RawCap(p) => {
                    let p = *p;
                    debug_assert_eq!(&self.types[p..p + 2], &[1, 0]);
                    let mut out: States<R> = States::new();
                    for ((col, idx), ser) in states {
                        if idx[p] != idx[p + 1] {
                            continue;
                        }
                        let mut ni = idx;
                        ni.drain(p..p + 2);
                        add_shifted(&mut out, (col, ni), &ser, &R::one(), 0, self.order);
                    }
                    prune(&mut out);
                    states = out;
                    self.types.drain(p..p + 2);
                }
                Op::Correct(p) => {
                    let p = *p;
                    let mut out = States::new();
                    for ((col, idx), ser) in &states {
                        for (shift, y) in tb.correction.iter().enumerate().take(self.order + 1) {
                            for (r, v) in &y[idx[p] as usize] {
                                let mut ni = idx.clone();
                                ni[p] = *r;
                                add_shifted(&mut out, (*col, ni), ser, v, shift, self.order);
                            }
                        }
                    }
                    prune(&mut out);
                    states = out;
                }
            }
        }
        states
    }
}

fn start<R: Ring>(types: &[usize], dim: usize, order: usize) -> States<R> {
    let n = types.len();
    let total = dim.pow(n as u32);
    (0..total)
        .map(|c| {
            let mut idx = vec![0u8; n];
            let mut x = c;
            for k in (0..n).rev() {
                idx[k] = (x % dim) as u8;
                x /= dim;
            }
            let mut ser = vec![R::zero(); order + 1];
            ser[0] = R::one();
            ((c as u32, idx), ser)
        })
        .collect()
}

fn collect<R: Ring>(states: States<R>, n_in: usize, n_out: usize, dim: usize, order: usize) -> WzValue<R> {
    if n_in == 0 && n_out == 0 {
        let ser = states.get(&(0, Vec::new())).cloned().unwrap_or_else(|| vec![R::zero(); order + 1]);
        return WzValue::Scalar(HSeries::from_coeffs(order, ser));
    }
    let (rows, cols) = (dim.pow(n_out as u32), dim.pow(n_in as u32));
    let mut mats = vec![Mat::zeros(rows, cols); order + 1];
    for ((col, idx), ser) in states {
        let row = idx.iter().fold(0usize, |acc, &x| acc * dim + x as usize);
        for (k, v) in ser.into_iter().enumerate() {
            if !v.is_zero() {
                mats[k].set(row, col as usize, v);
            }
        }
    }
    WzValue::Operator(mats)
}

fn tables<R: Ring>(t: &InvariantTensor<R>, v: &Representation<R>, assoc: &Associator, order: usize) -> Tables<R> {
    let vd = dual(v);
    let parity = v.carrier().parities().to_vec();
    let two = [
        [two_body(t, v, v, &parity), two_body(t, v, &vd, &parity)],
        [two_body(t, &vd, v, &parity), two_body(t, &vd, &vd, &parity)],
    ];
    let casimir = [sparse(&t.casimir(v)), sparse(&t.casimir(&vd))];
    let mut tb = Tables { parity, two, casimir, correction: Vec::new() };

    let dim = v.dim();
    let mut e = Engine { order, tables: &tb, types: vec![0] };
    let states = e.run(&zigzag(assoc), start(&[0], dim, order));
    let x = match collect(states, 1, 1, dim, order) {
        WzValue::Operator(m) => m,
        WzValue::Scalar(_) => unreachable!(),
    };
    // Y = X^{-1}: Y_0 = 1, Y_k = −Σ_{j≥1} X_j Y_{k−j}
    let mut y: Vec<Mat<R>> = vec![Mat::identity(dim)];
    for k in 1..=order {
        let mut acc = Mat::zeros(dim, dim);
        for j in 1..=k {
            acc = acc.sub(&x[j].mul(&y[k - j]));
        }
        y.push(acc);
    }
    tb.correction = y.iter().map(sparse).collect();
    tb
}

/// Runs a program with every component colored `v`, `t` on the chords.
pub fn run_program<R: Ring>(
    ops: &[Op],
    top: &[Sign],
    bottom_len: usize,
    t: &InvariantTensor<R>,
    v: &Representation<R>,
    assoc: &Associator,
    order: usize,
) -> WzValue<R> {
    let tb = tables(t, v, assoc, order);
    let types: Vec<usize> = top.iter().map(|s| if *s == Sign::Plus { 0 } else { 1 }).collect();
    let dim = v.dim();
    let mut e = Engine { order, tables: &tb, types: types.clone() };
    let states = e.run(ops, start(&types, dim, order));
    collect(states, top.len(), bottom_len, dim, order)
}

/// `W_{g,V} ∘ Z` computed on the representation side.
pub fn wz_eval<R: Ring>(
    word: &TangleWord,
    t: &InvariantTensor<R>,
    v: &Representation<R>,
    order: usize,
) -> Result<WzValue<R>, KontsevichError> {
    let assoc = Associator::cached(order)?;
    let ops = plan(word, &assoc, order);
    Ok(run_program(&ops, word.top(), word.bottom().len(), t, v, &assoc, order))
}
