//! Lie superalgebra weight systems on chord diagrams.
//!
//! A chord carries `t = Σ t^{ij} e_i⊗e_j`; its endpoints receive `ρ(e_i)`
//! and `ρ(e_j)`. Each component multiplies its insertions in orientation
//! order, circles are closed by a supertrace, and moving odd insertions
//! past each other costs the Koszul sign.

use std::sync::OnceLock;

use thiserror::Error;

use crate::diagrams::{ChordDiagram, Kind};
use crate::liesuper::{build_gl, links_gould_tensor, v_alpha, InvariantTensor, LieSuperAlg, Representation};
use crate::scalars::{sign, AlphaScalar, Ring};
use crate::supergraded::Mat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WsError {
    #[error("coloring has {0} entries for {1} components")]
    Coloring(usize, usize),
    #[error("coloring mixes algebras")]
    AlgebraMismatch,
    #[error("expected a closed diagram")]
    NotClosed,
    #[error("expected a diagram on a single interval")]
    NotLong,
    #[error("invariant endomorphism space not 1-dimensional")]
    NotScalar,
}

/// Closed diagrams give a scalar, diagrams with intervals an operator on
/// the tensor product of the interval colors, in component order.
#[derive(Clone, Debug, PartialEq)]
pub enum Eval<R> {
    Scalar(R),
    Operator(Mat<R>),
}

impl<R: Ring> Eval<R> {
    pub fn scalar(self) -> Option<R> {
        match self {
            Eval::Scalar(r) => Some(r),
            Eval::Operator(_) => None,
        }
    }

    pub fn operator(self) -> Option<Mat<R>> {
        match self {
            Eval::Operator(m) => Some(m),
            Eval::Scalar(_) => None,
        }
    }
}

/// Per-chord insertion choices `(odd, ρ_first(e_i), Σ_j t^{ij} ρ_second(e_j))`.
type Choices<R> = Vec<(bool, Mat<R>, Mat<R>)>;

fn chord_choices<R: Ring>(t: &InvariantTensor<R>, first: &Representation<R>, second: &Representation<R>) -> Choices<R> {
    let n = t.coeffs().rows();
    let d2 = second.dim();
    let mut rows: Vec<Option<Mat<R>>> = vec![None; n];
    for (i, j, c) in t.terms() {
        let b = rows[i].get_or_insert_with(|| Mat::zeros(d2, d2));
        *b = b.add(&second.action(j).scale(c));
    }
    rows.into_iter()
        .enumerate()
        .filter_map(|(i, b)| b.filter(|b| !b.is_zero()).map(|b| (first.gen_parity(i), first.action(i).clone(), b)))
        .filter(|(_, a, _)| !a.is_zero())
        .collect()
}

/// State-sum evaluation of `d` with component `c` colored by `coloring[c]`.
pub fn eval_diagram<R: Ring>(
    t: &InvariantTensor<R>,
    coloring: &[&Representation<R>],
    d: &ChordDiagram,
) -> Result<Eval<R>, WsError> {
    let comps = d.components();
    if coloring.len() != comps.len() {
        return Err(WsError::Coloring(coloring.len(), comps.len()));
    }
    if coloring.windows(2).any(|w| w[0].algebra() != w[1].algebra()) {
        return Err(WsError::AlgebraMismatch);
    }
    let chords: Vec<_> = d.chords().into_values().collect();
    let m = chords.len();

    // endpoint e = 2k (first) or 2k+1 (second) of chord k; the target order
    // lists each component's insertions right to left, so that the product
    // ρ(y_r)⋯ρ(y_1) reads off in tensor order
    let mut target = vec![0usize; 2 * m];
    let mut at_slot: Vec<Vec<usize>> = comps.iter().map(|c| vec![0; c.slots.len()]).collect();
    for (k, (p, q)) in chords.iter().enumerate() {
        at_slot[p.comp][p.index] = 2 * k;
        at_slot[q.comp][q.index] = 2 * k + 1;
    }
    let mut pos = 0;
    for slots in &at_slot {
        for &e in slots.iter().rev() {
            target[e] = pos;
            pos += 1;
        }
    }
    let inverted = |a: usize, b: usize| (a < b) != (target[a] < target[b]);

    let choices: Vec<Choices<R>> = chords
        .iter()
        .map(|(p, q)| chord_choices(t, coloring[p.comp], coloring[q.comp]))
        .collect();

    let mut acc: Option<Eval<R>> = None;
    let mut pick = vec![0usize; m];
    if choices.iter().any(Vec::is_empty) {
        return Ok(zero_eval(coloring, comps.iter().map(|c| c.kind)));
    }
    loop {
        let odd: Vec<usize> = (0..m).filter(|&k| choices[k][pick[k]].0).flat_map(|k| [2 * k, 2 * k + 1]).collect();
        let mut inv = 0usize;
        for (x, &a) in odd.iter().enumerate() {
            for &b in &odd[x + 1..] {
                inv += inverted(a, b) as usize;
            }
        }
        let s: R = sign(inv % 2 == 1);

        let mut parts: Vec<(Kind, bool, Mat<R>)> = Vec::with_capacity(comps.len());
        let mut vanished = false;
        for (ci, c) in comps.iter().enumerate() {
            let mut mat = Mat::identity(coloring[ci].dim());
            let mut par = false;
            for &e in &at_slot[ci] {
                let (o, a, b) = &choices[e / 2][pick[e / 2]];
                let f = if e % 2 == 0 { a } else { b };
                mat = f.mul(&mat);
                par ^= o;
            }
            if mat.is_zero() {
                vanished = true;
                break;
            }
            parts.push((c.kind, par, mat));
        }
        if !vanished {
            let term = combine(coloring, parts, s);
            acc = Some(match acc {
                None => term,
                Some(prev) => add_eval(prev, term),
            });
        }

        let mut k = 0;
        while k < m {
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
        if k == m {
            break;
        }
    }
    Ok(acc.unwrap_or_else(|| zero_eval(coloring, comps.iter().map(|c| c.kind))))
}

fn zero_eval<R: Ring>(coloring: &[&Representation<R>], kinds: impl Iterator<Item = Kind>) -> Eval<R> {
    let dims: Vec<usize> = kinds.zip(coloring).filter(|(k, _)| *k == Kind::Interval).map(|(_, r)| r.dim()).collect();
    if dims.is_empty() {
        Eval::Scalar(R::zero())
    } else {
        let n = dims.iter().product();
        Eval::Operator(Mat::zeros(n, n))
    }
}

/// Circles contribute supertraces; intervals are tensored with Koszul signs
/// `(A⊗B)(v⊗w) = (−1)^{|B||v|} Av⊗Bw`.
fn combine<R: Ring>(coloring: &[&Representation<R>], parts: Vec<(Kind, bool, Mat<R>)>, s: R) -> Eval<R> {
    let mut scalar = s;
    let mut op: Option<(Mat<R>, Vec<bool>)> = None;
    for (ci, (kind, par, mat)) in parts.into_iter().enumerate() {
        match kind {
            Kind::Circle => {
                let sp = coloring[ci].carrier();
                let mut tr = R::zero();
                for i in 0..mat.rows() {
                    if sp.parity(i) {
                        tr = tr.sub(mat.get(i, i));
                    } else {
                        tr.add_assign(mat.get(i, i));
                    }
                }
                scalar = scalar.mul(&tr);
            }
            Kind::Interval => {
                let sp = coloring[ci].carrier().parities().to_vec();
                op = Some(match op {
                    None => (mat, sp),
                    Some((prev, prev_par)) => {
                        let (r1, c1) = (prev.rows(), prev.cols());
                        let (r2, c2) = (mat.rows(), mat.cols());
                        let mut out = Mat::zeros(r1 * r2, c1 * c2);
                        for (a, b, x) in prev.triplets() {
                            let sg: R = sign(par && prev_par[b]);
                            let xs = x.mul(&sg);
                            for (c, d, y) in mat.triplets() {
                                out.set(a * r2 + c, b * c2 + d, xs.mul(y));
                            }
                        }
                        let par_all = prev_par.iter().flat_map(|&p| sp.iter().map(move |&q| p ^ q)).collect();
                        (out, par_all)
                    }
                });
            }
        }
    }
    match op {
        None => Eval::Scalar(scalar),
        Some((m, _)) => Eval::Operator(m.scale(&scalar)),
    }
}

fn add_eval<R: Ring>(a: Eval<R>, b: Eval<R>) -> Eval<R> {
    match (a, b) {
        (Eval::Scalar(x), Eval::Scalar(y)) => Eval::Scalar(x.add(&y)),
        (Eval::Operator(x), Eval::Operator(y)) => Eval::Operator(x.add(&y)),
        _ => unreachable!("mixed evaluation kinds"),
    }
}

/// `W_{g,V}(D)` for a diagram on circles, all colored `V`.
pub fn ws_link<R: Ring>(t: &InvariantTensor<R>, v: &Representation<R>, d: &ChordDiagram) -> Result<R, WsError> {
    if !d.is_closed() {
        return Err(WsError::NotClosed);
    }
    let coloring = vec![v; d.components().len()];
    Ok(eval_diagram(t, &coloring, d)?.scalar().unwrap())
}

/// `W̃_{g,V}(D)` for a diagram on one interval: the scalar `λ` with
/// `G(D) = λ·Id`.
pub fn ws_tangle11<R: Ring>(t: &InvariantTensor<R>, v: &Representation<R>, d: &ChordDiagram) -> Result<R, WsError> {
    if d.kinds() != [Kind::Interval] {
        return Err(WsError::NotLong);
    }
    let op = match eval_diagram(t, &[v], d)? {
        Eval::Operator(m) => m,
        Eval::Scalar(_) => unreachable!(),
    };
    if op.is_zero() {
        return Ok(R::zero());
    }
    op.scalar_value().ok_or(WsError::NotScalar)
}

/// gl(2|1), V_α and the Links–Gould tensor `s`, built once.
pub struct LgContext {
    pub algebra: LieSuperAlg,
    pub module: Representation<AlphaScalar>,
    pub tensor: InvariantTensor<AlphaScalar>,
}

pub fn lg_context() -> &'static LgContext {
    static CTX: OnceLock<LgContext> = OnceLock::new();
    CTX.get_or_init(|| {
        let algebra = build_gl(2, 1).expect("gl(2|1)");
        let module = v_alpha(&algebra).expect("V_α");
        let tensor = links_gould_tensor(&algebra).expect("Links–Gould tensor");
        LgContext { algebra, module, tensor }
    })
}

/// The Links–Gould weight system on a diagram on one interval.
pub fn wlg(d: &ChordDiagram) -> Result<AlphaScalar, WsError> {
    let ctx = lg_context();
    ws_tangle11(&ctx.tensor, &ctx.module, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::{casimir_tensor, defining};
    use crate::scalars::Rational;

    #[test]
    fn chordless_circle_is_sdim() {
        let g = build_gl(2, 1).unwrap();
        let t = casimir_tensor(&g).unwrap();
        let m: Representation<Rational> = defining(&g);
        let d = ChordDiagram::empty(&[Kind::Circle, Kind::Circle]);
        assert!(ws_link(&t, &m, &d).unwrap().is_one());
    }

    #[test]
    fn lg_basics() {
        assert!(wlg(&ChordDiagram::empty(&[Kind::Interval])).unwrap().is_one());
        assert!(wlg(&ChordDiagram::interval(&[0, 0])).unwrap().is_zero());
    }
}
