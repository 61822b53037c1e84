//! Ribbon data given by an R-matrix, and tangle evaluation with it.
//!
//! `braiding` is the map `V⊗V → V⊗V` including the flip. Duals use the
//! standard pairings for `cup(+-)`/`cap(-+)` and the pivot `μ` for the
//! reversed ones: `cap(+-)` sends `v⊗f` to `(−1)^{|v||f|} f(μv)`.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::word::{Gen, Sign, TangleWord};
use super::KontsevichError;
use crate::scalars::{sign, Rational, Ring};
use crate::supergraded::{Mat, SuperSpace};

#[derive(Clone, Debug, PartialEq)]
pub struct RibbonData<R> {
    space: SuperSpace,
    braiding: Mat<R>,
    braiding_inv: Mat<R>,
    twist: Mat<R>,
    twist_inv: Mat<R>,
    pivot: Mat<R>,
    /// Coefficients of `cup(-+)`: `Σ B_ij e^i⊗e_j`.
    rev_cup: Mat<R>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RibbonError {
    #[error("shape: {0}")]
    Shape(String),
    #[error("{0} is not even")]
    NotEven(&'static str),
    #[error("{0} is not invertible")]
    Singular(&'static str),
    #[error("Yang–Baxter equation fails")]
    YangBaxter,
    #[error("pivot does not commute with the braiding")]
    Pivot,
    #[error("twist is not the partial quantum trace of the braiding")]
    Twist,
    #[error("inverse twist is not the partial quantum trace of the inverse braiding")]
    TwistInverse,
    #[error("snake identity fails")]
    Snake,
    #[error("json: {0}")]
    Json(String),
}

fn is_even<R: Ring>(m: &Mat<R>, rows: &[bool], cols: &[bool]) -> bool {
    m.triplets().all(|(i, j, _)| rows[i] == cols[j])
}

/// `str₂((1⊗μ)M)` for `M` on `V⊗V`.
fn partial_qtrace<R: Ring>(m: &Mat<R>, mu: &Mat<R>, par: &[bool]) -> Mat<R> {
    let n = par.len();
    let one_mu = Mat::identity(n).kron(mu);
    let x = one_mu.mul(m);
    Mat::from_fn(n, n, |a, v| {
        let mut acc = R::zero();
        for (i, &odd) in par.iter().enumerate() {
            let e = x.get(a * n + i, v * n + i);
            if odd {
                acc = acc.sub(e);
            } else {
                acc.add_assign(e);
            }
        }
        acc
    })
}

impl<R: Ring> RibbonData<R> {
    /// Validates and builds; the error names the first failing axiom.
    pub fn new(space: SuperSpace, braiding: Mat<R>, twist: Mat<R>, pivot: Mat<R>) -> Result<Self, RibbonError> {
        let n = space.dim();
        let par = space.parities().to_vec();
        let par2: Vec<bool> = par.iter().flat_map(|&a| par.iter().map(move |&b| a ^ b)).collect();
        if braiding.rows() != n * n || braiding.cols() != n * n {
            return Err(RibbonError::Shape("braiding must act on V⊗V".into()));
        }
        if [&twist, &pivot].iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(RibbonError::Shape("twist and pivot must act on V".into()));
        }
        if !is_even(&braiding, &par2, &par2) {
            return Err(RibbonError::NotEven("braiding"));
        }
        if !is_even(&twist, &par, &par) {
            return Err(RibbonError::NotEven("twist"));
        }
        if !is_even(&pivot, &par, &par) {
            return Err(RibbonError::NotEven("pivot"));
        }
        let braiding_inv = braiding.inverse().ok_or(RibbonError::Singular("braiding"))?;
        let twist_inv = twist.inverse().ok_or(RibbonError::Singular("twist"))?;
        let pivot_inv_t = pivot.transpose().inverse().ok_or(RibbonError::Singular("pivot"))?;

        let id = Mat::identity(n);
        let r1 = braiding.kron(&id);
        let r2 = id.kron(&braiding);
        if r1.mul(&r2).mul(&r1) != r2.mul(&r1).mul(&r2) {
            return Err(RibbonError::YangBaxter);
        }
        let mm = pivot.kron(&pivot);
        if mm.mul(&braiding) != braiding.mul(&mm) {
            return Err(RibbonError::Pivot);
        }
        if partial_qtrace(&braiding, &pivot, &par) != twist {
            return Err(RibbonError::Twist);
        }
        if partial_qtrace(&braiding_inv, &pivot, &par) != twist_inv {
            return Err(RibbonError::TwistInverse);
        }
        let s = Mat::from_fn(n, n, |i, j| if i == j { sign::<R>(par[i]) } else { R::zero() });
        let rev_cup = pivot_inv_t.mul(&s);
        let data = RibbonData { space, braiding, braiding_inv, twist, twist_inv, pivot, rev_cup };
        for w in ["obj: +\nslice: id(+) cup(-+)\nslice: cap(+-) id(+)", "obj: -\nslice: cup(-+) id(-)\nslice: id(-) cap(+-)"] {
            let word = super::parse_word(w).expect("snake word");
            let ev = data.evaluate(&word).map_err(|_| RibbonError::Snake)?;
            if ev != Mat::identity(n) {
                return Err(RibbonError::Snake);
            }
        }
        Ok(data)
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn braiding(&self) -> &Mat<R> {
        &self.braiding
    }

    pub fn twist(&self) -> &Mat<R> {
        &self.twist
    }

    pub fn pivot(&self) -> &Mat<R> {
        &self.pivot
    }

    /// Operator of a word from the top object to the bottom object.
    pub fn evaluate(&self, word: &TangleWord) -> Result<Mat<R>, KontsevichError> {
        let n = self.space.dim();
        let par = self.space.parities();
        let top = word.top();
        let total = n.pow(top.len() as u32);
        let mut states: HashMap<(u32, Vec<u8>), R> = HashMap::new();
        for c in 0..total {
            let mut idx = vec![0u8; top.len()];
            let mut x = c;
            for k in (0..top.len()).rev() {
                idx[k] = (x % n) as u8;
                x /= n;
            }
            states.insert((c as u32, idx), R::one());
        }
        let mut obj: Vec<Sign> = top.to_vec();
        for e in word.events() {
            let p = e.pos;
            let mut out: HashMap<(u32, Vec<u8>), R> = HashMap::new();
            let mut push = |k: (u32, Vec<u8>), v: R| {
                if v.is_zero() {
                    return;
                }
                let x = out.entry(k).or_insert_with(R::zero);
                x.add_assign(&v);
            };
            match e.gen {
                Gen::Id(_) => continue,
                Gen::Cross { positive, sing } => {
                    if sing {
                        return Err(KontsevichError::Unsupported("double points in ribbon evaluation".into()));
                    }
                    if obj[p] != Sign::Plus || obj[p + 1] != Sign::Plus {
                        return Err(KontsevichError::Unsupported("ribbon crossings need two downward strands".into()));
                    }
                    let m = if positive { &self.braiding } else { &self.braiding_inv };
                    for ((c, idx), v) in &states {
                        let col = idx[p] as usize * n + idx[p + 1] as usize;
                        for row in 0..n * n {
                            let x = m.get(row, col);
                            if x.is_zero() {
                                continue;
                            }
                            let mut ni = idx.clone();
                            ni[p] = (row / n) as u8;
                            ni[p + 1] = (row % n) as u8;
                            push((*c, ni), v.mul(x));
                        }
                    }
                    obj.swap(p, p + 1);
                }
                Gen::Kink(positive) => {
                    let m = if positive { &self.twist } else { &self.twist_inv };
                    let dual = obj[p] == Sign::Minus;
                    for ((c, idx), v) in &states {
                        for r in 0..n {
                            let x = if dual { m.get(idx[p] as usize, r) } else { m.get(r, idx[p] as usize) };
                            if x.is_zero() {
                                continue;
                            }
                            let mut ni = idx.clone();
                            ni[p] = r as u8;
                            push((*c, ni), v.mul(x));
                        }
                    }
                }
                Gen::Cup(a, b) => {
                    for ((c, idx), v) in &states {
                        for i in 0..n {
                            for j in 0..n {
                                let coef = match a {
                                    Sign::Plus if i == j => R::one(),
                                    Sign::Plus => continue,
                                    Sign::Minus => self.rev_cup.get(i, j).clone(),
                                };
                                let mut ni = idx.clone();
                                ni.splice(p..p, [i as u8, j as u8]);
                                push((*c, ni), v.mul(&coef));
                            }
                        }
                    }
                    obj.splice(p..p, [a, b]);
                }
                Gen::Cap(a, _) => {
                    for ((c, idx), v) in &states {
                        let (i, j) = (idx[p] as usize, idx[p + 1] as usize);
                        let coef = match a {
                            Sign::Minus if i == j => R::one(),
                            Sign::Minus => continue,
                            Sign::Plus => self.pivot.get(j, i).mul(&sign(par[i] && par[j])),
                        };
                        let mut ni = idx.clone();
                        ni.drain(p..p + 2);
                        push((*c, ni), v.mul(&coef));
                    }
                    obj.drain(p..p + 2);
                }
            }
            states = out;
        }
        let rows = n.pow(obj.len() as u32);
        let mut m = Mat::zeros(rows, total);
        for ((c, idx), v) in states {
            let r = idx.iter().fold(0usize, |acc, &x| acc * n + x as usize);
            m.add_at(r, c as usize, &v);
        }
        Ok(m)
    }
}

/// Value of a closed word.
pub fn rt_invariant<R: Ring>(word: &TangleWord, data: &RibbonData<R>) -> Result<R, KontsevichError> {
    if !word.is_closed() {
        return Err(KontsevichError::NotClosed);
    }
    Ok(data.evaluate(word)?.get(0, 0).clone())
}

fn mat_json(m: &Mat<Rational>) -> Value {
    Value::Array(m.triplets().map(|(i, j, v)| json!([i, j, v.to_string()])).collect())
}

fn mat_from_json(v: &Value, rows: usize, cols: usize) -> Result<Mat<Rational>, RibbonError> {
    let arr = v.as_array().ok_or_else(|| RibbonError::Json("expected an entry list".into()))?;
    let mut m = Mat::zeros(rows, cols);
    for e in arr {
        let bad = || RibbonError::Json(format!("bad entry {e}"));
        let t = e.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
        let i = t[0].as_u64().ok_or_else(bad)? as usize;
        let j = t[1].as_u64().ok_or_else(bad)? as usize;
        let x = <Rational as Ring>::from_json(&t[2]).map_err(|_| bad())?;
        if i >= rows || j >= cols {
            return Err(bad());
        }
        m.set(i, j, x);
    }
    Ok(m)
}

impl RibbonData<Rational> {
    pub fn to_json(&self) -> Value {
        json!({
            "carrier": self.space.to_json(),
            "braiding": mat_json(&self.braiding),
            "twist": mat_json(&self.twist),
            "pivot": mat_json(&self.pivot),
        })
    }

    /// Parses and validates `.ribbon` JSON.
    pub fn from_json(v: &Value) -> Result<Self, RibbonError> {
        let space = SuperSpace::from_json(&v["carrier"]).map_err(|e| RibbonError::Json(e.to_string()))?;
        let n = space.dim();
        let braiding = mat_from_json(&v["braiding"], n * n, n * n)?;
        let twist = mat_from_json(&v["twist"], n, n)?;
        let pivot = match v.get("pivot") {
            Some(p) => mat_from_json(p, n, n)?,
            None => Mat::identity(n),
        };
        RibbonData::new(space, braiding, twist, pivot)
    }

    /// Flip on a purely even space: every knot evaluates to `dim`.
    pub fn trivial(dim: usize) -> Self {
        let space = SuperSpace::even_odd(dim, 0);
        let mut flip = Mat::zeros(dim * dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                flip.set(j * dim + i, i * dim + j, Rational::one());
            }
        }
        RibbonData::new(space, flip, Mat::identity(dim), Mat::identity(dim)).expect("trivial data")
    }

    /// Two-dimensional Hecke-type R-matrix at a rational `q`.
    pub fn jones(q: &Rational) -> Self {
        let qi = q.inv().expect("q ≠ 0");
        let mut r = Mat::zeros(4, 4);
        r.set(0, 0, q.clone());
        r.set(3, 3, q.clone());
        r.set(1, 1, q.sub(&qi));
        r.set(2, 1, Rational::one());
        r.set(1, 2, Rational::one());
        let mut mu = Mat::zeros(2, 2);
        mu.set(0, 0, qi.clone());
        mu.set(1, 1, q.clone());
        let q2 = q.mul(q);
        let twist = Mat::identity(2).scale(&q2);
        RibbonData::new(SuperSpace::even_odd(2, 0), r, twist, mu).expect("Jones data")
    }
}
