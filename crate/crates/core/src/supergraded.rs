//! ℤ₂-graded linear algebra.
//!
//! [`SuperMap`] only holds parity-preserving maps. Odd operators (the action
//! of odd Lie superalgebra elements) live in the unrestricted [`Mat`].

use std::collections::HashSet;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::scalars::{sign, Ring, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("label/parity length mismatch")]
    LengthMismatch,
    #[error("entry ({row},{col}) links parities {row_parity} and {col_parity}")]
    NotEven { row: usize, col: usize, row_parity: u8, col_parity: u8 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not an endomorphism")]
    NotEndomorphism,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Ordered basis with one parity bit per label.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    labels: Vec<String>,
    parity: Vec<bool>,
}

impl SuperSpace {
    pub fn new(labels: Vec<String>, parity: Vec<bool>) -> Result<Self, GradedError> {
        if labels.len() != parity.len() {
            return Err(GradedError::LengthMismatch);
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(GradedError::DuplicateLabel(l.clone()));
            }
        }
        Ok(SuperSpace { labels, parity })
    }

    /// `p` even basis vectors `e1..ep` followed by `q` odd ones.
    pub fn even_odd(p: usize, q: usize) -> Self {
        let labels = (1..=p + q).map(|i| format!("e{i}")).collect();
        let parity = (0..p + q).map(|i| i >= p).collect();
        SuperSpace { labels, parity }
    }

    /// The one-dimensional even unit object.
    pub fn unit() -> Self {
        SuperSpace { labels: vec!["1".into()], parity: vec![false] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parities(&self) -> &[bool] {
        &self.parity
    }

    pub fn parity(&self, i: usize) -> bool {
        self.parity[i]
    }

    /// (even count, odd count).
    pub fn split(&self) -> (usize, usize) {
        let odd = self.parity.iter().filter(|&&p| p).count();
        (self.dim() - odd, odd)
    }

    pub fn sdim(&self) -> i64 {
        let (e, o) = self.split();
        e as i64 - o as i64
    }

    /// Row-major tensor basis, labels joined with `⊗`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut parity = Vec::with_capacity(self.dim() * other.dim());
        for (a, pa) in self.labels.iter().zip(&self.parity) {
            for (b, pb) in other.labels.iter().zip(&other.parity) {
                labels.push(format!("{a}⊗{b}"));
                parity.push(pa ^ pb);
            }
        }
        SuperSpace { labels, parity }
    }

    /// Dual basis `e^i`, same parities.
    pub fn dual(&self) -> Self {
        SuperSpace { labels: self.labels.iter().map(|l| format!("{l}*")).collect(), parity: self.parity.clone() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "labels": self.labels, "parity": self.parity.iter().map(|&p| p as u8).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self, GradedError> {
        let bad = |m: &str| GradedError::Scalar(ScalarError::Json(m.into()));
        let labels = v
            .get("labels")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing labels"))?
            .iter()
            .map(|l| l.as_str().map(String::from).ok_or_else(|| bad("label must be a string")))
            .collect::<Result<Vec<_>, _>>()?;
        let parity = v
            .get("parity")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing parity"))?
            .iter()
            .map(|p| match p.as_u64() {
                Some(0) => Ok(false),
                Some(1) => Ok(true),
                _ => Err(bad("parity must be 0 or 1")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SuperSpace::new(labels, parity)
    }
}

impl fmt::Debug for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, o) = self.split();
        write!(f, "SuperSpace({e}|{o})")
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Mat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    /// Matrix unit with a single 1 at `(r, c)`.
    pub fn unit(rows: usize, cols: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(r, c, R::one());
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &R) {
        self.data[i * self.cols + j].add_assign(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(Ring::neg).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Plain Kronecker product, row-major in factor order.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for (i, j, a) in self.triplets() {
            for (k, l, b) in rhs.triplets() {
                out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(b));
            }
        }
        out
    }

    pub fn trace(&self) -> R {
        let mut t = R::zero();
        for i in 0..self.rows.min(self.cols) {
            t.add_assign(self.get(i, i));
        }
        t
    }

    /// `Some(λ)` when the matrix equals `λ·Id`.
    pub fn scalar_value(&self) -> Option<R> {
        if self.rows != self.cols {
            return None;
        }
        let lam = if self.rows == 0 { R::zero() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let ok = if i == j { *v == lam } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(lam)
    }

    /// Inverse by Gauss–Jordan elimination over a field.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).try_inv()?;
            for j in 0..n {
                let x = a.get(col, j).mul(&p);
                a.set(col, j, x);
                let y = inv.get(col, j).mul(&p);
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, x);
                    let y = inv.get(r, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }
}

impl<R: fmt::Debug> fmt::Debug for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Parity-preserving linear map `domain → codomain`.
#[derive(Clone, PartialEq)]
pub struct SuperMap<R> {
    domain: SuperSpace,
    codomain: SuperSpace,
    mat: Mat<R>,
}

impl<R: Ring> SuperMap<R> {
    /// Checks the shape and that every nonzero entry joins equal parities.
    pub fn new(domain: SuperSpace, codomain: SuperSpace, mat: Mat<R>) -> Result<Self, GradedError> {
        if mat.rows() != codomain.dim() || mat.cols() != domain.dim() {
            return Err(GradedError::Shape(format!(
                "{}x{} matrix for {}→{}",
                mat.rows(),
                mat.cols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        if let Some((row, col, _)) = mat.triplets().find(|(i, j, _)| codomain.parity(*i) != domain.parity(*j)) {
            return Err(GradedError::NotEven {
                row,
                col,
                row_parity: codomain.parity(row) as u8,
                col_parity: domain.parity(col) as u8,
            });
        }
        Ok(SuperMap { domain, codomain, mat })
    }

    pub fn identity(v: &SuperSpace) -> Self {
        SuperMap { domain: v.clone(), codomain: v.clone(), mat: Mat::identity(v.dim()) }
    }

    pub fn zero(domain: &SuperSpace, codomain: &SuperSpace) -> Self {
        SuperMap { domain: domain.clone(), codomain: codomain.clone(), mat: Mat::zeros(codomain.dim(), domain.dim()) }
    }

    pub fn domain(&self) -> &SuperSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &SuperSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Mat<R> {
        &self.mat
    }

    pub fn into_matrix(self) -> Mat<R> {
        self.mat
    }

    pub fn is_even(&self) -> bool {
        self.mat.triplets().all(|(i, j, _)| self.codomain.parity(i) == self.domain.parity(j))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self, GradedError> {
        if inner.codomain.parities() != self.domain.parities() {
            return Err(GradedError::Shape("composition through different spaces".into()));
        }
        Ok(SuperMap { domain: inner.domain.clone(), codomain: self.codomain.clone(), mat: self.mat.mul(&inner.mat) })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, GradedError> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(GradedError::Shape("sum of maps between different spaces".into()));
        }
        Ok(SuperMap { domain: self.domain.clone(), codomain: self.codomain.clone(), mat: self.mat.add(&rhs.mat) })
    }

    pub fn scale(&self, c: &R) -> Self {
        SuperMap { domain: self.domain.clone(), codomain: self.codomain.clone(), mat: self.mat.scale(c) }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self.mat.triplets().map(|(i, j, v)| json!([i, j, v.to_json()])).collect();
        json!({ "domain": self.domain.to_json(), "codomain": self.codomain.to_json(), "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self, GradedError> {
        let bad = |m: &str| GradedError::Scalar(ScalarError::Json(m.into()));
        let domain = SuperSpace::from_json(v.get("domain").ok_or_else(|| bad("missing domain"))?)?;
        let codomain = SuperSpace::from_json(v.get("codomain").ok_or_else(|| bad("missing codomain"))?)?;
        let mut mat = Mat::zeros(codomain.dim(), domain.dim());
        for e in v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing entries"))? {
            let t = e.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("entry must be [row, col, value]"))?;
            let i = t[0].as_u64().ok_or_else(|| bad("row index"))? as usize;
            let j = t[1].as_u64().ok_or_else(|| bad("column index"))? as usize;
            if i >= mat.rows() || j >= mat.cols() {
                return Err(GradedError::Shape(format!("entry ({i},{j}) out of range")));
            }
            mat.set(i, j, R::from_json(&t[2])?);
        }
        SuperMap::new(domain, codomain, mat)
    }
}

impl<R: fmt::Debug> fmt::Debug for SuperMap<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperMap {:?} -> {:?} {:?}", self.domain, self.codomain, self.mat)
    }
}

/// `τ_{V,W}: v⊗w ↦ (−1)^{|v||w|} w⊗v`.
pub fn koszul_flip<R: Ring>(v: &SuperSpace, w: &SuperSpace) -> SuperMap<R> {
    let (n, m) = (v.dim(), w.dim());
    let mut mat = Mat::zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..m {
            mat.set(j * n + i, i * m + j, sign(v.parity(i) && w.parity(j)));
        }
    }
    SuperMap { domain: v.tensor(w), codomain: w.tensor(v), mat }
}

/// `(f⊗g)(v⊗w) = f(v)⊗g(w)`; no sign because both maps are even.
pub fn tensor_map<R: Ring>(f: &SuperMap<R>, g: &SuperMap<R>) -> SuperMap<R> {
    SuperMap {
        domain: f.domain.tensor(&g.domain),
        codomain: f.codomain.tensor(&g.codomain),
        mat: f.mat.kron(&g.mat),
    }
}

pub fn compose<R: Ring>(outer: &SuperMap<R>, inner: &SuperMap<R>) -> Result<SuperMap<R>, GradedError> {
    outer.compose(inner)
}

/// Σ (−1)^{|i|} f_ii.
pub fn supertrace<R: Ring>(f: &SuperMap<R>) -> Result<R, GradedError> {
    if f.domain.parities() != f.codomain.parities() {
        return Err(GradedError::NotEndomorphism);
    }
    let mut t = R::zero();
    for i in 0..f.domain.dim() {
        let d = f.mat.get(i, i);
        if f.domain.parity(i) {
            t = t.sub(d);
        } else {
            t.add_assign(d);
        }
    }
    Ok(t)
}

/// Partial supertrace of an endomorphism of `V⊗W` over the right factor `W`.
pub fn close_strand<R: Ring>(f: &SuperMap<R>, v: &SuperSpace, w: &SuperSpace) -> Result<SuperMap<R>, GradedError> {
    let vw = v.tensor(w);
    if f.domain.parities() != vw.parities() || f.codomain.parities() != vw.parities() {
        return Err(GradedError::Shape("close_strand expects an endomorphism of V⊗W".into()));
    }
    let (n, m) = (v.dim(), w.dim());
    let mut mat = Mat::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let mut acc = R::zero();
            for k in 0..m {
                let x = f.mat.get(a * m + k, b * m + k);
                if w.parity(k) {
                    acc = acc.sub(x);
                } else {
                    acc.add_assign(x);
                }
            }
            mat.set(a, b, acc);
        }
    }
    Ok(SuperMap { domain: v.clone(), codomain: v.clone(), mat })
}

/// The four duality morphisms of a superspace.
#[derive(Clone)]
pub struct Pairings<R> {
    /// `V*⊗V → 1`, `e^i⊗e_j ↦ δ_ij`.
    pub eval: SuperMap<R>,
    /// `1 → V⊗V*`, `1 ↦ Σ e_i⊗e^i`.
    pub coeval: SuperMap<R>,
    /// `V⊗V* → 1`, `e_i⊗e^j ↦ (−1)^{|i|} δ_ij`.
    pub eval_rev: SuperMap<R>,
    /// `1 → V*⊗V`, `1 ↦ Σ (−1)^{|i|} e^i⊗e_i`.
    pub coeval_rev: SuperMap<R>,
}

pub fn dual_pairings<R: Ring>(v: &SuperSpace) -> Pairings<R> {
    let n = v.dim();
    let dual = v.dual();
    let unit = SuperSpace::unit();
    let mut ev = Mat::zeros(1, n * n);
    let mut co = Mat::zeros(n * n, 1);
    let mut ev_r = Mat::zeros(1, n * n);
    let mut co_r = Mat::zeros(n * n, 1);
    for i in 0..n {
        let s: R = sign(v.parity(i));
        ev.set(0, i * n + i, R::one());
        co.set(i * n + i, 0, R::one());
        ev_r.set(0, i * n + i, s.clone());
        co_r.set(i * n + i, 0, s);
    }
    Pairings {
        eval: SuperMap { domain: dual.tensor(v), codomain: unit.clone(), mat: ev },
        coeval: SuperMap { domain: unit.clone(), codomain: v.tensor(&dual), mat: co },
        eval_rev: SuperMap { domain: v.tensor(&dual), codomain: unit.clone(), mat: ev_r },
        coeval_rev: SuperMap { domain: unit, codomain: dual.tensor(v), mat: co_r },
    }
}
