//! gl(m|n): bracket, supertrace form, Casimir tensors and the modules
//! M (defining), N_β and V_α.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::scalars::{sign, AlphaScalar, Rational, Ring};
use crate::supergraded::{Mat, SuperMap, SuperSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("gl({0}|{0}) has no nondegenerate form on sl; the sl-projection needs m ≠ n")]
    EqualDimensions(usize),
    #[error("gl(m|n) needs m, n ≥ 1")]
    EmptyBlock,
    #[error("invariant form is singular")]
    SingularForm,
    #[error("{0} is only defined for gl(2|1)")]
    NeedsGl21(&'static str),
    #[error("unknown representation {0:?}")]
    UnknownRep(String),
    #[error("representation axiom fails on ({0}, {1})")]
    RepAxiom(usize, usize),
    #[error("action of generator {0} does not shift parity by its degree")]
    ParityShift(usize),
    #[error("algebra mismatch: gl({0}|{1}) vs gl({2}|{3})")]
    AlgebraMismatch(usize, usize, usize, usize),
}

/// Sparse element of the algebra: `(basis index, coefficient)`.
pub type Elem = Vec<(usize, i64)>;

/// gl(m|n) in the basis of matrix units `E_ab`, index `a·(m+n) + b`.
#[derive(Clone, Debug)]
pub struct LieSuperAlg {
    m: usize,
    n: usize,
    parity: Vec<bool>,
    bracket: Vec<Elem>,
    form: Mat<Rational>,
}

impl LieSuperAlg {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the defining representation.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> bool {
        self.parity[i]
    }

    pub fn parities(&self) -> &[bool] {
        &self.parity
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.size() + b
    }

    /// `(a, b)` for basis index `i`, zero-based.
    pub fn unit_of(&self, i: usize) -> (usize, usize) {
        (i / self.size(), i % self.size())
    }

    pub fn label(&self, i: usize) -> String {
        let (a, b) = self.unit_of(i);
        format!("E{}{}", a + 1, b + 1)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Elem {
        &self.bracket[i * self.dim() + j]
    }

    /// Bracket of two sparse elements.
    pub fn bracket_elems(&self, x: &Elem, y: &Elem) -> Elem {
        let mut acc = BTreeMap::new();
        for &(i, a) in x {
            for &(j, b) in y {
                for &(k, c) in self.bracket(i, j) {
                    *acc.entry(k).or_insert(0) += a * b * c;
                }
            }
        }
        acc.into_iter().filter(|&(_, v)| v != 0).collect()
    }

    pub fn form(&self) -> &Mat<Rational> {
        &self.form
    }

    /// `ad_x` as a dim×dim matrix, column `j` holding `[x, e_j]`.
    pub fn ad(&self, x: usize) -> Mat<Rational> {
        let mut m = Mat::zeros(self.dim(), self.dim());
        for j in 0..self.dim() {
            for &(k, c) in self.bracket(x, j) {
                m.set(k, j, Rational::from_int(c));
            }
        }
        m
    }

    /// The identity matrix `I = Σ E_aa`.
    pub fn identity_elem(&self) -> Elem {
        (0..self.size()).map(|a| (self.index(a, a), 1)).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for &(k, c) in self.bracket(i, j) {
                    brackets.push(json!([i, j, k, c]));
                }
            }
        }
        let form: Vec<Value> = self.form.triplets().map(|(i, j, v)| json!([i, j, v.to_json()])).collect();
        json!({
            "m": self.m,
            "n": self.n,
            "basis": (0..self.dim()).map(|i| self.label(i)).collect::<Vec<_>>(),
            "parity": self.parity.iter().map(|&p| p as u8).collect::<Vec<_>>(),
            "structure_constants": brackets,
            "form": form,
        })
    }
}

/// `[E_ab, E_cd] = δ_bc E_ad − (−1)^{(|a|+|b|)(|c|+|d|)} δ_da E_cb`.
pub fn build_gl(m: usize, n: usize) -> Result<LieSuperAlg, LieError> {
    if m == 0 || n == 0 {
        return Err(LieError::EmptyBlock);
    }
    let s = m + n;
    let dim = s * s;
    let rp = |a: usize| a >= m;
    let parity: Vec<bool> = (0..dim).map(|i| rp(i / s) ^ rp(i % s)).collect();
    let mut bracket = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        let (a, b) = (i / s, i % s);
        for j in 0..dim {
            let (c, d) = (j / s, j % s);
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            if b == c {
                *acc.entry(a * s + d).or_insert(0) += 1;
            }
            if d == a {
                let sg = if parity[i] && parity[j] { 1 } else { -1 };
                *acc.entry(c * s + b).or_insert(0) += sg;
            }
            bracket[i * dim + j] = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
    }
    // B(E_ab, E_cd) = str(E_ab E_cd) = δ_bc δ_ad (−1)^{|a|}
    let form = Mat::from_fn(dim, dim, |i, j| {
        let (a, b) = (i / s, i % s);
        let (c, d) = (j / s, j % s);
        if b == c && a == d {
            sign(rp(a))
        } else {
            Rational::zero()
        }
    });
    Ok(LieSuperAlg { m, n, parity, bracket, form })
}

pub fn invariant_form(g: &LieSuperAlg) -> &Mat<Rational> {
    g.form()
}

/// Super-Jacobi residual `[x,[y,z]] − [[x,y],z] − (−1)^{|x||y|}[y,[x,z]]`.
pub fn jacobi_residual(g: &LieSuperAlg, x: usize, y: usize, z: usize) -> Elem {
    let yz = g.bracket_elems(&vec![(y, 1)], &vec![(z, 1)]);
    let t1 = g.bracket_elems(&vec![(x, 1)], &yz);
    let xy = g.bracket_elems(&vec![(x, 1)], &vec![(y, 1)]);
    let t2 = g.bracket_elems(&xy, &vec![(z, 1)]);
    let xz = g.bracket_elems(&vec![(x, 1)], &vec![(z, 1)]);
    let t3 = g.bracket_elems(&vec![(y, 1)], &xz);
    let sg = if g.parity(x) && g.parity(y) { -1 } else { 1 };
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for (k, c) in t1 {
        *acc.entry(k).or_insert(0) += c;
    }
    for (k, c) in t2 {
        *acc.entry(k).or_insert(0) -= c;
    }
    for (k, c) in t3 {
        *acc.entry(k).or_insert(0) -= sg * c;
    }
    acc.into_iter().filter(|&(_, v)| v != 0).collect()
}

/// `t = Σ t^{ij} e_i⊗e_j ∈ g⊗g`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantTensor<R> {
    coeffs: Mat<R>,
}

impl<R: Ring> InvariantTensor<R> {
    pub fn from_coeffs(coeffs: Mat<R>) -> Self {
        InvariantTensor { coeffs }
    }

    pub fn coeffs(&self) -> &Mat<R> {
        &self.coeffs
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.coeffs.get(i, j)
    }

    /// Nonzero terms `(i, j, t^{ij})`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.coeffs.triplets()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> InvariantTensor<S> {
        InvariantTensor { coeffs: self.coeffs.map(f) }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        InvariantTensor { coeffs: self.coeffs.add(&rhs.coeffs) }
    }

    pub fn scale(&self, c: &R) -> Self {
        InvariantTensor { coeffs: self.coeffs.scale(c) }
    }

    pub fn is_even(&self, g: &LieSuperAlg) -> bool {
        self.terms().all(|(i, j, _)| g.parity(i) == g.parity(j))
    }

    /// Image under the Koszul flip `e_i⊗e_j ↦ (−1)^{|i||j|} e_j⊗e_i`.
    pub fn flip(&self, g: &LieSuperAlg) -> Self {
        let n = g.dim();
        let mut out = Mat::zeros(n, n);
        for (i, j, v) in self.terms() {
            let s: R = sign(g.parity(i) && g.parity(j));
            out.set(j, i, v.mul(&s));
        }
        InvariantTensor { coeffs: out }
    }

    /// `(ad_x⊗1 + 1⊗ad_x)(t)` as a coefficient matrix.
    pub fn ad_residual(&self, g: &LieSuperAlg, x: usize) -> Mat<R> {
        let n = g.dim();
        let mut out = Mat::zeros(n, n);
        for (i, j, v) in self.terms() {
            for &(k, c) in g.bracket(x, i) {
                out.add_at(k, j, &v.mul(&R::from_int(c)));
            }
            let s: R = sign(g.parity(x) && g.parity(i));
            for &(k, c) in g.bracket(x, j) {
                out.add_at(i, k, &v.mul(&s).mul(&R::from_int(c)));
            }
        }
        out
    }

    pub fn is_invariant(&self, g: &LieSuperAlg) -> bool {
        (0..g.dim()).all(|x| self.ad_residual(g, x).is_zero())
    }

    /// `Σ t^{ij} ρ(e_i)ρ(e_j)`.
    pub fn casimir(&self, rep: &Representation<R>) -> Mat<R> {
        let d = rep.dim();
        let mut out = Mat::zeros(d, d);
        for (i, j, v) in self.terms() {
            out = out.add(&rep.action(i).mul(rep.action(j)).scale(v));
        }
        out
    }

    /// Action on `V⊗W`: `Σ t^{ij} (−1)^{|j||v|} ρ_V(e_i)⊗ρ_W(e_j)`.
    pub fn two_point(&self, v: &Representation<R>, w: &Representation<R>) -> Mat<R> {
        let (dv, dw) = (v.dim(), w.dim());
        let mut out = Mat::zeros(dv * dw, dv * dw);
        for (i, j, c) in self.terms() {
            let pj = v.gen_parity[j];
            for (a, b, x) in v.action(i).triplets() {
                let s: R = sign(pj && v.carrier.parity(b));
                let cx = c.mul(x).mul(&s);
                for (p, q, y) in w.action(j).triplets() {
                    out.add_at(a * dw + p, b * dw + q, &cx.mul(y));
                }
            }
        }
        out
    }
}

/// `t_gl^{ij} = (B⁻¹)^{ij}`, the tensor dual to the supertrace form.
pub fn casimir_tensor(g: &LieSuperAlg) -> Result<InvariantTensor<Rational>, LieError> {
    let inv = g.form.inverse().ok_or(LieError::SingularForm)?;
    Ok(InvariantTensor { coeffs: inv })
}

/// `I⊗I` as a tensor.
pub fn identity_square<R: Ring>(g: &LieSuperAlg) -> InvariantTensor<R> {
    let mut m = Mat::zeros(g.dim(), g.dim());
    for a in 0..g.size() {
        for b in 0..g.size() {
            m.set(g.index(a, a), g.index(b, b), R::one());
        }
    }
    InvariantTensor { coeffs: m }
}

/// The tensor dual to the supertrace form restricted to sl(m|n):
/// `t_sl = t_gl − I⊗I/(m−n)`.
pub fn casimir_tensor_sl(g: &LieSuperAlg) -> Result<InvariantTensor<Rational>, LieError> {
    if g.m == g.n {
        return Err(LieError::EqualDimensions(g.m));
    }
    let t = casimir_tensor(g)?;
    let c = Rational::new(-1, g.m as i64 - g.n as i64);
    Ok(t.add(&identity_square::<Rational>(g).scale(&c)))
}

/// `s = a(I⊗I) + t_sl`.
pub fn extend_identity<R: Ring>(g: &LieSuperAlg, a: &R) -> Result<InvariantTensor<R>, LieError> {
    let t = casimir_tensor_sl(g)?.map(R::from_rational);
    Ok(t.add(&identity_square::<R>(g).scale(a)))
}

/// Scalar `a` making `s` satisfy the one-term relation on V_α:
/// `a = 2 + 2/α`.
pub fn links_gould_a() -> AlphaScalar {
    let two = AlphaScalar::from_int(2);
    two.add(&two.mul(&AlphaScalar::alpha().try_inv().unwrap()))
}

/// The tensor `s` used by the Links–Gould weight system.
pub fn links_gould_tensor(g: &LieSuperAlg) -> Result<InvariantTensor<AlphaScalar>, LieError> {
    extend_identity(g, &links_gould_a())
}

/// Module over gl(m|n); action matrices are unrestricted, with
/// `ρ(x)` shifting parity by `|x|`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<R> {
    algebra: (usize, usize),
    gen_parity: Vec<bool>,
    carrier: SuperSpace,
    actions: Vec<Mat<R>>,
    weights: Option<Vec<Vec<R>>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RepKind<R> {
    Defining,
    NBeta(R),
    /// V_α with `α` specialised to the given ring element.
    VAlpha(R),
}

impl<R: Ring> Representation<R> {
    pub fn new(g: &LieSuperAlg, carrier: SuperSpace, actions: Vec<Mat<R>>) -> Result<Self, LieError> {
        let rep = Representation {
            algebra: (g.m, g.n),
            gen_parity: g.parity.clone(),
            carrier,
            actions,
            weights: None,
        };
        rep.check(g)?;
        Ok(rep)
    }

    pub fn carrier(&self) -> &SuperSpace {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn action(&self, x: usize) -> &Mat<R> {
        &self.actions[x]
    }

    pub fn actions(&self) -> &[Mat<R>] {
        &self.actions
    }

    pub fn gen_parity(&self, x: usize) -> bool {
        self.gen_parity[x]
    }

    pub fn algebra(&self) -> (usize, usize) {
        self.algebra
    }

    /// Diagonal eigenvalues of `E_aa` on each basis vector, when known.
    pub fn weights(&self) -> Option<&[Vec<R>]> {
        self.weights.as_deref()
    }

    /// Action of a sparse algebra element.
    pub fn act_elem(&self, x: &Elem) -> Mat<R> {
        let d = self.dim();
        let mut out = Mat::zeros(d, d);
        for &(i, c) in x {
            out = out.add(&self.actions[i].scale(&R::from_int(c)));
        }
        out
    }

    /// Even part of an operator as a [`SuperMap`], or `None` if it is odd.
    pub fn as_super_map(&self, m: Mat<R>) -> Option<SuperMap<R>> {
        SuperMap::new(self.carrier.clone(), self.carrier.clone(), m).ok()
    }

    /// Verifies parity shifts and `ρ([x,y]) = ρ(x)ρ(y) − (−1)^{|x||y|}ρ(y)ρ(x)`.
    pub fn check(&self, g: &LieSuperAlg) -> Result<(), LieError> {
        for (x, m) in self.actions.iter().enumerate() {
            if m.triplets().any(|(i, j, _)| self.carrier.parity(i) != (self.carrier.parity(j) ^ g.parity(x))) {
                return Err(LieError::ParityShift(x));
            }
        }
        for x in 0..g.dim() {
            for y in 0..g.dim() {
                if !self.axiom_residual(g, x, y).is_zero() {
                    return Err(LieError::RepAxiom(x, y));
                }
            }
        }
        Ok(())
    }

    pub fn axiom_residual(&self, g: &LieSuperAlg, x: usize, y: usize) -> Mat<R> {
        let xy = self.actions[x].mul(&self.actions[y]);
        let yx = self.actions[y].mul(&self.actions[x]);
        let s: R = sign(g.parity(x) && g.parity(y));
        let lhs = self.act_elem(g.bracket(x, y));
        lhs.sub(&xy.sub(&yx.scale(&s)))
    }

    pub fn to_json(&self) -> Value {
        let actions: Vec<Value> = self
            .actions
            .iter()
            .map(|m| Value::Array(m.triplets().map(|(i, j, v)| json!([i, j, v.to_json()])).collect()))
            .collect();
        json!({
            "algebra": [self.algebra.0, self.algebra.1],
            "carrier": self.carrier.to_json(),
            "actions": actions,
        })
    }
}

pub fn standard_rep<R: Ring>(g: &LieSuperAlg, kind: &RepKind<R>) -> Result<Representation<R>, LieError> {
    match kind {
        RepKind::Defining => Ok(defining(g)),
        RepKind::NBeta(b) => n_beta(g, b),
        RepKind::VAlpha(a) => v_alpha_at(g, a),
    }
}

/// Matrix units on an (m|n)-space.
pub fn defining<R: Ring>(g: &LieSuperAlg) -> Representation<R> {
    let s = g.size();
    let actions = (0..g.dim())
        .map(|i| {
            let (a, b) = g.unit_of(i);
            Mat::unit(s, s, a, b)
        })
        .collect();
    let weights = (0..s).map(|v| (0..s).map(|a| if a == v { R::one() } else { R::zero() }).collect()).collect();
    Representation {
        algebra: (g.m, g.n),
        gen_parity: g.parity.clone(),
        carrier: SuperSpace::even_odd(g.m, g.n),
        actions,
        weights: Some(weights),
    }
}

/// One-dimensional even module of weight (β,β|−β).
pub fn n_beta<R: Ring>(g: &LieSuperAlg, beta: &R) -> Result<Representation<R>, LieError> {
    if (g.m, g.n) != (2, 1) {
        return Err(LieError::NeedsGl21("N_β"));
    }
    let w = [beta.clone(), beta.clone(), beta.neg()];
    let actions = (0..g.dim())
        .map(|i| {
            let (a, b) = g.unit_of(i);
            let mut m = Mat::zeros(1, 1);
            if a == b {
                m.set(0, 0, w[a].clone());
            }
            m
        })
        .collect();
    let rep = Representation {
        algebra: (2, 1),
        gen_parity: g.parity.clone(),
        carrier: SuperSpace::new(vec!["n".into()], vec![false]).unwrap(),
        actions,
        weights: Some(vec![w.to_vec()]),
    };
    rep.check(g)?;
    Ok(rep)
}

/// The 2|2-dimensional Kac module of highest weight (0,0|α), with `α`
/// symbolic.
pub fn v_alpha(g: &LieSuperAlg) -> Result<Representation<AlphaScalar>, LieError> {
    v_alpha_at(g, &AlphaScalar::alpha())
}

/// Kac module of highest weight (0,0|α) for a given value of `α`.
///
/// Basis `w, E31·w, E32·w, E32·E31·w`. Actions come from rewriting
/// `x·y₁⋯y_k·w` with `x y = [x,y] + (−1)^{|x||y|} y x` until `x` reaches `w`.
pub fn v_alpha_at<R: Ring>(g: &LieSuperAlg, alpha: &R) -> Result<Representation<R>, LieError> {
    if (g.m, g.n) != (2, 1) {
        return Err(LieError::NeedsGl21("V_α"));
    }
    let e31 = g.index(2, 0);
    let e32 = g.index(2, 1);
    let lowering = [e32, e31];
    let words: [&[usize]; 4] = [&[], &[e31], &[e32], &[e32, e31]];
    let lambda = [R::zero(), R::zero(), alpha.clone()];
    let kac = Kac { g, lowering: &lowering, words: &words, lambda: &lambda };
    let actions = (0..g.dim())
        .map(|x| {
            let mut m = Mat::zeros(4, 4);
            for (col, w) in words.iter().enumerate() {
                for (row, c) in kac.act(x, w) {
                    m.add_at(row, col, &c);
                }
            }
            m
        })
        .collect();
    let weights = words
        .iter()
        .map(|w| {
            let mut wt = lambda.to_vec();
            for &y in w.iter() {
                let (a, b) = g.unit_of(y);
                wt[a] = wt[a].add(&R::one());
                wt[b] = wt[b].sub(&R::one());
            }
            wt
        })
        .collect();
    let carrier = SuperSpace::new(
        vec!["w".into(), "E31w".into(), "E32w".into(), "E32E31w".into()],
        vec![false, true, true, false],
    )
    .unwrap();
    let rep = Representation {
        algebra: (2, 1),
        gen_parity: g.parity.clone(),
        carrier,
        actions,
        weights: Some(weights),
    };
    rep.check(g)?;
    Ok(rep)
}

struct Kac<'a, R> {
    g: &'a LieSuperAlg,
    /// Odd lowering generators in normal order.
    lowering: &'a [usize],
    words: &'a [&'a [usize]],
    lambda: &'a [R],
}

impl<R: Ring> Kac<'_, R> {
    /// `x · (word)·w` expanded in the basis.
    fn act(&self, x: usize, word: &[usize]) -> Vec<(usize, R)> {
        let mut out: BTreeMap<usize, R> = BTreeMap::new();
        self.act_into(x, word, &R::one(), &mut out);
        out.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    fn act_into(&self, x: usize, word: &[usize], coef: &R, out: &mut BTreeMap<usize, R>) {
        let g = self.g;
        if let Some((&y, rest)) = word.split_first() {
            for &(k, c) in g.bracket(x, y) {
                self.act_into(k, rest, &coef.mul(&R::from_int(c)), out);
            }
            let s: R = sign(g.parity(x) && g.parity(y));
            let mut inner = BTreeMap::new();
            self.act_into(x, rest, &R::one(), &mut inner);
            for (b, v) in inner {
                let mut w = vec![y];
                w.extend_from_slice(self.words[b]);
                if let Some((idx, s2)) = self.normal(&w) {
                    let c = coef.mul(&s).mul(&v).mul(&sign(s2));
                    out.entry(idx).or_insert_with(R::zero).add_assign(&c);
                }
            }
            return;
        }
        let (a, b) = g.unit_of(x);
        if a == b {
            if !self.lambda[a].is_zero() {
                out.entry(0).or_insert_with(R::zero).add_assign(&coef.mul(&self.lambda[a]));
            }
        } else if self.lowering.contains(&x) {
            if let Some((idx, s2)) = self.normal(&[x]) {
                out.entry(idx).or_insert_with(R::zero).add_assign(&coef.mul(&sign(s2)));
            }
        }
        // raising generators and the even off-diagonal ones kill w
    }

    /// Sorts a word of anticommuting lowering generators; `None` if it
    /// vanishes, else the basis index and whether the sign is negative.
    fn normal(&self, word: &[usize]) -> Option<(usize, bool)> {
        let mut pos: Vec<usize> = word.iter().map(|y| self.lowering.iter().position(|l| l == y).unwrap()).collect();
        let mut odd = false;
        for i in 0..pos.len() {
            for j in 0..pos.len() - 1 - i {
                if pos[j] == pos[j + 1] {
                    return None;
                }
                if pos[j] > pos[j + 1] {
                    pos.swap(j, j + 1);
                    odd = !odd;
                }
            }
        }
        if pos.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let sorted: Vec<usize> = pos.iter().map(|&p| self.lowering[p]).collect();
        let idx = self.words.iter().position(|w| *w == sorted.as_slice())?;
        Some((idx, odd))
    }
}

/// `ρ*(x)_{ji} = −(−1)^{|x||i|} ρ(x)_{ij}`.
pub fn dual<R: Ring>(rep: &Representation<R>) -> Representation<R> {
    let d = rep.dim();
    let actions = rep
        .actions
        .iter()
        .enumerate()
        .map(|(x, m)| {
            let mut out = Mat::zeros(d, d);
            for (i, j, v) in m.triplets() {
                let s: R = sign(!(rep.gen_parity[x] && rep.carrier.parity(i)));
                out.set(j, i, v.mul(&s));
            }
            out
        })
        .collect();
    Representation {
        algebra: rep.algebra,
        gen_parity: rep.gen_parity.clone(),
        carrier: rep.carrier.dual(),
        actions,
        weights: rep.weights.as_ref().map(|ws| ws.iter().map(|w| w.iter().map(Ring::neg).collect()).collect()),
    }
}

/// `x(v⊗w) = xv⊗w + (−1)^{|x||v|} v⊗xw`.
pub fn tensor<R: Ring>(v: &Representation<R>, w: &Representation<R>) -> Result<Representation<R>, LieError> {
    if v.algebra != w.algebra {
        let (a, b) = v.algebra;
        let (c, d) = w.algebra;
        return Err(LieError::AlgebraMismatch(a, b, c, d));
    }
    let (dv, dw) = (v.dim(), w.dim());
    let actions = (0..v.actions.len())
        .map(|x| {
            let mut out = v.actions[x].kron(&Mat::identity(dw));
            for i in 0..dv {
                let s: R = sign(v.gen_parity[x] && v.carrier.parity(i));
                for (p, q, c) in w.actions[x].triplets() {
                    out.add_at(i * dw + p, i * dw + q, &c.mul(&s));
                }
            }
            out
        })
        .collect();
    let weights = match (&v.weights, &w.weights) {
        (Some(a), Some(b)) => Some(
            a.iter()
                .flat_map(|x| b.iter().map(move |y| x.iter().zip(y).map(|(p, q)| p.add(q)).collect()))
                .collect(),
        ),
        _ => None,
    };
    Ok(Representation {
        algebra: v.algebra,
        gen_parity: v.gen_parity.clone(),
        carrier: v.carrier.tensor(&w.carrier),
        actions,
        weights,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Dual,
    Tensor,
}

pub fn rep_combine<R: Ring>(kind: Combine, args: &[&Representation<R>]) -> Result<Representation<R>, LieError> {
    match (kind, args) {
        (Combine::Dual, [v]) => Ok(dual(v)),
        (Combine::Tensor, [first, rest @ ..]) => {
            let mut acc = (*first).clone();
            for r in rest {
                acc = tensor(&acc, r)?;
            }
            Ok(acc)
        }
        _ => Err(LieError::UnknownRep(format!("{kind:?} with {} arguments", args.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl11_basis() {
        let g = build_gl(1, 1).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(g.parities(), &[false, true, true, false]);
    }

    #[test]
    fn matrix_unit_bracket() {
        let g = build_gl(2, 1).unwrap();
        assert_eq!(g.bracket(g.index(0, 0), g.index(0, 1)), &vec![(g.index(0, 1), 1)]);
    }

    #[test]
    fn form_values() {
        let g = build_gl(2, 1).unwrap();
        assert!(g.form().get(g.index(0, 1), g.index(1, 0)).is_one());
        assert_eq!(g.form().get(g.index(2, 2), g.index(2, 2)), &Rational::from_int(-1));
    }

    #[test]
    fn sl_projection_needs_distinct_blocks() {
        let g = build_gl(1, 1).unwrap();
        assert_eq!(casimir_tensor_sl(&g), Err(LieError::EqualDimensions(1)));
    }

    #[test]
    fn v_alpha_shape() {
        let g = build_gl(2, 1).unwrap();
        let v = v_alpha(&g).unwrap();
        assert_eq!(v.carrier().split(), (2, 2));
        assert!(v.actions().iter().all(|m| m.triplets().all(|(_, _, x)| x.is_polynomial())));
    }

    #[test]
    fn n_beta_zero_is_trivial() {
        let g = build_gl(2, 1).unwrap();
        let n = n_beta(&g, &Rational::zero()).unwrap();
        assert!(n.actions().iter().all(Mat::is_zero));
    }
}
