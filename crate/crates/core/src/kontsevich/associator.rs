//! Rational even associator, solved degree by degree.
//!
//! `Φ = exp(ℓ)` with `ℓ` a Lie series in the letters `A = t12`, `B = t23`.
//! Each degree of the pentagon and of both hexagons is affine in the new
//! Lie coefficients; odd degrees are fixed to zero and free directions of
//! the even degrees are set to zero.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::horizontal::{
    degree_part, elem_add, elem_scale, elem_sub, free_exp, right_normed, Elem, Horizontal, PermElem,
};
use super::KontsevichError;
use crate::linalg::{solve_affine, Echelon, SparseRow};
use crate::scalars::{Rational, Ring};

/// Highest degree the associator is solved to.
pub const MAX_ASSOCIATOR_DEGREE: usize = 4;

/// One linear equation: coefficients of the unknowns and the constant.
type Equation = (SparseRow<usize>, Rational);

#[derive(Clone, Debug)]
pub struct Associator {
    order: usize,
    log: Elem,
    phi: Elem,
    phi_inv: Elem,
}

/// Independent right-normed brackets of degree `k`.
fn lie_basis(k: usize) -> Vec<Elem> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for m in 0..(1u32 << k) {
        let letters: Vec<u8> = (0..k).map(|i| (m >> i & 1) as u8).collect();
        let b = right_normed(&letters);
        if ech.insert(b.clone()) {
            out.push(b);
        }
    }
    out
}

struct Equations {
    h3: Horizontal,
    h4: Horizontal,
}

impl Equations {
    fn new() -> Self {
        Equations { h3: Horizontal::new(3), h4: Horizontal::new(4) }
    }

    fn braid(&self, perm: Vec<usize>, pairs: &[(usize, usize)], max: usize) -> PermElem {
        let h = &self.h3;
        let mut x = Elem::new();
        for &(a, b) in pairs {
            x = elem_add(&x, &h.t(a, b));
        }
        PermElem { perm, elem: h.exp(&x, &Rational::new(1, 2), max) }
    }

    /// Residuals `LHS − RHS` of hexagon, inverse hexagon and pentagon.
    fn residuals(&self, phi: &Elem, phi_inv: &Elem, max: usize) -> Vec<Elem> {
        let h = &self.h3;
        let (t01, t12) = (h.t(0, 1), h.t(1, 2));
        let a = PermElem::plain(3, h.substitute(phi, [&t01, &t12], max));
        let ai = PermElem::plain(3, h.substitute(phi_inv, [&t01, &t12], max));
        let c12 = self.braid(vec![1, 0, 2], &[(0, 1)], max);
        let c23 = self.braid(vec![0, 2, 1], &[(1, 2)], max);
        let c_u_vw = self.braid(vec![2, 0, 1], &[(0, 1), (0, 2)], max);
        let c_uv_w = self.braid(vec![1, 2, 0], &[(0, 2), (1, 2)], max);

        let hex1_l = a.then(&c_u_vw, h, max).then(&a, h, max);
        let hex1_r = c12.then(&a, h, max).then(&c23, h, max);
        let hex2_l = ai.then(&c_uv_w, h, max).then(&ai, h, max);
        let hex2_r = c23.then(&ai, h, max).then(&c12, h, max);
        debug_assert_eq!(hex1_l.perm, hex1_r.perm);
        debug_assert_eq!(hex2_l.perm, hex2_r.perm);

        let g = &self.h4;
        let t = |a: usize, b: usize| g.t(a, b);
        let p = |x: Elem, y: Elem| g.substitute(phi, [&x, &y], max);
        let lhs = g.mul(&p(t(0, 1), elem_add(&t(1, 2), &t(1, 3))), &p(elem_add(&t(0, 2), &t(1, 2)), t(2, 3)), max);
        let rhs = g.mul(
            &g.mul(&p(t(1, 2), t(2, 3)), &p(elem_add(&t(0, 1), &t(0, 2)), elem_add(&t(1, 3), &t(2, 3))), max),
            &p(t(0, 1), t(1, 2)),
            max,
        );
        vec![elem_sub(&hex1_l.elem, &hex1_r.elem), elem_sub(&hex2_l.elem, &hex2_r.elem), elem_sub(&lhs, &rhs)]
    }
}

fn to_rows(res: &[Elem], k: usize) -> Vec<BTreeMap<(usize, Vec<u8>), Rational>> {
    res.iter()
        .enumerate()
        .map(|(i, r)| degree_part(r, k).into_iter().map(|(w, c)| ((i, w), c)).collect())
        .collect()
}

impl Associator {
    /// Solves up to degree `order`.
    pub fn solve(order: usize) -> Result<Associator, KontsevichError> {
        if order > MAX_ASSOCIATOR_DEGREE {
            return Err(KontsevichError::OrderTooHigh(order, MAX_ASSOCIATOR_DEGREE));
        }
        let eqs = Equations::new();
        let mut log = Elem::new();
        for k in 1..=order {
            let basis = lie_basis(k);
            let eval = |l: &Elem| {
                let phi = free_exp(l, k);
                let inv = free_exp(&elem_scale(l, &Rational::from_int(-1)), k);
                to_rows(&eqs.residuals(&phi, &inv, k), k)
            };
            let base = eval(&log);
            let dirs: Vec<_> = basis.iter().map(|b| eval(&elem_add(&log, b))).collect();

            // coefficient of each unknown in each residual entry
            let mut system: BTreeMap<(usize, (usize, Vec<u8>)), Equation> = BTreeMap::new();
            for (eq, row) in base.iter().enumerate() {
                for (key, c) in row {
                    system.entry((eq, key.clone())).or_insert_with(|| (SparseRow::new(), Rational::zero())).1 = c.neg();
                }
            }
            for (j, d) in dirs.iter().enumerate() {
                for (eq, row) in d.iter().enumerate() {
                    let keys: std::collections::BTreeSet<_> = row.keys().chain(base[eq].keys()).cloned().collect();
                    for key in keys {
                        let a = row.get(&key).cloned().unwrap_or_else(Rational::zero);
                        let b = base[eq].get(&key).cloned().unwrap_or_else(Rational::zero);
                        let diff = a.sub(&b);
                        if !diff.is_zero() {
                            system
                                .entry((eq, key))
                                .or_insert_with(|| (SparseRow::new(), Rational::zero()))
                                .0
                                .insert(j, diff);
                        }
                    }
                }
            }
            let mut rows: Vec<(SparseRow<usize>, Rational)> = system.into_values().collect();
            if k % 2 == 1 {
                for j in 0..basis.len() {
                    rows.push((SparseRow::from([(j, Rational::one())]), Rational::zero()));
                }
            }
            let x = solve_affine(basis.len(), &rows).map_err(|_| KontsevichError::AssociatorUnsolvable(k))?;
            for (b, c) in basis.iter().zip(&x) {
                log = elem_add(&log, &elem_scale(b, c));
            }
        }
        Ok(Associator::from_log(log, order))
    }

    /// `exp(log)` truncated at `order`, with no axiom check.
    pub fn from_log(log: Elem, order: usize) -> Associator {
        let log: Elem = log.into_iter().filter(|(w, _)| w.len() <= order).collect();
        let phi = free_exp(&log, order);
        let phi_inv = free_exp(&elem_scale(&log, &Rational::from_int(-1)), order);
        Associator { order, log, phi, phi_inv }
    }

    /// Shared solution at the highest supported degree, truncated.
    pub fn cached(order: usize) -> Result<Associator, KontsevichError> {
        static CACHE: OnceLock<Associator> = OnceLock::new();
        if order > MAX_ASSOCIATOR_DEGREE {
            return Err(KontsevichError::OrderTooHigh(order, MAX_ASSOCIATOR_DEGREE));
        }
        let full = CACHE.get_or_init(|| Associator::solve(MAX_ASSOCIATOR_DEGREE).expect("associator"));
        Ok(full.truncate(order))
    }

    pub fn truncate(&self, order: usize) -> Associator {
        let cut = |e: &Elem| e.iter().filter(|(w, _)| w.len() <= order).map(|(w, c)| (w.clone(), c.clone())).collect();
        Associator { order: order.min(self.order), log: cut(&self.log), phi: cut(&self.phi), phi_inv: cut(&self.phi_inv) }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `log Φ` as words in the letters 0 = `t12`, 1 = `t23`.
    pub fn log(&self) -> &Elem {
        &self.log
    }

    pub fn phi(&self) -> &Elem {
        &self.phi
    }

    pub fn phi_inv(&self) -> &Elem {
        &self.phi_inv
    }

    /// The `c` in `Φ = 1 + c[t12, t23] + …`.
    pub fn c2(&self) -> Rational {
        self.phi.get(&vec![0u8, 1]).cloned().unwrap_or_else(Rational::zero)
    }

    /// Residuals of the three axioms up to the solved degree, in normal form.
    pub fn residuals(&self) -> Vec<Elem> {
        Equations::new().residuals(&self.phi, &self.phi_inv, self.order)
    }

    /// `Φ` in `A^h_3`, in normal form.
    pub fn in_three_strands(&self) -> Elem {
        let h = Horizontal::new(3);
        h.substitute(&self.phi, [&h.t(0, 1), &h.t(1, 2)], self.order)
    }
}
