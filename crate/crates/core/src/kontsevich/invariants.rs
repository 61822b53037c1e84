//! Invariants assembled from the two evaluation sides.

use super::associator::Associator;
use super::repside::wz_eval;
use super::skeleton::{framings, word_kinds};
use super::word::TangleWord;
use super::zside::{z_eval, ZValue};
use super::KontsevichError;
use crate::diagrams::Kind;
use crate::liesuper::{InvariantTensor, Representation};
use crate::scalars::{AlphaScalar, HSeries, Ring};
use crate::weightsys::{wlg, ws_link, ws_tangle11};

/// Truncated associator through degree `order`.
pub fn build_associator(order: usize) -> Result<Associator, KontsevichError> {
    Associator::cached(order)
}

/// `W_{g,V}` applied to a value on circles or on one interval.
pub fn ws_of_z<R: Ring>(t: &InvariantTensor<R>, v: &Representation<R>, z: &ZValue) -> Result<HSeries<R>, KontsevichError> {
    let long = match z.kinds() {
        [Kind::Interval] => true,
        k if k.iter().all(|k| *k == Kind::Circle) => false,
        _ => return Err(KontsevichError::Unsupported("weight of a tangle with several open strands".into())),
    };
    let mut c = vec![R::zero(); z.order() + 1];
    for (d, q) in z.sum().iter() {
        let w = if long { ws_tangle11(t, v, d) } else { ws_link(t, v, d) }.map_err(KontsevichError::Weight)?;
        c[d.degree()].add_assign(&w.mul(&R::from_rational(q)));
    }
    Ok(HSeries::from_coeffs(z.order(), c))
}

/// The (1,1)-tangle of a knot word: slit if closed, as is if long.
pub fn long_knot(word: &TangleWord) -> Result<TangleWord, KontsevichError> {
    let kinds = word_kinds(word);
    if kinds.len() != 1 {
        return Err(KontsevichError::NotKnot(kinds.len()));
    }
    match kinds[0] {
        Kind::Circle => word.slit(),
        Kind::Interval => Ok(word.clone()),
    }
}

/// `LG(K) = W_LG ∘ Z` of the slit knot.
pub fn lg_invariant(word: &TangleWord, order: usize) -> Result<HSeries<AlphaScalar>, KontsevichError> {
    let long = long_knot(word)?;
    let z = z_eval(&long, order)?;
    let mut c = vec![AlphaScalar::zero(); order + 1];
    for (d, q) in z.sum().iter() {
        let w = wlg(d).map_err(KontsevichError::Weight)?;
        c[d.degree()].add_assign(&w.mul(&AlphaScalar::from_rational(q)));
    }
    Ok(HSeries::from_coeffs(order, c))
}

/// Scalar series of a word colored `v`: closed words directly, long
/// knots through the scalar of their operator.
pub fn wz_series<R: Ring>(
    word: &TangleWord,
    t: &InvariantTensor<R>,
    v: &Representation<R>,
    order: usize,
) -> Result<HSeries<R>, KontsevichError> {
    wz_eval(word, t, v, order)?
        .scalar_series()
        .ok_or_else(|| KontsevichError::Unsupported("value is not a scalar".into()))
}

/// Alternating sum of `wz` over all resolutions of the double points.
pub fn vassiliev_defect<R: Ring>(
    t: &InvariantTensor<R>,
    v: &Representation<R>,
    word: &TangleWord,
    order: usize,
) -> Result<HSeries<R>, KontsevichError> {
    let res = word.resolve_singular();
    for (_, w) in &res {
        let f = framings(w);
        if f.iter().any(|x| x % 2 != 0) {
            return Err(KontsevichError::OddFraming(f));
        }
    }
    let mut acc = vec![R::zero(); order + 1];
    for (s, w) in &res {
        let ser = wz_series(w, t, v, order)?;
        let s = R::from_int(*s);
        for (a, x) in acc.iter_mut().zip(ser.coeffs()) {
            a.add_assign(&x.mul(&s));
        }
    }
    Ok(HSeries::from_coeffs(order, acc))
}
