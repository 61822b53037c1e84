use std::fmt;

use serde_json::{json, Value};

use super::{Rational, Ring, ScalarError};

/// Largest truncation order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// Power series in `h` truncated above degree `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> HSeries<R> {
    pub fn zero(order: usize) -> Self {
        HSeries { order, coeffs: vec![R::zero(); order + 1] }
    }

    pub fn constant(order: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, R::one())
    }

    /// `c·h^k`, or zero when `k > order`.
    pub fn monomial(order: usize, k: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads or truncates `c` to length `order + 1`.
    pub fn from_coeffs(order: usize, mut c: Vec<R>) -> Self {
        c.resize(order + 1, R::zero());
        HSeries { order, coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn neg(&self) -> Self {
        HSeries { order: self.order, coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        HSeries { order: self.order, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn arith(&self, rhs: &Self, op: SeriesOp) -> Result<Self, ScalarError> {
        if self.order != rhs.order {
            return Err(ScalarError::OrderMismatch(self.order, rhs.order));
        }
        let n = self.order;
        let coeffs = match op {
            SeriesOp::Add => self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect(),
            SeriesOp::Sub => self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect(),
            SeriesOp::Mul => {
                let mut c = vec![R::zero(); n + 1];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                        c[i + j].add_assign(&a.mul(b));
                    }
                }
                c
            }
        };
        Ok(HSeries { order: n, coeffs })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.arith(rhs, SeriesOp::Add)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.arith(rhs, SeriesOp::Sub)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.arith(rhs, SeriesOp::Mul)
    }

    /// Truncated exponential; the constant term must vanish.
    pub fn exp(&self) -> Result<Self, ScalarError> {
        if !self.coeffs[0].is_zero() {
            return Err(ScalarError::NonzeroConstant);
        }
        let mut out = Self::one(self.order);
        let mut power = Self::one(self.order);
        for k in 1..=self.order {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scale(&R::from_rational(&Rational::new(1, factorial(k)))))?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({ "order": self.order, "coeffs": self.coeffs.iter().map(Ring::to_json).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self, ScalarError> {
        let order = v
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| ScalarError::Json("series needs an integer order".into()))? as usize;
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| ScalarError::Json("series needs a coeffs array".into()))?;
        if arr.len() != order + 1 {
            return Err(ScalarError::Json(format!("expected {} coefficients, got {}", order + 1, arr.len())));
        }
        let coeffs = arr.iter().map(R::from_json).collect::<Result<_, _>>()?;
        Ok(HSeries { order, coeffs })
    }
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// Free-function form of [`HSeries::arith`].
pub fn series_arith<R: Ring>(a: &HSeries<R>, b: &HSeries<R>, op: SeriesOp) -> Result<HSeries<R>, ScalarError> {
    a.arith(b, op)
}

pub fn series_exp<R: Ring>(s: &HSeries<R>) -> Result<HSeries<R>, ScalarError> {
    s.exp()
}

impl<R: Ring> fmt::Display for HSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})h")?,
                _ => write!(f, "({c})h^{k}")?,
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order + 1)
    }
}

impl<R: Ring> fmt::Debug for HSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(order: usize, c: &[i64]) -> HSeries<Rational> {
        HSeries::from_coeffs(order, c.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn arith_examples() {
        assert_eq!(s(2, &[1, 1]).add(&s(2, &[1, -1])).unwrap(), s(2, &[2]));
        assert_eq!(s(2, &[1, 1]).mul(&s(2, &[1, -1])).unwrap(), s(2, &[1, 0, -1]));
        assert_eq!(s(1, &[1, 1]).mul(&s(1, &[1, 1])).unwrap(), s(1, &[1, 2]));
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(s(1, &[1]).add(&s(2, &[1])), Err(ScalarError::OrderMismatch(1, 2)));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(HSeries::<Rational>::zero(3).exp().unwrap(), s(3, &[1]));
        let e = s(3, &[0, 1]).exp().unwrap();
        assert_eq!(
            e.coeffs(),
            &[Rational::one(), Rational::one(), Rational::new(1, 2), Rational::new(1, 6)]
        );
        let prod = s(4, &[0, 1]).exp().unwrap().mul(&s(4, &[0, -1]).exp().unwrap()).unwrap();
        assert_eq!(prod, s(4, &[1]));
        assert_eq!(s(2, &[1, 1]).exp(), Err(ScalarError::NonzeroConstant));
    }

    #[test]
    fn json_roundtrip() {
        let a = s(2, &[1, 0, -3]);
        assert_eq!(a.to_json(), json!({"order": 2, "coeffs": ["1/1", "0/1", "-3/1"]}));
        assert_eq!(HSeries::<Rational>::from_json(&a.to_json()).unwrap(), a);
    }
}
