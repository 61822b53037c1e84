use std::fmt;

use serde_json::Value;

use super::{Rational, Ring, ScalarError};

/// Dense univariate polynomial over ℚ in the indeterminate `α`,
/// coefficients in ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn from_coeffs(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn constant(q: Rational) -> Self {
        Poly::from_coeffs(vec![q])
    }

    /// The monomial `α`.
    pub fn var() -> Self {
        Poly(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let c = (0..n)
            .map(|i| match (self.0.get(i), rhs.0.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        Poly(self.0.iter().map(Ring::neg).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::default();
        }
        let mut c = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j].add_assign(&a.mul(b));
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Poly::from_coeffs(self.0.iter().map(|a| a.mul(q)).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap().mul(&lead_inv);
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&f.mul(dc));
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => Poly::default(),
        }
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(Ring::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, ScalarError> {
        let arr = v.as_array().ok_or_else(|| ScalarError::Json("polynomial must be an array".into()))?;
        Ok(Poly::from_coeffs(arr.iter().map(Rational::from_json).collect::<Result<_, _>>()?))
    }
}

impl fmt::Display for Poly {
    /// Ascending monomial order, e.g. `1 + 2α - α^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coef = if k > 0 && a.is_one() { String::new() } else { a.to_string() };
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{coef}α")?,
                _ => write!(f, "{coef}α^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of ℚ(α): reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaScalar {
    num: Poly,
    den: Poly,
}

impl AlphaScalar {
    pub fn from_poly(p: Poly) -> Self {
        AlphaScalar { num: p, den: Poly::constant(Rational::one()) }
    }

    pub fn alpha() -> Self {
        Self::from_poly(Poly::var())
    }

    /// Builds `num/den`, reducing and normalising the denominator to be monic.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.leading().unwrap().inv().unwrap();
            return AlphaScalar { num: num.scale(&inv), den: Poly::constant(Rational::one()) };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_constant() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lead = den.leading().unwrap().inv().unwrap();
        AlphaScalar { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    /// True when the reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Substitutes a rational value for `α`; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        self.num.eval(x).div(&self.den.eval(x))
    }
}

impl fmt::Display for AlphaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for AlphaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for AlphaScalar {
    fn zero() -> Self {
        AlphaScalar { num: Poly::default(), den: Poly::constant(Rational::one()) }
    }
    fn one() -> Self {
        Self::from_poly(Poly::constant(Rational::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        Self::reduce(self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), self.den.mul(&rhs.den))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        AlphaScalar { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }
    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        AlphaScalar { num: self.num.scale(q), den: self.den.clone() }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }
    fn to_json(&self) -> Value {
        if self.is_polynomial() {
            self.num.to_json()
        } else {
            serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
        }
    }
    fn from_json(v: &Value) -> Result<Self, ScalarError> {
        match v {
            Value::Array(_) => Ok(Self::from_poly(Poly::from_json(v)?)),
            Value::Object(o) => {
                let num = Poly::from_json(o.get("num").ok_or_else(|| ScalarError::Json("missing num".into()))?)?;
                let den = Poly::from_json(o.get("den").ok_or_else(|| ScalarError::Json("missing den".into()))?)?;
                Self::from_fraction(num, den)
            }
            Value::String(_) | Value::Number(_) => Ok(Self::from_rational(&Rational::from_json(v)?)),
            other => Err(ScalarError::Json(format!("not an α-scalar: {other}"))),
        }
    }
}
