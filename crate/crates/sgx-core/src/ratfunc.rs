//! Reduced rational functions over Q(i): the carrier of every equation
//! coefficient in the δσ-field K(x), K = Q(i), with δ = d/dx and
//! σ(f(x)) = f(x+1).
//!
//! Canonical form: gcd(num, den) = 1, den monic and nonzero, zero is 0/1.
//! Equality is structural. All operations are pure and exact; δ and σ
//! commute (the shift case of the twisted commutation rule, with twist
//! constant fixed to 1).

use crate::gauss::GaussRational;
use crate::poly::Poly;
use crate::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds num/den in canonical reduced form. Fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num: Poly::zero(), den: Poly::one() });
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lead_inv = den.leading().unwrap().inverse()?;
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.make_monic(),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    /// The coordinate function x.
    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn constant(c: GaussRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for elements of the constant field Q(i), including zero.
    pub fn is_constant(&self) -> bool {
        self.num.degree().map_or(true, |d| d == 0) && self.den.is_one()
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFunc::new(num, den).expect("denominators nonzero")
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("denominators nonzero")
    }

    pub fn scale(&self, c: &GaussRational) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("denominator nonzero")
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn powi(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// The formal derivative δ = d/dx, via the quotient rule, reduced.
    pub fn delta(&self) -> RatFunc {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFunc::new(num, self.den.mul(&self.den)).expect("denominator nonzero")
    }

    /// The shift σ^l: substitutes x -> x + l exactly. Commutes with delta.
    pub fn sigma(&self, l: usize) -> RatFunc {
        if l == 0 {
            return self.clone();
        }
        let c = GaussRational::from_int(l as i64);
        RatFunc {
            num: self.num.shift(&c),
            den: self.den.shift(&c),
        }
    }

    /// δ(self)/self, defined for nonzero functions.
    pub fn log_derivative(&self) -> Result<RatFunc> {
        self.delta().div(self)
    }

    pub fn eval(&self, at: &GaussRational) -> Result<GaussRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval(at) / &d)
    }
}

impl fmt::Display for RatFunc {
    /// Canonical print: expanded numerator over expanded monic denominator,
    /// both degree-descending; "(num)/(den)" unless the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// f = 1/(x - β) as a building block for tests and constructions.
pub fn simple_pole(beta_location: &GaussRational) -> RatFunc {
    RatFunc::new(
        Poly::one(),
        Poly::new(vec![-beta_location, GaussRational::one()]),
    )
    .expect("monic denominator")
}
