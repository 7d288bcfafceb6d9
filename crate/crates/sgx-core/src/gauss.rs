//! Gaussian rationals: the field Q(i) of complex numbers with rational real
//! and imaginary parts, with exact arithmetic on arbitrary-precision values.
//!
//! Q(i) is the computable stand-in for the constant field C: every explicit
//! construction downstream places poles on γ + Z with γ ∈ {0, i, 2i, ...},
//! so all coefficient data lives here. Values are canonical (each component
//! a reduced fraction) and equality is structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element a + b·i of Q(i), both components reduced fractions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        GaussRational::new(BigRational::from_integer(n), BigRational::zero())
    }

    /// a/b as a real rational, panics on b = 0.
    pub fn from_ratio(a: i64, b: i64) -> Self {
        GaussRational::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::zero(),
        )
    }

    /// a/b + (c/d)i.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussRational::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
    }

    pub fn zero() -> Self {
        GaussRational::from_int(0)
    }

    pub fn one() -> Self {
        GaussRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::one())
    }

    /// n·i for integer n.
    pub fn imag(n: i64) -> Self {
        GaussRational::new(BigRational::zero(), BigRational::from_integer(BigInt::from(n)))
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True iff the value is a rational integer (element of Z).
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// The norm re² + im², a nonnegative rational; zero iff the value is 0.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> crate::Result<Self> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floor of the real part, used to pick canonical orbit representatives.
    pub fn floor_re(&self) -> BigInt {
        self.re.floor().to_integer()
    }

    /// Canonical comparison: by norm, then real part, then imaginary part.
    /// This is not compatible with field structure; it exists so that pole
    /// data, orbit classes and root lists have a deterministic order.
    pub fn cmp_norm_lex(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.re.cmp(&other.re))
            .then_with(|| self.im.cmp(&other.im))
    }
}

impl Ord for GaussRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_norm_lex(other)
    }
}

impl PartialOrd for GaussRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &GaussRational) -> GaussRational {
        let inv = rhs.inverse().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: &GaussRational) -> GaussRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders the absolute value of a pure-imaginary coefficient, without the
/// leading sign: 1 -> "i", 3/2 -> "3/2*i".
fn fmt_imag_magnitude(q: &BigRational) -> String {
    let a = q.abs();
    if a.is_one() {
        "i".to_string()
    } else {
        format!("{}*i", fmt_rational(&a))
    }
}

impl GaussRational {
    /// True if the printed form contains a binary '+' or '-' at top level and
    /// therefore needs parentheses when multiplied against a monomial.
    pub fn needs_parens(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

/// Canonical display: "a+b*i" with reduced fractions. The output re-parses in
/// the expression grammar of the CLI ('*' is explicit, 'i' is a bare symbol).
impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{}{}", sign, fmt_imag_magnitude(&self.im));
        }
        let op = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}", fmt_rational(&self.re), op, fmt_imag_magnitude(&self.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_on_samples() {
        let a = GaussRational::from_parts(1, 2, -3, 4);
        let b = GaussRational::from_parts(2, 1, 5, 7);
        let prod = &a * &b;
        let back = &prod / &b;
        assert_eq!(back, a);
        assert_eq!(&a * &a.inverse().unwrap(), GaussRational::one());
        assert_eq!(&a + &GaussRational::zero(), a);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(GaussRational::zero().inverse(), Err(crate::Error::DivisionByZero));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, GaussRational::from_int(-1));
    }

    #[test]
    fn norm_lex_order_is_total_and_deterministic() {
        let mut v = vec![
            GaussRational::from_int(2),
            GaussRational::i(),
            GaussRational::from_int(-1),
            GaussRational::zero(),
            GaussRational::from_parts(1, 1, 1, 1),
        ];
        v.sort();
        let printed: Vec<String> = v.iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["0", "-1", "i", "1+i", "2"]);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(GaussRational::from_parts(1, 2, -3, 4).to_string(), "1/2-3/4*i");
        assert_eq!(GaussRational::imag(-1).to_string(), "-i");
        assert_eq!(GaussRational::from_int(7).to_string(), "7");
        assert_eq!(GaussRational::from_parts(0, 1, 2, 3).to_string(), "2/3*i");
    }

    #[test]
    fn floor_re_handles_negatives() {
        assert_eq!(GaussRational::from_ratio(-3, 2).floor_re(), BigInt::from(-2));
        assert_eq!(GaussRational::from_ratio(3, 2).floor_re(), BigInt::from(1));
    }
}
