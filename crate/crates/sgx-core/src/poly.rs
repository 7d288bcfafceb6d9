//! Dense univariate polynomials over Q(i), lowest degree first.
//!
//! The zero polynomial is the empty coefficient list; otherwise the leading
//! coefficient is nonzero, so degree = len - 1 and equality is structural.
//! Root extraction over Q(i) uses the rational-root method in the Euclidean
//! domain `Z[i]`: candidate numerators divide the trailing coefficient and
//! candidate denominators divide the leading coefficient, enumerated through
//! Gaussian-integer divisors of bounded norm in a fixed order.

use crate::gauss::GaussRational;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<GaussRational>,
}

impl Poly {
    /// Builds a polynomial, trimming trailing zeros to canonical form.
    pub fn new(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::new(vec![GaussRational::zero(), GaussRational::one()])
    }

    /// Convenience constructor from small integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| GaussRational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> GaussRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                out[j + k] = &out[j + k] + &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &GaussRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, div: &Poly) -> Result<(Poly, Poly)> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Poly::zero(), Poly::zero()));
        }
        let dd = div.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = div.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussRational::zero(); sd - dd + 1];
        for k in (0..=(sd - dd)).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            let factor = &c * &lead_inv;
            for (j, dc) in div.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&factor * dc);
            }
            quot[k] = factor;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd; gcd(0, 0) = 0. Computed with a primitive polynomial
    /// remainder sequence over `Z[i]` so coefficient heights stay bounded.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.make_monic();
        }
        if rhs.is_zero() {
            return self.make_monic();
        }
        let mut a = IntPoly::from_poly(self).primitive();
        let mut b = IntPoly::from_poly(rhs).primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                return Poly::one();
            }
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.to_poly().make_monic()
    }

    /// Yun's squarefree decomposition: the nonconstant parts (a_m, m) with
    /// self = leading · Π a_m^m, each a_m monic and squarefree, pairwise
    /// coprime. Root-free, so it works whether or not self splits over Q(i).
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.make_monic();
        let df = f.derivative();
        let d = f.gcd(&df);
        let mut b = f.div_rem(&d).expect("gcd divides").0;
        let c = df.div_rem(&d).expect("gcd divides").0;
        let mut z = c.sub(&b.derivative());
        let mut m = 1u32;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&z);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), m));
            }
            b = b.div_rem(&a).expect("factor divides").0;
            let y = z.div_rem(&a).expect("factor divides").0;
            z = y.sub(&b.derivative());
            m += 1;
        }
        out
    }

    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = lead.inverse().expect("leading coefficient nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * &GaussRational::from_int(k as i64));
        }
        Poly::new(out)
    }

    pub fn eval(&self, at: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Taylor shift: the polynomial p(x + c), computed by repeated synthetic
    /// division, exactly.
    pub fn shift(&self, c: &GaussRational) -> Poly {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for k in 0..n {
            for j in (k..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] = &a[j] + &t;
            }
        }
        Poly::new(a)
    }
}

impl fmt::Display for Poly {
    /// Canonical form: monomials degree-descending, explicit '*', coefficients
    /// as reduced "a+b*i". A negative leading coefficient keeps an explicit
    /// "1*" so the printed string re-parses with the intended precedence
    /// (in the CLI grammar "-x^2" would parse as (-x)^2).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if c.needs_parens() {
                // Both parts nonzero: keep the sign inside the parentheses.
                if first {
                    first = false;
                } else {
                    write!(f, " + ")?;
                }
                if mono.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{mono}")?;
                }
                continue;
            }
            let negative = c.re().is_negative() || c.im().is_negative();
            let mag = if negative { -c } else { c.clone() };
            let sep = if first {
                if negative { "-" } else { "" }
            } else if negative {
                " - "
            } else {
                " + "
            };
            let leading_guard = first && negative && k >= 2;
            first = false;
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                if leading_guard {
                    // "-1*x^2" instead of "-x^2".
                    format!("1*{mono}")
                } else {
                    mono.clone()
                }
            } else {
                format!("{mag}*{mono}")
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

/// A Gaussian integer, used internally by the root finder.
#[derive(Debug, Clone, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    /// Exact divisibility test in Z[i]: d | self.
    fn divisible_by(&self, d: &GaussInt) -> bool {
        let n = d.norm();
        // self * conj(d) must have both components divisible by N(d).
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        (&re % &n).is_zero() && (&im % &n).is_zero()
    }

    fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    /// Exact quotient self/d; requires d | self.
    fn div_exact(&self, d: &GaussInt) -> GaussInt {
        let n = d.norm();
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        GaussInt { re: re / &n, im: im / n }
    }

    /// Nearest-lattice-point quotient, the Euclidean division step of Z[i].
    fn div_round(&self, d: &GaussInt) -> GaussInt {
        let n = d.norm();
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        GaussInt { re: round_div(&re, &n), im: round_div(&im, &n) }
    }

    fn gcd(&self, rhs: &GaussInt) -> GaussInt {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let q = a.div_round(&b);
            let r = a.sub(&q.mul(&b));
            a = b;
            b = r;
        }
        a
    }
}

/// Rounds a/b (b > 0) to the nearest integer, ties toward +infinity.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let twice = a * &two + b;
    let d = b * &two;
    let mut q = &twice / &d;
    if (&twice % &d).is_negative() {
        q -= BigInt::one();
    }
    q
}

/// Polynomials over Z[i] used by the primitive remainder sequence.
#[derive(Debug, Clone)]
struct IntPoly {
    coeffs: Vec<GaussInt>,
}

impl IntPoly {
    fn from_poly(p: &Poly) -> IntPoly {
        IntPoly { coeffs: primitive_gauss_int_coeffs(p) }
    }

    fn trim(mut self) -> IntPoly {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Divides out the Z[i]-content.
    fn primitive(self) -> IntPoly {
        let me = self.trim();
        let mut content = GaussInt { re: BigInt::zero(), im: BigInt::zero() };
        for c in &me.coeffs {
            content = content.gcd(c);
        }
        if me.coeffs.is_empty() || content.norm() == BigInt::one() {
            return me;
        }
        IntPoly {
            coeffs: me.coeffs.iter().map(|c| c.div_exact(&content)).collect(),
        }
    }

    /// Pseudo-remainder of self by div: the remainder of lead(div)^k · self
    /// under division by div, computed entirely in Z[i].
    fn pseudo_rem(&self, div: &IntPoly) -> IntPoly {
        let dd = div.degree();
        let lead = div.coeffs.last().expect("nonzero divisor").clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.last().expect("nonempty").clone();
            if top.is_zero() {
                r.pop();
                continue;
            }
            let k = r.len() - 1 - dd;
            for c in r.iter_mut() {
                *c = c.mul(&lead);
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&top.mul(dc));
            }
            r.pop();
        }
        IntPoly { coeffs: r }.trim()
    }

    fn to_poly(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    GaussRational::new(
                        BigRational::from_integer(c.re.clone()),
                        BigRational::from_integer(c.im.clone()),
                    )
                })
                .collect(),
        )
    }
}

/// All divisors of nonzero z in Z[i] up to units, sorted by (norm, re, im).
/// Enumeration: every divisor's norm divides N(z); for each divisor m of
/// N(z), the Gaussian integers of norm m come from m = a² + b². Norms that
/// fit in u64 take a machine-integer path.
fn gauss_divisors(z: &GaussInt) -> Vec<GaussInt> {
    let n = z.norm();
    debug_assert!(!n.is_zero());
    let mut out: Vec<GaussInt> = Vec::new();
    if let Ok(n64) = u64::try_from(n.clone()) {
        let mut norm_divisors: Vec<u64> = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= n64 {
            if n64 % d == 0 {
                norm_divisors.push(d);
                if n64 / d != d {
                    norm_divisors.push(n64 / d);
                }
            }
            d += 1;
        }
        for m in norm_divisors {
            let mut a = 0u64;
            while a.saturating_mul(a) <= m {
                let rest = m - a * a;
                let b = rest.isqrt();
                if b * b == rest {
                    for (re, im) in [(a as i64, b as i64), (a as i64, -(b as i64))] {
                        let cand = GaussInt { re: BigInt::from(re), im: BigInt::from(im) };
                        if !cand.is_zero() && z.divisible_by(&cand) && !out.contains(&cand) {
                            out.push(cand);
                        }
                    }
                }
                a += 1;
            }
        }
    } else {
        let mut norm_divisors = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                norm_divisors.push(d.clone());
                let q = &n / &d;
                if q != d {
                    norm_divisors.push(q);
                }
            }
            d += BigInt::one();
        }
        for m in norm_divisors {
            let mut a = BigInt::zero();
            while &a * &a <= m {
                let rest = &m - &a * &a;
                let b = rest.sqrt();
                if &b * &b == rest {
                    for cand in [
                        GaussInt { re: a.clone(), im: b.clone() },
                        GaussInt { re: a.clone(), im: -b.clone() },
                    ] {
                        if !cand.is_zero() && z.divisible_by(&cand) && !out.contains(&cand) {
                            out.push(cand);
                        }
                    }
                }
                a += BigInt::one();
            }
        }
    }
    out.sort_by(|p, q| {
        p.norm()
            .cmp(&q.norm())
            .then_with(|| p.re.cmp(&q.re))
            .then_with(|| p.im.cmp(&q.im))
    });
    out
}

const UNITS: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

/// Clears denominators and content: returns the coefficients of a primitive
/// Z[i] polynomial with the same roots.
fn primitive_gauss_int_coeffs(p: &Poly) -> Vec<GaussInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.re().denom());
        lcm = lcm.lcm(c.im().denom());
    }
    let scale = BigRational::from_integer(lcm);
    let mut ints: Vec<GaussInt> = p
        .coeffs()
        .iter()
        .map(|c| GaussInt {
            re: (c.re() * &scale).to_integer(),
            im: (c.im() * &scale).to_integer(),
        })
        .collect();
    // Remove rational integer content (full Z[i] content removal is not
    // needed for the divisor bound, this just keeps the norms small).
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(&c.re).gcd(&c.im);
    }
    if content > BigInt::one() {
        for c in &mut ints {
            c.re = &c.re / &content;
            c.im = &c.im / &content;
        }
    }
    ints
}

/// Roots in Q(i) of a squarefree polynomial with nonzero trailing
/// coefficient, by the Gaussian rational-root enumeration. Returns the
/// roots found and the unfactored monic remainder.
fn eval_int_poly(coeffs: &[GaussInt], at_re: i64, at_im: i64) -> GaussInt {
    let at = GaussInt { re: BigInt::from(at_re), im: BigInt::from(at_im) };
    let mut acc = GaussInt { re: BigInt::zero(), im: BigInt::zero() };
    for c in coeffs.iter().rev() {
        acc = acc.mul(&at);
        acc.re += &c.re;
        acc.im += &c.im;
    }
    acc
}

/// Candidates u·p/q (p | trailing, q | leading, u a unit) pass through the
/// classic evaluation prefilter first: a root p'/q' in lowest terms forces
/// (q' - p') | P(1) and (q' + p') | P(-1) in Z[i].
fn squarefree_gauss_roots(sf: &Poly) -> Result<(Vec<GaussRational>, Poly)> {
    let mut work = sf.make_monic();
    let mut found = Vec::new();
    let ints = primitive_gauss_int_coeffs(&work);
    let trailing = ints.first().cloned().expect("nonempty");
    let leading = ints.last().cloned().expect("nonempty");
    let at_one = eval_int_poly(&ints, 1, 0);
    let at_minus_one = eval_int_poly(&ints, -1, 0);

    let mut candidates: std::collections::BTreeSet<GaussRational> =
        std::collections::BTreeSet::new();
    for num in gauss_divisors(&trailing) {
        for den in gauss_divisors(&leading) {
            // Lowest terms, for the divisibility prefilter.
            let g = num.gcd(&den);
            let p = num.div_exact(&g);
            let q = den.div_exact(&g);
            for (ur, ui) in UNITS {
                let unit = GaussInt { re: BigInt::from(ur), im: BigInt::from(ui) };
                let pu = p.mul(&unit);
                let w1 = q.sub(&pu);
                if !at_one.is_zero() && !w1.is_zero() && !at_one.divisible_by(&w1) {
                    continue;
                }
                let w2 = GaussInt { re: &q.re + &pu.re, im: &q.im + &pu.im };
                if !at_minus_one.is_zero() && !w2.is_zero() && !at_minus_one.divisible_by(&w2) {
                    continue;
                }
                let cand = GaussRational::new(
                    BigRational::from_integer(pu.re.clone()),
                    BigRational::from_integer(pu.im.clone()),
                ) / GaussRational::new(
                    BigRational::from_integer(q.re.clone()),
                    BigRational::from_integer(q.im.clone()),
                );
                candidates.insert(cand);
            }
        }
    }
    for cand in candidates {
        if work.degree() == Some(0) {
            break;
        }
        if !work.eval(&cand).is_zero() {
            continue;
        }
        let factor = Poly::new(vec![-&cand, GaussRational::one()]);
        work = work.div_rem(&factor)?.0;
        found.push(cand);
    }
    Ok((found, work.make_monic()))
}

/// All roots of p in Q(i) with multiplicities, plus the residual factor
/// without Q(i)-roots. The reported data satisfies
/// p = leading(p) · Π (x - root)^mult · residual with residual monic.
/// Roots come back sorted by (norm, re, im). The search runs on the
/// squarefree parts of p, so multiplicities cost no extra enumeration.
pub fn gauss_roots(p: &Poly) -> Result<(Vec<(GaussRational, u32)>, Poly)> {
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut roots: Vec<(GaussRational, u32)> = Vec::new();
    let mut residual = Poly::one();
    for (part, mult) in p.squarefree_decomposition() {
        // Strip the root at zero so trailing coefficients are nonzero.
        let mut part = part;
        if part.coeff(0).is_zero() {
            part = part.div_rem(&Poly::x())?.0;
            roots.push((GaussRational::zero(), mult));
        }
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let (found, rest) = squarefree_gauss_roots(&part)?;
        for r in found {
            roots.push((r, mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            residual = residual.mul(&rest.pow(mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp_norm_lex(&b.0));
    Ok((roots, residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_minus(c: GaussRational) -> Poly {
        Poly::new(vec![-&c, GaussRational::one()])
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Poly::from_ints(&[1, 0, -3, 2, 5]);
        let b = Poly::from_ints(&[2, 1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_products() {
        let f = Poly::from_ints(&[1, 1]); // x + 1
        let g = Poly::from_ints(&[-1, 1]); // x - 1
        let a = f.mul(&f).mul(&g);
        let b = f.mul(&g).mul(&g);
        assert_eq!(a.gcd(&b), f.mul(&g).make_monic());
    }

    #[test]
    fn shift_matches_eval() {
        let p = Poly::from_ints(&[3, -1, 0, 2]);
        let c = GaussRational::from_parts(1, 2, 1, 1);
        let shifted = p.shift(&c);
        let at = GaussRational::from_parts(5, 3, -1, 2);
        assert_eq!(shifted.eval(&at), p.eval(&(&at + &c)));
    }

    #[test]
    fn roots_of_x_squared_plus_one() {
        let p = Poly::from_ints(&[1, 0, 1]);
        let (roots, residual) = gauss_roots(&p).unwrap();
        assert!(residual.is_one());
        assert_eq!(
            roots,
            vec![(GaussRational::imag(-1), 1), (GaussRational::imag(1), 1)]
        );
    }

    #[test]
    fn sqrt_two_stays_unfactored() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let (roots, residual) = gauss_roots(&p).unwrap();
        assert!(roots.is_empty());
        assert_eq!(residual, p);
    }

    #[test]
    fn repeated_root_and_shifted_root() {
        // (x - i)^2 (x + 5), expanded and re-factored.
        let p = x_minus(GaussRational::i())
            .pow(2)
            .mul(&x_minus(GaussRational::from_int(-5)));
        let (roots, residual) = gauss_roots(&p).unwrap();
        assert!(residual.is_one());
        assert_eq!(
            roots,
            vec![(GaussRational::i(), 2), (GaussRational::from_int(-5), 1)]
        );
    }

    #[test]
    fn root_product_identity() {
        // Mixed rational and Gaussian roots with a content-heavy scale.
        let p = x_minus(GaussRational::from_ratio(1, 2))
            .mul(&x_minus(GaussRational::from_parts(0, 1, 1, 3)))
            .mul(&Poly::from_ints(&[1, 0, 0, 1]))
            .scale(&GaussRational::from_parts(6, 1, 12, 1));
        let (roots, residual) = gauss_roots(&p).unwrap();
        let mut rebuilt = Poly::constant(p.leading().unwrap().clone());
        for (r, m) in &roots {
            rebuilt = rebuilt.mul(&x_minus(r.clone()).pow(*m));
        }
        rebuilt = rebuilt.mul(&residual);
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn display_reparses_precedence_cases() {
        assert_eq!(Poly::from_ints(&[0, 0, -1]).to_string(), "-1*x^2");
        assert_eq!(Poly::from_ints(&[2, -1]).to_string(), "-x + 2");
        assert_eq!(
            Poly::new(vec![GaussRational::from_parts(1, 1, 2, 1), GaussRational::imag(-2)])
                .to_string(),
            "-2*i*x + (1+2*i)"
        );
    }
}
