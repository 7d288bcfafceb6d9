//! Partial fraction decompositions over Q(i) and the decision helpers built
//! on them: the logarithmic part, rational antiderivatives, the
//! logarithmic-derivative test and the d-th power test.
//!
//! An element of K(x) whose denominator splits over Q(i) decomposes uniquely
//! as a polynomial part plus atoms α/(x+β)^m. The order-1 atoms form the
//! logarithmic part; it vanishes exactly when a rational antiderivative
//! exists, which is the pivot of every cancellation argument downstream.

use crate::gauss::GaussRational;
use crate::poly::{gauss_roots, Poly};
use crate::ratfunc::RatFunc;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

/// One pole term α/(x+β)^m. The pole sits at x = -β; α is nonzero and
/// atoms within one decomposition have pairwise distinct (β, m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleAtom {
    pub beta: GaussRational,
    pub order: u32,
    pub coeff: GaussRational,
}

impl PoleAtom {
    pub fn new(beta: GaussRational, order: u32, coeff: GaussRational) -> Self {
        debug_assert!(order >= 1 && !coeff.is_zero());
        PoleAtom { beta, order, coeff }
    }

    /// The rational function α/(x+β)^m this atom denotes.
    pub fn to_ratfunc(&self) -> RatFunc {
        let lin = Poly::new(vec![self.beta.clone(), GaussRational::one()]);
        RatFunc::new(Poly::constant(self.coeff.clone()), lin.pow(self.order))
            .expect("nonzero denominator")
    }
}

/// Exact decomposition: polynomial part plus pole atoms. Recombining
/// reproduces the source function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFraction {
    pub poly_part: Poly,
    pub atoms: Vec<PoleAtom>,
}

impl PartialFraction {
    pub fn recombine(&self) -> RatFunc {
        let mut acc = RatFunc::from_poly(self.poly_part.clone());
        for atom in &self.atoms {
            acc = acc.add(&atom.to_ratfunc());
        }
        acc
    }

    /// The order-1 atoms.
    pub fn logarithmic_part(&self) -> Vec<PoleAtom> {
        self.atoms.iter().filter(|a| a.order == 1).cloned().collect()
    }
}

/// Decomposes f exactly. Requires the denominator to split over Q(i);
/// otherwise reports `RequiresExtension`.
pub fn partial_fractions(f: &RatFunc) -> Result<PartialFraction> {
    if f.den().is_one() {
        return Ok(PartialFraction { poly_part: f.num().clone(), atoms: Vec::new() });
    }
    let (roots, residual) = gauss_roots(f.den())?;
    if residual.degree() != Some(0) {
        return Err(Error::RequiresExtension);
    }
    let (poly_part, rem) = f.num().div_rem(f.den())?;
    let rem = RatFunc::new(rem, f.den().clone())?;
    let mut atoms = Vec::new();
    for (root, mult) in &roots {
        // Laurent coefficients at the pole: with g = den/(x-root)^mult, the
        // coefficient of 1/(x-root)^(mult-t) is the t-th derivative of
        // rem·(x-root)^mult / den = num(rem)/g at the root, divided by t!.
        let factor = Poly::new(vec![-root, GaussRational::one()]).pow(*mult);
        let g = f.den().div_rem(&factor)?.0;
        let mut h = RatFunc::new(rem.num().clone(), g)?;
        let mut t_factorial = GaussRational::one();
        for t in 0..*mult {
            if t > 0 {
                t_factorial = &t_factorial * &GaussRational::from_int(t as i64);
                h = h.delta();
            }
            let value = &h.eval(root)? / &t_factorial;
            if !value.is_zero() {
                atoms.push(PoleAtom::new(-root, mult - t, value));
            }
        }
    }
    atoms.sort_by(|a, b| a.beta.cmp(&b.beta).then(a.order.cmp(&b.order)));
    Ok(PartialFraction { poly_part, atoms })
}

/// The logarithmic part of f: its simple-pole atoms.
pub fn logarithmic_part(f: &RatFunc) -> Result<Vec<PoleAtom>> {
    Ok(partial_fractions(f)?.logarithmic_part())
}

/// A g with δ(g) = f, existing iff the logarithmic part of f vanishes.
pub fn antiderivative(f: &RatFunc) -> Result<Option<RatFunc>> {
    let pf = partial_fractions(f)?;
    if pf.atoms.iter().any(|a| a.order == 1) {
        return Ok(None);
    }
    // Integrate the polynomial part termwise.
    let mut coeffs = vec![GaussRational::zero()];
    for (k, c) in pf.poly_part.coeffs().iter().enumerate() {
        coeffs.push(c / &GaussRational::from_int(k as i64 + 1));
    }
    let mut acc = RatFunc::from_poly(Poly::new(coeffs));
    for atom in &pf.atoms {
        // α/(x+β)^m integrates to -α/((m-1)(x+β)^(m-1)) for m >= 2.
        let lin = Poly::new(vec![atom.beta.clone(), GaussRational::one()]);
        let c = -&(&atom.coeff / &GaussRational::from_int(atom.order as i64 - 1));
        acc = acc.add(&RatFunc::new(Poly::constant(c), lin.pow(atom.order - 1))?);
    }
    Ok(Some(acc))
}

/// A g in K(x)* with δ(g)/g = f, existing iff f has zero polynomial part,
/// only simple poles, and every residue is a rational integer. The witness
/// is Π (x+β_j)^(α_j).
pub fn is_log_derivative(f: &RatFunc) -> Result<Option<RatFunc>> {
    let pf = partial_fractions(f)?;
    if !pf.poly_part.is_zero() {
        return Ok(None);
    }
    let mut num = Poly::one();
    let mut den = Poly::one();
    for atom in &pf.atoms {
        if atom.order != 1 || !atom.coeff.is_integer() {
            return Ok(None);
        }
        let lin = Poly::new(vec![atom.beta.clone(), GaussRational::one()]);
        let e = atom.coeff.re().to_integer();
        let mag: u32 = e
            .abs()
            .try_into()
            .map_err(|_| Error::InvalidParameter("residue exponent too large".into()))?;
        if e.is_positive() {
            num = num.mul(&lin.pow(mag));
        } else {
            den = den.mul(&lin.pow(mag));
        }
    }
    Ok(Some(RatFunc::new(num, den)?))
}

/// Decides whether f = c·g^d for a constant c and g in K(x), by checking
/// that every zero and pole multiplicity is divisible by d. Constants are
/// ignored (over C every constant is a d-th power), so the witness carries
/// the divisor part only: f/g^d is a constant. Zero is never a d-th power
/// unit.
///
/// The multiplicity data comes from the squarefree decomposition, never
/// from root finding, so the test is total: an irreducible factor over Q(i)
/// has distinct roots in C all carrying the factor's multiplicity, which
/// makes the squarefree criterion exactly the C(x) criterion.
pub fn is_dth_power(f: &RatFunc, d: u32) -> Result<Option<RatFunc>> {
    if d < 1 {
        return Err(Error::InvalidOrder);
    }
    if f.is_zero() {
        return Ok(None);
    }
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (poly, target) in [(f.num(), &mut num), (f.den(), &mut den)] {
        for (part, mult) in poly.squarefree_decomposition() {
            if mult % d != 0 {
                return Ok(None);
            }
            *target = target.mul(&part.pow(mult / d));
        }
    }
    Ok(Some(RatFunc::new(num, den)?))
}

/// Shared helper: lcm of the denominators of the real parts of the given
/// residues (all assumed real). Returns 1 for an empty list.
pub(crate) fn residue_denominator_lcm(residues: &[GaussRational]) -> BigInt {
    let mut acc = BigInt::one();
    for r in residues {
        acc = acc.lcm(r.re().denom());
    }
    acc
}
