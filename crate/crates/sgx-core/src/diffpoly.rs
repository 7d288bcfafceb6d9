//! σ-polynomial rings and truncated ideals: the order-i Zariski closure
//! machinery.
//!
//! A σ-polynomial in base variables y_1..y_n is an ordinary multivariate
//! polynomial in the doubly indexed variables σ^s(y_b). Truncating at order
//! i collects all prolongations of the defining σ-polynomials that fit in
//! levels <= i; declared invertible elements are saturated by adjoining an
//! inverse variable with relation t·σ^l(u) - 1 per level. Groebner bases of
//! the truncations are computed over the graded-reverse-lexicographic order
//! with σ-index-major variables (level l+1 variables are larger than level
//! l), so reduced bases rewrite high levels down, the natural normal form
//! for difference-defined ideals.

use crate::gauss::GaussRational;
use crate::groebner::{self, Budget};
use crate::mpoly::{MPoly, PolyRing};
use crate::Result;
use num_traits::Signed;
use std::fmt::Write as _;

/// One prolonged variable σ^shift(y_base).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SigmaVar {
    pub base: usize,
    pub shift: usize,
}

/// An exact polynomial in finitely many σ^s(y_b), coefficients in Q(i).
///
/// The flat variable layout is shift-major: flat = shift·nbase + base, and
/// larger flat index means larger variable in the monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPolynomial {
    nbase: usize,
    levels: usize,
    poly: MPoly,
}

impl SigmaPolynomial {
    fn ring(nbase: usize, levels: usize) -> PolyRing {
        PolyRing::grevlex(nbase * levels)
    }

    pub fn zero(nbase: usize) -> Self {
        SigmaPolynomial { nbase, levels: 1, poly: MPoly::zero() }
    }

    pub fn constant(nbase: usize, c: GaussRational) -> Self {
        let ring = Self::ring(nbase, 1);
        SigmaPolynomial { nbase, levels: 1, poly: MPoly::constant(&ring, c) }
    }

    pub fn one(nbase: usize) -> Self {
        Self::constant(nbase, GaussRational::one())
    }

    /// The variable σ^shift(y_base).
    pub fn var(nbase: usize, v: SigmaVar) -> Self {
        assert!(v.base < nbase);
        let levels = v.shift + 1;
        let ring = Self::ring(nbase, levels);
        SigmaPolynomial {
            nbase,
            levels,
            poly: MPoly::var(&ring, v.shift * nbase + v.base),
        }
    }

    pub fn nbase(&self) -> usize {
        self.nbase
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// The maximal σ-index actually appearing; 0 for constants.
    pub fn order(&self) -> usize {
        let mut max_shift = 0;
        for (m, _) in &self.poly.terms {
            for (flat, &e) in m.iter().enumerate() {
                if e > 0 {
                    max_shift = max_shift.max(flat / self.nbase);
                }
            }
        }
        max_shift
    }

    fn widen(&self, levels: usize) -> MPoly {
        debug_assert!(levels >= self.levels);
        let target_len = self.nbase * levels;
        MPoly {
            terms: self
                .poly
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut nm = vec![0u16; target_len];
                    nm[..m.len()].copy_from_slice(m);
                    (nm.into_boxed_slice(), c.clone())
                })
                .collect(),
        }
    }

    fn binop(&self, rhs: &Self, f: impl Fn(&PolyRing, &MPoly, &MPoly) -> MPoly) -> Self {
        assert_eq!(self.nbase, rhs.nbase, "mismatched base variable counts");
        let levels = self.levels.max(rhs.levels);
        let ring = Self::ring(self.nbase, levels);
        let a = self.widen(levels);
        let b = rhs.widen(levels);
        SigmaPolynomial { nbase: self.nbase, levels, poly: f(&ring, &a, &b) }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.binop(rhs, |ring, a, b| a.add(ring, b))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.binop(rhs, |ring, a, b| a.sub(ring, b))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.binop(rhs, |ring, a, b| a.mul(ring, b))
    }

    pub fn neg(&self) -> Self {
        SigmaPolynomial { nbase: self.nbase, levels: self.levels, poly: self.poly.neg() }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        SigmaPolynomial { nbase: self.nbase, levels: self.levels, poly: self.poly.scale(c) }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SigmaPolynomial::one(self.nbase);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies σ^l formally: every variable index shifts up by l; Q(i)
    /// coefficients are fixed. Respects products: σ(pq) = σ(p)σ(q).
    pub fn prolong(&self, l: usize) -> Self {
        if l == 0 {
            return self.clone();
        }
        let levels = self.levels + l;
        let target_len = self.nbase * levels;
        let terms = self
            .poly
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = vec![0u16; target_len];
                nm[l * self.nbase..l * self.nbase + m.len()].copy_from_slice(m);
                (nm.into_boxed_slice(), c.clone())
            })
            .collect();
        // A uniform upward shift preserves the grevlex term order.
        SigmaPolynomial { nbase: self.nbase, levels, poly: MPoly { terms } }
    }

    /// Evaluates at a Q(i)-valued assignment of the prolonged variables.
    pub fn eval(&self, assign: &dyn Fn(SigmaVar) -> GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for (vars, coeff) in self.iter_terms() {
            let mut term = coeff.clone();
            for (v, e) in vars {
                term = &term * &assign(v).pow(e as u32);
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Terms as (variable, exponent) lists plus coefficient, for evaluation.
    pub fn iter_terms(&self) -> impl Iterator<Item = (Vec<(SigmaVar, u16)>, &GaussRational)> {
        let nbase = self.nbase;
        self.poly.terms.iter().map(move |(m, c)| {
            let vars = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(flat, &e)| (SigmaVar { base: flat % nbase, shift: flat / nbase }, e))
                .collect();
            (vars, c)
        })
    }

    /// Embeds into the flat polynomial ring of a truncation with the given
    /// level count (order + 1). The σ-order of self must fit.
    pub fn to_flat(&self, levels: usize, ring: &PolyRing) -> MPoly {
        assert!(self.order() < levels, "σ-order exceeds the truncation order");
        let wide = self.widen(levels.max(self.levels));
        let total = ring.nvars;
        MPoly {
            terms: wide
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut nm = vec![0u16; total];
                    nm[..m.len().min(total)].copy_from_slice(&m[..m.len().min(total)]);
                    (nm.into_boxed_slice(), c.clone())
                })
                .collect(),
        }
    }

    /// Canonical text form using the supplied base-variable namer:
    /// σ^0(y) prints bare, higher levels as "s^k(name)"; explicit '*'; a
    /// leading negative term with an exponent keeps its "1*" so the string
    /// re-parses with the intended precedence.
    pub fn display_with(&self, namer: &dyn Fn(usize) -> String) -> String {
        if self.poly.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in &self.poly.terms {
            let mut factors: Vec<String> = Vec::new();
            for (flat, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = SigmaVar { base: flat % self.nbase, shift: flat / self.nbase };
                let name = if v.shift == 0 {
                    namer(v.base)
                } else {
                    format!("s^{}({})", v.shift, namer(v.base))
                };
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let has_power = m.iter().any(|&e| e >= 2);
            let mono = factors.join("*");
            if c.needs_parens() {
                if !first {
                    out.push_str(" + ");
                }
                if mono.is_empty() {
                    let _ = write!(out, "({c})");
                } else {
                    let _ = write!(out, "({c})*{mono}");
                }
                first = false;
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
            let keep_one = first && negative && has_power;
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() && !keep_one {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            let _ = write!(out, "{sep}{body}");
            first = false;
        }
        out
    }
}

/// The order-i data of a σ-ideal: ordinary generators in the variables
/// σ^l(y_b), l <= i, over the σ-index-major grevlex ring, with declared
/// denominators saturated through inverse variables. The Groebner basis is
/// cached once computed.
#[derive(Debug, Clone)]
pub struct TruncatedIdeal {
    pub nbase: usize,
    pub order: usize,
    pub ring: PolyRing,
    pub generators: Vec<MPoly>,
    /// Number of leading variables that are main (non-inverse) variables.
    pub main_vars: usize,
    basis: Option<Vec<MPoly>>,
}

impl TruncatedIdeal {
    /// Builds a truncation directly from flat generators (used by callers
    /// that assemble their own rings, e.g. elimination results).
    pub fn from_flat(nbase: usize, order: usize, ring: PolyRing, generators: Vec<MPoly>) -> Self {
        let main_vars = nbase * (order + 1);
        TruncatedIdeal { nbase, order, ring, generators, main_vars, basis: None }
    }

    pub fn groebner(&mut self, budget: &Budget) -> Result<&[MPoly]> {
        if self.basis.is_none() {
            let gb = groebner::groebner_basis(&self.ring, &self.generators, budget)?;
            self.basis = Some(gb);
        }
        Ok(self.basis.as_deref().expect("just computed"))
    }

    pub fn cached_basis(&self) -> Option<&[MPoly]> {
        self.basis.as_deref()
    }

    /// Krull dimension of the truncated coordinate ring; -1 for the unit
    /// ideal (empty scheme).
    pub fn dimension(&mut self, budget: &Budget) -> Result<i64> {
        self.groebner(budget)?;
        Ok(groebner::dimension(&self.ring, self.basis.as_deref().expect("computed")))
    }

    pub fn is_unit(&mut self, budget: &Budget) -> Result<bool> {
        self.groebner(budget)?;
        Ok(groebner::is_unit_ideal(self.basis.as_deref().expect("computed")))
    }

    /// Ideal membership of a σ-polynomial of order <= self.order.
    pub fn contains(&mut self, f: &SigmaPolynomial, budget: &Budget) -> Result<bool> {
        self.groebner(budget)?;
        let flat = f.to_flat(self.order + 1, &self.ring);
        let nf = groebner::normal_form(&self.ring, &flat, self.basis.as_deref().expect("computed"));
        Ok(nf.is_zero())
    }

    /// Containment self ⊇ other as ideals in the same ring.
    pub fn contains_ideal(&mut self, other: &TruncatedIdeal, budget: &Budget) -> Result<bool> {
        assert_eq!(self.ring, other.ring, "ideal comparison requires one ring");
        self.groebner(budget)?;
        let basis = self.basis.as_deref().expect("computed");
        Ok(other
            .generators
            .iter()
            .all(|g| groebner::normal_form(&self.ring, g, basis).is_zero()))
    }
}

/// Collects all prolongations σ^l(g), order(g) + l <= order, of the
/// generators, and saturates each declared invertible element u by adding
/// t_{u,l}·σ^l(u) - 1 with a fresh variable per level. Generators of
/// σ-order beyond the truncation order contribute nothing at this order.
pub fn truncation(
    generators: &[SigmaPolynomial],
    order: usize,
    invertible: &[SigmaPolynomial],
) -> TruncatedIdeal {
    let nbase = generators
        .first()
        .map(|g| g.nbase())
        .or_else(|| invertible.first().map(|g| g.nbase()))
        .expect("truncation needs at least one polynomial to fix the base");
    let main_vars = nbase * (order + 1);
    let mut inverse_slots = Vec::new();
    for (idx, u) in invertible.iter().enumerate() {
        let d = u.order();
        for l in 0..=order {
            if d + l <= order {
                inverse_slots.push((idx, l));
            }
        }
    }
    let ring = PolyRing::grevlex(main_vars + inverse_slots.len());
    let mut gens = Vec::new();
    for g in generators {
        let d = g.order();
        if d > order || g.is_zero() {
            continue;
        }
        for l in 0..=(order - d) {
            gens.push(g.prolong(l).to_flat(order + 1, &ring));
        }
    }
    for (slot, (idx, l)) in inverse_slots.iter().enumerate() {
        let u = invertible[*idx].prolong(*l).to_flat(order + 1, &ring);
        let t = MPoly::var(&ring, main_vars + slot);
        let rel = u.mul(&ring, &t).sub(&ring, &MPoly::one(&ring));
        gens.push(rel);
    }
    TruncatedIdeal { nbase, order, ring, generators: gens, main_vars, basis: None }
}
