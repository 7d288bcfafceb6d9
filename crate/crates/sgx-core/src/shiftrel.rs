//! Decision procedures for the σ-Galois groups of the three building-block
//! equations over K(x), K = Q(i), with σ the shift x -> x+1.
//!
//! Everything runs on shift-orbit data: poles are grouped by translation
//! β -> β+1 into orbit classes, and the coefficients of one class at one
//! pole order form a Laurent vector indexed by integer offsets. Applying
//! Σ e_l σ^l to a function multiplies each such vector by the Laurent
//! polynomial e(T), and Laurent rings over a domain are domains, so a
//! nonzero vector can never be cancelled by a nonzero relation. That single
//! fact drives all three classifiers:
//!
//! * additive (`classify_ga`): a linear relation forces the combination to
//!   have a rational antiderivative, killing every residue vector; hence the
//!   group is full exactly when the logarithmic part is nonempty.
//! * multiplicative (`classify_gm`): an integer-exponent relation forces a
//!   logarithmic derivative (simple poles with integer residues), so any
//!   pole of order >= 2 or any non-real residue vector makes the group full;
//!   otherwise an explicit relation is assembled from finite differences.
//! * cyclic (`classify_cyclic`): Kummer degrees reduce, prime by prime, to
//!   valuation vectors mod p; all vectors vanishing mod some prime divisor
//!   of d yields an explicit d-th power witness, otherwise the group is full.
//!
//! `brute_force_relation` and `brute_force_kummer` are independent oracles:
//! they search coefficient boxes directly and exist to cross-check the
//! classifiers at desk scale.

use crate::gauss::GaussRational;
use crate::partfrac::{
    antiderivative, is_dth_power, is_log_derivative, partial_fractions, residue_denominator_lcm,
    PoleAtom,
};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Splits β into its canonical orbit representative (real part reduced into
/// [0,1)) and the integer offset with β = rep + offset.
pub fn orbit_rep(beta: &GaussRational) -> (GaussRational, BigInt) {
    let offset = beta.floor_re();
    let shift = GaussRational::new(BigRational::from_integer(offset.clone()), BigRational::zero());
    (beta - &shift, offset)
}

/// Poles grouped by translation β -> β+1: all atoms whose β's differ by a
/// rational integer share a class. `members` maps the integer offset n to
/// the per-order coefficients of the atom at β = rep + n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    pub rep: GaussRational,
    pub members: BTreeMap<BigInt, BTreeMap<u32, GaussRational>>,
}

impl OrbitClass {
    /// The Laurent vector of this class at one pole order: offset -> coeff,
    /// zero coefficients omitted.
    pub fn laurent(&self, order: u32) -> LaurentVec {
        let mut out = LaurentVec::default();
        for (offset, orders) in &self.members {
            if let Some(c) = orders.get(&order) {
                out.insert_nonzero(offset.clone(), c.clone());
            }
        }
        out
    }

    /// All pole orders appearing in this class, ascending.
    pub fn orders(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.members.values().flat_map(|m| m.keys().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A finitely supported vector indexed by integer offsets; the coefficient
/// data of one orbit class at one pole order. The empty map is zero; no
/// stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentVec {
    pub coeffs: BTreeMap<BigInt, GaussRational>,
}

impl LaurentVec {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn insert_nonzero(&mut self, offset: BigInt, c: GaussRational) {
        if !c.is_zero() {
            self.coeffs.insert(offset, c);
        }
    }

    /// The imaginary-part vector.
    pub fn imag_part(&self) -> LaurentVec {
        let mut out = LaurentVec::default();
        for (k, c) in &self.coeffs {
            let im = GaussRational::new(c.im().clone(), BigRational::zero());
            out.insert_nonzero(k.clone(), im);
        }
        out
    }
}

/// Partitions atoms into orbit classes, deterministically ordered by
/// representative (norm, then lexicographic).
pub fn orbit_decompose(atoms: &[PoleAtom]) -> Vec<OrbitClass> {
    let mut classes: BTreeMap<GaussRational, OrbitClass> = BTreeMap::new();
    for atom in atoms {
        let (rep, offset) = orbit_rep(&atom.beta);
        let class = classes
            .entry(rep.clone())
            .or_insert_with(|| OrbitClass { rep, members: BTreeMap::new() });
        class
            .members
            .entry(offset)
            .or_default()
            .insert(atom.order, atom.coeff.clone());
    }
    classes.into_values().collect()
}

/// Verdict for the additive block δ(y) = a: either the full prolongation of
/// the additive group, or the trivial group with an exact antiderivative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaVerdict {
    Full,
    Trivial(RatFunc),
}

/// Verdict for the multiplicative block δ(y) = a·y: either the full
/// prolongation of the multiplicative group, or an explicit integer relation
/// Σ e_l σ^l(a) = δ(witness)/witness. The relation never names the proper
/// subgroup it cuts out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GmVerdict {
    Full,
    NotFull { exponents: Vec<BigInt>, witness: RatFunc },
}

/// Verdict for the cyclic block y^d = b: either every prolongation level has
/// full Kummer degree d, or some prime p | d admits a p-th power witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicVerdict {
    Full,
    NotFull { prime: u32, witness: RatFunc },
}

/// Decides the σ-Galois group of δ(y) = a (y a primitive of a).
///
/// Full exactly when the logarithmic part of a is nonempty: a linear
/// relation Σ c_l σ^l(y) ∈ K(x) would force, per orbit class, the residue
/// cancellation c(T)·A_c(T) = 0, which in a Laurent domain kills either the
/// relation or every residue. With empty logarithmic part the antiderivative
/// is rational and the group is trivial.
pub fn classify_ga(a: &RatFunc) -> Result<GaVerdict> {
    let pf = partial_fractions(a)?;
    if pf.atoms.iter().any(|atom| atom.order == 1) {
        return Ok(GaVerdict::Full);
    }
    let g = antiderivative(a)?.expect("empty logarithmic part has an antiderivative");
    Ok(GaVerdict::Trivial(g))
}

/// Coefficients of (T-1)^k, lowest power first.
fn finite_difference_coeffs(k: u32) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c;
        }
        coeffs = next;
    }
    coeffs
}

/// Σ e_l σ^l(a) for an integer coefficient vector.
pub fn shift_combination(a: &RatFunc, exponents: &[BigInt]) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (l, e) in exponents.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let c = GaussRational::new(BigRational::from_integer(e.clone()), BigRational::zero());
        acc = acc.add(&a.sigma(l).scale(&c));
    }
    acc
}

/// Decides whether a nonzero integer vector e exists with
/// Σ e_l σ^l(a) = δ(f)/f for some f in K(x)*.
///
/// Complete for supported inputs: (1) any pole of order >= 2 survives every
/// relation (per-class per-order Laurent cancellation in a domain), so the
/// group is full; (2) likewise any residue with nonzero imaginary part;
/// (3) otherwise all residues are rational and an explicit relation exists:
/// e = N·(T-1)^(deg P + 1) annihilates the polynomial part P by finite
/// differences (exponent 0 when P = 0), with N clearing the residue
/// denominators of the combined function. The witness comes out of the
/// logarithmic-derivative test.
pub fn classify_gm(a: &RatFunc) -> Result<GmVerdict> {
    let pf = partial_fractions(a)?;
    if pf.atoms.iter().any(|atom| atom.order >= 2) {
        return Ok(GmVerdict::Full);
    }
    if pf.atoms.iter().any(|atom| !atom.coeff.is_real()) {
        return Ok(GmVerdict::Full);
    }
    // All poles simple with rational residues: assemble the relation.
    let k = match pf.poly_part.degree() {
        None => 0,
        Some(d) => d as u32 + 1,
    };
    let base = finite_difference_coeffs(k);
    let combined = shift_combination(a, &base);
    let residues: Vec<GaussRational> = partial_fractions(&combined)?
        .logarithmic_part()
        .iter()
        .map(|atom| atom.coeff.clone())
        .collect();
    let n = residue_denominator_lcm(&residues);
    let exponents: Vec<BigInt> = base.iter().map(|c| c * &n).collect();
    let scaled = combined.scale(&GaussRational::new(
        BigRational::from_integer(n),
        BigRational::zero(),
    ));
    match is_log_derivative(&scaled)? {
        Some(witness) => Ok(GmVerdict::NotFull { exponents, witness }),
        None => Err(Error::ClassifierMismatch(
            "constructed multiplicative relation failed the log-derivative test".into(),
        )),
    }
}

pub(crate) fn prime_factors(mut d: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            out.push(p);
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Per-orbit-class valuation vectors of b: zeros of b contribute +mult at
/// their offset, poles -mult. Classes keyed by canonical representative.
fn valuation_classes(b: &RatFunc) -> Result<BTreeMap<GaussRational, BTreeMap<BigInt, BigInt>>> {
    let mut classes: BTreeMap<GaussRational, BTreeMap<BigInt, BigInt>> = BTreeMap::new();
    for (poly, sign) in [(b.num(), 1i64), (b.den(), -1i64)] {
        if poly.degree() == Some(0) {
            continue;
        }
        let (roots, residual) = crate::poly::gauss_roots(poly)?;
        if residual.degree() != Some(0) {
            return Err(Error::RequiresExtension);
        }
        for (root, mult) in roots {
            let beta = -&root;
            let (rep, offset) = orbit_rep(&beta);
            *classes.entry(rep).or_default().entry(offset).or_insert_with(BigInt::zero) +=
                BigInt::from(sign * mult as i64);
        }
    }
    Ok(classes)
}

/// Decides the σ-Galois group of the cyclic block y^d = b, d >= 2.
///
/// Full iff for every prime p | d some valuation vector is nonzero mod p:
/// a Kummer dependence among the shifts σ^j(b) reduces, prime power by prime
/// power, to a Laurent cancellation mod p (a Laurent polynomial with a unit
/// coefficient is a non-zero-divisor mod p^m), forcing every vector to
/// vanish mod p, which is exactly the case where b is a constant times a
/// p-th power, reported with its witness.
pub fn classify_cyclic(b: &RatFunc, d: u32) -> Result<CyclicVerdict> {
    if d < 2 {
        return Err(Error::InvalidOrder);
    }
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let classes = valuation_classes(b)?;
    for p in prime_factors(d) {
        let bp = BigInt::from(p);
        let all_zero = classes
            .values()
            .all(|v| v.values().all(|m| (m % &bp).is_zero()));
        if all_zero {
            let witness = is_dth_power(b, p)?.ok_or_else(|| {
                Error::ClassifierMismatch(
                    "valuations vanish mod p but the p-th power test failed".into(),
                )
            })?;
            return Ok(CyclicVerdict::NotFull { prime: p, witness });
        }
    }
    Ok(CyclicVerdict::Full)
}

/// Search modes for the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationMode {
    Additive,
    Multiplicative,
}

/// A relation found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// Coefficients c with Σ c_l σ^l(a) free of logarithmic part.
    Additive(Vec<GaussRational>),
    /// Integer exponents e with Σ e_l σ^l(a) = δ(witness)/witness.
    Multiplicative { exponents: Vec<BigInt>, witness: RatFunc },
}

/// One dense coefficient vector of a class at one order, with an optional
/// scaled-integer view: coefficients as (re, im) numerators over a common
/// denominator, when everything fits comfortably in machine integers.
struct DenseOrderVec {
    order: u32,
    exact: Vec<GaussRational>,
    fast: Option<(i64, Vec<i64>, Vec<i64>)>,
}

/// Dense per-class coefficient tables with small-integer offsets, the
/// working form of the enumeration loops.
struct DenseClassData {
    by_order: Vec<DenseOrderVec>,
}

/// Guards for the integer view: numerators must stay far from overflow
/// once multiplied by box exponents and summed over the vector length.
const FAST_NUMERATOR_BOUND: i64 = 1 << 30;
const FAST_DENOMINATOR_BOUND: i64 = 1 << 20;

fn integer_view(vec: &[GaussRational]) -> Option<(i64, Vec<i64>, Vec<i64>)> {
    let mut denom = BigInt::one();
    for c in vec {
        denom = denom.lcm(c.re().denom()).lcm(c.im().denom());
    }
    let scale: i64 = denom.clone().try_into().ok()?;
    if scale > FAST_DENOMINATOR_BOUND {
        return None;
    }
    let mut res = Vec::with_capacity(vec.len());
    let mut ims = Vec::with_capacity(vec.len());
    for c in vec {
        let re: i64 = (c.re() * BigRational::from_integer(denom.clone()))
            .to_integer()
            .try_into()
            .ok()?;
        let im: i64 = (c.im() * BigRational::from_integer(denom.clone()))
            .to_integer()
            .try_into()
            .ok()?;
        if re.abs() > FAST_NUMERATOR_BOUND || im.abs() > FAST_NUMERATOR_BOUND {
            return None;
        }
        res.push(re);
        ims.push(im);
    }
    Some((scale, res, ims))
}

fn dense_classes(atoms: &[PoleAtom]) -> Result<Vec<DenseClassData>> {
    let classes = orbit_decompose(atoms);
    let mut out = Vec::new();
    for class in classes {
        let min = class.members.keys().next().expect("nonempty class").clone();
        let span: usize = (class.members.keys().last().unwrap() - &min)
            .try_into()
            .map_err(|_| Error::InvalidParameter("pole orbit spread too large".into()))?;
        let mut by_order: BTreeMap<u32, Vec<GaussRational>> = BTreeMap::new();
        for (offset, orders) in &class.members {
            let rel: usize = (offset - &min).try_into().expect("span bounded");
            for (order, coeff) in orders {
                by_order
                    .entry(*order)
                    .or_insert_with(|| vec![GaussRational::zero(); span + 1])[rel] = coeff.clone();
            }
        }
        out.push(DenseClassData {
            by_order: by_order
                .into_iter()
                .map(|(order, exact)| {
                    let fast = integer_view(&exact);
                    DenseOrderVec { order, exact, fast }
                })
                .collect(),
        });
    }
    Ok(out)
}

fn int_scale(c: &GaussRational, e: i64) -> GaussRational {
    c * &GaussRational::from_int(e)
}

/// True iff e(T)·vec has a nonzero coefficient (early exit on the first).
fn product_nonzero(e: &[i64], vec: &[GaussRational]) -> bool {
    if vec.len() == 1 {
        // Product coefficients are e_l·v with no overlap.
        return !vec[0].is_zero() && e.iter().any(|&x| x != 0);
    }
    for k in 0..vec.len() + e.len() - 1 {
        let mut acc = GaussRational::zero();
        for (l, &el) in e.iter().enumerate() {
            if el != 0 && k >= l && k - l < vec.len() && !vec[k - l].is_zero() {
                acc = &acc + &int_scale(&vec[k - l], el);
            }
        }
        if !acc.is_zero() {
            return true;
        }
    }
    false
}

/// True iff every coefficient of e(T)·vec is a rational integer.
fn product_all_integral(e: &[i64], vec: &[GaussRational]) -> bool {
    for k in 0..vec.len() + e.len() - 1 {
        let mut acc = GaussRational::zero();
        for (l, &el) in e.iter().enumerate() {
            if el != 0 && k >= l && k - l < vec.len() && !vec[k - l].is_zero() {
                acc = &acc + &int_scale(&vec[k - l], el);
            }
        }
        if !acc.is_integer() {
            return false;
        }
    }
    true
}

/// Exhaustive relation search, the independent oracle for the classifiers.
///
/// Additive mode solves the exact linear system on residue coordinates over
/// Q(i), a spanning-set computation, so `bound` is unused there.
/// Multiplicative mode scans the integer box {-bound..bound}^(len+1) in
/// lexicographic order, checking the logarithmic-derivative conditions on
/// orbit-class data.
pub fn brute_force_relation(
    a: &RatFunc,
    mode: RelationMode,
    bound: i64,
    len: usize,
) -> Result<Option<Relation>> {
    match mode {
        RelationMode::Additive => brute_force_additive(a, len),
        RelationMode::Multiplicative => brute_force_multiplicative(a, bound, len),
    }
}

fn brute_force_additive(a: &RatFunc, len: usize) -> Result<Option<Relation>> {
    let pf = partial_fractions(a)?;
    // Rows: residue coordinates (class rep, offset) reachable by shifts;
    // columns l = 0..=len. σ^l moves an atom's offset up by l.
    let mut residue_at: BTreeMap<(GaussRational, BigInt), GaussRational> = BTreeMap::new();
    for atom in pf.logarithmic_part() {
        let (rep, offset) = orbit_rep(&atom.beta);
        residue_at.insert((rep, offset), atom.coeff.clone());
    }
    let mut row_keys: Vec<(GaussRational, BigInt)> = Vec::new();
    for (rep, offset) in residue_at.keys() {
        for l in 0..=len {
            let key = (rep.clone(), offset + BigInt::from(l as i64));
            if !row_keys.contains(&key) {
                row_keys.push(key);
            }
        }
    }
    row_keys.sort();
    let cols = len + 1;
    let mut matrix: Vec<Vec<GaussRational>> = row_keys
        .iter()
        .map(|(rep, offset)| {
            (0..cols)
                .map(|l| {
                    residue_at
                        .get(&(rep.clone(), offset - BigInt::from(l as i64)))
                        .cloned()
                        .unwrap_or_else(GaussRational::zero)
                })
                .collect()
        })
        .collect();

    // Gauss-Jordan elimination; record pivot positions.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, pr);
        let inv = matrix[row][col].inverse()?;
        for c in col..cols {
            matrix[row][c] = &matrix[row][c] * &inv;
        }
        for r in 0..matrix.len() {
            if r != row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for c in col..cols {
                    let t = &matrix[row][c] * &factor;
                    matrix[r][c] = &matrix[r][c] - &t;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == matrix.len() {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let Some(free_col) = (0..cols).find(|c| !pivot_cols.contains(c)) else {
        return Ok(None);
    };
    let mut c = vec![GaussRational::zero(); cols];
    c[free_col] = GaussRational::one();
    for &(pr, pc) in &pivots {
        c[pc] = -&matrix[pr][free_col];
    }
    debug_assert!({
        let mut acc = RatFunc::zero();
        for (l, cl) in c.iter().enumerate() {
            acc = acc.add(&a.sigma(l).scale(cl));
        }
        crate::partfrac::logarithmic_part(&acc)?.is_empty()
    });
    Ok(Some(Relation::Additive(c)))
}

fn brute_force_multiplicative(a: &RatFunc, bound: i64, len: usize) -> Result<Option<Relation>> {
    let pf = partial_fractions(a)?;
    let classes = dense_classes(&pf.atoms)?;
    let poly_shifts: Vec<Poly> = (0..=len)
        .map(|l| pf.poly_part.shift(&GaussRational::from_int(l as i64)))
        .collect();
    let poly_zero = pf.poly_part.is_zero();

    let cols = len + 1;
    let mut e = vec![-bound; cols];
    loop {
        if e.iter().any(|&x| x != 0) && relation_holds(&e, &classes, &poly_shifts, poly_zero) {
            let exponents: Vec<BigInt> = e.iter().map(|&x| BigInt::from(x)).collect();
            let combined = shift_combination(a, &exponents);
            if let Some(witness) = is_log_derivative(&combined)? {
                return Ok(Some(Relation::Multiplicative { exponents, witness }));
            }
        }
        // Odometer, e_0 most significant, each digit -bound..=bound.
        let mut idx = cols;
        loop {
            if idx == 0 {
                return Ok(None);
            }
            idx -= 1;
            if e[idx] < bound {
                e[idx] += 1;
                for x in e.iter_mut().skip(idx + 1) {
                    *x = -bound;
                }
                break;
            }
        }
    }
}

/// Integer view of `product_nonzero`.
fn product_nonzero_fast(e: &[i64], res: &[i64], ims: &[i64]) -> bool {
    for k in 0..res.len() + e.len() - 1 {
        let mut acc_re = 0i64;
        let mut acc_im = 0i64;
        for (l, &el) in e.iter().enumerate() {
            if el != 0 && k >= l && k - l < res.len() {
                acc_re += el * res[k - l];
                acc_im += el * ims[k - l];
            }
        }
        if acc_re != 0 || acc_im != 0 {
            return true;
        }
    }
    false
}

/// Integer view of `product_all_integral`: a coefficient is a rational
/// integer when its imaginary numerator vanishes and its real numerator is
/// divisible by the common denominator.
fn product_all_integral_fast(e: &[i64], scale: i64, res: &[i64], ims: &[i64]) -> bool {
    for k in 0..res.len() + e.len() - 1 {
        let mut acc_re = 0i64;
        let mut acc_im = 0i64;
        for (l, &el) in e.iter().enumerate() {
            if el != 0 && k >= l && k - l < res.len() {
                acc_re += el * res[k - l];
                acc_im += el * ims[k - l];
            }
        }
        if acc_im != 0 || acc_re % scale != 0 {
            return false;
        }
    }
    true
}

fn relation_holds(
    e: &[i64],
    classes: &[DenseClassData],
    poly_shifts: &[Poly],
    poly_zero: bool,
) -> bool {
    for class in classes {
        for vec in &class.by_order {
            if vec.order < 2 {
                continue;
            }
            let nonzero = match &vec.fast {
                Some((_, res, ims)) => product_nonzero_fast(e, res, ims),
                None => product_nonzero(e, &vec.exact),
            };
            if nonzero {
                return false;
            }
        }
    }
    for class in classes {
        for vec in &class.by_order {
            if vec.order != 1 {
                continue;
            }
            let integral = match &vec.fast {
                Some((scale, res, ims)) => product_all_integral_fast(e, *scale, res, ims),
                None => product_all_integral(e, &vec.exact),
            };
            if !integral {
                return false;
            }
        }
    }
    if !poly_zero {
        let mut acc = Poly::zero();
        for (l, &el) in e.iter().enumerate() {
            if el != 0 {
                acc = acc.add(&poly_shifts[l].scale(&GaussRational::from_int(el)));
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Independent Kummer oracle: searches, for each prime p | d, the box
/// k ∈ {0..p-1}^(len+1) for a product Π σ^j(b)^(k_j) that is a constant
/// times a p-th power. Returns the first (p, k) found.
pub fn brute_force_kummer(b: &RatFunc, d: u32, len: usize) -> Result<Option<(u32, Vec<u32>)>> {
    if d < 2 {
        return Err(Error::InvalidOrder);
    }
    let shifts: Vec<RatFunc> = (0..=len).map(|j| b.sigma(j)).collect();
    for p in prime_factors(d) {
        let cols = len + 1;
        let mut k = vec![0u32; cols];
        'box_scan: loop {
            let mut idx = cols;
            loop {
                if idx == 0 {
                    break 'box_scan;
                }
                idx -= 1;
                if k[idx] + 1 < p {
                    k[idx] += 1;
                    for x in k.iter_mut().skip(idx + 1) {
                        *x = 0;
                    }
                    break;
                }
            }
            // Accumulate numerator and denominator separately; one final
            // reduction is cheaper than reducing per factor.
            let mut num = Poly::one();
            let mut den = Poly::one();
            for (j, &kj) in k.iter().enumerate() {
                for _ in 0..kj {
                    num = num.mul(shifts[j].num());
                    den = den.mul(shifts[j].den());
                }
            }
            let product = RatFunc::new(num, den).expect("nonzero denominator");
            if is_dth_power(&product, p)?.is_some() {
                return Ok(Some((p, k.clone())));
            }
        }
    }
    Ok(None)
}
