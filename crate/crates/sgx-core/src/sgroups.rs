//! σ-closed subgroups of GL_n: constructors for the families this toolkit
//! reasons about, the σ-reduced / σ-connected predicates (decided per
//! family, never guessed for custom specs), truncated computation of
//! generated subgroups by Groebner elimination, and the worked GL_2 example
//! with its two witness points.

use crate::diffpoly::{truncation, SigmaPolynomial, SigmaVar, TruncatedIdeal};
use crate::gauss::GaussRational;
use crate::groebner::{self, Budget};
use crate::mpoly::{MPoly, PolyRing};
use crate::{Error, Result};
use std::fmt;

/// Names of the algebraic groups the constructors know.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupName {
    Ga,
    Gm,
    SLn(usize),
    GLn(usize),
    Mu(u32),
    Cyclic(u32),
    Torus(usize),
    UnipotentUpper(usize),
}

impl GroupName {
    /// The ambient GL_n size of the standard embedding.
    pub fn gl_size(&self) -> usize {
        match self {
            GroupName::Ga => 2,
            GroupName::Gm => 1,
            GroupName::SLn(n) | GroupName::GLn(n) | GroupName::Torus(n)
            | GroupName::UnipotentUpper(n) => *n,
            GroupName::Mu(_) | GroupName::Cyclic(_) => 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GroupName::Mu(_) | GroupName::Cyclic(_))
    }

    /// True for the groups that are trivial (a single point).
    pub fn is_trivial(&self) -> bool {
        matches!(
            self,
            GroupName::Mu(1) | GroupName::Cyclic(1) | GroupName::SLn(1)
                | GroupName::UnipotentUpper(1)
        )
    }

    /// True when the group is a nontrivial unipotent group.
    pub fn is_nontrivial_unipotent(&self) -> bool {
        matches!(self, GroupName::Ga) || matches!(self, GroupName::UnipotentUpper(n) if *n >= 2)
    }

    /// True when the group coincides with the multiplicative group.
    pub fn is_gm_like(&self) -> bool {
        matches!(self, GroupName::Gm | GroupName::GLn(1) | GroupName::Torus(1))
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            GroupName::Ga | GroupName::Gm => true,
            GroupName::SLn(n) | GroupName::GLn(n) | GroupName::Torus(n)
            | GroupName::UnipotentUpper(n) => *n >= 1,
            GroupName::Mu(d) | GroupName::Cyclic(d) => *d >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("degenerate group name {self}")))
        }
    }

    /// Parses the compact labels used by the command line and spec files:
    /// ga, gm, sl2, gl3, mu6, cyclic4, torus2, u3.
    pub fn parse(label: &str) -> Result<GroupName> {
        let bad = || Error::InvalidParameter(format!("unknown group name '{label}'"));
        let name = match label {
            "ga" => GroupName::Ga,
            "gm" => GroupName::Gm,
            _ => {
                let (prefix, digits) = label.split_at(
                    label.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?,
                );
                let k: usize = digits.parse().map_err(|_| bad())?;
                match prefix {
                    "sl" => GroupName::SLn(k),
                    "gl" => GroupName::GLn(k),
                    "mu" => GroupName::Mu(k as u32),
                    "cyclic" => GroupName::Cyclic(k as u32),
                    "torus" => GroupName::Torus(k),
                    "u" => GroupName::UnipotentUpper(k),
                    _ => return Err(bad()),
                }
            }
        };
        name.validate()?;
        Ok(name)
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Ga => write!(f, "ga"),
            GroupName::Gm => write!(f, "gm"),
            GroupName::SLn(n) => write!(f, "sl{n}"),
            GroupName::GLn(n) => write!(f, "gl{n}"),
            GroupName::Mu(d) => write!(f, "mu{d}"),
            GroupName::Cyclic(d) => write!(f, "cyclic{d}"),
            GroupName::Torus(r) => write!(f, "torus{r}"),
            GroupName::UnipotentUpper(n) => write!(f, "u{n}"),
        }
    }
}

/// The operator L(y) = σ^n(y) + λ_{n-1}σ^{n-1}(y) + ... + λ_0·y cutting out
/// a subgroup of the additive group. `lambda` lists λ_0..λ_{n-1}; the order
/// n is its length (order 0 means L(y) = y, the trivial subgroup).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSigmaOperator {
    pub lambda: Vec<GaussRational>,
}

impl LinearSigmaOperator {
    pub fn new(lambda: Vec<GaussRational>) -> Self {
        LinearSigmaOperator { lambda }
    }

    pub fn order(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda0(&self) -> GaussRational {
        self.lambda.first().cloned().unwrap_or_else(GaussRational::one)
    }

    /// L applied to the σ-variable σ^0(y_base) in an nbase-variable ring.
    pub fn apply(&self, nbase: usize, base: usize) -> SigmaPolynomial {
        let mut acc = SigmaPolynomial::var(nbase, SigmaVar { base, shift: self.order() });
        for (l, coeff) in self.lambda.iter().enumerate() {
            let term = SigmaPolynomial::var(nbase, SigmaVar { base, shift: l }).scale(coeff);
            acc = acc.add(&term);
        }
        acc
    }
}

/// Family tags: predicates are decided only for tagged families. Custom
/// specs are never validated as groups and answer `Unsupported`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyTag {
    FullAlgebraic(GroupName),
    ConstantPoints(GroupName),
    GaLinearSubgroup(LinearSigmaOperator),
    Custom,
}

/// A σ-closed subgroup of GL_n given by σ-polynomial equations in the
/// matrix entries (with 1/det adjoined at truncation time).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaGroupSpec {
    pub n: usize,
    pub defining: Vec<SigmaPolynomial>,
    pub family: FamilyTag,
}

/// Tri-state predicate result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Unsupported,
}

/// σ^shift of the entry g_{row,col} (0-indexed) in the n×n entry ring.
pub fn entry(n: usize, row: usize, col: usize, shift: usize) -> SigmaPolynomial {
    SigmaPolynomial::var(n * n, SigmaVar { base: row * n + col, shift })
}

fn constant(n: usize, k: i64) -> SigmaPolynomial {
    SigmaPolynomial::constant(n * n, GaussRational::from_int(k))
}

/// Determinant of the level-0 entry matrix as a σ-polynomial, by Laplace
/// expansion along the first row.
pub fn det_polynomial(n: usize) -> SigmaPolynomial {
    fn minor_det(n: usize, rows: &[usize], cols: &[usize]) -> SigmaPolynomial {
        if rows.len() == 1 {
            return entry(n, rows[0], cols[0], 0);
        }
        let mut acc = SigmaPolynomial::zero(n * n);
        for (j, &col) in cols.iter().enumerate() {
            let mut sub_cols = cols.to_vec();
            sub_cols.remove(j);
            let sub = minor_det(n, &rows[1..], &sub_cols);
            let term = entry(n, rows[0], col, 0).mul(&sub);
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    let all: Vec<usize> = (0..n).collect();
    minor_det(n, &all, &all)
}

/// Purely algebraic equations of the named group in its standard GL_n
/// embedding (no σ-constraints).
fn algebraic_equations(name: GroupName) -> Result<Vec<SigmaPolynomial>> {
    name.validate()?;
    let n = name.gl_size();
    let eqs = match name {
        GroupName::Gm | GroupName::GLn(_) => Vec::new(),
        GroupName::Mu(d) | GroupName::Cyclic(d) => {
            vec![entry(1, 0, 0, 0).pow(d).sub(&constant(1, 1))]
        }
        GroupName::SLn(_) => vec![det_polynomial(n).sub(&constant(n, 1))],
        GroupName::Torus(_) => {
            let mut eqs = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    if j != k {
                        eqs.push(entry(n, j, k, 0));
                    }
                }
            }
            eqs
        }
        GroupName::Ga => vec![
            entry(2, 0, 0, 0).sub(&constant(2, 1)),
            entry(2, 1, 1, 0).sub(&constant(2, 1)),
            entry(2, 1, 0, 0),
        ],
        GroupName::UnipotentUpper(_) => {
            let mut eqs = Vec::new();
            for j in 0..n {
                eqs.push(entry(n, j, j, 0).sub(&constant(n, 1)));
                for k in 0..j {
                    eqs.push(entry(n, j, k, 0));
                }
            }
            eqs
        }
    };
    Ok(eqs)
}

/// The full prolongation of a named algebraic group: its algebraic
/// equations only, with no σ-constraints.
pub fn full_algebraic(name: GroupName) -> Result<SigmaGroupSpec> {
    Ok(SigmaGroupSpec {
        n: name.gl_size(),
        defining: algebraic_equations(name)?,
        family: FamilyTag::FullAlgebraic(name),
    })
}

/// The constant points of a named group: its algebraic equations plus
/// σ(g_jk) = g_jk for every entry.
pub fn constant_points(name: GroupName) -> Result<SigmaGroupSpec> {
    let mut defining = algebraic_equations(name)?;
    let n = name.gl_size();
    for row in 0..n {
        for col in 0..n {
            defining.push(entry(n, row, col, 1).sub(&entry(n, row, col, 0)));
        }
    }
    Ok(SigmaGroupSpec { n, defining, family: FamilyTag::ConstantPoints(name) })
}

/// The subgroup of the additive group cut out by L, realized in GL_2 as
/// unipotent matrices (1 u; 0 1) with L(u) = 0.
pub fn ga_linear_subgroup(op: &LinearSigmaOperator) -> SigmaGroupSpec {
    let mut defining = algebraic_equations(GroupName::Ga).expect("Ga is valid");
    defining.push(op.apply(4, 1)); // u is the (0,1) entry, base index 1
    SigmaGroupSpec { n: 2, defining, family: FamilyTag::GaLinearSubgroup(op.clone()) }
}

/// The full root subgroup E_{row,col} of GL_n: identity everywhere except
/// one free off-diagonal entry. Tagged Custom (it is used as raw material
/// for generation computations, not for the predicate tables).
pub fn root_subgroup(n: usize, row: usize, col: usize) -> Result<SigmaGroupSpec> {
    if row == col || row >= n || col >= n {
        return Err(Error::InvalidParameter(format!(
            "root subgroup position ({row},{col}) invalid in GL_{n}"
        )));
    }
    let mut defining = Vec::new();
    for j in 0..n {
        for k in 0..n {
            if j == k {
                defining.push(entry(n, j, k, 0).sub(&constant(n, 1)));
            } else if (j, k) != (row, col) {
                defining.push(entry(n, j, k, 0));
            }
        }
    }
    Ok(SigmaGroupSpec { n, defining, family: FamilyTag::Custom })
}

impl SigmaGroupSpec {
    /// The order-i truncated ideal of the defining σ-ideal, with det
    /// inverted.
    pub fn truncation(&self, order: usize) -> TruncatedIdeal {
        let det = det_polynomial(self.n);
        let mut gens = self.defining.clone();
        if gens.is_empty() {
            gens.push(SigmaPolynomial::zero(self.n * self.n));
        }
        truncation(&gens, order, &[det])
    }

    /// Whether σ acts injectively on the coordinate ring. Decided per
    /// family: full prolongations and constant points always qualify; the
    /// additive subgroup G_L qualifies exactly when λ_0 is nonzero.
    pub fn is_sigma_reduced(&self) -> Decision {
        match &self.family {
            FamilyTag::FullAlgebraic(_) | FamilyTag::ConstantPoints(_) => Decision::Yes,
            FamilyTag::GaLinearSubgroup(op) => {
                if op.order() == 0 || !op.lambda0().is_zero() {
                    Decision::Yes
                } else {
                    Decision::No
                }
            }
            FamilyTag::Custom => Decision::Unsupported,
        }
    }

    /// Whether the group of σ-connected components is trivial. Full
    /// prolongations are always σ-connected (even of finite groups), G_L
    /// always is, constant points of connected groups are, and constant
    /// points of a nontrivial finite group never are.
    pub fn is_sigma_connected(&self) -> Decision {
        match &self.family {
            FamilyTag::FullAlgebraic(_) | FamilyTag::GaLinearSubgroup(_) => Decision::Yes,
            FamilyTag::ConstantPoints(name) => {
                if name.is_finite() && !name.is_trivial() {
                    Decision::No
                } else {
                    Decision::Yes
                }
            }
            FamilyTag::Custom => Decision::Unsupported,
        }
    }
}

fn matrix_mul(ring: &PolyRing, a: &[Vec<MPoly>], b: &[Vec<MPoly>]) -> Vec<Vec<MPoly>> {
    let n = a.len();
    let mut out = vec![vec![MPoly::zero(); n]; n];
    for j in 0..n {
        for k in 0..n {
            let mut acc = MPoly::zero();
            for t in 0..n {
                acc = acc.add(ring, &a[j][t].mul(ring, &b[t][k]));
            }
            out[j][k] = acc;
        }
    }
    out
}

/// Embeds a σ-polynomial over n² entry variables into the elimination ring
/// via an index map (base, shift) -> flat variable.
fn embed(
    sp: &SigmaPolynomial,
    ring: &PolyRing,
    map: &dyn Fn(usize, usize) -> usize,
) -> MPoly {
    let mut terms = Vec::new();
    for (vars, coeff) in sp.iter_terms() {
        let mut m = vec![0u16; ring.nvars];
        for (v, e) in vars {
            m[map(v.base, v.shift)] += e;
        }
        terms.push((m.into_boxed_slice(), coeff.clone()));
    }
    MPoly::from_terms(ring, terms)
}

/// The order-i truncated ideal of the closure of the image of the
/// word_length-fold alternating multiplication H1 × H2 × H1 × ... -> GL_n,
/// computed by Groebner elimination of the factor coordinates.
///
/// Increasing the word length shrinks the ideal monotonically; stabilization
/// at small lengths is evidence of having reached the generated subgroup,
/// not a proof.
pub fn generated_subgroup_truncation(
    h1: &SigmaGroupSpec,
    h2: &SigmaGroupSpec,
    word_length: usize,
    order: usize,
    budget: &Budget,
) -> Result<TruncatedIdeal> {
    if h1.n != h2.n {
        return Err(Error::InvalidParameter(
            "generated subgroup requires one ambient GL_n".into(),
        ));
    }
    if word_length == 0 {
        return Err(Error::InvalidParameter("word length must be positive".into()));
    }
    let n = h1.n;
    let sq = n * n;
    let levels = order + 1;
    let n_target = sq * levels;
    let factor_block = sq * levels;
    let nvars = n_target + word_length * factor_block + word_length * levels;
    let ring = PolyRing::elimination(nvars, n_target);

    let target_var = |level: usize, base: usize| level * sq + base;
    let factor_var =
        move |t: usize, level: usize, base: usize| n_target + t * factor_block + level * sq + base;
    let det_inverse_var =
        move |t: usize, level: usize| n_target + word_length * factor_block + t * levels + level;

    let mut gens: Vec<MPoly> = Vec::new();
    let det = det_polynomial(n);
    for t in 0..word_length {
        let spec = if t % 2 == 0 { h1 } else { h2 };
        for g in &spec.defining {
            let d = g.order();
            if d > order {
                continue;
            }
            for l in 0..=(order - d) {
                gens.push(embed(&g.prolong(l), &ring, &|base, shift| factor_var(t, shift, base)));
            }
        }
        for l in 0..levels {
            let det_l = embed(&det.prolong(l), &ring, &|base, shift| factor_var(t, shift, base));
            let z = MPoly::var(&ring, det_inverse_var(t, l));
            gens.push(det_l.mul(&ring, &z).sub(&ring, &MPoly::one(&ring)));
        }
    }
    // Product relations g^(l) = Π_t M_t^(l), levelwise.
    for l in 0..levels {
        let mut product: Option<Vec<Vec<MPoly>>> = None;
        for t in 0..word_length {
            let m: Vec<Vec<MPoly>> = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| MPoly::var(&ring, factor_var(t, l, j * n + k)))
                        .collect()
                })
                .collect();
            product = Some(match product {
                None => m,
                Some(p) => matrix_mul(&ring, &p, &m),
            });
        }
        let product = product.expect("word length positive");
        for j in 0..n {
            for k in 0..n {
                let g = MPoly::var(&ring, target_var(l, j * n + k));
                gens.push(g.sub(&ring, &product[j][k]));
            }
        }
    }

    let gb = groebner::groebner_basis(&ring, &gens, budget)?;
    let target_ring = PolyRing::grevlex(n_target);
    let map: Vec<Option<usize>> = (0..nvars)
        .map(|v| if v < n_target { Some(v) } else { None })
        .collect();
    let kept: Vec<MPoly> = gb
        .iter()
        .filter(|p| p.supported_below(n_target))
        .map(|p| p.reindex(&target_ring, &map))
        .collect();
    Ok(TruncatedIdeal::from_flat(sq, order, target_ring, kept))
}

/// The worked GL_2 example: the group cut out by the five equations below,
/// whose group of σ-connected components is the σ-étale order-2 group. The
/// indicator a·σ(a) + b·σ(b) separates its two components.
pub struct Gl2Fixture {
    pub spec: SigmaGroupSpec,
    pub indicator: SigmaPolynomial,
}

/// A point of a spec over the σ-algebra S = Q(i)^width, with σ acting by a
/// coordinate permutation: `σ(s)_j = s_{perm[j]}`.
#[derive(Debug, Clone)]
pub struct SPoint {
    pub width: usize,
    pub perm: Vec<usize>,
    /// `entries[base]` is the S-element assigned to g_{base}.
    pub entries: Vec<Vec<GaussRational>>,
}

impl SPoint {
    /// The value of σ^shift(entry), componentwise.
    fn value(&self, base: usize, shift: usize) -> Vec<GaussRational> {
        let mut v = self.entries[base].clone();
        for _ in 0..shift {
            v = (0..self.width).map(|j| v[self.perm[j]].clone()).collect();
        }
        v
    }

    /// Evaluates a σ-polynomial at this point, in S.
    pub fn eval(&self, p: &SigmaPolynomial) -> Vec<GaussRational> {
        let mut acc = vec![GaussRational::zero(); self.width];
        for (vars, coeff) in p.iter_terms() {
            let mut term = vec![coeff.clone(); self.width];
            for (v, e) in vars {
                let val = self.value(v.base, v.shift);
                for j in 0..self.width {
                    term[j] = &term[j] * &val[j].pow(e as u32);
                }
            }
            for j in 0..self.width {
                acc[j] = &acc[j] + &term[j];
            }
        }
        acc
    }

    pub fn is_member_of(&self, spec: &SigmaGroupSpec) -> bool {
        spec.defining
            .iter()
            .all(|eq| self.eval(eq).iter().all(|c| c.is_zero()))
    }
}

/// Constructs the GL_2 example: writing g = (a b; c d), the equations say
/// σ(g)·gᵀ is a central constant square root of the identity.
pub fn gl2_fixture() -> Gl2Fixture {
    let n = 2;
    let a0 = entry(n, 0, 0, 0);
    let b0 = entry(n, 0, 1, 0);
    let c0 = entry(n, 1, 0, 0);
    let d0 = entry(n, 1, 1, 0);
    let a1 = entry(n, 0, 0, 1);
    let b1 = entry(n, 0, 1, 1);
    let c1 = entry(n, 1, 0, 1);
    let d1 = entry(n, 1, 1, 1);
    let a2 = entry(n, 0, 0, 2);
    let b2 = entry(n, 0, 1, 2);

    let indicator = a0.mul(&a1).add(&b0.mul(&b1));
    let e1 = c0.mul(&a1).add(&d0.mul(&b1));
    let e2 = a0.mul(&c1).add(&b0.mul(&d1));
    let e3 = indicator.sub(&c0.mul(&c1)).sub(&d0.mul(&d1));
    let e4 = indicator.mul(&indicator).sub(&SigmaPolynomial::one(n * n));
    let e5 = a1.mul(&a2).add(&b1.mul(&b2)).sub(&indicator);

    Gl2Fixture {
        spec: SigmaGroupSpec {
            n,
            defining: vec![e1, e2, e3, e4, e5],
            family: FamilyTag::Custom,
        },
        indicator,
    }
}

impl Gl2Fixture {
    /// The identity matrix over S = Q(i) with trivial σ.
    pub fn identity_point(&self) -> SPoint {
        SPoint {
            width: 1,
            perm: vec![0],
            entries: vec![
                vec![GaussRational::one()],
                vec![GaussRational::zero()],
                vec![GaussRational::zero()],
                vec![GaussRational::one()],
            ],
        }
    }

    /// The diagonal point diag((1,-1), (1,-1)) over S = Q(i) × Q(i) with
    /// the coordinate-swapping σ.
    pub fn twisted_point(&self) -> SPoint {
        let pm = vec![GaussRational::one(), GaussRational::from_int(-1)];
        let zero = vec![GaussRational::zero(), GaussRational::zero()];
        SPoint {
            width: 2,
            perm: vec![1, 0],
            entries: vec![pm.clone(), zero.clone(), zero, pm],
        }
    }
}
