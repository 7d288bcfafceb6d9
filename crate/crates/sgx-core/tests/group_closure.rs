//! Pointwise closure checks: every family constructor's order-i truncation
//! defines a set closed under matrix product, verified on sampled members
//! at orders <= 1. Members are sampled level by level as matrices over
//! Q(i); products are taken levelwise and plugged back into every prolonged
//! defining equation.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sgx_core::diffpoly::SigmaVar;
use sgx_core::gauss::GaussRational;
use sgx_core::sgroups::{
    constant_points, full_algebraic, ga_linear_subgroup, GroupName, LinearSigmaOperator,
    SigmaGroupSpec,
};

/// A member of the order-1 truncation: one matrix per level.
type LevelPoint = Vec<Vec<Vec<GaussRational>>>;

fn rand_nonzero(rng: &mut StdRng) -> GaussRational {
    loop {
        let c = GaussRational::from_parts(rng.gen_range(-3..=3), 1, rng.gen_range(-2..=2), 1);
        if !c.is_zero() {
            return c;
        }
    }
}

fn rand_value(rng: &mut StdRng) -> GaussRational {
    GaussRational::from_parts(rng.gen_range(-3..=3), 1, rng.gen_range(-2..=2), 1)
}

fn identity(n: usize) -> Vec<Vec<GaussRational>> {
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| if j == k { GaussRational::one() } else { GaussRational::zero() })
                .collect()
        })
        .collect()
}

/// Samples one member of the named algebraic group as a Q(i) matrix.
fn sample_algebraic(name: GroupName, rng: &mut StdRng) -> Vec<Vec<GaussRational>> {
    match name {
        GroupName::Gm => vec![vec![rand_nonzero(rng)]],
        GroupName::Mu(2) => vec![vec![if rng.gen_bool(0.5) {
            GaussRational::one()
        } else {
            GaussRational::from_int(-1)
        }]],
        GroupName::Ga => {
            let mut m = identity(2);
            m[0][1] = rand_value(rng);
            m
        }
        GroupName::SLn(2) => {
            // (a b; c d) with d = (1 + bc)/a, a invertible.
            let a = rand_nonzero(rng);
            let b = rand_value(rng);
            let c = rand_value(rng);
            let d = &(&GaussRational::one() + &(&b * &c)) / &a;
            vec![vec![a, b], vec![c, d]]
        }
        GroupName::Torus(2) => vec![
            vec![rand_nonzero(rng), GaussRational::zero()],
            vec![GaussRational::zero(), rand_nonzero(rng)],
        ],
        GroupName::UnipotentUpper(3) => {
            let mut m = identity(3);
            m[0][1] = rand_value(rng);
            m[0][2] = rand_value(rng);
            m[1][2] = rand_value(rng);
            m
        }
        other => panic!("no sampler for {other}"),
    }
}

fn matmul(a: &[Vec<GaussRational>], b: &[Vec<GaussRational>]) -> Vec<Vec<GaussRational>> {
    let n = a.len();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| {
                    let mut acc = GaussRational::zero();
                    for t in 0..n {
                        acc = &acc + &(&a[j][t] * &b[t][k]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// All prolongations of the defining equations with order <= max_order must
/// vanish at the point.
fn satisfies(spec: &SigmaGroupSpec, point: &LevelPoint, max_order: usize) -> bool {
    let assign = |v: SigmaVar| point[v.shift][v.base / spec.n][v.base % spec.n].clone();
    for g in &spec.defining {
        let d = g.order();
        if d > max_order {
            continue;
        }
        for l in 0..=(max_order - d) {
            if !g.prolong(l).eval(&assign).is_zero() {
                return false;
            }
        }
    }
    true
}

fn product(a: &LevelPoint, b: &LevelPoint) -> LevelPoint {
    a.iter().zip(b.iter()).map(|(x, y)| matmul(x, y)).collect()
}

/// Samples a member of the spec's order-1 truncation.
fn sample_member(spec: &SigmaGroupSpec, rng: &mut StdRng) -> LevelPoint {
    match &spec.family {
        sgx_core::sgroups::FamilyTag::FullAlgebraic(name) => {
            // Levels are unconstrained across each other.
            vec![sample_algebraic(*name, rng), sample_algebraic(*name, rng)]
        }
        sgx_core::sgroups::FamilyTag::ConstantPoints(name) => {
            let m = sample_algebraic(*name, rng);
            vec![m.clone(), m]
        }
        sgx_core::sgroups::FamilyTag::GaLinearSubgroup(op) => {
            // (1 u; 0 1) with L(u) = 0; for order-1 operators the level-1
            // entry is determined, otherwise both levels are free here.
            let u0 = rand_value(rng);
            let u1 = if op.order() == 1 {
                -&(&op.lambda[0] * &u0)
            } else {
                rand_value(rng)
            };
            let mut m0 = identity(2);
            m0[0][1] = u0;
            let mut m1 = identity(2);
            m1[0][1] = u1;
            vec![m0, m1]
        }
        sgx_core::sgroups::FamilyTag::Custom => panic!("no sampler for custom specs"),
    }
}

#[test]
fn sampled_members_are_closed_under_product() {
    let mut rng = StdRng::seed_from_u64(0x5147_c105);
    let specs = vec![
        full_algebraic(GroupName::Gm).unwrap(),
        full_algebraic(GroupName::Mu(2)).unwrap(),
        full_algebraic(GroupName::Ga).unwrap(),
        full_algebraic(GroupName::SLn(2)).unwrap(),
        full_algebraic(GroupName::Torus(2)).unwrap(),
        full_algebraic(GroupName::UnipotentUpper(3)).unwrap(),
        constant_points(GroupName::Gm).unwrap(),
        constant_points(GroupName::Mu(2)).unwrap(),
        constant_points(GroupName::SLn(2)).unwrap(),
        ga_linear_subgroup(&LinearSigmaOperator::new(vec![GaussRational::from_int(-1)])),
        ga_linear_subgroup(&LinearSigmaOperator::new(vec![GaussRational::from_ratio(3, 2)])),
    ];
    for spec in &specs {
        for _ in 0..20 {
            let x = sample_member(spec, &mut rng);
            let y = sample_member(spec, &mut rng);
            assert!(satisfies(spec, &x, 1), "sampled member violates the ideal: {:?}", spec.family);
            assert!(satisfies(spec, &y, 1), "sampled member violates the ideal: {:?}", spec.family);
            let xy = product(&x, &y);
            assert!(
                satisfies(spec, &xy, 1),
                "product of members leaves the ideal: {:?}",
                spec.family
            );
        }
    }
}
