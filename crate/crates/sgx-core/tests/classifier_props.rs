//! Property suites for the shift-relation classifiers: witness identities,
//! oracle cross-checks at desk scale, shift covariance and scaling.

use proptest::prelude::*;
use sgx_core::gauss::GaussRational;
use sgx_core::partfrac::PoleAtom;
use sgx_core::ratfunc::RatFunc;
use sgx_core::shiftrel::{
    brute_force_kummer, brute_force_relation, classify_cyclic, classify_ga, classify_gm,
    orbit_decompose, shift_combination, CyclicVerdict, GaVerdict, GmVerdict, Relation,
    RelationMode,
};

fn beta_pool() -> Vec<GaussRational> {
    vec![
        GaussRational::from_int(0),
        GaussRational::imag(1),
        GaussRational::from_parts(1, 1, 1, 1),
        GaussRational::imag(2),
    ]
}

/// Residues with denominators dividing 6, mixing rational and imaginary.
fn residue_pool() -> Vec<GaussRational> {
    vec![
        GaussRational::from_int(1),
        GaussRational::from_int(-2),
        GaussRational::from_ratio(1, 2),
        GaussRational::from_ratio(-2, 3),
        GaussRational::imag(1),
        GaussRational::from_parts(1, 1, -1, 1),
        GaussRational::from_parts(0, 1, 1, 2),
    ]
}

fn atom_strategy() -> impl Strategy<Value = PoleAtom> {
    (0usize..4, 1u32..=2, 0usize..7).prop_map(|(b, order, c)| {
        PoleAtom::new(beta_pool()[b].clone(), order, residue_pool()[c].clone())
    })
}

/// Sum of up to four atoms; atoms at equal (β, order) merge through the
/// rational arithmetic, so the result is a legitimate input.
fn atom_sum() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec(atom_strategy(), 1..=4).prop_map(|atoms| {
        let mut acc = RatFunc::zero();
        for a in &atoms {
            acc = acc.add(&a.to_ratfunc());
        }
        acc
    })
}

/// A divisor-style input for the cyclic classifier: a product of linear
/// factors over the pool with exponents in ±{1,2}.
fn divisor_product() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((0usize..4, prop::sample::select(vec![-2i32, -1, 1, 2])), 1..=3)
        .prop_map(|factors| {
            let mut acc = RatFunc::one();
            for (b, e) in factors {
                let lin = RatFunc::new(
                    sgx_core::poly::Poly::new(vec![
                        beta_pool()[b].clone(),
                        GaussRational::one(),
                    ]),
                    sgx_core::poly::Poly::one(),
                )
                .unwrap();
                acc = acc.mul(&lin.powi(e).unwrap());
            }
            acc
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ga_verdicts_cross_checked(a in atom_sum()) {
        let oracle = brute_force_relation(&a, RelationMode::Additive, 6, 4).unwrap();
        match classify_ga(&a).unwrap() {
            GaVerdict::Full => prop_assert!(oracle.is_none()),
            GaVerdict::Trivial(g) => {
                prop_assert_eq!(g.delta(), a);
                prop_assert!(oracle.is_some());
            }
        }
    }

    #[test]
    fn gm_witness_identity(a in atom_sum()) {
        if let GmVerdict::NotFull { exponents, witness } = classify_gm(&a).unwrap() {
            let combined = shift_combination(&a, &exponents);
            prop_assert_eq!(witness.log_derivative().unwrap(), combined);
            prop_assert!(exponents.iter().any(|e| !num_bigint::BigInt::from(0i32).eq(e)));
        }
    }

    #[test]
    fn gm_oracle_agreement_small_box(a in atom_sum()) {
        // Small box keeps the property suite quick; the acceptance suite
        // runs the pinned B = 6, N = 4 configuration.
        let oracle = brute_force_relation(&a, RelationMode::Multiplicative, 3, 2).unwrap();
        match classify_gm(&a).unwrap() {
            GmVerdict::Full => prop_assert!(oracle.is_none()),
            GmVerdict::NotFull { .. } => {
                if let Some(Relation::Multiplicative { exponents, witness }) = oracle {
                    let combined = shift_combination(&a, &exponents);
                    prop_assert_eq!(witness.log_derivative().unwrap(), combined);
                }
            }
        }
    }

    #[test]
    fn cyclic_verdicts_cross_checked(b in divisor_product(), d in prop::sample::select(vec![2u32, 3, 4, 6])) {
        let oracle = brute_force_kummer(&b, d, 3).unwrap();
        match classify_cyclic(&b, d).unwrap() {
            CyclicVerdict::Full => prop_assert!(oracle.is_none(), "oracle found {oracle:?}"),
            CyclicVerdict::NotFull { prime, witness } => {
                prop_assert!(d % prime == 0);
                let quot = b.div(&witness.powi(prime as i32).unwrap()).unwrap();
                prop_assert!(quot.is_constant());
                prop_assert!(oracle.is_some());
            }
        }
    }

    #[test]
    fn shift_covariance(a in atom_sum()) {
        let shifted = a.sigma(1);
        match (classify_ga(&a).unwrap(), classify_ga(&shifted).unwrap()) {
            (GaVerdict::Full, GaVerdict::Full) => {}
            (GaVerdict::Trivial(_), GaVerdict::Trivial(_)) => {}
            other => prop_assert!(false, "additive verdict changed under shift: {other:?}"),
        }
        match (classify_gm(&a).unwrap(), classify_gm(&shifted).unwrap()) {
            (GmVerdict::Full, GmVerdict::Full) => {}
            (GmVerdict::NotFull { exponents: e1, .. }, GmVerdict::NotFull { exponents: e2, .. }) => {
                prop_assert_eq!(e1, e2);
            }
            other => prop_assert!(false, "multiplicative verdict changed under shift: {other:?}"),
        }
    }

    #[test]
    fn cyclic_shift_covariance(b in divisor_product(), d in prop::sample::select(vec![2u32, 3, 4])) {
        let shifted = b.sigma(1);
        match (classify_cyclic(&b, d).unwrap(), classify_cyclic(&shifted, d).unwrap()) {
            (CyclicVerdict::Full, CyclicVerdict::Full) => {}
            (CyclicVerdict::NotFull { prime: p1, .. }, CyclicVerdict::NotFull { prime: p2, .. }) => {
                prop_assert_eq!(p1, p2);
            }
            other => prop_assert!(false, "cyclic verdict changed under shift: {other:?}"),
        }
    }

    #[test]
    fn ga_scaling_invariance(a in atom_sum(), num in -3i64..=3, im in -3i64..=3) {
        let lambda = GaussRational::from_parts(num, 1, im, 1);
        if lambda.is_zero() {
            return Ok(());
        }
        let scaled = a.scale(&lambda);
        match (classify_ga(&a).unwrap(), classify_ga(&scaled).unwrap()) {
            (GaVerdict::Full, GaVerdict::Full) => {}
            (GaVerdict::Trivial(_), GaVerdict::Trivial(_)) => {}
            other => prop_assert!(false, "verdict changed under scaling: {other:?}"),
        }
    }

    #[test]
    fn orbit_decomposition_is_a_partition(atoms in prop::collection::vec(atom_strategy(), 0..6)) {
        // Merge duplicate (β, order) pairs the way partial fractions would.
        let mut merged: Vec<PoleAtom> = Vec::new();
        for a in atoms {
            if let Some(existing) = merged
                .iter_mut()
                .find(|m| m.beta == a.beta && m.order == a.order)
            {
                existing.coeff = &existing.coeff + &a.coeff;
            } else {
                merged.push(a);
            }
        }
        merged.retain(|a| !a.coeff.is_zero());
        let classes = orbit_decompose(&merged);
        let total: usize = classes
            .iter()
            .map(|c| c.members.values().map(|m| m.len()).sum::<usize>())
            .sum();
        prop_assert_eq!(total, merged.len());
        // Every atom lands in the class of its β and nowhere else.
        for atom in &merged {
            let (rep, offset) = sgx_core::shiftrel::orbit_rep(&atom.beta);
            let holders = classes
                .iter()
                .filter(|c| {
                    c.rep == rep
                        && c.members.get(&offset).map_or(false, |m| m.contains_key(&atom.order))
                })
                .count();
            prop_assert_eq!(holders, 1);
        }
    }
}
