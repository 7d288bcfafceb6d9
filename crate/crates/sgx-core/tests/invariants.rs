//! Property suites for the exact arithmetic layer: decomposition
//! round-trips, operator commutation, and the witness identities of the
//! decision helpers, on randomized inputs.

use proptest::prelude::*;
use sgx_core::gauss::GaussRational;
use sgx_core::partfrac::{
    antiderivative, is_dth_power, is_log_derivative, logarithmic_part, partial_fractions,
};
use sgx_core::poly::{gauss_roots, Poly};
use sgx_core::ratfunc::RatFunc;

fn small_gauss() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
        .prop_map(|(a, b, c, d)| GaussRational::from_parts(a, b, c, d))
}

fn small_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_gauss(), 0..=max_len).prop_map(Poly::new)
}

/// β values whose orbits interact: rational and Gaussian, some congruent
/// mod Z.
fn beta_pool() -> Vec<GaussRational> {
    vec![
        GaussRational::from_int(0),
        GaussRational::from_int(1),
        GaussRational::imag(1),
        GaussRational::from_parts(1, 1, 1, 1),
        GaussRational::from_parts(-2, 1, 1, 1),
        GaussRational::from_parts(1, 2, 0, 1),
    ]
}

/// A rational function whose denominator splits over Q(i) by construction.
fn split_ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        small_poly(4),
        prop::collection::vec((0usize..6, 1u32..=3), 0..=3),
    )
        .prop_map(|(num, dens)| {
            let pool = beta_pool();
            let mut den = Poly::one();
            for (idx, mult) in dens {
                let lin = Poly::new(vec![pool[idx].clone(), GaussRational::one()]);
                den = den.mul(&lin.pow(mult));
            }
            RatFunc::new(num, den).expect("nonzero denominator")
        })
}

/// A fully arbitrary rational function (denominator need not split).
fn any_ratfunc() -> impl Strategy<Value = RatFunc> {
    (small_poly(4), small_poly(3)).prop_filter_map("nonzero denominator", |(num, den)| {
        if den.is_zero() {
            None
        } else {
            Some(RatFunc::new(num, den).expect("checked nonzero"))
        }
    })
}

proptest! {
    #[test]
    fn partial_fraction_recombines(f in split_ratfunc()) {
        let pf = partial_fractions(&f).unwrap();
        prop_assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn atoms_are_distinct_and_nonzero(f in split_ratfunc()) {
        let pf = partial_fractions(&f).unwrap();
        for atom in &pf.atoms {
            prop_assert!(atom.order >= 1);
            prop_assert!(!atom.coeff.is_zero());
        }
        let mut keys: Vec<(GaussRational, u32)> =
            pf.atoms.iter().map(|a| (a.beta.clone(), a.order)).collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        prop_assert_eq!(keys.len(), before);
    }

    #[test]
    fn antiderivative_identity(f in split_ratfunc()) {
        match antiderivative(&f).unwrap() {
            Some(g) => prop_assert_eq!(g.delta(), f),
            None => prop_assert!(!logarithmic_part(&f).unwrap().is_empty()),
        }
    }

    #[test]
    fn log_derivative_identity(f in split_ratfunc()) {
        if let Some(g) = is_log_derivative(&f).unwrap() {
            prop_assert_eq!(g.log_derivative().unwrap(), f);
        }
    }

    #[test]
    fn dth_power_quotient_is_constant(f in any_ratfunc(), d in 1u32..=4) {
        if f.is_zero() {
            return Ok(());
        }
        if let Some(g) = is_dth_power(&f, d).unwrap() {
            let quot = f.div(&g.powi(d as i32).unwrap()).unwrap();
            prop_assert!(quot.is_constant());
            prop_assert!(!quot.is_zero());
        }
    }

    #[test]
    fn dth_power_detects_built_powers(g in any_ratfunc(), d in 2u32..=3) {
        if g.is_zero() {
            return Ok(());
        }
        let f = g.powi(d as i32).unwrap();
        prop_assert!(is_dth_power(&f, d).unwrap().is_some());
    }

    #[test]
    fn gauss_roots_product_identity(p in small_poly(5)) {
        if p.is_zero() {
            return Ok(());
        }
        let (roots, residual) = gauss_roots(&p).unwrap();
        let mut rebuilt = Poly::constant(p.leading().unwrap().clone());
        for (r, m) in &roots {
            let lin = Poly::new(vec![-r, GaussRational::one()]);
            rebuilt = rebuilt.mul(&lin.pow(*m));
        }
        rebuilt = rebuilt.mul(&residual);
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn field_operations_are_exact(f in any_ratfunc(), g in any_ratfunc()) {
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        if !g.is_zero() {
            prop_assert_eq!(f.mul(&g).div(&g).unwrap(), f);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// δ∘σ = σ∘δ on a thousand randomized rational functions (the shift
    /// case of the twisted commutation rule).
    #[test]
    fn delta_sigma_commute(f in any_ratfunc(), l in 0usize..=3) {
        prop_assert_eq!(f.delta().sigma(l), f.sigma(l).delta());
    }
}
