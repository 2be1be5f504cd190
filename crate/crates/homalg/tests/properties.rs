//! Randomized invariants: ring laws, canonical forms, oracle agreement,
//! Hilbert additivity, presentation independence, and transpose stability.

use std::sync::Arc;

use proptest::prelude::*;

use homalg::field::{Field, Gf32003};
use homalg::fpmod::{FPModule, FreeModule};
use homalg::groebner;
use homalg::homology;
use homalg::ideal::Ideal;
use homalg::monomial::MonomialOrder;
use homalg::oracle;
use homalg::poly::Polynomial;
use homalg::ring::QuotientRing;

type R = Arc<QuotientRing<Gf32003>>;
type P = Polynomial<Gf32003>;

fn menu_ring(idx: usize) -> R {
    match idx {
        0 => QuotientRing::new(&["x", "y"], MonomialOrder::GrevLex, &["x*y"], false).unwrap(),
        1 => QuotientRing::new(&["x", "y", "z", "w"], MonomialOrder::GrevLex, &["x*y"], false)
            .unwrap(),
        2 => QuotientRing::new(
            &["x", "y", "z"],
            MonomialOrder::GrevLex,
            &["x^2", "x*y", "y^2"],
            false,
        )
        .unwrap(),
        3 => QuotientRing::new(&["x", "y"], MonomialOrder::GrevLex, &[], true).unwrap(),
        _ => QuotientRing::new(&["x", "y", "z"], MonomialOrder::GrevLex, &[], true).unwrap(),
    }
}

/// A random homogeneous polynomial of the given degree with at most three
/// terms, already reduced in the ring.
fn homog_poly(ring: &R, degree: u32, picks: &[(usize, i64)]) -> P {
    let amb = ring.ambient();
    let mons = oracle::monomials_of_degree(ring.nvars(), degree);
    let mut terms = Vec::new();
    for &(mi, c) in picks {
        let m = &mons[mi % mons.len()];
        terms.push(homalg::poly::Term {
            coef: Gf32003::from_i64(c),
            mon: m.clone(),
        });
    }
    ring.reduce(&amb.normalize(terms))
}

fn picks_strategy() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..32, 1i64..6), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ring_laws(ridx in 0usize..5,
                 d1 in 1u32..3, d2 in 1u32..3, d3 in 1u32..3,
                 p1 in picks_strategy(), p2 in picks_strategy(), p3 in picks_strategy()) {
        let r = menu_ring(ridx);
        let a = homog_poly(&r, d1, &p1);
        let b = homog_poly(&r, d2, &p2);
        let c = homog_poly(&r, d3, &p3);
        // associativity, commutativity, distributivity, identities; all in
        // canonical form
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(
            r.mul(&a, &r.add(&b, &c)),
            r.add(&r.mul(&a, &b), &r.mul(&a, &c))
        );
        prop_assert_eq!(r.add(&a, &r.ambient().zero::<Gf32003>()), a.clone());
        prop_assert_eq!(r.mul(&a, &r.ambient().one()), r.reduce(&a));
    }

    #[test]
    fn parse_print_roundtrip(ridx in 0usize..5, d in 1u32..4, picks in picks_strategy()) {
        let r = menu_ring(ridx);
        let p = homog_poly(&r, d, &picks);
        let text = r.render(&p);
        let back = r.parse(&text).unwrap();
        prop_assert_eq!(p, back);
    }

    #[test]
    fn reduction_idempotent(ridx in 0usize..5, d in 1u32..4, picks in picks_strategy()) {
        let r = menu_ring(ridx);
        let p = homog_poly(&r, d, &picks);
        prop_assert_eq!(r.reduce(&p), p);
    }

    #[test]
    fn grading_multiplicative(ridx in 3usize..5, d1 in 1u32..3, d2 in 1u32..3,
                              p1 in picks_strategy(), p2 in picks_strategy()) {
        // over the ambient (domain) rings a nonzero product has additive degree
        let r = menu_ring(ridx);
        let a = homog_poly(&r, d1, &p1);
        let b = homog_poly(&r, d2, &p2);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = r.mul(&a, &b);
        prop_assert!(!prod.is_zero());
        prop_assert_eq!(prod.degree(), Some(d1 + d2));
    }

    #[test]
    fn membership_matches_oracle(ridx in 0usize..5,
                                 gens_picks in prop::collection::vec((1u32..3, picks_strategy()), 1..=3),
                                 probe_d in 1u32..4, probe in picks_strategy()) {
        let r = menu_ring(ridx);
        let gens: Vec<Vec<P>> = gens_picks
            .iter()
            .map(|(d, ps)| vec![homog_poly(&r, *d, ps)])
            .filter(|v| !v[0].is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let sub = groebner::submodule_gb(&r, &[0], &gens).unwrap();
        let f = homog_poly(&r, probe_d, &probe);
        let expect = oracle::membership(&r, &[0], &gens, &[vec![f.clone()]]);
        prop_assert_eq!(sub.contains(&[f]).unwrap(), expect[0]);
    }

    #[test]
    fn buchberger_certificate(ridx in 0usize..5,
                              gens_picks in prop::collection::vec((1u32..3, picks_strategy()), 1..=3)) {
        let r = menu_ring(ridx);
        let gens: Vec<Vec<P>> = gens_picks
            .iter()
            .map(|(d, ps)| vec![homog_poly(&r, *d, ps)])
            .filter(|v| !v[0].is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let sub = groebner::submodule_gb(&r, &[0], &gens).unwrap();
        // every S-vector of the stored basis reduces to zero
        sub.basis().certificate().unwrap();
    }

    #[test]
    fn hilbert_additive_on_sums(ridx in 0usize..5,
                                d1 in 1u32..3, p1 in picks_strategy(),
                                d2 in 1u32..3, p2 in picks_strategy()) {
        let r = menu_ring(ridx);
        let a = FPModule::cyclic(&Ideal::new(&r, vec![homog_poly(&r, d1, &p1)]).unwrap()).unwrap();
        let b = FPModule::cyclic(&Ideal::new(&r, vec![homog_poly(&r, d2, &p2)]).unwrap()).unwrap();
        let s = a.direct_sum(&b).unwrap();
        let (ha, hb, hs) = (
            a.hilbert_function(6).unwrap(),
            b.hilbert_function(6).unwrap(),
            s.hilbert_function(6).unwrap(),
        );
        for d in 0..=6 {
            prop_assert_eq!(hs.value(d), ha.value(d) + hb.value(d));
        }
    }

    #[test]
    fn tensor_hf_matches_oracle(ridx in 0usize..3,
                                d1 in 1u32..3, p1 in picks_strategy(),
                                d2 in 1u32..3, p2 in picks_strategy()) {
        let r = menu_ring(ridx);
        let a = FPModule::cyclic(&Ideal::new(&r, vec![homog_poly(&r, d1, &p1)]).unwrap()).unwrap();
        let b = FPModule::cyclic(&Ideal::new(&r, vec![homog_poly(&r, d2, &p2)]).unwrap()).unwrap();
        let t = a.tensor(&b).unwrap();
        let series = t.hilbert_series().unwrap();
        for d in 0..=4 {
            prop_assert_eq!(
                series.value(d),
                oracle::hf_of_presentation(&r, &t.target().twists, &t.columns(), d)
            );
        }
    }

    #[test]
    fn fitting_ideals_presentation_independent(ridx in 0usize..3,
                                               d1 in 1u32..3, p1 in picks_strategy(),
                                               d2 in 1u32..3, p2 in picks_strategy()) {
        let r = menu_ring(ridx);
        let g1 = homog_poly(&r, d1, &p1);
        let g2 = homog_poly(&r, d2, &p2);
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        let m = FPModule::cyclic(&Ideal::new(&r, vec![g1.clone(), g2.clone()]).unwrap()).unwrap();
        // pad with a trivial free summand
        let padded = {
            let mat = vec![
                vec![g1.clone(), g2.clone(), r.ambient().zero::<Gf32003>()],
                vec![
                    r.ambient().zero::<Gf32003>(),
                    r.ambient().zero::<Gf32003>(),
                    r.ambient().one(),
                ],
            ];
            FPModule::new(
                &r,
                FreeModule::new(vec![0, 0]),
                FreeModule::new(vec![
                    g1.degree().unwrap() as i64,
                    g2.degree().unwrap() as i64,
                    0,
                ]),
                mat,
            )
            .unwrap()
        };
        for j in 0..=1 {
            let a = m.fitting_ideal(j).unwrap();
            let b = padded.fitting_ideal(j).unwrap();
            prop_assert!(a.equals(&b).unwrap());
        }
    }

    #[test]
    fn minimalize_idempotent(ridx in 0usize..3,
                             d1 in 1u32..3, p1 in picks_strategy(),
                             d2 in 1u32..3, p2 in picks_strategy()) {
        let r = menu_ring(ridx);
        let m = FPModule::cyclic(
            &Ideal::new(&r, vec![homog_poly(&r, d1, &p1), homog_poly(&r, d2, &p2)]).unwrap(),
        )
        .unwrap();
        let once = m.minimalize().unwrap();
        let twice = once.minimalize().unwrap();
        prop_assert_eq!(once.matrix(), twice.matrix());
    }

    #[test]
    fn tor_is_balanced(ridx in 0usize..3,
                       d1 in 1u32..3, p1 in picks_strategy(),
                       d2 in 1u32..3, p2 in picks_strategy()) {
        let r = menu_ring(ridx);
        let a = FPModule::cyclic(&Ideal::new(&r, vec![homog_poly(&r, d1, &p1)]).unwrap()).unwrap();
        let b = FPModule::cyclic(&Ideal::new(&r, vec![homog_poly(&r, d2, &p2)]).unwrap()).unwrap();
        for i in 1..=2 {
            let ab = homology::tor(&a, &b, i, 6).unwrap();
            let ba = homology::tor(&b, &a, i, 6).unwrap();
            let (ha, hb) = (
                ab.hilbert_function(5).unwrap(),
                ba.hilbert_function(5).unwrap(),
            );
            let lo = ab.min_twist().min(ba.min_twist());
            for d in lo..=5 {
                prop_assert_eq!(ha.value(d), hb.value(d), "Tor_{} degree {}", i, d);
            }
        }
    }

    #[test]
    fn double_transpose_hf_stable(ridx in 0usize..3,
                                  d1 in 1u32..3, p1 in picks_strategy(),
                                  d2 in 1u32..3, p2 in picks_strategy()) {
        // direct sums of nonfree cyclic modules have no free summands, so
        // the double transpose reproduces them up to minimalization
        let r = menu_ring(ridx);
        let g1 = homog_poly(&r, d1, &p1);
        let g2 = homog_poly(&r, d2, &p2);
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        let a = FPModule::cyclic(&Ideal::new(&r, vec![g1]).unwrap()).unwrap();
        let b = FPModule::cyclic(&Ideal::new(&r, vec![g2]).unwrap()).unwrap();
        let m = a.direct_sum(&b).unwrap();
        let tt = homology::transpose(&homology::transpose(&m).unwrap()).unwrap();
        let (hm, ht) = (
            m.minimalize().unwrap().hilbert_function(5).unwrap(),
            tt.minimalize().unwrap().hilbert_function(5).unwrap(),
        );
        for d in 0..=5 {
            prop_assert_eq!(hm.value(d), ht.value(d), "degree {}", d);
        }
    }
}
