mod common;

use common::{naive_dim_f2, naive_dim_q, product_group};
use proptest::prelude::*;
use terwilliger::exactlin::{Int, Prime};
use terwilliger::schemes::{johnson, rook4, scheme_from_srg, AssociationScheme, SubconstituentFrame};
use terwilliger::talgebra::{
    all_ones_corners, close_over_field, dimension_report_with, generators, PrimeMatrices, ReportOptions,
};

const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| Prime::new(p).unwrap())
}

fn full() -> ReportOptions {
    ReportOptions { verify_radicals: true, char_zero: true, ..ReportOptions::default() }
}

fn small_scheme() -> impl Strategy<Value = (String, AssociationScheme)> {
    prop_oneof![
        (1usize..=3, 1usize..=3).prop_map(|(a, b)| (format!("Z{a}xZ{b}"), product_group(a, b))),
        (4usize..=6).prop_map(|n| (format!("J({n},2)"), johnson(n).unwrap())),
        Just(("rook4".to_string(), scheme_from_srg(&rook4()).unwrap().0)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `ZT(x)` for J(n,2) has divisors `1^15, n-4` once n ≥ 6, and is saturated of rank 15 at n = 5.
    #[test]
    fn johnson_dimensions_follow_the_divisors(n in 5usize..=11, x in any::<prop::sample::Index>(), p in prime()) {
        let s = johnson(n).unwrap();
        let x = x.index(s.order());
        let frame = SubconstituentFrame::new(&s, x).unwrap();
        let r = dimension_report_with(&frame, &[p], &full()).unwrap();
        let (dim_q, index) = if n == 5 { (15, 1) } else { (16, n - 4) };
        prop_assert_eq!(r.dim_q, dim_q);
        prop_assert_eq!(r.divisors.index(), Int::from(index));
        let pr = r.prime(p.get()).unwrap();
        prop_assert_eq!(pr.dim == r.dim_q, index % p.get() as usize != 0);
        prop_assert!(pr.radical_check.as_ref().unwrap().passed());
        prop_assert!(r.char_zero.unwrap().passed());
        all_ones_corners(s.valencies(), x, pr).unwrap();
    }

    /// A thin scheme's `T(x)` is the full matrix algebra in every characteristic.
    #[test]
    fn thin_schemes_give_full_matrix_algebras(a in 1usize..=3, b in 1usize..=3, x in any::<prop::sample::Index>(), p in prime()) {
        let s = product_group(a, b);
        let n = s.order();
        let x = x.index(n);
        let r = dimension_report_with(&SubconstituentFrame::new(&s, x).unwrap(), &[p], &full()).unwrap();
        prop_assert_eq!(r.dim_q, n * n);
        prop_assert_eq!(r.divisors.index(), Int::from(1));
        let pr = r.prime(p.get()).unwrap();
        prop_assert_eq!((pr.dim, pr.radical_dim, pr.semisimple), (n * n, Some(0), Some(true)));
        prop_assert!(pr.corners.iter().all(|c| c.dim == 1 && c.semisimple));
    }

    #[test]
    fn closures_agree_with_naive_oracles((name, s) in small_scheme(), x in any::<prop::sample::Index>()) {
        let x = x.index(s.order());
        let r = dimension_report_with(&SubconstituentFrame::new(&s, x).unwrap(), &[Prime::new(2).unwrap()], &full()).unwrap();
        prop_assert_eq!(r.dim_q, naive_dim_q(&s, x), "{}", name);
        prop_assert_eq!(r.dim(2), Some(naive_dim_f2(&s, x)), "{}", name);
    }

    #[test]
    fn prime_field_algebras_are_transpose_closed_rings((name, s) in small_scheme(), x in any::<prop::sample::Index>(), p in prime()) {
        let x = x.index(s.order());
        let frame = SubconstituentFrame::new(&s, x).unwrap();
        let gens = generators(&frame);
        let a = close_over_field(&gens, PrimeMatrices::new(s.order(), p));
        prop_assert!(a.is_closed(), "{}", name);
        prop_assert!(a.contains_identity(), "{}", name);
        prop_assert!(a.is_transpose_closed(), "{}", name);
        let r = dimension_report_with(&frame, &[p], &ReportOptions { radicals: false, corners: false, ..full() }).unwrap();
        prop_assert_eq!(a.dim(), r.divisors.dim_mod_p(p));
        prop_assert_eq!(r.dim(p.get()), Some(a.dim()));
        let divides = r.divisors.index() % Int::from(p.get()) == Int::from(0);
        prop_assert_eq!(a.dim() < r.dim_q, divides);
    }
}
