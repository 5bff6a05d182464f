use barneskit::barnes::{barnes_poly, BarnesTable};
use barneskit::dedekind::{
    partition_counts_dp, FourierDedekind, PartitionClosedForm, PartitionSpec,
};
use barneskit::exact::rational::{int, pow};
use barneskit::exact::{format_rational, parse_rational, Poly, Rational, Series};
use barneskit::identities::{sweep, SweepRanges};
use barneskit::AVec;
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..9, 1i64..4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..6).prop_map(Poly::from_coeffs)
}

fn avec() -> impl Strategy<Value = AVec> {
    prop::collection::vec(positive_rational(), 1..4).prop_map(|v| AVec::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(q in small_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn poly_product_evaluates_pointwise(p in poly(), q in poly(), x in small_rational()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn poly_division(p in poly(), q in poly()) {
        prop_assume!(q.degree().is_some());
        let (quot, rem) = p.div_rem(&q);
        prop_assert_eq!(&(&quot * &q) + &rem, p);
        prop_assert!(rem.degree().is_none_or(|d| d < q.degree().unwrap()));
    }

    #[test]
    fn poly_shift_and_compose(p in poly(), c in small_rational(), x in small_rational()) {
        prop_assert_eq!(p.shift(&c).eval(&x), p.eval(&(&x + &c)));
        prop_assert_eq!(p.compose_linear(&c, &int(1)).eval(&x), p.eval(&(&c * &x + int(1))));
    }

    #[test]
    fn series_inverse(mut coeffs in prop::collection::vec(small_rational(), 1..8)) {
        if coeffs[0] == Rational::from_integer(0.into()) {
            coeffs[0] = Rational::one();
        }
        let order = coeffs.len() - 1;
        let s = Series::new(coeffs, order);
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv), Series::one(order));
    }

    #[test]
    fn barnes_poly_symmetric_in_entries(a in avec(), k in 0usize..7) {
        let mut rev = a.entries().to_vec();
        rev.reverse();
        let b = AVec::new(rev).unwrap();
        prop_assert_eq!(barnes_poly(k, &a).poly, barnes_poly(k, &b).poly);
    }

    #[test]
    fn barnes_poly_homogeneous(a in avec(), c in positive_rational(), k in 0usize..7) {
        // B_k(c x; c a) = c^{k-n} B_k(x; a)
        let n = a.len() as i64;
        let scaled = AVec::new(a.entries().iter().map(|v| v * &c).collect()).unwrap();
        let lhs = barnes_poly(k, &scaled).poly.compose_linear(&c, &int(0));
        let rhs = barnes_poly(k, &a).poly.scale(&pow(&c, k as i64 - n));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn barnes_difference(a in avec(), k in 1usize..7, j in 0usize..3) {
        // B_k(x + a_j; a) - B_k(x; a) = k B_{k-1}(x; a without a_j)
        let j = j % a.len();
        prop_assume!(a.len() > 1);
        let aj = a.entries()[j].clone();
        let rest: Vec<usize> = (0..a.len()).filter(|&i| i != j).collect();
        let sub = a.subset(&rest).unwrap();
        let mut table = BarnesTable::new(a.clone());
        let p = table.poly(k).clone();
        let diff = &p.shift(&aj) - &p;
        prop_assert_eq!(diff, barnes_poly(k - 1, &sub).poly.scale(&int(k as i64)));
    }

    #[test]
    fn closed_partition_form_matches_dp(a in 1u64..9, b in 1u64..9, c in 1u64..9) {
        let parts = vec![a, b, c];
        prop_assume!(a.gcd(&b) == 1 && a.gcd(&c) == 1 && b.gcd(&c) == 1);
        let spec = PartitionSpec::new(parts).unwrap();
        let closed = PartitionClosedForm::new(&spec).unwrap();
        for (t, count) in partition_counts_dp(&spec, 80).into_iter().enumerate() {
            prop_assert_eq!(closed.eval(t as i64), Rational::from_integer(count));
        }
    }

    #[test]
    fn fourier_dedekind_periodic(a in 2u64..15, b in 1u64..15, r in -30i64..30) {
        prop_assume!(a.gcd(&b) == 1);
        let fd = FourierDedekind::new(&[b], a).unwrap();
        prop_assert_eq!(fd.sigma(r), fd.sigma(r + a as i64));
    }

    #[test]
    fn sweeps_are_deterministic(seed in any::<u64>()) {
        let ranges = SweepRanges::parse("n=3,m=3..5,draw=1..2").unwrap();
        let first = sweep("THM1", &ranges, seed).unwrap();
        let again = sweep("THM1", &ranges, seed).unwrap();
        prop_assert_eq!(first, again);
    }
}
