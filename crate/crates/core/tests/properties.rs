use colorcar::gen::letters;
use colorcar::io::{parse, to_json, Rat};
use colorcar::linalg::ratio;
use colorcar::oracle;
use colorcar::{eta, reduced_homology, Caps, Matroid, OrientedMatroid, SimplicialComplex, Subset};
use proptest::prelude::*;

fn facets(n: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..(1u64 << n), 0..=n + 2)
}

fn complex(n: usize, masks: &[u64]) -> SimplicialComplex {
    let facets = masks.iter().map(|&m| Subset::from_bits(m)).collect();
    SimplicialComplex::from_facets(letters(n), facets).unwrap()
}

fn columns(d: usize, n: usize) -> impl Strategy<Value = Vec<Vec<(i64, i64)>>> {
    prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), d), n)
        .prop_filter("no zero column", |cols| cols.iter().all(|c| c.iter().any(|&(p, _)| p != 0)))
}

fn rationals(cols: &[Vec<(i64, i64)>]) -> Vec<Vec<colorcar::Rational>> {
    cols.iter()
        .map(|c| c.iter().map(|&(p, q)| ratio(p, q)).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(p in any::<i64>(), q in 1i64..=i64::MAX) {
        let r = Rat(ratio(p, q));
        let text = to_json(&r);
        let back: Rat = parse(&text).unwrap();
        prop_assert_eq!(&back, &r);
        let s = r.to_string();
        prop_assert_eq!(s.parse::<Rat>().unwrap().to_string(), s);
    }

    #[test]
    fn transversal_rank_is_a_matching(n in 1usize..=8, family in prop::collection::vec(1u64..256, 1..=5)) {
        let mask = Subset::full(n).bits();
        let family: Vec<Subset> = family.iter().map(|&m| Subset::from_bits(m & mask)).collect();
        let m = Matroid::transversal(letters(n), family.clone()).unwrap();
        for s in Subset::full(n).subsets() {
            prop_assert_eq!(m.rank(s), oracle::brute_force_matching(&family, s));
        }
    }

    #[test]
    fn kunneth(a in 1usize..=5, b in 1usize..=5, fa in facets(5), fb in facets(5)) {
        let caps = Caps::default();
        let x = complex(a, &fa.iter().map(|m| m & Subset::full(a).bits()).collect::<Vec<_>>());
        let y = complex(b, &fb.iter().map(|m| m & Subset::full(b).bits()).collect::<Vec<_>>())
            .relabel(|l| format!("{l}'"))
            .unwrap();
        let j = x.join(&y).unwrap();
        prop_assert_eq!(eta(&j, &caps).unwrap(), eta(&x, &caps).unwrap() + eta(&y, &caps).unwrap());
    }

    #[test]
    fn alexander_duality(n in 1usize..=7, masks in facets(7)) {
        let caps = Caps::default();
        let full = Subset::full(n).bits();
        let masks: Vec<u64> = masks.iter().map(|m| m & full).filter(|&m| m != full).collect();
        let x = complex(n, &masks);
        let hx = reduced_homology(&x, &caps).unwrap();
        let hd = reduced_homology(&x.alexander_dual(&caps).unwrap(), &caps).unwrap();
        let n = n as isize;
        for i in -1..=n - 2 {
            prop_assert_eq!(hd.get(i), hx.get(n - i - 3));
        }
    }

    #[test]
    fn positive_circuits_match_linear_programming(cols in (1usize..=3).prop_flat_map(|d| columns(d, 6))) {
        let cols = rationals(&cols);
        let d = cols[0].len();
        let om = OrientedMatroid::from_rational_vectors(letters(cols.len()), &cols, d, &Caps::default()).unwrap();
        for a in Subset::full(cols.len()).subsets() {
            let picked: Vec<&[colorcar::Rational]> = a.iter().map(|i| cols[i].as_slice()).collect();
            prop_assert_eq!(om.contains_positive_circuit(a).is_some(), oracle::has_positive_dependency(&picked));
        }
    }

    #[test]
    fn support_complex_faces_avoid_positive_circuits(cols in (1usize..=3).prop_flat_map(|d| columns(d, 6))) {
        let cols = rationals(&cols);
        let d = cols[0].len();
        let om = OrientedMatroid::from_rational_vectors(letters(cols.len()), &cols, d, &Caps::default()).unwrap();
        let x = SimplicialComplex::support_complex(&om);
        for a in Subset::full(cols.len()).subsets() {
            prop_assert_eq!(x.contains(a), om.contains_positive_circuit(a).is_none());
        }
    }
}
