use proptest::prelude::*;
use schubert_core::connectivity::{
    check_cor73, check_th71, check_th84, recheck_pair_witnesses, witnesses_support_verdict, Variety,
};
use schubert_core::{
    lr_oracle, multiply, multiply_mp, nonzero_pair, support_admissible, hodge_check, BiSchubertClass,
    BigInt, BoxedPartition, ClassJson, MultiDegree, MultiProjClass, PartitionBox, ProductSpace,
    SchubertClass,
};

/// Boxes with at most `cells` cells and both sides positive.
fn boxes(cells: u32) -> Vec<PartitionBox> {
    let mut out = Vec::new();
    for rows in 1..=cells {
        for w in 1..=cells / rows {
            out.push(PartitionBox::new(rows - 1, w));
        }
    }
    out
}

fn small_box() -> impl Strategy<Value = PartitionBox> {
    (0u32..4, 1u32..5).prop_filter("at most 16 cells", |(d, w)| (d + 1) * w <= 16)
        .prop_map(|(d, w)| PartitionBox::new(d, w))
}

fn partition_in(frame: PartitionBox) -> impl Strategy<Value = BoxedPartition> {
    let all = frame.partitions(None);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn class_in(frame: PartitionBox) -> impl Strategy<Value = SchubertClass> {
    prop::collection::vec((partition_in(frame), -3i64..4), 0..4).prop_map(move |terms| {
        SchubertClass::from_terms(frame, terms.into_iter().map(|(p, k)| (p, BigInt::from(k))))
            .unwrap()
    })
}

fn box_and_classes(k: usize) -> impl Strategy<Value = (PartitionBox, Vec<SchubertClass>)> {
    small_box().prop_flat_map(move |f| (Just(f), prop::collection::vec(class_in(f), k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative((_, cs) in box_and_classes(2)) {
        prop_assert_eq!(multiply(&cs[0], &cs[1]).unwrap(), multiply(&cs[1], &cs[0]).unwrap());
    }

    #[test]
    fn product_is_associative((_, cs) in box_and_classes(3)) {
        let left = multiply(&multiply(&cs[0], &cs[1]).unwrap(), &cs[2]).unwrap();
        let right = multiply(&cs[0], &multiply(&cs[1], &cs[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_distributes((_, cs) in box_and_classes(3)) {
        let lhs = multiply(&cs[0], &cs[1].add(&cs[2]).unwrap()).unwrap();
        let rhs = multiply(&cs[0], &cs[1]).unwrap().add(&multiply(&cs[0], &cs[2]).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_products_are_graded_and_nonnegative(
        (f, a, b) in small_box().prop_flat_map(|f| (Just(f), partition_in(f), partition_in(f)))
    ) {
        let prod = multiply(&SchubertClass::basis(a.clone()), &SchubertClass::basis(b.clone())).unwrap();
        prop_assert!(prod.is_pure_of(a.weight() + b.weight()));
        prop_assert!(!prod.has_negative());
        prop_assert_eq!(prod.is_zero(), !nonzero_pair(&a, &b).unwrap());
        if a.weight() + b.weight() > f.cells() {
            prop_assert!(prod.is_zero());
        }
    }

    #[test]
    fn conjugation_is_a_ring_isomorphism((_, cs) in box_and_classes(2)) {
        let prod = multiply(&cs[0], &cs[1]).unwrap();
        let a = cs[0].conjugate().unwrap();
        let b = cs[1].conjugate().unwrap();
        prop_assert_eq!(prod.conjugate().unwrap(), multiply(&a, &b).unwrap());
        prop_assert_eq!(a.conjugate().unwrap(), cs[0].clone());
    }

    #[test]
    fn oracle_agrees_beyond_the_acceptance_boxes(
        (a, b) in (0u32..4, 1u32..6)
            .prop_filter("13..=20 cells", |(d, w)| (13..=20).contains(&((d + 1) * w)))
            .prop_flat_map(|(d, w)| {
                let f = PartitionBox::new(d, w);
                (partition_in(f), partition_in(f))
            })
    ) {
        let fast = multiply(&SchubertClass::basis(a.clone()), &SchubertClass::basis(b.clone())).unwrap();
        prop_assert_eq!(fast, lr_oracle(&a, &b).unwrap());
    }

    #[test]
    fn json_round_trip((_, cs) in box_and_classes(1)) {
        let text = serde_json::to_string(&ClassJson::from(&cs[0])).unwrap();
        let back = serde_json::from_str::<ClassJson>(&text).unwrap().to_class().unwrap();
        prop_assert_eq!(back, cs[0].clone());
    }

    #[test]
    fn th71_is_monotone_in_the_support(
        (f, pairs) in small_box().prop_flat_map(|f| {
            (Just(f), prop::collection::vec((partition_in(f), partition_in(f)), 1..6))
        })
    ) {
        let mut class = BiSchubertClass::zero(f);
        let mut seen_true = false;
        for (l, m) in pairs {
            // keep the class pure by only adding pairs of the first pair's total weight
            if let Some(c) = class.pure_codim() {
                if l.weight() + m.weight() != c {
                    continue;
                }
            }
            class.add_term(l, m, BigInt::from(1)).unwrap();
            let cert = check_th71(&Variety::new(class.clone()).unwrap()).unwrap();
            prop_assert!(!(seen_true && !cert.holds));
            prop_assert!(recheck_pair_witnesses(&cert, f).unwrap());
            seen_true |= cert.holds;
        }
    }
}

#[test]
fn cor73_routes_agree_exhaustively() {
    for f in boxes(9) {
        let all = f.partitions(None);
        for a in &all {
            for b in &all {
                let x = Variety::new(SchubertClass::basis(a.clone())).unwrap();
                let y = Variety::new(SchubertClass::basis(b.clone())).unwrap();
                let cert = check_cor73(&x, &y).expect("routes agree");
                assert!(witnesses_support_verdict(&cert));
                assert!(recheck_pair_witnesses(&cert, f).unwrap());
            }
        }
    }
}

#[test]
fn cor73_on_sums_matches_pairwise() {
    // with non-negative coefficients the product of sums is non-zero iff some
    // pair of summands is
    let f = PartitionBox::new(1, 3);
    let all = f.partitions(Some(2));
    let x = all
        .iter()
        .fold(SchubertClass::zero(f), |acc, p| acc.add(&SchubertClass::basis(p.clone())).unwrap());
    let xv = Variety::new(x).unwrap();
    let any = all.iter().any(|p| {
        check_cor73(&xv, &Variety::new(SchubertClass::basis(p.clone())).unwrap())
            .unwrap()
            .holds
    });
    assert_eq!(check_cor73(&xv, &xv).unwrap().holds, any);
}

#[test]
fn th84_routes_agree_on_sums() {
    let f = PartitionBox::new(2, 3);
    let w2 = f.partitions(Some(2));
    let class = w2
        .iter()
        .fold(SchubertClass::zero(f), |acc, p| acc.add(&SchubertClass::basis(p.clone())).unwrap());
    let v = Variety::new(class).unwrap();
    for ell in [vec![], vec![3], vec![3, 3], vec![3, 1], vec![2, 2, 1], vec![3, 3, 3]] {
        check_th84(&v, &ell).expect("routes agree");
    }
}

#[test]
fn delta_alternative_formula_and_weight_identity() {
    for f in boxes(12) {
        let w = f.width();
        for mu in f.partitions(None) {
            if mu.part(f.d() as usize) == w {
                continue;
            }
            for j in mu.descent_set() {
                let enlarged = mu.mu_j(j).unwrap();
                let dj = mu.delta_j(j).unwrap();
                if mu.part(j) < w {
                    let alt: i64 = (0..j)
                        .map(|i| mu.part(j) as i64 - mu.part(i) as i64 + 1)
                        .sum();
                    assert_eq!(dj, alt, "{mu} j={j}");
                    assert_eq!(
                        enlarged.weight() as i64,
                        mu.weight() as i64 + 1 + dj,
                        "{mu} j={j}"
                    );
                } else {
                    assert_eq!(dj, w as i64 - 1 - mu.part(j + 1) as i64);
                }
            }
        }
    }
}

#[test]
fn delta_range_is_bounded_and_attained() {
    for f in boxes(12) {
        let (d, w) = (f.d() as i64, f.width() as i64);
        let top = d.max(w - 1);
        let mut seen = std::collections::BTreeSet::new();
        for mu in f.partitions(None) {
            if mu.part(f.d() as usize) == f.width() {
                continue;
            }
            let delta = mu.delta();
            assert!((0..=top).contains(&delta), "{mu} in {f}: {delta}");
            seen.insert(delta);
        }
        if d >= 1 && w >= 2 {
            assert_eq!(seen, (0..=top).collect(), "box {f}");
        } else {
            // a single row or a single column: δ vanishes identically
            assert_eq!(seen, [0].into(), "box {f}");
        }
    }
}

fn space(dims: &[u32]) -> ProductSpace {
    ProductSpace::new(dims.to_vec()).unwrap()
}

/// `Π (a_k H_1 + b_k H_2)` over the given coefficient pairs.
fn complete_intersection(sp: &ProductSpace, forms: &[(i64, i64)]) -> MultiProjClass {
    let h1 = MultiProjClass::hyperplane(sp, 1).unwrap();
    let h2 = MultiProjClass::hyperplane(sp, 2).unwrap();
    forms.iter().fold(MultiProjClass::unit(sp), |acc, &(a, b)| {
        let lin = h1.scale(&BigInt::from(a)).add(&h2.scale(&BigInt::from(b))).unwrap();
        multiply_mp(&acc, &lin).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ample_complete_intersections_are_admissible_and_log_concave(
        a in 1u32..4, b in 1u32..4,
        forms in prop::collection::vec((1i64..4, 1i64..4), 0..5)
    ) {
        let sp = space(&[a, b]);
        let c = complete_intersection(&sp, &forms);
        prop_assume!(!c.is_zero());
        prop_assert!(support_admissible(&c).unwrap().holds);
        prop_assert!(hodge_check(&c).unwrap().holds);
    }

    #[test]
    fn kunneth_product_commutes_and_associates(
        terms in prop::collection::vec(
            prop::collection::vec((0u32..3, 0u32..3, -2i64..3), 0..4), 3)
    ) {
        let sp = space(&[2, 2]);
        let cs: Vec<MultiProjClass> = terms
            .iter()
            .map(|ts| {
                MultiProjClass::from_terms(
                    sp.clone(),
                    ts.iter().map(|&(x, y, k)| (MultiDegree(vec![x, y]), BigInt::from(k))),
                )
                .unwrap()
            })
            .collect();
        prop_assert_eq!(multiply_mp(&cs[0], &cs[1]).unwrap(), multiply_mp(&cs[1], &cs[0]).unwrap());
        let l = multiply_mp(&multiply_mp(&cs[0], &cs[1]).unwrap(), &cs[2]).unwrap();
        let r = multiply_mp(&cs[0], &multiply_mp(&cs[1], &cs[2]).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }
}
