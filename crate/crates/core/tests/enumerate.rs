use drg_core::bounds::{check_array, RatioCap, RatioKind};
use drg_core::enumerate::{enumerate, prefix_rejection, EnumerationConstraints};
use drg_core::{IntersectionArray, Rational};
use proptest::prelude::*;

/// Every array with `b_0 = k`, `c_1 = 1` and remaining entries in `1..=k`.
fn all_arrays(k: u32, d: usize) -> Vec<IntersectionArray> {
    let free = 2 * (d - 1);
    let mut out = Vec::new();
    let mut digits = vec![1u32; free];
    loop {
        let mut b = vec![k];
        b.extend_from_slice(&digits[..d - 1]);
        let mut c = vec![1];
        c.extend_from_slice(&digits[d - 1..]);
        out.push(IntersectionArray::new(b, c).unwrap());
        let Some(i) = digits.iter().rposition(|&x| x < k) else { break };
        digits[i] += 1;
        digits[i + 1..].iter_mut().for_each(|x| *x = 1);
    }
    out
}

fn naive(cons: &EnumerationConstraints) -> Vec<IntersectionArray> {
    let opts = cons.check_options();
    let mut out: Vec<_> = (cons.k_min..=cons.k_max)
        .flat_map(|k| (cons.d_min..=cons.d_max).flat_map(move |d| all_arrays(k, d)))
        .filter(|a| cons.rules.admits(&check_array(a, &opts)))
        .collect();
    out.sort_by_key(|a| a.search_key());
    out
}

fn pruned(cons: &EnumerationConstraints) -> Vec<IntersectionArray> {
    enumerate(cons).unwrap().emitted.into_iter().map(|e| e.array).collect()
}

#[test]
fn pruned_search_equals_naive_filter() {
    let cons = EnumerationConstraints::new(3, 5, 1, 3);
    let want = naive(&cons);
    assert!(!want.is_empty());
    assert_eq!(pruned(&cons), want);
}

#[test]
fn pruned_search_equals_naive_filter_with_caps() {
    let two = Rational::from(2u64);
    for kind in [RatioKind::K2OverK, RatioKind::B2OverC2] {
        let cons = EnumerationConstraints::new(3, 6, 2, 3).with_ratio_cap(kind, two);
        assert_eq!(pruned(&cons), naive(&cons));
    }
    let mut cons = EnumerationConstraints::new(3, 4, 1, 4);
    cons.rules.spectral = false;
    cons.rules.absolute_bound = false;
    assert_eq!(pruned(&cons), naive(&cons));
}

#[test]
fn known_graphs_survive() {
    let got = pruned(&EnumerationConstraints::new(3, 5, 1, 5));
    for lit in ["{3,2;1,1}", "{4,3,2,1;1,2,3,4}", "{5,2,1;1,2,5}", "{3,2,2,1;1,1,2,3}", "{4,3,3;1,1,4}"] {
        let a: IntersectionArray = lit.parse().unwrap();
        assert!(got.contains(&a), "{lit}");
    }
}

fn arb_array() -> impl Strategy<Value = IntersectionArray> {
    (3u32..=9, 1usize..=5).prop_flat_map(|(k, d)| {
        (
            proptest::collection::vec(1..=k, d - 1),
            proptest::collection::vec(1..=k, d - 1),
        )
            .prop_map(move |(bs, cs)| {
                let mut b = vec![k];
                b.extend(bs);
                let mut c = vec![1];
                c.extend(cs);
                IntersectionArray::new(b, c).unwrap()
            })
    })
}

fn arb_cap() -> impl Strategy<Value = Option<RatioCap>> {
    prop_oneof![
        Just(None),
        (1i128..=12, 1i128..=4, any::<bool>()).prop_map(|(p, q, b2)| Some(RatioCap {
            kind: if b2 { RatioKind::B2OverC2 } else { RatioKind::K2OverK },
            cap: Rational::new(p, q).unwrap(),
        })),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    /// A prefix the search abandons never extends to an admitted array.
    #[test]
    fn prefix_pruning_is_sound(a in arb_array(), cap in arb_cap()) {
        if let Some(rule) = prefix_rejection(&a, cap) {
            let mut cons = EnumerationConstraints::new(3, 9, 1, 5);
            cons.ratio_cap = cap;
            let rep = check_array(&a, &cons.check_options());
            prop_assert!(!cons.rules.admits(&rep), "{a} pruned by {rule} but admitted");
            prop_assert!(cons.rules.filters(rule));
        }
    }

    #[test]
    fn search_key_round_trips(a in arb_array()) {
        prop_assert_eq!(IntersectionArray::from_search_key(&a.search_key()), Some(a));
    }
}
