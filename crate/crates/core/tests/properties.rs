use basephi::beatty::GbsParams;
use basephi::numeration::{
    normalize, phi_decode, phi_encode, zeck_decode, zeck_encode, RawExpansion,
};
use basephi::occurrence::{BlockKind, ClosedForm, OccurrenceReport};
use basephi::structure::phi_encode_recursive;
use basephi::{Big, DigitWord, ExpansionTable, PhiExpansion};
use proptest::prelude::*;

fn raw_digits(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..=2, 0..max_len)
}

proptest! {
    #[test]
    fn normalize_conserves_value(left in raw_digits(12), right in raw_digits(8)) {
        let raw = RawExpansion::new(DigitWord::new(left), DigitWord::new(right));
        let before = raw.value_doubled::<Big>();
        let e = normalize(&raw).unwrap();
        prop_assert_eq!(e.value_doubled::<Big>(), before);
        prop_assert!(e.left().is_admissible() && e.right().is_admissible());
    }

    #[test]
    fn digitwise_sum_normalizes_to_sum(a in 0i64..100_000, b in 0i64..100_000) {
        let (x, y) = (phi_encode_recursive(&a).unwrap(), phi_encode_recursive(&b).unwrap());
        let width = x.left().len().max(y.left().len());
        let depth = x.right().len().max(y.right().len());
        let left: Vec<u8> = (0..width)
            .map(|i| {
                let k = (width - 1 - i) as i64;
                x.digit(k) + y.digit(k)
            })
            .collect();
        let right: Vec<u8> = (1..=depth as i64).map(|k| x.digit(-k) + y.digit(-k)).collect();
        let raw = RawExpansion::new(DigitWord::new(left), DigitWord::new(right));
        prop_assert_eq!(normalize(&raw).unwrap(), phi_encode_recursive(&(a + b)).unwrap());
    }

    #[test]
    fn phi_round_trip(n in 0u64..200_000) {
        let e = phi_encode_recursive(&(n as i64)).unwrap();
        prop_assert_eq!(phi_decode::<i64>(&e).unwrap(), n as i64);
        let s = e.to_string();
        prop_assert_eq!(s.parse::<PhiExpansion>().unwrap(), e);
    }

    #[test]
    fn zeck_round_trip(n in 0i64..i64::MAX / 4) {
        let w = zeck_encode(&n).unwrap();
        prop_assert!(w.is_admissible());
        prop_assert_eq!(zeck_decode::<i64>(&w).unwrap(), n);
    }

    #[test]
    fn machine_and_big_agree(n in 0i64..1_000_000_000_000) {
        let small = phi_encode_recursive(&n).unwrap();
        let big = phi_encode_recursive(&Big::from(n)).unwrap();
        prop_assert_eq!(&small, &big);
        prop_assert_eq!(zeck_encode(&n).unwrap(), zeck_encode(&Big::from(n)).unwrap());
    }

    #[test]
    fn gbs_json_round_trip(p in -50i64..50, q in -50i64..50, r in -50i64..50, zero in any::<bool>()) {
        let v = if zero { GbsParams::new0(p, q, r) } else { GbsParams::new(p, q, r) };
        let s = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<GbsParams<i64>>(&s).unwrap(), v);
    }
}

#[test]
fn add_one_matches_recursion() {
    for n in 0..3000u64 {
        assert_eq!(
            phi_encode(n).unwrap(),
            phi_encode_recursive(&(n as i64)).unwrap()
        );
    }
}

#[test]
fn table_is_independent_of_jobs() {
    let a = ExpansionTable::build(50_000, 1).unwrap();
    for jobs in [2, 3, 7] {
        let b = ExpansionTable::build(50_000, jobs).unwrap();
        for n in (0..=50_000).step_by(97) {
            assert_eq!(a.packed(n), b.packed(n));
        }
    }
}

#[test]
fn report_json_round_trip() {
    let t = ExpansionTable::sequential(500).unwrap();
    let scanned = t.scan(&"00.1".parse().unwrap(), 500).unwrap();
    let r = OccurrenceReport::new(
        "00.1".into(),
        BlockKind::Central,
        500,
        scanned,
        Some(ClosedForm::gbs(GbsParams::new(3, 1, 1))),
    )
    .unwrap();
    assert!(r.is_match());
    let s = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<OccurrenceReport>(&s).unwrap(), r);
    let e: PhiExpansion = "1000.1001".parse().unwrap();
    assert_eq!(serde_json::to_string(&e).unwrap(), "\"1000.1001\"");
}
