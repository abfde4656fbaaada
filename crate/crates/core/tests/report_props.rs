use latticeqm::report::{emit, parse_json, render, sort_records, to_json, CheckRecord, Format};
use latticeqm::Error;
use proptest::prelude::*;

fn record() -> impl Strategy<Value = CheckRecord> {
    (
        prop::sample::select(vec!["weyl", "poly", "dirac"]),
        prop::sample::select(vec!["kernel", "gram", "ladder"]),
        prop::collection::btree_map("[a-z]{1,3}", "[0-9a-z/]{1,4}", 0..3),
        prop_oneof![
            any::<f64>()
                .prop_filter("finite", |v| v.is_finite())
                .prop_map(f64::abs),
            Just(f64::NAN)
        ],
        1e-16..1.0f64,
    )
        .prop_map(|(s, c, p, r, t)| CheckRecord::new(s, c, p, r, t))
}

proptest! {
    #[test]
    fn pass_means_residual_within_threshold(r in record()) {
        prop_assert_eq!(r.pass, r.residual <= r.threshold);
    }

    #[test]
    fn json_round_trips(mut recs in prop::collection::vec(record(), 1..8)) {
        sort_records(&mut recs);
        let back = parse_json(&to_json(&recs)).unwrap();
        prop_assert_eq!(back.len(), recs.len());
        for (a, b) in recs.iter().zip(&back) {
            prop_assert_eq!((&a.suite, &a.check, &a.params, a.pass), (&b.suite, &b.check, &b.params, b.pass));
            prop_assert_eq!(a.threshold.to_bits(), b.threshold.to_bits());
            prop_assert!(a.residual.to_bits() == b.residual.to_bits() || (a.residual.is_nan() && b.residual.is_nan()));
        }
    }

    #[test]
    fn sorting_is_idempotent(mut recs in prop::collection::vec(record(), 0..12)) {
        sort_records(&mut recs);
        let once = render(&recs, Format::Csv);
        sort_records(&mut recs);
        prop_assert_eq!(once, render(&recs, Format::Csv));
    }
}

#[test]
fn emit_writes_the_rendered_report() {
    let dir = tempfile::tempdir().unwrap();
    let recs = vec![CheckRecord::new(
        "weyl",
        "commutation",
        [("N".into(), "4".into())],
        0.0,
        1e-12,
    )];
    for format in [Format::Csv, Format::Json] {
        let path = dir.path().join(format!("r.{}", format.extension()));
        emit(&recs, format, &path).unwrap();
        assert_eq!(
            std::fs::read_to_string(&path).unwrap(),
            render(&recs, format)
        );
    }
    assert!(matches!(
        emit(&[], Format::Csv, &dir.path().join("x.csv")),
        Err(Error::Usage(_))
    ));
    let missing = dir.path().join("no/such/dir/r.csv");
    assert!(matches!(
        emit(&recs, Format::Csv, &missing),
        Err(Error::Io { .. })
    ));
}
