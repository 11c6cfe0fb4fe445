use ci_quasigroup::io::{compute_expectation, parse_expectations};
use ci_quasigroup::search::{enumerate_classes, Mode, SearchConfig};

const EXPECTATIONS: &str = include_str!("../data/expectations.txt");

#[test]
fn expectations_file_matches_engine() {
    let expected = parse_expectations(EXPECTATIONS).unwrap();
    assert!(!expected.is_empty());
    for e in expected {
        let config = SearchConfig::new(e.order, e.mode).workers(2);
        let got = compute_expectation(&config).unwrap();
        assert_eq!(got.to_string(), e.to_string());
    }
}

#[test]
fn class_sizes_sum_to_pair_count() {
    for n in 1..=4 {
        let config = SearchConfig::new(n, Mode::Propagate);
        let classes = enumerate_classes(&config).unwrap();
        let total: usize = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, ci_quasigroup::enumerate(&config).unwrap().len());
    }
}

#[test]
fn order_two_is_a_single_class() {
    // Relabeling Z2 by the swap gives x·y = x + y + 1.
    let classes = enumerate_classes(&SearchConfig::new(2, Mode::Oracle)).unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].size, 2);
}

#[test]
fn order_three_classes() {
    let classes = enumerate_classes(&SearchConfig::new(3, Mode::Oracle)).unwrap();
    let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
    assert_eq!(sizes.iter().sum::<usize>(), 6);
    assert_eq!(classes.len(), 3);
}
