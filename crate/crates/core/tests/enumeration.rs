mod common;

use std::collections::BTreeSet;

use common::naive_datasets;
use twistroots::enumeration::find_dataset;
use twistroots::{enumerate_classes, enumerate_datasets, root_exists, root_exists_closed_form, DataSetType, GenusQuery};

fn check_against_oracle(kind: DataSetType, gp: i64) {
    let listed: Vec<_> = enumerate_datasets(GenusQuery::new(kind, gp)).unwrap().collect();
    let as_set: BTreeSet<_> = listed.iter().cloned().collect();
    assert_eq!(as_set.len(), listed.len(), "{kind} {gp}: duplicates in enumeration");
    assert!(listed.iter().all(|d| d.is_valid()));
    let oracle = naive_datasets(kind, gp);
    assert_eq!(as_set, oracle, "{kind} {gp}");

    let classes = enumerate_classes(GenusQuery::new(kind, gp)).unwrap();
    let oracle_classes: BTreeSet<_> = oracle.iter().map(|d| d.canonical_form().unwrap()).collect();
    assert_eq!(classes.into_iter().collect::<BTreeSet<_>>(), oracle_classes);
}

#[test]
fn type_a_matches_naive_listing() {
    for g in 1..=30 {
        check_against_oracle(DataSetType::A, g);
    }
}

#[test]
fn type_b_matches_naive_listing() {
    for gp in 0..=15 {
        check_against_oracle(DataSetType::B, gp);
    }
}

#[test]
fn degree_filter_restricts_listing() {
    let q = GenusQuery::new(DataSetType::B, 6).with_degree(9);
    let listed: BTreeSet<_> = enumerate_datasets(q).unwrap().collect();
    let expected: BTreeSet<_> = naive_datasets(DataSetType::B, 6).into_iter().filter(|d| d.n() == 9).collect();
    assert!(!expected.is_empty());
    assert_eq!(listed, expected);
}

#[test]
fn existence_matches_closed_form() {
    for g in 0..=200 {
        assert_eq!(root_exists(DataSetType::A, g).unwrap(), root_exists_closed_form(DataSetType::A, g), "A {g}");
    }
    for gp in 0..=100 {
        assert_eq!(root_exists(DataSetType::B, gp).unwrap(), root_exists_closed_form(DataSetType::B, gp), "B {gp}");
    }
    assert!(!root_exists(DataSetType::A, 4).unwrap());
    assert!(!root_exists(DataSetType::B, 1).unwrap());
    let w = find_dataset(GenusQuery::new(DataSetType::B, 2)).unwrap().unwrap();
    assert_eq!(w.genus_param().unwrap(), 2);
}
