mod common;

use common::naive_datasets;
use twistroots::max_degree::{bruteforce_sweep, exceptional_table};
use twistroots::{
    are_equivalent, caseb_census, max_degree_bruteforce, max_degree_closed_form, CaseId, DataSet,
    DataSetType, DegreeBound,
};

#[test]
fn search_matches_naive_maximum() {
    for (kind, limit) in [(DataSetType::A, 30), (DataSetType::B, 15)] {
        for gp in 0..=limit {
            let naive = naive_datasets(kind, gp).iter().map(|d| d.n()).max();
            let r = max_degree_bruteforce(kind, gp).unwrap();
            assert_eq!(r.exact(), naive, "{kind} {gp}");
            if let Some(w) = r.witness {
                assert!(w.is_valid());
                assert_eq!(w.genus_param().unwrap(), gp);
                assert_eq!(Some(w.n()), naive);
            }
        }
    }
}

#[test]
fn closed_form_brackets_search() {
    for kind in [DataSetType::A, DataSetType::B] {
        for r in bruteforce_sweep(kind, 250).unwrap() {
            let cf = max_degree_closed_form(kind, r.genus_param).unwrap();
            match r.exact() {
                None => assert_eq!(cf.bound, DegreeBound::NoRoot),
                Some(n) => assert!(cf.bound.admits(n), "{kind} {}: {} vs {n}", r.genus_param, cf.bound),
            }
        }
    }
}

#[test]
fn decisive_cases_are_exact() {
    let r = max_degree_closed_form(DataSetType::B, 23).unwrap();
    assert_eq!((r.case_id, r.bound), (CaseId::B(10), DegreeBound::Exact { n: 47 }));
    let r = max_degree_closed_form(DataSetType::B, 9).unwrap();
    assert_eq!((r.case_id, r.bound), (CaseId::B(1), DegreeBound::Exact { n: 27 }));
    let r = max_degree_closed_form(DataSetType::A, 268).unwrap();
    assert_eq!((r.case_id, r.bound), (CaseId::A(5), DegreeBound::Exact { n: 67 }));
    let r = max_degree_closed_form(DataSetType::A, 52).unwrap();
    assert_eq!(r.case_id, CaseId::A(4));
    assert_eq!(r.bound.lower(), Some(15));
}

#[test]
fn exceptional_rows_to_500() {
    let printed = [
        (16, DataSet::new(DataSetType::A, 3, 4, 2, 2, [(1, 3), (1, 3)]).unwrap()),
        (256, DataSet::new(DataSetType::A, 45, 4, 2, 2, [(1, 9), (1, 5)]).unwrap()),
        (304, DataSet::new(DataSetType::A, 63, 2, 2, 2, [(1, 63), (1, 63), (1, 7)]).unwrap()),
    ];
    let rows = exceptional_table(500).unwrap();
    let gs: Vec<i64> = rows.iter().map(|r| r.g).collect();
    assert_eq!(gs, [16, 48, 64, 112, 144, 192, 256, 304, 336, 496]);
    for (g, ds) in printed {
        let row = rows.iter().find(|r| r.g == g).unwrap();
        assert_eq!(row.n, ds.n());
        assert!(are_equivalent(&row.witness, &ds).unwrap());
        assert_eq!(row.case_id, CaseId::A(6));
    }
}

#[test]
fn census_small_limit() {
    let c = caseb_census(100).unwrap();
    assert!(c.case12_n_eq_g_plus_1.iter().all(|g| [4, 16, 64].contains(g)));
    assert!(c.case11_n_eq_g.len() <= c.case11.len());
    assert!(caseb_census(2001).is_err());
}
