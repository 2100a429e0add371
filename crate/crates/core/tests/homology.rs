use twistroots::homology::{enumerate_orthogonal, find_square_root, psi_twist_a1, psi_twist_b};
use twistroots::F2Matrix;

/// Every `g × g` bit matrix, filtered by `xᵀx = I` computed entry by entry.
fn naive_orthogonal(g: usize) -> Vec<F2Matrix> {
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << (g * g)) {
        let entry = |i: usize, j: usize| (bits >> (i * g + j)) & 1;
        let ok = (0..g).all(|j| {
            (0..g).all(|k| {
                let dot: u64 = (0..g).map(|i| entry(i, j) * entry(i, k)).sum();
                dot % 2 == u64::from(j == k)
            })
        });
        if ok {
            let rows = (0..g).map(|i| (0..g).fold(0, |r, j| r | (entry(i, j) << j))).collect();
            out.push(F2Matrix::from_rows(g, rows).unwrap());
        }
    }
    out
}

#[test]
fn enumeration_matches_naive_filter() {
    for g in 1..=4 {
        let mut fast: Vec<F2Matrix> = enumerate_orthogonal(g).unwrap().collect();
        assert!(fast.iter().all(F2Matrix::is_orthogonal));
        let mut slow = naive_orthogonal(g);
        let key = |m: &F2Matrix| m.rows().to_vec();
        fast.sort_by_key(key);
        slow.sort_by_key(key);
        assert_eq!(fast, slow, "g = {g}");
    }
}

#[test]
fn group_orders() {
    // |O_n(F_2)| for the standard form
    let expected = [1usize, 2, 6, 48, 720, 23040];
    for (g, &count) in (1..=6).zip(expected.iter()) {
        assert_eq!(enumerate_orthogonal(g).unwrap().count(), count, "g = {g}");
    }
}

#[test]
fn twists_are_orthogonal() {
    for g in 2..=8 {
        assert!(psi_twist_a1(g).unwrap().is_orthogonal());
        if g % 2 == 0 {
            assert!(psi_twist_b(g).unwrap().is_orthogonal());
        }
    }
}

#[test]
fn twists_have_no_square_roots() {
    for g in 2..=6 {
        assert_eq!(find_square_root(&psi_twist_a1(g).unwrap()).unwrap(), None, "a1, g = {g}");
    }
    for g in [2, 4, 6] {
        assert_eq!(find_square_root(&psi_twist_b(g).unwrap()).unwrap(), None, "b, g = {g}");
    }
}

#[test]
fn squares_are_recognized() {
    for g in 1..=4 {
        for m in enumerate_orthogonal(g).unwrap() {
            let sq = m.multiply(&m).unwrap();
            let root = find_square_root(&sq).unwrap().expect("m itself is a root");
            assert_eq!(root.multiply(&root).unwrap(), sq);
        }
    }
}

#[test]
fn commuting_with_twist_forces_symmetry() {
    let mut premise_held = 0;
    for g in 2..=4 {
        let a = psi_twist_a1(g).unwrap();
        // orthogonal P: the premise is P^2 = A, which never happens
        for p in enumerate_orthogonal(g).unwrap() {
            assert_ne!(a.multiply(&p.transpose()).unwrap(), p);
        }
        // the symmetry step does not need orthogonality
        for bits in 0u64..(1 << (g * g)) {
            let rows = (0..g).map(|i| (bits >> (i * g)) & ((1 << g) - 1)).collect();
            let p = F2Matrix::from_rows(g, rows).unwrap();
            if a.multiply(&p.transpose()).unwrap() == p {
                premise_held += 1;
                assert!(p.is_symmetric(), "{p}");
            }
        }
    }
    assert!(premise_held > 0);
}
