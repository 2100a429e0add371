//! Slow reference enumeration: every tuple is generated from scratch and kept
//! if it passes the conditions written out by hand.

use std::collections::BTreeSet;

use twistroots::{DataSet, DataSetType};

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn conditions_hold(kind: DataSetType, n: i64, g0: i64, a: i64, b: i64, cones: &[(i64, i64)]) -> bool {
    let md = |x: i64| x.rem_euclid(n);
    if gcd(a, n) != 1 || gcd(b, n) != 1 {
        return false;
    }
    match kind {
        DataSetType::A => g0 >= 1 && (md(b + a) == md(a * b) || md(b - a) == md(a * b)),
        DataSetType::B => {
            g0 >= 0
                && md(b - a) == md(a * b)
                && md(a + b + cones.iter().map(|&(c, ni)| n / ni * c).sum::<i64>()) == 0
        }
    }
}

/// Non-decreasing sequences of `(order, c)` whose weights sum to `target`.
fn cone_lists(n: i64, target: i64, min: (i64, i64), acc: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
    if target == 0 {
        out.push(acc.clone());
        return;
    }
    for ni in (2..=n).filter(|d| n % d == 0) {
        let w = n - n / ni;
        if w > target {
            continue;
        }
        for c in 1..ni {
            if (ni, c) < min || gcd(c, ni) != 1 {
                continue;
            }
            acc.push((ni, c));
            cone_lists(n, target - w, (ni, c), acc, out);
            acc.pop();
        }
    }
}

/// All valid data sets whose genus parameter is `gp`.
pub fn naive_datasets(kind: DataSetType, gp: i64) -> BTreeSet<DataSet> {
    let genus = match kind {
        DataSetType::A => gp,
        DataSetType::B => 2 * gp,
    };
    let mut out = BTreeSet::new();
    // a loose degree cap, independent of the library's bound
    for n in (3..=4 * gp + 1).step_by(2) {
        let per_g0 = match kind {
            DataSetType::A => n,
            DataSetType::B => 2 * n,
        };
        for g0 in 0..=genus / per_g0 {
            let mut lists = Vec::new();
            cone_lists(n, genus - g0 * per_g0, (0, 0), &mut Vec::new(), &mut lists);
            for cones in lists {
                let cones: Vec<(i64, i64)> = cones.into_iter().map(|(ni, c)| (c, ni)).collect();
                if kind == DataSetType::B && g0 == 0 && cones.is_empty() {
                    continue;
                }
                for a in 1..n {
                    for b in 1..n {
                        if conditions_hold(kind, n, g0, a, b, &cones) {
                            out.insert(DataSet::new(kind, n, g0, a, b, cones.iter().copied()).unwrap());
                        }
                    }
                }
            }
        }
    }
    out
}
