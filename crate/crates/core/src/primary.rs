//! Primary data sets, where every cone point has order `n`.

use serde::{Deserialize, Serialize};

use crate::dataset::{DataSet, DataSetType};
use crate::enumeration::{residue_witness, shapes_for_degree};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimaryQuery {
    pub kind: DataSetType,
    pub n: i64,
    pub genus_param: i64,
}

impl PrimaryQuery {
    pub fn new(kind: DataSetType, n: i64, genus_param: i64) -> Self {
        PrimaryQuery {
            kind,
            n,
            genus_param,
        }
    }

    pub fn check(&self) -> Result<()> {
        check_degree(self.n)?;
        if !(0..=crate::enumeration::GENUS_CAP).contains(&self.genus_param) {
            return Err(Error::InvalidInput(format!(
                "genus parameter out of range: {}",
                self.genus_param
            )));
        }
        Ok(())
    }
}

fn check_degree(n: i64) -> Result<()> {
    if n < 3 || n % 2 == 0 || n > crate::arithmetic::INPUT_CAP {
        return Err(Error::InvalidInput(format!("degree must be odd and >= 3, got {n}")));
    }
    Ok(())
}

/// Pairs `(g0, m)` solving the primary genus equation, `g0` ascending.
fn primary_splits(q: &PrimaryQuery) -> Vec<(i64, i64)> {
    let n = q.n;
    // type A: g = g0 n + m (n-1); type B: 2g' = 2 g0 n + m (n-1)
    let (total, g0_min, step) = match q.kind {
        DataSetType::A => (q.genus_param, 1, n),
        DataSetType::B => (2 * q.genus_param, 0, 2 * n),
    };
    let mut out = Vec::new();
    let mut g0 = g0_min;
    while g0 * step <= total {
        let rest = total - g0 * step;
        if rest % (n - 1) == 0 {
            out.push((g0, rest / (n - 1)));
        }
        g0 += 1;
    }
    out
}

fn split_admissible(kind: DataSetType, n: i64, g0: i64, m: i64) -> bool {
    match kind {
        DataSetType::A => true,
        DataSetType::B => !(m == 1 && n % 3 == 0) && (g0, m) != (0, 0),
    }
}

/// Existence of a primary data set from the genus equation alone.
pub fn primary_exists_closed_form(q: PrimaryQuery) -> Result<bool> {
    q.check()?;
    Ok(primary_splits(&q)
        .into_iter()
        .any(|(g0, m)| split_admissible(q.kind, q.n, g0, m)))
}

/// Existence of a primary data set by residue search over primary shapes.
pub fn primary_exists_bruteforce(q: PrimaryQuery) -> Result<bool> {
    q.check()?;
    Ok(shapes_for_degree(q.kind, q.genus_param, q.n)
        .into_iter()
        .filter(|s| s.is_primary())
        .any(|s| residue_witness(q.kind, &s).is_some()))
}

/// Whether some valid data set of degree 3 exists.
pub fn degree3_exists(kind: DataSetType, genus_param: i64) -> bool {
    genus_param >= 0
        && shapes_for_degree(kind, genus_param, 3)
            .iter()
            .any(|s| residue_witness(kind, s).is_some())
}

/// The explicit primary data set with `m` cone points of order `n`.
pub fn construction_dataset(kind: DataSetType, n: i64, g0: i64, m: i64) -> Result<DataSet> {
    check_degree(n)?;
    if m < 0 || m > 1000 {
        return Err(Error::InvalidInput(format!("m out of range: {m}")));
    }
    match kind {
        DataSetType::A => {
            if g0 < 1 {
                return Err(Error::InvalidInput(format!("type A needs g0 >= 1, got {g0}")));
            }
            DataSet::new_valid(kind, n, g0, 2, 2, (0..m).map(|_| (4, n)))
        }
        DataSetType::B => {
            if g0 < 0 {
                return Err(Error::InvalidInput(format!("g0 must be >= 0, got {g0}")));
            }
            if (g0, m) == (0, 0) {
                return Err(Error::InvalidInput("type B needs g0 > 0 or m > 0".into()));
            }
            if m == 1 {
                if n % 3 == 0 {
                    return Err(Error::Unconstructible(format!(
                        "no primary type B data set with one cone point and 3 | n (n = {n})"
                    )));
                }
                let half = (n + 3) / 2;
                return DataSet::new_valid(kind, n, g0, half, -3, [(half, n)]);
            }
            // alternating -4, 4; for odd m the last three are -4, 2, 2
            let mut cs: Vec<i64> = (0..m).map(|i| if i % 2 == 0 { -4 } else { 4 }).collect();
            if m % 2 == 1 {
                cs[m as usize - 2] = 2;
                cs[m as usize - 1] = 2;
            }
            DataSet::new_valid(kind, n, g0, 2, -2, cs.into_iter().map(|c| (c, n)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DataSetType::{A, B};

    #[test]
    fn closed_form_examples() {
        assert!(!primary_exists_closed_form(PrimaryQuery::new(A, 3, 4)).unwrap());
        assert!(primary_exists_closed_form(PrimaryQuery::new(A, 3, 5)).unwrap());
        assert!(!primary_exists_closed_form(PrimaryQuery::new(B, 3, 1)).unwrap());
        assert!(primary_exists_closed_form(PrimaryQuery::new(A, 4, 5)).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert!(!primary_exists_bruteforce(PrimaryQuery::new(A, 5, 6)).unwrap());
        assert!(primary_exists_bruteforce(PrimaryQuery::new(B, 5, 2)).unwrap());
        assert!(primary_exists_bruteforce(PrimaryQuery::new(A, 3, 3)).unwrap());
    }

    #[test]
    fn degree_three() {
        assert!(degree3_exists(A, 3));
        assert!(!degree3_exists(A, 4));
        assert!(degree3_exists(B, 2));
    }

    #[test]
    fn constructions() {
        let ds = construction_dataset(A, 5, 1, 2).unwrap();
        assert_eq!(ds, DataSet::new(A, 5, 1, 2, 2, [(4, 5), (4, 5)]).unwrap());
        assert_eq!(ds.genus().unwrap(), 13);

        let ds = construction_dataset(B, 5, 0, 1).unwrap();
        assert_eq!(ds, DataSet::new(B, 5, 0, 4, 2, [(4, 5)]).unwrap());

        assert!(matches!(construction_dataset(B, 9, 0, 1), Err(Error::Unconstructible(_))));
        assert!(matches!(construction_dataset(B, 9, 0, 0), Err(Error::InvalidInput(_))));
        assert!(matches!(construction_dataset(A, 9, 0, 2), Err(Error::InvalidInput(_))));

        let ds = construction_dataset(B, 7, 1, 5).unwrap();
        let cs: Vec<i64> = ds.cones().iter().map(|c| c.c).collect();
        // -4 -4 4 2 2 reduced mod 7 and sorted
        assert_eq!(cs, vec![2, 2, 3, 3, 4]);
    }
}
