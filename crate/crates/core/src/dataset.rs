//! The data-set model: validation, genus and equivalence classes.
//!
//! A data set `(n, g0, (a, b); (c_1, n_1), ..., (c_m, n_m))` records the
//! quotient orbifold of the cyclic action induced by a root of degree `n`:
//! `g0` is the orbifold genus, `a` and `b` encode the rotation data at the two
//! distinguished fixed points and each `(c_i, n_i)` is a further cone point.
//! Type A data sets come from twists whose complement is nonorientable, type B
//! from twists with orientable complement.
//!
//! Cone points are kept sorted by `(n_i, c_i)`, so reordering cones is a
//! normalization rather than an equivalence move.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{gcd, rem, INPUT_CAP};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DataSetType {
    A,
    B,
}

impl fmt::Display for DataSetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DataSetType::A => "A",
            DataSetType::B => "B",
        })
    }
}

impl std::str::FromStr for DataSetType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(DataSetType::A),
            "B" | "b" => Ok(DataSetType::B),
            other => Err(Error::InvalidInput(format!("unknown data set type {other:?}"))),
        }
    }
}

/// A cone point `(c, n_i)`: residue `c` modulo the cone order `n_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConePoint {
    pub c: i64,
    #[serde(rename = "ni")]
    pub order: i64,
}

impl Ord for ConePoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order, self.c).cmp(&(other.order, other.c))
    }
}

impl PartialOrd for ConePoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl ConePoint {
    pub fn new(c: i64, order: i64) -> Self {
        ConePoint {
            c: rem(c, order),
            order,
        }
    }
}

/// Conditions a data set can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    D1,
    D2,
    D3A,
    D3B,
    D4B,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::D1 => "D1",
            Condition::D2 => "D2",
            Condition::D3A => "D3A",
            Condition::D3B => "D3B",
            Condition::D4B => "D4B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Condition>,
}

#[derive(Deserialize)]
struct RawDataSet {
    #[serde(rename = "type")]
    kind: DataSetType,
    n: i64,
    g0: i64,
    a: i64,
    b: i64,
    cones: Vec<RawCone>,
}

#[derive(Deserialize)]
struct RawCone {
    c: i64,
    ni: i64,
}

/// A data set of either type.
///
/// Residues are stored reduced and cones sorted; the derived order compares
/// `(type, n, g0, a, b, cones)` lexicographically, which is the order used to
/// pick canonical representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDataSet")]
pub struct DataSet {
    #[serde(rename = "type")]
    kind: DataSetType,
    n: i64,
    g0: i64,
    a: i64,
    b: i64,
    cones: Vec<ConePoint>,
}

impl TryFrom<RawDataSet> for DataSet {
    type Error = Error;

    fn try_from(raw: RawDataSet) -> Result<Self> {
        DataSet::new(
            raw.kind,
            raw.n,
            raw.g0,
            raw.a,
            raw.b,
            raw.cones.into_iter().map(|c| (c.c, c.ni)),
        )
    }
}

impl DataSet {
    /// Builds a data set from raw integers, reducing residues and sorting the
    /// cones. Only structural sanity is checked here (positive moduli, bounded
    /// sizes); the data-set conditions are checked by [`DataSet::validate`].
    pub fn new(
        kind: DataSetType,
        n: i64,
        g0: i64,
        a: i64,
        b: i64,
        cones: impl IntoIterator<Item = (i64, i64)>,
    ) -> Result<Self> {
        if !(1..=INPUT_CAP).contains(&n) {
            return Err(Error::InvalidInput(format!("degree out of range: {n}")));
        }
        if g0.abs() > INPUT_CAP {
            return Err(Error::InvalidInput(format!("g0 out of range: {g0}")));
        }
        let mut cs = Vec::new();
        for (c, order) in cones {
            if !(1..=INPUT_CAP).contains(&order) {
                return Err(Error::InvalidInput(format!("cone order out of range: {order}")));
            }
            cs.push(ConePoint::new(c, order));
        }
        cs.sort_unstable();
        Ok(DataSet {
            kind,
            n,
            g0,
            a: rem(a, n),
            b: rem(b, n),
            cones: cs,
        })
    }

    /// Like [`DataSet::new`] but rejects anything that fails validation.
    pub fn new_valid(
        kind: DataSetType,
        n: i64,
        g0: i64,
        a: i64,
        b: i64,
        cones: impl IntoIterator<Item = (i64, i64)>,
    ) -> Result<Self> {
        let ds = DataSet::new(kind, n, g0, a, b, cones)?;
        ds.ensure_valid()?;
        Ok(ds)
    }

    pub(crate) fn from_sorted_parts(
        kind: DataSetType,
        n: i64,
        g0: i64,
        a: i64,
        b: i64,
        cones: Vec<ConePoint>,
    ) -> Self {
        debug_assert!(cones.windows(2).all(|w| w[0] <= w[1]));
        DataSet {
            kind,
            n,
            g0,
            a,
            b,
            cones,
        }
    }

    pub fn kind(&self) -> DataSetType {
        self.kind
    }

    /// The degree of the root.
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn g0(&self) -> i64 {
        self.g0
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn cones(&self) -> &[ConePoint] {
        &self.cones
    }

    /// Cone orders `n_i`, ascending.
    pub fn orders(&self) -> Vec<i64> {
        self.cones.iter().map(|c| c.order).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut violations = Vec::new();

        let divides = self.cones.iter().all(|c| c.order > 1 && n % c.order == 0);
        if n <= 1 || n % 2 == 0 || !divides {
            violations.push(Condition::D1);
        }

        let units = gcd(self.a, n) == 1
            && gcd(self.b, n) == 1
            && self.cones.iter().all(|c| gcd(c.c, c.order) == 1);
        if !units {
            violations.push(Condition::D2);
        }

        let (a, b) = (self.a, self.b);
        let minus = rem(b - a - a * b, n) == 0;
        match self.kind {
            DataSetType::A => {
                let plus = rem(b + a - a * b, n) == 0;
                if self.g0 < 1 || !(plus || minus) {
                    violations.push(Condition::D3A);
                }
            }
            DataSetType::B => {
                if self.g0 < 0 || !minus {
                    violations.push(Condition::D3B);
                }
                let balanced = divides
                    && rem(
                        self.cones
                            .iter()
                            .fold(a + b, |acc, c| rem(acc + (n / c.order) * c.c, n)),
                        n,
                    ) == 0;
                if !balanced {
                    violations.push(Condition::D4B);
                }
            }
        }

        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.valid {
            Ok(())
        } else {
            Err(Error::InvalidDataSet(report.violations))
        }
    }

    /// `g0 n + Σ (n/n_i)(n_i - 1)` for type A; type B counts `g0 n` twice.
    ///
    /// For type B this is the full genus `g = 2g'`.
    pub fn genus(&self) -> Result<i64> {
        self.ensure_valid()?;
        Ok(self.genus_unchecked())
    }

    pub(crate) fn genus_unchecked(&self) -> i64 {
        let base = match self.kind {
            DataSetType::A => self.g0 * self.n,
            DataSetType::B => 2 * self.g0 * self.n,
        };
        base + self
            .cones
            .iter()
            .map(|c| (self.n / c.order) * (c.order - 1))
            .sum::<i64>()
    }

    /// The genus parameter used by the existence and degree formulas: `g` for
    /// type A and `g' = g / 2` for type B.
    pub fn genus_param(&self) -> Result<i64> {
        let g = self.genus()?;
        Ok(match self.kind {
            DataSetType::A => g,
            DataSetType::B => g / 2,
        })
    }

    fn with_residues(&self, a: i64, b: i64, cones: Vec<ConePoint>) -> DataSet {
        let mut cones = cones;
        cones.sort_unstable();
        DataSet {
            kind: self.kind,
            n: self.n,
            g0: self.g0,
            a: rem(a, self.n),
            b: rem(b, self.n),
            cones,
        }
    }

    /// Data sets one equivalence move away.
    fn moves(&self) -> Vec<DataSet> {
        let n = self.n;
        let (a, b) = (self.a, self.b);
        let mut out = Vec::new();
        match self.kind {
            DataSetType::B => {
                let flipped = self
                    .cones
                    .iter()
                    .map(|c| ConePoint::new(-c.c, c.order))
                    .collect();
                out.push(self.with_residues(-b, -a, flipped));
            }
            DataSetType::A => {
                if rem(b + a - a * b, n) == 0 {
                    out.push(self.with_residues(b, a, self.cones.clone()));
                }
                if rem(b - a - a * b, n) == 0 {
                    out.push(self.with_residues(-b, -a, self.cones.clone()));
                }
                out.push(self.with_residues(a, -b, self.cones.clone()));
                for i in 0..self.cones.len() {
                    if i > 0 && self.cones[i] == self.cones[i - 1] {
                        continue;
                    }
                    let mut cones = self.cones.clone();
                    cones[i] = ConePoint::new(-cones[i].c, cones[i].order);
                    out.push(self.with_residues(a, b, cones));
                }
            }
        }
        out
    }

    /// Every data set equivalent to this one, in canonical order.
    pub fn equivalence_orbit(&self) -> Result<BTreeSet<DataSet>> {
        self.ensure_valid()?;
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(ds) = queue.pop_front() {
            for next in ds.moves() {
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }

    /// The least member of the equivalence orbit.
    pub fn canonical_form(&self) -> Result<DataSet> {
        Ok(self
            .equivalence_orbit()?
            .into_iter()
            .next()
            .expect("orbit contains the data set itself"))
    }

    pub fn is_equivalent(&self, other: &DataSet) -> Result<bool> {
        are_equivalent(self, other)
    }

    pub fn is_primary(&self) -> Result<bool> {
        self.ensure_valid()?;
        Ok(self.cones.iter().all(|c| c.order == self.n))
    }
}

/// Invalid tuples are equivalent to nothing.
pub fn are_equivalent(x: &DataSet, y: &DataSet) -> Result<bool> {
    if x.kind != y.kind {
        return Err(Error::TypeMismatch);
    }
    if !x.is_valid() || !y.is_valid() {
        return Ok(false);
    }
    // moves never change n, g0 or the cone orders
    if x.n != y.n || x.g0 != y.g0 || x.orders() != y.orders() {
        return Ok(false);
    }
    Ok(x.canonical_form()? == y.canonical_form()?)
}

impl fmt::Display for DataSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{},({},{});", self.kind, self.n, self.g0, self.a, self.b)?;
        for (i, c) in self.cones.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", c.c, c.order)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DataSetType::{A, B};

    fn ds(kind: DataSetType, n: i64, g0: i64, a: i64, b: i64, cones: &[(i64, i64)]) -> DataSet {
        DataSet::new(kind, n, g0, a, b, cones.iter().copied()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(ds(A, 5, 1, 2, 2, &[]).validate().valid);

        let r = ds(B, 3, 0, 2, 1, &[(1, 3)]).validate();
        assert_eq!(r.violations, vec![Condition::D4B]);

        let r = ds(A, 4, 1, 1, 1, &[]).validate();
        assert!(!r.valid);
        assert!(r.violations.contains(&Condition::D1));
        assert!(r.violations.contains(&Condition::D3A));
    }

    #[test]
    fn validate_flags_each_condition() {
        // cone order not dividing n
        assert_eq!(ds(A, 9, 1, 2, 2, &[(1, 5)]).validate().violations, vec![Condition::D1]);
        // non-unit cone residue
        assert_eq!(ds(A, 9, 1, 2, 2, &[(3, 9)]).validate().violations, vec![Condition::D2]);
        // type A needs g0 >= 1
        assert_eq!(ds(A, 5, 0, 2, 2, &[]).validate().violations, vec![Condition::D3A]);
        // (2,2) only satisfies the plus branch, type B needs the minus one
        assert_eq!(
            ds(B, 5, 1, 2, 2, &[]).validate().violations,
            vec![Condition::D3B, Condition::D4B]
        );
        assert!(ds(B, 5, 1, 2, 3, &[]).validate().valid);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(ds(A, 3, 4, 2, 2, &[(1, 3), (1, 3)]).genus().unwrap(), 16);
        assert_eq!(ds(B, 9, 0, 8, 4, &[(2, 3)]).genus().unwrap(), 6);
        assert_eq!(ds(B, 9, 0, 8, 4, &[(2, 3)]).genus_param().unwrap(), 3);
        assert_eq!(ds(A, 3, 1, 2, 2, &[]).genus().unwrap(), 3);
        assert!(matches!(
            ds(A, 4, 1, 1, 1, &[]).genus(),
            Err(Error::InvalidDataSet(_))
        ));
    }

    #[test]
    fn orbit_examples() {
        let orbit = ds(A, 3, 1, 2, 2, &[]).equivalence_orbit().unwrap();
        assert!(orbit.contains(&ds(A, 3, 1, 2, 1, &[])));
        assert_eq!(orbit.len(), 2);

        let orbit = ds(B, 5, 1, 2, 3, &[]).equivalence_orbit().unwrap();
        assert_eq!(orbit.len(), 1);

        let orbit = ds(A, 5, 2, 2, 2, &[(1, 5)]).equivalence_orbit().unwrap();
        assert!(orbit.iter().any(|d| d.cones() == [ConePoint::new(4, 5)]));
    }

    #[test]
    fn canonical_examples() {
        let x = ds(A, 3, 1, 2, 2, &[]);
        assert_eq!(x.canonical_form().unwrap(), ds(A, 3, 1, 2, 1, &[]));
        let y = ds(B, 5, 1, 2, 3, &[]);
        assert_eq!(y.canonical_form().unwrap(), y);
        let c = x.canonical_form().unwrap();
        assert_eq!(c.canonical_form().unwrap(), c);
    }

    #[test]
    fn equivalence_examples() {
        assert!(are_equivalent(&ds(A, 3, 1, 2, 2, &[]), &ds(A, 3, 1, 2, 1, &[])).unwrap());
        assert!(are_equivalent(
            &ds(B, 3, 0, 2, 1, &[(1, 3), (2, 3)]),
            &ds(B, 3, 0, 2, 1, &[(2, 3), (1, 3)])
        )
        .unwrap());
        assert!(!are_equivalent(&ds(A, 5, 1, 2, 2, &[]), &ds(A, 5, 1, 1, 3, &[])).unwrap());
        assert_eq!(
            are_equivalent(&ds(A, 5, 1, 2, 2, &[]), &ds(B, 5, 1, 2, 3, &[])),
            Err(Error::TypeMismatch)
        );
    }

    #[test]
    fn type_a_moves_respect_branches() {
        // (2,3) mod 5 satisfies only b - a = ab; swapping would break D3A
        let x = ds(A, 5, 1, 2, 3, &[]);
        assert!(x.is_valid());
        for y in x.equivalence_orbit().unwrap() {
            assert!(y.is_valid(), "{y}");
        }
    }

    #[test]
    fn display_form() {
        assert_eq!(
            ds(A, 3, 4, 2, 2, &[(1, 3), (1, 3)]).to_string(),
            "A(3,4,(2,2);(1,3),(1,3))"
        );
    }

    #[test]
    fn json_shape() {
        let x = ds(B, 3, 0, 2, 1, &[(2, 3), (1, 3)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"type":"B","n":3,"g0":0,"a":2,"b":1,"cones":[{"c":1,"ni":3},{"c":2,"ni":3}]}"#
        );
        let back: DataSet = serde_json::from_str(
            r#"{"type":"B","n":3,"g0":0,"a":5,"b":1,"cones":[{"c":2,"ni":3},{"c":4,"ni":3}]}"#,
        )
        .unwrap();
        assert_eq!(back, x);
    }
}
