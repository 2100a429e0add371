//! Maximal root degree per genus: exhaustive search and the closed-form case
//! analysis, plus the two census tables built on top of them.
//!
//! The closed form is a strict cascade. Each type has an ordered list of
//! cases and a genus falls into the first case whose guard holds, so "does not
//! satisfy the earlier cases" is implied by the evaluation order.

use std::cmp::Reverse;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arithmetic::{
    divisors, is_prime, solve_composite_system, solve_simple_system, split_two,
};
use crate::dataset::{DataSet, DataSetType};
use crate::enumeration::{orders_fill, residue_witness, shapes_for_degree, GenusQuery, Shape};
use crate::error::{Error, Result};

/// Sweeps and tables refuse limits above this.
pub const TABLE_LIMIT_CAP: i64 = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeBound {
    Exact { n: i64 },
    Bounds { lower: i64, upper: i64 },
    NoRoot,
}

impl DegreeBound {
    /// Whether `n` is consistent with this bound.
    pub fn admits(&self, n: i64) -> bool {
        match *self {
            DegreeBound::Exact { n: e } => e == n,
            DegreeBound::Bounds { lower, upper } => lower <= n && n <= upper,
            DegreeBound::NoRoot => false,
        }
    }

    /// The exact value, or the lower bound.
    pub fn lower(&self) -> Option<i64> {
        match *self {
            DegreeBound::Exact { n } => Some(n),
            DegreeBound::Bounds { lower, .. } => Some(lower),
            DegreeBound::NoRoot => None,
        }
    }
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeBound::Exact { n } => write!(f, "Exact({n})"),
            DegreeBound::Bounds { lower, upper } => write!(f, "Bounds({lower}, {upper})"),
            DegreeBound::NoRoot => f.write_str("NoRoot"),
        }
    }
}

/// Which rule produced a result: a numbered case of the type A or type B
/// analysis, the exhaustive search, or none when no root exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    A(u8),
    B(u8),
    Search,
    NoRoot,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::A(i) => write!(f, "A{i}"),
            CaseId::B(i) => write!(f, "B{i}"),
            CaseId::Search => f.write_str("search"),
            CaseId::NoRoot => f.write_str("none"),
        }
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxDegreeResult {
    pub kind: DataSetType,
    pub genus_param: i64,
    pub bound: DegreeBound,
    pub case_id: CaseId,
    /// A valid data set of degree `N` (or of the lower bound).
    pub witness: Option<DataSet>,
    /// The searched maximum, when attached to a closed-form result.
    pub resolved: Option<i64>,
}

impl MaxDegreeResult {
    fn no_root(kind: DataSetType, genus_param: i64) -> Self {
        MaxDegreeResult {
            kind,
            genus_param,
            bound: DegreeBound::NoRoot,
            case_id: CaseId::NoRoot,
            witness: None,
            resolved: None,
        }
    }

    /// The exact maximum if known, from the bound or from an attached search.
    pub fn exact(&self) -> Option<i64> {
        match self.bound {
            DegreeBound::Exact { n } => Some(n),
            _ => self.resolved,
        }
    }

    /// Attaches a searched maximum to a bounds result.
    pub fn with_resolved(mut self, searched: &MaxDegreeResult) -> Self {
        if let DegreeBound::Exact { n } = searched.bound {
            self.resolved = Some(n);
        }
        self
    }
}

fn check_genus(genus_param: i64) -> Result<()> {
    if !(0..=crate::enumeration::GENUS_CAP).contains(&genus_param) {
        return Err(Error::InvalidInput(format!(
            "genus parameter out of range: {genus_param}"
        )));
    }
    Ok(())
}

/// Preference among maximal shapes when picking a witness: larger orbifold
/// genus first, then fewer distinct cone orders, then smaller cone orders
/// compared from the largest down.
fn witness_key(shape: &Shape) -> (Reverse<i64>, usize, Vec<Reverse<Reverse<i64>>>) {
    let mut distinct = shape.orders.clone();
    distinct.dedup();
    let desc = shape.orders.iter().rev().map(|&o| Reverse(Reverse(o))).collect();
    (Reverse(shape.g0), distinct.len(), desc)
}

/// The largest degree over all valid data sets, found by search downwards
/// from the degree bound.
pub fn max_degree_bruteforce(kind: DataSetType, genus_param: i64) -> Result<MaxDegreeResult> {
    check_genus(genus_param)?;
    let bound = GenusQuery::new(kind, genus_param).degree_bound();
    let mut n = if bound % 2 == 0 { bound - 1 } else { bound };
    while n >= 3 {
        if kind == DataSetType::A && !degree_possible_a(genus_param, n) {
            n -= 2;
            continue;
        }
        let mut found: Vec<(Shape, DataSet)> = shapes_for_degree(kind, genus_param, n)
            .into_iter()
            .filter_map(|s| residue_witness(kind, &s).map(|w| (s, w)))
            .collect();
        if !found.is_empty() {
            found.sort_by_key(|(s, _)| witness_key(s));
            let (_, witness) = found.swap_remove(0);
            return Ok(MaxDegreeResult {
                kind,
                genus_param,
                bound: DegreeBound::Exact { n },
                case_id: CaseId::Search,
                witness: Some(witness),
                resolved: None,
            });
        }
        n -= 2;
    }
    Ok(MaxDegreeResult::no_root(kind, genus_param))
}

/// Type A residues always exist, so a degree is possible iff the genus
/// equation has a solution.
fn degree_possible_a(g: i64, n: i64) -> bool {
    (1..=g / n).any(|g0| orders_fill(n, g - g0 * n))
}

fn odd_at_most(x: i64) -> i64 {
    if x % 2 == 0 {
        x - 1
    } else {
        x
    }
}

fn odd_below(num: i64, den: i64) -> i64 {
    // largest odd integer strictly below num/den
    let q = if num % den == 0 { num / den - 1 } else { num / den };
    odd_at_most(q)
}

fn type_a(n: i64, g0: i64, cones: &[(i64, i64)]) -> DataSet {
    DataSet::new_valid(DataSetType::A, n, g0, 2, 2, cones.iter().copied())
        .expect("closed-form witness is valid")
}

fn exact(kind: DataSetType, genus_param: i64, case_id: CaseId, witness: DataSet) -> MaxDegreeResult {
    MaxDegreeResult {
        kind,
        genus_param,
        bound: DegreeBound::Exact { n: witness.n() },
        case_id,
        witness: Some(witness),
        resolved: None,
    }
}

fn bounds(
    kind: DataSetType,
    genus_param: i64,
    case_id: CaseId,
    upper: i64,
    witness: DataSet,
) -> MaxDegreeResult {
    MaxDegreeResult {
        kind,
        genus_param,
        bound: DegreeBound::Bounds {
            lower: witness.n(),
            upper,
        },
        case_id,
        witness: Some(witness),
        resolved: None,
    }
}

/// The best realizable triple `(k, k1, k2)` for type A case 4: odd
/// `k <= g/3`, `g + k = k1 k2`, `k1 ≡ 3 (mod 4)`, `k | (k1+1)/4 * k2`.
/// Returns the witness data set of largest degree.
fn case_a4_witness(g: i64) -> Option<DataSet> {
    let mut best: Option<DataSet> = None;
    let mut k = 1;
    while 3 * k <= g {
        for k1 in divisors(g + k) {
            if k1 % 4 != 3 {
                continue;
            }
            let k2 = (g + k) / k1;
            let n1 = (k1 + 1) / 4;
            let n = n1 * k2;
            if n % k != 0 || n % 2 == 0 || n1 < 3 || n / k < 3 {
                continue;
            }
            if best.as_ref().is_some_and(|b| b.n() >= n) {
                continue;
            }
            let ds = DataSet::new(DataSetType::A, n, 2, 2, 2, [(1, n1), (1, n / k)])
                .expect("structurally sound");
            if ds.is_valid() && ds.genus_unchecked() == g {
                best = Some(ds);
            }
        }
        k += 2;
    }
    best
}

/// Closed-form evaluation of the type A cases.
fn closed_form_a(g: i64) -> MaxDegreeResult {
    use DataSetType::A;
    if !(g == 3 || g >= 5) {
        return MaxDegreeResult::no_root(A, g);
    }
    if g % 2 == 1 {
        return exact(A, g, CaseId::A(1), type_a(g, 1, &[]));
    }
    let (l, k) = split_two(g);
    let pow = 1i64 << l;
    if l % 2 == 1 {
        let n1 = (pow + 1) / 3;
        let witness = if n1 == 1 {
            type_a(k, 2, &[])
        } else {
            type_a(n1 * k, 2, &[(1, n1)])
        };
        return exact(A, g, CaseId::A(2), witness);
    }
    // l even >= 2: smallest divisor k1 of k with 2^l k1 + 1 ≡ 0 (mod 3)
    if let Some(k1) = divisors(k).into_iter().find(|&d| (pow * d + 1) % 3 == 0) {
        let n1 = (pow * k1 + 1) / 3;
        let n = n1 * (k / k1);
        return exact(A, g, CaseId::A(3), type_a(n, 2, &[(1, n1)]));
    }
    if let Some(w) = case_a4_witness(g) {
        return bounds(A, g, CaseId::A(4), odd_below(g, 3), w);
    }
    if l == 2 {
        return exact(A, g, CaseId::A(5), type_a(k, 4, &[]));
    }
    // remaining genera: g ≡ 4 (mod 6) or 6 | g
    let witness = if g % 6 == 4 {
        let n = (g + 2) / 6;
        type_a(n, 4, &[(1, n), (1, n)])
    } else {
        // g = 2^l * 3k' with l >= 4 even
        let rest = k / 3;
        let n = ((1i64 << (l - 1)) + 1) * rest;
        let n1 = n / (3 * rest);
        type_a(n, 4, &[(1, n1), (1, n1)])
    };
    bounds(A, g, CaseId::A(6), odd_below(g, 4), witness)
}

/// A type B data set `(n1 d, g0, (a, b); (c1, n1))`, from the congruence
/// solvers.
fn single_cone_b(n1: i64, d: i64) -> Option<DataSet> {
    let sol = if d == 1 {
        solve_simple_system(n1).ok()??
    } else {
        solve_composite_system(n1, d).ok()??
    };
    let (a, b, c1) = sol.triple();
    Some(
        DataSet::new_valid(DataSetType::B, n1 * d, 0, a, b, [(c1, n1)])
            .expect("congruence solution gives a valid data set"),
    )
}

/// Smallest `l ≡ residue (mod 3)` with `g' = l * mult * k`, `k` odd.
fn smallest_split(gp: i64, residue: i64, mult: i64) -> Option<(i64, i64)> {
    if gp % mult != 0 {
        return None;
    }
    let rest = gp / mult;
    divisors(rest)
        .into_iter()
        .filter(|&l| l % 3 == residue && (rest / l) % 2 == 1)
        .map(|l| (l, rest / l))
        .next()
}

/// Closed-form evaluation of the type B cases.
fn closed_form_b(gp: i64) -> MaxDegreeResult {
    use DataSetType::B;
    if gp < 2 {
        return MaxDegreeResult::no_root(B, gp);
    }
    let (v, odd) = split_two(gp);
    let single = |case: u8, n1: i64, d: i64| {
        let w = single_cone_b(n1, d).expect("case guard guarantees a solution");
        exact(B, gp, CaseId::B(case), w)
    };

    // cases 1-8: one cone point of order n1 = 2l + 1 and g' = l d
    if v == 0 && gp % 3 == 0 {
        return single(1, 3, gp);
    }
    if v == 1 {
        return single(2, 5, odd);
    }
    if v == 2 && odd % 3 == 0 {
        return single(3, 9, odd);
    }
    if v == 0 && gp % 5 == 0 {
        return single(4, 11, gp / 5);
    }
    if v == 3 {
        return single(5, 17, odd);
    }
    if v == 0 && gp % 11 == 0 {
        return single(6, 23, gp / 11);
    }
    if v == 4 && odd % 3 == 0 {
        return single(7, 33, odd);
    }
    if v == 0 && gp % 17 == 0 {
        return single(8, 35, gp / 17);
    }

    let upper = odd_at_most(41 * gp / 20);
    if let Some((l, k)) = smallest_split(gp, 1, 3) {
        let w = single_cone_b(2 * l + 1, 3 * k).expect("composite system is solvable");
        return bounds(B, gp, CaseId::B(9), upper, w);
    }
    if let Some((l, k)) = smallest_split(gp, 2, 1) {
        let w = single_cone_b(2 * l + 1, k).expect("congruence system is solvable");
        if is_prime(gp) {
            return exact(B, gp, CaseId::B(10), w);
        }
        return bounds(B, gp, CaseId::B(10), upper, w);
    }

    let upper = odd_at_most(5 * gp / 4);
    if gp % 6 == 1 {
        let w = DataSet::new_valid(B, gp, 1, 2, -2, []).expect("valid");
        return bounds(B, gp, CaseId::B(11), upper, w);
    }
    debug_assert_eq!(gp % 12, 4, "g' = {gp} escapes cases 1-11");
    let n = gp + 1;
    let w = DataSet::new_valid(B, n, 0, 2, -2, [(1, n), (-1, n)]).expect("valid");
    bounds(B, gp, CaseId::B(12), upper, w)
}

/// Maximal degree from the closed-form case analysis.
pub fn max_degree_closed_form(kind: DataSetType, genus_param: i64) -> Result<MaxDegreeResult> {
    check_genus(genus_param)?;
    Ok(match kind {
        DataSetType::A => closed_form_a(genus_param),
        DataSetType::B => closed_form_b(genus_param),
    })
}

fn check_limit(limit: i64) -> Result<()> {
    if !(0..=TABLE_LIMIT_CAP).contains(&limit) {
        return Err(Error::InvalidInput(format!(
            "limit must lie in [0, {TABLE_LIMIT_CAP}], got {limit}"
        )));
    }
    Ok(())
}

/// Searched maxima for `genus_param = 1..=limit`, genus ascending.
pub fn bruteforce_sweep(kind: DataSetType, limit: i64) -> Result<Vec<MaxDegreeResult>> {
    check_limit(limit)?;
    (1..=limit)
        .into_par_iter()
        .map(|gp| max_degree_bruteforce(kind, gp))
        .collect()
}

/// One row of the table of type A genera whose maximal degree is below `g/4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalRow {
    pub g: i64,
    pub n: i64,
    /// Closed-form case the genus falls into.
    pub case_id: CaseId,
    pub witness: DataSet,
}

/// Type A genera `g <= limit` with `N < g/4`, found by search.
pub fn exceptional_table(limit: i64) -> Result<Vec<ExceptionalRow>> {
    check_limit(limit)?;
    let rows = bruteforce_sweep(DataSetType::A, limit)?
        .into_iter()
        .filter_map(|r| {
            let n = r.exact()?;
            (4 * n < r.genus_param).then(|| ExceptionalRow {
                g: r.genus_param,
                n,
                case_id: closed_form_a(r.genus_param).case_id,
                witness: r.witness.expect("search results carry a witness"),
            })
        })
        .collect();
    Ok(rows)
}

/// Counts for the last two type B cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseBCensus {
    pub limit: i64,
    /// Genera in case 11.
    pub case11: Vec<i64>,
    /// Case 11 genera with `N = g'`.
    pub case11_n_eq_g: Vec<i64>,
    /// Genera in case 12.
    pub case12: Vec<i64>,
    /// Case 12 genera with `N = g' + 1`.
    pub case12_n_eq_g_plus_1: Vec<i64>,
    /// Case 12 genera `g' = 2^l k`, `k > 1`, where the two-cone data set of
    /// degree `(2^l + 1) k` is maximal.
    pub case12_two_cone_maximal: Vec<i64>,
}

/// Degree of the two-cone family `((2^l+1) k, 0, (2,-2); (1,k), (-1,k))` for
/// `g' = 2^l k` with `l >= 1` and `k > 1`.
pub fn two_cone_degree(gp: i64) -> Option<i64> {
    let (l, k) = split_two(gp);
    (l >= 1 && k > 1).then(|| ((1i64 << l) + 1) * k)
}

pub fn caseb_census(limit: i64) -> Result<CaseBCensus> {
    check_limit(limit)?;
    let mut census = CaseBCensus {
        limit,
        case11: Vec::new(),
        case11_n_eq_g: Vec::new(),
        case12: Vec::new(),
        case12_n_eq_g_plus_1: Vec::new(),
        case12_two_cone_maximal: Vec::new(),
    };
    let relevant: Vec<(i64, CaseId)> = (2..=limit)
        .map(|gp| (gp, closed_form_b(gp).case_id))
        .filter(|(_, c)| matches!(c, CaseId::B(11) | CaseId::B(12)))
        .collect();
    let searched: Vec<Result<MaxDegreeResult>> = relevant
        .par_iter()
        .map(|&(gp, _)| max_degree_bruteforce(DataSetType::B, gp))
        .collect();
    for ((gp, case), r) in relevant.into_iter().zip(searched) {
        let n = r?.exact().expect("roots exist for g' >= 2");
        if case == CaseId::B(11) {
            census.case11.push(gp);
            if n == gp {
                census.case11_n_eq_g.push(gp);
            }
        } else {
            census.case12.push(gp);
            if n == gp + 1 {
                census.case12_n_eq_g_plus_1.push(gp);
            }
            if two_cone_degree(gp) == Some(n) {
                census.case12_two_cone_maximal.push(gp);
            }
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use DataSetType::{A, B};

    #[test]
    fn bruteforce_examples() {
        let r = max_degree_bruteforce(A, 5).unwrap();
        assert_eq!(r.bound, DegreeBound::Exact { n: 5 });
        assert_eq!(r.witness.unwrap(), DataSet::new(A, 5, 1, 2, 2, []).unwrap());

        let r = max_degree_bruteforce(A, 16).unwrap();
        assert_eq!(r.bound, DegreeBound::Exact { n: 3 });
        let printed = DataSet::new(A, 3, 4, 2, 2, [(1, 3), (1, 3)]).unwrap();
        assert!(r.witness.unwrap().is_equivalent(&printed).unwrap());

        assert_eq!(max_degree_bruteforce(B, 3).unwrap().bound, DegreeBound::Exact { n: 9 });
        assert_eq!(max_degree_bruteforce(A, 4).unwrap().bound, DegreeBound::NoRoot);
        assert_eq!(max_degree_bruteforce(B, 1).unwrap().bound, DegreeBound::NoRoot);
    }

    #[test]
    fn closed_form_examples() {
        let r = max_degree_closed_form(A, 6).unwrap();
        assert_eq!((r.bound, r.case_id), (DegreeBound::Exact { n: 3 }, CaseId::A(2)));

        let r = max_degree_closed_form(B, 4).unwrap();
        assert_eq!(
            (r.bound, r.case_id),
            (DegreeBound::Bounds { lower: 5, upper: 5 }, CaseId::B(12))
        );

        let r = max_degree_closed_form(B, 7).unwrap();
        assert_eq!(r.case_id, CaseId::B(11));
        assert_eq!(r.bound, DegreeBound::Bounds { lower: 7, upper: 7 });
        let searched = max_degree_bruteforce(B, 7).unwrap().exact().unwrap();
        assert!(r.bound.admits(searched));

        assert_eq!(max_degree_closed_form(A, 4).unwrap().bound, DegreeBound::NoRoot);
        assert_eq!(max_degree_closed_form(B, 1).unwrap().bound, DegreeBound::NoRoot);
    }

    #[test]
    fn closed_form_witnesses_are_valid() {
        for gp in 0..=200 {
            for kind in [A, B] {
                let r = max_degree_closed_form(kind, gp).unwrap();
                if let Some(w) = &r.witness {
                    assert!(w.is_valid(), "{w}");
                    assert_eq!(w.genus_param().unwrap(), gp, "{w}");
                    assert_eq!(Some(w.n()), r.bound.lower());
                }
            }
        }
    }

    #[test]
    fn odd_rounding() {
        assert_eq!(odd_below(16, 4), 3);
        assert_eq!(odd_below(17, 4), 3);
        assert_eq!(odd_below(20, 3), 5);
        assert_eq!(odd_at_most(8), 7);
    }

    #[test]
    fn small_exceptional_table_is_empty() {
        assert!(exceptional_table(15).unwrap().is_empty());
    }
}
