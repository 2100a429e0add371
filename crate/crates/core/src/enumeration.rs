//! Exhaustive generation of data sets of a given type and genus.
//!
//! Generation is split in two layers. A [`Shape`] fixes the degree `n`, the
//! orbifold genus `g0` and the multiset of cone orders; shapes are exactly the
//! solutions of the genus equation. Residues `(a, b, c_i)` are then searched
//! per shape, either exhaustively ([`datasets_for_shape`]) or until the first
//! hit ([`residue_witness`]).
//!
//! Output order is deterministic: `n` ascending, then `g0`, then the cone-order
//! multiset lexicographically, then residues lexicographically.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{divisors, gcd, mod_inverse, rem};
use crate::dataset::{ConePoint, DataSet, DataSetType};
use crate::error::{Error, Result};

/// Genus parameters above this are refused by the enumerators.
pub const GENUS_CAP: i64 = 100_000;

/// Which data sets to enumerate.
///
/// `genus_param` is the data-set genus `g` for type A and half of it (`g'`)
/// for type B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusQuery {
    pub kind: DataSetType,
    pub genus_param: i64,
    pub degree: Option<i64>,
}

impl GenusQuery {
    pub fn new(kind: DataSetType, genus_param: i64) -> Self {
        GenusQuery {
            kind,
            genus_param,
            degree: None,
        }
    }

    pub fn with_degree(mut self, n: i64) -> Self {
        self.degree = Some(n);
        self
    }

    pub fn check(&self) -> Result<()> {
        let min = match self.kind {
            DataSetType::A => 1,
            DataSetType::B => 0,
        };
        if self.genus_param < min || self.genus_param > GENUS_CAP {
            return Err(Error::InvalidInput(format!(
                "genus parameter for type {} must lie in [{min}, {GENUS_CAP}], got {}",
                self.kind, self.genus_param
            )));
        }
        Ok(())
    }

    /// Largest degree that can occur: `g` for type A and `3g'` for type B.
    pub fn degree_bound(&self) -> i64 {
        match self.kind {
            DataSetType::A => self.genus_param,
            DataSetType::B => 3 * self.genus_param,
        }
    }

    fn degrees(&self) -> Vec<i64> {
        let bound = self.degree_bound();
        match self.degree {
            Some(n) if n >= 3 && n % 2 == 1 && n <= bound => vec![n],
            Some(_) => Vec::new(),
            None => (3..=bound).step_by(2).collect(),
        }
    }
}

/// Degree, orbifold genus and cone orders (ascending) of a family of data sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    pub n: i64,
    pub g0: i64,
    pub orders: Vec<i64>,
}

impl Shape {
    pub fn is_primary(&self) -> bool {
        self.orders.iter().all(|&o| o == self.n)
    }
}

/// Non-decreasing sequences of divisors `δ > 1` of `n` with
/// `Σ (n - n/δ) = target`, in lexicographic order.
pub fn order_multisets(n: i64, target: i64) -> Vec<Vec<i64>> {
    let parts: Vec<(i64, i64)> = divisors(n)
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| (d, n - n / d))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    collect_multisets(&parts, 0, target, &mut cur, &mut out);
    out
}

fn collect_multisets(
    parts: &[(i64, i64)],
    from: usize,
    left: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for (i, &(d, t)) in parts.iter().enumerate().skip(from) {
        if t > left {
            // weights grow with the divisor
            break;
        }
        cur.push(d);
        collect_multisets(parts, i, left - t, cur, out);
        cur.pop();
    }
}

/// Whether some multiset of cone orders fills `target` exactly.
pub(crate) fn orders_fill(n: i64, target: i64) -> bool {
    let weights: Vec<i64> = divisors(n)
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| n - n / d)
        .collect();
    let Ok(len) = usize::try_from(target) else {
        return false;
    };
    let mut reach = vec![false; len + 1];
    reach[0] = true;
    for s in 1..=len {
        reach[s] = weights
            .iter()
            .any(|&w| (w as usize) <= s && reach[s - w as usize]);
    }
    reach[len]
}

fn shape_target(kind: DataSetType, genus_param: i64, n: i64, g0: i64) -> i64 {
    match kind {
        DataSetType::A => genus_param - g0 * n,
        DataSetType::B => 2 * genus_param - 2 * g0 * n,
    }
}

fn g0_range(kind: DataSetType, genus_param: i64, n: i64) -> std::ops::RangeInclusive<i64> {
    match kind {
        DataSetType::A => 1..=genus_param / n,
        DataSetType::B => 0..=genus_param / n,
    }
}

/// Shapes with degree `n` solving the genus equation.
pub fn shapes_for_degree(kind: DataSetType, genus_param: i64, n: i64) -> Vec<Shape> {
    let mut out = Vec::new();
    for g0 in g0_range(kind, genus_param, n) {
        let target = shape_target(kind, genus_param, n, g0);
        for orders in order_multisets(n, target) {
            if kind == DataSetType::B && g0 == 0 && orders.is_empty() {
                continue;
            }
            out.push(Shape { n, g0, orders });
        }
    }
    out
}

/// All shapes for a query, lazily, degree ascending.
pub fn shapes(q: GenusQuery) -> Result<impl Iterator<Item = Shape>> {
    q.check()?;
    Ok(q.degrees()
        .into_iter()
        .flat_map(move |n| shapes_for_degree(q.kind, q.genus_param, n)))
}

/// Pairs `(a, b)` of units satisfying the type's rotation condition, sorted.
pub fn rotation_pairs(kind: DataSetType, n: i64) -> Vec<(i64, i64)> {
    let mut pairs = Vec::new();
    for a in 1..n {
        if gcd(a, n) != 1 {
            continue;
        }
        // both branches need a - 1 to be a unit
        let Ok(inv) = mod_inverse(1 - a, n) else {
            continue;
        };
        // b - a = ab  <=>  b = a (1 - a)^{-1}
        pairs.push((a, rem(a * inv.value(), n)));
        if kind == DataSetType::A {
            // b + a = ab  <=>  b = -a (1 - a)^{-1}
            pairs.push((a, rem(-a * inv.value(), n)));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn units(m: i64) -> Vec<i64> {
    (1..m).filter(|&c| gcd(c, m) == 1).collect()
}

/// Non-decreasing sequences of length `k` over `values`, lexicographic.
fn sorted_sequences(values: &[i64], k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(values: &[i64], from: usize, k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..values.len() {
            cur.push(values[i]);
            rec(values, i, k, cur, out);
            cur.pop();
        }
    }
    rec(values, 0, k, &mut cur, &mut out);
    out
}

/// Groups equal cone orders: `(order, multiplicity)` ascending.
fn order_groups(orders: &[i64]) -> Vec<(i64, usize)> {
    let mut groups: Vec<(i64, usize)> = Vec::new();
    for &o in orders {
        match groups.last_mut() {
            Some((last, k)) if *last == o => *k += 1,
            _ => groups.push((o, 1)),
        }
    }
    groups
}

/// Every valid data set with the given shape, residues in lexicographic order.
pub fn datasets_for_shape(kind: DataSetType, shape: &Shape) -> Vec<DataSet> {
    let n = shape.n;
    let groups = order_groups(&shape.orders);
    let mut out = Vec::new();

    // cone residues per group; for type B the very last cone is solved for
    let mut group_choices: Vec<Vec<Vec<i64>>> = Vec::with_capacity(groups.len());
    for (idx, &(order, k)) in groups.iter().enumerate() {
        let free = if kind == DataSetType::B && idx + 1 == groups.len() {
            k - 1
        } else {
            k
        };
        group_choices.push(sorted_sequences(&units(order), free));
    }

    let pairs = rotation_pairs(kind, n);
    let mut cones = Vec::with_capacity(shape.orders.len());
    for &(a, b) in &pairs {
        if kind == DataSetType::B && groups.is_empty() {
            if rem(a + b, n) == 0 {
                out.push(DataSet::from_sorted_parts(kind, n, shape.g0, a, b, Vec::new()));
            }
            continue;
        }
        product_rec(&groups, &group_choices, 0, &mut cones, &mut |cones| {
            if kind == DataSetType::A {
                out.push(DataSet::from_sorted_parts(kind, n, shape.g0, a, b, cones.to_vec()));
                return;
            }
            let (order, _) = *groups.last().expect("nonempty");
            let partial = cones
                .iter()
                .fold(a + b, |acc, c| rem(acc + (n / c.order) * c.c, n));
            let need = rem(-partial, n);
            let d = n / order;
            if need % d != 0 {
                return;
            }
            let c = rem(need / d, order);
            if gcd(c, order) != 1 {
                return;
            }
            // keep the group sorted so each multiset appears once
            if let Some(prev) = cones.last() {
                if prev.order == order && prev.c > c {
                    return;
                }
            }
            let mut full = cones.to_vec();
            full.push(ConePoint { c, order });
            out.push(DataSet::from_sorted_parts(kind, n, shape.g0, a, b, full));
        });
    }
    out
}

fn product_rec(
    groups: &[(i64, usize)],
    choices: &[Vec<Vec<i64>>],
    idx: usize,
    cones: &mut Vec<ConePoint>,
    emit: &mut dyn FnMut(&[ConePoint]),
) {
    if idx == groups.len() {
        emit(cones);
        return;
    }
    let order = groups[idx].0;
    for seq in &choices[idx] {
        let len = cones.len();
        cones.extend(seq.iter().map(|&c| ConePoint { c, order }));
        product_rec(groups, choices, idx + 1, cones, emit);
        cones.truncate(len);
    }
}

/// Reachable values of `Σ_{i<k} (n/n_i) c_i (mod n)` for every prefix length `k`.
struct ConeSums {
    n: usize,
    layers: Vec<Vec<bool>>,
}

impl ConeSums {
    fn new(n: i64, orders: &[i64]) -> Self {
        let size = n as usize;
        let mut layers = Vec::with_capacity(orders.len() + 1);
        let mut first = vec![false; size];
        first[0] = true;
        layers.push(first);
        // all cones except the last; the last is matched against targets
        for &order in orders.iter().take(orders.len().saturating_sub(1)) {
            let step = (n / order) as usize;
            let us = units(order);
            let prev = layers.last().expect("seeded");
            let mut next = vec![false; size];
            for (x, _) in prev.iter().enumerate().filter(|(_, &r)| r) {
                for &u in &us {
                    next[(x + step * u as usize) % size] = true;
                }
            }
            layers.push(next);
        }
        ConeSums { n: size, layers }
    }

    /// Residues `c_i` with `Σ (n/n_i) c_i ≡ target`, or `None`.
    fn realize(&self, orders: &[i64], target: i64) -> Option<Vec<i64>> {
        let n = self.n;
        let m = orders.len();
        let mut cs = vec![0; m];
        let mut want = target as usize % n;
        for i in (0..m).rev() {
            let order = orders[i];
            let step = (self.n as i64 / order) as usize;
            let prev = &self.layers[i];
            let pick = (1..order)
                .filter(|&u| gcd(u, order) == 1)
                .find(|&u| prev[(want + n - (step * u as usize) % n) % n])?;
            cs[i] = pick;
            want = (want + n - (step * pick as usize) % n) % n;
        }
        Some(cs)
    }
}

/// The first valid data set of a shape found by an early-exit search, or
/// `None` when the shape admits no residues at all.
pub fn residue_witness(kind: DataSetType, shape: &Shape) -> Option<DataSet> {
    let n = shape.n;
    match kind {
        DataSetType::A => {
            // 2 + 2 ≡ 2 * 2 for every odd n, and c_i = 1 is always a unit
            let (a, b) = (2, 2);
            let cones = shape.orders.iter().map(|&o| ConePoint { c: 1, order: o }).collect();
            Some(DataSet::from_sorted_parts(kind, n, shape.g0, a, b, cones))
        }
        DataSetType::B => {
            let pairs = rotation_pairs(kind, n);
            let sums = ConeSums::new(n, &shape.orders);
            let mut tried = BTreeSet::new();
            for &(a, b) in &pairs {
                let target = rem(-(a + b), n);
                if !tried.insert(target) {
                    continue;
                }
                if shape.orders.is_empty() {
                    if target == 0 {
                        return Some(DataSet::from_sorted_parts(kind, n, shape.g0, a, b, Vec::new()));
                    }
                    continue;
                }
                if let Some(cs) = sums.realize(&shape.orders, target) {
                    let ds = DataSet::new(
                        kind,
                        n,
                        shape.g0,
                        a,
                        b,
                        cs.into_iter().zip(shape.orders.iter().copied()),
                    )
                    .expect("structurally sound");
                    debug_assert!(ds.is_valid(), "{ds}");
                    return Some(ds);
                }
            }
            None
        }
    }
}

/// Streams every valid data set of the requested type, genus and degree.
pub fn enumerate_datasets(q: GenusQuery) -> Result<impl Iterator<Item = DataSet>> {
    let kind = q.kind;
    Ok(shapes(q)?.flat_map(move |s| datasets_for_shape(kind, &s)))
}

/// One canonical representative per equivalence class, ascending.
pub fn enumerate_classes(q: GenusQuery) -> Result<Vec<DataSet>> {
    let mut reps = BTreeSet::new();
    for ds in enumerate_datasets(q)? {
        reps.insert(ds.canonical_form().expect("enumerated data sets are valid"));
    }
    Ok(reps.into_iter().collect())
}

/// Some valid data set of the query, if any, found by early-exit search.
pub fn find_dataset(q: GenusQuery) -> Result<Option<DataSet>> {
    let kind = q.kind;
    Ok(shapes(q)?.find_map(|s| residue_witness(kind, &s)))
}

/// Whether a nontrivial root exists, decided by search.
pub fn root_exists(kind: DataSetType, genus_param: i64) -> Result<bool> {
    if genus_param < 0 {
        return Err(Error::InvalidInput(format!(
            "genus parameter must be non-negative, got {genus_param}"
        )));
    }
    if kind == DataSetType::A && genus_param == 0 {
        return Ok(false);
    }
    Ok(find_dataset(GenusQuery::new(kind, genus_param))?.is_some())
}

/// Closed-form existence: type A iff `g = 3` or `g >= 5`, type B iff `g' >= 2`.
pub fn root_exists_closed_form(kind: DataSetType, genus_param: i64) -> bool {
    match kind {
        DataSetType::A => genus_param == 3 || genus_param >= 5,
        DataSetType::B => genus_param >= 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DataSetType::{A, B};

    #[test]
    fn multisets_of_orders() {
        // n = 15: weights 10 (3), 12 (5), 14 (15)
        assert_eq!(order_multisets(15, 34), vec![vec![3, 3, 15], vec![3, 5, 5]]);
        assert_eq!(order_multisets(15, 0), vec![Vec::<i64>::new()]);
        assert!(order_multisets(15, 11).is_empty());
        assert!(orders_fill(15, 34) && !orders_fill(15, 11));
    }

    #[test]
    fn type_b_genus_one_is_empty() {
        assert_eq!(enumerate_datasets(GenusQuery::new(B, 1)).unwrap().count(), 0);
    }

    #[test]
    fn type_a_genus_four_is_empty() {
        assert_eq!(enumerate_datasets(GenusQuery::new(A, 4)).unwrap().count(), 0);
        assert!(enumerate_classes(GenusQuery::new(A, 4)).unwrap().is_empty());
    }

    #[test]
    fn type_a_genus_three() {
        let all: Vec<_> = enumerate_datasets(GenusQuery::new(A, 3).with_degree(3))
            .unwrap()
            .collect();
        let target = DataSet::new(A, 3, 1, 2, 2, []).unwrap();
        assert!(all.contains(&target));
        let classes = enumerate_classes(GenusQuery::new(A, 3)).unwrap();
        assert_eq!(classes, vec![DataSet::new(A, 3, 1, 2, 1, []).unwrap()]);
    }

    #[test]
    fn type_b_genus_two_degree_five() {
        let classes = enumerate_classes(GenusQuery::new(B, 2).with_degree(5)).unwrap();
        assert!(classes
            .iter()
            .any(|d| d.g0() == 0 && d.orders() == vec![5]));
    }

    #[test]
    fn existence_examples() {
        assert!(root_exists(A, 5).unwrap());
        assert!(!root_exists(A, 4).unwrap());
        assert!(root_exists(B, 2).unwrap());
        assert!(!root_exists(B, 1).unwrap());
        assert!(!root_exists(B, 0).unwrap());
    }

    #[test]
    fn witness_agrees_with_full_listing() {
        for g in 1..=12 {
            for q in [GenusQuery::new(A, g), GenusQuery::new(B, g)] {
                for s in shapes(q).unwrap() {
                    let all = datasets_for_shape(q.kind, &s);
                    let w = residue_witness(q.kind, &s);
                    assert_eq!(all.is_empty(), w.is_none(), "{s:?}");
                    if let Some(w) = w {
                        assert!(w.is_valid());
                        assert!(all.contains(&w), "{w}");
                    }
                }
            }
        }
    }

    #[test]
    fn bad_query() {
        assert!(enumerate_datasets(GenusQuery::new(A, 0)).is_err());
        assert!(enumerate_datasets(GenusQuery::new(B, -1)).is_err());
    }
}
