//! Square bit matrices over GF(2) acting on first homology with mod 2
//! coefficients, and an exhaustive square-root search in the orthogonal group.
//!
//! "Orthogonal" means orthonormal columns for the standard dot product mod 2,
//! i.e. `xᵀx = I`.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest dimension accepted by the exhaustive searches.
pub const SEARCH_CAP: usize = 8;

/// Largest dimension a matrix may have (one `u64` per row).
pub const MAX_DIM: usize = 64;

/// `rows[i]` holds row `i`; bit `j` is the entry in column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    dim: usize,
    rows: Vec<u64>,
}

impl F2Matrix {
    pub fn from_rows(dim: usize, rows: Vec<u64>) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidInput(format!("dimension must lie in [1, {MAX_DIM}]")));
        }
        if rows.len() != dim {
            return Err(Error::DimMismatch {
                left: dim,
                right: rows.len(),
            });
        }
        let mask = row_mask(dim);
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(Error::InvalidInput("row has bits beyond the dimension".into()));
        }
        Ok(F2Matrix { dim, rows })
    }

    /// Panics unless `1 <= dim <= 64`.
    pub fn identity(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim));
        F2Matrix {
            dim,
            rows: (0..dim).map(|i| 1u64 << i).collect(),
        }
    }

    /// Builds a matrix from columns, bit `i` of `cols[j]` being entry `(i, j)`.
    pub fn from_columns(cols: &[u64]) -> Result<Self> {
        let dim = cols.len();
        let mut rows = vec![0u64; dim];
        for (j, &c) in cols.iter().enumerate() {
            for (i, row) in rows.iter_mut().enumerate() {
                *row |= ((c >> i) & 1) << j;
            }
        }
        F2Matrix::from_rows(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    /// Column `j` as a bit vector over the rows.
    pub fn column(&self, j: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (((r >> j) & 1) << i))
    }

    pub fn transpose(&self) -> F2Matrix {
        let rows = (0..self.dim).map(|j| self.column(j)).collect();
        F2Matrix {
            dim: self.dim,
            rows,
        }
    }

    pub fn multiply(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|&r| combine(&other.rows, r))
            .collect();
        Ok(F2Matrix {
            dim: self.dim,
            rows,
        })
    }

    pub fn is_orthogonal(&self) -> bool {
        let cols: Vec<u64> = (0..self.dim).map(|j| self.column(j)).collect();
        cols.iter().enumerate().all(|(j, &cj)| {
            cols.iter()
                .enumerate()
                .all(|(k, &ck)| parity(cj & ck) == (j == k))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }
}

fn row_mask(dim: usize) -> u64 {
    if dim == 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

#[inline]
fn parity(x: u64) -> bool {
    x.count_ones() % 2 == 1
}

/// XOR of `vecs[i]` over the set bits `i` of `sel`.
#[inline]
fn combine(vecs: &[u64], mut sel: u64) -> u64 {
    let mut acc = 0;
    while sel != 0 {
        acc ^= vecs[sel.trailing_zeros() as usize];
        sel &= sel - 1;
    }
    acc
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, _) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str(&self.row_string(i))?;
        }
        Ok(())
    }
}

impl F2Matrix {
    fn row_string(&self, i: usize) -> String {
        (0..self.dim)
            .map(|j| if self.get(i, j) { '1' } else { '0' })
            .collect()
    }
}

impl Serialize for F2Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = (0..self.dim).map(|i| self.row_string(i)).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for F2Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let dim = strs.len();
        let mut rows = Vec::with_capacity(dim);
        for s in &strs {
            if s.len() != dim {
                return Err(de::Error::custom("matrix must be square"));
            }
            let mut r = 0u64;
            for (j, ch) in s.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => r |= 1 << j,
                    _ => return Err(de::Error::custom("entries must be 0 or 1")),
                }
            }
            rows.push(r);
        }
        F2Matrix::from_rows(dim, rows).map_err(de::Error::custom)
    }
}

/// The block matrix `[[0,1],[1,0]] ⊕ I_{g-2}`.
pub fn psi_twist_a1(g: usize) -> Result<F2Matrix> {
    if !(2..=MAX_DIM).contains(&g) {
        return Err(Error::InvalidInput(format!("need 2 <= g <= {MAX_DIM}, got {g}")));
    }
    let mut m = F2Matrix::identity(g);
    m.rows.swap(0, 1);
    Ok(m)
}

/// `I_g + J_g`, with `J_g` the all-ones matrix; defined for even `g`.
pub fn psi_twist_b(g: usize) -> Result<F2Matrix> {
    if g < 2 || g % 2 == 1 || g > MAX_DIM {
        return Err(Error::InvalidInput(format!("need even 2 <= g <= {MAX_DIM}, got {g}")));
    }
    let all = row_mask(g);
    let rows = (0..g).map(|i| all ^ (1u64 << i)).collect();
    Ok(F2Matrix { dim: g, rows })
}

fn check_cap(dim: usize) -> Result<()> {
    if dim > SEARCH_CAP {
        return Err(Error::SearchCapExceeded {
            dim,
            cap: SEARCH_CAP,
        });
    }
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    Ok(())
}

/// Column-by-column backtracking over orthonormal column sequences.
///
/// Level `j` keeps the candidates for column `j`: odd-weight vectors
/// orthogonal to columns `0..j`, ascending. Each level's list is the previous
/// one filtered by the newly fixed column.
struct Backtrack {
    dim: usize,
    cols: [u64; SEARCH_CAP],
    lists: Vec<Vec<u64>>,
    next: [usize; SEARCH_CAP],
    level: usize,
}

impl Backtrack {
    fn new(dim: usize) -> Self {
        let mut lists = vec![Vec::new(); dim];
        lists[0] = (1..(1u64 << dim)).filter(|&v| parity(v)).collect();
        Backtrack {
            dim,
            cols: [0; SEARCH_CAP],
            lists,
            next: [0; SEARCH_CAP],
            level: 0,
        }
    }

    /// Advances to the next full column sequence whose every prefix passes
    /// `accept(cols, j)`, where `j` is the index of the column just fixed.
    fn advance(&mut self, mut accept: impl FnMut(&[u64], usize) -> bool) -> Option<&[u64]> {
        loop {
            let j = self.level;
            if self.next[j] >= self.lists[j].len() {
                if j == 0 {
                    return None;
                }
                self.level -= 1;
                continue;
            }
            let v = self.lists[j][self.next[j]];
            self.next[j] += 1;
            self.cols[j] = v;
            if !accept(&self.cols[..=j], j) {
                continue;
            }
            if j + 1 == self.dim {
                return Some(&self.cols[..self.dim]);
            }
            let (head, tail) = self.lists.split_at_mut(j + 1);
            let child = &mut tail[0];
            child.clear();
            child.extend(head[j].iter().copied().filter(|&w| !parity(w & v)));
            self.next[j + 1] = 0;
            self.level = j + 1;
        }
    }
}

/// Every `g × g` orthogonal matrix, once each, in backtracking order.
pub struct OrthogonalIter {
    search: Backtrack,
}

impl Iterator for OrthogonalIter {
    type Item = F2Matrix;

    fn next(&mut self) -> Option<F2Matrix> {
        let cols = self.search.advance(|_, _| true)?;
        Some(F2Matrix::from_columns(cols).expect("dimension within cap"))
    }
}

pub fn enumerate_orthogonal(g: usize) -> Result<OrthogonalIter> {
    check_cap(g)?;
    Ok(OrthogonalIter {
        search: Backtrack::new(g),
    })
}

/// Some orthogonal `P` with `P² = m`, or `None` after exhausting the
/// orthogonal group.
///
/// Column `k` of `P²` is the sum of the columns of `P` selected by column `k`
/// of `P`, so it is known as soon as every column that `p_k` selects has been
/// fixed. Each prefix is checked on exactly the columns that just became known.
pub fn find_square_root(m: &F2Matrix) -> Result<Option<F2Matrix>> {
    check_cap(m.dim)?;
    if !m.is_orthogonal() {
        return Ok(None);
    }
    let target: Vec<u64> = (0..m.dim).map(|j| m.column(j)).collect();
    let mut search = Backtrack::new(m.dim);
    let found = search.advance(|cols, j| {
        let known = 1u64 << (j + 1);
        let newly = 1u64 << j;
        cols.iter().enumerate().all(|(k, &pk)| {
            let decided_now = pk < known && (pk >= newly || k == j);
            !decided_now || combine(cols, pk) == target[k]
        })
    });
    Ok(found.map(|cols| F2Matrix::from_columns(cols).expect("dimension within cap")))
}
