//! Residue arithmetic and the two congruence systems behind type B data sets
//! with a single cone point.
//!
//! Both systems ask for units `a`, `b` modulo an odd `n` with
//! `b - a ≡ ab (mod n)` and a third unit `c1` balancing `a + b`. The composite
//! system ([`solve_composite_system`]) has `n = n1 * d` and the balancing term
//! `c1 * d`; the simple one ([`solve_simple_system`]) is the `d = 1` case.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Inputs above this bound are rejected; products of two in-range values stay
/// well inside `i64`.
pub const INPUT_CAP: i64 = 1_000_000;

/// A residue class stored as its least non-negative representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: i64,
    modulus: i64,
}

impl Residue {
    /// Panics if `modulus < 1`.
    pub fn new(x: i64, modulus: i64) -> Self {
        assert!(modulus >= 1, "modulus must be positive, got {modulus}");
        Residue {
            value: x.rem_euclid(modulus),
            modulus,
        }
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> i64 {
        self.modulus
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value, self.modulus) == 1
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub fn gcd(x: i64, y: i64) -> i64 {
    x.gcd(&y)
}

/// Inverse of `x` modulo `n`.
pub fn mod_inverse(x: i64, n: i64) -> Result<Residue> {
    if n < 1 {
        return Err(Error::InvalidInput(format!("modulus must be positive, got {n}")));
    }
    let r = x.rem_euclid(n);
    let eg = r.extended_gcd(&n);
    if eg.gcd != 1 {
        return Err(Error::NotInvertible { x, modulus: n });
    }
    Ok(Residue::new(eg.x, n))
}

/// `x mod n` as the least non-negative residue.
#[inline]
pub fn rem(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// 2-adic valuation and odd part: `n = 2^v * odd`.
pub fn split_two(n: i64) -> (u32, i64) {
    assert!(n > 0);
    let v = n.trailing_zeros();
    (v, n >> v)
}

/// A residue triple solving `b - a ≡ ab`, `a + b + c1 * (n / n1) ≡ 0 (mod n)`
/// with `a`, `b` units mod `n` and `c1` a unit mod `n1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSolution {
    pub a: Residue,
    pub b: Residue,
    pub c1: Residue,
    pub n: i64,
    pub n1: i64,
}

impl CongruenceSolution {
    fn new(a: i64, b: i64, c1: i64, n: i64, n1: i64) -> Self {
        CongruenceSolution {
            a: Residue::new(a, n),
            b: Residue::new(b, n),
            c1: Residue::new(c1, n1),
            n,
            n1,
        }
    }

    /// Checks the unit, product and sum conditions.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        if n < 1 || self.n1 < 1 || n % self.n1 != 0 {
            return false;
        }
        if self.a.modulus() != n || self.b.modulus() != n || self.c1.modulus() != self.n1 {
            return false;
        }
        let (a, b, c1) = (self.a.value(), self.b.value(), self.c1.value());
        let d = n / self.n1;
        self.a.is_unit()
            && self.b.is_unit()
            && self.c1.is_unit()
            && rem(b - a - a * b, n) == 0
            && rem(a + b + c1 * d, n) == 0
    }

    /// `(a, b, c1)` as plain residues.
    pub fn triple(&self) -> (i64, i64, i64) {
        (self.a.value(), self.b.value(), self.c1.value())
    }
}

fn check_odd(name: &str, x: i64, min: i64) -> Result<()> {
    if x % 2 == 0 || x < min || x > INPUT_CAP {
        return Err(Error::InvalidInput(format!(
            "{name} must be odd with {min} <= {name} <= {INPUT_CAP}, got {x}"
        )));
    }
    Ok(())
}

/// Chinese remainder for coprime moduli; returns the residue mod `m1 * m2`.
fn crt_pair(r1: i64, m1: i64, r2: i64, m2: i64) -> i64 {
    let m = m1 * m2;
    if m1 == 1 {
        return rem(r2, m2);
    }
    if m2 == 1 {
        return rem(r1, m1);
    }
    // r1 + m1 * t ≡ r2 (mod m2)
    let inv = mod_inverse(m1, m2).expect("moduli are coprime").value();
    let t = rem((r2 - r1) % m2 * inv, m2);
    rem(r1 + m1 * t, m)
}

/// Builds `a1` from the prime split of `n1` and lifts it to a full solution.
/// `None` when the construction does not apply or produces a non-solution.
fn composite_constructive(n1: i64, d: i64) -> Option<CongruenceSolution> {
    let n = n1 * d;
    let (base, target_num) = if n1 % 3 == 0 {
        if d % 3 != 0 {
            return None;
        }
        // a1 ≡ -(d/3)^{-1} on the q part
        (d / 3, -1)
    } else {
        // a1 ≡ -3 d^{-1} on the q part
        (d, -3)
    };

    let mut p = 1;
    let mut q = 1;
    for (prime, _) in factorize(n1) {
        if base % prime == 0 {
            p *= prime;
        } else {
            q *= prime;
        }
    }
    let on_q = if q > 1 {
        rem(target_num * mod_inverse(base, q).ok()?.value(), q)
    } else {
        0
    };
    let a1 = crt_pair(on_q, q, 1, p);

    let pivot = rem(a1 * d + 1, n1);
    let b1 = rem(a1 * mod_inverse(pivot, n1).ok()?.value(), n1);
    let c1 = rem(-(a1 + b1), n1);
    let sol = CongruenceSolution::new(a1 * d + 2, b1 * d - 2, c1, n, n1);
    sol.is_valid().then_some(sol)
}

/// Scans `a` upwards; `b` and `c1` are then forced by the two linear
/// congruences.
fn composite_search(n1: i64, d: i64) -> Option<CongruenceSolution> {
    let n = n1 * d;
    for a in 1..n {
        if gcd(a, n) != 1 {
            continue;
        }
        let Ok(inv) = mod_inverse(1 - a, n) else {
            continue;
        };
        let b = rem(a * inv.value(), n);
        let s = rem(-(a + b), n);
        if s % d != 0 {
            continue;
        }
        let c1 = rem(s / d, n1);
        let sol = CongruenceSolution::new(a, b, c1, n, n1);
        if sol.is_valid() {
            return Some(sol);
        }
    }
    None
}

/// Solves the composite system for `n = n1 * d`.
///
/// A solution exists unless `n1 ≡ 0 (mod 3)` and `d ≢ 0 (mod 3)`. The
/// returned triple comes from the prime-split construction when that succeeds
/// and from a residue scan otherwise.
pub fn solve_composite_system(n1: i64, d: i64) -> Result<Option<CongruenceSolution>> {
    check_odd("n1", n1, 3)?;
    check_odd("d", d, 3)?;
    if n1.checked_mul(d).is_none_or(|n| n > INPUT_CAP) {
        return Err(Error::InvalidInput(format!(
            "n1 * d must not exceed {INPUT_CAP}"
        )));
    }
    if n1 % 3 == 0 && d % 3 != 0 {
        return Ok(None);
    }
    Ok(composite_constructive(n1, d).or_else(|| composite_search(n1, d)))
}

/// Solves the `d = 1` system modulo an odd `n`: present iff `3 ∤ n`, in which
/// case the answer is `((n+3)/2, -3, (n+3)/2)`.
pub fn solve_simple_system(n: i64) -> Result<Option<CongruenceSolution>> {
    check_odd("n", n, 3)?;
    if n % 3 == 0 {
        return Ok(None);
    }
    let half = (n + 3) / 2;
    let sol = CongruenceSolution::new(half, -3, half, n, n);
    debug_assert!(sol.is_valid());
    Ok(Some(sol))
}
