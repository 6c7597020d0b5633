//! Exact integer number theory: factorization, totient, Möbius, units of Z_n
//! and Ramanujan sums.

use crate::error::{Error, Result};

/// Canonical prime factorization, primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime divisors.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// `Some((p, m))` when the factored number is `p^m` with `m >= 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }
}

/// Trial-division factorization.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

pub fn mobius(n: u64) -> Result<i64> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.distinct_primes() % 2 == 0 { 1 } else { -1 })
}

/// The units of Z_n in ascending order.
pub fn units(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            expected: "n >= 2",
        });
    }
    Ok((1..n).filter(|&a| gcd(a, n) == 1).collect())
}

pub fn is_unit(a: u64, n: u64) -> bool {
    gcd(a % n, n) == 1
}

/// Largest squarefree divisor `s` and the number `r` of distinct primes.
pub fn squarefree_kernel(n: u64) -> Result<(u64, usize)> {
    let f = factorize(n)?;
    Ok((f.radical(), f.distinct_primes()))
}

/// Residue index `k` of Z_n together with `t_k = n / gcd(k, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamanujanIndex {
    pub k: u64,
    pub t: u64,
}

impl RamanujanIndex {
    pub fn new(k: u64, n: u64) -> Result<Self> {
        check_residue(k, n)?;
        Ok(Self { k, t: n / gcd(k, n) })
    }
}

fn check_residue(k: u64, n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            expected: "n >= 2",
        });
    }
    if k >= n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            expected: "0 <= k <= n - 1",
        });
    }
    Ok(())
}

/// Ramanujan sum `c(k, n) = μ(t_k) φ(n) / φ(t_k)`, exact.
///
/// These are the eigenvalues of the circulant whose first row marks the
/// units of Z_n.
pub fn ramanujan_sum(k: u64, n: u64) -> Result<i64> {
    let idx = RamanujanIndex::new(k, n)?;
    let mu = mobius(idx.t)?;
    if mu == 0 {
        return Ok(0);
    }
    let phi_n = euler_phi(n)?;
    let phi_t = euler_phi(idx.t)?;
    debug_assert_eq!(phi_n % phi_t, 0);
    Ok(mu * (phi_n / phi_t) as i64)
}

/// All `c(k, n)` for `k = 0..n`.
pub fn ramanujan_row(n: u64) -> Result<Vec<i64>> {
    check_residue(0, n)?;
    let phi_n = euler_phi(n)?;
    // c(k, n) depends on k only through gcd(k, n); memoize per divisor.
    let mut by_gcd = std::collections::HashMap::new();
    (0..n)
        .map(|k| {
            let g = gcd(k, n);
            if let Some(&v) = by_gcd.get(&g) {
                return Ok(v);
            }
            let t = n / g;
            let v = mobius(t)? * (phi_n / euler_phi(t)?) as i64;
            by_gcd.insert(g, v);
            Ok(v)
        })
        .collect()
}
