//! Primality testing and small-integer factorization.
//!
//! The Miller-Rabin test uses the fixed base set {2, 3, 5, 7, ..., 37}, which
//! is deterministic for every 64-bit input, so experiment runs never depend on
//! probabilistic primality. Trial-division factoring shares a process-wide
//! prime table that grows geometrically and is only ever read after being
//! extended, so concurrent analyses do not rebuild it.

use std::sync::RwLock;

static PRIME_TABLE: RwLock<Vec<u64>> = RwLock::new(Vec::new());

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Modular exponentiation by squaring.
pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn sieve_up_to(limit: u64) -> Vec<u64> {
    let limit = limit.max(2) as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for p in 2..=limit {
        if !composite[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q <= limit {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
}

/// Ensures the shared prime table covers `[2, limit]` and runs `f` on it.
pub fn with_primes_up_to<T>(limit: u64, f: impl FnOnce(&[u64]) -> T) -> T {
    {
        let table = PRIME_TABLE.read().unwrap();
        if table.last().copied().unwrap_or(0) >= limit {
            let end = table.partition_point(|&p| p <= limit);
            return f(&table[..end]);
        }
    }
    let mut table = PRIME_TABLE.write().unwrap();
    if table.last().copied().unwrap_or(0) < limit {
        // Grow geometrically so repeated factoring batches sieve once.
        let target = limit.max(table.last().copied().unwrap_or(0) * 2).max(1 << 10);
        *table = sieve_up_to(target);
    }
    let end = table.partition_point(|&p| p <= limit);
    f(&table[..end])
}

/// Factors `x >= 1` by trial division; factors are returned ascending.
pub fn factor(x: u64) -> Vec<(u64, u32)> {
    assert!(x >= 1, "cannot factor zero");
    if x == 1 {
        return Vec::new();
    }
    let mut rest = x;
    let mut out = Vec::new();
    with_primes_up_to(x.isqrt() + 1, |primes| {
        for &p in primes {
            if p * p > rest {
                break;
            }
            if rest % p == 0 {
                let mut e = 0u32;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                out.push((p, e));
            }
        }
    });
    if rest > 1 {
        out.push((rest, 1));
    }
    out
}
