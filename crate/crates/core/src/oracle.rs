//! Sieve of Eratosthenes used as independent ground truth for primality,
//! π(m) and p_n. Shares no code with the indicator in [`crate::arith`].

use crate::error::{Error, Result};

/// Largest sieve the oracle will allocate.
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// Immutable sieve over `0..=limit`.
#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    flags: Vec<u64>,
    primes: Vec<u64>,
}

impl SieveTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Sorted primes up to and including `limit`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Whether `m` is prime. Errors when `m` lies beyond the table.
    pub fn is_prime(&self, m: u64) -> Result<bool> {
        if m > self.limit {
            return Err(Error::range(
                "is_prime",
                format!("{m} exceeds sieve limit {}", self.limit),
            ));
        }
        Ok(self.flags[(m / 64) as usize] >> (m % 64) & 1 == 1)
    }
}

/// Builds the sieve for `0..=limit`.
pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    if limit < 2 {
        return Err(Error::domain(
            "build_sieve",
            format!("need limit >= 2, got {limit}"),
        ));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::range(
            "build_sieve",
            format!("limit {limit} exceeds memory budget {MAX_SIEVE_LIMIT}"),
        ));
    }
    let n = limit as usize;
    // Start with every entry marked prime, then clear 0, 1 and multiples.
    let mut flags = vec![u64::MAX; n / 64 + 1];
    let clear = |flags: &mut [u64], m: usize| flags[m / 64] &= !(1 << (m % 64));
    clear(&mut flags, 0);
    clear(&mut flags, 1);
    let mut p = 2usize;
    while p * p <= n {
        if flags[p / 64] >> (p % 64) & 1 == 1 {
            for m in (p * p..=n).step_by(p) {
                clear(&mut flags, m);
            }
        }
        p += 1;
    }
    let tail = (n + 1) % 64;
    if tail != 0 {
        *flags.last_mut().expect("nonempty") &= (1u64 << tail) - 1;
    }
    let primes = (2..=n)
        .filter(|&m| flags[m / 64] >> (m % 64) & 1 == 1)
        .map(|m| m as u64)
        .collect();
    Ok(SieveTable {
        limit,
        flags,
        primes,
    })
}

/// The `n`-th prime (`p_1 = 2`).
pub fn nth_prime(t: &SieveTable, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::range("nth_prime", "primes are indexed from 1"));
    }
    t.primes.get((n - 1) as usize).copied().ok_or_else(|| {
        Error::range(
            "nth_prime",
            format!(
                "p_{n} lies beyond sieve limit {}; rebuild with a larger limit",
                t.limit
            ),
        )
    })
}

/// π(m), the number of primes `<= m`.
pub fn pi(t: &SieveTable, m: u64) -> Result<u64> {
    if m > t.limit {
        return Err(Error::range(
            "pi",
            format!("{m} exceeds sieve limit {}", t.limit),
        ));
    }
    Ok(t.primes.partition_point(|&p| p <= m) as u64)
}

/// Sieve limit guaranteed to contain `p_n`: `max(100, ⌈n(ln n + ln ln n)⌉ + 16)`.
pub fn limit_for_nth(n: u64) -> u64 {
    if n < 6 {
        return 100;
    }
    let nf = n as f64;
    let bound = (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 16;
    bound.max(100)
}

/// Builds a sieve large enough to answer `nth_prime(n)`.
pub fn sieve_for_nth(n: u64) -> Result<SieveTable> {
    build_sieve(limit_for_nth(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        assert_eq!(build_sieve(10).unwrap().primes(), &[2, 3, 5, 7]);
        assert_eq!(build_sieve(2).unwrap().primes(), &[2]);
        let t = build_sieve(30).unwrap();
        assert_eq!(pi(&t, 30), Ok(10));
    }

    #[test]
    fn limit_guards() {
        assert!(matches!(build_sieve(1), Err(Error::Domain { .. })));
        assert!(matches!(
            build_sieve(MAX_SIEVE_LIMIT + 1),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn nth_prime_examples() {
        let t = build_sieve(600).unwrap();
        assert_eq!(nth_prime(&t, 1), Ok(2));
        assert_eq!(nth_prime(&t, 20), Ok(71));
        assert_eq!(nth_prime(&t, 101), Ok(547));
        assert!(matches!(nth_prime(&t, 0), Err(Error::Range { .. })));
        let last = pi(&t, 600).unwrap();
        assert!(matches!(nth_prime(&t, last + 1), Err(Error::Range { .. })));
    }

    #[test]
    fn pi_examples() {
        let t = build_sieve(100).unwrap();
        assert_eq!(pi(&t, 0), Ok(0));
        assert_eq!(pi(&t, 1), Ok(0));
        assert_eq!(pi(&t, 7), Ok(4));
        assert_eq!(pi(&t, 100), Ok(25));
        assert!(matches!(pi(&t, 101), Err(Error::Range { .. })));
    }

    #[test]
    fn table_invariants() {
        let t = build_sieve(5000).unwrap();
        assert!(!t.is_prime(0).unwrap());
        assert!(!t.is_prime(1).unwrap());
        assert!(t.is_prime(2).unwrap());
        let mut prev = 0;
        for m in 0..=t.limit() {
            let cur = pi(&t, m).unwrap();
            assert_eq!(cur - prev, u64::from(t.is_prime(m).unwrap()));
            prev = cur;
        }
        assert_eq!(t.primes().len() as u64, pi(&t, t.limit()).unwrap());
        for (idx, &p) in t.primes().iter().enumerate() {
            assert_eq!(pi(&t, p).unwrap(), idx as u64 + 1);
            assert_eq!(nth_prime(&t, pi(&t, p).unwrap()), Ok(p));
        }
    }

    #[test]
    fn auto_sizing_covers_nth() {
        for n in [1, 5, 6, 7, 100, 1000, 10_001] {
            let t = sieve_for_nth(n).unwrap();
            assert!(nth_prime(&t, n).is_ok(), "n={n}");
        }
    }
}
