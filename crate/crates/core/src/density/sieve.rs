//! Segmented sieve of Eratosthenes.

/// Default segment length in integers.
pub const SEGMENT: u64 = 1 << 18;

/// Primes `<= n` by a plain sieve; used for base primes and as a reference.
pub fn simple_sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Primes in `[lo, hi)`, ascending. `base` must hold every prime `<= sqrt(hi - 1)`.
pub fn primes_in_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let lo = lo.max(2);
    if hi <= lo {
        return Vec::new();
    }
    let len = (hi - lo) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        if p * p >= hi {
            break;
        }
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m < hi {
            composite[(m - lo) as usize] = true;
            m += p;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// Ascending iterator over the primes `<= limit`, one segment at a time.
#[derive(Debug, Clone)]
pub struct Primes {
    limit: u64,
    base: Vec<u64>,
    next_lo: u64,
    buf: std::vec::IntoIter<u64>,
}

impl Primes {
    pub(crate) fn new(limit: u64) -> Primes {
        Primes {
            limit,
            base: simple_sieve(isqrt(limit)),
            next_lo: 0,
            buf: Vec::new().into_iter(),
        }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if let Some(p) = self.buf.next() {
                return Some(p);
            }
            if self.next_lo > self.limit {
                return None;
            }
            let hi = (self.next_lo + SEGMENT).min(self.limit + 1);
            self.buf = primes_in_segment(self.next_lo, hi, &self.base).into_iter();
            self.next_lo = hi;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments_match_simple_sieve() {
        let reference = simple_sieve(100_000);
        assert_eq!(Primes::new(100_000).collect::<Vec<_>>(), reference);
        let base = simple_sieve(400);
        let seg = primes_in_segment(1000, 150_000, &base);
        let expect: Vec<u64> = simple_sieve(149_999)
            .into_iter()
            .filter(|&p| p >= 1000)
            .collect();
        assert_eq!(seg, expect);
    }

    #[test]
    fn small_limits() {
        assert_eq!(Primes::new(30).count(), 10);
        assert_eq!(Primes::new(2).collect::<Vec<_>>(), [2]);
        assert_eq!(Primes::new(1).count(), 0);
        assert_eq!(isqrt(99), 9);
        assert_eq!(isqrt(100), 10);
    }
}
