//! Artin's constant as a truncated Euler product, accumulated in
//! double-double arithmetic.

use super::sieve::Primes;

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl DoubleDouble {
    fn from_u128(n: u128) -> Self {
        let hi = n as f64;
        let rest = n as i128 - hi as i128;
        DoubleDouble {
            hi,
            lo: rest as f64,
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        let s = self.hi + self.lo;
        let e = self.lo - (s - self.hi);
        DoubleDouble { hi: s, lo: e }
    }

    fn mul(self, other: Self) -> Self {
        let p = self.hi * other.hi;
        let e = self.hi.mul_add(other.hi, -p) + (self.hi * other.lo + self.lo * other.hi);
        DoubleDouble { hi: p, lo: e }.normalized()
    }

    fn sub(self, other: Self) -> Self {
        let s = self.hi - other.hi;
        let bb = s - self.hi;
        let err = (self.hi - (s - bb)) - (other.hi + bb);
        DoubleDouble {
            hi: s,
            lo: err + self.lo - other.lo,
        }
        .normalized()
    }

    fn recip(self) -> Self {
        let x = 1.0 / self.hi;
        // residual 1 - x * self, then one Newton correction
        let r = (-x).mul_add(self.hi, 1.0) - x * self.lo;
        DoubleDouble { hi: x, lo: r * x }.normalized()
    }
}

/// `prod_{p <= prime_bound} (1 - 1/(p(p-1)))`; 1 for bounds below 2.
pub fn artin_constant(prime_bound: u64) -> f64 {
    let mut acc = DoubleDouble { hi: 1.0, lo: 0.0 };
    for p in Primes::new(prime_bound) {
        let x = DoubleDouble::from_u128(p as u128 * (p as u128 - 1)).recip();
        acc = acc.sub(acc.mul(x));
    }
    acc.hi + acc.lo
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_are_exact_rationals() {
        assert_eq!(artin_constant(2), 0.5);
        assert_eq!(artin_constant(1), 1.0);
        // (1/2)(5/6)(19/20)
        assert!((artin_constant(5) - 0.5 * 5.0 / 6.0 * 19.0 / 20.0).abs() < 1e-16);
    }

    #[test]
    fn matches_naive_float_product() {
        let naive: f64 = super::super::sieve::simple_sieve(100_000)
            .iter()
            .map(|&p| 1.0 - 1.0 / (p as f64 * (p as f64 - 1.0)))
            .product();
        assert!((artin_constant(100_000) - naive).abs() < 1e-13);
    }

    #[test]
    fn monotone_in_bound() {
        let mut last = 1.0;
        for b in [2, 3, 10, 100, 1000, 10_000] {
            let a = artin_constant(b);
            assert!(a < last);
            last = a;
        }
    }
}
