//! Primitive trinomials `x^i + x^j - 1` over GF(p): does some primitive root
//! `a` satisfy `a^i + a^j = 1`?

use std::fmt;
use std::str::FromStr;

use super::DensityError;
use crate::ff::modular::{factorize, gcd, is_prime, mul_mod, order_mod, smallest_primitive_root};

/// Exponent `c + h * (p - 1) / 2`, evaluated per odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExpExpr {
    pub c: i64,
    pub h: i64,
}

impl ExpExpr {
    pub const fn new(c: i64, h: i64) -> Self {
        ExpExpr { c, h }
    }

    /// The raw exponent for the odd prime `p`, without range checks.
    pub fn raw(self, p: u64) -> i64 {
        self.c + self.h * ((p as i64 - 1) / 2)
    }

    /// The exponent for `p` if it lies in `[1, p - 2]`. Values outside are
    /// never wrapped modulo `p - 1`.
    pub fn eval(self, p: u64) -> Option<u64> {
        if p < 3 {
            return None;
        }
        let e = self.raw(p);
        (1..=p as i64 - 2).contains(&e).then_some(e as u64)
    }
}

impl fmt::Display for ExpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.c, self.h)
    }
}

impl FromStr for ExpExpr {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (c, h) = s
            .split_once(',')
            .ok_or_else(|| format!("expected c,h but got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
        Ok(ExpExpr::new(parse(c)?, parse(h)?))
    }
}

/// Powers of the smallest primitive root modulo an odd prime.
pub(crate) struct PowerTable {
    p: u64,
    n: u64,
    antilog: Vec<u32>,
}

impl PowerTable {
    pub(crate) fn new(p: u64) -> Self {
        let n = p - 1;
        let g = smallest_primitive_root(p, &factorize(n));
        let mut antilog = Vec::with_capacity(n as usize);
        let mut x = 1u64;
        for _ in 0..n {
            antilog.push(x as u32);
            x = mul_mod(x, g, p);
        }
        PowerTable { p, n, antilog }
    }

    /// Primitive roots `a` (ascending) with `a^e1 + a^e2 = 1`; exponents may
    /// be any integers.
    pub(crate) fn witnesses(&self, e1: i64, e2: i64) -> impl Iterator<Item = u64> + '_ {
        let n = self.n as i64;
        let (e1, e2) = (e1.rem_euclid(n) as u64, e2.rem_euclid(n) as u64);
        // primitive roots are g^k with gcd(k, p - 1) = 1, and (g^k)^e = g^(ke)
        (1..self.n).filter_map(move |k| {
            if gcd(k, self.n) != 1 {
                return None;
            }
            let a = self.antilog[((k * e1) % self.n) as usize] as u64;
            let b = self.antilog[((k * e2) % self.n) as usize] as u64;
            ((a + b) % self.p == 1).then(|| self.antilog[k as usize] as u64)
        })
    }

    pub(crate) fn smallest_witness(&self, e1: i64, e2: i64) -> Option<u64> {
        self.witnesses(e1, e2).min()
    }

    pub(crate) fn any_witness(&self, e1: i64, e2: i64) -> bool {
        self.witnesses(e1, e2).next().is_some()
    }
}

fn evaluate(p: u64, e: ExpExpr) -> Result<u64, DensityError> {
    e.eval(p).ok_or(DensityError::ExponentOutOfRange {
        p,
        exponent: e.raw(p),
    })
}

fn check_odd_prime(p: u64) -> Result<(), DensityError> {
    if p < 3 || !is_prime(p) {
        return Err(DensityError::NotOddPrime(p));
    }
    Ok(())
}

/// Whether a primitive root `a` modulo `p` has `a^e1(p) + a^e2(p) = 1`.
///
/// Equal exponents reduce to `a^i = 1/2`, decided from the order of
/// `(p + 1) / 2`; other pairs are scanned over every primitive root.
pub fn exists_primitive_trinomial(p: u64, e1: ExpExpr, e2: ExpExpr) -> Result<bool, DensityError> {
    check_odd_prime(p)?;
    let (i, j) = (evaluate(p, e1)?, evaluate(p, e2)?);
    Ok(decide(p, i, j))
}

/// Same question, always answered by scanning every primitive root.
pub fn exists_primitive_trinomial_exhaustive(
    p: u64,
    e1: ExpExpr,
    e2: ExpExpr,
) -> Result<bool, DensityError> {
    check_odd_prime(p)?;
    let (i, j) = (evaluate(p, e1)?, evaluate(p, e2)?);
    Ok(PowerTable::new(p).any_witness(i as i64, j as i64))
}

pub(crate) fn decide(p: u64, i: u64, j: u64) -> bool {
    if i == j {
        // a primitive => a^i runs over exactly the elements of order
        // (p-1)/gcd(i, p-1), so the question is the order of 1/2
        let n = p - 1;
        let half = p.div_ceil(2);
        return order_mod(half, p, &factorize(n)) == n / gcd(i, n);
    }
    PowerTable::new(p).any_witness(i as i64, j as i64)
}

/// The three impossibility families for primitive trinomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZeroClaim {
    /// `a^((p-1)/2 + i) + a^((p-1)/2 + 2i) = 1`, impossible for `p > 3i`.
    HalfShiftedPair,
    /// `a^i + a^(2i + (p-1)/2) = 1`, impossible for `p > 6i`.
    ShiftedDouble,
    /// `a^i + a^(p-1-i) = 1`, impossible for `p > 6i + 1` (`p > 7` at `i = 1`).
    Reciprocal,
}

impl ZeroClaim {
    pub const ALL: [ZeroClaim; 3] = [
        ZeroClaim::HalfShiftedPair,
        ZeroClaim::ShiftedDouble,
        ZeroClaim::Reciprocal,
    ];

    pub fn exponents(self, i: u64) -> (ExpExpr, ExpExpr) {
        let i = i as i64;
        match self {
            ZeroClaim::HalfShiftedPair => (ExpExpr::new(i, 1), ExpExpr::new(2 * i, 1)),
            ZeroClaim::ShiftedDouble => (ExpExpr::new(i, 0), ExpExpr::new(2 * i, 1)),
            ZeroClaim::Reciprocal => (ExpExpr::new(i, 0), ExpExpr::new(-i, 2)),
        }
    }

    /// Primes above this bound must have no witness.
    pub fn bound(self, i: u64) -> u64 {
        match self {
            ZeroClaim::HalfShiftedPair => 3 * i,
            ZeroClaim::ShiftedDouble => 6 * i,
            ZeroClaim::Reciprocal => 6 * i + 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ZeroClaim::HalfShiftedPair => "a",
            ZeroClaim::ShiftedDouble => "b",
            ZeroClaim::Reciprocal => "c",
        }
    }
}

/// A prime where a claim's equation has a primitive solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClaimHit {
    pub claim: ZeroClaim,
    pub i: u64,
    pub p: u64,
    /// Smallest primitive root solving the equation.
    pub witness: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZeroDensityReport {
    /// Solutions above the claimed bound.
    pub violations: Vec<ClaimHit>,
    /// Solutions at or below the bound.
    pub exceptions: Vec<ClaimHit>,
    /// (claim, i, prime) triples checked within range.
    pub checked: u64,
    /// Triples skipped because an exponent left `[1, p - 2]`.
    pub out_of_range: u64,
}

impl ZeroDensityReport {
    pub fn violations_of(&self, claim: ZeroClaim) -> impl Iterator<Item = &ClaimHit> {
        self.violations.iter().filter(move |h| h.claim == claim)
    }
}

pub const MAX_CLAIM_LIMIT: u64 = 100_000;
pub const MAX_CLAIM_I: u64 = 10;

pub(crate) fn claims_for_prime(p: u64, i_max: u64) -> ZeroDensityReport {
    let mut report = ZeroDensityReport::default();
    let table = PowerTable::new(p);
    for i in 1..=i_max {
        for claim in ZeroClaim::ALL {
            let (e1, e2) = claim.exponents(i);
            let (Some(x), Some(y)) = (e1.eval(p), e2.eval(p)) else {
                report.out_of_range += 1;
                continue;
            };
            report.checked += 1;
            if let Some(witness) = table.smallest_witness(x as i64, y as i64) {
                let hit = ClaimHit {
                    claim,
                    i,
                    p,
                    witness,
                };
                if p > claim.bound(i) {
                    report.violations.push(hit);
                } else {
                    report.exceptions.push(hit);
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_expr_evaluation() {
        assert_eq!(ExpExpr::new(1, 0).eval(11), Some(1));
        assert_eq!(ExpExpr::new(-1, 2).eval(11), Some(9));
        assert_eq!(ExpExpr::new(1, 1).eval(11), Some(6));
        assert_eq!(ExpExpr::new(0, 0).eval(11), None);
        assert_eq!(ExpExpr::new(-1, 2).eval(3), Some(1));
        assert_eq!(ExpExpr::new(1, 2).eval(11), None);
        assert_eq!("-1,2".parse::<ExpExpr>().unwrap(), ExpExpr::new(-1, 2));
        assert!("3".parse::<ExpExpr>().is_err());
    }

    #[test]
    fn trinomial_examples() {
        let e = ExpExpr::new;
        assert!(exists_primitive_trinomial(11, e(1, 0), e(2, 0)).unwrap());
        assert!(!exists_primitive_trinomial(11, e(1, 0), e(-1, 2)).unwrap());
        assert!(exists_primitive_trinomial(11, e(2, 0), e(1, 1)).unwrap());
        assert_eq!(
            exists_primitive_trinomial(11, e(0, 0), e(1, 0)),
            Err(DensityError::ExponentOutOfRange { p: 11, exponent: 0 })
        );
        assert_eq!(
            exists_primitive_trinomial(9, e(1, 0), e(1, 0)),
            Err(DensityError::NotOddPrime(9))
        );
    }

    #[test]
    fn witnesses_match_direct_powering() {
        for p in [7u64, 11, 13, 29, 41] {
            let t = PowerTable::new(p);
            let factors = factorize(p - 1);
            for e1 in 1..p as i64 - 1 {
                for e2 in e1..p as i64 - 1 {
                    let brute: Vec<u64> = (1..p)
                        .filter(|&a| crate::ff::modular::is_primitive_mod(a, p, &factors))
                        .filter(|&a| {
                            (crate::ff::modular::pow_mod(a, e1 as u64, p)
                                + crate::ff::modular::pow_mod(a, e2 as u64, p))
                                % p
                                == 1
                        })
                        .collect();
                    let mut got: Vec<u64> = t.witnesses(e1, e2).collect();
                    got.sort_unstable();
                    assert_eq!(got, brute, "p={p} e=({e1},{e2})");
                }
            }
        }
    }

    #[test]
    fn equal_exponent_shortcut_matches_scan() {
        for p in (3..3000u64).filter(|&p| is_prime(p)) {
            for i in 1..=6i64 {
                let e = ExpExpr::new(i, 0);
                if e.eval(p).is_none() {
                    continue;
                }
                assert_eq!(
                    exists_primitive_trinomial(p, e, e).unwrap(),
                    exists_primitive_trinomial_exhaustive(p, e, e).unwrap(),
                    "p={p} i={i}"
                );
            }
        }
    }

    #[test]
    fn shifted_double_counterexample_at_seven() {
        // 3 + 3^5 = 3 + 5 = 8 = 1 (mod 7), 3 primitive
        let r = claims_for_prime(7, 1);
        assert!(r
            .violations
            .iter()
            .any(|h| h.claim == ZeroClaim::ShiftedDouble && h.p == 7 && h.witness == 3));
    }

    #[test]
    fn reciprocal_exponents() {
        for p in [11u64, 101, 9973] {
            for i in 1..=5u64 {
                let (a, b) = ZeroClaim::Reciprocal.exponents(i);
                assert_eq!(a.eval(p), Some(i));
                assert_eq!(b.eval(p), Some(p - 1 - i));
            }
        }
        // i = 1 is x + x^(p-2)
        assert_eq!(ZeroClaim::Reciprocal.exponents(1).1, ExpExpr::new(-1, 2));
    }
}
