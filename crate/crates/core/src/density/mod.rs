//! Prime censuses for the `T4` / `G4` densities, Artin's constant, and
//! primitive-trinomial experiments.
//!
//! Censuses split `[2, limit]` into fixed-size shards. Each shard sieves its
//! own primes and tallies per-checkpoint counts; tallies are summed, so the
//! output does not depend on the shard size or on the execution strategy.

mod artin;
mod sieve;
mod trinomial;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use artin::artin_constant;
pub use sieve::{primes_in_segment, simple_sieve, Primes};
pub use trinomial::{
    exists_primitive_trinomial, exists_primitive_trinomial_exhaustive, ClaimHit, ExpExpr,
    ZeroClaim, ZeroDensityReport, MAX_CLAIM_I, MAX_CLAIM_LIMIT,
};

use crate::exec::Execution;
use crate::ff::modular::factorize;
use crate::fpr::{self, FprError};

pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;
pub const MAX_CENSUS_LIMIT: u64 = 10_000_000;
pub const MAX_TRINOMIAL_LIMIT: u64 = 1_000_000;
/// Prime bound used for the predicted constants.
pub const ARTIN_PRIME_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DensityError {
    #[error("limit {limit} exceeds the maximum {max}")]
    LimitTooLarge { limit: u64, max: u64 },
    #[error("checkpoint {checkpoint} outside 1..={limit}")]
    InvalidCheckpoint { checkpoint: u64, limit: u64 },
    #[error("exponent {exponent} outside [1, p-2] for p = {p}")]
    ExponentOutOfRange { p: u64, exponent: i64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("claim check bounds exceeded: limit {limit} (max 100000), i_max {i_max} (max 10)")]
    ClaimBounds { limit: u64, i_max: u64 },
    #[error(transparent)]
    Fpr(#[from] FprError),
}

/// Ascending primes `<= limit`.
pub fn prime_sieve(limit: u64) -> Result<Primes, DensityError> {
    if limit > MAX_SIEVE_LIMIT {
        return Err(DensityError::LimitTooLarge {
            limit,
            max: MAX_SIEVE_LIMIT,
        });
    }
    Ok(Primes::new(limit))
}

/// Artin's constant truncated at [`ARTIN_PRIME_BOUND`], computed once.
pub fn artin() -> f64 {
    static A: OnceLock<f64> = OnceLock::new();
    *A.get_or_init(|| artin_constant(ARTIN_PRIME_BOUND))
}

/// `(27/38 A, 9/38 A)`: the limiting proportions of primes where `T4` and
/// `G4` apply.
pub fn predicted_constants() -> (f64, f64) {
    let a = artin();
    (27.0 / 38.0 * a, 9.0 / 38.0 * a)
}

/// What a census counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusKind {
    T4,
    G4,
    Trinomial(ExpExpr, ExpExpr),
}

impl CensusKind {
    fn max_limit(self) -> u64 {
        match self {
            CensusKind::T4 | CensusKind::G4 => MAX_CENSUS_LIMIT,
            CensusKind::Trinomial(..) => MAX_TRINOMIAL_LIMIT,
        }
    }

    /// Limiting density where one is known or conjectured.
    pub fn predicted(self) -> Option<f64> {
        let (t4, g4) = predicted_constants();
        match self {
            CensusKind::T4 => Some(t4),
            CensusKind::G4 => Some(g4),
            CensusKind::Trinomial(a, b) => {
                let pair = |x: ExpExpr, y: ExpExpr| (a == x && b == y) || (a == y && b == x);
                let one = ExpExpr::new(1, 0);
                let two = ExpExpr::new(2, 0);
                if a == one && b == one {
                    Some(artin())
                } else if pair(one, two) || pair(two, ExpExpr::new(1, 1)) {
                    Some(t4)
                } else if pair(one, ExpExpr::new(-1, 2)) {
                    Some(0.0)
                } else {
                    None
                }
            }
        }
    }

    fn verdict(self, p: u64) -> Result<Verdict, DensityError> {
        if p == 2 {
            return Ok(match self {
                CensusKind::Trinomial(..) => Verdict::Excluded,
                _ => Verdict::Miss,
            });
        }
        let hit = match self {
            CensusKind::T4 => {
                // cheap residue filter first: x^2 - x - 1 has roots only for
                // p = 5 or p = +-1 (mod 10)
                p == 5
                    || (matches!(p % 10, 1 | 9)
                        && !fpr::fpr_set_unchecked(p, &factorize(p - 1)).is_empty())
            }
            CensusKind::G4 => (p == 5 || matches!(p % 10, 1 | 9)) && fpr::g4_applicable(p)?,
            CensusKind::Trinomial(e1, e2) => match (e1.eval(p), e2.eval(p)) {
                (Some(i), Some(j)) => trinomial::decide(p, i, j),
                _ => return Ok(Verdict::Excluded),
            },
        };
        Ok(if hit { Verdict::Hit } else { Verdict::Miss })
    }
}

impl fmt::Display for CensusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusKind::T4 => f.write_str("t4"),
            CensusKind::G4 => f.write_str("g4"),
            CensusKind::Trinomial(a, b) => write!(f, "trinomial({a};{b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Hit,
    Miss,
    Excluded,
}

/// Counts at one checkpoint `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusRow {
    pub x: u64,
    /// Primes `<= x` satisfying the census predicate.
    pub count: u64,
    /// All primes `<= x`.
    pub pi_x: u64,
    pub ratio: f64,
    pub predicted: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Census {
    pub kind: CensusKind,
    pub limit: u64,
    pub rows: Vec<CensusRow>,
    /// Primes `<= limit` skipped because an exponent left `[1, p - 2]`.
    pub excluded: u64,
}

impl Census {
    pub fn last(&self) -> &CensusRow {
        self.rows
            .last()
            .expect("a census has at least one checkpoint")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub exec: Execution,
    /// Integers per shard.
    pub shard_size: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            exec: Execution::default(),
            shard_size: sieve::SEGMENT,
        }
    }
}

/// Powers of ten up to `limit`, followed by `limit` itself.
pub fn default_checkpoints(limit: u64) -> Vec<u64> {
    let mut out: Vec<u64> = std::iter::successors(Some(10u64), |x| x.checked_mul(10))
        .take_while(|&x| x <= limit)
        .collect();
    if out.last() != Some(&limit) && limit >= 1 {
        out.push(limit);
    }
    out
}

fn resolve_checkpoints(limit: u64, custom: Option<&[u64]>) -> Result<Vec<u64>, DensityError> {
    let Some(custom) = custom else {
        return Ok(default_checkpoints(limit));
    };
    let mut cps = custom.to_vec();
    if let Some(&bad) = cps.iter().find(|&&c| c == 0 || c > limit) {
        return Err(DensityError::InvalidCheckpoint {
            checkpoint: bad,
            limit,
        });
    }
    cps.sort_unstable();
    cps.dedup();
    if cps.is_empty() {
        cps.push(limit);
    }
    Ok(cps)
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    primes: u64,
    hits: u64,
    excluded: u64,
}

/// Runs a census over the primes up to `limit`.
pub fn census(
    kind: CensusKind,
    limit: u64,
    checkpoints: Option<&[u64]>,
    opts: CensusOptions,
) -> Result<Census, DensityError> {
    if limit > kind.max_limit() {
        return Err(DensityError::LimitTooLarge {
            limit,
            max: kind.max_limit(),
        });
    }
    if limit < 2 {
        return Err(DensityError::InvalidCheckpoint {
            checkpoint: limit,
            limit,
        });
    }
    let cps = resolve_checkpoints(limit, checkpoints)?;
    let last = *cps.last().expect("nonempty");
    let base = simple_sieve(sieve::isqrt(last));
    let shard = opts.shard_size.max(1);
    let shards: Vec<(u64, u64)> = (0..=last / shard)
        .map(|s| (s * shard, ((s + 1) * shard).min(last + 1)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    // tallies[b] covers primes in (cps[b-1], cps[b]]
    let partials = opts.exec.map_collect(shards, |(lo, hi)| {
        let mut tallies = vec![Tally::default(); cps.len()];
        let mut bucket = cps.partition_point(|&c| c < lo);
        for p in primes_in_segment(lo, hi, &base) {
            while cps[bucket] < p {
                bucket += 1;
            }
            let t = &mut tallies[bucket];
            t.primes += 1;
            match kind.verdict(p)? {
                Verdict::Hit => t.hits += 1,
                Verdict::Miss => {}
                Verdict::Excluded => t.excluded += 1,
            }
        }
        Ok::<_, DensityError>(tallies)
    });

    let mut totals = vec![Tally::default(); cps.len()];
    for part in partials {
        for (acc, t) in totals.iter_mut().zip(part?) {
            acc.primes += t.primes;
            acc.hits += t.hits;
            acc.excluded += t.excluded;
        }
    }

    let predicted = kind.predicted();
    let mut running = Tally::default();
    let rows = cps
        .iter()
        .zip(&totals)
        .map(|(&x, t)| {
            running.primes += t.primes;
            running.hits += t.hits;
            running.excluded += t.excluded;
            CensusRow {
                x,
                count: running.hits,
                pi_x: running.primes,
                ratio: if running.primes == 0 {
                    0.0
                } else {
                    running.hits as f64 / running.primes as f64
                },
                predicted,
            }
        })
        .collect();
    Ok(Census {
        kind,
        limit,
        rows,
        excluded: running.excluded,
    })
}

/// `T(x)`: primes `p <= x` with a Fibonacci primitive root, i.e. where `T4` applies.
pub fn census_t4(limit: u64, checkpoints: Option<&[u64]>) -> Result<Census, DensityError> {
    census(CensusKind::T4, limit, checkpoints, CensusOptions::default())
}

/// `G(x)`: primes `p <= x` where `G4` applies.
pub fn census_g4(limit: u64, checkpoints: Option<&[u64]>) -> Result<Census, DensityError> {
    census(CensusKind::G4, limit, checkpoints, CensusOptions::default())
}

/// Primes `p <= x` with a primitive root solving `a^e1(p) + a^e2(p) = 1`.
pub fn trinomial_census(
    limit: u64,
    e1: ExpExpr,
    e2: ExpExpr,
    checkpoints: Option<&[u64]>,
) -> Result<Census, DensityError> {
    census(
        CensusKind::Trinomial(e1, e2),
        limit,
        checkpoints,
        CensusOptions::default(),
    )
}

/// Checks the three zero-density families for `i = 1..=i_max` over the odd
/// primes up to `limit`. Solutions are returned as data, split by whether
/// the prime lies above the claimed bound.
pub fn verify_zero_density_claims(
    limit: u64,
    i_max: u64,
) -> Result<ZeroDensityReport, DensityError> {
    verify_zero_density_claims_with(limit, i_max, Execution::default())
}

pub fn verify_zero_density_claims_with(
    limit: u64,
    i_max: u64,
    exec: Execution,
) -> Result<ZeroDensityReport, DensityError> {
    if limit > MAX_CLAIM_LIMIT || i_max > MAX_CLAIM_I {
        return Err(DensityError::ClaimBounds { limit, i_max });
    }
    let primes: Vec<u64> = Primes::new(limit).filter(|&p| p > 2).collect();
    let parts = exec.map_collect(primes, |p| trinomial::claims_for_prime(p, i_max));
    let mut report = ZeroDensityReport::default();
    for part in parts {
        report.violations.extend(part.violations);
        report.exceptions.extend(part.exceptions);
        report.checked += part.checked;
        report.out_of_range += part.out_of_range;
    }
    report.violations.sort_unstable();
    report.exceptions.sort_unstable();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::modular::{is_primitive_mod, mul_mod};

    fn t4_by_scan(p: u64) -> bool {
        let f = factorize(p - 1);
        (1..p).any(|a| (mul_mod(a, a, p) + a) % p == 1 && is_primitive_mod(a, p, &f))
    }

    #[test]
    fn sieve_counts() {
        assert_eq!(prime_sieve(30).unwrap().count(), 10);
        assert_eq!(prime_sieve(2).unwrap().collect::<Vec<_>>(), [2]);
        assert_eq!(prime_sieve(1_000_000).unwrap().count(), 78498);
        assert_eq!(simple_sieve(1_000_000).len(), 78498);
        assert!(matches!(
            prime_sieve(MAX_SIEVE_LIMIT + 1),
            Err(DensityError::LimitTooLarge { .. })
        ));
    }

    #[test]
    fn predicted_values() {
        let (t4, g4) = predicted_constants();
        assert!((t4 - 0.2657).abs() < 5e-4);
        assert!((g4 - 0.08856).abs() < 5e-4);
        assert!((t4 / g4 - 3.0).abs() < 1e-12);
    }

    #[test]
    fn checkpoints() {
        assert_eq!(default_checkpoints(1000), [10, 100, 1000]);
        assert_eq!(default_checkpoints(2500), [10, 100, 1000, 2500]);
        assert_eq!(
            resolve_checkpoints(100, Some(&[50, 20, 50])).unwrap(),
            [20, 50]
        );
        assert!(resolve_checkpoints(100, Some(&[0])).is_err());
        assert!(resolve_checkpoints(100, Some(&[101])).is_err());
    }

    #[test]
    fn t4_census_small() {
        let c = census_t4(60, Some(&(2..=60).collect::<Vec<_>>())).unwrap();
        let counted: Vec<u64> = c
            .rows
            .windows(2)
            .filter(|w| w[1].count > w[0].count)
            .map(|w| w[1].x)
            .collect();
        assert_eq!(counted, [5, 11, 19, 31, 41, 59]);
        let scan: Vec<u64> = simple_sieve(60)
            .into_iter()
            .filter(|&p| p > 2 && t4_by_scan(p))
            .collect();
        assert_eq!(counted, scan);
        assert_eq!(c.last().pi_x, 17);
    }

    #[test]
    fn g4_census_small() {
        let cps: Vec<u64> = (2..=100).collect();
        let g = census_g4(100, Some(&cps)).unwrap();
        let t = census_t4(100, Some(&cps)).unwrap();
        let at = |c: &Census, x: u64| c.rows.iter().find(|r| r.x == x).unwrap().count;
        assert_eq!(at(&g, 41) - at(&g, 40), 1);
        for p in [11, 19, 29, 31] {
            assert_eq!(at(&g, p), at(&g, p - 1), "p={p}");
        }
        for (a, b) in g.rows.iter().zip(&t.rows) {
            assert!(a.count <= b.count);
        }
    }

    #[test]
    fn sharding_and_execution_do_not_change_results() {
        let kinds = [
            CensusKind::T4,
            CensusKind::G4,
            CensusKind::Trinomial(ExpExpr::new(1, 0), ExpExpr::new(1, 0)),
            CensusKind::Trinomial(ExpExpr::new(2, 0), ExpExpr::new(1, 1)),
        ];
        for kind in kinds {
            let reference = census(
                kind,
                20_000,
                None,
                CensusOptions {
                    exec: Execution::Sequential,
                    shard_size: 20_001,
                },
            )
            .unwrap();
            for shard_size in [97, 1000, 4096, 65536] {
                for exec in [Execution::Sequential, Execution::Parallel] {
                    let c = census(kind, 20_000, None, CensusOptions { exec, shard_size }).unwrap();
                    assert_eq!(c, reference, "{kind} shard={shard_size}");
                }
            }
        }
    }

    #[test]
    fn census_limits() {
        assert!(matches!(
            census_t4(MAX_CENSUS_LIMIT + 1, None),
            Err(DensityError::LimitTooLarge { .. })
        ));
        let e = ExpExpr::new(1, 0);
        assert!(matches!(
            trinomial_census(MAX_TRINOMIAL_LIMIT + 1, e, e, None),
            Err(DensityError::LimitTooLarge { .. })
        ));
    }

    #[test]
    fn reciprocal_trinomial_census() {
        let c = trinomial_census(
            10_000,
            ExpExpr::new(1, 0),
            ExpExpr::new(-1, 2),
            Some(&[7, 10_000]),
        )
        .unwrap();
        // p = 3 and p = 7 only
        assert_eq!(c.rows[0].count, 2);
        assert_eq!(c.rows[1].count, 2);
        assert_eq!(c.excluded, 1);
    }
}
