//! Fibonacci primitive roots and the `T4` / `G4` applicability predicates.
//!
//! `g` is a Fibonacci primitive root (FPR) modulo `p` when it is a primitive
//! root with `g^2 = g + 1`. Since `g (g - 1) = 1`, the powers of `g - 1` are
//! the powers of `g` in reverse, so `g - 1` is a primitive root solving
//! `a^2 + a = 1`, which is exactly what the `T4` construction needs.

use thiserror::Error;

use crate::ff::modular::{
    add_mod, factorize, inv_mod, is_prime, is_primitive_mod, mul_mod, prime_power, sqrt_mod_p,
    sub_mod,
};
use crate::ff::{field_of_size, FfError, Field, MAX_TABLE_FIELD_SIZE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FprError {
    #[error("p = 2 is excluded")]
    EvenPrime,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("{g} is not a Fibonacci primitive root modulo {p}")]
    NotAnFpr { g: u64, p: u64 },
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("G4 residue characterization and witness search disagree at q = {q}")]
    InternalInconsistency { q: u64 },
    #[error(transparent)]
    Field(#[from] FfError),
}

fn check_odd_prime(p: u64) -> Result<(), FprError> {
    if p == 2 {
        return Err(FprError::EvenPrime);
    }
    if !is_prime(p) {
        return Err(FprError::NotPrime(p));
    }
    Ok(())
}

/// Roots of `x^2 - x - 1` modulo an odd prime, ascending and deduplicated.
///
/// The discriminant is 5, so the roots are `(1 +- sqrt 5) / 2`.
pub fn fpr_candidates(p: u64) -> Result<Vec<u64>, FprError> {
    check_odd_prime(p)?;
    Ok(candidates_unchecked(p))
}

pub(crate) fn candidates_unchecked(p: u64) -> Vec<u64> {
    let Ok(Some((r, s))) = sqrt_mod_p(5 % p, p) else {
        return Vec::new();
    };
    let half = p.div_ceil(2);
    let mut roots = vec![
        mul_mod(add_mod(1, r, p), half, p),
        mul_mod(add_mod(1, s, p), half, p),
    ];
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// Fibonacci primitive roots modulo an odd prime, ascending.
pub fn fpr_set(p: u64) -> Result<Vec<u64>, FprError> {
    check_odd_prime(p)?;
    Ok(fpr_set_unchecked(p, &factorize(p - 1)))
}

/// `order_factors` is the factorization of `p - 1`.
pub(crate) fn fpr_set_unchecked(p: u64, order_factors: &[(u64, u32)]) -> Vec<u64> {
    candidates_unchecked(p)
        .into_iter()
        .filter(|&g| is_primitive_mod(g, p, order_factors))
        .collect()
}

/// Maps an FPR `g` to the primitive root `g - 1`, which satisfies `a^2 + a = 1`.
pub fn fpr_to_t4_root(g: u64, p: u64) -> Result<u64, FprError> {
    if !fpr_set(p)?.contains(&(g % p)) {
        return Err(FprError::NotAnFpr { g, p });
    }
    Ok(sub_mod(g % p, 1, p))
}

/// Per-prime summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FprReport {
    pub p: u64,
    /// `p = 5` or `p = +-1 (mod 10)`.
    pub residue_class_ok: bool,
    pub candidates: Vec<u64>,
    pub fprs: Vec<u64>,
    /// `g - 1` for the smallest FPR `g`.
    pub t4_root: Option<u64>,
    pub t4_applicable: bool,
    pub g4_applicable: bool,
}

pub fn fpr_report(p: u64) -> Result<FprReport, FprError> {
    check_odd_prime(p)?;
    let candidates = candidates_unchecked(p);
    let factors = factorize(p - 1);
    let fprs: Vec<u64> = candidates
        .iter()
        .copied()
        .filter(|&g| is_primitive_mod(g, p, &factors))
        .collect();
    let t4_root = fprs.first().map(|&g| sub_mod(g, 1, p));
    Ok(FprReport {
        p,
        residue_class_ok: p == 5 || matches!(p % 10, 1 | 9),
        candidates,
        t4_applicable: !fprs.is_empty(),
        g4_applicable: g4_applicable(p)?,
        fprs,
        t4_root,
    })
}

fn check_prime_power(q: u64) -> Result<(u64, u32), FprError> {
    prime_power(q).ok_or(FprError::NotAPrimePower(q))
}

/// Golomb's necessary condition for `T4`: `q` is 4, 5 or 9, or a prime
/// congruent to 1 or 9 modulo 10.
pub fn t4_admissible(q: u64) -> Result<bool, FprError> {
    let (_, k) = check_prime_power(q)?;
    Ok(matches!(q, 4 | 5 | 9) || (k == 1 && matches!(q % 10, 1 | 9)))
}

/// Whether GF(q) actually has a primitive `a` with `a^2 + a = 1`.
pub fn t4_applicable(q: u64) -> Result<bool, FprError> {
    let (p, k) = check_prime_power(q)?;
    if k == 1 {
        if p == 2 {
            return Ok(false);
        }
        return Ok(!fpr_set_unchecked(p, &factorize(p - 1)).is_empty());
    }
    let field = extension_for_search(q)?;
    let found =
        (1..q).any(|a| field.add_rep(field.mul_rep(a, a), a) == 1 && field.is_primitive_rep(a));
    Ok(found)
}

fn extension_for_search(q: u64) -> Result<Field, FprError> {
    if q > MAX_TABLE_FIELD_SIZE {
        return Err(FfError::FieldTooLarge(q).into());
    }
    Ok(field_of_size(q)?)
}

/// Golomb's characterization of `G4`: `q` is 4, 5 or 9, or a prime where
/// `T4` applies and `q = 1, 9 (mod 20)`.
pub fn g4_by_residue(q: u64) -> Result<bool, FprError> {
    let (_, k) = check_prime_power(q)?;
    if matches!(q, 4 | 5 | 9) {
        return Ok(true);
    }
    Ok(k == 1 && matches!(q % 20, 1 | 9) && t4_applicable(q)?)
}

/// Smallest `alpha` (with `beta = 1 - alpha`) such that both are primitive,
/// `alpha + beta = 1` and `alpha^2 + beta^-1 = 1`.
///
/// Any solution has `alpha^2 = alpha + 1`, so over a prime field only the
/// two roots of `x^2 - x - 1` need checking; extension fields are scanned.
pub fn g4_witness(q: u64) -> Result<Option<(u64, u64)>, FprError> {
    let (p, k) = check_prime_power(q)?;
    if k == 1 {
        if p == 2 {
            return Ok(None);
        }
        let factors = factorize(p - 1);
        let hit = candidates_unchecked(p).into_iter().find_map(|a| {
            let b = sub_mod(1, a, p);
            let binv = inv_mod(b, p)?;
            let ok = is_primitive_mod(a, p, &factors)
                && is_primitive_mod(b, p, &factors)
                && add_mod(a, b, p) == 1
                && add_mod(mul_mod(a, a, p), binv, p) == 1;
            ok.then_some((a, b))
        });
        return Ok(hit);
    }
    let f = extension_for_search(q)?;
    Ok((1..q).find_map(|a| {
        let b = f.sub_rep(1, a);
        let binv = f.inv_rep(b)?;
        let ok =
            f.add_rep(f.mul_rep(a, a), binv) == 1 && f.is_primitive_rep(a) && f.is_primitive_rep(b);
        ok.then_some((a, b))
    }))
}

/// Whether the `G4` construction applies over GF(q). Computes both the
/// residue characterization and a witness search, and fails if they differ.
pub fn g4_applicable(q: u64) -> Result<bool, FprError> {
    let by_residue = g4_by_residue(q)?;
    let by_witness = g4_witness(q)?.is_some();
    if by_residue != by_witness {
        return Err(FprError::InternalInconsistency { q });
    }
    Ok(by_residue)
}

/// For `p = 1, 9 (mod 10)` with `(p - 1) / 2` prime there is exactly one FPR.
pub fn phong_check(p: u64) -> Result<bool, FprError> {
    let qualifies = is_prime(p) && matches!(p % 10, 1 | 9) && is_prime((p - 1) / 2);
    if !qualifies {
        return Err(FprError::PreconditionNotMet(format!(
            "{p} is not a prime = 1, 9 (mod 10) with (p-1)/2 prime"
        )));
    }
    Ok(fpr_set(p)?.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_roots(p: u64) -> Vec<u64> {
        (0..p)
            .filter(|&x| (x * x + p - x + p - 1).is_multiple_of(p))
            .collect()
    }

    #[test]
    fn candidate_examples() {
        assert_eq!(fpr_candidates(11).unwrap(), [4, 8]);
        assert_eq!(fpr_candidates(7).unwrap(), Vec::<u64>::new());
        assert_eq!(fpr_candidates(5).unwrap(), [3]);
        assert_eq!(fpr_candidates(2), Err(FprError::EvenPrime));
        assert_eq!(fpr_candidates(9), Err(FprError::NotPrime(9)));
        for p in (3..2000).filter(|&p| is_prime(p)) {
            assert_eq!(fpr_candidates(p).unwrap(), brute_roots(p), "p={p}");
        }
    }

    #[test]
    fn fpr_set_examples() {
        assert_eq!(fpr_set(11).unwrap(), [8]);
        assert_eq!(fpr_set(5).unwrap(), [3]);
        assert_eq!(fpr_candidates(29).unwrap(), [6, 24]);
        assert_eq!(fpr_set(29).unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn t4_roots() {
        assert_eq!(fpr_to_t4_root(8, 11).unwrap(), 7);
        assert_eq!(fpr_to_t4_root(3, 5).unwrap(), 2);
        assert_eq!(fpr_to_t4_root(7, 41).unwrap(), 6);
        assert_eq!(
            fpr_to_t4_root(4, 11),
            Err(FprError::NotAnFpr { g: 4, p: 11 })
        );
    }

    #[test]
    fn admissibility() {
        assert!(t4_admissible(29).unwrap());
        assert!(!t4_applicable(29).unwrap());
        assert!(t4_applicable(11).unwrap());
        assert!(!t4_admissible(7).unwrap());
        assert!(t4_admissible(4).unwrap() && t4_applicable(4).unwrap());
        assert!(t4_admissible(9).unwrap() && t4_applicable(9).unwrap());
        assert!(!t4_admissible(8).unwrap() && !t4_applicable(8).unwrap());
        assert_eq!(t4_admissible(12), Err(FprError::NotAPrimePower(12)));
        assert_eq!(t4_applicable(1), Err(FprError::NotAPrimePower(1)));
    }

    #[test]
    fn g4_examples() {
        assert!(g4_applicable(41).unwrap());
        assert_eq!(g4_witness(41).unwrap(), Some((7, 35)));
        assert!(!g4_applicable(11).unwrap());
        assert!(!g4_applicable(29).unwrap());
        for q in [4, 5, 9] {
            assert!(g4_applicable(q).unwrap(), "q={q}");
        }
        assert_eq!(g4_applicable(6), Err(FprError::NotAPrimePower(6)));
    }

    #[test]
    fn report_fields() {
        let r = fpr_report(11).unwrap();
        assert_eq!(r.fprs, [8]);
        assert_eq!(r.t4_root, Some(7));
        assert!(r.t4_applicable && !r.g4_applicable && r.residue_class_ok);
        let r = fpr_report(7).unwrap();
        assert!(r.fprs.is_empty() && r.t4_root.is_none() && !r.t4_applicable);
        let r = fpr_report(41).unwrap();
        assert!(r.g4_applicable);
        assert_eq!(r.fprs, [7, 35]);
    }

    #[test]
    fn phong_corollary() {
        assert!(phong_check(11).unwrap());
        assert!(matches!(
            phong_check(13),
            Err(FprError::PreconditionNotMet(_))
        ));
        let qualifying: Vec<u64> = (3..10_000)
            .filter(|&p| is_prime(p) && matches!(p % 10, 1 | 9) && is_prime((p - 1) / 2))
            .collect();
        assert!(qualifying.len() > 20);
        for p in qualifying {
            assert!(phong_check(p).unwrap(), "p={p}");
        }
    }
}
