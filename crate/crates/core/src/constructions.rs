//! Algebraic Costas constructions over GF(q).
//!
//! Coordinates: column `i` and row `f(i)`, both 1-based. Welch arrays use the
//! exponential form `f(i) = g^i`; Lempel and Golomb arrays use the
//! logarithmic form, a dot at `(i, j)` iff `alpha^i + beta^j = 1`.
//!
//! | method | size  | requirement                                          |
//! |--------|-------|------------------------------------------------------|
//! | W1     | p - 1 | `g` primitive mod `p`                                |
//! | W2     | p - 2 | W1 minus its corner dot `(p - 1, 1)`                 |
//! | L2     | q - 2 | `alpha` primitive                                    |
//! | G2     | q - 2 | `alpha`, `beta` primitive                            |
//! | G3     | q - 3 | G2 with `alpha + beta = 1`                           |
//! | G4c2   | q - 4 | G3 with `q = 2^k`, `k >= 3`                          |
//! | T4     | q - 4 | L2 with `alpha^2 + alpha = 1`                        |
//! | G4     | q - 4 | G3 with `alpha^2 + beta^-1 = 1`                      |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::costas::{Corner, CostasCandidate, CostasError};
use crate::exec::Execution;
use crate::ff::modular::prime_power;
use crate::ff::{field_of_size, FfError, Field, FieldElement, LogTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] FfError),
    #[error(transparent)]
    Costas(#[from] CostasError),
    #[error("{method}: generator {rep} is not primitive")]
    NotPrimitive { method: Method, rep: u64 },
    #[error("{method}: requires a prime field, got GF({q})")]
    NotPrimeField { method: Method, q: u64 },
    #[error("{method}: GF({q}) is too small")]
    DegenerateSize { method: Method, q: u64 },
    #[error("{method}: alpha + beta != 1")]
    CornerConditionFailed { method: Method },
    #[error("{method}: requires characteristic 2 and q >= 8, got GF({q})")]
    WrongCharacteristic { method: Method, q: u64 },
    #[error("t4: alpha^2 + alpha != 1")]
    T4ConditionFailed,
    #[error("g4: {0} fails")]
    G4ConditionFailed(G4Equation),
    #[error("{method}: a second generator beta is required")]
    MissingBeta { method: Method },
    #[error("alpha and beta belong to different fields")]
    FieldMismatch,
    #[error("{method}: output failed the Costas check")]
    NotCostas { method: Method },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G4Equation {
    /// `alpha + beta = 1`
    Sum,
    /// `alpha^2 + beta^-1 = 1`
    SquarePlusInverse,
}

impl fmt::Display for G4Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            G4Equation::Sum => "alpha + beta = 1",
            G4Equation::SquarePlusInverse => "alpha^2 + beta^-1 = 1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    W1,
    W2,
    L2,
    G2,
    G3,
    G4Char2,
    T4,
    G4,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::W1,
        Method::W2,
        Method::L2,
        Method::G2,
        Method::G3,
        Method::G4Char2,
        Method::T4,
        Method::G4,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::W1 => "w1",
            Method::W2 => "w2",
            Method::L2 => "l2",
            Method::G2 => "g2",
            Method::G3 => "g3",
            Method::G4Char2 => "g4c2",
            Method::T4 => "t4",
            Method::G4 => "g4",
        }
    }

    /// Side length of the array this method builds over GF(q).
    pub fn size(self, q: u64) -> u64 {
        let deficit = match self {
            Method::W1 => 1,
            Method::W2 | Method::L2 | Method::G2 => 2,
            Method::G3 => 3,
            Method::G4Char2 | Method::T4 | Method::G4 => 4,
        };
        q.saturating_sub(deficit)
    }

    pub fn uses_beta(self) -> bool {
        matches!(self, Method::G2 | Method::G3 | Method::G4Char2 | Method::G4)
    }

    /// Why the method does not apply over a field where [`find_spec`] fails.
    pub fn inapplicable_reason(self) -> &'static str {
        match self {
            Method::W1 => "needs a prime field with p >= 3",
            Method::W2 => "needs a prime field with p >= 5",
            Method::L2 | Method::G2 => "needs q >= 4",
            Method::G3 => "no primitive alpha, beta with alpha+beta=1",
            Method::G4Char2 => "needs q=2^k >= 8 with primitive alpha, beta and alpha+beta=1",
            Method::T4 => "no primitive root with a^2+a=1",
            Method::G4 => "no primitive alpha, beta with alpha+beta=1 and alpha^2+beta^-1=1",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Everything needed to rebuild one array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub method: Method,
    pub alpha: FieldElement,
    pub beta: Option<FieldElement>,
}

impl ConstructionSpec {
    pub fn field(&self) -> &Field {
        self.alpha.field()
    }
}

fn ensure_primitive(method: Method, a: &FieldElement) -> Result<(), ConstructionError> {
    if a.is_zero() || !a.is_primitive()? {
        return Err(ConstructionError::NotPrimitive {
            method,
            rep: a.rep(),
        });
    }
    Ok(())
}

fn ensure_size(c: &CostasCandidate, method: Method, q: u64) {
    assert_eq!(c.n() as u64, method.size(q), "{method} size contract");
}

/// Welch array of size `p - 1`: `f(i) = g^i mod p`.
pub fn welch_w1(g: &FieldElement) -> Result<CostasCandidate, ConstructionError> {
    let field = g.field();
    let p = field.size();
    if !field.is_prime_field() {
        return Err(ConstructionError::NotPrimeField {
            method: Method::W1,
            q: p,
        });
    }
    if p < 3 {
        return Err(ConstructionError::DegenerateSize {
            method: Method::W1,
            q: p,
        });
    }
    ensure_primitive(Method::W1, g)?;
    let mut x = 1u64;
    let perm = (1..p)
        .map(|_| {
            x = field.mul_rep(x, g.rep());
            x as u32
        })
        .collect();
    let c = CostasCandidate::from_perm_unchecked(perm);
    ensure_size(&c, Method::W1, p);
    Ok(c)
}

/// Welch array of size `p - 2`: W1 without the corner dot `(p - 1, 1)`.
pub fn welch_w2(g: &FieldElement) -> Result<CostasCandidate, ConstructionError> {
    let p = g.field().size();
    if g.field().is_prime_field() && p < 5 {
        return Err(ConstructionError::DegenerateSize {
            method: Method::W2,
            q: p,
        });
    }
    let w1 = welch_w1(g).map_err(|e| match e {
        ConstructionError::NotPrimitive { rep, .. } => ConstructionError::NotPrimitive {
            method: Method::W2,
            rep,
        },
        ConstructionError::NotPrimeField { q, .. } => ConstructionError::NotPrimeField {
            method: Method::W2,
            q,
        },
        other => other,
    })?;
    let c = w1.remove_corner(Corner::LastColumnFirstRow)?;
    ensure_size(&c, Method::W2, p);
    Ok(c)
}

/// Lempel array of size `q - 2`: a dot at `(i, j)` iff `alpha^i + alpha^j = 1`.
pub fn lempel_l2(alpha: &FieldElement) -> Result<CostasCandidate, ConstructionError> {
    let c = golomb_core(Method::L2, alpha, alpha)?;
    Ok(c)
}

/// Golomb array of size `q - 2`: a dot at `(i, j)` iff `alpha^i + beta^j = 1`.
pub fn golomb_g2(
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<CostasCandidate, ConstructionError> {
    golomb_core(Method::G2, alpha, beta)
}

fn golomb_core(
    method: Method,
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<CostasCandidate, ConstructionError> {
    if alpha.field() != beta.field() {
        return Err(ConstructionError::FieldMismatch);
    }
    let field = alpha.field();
    let q = field.size();
    if q < 4 {
        return Err(ConstructionError::DegenerateSize { method, q });
    }
    ensure_primitive(method, alpha)?;
    ensure_primitive(method, beta)?;
    let logs = LogTable::new(beta)?;
    let mut power = 1u64;
    let perm = (1..=q - 2)
        .map(|_| {
            power = field.mul_rep(power, alpha.rep());
            // alpha^i is neither 0 nor 1 here, so 1 - alpha^i is a unit != 1
            logs.log(field.sub_rep(1, power)).expect("nonzero") as u32
        })
        .collect();
    let c = CostasCandidate::from_perm_unchecked(perm);
    ensure_size(&c, Method::G2, q);
    Ok(c)
}

fn is_one_minus(alpha: &FieldElement, beta: &FieldElement) -> bool {
    let f = alpha.field();
    f.add_rep(alpha.rep(), beta.rep()) == 1
}

/// Golomb array of size `q - 3`: G2 minus the dot `(1, 1)` forced by `alpha + beta = 1`.
pub fn golomb_g3(
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<CostasCandidate, ConstructionError> {
    let q = alpha.field().size();
    let g2 = golomb_core(Method::G3, alpha, beta)?;
    if !is_one_minus(alpha, beta) {
        return Err(ConstructionError::CornerConditionFailed { method: Method::G3 });
    }
    let c = g2.remove_leading(1)?;
    ensure_size(&c, Method::G3, q);
    Ok(c)
}

/// Golomb array of size `q - 4` for `q = 2^k`: with `alpha + beta = 1`, the
/// Frobenius gives `alpha^2 + beta^2 = 1`, so G2 has dots at `(1, 1)` and `(2, 2)`.
pub fn golomb_g4_char2(
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<CostasCandidate, ConstructionError> {
    let field = alpha.field();
    let q = field.size();
    if field.characteristic() != 2 || q < 8 {
        return Err(ConstructionError::WrongCharacteristic {
            method: Method::G4Char2,
            q,
        });
    }
    let g2 = golomb_core(Method::G4Char2, alpha, beta)?;
    if !is_one_minus(alpha, beta) {
        return Err(ConstructionError::CornerConditionFailed {
            method: Method::G4Char2,
        });
    }
    let c = g2.remove_leading(2)?;
    ensure_size(&c, Method::G4Char2, q);
    Ok(c)
}

fn satisfies_t4(alpha: &FieldElement) -> bool {
    let f = alpha.field();
    let a = alpha.rep();
    f.add_rep(f.mul_rep(a, a), a) == 1
}

/// Taylor's variant of the Lempel array, size `q - 4`.
///
/// With `alpha^2 + alpha = 1` the Lempel array has dots at `(1, 2)` and
/// `(2, 1)`, so its leading 2x2 block is closed and can be removed.
pub fn taylor_t4(alpha: &FieldElement) -> Result<CostasCandidate, ConstructionError> {
    let q = alpha.field().size();
    if q < 4 {
        return Err(ConstructionError::DegenerateSize {
            method: Method::T4,
            q,
        });
    }
    ensure_primitive(Method::T4, alpha)?;
    if !satisfies_t4(alpha) {
        return Err(ConstructionError::T4ConditionFailed);
    }
    let lempel = golomb_core(Method::T4, alpha, alpha)?;
    let c = lempel.remove_leading(2)?;
    ensure_size(&c, Method::T4, q);
    Ok(c)
}

fn g4_failure(alpha: &FieldElement, beta: &FieldElement) -> Option<G4Equation> {
    let f = alpha.field();
    let (a, b) = (alpha.rep(), beta.rep());
    if f.add_rep(a, b) != 1 {
        return Some(G4Equation::Sum);
    }
    let lhs = f.inv_rep(b).map(|binv| f.add_rep(f.mul_rep(a, a), binv));
    (lhs != Some(1)).then_some(G4Equation::SquarePlusInverse)
}

/// Golomb's `G4` variant, size `q - 4`.
///
/// `alpha + beta = 1` puts a dot at `(1, 1)` of G2 and `alpha^2 + beta^-1 = 1`
/// puts one at `(2, q - 2)`. Removing the first corner leaves the second at
/// the first column / last row, which is removed next.
pub fn golomb_g4(
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<CostasCandidate, ConstructionError> {
    if alpha.field() != beta.field() {
        return Err(ConstructionError::FieldMismatch);
    }
    let q = alpha.field().size();
    if let Some(eq) = g4_failure(alpha, beta) {
        return Err(ConstructionError::G4ConditionFailed(eq));
    }
    let g2 = golomb_core(Method::G4, alpha, beta)?;
    let c = g2
        .remove_leading(1)?
        .remove_corner(Corner::FirstColumnLastRow)?;
    ensure_size(&c, Method::G4, q);
    if !c.is_costas() {
        return Err(ConstructionError::NotCostas { method: Method::G4 });
    }
    Ok(c)
}

/// Builds the array described by `spec`.
pub fn build(spec: &ConstructionSpec) -> Result<CostasCandidate, ConstructionError> {
    let alpha = &spec.alpha;
    let beta = || {
        spec.beta.as_ref().ok_or(ConstructionError::MissingBeta {
            method: spec.method,
        })
    };
    match spec.method {
        Method::W1 => welch_w1(alpha),
        Method::W2 => welch_w2(alpha),
        Method::L2 => lempel_l2(alpha),
        Method::G2 => golomb_g2(alpha, beta()?),
        Method::G3 => golomb_g3(alpha, beta()?),
        Method::G4Char2 => golomb_g4_char2(alpha, beta()?),
        Method::T4 => taylor_t4(alpha),
        Method::G4 => golomb_g4(alpha, beta()?),
    }
}

/// First parameter set, ascending by `alpha` then `beta`, for which `method`
/// applies over `field`; `None` when the method is inapplicable.
pub fn find_spec(method: Method, field: &Field) -> Option<ConstructionSpec> {
    let q = field.size();
    let primitive = || field.units().filter(|a| field.is_primitive_rep(a.rep()));
    let spec = |alpha: FieldElement, beta: Option<FieldElement>| ConstructionSpec {
        method,
        alpha,
        beta,
    };
    let complement_pair = || {
        primitive().find_map(|a| {
            let b = field.element(field.sub_rep(1, a.rep())).ok()?;
            (!b.is_zero() && field.is_primitive_rep(b.rep())).then_some((a, b))
        })
    };
    match method {
        Method::W1 | Method::W2 => {
            let min_p = if method == Method::W1 { 3 } else { 5 };
            if !field.is_prime_field() || q < min_p {
                return None;
            }
            primitive().next().map(|a| spec(a, None))
        }
        Method::L2 | Method::G2 => {
            if q < 4 {
                return None;
            }
            let a = primitive().next()?;
            let beta = (method == Method::G2).then(|| a.clone());
            Some(spec(a, beta))
        }
        Method::G3 => {
            if q < 4 {
                return None;
            }
            complement_pair().map(|(a, b)| spec(a, Some(b)))
        }
        Method::G4Char2 => {
            if field.characteristic() != 2 || q < 8 {
                return None;
            }
            complement_pair().map(|(a, b)| spec(a, Some(b)))
        }
        Method::T4 => {
            if q < 4 {
                return None;
            }
            primitive().find(satisfies_t4).map(|a| spec(a, None))
        }
        Method::G4 => {
            if q < 4 {
                return None;
            }
            primitive().find_map(|a| {
                let b = field.element(field.sub_rep(1, a.rep())).ok()?;
                let ok =
                    !b.is_zero() && field.is_primitive_rep(b.rep()) && g4_failure(&a, &b).is_none();
                ok.then(|| spec(a, Some(b)))
            })
        }
    }
}

/// Outcome of building every applicable construction for every prime power
/// up to some bound.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    /// Field sizes where each method applied, ascending.
    pub applicable: BTreeMap<Method, Vec<u64>>,
    /// Arrays built and checked.
    pub built: usize,
    /// `(method, q, reason)` for every build error or failed Costas check.
    pub failures: Vec<(Method, u64, String)>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Prime powers `q` with `2 <= q <= qmax`, ascending.
pub fn prime_powers(qmax: u64) -> Vec<u64> {
    (2..=qmax).filter(|&q| prime_power(q).is_some()).collect()
}

/// For every prime power `q <= qmax` and every method, finds parameters with
/// [`find_spec`], builds the array and verifies it.
pub fn sweep(qmax: u64, exec: Execution) -> SweepReport {
    let per_q = exec.map_collect(prime_powers(qmax), |q| {
        let field = field_of_size(q).expect("prime power");
        Method::ALL
            .into_iter()
            .filter_map(|m| {
                let spec = find_spec(m, &field)?;
                let outcome = match build(&spec) {
                    Ok(c) if c.is_costas() => Ok(()),
                    Ok(c) => Err(format!("not costas: {c}")),
                    Err(e) => Err(e.to_string()),
                };
                Some((m, q, outcome))
            })
            .collect::<Vec<_>>()
    });
    let mut report = SweepReport::default();
    for (m, q, outcome) in per_q.into_iter().flatten() {
        report.applicable.entry(m).or_default().push(q);
        report.built += 1;
        if let Err(reason) = outcome {
            report.failures.push((m, q, reason));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(q: u64, rep: u64) -> FieldElement {
        field_of_size(q).unwrap().element(rep).unwrap()
    }

    fn perm(c: CostasCandidate) -> Vec<u32> {
        c.into_perm()
    }

    #[test]
    fn welch_examples() {
        assert_eq!(perm(welch_w1(&el(5, 2)).unwrap()), [2, 4, 3, 1]);
        assert_eq!(perm(welch_w1(&el(3, 2)).unwrap()), [2, 1]);
        assert_eq!(perm(welch_w1(&el(7, 3)).unwrap()), [3, 2, 6, 4, 5, 1]);
        assert_eq!(perm(welch_w2(&el(5, 2)).unwrap()), [1, 3, 2]);
        assert_eq!(perm(welch_w2(&el(7, 3)).unwrap()), [2, 1, 5, 3, 4]);
        assert!(matches!(
            welch_w1(&el(7, 2)),
            Err(ConstructionError::NotPrimitive { rep: 2, .. })
        ));
        assert!(matches!(
            welch_w1(&el(9, 2)),
            Err(ConstructionError::NotPrimeField { .. })
        ));
        assert!(matches!(
            welch_w2(&el(3, 2)),
            Err(ConstructionError::DegenerateSize { .. })
        ));
    }

    #[test]
    fn lempel_examples() {
        let a = perm(lempel_l2(&el(11, 2)).unwrap());
        assert_eq!(a, [5, 3, 2, 7, 1, 8, 4, 6, 9]);
        let b = perm(lempel_l2(&el(11, 7)).unwrap());
        assert_eq!(b, [2, 1, 5, 8, 3, 9, 7, 4, 6]);
        let c = lempel_l2(&el(5, 2)).unwrap();
        assert_eq!(c.n(), 3);
        assert!(c.is_costas());
        assert!(matches!(
            lempel_l2(&el(3, 2)),
            Err(ConstructionError::DegenerateSize { .. })
        ));
    }

    #[test]
    fn golomb_examples() {
        let g = golomb_g2(&el(11, 2), &el(11, 6)).unwrap();
        assert_eq!(g.n(), 9);
        assert!(g.is_costas());
        let g = golomb_g2(&el(13, 2), &el(13, 6)).unwrap();
        assert_eq!(g.n(), 11);
        assert!(g.is_costas());
        assert_eq!(
            golomb_g2(&el(11, 7), &el(11, 7)).unwrap(),
            lempel_l2(&el(11, 7)).unwrap()
        );
        assert_eq!(
            golomb_g2(&el(11, 2), &el(13, 2)),
            Err(ConstructionError::FieldMismatch)
        );
    }

    #[test]
    fn golomb_g3_cases() {
        let f = field_of_size(11).unwrap();
        let spec = find_spec(Method::G3, &f).unwrap();
        let c = build(&spec).unwrap();
        assert_eq!(c.n(), 8);
        assert!(c.is_costas());
        // 2 + 4 = 1 in GF(5) but 4 is not primitive
        assert!(matches!(
            golomb_g3(&el(5, 2), &el(5, 4)),
            Err(ConstructionError::NotPrimitive { rep: 4, .. })
        ));
        // both primitive, 2 + 3 = 0
        assert_eq!(
            golomb_g3(&el(5, 2), &el(5, 3)),
            Err(ConstructionError::CornerConditionFailed { method: Method::G3 })
        );
        let c = golomb_g3(&el(5, 3), &el(5, 3)).unwrap();
        assert_eq!(c.perm(), &[2, 1]);
    }

    #[test]
    fn char2_variant() {
        for q in [8u64, 16, 32] {
            let f = field_of_size(q).unwrap();
            let spec = find_spec(Method::G4Char2, &f).unwrap();
            let beta = spec.beta.clone().unwrap();
            let g2 = golomb_g2(&spec.alpha, &beta).unwrap();
            assert_eq!(&g2.perm()[..2], &[1, 2]);
            let c = build(&spec).unwrap();
            assert_eq!(c.n() as u64, q - 4);
            assert!(c.is_costas());
        }
        assert!(matches!(
            golomb_g4_char2(&el(11, 2), &el(11, 10)),
            Err(ConstructionError::WrongCharacteristic { .. })
        ));
        assert!(find_spec(Method::G4Char2, &field_of_size(4).unwrap()).is_none());
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(perm(taylor_t4(&el(11, 7)).unwrap()), [3, 6, 1, 7, 5, 2, 4]);
        assert!(matches!(
            taylor_t4(&el(11, 3)),
            Err(ConstructionError::NotPrimitive { rep: 3, .. })
        ));
        assert_eq!(
            taylor_t4(&el(11, 2)),
            Err(ConstructionError::T4ConditionFailed)
        );
        let f9 = field_of_size(9).unwrap();
        let spec = find_spec(Method::T4, &f9).unwrap();
        let c = build(&spec).unwrap();
        assert_eq!(c.n(), 5);
        assert!(c.is_costas());
        assert_eq!(taylor_t4(&el(5, 2)).unwrap().perm(), &[1]);
        assert_eq!(taylor_t4(&el(4, 2)).unwrap().n(), 0);
    }

    #[test]
    fn golomb_g4_examples() {
        let c = golomb_g4(&el(41, 7), &el(41, 35)).unwrap();
        assert_eq!(c.n(), 37);
        assert!(c.is_costas());
        assert_eq!(
            golomb_g4(&el(41, 6), &el(41, 36)),
            Err(ConstructionError::G4ConditionFailed(
                G4Equation::SquarePlusInverse
            ))
        );
        assert_eq!(
            golomb_g4(&el(41, 6), &el(41, 35)),
            Err(ConstructionError::G4ConditionFailed(G4Equation::Sum))
        );
        let f5 = field_of_size(5).unwrap();
        let spec = find_spec(Method::G4, &f5).unwrap();
        assert_eq!(
            (spec.alpha.rep(), spec.beta.as_ref().unwrap().rep()),
            (3, 3)
        );
        assert_eq!(build(&spec).unwrap().perm(), &[1]);
    }

    #[test]
    fn find_spec_selection() {
        assert!(find_spec(Method::T4, &field_of_size(29).unwrap()).is_none());
        let t4 = find_spec(Method::T4, &field_of_size(11).unwrap()).unwrap();
        assert_eq!(t4.alpha.rep(), 7);
        for p in [3u64, 5, 7, 11, 13, 101] {
            let f = field_of_size(p).unwrap();
            let w1 = find_spec(Method::W1, &f).unwrap();
            let smallest = (2..p).find(|&g| f.is_primitive_rep(g)).unwrap();
            assert_eq!(w1.alpha.rep(), smallest);
        }
        assert!(find_spec(Method::W1, &field_of_size(9).unwrap()).is_none());
        let g4 = find_spec(Method::G4, &field_of_size(41).unwrap()).unwrap();
        assert_eq!((g4.alpha.rep(), g4.beta.unwrap().rep()), (7, 35));
    }

    #[test]
    fn small_sweep() {
        let r = sweep(64, Execution::Sequential);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(
            &r.applicable[&Method::T4][..8],
            &[4, 5, 9, 11, 19, 31, 41, 59]
        );
        assert_eq!(r.applicable[&Method::G4Char2], [8, 16, 32, 64]);
        assert_eq!(r, sweep(64, Execution::Parallel));
    }

    #[test]
    fn method_tags_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.tag().parse::<Method>().unwrap(), m);
        }
        assert!("x9".parse::<Method>().is_err());
    }
}
