//! Finite fields GF(p^k) for small `p^k`.
//!
//! Elements are encoded as integers in `[0, q)`: the coefficient vector of
//! the polynomial representative, read in base `p` with the constant term
//! least significant. For `k = 1` the encoding is the residue itself.

pub mod modular;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

pub use modular::sqrt_mod_p;
use modular::{add_mod, factorize, inv_mod, is_prime, mul_mod, pow_mod, sub_mod};

/// Largest field size accepted by [`make_field`].
pub const MAX_FIELD_SIZE: u64 = 1 << 31;
/// Largest field size for which full enumeration (log tables, generator lists) is allowed.
pub const MAX_TABLE_FIELD_SIZE: u64 = 1_000_000;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("characteristic {0} is not prime")]
    CompositeCharacteristic(u64),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("extension degree {0} outside 1..=20")]
    DegreeOutOfRange(u32),
    #[error("field of size {0} is too large")]
    FieldTooLarge(u64),
    #[error("no irreducible polynomial of degree {k} over GF({p})")]
    NoIrreducibleFound { p: u64, k: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("element {0} is not primitive")]
    NotPrimitive(u64),
    #[error("modulus {0} is even")]
    EvenModulus(u64),
    #[error("encoding {rep} out of range for field of size {q}")]
    RepOutOfRange { rep: u64, q: u64 },
}

/// Parameters of GF(p^k).
#[derive(Debug, Clone)]
pub struct FieldDescriptor {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, constant term first, length `k + 1`. Present iff `k > 1`.
    modulus: Option<Vec<u64>>,
    /// Factorization of `q - 1`.
    factors: Vec<(u64, u32)>,
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn order_factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    /// Coefficient vector (constant term first) of the encoded element.
    pub fn decode(&self, mut rep: u64) -> Vec<u64> {
        (0..self.k)
            .map(|_| {
                let d = rep % self.p;
                rep /= self.p;
                d
            })
            .collect()
    }

    pub fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    // Arithmetic on encodings. Callers guarantee reps are in range.

    pub fn add_rep(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return add_mod(a, b, self.p);
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += add_mod(a % self.p, b % self.p, self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg_rep(&self, a: u64) -> u64 {
        if self.k == 1 {
            return sub_mod(0, a, self.p);
        }
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += sub_mod(0, a % self.p, self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub_rep(&self, a: u64, b: u64) -> u64 {
        self.add_rep(a, self.neg_rep(b))
    }

    pub fn mul_rep(&self, a: u64, b: u64) -> u64 {
        let Some(modulus) = &self.modulus else {
            return mul_mod(a, b, self.p);
        };
        let k = self.k as usize;
        let p = self.p;
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = [0u64; 2 * MAX_DEGREE as usize];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        // reduce by the monic modulus from the top degree down
        for top in (k..2 * k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in modulus[..k].iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + c * (p - m)) % p;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn pow_rep(&self, a: u64, exp: u64) -> u64 {
        if self.k == 1 {
            return pow_mod(a, exp, self.p);
        }
        let (mut base, mut exp, mut acc) = (a, exp, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_rep(acc, base);
            }
            base = self.mul_rep(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv_rep(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.k == 1 {
            return inv_mod(a, self.p);
        }
        Some(self.pow_rep(a, self.q - 2))
    }

    pub fn order_rep(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut n = self.q - 1;
        for &(r, e) in &self.factors {
            for _ in 0..e {
                if self.pow_rep(a, n / r) == 1 {
                    n /= r;
                } else {
                    break;
                }
            }
        }
        Some(n)
    }

    pub fn is_primitive_rep(&self, a: u64) -> bool {
        a != 0
            && self
                .factors
                .iter()
                .all(|&(r, _)| self.pow_rep(a, (self.q - 1) / r) != 1)
    }
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldDescriptor {}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// Shared handle to an immutable field descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field(Arc<FieldDescriptor>);

impl Deref for Field {
    type Target = FieldDescriptor;
    fn deref(&self) -> &FieldDescriptor {
        &self.0
    }
}

impl Field {
    pub fn element(&self, rep: u64) -> Result<FieldElement, FfError> {
        if rep >= self.q {
            return Err(FfError::RepOutOfRange { rep, q: self.q });
        }
        Ok(FieldElement {
            field: self.clone(),
            rep,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep: 1,
        }
    }

    /// All nonzero elements, ascending by encoding.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(|rep| FieldElement {
            field: self.clone(),
            rep,
        })
    }

    fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

/// Builds GF(p^k).
///
/// For `k > 1` the modulus is the monic irreducible polynomial of degree `k`
/// whose lower coefficients, read as a base-`p` integer, are smallest.
pub fn make_field(p: u64, k: u32) -> Result<Field, FfError> {
    if !is_prime(p) {
        return Err(FfError::CompositeCharacteristic(p));
    }
    if !(1..=MAX_DEGREE).contains(&k) {
        return Err(FfError::DegreeOutOfRange(k));
    }
    let q = p
        .checked_pow(k)
        .filter(|&q| q <= MAX_FIELD_SIZE)
        .ok_or(FfError::FieldTooLarge(p.saturating_pow(k)))?;
    let modulus = if k == 1 {
        None
    } else {
        Some(smallest_irreducible(p, k).ok_or(FfError::NoIrreducibleFound { p, k })?)
    };
    Ok(Field(Arc::new(FieldDescriptor {
        p,
        k,
        q,
        modulus,
        factors: factorize(q - 1),
    })))
}

/// GF(q) for a prime power `q`.
pub fn field_of_size(q: u64) -> Result<Field, FfError> {
    match modular::prime_power(q) {
        Some((p, k)) => make_field(p, k),
        None => Err(FfError::NotAPrimePower(q)),
    }
}

fn smallest_irreducible(p: u64, k: u32) -> Option<Vec<u64>> {
    let lower_count = p.pow(k);
    (0..lower_count).find_map(|lower| {
        let mut coeffs = digits(lower, p, k as usize);
        coeffs.push(1);
        is_irreducible(&coeffs, p).then_some(coeffs)
    })
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

/// Irreducibility of a monic polynomial over GF(p) by trial
/// division with every monic polynomial of degree up to half its degree.
pub(crate) fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    // linear factors are roots
    let has_root = (0..p).any(|x| {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
            == 0
    });
    if has_root {
        return false;
    }
    for d in 2..=deg / 2 {
        for lower in 0..p.pow(d as u32) {
            let mut divisor = digits(lower, p, d);
            divisor.push(1);
            if poly_rem_is_zero(poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u64], monic: &[u64], p: u64) -> bool {
    let mut rem = num.to_vec();
    let d = monic.len() - 1;
    for top in (d..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        for (i, &m) in monic.iter().enumerate() {
            let idx = top - d + i;
            rem[idx] = sub_mod(rem[idx], mul_mod(c, m, p), p);
        }
    }
    rem[..d].iter().all(|&c| c == 0)
}

/// Element of GF(q), tied to its field.
#[derive(Debug, Clone)]
pub struct FieldElement {
    field: Field,
    rep: u64,
}

impl FieldElement {
    pub fn rep(&self) -> u64 {
        self.rep
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    fn with(&self, rep: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            rep,
        }
    }

    fn check(&self, other: &FieldElement) -> Result<(), FfError> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(FfError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, FfError> {
        self.check(other)?;
        Ok(self.with(self.field.add_rep(self.rep, other.rep)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, FfError> {
        self.check(other)?;
        Ok(self.with(self.field.sub_rep(self.rep, other.rep)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, FfError> {
        self.check(other)?;
        Ok(self.with(self.field.mul_rep(self.rep, other.rep)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg_rep(self.rep))
    }

    pub fn inv(&self) -> Result<FieldElement, FfError> {
        self.field
            .inv_rep(self.rep)
            .map(|r| self.with(r))
            .ok_or(FfError::DivisionByZero)
    }

    /// Square-and-multiply power. Negative exponents invert first; exponents
    /// are reduced modulo `q - 1` only for nonzero bases.
    pub fn pow(&self, exp: i64) -> Result<FieldElement, FfError> {
        if self.rep == 0 {
            return match exp.cmp(&0) {
                Ordering::Less => Err(FfError::DivisionByZero),
                Ordering::Equal => Ok(self.with(1)),
                Ordering::Greater => Ok(self.with(0)),
            };
        }
        let e = exp.rem_euclid((self.field.q - 1) as i64) as u64;
        Ok(self.with(self.field.pow_rep(self.rep, e)))
    }

    pub fn multiplicative_order(&self) -> Result<u64, FfError> {
        self.field.order_rep(self.rep).ok_or(FfError::ZeroElement)
    }

    pub fn is_primitive(&self) -> Result<bool, FfError> {
        if self.rep == 0 {
            return Err(FfError::ZeroElement);
        }
        Ok(self.field.is_primitive_rep(self.rep))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.field.same(&other.field)
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .q
            .cmp(&other.field.q)
            .then(self.rep.cmp(&other.rep))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Smallest primitive element by encoding.
pub fn first_primitive(field: &Field) -> FieldElement {
    field
        .units()
        .find(|a| field.is_primitive_rep(a.rep))
        .expect("GF(q)^* is cyclic")
}

/// Every generator of GF(q)^*, ascending by encoding.
pub fn primitive_elements(field: &Field) -> Result<Vec<FieldElement>, FfError> {
    if field.q > MAX_TABLE_FIELD_SIZE {
        return Err(FfError::FieldTooLarge(field.q));
    }
    let n = field.q - 1;
    let g = first_primitive(field).rep;
    let mut reps = Vec::new();
    let mut power = 1;
    for e in 0..n {
        if modular::gcd(e, n) == 1 {
            reps.push(power);
        }
        power = field.mul_rep(power, g);
    }
    reps.sort_unstable();
    Ok(reps
        .into_iter()
        .map(|rep| FieldElement {
            field: field.clone(),
            rep,
        })
        .collect())
}

/// Discrete logarithm and antilogarithm tables for a primitive element.
#[derive(Debug, Clone)]
pub struct LogTable {
    field: Field,
    alpha: u64,
    /// `antilog[i] = alpha^i` for `i` in `0..q-1`.
    antilog: Vec<u64>,
    /// `log[rep]` in `1..=q-1`; slot 0 unused.
    log: Vec<u32>,
}

impl LogTable {
    pub fn new(alpha: &FieldElement) -> Result<LogTable, FfError> {
        let field = alpha.field.clone();
        if field.q > MAX_TABLE_FIELD_SIZE {
            return Err(FfError::FieldTooLarge(field.q));
        }
        if !alpha.is_primitive()? {
            return Err(FfError::NotPrimitive(alpha.rep));
        }
        let n = (field.q - 1) as usize;
        let mut antilog = Vec::with_capacity(n);
        let mut log = vec![0u32; field.q as usize];
        let mut x = 1;
        for i in 0..n {
            antilog.push(x);
            log[x as usize] = if i == 0 { n as u32 } else { i as u32 };
            x = field.mul_rep(x, alpha.rep);
        }
        Ok(LogTable {
            field,
            alpha: alpha.rep,
            antilog,
            log,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn base(&self) -> u64 {
        self.alpha
    }

    /// Exponent `i` in `1..=q-1` with `alpha^i = rep`; `None` for zero.
    pub fn log(&self, rep: u64) -> Option<u64> {
        match self.log.get(rep as usize) {
            Some(&e) if rep != 0 => Some(e as u64),
            _ => None,
        }
    }

    /// `alpha^exp` as an encoding.
    pub fn antilog(&self, exp: u64) -> u64 {
        self.antilog[(exp % self.antilog.len() as u64) as usize]
    }
}
