//! Word-sized arithmetic modulo a prime.
//!
//! These helpers back the prime-field path of [`super::FieldDescriptor`] and
//! the per-prime predicates used by the censuses, where building a full
//! descriptor for every prime would be wasted work.

use super::FfError;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &sp in &SMALL {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, ascending primes with multiplicity.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut push = |n: &mut u64, d: u64| {
        let mut e = 0;
        while (*n).is_multiple_of(d) {
            *n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
    };
    push(&mut n, 2);
    push(&mut n, 3);
    let mut d = 5;
    while d * d <= n {
        push(&mut n, d);
        push(&mut n, d + 2);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// If `n = p^k` for a prime `p`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Multiplicative order of `a` modulo the prime `p`, given the factorization
/// of `p - 1`. Starts from `p - 1` and strips prime factors while the power
/// stays at one.
pub fn order_mod(a: u64, p: u64, factors: &[(u64, u32)]) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let mut n = p - 1;
    for &(r, e) in factors {
        for _ in 0..e {
            if pow_mod(a, n / r, p) == 1 {
                n /= r;
            } else {
                break;
            }
        }
    }
    n
}

/// `a` generates `(Z/p)^*`, given the factorization of `p - 1`.
pub fn is_primitive_mod(a: u64, p: u64, factors: &[(u64, u32)]) -> bool {
    let a = a % p;
    if a == 0 {
        return false;
    }
    factors
        .iter()
        .all(|&(r, _)| pow_mod(a, (p - 1) / r, p) != 1)
}

/// Smallest primitive root modulo the prime `p`.
pub fn smallest_primitive_root(p: u64, factors: &[(u64, u32)]) -> u64 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| is_primitive_mod(g, p, factors))
        .expect("every prime has a primitive root")
}

/// Square roots of `a` modulo the odd prime `p` (Tonelli-Shanks).
///
/// Returns `Some((r, p - r))` with `r <= p - r` when `a` is a nonzero
/// quadratic residue, `Some((0, 0))` for `a = 0`, and `None` for a
/// non-residue. `p` is assumed prime.
pub fn sqrt_mod_p(a: u64, p: u64) -> Result<Option<(u64, u64)>, FfError> {
    if p.is_multiple_of(2) {
        return Err(FfError::EvenModulus(p));
    }
    let a = a % p;
    if a == 0 {
        return Ok(Some((0, 0)));
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return Ok(None);
    }
    let r = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let Some(z) = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1) else {
            return Ok(None);
        };
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
                if i == m {
                    // a is not a residue; only reachable for composite p
                    return Ok(None);
                }
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    };
    let other = p - r;
    Ok(Some((r.min(other), r.max(other))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_mod_p(5, 11).unwrap(), Some((4, 7)));
        assert_eq!(sqrt_mod_p(5, 7).unwrap(), None);
        assert_eq!(sqrt_mod_p(0, 13).unwrap(), Some((0, 0)));
        assert!(matches!(sqrt_mod_p(3, 8), Err(FfError::EvenModulus(8))));
    }

    #[test]
    fn sqrt_matches_trial_squaring() {
        for p in (3..1000u64).filter(|&p| is_prime(p)) {
            for a in 0..p {
                let brute: Vec<u64> = (0..p).filter(|&x| x * x % p == a).collect();
                match sqrt_mod_p(a, p).unwrap() {
                    None => assert!(brute.is_empty(), "p={p} a={a}"),
                    Some((r, s)) => {
                        assert_eq!(r * r % p, a);
                        assert_eq!(s * s % p, a);
                        let mut got = vec![r, s];
                        got.dedup();
                        assert_eq!(got, brute, "p={p} a={a}");
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_and_order() {
        assert_eq!(inv_mod(7, 11), Some(8));
        assert_eq!(inv_mod(6, 9), None);
        let f = factorize(10);
        assert_eq!(order_mod(7, 11, &f), 10);
        assert_eq!(order_mod(3, 11, &f), 5);
        assert_eq!(order_mod(5, 29, &factorize(28)), 14);
    }

    #[test]
    fn primality_and_factoring() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(3_215_031_751));
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(12), None);
        assert_eq!(euler_phi(10), 4);
    }
}
