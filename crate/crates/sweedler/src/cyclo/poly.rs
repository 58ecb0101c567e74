//! Dense polynomials over Q, just enough for cyclotomic arithmetic.
//!
//! Polynomials are coefficient vectors in ascending degree order. The only
//! consumers are the sibling modules in `cyclo`, so everything here is
//! crate-private and assumes well-formed inputs.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num::{BigRational, One, Zero};

pub(crate) type Poly = Vec<BigRational>;

/// Drops trailing zero coefficients in place; the zero polynomial becomes `[]`.
pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Remainder of `p` modulo the monic polynomial `m`, in place.
pub(crate) fn rem_monic(p: &mut Poly, m: &[BigRational]) {
    debug_assert!(m.last().is_some_and(One::is_one), "modulus must be monic");
    let d = m.len() - 1;
    while p.len() > d {
        let lead = p.pop().expect("nonempty by loop condition");
        if lead.is_zero() {
            continue;
        }
        let shift = p.len() - d;
        for (k, mk) in m.iter().take(d).enumerate() {
            if !mk.is_zero() {
                let delta = &lead * mk;
                p[shift + k] -= delta;
            }
        }
    }
    trim(p);
}

/// Exact quotient `p / m` for monic `m` dividing `p`; panics on a nonzero
/// remainder since the cyclotomic recurrences guarantee exactness.
fn div_exact_monic(p: &[BigRational], m: &[BigRational]) -> Poly {
    debug_assert!(m.last().is_some_and(One::is_one), "divisor must be monic");
    let d = m.len() - 1;
    let mut rem: Poly = p.to_vec();
    trim(&mut rem);
    if rem.is_empty() {
        return Vec::new();
    }
    assert!(rem.len() > d, "degree of dividend below divisor");
    let mut quot = vec![BigRational::zero(); rem.len() - d];
    while rem.len() > d {
        let lead = rem.pop().expect("nonempty by loop condition");
        if lead.is_zero() {
            continue;
        }
        let shift = rem.len() - d;
        quot[shift] = lead.clone();
        for (k, mk) in m.iter().take(d).enumerate() {
            if !mk.is_zero() {
                let delta = &lead * mk;
                rem[shift + k] -= delta;
            }
        }
    }
    trim(&mut rem);
    assert!(rem.is_empty(), "division was not exact");
    quot
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi needs n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of `n` in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors needs n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

static CYCLOTOMIC_CACHE: LazyLock<Mutex<HashMap<u64, Arc<Poly>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The n-th cyclotomic polynomial, ascending coefficients, degree φ(n).
///
/// Computed as (x^n − 1) / ∏_{d|n, d<n} Φ_d and memoized for the life of the
/// process; conductors repeat constantly across element operations.
pub(crate) fn cyclotomic(n: u64) -> Arc<Poly> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if let Some(hit) = CYCLOTOMIC_CACHE.lock().expect("cyclotomic cache").get(&n) {
        return Arc::clone(hit);
    }
    // Build bottom-up over the divisor lattice so the recursion depth is one.
    let mut result = None;
    for d in divisors(n) {
        let cached = CYCLOTOMIC_CACHE
            .lock()
            .expect("cyclotomic cache")
            .get(&d)
            .cloned();
        let phi_d = match cached {
            Some(p) => p,
            None => {
                let mut numerator = vec![BigRational::zero(); d as usize + 1];
                numerator[0] = -BigRational::one();
                numerator[d as usize] = BigRational::one();
                let mut quotient = numerator;
                for e in divisors(d) {
                    if e < d {
                        let phi_e = CYCLOTOMIC_CACHE
                            .lock()
                            .expect("cyclotomic cache")
                            .get(&e)
                            .cloned()
                            .expect("divisors are visited in ascending order");
                        quotient = div_exact_monic(&quotient, &phi_e);
                    }
                }
                debug_assert_eq!(quotient.len() as u64 - 1, euler_phi(d));
                let arc = Arc::new(quotient);
                CYCLOTOMIC_CACHE
                    .lock()
                    .expect("cyclotomic cache")
                    .insert(d, Arc::clone(&arc));
                arc
            }
        };
        if d == n {
            result = Some(phi_d);
        }
    }
    result.expect("n divides n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).expect("fits")
    }

    #[test]
    fn phi_values() {
        let expect = [
            (1, 1),
            (2, 1),
            (3, 2),
            (4, 2),
            (6, 2),
            (8, 4),
            (12, 4),
            (100, 40),
        ];
        for (n, phi) in expect {
            assert_eq!(euler_phi(n), phi, "phi({n})");
        }
    }

    #[test]
    fn small_cyclotomics_match_known_coefficients() {
        // Φ_1 = x − 1, Φ_2 = x + 1, Φ_4 = x² + 1, Φ_6 = x² − x + 1.
        assert_eq!(*cyclotomic(1), vec![q(-1), q(1)]);
        assert_eq!(*cyclotomic(2), vec![q(1), q(1)]);
        assert_eq!(*cyclotomic(4), vec![q(1), q(0), q(1)]);
        assert_eq!(*cyclotomic(6), vec![q(1), q(-1), q(1)]);
        // Φ_105 is the first with a coefficient outside {−1, 0, 1}.
        let phi105 = cyclotomic(105);
        assert_eq!(phi105.len() as u64 - 1, euler_phi(105));
        assert!(phi105.iter().any(|c| *c == q(-2)));
    }

    #[test]
    fn product_of_cyclotomics_is_x_n_minus_1() {
        for n in [1u64, 2, 6, 12, 30] {
            let mut product = vec![q(1)];
            for d in divisors(n) {
                product = mul(&product, &cyclotomic(d));
            }
            let mut expected = vec![q(0); n as usize + 1];
            expected[0] = q(-1);
            expected[n as usize] = q(1);
            assert_eq!(product, expected, "n = {n}");
        }
    }

    #[test]
    fn rem_monic_reduces_powers() {
        // x^4 mod Φ_4 = (x²+1): x² ≡ −1 so x⁴ ≡ 1.
        let mut p = vec![q(0), q(0), q(0), q(0), q(1)];
        rem_monic(&mut p, &cyclotomic(4));
        assert_eq!(p, vec![q(1)]);
    }
}
