//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! A [`CycNumber`] is a vector of rationals over the power basis
//! 1, ζ_N, …, ζ_N^{φ(N)−1} of Q(ζ_N), reduced modulo the N-th cyclotomic
//! polynomial. Mixed-conductor operands are embedded into Q(ζ_lcm) first; the
//! result keeps that lcm conductor and is never silently moved to a smaller
//! field, so the conductor of a value is a function of how it was computed,
//! not of the value itself. Equality compares values, not representations.
//!
//! A process-wide conductor ceiling (default 10 000, see
//! [`set_max_conductor`]) stops runaway conductor growth before it degrades
//! into multi-second polynomial arithmetic.

mod parse;
mod poly;
mod qsolve;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num::{BigRational, One, Zero};
use thiserror::Error;

pub use parse::parse_cyc;

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Errors from cyclotomic constructors and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {found} is not a multiple of {required}")]
    ConductorNotMultiple { required: u64, found: u64 },
    #[error("exponent {k} is not invertible modulo conductor {conductor}")]
    NotCoprime { k: i64, conductor: u64 },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("conductor {conductor} exceeds the ceiling {max} (see set_max_conductor)")]
    ConductorOverflow { conductor: u64, max: u64 },
}

static MAX_CONDUCTOR: AtomicU64 = AtomicU64::new(10_000);

/// Current process-wide conductor ceiling.
pub fn max_conductor() -> u64 {
    MAX_CONDUCTOR.load(Ordering::Relaxed)
}

/// Replaces the process-wide conductor ceiling and returns the old value.
pub fn set_max_conductor(max: u64) -> u64 {
    assert!(max >= 1, "conductor ceiling must be at least 1");
    MAX_CONDUCTOR.swap(max, Ordering::Relaxed)
}

fn check_conductor(n: u64) -> Result<(), CycloError> {
    let max = max_conductor();
    if n > max {
        return Err(CycloError::ConductorOverflow { conductor: n, max });
    }
    Ok(())
}

fn lcm_checked(a: u64, b: u64) -> Result<u64, CycloError> {
    let g = num::integer::gcd(a, b);
    let l = (a / g).checked_mul(b).ok_or(CycloError::ConductorOverflow {
        conductor: u64::MAX,
        max: max_conductor(),
    })?;
    check_conductor(l)?;
    Ok(l)
}

/// An element of a cyclotomic field, stored exactly.
#[derive(Debug, Clone)]
pub struct CycNumber {
    conductor: u64,
    /// Coordinates over 1, ζ, …, ζ^{φ(N)−1}; length is exactly φ(N).
    coeffs: Vec<Rational>,
}

impl CycNumber {
    fn from_reduced(conductor: u64, mut coeffs: Vec<Rational>) -> Self {
        let phi = poly::euler_phi(conductor) as usize;
        debug_assert!(coeffs.len() <= phi, "unreduced coefficient vector");
        coeffs.resize(phi, Rational::zero());
        CycNumber { conductor, coeffs }
    }

    /// Zero, at conductor 1.
    pub fn zero() -> Self {
        CycNumber::from_rational(Rational::zero())
    }

    /// One, at conductor 1.
    pub fn one() -> Self {
        CycNumber::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNumber { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        CycNumber::from_rational(Rational::from_integer(n.into()))
    }

    /// The rational p/q at conductor 1. Panics if `q` is zero.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        CycNumber::from_rational(Rational::new(p.into(), q.into()))
    }

    /// ζ_n^k at conductor n (k may be negative; it is reduced mod n).
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self, CycloError> {
        assert!(n >= 1, "root_of_unity needs n >= 1");
        check_conductor(n)?;
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        poly::rem_monic(&mut v, &poly::cyclotomic(n));
        Ok(CycNumber::from_reduced(n, v))
    }

    /// The imaginary unit ζ_4.
    pub fn i() -> Self {
        CycNumber::root_of_unity(4, 1).expect("conductor 4 is under any sane ceiling")
    }

    /// Conductor of the representation (not necessarily minimal for the value).
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coordinates over the power basis of Q(ζ_conductor).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational if all non-constant coordinates vanish.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Raw coefficient embedding into Q(ζ_m); caller guarantees conductor | m.
    fn embed_coeffs(&self, m: u64) -> Vec<Rational> {
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[j * step] = c.clone();
            }
        }
        poly::rem_monic(&mut v, &poly::cyclotomic(m));
        let phi = poly::euler_phi(m) as usize;
        v.resize(phi, Rational::zero());
        v
    }

    /// Rewrites the element over Q(ζ_m). Fails unless conductor | m.
    pub fn embed(&self, m: u64) -> Result<Self, CycloError> {
        if m == 0 || m % self.conductor != 0 {
            return Err(CycloError::ConductorNotMultiple { required: self.conductor, found: m });
        }
        check_conductor(m)?;
        Ok(CycNumber { conductor: m, coeffs: self.embed_coeffs(m) })
    }

    fn align(&self, other: &Self) -> Result<(u64, Vec<Rational>, Vec<Rational>), CycloError> {
        if self.conductor == other.conductor {
            return Ok((self.conductor, self.coeffs.clone(), other.coeffs.clone()));
        }
        let l = lcm_checked(self.conductor, other.conductor)?;
        Ok((l, self.embed_coeffs(l), other.embed_coeffs(l)))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycloError> {
        let (l, mut a, b) = self.align(other)?;
        for (x, y) in a.iter_mut().zip(&b) {
            *x += y;
        }
        Ok(CycNumber { conductor: l, coeffs: a })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CycloError> {
        let (l, mut a, b) = self.align(other)?;
        for (x, y) in a.iter_mut().zip(&b) {
            *x -= y;
        }
        Ok(CycNumber { conductor: l, coeffs: a })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycloError> {
        let (l, a, b) = self.align(other)?;
        if l == 1 {
            return Ok(CycNumber { conductor: 1, coeffs: vec![&a[0] * &b[0]] });
        }
        let mut prod = poly::mul(&a, &b);
        poly::rem_monic(&mut prod, &poly::cyclotomic(l));
        Ok(CycNumber::from_reduced(l, prod))
    }

    /// Exact division; the result lives at the lcm conductor of the operands.
    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        if other.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let (l, a, b) = self.align(other)?;
        if l == 1 {
            return Ok(CycNumber { conductor: 1, coeffs: vec![&a[0] / &b[0]] });
        }
        // Solve M_b · x = a over Q, where M_b is multiplication by b in the
        // power basis; b ≠ 0 makes M_b invertible, so this cannot fail.
        let phi = poly::euler_phi(l) as usize;
        let modulus = poly::cyclotomic(l);
        let mut columns = Vec::with_capacity(phi);
        let mut shifted = b.clone();
        poly::trim(&mut shifted);
        for _ in 0..phi {
            let mut col = shifted.clone();
            col.resize(phi, Rational::zero());
            columns.push(col);
            shifted.insert(0, Rational::zero());
            poly::rem_monic(&mut shifted, &modulus);
        }
        let rows: Vec<Vec<Rational>> =
            (0..phi).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        let x = qsolve::solve(rows, a).expect("multiplication by a nonzero element is invertible");
        Ok(CycNumber { conductor: l, coeffs: x })
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        CycNumber::one().checked_div(self)
    }

    /// Galois action σ_k : ζ_N ↦ ζ_N^k; requires gcd(k, N) = 1.
    pub fn galois(&self, k: i64) -> Result<Self, CycloError> {
        let n = self.conductor;
        let e = k.rem_euclid(n as i64) as u64;
        if num::integer::gcd(e, n) != 1 {
            return Err(CycloError::NotCoprime { k, conductor: n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut v = vec![Rational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let pos = (j as u64 * e % n) as usize;
                v[pos] += c;
            }
        }
        poly::rem_monic(&mut v, &poly::cyclotomic(n));
        Ok(CycNumber::from_reduced(n, v))
    }

    /// Coordinates of the value over the power basis of Q(ζ_d), if it lies in
    /// that subfield.
    fn coordinates_in(&self, d: u64) -> Option<Vec<Rational>> {
        assert!(d >= 1, "subfield index needs d >= 1");
        let l = lcm_checked(self.conductor, d)
            .expect("subfield test exceeded the conductor ceiling");
        let target = self.embed_coeffs(l);
        let phi_l = poly::euler_phi(l) as usize;
        let phi_d = poly::euler_phi(d) as usize;
        // Columns are the images of 1, ζ_d, …, ζ_d^{φ(d)−1} inside Q(ζ_l).
        let mut columns = Vec::with_capacity(phi_d);
        for j in 0..phi_d {
            let basis = CycNumber::root_of_unity(d, j as i64)
                .expect("d is under the ceiling because lcm(N, d) is");
            columns.push(basis.embed_coeffs(l));
        }
        let rows: Vec<Vec<Rational>> =
            (0..phi_l).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        qsolve::solve(rows, target)
    }

    /// Whether the value lies in the subfield Q(ζ_d).
    ///
    /// Panics if lcm(conductor, d) exceeds the conductor ceiling.
    pub fn in_subfield(&self, d: u64) -> bool {
        self.coordinates_in(d).is_some()
    }

    /// Whether the value lies in Z[ζ_d]: in Q(ζ_d) with integer coordinates
    /// over the power basis.
    ///
    /// Panics if lcm(conductor, d) exceeds the conductor ceiling.
    pub fn is_algebraic_integer_in(&self, d: u64) -> bool {
        self.coordinates_in(d)
            .is_some_and(|coords| coords.iter().all(|c| c.denom().is_one()))
    }

    /// Canonical literal form; `parse_cyc` reads it back to an equal value.
    pub fn format(&self) -> String {
        parse::format_cyc(self)
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        match self.align(other) {
            Ok((_, a, b)) => a == b,
            Err(_) => panic!("equality test exceeded the conductor ceiling"),
        }
    }
}

impl Eq for CycNumber {}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl FromStr for CycNumber {
    type Err = CycloError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cyc(s)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

macro_rules! forward_checked_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycNumber> for &CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                self.$checked(rhs).expect("cyclotomic arithmetic failed")
            }
        }

        impl $trait<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_checked_binop!(Add, add, checked_add);
forward_checked_binop!(Sub, sub, checked_sub);
forward_checked_binop!(Mul, mul, checked_mul);
forward_checked_binop!(Div, div, checked_div);

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        *self = &*self - rhs;
    }
}
