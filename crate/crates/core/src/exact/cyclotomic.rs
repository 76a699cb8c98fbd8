use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{solve_rational, ExactError};

/// An element of the cyclotomic field `Q(ζ_N)`, stored in the power basis
/// `1, ζ, …, ζ^(φ(N)-1)` reduced modulo the N-th cyclotomic polynomial.
///
/// The representation is canonical for a fixed conductor, so equality is
/// structural. Values with different conductors never compare equal; embed
/// them into a common conductor first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse cyclotomic expression {expr:?}: {reason}")]
pub struct ParseCyclotomicError {
    pub expr: String,
    pub reason: String,
}

// Powers ζ^k, 0 <= k < N, written in the reduced power basis.
struct PowerBasis {
    phi: usize,
    powers: Vec<Vec<BigInt>>,
}

fn basis(n: u32) -> Arc<PowerBasis> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<PowerBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard.entry(n).or_insert_with(|| Arc::new(build_basis(n))).clone()
}

fn build_basis(n: u32) -> PowerBasis {
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![BigInt::zero(); phi.max(1)];
    if phi == 0 {
        unreachable!("cyclotomic polynomials have positive degree");
    }
    cur[0] = BigInt::one();
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x, then eliminate x^phi using the monic polynomial
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &poly[i];
            }
        }
    }
    PowerBasis { phi, powers }
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Φ_N by Möbius inversion of `x^N - 1 = Π_{d | N} Φ_d`, coefficients low-first.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut poly = vec![BigInt::one()];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            poly = mul_x_pow_minus_one(&poly, d as usize);
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            poly = div_x_pow_minus_one(&poly, d as usize);
        }
    }
    poly
}

fn mul_x_pow_minus_one(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_x_pow_minus_one(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // p[k] = q[k-d] - q[k]
    let deg_q = p.len() - 1 - d;
    let mut q = vec![BigInt::zero(); deg_q + 1];
    for k in (d..p.len()).rev() {
        let carry = if k <= deg_q { q[k].clone() } else { BigInt::zero() };
        q[k - d] = &p[k] + carry;
    }
    q
}

pub fn euler_phi(n: u32) -> usize {
    let mut result = n as usize;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p as usize;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m as usize;
    }
    result
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Cyclotomic { conductor, coeffs: vec![BigRational::zero(); euler_phi(conductor)] }
    }

    pub fn from_rational(conductor: u32, q: BigRational) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = q;
        c
    }

    pub fn from_int(conductor: u32, n: impl Into<BigInt>) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(n.into()))
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_int(conductor, 1)
    }

    /// ζ_N^k for any integer `k`.
    pub fn zeta_power(conductor: u32, k: i64) -> Self {
        let b = basis(conductor);
        let k = k.rem_euclid(conductor as i64) as usize;
        Cyclotomic {
            conductor,
            coeffs: b.powers[k].iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    // Sum of c_k ζ^k over arbitrary exponents (taken mod N).
    fn from_power_terms(conductor: u32, terms: impl IntoIterator<Item = (usize, BigRational)>) -> Self {
        let b = basis(conductor);
        let mut acc = vec![BigRational::zero(); conductor as usize];
        for (k, c) in terms {
            acc[k % conductor as usize] += c;
        }
        let mut coeffs = vec![BigRational::zero(); b.phi];
        for (k, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in coeffs.iter_mut().zip(&b.powers[k]) {
                if !r.is_zero() {
                    *slot += &c * BigRational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic { conductor, coeffs }
    }

    fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        Self::from_power_terms(self.conductor, self.terms().map(|(k, c)| ((n - k) % n, c.clone())))
    }

    /// Image in `Q(ζ_M)` for a multiple `M` of the conductor.
    pub fn embed(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.conductor), "conductor {} does not divide {}", self.conductor, target);
        let step = (target / self.conductor) as usize;
        Self::from_power_terms(target, self.terms().map(|(k, c)| (k * step, c.clone())))
    }

    /// Preimage in `Q(ζ_M)` for a divisor `M` of the conductor, when the value
    /// lies in that subfield.
    pub fn restrict_conductor(&self, target: u32) -> Option<Self> {
        if !self.conductor.is_multiple_of(target) {
            return None;
        }
        let phi_small = euler_phi(target);
        let columns: Vec<Cyclotomic> =
            (0..phi_small).map(|k| Self::zeta_power(target, k as i64).embed(self.conductor)).collect();
        let a: Vec<Vec<BigRational>> = (0..self.coeffs.len())
            .map(|i| columns.iter().map(|col| col.coeffs[i].clone()).collect())
            .collect();
        let x = solve_rational(&a, &self.coeffs)?;
        Some(Cyclotomic { conductor: target, coeffs: x })
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let phi = self.coeffs.len();
        // column k is self * ζ^k; solve for the coefficient vector of 1
        let columns: Vec<Cyclotomic> =
            (0..phi).map(|k| self * &Self::zeta_power(self.conductor, k as i64)).collect();
        let a: Vec<Vec<BigRational>> =
            (0..phi).map(|i| columns.iter().map(|col| col.coeffs[i].clone()).collect()).collect();
        let one = Self::one(self.conductor);
        let x = solve_rational(&a, &one.coeffs).expect("nonzero field element is invertible");
        Ok(Cyclotomic { conductor: self.conductor, coeffs: x })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        same_conductor(self, other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        same_conductor(self, other)?;
        Ok(self * other)
    }

    /// Parses `a0 + a1*z^1 + a2*z^2 + …` where `z` is a primitive N-th root
    /// of unity. Coefficients may be integers or fractions, exponents any
    /// integer, and `*` and `^1` may be omitted.
    pub fn parse(expr: &str, conductor: u32) -> Result<Self, ParseCyclotomicError> {
        let err = |reason: &str| ParseCyclotomicError { expr: expr.to_string(), reason: reason.to_string() };
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty expression"));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);

        let mut parsed = Vec::new();
        for term in &terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coef_part, power) = match body.find('z') {
                Some(pos) => {
                    let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    if body[..pos].ends_with('*') && coef.is_empty() {
                        return Err(err("missing coefficient before '*'"));
                    }
                    let exp_str = &body[pos + 1..];
                    let exp: i64 = if exp_str.is_empty() {
                        1
                    } else {
                        exp_str
                            .strip_prefix('^')
                            .ok_or_else(|| err("expected '^' after z"))?
                            .parse()
                            .map_err(|_| err("bad exponent"))?
                    };
                    (coef, exp.rem_euclid(conductor as i64) as usize)
                }
                None => (body, 0),
            };
            let coef = if coef_part.is_empty() { BigRational::one() } else { parse_rational(coef_part).ok_or_else(|| err("bad coefficient"))? };
            parsed.push((power, if neg { -coef } else { coef }));
        }
        Ok(Self::from_power_terms(conductor, parsed))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

fn same_conductor(a: &Cyclotomic, b: &Cyclotomic) -> Result<(), ExactError> {
    if a.conductor != b.conductor {
        return Err(ExactError::ConductorMismatch { left: a.conductor, right: b.conductor });
    }
    Ok(())
}

/// The three field operations behind one entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclotomicOp {
    Add,
    Mul,
    Inv,
}

impl Cyclotomic {
    /// `inv` ignores `b`.
    pub fn apply(a: &Cyclotomic, b: &Cyclotomic, op: CyclotomicOp) -> Result<Cyclotomic, ExactError> {
        match op {
            CyclotomicOp::Add => a.checked_add(b),
            CyclotomicOp::Mul => a.checked_mul(b),
            CyclotomicOp::Inv => a.inv(),
        }
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        let terms = self
            .terms()
            .flat_map(|(i, a)| rhs.terms().map(move |(j, b)| (i + j, a * b)))
            .collect::<Vec<_>>();
        Cyclotomic::from_power_terms(self.conductor, terms)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({})", self.conductor, self)
    }
}
