//! Exact scalars carrying a primitive n-th root of unity `q`.
//!
//! Two backends implement [`Field`]:
//!
//! - [`CyclotomicField`]: the number field Q(ζ_n), elements stored as rational
//!   coefficient vectors in the basis 1, q, …, q^{φ(n)-1} and reduced modulo
//!   the cyclotomic polynomial Φ_n after every operation.
//! - [`PrimeField`]: F_p with p ≡ 1 (mod n) and a fixed primitive n-th root r.
//!   Rank computations over F_p agree with Q(ζ_n) outside finitely many bad
//!   primes, so dimensions obtained here are reported as specializations.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::ScalarError;

/// Default lower bound for the modular prime.
pub const DEFAULT_PRIME_FLOOR: u64 = 1 << 30;

/// Scalar arithmetic shared by both backends.
///
/// Elements are plain values; every operation goes through the field so that
/// the context (Φ_n, or the prime) never has to be stored per element.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    /// Order n of the distinguished root of unity q.
    fn order(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ScalarError>;
    /// q^k with k reduced mod n.
    fn q_power(&self, exponent: i64) -> Self::Elem;
    fn backend(&self) -> BackendInfo;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn q(&self) -> Self::Elem {
        self.q_power(1)
    }

    /// Square-and-multiply; negative exponents go through `inv`.
    fn pow(&self, a: &Self::Elem, exponent: i64) -> Result<Self::Elem, ScalarError> {
        let base = if exponent < 0 { self.inv(a)? } else { a.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Ok(acc)
    }
}

/// Binary and unary operations exposed uniformly, mostly for the CLI and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Mul,
    Neg,
    Inv,
    Pow(i64),
}

/// Applies `op` to `a` (and `b` for the binary operations).
pub fn scalar_arith<F: Field>(field: &F, op: ScalarOp, a: &F::Elem, b: &F::Elem) -> Result<F::Elem, ScalarError> {
    match op {
        ScalarOp::Add => Ok(field.add(a, b)),
        ScalarOp::Mul => Ok(field.mul(a, b)),
        ScalarOp::Neg => Ok(field.neg(a)),
        ScalarOp::Inv => field.inv(a),
        ScalarOp::Pow(k) => field.pow(a, k),
    }
}

/// Provenance of a scalar backend, serialized into every report header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BackendInfo {
    pub backend: &'static str,
    pub n: u32,
    pub e: u32,
    pub phi_n: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<u64>,
}

/// e = n for odd n, n/2 for even n: the nilpotency order of the E-generators.
pub fn nilpotency_order(n: u32) -> u32 {
    if n % 2 == 0 {
        n / 2
    } else {
        n
    }
}

/// Integer polynomial Φ_n, coefficients in ascending degree.
///
/// Computed by exact division of x^n - 1 by Φ_d for every proper divisor d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Quotient of `num` by a monic integer polynomial that divides it.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    if rem.len() <= dd {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// Parameters shared by every element of Q(ζ_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicContext {
    pub n: u32,
    pub phi_n: Vec<i64>,
    pub e: u32,
}

impl CyclotomicContext {
    pub fn new(n: u32) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidOrder(n));
        }
        Ok(Self { n, phi_n: cyclotomic_polynomial(n), e: nilpotency_order(n) })
    }

    pub fn degree(&self) -> usize {
        self.phi_n.len() - 1
    }
}

/// Element of Q(ζ_n) as a residue modulo Φ_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycElem(Vec<BigRational>);

impl CycElem {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }
}

/// The exact backend.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    ctx: CyclotomicContext,
    // x^k mod Φ_n for k < 2·deg, used to fold products back into range
    folds: Vec<Vec<i64>>,
    powers: Vec<CycElem>,
}

impl CyclotomicField {
    pub fn new(n: u32) -> Result<Self, ScalarError> {
        let ctx = CyclotomicContext::new(n)?;
        let deg = ctx.degree();
        let mut folds: Vec<Vec<i64>> = Vec::with_capacity(2 * deg);
        let mut cur = vec![0i64; deg];
        if deg > 0 {
            cur[0] = 1;
        }
        for _ in 0..(2 * deg).max(1) {
            folds.push(cur.clone());
            // multiply by x and reduce with x^deg = -(φ_0 + … + φ_{deg-1} x^{deg-1})
            let top = if deg > 0 { cur[deg - 1] } else { 0 };
            for k in (1..deg).rev() {
                cur[k] = cur[k - 1] - top * ctx.phi_n[k];
            }
            if deg > 0 {
                cur[0] = -top * ctx.phi_n[0];
            }
        }
        let mut field = Self { ctx, folds, powers: Vec::new() };
        let n = field.ctx.n as usize;
        let mut powers = Vec::with_capacity(n);
        let x = field.monomial(1);
        let mut acc = field.one();
        for _ in 0..n {
            powers.push(acc.clone());
            acc = field.mul(&acc, &x);
        }
        field.powers = powers;
        Ok(field)
    }

    pub fn context(&self) -> &CyclotomicContext {
        &self.ctx
    }

    fn monomial(&self, k: usize) -> CycElem {
        let deg = self.ctx.degree();
        let mut c = vec![BigRational::zero(); deg];
        if k < self.folds.len() {
            for (j, &f) in self.folds[k].iter().enumerate() {
                c[j] = BigRational::from_integer(BigInt::from(f));
            }
        }
        CycElem(c)
    }

    /// Builds an element from rational coefficients of 1, q, q², … (any length).
    pub fn from_coefficients(&self, coeffs: &[BigRational]) -> CycElem {
        let mut acc = self.zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.mul(&self.q_power(k as i64), &self.from_rational(c.clone()));
            acc = self.add(&acc, &term);
        }
        acc
    }

    pub fn from_rational(&self, r: BigRational) -> CycElem {
        let deg = self.ctx.degree();
        let mut c = vec![BigRational::zero(); deg];
        if deg > 0 {
            c[0] = r;
        }
        CycElem(c)
    }

    /// Rational coefficient list of the canonical representative as a Q[x] polynomial.
    fn as_poly(a: &CycElem) -> Vec<BigRational> {
        let mut p = a.0.clone();
        trim(&mut p);
        p
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Division with remainder in Q[x]; `b` must be nonzero.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] / lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[k + j] -= t;
        }
        quot[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn poly_sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(if q.is_empty() || b.is_empty() { 0 } else { q.len() + b.len() - 1 });
    let mut out = vec![BigRational::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(&mut out);
    out
}

impl Field for CyclotomicField {
    type Elem = CycElem;

    fn order(&self) -> u32 {
        self.ctx.n
    }

    fn zero(&self) -> CycElem {
        CycElem(vec![BigRational::zero(); self.ctx.degree()])
    }

    fn one(&self) -> CycElem {
        self.from_int(1)
    }

    fn from_int(&self, v: i64) -> CycElem {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn is_zero(&self, a: &CycElem) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }

    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &CycElem) -> CycElem {
        CycElem(a.0.iter().map(|x| -x).collect())
    }

    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let deg = self.ctx.degree();
        if deg == 0 {
            return CycElem(Vec::new());
        }
        let mut prod = vec![BigRational::zero(); 2 * deg - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut out = vec![BigRational::zero(); deg];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < deg {
                out[k] += c;
            } else {
                for (j, &f) in self.folds[k].iter().enumerate() {
                    if f != 0 {
                        out[j] += &c * BigRational::from_integer(BigInt::from(f));
                    }
                }
            }
        }
        CycElem(out)
    }

    /// Extended Euclid of the representative against Φ_n.
    fn inv(&self, a: &CycElem) -> Result<CycElem, ScalarError> {
        if self.is_zero(a) {
            return Err(ScalarError::DivisionByZero);
        }
        let modulus: Vec<BigRational> = self.ctx.phi_n.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        // invariant: s_i · a ≡ r_i (mod Φ_n)
        let (mut r0, mut r1) = (modulus, Self::as_poly(a));
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (quot, rem) = poly_divrem(&r0, &r1);
            let s2 = poly_sub_mul(&s0, &quot, &s1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd, a nonzero constant because Φ_n is irreducible
        if r0.len() != 1 {
            return Err(ScalarError::DivisionByZero);
        }
        let scale = BigRational::one() / &r0[0];
        let coeffs: Vec<BigRational> = s0.iter().map(|c| c * &scale).collect();
        Ok(self.from_coefficients(&coeffs))
    }

    fn q_power(&self, exponent: i64) -> CycElem {
        let n = self.ctx.n as i64;
        self.powers[exponent.rem_euclid(n) as usize].clone()
    }

    fn backend(&self) -> BackendInfo {
        BackendInfo { backend: "exact", n: self.ctx.n, e: self.ctx.e, phi_n: self.ctx.phi_n.clone(), prime: None, root: None }
    }

    fn render(&self, a: &CycElem) -> String {
        let mut parts = Vec::new();
        for (k, c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_integer() { c.numer().to_string() } else { c.to_string() };
            parts.push(match k {
                0 => coeff,
                1 => format!("{coeff}*q"),
                _ => format!("{coeff}*q^{k}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// The modular backend: F_p with a designated primitive n-th root r playing q.
#[derive(Clone, Debug)]
pub struct PrimeField {
    n: u32,
    p: u64,
    root: u64,
    powers: Vec<u64>,
}

impl PrimeField {
    /// Smallest prime p ≥ `floor` with p ≡ 1 (mod n), and the smallest primitive
    /// n-th root of unity in F_p.
    pub fn new(n: u32, floor: u64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidOrder(n));
        }
        let step = n as u64;
        let mut candidate = floor.max(2);
        let rem = (candidate + step - 1) % step;
        if rem != 0 {
            candidate += step - rem;
        }
        // p < 2^62 keeps every product inside u128 comfortably
        while candidate < (1u64 << 62) {
            if is_prime(candidate) {
                return Self::with_prime(n, candidate);
            }
            candidate += step;
        }
        Err(ScalarError::NoPrime { n, floor })
    }

    /// Uses the given prime, which must satisfy p ≡ 1 (mod n).
    pub fn with_prime(n: u32, p: u64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::InvalidOrder(n));
        }
        if !is_prime(p) || (p - 1) % n as u64 != 0 {
            return Err(ScalarError::BadPrime { n, p });
        }
        let exps = prime_factors(n as u64);
        let cofactor = (p - 1) / n as u64;
        let mut generator = None;
        for g in 2..p {
            let w = pow_mod(g, cofactor, p);
            if exps.iter().all(|&l| pow_mod(w, n as u64 / l, p) != 1) {
                generator = Some(w);
                break;
            }
        }
        let w = match (n, generator) {
            (1, _) => 1,
            (_, Some(w)) => w,
            _ => return Err(ScalarError::BadPrime { n, p }),
        };
        let root = (1..=n as u64).filter(|k| k.gcd(&(n as u64)) == 1).map(|k| pow_mod(w, k, p)).min().unwrap_or(1);
        let powers = (0..n as u64).map(|k| pow_mod(root, k, p)).collect();
        Ok(Self { n, p, root, powers })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    /// Image of an exact element under q ↦ r. Fails when a denominator vanishes mod p.
    pub fn specialize(&self, a: &CycElem) -> Result<u64, ScalarError> {
        let p = BigInt::from(self.p);
        let mut acc = 0u64;
        for (k, c) in a.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let num = c.numer().mod_floor(&p).to_u64().unwrap_or(0);
            let den = c.denom().mod_floor(&p).to_u64().unwrap_or(0);
            if den == 0 {
                return Err(ScalarError::NotSpecializable { p: self.p });
            }
            let v = mul_mod(num, pow_mod(den, self.p - 2, self.p), self.p);
            acc = (acc + mul_mod(v, self.powers[k % self.n as usize], self.p)) % self.p;
        }
        Ok(acc)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn order(&self) -> u32 {
        self.n
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_int(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn inv(&self, a: &u64) -> Result<u64, ScalarError> {
        if *a == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(pow_mod(*a, self.p - 2, self.p))
    }

    fn q_power(&self, exponent: i64) -> u64 {
        self.powers[exponent.rem_euclid(self.n as i64) as usize]
    }

    fn backend(&self) -> BackendInfo {
        BackendInfo {
            backend: "modular",
            n: self.n,
            e: nilpotency_order(self.n),
            phi_n: cyclotomic_polynomial(self.n),
            prime: Some(self.p),
            root: Some(self.root),
        }
    }

    fn render(&self, a: &u64) -> String {
        // symmetric residue reads better for small coefficients
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
}

/// Sign-aware rendering helper for integer polynomials.
pub fn render_int_poly(coeffs: &[i64]) -> String {
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        let body = match (k, mag) {
            (0, m) => m.to_string(),
            (1, 1) => "x".to_string(),
            (1, m) => format!("{m}x"),
            (_, 1) => format!("x^{k}"),
            (_, m) => format!("{m}x^{k}"),
        };
        let sign = if BigInt::from(c).is_negative() { "-" } else { "+" };
        parts.push((sign, body));
    }
    let mut out = String::new();
    for (i, (sign, body)) in parts.iter().enumerate() {
        if i == 0 {
            if *sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Plain long division of integer polynomials, kept apart from the
    /// implementation's recursive construction.
    fn divide_oracle(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let mut quot = vec![0; num.len().saturating_sub(dd)];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] / den[dd];
            quot[k] = c;
            for j in 0..=dd {
                rem[k + j] -= c * den[j];
            }
        }
        (quot, rem)
    }

    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn phi_1_is_x_minus_one() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
    }

    #[test]
    fn phi_5_and_phi_6_match_division_oracle() {
        // x^5 - 1 divided by x - 1
        let (q5, r5) = divide_oracle(&[-1, 0, 0, 0, 0, 1], &[-1, 1]);
        assert!(r5.iter().all(|&c| c == 0));
        assert_eq!(q5, vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(5), q5);

        // x^6 - 1 divided by (x - 1)(x + 1)(x^2 + x + 1)
        let den = poly_mul(&poly_mul(&[-1, 1], &[1, 1]), &[1, 1, 1]);
        let (q6, r6) = divide_oracle(&[-1, 0, 0, 0, 0, 0, 1], &den);
        assert!(r6.iter().all(|&c| c == 0));
        assert_eq!(q6, vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(6), q6);
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=30u32 {
            let mut prod = vec![1i64];
            for d in (1..=n).filter(|d| n % d == 0) {
                prod = poly_mul(&prod, &cyclotomic_polynomial(d));
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, expect, "n = {n}");
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n) as usize);
        }
    }

    #[test]
    fn nilpotency_order_halves_even_n() {
        assert_eq!(nilpotency_order(5), 5);
        assert_eq!(nilpotency_order(6), 3);
        assert_eq!(nilpotency_order(8), 4);
        for n in 1..40 {
            let e = nilpotency_order(n);
            if n % 2 == 0 {
                assert_eq!(2 * e, n);
            } else {
                assert_eq!(e, n);
            }
        }
    }

    #[test]
    fn q_has_exact_order_n_on_both_backends() {
        for n in 1..=12u32 {
            let f = CyclotomicField::new(n).unwrap();
            let p = PrimeField::new(n, DEFAULT_PRIME_FLOOR).unwrap();
            assert!(f.is_one(&f.pow(&f.q(), n as i64).unwrap()));
            assert!(p.is_one(&p.pow(&p.q(), n as i64).unwrap()));
            for m in 1..n as i64 {
                assert!(!f.is_one(&f.q_power(m)), "exact n={n} m={m}");
                assert!(!p.is_one(&p.q_power(m)), "modular n={n} m={m}");
            }
        }
    }

    #[test]
    fn q_plus_q_inverse_is_one_for_n_6() {
        let f = CyclotomicField::new(6).unwrap();
        let s = f.add(&f.q(), &f.inv(&f.q()).unwrap());
        assert!(f.is_one(&s));
    }

    #[test]
    fn inverse_of_one_plus_q() {
        let f = CyclotomicField::new(5).unwrap();
        let a = f.add(&f.one(), &f.q());
        let prod = scalar_arith(&f, ScalarOp::Mul, &a, &f.inv(&a).unwrap()).unwrap();
        assert!(f.is_one(&prod));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = CyclotomicField::new(7).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(ScalarError::DivisionByZero));
        let p = PrimeField::new(7, 1000).unwrap();
        assert_eq!(p.inv(&0), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn q_power_reduces_exponent() {
        let f = CyclotomicField::new(5).unwrap();
        assert!(f.is_one(&f.q_power(0)));
        assert!(f.is_one(&f.q_power(5)));
        assert_eq!(f.q_power(-1), f.q_power(4));
        assert_eq!(f.q_power(-1), f.pow(&f.q(), 4).unwrap());
    }

    #[test]
    fn modular_prime_selection() {
        let f = PrimeField::new(5, DEFAULT_PRIME_FLOOR).unwrap();
        assert!(f.prime() >= DEFAULT_PRIME_FLOOR);
        assert_eq!(f.prime() % 5, 1);
        assert!(is_prime(f.prime()));
        // nothing smaller qualifies
        let mut c = DEFAULT_PRIME_FLOOR;
        while c < f.prime() {
            assert!(c % 5 != 1 || !is_prime(c));
            c += 1;
        }
        assert!(PrimeField::with_prime(5, 13).is_err());
        let small = PrimeField::with_prime(5, 11).unwrap();
        // primitive 5th roots mod 11 are 3, 4, 5, 9
        assert_eq!(small.root(), 3);
    }

    fn cyc_strategy(n: u32) -> impl Strategy<Value = Vec<i64>> {
        let deg = totient(n) as usize;
        proptest::collection::vec(-6i64..=6, deg)
    }

    fn build(f: &CyclotomicField, c: &[i64]) -> CycElem {
        let coeffs: Vec<BigRational> = c.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
        f.from_coefficients(&coeffs)
    }

    proptest! {
        #[test]
        fn field_axioms_exact(a in cyc_strategy(5), b in cyc_strategy(5), c in cyc_strategy(5)) {
            let f = CyclotomicField::new(5).unwrap();
            let (a, b, c) = (build(&f, &a), build(&f, &b), build(&f, &c));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            if !f.is_zero(&a) {
                prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
            }
        }

        #[test]
        fn field_axioms_modular(a in 0u64..1_000_000, b in 0u64..1_000_000, c in 0u64..1_000_000) {
            let f = PrimeField::new(7, DEFAULT_PRIME_FLOOR).unwrap();
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            if a != 0 {
                prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
            }
        }

        #[test]
        fn specialization_is_a_ring_map(a in cyc_strategy(6), b in cyc_strategy(6)) {
            let f = CyclotomicField::new(6).unwrap();
            let m = PrimeField::new(6, DEFAULT_PRIME_FLOOR).unwrap();
            let (a, b) = (build(&f, &a), build(&f, &b));
            let (sa, sb) = (m.specialize(&a).unwrap(), m.specialize(&b).unwrap());
            prop_assert_eq!(m.specialize(&f.add(&a, &b)).unwrap(), m.add(&sa, &sb));
            prop_assert_eq!(m.specialize(&f.mul(&a, &b)).unwrap(), m.mul(&sa, &sb));
        }
    }

    #[test]
    fn specialization_sends_q_to_root() {
        let f = CyclotomicField::new(8).unwrap();
        let m = PrimeField::new(8, 1 << 20).unwrap();
        assert_eq!(m.specialize(&f.q()).unwrap(), m.root());
        assert_eq!(m.specialize(&f.q_power(5)).unwrap(), m.q_power(5));
    }

    #[test]
    fn renders_polynomials() {
        assert_eq!(render_int_poly(&cyclotomic_polynomial(6)), "x^2 - x + 1");
        assert_eq!(render_int_poly(&cyclotomic_polynomial(1)), "x - 1");
    }
}
