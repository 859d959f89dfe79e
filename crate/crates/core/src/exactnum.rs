//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! Every scalar in this crate — character values, matrix entries, bilinear
//! form values — is a [`Cyclotomic`]: an element of ℚ(ζ_N) stored in the
//! canonical ℚ-basis 1, ζ, …, ζ^{φ(N)−1} obtained by reducing modulo the
//! N-th cyclotomic polynomial Φ_N. Coefficients are arbitrary-precision
//! rationals; fixed-width integers overflow already in character inner
//! products over the order-120 binary icosahedral group.
//!
//! Canonical-form policy: binary operations lift both operands to the lcm
//! of their conductors and the result stays at that conductor, except that
//! a value detected to be rational (all non-constant basis coefficients
//! zero) is always re-stored at conductor 1. Equality compares at a common
//! conductor, so it is equality of mathematical values.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (guaranteed by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand constructor for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero in ℚ(ζ_{conductor})")]
    DivisionByZero { conductor: u64 },
    #[error("cannot parse cyclotomic literal {0:?}")]
    Parse(String),
}

/// Euler totient of `n`.
pub fn euler_phi(n: u64) -> u64 {
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

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

// Integer-coefficient polynomials, little-endian, no trailing zeros.
fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

// Exact quotient of integer polynomials; panics if the division is not
// exact (never the case for cyclotomic-polynomial towers).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    if rem.len() < den.len() {
        assert!(rem.is_empty(), "inexact polynomial division");
        return vec![];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let (q, r) = rem[k + dd].div_rem(&lead);
        assert!(r.is_zero(), "inexact polynomial division");
        quot[k] = q;
        for j in 0..=dd {
            let t = &quot[k] * &den[j];
            rem[k + j] -= t;
        }
    }
    poly_trim(&mut rem);
    assert!(rem.is_empty(), "inexact polynomial division");
    quot
}

/// Coefficients of the N-th cyclotomic polynomial Φ_N, little-endian.
///
/// Computed by dividing x^N − 1 by Φ_d for every proper divisor d | N;
/// results are cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: Lazy<Mutex<HashMap<u64, Vec<BigInt>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^N - 1
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut acc = num;
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_polynomial(d);
                acc = poly_div_exact(&acc, &phi_d);
            }
        }
        acc
    };
    CACHE.lock().unwrap().insert(n, result.clone());
    result
}

/// An exact element of the cyclotomic field ℚ(ζ_N).
///
/// Stored as the unique representative of degree < φ(N) modulo Φ_N, i.e.
/// coefficients on the basis 1, ζ_N, …, ζ_N^{φ(N)−1}. Immutable after
/// construction; freely shareable across threads.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>, // length phi(conductor)
}

impl Cyclotomic {
    /// The canonical form of Σ c_k ζ_N^k for the given exponent → coefficient
    /// terms. Exponents are reduced mod N.
    pub fn new(conductor: u64, terms: &[(u64, Rational)]) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let mut dense = vec![Rational::zero(); conductor as usize];
        for (e, c) in terms {
            let k = (e % conductor) as usize;
            dense[k] += c;
        }
        Self::from_dense_powers(conductor, dense)
    }

    // Reduce Σ dense[k] ζ^k (0 ≤ k < N) modulo Φ_N and canonicalize.
    fn from_dense_powers(conductor: u64, mut dense: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1; // = φ(N)
        // Polynomial remainder of `dense` by Φ_N over ℚ. Φ_N is monic.
        for k in (deg..dense.len()).rev() {
            if dense[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut dense[k], Rational::zero());
            for j in 0..deg {
                let t = &c * Rational::from_integer(phi[j].clone());
                dense[k - deg + j] -= t;
            }
        }
        dense.truncate(deg);
        dense.resize(deg, Rational::zero());
        let v = Cyclotomic {
            conductor,
            coeffs: dense,
        };
        v.reduce_if_rational()
    }

    fn reduce_if_rational(self) -> Self {
        if self.conductor == 1 {
            return self;
        }
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Cyclotomic {
                conductor: 1,
                coeffs: vec![self.coeffs[0].clone()],
            }
        } else {
            self
        }
    }

    /// The primitive N-th root of unity ζ_N^k.
    pub fn root_of_unity(conductor: u64, exponent: u64) -> Self {
        Self::new(conductor, &[(exponent, Rational::one())])
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Sparse view of the stored canonical form: exponent → coefficient.
    pub fn terms(&self) -> BTreeMap<u64, Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u64, c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1 || self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if this element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, if this element lies in ℤ.
    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    /// Re-express this element in ℚ(ζ_M); requires conductor | M.
    pub fn lift_to(&self, conductor: u64) -> Self {
        assert!(
            conductor % self.conductor == 0,
            "lift target must be a multiple of the conductor"
        );
        if conductor == self.conductor {
            return self.clone();
        }
        let stride = conductor / self.conductor;
        let mut dense = vec![Rational::zero(); conductor as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[k * stride as usize] = c.clone();
            }
        }
        Self::from_dense_powers(conductor, dense)
    }

    /// Raw coefficient vector after lifting to the given conductor. Used to
    /// build deterministic canonical keys, bypassing rational re-reduction.
    pub fn dense_at(&self, conductor: u64) -> Vec<Rational> {
        let stride = conductor / self.conductor;
        assert!(conductor % self.conductor == 0);
        let mut dense = vec![Rational::zero(); conductor as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[k * stride as usize] = c.clone();
            }
        }
        let lifted = Self::from_dense_powers(conductor, dense);
        let deg = euler_phi(conductor) as usize;
        let mut out = lifted.coeffs;
        out.resize(deg, Rational::zero());
        out
    }

    // Parallel coefficient vectors at the lcm conductor; the raw vectors are
    // safe for componentwise arithmetic even when one operand is rational.
    fn common(a: &Self, b: &Self) -> (Vec<Rational>, Vec<Rational>, u64) {
        let m = a.conductor.lcm(&b.conductor);
        (a.dense_at(m), b.dense_at(m), m)
    }

    /// Complex conjugation ζ_N^k ↦ ζ_N^{N−k}, extended ℚ-linearly. Fixes
    /// every rational; for a unitary character value γ(g) this sends it to
    /// γ(g⁻¹).
    pub fn conjugate(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let mut dense = vec![Rational::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[((n - k as u64) % n) as usize] += c;
            }
        }
        Self::from_dense_powers(n, dense)
    }

    /// Exact multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero {
                conductor: self.conductor,
            });
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // Extended Euclid in ℚ[x] against Φ_N: u·self + v·Φ_N = 1.
        let phi: Vec<Rational> = cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let inv = rational_poly_modinv(&self.coeffs, &phi);
        Ok(Self::from_dense_powers(self.conductor, inv))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, CycError> {
        let inv = rhs.inverse()?;
        Ok(self * &inv)
    }

    /// Integer power (non-negative exponent).
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Scale by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
        .reduce_if_rational()
    }
}

// Extended Euclid: inverse of `a` modulo the monic polynomial `m` over ℚ.
// Returns coefficients of the inverse, degree < deg m.
fn rational_poly_modinv(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    fn trim(p: &mut Vec<Rational>) {
        while p.last().map_or(false, |c| c.is_zero()) {
            p.pop();
        }
    }
    fn divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut rem = num.to_vec();
        trim(&mut rem);
        let dd = den.len() - 1;
        if rem.len() <= dd {
            return (vec![], rem);
        }
        let lead = den[dd].clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lead;
            quot[k] = q.clone();
            for j in 0..=dd {
                let t = &q * &den[j];
                rem[k + j] -= t;
            }
        }
        trim(&mut rem);
        (quot, rem)
    }
    fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }
    fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = a.to_vec();
        out.resize(a.len().max(b.len()), Rational::zero());
        for (j, y) in b.iter().enumerate() {
            out[j] -= y;
        }
        let mut out = out;
        trim(&mut out);
        out
    }

    // r0 = m, r1 = a; maintain t-coefficients with t0 = 0, t1 = 1.
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut t0: Vec<Rational> = vec![];
    let mut t1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    // r0 = gcd (a nonzero constant, since Φ_N is irreducible and a ≢ 0).
    assert_eq!(r0.len(), 1, "modulus not coprime to operand");
    let g = r0[0].clone();
    t0.iter().map(|c| c / &g).collect()
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = Cyclotomic::common(self, other);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, m) = Cyclotomic::common(self, rhs);
        let coeffs = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic {
            conductor: m,
            coeffs,
        }
        .reduce_if_rational()
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, m) = Cyclotomic::common(self, rhs);
        let coeffs = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
        Cyclotomic {
            conductor: m,
            coeffs,
        }
        .reduce_if_rational()
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(r) = self.to_rational() {
            return rhs.scale(&r);
        }
        if let Some(r) = rhs.to_rational() {
            return self.scale(&r);
        }
        let (a, b, m) = Cyclotomic::common(self, rhs);
        let mut dense = vec![Rational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_dense_powers(m, dense)
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl std::ops::SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self - rhs;
    }
}

/// Textual rendering `a0 + a1*z{N}^1 + …` with exact round-trip parsing.
/// Rationals render bare (`-3/2`); a root-of-unity term renders as
/// `c*zN^k` with the coefficient always explicit.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                parts.push(format!("{c}"));
            } else {
                parts.push(format!("{c}*z{}^{k}", self.conductor));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for Cyclotomic {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Self, CycError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CycError::Parse(s.into()));
        }
        let mut conductor = 1u64;
        let mut terms: Vec<(u64, Rational)> = Vec::new();
        for part in s.split(" + ") {
            let part = part.trim();
            if let Some((coeff, root)) = part.split_once('*') {
                let c: Rational = coeff
                    .parse()
                    .map_err(|_| CycError::Parse(part.into()))?;
                let root = root
                    .strip_prefix('z')
                    .ok_or_else(|| CycError::Parse(part.into()))?;
                let (n, k) = root
                    .split_once('^')
                    .ok_or_else(|| CycError::Parse(part.into()))?;
                let n: u64 = n.parse().map_err(|_| CycError::Parse(part.into()))?;
                let k: u64 = k.parse().map_err(|_| CycError::Parse(part.into()))?;
                if conductor == 1 {
                    conductor = n;
                } else if conductor != n {
                    return Err(CycError::Parse(s.into()));
                }
                terms.push((k, c));
            } else {
                let c: Rational = part
                    .parse()
                    .map_err(|_| CycError::Parse(part.into()))?;
                terms.push((0, c));
            }
        }
        let lifted: Vec<(u64, Rational)> = terms
            .into_iter()
            .map(|(k, c)| (k, c))
            .collect();
        Ok(Cyclotomic::new(conductor, &lifted))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta(n: u64, k: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn make_canonical_forms() {
        // ζ_1 = 1
        assert_eq!(zeta(1, 0), Cyclotomic::one());
        // ζ_4² = −1
        assert_eq!(zeta(4, 2), Cyclotomic::from_int(-1));
        // 1 + ζ_3 + ζ_3² = 0, so ζ_3 + ζ_3² = −1
        let v = Cyclotomic::new(3, &[(1, Rational::one()), (2, Rational::one())]);
        assert_eq!(v, Cyclotomic::from_int(-1));
        assert!(v.is_rational());
        assert_eq!(v.to_rational(), Some(rat_int(-1)));
    }

    #[test]
    fn arithmetic_examples() {
        // ζ_8 · ζ_8⁷ = 1
        assert_eq!(&zeta(8, 1) * &zeta(8, 7), Cyclotomic::one());
        // 1 / 2 = 1/2
        let half = Cyclotomic::one().div(&Cyclotomic::from_int(2)).unwrap();
        assert_eq!(half, Cyclotomic::from_rational(rat(1, 2)));
        // φ = ζ_5 + ζ_5⁴ satisfies φ² + φ − 1 = 0
        let phi = &zeta(5, 1) + &zeta(5, 4);
        let expr = &(&(&phi * &phi) + &phi) - &Cyclotomic::one();
        assert!(expr.is_zero());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(zeta(4, 1).conjugate(), -&zeta(4, 1));
        let half = Cyclotomic::from_rational(rat(1, 2));
        assert_eq!(half.conjugate(), half);
        // conj is an involution and fixes ζ + ζ⁻¹
        let v = &zeta(7, 2) + &zeta(7, 5);
        assert_eq!(v.conjugate(), v);
    }

    #[test]
    fn division_by_zero_is_signalled() {
        let e = Cyclotomic::one().div(&Cyclotomic::zero());
        assert!(matches!(e, Err(CycError::DivisionByZero { .. })));
    }

    #[test]
    fn mixed_conductor_equality() {
        // ζ_6² and ζ_3 are the same number at different conductors.
        assert_eq!(zeta(6, 2), zeta(3, 1));
        assert_ne!(zeta(6, 1), zeta(3, 1));
    }

    #[test]
    fn lift_then_reduce_is_identity() {
        let v = &zeta(5, 1) + &Cyclotomic::from_rational(rat(2, 3));
        let lifted = v.lift_to(15);
        assert_eq!(lifted, v);
        assert_eq!(lifted.conductor(), 15);
    }

    #[test]
    fn rendering_round_trips() {
        let samples = vec![
            Cyclotomic::zero(),
            Cyclotomic::from_rational(rat(-7, 3)),
            &zeta(8, 3).scale(&rat(5, 2)) + &Cyclotomic::from_int(4),
            &zeta(12, 7) - &zeta(12, 1),
        ];
        for v in samples {
            let s = v.to_string();
            let back: Cyclotomic = s.parse().unwrap();
            assert_eq!(back, v, "round-trip failed for {s}");
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(euler_phi(120), 32);
        assert_eq!(cyclotomic_polynomial(12).len() - 1, 4);
    }

    // Random sampling over a few small conductors with rational weights.
    fn arb_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
        let conductors = prop_oneof![Just(1u64), Just(3), Just(4), Just(8), Just(12)];
        (conductors, proptest::collection::vec((0u64..12, -6i64..6), 0..4)).prop_map(
            |(n, terms)| {
                let terms: Vec<(u64, Rational)> =
                    terms.into_iter().map(|(k, c)| (k, rat_int(c))).collect();
                Cyclotomic::new(n, &terms)
            },
        )
    }

    proptest! {
        #[test]
        fn field_axioms_hold(a in arb_cyclotomic(), b in arb_cyclotomic(), c in arb_cyclotomic()) {
            // associativity
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            // commutativity
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverses_multiply_to_one(a in arb_cyclotomic()) {
            if !a.is_zero() {
                let inv = Cyclotomic::one().div(&a).unwrap();
                prop_assert_eq!(&a * &inv, Cyclotomic::one());
            }
        }

        #[test]
        fn conjugation_is_ring_hom(a in arb_cyclotomic(), b in arb_cyclotomic()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        }

        #[test]
        fn display_parse_round_trip(a in arb_cyclotomic()) {
            let parsed: Cyclotomic = a.to_string().parse().unwrap();
            prop_assert_eq!(parsed, a);
        }
    }
}
