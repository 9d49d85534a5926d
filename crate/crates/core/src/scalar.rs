//! Exact scalar fields: the rationals and prime fields `Z/pZ`.
//!
//! Everything in this crate is generic over [`Scalar`]. Two families of
//! implementations exist: [`num_rational::BigRational`] (always kept in
//! lowest terms with a positive denominator by `num-rational`) and
//! [`Fp<P>`] for a prime `P < 2^31`, checked at compile time.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Descriptor of the ground field, as it appears in the interchange format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad scalar token `{0}`")]
pub struct BadScalar(pub String);

/// An exact field element.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn field() -> FieldKind;

    /// 0 for the rationals.
    fn characteristic() -> u64 {
        match Self::field() {
            FieldKind::Rational => 0,
            FieldKind::Prime(p) => p,
        }
    }

    fn from_i64(n: i64) -> Self;

    fn inv(&self) -> Option<Self>;

    /// Canonical representative in `[0, p)` for prime fields, `None` over `Q`.
    fn residue(&self) -> Option<u64>;

    /// All elements, for finite fields.
    fn elements() -> Option<Vec<Self>>;

    /// Parse one token of the scalar grammar `-?[0-9]+(/[1-9][0-9]*)?`.
    fn parse_token(token: &str) -> Result<Self, BadScalar>;

    /// Canonical string form; `parse_token(x.encode()) == x`.
    fn encode(&self) -> String;

    /// A random element. Over `Q` an integer in `[-spread, spread]`.
    fn sample<R: Rng + ?Sized>(rng: &mut R, spread: u32) -> Self;

    /// Distinct roots in the field of the polynomial with coefficients
    /// `coeffs[0] + coeffs[1] t + ...`.
    fn roots(coeffs: &[Self]) -> Vec<Self>;

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a.clone() * b.clone();
    }
}

fn check_grammar(token: &str) -> Result<(&str, Option<&str>), BadScalar> {
    let bad = || BadScalar(token.to_string());
    let body = token.strip_prefix('-').unwrap_or(token);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if let Some(d) = den {
        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) || d.starts_with('0') {
            return Err(bad());
        }
    }
    Ok((num, den))
}

impl Scalar for BigRational {
    fn field() -> FieldKind {
        FieldKind::Rational
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn residue(&self) -> Option<u64> {
        None
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn parse_token(token: &str) -> Result<Self, BadScalar> {
        let (_, den) = check_grammar(token)?;
        let bad = || BadScalar(token.to_string());
        let (n, d) = match token.split_once('/') {
            Some((n, d)) => (n, d),
            None => (token, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        // non-canonical fractions such as 2/4 are rejected
        if den.is_some() && !n.gcd(&d).is_one() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    }

    fn encode(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R, spread: u32) -> Self {
        let s = spread as i64;
        Self::from_i64(rng.random_range(-s..=s))
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        rational_roots(coeffs)
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// Rational roots via the rational root theorem on the primitive integer
/// polynomial. Coefficient magnitudes beyond `u64` yield no roots.
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if c[0].is_zero() {
        out.push(BigRational::zero());
        while c.first().is_some_and(|x| x.is_zero()) {
            c.remove(0);
        }
    }
    if c.len() <= 1 {
        return out;
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * &lcm).to_integer()).collect();
    let (Some(a0), Some(an)) = (ints[0].abs().to_u64(), ints[ints.len() - 1].abs().to_u64()) else {
        return out;
    };
    let eval = |r: &BigRational| {
        let mut acc = BigRational::zero();
        for x in c.iter().rev() {
            acc = acc * r + x;
        }
        acc
    };
    for p in divisors(a0) {
        for q in divisors(an) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(p) * sign, BigInt::from(q));
                if eval(&r).is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(
        is_prime(P) && P < (1 << 31),
        "modulus must be a prime below 2^31"
    );

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp(v % P)
    }

    pub fn from_signed(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 {
            self.0 - o.0
        } else {
            self.0 + P - o.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in prime field")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn field() -> FieldKind {
        FieldKind::Prime(P)
    }

    fn from_i64(n: i64) -> Self {
        Fp::from_signed(n)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn residue(&self) -> Option<u64> {
        Some(self.0)
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp::new).collect())
    }

    fn parse_token(token: &str) -> Result<Self, BadScalar> {
        let (num, den) = check_grammar(token)?;
        if den.is_some() {
            return Err(BadScalar(token.to_string()));
        }
        let magnitude = BigInt::from_str(num).map_err(|_| BadScalar(token.to_string()))?;
        let r = (magnitude % BigInt::from(P)).to_u64().unwrap_or(0);
        let v = Fp::new(r);
        Ok(if token.starts_with('-') { -v } else { v })
    }

    fn encode(&self) -> String {
        self.0.to_string()
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R, _spread: u32) -> Self {
        Fp::new(rng.random_range(0..P))
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        (0..P)
            .map(Fp::new)
            .filter(|r| {
                coeffs
                    .iter()
                    .rev()
                    .fold(Fp::new(0), |acc, c| acc * *r + *c)
                    .is_zero()
            })
            .collect()
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += *a * *b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = BigRational;
    type F7 = Fp<7>;

    #[test]
    fn rational_tokens() {
        assert_eq!(Q::parse_token("3/4").unwrap().encode(), "3/4");
        assert_eq!(Q::parse_token("-5").unwrap().encode(), "-5");
        assert!(Q::parse_token("1/0").is_err());
        assert!(Q::parse_token("2/4").is_err());
        assert!(Q::parse_token("1.5").is_err());
        assert!(Q::parse_token("").is_err());
        assert!(Q::parse_token("-/3").is_err());
    }

    #[test]
    fn prime_tokens() {
        assert_eq!(F7::parse_token("9").unwrap(), F7::new(2));
        assert_eq!(F7::parse_token("-1").unwrap(), F7::new(6));
        assert!(F7::parse_token("1/2").is_err());
    }

    #[test]
    fn prime_field_inverse() {
        for x in 1..7 {
            let a = F7::new(x);
            assert_eq!(a * a.inv().unwrap(), F7::one());
        }
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn rational_roots_found() {
        // (t - 1)(t + 2)(2t - 3) = 2t^3 - t^2 - 7t + 6
        let c: Vec<Q> = [6, -7, -1, 2].iter().map(|&x| Q::from_i64(x)).collect();
        let mut r = Q::roots(&c);
        r.sort();
        assert_eq!(
            r,
            vec![Q::from_i64(-2), Q::from_i64(1), Q::new(3.into(), 2.into())]
        );
        // t^2 + 1 has no rational root
        let c: Vec<Q> = [1, 0, 1].iter().map(|&x| Q::from_i64(x)).collect();
        assert!(Q::roots(&c).is_empty());
    }

    #[test]
    fn prime_roots_found() {
        // t^2 - 2 over F_7: 3^2 = 9 = 2, 4^2 = 16 = 2
        let c = [F7::from_i64(-2), F7::zero(), F7::one()];
        assert_eq!(F7::roots(&c), vec![F7::new(3), F7::new(4)]);
    }
}
