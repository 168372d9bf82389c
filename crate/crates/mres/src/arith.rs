//! Exact coefficient arithmetic: the ring/field abstraction shared by every
//! other module, a runtime-modulus prime field, and p-adic valuation.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An integral domain with exact arithmetic and an exact division test.
///
/// Elements act as their own ring witness: `zero_like`/`one_like` produce
/// values in the same ring as `self` (this matters for rings with runtime
/// parameters such as a prime-field modulus).
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// `Some(q)` with `self = q * rhs` when the division is exact in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Canonical associate: a fixed representative of `self` modulo units.
    /// Absolute value over the integers and rationals, unit-normalized
    /// leading coefficient for polynomial extensions.
    fn canonical_assoc(&self) -> Self;

    /// Pivot preference for elimination; larger is preferred.
    fn pivot_score(&self) -> i64;

    fn from_i64_like(&self, v: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn canonical_assoc(&self) -> Self {
        self.abs()
    }
    fn pivot_score(&self) -> i64 {
        // largest absolute value preferred
        self.bits() as i64
    }
    fn from_i64_like(&self, v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn canonical_assoc(&self) -> Self {
        self.abs()
    }
    fn pivot_score(&self) -> i64 {
        // prefer entries with small numerator/denominator to limit growth
        -((self.numer().bits() + self.denom().bits()) as i64)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Element of the prime field F_p with runtime modulus `p < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Fp {
    p: u64,
    v: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Result<Fp, ArithError> {
        if !is_prime_u64(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Self::new_unchecked(v, p))
    }

    /// Skips the primality check; for inner loops over an already-validated p.
    pub fn new_unchecked(v: i64, p: u64) -> Fp {
        let m = v.rem_euclid(p as i64) as u64;
        Fp { p, v: m }
    }

    pub fn from_bigint(n: &BigInt, p: u64) -> Result<Fp, ArithError> {
        if !is_prime_u64(p) {
            return Err(ArithError::NotPrime(p));
        }
        let m = n.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        let v = digits.first().copied().unwrap_or(0);
        Ok(Fp { p, v })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
    pub fn value(&self) -> u64 {
        self.v
    }

    fn check(&self, rhs: &Fp) {
        assert_eq!(self.p, rhs.p, "mixed prime-field moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { p: self.p, v: 0 }
    }
    fn one_like(&self) -> Self {
        Fp { p: self.p, v: 1 % self.p }
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp { p: self.p, v: (self.v + rhs.v) % self.p }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp { p: self.p, v: (self.v + self.p - rhs.v) % self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let prod = (self.v as u128 * rhs.v as u128) % self.p as u128;
        Fp { p: self.p, v: prod as u64 }
    }
    fn neg(&self) -> Self {
        Fp { p: self.p, v: if self.v == 0 { 0 } else { self.p - self.v } }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.inv()?))
    }
    fn canonical_assoc(&self) -> Self {
        if self.v == 0 {
            *self
        } else {
            self.one_like()
        }
    }
    fn pivot_score(&self) -> i64 {
        0
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Fp::new_unchecked(v, self.p)
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        Some(self.pow(self.p - 2))
    }
}

impl Fp {
    fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    // these bases are sufficient for a deterministic test below 2^64
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// p-adic valuation: the largest e with p^e | n. `None` encodes +infinity (n = 0).
pub fn val_p(n: &BigInt, p: u64) -> Result<Option<u64>, ArithError> {
    if !is_prime_u64(p) {
        return Err(ArithError::NotPrime(p));
    }
    if Zero::is_zero(n) {
        return Ok(None);
    }
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut e = 0u64;
    loop {
        let (q, r) = m.div_rem(&p);
        if !Zero::is_zero(&r) {
            return Ok(Some(e));
        }
        m = q;
        e += 1;
    }
}

/// Parses "-3/7" style strings into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().ok()?;
            let den: BigInt = b.trim().parse().ok()?;
            if Zero::is_zero(&den) {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(num))
        }
    }
}

/// Renders a rational in the same "-3/7" form accepted by `parse_rational`.
pub fn format_rational(r: &BigRational) -> String {
    if num_traits::One::is_one(r.denom()) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn val_p_basics() {
        let n = BigInt::from(50);
        assert_eq!(val_p(&n, 5).unwrap(), Some(2));
        assert_eq!(val_p(&BigInt::from(0), 7).unwrap(), None);
        assert_eq!(val_p(&BigInt::from(-27), 3).unwrap(), Some(3));
        assert_eq!(val_p(&BigInt::from(10), 4), Err(ArithError::NotPrime(4)));
    }

    #[test]
    fn val_p_multiplicative() {
        let a = BigInt::from(2 * 3 * 3 * 7);
        let b = BigInt::from(3 * 5);
        let ab = &a * &b;
        let va = val_p(&a, 3).unwrap().unwrap();
        let vb = val_p(&b, 3).unwrap().unwrap();
        assert_eq!(val_p(&ab, 3).unwrap().unwrap(), va + vb);
        let vsum = val_p(&(&a + &b), 3).unwrap().unwrap();
        assert!(vsum >= va.min(vb));
    }

    #[test]
    fn prime_field_arith() {
        let a = Fp::new(-3, 7).unwrap();
        assert_eq!(a.value(), 4);
        let b = Fp::new(5, 7).unwrap();
        assert_eq!(a.mul(&b).value(), 6);
        assert_eq!(b.inv().unwrap().mul(&b), b.one_like());
        assert!(Fp::new(1, 6).is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(97));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
    }

    #[test]
    fn rational_round_trip() {
        let r = parse_rational("-3/7").unwrap();
        assert_eq!(format_rational(&r), "-3/7");
        let b = BigRational::from_integer(BigInt::from(7));
        assert_eq!(r.mul(&b), BigRational::from_integer(BigInt::from(-3)));
        assert_eq!(parse_rational("12"), Some(BigRational::from_integer(BigInt::from(12))));
        assert!(parse_rational("1/0").is_none());
    }
}
