//! Exact rationals with a machine-word fast path.
//!
//! A [`Rational`] is always stored in lowest terms with a positive denominator.
//! Values whose numerator fits in an `i64` and denominator in a `u64` live
//! inline; everything else is boxed as a [`BigRational`]. The representation
//! is canonical, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::num::NonZeroU64;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64, NonZeroU64),
    Big(Box<BigRational>),
}

/// Reduced fraction in double-word arithmetic; `d > 0`.
type Wide = (i128, u128);

fn reduce(n: i128, d: u128) -> Wide {
    if d == 1 {
        return (n, 1);
    }
    let g = n.unsigned_abs().gcd(&d);
    if g <= 1 {
        (n, d)
    } else {
        // g divides |n| so the quotient fits back into i128
        let n = if n < 0 {
            -((n.unsigned_abs() / g) as i128)
        } else {
            (n as u128 / g) as i128
        };
        (n, d / g)
    }
}

fn wide_add((n1, d1): Wide, (n2, d2): Wide) -> Option<Wide> {
    if d1 == d2 {
        return Some(reduce(n1.checked_add(n2)?, d1));
    }
    let g = d1.gcd(&d2);
    let f1 = i128::try_from(d2 / g).ok()?;
    let f2 = i128::try_from(d1 / g).ok()?;
    let n = n1.checked_mul(f1)?.checked_add(n2.checked_mul(f2)?)?;
    let d = d1.checked_mul(d2 / g)?;
    Some(reduce(n, d))
}

fn wide_mul((n1, d1): Wide, (n2, d2): Wide) -> Option<Wide> {
    if d1 == 1 && d2 == 1 {
        return Some((n1.checked_mul(n2)?, 1));
    }
    let g1 = n1.unsigned_abs().gcd(&d2).max(1);
    let g2 = n2.unsigned_abs().gcd(&d1).max(1);
    let n = (n1 / g1 as i128).checked_mul(n2 / g2 as i128)?;
    let d = (d1 / g2).checked_mul(d2 / g1)?;
    Some((n, d))
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, NonZeroU64::MIN))
    }

    pub fn one() -> Self {
        Rational::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Repr::Small(n, NonZeroU64::MIN))
    }

    /// `n / d`, reduced. Panics when `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let (n, d) = if d < 0 {
            (-(n as i128), d.unsigned_abs() as u128)
        } else {
            (n as i128, d as u128)
        };
        let (n, d) = reduce(n, d);
        Rational::from_wide(n, d)
    }

    /// `n / d` for arbitrary-precision parts, reduced. Panics when `d == 0`.
    pub fn from_bigints(n: BigInt, d: BigInt) -> Self {
        Rational::from_big(BigRational::new(n, d))
    }

    fn from_wide(n: i128, d: u128) -> Self {
        match (i64::try_from(n), u64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, NonZeroU64::new(d).expect("positive"))),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    /// Takes an already-normalized big rational and demotes it when it fits.
    fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_u64()) {
            return Rational(Repr::Small(n, NonZeroU64::new(d).expect("positive")));
        }
        Rational(Repr::Big(Box::new(r)))
    }

    fn wide(&self) -> Option<Wide> {
        match &self.0 {
            Repr::Small(n, d) => Some((*n as i128, d.get() as u128)),
            Repr::Big(_) => None,
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(d.get())),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(d.get()),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => d.get() == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// True while the value is held inline (no heap allocation).
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small(..))
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small(n, d) => {
                let num = d.get() as i128 * n.signum() as i128;
                Rational::from_wide(num, n.unsigned_abs() as u128)
            }
            Repr::Big(b) => Rational::from_big(b.recip()),
        }
    }

    /// `self -= a * b` without intermediate allocation on the inline path.
    pub fn sub_mul_assign(&mut self, a: &Rational, b: &Rational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if let (Some(s), Some(x), Some(y)) = (self.wide(), a.wide(), b.wide()) {
            if let Some(p) = wide_mul(x, y) {
                if let Some(r) = wide_add(s, (-p.0, p.1)) {
                    *self = Rational::from_wide(r.0, r.1);
                    return;
                }
            }
        }
        *self = Rational::from_big(self.to_big() - a.to_big() * b.to_big());
    }

    /// `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &Rational, b: &Rational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if let (Some(s), Some(x), Some(y)) = (self.wide(), a.wide(), b.wide()) {
            if let Some(p) = wide_mul(x, y) {
                if let Some(r) = wide_add(s, p) {
                    *self = Rational::from_wide(r.0, r.1);
                    return;
                }
            }
        }
        *self = Rational::from_big(self.to_big() + a.to_big() * b.to_big());
    }

    fn add_ref(&self, rhs: &Rational) -> Rational {
        if let (Some(x), Some(y)) = (self.wide(), rhs.wide()) {
            if let Some((n, d)) = wide_add(x, y) {
                return Rational::from_wide(n, d);
            }
        }
        Rational::from_big(self.to_big() + rhs.to_big())
    }

    fn sub_ref(&self, rhs: &Rational) -> Rational {
        if let (Some(x), Some((n2, d2))) = (self.wide(), rhs.wide()) {
            if let Some((n, d)) = wide_add(x, (-n2, d2)) {
                return Rational::from_wide(n, d);
            }
        }
        Rational::from_big(self.to_big() - rhs.to_big())
    }

    fn mul_ref(&self, rhs: &Rational) -> Rational {
        if let (Some(x), Some(y)) = (self.wide(), rhs.wide()) {
            if let Some((n, d)) = wide_mul(x, y) {
                return Rational::from_wide(n, d);
            }
        }
        Rational::from_big(self.to_big() * rhs.to_big())
    }

    fn div_ref(&self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        self.mul_ref(&rhs.recip())
    }

    fn neg_ref(&self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational::from_wide(-(*n as i128), d.get() as u128),
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_big(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational::from_big(r)
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            let lhs = *a as i128 * d.get() as i128;
            let rhs = *c as i128 * b.get() as i128;
            return lhs.cmp(&rhs);
        }
        self.to_big().cmp(&other.to_big())
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, d) if d.get() == 1 => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || ParseRationalError::Invalid(s.to_string());
        let t = s.trim();
        let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
            let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            part.parse::<BigInt>().map_err(|_| invalid())
        };
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => {
                if d.starts_with(['+', '-']) {
                    return Err(invalid());
                }
                (parse_int(n)?, parse_int(d)?)
            }
            None => (parse_int(t)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        Ok(Rational::from_bigints(n, d))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign(&mut self, rhs: Rational) {
                *self = self.$imp(&rhs);
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign(&mut self, rhs: &Rational) {
                *self = self.$imp(rhs);
            }
        }
    };
}

forward_binop!(Add, add, add_ref, AddAssign, add_assign);
forward_binop!(Sub, sub, sub_ref, SubAssign, sub_assign);
forward_binop!(Mul, mul, mul_ref, MulAssign, mul_assign);
forward_binop!(Div, div, div_ref, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}
