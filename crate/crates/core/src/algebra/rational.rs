//! Exact rational scalars.
//!
//! `Rat` wraps an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. All coefficient arithmetic in the crate goes through
//! this type; there is no floating point anywhere.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number. Always reduced, denominator always positive,
/// zero is canonically `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Build `p/q`. Fails on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::InvalidSpec("zero denominator".into()));
        }
        Ok(Rat(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidSpec("division by zero".into()));
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc *= self.clone();
        }
        acc
    }

    /// `n!` as a rational.
    pub fn factorial(n: u32) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=u64::from(n) {
            acc *= k;
        }
        Rat::from_int(acc)
    }

    /// Binomial coefficient `C(n, k)`.
    pub fn binomial(n: u32, k: u32) -> Self {
        if k > n {
            return Rat::zero();
        }
        let k = k.min(n - k);
        let mut acc = BigInt::one();
        for i in 0..u64::from(k) {
            acc = acc * (u64::from(n) - i) / (i + 1);
        }
        Rat::from_int(acc)
    }

    /// Exact conversion of a decimal literal such as `-12.25` or `3e-2`:
    /// digits over the matching power of ten, no rounding.
    pub fn from_decimal_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(s, 0, "empty number"));
        }
        let (mantissa, exp10) = match t.find(['e', 'E']) {
            Some(pos) => {
                let e: i32 = t[pos + 1..]
                    .parse()
                    .map_err(|_| Error::parse(s, pos + 1, "bad exponent"))?;
                (&t[..pos], e)
            }
            None => (t, 0),
        };
        let (sign, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = match digits.find('.') {
            Some(pos) => (&digits[..pos], &digits[pos + 1..]),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(Error::parse(s, 0, "no digits"));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(Error::parse(s, 0, "non-digit in number"));
        }
        let joined = format!("{int_part}{frac_part}");
        let numer: BigInt = joined.parse().expect("digits");
        let shift = frac_part.len() as i64 - i64::from(exp10);
        let base = Rat::from_int(numer * sign);
        let scale = Rat::from_int(BigInt::from(10)).pow(shift.unsigned_abs() as u32);
        Ok(if shift >= 0 {
            (base / scale).expect("ten is nonzero")
        } else {
            base * scale
        })
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Parses `p` or `p/q` with an optional sign on `p` and `q > 0`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (numer_str, denom_str) = match t.find('/') {
            Some(pos) => (&t[..pos], Some(&t[pos + 1..])),
            None => (t, None),
        };
        let numer: BigInt = numer_str
            .parse()
            .map_err(|_| Error::parse(s, 0, "bad numerator"))?;
        let denom: BigInt = match denom_str {
            Some(d) => {
                let d: BigInt = d
                    .parse()
                    .map_err(|_| Error::parse(s, 0, "bad denominator"))?;
                if !d.is_positive() {
                    return Err(Error::parse(s, 0, "denominator must be positive"));
                }
                d
            }
            None => BigInt::one(),
        };
        Rat::new(numer, denom)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Result<Rat>;
    // fallible division: multiply by the checked reciprocal
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Rat) -> Result<Rat> {
        Ok(self * rhs.recip()?)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0.clone())
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}
