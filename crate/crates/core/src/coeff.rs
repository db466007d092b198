//! Exact coefficient arithmetic: rationals and Gaussian rationals `a + bi`.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pauli::Phase;

/// Real Hamiltonian coefficient.
pub type Coeff = BigRational;

pub fn int(v: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Coeff {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q`, an integer, or a decimal with optional exponent
/// (`-0.125`, `3e-2`) into an exact rational.
pub fn parse_rational(text: &str) -> Result<Coeff> {
    let t = text.trim();
    let bad = || Error::ParseCoefficient(t.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(k) => (&t[..k], t[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let mut all = String::from(int_part);
    all.push_str(frac_part);
    let mut num: BigInt = all.parse().map_err(|_| bad())?;
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(r)
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Coeff) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Coeff) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact `re + i·im` over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRational {
    pub re: Coeff,
    pub im: Coeff,
}

impl GaussRational {
    pub fn zero() -> Self {
        GaussRational { re: Coeff::zero(), im: Coeff::zero() }
    }

    pub fn real(re: Coeff) -> Self {
        GaussRational { re, im: Coeff::zero() }
    }

    pub fn from_phase(p: Phase) -> Self {
        let (re, im) = p.as_gaussian();
        GaussRational { re: int(re as i64), im: int(im as i64) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplication by `i^k`, exact and cheap.
    pub fn times_phase(&self, p: Phase) -> Self {
        match p.exponent() {
            0 => self.clone(),
            1 => GaussRational { re: -self.im.clone(), im: self.re.clone() },
            2 => GaussRational { re: -self.re.clone(), im: -self.im.clone() },
            _ => GaussRational { re: self.im.clone(), im: -self.re.clone() },
        }
    }

    pub fn scale(&self, r: &Coeff) -> Self {
        GaussRational { re: &self.re * r, im: &self.im * r }
    }

    pub fn norm_sqr(&self) -> Coeff {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: Self) -> Self {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: Self) -> Self {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> Self {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", format_rational(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", format_rational(&self.re), sign, format_rational(&self.im.abs()))
    }
}

pub fn one() -> Coeff {
    Coeff::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert_eq!(parse_rational("1.5e2").unwrap(), int(150));
        assert_eq!(parse_rational("25e-2").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "-7", "3/4", "-1/3"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }

    #[test]
    fn phases_multiply() {
        let a = GaussRational { re: int(2), im: int(1) };
        for k in 0..4 {
            let p = Phase::from_exponent(k);
            assert_eq!(a.times_phase(p), &a * &GaussRational::from_phase(p));
        }
        assert_eq!(a.to_string(), "2+1i");
    }
}
