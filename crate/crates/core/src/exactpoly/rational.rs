use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. The numerator/denominator pair is always kept
/// in lowest terms with a positive denominator by `num_rational`.
pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn half() -> Rational {
    q(1, 2)
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Config(format!("malformed rational {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = ip.trim_start().starts_with('-');
        let ip: BigInt = if ip.is_empty() || ip == "-" || ip == "+" {
            BigInt::zero()
        } else {
            ip.parse().map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(fp.len() as u32);
        let frac: BigInt = fp.parse().map_err(|_| bad())?;
        let mag = ip.abs() * &scale + frac;
        let num = if negative { -mag } else { mag };
        return Ok(Rational::new(num, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Formats as `"p/q"` (always with an explicit denominator).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // fall back to scaled division for huge numerators/denominators
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("7/10").unwrap(), q(7, 10));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("4/-6").unwrap(), q(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn format_always_has_denominator() {
        assert_eq!(format_rational(&int(2)), "2/1");
        assert_eq!(format_rational(&q(-6, 4)), "-3/2");
    }
}
