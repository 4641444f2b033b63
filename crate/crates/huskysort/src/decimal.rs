//! An arbitrary-precision decimal: `unscaled · 10^(-scale)` with value
//! semantics — `1.50`, `1.5` and `15e-1` are the same number, compare equal
//! and hash… well, there's no hashing, but `Ord`/`Eq` are by numeric value.
//!
//! Kept deliberately small: construction, parsing, display and a total
//! order. That's everything the decimal coder and the benchmark generators
//! need.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};

/// Arbitrary-precision signed decimal, normalized so the unscaled part
/// carries no trailing zero digits (zero is `0 · 10^0`).
#[derive(Debug, Clone)]
pub struct BigDecimal {
    unscaled: BigInt,
    scale: i64,
}

impl BigDecimal {
    /// `unscaled · 10^(-scale)`, normalized.
    pub fn new(mut unscaled: BigInt, mut scale: i64) -> Self {
        if unscaled.sign() == Sign::NoSign {
            return Self { unscaled, scale: 0 };
        }
        let ten = BigInt::from(10);
        loop {
            let (q, r) = (&unscaled / &ten, &unscaled % &ten);
            if r.sign() == Sign::NoSign {
                unscaled = q;
                scale -= 1;
            } else {
                break;
            }
        }
        Self { unscaled, scale }
    }

    pub fn unscaled(&self) -> &BigInt {
        &self.unscaled
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.unscaled.sign() == Sign::NoSign
    }

    /// Number of decimal digits of the unscaled magnitude (1 for zero).
    fn digits(&self) -> i128 {
        self.unscaled.magnitude().to_str_radix(10).len() as i128
    }

    /// Compare magnitudes, ignoring sign. Both nonzero.
    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        // Adjusted exponent: a value with d digits and scale s lies in
        // [10^(d-s-1), 10^(d-s)), so different adjusted exponents decide
        // immediately and equal ones mean the digit difference equals the
        // scale difference, keeping the alignment power small.
        let adj_a = self.digits() - self.scale as i128;
        let adj_b = other.digits() - other.scale as i128;
        if adj_a != adj_b {
            return adj_a.cmp(&adj_b);
        }
        let d = self.scale as i128 - other.scale as i128;
        let (ua, ub) = (self.unscaled.magnitude(), other.unscaled.magnitude());
        if d == 0 {
            ua.cmp(ub)
        } else if d > 0 {
            ua.cmp(&(ub * pow10(d as u32)))
        } else {
            (ua * pow10((-d) as u32)).cmp(ub)
        }
    }
}

pub(crate) fn pow10(e: u32) -> BigUint {
    BigUint::from(10u32).pow(e)
}

impl From<i64> for BigDecimal {
    fn from(x: i64) -> Self {
        Self::new(BigInt::from(x), 0)
    }
}

impl From<BigInt> for BigDecimal {
    fn from(x: BigInt) -> Self {
        Self::new(x, 0)
    }
}

impl PartialEq for BigDecimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigDecimal {}

impl PartialOrd for BigDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.unscaled.sign(), other.unscaled.sign());
        if sa != sb {
            // Sign derives Ord as Minus < NoSign < Plus, which is value order.
            return sa.cmp(&sb);
        }
        match sa {
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => self.cmp_magnitude(other),
            Sign::Minus => self.cmp_magnitude(other).reverse(),
        }
    }
}

/// Error from [`BigDecimal::from_str`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseBigDecimalError {
    Empty,
    InvalidDigit,
    BadExponent,
}

impl fmt::Display for ParseBigDecimalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty decimal literal"),
            Self::InvalidDigit => write!(f, "invalid digit in decimal literal"),
            Self::BadExponent => write!(f, "bad exponent in decimal literal"),
        }
    }
}

impl core::error::Error for ParseBigDecimalError {}

impl FromStr for BigDecimal {
    type Err = ParseBigDecimalError;

    /// Accepts `[+-]? digits [. digits]? ([eE] [+-]? digits)?` with at
    /// least one digit in the mantissa.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (mantissa, exp_part) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], Some(&s[i + 1..])),
            None => (s, None),
        };
        let exp: i64 = match exp_part {
            None => 0,
            Some(e) => e.parse().map_err(|_| ParseBigDecimalError::BadExponent)?,
        };
        let (sign, body) = match mantissa.as_bytes() {
            [b'+', ..] => (Sign::Plus, &mantissa[1..]),
            [b'-', ..] => (Sign::Minus, &mantissa[1..]),
            _ => (Sign::Plus, mantissa),
        };
        let (int_part, frac_part) = match body.find('.') {
            Some(i) => (&body[..i], &body[i + 1..]),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseBigDecimalError::Empty);
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseBigDecimalError::InvalidDigit);
        }
        let mag = BigUint::from_str(&digits).map_err(|_| ParseBigDecimalError::InvalidDigit)?;
        let unscaled = BigInt::from_biguint(sign, mag);
        let scale = frac_part.len() as i64 - exp;
        Ok(Self::new(unscaled, scale))
    }
}

impl fmt::Display for BigDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unscaled.sign() == Sign::Minus {
            write!(f, "-")?;
        }
        let digits = self.unscaled.magnitude().to_str_radix(10);
        if self.scale <= 0 {
            write!(f, "{digits}")?;
            for _ in 0..-self.scale {
                write!(f, "0")?;
            }
            Ok(())
        } else if (digits.len() as i64) > self.scale {
            let point = digits.len() - self.scale as usize;
            write!(f, "{}.{}", &digits[..point], &digits[point..])
        } else {
            write!(f, "0.")?;
            for _ in 0..(self.scale - digits.len() as i64) {
                write!(f, "0")?;
            }
            write!(f, "{digits}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(s: &str) -> BigDecimal {
        s.parse().unwrap()
    }

    #[test]
    fn parse_display_round_trips() {
        for (input, shown) in [
            ("1.5", "1.5"),
            ("1.50", "1.5"),
            ("-0.25", "-0.25"),
            ("0", "0"),
            ("-0", "0"),
            ("12e3", "12000"),
            ("1.5e-3", "0.0015"),
            ("+3", "3"),
            (".5", "0.5"),
            (
                "123456789012345678901234567890",
                "123456789012345678901234567890",
            ),
        ] {
            assert_eq!(dec(input).to_string(), shown, "input {input:?}");
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in [
            "",
            ".",
            "e5",
            "1.2.3",
            "abc",
            "1e",
            "--1",
            "1e9999999999999999999",
        ] {
            assert!(bad.parse::<BigDecimal>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn equality_is_by_value() {
        assert_eq!(dec("1.50"), dec("1.5"));
        assert_eq!(dec("1.50"), dec("15e-1"));
        assert_eq!(dec("0"), dec("0.000"));
        assert_ne!(dec("1.5"), dec("1.05"));
    }

    #[test]
    fn ordering_matches_numeric_intuition() {
        let sorted = [
            "-100", "-2.5", "-2.4999", "-0.001", "0", "0.0009", "0.001", "1", "1.0001", "2", "100",
        ];
        for pair in sorted.windows(2) {
            assert!(dec(pair[0]) < dec(pair[1]), "{} < {}", pair[0], pair[1]);
        }
    }

    #[test]
    fn widely_separated_magnitudes_compare_without_blowup() {
        let huge = BigDecimal::new(BigInt::from(1), -400); // 10^400
        let twice = BigDecimal::new(BigInt::from(2), -400);
        let tiny = BigDecimal::new(BigInt::from(1), 400); // 10^-400
        assert!(tiny < huge);
        assert!(huge < twice);
        assert!(dec("-1") < tiny);
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let d = BigDecimal::new(BigInt::from(1500), 2); // 15.00
        assert_eq!(d.unscaled(), &BigInt::from(15));
        assert_eq!(d.scale(), 0);
        assert_eq!(d.to_string(), "15");
    }
}
