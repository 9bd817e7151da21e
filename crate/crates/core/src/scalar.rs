//! Coefficient scalars.
//!
//! The polynomial and Groebner layers are generic over the coefficient
//! field. A [`Coefficient`] must support exact field arithmetic with
//! decidable equality; the canonical instantiation is
//! [`num_rational::BigRational`] (exported as [`Rational`]), which is what
//! every higher layer of the library uses. Approximate types such as `f64`
//! cannot implement the trait because canonical forms require exact `Eq`.

use std::fmt;
use std::hash::Hash;
use std::ops::Neg;

use num_traits::Num;

/// An exact field scalar usable as a polynomial coefficient.
pub trait Coefficient:
    Num + Neg<Output = Self> + Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Parse a nonnegative decimal integer literal.
    fn from_decimal(digits: &str) -> Option<Self>;
}

impl Coefficient for num_rational::BigRational {
    fn from_decimal(digits: &str) -> Option<Self> {
        digits.parse().ok()
    }
}

/// The coefficient field used throughout the library: arbitrary-precision
/// rationals, always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    use num_bigint::BigInt;
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn canonical_form() {
        assert_eq!(rat(-4, 6), rat(-2, 3));
        assert_eq!(rat(0, 7), Rational::zero());
        assert_eq!(format!("{}", rat(5, 1)), "5");
        assert_eq!(format!("{}", rat(2, 3)), "2/3");
        assert!(rat(3, 3).is_one());
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(Rational::from_decimal("12"), Some(rat(12, 1)));
        assert_eq!(
            Rational::from_decimal("123456789012345678901234567890")
                .unwrap()
                .to_string(),
            "123456789012345678901234567890"
        );
        assert_eq!(Rational::from_decimal("x"), None);
    }
}
