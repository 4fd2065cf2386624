//! Exact rational linear algebra.
//!
//! Scalars are arbitrary-precision rationals kept in lowest terms with a
//! positive denominator, so structural equality is numeric equality. The
//! elimination routines clear denominators row by row and work over ℤ; the
//! signature routine performs a congruence diagonalization over ℚ.

mod elim;
mod matrix;
mod signature;

pub use elim::{kernel_basis, rank, rref, RowEchelon, Rref};
pub use matrix::RatMatrix;
pub use signature::{signature, Signature};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact scalar. `num_rational` normalizes on construction: reduced, with a
/// positive denominator and zero stored as 0/1.
pub type Rational = num_rational::BigRational;

pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `"num/den"` with the denominator always present, e.g. `"2/1"`, `"-3/4"`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (
            a.trim().parse::<BigInt>().ok()?,
            b.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// True when the value is stored in canonical form.
pub fn is_canonical(q: &Rational) -> bool {
    use num_integer::Integer;
    let den = q.denom();
    den > &BigInt::zero() && q.numer().gcd(den).is_one() && (!q.numer().is_zero() || den.is_one())
}
