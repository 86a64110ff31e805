use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An arbitrary-precision Gaussian integer `re + im*i`.
///
/// The ring `Z[i]` is an integral domain (in fact a Euclidean domain), which
/// is exactly what fraction-free elimination needs: products never vanish
/// unless a factor does, and the interior divisions of the Bareiss recurrence
/// are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    /// The real unit `1`.
    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    /// The zero element.
    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Real part of a purely real value; `None` if the imaginary part is nonzero.
    pub fn to_real(&self) -> Option<BigInt> {
        if self.is_real() {
            Some(self.re.clone())
        } else {
            None
        }
    }

    /// Complex conjugate `re - im*i`.
    pub fn conj(&self) -> Self {
        GaussianInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// The field norm `re^2 + im^2` (a nonnegative ordinary integer).
    pub fn norm_sqr(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact division in `Z[i]`: returns `self / rhs` when `rhs` divides
    /// `self` exactly, `None` otherwise (including division by zero).
    ///
    /// Uses `a / b = a * conj(b) / |b|^2`; the quotient is a Gaussian integer
    /// iff `|b|^2` divides both components of `a * conj(b)`.
    pub fn exact_div(&self, rhs: &GaussianInt) -> Option<GaussianInt> {
        if rhs.is_zero() {
            return None;
        }
        let numer = self * &rhs.conj();
        let denom = rhs.norm_sqr();
        if (&numer.re % &denom).is_zero() && (&numer.im % &denom).is_zero() {
            Some(GaussianInt {
                re: numer.re / &denom,
                im: numer.im / &denom,
            })
        } else {
            None
        }
    }
}

impl From<i64> for GaussianInt {
    fn from(v: i64) -> Self {
        GaussianInt::new(v, 0)
    }
}

impl From<BigInt> for GaussianInt {
    fn from(v: BigInt) -> Self {
        GaussianInt { re: v, im: BigInt::zero() }
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        // Short-circuit on zero: the elimination loops spend most of their
        // time multiplying into sparse matrices.
        if self.is_zero() || rhs.is_zero() {
            return GaussianInt::zero();
        }
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: GaussianInt) -> GaussianInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &GaussianInt) -> GaussianInt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

/// Renders `a`, `a+bi`, `a-bi`, `bi`, `i`, `-i`, or `0`, with no interior
/// spaces and unit imaginary coefficients elided.
impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let imag = |f: &mut fmt::Formatter<'_>, im: &BigInt, explicit_plus: bool| {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if explicit_plus {
                "+"
            } else {
                ""
            };
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        if self.re.is_zero() {
            imag(f, &self.im, false)
        } else {
            write!(f, "{}", self.re)?;
            imag(f, &self.im, true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn display_covers_all_entry_shapes() {
        let cases = [
            (g(0, 0), "0"),
            (g(3, 0), "3"),
            (g(-2, 0), "-2"),
            (g(0, 1), "i"),
            (g(0, -1), "-i"),
            (g(0, 2), "2i"),
            (g(0, -5), "-5i"),
            (g(1, 1), "1+i"),
            (g(2, -1), "2-i"),
            (g(-1, -3), "-1-3i"),
            (g(4, 7), "4+7i"),
        ];
        for (value, expected) in cases {
            assert_eq!(value.to_string(), expected);
        }
    }

    #[test]
    fn multiplication_follows_i_squared_is_minus_one() {
        assert_eq!(&g(0, 1) * &g(0, 1), g(-1, 0));
        assert_eq!(&g(1, 2) * &g(3, -1), g(5, 5));
    }

    #[test]
    fn exact_division_succeeds_only_on_true_divisors() {
        // (3+i) = (1+i)(2-i)
        assert_eq!(g(3, 1).exact_div(&g(1, 1)), Some(g(2, -1)));
        // 1+i has norm 2, which does not divide 1.
        assert_eq!(g(1, 0).exact_div(&g(1, 1)), None);
        assert_eq!(g(1, 0).exact_div(&g(0, 0)), None);
        // Divisibility by a unit always succeeds.
        assert_eq!(g(7, -3).exact_div(&g(0, -1)), Some(g(3, 7)));
    }

    #[test]
    fn conjugate_and_norm() {
        let z = g(2, -5);
        assert_eq!(z.conj(), g(2, 5));
        assert_eq!(z.norm_sqr(), BigInt::from(29));
        assert_eq!(&z * &z.conj(), GaussianInt::from(BigInt::from(29)));
    }
}
