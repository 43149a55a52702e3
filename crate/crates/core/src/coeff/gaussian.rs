use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `re + i*im` of the Gaussian rationals Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::real(BigRational::from_integer(n))
    }

    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_one() {
            return self.clone();
        }
        let k = BigRational::from_integer(k.clone());
        self.scale(&k)
    }

    /// True when the value reads as negative for sign extraction in rendering:
    /// a negative real part, or a zero real part with negative imaginary part.
    pub fn is_negative_like(&self) -> bool {
        self.re.is_negative() || (self.re.is_zero() && self.im.is_negative())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

impl GaussianRational {
    /// Renders the value as a standalone factor in the expression grammar.
    /// Non-atomic values are parenthesised, so the output can be followed by `*`.
    pub fn render_factor(&self) -> String {
        let abs_re = self.re.abs();
        let abs_im = self.im.abs();
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => {
                let s = fmt_rational(&abs_re);
                if self.re.is_negative() {
                    format!("-{s}")
                } else {
                    s
                }
            }
            (true, false) => {
                let body = if abs_im.is_one() {
                    "I".to_string()
                } else {
                    format!("{}*I", fmt_rational(&abs_im))
                };
                if self.im.is_negative() {
                    format!("-{body}")
                } else {
                    body
                }
            }
            (false, false) => {
                let re = if self.re.is_negative() {
                    format!("-{}", fmt_rational(&abs_re))
                } else {
                    fmt_rational(&abs_re)
                };
                let im = if abs_im.is_one() {
                    "I".to_string()
                } else {
                    format!("{}*I", fmt_rational(&abs_im))
                };
                let sign = if self.im.is_negative() { "-" } else { "+" };
                format!("({re} {sign} {im})")
            }
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_factor())
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero; use [`GaussianRational::inv`] for a checked inverse.
    fn div(self, rhs: Self) -> GaussianRational {
        let inv = rhs.inv().expect("division of Gaussian rational by zero");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: Self) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let z = GaussianRational::from_int(1) + GaussianRational::i();
        let inv = z.inv().unwrap();
        assert_eq!(&z * &inv, GaussianRational::one());
        assert_eq!(
            inv,
            GaussianRational::new(
                BigRational::new(1.into(), 2.into()),
                BigRational::new((-1).into(), 2.into())
            )
        );
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn renders_factors() {
        assert_eq!(GaussianRational::from_ratio(3, 2).render_factor(), "(3/2)");
        assert_eq!((-GaussianRational::i()).render_factor(), "-I");
        let z = GaussianRational::from_int(1) - GaussianRational::i().scale_int(&BigInt::from(2));
        assert_eq!(z.render_factor(), "(1 - 2*I)");
    }
}
