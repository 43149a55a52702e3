use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gaussian::GaussianRational;
use super::poly::{ParamMonomial, ParamPoly};
use super::CoeffError;

/// Exact element of Q(i)(lam, g).
///
/// Canonical form: `gcd(num, den) = 1`, `den` has leading coefficient one
/// under graded-lex with `lam > g`, and zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: ParamPoly,
    den: ParamPoly,
}

/// The four field operations accepted by [`ParamScalar::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl ParamScalar {
    pub fn zero() -> Self {
        Self {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(ParamPoly::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_poly(ParamPoly::from(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(n, d))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::constant(GaussianRational::real(r))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(ParamPoly::constant(c))
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        Self {
            num,
            den: ParamPoly::one(),
        }
    }

    pub fn lam() -> Self {
        Self::from_poly(ParamPoly::lam())
    }

    pub fn g() -> Self {
        Self::from_poly(ParamPoly::g())
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    /// `c * lam^a * g^b` with integer `c`.
    pub fn monomial(c: i64, lam: u32, g: u32) -> Self {
        Self::from_poly(ParamPoly::term(
            GaussianRational::from_int(c),
            ParamMonomial::new(lam, g),
        ))
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            if c.is_one() {
                return Self { num, den };
            }
            let inv = c.inv().expect("nonzero denominator");
            return Self {
                num: num.scale(&inv),
                den: ParamPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().expect("nonzero leading coefficient");
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a constant of Q(i), if it has no parameter dependence.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.den.is_one() {
            self.num.as_constant().cloned()
        } else {
            None
        }
    }

    /// Denominator is a bare monomial `lam^a g^b`.
    fn monomial_den(&self) -> Option<ParamMonomial> {
        self.den
            .as_single_term()
            .filter(|(_, c)| c.is_one())
            .map(|(m, _)| *m)
    }

    pub fn arith(a: &Self, b: &Self, op: ArithOp) -> Result<Self, CoeffError> {
        match op {
            ArithOp::Add => Ok(a + b),
            ArithOp::Sub => Ok(a - b),
            ArithOp::Mul => Ok(a * b),
            ArithOp::Div => a.checked_div(b),
        }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() || self.is_zero() {
            return Self::zero();
        }
        // a nonzero integer factor cannot share a non-constant factor with den
        Self {
            num: self.num.scale_int(k),
            den: self.den.clone(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.scale_int(&BigInt::from(k))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Applies `i -> -i`; `lam` and `g` are real.
    pub fn conjugate(&self) -> Self {
        Self::normalized(self.num.conj(), self.den.conj())
    }

    /// Exact substitution of rational values for `lam` and `g`.
    pub fn evaluate(&self, lam: &BigRational, g: &BigRational) -> Result<GaussianRational, CoeffError> {
        let d = self.den.evaluate(lam, g);
        if d.is_zero() {
            return Err(CoeffError::Pole {
                lam: lam.to_string(),
                g: g.to_string(),
            });
        }
        Ok(&self.num.evaluate(lam, g) / &d)
    }

    /// Text form in the expression grammar, e.g. `(3/2)*lam^2*g - I*g^3`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let num = if self.num.len() > 1 {
            format!("({})", self.num.render())
        } else {
            self.num.render()
        };
        format!("{}/({})", num, self.den.render())
    }

    /// Rendering that can be followed by `*`: single terms as-is, anything else
    /// parenthesised. Returns the sign separately when the value is a single
    /// negative term, so callers can emit ` - `.
    pub fn render_factor(&self) -> (bool, String) {
        if self.den.is_one() {
            if let Some((m, c)) = self.num.as_single_term() {
                let neg = c.is_negative_like();
                let abs = if neg {
                    ParamPoly::term(-c, *m)
                } else {
                    ParamPoly::term(c.clone(), *m)
                };
                return (neg, abs.render());
            }
        }
        (false, format!("({})", self.render()))
    }

    /// True when `render_factor` already produced an atom that could be
    /// dropped in front of a monomial (exactly one).
    pub fn is_unit_factor(&self) -> bool {
        self.is_one()
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Self::normalized(self.num.add(&rhs.num), self.den.clone());
        }
        if let (Some(da), Some(db)) = (self.monomial_den(), rhs.monomial_den()) {
            let l = ParamPoly::monomial_lcm(&da, &db);
            let fa = ParamMonomial::new(l.lam - da.lam, l.g - da.g);
            let fb = ParamMonomial::new(l.lam - db.lam, l.g - db.g);
            let num = self.num.mul_monomial(&fa).add(&rhs.num.mul_monomial(&fb));
            return Self::normalized(num, ParamPoly::one_monomial(l));
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&rhs.den))
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        if let Some(c) = self.as_constant() {
            return Self {
                num: rhs.num.scale(&c),
                den: rhs.den.clone(),
            };
        }
        if let Some(c) = rhs.as_constant() {
            return Self {
                num: self.num.scale(&c),
                den: self.den.clone(),
            };
        }
        Self::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<GaussianRational> for ParamScalar {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: Self) -> ParamScalar {
        self.add_impl(rhs)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: Self) -> ParamScalar {
        self.add_impl(&-rhs)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: Self) -> ParamScalar {
        self.mul_impl(rhs)
    }
}

impl Div for &ParamScalar {
    type Output = ParamScalar;
    /// Panics on a zero divisor; see [`ParamScalar::checked_div`].
    fn div(self, rhs: Self) -> ParamScalar {
        self.checked_div(rhs).expect("ParamScalar division by zero")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: Self) -> ParamScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: &ParamScalar) -> ParamScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: ParamScalar) -> ParamScalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, rhs: &ParamScalar) {
        *self = self.add_impl(rhs);
    }
}

impl SubAssign<&ParamScalar> for ParamScalar {
    fn sub_assign(&mut self, rhs: &ParamScalar) {
        *self = self.add_impl(&-rhs);
    }
}

impl std::iter::Sum for ParamScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> ParamScalar {
        ParamScalar::lam()
    }
    fn g() -> ParamScalar {
        ParamScalar::g()
    }
    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = &lam() / &g();
        let b = &g() / &lam();
        assert!((a * b).is_one());
    }

    #[test]
    fn halves_add_up() {
        let half = &ParamScalar::one() / &lam().scale_i64(2);
        assert_eq!(&half + &half, &ParamScalar::one() / &lam());
    }

    #[test]
    fn difference_of_squares_reduces() {
        let a = &(&lam() * &lam()) - &(&g() * &g());
        let b = &lam() - &g();
        assert_eq!(&a / &b, &lam() + &g());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = ParamScalar::arith(&lam(), &ParamScalar::zero(), ArithOp::Div).unwrap_err();
        assert_eq!(err, CoeffError::DivisionByZero);
        assert!(ParamScalar::new(ParamPoly::one(), ParamPoly::zero()).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let il = &ParamScalar::i() * &lam();
        assert_eq!(il.conjugate(), -&il);
        let r = &ParamScalar::from_int(3) / &g().scale_i64(2);
        assert_eq!(r.conjugate(), r);
        let c = &(&ParamScalar::one() + &ParamScalar::i()) * &g().pow(2);
        let cc = &(&ParamScalar::one() - &ParamScalar::i()) * &g().pow(2);
        assert_eq!(c.conjugate(), cc);
    }

    #[test]
    fn evaluation_examples() {
        let a = &lam().pow(2) * &g();
        assert_eq!(a.evaluate(&q(2, 1), &q(1, 1)).unwrap(), GaussianRational::from_int(4));
        let b = &ParamScalar::one() / &lam().scale_i64(2);
        assert_eq!(b.evaluate(&q(1, 2), &q(1, 4)).unwrap(), GaussianRational::one());
        let c = &ParamScalar::one() / &(&lam() - &g());
        assert!(matches!(c.evaluate(&q(1, 1), &q(1, 1)), Err(CoeffError::Pole { .. })));
    }

    #[test]
    fn denominator_is_monic() {
        let x = &lam() / &(&lam().scale_i64(3) + &g());
        assert!(x.denominator().leading_coeff().is_one());
        assert_eq!(x.render(), "(1/3)*lam/(lam + (1/3)*g)");
    }

    #[test]
    fn render_example() {
        let x = &(&ParamScalar::from_ratio(3, 2) * &lam().pow(2)) * &g();
        let y = &ParamScalar::i() * &g().pow(3);
        assert_eq!((&x - &y).render(), "(3/2)*lam^2*g - I*g^3");
    }
}
