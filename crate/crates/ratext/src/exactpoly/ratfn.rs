//! Reduced ratios of exact polynomials.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Poly;
use super::rational::Rational;

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    /// Reduces and normalizes; panics on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFn { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let n = num.div_rem(&g).0;
        let d = den.div_rem(&g).0;
        let lc = d.leading().recip();
        RationalFn { num: n.scale(&lc), den: d.scale(&lc) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFn::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RationalFn::from_poly(Poly::zero())
    }

    /// `c / (x - r)^k`.
    pub fn pole(c: Rational, r: &Rational, k: u32) -> Self {
        RationalFn::new(Poly::constant(c), Poly::root_factor(r).pow(k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn deriv(&self) -> Self {
        let n = &(&self.num.deriv() * &self.den) - &(&self.num * &self.den.deriv());
        RationalFn::new(n, &self.den * &self.den)
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn recip(&self) -> Self {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `x -> a*x + b`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        RationalFn::new(self.num.compose_affine(a, b), self.den.compose_affine(a, b))
    }

    /// Multiply by a polynomial and return the result if it is a polynomial.
    pub fn times_poly_exact(&self, p: &Poly) -> Option<Poly> {
        (&self.num * p).div_exact(&self.den)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.is_zero(), "rational function division by zero");
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalFn> for &RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{rat, ri};
    use alloc::vec;

    #[test]
    fn reduces_common_factor() {
        let f = Poly::from_roots(&[ri(2)]);
        let r = RationalFn::new(&f * &Poly::from_ints(&[1, 1]), (&f * &Poly::from_ints(&[3, 0, 2])).scale(&ri(5)));
        assert_eq!(r.den().gcd(r.num()), Poly::one());
        assert!(r.den().is_monic());
        assert_eq!(r.num(), &Poly::new(vec![rat(1, 10), rat(1, 10)]));
    }

    #[test]
    fn partial_fractions_recombine() {
        // 1/x - 1/(x-1) = -1/(x(x-1))
        let a = RationalFn::pole(ri(1), &ri(0), 1);
        let b = RationalFn::pole(ri(1), &ri(1), 1);
        let expect = RationalFn::new(Poly::constant(ri(-1)), Poly::from_roots(&[ri(0), ri(1)]));
        assert_eq!(&a - &b, expect);
    }

    #[test]
    fn derivative_of_pole() {
        let a = RationalFn::pole(ri(1), &ri(3), 1);
        assert_eq!(a.deriv(), RationalFn::pole(ri(-1), &ri(3), 2));
    }
}
