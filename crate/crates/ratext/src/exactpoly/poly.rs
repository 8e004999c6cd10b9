//! Dense univariate polynomials with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{ri, Rational};

/// Polynomial stored as ascending coefficients with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| ri(v)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::new(vec![b, a])
    }

    /// Monic `x - r`.
    pub fn root_factor(r: &Rational) -> Self {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| &acc * &Poly::root_factor(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational::to_f64(c);
        }
        acc
    }

    pub fn deriv(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * ri(k as i64))
                .collect(),
        )
    }

    pub fn nth_deriv(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.deriv())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Poly::new(c)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Composition `self(q(x))`.
    pub fn compose(&self, q: &Poly) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `self(a*x + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        self.compose(&Poly::linear(a.clone(), b.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = &r[i + dd] / &lc;
            if !t.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &t * dc;
                }
            }
            q[i] = t;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Exact quotient when `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free part, monic.
    pub fn square_free(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.deriv());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let f = Poly::root_factor(r);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&f) {
            p = q;
            k += 1;
        }
        k
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

/// Ascending-order rendering in the named variable.
pub struct PolyIn<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl Poly {
    /// Display adapter printing `var` in place of `x`.
    pub fn display_in<'a>(&'a self, var: &'a str) -> PolyIn<'a> {
        PolyIn { poly: self, var }
    }
}

impl fmt::Display for PolyIn<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{}", a)?,
                (_, true) => {}
                (_, false) => write!(f, "{}*", a)?,
            }
            match k {
                0 => {}
                1 => f.write_str(self.var)?,
                _ => write!(f, "{}^{}", self.var, k)?,
            }
        }
        Ok(())
    }
}

/// Prints in ascending order, e.g. `1 - 3/2*x + x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display_in("x"), f)
    }
}

fn zip_with(a: &Poly, b: &Poly, op: impl Fn(&Rational, &Rational) -> Rational) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let z = Rational::zero();
    Poly::new(
        (0..n)
            .map(|k| op(a.coeffs.get(k).unwrap_or(&z), b.coeffs.get(k).unwrap_or(&z)))
            .collect(),
    )
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    #[test]
    fn normalization_strips_trailing_zeros() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_roundtrip() {
        let a = Poly::from_ints(&[3, -1, 4, 1, -5]);
        let b = Poly::new(vec![rat(1, 2), ri(0), ri(3)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = Poly::from_roots(&[rat(1, 3), ri(2)]);
        let a = &f * &Poly::from_ints(&[1, 1]);
        let b = &f * &Poly::from_ints(&[-7, 0, 1]);
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn square_free_and_multiplicity() {
        let p = &Poly::root_factor(&ri(1)).pow(3) * &Poly::root_factor(&rat(-1, 2));
        assert_eq!(p.square_free(), Poly::from_roots(&[ri(1), rat(-1, 2)]));
        assert_eq!(p.root_multiplicity(&ri(1)), 3);
    }

    #[test]
    fn affine_composition() {
        // (2z-1)^2 = 4z^2 - 4z + 1
        let y2 = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(y2.compose_affine(&ri(2), &ri(-1)), Poly::from_ints(&[1, -4, 4]));
    }

    #[test]
    fn display_ascending() {
        let p = Poly::new(vec![ri(1), rat(-3, 2), ri(1)]);
        assert_eq!(alloc::format!("{}", p), "1 - 3/2*x + x^2");
    }
}
