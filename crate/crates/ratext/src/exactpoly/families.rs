//! Classical polynomial families with rational indexes and their ladder identities.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{binomial, factorial, half, ri, rising_factorial, Rational};
use crate::error::{Error, Result};

/// Jacobi polynomial `P_m^{(alpha,beta)}(y)` for arbitrary rational indexes.
///
/// Defined by the explicit sum
/// `sum_s C(m+alpha, m-s) C(m+beta, s) ((y-1)/2)^s ((y+1)/2)^(m-s)`
/// with generalized binomials, so degenerate indexes give the lower-degree
/// polynomial instead of failing. `alpha` is the exponent at `y = 1`, `beta`
/// the one at `y = -1`.
pub fn jacobi_poly(m: u32, alpha: &Rational, beta: &Rational) -> Poly {
    let mr = ri(m as i64);
    let ym = Poly::linear(half(), -half());
    let yp = Poly::linear(half(), half());
    let mut acc = Poly::zero();
    for s in 0..=m {
        let c = binomial(&(&mr + alpha), m - s) * binomial(&(&mr + beta), s);
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&ym.pow(s) * &yp.pow(m - s)).scale(&c);
    }
    acc
}

/// Leading coefficient of `jacobi_poly(m, alpha, beta)`: `(alpha+beta+m+1)_m / (m! 2^m)`.
pub fn jacobi_leading(m: u32, alpha: &Rational, beta: &Rational) -> Rational {
    let two_m = (0..m).fold(Rational::one(), |a, _| a * ri(2));
    rising_factorial(&(alpha + beta + ri(m as i64 + 1)), m) / (factorial(m) * two_m)
}

/// Generalized Laguerre polynomial `L_m^{(alpha)}(x)`.
pub fn laguerre_poly(m: u32, alpha: &Rational) -> Poly {
    let mr = ri(m as i64);
    Poly::new(
        (0..=m)
            .map(|k| {
                let s = if k % 2 == 0 { ri(1) } else { ri(-1) };
                s * binomial(&(&mr + alpha), m - k) / factorial(k)
            })
            .collect(),
    )
}

/// Laguerre polynomial with the convention `L_{-1} = 0`.
pub fn laguerre_or_zero(m: i64, alpha: &Rational) -> Poly {
    if m < 0 {
        Poly::zero()
    } else {
        laguerre_poly(m as u32, alpha)
    }
}

/// Terminating Gauss series `F(-m, b; c; z)`.
pub fn hypergeom_trunc(m: u32, b: &Rational, c: &Rational) -> Result<Poly> {
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for k in 0..m {
        let kr = ri(k as i64);
        let ck = c + &kr;
        if ck.is_zero() {
            return Err(Error::PoleInC(c.to_string()));
        }
        term = term * (ri(k as i64) - ri(m as i64)) * (b + &kr) / (ck * (&kr + ri(1)));
        coeffs.push(term.clone());
    }
    Ok(Poly::new(coeffs))
}

/// The four first-order ladder operators acting on Jacobi polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    /// `(1-y) d/dy + mu`, in `y`.
    A,
    /// `(eta-1) d/deta - lambda`, in `eta = -y`.
    B,
    /// `d/dy`.
    C,
    /// `((1-y^2) d/dy + lambda (y-1) + mu (y+1)) / 2`, in `y`.
    D,
}

/// Apply a ladder operator to `p`, given in the operator's own variable.
pub fn apply_ladder(kind: LadderKind, lambda: &Rational, mu: &Rational, p: &Poly) -> Poly {
    let dp = p.deriv();
    match kind {
        LadderKind::A => &(&Poly::from_ints(&[1, -1]) * &dp) + &p.scale(mu),
        LadderKind::B => &(&Poly::from_ints(&[-1, 1]) * &dp) - &p.scale(lambda),
        LadderKind::C => dp,
        LadderKind::D => {
            let w = Poly::linear(lambda + mu, mu - lambda);
            (&(&Poly::from_ints(&[1, 0, -1]) * &dp) + &(&w * p)).scale(&half())
        }
    }
}

/// Generalized-Laguerre shift relations checked as exact polynomial identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlShift {
    /// `L_n'^{(a)} = -L_{n-1}^{(a+1)}`.
    Fwd,
    /// `x L_n'^{(a)} + (a - x) L_n^{(a)} = (n+1) L_{n+1}^{(a-1)}`.
    BwdE3,
    /// `x L_n'^{(a)} + a L_n^{(a)} = (n+a) L_n^{(a-1)}`.
    Combo415,
    /// `L_n'^{(a)} - L_n^{(a)} = -L_n^{(a+1)}`.
    Combo416,
}

/// Both sides of a shift relation, `(lhs, rhs)`.
pub fn gl_shift_sides(kind: GlShift, n: u32, alpha: &Rational) -> (Poly, Poly) {
    let l = laguerre_poly(n, alpha);
    let dl = l.deriv();
    let a1 = alpha + ri(1);
    let am1 = alpha - ri(1);
    let nr = ri(n as i64);
    match kind {
        GlShift::Fwd => (dl, -laguerre_or_zero(n as i64 - 1, &a1)),
        GlShift::BwdE3 => (
            &(&Poly::x() * &dl) + &(&Poly::linear(ri(-1), alpha.clone()) * &l),
            laguerre_poly(n + 1, &am1).scale(&(nr + ri(1))),
        ),
        GlShift::Combo415 => (
            &(&Poly::x() * &dl) + &l.scale(alpha),
            laguerre_poly(n, &am1).scale(&(nr + alpha)),
        ),
        GlShift::Combo416 => (&dl - &l, -laguerre_poly(n, &a1)),
    }
}

pub fn gl_shift_check(kind: GlShift, n: u32, alpha: &Rational) -> bool {
    let (l, r) = gl_shift_sides(kind, n, alpha);
    l == r
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::exactpoly::rational::rat;

    #[test]
    fn jacobi_small_orders() {
        let (a, b) = (rat(3, 7), rat(-5, 2));
        assert_eq!(jacobi_poly(0, &a, &b), Poly::one());
        let expect = Poly::linear((&a + &b + ri(2)) / ri(2), (&a - &b) / ri(2));
        assert_eq!(jacobi_poly(1, &a, &b), expect);
    }

    #[test]
    fn legendre_p2() {
        assert_eq!(jacobi_poly(2, &ri(0), &ri(0)), Poly::new(vec![rat(-1, 2), ri(0), rat(3, 2)]));
    }

    #[test]
    fn laguerre_m2_closed_form() {
        let a = rat(5, 3);
        let expect = Poly::new(vec![
            (&a + ri(1)) * (&a + ri(2)) / ri(2),
            -(&a + ri(2)),
            rat(1, 2),
        ]);
        assert_eq!(laguerre_poly(2, &a), expect);
        assert_eq!(laguerre_poly(1, &a), Poly::linear(ri(-1), &a + ri(1)));
    }

    #[test]
    fn hypergeom_low_orders() {
        let (b, c) = (rat(7, 2), rat(-1, 3));
        assert_eq!(hypergeom_trunc(0, &b, &c).unwrap(), Poly::one());
        assert_eq!(hypergeom_trunc(1, &b, &c).unwrap(), Poly::linear(-(&b / &c), ri(1)));
        assert!(matches!(hypergeom_trunc(3, &b, &ri(-1)), Err(Error::PoleInC(_))));
        assert!(hypergeom_trunc(1, &b, &ri(-1)).is_ok());
    }

    #[test]
    fn ladder_examples() {
        let (l, m) = (rat(2, 1), rat(3, 1));
        let p1 = jacobi_poly(1, &m, &l);
        assert_eq!(apply_ladder(LadderKind::C, &l, &m, &p1), Poly::constant((&l + &m + ri(2)) / ri(2)));
        let lhs = apply_ladder(LadderKind::A, &l, &m, &jacobi_poly(1, &ri(-3), &ri(2)));
        assert_eq!(lhs, jacobi_poly(1, &ri(-4), &ri(3)).scale(&ri(2)));
        let d0 = apply_ladder(LadderKind::D, &l, &m, &Poly::one());
        assert_eq!(d0, Poly::linear((&l + &m) / ri(2), (&m - &l) / ri(2)));
    }

    #[test]
    fn shift_examples() {
        assert!(gl_shift_check(GlShift::Combo415, 1, &ri(2)));
        assert!(gl_shift_check(GlShift::Combo416, 0, &rat(9, 4)));
        assert!(gl_shift_check(GlShift::Combo416, 2, &rat(-5, 2)));
    }
}
