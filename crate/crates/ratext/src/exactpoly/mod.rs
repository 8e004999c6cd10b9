//! Exact rational scalars, polynomials and rational functions, plus the
//! classical Jacobi, Laguerre and Gauss families used everywhere else.
//!
//! Variable conventions: `z` on (0,1), `y = 2z - 1`, `eta = 1 - 2z`, and
//! `zeta` for the confluent (isotonic) variable.

mod families;
mod poly;
mod ratfn;
mod rational;

pub use families::{
    apply_ladder, gl_shift_check, gl_shift_sides, hypergeom_trunc, jacobi_leading, jacobi_poly,
    laguerre_or_zero, laguerre_poly, GlShift, LadderKind,
};
pub use poly::Poly;
pub use ratfn::RationalFn;
pub use rational::{
    as_nonneg_int, binomial, factorial, falling_factorial, half, is_int, powi, rat, ri,
    rising_factorial, sign, to_f64, Rational,
};

/// Rewrite a polynomial in `y = 2z - 1` as a polynomial in `z`.
pub fn y_to_z(p: &Poly) -> Poly {
    p.compose_affine(&ri(2), &ri(-1))
}

/// Rewrite a polynomial in `z` as a polynomial in `y`.
pub fn z_to_y(p: &Poly) -> Poly {
    p.compose_affine(&half(), &half())
}

/// Rewrite a polynomial in `eta = 1 - 2z` as a polynomial in `z`.
pub fn eta_to_z(p: &Poly) -> Poly {
    p.compose_affine(&ri(-2), &ri(1))
}

/// Rewrite a polynomial in `y` as one in `eta = -y`.
pub fn y_to_eta(p: &Poly) -> Poly {
    p.compose_affine(&ri(-1), &ri(0))
}
