//! Real-zero counts of Jacobi polynomials on (−1,1), (−∞,−1) and (1,∞).
//!
//! Two independent routes: the closed-form Hilbert–Klein sign conditions, and
//! exact Sturm sequences over the rationals.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{half, ri, rising_factorial, sign, Poly, Rational};

/// End point of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

impl Bound {
    pub fn at(x: Rational) -> Self {
        Bound::At(x)
    }
}

/// Zero counts of a polynomial in `y`, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroCensus {
    /// Zeros in the open interval (−1, 1).
    pub n_inside: usize,
    /// Zeros in (−∞, −1).
    pub n_left: usize,
    /// Zeros in (1, ∞).
    pub n_right: usize,
    pub at_minus_one: bool,
    pub at_plus_one: bool,
    pub mult_minus_one: usize,
    pub mult_plus_one: usize,
    pub complex_pairs: usize,
    pub degree: usize,
}

impl ZeroCensus {
    /// Degree accounting: real counts, end points and complex pairs add up.
    pub fn is_consistent(&self) -> bool {
        self.n_inside + self.n_left + self.n_right + self.mult_minus_one + self.mult_plus_one
            + 2 * self.complex_pairs
            == self.degree
    }
}

/// Membership in the three nodeless classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodelessClass {
    /// No zeros inside (−1, 1).
    pub j_i: bool,
    /// No zeros in (−∞, −1).
    pub j_ii: bool,
    /// No zeros in (1, ∞).
    pub j_iii: bool,
}

fn sign_at(p: &Poly, x: &Bound) -> i32 {
    match x {
        Bound::At(v) => sign(&p.eval(v)),
        Bound::PosInf => sign(&p.leading()),
        Bound::NegInf => {
            let s = sign(&p.leading());
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = alloc::vec![p.clone(), p.deriv()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = -chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn variations(chain: &[Poly], x: &Bound) -> usize {
    let mut last = 0;
    let mut v = 0;
    for q in chain {
        let s = sign_at(q, x);
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Distinct real roots of a square-free `p` in the open interval `(a, b)`.
fn distinct_roots_open(p: &Poly, a: &Bound, b: &Bound) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    let va = variations(&chain, a);
    let vb = variations(&chain, b);
    let b_root = matches!(b, Bound::At(v) if p.eval(v).is_zero());
    va - vb - usize::from(b_root)
}

/// Real roots of `p` in the open interval `(a, b)`, counted with multiplicity.
///
/// Uses the gcd tower `p, gcd(p,p'), ...`: a root of multiplicity r is a
/// simple root of the square-free parts of the first r members.
pub fn count_roots_in(p: &Poly, a: &Bound, b: &Bound) -> usize {
    assert!(!p.is_zero(), "zero polynomial has no root census");
    let mut total = 0;
    let mut g = p.clone();
    while g.degree().unwrap_or(0) > 0 {
        total += distinct_roots_open(&g.square_free(), a, b);
        g = g.gcd(&g.deriv());
    }
    total
}

/// All real roots of `p`, with multiplicity.
pub fn count_real_roots(p: &Poly) -> usize {
    count_roots_in(p, &Bound::NegInf, &Bound::PosInf)
}

/// Exact census of a polynomial in `y` by Sturm sequences.
pub fn sturm_census(p: &Poly) -> ZeroCensus {
    let m1 = ri(-1);
    let p1 = ri(1);
    let mult_minus_one = p.root_multiplicity(&m1);
    let mult_plus_one = p.root_multiplicity(&p1);
    let n_inside = count_roots_in(p, &Bound::At(m1.clone()), &Bound::At(p1.clone()));
    let n_left = count_roots_in(p, &Bound::NegInf, &Bound::At(m1));
    let n_right = count_roots_in(p, &Bound::At(p1), &Bound::PosInf);
    let degree = p.degree().unwrap_or(0);
    let real = n_inside + n_left + n_right + mult_minus_one + mult_plus_one;
    ZeroCensus {
        n_inside,
        n_left,
        n_right,
        at_minus_one: mult_minus_one > 0,
        at_plus_one: mult_plus_one > 0,
        mult_minus_one,
        mult_plus_one,
        complex_pairs: (degree - real) / 2,
        degree,
    }
}

/// The three auxiliary quantities of the Hilbert–Klein formulas.
pub fn u_values(lambda: &Rational, mu: &Rational, m: u32) -> (Rational, Rational, Rational) {
    let u1 = u1(lambda, mu, m);
    let u2 = u2(lambda, mu, m);
    let u3 = u2_of(mu, lambda, m);
    (u1, u2, u3)
}

fn u1(lambda: &Rational, mu: &Rational, m: u32) -> Rational {
    let s = (ri(2 * m as i64) + lambda + mu + ri(1)).abs();
    (s - lambda.abs() - mu.abs() + ri(1)) * half()
}

fn u2(lambda: &Rational, mu: &Rational, m: u32) -> Rational {
    u2_of(lambda, mu, m)
}

fn u2_of(lambda: &Rational, mu: &Rational, m: u32) -> Rational {
    let s = (ri(2 * m as i64) + lambda + mu + ri(1)).abs();
    (-s + lambda.abs() - mu.abs() + ri(1)) * half()
}

/// Closed-form nodeless classes of the Jacobi polynomial with exponent
/// difference `lambda` at `y = 1` and `mu` at `y = -1`, i.e. of
/// `jacobi_poly(m, lambda, mu)`.
pub fn analytic_census(lambda: &Rational, mu: &Rational, m: u32) -> Result<NodelessClass> {
    let one = ri(1);
    let rl = rising_factorial(&(lambda + &one), m);
    let rm = rising_factorial(&(mu + &one), m);
    let rs = rising_factorial(&(lambda + mu + ri(m as i64 + 1)), m);
    if rl.is_zero() || rm.is_zero() || rs.is_zero() {
        return Err(Error::DegenerateIndex);
    }
    let (u1, u2, u3) = u_values(lambda, mu, m);
    let parity = if m.is_multiple_of(2) { one.clone() } else { -one.clone() };
    Ok(NodelessClass {
        j_i: u1 <= one && (parity * &rl * &rm).is_positive(),
        j_ii: u2 <= one && (&rs * &rm).is_positive(),
        j_iii: u3 <= one && (&rs * &rl).is_positive(),
    })
}

/// Classes read off an exact census.
pub fn census_class(c: &ZeroCensus) -> NodelessClass {
    NodelessClass { j_i: c.n_inside == 0, j_ii: c.n_left == 0, j_iii: c.n_right == 0 }
}

/// Analytic and Sturm classes of `jacobi_poly(m, lambda, mu)`, or `None`
/// when a rising factorial vanishes.
pub fn census_point(lambda: &Rational, mu: &Rational, m: u32) -> Option<(NodelessClass, NodelessClass)> {
    let analytic = analytic_census(lambda, mu, m).ok()?;
    let exact = census_class(&sturm_census(&crate::exactpoly::jacobi_poly(m, lambda, mu)));
    Some((analytic, exact))
}

/// Half-integer grid `-9/2, -4, ..., 9/2`.
pub fn half_integer_grid() -> Vec<Rational> {
    (-9..=9).map(|k| Rational::new(k.into(), 2.into())).collect()
}

/// Level `v` is a bound state of the hyperbolic well: `2v + 1 < mu0 - lambda0`.
pub fn romanovsky_admissible(lambda0: &Rational, mu0: &Rational, v: u32) -> bool {
    ri(2 * v as i64 + 1) < mu0 - lambda0
}

/// Even orders `2 <= m < min(lambda0, mu0)` of nodeless type-d seeds.
pub fn type_d_even_orders(lambda0: &Rational, mu0: &Rational) -> Vec<u32> {
    let cap = if lambda0 < mu0 { lambda0 } else { mu0 };
    (1..)
        .map(|k| 2 * k)
        .take_while(|&m| &ri(m as i64) < cap)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{jacobi_poly, rat};

    #[test]
    fn u_examples() {
        assert_eq!(u_values(&ri(0), &ri(0), 2).0, ri(3));
        assert_eq!(u_values(&rat(-7, 2), &rat(-5, 2), 2).0, ri(-2));
        assert_eq!(u_values(&ri(-5), &ri(2), 1).1, ri(2));
    }

    #[test]
    fn simple_censuses() {
        let c = sturm_census(&Poly::new(alloc::vec![rat(-1, 4), ri(0), ri(1)]));
        assert_eq!((c.n_inside, c.n_left, c.n_right), (2, 0, 0));
        let c = sturm_census(&Poly::from_ints(&[-4, 0, 1]));
        assert_eq!((c.n_inside, c.n_left, c.n_right), (0, 1, 1));
        assert!(c.is_consistent());
    }

    #[test]
    fn multiplicity_and_endpoints() {
        let p = &(&Poly::root_factor(&ri(1)).pow(2) * &Poly::root_factor(&rat(1, 3)).pow(3))
            * &Poly::from_ints(&[1, 0, 1]);
        let c = sturm_census(&p);
        assert_eq!((c.n_inside, c.mult_plus_one, c.complex_pairs), (3, 2, 1));
        assert!(c.is_consistent());
    }

    #[test]
    fn legendre_classes() {
        let k = analytic_census(&ri(0), &ri(0), 2).unwrap();
        assert_eq!((k.j_i, k.j_ii, k.j_iii), (false, true, true));
    }

    #[test]
    fn romanovsky_regime_single_left_zero() {
        let (l, m) = (ri(-6), rat(3, 2));
        let k = analytic_census(&l, &m, 1).unwrap();
        assert!(k.j_i && k.j_iii && !k.j_ii);
        let c = sturm_census(&jacobi_poly(1, &l, &m));
        assert_eq!((c.n_inside, c.n_left, c.n_right), (0, 1, 0));
    }

    #[test]
    fn type_d_orders() {
        assert_eq!(type_d_even_orders(&rat(5, 2), &rat(7, 2)), alloc::vec![2]);
        assert!(type_d_even_orders(&rat(1, 2), &ri(9)).is_empty());
        assert_eq!(type_d_even_orders(&rat(13, 2), &rat(13, 2)), alloc::vec![2, 4, 6]);
    }

    #[test]
    fn grid_point_agrees() {
        assert_eq!(half_integer_grid().len(), 19);
        let (a, e) = census_point(&rat(-7, 2), &rat(3, 2), 3).unwrap();
        assert_eq!(a, e);
        assert!(census_point(&ri(-1), &ri(2), 2).is_none());
    }

    #[test]
    fn romanovsky_examples() {
        assert!(romanovsky_admissible(&rat(3, 2), &rat(13, 2), 1));
        assert!(!romanovsky_admissible(&rat(3, 2), &rat(13, 2), 2));
        assert!(!romanovsky_admissible(&ri(2), &ri(3), 0));
    }
}
