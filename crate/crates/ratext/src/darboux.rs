//! Canonical Darboux transformations of the three families: partner
//! reference PFs, their three partial decompositions, extended potentials,
//! superpotentials and the Quesne parameterization of the linear case.
//!
//! Units: the density is `1/(4 xi (1 - iota xi))` (the TP coefficient set to
//! one), so potentials are `d*V` and the isotonic variable is the scaled
//! `zeta`. The hyperbolic well uses the same Bose invariant on `z < 0`, where
//! the density is negative.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{half, ri, Poly, Rational, RationalFn};
use crate::seedcat::{Family, RayIds, SeedSolution, SeedType};
use crate::zerocensus::count_roots_in;

/// Energy-independent part of a Bose invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferencePF {
    pub value: RationalFn,
    pub family: Family,
    /// Exponent differences at 0 and at the second singular point
    /// (`nu0 = 1` in scaled units for the isotonic case).
    pub exponents: (Rational, Rational),
    /// Extra pole factors with their order; roots of `pi` are kept unfactored.
    pub extra_poles: Vec<(Poly, u32)>,
}

/// `d*V` of a Darboux partner as a rational function of the family variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedPotential {
    pub value: RationalFn,
    pub base: RayIds,
    pub seed: SeedSolution,
}

/// The three partial decompositions of a partner reference PF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decompositions {
    /// Numerator over the root poles `-2 sum 1/(xi - xi_r)^2`.
    pub o_m_o: Poly,
    /// Quesne form, paired with `q`.
    pub o_m_down: Poly,
    /// Gauge form, paired with `q_check`.
    pub o_m_check: Poly,
    /// `pi''/pi - pi'^2/pi^2`.
    pub q: RationalFn,
    /// `pi''/(2 pi) - pi'^2/pi^2`.
    pub q_check: RationalFn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

fn rf(p: Poly) -> RationalFn {
    RationalFn::from_poly(p)
}

fn c(x: Rational) -> RationalFn {
    RationalFn::constant(x)
}

/// `a / xi^k`.
fn at_zero(a: Rational, k: u32) -> RationalFn {
    RationalFn::pole(a, &ri(0), k)
}

/// `a / (1 - xi)^k`.
fn at_one(a: Rational, k: u32) -> RationalFn {
    let s = if k.is_multiple_of(2) { a } else { -a };
    RationalFn::pole(s, &ri(1), k)
}

fn iota_of(family: Family) -> u8 {
    family.iota()
}

/// Tangent polynomial `xi (1 - iota xi)`.
pub fn tangent_poly(family: Family) -> Poly {
    match iota_of(family) {
        1 => Poly::from_ints(&[0, 1, -1]),
        _ => Poly::x(),
    }
}

/// Logarithmic derivative of the density, `-1/xi + iota/(1 - xi)`.
pub fn ld_density(family: Family) -> RationalFn {
    let base = at_zero(ri(-1), 1);
    match iota_of(family) {
        1 => &base + &at_one(ri(1), 1),
        _ => base,
    }
}

/// Reference PF of the unextended problem with exponent differences
/// `lambda` and `second` (`mu`; ignored for the isotonic oscillator).
pub fn base_reference_pf(family: Family, lambda: &Rational, second: &Rational) -> RationalFn {
    let one = ri(1);
    let q4 = half() * half();
    let l2 = lambda * lambda;
    let t0 = at_zero((&one - &l2) * &q4, 2);
    match iota_of(family) {
        1 => {
            let m2 = second * second;
            let t1 = at_one((&one - &m2) * &q4, 2);
            let cross = RationalFn::new(Poly::constant((&one - &l2 - &m2) * &q4), tangent_poly(family));
            &(&t0 + &t1) + &cross
        }
        _ => &t0 - &c(q4),
    }
}

/// `pi''/pi - pi'^2/pi^2`.
pub fn q_term(pi: &Poly) -> RationalFn {
    let d = pi.deriv();
    let dd = d.deriv();
    RationalFn::new(&(&dd * pi) - &(&d * &d), pi * pi)
}

/// `pi''/(2 pi) - pi'^2/pi^2`.
pub fn q_check_term(pi: &Poly) -> RationalFn {
    let d = pi.deriv();
    let dd = d.deriv();
    RationalFn::new(&(&dd * pi).scale(&half()) - &(&d * &d), pi * pi)
}

/// `|lambda0 + sigma0|` and `|mu0 + sigma1|` (or `nu0`, unchanged, for the
/// isotonic oscillator).
pub fn suzko_partner_exponents(seed: &SeedSolution) -> (Rational, Rational) {
    seed.partner_exponents()
}

fn partner_second_scaled(seed: &SeedSolution) -> Rational {
    match seed.family() {
        Family::Isotonic => ri(1),
        _ => seed.partner_exponents().1,
    }
}

/// Closed form of the partner reference PF.
///
/// `iota = 1`: `I0[z|lam', mu'] + (1-2z) pi'/(z(1-z) pi) + 2Q`;
/// isotonic: `I0[zeta|lam'] - sigma1/(2 zeta) + pi'/(zeta pi) + 2Q`.
pub fn partner_reference_pf(seed: &SeedSolution) -> ReferencePF {
    let family = seed.family();
    let (lp, sp) = seed.partner_exponents();
    let pi = &seed.pi;
    let tp = tangent_poly(family);
    let base = base_reference_pf(family, &lp, &sp);
    let dlog = match iota_of(family) {
        1 => RationalFn::new(&Poly::from_ints(&[1, -2]) * &pi.deriv(), &tp * pi),
        _ => RationalFn::new(pi.deriv(), &tp * pi),
    };
    let shift = match family {
        Family::Isotonic => at_zero(-seed.nu_signed() * half(), 1),
        _ => RationalFn::zero(),
    };
    let value = &(&(&base + &dlog) + &shift) + &q_term(pi).scale(&ri(2));
    let extra_poles = if pi.degree().unwrap_or(0) > 0 { alloc::vec![(pi.clone(), 2)] } else { Vec::new() };
    ReferencePF { value, family, exponents: (lp, partner_second_scaled(seed)), extra_poles }
}

/// Forward (`ld psi`) or reverse (`ld *psi = -ld psi`) superpotential without
/// the `xi'` factor:
/// `(1 + 2 lam)/(4 xi) - iota (1 + 2 mu)/(4 (1 - xi)) - (1 - iota) nu/2 + pi'/pi`.
pub fn superpotential_logpart(seed: &SeedSolution, direction: Direction) -> RationalFn {
    let q4 = half() * half();
    let l = &seed.lam_signed;
    let mut w = at_zero((ri(1) + ri(2) * l) * &q4, 1);
    match seed.family() {
        Family::Isotonic => w = &w - &c(seed.nu_signed() * half()),
        _ => w = &w - &at_one((ri(1) + ri(2) * &seed.second_signed) * &q4, 1),
    }
    w = &w + &RationalFn::new(seed.pi.deriv(), seed.pi.clone());
    match direction {
        Direction::Forward => w,
        Direction::Reverse => -w,
    }
}

/// Partner reference PF obtained directly from the Darboux transformation in
/// root-free form: `I0 + 2 (ld psi)' - ld(density) * ld psi`.
pub fn darboux_partner_pf(seed: &SeedSolution) -> RationalFn {
    let family = seed.family();
    let base = base_reference_pf(family, &seed.ray.lambda0, &seed.ray.second);
    let w = superpotential_logpart(seed, Direction::Forward);
    &(&base + &w.deriv().scale(&ri(2))) - &(&ld_density(family) * &w)
}

/// The partner reference PF from the Darboux route equals the closed form.
pub fn b16_identity_check(seed: &SeedSolution) -> bool {
    darboux_partner_pf(seed) == partner_reference_pf(seed).value
}

/// Gauge decomposition polynomial from the seed data alone:
/// `-[4 C + (-1)^iota E] pi + 8 B pi'` with
/// `B = -(-1)^iota (lam (1 - iota xi) - nu xi)/2` and `C = -(-1)^iota lam nu / 2`.
pub fn o_check_closed_form(seed: &SeedSolution) -> Poly {
    let l = &seed.lam_signed;
    let nu = seed.nu_signed();
    let e = seed.bose_energy();
    let iota = iota_of(seed.family());
    let s = if iota == 1 { ri(-1) } else { ri(1) };
    let b = Poly::linear(-(l * ri(iota as i64)) - &nu, l.clone()).scale(&(-&s * half()));
    let cc = -&s * l * &nu * half();
    let free = -(ri(4) * cc + &s * e);
    &seed.pi.scale(&free) + &(&b * &seed.pi.deriv()).scale(&ri(8))
}

/// Build all three decomposition polynomials and both Q terms.
pub fn build_decompositions(seed: &SeedSolution) -> Decompositions {
    let pi = &seed.pi;
    let iota = iota_of(seed.family());
    let sgn = if iota == 1 { ri(-1) } else { ri(1) };
    let tp4 = tangent_poly(seed.family()).scale(&(ri(4) * &sgn));
    let o_check = o_check_closed_form(seed);
    let dd = pi.nth_deriv(2);
    let o_down = &o_check - &(&tp4 * &dd);
    // The degree-(m-2) polynomial of the root decomposition equals -pi''.
    let p_m2 = -&dd;
    let o_o = &o_check + &(&tp4 * &p_m2);
    Decompositions { o_m_o: o_o, o_m_down: o_down, o_m_check: o_check, q: q_term(pi), q_check: q_check_term(pi) }
}

/// Singular part at the end points with the partner exponents.
fn endpoint_part(seed: &SeedSolution) -> RationalFn {
    let (lp, sp) = seed.partner_exponents();
    let q4 = half() * half();
    let t0 = at_zero((ri(1) - &lp * &lp) * &q4, 2);
    match seed.family() {
        Family::Isotonic => &t0 - &c(q4),
        _ => &t0 + &at_one((ri(1) - &sp * &sp) * &q4, 2),
    }
}

/// `(-1)^iota O / (4 xi (1 - iota xi) pi)`.
fn o_part(seed: &SeedSolution, o: &Poly) -> RationalFn {
    let iota = iota_of(seed.family());
    let sgn = if iota == 1 { ri(-1) } else { ri(1) };
    RationalFn::new(o.scale(&sgn), &tangent_poly(seed.family()).scale(&ri(4)) * &seed.pi)
}

/// Reconstructions `[root form, gauge form, Quesne form]` of the partner PF.
pub fn reconstruct(seed: &SeedSolution, dec: &Decompositions) -> [RationalFn; 3] {
    let ends = endpoint_part(seed);
    // -2 sum 1/(xi - xi_r)^2 = 2 (pi pi'' - pi'^2)/pi^2.
    let roots = dec.q.scale(&ri(2));
    [
        &(&ends + &roots) + &o_part(seed, &dec.o_m_o),
        &(&ends + &o_part(seed, &dec.o_m_check)) + &dec.q_check.scale(&ri(2)),
        &(&ends + &o_part(seed, &dec.o_m_down)) + &dec.q.scale(&ri(2)),
    ]
}

/// All three decompositions reconstruct the closed-form partner PF.
pub fn decompositions_consistent(seed: &SeedSolution) -> bool {
    let target = partner_reference_pf(seed).value;
    let dec = build_decompositions(seed);
    reconstruct(seed, &dec).iter().all(|r| *r == target)
}

/// `lambda^2 + mu^2 - 1`.
pub fn o0(lambda: &Rational, mu: &Rational) -> Rational {
    lambda * lambda + mu * mu - ri(1)
}

/// Leading-coefficient chain for `iota = 1`:
/// `lc(O_down) = O0(lam', mu') + 8m` and `lc(O_check) = lc(O_down) + 4m(m-1)`.
/// Returns `None` for the isotonic family, where the chain does not apply.
pub fn leading_chain_holds(seed: &SeedSolution, dec: &Decompositions) -> Option<bool> {
    if seed.iota() != 1 {
        return None;
    }
    let (lp, mp) = seed.partner_exponents();
    let m = ri(seed.m as i64);
    let down = o0(&lp, &mp) + ri(8) * &m;
    let check = &down + ri(4) * &m * (&m - ri(1));
    let p_lead = -(&m * (&m - ri(1)));
    let p_ok = seed.m < 2 || (-seed.pi.nth_deriv(2)).leading() == p_lead;
    Some(dec.o_m_down.leading() == down && dec.o_m_check.leading() == check && p_ok && dec.o_m_o == dec.o_m_down)
}

/// Schwarzian contribution `-d{xi, x}/2` of the Liouville map.
pub fn schwarzian_term(family: Family) -> RationalFn {
    let q34 = Rational::new(3.into(), 4.into());
    match family {
        Family::Dpt => &(&at_zero(q34.clone(), 1) + &at_one(q34, 1)) - &c(ri(1)),
        Family::Hpt => &c(ri(1)) - &(&at_zero(q34.clone(), 1) + &at_one(q34, 1)),
        Family::Isotonic => at_zero(q34, 1),
    }
}

/// `d*V` for the Bose invariant `I0 + E/(4 xi (1 - iota xi))`; the sign of
/// the density flips on the hyperbolic interval.
pub fn potential_from_pf(family: Family, pf: &RationalFn) -> RationalFn {
    let tp4 = rf(tangent_poly(family).scale(&ri(4)));
    let s = if family == Family::Hpt { ri(1) } else { ri(-1) };
    &(&tp4 * pf).scale(&s) + &schwarzian_term(family)
}

/// Textbook potential: `(lam^2 - 1/4)/z + (mu^2 - 1/4)/(1 - z)` (DPT), its
/// negative (HPT, `z < 0`), `(lam^2 - 1/4)/zeta + zeta` (isotonic).
pub fn base_potential(family: Family, lambda: &Rational, second: &Rational) -> RationalFn {
    potential_from_pf(family, &base_reference_pf(family, lambda, second))
}

/// Partner potential `d*V` of a nodeless seed.
pub fn extended_potential(seed: &SeedSolution) -> Result<ExtendedPotential> {
    let (a, b) = seed.family().quantization_interval();
    if seed.pi.degree().unwrap_or(0) > 0 && count_roots_in(&seed.pi, &a, &b) > 0 {
        return Err(Error::SingularInsideInterval);
    }
    let pf = partner_reference_pf(seed);
    Ok(ExtendedPotential {
        value: potential_from_pf(seed.family(), &pf.value),
        base: seed.ray.clone(),
        seed: seed.clone(),
    })
}

/// Closed-form extension terms of a linear seed with root `r`:
/// `8 r (1-r)/(z-r)^2 + 4 (1-2r)/(z-r)` for `iota = 1` (sign flipped on the
/// hyperbolic interval), `4/(zeta-r) + 8 r/(zeta-r)^2 + 2 sigma1` for the
/// isotonic oscillator.
pub fn linear_extension_terms(seed: &SeedSolution) -> Option<RationalFn> {
    if seed.m != 1 {
        return None;
    }
    let r = -seed.pi.coeff(0);
    let one = ri(1);
    Some(match seed.family() {
        Family::Isotonic => &(&RationalFn::pole(ri(4), &r, 1) + &RationalFn::pole(ri(8) * &r, &r, 2))
            + &c(ri(2) * seed.nu_signed()),
        f => {
            let t = &RationalFn::pole(ri(8) * &r * (&one - &r), &r, 2)
                + &RationalFn::pole(ri(4) * (&one - ri(2) * &r), &r, 1);
            if f == Family::Hpt {
                -t
            } else {
                t
            }
        }
    })
}

/// Quesne's constants and the linear-case pole in `eta = 1 - 2z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuesneParams {
    pub a: Rational,
    pub b: Rational,
    pub eta1: Option<Rational>,
}

/// `2A = lam' + mu' + 1`, `2B = mu' - lam'`, `eta1 = (2A - 1)/(2B)`.
///
/// `eta1` is `None` when `B = 0`; use [`quesne_eta1`] for the error form.
pub fn quesne_param_map(ray: &RayIds, stype: SeedType) -> Result<QuesneParams> {
    if ray.family != Family::Dpt || !stype.belongs_to(Family::Dpt) {
        return Err(Error::FamilyMismatch);
    }
    let (s0, s1) = stype.signs();
    let lp = (&ray.lambda0 + ri(s0 as i64)).abs();
    let mp = (&ray.second + ri(s1 as i64)).abs();
    let a = (&lp + &mp + ri(1)) * half();
    let b = (&mp - &lp) * half();
    let eta1 = (!b.is_zero()).then(|| (ri(2) * &a - ri(1)) / (ri(2) * &b));
    Ok(QuesneParams { a, b, eta1 })
}

pub fn quesne_eta1(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero("eta1 with B = 0"));
    }
    Ok((ri(2) * a - ri(1)) / (ri(2) * b))
}

/// Factorization energy in `d = 4` units from the partner's `A`, `B`:
/// `(m - 1/2 - sigma0 B)^2` for a/b and `[sigma0 (A - 1/2) + m - 1/2]^2` for c/d.
pub fn quesne_energy(ray: &RayIds, stype: SeedType, m: u32) -> Result<Rational> {
    let p = quesne_param_map(ray, stype)?;
    let s0 = ri(stype.sigma0() as i64);
    let mh = ri(m as i64) - half();
    let base = match stype {
        SeedType::A | SeedType::B => mh - s0 * p.b,
        _ => s0 * (p.a - half()) + mh,
    };
    Ok(&base * &base)
}

/// Coefficients of the linear-case Bose invariant in `eta = 1 - 2z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuesneLinear {
    pub eta1: Rational,
    /// Residue at `eta1`.
    pub c: Rational,
    /// Constant of the `1/(1 - eta^2)` numerator.
    pub delta_d: Rational,
    /// Coefficient of `(eta - eta1)^-2`.
    pub double_pole: Rational,
}

/// Read `C`, `Delta D` and the pole data off the partner PF of a linear a/b
/// seed: `I0/4` in `eta` minus the end-point part leaves
/// `(C eta + Delta D)/(1 - eta^2) + C/(eta - eta1) - 2/(eta - eta1)^2`.
pub fn quesne_linear_coefficients(seed: &SeedSolution) -> Option<QuesneLinear> {
    if seed.family() != Family::Dpt || seed.m != 1 {
        return None;
    }
    let (lp, mp) = seed.partner_exponents();
    let q4 = half() * half();
    let q16 = &q4 * &q4;
    let ends = &(&at_zero((ri(1) - &lp * &lp) * &q16, 2) + &at_one((ri(1) - &mp * &mp) * &q16, 2))
        + &RationalFn::new(Poly::constant((ri(2) - &lp * &lp - &mp * &mp) * &q16), tangent_poly(Family::Dpt));
    let rest = &partner_reference_pf(seed).value.scale(&q4) - &ends;
    // z = (1 - eta)/2.
    let rest_eta = rest.compose_affine(&(-half()), &half());
    let z1 = -seed.pi.coeff(0);
    let eta1 = ri(1) - ri(2) * &z1;
    let f = Poly::root_factor(&eta1);
    // Double-pole coefficient and residue at eta1.
    let num = rest_eta.num();
    let den = rest_eta.den();
    let den_rest = den.div_exact(&(&f * &f))?;
    let h = RationalFn::new(num.clone(), den_rest);
    let double_pole = h.eval(&eta1)?;
    let residue = h.deriv().eval(&eta1)?;
    let regular = &rest_eta - &(&RationalFn::pole(double_pole.clone(), &eta1, 2) + &RationalFn::pole(residue.clone(), &eta1, 1));
    let one_minus_eta2 = Poly::from_ints(&[1, 0, -1]);
    let lin = regular.times_poly_exact(&one_minus_eta2)?;
    if lin.degree().unwrap_or(0) > 1 || lin.coeff(1) != residue {
        return None;
    }
    Some(QuesneLinear { eta1, c: residue, delta_d: lin.coeff(0), double_pole })
}

/// Closed forms `C = (mu'^2 - lam'^2)/(2 lam' mu')` and
/// `Delta D = (lam'^2 + mu'^2)/(2 lam' mu') - 5/4`.
pub fn quesne_closed_forms(lp: &Rational, mp: &Rational) -> (Rational, Rational) {
    let den = ri(2) * lp * mp;
    let c = (mp * mp - lp * lp) / &den;
    let d = (lp * lp + mp * mp) / &den - Rational::new(5.into(), 4.into());
    (c, d)
}

/// `z1 (1 - z1)` two ways: from the root and from `A`, `B`.
pub fn quesne_z1_product(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero("z1 product with B = 0"));
    }
    let t = ri(2) * a - ri(1);
    Ok((ri(4) * b * b - &t * &t) / (ri(16) * b * b))
}

/// Isotonic linear case in Quesne's variables: `l = lam' - 1/2`,
/// `omega = nu0`, and the unscaled root `zeta_1 / nu0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuesneIsotonic {
    pub l: Rational,
    pub omega: Rational,
    pub root_unscaled: Rational,
}

pub fn quesne_isotonic_map(seed: &SeedSolution) -> Option<QuesneIsotonic> {
    if seed.family() != Family::Isotonic || seed.m != 1 {
        return None;
    }
    let (lp, nu0) = seed.partner_exponents();
    let root = -seed.pi.coeff(0);
    Some(QuesneIsotonic { l: lp - half(), omega: nu0.clone(), root_unscaled: root / nu0 })
}

impl QuesneIsotonic {
    /// `root = -(l + 1/2)/omega`.
    pub fn consistent(&self) -> bool {
        !self.omega.is_zero() && self.root_unscaled == -(&self.l + half()) / &self.omega
    }
}
