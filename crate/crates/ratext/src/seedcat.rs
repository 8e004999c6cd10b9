//! Seed (factorization) solutions: exact energies, seed polynomials and
//! admissibility for the trigonometric (DPT) and hyperbolic (HPT)
//! Pöschl–Teller wells and the isotonic oscillator.
//!
//! A seed is `phi = xi^{(1+lam)/2} (1-xi)^{(1+mu)/2} Pi(xi)` for `iota = 1`, or
//! `phi = zeta^{(1+lam)/2} exp(-sigma1 zeta / 2) Pi(zeta)` for the isotonic
//! case, where `lam = sigma0*lambda0` and `mu = sigma1*mu0` are the signed
//! exponent differences. Energies are dimensionless: `d*eps` for
//! `iota = 1`, and `eps/nu0` for the isotonic oscillator with `zeta` scaled
//! so that `nu0 = 1`.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{DegenerateReason, Error, Result};
use crate::exactpoly::{half, hypergeom_trunc, laguerre_poly, ri, Poly, Rational};
use crate::zerocensus::{count_roots_in, type_d_even_orders, Bound};

/// The three exactly solvable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Trigonometric Pöschl–Teller, `z` in (0,1).
    Dpt,
    /// Hyperbolic Pöschl–Teller, `z` in (−∞,0).
    Hpt,
    /// Isotonic oscillator, `zeta` in (0,∞).
    Isotonic,
}

impl Family {
    /// 1 when the tangent polynomial is `xi(1-xi)`, 0 when it is `xi`.
    pub fn iota(self) -> u8 {
        match self {
            Family::Dpt | Family::Hpt => 1,
            Family::Isotonic => 0,
        }
    }

    pub fn quantization_interval(self) -> (Bound, Bound) {
        match self {
            Family::Dpt => (Bound::At(ri(0)), Bound::At(ri(1))),
            Family::Hpt => (Bound::NegInf, Bound::At(ri(0))),
            Family::Isotonic => (Bound::At(ri(0)), Bound::PosInf),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Dpt => "dpt",
            Family::Hpt => "hpt",
            Family::Isotonic => "isotonic",
        }
    }

    /// Variable name used in serialized output.
    pub fn variable(self) -> &'static str {
        match self {
            Family::Isotonic => "zeta",
            _ => "z",
        }
    }
}

/// Ray identifiers: the exponent differences of the reference problem.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RayIds {
    pub family: Family,
    pub lambda0: Rational,
    /// `mu0` for DPT/HPT, `nu0` for the isotonic oscillator.
    pub second: Rational,
    /// Tangent-polynomial coefficient `d`.
    pub d: Rational,
}

impl RayIds {
    pub fn new(family: Family, lambda0: Rational, second: Rational) -> Self {
        RayIds { family, lambda0, second, d: Rational::one() }
    }

    pub fn dpt(lambda0: Rational, mu0: Rational) -> Self {
        RayIds::new(Family::Dpt, lambda0, mu0)
    }

    pub fn hpt(lambda0: Rational, mu0: Rational) -> Self {
        RayIds::new(Family::Hpt, lambda0, mu0)
    }

    pub fn isotonic(lambda0: Rational) -> Self {
        RayIds::new(Family::Isotonic, lambda0, Rational::one())
    }

    pub fn iota(&self) -> u8 {
        self.family.iota()
    }
}

/// Seed type; sign pairs are (sign on `lambda0`, sign on the second exponent).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeedType {
    A,
    B,
    C,
    D,
    /// HPT `ã`, signs (+,+).
    TA,
    /// HPT `ã′`, signs (+,−) above the bound-state band.
    TAp,
    /// HPT `b̃`, signs (−,−) with `2m+1 < lambda0+mu0`.
    TB,
    /// HPT `b̃′`, signs (−,+); never co-exists with bound states.
    TBp,
    /// HPT `c̃`, signs (+,−): the bound states.
    TC,
    /// HPT `d̃`, signs (−,−) with `2m+1 > lambda0+mu0`.
    TD,
    /// HPT `d̃′`, signs (−,+) with `2m+1 > lambda0-mu0`.
    TDp,
}

impl SeedType {
    pub const DPT: [SeedType; 4] = [SeedType::A, SeedType::B, SeedType::C, SeedType::D];
    pub const HPT: [SeedType; 6] =
        [SeedType::TA, SeedType::TAp, SeedType::TB, SeedType::TC, SeedType::TD, SeedType::TDp];

    pub fn signs(self) -> (i32, i32) {
        match self {
            SeedType::A => (1, -1),
            SeedType::B => (-1, 1),
            SeedType::C => (1, 1),
            SeedType::D => (-1, -1),
            SeedType::TA => (1, 1),
            SeedType::TAp | SeedType::TC => (1, -1),
            SeedType::TB | SeedType::TD => (-1, -1),
            SeedType::TBp | SeedType::TDp => (-1, 1),
        }
    }

    pub fn sigma0(self) -> i32 {
        self.signs().0
    }

    pub fn sigma1(self) -> i32 {
        self.signs().1
    }

    pub fn label(self) -> &'static str {
        match self {
            SeedType::A => "a",
            SeedType::B => "b",
            SeedType::C => "c",
            SeedType::D => "d",
            SeedType::TA => "ã",
            SeedType::TAp => "ã′",
            SeedType::TB => "b̃",
            SeedType::TBp => "b̃′",
            SeedType::TC => "c̃",
            SeedType::TD => "d̃",
            SeedType::TDp => "d̃′",
        }
    }

    /// Parses `a`..`d` and the ASCII spellings `ta`, `ta'`, `tb`, `tb'`, `tc`, `td`, `td'`.
    pub fn parse(s: &str) -> Option<SeedType> {
        Some(match s {
            "a" => SeedType::A,
            "b" => SeedType::B,
            "c" => SeedType::C,
            "d" => SeedType::D,
            "ta" | "ã" => SeedType::TA,
            "ta'" | "ã′" => SeedType::TAp,
            "tb" | "b̃" => SeedType::TB,
            "tb'" | "b̃′" => SeedType::TBp,
            "tc" | "c̃" => SeedType::TC,
            "td" | "d̃" => SeedType::TD,
            "td'" | "d̃′" => SeedType::TDp,
            _ => return None,
        })
    }

    pub fn is_hpt(self) -> bool {
        !matches!(self, SeedType::A | SeedType::B | SeedType::C | SeedType::D)
    }

    pub fn belongs_to(self, family: Family) -> bool {
        self.is_hpt() == (family == Family::Hpt)
    }

    /// The DPT/isotonic letter with the same sign pair.
    pub fn plain(self) -> SeedType {
        match self.signs() {
            (1, -1) => SeedType::A,
            (-1, 1) => SeedType::B,
            (1, 1) => SeedType::C,
            _ => SeedType::D,
        }
    }
}

impl core::fmt::Display for SeedType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// A seed factorization function with its exact data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSolution {
    pub ray: RayIds,
    pub stype: SeedType,
    pub m: u32,
    /// `sigma0 * lambda0`.
    pub lam_signed: Rational,
    /// `sigma1 * mu0` (DPT/HPT) or `sigma1 * nu0` (isotonic).
    pub second_signed: Rational,
    /// Monic `Pi_m`, in `z` or scaled `zeta`.
    pub pi: Poly,
    /// Physical energy: `d*eps` for DPT/HPT, `eps/nu0` for the isotonic oscillator.
    pub energy_d: Rational,
    pub energy_shift_to_ground: Rational,
}

impl SeedSolution {
    pub fn family(&self) -> Family {
        self.ray.family
    }

    pub fn iota(&self) -> u8 {
        self.ray.iota()
    }

    /// Second signed exponent as it enters the Fuchsian equation: `mu` for
    /// `iota = 1`, the bare sign `sigma1` for the scaled isotonic variable.
    pub fn nu_signed(&self) -> Rational {
        match self.family() {
            Family::Isotonic => ri(self.stype.sigma1() as i64),
            _ => self.second_signed.clone(),
        }
    }

    /// Energy as it enters the Bose invariant `E/(4 xi (1 - iota xi))`.
    pub fn bose_energy(&self) -> Rational {
        bose_energy(&self.ray, self.stype, self.m)
    }

    /// Partner exponent differences `(|lam+1|, |mu+1|)`; `nu0` is unchanged
    /// in the isotonic case.
    pub fn partner_exponents(&self) -> (Rational, Rational) {
        let l = (&self.lam_signed + ri(1)).abs();
        match self.family() {
            Family::Isotonic => (l, self.ray.second.clone()),
            _ => (l, (&self.second_signed + ri(1)).abs()),
        }
    }
}

/// Quesne's constants of the linear-case partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuesneAB {
    pub a: Rational,
    pub b: Rational,
}

/// Outcome of all admissibility tests for one seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub susy_valid: bool,
    pub below_ground: bool,
    pub nodeless: bool,
    pub degenerate: Option<DegenerateReason>,
    pub quesne_ab: Option<QuesneAB>,
}

impl AdmissibilityReport {
    pub fn usable(&self) -> bool {
        self.susy_valid && self.nodeless && self.degenerate.is_none()
    }
}

fn signed(ray: &RayIds, stype: SeedType) -> (Rational, Rational) {
    let (s0, s1) = stype.signs();
    (&ray.lambda0 * ri(s0 as i64), &ray.second * ri(s1 as i64))
}

fn check_family(ray: &RayIds, stype: SeedType) -> Result<()> {
    if stype.belongs_to(ray.family) {
        Ok(())
    } else {
        Err(Error::FamilyMismatch)
    }
}

/// `lam + mu + 2m + 1` for the Pöschl–Teller families.
fn pt_root(ray: &RayIds, stype: SeedType, m: u32) -> Rational {
    let (l, mu) = signed(ray, stype);
    l + mu + ri(2 * m as i64 + 1)
}

/// Energy entering the Bose invariant (same algebra for DPT and HPT).
pub fn bose_energy(ray: &RayIds, stype: SeedType, m: u32) -> Rational {
    match ray.family {
        Family::Dpt | Family::Hpt => {
            let f = pt_root(ray, stype, m);
            &f * &f
        }
        Family::Isotonic => {
            let (l, _) = signed(ray, stype);
            ri(2 * stype.sigma1() as i64) * (l + ri(2 * m as i64 + 1))
        }
    }
}

/// Ground-state energy of the reference problem, in the units of
/// [`factorization_energy`].
pub fn ground_energy(ray: &RayIds) -> Rational {
    match ray.family {
        Family::Dpt => {
            let s = &ray.lambda0 + &ray.second + ri(1);
            &s * &s
        }
        Family::Hpt => {
            let s = &ray.second - &ray.lambda0 - ri(1);
            -(&s * &s)
        }
        Family::Isotonic => ri(2) * (&ray.lambda0 + ri(1)),
    }
}

/// Physical factorization energy.
///
/// DPT: `(lam + mu + 2m + 1)^2`; HPT: minus that square (the well is on the
/// negative semi-axis); isotonic: `2 sigma1 (lam + 2m + 1)`.
pub fn factorization_energy(ray: &RayIds, stype: SeedType, m: u32) -> Result<Rational> {
    check_family(ray, stype)?;
    let e = bose_energy(ray, stype, m);
    Ok(match ray.family {
        Family::Hpt => -e,
        _ => e,
    })
}

/// Shift of the seed energy relative to the ground level.
///
/// The isotonic shift carries a factor 1/2 relative to `eps/nu0`, matching
/// the closed forms `-2(lambda0+m+1)`, `2(m-lambda0)` and `-2(m+1)`.
pub fn energy_shift_to_ground(ray: &RayIds, stype: SeedType, m: u32) -> Result<Rational> {
    let e = factorization_energy(ray, stype, m)?;
    let g = ground_energy(ray);
    Ok(match ray.family {
        Family::Isotonic => (e - g) * half(),
        _ => e - g,
    })
}

/// Bound-state energy `-(mu0 - lambda0 - 2v - 1)^2` of the hyperbolic well.
pub fn hpt_bound_energy(lambda0: &Rational, mu0: &Rational, v: u32) -> Rational {
    let s = mu0 - lambda0 - ri(2 * v as i64 + 1);
    -(&s * &s)
}

/// Unnormalized seed polynomial and its degeneracy, if any.
fn raw_seed_polynomial(ray: &RayIds, stype: SeedType, m: u32) -> core::result::Result<Poly, DegenerateReason> {
    let (l, mu) = signed(ray, stype);
    match ray.family {
        Family::Dpt | Family::Hpt => {
            let b = &l + &mu + ri(m as i64 + 1);
            let c = &l + ri(1);
            let f = hypergeom_trunc(m, &b, &c).map_err(|_| DegenerateReason::Endpoint)?;
            if f.degree() != Some(m as usize) {
                return Err(DegenerateReason::OrderCollapse);
            }
            if f.eval(&ri(1)).is_zero() {
                return Err(DegenerateReason::Endpoint);
            }
            Ok(f)
        }
        Family::Isotonic => {
            let s1 = ri(stype.sigma1() as i64);
            let f = laguerre_poly(m, &l).compose_affine(&s1, &ri(0));
            if f.eval(&ri(0)).is_zero() {
                return Err(DegenerateReason::Endpoint);
            }
            Ok(f)
        }
    }
}

/// Monic seed polynomial `Pi_m`.
pub fn seed_polynomial(ray: &RayIds, stype: SeedType, m: u32) -> Result<Poly> {
    check_family(ray, stype)?;
    raw_seed_polynomial(ray, stype, m).map(|p| p.monic()).map_err(Error::Degenerate)
}

/// Fuchsian operator of the seed polynomial applied to `p` at the seed energy.
///
/// `iota = 1`: `z(1-z)p'' + [(lam+1) - (lam+mu+2)z]p' + (E - (lam+mu+1)^2)p/4`;
/// isotonic: `zeta p'' + (lam+1 - sigma1 zeta)p' + (E - 2 sigma1 (lam+1))p/4`,
/// with `E` the Bose-invariant energy. Zero for `p = pi` exactly when the
/// quantization condition holds.
pub fn fuchsian_apply(seed: &SeedSolution, p: &Poly) -> Poly {
    let l = &seed.lam_signed;
    let nu = seed.nu_signed();
    let e = seed.bose_energy();
    let quarter = rat_quarter();
    let (p2, p1, c0) = match seed.family() {
        Family::Isotonic => (
            Poly::x(),
            Poly::linear(-nu.clone(), l + ri(1)),
            (e - ri(2) * &nu * (l + ri(1))) * quarter,
        ),
        _ => {
            let s = l + &nu + ri(1);
            (
                Poly::from_ints(&[0, 1, -1]),
                Poly::linear(-(l + &nu + ri(2)), l + ri(1)),
                (e - &s * &s) * quarter,
            )
        }
    };
    &(&(&p2 * &p.nth_deriv(2)) + &(&p1 * &p.deriv())) + &p.scale(&c0)
}

/// Residual of the quantization condition: zero polynomial for a valid seed.
pub fn quantization_residual(seed: &SeedSolution) -> Poly {
    fuchsian_apply(seed, &seed.pi)
}

fn rat_quarter() -> Rational {
    half() * half()
}

/// Root of the linear seed.
///
/// `iota = 1`: `(lam+1)/(lam+mu+2)`; isotonic: `sigma1 (lam+1)`.
pub fn outer_root_linear(ray: &RayIds, stype: SeedType) -> Result<Rational> {
    check_family(ray, stype)?;
    let (l, mu) = signed(ray, stype);
    match ray.family {
        Family::Dpt | Family::Hpt => {
            let den = &l + &mu + ri(2);
            if den.is_zero() {
                return Err(Error::DegenerateDenominator);
            }
            Ok((l + ri(1)) / den)
        }
        Family::Isotonic => Ok(ri(stype.sigma1() as i64) * (l + ri(1))),
    }
}

/// `lambda / (lambda - mu)`: the root of the linear seed expressed through
/// the partner exponents.
pub fn z_minus(lambda: &Rational, mu: &Rational) -> Result<Rational> {
    let den = lambda - mu;
    if den.is_zero() {
        return Err(Error::DivisionByZero("z_minus with lambda = mu"));
    }
    Ok(lambda / den)
}

/// Whether a seed type is allowed at order `m` by the defining inequalities.
pub fn type_condition(ray: &RayIds, stype: SeedType, m: u32) -> bool {
    let two_m1 = ri(2 * m as i64 + 1);
    let (l0, mu0) = (&ray.lambda0, &ray.second);
    match stype {
        SeedType::TA => true,
        SeedType::TAp => two_m1 > mu0 - l0,
        SeedType::TB => two_m1 < l0 + mu0,
        SeedType::TBp => ri(1) < two_m1 && two_m1 < l0 - mu0,
        SeedType::TC => two_m1 < mu0 - l0,
        SeedType::TD => two_m1 > l0 + mu0,
        SeedType::TDp => two_m1 > l0 - mu0,
        _ => true,
    }
}

/// Build a seed, failing on degeneracy or family mismatch.
pub fn make_seed(ray: &RayIds, stype: SeedType, m: u32) -> Result<SeedSolution> {
    let pi = seed_polynomial(ray, stype, m)?;
    let (lam_signed, second_signed) = signed(ray, stype);
    Ok(SeedSolution {
        ray: ray.clone(),
        stype,
        m,
        lam_signed,
        second_signed,
        pi,
        energy_d: factorization_energy(ray, stype, m)?,
        energy_shift_to_ground: energy_shift_to_ground(ray, stype, m)?,
    })
}

/// SUSY validity: partner exponent differences at least 1 (or positive in
/// permissive mode). Only `lambda` is constrained on the half-line families.
pub fn susy_valid(seed: &SeedSolution, permissive: bool) -> bool {
    let (l, mu) = seed.partner_exponents();
    let ok = |x: &Rational| if permissive { x.is_positive() } else { x >= &ri(1) };
    match seed.family() {
        Family::Dpt => ok(&l) && ok(&mu),
        _ => ok(&l),
    }
}

/// True when `pi` has no zero inside the quantization interval.
pub fn is_nodeless(seed: &SeedSolution) -> bool {
    let (a, b) = seed.family().quantization_interval();
    seed.pi.degree().unwrap_or(0) == 0 || count_roots_in(&seed.pi, &a, &b) == 0
}

/// Quesne's `A`, `B` for the partner: `2A = lam' + mu' + 1`, `2B = mu' - lam'`.
pub fn quesne_ab(seed: &SeedSolution) -> Option<QuesneAB> {
    if seed.iota() != 1 {
        return None;
    }
    let (l, mu) = seed.partner_exponents();
    Some(QuesneAB { a: (&l + &mu + ri(1)) * half(), b: (mu - l) * half() })
}

pub fn admissibility(seed: &SeedSolution, permissive: bool) -> AdmissibilityReport {
    let degenerate = raw_seed_polynomial(&seed.ray, seed.stype, seed.m).err();
    AdmissibilityReport {
        susy_valid: susy_valid(seed, permissive),
        below_ground: seed.energy_shift_to_ground.is_negative(),
        nodeless: is_nodeless(seed),
        degenerate,
        quesne_ab: quesne_ab(seed),
    }
}

/// Discriminant `4(lam+2)(mu+2)(lam+mu+3)` of the quadratic seed.
pub fn quadratic_discriminant(ray: &RayIds, stype: SeedType) -> Rational {
    let (l, mu) = signed(ray, stype);
    ri(4) * (&l + ri(2)) * (&mu + ri(2)) * (l + mu + ri(3))
}

fn candidate_orders(ray: &RayIds, stype: SeedType, max_m: u32) -> Vec<u32> {
    match (ray.family, stype) {
        (_, SeedType::C) | (_, SeedType::TC) => alloc::vec![0],
        (Family::Hpt, SeedType::TBp) => Vec::new(),
        (Family::Dpt, SeedType::D) => type_d_even_orders(&ray.lambda0, &ray.second)
            .into_iter()
            .filter(|&m| m <= max_m)
            .collect(),
        (_, SeedType::D) | (_, SeedType::TD) | (_, SeedType::TDp) => (1..=max_m).collect(),
        _ => (0..=max_m).collect(),
    }
}

/// Every usable seed up to `max_m`: non-degenerate, SUSY-valid and nodeless.
///
/// Type c (and `c̃`) enters only at `m = 0`, the shape-invariance step. Type d
/// starts at `m = 1`, since `m = 0` is the plain shape-invariant partner with
/// both exponents lowered. For DPT the d orders are the even orders below
/// `min(lambda0, mu0)`.
pub fn enumerate_seeds(ray: &RayIds, max_m: u32, permissive: bool) -> Vec<(SeedSolution, AdmissibilityReport)> {
    let types: &[SeedType] = match ray.family {
        Family::Hpt => &SeedType::HPT,
        _ => &SeedType::DPT,
    };
    let mut out = Vec::new();
    for &t in types {
        for m in candidate_orders(ray, t, max_m) {
            if !type_condition(ray, t, m) {
                continue;
            }
            let Ok(seed) = make_seed(ray, t, m) else { continue };
            let rep = admissibility(&seed, permissive);
            if rep.usable() {
                out.push((seed, rep));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    #[test]
    fn energies() {
        let dpt = RayIds::dpt(ri(2), ri(3));
        assert_eq!(factorization_energy(&dpt, SeedType::C, 0).unwrap(), ri(36));
        let iso = RayIds::isotonic(rat(5, 2));
        assert_eq!(factorization_energy(&iso, SeedType::C, 0).unwrap(), ri(7));
        assert_eq!(hpt_bound_energy(&rat(3, 2), &rat(13, 2), 0), ri(-16));
        let hpt = RayIds::hpt(rat(3, 2), rat(13, 2));
        assert_eq!(factorization_energy(&hpt, SeedType::TC, 0).unwrap(), ri(-16));
    }

    #[test]
    fn shifts() {
        let dpt = RayIds::dpt(ri(2), ri(3));
        assert_eq!(energy_shift_to_ground(&dpt, SeedType::A, 1).unwrap(), ri(-32));
        let iso = RayIds::isotonic(rat(5, 2));
        assert_eq!(energy_shift_to_ground(&iso, SeedType::B, 1).unwrap(), ri(-3));
        let sym = RayIds::dpt(ri(4), ri(4));
        assert_eq!(energy_shift_to_ground(&sym, SeedType::D, 2).unwrap(), ri(-72));
    }

    #[test]
    fn linear_roots() {
        let dpt = RayIds::dpt(ri(2), ri(3));
        assert_eq!(outer_root_linear(&dpt, SeedType::A).unwrap(), ri(3));
        assert_eq!(outer_root_linear(&dpt, SeedType::B).unwrap(), rat(-1, 3));
        assert_eq!(z_minus(&ri(1), &ri(4)).unwrap(), rat(-1, 3));
        let pi = seed_polynomial(&dpt, SeedType::B, 1).unwrap();
        assert_eq!(pi, Poly::root_factor(&rat(-1, 3)));
        let iso = RayIds::isotonic(ri(2));
        assert_eq!(outer_root_linear(&iso, SeedType::B).unwrap(), ri(-1));
        let sym = RayIds::dpt(ri(1), ri(1));
        assert_eq!(outer_root_linear(&sym, SeedType::A).unwrap(), ri(1));
        assert_eq!(seed_polynomial(&sym, SeedType::A, 1), Err(Error::Degenerate(DegenerateReason::Endpoint)));
    }

    #[test]
    fn isotonic_a_seed() {
        let l0 = rat(7, 3);
        let iso = RayIds::isotonic(l0.clone());
        let pi = seed_polynomial(&iso, SeedType::A, 1).unwrap();
        assert_eq!(pi, Poly::linear(ri(1), l0 + ri(1)));
    }

    #[test]
    fn a_gap_by_degree() {
        // mu0 - lambda0 = 3: only m = 2 collapses.
        let ray = RayIds::dpt(ri(1), ri(4));
        assert!(seed_polynomial(&ray, SeedType::A, 1).is_ok());
        assert_eq!(seed_polynomial(&ray, SeedType::A, 2), Err(Error::Degenerate(DegenerateReason::OrderCollapse)));
    }

    #[test]
    fn quantization_holds_for_all_types() {
        let rays = [
            RayIds::dpt(rat(7, 3), rat(11, 2)),
            RayIds::hpt(rat(3, 2), rat(13, 2)),
            RayIds::isotonic(rat(7, 2)),
        ];
        for ray in &rays {
            let types: &[SeedType] = if ray.family == Family::Hpt { &SeedType::HPT } else { &SeedType::DPT };
            for &t in types {
                for m in 0..4 {
                    if let Ok(s) = make_seed(ray, t, m) {
                        assert!(quantization_residual(&s).is_zero(), "{:?} {} {}", ray.family, t, m);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_example() {
        let ray = RayIds::dpt(rat(5, 2), rat(7, 2));
        let seeds = enumerate_seeds(&ray, 4, false);
        let orders = |t: SeedType| seeds.iter().filter(|(s, _)| s.stype == t).map(|(s, _)| s.m).collect::<Vec<_>>();
        assert_eq!(orders(SeedType::D), alloc::vec![2]);
        assert_eq!(orders(SeedType::A), alloc::vec![0, 1, 2, 3]);
    }

    #[test]
    fn family_mismatch() {
        let dpt = RayIds::dpt(ri(2), ri(3));
        assert_eq!(factorization_energy(&dpt, SeedType::TA, 0), Err(Error::FamilyMismatch));
    }
}
