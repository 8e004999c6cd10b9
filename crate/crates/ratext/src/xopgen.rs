//! Heine-polynomial generators (HPGs), Gauss-seed Heine sequences, the
//! exceptional Jacobi and Laguerre specializations, the Heun quadrants, and
//! exact residual certification against the partner Heine operator.
//!
//! Conventions: seed polynomials are monic; target classical polynomials keep
//! their textbook normalization, so the raw HPG image carries the textbook
//! scale and `monic` is the canonical form.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::darboux::{partner_reference_pf, tangent_poly};
use crate::error::{DegenerateReason, Error, Result};
use crate::exactpoly::{
    eta_to_z, half, jacobi_poly, laguerre_or_zero, laguerre_poly, ri, y_to_z, Poly, Rational,
    RationalFn,
};
use crate::seedcat::{make_seed, Family, RayIds, SeedSolution, SeedType};

/// Generic HPG: `xi (1 - iota xi) [pi T' - pi' T] + (dl (1 - iota xi) - dnu xi) pi T / 2`.
pub fn g_hpg(dl: &Rational, dnu: &Rational, pi: &Poly, iota: u8, target: &Poly) -> Poly {
    let tp = if iota == 1 { Poly::from_ints(&[0, 1, -1]) } else { Poly::x() };
    let w = &(pi * &target.deriv()) - &(&pi.deriv() * target);
    let iota_r = ri(iota as i64);
    let lin = Poly::linear(-(dl * &iota_r) - dnu, dl.clone()).scale(&half());
    &(&tp * &w) + &(&(&lin * pi) * target)
}

/// Abridged HPG: `(1 - iota xi) [pi T' - pi' T] - dnu pi T / 2`.
pub fn a_hpg(dnu: &Rational, pi: &Poly, iota: u8, target: &Poly) -> Poly {
    let f = Poly::linear(-ri(iota as i64), ri(1));
    let w = &(pi * &target.deriv()) - &(&pi.deriv() * target);
    &(&f * &w) - &(pi * target).scale(&(dnu * half()))
}

/// The four typed HPGs of the trigonometric and hyperbolic wells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HpgKind {
    A,
    B,
    C,
    D,
}

impl HpgKind {
    pub const ALL: [HpgKind; 4] = [HpgKind::A, HpgKind::B, HpgKind::C, HpgKind::D];

    pub fn label(self) -> &'static str {
        match self {
            HpgKind::A => "a",
            HpgKind::B => "b",
            HpgKind::C => "c",
            HpgKind::D => "d",
        }
    }
}

fn check_negative(x: &Rational, what: &'static str) -> Result<()> {
    if x.is_negative() && *x >= ri(-1) {
        Err(Error::SignConstraint(what))
    } else {
        Ok(())
    }
}

/// Typed HPG in `z`:
/// `a = (1-z)[pi D - pi'] + mu pi`, `b = z[pi D - pi'] - lambda pi`,
/// `c = pi D - pi'`, `d = z(1-z)[pi D - pi'] + (lambda (z-1) + mu z) pi`.
///
/// Negative `mu` (a, d) and `lambda` (b, d) must lie below -1.
pub fn hpg_dpt(kind: HpgKind, lambda_t: &Rational, mu_t: &Rational, pi: &Poly, target: &Poly) -> Result<Poly> {
    let w = &(pi * &target.deriv()) - &(&pi.deriv() * target);
    let pt = pi * target;
    Ok(match kind {
        HpgKind::A => {
            check_negative(mu_t, "mu below -1 for a")?;
            &(&Poly::from_ints(&[1, -1]) * &w) + &pt.scale(mu_t)
        }
        HpgKind::B => {
            check_negative(lambda_t, "lambda below -1 for b")?;
            &(&Poly::x() * &w) - &pt.scale(lambda_t)
        }
        HpgKind::C => w,
        HpgKind::D => {
            check_negative(lambda_t, "lambda below -1 for d")?;
            check_negative(mu_t, "mu below -1 for d")?;
            g_hpg(&(ri(-2) * lambda_t), &(ri(-2) * mu_t), pi, 1, target)
        }
    })
}

/// Gauss-seed Heine polynomial with its provenance and scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSHeine {
    pub seed: SeedSolution,
    /// Sign class of the classical target solution.
    pub target: SeedType,
    pub target_order: u32,
    /// Signed exponent differences `(a, b)` of the partner gauge
    /// `xi^((1+a)/2) (1 - xi)^((1+b)/2)` (isotonic: `b` is the sign of the
    /// exponential `exp(-b zeta/2)`).
    pub gauge: (Rational, Rational),
    /// Signs of `gauge` relative to the partner exponent differences.
    pub sigma_pair: (i32, i32),
    pub order_n: usize,
    pub monic: Poly,
    /// HPG image of the textbook-normalized target (Jacobi or Laguerre).
    pub raw: Poly,
    /// Ratio of the textbook-normalized member to `monic`; `None` when the
    /// normalizing denominator vanishes, which happens exactly when the order
    /// falls below the predicted one.
    pub norm_scale: Option<Rational>,
    /// Bose-invariant energy of the target level.
    pub energy: Rational,
}

/// Exponent at `xi = 0` and second signed exponent of a target class.
fn target_exponents(ray: &RayIds, target: SeedType) -> (Rational, Rational) {
    let (t0, t1) = target.signs();
    let l = &ray.lambda0 * ri(t0 as i64);
    match ray.family {
        Family::Isotonic => (l, ri(t1 as i64)),
        _ => (l, &ray.second * ri(t1 as i64)),
    }
}

/// Textbook-normalized target polynomial: `P_k^(b, a)(2z - 1)` or
/// `L_k^(a)(t1 zeta)`.
pub fn target_polynomial(ray: &RayIds, target: SeedType, k: u32) -> Result<Poly> {
    let (a, b) = target_exponents(ray, target);
    let p = match ray.family {
        Family::Isotonic => laguerre_poly(k, &a).compose_affine(&b, &ri(0)),
        _ => y_to_z(&jacobi_poly(k, &b, &a)),
    };
    if p.degree() != Some(k as usize) {
        return Err(Error::Degenerate(DegenerateReason::OrderCollapse));
    }
    Ok(p)
}

/// Bose-invariant energy of a target level.
pub fn target_energy(ray: &RayIds, target: SeedType, k: u32) -> Rational {
    let (a, b) = target_exponents(ray, target);
    let kk = ri(2 * k as i64 + 1);
    match ray.family {
        Family::Isotonic => ri(2) * &b * (a + kk),
        _ => {
            let s = a + b + kk;
            &s * &s
        }
    }
}

fn sign_of(x: &Rational) -> i32 {
    if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Order predicted from the sign pattern: `k + m + 1` less one for each end
/// where the target keeps the seed's sign (isotonic: the exponential end
/// raises the order only when the signs differ). `None` marks the sparse gap.
pub fn predicted_order(seed: &SeedSolution, target: SeedType, k: u32) -> Option<usize> {
    let (s0, s1) = seed.stype.signs();
    let (t0, t1) = target.signs();
    let same0 = s0 == t0;
    let same1 = s1 == t1;
    if same0 && same1 && k == seed.m {
        return None;
    }
    let base = (k + seed.m) as i64 + 1 - i64::from(same0) - i64::from(same1);
    usize::try_from(base).ok()
}

/// Normalizing denominator of the textbook scale for the four DPT series.
fn dpt_denominator(seed: &SeedSolution, same0: bool, same1: bool, k: u32) -> Rational {
    let (l, mu) = (&seed.lam_signed, &seed.second_signed);
    let d = ri(k as i64) - ri(seed.m as i64);
    match (same0, same1) {
        (true, false) => mu - &d,
        (false, true) => d - l,
        (true, true) => d,
        (false, false) => d - l - mu,
    }
}

/// Build the Gauss-seed Heine polynomial generated from target level `k` of
/// class `target` by the Darboux transformation with `seed`.
pub fn gs_heine(seed: &SeedSolution, target: SeedType, k: u32) -> Result<GSHeine> {
    let ray = &seed.ray;
    let family = ray.family;
    let iota = family.iota();
    let tpoly = target_polynomial(ray, target, k)?;
    let (ta, tb) = target_exponents(ray, target);
    let dl = &ta - &seed.lam_signed;
    let dnu = &tb - &seed.nu_signed();
    let same0 = dl.is_zero();
    let same1 = dnu.is_zero();
    let mut raw = g_hpg(&dl, &dnu, &seed.pi, iota, &tpoly);
    if same0 {
        raw = raw.div_exact(&Poly::x()).expect("zero exponent shift leaves a factor xi");
    }
    if same1 && iota == 1 {
        raw = raw.div_exact(&Poly::from_ints(&[1, -1])).expect("zero exponent shift leaves a factor 1 - xi");
    }
    if raw.is_zero() {
        return Err(Error::SparseGap);
    }
    let order_n = raw.degree().unwrap_or(0);
    let monic = raw.monic();
    let lead = raw.leading();
    let norm_scale = match family {
        Family::Isotonic => {
            let s1 = ri(seed.stype.sigma1() as i64);
            Some(lead * s1.pow(seed.m as i32))
        }
        _ => {
            let den = dpt_denominator(seed, same0, same1, k) * tpoly.leading();
            (!den.is_zero()).then(|| lead / den)
        }
    };
    let l1 = &seed.lam_signed + ri(1);
    let a = if same0 { l1.clone() } else { -l1 };
    let b = match family {
        Family::Isotonic => tb.clone(),
        _ => {
            let m1 = &seed.second_signed + ri(1);
            if same1 {
                m1
            } else {
                -m1
            }
        }
    };
    let sigma_pair = (sign_of(&a), sign_of(&b));
    Ok(GSHeine {
        seed: seed.clone(),
        target,
        target_order: k,
        gauge: (a, b),
        sigma_pair,
        order_n,
        monic,
        raw,
        norm_scale,
        energy: target_energy(ray, target, k),
    })
}

impl GSHeine {
    /// Textbook-normalized member.
    pub fn normalized(&self) -> Result<Poly> {
        self.norm_scale.as_ref().map(|s| self.monic.scale(s)).ok_or(Error::DegenerateScale)
    }

    pub fn operator(&self) -> HeineOperator {
        heine_operator_gauge(&self.seed, &self.gauge.0, &self.gauge.1, &self.energy)
    }

    /// Exact residual of `monic` under its Heine operator.
    pub fn residual(&self) -> Poly {
        self.operator().apply(&self.monic)
    }

    pub fn certified(&self) -> bool {
        self.residual().is_zero()
    }
}

/// Second-order Heine operator `p2 D^2 + p1 D + p0` of the partner problem in
/// a fixed gauge, with `p2 = xi (1 - iota xi) pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeineOperator {
    pub p2: Poly,
    pub p1: Poly,
    /// Free term at `energy`.
    pub p0: Poly,
    /// Energy-independent part of the free term.
    pub c0: Poly,
    pub energy: Rational,
}

impl HeineOperator {
    pub fn apply(&self, f: &Poly) -> Poly {
        &(&(&self.p2 * &f.nth_deriv(2)) + &(&self.p1 * &f.deriv())) + &(&self.p0 * f)
    }
}

/// Heine operator in the gauge with signed exponent differences `(a, b)`.
///
/// `p1 = [(1 + a)(1 - iota xi) - (iota + b) xi] pi - 2 xi (1 - iota xi) pi'`;
/// the free term is read off the gauge-transformed partner Bose invariant, so
/// it needs no closed form.
pub fn heine_operator_gauge(seed: &SeedSolution, a: &Rational, b: &Rational, energy: &Rational) -> HeineOperator {
    let family = seed.family();
    let iota = family.iota();
    let pi = &seed.pi;
    let tp = tangent_poly(family);
    let p2 = &tp * pi;
    let iota_r = ri(iota as i64);
    let lin = Poly::linear(-(&(a + ri(1)) * &iota_r) - (&iota_r + b), a + ri(1));
    let p1 = &(&lin * pi) - &(&tp * &pi.deriv()).scale(&ri(2));
    // u = theta F / pi with ld theta = (1+a)/(2 xi) - (b + iota)/(2 (1 - iota xi)) + ...
    let ld = RationalFn::new(p1.clone(), p2.scale(&ri(2)));
    let bose = partner_reference_pf(seed).value;
    let q = &(&ld.deriv() + &(&ld * &ld)) + &bose;
    let c0 = q.times_poly_exact(&p2).expect("gauge-transformed invariant has polynomial free term");
    let p0 = &c0 + &pi.scale(&(energy * half() * half()));
    HeineOperator { p2, p1, p0, c0, energy: energy.clone() }
}

/// Heine operator in the gauge with signs `sigma_pair` on the partner
/// exponent differences (isotonic: the second sign selects the exponential).
pub fn heine_operator(seed: &SeedSolution, sigma_pair: (i32, i32), energy: &Rational) -> HeineOperator {
    let (lp, sp) = seed.partner_exponents();
    let a = lp * ri(sigma_pair.0 as i64);
    let b = match seed.family() {
        Family::Isotonic => ri(sigma_pair.1 as i64),
        _ => sp * ri(sigma_pair.1 as i64),
    };
    heine_operator_gauge(seed, &a, &b, energy)
}

/// Exact residual of `f` under `op`.
pub fn heine_residual(op: &HeineOperator, f: &Poly) -> Poly {
    op.apply(f)
}

/// Energy at which a degree-`n` polynomial can solve the operator in gauge
/// `(a, b)`: the energy enters only through `E pi / 4`, so the top
/// coefficient of the residual at `E = 0` fixes it.
pub fn energy_for_order(seed: &SeedSolution, a: &Rational, b: &Rational, n: usize) -> Rational {
    let op = heine_operator_gauge(seed, a, b, &ri(0));
    let mut c = alloc::vec![ri(0); n + 1];
    c[n] = ri(1);
    let top = op.apply(&Poly::new(c)).coeff(seed.m as usize + n);
    -(top * ri(4))
}

/// Exceptional Jacobi variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XmJacobiVariant {
    J1,
    J2,
}

fn xm_jacobi_range(variant: XmJacobiVariant, lambda0: &Rational, mu0: &Rational, permissive: bool) -> Result<()> {
    if permissive {
        if !lambda0.is_positive() || !mu0.is_positive() {
            return Err(Error::RangeViolation("exponent differences must be positive"));
        }
        return Ok(());
    }
    let (lmin, mmin) = match variant {
        XmJacobiVariant::J1 => (ri(1), ri(2)),
        XmJacobiVariant::J2 => (ri(2), ri(1)),
    };
    if *lambda0 < lmin || *mu0 < mmin {
        return Err(Error::RangeViolation(match variant {
            XmJacobiVariant::J1 => "J1 needs lambda0 >= 1 and mu0 >= 2",
            XmJacobiVariant::J2 => "J2 needs lambda0 >= 2 and mu0 >= 1",
        }));
    }
    Ok(())
}

fn xm_jacobi_seed(variant: XmJacobiVariant, lambda0: &Rational, mu0: &Rational, m: u32) -> Result<SeedSolution> {
    let stype = match variant {
        XmJacobiVariant::J1 => SeedType::A,
        XmJacobiVariant::J2 => SeedType::B,
    };
    make_seed(&RayIds::dpt(lambda0.clone(), mu0.clone()), stype, m)
}

/// X_m-Jacobi polynomial through the exceptional generator, in `y` (J1) or in
/// `eta = -y` (J2):
/// J1: `(-1)^m [(y-1)(P T' - P' T) + mu0 P T] / (mu0 + v)` with
/// `P = P_m^(-mu0, lambda0)`, `T = P_v^(mu0, lambda0)`; J2 swaps the roles of
/// `lambda0` and `mu0`.
pub fn xm_jacobi(m: u32, lambda0: &Rational, mu0: &Rational, v: u32, variant: XmJacobiVariant, permissive: bool) -> Result<Poly> {
    xm_jacobi_range(variant, lambda0, mu0, permissive)?;
    xm_jacobi_seed(variant, lambda0, mu0, m)?;
    let (l, u) = match variant {
        XmJacobiVariant::J1 => (lambda0, mu0),
        XmJacobiVariant::J2 => (mu0, lambda0),
    };
    let p = jacobi_poly(m, &-u, l);
    let t = jacobi_poly(v, u, l);
    let w = &(&p * &t.deriv()) - &(&p.deriv() * &t);
    let x = &(&Poly::from_ints(&[-1, 1]) * &w) + &(&p * &t).scale(u);
    let den = u + ri(v as i64);
    if den.is_zero() {
        return Err(Error::DegenerateScale);
    }
    let sign = if m.is_multiple_of(2) { ri(1) } else { ri(-1) };
    Ok(x.scale(&(sign / den)))
}

/// Same polynomial through the ladder form of the generator:
/// `(-1)^m [(mu0 - m) P_m^(-mu0-1, lambda0+1) T + (y-1) P T'] / (mu0 + v)`.
pub fn xm_jacobi_ladder(m: u32, lambda0: &Rational, mu0: &Rational, v: u32, variant: XmJacobiVariant) -> Result<Poly> {
    let (l, u) = match variant {
        XmJacobiVariant::J1 => (lambda0, mu0),
        XmJacobiVariant::J2 => (mu0, lambda0),
    };
    let mr = ri(m as i64);
    let p = jacobi_poly(m, &-u, l);
    let p_shift = jacobi_poly(m, &(-u - ri(1)), &(l + ri(1)));
    let t = jacobi_poly(v, u, l);
    let x = &(&p_shift * &t).scale(&(u - &mr)) + &(&(&Poly::from_ints(&[-1, 1]) * &p) * &t.deriv());
    let den = u + ri(v as i64);
    if den.is_zero() {
        return Err(Error::DegenerateScale);
    }
    let sign = if m.is_multiple_of(2) { ri(1) } else { ri(-1) };
    Ok(x.scale(&(sign / den)))
}

/// X_m-Jacobi polynomial rewritten in `z`.
pub fn xm_jacobi_in_z(p: &Poly, variant: XmJacobiVariant) -> Poly {
    match variant {
        XmJacobiVariant::J1 => y_to_z(p),
        XmJacobiVariant::J2 => eta_to_z(p),
    }
}

/// The Gauss-seed Heine member matching an X_m-Jacobi polynomial.
pub fn xm_jacobi_heine(m: u32, lambda0: &Rational, mu0: &Rational, v: u32, variant: XmJacobiVariant) -> Result<GSHeine> {
    let seed = xm_jacobi_seed(variant, lambda0, mu0, m)?;
    gs_heine(&seed, SeedType::C, v)
}

/// Exceptional Laguerre case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XmLaguerreCase {
    I,
    II,
}

/// X_m-Laguerre polynomials in Heine normalization:
/// I: `(-1)^(m+1) m! {[L_(m-1)^(l+1)(-z) + L_m^(l)(-z)] L_v^(l)(z) + L_m^(l)(-z) L_(v-1)^(l+1)(z)}`,
/// II: `(-1)^m m! {[z L_(m-1)^(1-l)(z) + l L_m^(-l)(z)] L_v^(l)(z) - z L_m^(-l)(z) L_(v-1)^(l+1)(z)}`.
pub fn xm_laguerre(m: u32, lambda0: &Rational, v: u32, case: XmLaguerreCase) -> Result<Poly> {
    let mi = m as i64;
    let vi = v as i64;
    let l = lambda0;
    let l1 = l + ri(1);
    let fact = crate::exactpoly::factorial(m);
    let lv = laguerre_poly(v, l);
    let lv1 = laguerre_or_zero(vi - 1, &l1);
    let neg = |p: Poly| p.compose_affine(&ri(-1), &ri(0));
    Ok(match case {
        XmLaguerreCase::I => {
            let lm = neg(laguerre_poly(m, l));
            let lm1 = neg(laguerre_or_zero(mi - 1, &l1));
            let s = if m.is_multiple_of(2) { -fact } else { fact };
            (&(&(&lm1 + &lm) * &lv) + &(&lm * &lv1)).scale(&s)
        }
        XmLaguerreCase::II => {
            if ri(mi) >= *l {
                return Err(Error::CaseIIRange);
            }
            let lm = laguerre_poly(m, &-l);
            let lm1 = laguerre_or_zero(mi - 1, &(ri(1) - l));
            let s = if m.is_multiple_of(2) { fact } else { -fact };
            let first = &(&Poly::x() * &lm1) + &lm.scale(l);
            (&(&first * &lv) - &(&(&Poly::x() * &lm) * &lv1)).scale(&s)
        }
    })
}

/// The Gauss-seed Heine member matching an X_m-Laguerre polynomial.
pub fn xm_laguerre_heine(m: u32, lambda0: &Rational, v: u32, case: XmLaguerreCase) -> Result<GSHeine> {
    let stype = match case {
        XmLaguerreCase::I => SeedType::A,
        XmLaguerreCase::II => {
            if ri(m as i64) >= *lambda0 {
                return Err(Error::CaseIIRange);
            }
            SeedType::B
        }
    };
    let seed = make_seed(&RayIds::isotonic(lambda0.clone()), stype, m)?;
    gs_heine(&seed, SeedType::C, v)
}

/// Heun quadrant label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeunQuadrant {
    /// `+-`: order `m + 1`.
    A,
    /// `-+`: order `m + 1`.
    B,
    /// `++`: order `m`, no member of order 1.
    C,
    /// `--`: order `m + 2`.
    D,
}

impl HeunQuadrant {
    pub const ALL: [HeunQuadrant; 4] = [HeunQuadrant::A, HeunQuadrant::B, HeunQuadrant::C, HeunQuadrant::D];

    pub fn label(self) -> &'static str {
        match self {
            HeunQuadrant::A => "+-",
            HeunQuadrant::B => "-+",
            HeunQuadrant::C => "++",
            HeunQuadrant::D => "--",
        }
    }
}

/// Standard Heun parameters of the order-`k+1` polynomial of the `+-` series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TakemuraParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    /// Outer singular point in the scaled variable, `-|lambda|/|mu|`.
    pub t: Rational,
}

/// `alpha = -k-1`, `beta = k + lambda + mu`, `gamma = lambda + 1`, `t = -|lambda|/|mu|`.
pub fn takemura_params(lambda: &Rational, mu: &Rational, k: u32) -> Result<TakemuraParams> {
    if mu.is_zero() {
        return Err(Error::DivisionByZero("Takemura t with mu = 0"));
    }
    let kr = ri(k as i64);
    Ok(TakemuraParams {
        alpha: -(&kr + ri(1)),
        beta: &kr + lambda + mu,
        gamma: lambda + ri(1),
        t: -(lambda.abs() / mu.abs()),
    })
}

/// One member of a Heun sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeunMember {
    pub quadrant: HeunQuadrant,
    /// Order of the classical target polynomial.
    pub m: u32,
    pub heine: GSHeine,
}

/// Members by target order; `None` marks a gap.
pub type HeunSeries = Vec<(u32, Option<HeunMember>)>;

/// The four Heun sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeunSequences {
    pub lambda: Rational,
    pub mu: Rational,
    /// Outer singular point `lambda/(lambda - mu)` of the `+-`/`-+` equation.
    pub outer_point: Rational,
    pub sequences: Vec<(HeunQuadrant, HeunSeries)>,
}

/// Seed with given signed exponent differences and order one.
fn linear_seed(lam_signed: &Rational, mu_signed: &Rational) -> Result<SeedSolution> {
    let stype = match (lam_signed.is_negative(), mu_signed.is_negative()) {
        (false, true) => SeedType::A,
        (true, false) => SeedType::B,
        (false, false) => SeedType::C,
        (true, true) => SeedType::D,
    };
    make_seed(&RayIds::dpt(lam_signed.abs(), mu_signed.abs()), stype, 1)
}

/// Target class with prescribed signs relative to the seed.
fn relative_target(seed: &SeedSolution, flip0: bool, flip1: bool) -> SeedType {
    let (s0, s1) = seed.stype.signs();
    let t0 = if flip0 { -s0 } else { s0 };
    let t1 = if flip1 { -s1 } else { s1 };
    match (t0, t1) {
        (1, -1) => SeedType::A,
        (-1, 1) => SeedType::B,
        (1, 1) => SeedType::C,
        _ => SeedType::D,
    }
}

/// Heun polynomials for the partner exponent differences `(lambda, mu)`.
///
/// The `+-` and `-+` series come from the linear seeds with signed exponents
/// `(lambda - 1, -mu - 1)` and `(-lambda - 1, mu - 1)`; both solve one Heun
/// equation with outer point `lambda/(lambda - mu)`. The `++` and `--` series
/// are generated by the first of these seeds and solve the same Bose invariant
/// in the gauges `(lambda, -mu)` and `(-lambda, mu)`.
pub fn heun_sequences(lambda: &Rational, mu: &Rational, orders: core::ops::Range<u32>) -> Result<HeunSequences> {
    if lambda == mu {
        return Err(Error::MergedSingularity);
    }
    let seed_a = linear_seed(&(lambda - ri(1)), &(-mu - ri(1)))?;
    let seed_b = linear_seed(&(-lambda - ri(1)), &(mu - ri(1)))?;
    let mut sequences = Vec::new();
    for q in HeunQuadrant::ALL {
        let (seed, f0, f1) = match q {
            HeunQuadrant::A => (&seed_a, false, true),
            HeunQuadrant::B => (&seed_b, true, false),
            HeunQuadrant::C => (&seed_a, false, false),
            HeunQuadrant::D => (&seed_a, true, true),
        };
        let target = relative_target(seed, f0, f1);
        let mut members = Vec::new();
        for m in orders.clone() {
            let member = match gs_heine(seed, target, m) {
                Ok(heine) => Some(HeunMember { quadrant: q, m, heine }),
                Err(Error::SparseGap | Error::Degenerate(_)) => None,
                Err(e) => return Err(e),
            };
            members.push((m, member));
        }
        sequences.push((q, members));
    }
    Ok(HeunSequences { lambda: lambda.clone(), mu: mu.clone(), outer_point: lambda / (lambda - mu), sequences })
}

/// Literal Heun operator multiplied by `z (z-1) [(lambda-mu) z - lambda]`:
/// `p2 = z(z-1)s`, `p1 = (1+lambda)(z-1)s + (1+mu) z s - 2(lambda-mu) z(z-1)`,
/// `p0 = (E0 - E) s / 4 - (lambda (z-1) + mu z)(lambda - mu)` with
/// `s = (lambda-mu) z - lambda` and `E0 = (lambda + mu + 1)^2`.
pub fn heun_operator(lambda: &Rational, mu: &Rational, energy: &Rational) -> HeineOperator {
    let d = lambda - mu;
    let s = Poly::linear(d.clone(), -lambda.clone());
    let zz = Poly::from_ints(&[0, -1, 1]);
    let p2 = &zz * &s;
    let p1 = &(&(&Poly::from_ints(&[-1, 1]) * &s).scale(&(lambda + ri(1))) + &(&Poly::x() * &s).scale(&(mu + ri(1))))
        - &zz.scale(&(ri(2) * &d));
    let e0 = {
        let t = lambda + mu + ri(1);
        &t * &t
    };
    let c0 = &s.scale(&(&e0 * half() * half())) - &Poly::linear(lambda + mu, -lambda.clone()).scale(&d);
    let p0 = &c0 - &s.scale(&(energy * half() * half()));
    HeineOperator { p2, p1, p0, c0, energy: energy.clone() }
}

/// Energy law of the `+-` series: `(E_k - E_0)/4` for the order-`k+1` member.
pub fn heun_energy_gap(lambda: &Rational, mu: &Rational, k: u32) -> Rational {
    let kr = ri(k as i64);
    &kr * (lambda + mu + &kr + ri(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{apply_ladder, rat, LadderKind};

    #[test]
    fn trivial_hpg_cases() {
        let p = Poly::from_ints(&[3, -1, 2]);
        let g = g_hpg(&ri(0), &ri(0), &Poly::one(), 1, &p);
        assert_eq!(g, &Poly::from_ints(&[0, 1, -1]) * &p.deriv());
        assert_eq!(a_hpg(&ri(0), &Poly::one(), 0, &p), p.deriv());
        let c = hpg_dpt(HpgKind::C, &ri(2), &ri(3), &Poly::one(), &p).unwrap();
        assert_eq!(c, p.deriv());
    }

    #[test]
    fn sign_constraint() {
        let p = Poly::x();
        assert!(matches!(
            hpg_dpt(HpgKind::A, &ri(2), &rat(-1, 2), &Poly::one(), &p),
            Err(Error::SignConstraint(_))
        ));
        assert!(hpg_dpt(HpgKind::A, &ri(2), &rat(-3, 2), &Poly::one(), &p).is_ok());
    }

    #[test]
    fn first_order_ladders_in_y() {
        // With pi = 1 the typed HPGs are the index-shifting ladders.
        let (l, mu) = (rat(5, 3), rat(7, 2));
        for n in 0..5u32 {
            let t = jacobi_poly(n, &-&mu, &l);
            let a = hpg_dpt(HpgKind::A, &l, &mu, &Poly::one(), &y_to_z(&t)).unwrap();
            assert_eq!(a, y_to_z(&apply_ladder(LadderKind::A, &l, &mu, &t)));
            let t = jacobi_poly(n, &mu, &l);
            let c = hpg_dpt(HpgKind::C, &l, &mu, &Poly::one(), &y_to_z(&t)).unwrap();
            assert_eq!(c, y_to_z(&t.deriv()).scale(&ri(2)));
        }
    }

    #[test]
    fn isotonic_case_one_first_member() {
        let l0 = rat(5, 2);
        let seed = make_seed(&RayIds::isotonic(l0.clone()), SeedType::A, 1).unwrap();
        let h = gs_heine(&seed, SeedType::C, 0).unwrap();
        assert_eq!(h.monic, Poly::linear(ri(1), &l0 + ri(2)));
        assert!(h.certified());
        assert_eq!(xm_laguerre(1, &l0, 0, XmLaguerreCase::I).unwrap(), h.monic);
    }

    #[test]
    fn laguerre_identity_m2_alpha3() {
        let a = ri(3);
        let lhs = &(&Poly::x() * &laguerre_poly(1, &ri(4))) - &laguerre_poly(2, &a).scale(&a);
        let rhs = (&laguerre_poly(1, &a) - &laguerre_poly(2, &a)).scale(&ri(5));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn seed_energy_constant_solution() {
        for ray in [RayIds::dpt(ri(2), ri(3)), RayIds::isotonic(rat(7, 2)), RayIds::hpt(rat(3, 2), rat(13, 2))] {
            for (seed, rep) in crate::seedcat::enumerate_seeds(&ray, 3, true) {
                if rep.degenerate.is_some() {
                    continue;
                }
                let a = -(&seed.lam_signed + ri(1));
                let b = match seed.family() {
                    Family::Isotonic => -seed.nu_signed(),
                    _ => -(&seed.second_signed + ri(1)),
                };
                let op = heine_operator_gauge(&seed, &a, &b, &seed.bose_energy());
                assert!(op.p0.is_zero(), "{} {}", seed.stype, seed.m);
            }
        }
    }

    #[test]
    fn free_term_leading_coefficient() {
        let ray = RayIds::dpt(rat(7, 3), rat(11, 2));
        for t in SeedType::DPT {
            for m in 1..3 {
                let Ok(seed) = make_seed(&ray, t, m) else { continue };
                let (lp, mp) = seed.partner_exponents();
                for (s0, s1) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let op = heine_operator(&seed, (s0, s1), &ri(0));
                    let x = &lp * ri(s0 as i64) + &mp * ri(s1 as i64) - ri(2 * m as i64) + ri(1);
                    assert_eq!(-op.c0.leading(), &x * &x * half() * half());
                }
            }
        }
    }

    #[test]
    fn dpt_series_certified() {
        let ray = RayIds::dpt(ri(2), ri(3));
        let seed = make_seed(&ray, SeedType::A, 1).unwrap();
        let h = gs_heine(&seed, SeedType::C, 1).unwrap();
        assert!(h.certified());
        assert_eq!(Some(h.order_n), predicted_order(&seed, SeedType::C, 1));
        let seed = make_seed(&RayIds::dpt(rat(7, 3), rat(11, 2)), SeedType::A, 1).unwrap();
        for t in SeedType::DPT {
            for k in 0..4 {
                match gs_heine(&seed, t, k) {
                    Ok(h) => {
                        assert!(h.certified(), "{t} {k}");
                        if h.norm_scale.is_none() {
                            // Integer exponents: the leading coefficient cancels.
                            assert!(h.order_n < predicted_order(&seed, t, k).unwrap());
                            continue;
                        }
                        assert_eq!(Some(h.order_n), predicted_order(&seed, t, k));
                        let (a, b) = &h.gauge;
                        let x = a + b + ri(2 * h.order_n as i64) - ri(2) + ri(1);
                        assert_eq!(h.energy, &x * &x);
                    }
                    Err(Error::SparseGap) => assert_eq!((t, k), (SeedType::A, 1)),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn c_series_starts_below_seed_order() {
        let ray = RayIds::dpt(rat(7, 3), rat(11, 2));
        let seed = make_seed(&ray, SeedType::A, 2).unwrap();
        let h = gs_heine(&seed, SeedType::A, 1).unwrap();
        assert_eq!(h.order_n, 2);
        assert_eq!(gs_heine(&seed, SeedType::A, 2), Err(Error::SparseGap));
    }

    #[test]
    fn xm_jacobi_routes() {
        let (l, u) = (ri(2), ri(3));
        for variant in [XmJacobiVariant::J1, XmJacobiVariant::J2] {
            for v in 0..3 {
                let x = xm_jacobi(1, &l, &u, v, variant, false).unwrap();
                assert_eq!(x, xm_jacobi_ladder(1, &l, &u, v, variant).unwrap());
                let h = xm_jacobi_heine(1, &l, &u, v, variant).unwrap();
                assert!(h.certified());
                assert_eq!(xm_jacobi_in_z(&x, variant).monic(), h.monic);
            }
        }
        assert!(matches!(xm_jacobi(1, &ri(1), &ri(1), 0, XmJacobiVariant::J1, false), Err(Error::RangeViolation(_))));
    }

    #[test]
    fn xm_jacobi_m0_is_index_shift() {
        // (x - 1) P' + a P = (a + n) P^(a-1, b+1) with a = mu0.
        let (l, u) = (rat(5, 2), rat(7, 2));
        for v in 0..4 {
            let x = xm_jacobi(0, &l, &u, v, XmJacobiVariant::J1, false).unwrap();
            assert_eq!(x, jacobi_poly(v, &(&u - ri(1)), &(&l + ri(1))));
        }
    }

    #[test]
    fn xm_laguerre_matches_heine() {
        let l0 = rat(5, 2);
        for m in 1..3 {
            for v in 0..4 {
                let h = xm_laguerre_heine(m, &l0, v, XmLaguerreCase::I).unwrap();
                assert!(h.certified());
                assert_eq!(xm_laguerre(m, &l0, v, XmLaguerreCase::I).unwrap(), h.normalized().unwrap(), "I {m} {v}");
                let h = xm_laguerre_heine(m, &l0, v, XmLaguerreCase::II).unwrap();
                assert!(h.certified());
                assert_eq!(xm_laguerre(m, &l0, v, XmLaguerreCase::II).unwrap(), h.normalized().unwrap(), "II {m} {v}");
            }
        }
        assert_eq!(xm_laguerre(3, &l0, 0, XmLaguerreCase::II), Err(Error::CaseIIRange));
    }

    #[test]
    fn heun_example() {
        let (l, u) = (ri(1), ri(3));
        let hs = heun_sequences(&l, &u, 0..4).unwrap();
        assert_eq!(hs.outer_point, rat(-1, 2));
        for (q, members) in &hs.sequences[..2] {
            for (m, member) in members {
                let mm = member.as_ref().unwrap();
                assert_eq!(mm.heine.order_n, *m as usize + 1);
                assert!(mm.heine.certified(), "{q:?} {m}");
                let op = heun_operator(&l, &u, &mm.heine.energy);
                assert!(op.apply(&mm.heine.monic).is_zero(), "{q:?} {m}");
                let e = &l + &u + ri(2 * *m as i64 + 1);
                assert_eq!(mm.heine.energy, &e * &e);
            }
        }
        assert_eq!(heun_energy_gap(&l, &u, 2), ri(14));
        let t = takemura_params(&l, &u, 1).unwrap();
        assert_eq!((t.alpha, t.beta, t.gamma, t.t), (ri(-2), ri(5), ri(2), rat(-1, 3)));
        assert_eq!(heun_sequences(&ri(2), &ri(2), 0..2).unwrap_err(), Error::MergedSingularity);
    }

    #[test]
    fn heun_quadrant_orders() {
        let hs = heun_sequences(&rat(5, 3), &rat(7, 2), 0..5).unwrap();
        for (q, members) in &hs.sequences {
            for (m, member) in members {
                let shift = match q {
                    HeunQuadrant::A | HeunQuadrant::B => Some(1),
                    HeunQuadrant::C => Some(0),
                    HeunQuadrant::D => Some(2),
                };
                match member {
                    Some(mm) => {
                        assert!(mm.heine.certified(), "{q:?} {m}");
                        assert_eq!(Some(mm.heine.order_n), shift.map(|s| *m as usize + s), "{q:?} {m}");
                    }
                    None => assert_eq!((*q, *m), (HeunQuadrant::C, 1)),
                }
            }
        }
        let (_, c) = &hs.sequences[2];
        assert_eq!(c[0].1.as_ref().unwrap().heine.order_n, 0);
    }
}
