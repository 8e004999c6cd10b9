//! Floating-point laboratory: singular-weight quadrature, the Liouville map
//! to Schrödinger form, and a finite-difference eigensolver.
//!
//! Energies in `x` are the physical factorization energies divided by the
//! map constant `d` (4 for the Pöschl–Teller wells with `z = sin^2(x/2)` or
//! `z = -sh^2(x/2)`, 1 for the oscillator with `zeta = x^2`).

use alloc::vec::Vec;

use libm::{cosh, exp, fabs, log, sinh, sqrt};

use crate::darboux::{base_potential, extended_potential, ExtendedPotential};
use crate::error::{Error, Result};
use crate::exactpoly::{ri, to_f64, Poly, Rational, RationalFn};
use crate::seedcat::{
    bose_energy, factorization_energy, ground_energy, hpt_bound_energy, Family, RayIds, SeedSolution, SeedType,
};
use crate::xopgen::GSHeine;

/// Default relative quadrature tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Polynomial with `f64` coefficients for fast sampling.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatPoly(Vec<f64>);

impl FloatPoly {
    pub fn new(p: &Poly) -> Self {
        FloatPoly(p.coeffs().iter().map(to_f64).collect())
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

/// Integration interval of a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    /// `(0, 1)`, weight `xi^a (1 - xi)^b / pi^2`.
    Unit,
    /// `(-inf, 0)`, weight `(-xi)^a (1 - xi)^b / pi^2`.
    Negative,
    /// `(0, inf)`, weight `xi^a exp(-b xi) / pi^2`.
    Positive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpec {
    pub interval: Interval,
    /// Exponent at 0.
    pub a: Rational,
    /// Exponent at 1, or decay rate on `(0, inf)`.
    pub b: Rational,
    pub seed_pi: Poly,
}

impl WeightSpec {
    /// Orthogonality weight of the Heine polynomials sharing `gs`'s gauge.
    pub fn for_heine(gs: &GSHeine) -> Self {
        let interval = match gs.seed.family() {
            Family::Dpt => Interval::Unit,
            Family::Hpt => Interval::Negative,
            Family::Isotonic => Interval::Positive,
        };
        WeightSpec { interval, a: gs.gauge.0.clone(), b: gs.gauge.1.clone(), seed_pi: gs.seed.pi.clone() }
    }

    fn check(&self, degree: usize) -> Result<()> {
        if self.a <= ri(-1) {
            return Err(Error::NonIntegrable("exponent at 0 must exceed -1"));
        }
        let (lo, hi) = match self.interval {
            Interval::Unit => (crate::zerocensus::Bound::At(ri(0)), crate::zerocensus::Bound::At(ri(1))),
            Interval::Negative => (crate::zerocensus::Bound::NegInf, crate::zerocensus::Bound::At(ri(0))),
            Interval::Positive => (crate::zerocensus::Bound::At(ri(0)), crate::zerocensus::Bound::PosInf),
        };
        if self.seed_pi.degree().unwrap_or(0) > 0 && crate::zerocensus::count_roots_in(&self.seed_pi, &lo, &hi) > 0 {
            return Err(Error::NonIntegrable("seed polynomial vanishes inside the interval"));
        }
        match self.interval {
            Interval::Unit if self.b <= ri(-1) => Err(Error::NonIntegrable("exponent at 1 must exceed -1")),
            Interval::Positive if self.b <= ri(0) => Err(Error::NonIntegrable("decay rate must be positive")),
            Interval::Negative => {
                let pd = self.seed_pi.degree().unwrap_or(0) as i64;
                let power = &self.a + &self.b + ri(degree as i64 - 2 * pd);
                if power >= ri(-1) {
                    Err(Error::NonIntegrable("integrand does not decay at -infinity"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

/// Level-by-level tanh-sinh (finite) or exp-sinh (half-line) sums of `f`
/// and `|f|`; `f` receives the abscissa and its distance to the far end.
fn de_quadrature(f: &dyn Fn(f64, f64) -> f64, half_line: bool, tol: f64) -> Result<f64> {
    const MAX_LEVEL: u32 = 12;
    let pi2 = core::f64::consts::FRAC_PI_2;
    let tmax = if half_line { 5.0 } else { 4.5 };
    let mut prev = f64::NAN;
    let mut prev_err = f64::INFINITY;
    for level in 2..=MAX_LEVEL {
        let h = 1.0 / (1u64 << level) as f64;
        let n = (tmax / h) as i64;
        let (mut s, mut sa) = (0.0, 0.0);
        for k in -n..=n {
            let t = k as f64 * h;
            let u = pi2 * sinh(t);
            let (x, far, w) = if half_line {
                let x = exp(u);
                (x, f64::INFINITY, x * pi2 * cosh(t))
            } else {
                let x = 1.0 / (1.0 + exp(-2.0 * u));
                let far = 1.0 / (1.0 + exp(2.0 * u));
                let c = cosh(u);
                (x, far, pi2 * cosh(t) / (2.0 * c * c))
            };
            if w == 0.0 || !w.is_finite() || x == 0.0 || far == 0.0 || !x.is_finite() {
                continue;
            }
            let v = f(x, far) * w;
            if v.is_finite() {
                s += v;
                sa += fabs(v);
            }
        }
        let (s, sa) = (s * h, sa * h);
        let err = fabs(s - prev);
        if err <= tol * sa || sa == 0.0 {
            return Ok(s);
        }
        prev = s;
        prev_err = err;
    }
    Err(Error::ToleranceNotMet { estimate: prev, error: prev_err })
}

/// `int w p q` with endpoint singularities absorbed by the double-exponential
/// maps, which cluster nodes at the ends doubly exponentially.
pub fn weighted_inner(w: &WeightSpec, p: &Poly, q: &Poly, tol: f64) -> Result<f64> {
    w.check(p.degree().unwrap_or(0) + q.degree().unwrap_or(0))?;
    let (fp, fq, fpi) = (FloatPoly::new(p), FloatPoly::new(q), FloatPoly::new(&w.seed_pi));
    let (a, b) = (to_f64(&w.a), to_f64(&w.b));
    let g = |xi: f64| {
        let pi = fpi.eval(xi);
        fp.eval(xi) * fq.eval(xi) / (pi * pi)
    };
    match w.interval {
        Interval::Unit => {
            let f = |x: f64, far: f64| exp(a * log(x) + b * log(far)) * g(x);
            de_quadrature(&f, false, tol)
        }
        Interval::Negative => {
            let f = |x: f64, _: f64| exp(a * log(x) + b * log(1.0 + x)) * g(-x);
            de_quadrature(&f, true, tol)
        }
        Interval::Positive => {
            let f = |x: f64, _: f64| exp(a * log(x) - b * x) * g(x);
            de_quadrature(&f, true, tol)
        }
    }
}

/// Gram matrix of `polys` under `w`.
pub fn gram_matrix(w: &WeightSpec, polys: &[Poly], tol: f64) -> Result<Vec<Vec<f64>>> {
    let n = polys.len();
    let mut g = alloc::vec![alloc::vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = weighted_inner(w, &polys[i], &polys[j], tol)?;
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    Ok(g)
}

/// Largest `|G_ij| / sqrt(G_ii G_jj)` over `i != j`.
pub fn max_offdiag_relative(g: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..g.len() {
        for j in 0..g.len() {
            if i != j {
                worst = worst.max(fabs(g[i][j]) / sqrt(fabs(g[i][i] * g[j][j])));
            }
        }
    }
    worst
}

/// Map constant `d`.
pub fn map_constant(family: Family) -> f64 {
    match family {
        Family::Dpt | Family::Hpt => 4.0,
        Family::Isotonic => 1.0,
    }
}

/// Energy in the Schrödinger variable `x` of a physical factorization energy.
pub fn x_energy(family: Family, physical: &Rational) -> f64 {
    to_f64(physical) / map_constant(family)
}

/// `(xi, 1 - xi, xi'^2)` at `x`, with `1 - xi` computed without cancellation.
pub fn liouville_map(family: Family, x: f64) -> (f64, f64, f64) {
    match family {
        Family::Dpt => {
            let (s, c) = (libm::sin(x / 2.0), libm::cos(x / 2.0));
            let (z, w) = (s * s, c * c);
            (z, w, z * w)
        }
        Family::Hpt => {
            let (s, c) = (sinh(x / 2.0), cosh(x / 2.0));
            let (z, w) = (-s * s, c * c);
            (z, w, s * s * w)
        }
        Family::Isotonic => (x * x, 1.0 - x * x, 4.0 * x * x),
    }
}

/// `V(x)` of a potential stored as `d V(xi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiouvillePotential {
    pub family: Family,
    pub value: RationalFn,
    num: FloatPoly,
    rest: FloatPoly,
    pow0: u32,
    pow1: u32,
}

impl LiouvillePotential {
    pub fn new(family: Family, value: RationalFn) -> Self {
        // Split the denominator as xi^p (1 - xi)^q R so the end-point factors
        // are evaluated from the accurate complements.
        let den = value.den();
        let pow0 = den.root_multiplicity(&ri(0)) as u32;
        let pow1 = den.root_multiplicity(&ri(1)) as u32;
        let ends = &Poly::x().pow(pow0) * &Poly::from_ints(&[1, -1]).pow(pow1);
        let den = den.div_exact(&ends).expect("end-point factors divide the denominator");
        LiouvillePotential { family, num: FloatPoly::new(value.num()), rest: FloatPoly::new(&den), value, pow0, pow1 }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (z, w, _) = liouville_map(self.family, x);
        let den = libm::pow(z, self.pow0 as f64) * libm::pow(w, self.pow1 as f64) * self.rest.eval(z);
        self.num.eval(z) / den / map_constant(self.family)
    }

    /// Natural `x` interval; `None` marks a half-line.
    pub fn domain(&self) -> (f64, Option<f64>) {
        match self.family {
            Family::Dpt => (0.0, Some(core::f64::consts::PI)),
            _ => (0.0, None),
        }
    }
}

/// Schrödinger potential of the ray, or of its Darboux partner.
pub fn liouville_potential(ray: &RayIds, extension: Option<&ExtendedPotential>) -> LiouvillePotential {
    let value = match extension {
        Some(e) => e.value.clone(),
        None => base_potential(ray.family, &ray.lambda0, &ray.second),
    };
    LiouvillePotential::new(ray.family, value)
}

/// Uniform interior grid of `n` points on `(a, b)`, Dirichlet at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub a: f64,
    pub b: f64,
    pub n: usize,
}

impl Grid {
    pub fn step(&self) -> f64 {
        (self.b - self.a) / (self.n + 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.a + (i + 1) as f64 * self.step()
    }

    /// The grid with half the step.
    pub fn refined(&self) -> Grid {
        Grid { n: 2 * self.n + 1, ..*self }
    }
}

/// Default truncation: the finite DPT interval, or the point where the
/// highest requested level of the reference well has decayed below 1e-14.
pub fn default_grid(ray: &RayIds, levels: usize, n: usize) -> Grid {
    let top = levels.saturating_sub(1) as u32;
    let b = match ray.family {
        Family::Dpt => core::f64::consts::PI,
        Family::Hpt => {
            let e = fabs(x_energy(Family::Hpt, &hpt_bound_energy(&ray.lambda0, &ray.second, top)));
            let kappa = sqrt(e).max(0.25);
            (33.0 / kappa).min(400.0)
        }
        Family::Isotonic => {
            let e = to_f64(&bose_energy(ray, SeedType::C, top));
            sqrt(e) + 8.5
        }
    };
    Grid { a: 0.0, b, n }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub grid: Grid,
    pub method: &'static str,
}

/// Number of eigenvalues below `s` of the tridiagonal matrix with diagonal
/// `d` and constant off-diagonal `e` (Sturm count).
fn count_below(d: &[f64], e2: f64, s: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, di) in d.iter().enumerate() {
        q = di - s - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = f64::EPSILON * (fabs(*di) + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `k` eigenvalues of `-D^2 + V` on a single grid, by bisection.
pub fn fd_raw(v: &dyn Fn(f64) -> f64, grid: &Grid, k: usize) -> Vec<f64> {
    let h = grid.step();
    let inv = 1.0 / (h * h);
    let d: Vec<f64> = (0..grid.n).map(|i| 2.0 * inv + v(grid.point(i))).collect();
    let lo0 = d.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * inv;
    let hi0 = d.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 2.0 * inv;
    let e2 = inv * inv;
    let mut out = Vec::with_capacity(k);
    for j in 0..k.min(grid.n) {
        let (mut lo, mut hi) = (lo0, hi0);
        while hi - lo > 1e-13 * (1.0 + fabs(lo) + fabs(hi)) {
            let mid = 0.5 * (lo + hi);
            if count_below(&d, e2, mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Lowest `k` eigenvalues with Richardson extrapolation over `grid` and its
/// refinement; errors when the extrapolated and fine values differ by more
/// than `tol` relative.
pub fn fd_eigenvalues(v: &dyn Fn(f64) -> f64, grid: &Grid, k: usize, tol: f64) -> Result<Spectrum> {
    let coarse = fd_raw(v, grid, k);
    let fine_grid = grid.refined();
    let fine = fd_raw(v, &fine_grid, k);
    let mut eigenvalues = Vec::with_capacity(k);
    let mut spread: f64 = 0.0;
    for (c, f) in coarse.iter().zip(&fine) {
        let r = (4.0 * f - c) / 3.0;
        spread = spread.max(fabs(r - f) / fabs(r).max(1.0));
        eigenvalues.push(r);
    }
    if spread > tol {
        return Err(Error::GridTooCoarse(spread));
    }
    Ok(Spectrum { eigenvalues, grid: fine_grid, method: "fd3-richardson" })
}

/// Spectrum of a Liouville potential; for the hyperbolic well only bound
/// (negative) levels are kept.
pub fn potential_spectrum(pot: &LiouvillePotential, grid: &Grid, k: usize, tol: f64) -> Result<Spectrum> {
    let mut s = fd_eigenvalues(&|x| pot.eval(x), grid, k, tol)?;
    if pot.family == Family::Hpt {
        s.eigenvalues.retain(|e| *e < 0.0);
    }
    Ok(s)
}

/// Eigenvector of the single-grid matrix near `eig` by inverse iteration.
pub fn fd_eigenvector(v: &dyn Fn(f64) -> f64, grid: &Grid, eig: f64) -> Vec<f64> {
    let h = grid.step();
    let inv = 1.0 / (h * h);
    let n = grid.n;
    let shift = eig - 1e-9 * (1.0 + fabs(eig));
    let d: Vec<f64> = (0..n).map(|i| 2.0 * inv + v(grid.point(i)) - shift).collect();
    let mut y = alloc::vec![1.0; n];
    for _ in 0..3 {
        // Thomas algorithm for the constant off-diagonal -inv.
        let mut c = alloc::vec![0.0; n];
        let mut r = alloc::vec![0.0; n];
        c[0] = -inv / d[0];
        r[0] = y[0] / d[0];
        for i in 1..n {
            let m = d[i] + inv * c[i - 1];
            c[i] = -inv / m;
            r[i] = (y[i] + inv * r[i - 1]) / m;
        }
        for i in (0..n - 1).rev() {
            r[i] -= c[i] * r[i + 1];
        }
        let norm = sqrt(r.iter().map(|x| x * x).sum::<f64>());
        y = r.into_iter().map(|x| x / norm).collect();
    }
    y
}

/// Sign changes of a sampled function, ignoring negligible samples.
pub fn node_count(y: &[f64]) -> usize {
    let cut = 1e-8 * y.iter().fold(0.0f64, |m, x| m.max(fabs(*x)));
    let mut last = 0.0;
    let mut n = 0;
    for &v in y {
        if fabs(v) > cut {
            if last * v < 0.0 {
                n += 1;
            }
            last = v;
        }
    }
    n
}

/// Closed-form `x` energies of the lowest `k` levels of the reference well
/// (bound levels only for the hyperbolic well).
pub fn base_x_energies(ray: &RayIds, k: usize) -> Vec<f64> {
    (0..k as u32)
        .filter_map(|v| match ray.family {
            Family::Hpt => {
                let s = &ray.second - &ray.lambda0 - ri(2 * v as i64 + 1);
                (s > ri(0)).then(|| x_energy(Family::Hpt, &hpt_bound_energy(&ray.lambda0, &ray.second, v)))
            }
            f => Some(x_energy(f, &bose_energy(ray, SeedType::C, v))),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsospectralityReport {
    pub base: Vec<f64>,
    pub extended: Vec<f64>,
    /// Seed level expected below the ground state (type d), in `x` units.
    pub inserted: Option<f64>,
    /// Largest relative deviation over the compared levels.
    pub max_rel_dev: f64,
    pub levels_compared: usize,
    pub pass: bool,
}

/// Compare FD spectra of the reference well and its Darboux partner.
/// Type-d seeds must add exactly one level at the seed energy.
pub fn isospectrality_check(seed: &SeedSolution, levels: usize, grid: &Grid, tol: f64) -> Result<IsospectralityReport> {
    let ray = &seed.ray;
    let ext = extended_potential(seed)?;
    let base_pot = liouville_potential(ray, None);
    let ext_pot = liouville_potential(ray, Some(&ext));
    let inserted_type = matches!(seed.stype, SeedType::D) && ray.family != Family::Hpt;
    let k_ext = levels + usize::from(inserted_type);
    let base = potential_spectrum(&base_pot, grid, levels, 1e-3)?.eigenvalues;
    let extended = potential_spectrum(&ext_pot, grid, k_ext, 1e-3)?.eigenvalues;
    let inserted = inserted_type.then(|| x_energy(ray.family, &factorization_energy(ray, seed.stype, seed.m).unwrap_or_default()));
    let rel = |a: f64, b: f64| fabs(a - b) / fabs(b).max(1e-300);
    let mut max_rel_dev: f64 = 0.0;
    let mut compared = 0;
    let shifted = if inserted_type { &extended[1.min(extended.len())..] } else { &extended[..] };
    if let Some(e) = inserted {
        match extended.first() {
            Some(x) => max_rel_dev = max_rel_dev.max(rel(*x, e)),
            None => max_rel_dev = f64::INFINITY,
        }
    }
    for (b, e) in base.iter().zip(shifted) {
        max_rel_dev = max_rel_dev.max(rel(*e, *b));
        compared += 1;
    }
    let same_count = shifted.len() == base.len();
    let pass = same_count && compared >= levels.min(base.len()) && max_rel_dev <= tol;
    Ok(IsospectralityReport { base, extended, inserted, max_rel_dev, levels_compared: compared, pass })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfluentReport {
    pub iotas: Vec<f64>,
    /// `(iota/2) [E(lambda0, nu0/iota) - E_ground]` along the sequence.
    pub scaled_shifts: Vec<f64>,
    pub extrapolated: f64,
    /// Isotonic shift, halved as in the shift-to-ground convention.
    pub target: f64,
    pub observed_order: f64,
    pub pass: bool,
}

/// DPT energy shifts with `mu0 = nu0/iota` against the isotonic shift as
/// `iota -> 0` along `1/4, 1/8, ...`.
pub fn confluent_limit_check(lambda0: &Rational, nu0: &Rational, stype: SeedType, m: u32) -> Result<ConfluentReport> {
    if !matches!(stype, SeedType::A | SeedType::B | SeedType::D) {
        return Err(Error::FamilyMismatch);
    }
    let iso = RayIds::isotonic(lambda0.clone());
    let target = to_f64(&((bose_energy(&iso, stype, m) - ground_energy(&iso)) * ri(1) / ri(2))) * to_f64(nu0);
    let mut iotas = Vec::new();
    let mut vals = Vec::new();
    for j in 2..8u32 {
        let iota = Rational::new(1.into(), (1i64 << j).into());
        let ray = RayIds::dpt(lambda0.clone(), nu0 / &iota);
        let shift = bose_energy(&ray, stype, m) - ground_energy(&ray);
        iotas.push(to_f64(&iota));
        vals.push(to_f64(&(shift * &iota / ri(2))));
    }
    let n = vals.len();
    let errs: Vec<f64> = vals.iter().map(|v| fabs(v - target)).collect();
    let observed_order = if errs[n - 1] == 0.0 || errs[n - 2] == 0.0 {
        f64::INFINITY
    } else {
        log(errs[n - 2] / errs[n - 1]) / log(2.0)
    };
    let extrapolated = 2.0 * vals[n - 1] - vals[n - 2];
    let pass = observed_order >= 1.0 - 1e-9 && fabs(extrapolated - target) <= 1e-9 * (1.0 + fabs(target));
    Ok(ConfluentReport { iotas, scaled_shifts: vals, extrapolated, target, observed_order, pass })
}

/// Eigenfunction `psi(x)` of the partner problem assembled from a Heine
/// member: `|xi|^((1+a)/2) (1-xi)^((1+b)/2) F / (pi sqrt(xi'))` (isotonic:
/// `exp(-b zeta/2)` for the second factor).
pub fn heine_eigenfunction(gs: &GSHeine) -> impl Fn(f64) -> f64 {
    let family = gs.seed.family();
    let (a, b) = (to_f64(&gs.gauge.0), to_f64(&gs.gauge.1));
    let f = FloatPoly::new(&gs.monic);
    let pi = FloatPoly::new(&gs.seed.pi);
    move |x: f64| {
        let (z, w, zp2) = liouville_map(family, x);
        let az = fabs(z);
        let second = match family {
            Family::Isotonic => exp(-b * z / 2.0),
            _ => libm::pow(w, (1.0 + b) / 2.0),
        };
        libm::pow(az, (1.0 + a) / 2.0) * second * f.eval(z) / (pi.eval(z) * libm::pow(zp2, 0.25))
    }
}

/// Largest pointwise relative residual of `-psi'' + (V - eps) psi` on the
/// interior points, with a five-point second difference of step `h`.
pub fn schrodinger_residual(psi: &dyn Fn(f64) -> f64, pot: &LiouvillePotential, eps: f64, xs: &[f64], h: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for &x in xs {
        let d2 = (-psi(x + 2.0 * h) + 16.0 * psi(x + h) - 30.0 * psi(x) + 16.0 * psi(x - h) - psi(x - 2.0 * h))
            / (12.0 * h * h);
        let p = psi(x);
        let v = pot.eval(x);
        let r = -d2 + (v - eps) * p;
        let scale = fabs(d2) + fabs(v * p) + fabs(eps * p);
        if scale > 0.0 {
            worst = worst.max(fabs(r) / scale);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{jacobi_poly, rat, y_to_z};
    use crate::seedcat::make_seed;

    #[test]
    fn legendre_orthogonality() {
        let w = WeightSpec { interval: Interval::Unit, a: ri(0), b: ri(0), seed_pi: Poly::one() };
        let p1 = y_to_z(&jacobi_poly(1, &ri(0), &ri(0)));
        let p2 = y_to_z(&jacobi_poly(2, &ri(0), &ri(0)));
        assert!(fabs(weighted_inner(&w, &p1, &p2, DEFAULT_TOL).unwrap()) < 1e-12);
        let n = weighted_inner(&w, &p1, &p1, DEFAULT_TOL).unwrap();
        assert!(fabs(n - 1.0 / 3.0) < 1e-13);
    }

    #[test]
    fn singular_endpoint_weight() {
        // int_0^1 z^(-1/2) (1-z)^(-1/2) = pi
        let w = WeightSpec { interval: Interval::Unit, a: rat(-1, 2), b: rat(-1, 2), seed_pi: Poly::one() };
        let v = weighted_inner(&w, &Poly::one(), &Poly::one(), DEFAULT_TOL).unwrap();
        assert!(fabs(v - core::f64::consts::PI) < 1e-12);
        // int_0^inf z^(1/2) e^(-z) = sqrt(pi)/2
        let w = WeightSpec { interval: Interval::Positive, a: rat(1, 2), b: ri(1), seed_pi: Poly::one() };
        let v = weighted_inner(&w, &Poly::one(), &Poly::one(), DEFAULT_TOL).unwrap();
        assert!(fabs(v - sqrt(core::f64::consts::PI) / 2.0) < 1e-12);
        // int_-inf^0 (1-z)^-3 = 1/2
        let w = WeightSpec { interval: Interval::Negative, a: ri(0), b: ri(-3), seed_pi: Poly::one() };
        let v = weighted_inner(&w, &Poly::one(), &Poly::one(), DEFAULT_TOL).unwrap();
        assert!(fabs(v - 0.5) < 1e-12);
        let w = WeightSpec { interval: Interval::Unit, a: ri(-1), b: ri(0), seed_pi: Poly::one() };
        assert!(matches!(weighted_inner(&w, &Poly::one(), &Poly::one(), DEFAULT_TOL), Err(Error::NonIntegrable(_))));
    }

    #[test]
    fn liouville_near_origin() {
        let ray = RayIds::dpt(ri(2), ri(3));
        let pot = liouville_potential(&ray, None);
        let x = 1e-3;
        assert!(fabs(pot.eval(x) * x * x - (4.0 - 0.25)) < 1e-5);
        let iso = liouville_potential(&RayIds::isotonic(rat(5, 2)), None);
        assert!(fabs(iso.eval(2.0) - (6.0 / 4.0 + 4.0)) < 1e-12);
    }

    #[test]
    fn dpt_base_spectrum() {
        let ray = RayIds::dpt(ri(2), ri(3));
        let grid = default_grid(&ray, 4, 4000);
        let s = potential_spectrum(&liouville_potential(&ray, None), &grid, 4, 1e-4).unwrap();
        for (e, x) in s.eigenvalues.iter().zip([9.0, 16.0, 25.0, 36.0]) {
            assert!(fabs(e - x) / x < 1e-6, "{e} vs {x}");
        }
        assert_eq!(base_x_energies(&ray, 4), alloc::vec![9.0, 16.0, 25.0, 36.0]);
    }

    #[test]
    fn node_counts() {
        let ray = RayIds::dpt(ri(2), ri(3));
        let grid = default_grid(&ray, 4, 2000);
        let pot = liouville_potential(&ray, None);
        let v = |x: f64| pot.eval(x);
        for (k, e) in fd_raw(&v, &grid, 4).into_iter().enumerate() {
            assert_eq!(node_count(&fd_eigenvector(&v, &grid, e)), k);
        }
    }

    #[test]
    fn confluent_examples() {
        for (l, t, m, target) in [(rat(5, 2), SeedType::A, 1, -9.0), (rat(5, 2), SeedType::B, 1, -3.0), (rat(7, 2), SeedType::D, 2, -6.0)] {
            let r = confluent_limit_check(&l, &ri(1), t, m).unwrap();
            assert_eq!(r.target, target);
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn eigenfunction_residual_small() {
        let ray = RayIds::dpt(rat(5, 2), rat(7, 2));
        let seed = make_seed(&ray, SeedType::A, 1).unwrap();
        let gs = crate::xopgen::gs_heine(&seed, SeedType::C, 2).unwrap();
        let pot = liouville_potential(&ray, Some(&extended_potential(&seed).unwrap()));
        let psi = heine_eigenfunction(&gs);
        let eps = to_f64(&gs.energy) / 4.0;
        let xs: Vec<f64> = (1..20).map(|i| i as f64 * 0.15).collect();
        assert!(schrodinger_residual(&psi, &pot, eps, &xs, 1e-3) < 1e-6);
    }
}
