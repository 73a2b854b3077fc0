//! Baseline key equation solvers built on the textbook extended Euclidean
//! algorithm: the errors-only recursion and the three-step
//! errors-and-erasures variant. These run a *data-dependent* number of
//! division steps and serve as behavioral oracles for the fixed-iteration
//! solvers in [`crate::kes::modified`].

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::poly::Poly;

/// One recorded state of the Euclidean recursion.
#[derive(Debug, Clone)]
pub struct EeaStep {
    /// Index j of this state.
    pub j: usize,
    pub v: Poly,
    pub x: Poly,
    /// Quotient of v^(j-1) by v^(j); `None` on rows where no division ran
    /// (the initial rows and the final one).
    pub quotient: Option<Poly>,
    /// deg v^(j); `None` for the zero polynomial.
    pub degree: Option<usize>,
}

/// Full history of one Euclidean run. Degrees decrease strictly from
/// d_0 = 2t down to the stopping index k.
#[derive(Debug, Clone)]
pub struct EeaTrace {
    pub steps: Vec<EeaStep>,
    /// Stopping index: the first j whose degree is below the threshold.
    pub k: usize,
    /// True when the run ended because the remainder vanished entirely.
    pub stopped_on_zero: bool,
}

impl EeaTrace {
    /// Number of division steps executed (at most 2t, data dependent).
    pub fn division_count(&self) -> usize {
        self.steps.iter().filter(|s| s.quotient.is_some()).count()
    }

    pub fn degrees(&self) -> Vec<Option<usize>> {
        self.steps.iter().map(|s| s.degree).collect()
    }
}

/// Output of a classic solver run: a scalar multiple of the canonical
/// locator/evaluator pair, plus the recursion history.
#[derive(Debug, Clone)]
pub struct ClassicOutput {
    pub lambda: Poly,
    pub omega: Poly,
    pub trace: EeaTrace,
}

/// Euclidean recursion on (v0, v1) with Bezout registers (x0, x1), dividing
/// while `keep_going(deg v_j)` holds. Returns the state at the stopping
/// index.
fn eea_loop(
    field: &Field,
    v0: Poly,
    v1: Poly,
    x0: Poly,
    x1: Poly,
    keep_going: impl Fn(Option<usize>) -> bool,
) -> Result<ClassicOutput> {
    let mut steps = vec![
        EeaStep {
            j: 0,
            degree: v0.degree(),
            v: v0.clone(),
            x: x0.clone(),
            quotient: None,
        },
        EeaStep {
            j: 1,
            degree: v1.degree(),
            v: v1.clone(),
            x: x1.clone(),
            quotient: None,
        },
    ];
    let (mut v_prev, mut v_cur) = (v0, v1);
    let (mut x_prev, mut x_cur) = (x0, x1);
    let mut j = 1;
    while keep_going(v_cur.degree()) {
        let (q, r) = v_prev.divmod(&v_cur, field)?;
        // Subtraction is addition in characteristic 2.
        let x_next = x_prev.add(&q.mul(&x_cur, field));
        j += 1;
        steps.last_mut().expect("nonempty").quotient = Some(q);
        steps.push(EeaStep {
            j,
            degree: r.degree(),
            v: r.clone(),
            x: x_next.clone(),
            quotient: None,
        });
        v_prev = v_cur;
        v_cur = r;
        x_prev = x_cur;
        x_cur = x_next;
    }
    let stopped_on_zero = v_cur.is_zero();
    Ok(ClassicOutput {
        lambda: x_cur,
        omega: v_cur,
        trace: EeaTrace {
            steps,
            k: j,
            stopped_on_zero,
        },
    })
}

fn check_syndromes(t: usize, s: &Poly) -> Result<()> {
    if s.degree() >= Some(2 * t) {
        return Err(Error::SyndromeTooLong(2 * t));
    }
    Ok(())
}

/// Errors-only solver: start from (z^2t, S(z)) and divide while
/// deg v >= t. The output pair is (beta Lambda, beta Omega) for some
/// nonzero scalar beta.
pub fn eea_errors_only(field: &Field, t: usize, s: &Poly) -> Result<ClassicOutput> {
    check_syndromes(t, s)?;
    eea_loop(
        field,
        Poly::monomial(2 * t),
        s.trimmed(),
        Poly::zero(),
        Poly::one(),
        |deg| deg >= Some(t),
    )
}

/// Erasure-locator polynomial: prod over locations of (1 - X z).
/// Locations must be nonzero and distinct.
pub fn erasure_locator(field: &Field, locations: &[Gf]) -> Result<Poly> {
    let mut lambda = Poly::one();
    for (i, &x) in locations.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::ZeroErasureLocation);
        }
        if locations[..i].contains(&x) {
            return Err(Error::DuplicateErasureLocation(x.0));
        }
        lambda = lambda.mul(&Poly::from_coeffs(vec![Gf::ONE, x]), field);
    }
    Ok(lambda)
}

/// Modified syndrome polynomial: Lambda_eps(z) S(z) mod z^2t.
pub fn modified_syndrome(field: &Field, s: &Poly, erasure_loc_poly: &Poly, t: usize) -> Poly {
    erasure_loc_poly.mul(s, field).mod_xk(2 * t)
}

/// Errors-and-erasures solver with the erasure locator embedded into the
/// Bezout register initialization, so the output locator is already the
/// errata locator Lambda_e(z) Lambda_eps(z). Divide while
/// deg v >= t + mu/2, evaluated in integers as 2 deg v >= 2t + mu.
pub fn eea_errors_erasures(
    field: &Field,
    t: usize,
    s: &Poly,
    erasure_locations: &[Gf],
) -> Result<ClassicOutput> {
    let (lambda_eps, s_hat, mu) = ee_setup(field, t, s, erasure_locations)?;
    eea_loop(
        field,
        Poly::monomial(2 * t),
        s_hat,
        Poly::zero(),
        lambda_eps,
        move |deg| matches!(deg, Some(d) if 2 * d >= 2 * t + mu),
    )
}

/// The unembedded variant: Bezout registers start from (0, 1), and the
/// errata locator is formed by an explicit final multiply with
/// Lambda_eps(z). Retained so traces of both routes can be compared.
pub fn eea_errors_erasures_explicit(
    field: &Field,
    t: usize,
    s: &Poly,
    erasure_locations: &[Gf],
) -> Result<ClassicOutput> {
    let (lambda_eps, s_hat, mu) = ee_setup(field, t, s, erasure_locations)?;
    let mut out = eea_loop(
        field,
        Poly::monomial(2 * t),
        s_hat,
        Poly::zero(),
        Poly::one(),
        move |deg| matches!(deg, Some(d) if 2 * d >= 2 * t + mu),
    )?;
    out.lambda = out.lambda.mul(&lambda_eps, field);
    Ok(out)
}

fn ee_setup(
    field: &Field,
    t: usize,
    s: &Poly,
    erasure_locations: &[Gf],
) -> Result<(Poly, Poly, usize)> {
    check_syndromes(t, s)?;
    let mu = erasure_locations.len();
    if mu > 2 * t {
        return Err(Error::TooManyErasures { mu, budget: 2 * t });
    }
    let lambda_eps = erasure_locator(field, erasure_locations)?;
    let s_hat = modified_syndrome(field, s, &lambda_eps, t);
    Ok((lambda_eps, s_hat, mu))
}
