//! Dilatations of the `w_{2k}` family and their normalized entropies.
//!
//! `λ(w_{4n+8})` is the largest root of
//! `t^{6n+9} - 2t^{5n+8} - 2t^{5n+7} + 3t^{4n+6} + 3t^{2n+3} - 2t^{n+2} - 2t^{n+1} + 1`,
//! `λ(w_{4n+6})` equals it, and `λ(w_6) = κ` is the largest root of
//! `t^4 - 2t^3 - 2t^2 - 2t + 1`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::linalg::{largest_real_root, refine, IntPoly, RootBracket};
use crate::{Error, Result};

/// Largest `n` whose family root is isolated by a full Sturm sequence;
/// beyond it the sparse Descartes certificate is used.
pub const STURM_MAX_N: usize = 20;

pub fn family_polynomial(n: usize) -> IntPoly {
    IntPoly::from_terms(&[
        (6 * n + 9, 1),
        (5 * n + 8, -2),
        (5 * n + 7, -2),
        (4 * n + 6, 3),
        (2 * n + 3, 3),
        (n + 2, -2),
        (n + 1, -2),
        (0, 1),
    ])
}

/// `t^4 - 2t^3 - 2t^2 - 2t + 1`.
pub fn kappa_polynomial() -> IntPoly {
    IntPoly::from_i64(&[1, -2, -2, -2, 1])
}

/// `(1+√5)/2 + √(2+2√5)/2`.
pub fn kappa_closed_form() -> f64 {
    let r5 = 5f64.sqrt();
    (1.0 + r5) / 2.0 + (2.0 + 2.0 * r5).sqrt() / 2.0
}

/// `a + b√5` with integer `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ZSqrt5 {
    a: i64,
    b: i64,
}

impl ZSqrt5 {
    fn mul(self, o: ZSqrt5) -> ZSqrt5 {
        ZSqrt5 {
            a: self.a * o.a + 5 * self.b * o.b,
            b: self.a * o.b + self.b * o.a,
        }
    }

    fn add(self, o: ZSqrt5) -> ZSqrt5 {
        ZSqrt5 {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

/// Expands `(t² - (1+√5)t + 1)(t² - (1-√5)t + 1)` in `Z[√5][t]` and
/// compares with the quartic.
pub fn kappa_factorization_holds() -> bool {
    let z = |a, b| ZSqrt5 { a, b };
    let f = [z(1, 0), z(-1, -1), z(1, 0)];
    let g = [z(1, 0), z(-1, 1), z(1, 0)];
    let mut prod = [z(0, 0); 5];
    for (i, x) in f.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            prod[i + j] = prod[i + j].add(x.mul(*y));
        }
    }
    let target = [1, -2, -2, -2, 1];
    prod.iter().zip(target).all(|(c, t)| c.b == 0 && c.a == t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KappaReport {
    pub bracket: RootBracket,
    pub closed_form: f64,
    pub closed_form_in_bracket: bool,
    pub factorization_holds: bool,
}

pub fn kappa(tol: f64) -> Result<KappaReport> {
    let bracket = largest_real_root(&kappa_polynomial(), tol)?;
    let closed_form = kappa_closed_form();
    Ok(KappaReport {
        closed_form_in_bracket: bracket.contains(closed_form),
        closed_form,
        factorization_holds: kappa_factorization_holds(),
        bracket,
    })
}

/// How a family root was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Sturm-sequence isolation of the largest root.
    Sturm,
    /// Descartes' rule (four sign variations), the double root at 1 and the
    /// palindromic symmetry leave exactly one root above 1; an exact sign
    /// change brackets it.
    Descartes,
}

impl Certificate {
    pub fn name(self) -> &'static str {
        match self {
            Certificate::Sturm => "sturm",
            Certificate::Descartes => "descartes",
        }
    }
}

/// `p(t)/t^{deg}` in floating point, stable for `t > 1` at any degree.
fn scaled_family_f64(n: usize, t: f64) -> f64 {
    let d = (6 * n + 9) as f64;
    let l = t.ln();
    let term = |e: usize| (-(d - e as f64) * l).exp();
    1.0 - 2.0 * term(5 * n + 8) - 2.0 * term(5 * n + 7)
        + 3.0 * term(4 * n + 6)
        + 3.0 * term(2 * n + 3)
        - 2.0 * term(n + 2)
        - 2.0 * term(n + 1)
        + term(0)
}

/// The root `λ > 1` of `family_polynomial(n)` via the sparse certificate.
pub fn family_root_descartes(n: usize, tol: f64) -> Result<RootBracket> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let p = family_polynomial(n);
    let one = BigRational::from_integer(BigInt::from(1));
    let certified = p.sign_variations() == 4
        && p.is_palindromic()
        && p.sign_at(&one) == Sign::NoSign
        && p.derivative().sign_at(&one) == Sign::NoSign;
    if !certified {
        return Err(Error::domain(format!(
            "root certificate failed for n = {n}"
        )));
    }
    // On (1, λ) the polynomial is negative, beyond λ positive.
    let mut lo = (0.3 / (n as f64 + 1.0)).exp();
    let mut hi = 3.0;
    if !(scaled_family_f64(n, lo) < 0.0 && scaled_family_f64(n, hi) > 0.0) {
        return Err(Error::domain(format!("no sign change found for n = {n}")));
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if scaled_family_f64(n, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Widen slightly so the exact signs are unambiguous, then certify.
    let pad = tol / 8.0;
    let lo_q = BigRational::from_float(lo - pad).unwrap();
    let hi_q = BigRational::from_float(hi + pad).unwrap();
    if lo_q <= one || p.sign_at(&lo_q) != Sign::Minus || p.sign_at(&hi_q) != Sign::Plus {
        return Err(Error::domain(format!(
            "exact sign check failed for n = {n}"
        )));
    }
    let tol_q = BigRational::from_float(tol).unwrap();
    let bracket = refine(&p, lo_q, hi_q, &tol_q)?;
    Ok(RootBracket {
        polynomial: p,
        ..bracket
    })
}

/// `λ(w_{4n+8})` with the certificate used.
pub fn family_root(n: usize, tol: f64) -> Result<(RootBracket, Certificate)> {
    if n <= STURM_MAX_N {
        Ok((
            largest_real_root(&family_polynomial(n), tol)?,
            Certificate::Sturm,
        ))
    } else {
        Ok((family_root_descartes(n, tol)?, Certificate::Descartes))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DilatationResult {
    /// Strand count `2k`.
    pub strands: usize,
    /// Family parameter; `None` for `w_6`.
    pub n: Option<usize>,
    pub polynomial: IntPoly,
    pub lambda: RootBracket,
    pub certificate: Certificate,
    pub log_lambda: f64,
    /// `(2k - 2) · log λ`.
    pub normalized_entropy: f64,
}

/// Family parameter for a strand count, `None` for 6 strands.
pub fn family_parameter(strands: usize) -> Result<Option<usize>> {
    if strands % 2 != 0 || strands < 6 {
        return Err(Error::domain(format!(
            "strand count must be even and at least 6, got {strands}"
        )));
    }
    Ok(match strands {
        6 => None,
        s if s % 4 == 0 => Some((s - 8) / 4),
        s => Some((s - 6) / 4),
    })
}

/// `λ(w_{2k})` for `2k = strands`.
pub fn dilatation(strands: usize, tol: f64) -> Result<DilatationResult> {
    let n = family_parameter(strands)?;
    let (lambda, certificate) = match n {
        None => (
            largest_real_root(&kappa_polynomial(), tol)?,
            Certificate::Sturm,
        ),
        Some(n) => family_root(n, tol)?,
    };
    let log_lambda = lambda.value.ln();
    Ok(DilatationResult {
        strands,
        n,
        polynomial: lambda.polynomial.clone(),
        normalized_entropy: (strands - 2) as f64 * log_lambda,
        log_lambda,
        certificate,
        lambda,
    })
}

/// Penner's lower bound `log 2 / (4m - 12)` for `m` punctures.
pub fn penner_bound(strands: usize) -> f64 {
    std::f64::consts::LN_2 / (4.0 * strands as f64 - 12.0)
}

pub fn penner_holds(strands: usize, lambda: f64) -> bool {
    lambda.ln() >= penner_bound(strands)
}

pub fn penner_check(strands: usize, tol: f64) -> Result<bool> {
    let d = dilatation(strands, tol)?;
    Ok(penner_holds(strands, d.lambda.value))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: usize,
    /// `4n + 8`.
    pub strands_high: usize,
    /// `4n + 6`, absent for `n = 0`.
    pub strands_low: Option<usize>,
    pub lambda: RootBracket,
    pub certificate: Certificate,
    /// `(4n + 6) · log λ`.
    pub normalized_entropy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub w6: DilatationResult,
    /// Rows for `n = 0, …, n_max`; `n = 0` is `w_8`.
    pub rows: Vec<TableRow>,
}

pub fn reproduce_table(n_max: usize, tol: f64) -> Result<Table> {
    let w6 = dilatation(6, tol)?;
    let rows = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let (lambda, certificate) = family_root(n, tol)?;
            Ok(TableRow {
                n,
                strands_high: 4 * n + 8,
                strands_low: (n >= 1).then_some(4 * n + 6),
                normalized_entropy: (4 * n + 6) as f64 * lambda.value.ln(),
                certificate,
                lambda,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { w6, rows })
}

/// `x` cut (not rounded) to `digits` decimals.
pub fn truncate_decimals(x: f64, digits: usize) -> String {
    let s = format!("{x:.*}", digits + 6);
    match s.find('.') {
        Some(dot) => s[..dot + 1 + digits].to_string(),
        None => s,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub lambda: f64,
    /// `(4n + 6) · log λ(w_{4n+8})`.
    pub entropy: f64,
    /// `|entropy - 4 log κ|`.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    /// `4 log κ`.
    pub limit: f64,
    pub rows: Vec<ConvergenceRow>,
    pub gap_strictly_decreasing: bool,
    pub lambda_strictly_decreasing: bool,
    pub entropy_above_limit: bool,
    /// Least `n` with `λ - 1 < 0.01`, if reached.
    pub first_n_lambda_within_0_01: Option<usize>,
}

pub fn four_log_kappa(tol: f64) -> Result<f64> {
    Ok(4.0 * largest_real_root(&kappa_polynomial(), tol)?.value.ln())
}

pub fn convergence_row(n: usize, limit: f64, tol: f64) -> Result<ConvergenceRow> {
    let (lambda, _) = family_root(n, tol)?;
    let entropy = (4 * n + 6) as f64 * lambda.value.ln();
    Ok(ConvergenceRow {
        n,
        lambda: lambda.value,
        entropy,
        gap: (entropy - limit).abs(),
    })
}

/// Entropy series for the given parameters, in the given order.
pub fn convergence_series(ns: &[usize], tol: f64) -> Result<ConvergenceReport> {
    let limit = four_log_kappa(tol)?;
    let rows = ns
        .par_iter()
        .map(|&n| convergence_row(n, limit, tol))
        .collect::<Result<Vec<_>>>()?;
    let gap_strictly_decreasing = rows.windows(2).all(|w| w[1].gap < w[0].gap);
    let lambda_strictly_decreasing = rows.windows(2).all(|w| w[1].lambda < w[0].lambda);
    let entropy_above_limit = rows.iter().all(|r| r.entropy > limit);
    let first_n_lambda_within_0_01 = rows.iter().find(|r| r.lambda - 1.0 < 0.01).map(|r| r.n);
    Ok(ConvergenceReport {
        limit,
        rows,
        gap_strictly_decreasing,
        lambda_strictly_decreasing,
        entropy_above_limit,
        first_n_lambda_within_0_01,
    })
}

/// Series for `n = 0, …, n_max`.
pub fn convergence_report(n_max: usize, tol: f64) -> Result<ConvergenceReport> {
    let ns: Vec<usize> = (0..=n_max).collect();
    convergence_series(&ns, tol)
}

/// Reciprocal-root check: `1/λ` is a root too, since the coefficient list
/// reads the same reversed.
pub fn reciprocal_symmetric(n: usize) -> bool {
    let p = family_polynomial(n);
    p.reversed() == p && !p.coeffs().iter().all(Zero::is_zero)
}
