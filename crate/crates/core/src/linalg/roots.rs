//! Certified isolation of the largest real root via Sturm sequences.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::poly::IntPoly;
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;

/// An interval `[low, high]` holding exactly one real root of `polynomial`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootBracket {
    pub polynomial: IntPoly,
    pub low: BigRational,
    pub high: BigRational,
    pub value: f64,
}

impl RootBracket {
    pub fn width(&self) -> BigRational {
        &self.high - &self.low
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn low_f64(&self) -> f64 {
        self.low.to_f64().unwrap_or(f64::NAN)
    }

    pub fn high_f64(&self) -> f64 {
        self.high.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_exact(&self) -> bool {
        self.low == self.high
    }

    /// Whether `x` lies in the closed bracket, compared exactly.
    pub fn contains(&self, x: f64) -> bool {
        match BigRational::from_float(x) {
            Some(r) => self.low <= r && r <= self.high,
            None => false,
        }
    }
}

/// The Sturm chain `p, p', -rem(p, p'), …` of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<IntPoly>,
}

impl SturmSequence {
    /// Builds the chain with sign-preserving primitive pseudo-remainders.
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return SturmSequence { chain };
        }
        chain.push(d.primitive_part());
        loop {
            let n = chain.len();
            let r = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push((-r).primitive_part());
        }
        SturmSequence { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The last element, a constant multiple of `gcd(p, p')`.
    pub fn last(&self) -> &IntPoly {
        self.chain.last().unwrap()
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut count = 0;
        let mut prev = Sign::NoSign;
        for s in signs {
            if s == Sign::NoSign {
                continue;
            }
            if prev != Sign::NoSign && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|q| q.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|q| q.leading().unwrap().sign()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|q| {
            let s = q.leading().unwrap().sign();
            if q.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_between(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct real roots greater than `a`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at_pos_inf()
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Cauchy bound `1 + max|c_i| / |lead|`; every root lies strictly inside
/// `(-B, B)`.
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let deg = p.degree().unwrap();
    let max = p.coeffs()[..deg]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigRational::one() + BigRational::new(max, lead)
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

fn check_tol(tol: f64) -> Result<BigRational> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(BigRational::from_float(tol).unwrap())
}

/// Greatest real root of `p`, bracketed to width at most `tol`.
pub fn largest_real_root(p: &IntPoly, tol: f64) -> Result<RootBracket> {
    let tol_q = check_tol(tol)?;
    match p.degree() {
        None => return Err(Error::domain("the zero polynomial has no isolated roots")),
        Some(0) => return Err(Error::NoRealRoot),
        _ => {}
    }
    let q = p.squarefree_part();
    let sturm = SturmSequence::new(&q);
    if sturm.count_real() == 0 {
        return Err(Error::NoRealRoot);
    }
    let bound = cauchy_bound(&q);
    let mut lo = -bound.clone();
    let mut hi = bound;
    // Shrink until (lo, hi] holds only the largest root.
    while sturm.count_above(&lo) > 1 {
        let mid = midpoint(&lo, &hi);
        if sturm.count_above(&mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let bracket = refine(&q, lo, hi, &tol_q)?;
    Ok(RootBracket {
        polynomial: p.clone(),
        ..bracket
    })
}

/// Narrows an interval `(lo, hi]` holding exactly one simple root of the
/// square-free `q` to width `tol`.
pub(crate) fn refine(
    q: &IntPoly,
    mut lo: BigRational,
    mut hi: BigRational,
    tol_q: &BigRational,
) -> Result<RootBracket> {
    let exact = |x: BigRational| RootBracket {
        polynomial: q.clone(),
        value: x.to_f64().unwrap_or(f64::NAN),
        low: x.clone(),
        high: x,
    };
    let s_hi = q.sign_at(&hi);
    if s_hi == Sign::NoSign {
        return Ok(exact(hi));
    }
    let mut s_lo = q.sign_at(&lo);
    if s_lo == Sign::NoSign {
        // lo is a smaller root; the simple root above it flips the sign.
        s_lo = -s_hi;
    }
    debug_assert!(s_lo != s_hi, "interval must bracket a sign change");

    // Newton in floating point, then certify a tiny interval exactly.
    if let (Some(a), Some(b)) = (lo.to_f64(), hi.to_f64()) {
        if let Some(x0) = newton(q, 0.5 * (a + b), a, b) {
            let x0q = BigRational::from_float(x0).unwrap();
            if x0q > lo && q.sign_at(&x0q) == Sign::NoSign {
                return Ok(exact(x0q));
            }
            let quarter = tol_q / BigRational::from_integer(BigInt::from(4));
            let l = &x0q - &quarter;
            let h = &x0q + &quarter;
            if l > lo && h < hi {
                let sl = q.sign_at(&l);
                let sh = q.sign_at(&h);
                if sl == s_lo && sh == -s_lo {
                    return Ok(RootBracket {
                        polynomial: q.clone(),
                        low: l,
                        high: h,
                        value: x0,
                    });
                }
            }
        }
    }

    while &hi - &lo > *tol_q {
        let mid = midpoint(&lo, &hi);
        match q.sign_at(&mid) {
            Sign::NoSign => return Ok(exact(mid)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let value = midpoint(&lo, &hi).to_f64().unwrap_or(f64::NAN);
    Ok(RootBracket {
        polynomial: q.clone(),
        low: lo,
        high: hi,
        value,
    })
}

fn newton(q: &IntPoly, mut x: f64, a: f64, b: f64) -> Option<f64> {
    let dq = q.derivative();
    for _ in 0..100 {
        let fx = q.eval_f64(x);
        let dx = dq.eval_f64(x);
        if !fx.is_finite() || !dx.is_finite() || dx == 0.0 {
            return None;
        }
        let next = x - fx / dx;
        if !(a..=b).contains(&next) {
            return None;
        }
        if next == x {
            return Some(x);
        }
        if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            return Some(next);
        }
        x = next;
    }
    Some(x)
}
