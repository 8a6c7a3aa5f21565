//! Dense univariate polynomials over `Z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients in ascending degree, no leading zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sum of `c·t^e` over the given terms; repeated exponents add up.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for &(e, c) in terms {
            coeffs[e] += c;
        }
        IntPoly::new(coeffs)
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `c·t^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Nonzero terms `(exponent, coefficient)` in descending exponent order.
    pub fn terms_desc(&self) -> Vec<(usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `t^d p(1/t)` with `d = deg p`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Sign changes in the coefficient sequence (Descartes' bound on the
    /// number of positive roots).
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<Sign> = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.sign())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let (num, den) = self.eval_homogeneous(x.numer(), x.denom());
        BigRational::new(num, den)
    }

    /// `(N, D)` with `p(a/b) = N/D`, `D = b^deg`, `b > 0` assumed.
    ///
    /// Horner over the nonzero terms only, so sparse polynomials of large
    /// degree cost a handful of big powers.
    fn eval_homogeneous(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let terms = self.terms_desc();
        let Some(&(top, _)) = terms.first() else {
            return (BigInt::zero(), BigInt::one());
        };
        let mut acc = BigInt::zero();
        let mut prev = top;
        for (e, c) in &terms {
            acc = acc * num_traits::pow(a.clone(), prev - e)
                + *c * num_traits::pow(b.clone(), top - e);
            prev = *e;
        }
        acc *= num_traits::pow(a.clone(), prev);
        (acc, num_traits::pow(b.clone(), top))
    }

    /// Exact sign of `p(x)`.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        debug_assert!(x.denom().is_positive());
        self.eval_homogeneous(x.numer(), x.denom()).0.sign()
    }

    /// Floating-point evaluation, for cross-checks and Newton steps only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Pseudo-remainder of `self` by `divisor`, scaled by a positive power
    /// of `|lc(divisor)|` so that signs are preserved.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let db = divisor.degree().expect("division by the zero polynomial");
        let lb = divisor.leading().unwrap();
        let lb_abs = lb.abs();
        let lb_neg = lb.is_negative();
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let shift = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            let factor = if lb_neg { -lr } else { lr };
            for c in r.iter_mut() {
                *c *= &lb_abs;
            }
            for (k, bc) in divisor.coeffs.iter().enumerate() {
                if !bc.is_zero() {
                    r[k + shift] -= &factor * bc;
                }
            }
            debug_assert!(r.last().unwrap().is_zero());
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly::new(r)
    }

    /// Exact quotient by a divisor that divides `self` over `Z`.
    ///
    /// Returns `None` if the division is not exact.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let db = divisor.degree()?;
        let lb = divisor.leading().unwrap();
        let Some(da) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if da < db {
            return None;
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for shift in (0..=da - db).rev() {
            let top = &r[shift + db];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (k, bc) in divisor.coeffs.iter().enumerate() {
                r[k + shift] -= &quot * bc;
            }
            q[shift] = quot;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(|c| c.is_negative()) {
            a = -a;
        }
        a
    }

    /// Primitive square-free part with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        let q = if g.degree().unwrap_or(0) == 0 {
            self.primitive_part()
        } else {
            self.exact_div(&g)
                .expect("gcd divides the polynomial")
                .primitive_part()
        };
        if q.leading().is_some_and(|c| c.is_negative()) {
            -q
        } else {
            q
        }
    }

    /// Human-readable form in `t`, highest degree first.
    pub fn to_monomial_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms_desc();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_mag = !mag.is_one() || *e == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}
