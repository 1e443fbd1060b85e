use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::numtheory::divisors;

/// Dense integer polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `X^k - 1`
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = BigInt::from(-1);
        c[k] = BigInt::one();
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "div_rem_monic: divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[k]);
            for (j, dc) in divisor.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    rem[k - dd + j] -= &c * dc;
                }
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact quotient; panics when the remainder is nonzero.
    pub fn exact_div_monic(&self, divisor: &IntPoly) -> IntPoly {
        let (q, r) = self.div_rem_monic(divisor);
        assert!(r.is_zero(), "exact_div_monic: nonzero remainder {r}");
        q
    }

    /// Reduce exponents modulo `n`, i.e. map into `Z[X]/(X^n - 1)`.
    pub fn fold(&self, n: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j % n] += c;
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{a}*X")?,
                (_, true) => write!(f, "X^{j}")?,
                (_, false) => write!(f, "{a}*X^{j}")?,
            }
        }
        Ok(())
    }
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `m`-th cyclotomic polynomial, obtained from `X^m - 1` by exact
/// division by `Φ_d` for every proper divisor `d` of `m`. Results are cached;
/// concurrent callers may compute the same value and the first insert wins.
pub fn cyclotomic_poly(m: u64) -> Arc<IntPoly> {
    assert!(m >= 1, "cyclotomic_poly: index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&m) {
        return Arc::clone(p);
    }
    let mut acc = IntPoly::x_pow_minus_one(m as usize);
    for d in divisors(m) {
        if d == m {
            continue;
        }
        acc = acc.exact_div_monic(&cyclotomic_poly(d));
    }
    let mut guard = cache().lock().unwrap();
    Arc::clone(guard.entry(m).or_insert_with(|| Arc::new(acc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::euler_phi;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(
            *cyclotomic_poly(9),
            IntPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1])
        );
        assert_eq!(
            *cyclotomic_poly(15),
            IntPoly::from_i64(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );
    }

    #[test]
    fn product_over_divisors_is_x_pow_minus_one() {
        for n in 1..=200u64 {
            let phi = cyclotomic_poly(n);
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(euler_phi(n) as usize));
            let prod = divisors(n)
                .into_iter()
                .fold(IntPoly::one(), |acc, d| acc.mul(&cyclotomic_poly(d)));
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n={n}");
        }
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        // first cyclotomic polynomial with a coefficient outside {-1,0,1}
        let p = cyclotomic_poly(105);
        assert!(p.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn division_with_remainder() {
        let a = IntPoly::from_i64(&[5, 0, 0, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        let (q, r) = a.div_rem_monic(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(r, IntPoly::from_i64(&[4]));
    }

    #[test]
    fn display() {
        assert_eq!(cyclotomic_poly(6).to_string(), "X^2 - X + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
