//! Exact arithmetic in `Z[ζ_n]`.
//!
//! A [`CycInt`] keeps two views of the same element: the exponent vector
//! `Σ c_j ζ^j` over `j ∈ Z/n` (the natural shape of character sums), and a
//! lazily computed remainder modulo `Φ_n` in the power basis
//! `1, ζ, …, ζ^{φ(n)-1}`. Equality and divisibility are decided on the
//! remainder, which is a Z-basis representation.

mod poly;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use poly::{cyclotomic_poly, IntPoly};

use crate::error::{Error, Result};
use crate::numtheory::Modulus;

#[derive(Clone)]
pub struct CycInt {
    modulus: Arc<Modulus>,
    coeffs: Vec<BigInt>,
    reduced: OnceLock<Vec<BigInt>>,
}

impl CycInt {
    /// Element with exponent vector `coeffs`; indices are read modulo `n`.
    pub fn new(modulus: Modulus, coeffs: Vec<BigInt>) -> Self {
        let n = modulus.n() as usize;
        let coeffs = if coeffs.len() == n {
            coeffs
        } else {
            let mut folded = vec![BigInt::zero(); n];
            for (j, c) in coeffs.into_iter().enumerate() {
                folded[j % n] += c;
            }
            folded
        };
        Self::from_parts(Arc::new(modulus), coeffs)
    }

    fn from_parts(modulus: Arc<Modulus>, coeffs: Vec<BigInt>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, modulus.n());
        CycInt {
            modulus,
            coeffs,
            reduced: OnceLock::new(),
        }
    }

    pub fn zero(n: u64) -> Result<Self> {
        let m = Modulus::new(n)?;
        Ok(Self::from_parts(
            Arc::new(m),
            vec![BigInt::zero(); n as usize],
        ))
    }

    pub fn constant(n: u64, k: impl Into<BigInt>) -> Result<Self> {
        let mut z = Self::zero(n)?;
        z.coeffs[0] = k.into();
        Ok(z)
    }

    pub fn one(n: u64) -> Result<Self> {
        Self::constant(n, 1)
    }

    /// `ζ_n^j`
    pub fn root_power(n: u64, j: i64) -> Result<Self> {
        Self::from_exponents(n, [(j, 1i64)])
    }

    /// `Σ c · ζ_n^e` over the given `(e, c)` pairs.
    pub fn from_exponents<C: Into<BigInt>>(
        n: u64,
        terms: impl IntoIterator<Item = (i64, C)>,
    ) -> Result<Self> {
        let mut z = Self::zero(n)?;
        for (e, c) in terms {
            z.coeffs[e.rem_euclid(n as i64) as usize] += c.into();
        }
        Ok(z)
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn n(&self) -> u64 {
        self.modulus.n()
    }

    /// Exponent vector: entry `j` is the coefficient of `ζ^j`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Power-basis coordinates, length `φ(n)`.
    pub fn reduced(&self) -> &[BigInt] {
        self.reduced
            .get_or_init(|| reduce_mod_phi(&self.coeffs, self.n()))
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if any.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.reduced();
        if r[1..].iter().all(Zero::is_zero) {
            Some(r[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &CycInt) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::ModulusMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::from_parts(Arc::clone(&self.modulus), coeffs))
    }

    pub fn sub(&self, other: &CycInt) -> Result<CycInt> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycInt {
        self.scalar_mul(-1)
    }

    pub fn scalar_mul(&self, k: impl Into<BigInt>) -> CycInt {
        let k = k.into();
        let coeffs = self.coeffs.iter().map(|c| c * &k).collect();
        Self::from_parts(Arc::clone(&self.modulus), coeffs)
    }

    /// Product by cyclic convolution of exponents modulo `n`.
    pub fn mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_same(other)?;
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[(i + j) % n] += a * b;
                }
            }
        }
        Ok(Self::from_parts(Arc::clone(&self.modulus), out))
    }

    /// The automorphism `ζ ↦ ζ^s`.
    pub fn galois_apply(&self, s: i64) -> Result<CycInt> {
        let n = self.n();
        if (s.rem_euclid(n as i64) as u64).gcd(&n) != 1 {
            return Err(Error::NotCoprime { s, n });
        }
        let mut out = vec![BigInt::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[(j as i64 * s).rem_euclid(n as i64) as usize] += c;
            }
        }
        Ok(Self::from_parts(Arc::clone(&self.modulus), out))
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> CycInt {
        self.galois_apply(-1).expect("-1 is a unit modulo every n")
    }

    /// Fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// Membership in `k · Z[ζ_n]`.
    pub fn divisible_by_int(&self, k: u64) -> bool {
        assert!(k >= 1, "divisible_by_int: k must be positive");
        let k = BigInt::from(k);
        self.reduced().iter().all(|c| c.is_multiple_of(&k))
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.reduced() == other.reduced()
    }
}

impl Eq for CycInt {}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt(n={}, {})", self.n(), self)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.reduced().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z^{j}")?,
                (_, false) => write!(f, "{a}*z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Remainder of `Σ c_j X^j` modulo `Φ_n`, as a vector of length `φ(n)`.
fn reduce_mod_phi(coeffs: &[BigInt], n: u64) -> Vec<BigInt> {
    let phi = cyclotomic_poly(n);
    let pc = phi.coeffs();
    let deg = pc.len() - 1;
    let mut rem = coeffs.to_vec();
    for k in (deg..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut rem[k]);
        for (j, p) in pc[..deg].iter().enumerate() {
            if !p.is_zero() {
                rem[k - deg + j] -= &c * p;
            }
        }
    }
    rem.truncate(deg);
    rem.resize(deg, BigInt::zero());
    rem
}

/// Canonical power-basis coordinates of `a`.
pub fn reduce(a: &CycInt) -> Vec<BigInt> {
    a.reduced().to_vec()
}

/// `f(ζ_n)` with exponents folded modulo `n`.
pub fn eval_poly_at_root(f: &IntPoly, n: u64) -> Result<CycInt> {
    let m = Modulus::new(n)?;
    Ok(CycInt::new(m, f.fold(n as usize)))
}

/// `α_x = ζ_n^x + ζ_n^{-x}` for odd `n >= 3`.
pub fn alpha(n: u64, x: i64) -> Result<CycInt> {
    Modulus::new_odd(n)?;
    CycInt::from_exponents(n, [(x, 1i64), (-x, 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn ring_examples() {
        let z = CycInt::root_power(5, 1).unwrap();
        let zi = CycInt::root_power(5, -1).unwrap();
        assert_eq!(z.add(&zi).unwrap(), alpha(5, 1).unwrap());
        let a = CycInt::root_power(5, 2).unwrap();
        let b = CycInt::root_power(5, 3).unwrap();
        assert_eq!(a.mul(&b).unwrap(), CycInt::one(5).unwrap());
        let s = CycInt::from_exponents(3, [(0, 1), (1, 1), (2, 1)]).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.reduced(), big(&[0, 0]));
    }

    #[test]
    fn modulus_mismatch() {
        let a = CycInt::one(5).unwrap();
        let b = CycInt::one(7).unwrap();
        assert_eq!(
            a.add(&b).unwrap_err(),
            Error::ModulusMismatch { left: 5, right: 7 }
        );
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn reductions() {
        let z2 = CycInt::root_power(3, 2).unwrap();
        assert_eq!(reduce(&z2), big(&[-1, -1]));
        assert!(CycInt::zero(15)
            .unwrap()
            .reduced()
            .iter()
            .all(Zero::is_zero));
        // X^14 mod Φ_15 through the polynomial division path
        let x14 = IntPoly::new({
            let mut v = vec![BigInt::zero(); 15];
            v[14] = BigInt::one();
            v
        });
        let (_, r) = x14.div_rem_monic(&cyclotomic_poly(15));
        let mut expect = r.coeffs().to_vec();
        expect.resize(8, BigInt::zero());
        assert_eq!(reduce(&CycInt::root_power(15, 14).unwrap()), expect);
        // ζ^{-1} = 1 - ζ^2 + ζ^3 - ζ^4 + ζ^6 - ζ^7, from Φ_15(ζ) = 0 divided by ζ
        assert_eq!(expect, big(&[1, 0, -1, 1, -1, 0, 1, -1]));
    }

    #[test]
    fn evaluation() {
        let f = IntPoly::from_i64(&[1, 1, 1]);
        assert!(eval_poly_at_root(&f, 3).unwrap().is_zero());
        let v = eval_poly_at_root(&cyclotomic_poly(6), 3).unwrap();
        assert_eq!(v, CycInt::root_power(3, 1).unwrap().scalar_mul(-2));
        assert!(eval_poly_at_root(&IntPoly::from_i64(&[-1, 1]), 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn galois() {
        let z = CycInt::root_power(5, 1).unwrap();
        assert_eq!(
            z.galois_apply(2).unwrap(),
            CycInt::root_power(5, 2).unwrap()
        );
        assert_eq!(
            alpha(15, 1).unwrap().galois_apply(4).unwrap(),
            alpha(15, 4).unwrap()
        );
        assert_eq!(
            CycInt::one(15).unwrap().galois_apply(7).unwrap(),
            CycInt::one(15).unwrap()
        );
        assert_eq!(
            z.galois_apply(5).unwrap_err(),
            Error::NotCoprime { s: 5, n: 5 }
        );
    }

    #[test]
    fn alphas() {
        assert_eq!(alpha(15, 0).unwrap(), CycInt::constant(15, 2).unwrap());
        let lhs = alpha(15, 3).unwrap();
        let rhs = alpha(15, 2)
            .unwrap()
            .add(&alpha(15, 7).unwrap())
            .unwrap()
            .neg();
        assert_eq!(lhs, rhs);
        assert_eq!(alpha(15, 4).unwrap(), alpha(15, -4).unwrap());
        assert_eq!(alpha(15, 4).unwrap(), alpha(15, 19).unwrap());
        assert!(alpha(15, 4).unwrap().is_real());
        assert!(!CycInt::root_power(15, 1).unwrap().is_real());
        assert!(alpha(4, 1).is_err());
    }

    #[test]
    fn divisibility() {
        let v = CycInt::root_power(3, 1).unwrap().scalar_mul(-2);
        assert!(v.divisible_by_int(2));
        assert!(!CycInt::root_power(5, 1).unwrap().divisible_by_int(2));
        assert!(CycInt::zero(9).unwrap().divisible_by_int(7));
    }

    #[test]
    fn phi_vanishes_at_its_root() {
        for n in 1..=200u64 {
            assert!(eval_poly_at_root(&cyclotomic_poly(n), n).unwrap().is_zero());
        }
    }

    #[test]
    fn display() {
        assert_eq!(reduce(&CycInt::root_power(3, 2).unwrap()).len(), 2);
        assert_eq!(CycInt::root_power(3, 2).unwrap().to_string(), "-1 - z^1");
        assert_eq!(CycInt::zero(3).unwrap().to_string(), "0");
    }
}
