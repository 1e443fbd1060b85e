//! Partial augmentations of a unit `u` of order `n` on the classes of
//! `<g_0>`, the sums `λ_i`, and eigenvalue multiplicities of `Θ_m(u)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclotomic::{alpha, CycInt};
use crate::error::{Error, Result};
use crate::numtheory::{class_rep, divisors, ramanujan_sum, Modulus};

/// `ε_x = ε_{g_0^x}(u)` for the class representatives `x = 0..=n/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AugVector {
    n: u64,
    eps: Vec<i64>,
}

impl AugVector {
    /// `eps[x]` is the value on class `x`; the sum must be 1.
    pub fn new(n: u64, eps: Vec<i64>) -> Result<Self> {
        Modulus::new_odd(n)?;
        let len = (n / 2 + 1) as usize;
        if eps.len() != len {
            return Err(Error::Invalid(format!(
                "augmentation vector for n = {n} needs {len} entries, got {}",
                eps.len()
            )));
        }
        let sum: i64 = eps.iter().sum();
        if sum != 1 {
            return Err(Error::BadAugmentation { n, sum });
        }
        Ok(AugVector { n, eps })
    }

    /// The partial augmentations of `g_0^x` itself.
    pub fn indicator(n: u64, x: i64) -> Result<Self> {
        Modulus::new_odd(n)?;
        let mut eps = vec![0; (n / 2 + 1) as usize];
        eps[class_rep(x, n) as usize] = 1;
        Ok(AugVector { n, eps })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn get(&self, x: i64) -> i64 {
        self.eps[class_rep(x, self.n) as usize]
    }

    /// Whether this could describe a unit other than 1 (`ε_0 = 0`).
    pub fn is_nontrivial_model(&self) -> bool {
        self.eps[0] == 0
    }

    /// Partial augmentations of `g^c` when `u` is `g` with these values:
    /// the mass on class `x` moves to class `x·c`.
    pub fn power(&self, c: i64) -> AugVector {
        let mut eps = vec![0; self.eps.len()];
        for (x, &e) in self.eps.iter().enumerate() {
            eps[class_rep(x as i64 * c, self.n) as usize] += e;
        }
        AugVector { n: self.n, eps }
    }
}

/// `λ_i = Σ_x ε_x α_{ix}`.
pub fn lambda_value(eps: &AugVector, i: i64) -> CycInt {
    let n = eps.n;
    let mut acc = CycInt::zero(n).expect("validated modulus");
    for (x, &e) in eps.eps.iter().enumerate() {
        if e != 0 {
            let a = alpha(n, i * x as i64).expect("validated modulus");
            acc = acc.add(&a.scalar_mul(e)).expect("same modulus");
        }
    }
    acc
}

/// Inverse of [`lambda_value`] over `i = 0..n`: discrete Fourier inversion
/// `n·e_k = Σ_i λ_i ζ^{-ik}`, where `e_0 = 2ε_0` and `e_k = e_{-k} = ε_k`.
pub fn eps_from_lambdas(lams: &[CycInt], n: u64) -> Result<AugVector> {
    Modulus::new_odd(n)?;
    if lams.len() != n as usize {
        return Err(Error::InconsistentLambdas(format!(
            "expected {n} values, got {}",
            lams.len()
        )));
    }
    if let Some(l) = lams.iter().find(|l| l.n() != n) {
        return Err(Error::ModulusMismatch {
            left: n,
            right: l.n(),
        });
    }
    let ni = n as i64;
    let mut e: Vec<BigInt> = Vec::with_capacity(n as usize);
    for k in 0..ni {
        let mut acc = vec![BigInt::zero(); n as usize];
        for (i, lam) in lams.iter().enumerate() {
            let shift = (i as i64 * k).rem_euclid(ni);
            for (j, c) in lam.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc[(j as i64 - shift).rem_euclid(ni) as usize] += c;
                }
            }
        }
        let v = CycInt::new(Modulus::new(n)?, acc)
            .as_integer()
            .ok_or_else(|| {
                Error::InconsistentLambdas(format!("coefficient {k} is not rational"))
            })?;
        if !(&v % ni).is_zero() {
            return Err(Error::InconsistentLambdas(format!(
                "coefficient {k} is {v}/{n}, not an integer"
            )));
        }
        e.push(v / ni);
    }
    for k in 1..ni as usize {
        if e[k] != e[n as usize - k] {
            return Err(Error::InconsistentLambdas(format!(
                "values at {k} and {} differ",
                n as usize - k
            )));
        }
    }
    if !(&e[0] % 2i64).is_zero() {
        return Err(Error::InconsistentLambdas(
            "value on the identity class is not an integer".into(),
        ));
    }
    let to_i64 = |v: &BigInt| {
        v.to_i64()
            .ok_or_else(|| Error::InconsistentLambdas(format!("{v} out of range")))
    };
    let mut eps = vec![to_i64(&(&e[0] / 2))?];
    for v in &e[1..=(n / 2) as usize] {
        eps.push(to_i64(v)?);
    }
    AugVector::new(n, eps).map_err(|err| match err {
        Error::BadAugmentation { sum, .. } => {
            Error::InconsistentLambdas(format!("augmentation is {sum}, not 1"))
        }
        other => other,
    })
}

/// Multiplicity of `ζ^l` as an eigenvalue of `Θ_m(u)`, assuming every
/// proper power `u^c` has the partial augmentations of `g_0^c`.
pub fn multiplicity(eps: &AugVector, m: u64, l: i64) -> BigRational {
    multiplicity_with_powers(eps, m, l, |c| {
        AugVector::indicator(eps.n, c as i64).unwrap()
    })
}

/// Multiplicity of `ζ^l` in `Θ_m(u)`, given the partial augmentations of
/// `u^c` for every divisor `c > 1` of `n` through `power_of`:
///
/// `μ_l = (1/n) Σ_{c|n} Tr_{Q(ζ^c)/Q}(ψ_m(u^c) ζ^{-cl})`.
pub fn multiplicity_with_powers(
    eps: &AugVector,
    m: u64,
    l: i64,
    power_of: impl Fn(u64) -> AugVector,
) -> BigRational {
    let n = eps.n;
    let mut total = 0i64;
    for c in divisors(n) {
        let pc;
        let e = if c == 1 {
            eps
        } else {
            pc = power_of(c);
            &pc
        };
        total += trace_term(e, m, l, c);
    }
    BigRational::new(total.into(), (n as i64).into())
}

/// `Tr_{Q(ζ^c)/Q}(ψ_m(v) ζ^{-cl})` with `v` of order dividing `n/c` and
/// partial augmentations `e`. Classes not divisible by `c` carry no weight
/// for such `v` and are skipped.
fn trace_term(e: &AugVector, m: u64, l: i64, c: u64) -> i64 {
    let n = e.n;
    let k = n / c;
    let ci = c as i64;
    let mi = m as i64;
    let mut t = 0i64;
    for (y, &w) in e.eps.iter().enumerate() {
        if w == 0 || !(y as u64).is_multiple_of(c) {
            continue;
        }
        let yc = y as i64 / ci;
        let s: i64 = (-mi..=mi).map(|j| ramanujan_sum(k, yc * j - l)).sum();
        t += w * s;
    }
    t
}
