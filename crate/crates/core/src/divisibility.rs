//! Divisibility checks in `Z[ζ_n]` and `Z[α_1]`.
//!
//! * `Φ_{n p^m}(ζ_n) ∈ p Z[ζ_n]`, decided on power-basis coordinates.
//! * For `ω_i = Σ_j A_j ζ_n^{ij}` and `d | n`: if `ω_{d/q} = 0` for every
//!   prime power `q > 1` dividing `d`, then `ω_d ∈ d Z[ζ_n]`.
//! * The real version over `Z[α_1]`, decided on `α_b` coordinates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::cyclotomic::{cyclotomic_poly, eval_poly_at_root, CycInt, IntPoly};
use crate::error::{Error, Result};
use crate::numtheory::{class_rep, is_prime, Modulus};
use crate::realbasis::decompose;

/// `Φ_{n p^m}(ζ_n)`.
pub fn phi_value_at_root(n: u64, p: u64, m: u32) -> Result<CycInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::Invalid("exponent m must be positive".into()));
    }
    let index = n
        .checked_mul(
            p.checked_pow(m)
                .ok_or_else(|| Error::Invalid("p^m overflows".into()))?,
        )
        .ok_or_else(|| Error::Invalid("n p^m overflows".into()))?;
    eval_poly_at_root(&cyclotomic_poly(index), n)
}

/// Whether `Φ_{n p^m}(ζ_n)` lies in `p Z[ζ_n]`. Always expected to hold.
pub fn check_phi_membership(n: u64, p: u64, m: u32) -> Result<bool> {
    Ok(phi_value_at_root(n, p, m)?.divisible_by_int(p))
}

/// Integers `A_0..A_{n-1}` together with a divisor `d` of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaInstance {
    modulus: Modulus,
    a: Vec<BigInt>,
    d: u64,
}

impl OmegaInstance {
    pub fn new(n: u64, a: Vec<BigInt>, d: u64) -> Result<Self> {
        let modulus = Modulus::new(n)?;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, n });
        }
        if a.len() as u64 != n {
            return Err(Error::Invalid(format!(
                "expected {n} coefficients, got {}",
                a.len()
            )));
        }
        Ok(OmegaInstance { modulus, a, d })
    }

    /// Parse the text format: a header line `n d`, then `n` integers
    /// `A_0 .. A_{n-1}`, one per line. Blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut fields = header.split_whitespace();
        let mut field = |what: &str| -> Result<u64> {
            fields
                .next()
                .ok_or_else(|| Error::Parse(format!("header is missing {what}")))?
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("header {what}: {e}")))
        };
        let n = field("n")?;
        let d = field("d")?;
        if fields.next().is_some() {
            return Err(Error::Parse("header must be exactly `n d`".into()));
        }
        let a = lines
            .enumerate()
            .map(|(i, l)| {
                l.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient A_{i} = {l:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        OmegaInstance::new(n, a, d)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.d);
        for c in &self.a {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    pub fn n(&self) -> u64 {
        self.modulus.n()
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `k = n / d`
    pub fn k(&self) -> u64 {
        self.n() / self.d
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.a
    }
}

/// `ω_i = Σ_j A_j ζ_n^{ij}`.
pub fn omega(inst: &OmegaInstance, i: i64) -> CycInt {
    let n = inst.n() as i64;
    CycInt::from_exponents(
        inst.n(),
        inst.a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| ((i.rem_euclid(n) * j as i64) % n, c.clone())),
    )
    .expect("validated modulus")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NtVerdict {
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
}

impl NtVerdict {
    /// The implication hypotheses ⇒ conclusion is not violated.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold || self.conclusion_holds
    }
}

/// Prime powers `q > 1` dividing `d`, ascending by prime then exponent.
pub fn prime_power_divisors(d: u64) -> Vec<u64> {
    let m = Modulus::new(d).expect("d is positive");
    m.factors()
        .iter()
        .flat_map(|&(p, e)| (1..=e).map(move |k| p.pow(k)))
        .collect()
}

pub fn check_nt(inst: &OmegaInstance) -> NtVerdict {
    let d = inst.d;
    let hypotheses_hold = prime_power_divisors(d)
        .into_iter()
        .all(|q| omega(inst, (d / q) as i64).is_zero());
    let conclusion_holds = omega(inst, d as i64).divisible_by_int(d);
    NtVerdict {
        hypotheses_hold,
        conclusion_holds,
    }
}

fn validate_real_weights(n: u64, b: &BTreeMap<u64, BigInt>) -> Result<()> {
    Modulus::new_odd(n)?;
    if let Some(&x) = b.keys().find(|&&x| x > n / 2) {
        return Err(Error::Invalid(format!(
            "{x} is not a class representative in [0, {}]",
            n / 2
        )));
    }
    Ok(())
}

/// `ω_i = Σ_x B_x α_{ix}`, the real-subfield trace form.
pub fn real_omega(n: u64, b: &BTreeMap<u64, BigInt>, i: i64) -> Result<CycInt> {
    validate_real_weights(n, b)?;
    CycInt::from_exponents(
        n,
        b.iter().filter(|(_, c)| !c.is_zero()).flat_map(|(&x, c)| {
            let e = i * x as i64;
            [(e, c.clone()), (-e, c.clone())]
        }),
    )
}

/// Real version of [`check_nt`]; the conclusion is membership in
/// `d Z[α_1]`, tested on coordinates in the `α_b` basis.
pub fn check_corollary_real(n: u64, b: &BTreeMap<u64, BigInt>, d: u64) -> Result<NtVerdict> {
    validate_real_weights(n, b)?;
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, n });
    }
    let mut hypotheses_hold = true;
    for q in prime_power_divisors(d) {
        if !real_omega(n, b, (d / q) as i64)?.is_zero() {
            hypotheses_hold = false;
            break;
        }
    }
    let conclusion_holds = decompose(&real_omega(n, b, d as i64)?)?.divisible_by_int(d);
    Ok(NtVerdict {
        hypotheses_hold,
        conclusion_holds,
    })
}

/// The exponent vector with `Σ_j A_j ζ^{ij} = Σ_x B_x α_{ix}` for every `i`:
/// `A_0 = 2 B_0` and `A_j = B_{class(j)}` otherwise.
pub fn symmetrize(n: u64, b: &BTreeMap<u64, BigInt>) -> Result<Vec<BigInt>> {
    validate_real_weights(n, b)?;
    Ok((0..n as i64)
        .map(|j| {
            let c = b.get(&class_rep(j, n)).cloned().unwrap_or_default();
            if j == 0 {
                c * 2
            } else {
                c
            }
        })
        .collect())
}

/// Product `∏_{p | d} ∏_{m=1}^{v_p(d)} Φ_{k p^m}` with `k = n/d`.
pub fn vanishing_factor(n: u64, d: u64) -> IntPoly {
    let k = n / d;
    prime_power_divisors(d)
        .into_iter()
        .fold(IntPoly::one(), |acc, q| acc.mul(&cyclotomic_poly(k * q)))
}

/// Random instance satisfying the hypotheses by construction:
/// `f = g · vanishing_factor(n, d)` folded modulo `X^n - 1`, with `g` of
/// degree below `n` and coefficients in `[-9, 9]`.
pub fn random_nt_instance<R: Rng + ?Sized>(n: u64, d: u64, rng: &mut R) -> Result<OmegaInstance> {
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, n });
    }
    let len = rng.gen_range(1..=n as usize);
    let g = IntPoly::new(
        (0..len)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect(),
    );
    let f = g.mul(&vanishing_factor(n, d));
    OmegaInstance::new(n, f.fold(n as usize), d)
}

/// Fold an exponent-indexed instance into `±` classes:
/// `B_0 = A_0`, `B_x = A_x + A_{n-x}`. The result satisfies the real
/// hypotheses whenever the source satisfies the complex ones.
pub fn fold_to_real(inst: &OmegaInstance) -> Result<BTreeMap<u64, BigInt>> {
    let n = inst.n();
    Modulus::new_odd(n)?;
    let a = inst.coefficients();
    Ok((0..=n / 2)
        .map(|x| {
            let v = if x == 0 {
                a[0].clone()
            } else {
                &a[x as usize] + &a[(n - x) as usize]
            };
            (x, v)
        })
        .collect())
}
