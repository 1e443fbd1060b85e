//! Elementary number theory on small moduli: factorizations, valuations,
//! signed residues and the level function `gamma` that drives the real
//! cyclotomic basis.
//!
//! Every threshold of the form `n_p / (2p)` is compared through the integer
//! inequality `2p * |M| < n_p` (or `>`), never with fractions. For odd `p` the
//! threshold is never an integer, so the two strict comparisons partition the
//! residues.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    n: u64,
    factors: Vec<(u64, u32)>,
    radical: u64,
}

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let factors = factorize(n);
        let radical = factors.iter().map(|&(p, _)| p).product();
        Ok(Modulus {
            n,
            factors,
            radical,
        })
    }

    /// Odd modulus with `n >= 3`, the setting of the real basis.
    pub fn new_odd(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::ModulusTooSmall { n, min: 3 });
        }
        if n.is_multiple_of(2) {
            return Err(Error::EvenModulus(n));
        }
        Modulus::new(n)
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn radical(&self) -> u64 {
        self.radical
    }

    /// `n_p = p^{v_p(n)}`; 1 when `p` does not divide `n`.
    pub fn prime_part(&self, p: u64) -> u64 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(1, |&(q, e)| q.pow(e))
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn divisors(&self) -> Vec<u64> {
        divisors(self.n)
    }
}

/// Trial-division factorization, primes ascending.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && factorize(m) == [(m, 1)]
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= m {
        if m.is_multiple_of(i) {
            small.push(i);
            if i != m / i {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Exponent of the prime `p` in the nonzero integer `m`.
pub fn valuation(p: u64, m: i64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroValuation);
    }
    let mut m = m.unsigned_abs();
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    Ok(v)
}

pub fn moebius(m: u64) -> i32 {
    assert!(m >= 1, "moebius: argument must be positive");
    let f = factorize(m);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Number of distinct primes dividing `m`.
pub fn prime_count(m: u64) -> u32 {
    factorize(m).len() as u32
}

/// Ramanujan sum `c_k(j)`: the trace from `Q(zeta_k)` to `Q` of `zeta_k^j`.
pub fn ramanujan_sum(k: u64, j: i64) -> i64 {
    let g = (j.rem_euclid(k as i64) as u64).gcd(&k);
    let r = k / g;
    moebius(r) as i64 * (euler_phi(k) / euler_phi(r)) as i64
}

/// The representative of `x mod n` in the half-open interval `(-n/2, n/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedResidue {
    value: i64,
    modulus: u64,
}

impl SignedResidue {
    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn abs(self) -> u64 {
        self.value.unsigned_abs()
    }
}

pub fn signed_residue(x: i64, n: u64) -> SignedResidue {
    assert!(n >= 1, "signed_residue: modulus must be positive");
    let r = x.rem_euclid(n as i64);
    // r in [0, n); shift down when 2r > n
    let value = if 2 * r > n as i64 { r - n as i64 } else { r };
    SignedResidue { value, modulus: n }
}

/// Canonical representative of the class of `x` under `x ~ -x (mod n)`,
/// lying in `[0, n/2]`.
#[inline]
pub fn class_rep(x: i64, n: u64) -> u64 {
    signed_residue(x, n).abs()
}

/// `gamma_n(x)`: product of the primes `p | n` for which `x` sits close to
/// zero modulo `n_p`, i.e. `|M(x, n_p)| < n_p / (2p)`.
pub fn gamma(n: &Modulus, x: i64) -> u64 {
    n.factors()
        .iter()
        .filter(|&&(p, e)| {
            let np = p.pow(e);
            2 * p * signed_residue(x, np).abs() < np
        })
        .map(|&(p, _)| p)
        .product()
}

/// 2 when `n | x`, 1 otherwise.
pub fn kappa(n: u64, x: i64) -> i64 {
    if x.rem_euclid(n as i64) == 0 {
        2
    } else {
        1
    }
}

/// 1 when `x ≡ ±y (mod n)`, 0 otherwise.
pub fn delta(n: u64, x: i64, y: i64) -> i64 {
    (class_rep(x, n) == class_rep(y, n)) as i64
}

/// Residues `x mod n` with `|M(x, n_p)| > n_p / (2p)` for every prime `p | n`,
/// ascending.
pub fn b_set(n: &Modulus) -> Result<Vec<u64>> {
    if n.n() < 3 {
        return Err(Error::ModulusTooSmall { n: n.n(), min: 3 });
    }
    Ok((0..n.n()).filter(|&x| in_b_set(n, x as i64)).collect())
}

pub(crate) fn in_b_set(n: &Modulus, x: i64) -> bool {
    n.factors().iter().all(|&(p, e)| {
        let np = p.pow(e);
        2 * p * signed_residue(x, np).abs() > np
    })
}

/// Representatives of the classes of `~_n`, one per class, in `[0, n/2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaClassIndex {
    n: u64,
    representatives: Vec<u64>,
}

impl GammaClassIndex {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn representatives(&self) -> &[u64] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Position of the class of `x` in `representatives`.
    pub fn index_of(&self, x: i64) -> usize {
        class_rep(x, self.n) as usize
    }
}

pub fn gamma_class_reps(n: u64) -> GammaClassIndex {
    assert!(n >= 1, "gamma_class_reps: modulus must be positive");
    GammaClassIndex {
        n,
        representatives: (0..=n / 2).collect(),
    }
}
