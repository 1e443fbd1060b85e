//! Numerical data of `PSL(2, q)`, `q = t^f`: order, element orders, and the
//! Brauer characters `ψ_m` of degree `1 + 2m` on powers of a fixed element
//! `g_0` of odd order `n` coprime to `t`.
//!
//! No matrices are built. `Θ_m(g_0^i)` is described only by its eigenvalue
//! exponents `0, ±i, ±2i, …, ±mi`, and conjugacy classes of elements of
//! order dividing `n` are identified with the `±` classes modulo `n`.

use num_integer::Integer;
use serde::Serialize;

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::numtheory::{class_rep, divisors, factorize, Modulus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub q: u64,
    /// characteristic
    pub t: u64,
    pub f: u32,
    /// `gcd(2, q - 1)`: 2 in odd characteristic, 1 in characteristic 2
    pub d2: u64,
    pub order: u128,
    pub element_orders: Vec<u64>,
}

impl GroupProfile {
    pub fn has_element_order(&self, n: u64) -> bool {
        self.element_orders.binary_search(&n).is_ok()
    }
}

pub fn group_profile(q: u64) -> Result<GroupProfile> {
    let fac = factorize(q);
    let &[(t, f)] = fac.as_slice() else {
        return Err(Error::NotPrimePower(q));
    };
    if q < 4 {
        return Err(Error::SolvableGroup(q));
    }
    let d2 = (q - 1).gcd(&2);
    let order = (q as u128 - 1) * q as u128 * (q as u128 + 1) / d2 as u128;
    let mut element_orders: Vec<u64> = divisors((q - 1) / d2)
        .into_iter()
        .chain(divisors((q + 1) / d2))
        .chain([t])
        .collect();
    element_orders.sort_unstable();
    element_orders.dedup();
    Ok(GroupProfile {
        q,
        t,
        f,
        d2,
        order,
        element_orders,
    })
}

/// Element orders `n > 1` with `gcd(n, 2q) = 1` that are not prime powers.
pub fn admissible_orders(q: u64) -> Result<Vec<u64>> {
    let g = group_profile(q)?;
    Ok(g.element_orders
        .iter()
        .copied()
        .filter(|&n| n > 1 && n.gcd(&(2 * q)) == 1)
        .filter(|&n| factorize(n).len() > 1)
        .collect())
}

/// The character `ψ_m` restricted to `<g_0>`, `g_0` of odd order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharacterModel {
    pub n: u64,
    pub m: u64,
}

impl CharacterModel {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        Modulus::new_odd(n)?;
        if m == 0 {
            return Err(Error::Invalid("character index m must be positive".into()));
        }
        Ok(CharacterModel { n, m })
    }

    pub fn degree(&self) -> u64 {
        1 + 2 * self.m
    }

    pub fn value(&self, i: i64) -> CycInt {
        psi_value(self.n, self.m, i).expect("validated model")
    }
}

/// `ψ_m(g_0^i) = Σ_{j=-m}^{m} ζ^{ij}`.
pub fn psi_value(n: u64, m: u64, i: i64) -> Result<CycInt> {
    Modulus::new_odd(n)?;
    let m = m as i64;
    CycInt::from_exponents(n, (-m..=m).map(|j| (i * j, 1i64)))
}

/// `±` classes modulo `n` of the eigenvalue exponents of `Θ_m(g_0^i)`:
/// class 0 for the trivial eigenvalue, then the class of `i·j` for
/// `j = 1..m` (each standing for the pair `ζ^{±ij}`).
pub fn theta_exponents(m: u64, i: i64, n: u64) -> Vec<u64> {
    std::iter::once(0)
        .chain((1..=m as i64).map(|j| class_rep(i * j, n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realbasis::decompose;

    #[test]
    fn profiles() {
        let g = group_profile(7).unwrap();
        assert_eq!(g.order, 168);
        assert_eq!(g.element_orders, vec![1, 2, 3, 4, 7]);
        assert_eq!((g.t, g.f, g.d2), (7, 1, 2));

        let g = group_profile(16).unwrap();
        assert_eq!(g.order, 4080);
        assert_eq!(g.element_orders, vec![1, 2, 3, 5, 15, 17]);

        let g = group_profile(31).unwrap();
        assert_eq!(g.order, 14880);
        assert_eq!(g.element_orders, vec![1, 2, 3, 4, 5, 8, 15, 16, 31]);

        assert_eq!(group_profile(3), Err(Error::SolvableGroup(3)));
        assert_eq!(group_profile(2), Err(Error::SolvableGroup(2)));
        assert_eq!(group_profile(12), Err(Error::NotPrimePower(12)));
        assert!(group_profile(1).is_err());
    }

    #[test]
    fn admissible() {
        assert_eq!(admissible_orders(16).unwrap(), vec![15]);
        assert_eq!(admissible_orders(7).unwrap(), Vec::<u64>::new());
        assert_eq!(admissible_orders(127).unwrap(), vec![21, 63]);
        // 2^31 - 1: (q-1)/2 = 3^2·7·11·31·151·331
        let big = admissible_orders((1 << 31) - 1).unwrap();
        assert!(big.iter().all(|&n| n % 2 == 1 && factorize(n).len() > 1));
    }

    #[test]
    fn psi_values() {
        let one = CycInt::one(15).unwrap();
        let a1 = crate::cyclotomic::alpha(15, 1).unwrap();
        assert_eq!(psi_value(15, 1, 1).unwrap(), one.add(&a1).unwrap());
        assert_eq!(
            psi_value(15, 3, 0).unwrap(),
            CycInt::constant(15, 7).unwrap()
        );
        let x = psi_value(15, 3, 1).unwrap().sub(&one).unwrap();
        let e = decompose(&x).unwrap();
        let got: Vec<(u64, i64)> = e
            .coords()
            .iter()
            .map(|(&b, c)| (b, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(got, vec![(1, 1), (2, 0), (4, 0), (7, -1)]);
    }

    #[test]
    fn psi_symmetries() {
        for n in [15u64, 21, 45] {
            for m in 1..=7u64 {
                assert_eq!(
                    psi_value(n, m, 0).unwrap().as_integer(),
                    Some((1 + 2 * m).into())
                );
                for i in 0..n as i64 {
                    let v = psi_value(n, m, i).unwrap();
                    assert_eq!(v, psi_value(n, m, -i).unwrap());
                    assert_eq!(v, psi_value(n, m, i + n as i64).unwrap());
                    assert!(decompose(&v).is_ok());
                }
            }
        }
    }

    #[test]
    fn theta() {
        assert_eq!(theta_exponents(3, 1, 15), vec![0, 1, 2, 3]);
        assert_eq!(theta_exponents(3, 5, 15), vec![0, 5, 5, 0]);
        assert_eq!(theta_exponents(1, 0, 15), vec![0, 0]);
        assert_eq!(CharacterModel::new(15, 3).unwrap().degree(), 7);
    }
}
