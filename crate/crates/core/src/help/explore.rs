//! Bounded search over partial augmentations of a unit of order `n`,
//! keeping those whose eigenvalue multiplicities under `Θ_1..Θ_{max_m}` are
//! all nonnegative integers. Exploratory: nothing here feeds a verdict.

use num_traits::Signed;
use serde::Serialize;

use super::augmentation::{multiplicity, AugVector};
use super::SCHEMA_VERSION;
use crate::error::{Error, Result};
use crate::numtheory::Modulus;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExploreReport {
    pub schema_version: u32,
    pub version: &'static str,
    pub n: u64,
    pub max_m: u64,
    pub bound: i64,
    pub examined: u64,
    pub solutions: Vec<Vec<i64>>,
}

impl ExploreReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// All `ε` with `ε_0 = 0`, `Σ ε_x = 1` and `|ε_x| ≤ bound` passing the
/// multiplicity filter for `m = 1..=max_m` and every `l`.
pub fn explore_eps(n: u64, max_m: u64, bound: i64) -> Result<ExploreReport> {
    Modulus::new_odd(n)?;
    if max_m == 0 || bound < 0 {
        return Err(Error::Invalid("need max_m >= 1 and bound >= 0".into()));
    }
    let k = (n / 2) as usize;
    let mut examined = 0u64;
    let mut solutions = Vec::new();
    // free coordinates ε_1..ε_{k-1}; ε_k closes the sum
    let mut free = vec![-bound; k - 1];
    loop {
        let last = 1 - free.iter().sum::<i64>();
        if last.abs() <= bound {
            examined += 1;
            let mut eps = vec![0];
            eps.extend_from_slice(&free);
            eps.push(last);
            let v = AugVector::new(n, eps).expect("sum is 1 by construction");
            if passes(&v, max_m) {
                solutions.push(v.eps().to_vec());
            }
        }
        // odometer step
        let mut i = 0;
        while i < free.len() && free[i] == bound {
            free[i] = -bound;
            i += 1;
        }
        if i == free.len() {
            break;
        }
        free[i] += 1;
    }
    solutions.sort();
    Ok(ExploreReport {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        n,
        max_m,
        bound,
        examined,
        solutions,
    })
}

fn passes(v: &AugVector, max_m: u64) -> bool {
    let n = v.n() as i64;
    (1..=max_m).all(|m| {
        (0..n).all(|l| {
            let mu = multiplicity(v, m, l);
            mu.is_integer() && !mu.is_negative()
        })
    })
}
