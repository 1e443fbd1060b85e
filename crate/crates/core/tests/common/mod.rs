//! Reference computations that share no code with the library paths they
//! check: naive number theory, cyclotomic polynomials from the Möbius
//! product, floating-point evaluation at `e^{2πi/n}`, and a rational
//! Gaussian-elimination solver for real-basis coordinates.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use zassenhaus_psl2::cyclotomic::CycInt;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn naive_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

pub fn naive_primes(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&p| n.is_multiple_of(p) && (2..p).all(|q| p % q != 0))
        .collect()
}

pub fn naive_moebius(n: u64) -> i64 {
    let ps = naive_primes(n);
    if ps.iter().any(|p| n.is_multiple_of(p * p)) {
        0
    } else if ps.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut q = 1;
    while n.is_multiple_of(q * p) {
        q *= p;
    }
    q
}

/// Representative of `x mod m` in `(-m/2, m/2]`.
pub fn centered(x: i64, m: u64) -> i64 {
    let m = m as i64;
    let r = x.rem_euclid(m);
    if 2 * r > m {
        r - m
    } else {
        r
    }
}

/// Basis indices `b ≤ n/2` read straight off the defining inequalities.
pub fn naive_basis_indices(n: u64) -> Vec<u64> {
    (1..=n / 2)
        .filter(|&b| {
            naive_primes(n).iter().all(|&p| {
                let np = p_part(n, p);
                2 * p * centered(b as i64, np).unsigned_abs() > np
            })
        })
        .collect()
}

/// `Φ_n = ∏_{d | n} (X^d − 1)^{μ(n/d)}`, multiplying and dividing by
/// binomials over `i128`.
pub fn mobius_cyclotomic(n: u64) -> Vec<i128> {
    let mut p: Vec<i128> = vec![1];
    let divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    for &d in &divs {
        if naive_moebius(n / d) == 1 {
            // multiply by X^d − 1
            let mut q = vec![0i128; p.len() + d as usize];
            for (i, &c) in p.iter().enumerate() {
                q[i + d as usize] += c;
                q[i] -= c;
            }
            p = q;
        }
    }
    for &d in &divs {
        if naive_moebius(n / d) == -1 {
            // divide by X^d − 1: q_i = q_{i−d} − p_i from the bottom
            let d = d as usize;
            let len = p.len() - d;
            let mut q = vec![0i128; len];
            for i in 0..len {
                let back = if i >= d { q[i - d] } else { 0 };
                q[i] = back - p[i];
            }
            p = q;
        }
    }
    p
}

pub fn root(n: u64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64)
}

/// Numerical value of an element at `ζ_n = e^{2πi/n}`.
pub fn eval_complex(x: &CycInt) -> Complex64 {
    let z = root(x.n());
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| z.powu(j as u32) * c.to_f64().unwrap())
        .sum()
}

/// Numerical value of the power-basis coordinates at `ζ_n`.
pub fn eval_reduced(x: &CycInt) -> Complex64 {
    let z = root(x.n());
    x.reduced()
        .iter()
        .enumerate()
        .map(|(j, c)| z.powu(j as u32) * c.to_f64().unwrap())
        .sum()
}

/// Coordinates of `α_j` (`j ∈ [0, n)`) in the power basis, obtained by
/// reducing `X^j + X^{n−j}` modulo `Φ_n` with schoolbook division.
fn alpha_power_coords(n: u64, j: u64) -> Vec<BigRational> {
    let phi = mobius_cyclotomic(n);
    let deg = phi.len() - 1;
    let mut v = vec![0i128; n as usize + 1];
    v[j as usize] += 1;
    v[((n - j) % n) as usize] += 1;
    for k in (deg..v.len()).rev() {
        let c = v[k];
        if c != 0 {
            for (i, &pc) in phi.iter().enumerate() {
                v[k - deg + i] -= c * pc;
            }
        }
    }
    v.truncate(deg);
    v.into_iter()
        .map(|c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

/// Solves `Σ_b y_b · α_b = target` for the given basis indices by
/// Gauss–Jordan elimination on the `φ(n) × |basis|` system. Returns `None`
/// if the system is inconsistent.
pub fn solve_in_basis(n: u64, basis: &[u64], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols: Vec<Vec<BigRational>> = basis.iter().map(|&b| alpha_power_coords(n, b)).collect();
    let rows = target.len();
    let k = cols.len();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for v in &mut a[pivot_row][col..] {
            *v = &*v * &inv;
        }
        let prow = a[pivot_row].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row[col..].iter_mut().zip(&prow[col..]) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut y = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        y[c] = a[r][k].clone();
    }
    Some(y)
}

/// Oracle coordinates of a real element in the `α_b` basis.
pub fn oracle_decompose(x: &CycInt, basis: &[u64]) -> Vec<BigRational> {
    let target: Vec<BigRational> = x
        .reduced()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    solve_in_basis(x.n(), basis, &target).expect("real element has coordinates")
}

/// Oracle coordinates of `α_i` for every `i ∈ [0, n)`, as integers.
pub fn oracle_alpha_table(n: u64, basis: &[u64]) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let target = alpha_power_coords(n, i);
            solve_in_basis(n, basis, &target)
                .expect("alpha_i lies in the span")
                .into_iter()
                .map(|q| {
                    assert!(
                        q.is_integer(),
                        "non-integral coordinate {q} for alpha_{i}, n = {n}"
                    );
                    q.to_integer().to_i64().unwrap()
                })
                .collect()
        })
        .collect()
}

pub fn is_one_abs(x: &BigInt) -> bool {
    x.abs().is_one()
}
