//! The basis `{α_b : b ∈ B_n, b ≤ n/2}` of `Z[α_1]` for odd `n`, and exact
//! extraction of coordinates in it.
//!
//! Two independent routes produce coordinates:
//! * [`coeff_of_alpha`], the closed Möbius formula
//!   `C_b(α_i) = κ_i · μ(γ(i)) · δ^{(n/γ(i))}_{b,i}`, used by
//!   [`decompose_alpha_combination`];
//! * [`decompose`], which solves the linear system in the power basis of
//!   `Z[ζ_n]` with exact rational arithmetic.
//!
//! A non-integral solution of the linear system would contradict the basis
//! property and aborts with a diagnostic.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::{alpha, cyclotomic_poly, CycInt, IntPoly};
use crate::error::{Error, Result};
use crate::numtheory::{delta, gamma, in_b_set, kappa, moebius, Modulus};

/// Basis indices for odd `n >= 3`: the representatives in `[1, n/2]` of the
/// `±` pairs of `B_n`, ascending. There are `φ(n)/2` of them.
pub fn basis_indices(n: u64) -> Result<Vec<u64>> {
    let m = Modulus::new_odd(n)?;
    Ok(indices_for(&m))
}

fn indices_for(m: &Modulus) -> Vec<u64> {
    (1..=m.n() / 2).filter(|&b| in_b_set(m, b as i64)).collect()
}

pub fn is_basis_index(n: &Modulus, b: u64) -> bool {
    b >= 1 && b <= n.n() / 2 && in_b_set(n, b as i64)
}

/// Coefficient of `α_b` in the expansion of `α_i`.
pub fn coeff_of_alpha(n: &Modulus, b: u64, i: i64) -> Result<i64> {
    if n.n() < 3 || n.n().is_multiple_of(2) {
        return Err(Error::Invalid(format!(
            "real basis needs an odd modulus >= 3, got {}",
            n.n()
        )));
    }
    if !is_basis_index(n, b) {
        return Err(Error::NotBasisIndex { b, n: n.n() });
    }
    Ok(coeff_unchecked(n, b, i))
}

#[inline]
pub(crate) fn coeff_unchecked(n: &Modulus, b: u64, i: i64) -> i64 {
    let g = gamma(n, i);
    kappa(n.n(), i) * moebius(g) as i64 * delta(n.n() / g, b as i64, i)
}

/// An element of `Z[α_1]` by its coordinates in the `α_b` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealCycElem {
    modulus: Modulus,
    coords: BTreeMap<u64, BigInt>,
}

impl RealCycElem {
    pub fn zero(n: u64) -> Result<Self> {
        let m = Modulus::new_odd(n)?;
        let coords = indices_for(&m)
            .into_iter()
            .map(|b| (b, BigInt::zero()))
            .collect();
        Ok(RealCycElem { modulus: m, coords })
    }

    pub fn n(&self) -> u64 {
        self.modulus.n()
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn coords(&self) -> &BTreeMap<u64, BigInt> {
        &self.coords
    }

    /// Coordinate at basis index `b`; `None` if `b` is not a basis index.
    pub fn coord(&self, b: u64) -> Option<&BigInt> {
        self.coords.get(&b)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.values().all(Zero::is_zero)
    }

    /// Membership in `k · Z[α_1]`.
    pub fn divisible_by_int(&self, k: u64) -> bool {
        let k = BigInt::from(k);
        self.coords.values().all(|c| c.is_multiple_of(&k))
    }
}

/// Fast path: coordinates of `Σ c · α_i` over `(i, c)` pairs via the closed
/// formula.
pub fn decompose_alpha_combination<C: Into<BigInt>>(
    n: u64,
    terms: impl IntoIterator<Item = (i64, C)>,
) -> Result<RealCycElem> {
    let mut e = RealCycElem::zero(n)?;
    let m = e.modulus.clone();
    for (i, c) in terms {
        let c = c.into();
        for (&b, slot) in e.coords.iter_mut() {
            let k = coeff_unchecked(&m, b, i);
            if k != 0 {
                *slot += &c * k;
            }
        }
    }
    Ok(e)
}

/// General path: coordinates of a real element of `Z[ζ_n]`.
pub fn decompose(x: &CycInt) -> Result<RealCycElem> {
    let n = x.n();
    let m = Modulus::new_odd(n)?;
    if !x.is_real() {
        return Err(Error::NotReal(n));
    }
    let solver = solver(n);
    let v = x.reduced();
    let mut coords = BTreeMap::new();
    let mut sol = Vec::with_capacity(solver.indices.len());
    for (row, &b) in solver.inverse.iter().zip(&solver.indices) {
        let acc: BigInt = row
            .iter()
            .zip(&solver.pivot_rows)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, &r)| a * &v[r])
            .sum();
        let (q, rem) = acc.div_rem(&solver.denominator);
        assert!(
            rem.is_zero(),
            "non-integral coordinate {acc}/{} at basis index {b} for n = {n}: basis property violated",
            solver.denominator
        );
        sol.push(q.clone());
        coords.insert(b, q);
    }
    for (r, target) in v.iter().enumerate() {
        let got: BigInt = solver
            .columns
            .iter()
            .zip(&sol)
            .map(|(col, c)| &col[r] * c)
            .sum();
        assert_eq!(
            &got, target,
            "coordinates for n = {n} do not recompose at power-basis row {r}"
        );
    }
    Ok(RealCycElem { modulus: m, coords })
}

/// `Σ_b C_b · α_b` as an element of `Z[ζ_n]`.
pub fn recompose(e: &RealCycElem) -> CycInt {
    let n = e.n() as i64;
    CycInt::from_exponents(
        e.n(),
        e.coords
            .iter()
            .flat_map(|(&b, c)| [(b as i64, c.clone()), (n - b as i64, c.clone())]),
    )
    .expect("modulus already validated")
}

/// Left inverse of the basis matrix restricted to a set of pivot rows.
struct BasisSolver {
    indices: Vec<u64>,
    /// Power-basis vectors of `α_b`, one per basis index.
    columns: Vec<Vec<BigInt>>,
    pivot_rows: Vec<usize>,
    /// `inverse / denominator` inverts the pivot-row submatrix.
    inverse: Vec<Vec<BigInt>>,
    denominator: BigInt,
}

fn solver(n: u64) -> Arc<BasisSolver> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<BasisSolver>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&n) {
        return Arc::clone(s);
    }
    let built = Arc::new(build_solver(n));
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(built))
}

fn build_solver(n: u64) -> BasisSolver {
    let m = Modulus::new_odd(n).expect("validated by caller");
    let indices = indices_for(&m);
    let columns: Vec<Vec<BigInt>> = indices
        .iter()
        .map(|&b| alpha(n, b as i64).unwrap().reduced().to_vec())
        .collect();
    let h = indices.len();
    let rows = columns.first().map_or(0, Vec::len);

    // Row-reduce a rational copy to find h independent rows.
    let mut work: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            columns
                .iter()
                .map(|col| BigRational::from_integer(col[r].clone()))
                .collect()
        })
        .collect();
    let mut used = vec![false; rows];
    let mut pivot_rows = Vec::with_capacity(h);
    for c in 0..h {
        let p = (0..rows)
            .find(|&r| !used[r] && !work[r][c].is_zero())
            .unwrap_or_else(|| panic!("alpha basis for n = {n} is rank deficient at column {c}"));
        used[p] = true;
        pivot_rows.push(p);
        let pivot = work[p].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == p || row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
    }

    let square: Vec<Vec<BigRational>> = pivot_rows
        .iter()
        .map(|&r| {
            columns
                .iter()
                .map(|col| BigRational::from_integer(col[r].clone()))
                .collect()
        })
        .collect();
    let inv = invert_rational(square).expect("pivot submatrix is invertible");
    let denominator = inv
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let inverse = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| (q * BigRational::from_integer(denominator.clone())).to_integer())
                .collect()
        })
        .collect();
    BasisSolver {
        indices,
        columns,
        pivot_rows,
        inverse,
        denominator,
    }
}

fn invert_rational(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let k = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for x in inv[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..k {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            let (prow, irow) = (a[c].clone(), inv[c].clone());
            for (x, y) in a[r].iter_mut().zip(&prow) {
                *x -= &f * y;
            }
            for (x, y) in inv[r].iter_mut().zip(&irow) {
                *x -= &f * y;
            }
        }
    }
    Some(inv)
}

/// Minimal polynomial of `α_1 = ζ_n + ζ_n^{-1}` over `Q`, odd `n >= 3`,
/// derived from the palindromic `Φ_n` through the Dickson recurrence
/// `D_k = Y·D_{k-1} - D_{k-2}`, `D_0 = 2`, `D_1 = Y`.
pub fn real_minimal_poly(n: u64) -> Result<IntPoly> {
    Modulus::new_odd(n)?;
    let phi = cyclotomic_poly(n);
    let c = phi.coeffs();
    let h = (c.len() - 1) / 2;
    let mut acc = IntPoly::new(vec![c[h].clone()]);
    let mut prev = IntPoly::from_i64(&[2]);
    let mut cur = IntPoly::from_i64(&[0, 1]);
    let y = IntPoly::from_i64(&[0, 1]);
    for k in 1..=h {
        acc = acc.add(&cur.mul(&IntPoly::new(vec![c[h + k].clone()])));
        let next = y.mul(&cur).add(&prev.mul(&IntPoly::from_i64(&[-1])));
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(acc)
}

/// Integer matrix whose row for basis index `b` holds the coordinates of
/// `α_b` in the power basis `1, α_1, …, α_1^{h-1}` of `Z[α_1]`.
pub fn change_of_basis_matrix(n: u64) -> Result<Vec<Vec<BigInt>>> {
    let psi = real_minimal_poly(n)?;
    let h = psi.degree().unwrap_or(0);
    let indices = basis_indices(n)?;
    let y = IntPoly::from_i64(&[0, 1]);
    let reduce = |p: IntPoly| p.div_rem_monic(&psi).1;
    let mut prev = reduce(IntPoly::from_i64(&[2]));
    let mut cur = reduce(y.clone());
    let max_b = indices.last().copied().unwrap_or(0);
    let mut out = Vec::with_capacity(indices.len());
    let mut k = 1u64;
    let row_of = |p: &IntPoly| {
        let mut v = p.coeffs().to_vec();
        v.resize(h, BigInt::zero());
        v
    };
    for &b in &indices {
        while k < b {
            let next = reduce(y.mul(&cur).add(&prev.mul(&IntPoly::from_i64(&[-1]))));
            prev = std::mem::replace(&mut cur, next);
            k += 1;
        }
        out.push(row_of(&cur));
        if k > max_b {
            break;
        }
    }
    Ok(out)
}

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
pub fn integer_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let k = a.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..k - 1 {
        if a[c][c].is_zero() {
            match (c + 1..k).find(|&r| !a[r][c].is_zero()) {
                Some(r) => {
                    a.swap(c, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in c + 1..k {
            for j in c + 1..k {
                let v = (&a[r][j] * &a[c][c] - &a[r][c] * &a[c][j]) / &prev;
                a[r][j] = v;
            }
        }
        prev = a[c][c].clone();
    }
    sign * &a[k - 1][k - 1]
}

/// Determinant of [`change_of_basis_matrix`]; `±1` exactly when the `α_b`
/// form a Z-basis of `Z[α_1]`.
pub fn basis_determinant(n: u64) -> Result<BigInt> {
    Ok(integer_determinant(change_of_basis_matrix(n)?))
}

/// The identity `ζ^i = μ(γ(i)) Σ ζ^b` over `b ∈ B_n` with
/// `b ≡ i (mod n/γ(i))`, checked in `Z[ζ_n]`.
pub fn moebius_expansion_holds(n: u64, i: i64) -> Result<bool> {
    let m = Modulus::new_odd(n)?;
    let g = gamma(&m, i);
    let step = (n / g) as i64;
    let mu = moebius(g) as i64;
    let rhs = CycInt::from_exponents(
        n,
        (0..n as i64)
            .filter(|&b| in_b_set(&m, b) && (b - i).rem_euclid(step) == 0)
            .map(|b| (b, mu)),
    )?;
    Ok(CycInt::root_power(n, i)? == rhs)
}
