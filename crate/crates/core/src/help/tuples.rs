//! Eigenvalue exponent tuples `ν_1..ν_d` of `Θ_d(u)` compatible with the
//! known eigenvalues of every proper power of `u`, and the per-tuple
//! coefficient differences in the `α_b` basis.
//!
//! A tuple is admissible when, for every prime `p | n`, the `±` classes of
//! the `ν_i` modulo `n/p` agree as a multiset with those of `1..d`. Divisors
//! `c` with more than one prime factor add nothing: `n/c` divides some `n/p`.
//!
//! The search fixes the classes modulo `n/p_1` (`p_1` the smallest prime)
//! position by position, `ν_i ~ i`, and lifts each to the classes modulo `n`
//! above it; the remaining primes are enforced by running multiset counts.
//! Positions with the same class modulo `n/p_1` form a group and receive a
//! nondecreasing run of lifts, so every multiset is produced once.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{class_rep, prime_count, Modulus};
use crate::realbasis::{basis_indices, coeff_unchecked};

/// `ν_1..ν_d` as class representatives in `[0, n/2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NuTuple {
    pub n: u64,
    pub d: u64,
    pub nus: Vec<u64>,
}

impl NuTuple {
    /// `ν_i = i`, the tuple of `g_0` itself.
    pub fn identity(n: u64, d: u64) -> Self {
        NuTuple {
            n,
            d,
            nus: (1..=d as i64).map(|i| class_rep(i, n)).collect(),
        }
    }

    /// The `ν` values in ascending order.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.nus.clone();
        v.sort_unstable();
        v
    }

    /// Checks the multiset constraints directly, prime by prime.
    pub fn is_admissible(&self) -> bool {
        let Ok(m) = Modulus::new(self.n) else {
            return false;
        };
        if self.nus.len() as u64 != self.d {
            return false;
        }
        let ok = m.primes().all(|p| {
            let k = self.n / p;
            let mut a: Vec<u64> = self.nus.iter().map(|&v| class_rep(v as i64, k)).collect();
            let mut b: Vec<u64> = (1..=self.d as i64).map(|i| class_rep(i, k)).collect();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        });
        ok
    }
}

/// Coefficient table `C_b(α_x)` for `x = 0..=n/2` and every basis index `b`.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    n: u64,
    basis: Vec<u64>,
    rows: Vec<Vec<i64>>,
}

impl CoeffTable {
    pub fn new(n: u64) -> Result<Self> {
        let basis = basis_indices(n)?;
        let m = Modulus::new(n)?;
        let rows = (0..=n / 2)
            .map(|x| {
                basis
                    .iter()
                    .map(|&b| coeff_unchecked(&m, b, x as i64))
                    .collect()
            })
            .collect();
        Ok(CoeffTable { n, basis, rows })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn row(&self, x: i64) -> &[i64] {
        &self.rows[class_rep(x, self.n) as usize]
    }

    /// `Σ_i C_b(α_{ν_i}) − Σ_i C_b(α_i)` for every basis index `b`.
    pub fn difference(&self, t: &NuTuple) -> Vec<i64> {
        let mut diff = vec![0i64; self.basis.len()];
        for (i, &v) in t.nus.iter().enumerate() {
            for (s, (a, b)) in diff
                .iter_mut()
                .zip(self.row(v as i64).iter().zip(self.row(i as i64 + 1)))
            {
                *s += a - b;
            }
        }
        diff
    }
}

/// The coefficient difference at a single basis index `b`.
pub fn cb_difference(t: &NuTuple, b: u64) -> Result<i64> {
    let m = Modulus::new_odd(t.n)?;
    if !crate::realbasis::is_basis_index(&m, b) {
        return Err(Error::NotBasisIndex { b, n: t.n });
    }
    Ok(t.nus
        .iter()
        .enumerate()
        .map(|(i, &v)| coeff_unchecked(&m, b, v as i64) - coeff_unchecked(&m, b, i as i64 + 1))
        .sum())
}

/// Largest `|difference|` over the basis, and the bound it must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub max_abs_diff: i64,
    pub lemma_bound: i64,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.max_abs_diff <= self.lemma_bound
    }
}

/// `2^{P(d)+2}`, plus one when some `ν_i ≡ 0 (mod n)`.
pub fn lemma_bound(t: &NuTuple) -> i64 {
    let base = 1i64 << (prime_count(t.d) + 2);
    if t.nus.contains(&0) {
        base + 1
    } else {
        base
    }
}

pub fn bound_check(t: &NuTuple) -> Result<BoundCheck> {
    let table = CoeffTable::new(t.n)?;
    Ok(bound_check_with(&table, t))
}

pub(crate) fn bound_check_with(table: &CoeffTable, t: &NuTuple) -> BoundCheck {
    BoundCheck {
        max_abs_diff: table
            .difference(t)
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or(0),
        lemma_bound: lemma_bound(t),
    }
}

/// At most one `ν_i ≡ 0 (mod n)`, and only when `n/d` is the smallest prime
/// of `n`.
pub fn kappa_filter(t: &NuTuple) -> bool {
    let zeros = t.nus.iter().filter(|&&v| v == 0).count();
    match zeros {
        0 => true,
        1 => Modulus::new(t.n)
            .ok()
            .and_then(|m| m.smallest_prime())
            .is_some_and(|p| t.d * p == t.n),
        _ => false,
    }
}

/// Precomputed search structure for one `(n, d)`.
#[derive(Debug, Clone)]
pub struct TupleSpace {
    n: u64,
    d: u64,
    /// positions `0..d` reordered so that each group is contiguous
    order: Vec<usize>,
    /// `(start, len, lifts)` per group, in `order`
    groups: Vec<(usize, usize, Vec<u64>)>,
    /// for every prime `p ≠ p_1`: modulus `n/p` and target class counts
    others: Vec<(u64, Vec<i32>)>,
}

impl TupleSpace {
    /// Requires `n` odd, not a prime power, and `1 < d < n` with `d | n`.
    pub fn new(n: u64, d: u64) -> Result<Self> {
        let m = Modulus::new_odd(n)?;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, n });
        }
        if d == 1 || d == n {
            return Err(Error::Invalid(format!(
                "d must satisfy 1 < d < n, got d = {d}"
            )));
        }
        if m.is_prime_power() {
            return Err(Error::OutOfScope {
                n,
                reason: "prime-power order".into(),
            });
        }
        let primes: Vec<u64> = m.primes().collect();
        let key_mod = n / primes[0];
        let mut keys: Vec<(u64, usize)> = (0..d as usize)
            .map(|i| (class_rep(i as i64 + 1, key_mod), i))
            .collect();
        keys.sort_unstable();
        let order: Vec<usize> = keys.iter().map(|&(_, i)| i).collect();
        let mut groups = Vec::new();
        let mut start = 0;
        while start < keys.len() {
            let key = keys[start].0;
            let len = keys[start..].iter().take_while(|&&(k, _)| k == key).count();
            let mut lifts: Vec<u64> = (0..primes[0] as i64)
                .flat_map(|j| {
                    let base = j * key_mod as i64;
                    [
                        class_rep(base + key as i64, n),
                        class_rep(base - key as i64, n),
                    ]
                })
                .collect();
            lifts.sort_unstable();
            lifts.dedup();
            groups.push((start, len, lifts));
            start += len;
        }
        let others = primes[1..]
            .iter()
            .map(|&p| {
                let k = n / p;
                let mut counts = vec![0i32; (k / 2 + 1) as usize];
                for i in 1..=d as i64 {
                    counts[class_rep(i, k) as usize] += 1;
                }
                (k, counts)
            })
            .collect();
        Ok(TupleSpace {
            n,
            d,
            order,
            groups,
            others,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    fn initial_state(&self) -> SearchState {
        SearchState {
            chosen: vec![0; self.d as usize],
            counts: self.others.iter().map(|(_, c)| c.clone()).collect(),
        }
    }

    /// Assign `v` at slot `slot` (index into `order`); false on conflict,
    /// in which case nothing is changed.
    fn push(&self, st: &mut SearchState, slot: usize, v: u64) -> bool {
        let fits = self
            .others
            .iter()
            .zip(&st.counts)
            .all(|((k, _), c)| c[class_rep(v as i64, *k) as usize] > 0);
        if !fits {
            return false;
        }
        for ((k, _), c) in self.others.iter().zip(st.counts.iter_mut()) {
            c[class_rep(v as i64, *k) as usize] -= 1;
        }
        st.chosen[slot] = v;
        true
    }

    fn pop(&self, st: &mut SearchState, slot: usize) {
        let v = st.chosen[slot];
        for (idx, (k, _)) in self.others.iter().enumerate() {
            st.counts[idx][class_rep(v as i64, *k) as usize] += 1;
        }
    }

    fn tuple_of(&self, st: &SearchState) -> NuTuple {
        let mut nus = vec![0; self.d as usize];
        for (slot, &pos) in self.order.iter().enumerate() {
            nus[pos] = st.chosen[slot];
        }
        NuTuple {
            n: self.n,
            d: self.d,
            nus,
        }
    }

    /// Every admissible tuple, in search order.
    pub fn for_each(&self, mut f: impl FnMut(&NuTuple)) {
        let mut st = self.initial_state();
        self.search(&mut st, 0, 0, 0, &mut f);
    }

    /// Choices for the first `k` groups (pruned), as slot values.
    pub fn prefixes(&self, k: usize) -> Vec<Vec<u64>> {
        let k = k.min(self.groups.len());
        let slots = self.groups.get(k).map_or(self.d as usize, |g| g.0);
        let mut out = Vec::new();
        let mut st = self.initial_state();
        self.search_until(&mut st, 0, 0, 0, k, &mut |s: &SearchState| {
            out.push(s.chosen[..slots].to_vec())
        });
        out
    }

    /// Prefix length giving at least `target` work units (or all groups).
    pub fn split_depth(&self, target: usize) -> usize {
        let mut k = 0;
        while k < self.groups.len() && self.prefixes(k).len() < target {
            k += 1;
        }
        k
    }

    /// Tuples extending a prefix from [`TupleSpace::prefixes`].
    pub fn for_each_with_prefix(&self, prefix: &[u64], mut f: impl FnMut(&NuTuple)) {
        let mut st = self.initial_state();
        let mut g = 0;
        let mut slot = 0;
        while slot < prefix.len() {
            if !self.push(&mut st, slot, prefix[slot]) {
                return;
            }
            slot += 1;
            if slot == self.groups[g].0 + self.groups[g].1 {
                g += 1;
            }
        }
        self.search(&mut st, g, slot, 0, &mut f);
    }

    fn search(
        &self,
        st: &mut SearchState,
        g: usize,
        slot: usize,
        min_lift: usize,
        f: &mut impl FnMut(&NuTuple),
    ) {
        let groups = self.groups.len();
        self.search_until(st, g, slot, min_lift, groups, &mut |s: &SearchState| {
            f(&self.tuple_of(s))
        });
    }

    /// Depth-first search over groups `g..stop`; `min_lift` keeps runs
    /// inside a group nondecreasing.
    fn search_until(
        &self,
        st: &mut SearchState,
        g: usize,
        slot: usize,
        min_lift: usize,
        stop: usize,
        f: &mut impl FnMut(&SearchState),
    ) {
        if g == stop {
            f(st);
            return;
        }
        let (start, len, ref lifts) = self.groups[g];
        let end = start + len;
        for (li, &v) in lifts.iter().enumerate().skip(min_lift) {
            if !self.push(st, slot, v) {
                continue;
            }
            if slot + 1 == end {
                self.search_until(st, g + 1, slot + 1, 0, stop, f);
            } else {
                self.search_until(st, g, slot + 1, li, stop, f);
            }
            self.pop(st, slot);
        }
    }
}

#[derive(Debug, Clone)]
struct SearchState {
    chosen: Vec<u64>,
    counts: Vec<Vec<i32>>,
}

/// All admissible tuples for `(n, d)` in search order.
pub fn enumerate_nu_tuples(n: u64, d: u64) -> Result<Vec<NuTuple>> {
    let space = TupleSpace::new(n, d)?;
    let mut out = Vec::new();
    space.for_each(|t| out.push(t.clone()));
    Ok(out)
}
