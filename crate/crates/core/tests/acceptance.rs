//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. Runs under `cargo test` as a plain binary (no libtest harness).

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zassenhaus_psl2::cyclotomic::CycInt;
use zassenhaus_psl2::divisibility::{check_nt, check_phi_membership, random_nt_instance};
use zassenhaus_psl2::help::{
    bound_admissible, bound_check, candidate_ds, cb_difference, check_case,
    check_case_with_workers, enumerate_nu_tuples, eps_from_lambdas, lambda_value, verify_order,
    AugVector, Conclusion, NuTuple, Verdict,
};
use zassenhaus_psl2::numtheory::{divisors, euler_phi, Modulus};
use zassenhaus_psl2::realbasis::{
    basis_determinant, basis_indices, coeff_of_alpha, moebius_expansion_holds,
};

const CASES: [(u64, u64); 8] = [
    (15, 3),
    (15, 5),
    (21, 3),
    (21, 7),
    (35, 7),
    (45, 5),
    (45, 15),
    (75, 3),
];

type Check = std::result::Result<String, String>;

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn phi_membership() -> Check {
    let mut count = 0;
    for n in 1..=45u64 {
        for p in [2u64, 3, 5, 7] {
            for m in 1..=2u32 {
                let ok = check_phi_membership(n, p, m).map_err(|e| e.to_string())?;
                ensure(ok, || {
                    format!("Phi_(n p^m)(zeta_n) not divisible: n={n} p={p} m={m}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn nt_divisibility() -> Check {
    let mut count = 0;
    for n in (1..=105u64).step_by(2) {
        for d in divisors(n) {
            let mut rng = ChaCha8Rng::seed_from_u64(n * 1000 + d);
            for k in 0..100 {
                let inst = random_nt_instance(n, d, &mut rng).map_err(|e| e.to_string())?;
                let v = check_nt(&inst);
                ensure(v.hypotheses_hold && v.conclusion_holds, || {
                    format!("n={n} d={d} instance {k}: {v:?}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} instances"))
}

fn real_basis() -> Check {
    let mut coeffs = 0u64;
    for n in (3..=105u64).step_by(2) {
        let basis = basis_indices(n).map_err(|e| e.to_string())?;
        ensure(basis.len() as u64 * 2 == euler_phi(n), || {
            format!(
                "n={n}: |basis| = {} but phi/2 = {}",
                basis.len(),
                euler_phi(n) / 2
            )
        })?;
        ensure(basis == naive_basis_indices(n), || {
            format!("n={n}: basis indices differ from definition")
        })?;
        let det = basis_determinant(n).map_err(|e| e.to_string())?;
        ensure(det.abs().is_one(), || format!("n={n}: determinant {det}"))?;
        let m = Modulus::new_odd(n).map_err(|e| e.to_string())?;
        let table = oracle_alpha_table(n, &basis);
        for i in 0..n as i64 {
            for (k, &b) in basis.iter().enumerate() {
                let got = coeff_of_alpha(&m, b, i).map_err(|e| e.to_string())?;
                ensure(got == table[i as usize][k], || {
                    format!(
                        "n={n} b={b} i={i}: closed form {got}, linear solve {}",
                        table[i as usize][k]
                    )
                })?;
                coeffs += 1;
            }
            ensure(
                moebius_expansion_holds(n, i).map_err(|e| e.to_string())?,
                || format!("n={n} i={i}: Moebius expansion fails"),
            )?;
        }
    }
    Ok(format!("{coeffs} coefficients"))
}

fn case_analysis() -> Check {
    let mut lines = Vec::new();
    for (n, d) in CASES {
        let t = Instant::now();
        let cert = check_case(n, d).map_err(|e| e.to_string())?;
        let took = t.elapsed();
        ensure(cert.verdict == Verdict::Eliminated, || {
            format!("({n},{d}): {:?}", cert.verdict)
        })?;
        ensure(cert.pruning_stats.violations() == 0, || {
            format!("({n},{d}): {:?}", cert.pruning_stats)
        })?;
        ensure(took < Duration::from_secs(60), || {
            format!("({n},{d}) took {took:?}")
        })?;
        lines.push(format!("({n},{d}) {} tuples", cert.tuples_examined));
    }
    let c27 = check_case(27, 9).map_err(|e| e.to_string())?;
    ensure(c27.verdict == Verdict::NotApplicable, || {
        format!("(27,9): {:?}", c27.verdict)
    })?;
    let c = check_case(15, 3).map_err(|e| e.to_string())?;
    let w = c
        .near_miss_witnesses
        .iter()
        .find(|w| {
            NuTuple {
                n: 15,
                d: 3,
                nus: w.nus.clone(),
            }
            .sorted()
                == [2, 6, 7]
        })
        .ok_or("no near miss for {2,6,7} at (15,3)")?;
    ensure(w.b == 1 && w.value == -2, || {
        format!("(15,3) witness {w:?}")
    })?;
    let ba = bound_admissible(10_000);
    ensure(ba == vec![3, 5, 7, 9, 15], || {
        format!("bound_admissible(10^4) = {ba:?}")
    })?;
    Ok(lines.join(", "))
}

fn order_verdicts() -> Check {
    for (q, n) in [(16, 15), (31, 15), (127, 21), (127, 63)] {
        let v = verify_order(n, Some(q)).map_err(|e| e.to_string())?;
        ensure(v.conclusion == Conclusion::Verified, || {
            format!("q={q} n={n}: {:?}", v.conclusion)
        })?;
    }
    let c15 = candidate_ds(15).map_err(|e| e.to_string())?.ds();
    let c21 = candidate_ds(21).map_err(|e| e.to_string())?.ds();
    let c63 = candidate_ds(63).map_err(|e| e.to_string())?.ds();
    ensure(
        c15 == vec![3, 5] && c21 == vec![3, 7] && c63 == vec![3, 7],
        || format!("candidates {c15:?} {c21:?} {c63:?}"),
    )?;
    Ok("4 orders verified".into())
}

fn engine_invariants() -> Check {
    let mut tuples = 0;
    for (n, d) in CASES {
        let basis = basis_indices(n).map_err(|e| e.to_string())?;
        let table = oracle_alpha_table(n, &basis);
        let row = |x: i64| &table[x.rem_euclid(n as i64) as usize];
        for t in enumerate_nu_tuples(n, d).map_err(|e| e.to_string())? {
            let bc = bound_check(&t).map_err(|e| e.to_string())?;
            ensure(bc.holds(), || format!("{t:?}: {bc:?}"))?;
            for (k, &b) in basis.iter().enumerate() {
                let want: i64 = t.nus.iter().map(|&v| row(v as i64)[k]).sum::<i64>()
                    - (1..=d as i64).map(|i| row(i)[k]).sum::<i64>();
                let got = cb_difference(&t, b).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!("{t:?} b={b}: {got} vs oracle {want}")
                })?;
            }
            tuples += 1;
        }
    }
    // full oracle solve for one tuple, independent of the table above
    let t = NuTuple {
        n: 15,
        d: 3,
        nus: vec![6, 2, 7],
    };
    let mut x = CycInt::zero(15).unwrap();
    for (i, &v) in t.nus.iter().enumerate() {
        x = x
            .add(&zassenhaus_psl2::cyclotomic::alpha(15, v as i64).unwrap())
            .unwrap()
            .sub(&zassenhaus_psl2::cyclotomic::alpha(15, i as i64 + 1).unwrap())
            .unwrap();
    }
    let want: Vec<BigInt> = oracle_decompose(&x, &[1, 2, 4, 7])
        .into_iter()
        .map(|q| q.to_integer())
        .collect();
    let got: Vec<BigInt> = [1u64, 2, 4, 7]
        .iter()
        .map(|&b| BigInt::from(cb_difference(&t, b).unwrap()))
        .collect();
    ensure(got == want, || {
        format!("(15,3) {{2,6,7}}: {got:?} vs {want:?}")
    })?;

    let mut vectors = 0;
    for n in [15u64, 21, 35, 45] {
        let mut rng = ChaCha8Rng::seed_from_u64(n);
        for _ in 0..100 {
            let mut eps: Vec<i64> = (0..n / 2).map(|_| rng.gen_range(-5..=5)).collect();
            eps.insert(0, 1 - eps.iter().sum::<i64>());
            let v = AugVector::new(n, eps).map_err(|e| e.to_string())?;
            let lams: Vec<CycInt> = (0..n as i64).map(|i| lambda_value(&v, i)).collect();
            let back = eps_from_lambdas(&lams, n).map_err(|e| e.to_string())?;
            ensure(back == v, || format!("round trip failed for {:?}", v.eps()))?;
            vectors += 1;
        }
    }
    Ok(format!("{tuples} tuples, {vectors} augmentation vectors"))
}

fn worker_determinism() -> Check {
    for (n, d) in CASES {
        let a = check_case_with_workers(n, d, 1)
            .map_err(|e| e.to_string())?
            .to_json();
        let b = check_case_with_workers(n, d, 4)
            .map_err(|e| e.to_string())?
            .to_json();
        ensure(a == b, || {
            format!("({n},{d}): certificates differ between 1 and 4 workers")
        })?;
    }
    Ok("8 certificates".into())
}

fn main() {
    let criteria = [
        Criterion {
            name: "phi-membership",
            limit: Duration::from_secs(60),
            run: phi_membership,
        },
        Criterion {
            name: "nt-divisibility",
            limit: Duration::from_secs(120),
            run: nt_divisibility,
        },
        Criterion {
            name: "real-basis",
            limit: Duration::from_secs(120),
            run: real_basis,
        },
        Criterion {
            name: "case-analysis",
            limit: Duration::from_secs(8 * 60),
            run: case_analysis,
        },
        Criterion {
            name: "order-verdicts",
            limit: Duration::from_secs(300),
            run: order_verdicts,
        },
        Criterion {
            name: "engine-invariants",
            limit: Duration::MAX,
            run: engine_invariants,
        },
        Criterion {
            name: "worker-determinism",
            limit: Duration::MAX,
            run: worker_determinism,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let t = Instant::now();
        let result = (c.run)();
        let took = t.elapsed();
        let result = result.and_then(|msg| {
            if took <= c.limit {
                Ok(msg)
            } else {
                Err(format!("took {took:.2?}, limit {:?}", c.limit))
            }
        });
        match result {
            Ok(msg) => println!("PASS {:<20} {:>9.2?}  {msg}", c.name, took),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:<20} {:>9.2?}  {msg}", c.name, took);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
