//! The per-divisor elimination: candidate divisors d, the admissible
//! eigenvalue tuples, and the certificate for each case.
//!
//!     cargo run --release --example case_analysis [n d]

use zassenhaus_psl2::help::{
    bound_admissible, bound_check, candidate_ds, cb_difference, check_case, enumerate_nu_tuples,
    NuTuple,
};

fn main() -> zassenhaus_psl2::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    if let [n, d] = args[..] {
        println!("{}", check_case(n, d)?.to_json());
        return Ok(());
    }

    println!(
        "odd d <= 10^4 passing d <= 1 + 2^(P(d)+2): {:?}",
        bound_admissible(10_000)
    );
    for n in [15, 27, 45, 63, 75, 105] {
        let r = candidate_ds(n)?;
        match r.reason {
            Some(why) => println!("n = {n:>3}: not applicable ({why})"),
            None => println!(
                "n = {n:>3}: candidates {:?}, rejected {:?}",
                r.ds(),
                r.rejected.iter().map(|x| x.d).collect::<Vec<_>>()
            ),
        }
    }

    println!("\ntuples for (15, 3):");
    for t in enumerate_nu_tuples(15, 3)? {
        let diffs: Vec<i64> = [1, 2, 4, 7]
            .iter()
            .map(|&b| cb_difference(&t, b))
            .collect::<Result<_, _>>()?;
        println!(
            "  nu = {:?}  differences at b=1,2,4,7: {diffs:?}  {:?}",
            t.nus,
            bound_check(&t)?
        );
    }
    let id = NuTuple::identity(15, 3);
    println!(
        "  identity {:?} is admissible: {}",
        id.nus,
        id.is_admissible()
    );

    println!();
    for (n, d) in [
        (15, 3),
        (15, 5),
        (21, 3),
        (21, 7),
        (35, 7),
        (45, 5),
        (45, 15),
        (75, 3),
    ] {
        let c = check_case(n, d)?;
        println!(
            "({n:>2},{d:>2}) {:?}: {:>5} tuples, {} near misses kept, stats {:?}",
            c.verdict,
            c.tuples_examined,
            c.near_miss_witnesses.len(),
            c.pruning_stats
        );
    }
    Ok(())
}
