//! Order-level verdicts: every admissible order of PSL(2, q) is checked by
//! running all candidate cases.
//!
//!     cargo run --release --example verify_orders [q ...]

use zassenhaus_psl2::help::{verify_order, Conclusion};
use zassenhaus_psl2::psl2::admissible_orders;

fn main() -> zassenhaus_psl2::Result<()> {
    let qs: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let qs = if qs.is_empty() {
        vec![16, 31, 127, 211, 529]
    } else {
        qs
    };
    for q in qs {
        let orders = admissible_orders(q)?;
        if orders.is_empty() {
            println!("q = {q}: nothing to verify");
            continue;
        }
        for n in orders {
            let v = verify_order(n, Some(q))?;
            let mark = match v.conclusion {
                Conclusion::Verified => "verified",
                Conclusion::Inconclusive => "INCONCLUSIVE",
            };
            println!("q = {q:>3}, n = {n:>3}: {mark} via d in {:?}", v.candidates);
        }
    }
    // prime-power orders need no case analysis
    let v = verify_order(25, Some(101))?;
    println!("q = 101, n =  25: {:?} ({:?})", v.conclusion, v.method);
    Ok(())
}
