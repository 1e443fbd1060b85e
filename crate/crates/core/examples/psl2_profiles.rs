//! Numerical data of PSL(2, q) and the Brauer characters ψ_m on <g_0>.
//!
//!     cargo run --example psl2_profiles

use zassenhaus_psl2::cyclotomic::CycInt;
use zassenhaus_psl2::psl2::{admissible_orders, group_profile, psi_value, theta_exponents};
use zassenhaus_psl2::realbasis::decompose;

fn main() -> zassenhaus_psl2::Result<()> {
    for q in [7, 16, 31, 127, 211, 1024] {
        let g = group_profile(q)?;
        println!(
            "PSL(2,{q:>4}): t={} f={} |G|={} element orders {:?}",
            g.t, g.f, g.order, g.element_orders
        );
        println!("             orders to verify: {:?}", admissible_orders(q)?);
    }
    for q in [2, 3, 12] {
        println!("q = {q}: {}", group_profile(q).unwrap_err());
    }

    let n = 15;
    println!("\npsi_3 on powers of g_0, n = {n}:");
    for i in 0..=7 {
        let v = psi_value(n, 3, i)?;
        let e = decompose(&v.sub(&CycInt::one(n)?)?)?;
        let coords: Vec<String> = e.coords().iter().map(|(b, c)| format!("{b}:{c}")).collect();
        println!(
            "  i={i}: eigenvalue classes {:?}, psi - 1 = {{{}}}",
            theta_exponents(3, i, n),
            coords.join(", ")
        );
    }
    Ok(())
}
