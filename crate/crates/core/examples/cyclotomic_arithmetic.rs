//! Exact arithmetic in Z[ζ_n]: cyclotomic polynomials, reduction to the
//! power basis, Galois action.
//!
//!     cargo run --example cyclotomic_arithmetic

use zassenhaus_psl2::cyclotomic::{alpha, cyclotomic_poly, reduce, CycInt};

fn main() -> zassenhaus_psl2::Result<()> {
    for m in [1, 6, 15, 105] {
        let p = cyclotomic_poly(m);
        if m < 100 {
            println!("Phi_{m} = {p}");
        } else {
            let min = p.coeffs().iter().min().unwrap();
            println!(
                "Phi_{m} has degree {}, smallest coefficient {min}",
                p.degree().unwrap()
            );
        }
    }

    let n = 15;
    let z = CycInt::root_power(n, 1)?;
    let zinv = CycInt::root_power(n, -1)?;
    println!("\nin Z[zeta_{n}]:");
    println!("  zeta^-1           = {zinv}");
    println!("  zeta * zeta^-1    = {}", z.mul(&zinv)?);
    println!("  coordinates of zeta^14: {:?}", reduce(&zinv));

    let a1 = alpha(n, 1)?;
    println!("  alpha_1           = {a1}  (real: {})", a1.is_real());
    println!("  zeta              real: {}", z.is_real());
    let a3 = alpha(n, 3)?;
    let rhs = alpha(n, 2)?.add(&alpha(n, 7)?)?.neg();
    println!("  alpha_3 == -(alpha_2 + alpha_7): {}", a3 == rhs);

    // σ_4 : ζ ↦ ζ^4 sends α_1 to α_4
    println!(
        "  sigma_4(alpha_1) == alpha_4: {}",
        a1.galois_apply(4)? == alpha(n, 4)?
    );
    match z.galois_apply(5) {
        Ok(_) => unreachable!(),
        Err(e) => println!("  sigma_5: {e}"),
    }

    let three = CycInt::root_power(3, 1)?.scalar_mul(-2);
    println!("\n-2 zeta_3 divisible by 2: {}", three.divisible_by_int(2));
    Ok(())
}
