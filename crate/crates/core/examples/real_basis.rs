//! The integral basis {α_b} of Z[α_1] for odd n, closed-form coordinates
//! versus the general linear solve, and the unimodularity check.
//!
//!     cargo run --example real_basis [n]

use zassenhaus_psl2::cyclotomic::CycInt;
use zassenhaus_psl2::numtheory::{b_set, euler_phi, Modulus};
use zassenhaus_psl2::realbasis::{
    basis_determinant, basis_indices, coeff_of_alpha, decompose, decompose_alpha_combination,
    real_minimal_poly,
};

fn main() -> zassenhaus_psl2::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(45);
    let m = Modulus::new_odd(n)?;
    let idx = basis_indices(n)?;
    println!("n = {n}, B_n = {:?}", b_set(&m)?);
    println!(
        "basis indices ({} = phi(n)/2 = {}): {idx:?}",
        idx.len(),
        euler_phi(n) / 2
    );
    println!(
        "minimal polynomial of alpha_1 has degree {}",
        real_minimal_poly(n)?.degree().unwrap()
    );
    println!("change-of-basis determinant: {}", basis_determinant(n)?);

    println!("\ncoordinates of alpha_i, closed form:");
    for i in 0..=(n / 2) as i64 {
        let row: Vec<String> = idx
            .iter()
            .map(|&b| coeff_of_alpha(&m, b, i).map(|c| format!("{c:>2}")))
            .collect::<Result<_, _>>()?;
        println!("  i = {i:>2}: {}", row.join(" "));
    }

    // an element given only as an exponent vector goes through the linear solve
    let x = CycInt::from_exponents(n, [(1, 3), (-1, 3), (5, -2), (-5, -2)])?;
    let slow = decompose(&x)?;
    let fast = decompose_alpha_combination(n, [(1, 3i64), (5, -2)])?;
    println!("\n3 alpha_1 - 2 alpha_5:");
    println!("  linear solve: {:?}", nonzero(slow.coords()));
    println!("  closed form:  {:?}", nonzero(fast.coords()));
    println!("  agree: {}", slow == fast);

    match decompose(&CycInt::root_power(n, 1)?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nzeta_{n} itself: {e}"),
    }
    Ok(())
}

fn nonzero(c: &std::collections::BTreeMap<u64, num_bigint::BigInt>) -> Vec<(u64, String)> {
    c.iter()
        .filter(|(_, v)| *v != &num_bigint::BigInt::from(0))
        .map(|(b, v)| (*b, v.to_string()))
        .collect()
}
