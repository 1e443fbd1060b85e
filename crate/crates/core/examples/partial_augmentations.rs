//! Partial augmentations ε, the sums λ_i, their inversion, eigenvalue
//! multiplicities, and the bounded exploratory search.
//!
//!     cargo run --release --example partial_augmentations

use zassenhaus_psl2::help::{eps_from_lambdas, explore_eps, lambda_value, multiplicity, AugVector};

fn main() -> zassenhaus_psl2::Result<()> {
    let n = 15;
    let eps = AugVector::new(n, vec![0, 2, -1, 0, 0, 0, 0, 0])?;
    println!("eps = {:?}", eps.eps());
    for i in [1, 2, 3, 15] {
        println!("  lambda_{i:<2} = {}", lambda_value(&eps, i));
    }
    let lams: Vec<_> = (0..n as i64).map(|i| lambda_value(&eps, i)).collect();
    println!(
        "  recovered from all lambda_i: {:?}",
        eps_from_lambdas(&lams, n)?.eps()
    );

    println!("\nmultiplicities of zeta^l in Theta_2(u):");
    for (name, e) in [("g_0", AugVector::indicator(n, 1)?), ("eps", eps)] {
        let mu: Vec<String> = (0..n as i64)
            .map(|l| multiplicity(&e, 2, l).to_string())
            .collect();
        println!("  {name:>3}: {}", mu.join(" "));
    }

    let r = explore_eps(n, 3, 1)?;
    println!(
        "\n|eps_x| <= 1, eps_0 = 0: {} of {} vectors have integral nonnegative multiplicities",
        r.solutions.len(),
        r.examined
    );
    for s in &r.solutions {
        println!("  {s:?}");
    }
    Ok(())
}
