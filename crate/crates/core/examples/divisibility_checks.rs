//! Divisibility in Z[ζ_n]: Φ_{n p^m}(ζ_n) ∈ p Z[ζ_n], and the implication
//! "ω_{d/q} = 0 for all prime powers q | d ⇒ ω_d ∈ d Z[ζ_n]" on random
//! instances and on an instance file.
//!
//!     cargo run --example divisibility_checks

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zassenhaus_psl2::divisibility::{
    check_corollary_real, check_nt, check_phi_membership, fold_to_real, omega, phi_value_at_root,
    random_nt_instance, OmegaInstance,
};

fn main() -> zassenhaus_psl2::Result<()> {
    println!("Phi_(n p^m)(zeta_n) mod p:");
    for (n, p, m) in [(15, 3, 1), (15, 3, 2), (21, 7, 1), (9, 2, 2)] {
        let v = phi_value_at_root(n, p, m)?;
        println!(
            "  n={n:>2} p={p} m={m}: divisible {}  value {v}",
            check_phi_membership(n, p, m)?
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    println!("\nrandom instances f = g * prod Phi_(k p^m):");
    for (n, d) in [(15, 3), (15, 15), (45, 9), (63, 21)] {
        let inst = random_nt_instance(n, d, &mut rng)?;
        let v = check_nt(&inst);
        let real = check_corollary_real(n, &fold_to_real(&inst)?, d)?;
        println!(
            "  n={n:>2} d={d:>2}: hypotheses {} conclusion {} | real version {} {}",
            v.hypotheses_hold, v.conclusion_holds, real.hypotheses_hold, real.conclusion_holds
        );
    }

    // the file format read by `zassenhaus nt-check --input`
    let text =
        "# Phi_3 * Phi_5 folded mod X^15 - 1\n15 15\n1\n0\n1\n1\n1\n1\n1\n1\n1\n0\n1\n0\n0\n0\n0\n";
    let inst = OmegaInstance::parse(text)?;
    println!(
        "\nparsed instance n={} d={}: {:?}",
        inst.n(),
        inst.d(),
        check_nt(&inst)
    );
    println!("omega_15 = {}", omega(&inst, 15));
    Ok(())
}
