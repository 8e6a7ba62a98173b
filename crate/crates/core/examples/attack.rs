// Breaking the toy presets: brute-force conjugator search and base problem 1.
//
// cargo run --release --example attack

use std::time::Instant;

use braidsig::braid::{random_braid, Subgroup};
use braidsig::conjugacy::{brute_force_csp, solve_base_problem, SearchSpace};
use braidsig::preset::TOY_6;
use braidsig::schemes::KeyPair;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sp = TOY_6.scheme_params();
    let g = sp.group;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = random_braid(&g, Subgroup::Full, 16, &mut rng)?.normal_form();
    let a = random_braid(&g, Subgroup::Right, 4, &mut rng)?;
    let victim = KeyPair::from_parts(g, a.clone(), x)?;
    let (x, x_prime) = (&victim.public().x, &victim.public().x_prime);

    let t = Instant::now();
    let c = brute_force_csp(x, x_prime, SearchSpace::Full(g.n()), 4).expect("short secrets fall quickly");
    println!("secret {a}, recovered {c} in {:?}", t.elapsed());
    assert_eq!(x.conjugate_by(&c.normal_form()), *x_prime);

    // with a_c in hand (or any right-subgroup conjugator) the designated verifier's β leaks
    let b = random_braid(&g, Subgroup::Left, 16, &mut rng)?.normal_form();
    let alpha = x.conjugate_by(&b);
    let (c, beta) = solve_base_problem(&g, x, x_prime, &alpha, 4).expect("found");
    assert_eq!(beta, alpha.conjugate_by(victim.secret()));
    println!("base problem 1: a_c·α·a_c⁻¹ reproduced with conjugator {c}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("attack example");
}
