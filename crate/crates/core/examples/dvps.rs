// A designated-verifier proxy signature: a proxy signs under a warrant for one verifier.
//
// cargo run --example dvps

use braidsig::preset::TOY_6;
use braidsig::schemes::{accept_delegation, delegate, dvps_sign, dvps_verify, keygen, Warrant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sp = TOY_6.scheme_params();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let alice = keygen(&sp, &mut rng)?;
    let bob = keygen(&sp, &mut rng)?;
    let cindy = keygen(&sp, &mut rng)?;

    let w = Warrant::new("alice", "bob", 0, 10_000, "quote for cindy")?;
    let d = delegate(&alice, w, &sp, &mut rng)?;
    let (pkey, _) = accept_delegation(&bob, &d, alice.public(), &sp.caps)?;
    let sig = dvps_sign(&pkey, &bob, cindy.public(), &sp, &mut rng)?;

    let out = dvps_verify(&sig, &cindy, bob.public(), 5_000, &sp);
    println!("cindy: accepted={} (γ ~ h, δ ~ x_p, γδ ~ h·x_p, γθ ~ h·t_o)", out.accepted);
    println!("{}", out.work.to_kv_lines().trim_end());
    assert!(out.accepted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dvps example");
}
