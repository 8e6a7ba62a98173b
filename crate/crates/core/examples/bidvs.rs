// A bi-designated-verifier signature: one signing, two designated verifiers.
//
// cargo run --example bidvs

use braidsig::preset::TOY_6;
use braidsig::schemes::{bidvs_sign, bidvs_verify, keygen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sp = TOY_6.scheme_params();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let alice = keygen(&sp, &mut rng)?;
    let cindy = keygen(&sp, &mut rng)?;
    let trevor = keygen(&sp, &mut rng)?;

    let (for_cindy, for_trevor) = bidvs_sign(&alice, cindy.public(), trevor.public(), b"board vote", &sp, &mut rng)?;
    assert_eq!(for_cindy.delta, for_trevor.delta);
    let a = bidvs_verify(&for_cindy, &cindy, alice.public(), &sp);
    let b = bidvs_verify(&for_trevor, &trevor, alice.public(), &sp);
    println!("cindy: {}  trevor: {}", a.accepted, b.accepted);
    let crossed = bidvs_verify(&for_cindy, &trevor, alice.public(), &sp);
    println!("cindy's copy checked by trevor: accepted={}", crossed.accepted);
    assert!(a.accepted && b.accepted && !crossed.accepted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bidvs example");
}
