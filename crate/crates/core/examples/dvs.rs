// A designated-verifier signature: only the named verifier can check it.
//
// cargo run --example dvs

use braidsig::preset::TOY_6;
use braidsig::schemes::{dvs_sign, dvs_verify, keygen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sp = TOY_6.scheme_params();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alice = keygen(&sp, &mut rng)?;
    let cindy = keygen(&sp, &mut rng)?;
    let eve = keygen(&sp, &mut rng)?;

    let sig = dvs_sign(&alice, cindy.public(), b"the offer stands", &sp, &mut rng)?;
    let by_cindy = dvs_verify(&sig, &cindy, alice.public(), &sp);
    let by_eve = dvs_verify(&sig, &eve, alice.public(), &sp);
    println!("cindy: accepted={}", by_cindy.accepted);
    println!("eve:   accepted={} failed_check={:?}", by_eve.accepted, by_eve.failed_check.map(|c| c.label()));
    assert!(by_cindy.accepted && !by_eve.accepted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dvs example");
}
