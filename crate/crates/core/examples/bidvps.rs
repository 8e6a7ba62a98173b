// A bi-designated-verifier proxy signature.
//
// cargo run --example bidvps

use braidsig::preset::TOY_6;
use braidsig::schemes::{accept_delegation, bidvps_sign, bidvps_verify, delegate, keygen, Warrant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sp = TOY_6.scheme_params();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let alice = keygen(&sp, &mut rng)?;
    let bob = keygen(&sp, &mut rng)?;
    let cindy = keygen(&sp, &mut rng)?;
    let trevor = keygen(&sp, &mut rng)?;

    let w = Warrant::new("alice", "bob", 0, 10_000, "joint tender")?;
    let d = delegate(&alice, w, &sp, &mut rng)?;
    let (pkey, _) = accept_delegation(&bob, &d, alice.public(), &sp.caps)?;
    let (s1, s2) = bidvps_sign(&pkey, &bob, cindy.public(), trevor.public(), &sp, &mut rng)?;

    let a = bidvps_verify(&s1, &cindy, bob.public(), 100, &sp);
    let b = bidvps_verify(&s2, &trevor, bob.public(), 100, &sp);
    println!("cindy: {}  trevor: {}", a.accepted, b.accepted);
    let mut off_scope = s1.clone();
    off_scope.message = b"something else".to_vec();
    let c = bidvps_verify(&off_scope, &cindy, bob.public(), 100, &sp);
    println!("message outside the warrant: failed_check={:?}", c.failed_check.map(|c| c.label()));
    assert!(a.accepted && b.accepted && !c.accepted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bidvps example");
}
