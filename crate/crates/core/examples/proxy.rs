// Delegation by warrant, proxy key derivation, proxy signing and verification.
//
// cargo run --example proxy

use braidsig::preset::TOY_6;
use braidsig::schemes::{accept_delegation, delegate, keygen, proxy_sign, proxy_verify, Warrant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sp = TOY_6.scheme_params();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let alice = keygen(&sp, &mut rng)?; // original signer
    let bob = keygen(&sp, &mut rng)?; // proxy

    let warrant = Warrant::new("alice", "bob", 1_000, 2_000, "sign purchase orders under 100")?;
    let d = delegate(&alice, warrant, &sp, &mut rng)?;
    let (pkey, work) = accept_delegation(&bob, &d, alice.public(), &sp.caps)?;
    println!("bob accepted the delegation ({} summit-set elements examined)", work.elements_enumerated);

    let sig = proxy_sign(&pkey, &bob, alice.public(), &sp, &mut rng)?;
    let ok = proxy_verify(&sig, alice.public(), bob.public(), 1_500, &sp);
    println!("verify inside the window: accepted={}", ok.accepted);
    assert!(ok.accepted);

    let late = proxy_verify(&sig, alice.public(), bob.public(), 2_001, &sp);
    println!("verify after the window: accepted={} failed_check={:?}", late.accepted, late.failed_check.map(|c| c.label()));

    let mut forged = sig.clone();
    forged.warrant.message_scope = b"sign anything".to_vec();
    let out = proxy_verify(&forged, alice.public(), bob.public(), 1_500, &sp);
    println!("widened warrant: accepted={} failed_check={:?}", out.accepted, out.failed_check.map(|c| c.label()));
    assert!(!out.accepted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("proxy example");
}
