// Writing and reading key and signature files, raw and as base-64 text.
//
// cargo run --example codec

use braidsig::codec::{armor, dearmor, decode, encode, peek};
use braidsig::preset::TOY_6;
use braidsig::schemes::{dvs_sign, keygen, DvsSignature, PublicKey};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sp = TOY_6.scheme_params();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let alice = keygen(&sp, &mut rng)?;
    let cindy = keygen(&sp, &mut rng)?;

    let public = encode(cindy.public(), sp.group);
    println!("{}", armor(&public)?.trim_end());
    let (back, params) = decode::<PublicKey>(&public)?;
    assert_eq!(&back, cindy.public());
    println!("decoded a public key for l={}, r={}", params.l(), params.r());

    let sig = dvs_sign(&alice, cindy.public(), b"golden", &sp, &mut rng)?;
    let bytes = encode(&sig, sp.group);
    let header = peek(&bytes)?;
    println!("signature file: {} bytes, scheme {:?}", bytes.len(), header.kind);
    let text = armor(&bytes)?;
    let (again, _) = decode::<DvsSignature>(&dearmor(text.as_bytes())?)?;
    assert_eq!(again, sig);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("codec example");
}
