// The two hash maps: bytes → braid (h1) and braid → digest (h2).
//
// cargo run --example hashing

use braidsig::braid::BraidWord;
use braidsig::hashing::{challenge, h1, h1_word, h2};
use braidsig::preset::TOY_6;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let hp = TOY_6.scheme_params().hash;
    println!("h1(\"\") word: {}", h1_word(b"", &hp));
    let x = h1(b"hello", &hp);
    println!("h1(\"hello\"): inf={} factors={} exponent sum={}", x.inf(), x.canonical_length(), x.exponent_sum());

    // equal elements hash equally no matter how they were written
    let a = BraidWord::from_signed(6, &[1, 2, 1, 4])?.normal_form();
    let b = BraidWord::from_signed(6, &[4, 2, 1, 2])?.normal_form();
    assert_eq!(h2(&a), h2(&b));
    println!("h2(σ1σ2σ1σ4) = {:?}", h2(&a));

    // the challenge every scheme signs: h1(h2(β) ‖ m)
    let h = challenge(&a, b"order #7", &hp);
    println!("challenge: sup={} exponent sum={}", h.sup(), h.exponent_sum());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hashing example");
}
