// Words, Garside normal forms, and the canonical encoding.
//
// cargo run --example normal_form

use braidsig::braid::{delta, BraidWord, NormalForm};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // σ1σ2σ1 and σ2σ1σ2 are the same element of B_3: the half twist Δ
    let a = BraidWord::from_signed(3, &[1, 2, 1])?;
    let b = BraidWord::from_signed(3, &[2, 1, 2])?;
    println!("{a} == {b}: {}", a.equals(&b)?);
    let d = a.normal_form();
    println!("normal form of {a}: inf={} sup={} factors={}", d.inf(), d.sup(), d.canonical_length());

    // a mixed word in B_5, its normal form, and a word spelling that normal form back
    let w = BraidWord::from_signed(5, &[1, -3, 2, 4, -1, 3, 3, -2])?;
    let x = w.normal_form();
    println!("{w} -> Δ^{} · {} simple factors (left-weighted: {})", x.inf(), x.canonical_length(), x.is_left_weighted());
    for (i, f) in x.factors().iter().enumerate() {
        println!("  A_{} strand images {:?}", i + 1, f.images());
    }
    assert_eq!(x.to_word().normal_form(), x);

    // inverse and the Δ-conjugation automorphism τ
    assert!(x.mul(&x.inverse()).is_identity());
    let dl = delta(5)?.normal_form();
    assert_eq!(dl.inverse().mul(&x).mul(&dl), x.tau());
    println!("τ(x) = Δ⁻¹xΔ has exponent sum {}", x.tau().exponent_sum());

    let bytes = x.encode();
    println!("encoding ({} bytes): {}", bytes.len(), bytes.iter().map(|b| format!("{b:02x}")).collect::<String>());
    assert_eq!(NormalForm::decode(&bytes)?, x);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("normal_form example");
}
