// Cycling, decycling, summit sets and the conjugacy decision.
//
// cargo run --example conjugacy

use braidsig::braid::BraidWord;
use braidsig::conjugacy::{cycling, decycling, is_conjugate, summit_representative, super_summit_set, ConjugacyCaps};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let caps = ConjugacyCaps::default();
    let x = BraidWord::from_signed(4, &[1, 2, -3, 2, 1, -1, 3, 3])?.normal_form();
    let c = BraidWord::from_signed(4, &[2, -1, 3, 3, -2])?.normal_form();
    let y = x.conjugate_by(&c);
    println!("x: inf={} sup={}   y = c·x·c⁻¹: inf={} sup={}", x.inf(), x.sup(), y.inf(), y.sup());

    let (cy, _) = cycling(&y);
    let (dy, _) = decycling(&y);
    println!("cycling(y): inf={}   decycling(y): sup={}", cy.inf(), dy.sup());

    let s = summit_representative(&y, &caps);
    let r = &s.representative;
    println!("summit of y: inf={} sup={} after {} cyclings", r.inf(), r.sup(), s.work.cyclings);

    let sss = super_summit_set(&x, 5_000, &caps);
    if let Some(set) = &sss.sss {
        println!("super summit set of x: {} elements", set.len());
    }

    let d = is_conjugate(&x, &y, &caps)?;
    let w = d.witness.expect("conjugate pairs come with a witness");
    println!("is_conjugate: {:?}, witness {w}", d.verdict);
    assert_eq!(x.conjugate_by(&w.normal_form()), y);

    let z = BraidWord::from_signed(4, &[1, 2, 3, 3, 1, -1, 3, 3])?.normal_form();
    println!("x vs {}: {:?}", z.to_word(), is_conjugate(&x, &z, &caps)?.verdict);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("conjugacy example");
}
