//! Idempotent generators, the quaternary block duality B -> B*, and
//! self-duality of extended codes.
//!
//! Run with: cargo run --release --example idempotents_and_duality

use gccodes::code::{
    dual_extended_check, quaternary_dual_block, quaternary_idempotent_form, LambdaChoice,
};
use gccodes::cyclotomic::{quadratic_residues, Block, OrbitTable};
use gccodes::CyclicCode;

const GUARD: u64 = 1 << 28;

fn main() {
    // n = 3, B = {1}: e(x) = w2 x + w x^2
    let t3 = OrbitTable::new(3, 2, 2).unwrap();
    let b3 = Block::new(t3, [1usize]).unwrap();
    let code = CyclicCode::from_block(&b3).unwrap();
    let e = code.idempotent().unwrap();
    println!("n = 3, B = {{1}}:");
    for j in 0..3 {
        println!("  e[{j}] = element #{}", e.coeff(j).index());
    }

    // the dual block B* collects the exponents where the root power sum is
    // lambda; applying it twice returns -B or -2B by n mod 4
    let star = quaternary_dual_block(&b3, LambdaChoice::Omega).unwrap();
    let star2 = quaternary_dual_block(&star, LambdaChoice::Omega).unwrap();
    println!(
        "  B* = {:?}, B** = {:?}, -2B = {:?} (n = 3 mod 4)",
        star.elements(),
        star2.elements(),
        b3.scaled(-2)
    );

    // complete quaternary idempotents have the closed shape
    // (n+1)/2 + lambda S_B* + lambda^2 S_2B*
    let form = quaternary_idempotent_form(&b3, LambdaChoice::Omega).unwrap();
    assert_eq!(form, e);
    println!("  closed idempotent form agrees");

    // n = 13 (1 mod 4): the QR block is fixed by the double dual
    let t13 = OrbitTable::new(13, 2, 2).unwrap();
    let qr13 = Block::new(t13, quadratic_residues(13)).unwrap();
    let star = quaternary_dual_block(&qr13, LambdaChoice::Omega).unwrap();
    let star2 = quaternary_dual_block(&star, LambdaChoice::Omega).unwrap();
    println!("\nn = 13 QR: B* = {:?}", star.elements());
    assert_eq!(star2.element_set(), qr13.scaled(-1));
    println!("  B** = -B confirmed");

    // extended self-duality tracks ord(2 mod n) mod 4
    println!("\nextended-code self-duality:");
    for (n, elements) in [
        (3usize, vec![1usize]),
        (11, quadratic_residues(11)),
        (13, quadratic_residues(13)),
    ] {
        let t = OrbitTable::new(n, 2, 2).unwrap();
        let s = t.s();
        let b = Block::new(t, elements).unwrap();
        let self_dual = dual_extended_check(&b, GUARD).unwrap();
        println!("  n = {n}: ord(2 mod n) = {s}, self-dual = {self_dual}");
    }
}
