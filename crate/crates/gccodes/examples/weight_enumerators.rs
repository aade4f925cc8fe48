//! GC-content (GF(2)-weight) distributions: closed form against the
//! exhaustive oracle, and the psi-image identity for arbitrary divisors.
//!
//! Run with: cargo run --release --example weight_enumerators

use std::collections::BTreeSet;

use num_bigint::BigUint;

use gccodes::cyclotomic::{quadratic_residues, Block, OrbitTable};
use gccodes::CyclicCode;

const GUARD: u64 = 1 << 28;

fn main() {
    // [5, 3] code over GF(4) from the block {1, 4}
    let t5 = OrbitTable::new(5, 2, 2).unwrap();
    let block = Block::new(t5, [1usize, 4]).unwrap();
    let code = CyclicCode::from_block(&block).unwrap();

    let closed = code.fq_weights_closed().unwrap();
    let brute = code.fq_weights_brute(GUARD).unwrap();
    println!("n = 5, block {{1,4}}: w, closed, brute");
    for w in 0..=5 {
        println!("  {w}  {}  {}", closed.count(w), brute.count(w));
    }
    assert_eq!(closed.counts(), brute.counts());

    // the QR code at n = 13: counts are 2 C(13, w)
    let t13 = OrbitTable::new(13, 2, 2).unwrap();
    let qr = Block::new(t13, quadratic_residues(13)).unwrap();
    let qr_code = CyclicCode::from_block(&qr).unwrap();
    let closed = qr_code.fq_weights_closed().unwrap();
    println!("\nn = 13 QR code: b_6 = {} (= 2 C(13,6))", closed.count(6));
    assert_eq!(
        closed.counts(),
        qr_code.fq_weights_brute(GUARD).unwrap().counts()
    );

    // the identity b_w(C) = q^(n - deg lcm) a_(n-w)(psi(C)) holds for every
    // divisor of x^n - 1, coprime to its conjugates or not
    let roots: BTreeSet<usize> = [0usize, 1, 4, 7].into_iter().collect();
    let mixed = CyclicCode::from_root_exponents(9, 2, 2, &roots).unwrap();
    let b = mixed.fq_weights_brute(GUARD).unwrap();
    let a = mixed.psi_image_weights(GUARD).unwrap();
    let scale = BigUint::from(2u32).pow((9 - mixed.conjugate_lcm_degree().unwrap()) as u32);
    println!("\nn = 9, roots {:?} (not Galois coprime):", mixed.roots());
    for w in 0..=9 {
        assert_eq!(b.count(w), &(&scale * a.count(9 - w)));
    }
    println!("  b_w = 2^(n - deg lcm) a_(n-w) checked for every w");

    // the r = 2 structure route computes the same distribution through the
    // binary code generated by gcd(g, g^sigma)
    let via_gcd = mixed.fq_weights_r2(GUARD).unwrap();
    assert_eq!(via_gcd.counts(), b.counts());
    println!("  gcd-code route agrees coefficientwise");

    // Galois conjugation never changes the distribution
    let conj_roots: BTreeSet<usize> = roots.iter().map(|&k| k * 2 % 9).collect();
    let conj = CyclicCode::from_root_exponents(9, 2, 2, &conj_roots).unwrap();
    assert_eq!(conj.fq_weights_brute(GUARD).unwrap().counts(), b.counts());
    println!("  conjugate root set gives the same counts");
}
