//! Canonical finite fields, Frobenius maps, traces, and roots of unity.
//!
//! Run with: cargo run --release --example fields_and_roots

use gccodes::field::{primitive_nth_root, FieldSpec};

fn main() {
    // Fields are pure functions of (p, M): the modulus is the first monic
    // irreducible of degree M in base-p coefficient order.
    let gf4 = FieldSpec::build(2, 2).unwrap();
    println!("GF(4)     modulus coefficients: {:?}", gf4.modulus());
    let gf4096 = FieldSpec::build(2, 12).unwrap();
    println!("GF(2^12)  modulus coefficients: {:?}", gf4096.modulus());

    // GF(4) = {0, 1, w, w+1} with w the residue of x
    let w = gf4.gen_x();
    let w2 = w.checked_mul(&w).unwrap();
    println!("\nw * w       = element #{}", w2.index());
    println!(
        "w * (w + 1) = element #{}",
        w.checked_mul(&w2).unwrap().index()
    );

    // Frobenius x -> x^2 swaps the two primitive elements
    println!(
        "\nfrobenius(w, 2, 1) = #{}",
        w.frobenius_pow(2, 1).unwrap().index()
    );
    println!(
        "frobenius(w, 2, 2) = #{}",
        w.frobenius_pow(2, 2).unwrap().index()
    );

    // relative trace GF(4) -> GF(2): w + w^2 = 1
    println!("trace(w)  = #{}", w.relative_trace(2, 2).unwrap().index());
    println!(
        "trace(1)  = #{}",
        gf4.one().relative_trace(2, 2).unwrap().index()
    );

    // subfield membership is the Frobenius fixpoint test
    println!("\nw in GF(2)? {}", w.in_subfield(1).unwrap());
    println!("1 in GF(2)? {}", gf4.one().in_subfield(1).unwrap());

    // canonical primitive roots of unity: the least element of exact order n
    let zeta = primitive_nth_root(&gf4096, 13).unwrap();
    println!(
        "\ncanonical 13th root of unity in GF(2^12): element #{}",
        zeta.index()
    );
    println!("zeta^13 = 1? {}", zeta.pow(13).is_one());
    let mut proper_power_hit_one = false;
    for k in 1..13 {
        proper_power_hit_one |= zeta.pow(k).is_one();
    }
    println!("any smaller power = 1? {proper_power_hit_one}");

    // a large field constructs lazily: GF(2^28) hosts the length-29 setting
    let big = FieldSpec::build(2, 28).unwrap();
    let zeta29 = primitive_nth_root(&big, 29).unwrap();
    println!(
        "\nGF(2^28) built; canonical 29th root is element #{}",
        zeta29.index()
    );
}
