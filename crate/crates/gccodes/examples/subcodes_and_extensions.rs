//! Even-weight subcodes, extended codes, general g0-subcodes, and the
//! subset-rank nullspace formula.
//!
//! Run with: cargo run --release --example subcodes_and_extensions

use gccodes::cyclotomic::{quadratic_residues, Block, OrbitTable};
use gccodes::field::FieldSpec;
use gccodes::weights::rank_weight_enumerator;
use gccodes::{CyclicCode, Polynomial};

const GUARD: u64 = 1 << 28;

fn main() {
    let t5 = OrbitTable::new(5, 2, 2).unwrap();
    let code = CyclicCode::from_block(&Block::new(t5, [1usize, 4]).unwrap()).unwrap();

    // C+ keeps the words with zero coordinate sum; its generator is (x-1) g
    let plus = code.even_subcode().unwrap();
    println!(
        "n = 5: dim C = {}, dim C+ = {}",
        code.dimension(),
        plus.dimension()
    );
    let closed = code.fq_weights_even_subcode().unwrap();
    let brute = plus.fq_weights_brute(GUARD).unwrap();
    println!("C+ counts (closed | brute):");
    for w in 0..=5 {
        println!("  w = {w}: {} | {}", closed.count(w), brute.count(w));
    }
    assert_eq!(closed.counts(), brute.counts());

    // extended code: parity coordinate appended, length 6
    let ext_closed = code.fq_weights_extended().unwrap();
    let ext_brute = code.fq_weights_extended_brute(GUARD).unwrap();
    assert_eq!(ext_closed.counts(), ext_brute.counts());
    println!(
        "\nextended code counts: b_6 = {}, b_4 = {}, b_2 = {}, b_0 = {}",
        ext_closed.count(6),
        ext_closed.count(4),
        ext_closed.count(2),
        ext_closed.count(0)
    );

    // the general subcode route: any g0 over GF(2) with g0 g | x^n - 1
    let g0 = Polynomial::x_minus(&code.field().one());
    let via_g0 = code.fq_weights_subcode(&g0, GUARD).unwrap();
    assert_eq!(via_g0.counts(), closed.counts());
    println!("\nsubcode route with g0 = x - 1 matches the C+ closed form");

    // same machinery at n = 13
    let t13 = OrbitTable::new(13, 2, 2).unwrap();
    let qr = CyclicCode::from_block(&Block::new(t13, quadratic_residues(13)).unwrap()).unwrap();
    assert_eq!(
        qr.fq_weights_even_subcode().unwrap().counts(),
        qr.even_subcode()
            .unwrap()
            .fq_weights_brute(GUARD)
            .unwrap()
            .counts()
    );
    println!("n = 13 QR: C+ closed form matches brute force");

    // the rank-sum formula enumerates nullspaces without listing them
    let f2 = FieldSpec::build(2, 1).unwrap();
    let rows: Vec<Vec<_>> = vec![
        vec![f2.one(), f2.zero()],
        vec![f2.one(), f2.one()],
        vec![f2.zero(), f2.one()],
        vec![f2.one(), f2.zero()],
        vec![f2.zero(), f2.zero()],
        vec![f2.one(), f2.one()],
    ];
    let w = rank_weight_enumerator(&rows, 2).unwrap();
    println!("\nrank-sum enumerator of a 6x2 binary kernel:");
    for i in 0..=6 {
        print!(" {}", w.count(i));
    }
    println!("\ntotal = {} = 2^(n - rank)", w.total());
}
