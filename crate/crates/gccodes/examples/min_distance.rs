//! Exhaustive minimum-distance scans, including the 4^13-word case, and
//! affine automorphisms.
//!
//! Run with: cargo run --release --example min_distance

use std::time::Instant;

use gccodes::cyclotomic::{quadratic_residues, Block, OrbitTable};
use gccodes::CyclicCode;

const GUARD: u64 = 1 << 28;

fn main() {
    // [17, 13] code over GF(4): 4^13 = 67 108 864 codewords
    let t17 = OrbitTable::new(17, 2, 2).unwrap();
    let small = Block::new(std::sync::Arc::clone(&t17), [2usize, 8, 9, 15]).unwrap();
    let code = CyclicCode::from_block(&small).unwrap();
    let started = Instant::now();
    let d = code.min_distance(GUARD).unwrap();
    println!(
        "n = 17, B = {{2,8,9,15}}: dim = {}, d = {d}, scanned {} words in {:.2}s",
        code.dimension(),
        code.word_count(),
        started.elapsed().as_secs_f64()
    );

    // the complete block with the same length: smaller code, larger distance
    let complete = Block::new(t17, [2usize, 6, 7, 8, 9, 10, 11, 15]).unwrap();
    let code = CyclicCode::from_block(&complete).unwrap();
    println!(
        "n = 17, complete block: dim = {}, d = {}",
        code.dimension(),
        code.min_distance(GUARD).unwrap()
    );

    // odd-type words (nonzero coordinate sum) obey wt^r >= n
    let odd = code.min_weight_odd_type(GUARD).unwrap();
    println!(
        "  minimum odd-type weight = {odd} (odd^2 = {} >= 17)",
        odd * odd
    );

    // the QR code at n = 13
    let t13 = OrbitTable::new(13, 2, 2).unwrap();
    let qr = Block::new(t13, quadratic_residues(13)).unwrap();
    let code = CyclicCode::from_block(&qr).unwrap();
    println!(
        "\nn = 13 QR: dim = {}, d = {}",
        code.dimension(),
        code.min_distance(GUARD).unwrap()
    );

    // multipliers stabilizing B act as automorphisms; 3 is a residue, 2 not
    println!(
        "  x -> 3x automorphism? {}",
        code.is_automorphism(3, 0, GUARD).unwrap()
    );
    println!(
        "  x -> 2x automorphism? {}",
        code.is_automorphism(2, 0, GUARD).unwrap()
    );
    println!(
        "  reversible (-B = B)?  {}",
        code.is_reversible(GUARD).unwrap()
    );
}
