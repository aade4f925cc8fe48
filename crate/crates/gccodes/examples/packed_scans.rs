//! The packed GF(4) word representation and the parallel code scanner.
//!
//! Run with: cargo run --release --example packed_scans

use std::time::Instant;

use gccodes::cyclotomic::{Block, OrbitTable};
use gccodes::gf4::{CodeScanner, Gf4Word};
use gccodes::CyclicCode;

fn main() {
    // a word is two bit planes; labels 0,1,2,3 stand for 0, 1, w, w2
    let v = Gf4Word::from_labels(&[2, 0, 1, 3, 2]);
    println!("labels          : {:?}", v.labels(5));
    println!("hamming weight  : {}", v.hamming_weight());
    println!("GF(2) weight    : {}", v.f2_weight(5));
    println!("coordinate sum  : {}", v.coordinate_sum());
    println!("reversed        : {:?}", v.reversed(5).labels(5));
    println!("times w         : {:?}", v.mul_omega().labels(5));

    // scanners enumerate a cyclic code incrementally: two XORs per codeword
    let t17 = OrbitTable::new(17, 2, 2).unwrap();
    let block = Block::new(t17, [2usize, 8, 9, 15]).unwrap();
    let code = CyclicCode::from_block(&block).unwrap();
    let labels = code.gf4_generator_labels().unwrap();
    println!("\ngenerator labels of the [17, 13] code: {labels:?}");

    let scanner = CodeScanner::new(&labels, 17);
    println!("message space: {} words", scanner.message_count());

    let started = Instant::now();
    let hist = scanner.fold(
        || vec![0u64; 18],
        |h, w| h[w.hamming_weight() as usize] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    let elapsed = started.elapsed().as_secs_f64();
    println!(
        "full Hamming histogram in {elapsed:.2}s ({:.0}M words/s):",
        scanner.message_count() as f64 / elapsed / 1e6
    );
    for (w, count) in hist.iter().enumerate() {
        if *count != 0 {
            println!("  wt {w:2}: {count}");
        }
    }
    // the zero word is the only weight-0 word; d = first nonzero bucket
    let d = (1..18).find(|&w| hist[w] != 0).unwrap();
    println!("minimum distance read off the histogram: {d}");
}
