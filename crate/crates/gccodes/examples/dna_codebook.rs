//! Building and certifying constant GC-content DNA codebooks.
//!
//! Run with: cargo run --release --example dna_codebook

use gccodes::cyclotomic::{quadratic_residues, Block, OrbitTable};
use gccodes::dna::{
    build_even_subcode_codebook, build_rc_pair_split_codebook, headline_bound, lower_bound,
    verify_codebook, VerifyOptions,
};
use gccodes::CyclicCode;

const GUARD: u64 = 1 << 28;

fn main() {
    // the QR code at n = 13 has minimum distance 5
    let t13 = OrbitTable::new(13, 2, 2).unwrap();
    let qr = Block::new(t13, quadratic_residues(13)).unwrap();
    let code = CyclicCode::from_block(&qr).unwrap();
    let d = code.min_distance(GUARD).unwrap();
    println!("n = 13 QR code: d = {d}");

    // construction 1: words of the even-weight subcode with GC-content 7
    let book = build_even_subcode_codebook(&code, d, GUARD).unwrap();
    println!(
        "even-subcode book: {} strands, gc = {}",
        book.len(),
        book.gc_weight()
    );
    for word in book.words().take(4) {
        println!("  {}", word.letters());
    }

    // exhaustive certification of all three conditions
    let report = verify_codebook(&book, &VerifyOptions::default());
    println!(
        "verify: min distance = {:?}, min RC distance = {}, gc uniform = {}, pass = {}",
        report.min_pairwise_distance, report.min_rc_cross_distance, report.gc_uniform, report.pass
    );

    // construction 2: the RC-pair split gives a book of the same size
    let split = build_rc_pair_split_codebook(&code, d, GUARD).unwrap();
    println!("RC-pair split book: {} strands", split.len());
    assert_eq!(split.len(), book.len());

    // closed-form sizes, no enumeration needed
    println!("\nclosed-form codebook sizes (block, d, size):");
    let t17 = OrbitTable::new(17, 2, 2).unwrap();
    let b1 = Block::new(std::sync::Arc::clone(&t17), [2usize, 8, 9, 15]).unwrap();
    println!(
        "  n=17 {{2,8,9,15}}        d=4: {}",
        lower_bound(17, &b1, 4).unwrap()
    );
    let b2 = Block::new(t17, [2usize, 6, 7, 8, 9, 10, 11, 15]).unwrap();
    println!(
        "  n=17 complete           d=7: {}",
        lower_bound(17, &b2, 7).unwrap()
    );
    println!(
        "  n=13 QR                 d=5: {}",
        lower_bound(13, &qr, 5).unwrap()
    );
    let t29 = OrbitTable::new(29, 2, 2).unwrap();
    let qr29 = Block::new(t29, quadratic_residues(29)).unwrap();
    println!(
        "  n=29 QR                 d=11: {}",
        lower_bound(29, &qr29, 11).unwrap()
    );
    println!(
        "  complete-code specialization at n = 29: {}",
        headline_bound(29)
    );

    // FASTA export
    let mut fasta = Vec::new();
    book.write_fasta(&mut fasta).unwrap();
    let text = String::from_utf8(fasta).unwrap();
    println!("\nfirst FASTA records:");
    for line in text.lines().take(4) {
        println!("  {line}");
    }
    println!("metadata: {}", book.metadata_json());
}
