//! Orbit tables on Z/nZ and block enumeration with filters.
//!
//! Run with: cargo run --release --example blocks_tour

use gccodes::cyclotomic::{
    enumerate_blocks, galois_supplemented_exists, quadratic_residues, BlockFilters, OrbitTable,
};

fn main() {
    // n = 17, q = 2, r = 2: the orbits of <4> refine the orbits of <2>
    let table = OrbitTable::new(17, 2, 2).unwrap();
    println!("n = 17, ord(2 mod 17) = {}", table.s());
    println!("H-orbits (<4>):");
    for orbit in table.h_orbits() {
        println!("  {orbit:?}");
    }
    println!("G-orbits (<2>):");
    for orbit in table.g_orbits() {
        println!("  {orbit:?}");
    }
    println!("quadratic residues mod 17: {:?}", quadratic_residues(17));

    // every valid block, with its flags
    println!("\nall valid blocks at n = 17:");
    for block in enumerate_blocks(&table, &BlockFilters::default()).unwrap() {
        println!(
            "  {:?} complete={} reversible={} selfdual={:?}",
            block.elements(),
            block.is_complete(),
            block.is_reversible(),
            block.is_selfdual().ok(),
        );
    }

    // filters compose
    let complete_only = BlockFilters {
        complete: Some(true),
        ..Default::default()
    };
    let complete = enumerate_blocks(&table, &complete_only).unwrap();
    println!("\ncomplete blocks at n = 17: {}", complete.len());

    // existence criterion: r must divide ord(q mod n)
    for n in [7usize, 17, 13] {
        println!(
            "blocks exist at n = {n}? {}",
            galois_supplemented_exists(n, 2, 2).unwrap()
        );
    }

    // n = 7 fails: ord(2 mod 7) = 3 is odd
    let t7 = OrbitTable::new(7, 2, 2).unwrap();
    let none = enumerate_blocks(&t7, &BlockFilters::default()).unwrap();
    println!("enumeration at n = 7 yields {} blocks", none.len());
}
