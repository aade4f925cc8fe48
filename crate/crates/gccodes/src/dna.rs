//! DNA words, constant GC-content codebooks, and the reverse-complement
//! distance constraints.
//!
//! The nucleotide alphabet maps onto GF(4) as G = 0, C = 1, A = w, T = w2.
//! Complementation is then "add 1", which swaps A/T and G/C, and the
//! GC-content of a strand is exactly the GF(2)-weight of its field form.
//!
//! Codebooks come from reversible codes over GF(4) containing the all-ones
//! word, by either of two constructions:
//!
//! * `EvenSubcode`: the words of the even-weight subcode C+ whose GC-content
//!   is the odd one of (n-1)/2 and (n+1)/2. Reverse-complements of C+ land
//!   outside C+, so the RC constraint is inherited from the distance of C.
//! * `RcPairSplit`: C splits into RC-pairs {v, v^RC}; keeping the
//!   lexicographically smaller of each pair and filtering to GC-content
//!   (n+1)/2 gives the same count inside a set free of RC collisions.

use std::io::Write;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::code::CyclicCode;
use crate::cyclotomic::Block;
use crate::error::{Error, Result};
use crate::gf4::Gf4Word;
use crate::weights::binomial;

pub const LETTERS: [char; 4] = ['G', 'C', 'A', 'T'];

pub fn letter_of_label(label: u8) -> char {
    LETTERS[label as usize]
}

pub fn label_of_letter(c: char) -> Option<u8> {
    match c.to_ascii_uppercase() {
        'G' => Some(0),
        'C' => Some(1),
        'A' => Some(2),
        'T' => Some(3),
        _ => None,
    }
}

/// Reverse-complement of a packed GF(4) word: coordinates reversed, then 1
/// added to every coordinate.
pub fn reverse_complement(w: Gf4Word, n: usize) -> Gf4Word {
    w.reversed(n).complemented(n)
}

/// Number of coordinates lying in GF(2): the GC-content.
pub fn gc_content(w: Gf4Word, n: usize) -> usize {
    w.f2_weight(n) as usize
}

/// A DNA strand and its GF(4) word, bijective images of each other.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DnaWord {
    n: usize,
    word: Gf4Word,
}

impl DnaWord {
    pub fn from_word(word: Gf4Word, n: usize) -> DnaWord {
        DnaWord { n, word }
    }

    pub fn from_letters(s: &str) -> Result<DnaWord> {
        let labels = s
            .chars()
            .map(|c| {
                label_of_letter(c)
                    .ok_or_else(|| Error::Unsupported(format!("'{c}' is not a nucleotide letter")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(DnaWord {
            n: labels.len(),
            word: Gf4Word::from_labels(&labels),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> Gf4Word {
        self.word
    }

    pub fn labels(&self) -> Vec<u8> {
        self.word.labels(self.n)
    }

    pub fn letters(&self) -> String {
        self.labels().into_iter().map(letter_of_label).collect()
    }

    pub fn gc_content(&self) -> usize {
        gc_content(self.word, self.n)
    }

    pub fn reverse_complement(&self) -> DnaWord {
        DnaWord {
            n: self.n,
            word: reverse_complement(self.word, self.n),
        }
    }
}

/// Which construction produced a codebook.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    EvenSubcode,
    RcPairSplit,
}

impl Construction {
    pub fn tag(&self) -> &'static str {
        match self {
            Construction::EvenSubcode => "even_subcode",
            Construction::RcPairSplit => "rc_pair_split",
        }
    }
}

/// A constant GC-content codebook with its provenance.
pub struct DnaCodebook {
    n: usize,
    words: Vec<Gf4Word>,
    claimed_d: usize,
    gc_weight: usize,
    block: Vec<usize>,
    construction: Construction,
}

impl DnaCodebook {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn claimed_distance(&self) -> usize {
        self.claimed_d
    }

    pub fn gc_weight(&self) -> usize {
        self.gc_weight
    }

    pub fn block_elements(&self) -> &[usize] {
        &self.block
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn packed_words(&self) -> &[Gf4Word] {
        &self.words
    }

    pub fn words(&self) -> impl Iterator<Item = DnaWord> + '_ {
        self.words.iter().map(|&w| DnaWord::from_word(w, self.n))
    }

    /// One record per word: `>word_<index> gc=<w>` then the strand.
    pub fn write_fasta(&self, out: &mut impl Write) -> std::io::Result<()> {
        for (i, w) in self.words().enumerate() {
            writeln!(out, ">word_{i} gc={}", self.gc_weight)?;
            writeln!(out, "{}", w.letters())?;
        }
        Ok(())
    }

    pub fn metadata_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "d": self.claimed_d,
            "w": self.gc_weight,
            "block": self.block,
            "count": self.len(),
            "construction": self.construction.tag(),
        })
    }
}

fn codebook_preconditions<'a>(code: &'a CyclicCode, what: &str) -> Result<&'a Block> {
    let block = code.block().ok_or(Error::NoBlock)?;
    if !block.is_reversible() {
        return Err(Error::NotReversible);
    }
    if !code.is_galois_coprime()? {
        return Err(Error::NotGaloisCoprime);
    }
    if code.n() % 2 == 0 {
        return Err(Error::Unsupported(format!("{what} requires odd length")));
    }
    Ok(block)
}

/// Expected codebook size 2^(n - 2 deg g - 1) C(n, (n+1)/2) for a reversible
/// block B of length n; deg g = |B|.
pub fn lower_bound(n: usize, block: &Block, _claimed_d: usize) -> Result<BigUint> {
    if !block.is_reversible() {
        return Err(Error::NotReversible);
    }
    let exp = n - 2 * block.len() - 1;
    Ok(BigUint::from(2u32).pow(exp as u32) * binomial(n, (n + 1) / 2))
}

/// The complete-code specialization C(n, (n+1)/2).
pub fn headline_bound(n: usize) -> BigUint {
    binomial(n, (n + 1) / 2)
}

fn merge_words(mut a: Vec<Gf4Word>, b: Vec<Gf4Word>) -> Vec<Gf4Word> {
    a.extend(b);
    a
}

/// Constant GC-content codebook from the even-weight subcode: the words of
/// C+ of GC-content equal to the odd one of (n-1)/2 and (n+1)/2.
pub fn build_even_subcode_codebook(
    code: &CyclicCode,
    claimed_d: usize,
    guard: u64,
) -> Result<DnaCodebook> {
    let block = codebook_preconditions(code, "even-subcode construction")?;
    let n = code.n();
    let target = if ((n - 1) / 2) % 2 == 1 {
        (n - 1) / 2
    } else {
        (n + 1) / 2
    };
    let plus = code.even_subcode()?;
    if plus.word_count() > guard as u128 {
        return Err(Error::GuardExceeded {
            required: plus.word_count(),
            guard,
        });
    }
    let scanner = plus.scanner()?;
    let words = scanner.fold(
        Vec::new,
        |acc: &mut Vec<Gf4Word>, w| {
            if gc_content(w, n) == target {
                acc.push(w);
            }
        },
        merge_words,
    );
    let book = DnaCodebook {
        n,
        words,
        claimed_d,
        gc_weight: target,
        block: block.elements().to_vec(),
        construction: Construction::EvenSubcode,
    };
    check_cardinality(&book, code)?;
    Ok(book)
}

/// Constant GC-content codebook by the RC-pair split: of each pair
/// {v, v^RC} in C keep the lexicographically smaller word, then filter to
/// GC-content (n+1)/2.
pub fn build_rc_pair_split_codebook(
    code: &CyclicCode,
    claimed_d: usize,
    guard: u64,
) -> Result<DnaCodebook> {
    let block = codebook_preconditions(code, "RC-pair split construction")?;
    let n = code.n();
    let target = (n + 1) / 2;
    if code.word_count() > guard as u128 {
        return Err(Error::GuardExceeded {
            required: code.word_count(),
            guard,
        });
    }
    let scanner = code.scanner()?;
    let words = scanner.fold(
        Vec::new,
        |acc: &mut Vec<Gf4Word>, w| {
            if gc_content(w, n) == target
                && w.lex_cmp(reverse_complement(w, n), n) == std::cmp::Ordering::Less
            {
                acc.push(w);
            }
        },
        merge_words,
    );
    let book = DnaCodebook {
        n,
        words,
        claimed_d,
        gc_weight: target,
        block: block.elements().to_vec(),
        construction: Construction::RcPairSplit,
    };
    check_cardinality(&book, code)?;
    Ok(book)
}

fn check_cardinality(book: &DnaCodebook, code: &CyclicCode) -> Result<()> {
    let block = code.block().expect("checked in preconditions");
    let expected = lower_bound(book.n, block, book.claimed_d)?;
    if BigUint::from(book.len()) != expected {
        return Err(Error::Internal(format!(
            "codebook has {} words, closed form expects {expected}",
            book.len()
        )));
    }
    Ok(())
}

/// How a [`VerifyReport`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    /// Uniform random pair sampling; a pass is not a certificate.
    Sampled {
        samples: u64,
        seed: u64,
    },
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Exhaustive verification above this many pair checks switches to
    /// sampling.
    pub pair_limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            pair_limit: 10_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub claimed_d: usize,
    /// None for books with fewer than two words.
    pub min_pairwise_distance: Option<usize>,
    pub min_rc_cross_distance: usize,
    pub gc_uniform: bool,
    pub gc_weight: usize,
    pub mode: VerifyMode,
    pub pass: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "claimed_d": self.claimed_d,
            "min_distance": self.min_pairwise_distance,
            "min_rc_distance": self.min_rc_cross_distance,
            "gc_uniform": self.gc_uniform,
            "gc_weight": self.gc_weight,
            "mode": match self.mode {
                VerifyMode::Exhaustive => json!("exhaustive"),
                VerifyMode::Sampled { samples, seed } =>
                    json!({"sampled": samples, "seed": seed}),
            },
            "pass": self.pass,
        })
    }
}

/// Checks the three codebook conditions: pairwise distance, RC-cross
/// distance (u = v included), and GC-content uniformity.
pub fn verify_codebook(book: &DnaCodebook, opts: &VerifyOptions) -> VerifyReport {
    let n = book.n;
    let m = book.words.len();
    let words = &book.words;
    let rc: Vec<Gf4Word> = words.iter().map(|&w| reverse_complement(w, n)).collect();

    let gc_uniform = words.iter().all(|&w| gc_content(w, n) == book.gc_weight);

    let pair_checks =
        (m as u64).saturating_mul(m as u64 - 1) / 2 + (m as u64).saturating_mul(m as u64);
    let (min_pairwise, min_rc, mode) = if pair_checks <= opts.pair_limit {
        let min_pairwise = (0..m)
            .into_par_iter()
            .map(|i| {
                let mut best = u32::MAX;
                for j in i + 1..m {
                    best = best.min(words[i].distance(words[j]));
                }
                best
            })
            .min()
            .unwrap_or(u32::MAX);
        let min_rc = (0..m)
            .into_par_iter()
            .map(|i| {
                let mut best = u32::MAX;
                for r in rc.iter() {
                    best = best.min(words[i].distance(*r));
                }
                best
            })
            .min()
            .unwrap_or(u32::MAX);
        (min_pairwise, min_rc, VerifyMode::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let samples = opts.pair_limit;
        let mut min_pairwise = u32::MAX;
        let mut min_rc = u32::MAX;
        for _ in 0..samples / 2 {
            let i = rng.gen_range(0..m);
            let j = rng.gen_range(0..m);
            if i != j {
                min_pairwise = min_pairwise.min(words[i].distance(words[j]));
            }
            let k = rng.gen_range(0..m);
            let l = rng.gen_range(0..m);
            min_rc = min_rc.min(words[k].distance(rc[l]));
        }
        (
            min_pairwise,
            min_rc,
            VerifyMode::Sampled {
                samples,
                seed: opts.seed,
            },
        )
    };

    let min_pairwise_distance = (min_pairwise != u32::MAX).then_some(min_pairwise as usize);
    let pass = gc_uniform
        && min_rc as usize >= book.claimed_d
        && min_pairwise_distance.map_or(true, |d| d >= book.claimed_d);
    VerifyReport {
        claimed_d: book.claimed_d,
        min_pairwise_distance,
        min_rc_cross_distance: min_rc as usize,
        gc_uniform,
        gc_weight: book.gc_weight,
        mode,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{quadratic_residues, OrbitTable};
    use std::sync::Arc;

    const GUARD: u64 = 1 << 28;

    fn qr13_code() -> CyclicCode {
        let t = OrbitTable::new(13, 2, 2).unwrap();
        let b = Block::new(t, quadratic_residues(13)).unwrap();
        CyclicCode::from_block(&b).unwrap()
    }

    #[test]
    fn alphabet_respects_watson_crick() {
        // adding 1 swaps A <-> T and G <-> C
        let strand = DnaWord::from_letters("GACT").unwrap();
        let complement: String = strand
            .labels()
            .iter()
            .map(|&l| letter_of_label(l ^ 1))
            .collect();
        assert_eq!(complement, "CTGA");
    }

    #[test]
    fn reverse_complement_examples() {
        // (0, w, 1) -> (0, w+1, 1): GAC -> GTC
        let v = DnaWord::from_letters("GAC").unwrap();
        assert_eq!(v.reverse_complement().letters(), "GTC");
        // involution
        let w = DnaWord::from_letters("ACGTACG").unwrap();
        assert_eq!(w.reverse_complement().reverse_complement(), w);
    }

    #[test]
    fn no_fixed_points_for_odd_length() {
        for bits in 0u64..64 {
            let w = Gf4Word {
                a: bits & 0b111,
                b: bits >> 3,
            };
            assert_ne!(reverse_complement(w, 3), w);
        }
    }

    #[test]
    fn gc_content_examples() {
        let v = DnaWord::from_letters("AGCT").unwrap(); // (w, 0, 1, w+1)
        assert_eq!(v.gc_content(), 2);
        assert_eq!(DnaWord::from_letters("GGGGG").unwrap().gc_content(), 5);
        assert_eq!(v.gc_content(), v.reverse_complement().gc_content());
    }

    #[test]
    fn even_subcode_codebook_qr13() {
        let code = qr13_code();
        let book = build_even_subcode_codebook(&code, 5, GUARD).unwrap();
        assert_eq!(book.len(), 1716);
        assert_eq!(book.gc_weight(), 7);
        let report = verify_codebook(&book, &VerifyOptions::default());
        assert!(report.pass);
        assert_eq!(report.mode, VerifyMode::Exhaustive);
        assert!(report.min_pairwise_distance.unwrap() >= 5);
        assert!(report.min_rc_cross_distance >= 5);
    }

    #[test]
    fn rc_split_codebook_qr13() {
        let code = qr13_code();
        let book = build_rc_pair_split_codebook(&code, 5, GUARD).unwrap();
        assert_eq!(book.len(), 1716);
        // no RC pair inside the book
        let set: std::collections::HashSet<Gf4Word> = book.packed_words().iter().copied().collect();
        for &w in book.packed_words() {
            assert!(!set.contains(&reverse_complement(w, 13)));
        }
        let report = verify_codebook(&book, &VerifyOptions::default());
        assert!(report.pass);
    }

    #[test]
    fn construction_cardinalities_agree() {
        let code = qr13_code();
        let even = build_even_subcode_codebook(&code, 5, GUARD).unwrap();
        let split = build_rc_pair_split_codebook(&code, 5, GUARD).unwrap();
        assert_eq!(even.len(), split.len());
        assert_eq!(
            BigUint::from(even.len()),
            lower_bound(13, code.block().unwrap(), 5).unwrap()
        );
    }

    #[test]
    fn verify_flags_rc_violation() {
        let code = qr13_code();
        let mut book = build_even_subcode_codebook(&code, 5, GUARD).unwrap();
        // replace one word by the RC of another: distance 0 against the book
        book.words[0] = reverse_complement(book.words[1], 13);
        let report = verify_codebook(&book, &VerifyOptions::default());
        assert!(!report.pass);
        assert_eq!(report.min_rc_cross_distance, 0);
    }

    #[test]
    fn single_word_book_passes_when_rc_distance_holds() {
        let code = qr13_code();
        let full = build_even_subcode_codebook(&code, 5, GUARD).unwrap();
        let book = DnaCodebook {
            n: 13,
            words: vec![full.words[0]],
            claimed_d: 5,
            gc_weight: full.gc_weight,
            block: full.block.clone(),
            construction: Construction::EvenSubcode,
        };
        let report = verify_codebook(&book, &VerifyOptions::default());
        assert_eq!(report.min_pairwise_distance, None);
        assert!(report.min_rc_cross_distance >= 5);
        assert!(report.pass);
    }

    #[test]
    fn bounds_from_the_table() {
        let t17 = OrbitTable::new(17, 2, 2).unwrap();
        let small = Block::new(Arc::clone(&t17), [2usize, 8, 9, 15]).unwrap();
        assert_eq!(
            lower_bound(17, &small, 4).unwrap(),
            BigUint::from(6223360u64)
        );
        let big = Block::new(t17, [2usize, 6, 7, 8, 9, 10, 11, 15]).unwrap();
        assert_eq!(lower_bound(17, &big, 7).unwrap(), BigUint::from(24310u64));

        let t13 = OrbitTable::new(13, 2, 2).unwrap();
        let qr = Block::new(t13, quadratic_residues(13)).unwrap();
        assert_eq!(lower_bound(13, &qr, 5).unwrap(), BigUint::from(1716u64));

        let t29 = OrbitTable::new(29, 2, 2).unwrap();
        let qr29 = Block::new(t29, quadratic_residues(29)).unwrap();
        assert_eq!(
            lower_bound(29, &qr29, 11).unwrap(),
            BigUint::from(77558760u64)
        );
        assert_eq!(headline_bound(29), BigUint::from(77558760u64));
    }

    #[test]
    fn complete_block_codebook_n17() {
        let t = OrbitTable::new(17, 2, 2).unwrap();
        let b = Block::new(t, [2usize, 6, 7, 8, 9, 10, 11, 15]).unwrap();
        let code = CyclicCode::from_block(&b).unwrap();
        let book = build_even_subcode_codebook(&code, 7, GUARD).unwrap();
        assert_eq!(book.len(), 24310);
        assert_eq!(book.gc_weight(), 9);
        // 24310^2 pair checks exceed the exhaustive limit: sampled mode
        let report = verify_codebook(&book, &VerifyOptions::default());
        assert!(matches!(report.mode, VerifyMode::Sampled { seed: 0, .. }));
        assert!(report.pass);
    }

    #[test]
    fn large_codebook_n17_small_block() {
        let t = OrbitTable::new(17, 2, 2).unwrap();
        let b = Block::new(t, [2usize, 8, 9, 15]).unwrap();
        let code = CyclicCode::from_block(&b).unwrap();
        let book = build_even_subcode_codebook(&code, 4, GUARD).unwrap();
        assert_eq!(book.len(), 6223360);
        let report = verify_codebook(&book, &VerifyOptions::default());
        assert!(matches!(report.mode, VerifyMode::Sampled { .. }));
        assert!(report.pass);
    }

    #[test]
    fn preconditions_enforced() {
        // {1, 3, 4, 5, 9} = QR(11) is reversible? -1 = 10 is not a QR mod 11
        let t = OrbitTable::new(11, 2, 2).unwrap();
        let b = Block::new(t, quadratic_residues(11)).unwrap();
        assert!(!b.is_reversible());
        let code = CyclicCode::from_block(&b).unwrap();
        assert!(matches!(
            build_even_subcode_codebook(&code, 5, GUARD),
            Err(Error::NotReversible)
        ));
        assert!(matches!(lower_bound(11, &b, 5), Err(Error::NotReversible)));
    }

    #[test]
    fn fasta_roundtrip() {
        let code = qr13_code();
        let book = build_even_subcode_codebook(&code, 5, GUARD).unwrap();
        let mut out = Vec::new();
        book.write_fasta(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), ">word_0 gc=7");
        let first = DnaWord::from_letters(lines.next().unwrap()).unwrap();
        assert_eq!(first.word(), book.packed_words()[0]);
        assert_eq!(text.lines().count(), 2 * 1716);
    }
}
