//! Bit-plane packed words over GF(4) and a fast cyclic-code scanner.
//!
//! GF(4) = {0, 1, w, w2} with w2 = w + 1. An element is a + b*w with
//! a, b in GF(2); a length-n word stores all the a-components in one u64
//! plane and all the b-components in another, so vector addition is two
//! XORs and the weight statistics reduce to popcounts:
//!
//! * Hamming weight      = popcount(a | b)
//! * GF(2)-weight        = n - popcount(b)   (a coordinate lies in GF(2)
//!   exactly when its w-component vanishes)
//!
//! Labels 0..=3 encode 0, 1, w, w2 and order elements by their coefficient
//! sequence read as a base-2 integer, matching the canonical field ordering.
//!
//! [`CodeScanner`] enumerates every codeword of a cyclic code over GF(4) by
//! walking message polynomials in lexicographic coefficient order with an
//! incremental base-4 odometer: one digit step costs two XORs. The message
//! space splits into chunks by the top digits, so scans parallelize with
//! deterministic totals for any associative merge.

use std::cmp::Ordering;

use rayon::prelude::*;

pub const LABEL_ZERO: u8 = 0;
pub const LABEL_ONE: u8 = 1;
pub const LABEL_OMEGA: u8 = 2;
pub const LABEL_OMEGA2: u8 = 3;

/// GF(4) addition on labels.
#[inline]
pub fn label_add(x: u8, y: u8) -> u8 {
    x ^ y
}

/// GF(4) multiplication on labels.
#[inline]
pub fn label_mul(x: u8, y: u8) -> u8 {
    const TABLE: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
    TABLE[x as usize][y as usize]
}

/// Packed word over GF(4), up to 64 coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gf4Word {
    /// GF(2) components.
    pub a: u64,
    /// w components.
    pub b: u64,
}

impl Gf4Word {
    pub const ZERO: Gf4Word = Gf4Word { a: 0, b: 0 };

    pub fn from_labels(labels: &[u8]) -> Gf4Word {
        debug_assert!(labels.len() <= 64);
        let mut w = Gf4Word::ZERO;
        for (j, &l) in labels.iter().enumerate() {
            w.a |= ((l & 1) as u64) << j;
            w.b |= ((l >> 1) as u64) << j;
        }
        w
    }

    #[inline]
    pub fn label(self, j: usize) -> u8 {
        (((self.a >> j) & 1) | (((self.b >> j) & 1) << 1)) as u8
    }

    pub fn labels(self, n: usize) -> Vec<u8> {
        (0..n).map(|j| self.label(j)).collect()
    }

    #[inline]
    pub fn xor(self, o: Gf4Word) -> Gf4Word {
        Gf4Word {
            a: self.a ^ o.a,
            b: self.b ^ o.b,
        }
    }

    /// Coordinatewise multiplication by w.
    #[inline]
    pub fn mul_omega(self) -> Gf4Word {
        Gf4Word {
            a: self.b,
            b: self.a ^ self.b,
        }
    }

    /// Coordinatewise multiplication by w2.
    #[inline]
    pub fn mul_omega2(self) -> Gf4Word {
        Gf4Word {
            a: self.a ^ self.b,
            b: self.a,
        }
    }

    pub fn scale(self, label: u8) -> Gf4Word {
        match label {
            0 => Gf4Word::ZERO,
            1 => self,
            2 => self.mul_omega(),
            3 => self.mul_omega2(),
            _ => unreachable!("label out of range"),
        }
    }

    #[inline]
    pub fn hamming_weight(self) -> u32 {
        (self.a | self.b).count_ones()
    }

    /// Number of coordinates lying in GF(2) (the first n coordinates).
    #[inline]
    pub fn f2_weight(self, n: usize) -> u32 {
        n as u32 - self.b.count_ones()
    }

    /// Sum of all coordinates, as a label. The psi image of the word is the
    /// b plane, so the word is "odd type" iff this is nonzero.
    #[inline]
    pub fn coordinate_sum(self) -> u8 {
        ((self.a.count_ones() & 1) | ((self.b.count_ones() & 1) << 1)) as u8
    }

    /// Coordinates reversed: `out[j] = in[n-1-j]`.
    pub fn reversed(self, n: usize) -> Gf4Word {
        Gf4Word {
            a: self.a.reverse_bits() >> (64 - n),
            b: self.b.reverse_bits() >> (64 - n),
        }
    }

    /// 1 added to every coordinate.
    pub fn complemented(self, n: usize) -> Gf4Word {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Gf4Word {
            a: self.a ^ mask,
            b: self.b,
        }
    }

    /// Lexicographic comparison of label sequences, coordinate 0 first.
    pub fn lex_cmp(self, other: Gf4Word, n: usize) -> Ordering {
        for j in 0..n {
            match self.label(j).cmp(&other.label(j)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Hamming distance between two words.
    #[inline]
    pub fn distance(self, other: Gf4Word) -> u32 {
        self.xor(other).hamming_weight()
    }
}

/// Enumerates all 4^k codewords m(x) * g(x) of a cyclic code over GF(4).
///
/// The generator is given as labels (coefficient of x^i at index i, trailing
/// coefficient nonzero); k = n - deg g. Messages run in lexicographic
/// coefficient order.
pub struct CodeScanner {
    n: usize,
    k: usize,
    /// x^i * g, packed.
    d1: Vec<Gf4Word>,
    /// w2 * x^i * g, packed.
    dw2: Vec<Gf4Word>,
}

impl CodeScanner {
    pub fn new(generator_labels: &[u8], n: usize) -> CodeScanner {
        assert!(n <= 63, "packed scanner supports n <= 63");
        assert!(!generator_labels.is_empty() && *generator_labels.last().unwrap() != 0);
        let deg = generator_labels.len() - 1;
        assert!(deg <= n);
        let k = n - deg;
        let g = Gf4Word::from_labels(generator_labels);
        let d1: Vec<Gf4Word> = (0..k)
            .map(|i| Gf4Word {
                a: g.a << i,
                b: g.b << i,
            })
            .collect();
        let dw2 = d1.iter().map(|w| w.mul_omega2()).collect();
        CodeScanner { n, k, d1, dw2 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn message_count(&self) -> u128 {
        1u128 << (2 * self.k)
    }

    /// The packed generator basis x^i g, i < dim.
    pub fn basis(&self) -> &[Gf4Word] {
        &self.d1
    }

    /// Codeword of one message, by direct evaluation.
    pub fn encode(&self, message_labels: &[u8]) -> Gf4Word {
        debug_assert_eq!(message_labels.len(), self.k);
        let mut w = Gf4Word::ZERO;
        for (i, &m) in message_labels.iter().enumerate() {
            w = w.xor(self.d1[i].scale(m));
        }
        w
    }

    fn scan_range<A>(
        &self,
        lo_digits: usize,
        base: Gf4Word,
        acc: &mut A,
        step: &impl Fn(&mut A, Gf4Word),
    ) {
        let mut word = base;
        step(acc, word);
        if lo_digits == 0 {
            return;
        }
        let total = 1u64 << (2 * lo_digits);
        let mut digits = vec![0u8; lo_digits];
        for _ in 1..total {
            let mut i = 0;
            loop {
                let d = digits[i];
                let delta = if d & 1 == 0 { self.d1[i] } else { self.dw2[i] };
                word = word.xor(delta);
                if d == 3 {
                    digits[i] = 0;
                    i += 1;
                } else {
                    digits[i] = d + 1;
                    break;
                }
            }
            step(acc, word);
        }
    }

    /// Folds `step` over every codeword exactly once (the zero word
    /// included). Work is split over message-space chunks and merged in
    /// chunk order, so the result is deterministic for any merge.
    pub fn fold<A, I, S, M>(&self, init: I, step: S, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync,
        S: Fn(&mut A, Gf4Word) + Sync,
        M: Fn(A, A) -> A,
    {
        // fix enough top digits to feed the pool, but keep chunks coarse
        let threads = rayon::current_num_threads();
        let mut hi = 0usize;
        while self.k - hi > 10 && (1usize << (2 * hi)) < 4 * threads {
            hi += 1;
        }
        let lo = self.k - hi;
        let chunks = 1usize << (2 * hi);
        let accs: Vec<A> = (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut base = Gf4Word::ZERO;
                for j in 0..hi {
                    let digit = ((chunk >> (2 * j)) & 3) as u8;
                    base = base.xor(self.d1[lo + j].scale(digit));
                }
                let mut acc = init();
                self.scan_range(lo, base, &mut acc, &step);
                acc
            })
            .collect();
        accs.into_iter().reduce(merge).expect("at least one chunk")
    }

    /// Serial fold in strict lexicographic message order.
    pub fn fold_serial<A>(&self, mut acc: A, step: impl Fn(&mut A, Gf4Word)) -> A {
        self.scan_range(self.k, Gf4Word::ZERO, &mut acc, &step);
        acc
    }
}

/// Row reduction of GF(2) row vectors packed in u64; returns an independent
/// basis in echelon form.
pub fn f2_row_reduce(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &row in rows {
        let mut v = row;
        for &b in &basis {
            let pivot = 1u64 << (63 - b.leading_zeros());
            if v & pivot != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
        }
    }
    basis
}

/// Hamming weight histogram of the GF(2)-span of independent rows
/// (2^rank vectors, each visited once via a Gray walk).
pub fn f2_span_weight_hist(basis: &[u64], n: usize) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    let rank = basis.len();
    assert!(rank < 63, "span too large to enumerate");
    let mut v = 0u64;
    hist[0] += 1;
    for i in 1u64..1u64 << rank {
        let flip = i.trailing_zeros() as usize;
        v ^= basis[flip];
        hist[v.count_ones() as usize] += 1;
    }
    hist
}
