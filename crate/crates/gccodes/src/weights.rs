//! Weight enumerators: exact closed forms and exhaustive oracles.
//!
//! Counts are arbitrary-precision integers throughout; nothing here touches
//! floating point. The GF(q)-weight of a word is its number of coordinates
//! lying in GF(q), decided by the Frobenius fixpoint test. Exhaustive
//! enumerations dispatch to the packed GF(4) scanner whenever q = 2, r = 2
//! and n fits in a machine word; the dense generic walk covers everything
//! else within the guard.

use std::collections::{HashMap, HashSet};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::field::{prime_power, FieldElement};
use crate::gf4::{f2_row_reduce, f2_span_weight_hist, CodeScanner};
use crate::poly::Polynomial;

/// What a [`WeightEnumerator`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Hamming weights of a set of words.
    Hamming,
    /// GF(q)-weights (GC-content) of the words of a code.
    FqWeight,
    /// Hamming weights of the set psi(C), each element counted once.
    PsiImage,
}

/// Exact counts b_0..b_n of words by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    kind: WeightKind,
    n: usize,
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(kind: WeightKind, n: usize, counts: Vec<BigUint>) -> WeightEnumerator {
        assert_eq!(counts.len(), n + 1);
        WeightEnumerator { kind, n, counts }
    }

    pub fn from_hist(kind: WeightKind, n: usize, hist: Vec<u64>) -> WeightEnumerator {
        Self::new(kind, n, hist.into_iter().map(BigUint::from).collect())
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Total number of enumerated words.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Counts reversed: w -> n - w (the reciprocal polynomial).
    pub fn reversed(&self) -> WeightEnumerator {
        let mut counts = self.counts.clone();
        counts.reverse();
        WeightEnumerator {
            kind: self.kind,
            n: self.n,
            counts,
        }
    }

    /// Smallest w >= 1 with a nonzero count.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&w| !self.counts[w].is_zero())
    }
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn words_required(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

fn check_guard(base: u128, exp: usize, guard: u64) -> Result<()> {
    let required = words_required(base, exp);
    if required > guard as u128 {
        Err(Error::GuardExceeded { required, guard })
    } else {
        Ok(())
    }
}

fn merge_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Multiply by q^exp, dividing exactly when exp < 0.
fn apply_q_power(v: BigUint, q: u64, exp: i64) -> Result<BigUint> {
    if exp >= 0 {
        Ok(v * BigUint::from(q).pow(exp as u32))
    } else {
        let d = BigUint::from(q).pow((-exp) as u32);
        if (&v % &d).is_zero() {
            Ok(v / d)
        } else {
            Err(Error::NonIntegralCount)
        }
    }
}

/// Visits every codeword m(x) g(x), messages over `msgs`^k in lexicographic
/// order, as length-n coordinate vectors. Dense generic path.
fn enumerate_cyclic_words(
    g: &Polynomial,
    n: usize,
    msgs: &[FieldElement],
    mut visit: impl FnMut(&[FieldElement]),
) -> Result<()> {
    let deg = g.degree().ok_or(Error::ZeroPolyDivision)?;
    let k = n - deg;
    let field = g.field();
    let gcoeffs: Vec<FieldElement> = (0..=deg).map(|i| g.coeff(i)).collect();
    let mut word: Vec<FieldElement> = vec![field.zero(); n];
    visit(&word);
    if k == 0 {
        return Ok(());
    }
    // deltas between consecutive message symbols, wrap included
    let m = msgs.len();
    let mut deltas = Vec::with_capacity(m);
    for d in 0..m {
        let next = (d + 1) % m;
        deltas.push(msgs[next].checked_sub(&msgs[d])?);
    }
    let mut digits = vec![0usize; k];
    'outer: loop {
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            let d = digits[i];
            let delta = &deltas[d];
            if !delta.is_zero() {
                for (j, gc) in gcoeffs.iter().enumerate() {
                    if !gc.is_zero() {
                        word[i + j] = word[i + j].checked_add(&delta.checked_mul(gc)?)?;
                    }
                }
            }
            if d + 1 == m {
                digits[i] = 0;
                i += 1;
            } else {
                digits[i] = d + 1;
                break;
            }
        }
        visit(&word);
    }
    Ok(())
}

/// Memoized Frobenius fixpoint test c^q = c.
struct FqMembership {
    q: u128,
    memo: HashMap<u128, bool>,
}

impl FqMembership {
    fn new(q: u64) -> FqMembership {
        FqMembership {
            q: q as u128,
            memo: HashMap::new(),
        }
    }

    fn contains(&mut self, c: &FieldElement) -> bool {
        let key = c.index();
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = c.pow(self.q) == *c;
        self.memo.insert(key, v);
        v
    }
}

/// Hamming weight histogram of the cyclic code over the subfield GF(Q)
/// generated by g0 (coefficients in GF(Q)) inside the splitting field.
fn subfield_cyclic_hamming_hist(
    code: &CyclicCode,
    g0: &Polynomial,
    subfield_order: u64,
    guard: u64,
) -> Result<Vec<u64>> {
    let n = code.n();
    let deg = g0.degree().ok_or(Error::ZeroPolyDivision)?;
    let k = n - deg;
    check_guard(subfield_order as u128, k, guard)?;
    if subfield_order == 2 && n <= 63 {
        // binary: packed span walk over the shifted generator rows
        let mut base = 0u64;
        for (i, c) in g0.coeffs().iter().enumerate() {
            if c.is_one() {
                base |= 1 << i;
            } else if !c.is_zero() {
                return Err(Error::CoefficientsNotInBaseField { q: 2 });
            }
        }
        let rows: Vec<u64> = (0..k).map(|i| base << i).collect();
        return Ok(f2_span_weight_hist(&rows, n));
    }
    let sf = code.splitting_field();
    let p = sf.field.characteristic();
    let d = match prime_power(subfield_order) {
        Some((base, e)) if base == p => e as usize,
        _ => {
            return Err(Error::NotCharPower {
                q: subfield_order,
                p,
            })
        }
    };
    if sf.field.degree() % d != 0 {
        return Err(Error::Unsupported(format!(
            "GF({subfield_order}) is not a subfield of the splitting field"
        )));
    }
    let msgs = sf.subfield_elements(subfield_order)?;
    let mut hist = vec![0u64; n + 1];
    enumerate_cyclic_words(g0, n, &msgs, |word| {
        let w = word.iter().filter(|c| !c.is_zero()).count();
        hist[w] += 1;
    })?;
    Ok(hist)
}

impl CyclicCode {
    /// Message-space size (q^r)^dim, saturating.
    pub fn word_count(&self) -> u128 {
        words_required(self.splitting_field().qr(), self.dimension())
    }

    /// Packed scanner over the GF(4) form of the code (q = 2, r = 2, n <= 63).
    pub fn scanner(&self) -> Result<CodeScanner> {
        if self.splitting_field().qr() != 4 || self.n() > 63 {
            return Err(Error::Unsupported(
                "packed scans require q = 2, r = 2, n <= 63".into(),
            ));
        }
        Ok(CodeScanner::new(&self.gf4_generator_labels()?, self.n()))
    }

    fn check_enumeration_guard(&self, guard: u64) -> Result<()> {
        check_guard(self.splitting_field().qr(), self.dimension(), guard)
    }

    /// Closed-form GF(q)-weight distribution of a Galois coprime code:
    /// b_w = q^(n - r deg g) C(n, w) (q^(r-1) - 1)^(n-w).
    pub fn fq_weights_closed(&self) -> Result<WeightEnumerator> {
        if !self.is_galois_coprime()? {
            return Err(Error::NotGaloisCoprime);
        }
        let n = self.n();
        let deg = self.generator().degree().unwrap();
        let scale = BigUint::from(self.q()).pow((n - self.r() * deg) as u32);
        let qm1 = BigUint::from(self.q()).pow((self.r() - 1) as u32) - 1u32;
        let counts = (0..=n)
            .map(|w| &scale * binomial(n, w) * qm1.pow((n - w) as u32))
            .collect();
        Ok(WeightEnumerator::new(WeightKind::FqWeight, n, counts))
    }

    /// GF(q)-weight distribution by exhaustive enumeration.
    pub fn fq_weights_brute(&self, guard: u64) -> Result<WeightEnumerator> {
        self.check_enumeration_guard(guard)?;
        let n = self.n();
        if let Ok(scanner) = self.scanner() {
            let hist = scanner.fold(
                || vec![0u64; n + 1],
                |h, w| h[w.f2_weight(n) as usize] += 1,
                merge_hist,
            );
            return Ok(WeightEnumerator::from_hist(WeightKind::FqWeight, n, hist));
        }
        let sf = self.splitting_field();
        let qr = sf.qr();
        let msgs = sf.subfield_elements(qr as u64)?;
        let mut membership = FqMembership::new(self.q());
        let mut hist = vec![0u64; n + 1];
        enumerate_cyclic_words(self.generator(), n, &msgs, |word| {
            let w = word.iter().filter(|c| membership.contains(c)).count();
            hist[w] += 1;
        })?;
        Ok(WeightEnumerator::from_hist(WeightKind::FqWeight, n, hist))
    }

    /// Hamming weight distribution of the set psi(C) = { psi(c) : c in C },
    /// each image counted once.
    pub fn psi_image_weights(&self, guard: u64) -> Result<WeightEnumerator> {
        let n = self.n();
        if let Ok(scanner) = self.scanner() {
            // psi of a packed word is its w plane; the image of the GF(2)
            // basis {x^i g, w x^i g} spans psi(C) over GF(2)
            let mut rows = Vec::with_capacity(2 * self.dimension());
            for w in scanner.basis() {
                rows.push(w.b);
                rows.push(w.a ^ w.b);
            }
            let basis = f2_row_reduce(&rows);
            check_guard(2, basis.len(), guard)?;
            let hist = f2_span_weight_hist(&basis, n);
            return Ok(WeightEnumerator::from_hist(WeightKind::PsiImage, n, hist));
        }
        self.check_enumeration_guard(guard)?;
        let sf = self.splitting_field();
        let msgs = sf.subfield_elements(sf.qr() as u64)?;
        let q = self.q() as u128;
        let mut images: HashSet<Vec<u128>> = HashSet::new();
        enumerate_cyclic_words(self.generator(), n, &msgs, |word| {
            let image: Vec<u128> = word
                .iter()
                .map(|c| {
                    let psi = c.pow(q).checked_sub(c).expect("same field");
                    psi.index()
                })
                .collect();
            images.insert(image);
        })?;
        let mut hist = vec![0u64; n + 1];
        for image in &images {
            let w = image.iter().filter(|&&i| i != 0).count();
            hist[w] += 1;
        }
        Ok(WeightEnumerator::from_hist(WeightKind::PsiImage, n, hist))
    }

    /// GF(q)-weight distribution through the rank-2 gcd-code structure:
    /// q^(n - deg [g, g^sigma]) times the reversed Hamming enumerator of the
    /// GF(q) cyclic code generated by gcd(g, g^sigma).
    pub fn fq_weights_r2(&self, guard: u64) -> Result<WeightEnumerator> {
        if self.r() != 2 {
            return Err(Error::RequiresRankTwo);
        }
        let n = self.n();
        let g = self.generator();
        let g0 = g.gcd(&g.sigma(self.q())?)?;
        let e = prime_power(self.q()).unwrap().1 as usize;
        for c in g0.coeffs() {
            if !c.in_subfield(e)? {
                return Err(Error::Internal(
                    "gcd(g, g^sigma) escaped the base field".into(),
                ));
            }
        }
        let deg_lcm = 2 * g.degree().unwrap() - g0.degree().unwrap();
        let hist = subfield_cyclic_hamming_hist(self, &g0, self.q(), guard)?;
        let scale = BigUint::from(self.q()).pow((n - deg_lcm) as u32);
        let counts = (0..=n).map(|w| &scale * hist[n - w]).collect();
        Ok(WeightEnumerator::new(WeightKind::FqWeight, n, counts))
    }

    /// GF(q)-weight distribution of the subcode with generator g0 g, for
    /// g0 in `GF(q)[x]` with g0 g | x^n - 1 and g Galois coprime:
    /// q^(n - r deg g - deg g0) times the reversed Hamming enumerator of the
    /// GF(q^(r-1)) cyclic code generated by g0.
    pub fn fq_weights_subcode(&self, g0: &Polynomial, guard: u64) -> Result<WeightEnumerator> {
        if !self.is_galois_coprime()? {
            return Err(Error::NotGaloisCoprime);
        }
        let n = self.n();
        let q = self.q();
        let e = prime_power(q).unwrap().1 as usize;
        for c in g0.coeffs() {
            if !c.in_subfield(e)? {
                return Err(Error::CoefficientsNotInBaseField { q });
            }
        }
        let product = g0.mul(self.generator());
        let xn1 = Polynomial::xn_minus_1(self.field(), n);
        if !product.divides(&xn1)? {
            return Err(Error::NotDivisorOfXnMinus1 { n });
        }
        let deg0 = g0.degree().ok_or(Error::ZeroPolyDivision)?;
        let big_q = (q as u128).pow((self.r() - 1) as u32);
        let qm1 = BigUint::from(big_q) - 1u32;
        let one = self.field().one();
        let a: Vec<BigUint> = if deg0 == 0 {
            // full space over GF(q^(r-1))
            (0..=n)
                .map(|w| binomial(n, w) * qm1.pow(w as u32))
                .collect()
        } else if deg0 == 1 && g0.eval(&one)?.is_zero() {
            // zero-parity code over GF(q^(r-1)); the bracket is always
            // divisible by q^(r-1)
            (0..=n)
                .map(|w| {
                    let mut t = binomial(n, w) * qm1.pow(w as u32);
                    let delta = binomial(n, w) * &qm1;
                    if w % 2 == 0 {
                        t += delta;
                    } else {
                        t -= delta;
                    }
                    apply_q_power(t, q, -((self.r() - 1) as i64))
                })
                .collect::<Result<Vec<BigUint>>>()?
        } else {
            let big_q64 =
                u64::try_from(big_q).map_err(|_| Error::Unsupported("q^(r-1) too large".into()))?;
            subfield_cyclic_hamming_hist(self, g0, big_q64, guard)?
                .into_iter()
                .map(BigUint::from)
                .collect()
        };
        let scale =
            BigUint::from(q).pow((n - self.r() * self.generator().degree().unwrap() - deg0) as u32);
        let counts = (0..=n).map(|w| &scale * &a[n - w]).collect();
        Ok(WeightEnumerator::new(WeightKind::FqWeight, n, counts))
    }

    /// Closed-form GF(q)-weight distribution of the even-weight subcode C+.
    pub fn fq_weights_even_subcode(&self) -> Result<WeightEnumerator> {
        if !self.is_galois_coprime()? {
            return Err(Error::NotGaloisCoprime);
        }
        if self.roots().contains(&0) {
            return Err(Error::EvenSubcodeDegenerate);
        }
        let n = self.n();
        let deg = self.generator().degree().unwrap();
        let exp = n as i64 - (self.r() * (deg + 1)) as i64;
        let counts = even_type_counts(n, self.q(), self.r(), exp)?;
        Ok(WeightEnumerator::new(WeightKind::FqWeight, n, counts))
    }

    /// Closed-form GF(q)-weight distribution of the extended code (parity
    /// coordinate appended; length n + 1).
    pub fn fq_weights_extended(&self) -> Result<WeightEnumerator> {
        if !self.is_galois_coprime()? {
            return Err(Error::NotGaloisCoprime);
        }
        let n = self.n();
        let deg = self.generator().degree().unwrap();
        let exp = (n + 1) as i64 - (self.r() * (deg + 1)) as i64;
        let counts = even_type_counts(n + 1, self.q(), self.r(), exp)?;
        Ok(WeightEnumerator::new(WeightKind::FqWeight, n + 1, counts))
    }

    /// GF(q)-weight distribution of the extended code by exhaustive
    /// enumeration of C with the parity coordinate appended.
    pub fn fq_weights_extended_brute(&self, guard: u64) -> Result<WeightEnumerator> {
        self.check_enumeration_guard(guard)?;
        let n = self.n();
        if let Ok(scanner) = self.scanner() {
            let hist = scanner.fold(
                || vec![0u64; n + 2],
                |h, w| {
                    let parity_in_f2 = w.coordinate_sum() & 2 == 0;
                    h[w.f2_weight(n) as usize + parity_in_f2 as usize] += 1;
                },
                merge_hist,
            );
            return Ok(WeightEnumerator::from_hist(
                WeightKind::FqWeight,
                n + 1,
                hist,
            ));
        }
        let sf = self.splitting_field();
        let msgs = sf.subfield_elements(sf.qr() as u64)?;
        let mut membership = FqMembership::new(self.q());
        let mut hist = vec![0u64; n + 2];
        let zero = sf.field.zero();
        enumerate_cyclic_words(self.generator(), n, &msgs, |word| {
            let mut w = 0usize;
            let mut sum = zero.clone();
            for c in word {
                if membership.contains(c) {
                    w += 1;
                }
                sum = sum.checked_add(c).expect("same field");
            }
            if membership.contains(&sum) {
                w += 1;
            }
            hist[w] += 1;
        })?;
        Ok(WeightEnumerator::from_hist(
            WeightKind::FqWeight,
            n + 1,
            hist,
        ))
    }

    /// Minimum Hamming weight over the nonzero codewords.
    pub fn min_distance(&self, guard: u64) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::Unsupported(
                "minimum distance of the zero code".into(),
            ));
        }
        self.check_enumeration_guard(guard)?;
        if let Ok(scanner) = self.scanner() {
            let min = scanner.fold(
                || u32::MAX,
                |m, w| {
                    let wt = w.hamming_weight();
                    if wt != 0 && wt < *m {
                        *m = wt;
                    }
                },
                u32::min,
            );
            return Ok(min as usize);
        }
        let sf = self.splitting_field();
        let msgs = sf.subfield_elements(sf.qr() as u64)?;
        let mut min = usize::MAX;
        enumerate_cyclic_words(self.generator(), self.n(), &msgs, |word| {
            let wt = word.iter().filter(|c| !c.is_zero()).count();
            if wt != 0 && wt < min {
                min = wt;
            }
        })?;
        Ok(min)
    }

    /// Minimum Hamming weight among codewords of odd type (coordinate sum
    /// nonzero). Requires a complete Galois coprime generator.
    pub fn min_weight_odd_type(&self, guard: u64) -> Result<usize> {
        if !self.is_galois_coprime()? {
            return Err(Error::NotGaloisCoprime);
        }
        // completeness: the product of the Galois conjugates of g must be
        // 1 + x + ... + x^(n-1)
        let mut prod = self.generator().clone();
        let mut conj = self.generator().clone();
        for _ in 1..self.r() {
            conj = conj.sigma(self.q())?;
            prod = prod.mul(&conj);
        }
        let ones = Polynomial::from_coeffs(self.field(), vec![self.field().one(); self.n()])?;
        if prod.monic()? != ones {
            return Err(Error::NotComplete);
        }
        self.check_enumeration_guard(guard)?;
        if let Ok(scanner) = self.scanner() {
            let min = scanner.fold(
                || u32::MAX,
                |m, w| {
                    if w.coordinate_sum() != 0 {
                        let wt = w.hamming_weight();
                        if wt < *m {
                            *m = wt;
                        }
                    }
                },
                u32::min,
            );
            return Ok(min as usize);
        }
        let sf = self.splitting_field();
        let msgs = sf.subfield_elements(sf.qr() as u64)?;
        let zero = sf.field.zero();
        let mut min = usize::MAX;
        enumerate_cyclic_words(self.generator(), self.n(), &msgs, |word| {
            let sum = word.iter().fold(zero.clone(), |acc, c| {
                acc.checked_add(c).expect("same field")
            });
            if !sum.is_zero() {
                let wt = word.iter().filter(|c| !c.is_zero()).count();
                if wt < min {
                    min = wt;
                }
            }
        })?;
        Ok(min)
    }
}

fn even_type_counts(m: usize, q: u64, r: usize, exp: i64) -> Result<Vec<BigUint>> {
    let qm1 = BigUint::from(q).pow((r - 1) as u32) - 1u32;
    (0..=m)
        .map(|w| {
            let c = binomial(m, w);
            let mut t = &c * qm1.pow((m - w) as u32);
            let delta = &c * &qm1;
            if (m - w) % 2 == 0 {
                t += delta;
            } else {
                t -= delta;
            }
            apply_q_power(t, q, exp)
        })
        .collect()
}

/// Weight enumerator of { x in T^n : xH = 0 } by the subset-rank sum
/// sum_U |T|^(|U| - rk H_U) X^|U| (Y - X)^(n - |U|), expanded to counts.
///
/// H is given by rows over one field; n = number of rows, capped at 20.
pub fn rank_weight_enumerator(rows: &[Vec<FieldElement>], t_size: u64) -> Result<WeightEnumerator> {
    let n = rows.len();
    if n > 20 {
        return Err(Error::RankMatrixTooLarge(n));
    }
    let cols = rows.first().map_or(0, Vec::len);
    for r in rows {
        if r.len() != cols {
            return Err(Error::Internal("ragged matrix".into()));
        }
    }
    let t = BigUint::from(t_size);
    // a[u] = sum over |U| = u of |T|^(u - rk H_U)
    let mut a = vec![BigUint::zero(); n + 1];
    for mask in 0u32..1 << n {
        let subset: Vec<&Vec<FieldElement>> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &rows[i])
            .collect();
        let u = subset.len();
        let rk = rank(&subset, cols)?;
        a[u] += t.pow((u - rk) as u32);
    }
    let counts = (0..=n)
        .map(|w| {
            let mut acc = BigInt::zero();
            for (u, au) in a.iter().enumerate().take(w + 1) {
                let term = BigInt::from_biguint(Sign::Plus, au * binomial(n - u, w - u));
                if (w - u) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc.to_biguint()
                .ok_or(Error::Internal("negative count in rank-sum formula".into()))
        })
        .collect::<Result<Vec<BigUint>>>()?;
    Ok(WeightEnumerator::new(WeightKind::Hamming, n, counts))
}

fn rank(rows: &[&Vec<FieldElement>], cols: usize) -> Result<usize> {
    let mut mat: Vec<Vec<FieldElement>> = rows.iter().map(|r| (*r).clone()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..mat.len()).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].inverse()?;
        for i in rank + 1..mat.len() {
            if mat[i][col].is_zero() {
                continue;
            }
            let factor = mat[i][col].checked_mul(&inv)?;
            for j in col..cols {
                let t = factor.checked_mul(&mat[rank][j])?;
                mat[i][j] = mat[i][j].checked_sub(&t)?;
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    Ok(rank)
}
