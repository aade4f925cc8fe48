//! Cyclic codes over GF(q^r) built from root exponent sets inside the
//! splitting field of x^n - 1.
//!
//! Every code lives in one field F = GF(p^(e*r*t)), t = ord(q^r mod n),
//! containing both GF(q^r) and a primitive n-th root of unity zeta. The
//! generator is g(x) = prod (x - zeta^k) over the chosen exponents;
//! "coefficient lies in GF(q^r)" is always the Frobenius fixpoint test.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::cyclotomic::{ord_mod, Block};
use crate::error::{Error, Result};
use crate::field::{gcd_u64, prime_power, primitive_nth_root, FieldElement, FieldSpec};
use crate::gf4::{LABEL_OMEGA, LABEL_OMEGA2, LABEL_ONE, LABEL_ZERO};
use crate::poly::Polynomial;

/// Splitting field of x^n - 1 over GF(q^r), with the canonical primitive
/// n-th root of unity.
#[derive(Clone)]
pub struct SplittingField {
    pub n: usize,
    pub q: u64,
    pub r: usize,
    pub field: Arc<FieldSpec>,
    pub zeta: FieldElement,
    /// Canonical generator of the GF(4) subfield, present when q^r = 4.
    pub omega: Option<FieldElement>,
}

impl SplittingField {
    pub fn build(n: usize, q: u64, r: usize) -> Result<SplittingField> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if gcd_u64(n as u64, q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        if r < 2 {
            return Err(Error::ExtensionTooSmall);
        }
        let qr = (q as u128).pow(r as u32);
        let t = ord_mod((qr % n as u128) as u64, n);
        let m = e as usize * r * t;
        let field = FieldSpec::build(p, m)?;
        let zeta = primitive_nth_root(&field, n as u64)?;
        let omega = if qr == 4 {
            Some(primitive_nth_root(&field, 3)?)
        } else {
            None
        };
        Ok(SplittingField {
            n,
            q,
            r,
            field,
            zeta,
            omega,
        })
    }

    /// Subfield order q^r.
    pub fn qr(&self) -> u128 {
        (self.q as u128).pow(self.r as u32)
    }

    /// All elements of the subfield of the given order, sorted canonically.
    pub fn subfield_elements(&self, order: u64) -> Result<Vec<FieldElement>> {
        let group = order - 1;
        let delta = primitive_nth_root(&self.field, group.max(1))?;
        let mut out = vec![self.field.zero(), self.field.one()];
        let mut acc = delta.clone();
        while !acc.is_one() {
            out.push(acc.clone());
            acc = acc.checked_mul(&delta)?;
        }
        out.sort_by_key(FieldElement::index);
        out.dedup();
        if out.len() != order as usize {
            return Err(Error::Internal(format!(
                "subfield of order {order} not realized"
            )));
        }
        Ok(out)
    }

    /// GF(4) label of a subfield element (q^r = 4 only).
    pub fn gf4_label(&self, c: &FieldElement) -> Result<u8> {
        let omega = self.omega.as_ref().ok_or(Error::RequiresRankTwo)?;
        if c.is_zero() {
            Ok(LABEL_ZERO)
        } else if c.is_one() {
            Ok(LABEL_ONE)
        } else if c == omega {
            Ok(LABEL_OMEGA)
        } else if *c == (omega * omega) {
            Ok(LABEL_OMEGA2)
        } else {
            Err(Error::Internal("element outside the GF(4) subfield".into()))
        }
    }

    pub fn gf4_element(&self, label: u8) -> Result<FieldElement> {
        let omega = self.omega.as_ref().ok_or(Error::RequiresRankTwo)?;
        Ok(match label {
            LABEL_ZERO => self.field.zero(),
            LABEL_ONE => self.field.one(),
            LABEL_OMEGA => omega.clone(),
            _ => omega * omega,
        })
    }
}

/// Cyclic code of length n over GF(q^r), represented inside the splitting
/// field by its generator polynomial and root exponent set.
pub struct CyclicCode {
    sf: SplittingField,
    generator: Polynomial,
    roots: BTreeSet<usize>,
    block: Option<Block>,
    dimension: usize,
}

impl CyclicCode {
    /// Code C_B of a validated block.
    pub fn from_block(block: &Block) -> Result<CyclicCode> {
        let t = block.table();
        let mut code = Self::from_root_exponents(t.n(), t.q(), t.r(), &block.element_set())?;
        code.block = Some(block.clone());
        Ok(code)
    }

    /// Cyclic code with generator prod_{k in roots} (x - zeta^k).
    ///
    /// The exponent set must be stable under multiplication by q^r, which is
    /// exactly the condition for the coefficients to land in GF(q^r).
    pub fn from_root_exponents(
        n: usize,
        q: u64,
        r: usize,
        roots: &BTreeSet<usize>,
    ) -> Result<CyclicCode> {
        let sf = SplittingField::build(n, q, r)?;
        let qr = (sf.qr() % n as u128) as usize;
        for &k in roots {
            if k >= n || !roots.contains(&(k * qr % n)) {
                return Err(Error::RootSetNotClosed);
            }
        }
        let mut generator = Polynomial::one(&sf.field);
        for &k in roots {
            generator = generator.mul(&Polynomial::x_minus(&sf.zeta.pow(k as u128)));
        }
        // Frobenius fixpoint check on every coefficient; closure above makes
        // failure impossible.
        let er = sf.r * prime_power(q).unwrap().1 as usize;
        for c in generator.coeffs() {
            if !c.in_subfield(er)? {
                return Err(Error::Internal(
                    "generator coefficient escaped GF(q^r)".into(),
                ));
            }
        }
        let dimension = n - roots.len();
        Ok(CyclicCode {
            sf,
            generator,
            roots: roots.clone(),
            block: None,
            dimension,
        })
    }

    /// The full space (generator 1).
    pub fn full(n: usize, q: u64, r: usize) -> Result<CyclicCode> {
        Self::from_root_exponents(n, q, r, &BTreeSet::new())
    }

    pub fn n(&self) -> usize {
        self.sf.n
    }
    pub fn q(&self) -> u64 {
        self.sf.q
    }
    pub fn r(&self) -> usize {
        self.sf.r
    }
    pub fn dimension(&self) -> usize {
        self.dimension
    }
    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }
    pub fn splitting_field(&self) -> &SplittingField {
        &self.sf
    }
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.sf.field
    }
    pub fn zeta(&self) -> &FieldElement {
        &self.sf.zeta
    }
    pub fn roots(&self) -> &BTreeSet<usize> {
        &self.roots
    }
    pub fn block(&self) -> Option<&Block> {
        self.block.as_ref()
    }

    /// Generator coefficients as GF(4) labels (q^r = 4 only).
    pub fn gf4_generator_labels(&self) -> Result<Vec<u8>> {
        self.generator
            .coeffs()
            .iter()
            .map(|c| self.sf.gf4_label(c))
            .collect()
    }

    /// gcd(g, g^(sigma^i)) = 1 for all 0 < i < r.
    pub fn is_galois_coprime(&self) -> Result<bool> {
        let mut conj = self.generator.clone();
        for _ in 1..self.sf.r {
            conj = conj.sigma(self.sf.q)?;
            if self.generator.gcd(&conj)?.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// deg [g, g^sigma, ..., g^(sigma^(r-1))].
    pub fn conjugate_lcm_degree(&self) -> Result<usize> {
        let mut l = self.generator.clone();
        let mut conj = self.generator.clone();
        for _ in 1..self.sf.r {
            conj = conj.sigma(self.sf.q)?;
            l = l.lcm(&conj)?;
        }
        Ok(l.degree().unwrap_or(0))
    }

    /// Even-weight subcode C+: generator (x - 1) g. Proper only when g(1) != 0.
    pub fn even_subcode(&self) -> Result<CyclicCode> {
        if self.roots.contains(&0) {
            return Err(Error::EvenSubcodeDegenerate);
        }
        let mut roots = self.roots.clone();
        roots.insert(0);
        Self::from_root_exponents(self.sf.n, self.sf.q, self.sf.r, &roots)
    }

    /// Whether a coordinate vector of length n (as a polynomial) lies in C.
    pub fn contains(&self, word: &Polynomial) -> Result<bool> {
        if self.generator.degree() == Some(0) {
            return Ok(true);
        }
        self.generator.divides(word)
    }

    /// The unique idempotent generator: 0 at the roots of g, 1 at every
    /// other n-th root of unity. Verified on return (e^2 = e mod x^n - 1
    /// and gcd(e, x^n - 1) = g).
    pub fn idempotent(&self) -> Result<Polynomial> {
        let n = self.sf.n;
        let field = &self.sf.field;
        let inv_n = field
            .scalar(n as u64)
            .inverse()
            .map_err(|_| Error::Internal("n not invertible in the splitting field".into()))?;
        // power sums over the root set
        let mut zeta_pows = Vec::with_capacity(n);
        let mut acc = field.one();
        for _ in 0..n {
            zeta_pows.push(acc.clone());
            acc = acc.checked_mul(&self.sf.zeta)?;
        }
        let mut coeffs = Vec::with_capacity(n);
        coeffs.push(&field.scalar(self.dimension as u64) * &inv_n);
        for j in 1..n {
            let mut sum = field.zero();
            for &k in &self.roots {
                // zeta^(-jk) = zeta^(n - jk mod n)
                let e = (n - (j * k) % n) % n;
                sum = sum.checked_add(&zeta_pows[e])?;
            }
            coeffs.push((&sum * &inv_n).neg());
        }
        let e = Polynomial::from_coeffs(field, coeffs)?;
        // verification
        for k in 0..n {
            let v = e.eval(&zeta_pows[k])?;
            let expected_zero = self.roots.contains(&k);
            if expected_zero != v.is_zero() || (!expected_zero && !v.is_one()) {
                return Err(Error::Internal("idempotent interpolation failed".into()));
            }
        }
        let e2 = e.mul(&e).mod_xn_minus_1(n)?;
        if e2 != e {
            return Err(Error::Internal("idempotent is not idempotent".into()));
        }
        let xn1 = Polynomial::xn_minus_1(field, n);
        let gen_check = if e.is_zero() {
            xn1.monic()?
        } else {
            e.gcd(&xn1)?
        };
        let g_monic = if self.generator.is_zero() {
            self.generator.clone()
        } else {
            self.generator.monic()?
        };
        if gen_check != g_monic {
            return Err(Error::Internal("idempotent does not generate C".into()));
        }
        Ok(e)
    }
}

/// Standalone Galois-coprimality check for a divisor g of x^n - 1.
pub fn is_galois_coprime(g: &Polynomial, q: u64, r: usize, n: usize) -> Result<bool> {
    let xn1 = Polynomial::xn_minus_1(g.field(), n);
    if !g.divides(&xn1)? {
        return Err(Error::NotDivisorOfXnMinus1 { n });
    }
    let mut conj = g.clone();
    for _ in 1..r {
        conj = conj.sigma(q)?;
        if g.gcd(&conj)?.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which of the two GF(4) generators plays lambda in quaternary idempotents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LambdaChoice {
    /// The canonical order-3 element.
    #[default]
    Omega,
    /// Its conjugate; swaps B* with 2B*.
    OmegaSquared,
}

/// The dual block B* = { j : sum_{i in B} zeta^(-ij) = lambda } of a
/// complete block over GF(4).
///
/// B* is itself a complete block, and applying the map twice gives -B when
/// n = 1 mod 4 and -2B when n = 3 mod 4.
pub fn quaternary_dual_block(block: &Block, lambda: LambdaChoice) -> Result<Block> {
    let t = block.table();
    if t.q() != 2 || t.r() != 2 {
        return Err(Error::RequiresRankTwo);
    }
    if !block.is_complete() {
        return Err(Error::NotComplete);
    }
    let n = t.n();
    let sf = SplittingField::build(n, 2, 2)?;
    let omega = sf.omega.clone().expect("GF(4) subfield present");
    let lam = match lambda {
        LambdaChoice::Omega => omega.clone(),
        LambdaChoice::OmegaSquared => &omega * &omega,
    };
    let lam2 = &lam * &lam;
    let mut zeta_pows = Vec::with_capacity(n);
    let mut acc = sf.field.one();
    for _ in 0..n {
        zeta_pows.push(acc.clone());
        acc = acc.checked_mul(&sf.zeta)?;
    }
    let mut star = BTreeSet::new();
    for j in 1..n {
        let mut sum = sf.field.zero();
        for &i in block.elements() {
            let e = (n - (i * j) % n) % n;
            sum = sum.checked_add(&zeta_pows[e])?;
        }
        if sum == lam {
            star.insert(j);
        } else if sum != lam2 {
            return Err(Error::Internal(
                "power sum of a complete block escaped {lambda, lambda^2}".into(),
            ));
        }
    }
    let dual = Block::new(Arc::clone(t), star)
        .map_err(|e| Error::Internal(format!("dual block failed validation: {e}")))?;
    if !dual.is_complete() {
        return Err(Error::Internal("dual block is not complete".into()));
    }
    Ok(dual)
}

/// Idempotent of C_B in the closed quaternary form
/// (n+1)/2 + lambda * S_{B*} + lambda^2 * S_{2B*}, where (n+1)/2 is read in
/// characteristic 2 (1 when n = 1 mod 4, else 0).
pub fn quaternary_idempotent_form(block: &Block, lambda: LambdaChoice) -> Result<Polynomial> {
    let t = block.table();
    let n = t.n();
    let star = quaternary_dual_block(block, lambda)?;
    let sf = SplittingField::build(n, 2, 2)?;
    let omega = sf.omega.clone().expect("GF(4) subfield present");
    let lam = match lambda {
        LambdaChoice::Omega => omega.clone(),
        LambdaChoice::OmegaSquared => &omega * &omega,
    };
    let lam2 = &lam * &lam;
    let mut coeffs = vec![sf.field.zero(); n];
    if n % 4 == 1 {
        coeffs[0] = sf.field.one();
    }
    for &j in star.elements() {
        coeffs[j] = coeffs[j].checked_add(&lam)?;
    }
    for j in star.scaled(2) {
        coeffs[j] = coeffs[j].checked_add(&lam2)?;
    }
    Polynomial::from_coeffs(&sf.field, coeffs)
}

/// Coordinate permutation x -> a*x + b on positions: `out[j] = in[(a*j + b) mod n]`.
///
/// With a = -1, b = -1 this is exact coordinate reversal; a = -1, b = 1 is
/// the reversal of 1-indexed coordinates (the same map up to a cyclic shift).
pub fn apply_affine<T: Clone>(word: &[T], a: i64, b: i64) -> Result<Vec<T>> {
    let n = word.len();
    let an = (((a % n as i64) + n as i64) % n as i64) as usize;
    if gcd_u64(an as u64, n as u64) != 1 {
        return Err(Error::AffineNotInvertible { a: an, n });
    }
    let bn = (((b % n as i64) + n as i64) % n as i64) as usize;
    Ok((0..n).map(|j| word[(an * j + bn) % n].clone()).collect())
}

impl CyclicCode {
    /// Whether the affine position map x -> a*x + b sends C into itself,
    /// checked on the generator basis x^i g.
    pub fn is_automorphism(&self, a: i64, b: i64, guard: u64) -> Result<bool> {
        let n = self.sf.n;
        let work = (self.dimension as u128) * (n as u128);
        if work > guard as u128 {
            return Err(Error::GuardExceeded {
                required: work,
                guard,
            });
        }
        for i in 0..self.dimension {
            let basis = self.generator.shifted(i).mod_xn_minus_1(n)?;
            let permuted = apply_affine(&basis.word(n), a, b)?;
            let p = Polynomial::from_coeffs(&self.sf.field, permuted)?;
            if !self.contains(&p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reversibility as a code property; equals -B = B for block codes.
    pub fn is_reversible(&self, guard: u64) -> Result<bool> {
        self.is_automorphism(-1, -1, guard)
    }
}

/// The setwise stabilizer of B in (Z/nZ)^x.
pub fn block_stabilizer(block: &Block) -> Vec<usize> {
    let n = block.table().n();
    let set = block.element_set();
    (1..n)
        .filter(|&a| gcd_u64(a as u64, n as u64) == 1)
        .filter(|&a| set.iter().map(|&k| k * a % n).collect::<BTreeSet<usize>>() == set)
        .collect()
}

/// All pairwise inner products of the extended generator bases of two codes
/// vanish. The extension appends the parity coordinate f(1).
pub fn extended_codes_orthogonal(c1: &CyclicCode, c2: &CyclicCode, guard: u64) -> Result<bool> {
    if c1.n() != c2.n() || c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    let n = c1.n();
    let pairs = (c1.dimension() as u128) * (c2.dimension() as u128);
    if pairs > guard as u128 {
        return Err(Error::GuardExceeded {
            required: pairs,
            guard,
        });
    }
    let one = c1.field().one();
    let ext = |code: &CyclicCode| -> Result<Vec<Vec<FieldElement>>> {
        let parity = code.generator().eval(&one)?;
        (0..code.dimension())
            .map(|i| {
                let basis = code.generator().shifted(i).mod_xn_minus_1(n)?;
                let mut w = basis.word(n);
                w.push(parity.clone());
                Ok(w)
            })
            .collect()
    };
    let b1 = ext(c1)?;
    let b2 = ext(c2)?;
    for u in &b1 {
        for v in &b2 {
            let mut dot = c1.field().zero();
            for (x, y) in u.iter().zip(v) {
                dot = dot.checked_add(&(x * y))?;
            }
            if !dot.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verifies the extended-code duality for a complete block over a
/// characteristic-2 field and reports whether the extended code is
/// self-dual (B = -2B).
pub fn dual_extended_check(block: &Block, guard: u64) -> Result<bool> {
    let t = block.table();
    if t.q() & (t.q() - 1) != 0 {
        return Err(Error::NotCharTwo);
    }
    if !block.is_complete() {
        return Err(Error::NotComplete);
    }
    let c = CyclicCode::from_block(block)?;
    let neg2 = block.scaled(-2);
    let c2 = CyclicCode::from_root_exponents(t.n(), t.q(), t.r(), &neg2)?;
    if c.dimension() + c2.dimension() != t.n() + 1 {
        return Err(Error::Internal(
            "extended duality dimension mismatch".into(),
        ));
    }
    if !extended_codes_orthogonal(&c, &c2, guard)? {
        return Err(Error::Internal(
            "extended codes of B and -2B are not orthogonal".into(),
        ));
    }
    Ok(neg2 == block.element_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{enumerate_blocks, quadratic_residues, BlockFilters, OrbitTable};

    const GUARD: u64 = 1 << 28;

    fn block(n: usize, q: u64, r: usize, elems: &[usize]) -> Block {
        let t = OrbitTable::new(n, q, r).unwrap();
        Block::new(t, elems.iter().copied()).unwrap()
    }

    #[test]
    fn code_from_block_n3() {
        let c = CyclicCode::from_block(&block(3, 2, 2, &[1])).unwrap();
        assert_eq!(c.dimension(), 2);
        // g = x - zeta with zeta = omega canonical
        let sf = c.splitting_field();
        assert_eq!(sf.zeta, sf.omega.clone().unwrap());
        assert_eq!(c.gf4_generator_labels().unwrap(), vec![LABEL_OMEGA, 1]);
        // g * g^sigma = x^2 + x + 1
        let prod = c.generator().mul(&c.generator().sigma(2).unwrap());
        let expected = Polynomial::from_coeffs(
            c.field(),
            vec![c.field().one(), c.field().one(), c.field().one()],
        )
        .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn code_from_block_n5() {
        let c = CyclicCode::from_block(&block(5, 2, 2, &[1, 4])).unwrap();
        assert_eq!(c.dimension(), 3);
        let g = c.generator();
        assert_eq!(g.degree(), Some(2));
        assert!(g.is_monic());
        // divides 1 + x + x^2 + x^3 + x^4
        let ones = Polynomial::from_coeffs(c.field(), vec![c.field().one(); 5]).unwrap();
        assert!(g.divides(&ones).unwrap());
        // coefficient fixpoints under x -> x^4
        for coeff in g.coeffs() {
            assert!(coeff.in_subfield(2).unwrap());
        }
    }

    #[test]
    fn code_from_block_n17() {
        let c = CyclicCode::from_block(&block(17, 2, 2, &[2, 8, 9, 15])).unwrap();
        assert_eq!(c.dimension(), 13);
        assert_eq!(c.generator().degree(), Some(4));
        assert!(c.is_galois_coprime().unwrap());
    }

    #[test]
    fn galois_coprimality() {
        let c = CyclicCode::from_block(&block(3, 2, 2, &[1])).unwrap();
        assert!(c.is_galois_coprime().unwrap());

        // g = x^2 + x + 1 is fixed by sigma
        let fixed = CyclicCode::from_root_exponents(3, 2, 2, &BTreeSet::from([1, 2])).unwrap();
        assert!(!fixed.is_galois_coprime().unwrap());

        let full = CyclicCode::full(3, 2, 2).unwrap();
        assert!(full.is_galois_coprime().unwrap());

        // standalone version enforces divisibility
        let sf = SplittingField::build(3, 2, 2).unwrap();
        let not_divisor = Polynomial::x_minus(&sf.field.one().neg())
            .mul(&Polynomial::x_minus(&sf.field.one().neg()));
        assert!(matches!(
            is_galois_coprime(&not_divisor, 2, 2, 3),
            Err(Error::NotDivisorOfXnMinus1 { .. })
        ));
    }

    #[test]
    fn conjugate_lcm_degree_matches_root_union() {
        for roots in [vec![1usize], vec![1, 2], vec![0, 1, 2]] {
            let set: BTreeSet<usize> = roots.into_iter().collect();
            // closure under *4 mod 3 is trivial
            let c = CyclicCode::from_root_exponents(3, 2, 2, &set).unwrap();
            let union: BTreeSet<usize> = set.iter().flat_map(|&k| [k % 3, k * 2 % 3]).collect();
            assert_eq!(c.conjugate_lcm_degree().unwrap(), union.len());
        }
    }

    #[test]
    fn idempotent_n3() {
        let c = CyclicCode::from_block(&block(3, 2, 2, &[1])).unwrap();
        let e = c.idempotent().unwrap();
        let sf = c.splitting_field();
        let w = sf.omega.clone().unwrap();
        let w2 = &w * &w;
        assert_eq!(e.coeff(0), sf.field.zero());
        assert_eq!(e.coeff(1), w2);
        assert_eq!(e.coeff(2), w);
    }

    #[test]
    fn idempotent_degenerate_cases() {
        let full = CyclicCode::full(5, 2, 2).unwrap();
        assert_eq!(full.idempotent().unwrap(), Polynomial::one(full.field()));

        // repetition code: e = (1/n)(1 + x + ... + x^(n-1))
        let rep = CyclicCode::from_root_exponents(5, 2, 2, &BTreeSet::from([1, 2, 3, 4])).unwrap();
        let e = rep.idempotent().unwrap();
        for j in 0..5 {
            assert!(e.coeff(j).is_one());
        }

        // zero code: e = 0
        let zero = CyclicCode::from_root_exponents(3, 2, 2, &BTreeSet::from([0, 1, 2])).unwrap();
        assert!(zero.idempotent().unwrap().is_zero());
    }

    #[test]
    fn quaternary_dual_block_n3() {
        let b = block(3, 2, 2, &[1]);
        let star = quaternary_dual_block(&b, LambdaChoice::Omega).unwrap();
        assert_eq!(star.elements(), &[2]);
        // B** = -2B = B for n = 3 mod 4
        let star2 = quaternary_dual_block(&star, LambdaChoice::Omega).unwrap();
        assert_eq!(star2.element_set(), b.scaled(-2));
    }

    #[test]
    fn quaternary_dual_block_qr13() {
        let b = block(13, 2, 2, &quadratic_residues(13));
        let star = quaternary_dual_block(&b, LambdaChoice::Omega).unwrap();
        let star2 = quaternary_dual_block(&star, LambdaChoice::Omega).unwrap();
        // n = 1 mod 4: B** = -B, and -B = B for QR(13)
        assert_eq!(star2.element_set(), b.scaled(-1));
        assert_eq!(star2.element_set(), b.element_set());
    }

    #[test]
    fn lambda_conjugate_swaps_star_with_twice_star() {
        let b = block(11, 2, 2, &quadratic_residues(11));
        let star = quaternary_dual_block(&b, LambdaChoice::Omega).unwrap();
        let star_conj = quaternary_dual_block(&b, LambdaChoice::OmegaSquared).unwrap();
        assert_eq!(star_conj.element_set(), star.scaled(2));
    }

    #[test]
    fn quaternary_idempotent_form_matches_interpolation() {
        for (n, elems) in [(3usize, vec![1usize]), (13, quadratic_residues(13))] {
            let b = block(n, 2, 2, &elems);
            let c = CyclicCode::from_block(&b).unwrap();
            assert_eq!(
                quaternary_idempotent_form(&b, LambdaChoice::Omega).unwrap(),
                c.idempotent().unwrap()
            );
        }
    }

    #[test]
    fn affine_reversal() {
        let word: Vec<u32> = (0..7).collect();
        let rev = apply_affine(&word, -1, -1).unwrap();
        assert_eq!(rev, vec![6, 5, 4, 3, 2, 1, 0]);
        // a = -1, b = 1 is the 1-indexed reversal: a cyclic shift of the same
        let shifted = apply_affine(&word, -1, 1).unwrap();
        assert_eq!(shifted, vec![1, 0, 6, 5, 4, 3, 2]);
        assert!(matches!(
            apply_affine(&word, 7, 0),
            Err(Error::AffineNotInvertible { .. })
        ));
    }

    #[test]
    fn automorphisms_of_qr13() {
        let c = CyclicCode::from_block(&block(13, 2, 2, &quadratic_residues(13))).unwrap();
        assert!(c.is_automorphism(3, 0, GUARD).unwrap()); // 3 is a QR mod 13
        assert!(!c.is_automorphism(2, 0, GUARD).unwrap()); // 2 is not
        assert!(c.is_reversible(GUARD).unwrap());
    }

    #[test]
    fn affine_closure_matches_stabilizer() {
        let b = block(17, 2, 2, &[2, 8, 9, 15]);
        let c = CyclicCode::from_block(&b).unwrap();
        let stab = block_stabilizer(&b);
        for a in 1..17i64 {
            if gcd_u64(a as u64, 17) != 1 {
                continue;
            }
            let in_stab = stab.contains(&(a as usize));
            assert_eq!(c.is_automorphism(a, 5, GUARD).unwrap(), in_stab, "a = {a}");
        }
        // reversibility is exactly -B = B
        assert_eq!(c.is_reversible(GUARD).unwrap(), b.is_reversible());
    }

    #[test]
    fn extended_self_duality() {
        let b3 = block(3, 2, 2, &[1]);
        assert!(dual_extended_check(&b3, GUARD).unwrap());

        let b11 = block(11, 2, 2, &quadratic_residues(11));
        assert!(dual_extended_check(&b11, GUARD).unwrap());

        let b13 = block(13, 2, 2, &quadratic_residues(13));
        assert!(!dual_extended_check(&b13, GUARD).unwrap());
        // and the failure is visible at the inner-product level
        let c13 = CyclicCode::from_block(&b13).unwrap();
        assert!(!extended_codes_orthogonal(&c13, &c13, GUARD).unwrap());
    }

    #[test]
    fn root_set_must_be_frobenius_stable() {
        // {1} alone is not closed under multiplication by 4 mod 5
        assert!(matches!(
            CyclicCode::from_root_exponents(5, 2, 2, &BTreeSet::from([1])),
            Err(Error::RootSetNotClosed)
        ));
    }

    #[test]
    fn even_subcode_roots() {
        let c = CyclicCode::from_block(&block(5, 2, 2, &[1, 4])).unwrap();
        let plus = c.even_subcode().unwrap();
        assert_eq!(plus.dimension(), c.dimension() - 1);
        assert!(plus.roots().contains(&0));
        assert!(matches!(
            plus.even_subcode(),
            Err(Error::EvenSubcodeDegenerate)
        ));
    }

    #[test]
    fn complete_blocks_give_repetition_intersection() {
        // product of all conjugates of g is 1 + x + ... + x^(n-1)
        let t = OrbitTable::new(17, 2, 2).unwrap();
        for b in enumerate_blocks(
            &t,
            &BlockFilters {
                complete: Some(true),
                ..Default::default()
            },
        )
        .unwrap()
        {
            let c = CyclicCode::from_block(&b).unwrap();
            let prod = c.generator().mul(&c.generator().sigma(2).unwrap());
            let ones = Polynomial::from_coeffs(c.field(), vec![c.field().one(); 17]).unwrap();
            assert_eq!(prod.monic().unwrap(), ones);
        }
    }

    #[test]
    fn empty_block_gives_the_full_code() {
        let t = OrbitTable::new(5, 2, 2).unwrap();
        let b = Block::new(t, []).unwrap();
        let c = CyclicCode::from_block(&b).unwrap();
        assert_eq!(c.dimension(), 5);
        assert_eq!(c.generator(), &Polynomial::one(c.field()));
        assert!(c.is_galois_coprime().unwrap());
        assert_eq!(c.min_distance(1 << 28).unwrap(), 1);
    }
}
