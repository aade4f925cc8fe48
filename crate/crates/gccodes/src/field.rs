//! Exact arithmetic in GF(p^M).
//!
//! A [`FieldSpec`] pins down one concrete representation of GF(p^M): residue
//! polynomials modulo the *first* monic irreducible of degree M over GF(p),
//! where "first" means ascending order of the non-leading coefficient
//! sequence read as a base-p integer. Two calls to [`FieldSpec::build`] with
//! the same (p, M) therefore yield bit-identical moduli on any platform.
//!
//! Elements are dense residue sequences; there are no discrete-log tables, so
//! large fields (up to order 2^63) construct lazily. Subfield membership is
//! always decided by the Frobenius fixpoint a^(p^d) = a rather than through
//! explicit embeddings.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// scalar arithmetic mod p
// ---------------------------------------------------------------------------

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of n by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d as u128 * d as u128 <= n as u128 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Writes q = p^e with p prime, e >= 1.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let ps = prime_factors(q);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut e = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        e += 1;
    }
    Some((p, e))
}

// ---------------------------------------------------------------------------
// dense polynomials over GF(p), used only to find and apply the modulus
// ---------------------------------------------------------------------------

fn pp_norm(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(ai, bj, p), p);
        }
    }
    pp_norm(&mut out);
    out
}

/// Remainder of a by the monic polynomial f.
fn pp_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    pp_norm(&mut r);
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if lead != 0 {
            for (j, &fj) in f.iter().enumerate().take(df) {
                r[shift + j] = subm(r[shift + j], mulm(lead, fj, p), p);
            }
        }
        r.pop();
        pp_norm(&mut r);
    }
    r
}

fn pp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    pp_rem(&pp_mul(a, b, p), f, p)
}

/// x^e mod f for a monic f.
fn pp_pow_x(mut e: u128, f: &[u64], p: u64) -> Vec<u64> {
    let mut base = pp_rem(&[0, 1], f, p);
    let mut acc = pp_rem(&[1], f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = pp_mulmod(&acc, &base, f, p);
        }
        base = pp_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn pp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    pp_norm(&mut a);
    pp_norm(&mut b);
    while !b.is_empty() {
        // make b monic so pp_rem applies
        let inv = powm(*b.last().unwrap(), p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| mulm(c, inv, p)).collect();
        let r = pp_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin irreducibility test for a monic f of degree >= 1 over GF(p).
fn pp_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    // x^(p^m) == x mod f
    let pm = (p as u128).pow(m as u32);
    let xq = pp_pow_x(pm, f, p);
    let x = pp_rem(&[0, 1], f, p);
    if xq != x {
        return false;
    }
    // gcd(x^(p^(m/l)) - x, f) == 1 for every prime l | m
    for l in prime_factors(m as u64) {
        let e = (p as u128).pow((m as u64 / l) as u32);
        let mut h = pp_pow_x(e, f, p);
        // h -= x
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = subm(h[1], 1, p);
        pp_norm(&mut h);
        let g = pp_gcd(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

/// One canonical representation of GF(p^M).
#[derive(Debug)]
pub struct FieldSpec {
    p: u64,
    m: usize,
    /// Monic irreducible of degree m, coefficient i of x^i, length m + 1.
    modulus: Vec<u64>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        // the modulus is a pure function of (p, m)
        self.p == other.p && self.m == other.m
    }
}
impl Eq for FieldSpec {}

impl FieldSpec {
    /// Canonical GF(p^M): first monic irreducible of degree M in ascending
    /// base-p coefficient order.
    pub fn build(p: u64, m: usize) -> Result<Arc<FieldSpec>> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        let order = (p as u128)
            .checked_pow(m as u32)
            .filter(|&o| o <= 1u128 << 63)
            .ok_or(Error::FieldTooLarge { p, m })?;
        let mut low = vec![0u64; m];
        loop {
            let mut f = low.clone();
            f.push(1);
            if pp_is_irreducible(&f, p) {
                return Ok(Arc::new(FieldSpec { p, m, modulus: f }));
            }
            // next coefficient sequence in base-p order
            let mut i = 0;
            loop {
                debug_assert!(i < m, "no irreducible of degree {m} found below {order}");
                low[i] += 1;
                if low[i] == p {
                    low[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.m as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            owner: Arc::clone(self),
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.element_from_index(1)
    }

    /// Residue of x (the adjoined generator). Zero when M = 1.
    pub fn gen_x(self: &Arc<Self>) -> FieldElement {
        if self.m == 1 {
            // x reduces to -modulus[0]
            let c = subm(0, self.modulus[0], self.p);
            return FieldElement {
                owner: Arc::clone(self),
                coeffs: vec![c],
            };
        }
        self.element_from_index(self.p as u128)
    }

    /// Element whose coefficient sequence is the base-p expansion of idx.
    pub fn element_from_index(self: &Arc<Self>, mut idx: u128) -> FieldElement {
        debug_assert!(idx < self.order());
        let mut coeffs = vec![0u64; self.m];
        for c in coeffs.iter_mut() {
            *c = (idx % self.p as u128) as u64;
            idx /= self.p as u128;
        }
        FieldElement {
            owner: Arc::clone(self),
            coeffs,
        }
    }

    pub fn element_from_coeffs(self: &Arc<Self>, coeffs: Vec<u64>) -> FieldElement {
        let mut c = coeffs;
        c.resize(self.m, 0);
        for v in c.iter_mut() {
            *v %= self.p;
        }
        FieldElement {
            owner: Arc::clone(self),
            coeffs: c,
        }
    }

    /// Embeds a prime-field residue.
    pub fn scalar(self: &Arc<Self>, v: u64) -> FieldElement {
        self.element_from_index((v % self.p) as u128)
    }
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

/// Element of a [`FieldSpec`], stored as M residues modulo p.
#[derive(Clone)]
pub struct FieldElement {
    owner: Arc<FieldSpec>,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        *self.owner == *other.owner && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.owner.p.hash(state);
        self.owner.m.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})#{}", self.owner.p, self.owner.m, self.index())
    }
}

impl FieldElement {
    pub fn owner(&self) -> &Arc<FieldSpec> {
        &self.owner
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.index() == 1
    }

    /// Coefficient sequence read as a base-p integer; the canonical ordering
    /// key for elements.
    pub fn index(&self) -> u128 {
        let p = self.owner.p as u128;
        let mut acc = 0u128;
        for &c in self.coeffs.iter().rev() {
            acc = acc * p + c as u128;
        }
        acc
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if *self.owner == *other.owner {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        let p = self.owner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| addm(a, b, p))
            .collect();
        Ok(FieldElement {
            owner: Arc::clone(&self.owner),
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        let p = self.owner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| subm(a, b, p))
            .collect();
        Ok(FieldElement {
            owner: Arc::clone(&self.owner),
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        let p = self.owner.p;
        let m = self.owner.m;
        let mut prod = vec![0u64; 2 * m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = addm(prod[i + j], mulm(a, b, p), p);
            }
        }
        // reduce by the monic modulus
        for i in (m..2 * m).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for j in 0..m {
                    let t = mulm(c, self.owner.modulus[j], p);
                    prod[i - m + j] = subm(prod[i - m + j], t, p);
                }
            }
        }
        prod.truncate(m);
        Ok(FieldElement {
            owner: Arc::clone(&self.owner),
            coeffs: prod,
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.same_field(rhs)?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.checked_mul(&rhs.inverse()?)
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.owner.p;
        let coeffs = self.coeffs.iter().map(|&a| subm(0, a, p)).collect();
        FieldElement {
            owner: Arc::clone(&self.owner),
            coeffs,
        }
    }

    pub fn pow(&self, mut e: u128) -> FieldElement {
        let mut acc = self.owner.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same field");
            }
            base = base.checked_mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.owner.order() - 2))
    }

    /// a^(q^i), where q must be a power of the characteristic.
    pub fn frobenius_pow(&self, q: u64, i: usize) -> Result<FieldElement> {
        let p = self.owner.p;
        check_char_power(q, p)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        // fold the exponent into the multiplicative group order
        let group = self.owner.order() - 1;
        let mut e = 1u128;
        for _ in 0..i {
            e = (e * (q as u128 % group)) % group;
        }
        Ok(self.pow(e))
    }

    /// Relative trace from GF(q^r) down to GF(q): sum of a^(q^i), i < r.
    ///
    /// Errors unless a lies in the GF(q^r) subfield of the owner field.
    pub fn relative_trace(&self, q: u64, r: usize) -> Result<FieldElement> {
        let p = self.owner.p;
        let e = match prime_power(q) {
            Some((base, e)) if base == p => e,
            _ => return Err(Error::NotCharPower { q, p }),
        };
        let d = e as usize * r;
        if !self.in_subfield(d)? {
            return Err(Error::NotInSubfield { q, r });
        }
        let mut acc = self.owner.zero();
        let mut term = self.clone();
        for _ in 0..r {
            acc = acc.checked_add(&term)?;
            term = term.frobenius_pow(q, 1)?;
        }
        debug_assert!(acc.frobenius_pow(q, 1).unwrap() == acc);
        Ok(acc)
    }

    /// Frobenius fixpoint test: a lies in the subfield of order p^d.
    pub fn in_subfield(&self, d: usize) -> Result<bool> {
        let m = self.owner.m;
        if d == 0 || m % d != 0 {
            return Err(Error::NoSuchSubfield {
                p: self.owner.p,
                d,
                m,
            });
        }
        let pd = (self.owner.p as u128).pow(d as u32);
        Ok(self.pow(pd) == *self)
    }
}

fn check_char_power(q: u64, p: u64) -> Result<()> {
    match prime_power(q) {
        Some((base, _)) if base == p => Ok(()),
        _ => Err(Error::NotCharPower { q, p }),
    }
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .expect("field element operands from different fields")
            }
        }
    };
}
panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

/// Canonical primitive n-th root of unity: the least element (base-p
/// coefficient order) of multiplicative order exactly n.
pub fn primitive_nth_root(field: &Arc<FieldSpec>, n: u64) -> Result<FieldElement> {
    if n == 0 {
        return Err(Error::NoNthRoot {
            n,
            group: field.order() - 1,
        });
    }
    let group = field.order() - 1;
    if group % n as u128 != 0 {
        return Err(Error::NoNthRoot { n, group });
    }
    if n == 1 {
        return Ok(field.one());
    }
    let primes = prime_factors(n);
    let cofactor = group / n as u128;
    // Find a generator of the order-n subgroup, then take the least element
    // of exact order n among its power conjugates.
    for idx in 1..field.order() {
        let b = field.element_from_index(idx).pow(cofactor);
        if primes.iter().all(|&l| !b.pow((n / l) as u128).is_one()) {
            let mut best = b.clone();
            let mut pw = b.clone();
            for j in 2..n {
                pw = pw.checked_mul(&b)?;
                if gcd_u64(j, n) == 1 && pw.index() < best.index() {
                    best = pw.clone();
                }
            }
            return Ok(best);
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Arc<FieldSpec> {
        FieldSpec::build(2, 2).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(FieldSpec::build(2, 1).unwrap().modulus(), &[0, 1]); // x
        assert_eq!(gf4().modulus(), &[1, 1, 1]); // x^2 + x + 1
    }

    #[test]
    fn build_rejections() {
        assert!(matches!(FieldSpec::build(4, 2), Err(Error::NotPrime(4))));
        assert!(matches!(
            FieldSpec::build(2, 0),
            Err(Error::ZeroExtensionDegree)
        ));
        assert!(matches!(
            FieldSpec::build(2, 64),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    /// Independent irreducibility oracle: trial division by every monic
    /// polynomial of degree 1..=deg/2.
    fn irreducible_by_trial_division(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u128).pow(d as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    g.push((k % p as u128) as u64);
                    k /= p as u128;
                }
                g.push(1);
                if pp_rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn gf4096_modulus_is_first_irreducible_by_scan() {
        let f = FieldSpec::build(2, 12).unwrap();
        let modulus = f.modulus().to_vec();
        assert!(irreducible_by_trial_division(&modulus, 2));
        // nothing smaller is irreducible
        let low_value: u64 = modulus[..12].iter().enumerate().map(|(i, &c)| c << i).sum();
        for idx in 0..low_value {
            let mut g: Vec<u64> = (0..12).map(|i| (idx >> i) & 1).collect();
            g.push(1);
            assert!(!irreducible_by_trial_division(&g, 2), "idx {idx}");
        }
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = gf4();
        let w = f.gen_x();
        let w2 = w.checked_mul(&w).unwrap();
        // w * w = w + 1 (forced by x^2 + x + 1)
        assert_eq!(w2, f.element_from_index(3));
        // w * (w + 1) = 1
        assert!(w.checked_mul(&w2).unwrap().is_one());
        // a + a = 0 in characteristic 2
        for idx in 0..4 {
            let a = f.element_from_index(idx);
            assert!(a.checked_add(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn arith_errors() {
        let f = gf4();
        let g = FieldSpec::build(2, 4).unwrap();
        let a = f.one();
        let b = g.one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch)));
        assert!(matches!(
            a.checked_div(&f.zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn frobenius_on_gf4() {
        let f = gf4();
        let w = f.gen_x();
        let w2 = f.element_from_index(3);
        assert_eq!(w.frobenius_pow(2, 1).unwrap(), w2);
        assert_eq!(w.frobenius_pow(2, 2).unwrap(), w);
        assert!(f.zero().frobenius_pow(2, 5).unwrap().is_zero());
    }

    #[test]
    fn frobenius_order_divides_degree() {
        let f = FieldSpec::build(3, 3).unwrap();
        for idx in 0..f.order() {
            let a = f.element_from_index(idx);
            assert_eq!(a.frobenius_pow(3, 3).unwrap(), a);
        }
    }

    #[test]
    fn trace_gf4_over_gf2() {
        let f = gf4();
        let w = f.gen_x();
        assert!(w.relative_trace(2, 2).unwrap().is_one()); // w + w^2 = 1
        assert!(f.one().relative_trace(2, 2).unwrap().is_zero());
        assert!(f.zero().relative_trace(2, 2).unwrap().is_zero());
    }

    #[test]
    fn trace_additivity_and_membership() {
        let f = FieldSpec::build(2, 4).unwrap();
        for i in 0..16 {
            for j in 0..16 {
                let a = f.element_from_index(i);
                let b = f.element_from_index(j);
                let lhs = a.checked_add(&b).unwrap().relative_trace(2, 4).unwrap();
                let rhs = a
                    .relative_trace(2, 4)
                    .unwrap()
                    .checked_add(&b.relative_trace(2, 4).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
                assert!(lhs.in_subfield(1).unwrap());
            }
        }
    }

    #[test]
    fn trace_requires_subfield_membership() {
        // GF(16) element outside GF(4) rejected for the GF(4)/GF(2) trace
        let f = FieldSpec::build(2, 4).unwrap();
        let g = f.gen_x(); // order 15, not in GF(4)
        assert!(matches!(
            g.relative_trace(2, 2),
            Err(Error::NotInSubfield { .. })
        ));
    }

    #[test]
    fn subfield_membership() {
        let f = gf4();
        let w = f.gen_x();
        assert!(!w.in_subfield(1).unwrap());
        assert!(f.one().in_subfield(1).unwrap());
        assert!(w.in_subfield(2).unwrap());
        assert!(matches!(
            FieldSpec::build(2, 4).unwrap().one().in_subfield(3),
            Err(Error::NoSuchSubfield { .. })
        ));
    }

    #[test]
    fn canonical_cube_root_in_gf4() {
        let f = gf4();
        assert_eq!(primitive_nth_root(&f, 3).unwrap(), f.gen_x());
        assert!(primitive_nth_root(&f, 1).unwrap().is_one());
    }

    #[test]
    fn thirteenth_root_in_gf4096() {
        let f = FieldSpec::build(2, 12).unwrap();
        let z = primitive_nth_root(&f, 13).unwrap();
        assert!(z.pow(13).is_one());
        for k in 1..13 {
            assert!(!z.pow(k).is_one(), "order divides {k}");
        }
        // least such element: every smaller element fails the order check
        for idx in 0..z.index() {
            let a = f.element_from_index(idx);
            assert!(!(a.pow(13).is_one() && !a.is_one()));
        }
    }

    #[test]
    fn no_root_when_n_does_not_divide() {
        let f = gf4();
        assert!(matches!(
            primitive_nth_root(&f, 5),
            Err(Error::NoNthRoot { .. })
        ));
    }

    #[test]
    fn build_is_referentially_transparent() {
        let a = FieldSpec::build(2, 8).unwrap();
        let b = FieldSpec::build(2, 8).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.one(), b.one());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = FieldSpec::build(5, 2).unwrap();
        for idx in 1..25 {
            let a = f.element_from_index(idx);
            assert!(a.checked_mul(&a.inverse().unwrap()).unwrap().is_one());
        }
    }
}
