//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! Coefficient index i holds the coefficient of x^i. Polynomials keep a
//! normalized form: the highest-index coefficient is nonzero unless the
//! polynomial is the zero polynomial, whose degree is `None` rather than a
//! sentinel integer.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Arc<FieldSpec>,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("#{}*x^{}", c.index(), i))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Polynomial {
    pub fn zero(field: &Arc<FieldSpec>) -> Polynomial {
        Polynomial {
            field: Arc::clone(field),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Arc<FieldSpec>) -> Polynomial {
        Polynomial::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        let field = Arc::clone(c.owner());
        let mut p = Polynomial {
            field,
            coeffs: vec![c],
        };
        p.normalize();
        p
    }

    /// x - a
    pub fn x_minus(a: &FieldElement) -> Polynomial {
        let field = Arc::clone(a.owner());
        Polynomial {
            coeffs: vec![a.neg(), field.one()],
            field,
        }
    }

    /// x^n - 1
    pub fn xn_minus_1(field: &Arc<FieldSpec>, n: usize) -> Polynomial {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.one().neg();
        coeffs[n] = field.one();
        let mut p = Polynomial {
            field: Arc::clone(field),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn from_coeffs(field: &Arc<FieldSpec>, coeffs: Vec<FieldElement>) -> Result<Polynomial> {
        for c in &coeffs {
            if c.owner().as_ref() != field.as_ref() {
                return Err(Error::FieldMismatch);
            }
        }
        let mut p = Polynomial {
            field: Arc::clone(field),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, FieldElement::is_one)
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        let mut p = Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        let mut p = Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut p = Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        let mut p = Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        };
        p.normalize();
        p
    }

    /// Multiplication by x^k.
    pub fn shifted(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    /// Euclidean division: self = q * g + r with deg r < deg g.
    pub fn divmod(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if g.is_zero() {
            return Err(Error::ZeroPolyDivision);
        }
        let dg = g.degree().unwrap();
        let lead_inv = g.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dg)];
        while rem.len() > dg {
            let c = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dg;
            if !c.is_zero() {
                let factor = &c * &lead_inv;
                quot[shift] = factor.clone();
                for (j, gj) in g.coeffs.iter().enumerate() {
                    rem[shift + j] = &rem[shift + j] - &(&factor * gj);
                }
            }
            rem.pop();
            while rem.last().map_or(false, FieldElement::is_zero) {
                rem.pop();
            }
        }
        let mut q = Polynomial {
            field: Arc::clone(&self.field),
            coeffs: quot,
        };
        q.normalize();
        let mut r = Polynomial {
            field: Arc::clone(&self.field),
            coeffs: rem,
        };
        r.normalize();
        Ok((q, r))
    }

    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        Ok(other.divmod(self)?.1.is_zero())
    }

    pub fn monic(&self) -> Result<Polynomial> {
        match self.leading() {
            None => Err(Error::ZeroPolyDivision),
            Some(l) => Ok(self.scale(&l.inverse()?)),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm = self * other / gcd.
    pub fn lcm(&self, other: &Polynomial) -> Result<Polynomial> {
        let g = self.gcd(other)?;
        let (q, r) = self.mul(other).divmod(&g)?;
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Coefficientwise q-th power (the Frobenius action on coefficients).
    pub fn sigma(&self, q: u64) -> Result<Polynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.frobenius_pow(q, 1))
            .collect::<Result<Vec<_>>>()?;
        let mut p = Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// sigma - id on coefficients; the kernel is exactly `GF(q)[x]`.
    pub fn psi(&self, q: u64) -> Result<Polynomial> {
        Ok(self.sigma(q)?.sub(self))
    }

    /// f^R(x) = x^deg(f) * f(1/x): the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolyReciprocal);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let mut p = Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Reduction modulo x^n - 1: exponents folded mod n, coefficients summed.
    pub fn mod_xn_minus_1(&self, n: usize) -> Result<Polynomial> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let mut coeffs = vec![self.field.zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = i % n;
            coeffs[j] = &coeffs[j] + c;
        }
        let mut p = Polynomial {
            field: Arc::clone(&self.field),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.owner().as_ref() != self.field.as_ref() {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + c;
        }
        Ok(acc)
    }

    /// Coefficients padded to length n (a codeword coordinate vector).
    pub fn word(&self, n: usize) -> Vec<FieldElement> {
        (0..n).map(|i| self.coeff(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::primitive_nth_root;
    use proptest::prelude::*;

    fn gf2() -> Arc<FieldSpec> {
        FieldSpec::build(2, 1).unwrap()
    }

    fn gf4() -> Arc<FieldSpec> {
        FieldSpec::build(2, 2).unwrap()
    }

    fn poly_from_indices(f: &Arc<FieldSpec>, idx: &[u128]) -> Polynomial {
        let coeffs = idx.iter().map(|&i| f.element_from_index(i)).collect();
        Polynomial::from_coeffs(f, coeffs).unwrap()
    }

    #[test]
    fn divmod_over_gf2() {
        let f = gf2();
        let x3p1 = poly_from_indices(&f, &[1, 0, 0, 1]);
        let xp1 = poly_from_indices(&f, &[1, 1]);
        let (q, r) = x3p1.divmod(&xp1).unwrap();
        assert_eq!(q, poly_from_indices(&f, &[1, 1, 1]));
        assert!(r.is_zero());

        let (q, r) = xp1.divmod(&x3p1).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, xp1);

        let x2px1 = poly_from_indices(&f, &[1, 1, 1]);
        let (q, r) = x2px1.divmod(&x2px1).unwrap();
        assert_eq!(q, Polynomial::one(&f));
        assert!(r.is_zero());

        assert!(matches!(
            xp1.divmod(&Polynomial::zero(&f)),
            Err(Error::ZeroPolyDivision)
        ));
    }

    #[test]
    fn gcd_lcm_examples() {
        let f = gf2();
        let x3p1 = poly_from_indices(&f, &[1, 0, 0, 1]);
        let xp1 = poly_from_indices(&f, &[1, 1]);
        assert_eq!(x3p1.gcd(&xp1).unwrap(), xp1);

        let f4 = gf4();
        let w = f4.gen_x();
        let w2 = f4.element_from_index(3);
        let a = Polynomial::x_minus(&w.neg()); // x + w
        let b = Polynomial::x_minus(&w2.neg()); // x + w^2
        assert_eq!(a.gcd(&b).unwrap(), Polynomial::one(&f4));
        assert_eq!(a.lcm(&b).unwrap(), poly_from_indices(&f4, &[1, 1, 1]));

        assert!(matches!(
            Polynomial::zero(&f).gcd(&Polynomial::zero(&f)),
            Err(Error::GcdBothZero)
        ));
    }

    #[test]
    fn sigma_examples() {
        let f = gf4();
        let w = f.gen_x();
        let w2 = f.element_from_index(3);
        let xpw = poly_from_indices(&f, &[2, 1]);
        let s = xpw.sigma(2).unwrap();
        assert_eq!(s.coeff(0), w2);
        assert_eq!(s.coeff(1), f.one());
        drop(w);

        let fixed = poly_from_indices(&f, &[1, 1, 1]);
        assert_eq!(fixed.sigma(2).unwrap(), fixed);
        assert!(Polynomial::zero(&f).sigma(2).unwrap().is_zero());
    }

    #[test]
    fn psi_examples() {
        let f = gf4();
        // kernel: GF(2) coefficients map to zero
        let binary = poly_from_indices(&f, &[1, 0, 1, 1]);
        assert!(binary.psi(2).unwrap().is_zero());
        // psi(w x) = x since w^2 - w = 1 in characteristic 2
        let wx = poly_from_indices(&f, &[0, 2]);
        assert_eq!(wx.psi(2).unwrap(), poly_from_indices(&f, &[0, 1]));
    }

    #[test]
    fn reciprocal_examples() {
        let f = gf4();
        let xpw = poly_from_indices(&f, &[2, 1]);
        let r = xpw.reciprocal().unwrap();
        assert_eq!(r, poly_from_indices(&f, &[1, 2])); // w x + 1
        let pal = poly_from_indices(&f, &[1, 1, 1]);
        assert_eq!(pal.reciprocal().unwrap(), pal);
        assert!(matches!(
            Polynomial::zero(&f).reciprocal(),
            Err(Error::ZeroPolyReciprocal)
        ));
    }

    #[test]
    fn mod_and_eval_examples() {
        let f = gf4();
        let x5 = poly_from_indices(&f, &[0, 0, 0, 0, 0, 1]);
        assert_eq!(
            x5.mod_xn_minus_1(3).unwrap(),
            poly_from_indices(&f, &[0, 0, 1])
        );
        assert!(matches!(x5.mod_xn_minus_1(0), Err(Error::ZeroLength)));

        let w = primitive_nth_root(&f, 3).unwrap();
        let modpoly = poly_from_indices(&f, &[1, 1, 1]);
        assert!(modpoly.eval(&w).unwrap().is_zero());

        // eval at 1 gives the coefficient sum
        let p = poly_from_indices(&f, &[2, 3, 1]);
        let sum = p.coeffs().iter().fold(f.zero(), |acc, c| &acc + c);
        assert_eq!(p.eval(&f.one()).unwrap(), sum);
    }

    #[test]
    fn degree_sentinel() {
        let f = gf4();
        assert_eq!(Polynomial::zero(&f).degree(), None);
        assert_eq!(Polynomial::one(&f).degree(), Some(0));
    }

    proptest! {
        #[test]
        fn euclid_gcd_divides_both(a_idx in proptest::collection::vec(0u128..4, 0..6),
                                   b_idx in proptest::collection::vec(0u128..4, 1..6)) {
            let f = gf4();
            let a = poly_from_indices(&f, &a_idx);
            let b = poly_from_indices(&f, &b_idx);
            prop_assume!(!b.is_zero());
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.divides(&a).unwrap());
            prop_assert!(g.divides(&b).unwrap());
            // any common divisor divides the gcd
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(a, q.mul(&b).add(&r));
        }

        #[test]
        fn sigma_is_ring_homomorphism(a_idx in proptest::collection::vec(0u128..4, 0..6),
                                      b_idx in proptest::collection::vec(0u128..4, 0..6)) {
            let f = gf4();
            let a = poly_from_indices(&f, &a_idx);
            let b = poly_from_indices(&f, &b_idx);
            prop_assert_eq!(
                a.mul(&b).sigma(2).unwrap(),
                a.sigma(2).unwrap().mul(&b.sigma(2).unwrap())
            );
        }

        #[test]
        fn psi_is_linear_with_gf2_kernel(a_idx in proptest::collection::vec(0u128..4, 0..6),
                                         b_idx in proptest::collection::vec(0u128..4, 0..6)) {
            let f = gf4();
            let a = poly_from_indices(&f, &a_idx);
            let b = poly_from_indices(&f, &b_idx);
            prop_assert_eq!(
                a.add(&b).psi(2).unwrap(),
                a.psi(2).unwrap().add(&b.psi(2).unwrap())
            );
            // kernel check: psi(f) = 0 iff every coefficient lies in GF(2)
            let in_gf2 = a.coeffs().iter().all(|c| c.index() < 2);
            prop_assert_eq!(a.psi(2).unwrap().is_zero(), in_gf2);
        }

        #[test]
        fn reciprocal_involution(a_idx in proptest::collection::vec(0u128..4, 1..7)) {
            let f = gf4();
            let a = poly_from_indices(&f, &a_idx);
            prop_assume!(!a.is_zero());
            if !a.coeff(0).is_zero() {
                let r = a.reciprocal().unwrap();
                prop_assert_eq!(r.degree(), a.degree());
                prop_assert_eq!(r.reciprocal().unwrap(), a);
            }
        }
    }
}
