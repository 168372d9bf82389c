//! Sparse multivariate polynomials over a base ring, used as coefficient
//! extensions: generic coefficients u and the line parameter t both live here.

use crate::arith::Ring;
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `nvars` extension variables with coefficients in `R`.
///
/// Terms are keyed by the exponent vector; the BTreeMap order (lex on the
/// exponent vector) is the term order used for leading-term division.
#[derive(Clone, Debug)]
pub struct ExtPoly<R: Ring> {
    nvars: usize,
    base: R, // a zero of the base ring, kept as witness
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> PartialEq for ExtPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<R: Ring> ExtPoly<R> {
    pub fn zero(nvars: usize, base_witness: &R) -> Self {
        ExtPoly { nvars, base: base_witness.zero_like(), terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        let mut p = ExtPoly::zero(nvars, &c);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable with the given index, as a polynomial.
    pub fn var(nvars: usize, idx: usize, base_witness: &R) -> Self {
        assert!(idx < nvars);
        let mut e = vec![0u32; nvars];
        e[idx] = 1;
        let mut p = ExtPoly::zero(nvars, base_witness);
        p.terms.insert(e, base_witness.one_like());
        p
    }

    pub fn from_terms(nvars: usize, base_witness: &R, it: impl IntoIterator<Item = (Vec<u32>, R)>) -> Self {
        let mut p = ExtPoly::zero(nvars, base_witness);
        for (e, c) in it {
            p.add_term(&e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn base_witness(&self) -> &R {
        &self.base
    }

    pub fn add_term(&mut self, e: &[u32], c: &R) {
        if c.is_zero() {
            return;
        }
        assert_eq!(e.len(), self.nvars);
        match self.terms.get_mut(e) {
            Some(old) => {
                let s = old.add(c);
                if s.is_zero() {
                    self.terms.remove(e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e.to_vec(), c.clone());
            }
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(-1)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &R)> {
        self.terms.iter().next_back()
    }

    /// Evaluates at an assignment covering all variables.
    pub fn eval(&self, assignment: &[R]) -> R {
        assert_eq!(assignment.len(), self.nvars);
        let mut acc = self.base.zero_like();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t = t.mul(&assignment[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = ExtPoly::zero(self.nvars, &self.base);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            let k = self.base.from_i64_like(e[idx] as i64);
            out.add_term(&e2, &c.mul(&k));
        }
        out
    }

    /// Content over the base ring: gcd of coefficients (integers only make
    /// this meaningful; for fields it is a unit).
    pub fn map_coeffs<S: Ring>(&self, witness: &S, f: impl Fn(&R) -> S) -> ExtPoly<S> {
        ExtPoly::from_terms(self.nvars, witness, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }
}

impl<R: Ring> fmt::Display for ExtPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    write!(f, "*u{}", i)?;
                } else if exp > 1 {
                    write!(f, "*u{}^{}", i, exp)?;
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> Ring for ExtPoly<R> {
    fn zero_like(&self) -> Self {
        ExtPoly::zero(self.nvars, &self.base)
    }
    fn one_like(&self) -> Self {
        ExtPoly::constant(self.nvars, self.base.one_like())
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, &c.neg());
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = ExtPoly::zero(self.nvars, &self.base);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(&e, &c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = ExtPoly::zero(self.nvars, &self.base);
        let (le, lc) = rhs.leading().expect("nonzero divisor");
        while !rem.is_zero() {
            let (re, rc) = rem.leading().unwrap();
            if re.iter().zip(le).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(le).map(|(a, b)| a - b).collect();
            let qc = rc.exact_div(lc)?;
            // rem -= (qc * u^qe) * rhs
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = qe.iter().zip(e2).map(|(a, b)| a + b).collect();
                rem.add_term(&e, &qc.mul(c2).neg());
            }
            quot.add_term(&qe, &qc);
        }
        Some(quot)
    }

    fn canonical_assoc(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.canonical_assoc() == *lc {
                    self.clone()
                } else {
                    self.neg()
                }
            }
        }
    }

    fn pivot_score(&self) -> i64 {
        // lowest-degree, fewest-terms pivots keep Bareiss growth down
        -(self.total_degree() * 1000 + self.terms.len() as i64)
    }

    fn from_i64_like(&self, v: i64) -> Self {
        ExtPoly::constant(self.nvars, self.base.from_i64_like(v))
    }
}
