//! Componentwise free modules M = A[x] or A[x]/I with I a monomial ideal:
//! standard-monomial slice bases, Hilbert functions, Hilbert polynomials,
//! relevant dimension and relevant degree.

use crate::arith::Ring;
use crate::extpoly::ExtPoly;
use crate::mpoly::{monomial_basis, BlockStructure, Monomial, MultiDegree};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Finite minimal generating set of monomials; no generator divides another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(mut gens: Vec<Monomial>) -> Self {
        // minimalize
        gens.sort_by_key(|m| m.0.iter().map(|&e| e as u64).sum::<u64>());
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { gens: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

/// The module A[x]/I (free polynomial ring when `ideal` is absent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    shape: BlockStructure,
    ideal: Option<MonomialIdeal>,
}

impl ModuleSpec {
    pub fn free(shape: BlockStructure) -> Self {
        ModuleSpec { shape, ideal: None }
    }

    pub fn quotient(shape: BlockStructure, ideal: MonomialIdeal) -> Self {
        ModuleSpec { shape, ideal: Some(ideal) }
    }

    pub fn shape(&self) -> &BlockStructure {
        &self.shape
    }

    pub fn ideal(&self) -> Option<&MonomialIdeal> {
        self.ideal.as_ref()
    }

    pub fn is_free(&self) -> bool {
        self.ideal.is_none()
    }

    /// True iff the residue class of `m` is a standard monomial.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        match &self.ideal {
            None => true,
            Some(i) => !i.contains_monomial(m),
        }
    }

    /// Degree offset past which the Hilbert function is probed for agreement
    /// with a polynomial: componentwise max generator degree, plus one.
    pub fn regularity_offset(&self) -> MultiDegree {
        let q = self.shape.q();
        match &self.ideal {
            None => MultiDegree::zero(q),
            Some(ideal) => {
                let mut off = vec![0i64; q];
                for g in ideal.generators() {
                    let d = g.multidegree(&self.shape);
                    for p in 0..q {
                        off[p] = off[p].max(d.0[p]);
                    }
                }
                MultiDegree(off.into_iter().map(|x| x + 1).collect())
            }
        }
    }
}

/// Standard monomials of multidegree nu, canonical order.
pub fn slice_basis(module: &ModuleSpec, nu: &MultiDegree) -> Vec<Monomial> {
    monomial_basis(module.shape(), nu)
        .into_iter()
        .filter(|m| module.is_standard(m))
        .collect()
}

pub fn hilbert_function(module: &ModuleSpec, nu: &MultiDegree) -> usize {
    slice_basis(module, nu).len()
}

/// Polynomial in q variables with rational coefficients, together with the
/// offset past which it was verified against the Hilbert function.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertPolynomial {
    pub poly: ExtPoly<BigRational>,
    pub verified_offset: MultiDegree,
}

impl HilbertPolynomial {
    pub fn eval(&self, d: &MultiDegree) -> BigRational {
        let args: Vec<BigRational> =
            d.0.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        self.poly.eval(&args)
    }

    /// Total degree; -1 when identically zero.
    pub fn total_degree(&self) -> i64 {
        self.poly.total_degree()
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum HilbertError {
    #[error("interpolated polynomial failed verification after {0} retries")]
    VerificationFailed(usize),
    #[error("relevant degree undefined: rdim = {0} > 0")]
    RdegUndefined(i64),
}

/// Exact multivariate interpolation of the Hilbert function on the grid
/// offset + [0..n_p]^q, verified on the shifted grid offset + 1 + [0..n_p]^q.
/// The offset doubles on verification failure, up to 4 retries.
pub fn hilbert_polynomial(module: &ModuleSpec) -> Result<HilbertPolynomial, HilbertError> {
    let shape = module.shape();
    let q = shape.q();
    let mut offset = module.regularity_offset();
    for retry in 0..=4 {
        let poly = interpolate_on_grid(module, &offset);
        let hp = HilbertPolynomial { poly, verified_offset: offset.clone() };
        let shifted = MultiDegree(offset.0.iter().map(|&x| x + 1).collect());
        if verify_on_grid(module, &hp, &shifted) {
            return Ok(hp);
        }
        if retry == 4 {
            break;
        }
        offset = MultiDegree(offset.0.iter().map(|&x| (2 * x).max(1)).collect());
        let _ = q;
    }
    Err(HilbertError::VerificationFailed(4))
}

fn grid_points(shape: &BlockStructure, offset: &MultiDegree) -> Vec<MultiDegree> {
    let q = shape.q();
    let mut pts = vec![MultiDegree(vec![0; q])];
    for p in 0..q {
        let mut next = Vec::new();
        for pt in &pts {
            for j in 0..=(shape.block_size(p) as i64) {
                let mut v = pt.0.clone();
                v[p] = offset.0[p] + j;
                next.push(MultiDegree(v));
            }
        }
        pts = next;
    }
    pts
}

fn interpolate_on_grid(module: &ModuleSpec, offset: &MultiDegree) -> ExtPoly<BigRational> {
    let shape = module.shape();
    let q = shape.q();
    let rzero = BigRational::zero();
    // univariate Lagrange bases per block over nodes offset_p .. offset_p + n_p
    let mut bases: Vec<Vec<ExtPoly<BigRational>>> = Vec::with_capacity(q);
    for p in 0..q {
        let nodes: Vec<i64> = (0..=(shape.block_size(p) as i64)).map(|j| offset.0[p] + j).collect();
        let mut block = Vec::with_capacity(nodes.len());
        for (j, &xj) in nodes.iter().enumerate() {
            let mut num = ExtPoly::constant(q, BigRational::one());
            let mut den = BigRational::one();
            for (k, &xk) in nodes.iter().enumerate() {
                if k == j {
                    continue;
                }
                let lin = ExtPoly::var(q, p, &rzero)
                    .sub(&ExtPoly::constant(q, BigRational::from_integer(BigInt::from(xk))));
                num = num.mul(&lin);
                den = &den * BigRational::from_integer(BigInt::from(xj - xk));
            }
            block.push(num.mul(&ExtPoly::constant(q, BigRational::one() / den)));
        }
        bases.push(block);
    }
    // tensor sum over grid points
    let mut acc = ExtPoly::zero(q, &rzero);
    let dims: Vec<usize> = (0..q).map(|p| shape.block_size(p) + 1).collect();
    let mut idx = vec![0usize; q];
    loop {
        let pt = MultiDegree(
            (0..q).map(|p| offset.0[p] + idx[p] as i64).collect(),
        );
        let h = hilbert_function(module, &pt);
        if h > 0 {
            let mut term = ExtPoly::constant(q, BigRational::from_integer(BigInt::from(h as i64)));
            for p in 0..q {
                term = term.mul(&bases[p][idx[p]]);
            }
            acc = acc.add(&term);
        }
        let mut p = q;
        loop {
            if p == 0 {
                return acc;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < dims[p] {
                break;
            }
            idx[p] = 0;
        }
    }
}

fn verify_on_grid(module: &ModuleSpec, hp: &HilbertPolynomial, offset: &MultiDegree) -> bool {
    for pt in grid_points(module.shape(), offset) {
        let expected = BigRational::from_integer(BigInt::from(hilbert_function(module, &pt) as i64));
        if hp.eval(&pt) != expected {
            return false;
        }
    }
    true
}

/// Relevant dimension: total degree of the Hilbert polynomial, -1 if zero.
pub fn rdim(module: &ModuleSpec) -> Result<i64, HilbertError> {
    Ok(hilbert_polynomial(module)?.total_degree())
}

/// Relevant degree: the constant value of the Hilbert polynomial, defined
/// when rdim <= 0.
pub fn rdeg(module: &ModuleSpec) -> Result<u64, HilbertError> {
    let hp = hilbert_polynomial(module)?;
    let deg = hp.total_degree();
    if deg > 0 {
        return Err(HilbertError::RdegUndefined(deg));
    }
    if deg < 0 {
        return Ok(0);
    }
    let c = hp.eval(&MultiDegree::zero(module.shape().q()));
    assert!(num_traits::One::is_one(c.denom()), "constant Hilbert polynomial must be an integer");
    let (_, digits) = c.numer().to_u64_digits();
    Ok(digits.first().copied().unwrap_or(0))
}
