//! Multigraded multivariate polynomials over an exact coefficient ring.
//!
//! Variables come in `q` blocks: block `p` (1-based in the text format) has
//! variables `x[p,0] .. x[p,n_p]`. A polynomial is multihomogeneous when all
//! its monomials have the same per-block degree vector.

use crate::arith::Ring;
use crate::extpoly::ExtPoly;
use std::cmp::Ordering;
use std::fmt;

/// The shape (q; n_1..n_q) of the variable blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    n: Vec<usize>,
}

impl BlockStructure {
    pub fn new(n: Vec<usize>) -> Self {
        assert!(!n.is_empty(), "need at least one block");
        assert!(n.iter().all(|&x| x >= 1), "block sizes must be positive");
        BlockStructure { n }
    }

    pub fn q(&self) -> usize {
        self.n.len()
    }

    pub fn block_size(&self, p: usize) -> usize {
        self.n[p]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.n
    }

    /// Number of variables in block p (n_p + 1).
    pub fn block_vars(&self, p: usize) -> usize {
        self.n[p] + 1
    }

    pub fn num_vars(&self) -> usize {
        self.n.iter().map(|&x| x + 1).sum()
    }

    /// Flat index of variable x[p, i] with p, i zero-based.
    pub fn var_index(&self, p: usize, i: usize) -> usize {
        assert!(i <= self.n[p]);
        self.n[..p].iter().map(|&x| x + 1).sum::<usize>() + i
    }

    /// Inverse of `var_index`.
    pub fn var_position(&self, idx: usize) -> (usize, usize) {
        let mut rest = idx;
        for (p, &np) in self.n.iter().enumerate() {
            if rest <= np {
                return (p, rest);
            }
            rest -= np + 1;
        }
        panic!("variable index {} out of range", idx);
    }
}

/// Element of N^q, the degree lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn zero(q: usize) -> Self {
        MultiDegree(vec![0; q])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Componentwise partial order.
    pub fn leq(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&d| d < 0)
    }

    /// The p-th standard basis vector e_p.
    pub fn unit(q: usize, p: usize) -> Self {
        let mut v = vec![0; q];
        v[p] = 1;
        MultiDegree(v)
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", d)?;
        }
        write!(f, ")")
    }
}

/// Exponent vector over all variables of a block structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(shape: &BlockStructure) -> Self {
        Monomial(vec![0; shape.num_vars()])
    }

    pub fn var(shape: &BlockStructure, p: usize, i: usize) -> Self {
        let mut m = Self::one(shape);
        m.0[shape.var_index(p, i)] = 1;
        m
    }

    pub fn multidegree(&self, shape: &BlockStructure) -> MultiDegree {
        let mut d = Vec::with_capacity(shape.q());
        let mut off = 0;
        for p in 0..shape.q() {
            let w = shape.block_vars(p);
            d.push(self.0[off..off + w].iter().map(|&e| e as i64).sum());
            off += w;
        }
        MultiDegree(d)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Canonical monomial order: blocks in index order; within each block graded,
/// then lexicographic with x[p,0] biggest. Bases, matrices and resultant
/// signs all inherit their determinism from this order.
pub fn cmp_monomials(shape: &BlockStructure, a: &Monomial, b: &Monomial) -> Ordering {
    let mut off = 0;
    for p in 0..shape.q() {
        let w = shape.block_vars(p);
        let sa = &a.0[off..off + w];
        let sb = &b.0[off..off + w];
        let da: u64 = sa.iter().map(|&e| e as u64).sum();
        let db: u64 = sb.iter().map(|&e| e as u64).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        // within a fixed block degree: bigger lex exponent vector first
        match sb.cmp(sa) {
            Ordering::Equal => {}
            o => return o,
        }
        off += w;
    }
    Ordering::Equal
}

/// All monomials of multidegree `d`, in canonical order.
/// Count equals the product of binomials C(d_p + n_p, n_p).
pub fn monomial_basis(shape: &BlockStructure, d: &MultiDegree) -> Vec<Monomial> {
    assert_eq!(d.0.len(), shape.q());
    if d.has_negative() {
        return Vec::new();
    }
    // per-block exponent lists, lex descending (canonical order within a slice)
    let mut per_block: Vec<Vec<Vec<u32>>> = Vec::with_capacity(shape.q());
    for p in 0..shape.q() {
        per_block.push(compositions_desc(d.0[p] as u32, shape.block_vars(p)));
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; shape.q()];
    loop {
        let mut exps = Vec::with_capacity(shape.num_vars());
        for p in 0..shape.q() {
            exps.extend_from_slice(&per_block[p][idx[p]]);
        }
        out.push(Monomial(exps));
        // odometer over blocks, last block fastest
        let mut p = shape.q();
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < per_block[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Compositions of `total` into `parts` parts, lexicographically descending.
fn compositions_desc(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=total).rev() {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Sparse multihomogeneous-capable polynomial; terms sorted canonically,
/// no zero coefficients stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<R: Ring> {
    shape: BlockStructure,
    terms: Vec<(Monomial, R)>,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum MPolyError {
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not multihomogeneous: {0} vs {1}")]
    NotHomogeneous(MultiDegree, MultiDegree),
    #[error("zero multidegree rejected")]
    ZeroMultiDegree,
    #[error("assignment does not cover extension variable {0}")]
    MissingVariable(usize),
}

impl<R: Ring> MPoly<R> {
    pub fn zero(shape: &BlockStructure) -> Self {
        MPoly { shape: shape.clone(), terms: Vec::new() }
    }

    pub fn from_terms(shape: &BlockStructure, terms: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut p = MPoly::zero(shape);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn monomial(shape: &BlockStructure, m: Monomial, c: R) -> Self {
        Self::from_terms(shape, [(m, c)])
    }

    pub fn shape(&self) -> &BlockStructure {
        &self.shape
    }

    pub fn terms(&self) -> &[(Monomial, R)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some coefficient, usable as a ring witness.
    pub fn coeff_witness(&self) -> Option<&R> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&R> {
        self.terms
            .binary_search_by(|(t, _)| cmp_monomials(&self.shape, t, m))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn add_term(&mut self, m: &Monomial, c: &R) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.0.len(), self.shape.num_vars());
        match self.terms.binary_search_by(|(t, _)| cmp_monomials(&self.shape, t, m)) {
            Ok(i) => {
                let s = self.terms[i].1.add(c);
                if s.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = s;
                }
            }
            Err(i) => self.terms.insert(i, (m.clone(), c.clone())),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for (_, c) in out.terms.iter_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MPoly::zero(&self.shape);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(&m1.mul(m2), &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = MPoly::zero(&self.shape);
        for (m, c0) in &self.terms {
            out.add_term(m, &c0.mul(c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MPoly::from_terms(&self.shape, self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())))
    }

    /// The common multidegree of all terms, or an error.
    pub fn multidegree(&self) -> Result<MultiDegree, MPolyError> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(MPolyError::ZeroPolynomial)?;
        let d = first.0.multidegree(&self.shape);
        for (m, _) in it {
            let d2 = m.multidegree(&self.shape);
            if d2 != d {
                return Err(MPolyError::NotHomogeneous(d, d2));
            }
        }
        Ok(d)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        MPoly::from_terms(&self.shape, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl<R: Ring> MPoly<ExtPoly<R>> {
    /// Substitutes the extension variables and drops to the base ring.
    pub fn specialize(&self, assignment: &[R]) -> Result<MPoly<R>, MPolyError> {
        for (_, c) in &self.terms {
            if c.nvars() > assignment.len() {
                return Err(MPolyError::MissingVariable(assignment.len()));
            }
        }
        Ok(MPoly::from_terms(
            &self.shape,
            self.terms.iter().map(|(m, c)| (m.clone(), c.eval(&assignment[..c.nvars()]))),
        ))
    }
}

/// Bookkeeping for the generic coefficients u^(i)_m of a degree list.
#[derive(Clone, Debug)]
pub struct UVarTable {
    /// offsets[i] is the flat index of u^(i)_0; variables within a tag are
    /// indexed by the canonical rank of their monomial.
    pub offsets: Vec<usize>,
    pub counts: Vec<usize>,
    pub total: usize,
}

impl UVarTable {
    pub fn new(shape: &BlockStructure, degrees: &[MultiDegree]) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut counts = Vec::with_capacity(degrees.len());
        let mut total = 0usize;
        for d in degrees {
            offsets.push(total);
            let c = monomial_basis(shape, d).len();
            counts.push(c);
            total += c;
        }
        UVarTable { offsets, counts, total }
    }

    pub fn var(&self, tag: usize, rank: usize) -> usize {
        assert!(rank < self.counts[tag]);
        self.offsets[tag] + rank
    }
}

/// The generic polynomial U_i of multidegree d: sum over the monomial basis
/// of fresh symbolic coefficients times monomials.
pub fn generic_polynomial<R: Ring>(
    shape: &BlockStructure,
    d: &MultiDegree,
    tag: usize,
    table: &UVarTable,
    base_witness: &R,
) -> Result<MPoly<ExtPoly<R>>, MPolyError> {
    if d.is_zero() {
        return Err(MPolyError::ZeroMultiDegree);
    }
    let basis = monomial_basis(shape, d);
    assert_eq!(basis.len(), table.counts[tag]);
    Ok(MPoly::from_terms(
        shape,
        basis.into_iter().enumerate().map(|(rank, m)| {
            (m, ExtPoly::var(table.total, table.var(tag, rank), base_witness))
        }),
    ))
}

/// Builds the full generic sequence (U_0..U_r) for a degree list.
pub fn generic_sequence<R: Ring>(
    shape: &BlockStructure,
    degrees: &[MultiDegree],
    base_witness: &R,
) -> Result<(Vec<MPoly<ExtPoly<R>>>, UVarTable), MPolyError> {
    let table = UVarTable::new(shape, degrees);
    let mut polys = Vec::with_capacity(degrees.len());
    for (i, d) in degrees.iter().enumerate() {
        polys.push(generic_polynomial(shape, d, i, &table, base_witness)?);
    }
    Ok((polys, table))
}

impl<R: Ring> fmt::Display for MPoly<R> {
    /// `coeff*x[p,i]^e*...` terms joined by ` + `; p is 1-based, i 0-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (p, i) = self.shape.var_position(idx);
                write!(f, "*x[{},{}]", p + 1, i)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the text format produced by `Display`: terms joined by `+`, each a
/// `*`-separated product of an optional coefficient and `x[p,i]^e` factors.
pub fn parse_mpoly<R: Ring>(
    shape: &BlockStructure,
    witness: &R,
    parse_coeff: impl Fn(&str) -> Option<R>,
    s: &str,
) -> Result<MPoly<R>, String> {
    let mut poly = MPoly::zero(shape);
    let s = s.trim();
    if s == "0" {
        return Ok(poly);
    }
    for term in s.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err("empty term".into());
        }
        let mut coeff = witness.one_like();
        let mut mono = Monomial::one(shape);
        for factor in term.split('*') {
            let factor = factor.trim();
            if let Some(rest) = factor.strip_prefix("x[") {
                let (inside, expo) = match rest.split_once(']') {
                    Some((a, b)) => (a, b.trim()),
                    None => return Err(format!("malformed variable in `{}`", factor)),
                };
                let (ps, is_) = inside
                    .split_once(',')
                    .ok_or_else(|| format!("malformed variable `{}`", factor))?;
                let p: usize = ps.trim().parse().map_err(|_| format!("bad block `{}`", ps))?;
                let i: usize = is_.trim().parse().map_err(|_| format!("bad index `{}`", is_))?;
                if p == 0 || p > shape.q() {
                    return Err(format!("block {} out of range", p));
                }
                if i > shape.block_size(p - 1) {
                    return Err(format!("variable x[{},{}] out of range", p, i));
                }
                let e: u32 = if expo.is_empty() {
                    1
                } else {
                    expo.strip_prefix('^')
                        .ok_or_else(|| format!("expected `^` in `{}`", factor))?
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad exponent in `{}`", factor))?
                };
                mono.0[shape.var_index(p - 1, i)] += e;
            } else {
                let c = parse_coeff(factor).ok_or_else(|| format!("bad coefficient `{}`", factor))?;
                coeff = coeff.mul(&c);
            }
        }
        poly.add_term(&mono, &coeff);
    }
    Ok(poly)
}
