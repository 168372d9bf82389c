//! Multidegree slices of the multigraded Koszul complex of a polynomial
//! sequence on a componentwise free module, homology ranks, and
//! filter-regularity probes on finite windows.

use crate::arith::Ring;
use crate::exactla::{rank, ExactMatrix};
use crate::modslice::{slice_basis, ModuleSpec};
use crate::mpoly::{MPoly, Monomial, MultiDegree};
use std::collections::HashMap;

/// Sequence f_0..f_r of multihomogeneous polynomials with nonzero multidegrees.
#[derive(Clone, Debug)]
pub struct PolySequence<R: Ring> {
    polys: Vec<MPoly<R>>,
    degrees: Vec<MultiDegree>,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum SequenceError {
    #[error("polynomial {0} is zero or not multihomogeneous")]
    BadPolynomial(usize),
    #[error("polynomial {0} has zero multidegree")]
    ZeroDegree(usize),
    #[error("empty sequence")]
    Empty,
}

impl<R: Ring> PolySequence<R> {
    pub fn new(polys: Vec<MPoly<R>>) -> Result<Self, SequenceError> {
        if polys.is_empty() {
            return Err(SequenceError::Empty);
        }
        let mut degrees = Vec::with_capacity(polys.len());
        for (i, f) in polys.iter().enumerate() {
            let d = f.multidegree().map_err(|_| SequenceError::BadPolynomial(i))?;
            if d.is_zero() {
                return Err(SequenceError::ZeroDegree(i));
            }
            degrees.push(d);
        }
        Ok(PolySequence { polys, degrees })
    }

    pub fn polys(&self) -> &[MPoly<R>] {
        &self.polys
    }

    pub fn degrees(&self) -> &[MultiDegree] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// A coefficient usable as a ring witness (sequences are nonzero).
    pub fn witness(&self) -> &R {
        self.polys[0].coeff_witness().expect("nonzero polynomial")
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Result<PolySequence<S>, SequenceError> {
        PolySequence::new(self.polys.iter().map(|p| p.map_coeffs(&f)).collect())
    }
}

/// Basis label of K_p^nu: a p-subset S of {0..r} and a standard monomial of
/// multidegree nu - sum_{i in S} d_i.
pub type BasisLabel = (Vec<usize>, Monomial);

/// The based finite complex K_•^nu(f, M): differential matrices D_1..D_{r+1}
/// with D_p mapping K_p^nu to K_{p-1}^nu.
#[derive(Clone, Debug)]
pub struct KoszulSlice<R: Ring> {
    pub nu: MultiDegree,
    /// bases[p] labels the basis of K_p^nu, p = 0..=r+1.
    pub bases: Vec<Vec<BasisLabel>>,
    /// diffs[p-1] is the matrix of D_p, p = 1..=r+1.
    pub diffs: Vec<ExactMatrix<R>>,
}

impl<R: Ring> KoszulSlice<R> {
    pub fn levels(&self) -> usize {
        self.bases.len()
    }

    pub fn dim(&self, p: usize) -> usize {
        self.bases.get(p).map(|b| b.len()).unwrap_or(0)
    }

    pub fn diff(&self, p: usize) -> &ExactMatrix<R> {
        &self.diffs[p - 1]
    }

    /// D_p o D_{p+1} = 0 for every consecutive pair.
    pub fn check_complex(&self) -> bool {
        for p in 1..self.diffs.len() {
            if !self.diffs[p - 1].matmul(&self.diffs[p]).is_zero() {
                return false;
            }
        }
        true
    }

    /// Plain row-major text dump of every differential, for debugging.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, d) in self.diffs.iter().enumerate() {
            s.push_str(&format!("D_{} ({}x{})\n", i + 1, d.nrows(), d.ncols()));
            s.push_str(&d.dump());
        }
        s
    }
}

/// All p-subsets of {0..r} in lexicographic order as sorted tuples.
fn subsets_lex(r_plus_1: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n.saturating_sub(k) {
            cur.push(i);
            rec(i + 1, n, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, r_plus_1, p, &mut Vec::new(), &mut out);
    out
}

fn level_basis<R: Ring>(
    module: &ModuleSpec,
    seq: &PolySequence<R>,
    nu: &MultiDegree,
    p: usize,
) -> Vec<BasisLabel> {
    let mut basis = Vec::new();
    for s in subsets_lex(seq.len(), p) {
        let mut mu = nu.clone();
        for &i in &s {
            mu = mu.sub(&seq.degrees()[i]);
        }
        if mu.has_negative() {
            continue;
        }
        for m in slice_basis(module, &mu) {
            basis.push((s.clone(), m));
        }
    }
    basis
}

/// Builds the slice of the Koszul complex at multidegree nu. The column for
/// (S, m) carries sum_{s} (-1)^{s+1} f_{i_s} * m over the deleted indices,
/// expanded in the standard-monomial basis one level down.
pub fn build_slice<R: Ring>(
    module: &ModuleSpec,
    seq: &PolySequence<R>,
    nu: &MultiDegree,
) -> KoszulSlice<R> {
    let witness = seq.witness();
    let levels = seq.len(); // top level p = r+1 for f_0..f_r
    let mut bases: Vec<Vec<BasisLabel>> = Vec::with_capacity(levels + 1);
    for p in 0..=levels {
        bases.push(level_basis(module, seq, nu, p));
    }
    // row lookup per level
    let index: Vec<HashMap<(Vec<usize>, Vec<u32>), usize>> = bases
        .iter()
        .map(|b| {
            b.iter()
                .enumerate()
                .map(|(i, (s, m))| ((s.clone(), m.0.clone()), i))
                .collect()
        })
        .collect();

    let mut diffs = Vec::with_capacity(levels);
    for p in 1..=levels {
        let rows = bases[p - 1].len();
        let cols = bases[p].len();
        let mut d = ExactMatrix::zeros(rows, cols, witness);
        for (col, (s, m)) in bases[p].iter().enumerate() {
            for (pos, &i) in s.iter().enumerate() {
                // delete index i_s; Koszul sign (-1)^{s+1} with s 1-based
                let mut s_del = s.clone();
                s_del.remove(pos);
                let negate = pos % 2 == 1;
                let prod = seq.polys()[i].mul_monomial(m);
                for (t, c) in prod.terms() {
                    if !module.is_standard(t) {
                        continue; // multiplication in A[x]/I kills these
                    }
                    let row = *index[p - 1]
                        .get(&(s_del.clone(), t.0.clone()))
                        .expect("product monomial must appear in the lower slice basis");
                    let c = if negate { c.neg() } else { c.clone() };
                    let v = d.at(row, col).add(&c);
                    *d.at_mut(row, col) = v;
                }
            }
        }
        diffs.push(d);
    }
    KoszulSlice { nu: nu.clone(), bases, diffs }
}

/// h_p = dim K_p - rank D_p - rank D_{p+1}, ranks taken over the fraction
/// field of the coefficient domain.
pub fn homology_ranks<R: Ring>(slice: &KoszulSlice<R>) -> Vec<usize> {
    let levels = slice.bases.len();
    let ranks: Vec<usize> = slice.diffs.iter().map(rank).collect();
    (0..levels)
        .map(|p| {
            let r_in = if p + 1 <= slice.diffs.len() { ranks[p] } else { 0 };
            let r_out = if p >= 1 { ranks[p - 1] } else { 0 };
            slice.dim(p) - r_in - r_out
        })
        .collect()
}

/// Exactness over the fraction field: all homology ranks vanish, including h_0.
pub fn is_generically_exact<R: Ring>(slice: &KoszulSlice<R>) -> bool {
    homology_ranks(slice).iter().all(|&h| h == 0)
}

/// Instance-scoped certificate: injectivity of multiplication checked on a
/// finite window of multidegrees, not a proof for all large degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterRegularCertificate {
    pub holds_on_window: bool,
    pub window: Vec<MultiDegree>,
}

/// The default probe window: regularity offset + [0..2]^q.
pub fn default_window(module: &ModuleSpec) -> Vec<MultiDegree> {
    let q = module.shape().q();
    let off = module.regularity_offset();
    let mut pts = vec![Vec::new()];
    for p in 0..q {
        let mut next = Vec::new();
        for pt in &pts {
            for j in 0..=2i64 {
                let mut v = pt.clone();
                v.push(off.0[p] + j);
                next.push(v);
            }
        }
        pts = next;
    }
    pts.into_iter().map(MultiDegree).collect()
}

/// Matrix of multiplication by f from the slice at `from` to the slice at
/// `from + deg(f)`, in standard-monomial bases.
pub fn multiplication_matrix<R: Ring>(
    module: &ModuleSpec,
    f: &MPoly<R>,
    from: &MultiDegree,
) -> ExactMatrix<R> {
    let d = f.multidegree().expect("multihomogeneous multiplier");
    let to = from.add(&d);
    let src = slice_basis(module, from);
    let dst = slice_basis(module, &to);
    let witness = f.coeff_witness().expect("nonzero multiplier");
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    for (i, m) in dst.iter().enumerate() {
        index.insert(m.0.clone(), i);
    }
    let mut mat = ExactMatrix::zeros(dst.len(), src.len(), witness);
    for (col, m) in src.iter().enumerate() {
        let prod = f.mul_monomial(m);
        for (t, c) in prod.terms() {
            if !module.is_standard(t) {
                continue;
            }
            let row = index[&t.0];
            let v = mat.at(row, col).add(c);
            *mat.at_mut(row, col) = v;
        }
    }
    mat
}

/// Checks injectivity of multiplication by `f` on the quotient context
/// M/(prev) at every window multidegree, by rank arithmetic on the assembled
/// multiplication maps.
pub fn is_filter_regular<R: Ring>(
    f: &MPoly<R>,
    module: &ModuleSpec,
    prev: &[MPoly<R>],
    window: &[MultiDegree],
) -> FilterRegularCertificate {
    let d = f.multidegree().expect("multihomogeneous element");
    let mut holds = true;
    for nu in window {
        if !mult_injective_on_quotient(f, module, prev, nu, &d) {
            holds = false;
            break;
        }
    }
    FilterRegularCertificate { holds_on_window: holds, window: window.to_vec() }
}

fn mult_injective_on_quotient<R: Ring>(
    f: &MPoly<R>,
    module: &ModuleSpec,
    prev: &[MPoly<R>],
    nu: &MultiDegree,
    d: &MultiDegree,
) -> bool {
    let target = nu.add(d);
    let dim_src = slice_basis(module, nu).len();
    let fmat = multiplication_matrix(module, f, nu);
    if prev.is_empty() {
        return rank(&fmat) == dim_src;
    }
    // image of prev at nu and at nu+d
    let prev_at = |level: &MultiDegree| -> Vec<ExactMatrix<R>> {
        prev.iter()
            .map(|g| {
                let dg = g.multidegree().expect("multihomogeneous");
                multiplication_matrix(module, g, &level.sub(&dg))
            })
            .collect()
    };
    let stack = |mats: &[ExactMatrix<R>], extra: Option<&ExactMatrix<R>>, level_dim: usize, witness: &R| {
        let total: usize =
            mats.iter().map(|m| m.ncols()).sum::<usize>() + extra.map(|m| m.ncols()).unwrap_or(0);
        let mut out = ExactMatrix::zeros(level_dim, total, witness);
        let mut off = 0;
        for m in mats.iter().chain(extra) {
            for r in 0..m.nrows() {
                for c in 0..m.ncols() {
                    *out.at_mut(r, off + c) = m.at(r, c).clone();
                }
            }
            off += m.ncols();
        }
        out
    };
    let witness = f.coeff_witness().expect("nonzero multiplier");
    let dim_target = slice_basis(module, &target).len();
    let p_nu = stack(&prev_at(nu), None, dim_src, witness);
    let p_target = stack(&prev_at(&target), None, dim_target, witness);
    let p_target_with_f = stack(&prev_at(&target), Some(&fmat), dim_target, witness);
    // map (M/prev)_nu -> (M/prev)_{nu+d}: injective iff
    // rank [P | F] - rank P == dim M_nu - rank P_nu
    let quotient_dim = dim_src - rank(&p_nu);
    rank(&p_target_with_f) - rank(&p_target) == quotient_dim
}
