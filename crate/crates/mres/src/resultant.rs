//! Cayley determinants of based generically exact slices, slice-degree
//! selection with stabilization certificates, and the M-resultant.

use crate::arith::Ring;
use crate::exactla::{bareiss_det, cokernel_content, select_pivot_rows, Content};
use crate::extpoly::ExtPoly;
use crate::koszul::{build_slice, homology_ranks, KoszulSlice, PolySequence};
use crate::modslice::{rdim, slice_basis, HilbertError, ModuleSpec};
use crate::mpoly::{generic_sequence, MPoly, MultiDegree, UVarTable};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// The greedy pivot chain: for each level p = 1..=s, the column subset b″_p
/// of K_p and the row subset b′_{p−1} of K_{p−1} that carve out the square
/// invertible block φ_p.
#[derive(Clone, Debug)]
pub struct PartitionCertificate {
    pub nu: MultiDegree,
    /// levels[p-1] = (rows of φ_p in K_{p-1}, cols of φ_p in K_p)
    pub levels: Vec<(Vec<usize>, Vec<usize>)>,
}

/// The value of the resultant together with how it was obtained.
#[derive(Clone, Debug)]
pub struct ResultantValue<R: Ring> {
    /// Defined up to a unit of the base domain.
    pub value: R,
    pub nu: MultiDegree,
    /// true once the value agreed (up to units) at nu + e_p for every p.
    pub stabilized: bool,
    pub certificate: PartitionCertificate,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MResult<R: Ring> {
    Nonzero(ResultantValue<R>),
    /// The sequence admits a common zero on the underlying variety: the
    /// bottom pivot block cannot be completed while all higher ones can.
    Zero,
}

impl<R: Ring> PartialEq for ResultantValue<R> {
    fn eq(&self, other: &Self) -> bool {
        self.value.canonical_assoc() == other.value.canonical_assoc()
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum ResultantError {
    #[error("sequence length {got} does not match rdim + 1 = {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("value did not stabilize after escalating the slice degree")]
    StabilizationFailure,
    #[error("higher Koszul homology nonzero at the working degree: ranks {0:?}")]
    HigherHomologyNonzero(Vec<usize>),
    #[error("slice is not generically exact; no full pivot chain")]
    NotGenericallyExact,
    #[error("slice dimension {0} exceeds the symbolic limit {1}")]
    SliceTooLarge(usize, usize),
    #[error("regularity data unavailable: {0}")]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Sequence(#[from] crate::koszul::SequenceError),
}

/// Outcome of the greedy top-down partition search.
pub(crate) enum PartitionOutcome<R: Ring> {
    Complete {
        certificate: PartitionCertificate,
        /// det(φ_p) for p = 1..=s
        dets: Vec<R>,
    },
    /// φ₁ is square but singular while every higher block completed; the
    /// structural partition is still returned.
    BottomSingular { certificate: PartitionCertificate },
    /// Pivot failure at some φ_p with p ≥ 2, or a block-shape mismatch.
    HigherFailure,
}

/// Greedy maximal-pivot partition from the top of the complex downward.
/// At each level the columns b″_p are fixed by the previous step (all of
/// K_s at the top) and rows of full column rank are chosen in D_p.
pub(crate) fn try_partition<R: Ring>(slice: &KoszulSlice<R>) -> PartitionOutcome<R> {
    let s = slice.diffs.len();
    let mut levels: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![], vec![]); s];
    let mut dets: Vec<Option<R>> = vec![None; s];
    // b″_s = whole basis of K_s (b′_s = ∅)
    let mut cols: Vec<usize> = (0..slice.dim(s)).collect();
    for p in (1..=s).rev() {
        let d = slice.diff(p);
        let all_rows: Vec<usize> = (0..d.nrows()).collect();
        let sub = d.submatrix(&all_rows, &cols);
        if p == 1 {
            // b″₀ = ∅ forces b′₀ = all of K₀: the block must be square
            if sub.nrows() != sub.ncols() {
                return PartitionOutcome::HigherFailure;
            }
            let det = bareiss_det(&sub);
            let singular = det.is_zero();
            levels[0] = (all_rows.clone(), cols.clone());
            dets[0] = Some(det);
            if singular {
                return PartitionOutcome::BottomSingular {
                    certificate: PartitionCertificate { nu: slice.nu.clone(), levels },
                };
            }
            break;
        }
        let rows = match select_pivot_rows(&sub) {
            Some(r) => r,
            None => return PartitionOutcome::HigherFailure,
        };
        let phi = d.submatrix(&rows, &cols);
        dets[p - 1] = Some(bareiss_det(&phi));
        levels[p - 1] = (rows.clone(), cols.clone());
        // b″_{p-1} = complement of b′_{p-1} in the basis of K_{p-1}
        let chosen: std::collections::HashSet<usize> = rows.into_iter().collect();
        cols = (0..d.nrows()).filter(|r| !chosen.contains(r)).collect();
    }
    PartitionOutcome::Complete {
        certificate: PartitionCertificate { nu: slice.nu.clone(), levels },
        dets: dets.into_iter().map(|d| d.expect("all levels filled")).collect(),
    }
}

/// The Cayley determinant Π det(φ_p)^{(−1)^{p+1}} of a based slice, up to a
/// unit. The quotient of the odd-level product by the even-level product is
/// exact in the base domain; a division failure aborts.
pub fn cayley_det<R: Ring>(slice: &KoszulSlice<R>) -> Result<R, ResultantError> {
    match try_partition(slice) {
        PartitionOutcome::Complete { dets, .. } => Ok(cayley_value(&dets)),
        _ => Err(ResultantError::NotGenericallyExact),
    }
}

fn cayley_value<R: Ring>(dets: &[R]) -> R {
    let one = dets[0].one_like();
    let mut num = one.clone();
    let mut den = one;
    for (i, d) in dets.iter().enumerate() {
        if i % 2 == 0 {
            num = num.mul(d);
        } else {
            den = den.mul(d);
        }
    }
    num.exact_div(&den)
        .expect("Cayley quotient must be exact in the base domain")
}

/// Re-evaluates the pivot blocks of a previously found partition on another
/// slice with the same basis layout; returns det(φ_p) for p = 1..=s.
pub fn certificate_dets<R: Ring>(
    slice: &KoszulSlice<R>,
    cert: &PartitionCertificate,
) -> Vec<R> {
    cert.levels
        .iter()
        .enumerate()
        .map(|(i, (rows, cols))| bareiss_det(&slice.diff(i + 1).submatrix(rows, cols)))
        .collect()
}

/// The working slice degree for a degree list on M: classical critical
/// degree max(Σd − n, max d) for the free ring on one block, otherwise the
/// componentwise degree sum plus the regularity offset of M.
pub fn choose_nu(module: &ModuleSpec, degrees: &[MultiDegree]) -> MultiDegree {
    let shape = module.shape();
    let q = shape.q();
    if q == 1 && module.is_free() {
        let n = shape.block_size(0) as i64;
        let sum: i64 = degrees.iter().map(|d| d.0[0]).sum();
        let max = degrees.iter().map(|d| d.0[0]).max().unwrap_or(1);
        return MultiDegree(vec![(sum - n).max(max)]);
    }
    let mut nu = module.regularity_offset();
    for d in degrees {
        nu = nu.add(d);
    }
    nu
}

enum SliceValue<R: Ring> {
    Value(R, PartitionCertificate),
    Bottom,
    Higher(Vec<usize>),
}

fn slice_value<R: Ring>(
    module: &ModuleSpec,
    seq: &PolySequence<R>,
    nu: &MultiDegree,
) -> SliceValue<R> {
    let slice = build_slice(module, seq, nu);
    match try_partition(&slice) {
        PartitionOutcome::Complete { certificate, dets } => {
            SliceValue::Value(cayley_value(&dets), certificate)
        }
        PartitionOutcome::BottomSingular { .. } => SliceValue::Bottom,
        PartitionOutcome::HigherFailure => SliceValue::Higher(homology_ranks(&slice)),
    }
}

/// The M-resultant of a sequence of rdim(M) + 1 multihomogeneous
/// polynomials: the Cayley determinant at a verified-stable slice degree.
pub fn mresultant<R: Ring>(
    module: &ModuleSpec,
    seq: &PolySequence<R>,
) -> Result<MResult<R>, ResultantError> {
    let expected = rdim(module)? + 1;
    if seq.len() as i64 != expected {
        return Err(ResultantError::LengthMismatch {
            expected: expected.max(0) as usize,
            got: seq.len(),
        });
    }
    let q = module.shape().q();
    let mut nu = choose_nu(module, seq.degrees());
    for _round in 0..=4 {
        let base = match slice_value(module, seq, &nu) {
            SliceValue::Value(v, c) => (v, c),
            SliceValue::Bottom => return Ok(MResult::Zero),
            SliceValue::Higher(ranks) => {
                return Err(ResultantError::HigherHomologyNonzero(ranks))
            }
        };
        let mut stable = true;
        for p in 0..q {
            let shifted = nu.add(&MultiDegree::unit(q, p));
            match slice_value(module, seq, &shifted) {
                SliceValue::Value(v, _) if v.canonical_assoc() == base.0.canonical_assoc() => {}
                _ => {
                    stable = false;
                    break;
                }
            }
        }
        if stable {
            return Ok(MResult::Nonzero(ResultantValue {
                value: base.0,
                nu,
                stabilized: true,
                certificate: base.1,
            }));
        }
        nu = MultiDegree(nu.0.iter().map(|v| v * 2).collect());
    }
    Err(ResultantError::StabilizationFailure)
}

/// Independent check of |Res| over ℤ: the cokernel content of D₁ at nu,
/// computed by Smith reduction instead of pivot chains.
pub fn content_oracle(
    module: &ModuleSpec,
    seq: &PolySequence<BigInt>,
    nu: &MultiDegree,
) -> Content {
    let slice = build_slice(module, seq, nu);
    let ambient = slice.dim(0);
    cokernel_content(slice.diff(1), ambient)
}

/// True when the slice carries no integer torsion in positive homological
/// degrees: every nonzero elementary divisor of D_p for p ≥ 2 is 1. For a
/// generically exact slice this certifies that the Cayley determinant and
/// the cokernel content of D₁ agree up to sign; integer sequences that fail
/// to stay filter-regular modulo some prime violate it, and there the two
/// quantities genuinely differ by the torsion of the higher homology.
pub fn higher_torsion_free(slice: &KoszulSlice<BigInt>) -> bool {
    use crate::exactla::smith_normal_form;
    for p in 2..=slice.levels() {
        if slice.dim(p) == 0 || slice.dim(p - 1) == 0 {
            continue;
        }
        let sf = smith_normal_form(slice.diff(p));
        if sf.divisors.iter().any(|d| !Zero::is_zero(d) && d.canonical_assoc() != BigInt::from(1)) {
            return false;
        }
    }
    true
}

const SYMBOLIC_DIM_LIMIT: usize = 12;

/// The resultant of the generic sequence of the given degrees, as an
/// integer polynomial in the symbolic coefficients, normalized by removing
/// the integer content; defined up to sign. Only tiny slices are allowed.
pub fn generic_resultant(
    module: &ModuleSpec,
    degrees: &[MultiDegree],
) -> Result<(ExtPoly<BigInt>, UVarTable), ResultantError> {
    let shape = module.shape().clone();
    let (polys, table) = generic_sequence(&shape, degrees, &BigInt::from(0))
        .map_err(|_| ResultantError::NotGenericallyExact)?;
    let seq = PolySequence::new(polys)?;
    let nu = choose_nu(module, degrees);
    let max_dim = level_dims(module, &seq, &nu).into_iter().max().unwrap_or(0);
    if max_dim > SYMBOLIC_DIM_LIMIT {
        return Err(ResultantError::SliceTooLarge(max_dim, SYMBOLIC_DIM_LIMIT));
    }
    let slice = build_slice(module, &seq, &nu);
    let raw = cayley_det(&slice)?;
    Ok((remove_integer_content(&raw), table))
}

fn level_dims<R: Ring>(
    module: &ModuleSpec,
    seq: &PolySequence<R>,
    nu: &MultiDegree,
) -> Vec<usize> {
    // dimensions without assembling the differentials
    let mut dims = Vec::new();
    for p in 0..=seq.len() {
        let mut total = 0usize;
        for s in subsets(seq.len(), p) {
            let mut mu = nu.clone();
            for &i in &s {
                mu = mu.sub(&seq.degrees()[i]);
            }
            if !mu.has_negative() {
                total += slice_basis(module, &mu).len();
            }
        }
        dims.push(total);
    }
    dims
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
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
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Divides an integer-coefficient polynomial by the gcd of its coefficients
/// and fixes the sign so the leading coefficient is positive.
pub fn remove_integer_content(p: &ExtPoly<BigInt>) -> ExtPoly<BigInt> {
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        g = g.gcd(c);
    }
    if Zero::is_zero(&g) {
        return p.clone();
    }
    let scaled = p.map_coeffs(&BigInt::zero(), |c| c / &g);
    scaled.canonical_assoc()
}

/// Specializes a sequence of generic polynomials at concrete coefficients.
pub fn specialize_sequence<R: Ring>(
    seq: &[MPoly<ExtPoly<R>>],
    assignment: &[R],
) -> Result<PolySequence<R>, ResultantError> {
    let polys: Result<Vec<_>, _> = seq.iter().map(|f| f.specialize(assignment)).collect();
    let polys = polys.map_err(|_| ResultantError::NotGenericallyExact)?;
    Ok(PolySequence::new(polys)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ExactMatrix;
    use crate::modslice::ModuleSpec;
    use crate::mpoly::{BlockStructure, Monomial as M};
    use rand::{Rng, SeedableRng};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn linear_form(shape: &BlockStructure, a: i64, b: i64) -> MPoly<BigInt> {
        MPoly::from_terms(
            shape,
            [(M::var(shape, 0, 0), bi(a)), (M::var(shape, 0, 1), bi(b))],
        )
    }

    #[test]
    fn cayley_det_linear_pair_is_ad_minus_bc() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let (a, b, c, d) = (3i64, -2, 1, 1);
        let seq =
            PolySequence::new(vec![linear_form(&shape, a, b), linear_form(&shape, c, d)]).unwrap();
        let slice = build_slice(&module, &seq, &MultiDegree(vec![1]));
        let det = cayley_det(&slice).unwrap();
        assert_eq!(det.canonical_assoc(), bi(a * d - b * c).canonical_assoc());
    }

    #[test]
    fn cayley_det_identity_slice_is_unit() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let seq =
            PolySequence::new(vec![linear_form(&shape, 1, 0), linear_form(&shape, 0, 1)]).unwrap();
        let slice = build_slice(&module, &seq, &MultiDegree(vec![2]));
        let det = cayley_det(&slice).unwrap();
        assert_eq!(det.canonical_assoc(), bi(1));
    }

    #[test]
    fn cayley_det_degenerate_rejected() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let x0 = linear_form(&shape, 1, 0);
        let seq = PolySequence::new(vec![x0.clone(), x0]).unwrap();
        let slice = build_slice(&module, &seq, &MultiDegree(vec![2]));
        assert_eq!(cayley_det(&slice), Err(ResultantError::NotGenericallyExact));
    }

    #[test]
    fn choose_nu_examples() {
        let p1 = ModuleSpec::free(BlockStructure::new(vec![1]));
        assert_eq!(
            choose_nu(&p1, &[MultiDegree(vec![2]), MultiDegree(vec![3])]),
            MultiDegree(vec![4])
        );
        let p2 = ModuleSpec::free(BlockStructure::new(vec![2]));
        assert_eq!(
            choose_nu(
                &p2,
                &[MultiDegree(vec![1]), MultiDegree(vec![1]), MultiDegree(vec![1])]
            ),
            MultiDegree(vec![1])
        );
        let p11 = ModuleSpec::free(BlockStructure::new(vec![1, 1]));
        let d11 = MultiDegree(vec![1, 1]);
        assert_eq!(
            choose_nu(&p11, &[d11.clone(), d11.clone(), d11.clone()]),
            MultiDegree(vec![3, 3])
        );
    }

    #[test]
    fn mresultant_linear_pair() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let seq =
            PolySequence::new(vec![linear_form(&shape, 3, -2), linear_form(&shape, 1, 1)]).unwrap();
        match mresultant(&module, &seq).unwrap() {
            MResult::Nonzero(r) => {
                assert_eq!(r.value.canonical_assoc(), bi(5));
                assert!(r.stabilized);
            }
            MResult::Zero => panic!("nonzero expected"),
        }
    }

    #[test]
    fn mresultant_p_family() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        for p in [2i64, 3, 5, 101] {
            let seq =
                PolySequence::new(vec![linear_form(&shape, 1, 0), linear_form(&shape, 1, p)])
                    .unwrap();
            match mresultant(&module, &seq).unwrap() {
                MResult::Nonzero(r) => assert_eq!(r.value.canonical_assoc(), bi(p)),
                MResult::Zero => panic!("nonzero expected"),
            }
        }
    }

    #[test]
    fn mresultant_length_mismatch() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let seq = PolySequence::new(vec![linear_form(&shape, 1, 1)]).unwrap();
        assert!(matches!(
            mresultant(&module, &seq),
            Err(ResultantError::LengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn mresultant_bilinear_common_zero() {
        // f0 = x_{1,0} x_{2,0}, f1 = x_{1,0} x_{2,1}, f2 = x_{1,1} x_{2,0}
        // share the zero ([0:1],[0:1])
        let shape = BlockStructure::new(vec![1, 1]);
        let module = ModuleSpec::free(shape.clone());
        let m = |i: usize, j: usize| M::var(&shape, 0, i).mul(&M::var(&shape, 1, j));
        let f = |i: usize, j: usize| MPoly::monomial(&shape, m(i, j), bi(1));
        let seq = PolySequence::new(vec![f(0, 0), f(0, 1), f(1, 0)]).unwrap();
        assert_eq!(mresultant(&module, &seq).unwrap(), MResult::Zero);
    }

    #[test]
    fn content_oracle_examples() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let nu = MultiDegree(vec![1]);
        let seq =
            PolySequence::new(vec![linear_form(&shape, 3, -2), linear_form(&shape, 1, 1)]).unwrap();
        assert_eq!(content_oracle(&module, &seq, &nu), Content::Finite(bi(5)));
        let triv =
            PolySequence::new(vec![linear_form(&shape, 1, 0), linear_form(&shape, 0, 1)]).unwrap();
        assert_eq!(content_oracle(&module, &triv, &nu), Content::Finite(bi(1)));
        let pf = PolySequence::new(vec![linear_form(&shape, 1, 0), linear_form(&shape, 1, 7)])
            .unwrap();
        assert_eq!(content_oracle(&module, &pf, &nu), Content::Finite(bi(7)));
    }

    #[test]
    fn cayley_matches_content_on_random_quadratic_pairs() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 10 {
            let coeffs: Vec<i64> = (0..6).map(|_| rng.gen_range(-9..=9)).collect();
            let quad = |c: &[i64]| {
                MPoly::from_terms(
                    &shape,
                    crate::mpoly::monomial_basis(&shape, &MultiDegree(vec![2]))
                        .into_iter()
                        .zip(c.iter().map(|&v| bi(v))),
                )
            };
            let f0 = quad(&coeffs[0..3]);
            let f1 = quad(&coeffs[3..6]);
            if f0.is_zero() || f1.is_zero() {
                continue;
            }
            let seq = PolySequence::new(vec![f0, f1]).unwrap();
            let nu = choose_nu(&module, seq.degrees());
            let slice = build_slice(&module, &seq, &nu);
            let det = match cayley_det(&slice) {
                Ok(d) => d,
                Err(_) => continue,
            };
            assert_eq!(
                Content::Finite(det.canonical_assoc()),
                content_oracle(&module, &seq, &nu)
            );
            checked += 1;
        }
    }

    #[test]
    fn generic_resultant_two_linear_forms() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let d1 = MultiDegree(vec![1]);
        let (res, table) = generic_resultant(&module, &[d1.clone(), d1]).unwrap();
        // u00 u11 - u01 u10 up to sign
        let v = |t: usize, r: usize| table.var(t, r);
        let mut expected = ExtPoly::zero(table.total, &BigInt::zero());
        let term = |vars: [usize; 2], sign: i64| {
            let mut e = vec![0u32; table.total];
            for u in vars {
                e[u] += 1;
            }
            (e, bi(sign))
        };
        let (e1, c1) = term([v(0, 0), v(1, 1)], 1);
        let (e2, c2) = term([v(0, 1), v(1, 0)], -1);
        expected.add_term(&e1, &c1);
        expected.add_term(&e2, &c2);
        assert_eq!(res.canonical_assoc(), expected.canonical_assoc());
    }

    #[test]
    fn generic_resultant_1_2_is_sylvester() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let (res, table) =
            generic_resultant(&module, &[MultiDegree(vec![1]), MultiDegree(vec![2])]).unwrap();
        // independent oracle: 3x3 Sylvester matrix of a x0 + b x1 and
        // c x0^2 + d x0 x1 + e x1^2, cofactor-expanded
        let zero = ExtPoly::zero(table.total, &BigInt::zero());
        let u = |t: usize, r: usize| ExtPoly::var(table.total, table.var(t, r), &BigInt::zero());
        let rows = vec![
            vec![u(0, 0), u(0, 1), zero.clone()],
            vec![zero.clone(), u(0, 0), u(0, 1)],
            vec![u(1, 0), u(1, 1), u(1, 2)],
        ];
        let m = ExactMatrix::from_rows(rows, &zero);
        let expected = bareiss_det(&m);
        assert_eq!(res.canonical_assoc(), remove_integer_content(&expected).canonical_assoc());
    }

    #[test]
    fn generic_resultant_specialization_consistency() {
        let shape = BlockStructure::new(vec![1]);
        let module = ModuleSpec::free(shape.clone());
        let degs = vec![MultiDegree(vec![1]), MultiDegree(vec![2])];
        let (res, table) = generic_resultant(&module, &degs).unwrap();
        let assignment: Vec<BigInt> = [2i64, -3, 1, 4, 5].iter().map(|&v| bi(v)).collect();
        assert_eq!(assignment.len(), table.total);
        let specialized = res.eval(&assignment);
        let (polys, _) = generic_sequence(&shape, &degs, &BigInt::zero()).unwrap();
        let seq = specialize_sequence(&polys, &assignment).unwrap();
        match mresultant(&module, &seq).unwrap() {
            MResult::Nonzero(r) => {
                // equality up to sign and integer content
                let a = specialized.canonical_assoc();
                let b = r.value.canonical_assoc();
                assert!(a == b || a.exact_div(&b).is_some() || b.exact_div(&a).is_some());
                assert!(!Zero::is_zero(&a));
            }
            MResult::Zero => panic!("random specialization should be nonzero"),
        }
    }

    #[test]
    fn generic_resultant_size_guard() {
        let shape = BlockStructure::new(vec![2]);
        let module = ModuleSpec::free(shape.clone());
        let d = MultiDegree(vec![3]);
        let err = generic_resultant(&module, &[d.clone(), d.clone(), d]).unwrap_err();
        assert!(matches!(err, ResultantError::SliceTooLarge(_, _)));
    }
}
