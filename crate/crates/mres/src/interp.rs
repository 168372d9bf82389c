//! Interpolation on G_a × G_m embedded in P¹×P¹: evaluation operators with
//! invariant derivatives, interpolation ideal slices, the degree formula,
//! and the end-to-end order-of-vanishing demo.

use crate::exactla::{kernel_basis_cleared, rank, ExactMatrix};
use crate::koszul::PolySequence;
use crate::modslice::ModuleSpec;
use crate::mpoly::{monomial_basis, BlockStructure, MPoly, MultiDegree};
use crate::multiplicity::{check_order_bound, MultiplicityError, OrderBoundReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A rational point of G_a × G_m in the affine chart x_{1,0} ≠ 0, x_{2,0} ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPoint {
    pub z: BigRational,
    pub w: BigRational,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum InterpError {
    #[error("w-coordinate must be nonzero (point must lie in G_m)")]
    ZeroW,
    #[error("points must be pairwise distinct and nonempty; T must be positive")]
    BadSpec,
    #[error("evaluation is not surjective at a required degree")]
    HypothesisFailed,
    #[error(transparent)]
    Multiplicity(#[from] MultiplicityError),
}

impl GroupPoint {
    pub fn new(z: BigRational, w: BigRational) -> Result<Self, InterpError> {
        if w.is_zero() {
            return Err(InterpError::ZeroW);
        }
        Ok(GroupPoint { z, w })
    }

    pub fn from_ints(z: i64, w: i64) -> Result<Self, InterpError> {
        GroupPoint::new(
            BigRational::from(BigInt::from(z)),
            BigRational::from(BigInt::from(w)),
        )
    }
}

/// A finite set Σ of group points and an order bound T; the derivation set
/// is fixed to Δ = (∂_z, w∂_w), the invariant derivations of G_a and G_m.
#[derive(Clone, Debug)]
pub struct EvalSpec {
    pub points: Vec<GroupPoint>,
    pub t: u32,
}

impl EvalSpec {
    pub fn new(points: Vec<GroupPoint>, t: u32) -> Result<Self, InterpError> {
        if points.is_empty() || t == 0 {
            return Err(InterpError::BadSpec);
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(InterpError::BadSpec);
                }
            }
        }
        Ok(EvalSpec { points, t })
    }

    /// #{σ ∈ ℕ² : |σ| < T} = T(T+1)/2.
    pub fn sigma_count(&self) -> usize {
        (self.t as usize * (self.t as usize + 1)) / 2
    }

    /// Expected degree of the interpolation ideal: |Σ|·T(T+1)/2.
    pub fn expected_degree(&self) -> usize {
        self.points.len() * self.sigma_count()
    }

    /// The surjectivity threshold d_ev = T|Σ|·(1,1).
    pub fn d_ev(&self) -> MultiDegree {
        let v = self.t as i64 * self.points.len() as i64;
        MultiDegree(vec![v, v])
    }
}

/// #{σ ∈ ℕ^m : |σ| < T} for a general derivation count m.
pub fn sigma_count_general(t: u32, m: u32) -> u64 {
    // C(T - 1 + m, m)
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 1..=m as u64 {
        num *= t as u64 - 1 + i;
        den *= i;
    }
    num / den
}

/// The ambient block structure P¹×P¹.
pub fn pp_shape() -> BlockStructure {
    BlockStructure::new(vec![1, 1])
}

/// σ with |σ| < T in graded-lex order: (0,0); (1,0),(0,1); (2,0),(1,1),...
pub fn sigma_list(t: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for s in 0..t {
        for s1 in (0..=s).rev() {
            out.push((s1, s - s1));
        }
    }
    out
}

fn pow_rat(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// ∂_z^{σ₁}(w∂_w)^{σ₂}(z^{a₁} w^{b₁}) evaluated at the point: the falling
/// factorial a₁(a₁−1)…(a₁−σ₁+1) · z^{a₁−σ₁} · b₁^{σ₂} · w^{b₁}.
fn eval_entry(point: &GroupPoint, sigma: (u32, u32), a1: u32, b1: u32) -> BigRational {
    let (s1, s2) = sigma;
    if a1 < s1 {
        return BigRational::zero();
    }
    let mut ff = BigInt::one();
    for k in 0..s1 {
        ff *= BigInt::from(a1 - k);
    }
    let b_pow = if s2 == 0 {
        BigInt::one()
    } else {
        let mut acc = BigInt::one();
        for _ in 0..s2 {
            acc *= BigInt::from(b1);
        }
        acc
    };
    BigRational::from(ff * b_pow) * pow_rat(&point.z, a1 - s1) * pow_rat(&point.w, b1)
}

/// The evaluation operator ev_{Σ,T,d} as a matrix over ℚ: rows indexed by
/// (point, σ) with points in input order and σ graded-lex, columns by
/// monomial_basis(d) of P¹×P¹.
pub fn eval_matrix(spec: &EvalSpec, d: &MultiDegree) -> ExactMatrix<BigRational> {
    let shape = pp_shape();
    let basis = monomial_basis(&shape, d);
    let sigmas = sigma_list(spec.t);
    let zero = BigRational::zero();
    let mut m = ExactMatrix::zeros(spec.points.len() * sigmas.len(), basis.len(), &zero);
    for (pi, point) in spec.points.iter().enumerate() {
        for (si, &sigma) in sigmas.iter().enumerate() {
            let row = pi * sigmas.len() + si;
            for (col, mon) in basis.iter().enumerate() {
                // exponents: [a0, a1, b0, b1]
                let a1 = mon.0[1];
                let b1 = mon.0[3];
                *m.at_mut(row, col) = eval_entry(point, sigma, a1, b1);
            }
        }
    }
    m
}

/// A basis of the interpolation slice I^{Σ,T}_d = ker(ev_{Σ,T,d}), with
/// denominators cleared to primitive integer polynomials.
pub fn interpolation_slice(spec: &EvalSpec, d: &MultiDegree) -> Vec<MPoly<BigInt>> {
    let shape = pp_shape();
    let basis = monomial_basis(&shape, d);
    let m = eval_matrix(spec, d);
    kernel_basis_cleared(&m)
        .into_iter()
        .map(|v| {
            MPoly::from_terms(
                &shape,
                basis.iter().cloned().zip(v.into_iter()),
            )
        })
        .collect()
}

/// Surjectivity of ev_{Σ,T,d}: full row rank |Σ|·T(T+1)/2.
pub fn is_surjective(spec: &EvalSpec, d: &MultiDegree) -> bool {
    rank(&eval_matrix(spec, d)) == spec.expected_degree()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheckReport {
    pub expected: usize,
    /// (degree probed, codimension of the kernel there)
    pub measured: Vec<(MultiDegree, usize)>,
    pub pass: bool,
}

/// Verifies deg I^{Σ,T} = |Σ|·T(T+1)/2 by measuring the codimension of the
/// kernel slice at several degrees past the surjectivity threshold.
pub fn ist_degree_check(spec: &EvalSpec) -> DegreeCheckReport {
    let expected = spec.expected_degree();
    let base = spec.d_ev();
    let probes = vec![
        base.clone(),
        base.add(&MultiDegree(vec![1, 2])),
        base.add(&MultiDegree(vec![3, 1])),
    ];
    let measured: Vec<(MultiDegree, usize)> = probes
        .into_iter()
        .map(|d| {
            let r = rank(&eval_matrix(spec, &d));
            (d, r)
        })
        .collect();
    let pass = measured.iter().all(|(_, r)| *r == expected);
    DegreeCheckReport { expected, measured, pass }
}

#[derive(Clone, Debug)]
pub struct ResEstimateReport {
    pub claimed: u64,
    pub samples: Vec<OrderBoundReport>,
    pub pass: bool,
}

/// Samples random triples from the interpolation slices at the three given
/// degrees and certifies that the resultant vanishes to order at least
/// |Σ|·T(T+1)/2 along `trials` random directions per triple.
pub fn res_estimate_demo(
    spec: &EvalSpec,
    degrees: &[MultiDegree; 3],
    samples: usize,
    trials: usize,
    seed: u64,
) -> Result<ResEstimateReport, InterpError> {
    if !is_surjective(spec, &degrees[0]) || !is_surjective(spec, &degrees[1]) {
        return Err(InterpError::HypothesisFailed);
    }
    let module = ModuleSpec::free(pp_shape());
    let claimed = spec.expected_degree() as u64;
    let bases: Vec<Vec<MPoly<BigInt>>> =
        degrees.iter().map(|d| interpolation_slice(spec, d)).collect();
    if bases.iter().any(|b| b.is_empty()) {
        return Err(InterpError::HypothesisFailed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(samples);
    let mut attempts = 0usize;
    while reports.len() < samples {
        attempts += 1;
        if attempts > 20 * samples + 20 {
            return Err(MultiplicityError::DegenerateLine.into());
        }
        let triple: Option<Vec<MPoly<BigInt>>> = bases
            .iter()
            .map(|b| random_combination(b, &mut rng))
            .collect();
        let triple = match triple {
            Some(t) => t,
            None => continue,
        };
        let f = match PolySequence::new(triple) {
            Ok(f) => f,
            Err(_) => continue,
        };
        match check_order_bound(&module, &f, claimed, trials, rng.gen()) {
            Ok(rep) => reports.push(rep),
            // degenerate tuples are consistent with the bound but carry no
            // information; resample
            Err(MultiplicityError::DegenerateLine) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    Ok(ResEstimateReport { claimed, samples: reports, pass })
}

fn random_combination(
    basis: &[MPoly<BigInt>],
    rng: &mut ChaCha8Rng,
) -> Option<MPoly<BigInt>> {
    let shape = pp_shape();
    let mut acc = MPoly::zero(&shape);
    for b in basis {
        let c = BigInt::from(rng.gen_range(-5i64..=5));
        acc = acc.add(&b.scale(&c));
    }
    if acc.is_zero() {
        None
    } else {
        Some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extpoly::ExtPoly;
    use crate::mpoly::Monomial;

    fn pt(z: i64, w: i64) -> GroupPoint {
        GroupPoint::from_ints(z, w).unwrap()
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    /// Independent oracle: the monomial's affine function z^{a1} w^{b1} as a
    /// bivariate polynomial, derived symbolically by ∂_z and w∂_w, then
    /// evaluated.
    fn oracle_entry(point: &GroupPoint, sigma: (u32, u32), a1: u32, b1: u32) -> BigRational {
        let zero = BigRational::zero();
        let mut e = vec![0u32; 2];
        e[0] = a1;
        e[1] = b1;
        let mut p = ExtPoly::from_terms(2, &zero, [(e, BigRational::one())]);
        for _ in 0..sigma.0 {
            p = p.derivative(0);
        }
        let w = ExtPoly::var(2, 1, &zero);
        for _ in 0..sigma.1 {
            p = crate::arith::Ring::mul(&p.derivative(1), &w);
        }
        p.eval(&[point.z.clone(), point.w.clone()])
    }

    #[test]
    fn eval_matrix_t1_point_01() {
        let spec = EvalSpec::new(vec![pt(0, 1)], 1).unwrap();
        let d = MultiDegree(vec![1, 1]);
        let m = eval_matrix(&spec, &d);
        assert_eq!((m.nrows(), m.ncols()), (1, 4));
        // entries are the values of the four affine functions at (0, 1);
        // exactly the columns of 1 and w are 1, z and zw vanish
        let basis = monomial_basis(&pp_shape(), &d);
        for (col, mon) in basis.iter().enumerate() {
            let expected = if mon.0[1] == 0 { rat(1) } else { rat(0) };
            assert_eq!(*m.at(0, col), expected, "column {}", col);
        }
    }

    #[test]
    fn eval_matrix_t2_matches_symbolic_oracle() {
        let spec = EvalSpec::new(vec![pt(0, 1)], 2).unwrap();
        let d = MultiDegree(vec![1, 1]);
        let m = eval_matrix(&spec, &d);
        assert_eq!((m.nrows(), m.ncols()), (3, 4));
        let basis = monomial_basis(&pp_shape(), &d);
        for (row, &sigma) in sigma_list(2).iter().enumerate() {
            for (col, mon) in basis.iter().enumerate() {
                assert_eq!(
                    *m.at(row, col),
                    oracle_entry(&spec.points[0], sigma, mon.0[1], mon.0[3]),
                    "row {} col {}",
                    row,
                    col
                );
            }
        }
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn eval_matrix_random_points_match_oracle() {
        let spec = EvalSpec::new(vec![pt(2, 3), pt(-1, 2)], 3).unwrap();
        let d = MultiDegree(vec![2, 2]);
        let m = eval_matrix(&spec, &d);
        let basis = monomial_basis(&pp_shape(), &d);
        let sigmas = sigma_list(3);
        for (pi, point) in spec.points.iter().enumerate() {
            for (si, &sigma) in sigmas.iter().enumerate() {
                for (col, mon) in basis.iter().enumerate() {
                    assert_eq!(
                        *m.at(pi * sigmas.len() + si, col),
                        oracle_entry(point, sigma, mon.0[1], mon.0[3])
                    );
                }
            }
        }
    }

    #[test]
    fn constant_degree_matrix() {
        let spec = EvalSpec::new(vec![pt(4, 7)], 2).unwrap();
        let m = eval_matrix(&spec, &MultiDegree(vec![0, 0]));
        assert_eq!((m.nrows(), m.ncols()), (3, 1));
        assert_eq!(*m.at(0, 0), rat(1));
        assert_eq!(*m.at(1, 0), rat(0));
        assert_eq!(*m.at(2, 0), rat(0));
    }

    #[test]
    fn interpolation_slice_examples() {
        let spec1 = EvalSpec::new(vec![pt(0, 1)], 1).unwrap();
        let d = MultiDegree(vec![1, 1]);
        let k1 = interpolation_slice(&spec1, &d);
        assert_eq!(k1.len(), 3);
        // the function z, i.e. x_{1,1} x_{2,0}, lies in the span: its eval
        // row is zero
        let shape = pp_shape();
        let z_mon = Monomial::var(&shape, 0, 1).mul(&Monomial::var(&shape, 1, 0));
        let z_poly = MPoly::monomial(&shape, z_mon, BigInt::one());
        let m = eval_matrix(&spec1, &d);
        let basis = monomial_basis(&shape, &d);
        let row_val: BigRational = basis
            .iter()
            .enumerate()
            .map(|(c, mon)| {
                let coeff = z_poly.coefficient(mon).cloned().unwrap_or_else(BigInt::zero);
                m.at(0, c) * BigRational::from(coeff)
            })
            .sum();
        assert!(row_val.is_zero());

        let spec2 = EvalSpec::new(vec![pt(0, 1)], 2).unwrap();
        assert_eq!(interpolation_slice(&spec2, &d).len(), 1);
        assert!(interpolation_slice(&spec1, &MultiDegree(vec![0, 0])).is_empty());
    }

    #[test]
    fn surjectivity_examples() {
        let one_pt = EvalSpec::new(vec![pt(0, 1)], 1).unwrap();
        assert!(is_surjective(&one_pt, &MultiDegree(vec![1, 1])));
        let two_pts = EvalSpec::new(vec![pt(0, 1), pt(1, 1)], 1).unwrap();
        assert!(!is_surjective(&two_pts, &MultiDegree(vec![0, 0])));
        let t3 = EvalSpec::new(vec![pt(0, 1)], 3).unwrap();
        assert!(is_surjective(&t3, &MultiDegree(vec![3, 3])));
    }

    #[test]
    fn degree_check_examples() {
        let cases = [
            (vec![pt(0, 1)], 2u32, 3usize),
            (vec![pt(0, 1), pt(1, 2)], 1, 2),
            (vec![pt(0, 1)], 1, 1),
        ];
        for (points, t, expected) in cases {
            let spec = EvalSpec::new(points, t).unwrap();
            let rep = ist_degree_check(&spec);
            assert_eq!(rep.expected, expected);
            assert!(rep.pass, "{:?}", rep);
        }
    }

    #[test]
    fn kernel_dimension_formula() {
        let spec = EvalSpec::new(vec![pt(1, 2), pt(0, 1), pt(-2, 3)], 2).unwrap();
        let d_ev = spec.d_ev();
        for shift in [
            MultiDegree(vec![0, 0]),
            MultiDegree(vec![1, 0]),
            MultiDegree(vec![2, 3]),
        ] {
            let d = d_ev.add(&shift);
            let full = monomial_basis(&pp_shape(), &d).len();
            let k = interpolation_slice(&spec, &d).len();
            assert_eq!(full - k, spec.expected_degree(), "at {:?}", d);
        }
    }

    #[test]
    fn generated_in_bounded_degree() {
        // products x_{p,i}·(kernel at d') span the kernel at d' + e_p
        let spec = EvalSpec::new(vec![pt(0, 1), pt(1, 2)], 1).unwrap();
        let shape = pp_shape();
        let dp = spec.d_ev().add(&MultiDegree(vec![1, 1]));
        let gens = interpolation_slice(&spec, &dp);
        for p in 0..2usize {
            let up = dp.add(&MultiDegree::unit(2, p));
            let target_basis = monomial_basis(&shape, &up);
            let expected_dim = interpolation_slice(&spec, &up).len();
            let mut rows: Vec<Vec<BigRational>> = Vec::new();
            for g in &gens {
                for i in 0..2usize {
                    let prod = g.mul_monomial(&Monomial::var(&shape, p, i));
                    rows.push(
                        target_basis
                            .iter()
                            .map(|m| {
                                BigRational::from(
                                    prod.coefficient(m).cloned().unwrap_or_else(BigInt::zero),
                                )
                            })
                            .collect(),
                    );
                }
            }
            let m = ExactMatrix::from_rows(rows, &BigRational::zero());
            assert_eq!(rank(&m), expected_dim, "direction {}", p);
        }
    }

    #[test]
    fn leibniz_consistency_at_first_derivatives() {
        // ev(PQ) at σ=(1,0) equals ∂P·Q + P·∂Q; same for σ=(0,1) with w∂w
        let spec = EvalSpec::new(vec![pt(3, 2)], 2).unwrap();
        let point = &spec.points[0];
        let shape = pp_shape();
        let d = MultiDegree(vec![1, 1]);
        let basis = monomial_basis(&shape, &d);
        let coeffs_p: Vec<i64> = vec![2, -1, 3, 5];
        let coeffs_q: Vec<i64> = vec![1, 4, -2, 7];
        let poly = |cs: &[i64]| {
            MPoly::from_terms(
                &shape,
                basis.iter().cloned().zip(cs.iter().map(|&v| BigInt::from(v))),
            )
        };
        let p = poly(&coeffs_p);
        let q = poly(&coeffs_q);
        let prod = p.mul(&q);
        let ev = |f: &MPoly<BigInt>, sigma: (u32, u32)| -> BigRational {
            f.terms()
                .iter()
                .map(|(m, c)| {
                    eval_entry(point, sigma, m.0[1], m.0[3]) * BigRational::from(c.clone())
                })
                .sum()
        };
        for sigma in [(1u32, 0u32), (0, 1)] {
            let lhs = ev(&prod, sigma);
            let rhs = &ev(&p, sigma) * &ev(&q, (0, 0)) + &ev(&p, (0, 0)) * &ev(&q, sigma);
            assert_eq!(lhs, rhs, "sigma {:?}", sigma);
        }
    }

    #[test]
    fn res_estimate_single_point_t1() {
        let spec = EvalSpec::new(vec![pt(0, 1)], 1).unwrap();
        let d = MultiDegree(vec![1, 1]);
        let rep =
            res_estimate_demo(&spec, &[d.clone(), d.clone(), d], 2, 2, 31).unwrap();
        assert_eq!(rep.claimed, 1);
        assert!(rep.pass, "{:?}", rep.samples);
    }

    #[test]
    fn res_estimate_rejects_nonsurjective_spec() {
        let spec = EvalSpec::new(vec![pt(0, 1), pt(1, 2)], 2).unwrap();
        let d = MultiDegree(vec![1, 1]); // far below d_ev = (4,4)
        let err = res_estimate_demo(&spec, &[d.clone(), d.clone(), d], 1, 1, 0).unwrap_err();
        assert_eq!(err, InterpError::HypothesisFailed);
    }

    #[test]
    fn sigma_counts() {
        assert_eq!(sigma_count_general(2, 2), 3);
        assert_eq!(sigma_count_general(1, 2), 1);
        assert_eq!(sigma_count_general(3, 2), 6);
        assert_eq!(sigma_count_general(2, 3), 4);
        assert_eq!(sigma_list(2), vec![(0, 0), (1, 0), (0, 1)]);
    }
}
