//! Multiplicity lower bounds for resultants: p-adic order against the
//! mod-p zero degree, and t-adic directional order of vanishing along a
//! line of sequences.

use crate::arith::{val_p, Fp};
use crate::exactla::rank;
use crate::koszul::{build_slice, homology_ranks, PolySequence};
use crate::modslice::ModuleSpec;
use crate::mpoly::{monomial_basis, MPoly, MultiDegree};
use crate::resultant::{
    certificate_dets, choose_nu, mresultant, try_partition, MResult, PartitionCertificate,
    PartitionOutcome, ResultantError,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum MultiplicityError {
    #[error("not a prime: {0}")]
    NotPrime(u64),
    #[error("polynomial {0} reduces to zero mod p")]
    ReductionVanishes(usize),
    #[error("higher homology persists mod p at the probe degree: ranks {0:?}")]
    HypothesisNotCertified(Vec<usize>),
    #[error("mod-p zero degree did not stabilize under degree shifts")]
    Unstable,
    #[error("the whole line lies in the resultant hypersurface: R(t) = 0")]
    DegenerateLine,
    #[error("direction multidegrees do not match the base sequence")]
    DegreeMismatch,
    #[error(transparent)]
    Resultant(#[from] ResultantError),
}

/// dim over F_p of (M/(F mod p))_nu at a verified-stable nu, with vanishing
/// higher homology certified at the working degree. This is the rdeg of the
/// reduced quotient: the number of common zeros mod p counted with
/// multiplicity.
pub fn mod_p_zero_degree(
    seq: &PolySequence<BigInt>,
    module: &ModuleSpec,
    p: u64,
) -> Result<u64, MultiplicityError> {
    let mut bad = None;
    let seq_p = PolySequence::new(
        seq.polys()
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let g = f.map_coeffs(|c| Fp::from_bigint(c, p).expect("prime checked below"));
                if g.is_zero() {
                    bad = Some(i);
                }
                g
            })
            .collect::<Vec<_>>(),
    );
    if !crate::arith::is_prime_u64(p) {
        return Err(MultiplicityError::NotPrime(p));
    }
    if let Some(i) = bad {
        return Err(MultiplicityError::ReductionVanishes(i));
    }
    let seq_p = seq_p.map_err(|_| MultiplicityError::ReductionVanishes(0))?;
    let q = module.shape().q();
    let mut nu = choose_nu(module, seq.degrees());
    for _round in 0..=4 {
        let n = quotient_dim_certified(module, &seq_p, &nu)?;
        let mut stable = true;
        for dir in 0..q {
            let shifted = nu.add(&MultiDegree::unit(q, dir));
            if quotient_dim_certified(module, &seq_p, &shifted)? != n {
                stable = false;
                break;
            }
        }
        if stable {
            return Ok(n);
        }
        nu = MultiDegree(nu.0.iter().map(|v| v * 2).collect());
    }
    Err(MultiplicityError::Unstable)
}

fn quotient_dim_certified(
    module: &ModuleSpec,
    seq_p: &PolySequence<Fp>,
    nu: &MultiDegree,
) -> Result<u64, MultiplicityError> {
    let slice = build_slice(module, seq_p, nu);
    let h = homology_ranks(&slice);
    if h.iter().skip(2).any(|&r| r > 0) {
        return Err(MultiplicityError::HypothesisNotCertified(h));
    }
    Ok((slice.dim(0) - rank(slice.diff(1))) as u64)
}

/// Result of the p-adic divisibility check ord_p(Res) >= N.
#[derive(Clone, Debug, PartialEq)]
pub struct ChardinReport {
    /// rdeg of the mod-p reduction (zeros mod p with multiplicity).
    pub n: u64,
    /// ord_p of the resultant; None means Res = 0 (infinite order).
    pub ord_p: Option<u64>,
    pub pass: bool,
}

pub fn check_chardin(
    seq: &PolySequence<BigInt>,
    module: &ModuleSpec,
    p: u64,
) -> Result<ChardinReport, MultiplicityError> {
    let n = mod_p_zero_degree(seq, module, p)?;
    let ord_p = match mresultant(module, seq)? {
        MResult::Zero => None,
        MResult::Nonzero(r) => {
            Some(val_p(&r.value, p).expect("prime checked").expect("value nonzero"))
        }
    };
    let pass = match ord_p {
        None => true,
        Some(o) => o >= n,
    };
    Ok(ChardinReport { n, ord_p, pass })
}

/// The restriction of the resultant to the line F + tG: its exact
/// interpolation and t-adic order of vanishing at t = 0.
#[derive(Clone, Debug)]
pub struct DirectionalOrderReport {
    /// Coefficients of R(t) up to a global sign, index = power of t.
    pub coefficients: Vec<BigRational>,
    /// Index of the lowest nonzero coefficient.
    pub order: u64,
    /// (t_j, R(t_j)) pairs used for the interpolation.
    pub samples: Vec<(i64, BigRational)>,
    pub nu: MultiDegree,
}

fn line_at(
    f: &PolySequence<BigInt>,
    g: &PolySequence<BigInt>,
    t: i64,
) -> Option<PolySequence<BigInt>> {
    let polys: Vec<MPoly<BigInt>> = f
        .polys()
        .iter()
        .zip(g.polys())
        .map(|(fi, gi)| fi.add(&gi.scale(&BigInt::from(t))))
        .collect();
    PolySequence::new(polys).ok()
}

/// Evaluates the Cayley value of a slice through a fixed partition as a
/// rational number; None when some pivot block with p >= 2 is singular.
fn cayley_at(dets: &[BigInt]) -> Option<BigRational> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, d) in dets.iter().enumerate() {
        if i >= 1 && Zero::is_zero(d) {
            return None;
        }
        if i % 2 == 0 {
            num *= d;
        } else {
            den *= d;
        }
    }
    Some(BigRational::new(num, den))
}

/// Exact Lagrange interpolation through the given points.
fn lagrange(points: &[(i64, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    let zero = BigRational::zero();
    let mut coeffs = vec![zero.clone(); n];
    for (j, (xj, yj)) in points.iter().enumerate() {
        // basis polynomial prod_{k != j} (t - x_k) / (x_j - x_k)
        let mut basis = vec![zero.clone(); n];
        basis[0] = BigRational::one();
        let mut deg = 0usize;
        let mut denom = BigRational::one();
        for (k, (xk, _)) in points.iter().enumerate() {
            if k == j {
                continue;
            }
            let xk_r = BigRational::from(BigInt::from(*xk));
            for i in (0..=deg).rev() {
                let carry = basis[i].clone();
                basis[i + 1] = &basis[i + 1] + &carry;
                basis[i] = -(&xk_r * &carry);
            }
            deg += 1;
            denom *= BigRational::from(BigInt::from(xj - xk));
        }
        let scale = yj / &denom;
        for i in 0..n {
            coeffs[i] = &coeffs[i] + &basis[i] * &scale;
        }
    }
    coeffs
}

/// The t-adic order of vanishing of the resultant along F + tG: the value
/// R(t_j) is sampled through a partition fixed at a random nonzero t*, then
/// R(t) is interpolated exactly over Q.
pub fn directional_order(
    module: &ModuleSpec,
    f: &PolySequence<BigInt>,
    g: &PolySequence<BigInt>,
    seed: u64,
) -> Result<DirectionalOrderReport, MultiplicityError> {
    if f.degrees() != g.degrees() {
        return Err(MultiplicityError::DegreeMismatch);
    }
    let nu = choose_nu(module, f.degrees());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // fix a partition at a random nonzero sample
    let mut cert: Option<PartitionCertificate> = None;
    for _attempt in 0..32 {
        let t_star: i64 = rng.gen_range(1..=1000);
        let seq = match line_at(f, g, t_star) {
            Some(s) => s,
            None => continue,
        };
        let slice = build_slice(module, &seq, &nu);
        match try_partition(&slice) {
            PartitionOutcome::Complete { certificate, .. }
            | PartitionOutcome::BottomSingular { certificate, .. } => {
                cert = Some(certificate);
                break;
            }
            PartitionOutcome::HigherFailure => continue,
        }
    }
    let cert = cert.ok_or(ResultantError::NotGenericallyExact)?;
    // degree bound: number of rows of the bottom differential
    let d_bound = {
        let seq0 = line_at(f, g, 0)
            .or_else(|| line_at(f, g, 1))
            .ok_or(MultiplicityError::DegenerateLine)?;
        build_slice(module, &seq0, &nu).dim(0)
    };
    let needed = d_bound + 1;
    let mut samples: Vec<(i64, BigRational)> = Vec::with_capacity(needed);
    let mut t = 0i64;
    while samples.len() < needed {
        if t > 20 * needed as i64 + 100 {
            // far too many degenerate sample points: re-pivot once at a
            // fresh t*, then give up
            return Err(MultiplicityError::DegenerateLine);
        }
        let tj = t;
        t += 1;
        let seq = match line_at(f, g, tj) {
            Some(s) => s,
            None => continue,
        };
        let slice = build_slice(module, &seq, &nu);
        let dets = certificate_dets(&slice, &cert);
        if let Some(v) = cayley_at(&dets) {
            samples.push((tj, v));
        }
    }
    let mut coefficients = lagrange(&samples);
    // trim numerically-exact trailing zeros
    while coefficients.len() > 1 && Zero::is_zero(coefficients.last().unwrap()) {
        coefficients.pop();
    }
    let order = match coefficients.iter().position(|c| !Zero::is_zero(c)) {
        Some(i) => i as u64,
        None => return Err(MultiplicityError::DegenerateLine),
    };
    Ok(DirectionalOrderReport { coefficients, order, samples, nu })
}

/// Per-direction outcome of a lower-bound certification run.
#[derive(Clone, Debug)]
pub struct OrderBoundReport {
    pub claimed: u64,
    pub orders: Vec<u64>,
    pub pass: bool,
}

/// Draws `trials` random integer directions with coefficients in [-9, 9]
/// and checks that every directional order meets the claimed lower bound.
pub fn check_order_bound(
    module: &ModuleSpec,
    f: &PolySequence<BigInt>,
    claimed: u64,
    trials: usize,
    seed: u64,
) -> Result<OrderBoundReport, MultiplicityError> {
    let shape = module.shape();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders = Vec::with_capacity(trials);
    let mut draws = 0usize;
    while orders.len() < trials {
        draws += 1;
        if draws > 20 * trials + 40 {
            return Err(MultiplicityError::DegenerateLine);
        }
        let g_polys: Vec<MPoly<BigInt>> = f
            .degrees()
            .iter()
            .map(|d| {
                MPoly::from_terms(
                    shape,
                    monomial_basis(shape, d)
                        .into_iter()
                        .map(|m| (m, BigInt::from(rng.gen_range(-9i64..=9)))),
                )
            })
            .collect();
        let g = match PolySequence::new(g_polys) {
            Ok(g) => g,
            Err(_) => continue, // all-zero draw, redraw
        };
        match directional_order(module, f, &g, rng.gen()) {
            Ok(rep) => orders.push(rep.order),
            Err(MultiplicityError::DegenerateLine) => continue,
            Err(e) => return Err(e),
        }
    }
    let pass = orders.iter().all(|&o| o >= claimed);
    Ok(OrderBoundReport { claimed, orders, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Ring;
    use crate::mpoly::{BlockStructure, Monomial as M};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn shape1() -> BlockStructure {
        BlockStructure::new(vec![1])
    }

    fn linear(shape: &BlockStructure, a: i64, b: i64) -> MPoly<BigInt> {
        MPoly::from_terms(
            shape,
            [(M::var(shape, 0, 0), bi(a)), (M::var(shape, 0, 1), bi(b))],
        )
    }

    #[test]
    fn mod_p_degree_examples() {
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        let seq = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 1, 5)]).unwrap();
        assert_eq!(mod_p_zero_degree(&seq, &module, 5).unwrap(), 1);

        let triv = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 0, 1)]).unwrap();
        assert_eq!(mod_p_zero_degree(&triv, &module, 7).unwrap(), 0);

        // (x0^2, x0^2 + 25 x1^2) at p=5: double zero
        let sq = |a: i64, b: i64, c: i64| {
            MPoly::from_terms(
                &shape,
                monomial_basis(&shape, &MultiDegree(vec![2]))
                    .into_iter()
                    .zip([bi(a), bi(b), bi(c)]),
            )
        };
        let dbl = PolySequence::new(vec![sq(1, 0, 0), sq(1, 0, 25)]).unwrap();
        assert_eq!(mod_p_zero_degree(&dbl, &module, 5).unwrap(), 2);
    }

    #[test]
    fn mod_p_degree_rejects_vanishing_reduction() {
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        let seq = PolySequence::new(vec![linear(&shape, 5, 10), linear(&shape, 0, 1)]).unwrap();
        assert_eq!(
            mod_p_zero_degree(&seq, &module, 5),
            Err(MultiplicityError::ReductionVanishes(0))
        );
    }

    #[test]
    fn chardin_examples() {
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        let seq = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 1, 5)]).unwrap();
        let rep = check_chardin(&seq, &module, 5).unwrap();
        assert_eq!(rep, ChardinReport { n: 1, ord_p: Some(1), pass: true });

        let triv = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 0, 1)]).unwrap();
        let rep = check_chardin(&triv, &module, 3).unwrap();
        assert_eq!(rep, ChardinReport { n: 0, ord_p: Some(0), pass: true });
    }

    #[test]
    fn directional_order_simple_line() {
        // F = (x0, x0), G = (x1, 2 x1): R(t) = det [[1, t],[1, 2t]] = t
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        let f = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 1, 0)]).unwrap();
        let g = PolySequence::new(vec![linear(&shape, 0, 1), linear(&shape, 0, 2)]).unwrap();
        let rep = directional_order(&module, &f, &g, 3).unwrap();
        assert_eq!(rep.order, 1);
        assert_eq!(rep.coefficients.len(), 2);
    }

    #[test]
    fn directional_order_zero_for_nonvanishing_base() {
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        let f = PolySequence::new(vec![linear(&shape, 3, -2), linear(&shape, 1, 1)]).unwrap();
        let g = PolySequence::new(vec![linear(&shape, 1, 4), linear(&shape, -2, 5)]).unwrap();
        let rep = directional_order(&module, &f, &g, 0).unwrap();
        assert_eq!(rep.order, 0);
        // R(0) agrees with mresultant(F) up to sign
        let r0 = rep.coefficients[0].clone();
        assert!(r0.is_integer());
        match mresultant(&module, &f).unwrap() {
            MResult::Nonzero(r) => {
                assert_eq!(r0.to_integer().canonical_assoc(), r.value.canonical_assoc())
            }
            MResult::Zero => panic!(),
        }
    }

    #[test]
    fn directional_order_scaling_invariance() {
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        let f = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 1, 0)]).unwrap();
        let g1 = PolySequence::new(vec![linear(&shape, 0, 1), linear(&shape, 0, 2)]).unwrap();
        let g3 = PolySequence::new(vec![linear(&shape, 0, 3), linear(&shape, 0, 6)]).unwrap();
        let o1 = directional_order(&module, &f, &g1, 5).unwrap().order;
        let o3 = directional_order(&module, &f, &g3, 5).unwrap().order;
        assert_eq!(o1, o3);
    }

    #[test]
    fn degenerate_line_detected() {
        // F and G both multiples of x0: every member of the line vanishes at
        // [0:1], so R(t) = 0 identically
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        let f = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 2, 0)]).unwrap();
        let g = PolySequence::new(vec![linear(&shape, 3, 0), linear(&shape, 5, 0)]).unwrap();
        let err = directional_order(&module, &f, &g, 1).unwrap_err();
        assert_eq!(err, MultiplicityError::DegenerateLine);
    }

    #[test]
    fn order_bound_reports() {
        let shape = shape1();
        let module = ModuleSpec::free(shape.clone());
        // planted single common zero at [0:1]
        let f = PolySequence::new(vec![linear(&shape, 1, 0), linear(&shape, 2, 0)]).unwrap();
        let rep = check_order_bound(&module, &f, 1, 4, 42).unwrap();
        assert!(rep.pass, "orders: {:?}", rep.orders);
        // no common zero: order 0 everywhere
        let f2 = PolySequence::new(vec![linear(&shape, 3, -2), linear(&shape, 1, 1)]).unwrap();
        let rep2 = check_order_bound(&module, &f2, 0, 3, 42).unwrap();
        assert!(rep2.pass);
        assert!(rep2.orders.iter().all(|&o| o == 0));
    }

    #[test]
    fn bilinear_triple_with_common_zero_has_positive_order() {
        let shape = BlockStructure::new(vec![1, 1]);
        let module = ModuleSpec::free(shape.clone());
        let m = |i: usize, j: usize| M::var(&shape, 0, i).mul(&M::var(&shape, 1, j));
        // all three vanish at ([0:1],[0:1])
        let b = |c00: i64, c01: i64, c10: i64| {
            MPoly::from_terms(
                &shape,
                [(m(0, 0), bi(c00)), (m(0, 1), bi(c01)), (m(1, 0), bi(c10))],
            )
        };
        let f = PolySequence::new(vec![b(1, 2, 3), b(-1, 1, 2), b(2, 0, 1)]).unwrap();
        let rep = check_order_bound(&module, &f, 1, 2, 9).unwrap();
        assert!(rep.pass, "orders: {:?}", rep.orders);
    }
}
