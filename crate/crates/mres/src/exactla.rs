//! Exact dense linear algebra: fraction-free elimination (rank, determinant,
//! pivot selection), kernels over fields, and Smith normal form over Z.

use crate::arith::{Field, Ring};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense rectangular matrix over an exact ring, with optional basis labels.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
    zero: R,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn zeros(rows: usize, cols: usize, witness: &R) -> Self {
        let zero = witness.zero_like();
        ExactMatrix { rows, cols, data: vec![zero.clone(); rows * cols], zero }
    }

    pub fn from_rows(rows: Vec<Vec<R>>, witness: &R) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect(), zero: witness.zero_like() }
    }

    pub fn identity(n: usize, witness: &R) -> Self {
        let mut m = Self::zeros(n, n, witness);
        for i in 0..n {
            *m.at_mut(i, i) = witness.one_like();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut R {
        &mut self.data[r * self.cols + c]
    }

    pub fn zero_witness(&self) -> &R {
        &self.zero
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> ExactMatrix<R> {
        let mut out = ExactMatrix::zeros(row_idx.len(), col_idx.len(), &self.zero);
        for (i, &r) in row_idx.iter().enumerate() {
            for (j, &c) in col_idx.iter().enumerate() {
                *out.at_mut(i, j) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> ExactMatrix<R> {
        let mut out = ExactMatrix::zeros(self.cols, self.rows, &self.zero);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &ExactMatrix<R>) -> ExactMatrix<R> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols, &self.zero);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let s = out.at(r, c).add(&a.mul(b));
                    *out.at_mut(r, c) = s;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<S: Ring>(&self, witness: &S, f: impl Fn(&R) -> S) -> ExactMatrix<S> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: witness.zero_like(),
        }
    }

    /// Plain row-major text dump, one row per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    s.push(' ');
                }
                s.push_str(&format!("{}", self.at(r, c)));
            }
            s.push('\n');
        }
        s
    }
}

/// Outcome of fraction-free elimination: rank, the pivot rows in the order
/// their columns were processed, and the determinant when square and nonsingular.
struct Elimination<R: Ring> {
    rank: usize,
    pivot_rows: Vec<usize>,
    last_pivot: Option<R>,
    sign_flip: bool,
}

/// One-step Bareiss elimination with row pivoting; exact over any integral
/// domain. Columns are processed in order; a column with no usable pivot is
/// skipped (rank deficiency).
fn fraction_free_eliminate<R: Ring>(m: &ExactMatrix<R>) -> Elimination<R> {
    let mut b = m.clone();
    let rows = b.nrows();
    let cols = b.ncols();
    let mut used = vec![false; rows];
    let mut pivot_rows = Vec::new();
    let mut prev: Option<R> = None;
    let mut sign_flip = false;
    let mut order: Vec<usize> = (0..rows).collect(); // virtual row order
    let mut next = 0usize; // next pivot position in `order`

    for c in 0..cols {
        // best-scoring nonzero pivot among unused rows
        let mut best: Option<(usize, i64)> = None;
        for k in next..rows {
            let r = order[k];
            let e = b.at(r, c);
            if !e.is_zero() {
                let score = e.pivot_score();
                if best.map(|(_, s)| score > s).unwrap_or(true) {
                    best = Some((k, score));
                }
            }
        }
        let (k, _) = match best {
            Some(x) => x,
            None => continue,
        };
        if k != next {
            order.swap(k, next);
            sign_flip = !sign_flip;
        }
        let piv_row = order[next];
        used[piv_row] = true;
        pivot_rows.push(piv_row);
        let piv = b.at(piv_row, c).clone();
        for kk in (next + 1)..rows {
            let r = order[kk];
            let head = b.at(r, c).clone();
            for j in (c + 1)..cols {
                let mut v = piv.mul(b.at(r, j)).sub(&head.mul(b.at(piv_row, j)));
                if let Some(p) = &prev {
                    v = v
                        .exact_div(p)
                        .expect("fraction-free elimination: exact division failed (internal invariant)");
                }
                *b.at_mut(r, j) = v;
            }
            *b.at_mut(r, c) = b.zero.clone();
        }
        prev = Some(piv);
        next += 1;
        if next == rows {
            break;
        }
    }
    Elimination { rank: pivot_rows.len(), pivot_rows, last_pivot: prev, sign_flip }
}

/// Exact rank, equal to the rank over the fraction field of the entry domain.
pub fn rank<R: Ring>(m: &ExactMatrix<R>) -> usize {
    fraction_free_eliminate(m).rank
}

/// Row indices forming an invertible maximal square when the matrix has full
/// column rank; `None` when the columns are dependent.
pub fn select_pivot_rows<R: Ring>(m: &ExactMatrix<R>) -> Option<Vec<usize>> {
    let e = fraction_free_eliminate(m);
    if e.rank == m.ncols() {
        Some(e.pivot_rows)
    } else {
        None
    }
}

/// Fraction-free determinant of a square matrix over an integral domain.
pub fn bareiss_det<R: Ring>(m: &ExactMatrix<R>) -> R {
    assert_eq!(m.nrows(), m.ncols(), "determinant requires a square matrix");
    let witness = &m.zero;
    if m.nrows() == 0 {
        return witness.one_like();
    }
    let e = fraction_free_eliminate(m);
    if e.rank < m.nrows() {
        return witness.zero_like();
    }
    let det = e.last_pivot.expect("full-rank square matrix has a final pivot");
    if e.sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Reduced-echelon kernel basis over a field; one vector per free column,
/// with a 1 in the free position.
pub fn kernel_basis<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<F>> {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut b = m.clone();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let piv = (r..rows).find(|&i| !b.at(i, c).is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        if piv != r {
            for j in 0..cols {
                let tmp = b.at(piv, j).clone();
                *b.at_mut(piv, j) = b.at(r, j).clone();
                *b.at_mut(r, j) = tmp;
            }
        }
        let inv = b.at(r, c).inv().expect("nonzero field element");
        for j in c..cols {
            let v = b.at(r, j).mul(&inv);
            *b.at_mut(r, j) = v;
        }
        for i in 0..rows {
            if i == r || b.at(i, c).is_zero() {
                continue;
            }
            let factor = b.at(i, c).clone();
            for j in c..cols {
                let v = b.at(i, j).sub(&factor.mul(b.at(r, j)));
                *b.at_mut(i, j) = v;
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    let zero = m.zero.zero_like();
    let one = m.zero.one_like();
    let mut basis = Vec::new();
    for c in 0..cols {
        if pivot_of_col[c].is_some() {
            continue;
        }
        let mut v = vec![zero.clone(); cols];
        v[c] = one.clone();
        for j in 0..cols {
            if let Some(pr) = pivot_of_col[j] {
                v[j] = b.at(pr, c).neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Kernel over Q with vectors cleared to integers: content 1, first nonzero
/// entry positive.
pub fn kernel_basis_cleared(m: &ExactMatrix<BigRational>) -> Vec<Vec<BigInt>> {
    kernel_basis(m)
        .into_iter()
        .map(|v| clear_rational_vector(&v))
        .collect()
}

pub fn clear_rational_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if !Zero::is_zero(&content) && !One::is_one(&content) {
        for x in ints.iter_mut() {
            *x = &*x / &content;
        }
    }
    if let Some(first) = ints.iter().find(|x| !Zero::is_zero(*x)) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    ints
}

/// Elementary divisors s_1 | s_2 | ... | s_r of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub divisors: Vec<BigInt>,
    pub rank: usize,
    pub shape: (usize, usize),
}

pub fn smith_normal_form(m: &ExactMatrix<BigInt>) -> SmithForm {
    let mut b = m.clone();
    let rows = b.nrows();
    let cols = b.ncols();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // smallest-absolute-value nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !Ring::is_zero(b.at(i, j)) {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => b.at(i, j).abs() < b.at(bi, bj).abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let (pi, pj) = match best {
            Some(x) => x,
            None => break,
        };
        swap_rows(&mut b, t, pi);
        swap_cols(&mut b, t, pj);
        // clear row and column t by Euclidean steps
        let mut dirty = false;
        for i in (t + 1)..rows {
            if Ring::is_zero(b.at(i, t)) {
                continue;
            }
            let q = rounded_div(b.at(i, t), b.at(t, t));
            row_sub(&mut b, i, t, &q);
            if !Ring::is_zero(b.at(i, t)) {
                dirty = true;
            }
        }
        for j in (t + 1)..cols {
            if Ring::is_zero(b.at(t, j)) {
                continue;
            }
            let q = rounded_div(b.at(t, j), b.at(t, t));
            col_sub(&mut b, j, t, &q);
            if !Ring::is_zero(b.at(t, j)) {
                dirty = true;
            }
        }
        if dirty {
            continue; // smaller remainders exist; re-pick pivot
        }
        // divisibility pass for the chain condition
        let piv = b.at(t, t).clone();
        let mut offender = None;
        'scan: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !Zero::is_zero(&b.at(i, j).mod_floor(&piv)) {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            for j in 0..cols {
                let v = b.at(t, j).add(b.at(i, j));
                *b.at_mut(t, j) = v;
            }
            continue;
        }
        t += 1;
    }
    let mut divisors: Vec<BigInt> = (0..t).map(|i| b.at(i, i).abs()).collect();
    divisors.retain(|d| !Zero::is_zero(d));
    let rank = divisors.len();
    SmithForm { divisors, rank, shape: (rows, cols) }
}

fn swap_rows(b: &mut ExactMatrix<BigInt>, a: usize, c: usize) {
    if a == c {
        return;
    }
    for j in 0..b.ncols() {
        let tmp = b.at(a, j).clone();
        *b.at_mut(a, j) = b.at(c, j).clone();
        *b.at_mut(c, j) = tmp;
    }
}

fn swap_cols(b: &mut ExactMatrix<BigInt>, a: usize, c: usize) {
    if a == c {
        return;
    }
    for i in 0..b.nrows() {
        let tmp = b.at(i, a).clone();
        *b.at_mut(i, a) = b.at(i, c).clone();
        *b.at_mut(i, c) = tmp;
    }
}

fn row_sub(b: &mut ExactMatrix<BigInt>, i: usize, t: usize, q: &BigInt) {
    for j in 0..b.ncols() {
        let v = b.at(i, j) - q * b.at(t, j);
        *b.at_mut(i, j) = v;
    }
}

fn col_sub(b: &mut ExactMatrix<BigInt>, j: usize, t: usize, q: &BigInt) {
    for i in 0..b.nrows() {
        let v = b.at(i, j) - q * b.at(i, t);
        *b.at_mut(i, j) = v;
    }
}

fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest-integer quotient keeps remainders at most |b|/2
    let two = BigInt::from(2);
    let (q, r) = a.div_rem(b);
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Content of the cokernel Z^ambient / image(A): the product of the
/// elementary divisors when the cokernel is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Content {
    Finite(BigInt),
    Infinite,
}

pub fn cokernel_content(m: &ExactMatrix<BigInt>, ambient_rank: usize) -> Content {
    assert_eq!(m.nrows(), ambient_rank, "matrix must present Z^ambient / image");
    let snf = smith_normal_form(m);
    if snf.rank < ambient_rank {
        return Content::Infinite;
    }
    let mut prod = BigInt::one();
    for d in &snf.divisors {
        prod *= d;
    }
    Content::Finite(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn zi() -> BigInt {
        BigInt::zero()
    }

    fn int_matrix(rows: Vec<Vec<i64>>) -> ExactMatrix<BigInt> {
        ExactMatrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(),
            &zi(),
        )
    }

    fn rat_matrix(rows: Vec<Vec<i64>>) -> ExactMatrix<BigRational> {
        ExactMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
            &BigRational::zero(),
        )
    }

    /// Cofactor-expansion determinant, the independent oracle for small n.
    fn cofactor_det(m: &ExactMatrix<BigInt>) -> BigInt {
        let n = m.nrows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        let cols: Vec<usize> = (1..n).collect();
        for r in 0..n {
            if Ring::is_zero(m.at(r, 0)) {
                continue;
            }
            let rows: Vec<usize> = (0..n).filter(|&i| i != r).collect();
            let minor = cofactor_det(&m.submatrix(&rows, &cols));
            let term = m.at(r, 0) * minor;
            if r % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn rank_and_kernel_basics() {
        let id = rat_matrix(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(rank(&id), 3);
        assert!(kernel_basis(&id).is_empty());

        let m = rat_matrix(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis_cleared(&m);
        assert_eq!(k, vec![vec![BigInt::from(2), BigInt::from(-1)]]);

        let z = rat_matrix(vec![vec![0, 0, 0, 0, 0], vec![0, 0, 0, 0, 0]]);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel_basis(&z).len(), 5);
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(1..=6);
            let m = int_matrix(
                (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect(),
            );
            assert_eq!(bareiss_det(&m), cofactor_det(&m));
        }
    }

    #[test]
    fn bareiss_simple_values() {
        assert_eq!(bareiss_det(&int_matrix(vec![vec![2, 0], vec![0, 3]])), BigInt::from(6));
        assert_eq!(bareiss_det(&int_matrix(vec![vec![1, 2], vec![2, 4]])), BigInt::zero());
    }

    #[test]
    fn bareiss_symbolic_2x2() {
        use crate::extpoly::ExtPoly;
        let w = ExtPoly::zero(4, &zi());
        let v = |i: usize| ExtPoly::var(4, i, &zi());
        let m = ExactMatrix::from_rows(vec![vec![v(0), v(1)], vec![v(2), v(3)]], &w);
        let det = bareiss_det(&m);
        let expect = v(0).mul(&v(3)).sub(&v(1).mul(&v(2)));
        assert_eq!(det, expect);
    }

    #[test]
    fn snf_examples() {
        let snf = smith_normal_form(&int_matrix(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(snf.divisors, vec![BigInt::one(), BigInt::from(6)]);
        assert_eq!(smith_normal_form(&int_matrix(vec![vec![1]])).divisors, vec![BigInt::one()]);
        let z = smith_normal_form(&int_matrix(vec![vec![0, 0]]));
        assert_eq!(z.rank, 0);
        assert!(z.divisors.is_empty());
    }

    #[test]
    fn cokernel_content_examples() {
        assert_eq!(
            cokernel_content(&int_matrix(vec![vec![5]]), 1),
            Content::Finite(BigInt::from(5))
        );
        assert_eq!(
            cokernel_content(&int_matrix(vec![vec![2, 0], vec![0, 3]]), 2),
            Content::Finite(BigInt::from(6))
        );
        assert_eq!(cokernel_content(&int_matrix(vec![vec![1], vec![0]]), 2), Content::Infinite);
    }

    #[test]
    fn content_equals_abs_det_on_random_square() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 10 {
            let m = int_matrix(
                (0..5).map(|_| (0..5).map(|_| rng.gen_range(-9..=9)).collect()).collect(),
            );
            let det = bareiss_det(&m);
            if Ring::is_zero(&det) {
                continue;
            }
            assert_eq!(cokernel_content(&m, 5), Content::Finite(det.abs()));
            done += 1;
        }
    }

    #[test]
    fn snf_invariant_under_unimodular_ops() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let m = int_matrix(vec![vec![4, 6, 2], vec![2, 8, 10], vec![0, 4, 4]]);
        let base = smith_normal_form(&m);
        for _ in 0..10 {
            let mut b = m.clone();
            for _ in 0..6 {
                let i = rng.gen_range(0..3);
                let mut j = rng.gen_range(0..3);
                while j == i {
                    j = rng.gen_range(0..3);
                }
                let k = BigInt::from(rng.gen_range(-3..=3i64));
                if rng.gen_bool(0.5) {
                    for c in 0..3 {
                        let v = b.at(i, c) + &k * b.at(j, c);
                        *b.at_mut(i, c) = v;
                    }
                } else {
                    for r in 0..3 {
                        let v = b.at(r, i) + &k * b.at(r, j);
                        *b.at_mut(r, i) = v;
                    }
                }
            }
            assert_eq!(smith_normal_form(&b).divisors, base.divisors);
        }
    }

    #[test]
    fn rank_mod_p_agrees_generically() {
        use crate::arith::Fp;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let m = int_matrix(
            (0..4).map(|_| (0..5).map(|_| rng.gen_range(-9..=9)).collect()).collect(),
        );
        let r = rank(&m);
        // entries bounded by 9; primes far above any minor of this size
        for &p in &[1_000_003u64, 1_000_033, 1_000_037] {
            let mp = m.map(&Fp::new_unchecked(0, p), |x| Fp::from_bigint(x, p).unwrap());
            assert_eq!(rank(&mp), r);
        }
    }
}
