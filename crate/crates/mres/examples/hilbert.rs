//! Hilbert functions and interpolated Hilbert polynomials of multigraded
//! monomial quotients, with relevant dimension and degree.

use mres::modslice::{
    hilbert_function, hilbert_polynomial, rdeg, rdim, ModuleSpec, MonomialIdeal,
};
use mres::mpoly::{BlockStructure, Monomial, MultiDegree};

fn main() {
    // free bigraded ring on P1 x P1: H(d1,d2) = (d1+1)(d2+1)
    let p11 = ModuleSpec::free(BlockStructure::new(vec![1, 1]));
    let hp = hilbert_polynomial(&p11).unwrap();
    println!(
        "free P1xP1: H(2,3) = {}, P(2,3) = {}, rdim = {}",
        hilbert_function(&p11, &MultiDegree(vec![2, 3])),
        hp.eval(&MultiDegree(vec![2, 3])),
        rdim(&p11).unwrap()
    );

    // two disjoint lines in P3: H(d) = 2d + 2
    let shape = BlockStructure::new(vec![3]);
    let v = |i: usize| Monomial::var(&shape, 0, i);
    let ideal = MonomialIdeal::new(vec![
        v(0).mul(&v(1)),
        v(0).mul(&v(3)),
        v(2).mul(&v(1)),
        v(2).mul(&v(3)),
    ]);
    let two_lines = ModuleSpec::quotient(shape, ideal);
    for d in [1i64, 2, 5, 10] {
        println!(
            "two lines: H({}) = {}",
            d,
            hilbert_function(&two_lines, &MultiDegree(vec![d]))
        );
    }
    println!("two lines: rdim = {}", rdim(&two_lines).unwrap());

    // k[x]/(x_{2,1}) with q=2, n=(2,1): the second factor collapses
    let shape = BlockStructure::new(vec![2, 1]);
    let ideal = MonomialIdeal::new(vec![Monomial::var(&shape, 1, 1)]);
    let quot = ModuleSpec::quotient(shape, ideal);
    println!(
        "k[x]/(x_21): H(3,7) = {} (independent of d2), rdim = {}",
        hilbert_function(&quot, &MultiDegree(vec![3, 7])),
        rdim(&quot).unwrap()
    );

    // a zero-dimensional quotient has a well-defined degree
    let shape = BlockStructure::new(vec![1]);
    let ideal = MonomialIdeal::new(vec![
        Monomial::var(&shape, 0, 0),
    ]);
    let point = ModuleSpec::quotient(shape, ideal);
    println!(
        "k[x0,x1]/(x0): rdim = {}, rdeg = {}",
        rdim(&point).unwrap(),
        rdeg(&point).unwrap()
    );
}
