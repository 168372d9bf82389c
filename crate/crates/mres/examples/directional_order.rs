//! t-adic order of vanishing of the resultant along a line F + tG: the
//! univariate restriction R(t) is interpolated exactly over the rationals.

use mres::koszul::PolySequence;
use mres::modslice::ModuleSpec;
use mres::mpoly::{parse_mpoly, BlockStructure};
use mres::multiplicity::{check_order_bound, directional_order};
use num_bigint::BigInt;

fn parse(shape: &BlockStructure, s: &str) -> mres::mpoly::MPoly<BigInt> {
    parse_mpoly(shape, &BigInt::from(0), |c| c.trim().parse().ok(), s).unwrap()
}

fn main() {
    let shape = BlockStructure::new(vec![1]);
    let module = ModuleSpec::free(shape.clone());

    // degenerate base (x0, x0) moved along (x1, 2x1): R(t) = t
    let f = PolySequence::new(vec![parse(&shape, "1*x[1,0]"), parse(&shape, "1*x[1,0]")])
        .unwrap();
    let g = PolySequence::new(vec![parse(&shape, "1*x[1,1]"), parse(&shape, "2*x[1,1]")])
        .unwrap();
    let rep = directional_order(&module, &f, &g, 1).unwrap();
    println!(
        "line through (x0, x0): order = {}, R(t) coefficients = {:?}",
        rep.order,
        rep.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );

    // nonvanishing base: order 0 and R(0) = Res(F)
    let f = PolySequence::new(vec![
        parse(&shape, "3*x[1,0] + -2*x[1,1]"),
        parse(&shape, "1*x[1,0] + 1*x[1,1]"),
    ])
    .unwrap();
    let g = PolySequence::new(vec![
        parse(&shape, "1*x[1,0] + 4*x[1,1]"),
        parse(&shape, "-2*x[1,0] + 5*x[1,1]"),
    ])
    .unwrap();
    let rep = directional_order(&module, &f, &g, 1).unwrap();
    println!(
        "nonvanishing base: order = {}, R(0) = {}",
        rep.order, rep.coefficients[0]
    );

    // random-direction lower-bound certification for a planted common zero
    let f = PolySequence::new(vec![parse(&shape, "1*x[1,0]"), parse(&shape, "2*x[1,0]")])
        .unwrap();
    let bound = check_order_bound(&module, &f, 1, 5, 42).unwrap();
    println!(
        "planted zero, 5 random directions: orders = {:?}, claimed >= 1 pass = {}",
        bound.orders, bound.pass
    );
}
