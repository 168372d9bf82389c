//! Resultants of small multihomogeneous systems: a linear pair, a quadratic
//! pair, and a bilinear triple with a planted common zero.

use mres::arith::Ring;
use mres::koszul::PolySequence;
use mres::modslice::ModuleSpec;
use mres::mpoly::{parse_mpoly, BlockStructure};
use mres::resultant::{choose_nu, mresultant, MResult};
use num_bigint::BigInt;

fn parse(shape: &BlockStructure, s: &str) -> mres::mpoly::MPoly<BigInt> {
    parse_mpoly(shape, &BigInt::from(0), |c| c.trim().parse().ok(), s).unwrap()
}

fn main() {
    // pair of binary linear forms: the resultant is the 2x2 determinant
    let p1 = BlockStructure::new(vec![1]);
    let free = ModuleSpec::free(p1.clone());
    let seq = PolySequence::new(vec![
        parse(&p1, "3*x[1,0] + -2*x[1,1]"),
        parse(&p1, "1*x[1,0] + 1*x[1,1]"),
    ])
    .unwrap();
    println!("nu = {:?}", choose_nu(&free, seq.degrees()));
    match mresultant(&free, &seq).unwrap() {
        MResult::Nonzero(r) => println!(
            "Res(3x0-2x1, x0+x1) = {} (up to sign), stabilized = {}",
            r.value.canonical_assoc(),
            r.stabilized
        ),
        MResult::Zero => unreachable!(),
    }

    // quadratic pair
    let seq = PolySequence::new(vec![
        parse(&p1, "1*x[1,0]^2 + 3*x[1,0]*x[1,1] + 2*x[1,1]^2"),
        parse(&p1, "2*x[1,0]^2 + -1*x[1,1]^2"),
    ])
    .unwrap();
    match mresultant(&free, &seq).unwrap() {
        MResult::Nonzero(r) => {
            println!("Res of the quadratic pair = {}", r.value.canonical_assoc())
        }
        MResult::Zero => unreachable!(),
    }

    // bilinear triple on P1 x P1 sharing the zero ([0:1],[0:1])
    let p11 = BlockStructure::new(vec![1, 1]);
    let free2 = ModuleSpec::free(p11.clone());
    let seq = PolySequence::new(vec![
        parse(&p11, "1*x[1,0]*x[2,0]"),
        parse(&p11, "1*x[1,0]*x[2,1]"),
        parse(&p11, "1*x[1,1]*x[2,0]"),
    ])
    .unwrap();
    match mresultant(&free2, &seq).unwrap() {
        MResult::Nonzero(_) => unreachable!(),
        MResult::Zero => println!("bilinear triple with common zero: Res = 0"),
    }

    // a dense bilinear triple is nonzero
    let seq = PolySequence::new(vec![
        parse(&p11, "1*x[1,0]*x[2,0] + 2*x[1,0]*x[2,1] + 3*x[1,1]*x[2,0] + 4*x[1,1]*x[2,1]"),
        parse(&p11, "-1*x[1,0]*x[2,0] + 2*x[1,1]*x[2,0] + 5*x[1,1]*x[2,1]"),
        parse(&p11, "2*x[1,0]*x[2,0] + 7*x[1,0]*x[2,1] + 1*x[1,1]*x[2,1]"),
    ])
    .unwrap();
    match mresultant(&free2, &seq).unwrap() {
        MResult::Nonzero(r) => println!(
            "dense bilinear triple: Res = {} at nu = {:?}",
            r.value.canonical_assoc(),
            r.nu
        ),
        MResult::Zero => unreachable!(),
    }
}
