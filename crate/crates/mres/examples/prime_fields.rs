//! Exact arithmetic backends: resultants over prime fields and rationals,
//! and p-adic valuations of integer resultants.

use mres::arith::{val_p, Fp, Ring};
use mres::koszul::PolySequence;
use mres::modslice::ModuleSpec;
use mres::mpoly::{parse_mpoly, BlockStructure};
use mres::resultant::{mresultant, MResult};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let shape = BlockStructure::new(vec![1]);
    let module = ModuleSpec::free(shape.clone());

    // over Z
    let parse_z = |s: &str| {
        parse_mpoly(&shape, &BigInt::from(0), |c| c.trim().parse::<BigInt>().ok(), s).unwrap()
    };
    let seq = PolySequence::new(vec![parse_z("1*x[1,0]"), parse_z("1*x[1,0] + 25*x[1,1]")])
        .unwrap();
    let value = match mresultant(&module, &seq).unwrap() {
        MResult::Nonzero(r) => r.value,
        MResult::Zero => unreachable!(),
    };
    println!(
        "over Z: Res = {}, ord_5 = {:?}",
        value.canonical_assoc(),
        val_p(&value, 5).unwrap()
    );

    // the same system over F5 degenerates to a zero resultant
    let seq5 = seq
        .map_coeffs(|c| Fp::from_bigint(c, 5).unwrap())
        .unwrap();
    match mresultant(&module, &seq5).unwrap() {
        MResult::Nonzero(r) => println!("over F5: Res = {}", r.value),
        MResult::Zero => println!("over F5: Res = 0 (common zero mod 5)"),
    }

    // and over F7 it stays a unit
    let seq7 = seq
        .map_coeffs(|c| Fp::from_bigint(c, 7).unwrap())
        .unwrap();
    match mresultant(&module, &seq7).unwrap() {
        MResult::Nonzero(r) => println!("over F7: Res = {} (a unit)", r.value),
        MResult::Zero => unreachable!(),
    }

    // rational coefficients work the same way
    let parse_q = |s: &str| {
        parse_mpoly(
            &shape,
            &BigRational::from(BigInt::from(0)),
            |c| mres::arith::parse_rational(c.trim()),
            s,
        )
        .unwrap()
    };
    let seq_q = PolySequence::new(vec![
        parse_q("1/2*x[1,0] + 1/3*x[1,1]"),
        parse_q("1*x[1,0] + -1*x[1,1]"),
    ])
    .unwrap();
    match mresultant(&module, &seq_q).unwrap() {
        MResult::Nonzero(r) => println!("over Q: Res = {}", r.value),
        MResult::Zero => unreachable!(),
    }
}
