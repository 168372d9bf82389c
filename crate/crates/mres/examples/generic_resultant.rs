//! Symbolic resultants of generic sequences: the 2x2 determinant for two
//! generic linear binary forms and the 3x3 Sylvester polynomial for degrees
//! (1, 2), with a specialization check.

use mres::koszul::PolySequence;
use mres::modslice::ModuleSpec;
use mres::mpoly::{generic_sequence, BlockStructure, MultiDegree};
use mres::resultant::{generic_resultant, mresultant, MResult};
use num_bigint::BigInt;

fn main() {
    let shape = BlockStructure::new(vec![1]);
    let module = ModuleSpec::free(shape.clone());

    let d11 = vec![MultiDegree(vec![1]), MultiDegree(vec![1])];
    let (res, _) = generic_resultant(&module, &d11).unwrap();
    println!("generic Res for degrees (1,1): {}", res);

    let d12 = vec![MultiDegree(vec![1]), MultiDegree(vec![2])];
    let (res, table) = generic_resultant(&module, &d12).unwrap();
    println!("generic Res for degrees (1,2): {}", res);

    // specialize at f0 = 2x0 - 3x1, f1 = x0^2 + 4x0x1 + 5x1^2
    let assignment: Vec<BigInt> = [2i64, -3, 1, 4, 5].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(assignment.len(), table.total);
    let value = res.eval(&assignment);
    println!("specialized symbolic value: {}", value);

    let (polys, _) = generic_sequence(&shape, &d12, &BigInt::from(0)).unwrap();
    let concrete: Vec<_> = polys.iter().map(|f| f.specialize(&assignment).unwrap()).collect();
    let seq = PolySequence::new(concrete).unwrap();
    match mresultant(&module, &seq).unwrap() {
        MResult::Nonzero(r) => println!("direct integer resultant:   {}", r.value),
        MResult::Zero => unreachable!(),
    }
}
