//! p-adic divisibility of the resultant: ord_p(Res) is at least the number
//! of common zeros mod p counted with multiplicity.

use mres::koszul::PolySequence;
use mres::modslice::ModuleSpec;
use mres::mpoly::{parse_mpoly, BlockStructure};
use mres::multiplicity::{check_chardin, mod_p_zero_degree};
use num_bigint::BigInt;

fn parse(shape: &BlockStructure, s: &str) -> mres::mpoly::MPoly<BigInt> {
    parse_mpoly(shape, &BigInt::from(0), |c| c.trim().parse().ok(), s).unwrap()
}

fn main() {
    let shape = BlockStructure::new(vec![1]);
    let module = ModuleSpec::free(shape.clone());

    let cases = [
        (vec!["1*x[1,0]", "1*x[1,0] + 5*x[1,1]"], 5u64),
        (vec!["1*x[1,0]", "1*x[1,1]"], 7),
        (vec!["1*x[1,0]^2", "1*x[1,0]^2 + 25*x[1,1]^2"], 5),
        (
            vec![
                "1*x[1,0]^2 + 3*x[1,0]*x[1,1] + 9*x[1,1]^2",
                "2*x[1,0]^2 + 3*x[1,0]*x[1,1] + 6*x[1,1]^2",
            ],
            3,
        ),
    ];
    for (polys, p) in cases {
        let seq =
            PolySequence::new(polys.iter().map(|s| parse(&shape, s)).collect()).unwrap();
        let n = mod_p_zero_degree(&seq, &module, p).unwrap();
        let rep = check_chardin(&seq, &module, p).unwrap();
        println!(
            "p = {:>2}: zeros mod p (with multiplicity) N = {}, ord_p(Res) = {:?}, pass = {}",
            p, n, rep.ord_p, rep.pass
        );
        assert!(rep.pass);
    }
}
