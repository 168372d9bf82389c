//! Two independent computations of |Res| over the integers: the Cayley
//! determinant through a pivot-chain partition, and the cokernel content of
//! the bottom differential by Smith reduction.

use mres::arith::Ring;
use mres::exactla::Content;
use mres::koszul::{build_slice, PolySequence};
use mres::modslice::ModuleSpec;
use mres::mpoly::{monomial_basis, BlockStructure, MPoly, MultiDegree};
use mres::resultant::{cayley_det, choose_nu, content_oracle};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let shape = BlockStructure::new(vec![1]);
    let module = ModuleSpec::free(shape.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    for trial in 0..5 {
        // random pair of binary forms of degrees (2, 3)
        let rand_form = |rng: &mut ChaCha8Rng, d: i64| {
            MPoly::from_terms(
                &shape,
                monomial_basis(&shape, &MultiDegree(vec![d]))
                    .into_iter()
                    .map(|m| (m, BigInt::from(rng.gen_range(-9i64..=9)))),
            )
        };
        let f0 = rand_form(&mut rng, 2);
        let f1 = rand_form(&mut rng, 3);
        let seq = match PolySequence::new(vec![f0, f1]) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let nu = choose_nu(&module, seq.degrees());
        let slice = build_slice(&module, &seq, &nu);
        let det = match cayley_det(&slice) {
            Ok(d) => d.canonical_assoc(),
            Err(_) => {
                println!("trial {}: degenerate draw, skipped", trial);
                continue;
            }
        };
        let content = content_oracle(&module, &seq, &nu);
        println!(
            "trial {}: |cayley det| = {}, cokernel content = {:?}",
            trial, det, content
        );
        assert_eq!(Content::Finite(det), content);
    }
    println!("Cayley determinant and Smith content agree on every instance");
}
