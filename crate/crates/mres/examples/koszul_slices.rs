//! Finite slices of the multigraded Koszul complex: dimensions, the complex
//! property, homology ranks, and a filter-regularity probe.

use mres::koszul::{
    build_slice, default_window, homology_ranks, is_filter_regular, is_generically_exact,
    PolySequence,
};
use mres::modslice::ModuleSpec;
use mres::mpoly::{parse_mpoly, BlockStructure, MultiDegree};
use num_bigint::BigInt;

fn parse(shape: &BlockStructure, s: &str) -> mres::mpoly::MPoly<BigInt> {
    parse_mpoly(shape, &BigInt::from(0), |c| c.trim().parse().ok(), s).unwrap()
}

fn main() {
    let shape = BlockStructure::new(vec![1]);
    let module = ModuleSpec::free(shape.clone());

    let seq = PolySequence::new(vec![
        parse(&shape, "1*x[1,0]^2 + 1*x[1,1]^2"),
        parse(&shape, "1*x[1,0]*x[1,1]"),
    ])
    .unwrap();
    let nu = MultiDegree(vec![3]);
    let slice = build_slice(&module, &seq, &nu);
    println!(
        "slice at nu = {:?}: dims = {:?}",
        nu,
        (0..slice.levels()).map(|p| slice.dim(p)).collect::<Vec<_>>()
    );
    println!("complex property D.D = 0: {}", slice.check_complex());
    println!("homology ranks: {:?}", homology_ranks(&slice));
    println!("generically exact: {}", is_generically_exact(&slice));

    // a degenerate sequence has higher homology
    let degen = PolySequence::new(vec![
        parse(&shape, "1*x[1,0]"),
        parse(&shape, "1*x[1,0]"),
    ])
    .unwrap();
    let slice = build_slice(&module, &degen, &MultiDegree(vec![2]));
    println!(
        "degenerate (x0, x0): homology ranks = {:?}",
        homology_ranks(&slice)
    );

    // filter-regularity probe on a finite window
    let x0 = parse(&shape, "1*x[1,0]");
    let window = default_window(&module);
    let cert = is_filter_regular(&x0, &module, &[], &window);
    println!(
        "x0 filter-regular on window {:?}: {}",
        cert.window, cert.holds_on_window
    );
}
