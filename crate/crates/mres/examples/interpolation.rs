//! Interpolation on Ga x Gm inside P1 x P1: evaluation matrices with
//! derivatives, interpolation ideal slices, the degree formula, and the
//! order-of-vanishing estimate on sampled triples.

use mres::interp::{
    eval_matrix, interpolation_slice, is_surjective, ist_degree_check, res_estimate_demo,
    EvalSpec, GroupPoint,
};
use mres::mpoly::MultiDegree;

fn main() {
    let spec = EvalSpec::new(vec![GroupPoint::from_ints(0, 1).unwrap()], 2).unwrap();
    let d = MultiDegree(vec![1, 1]);
    let m = eval_matrix(&spec, &d);
    println!("evaluation matrix at (0,1), T = 2, d = (1,1):");
    print!("{}", m.dump());

    let kernel = interpolation_slice(&spec, &d);
    println!("kernel dimension at (1,1): {}", kernel.len());
    for f in &kernel {
        println!("  kernel element: {}", f);
    }

    for probe in [MultiDegree(vec![1, 1]), MultiDegree(vec![2, 2])] {
        println!(
            "surjective at {:?}: {}",
            probe,
            is_surjective(&spec, &probe)
        );
    }

    let deg = ist_degree_check(&spec);
    println!(
        "interpolation ideal degree: expected {}, pass = {}",
        deg.expected, deg.pass
    );

    // order-of-vanishing demo: triples from the T=1 ideal vanish at the
    // point, so the resultant vanishes to order >= 1 along random lines
    let spec1 = EvalSpec::new(vec![GroupPoint::from_ints(0, 1).unwrap()], 1).unwrap();
    let d11 = MultiDegree(vec![1, 1]);
    let rep = res_estimate_demo(
        &spec1,
        &[d11.clone(), d11.clone(), d11],
        2,
        2,
        7,
    )
    .unwrap();
    println!("claimed order {}: overall pass = {}", rep.claimed, rep.pass);
    for (i, s) in rep.samples.iter().enumerate() {
        println!("  sample {}: directional orders {:?}", i, s.orders);
    }
}
