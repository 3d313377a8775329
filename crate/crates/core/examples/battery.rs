use std::time::Instant;

use superlie::module::{BlockPart, CoeffDescriptor};
use superlie::*;

fn w(domain: i64, codomain: i64, core: i64) -> Window {
    Window {
        domain: HalfInt::from_int(domain),
        codomain: HalfInt::from_int(codomain),
        core: HalfInt::from_int(core),
    }
}

fn run(label: &str, spec: &AlgebraSpec, coeff: &CoeffDescriptor, degree: HalfInt, window: Window) {
    let t0 = Instant::now();
    let report = h1_window(spec, coeff, degree, &window);
    println!(
        "{label}: q = {} (S {}, inner {}) in {:.1?}",
        report.quotient_dimension,
        report.solution_basis.len(),
        report.inner_basis.len(),
        t0.elapsed()
    );
}

fn main() {
    let thv = preset("thv-centerless").unwrap();
    let ns2 = preset("ns2-centerless").unwrap();
    let t2 = CoeffDescriptor::TensorSquare;
    let ad = CoeffDescriptor::Adjoint;

    run("thv t2 d0 (8,10,4)", &thv, &t2, HalfInt::ZERO, w(8, 10, 4));
    run("thv t2 d0 (10,12,6)", &thv, &t2, HalfInt::ZERO, w(10, 12, 6));

    for doubled in [-2i64, -1, 0, 1, 2] {
        let d = HalfInt::from_doubled(doubled);
        run(&format!("ns2 t2 d{d} (8,10,3)"), &ns2, &t2, d, w(8, 10, 3));
    }
    run("ns2 t2 d0 (10,12,5)", &ns2, &t2, HalfInt::ZERO, w(10, 12, 5));

    for doubled in [-2i64, -1, 0, 1, 2] {
        let d = HalfInt::from_doubled(doubled);
        run(&format!("ns2 adjoint d{d} (8,10,3)"), &ns2, &ad, d, w(8, 10, 3));
    }

    let gpm = CoeffDescriptor::SubBlock(vec![(BlockPart::GPlus, BlockPart::GMinus)]);
    let gpp = CoeffDescriptor::SubBlock(vec![(BlockPart::GPlus, BlockPart::GPlus)]);
    run("ns2 block g+.g- d0 (6,8,3)", &ns2, &gpm, HalfInt::ZERO, w(6, 8, 3));
    run("ns2 block g+.g+ d0 (6,8,3)", &ns2, &gpp, HalfInt::ZERO, w(6, 8, 3));
}
