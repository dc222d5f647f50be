// Building a code from exponents and inspecting its generator, dual and
// dual containment.

use std::fmt::Write;

use rrcodes::code::{CodeFamily, CodeSpec};
use rrcodes::field::make_field;

fn run_example() -> String {
    let fam = CodeFamily::new(&make_field(11, 1).unwrap(), 1).unwrap();
    let mut out = String::new();
    writeln!(
        out,
        "length {}, {} codes in the family",
        fam.n(),
        fam.spec_count().unwrap()
    )
    .unwrap();
    let code = CodeSpec::new(&fam, vec![3, 1, 2, 5, 7]).unwrap();
    writeln!(
        out,
        "code {:?}: degree {}, dimension {}",
        code.exps_map(),
        code.generator_degree(),
        code.dimension()
    )
    .unwrap();
    let dual = code.dual_code();
    writeln!(out, "dual {:?}", dual.exps_map()).unwrap();
    writeln!(
        out,
        "exponent complement {:?} (not the dual when factors pair off)",
        code.exponent_complement().exps_map()
    )
    .unwrap();
    writeln!(out, "dual containing: {}", code.is_dual_containing()).unwrap();
    let small = CodeSpec::new(&fam, vec![2, 4, 1, 6, 3]).unwrap();
    writeln!(
        out,
        "code {:?} dual containing: {} (by division: {})",
        small.exps_map(),
        small.is_dual_containing(),
        small.dual_containing_by_division()
    )
    .unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
