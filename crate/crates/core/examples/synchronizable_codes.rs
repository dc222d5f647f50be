// Quantum synchronizable code parameters from nested dual-containing pairs.

use std::fmt::Write;

use rrcodes::code::{CodeFamily, CodeSpec};
use rrcodes::field::make_field;
use rrcodes::qsc::{check_qsc_pair, qsc_params};

fn run_example() -> String {
    let fam = CodeFamily::new(&make_field(7, 1).unwrap(), 1).unwrap();
    let mut out = String::new();
    let c2 = CodeSpec::full_space(&fam);
    for exps in [[1, 3], [2, 2], [3, 3], [1, 1]] {
        let c1 = CodeSpec::new(&fam, exps.to_vec()).unwrap();
        let check = check_qsc_pair(&c1, &c2).unwrap();
        if check.eligible {
            writeln!(out, "{exps:?}: {}", qsc_params(&c1, 2, 3).unwrap()).unwrap();
        } else {
            writeln!(out, "{exps:?}: rejected ({})", check.reasons.join("; ")).unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
