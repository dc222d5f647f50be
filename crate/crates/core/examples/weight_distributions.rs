// Weight distributions of every length-5 code over GF(19) and the
// MacWilliams transform between a code and its dual.

use std::fmt::Write;

use rrcodes::code::{CodeFamily, SimpleRootCode};
use rrcodes::field::make_field;
use rrcodes::weights::{macwilliams, weight_table};

fn run_example() -> String {
    let fam = CodeFamily::new(&make_field(19, 1).unwrap(), 1).unwrap();
    let mut out = String::new();
    for c in SimpleRootCode::all(fam.spectrum())
        .into_iter()
        .filter(|c| !c.is_zero_code())
    {
        let a = weight_table(&c).unwrap();
        writeln!(
            out,
            "{:<12} [5, {}]  {:?}",
            c.describe(),
            c.dimension(),
            a.counts
        )
        .unwrap();
        let d = c.dual();
        if !d.is_zero_code() {
            let b = macwilliams(&a, c.dimension() as u32, 19).unwrap();
            assert_eq!(b, weight_table(&d).unwrap());
            writeln!(out, "  dual {:<7} {:?}", d.describe(), b.counts).unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
