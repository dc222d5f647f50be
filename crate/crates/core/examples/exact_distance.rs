// Exact minimum distances and how they compare with the published
// closed-form tables over GF(7).

use std::fmt::Write;

use rrcodes::code::{CodeFamily, CodeSpec};
use rrcodes::distance::{discrepancy_report, distance_report, pt_weight};
use rrcodes::field::make_field;
use rrcodes::oracle::Budget;

fn run_example() -> String {
    let fam = CodeFamily::new(&make_field(7, 1).unwrap(), 2).unwrap();
    let mut out = String::new();
    let t = 30;
    let prof = pt_weight(t, 7, 2).unwrap();
    writeln!(
        out,
        "P_{t} over GF(7) = {} from digits {:?}",
        prof.p_t, prof.digits
    )
    .unwrap();
    for exps in [[12, 3], [3, 12], [49, 40]] {
        let code = CodeSpec::new(&fam, exps.to_vec()).unwrap();
        let r = distance_report(&code);
        writeln!(
            out,
            "{:?}: d = {} (component t = {:?}), table {:?} via {:?}",
            code.exps_map(),
            r.exact,
            r.witness_t,
            r.paper,
            r.paper_row
        )
        .unwrap();
    }
    let fam1 = CodeFamily::new(&make_field(7, 1).unwrap(), 1).unwrap();
    let found = discrepancy_report(&fam1, |_| true, &Budget::default()).unwrap();
    writeln!(
        out,
        "{} of {} codes over GF(7), s = 1, disagree with the tables:",
        found.len(),
        fam1.spec_count().unwrap()
    )
    .unwrap();
    for d in found.iter().take(3) {
        writeln!(
            out,
            "  {:?}: exact {}, tabulated {:?}",
            d.code.exps(),
            d.exact,
            d.paper
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
