// Every MDS code of length 5p^s, with the Singleton defect of a few others.

use std::fmt::Write;

use rrcodes::code::{CodeFamily, CodeSpec};
use rrcodes::field::make_field;
use rrcodes::mds::{classify_mds, mds_scan};
use rrcodes::oracle::Budget;

fn run_example() -> String {
    let mut out = String::new();
    for p in [7, 11, 19] {
        let fam = CodeFamily::new(&make_field(p, 1).unwrap(), 1).unwrap();
        let mds = mds_scan(&fam, &Budget::default()).unwrap();
        let list: Vec<String> = mds
            .iter()
            .map(|c| format!("deg {}", c.generator_degree()))
            .collect();
        writeln!(
            out,
            "GF({p}): {} MDS codes ({})",
            mds.len(),
            list.join(", ")
        )
        .unwrap();
    }
    let fam = CodeFamily::new(&make_field(7, 1).unwrap(), 1).unwrap();
    for exps in [[1, 0], [0, 1], [4, 2]] {
        let v = classify_mds(&CodeSpec::new(&fam, exps.to_vec()).unwrap()).unwrap();
        writeln!(
            out,
            "{exps:?}: degree {}, d = {}, defect {:?}",
            v.degree, v.distance, v.defect
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
