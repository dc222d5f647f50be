// Labelled factorization of x^5 - 1 for one field from each case.

use std::fmt::Write;

use rrcodes::field::make_field;
use rrcodes::spectrum::Spectrum;

fn run_example() -> String {
    let mut out = String::new();
    for (p, m) in [(7, 1), (19, 1), (11, 1), (7, 2)] {
        let f = make_field(p, m).unwrap();
        let sp = Spectrum::new(&f);
        writeln!(out, "GF({}): case {}", f.q(), sp.case()).unwrap();
        for fac in sp.factors() {
            let recip = sp.recip(fac.label).unwrap();
            writeln!(
                out,
                "  {:<4} {:<14} roots w^{:?}, reciprocal {recip}",
                fac.label.name(),
                fac.poly.to_string(),
                fac.coset
            )
            .unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
