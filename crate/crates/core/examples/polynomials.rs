// Polynomial division, gcd and reciprocals over GF(11).

use std::fmt::Write;

use rrcodes::field::make_field;
use rrcodes::poly::Poly;

fn run_example() -> String {
    let f = make_field(11, 1).unwrap();
    let x5 = Poly::x_n_minus_one(&f, 5);
    let g = Poly::from_ints(&f, &[-3, 1])
        .mul(&Poly::from_ints(&f, &[-9, 1]))
        .unwrap();
    let (quot, rem) = x5.divrem(&g).unwrap();
    let mut out = String::new();
    writeln!(out, "x^5-1 = ({g}) * ({quot}) + ({rem})").unwrap();
    writeln!(out, "gcd(x^5-1, {g}) = {}", x5.gcd(&g).unwrap()).unwrap();
    writeln!(out, "reciprocal of {g} = {}", g.reciprocal()).unwrap();
    let cube = Poly::from_ints(&f, &[-1, 1]).pow(11, None).unwrap();
    writeln!(out, "(x-1)^11 = {cube} (weight {})", cube.weight()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
