// Arithmetic in GF(121): inverses, Frobenius and a fifth root of unity.

use std::fmt::Write;

use rrcodes::field::make_field;

fn run_example() -> String {
    let f = make_field(11, 2).expect("GF(121)");
    let mut out = String::new();
    writeln!(
        out,
        "GF({}) with modulus coefficients {:?}",
        f.q(),
        f.modulus()
    )
    .unwrap();
    let a = f.element(&[3, 1]).unwrap(); // 3 + a
    let inv = f.inv(a).unwrap();
    writeln!(out, "({})^-1 = {}", f.format(a), f.format(inv)).unwrap();
    writeln!(out, "product = {}", f.format(f.mul(a, inv))).unwrap();
    writeln!(
        out,
        "frobenius({}) = {}",
        f.format(a),
        f.format(f.frobenius(a))
    )
    .unwrap();
    match f.find_fifth_root() {
        Some(w) => writeln!(
            out,
            "fifth root of unity: {} (w^5 = {})",
            f.format(w),
            f.format(f.pow(w, 5))
        )
        .unwrap(),
        None => writeln!(out, "no primitive fifth root of unity in GF({})", f.q()).unwrap(),
    }
    out
}

fn main() {
    print!("{}", run_example());
}
