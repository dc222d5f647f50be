// Driving the command-line interface in-process.

fn run_example() -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    for args in [
        &["rrcodes", "factor", "--p", "11"][..],
        &[
            "rrcodes",
            "distance",
            "--p",
            "7",
            "--exps",
            "{\"U\":6,\"Phi\":7}",
            "--format",
            "json",
        ],
        &[
            "rrcodes", "qsc", "--p", "7", "--c1", "1,3", "--c2", "0,0", "--al", "2", "--ar", "3",
        ],
    ] {
        out.extend_from_slice(format!("$ {}\n", args[1..].join(" ")).as_bytes());
        let code = rrcodes::cli::run(args.iter().copied(), &mut out, &mut err);
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    }
    String::from_utf8(out).unwrap()
}

fn main() {
    print!("{}", run_example());
}
