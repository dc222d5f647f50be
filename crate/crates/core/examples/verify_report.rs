// The full verification sweep with the bundled ledger of known mismatches.

use rrcodes::oracle::Budget;
use rrcodes::verify::{run_verify, Ledger};

fn run_example() -> String {
    let report = run_verify(&Ledger::default(), &Budget::default()).unwrap();
    report.to_table()
}

fn main() {
    print!("{}", run_example());
}
