//! Classifies a few tables and prints the reports as text and JSON.
//!
//! cargo run --example classify_tables

use ci_quasigroup::classify;
use ci_quasigroup::io::{parse_table, render_report, Format, Report};

const KLEIN: &str = "# Klein four-group\n4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
const DIFF3: &str = "# y - x (mod 3)\n3\n0 1 2\n2 0 1\n1 2 0\n";

pub fn main() {
    for (name, text) in [("klein", KLEIN), ("diff3", DIFF3)] {
        let doc = parse_table(name, text).unwrap();
        let report = classify(&doc.table).unwrap();
        println!("--- {name}");
        print!("{}", render_report(Report::Ci(&report), Format::Text));
        println!("{}", render_report(Report::Ci(&report), Format::Json));
    }
}
