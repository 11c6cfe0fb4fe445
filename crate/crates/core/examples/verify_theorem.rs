//! Checks, for every left CI-groupoid of order up to 5, that it is a
//! quasigroup with a unique bijective `J_r` whose inverse gives the right CI
//! identity.
//!
//! cargo run --release --example verify_theorem

use ci_quasigroup::io::{render_report, Format, Report};
use ci_quasigroup::{verify_theorem, Mode, SearchConfig};

pub fn main() {
    for n in 1..=3 {
        let report = verify_theorem(&SearchConfig::new(n, Mode::Oracle)).unwrap();
        assert!(report.verified());
        print!("{}", render_report(Report::Theorem(&report), Format::Text));
    }
    for n in 4..=5 {
        let report = verify_theorem(&SearchConfig::new(n, Mode::Propagate).workers(2)).unwrap();
        assert!(report.verified());
        print!("{}", render_report(Report::Theorem(&report), Format::Text));
    }
}
