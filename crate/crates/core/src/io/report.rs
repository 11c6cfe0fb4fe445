//! Text and JSON rendering of [`CiReport`] and [`TheoremReport`].
//!
//! JSON keys appear in a fixed order and absent optionals are `null`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Element, TotalMap};
use crate::ci::CiReport;
use crate::search::{CiStructure, TheoremReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text or json)")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Ci(&'a CiReport),
    Theorem(&'a TheoremReport),
}

#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    /// Emit elapsed time; off gives byte-identical output across runs.
    pub timing: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { timing: true }
    }
}

#[derive(Serialize)]
pub(crate) struct CiReportJson<'a> {
    order: usize,
    classification: &'static str,
    is_quasigroup: bool,
    is_loop: bool,
    jr: Option<&'a [Element]>,
    jl: Option<&'a [Element]>,
    jr_is_bijective: bool,
    jl_equals_jr_inverse: bool,
    loop_identity: Option<Element>,
    x_times_jx_is_identity: Option<bool>,
    j_is_automorphism: Option<bool>,
}

impl<'a> From<&'a CiReport> for CiReportJson<'a> {
    fn from(r: &'a CiReport) -> Self {
        CiReportJson {
            order: r.order,
            classification: r.classification.as_str(),
            is_quasigroup: r.is_quasigroup,
            is_loop: r.is_loop(),
            jr: r.jr.as_ref().map(TotalMap::image),
            jl: r.jl.as_ref().map(TotalMap::image),
            jr_is_bijective: r.jr_is_bijective,
            jl_equals_jr_inverse: r.jl_equals_jr_inverse,
            loop_identity: r.loop_identity,
            x_times_jx_is_identity: r.x_times_jx_is_identity,
            j_is_automorphism: r.j_is_automorphism,
        }
    }
}

#[derive(Serialize)]
struct StructureJson {
    table: Vec<Vec<Element>>,
    jr: Vec<Element>,
}

impl From<&CiStructure> for StructureJson {
    fn from(s: &CiStructure) -> Self {
        StructureJson {
            table: s.table.rows().map(<[_]>::to_vec).collect(),
            jr: s.jr.image().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct TheoremReportJson {
    order: usize,
    mode: &'static str,
    pair_count: usize,
    table_count: usize,
    class_count: Option<usize>,
    all_are_quasigroups: bool,
    all_jr_bijective: bool,
    all_right_ci_with_jr_inverse: bool,
    all_j_unique: bool,
    failures: Vec<StructureJson>,
    elapsed_ms: Option<u64>,
}

fn theorem_json(r: &TheoremReport, options: RenderOptions) -> TheoremReportJson {
    TheoremReportJson {
        order: r.order,
        mode: r.mode.as_str(),
        pair_count: r.pair_count,
        table_count: r.table_count,
        class_count: r.class_count,
        all_are_quasigroups: r.all_are_quasigroups,
        all_jr_bijective: r.all_jr_bijective,
        all_right_ci_with_jr_inverse: r.all_right_ci_with_jr_inverse,
        all_j_unique: r.all_j_unique,
        failures: r.failures.iter().map(StructureJson::from).collect(),
        elapsed_ms: options
            .timing
            .then(|| u64::try_from(r.elapsed.as_millis()).unwrap_or(u64::MAX)),
    }
}

fn fmt_map(m: &Option<TotalMap>) -> String {
    m.as_ref()
        .map_or_else(|| "none".to_string(), |m| format!("{:?}", m.image()))
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

fn ci_text(r: &CiReport) -> String {
    let mut out = String::new();
    writeln!(out, "classification: {}", r.classification).unwrap();
    writeln!(out, "order: {}", r.order).unwrap();
    writeln!(out, "left quasigroup: {}", r.is_left_quasigroup).unwrap();
    writeln!(out, "right quasigroup: {}", r.is_right_quasigroup).unwrap();
    writeln!(out, "quasigroup: {}", r.is_quasigroup).unwrap();
    writeln!(out, "loop: {}", r.is_loop()).unwrap();
    writeln!(out, "J_r: {}", fmt_map(&r.jr)).unwrap();
    writeln!(out, "J_l: {}", fmt_map(&r.jl)).unwrap();
    writeln!(out, "J_r bijective: {}", r.jr_is_bijective).unwrap();
    writeln!(out, "J_l = J_r^-1: {}", r.jl_equals_jr_inverse).unwrap();
    writeln!(out, "identity element: {}", fmt_opt(r.loop_identity)).unwrap();
    writeln!(out, "x * J(x) = 1: {}", fmt_opt(r.x_times_jx_is_identity)).unwrap();
    writeln!(out, "J automorphism: {}", fmt_opt(r.j_is_automorphism)).unwrap();
    out
}

fn theorem_text(r: &TheoremReport, options: RenderOptions) -> String {
    let mut out = String::new();
    let verdict = if r.verified() { "VERIFIED" } else { "FAILED" };
    writeln!(out, "order {} ({}): {}", r.order, r.mode, verdict).unwrap();
    writeln!(out, "  pairs: {}", r.pair_count).unwrap();
    writeln!(out, "  tables: {}", r.table_count).unwrap();
    writeln!(out, "  classes: {}", fmt_opt(r.class_count)).unwrap();
    writeln!(out, "  all quasigroups: {}", r.all_are_quasigroups).unwrap();
    writeln!(out, "  all J_r bijective: {}", r.all_jr_bijective).unwrap();
    writeln!(
        out,
        "  all right CI with J_r^-1: {}",
        r.all_right_ci_with_jr_inverse
    )
    .unwrap();
    writeln!(out, "  all J unique: {}", r.all_j_unique).unwrap();
    writeln!(out, "  failures: {}", r.failures.len()).unwrap();
    for f in &r.failures {
        writeln!(out, "    {:?}", f).unwrap();
    }
    if options.timing {
        writeln!(out, "  elapsed: {} ms", r.elapsed.as_millis()).unwrap();
    }
    out
}

pub fn render_report(report: Report<'_>, format: Format) -> String {
    render_report_with(report, format, RenderOptions::default())
}

/// JSON output is a single line without a trailing newline; text output is
/// multi-line and newline-terminated.
pub fn render_report_with(report: Report<'_>, format: Format, options: RenderOptions) -> String {
    match (report, format) {
        (Report::Ci(r), Format::Text) => ci_text(r),
        (Report::Theorem(r), Format::Text) => theorem_text(r, options),
        (Report::Ci(r), Format::Json) => {
            serde_json::to_string(&CiReportJson::from(r)).expect("serializable report")
        }
        (Report::Theorem(r), Format::Json) => {
            serde_json::to_string(&theorem_json(r, options)).expect("serializable report")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CayleyTable;
    use crate::ci::classify;
    use crate::search::{verify_theorem, Mode, SearchConfig};

    #[test]
    fn z3_json() {
        let r = classify(&CayleyTable::cyclic_group(3).unwrap()).unwrap();
        assert_eq!(
            render_report(Report::Ci(&r), Format::Json),
            r#"{"order":3,"classification":"CI_LOOP","is_quasigroup":true,"is_loop":true,"jr":[0,2,1],"jl":[0,2,1],"jr_is_bijective":true,"jl_equals_jr_inverse":true,"loop_identity":0,"x_times_jx_is_identity":true,"j_is_automorphism":true}"#
        );
    }

    #[test]
    fn constant_text() {
        let r = classify(&CayleyTable::new(2, vec![0; 4]).unwrap()).unwrap();
        let text = render_report(Report::Ci(&r), Format::Text);
        assert!(text.contains("NOT_LEFT_CI"));
        let json: serde_json::Value =
            serde_json::from_str(&render_report(Report::Ci(&r), Format::Json)).unwrap();
        assert!(json["jr"].is_null() && json["loop_identity"].is_null());
    }

    #[test]
    fn theorem_json_shape() {
        let r = verify_theorem(&SearchConfig::new(2, Mode::Oracle)).unwrap();
        let text = render_report_with(
            Report::Theorem(&r),
            Format::Json,
            RenderOptions { timing: false },
        );
        assert_eq!(
            text,
            r#"{"order":2,"mode":"oracle","pair_count":2,"table_count":2,"class_count":1,"all_are_quasigroups":true,"all_jr_bijective":true,"all_right_ci_with_jr_inverse":true,"all_j_unique":true,"failures":[],"elapsed_ms":null}"#
        );
        let timed: serde_json::Value =
            serde_json::from_str(&render_report(Report::Theorem(&r), Format::Json)).unwrap();
        assert!(timed["elapsed_ms"].is_u64());
    }

    #[test]
    fn format_parsing() {
        assert_eq!("JSON".parse::<Format>(), Ok(Format::Json));
        assert!("yaml".parse::<Format>().is_err());
    }
}
