//! Serialization: the table text grammar, report rendering and the
//! regression expectations file.

pub mod expectations;
pub mod report;
pub mod text;

pub use expectations::{compute_expectation, parse_expectations, Expectation};
pub use report::{render_report, render_report_with, Format, RenderOptions, Report};
pub use text::{parse_documents, parse_table, render_document, ParseError, TableDocument};
