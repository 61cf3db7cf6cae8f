//! Input format, example corpus, reports and commands behind the
//! `subcanon` binary.

pub mod corpus;
pub mod input;
pub mod report;
pub mod run;

pub use corpus::{generate_example, CorpusError, Kind};
pub use input::{parse_input, InputDocument, ParseError};
pub use report::ReportDocument;
