//! Command implementations behind the `fsind` binary.

pub mod error;
pub mod load;
pub mod render;
pub mod report;

pub use error::{CliError, CliResult};
pub use load::{load, parse_input, read_input, skip_validation_requested};
pub use render::render_report;
pub use report::{indicator_report, qsl2_report, table_report, Method, ReportDocument};
