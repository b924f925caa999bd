//! CLI layer over `clutterkit`: file formats, subcommands, exit codes.

pub mod commands;
pub mod document;
pub mod error;

use clap::Parser;

pub use commands::{Cli, Command, Format, BUDGET_ENV};
pub use document::ClutterDocument;
pub use error::CliError;

/// Run with explicit arguments; returns (exit code, stdout, stderr).
/// Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget
/// exhausted.
pub fn run<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version go to stdout with success, real errors to stderr
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                (2, String::new(), rendered)
            } else {
                (0, rendered, String::new())
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(out) => (0, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
