//! Session files, command dispatch, JSON reports and the verification
//! harness behind the `supclose` binary.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod oracle;
pub mod session;
pub mod verify;

pub use commands::{report, run_command, COMMANDS};
pub use error::{CliError, ExitStatus};
pub use session::Session;
pub use verify::{verify_suites, SUITES};
