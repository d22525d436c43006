//! Library half of the `gpjac` command-line tool: serializable output
//! records, text/JSON/CSV/markdown rendering, and the cross-validation
//! suite behind the `verify` subcommand.

pub mod record;
pub mod render;
pub mod verify;
