//! Command-line front end for `formk1-core`: ring descriptors, element
//! syntax, JSON codecs and the subcommand dispatcher.

pub mod app;
pub mod codec;
pub mod descriptor;
pub mod element;
pub mod failure;
pub mod pretty;

/// Runs the command line of the current process.
pub fn run_cli() -> i32 {
    app::run(std::env::args_os())
}
