//! Full analysis report of a function file (defaults to the majority
//! function on three variables).
//!
//! ```text
//! cargo run --example analyze -- path/to/function.json
//! ```

use algimm::io::FunctionFile;
use algimm::report::{analyze, AnalysisOptions};

fn main() -> algimm::Result<()> {
    let file = match std::env::args().nth(1) {
        Some(path) => FunctionFile::read(path.as_ref())?,
        None => FunctionFile::from_json(r#"{"n": 3, "m": 1, "repr": "tt", "data": "e8"}"#)?,
    };
    let report = analyze(&file.to_function()?, &AnalysisOptions::default());
    print!("{}", report.to_table());
    if !report.ok() {
        eprintln!("failed: {:?}", report.failed_invariants());
        std::process::exit(1);
    }
    Ok(())
}
