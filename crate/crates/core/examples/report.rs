//! Assembling a report, its JSON form, and driving the command-line entry
//! point in-process.
//!
//! cargo run --example report

use eigenbound::bounds::verify_constants;
use eigenbound::cli::run_with;
use eigenbound::report::Report;

fn main() -> eigenbound::Result<()> {
    let report = Report::new("constants").param("source", "example").checks(verify_constants());
    let json = report.to_json()?;
    assert_eq!(Report::from_json(&json)?, report);
    println!("{}", &json[..json.find("\"checks\"").unwrap_or(json.len())]);

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(["eigenbound", "bound", "--n", "2", "--K", "1", "--d", "3.14159265"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit status {code}");
    Ok(())
}
