// Running a verification suite from code and reading its JSON report.

use std::error::Error;

use downup::verify::{verify, Suite, Verdict};

pub fn run() -> Result<(), Box<dyn Error>> {
    let report = verify(Suite::Section3_2, 4)?;
    for c in &report.checks {
        let v = match &c.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped { .. } => "skipped",
        };
        println!("{v:8} {}", c.id);
    }
    let ra = report.get("s32.ra_cofactor").ok_or("missing check")?;
    println!("r a witness: {}", ra.witness["certificate"]["rhs"]);
    let json = serde_json::to_string(&report)?;
    println!("{} bytes of JSON, all passed: {}", json.len(), report.all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
