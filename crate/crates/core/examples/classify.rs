// Stable-rank bounds from (alpha, beta, gamma), and the witness table.

use std::error::Error;

use downup::classify::{classify, ClassifyError};
use downup::parse::parse_scalar;
use downup::table::{build_table, TableFixture};

pub fn run() -> Result<(), Box<dyn Error>> {
    for (a, b, g) in [("2", "-1", "-2"), ("2", "-1", "0"), ("5/2", "-1", "0"), ("4", "-4", "0"), ("2*sqrt(-1)", "1", "0"), ("1", "0", "0")] {
        match classify(&parse_scalar(a)?, &parse_scalar(b)?, &parse_scalar(g)?) {
            Ok(r) => println!("A({a}, {b}, {g}): Kdim {:?}, {}", r.krull_dim, r.bounds_text()),
            Err(ClassifyError::NonNoetherian(_)) => println!("A({a}, {b}, {g}): not noetherian"),
            Err(e) => return Err(e.into()),
        }
    }
    let table = build_table(&TableFixture::load(None)?)?;
    println!("{} table rows, all match: {}", table.rows.len(), table.all_match());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
