// The expression language: parse, normalize, print, and report errors with positions.

use std::error::Error;

use downup::parse::{parse_expr, parse_poly};
use downup::pbw::presentation_by_name;

pub fn run() -> Result<(), Box<dyn Error>> {
    let tilde = presentation_by_name("tilde").ok_or("tilde")?;
    let f = parse_poly("(1+u)*(w^2 + (1/mu)*w)", &tilde)?;
    let g = parse_poly("w*(w + (1/mu)*u*w + 1/mu)", &tilde)?;
    println!("{f}\n  equals w(w + uw/mu + 1/mu): {}", f == g);
    println!("round trip: {}", parse_poly(&f.to_canonical(), &tilde)? == f);

    for bad in ["u*(w + ", "u ^ -1", "2 $ u"] {
        if let Err(e) = parse_expr(bad) {
            println!("{bad:?}: {e}");
        }
    }
    if let Err(e) = parse_poly("d*u", &tilde) {
        println!("d in tilde: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
