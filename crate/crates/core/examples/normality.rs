// Normal elements: g z = z h_g for every generator g.

use std::error::Error;

use downup::ideals::is_normal;
use downup::parse::parse_poly;
use downup::pbw::{make_downup, make_downup_with, Gamma};
use downup::Scalar;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a0 = make_downup(Gamma::Zero);
    let z = parse_poly("d*u - mu*u*d", &a0)?;
    let rep = is_normal(&z, 1)?;
    println!("z = {z}: normal {}", rep.normal);
    for (g, h) in a0.generators().iter().zip(&rep.right_cofactors) {
        if let Some(h) = h {
            println!("  {g} z = z ({h})");
        }
    }

    let one = make_downup_with(Scalar::one(), Scalar::mu(), Gamma::Zero)?;
    let z1 = parse_poly("d*u - u*d", &one)?;
    println!("lambda = 1, z = {z1}: normal {}", is_normal(&z1, 1)?.normal);

    let a1 = make_downup(Gamma::One);
    let rep = is_normal(&parse_poly("u", &a1)?, 1)?;
    println!("u in A1: normal {}, failing {:?}", rep.normal, rep.failing);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
