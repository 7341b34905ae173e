// The automorphism phi of K[x, y], the sequence s_n and point orbits.

use std::error::Error;

use downup::gwa::{
    eigenvector_check, fit_closed_form, lemma_l4_check, orbit_analysis, phi_apply, s_closed,
    s_prefix, AffineAuto, CommPoly2, Point, RecurrenceParams,
};
use downup::Scalar;

pub fn run() -> Result<(), Box<dyn Error>> {
    let phi = AffineAuto::new(Scalar::ratio(5, 2), Scalar::int(-1), Scalar::zero());
    println!("phi(x^2 y) = {}", phi_apply(&phi, &CommPoly2::term(2, 1, Scalar::one()), 1)?);

    let p = RecurrenceParams::from_auto(&phi, &Point::new(Scalar::zero(), Scalar::one()));
    let c = fit_closed_form(&p)?;
    println!("c1 = {}, c2 = {}, lambda = {}, mu = {}", c.c1, c.c2, c.lambda, c.mu);
    let seq = s_prefix(&p, 6)?;
    for (n, s) in seq.iter().enumerate() {
        println!("  s_{n} = {s} = {}", s_closed(&c, n as u32)?);
    }

    let fixed = AffineAuto::new(Scalar::int(3), Scalar::int(-2), Scalar::zero());
    println!("eigenvectors for (3, -2, 0): {}", eigenvector_check(&fixed)?);
    println!("lemma check mu = 2, s = 1, N = 30: {}", lemma_l4_check(&Scalar::int(2), &Scalar::one(), 30)?);

    let rot = AffineAuto::new(Scalar::zero(), Scalar::int(-1), Scalar::zero());
    let rep = orbit_analysis(&rot, &Point::new(Scalar::one(), Scalar::sqrt_int(-1)), 8)?;
    println!("orbit of (1, i) under (0, -1, 0): period {:?}", rep.period);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
