// Exact scalars: rationals, quadratic fields and ℚ(lambda, mu).

use std::error::Error;

use downup::scalars::{char_roots, is_root_of_unity};
use downup::Scalar;

pub fn run() -> Result<(), Box<dyn Error>> {
    let lam = Scalar::lambda();
    let mu = Scalar::mu();
    let x = lam.try_add(&mu)?.try_div(&lam.try_mul(&mu)?)?;
    println!("(lambda + mu)/(lambda mu) = {x}");

    let i = Scalar::sqrt_int(-1);
    println!("i^2 = {}", i.try_mul(&i)?);

    for (alpha, beta) in [(Scalar::ratio(5, 2), Scalar::int(-1)), (Scalar::zero(), Scalar::int(-1)), (Scalar::int(1), Scalar::int(1))] {
        let r = char_roots(&alpha, &beta)?;
        println!(
            "t^2 - ({alpha}) t - ({beta}): lambda = {}, mu = {} in {}, orders {:?} {:?}",
            r.lambda,
            r.mu,
            r.field,
            is_root_of_unity(&r.lambda)?,
            is_root_of_unity(&r.mu)?
        );
    }

    match Scalar::sqrt_int(2).try_add(&Scalar::sqrt_int(3)) {
        Ok(v) => println!("unexpected {v}"),
        Err(e) => println!("sqrt(2) + sqrt(3): {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
