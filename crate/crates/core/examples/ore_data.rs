// Skew data sigma, delta of A(alpha, beta, 0) over K[u][w] and the tower K[u][w; theta][d; sigma, delta].

use std::error::Error;

use downup::parse::parse_poly;
use downup::pbw::{delta_by_commutator, make_downup, p_t, verify_morphism, Gamma, OreData};
use downup::verify::l2_tower;
use downup::Scalar;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a0 = make_downup(Gamma::Zero);
    let ore = OreData::from_presentation(&a0, 2)?;
    println!("sigma on u, w: {:?}", ore.sigma.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for t in 1..=4 {
        let ut = parse_poly(&format!("u^{t}"), &a0)?;
        println!("delta(u^{t}) = {}   (commutator: {})", ore.delta(&ut)?, delta_by_commutator(&ore, &ut)?);
    }
    let li = Scalar::lambda().try_inv()?;
    println!("p_3(1/lambda, mu) = {}", p_t(&li, &Scalar::mu(), 3));

    let tower = l2_tower()?;
    let images = vec![
        parse_poly("u", &a0)?,
        parse_poly("d*u - lambda*u*d", &a0)?,
        parse_poly("d", &a0)?,
    ];
    let chk = verify_morphism(&tower, &images)?;
    println!("tower -> A0: ok = {}, relations checked = {}", chk.ok, chk.checked);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
