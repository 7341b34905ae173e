// The right ideal K = {f : (1 + uw) f in dA} of A(alpha, beta, 0).

use std::error::Error;

use downup::ideals::{downup_instance, membership_certificate, right_divide, verify_stably_free_ideal};
use downup::parse::parse_poly;

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = downup_instance();
    let a0 = inst.gens.presentation().clone();
    for g in inst.gens.gens() {
        let (cert, q) = membership_certificate(&inst.r, "d", g, 3)?;
        println!("r * ({g}) = d * ({q})  [{}]", cert.verdict);
    }

    let f = parse_poly("d^2*u + (d*u*w + (mu/lambda)*w^2 + mu^2*d)*w", &a0)?;
    let red = right_divide(&f, &inst.gens)?;
    println!("f = a q1 + b q2 + h with q1 = {}, q2 = {}, h = {}", red.quotients[0], red.quotients[1], red.remainder);

    let rep = verify_stably_free_ideal(&inst.r, inst.z, &inst.gens, 4)?;
    println!("bound 4: kernel {} generated {} remainder of 1: {}", rep.kernel_dim, rep.generated_dim, rep.remainder_of_one);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
