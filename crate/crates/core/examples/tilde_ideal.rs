// The right ideal K = {f : (1 + u) f in wÃ} of Ã and its generators a, b.

use std::error::Error;

use downup::ideals::{
    extension_check, kernel_dimension_oracle, tilde_instance, verify_stably_free_ideal,
    verify_unimodular,
};
use downup::parse::parse_poly;

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = tilde_instance();
    let t = inst.gens.presentation().clone();
    let ok = verify_unimodular(
        &inst.r,
        &parse_poly("w", &t)?,
        &parse_poly("1 + mu*w", &t)?,
        &parse_poly("-mu*((1/mu)*u + 1)", &t)?,
    )?;
    println!("r(1 + mu w) + w(-mu sigma(r)) = 1: {ok}");

    for g in inst.gens.gens() {
        println!("r * ({g}) = {}", inst.r.nc_mul(g)?);
    }

    for bound in 2..=5 {
        let rep = verify_stably_free_ideal(&inst.r, inst.z, &inst.gens, bound)?;
        let oracle = kernel_dimension_oracle(&inst.r, inst.z, bound)?;
        println!(
            "bound {bound}: kernel {} oracle {oracle} generated {} proper {} passed {}",
            rep.kernel_dim,
            rep.generated_dim,
            rep.proper,
            rep.passed()
        );
    }
    println!("extension to A at bound 4: {}", extension_check(&inst.gens, 4)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
