// PBW normal forms in A(alpha, beta, gamma) with generators u < w < d.

use std::error::Error;

use downup::parse::parse_poly;
use downup::pbw::{make_downup, make_tilde, rewrite_word, Gamma, NcPoly};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a1 = make_downup(Gamma::One);
    for src in ["d*u", "w*u", "d*w", "d^2*u", "(d*u - lambda*u*d)^2"] {
        println!("A1: {src} = {}", parse_poly(src, &a1)?);
    }

    let a0 = make_downup(Gamma::Zero);
    let f = parse_poly("d*u*w", &a0)?;
    let g = parse_poly("u + w^2", &a0)?;
    let fg = f.nc_mul(&g)?;
    let names = a0.generators();
    println!("A0: (duw)(u + w^2) = {fg}");
    println!("    leading monomial {}, d-degree {}", fg.lexp()?.render(names), fg.d_degree());

    let (nf, steps) = rewrite_word(&a1, &[2, 2, 1, 0])?;
    println!("naive rewriting of d d w u: {steps} steps, {nf}");

    let t = make_tilde(Gamma::One);
    let w = NcPoly::generator_named(&t, "w")?;
    let u = NcPoly::generator_named(&t, "u")?;
    println!("tilde: w u = {}", w.nc_mul(&u)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
