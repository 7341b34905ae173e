//! PBW algebras given by ordered generators and commutation rules.

mod monomial;
mod morphism;
mod ore;
mod poly;
mod presentation;
mod rewrite;

use thiserror::Error;

use crate::scalars::ScalarError;

pub use monomial::Monomial;
pub use morphism::{
    defining_relations, filtration_check, gwa_relations, random_coefficient, random_poly,
    verify_morphism, verify_relations, MorphismCheck, Relation,
};
pub use ore::{
    delta_by_commutator, ore_tower, p_t, sigma_delta_eval, validate_leibniz, OreConvention,
    OreData, OreStep,
};
pub use poly::NcPoly;
pub use presentation::{
    make_downup, make_downup_with, make_tilde, presentation_by_name, Gamma, Presentation, Rule,
    Terms,
};
pub use rewrite::{rewrite_product, rewrite_word};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PbwError {
    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("not in the coefficient ring: {0}")]
    NotInCoefficientRing(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalars::Scalar;

    fn p(src: &str, g: Gamma) -> NcPoly {
        parse_poly(src, &make_downup(g)).unwrap()
    }

    #[test]
    fn basic_rules() {
        assert_eq!(p("d*u", Gamma::One), p("lambda*u*d + w", Gamma::One));
        assert_eq!(p("w*u", Gamma::One), p("mu*u*w + u", Gamma::One));
        assert_eq!(p("d*w", Gamma::Zero), p("mu*w*d", Gamma::Zero));
        assert_eq!(p("d*u", Gamma::One).to_canonical(), "lambda*u*d + w");
    }

    #[test]
    fn canonical_text_round_trips() {
        let f = p("(1/2)*d^2*u - lambda*w + 3 - (lambda + mu)/mu*u^2", Gamma::One);
        let again = p(&f.to_canonical(), Gamma::One);
        assert_eq!(f, again);
    }

    #[test]
    fn leading_terms() {
        let t = make_tilde(Gamma::One);
        let a = parse_poly("(w + 1/mu)*(1 + u) - 1/mu", &t).unwrap();
        let names = t.generators();
        assert_eq!(a.lexp().unwrap().render(names), "u*w");
        assert!(NcPoly::zero(&t).leading().is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = NcPoly::one(&make_tilde(Gamma::One));
        let b = NcPoly::one(&make_downup(Gamma::One));
        assert!(matches!(a.nc_mul(&b), Err(PbwError::PresentationMismatch(_))));
        assert!(parse_poly("d", &make_tilde(Gamma::One)).is_err());
    }

    #[test]
    fn ore_data_of_a0() {
        let a0 = make_downup(Gamma::Zero);
        let ore = OreData::from_presentation(&a0, 2).unwrap();
        let lam_inv = Scalar::lambda().try_inv().unwrap();
        assert_eq!(ore.sigma[0], lam_inv);
        let u = NcPoly::generator(&a0, 0);
        let w = NcPoly::generator(&a0, 1);
        let (_, du) = sigma_delta_eval(&ore, &u).unwrap();
        assert_eq!(du, w.scale(&lam_inv.neg_ref()).unwrap());
        assert!(OreData::from_presentation(&make_downup(Gamma::One), 2).is_err());
    }

    #[test]
    fn rewriting_oracle_agrees() {
        let a1 = make_downup(Gamma::One);
        let (nf, steps) = rewrite_word(&a1, &[2, 2, 0, 1, 0]).unwrap();
        let direct = p("d^2*u*w*u", Gamma::One);
        assert_eq!(nf, direct);
        assert!(steps > 0);
    }
}
