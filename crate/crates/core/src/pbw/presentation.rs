use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::scalars::{FieldContext, Scalar};

use super::{Monomial, NcPoly, PbwError};

/// Sparse coefficient map over normal words.
pub type Terms = BTreeMap<Monomial, Scalar>;

/// `x_hi · x_lo -> constant · x_lo x_hi + tail`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub hi: usize,
    pub lo: usize,
    pub constant: Scalar,
    pub tail: Terms,
}

/// The parameter `gamma`, normalized to zero or one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gamma {
    Zero,
    One,
}

impl Gamma {
    pub fn scalar(self) -> Scalar {
        match self {
            Gamma::Zero => Scalar::zero(),
            Gamma::One => Scalar::one(),
        }
    }
}

impl TryFrom<&Scalar> for Gamma {
    type Error = PbwError;

    fn try_from(s: &Scalar) -> Result<Self, PbwError> {
        if s.is_zero() {
            Ok(Gamma::Zero)
        } else if s.is_one() {
            Ok(Gamma::One)
        } else {
            Err(PbwError::InvalidPresentation(format!(
                "gamma must be 0 or 1, got {s}"
            )))
        }
    }
}

type ProductCache = HashMap<(Monomial, usize), Arc<Vec<(Monomial, Scalar)>>>;

/// Ordered generators plus commutation rules defining a PBW algebra.
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    rules: Vec<Rule>,
    table: Vec<Vec<Option<usize>>>,
    field: FieldContext,
    signature: String,
    cache: Mutex<ProductCache>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({})", self.signature)
    }
}

fn render_terms(terms: &Terms, names: &[String]) -> String {
    let mut s = String::new();
    for (m, c) in terms.iter().rev() {
        s.push_str(&format!("[{}]{} ", c, m.render(names)));
    }
    s
}

impl Presentation {
    /// Validates rule shapes and the single overlap condition of every
    /// generator triple.
    pub fn new(
        name: &str,
        generators: &[&str],
        rules: Vec<Rule>,
    ) -> Result<Arc<Presentation>, PbwError> {
        let n = generators.len();
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let mut table = vec![vec![None; n]; n];
        let mut field = FieldContext::Rational;
        for (idx, r) in rules.iter().enumerate() {
            if r.hi >= n || r.lo >= r.hi {
                return Err(PbwError::InvalidPresentation(format!(
                    "rule ({}, {}) is not of the form x_j x_i with j > i",
                    r.hi, r.lo
                )));
            }
            if table[r.hi][r.lo].is_some() {
                return Err(PbwError::InvalidPresentation(format!(
                    "duplicate rule for {}·{}",
                    generators[r.hi], generators[r.lo]
                )));
            }
            if r.constant.is_zero() {
                return Err(PbwError::InvalidPresentation(format!(
                    "zero constant in rule for {}·{}",
                    generators[r.hi], generators[r.lo]
                )));
            }
            let mut lead = Monomial::generator(n, r.lo);
            lead = lead.with_delta(r.hi, 1);
            for (m, c) in r.tail.iter() {
                if m.len() != n || m.degree() > 2 || *m >= lead || c.is_zero() {
                    return Err(PbwError::InvalidPresentation(format!(
                        "tail term {} of rule {}·{} is not below {}",
                        m.render(&generators),
                        generators[r.hi],
                        generators[r.lo],
                        lead.render(&generators)
                    )));
                }
            }
            for c in std::iter::once(&r.constant).chain(r.tail.values()) {
                field = merge_field(field, c.context())?;
            }
            table[r.hi][r.lo] = Some(idx);
        }
        let mut signature = format!("{name}:{}|", generators.join(","));
        for r in &rules {
            signature.push_str(&format!(
                "{}{}:{}:{};",
                generators[r.hi],
                generators[r.lo],
                r.constant,
                render_terms(&r.tail, &generators)
            ));
        }
        let pres = Arc::new(Presentation {
            name: name.to_string(),
            generators,
            rules,
            table,
            field,
            signature,
            cache: Mutex::new(HashMap::new()),
        });
        pres.check_overlaps()?;
        Ok(pres)
    }

    fn check_overlaps(self: &Arc<Self>) -> Result<(), PbwError> {
        let n = self.ngens();
        for k in 0..n {
            for j in 0..k {
                for i in 0..j {
                    let (xk, xj, xi) = (
                        NcPoly::generator(self, k),
                        NcPoly::generator(self, j),
                        NcPoly::generator(self, i),
                    );
                    let left = xk.nc_mul(&xj)?.nc_mul(&xi)?;
                    let right = xk.nc_mul(&xj.nc_mul(&xi)?)?;
                    if left != right {
                        return Err(PbwError::InvalidPresentation(format!(
                            "overlap {}{}{} is ambiguous: {left} vs {right}",
                            self.generators[k], self.generators[j], self.generators[i]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    /// Structural identity: equal signatures mean interchangeable presentations.
    pub fn signature(&self) -> &str {
        &self.signature
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == symbol)
    }

    pub fn rule(&self, hi: usize, lo: usize) -> Option<&Rule> {
        self.table[hi][lo].map(|i| &self.rules[i])
    }

    /// Errors when `c` cannot be a coefficient over this presentation's field.
    pub fn check_coefficient(&self, c: &Scalar) -> Result<(), PbwError> {
        merge_field(self.field, c.context()).map(|_| ())
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().expect("cache poisoned").len()
    }

    /// Normal form of `m · x_k`.
    pub(crate) fn mul_mono_gen(&self, m: &Monomial, k: usize) -> Arc<Vec<(Monomial, Scalar)>> {
        let Some(j) = m.top().filter(|&j| j > k) else {
            return Arc::new(vec![(m.with_delta(k, 1), Scalar::one())]);
        };
        let key = (m.clone(), k);
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        let rest = m.with_delta(j, -1);
        let mut acc = Terms::new();
        let (c, tail) = match self.rule(j, k) {
            Some(r) => (r.constant.clone(), Some(&r.tail)),
            None => (Scalar::one(), None),
        };
        for (t, a) in self.mul_mono_gen(&rest, k).iter() {
            let ca = &c * a;
            for (t2, b) in self.mul_mono_gen(t, j).iter() {
                add_term(&mut acc, t2.clone(), &ca * b);
            }
        }
        if let Some(tail) = tail {
            for (tm, tc) in tail {
                for (t, a) in self.mul_mono_mono(&rest, tm) {
                    add_term(&mut acc, t, tc * &a);
                }
            }
        }
        let out: Arc<Vec<(Monomial, Scalar)>> = Arc::new(acc.into_iter().collect());
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(key, out.clone());
        out
    }

    /// Normal form of `a · b` for two normal words.
    pub(crate) fn mul_mono_mono(&self, a: &Monomial, b: &Monomial) -> Terms {
        let mut cur = Terms::new();
        cur.insert(a.clone(), Scalar::one());
        for k in b.word() {
            cur = self.mul_terms_gen(&cur, k);
        }
        cur
    }

    pub(crate) fn mul_terms_gen(&self, terms: &Terms, k: usize) -> Terms {
        let mut next = Terms::new();
        for (m, c) in terms {
            for (t, a) in self.mul_mono_gen(m, k).iter() {
                add_term(&mut next, t.clone(), c * a);
            }
        }
        next
    }
}

fn merge_field(a: FieldContext, b: FieldContext) -> Result<FieldContext, PbwError> {
    use FieldContext::*;
    match (a, b) {
        (Rational, x) | (x, Rational) => Ok(x),
        (x, y) if x == y => Ok(x),
        (x, y) => Err(PbwError::Scalar(crate::scalars::ScalarError::FieldMismatch {
            left: x,
            right: y,
        })),
    }
}

pub(crate) fn add_term(acc: &mut Terms, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn term(n: usize, exps: &[(usize, u32)], c: Scalar) -> (Monomial, Scalar) {
    let mut e = vec![0; n];
    for &(i, k) in exps {
        e[i] = k;
    }
    (Monomial::new(e), c)
}

/// Generators `u < w < d` with
/// `d·u -> lambda ud + w`, `w·u -> mu uw + gamma u`, `d·w -> mu wd + gamma d`.
pub fn make_downup_with(
    lambda: Scalar,
    mu: Scalar,
    gamma: Gamma,
) -> Result<Arc<Presentation>, PbwError> {
    let g = gamma.scalar();
    let mut rules = vec![Rule {
        hi: 2,
        lo: 0,
        constant: lambda.clone(),
        tail: [term(3, &[(1, 1)], Scalar::one())].into_iter().collect(),
    }];
    let mut wu = Terms::new();
    let mut dw = Terms::new();
    if !g.is_zero() {
        wu.insert(Monomial::generator(3, 0), g.clone());
        dw.insert(Monomial::generator(3, 2), g);
    }
    rules.push(Rule {
        hi: 1,
        lo: 0,
        constant: mu.clone(),
        tail: wu,
    });
    rules.push(Rule {
        hi: 2,
        lo: 1,
        constant: mu.clone(),
        tail: dw,
    });
    let name = match gamma {
        Gamma::Zero => "A0",
        Gamma::One => "A1",
    };
    let symbolic = lambda == Scalar::lambda() && mu == Scalar::mu();
    let name = if symbolic {
        name.to_string()
    } else {
        format!("{name}[lambda={lambda}, mu={mu}]")
    };
    Presentation::new(&name, &["u", "w", "d"], rules)
}

/// `A(gamma)` over ℚ(lambda, mu). Shared instances, so the product cache is reused.
pub fn make_downup(gamma: Gamma) -> Arc<Presentation> {
    static CELLS: [OnceLock<Arc<Presentation>>; 2] = [OnceLock::new(), OnceLock::new()];
    CELLS[gamma as usize]
        .get_or_init(|| {
            make_downup_with(Scalar::lambda(), Scalar::mu(), gamma)
                .expect("the down-up presentation is valid")
        })
        .clone()
}

/// `Ã(gamma)`: generators `u < w` with `w·u -> mu uw + gamma u`.
pub fn make_tilde(gamma: Gamma) -> Arc<Presentation> {
    static CELLS: [OnceLock<Arc<Presentation>>; 2] = [OnceLock::new(), OnceLock::new()];
    CELLS[gamma as usize]
        .get_or_init(|| {
            let mut tail = Terms::new();
            if gamma == Gamma::One {
                tail.insert(Monomial::generator(2, 0), Scalar::one());
            }
            let rules = vec![Rule {
                hi: 1,
                lo: 0,
                constant: Scalar::mu(),
                tail,
            }];
            let name = match gamma {
                Gamma::Zero => "tilde0",
                Gamma::One => "tilde1",
            };
            Presentation::new(name, &["u", "w"], rules).expect("the tilde presentation is valid")
        })
        .clone()
}

/// Looks up the presentation named on the command line.
pub fn presentation_by_name(name: &str) -> Option<Arc<Presentation>> {
    match name {
        "A0" => Some(make_downup(Gamma::Zero)),
        "A1" => Some(make_downup(Gamma::One)),
        "tilde" | "tilde1" => Some(make_tilde(Gamma::One)),
        "tilde0" => Some(make_tilde(Gamma::Zero)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tails() {
        let rules = vec![Rule {
            hi: 1,
            lo: 0,
            constant: Scalar::one(),
            tail: [term(2, &[(1, 2)], Scalar::one())].into_iter().collect(),
        }];
        assert!(matches!(
            Presentation::new("bad", &["x", "y"], rules),
            Err(PbwError::InvalidPresentation(_))
        ));
        let rules = vec![Rule {
            hi: 1,
            lo: 0,
            constant: Scalar::zero(),
            tail: Terms::new(),
        }];
        assert!(Presentation::new("bad", &["x", "y"], rules).is_err());
    }

    #[test]
    fn detects_overlap_ambiguity() {
        // y·x -> 2xy, z·x -> xz, z·y -> yz + x: (zy)x = 2xyz + x^2 but z(yx) = 2xyz + 2x^2
        let rules = vec![
            Rule {
                hi: 1,
                lo: 0,
                constant: Scalar::int(2),
                tail: Terms::new(),
            },
            Rule {
                hi: 2,
                lo: 0,
                constant: Scalar::one(),
                tail: Terms::new(),
            },
            Rule {
                hi: 2,
                lo: 1,
                constant: Scalar::one(),
                tail: [term(3, &[(0, 1)], Scalar::one())].into_iter().collect(),
            },
        ];
        assert!(Presentation::new("bad", &["x", "y", "z"], rules).is_err());
    }

    #[test]
    fn shared_instances() {
        assert!(Arc::ptr_eq(&make_downup(Gamma::One), &make_downup(Gamma::One)));
        assert_eq!(make_tilde(Gamma::One).ngens(), 2);
        assert!(presentation_by_name("A2").is_none());
    }
}
