use std::cmp::Ordering;
use std::fmt;

/// A PBW normal word `x_0^e_0 x_1^e_1 ... x_{n-1}^e_{n-1}`.
///
/// Ordered deglex: total degree first, then exponents compared from the
/// highest-precedence generator (last index) downwards.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Highest generator index with a positive exponent.
    pub fn top(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn mul_exps(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self >= o`.
    pub fn divisible_by(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a >= b)
    }

    /// `self - o`, assuming `divisible_by`.
    pub fn div_exps(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn with_delta(&self, i: usize, delta: i64) -> Monomial {
        let mut e = self.0.clone();
        e[i] = (i64::from(e[i]) + delta) as u32;
        Monomial(e)
    }

    /// Generator indices of the word, in order, with multiplicity.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// All monomials in `n` generators of total degree at most `bound`, ascending.
    pub fn all_up_to(n: usize, bound: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, bound, &mut cur, &mut out);
        out.sort();
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.iter().rev().cmp(o.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_prefers_high_generators() {
        let uw = Monomial::new(vec![1, 1, 0]);
        let w2 = Monomial::new(vec![0, 2, 0]);
        let ud = Monomial::new(vec![1, 0, 1]);
        let u3 = Monomial::new(vec![3, 0, 0]);
        assert!(uw < w2);
        assert!(w2 < ud);
        assert!(ud < u3);
    }

    #[test]
    fn enumerates_monomials() {
        assert_eq!(Monomial::all_up_to(2, 2).len(), 6);
        assert_eq!(Monomial::all_up_to(3, 6).len(), 84);
        let all = Monomial::all_up_to(3, 2);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn word_expansion() {
        assert_eq!(Monomial::new(vec![2, 0, 1]).word(), vec![0, 0, 2]);
        let names: Vec<String> = ["u", "w", "d"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Monomial::new(vec![2, 1, 0]).render(&names), "u^2*w");
        assert_eq!(Monomial::one(3).render(&names), "1");
    }
}
