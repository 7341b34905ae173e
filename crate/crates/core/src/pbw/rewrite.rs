//! Naive word rewriting, kept independent of the memoized product as an oracle.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::scalars::Scalar;

use super::{Monomial, NcPoly, PbwError, Presentation};

/// Words compare by length, then lexicographically by generator index.
fn word_less(a: &[usize], b: &[usize]) -> bool {
    (a.len(), a) < (b.len(), b)
}

/// Rewrites the word `x_{w_0} x_{w_1} ...` to normal form by repeatedly
/// applying the first applicable rule. Returns the result and the number of
/// rule applications. Panics if a rewrite ever fails to decrease the word.
pub fn rewrite_word(pres: &Arc<Presentation>, word: &[usize]) -> Result<(NcPoly, usize), PbwError> {
    let n = pres.ngens();
    let mut pending: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    pending.insert(word.to_vec(), Scalar::one());
    let mut done = NcPoly::zero(pres);
    let mut steps = 0usize;
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]) else {
            let mut e = vec![0u32; n];
            for &g in &w {
                e[g] += 1;
            }
            done = done.try_add(&NcPoly::monomial(pres, Monomial::new(e), c))?;
            continue;
        };
        steps += 1;
        let (hi, lo) = (w[p], w[p + 1]);
        let (k, tail) = match pres.rule(hi, lo) {
            Some(r) => (r.constant.clone(), r.tail.clone()),
            None => (Scalar::one(), Default::default()),
        };
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        let mut produced = vec![(swapped, c.try_mul(&k)?)];
        for (m, a) in tail {
            let mut nw = w[..p].to_vec();
            nw.extend(m.word());
            nw.extend_from_slice(&w[p + 2..]);
            produced.push((nw, c.try_mul(&a)?));
        }
        for (nw, a) in produced {
            assert!(word_less(&nw, &w), "rewrite step did not decrease {w:?}");
            let slot = pending.entry(nw).or_insert_with(Scalar::zero);
            *slot = slot.try_add(&a)?;
        }
    }
    Ok((done, steps))
}

/// `f · g` computed by expanding every product of terms into a word and rewriting.
pub fn rewrite_product(f: &NcPoly, g: &NcPoly) -> Result<NcPoly, PbwError> {
    let pres = f.presentation();
    let mut out = NcPoly::zero(pres);
    for (m1, c1) in f.terms() {
        for (m2, c2) in g.terms() {
            let mut w = m1.word();
            w.extend(m2.word());
            let (nf, _) = rewrite_word(pres, &w)?;
            out = out.try_add(&nf.scale(&c1.try_mul(c2)?)?)?;
        }
    }
    Ok(out)
}
