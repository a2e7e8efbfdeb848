use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rug::Rational;

use super::tpoly::TPoly;
use crate::word_algebra::{harmonic_index, Index, IndexCombo};

type HParts = Arc<BTreeMap<usize, IndexCombo>>;

fn memo() -> &'static RwLock<HashMap<Index, HParts>> {
    static MEMO: OnceLock<RwLock<HashMap<Index, HParts>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn one() -> Index {
    Index::new(vec![1]).expect("(1) is an index")
}

/// `k = Σ_j C_j * (1)^{*j}` with admissible combinations `C_j`.
fn decompose(k: &Index) -> HParts {
    if let Some(d) = memo().read().unwrap().get(k) {
        return d.clone();
    }
    let result = if k.is_admissible() {
        BTreeMap::from([(0, IndexCombo::single(k.clone()))])
    } else {
        // k = (u, 1); u*(1) contains k exactly t+1 times, t = trailing ones of u.
        let u = k.prefix(k.depth() - 1);
        let t = u.parts().iter().rev().take_while(|&&p| p == 1).count();
        let mut acc: BTreeMap<usize, IndexCombo> = BTreeMap::new();
        for (j, c) in decompose(&u).iter() {
            acc.entry(j + 1).or_insert_with(IndexCombo::zero).add_scaled(c, &Rational::from(1));
        }
        for (r, c) in harmonic_index(&u, &one()).terms() {
            if r == k {
                debug_assert_eq!(*c, t as i64 + 1);
                continue;
            }
            let neg = Rational::from(-c);
            for (j, p) in decompose(r).iter() {
                acc.entry(*j).or_insert_with(IndexCombo::zero).add_scaled(p, &neg);
            }
        }
        let inv = Rational::from((1, t as i64 + 1));
        acc.into_iter()
            .map(|(j, c)| (j, c.scaled(&inv)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };
    let result = Arc::new(result);
    memo().write().unwrap().insert(k.clone(), result.clone());
    result
}

/// `ζ*(k; T)` as a polynomial in `T` over admissible index combinations.
pub fn harmonic_decompose(k: &Index) -> TPoly<IndexCombo> {
    let d = decompose(k);
    let top = d.keys().max().copied().unwrap_or(0);
    TPoly::new((0..=top).map(|j| d.get(&j).cloned().unwrap_or_else(IndexCombo::zero)).collect())
}

/// Expand `Σ_j C_j * (1)^{*j}` back into an index combination.
pub fn harmonic_reassemble(p: &TPoly<IndexCombo>) -> IndexCombo {
    let mut out = IndexCombo::zero();
    let ones = IndexCombo::single(one());
    let mut power = IndexCombo::single(Index::empty());
    for c in p.coeffs() {
        out.add_scaled(&c.harmonic(&power), &Rational::from(1));
        power = power.harmonic(&ones);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> Index {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(harmonic_decompose(&k("(1)")).to_string(), "(1*())*T");
        assert_eq!(harmonic_decompose(&k("(2)")).to_string(), "(1*(2))");
        assert_eq!(harmonic_decompose(&k("(2,1)")).to_string(), "((-1)*(1,2) + (-1)*(3)) + (1*(2))*T");
    }

    #[test]
    fn reassembly_small() {
        for s in ["(1)", "(1,1)", "(2,1)", "(1,1,1)", "(3,1,1)", "(1,2,1)"] {
            let idx = k(s);
            assert_eq!(harmonic_reassemble(&harmonic_decompose(&idx)), IndexCombo::single(idx.clone()), "{s}");
        }
    }
}
