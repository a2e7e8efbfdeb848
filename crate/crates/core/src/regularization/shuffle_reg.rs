use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use rug::{Integer, Rational};

use super::tpoly::TPoly;
use crate::word_algebra::{shuffle, shuffle_words, tau, Letter, RatPoly, Rationals, Word};

/// `w = Σ_{i,j} x^i ш parts[i,j] ш y^j` with admissible `parts[i,j]`.
///
/// The words `x^i` and `y^j` are the divided shuffle powers
/// `x^{шi}/i!` and `y^{шj}/j!`.
#[derive(Clone, PartialEq, Debug)]
pub struct ShuffleDecomposition {
    pub source: Word,
    pub parts: BTreeMap<(usize, usize), RatPoly>,
}

impl ShuffleDecomposition {
    pub fn part(&self, i: usize, j: usize) -> RatPoly {
        self.parts.get(&(i, j)).cloned().unwrap_or_else(|| RatPoly::zero(Rationals))
    }

    /// Shuffle the parts back together.
    pub fn reassemble(&self) -> RatPoly {
        let mut out = RatPoly::zero(Rationals);
        for (&(i, j), p) in &self.parts {
            let xi = RatPoly::rational(Word::power(Letter::X, i));
            let yj = RatPoly::rational(Word::power(Letter::Y, j));
            let term = shuffle(&shuffle(&xi, p).unwrap(), &yj).unwrap();
            out = &out + &term;
        }
        out
    }
}

impl fmt::Display for ShuffleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, ((i, j), p)) in self.parts.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({i},{j}): {p}")?;
        }
        f.write_str("}")
    }
}

type YParts = Arc<BTreeMap<usize, RatPoly>>;

fn y_memo() -> &'static RwLock<HashMap<Word, YParts>> {
    static MEMO: OnceLock<RwLock<HashMap<Word, YParts>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `w = Σ_j P_j ш y^j` with every word of `P_j` not ending in `y`.
///
/// For `w = u y` with `t` trailing `y`s in `u`, the word `w` occurs `t+1`
/// times in `u ш y`; every other term has fewer trailing `y`s, so
/// `w = (u ш y − rest) / (t+1)` recurses.
fn y_decomposition(w: &Word) -> YParts {
    if let Some(d) = y_memo().read().unwrap().get(w) {
        return d.clone();
    }
    let result = if w.last() != Some(Letter::Y) {
        BTreeMap::from([(0, RatPoly::rational(*w))])
    } else {
        let u = w.prefix(w.len() - 1);
        let t = u.trailing(Letter::Y);
        let mut acc: BTreeMap<usize, RatPoly> = BTreeMap::new();
        for (j, p) in y_decomposition(&u).iter() {
            add_part(&mut acc, j + 1, &p.scaled_rational(&Rational::from(*j as i64 + 1)));
        }
        for (r, c) in shuffle_words(&u, &Word::y()) {
            if r == *w {
                debug_assert_eq!(c as usize, t + 1);
                continue;
            }
            let c = Rational::from(-(c as i64));
            for (j, p) in y_decomposition(&r).iter() {
                add_part(&mut acc, *j, &p.scaled_rational(&c));
            }
        }
        let inv = Rational::from((1, t as i64 + 1));
        acc.into_iter()
            .map(|(j, p)| (j, p.scaled_rational(&inv)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    };
    let result = Arc::new(result);
    y_memo().write().unwrap().insert(*w, result.clone());
    result
}

fn add_part<K: Ord>(acc: &mut BTreeMap<K, RatPoly>, key: K, p: &RatPoly) {
    let slot = acc.entry(key).or_insert_with(|| RatPoly::zero(Rationals));
    *slot = &*slot + p;
}

/// Canonical decomposition isolating leading `x`s and trailing `y`s.
pub fn double_shuffle_decompose(w: &Word) -> ShuffleDecomposition {
    let mut parts: BTreeMap<(usize, usize), RatPoly> = BTreeMap::new();
    for (j, pj) in y_decomposition(w).iter() {
        for (v, c) in pj.terms() {
            // Leading x's of v are trailing y's of τ(v).
            let tv = v.reversed().swapped();
            for (i, r) in y_decomposition(&tv).iter() {
                add_part(&mut parts, (*i, *j), &tau(r).scaled_rational(c));
            }
        }
    }
    parts.retain(|_, p| !p.is_zero());
    ShuffleDecomposition { source: *w, parts }
}

/// Linear extension of `w ↦ parts[0,0]`, the regularization with `Z^ш(x) = Z^ш(y) = 0`.
pub fn zsh_symbolic(p: &RatPoly) -> RatPoly {
    let mut out = RatPoly::zero(Rationals);
    for (w, c) in p.terms() {
        if w.is_admissible() {
            out.add_term(*w, c.clone());
            continue;
        }
        out = &out + &double_shuffle_decompose(w).part(0, 0).scaled_rational(c);
    }
    out
}

/// `ζ^ш(w; T)`: the coefficient of `T^j` is `parts[0,j] / j!`.
pub fn zsh_poly(w: &Word) -> TPoly<RatPoly> {
    let d = double_shuffle_decompose(w);
    let top = d.parts.keys().filter(|(i, _)| *i == 0).map(|(_, j)| *j).max();
    let Some(top) = top else { return TPoly::zero() };
    let coeffs = (0..=top)
        .map(|j| {
            let fact = Integer::from(Integer::factorial(j as u32));
            d.part(0, j).scaled_rational(&Rational::from((Integer::from(1), fact)))
        })
        .collect();
    TPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::words_up_to;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(double_shuffle_decompose(&w("yx")).to_string(), "{(0,0): 1*yx}");
        assert_eq!(double_shuffle_decompose(&w("y")).to_string(), "{(0,1): 1*1}");
        assert_eq!(double_shuffle_decompose(&w("yxy")).to_string(), "{(0,0): (-2)*yyx, (0,1): 1*yx}");
        assert_eq!(double_shuffle_decompose(&w("x")).to_string(), "{(1,0): 1*1}");
    }

    #[test]
    fn reassembly_small() {
        for u in words_up_to(5) {
            let d = double_shuffle_decompose(&u);
            assert_eq!(d.reassemble(), RatPoly::rational(u), "{u}");
            for p in d.parts.values() {
                assert!(p.words().all(Word::is_admissible), "{u}: {p}");
            }
        }
    }

    #[test]
    fn zsh_examples() {
        assert!(zsh_symbolic(&RatPoly::rational(w("x"))).is_zero());
        assert_eq!(zsh_symbolic(&RatPoly::rational(w("yx"))).to_string(), "1*yx");
        assert_eq!(zsh_symbolic(&RatPoly::rational(w("yxy"))).to_string(), "(-2)*yyx");
        assert_eq!(zsh_poly(&w("y")).to_string(), "(1*1)*T");
        assert_eq!(zsh_poly(&w("yy")).to_string(), "(1/2*1)*T^2");
        assert_eq!(zsh_poly(&w("yxy")).to_string(), "((-2)*yyx) + (1*yx)*T");
    }
}
