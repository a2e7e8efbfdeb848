use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rug::Rational;

use super::word::{Letter, Word};
use super::AlgebraError;

/// A finite, possibly empty, sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Index, AlgebraError> {
        if parts.contains(&0) {
            return Err(AlgebraError::Parse("index parts must be positive".into()));
        }
        Ok(Index(parts))
    }

    pub fn empty() -> Index {
        Index(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.last().is_none_or(|&k| k > 1)
    }

    pub fn reversed(&self) -> Index {
        Index(self.0.iter().rev().copied().collect())
    }

    pub fn prefix(&self, n: usize) -> Index {
        Index(self.0[..n].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Index {
        Index(self.0[start..].to_vec())
    }

    /// Componentwise `k_j + e_j`.
    pub fn shifted(&self, e: &[u32]) -> Index {
        assert_eq!(e.len(), self.depth());
        Index(self.0.iter().zip(e).map(|(k, e)| k + e).collect())
    }

    fn with_last(&self, last: u32) -> Index {
        let mut v = self.0.clone();
        v.push(last);
        Index(v)
    }

    /// Word `w_k = y x^{k_1-1} ... y x^{k_r-1} y` of the space `h^0`.
    pub fn h0_word(&self) -> Word {
        let mut w = index_to_word(self);
        w.push(Letter::Y);
        w
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Index{self}")
    }
}

impl FromStr for Index {
    type Err = AlgebraError;

    /// Accepts `(1,2,2)`, `()`, or the bare list `1,2,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = match (s.strip_prefix('('), s.strip_suffix(')')) {
            (Some(_), Some(_)) => &s[1..s.len() - 1],
            (None, None) => s,
            _ => return Err(AlgebraError::Parse(format!("unbalanced parentheses in index {s:?}"))),
        };
        if inner.trim().is_empty() {
            return Ok(Index::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| AlgebraError::Parse(format!("bad index part {:?}", p.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Index::new(parts)
    }
}

impl From<&[u32]> for Index {
    fn from(parts: &[u32]) -> Self {
        Index::new(parts.to_vec()).expect("index parts must be positive")
    }
}

impl<const N: usize> From<[u32; N]> for Index {
    fn from(parts: [u32; N]) -> Self {
        Index::from(&parts[..])
    }
}

/// `(k_1,...,k_r) -> y x^{k_1-1} ... y x^{k_r-1}`.
pub fn index_to_word(k: &Index) -> Word {
    let mut w = Word::empty();
    for &part in k.parts() {
        w.push(Letter::Y);
        for _ in 1..part {
            w.push(Letter::X);
        }
    }
    w
}

pub fn word_to_index(w: &Word) -> Result<Index, AlgebraError> {
    if w.first() == Some(Letter::X) {
        return Err(AlgebraError::NotIndexShaped(*w));
    }
    let mut parts = Vec::new();
    for l in w.letters() {
        match l {
            Letter::Y => parts.push(1),
            Letter::X => *parts.last_mut().expect("starts with y") += 1,
        }
    }
    Ok(Index(parts))
}

/// Inverse of [`Index::h0_word`]: recovers `k` from `w_k`.
pub fn h0_word_to_index(w: &Word) -> Result<Index, AlgebraError> {
    if w.first() != Some(Letter::Y) || w.last() != Some(Letter::Y) {
        return Err(AlgebraError::Shape(*w));
    }
    word_to_index(&w.prefix(w.len() - 1))
}

/// Dual index of an admissible index: write
/// `k = ({1}^{a_1-1}, b_1+1, ..., {1}^{a_h-1}, b_h+1)` and return
/// `({1}^{b_h-1}, a_h+1, ..., {1}^{b_1-1}, a_1+1)`.
pub fn dual_index(k: &Index) -> Result<Index, AlgebraError> {
    if !k.is_admissible() {
        return Err(AlgebraError::NotAdmissible(k.clone()));
    }
    let mut blocks = Vec::new();
    let mut ones = 0u32;
    for &part in k.parts() {
        if part == 1 {
            ones += 1;
        } else {
            blocks.push((ones + 1, part - 1));
            ones = 0;
        }
    }
    let mut out = Vec::with_capacity(k.weight() as usize);
    for &(a, b) in blocks.iter().rev() {
        out.extend(std::iter::repeat_n(1, (b - 1) as usize));
        out.push(a + 1);
    }
    Ok(Index(out))
}

/// Hoffman dual: write the parts as sums of ones and swap `+` with `,`.
pub fn hoffman_dual(k: &Index) -> Result<Index, AlgebraError> {
    if k.is_empty() {
        return Err(AlgebraError::EmptyIndex);
    }
    // Between consecutive ones there is either a plus (inside a part) or a
    // comma (between parts); the dual toggles every separator.
    let mut out = Vec::new();
    let mut current = 1u32;
    for (i, &part) in k.parts().iter().enumerate() {
        for _ in 1..part {
            out.push(current);
            current = 1;
        }
        if i + 1 < k.depth() {
            current += 1;
        }
    }
    out.push(current);
    Ok(Index(out))
}

/// All `(e_1, ..., e_parts)` with `e_i >= 0` summing to `total`, lexicographic.
pub fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Formal Q-linear combination of indices.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IndexCombo {
    terms: BTreeMap<Index, Rational>,
}

impl IndexCombo {
    pub fn zero() -> IndexCombo {
        IndexCombo::default()
    }

    pub fn single(k: Index) -> IndexCombo {
        let mut c = IndexCombo::zero();
        c.add_term(k, Rational::from(1));
        c
    }

    pub fn add_term(&mut self, k: Index, c: Rational) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &IndexCombo, c: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), Rational::from(v * c));
        }
    }

    pub fn scaled(&self, c: &Rational) -> IndexCombo {
        let mut out = IndexCombo::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, k: &Index) -> Rational {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Bilinear extension of [`harmonic_index`].
    pub fn harmonic(&self, other: &IndexCombo) -> IndexCombo {
        let mut out = IndexCombo::zero();
        for (k, a) in &self.terms {
            for (l, b) in &other.terms {
                out.add_scaled(&harmonic_index(k, l), &Rational::from(a * b));
            }
        }
        out
    }
}

impl fmt::Display for IndexCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            super::poly::write_rational_coeff(f, c)?;
            write!(f, "*{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexCombo[{self}]")
    }
}

/// Harmonic (quasi-shuffle) product of two indices.
///
/// Nested sums run over `n_1 < ... < n_r`, so the recursion peels the last
/// part of each factor: `(k,a)*(l,b) = (k*(l,b),a) + ((k,a)*l,b) + (k*l,a+b)`.
pub fn harmonic_index(k: &Index, l: &Index) -> IndexCombo {
    let mut memo = HashMap::new();
    harmonic_rec(k.parts(), l.parts(), &mut memo)
}

fn harmonic_rec<'a>(
    k: &'a [u32],
    l: &'a [u32],
    memo: &mut HashMap<(&'a [u32], &'a [u32]), IndexCombo>,
) -> IndexCombo {
    if k.is_empty() {
        return IndexCombo::single(Index(l.to_vec()));
    }
    if l.is_empty() {
        return IndexCombo::single(Index(k.to_vec()));
    }
    if let Some(hit) = memo.get(&(k, l)) {
        return hit.clone();
    }
    let (a, k0) = k.split_last().unwrap();
    let (b, l0) = l.split_last().unwrap();
    let mut out = IndexCombo::zero();
    for (rest, last) in [
        (harmonic_rec(k0, l, memo), *a),
        (harmonic_rec(k, l0, memo), *b),
        (harmonic_rec(k0, l0, memo), a + b),
    ] {
        for (idx, c) in rest.terms {
            out.add_term(idx.with_last(last), c);
        }
    }
    memo.insert((k, l), out.clone());
    out
}
