use std::collections::HashMap;

use super::index::{h0_word_to_index, harmonic_index, Index};
use super::poly::NcPoly;
use super::ring::CoeffRing;
use super::word::{Letter, Word};
use super::AlgebraError;

/// Shuffle of two words: every interleaving with its multiplicity.
///
/// Follows `u_1 w_1 ш u_2 w_2 = u_1 (w_1 ш u_2 w_2) + u_2 (u_1 w_1 ш w_2)`,
/// tabulated over suffix pairs.
pub fn shuffle_words(u: &Word, v: &Word) -> HashMap<Word, u64> {
    let (m, n) = (u.len(), v.len());
    if m == 0 || n == 0 {
        return HashMap::from([(u.concat(v), 1)]);
    }
    if n == 1 {
        return insert_letter(u, v.first().unwrap());
    }
    if m == 1 {
        return insert_letter(v, u.first().unwrap());
    }
    // row[j] holds the shuffle of u[i..] with v[j..] for the current i.
    let mut row: Vec<HashMap<Word, u64>> = (0..=n).map(|j| HashMap::from([(v.suffix_from(j), 1)])).collect();
    for i in (0..m).rev() {
        let ui = u.get(i).unwrap();
        let mut next: Vec<HashMap<Word, u64>> = vec![HashMap::new(); n + 1];
        next[n] = HashMap::from([(u.suffix_from(i), 1)]);
        for j in (0..n).rev() {
            let vj = v.get(j).unwrap();
            let mut cell = HashMap::with_capacity(row[j].len() + next[j + 1].len());
            for (w, c) in &row[j] {
                *cell.entry(w.prepend(ui)).or_insert(0) += c;
            }
            for (w, c) in &next[j + 1] {
                *cell.entry(w.prepend(vj)).or_insert(0) += c;
            }
            next[j] = cell;
        }
        row = next;
    }
    row.swap_remove(0)
}

fn insert_letter(u: &Word, l: Letter) -> HashMap<Word, u64> {
    let mut out = HashMap::with_capacity(u.len() + 1);
    for pos in 0..=u.len() {
        let w = u.prefix(pos).concat(&Word::letter(l)).concat(&u.suffix_from(pos));
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

/// Bilinear shuffle product.
pub fn shuffle<R: CoeffRing>(p: &NcPoly<R>, q: &NcPoly<R>) -> Result<NcPoly<R>, AlgebraError> {
    p.check_ring(q)?;
    let ring = p.ring();
    let mut out = NcPoly::zero(ring.clone());
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            let ab = ring.mul(a, b);
            for (w, c) in shuffle_words(u, v) {
                out.add_term(w, ring.mul(&ab, &ring.from_int(c as i64)));
            }
        }
    }
    Ok(out)
}

/// Split a word of `x^a h^0 x^b` shape into `(a, k, b)` with middle part `w_k`.
pub fn split_padded_h0(w: &Word) -> Result<(usize, Index, usize), AlgebraError> {
    if !w.contains(Letter::Y) {
        return Err(AlgebraError::Shape(*w));
    }
    let a = w.leading(Letter::X);
    let b = w.trailing(Letter::X);
    let k = h0_word_to_index(&w.slice(a, w.len() - b))?;
    Ok((a, k, b))
}

/// Symmetric harmonic product on `h y h`:
/// `x^{a1} w_k x^{b1} ∗̃ x^{a2} w_l x^{b2} = x^{a1+a2} w_{k*l} x^{b1+b2}`.
pub fn sym_harmonic<R: CoeffRing>(p: &NcPoly<R>, q: &NcPoly<R>) -> Result<NcPoly<R>, AlgebraError> {
    p.check_ring(q)?;
    let ring = p.ring();
    let right: Vec<_> = q
        .terms()
        .map(|(w, c)| split_padded_h0(w).map(|s| (s, c)))
        .collect::<Result<_, _>>()?;
    let mut out = NcPoly::zero(ring.clone());
    for (u, a) in p.terms() {
        let (a1, k, b1) = split_padded_h0(u)?;
        for ((a2, l, b2), b) in &right {
            let ab = ring.mul(a, b);
            if ring.is_zero(&ab) {
                continue;
            }
            let left = Word::power(Letter::X, a1 + a2);
            let tail = Word::power(Letter::X, b1 + b2);
            for (idx, c) in harmonic_index(&k, l).terms() {
                let w = left.concat(&idx.h0_word()).concat(&tail);
                out.add_term(w, ring.mul(&ab, &ring.from_rational(c)));
            }
        }
    }
    Ok(out)
}
