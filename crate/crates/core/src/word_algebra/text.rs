//! Parsers for the canonical text forms printed by `Display`.

use rug::Rational;

use super::poly::{RatPoly, SeriesPoly};
use super::ring::{CoeffRing, ExactSeries, Monomial, Rationals, Series, Var};
use super::word::Word;
use super::AlgebraError;

fn err(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(msg.into())
}

/// `3/2`, `-1`, or the parenthesized `(-1)`.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s).trim();
    Rational::parse(s).map(Rational::from).map_err(|e| err(format!("bad rational {s:?}: {e}")))
}

/// `1 - 2*T + 1/3*A*T` in the given series ring.
pub fn parse_series(ring: &ExactSeries, s: &str) -> Result<Series<Rational>, AlgebraError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(err("empty series"));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' if !current.trim().is_empty() => {
                pieces.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            }
            '-' => negative = !negative,
            '+' => {}
            _ => current.push(ch),
        }
    }
    pieces.push((negative, current));

    let mut out = ring.zero();
    for (negative, piece) in pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(err(format!("dangling sign in series {s:?}")));
        }
        let mut coeff = Rational::from(1);
        let mut mono = Monomial::ONE;
        for (i, factor) in piece.split('*').map(str::trim).enumerate() {
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                if i != 0 {
                    return Err(err(format!("coefficient must come first in {piece:?}")));
                }
                coeff = parse_rational(factor)?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u16>().map_err(|_| err(format!("bad exponent in {factor:?}")))?),
                None => (factor, 1),
            };
            let var = Var::ALL
                .into_iter()
                .find(|v| v.name() == name)
                .ok_or_else(|| err(format!("unknown series variable {name:?}")))?;
            if !ring.vars().contains(var) {
                return Err(AlgebraError::MissingVariable(var.name()));
            }
            mono = mono.mul(&Monomial::var(var, exp));
        }
        if negative {
            coeff = -coeff;
        }
        ring.add_assign(&mut out, &ring.term(mono, coeff));
    }
    Ok(out)
}

/// Split at top-level ` + ` separators, ignoring those inside parentheses.
fn split_terms(s: &str) -> Result<Vec<&str>, AlgebraError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err(format!("unbalanced parentheses in {s:?}")));
                }
            }
            b'+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err(format!("unbalanced parentheses in {s:?}")));
    }
    out.push(&s[start..]);
    Ok(out)
}

fn split_coeff_word(term: &str) -> Result<(&str, Word), AlgebraError> {
    let term = term.trim();
    match term.rsplit_once('*') {
        Some((c, w)) => Ok((c.trim(), w.trim().parse()?)),
        None => Ok(("1", term.parse()?)),
    }
}

/// `3/2*yxy + (-1)*yyx`; `0` is the zero polynomial.
pub fn parse_rat_poly(s: &str) -> Result<RatPoly, AlgebraError> {
    let mut p = RatPoly::zero(Rationals);
    if s.trim() == "0" {
        return Ok(p);
    }
    for term in split_terms(s)? {
        let (c, w) = split_coeff_word(term)?;
        p.add_term(w, parse_rational(c)?);
    }
    Ok(p)
}

/// `(1 - 2*T)*yx + (1)*y` over the given series ring.
pub fn parse_series_poly(ring: &ExactSeries, s: &str) -> Result<SeriesPoly, AlgebraError> {
    let mut p = SeriesPoly::zero(ring.clone());
    if s.trim() == "0" {
        return Ok(p);
    }
    for term in split_terms(s)? {
        let (c, w) = split_coeff_word(term)?;
        let inner = c.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(c);
        p.add_term(w, parse_series(ring, inner)?);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::ring::VarSet;
    use crate::word_algebra::ElemDisplay;

    #[test]
    fn rational_poly_round_trip() {
        for s in ["3/2*yxy + (-1)*yyx", "0", "1*1 + 2*x", "(-7/3)*yxxy"] {
            assert_eq!(parse_rat_poly(s).unwrap().to_string(), s);
        }
        assert!(parse_rat_poly("2*xz").is_err());
    }

    #[test]
    fn series_round_trip() {
        let ring = ExactSeries::new(Rationals, VarSet::ABT, 3);
        for s in ["1 - 2*T + 1/3*A*T", "-A^2*B", "1/2 + T^3", "0"] {
            let v = if s == "0" { ring.zero() } else { parse_series(&ring, s).unwrap() };
            assert_eq!(ElemDisplay(&ring, &v).to_string(), s);
        }
        let p = parse_series_poly(&ring, "(1 - 2*T)*yx + (-A)*y").unwrap();
        assert_eq!(p.to_string(), "(-A)*y + (1 - 2*T)*yx");
        assert!(parse_series(&ExactSeries::new(Rationals, VarSet::T, 2), "A").is_err());
    }
}
