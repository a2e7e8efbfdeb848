use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// One of the two generators of the word algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(bit: u64) -> Letter {
        if bit & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word in the letters `x` and `y`, packed into a machine word.
///
/// The first letter occupies the most significant of the `len` used bits
/// (`x = 0`, `y = 1`), so comparing `(len, bits)` gives the degree-lexicographic
/// order with `x < y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    /// Longest representable word.
    pub const MAX_LEN: usize = 63;

    pub const fn empty() -> Word {
        Word { bits: 0, len: 0 }
    }

    pub fn letter(l: Letter) -> Word {
        Word { bits: l.bit(), len: 1 }
    }

    pub fn x() -> Word {
        Word::letter(Letter::X)
    }

    pub fn y() -> Word {
        Word::letter(Letter::Y)
    }

    /// `l^n`.
    pub fn power(l: Letter, n: usize) -> Word {
        assert!(n <= Self::MAX_LEN, "word length {n} exceeds {}", Self::MAX_LEN);
        let bits = if l == Letter::Y && n > 0 { (1u64 << n) - 1 } else { 0 };
        Word { bits, len: n as u8 }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Weight equals length.
    pub fn weight(&self) -> usize {
        self.len()
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        if i >= self.len() {
            return None;
        }
        Some(Letter::from_bit(self.bits >> (self.len() - 1 - i)))
    }

    pub fn first(&self) -> Option<Letter> {
        self.get(0)
    }

    pub fn last(&self) -> Option<Letter> {
        if self.is_empty() {
            None
        } else {
            Some(Letter::from_bit(self.bits))
        }
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| Letter::from_bit(self.bits >> (self.len() - 1 - i)))
    }

    pub fn push(&mut self, l: Letter) {
        assert!(self.len() < Self::MAX_LEN, "word length exceeds {}", Self::MAX_LEN);
        self.bits = (self.bits << 1) | l.bit();
        self.len += 1;
    }

    /// `l · self`.
    pub fn prepend(&self, l: Letter) -> Word {
        assert!(self.len() < Self::MAX_LEN, "word length exceeds {}", Self::MAX_LEN);
        Word {
            bits: self.bits | (l.bit() << self.len),
            len: self.len + 1,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let len = self.len() + other.len();
        assert!(len <= Self::MAX_LEN, "word length {len} exceeds {}", Self::MAX_LEN);
        if other.is_empty() {
            return *self;
        }
        Word {
            bits: (self.bits << other.len) | other.bits,
            len: len as u8,
        }
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        assert!(n <= self.len());
        Word {
            bits: if n == 0 { 0 } else { self.bits >> (self.len() - n) },
            len: n as u8,
        }
    }

    /// The letters from position `start` on.
    pub fn suffix_from(&self, start: usize) -> Word {
        assert!(start <= self.len());
        let n = self.len() - start;
        let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        Word {
            bits: self.bits & mask,
            len: n as u8,
        }
    }

    /// Letters `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        self.prefix(end).suffix_from(start)
    }

    pub fn reversed(&self) -> Word {
        if self.is_empty() {
            return *self;
        }
        Word {
            bits: self.bits.reverse_bits() >> (64 - self.len()),
            len: self.len,
        }
    }

    /// Exchange `x` and `y` letterwise.
    pub fn swapped(&self) -> Word {
        let mask = if self.is_empty() { 0 } else { u64::MAX >> (64 - self.len()) };
        Word {
            bits: !self.bits & mask,
            len: self.len,
        }
    }

    pub fn count(&self, l: Letter) -> usize {
        let ys = self.bits.count_ones() as usize;
        match l {
            Letter::Y => ys,
            Letter::X => self.len() - ys,
        }
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.count(l) > 0
    }

    /// Number of consecutive copies of `l` at the end of the word.
    pub fn trailing(&self, l: Letter) -> usize {
        let n = match l {
            Letter::Y => self.bits.trailing_ones() as usize,
            Letter::X => self.bits.trailing_zeros() as usize,
        };
        n.min(self.len())
    }

    /// Number of consecutive copies of `l` at the start of the word.
    pub fn leading(&self, l: Letter) -> usize {
        self.letters().take_while(|&c| c == l).count()
    }

    /// Empty, or starts with `y` and ends with `x` (the span `Q + y h x`).
    pub fn is_admissible(&self) -> bool {
        self.is_empty() || (self.first() == Some(Letter::Y) && self.last() == Some(Letter::X))
    }
}

impl Default for Word {
    fn default() -> Self {
        Word::empty()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = AlgebraError;

    /// Accepts a string over `{x, y}`; `""` and `"1"` denote the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        if s.len() > Self::MAX_LEN {
            return Err(AlgebraError::Parse(format!("word longer than {} letters", Self::MAX_LEN)));
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(AlgebraError::Parse(format!("unexpected letter {other:?} in word"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from_letters)
    }
}

/// All words of exactly `len` letters, in canonical order.
pub fn words_of_length(len: usize) -> impl Iterator<Item = Word> {
    assert!(len <= 20, "refusing to enumerate 2^{len} words");
    (0..1u64 << len).map(move |bits| Word { bits, len: len as u8 })
}

/// All words with at most `max_len` letters, in canonical order.
pub fn words_up_to(max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(words_of_length)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("yxxy").to_string(), "yxxy");
        assert_eq!(w("").to_string(), "1");
        assert_eq!(w("1"), Word::empty());
        assert!("yzx".parse::<Word>().is_err());
    }

    #[test]
    fn slicing() {
        let u = w("yxyyx");
        assert_eq!(u.prefix(2), w("yx"));
        assert_eq!(u.suffix_from(2), w("yyx"));
        assert_eq!(u.slice(1, 4), w("xyy"));
        assert_eq!(u.prefix(0), Word::empty());
        assert_eq!(u.suffix_from(5), Word::empty());
        assert_eq!(u.reversed(), w("xyyxy"));
        assert_eq!(u.swapped(), w("xyxxy"));
        assert_eq!(w("yx").concat(&w("xy")), w("yxxy"));
        assert_eq!(w("xy").prepend(Letter::Y), w("yxy"));
    }

    #[test]
    fn counting() {
        let u = w("xxyxyy");
        assert_eq!(u.trailing(Letter::Y), 2);
        assert_eq!(u.trailing(Letter::X), 0);
        assert_eq!(u.leading(Letter::X), 2);
        assert_eq!(u.count(Letter::X), 3);
        assert_eq!(Word::power(Letter::Y, 3), w("yyy"));
        assert_eq!(Word::power(Letter::Y, 3).trailing(Letter::Y), 3);
        assert_eq!(Word::empty().trailing(Letter::X), 0);
    }

    #[test]
    fn canonical_order_is_deglex() {
        let mut v = [w("yx"), w("y"), w("xy"), w(""), w("xxx"), w("x")];
        v.sort();
        let s: Vec<String> = v.iter().map(|u| u.to_string()).collect();
        assert_eq!(s, ["1", "x", "y", "xy", "yx", "xxx"]);
    }

    #[test]
    fn admissibility() {
        assert!(w("").is_admissible());
        assert!(w("yx").is_admissible());
        assert!(!w("y").is_admissible());
        assert!(!w("xyx").is_admissible());
        assert_eq!(words_of_length(3).count(), 8);
        assert_eq!(words_up_to(3).count(), 15);
    }
}
