//! Coefficient rings for word polynomials.
//!
//! A ring is a small descriptor value; elements are plain data and every
//! arithmetic operation goes through the descriptor. Word polynomials carry
//! their ring and refuse to combine with a polynomial over a different one.

use std::collections::BTreeMap;
use std::fmt;

use rug::Rational;

pub trait CoeffRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem);
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Self::Elem;
    /// Canonical text form; negative scalars are parenthesized.
    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    /// Elements are sums (series) and get parenthesized as coefficients.
    fn is_compound(&self) -> bool {
        false
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        self.add_assign(&mut out, b);
        out
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from(n))
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl CoeffRing for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::new()
    }
    fn one(&self) -> Rational {
        Rational::from(1)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        *a == 0
    }
    fn add_assign(&self, a: &mut Rational, b: &Rational) {
        *a += b;
    }
    fn neg(&self, a: &Rational) -> Rational {
        Rational::from(-a)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a * b)
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
    fn fmt_elem(&self, a: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::write_rational_coeff(f, a)
    }
}

/// Formal variables of the generating series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    T,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A, Var::B, Var::T];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::B => "B",
            Var::T => "T",
        }
    }
}

/// Subset of `{A, B, T}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u8);

impl VarSet {
    pub const NONE: VarSet = VarSet(0);
    pub const T: VarSet = VarSet(0b100);
    pub const AB: VarSet = VarSet(0b011);
    pub const ABT: VarSet = VarSet(0b111);

    pub fn of(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |m, v| m | (1 << v.slot())))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.slot()) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.iter().map(Var::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Exponent vector `A^a B^b T^t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 3]);

    pub fn new(a: u16, b: u16, t: u16) -> Monomial {
        Monomial([a, b, t])
    }

    pub fn var(v: Var, e: u16) -> Monomial {
        let mut m = [0; 3];
        m[v.slot()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> VarSet {
        VarSet::of(&Var::ALL.into_iter().filter(|v| self.exp(*v) > 0).collect::<Vec<_>>())
    }

    /// Clear the exponents of `vars`.
    pub fn without(&self, vars: VarSet) -> Monomial {
        let mut m = self.0;
        for v in vars.iter() {
            m[v.slot()] = 0;
        }
        Monomial(m)
    }
}

// Graded order; within a degree A-heavy monomials come first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Truncated series element: sparse map from monomials to base-ring elements.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E> Default for Series<E> {
    fn default() -> Self {
        Series { terms: BTreeMap::new() }
    }
}

impl<E> Series<E> {
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn get(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }
}

/// Multivariate power series over `base` in the variables `vars`, truncated
/// at total degree `maxdeg`.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesRing<R: CoeffRing> {
    base: R,
    vars: VarSet,
    maxdeg: u32,
}

/// Truncated series with exact rational coefficients.
pub type ExactSeries = SeriesRing<Rationals>;

impl<R: CoeffRing> SeriesRing<R> {
    pub fn new(base: R, vars: VarSet, maxdeg: u32) -> Self {
        SeriesRing { base, vars, maxdeg }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    /// `c · m`, or the zero series when `m` overflows the truncation.
    pub fn term(&self, m: Monomial, c: R::Elem) -> Series<R::Elem> {
        assert!(
            m.support().is_subset(self.vars),
            "monomial {m} uses variables outside {:?}",
            self.vars
        );
        let mut s = Series::default();
        if m.degree() <= self.maxdeg && !self.base.is_zero(&c) {
            s.terms.insert(m, c);
        }
        s
    }

    pub fn monomial(&self, m: Monomial) -> Series<R::Elem> {
        self.term(m, self.base.one())
    }

    pub fn constant(&self, c: R::Elem) -> Series<R::Elem> {
        self.term(Monomial::ONE, c)
    }

    /// `coefficient` of monomial `m`, zero if absent.
    pub fn coeff(&self, s: &Series<R::Elem>, m: &Monomial) -> R::Elem {
        s.terms.get(m).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn map_coeffs<S: CoeffRing>(
        &self,
        target: &SeriesRing<S>,
        s: &Series<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Series<S::Elem> {
        let mut out = Series::default();
        for (m, c) in &s.terms {
            let v = f(c);
            if !target.base.is_zero(&v) && m.degree() <= target.maxdeg {
                out.terms.insert(*m, v);
            }
        }
        out
    }

    /// Substitute zero for every variable in `vars`.
    pub fn set_zero(&self, s: &Series<R::Elem>, vars: VarSet) -> Series<R::Elem> {
        let mut out = Series::default();
        for (m, c) in &s.terms {
            if m.without(vars) == *m {
                out.terms.insert(*m, c.clone());
            }
        }
        out
    }

    /// Drop every term above total degree `d`.
    pub fn truncate(&self, s: &Series<R::Elem>, d: u32) -> Series<R::Elem> {
        Series {
            terms: s.terms.iter().filter(|(m, _)| m.degree() <= d).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }
}

impl<R: CoeffRing> CoeffRing for SeriesRing<R> {
    type Elem = Series<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Series::default()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.terms.is_empty()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        use std::collections::btree_map::Entry;
        for (m, c) in &b.terms {
            match a.terms.entry(*m) {
                Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                Entry::Occupied(mut e) => {
                    self.base.add_assign(e.get_mut(), c);
                    if self.base.is_zero(e.get()) {
                        e.remove();
                    }
                }
            }
        }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Series {
            terms: a.terms.iter().map(|(m, c)| (*m, self.base.neg(c))).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut acc: BTreeMap<Monomial, R::Elem> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            let da = ma.degree();
            if da > self.maxdeg {
                continue;
            }
            for (mb, cb) in &b.terms {
                if da + mb.degree() > self.maxdeg {
                    continue;
                }
                let p = self.base.mul(ca, cb);
                match acc.entry(ma.mul(mb)) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        self.base.add_assign(e.get_mut(), &p);
                    }
                }
            }
        }
        acc.retain(|_, c| !self.base.is_zero(c));
        Series { terms: acc }
    }

    fn from_rational(&self, q: &Rational) -> Self::Elem {
        self.constant(self.base.from_rational(q))
    }

    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, &self.base, a)
    }

    fn is_compound(&self) -> bool {
        true
    }
}

/// Text form `1 - 2*T + 1/3*A*T`.
pub(crate) fn write_series<R: CoeffRing>(
    f: &mut fmt::Formatter<'_>,
    base: &R,
    s: &Series<R::Elem>,
) -> fmt::Result {
    if s.terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (m, c)) in s.terms.iter().enumerate() {
        let text = ElemDisplay(base, c).to_string();
        let (negative, body) = match text.strip_prefix("(-").and_then(|t| t.strip_suffix(')')) {
            Some(inner) => (true, inner.to_string()),
            None => match text.strip_prefix('-') {
                Some(inner) => (true, inner.to_string()),
                None => (false, text),
            },
        };
        match (i, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if *m == Monomial::ONE {
            f.write_str(&body)?;
        } else if body == "1" {
            write!(f, "{m}")?;
        } else {
            write!(f, "{body}*{m}")?;
        }
    }
    Ok(())
}

pub(crate) struct ElemDisplay<'a, R: CoeffRing>(pub &'a R, pub &'a R::Elem);

impl<R: CoeffRing> fmt::Display for ElemDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_elem(self.1, f)
    }
}
