//! Expression language for indices, words and the operators on them.
//!
//! ```text
//! expr    := operand (("sh" | "st" | "sst") operand)*
//! operand := index | word | "(" expr ")" | name "(" args ")"
//! index   := "(" [int ("," int)*] ")"
//! word    := '"' [xy]* '"'
//! ```
//!
//! The infix products associate to the left and share one precedence level.

use std::fmt;

use mzvkit::word_algebra::{GenMap, Index, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("type error at line {line}, column {column}: {message}")]
    Type { line: usize, column: usize, message: String },
}

impl DslError {
    pub fn column(&self) -> usize {
        match self {
            DslError::Syntax { column, .. } | DslError::Type { column, .. } => *column,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    IndexLit(Index),
    WordLit(Word),
    Dual(Box<Expr>),
    HDual(Box<Expr>),
    Zeta(Box<Expr>),
    ZetaSh(Box<Expr>),
    ZetaRS(Box<Expr>),
    Shuffle(Box<Expr>, Box<Expr>),
    Harmonic(Box<Expr>, Box<Expr>),
    SymHarmonic(Box<Expr>, Box<Expr>),
    Tau(Box<Expr>),
    Phi(Box<Expr>),
    GenMap(GenMap, Box<Expr>, u32),
    SeriesTrunc(Box<Expr>, u32),
}

/// Static type of an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ty {
    Index,
    /// Rational combination of indices.
    IndexCombo,
    /// Rational combination of words.
    Poly,
    /// Combination of words with coefficients in `Q[[T]]`.
    Series,
    Scalar,
    /// Numeric series in `T`.
    ScalarSeries,
}

impl Ty {
    pub fn name(self) -> &'static str {
        match self {
            Ty::Index => "index",
            Ty::IndexCombo => "index combination",
            Ty::Poly => "word polynomial",
            Ty::Series => "word series",
            Ty::Scalar => "number",
            Ty::ScalarSeries => "number series",
        }
    }

    fn is_indexlike(self) -> bool {
        matches!(self, Ty::Index | Ty::IndexCombo)
    }

    fn is_wordlike(self) -> bool {
        matches!(self, Ty::Poly | Ty::Series)
    }
}

impl Expr {
    pub fn ty(&self) -> Ty {
        match self {
            Expr::IndexLit(_) | Expr::Dual(_) | Expr::HDual(_) => Ty::Index,
            Expr::Harmonic(..) => Ty::IndexCombo,
            Expr::WordLit(_) => Ty::Poly,
            Expr::Zeta(_) => Ty::Scalar,
            Expr::ZetaSh(e) | Expr::ZetaRS(e) => {
                if e.ty() == Ty::Series {
                    Ty::ScalarSeries
                } else {
                    Ty::Scalar
                }
            }
            Expr::Shuffle(a, b) | Expr::SymHarmonic(a, b) => {
                if a.ty() == Ty::Series || b.ty() == Ty::Series {
                    Ty::Series
                } else {
                    Ty::Poly
                }
            }
            Expr::Tau(e) | Expr::Phi(e) => e.ty(),
            Expr::GenMap(..) | Expr::SeriesTrunc(..) => Ty::Series,
        }
    }
}

/// Function names and their one-argument constructors.
const UNARY: [&str; 7] = ["dual", "hdual", "zeta", "zeta_sh", "zrs", "tau", "phi"];

fn is_function(name: &str) -> bool {
    UNARY.contains(&name) || name == "trunc" || GenMap::from_name(name).is_some()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Int(u32),
    Str(Word),
    Ident(String),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Str(w) => format!("word \"{}\"", word_text(w)),
            Tok::Ident(s) => format!("name {s:?}"),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, DslError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    let syntax = |pos: Pos, message: String| DslError::Syntax { line: pos.line, column: pos.column, message };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            ',' => {
                i += 1;
                Tok::Comma
            }
            '"' => {
                i += 1;
                let mut letters = Vec::new();
                loop {
                    let here = Pos { line, column: column + (i - start) };
                    match chars.get(i) {
                        None => return Err(syntax(pos, "unterminated word literal".into())),
                        Some('"') => break,
                        Some('x') => letters.push(Letter::X),
                        Some('y') => letters.push(Letter::Y),
                        Some(other) => return Err(syntax(here, format!("unexpected letter {other:?} in word"))),
                    }
                    i += 1;
                }
                i += 1;
                if letters.len() > Word::MAX_LEN {
                    return Err(syntax(pos, format!("word longer than {} letters", Word::MAX_LEN)));
                }
                Tok::Str(Word::from_letters(letters))
            }
            c if c.is_ascii_digit() => {
                while chars.get(i).is_some_and(char::is_ascii_digit) {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n: u32 = text.parse().map_err(|_| syntax(pos, format!("integer {text} out of range")))?;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while chars.get(i).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..i].iter().collect())
            }
            other => return Err(syntax(pos, format!("unexpected character {other:?}"))),
        };
        column += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, DslError> {
        let p = self.pos();
        Err(DslError::Syntax { line: p.line, column: p.column, message: message.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, DslError> {
        self.syntax(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), DslError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(wanted)
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.operand()?;
        while let Tok::Ident(op) = self.peek().clone() {
            let pos = self.pos();
            let build: fn(Box<Expr>, Box<Expr>) -> Expr = match op.as_str() {
                "sh" => Expr::Shuffle,
                "st" => Expr::Harmonic,
                "sst" => Expr::SymHarmonic,
                _ => return self.unexpected("'sh', 'st', 'sst' or end of expression"),
            };
            self.bump();
            let rhs = self.operand()?;
            let e = build(Box::new(lhs), Box::new(rhs));
            check_types(&e, pos)?;
            lhs = e;
        }
        Ok(lhs)
    }

    /// Integers up to the closing parenthesis, which is consumed.
    fn int_list(&mut self) -> Result<Index, DslError> {
        let start = self.pos();
        let mut parts = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                let Tok::Int(n) = *self.peek() else { return self.unexpected("an integer") };
                parts.push(n);
                self.bump();
                match self.peek() {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RParen => break,
                    _ => return self.unexpected("',' or ')'"),
                }
            }
        }
        self.bump();
        Index::new(parts).map_err(|e| DslError::Syntax { line: start.line, column: start.column, message: e.to_string() })
    }

    fn operand(&mut self) -> Result<Expr, DslError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                if matches!(self.peek(), Tok::Int(_) | Tok::RParen) {
                    return Ok(Expr::IndexLit(self.int_list()?));
                }
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Str(w) => {
                self.bump();
                Ok(Expr::WordLit(w))
            }
            Tok::Ident(name) => {
                if !is_function(&name) {
                    return self.syntax(format!("unknown function {name:?}"));
                }
                let pos = self.pos();
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let e = self.call(&name)?;
                check_types(&e, pos)?;
                Ok(e)
            }
            _ => self.unexpected("an index, a word or a function"),
        }
    }

    fn call(&mut self, name: &str) -> Result<Expr, DslError> {
        if let Some(m) = GenMap::from_name(name) {
            let arg = self.expr()?;
            let d = self.degree_arg()?;
            return Ok(Expr::GenMap(m, Box::new(arg), d));
        }
        if name == "trunc" {
            let arg = self.expr()?;
            let d = self.degree_arg()?;
            return Ok(Expr::SeriesTrunc(Box::new(arg), d));
        }
        let bare_index = matches!(name, "dual" | "hdual" | "zeta" | "zeta_sh" | "zrs")
            && (matches!(self.peek(), Tok::RParen) || matches!((self.peek(), self.peek2()), (Tok::Int(_), Tok::Comma | Tok::RParen)));
        let arg = if bare_index {
            Expr::IndexLit(self.int_list()?)
        } else {
            let e = self.expr()?;
            self.expect(Tok::RParen, "')'")?;
            e
        };
        let arg = Box::new(arg);
        Ok(match name {
            "dual" => Expr::Dual(arg),
            "hdual" => Expr::HDual(arg),
            "zeta" => Expr::Zeta(arg),
            "zeta_sh" => Expr::ZetaSh(arg),
            "zrs" => Expr::ZetaRS(arg),
            "tau" => Expr::Tau(arg),
            "phi" => Expr::Phi(arg),
            _ => unreachable!("checked by is_function"),
        })
    }

    /// `, n )` after the first argument.
    fn degree_arg(&mut self) -> Result<u32, DslError> {
        self.expect(Tok::Comma, "',' and a truncation degree")?;
        let Tok::Int(d) = self.peek().clone() else { return self.unexpected("a truncation degree") };
        if d > 16 {
            return self.syntax(format!("truncation degree {d} exceeds 16"));
        }
        self.bump();
        self.expect(Tok::RParen, "')'")?;
        Ok(d)
    }
}

fn check_types(e: &Expr, pos: Pos) -> Result<(), DslError> {
    let fail = |message: String| Err(DslError::Type { line: pos.line, column: pos.column, message });
    let want = |what: &str, arg: &Expr, ok: bool| {
        if ok {
            Ok(())
        } else {
            fail(format!("{what} expects {}, got {}", expected_for(what), arg.ty().name()))
        }
    };
    match e {
        Expr::Dual(a) => want("dual", a, a.ty() == Ty::Index),
        Expr::HDual(a) => want("hdual", a, a.ty() == Ty::Index),
        Expr::Zeta(a) => want("zeta", a, a.ty().is_indexlike() || a.ty() == Ty::Poly),
        Expr::ZetaSh(a) => want("zeta_sh", a, a.ty().is_indexlike() || a.ty().is_wordlike()),
        Expr::ZetaRS(a) => want("zrs", a, a.ty().is_indexlike() || a.ty().is_wordlike()),
        Expr::Tau(a) => want("tau", a, a.ty().is_wordlike()),
        Expr::Phi(a) => want("phi", a, a.ty().is_wordlike()),
        Expr::GenMap(m, a, _) => want(m.name(), a, a.ty() == Ty::Poly),
        Expr::SeriesTrunc(a, _) => want("trunc", a, a.ty() == Ty::Series),
        Expr::Shuffle(a, b) | Expr::SymHarmonic(a, b) => {
            let op = if matches!(e, Expr::Shuffle(..)) { "sh" } else { "sst" };
            if a.ty().is_wordlike() && b.ty().is_wordlike() {
                Ok(())
            } else {
                fail(format!("{op} expects words, got {} and {}", a.ty().name(), b.ty().name()))
            }
        }
        Expr::Harmonic(a, b) => {
            if a.ty().is_indexlike() && b.ty().is_indexlike() {
                Ok(())
            } else {
                fail(format!("st expects indices, got {} and {}", a.ty().name(), b.ty().name()))
            }
        }
        Expr::IndexLit(_) | Expr::WordLit(_) => Ok(()),
    }
}

fn expected_for(f: &str) -> &'static str {
    match f {
        "dual" | "hdual" => "an index",
        "zeta" => "an index or a word polynomial",
        "zeta_sh" | "zrs" => "an index or words",
        "tau" | "phi" => "words",
        "trunc" => "a word series",
        _ => "a word polynomial",
    }
}

/// Parse and type-check `src`.
pub fn parse_expression(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.unexpected("end of input");
    }
    Ok(e)
}

fn word_text(w: &Word) -> String {
    w.letters().map(Letter::as_char).collect()
}

fn write_arg(f: &mut fmt::Formatter<'_>, name: &str, arg: &Expr) -> fmt::Result {
    match arg {
        Expr::IndexLit(k) if matches!(name, "dual" | "hdual" | "zeta" | "zeta_sh" | "zrs") => {
            let parts: Vec<String> = k.parts().iter().map(u32::to_string).collect();
            write!(f, "{name}({})", parts.join(","))
        }
        _ => write!(f, "{name}({arg})"),
    }
}

impl fmt::Display for Expr {
    /// Canonical source text; parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::IndexLit(k) => write!(f, "{k}"),
            Expr::WordLit(w) => write!(f, "\"{}\"", word_text(w)),
            Expr::Dual(a) => write_arg(f, "dual", a),
            Expr::HDual(a) => write_arg(f, "hdual", a),
            Expr::Zeta(a) => write_arg(f, "zeta", a),
            Expr::ZetaSh(a) => write_arg(f, "zeta_sh", a),
            Expr::ZetaRS(a) => write_arg(f, "zrs", a),
            Expr::Tau(a) => write_arg(f, "tau", a),
            Expr::Phi(a) => write_arg(f, "phi", a),
            Expr::GenMap(m, a, d) => write!(f, "{}({a}, {d})", m.name()),
            Expr::SeriesTrunc(a, d) => write!(f, "trunc({a}, {d})"),
            Expr::Shuffle(a, b) | Expr::Harmonic(a, b) | Expr::SymHarmonic(a, b) => {
                let op = match self {
                    Expr::Shuffle(..) => "sh",
                    Expr::Harmonic(..) => "st",
                    _ => "sst",
                };
                write!(f, "{a} {op} ")?;
                if matches!(**b, Expr::Shuffle(..) | Expr::Harmonic(..) | Expr::SymHarmonic(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    #[test]
    fn zeta_call() {
        assert_eq!(parse_expression("zeta(1,2)").unwrap(), Expr::Zeta(Box::new(Expr::IndexLit(idx("(1,2)")))));
        assert_eq!(parse_expression("zeta((1,2))").unwrap(), parse_expression(" zeta ( 1 , 2 ) ").unwrap());
        assert_eq!(parse_expression("zeta()").unwrap(), Expr::Zeta(Box::new(Expr::IndexLit(Index::empty()))));
    }

    #[test]
    fn unterminated_call_column() {
        let e = parse_expression("zeta(").unwrap_err();
        assert!(matches!(e, DslError::Syntax { line: 1, column: 6, .. }), "{e}");
    }

    #[test]
    fn type_errors() {
        for src in ["dual(\"yx\")", "\"yx\" st \"y\"", "(1,2) sh (2)", "trunc(\"xy\", 2)", "tau((1,2))", "zeta(tau(sigma(\"y\", 2)))"] {
            assert!(matches!(parse_expression(src), Err(DslError::Type { .. })), "{src}");
        }
    }

    #[test]
    fn syntax_errors() {
        for (src, col) in [("", 1), ("zeta(1,", 8), ("\"xz\"", 3), ("foo(1)", 1), ("(1,2) sh", 9), ("zeta(1) zeta(2)", 9), ("sigma(\"y\")", 10)] {
            let e = parse_expression(src).unwrap_err();
            assert!(matches!(e, DslError::Syntax { .. }), "{src}: {e}");
            assert_eq!(e.column(), col, "{src}: {e}");
        }
    }

    #[test]
    fn left_associative() {
        let e = parse_expression("\"x\" sh \"y\" sh \"xy\"").unwrap();
        let Expr::Shuffle(a, _) = &e else { panic!("{e:?}") };
        assert!(matches!(**a, Expr::Shuffle(..)));
        assert_eq!(e.to_string(), "\"x\" sh \"y\" sh \"xy\"");
        let g = parse_expression("\"x\" sh (\"y\" sh \"xy\")").unwrap();
        assert_eq!(g.to_string(), "\"x\" sh (\"y\" sh \"xy\")");
    }
}
