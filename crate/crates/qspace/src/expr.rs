//! Expression language for the command line: kets, ladder and field
//! symbols, sums, juxtaposed application, commutators, and inner
//! products.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := scalar factor* | factor+
//! factor := op | ket | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//!         | '<' side '|' side '>' | '(' expr ')'
//! op     := ('a+'|'a'|'c+'|'c'|'psi+'|'psi') '(' int ')'
//! ket    := '|' occ-list ';' sector '>'
//! side   := bare-state | expr
//! bare   := occ-list ';' sector          (shorthand inside <...|...>)
//! occ    := [count '@' mode (',' count '@' mode)*]
//! scalar := number ['i']                 (1.5, 2i, 3+4i as a sum)
//! ```
//!
//! Inside an inner product the separator is the first '|' at zero
//! ()/[]/{} depth and the closer is the next '>' at zero depth, so a ket
//! literal or nested inner product used inside a side must be wrapped in
//! parentheses; the canonical printer does this automatically.
//!
//! Mixing bosonic (`a`, `a+`) and fermionic (`c`, `c+`) symbols in one
//! expression is rejected here, at analysis time. Field symbols (`psi`,
//! `psi+`) are statistics-neutral.

use std::fmt;

use crate::state::Sector;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OpKind {
    BoseCreate,
    BoseAnnihilate,
    FermiCreate,
    FermiAnnihilate,
    FieldCreate,
    FieldAnnihilate,
}

impl OpKind {
    pub fn symbol(self) -> &'static str {
        match self {
            OpKind::BoseCreate => "a+",
            OpKind::BoseAnnihilate => "a",
            OpKind::FermiCreate => "c+",
            OpKind::FermiAnnihilate => "c",
            OpKind::FieldCreate => "psi+",
            OpKind::FieldAnnihilate => "psi",
        }
    }

    fn statistics(self) -> Option<Sector> {
        match self {
            OpKind::BoseCreate | OpKind::BoseAnnihilate => Some(Sector::Bose),
            OpKind::FermiCreate | OpKind::FermiAnnihilate => Some(Sector::Fermi),
            _ => None,
        }
    }
}

/// Abstract syntax. Occupation lists are stored ascending by mode, so
/// structurally equal expressions denote the same text.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Scalar { value: f64, imaginary: bool },
    Ket { sector: Sector, occ: Vec<(u32, u32)> },
    Op { kind: OpKind, index: u32 },
    /// Juxtaposition; the rightmost factor is applied first.
    Apply(Vec<Expr>),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Inner(Box<Expr>, Box<Expr>),
    Commutator(Box<Expr>, Box<Expr>),
    Anticommutator(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number { value: f64, imaginary: bool },
    Op(OpKind),
    Ident(String),
    Plus,
    Minus,
    Comma,
    At,
    Semi,
    Pipe,
    Less,
    Greater,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    pos: usize,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<Tok, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        if matches!(self.peek(), Some(b'e') | Some(b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b'+') | Some(b'-')) {
                self.pos += 1;
            }
            if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
            } else {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let value: f64 = match text.parse() {
            Ok(v) => v,
            Err(_) => return err(start, format!("bad numeric literal '{text}'")),
        };
        if !value.is_finite() {
            return err(start, format!("numeric literal '{text}' out of range"));
        }
        let mut imaginary = false;
        if self.peek() == Some(b'i')
            && !self
                .src
                .get(self.pos + 1)
                .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
            imaginary = true;
        }
        Ok(Tok::Number { value, imaginary })
    }

    /// After lexing one of the operator head words, decide whether it is
    /// an operator symbol: `a+(`, `a(`, and the c/psi forms. The peeked
    /// parenthesis is left unconsumed.
    fn op_or_ident(&mut self, word: String) -> Tok {
        let kinds = match word.as_str() {
            "a" => (OpKind::BoseCreate, OpKind::BoseAnnihilate),
            "c" => (OpKind::FermiCreate, OpKind::FermiAnnihilate),
            "psi" => (OpKind::FieldCreate, OpKind::FieldAnnihilate),
            _ => return Tok::Ident(word),
        };
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'+') {
            self.pos += 1;
            let after_plus = self.pos;
            self.skip_ws();
            if self.peek() == Some(b'(') {
                self.pos = after_plus;
                return Tok::Op(kinds.0);
            }
            self.pos = save;
            return Tok::Ident(word);
        }
        if self.peek() == Some(b'(') {
            self.pos = save;
            return Tok::Op(kinds.1);
        }
        self.pos = save;
        Tok::Ident(word)
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    loop {
        lx.skip_ws();
        let pos = lx.pos;
        let Some(b) = lx.peek() else { break };
        let tok = match b {
            b'0'..=b'9' => lx.number()?,
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let word = lx.ident();
                lx.op_or_ident(word)
            }
            b'+' => {
                lx.pos += 1;
                Tok::Plus
            }
            b'-' => {
                lx.pos += 1;
                Tok::Minus
            }
            b',' => {
                lx.pos += 1;
                Tok::Comma
            }
            b'@' => {
                lx.pos += 1;
                Tok::At
            }
            b';' => {
                lx.pos += 1;
                Tok::Semi
            }
            b'|' => {
                lx.pos += 1;
                Tok::Pipe
            }
            b'<' => {
                lx.pos += 1;
                Tok::Less
            }
            b'>' => {
                lx.pos += 1;
                Tok::Greater
            }
            b'(' => {
                lx.pos += 1;
                Tok::LParen
            }
            b')' => {
                lx.pos += 1;
                Tok::RParen
            }
            b'[' => {
                lx.pos += 1;
                Tok::LBracket
            }
            b']' => {
                lx.pos += 1;
                Tok::RBracket
            }
            b'{' => {
                lx.pos += 1;
                Tok::LBrace
            }
            b'}' => {
                lx.pos += 1;
                Tok::RBrace
            }
            other => return err(pos, format!("unexpected character '{}'", other as char)),
        };
        out.push(Spanned { tok, pos });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: usize,
    src_len: usize,
    bose_at: Option<usize>,
    fermi_at: Option<usize>,
}

/// Parses an expression, rejecting text that mixes bosonic and fermionic
/// operator symbols.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let end = toks.len();
    let mut p = Parser {
        toks,
        pos: 0,
        end,
        src_len: text.len(),
        bose_at: None,
        fermi_at: None,
    };
    let e = p.parse_expr()?;
    if p.pos != p.end {
        return err(p.here(), "unexpected trailing input");
    }
    Ok(e)
}

impl Parser {
    fn here(&self) -> usize {
        if self.pos < self.end {
            self.toks[self.pos].pos
        } else {
            self.src_len
        }
    }

    fn peek(&self) -> Option<&Tok> {
        if self.pos < self.end {
            Some(&self.toks[self.pos].tok)
        } else {
            None
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<usize, ParseError> {
        let pos = self.here();
        if self.eat(&t) {
            Ok(pos)
        } else {
            err(pos, format!("expected {what}"))
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(u32, usize), ParseError> {
        let pos = self.here();
        match self.peek() {
            Some(&Tok::Number { value, imaginary }) => {
                self.pos += 1;
                if imaginary || value.fract() != 0.0 || value < 0.0 || value > u32::MAX as f64 {
                    return err(pos, format!("expected an integer {what}"));
                }
                Ok((value as u32, pos))
            }
            _ => err(pos, format!("expected an integer {what}")),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let mut acc = self.parse_term()?;
        if neg {
            acc = Expr::Neg(Box::new(acc));
        }
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.parse_term()?;
                acc = Expr::Sum(Box::new(acc), Box::new(rhs));
            } else if self.eat(&Tok::Minus) {
                let rhs = self.parse_term()?;
                acc = Expr::Diff(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor_ahead(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Pipe)
                | Some(Tok::Op(_))
                | Some(Tok::LBracket)
                | Some(Tok::LBrace)
                | Some(Tok::LParen)
                | Some(Tok::Less)
        )
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = Vec::new();
        if let Some(&Tok::Number { value, imaginary }) = self.peek() {
            self.pos += 1;
            factors.push(Expr::Scalar { value, imaginary });
        }
        while self.factor_ahead() {
            factors.push(self.parse_factor()?);
        }
        match factors.len() {
            0 => err(self.here(), "expected a term"),
            1 => Ok(factors.pop().unwrap()),
            _ => Ok(Expr::Apply(factors)),
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let pos = self.here();
        match self.peek() {
            Some(&Tok::Op(kind)) => {
                self.pos += 1;
                self.note_statistics(kind, pos)?;
                self.expect(Tok::LParen, "'(' after operator symbol")?;
                let (index, ipos) = self.expect_int("mode argument")?;
                if index == 0 {
                    return err(ipos, "mode index must be >= 1");
                }
                self.expect(Tok::RParen, "')' closing the operator argument")?;
                Ok(Expr::Op { kind, index })
            }
            Some(Tok::Pipe) => {
                self.pos += 1;
                self.parse_ket(pos)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let a = self.parse_expr()?;
                self.expect(Tok::Comma, "',' between commutator arguments")?;
                let b = self.parse_expr()?;
                self.expect(Tok::RBracket, "']' closing the commutator")?;
                Ok(Expr::Commutator(Box::new(a), Box::new(b)))
            }
            Some(Tok::LBrace) => {
                self.pos += 1;
                let a = self.parse_expr()?;
                self.expect(Tok::Comma, "',' between anticommutator arguments")?;
                let b = self.parse_expr()?;
                self.expect(Tok::RBrace, "'}' closing the anticommutator")?;
                Ok(Expr::Anticommutator(Box::new(a), Box::new(b)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.parse_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Less) => {
                self.pos += 1;
                self.parse_inner(pos)
            }
            _ => err(pos, "expected a factor"),
        }
    }

    fn note_statistics(&mut self, kind: OpKind, pos: usize) -> Result<(), ParseError> {
        match kind.statistics() {
            Some(Sector::Bose) => {
                if let Some(fp) = self.fermi_at {
                    return err(
                        pos,
                        format!(
                            "cannot mix bosonic and fermionic operators (fermionic symbol at byte {fp})"
                        ),
                    );
                }
                self.bose_at.get_or_insert(pos);
            }
            Some(Sector::Fermi) => {
                if let Some(bp) = self.bose_at {
                    return err(
                        pos,
                        format!(
                            "cannot mix bosonic and fermionic operators (bosonic symbol at byte {bp})"
                        ),
                    );
                }
                self.fermi_at.get_or_insert(pos);
            }
            _ => {}
        }
        Ok(())
    }

    fn parse_occ_list(&mut self) -> Result<Vec<(u32, u32)>, ParseError> {
        let mut occ = Vec::new();
        if matches!(self.peek(), Some(Tok::Number { .. })) {
            loop {
                let (count, cpos) = self.expect_int("occupation count")?;
                self.expect(Tok::At, "'@' between count and mode")?;
                let (m, mpos) = self.expect_int("mode index")?;
                if count == 0 {
                    return err(cpos, "count 0 not allowed; omit empty modes");
                }
                if m == 0 {
                    return err(mpos, "mode index must be >= 1");
                }
                occ.push((m, count));
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        Ok(occ)
    }

    fn finish_ket(
        &self,
        mut occ: Vec<(u32, u32)>,
        tag: &str,
        tag_pos: usize,
        at: usize,
    ) -> Result<Expr, ParseError> {
        let Some(sector) = Sector::from_tag(tag) else {
            return err(tag_pos, format!("unknown sector tag '{tag}'"));
        };
        occ.sort_unstable();
        for w in occ.windows(2) {
            if w[0].0 == w[1].0 {
                return err(at, format!("duplicate mode {} in ket", w[0].0));
            }
        }
        Ok(Expr::Ket { sector, occ })
    }

    fn parse_ket(&mut self, pipe_pos: usize) -> Result<Expr, ParseError> {
        let occ = self.parse_occ_list()?;
        self.expect(Tok::Semi, "';' before the sector tag")?;
        let tag_pos = self.here();
        let tag = match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                s
            }
            _ => return err(tag_pos, "expected a sector tag (B, F, or T)"),
        };
        self.expect(Tok::Greater, "'>' closing the ket")?;
        self.finish_ket(occ, &tag, tag_pos, pipe_pos)
    }

    /// `<side|side>`: the separator is the first top-level '|', the close
    /// the next top-level '>'. Kets and nested inner products inside a
    /// side must therefore sit in parentheses.
    fn parse_inner(&mut self, lt_pos: usize) -> Result<Expr, ParseError> {
        let sep = self
            .scan(self.pos, |t| matches!(t, Tok::Pipe))
            .ok_or_else(|| ParseError {
                pos: lt_pos,
                message: "inner product missing its '|' separator".into(),
            })?;
        let close = self
            .scan(sep + 1, |t| matches!(t, Tok::Greater))
            .ok_or_else(|| ParseError {
                pos: lt_pos,
                message: "inner product missing its closing '>'".into(),
            })?;
        let left = self.parse_side(self.pos, sep)?;
        let right = self.parse_side(sep + 1, close)?;
        self.pos = close + 1;
        Ok(Expr::Inner(Box::new(left), Box::new(right)))
    }

    /// Index of the first token satisfying `target` outside every nested
    /// construct, scanning from `from` to the current bound. A '|' opens
    /// a ket unless the innermost open construct is an inner product
    /// still awaiting its separator; '>' closes whichever of the two is
    /// innermost.
    fn scan(&self, from: usize, target: impl Fn(&Tok) -> bool) -> Option<usize> {
        #[derive(PartialEq)]
        enum Open {
            Bracket,
            Ket,
            Inner { sep_seen: bool },
        }
        let mut stack: Vec<Open> = Vec::new();
        for idx in from..self.end {
            let t = &self.toks[idx].tok;
            if stack.is_empty() && target(t) {
                return Some(idx);
            }
            match t {
                Tok::LParen | Tok::LBracket | Tok::LBrace => stack.push(Open::Bracket),
                Tok::RParen | Tok::RBracket | Tok::RBrace => {
                    stack.pop();
                }
                Tok::Less => stack.push(Open::Inner { sep_seen: false }),
                Tok::Pipe => match stack.last_mut() {
                    Some(Open::Inner { sep_seen }) if !*sep_seen => *sep_seen = true,
                    _ => stack.push(Open::Ket),
                },
                Tok::Greater => match stack.last() {
                    Some(Open::Ket) | Some(Open::Inner { .. }) => {
                        stack.pop();
                    }
                    // The enclosing inner product closed before the
                    // target appeared.
                    _ => return None,
                },
                _ => {}
            }
        }
        None
    }

    fn parse_side(&mut self, start: usize, stop: usize) -> Result<Expr, ParseError> {
        if start == stop {
            return err(
                if start < self.toks.len() {
                    self.toks[start].pos
                } else {
                    self.src_len
                },
                "empty inner-product side",
            );
        }
        let (save_pos, save_end) = (self.pos, self.end);
        self.pos = start;
        self.end = stop;
        let result = match self.try_bare_side() {
            Some(r) => r,
            None => {
                self.pos = start;
                let e = self.parse_expr();
                match e {
                    Ok(_) if self.pos != self.end => {
                        err(self.here(), "unexpected token in inner-product side")
                    }
                    other => other,
                }
            }
        };
        self.pos = save_pos;
        self.end = save_end;
        result
    }

    /// Attempts the bare `occ;TAG` shorthand across the whole side range.
    /// Returns None when the shape does not match (the side is then
    /// parsed as an ordinary expression).
    fn try_bare_side(&mut self) -> Option<Result<Expr, ParseError>> {
        let start = self.pos;
        let start_pos = self.toks[start].pos;
        let mut occ = Vec::new();
        if matches!(self.peek(), Some(Tok::Number { .. })) {
            loop {
                let Some(&Tok::Number { value, imaginary }) = self.peek() else {
                    self.pos = start;
                    return None;
                };
                self.pos += 1;
                if !self.eat(&Tok::At) {
                    self.pos = start;
                    return None;
                }
                let Some(&Tok::Number {
                    value: mv,
                    imaginary: mi,
                }) = self.peek()
                else {
                    self.pos = start;
                    return None;
                };
                self.pos += 1;
                if imaginary || mi || value.fract() != 0.0 || mv.fract() != 0.0 {
                    self.pos = start;
                    return None;
                }
                occ.push((mv as u32, value as u32));
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        if !self.eat(&Tok::Semi) {
            self.pos = start;
            return None;
        }
        let tag_pos = self.here();
        let tag = match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                s
            }
            _ => {
                self.pos = start;
                return None;
            }
        };
        if self.pos != self.end {
            self.pos = start;
            return None;
        }
        // The shape matched; value problems are now hard errors.
        for &(m, count) in &occ {
            if count == 0 {
                return Some(err(start_pos, "count 0 not allowed; omit empty modes"));
            }
            if m == 0 {
                return Some(err(start_pos, "mode index must be >= 1"));
            }
        }
        Some(self.finish_ket(occ, &tag, tag_pos, start_pos))
    }
}

// Canonical printing. `parse(print(e))` returns a structurally equal
// expression for every parser-produced `e`.

fn needs_parens_as_factor(e: &Expr) -> bool {
    matches!(
        e,
        Expr::Sum(..) | Expr::Diff(..) | Expr::Neg(..) | Expr::Apply(..)
    )
}

fn write_factor(f: &mut fmt::Formatter<'_>, e: &Expr) -> fmt::Result {
    if needs_parens_as_factor(e) {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn write_inner_side(f: &mut fmt::Formatter<'_>, e: &Expr) -> fmt::Result {
    match e {
        Expr::Ket { sector, occ } => {
            write_occ(f, occ)?;
            write!(f, ";{}", sector.tag())
        }
        Expr::Scalar { .. } | Expr::Op { .. } => write!(f, "{e}"),
        other => write!(f, "({other})"),
    }
}

fn write_occ(f: &mut fmt::Formatter<'_>, occ: &[(u32, u32)]) -> fmt::Result {
    for (i, &(m, count)) in occ.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{count}@{m}")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar { value, imaginary } => {
                write!(f, "{value}")?;
                if *imaginary {
                    write!(f, "i")?;
                }
                Ok(())
            }
            Expr::Ket { sector, occ } => {
                write!(f, "|")?;
                write_occ(f, occ)?;
                write!(f, ";{}>", sector.tag())
            }
            Expr::Op { kind, index } => write!(f, "{}({index})", kind.symbol()),
            Expr::Apply(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    if i == 0 && matches!(factor, Expr::Scalar { .. }) {
                        write!(f, "{factor}")?;
                    } else if matches!(factor, Expr::Scalar { .. }) {
                        write!(f, "({factor})")?;
                    } else {
                        write_factor(f, factor)?;
                    }
                }
                Ok(())
            }
            Expr::Neg(x) => {
                if matches!(**x, Expr::Sum(..) | Expr::Diff(..)) {
                    write!(f, "-({x})")
                } else {
                    write!(f, "-{x}")
                }
            }
            Expr::Sum(l, r) => {
                write!(f, "{l} + ")?;
                if matches!(**r, Expr::Sum(..) | Expr::Diff(..) | Expr::Neg(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Expr::Diff(l, r) => {
                write!(f, "{l} - ")?;
                if matches!(**r, Expr::Sum(..) | Expr::Diff(..) | Expr::Neg(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            Expr::Inner(l, r) => {
                write!(f, "<")?;
                write_inner_side(f, l)?;
                write!(f, "|")?;
                write_inner_side(f, r)?;
                write!(f, ">")
            }
            Expr::Commutator(a, b) => write!(f, "[{a}, {b}]"),
            Expr::Anticommutator(a, b) => write!(f, "{{{a}, {b}}}"),
        }
    }
}
