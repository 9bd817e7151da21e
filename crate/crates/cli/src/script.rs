//! The `.ssc` script language: declarations of rings, ideals, schemes,
//! morphisms, and subschemes, plus `eval`, `check`, and `laws` commands.
//!
//! Parsing is two-level: the script parser handles statement structure and
//! records each embedded polynomial as a source span, which the executor
//! later parses against the variables of the ring it belongs to. Name use
//! is checked here: every name must be declared before use, bound exactly
//! once, and referenced with the right kind.

use std::collections::HashMap;
use std::fmt;

/// Byte range of an embedded polynomial expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapKey {
    /// A named source variable.
    Var(String),
    /// `#inv(g)`: the inverse variable of the source localization; the
    /// span must parse to the glueing element.
    Inv(Span),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueDecl {
    pub i: usize,
    pub f_i: Span,
    pub j: usize,
    pub f_j: Span,
    pub entries: Vec<(MapKey, Span)>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchMapDecl {
    pub source_patch: usize,
    pub target_patch: usize,
    pub entries: Vec<(String, Span)>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    Mul(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Pullback(String, Box<Expr>),
    Eq(Box<Expr>, Box<Expr>),
    Canon(Box<Expr>),
    Whole(String),
    Empty(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Ring {
        name: String,
        vars: Vec<String>,
        relations: Vec<Span>,
    },
    Ideal {
        name: String,
        ring: String,
        gens: Vec<Span>,
    },
    Scheme {
        name: String,
        patches: Vec<String>,
        glues: Vec<GlueDecl>,
    },
    Morphism {
        name: String,
        source: String,
        target: String,
        patch_maps: Vec<PatchMapDecl>,
    },
    Subscheme {
        name: String,
        scheme: String,
        patch_gens: Vec<Vec<Span>>,
    },
    Eval(Expr),
    Check(String),
    Laws {
        module: String,
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub source: String,
    pub statements: Vec<(Statement, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

pub fn line_col(source: &str, offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for (idx, ch) in source.char_indices() {
        if idx >= offset {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

const KEYWORDS: &[&str] = &[
    "ring", "ideal", "in", "scheme", "patch", "glue", "via", "morphism", "subscheme", "of",
    "eval", "check", "laws", "seed", "QQ", "mul", "add", "pullback", "eq", "canon", "whole",
    "empty",
];

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokKind {
    Ident(String),
    Number(String),
    HashInv,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Tilde,
    Equals,
    Slash,
    Arrow,
    Plus,
    Minus,
    Star,
    Caret,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Tok {
    kind: TokKind,
    start: usize,
    end: usize,
}

fn lex(source: &str) -> Result<Vec<Tok>, ScriptError> {
    let bytes = source.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    let err = |pos: usize, msg: String| {
        let (line, col) = line_col(source, pos);
        ScriptError {
            line,
            col,
            message: msg,
        }
    };
    while pos < bytes.len() {
        let b = bytes[pos];
        if b.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let kind = match b {
            b'#' => {
                if source[pos..].starts_with("#inv") {
                    pos += 4;
                    TokKind::HashInv
                } else if bytes
                    .get(pos + 1)
                    .map(|c| c.is_ascii_alphanumeric() || *c == b'_')
                    .unwrap_or(false)
                {
                    let mut end = pos + 1;
                    while end < bytes.len()
                        && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_')
                    {
                        end += 1;
                    }
                    return Err(err(
                        pos,
                        format!(
                            "variable `{}` uses the reserved `#` prefix",
                            &source[pos..end]
                        ),
                    ));
                } else {
                    // Comment to end of line.
                    while pos < bytes.len() && bytes[pos] != b'\n' {
                        pos += 1;
                    }
                    continue;
                }
            }
            b'(' => {
                pos += 1;
                TokKind::LParen
            }
            b')' => {
                pos += 1;
                TokKind::RParen
            }
            b'{' => {
                pos += 1;
                TokKind::LBrace
            }
            b'}' => {
                pos += 1;
                TokKind::RBrace
            }
            b'[' => {
                pos += 1;
                TokKind::LBracket
            }
            b']' => {
                pos += 1;
                TokKind::RBracket
            }
            b',' => {
                pos += 1;
                TokKind::Comma
            }
            b';' => {
                pos += 1;
                TokKind::Semi
            }
            b':' => {
                pos += 1;
                TokKind::Colon
            }
            b'~' => {
                pos += 1;
                TokKind::Tilde
            }
            b'=' => {
                pos += 1;
                TokKind::Equals
            }
            b'/' => {
                pos += 1;
                TokKind::Slash
            }
            b'+' => {
                pos += 1;
                TokKind::Plus
            }
            b'*' => {
                pos += 1;
                TokKind::Star
            }
            b'^' => {
                pos += 1;
                TokKind::Caret
            }
            b'-' => {
                if bytes.get(pos + 1) == Some(&b'>') {
                    pos += 2;
                    TokKind::Arrow
                } else {
                    pos += 1;
                    TokKind::Minus
                }
            }
            b if b.is_ascii_digit() => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                TokKind::Number(source[start..pos].to_string())
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                TokKind::Ident(source[start..pos].to_string())
            }
            other => {
                return Err(err(pos, format!("unexpected character `{}`", other as char)));
            }
        };
        toks.push(Tok {
            kind,
            start,
            end: pos,
        });
    }
    Ok(toks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NameKind {
    Ring,
    Ideal,
    Scheme,
    Morphism,
    Subscheme,
}

impl NameKind {
    fn describe(self) -> &'static str {
        match self {
            NameKind::Ring => "ring",
            NameKind::Ideal => "ideal",
            NameKind::Scheme => "scheme",
            NameKind::Morphism => "morphism",
            NameKind::Subscheme => "subscheme",
        }
    }
}

struct Parser<'a> {
    source: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    names: HashMap<String, NameKind>,
}

pub fn parse_script(source: &str) -> Result<Script, ScriptError> {
    let toks = lex(source)?;
    let mut parser = Parser {
        source,
        toks,
        pos: 0,
        names: HashMap::new(),
    };
    let mut statements = Vec::new();
    while !parser.at_end() {
        let line = parser.current_line();
        let stmt = parser.statement()?;
        statements.push((stmt, line));
    }
    Ok(Script {
        source: source.to_string(),
        statements,
    })
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&TokKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn current_offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|t| t.start)
            .unwrap_or(self.source.len())
    }

    fn current_line(&self) -> usize {
        line_col(self.source, self.current_offset()).0
    }

    fn error(&self, message: impl Into<String>) -> ScriptError {
        let (line, col) = line_col(self.source, self.current_offset());
        ScriptError {
            line,
            col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: &TokKind, what: &str) -> Result<Tok, ScriptError> {
        match self.peek() {
            Some(k) if k == kind => Ok(self.bump().expect("peeked")),
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ScriptError> {
        match self.peek() {
            Some(TokKind::Ident(_)) => {
                let t = self.bump().expect("peeked");
                match t.kind {
                    TokKind::Ident(s) => Ok(s),
                    _ => unreachable!(),
                }
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ScriptError> {
        match self.peek() {
            Some(TokKind::Ident(s)) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error(format!("expected `{kw}`"))),
        }
    }

    fn expect_number(&mut self, what: &str) -> Result<u64, ScriptError> {
        match self.peek() {
            Some(TokKind::Number(_)) => {
                let t = self.bump().expect("peeked");
                match t.kind {
                    TokKind::Number(s) => s
                        .parse()
                        .map_err(|_| self.error(format!("{what} out of range"))),
                    _ => unreachable!(),
                }
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn declare(&mut self, name: &str, kind: NameKind) -> Result<(), ScriptError> {
        if KEYWORDS.contains(&name) {
            return Err(self.error(format!("`{name}` is a reserved word")));
        }
        if self.names.contains_key(name) {
            return Err(self.error(format!("`{name}` is already declared")));
        }
        self.names.insert(name.to_string(), kind);
        Ok(())
    }

    fn resolve(&self, name: &str, kind: NameKind) -> Result<(), ScriptError> {
        match self.names.get(name) {
            Some(k) if *k == kind => Ok(()),
            Some(k) => Err(self.error(format!(
                "`{name}` is a {}, expected a {}",
                k.describe(),
                kind.describe()
            ))),
            None => Err(self.error(format!("unknown name `{name}`"))),
        }
    }

    // Collect a polynomial span: consume tokens until a depth-0 stop.
    fn poly_span(&mut self, stop_at_via: bool) -> Result<Span, ScriptError> {
        let start = self.current_offset();
        let mut depth = 0usize;
        let mut end = start;
        let mut any = false;
        loop {
            let Some(kind) = self.peek() else {
                return Err(self.error("unexpected end of file in expression"));
            };
            if depth == 0 {
                let stop = matches!(
                    kind,
                    TokKind::Comma
                        | TokKind::Semi
                        | TokKind::RParen
                        | TokKind::RBrace
                        | TokKind::RBracket
                        | TokKind::Tilde
                ) || (stop_at_via && matches!(kind, TokKind::Ident(s) if s == "via"));
                if stop {
                    break;
                }
            }
            match kind {
                TokKind::LParen | TokKind::LBrace | TokKind::LBracket => depth += 1,
                TokKind::RParen | TokKind::RBrace | TokKind::RBracket => depth -= 1,
                _ => {}
            }
            let t = self.bump().expect("peeked");
            end = t.end;
            any = true;
        }
        if !any {
            return Err(self.error("expected expression"));
        }
        Ok(Span { start, end })
    }

    // Comma-separated polynomial spans inside parentheses; may be empty.
    fn paren_poly_list(&mut self) -> Result<Vec<Span>, ScriptError> {
        self.expect(&TokKind::LParen, "`(`")?;
        let mut spans = Vec::new();
        if self.peek() == Some(&TokKind::RParen) {
            self.bump();
            return Ok(spans);
        }
        loop {
            spans.push(self.poly_span(false)?);
            match self.peek() {
                Some(TokKind::Comma) => {
                    self.bump();
                }
                Some(TokKind::RParen) => {
                    self.bump();
                    return Ok(spans);
                }
                _ => return Err(self.error("expected `,` or `)`")),
            }
        }
    }

    fn statement(&mut self) -> Result<Statement, ScriptError> {
        let keyword = match self.peek() {
            Some(TokKind::Ident(s)) => s.clone(),
            _ => return Err(self.error("expected a statement")),
        };
        match keyword.as_str() {
            "ring" => self.ring_statement(),
            "ideal" => self.ideal_statement(),
            "scheme" => self.scheme_statement(),
            "morphism" => self.morphism_statement(),
            "subscheme" => self.subscheme_statement(),
            "eval" => {
                self.bump();
                let expr = self.expr()?;
                self.expect(&TokKind::Semi, "`;`")?;
                Ok(Statement::Eval(expr))
            }
            "check" => {
                self.bump();
                let name = self.expect_ident("a name to check")?;
                match self.names.get(&name) {
                    Some(NameKind::Scheme | NameKind::Morphism | NameKind::Subscheme) => {}
                    Some(k) => {
                        return Err(self.error(format!(
                            "`{name}` is a {}; only schemes, morphisms, and subschemes can be checked",
                            k.describe()
                        )))
                    }
                    None => return Err(self.error(format!("unknown name `{name}`"))),
                }
                self.expect(&TokKind::Semi, "`;`")?;
                Ok(Statement::Check(name))
            }
            "laws" => {
                self.bump();
                let module = self.expect_ident("a module name")?;
                let mut seed = None;
                if let Some(TokKind::Ident(s)) = self.peek() {
                    if s == "seed" {
                        self.bump();
                        self.expect(&TokKind::Equals, "`=`")?;
                        seed = Some(self.expect_number("seed")?);
                    }
                }
                self.expect(&TokKind::Semi, "`;`")?;
                Ok(Statement::Laws { module, seed })
            }
            other => Err(self.error(format!("unknown statement `{other}`"))),
        }
    }

    fn ring_statement(&mut self) -> Result<Statement, ScriptError> {
        self.expect_keyword("ring")?;
        let name = self.expect_ident("a ring name")?;
        self.declare(&name, NameKind::Ring)?;
        self.expect(&TokKind::Equals, "`=`")?;
        self.expect_keyword("QQ")?;
        self.expect(&TokKind::LBracket, "`[`")?;
        let mut vars = Vec::new();
        if self.peek() != Some(&TokKind::RBracket) {
            loop {
                let var = self.expect_ident("a variable name")?;
                if KEYWORDS.contains(&var.as_str()) {
                    return Err(self.error(format!("`{var}` is a reserved word")));
                }
                vars.push(var);
                match self.peek() {
                    Some(TokKind::Comma) => {
                        self.bump();
                    }
                    _ => break,
                }
            }
        }
        self.expect(&TokKind::RBracket, "`]`")?;
        let relations = if self.peek() == Some(&TokKind::Slash) {
            self.bump();
            self.paren_poly_list()?
        } else {
            Vec::new()
        };
        self.expect(&TokKind::Semi, "`;`")?;
        Ok(Statement::Ring {
            name,
            vars,
            relations,
        })
    }

    fn ideal_statement(&mut self) -> Result<Statement, ScriptError> {
        self.expect_keyword("ideal")?;
        let name = self.expect_ident("an ideal name")?;
        self.declare(&name, NameKind::Ideal)?;
        self.expect_keyword("in")?;
        let ring = self.expect_ident("a ring name")?;
        self.resolve(&ring, NameKind::Ring)?;
        self.expect(&TokKind::Equals, "`=`")?;
        let gens = self.paren_poly_list()?;
        self.expect(&TokKind::Semi, "`;`")?;
        Ok(Statement::Ideal { name, ring, gens })
    }

    fn scheme_statement(&mut self) -> Result<Statement, ScriptError> {
        self.expect_keyword("scheme")?;
        let name = self.expect_ident("a scheme name")?;
        self.declare(&name, NameKind::Scheme)?;
        self.expect(&TokKind::LBrace, "`{`")?;
        let mut patches = Vec::new();
        let mut glues = Vec::new();
        loop {
            match self.peek() {
                Some(TokKind::Ident(s)) if s == "patch" => {
                    self.bump();
                    let ring = self.expect_ident("a ring name")?;
                    self.resolve(&ring, NameKind::Ring)?;
                    self.expect(&TokKind::Semi, "`;`")?;
                    patches.push(ring);
                }
                Some(TokKind::Ident(s)) if s == "glue" => {
                    let line = self.current_line();
                    self.bump();
                    let i = self.expect_number("a patch index")? as usize;
                    self.expect(&TokKind::Colon, "`:`")?;
                    let f_i = self.poly_span(false)?;
                    self.expect(&TokKind::Tilde, "`~`")?;
                    let j = self.expect_number("a patch index")? as usize;
                    self.expect(&TokKind::Colon, "`:`")?;
                    let f_j = self.poly_span(true)?;
                    self.expect_keyword("via")?;
                    let entries = self.map_entries()?;
                    self.expect(&TokKind::Semi, "`;`")?;
                    glues.push(GlueDecl {
                        i,
                        f_i,
                        j,
                        f_j,
                        entries,
                        line,
                    });
                }
                Some(TokKind::RBrace) => {
                    self.bump();
                    break;
                }
                _ => return Err(self.error("expected `patch`, `glue`, or `}`")),
            }
        }
        if self.peek() == Some(&TokKind::Semi) {
            self.bump();
        }
        Ok(Statement::Scheme {
            name,
            patches,
            glues,
        })
    }

    // `{ key -> expr, key -> expr }` where a key is a variable name or
    // `#inv(g)`.
    fn map_entries(&mut self) -> Result<Vec<(MapKey, Span)>, ScriptError> {
        self.expect(&TokKind::LBrace, "`{`")?;
        let mut entries = Vec::new();
        if self.peek() == Some(&TokKind::RBrace) {
            self.bump();
            return Ok(entries);
        }
        loop {
            let key = match self.peek() {
                Some(TokKind::HashInv) => {
                    self.bump();
                    self.expect(&TokKind::LParen, "`(`")?;
                    let span = self.poly_span(false)?;
                    self.expect(&TokKind::RParen, "`)`")?;
                    MapKey::Inv(span)
                }
                Some(TokKind::Ident(_)) => MapKey::Var(self.expect_ident("a variable name")?),
                _ => return Err(self.error("expected a variable name or `#inv(...)`")),
            };
            self.expect(&TokKind::Arrow, "`->`")?;
            let value = self.poly_span(false)?;
            entries.push((key, value));
            match self.peek() {
                Some(TokKind::Comma) => {
                    self.bump();
                }
                Some(TokKind::RBrace) => {
                    self.bump();
                    return Ok(entries);
                }
                _ => return Err(self.error("expected `,` or `}`")),
            }
        }
    }

    fn morphism_statement(&mut self) -> Result<Statement, ScriptError> {
        self.expect_keyword("morphism")?;
        let name = self.expect_ident("a morphism name")?;
        self.declare(&name, NameKind::Morphism)?;
        self.expect(&TokKind::Colon, "`:`")?;
        let source = self.expect_ident("a scheme name")?;
        self.resolve(&source, NameKind::Scheme)?;
        self.expect(&TokKind::Arrow, "`->`")?;
        let target = self.expect_ident("a scheme name")?;
        self.resolve(&target, NameKind::Scheme)?;
        self.expect(&TokKind::LBrace, "`{`")?;
        let mut patch_maps = Vec::new();
        loop {
            match self.peek() {
                Some(TokKind::Ident(s)) if s == "patch" => {
                    let line = self.current_line();
                    self.bump();
                    let source_patch = self.expect_number("a patch index")? as usize;
                    self.expect(&TokKind::Arrow, "`->`")?;
                    let target_patch = self.expect_number("a patch index")? as usize;
                    self.expect_keyword("via")?;
                    let raw = self.map_entries()?;
                    let mut entries = Vec::with_capacity(raw.len());
                    for (key, value) in raw {
                        match key {
                            MapKey::Var(v) => entries.push((v, value)),
                            MapKey::Inv(_) => {
                                return Err(
                                    self.error("`#inv` keys are only meaningful in glue maps")
                                )
                            }
                        }
                    }
                    self.expect(&TokKind::Semi, "`;`")?;
                    patch_maps.push(PatchMapDecl {
                        source_patch,
                        target_patch,
                        entries,
                        line,
                    });
                }
                Some(TokKind::RBrace) => {
                    self.bump();
                    break;
                }
                _ => return Err(self.error("expected `patch` or `}`")),
            }
        }
        if self.peek() == Some(&TokKind::Semi) {
            self.bump();
        }
        Ok(Statement::Morphism {
            name,
            source,
            target,
            patch_maps,
        })
    }

    fn subscheme_statement(&mut self) -> Result<Statement, ScriptError> {
        self.expect_keyword("subscheme")?;
        let name = self.expect_ident("a subscheme name")?;
        self.declare(&name, NameKind::Subscheme)?;
        self.expect_keyword("of")?;
        let scheme = self.expect_ident("a scheme name")?;
        self.resolve(&scheme, NameKind::Scheme)?;
        self.expect(&TokKind::Equals, "`=`")?;
        self.expect(&TokKind::LBracket, "`[`")?;
        let mut patch_gens = Vec::new();
        loop {
            patch_gens.push(self.paren_poly_list()?);
            match self.peek() {
                Some(TokKind::Semi) => {
                    self.bump();
                }
                Some(TokKind::RBracket) => {
                    self.bump();
                    break;
                }
                _ => return Err(self.error("expected `;` or `]`")),
            }
        }
        self.expect(&TokKind::Semi, "`;`")?;
        Ok(Statement::Subscheme {
            name,
            scheme,
            patch_gens,
        })
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let head = self.expect_ident("an expression")?;
        match head.as_str() {
            "mul" | "add" | "eq" => {
                self.expect(&TokKind::LParen, "`(`")?;
                let a = self.expr()?;
                self.expect(&TokKind::Comma, "`,`")?;
                let b = self.expr()?;
                self.expect(&TokKind::RParen, "`)`")?;
                Ok(match head.as_str() {
                    "mul" => Expr::Mul(Box::new(a), Box::new(b)),
                    "add" => Expr::Add(Box::new(a), Box::new(b)),
                    _ => Expr::Eq(Box::new(a), Box::new(b)),
                })
            }
            "pullback" => {
                self.expect(&TokKind::LParen, "`(`")?;
                let f = self.expect_ident("a morphism name")?;
                self.resolve(&f, NameKind::Morphism)?;
                self.expect(&TokKind::Comma, "`,`")?;
                let z = self.expr()?;
                self.expect(&TokKind::RParen, "`)`")?;
                Ok(Expr::Pullback(f, Box::new(z)))
            }
            "canon" => {
                self.expect(&TokKind::LParen, "`(`")?;
                let z = self.expr()?;
                self.expect(&TokKind::RParen, "`)`")?;
                Ok(Expr::Canon(Box::new(z)))
            }
            "whole" | "empty" => {
                self.expect(&TokKind::LParen, "`(`")?;
                let x = self.expect_ident("a scheme name")?;
                self.resolve(&x, NameKind::Scheme)?;
                self.expect(&TokKind::RParen, "`)`")?;
                Ok(if head == "whole" {
                    Expr::Whole(x)
                } else {
                    Expr::Empty(x)
                })
            }
            name => match self.names.get(name) {
                Some(NameKind::Subscheme | NameKind::Ideal) => Ok(Expr::Name(name.to_string())),
                Some(k) => Err(self.error(format!(
                    "`{name}` is a {}, expected a subscheme or ideal",
                    k.describe()
                ))),
                None => Err(self.error(format!("unknown name `{name}`"))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1_SAMPLE: &str = "\
# The projective line and a point on it.
ring A = QQ[u];
ring B = QQ[v];
scheme X { patch A; patch B; glue 0:u ~ 1:v via { u -> #inv(v) }; }
subscheme Z of X = [ (u - 2) ; (2*v - 1) ];
subscheme W of X = [ (u - 3) ; (3*v - 1) ];
eval add(Z, W);
eval eq(mul(Z, W), empty(X));
";

    #[test]
    fn parses_the_sample_script() {
        let script = parse_script(P1_SAMPLE).unwrap();
        assert_eq!(script.statements.len(), 7);
        assert!(matches!(script.statements[2].0, Statement::Scheme { .. }));
        assert!(matches!(
            script.statements[5].0,
            Statement::Eval(Expr::Add(_, _))
        ));
    }

    #[test]
    fn reports_syntax_error_position() {
        let err = parse_script("ideal I in A = (x^2 -").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("unknown name") || err.message.contains("end of file"));

        let err = parse_script("ring A = QQ[x];\nideal I in A = (x^2 -").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("end of file"));
    }

    #[test]
    fn rejects_redeclaration() {
        let err = parse_script("ring A = QQ[x];\nring A = QQ[y];").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("already declared"));
    }

    #[test]
    fn rejects_unknown_names() {
        let err = parse_script("ideal I in A = (x);").unwrap_err();
        assert!(err.message.contains("unknown name `A`"));
        let err = parse_script("eval eq(Z, Z);").unwrap_err();
        assert!(err.message.contains("unknown name `Z`"));
    }

    #[test]
    fn rejects_reserved_variable_prefix() {
        let err = parse_script("ring A = QQ[x];\nideal I in A = (#0);").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("reserved"));
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let err = parse_script("ring A = QQ[x];\neval eq(A, A);").unwrap_err();
        assert!(err.message.contains("expected a subscheme"));
    }
}
