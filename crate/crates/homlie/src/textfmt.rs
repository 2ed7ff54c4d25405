//! The definition-document text format shared by the CLI and the fixture
//! catalog.
//!
//! A document is a sequence of blocks:
//!
//! ```text
//! algebra NAME { dim INT; alpha = [ROW; ...]; bracket(I,J) = [RATIONAL,...]; ... }
//! action ACTOR -> TARGET { act(I,J) = [RATIONAL,...]; ... }
//! subspace NAME in ALGEBRA { vec = [RATIONAL,...]; ... }
//! ```
//!
//! `RATIONAL := '-'? INT ('/' POSINT)?`. The grammar is whitespace
//! insensitive and `#` starts a line comment. Indices are 1-based; bracket
//! entries require `i < j` and are antisymmetrized on load. Action entries
//! omitted from a block are zero.

use std::fmt;

use crate::action::HomAction;
use crate::algebra::HomLieAlgebra;
use crate::linalg::{is_zero_vector, zero_vector, Matrix, Vector};
use crate::rational::{format_rational, parse_rational, Scalar};

/// Parse-stage or semantic-stage failure, with source position context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TextError {
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    Semantic {
        line: usize,
        message: String,
    },
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::Parse { line, col, message } => {
                write!(f, "parse error at line {line}, column {col}: {message}")
            }
            TextError::Semantic { line, message } => {
                write!(f, "semantic error at line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for TextError {}

/// A named action block resolved against the document's algebras.
#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub actor: String,
    pub target: String,
    pub action: HomAction,
}

/// A named span inside one of the document's algebras.
#[derive(Debug, Clone)]
pub struct SubspaceSpec {
    pub name: String,
    pub algebra: String,
    pub vectors: Vec<Vector>,
}

/// Parsed definition document. Block order is preserved.
#[derive(Debug, Clone, Default)]
pub struct DefinitionDocument {
    pub algebras: Vec<HomLieAlgebra>,
    pub actions: Vec<ActionSpec>,
    pub subspaces: Vec<SubspaceSpec>,
}

impl DefinitionDocument {
    pub fn algebra(&self, name: &str) -> Option<&HomLieAlgebra> {
        self.algebras.iter().find(|a| a.name == name)
    }

    pub fn subspace(&self, name: &str) -> Option<&SubspaceSpec> {
        self.subspaces.iter().find(|s| s.name == name)
    }

    pub fn action_between(&self, actor: &str, target: &str) -> Option<&ActionSpec> {
        self.actions
            .iter()
            .find(|a| a.actor == actor && a.target == target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Arrow,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier {s:?}"),
            Token::Number(s) => format!("number {s:?}"),
            Token::LBrace => "'{'".to_string(),
            Token::RBrace => "'}'".to_string(),
            Token::LBracket => "'['".to_string(),
            Token::RBracket => "']'".to_string(),
            Token::LParen => "'('".to_string(),
            Token::RParen => "')'".to_string(),
            Token::Comma => "','".to_string(),
            Token::Semi => "';'".to_string(),
            Token::Eq => "'='".to_string(),
            Token::Arrow => "'->'".to_string(),
        }
    }
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Token, usize, usize);

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> TextError {
        TextError::Parse {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> u8 {
        let b = self.bytes[self.pos];
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        b
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn tokenize(mut self) -> Result<Vec<Spanned>, TextError> {
        let mut out = Vec::new();
        while let Some(b) = self.peek() {
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'#' => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                b'{' | b'}' | b'[' | b']' | b'(' | b')' | b',' | b';' | b'=' => {
                    let (line, col) = (self.line, self.col);
                    let tok = match self.bump() {
                        b'{' => Token::LBrace,
                        b'}' => Token::RBrace,
                        b'[' => Token::LBracket,
                        b']' => Token::RBracket,
                        b'(' => Token::LParen,
                        b')' => Token::RParen,
                        b',' => Token::Comma,
                        b';' => Token::Semi,
                        _ => Token::Eq,
                    };
                    out.push((tok, line, col));
                }
                b'-' => {
                    let (line, col) = (self.line, self.col);
                    self.bump();
                    match self.peek() {
                        Some(b'>') => {
                            self.bump();
                            out.push((Token::Arrow, line, col));
                        }
                        Some(c) if c.is_ascii_digit() => {
                            let mut s = String::from("-");
                            s.push_str(&self.lex_number_body()?);
                            out.push((Token::Number(s), line, col));
                        }
                        _ => return Err(self.error("expected '>' or a digit after '-'")),
                    }
                }
                c if c.is_ascii_digit() => {
                    let (line, col) = (self.line, self.col);
                    let s = self.lex_number_body()?;
                    out.push((Token::Number(s), line, col));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let (line, col) = (self.line, self.col);
                    let mut s = String::new();
                    while let Some(c) = self.peek() {
                        if c.is_ascii_alphanumeric() || c == b'_' {
                            s.push(self.bump() as char);
                        } else {
                            break;
                        }
                    }
                    out.push((Token::Ident(s), line, col));
                }
                other => {
                    return Err(self.error(format!("unexpected byte {:?}", other as char)));
                }
            }
        }
        Ok(out)
    }

    /// Digits, optionally followed by '/' and more digits, no whitespace.
    fn lex_number_body(&mut self) -> Result<String, TextError> {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(self.bump() as char);
            } else {
                break;
            }
        }
        if s.is_empty() {
            return Err(self.error("expected digits"));
        }
        if self.peek() == Some(b'/') {
            self.bump();
            s.push('/');
            let mut any = false;
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() {
                    s.push(self.bump() as char);
                    any = true;
                } else {
                    break;
                }
            }
            if !any {
                return Err(self.error("expected digits after '/'"));
            }
        }
        Ok(s)
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or_else(
            || {
                self.tokens
                    .last()
                    .map_or((1, 1), |(_, l, c)| (*l, *c + 1))
            },
            |(_, l, c)| (*l, *c),
        )
    }

    fn parse_err(&self, message: impl Into<String>) -> TextError {
        let (line, col) = self.here();
        TextError::Parse {
            line,
            col,
            message: message.into(),
        }
    }

    fn semantic_err(&self, message: impl Into<String>) -> TextError {
        let (line, _) = self.here();
        TextError::Semantic {
            line,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Result<Spanned, TextError> {
        let t = self
            .peek()
            .cloned()
            .ok_or_else(|| self.parse_err("unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, expected: &Token) -> Result<(), TextError> {
        let (tok, ..) = self.next()?;
        if &tok == expected {
            Ok(())
        } else {
            self.pos -= 1;
            Err(self.parse_err(format!(
                "expected {}, found {}",
                expected.describe(),
                tok.describe()
            )))
        }
    }

    fn expect_ident(&mut self) -> Result<String, TextError> {
        match self.next()? {
            (Token::Ident(s), ..) => Ok(s),
            (tok, ..) => {
                self.pos -= 1;
                Err(self.parse_err(format!("expected an identifier, found {}", tok.describe())))
            }
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), TextError> {
        let s = self.expect_ident()?;
        if s == kw {
            Ok(())
        } else {
            self.pos -= 1;
            Err(self.parse_err(format!("expected keyword {kw:?}, found {s:?}")))
        }
    }

    fn expect_rational(&mut self) -> Result<Scalar, TextError> {
        match self.next()? {
            (Token::Number(s), line, col) => parse_rational(&s).map_err(|e| TextError::Parse {
                line,
                col,
                message: e.to_string(),
            }),
            (tok, ..) => {
                self.pos -= 1;
                Err(self.parse_err(format!("expected a rational, found {}", tok.describe())))
            }
        }
    }

    fn expect_usize(&mut self) -> Result<usize, TextError> {
        match self.next()? {
            (Token::Number(s), line, col) => s.parse().map_err(|_| TextError::Parse {
                line,
                col,
                message: format!("expected a nonnegative integer, found {s:?}"),
            }),
            (tok, ..) => {
                self.pos -= 1;
                Err(self.parse_err(format!("expected an integer, found {}", tok.describe())))
            }
        }
    }

    /// `[ RATIONAL, ... ]` (possibly empty)
    fn vector(&mut self) -> Result<Vector, TextError> {
        self.expect(&Token::LBracket)?;
        let mut out = Vec::new();
        if matches!(self.peek(), Some((Token::RBracket, ..))) {
            self.next()?;
            return Ok(out);
        }
        loop {
            out.push(self.expect_rational()?);
            match self.next()? {
                (Token::Comma, ..) => continue,
                (Token::RBracket, ..) => break,
                (tok, ..) => {
                    self.pos -= 1;
                    return Err(self.parse_err(format!(
                        "expected ',' or ']', found {}",
                        tok.describe()
                    )));
                }
            }
        }
        Ok(out)
    }

    /// `( I , J )` with 1-based indices.
    fn index_pair(&mut self) -> Result<(usize, usize), TextError> {
        self.expect(&Token::LParen)?;
        let i = self.expect_usize()?;
        self.expect(&Token::Comma)?;
        let j = self.expect_usize()?;
        self.expect(&Token::RParen)?;
        Ok((i, j))
    }
}

/// Parses a document; all structural and semantic checks carry positions.
pub fn parse_document(text: &str) -> Result<DefinitionDocument, TextError> {
    let tokens = Lexer::new(text).tokenize()?;
    let mut p = Parser { tokens, pos: 0 };
    let mut doc = DefinitionDocument::default();
    while p.peek().is_some() {
        let kw = p.expect_ident()?;
        match kw.as_str() {
            "algebra" => parse_algebra(&mut p, &mut doc)?,
            "action" => parse_action(&mut p, &mut doc)?,
            "subspace" => parse_subspace(&mut p, &mut doc)?,
            other => {
                p.pos -= 1;
                return Err(p.parse_err(format!(
                    "expected 'algebra', 'action' or 'subspace', found {other:?}"
                )));
            }
        }
    }
    Ok(doc)
}

fn parse_algebra(p: &mut Parser, doc: &mut DefinitionDocument) -> Result<(), TextError> {
    let name = p.expect_ident()?;
    if doc.algebra(&name).is_some() {
        return Err(p.semantic_err(format!("duplicate algebra name {name:?}")));
    }
    p.expect(&Token::LBrace)?;
    let mut dim: Option<usize> = None;
    let mut alpha: Option<Matrix> = None;
    let mut entries: Vec<(usize, usize, Vector)> = Vec::new();
    loop {
        match p.next()? {
            (Token::RBrace, ..) => break,
            (Token::Ident(item), ..) => match item.as_str() {
                "dim" => {
                    if dim.is_some() {
                        return Err(p.semantic_err("duplicate 'dim' item"));
                    }
                    dim = Some(p.expect_usize()?);
                    p.expect(&Token::Semi)?;
                }
                "alpha" => {
                    let n = dim.ok_or_else(|| {
                        p.semantic_err("'dim' must be declared before 'alpha'")
                    })?;
                    if alpha.is_some() {
                        return Err(p.semantic_err("duplicate 'alpha' item"));
                    }
                    p.expect(&Token::Eq)?;
                    alpha = Some(parse_alpha_rows(p, n)?);
                    p.expect(&Token::Semi)?;
                }
                "bracket" => {
                    let n = dim.ok_or_else(|| {
                        p.semantic_err("'dim' must be declared before 'bracket'")
                    })?;
                    let (i, j) = p.index_pair()?;
                    if i == 0 || j == 0 || i > n || j > n {
                        return Err(
                            p.semantic_err(format!("bracket index ({i},{j}) out of range 1..={n}"))
                        );
                    }
                    if i >= j {
                        return Err(p.semantic_err(format!(
                            "bracket entries require i < j, got ({i},{j})"
                        )));
                    }
                    if entries.iter().any(|(a, b, _)| *a == i - 1 && *b == j - 1) {
                        return Err(p.semantic_err(format!("duplicate bracket entry ({i},{j})")));
                    }
                    p.expect(&Token::Eq)?;
                    let value = p.vector()?;
                    if value.len() != n {
                        return Err(p.semantic_err(format!(
                            "bracket({i},{j}) value has {} entries, expected {n}",
                            value.len()
                        )));
                    }
                    p.expect(&Token::Semi)?;
                    entries.push((i - 1, j - 1, value));
                }
                other => {
                    p.pos -= 1;
                    return Err(p.parse_err(format!(
                        "expected 'dim', 'alpha' or 'bracket', found {other:?}"
                    )));
                }
            },
            (tok, ..) => {
                p.pos -= 1;
                return Err(p.parse_err(format!(
                    "expected an algebra item or '}}', found {}",
                    tok.describe()
                )));
            }
        }
    }
    let dim = dim.ok_or_else(|| p.semantic_err(format!("algebra {name:?} is missing 'dim'")))?;
    let alpha =
        alpha.ok_or_else(|| p.semantic_err(format!("algebra {name:?} is missing 'alpha'")))?;
    let algebra = HomLieAlgebra::from_upper_entries(&name, dim, &entries, alpha)
        .map_err(|e| p.semantic_err(e.to_string()))?;
    doc.algebras.push(algebra);
    Ok(())
}

/// `[ row ; row ; ... ]` where each row is `RATIONAL, ...` of length n.
fn parse_alpha_rows(p: &mut Parser, n: usize) -> Result<Matrix, TextError> {
    p.expect(&Token::LBracket)?;
    let mut rows: Vec<Vector> = Vec::new();
    if n == 0 {
        p.expect(&Token::RBracket)?;
        return Ok(Matrix::zero(0, 0));
    }
    loop {
        let mut row = Vec::new();
        loop {
            row.push(p.expect_rational()?);
            match p.next()? {
                (Token::Comma, ..) => continue,
                (Token::Semi, ..) => {
                    break;
                }
                (Token::RBracket, ..) => {
                    p.pos -= 1;
                    break;
                }
                (tok, ..) => {
                    p.pos -= 1;
                    return Err(p.parse_err(format!(
                        "expected ',', ';' or ']', found {}",
                        tok.describe()
                    )));
                }
            }
        }
        if row.len() != n {
            return Err(p.semantic_err(format!(
                "alpha row has {} entries, expected {n}",
                row.len()
            )));
        }
        rows.push(row);
        if matches!(p.peek(), Some((Token::RBracket, ..))) {
            p.next()?;
            break;
        }
    }
    if rows.len() != n {
        return Err(p.semantic_err(format!("alpha has {} rows, expected {n}", rows.len())));
    }
    Ok(Matrix::from_rows(rows))
}

fn parse_action(p: &mut Parser, doc: &mut DefinitionDocument) -> Result<(), TextError> {
    let actor_name = p.expect_ident()?;
    p.expect(&Token::Arrow)?;
    let target_name = p.expect_ident()?;
    let actor = doc
        .algebra(&actor_name)
        .ok_or_else(|| p.semantic_err(format!("unknown actor algebra {actor_name:?}")))?
        .clone();
    let target = doc
        .algebra(&target_name)
        .ok_or_else(|| p.semantic_err(format!("unknown target algebra {target_name:?}")))?
        .clone();
    if doc.action_between(&actor_name, &target_name).is_some() {
        return Err(p.semantic_err(format!(
            "duplicate action block {actor_name} -> {target_name}"
        )));
    }
    p.expect(&Token::LBrace)?;
    let mut table = vec![vec![zero_vector(target.dim); target.dim]; actor.dim];
    let mut seen: Vec<(usize, usize)> = Vec::new();
    loop {
        match p.next()? {
            (Token::RBrace, ..) => break,
            (Token::Ident(item), ..) if item == "act" => {
                let (i, j) = p.index_pair()?;
                if i == 0 || i > actor.dim || j == 0 || j > target.dim {
                    return Err(p.semantic_err(format!(
                        "act index ({i},{j}) out of range ({}x{})",
                        actor.dim, target.dim
                    )));
                }
                if seen.contains(&(i, j)) {
                    return Err(p.semantic_err(format!("duplicate act entry ({i},{j})")));
                }
                p.expect(&Token::Eq)?;
                let value = p.vector()?;
                if value.len() != target.dim {
                    return Err(p.semantic_err(format!(
                        "act({i},{j}) value has {} entries, expected {}",
                        value.len(),
                        target.dim
                    )));
                }
                p.expect(&Token::Semi)?;
                table[i - 1][j - 1] = value;
                seen.push((i, j));
            }
            (tok, ..) => {
                p.pos -= 1;
                return Err(p.parse_err(format!(
                    "expected 'act' or '}}', found {}",
                    tok.describe()
                )));
            }
        }
    }
    let action = HomAction::new(actor, target, table).map_err(|e| p.semantic_err(e.to_string()))?;
    doc.actions.push(ActionSpec {
        actor: actor_name,
        target: target_name,
        action,
    });
    Ok(())
}

fn parse_subspace(p: &mut Parser, doc: &mut DefinitionDocument) -> Result<(), TextError> {
    let name = p.expect_ident()?;
    p.expect_keyword("in")?;
    let algebra_name = p.expect_ident()?;
    let dim = doc
        .algebra(&algebra_name)
        .ok_or_else(|| p.semantic_err(format!("unknown algebra {algebra_name:?}")))?
        .dim;
    if doc.subspace(&name).is_some() {
        return Err(p.semantic_err(format!("duplicate subspace name {name:?}")));
    }
    p.expect(&Token::LBrace)?;
    let mut vectors = Vec::new();
    loop {
        match p.next()? {
            (Token::RBrace, ..) => break,
            (Token::Ident(item), ..) if item == "vec" => {
                p.expect(&Token::Eq)?;
                let value = p.vector()?;
                if value.len() != dim {
                    return Err(p.semantic_err(format!(
                        "vec has {} entries, expected {dim}",
                        value.len()
                    )));
                }
                p.expect(&Token::Semi)?;
                vectors.push(value);
            }
            (tok, ..) => {
                p.pos -= 1;
                return Err(p.parse_err(format!(
                    "expected 'vec' or '}}', found {}",
                    tok.describe()
                )));
            }
        }
    }
    doc.subspaces.push(SubspaceSpec {
        name,
        algebra: algebra_name,
        vectors,
    });
    Ok(())
}

/// Serializes in canonical form: rationals in lowest terms, only nonzero
/// `i < j` bracket and action entries, sorted by index.
pub fn serialize_document(doc: &DefinitionDocument) -> String {
    let mut out = String::new();
    for a in &doc.algebras {
        out.push_str(&serialize_algebra(a));
    }
    for act in &doc.actions {
        out.push_str(&serialize_action(act));
    }
    for s in &doc.subspaces {
        out.push_str(&format!("subspace {} in {} {{\n", s.name, s.algebra));
        for v in &s.vectors {
            out.push_str(&format!("  vec = {};\n", vector_literal(v)));
        }
        out.push_str("}\n");
    }
    out
}

pub fn serialize_algebra(a: &HomLieAlgebra) -> String {
    let mut out = format!("algebra {} {{\n  dim {};\n", a.name, a.dim);
    let rows: Vec<String> = (0..a.dim)
        .map(|i| {
            (0..a.dim)
                .map(|j| format_rational(a.alpha.at(i, j)))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    out.push_str(&format!("  alpha = [{}];\n", rows.join("; ")));
    for i in 0..a.dim {
        for j in (i + 1)..a.dim {
            if !is_zero_vector(&a.bracket[i][j]) {
                out.push_str(&format!(
                    "  bracket({},{}) = {};\n",
                    i + 1,
                    j + 1,
                    vector_literal(&a.bracket[i][j])
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn serialize_action(spec: &ActionSpec) -> String {
    let mut out = format!("action {} -> {} {{\n", spec.actor, spec.target);
    for (i, row) in spec.action.table.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            if !is_zero_vector(value) {
                out.push_str(&format!(
                    "  act({},{}) = {};\n",
                    i + 1,
                    j + 1,
                    vector_literal(value)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn vector_literal(v: &[Scalar]) -> String {
    let entries: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", entries.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const HEIS3: &str = "
# three-dimensional nilpotent example
algebra heis3 {
  dim 3;
  alpha = [0,0,0; 0,0,0; 0,0,0];
  bracket(1,2) = [0,0,1];
}
";

    #[test]
    fn parses_basic_algebra() {
        let doc = parse_document(HEIS3).unwrap();
        assert_eq!(doc.algebras.len(), 1);
        let a = doc.algebra("heis3").unwrap();
        assert_eq!(a.dim, 3);
        assert!(a.validate().passed());
        // antisymmetrized on load
        assert_eq!(a.bracket[1][0], vec![
            crate::rational::int(0),
            crate::rational::int(0),
            crate::rational::int(-1)
        ]);
    }

    #[test]
    fn round_trips_canonical_form() {
        let doc = parse_document(HEIS3).unwrap();
        let text = serialize_document(&doc);
        let again = parse_document(&text).unwrap();
        assert_eq!(serialize_document(&again), text);
    }

    #[test]
    fn normalizes_rationals() {
        let doc = parse_document(
            "algebra a { dim 2; alpha = [2/4,0; 0,1]; bracket(1,2) = [0,3/9]; }",
        )
        .unwrap();
        let text = serialize_document(&doc);
        assert!(text.contains("1/2"), "{text}");
        assert!(text.contains("[0,1/3]"), "{text}");
    }

    #[test]
    fn rejects_equal_indices() {
        let err = parse_document("algebra a { dim 2; alpha = [1,0;0,1]; bracket(1,1) = [0,0]; }")
            .unwrap_err();
        assert!(matches!(err, TextError::Semantic { .. }), "{err}");
    }

    #[test]
    fn rejects_out_of_range_indices() {
        let err = parse_document("algebra a { dim 2; alpha = [1,0;0,1]; bracket(1,3) = [0,0]; }")
            .unwrap_err();
        assert!(matches!(err, TextError::Semantic { .. }));
    }

    #[test]
    fn rejects_duplicate_names() {
        let err = parse_document(
            "algebra a { dim 1; alpha = [1]; } algebra a { dim 1; alpha = [1]; }",
        )
        .unwrap_err();
        assert!(matches!(err, TextError::Semantic { .. }));
    }

    #[test]
    fn rejects_malformed_tokens() {
        for text in [
            "algebra a { dim 2; alpha = [1,0;0,1]; bracket(1,2) = [0,1/0]; }",
            "algebra a { dim 2 alpha = [1,0;0,1]; }",
            "algebra",
            "widget a { }",
            "algebra a { dim 2; alpha = [1,0;0,1]; bracket(1,2) = [0,--1]; }",
        ] {
            assert!(parse_document(text).is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn parses_actions_and_subspaces() {
        let text = "
algebra g { dim 2; alpha = [0,0;0,0]; bracket(1,2) = [1,0]; }
algebra h { dim 1; alpha = [0]; }
action g -> h { act(1,1) = [1]; }
subspace s in g { vec = [1,0]; }
";
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.actions.len(), 1);
        let act = &doc.actions[0].action;
        assert_eq!(act.actor.dim, 2);
        assert_eq!(act.target.dim, 1);
        assert_eq!(act.table[0][0], vec![crate::rational::int(1)]);
        assert!(act.table[1][0].iter().all(num_traits::Zero::is_zero));
        assert_eq!(doc.subspace("s").unwrap().vectors.len(), 1);
    }

    #[test]
    fn action_requires_known_algebras() {
        let err = parse_document("action a -> b { }").unwrap_err();
        assert!(matches!(err, TextError::Semantic { .. }));
    }

    proptest! {
        #[test]
        fn parser_never_panics(text in "\\PC*") {
            let _ = parse_document(&text);
        }

        #[test]
        fn serialized_rationals_round_trip(n in -1000i64..1000, d in 1i64..60) {
            let x = crate::rational::ratio(n, d);
            let s = format_rational(&x);
            prop_assert_eq!(parse_rational(&s).unwrap(), x);
        }
    }
}
