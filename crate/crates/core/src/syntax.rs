//! Text syntax for shapes and linear combinations.
//!
//! * word: `abc` (juxtaposed single-character generators) or `x1 x2 x3`
//! * tree: `a` or `a(b,c(d))`
//! * graph: `v1=a,v2=b; v1->v2`, or the shorthand `a->b, a->c` when every
//!   label occurs once
//! * Lie: `a` or `[a,[b,c]]`
//! * combination: `2*ab - ba + 1/2*(x1 x2)`
//!
//! Every error carries the byte offset at which parsing failed.

use std::collections::BTreeMap;

use crate::terms::generator::is_identifier;
use crate::terms::{
    canonicalize_graph, Generator, Label, LabeledDigraph, LieExpr, LinearCombo, OrientedGraph, RootedTree, Scalar, Word,
};
use crate::{Error, Result};

/// A label type with a textual form.
pub trait ParseLabel: Label {
    /// Parse one label occupying all of `text`; `pos` is its offset for errors.
    fn parse_label(text: &str, pos: usize) -> Result<Self>;

    /// Whether `c` can appear inside a label token.
    fn is_label_char(c: char) -> bool;
}

impl ParseLabel for Generator {
    fn parse_label(text: &str, pos: usize) -> Result<Self> {
        if is_identifier(text) {
            Generator::new(text)
        } else {
            Err(Error::parse(pos, format!("invalid generator {text:?}")))
        }
    }

    fn is_label_char(c: char) -> bool {
        c.is_ascii_alphanumeric() || c == '_'
    }
}

impl ParseLabel for usize {
    fn parse_label(text: &str, pos: usize) -> Result<Self> {
        text.parse()
            .map_err(|_| Error::parse(pos, format!("invalid vertex number {text:?}")))
    }

    fn is_label_char(c: char) -> bool {
        c.is_ascii_digit()
    }
}

/// How the letters of a word are delimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordSyntax {
    /// Separated when the text contains whitespace or commas, juxtaposed otherwise.
    #[default]
    Auto,
    Juxtaposed,
    Separated,
}

/// Parsing of a shape from its full text.
pub trait Parse: Sized {
    fn parse_at(text: &str, offset: usize) -> Result<Self>;
}

impl<L: ParseLabel> Parse for Word<L> {
    fn parse_at(text: &str, offset: usize) -> Result<Self> {
        word_at(text, offset, WordSyntax::Auto)
    }
}

impl<L: ParseLabel> Parse for RootedTree<L> {
    fn parse_at(text: &str, offset: usize) -> Result<Self> {
        let mut c = Cursor::new(text, offset);
        let t = c.tree()?;
        c.finish()?;
        Ok(t)
    }
}

impl<L: ParseLabel> Parse for LieExpr<L> {
    fn parse_at(text: &str, offset: usize) -> Result<Self> {
        let mut c = Cursor::new(text, offset);
        let t = c.lie()?;
        c.finish()?;
        Ok(t)
    }
}

impl<L: ParseLabel> Parse for OrientedGraph<L> {
    fn parse_at(text: &str, offset: usize) -> Result<Self> {
        graph_at(text, offset)
    }
}

pub fn parse_word(s: &str) -> Result<Word> {
    word_at(s, 0, WordSyntax::Auto)
}

pub fn parse_word_with<L: ParseLabel>(s: &str, syntax: WordSyntax) -> Result<Word<L>> {
    word_at(s, 0, syntax)
}

pub fn parse_tree(s: &str) -> Result<RootedTree> {
    RootedTree::parse_at(s, 0)
}

pub fn parse_graph(s: &str) -> Result<OrientedGraph> {
    OrientedGraph::parse_at(s, 0)
}

pub fn parse_lie(s: &str) -> Result<LieExpr> {
    LieExpr::parse_at(s, 0)
}

/// Parse any shape type, e.g. `parse::<RootedTree<usize>>("1(2,3)")`.
pub fn parse<B: Parse>(s: &str) -> Result<B> {
    B::parse_at(s, 0)
}

fn word_at<L: ParseLabel>(text: &str, offset: usize, syntax: WordSyntax) -> Result<Word<L>> {
    let separated = match syntax {
        WordSyntax::Auto => text.trim().contains(|c: char| c.is_whitespace() || c == ','),
        WordSyntax::Juxtaposed => false,
        WordSyntax::Separated => true,
    };
    let mut letters = Vec::new();
    if separated {
        for (pos, tok) in tokens(text, |c| c.is_whitespace() || c == ',') {
            letters.push(L::parse_label(tok, offset + pos)?);
        }
    } else {
        for (pos, ch) in text.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            letters.push(L::parse_label(&text[pos..pos + ch.len_utf8()], offset + pos)?);
        }
    }
    if letters.is_empty() {
        return Err(Error::parse(offset, "empty word"));
    }
    Word::new(letters)
}

/// Non-empty tokens between separator characters, with their offsets.
fn tokens(text: &str, sep: impl Fn(char) -> bool) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if sep(c) {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    offset: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, offset: usize) -> Self {
        Cursor { text, pos: 0, offset }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.offset + self.pos, msg)
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected {want:?}, found {c:?}"))),
            None => Err(self.err(format!("expected {want:?}, found end of input"))),
        }
    }

    fn label<L: ParseLabel>(&mut self) -> Result<L> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest.find(|c: char| !L::is_label_char(c)).unwrap_or(rest.len());
        if len == 0 {
            return Err(match rest.chars().next() {
                Some(c) => self.err(format!("expected a label, found {c:?}")),
                None => self.err("expected a label, found end of input"),
            });
        }
        self.pos += len;
        L::parse_label(&rest[..len], self.offset + start)
    }

    fn tree<L: ParseLabel>(&mut self) -> Result<RootedTree<L>> {
        let label = self.label()?;
        let mut children = Vec::new();
        if self.peek() == Some('(') {
            self.expect('(')?;
            loop {
                children.push(self.tree()?);
                if self.peek() == Some(',') {
                    self.expect(',')?;
                } else {
                    self.expect(')')?;
                    break;
                }
            }
        }
        Ok(RootedTree::new(label, children))
    }

    fn lie<L: ParseLabel>(&mut self) -> Result<LieExpr<L>> {
        if self.peek() == Some('[') {
            self.expect('[')?;
            let x = self.lie()?;
            self.expect(',')?;
            let y = self.lie()?;
            self.expect(']')?;
            Ok(LieExpr::bracket(x, y))
        } else {
            Ok(LieExpr::leaf(self.label()?))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected trailing {c:?}"))),
        }
    }
}

fn graph_at<L: ParseLabel>(text: &str, offset: usize) -> Result<OrientedGraph<L>> {
    if text.trim().is_empty() {
        return Err(Error::parse(offset, "empty graph"));
    }
    if text.contains('=') {
        let (decls, edges) = match text.find(';') {
            Some(i) => (&text[..i], Some((i + 1, &text[i + 1..]))),
            None => (text, None),
        };
        let mut names: BTreeMap<&str, usize> = BTreeMap::new();
        let mut labels = Vec::new();
        for (pos, decl) in tokens(decls, |c| c == ',') {
            let Some(eq) = decl.find('=') else {
                return Err(Error::parse(offset + pos, "expected name=label"));
            };
            let name = decl[..eq].trim();
            let value = decl[eq + 1..].trim();
            let value_pos = offset + pos + eq + 1 + (decl[eq + 1..].len() - decl[eq + 1..].trim_start().len());
            if name.is_empty() {
                return Err(Error::parse(offset + pos, "missing vertex name"));
            }
            if names.insert(name, labels.len()).is_some() {
                return Err(Error::parse(offset + pos, format!("vertex {name} declared twice")));
            }
            labels.push(L::parse_label(value, value_pos)?);
        }
        let mut edge_list = Vec::new();
        if let Some((base, edges)) = edges {
            for (pos, e) in tokens(edges, |c| c == ',') {
                if e.trim().is_empty() {
                    continue;
                }
                let (s, t) = split_arrow(e, offset + base + pos)?;
                let lookup = |n: &str| {
                    names
                        .get(n.trim())
                        .copied()
                        .ok_or_else(|| Error::parse(offset + base + pos, format!("undeclared vertex {:?}", n.trim())))
                };
                edge_list.push((lookup(s)?, lookup(t)?));
            }
        }
        canonicalize_graph(&LabeledDigraph::new(labels, edge_list))
    } else {
        let mut index: BTreeMap<L, usize> = BTreeMap::new();
        let mut labels = Vec::new();
        let mut edge_list = Vec::new();
        let mut vertex = |text: &str, pos: usize, labels: &mut Vec<L>| -> Result<usize> {
            let lead = text.len() - text.trim_start().len();
            let l = L::parse_label(text.trim(), pos + lead)?;
            Ok(*index.entry(l.clone()).or_insert_with(|| {
                labels.push(l);
                labels.len() - 1
            }))
        };
        for (pos, item) in tokens(text, |c| c == ',') {
            if item.trim().is_empty() {
                continue;
            }
            if item.contains("->") {
                let (s, t) = split_arrow(item, offset + pos)?;
                let si = vertex(s, offset + pos, &mut labels)?;
                let ti = vertex(t, offset + pos + s.len() + 2, &mut labels)?;
                edge_list.push((si, ti));
            } else {
                vertex(item, offset + pos, &mut labels)?;
            }
        }
        canonicalize_graph(&LabeledDigraph::new(labels, edge_list))
    }
}

fn split_arrow(e: &str, pos: usize) -> Result<(&str, &str)> {
    match e.split_once("->") {
        Some((s, t)) if !s.trim().is_empty() && !t.trim().is_empty() => Ok((s, t)),
        _ => Err(Error::parse(
            pos,
            format!("expected an edge x->y, found {:?}", e.trim()),
        )),
    }
}

/// Parse `c1*s1 ± c2*s2 ± …`. A coefficient is an integer or `p/q` followed by
/// `*`; shapes may be wrapped in parentheses. `0` is the zero combination.
pub fn parse_combo<B: Parse + Ord + Clone>(s: &str) -> Result<LinearCombo<B>> {
    if s.trim() == "0" {
        return Ok(LinearCombo::zero());
    }
    let mut out = LinearCombo::zero();
    for (pos, negative, term) in split_terms(s)? {
        let (coeff, shape_pos, shape_text) = split_coeff(term, pos)?;
        let shape = B::parse_at(shape_text, shape_pos)?;
        out.add_term(shape, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

/// Split at top-level `+`/`-` (not `->`); yields (offset, negated, text).
fn split_terms(s: &str) -> Result<Vec<(usize, bool, &str)>> {
    fn push<'a>(
        s: &'a str,
        start: usize,
        end: usize,
        negative: bool,
        out: &mut Vec<(usize, bool, &'a str)>,
    ) -> Result<()> {
        let part = &s[start..end];
        if part.trim().is_empty() {
            return Err(Error::parse(start, "missing term"));
        }
        out.push((start, negative, part));
        Ok(())
    }
    let bytes = s.as_bytes();
    let mut depth: i64 = 0;
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let mut leading = true;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(i, "unbalanced closing bracket"));
                }
            }
            b'+' | b'-' if depth == 0 && !(b == b'-' && bytes.get(i + 1) == Some(&b'>')) => {
                if leading && s[start..i].trim().is_empty() {
                    // leading sign of the first term
                    negative = b == b'-';
                } else {
                    push(s, start, i, negative, &mut out)?;
                    negative = b == b'-';
                }
                start = i + 1;
                leading = false;
                continue;
            }
            _ => {}
        }
        if !b.is_ascii_whitespace() {
            leading = false;
        }
    }
    if depth != 0 {
        return Err(Error::parse(s.len(), "unbalanced opening bracket"));
    }
    push(s, start, s.len(), negative, &mut out)?;
    Ok(out)
}

fn split_coeff(term: &str, pos: usize) -> Result<(Scalar, usize, &str)> {
    let lead = term.len() - term.trim_start().len();
    let body = term.trim();
    let body_pos = pos + lead;
    let mut coeff = Scalar::from_integer(1.into());
    let mut shape = body;
    let mut shape_pos = body_pos;
    let digits = body
        .find(|c: char| !(c.is_ascii_digit() || c == '/'))
        .unwrap_or(body.len());
    let after = body[digits..].trim_start();
    if digits > 0 && after.starts_with('*') {
        coeff = parse_scalar(&body[..digits], body_pos)?;
        let star = body.len() - after.len();
        shape = body[star + 1..].trim_start();
        shape_pos = body_pos + body.len() - shape.len();
    }
    let shape = shape.trim_end();
    if shape.starts_with('(') && shape.ends_with(')') && wraps(shape) {
        return Ok((coeff, shape_pos + 1, &shape[1..shape.len() - 1]));
    }
    Ok((coeff, shape_pos, shape))
}

/// Whether the opening parenthesis at 0 closes at the final character.
fn wraps(s: &str) -> bool {
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return i == s.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

pub fn parse_scalar(text: &str, pos: usize) -> Result<Scalar> {
    let bad = || Error::parse(pos, format!("invalid coefficient {text:?}"));
    let text = text.trim();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    if num.is_empty() || den.is_empty() || !num.chars().chain(den.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let n: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(Error::parse(pos, "zero denominator"));
    }
    let v = Scalar::new(n, d);
    Ok(if neg { -v } else { v })
}
