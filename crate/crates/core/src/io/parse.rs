//! Parser for the line-oriented model format.
//!
//! ```text
//! # comment
//! states: a b c
//! P(a) = {a}
//! P(b) = {b}
//! P(c) = {a, b, c}
//! ```
//!
//! Set members may be separated by commas, whitespace, or both. The parser
//! keeps going after an error so that one pass reports every problem.

use std::collections::HashMap;
use std::fmt;

use crate::model::Model;
use crate::space::{Event, StateSpace, MAX_STATES};

/// A located parse error. Lines and columns are 1-based; columns count
/// characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

/// A parsed model file and where each part of it came from.
#[derive(Debug, Clone)]
pub struct ModelDocument {
    pub source: String,
    pub model: Model,
    /// Line of the `states:` declaration.
    pub states_line: usize,
    /// Line of the `P(...)` declaration of each state, by state index.
    pub image_lines: Vec<usize>,
}

impl ModelDocument {
    pub fn parse(text: &str) -> Result<Self, Vec<Diagnostic>> {
        Parser::default().run(text)
    }
}

/// Parses a model file.
pub fn parse_model(text: &str) -> Result<Model, Vec<Diagnostic>> {
    ModelDocument::parse(text).map(|d| d.model)
}

/// Parses a set literal such as `{a,b}` over `space`.
pub fn parse_event(space: &StateSpace, text: &str) -> Result<Event, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut cur = Cursor::new(text.trim_end_matches(['\r', '\n']), 1);
    cur.skip_ws();
    let members = cur.set(&mut diags);
    cur.skip_ws();
    if members.is_some() && !cur.at_end() {
        diags.push(cur.error("unexpected text after set"));
    }
    let mut bits = 0u64;
    for (name, column) in members.unwrap_or_default() {
        match space.index_of(&name) {
            Some(i) => bits |= 1 << i,
            None => diags.push(Diagnostic {
                line: 1,
                column,
                message: format!("unknown state '{name}'"),
            }),
        }
    }
    if diags.is_empty() {
        Ok(Event::from_bits_truncate(space.size(), bits))
    } else {
        Err(diags)
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

type Ident = (String, usize);

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor { text, pos: 0, line }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn error(&self, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<Ident> {
        let column = self.column();
        let rest = &self.text[self.pos..];
        let len = rest
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((rest[..len].to_string(), column))
    }

    fn describe_next(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of line".to_string(),
        }
    }

    /// `{ (ident ((,|ws) ident)*)? }`
    fn set(&mut self, diags: &mut Vec<Diagnostic>) -> Option<Vec<Ident>> {
        if !self.eat('{') {
            diags.push(self.error(format!("expected '{{', found {}", self.describe_next())));
            return None;
        }
        let mut members = Vec::new();
        self.skip_ws();
        if self.eat('}') {
            return Some(members);
        }
        loop {
            match self.ident() {
                Some(id) => members.push(id),
                None => {
                    diags.push(self.error(format!(
                        "expected state name, found {}",
                        self.describe_next()
                    )));
                    return None;
                }
            }
            self.skip_ws();
            if self.eat('}') {
                return Some(members);
            }
            if self.eat(',') {
                self.skip_ws();
            } else if self.at_end() {
                diags.push(self.error("unterminated set, expected '}'"));
                return None;
            } else if !matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                diags.push(self.error(format!(
                    "expected ',' or '}}', found {}",
                    self.describe_next()
                )));
                return None;
            }
        }
    }
}

struct StatesDecl {
    line: usize,
    labels: Vec<Ident>,
}

struct ImageDecl {
    line: usize,
    state: Ident,
    members: Option<Vec<Ident>>,
}

#[derive(Default)]
struct Parser {
    diags: Vec<Diagnostic>,
    states: Option<StatesDecl>,
    images: Vec<ImageDecl>,
}

impl Parser {
    fn run(mut self, text: &str) -> Result<ModelDocument, Vec<Diagnostic>> {
        for (i, raw) in text.split('\n').enumerate() {
            let raw = raw.strip_suffix('\r').unwrap_or(raw);
            let content = raw.split('#').next().unwrap_or("");
            self.line(content, i + 1);
        }
        let doc = self.resolve(text);
        match doc {
            Some(doc) if self.diags.is_empty() => Ok(doc),
            _ => {
                self.diags.sort_by_key(|d| (d.line, d.column));
                Err(self.diags)
            }
        }
    }

    fn line(&mut self, content: &str, line: usize) {
        let mut cur = Cursor::new(content, line);
        cur.skip_ws();
        if cur.at_end() {
            return;
        }
        let start = cur.pos;
        match cur.ident().map(|(w, _)| w).as_deref() {
            Some("states") => {
                cur.skip_ws();
                if !cur.eat(':') {
                    self.diags.push(cur.error("expected ':' after 'states'"));
                    return;
                }
                self.states_line(cur);
            }
            Some("P") => self.image_line(cur),
            _ => {
                cur.pos = start;
                self.diags
                    .push(cur.error("expected 'states:' declaration or 'P(<state>) = {...}'"));
            }
        }
    }

    fn states_line(&mut self, mut cur: Cursor) {
        let line = cur.line;
        let mut labels = Vec::new();
        loop {
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            match cur.ident() {
                Some(id) => labels.push(id),
                None => {
                    self.diags.push(cur.error(format!(
                        "invalid character {} in state list",
                        cur.describe_next()
                    )));
                    while cur.peek().is_some_and(|c| !c.is_whitespace()) {
                        cur.pos += cur.peek().unwrap().len_utf8();
                    }
                }
            }
        }
        if let Some(prev) = &self.states {
            self.diags.push(Diagnostic {
                line,
                column: 1,
                message: format!(
                    "duplicate 'states:' declaration (first at line {})",
                    prev.line
                ),
            });
            return;
        }
        if labels.is_empty() {
            self.diags.push(cur.error("empty state list"));
        }
        if labels.len() > MAX_STATES {
            let (_, column) = labels[MAX_STATES];
            self.diags.push(Diagnostic {
                line,
                column,
                message: format!("too many states ({} > {MAX_STATES})", labels.len()),
            });
        }
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for (name, column) in &labels {
            if seen.insert(name, ()).is_some() {
                self.diags.push(Diagnostic {
                    line,
                    column: *column,
                    message: format!("duplicate state '{name}'"),
                });
            }
        }
        self.states = Some(StatesDecl { line, labels });
    }

    fn image_line(&mut self, mut cur: Cursor) {
        let line = cur.line;
        cur.skip_ws();
        if !cur.eat('(') {
            self.diags.push(cur.error("expected '(' after 'P'"));
            return;
        }
        cur.skip_ws();
        let Some(state) = cur.ident() else {
            self.diags.push(cur.error(format!(
                "expected state name, found {}",
                cur.describe_next()
            )));
            return;
        };
        // A malformed right-hand side still counts as this state's P-line.
        let members = self.image_rhs(&mut cur);
        self.images.push(ImageDecl {
            line,
            state,
            members,
        });
    }

    fn image_rhs(&mut self, cur: &mut Cursor) -> Option<Vec<Ident>> {
        cur.skip_ws();
        if !cur.eat(')') {
            self.diags
                .push(cur.error(format!("expected ')', found {}", cur.describe_next())));
            return None;
        }
        cur.skip_ws();
        if !cur.eat('=') {
            self.diags
                .push(cur.error(format!("expected '=', found {}", cur.describe_next())));
            return None;
        }
        cur.skip_ws();
        let members = cur.set(&mut self.diags)?;
        cur.skip_ws();
        if !cur.at_end() {
            self.diags.push(cur.error("unexpected text after set"));
            return None;
        }
        Some(members)
    }

    fn resolve(&mut self, text: &str) -> Option<ModelDocument> {
        let Some(states) = self.states.take() else {
            self.diags.push(Diagnostic {
                line: 1,
                column: 1,
                message: "missing 'states:' declaration".into(),
            });
            return None;
        };
        // Duplicates and overflow were diagnosed on the states line; keep
        // resolving against what is left so later lines still get checked.
        let mut labels: Vec<Ident> = Vec::new();
        for l in &states.labels {
            if !labels.iter().any(|(n, _)| *n == l.0) {
                labels.push(l.clone());
            }
        }
        labels.truncate(MAX_STATES);
        let space = StateSpace::new(labels.iter().map(|(n, _)| n.clone())).ok()?;
        let n = space.size();
        let unknown = |(name, column): &Ident, line: usize| Diagnostic {
            line,
            column: *column,
            message: format!("unknown state '{name}'"),
        };

        let mut images: Vec<Option<(Event, usize)>> = vec![None; n];
        for decl in &self.images {
            let mut bits = 0u64;
            for m in decl.members.iter().flatten() {
                match space.index_of(&m.0) {
                    Some(j) => bits |= 1 << j,
                    None => self.diags.push(unknown(m, decl.line)),
                }
            }
            let Some(i) = space.index_of(&decl.state.0) else {
                self.diags.push(unknown(&decl.state, decl.line));
                continue;
            };
            if let Some((_, first)) = images[i] {
                self.diags.push(Diagnostic {
                    line: decl.line,
                    column: 1,
                    message: format!(
                        "duplicate P-line for state '{}' (first at line {first})",
                        decl.state.0
                    ),
                });
                continue;
            }
            images[i] = Some((Event::from_bits_truncate(n, bits), decl.line));
        }
        for (i, slot) in images.iter().enumerate() {
            if slot.is_none() {
                let (name, column) = &labels[i];
                self.diags.push(Diagnostic {
                    line: states.line,
                    column: *column,
                    message: format!("missing P-line for state '{name}'"),
                });
            }
        }
        if !self.diags.is_empty() {
            return None;
        }
        let (events, image_lines): (Vec<_>, Vec<_>) =
            images.into_iter().map(Option::unwrap).unzip();
        let model = Model::new(space, events).expect("images built over the parsed space");
        Some(ModelDocument {
            source: text.to_string(),
            model,
            states_line: states.line,
            image_lines,
        })
    }
}
