//! Problem instances: ordered tuples of equal-length symbol strings.
//!
//! A document is UTF-8 text with one string per line. An optional header
//! line `#s=<int> t=<int> mode=<chars|tokens>` may appear before the first
//! string (the first such line wins); any other `#` line and every blank line is skipped. In `chars`
//! mode each Unicode scalar of a line is one symbol. In `tokens` mode the
//! symbols of a line are its whitespace-separated tokens.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One alphabet element. Equality is exact token equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Box<str>);

impl Symbol {
    pub fn new(token: impl Into<Box<str>>) -> Self {
        Symbol(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol(c.to_string().into_boxed_str())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// How a line of text is split into symbols.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SymbolMode {
    #[default]
    Chars,
    Tokens,
}

impl SymbolMode {
    pub fn split(self, line: &str) -> Vec<Symbol> {
        match self {
            SymbolMode::Chars => line.chars().map(Symbol::from).collect(),
            SymbolMode::Tokens => line.split_whitespace().map(Symbol::new).collect(),
        }
    }

    /// Inverse of [`SymbolMode::split`] for well-formed symbol sequences.
    pub fn render(self, symbols: &[Symbol]) -> String {
        match self {
            SymbolMode::Chars => symbols.iter().map(Symbol::as_str).collect(),
            SymbolMode::Tokens => symbols
                .iter()
                .map(Symbol::as_str)
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SymbolMode::Chars => "chars",
            SymbolMode::Tokens => "tokens",
        }
    }
}

impl FromStr for SymbolMode {
    type Err = InstanceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chars" => Ok(SymbolMode::Chars),
            "tokens" => Ok(SymbolMode::Tokens),
            other => Err(InstanceError::InvalidHeader(format!(
                "unknown mode `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("instance document contains no strings")]
    EmptyDocument,
    #[error("an instance needs at least 2 strings, found {found}")]
    TooFewStrings { found: usize },
    #[error("string {index} has {found} symbols, expected {expected}")]
    LengthMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("overlap t={t} must satisfy 1 <= t < s={s}")]
    InvalidOverlap { s: usize, t: usize },
    #[error("gram length {k} out of range for a string of {len} symbols")]
    GramOutOfRange { k: usize, len: usize },
    #[error("malformed header: {0}")]
    InvalidHeader(String),
}

/// First `k` symbols of `x`.
pub fn first_gram(x: &[Symbol], k: usize) -> Result<&[Symbol], InstanceError> {
    if k == 0 || k > x.len() {
        return Err(InstanceError::GramOutOfRange { k, len: x.len() });
    }
    Ok(&x[..k])
}

/// Last `k` symbols of `x`.
pub fn last_gram(x: &[Symbol], k: usize) -> Result<&[Symbol], InstanceError> {
    if k == 0 || k > x.len() {
        return Err(InstanceError::GramOutOfRange { k, len: x.len() });
    }
    Ok(&x[x.len() - k..])
}

/// A validated instance: `n >= 2` strings of exactly `s` symbols each,
/// chained with overlaps of `t` symbols, `1 <= t < s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    strings: Vec<Vec<Symbol>>,
    s: usize,
    t: usize,
    mode: SymbolMode,
}

impl Instance {
    /// Validates `strings` against `s` and `t`. Input order is preserved.
    pub fn new(
        strings: Vec<Vec<Symbol>>,
        s: usize,
        t: usize,
        mode: SymbolMode,
    ) -> Result<Self, InstanceError> {
        if t == 0 || t >= s {
            return Err(InstanceError::InvalidOverlap { s, t });
        }
        if strings.is_empty() {
            return Err(InstanceError::EmptyDocument);
        }
        if strings.len() < 2 {
            return Err(InstanceError::TooFewStrings {
                found: strings.len(),
            });
        }
        if let Some((index, found)) = strings
            .iter()
            .enumerate()
            .find(|(_, x)| x.len() != s)
            .map(|(i, x)| (i, x.len()))
        {
            return Err(InstanceError::LengthMismatch {
                index,
                expected: s,
                found,
            });
        }
        Ok(Instance {
            strings,
            s,
            t,
            mode,
        })
    }

    /// Character-mode instance; `s` is taken from the first string.
    pub fn from_strs<S: AsRef<str>>(strings: &[S], t: usize) -> Result<Self, InstanceError> {
        let split: Vec<Vec<Symbol>> = strings
            .iter()
            .map(|x| SymbolMode::Chars.split(x.as_ref()))
            .collect();
        let s = split.first().map_or(0, Vec::len);
        Instance::new(split, s, t, SymbolMode::Chars)
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    /// Always false for a constructed instance; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn mode(&self) -> SymbolMode {
        self.mode
    }

    pub fn strings(&self) -> &[Vec<Symbol>] {
        &self.strings
    }

    /// Component at 0-based `index`.
    pub fn component(&self, index: usize) -> &[Symbol] {
        &self.strings[index]
    }

    /// Leading t-gram of component `index`.
    pub fn head(&self, index: usize) -> &[Symbol] {
        &self.strings[index][..self.t]
    }

    /// Trailing t-gram of component `index`.
    pub fn tail(&self, index: usize) -> &[Symbol] {
        let x = &self.strings[index];
        &x[x.len() - self.t..]
    }

    /// Whether component `j` may directly follow component `i`.
    pub fn chains(&self, i: usize, j: usize) -> bool {
        self.tail(i) == self.head(j)
    }

    pub fn render(&self, index: usize) -> String {
        self.mode.render(&self.strings[index])
    }

    /// Same instance with components reordered by `order` (0-based).
    pub fn permuted(&self, order: &[usize]) -> Instance {
        Instance {
            strings: order.iter().map(|&i| self.strings[i].clone()).collect(),
            ..self.clone()
        }
    }

    /// Every component reversed symbol-by-symbol.
    pub fn reversed(&self) -> Instance {
        Instance {
            strings: self
                .strings
                .iter()
                .map(|x| x.iter().rev().cloned().collect())
                .collect(),
            ..self.clone()
        }
    }

    /// Serializes to the document format, header included.
    pub fn to_document(&self) -> String {
        let mut out = format!("#s={} t={} mode={}\n", self.s, self.t, self.mode.name());
        for i in 0..self.len() {
            out.push_str(&self.render(i));
            out.push('\n');
        }
        out
    }
}

/// Values from a `#s=.. t=.. mode=..` header line. Missing keys stay `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Header {
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub mode: Option<SymbolMode>,
}

impl Header {
    /// Parses a comment line as a header. Returns `Ok(None)` for a plain
    /// comment, i.e. one that does not start with a `key=value` pair.
    fn parse(line: &str) -> Result<Option<Header>, InstanceError> {
        let body = line.trim_start_matches('#').trim();
        let looks_like_header = body
            .split_whitespace()
            .next()
            .and_then(|w| w.split_once('='))
            .is_some_and(|(k, _)| matches!(k, "s" | "t" | "mode"));
        if !looks_like_header {
            return Ok(None);
        }
        let mut header = Header::default();
        for pair in body.split_whitespace() {
            let (key, value) = pair.split_once('=').ok_or_else(|| {
                InstanceError::InvalidHeader(format!("expected key=value, got `{pair}`"))
            })?;
            let count = || {
                value.parse::<usize>().map_err(|_| {
                    InstanceError::InvalidHeader(format!("`{key}` is not a count: `{value}`"))
                })
            };
            match key {
                "s" => header.s = Some(count()?),
                "t" => header.t = Some(count()?),
                "mode" => header.mode = Some(value.parse()?),
                other => {
                    return Err(InstanceError::InvalidHeader(format!(
                        "unknown key `{other}`"
                    )))
                }
            }
        }
        Ok(Some(header))
    }
}

/// Caller-side overrides for parsing. Anything left `None` falls back to
/// the document header, then to defaults: `chars` mode, `t = 1`, and `s`
/// equal to the length of the first string.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub mode: Option<SymbolMode>,
}

/// Parses a document with explicit `s` and `t`.
pub fn parse_instance(text: &str, s: usize, t: usize) -> Result<Instance, InstanceError> {
    parse_instance_with(
        text,
        &ParseOptions {
            s: Some(s),
            t: Some(t),
            mode: None,
        },
    )
}

pub fn parse_instance_with(text: &str, options: &ParseOptions) -> Result<Instance, InstanceError> {
    let mut header = None;
    let mut lines = Vec::new();
    for raw in text.lines() {
        let line = raw.trim_end();
        if line.trim_start().is_empty() {
            continue;
        }
        if line.starts_with('#') {
            // The header must precede every string; later ones are comments.
            if header.is_none() && lines.is_empty() {
                header = Header::parse(line)?;
            }
            continue;
        }
        lines.push(line);
    }
    let header = header.unwrap_or_default();

    let mode = options.mode.or(header.mode).unwrap_or_default();
    let strings: Vec<Vec<Symbol>> = lines.iter().map(|l| mode.split(l)).collect();
    if strings.is_empty() {
        return Err(InstanceError::EmptyDocument);
    }
    let s = options.s.or(header.s).unwrap_or(strings[0].len());
    let t = options.t.or(header.t).unwrap_or(1);
    Instance::new(strings, s, t, mode)
}
