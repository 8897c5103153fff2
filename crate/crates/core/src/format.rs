//! Sectioned text format shared by every instance kind.
//!
//! ```text
//! kind parameter
//! [section]
//! line
//! line
//! [other]
//! ```
//!
//! Blank lines and lines starting with `//` are ignored.

use crate::error::{Error, Result};

pub const DEFAULT_UNARY_CAP: usize = 1_000_000;

/// Marker for an empty word on a line of its own.
pub const EMPTY_WORD: &str = "ε";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Doc {
    pub kind: String,
    pub param: String,
    pub sections: Vec<(String, Vec<String>)>,
}

impl Doc {
    pub fn new(kind: &str, param: impl ToString) -> Self {
        Doc { kind: kind.to_string(), param: param.to_string(), sections: Vec::new() }
    }

    pub fn push(&mut self, name: &str, lines: Vec<String>) -> &mut Self {
        self.sections.push((name.to_string(), lines));
        self
    }

    pub fn push_line(&mut self, name: &str, line: impl ToString) -> &mut Self {
        self.push(name, vec![line.to_string()])
    }

    pub fn parse(text: &str) -> Result<Doc> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with("//"));
        let header = lines.next().ok_or_else(|| Error::parse("empty document"))?;
        let mut parts = header.splitn(2, char::is_whitespace);
        let kind = parts.next().unwrap_or_default().to_string();
        let param = parts.next().unwrap_or_default().trim().to_string();
        let mut doc = Doc { kind, param, sections: Vec::new() };
        for line in lines {
            if line.starts_with('[') && line.ends_with(']') && line.len() >= 2 {
                let name = line[1..line.len() - 1].trim().to_string();
                if doc.sections.iter().any(|(n, _)| *n == name) {
                    return Err(Error::parse(format!("duplicate section [{name}]")));
                }
                doc.sections.push((name, Vec::new()));
            } else {
                match doc.sections.last_mut() {
                    Some((_, body)) => body.push(line.to_string()),
                    None => return Err(Error::parse(format!("line outside section: {line}"))),
                }
            }
        }
        Ok(doc)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.kind);
        if !self.param.is_empty() {
            out.push(' ');
            out.push_str(&self.param);
        }
        out.push('\n');
        for (name, body) in &self.sections {
            out.push('[');
            out.push_str(name);
            out.push_str("]\n");
            for line in body {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    }

    pub fn expect_kind(&self, kind: &str) -> Result<()> {
        if self.kind != kind {
            return Err(Error::parse(format!("expected kind `{kind}`, found `{}`", self.kind)));
        }
        Ok(())
    }

    pub fn param_usize(&self) -> Result<usize> {
        self.param
            .parse()
            .map_err(|_| Error::parse(format!("bad header parameter `{}`", self.param)))
    }

    pub fn opt_section(&self, name: &str) -> Option<&[String]> {
        self.sections.iter().find(|(n, _)| n == name).map(|(_, b)| b.as_slice())
    }

    pub fn section(&self, name: &str) -> Result<&[String]> {
        self.opt_section(name)
            .ok_or_else(|| Error::parse(format!("missing section [{name}]")))
    }

    /// A section holding exactly one line.
    pub fn single(&self, name: &str) -> Result<&str> {
        match self.section(name)? {
            [line] => Ok(line),
            _ => Err(Error::parse(format!("section [{name}] must hold one line"))),
        }
    }

    /// A section holding zero or one line, as whitespace tokens.
    pub fn tokens(&self, name: &str) -> Result<Vec<String>> {
        match self.section(name)? {
            [] => Ok(Vec::new()),
            [line] => Ok(line.split_whitespace().map(str::to_string).collect()),
            _ => Err(Error::parse(format!("section [{name}] must hold one line"))),
        }
    }

    pub fn usize(&self, name: &str) -> Result<usize> {
        parse_usize(self.single(name)?)
    }

    pub fn usizes(&self, name: &str) -> Result<Vec<usize>> {
        self.tokens(name)?.iter().map(|t| parse_usize(t)).collect()
    }

    pub fn flag(&self, name: &str) -> Result<bool> {
        parse_flag(self.single(name)?)
    }

    pub fn unary(&self, name: &str, cap: usize) -> Result<usize> {
        parse_unary(self.section(name)?, cap)
    }
}

pub fn parse_usize(tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::parse(format!("expected a number, found `{tok}`")))
}

pub fn parse_flag(tok: &str) -> Result<bool> {
    match tok {
        "yes" => Ok(true),
        "no" => Ok(false),
        _ => Err(Error::parse(format!("expected yes/no, found `{tok}`"))),
    }
}

pub fn flag(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Unary numbers: zero is an empty section, n > 0 a single run of `1`s.
pub fn unary(n: usize) -> Vec<String> {
    if n == 0 {
        Vec::new()
    } else {
        vec!["1".repeat(n)]
    }
}

pub fn parse_unary(lines: &[String], cap: usize) -> Result<usize> {
    match lines {
        [] => Ok(0),
        [line] => {
            if !line.chars().all(|c| c == '1') {
                return Err(Error::parse("unary number must be a run of 1s"));
            }
            let n = line.len();
            if n > cap {
                return Err(Error::parse(format!("unary number {n} exceeds cap {cap}")));
            }
            Ok(n)
        }
        _ => Err(Error::parse("unary number must be on one line")),
    }
}

/// Words inside a section: tokens separated by spaces, `ε` for the empty word.
pub fn word_line(symbols: &[String]) -> String {
    if symbols.is_empty() {
        EMPTY_WORD.to_string()
    } else {
        symbols.join(" ")
    }
}

pub fn parse_word_line(line: &str) -> Vec<String> {
    if line == EMPTY_WORD {
        Vec::new()
    } else {
        line.split_whitespace().map(str::to_string).collect()
    }
}

/// Name lookup for declared symbol or state lists.
pub fn index_of(names: &[String], name: &str, what: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::parse(format!("unknown {what} `{name}`")))
}

pub fn check_names(names: &[String], what: &str, forbidden: &[&str]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if n.is_empty() || n.chars().any(char::is_whitespace) || forbidden.contains(&n.as_str()) {
            return Err(Error::parse(format!("bad {what} name `{n}`")));
        }
        if !seen.insert(n) {
            return Err(Error::parse(format!("duplicate {what} `{n}`")));
        }
    }
    Ok(())
}

/// Every instance kind implements this.
pub trait TextFormat: Sized {
    const KIND: &'static str;

    fn to_doc(&self) -> Doc;

    fn from_doc(doc: &Doc) -> Result<Self>;

    fn serialize(&self) -> String {
        self.to_doc().serialize()
    }

    fn parse(text: &str) -> Result<Self> {
        let doc = Doc::parse(text)?;
        doc.expect_kind(Self::KIND)?;
        Self::from_doc(&doc)
    }
}
