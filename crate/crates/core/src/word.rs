//! Templates, instantiations and their union.
//!
//! A template is a word over a base alphabet plus the hole symbol `?`. An
//! instantiation fills every hole with `0` or `1`. Since `0` and `1` are
//! excluded from base alphabets, an instantiation determines its template.

use std::fmt;

use crate::error::{Error, Result};

pub const HOLE: &str = "?";
pub const ZERO: &str = "0";
pub const ONE: &str = "1";

fn is_reserved(sym: &str) -> bool {
    sym == HOLE || sym == ZERO || sym == ONE
}

fn check_token(sym: &str) -> Result<()> {
    if sym.is_empty() || sym.chars().any(char::is_whitespace) {
        return Err(Error::parse(format!("bad symbol {sym:?}")));
    }
    Ok(())
}

/// Splits a word: whitespace-separated tokens, or one token per character
/// when the text has no whitespace.
pub fn tokenize(text: &str) -> Vec<String> {
    let text = text.trim();
    if text.chars().any(char::is_whitespace) {
        text.split_whitespace().map(str::to_string).collect()
    } else {
        text.chars().map(|c| c.to_string()).collect()
    }
}

/// Compact rendering when every token is one character, spaced otherwise.
pub fn render(symbols: &[String]) -> String {
    if symbols.iter().all(|s| s.chars().count() == 1) {
        symbols.concat()
    } else {
        symbols.join(" ")
    }
}

/// Checks that a declared base alphabet avoids the reserved symbols.
pub fn check_base_alphabet<S: AsRef<str>>(alphabet: &[S]) -> Result<()> {
    for a in alphabet {
        let a = a.as_ref();
        check_token(a)?;
        if is_reserved(a) {
            return Err(Error::parse(format!("reserved symbol {a:?} in base alphabet")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TemplateWord {
    symbols: Vec<String>,
}

impl TemplateWord {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for s in &symbols {
            check_token(s)?;
            if s == ZERO || s == ONE {
                return Err(Error::parse(format!("template contains {s:?}")));
            }
        }
        Ok(TemplateWord { symbols })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(tokenize(text))
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn holes(&self) -> Vec<usize> {
        (0..self.symbols.len()).filter(|&i| self.symbols[i] == HOLE).collect()
    }

    pub fn hole_count(&self) -> usize {
        self.symbols.iter().filter(|s| *s == HOLE).count()
    }

    /// Fills the holes in order with the given bits.
    pub fn instantiate(&self, bits: &[bool]) -> Result<InstantiationWord> {
        let holes = self.hole_count();
        if bits.len() != holes {
            return Err(Error::Arity { expected: holes, got: bits.len() });
        }
        let mut it = bits.iter();
        let symbols = self
            .symbols
            .iter()
            .map(|s| {
                if s == HOLE {
                    if *it.next().unwrap() { ONE } else { ZERO }.to_string()
                } else {
                    s.clone()
                }
            })
            .collect();
        Ok(InstantiationWord { symbols })
    }

    /// Instantiation with ones exactly at the given hole indices.
    pub fn instantiate_ones(&self, ones: &[usize]) -> Result<InstantiationWord> {
        let mut bits = vec![false; self.hole_count()];
        for &i in ones {
            if i >= bits.len() {
                return Err(Error::invalid(format!("hole index {i} out of range")));
            }
            bits[i] = true;
        }
        self.instantiate(&bits)
    }
}

impl fmt::Display for TemplateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.symbols))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InstantiationWord {
    symbols: Vec<String>,
}

impl InstantiationWord {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for s in &symbols {
            check_token(s)?;
            if s == HOLE {
                return Err(Error::parse("instantiation contains `?`"));
            }
        }
        Ok(InstantiationWord { symbols })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(tokenize(text))
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn template(&self) -> TemplateWord {
        let symbols = self
            .symbols
            .iter()
            .map(|s| if s == ZERO || s == ONE { HOLE.to_string() } else { s.clone() })
            .collect();
        TemplateWord { symbols }
    }

    /// The filled-in bits, in hole order.
    pub fn bits(&self) -> Vec<bool> {
        self.symbols
            .iter()
            .filter(|s| *s == ZERO || *s == ONE)
            .map(|s| s == ONE)
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| *s == ONE).count()
    }
}

impl fmt::Display for InstantiationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.symbols))
    }
}

pub fn weight(s: &InstantiationWord) -> usize {
    s.weight()
}

pub fn is_instantiation_of<S: AsRef<str>>(s: &[S], t: &TemplateWord) -> bool {
    s.len() == t.len()
        && s.iter().zip(t.symbols()).all(|(a, b)| {
            let a = a.as_ref();
            if b == HOLE {
                a == ZERO || a == ONE
            } else {
                a == b
            }
        })
}

/// Bitwise or at the hole positions.
pub fn union_instantiations(items: &[InstantiationWord]) -> Result<InstantiationWord> {
    let first = items.first().ok_or(Error::IncompatibleInstantiations)?;
    let template = first.template();
    let mut symbols = first.symbols.clone();
    for item in &items[1..] {
        if item.len() != first.len() || item.template() != template {
            return Err(Error::IncompatibleInstantiations);
        }
        for (out, s) in symbols.iter_mut().zip(&item.symbols) {
            if s == ONE {
                *out = ONE.to_string();
            }
        }
    }
    Ok(InstantiationWord { symbols })
}

/// Or of bit vectors, used by the union solvers to avoid rebuilding words.
pub(crate) fn or_bits(acc: &mut [bool], bits: &[bool]) {
    for (a, b) in acc.iter_mut().zip(bits) {
        *a |= *b;
    }
}
