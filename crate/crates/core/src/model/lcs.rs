use crate::error::{Error, Result};
use crate::format::{self, index_of, Doc, TextFormat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsInstance {
    pub alphabet: Vec<String>,
    pub strings: Vec<Vec<usize>>,
    pub l: usize,
}

impl LcsInstance {
    /// Builds an instance from token strings, collecting the alphabet in
    /// order of first appearance.
    pub fn from_tokens<S: AsRef<str>>(strings: &[Vec<S>], l: usize) -> Self {
        let mut alphabet: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let strings = strings
            .iter()
            .map(|s| {
                s.iter()
                    .map(|tok| {
                        let tok = tok.as_ref();
                        *index.entry(tok.to_string()).or_insert_with(|| {
                            alphabet.push(tok.to_string());
                            alphabet.len() - 1
                        })
                    })
                    .collect()
            })
            .collect();
        LcsInstance { alphabet, strings, l }
    }

    /// Every string is a p-sequence.
    pub fn is_injective(&self) -> bool {
        self.strings.iter().all(|s| {
            let mut seen = vec![false; self.alphabet.len()];
            s.iter().all(|&a| !std::mem::replace(&mut seen[a], true))
        })
    }

    pub fn render_string(&self, i: usize) -> Vec<String> {
        self.strings[i].iter().map(|&a| self.alphabet[a].clone()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        format::check_names(&self.alphabet, "symbol", &[format::EMPTY_WORD])?;
        if self.strings.iter().flatten().any(|&a| a >= self.alphabet.len()) {
            return Err(Error::invalid("string symbol outside alphabet"));
        }
        Ok(())
    }
}

impl TextFormat for LcsInstance {
    const KIND: &'static str = "lcs";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.l);
        d.push_line("alphabet", format::word_line(&self.alphabet));
        d.push("strings", (0..self.strings.len()).map(|i| format::word_line(&self.render_string(i))).collect());
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let alphabet = format::parse_word_line(doc.single("alphabet")?);
        let strings = doc
            .section("strings")?
            .iter()
            .map(|line| {
                format::parse_word_line(line)
                    .iter()
                    .map(|a| index_of(&alphabet, a, "symbol"))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let inst = LcsInstance { alphabet, strings, l: doc.param_usize()? };
        inst.validate()?;
        Ok(inst)
    }
}
