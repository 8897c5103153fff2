use crate::error::{Error, Result};
use crate::format::{self, index_of, Doc, TextFormat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplacementSystem {
    pub alphabet: Vec<String>,
    pub rules: Vec<(Vec<usize>, Vec<usize>)>,
}

impl ReplacementSystem {
    pub fn validate(&self) -> Result<()> {
        format::check_names(&self.alphabet, "symbol", &["->", "ε"])?;
        for (l, r) in &self.rules {
            if l.is_empty() {
                return Err(Error::invalid("rule with empty left-hand side"));
            }
            if l.iter().chain(r).any(|&a| a >= self.alphabet.len()) {
                return Err(Error::invalid("rule symbol outside alphabet"));
            }
        }
        Ok(())
    }

    pub fn word(&self, tokens: &[String]) -> Result<Vec<usize>> {
        tokens.iter().map(|t| index_of(&self.alphabet, t, "symbol")).collect()
    }

    pub fn render(&self, w: &[usize]) -> Vec<String> {
        w.iter().map(|&a| self.alphabet[a].clone()).collect()
    }
}

impl TextFormat for ReplacementSystem {
    const KIND: &'static str = "rs";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.rules.len());
        d.push_line("alphabet", self.alphabet.join(" "));
        d.push(
            "rules",
            self.rules
                .iter()
                .map(|(l, r)| {
                    format!("{} -> {}", self.render(l).join(" "), format::word_line(&self.render(r)))
                })
                .collect(),
        );
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let alphabet = doc.tokens("alphabet")?;
        let mut rules = Vec::new();
        for line in doc.section("rules")? {
            let (l, r) = line
                .split_once("->")
                .ok_or_else(|| Error::parse(format!("bad rule `{line}`")))?;
            let lw = l.split_whitespace().map(|t| index_of(&alphabet, t, "symbol")).collect::<Result<Vec<_>>>()?;
            let rw = format::parse_word_line(r.trim())
                .iter()
                .map(|t| index_of(&alphabet, t, "symbol"))
                .collect::<Result<Vec<_>>>()?;
            rules.push((lw, rw));
        }
        let rs = ReplacementSystem { alphabet, rules };
        rs.validate()?;
        Ok(rs)
    }
}
