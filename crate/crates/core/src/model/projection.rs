//! Position-wise projections whose outputs for one input length instantiate
//! a single template.

use crate::error::{Error, Result};
use crate::format::{self, Doc, TextFormat};
use crate::word::{check_base_alphabet, ONE, ZERO};

/// One output position: a constant, or a symbol looked up from one source
/// position. Sources index the concatenation `x · advice · b` where `b` is
/// the choice tape of `blocks · width` bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutputSpec {
    Const(String),
    Dep { src: usize, table: Vec<(String, String)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleProjection {
    pub input_len: usize,
    pub kappa: usize,
    pub advice: Vec<String>,
    pub blocks: usize,
    pub width: usize,
    pub outputs: Vec<OutputSpec>,
}

/// Source of an output position, resolved against the input layout.
pub enum Source {
    Input(usize),
    Advice(usize),
    Bit { block: usize, offset: usize },
}

impl CompatibleProjection {
    pub fn bits(&self) -> usize {
        self.blocks * self.width
    }

    pub fn source(&self, src: usize) -> Result<Source> {
        let (n, a) = (self.input_len, self.advice.len());
        if src < n {
            Ok(Source::Input(src))
        } else if src < n + a {
            Ok(Source::Advice(src - n))
        } else if src < n + a + self.bits() {
            let j = src - n - a;
            Ok(Source::Bit { block: j / self.width, offset: j % self.width })
        } else {
            Err(Error::invalid(format!("source position {src} out of range")))
        }
    }

    pub fn validate(&self) -> Result<()> {
        for o in &self.outputs {
            match o {
                OutputSpec::Const(c) => check_base_alphabet(&[c])?,
                OutputSpec::Dep { src, table } => match self.source(*src)? {
                    Source::Bit { .. } => {
                        for (i, o) in table {
                            if ![ZERO, ONE].contains(&i.as_str()) || ![ZERO, ONE].contains(&o.as_str()) {
                                return Err(Error::invalid("choice-bit positions must map bits to bits"));
                            }
                        }
                    }
                    _ => check_base_alphabet(&table.iter().map(|(_, o)| o).collect::<Vec<_>>())?,
                },
            }
        }
        Ok(())
    }

    pub fn lookup(table: &[(String, String)], sym: &str) -> Result<String> {
        table
            .iter()
            .find(|(i, _)| i == sym)
            .map(|(_, o)| o.clone())
            .ok_or_else(|| Error::invalid(format!("no table entry for `{sym}`")))
    }

    /// The projection applied to `x · advice · b`.
    pub fn apply(&self, x: &[String], b: &[bool]) -> Result<Vec<String>> {
        if x.len() != self.input_len || b.len() != self.bits() {
            return Err(Error::Arity { expected: self.input_len + self.bits(), got: x.len() + b.len() });
        }
        self.outputs
            .iter()
            .map(|o| match o {
                OutputSpec::Const(c) => Ok(c.clone()),
                OutputSpec::Dep { src, table } => {
                    let sym = match self.source(*src)? {
                        Source::Input(i) => x[i].clone(),
                        Source::Advice(i) => self.advice[i].clone(),
                        Source::Bit { block, offset } => {
                            if b[block * self.width + offset] { ONE } else { ZERO }.to_string()
                        }
                    };
                    Self::lookup(table, &sym)
                }
            })
            .collect()
    }
}

/// A projection together with the input word it is applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionInput {
    pub projection: CompatibleProjection,
    pub x: Vec<String>,
}

impl TextFormat for ProjectionInput {
    const KIND: &'static str = "projection";

    fn to_doc(&self) -> Doc {
        let p = &self.projection;
        let mut d = Doc::new(Self::KIND, p.kappa);
        d.push_line("input", format::word_line(&self.x));
        d.push_line("advice", format::word_line(&p.advice));
        d.push_line("blocks", p.blocks);
        d.push_line("width", p.width);
        let lines = p
            .outputs
            .iter()
            .map(|o| match o {
                OutputSpec::Const(c) => format!("const {c}"),
                OutputSpec::Dep { src, table } => {
                    let pairs: Vec<String> = table.iter().map(|(i, o)| format!("{i}={o}")).collect();
                    format!("dep {src} {}", pairs.join(" "))
                }
            })
            .collect();
        d.push("outputs", lines);
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let x = format::parse_word_line(doc.single("input")?);
        let mut outputs = Vec::new();
        for line in doc.section("outputs")? {
            let t: Vec<&str> = line.split_whitespace().collect();
            match t.as_slice() {
                ["const", c] => outputs.push(OutputSpec::Const(c.to_string())),
                ["dep", src, pairs @ ..] => {
                    let table = pairs
                        .iter()
                        .map(|p| {
                            p.split_once('=')
                                .map(|(i, o)| (i.to_string(), o.to_string()))
                                .ok_or_else(|| Error::parse(format!("bad table entry `{p}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    outputs.push(OutputSpec::Dep { src: format::parse_usize(src)?, table });
                }
                _ => return Err(Error::parse(format!("bad output spec `{line}`"))),
            }
        }
        let projection = CompatibleProjection {
            input_len: x.len(),
            kappa: doc.param_usize()?,
            advice: format::parse_word_line(doc.single("advice")?),
            blocks: doc.usize("blocks")?,
            width: doc.usize("width")?,
            outputs,
        };
        projection.validate()?;
        Ok(ProjectionInput { projection, x })
    }
}
