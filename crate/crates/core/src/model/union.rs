//! Union problem instances and the word encodings of their base problems.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{self, Doc, TextFormat};
use crate::model::formula::{BooleanFormula, Formula};
use crate::model::generator::GeneratorInstance;
use crate::model::graph::{Graph, GraphPropertyKind};
use crate::word::{InstantiationWord, TemplateWord, HOLE, ONE, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnionVariant {
    Family,
    Subset,
    Weighted,
}

/// The base language a union word is tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnionBase {
    Bf,
    Graph(GraphPropertyKind),
    Agen,
}

impl fmt::Display for UnionBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnionBase::Bf => f.write_str("bf"),
            UnionBase::Agen => f.write_str("agen"),
            UnionBase::Graph(k) => f.write_str(k.name()),
        }
    }
}

impl FromStr for UnionBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bf" => Ok(UnionBase::Bf),
            "agen" => Ok(UnionBase::Agen),
            _ => s.parse().map(UnionBase::Graph),
        }
    }
}

/// Bf words: the formula in prefix tokens, then one bit per variable.
pub fn bf_template(f: &BooleanFormula) -> TemplateWord {
    let mut toks = Vec::new();
    f.root.prefix_tokens(&mut toks);
    toks.extend(std::iter::repeat_n(HOLE.to_string(), f.vars));
    TemplateWord::new(toks).expect("prefix tokens avoid reserved symbols")
}

pub fn decode_bf(symbols: &[String]) -> Result<(BooleanFormula, Vec<bool>)> {
    let (root, used) = Formula::from_prefix(symbols)?;
    let bits = decode_bits(&symbols[used..])?;
    Ok((BooleanFormula::new(root, bits.len())?, bits))
}

fn decode_bits(symbols: &[String]) -> Result<Vec<bool>> {
    symbols
        .iter()
        .map(|s| match s.as_str() {
            ZERO => Ok(false),
            ONE => Ok(true),
            _ => Err(Error::parse(format!("expected a bit, found `{s}`"))),
        })
        .collect()
}

/// Graph words: `n<n>`, optional `s<i>`, `t<j>`, optional `l<layer>` per
/// vertex, then the n×n matrix row by row. Matrices of undirected kinds are
/// symmetrized when decoded.
pub fn graph_template(
    n: usize,
    s: Option<usize>,
    t: Option<usize>,
    layers: Option<&[usize]>,
) -> TemplateWord {
    let mut toks = vec![format!("n{n}")];
    toks.extend(s.map(|s| format!("s{s}")));
    toks.extend(t.map(|t| format!("t{t}")));
    if let Some(l) = layers {
        toks.extend(l.iter().map(|l| format!("l{l}")));
    }
    toks.extend(std::iter::repeat_n(HOLE.to_string(), n * n));
    TemplateWord::new(toks).expect("graph header tokens avoid reserved symbols")
}

fn tagged(tok: &str, tag: char) -> Option<usize> {
    tok.strip_prefix(tag).and_then(|d| d.parse().ok())
}

/// Header of a graph word: vertex count, endpoints, layers, and the number
/// of tokens before the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphHeader {
    pub n: usize,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub layers: Option<Vec<usize>>,
    pub len: usize,
}

pub fn graph_header(symbols: &[String]) -> Result<GraphHeader> {
    let n = symbols.first().and_then(|t| tagged(t, 'n')).ok_or_else(|| Error::parse("graph word lacks n"))?;
    let mut h = GraphHeader { n, s: None, t: None, layers: None, len: 1 };
    if let Some(s) = symbols.get(h.len).and_then(|t| tagged(t, 's')) {
        h.s = Some(s);
        h.len += 1;
    }
    if let Some(t) = symbols.get(h.len).and_then(|t| tagged(t, 't')) {
        h.t = Some(t);
        h.len += 1;
    }
    if symbols.get(h.len).and_then(|t| tagged(t, 'l')).is_some() {
        let layers = symbols
            .get(h.len..h.len + n)
            .ok_or_else(|| Error::parse("truncated layer tokens"))?
            .iter()
            .map(|t| tagged(t, 'l').ok_or_else(|| Error::parse("bad layer token")))
            .collect::<Result<Vec<_>>>()?;
        h.layers = Some(layers);
        h.len += n;
    }
    Ok(h)
}

pub fn decode_graph(kind: GraphPropertyKind, symbols: &[String]) -> Result<Graph> {
    let h = graph_header(symbols)?;
    let n = h.n;
    let mut g = Graph::new(n, kind.is_directed());
    g.s = h.s;
    g.t = h.t;
    g.layers = h.layers;
    let bits = decode_bits(&symbols[h.len..])?;
    if bits.len() != n * n {
        return Err(Error::parse("graph word matrix has the wrong size"));
    }
    for a in 0..n {
        for b in 0..n {
            if bits[a * n + b] {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Words for a template built by [`graph_template`]: the matrix of `g`.
pub fn encode_graph(template: &TemplateWord, g: &Graph) -> Result<InstantiationWord> {
    let n = g.n();
    let bits: Vec<bool> = (0..n * n).map(|i| g.has_edge(i / n, i % n)).collect();
    template.instantiate(&bits)
}

/// Agen words: `n<n>`, the table as `u<c>` tokens, `x<target>`, then each
/// candidate as `u<c>` followed by its selection bit.
pub fn agen_template(inst: &GeneratorInstance) -> TemplateWord {
    let n = inst.size();
    let mut toks = Vec::with_capacity(2 + n * n + 2 * inst.candidates.len());
    toks.push(format!("n{n}"));
    for row in &inst.table {
        toks.extend(row.iter().map(|c| format!("u{c}")));
    }
    toks.push(format!("x{}", inst.target));
    for &c in &inst.candidates {
        toks.push(format!("u{c}"));
        toks.push(HOLE.to_string());
    }
    TemplateWord::new(toks).expect("agen tokens avoid reserved symbols")
}

/// The generator instance behind an agen word, with the selected candidates
/// as candidate set and k equal to their number.
pub fn decode_agen(symbols: &[String]) -> Result<GeneratorInstance> {
    let bad = || Error::parse("malformed agen word");
    let n = symbols.first().and_then(|t| tagged(t, 'n')).ok_or_else(bad)?;
    if symbols.len() < 2 + n * n || (symbols.len() - 2 - n * n) % 2 != 0 {
        return Err(bad());
    }
    let cells = symbols[1..1 + n * n]
        .iter()
        .map(|t| tagged(t, 'u').filter(|&c| c < n).ok_or_else(bad))
        .collect::<Result<Vec<_>>>()?;
    let table: Vec<Vec<usize>> = cells.chunks(n.max(1)).map(<[usize]>::to_vec).take(n).collect();
    let target = tagged(&symbols[1 + n * n], 'x').filter(|&x| x < n).ok_or_else(bad)?;
    let mut selected = Vec::new();
    for pair in symbols[2 + n * n..].chunks(2) {
        let c = tagged(&pair[0], 'u').filter(|&c| c < n).ok_or_else(bad)?;
        if decode_bits(&pair[1..])?[0] {
            selected.push(c);
        }
    }
    selected.sort_unstable();
    selected.dedup();
    Ok(GeneratorInstance {
        names: (0..n).map(|i| format!("u{i}")).collect(),
        table,
        target,
        k: selected.len(),
        candidates: selected,
        associative: false,
    })
}

fn dedup(words: Vec<InstantiationWord>) -> Vec<InstantiationWord> {
    let mut seen = std::collections::HashSet::new();
    words.into_iter().filter(|w| seen.insert(w.clone())).collect()
}

fn words_section(words: &[InstantiationWord]) -> Vec<String> {
    words.iter().map(|w| format::word_line(w.symbols())).collect()
}

fn parse_words(lines: &[String], template: &TemplateWord) -> Result<Vec<InstantiationWord>> {
    lines
        .iter()
        .map(|l| {
            let w = InstantiationWord::new(format::parse_word_line(l))?;
            if w.template() != *template {
                return Err(Error::parse(format!("`{l}` does not instantiate the template")));
            }
            Ok(w)
        })
        .collect()
}

fn check_members(template: &TemplateWord, words: &[InstantiationWord]) -> Result<()> {
    if words.iter().any(|w| w.template() != *template) {
        return Err(Error::IncompatibleInstantiations);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyUnionInstance {
    pub base: UnionBase,
    pub template: TemplateWord,
    pub families: Vec<Vec<InstantiationWord>>,
}

impl FamilyUnionInstance {
    /// Families are sets: repeated members are dropped, first occurrence kept.
    pub fn new(base: UnionBase, template: TemplateWord, families: Vec<Vec<InstantiationWord>>) -> Result<Self> {
        let families: Vec<_> = families.into_iter().map(dedup).collect();
        for f in &families {
            check_members(&template, f)?;
        }
        Ok(FamilyUnionInstance { base, template, families })
    }

    pub fn k(&self) -> usize {
        self.families.len()
    }
}

impl TextFormat for FamilyUnionInstance {
    const KIND: &'static str = "family-union";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.k());
        d.push_line("base", self.base);
        d.push_line("template", format::word_line(self.template.symbols()));
        for (i, f) in self.families.iter().enumerate() {
            d.push(&format!("family {}", i + 1), words_section(f));
        }
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let k = doc.param_usize()?;
        let template = TemplateWord::new(format::parse_word_line(doc.single("template")?))?;
        let families = (1..=k)
            .map(|i| parse_words(doc.section(&format!("family {i}"))?, &template))
            .collect::<Result<Vec<_>>>()?;
        FamilyUnionInstance::new(doc.single("base")?.parse()?, template, families)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetUnionInstance {
    pub base: UnionBase,
    pub template: TemplateWord,
    pub set: Vec<InstantiationWord>,
    pub k: usize,
}

impl SubsetUnionInstance {
    pub fn new(base: UnionBase, template: TemplateWord, set: Vec<InstantiationWord>, k: usize) -> Result<Self> {
        let set = dedup(set);
        check_members(&template, &set)?;
        Ok(SubsetUnionInstance { base, template, set, k })
    }
}

impl TextFormat for SubsetUnionInstance {
    const KIND: &'static str = "subset-union";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.k);
        d.push_line("base", self.base);
        d.push_line("template", format::word_line(self.template.symbols()));
        d.push("set", words_section(&self.set));
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let template = TemplateWord::new(format::parse_word_line(doc.single("template")?))?;
        let set = parse_words(doc.section("set")?, &template)?;
        SubsetUnionInstance::new(doc.single("base")?.parse()?, template, set, doc.param_usize()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedUnionInstance {
    pub base: UnionBase,
    pub template: TemplateWord,
    pub k: usize,
}

impl TextFormat for WeightedUnionInstance {
    const KIND: &'static str = "weighted-union";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.k);
        d.push_line("base", self.base);
        d.push_line("template", format::word_line(self.template.symbols()));
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        Ok(WeightedUnionInstance {
            base: doc.single("base")?.parse()?,
            template: TemplateWord::new(format::parse_word_line(doc.single("template")?))?,
            k: doc.param_usize()?,
        })
    }
}
