use crate::error::{Error, Result};
use crate::format::{self, index_of, Doc, TextFormat};

/// Exhaustive associativity check is used up to this universe size; larger
/// tables are sampled.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInstance {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub target: usize,
    pub candidates: Vec<usize>,
    pub k: usize,
    pub associative: bool,
}

impl GeneratorInstance {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        format::check_names(&self.names, "element", &["ε"])?;
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&c| c >= n)) {
            return Err(Error::invalid("operation table must be n×n over the universe"));
        }
        if self.target >= n || self.candidates.iter().any(|&c| c >= n) {
            return Err(Error::invalid("target or candidate outside the universe"));
        }
        if !self.candidates.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid("candidates must be a sorted set"));
        }
        if self.associative {
            if let Some((a, b, c)) = find_non_associative(&self.table) {
                return Err(Error::invalid(format!(
                    "table not associative at ({}, {}, {})",
                    self.names[a], self.names[b], self.names[c]
                )));
            }
        }
        Ok(())
    }
}

/// Exhaustive up to [`EXHAUSTIVE_ASSOC_LIMIT`] elements, a deterministic
/// sample of triples beyond.
pub fn find_non_associative(table: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    let n = table.len();
    let check = |a: usize, b: usize, c: usize| table[table[a][b]][c] != table[a][table[b][c]];
    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if check(a, b, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        return None;
    }
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..200_000 {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        let (a, b, c) = ((x % n as u64) as usize, ((x >> 20) % n as u64) as usize, ((x >> 40) % n as u64) as usize);
        if check(a, b, c) {
            return Some((a, b, c));
        }
    }
    None
}

impl TextFormat for GeneratorInstance {
    const KIND: &'static str = "agen";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.k);
        d.push_line("universe", self.names.join(" "));
        d.push(
            "table",
            self.table
                .iter()
                .map(|r| r.iter().map(|&c| self.names[c].as_str()).collect::<Vec<_>>().join(" "))
                .collect(),
        );
        d.push_line("target", &self.names[self.target]);
        d.push(
            "candidates",
            super::tm::line_or_empty(self.candidates.iter().map(|&c| self.names[c].clone()).collect()),
        );
        d.push_line("associative", format::flag(self.associative));
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let names = doc.tokens("universe")?;
        let table = doc
            .section("table")?
            .iter()
            .map(|row| {
                row.split_whitespace().map(|c| index_of(&names, c, "element")).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut candidates = doc
            .tokens("candidates")?
            .iter()
            .map(|c| index_of(&names, c, "element"))
            .collect::<Result<Vec<_>>>()?;
        candidates.sort_unstable();
        candidates.dedup();
        let inst = GeneratorInstance {
            target: index_of(&names, doc.single("target")?, "element")?,
            names,
            table,
            candidates,
            k: doc.param_usize()?,
            associative: doc.flag("associative")?,
        };
        inst.validate()?;
        Ok(inst)
    }
}
