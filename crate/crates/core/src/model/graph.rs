use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{self, Doc, TextFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphPropertyKind {
    Reach,
    DagReach,
    LayeredReach,
    Cycle,
    UndirectedReach,
    Tree,
    Forest,
    UndirectedCycle,
}

impl GraphPropertyKind {
    pub const ALL: [GraphPropertyKind; 8] = [
        GraphPropertyKind::Reach,
        GraphPropertyKind::DagReach,
        GraphPropertyKind::LayeredReach,
        GraphPropertyKind::Cycle,
        GraphPropertyKind::UndirectedReach,
        GraphPropertyKind::Tree,
        GraphPropertyKind::Forest,
        GraphPropertyKind::UndirectedCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphPropertyKind::Reach => "reach",
            GraphPropertyKind::DagReach => "dag-reach",
            GraphPropertyKind::LayeredReach => "layered-reach",
            GraphPropertyKind::Cycle => "cycle",
            GraphPropertyKind::UndirectedReach => "undirected-reach",
            GraphPropertyKind::Tree => "tree",
            GraphPropertyKind::Forest => "forest",
            GraphPropertyKind::UndirectedCycle => "undirected-cycle",
        }
    }

    pub fn is_directed(self) -> bool {
        matches!(
            self,
            GraphPropertyKind::Reach
                | GraphPropertyKind::DagReach
                | GraphPropertyKind::LayeredReach
                | GraphPropertyKind::Cycle
        )
    }

    pub fn needs_endpoints(self) -> bool {
        matches!(
            self,
            GraphPropertyKind::Reach
                | GraphPropertyKind::DagReach
                | GraphPropertyKind::LayeredReach
                | GraphPropertyKind::UndirectedReach
        )
    }
}

impl fmt::Display for GraphPropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphPropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(format!("unknown graph property `{s}`")))
    }
}

/// Adjacency is kept as successor sets; the text form is the n×n matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    pub directed: bool,
    succ: Vec<BTreeSet<usize>>,
    pub layers: Option<Vec<usize>>,
    pub s: Option<usize>,
    pub t: Option<usize>,
}

impl Graph {
    pub fn new(n: usize, directed: bool) -> Self {
        Graph { n, directed, succ: vec![BTreeSet::new(); n], layers: None, s: None, t: None }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self) -> usize {
        self.succ.push(BTreeSet::new());
        self.n += 1;
        self.n - 1
    }

    /// Undirected graphs store both directions.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "edge ({a},{b}) outside {} vertices", self.n);
        self.succ[a].insert(b);
        if !self.directed {
            self.succ[b].insert(a);
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.succ[a].contains(&b)
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[v].iter().copied()
    }

    /// All stored arcs (a, b) in ascending order; undirected edges appear twice.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|a| self.succ[a].iter().map(move |&b| (a, b))).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(BTreeSet::len).sum()
    }

    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.n];
        for (a, b) in self.arcs() {
            pred[b].push(a);
        }
        pred
    }

    pub fn layer_count(&self) -> usize {
        self.layers.as_ref().and_then(|l| l.iter().max().map(|m| m + 1)).unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        for v in [self.s, self.t].into_iter().flatten() {
            if v >= self.n {
                return Err(Error::invalid(format!("distinguished vertex {v} out of range")));
            }
        }
        if !self.directed {
            for (a, b) in self.arcs() {
                if !self.has_edge(b, a) {
                    return Err(Error::invalid("undirected graph with asymmetric matrix"));
                }
            }
        }
        if let Some(layers) = &self.layers {
            if layers.len() != self.n {
                return Err(Error::invalid("layer assignment length differs from n"));
            }
            for (a, b) in self.arcs() {
                if layers[b] != layers[a] + 1 {
                    return Err(Error::invalid(format!("edge ({a},{b}) skips layers")));
                }
            }
            if let (Some(s), Some(t)) = (self.s, self.t) {
                let last = self.layer_count() - 1;
                let first_count = layers.iter().filter(|&&l| l == 0).count();
                let last_count = layers.iter().filter(|&&l| l == last).count();
                if layers[s] != 0 || layers[t] != last || first_count != 1 || last_count != 1 {
                    return Err(Error::invalid("s and t must be alone on the first and last layers"));
                }
            }
        }
        Ok(())
    }
}

impl TextFormat for Graph {
    const KIND: &'static str = "graph";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.n);
        d.push_line("directed", format::flag(self.directed));
        let rows = (0..self.n)
            .map(|a| (0..self.n).map(|b| if self.has_edge(a, b) { '1' } else { '0' }).collect())
            .collect();
        d.push("matrix", rows);
        if let Some(l) = &self.layers {
            d.push_line("layers", format::join(l));
        }
        if let Some(s) = self.s {
            d.push_line("s", s);
        }
        if let Some(t) = self.t {
            d.push_line("t", t);
        }
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let n = doc.param_usize()?;
        let mut g = Graph::new(n, doc.flag("directed")?);
        let rows = doc.section("matrix")?;
        if rows.len() != n {
            return Err(Error::parse(format!("matrix has {} rows, expected {n}", rows.len())));
        }
        for (a, row) in rows.iter().enumerate() {
            let cells: Vec<char> = row.chars().collect();
            if cells.len() != n {
                return Err(Error::parse(format!("matrix row {a} has wrong length")));
            }
            for (b, c) in cells.into_iter().enumerate() {
                match c {
                    '1' => {
                        g.succ[a].insert(b);
                    }
                    '0' => {}
                    _ => return Err(Error::parse("graph matrix entries must be 0 or 1")),
                }
            }
        }
        if doc.opt_section("layers").is_some() {
            g.layers = Some(doc.usizes("layers")?);
        }
        if doc.opt_section("s").is_some() {
            g.s = Some(doc.usize("s")?);
        }
        if doc.opt_section("t").is_some() {
            g.t = Some(doc.usize("t")?);
        }
        g.validate()?;
        Ok(g)
    }
}
