use crate::error::{Error, Result};
use crate::format::{self, Doc, TextFormat};
use crate::model::graph::Graph;

/// The graph is serialized as an edge list rather than a matrix since the
/// constructed games have thousands of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdPebbleGame {
    pub graph: Graph,
    pub threshold: Vec<u32>,
    pub start: Vec<usize>,
    pub target: Vec<usize>,
    pub dag: bool,
    pub cap: Option<usize>,
}

impl ThresholdPebbleGame {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if !self.graph.directed {
            return Err(Error::invalid("pebble games are played on directed graphs"));
        }
        if self.threshold.len() != n {
            return Err(Error::invalid("threshold list length differs from vertex count"));
        }
        for set in [&self.start, &self.target] {
            if set.iter().any(|&v| v >= n) || !set.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::invalid("pebblings must be sorted vertex sets"));
            }
        }
        self.graph.validate()
    }
}

impl TextFormat for ThresholdPebbleGame {
    const KIND: &'static str = "tpg";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.n());
        d.push_line("dag", format::flag(self.dag));
        if let Some(k) = self.cap {
            d.push_line("cap", k);
        }
        d.push("threshold", line(&self.threshold));
        d.push("start", line(&self.start));
        d.push("target", line(&self.target));
        if let Some(l) = &self.graph.layers {
            d.push("layers", line(l));
        }
        d.push("edges", self.graph.arcs().iter().map(|(a, b)| format!("{a} {b}")).collect());
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let n = doc.param_usize()?;
        let mut graph = Graph::new(n, true);
        for l in doc.section("edges")? {
            let t: Vec<&str> = l.split_whitespace().collect();
            if t.len() != 2 {
                return Err(Error::parse(format!("bad edge `{l}`")));
            }
            let (a, b) = (format::parse_usize(t[0])?, format::parse_usize(t[1])?);
            if a >= n || b >= n {
                return Err(Error::parse(format!("edge `{l}` out of range")));
            }
            graph.add_edge(a, b);
        }
        if doc.opt_section("layers").is_some() {
            graph.layers = Some(doc.usizes("layers")?);
        }
        let g = ThresholdPebbleGame {
            graph,
            threshold: doc.usizes("threshold")?.into_iter().map(|t| t as u32).collect(),
            start: doc.usizes("start")?,
            target: doc.usizes("target")?,
            dag: doc.flag("dag")?,
            cap: match doc.opt_section("cap") {
                Some(_) => Some(doc.usize("cap")?),
                None => None,
            },
        };
        g.validate()?;
        Ok(g)
    }
}

fn line<T: ToString>(items: &[T]) -> Vec<String> {
    if items.is_empty() {
        Vec::new()
    } else {
        vec![format::join(items)]
    }
}
