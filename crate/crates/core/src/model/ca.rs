//! Cellular automata. A neighbour `None` is the border `#`, so leftmost and
//! rightmost cells use their own transition entries.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::format::{self, index_of, Doc, TextFormat};

pub const BORDER: &str = "#";

pub type Neighbour = Option<usize>;
pub type Triple = (Neighbour, usize, Neighbour);

/// State numbers for the dag property are the indices, plus one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellularAutomaton {
    pub states: Vec<String>,
    pub transitions: BTreeMap<Triple, Vec<usize>>,
    pub accepting: Vec<usize>,
    pub deterministic: bool,
    pub dag: bool,
}

impl CellularAutomaton {
    pub fn new(states: Vec<String>) -> Self {
        CellularAutomaton {
            states,
            transitions: BTreeMap::new(),
            accepting: Vec::new(),
            deterministic: true,
            dag: false,
        }
    }

    pub fn add(&mut self, l: Neighbour, c: usize, r: Neighbour, next: usize) {
        let e = self.transitions.entry((l, c, r)).or_default();
        if !e.contains(&next) {
            e.push(next);
            e.sort_unstable();
        }
    }

    pub fn successors(&self, l: Neighbour, c: usize, r: Neighbour) -> &[usize] {
        self.transitions.get(&(l, c, r)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting.binary_search(&q).is_ok()
    }

    pub fn is_functional(&self) -> bool {
        self.transitions.values().all(|v| v.len() <= 1)
    }

    /// Every produced state exceeds all observed ones.
    pub fn is_monotone(&self) -> bool {
        self.transitions.iter().all(|(&(l, c, r), next)| {
            let top = l.unwrap_or(0).max(c).max(r.unwrap_or(0));
            next.iter().all(|&n| n > top)
        })
    }

    pub fn validate(&self) -> Result<()> {
        format::check_names(&self.states, "state", &[BORDER, "->", "ε"])?;
        let q = self.states.len();
        for (&(l, c, r), next) in &self.transitions {
            let obs = [l, Some(c), r];
            if obs.iter().flatten().chain(next).any(|&x| x >= q) {
                return Err(Error::invalid("transition state out of range"));
            }
        }
        if self.accepting.iter().any(|&f| f >= q) || !self.accepting.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::invalid("accepting states must be sorted and in range"));
        }
        if self.deterministic && !self.is_functional() {
            return Err(Error::invalid("deterministic automaton with two successors on one triple"));
        }
        if self.dag && !self.is_monotone() {
            return Err(Error::invalid("dag automaton with a non-increasing transition"));
        }
        Ok(())
    }

    fn neighbour_name(&self, n: Neighbour) -> &str {
        n.map_or(BORDER, |q| &self.states[q])
    }

    fn parse_neighbour(&self, tok: &str) -> Result<Neighbour> {
        if tok == BORDER {
            Ok(None)
        } else {
            index_of(&self.states, tok, "state").map(Some)
        }
    }

    fn write_doc(&self, d: &mut Doc) {
        d.push_line("states", self.states.join(" "));
        d.push(
            "accepting",
            super::tm::line_or_empty(self.accepting.iter().map(|&f| self.states[f].clone()).collect()),
        );
        d.push_line("deterministic", format::flag(self.deterministic));
        d.push_line("dag", format::flag(self.dag));
        let mut lines = Vec::new();
        for (&(l, c, r), next) in &self.transitions {
            for &n in next {
                lines.push(format!(
                    "{} {} {} -> {}",
                    self.neighbour_name(l),
                    self.states[c],
                    self.neighbour_name(r),
                    self.states[n]
                ));
            }
        }
        d.push("transitions", lines);
    }

    fn read_doc(doc: &Doc) -> Result<Self> {
        let mut a = CellularAutomaton::new(doc.tokens("states")?);
        let mut acc = doc
            .tokens("accepting")?
            .iter()
            .map(|f| index_of(&a.states, f, "state"))
            .collect::<Result<Vec<_>>>()?;
        acc.sort_unstable();
        acc.dedup();
        a.accepting = acc;
        a.deterministic = doc.flag("deterministic")?;
        a.dag = doc.flag("dag")?;
        for line in doc.section("transitions")? {
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.len() != 5 || t[3] != "->" {
                return Err(Error::parse(format!("bad transition `{line}`")));
            }
            let l = a.parse_neighbour(t[0])?;
            let c = index_of(&a.states, t[1], "state")?;
            let r = a.parse_neighbour(t[2])?;
            let n = index_of(&a.states, t[4], "state")?;
            a.add(l, c, r, n);
        }
        a.validate()?;
        Ok(a)
    }

    fn initial_line(&self, initial: &[usize]) -> String {
        initial.iter().map(|&q| self.states[q].as_str()).collect::<Vec<_>>().join(" ")
    }

    fn parse_initial(&self, doc: &Doc) -> Result<Vec<usize>> {
        let init = doc
            .tokens("initial")?
            .iter()
            .map(|q| index_of(&self.states, q, "state"))
            .collect::<Result<Vec<_>>>()?;
        if init.is_empty() {
            return Err(Error::invalid("initial string must have at least one cell"));
        }
        Ok(init)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellularInstance {
    pub automaton: CellularAutomaton,
    pub initial: Vec<usize>,
}

impl CellularInstance {
    pub fn new(automaton: CellularAutomaton, initial: Vec<usize>) -> Result<Self> {
        automaton.validate()?;
        if initial.is_empty() || initial.iter().any(|&q| q >= automaton.states.len()) {
            return Err(Error::invalid("initial string must be a nonempty string of states"));
        }
        Ok(CellularInstance { automaton, initial })
    }

    pub fn cells(&self) -> usize {
        self.initial.len()
    }
}

impl TextFormat for CellularInstance {
    const KIND: &'static str = "ca";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.initial.len());
        self.automaton.write_doc(&mut d);
        d.push_line("initial", self.automaton.initial_line(&self.initial));
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let a = CellularAutomaton::read_doc(doc)?;
        let init = a.parse_initial(doc)?;
        CellularInstance::new(a, init)
    }
}

/// A cellular instance whose acceptance is asked within `t` global steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedCellularInstance {
    pub instance: CellularInstance,
    pub t: usize,
}

impl TextFormat for BoundedCellularInstance {
    const KIND: &'static str = "ca-bounded";

    fn to_doc(&self) -> Doc {
        let mut d = self.instance.to_doc();
        d.kind = Self::KIND.to_string();
        d.push_line("steps", self.t);
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let a = CellularAutomaton::read_doc(doc)?;
        let init = a.parse_initial(doc)?;
        Ok(BoundedCellularInstance { instance: CellularInstance::new(a, init)?, t: doc.usize("steps")? })
    }
}

/// A cellular automaton run one cell at a time: within a major step cells
/// 1..k move in order. `steps` bounds the major steps in which acceptance
/// counts. `horizon` is set once the automaton has been normalized to make
/// exactly `horizon · k` moves on accepting runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentialCellularInstance {
    pub automaton: CellularAutomaton,
    pub initial: Vec<usize>,
    pub steps: Option<usize>,
    pub horizon: Option<usize>,
}

impl SequentialCellularInstance {
    pub fn cells(&self) -> usize {
        self.initial.len()
    }
}

impl TextFormat for SequentialCellularInstance {
    const KIND: &'static str = "seqca";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.initial.len());
        self.automaton.write_doc(&mut d);
        d.push_line("initial", self.automaton.initial_line(&self.initial));
        if let Some(t) = self.steps {
            d.push_line("steps", t);
        }
        if let Some(h) = self.horizon {
            d.push_line("horizon", h);
        }
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let a = CellularAutomaton::read_doc(doc)?;
        let initial = a.parse_initial(doc)?;
        let opt = |name: &str| -> Result<Option<usize>> {
            match doc.opt_section(name) {
                Some(_) => doc.usize(name).map(Some),
                None => Ok(None),
            }
        };
        Ok(SequentialCellularInstance { automaton: a, initial, steps: opt("steps")?, horizon: opt("horizon")? })
    }
}
