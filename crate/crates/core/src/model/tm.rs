//! Turing machines: single-tape machines, bounded instances and two-tape
//! machines with a read-only input tape.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::format::{self, index_of, Doc, TextFormat, DEFAULT_UNARY_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    L,
    S,
    R,
}

impl Move {
    pub fn delta(self) -> isize {
        match self {
            Move::L => -1,
            Move::S => 0,
            Move::R => 1,
        }
    }

    fn parse(tok: &str) -> Result<Move> {
        match tok {
            "L" => Ok(Move::L),
            "S" => Ok(Move::S),
            "R" => Ok(Move::R),
            _ => Err(Error::parse(format!("bad move `{tok}`"))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Move::L => "L",
            Move::S => "S",
            Move::R => "R",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TmTransition {
    pub from: usize,
    pub read: usize,
    pub to: usize,
    pub write: usize,
    pub mv: Move,
}

/// Symbol 0 of the alphabet is the blank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleTapeTM {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    pub transitions: Vec<TmTransition>,
    pub initial: usize,
    pub accepting: Vec<usize>,
    pub deterministic: bool,
}

impl SingleTapeTM {
    pub fn validate(&self) -> Result<()> {
        format::check_names(&self.states, "state", &["->"])?;
        format::check_names(&self.alphabet, "symbol", &["->"])?;
        if self.alphabet.is_empty() {
            return Err(Error::invalid("tape alphabet needs a blank"));
        }
        let (q, g) = (self.states.len(), self.alphabet.len());
        if self.initial >= q || self.accepting.iter().any(|&f| f >= q) {
            return Err(Error::invalid("state index out of range"));
        }
        for tr in &self.transitions {
            if tr.from >= q || tr.to >= q || tr.read >= g || tr.write >= g {
                return Err(Error::invalid("transition index out of range"));
            }
        }
        if self.deterministic && !self.is_functional() {
            return Err(Error::invalid("deterministic machine with two transitions on one pair"));
        }
        Ok(())
    }

    pub fn is_functional(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.transitions.iter().all(|t| seen.insert((t.from, t.read)))
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting.contains(&q)
    }

    pub fn transition_index(&self) -> HashMap<(usize, usize), Vec<TmTransition>> {
        let mut idx: HashMap<(usize, usize), Vec<TmTransition>> = HashMap::new();
        for t in &self.transitions {
            idx.entry((t.from, t.read)).or_default().push(*t);
        }
        idx
    }

    fn write_doc(&self, d: &mut Doc) {
        d.push_line("states", self.states.join(" "));
        d.push_line("alphabet", self.alphabet.join(" "));
        d.push_line("initial", &self.states[self.initial]);
        d.push(
            "accepting",
            line_or_empty(self.accepting.iter().map(|&f| self.states[f].clone()).collect()),
        );
        d.push_line("deterministic", format::flag(self.deterministic));
        let lines = self
            .transitions
            .iter()
            .map(|t| {
                format!(
                    "{} {} -> {} {} {}",
                    self.states[t.from],
                    self.alphabet[t.read],
                    self.states[t.to],
                    self.alphabet[t.write],
                    t.mv.name()
                )
            })
            .collect();
        d.push("transitions", lines);
    }

    fn read_doc(doc: &Doc) -> Result<Self> {
        let states = doc.tokens("states")?;
        let alphabet = doc.tokens("alphabet")?;
        let initial = index_of(&states, doc.single("initial")?, "state")?;
        let accepting = doc
            .tokens("accepting")?
            .iter()
            .map(|f| index_of(&states, f, "state"))
            .collect::<Result<Vec<_>>>()?;
        let mut transitions = Vec::new();
        for line in doc.section("transitions")? {
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.len() != 6 || t[2] != "->" {
                return Err(Error::parse(format!("bad transition `{line}`")));
            }
            transitions.push(TmTransition {
                from: index_of(&states, t[0], "state")?,
                read: index_of(&alphabet, t[1], "symbol")?,
                to: index_of(&states, t[3], "state")?,
                write: index_of(&alphabet, t[4], "symbol")?,
                mv: Move::parse(t[5])?,
            });
        }
        let m = SingleTapeTM {
            states,
            alphabet,
            transitions,
            initial,
            accepting,
            deterministic: doc.flag("deterministic")?,
        };
        m.validate()?;
        Ok(m)
    }
}

pub(crate) fn line_or_empty(items: Vec<String>) -> Vec<String> {
    if items.is_empty() {
        Vec::new()
    } else {
        vec![items.join(" ")]
    }
}

impl TextFormat for SingleTapeTM {
    const KIND: &'static str = "tm";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.states.len());
        self.write_doc(&mut d);
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        Self::read_doc(doc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedTMInstance {
    pub machine: SingleTapeTM,
    pub t: usize,
    pub s: usize,
}

impl BoundedTMInstance {
    pub fn new(machine: SingleTapeTM, t: usize, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("cell bound s must be at least 1"));
        }
        Ok(BoundedTMInstance { machine, t, s })
    }

    pub fn parse_with_cap(text: &str, cap: usize) -> Result<Self> {
        let doc = Doc::parse(text)?;
        doc.expect_kind(Self::KIND)?;
        Self::from_doc_cap(&doc, cap)
    }

    fn from_doc_cap(doc: &Doc, cap: usize) -> Result<Self> {
        let machine = SingleTapeTM::read_doc(doc)?;
        Self::new(machine, doc.unary("t", cap)?, doc.unary("s", cap)?)
    }
}

impl TextFormat for BoundedTMInstance {
    const KIND: &'static str = "tm-bounded";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.machine.states.len());
        self.machine.write_doc(&mut d);
        d.push("t", format::unary(self.t));
        d.push("s", format::unary(self.s));
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        Self::from_doc_cap(doc, DEFAULT_UNARY_CAP)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoTapeTransition {
    pub from: usize,
    pub input_read: usize,
    pub work_read: usize,
    pub to: usize,
    pub work_write: usize,
    pub input_move: Move,
    pub work_move: Move,
}

/// A machine with a read-only input tape and one work tape over a shared
/// alphabet whose symbol 0 is the blank. The input head stays on the input
/// word and reads a blank when the word is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTapeTM {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    pub transitions: Vec<TwoTapeTransition>,
    pub initial: usize,
    pub accepting: Vec<usize>,
    pub deterministic: bool,
}

impl TwoTapeTM {
    pub fn validate(&self) -> Result<()> {
        format::check_names(&self.states, "state", &["->"])?;
        format::check_names(&self.alphabet, "symbol", &["->"])?;
        let (q, g) = (self.states.len(), self.alphabet.len());
        if g == 0 || self.initial >= q || self.accepting.iter().any(|&f| f >= q) {
            return Err(Error::invalid("two-tape machine index out of range"));
        }
        for t in &self.transitions {
            if t.from >= q || t.to >= q || t.input_read >= g || t.work_read >= g || t.work_write >= g
            {
                return Err(Error::invalid("transition index out of range"));
            }
        }
        if self.deterministic {
            let mut seen = std::collections::HashSet::new();
            if !self.transitions.iter().all(|t| seen.insert((t.from, t.input_read, t.work_read))) {
                return Err(Error::invalid("deterministic machine with two transitions on one triple"));
            }
        }
        Ok(())
    }
}

/// The input of the bounded-run problem: machine, input word, bounds, and
/// the block size used by space compression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterizedRun {
    pub machine: TwoTapeTM,
    pub input: Vec<usize>,
    pub t: usize,
    pub s: usize,
    pub block: usize,
}

impl TextFormat for ParameterizedRun {
    const KIND: &'static str = "tm-run";

    fn to_doc(&self) -> Doc {
        let m = &self.machine;
        let mut d = Doc::new(Self::KIND, m.states.len());
        d.push_line("states", m.states.join(" "));
        d.push_line("alphabet", m.alphabet.join(" "));
        d.push_line("initial", &m.states[m.initial]);
        d.push("accepting", line_or_empty(m.accepting.iter().map(|&f| m.states[f].clone()).collect()));
        d.push_line("deterministic", format::flag(m.deterministic));
        let lines = m
            .transitions
            .iter()
            .map(|t| {
                format!(
                    "{} {} {} -> {} {} {} {}",
                    m.states[t.from],
                    m.alphabet[t.input_read],
                    m.alphabet[t.work_read],
                    m.states[t.to],
                    m.alphabet[t.work_write],
                    t.input_move.name(),
                    t.work_move.name()
                )
            })
            .collect();
        d.push("transitions", lines);
        d.push_line("input", format::word_line(&self.input.iter().map(|&a| m.alphabet[a].clone()).collect::<Vec<_>>()));
        d.push("t", format::unary(self.t));
        d.push("s", format::unary(self.s));
        d.push_line("block", self.block);
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let states = doc.tokens("states")?;
        let alphabet = doc.tokens("alphabet")?;
        let initial = index_of(&states, doc.single("initial")?, "state")?;
        let accepting = doc
            .tokens("accepting")?
            .iter()
            .map(|f| index_of(&states, f, "state"))
            .collect::<Result<Vec<_>>>()?;
        let mut transitions = Vec::new();
        for line in doc.section("transitions")? {
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.len() != 8 || t[3] != "->" {
                return Err(Error::parse(format!("bad transition `{line}`")));
            }
            transitions.push(TwoTapeTransition {
                from: index_of(&states, t[0], "state")?,
                input_read: index_of(&alphabet, t[1], "symbol")?,
                work_read: index_of(&alphabet, t[2], "symbol")?,
                to: index_of(&states, t[4], "state")?,
                work_write: index_of(&alphabet, t[5], "symbol")?,
                input_move: Move::parse(t[6])?,
                work_move: Move::parse(t[7])?,
            });
        }
        let machine = TwoTapeTM {
            states,
            alphabet,
            transitions,
            initial,
            accepting,
            deterministic: doc.flag("deterministic")?,
        };
        machine.validate()?;
        let input = format::parse_word_line(doc.single("input")?)
            .iter()
            .map(|a| index_of(&machine.alphabet, a, "symbol"))
            .collect::<Result<Vec<_>>>()?;
        let run = ParameterizedRun {
            machine,
            input,
            t: doc.unary("t", DEFAULT_UNARY_CAP)?,
            s: doc.unary("s", DEFAULT_UNARY_CAP)?,
            block: doc.usize("block")?,
        };
        if run.s == 0 || run.block == 0 {
            return Err(Error::invalid("s and block must be positive"));
        }
        Ok(run)
    }
}
