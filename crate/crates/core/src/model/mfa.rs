//! Multi-head finite automata on `<w>`.

use crate::error::{Error, Result};
use crate::format::{self, index_of, Doc, TextFormat};

pub const LEFT_END: &str = "<";
pub const RIGHT_END: &str = ">";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MfaTransition {
    pub from: usize,
    pub read: Vec<usize>,
    pub to: usize,
    pub moves: Vec<i8>,
}

/// States are `1..=states` in the text form and `0..states` in memory. Tape
/// symbols index the alphabet; `alphabet.len()` is the left end marker and
/// `alphabet.len() + 1` the right one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiHeadAutomaton {
    pub states: usize,
    pub heads: usize,
    pub alphabet: Vec<String>,
    pub transitions: Vec<MfaTransition>,
    pub initial: usize,
    pub accepting: Vec<usize>,
    pub deterministic: bool,
    pub dag: bool,
    pub input: Vec<usize>,
}

impl MultiHeadAutomaton {
    pub fn left_end(&self) -> usize {
        self.alphabet.len()
    }

    pub fn right_end(&self) -> usize {
        self.alphabet.len() + 1
    }

    /// `<w>` as symbol indices.
    pub fn tape(&self) -> Vec<usize> {
        let mut t = vec![self.left_end()];
        t.extend(&self.input);
        t.push(self.right_end());
        t
    }

    pub fn validate(&self) -> Result<()> {
        format::check_names(&self.alphabet, "symbol", &[LEFT_END, RIGHT_END, "->", "ε"])?;
        if self.heads == 0 || self.states == 0 || self.initial >= self.states {
            return Err(Error::invalid("automaton needs heads, states and a valid initial state"));
        }
        if self.accepting.iter().any(|&f| f >= self.states) {
            return Err(Error::invalid("accepting state out of range"));
        }
        let syms = self.alphabet.len() + 2;
        let mut seen = std::collections::HashSet::new();
        for t in &self.transitions {
            if t.from >= self.states || t.to >= self.states {
                return Err(Error::invalid("transition state out of range"));
            }
            if t.read.len() != self.heads || t.moves.len() != self.heads {
                return Err(Error::Arity { expected: self.heads, got: t.read.len() });
            }
            if t.read.iter().any(|&a| a >= syms) || t.moves.iter().any(|m| !(-1..=1).contains(m)) {
                return Err(Error::invalid("transition symbol or move out of range"));
            }
            if self.dag && t.to <= t.from {
                return Err(Error::invalid("dag automaton transition does not increase the state"));
            }
            if self.deterministic && !seen.insert((t.from, t.read.clone())) {
                return Err(Error::invalid("deterministic automaton with two transitions on one key"));
            }
        }
        if self.input.iter().any(|&a| a >= self.alphabet.len()) {
            return Err(Error::invalid("input symbol out of range"));
        }
        Ok(())
    }

    fn symbol_name(&self, a: usize) -> &str {
        if a == self.left_end() {
            LEFT_END
        } else if a == self.right_end() {
            RIGHT_END
        } else {
            &self.alphabet[a]
        }
    }

    fn symbol_index(&self, name: &str) -> Result<usize> {
        match name {
            LEFT_END => Ok(self.left_end()),
            RIGHT_END => Ok(self.right_end()),
            _ => index_of(&self.alphabet, name, "symbol"),
        }
    }
}

fn move_name(m: i8) -> &'static str {
    match m {
        -1 => "L",
        0 => "S",
        _ => "R",
    }
}

fn parse_move(tok: &str) -> Result<i8> {
    match tok {
        "L" => Ok(-1),
        "S" => Ok(0),
        "R" => Ok(1),
        _ => Err(Error::parse(format!("bad head move `{tok}`"))),
    }
}

fn parse_state(tok: &str, n: usize) -> Result<usize> {
    let q = format::parse_usize(tok)?;
    if q == 0 || q > n {
        return Err(Error::parse(format!("state {q} outside 1..={n}")));
    }
    Ok(q - 1)
}

impl TextFormat for MultiHeadAutomaton {
    const KIND: &'static str = "mfa";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.heads);
        d.push_line("states", self.states);
        d.push_line("alphabet", format::word_line(&self.alphabet));
        d.push_line("initial", self.initial + 1);
        d.push(
            "accepting",
            super::tm::line_or_empty(self.accepting.iter().map(|f| (f + 1).to_string()).collect()),
        );
        d.push_line("deterministic", format::flag(self.deterministic));
        d.push_line("dag", format::flag(self.dag));
        let lines = self
            .transitions
            .iter()
            .map(|t| {
                let reads: Vec<&str> = t.read.iter().map(|&a| self.symbol_name(a)).collect();
                let moves: Vec<&str> = t.moves.iter().map(|&m| move_name(m)).collect();
                format!("{} {} -> {} {}", t.from + 1, reads.join(" "), t.to + 1, moves.join(" "))
            })
            .collect();
        d.push("transitions", lines);
        let input: Vec<String> = self.input.iter().map(|&a| self.alphabet[a].clone()).collect();
        d.push_line("input", format::word_line(&input));
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let heads = doc.param_usize()?;
        let states = doc.usize("states")?;
        let alphabet = format::parse_word_line(doc.single("alphabet")?);
        let mut a = MultiHeadAutomaton {
            states,
            heads,
            alphabet,
            transitions: Vec::new(),
            initial: parse_state(doc.single("initial")?, states)?,
            accepting: doc
                .tokens("accepting")?
                .iter()
                .map(|t| parse_state(t, states))
                .collect::<Result<_>>()?,
            deterministic: doc.flag("deterministic")?,
            dag: doc.flag("dag")?,
            input: Vec::new(),
        };
        for line in doc.section("transitions")? {
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.len() != 2 * heads + 3 || t[heads + 1] != "->" {
                return Err(Error::parse(format!("bad transition `{line}`")));
            }
            a.transitions.push(MfaTransition {
                from: parse_state(t[0], states)?,
                read: t[1..=heads].iter().map(|s| a.symbol_index(s)).collect::<Result<_>>()?,
                to: parse_state(t[heads + 2], states)?,
                moves: t[heads + 3..].iter().map(|m| parse_move(m)).collect::<Result<_>>()?,
            });
        }
        a.input = format::parse_word_line(doc.single("input")?)
            .iter()
            .map(|s| index_of(&a.alphabet, s, "symbol"))
            .collect::<Result<_>>()?;
        a.validate()?;
        Ok(a)
    }
}
