//! Propositional formulas over variables `v1 … vm`.

use std::fmt;

use crate::error::{Error, Result};
use crate::format::{Doc, TextFormat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Var(usize),
    Const(bool),
}

impl Formula {
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Left-nested conjunction; `true` when empty.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::Const(true))
    }

    /// Left-nested disjunction; `false` when empty.
    pub fn disj(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Const(false))
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.max_var().max(b.max_var())
            }
            Formula::Not(a) => a.max_var(),
            Formula::Var(i) => Some(*i),
            Formula::Const(_) => None,
        }
    }

    pub fn eval(&self, a: &[bool]) -> bool {
        match self {
            Formula::And(x, y) => x.eval(a) && y.eval(a),
            Formula::Or(x, y) => x.eval(a) || y.eval(a),
            Formula::Not(x) => !x.eval(a),
            Formula::Implies(x, y) => !x.eval(a) || y.eval(a),
            Formula::Var(i) => a[*i],
            Formula::Const(b) => *b,
        }
    }

    /// Replaces each variable by the formula chosen for it.
    pub fn substitute(&self, f: &dyn Fn(usize) -> Formula) -> Formula {
        match self {
            Formula::And(x, y) => Formula::and(x.substitute(f), y.substitute(f)),
            Formula::Or(x, y) => Formula::or(x.substitute(f), y.substitute(f)),
            Formula::Not(x) => Formula::not(x.substitute(f)),
            Formula::Implies(x, y) => Formula::implies(x.substitute(f), y.substitute(f)),
            Formula::Var(i) => f(*i),
            Formula::Const(b) => Formula::Const(*b),
        }
    }

    /// Prefix tokens, used inside union words.
    pub fn prefix_tokens(&self, out: &mut Vec<String>) {
        match self {
            Formula::And(a, b) => {
                out.push("&".into());
                a.prefix_tokens(out);
                b.prefix_tokens(out);
            }
            Formula::Or(a, b) => {
                out.push("|".into());
                a.prefix_tokens(out);
                b.prefix_tokens(out);
            }
            Formula::Implies(a, b) => {
                out.push(">".into());
                a.prefix_tokens(out);
                b.prefix_tokens(out);
            }
            Formula::Not(a) => {
                out.push("~".into());
                a.prefix_tokens(out);
            }
            Formula::Var(i) => out.push(format!("v{}", i + 1)),
            Formula::Const(true) => out.push("T".into()),
            Formula::Const(false) => out.push("F".into()),
        }
    }

    /// Reads one formula in prefix form; returns it with the number of tokens used.
    pub fn from_prefix<S: AsRef<str>>(tokens: &[S]) -> Result<(Formula, usize)> {
        fn go<S: AsRef<str>>(t: &[S], pos: &mut usize, depth: usize) -> Result<Formula> {
            if depth > 10_000 {
                return Err(Error::parse("formula nesting too deep"));
            }
            let tok = t.get(*pos).ok_or_else(|| Error::parse("truncated prefix formula"))?;
            *pos += 1;
            let tok = tok.as_ref();
            Ok(match tok {
                "&" => Formula::and(go(t, pos, depth + 1)?, go(t, pos, depth + 1)?),
                "|" => Formula::or(go(t, pos, depth + 1)?, go(t, pos, depth + 1)?),
                ">" => Formula::implies(go(t, pos, depth + 1)?, go(t, pos, depth + 1)?),
                "~" => Formula::not(go(t, pos, depth + 1)?),
                "T" => Formula::Const(true),
                "F" => Formula::Const(false),
                _ => Formula::Var(parse_var(tok)?),
            })
        }
        let mut pos = 0;
        let f = go(tokens, &mut pos, 0)?;
        Ok((f, pos))
    }

    fn prec(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }
}

fn parse_var(tok: &str) -> Result<usize> {
    tok.strip_prefix('v')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| i >= 1)
        .map(|i| i - 1)
        .ok_or_else(|| Error::parse(format!("bad variable `{tok}`")))
}

/// Infix with `∧ ∨ → ¬`. Conjunction and disjunction chains print flat when
/// nested to the left, so parsing the output gives back the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, c: &Formula, paren: bool) -> fmt::Result {
            if paren {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        }
        match self {
            Formula::And(a, b) | Formula::Or(a, b) => {
                let p = self.prec();
                let op = if p == 3 { "∧" } else { "∨" };
                child(f, a, a.prec() < p)?;
                f.write_str(op)?;
                child(f, b, b.prec() <= p)
            }
            Formula::Implies(a, b) => {
                child(f, a, a.prec() <= 1)?;
                f.write_str("→")?;
                child(f, b, b.prec() <= 1)
            }
            Formula::Not(a) => {
                f.write_str("¬")?;
                child(f, a, a.prec() < 4)
            }
            Formula::Var(i) => write!(f, "v{}", i + 1),
            Formula::Const(true) => f.write_str("⊤"),
            Formula::Const(false) => f.write_str("⊥"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    And,
    Or,
    Not,
    Imp,
    LParen,
    RParen,
    Var(usize),
    Const(bool),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '∧' | '&' => {
                out.push(Tok::And);
                i += 1
            }
            '∨' | '|' => {
                out.push(Tok::Or);
                i += 1
            }
            '¬' | '!' | '~' => {
                out.push(Tok::Not);
                i += 1
            }
            '→' => {
                out.push(Tok::Imp);
                i += 1
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Tok::Imp);
                i += 2
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '⊤' | 'T' => {
                out.push(Tok::Const(true));
                i += 1
            }
            '⊥' | 'F' => {
                out.push(Tok::Const(false));
                i += 1
            }
            'v' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                out.push(Tok::Var(parse_var(&name)?));
                i = j;
            }
            _ => return Err(Error::parse(format!("unexpected `{c}` in formula"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let a = self.disjunction()?;
        if self.eat(&Tok::Imp) {
            let b = self.implication()?;
            return Ok(Formula::implies(a, b));
        }
        Ok(a)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut a = self.conjunction()?;
        while self.eat(&Tok::Or) {
            a = Formula::or(a, self.conjunction()?);
        }
        Ok(a)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut a = self.unary()?;
        while self.eat(&Tok::And) {
            a = Formula::and(a, self.unary()?);
        }
        Ok(a)
    }

    fn unary(&mut self) -> Result<Formula> {
        let tok = self.peek().cloned().ok_or_else(|| Error::parse("truncated formula"))?;
        self.pos += 1;
        match tok {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::LParen => {
                let f = self.implication()?;
                if !self.eat(&Tok::RParen) {
                    return Err(Error::parse("missing `)`"));
                }
                Ok(f)
            }
            Tok::Var(i) => Ok(Formula::Var(i)),
            Tok::Const(b) => Ok(Formula::Const(b)),
            t => Err(Error::parse(format!("unexpected token {t:?}"))),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let f = p.implication()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse("trailing tokens in formula"));
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanFormula {
    pub root: Formula,
    pub vars: usize,
}

impl BooleanFormula {
    pub fn new(root: Formula, vars: usize) -> Result<Self> {
        if let Some(m) = root.max_var() {
            if m >= vars {
                return Err(Error::invalid(format!("variable v{} beyond count {vars}", m + 1)));
            }
        }
        Ok(BooleanFormula { root, vars })
    }
}

impl fmt::Display for BooleanFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root)
    }
}

/// A formula with an assignment: the instance of formula evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfInstance {
    pub formula: BooleanFormula,
    pub assignment: Vec<bool>,
}

impl TextFormat for BfInstance {
    const KIND: &'static str = "bf";

    fn to_doc(&self) -> Doc {
        let mut d = Doc::new(Self::KIND, self.formula.vars);
        d.push_line("formula", &self.formula.root);
        let bits: String = self.assignment.iter().map(|&b| if b { '1' } else { '0' }).collect();
        d.push("assignment", if bits.is_empty() { vec![] } else { vec![bits] });
        d
    }

    fn from_doc(doc: &Doc) -> Result<Self> {
        let vars = doc.param_usize()?;
        let formula = BooleanFormula::new(parse_formula(doc.single("formula")?)?, vars)?;
        let assignment = match doc.section("assignment")? {
            [] => Vec::new(),
            [line] => line
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::parse("assignment must be 0/1")),
                })
                .collect::<Result<_>>()?,
            _ => return Err(Error::parse("assignment must be one line")),
        };
        if assignment.len() != vars {
            return Err(Error::Arity { expected: vars, got: assignment.len() });
        }
        Ok(BfInstance { formula, assignment })
    }
}
