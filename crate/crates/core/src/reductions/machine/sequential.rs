//! Sequential cellular automata and their longest common subsequence
//! encoding.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::model::{
    BoundedCellularInstance, CellularAutomaton, CellularInstance, LcsInstance, Neighbour, SequentialCellularInstance,
};

/// States become (previous, current) pairs, numbered previous·|Q| + current.
/// A cell moves on the previous state of its left neighbour (which has
/// already moved) and the current state of its right neighbour.
pub fn nca_to_sequential(inst: &CellularInstance) -> SequentialCellularInstance {
    let a = &inst.automaton;
    let q = a.states.len();
    let pair = |x: usize, y: usize| x * q + y;
    let mut out = CellularAutomaton::new(
        (0..q).flat_map(|x| (0..q).map(move |y| (x, y))).map(|(x, y)| format!("{}/{}", a.states[x], a.states[y])).collect(),
    );
    let free = |n: Neighbour| -> Vec<Neighbour> { if n.is_some() { (0..q).map(Some).collect() } else { vec![None] } };
    for (&(l, c, r), next) in &a.transitions {
        for lx in free(l) {
            for y in 0..q {
                for rz in free(r) {
                    let ln = l.zip(lx).map(|(p, x)| pair(p, x));
                    let rn = r.zip(rz).map(|(cur, z)| pair(z, cur));
                    for &n in next {
                        out.add(ln, pair(y, c), rn, pair(c, n));
                    }
                }
            }
        }
    }
    out.accepting = (0..q).flat_map(|x| a.accepting.iter().map(move |&f| pair(x, f))).collect();
    out.accepting.sort_unstable();
    out.deterministic = a.deterministic;
    SequentialCellularInstance {
        automaton: out,
        initial: inst.initial.iter().map(|&x| pair(x, x)).collect(),
        steps: None,
        horizon: None,
    }
}

pub fn bounded_nca_to_sequential(inst: &BoundedCellularInstance) -> SequentialCellularInstance {
    let mut out = nca_to_sequential(&inst.instance);
    out.steps = Some(inst.t);
    out
}

/// Makes the automaton take exactly t·k moves exactly on accepting runs,
/// where t is the step bound. States are (state, counter, bit): a cell with
/// counter c moves only when its left neighbour shows c+1 and its right
/// neighbour c; the bit records acceptance seen so far in this cell or to
/// its left, and the last move of the last cell needs it set. Only
/// transitions reachable from the initial string are kept. Exact for
/// automata in which no cell is ever stuck.
pub fn normalize_sequential(inst: &SequentialCellularInstance) -> Result<SequentialCellularInstance> {
    let t = inst.steps.ok_or_else(|| Error::Precondition("normalization needs a step bound".into()))?;
    let a = &inst.automaton;
    let k = inst.cells();
    type S = (usize, usize, bool);
    let mut ids: HashMap<S, usize> = HashMap::new();
    let mut states: Vec<S> = Vec::new();
    let mut intern = |s: S, states: &mut Vec<S>| -> usize {
        *ids.entry(s).or_insert_with(|| {
            states.push(s);
            states.len() - 1
        })
    };
    let initial: Vec<usize> =
        inst.initial.iter().map(|&p| intern((p, 0, a.is_accepting(p)), &mut states)).collect();
    let mut transitions: BTreeSet<(Neighbour, usize, Neighbour, usize)> = BTreeSet::new();
    let mut layer: BTreeSet<Vec<usize>> = BTreeSet::from([initial.clone()]);
    for step in 0..t * k {
        let i = step % k;
        let mut next_layer = BTreeSet::new();
        for config in &layer {
            let l = if i == 0 { None } else { Some(config[i - 1]) };
            let r = config.get(i + 1).copied();
            let (p, c, b) = states[config[i]];
            let lp = l.map(|x| states[x]);
            let rp = r.map(|x| states[x]);
            for &n in a.successors(lp.map(|s| s.0), p, rp.map(|s| s.0)) {
                let b2 = b || lp.is_some_and(|s| s.2) || a.is_accepting(n);
                if i + 1 == k && c + 1 == t && !b2 {
                    continue;
                }
                let ns = intern((n, c + 1, b2), &mut states);
                transitions.insert((l, config[i], r, ns));
                let mut nc = config.clone();
                nc[i] = ns;
                next_layer.insert(nc);
            }
        }
        layer = next_layer;
    }
    let mut out = CellularAutomaton::new(
        states.iter().map(|&(p, c, b)| format!("{}:{c}:{}", a.states[p], u8::from(b))).collect(),
    );
    for (l, c, r, n) in transitions {
        out.add(l, c, r, n);
    }
    out.accepting = (0..states.len()).filter(|&x| states[x].2).collect();
    out.deterministic = out.is_functional();
    Ok(SequentialCellularInstance { automaton: out, initial, steps: Some(t), horizon: Some(t) })
}

/// Longest strings [`seqca_to_lcs`] builds before giving up.
pub const MAX_LCS_LENGTH: usize = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Item {
    Mark(usize, usize),
    Sym(usize),
}

fn position(s: &[Item], mark: Item) -> usize {
    s.iter().position(|&x| x == mark).expect("every state has its markers")
}

fn insert_after(s: &mut Vec<Item>, mark: Item, x: Item) {
    let p = position(s, mark);
    s.insert(p + 1, x);
}

fn insert_before(s: &mut Vec<Item>, mark: Item, x: Item) {
    let p = position(s, mark);
    s.insert(p, x);
}

/// One symbol (f, s, i) for every transition f, major step s and cell i
/// whose border type matches f.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TransitionSymbol {
    pub transition: usize,
    pub step: usize,
    pub cell: usize,
}

/// The transitions (left, old, right, new) in the order symbols use.
pub fn transition_list(a: &CellularAutomaton) -> Vec<(Neighbour, usize, Neighbour, usize)> {
    a.transitions.iter().flat_map(|(&(l, c, r), next)| next.iter().map(move |&n| (l, c, r, n))).collect()
}

pub fn transition_symbols(a: &CellularAutomaton, t: usize, k: usize) -> Vec<TransitionSymbol> {
    let list = transition_list(a);
    let mut out = Vec::new();
    for (f, &(l, _, r, _)) in list.iter().enumerate() {
        for step in 1..=t {
            for cell in 1..=k {
                if l.is_none() == (cell == 1) && r.is_none() == (cell == k) {
                    out.push(TransitionSymbol { transition: f, step, cell });
                }
            }
        }
    }
    out
}

pub fn symbol_name(x: &TransitionSymbol) -> String {
    format!("t{}s{}c{}", x.transition, x.step, x.cell)
}

/// The 4k strings: per cell i, strings 1 and 2 carry state markers (q, s)
/// for odd s, strings 3 and 4 for even s, ascending in 1 and 3 and
/// descending in 2 and 4. Symbols are placed by the seven rules, strings 1
/// and 2 of cell i lose everything before (q_i, 1), the symbols missing from
/// a string are put once more at its front and markers are dropped. The
/// target length is t·k.
pub fn seqca_to_lcs(inst: &SequentialCellularInstance) -> Result<LcsInstance> {
    let (t, symbols, strings) = placed(inst)?;
    let k = inst.cells();
    // Rule 7, then the initial configuration.
    let mut total = 0usize;
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(4 * k);
    for (ci, cell) in strings.iter().enumerate() {
        for (j, s) in cell.iter().enumerate() {
            let mut present = vec![false; symbols.len()];
            let mut letters = 0usize;
            for item in s {
                if let Item::Sym(id) = *item {
                    present[id] = true;
                    letters += 1;
                }
            }
            let mut absent: Vec<usize> = (0..symbols.len()).filter(|&id| !present[id]).collect();
            // Run order: a witness picks free symbols by major then minor step.
            absent.sort_by_key(|&id| (symbols[id].step, symbols[id].cell, symbols[id].transition));
            total = total.saturating_add((letters + 1).saturating_mul(absent.len() + 1));
            if total > MAX_LCS_LENGTH {
                return Err(Error::BudgetExceeded(MAX_LCS_LENGTH as u64));
            }
            let mut items: Vec<Item> = Vec::new();
            for &item in s {
                items.push(item);
                if let Item::Sym(_) = item {
                    items.extend(absent.iter().map(|&id| Item::Sym(id)));
                }
            }
            if j < 2 {
                cut(&mut items, inst.initial[ci]);
            }
            // One more copy of X in front, so a symbol this string does not
            // constrain can also precede its first letter.
            items.splice(0..0, absent.iter().map(|&id| Item::Sym(id)));
            out.push(letters_of(items));
        }
    }
    let inst = LcsInstance { alphabet: symbols.iter().map(symbol_name).collect(), strings: out, l: t * k };
    if inst.strings.len() != 4 * k {
        return Err(Error::Internal("expected 4k strings".into()));
    }
    Ok(inst)
}

fn cut(items: &mut Vec<Item>, initial: usize) {
    let p = position(items, Item::Mark(initial, 1));
    items.drain(..p);
}

fn letters_of(items: Vec<Item>) -> Vec<usize> {
    items
        .into_iter()
        .filter_map(|x| match x {
            Item::Sym(id) => Some(id),
            Item::Mark(..) => None,
        })
        .collect()
}

/// The 4k strings after rules 1 to 6 and the initial cut, without the
/// rule 7 copies.
pub fn real_strings(inst: &SequentialCellularInstance) -> Result<Vec<Vec<TransitionSymbol>>> {
    let (_, symbols, strings) = placed(inst)?;
    let mut out = Vec::new();
    for (ci, cell) in strings.into_iter().enumerate() {
        for (j, mut items) in cell.into_iter().enumerate() {
            if j < 2 {
                cut(&mut items, inst.initial[ci]);
            }
            out.push(letters_of(items).into_iter().map(|id| symbols[id]).collect());
        }
    }
    Ok(out)
}

type Placed = (usize, Vec<TransitionSymbol>, Vec<[Vec<Item>; 4]>);

fn placed(inst: &SequentialCellularInstance) -> Result<Placed> {
    let t = match (inst.horizon, inst.steps) {
        (Some(h), Some(s)) if h == s => h,
        _ => return Err(Error::Precondition("seqca_to_lcs needs a normalized automaton".into())),
    };
    let a = &inst.automaton;
    let k = inst.cells();
    let q = a.states.len();
    let list = transition_list(a);
    let symbols = transition_symbols(a, t, k);
    let mut strings: Vec<[Vec<Item>; 4]> = (0..k).map(|_| Default::default()).collect();
    for cell in strings.iter_mut() {
        for s in 1..=t + 1 {
            let (fwd, back) = if s % 2 == 1 { (0, 1) } else { (2, 3) };
            cell[fwd].extend((0..q).map(|x| Item::Mark(x, s)));
            cell[back].extend((0..q).rev().map(|x| Item::Mark(x, s)));
        }
    }
    let pairs = |s: usize| if s % 2 == 1 { ((0, 1), (2, 3)) } else { ((2, 3), (0, 1)) };
    let parts = |x: &TransitionSymbol| list[x.transition];
    // Rules 1 and 2.
    for (id, x) in symbols.iter().enumerate() {
        let (l_a, _) = pairs(x.step);
        insert_after(&mut strings[x.cell - 1][l_a.0], Item::Mark(parts(x).1, x.step), Item::Sym(id));
    }
    for (id, x) in symbols.iter().enumerate().rev() {
        let (l_a, _) = pairs(x.step);
        insert_after(&mut strings[x.cell - 1][l_a.1], Item::Mark(parts(x).1, x.step), Item::Sym(id));
    }
    // Rules 3 and 4.
    for (id, x) in symbols.iter().enumerate() {
        let (_, l_b) = pairs(x.step);
        insert_before(&mut strings[x.cell - 1][l_b.0], Item::Mark(parts(x).3, x.step + 1), Item::Sym(id));
    }
    for (id, x) in symbols.iter().enumerate().rev() {
        let (_, l_b) = pairs(x.step);
        insert_before(&mut strings[x.cell - 1][l_b.1], Item::Mark(parts(x).3, x.step + 1), Item::Sym(id));
    }
    // Rule 6: the right neighbour is still in f_right. Placed before rule 5
    // so that after a marker (q, s+1) the step-s symbols of the next cell
    // come first.
    for (id, x) in symbols.iter().enumerate() {
        if let Some(right) = parts(x).2.filter(|_| x.cell < k) {
            let (l_a, _) = pairs(x.step);
            for j in [l_a.0, l_a.1] {
                insert_after(&mut strings[x.cell][j], Item::Mark(right, x.step), Item::Sym(id));
            }
        }
    }
    // Rule 5: the left neighbour has already moved to f_left.
    for (id, x) in symbols.iter().enumerate() {
        if let Some(left) = parts(x).0.filter(|_| x.cell > 1) {
            let (_, l_b) = pairs(x.step);
            for j in [l_b.0, l_b.1] {
                insert_after(&mut strings[x.cell - 2][j], Item::Mark(left, x.step + 1), Item::Sym(id));
            }
        }
    }
    Ok((t, symbols, strings))
}
