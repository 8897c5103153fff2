//! Union reductions for the generator problem.
//!
//! Both reductions describe the new semigroup by a replacement system and
//! take the quotient of its irreducible words.

use crate::error::{Error, Result};
use crate::model::union::{agen_template, decode_agen};
use crate::model::{FamilyUnionInstance, GeneratorInstance, ReplacementSystem, SubsetUnionInstance, UnionBase, WeightedUnionInstance};
use crate::reductions::union::representatives::RepresentativeSystem;
use crate::word::{InstantiationWord, TemplateWord, ONE, ZERO};

/// The semigroup, target and candidate list (in template order) of an agen
/// template.
#[derive(Clone, Debug)]
pub struct AgenTemplate {
    pub table: Vec<Vec<usize>>,
    pub target: usize,
    pub candidates: Vec<usize>,
    /// Symbol positions of the candidate holes.
    pub holes: Vec<usize>,
}

pub fn parse_agen_template(t: &TemplateWord) -> Result<AgenTemplate> {
    let zeros = t.instantiate(&vec![false; t.hole_count()])?;
    let g = decode_agen(zeros.symbols())?;
    let n = g.size();
    let start = 2 + n * n;
    let mut candidates = Vec::new();
    let mut holes = Vec::new();
    for (j, pair) in t.symbols()[start..].chunks(2).enumerate() {
        if !t.holes().contains(&(start + 2 * j + 1)) || pair[0].strip_prefix('u').is_none() {
            return Err(Error::invalid("agen template must leave every candidate bit open"));
        }
        candidates.push(pair[0][1..].parse::<usize>().map_err(|_| Error::parse("bad candidate"))?);
        holes.push(start + 2 * j + 1);
    }
    if t.hole_count() != holes.len() {
        return Err(Error::invalid("agen template has holes outside the candidate bits"));
    }
    Ok(AgenTemplate { table: g.table, target: g.target, candidates, holes })
}

/// Candidates a word selects, in template order.
fn selected(t: &AgenTemplate, w: &InstantiationWord) -> Vec<usize> {
    t.holes
        .iter()
        .zip(&t.candidates)
        .filter(|(&h, _)| w.symbols()[h] == ONE)
        .map(|(_, &c)| c)
        .collect()
}

fn require_agen(base: UnionBase) -> Result<()> {
    if base != UnionBase::Agen {
        return Err(Error::Unsupported(format!("expected base agen, found {base}")));
    }
    Ok(())
}

fn associative(table: &[Vec<usize>]) -> Result<()> {
    for x in 0..table.len() {
        for y in 0..table.len() {
            for z in 0..table.len() {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(Error::invalid("input semigroup is not associative"));
                }
            }
        }
    }
    Ok(())
}

struct Letters(Vec<String>);

impl Letters {
    fn add(&mut self, name: String) -> usize {
        self.0.push(name);
        self.0.len() - 1
    }
}

fn quotient(rs: &ReplacementSystem, target: &[usize], candidates: &[usize]) -> Result<(RepresentativeSystem, GeneratorInstance)> {
    rs.validate()?;
    let sys = RepresentativeSystem::build(rs)?;
    let target = sys.class_of_word(rs, target)?;
    let mut cands: Vec<usize> = candidates.iter().map(|&a| sys.class_of_word(rs, &[a])).collect::<Result<_>>()?;
    cands.sort_unstable();
    cands.dedup();
    let g = GeneratorInstance {
        names: sys.names(rs),
        table: sys.table.clone(),
        target,
        k: 0,
        candidates: cands,
        associative: true,
    };
    Ok((sys, g))
}

fn instantiate(template: &TemplateWord, g: &GeneratorInstance, chosen: &[usize]) -> Result<InstantiationWord> {
    let bits: Vec<bool> = g.candidates.iter().map(|c| chosen.contains(c)).collect();
    template.instantiate(&bits)
}

#[derive(Clone, Debug)]
pub struct AgenReduction<T> {
    pub output: T,
    pub system: ReplacementSystem,
    pub generator: GeneratorInstance,
    pub irreducible_count: usize,
}

/// The rules over U ∪ {e_1..e_k, x′, error}.
pub fn family_system(table: &[Vec<usize>], target: usize, k: usize) -> (ReplacementSystem, Vec<usize>, usize) {
    let n = table.len();
    let mut l = Letters((0..n).map(|i| format!("u{i}")).collect());
    let e: Vec<usize> = (1..=k).map(|i| l.add(format!("e{i}"))).collect();
    let xp = l.add("x'".into());
    let err = l.add("error".into());
    let all = l.0.len();
    let mut rules = Vec::new();
    for a in 0..n {
        for b in 0..n {
            rules.push((vec![a, b], vec![table[a][b]]));
        }
    }
    let mut lhs = vec![target];
    lhs.extend(&e);
    rules.push((lhs, vec![xp]));
    for u in 0..all {
        rules.push((vec![err, u], vec![err]));
        if u != err {
            rules.push((vec![u, err], vec![err]));
        }
    }
    for (i, &ei) in e.iter().enumerate() {
        for u in 0..all {
            if e.get(i + 1) != Some(&u) && u != err {
                rules.push((vec![ei, u], vec![err]));
            }
        }
    }
    for u in 0..all {
        if u != err {
            rules.push((vec![xp, u], vec![err]));
        }
    }
    (ReplacementSystem { alphabet: l.0, rules }, e, xp)
}

/// Family union to subset union: element j of family i gets the marker e_i
/// added to its selection and x′ = x e_1..e_k becomes the target.
pub fn family_to_subset_agen(inst: &FamilyUnionInstance) -> Result<AgenReduction<SubsetUnionInstance>> {
    require_agen(inst.base)?;
    let t = parse_agen_template(&inst.template)?;
    associative(&t.table)?;
    let k = inst.k();
    let (rs, e, xp) = family_system(&t.table, t.target, k);
    let mut cand_letters = t.candidates.clone();
    cand_letters.extend(&e);
    let (sys, mut g) = quotient(&rs, &[xp], &cand_letters)?;
    let bound = 1 + (t.table.len() + k + 2) * (k * k + 1);
    if sys.len() > bound {
        return Err(Error::Internal(format!("{} classes exceed the bound {bound}", sys.len())));
    }
    g.k = k;
    g.validate()?;
    let template = agen_template(&g);
    let mut set = Vec::new();
    for (i, family) in inst.families.iter().enumerate() {
        for s in family {
            let mut chosen: Vec<usize> = selected(&t, s).iter().map(|&c| sys.class_of_word(&rs, &[c])).collect::<Result<_>>()?;
            chosen.push(sys.class_of_word(&rs, &[e[i]])?);
            set.push(instantiate(&template, &g, &chosen)?);
        }
    }
    let output = SubsetUnionInstance::new(UnionBase::Agen, template, set, k)?;
    Ok(AgenReduction { output, system: rs, generator: g, irreducible_count: sys.irreducible_count })
}

/// Letter indices of the subset system.
#[derive(Clone, Debug)]
pub struct SubsetLetters {
    pub sigma: Vec<usize>,
    pub start: usize,
    pub end: usize,
    pub counter: usize,
    pub error: usize,
}

/// The rules over U ∪ {σ_i} ∪ {▷, ◁, ⌙, error}. σ_i ⌙^j u rewrites to u_j u
/// where u_j is the j-th element selected by s_i.
pub fn subset_system(table: &[Vec<usize>], selections: &[Vec<usize>]) -> (ReplacementSystem, SubsetLetters) {
    let n = table.len();
    let mut l = Letters((0..n).map(|i| format!("u{i}")).collect());
    let sigma: Vec<usize> = (1..=selections.len()).map(|i| l.add(format!("σ{i}"))).collect();
    let start = l.add("▷".into());
    let end = l.add("◁".into());
    let counter = l.add("⌙".into());
    let err = l.add("error".into());
    let all = l.0.len();
    let longest = selections.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let mut rules = Vec::new();
    for a in 0..n {
        for b in 0..n {
            rules.push((vec![a, b], vec![table[a][b]]));
        }
    }
    for u in 0..all {
        rules.push((vec![err, u], vec![err]));
        if u != err {
            rules.push((vec![u, err], vec![err]));
            rules.push((vec![end, u], vec![err]));
            if u != end {
                rules.push((vec![u, start], vec![err]));
            }
        }
    }
    rules.push((vec![start, counter], vec![err]));
    for a in 0..n {
        rules.push((vec![a, counter], vec![err]));
    }
    for (i, sel) in selections.iter().enumerate() {
        for u in (0..all).filter(|&u| u != counter && u != err) {
            rules.push((vec![sigma[i], u], vec![err]));
            for (j, &uj) in sel.iter().enumerate() {
                let mut lhs = vec![sigma[i]];
                lhs.extend(std::iter::repeat_n(counter, j + 1));
                lhs.push(u);
                rules.push((lhs, vec![uj, u]));
            }
        }
        let mut lhs = vec![sigma[i]];
        lhs.extend(std::iter::repeat_n(counter, sel.len() + 1));
        rules.push((lhs, vec![err]));
    }
    rules.push((vec![counter; longest + 1], vec![err]));
    (ReplacementSystem { alphabet: l.0, rules }, SubsetLetters { sigma, start, end, counter, error: err })
}

/// Subset union to weighted union with k′ = k + 3. The candidates are the σ_i
/// and the three markers ▷, ◁, ⌙; the target is ▷x◁, so every useful choice
/// takes the three markers and exactly k of the σ_i.
pub fn subset_to_weighted_agen(inst: &SubsetUnionInstance) -> Result<AgenReduction<WeightedUnionInstance>> {
    require_agen(inst.base)?;
    let t = parse_agen_template(&inst.template)?;
    associative(&t.table)?;
    let selections: Vec<Vec<usize>> = inst.set.iter().map(|s| selected(&t, s)).collect();
    let (rs, letters) = subset_system(&t.table, &selections);
    let mut cands = letters.sigma.clone();
    cands.extend([letters.start, letters.end, letters.counter]);
    let (sys, mut g) = quotient(&rs, &[letters.start, t.target, letters.end], &cands)?;
    let longest = selections.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let tails: usize = selections.iter().map(|s| s.len() + 1).sum();
    let bound = 1 + (2 + longest) * (t.table.len() + 1) * (2 + tails);
    if sys.len() > bound {
        return Err(Error::Internal(format!("{} classes exceed the bound {bound}", sys.len())));
    }
    g.k = inst.k + 3;
    g.validate()?;
    let output = WeightedUnionInstance { base: UnionBase::Agen, template: agen_template(&g), k: inst.k + 3 };
    Ok(AgenReduction { output, system: rs, generator: g, irreducible_count: sys.irreducible_count })
}

/// The instantiation selecting exactly `chosen` among the template's
/// candidates.
pub fn agen_word(template: &TemplateWord, chosen: &[usize]) -> Result<InstantiationWord> {
    let t = parse_agen_template(template)?;
    let mut syms = template.symbols().to_vec();
    for (&h, c) in t.holes.iter().zip(&t.candidates) {
        syms[h] = if chosen.contains(c) { ONE } else { ZERO }.to_string();
    }
    InstantiationWord::new(syms)
}
