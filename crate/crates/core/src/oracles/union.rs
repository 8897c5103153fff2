use itertools::Itertools;

use super::{agen::generator_closure, binomial, graph::graph_property};
use crate::error::{Error, Result};
use crate::model::union::{decode_agen, decode_bf, decode_graph};
use crate::model::{FamilyUnionInstance, SubsetUnionInstance, UnionBase, UnionVariant, WeightedUnionInstance};
use crate::word::{or_bits, InstantiationWord, TemplateWord};

/// Membership of a union word in the base language.
pub fn base_accepts(base: UnionBase, w: &InstantiationWord) -> Result<bool> {
    match base {
        UnionBase::Bf => {
            let (f, a) = decode_bf(w.symbols())?;
            Ok(f.root.eval(&a))
        }
        UnionBase::Graph(kind) => graph_property(kind, &decode_graph(kind, w.symbols())?),
        UnionBase::Agen => {
            let g = decode_agen(w.symbols())?;
            Ok(generator_closure(&g.table, &g.candidates)[g.target])
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnionInstance {
    Family(FamilyUnionInstance),
    Subset(SubsetUnionInstance),
    Weighted(WeightedUnionInstance),
}

impl UnionInstance {
    pub fn variant(&self) -> UnionVariant {
        match self {
            UnionInstance::Family(_) => UnionVariant::Family,
            UnionInstance::Subset(_) => UnionVariant::Subset,
            UnionInstance::Weighted(_) => UnionVariant::Weighted,
        }
    }

    pub fn base(&self) -> UnionBase {
        match self {
            UnionInstance::Family(i) => i.base,
            UnionInstance::Subset(i) => i.base,
            UnionInstance::Weighted(i) => i.base,
        }
    }
}

fn check_space(size: u128, budget: u64) -> Result<()> {
    if size > budget as u128 {
        return Err(Error::BudgetExceeded(budget));
    }
    Ok(())
}

fn test_bits(
    template: &TemplateWord,
    bits: &[bool],
    base: &dyn Fn(&InstantiationWord) -> Result<bool>,
) -> Result<bool> {
    base(&template.instantiate(bits)?)
}

pub fn solve_family(
    inst: &FamilyUnionInstance,
    base: &dyn Fn(&InstantiationWord) -> Result<bool>,
    budget: u64,
) -> Result<bool> {
    if inst.families.iter().any(Vec::is_empty) {
        return Ok(false);
    }
    let size = inst.families.iter().fold(1u128, |acc, f| acc.saturating_mul(f.len() as u128));
    check_space(size, budget)?;
    let holes = inst.template.hole_count();
    let bits: Vec<Vec<Vec<bool>>> =
        inst.families.iter().map(|f| f.iter().map(InstantiationWord::bits).collect()).collect();
    for choice in bits.iter().map(|f| f.iter()).multi_cartesian_product() {
        let mut acc = vec![false; holes];
        for b in choice {
            or_bits(&mut acc, b);
        }
        if test_bits(&inst.template, &acc, base)? {
            return Ok(true);
        }
    }
    // An empty family list has exactly one (empty) choice.
    if inst.families.is_empty() {
        return test_bits(&inst.template, &vec![false; holes], base);
    }
    Ok(false)
}

pub fn solve_subset(
    inst: &SubsetUnionInstance,
    base: &dyn Fn(&InstantiationWord) -> Result<bool>,
    budget: u64,
) -> Result<bool> {
    let mut set = inst.set.clone();
    set.sort();
    set.dedup();
    check_space(binomial(set.len(), inst.k), budget)?;
    let holes = inst.template.hole_count();
    let bits: Vec<Vec<bool>> = set.iter().map(InstantiationWord::bits).collect();
    for choice in (0..bits.len()).combinations(inst.k) {
        let mut acc = vec![false; holes];
        for i in choice {
            or_bits(&mut acc, &bits[i]);
        }
        if test_bits(&inst.template, &acc, base)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn solve_weighted(
    inst: &WeightedUnionInstance,
    base: &dyn Fn(&InstantiationWord) -> Result<bool>,
    budget: u64,
) -> Result<bool> {
    let holes = inst.template.hole_count();
    check_space(binomial(holes, inst.k), budget)?;
    for ones in (0..holes).combinations(inst.k) {
        if base(&inst.template.instantiate_ones(&ones)?)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exhaustive search over the choice space of the given variant.
pub fn solve_union(
    inst: &UnionInstance,
    base: &dyn Fn(&InstantiationWord) -> Result<bool>,
    budget: u64,
) -> Result<bool> {
    match inst {
        UnionInstance::Family(i) => solve_family(i, base, budget),
        UnionInstance::Subset(i) => solve_subset(i, base, budget),
        UnionInstance::Weighted(i) => solve_weighted(i, base, budget),
    }
}
