use crate::error::{Error, Result};
use crate::model::union::{bf_template, decode_bf};
use crate::model::{BooleanFormula, FamilyUnionInstance, Formula, SubsetUnionInstance, UnionBase, WeightedUnionInstance};
use crate::word::{InstantiationWord, ONE, ZERO};

fn require_bf(base: UnionBase) -> Result<()> {
    if base != UnionBase::Bf {
        return Err(Error::Unsupported(format!("expected base bf, found {base}")));
    }
    Ok(())
}

fn template_formula(t: &crate::word::TemplateWord) -> Result<BooleanFormula> {
    let (f, used) = Formula::from_prefix(t.symbols())?;
    let holes = t.symbols().len() - used;
    if t.hole_count() != holes {
        return Err(Error::invalid("bf template must end with the variable holes"));
    }
    BooleanFormula::new(f, holes)
}

/// φ′ = φ ∧ ψ where ψ demands one tag variable per family. The tag block
/// follows the original variables, ordered family by family; element j of
/// family i sets exactly its own tag.
pub fn family_to_subset_bf(inst: &FamilyUnionInstance) -> Result<SubsetUnionInstance> {
    require_bf(inst.base)?;
    let phi = template_formula(&inst.template)?;
    let m = phi.vars;
    let mut next = m;
    let mut clauses = Vec::new();
    let mut tags = Vec::new();
    for family in &inst.families {
        let vars: Vec<usize> = (next..next + family.len()).collect();
        next += family.len();
        clauses.push(Formula::disj(vars.iter().map(|&v| Formula::Var(v))));
        tags.push(vars);
    }
    let total = next;
    let root = if clauses.is_empty() { phi.root.clone() } else { Formula::and(phi.root.clone(), Formula::conj(clauses)) };
    let phi2 = BooleanFormula::new(root, total)?;
    let template = bf_template(&phi2);
    let prefix_len = template.len() - total;
    let mut set = Vec::new();
    for (family, vars) in inst.families.iter().zip(&tags) {
        for (s, &tag) in family.iter().zip(vars) {
            let mut sym: Vec<String> = template.symbols()[..prefix_len].to_vec();
            sym.extend(s.bits().iter().map(|&b| if b { ONE } else { ZERO }.to_string()));
            sym.extend((m..total).map(|v| if v == tag { ONE } else { ZERO }.to_string()));
            set.push(InstantiationWord::new(sym)?);
        }
    }
    SubsetUnionInstance::new(UnionBase::Bf, template, set, inst.k())
}

/// φ′ over fresh v1..vn, one per element of S, with each original variable x
/// replaced by the disjunction of the v_i whose element sets x. A variable
/// set by no element becomes the constant false.
pub fn subset_to_weighted_bf(inst: &SubsetUnionInstance) -> Result<WeightedUnionInstance> {
    require_bf(inst.base)?;
    let phi = template_formula(&inst.template)?;
    let bits: Vec<Vec<bool>> = inst.set.iter().map(|s| decode_bf(s.symbols()).map(|(_, b)| b)).collect::<Result<_>>()?;
    let root = phi.root.substitute(&|x| Formula::disj((0..bits.len()).filter(|&i| bits[i][x]).map(Formula::Var)));
    let phi2 = BooleanFormula::new(root, inst.set.len())?;
    Ok(WeightedUnionInstance { base: UnionBase::Bf, template: bf_template(&phi2), k: inst.k })
}

/// The formula carried by a bf template.
pub fn formula_of(t: &crate::word::TemplateWord) -> Result<BooleanFormula> {
    template_formula(t)
}
