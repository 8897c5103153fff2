use crate::error::{Error, Result};
use crate::model::projection::Source;
use crate::model::{CompatibleProjection, FamilyUnionInstance, OutputSpec, UnionBase};
use crate::word::{InstantiationWord, TemplateWord, HOLE, ZERO};

pub fn ceil_log2(n: usize) -> usize {
    let mut w = 0;
    while (1usize << w) < n {
        w += 1;
    }
    w
}

/// The family-union instance of a projection applied to `x`: the template
/// has a hole at every position fed by a choice bit, and family i holds one
/// word per assignment δ of block i, with the bits of all other blocks
/// set to 0.
pub fn projection_to_family_union(
    p: &CompatibleProjection,
    x: &[String],
    advice: &[String],
    f_x: usize,
    base: UnionBase,
) -> Result<FamilyUnionInstance> {
    if p.blocks != f_x || p.width != ceil_log2(x.len()) || p.input_len != x.len() {
        return Err(Error::invalid(format!(
            "projection has {} blocks of width {} for an input of length {}, expected {f_x} blocks of width {}",
            p.blocks,
            p.width,
            x.len(),
            ceil_log2(x.len())
        )));
    }
    if advice != p.advice.as_slice() {
        return Err(Error::invalid("advice word differs from the projection's"));
    }
    p.validate()?;
    let fixed: Vec<Option<String>> = p
        .outputs
        .iter()
        .map(|o| match o {
            OutputSpec::Const(c) => Ok(Some(c.clone())),
            OutputSpec::Dep { src, table } => match p.source(*src)? {
                Source::Input(i) => CompatibleProjection::lookup(table, &x[i]).map(Some),
                Source::Advice(i) => CompatibleProjection::lookup(table, &advice[i]).map(Some),
                Source::Bit { .. } => Ok(None),
            },
        })
        .collect::<Result<_>>()?;
    let template = TemplateWord::new(fixed.iter().map(|f| f.clone().unwrap_or_else(|| HOLE.to_string())))?;
    let mut families = Vec::with_capacity(f_x);
    for block in 0..f_x {
        let mut family = Vec::with_capacity(1 << p.width);
        for delta in 0..(1usize << p.width) {
            let symbols = p.outputs.iter().zip(&fixed).map(|(o, f)| -> Result<String> {
                if let Some(c) = f {
                    return Ok(c.clone());
                }
                let OutputSpec::Dep { src, table } = o else { unreachable!() };
                let Source::Bit { block: b, offset } = p.source(*src)? else { unreachable!() };
                if b != block {
                    return Ok(ZERO.to_string());
                }
                // δ is read most significant bit first.
                let bit = (delta >> (p.width - 1 - offset)) & 1;
                CompatibleProjection::lookup(table, if bit == 1 { "1" } else { "0" })
            });
            family.push(InstantiationWord::new(symbols.collect::<Result<Vec<_>>>()?)?);
        }
        families.push(family);
    }
    FamilyUnionInstance::new(base, template, families)
}

/// w ↦ ww on inputs `x · b`, with identity tables.
pub fn doubling_projection(x: &[String], blocks: usize, kappa: usize) -> CompatibleProjection {
    let width = ceil_log2(x.len());
    let n = x.len() + blocks * width;
    let mut outputs = Vec::with_capacity(2 * n);
    for _ in 0..2 {
        for src in 0..n {
            let table = if src < x.len() {
                let mut syms: Vec<String> = x.to_vec();
                syms.sort();
                syms.dedup();
                syms.into_iter().map(|s| (s.clone(), s)).collect()
            } else {
                vec![("0".into(), "0".into()), ("1".into(), "1".into())]
            };
            outputs.push(OutputSpec::Dep { src, table });
        }
    }
    CompatibleProjection { input_len: x.len(), kappa, advice: Vec::new(), blocks, width, outputs }
}
