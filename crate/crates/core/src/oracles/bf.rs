use crate::error::{Error, Result};
use crate::model::BooleanFormula;

pub fn eval_bf(f: &BooleanFormula, a: &[bool]) -> Result<bool> {
    if a.len() != f.vars {
        return Err(Error::Arity { expected: f.vars, got: a.len() });
    }
    Ok(f.root.eval(a))
}
