//! Layered reachability as an injective longest common subsequence.

use crate::error::{Error, Result};
use crate::model::{Graph, LcsInstance};

/// Edge names: a..z in ascending (start, end) order, then x26, x27, ...
pub fn edge_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("x{i}")
    }
}

/// Four strings over one symbol per edge. Odd layers (counted from 1) feed
/// strings 1 and 2, even layers strings 3 and 4. Per vertex the incoming
/// edges (by start) precede the outgoing ones (by end); the second string
/// of a pair takes the vertices in reverse and reverses both edge groups. The target
/// length is one less than the layer count.
pub fn layeredreach_to_lcs_injective(g: &Graph) -> Result<LcsInstance> {
    let layers = g.layers.as_ref().ok_or_else(|| Error::invalid("graph has no layer assignment"))?;
    if !g.directed {
        return Err(Error::invalid("layered graphs are directed"));
    }
    g.validate()?;
    let arcs = g.arcs();
    let m = g.layer_count();
    let mut incoming = vec![Vec::new(); g.n()];
    let mut outgoing = vec![Vec::new(); g.n()];
    for (i, &(a, b)) in arcs.iter().enumerate() {
        outgoing[a].push(i);
        incoming[b].push(i);
    }
    let mut strings: Vec<Vec<String>> = vec![Vec::new(); 4];
    for layer in 0..m {
        let pair = if layer % 2 == 0 { 0 } else { 2 };
        let vertices: Vec<usize> = (0..g.n()).filter(|&v| layers[v] == layer).collect();
        let mut forward = Vec::new();
        for &v in &vertices {
            forward.extend(incoming[v].iter().chain(&outgoing[v]).map(|&e| edge_name(e)));
        }
        let mut backward = Vec::new();
        for &v in vertices.iter().rev() {
            backward.extend(incoming[v].iter().rev().chain(outgoing[v].iter().rev()).map(|&e| edge_name(e)));
        }
        strings[pair].extend(forward);
        strings[pair + 1].extend(backward);
    }
    let mut inst = LcsInstance::from_tokens(&strings, m.saturating_sub(1));
    // Fix the alphabet to edge order, independent of first appearance.
    let names: Vec<String> = (0..arcs.len()).map(edge_name).collect();
    let remap: Vec<usize> = inst.alphabet.iter().map(|a| names.iter().position(|n| n == a).unwrap()).collect();
    for s in &mut inst.strings {
        for x in s.iter_mut() {
            *x = remap[*x];
        }
    }
    inst.alphabet = names;
    debug_assert!(inst.is_injective());
    if inst.strings.len() != 4 {
        return Err(Error::Internal("expected four strings".into()));
    }
    Ok(inst)
}
