use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::model::{Graph, GraphPropertyKind};

fn endpoints(g: &Graph) -> Result<(usize, usize)> {
    match (g.s, g.t) {
        (Some(s), Some(t)) if s < g.n() && t < g.n() => Ok((s, t)),
        _ => Err(Error::Precondition("reachability needs s and t".into())),
    }
}

fn reachable(n: usize, adj: &dyn Fn(usize) -> Vec<usize>, s: usize, t: usize) -> bool {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    while let Some(v) = queue.pop_front() {
        if v == t {
            return true;
        }
        for w in adj(v) {
            if !std::mem::replace(&mut seen[w], true) {
                queue.push_back(w);
            }
        }
    }
    false
}

fn directed_acyclic(g: &Graph) -> bool {
    // Kahn's algorithm; a self-loop keeps its vertex from ever reaching in-degree 0.
    let n = g.n();
    let mut indeg = vec![0usize; n];
    for (_, b) in g.arcs() {
        indeg[b] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop_front() {
        removed += 1;
        for w in g.successors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    removed == n
}

/// Undirected edges {a, b} with a ≤ b, taking every arc in either direction.
fn undirected_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g.arcs().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    e.sort_unstable();
    e.dedup();
    e
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Returns (has a cycle, number of components). Self-loops are cycles.
fn undirected_shape(g: &Graph) -> (bool, usize) {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut cycle = false;
    let mut comps = n;
    for (a, b) in undirected_edges(g) {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            cycle = true;
        } else {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    (cycle, comps)
}

fn layered(g: &Graph) -> Result<bool> {
    let layers = g.layers.as_ref().ok_or_else(|| Error::Precondition("layered-reach needs layers".into()))?;
    if layers.len() != g.n() {
        return Ok(false);
    }
    Ok(g.arcs().iter().all(|&(a, b)| layers[b] == layers[a] + 1))
}

pub fn graph_property(kind: GraphPropertyKind, g: &Graph) -> Result<bool> {
    use GraphPropertyKind::*;
    let n = g.n();
    let directed_adj = |v: usize| g.successors(v).collect::<Vec<_>>();
    Ok(match kind {
        Reach => {
            let (s, t) = endpoints(g)?;
            reachable(n, &directed_adj, s, t)
        }
        DagReach => {
            let (s, t) = endpoints(g)?;
            directed_acyclic(g) && reachable(n, &directed_adj, s, t)
        }
        LayeredReach => {
            let (s, t) = endpoints(g)?;
            layered(g)? && reachable(n, &directed_adj, s, t)
        }
        Cycle => !directed_acyclic(g),
        UndirectedReach => {
            let (s, t) = endpoints(g)?;
            let mut adj = vec![Vec::new(); n];
            for (a, b) in undirected_edges(g) {
                adj[a].push(b);
                adj[b].push(a);
            }
            reachable(n, &|v| adj[v].clone(), s, t)
        }
        Tree => {
            let (cycle, comps) = undirected_shape(g);
            n >= 1 && !cycle && comps == 1
        }
        Forest => !undirected_shape(g).0,
        UndirectedCycle => undirected_shape(g).0,
    })
}
