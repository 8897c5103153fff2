use crate::error::{Error, Result};
use crate::model::union::{decode_graph, encode_graph, graph_header, graph_template};
use crate::model::{FamilyUnionInstance, Graph, GraphPropertyKind, SubsetUnionInstance, UnionBase};

/// Index of v_ab^i (i in 1..=k) among n + k·n² vertices.
pub fn chain_vertex(n: usize, k: usize, a: usize, b: usize, i: usize) -> usize {
    n + (a * n + b) * k + (i - 1)
}

/// Chains v_ab^0 = a, v_ab^1, …, v_ab^k for every pair (a, b); element s of
/// family i contributes the i-th link of every chain and the closing link
/// from v_ab^k to b for each of its edges. Forests use the triangle gadget
/// instead.
pub fn family_to_subset_graph(inst: &FamilyUnionInstance) -> Result<SubsetUnionInstance> {
    let kind = match inst.base {
        UnionBase::Graph(k) if k != GraphPropertyKind::LayeredReach => k,
        other => return Err(Error::Unsupported(format!("family_to_subset_graph on base {other}"))),
    };
    if kind == GraphPropertyKind::Forest {
        return forest(inst);
    }
    let h = graph_header(inst.template.symbols())?;
    let (n, k) = (h.n, inst.k());
    let n2 = n + k * n * n;
    let template = graph_template(n2, h.s, h.t, None);
    let mut set = Vec::new();
    for (fi, family) in inst.families.iter().enumerate() {
        let i = fi + 1;
        for s in family {
            let g = decode_graph(kind, s.symbols())?;
            let mut out = Graph::new(n2, kind.is_directed());
            for a in 0..n {
                for b in 0..n {
                    let prev = if i == 1 { a } else { chain_vertex(n, k, a, b, i - 1) };
                    out.add_edge(prev, chain_vertex(n, k, a, b, i));
                }
            }
            for (a, b) in g.arcs() {
                let end = chain_vertex(n, k, a, b, k);
                if kind.is_directed() || a < b {
                    out.add_edge(end, b);
                } else if a == b {
                    // A loop closes the chain into a cycle for undirected-cycle;
                    // elsewhere it becomes a loop at the chain end, so that a
                    // broken chain cannot leave a tree behind.
                    if kind == GraphPropertyKind::UndirectedCycle && k >= 2 {
                        out.add_edge(end, a);
                    } else {
                        out.add_edge(end, end);
                    }
                }
            }
            set.push(encode_graph(&template, &out)?);
        }
    }
    SubsetUnionInstance::new(inst.base, template, set, k)
}

/// Each element keeps its own edges and gets a marker edge p_x–q_x for its
/// family x. For every pair of elements of one family three fresh vertices
/// a, b, c are added: the earlier element gets a–b and b–c, the later one
/// c–a, so two picks from one family close a triangle.
fn forest(inst: &FamilyUnionInstance) -> Result<SubsetUnionInstance> {
    let kind = GraphPropertyKind::Forest;
    let h = graph_header(inst.template.symbols())?;
    let (n, k) = (h.n, inst.k());
    let pairs: usize = inst.families.iter().map(|f| f.len() * f.len().saturating_sub(1) / 2).sum();
    let n2 = n + 2 * k + 3 * pairs;
    let template = graph_template(n2, h.s, h.t, None);
    let mut set = Vec::new();
    let mut gadget = n + 2 * k;
    for (x, family) in inst.families.iter().enumerate() {
        let mut graphs = Vec::new();
        for s in family {
            let g = decode_graph(kind, s.symbols())?;
            let mut out = Graph::new(n2, false);
            for (a, b) in g.arcs() {
                out.add_edge(a, b);
            }
            out.add_edge(n + 2 * x, n + 2 * x + 1);
            graphs.push(out);
        }
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                let (a, b, c) = (gadget, gadget + 1, gadget + 2);
                gadget += 3;
                graphs[i].add_edge(a, b);
                graphs[i].add_edge(b, c);
                graphs[j].add_edge(c, a);
            }
        }
        for g in &graphs {
            set.push(encode_graph(&template, g)?);
        }
    }
    SubsetUnionInstance::new(inst.base, template, set, k)
}
