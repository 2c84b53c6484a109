use super::{Graph, GraphError, VertexSet};

/// Block decomposition of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks {
    /// Vertex sets of the maximal 2-connected subgraphs and bridges, sorted.
    pub blocks: Vec<VertexSet>,
    pub cutvertices: VertexSet,
}

/// Iterative Hopcroft–Tarjan with an explicit edge stack.
pub(super) fn decompose(g: &Graph) -> Result<Blocks, GraphError> {
    let n = g.n();
    if n == 0 {
        return Ok(Blocks { blocks: Vec::new(), cutvertices: VertexSet::new() });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if n == 1 {
        return Ok(Blocks { blocks: vec![VertexSet::singleton(0)], cutvertices: VertexSet::new() });
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut next_child = vec![0usize; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut cut = vec![false; n];
    let mut root_children = 0;
    let mut time = 0;

    let root = 0;
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut stack = vec![root];
    while let Some(&u) = stack.last() {
        if next_child[u] < g.neighbors(u).len() {
            let w = g.neighbors(u)[next_child[u]];
            next_child[u] += 1;
            if disc[w] == UNSEEN {
                parent[w] = u;
                disc[w] = time;
                low[w] = time;
                time += 1;
                edge_stack.push((u, w));
                if u == root {
                    root_children += 1;
                }
                stack.push(w);
            } else if w != parent[u] && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[u];
            if p == UNSEEN {
                continue;
            }
            low[p] = low[p].min(low[u]);
            if low[u] >= disc[p] {
                if p != root {
                    cut[p] = true;
                }
                let mut members = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    members.push(a);
                    members.push(b);
                    if (a, b) == (p, u) {
                        break;
                    }
                }
                blocks.push(VertexSet::from(members));
            }
        }
    }
    if root_children >= 2 {
        cut[root] = true;
    }
    blocks.sort();
    let cutvertices = (0..n).filter(|&v| cut[v]).collect();
    Ok(Blocks { blocks, cutvertices })
}
