use crate::graph::Graph;

/// Nodes of the largest weakly connected component, ascending. Ties go to the
/// component containing the smallest node id.
pub fn largest_component(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut component = vec![usize::MAX; n];
    let mut best: Vec<usize> = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        let mut members = vec![root];
        component[root] = root;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &w in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
                if component[w] == usize::MAX {
                    component[w] = root;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        if members.len() > best.len() {
            best = members;
        }
    }
    best.sort_unstable();
    best
}
