//! Classification of finite undirected multigraphs against the simply-laced
//! Dynkin and extended (affine) Dynkin diagrams.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Undirected multigraph; an edge `(a, a)` is a loop.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        assert!(edges.iter().all(|&(a, b)| a < labels.len() && b < labels.len()));
        Graph { labels, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(a, b)| a == b)
    }

    /// Vertex sets of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "name", rename_all = "lowercase")]
pub enum GraphClass {
    Dynkin(String),
    Affine(String),
    Neither,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin(n) => write!(f, "Dynkin {n}"),
            GraphClass::Affine(n) => write!(f, "affine Dynkin {n}"),
            GraphClass::Neither => f.write_str("neither Dynkin nor affine"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentClass {
    pub vertices: Vec<String>,
    pub edges: usize,
    pub class: GraphClass,
}

/// Classifies one connected multigraph given by its vertex count and edge
/// list (vertices `0..n`).
fn classify_connected(n: usize, edges: &[(usize, usize)]) -> GraphClass {
    let e = edges.len();
    let loops = edges.iter().filter(|(a, b)| a == b).count();
    if loops > 0 {
        return if n == 1 && e == 1 { GraphClass::Affine("Ã0".into()) } else { GraphClass::Neither };
    }
    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(a, b) in edges {
        *mult.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    if mult.values().any(|&m| m > 1) {
        return if n == 2 && e == 2 { GraphClass::Affine("Ã1".into()) } else { GraphClass::Neither };
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    if e == n {
        // connected with one cycle: affine A exactly when it is the cycle
        return if deg.iter().all(|&d| d == 2) {
            GraphClass::Affine(format!("Ã{}", n - 1))
        } else {
            GraphClass::Neither
        };
    }
    if e + 1 != n {
        return GraphClass::Neither;
    }
    // trees
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => GraphClass::Dynkin(format!("A{n}")),
        [c] if deg[*c] == 4 => {
            if n == 5 {
                GraphClass::Affine("D̃4".into())
            } else {
                GraphClass::Neither
            }
        }
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = adj[*c].iter().map(|&s| arm_length(&adj, *c, s)).collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, r) => GraphClass::Dynkin(format!("D{}", r + 3)),
                (1, 2, 2) => GraphClass::Dynkin("E6".into()),
                (1, 2, 3) => GraphClass::Dynkin("E7".into()),
                (1, 2, 4) => GraphClass::Dynkin("E8".into()),
                (2, 2, 2) => GraphClass::Affine("Ẽ6".into()),
                (1, 3, 3) => GraphClass::Affine("Ẽ7".into()),
                (1, 2, 5) => GraphClass::Affine("Ẽ8".into()),
                _ => GraphClass::Neither,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            // D̃: each branch vertex carries two leaves
            let leaves = |c: usize| adj[c].iter().filter(|&&s| deg[s] == 1).count();
            if leaves(*a) >= 2 && leaves(*b) >= 2 {
                GraphClass::Affine(format!("D̃{}", n - 1))
            } else {
                GraphClass::Neither
            }
        }
        _ => GraphClass::Neither,
    }
}

/// Number of vertices on the path leaving `center` through `start`.
fn arm_length(adj: &[Vec<usize>], center: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    while adj[cur].len() == 2 {
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

/// Per-component classification.
pub fn classify_graph(g: &Graph) -> Vec<ComponentClass> {
    g.components()
        .into_iter()
        .map(|comp| {
            let index: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(k, v)| (*v, k)).collect();
            let edges: Vec<(usize, usize)> = g
                .edges
                .iter()
                .filter(|(a, _)| index.contains_key(a))
                .map(|(a, b)| (index[a], index[b]))
                .collect();
            ComponentClass {
                vertices: comp.iter().map(|&v| g.labels[v].clone()).collect(),
                edges: edges.len(),
                class: classify_connected(comp.len(), &edges),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new((0..n).map(|i| i.to_string()).collect(), edges.to_vec())
    }

    fn class(n: usize, edges: &[(usize, usize)]) -> GraphClass {
        let c = classify_graph(&graph(n, edges));
        assert_eq!(c.len(), 1);
        c[0].class.clone()
    }

    #[test]
    fn templates() {
        assert_eq!(class(3, &[(0, 1), (1, 2)]), GraphClass::Dynkin("A3".into()));
        assert_eq!(class(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), GraphClass::Affine("Ã3".into()));
        assert_eq!(class(4, &[(0, 1), (0, 2), (0, 3)]), GraphClass::Dynkin("D4".into()));
        assert_eq!(class(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), GraphClass::Affine("D̃4".into()));
        assert_eq!(class(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]), GraphClass::Affine("D̃5".into()));
        assert_eq!(class(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]), GraphClass::Dynkin("E6".into()));
        assert_eq!(
            class(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]),
            GraphClass::Affine("Ẽ6".into())
        );
        assert_eq!(class(2, &[(0, 1), (0, 1)]), GraphClass::Affine("Ã1".into()));
        assert_eq!(class(1, &[(0, 0)]), GraphClass::Affine("Ã0".into()));
        assert_eq!(class(1, &[]), GraphClass::Dynkin("A1".into()));
        assert_eq!(class(2, &[(0, 1), (0, 1), (0, 1)]), GraphClass::Neither);
        // K4 minus nothing: too many edges
        assert_eq!(class(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), GraphClass::Neither);
    }

    #[test]
    fn components_split() {
        let c = classify_graph(&graph(4, &[(0, 1), (2, 3)]));
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|k| k.class == GraphClass::Dynkin("A2".into())));
    }
}
