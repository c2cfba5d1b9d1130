//! The Ext quiver of the simples `L(n)`, its separated form, and the
//! radical-square-zero representation-type report.

mod graph;

pub use graph::{classify_graph, ComponentClass, Graph, GraphClass};

use crate::homcalc::ext1;
use crate::repcat::{build_simple, ModuleError};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Cells with `|i − j|` beyond this are zero by the weight argument
/// (`m − n ∈ {−2, 0, 2}`) and are not computed.
pub const COMPUTED_SPAN: usize = 4;

/// Vertices `n` (standing for `L(n)`) and arrows `i → j` with multiplicity
/// `dim Ext¹(L(i), L(j))`, computed as extensions with quotient `L(i)` and
/// submodule `L(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertices: Vec<usize>,
    pub arrows: BTreeMap<(usize, usize), usize>,
    /// Cells overridden to match the printed quiver, if any.
    pub overrides: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.arrows.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `multiplicity(i→j) = multiplicity(j→i)` for all cells.
    pub fn is_symmetric(&self) -> bool {
        self.arrows.iter().all(|(&(i, j), &m)| self.multiplicity(j, i) == m)
    }

    /// Ext table as JSON object with keys `"(i,j)"`, including zero cells.
    pub fn table_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for &i in &self.vertices {
            for &j in &self.vertices {
                map.insert(format!("({i},{j})"), self.multiplicity(i, j).into());
            }
        }
        serde_json::Value::Object(map)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph gabriel {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\" [label=\"L({v})\"];\n"));
        }
        for (&(i, j), &m) in &self.arrows {
            if m == 0 {
                continue;
            }
            let style = if self.overrides.contains(&(i, j)) { ", style=dashed" } else { "" };
            s.push_str(&format!("  \"{i}\" -> \"{j}\" [label=\"{m}\"{style}];\n"));
        }
        s.push_str("}\n");
        s
    }

    /// The printed variant: a loop at every vertex, including 0.
    pub fn paper_variant(&self) -> Quiver {
        let mut q = self.clone();
        if q.vertices.contains(&0) && q.multiplicity(0, 0) != 1 {
            q.arrows.insert((0, 0), 1);
            q.overrides.push((0, 0));
        }
        q
    }
}

/// Ext quiver on the simples `L(0)..L(max_n)`. Cells are computed in
/// parallel on the current rayon pool.
pub fn gabriel_quiver(max_n: usize) -> Result<Quiver, ModuleError> {
    let cells: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|i| (0..=max_n).map(move |j| (i, j)))
        .filter(|&(i, j)| i.abs_diff(j) <= COMPUTED_SPAN)
        .collect();
    let dims: Vec<((usize, usize), usize)> = cells
        .par_iter()
        .map(|&(i, j)| Ok(((i, j), ext1(&build_simple(i), &build_simple(j))?.dimension)))
        .collect::<Result<_, ModuleError>>()?;
    let arrows = dims.into_iter().filter(|(_, d)| *d > 0).collect();
    Ok(Quiver { vertices: (0..=max_n).collect(), arrows, overrides: Vec::new() })
}

/// Bipartite graph on `{v, v′ : v ∈ subset}` with an edge `i — j′` for every
/// arrow `i → j` between vertices of the subset (loops included).
pub fn separated_quiver(q: &Quiver, subset: &[usize]) -> Graph {
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    let verts: Vec<usize> = set.iter().copied().collect();
    let k = verts.len();
    let pos = |v: usize| verts.iter().position(|&w| w == v).expect("vertex in subset");
    let labels = verts
        .iter()
        .map(|v| v.to_string())
        .chain(verts.iter().map(|v| format!("{v}'")))
        .collect();
    let mut edges = Vec::new();
    for (&(i, j), &m) in &q.arrows {
        if set.contains(&i) && set.contains(&j) {
            for _ in 0..m {
                edges.push((pos(i), k + pos(j)));
            }
        }
    }
    Graph::new(labels, edges)
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationReport {
    pub max_n: usize,
    pub variant: String,
    pub subset: Vec<usize>,
    pub ext_table: serde_json::Value,
    pub separated_edges: Vec<(String, String)>,
    pub components: Vec<ComponentClass>,
    pub verdict: String,
    pub wild: bool,
    pub discrepancies: Vec<String>,
}

pub const WILD_VERDICT: &str = "wild (radical-square-zero criterion on finite quotient)";

fn discrepancies(computed: &Quiver) -> Vec<String> {
    if computed.vertices.contains(&0) && computed.multiplicity(0, 0) == 0 {
        vec!["loop at vertex 0: computed dim Ext¹(L(0),L(0)) = 0, printed quiver has 1".into()]
    } else {
        Vec::new()
    }
}

/// Builds the quiver (computed or printed variant), separates `subset`, and
/// classifies the components. Without a subset, `{2,4,6}` is used when
/// available, otherwise the first triple `{k, k+2, k+4}` that is wild.
pub fn representation_type_report(
    max_n: usize,
    paper_variant: bool,
    subset: Option<&[usize]>,
) -> Result<RepresentationReport, ModuleError> {
    let computed = gabriel_quiver(max_n)?;
    let q = if paper_variant { computed.paper_variant() } else { computed.clone() };
    let classify = |s: &[usize]| {
        let g = separated_quiver(&q, s);
        let comps = classify_graph(&g);
        (g, comps)
    };
    let chosen: Vec<usize> = match subset {
        Some(s) => s.to_vec(),
        None if max_n >= 6 => vec![2, 4, 6],
        None => (0..=max_n.saturating_sub(4))
            .map(|k| vec![k, k + 2, k + 4])
            .find(|s| classify(s).1.iter().any(|c| c.class == GraphClass::Neither))
            .unwrap_or_else(|| (0..=max_n).collect()),
    };
    if let Some(bad) = chosen.iter().find(|&&v| v > max_n) {
        return Err(ModuleError::Contract(format!("vertex {bad} exceeds max_n = {max_n}")));
    }
    let (g, components) = classify(&chosen);
    let wild = components.iter().any(|c| c.class == GraphClass::Neither);
    Ok(RepresentationReport {
        max_n,
        variant: if paper_variant { "paper".into() } else { "computed".into() },
        subset: chosen,
        ext_table: q.table_json(),
        separated_edges: g.edges.iter().map(|&(a, b)| (g.labels[a].clone(), g.labels[b].clone())).collect(),
        components,
        verdict: if wild { WILD_VERDICT.into() } else { "not certified wild on this subset".into() },
        wild,
        discrepancies: discrepancies(&computed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_loop_separates_to_an_edge() {
        let mut arrows = BTreeMap::new();
        arrows.insert((2, 2), 1);
        let q = Quiver { vertices: vec![2], arrows, overrides: vec![] };
        let g = separated_quiver(&q, &[2]);
        assert_eq!(g.edges, vec![(0, 1)]);
        assert_eq!(classify_graph(&g)[0].class, GraphClass::Dynkin("A2".into()));
    }
}
