use serde::Serialize;

use crate::graph::{EdgeId, EdgeSet, Graph};

/// Edge coloring whose color classes are induced matchings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongColoring {
    /// Indexed by edge id; `None` for ids not present in the graph.
    pub colors: Vec<Option<usize>>,
    pub num_colors: usize,
}

impl StrongColoring {
    pub fn color(&self, e: EdgeId) -> Option<usize> {
        self.colors.get(e.0).copied().flatten()
    }

    pub fn classes(&self) -> Vec<EdgeSet> {
        let mut classes = vec![EdgeSet::with_capacity(self.colors.len()); self.num_colors];
        for (i, c) in self.colors.iter().enumerate() {
            if let Some(c) = *c {
                classes[c].insert(EdgeId(i));
            }
        }
        classes
    }
}

/// First-fit strong edge coloring in increasing edge id order: each edge gets
/// the smallest color not already used inside its conflict set.
pub fn greedy_strong_coloring(g: &Graph) -> StrongColoring {
    let mut colors: Vec<Option<usize>> = vec![None; g.edge_capacity()];
    let mut num_colors = 0;
    let mut taken = Vec::new();
    let mut buf = Vec::new();
    for e in g.edge_ids() {
        g.collect_conflicts(e, &mut buf);
        taken.clear();
        taken.resize(buf.len() + 1, false);
        for f in &buf {
            if let Some(c) = colors[f.0] {
                if c < taken.len() {
                    taken[c] = true;
                }
            }
        }
        let c = taken.iter().position(|&t| !t).expect("pigeonhole leaves a free color");
        colors[e.0] = Some(c);
        num_colors = num_colors.max(c + 1);
    }
    StrongColoring { colors, num_colors }
}
