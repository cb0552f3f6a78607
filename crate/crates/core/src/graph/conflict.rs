//! Conflict sets: edges within distance two of an edge in the line graph.
//!
//! For `e = xy`, an edge `f` is within line-graph distance two of `e` exactly
//! when `f` has an endpoint in `N[x] ∪ N[y]`: either `f` touches `x` or `y`,
//! or `f` touches a neighbor `w` of `x` (or `y`) and the edge `xw` joins them.

use super::{EdgeId, EdgeSet, Graph, Vertex};
use crate::error::{Error, Result};

/// Why an edge set fails to be an induced matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingViolation {
    AbsentEdge(EdgeId),
    Conflict(EdgeId, EdgeId),
}

impl Graph {
    /// Sorted ids of `C(e)`, including `e` itself.
    pub fn conflict_ids(&self, e: EdgeId) -> Result<Vec<EdgeId>> {
        self.require_present(e)?;
        let mut out = Vec::new();
        self.collect_conflicts(e, &mut out);
        Ok(out)
    }

    pub(crate) fn collect_conflicts(&self, e: EdgeId, out: &mut Vec<EdgeId>) {
        out.clear();
        let (x, y) = self.endpoints(e);
        let mut push_incident = |w: Vertex| out.extend(self.adjacency[w].iter().map(|&(_, f)| f));
        push_incident(x);
        push_incident(y);
        for &(w, _) in self.adjacency[x].iter().chain(&self.adjacency[y]) {
            push_incident(w);
        }
        out.sort_unstable();
        out.dedup();
    }

    pub fn conflict_set(&self, e: EdgeId) -> Result<EdgeSet> {
        let ids = self.conflict_ids(e)?;
        Ok(EdgeSet::from_ids(self.edge_capacity(), ids))
    }

    pub fn conflict_size(&self, e: EdgeId) -> Result<usize> {
        Ok(self.conflict_ids(e)?.len())
    }

    /// `true` iff `f ∈ C(e)`. Both edges must be present.
    pub fn conflicts(&self, e: EdgeId, f: EdgeId) -> bool {
        if e == f {
            return true;
        }
        let (x, y) = self.endpoints(e);
        let (a, b) = self.endpoints(f);
        [a, b].iter().any(|&w| w == x || w == y || self.has_edge(w, x) || self.has_edge(w, y))
    }

    /// `PC(M, e)`: the part of `C(e)` not covered by the conflict set of any other edge of `matching`.
    pub fn private_conflicts(&self, matching: &EdgeSet, e: EdgeId) -> Result<EdgeSet> {
        if !matching.contains(e) {
            return Err(Error::NotInMatching(e));
        }
        for f in matching.iter() {
            self.require_present(f)?;
        }
        let mut private = self.conflict_set(e)?;
        let mut buf = Vec::new();
        for f in matching.iter().filter(|&f| f != e) {
            self.collect_conflicts(f, &mut buf);
            for &g in &buf {
                private.remove(g);
            }
        }
        Ok(private)
    }

    /// `G - C(e)`.
    pub fn remove_conflicts(&self, e: EdgeId) -> Result<Graph> {
        let ids = self.conflict_ids(e)?;
        let mut g = self.clone();
        g.remove_edges_in_place(ids);
        Ok(g)
    }

    pub fn is_induced_matching(&self, matching: &EdgeSet) -> bool {
        self.check_induced_matching(matching).is_ok()
    }

    /// Checks that the vertices covered by `matching` induce a 1-regular subgraph.
    pub fn check_induced_matching(&self, matching: &EdgeSet) -> std::result::Result<(), MatchingViolation> {
        let mut owner: Vec<Option<EdgeId>> = vec![None; self.n];
        for e in matching.iter() {
            if !self.is_present(e) {
                return Err(MatchingViolation::AbsentEdge(e));
            }
            let (x, y) = self.endpoints(e);
            for v in [x, y] {
                if let Some(f) = owner[v] {
                    return Err(MatchingViolation::Conflict(f, e));
                }
                owner[v] = Some(e);
            }
        }
        for e in matching.iter() {
            let (x, y) = self.endpoints(e);
            for (v, partner) in [(x, y), (y, x)] {
                for &(w, _) in self.neighbors(v) {
                    if w == partner {
                        continue;
                    }
                    if let Some(f) = owner[w] {
                        return Err(MatchingViolation::Conflict(e, f));
                    }
                }
            }
        }
        Ok(())
    }
}
