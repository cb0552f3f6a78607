use crate::graph::{EdgeId, EdgeSet, Graph};

/// Local search for an induced matching.
///
/// Starting from the empty set, applies two moves until neither applies:
/// (a) add an edge that conflicts with no matching edge, scanning ids in
/// increasing order; (b) swap one matching edge `e` for two edges `e' < e''`
/// that conflict with neither each other nor the rest of the matching,
/// scanning `e` and then the pairs lexicographically. Move (b) restarts the
/// scan from (a). Each successful round grows the matching, so this terminates.
pub fn local_search(g: &Graph) -> EdgeSet {
    let cap = g.edge_capacity();
    let conflicts: Vec<Vec<EdgeId>> = (0..cap).map(|i| g.conflict_ids(EdgeId(i)).unwrap_or_default()).collect();
    // cover[f] = number of matching edges whose conflict set holds f
    let mut cover = vec![0u32; cap];
    let mut matching = g.new_edge_set();

    let add = |e: EdgeId, matching: &mut EdgeSet, cover: &mut [u32]| {
        matching.insert(e);
        for f in &conflicts[e.0] {
            cover[f.0] += 1;
        }
    };

    loop {
        for e in g.edge_ids() {
            if cover[e.0] == 0 {
                add(e, &mut matching, &mut cover);
            }
        }

        let mut swap = None;
        'scan: for e in matching.iter() {
            // A replacement edge may conflict with no other matching edge, so
            // it lies in the private conflict set of e.
            let private: Vec<EdgeId> = conflicts[e.0].iter().copied().filter(|&f| f != e && cover[f.0] == 1).collect();
            for (i, &first) in private.iter().enumerate() {
                for &second in &private[i + 1..] {
                    if conflicts[first.0].binary_search(&second).is_err() {
                        swap = Some((e, first, second));
                        break 'scan;
                    }
                }
            }
        }
        let Some((out, first, second)) = swap else {
            break;
        };
        matching.remove(out);
        for f in &conflicts[out.0] {
            cover[f.0] -= 1;
        }
        add(first, &mut matching, &mut cover);
        add(second, &mut matching, &mut cover);
    }
    matching
}

/// Exhaustively checks that `matching` is an induced matching of `g` that
/// neither move of [`local_search`] can improve. Quadratic in `m` per matching edge.
pub fn is_local_search_fixpoint(g: &Graph, matching: &EdgeSet) -> bool {
    if !g.is_induced_matching(matching) {
        return false;
    }
    let outside: Vec<EdgeId> = g.edge_ids().filter(|&e| !matching.contains(e)).collect();
    let compatible = |m: &EdgeSet, e: EdgeId| m.iter().all(|f| !g.conflicts(e, f));

    if outside.iter().any(|&e| compatible(matching, e)) {
        return false;
    }
    for e in matching.iter() {
        let mut rest = matching.clone();
        rest.remove(e);
        let free: Vec<EdgeId> = outside.iter().copied().filter(|&f| compatible(&rest, f)).collect();
        for (i, &a) in free.iter().enumerate() {
            if free[i + 1..].iter().any(|&b| !g.conflicts(a, b)) {
                return false;
            }
        }
    }
    true
}
