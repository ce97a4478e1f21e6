//! Maximum bipartite matching by augmenting paths.

/// Size of a maximum matching between `left` vertices and right vertices
/// `0..n_right`, where `adj[l]` lists the right neighbours of left vertex `l`.
///
/// Left vertices are processed in order and neighbours are tried in list
/// order, so the matching found is deterministic.
pub fn max_matching(adj: &[Vec<usize>], n_right: usize) -> (usize, Vec<Option<usize>>) {
    let mut owner: Vec<Option<usize>> = vec![None; n_right];
    let mut size = 0;
    for l in 0..adj.len() {
        let mut seen = vec![false; n_right];
        if augment(l, adj, &mut owner, &mut seen) {
            size += 1;
        }
    }
    let mut left_match = vec![None; adj.len()];
    for (r, o) in owner.iter().enumerate() {
        if let Some(l) = o {
            left_match[*l] = Some(r);
        }
    }
    (size, left_match)
}

fn augment(l: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if owner[r].map_or(true, |o| augment(o, adj, owner, seen)) {
            owner[r] = Some(l);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn needs_augmenting_path() {
        // greedy would match 0->0 and strand 1
        let adj = vec![vec![0, 1], vec![0]];
        let (size, m) = max_matching(&adj, 2);
        assert_eq!(size, 2);
        assert_eq!(m, vec![Some(1), Some(0)]);
    }

    #[test]
    fn empty_and_isolated() {
        assert_eq!(max_matching(&[], 3).0, 0);
        assert_eq!(max_matching(&[vec![], vec![2]], 3).0, 1);
    }
}
