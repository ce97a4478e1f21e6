//! Deliberately naive reference implementations.
//!
//! Nothing here shares code paths with the engine it checks: positive
//! dependence goes through an exact phase-one simplex method instead of
//! circuit enumeration, matchings are found by exhaustive assignment, and
//! the hypothesis is scanned over all subsets.

use num_traits::{One, Signed, Zero};

use crate::linalg::{rational_rank, Rational};
use crate::matroid::{Matroid, MatroidKind};
use crate::oriented::OrientedMatroid;
use crate::subset::Subset;
use crate::theorem::Instance;

/// A nonnegative solution of `a x = b`, if one exists (phase one of the
/// simplex method over the rationals with Bland's rule).
pub fn nonnegative_solution(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    // tableau: [A | I | b] with artificial basis
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let mut row: Vec<Rational> = Vec::with_capacity(width);
            for j in 0..n {
                row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
            }
            for k in 0..m {
                row.push(if k == i { Rational::one() } else { Rational::zero() });
            }
            row.push(if flip { -b[i].clone() } else { b[i].clone() });
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<Rational> = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave.expect("phase one objective is bounded below");
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }
    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

/// Whether some `λ >= 0`, `Σλ = 1` has `Σ λ_v col_v = 0` over `cols`.
pub fn has_positive_dependency(cols: &[&[Rational]]) -> bool {
    if cols.is_empty() {
        return false;
    }
    let d = cols[0].len();
    let mut a: Vec<Vec<Rational>> = (0..d)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    a.push(vec![Rational::one(); cols.len()]);
    let mut b = vec![Rational::zero(); d];
    b.push(Rational::one());
    nonnegative_solution(&a, &b).is_some()
}

/// Whether the columns in `s` form a positive circuit: they carry a positive
/// dependency and no proper subset does.
pub fn is_positive_circuit(columns: &[Vec<Rational>], s: Subset) -> bool {
    let pick = |t: Subset| -> Vec<&[Rational]> { t.iter().map(|i| columns[i].as_slice()).collect() };
    has_positive_dependency(&pick(s)) && s.iter().all(|e| !has_positive_dependency(&pick(s.without(e))))
}

/// Whether `x` is a convex combination of `points`.
pub fn in_convex_hull(points: &[&[Rational]], x: &[Rational]) -> bool {
    if points.is_empty() {
        return false;
    }
    let mut a: Vec<Vec<Rational>> = (0..x.len())
        .map(|r| points.iter().map(|p| p[r].clone()).collect())
        .collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut b = x.to_vec();
    b.push(Rational::one());
    nonnegative_solution(&a, &b).is_some()
}

/// Maximum number of elements of `s` that can be assigned to distinct
/// family members containing them, by exhaustive search over assignments
/// (memoized on the set of members already used). Family size <= 20.
pub fn brute_force_matching(family: &[Subset], s: Subset) -> usize {
    fn go(elems: &[usize], family: &[Subset], used: usize, memo: &mut [Vec<Option<usize>>]) -> usize {
        let Some((&e, rest)) = elems.split_first() else {
            return 0;
        };
        if let Some(v) = memo[rest.len()][used] {
            return v;
        }
        let mut best = go(rest, family, used, memo);
        for (j, m) in family.iter().enumerate() {
            if used >> j & 1 == 0 && m.contains(e) {
                best = best.max(1 + go(rest, family, used | 1 << j, memo));
            }
        }
        memo[rest.len()][used] = Some(best);
        best
    }
    assert!(family.len() <= 20, "brute-force matcher family too large");
    let elems: Vec<usize> = s.iter().collect();
    let mut memo = vec![vec![None; 1 << family.len()]; elems.len()];
    go(&elems, family, 0, &mut memo)
}

/// Independence through the brute-force matcher for transversal matroids,
/// and through the matroid's own oracle otherwise.
pub fn independent(n: &Matroid, s: Subset) -> bool {
    match n.kind() {
        MatroidKind::Transversal { family } => brute_force_matching(family, s) == s.len(),
        _ => n.is_independent(s),
    }
}

/// The covering hypothesis over all `2^|V|` subsets.
pub fn naive_hypothesis(om: &OrientedMatroid, n: &Matroid) -> bool {
    let full = om.ground().full();
    full.subsets().all(|a| {
        n.rank(full.difference(a)) >= om.rank() || om.contains_positive_circuit(a).is_some()
    })
}

/// The covering hypothesis over all `2^|V|` subsets of a vector
/// configuration, deciding positive circuits by linear programming.
pub fn naive_hypothesis_lp(columns: &[Vec<Rational>], n: &Matroid) -> bool {
    let dim = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let r = rational_rank(&rows);
    let full = Subset::full(columns.len());
    full.subsets().all(|a| {
        n.rank(full.difference(a)) >= r || {
            let cols: Vec<&[Rational]> = a.iter().map(|i| columns[i].as_slice()).collect();
            has_positive_dependency(&cols)
        }
    })
}

/// The lexicographically least subset that is a positive circuit of the
/// vector configuration (by linear programming) and independent in `n`.
pub fn brute_force_witness(columns: &[Vec<Rational>], inst: &Instance) -> Option<Subset> {
    let full = inst.ground().full();
    let max = inst.oriented_matroid().rank() + 1;
    let mut candidates: Vec<Subset> = full
        .subsets()
        .filter(|s| !s.is_empty() && s.len() <= max)
        .collect();
    candidates.sort();
    candidates
        .into_iter()
        .find(|&s| independent(inst.matroid(), s) && is_positive_circuit(columns, s))
}
