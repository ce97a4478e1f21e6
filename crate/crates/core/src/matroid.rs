//! Matroids behind a single rank oracle.
//!
//! Independence, circuits and bases are all derived from [`Matroid::rank`].

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::linalg::{column_rank, primitive_integer, Rational};
use crate::matching::max_matching;
use crate::subset::{k_subsets, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidKind {
    Explicit { bases: Vec<Subset> },
    Uniform { rank: usize },
    /// One column per ground element.
    Linear { columns: Vec<Vec<Rational>> },
    /// One edge per ground element, as a pair of vertex names.
    Graphic { edges: Vec<(String, String)> },
    /// Family of subsets of the ground set.
    Transversal { family: Vec<Subset> },
}

#[derive(Clone, Debug)]
pub struct Matroid {
    ground: GroundSet,
    kind: MatroidKind,
    repr: Repr,
    rank: usize,
}

#[derive(Clone, Debug)]
enum Repr {
    None,
    Columns(Vec<Vec<BigInt>>),
    Edges(Vec<(usize, usize)>),
    Members(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violation: Option<String>,
}

impl ValidationReport {
    fn pass() -> Self {
        ValidationReport {
            ok: true,
            violation: None,
        }
    }

    fn fail(msg: impl Into<String>) -> Self {
        ValidationReport {
            ok: false,
            violation: Some(msg.into()),
        }
    }
}

impl Matroid {
    pub fn uniform(ground: GroundSet, rank: usize) -> Self {
        Self::build(ground, MatroidKind::Uniform { rank }, Repr::None)
    }

    pub fn linear(ground: GroundSet, columns: Vec<Vec<Rational>>) -> Result<Self> {
        if columns.len() != ground.len() {
            return Err(Error::DimensionMismatch {
                expected: ground.len(),
                found: columns.len(),
                context: "number of columns".into(),
            });
        }
        let dim = columns.first().map_or(0, Vec::len);
        if let Some(c) = columns.iter().position(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: columns[c].len(),
                context: format!("column `{}`", ground.label(c)),
            });
        }
        let ints = columns.iter().map(|c| primitive_integer(c)).collect();
        Ok(Self::build(
            ground,
            MatroidKind::Linear { columns },
            Repr::Columns(ints),
        ))
    }

    pub fn graphic(ground: GroundSet, edges: Vec<(String, String)>) -> Result<Self> {
        if edges.len() != ground.len() {
            return Err(Error::DimensionMismatch {
                expected: ground.len(),
                found: edges.len(),
                context: "number of edges".into(),
            });
        }
        let mut ids: HashMap<&str, usize> = HashMap::new();
        let mut ends = Vec::with_capacity(edges.len());
        for (u, v) in &edges {
            let next = ids.len();
            let a = *ids.entry(u.as_str()).or_insert(next);
            let next = ids.len();
            let b = *ids.entry(v.as_str()).or_insert(next);
            ends.push((a, b));
        }
        Ok(Self::build(
            ground,
            MatroidKind::Graphic { edges },
            Repr::Edges(ends),
        ))
    }

    pub fn transversal(ground: GroundSet, family: Vec<Subset>) -> Result<Self> {
        for &member in &family {
            ground.check_subset(member)?;
        }
        let members = (0..ground.len())
            .map(|e| {
                family
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| m.contains(e))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Ok(Self::build(
            ground,
            MatroidKind::Transversal { family },
            Repr::Members(members),
        ))
    }

    pub fn explicit(ground: GroundSet, bases: Vec<Subset>) -> Result<Self> {
        for &b in &bases {
            ground.check_subset(b)?;
        }
        if bases.is_empty() {
            return Err(Error::Invalid("explicit matroid needs at least one basis".into()));
        }
        Ok(Self::build(ground, MatroidKind::Explicit { bases }, Repr::None))
    }

    fn build(ground: GroundSet, kind: MatroidKind, repr: Repr) -> Self {
        let mut m = Matroid {
            ground,
            kind,
            repr,
            rank: 0,
        };
        m.rank = m.rank_unchecked(m.ground.full());
        m
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank
    }

    /// `rank(S)`. Panics if `s` is not a subset of the ground set.
    pub fn rank(&self, s: Subset) -> usize {
        assert!(
            s.is_subset_of(self.ground.full()),
            "subset {s:?} outside ground set"
        );
        self.rank_unchecked(s)
    }

    pub fn rank_of_labels<I, S>(&self, labels: I) -> Result<usize>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.rank_unchecked(self.ground.subset(labels)?))
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    pub fn is_independent_labels<I, S>(&self, labels: I) -> Result<bool>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let s = self.ground.subset(labels)?;
        Ok(self.rank_unchecked(s) == s.len())
    }

    fn rank_unchecked(&self, s: Subset) -> usize {
        match (&self.kind, &self.repr) {
            (MatroidKind::Uniform { rank }, _) => s.len().min(*rank),
            (MatroidKind::Explicit { bases }, _) => bases
                .iter()
                .map(|b| b.intersection(s).len())
                .max()
                .unwrap_or(0),
            (MatroidKind::Linear { .. }, Repr::Columns(cols)) => {
                let sel: Vec<&[BigInt]> = s.iter().map(|i| cols[i].as_slice()).collect();
                column_rank(&sel)
            }
            (MatroidKind::Graphic { .. }, Repr::Edges(ends)) => forest_size(ends, s),
            (MatroidKind::Transversal { family }, Repr::Members(members)) => {
                let adj: Vec<Vec<usize>> = s.iter().map(|e| members[e].clone()).collect();
                max_matching(&adj, family.len()).0
            }
            _ => unreachable!("representation matches kind by construction"),
        }
    }

    /// All circuits (minimal dependent sets), sorted lexicographically.
    pub fn circuits(&self, caps: &Caps) -> Result<Vec<Subset>> {
        let n = self.ground.len();
        if n > caps.enumeration {
            return Err(Error::cap("circuit enumeration", caps.enumeration, n));
        }
        let mut out = minimal_dependent_sets(n, self.rank, |s| self.is_independent(s));
        out.sort();
        Ok(out)
    }

    /// All bases, sorted lexicographically.
    pub fn bases(&self, caps: &Caps) -> Result<Vec<Subset>> {
        let n = self.ground.len();
        if n > caps.enumeration {
            return Err(Error::cap("basis enumeration", caps.enumeration, n));
        }
        let mut out: Vec<Subset> = k_subsets(n, self.rank)
            .filter(|&b| self.is_independent(b))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Checks looplessness, and for explicit bases the basis axioms.
    pub fn validate(&self, caps: &Caps) -> ValidationReport {
        if let MatroidKind::Uniform { rank } = self.kind {
            if rank > self.ground.len() {
                return ValidationReport::fail(format!(
                    "uniform rank {rank} exceeds ground set size {}",
                    self.ground.len()
                ));
            }
        }
        if let MatroidKind::Explicit { bases } = &self.kind {
            if let Some(msg) = check_basis_axioms(&self.ground, bases, caps) {
                return ValidationReport::fail(msg);
            }
        }
        for e in 0..self.ground.len() {
            if self.rank_unchecked(Subset::singleton(e)) == 0 {
                return ValidationReport::fail(format!(
                    "element `{}` is a loop",
                    self.ground.label(e)
                ));
            }
        }
        ValidationReport::pass()
    }
}

/// Minimal dependent sets of size at most `rank + 1`, found level by level:
/// a dependent set is minimal iff it contains no smaller dependent set found
/// earlier.
pub(crate) fn minimal_dependent_sets(
    n: usize,
    rank: usize,
    is_independent: impl Fn(Subset) -> bool,
) -> Vec<Subset> {
    let mut found: Vec<Subset> = Vec::new();
    for k in 1..=(rank + 1).min(n) {
        let level: Vec<Subset> = k_subsets(n, k)
            .filter(|&s| !found.iter().any(|c| c.is_subset_of(s)) && !is_independent(s))
            .collect();
        found.extend(level);
    }
    found
}

fn forest_size(ends: &[(usize, usize)], s: Subset) -> usize {
    let nv = ends.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut joined = 0;
    for e in s.iter() {
        let (u, v) = ends[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            joined += 1;
        }
    }
    joined
}

fn check_basis_axioms(ground: &GroundSet, bases: &[Subset], caps: &Caps) -> Option<String> {
    if ground.len() > caps.explicit_validation {
        return Some(format!(
            "explicit bases on {} elements exceed the exhaustive validation cap {}",
            ground.len(),
            caps.explicit_validation
        ));
    }
    let r = bases[0].len();
    if let Some(b) = bases.iter().find(|b| b.len() != r) {
        return Some(format!(
            "bases of different sizes: {:?} and {:?}",
            ground.labels_of(bases[0]),
            ground.labels_of(*b)
        ));
    }
    let mut sorted = bases.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Some(format!("duplicate basis {:?}", ground.labels_of(w[0])));
    }
    for &b1 in &sorted {
        for &b2 in &sorted {
            for x in b1.difference(b2).iter() {
                let ok = b2
                    .difference(b1)
                    .iter()
                    .any(|y| sorted.binary_search(&b1.without(x).with(y)).is_ok());
                if !ok {
                    return Some(format!(
                        "basis exchange fails for {:?}, {:?} at `{}`",
                        ground.labels_of(b1),
                        ground.labels_of(b2),
                        ground.label(x)
                    ));
                }
            }
        }
    }
    None
}
