//! Simplicial complexes represented by their facets.
//!
//! A complex lives on an explicit vertex set, which may contain vertices
//! that are not faces (the Alexander dual needs them). The empty face is
//! always present, so the smallest complex is `{∅}`.

use std::collections::HashSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::oriented::OrientedMatroid;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: GroundSet,
    facets: Vec<Subset>,
}

impl SimplicialComplex {
    /// Complex generated by `generators`; non-maximal generators are dropped.
    pub fn from_facets(vertices: GroundSet, generators: Vec<Subset>) -> Result<Self> {
        for &f in &generators {
            vertices.check_subset(f)?;
        }
        Ok(Self::from_facets_unchecked(vertices, generators))
    }

    pub fn from_facet_labels<S: AsRef<str>>(vertices: GroundSet, facets: &[Vec<S>]) -> Result<Self> {
        let subsets = facets
            .iter()
            .map(|f| vertices.subset(f.iter().map(AsRef::as_ref)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_facets_unchecked(vertices, subsets))
    }

    pub(crate) fn from_facets_unchecked(vertices: GroundSet, generators: Vec<Subset>) -> Self {
        SimplicialComplex {
            vertices,
            facets: maximal_sets(generators),
        }
    }

    /// The complex `{∅}` on the given vertex set.
    pub fn empty(vertices: GroundSet) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![Subset::EMPTY],
        }
    }

    pub fn full_simplex(vertices: GroundSet) -> Self {
        let full = vertices.full();
        SimplicialComplex {
            vertices,
            facets: vec![full],
        }
    }

    /// All proper subsets of the vertex set.
    pub fn simplex_boundary(vertices: GroundSet) -> Self {
        let full = vertices.full();
        let facets = full.iter().map(|v| full.without(v)).collect();
        Self::from_facets_unchecked(vertices, facets)
    }

    pub fn vertices(&self) -> &GroundSet {
        &self.vertices
    }

    /// Facets sorted lexicographically.
    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|&f| self.vertices.labels_of(f))
            .collect()
    }

    pub fn contains(&self, face: Subset) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Dimension: size of the largest facet minus one (`-1` for `{∅}`).
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    /// A cone over some vertex; such complexes have vanishing reduced homology.
    pub fn is_cone(&self) -> bool {
        let apex = self
            .facets
            .iter()
            .fold(self.vertices.full(), |acc, f| acc.intersection(*f));
        !apex.is_empty()
    }

    /// Every face, grouped by cardinality and sorted numerically within each
    /// group. Fails once more than `budget` faces have been produced.
    pub fn faces_by_size(&self, budget: usize) -> Result<Vec<Vec<u64>>> {
        let mut seen: HashSet<u64> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s.bits()) && seen.len() > budget {
                    return Err(Error::cap("face count", budget, seen.len()));
                }
            }
        }
        let top = (self.dim() + 1) as usize;
        let mut by_size = vec![Vec::new(); top + 1];
        for s in seen {
            by_size[s.count_ones() as usize].push(s);
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        Ok(by_size)
    }

    /// Face counts indexed by cardinality (index 0 is the empty face).
    pub fn f_vector(&self, budget: usize) -> Result<Vec<usize>> {
        Ok(self.faces_by_size(budget)?.iter().map(Vec::len).collect())
    }

    /// `X[W]`: the faces contained in `w`, on vertex set `w`.
    pub fn induced(&self, w: Subset) -> Result<SimplicialComplex> {
        self.vertices.check_subset(w)?;
        let facets = self
            .facets
            .iter()
            .map(|f| f.intersection(w).compress(w))
            .collect();
        Ok(Self::from_facets_unchecked(self.vertices.restrict(w), facets))
    }

    /// `lk(S, X)` on vertex set `V - S`.
    pub fn link(&self, s: Subset) -> Result<SimplicialComplex> {
        self.vertices.check_subset(s)?;
        if !self.contains(s) {
            return Err(Error::NotAFace(self.vertices.labels_of(s)));
        }
        let rest = self.vertices.full().difference(s);
        let facets = self
            .facets
            .iter()
            .filter(|f| s.is_subset_of(**f))
            .map(|f| f.difference(s).compress(rest))
            .collect();
        Ok(Self::from_facets_unchecked(self.vertices.restrict(rest), facets))
    }

    /// `X * Y` on the disjoint union of the vertex sets (X's vertices first).
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if let Some(l) = other
            .vertices
            .labels()
            .iter()
            .find(|l| self.vertices.index_of(l).is_ok())
        {
            return Err(Error::OverlappingVertices(l.clone()));
        }
        let shift = self.vertices.len();
        let labels: Vec<String> = self
            .vertices
            .labels()
            .iter()
            .chain(other.vertices.labels())
            .cloned()
            .collect();
        let vertices = GroundSet::with_labels(labels)?;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(Subset::from_bits(f.bits() | (g.bits() << shift)));
            }
        }
        facets.sort();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// `X* = {T : V - T not in X}`. Requires `V` not to be a face.
    pub fn alexander_dual(&self, caps: &Caps) -> Result<SimplicialComplex> {
        let n = self.vertices.len();
        let full = self.vertices.full();
        if self.contains(full) {
            return Err(Error::VertexSetIsFace);
        }
        if n > caps.dual {
            return Err(Error::cap("Alexander dual", caps.dual, n));
        }
        let size = 1usize << n;
        let is_face: Vec<bool> = (0..size as u64)
            .map(|t| !self.contains(full.difference(Subset::from_bits(t))))
            .collect();
        let facets = (0..size as u64)
            .filter(|&t| {
                is_face[t as usize]
                    && full
                        .difference(Subset::from_bits(t))
                        .iter()
                        .all(|e| !is_face[(t | (1u64 << e)) as usize])
            })
            .map(Subset::from_bits)
            .collect();
        Ok(Self::from_facets_unchecked(self.vertices.clone(), facets))
    }

    /// Same complex with every vertex label passed through `rename`.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<SimplicialComplex> {
        let labels = self.vertices.labels().iter().map(|l| rename(l)).collect();
        Ok(SimplicialComplex {
            vertices: GroundSet::with_labels(labels)?,
            facets: self.facets.clone(),
        })
    }

    /// Complex of subsets containing no positive circuit of `om`.
    pub fn support_complex(om: &OrientedMatroid) -> SimplicialComplex {
        let n = om.ground().len();
        let circuits = om.positive_circuits();
        let through: Vec<Vec<Subset>> = (0..n)
            .map(|e| {
                circuits
                    .iter()
                    .filter(|c| c.contains(e))
                    .map(|c| c.without(e))
                    .collect()
            })
            .collect();
        let mut facets = Vec::new();
        avoiding_sets(n, 0, Subset::EMPTY, &through, &mut facets);
        facets.sort();
        SimplicialComplex {
            vertices: om.ground().clone(),
            facets,
        }
    }

    /// Complex of independent sets of `m`; its facets are the bases.
    pub fn independence_complex(m: &Matroid, caps: &Caps) -> Result<SimplicialComplex> {
        Ok(SimplicialComplex {
            vertices: m.ground().clone(),
            facets: m.bases(caps)?,
        })
    }
}

/// Maximal sets containing none of the circuits; `through[e]` holds `C - e`
/// for each circuit `C` through `e`.
///
/// Element `e` is either added (when that creates no circuit) or skipped; a
/// skipped element must end up blocked by the final set, which is checked
/// eagerly against the elements still undecided.
fn avoiding_sets(n: usize, e: usize, chosen: Subset, through: &[Vec<Subset>], out: &mut Vec<Subset>) {
    if e == n {
        let maximal = (0..n)
            .filter(|&x| !chosen.contains(x))
            .all(|x| through[x].iter().any(|c| c.is_subset_of(chosen)));
        if maximal {
            out.push(chosen);
        }
        return;
    }
    let blocked_now = through[e].iter().any(|c| c.is_subset_of(chosen));
    if !blocked_now {
        avoiding_sets(n, e + 1, chosen.with(e), through, out);
    }
    let open = chosen.union(Subset::full(n).difference(Subset::full(e + 1)));
    let can_block = through[e].iter().any(|c| c.is_subset_of(open));
    if can_block {
        avoiding_sets(n, e + 1, chosen, through, out);
    }
}

/// Inclusion-maximal members of `sets`, deduplicated and sorted; `{∅}` if none.
pub(crate) fn maximal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<Subset> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    if kept.is_empty() {
        kept.push(Subset::EMPTY);
    }
    kept.sort();
    kept
}
