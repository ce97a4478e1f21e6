//! Oriented matroids carried by their signed circuits.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::linalg::{column_rank, nullspace, primitive_integer, sign, Rational};
use crate::matroid::minimal_dependent_sets;
use crate::subset::Subset;

/// A pair of disjoint subsets `(positive, negative)`, not both empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    positive: Subset,
    negative: Subset,
}

impl SignedSet {
    pub fn new(positive: Subset, negative: Subset) -> Result<Self> {
        if !positive.is_disjoint(negative) {
            return Err(Error::Invalid(format!(
                "signed set has {:?} in both parts",
                positive.intersection(negative)
            )));
        }
        if positive.is_empty() && negative.is_empty() {
            return Err(Error::Invalid("signed set is empty".into()));
        }
        Ok(SignedSet { positive, negative })
    }

    pub fn positive(&self) -> Subset {
        self.positive
    }

    pub fn negative(&self) -> Subset {
        self.negative
    }

    pub fn support(&self) -> Subset {
        self.positive.union(self.negative)
    }

    pub fn negate(&self) -> SignedSet {
        SignedSet {
            positive: self.negative,
            negative: self.positive,
        }
    }

    /// The orientation (of `self` or its negation) whose least support
    /// element is positive.
    pub fn canonical(&self) -> SignedSet {
        let least = self.support().first().expect("non-empty");
        if self.positive.contains(least) {
            *self
        } else {
            self.negate()
        }
    }

    /// True when one of the two orientations has an empty negative part.
    pub fn is_positive(&self) -> bool {
        self.positive.is_empty() || self.negative.is_empty()
    }

    fn flip(&self, e: usize) -> SignedSet {
        if self.positive.contains(e) {
            SignedSet {
                positive: self.positive.without(e),
                negative: self.negative.with(e),
            }
        } else if self.negative.contains(e) {
            SignedSet {
                positive: self.positive.with(e),
                negative: self.negative.without(e),
            }
        } else {
            *self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMatroid {
    ground: GroundSet,
    /// Canonical representatives sorted by support.
    circuits: Vec<SignedSet>,
    positive: Vec<Subset>,
    rank: usize,
    axioms_verified: bool,
}

impl OrientedMatroid {
    /// The oriented matroid of a vector configuration, one column per
    /// ground element.
    pub fn from_rational_vectors(
        ground: GroundSet,
        columns: &[Vec<Rational>],
        dim: usize,
        caps: &Caps,
    ) -> Result<Self> {
        if columns.len() != ground.len() {
            return Err(Error::DimensionMismatch {
                expected: ground.len(),
                found: columns.len(),
                context: "number of vectors".into(),
            });
        }
        for (i, c) in columns.iter().enumerate() {
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                    context: format!("vector `{}`", ground.label(i)),
                });
            }
            if c.iter().all(Zero::is_zero) {
                return Err(Error::Loop(ground.label(i).to_string()));
            }
        }
        let n = ground.len();
        if n > caps.enumeration {
            return Err(Error::cap("circuit enumeration", caps.enumeration, n));
        }

        let ints: Vec<Vec<BigInt>> = columns.iter().map(|c| primitive_integer(c)).collect();
        let cols = |s: Subset| -> Vec<&[BigInt]> { s.iter().map(|i| ints[i].as_slice()).collect() };
        let rank = column_rank(&cols(ground.full()));
        let supports = minimal_dependent_sets(n, rank, |s| column_rank(&cols(s)) == s.len());

        let mut circuits: Vec<SignedSet> = supports
            .into_iter()
            .map(|s| circuit_signs(&ints, s, dim))
            .collect();
        circuits.sort_by_key(|c| c.support());
        Ok(Self::assemble(ground, circuits, rank, true))
    }

    /// An oriented matroid from an explicit list of signed circuits.
    ///
    /// Either orientation of each circuit may be given. The elimination
    /// axiom is checked exhaustively only up to `caps.signed_validation`
    /// elements; larger inputs are accepted with `axioms_verified == false`.
    pub fn from_signed_circuits(
        ground: GroundSet,
        circuits: Vec<SignedSet>,
        caps: &Caps,
    ) -> Result<Self> {
        for c in &circuits {
            ground.check_subset(c.support())?;
            if c.support().len() == 1 {
                let e = c.support().first().unwrap();
                return Err(Error::Loop(ground.label(e).to_string()));
            }
        }
        let mut canon: Vec<SignedSet> = circuits.iter().map(SignedSet::canonical).collect();
        canon.sort_by(|a, b| a.support().cmp(&b.support()).then(a.cmp(b)));
        canon.dedup();
        for w in canon.windows(2) {
            if w[0].support() == w[1].support() {
                return Err(Error::AxiomViolation(format!(
                    "two sign patterns on support {:?}",
                    ground.labels_of(w[0].support())
                )));
            }
        }
        for a in &canon {
            for b in &canon {
                if a != b && a.support().is_subset_of(b.support()) {
                    return Err(Error::AxiomViolation(format!(
                        "support {:?} is contained in support {:?}",
                        ground.labels_of(a.support()),
                        ground.labels_of(b.support())
                    )));
                }
            }
        }
        let verified = ground.len() <= caps.signed_validation;
        if verified {
            check_elimination(&ground, &canon)?;
        }

        // greedy basis of the underlying matroid
        let mut basis = Subset::EMPTY;
        for e in 0..ground.len() {
            let cand = basis.with(e);
            if !canon.iter().any(|c| c.support().is_subset_of(cand)) {
                basis = cand;
            }
        }
        Ok(Self::assemble(ground, canon, basis.len(), verified))
    }

    fn assemble(
        ground: GroundSet,
        circuits: Vec<SignedSet>,
        rank: usize,
        axioms_verified: bool,
    ) -> Self {
        let mut positive: Vec<Subset> = circuits
            .iter()
            .filter(|c| c.is_positive())
            .map(SignedSet::support)
            .collect();
        positive.sort();
        OrientedMatroid {
            ground,
            circuits,
            positive,
            rank,
            axioms_verified,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn circuits(&self) -> &[SignedSet] {
        &self.circuits
    }

    /// Rank of the underlying matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn axioms_verified(&self) -> bool {
        self.axioms_verified
    }

    /// Supports of the positive circuits, sorted lexicographically.
    pub fn positive_circuits(&self) -> &[Subset] {
        &self.positive
    }

    /// The lexicographically least positive circuit inside `a`, if any.
    pub fn contains_positive_circuit(&self, a: Subset) -> Option<Subset> {
        self.positive.iter().copied().find(|c| c.is_subset_of(a))
    }

    pub fn contains_positive_circuit_labels<I, S>(&self, labels: I) -> Result<Option<Vec<String>>>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let a = self.ground.subset(labels)?;
        Ok(self
            .contains_positive_circuit(a)
            .map(|c| self.ground.labels_of(c)))
    }

    /// Reorientation on `e`: every circuit through `e` has the sign of `e` flipped.
    pub fn reorient(&self, e: usize) -> OrientedMatroid {
        let mut circuits: Vec<SignedSet> = self
            .circuits
            .iter()
            .map(|c| c.flip(e).canonical())
            .collect();
        circuits.sort_by_key(|c| c.support());
        Self::assemble(self.ground.clone(), circuits, self.rank, self.axioms_verified)
    }
}

/// Signed circuit on support `s`: the sign pattern of the one-dimensional
/// kernel of the columns in `s`.
fn circuit_signs(ints: &[Vec<BigInt>], s: Subset, dim: usize) -> SignedSet {
    let idx: Vec<usize> = s.iter().collect();
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| {
            idx.iter()
                .map(|&i| BigRational::from_integer(ints[i][r].clone()))
                .collect()
        })
        .collect();
    let kernel = nullspace(&rows, idx.len());
    debug_assert_eq!(kernel.len(), 1, "circuit kernel must be one-dimensional");
    let v = &kernel[0];
    let mut pos = Subset::EMPTY;
    let mut neg = Subset::EMPTY;
    for (k, &i) in idx.iter().enumerate() {
        match sign(&v[k]) {
            1 => pos = pos.with(i),
            -1 => neg = neg.with(i),
            _ => unreachable!("circuit kernel vector has full support"),
        }
    }
    SignedSet::new(pos, neg).expect("non-empty").canonical()
}

fn check_elimination(ground: &GroundSet, canon: &[SignedSet]) -> Result<()> {
    let all: Vec<SignedSet> = canon
        .iter()
        .flat_map(|c| [*c, c.negate()])
        .collect();
    for x in &all {
        for y in &all {
            if *x == y.negate() {
                continue;
            }
            for e in x.positive.intersection(y.negative).iter() {
                let pos = x.positive.union(y.positive).without(e);
                let neg = x.negative.union(y.negative).without(e);
                let found = all
                    .iter()
                    .any(|z| z.positive.is_subset_of(pos) && z.negative.is_subset_of(neg));
                if !found {
                    return Err(Error::AxiomViolation(format!(
                        "circuit elimination fails for {} and {} at `{}`",
                        show(ground, x),
                        show(ground, y),
                        ground.label(e)
                    )));
                }
            }
        }
    }
    Ok(())
}

fn show(ground: &GroundSet, c: &SignedSet) -> String {
    format!(
        "(+{:?}, -{:?})",
        ground.labels_of(c.positive),
        ground.labels_of(c.negative)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn config(cols: &[&[i64]]) -> OrientedMatroid {
        let g = GroundSet::numbered(cols.len()).unwrap();
        let dim = cols[0].len();
        let cols: Vec<Vec<Rational>> = cols.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
        OrientedMatroid::from_rational_vectors(g, &cols, dim, &Caps::default()).unwrap()
    }

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().map(|i| i - 1))
    }

    #[test]
    fn triangle_configuration() {
        let om = config(&[&[1, 0], &[0, 1], &[-1, -1]]);
        assert_eq!(om.rank(), 2);
        assert_eq!(om.circuits().len(), 1);
        assert_eq!(om.circuits()[0].positive(), s(&[1, 2, 3]));
        assert_eq!(om.positive_circuits(), &[s(&[1, 2, 3])]);
        assert_eq!(om.contains_positive_circuit(s(&[1, 2])), None);
        assert_eq!(om.contains_positive_circuit(s(&[1, 2, 3])), Some(s(&[1, 2, 3])));
    }

    #[test]
    fn opposite_pair_in_dimension_one() {
        let om = config(&[&[1], &[-1]]);
        assert_eq!(om.rank(), 1);
        assert_eq!(om.circuits().len(), 1);
        assert_eq!(om.circuits()[0].positive(), s(&[1, 2]));
    }

    #[test]
    fn four_vectors_in_the_plane() {
        let om = config(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]);
        let supports: Vec<Subset> = om.circuits().iter().map(SignedSet::support).collect();
        assert_eq!(supports, vec![s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[3, 4])]);
        let c124 = om.circuits()[1];
        assert_eq!((c124.positive(), c124.negative()), (s(&[1, 2]), s(&[4])));
        assert!(om.positive_circuits().contains(&s(&[3, 4])));
        assert!(!om.positive_circuits().contains(&s(&[1, 2, 4])));
    }

    #[test]
    fn positive_circuit_lists() {
        assert!(config(&[&[1, 0], &[0, 1], &[1, 1]]).positive_circuits().is_empty());
        let om = config(&[&[1], &[-1], &[1], &[-1]]);
        assert_eq!(
            om.positive_circuits(),
            &[s(&[1, 2]), s(&[1, 4]), s(&[2, 3]), s(&[3, 4])]
        );
        assert_eq!(om.contains_positive_circuit(s(&[2, 3])), Some(s(&[2, 3])));
    }

    #[test]
    fn zero_column_is_a_loop() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let cols = vec![vec![rat(1)], vec![rat(0)]];
        assert_eq!(
            OrientedMatroid::from_rational_vectors(g, &cols, 1, &Caps::default()),
            Err(Error::Loop("b".into()))
        );
    }

    #[test]
    fn signed_circuit_round_trip() {
        let om = config(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]);
        let back = OrientedMatroid::from_signed_circuits(
            om.ground().clone(),
            om.circuits().iter().map(SignedSet::negate).collect(),
            &Caps::default(),
        )
        .unwrap();
        assert_eq!(back, om);
    }

    #[test]
    fn single_circuit_input() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let c = SignedSet::new(g.subset(["a", "b"]).unwrap(), Subset::EMPTY).unwrap();
        let om = OrientedMatroid::from_signed_circuits(g, vec![c], &Caps::default()).unwrap();
        assert_eq!(om.rank(), 2);
        assert!(om.axioms_verified());
    }

    #[test]
    fn loop_in_signed_input() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let ab = SignedSet::new(g.subset(["a", "b"]).unwrap(), Subset::EMPTY).unwrap();
        let a = SignedSet::new(g.subset(["a"]).unwrap(), Subset::EMPTY).unwrap();
        assert_eq!(
            OrientedMatroid::from_signed_circuits(g, vec![ab, a], &Caps::default()),
            Err(Error::Loop("a".into()))
        );
    }

    #[test]
    fn elimination_violation_is_reported() {
        // circuits {+a,-b} and {+b,-c} without anything eliminating b
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let x = SignedSet::new(g.subset(["a"]).unwrap(), g.subset(["b"]).unwrap()).unwrap();
        let y = SignedSet::new(g.subset(["b"]).unwrap(), g.subset(["c"]).unwrap()).unwrap();
        let err = OrientedMatroid::from_signed_circuits(g, vec![x, y], &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
    }

    #[test]
    fn large_signed_input_is_unverified() {
        let g = GroundSet::numbered(11).unwrap();
        let c = SignedSet::new(Subset::from_indices([0, 1]), Subset::EMPTY).unwrap();
        let om = OrientedMatroid::from_signed_circuits(g, vec![c], &Caps::default()).unwrap();
        assert!(!om.axioms_verified());
    }

    #[test]
    fn reorientation_matches_negated_column() {
        let om = config(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]);
        let flipped = config(&[&[1, 0], &[0, 1], &[1, 1], &[1, 1]]);
        assert_eq!(om.reorient(2), flipped);
    }
}
