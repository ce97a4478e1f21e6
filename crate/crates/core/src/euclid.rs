//! Colorful Carathéodory for point sets in rational space.
//!
//! Color classes `P_1, ..., P_m` and a target `x` become an instance on the
//! tagged disjoint union of the classes: the oriented matroid of the vectors
//! `p - x` and the transversal matroid of the class family. A positive
//! circuit independent in the transversal matroid is a set of points, at
//! most one per class, whose convex hull contains `x`.

use num_traits::{One, Signed, Zero};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::linalg::{nullspace, rational_rank, solve, Rational};
use crate::matroid::Matroid;
use crate::oriented::OrientedMatroid;
use crate::subset::{k_subsets, Subset};
use crate::theorem::{check_instance, find_witness, Instance};

/// Largest supported dimension.
pub const MAX_DIM: usize = 6;

pub type Point = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    classes: Vec<Vec<Point>>,
    target: Point,
    exploratory: bool,
}

impl PointConfig {
    /// In theorem mode there must be exactly `dim + 1` classes; exploratory
    /// mode accepts any positive number.
    pub fn new(dim: usize, classes: Vec<Vec<Point>>, target: Point, exploratory: bool) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::Invalid(format!("dimension {dim} outside 1..={MAX_DIM}")));
        }
        if target.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: target.len(),
                context: "target".into(),
            });
        }
        if classes.is_empty() {
            return Err(Error::Invalid("no color classes".into()));
        }
        if !exploratory && classes.len() != dim + 1 {
            return Err(Error::Invalid(format!(
                "{} classes given; dimension {dim} needs {} (use exploratory mode otherwise)",
                classes.len(),
                dim + 1
            )));
        }
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Invalid(format!("class P{} is empty", i + 1)));
            }
            for (j, p) in class.iter().enumerate() {
                if p.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: p.len(),
                        context: format!("point {}", tag(i, j)),
                    });
                }
            }
        }
        let total: usize = classes.iter().map(Vec::len).sum();
        if total > crate::subset::MAX_ELEMENTS {
            return Err(Error::GroundTooLarge(total));
        }
        Ok(PointConfig {
            dim,
            classes,
            target,
            exploratory,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn classes(&self) -> &[Vec<Point>] {
        &self.classes
    }

    pub fn target(&self) -> &Point {
        &self.target
    }

    pub fn exploratory(&self) -> bool {
        self.exploratory
    }

    /// `(class, index)` of every point, class by class.
    pub fn tags(&self) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| (0..c.len()).map(move |j| (i, j)))
            .collect()
    }

    pub fn point(&self, (class, index): (usize, usize)) -> &Point {
        &self.classes[class][index]
    }

    /// Same configuration with every point and the target mapped by `f`.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<PointConfig> {
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().map(&f).collect())
            .collect();
        PointConfig::new(self.dim, classes, f(&self.target), self.exploratory)
    }
}

/// Ground-set label of point `j` of class `i` (both 1-based in the label).
pub fn tag(class: usize, index: usize) -> String {
    format!("P{}.{}", class + 1, index + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulCertificate {
    /// Chosen point index for each class.
    pub selection: Vec<usize>,
    /// Convex coefficient of each selected point.
    pub coefficients: Vec<Rational>,
    /// `(class, index)` of the positive circuit the selection grew from;
    /// for the shortcut it is the single point equal to the target.
    pub core_circuit: Vec<(usize, usize)>,
    pub exploratory: bool,
    pub shortcut: bool,
    pub axiom_verified: bool,
}

/// The reduced instance, with ground labels from [`tag`].
pub fn to_instance(cfg: &PointConfig, caps: &Caps) -> Result<Instance> {
    let tags = cfg.tags();
    if let Some(&t) = tags.iter().find(|&&t| cfg.point(t) == &cfg.target) {
        return Err(Error::Invalid(format!(
            "point {} equals the target; use the shortcut",
            tag(t.0, t.1)
        )));
    }
    let ground = GroundSet::new(tags.iter().map(|&(i, j)| tag(i, j)))?;
    let vectors: Vec<Vec<Rational>> = tags
        .iter()
        .map(|&t| sub(cfg.point(t), &cfg.target))
        .collect();
    let om = OrientedMatroid::from_rational_vectors(ground.clone(), &vectors, cfg.dim, caps)?;
    let mut family = vec![Subset::EMPTY; cfg.classes.len()];
    for (e, &(i, _)) in tags.iter().enumerate() {
        family[i] = family[i].with(e);
    }
    let n = Matroid::transversal(ground, family)?;
    Instance::new(om, n, caps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairwiseReport {
    pub ok: bool,
    /// First pair `(i, j)`, `i < j`, with `x` outside `conv(P_i ∪ P_j)`.
    pub failing_pair: Option<(usize, usize)>,
}

/// Whether `x ∈ conv(P_i ∪ P_j)` for every pair of classes.
pub fn check_pairwise_condition(cfg: &PointConfig) -> PairwiseReport {
    let m = cfg.classes.len();
    for i in 0..m {
        for j in i + 1..m {
            let pts: Vec<&Point> = cfg.classes[i].iter().chain(&cfg.classes[j]).collect();
            if convex_coefficients(&pts, &cfg.target).is_none() {
                return PairwiseReport {
                    ok: false,
                    failing_pair: Some((i, j)),
                };
            }
        }
    }
    PairwiseReport {
        ok: true,
        failing_pair: None,
    }
}

/// Convex coefficients expressing `x` from `points`, if `x` lies in their hull.
///
/// By Carathéodory it suffices to try affinely independent subsets of at
/// most `d + 1` points; on each the barycentric system has at most one
/// solution, which is accepted when nonnegative. Subsets are tried by size,
/// then in lexicographic order.
pub fn convex_coefficients(points: &[&Point], x: &Point) -> Option<Vec<Rational>> {
    let d = x.len();
    let n = points.len();
    for k in 1..=(d + 1).min(n) {
        let mut subsets: Vec<Subset> = k_subsets(n, k).collect();
        subsets.sort();
        for s in subsets {
            let idx: Vec<usize> = s.iter().collect();
            let mut rows: Vec<Vec<Rational>> = (0..d)
                .map(|r| idx.iter().map(|&i| points[i][r].clone()).collect())
                .collect();
            rows.push(vec![Rational::one(); k]);
            if rational_rank(&rows) < k {
                continue;
            }
            let mut rhs = x.clone();
            rhs.push(Rational::one());
            if let Some(lambda) = solve(&rows, &rhs) {
                if lambda.iter().all(|l| !l.is_negative()) {
                    let mut out = vec![Rational::zero(); n];
                    for (&i, l) in idx.iter().zip(lambda) {
                        out[i] = l;
                    }
                    return Some(out);
                }
            }
        }
    }
    None
}

/// Certificate for a configuration in which some point equals the target:
/// that point gets coefficient 1, every other class its first point with 0.
pub fn trivial_shortcut(cfg: &PointConfig) -> Option<ColorfulCertificate> {
    let hit = cfg.tags().into_iter().find(|&t| cfg.point(t) == &cfg.target)?;
    let m = cfg.classes.len();
    let mut selection = vec![0; m];
    let mut coefficients = vec![Rational::zero(); m];
    selection[hit.0] = hit.1;
    coefficients[hit.0] = Rational::one();
    Some(ColorfulCertificate {
        selection,
        coefficients,
        core_circuit: vec![hit],
        exploratory: cfg.exploratory,
        shortcut: true,
        axiom_verified: true,
    })
}

/// A colorful simplex containing the target, with exact convex coefficients.
pub fn solve_colorful(cfg: &PointConfig, caps: &Caps) -> Result<ColorfulCertificate> {
    if let Some(cert) = trivial_shortcut(cfg) {
        return Ok(cert);
    }
    if !cfg.exploratory {
        let pairwise = check_pairwise_condition(cfg);
        if let Some((i, j)) = pairwise.failing_pair {
            return Err(Error::PairwiseConditionFailed(i, j));
        }
    }
    let inst = to_instance(cfg, caps)?;
    let report = check_instance(&inst);
    if !report.passed() {
        let why = if !report.rank_condition_ok {
            format!(
                "rank condition fails: rk(M) = {}, rk(N) = {}",
                report.om_rank, report.matroid_rank
            )
        } else {
            let a = report.violating_set.unwrap_or_default();
            format!(
                "{:?} contains no positive circuit but its complement misses too many classes",
                inst.ground().labels_of(a)
            )
        };
        return Err(Error::HypothesisNotSatisfied(why));
    }
    let witness = find_witness(&inst)?;

    let tags = cfg.tags();
    let core: Vec<(usize, usize)> = witness.circuit.iter().map(|e| tags[e]).collect();
    let rows: Vec<Vec<Rational>> = (0..cfg.dim)
        .map(|r| {
            core.iter()
                .map(|&t| &cfg.point(t)[r] - &cfg.target[r])
                .collect()
        })
        .collect();
    let kernel = nullspace(&rows, core.len());
    let mut weights = kernel
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invalid("witness circuit has trivial kernel".into()))?;
    let total: Rational = weights.iter().sum();
    for w in &mut weights {
        *w /= &total;
    }

    let m = cfg.classes.len();
    let mut selection = vec![0; m];
    let mut coefficients = vec![Rational::zero(); m];
    let mut used = vec![false; m];
    for (&(class, index), w) in core.iter().zip(weights) {
        if used[class] {
            return Err(Error::Invalid(format!(
                "witness circuit uses class P{} twice",
                class + 1
            )));
        }
        used[class] = true;
        selection[class] = index;
        coefficients[class] = w;
    }
    let cert = ColorfulCertificate {
        selection,
        coefficients,
        core_circuit: core,
        exploratory: cfg.exploratory,
        shortcut: false,
        axiom_verified: witness.axiom_verified,
    };
    if !verify_certificate(cfg, &cert) {
        return Err(Error::Invalid("constructed certificate failed verification".into()));
    }
    Ok(cert)
}

/// Exact re-check: one point per class, `λ >= 0`, `Σλ = 1`, `Σ λ p = x`.
pub fn verify_certificate(cfg: &PointConfig, cert: &ColorfulCertificate) -> bool {
    let m = cfg.classes.len();
    if cert.selection.len() != m || cert.coefficients.len() != m {
        return false;
    }
    if cert
        .selection
        .iter()
        .zip(&cfg.classes)
        .any(|(&j, class)| j >= class.len())
    {
        return false;
    }
    if cert.coefficients.iter().any(Signed::is_negative) {
        return false;
    }
    if cert.coefficients.iter().sum::<Rational>() != Rational::one() {
        return false;
    }
    (0..cfg.dim).all(|r| {
        let s: Rational = cert
            .selection
            .iter()
            .enumerate()
            .zip(&cert.coefficients)
            .map(|((i, &j), l)| l * &cfg.classes[i][j][r])
            .sum();
        s == cfg.target[r]
    })
}

fn sub(p: &Point, x: &Point) -> Vec<Rational> {
    p.iter().zip(x).map(|(a, b)| a - b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn pt(c: &[i64]) -> Point {
        c.iter().map(|&x| rat(x)).collect()
    }

    fn cfg(dim: usize, classes: &[&[&[i64]]], target: &[i64]) -> PointConfig {
        let classes = classes
            .iter()
            .map(|c| c.iter().map(|p| pt(p)).collect())
            .collect();
        PointConfig::new(dim, classes, pt(target), false).unwrap()
    }

    fn two_segments() -> PointConfig {
        cfg(2, &[&[&[1, 0]], &[&[-1, 0]], &[&[0, 1], &[0, -1]]], &[0, 0])
    }

    #[test]
    fn instance_on_the_line() {
        let c = cfg(1, &[&[&[1]], &[&[-1]]], &[0]);
        let inst = to_instance(&c, &Caps::default()).unwrap();
        assert_eq!(inst.ground().len(), 2);
        assert_eq!(inst.oriented_matroid().positive_circuits(), &[Subset::full(2)]);
        assert_eq!(inst.matroid().full_rank(), 2);
    }

    #[test]
    fn triangle_classes_instance() {
        let tri: &[&[i64]] = &[&[1, 0], &[-1, 1], &[-1, -1]];
        let c = cfg(2, &[tri, tri, tri], &[0, 0]);
        let inst = to_instance(&c, &Caps::default()).unwrap();
        assert_eq!(inst.ground().len(), 9);
        assert_eq!(inst.oriented_matroid().rank(), 2);
        assert_eq!(inst.matroid().full_rank(), 3);
    }

    #[test]
    fn shared_points_become_parallel_elements() {
        let c = cfg(1, &[&[&[1]], &[&[1], &[-1]]], &[0]);
        let inst = to_instance(&c, &Caps::default()).unwrap();
        let om = inst.oriented_matroid();
        let pair = om
            .circuits()
            .iter()
            .find(|s| s.support() == Subset::from_indices([0, 1]))
            .expect("parallel pair is a circuit");
        assert!(!pair.is_positive());
    }

    #[test]
    fn pairwise_examples() {
        assert!(check_pairwise_condition(&two_segments()).ok);
        let c = cfg(2, &[&[&[1, 0], &[0, 1]], &[&[-1, 0]], &[&[0, -1]]], &[0, 0]);
        assert_eq!(check_pairwise_condition(&c).failing_pair, Some((1, 2)));
        let c = cfg(2, &[&[&[1, 0]], &[&[-1, 0]], &[&[0, -1]]], &[0, 0]);
        assert_eq!(check_pairwise_condition(&c).failing_pair, Some((0, 2)));
        let c = cfg(2, &[&[&[0, 0]], &[&[5, 5]], &[&[6, 5]]], &[0, 0]);
        let r = check_pairwise_condition(&c);
        assert_eq!(r.failing_pair, Some((1, 2)));
    }

    #[test]
    fn colorful_on_the_line() {
        let c = cfg(1, &[&[&[1]], &[&[-1]]], &[0]);
        let cert = solve_colorful(&c, &Caps::default()).unwrap();
        assert_eq!(cert.selection, vec![0, 0]);
        assert_eq!(cert.coefficients, vec![ratio(1, 2), ratio(1, 2)]);
        assert!(verify_certificate(&c, &cert));
    }

    #[test]
    fn colorful_with_zero_extension() {
        let c = two_segments();
        let cert = solve_colorful(&c, &Caps::default()).unwrap();
        assert_eq!(cert.core_circuit, vec![(0, 0), (1, 0)]);
        assert_eq!(cert.selection, vec![0, 0, 0]);
        assert_eq!(cert.coefficients, vec![ratio(1, 2), ratio(1, 2), rat(0)]);
        assert!(!cert.shortcut);
    }

    #[test]
    fn colorful_on_equal_triangles() {
        let tri: &[&[i64]] = &[&[1, 0], &[-1, 1], &[-1, -1]];
        let c = cfg(2, &[tri, tri, tri], &[0, 0]);
        let cert = solve_colorful(&c, &Caps::default()).unwrap();
        let mut picked = cert.selection.clone();
        picked.sort();
        assert_eq!(picked, vec![0, 1, 2]);
        // barycentric coordinates of the origin in this triangle
        let expect = |j: usize| match j {
            0 => ratio(1, 2),
            _ => ratio(1, 4),
        };
        for (class, &j) in cert.selection.iter().enumerate() {
            assert_eq!(cert.coefficients[class], expect(j));
        }
    }

    #[test]
    fn pairwise_failure_is_an_error() {
        let c = cfg(2, &[&[&[1, 0], &[0, 1]], &[&[-1, 0]], &[&[0, -1]]], &[0, 0]);
        assert_eq!(solve_colorful(&c, &Caps::default()), Err(Error::PairwiseConditionFailed(1, 2)));
    }

    #[test]
    fn shortcut_examples() {
        let c = cfg(1, &[&[&[3], &[0]], &[&[0]]], &[0]);
        let cert = trivial_shortcut(&c).unwrap();
        assert_eq!(cert.selection, vec![1, 0]);
        assert_eq!(cert.coefficients, vec![rat(1), rat(0)]);
        assert!(verify_certificate(&c, &cert));
        assert!(trivial_shortcut(&two_segments()).is_none());
        assert_eq!(solve_colorful(&c, &Caps::default()).unwrap(), cert);
    }

    #[test]
    fn verification_rejects_tampering() {
        let c = two_segments();
        let cert = solve_colorful(&c, &Caps::default()).unwrap();
        let mut bad = cert.clone();
        bad.coefficients[0] += ratio(1, 1000);
        assert!(!verify_certificate(&c, &bad));
        let mut bad = cert.clone();
        bad.selection[2] = 5;
        assert!(!verify_certificate(&c, &bad));
        let mut bad = cert;
        bad.coefficients.pop();
        assert!(!verify_certificate(&c, &bad));
    }

    #[test]
    fn config_validation() {
        let e = PointConfig::new(2, vec![vec![pt(&[1, 0])], vec![]], pt(&[0, 0]), true);
        assert!(matches!(e, Err(Error::Invalid(_))));
        let e = PointConfig::new(2, vec![vec![pt(&[1, 0])]; 2], pt(&[0, 0]), false);
        assert!(matches!(e, Err(Error::Invalid(_))));
        let e = PointConfig::new(2, vec![vec![pt(&[1])]; 3], pt(&[0, 0]), false);
        assert!(matches!(e, Err(Error::DimensionMismatch { .. })));
        assert!(PointConfig::new(7, vec![vec![pt(&[0; 7])]; 8], pt(&[0; 7]), false).is_err());
    }

    #[test]
    fn exploratory_mode_with_two_classes_in_the_plane() {
        // collinear points: rk(M) = 1 < 2 = number of classes
        let classes = vec![vec![pt(&[2, 0]), pt(&[1, 0])], vec![pt(&[-1, 0])]];
        let c = PointConfig::new(2, classes, pt(&[0, 0]), true).unwrap();
        let cert = solve_colorful(&c, &Caps::default()).unwrap();
        assert!(cert.exploratory);
        assert!(verify_certificate(&c, &cert));

        // spanning the plane with two classes violates the rank condition
        let classes = vec![vec![pt(&[1, 1]), pt(&[-1, 0])], vec![pt(&[-1, -1]), pt(&[2, 0])]];
        let c = PointConfig::new(2, classes, pt(&[0, 0]), true).unwrap();
        assert!(matches!(solve_colorful(&c, &Caps::default()), Err(Error::HypothesisNotSatisfied(_))));
    }
}
