//! Hypothesis check and witness search for the matroidal colorful
//! Carathéodory theorem, plus the topological proof scaffold used to
//! cross-check it on small instances.
//!
//! Given an oriented matroid `M` and a matroid `N` on the same ground set
//! `V` with `rk(M) < rk(N)`, if every `A ⊆ V` with `ρ(V - A) < rk(M)`
//! contains a positive circuit of `M`, then some positive circuit of `M` is
//! independent in `N`.

use rayon::prelude::*;

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::homology::{eta, Eta};
use crate::matroid::Matroid;
use crate::oriented::OrientedMatroid;
use crate::subset::Subset;

/// An oriented matroid and a matroid on the same ground set.
#[derive(Clone, Debug)]
pub struct Instance {
    om: OrientedMatroid,
    n: Matroid,
}

impl Instance {
    /// Checks that the ground sets agree and that `n` is loopless and
    /// passes validation. Loops in `om` are rejected at its construction.
    pub fn new(om: OrientedMatroid, n: Matroid, caps: &Caps) -> Result<Self> {
        if om.ground() != n.ground() {
            return Err(Error::Invalid(
                "oriented matroid and matroid have different ground sets".into(),
            ));
        }
        let report = n.validate(caps);
        if let Some(v) = report.violation {
            return Err(Error::AxiomViolation(v));
        }
        Ok(Instance { om, n })
    }

    pub fn ground(&self) -> &GroundSet {
        self.om.ground()
    }

    pub fn oriented_matroid(&self) -> &OrientedMatroid {
        &self.om
    }

    pub fn matroid(&self) -> &Matroid {
        &self.n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub rank_condition_ok: bool,
    pub hypothesis_ok: bool,
    /// A facet `A` of the support complex with `ρ(V - A) < rk(M)`.
    pub violating_set: Option<Subset>,
    pub positive_circuit_count: usize,
    pub om_rank: usize,
    pub matroid_rank: usize,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.rank_condition_ok && self.hypothesis_ok
    }
}

pub const SELECTION_RULE: &str =
    "lexicographically least positive circuit (ground-set order) independent in the matroid";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub circuit: Subset,
    pub independent_in_n: bool,
    pub selection_rule: &'static str,
    pub axiom_verified: bool,
}

/// Decides the rank condition and the covering hypothesis.
///
/// A set contains a positive circuit iff it is not a face of the support
/// complex, and `ρ(V - A)` only decreases as `A` grows, so it suffices to
/// test the facets. The lexicographically least violating facet is reported.
pub fn check_instance(inst: &Instance) -> HypothesisReport {
    let r = inst.om.rank();
    let full = inst.ground().full();
    let support = SimplicialComplex::support_complex(&inst.om);
    let violating_set = support
        .facets()
        .par_iter()
        .find_first(|f| inst.n.rank(full.difference(**f)) < r)
        .copied();
    HypothesisReport {
        rank_condition_ok: r < inst.n.full_rank(),
        hypothesis_ok: violating_set.is_none(),
        violating_set,
        positive_circuit_count: inst.om.positive_circuits().len(),
        om_rank: r,
        matroid_rank: inst.n.full_rank(),
    }
}

/// The lexicographically least positive circuit that is independent in the
/// matroid.
///
/// Callers are expected to have run [`check_instance`]; the search itself
/// does not need the hypothesis. When no circuit qualifies the hypothesis is
/// re-checked so that [`Error::NoWitness`] is only raised for instances that
/// satisfy it, where it signals unverified axioms or a bug.
pub fn find_witness(inst: &Instance) -> Result<WitnessCertificate> {
    let found = inst
        .om
        .positive_circuits()
        .par_iter()
        .find_first(|c| inst.n.is_independent(**c))
        .copied();
    if let Some(circuit) = found {
        return Ok(WitnessCertificate {
            circuit,
            independent_in_n: true,
            selection_rule: SELECTION_RULE,
            axiom_verified: inst.om.axioms_verified(),
        });
    }
    let report = check_instance(inst);
    if !report.rank_condition_ok {
        return Err(Error::HypothesisNotSatisfied(format!(
            "rank condition fails: rk(M) = {} is not below rk(N) = {}",
            report.om_rank, report.matroid_rank
        )));
    }
    if let Some(a) = report.violating_set {
        return Err(Error::HypothesisNotSatisfied(format!(
            "{:?} contains no positive circuit but its complement has rank below {}",
            inst.ground().labels_of(a),
            report.om_rank
        )));
    }
    Err(Error::NoWitness {
        dump: instance_dump(inst),
    })
}

fn instance_dump(inst: &Instance) -> String {
    let g = inst.ground();
    let circuits: Vec<String> = inst
        .om
        .circuits()
        .iter()
        .map(|c| format!("(+{:?} -{:?})", g.labels_of(c.positive()), g.labels_of(c.negative())))
        .collect();
    format!(
        "ground={:?}; axioms_verified={}; om_rank={}; circuits=[{}]; matroid={:?}",
        g.labels(),
        inst.om.axioms_verified(),
        inst.om.rank(),
        circuits.join(", "),
        inst.n.kind()
    )
}

/// `Z = X* ∗ Y'` with its color classes `V_i = {v_i, v_i'}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZComplex {
    pub z: SimplicialComplex,
    /// `(v_i, v_i')` as vertex indices of `z`.
    pub partition: Vec<(usize, usize)>,
}

impl ZComplex {
    /// Number of original ground elements.
    pub fn m(&self) -> usize {
        self.partition.len()
    }

    /// Vertices of `z` in the classes selected by `classes`.
    pub fn classes_union(&self, classes: Subset) -> Subset {
        classes
            .iter()
            .fold(Subset::EMPTY, |acc, i| {
                let (a, b) = self.partition[i];
                acc.with(a).with(b)
            })
    }
}

/// Label of the primed copy of `label` that avoids every label in `ground`.
fn primed(label: &str, ground: &GroundSet) -> String {
    let mut p = format!("{label}'");
    while ground.index_of(&p).is_ok() {
        p.push('\'');
    }
    p
}

/// Builds `Z` from the support complex `X` of `M` and the independence
/// complex `Y` of `N`.
pub fn build_z(inst: &Instance, caps: &Caps) -> Result<ZComplex> {
    if inst.om.positive_circuits().is_empty() {
        return Err(Error::NoPositiveCircuits);
    }
    let m = inst.ground().len();
    if 2 * m > crate::subset::MAX_ELEMENTS {
        return Err(Error::cap("Z vertex count", crate::subset::MAX_ELEMENTS, 2 * m));
    }
    let x = SimplicialComplex::support_complex(&inst.om);
    let dual = x.alexander_dual(caps)?;
    let y = SimplicialComplex::independence_complex(&inst.n, caps)?;
    let ground = inst.ground();
    let y_primed = y.relabel(|l| primed(l, ground))?;
    let z = dual.join(&y_primed)?;
    let partition = (0..m).map(|i| (i, m + i)).collect();
    Ok(ZComplex { z, partition })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshulamRow {
    /// Set of class indices `I`.
    pub classes: Subset,
    pub eta: Eta,
    pub size: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshulamReport {
    pub rows: Vec<MeshulamRow>,
}

impl MeshulamReport {
    pub fn failures(&self) -> impl Iterator<Item = &MeshulamRow> {
        self.rows.iter().filter(|r| !r.ok)
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

/// `η(Z[∪_{i∈I} V_i]) >= |I|` for every non-empty `I`.
pub fn meshulam_check(z: &ZComplex, caps: &Caps) -> Result<MeshulamReport> {
    let m = z.m();
    if m > caps.meshulam {
        return Err(Error::cap("Meshulam scan", caps.meshulam, m));
    }
    let all: Vec<Subset> = Subset::full(m).subsets().filter(|s| !s.is_empty()).collect();
    let mut rows = all
        .par_iter()
        .map(|&classes| {
            let induced = z.z.induced(z.classes_union(classes))?;
            let e = eta(&induced, caps)?;
            Ok(MeshulamRow {
                classes,
                eta: e,
                size: classes.len(),
                ok: e.at_least(classes.len()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.classes);
    Ok(MeshulamReport { rows })
}

/// A face of `z` meeting every class exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorfulSimplex {
    /// The face, as vertices of `z`.
    pub face: Subset,
    /// Ground elements picked from the unprimed side (`S`).
    pub unprimed: Subset,
    /// `T = V - S`, the ground elements picked from the primed side.
    pub complement: Subset,
}

/// The lexicographically least colorful face of `z`, if any.
pub fn colorful_bruteforce(z: &ZComplex, caps: &Caps) -> Result<Option<ColorfulSimplex>> {
    let m = z.m();
    if m > caps.colorful {
        return Err(Error::cap("colorful brute force", caps.colorful, m));
    }
    // bit i of `choice` set means class i contributes its second vertex
    let best = (0..1u64 << m)
        .into_par_iter()
        .map(|choice| {
            let face = z
                .partition
                .iter()
                .enumerate()
                .fold(Subset::EMPTY, |acc, (i, &(a, b))| {
                    acc.with(if choice >> i & 1 == 1 { b } else { a })
                });
            (face, choice)
        })
        .filter(|(face, _)| z.z.contains(*face))
        .min_by(|a, b| a.0.cmp(&b.0));
    Ok(best.map(|(face, choice)| {
        let primed = Subset::from_bits(choice);
        ColorfulSimplex {
            face,
            unprimed: Subset::full(m).difference(primed),
            complement: primed,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::Rational;

    fn om(labels: &[&str], cols: &[&[i64]]) -> OrientedMatroid {
        let g = GroundSet::new(labels.iter().copied()).unwrap();
        let cols: Vec<Vec<Rational>> = cols.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
        OrientedMatroid::from_rational_vectors(g, &cols, cols[0].len(), &Caps::default()).unwrap()
    }

    fn line_instance() -> Instance {
        let o = om(&["a", "b", "c", "d"], &[&[1], &[-1], &[1], &[-1]]);
        let g = o.ground().clone();
        let fam = vec![g.subset(["a", "c"]).unwrap(), g.subset(["b", "d"]).unwrap()];
        let n = Matroid::transversal(g, fam).unwrap();
        Instance::new(o, n, &Caps::default()).unwrap()
    }

    fn naive_hypothesis(inst: &Instance) -> bool {
        let full = inst.ground().full();
        full.subsets().all(|a| {
            inst.matroid().rank(full.difference(a)) >= inst.oriented_matroid().rank()
                || inst.oriented_matroid().contains_positive_circuit(a).is_some()
        })
    }

    #[test]
    fn line_instance_passes() {
        let inst = line_instance();
        let r = check_instance(&inst);
        assert!(r.rank_condition_ok && r.hypothesis_ok);
        assert_eq!(r.violating_set, None);
        assert_eq!(r.positive_circuit_count, 4);
        assert!(naive_hypothesis(&inst));
    }

    #[test]
    fn plane_instance_fails_at_abd() {
        let o = om(&["a", "b", "c", "d"], &[&[1, 0], &[0, 1], &[-1, -1], &[1, 1]]);
        let n = Matroid::uniform(o.ground().clone(), 3);
        let inst = Instance::new(o, n, &Caps::default()).unwrap();
        let r = check_instance(&inst);
        assert!(r.rank_condition_ok);
        assert!(!r.hypothesis_ok);
        assert_eq!(
            inst.ground().labels_of(r.violating_set.unwrap()),
            vec!["a", "b", "d"]
        );
        assert!(!naive_hypothesis(&inst));
    }

    #[test]
    fn no_positive_circuits_fails_on_whole_ground_set() {
        let o = om(&["a", "b", "c"], &[&[1, 0], &[0, 1], &[1, 1]]);
        let n = Matroid::uniform(o.ground().clone(), 3);
        let inst = Instance::new(o, n, &Caps::default()).unwrap();
        let r = check_instance(&inst);
        assert_eq!(r.violating_set, Some(Subset::full(3)));
        assert!(matches!(build_z(&inst, &Caps::default()), Err(Error::NoPositiveCircuits)));
    }

    #[test]
    fn witness_examples() {
        let inst = line_instance();
        let w = find_witness(&inst).unwrap();
        assert_eq!(inst.ground().labels_of(w.circuit), vec!["a", "b"]);
        assert!(w.independent_in_n && w.axiom_verified);

        let o = om(&["a", "b", "c"], &[&[1, 0], &[0, 1], &[-1, -1]]);
        let n = Matroid::uniform(o.ground().clone(), 3);
        let inst = Instance::new(o, n, &Caps::default()).unwrap();
        let w = find_witness(&inst).unwrap();
        assert_eq!(w.circuit, Subset::full(3));
        assert!(inst.matroid().is_independent(w.circuit));
        assert_eq!(inst.oriented_matroid().contains_positive_circuit(w.circuit), Some(w.circuit));
    }

    #[test]
    fn missing_witness_with_failed_hypothesis_is_not_a_bug() {
        let o = om(&["a", "b", "c"], &[&[1, 0], &[0, 1], &[1, 1]]);
        let n = Matroid::uniform(o.ground().clone(), 3);
        let inst = Instance::new(o, n, &Caps::default()).unwrap();
        assert!(matches!(find_witness(&inst), Err(Error::HypothesisNotSatisfied(_))));
    }

    #[test]
    fn z_for_the_triangle() {
        let o = om(&["a", "b", "c"], &[&[1, 0], &[0, 1], &[-1, -1]]);
        let n = Matroid::uniform(o.ground().clone(), 3);
        let inst = Instance::new(o, n, &Caps::default()).unwrap();
        let z = build_z(&inst, &Caps::default()).unwrap();
        assert_eq!(z.m(), 3);
        assert_eq!(z.z.vertices().labels(), &["a", "b", "c", "a'", "b'", "c'"]);
        // X* = {∅}, so Z is the full simplex on the primed copy
        assert_eq!(z.z.facets(), &[Subset::from_indices([3, 4, 5])]);
        let c = colorful_bruteforce(&z, &Caps::default()).unwrap().unwrap();
        assert_eq!(c.complement, Subset::full(3));
    }

    #[test]
    fn scaffold_on_line_instance() {
        let inst = line_instance();
        let caps = Caps::default();
        let z = build_z(&inst, &caps).unwrap();
        let report = meshulam_check(&z, &caps).unwrap();
        assert_eq!(report.rows.len(), 15);
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let c = colorful_bruteforce(&z, &caps).unwrap().expect("colorful simplex");
        assert!(inst.matroid().is_independent(c.complement));
        assert!(inst.oriented_matroid().contains_positive_circuit(c.complement).is_some());
    }

    #[test]
    fn colorful_on_full_simplex_and_missing_class() {
        let g = GroundSet::new(["a", "b", "a'", "b'"]).unwrap();
        let z = ZComplex {
            z: SimplicialComplex::full_simplex(g.clone()),
            partition: vec![(0, 2), (1, 3)],
        };
        let c = colorful_bruteforce(&z, &Caps::default()).unwrap().unwrap();
        assert_eq!(c.face, Subset::from_indices([0, 1]));

        // class 1 has no vertex that is a face
        let z = ZComplex {
            z: SimplicialComplex::from_facets(g, vec![Subset::from_indices([0, 2])]).unwrap(),
            partition: vec![(0, 2), (1, 3)],
        };
        assert_eq!(colorful_bruteforce(&z, &Caps::default()).unwrap(), None);
    }
}
