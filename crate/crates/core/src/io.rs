//! JSON documents for instances, point configurations, complexes and
//! certificates.
//!
//! Rationals are always strings (`"p/q"` or `"p"`), never JSON numbers, and
//! are written in lowest terms with a positive denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{DeserializeOwned, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::euclid::{tag, ColorfulCertificate, PointConfig};
use crate::ground::GroundSet;
use crate::homology::Eta;
use crate::linalg::Rational;
use crate::matroid::{Matroid, MatroidKind};
use crate::oriented::{OrientedMatroid, SignedSet};
use crate::theorem::{HypothesisReport, Instance, MeshulamReport, WitnessCertificate};

pub const TOOL_VERSION: &str = concat!("colorcar ", env!("CARGO_PKG_VERSION"));

/// Exact rational that serializes as a string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(pub Rational);

impl From<Rational> for Rat {
    fn from(r: Rational) -> Self {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational is kept reduced with a positive denominator
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        fn integer(t: &str, signed: bool) -> Option<BigInt> {
            let digits = if signed {
                t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t)
            } else {
                t
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            t.parse().ok()
        }
        let bad = || format!("invalid rational {s:?}: expected \"p/q\" or \"p\"");
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (integer(p, true).ok_or_else(bad)?, integer(q, false).ok_or_else(bad)?),
            None => (integer(s, true).ok_or_else(bad)?, BigInt::one()),
        };
        if q.is_zero() {
            return Err(format!("invalid rational {s:?}: zero denominator"));
        }
        Ok(Rat(Rational::new(p, q)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RatVisitor;
        impl Visitor<'_> for RatVisitor {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a string \"p/q\" or \"p\"")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
                v.parse().map_err(E::custom)
            }
        }
        deserializer.deserialize_str(RatVisitor)
    }
}

fn rats(v: &[Rational]) -> Vec<Rat> {
    v.iter().cloned().map(Rat).collect()
}

fn unrat(v: &[Rat]) -> Vec<Rational> {
    v.iter().map(|r| r.0.clone()).collect()
}

/// Marks an error whose path continues below the point where it surfaced.
const NESTED: &str = "\u{0}at `";

fn inner_path(p: &serde_path_to_error::Path) -> String {
    match p.to_string().as_str() {
        "." => String::new(),
        s if s.starts_with('[') => s.to_owned(),
        s => format!(".{s}"),
    }
}

/// Parses a document, reporting the JSON path and line/column on failure.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let msg = e.into_inner().to_string();
        match msg.strip_prefix(NESTED) {
            Some(rest) => Error::Parse(format!("at `{path}.{rest}")),
            None => Error::Parse(format!("at `{path}`: {msg}")),
        }
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedCircuitDoc {
    #[serde(default)]
    pub positive: Vec<String>,
    #[serde(default)]
    pub negative: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "payload", rename_all = "snake_case")]
pub enum OrientedMatroidSpec {
    /// One column per ground element, in ground-set order.
    Vectors(Vec<Vec<Rat>>),
    SignedCircuits(Vec<SignedCircuitDoc>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "payload", rename_all = "snake_case")]
pub enum MatroidSpec {
    Uniform { rank: usize },
    /// One column per ground element, in ground-set order.
    Linear(Vec<Vec<Rat>>),
    /// One edge per ground element, in ground-set order.
    Graphic(Vec<(String, String)>),
    Transversal(Vec<Vec<String>>),
    ExplicitBases(Vec<Vec<String>>),
}

/// `{"type": ..., "payload": ...}` objects. Deserialized by hand so that the
/// payload is streamed, not buffered, when `type` comes first; error paths
/// then reach into the payload.
trait Tagged: Sized {
    const WHAT: &'static str;
    const VARIANTS: &'static [&'static str];
    fn payload<'de, D: Deserializer<'de>>(tag: &str, d: D) -> std::result::Result<Self, D::Error>;
}

impl Tagged for OrientedMatroidSpec {
    const WHAT: &'static str = "an oriented matroid";
    const VARIANTS: &'static [&'static str] = &["vectors", "signed_circuits"];
    fn payload<'de, D: Deserializer<'de>>(tag: &str, d: D) -> std::result::Result<Self, D::Error> {
        match tag {
            "vectors" => Deserialize::deserialize(d).map(OrientedMatroidSpec::Vectors),
            "signed_circuits" => Deserialize::deserialize(d).map(OrientedMatroidSpec::SignedCircuits),
            _ => Err(serde::de::Error::unknown_variant(tag, Self::VARIANTS)),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct UniformPayload {
    rank: usize,
}

impl Tagged for MatroidSpec {
    const WHAT: &'static str = "a matroid";
    const VARIANTS: &'static [&'static str] = &["uniform", "linear", "graphic", "transversal", "explicit_bases"];
    fn payload<'de, D: Deserializer<'de>>(tag: &str, d: D) -> std::result::Result<Self, D::Error> {
        match tag {
            "uniform" => UniformPayload::deserialize(d).map(|u| MatroidSpec::Uniform { rank: u.rank }),
            "linear" => Deserialize::deserialize(d).map(MatroidSpec::Linear),
            "graphic" => Deserialize::deserialize(d).map(MatroidSpec::Graphic),
            "transversal" => Deserialize::deserialize(d).map(MatroidSpec::Transversal),
            "explicit_bases" => Deserialize::deserialize(d).map(MatroidSpec::ExplicitBases),
            _ => Err(serde::de::Error::unknown_variant(tag, Self::VARIANTS)),
        }
    }
}

struct PayloadSeed<'a, T>(&'a str, std::marker::PhantomData<T>);

impl<'de, T: Tagged> serde::de::DeserializeSeed<'de> for PayloadSeed<'_, T> {
    type Value = T;
    fn deserialize<D: Deserializer<'de>>(self, d: D) -> std::result::Result<T, D::Error> {
        T::payload(self.0, d)
    }
}

struct TaggedVisitor<T>(std::marker::PhantomData<T>);

impl<'de, T: Tagged> Visitor<'de> for TaggedVisitor<T> {
    type Value = T;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} as {{\"type\": ..., \"payload\": ...}}", T::WHAT)
    }

    fn visit_map<A: serde::de::MapAccess<'de>>(self, mut map: A) -> std::result::Result<T, A::Error> {
        use serde::de::Error as _;
        let mut tag: Option<String> = None;
        let mut buffered: Option<serde_json::Value> = None;
        let mut value: Option<T> = None;
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "type" if tag.is_some() => return Err(A::Error::duplicate_field("type")),
                "type" => {
                    let t: String = map.next_value()?;
                    if !T::VARIANTS.contains(&t.as_str()) {
                        return Err(A::Error::unknown_variant(&t, T::VARIANTS));
                    }
                    tag = Some(t);
                }
                "payload" if value.is_some() || buffered.is_some() => {
                    return Err(A::Error::duplicate_field("payload"))
                }
                "payload" => match &tag {
                    Some(t) => value = Some(map.next_value_seed(PayloadSeed(t, std::marker::PhantomData))?),
                    None => buffered = Some(map.next_value()?),
                },
                other => return Err(A::Error::unknown_field(other, &["type", "payload"])),
            }
        }
        let tag = tag.ok_or_else(|| A::Error::missing_field("type"))?;
        match (value, buffered) {
            (Some(v), _) => Ok(v),
            (None, Some(b)) => {
                let mut track = serde_path_to_error::Track::new();
                T::payload(&tag, serde_path_to_error::Deserializer::new(b, &mut track))
                    .map_err(|e| A::Error::custom(format!("{NESTED}payload{}`: {e}", inner_path(&track.path()))))
            }
            (None, None) => Err(A::Error::missing_field("payload")),
        }
    }
}

impl<'de> Deserialize<'de> for OrientedMatroidSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_map(TaggedVisitor(std::marker::PhantomData))
    }
}

impl<'de> Deserialize<'de> for MatroidSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_map(TaggedVisitor(std::marker::PhantomData))
    }
}

impl OrientedMatroidSpec {
    pub fn build(&self, ground: &GroundSet, caps: &Caps) -> Result<OrientedMatroid> {
        match self {
            OrientedMatroidSpec::Vectors(cols) => {
                let cols = columns(ground, cols, "oriented matroid vectors")?;
                let dim = cols[0].len();
                OrientedMatroid::from_rational_vectors(ground.clone(), &cols, dim, caps)
            }
            OrientedMatroidSpec::SignedCircuits(list) => {
                let circuits = list
                    .iter()
                    .map(|c| SignedSet::new(ground.subset(&c.positive)?, ground.subset(&c.negative)?))
                    .collect::<Result<Vec<_>>>()?;
                OrientedMatroid::from_signed_circuits(ground.clone(), circuits, caps)
            }
        }
    }

    /// Vector payload for `cols`.
    pub fn vectors(cols: &[Vec<Rational>]) -> Self {
        OrientedMatroidSpec::Vectors(cols.iter().map(|c| rats(c)).collect())
    }

    /// Signed-circuit payload listing each circuit of `om` once.
    pub fn signed_circuits(om: &OrientedMatroid) -> Self {
        let g = om.ground();
        OrientedMatroidSpec::SignedCircuits(
            om.circuits()
                .iter()
                .map(|c| SignedCircuitDoc {
                    positive: g.labels_of(c.positive()),
                    negative: g.labels_of(c.negative()),
                })
                .collect(),
        )
    }
}

fn columns(ground: &GroundSet, cols: &[Vec<Rat>], context: &str) -> Result<Vec<Vec<Rational>>> {
    if cols.len() != ground.len() {
        return Err(Error::DimensionMismatch {
            expected: ground.len(),
            found: cols.len(),
            context: format!("{context}: one column per ground element"),
        });
    }
    let dim = cols[0].len();
    if let Some(c) = cols.iter().find(|c| c.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: c.len(),
            context: format!("{context}: column length"),
        });
    }
    Ok(cols.iter().map(|c| unrat(c)).collect())
}

impl MatroidSpec {
    pub fn build(&self, ground: &GroundSet) -> Result<Matroid> {
        let sets = |list: &[Vec<String>]| list.iter().map(|s| ground.subset(s)).collect::<Result<Vec<_>>>();
        match self {
            MatroidSpec::Uniform { rank } => Ok(Matroid::uniform(ground.clone(), *rank)),
            MatroidSpec::Linear(cols) => Matroid::linear(ground.clone(), columns(ground, cols, "linear matroid")?),
            MatroidSpec::Graphic(edges) => Matroid::graphic(ground.clone(), edges.clone()),
            MatroidSpec::Transversal(family) => Matroid::transversal(ground.clone(), sets(family)?),
            MatroidSpec::ExplicitBases(bases) => Matroid::explicit(ground.clone(), sets(bases)?),
        }
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        let g = m.ground();
        match m.kind() {
            MatroidKind::Uniform { rank } => MatroidSpec::Uniform { rank: *rank },
            MatroidKind::Linear { columns } => MatroidSpec::Linear(columns.iter().map(|c| rats(c)).collect()),
            MatroidKind::Graphic { edges } => MatroidSpec::Graphic(edges.clone()),
            MatroidKind::Transversal { family } => {
                MatroidSpec::Transversal(family.iter().map(|s| g.labels_of(*s)).collect())
            }
            MatroidKind::Explicit { bases } => {
                MatroidSpec::ExplicitBases(bases.iter().map(|s| g.labels_of(*s)).collect())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub ground_set: Vec<String>,
    pub oriented_matroid: OrientedMatroidSpec,
    pub matroid: MatroidSpec,
}

impl InstanceDocument {
    pub fn build(&self, caps: &Caps) -> Result<Instance> {
        let ground = GroundSet::new(&self.ground_set)?;
        let om = self.oriented_matroid.build(&ground, caps)?;
        let n = self.matroid.build(&ground)?;
        Instance::new(om, n, caps)
    }
}

/// The `ground_set` and `oriented_matroid` fields of an instance document;
/// other fields are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedMatroidDocument {
    pub ground_set: Vec<String>,
    pub oriented_matroid: OrientedMatroidSpec,
}

impl OrientedMatroidDocument {
    pub fn build(&self, caps: &Caps) -> Result<OrientedMatroid> {
        self.oriented_matroid.build(&GroundSet::new(&self.ground_set)?, caps)
    }
}

/// The `ground_set` and `matroid` fields of an instance document; other
/// fields are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidDocument {
    pub ground_set: Vec<String>,
    pub matroid: MatroidSpec,
}

impl MatroidDocument {
    /// Builds the matroid and rejects it if validation fails.
    pub fn build(&self, caps: &Caps) -> Result<Matroid> {
        let m = self.matroid.build(&GroundSet::new(&self.ground_set)?)?;
        match m.validate(caps).violation {
            Some(v) => Err(Error::AxiomViolation(v)),
            None => Ok(m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointConfigDocument {
    pub dimension: usize,
    pub target: Vec<Rat>,
    pub classes: Vec<Vec<Vec<Rat>>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
}

impl PointConfigDocument {
    /// Builds the configuration; `exploratory` is set if either the document
    /// or the caller asks for it.
    pub fn build(&self, exploratory: bool) -> Result<PointConfig> {
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().map(|p| unrat(p)).collect())
            .collect();
        PointConfig::new(self.dimension, classes, unrat(&self.target), self.exploratory || exploratory)
    }

    pub fn from_config(cfg: &PointConfig) -> Self {
        PointConfigDocument {
            dimension: cfg.dim(),
            target: rats(cfg.target()),
            classes: cfg
                .classes()
                .iter()
                .map(|c| c.iter().map(|p| rats(p)).collect())
                .collect(),
            exploratory: cfg.exploratory(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    /// Vertex labels; defaults to the facet labels in order of appearance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexDocument {
    pub fn build(&self) -> Result<SimplicialComplex> {
        let labels = match &self.vertices {
            Some(v) => v.clone(),
            None => {
                let mut seen: Vec<String> = Vec::new();
                for l in self.facets.iter().flatten() {
                    if !seen.contains(l) {
                        seen.push(l.clone());
                    }
                }
                seen
            }
        };
        let vertices = GroundSet::with_labels(labels)?;
        SimplicialComplex::from_facet_labels(vertices, &self.facets)
    }

    pub fn from_complex(x: &SimplicialComplex) -> Self {
        ComplexDocument {
            vertices: Some(x.vertices().labels().to_vec()),
            facets: x.facet_labels(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The instance satisfies the rank condition and the hypothesis.
    Verified,
    Witness,
    HypothesisFailed,
    RankConditionFailed,
    NoPositiveCircuits,
    Error,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Io,
    Parse,
    Validation,
    NoWitness,
    CapExceeded,
}

impl ErrorKind {
    pub fn of(e: &Error) -> Self {
        match e {
            Error::Parse(_) => ErrorKind::Parse,
            Error::CapExceeded { .. } => ErrorKind::CapExceeded,
            Error::NoWitness { .. } => ErrorKind::NoWitness,
            _ => ErrorKind::Validation,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportPayload {
    pub rank_condition_ok: bool,
    pub hypothesis_ok: bool,
    pub positive_circuit_count: usize,
    pub om_rank: usize,
    pub matroid_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessPayload {
    pub circuit: Vec<String>,
    pub independent_in_n: bool,
    pub selection_rule: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColorfulPayload {
    /// Tag of the chosen point of each class.
    pub selection: Vec<String>,
    /// Convex coefficient of each chosen point, by class.
    pub coefficients: Vec<Rat>,
    pub core_circuit: Vec<String>,
    pub exploratory: bool,
    pub shortcut: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaffoldRow {
    /// Ground elements whose classes `{v, v'}` form `I`.
    pub classes: Vec<String>,
    pub eta: Eta,
    pub size: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaffoldPayload {
    pub passed: bool,
    pub rows: Vec<ScaffoldRow>,
}

impl ScaffoldPayload {
    pub fn from_report(r: &MeshulamReport, ground: &GroundSet) -> Self {
        ScaffoldPayload {
            passed: r.passed(),
            rows: r
                .rows
                .iter()
                .map(|row| ScaffoldRow {
                    classes: ground.labels_of(row.classes),
                    eta: row.eta,
                    size: row.size,
                    ok: row.ok,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Diagnostics {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_kind: Option<ErrorKind>,
    pub message: String,
    /// Failing class pair for the pairwise condition, 1-based.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dump: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub status: Status,
    pub tool_version: String,
    pub axiom_verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violating_set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colorful: Option<ColorfulPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scaffold: Option<ScaffoldPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
}

impl CertificateDocument {
    fn bare(status: Status, axiom_verified: bool) -> Self {
        CertificateDocument {
            status,
            tool_version: TOOL_VERSION.to_string(),
            axiom_verified,
            report: None,
            violating_set: None,
            witness: None,
            colorful: None,
            scaffold: None,
            diagnostics: None,
        }
    }

    /// Certificate for a hypothesis check. A failing rank condition takes
    /// precedence over a missing positive circuit, which takes precedence
    /// over any other hypothesis failure.
    pub fn from_report(inst: &Instance, r: &HypothesisReport) -> Self {
        let status = if !r.rank_condition_ok {
            Status::RankConditionFailed
        } else if r.positive_circuit_count == 0 {
            Status::NoPositiveCircuits
        } else if !r.hypothesis_ok {
            Status::HypothesisFailed
        } else {
            Status::Verified
        };
        let mut doc = Self::bare(status, inst.oriented_matroid().axioms_verified());
        doc.report = Some(ReportPayload {
            rank_condition_ok: r.rank_condition_ok,
            hypothesis_ok: r.hypothesis_ok,
            positive_circuit_count: r.positive_circuit_count,
            om_rank: r.om_rank,
            matroid_rank: r.matroid_rank,
        });
        doc.violating_set = r.violating_set.map(|a| inst.ground().labels_of(a));
        doc
    }

    pub fn from_witness(inst: &Instance, r: &HypothesisReport, w: &WitnessCertificate) -> Self {
        let mut doc = Self::from_report(inst, r);
        doc.status = Status::Witness;
        doc.axiom_verified = w.axiom_verified;
        doc.witness = Some(WitnessPayload {
            circuit: inst.ground().labels_of(w.circuit),
            independent_in_n: w.independent_in_n,
            selection_rule: w.selection_rule.to_string(),
        });
        doc
    }

    pub fn from_colorful(cert: &ColorfulCertificate) -> Self {
        let mut doc = Self::bare(Status::Witness, cert.axiom_verified);
        doc.colorful = Some(ColorfulPayload {
            selection: cert.selection.iter().enumerate().map(|(i, &j)| tag(i, j)).collect(),
            coefficients: rats(&cert.coefficients),
            core_circuit: cert.core_circuit.iter().map(|&(i, j)| tag(i, j)).collect(),
            exploratory: cert.exploratory,
            shortcut: cert.shortcut,
        });
        doc
    }

    /// Certificate for a failure. Hypothesis and pairwise failures get
    /// [`Status::HypothesisFailed`]; everything else is [`Status::Error`].
    pub fn from_error(e: &Error, axiom_verified: bool) -> Self {
        let (status, error_kind) = match e {
            Error::HypothesisNotSatisfied(_) | Error::PairwiseConditionFailed(..) => {
                (Status::HypothesisFailed, None)
            }
            Error::NoPositiveCircuits => (Status::NoPositiveCircuits, None),
            other => (Status::Error, Some(ErrorKind::of(other))),
        };
        let mut doc = Self::bare(status, axiom_verified);
        doc.diagnostics = Some(Diagnostics {
            error_kind,
            message: e.to_string(),
            failing_pair: match e {
                Error::PairwiseConditionFailed(i, j) => Some((i + 1, j + 1)),
                _ => None,
            },
            dump: match e {
                Error::NoWitness { dump } => Some(dump.clone()),
                _ => None,
            },
        });
        doc
    }

    /// Certificate for an I/O failure.
    pub fn io_error(message: String) -> Self {
        let mut doc = Self::bare(Status::Error, true);
        doc.diagnostics = Some(Diagnostics {
            error_kind: Some(ErrorKind::Io),
            message,
            failing_pair: None,
            dump: None,
        });
        doc
    }

    /// Process exit code for this certificate.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Verified | Status::Witness => 0,
            Status::HypothesisFailed | Status::NoPositiveCircuits => 3,
            Status::RankConditionFailed => 4,
            Status::Error => match self.diagnostics.as_ref().and_then(|d| d.error_kind) {
                Some(ErrorKind::NoWitness) => 5,
                Some(ErrorKind::CapExceeded) => 6,
                _ => 2,
            },
        }
    }
}

/// Exit code for an error that occurs outside any certificate.
pub fn exit_code_for(e: &Error) -> i32 {
    CertificateDocument::from_error(e, true).exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorem::{check_instance, find_witness};

    const LINE: &str = r#"{
        "ground_set": ["a", "b", "c", "d"],
        "oriented_matroid": {"type": "vectors", "payload": [["1"], ["-1"], ["1"], ["-1"]]},
        "matroid": {"type": "transversal", "payload": [["a", "c"], ["b", "d"]]}
    }"#;

    #[test]
    fn rationals_parse_and_print_canonically() {
        for (input, out) in [("1/2", "1/2"), ("2/4", "1/2"), ("-3", "-3"), ("6/-3", ""), ("0/5", "0"), ("+7/1", "7")] {
            match input.parse::<Rat>() {
                Ok(r) => assert_eq!(r.to_string(), out, "{input}"),
                Err(_) => assert_eq!(out, "", "{input}"),
            }
        }
        assert!("1/0".parse::<Rat>().unwrap_err().contains("zero denominator"));
        for bad in ["", "/2", "1/", "1.5", "a", "1//2", " 1"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn instance_document_builds_and_checks() {
        let doc: InstanceDocument = parse(LINE).unwrap();
        let inst = doc.build(&Caps::default()).unwrap();
        let r = check_instance(&inst);
        let w = find_witness(&inst).unwrap();
        let cert = CertificateDocument::from_witness(&inst, &r, &w);
        assert_eq!(cert.witness.as_ref().unwrap().circuit, ["a", "b"]);
        assert_eq!(cert.exit_code(), 0);
        let again: CertificateDocument = parse(&to_json(&cert)).unwrap();
        assert_eq!(again, cert);
    }

    #[test]
    fn parse_errors_are_positioned() {
        let text = LINE.replace("[\"-1\"], [\"1\"]", "[\"-1\"], [\"1/0\"]");
        let err = parse::<InstanceDocument>(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("oriented_matroid.payload[2][0]"), "{msg}");
        assert!(msg.contains("zero denominator") && msg.contains("line"), "{msg}");
        assert_eq!(exit_code_for(&err), 2);
        assert!(parse::<InstanceDocument>("{\"ground_set\": [], \"x\": 1}").is_err());

        let late_tag = r#"{"ground_set": ["a"],
            "oriented_matroid": {"payload": [["x"]], "type": "vectors"},
            "matroid": {"payload": {"rank": 1, "k": 2}, "type": "uniform"}}"#;
        let msg = parse::<InstanceDocument>(late_tag).unwrap_err().to_string();
        assert!(msg.contains("at `oriented_matroid.payload[0][0]`: invalid rational"), "{msg}");
        let msg = parse::<MatroidSpec>(r#"{"payload": {"rank": 1, "k": 2}, "type": "uniform"}"#)
            .unwrap_err()
            .to_string();
        assert!(msg.contains("unknown field `k`"), "{msg}");
        let msg = parse::<MatroidSpec>(r#"{"type": "free", "payload": 1}"#).unwrap_err().to_string();
        assert!(msg.contains("unknown variant `free`"), "{msg}");
        let ok: MatroidSpec = parse(r#"{"payload": {"rank": 2}, "type": "uniform"}"#).unwrap();
        assert_eq!(ok, MatroidSpec::Uniform { rank: 2 });
    }

    #[test]
    fn documents_round_trip() {
        let doc: InstanceDocument = parse(LINE).unwrap();
        assert_eq!(parse::<InstanceDocument>(&to_json(&doc)).unwrap(), doc);
        let inst = doc.build(&Caps::default()).unwrap();
        let rebuilt = InstanceDocument {
            ground_set: doc.ground_set.clone(),
            oriented_matroid: OrientedMatroidSpec::signed_circuits(inst.oriented_matroid()),
            matroid: MatroidSpec::from_matroid(inst.matroid()),
        };
        let inst2 = rebuilt.build(&Caps::default()).unwrap();
        assert_eq!(inst2.oriented_matroid().circuits(), inst.oriented_matroid().circuits());
        assert_eq!(rebuilt.matroid, doc.matroid);

        let cx: ComplexDocument = parse(r#"{"facets": [["a","b"],["b","c"],["c","a"]]}"#).unwrap();
        let x = cx.build().unwrap();
        let out = ComplexDocument::from_complex(&x);
        assert_eq!(out.build().unwrap(), x);
        assert_eq!(parse::<ComplexDocument>(&to_json(&out)).unwrap(), out);
    }

    #[test]
    fn exit_codes_cover_every_status() {
        let e = |err: Error| CertificateDocument::from_error(&err, true).exit_code();
        assert_eq!(e(Error::HypothesisNotSatisfied("x".into())), 3);
        assert_eq!(e(Error::PairwiseConditionFailed(1, 2)), 3);
        assert_eq!(e(Error::NoPositiveCircuits), 3);
        assert_eq!(e(Error::NoWitness { dump: "d".into() }), 5);
        assert_eq!(e(Error::cap("x", 1, 2)), 6);
        assert_eq!(e(Error::VertexSetIsFace), 2);
        assert_eq!(e(Error::Parse("p".into())), 2);
        assert_eq!(CertificateDocument::io_error("gone".into()).exit_code(), 2);
        let d = CertificateDocument::from_error(&Error::PairwiseConditionFailed(1, 2), true);
        assert_eq!(d.diagnostics.unwrap().failing_pair, Some((2, 3)));
    }
}
