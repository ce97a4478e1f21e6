//! Reduced rational homology of simplicial complexes.
//!
//! Boundary ranks come from a sparse, fraction-free column reduction over
//! the integers: a column is only ever replaced by `a*col - b*pivot` with
//! `a != 0` and then divided by the gcd of its entries, which preserves the
//! rational column space. Entries are `i64` with overflow checks; on
//! overflow the whole matrix is redone with big integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::Result;

/// Dimensions of `H̃_j` for `j = -1, 0, ..., dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    dims: Vec<usize>,
}

impl BettiVector {
    pub fn from_dims(dims: Vec<usize>) -> Self {
        BettiVector { dims }
    }

    /// `dim H̃_j`; zero outside the stored range.
    pub fn get(&self, j: isize) -> usize {
        if j < -1 {
            return 0;
        }
        self.dims.get((j + 1) as usize).copied().unwrap_or(0)
    }

    /// `(degree, dimension)` pairs, starting at degree -1.
    pub fn degrees(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().map(|(k, &d)| (k as isize - 1, d))
    }

    /// Highest stored degree.
    pub fn top(&self) -> isize {
        self.dims.len() as isize - 2
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn eta(&self) -> Eta {
        match self.dims.iter().position(|&d| d != 0) {
            Some(k) => Eta::Finite(k),
            None => Eta::Infinite,
        }
    }

    /// Reduced Euler characteristic `Σ (-1)^j dim H̃_j`.
    pub fn euler(&self) -> i64 {
        self.degrees()
            .map(|(j, d)| if j.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.dims.len()))?;
        for (j, d) in self.degrees() {
            map.serialize_entry(&j.to_string(), &d)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for BettiVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw: std::collections::BTreeMap<String, usize> = Deserialize::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (k, v) in raw {
            let j: isize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad degree `{k}`")))?;
            if j < -1 {
                return Err(D::Error::custom(format!("degree {j} below -1")));
            }
            pairs.push((j, v));
        }
        let top = pairs.iter().map(|p| p.0).max().unwrap_or(-1);
        let mut dims = vec![0; (top + 2) as usize];
        for (j, v) in pairs {
            dims[(j + 1) as usize] = v;
        }
        Ok(BettiVector { dims })
    }
}

/// One plus the least degree of nonvanishing reduced homology, or infinity
/// when all of it vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eta {
    Finite(usize),
    Infinite,
}

impl Eta {
    pub fn is_infinite(self) -> bool {
        self == Eta::Infinite
    }

    /// `self >= n`, with infinity above every natural.
    pub fn at_least(self, n: usize) -> bool {
        self >= Eta::Finite(n)
    }
}

impl std::ops::Add for Eta {
    type Output = Eta;

    fn add(self, rhs: Eta) -> Eta {
        match (self, rhs) {
            (Eta::Finite(a), Eta::Finite(b)) => Eta::Finite(a + b),
            _ => Eta::Infinite,
        }
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eta::Finite(n) => write!(f, "{n}"),
            Eta::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Eta {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Eta::Finite(n) => serializer.serialize_u64(*n as u64),
            Eta::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Eta {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::N(n) => Ok(Eta::Finite(n as usize)),
            Raw::S(s) if s == "inf" => Ok(Eta::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad eta `{s}`"))),
        }
    }
}

/// Reduced homology with rational coefficients.
pub fn reduced_homology(x: &SimplicialComplex, caps: &Caps) -> Result<BettiVector> {
    let len = (x.dim() + 2) as usize;
    if x.is_cone() {
        return Ok(BettiVector { dims: vec![0; len] });
    }
    homology_by_elimination(x, caps)
}

pub(crate) fn homology_by_elimination(x: &SimplicialComplex, caps: &Caps) -> Result<BettiVector> {
    let faces = x.faces_by_size(caps.faces)?;
    let ranks = boundary_ranks(&faces);
    // H̃_{k-1} = f_k - rank ∂_k - rank ∂_{k+1}, with ∂_k leaving size-k faces
    let dims = (0..faces.len())
        .map(|k| {
            let above = ranks.get(k + 1).copied().unwrap_or(0);
            faces[k].len() - ranks[k] - above
        })
        .collect();
    Ok(BettiVector { dims })
}

pub fn eta(x: &SimplicialComplex, caps: &Caps) -> Result<Eta> {
    Ok(reduced_homology(x, caps)?.eta())
}

/// `ranks[k]` is the rank of the boundary map from size-`k` faces to
/// size-`k-1` faces (`ranks[0] == 0`; size-1 faces map onto the empty face).
fn boundary_ranks(faces: &[Vec<u64>]) -> Vec<usize> {
    let top = faces.len() - 1;
    let mut ranks = vec![0; faces.len()];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (1..=top).rev() {
        let skip = std::mem::take(&mut cleared);
        let (rank, pivot_rows) = match reduce::<i64>(&faces[k], &faces[k - 1], &skip) {
            Some(r) => r,
            None => reduce::<BigInt>(&faces[k], &faces[k - 1], &skip).expect("big integers do not overflow"),
        };
        ranks[k] = rank;
        cleared = vec![false; faces[k - 1].len()];
        for r in pivot_rows {
            cleared[r] = true;
        }
    }
    ranks
}

trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn unit(negative: bool) -> Self;
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }

    fn unit(negative: bool) -> Self {
        if negative {
            -1
        } else {
            1
        }
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }

    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }

    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn unit(negative: bool) -> Self {
        if negative {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }

    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

type Column<T> = Vec<(u32, T)>;

/// Rank of the boundary matrix with columns `cols` (faces of size k) and
/// rows `rows` (faces of size k-1), skipping columns flagged in `skip`.
/// Also returns the pivot rows of the reduced matrix. `None` on overflow.
fn reduce<T: Coeff>(cols: &[u64], rows: &[u64], skip: &[bool]) -> Option<(usize, Vec<usize>)> {
    let mut owner: Vec<Option<u32>> = vec![None; rows.len()];
    let mut reduced: Vec<Column<T>> = Vec::new();
    for (j, &face) in cols.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) {
            continue;
        }
        let mut col = boundary_column::<T>(face, rows);
        while let Some((low, _)) = col.last() {
            let Some(p) = owner[*low as usize] else { break };
            col = eliminate(&col, &reduced[p as usize])?;
        }
        if let Some((low, _)) = col.last() {
            owner[*low as usize] = Some(reduced.len() as u32);
            reduced.push(col);
        }
    }
    let pivots = owner
        .iter()
        .enumerate()
        .filter(|(_, o)| o.is_some())
        .map(|(r, _)| r)
        .collect();
    Some((reduced.len(), pivots))
}

fn boundary_column<T: Coeff>(face: u64, rows: &[u64]) -> Column<T> {
    let mut col: Column<T> = Vec::with_capacity(face.count_ones() as usize);
    let mut rest = face;
    let mut pos = 0;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        let row = rows
            .binary_search(&(face ^ bit))
            .expect("faces are closed under taking subsets");
        col.push((row as u32, T::unit(pos % 2 == 1)));
        pos += 1;
    }
    col.sort_unstable_by_key(|e| e.0);
    col
}

/// `a*col - b*pivot` where `a`, `b` are the lowest entries of `pivot` and
/// `col`, normalized by the gcd of the result.
fn eliminate<T: Coeff>(col: &Column<T>, pivot: &Column<T>) -> Option<Column<T>> {
    let a = &pivot.last().unwrap().1;
    let b = &col.last().unwrap().1;
    let zero_t = T::zero();
    let mut out: Column<T> = Vec::with_capacity(col.len() + pivot.len());
    let (mut i, mut k) = (0, 0);
    while i < col.len() || k < pivot.len() {
        let take_col = k == pivot.len() || (i < col.len() && col[i].0 < pivot[k].0);
        let take_piv = i == col.len() || (k < pivot.len() && pivot[k].0 < col[i].0);
        let (row, v) = if take_col {
            let r = (col[i].0, T::mul_sub(a, &col[i].1, b, &zero_t)?);
            i += 1;
            r
        } else if take_piv {
            let r = (pivot[k].0, T::mul_sub(a, &zero_t, b, &pivot[k].1)?);
            k += 1;
            r
        } else {
            let r = (col[i].0, T::mul_sub(a, &col[i].1, b, &pivot[k].1)?);
            i += 1;
            k += 1;
            r
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for (_, v) in &out[1..] {
            if g.is_unit() {
                break;
            }
            g = g.gcd_with(v);
        }
        if !g.is_unit() {
            for e in &mut out {
                e.1 = e.1.div_exact(&g);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::subset::Subset;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let f = facets.iter().map(|f| Subset::from_indices(f.iter().copied())).collect();
        SimplicialComplex::from_facets(GroundSet::numbered(n).unwrap(), f).unwrap()
    }

    fn betti(x: &SimplicialComplex) -> Vec<usize> {
        reduced_homology(x, &Caps::default()).unwrap().dims
    }

    #[test]
    fn homology_examples() {
        assert_eq!(betti(&cx(3, &[])), vec![1]);
        assert_eq!(betti(&cx(3, &[&[0, 1], &[1, 2], &[2, 0]])), vec![0, 0, 1]);
        assert_eq!(betti(&cx(4, &[&[0, 1], &[2, 3]])), vec![0, 1, 0]);
    }

    #[test]
    fn eta_examples() {
        let caps = Caps::default();
        assert_eq!(eta(&cx(3, &[]), &caps).unwrap(), Eta::Finite(0));
        assert_eq!(eta(&cx(1, &[&[0]]), &caps).unwrap(), Eta::Infinite);
        assert_eq!(eta(&cx(3, &[&[0, 1], &[1, 2], &[2, 0]]), &caps).unwrap(), Eta::Finite(2));
    }

    #[test]
    fn sphere_and_torus_like_inputs() {
        // boundary of the 4-simplex is S^3
        let s3 = SimplicialComplex::simplex_boundary(GroundSet::numbered(5).unwrap());
        assert_eq!(betti(&s3), vec![0, 0, 0, 0, 1]);
        // octahedron boundary is S^2
        let oct = cx(
            6,
            &[&[0, 2, 4], &[0, 2, 5], &[0, 3, 4], &[0, 3, 5], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5]],
        );
        assert_eq!(betti(&oct), vec![0, 0, 0, 1]);
    }

    #[test]
    fn real_projective_plane_has_no_rational_homology() {
        // 6-vertex RP^2: integral H_1 = Z/2, invisible over the rationals
        let rp2 = cx(
            6,
            &[
                &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 5, 1],
                &[1, 2, 4], &[2, 3, 5], &[3, 4, 1], &[4, 5, 2], &[5, 1, 3],
            ],
        );
        assert_eq!(betti(&rp2), vec![0, 0, 0, 0]);
    }

    #[test]
    fn cone_shortcut_agrees_with_elimination() {
        let caps = Caps::default();
        let cone = cx(5, &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 1, 4]]);
        assert!(cone.is_cone());
        assert_eq!(
            reduced_homology(&cone, &caps).unwrap(),
            homology_by_elimination(&cone, &caps).unwrap()
        );
    }

    #[test]
    fn bigint_path_agrees_with_i64() {
        let s3 = SimplicialComplex::simplex_boundary(GroundSet::numbered(6).unwrap());
        let faces = s3.faces_by_size(1 << 20).unwrap();
        for k in 1..faces.len() {
            let small = reduce::<i64>(&faces[k], &faces[k - 1], &[]).unwrap();
            let big = reduce::<BigInt>(&faces[k], &faces[k - 1], &[]).unwrap();
            assert_eq!(small, big);
        }
    }

    #[test]
    fn face_budget_is_enforced() {
        let caps = Caps { faces: 10, ..Caps::default() };
        let x = cx(5, &[&[0, 1, 2, 3]]);
        assert!(homology_by_elimination(&x, &caps).is_err());
    }

    #[test]
    fn eta_ordering_and_sum() {
        assert!(Eta::Infinite > Eta::Finite(1000));
        assert_eq!(Eta::Finite(2) + Eta::Finite(3), Eta::Finite(5));
        assert_eq!(Eta::Finite(2) + Eta::Infinite, Eta::Infinite);
        assert!(Eta::Infinite.at_least(7));
        assert_eq!(serde_json::to_string(&Eta::Infinite).unwrap(), "\"inf\"");
    }

    #[test]
    fn betti_serializes_in_degree_order() {
        let b = BettiVector::from_dims(vec![0; 13]);
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.starts_with("{\"-1\":0,\"0\":0,\"1\":0,\"2\":0"));
        let back: BettiVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }
}
