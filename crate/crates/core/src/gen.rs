//! Seeded random instances for property checks and benchmarks.
//!
//! Every generator draws from a caller-supplied RNG, so a fixed seed
//! reproduces the same stream of instances on every platform.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::euclid::{check_pairwise_condition, Point, PointConfig};
use crate::ground::GroundSet;
use crate::linalg::{rat, ratio, Rational};
use crate::matroid::Matroid;
use crate::oriented::OrientedMatroid;
use crate::subset::Subset;
use crate::theorem::Instance;

pub type GenRng = ChaCha8Rng;

/// RNG for stream `stream` under `seed`; distinct streams are independent.
pub fn rng(seed: u64, stream: &str) -> GenRng {
    // FNV-1a keeps stream ids stable across releases
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(h);
    r
}

/// Ground set `a, b, c, ...` (then `e26, e27, ...`).
pub fn letters(n: usize) -> GroundSet {
    let labels = (0..n).map(|i| {
        if i < 26 {
            char::from(b'a' + i as u8).to_string()
        } else {
            format!("e{i}")
        }
    });
    GroundSet::new(labels).expect("distinct labels")
}

/// Small rational with numerator in `-bound..=bound` and denominator in `1..=den`.
pub fn small_rational<R: Rng>(rng: &mut R, bound: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=den))
}

/// Nonzero vector in `Q^d` with small entries.
pub fn nonzero_vector<R: Rng>(rng: &mut R, d: usize, bound: i64, den: i64) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..d).map(|_| small_rational(rng, bound, den)).collect();
        if v.iter().any(|x| *x != rat(0)) {
            return v;
        }
    }
}

/// `n` nonzero columns in `Q^d`. Some columns are negated or scaled copies
/// of earlier ones, which creates parallel and antiparallel pairs.
pub fn vector_configuration<R: Rng>(rng: &mut R, d: usize, n: usize) -> Vec<Vec<Rational>> {
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for _ in 0..n {
        if !cols.is_empty() && rng.gen_bool(0.15) {
            let src = cols[rng.gen_range(0..cols.len())].clone();
            let f = ratio(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { -1 } else { 1 }, rng.gen_range(1..=2));
            cols.push(src.iter().map(|x| x * &f).collect());
        } else {
            cols.push(nonzero_vector(rng, d, 3, 2));
        }
    }
    cols
}

/// `n` nonzero columns in `Q^d` built from blocks that each carry a
/// positive dependency: `s - 1` random vectors followed by the negative of
/// a positive combination of them. Such configurations keep positive
/// circuits after many deletions, which makes the covering hypothesis hold
/// far more often than for unstructured columns.
pub fn positive_blocks<R: Rng>(rng: &mut R, d: usize, n: usize) -> Vec<Vec<Rational>> {
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    while cols.len() < n {
        let s = rng.gen_range(2..=(d + 1).min(4)).min(n - cols.len());
        if s < 2 {
            cols.push(nonzero_vector(rng, d, 3, 2));
            continue;
        }
        let block: Vec<Vec<Rational>> = (0..s - 1).map(|_| nonzero_vector(rng, d, 3, 2)).collect();
        let mut closing = vec![rat(0); d];
        for v in &block {
            let w = ratio(rng.gen_range(1..=3), rng.gen_range(1..=2));
            for (c, x) in closing.iter_mut().zip(v) {
                *c -= x * &w;
            }
        }
        if closing.iter().all(|c| *c == rat(0)) {
            continue;
        }
        cols.extend(block);
        cols.push(closing);
    }
    // interleave the blocks so lexicographic order does not follow them
    cols.shuffle(rng);
    cols
}

/// A realizable oriented matroid together with the columns realizing it.
#[derive(Clone, Debug)]
pub struct Realized {
    pub columns: Vec<Vec<Rational>>,
    pub dim: usize,
    pub om: OrientedMatroid,
}

/// Realizable oriented matroid on `n` elements from columns in `Q^d`.
pub fn realizable<R: Rng>(rng: &mut R, d: usize, n: usize, caps: &Caps) -> Result<Realized> {
    let columns = vector_configuration(rng, d, n);
    realized(d, columns, caps)
}

/// Realizable oriented matroid from [`positive_blocks`].
pub fn realizable_blocks<R: Rng>(rng: &mut R, d: usize, n: usize, caps: &Caps) -> Result<Realized> {
    let columns = positive_blocks(rng, d, n);
    realized(d, columns, caps)
}

fn realized(d: usize, columns: Vec<Vec<Rational>>, caps: &Caps) -> Result<Realized> {
    let n = columns.len();
    let om = OrientedMatroid::from_rational_vectors(letters(n), &columns, d, caps)?;
    Ok(Realized { columns, dim: d, om })
}

/// Loopless uniform matroid of rank `1..=n`.
pub fn uniform<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    Matroid::uniform(letters(n), rng.gen_range(1..=n))
}

/// Loopless transversal matroid with `members` family members.
pub fn transversal<R: Rng>(rng: &mut R, n: usize, members: usize) -> Result<Matroid> {
    let mut family = vec![Subset::EMPTY; members];
    for m in &mut family {
        for e in 0..n {
            if rng.gen_bool(0.3) {
                *m = m.with(e);
            }
        }
    }
    // every element must lie in some member
    for e in 0..n {
        if !family.iter().any(|m| m.contains(e)) {
            let j = rng.gen_range(0..members);
            family[j] = family[j].with(e);
        }
    }
    Matroid::transversal(letters(n), family)
}

/// Loopless linear matroid with `n` columns in `Q^k`.
pub fn linear<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<Matroid> {
    let cols = (0..n).map(|_| nonzero_vector(rng, k, 2, 1)).collect();
    Matroid::linear(letters(n), cols)
}

/// Graphic matroid of a random loopless multigraph with `n` edges.
pub fn graphic<R: Rng>(rng: &mut R, n: usize) -> Result<Matroid> {
    let vertices = rng.gen_range(2..=n.max(2) + 1);
    let edges = (0..n)
        .map(|_| {
            let u = rng.gen_range(0..vertices);
            let mut v = rng.gen_range(0..vertices - 1);
            if v >= u {
                v += 1;
            }
            (format!("v{u}"), format!("v{v}"))
        })
        .collect();
    Matroid::graphic(letters(n), edges)
}

/// Explicit-basis matroid copied from a random linear matroid.
pub fn explicit<R: Rng>(rng: &mut R, n: usize, caps: &Caps) -> Result<Matroid> {
    let k = rng.gen_range(1..=n.min(4));
    let source = linear(rng, n, k)?;
    Matroid::explicit(letters(n), source.bases(caps)?)
}

/// One matroid of a randomly chosen kind.
pub fn any_matroid<R: Rng>(rng: &mut R, n: usize, caps: &Caps) -> Result<Matroid> {
    match rng.gen_range(0..5) {
        0 => Ok(uniform(rng, n)),
        1 => {
            let members = rng.gen_range(1..=n.min(6));
            transversal(rng, n, members)
        }
        2 => {
            let k = rng.gen_range(1..=n.min(4));
            linear(rng, n, k)
        }
        3 => graphic(rng, n),
        _ if n <= caps.explicit_validation => explicit(rng, n, caps),
        _ => Ok(uniform(rng, n)),
    }
}

/// Matroid on `n` elements of rank greater than `r` (requires `r < n`),
/// of kind uniform, transversal or linear.
pub fn matroid_above<R: Rng>(rng: &mut R, n: usize, r: usize) -> Result<Matroid> {
    debug_assert!(r < n);
    let target = rng.gen_range(r + 1..=n.min(r + 2));
    match rng.gen_range(0..3) {
        0 => Ok(Matroid::uniform(letters(n), target)),
        1 => loop {
            let m = transversal(rng, n, target)?;
            if m.full_rank() > r {
                return Ok(m);
            }
        },
        _ => loop {
            let m = linear(rng, n, target)?;
            if m.full_rank() > r {
                return Ok(m);
            }
        },
    }
}

/// A random instance: realizable `M` (`d <= max_dim`, `|V| <= max_n`)
/// and `N` with `rk(N) > rk(M)`. Not filtered by the hypothesis.
pub fn instance<R: Rng>(
    rng: &mut R,
    max_dim: usize,
    max_n: usize,
    caps: &Caps,
) -> Result<(Realized, Instance)> {
    let d = rng.gen_range(1..=max_dim.min(max_n - 1));
    instance_in(rng, d, max_n, caps)
}

/// Like [`instance`] with the dimension fixed to `d < max_n`. Half of the
/// configurations come from [`positive_blocks`].
pub fn instance_in<R: Rng>(rng: &mut R, d: usize, max_n: usize, caps: &Caps) -> Result<(Realized, Instance)> {
    loop {
        let n = rng.gen_range(d + 1..=max_n);
        let real = if rng.gen_bool(0.5) {
            realizable_blocks(rng, d, n, caps)?
        } else {
            realizable(rng, d, n, caps)?
        };
        let r = real.om.rank();
        if r >= n {
            continue;
        }
        let m = matroid_above(rng, n, r)?;
        let inst = Instance::new(real.om.clone(), m, caps)?;
        return Ok((real, inst));
    }
}

/// Random complex on `n` vertices (some possibly unused) whose facets are
/// all proper subsets of the vertex set.
pub fn proper_complex<R: Rng>(rng: &mut R, n: usize) -> Result<SimplicialComplex> {
    let full = Subset::full(n);
    let count = rng.gen_range(0..=n + 2);
    let p = rng.gen_range(0.2..0.8);
    let mut facets = Vec::with_capacity(count);
    for _ in 0..count {
        let mut s = Subset::EMPTY;
        for e in 0..n {
            if rng.gen_bool(p) {
                s = s.with(e);
            }
        }
        if s == full {
            s = s.without(rng.gen_range(0..n));
        }
        facets.push(s);
    }
    SimplicialComplex::from_facets(letters(n), facets)
}

/// Random complex on `1..=max_n` vertices, occasionally the full simplex.
pub fn complex<R: Rng>(rng: &mut R, max_n: usize) -> Result<SimplicialComplex> {
    let n = rng.gen_range(1..=max_n);
    if rng.gen_bool(0.1) {
        return Ok(SimplicialComplex::full_simplex(letters(n)));
    }
    proper_complex(rng, n)
}

fn point_near<R: Rng>(rng: &mut R, x: &Point) -> Point {
    x.iter().map(|c| c + small_rational(rng, 4, 3)).collect()
}

/// Theorem-mode configuration in `Q^d` satisfying the pairwise condition,
/// by rejection sampling. Classes have 1 to 4 points.
pub fn pairwise_config<R: Rng>(rng: &mut R, d: usize) -> PointConfig {
    loop {
        let target: Point = (0..d).map(|_| small_rational(rng, 2, 2)).collect();
        let classes: Vec<Vec<Point>> = (0..=d)
            .map(|_| {
                let k = rng.gen_range(1..=4);
                (0..k).map(|_| point_near(rng, &target)).collect()
            })
            .collect();
        let cfg = PointConfig::new(d, classes, target, false).expect("well-formed");
        if check_pairwise_condition(&cfg).ok {
            return cfg;
        }
    }
}

/// Configuration whose `d + 1` classes are the same point set of
/// `d + 1..=max(d + 1, 4)` points, which contains the target in its hull.
pub fn equal_classes_config<R: Rng>(rng: &mut R, d: usize) -> PointConfig {
    loop {
        let target: Point = (0..d).map(|_| small_rational(rng, 2, 2)).collect();
        let k = rng.gen_range(d + 1..=(d + 1).max(4));
        let mut pts: Vec<Point> = (0..k).map(|_| point_near(rng, &target)).collect();
        pts.shuffle(rng);
        let classes = vec![pts; d + 1];
        let cfg = PointConfig::new(d, classes, target, false).expect("well-formed");
        if check_pairwise_condition(&cfg).ok {
            return cfg;
        }
    }
}

/// Configuration with the target on the boundary of every class pair's
/// hull: each class holds a point and its reflection through the target
/// along one shared line.
pub fn boundary_config<R: Rng>(rng: &mut R, d: usize) -> PointConfig {
    let target: Point = (0..d).map(|_| small_rational(rng, 2, 2)).collect();
    let dir = nonzero_vector(rng, d, 3, 1);
    let classes = (0..=d)
        .map(|_| {
            let s = ratio(rng.gen_range(1..=3), rng.gen_range(1..=2));
            let t = ratio(rng.gen_range(1..=3), rng.gen_range(1..=2));
            let plus: Point = target.iter().zip(&dir).map(|(x, v)| x + v * &s).collect();
            let minus: Point = target.iter().zip(&dir).map(|(x, v)| x - v * &t).collect();
            vec![plus, minus]
        })
        .collect();
    PointConfig::new(d, classes, target, false).expect("well-formed")
}
