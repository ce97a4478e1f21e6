//! Deterministic workloads shared by the criterion benches.

use colorcar::gen::{self, Realized};
use colorcar::{check_instance, Caps, Instance, PointConfig, SimplicialComplex};

pub const SEED: u64 = 7;

/// Random proper complexes on `n` vertices.
pub fn complexes(n: usize, count: usize) -> Vec<SimplicialComplex> {
    let mut rng = gen::rng(SEED, &format!("bench/complex/{n}"));
    (0..count)
        .map(|_| gen::proper_complex(&mut rng, n).expect("complex"))
        .collect()
}

/// Realizable oriented matroids of rank `d` on `n` elements, mixing random
/// columns with blocks that carry positive dependencies.
pub fn configurations(d: usize, n: usize, count: usize) -> Vec<Realized> {
    let caps = Caps::default();
    let mut rng = gen::rng(SEED, &format!("bench/om/{d}/{n}"));
    (0..count)
        .map(|i| {
            if i % 2 == 0 {
                gen::realizable(&mut rng, d, n, &caps)
            } else {
                gen::realizable_blocks(&mut rng, d, n, &caps)
            }
            .expect("configuration")
        })
        .collect()
}

/// Instances of dimension `d` that satisfy the rank condition and the
/// covering hypothesis.
pub fn passing_instances(d: usize, max_n: usize, count: usize) -> Vec<Instance> {
    let caps = Caps::default();
    let mut rng = gen::rng(SEED, &format!("bench/instance/{d}/{max_n}"));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Ok((_, inst)) = gen::instance_in(&mut rng, d, max_n, &caps) {
            if check_instance(&inst).passed() {
                out.push(inst);
            }
        }
    }
    out
}

/// Point configurations in dimension `d` meeting the pairwise condition.
pub fn point_configs(d: usize, count: usize) -> Vec<PointConfig> {
    let mut rng = gen::rng(SEED, &format!("bench/points/{d}"));
    (0..count).map(|_| gen::pairwise_config(&mut rng, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(complexes(6, 4), complexes(6, 4));
        let a: Vec<_> = passing_instances(2, 7, 3).iter().map(|i| i.ground().len()).collect();
        let b: Vec<_> = passing_instances(2, 7, 3).iter().map(|i| i.ground().len()).collect();
        assert_eq!(a, b);
        assert_eq!(configurations(3, 6, 2).len(), 2);
        assert_eq!(point_configs(2, 2).len(), 2);
    }
}
