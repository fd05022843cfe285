#![allow(dead_code)]

use hyparr::algebra::{primitive_normal, q};
use hyparr::walls::{arrangement_walls, extend_restricted_walls, walls_from_resolution, WallSet};
use hyparr::{fixtures, vmono, Arrangement, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `r` pairwise non-proportional integer normals in `dim` variables with
/// entries in `[-bound, bound]`.
pub fn random_normals(rng: &mut impl Rng, dim: usize, r: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut keys = Vec::new();
    while out.len() < r {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let key = primitive_normal(&v.iter().map(|&x| q(x, 1)).collect::<Vec<_>>()).unwrap();
        if !keys.contains(&key) {
            keys.push(key);
            out.push(v);
        }
    }
    out
}

pub fn random_arrangement(rng: &mut impl Rng, dim: usize, r: usize, max_mult: u64) -> Arrangement {
    let normals = random_normals(rng, dim, r, 2);
    let refs: Vec<&[i64]> = normals.iter().map(Vec::as_slice).collect();
    let mults: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=max_mult)).collect();
    Arrangement::from_i64(dim, &refs, &mults).unwrap()
}

/// Central line arrangements with `3 ≤ r ≤ 6` lines.
pub fn random_line_arrangements(seed: u64, count: usize) -> Vec<Arrangement> {
    let mut g = rng(seed);
    (0..count)
        .map(|_| {
            let r = g.gen_range(3..=6);
            random_arrangement(&mut g, 2, r, 4)
        })
        .collect()
}

/// Central arrangements in three-space with `3 ≤ r ≤ 6` planes.
pub fn random_space_arrangements(seed: u64, count: usize) -> Vec<Arrangement> {
    let mut g = rng(seed);
    (0..count)
        .map(|_| {
            let r = g.gen_range(3..=6);
            random_arrangement(&mut g, 3, r, 3)
        })
        .collect()
}

pub fn fixture_arrangements() -> Vec<(String, Arrangement)> {
    vec![
        ("veys".into(), fixtures::veys()),
        ("xy(x-y)".into(), fixtures::three_lines()),
        ("xy".into(), fixtures::boolean(2)),
        ("xyz".into(), fixtures::boolean(3)),
        ("x^2y^3".into(), fixtures::monomial(2, 3)),
        ("four lines".into(), fixtures::concurrent_lines(4, &[1, 2, 3, 1])),
        ("five lines".into(), fixtures::concurrent_lines(5, &[2, 1, 1, 3, 1])),
    ]
}

/// Three wall sets: the diagonal example, the walls of the Veys
/// arrangement, and an extended set with non-trivial offsets.
pub fn fixture_wall_sets() -> Vec<(String, WallSet)> {
    vec![
        ("diagonal".into(), vmono::diag_walls()),
        ("veys".into(), arrangement_walls(&fixtures::veys()).unwrap()),
        (
            "skew".into(),
            extend_restricted_walls(&walls_from_resolution(&[vec![2, 1], vec![1, 3], vec![4, 2]]).unwrap())
                .unwrap(),
        ),
    ]
}

pub fn random_point(rng: &mut impl Rng, dim: usize) -> Vec<Rational> {
    (0..dim)
        .map(|_| {
            let den = rng.gen_range(1..=12);
            q(rng.gen_range(-3 * den..=3 * den), den)
        })
        .collect()
}
