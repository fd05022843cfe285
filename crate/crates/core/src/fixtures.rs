//! Built-in arrangements and Bernstein–Sato data used by the examples,
//! the CLI and the test suites.

use crate::algebra::{q, Rational};
use crate::arrangement::Arrangement;

/// Coordinate hyperplanes `x_1 ⋯ x_n`.
pub fn boolean(n: usize) -> Arrangement {
    let normals: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let rows: Vec<&[i64]> = normals.iter().map(Vec::as_slice).collect();
    Arrangement::from_i64(n, &rows, &vec![1; n])
        .expect("coordinate hyperplanes are distinct")
        .with_name(format!("boolean{n}"))
}

/// `x^a y^b`.
pub fn monomial(a: u64, b: u64) -> Arrangement {
    Arrangement::from_i64(2, &[&[1, 0], &[0, 1]], &[a, b])
        .expect("axes are distinct")
        .with_name(format!("x^{a}y^{b}"))
}

/// `x y (x - y)`.
pub fn three_lines() -> Arrangement {
    Arrangement::from_i64(2, &[&[1, 0], &[0, 1], &[1, -1]], &[1, 1, 1])
        .expect("distinct lines")
        .with_name("threelines")
}

/// `r` lines through the origin of the plane: `x`, `y`, `x - y`, `x - 2y`, ...
pub fn concurrent_lines(r: usize, mults: &[u64]) -> Arrangement {
    let normals: Vec<Vec<i64>> = (0..r)
        .map(|i| match i {
            0 => vec![1, 0],
            1 => vec![0, 1],
            _ => vec![1, -(i as i64 - 1)],
        })
        .collect();
    let rows: Vec<&[i64]> = normals.iter().map(Vec::as_slice).collect();
    Arrangement::from_i64(2, &rows, mults).expect("distinct lines")
}

/// Veys' arrangement `x y (x - y) z^2 (x - z)^4`.
pub fn veys() -> Arrangement {
    Arrangement::from_i64(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[1, -1, 0], &[0, 0, 1], &[1, 0, -1]],
        &[1, 1, 1, 2, 4],
    )
    .expect("distinct planes")
    .with_name("veys")
}

/// Roots of the Bernstein–Sato polynomial of Veys' arrangement:
/// `(s+1/3)(s+2/3)(s+4/3) ∏_{i=1}^{4}(s+i/4) ∏_{i=2}^{8}(s+i/7) ∏_{i=4}^{11}(s+i/9)`.
pub fn veys_bf_roots() -> Vec<Rational> {
    let mut roots = vec![q(-1, 3), q(-2, 3), q(-4, 3)];
    roots.extend((1..=4).map(|i| q(-i, 4)));
    roots.extend((2..=8).map(|i| q(-i, 7)));
    roots.extend((4..=11).map(|i| q(-i, 9)));
    roots.sort();
    roots.dedup();
    roots
}

/// `F = (x, y)` on the plane.
pub fn split_pair() -> Arrangement {
    boolean(2)
        .with_factors(vec![vec![1, 0], vec![0, 1]])
        .expect("valid factorization")
        .with_name("pair")
}

/// `F = (x, y (x - y))`.
pub fn line_and_pair() -> Arrangement {
    three_lines()
        .with_factors(vec![vec![1, 0, 0], vec![0, 1, 1]])
        .expect("valid factorization")
        .with_name("line-and-pair")
}

/// Names accepted by [`example`].
pub const EXAMPLE_NAMES: &[&str] = &["veys", "threelines", "boolean2", "pair", "line-and-pair"];

pub fn example(name: &str) -> Option<Arrangement> {
    match name {
        "veys" => Some(veys()),
        "threelines" => Some(three_lines()),
        "boolean2" => Some(boolean(2)),
        "pair" => Some(split_pair()),
        "line-and-pair" => Some(line_and_pair()),
        _ => None,
    }
}

/// Built-in Bernstein–Sato roots keyed by example name.
pub fn example_roots(name: &str) -> Option<Vec<Rational>> {
    match name {
        "veys" => Some(veys_bf_roots()),
        _ => None,
    }
}
