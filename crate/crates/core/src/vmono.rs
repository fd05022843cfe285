//! Two explicit V-filtration calculators: rank-one normal-crossings
//! connections and the diagonal embedding of the line into the plane.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{frac_part, Rational};
use crate::error::{Error, Result};
use crate::walls::{WallFamily, WallSet};

/// A rank-one connection with simple normal-crossing poles along
/// `t_1 ⋯ t_r = 0` and residue exponents `β_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialConnectionSpec {
    beta: Vec<Rational>,
}

impl MonomialConnectionSpec {
    pub fn new(beta: Vec<Rational>) -> Result<Self> {
        if beta.is_empty() {
            return Err(Error::Precondition("need at least one divisor component".into()));
        }
        Ok(Self { beta })
    }

    /// The trivial connection `O` on `r` components.
    pub fn trivial(r: usize) -> Result<Self> {
        Self::new(vec![Rational::zero(); r])
    }

    pub fn r(&self) -> usize {
        self.beta.len()
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }
}

/// Exponents of the monomial generating `V^α`: `⌈α_i − β_i⌉ − 1`.
pub fn ncv_generator(spec: &MonomialConnectionSpec, alpha: &[Rational]) -> Result<Vec<BigInt>> {
    if alpha.len() != spec.r() {
        return Err(Error::DimensionMismatch {
            expected: spec.r(),
            got: alpha.len(),
        });
    }
    Ok(alpha
        .iter()
        .zip(&spec.beta)
        .map(|(a, b)| (a - b).ceil().to_integer() - 1)
        .collect())
}

/// Jump loci `α_i ∈ β_i + Z`.
pub fn ncv_walls(spec: &MonomialConnectionSpec) -> WallSet {
    let r = spec.r();
    WallSet::from_families((0..r).map(|i| {
        let normal = (0..r).map(|j| BigInt::from(u8::from(i == j))).collect();
        WallFamily::new(normal, [frac_part(&spec.beta[i])]).expect("unit normal")
    }))
}

/// The class of `t1^m t2^n / (t1 − t2)^k` in the pushforward of `O` along
/// the diagonal. Classes with `k = 0` are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagClass {
    pub m: u64,
    pub n: u64,
    pub k: u64,
}

impl DiagClass {
    pub fn new(m: u64, n: u64, k: u64) -> Self {
        Self { m, n, k }
    }

    pub fn is_zero(&self) -> bool {
        self.k == 0
    }

    /// `m + n − k`.
    pub fn weight(&self) -> BigInt {
        BigInt::from(self.m) + self.n - self.k
    }
}

/// Membership in the restricted filtration: `m + n − k ≥ α1 + α2 − 2`.
/// The zero class lies in every step.
pub fn diag_vres_member(c: DiagClass, alpha: &[Rational; 2]) -> bool {
    if c.is_zero() {
        return true;
    }
    Rational::from_integer(c.weight()) >= &alpha[0] + &alpha[1] - Rational::from_integer(2.into())
}

/// The eigenvalue of `s1 + s2` on the class: `−(m + n − k + 2)`.
pub fn diag_s_eigenvalue(c: DiagClass) -> Rational {
    -Rational::from_integer(c.weight() + 2)
}

/// Levels `γ ∈ Z≥0` of the walls `α1 + α2 = γ` between `α ≤ β`: the
/// factors `s1 + s2 + γ` annihilating `V^α / V^β`.
pub fn diag_annihilator(alpha: &[Rational; 2], beta: &[Rational; 2]) -> Result<Vec<BigInt>> {
    if alpha[0] > beta[0] || alpha[1] > beta[1] {
        return Err(Error::Precondition("annihilator needs α ≤ β componentwise".into()));
    }
    let la = &alpha[0] + &alpha[1];
    let lb = &beta[0] + &beta[1];
    let mut gamma = la.ceil().to_integer().max(BigInt::zero());
    let mut out = Vec::new();
    while Rational::from_integer(gamma.clone()) < lb {
        out.push(gamma.clone());
        gamma += BigInt::one();
    }
    Ok(out)
}

/// The wall set of the diagonal example: `α1 + α2`, `α1`, `α2` integral.
pub fn diag_walls() -> WallSet {
    WallSet::from_families(
        [[1, 1], [1, 0], [0, 1]]
            .iter()
            .map(|l| WallFamily::from_i64(l, &[Rational::zero()]).expect("primitive")),
    )
}

/// Sample points of the regions drawn for the diagonal example, with the
/// class generating the quotient there.
pub fn diag_region_samples() -> Vec<([Rational; 2], DiagClass)> {
    use crate::algebra::q;
    vec![
        ([q(1, 4), q(3, 8)], DiagClass::new(0, 0, 1)),
        ([q(3, 4), q(3, 4)], DiagClass::new(1, 0, 1)),
        ([q(7, 4), q(7, 4)], DiagClass::new(3, 0, 1)),
        ([q(0, 1), q(0, 1)], DiagClass::new(0, 0, 2)),
        ([q(-3, 10), q(-1, 4)], DiagClass::new(0, 0, 2)),
    ]
}
