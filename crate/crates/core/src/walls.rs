//! Walls and chambers in `R^r`.
//!
//! A wall is an affine hyperplane `L(α) = γ` with `L` a nonnegative integer
//! vector. Wall sets are finite modulo `Z^r`: a family stores one primitive
//! normal `L` and the residues mod 1 of the admissible levels `γ`. Because
//! `L` is primitive, `L(Z^r) = Z`, so residues mod 1 describe the family
//! exactly.
//!
//! Two points are separated by `(L, γ)` when `L(a) ≤ γ < L(b)` or the other
//! way round; chambers are closed below and open above.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{frac_part, Rational};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::zeta::dense_resolution_data;

/// A single wall `L(α) = level`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WallInstance {
    pub normal: Vec<BigInt>,
    pub level: Rational,
}

impl WallInstance {
    pub fn value_at(&self, point: &[Rational]) -> Rational {
        apply(&self.normal, point)
    }

    /// Strictly separates `a` and `b` under the closed-below convention.
    pub fn separates(&self, a: &[Rational], b: &[Rational]) -> bool {
        let (la, lb) = (self.value_at(a), self.value_at(b));
        (la <= self.level && self.level < lb) || (lb <= self.level && self.level < la)
    }
}

/// A primitive normal together with its level residues mod 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallFamily {
    normal: Vec<BigInt>,
    offsets: BTreeSet<Rational>,
}

impl WallFamily {
    /// Validates the normal (nonnegative, nonzero, primitive) and reduces
    /// the offsets mod 1.
    pub fn new(normal: Vec<BigInt>, offsets: impl IntoIterator<Item = Rational>) -> Result<Self> {
        if normal.iter().any(Signed::is_negative) {
            return Err(Error::Precondition("wall normals must be nonnegative".into()));
        }
        let g = normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !g.is_one() {
            return Err(Error::Precondition("wall normal is not primitive".into()));
        }
        Ok(Self {
            normal,
            offsets: offsets.into_iter().map(|o| frac_part(&o)).collect(),
        })
    }

    pub fn from_i64(normal: &[i64], offsets: &[Rational]) -> Result<Self> {
        Self::new(normal.iter().map(|&x| x.into()).collect(), offsets.iter().cloned())
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offsets(&self) -> &BTreeSet<Rational> {
        &self.offsets
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Every level of this family in the half-open interval `[lo, hi)`.
    fn levels_in(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for o in &self.offsets {
            let first = (lo - o).ceil();
            let mut level = first + o;
            while &level < hi {
                out.push(level.clone());
                level += Rational::one();
            }
        }
        out.sort();
        out
    }

    fn contains_level(&self, level: &Rational) -> bool {
        self.offsets.contains(&frac_part(level))
    }
}

/// A finite list of wall families with pairwise distinct normals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WallSet {
    families: BTreeMap<Vec<BigInt>, BTreeSet<Rational>>,
}

impl WallSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_families(families: impl IntoIterator<Item = WallFamily>) -> Self {
        let mut ws = Self::new();
        for f in families {
            ws.insert(f);
        }
        ws
    }

    /// Adds a family, merging offsets if the normal is already present.
    pub fn insert(&mut self, family: WallFamily) {
        self.families
            .entry(family.normal)
            .or_default()
            .extend(family.offsets);
    }

    pub fn families(&self) -> Vec<WallFamily> {
        self.families
            .iter()
            .map(|(n, o)| WallFamily {
                normal: n.clone(),
                offsets: o.clone(),
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.families.keys().next().map(Vec::len)
    }

    fn check_point(&self, p: &[Rational]) -> Result<()> {
        match self.dim() {
            Some(r) if r != p.len() => Err(Error::DimensionMismatch {
                expected: r,
                got: p.len(),
            }),
            _ => Ok(()),
        }
    }
}

fn apply(normal: &[BigInt], p: &[Rational]) -> Rational {
    normal
        .iter()
        .zip(p)
        .fold(Rational::zero(), |acc, (l, x)| acc + Rational::from_integer(l.clone()) * x)
}

/// Walls `Σ_i ord_i α_i ∈ Z` for each order tuple, written with primitive
/// normals: content `c` turns into offsets `{0, 1/c, …, (c-1)/c}`.
pub fn walls_from_resolution(orders: &[Vec<u64>]) -> Result<WallSet> {
    let mut ws = WallSet::new();
    for ord in orders {
        let ord: Vec<BigInt> = ord.iter().map(|&x| x.into()).collect();
        ws.insert(family_for_integral_levels(&ord, &BTreeSet::from([Rational::zero()]))?);
    }
    Ok(ws)
}

/// The family `{L(α) = β + L(n) : n ∈ Z^r}` for an integer `L` and levels
/// `β` drawn from `offsets + Z`, rewritten over `L / content(L)`.
fn family_for_integral_levels(l: &[BigInt], offsets: &BTreeSet<Rational>) -> Result<WallFamily> {
    let c = l.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if c.is_zero() {
        return Err(Error::ZeroVector);
    }
    let normal: Vec<BigInt> = l.iter().map(|x| x / &c).collect();
    let steps = c.to_u64().ok_or_else(|| Error::Precondition("content too large".into()))?;
    let cq = Rational::from_integer(c.clone());
    let mut out = BTreeSet::new();
    for o in offsets {
        for k in 0..steps {
            out.insert(frac_part(&((o + Rational::from_integer(k.into())) / &cq)));
        }
    }
    WallFamily::new(normal, out)
}

/// Wall set of the graph-embedding filtration of an arrangement: one
/// family `Σ_{i ∈ I_W} α_i ∈ Z` per dense edge `W`. With a factorization
/// the coordinates are the factors and the normals are the factor orders.
pub fn arrangement_walls(arr: &Arrangement) -> Result<WallSet> {
    let data = dense_resolution_data(arr)?;
    let orders: Vec<Vec<u64>> = data
        .iter()
        .map(|d| match &d.factor_orders {
            Some(ord) => ord.clone(),
            None => (0..arr.len())
                .map(|i| u64::from(d.flat.contains_index(i)))
                .collect(),
        })
        .collect();
    walls_from_resolution(&orders)
}

/// All walls through `p`.
pub fn localized_walls(ws: &WallSet, p: &[Rational]) -> Result<Vec<WallInstance>> {
    ws.check_point(p)?;
    let mut out: Vec<WallInstance> = ws
        .families()
        .into_iter()
        .filter_map(|f| {
            let level = apply(&f.normal, p);
            f.contains_level(&level).then(|| WallInstance {
                normal: f.normal.clone(),
                level,
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every wall separating `a` from `b`.
pub fn separating_walls(ws: &WallSet, a: &[Rational], b: &[Rational]) -> Result<Vec<WallInstance>> {
    ws.check_point(a)?;
    ws.check_point(b)?;
    let mut out = Vec::new();
    for f in ws.families() {
        let (la, lb) = (apply(&f.normal, a), apply(&f.normal, b));
        let (lo, hi) = if la <= lb { (la, lb) } else { (lb, la) };
        for level in f.levels_in(&lo, &hi) {
            out.push(WallInstance {
                normal: f.normal.clone(),
                level,
            });
        }
    }
    out.sort();
    Ok(out)
}

pub fn same_chamber(ws: &WallSet, a: &[Rational], b: &[Rational]) -> Result<bool> {
    Ok(separating_walls(ws, a, b)?.is_empty())
}

/// Walls crossed by a generic segment between two chambers, in crossing
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberPath {
    /// Perturbed start point, in the chamber of the requested start.
    pub start: Vec<Rational>,
    /// Perturbed end point, in the chamber of the requested end.
    pub end: Vec<Rational>,
    pub walls: Vec<WallInstance>,
    /// Segment parameters in `(0, 1)` at which each wall is crossed.
    pub crossings: Vec<Rational>,
}

impl ChamberPath {
    pub fn point_at(&self, t: &Rational) -> Vec<Rational> {
        self.start
            .iter()
            .zip(&self.end)
            .map(|(a, b)| a + (b - a) * t)
            .collect()
    }

    /// The endpoints and the midpoints between consecutive crossings: one
    /// point in every chamber the segment visits.
    pub fn waypoints(&self) -> Vec<Vec<Rational>> {
        let mut ts = vec![Rational::zero()];
        ts.extend(self.crossings.iter().cloned());
        ts.push(Rational::one());
        let mut out = vec![self.start.clone()];
        for w in ts[1..ts.len() - 1].windows(2) {
            out.push(self.point_at(&((&w[0] + &w[1]) / Rational::from_integer(2.into()))));
        }
        if !self.crossings.is_empty() {
            out.push(self.end.clone());
        }
        out
    }
}

const PERTURBATION_ROUNDS: u32 = 96;

/// Walls crossed, in order, by the segment between deterministic
/// perturbations of `a` and `b`.
///
/// The endpoints are pushed down by `ε (1, 1/q, 1/q², …)` and
/// `ε (…, 1/q², 1/q, 1)` respectively, where `q` is the least prime above
/// every normal entry and offset denominator. Since every normal is
/// nonnegative this lowers every wall value and keeps a point that sits on
/// a wall inside its own (closed-below) chamber. `ε` starts at
/// `1 / (4 q Σ_i max L_i)` and is halved until both perturbed points stay in
/// their chambers, lie off every wall, and the segment meets the walls at
/// pairwise distinct parameters.
pub fn chamber_path(ws: &WallSet, a: &[Rational], b: &[Rational]) -> Result<ChamberPath> {
    ws.check_point(a)?;
    ws.check_point(b)?;
    if a == b {
        return Err(Error::Precondition("chamber path needs distinct endpoints".into()));
    }
    let r = a.len();
    let families = ws.families();
    let mut bound = BigInt::from(2);
    let mut weight = BigInt::one();
    for f in &families {
        for x in &f.normal {
            bound = bound.max(x.clone());
        }
        for o in &f.offsets {
            bound = bound.max(o.denom().clone());
        }
        weight += f.normal.iter().fold(BigInt::zero(), |acc, x| acc.max(x.clone()));
    }
    let prime = next_prime_above(&bound);
    let qp = Rational::from_integer(prime.clone());
    let dir_a: Vec<Rational> = (0..r).map(|i| Rational::one() / num_traits::pow(qp.clone(), i)).collect();
    let dir_b: Vec<Rational> = dir_a.iter().rev().cloned().collect();
    let mut eps = Rational::new(BigInt::one(), BigInt::from(4) * &prime * weight);
    for _ in 0..PERTURBATION_ROUNDS {
        let a2: Vec<Rational> = a.iter().zip(&dir_a).map(|(x, d)| x - &eps * d).collect();
        let b2: Vec<Rational> = b.iter().zip(&dir_b).map(|(x, d)| x - &eps * d).collect();
        if let Some(path) = try_path(ws, a, b, a2, b2)? {
            return Ok(path);
        }
        eps /= Rational::from_integer(2.into());
    }
    Err(Error::ScheduleExhausted(
        "no generic perturbation found for the chamber path".into(),
    ))
}

fn try_path(
    ws: &WallSet,
    a: &[Rational],
    b: &[Rational],
    a2: Vec<Rational>,
    b2: Vec<Rational>,
) -> Result<Option<ChamberPath>> {
    if !same_chamber(ws, a, &a2)? || !same_chamber(ws, b, &b2)? {
        return Ok(None);
    }
    if !localized_walls(ws, &a2)?.is_empty() || !localized_walls(ws, &b2)?.is_empty() {
        return Ok(None);
    }
    let mut crossings: Vec<(Rational, WallInstance)> = Vec::new();
    for w in separating_walls(ws, &a2, &b2)? {
        let (la, lb) = (apply(&w.normal, &a2), apply(&w.normal, &b2));
        let t = (&w.level - &la) / (lb - la);
        crossings.push((t, w));
    }
    crossings.sort();
    if crossings.windows(2).any(|p| p[0].0 == p[1].0) {
        return Ok(None);
    }
    Ok(Some(ChamberPath {
        start: a2,
        end: b2,
        crossings: crossings.iter().map(|(t, _)| t.clone()).collect(),
        walls: crossings.into_iter().map(|(_, w)| w).collect(),
    }))
}

fn next_prime_above(n: &BigInt) -> BigInt {
    let mut p = n + 1;
    loop {
        let mut d = BigInt::from(2);
        let mut prime = true;
        while &d * &d <= p {
            if (&p % &d).is_zero() {
                prime = false;
                break;
            }
            d += 1;
        }
        if prime {
            return p;
        }
        p += 1;
    }
}

/// Extends walls of a filtration known on the nonnegative orthant to all of
/// `R^r`: each family `L` contributes `L^I` (coordinates outside `I`
/// zeroed) for every `I` with `L^I ≠ 0`, with levels `β + L^I(Z^r)`.
pub fn extend_restricted_walls(ws: &WallSet) -> Result<WallSet> {
    let mut out = WallSet::new();
    for f in ws.families() {
        let support: Vec<usize> = (0..f.dim()).filter(|&i| !f.normal[i].is_zero()).collect();
        for mask in 1u64..(1u64 << support.len()) {
            let mut restricted = vec![BigInt::zero(); f.dim()];
            for (bit, &i) in support.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    restricted[i] = f.normal[i].clone();
                }
            }
            out.insert(family_for_integral_levels(&restricted, &f.offsets)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};
    use crate::fixtures;

    fn diagonal() -> WallSet {
        extend_restricted_walls(&walls_from_resolution(&[vec![1, 1]]).unwrap()).unwrap()
    }

    fn fam(normal: &[i64], offsets: &[Rational]) -> WallFamily {
        WallFamily::from_i64(normal, offsets).unwrap()
    }

    #[test]
    fn from_resolution() {
        let ws = arrangement_walls(&fixtures::three_lines()).unwrap();
        let expected = WallSet::from_families([
            fam(&[1, 0, 0], &[qi(0)]),
            fam(&[0, 1, 0], &[qi(0)]),
            fam(&[0, 0, 1], &[qi(0)]),
            fam(&[1, 1, 1], &[qi(0)]),
        ]);
        assert_eq!(ws, expected);
        assert_eq!(
            walls_from_resolution(&[vec![1, 1]]).unwrap(),
            WallSet::from_families([fam(&[1, 1], &[qi(0)])])
        );
        assert_eq!(
            walls_from_resolution(&[vec![2, 2]]).unwrap(),
            WallSet::from_families([fam(&[1, 1], &[qi(0), q(1, 2)])])
        );
        assert_eq!(walls_from_resolution(&[vec![0, 0]]), Err(Error::ZeroVector));
    }

    #[test]
    fn family_validation() {
        assert!(WallFamily::from_i64(&[1, -1], &[qi(0)]).is_err());
        assert!(WallFamily::from_i64(&[2, 4], &[qi(0)]).is_err());
        let f = WallFamily::from_i64(&[1], &[q(7, 2), q(-1, 3)]).unwrap();
        assert_eq!(f.offsets().iter().cloned().collect::<Vec<_>>(), vec![q(1, 2), q(2, 3)]);
    }

    #[test]
    fn localized() {
        let ws = diagonal();
        assert_eq!(localized_walls(&ws, &[qi(0), qi(0)]).unwrap().len(), 3);
        let w = localized_walls(&ws, &[q(1, 2), q(1, 2)]).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].level, qi(1));
        assert!(localized_walls(&ws, &[q(1, 3), q(1, 3)]).unwrap().is_empty());
    }

    #[test]
    fn separation() {
        let ws = diagonal();
        let a = [q(9, 10), q(9, 10)];
        let b = [q(11, 10), q(11, 10)];
        assert_eq!(separating_walls(&ws, &a, &b).unwrap().len(), 3);
        assert!(!same_chamber(&ws, &a, &b).unwrap());
        let a = [q(1, 5), q(3, 10)];
        let b = [q(2, 5), q(1, 10)];
        assert!(separating_walls(&ws, &a, &b).unwrap().is_empty());
        assert!(same_chamber(&ws, &a, &b).unwrap());
        assert!(same_chamber(&ws, &a, &a).unwrap());
        // closed below: a point on a wall shares the chamber just below it
        assert!(same_chamber(&ws, &[qi(1), q(1, 2)], &[q(9, 10), q(1, 2)]).unwrap());
    }

    #[test]
    fn paths() {
        let ws = diagonal();
        let p = chamber_path(&ws, &[q(1, 10), q(1, 10)], &[q(3, 2), q(3, 2)]).unwrap();
        assert_eq!(p.walls.len(), 4);
        assert_eq!(p.walls[0], WallInstance { normal: vec![1.into(), 1.into()], level: qi(1) });
        let middle: BTreeSet<_> = p.walls[1..].iter().cloned().collect();
        let expected: BTreeSet<_> = [(&[1, 1], 2), (&[1, 0], 1), (&[0, 1], 1)]
            .iter()
            .map(|(n, l)| WallInstance { normal: n.iter().map(|&x| x.into()).collect(), level: qi(*l) })
            .collect();
        assert_eq!(middle, expected);
        let p = chamber_path(&ws, &[q(1, 5), q(3, 10)], &[q(2, 5), q(1, 10)]).unwrap();
        assert!(p.walls.is_empty());
        let p = chamber_path(&ws, &[q(1, 2), q(1, 10)], &[q(1, 2), q(3, 5)]).unwrap();
        assert_eq!(p.walls.len(), 1);
        assert!(chamber_path(&ws, &[qi(0), qi(0)], &[qi(0), qi(0)]).is_err());
        // endpoints on walls stay in their chambers
        let p = chamber_path(&ws, &[qi(0), qi(0)], &[qi(1), qi(1)]).unwrap();
        assert_eq!(p.walls.len(), 4);
        assert_eq!(p.walls.len(), separating_walls(&ws, &[qi(0), qi(0)], &[qi(1), qi(1)]).unwrap().len());
    }

    #[test]
    fn extension() {
        let ws = diagonal();
        assert_eq!(
            ws,
            WallSet::from_families([
                fam(&[1, 1], &[qi(0)]),
                fam(&[1, 0], &[qi(0)]),
                fam(&[0, 1], &[qi(0)]),
            ])
        );
        let single = WallSet::from_families([fam(&[1, 0], &[qi(0)])]);
        assert_eq!(extend_restricted_walls(&single).unwrap(), single);
        let skew = WallSet::from_families([fam(&[2, 1], &[qi(0)])]);
        assert_eq!(
            extend_restricted_walls(&skew).unwrap(),
            WallSet::from_families([
                fam(&[2, 1], &[qi(0)]),
                fam(&[1, 0], &[qi(0), q(1, 2)]),
                fam(&[0, 1], &[qi(0)]),
            ])
        );
        assert_eq!(extend_restricted_walls(&ws).unwrap(), ws);
    }
}
