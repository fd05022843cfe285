//! Hyperplane arrangements with multiplicities and their intersection
//! lattices.
//!
//! Flats are identified by their closed index sets: `I_W = {i : W ⊆ D_i}`.
//! Subspace bases are derived on demand and never used for identity.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{primitive_normal, MultiPoly, QMatrix, Rational};
use crate::error::{Error, Result};

/// A finite arrangement of affine hyperplanes `f_i = 0` in `Q^n`, each with a
/// positive multiplicity `d_i`, optionally grouped into factors
/// `h_j = ∏_i f_i^{d_ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    normals: Vec<Vec<Rational>>,
    constants: Vec<Rational>,
    mults: Vec<u64>,
    /// Row `j` lists the exponents of every hyperplane in factor `h_j`.
    factors: Option<Vec<Vec<u64>>>,
    name: Option<String>,
}

/// A flat of a central arrangement, keyed by its closed index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    codim: usize,
    indices: Vec<usize>,
}

impl Flat {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn is_ambient(&self) -> bool {
        self.indices.is_empty()
    }

    /// `self ⊆ other` as subspaces, i.e. `I_other ⊆ I_self`.
    pub fn is_subspace_of(&self, other: &Flat) -> bool {
        other.indices.iter().all(|i| self.indices.binary_search(i).is_ok())
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

impl Arrangement {
    /// A central arrangement.
    pub fn new(dim: usize, normals: Vec<Vec<Rational>>, mults: Vec<u64>) -> Result<Self> {
        let constants = vec![Rational::zero(); normals.len()];
        Self::affine(dim, normals, constants, mults)
    }

    /// An arrangement of affine hyperplanes `normal · x + constant = 0`.
    pub fn affine(
        dim: usize,
        normals: Vec<Vec<Rational>>,
        constants: Vec<Rational>,
        mults: Vec<u64>,
    ) -> Result<Self> {
        if normals.len() != mults.len() || normals.len() != constants.len() {
            return Err(Error::InvalidArrangement(format!(
                "{} forms but {} multiplicities",
                normals.len(),
                mults.len()
            )));
        }
        for (i, n) in normals.iter().enumerate() {
            if n.len() != dim {
                return Err(Error::InvalidArrangement(format!(
                    "form {} has {} coefficients, expected {dim}",
                    i + 1,
                    n.len()
                )));
            }
            if n.iter().all(Zero::is_zero) {
                return Err(Error::InvalidArrangement(format!("form {} is zero", i + 1)));
            }
        }
        if let Some(i) = mults.iter().position(|&d| d == 0) {
            return Err(Error::InvalidArrangement(format!(
                "multiplicity of form {} must be positive",
                i + 1
            )));
        }
        let keys: Vec<Vec<BigInt>> = normals
            .iter()
            .zip(&constants)
            .map(|(n, c)| {
                let mut v = n.clone();
                v.push(c.clone());
                primitive_normal(&v).expect("nonzero form")
            })
            .collect();
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                if keys[i] == keys[j] {
                    return Err(Error::ProportionalForms(i + 1, j + 1));
                }
            }
        }
        Ok(Self {
            dim,
            normals,
            constants,
            mults,
            factors: None,
            name: None,
        })
    }

    /// Central arrangement from integer normals.
    pub fn from_i64(dim: usize, normals: &[&[i64]], mults: &[u64]) -> Result<Self> {
        let normals = normals
            .iter()
            .map(|n| n.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::new(dim, normals, mults.to_vec())
    }

    /// Attaches a factorization: `factors[j][i] = d_ij`.
    pub fn with_factors(mut self, factors: Vec<Vec<u64>>) -> Result<Self> {
        let r = self.len();
        if factors.is_empty() {
            return Err(Error::InvalidArrangement("factor matrix has no rows".into()));
        }
        for (j, row) in factors.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidArrangement(format!(
                    "factor row {} has {} entries, expected {r}",
                    j + 1,
                    row.len()
                )));
            }
        }
        for i in 0..r {
            let total: u64 = factors.iter().map(|row| row[i]).sum();
            if total == 0 {
                return Err(Error::InvalidArrangement(format!(
                    "form {} appears in no factor",
                    i + 1
                )));
            }
            if total != self.mults[i] {
                return Err(Error::InvalidArrangement(format!(
                    "factor exponents of form {} sum to {total}, but its multiplicity is {}",
                    i + 1,
                    self.mults[i]
                )));
            }
        }
        self.factors = Some(factors);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of distinct hyperplanes.
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[Vec<Rational>] {
        &self.normals
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn mults(&self) -> &[u64] {
        &self.mults
    }

    pub fn factors(&self) -> Option<&[Vec<u64>]> {
        self.factors.as_deref()
    }

    /// Total degree `d = Σ d_i`.
    pub fn degree(&self) -> u64 {
        self.mults.iter().sum()
    }

    pub fn is_central(&self) -> bool {
        self.constants.iter().all(Zero::is_zero)
    }

    fn require_central(&self) -> Result<()> {
        if self.is_central() {
            Ok(())
        } else {
            Err(Error::NotCentral)
        }
    }

    fn normal_matrix(&self, indices: &[usize]) -> QMatrix {
        let rows: Vec<Vec<Rational>> = indices.iter().map(|&i| self.normals[i].clone()).collect();
        QMatrix::from_rows(&rows, self.dim)
    }

    /// Rank of the normals indexed by `indices`.
    pub fn rank_of(&self, indices: &[usize]) -> usize {
        self.normal_matrix(indices).rank()
    }

    /// The flat cut out by the hyperplanes in `indices`, with its closed
    /// index set.
    pub fn closure(&self, indices: &[usize]) -> Flat {
        let (rref, pivots) = self.normal_matrix(indices).rref();
        let closed = (0..self.len())
            .filter(|&j| in_row_space(&rref, &pivots, &self.normals[j]))
            .collect();
        Flat {
            codim: pivots.len(),
            indices: closed,
        }
    }

    pub fn ambient_flat(&self) -> Flat {
        Flat {
            codim: 0,
            indices: Vec::new(),
        }
    }

    /// The smallest flat, the intersection of all hyperplanes.
    pub fn center(&self) -> Flat {
        let all: Vec<usize> = (0..self.len()).collect();
        self.closure(&all)
    }

    /// Basis of the subspace `W` (kernel of the normals in `I_W`).
    pub fn flat_basis(&self, flat: &Flat) -> Vec<Vec<Rational>> {
        if flat.indices.is_empty() {
            let id = QMatrix::identity(self.dim);
            return (0..self.dim).map(|i| id.row(i).to_vec()).collect();
        }
        self.normal_matrix(&flat.indices).kernel_basis()
    }

    pub fn intersection_lattice(&self) -> Result<IntersectionLattice> {
        self.require_central()?;
        let mut seen: BTreeSet<Flat> = BTreeSet::new();
        let mut frontier = vec![self.ambient_flat()];
        seen.insert(self.ambient_flat());
        while let Some(flat) = frontier.pop() {
            for i in 0..self.len() {
                if flat.contains_index(i) {
                    continue;
                }
                let mut idx = flat.indices.clone();
                idx.push(i);
                let next = self.closure(&idx);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        Ok(IntersectionLattice::from_flats(seen.into_iter().collect()))
    }

    /// `χ_A(t) = Σ_X μ(0̂, X) t^{dim X}`.
    pub fn char_poly(&self) -> Result<MultiPoly> {
        let lattice = self.intersection_lattice()?;
        Ok(lattice.char_poly(self.dim))
    }

    /// Euler characteristic of the complement, `χ_A(1)`.
    pub fn complement_euler(&self) -> Result<Rational> {
        Ok(self.char_poly()?.eval(&[Rational::one()]))
    }

    /// Euler characteristic of the projectivized complement,
    /// `(χ_A(t) / (t - 1))` at `t = 1`. The empty arrangement returns `n`,
    /// the Euler characteristic of the whole projective space.
    pub fn proj_complement_euler(&self) -> Result<Rational> {
        if self.is_empty() {
            return Ok(Rational::from_integer(self.dim.into()));
        }
        let chi = self.char_poly()?;
        // χ(1) = 0, so the quotient by (t - 1) evaluated at 1 is χ'(1).
        Ok(chi
            .terms()
            .map(|(e, c)| c * Rational::from_integer(e[0].into()))
            .fold(Rational::zero(), |a, b| a + b))
    }

    /// The reduced arrangement of traces `{D_i ∩ W' : i ∈ I_W \ I_W'}` in the
    /// quotient `W' / W`.
    pub fn interval_arrangement(&self, lower: &Flat, upper: &Flat) -> Result<Arrangement> {
        self.require_central()?;
        let nested = upper.indices.len() < lower.indices.len()
            && upper.indices.iter().all(|i| lower.contains_index(*i));
        if !nested {
            return Err(Error::NotNested);
        }
        let basis = self.flat_basis(upper);
        let traces: Vec<Vec<Rational>> = lower
            .indices
            .iter()
            .filter(|i| !upper.contains_index(**i))
            .map(|&i| restrict_form(&self.normals[i], &basis))
            .collect();
        let (rref, pivots) = QMatrix::from_rows(&traces, basis.len()).rref();
        debug_assert_eq!(pivots.len(), lower.codim - upper.codim);
        let _ = rref;
        let projected: Vec<Vec<Rational>> = traces
            .iter()
            .map(|g| pivots.iter().map(|&p| g[p].clone()).collect())
            .collect();
        reduced(pivots.len(), projected)
    }

    /// The reduced arrangement of traces `{D_i ∩ W : i ∉ I_W}` inside `W`.
    pub fn restriction_arrangement(&self, flat: &Flat) -> Result<Arrangement> {
        self.require_central()?;
        if flat.is_ambient() {
            return Ok(self.clone());
        }
        let basis = self.flat_basis(flat);
        let traces: Vec<Vec<Rational>> = (0..self.len())
            .filter(|i| !flat.contains_index(*i))
            .map(|i| restrict_form(&self.normals[i], &basis))
            .collect();
        reduced(basis.len(), traces)
    }

    /// `{0}` is a flat: the normals span the dual space.
    pub fn is_essential(&self) -> bool {
        let all: Vec<usize> = (0..self.len()).collect();
        self.rank_of(&all) == self.dim
    }

    /// No linear change of coordinates splits the defining polynomial into
    /// factors in disjoint variables; equivalently the matroid of normals is
    /// connected.
    pub fn is_indecomposable(&self) -> Result<bool> {
        self.require_central()?;
        if self.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        let all: Vec<usize> = (0..self.len()).collect();
        Ok(self.is_connected(&all))
    }

    /// Matroid connectivity of a subset of the normals.
    pub fn is_connected(&self, indices: &[usize]) -> bool {
        if indices.len() <= EXHAUSTIVE_LIMIT {
            self.is_connected_exhaustive(indices)
        } else {
            self.matroid_components(indices).len() <= 1
        }
    }

    /// Direct check: no bipartition into nonempty parts has additive rank.
    pub fn is_connected_exhaustive(&self, indices: &[usize]) -> bool {
        let m = indices.len();
        if m <= 1 {
            return true;
        }
        let total = self.rank_of(indices);
        // element 0 always sits in the first part; masks cover the rest
        for mask in 0u64..(1u64 << (m - 1)) - 1 {
            let mut first = vec![indices[0]];
            let mut second = Vec::new();
            for (bit, &i) in indices[1..].iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    first.push(i);
                } else {
                    second.push(i);
                }
            }
            if self.rank_of(&first) + self.rank_of(&second) == total {
                return false;
            }
        }
        true
    }

    /// Connected components of the matroid on `indices`, from the
    /// fundamental circuits of a greedy basis.
    pub fn matroid_components(&self, indices: &[usize]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..indices.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while p[root] != root {
                root = p[root];
            }
            p[x] = root;
            root
        }
        let mut basis: Vec<usize> = Vec::new();
        for (pos, &i) in indices.iter().enumerate() {
            let mut trial: Vec<usize> = basis.iter().map(|&b| indices[b]).collect();
            trial.push(i);
            if self.rank_of(&trial) == trial.len() {
                basis.push(pos);
                continue;
            }
            // coordinates of normal i in the current basis
            let basis_rows: Vec<Vec<Rational>> =
                basis.iter().map(|&b| self.normals[indices[b]].clone()).collect();
            let coords = solve_in_span(&basis_rows, &self.normals[i], self.dim);
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    let (a, b) = (find(&mut parent, pos), find(&mut parent, basis[k]));
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for pos in 0..indices.len() {
            let root = find(&mut parent, pos);
            groups.entry(root).or_default().push(indices[pos]);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Flats `W` of codimension at least one whose localized arrangement is
    /// indecomposable in `Q^n / W`.
    pub fn dense_edges(&self) -> Result<Vec<Flat>> {
        let lattice = self.intersection_lattice()?;
        Ok(lattice
            .flats()
            .iter()
            .filter(|f| !f.is_ambient() && self.is_connected(&f.indices))
            .cloned()
            .collect())
    }

    /// The central arrangement of hyperplanes through `point`, translated so
    /// that `point` becomes the origin.
    pub fn localize_at_point(&self, point: &[Rational]) -> Result<Arrangement> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: point.len(),
            });
        }
        let through: Vec<usize> = (0..self.len())
            .filter(|&i| {
                let v = self.normals[i]
                    .iter()
                    .zip(point)
                    .fold(self.constants[i].clone(), |acc, (a, x)| acc + a * x);
                v.is_zero()
            })
            .collect();
        if through.is_empty() {
            return Err(Error::PointOffDivisor);
        }
        let normals = through.iter().map(|&i| self.normals[i].clone()).collect();
        let mults = through.iter().map(|&i| self.mults[i]).collect();
        let mut out = Arrangement::new(self.dim, normals, mults)?;
        if let Some(f) = &self.factors {
            out.factors = Some(
                f.iter()
                    .map(|row| through.iter().map(|&i| row[i]).collect())
                    .collect(),
            );
        }
        out.name = self.name.clone();
        Ok(out)
    }
}

/// Above this many elements connectivity switches from the bipartition
/// sweep to fundamental circuits.
const EXHAUSTIVE_LIMIT: usize = 16;

fn in_row_space(rref: &QMatrix, pivots: &[usize], v: &[Rational]) -> bool {
    let mut w = v.to_vec();
    for (row, &p) in pivots.iter().enumerate() {
        if w[p].is_zero() {
            continue;
        }
        let f = w[p].clone();
        for (c, x) in w.iter_mut().enumerate() {
            *x -= &f * &rref[(row, c)];
        }
    }
    w.iter().all(Zero::is_zero)
}

/// Coefficients of `v` as a combination of the independent `rows`.
fn solve_in_span(rows: &[Vec<Rational>], v: &[Rational], dim: usize) -> Vec<Rational> {
    // solve Σ c_k rows_k = v through the transposed augmented system
    let k = rows.len();
    let mut aug: Vec<Vec<Rational>> = (0..dim)
        .map(|c| {
            let mut row: Vec<Rational> = rows.iter().map(|r| r[c].clone()).collect();
            row.push(v[c].clone());
            row
        })
        .collect();
    if aug.is_empty() {
        return Vec::new();
    }
    let m = QMatrix::from_rows(&std::mem::take(&mut aug), k + 1);
    let (r, pivots) = m.rref();
    let mut coords = vec![Rational::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        if p < k {
            coords[p] = r[(row, k)].clone();
        }
    }
    coords
}

fn restrict_form(normal: &[Rational], basis: &[Vec<Rational>]) -> Vec<Rational> {
    basis
        .iter()
        .map(|b| {
            normal
                .iter()
                .zip(b)
                .fold(Rational::zero(), |acc, (a, x)| acc + a * x)
        })
        .collect()
}

fn reduced(dim: usize, normals: Vec<Vec<Rational>>) -> Result<Arrangement> {
    let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut kept = Vec::new();
    for n in normals {
        let key = primitive_normal(&n)?;
        if seen.insert(key) {
            kept.push(n);
        }
    }
    let mults = vec![1; kept.len()];
    Arrangement::new(dim, kept, mults)
}

/// All flats of a central arrangement, ordered by codimension and then by
/// index set, with Möbius values `μ(0̂, X)` measured from the ambient flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    flats: Vec<Flat>,
    mobius: Vec<BigInt>,
}

impl IntersectionLattice {
    fn from_flats(mut flats: Vec<Flat>) -> Self {
        flats.sort();
        let mut mobius: Vec<BigInt> = Vec::with_capacity(flats.len());
        for (x, fx) in flats.iter().enumerate() {
            if x == 0 {
                mobius.push(BigInt::one());
                continue;
            }
            let below: BigInt = (0..x)
                .filter(|&y| fx.is_subspace_of(&flats[y]))
                .map(|y| mobius[y].clone())
                .sum();
            mobius.push(-below);
        }
        Self { flats, mobius }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Flats other than the ambient space.
    pub fn proper_flats(&self) -> &[Flat] {
        &self.flats[1..]
    }

    pub fn mobius(&self, flat: &Flat) -> Option<&BigInt> {
        self.position(flat).map(|i| &self.mobius[i])
    }

    pub fn mobius_values(&self) -> &[BigInt] {
        &self.mobius
    }

    pub fn position(&self, flat: &Flat) -> Option<usize> {
        self.flats.binary_search(flat).ok()
    }

    pub fn find(&self, indices: &[usize]) -> Option<&Flat> {
        self.flats.iter().find(|f| f.indices == indices)
    }

    pub fn char_poly(&self, dim: usize) -> MultiPoly {
        MultiPoly::from_terms(
            1,
            self.flats.iter().zip(&self.mobius).map(|(f, m)| {
                (vec![(dim - f.codim) as u32], Rational::from_integer(m.clone()))
            }),
        )
    }
}
