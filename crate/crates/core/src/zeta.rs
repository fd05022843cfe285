//! Topological zeta functions of central arrangements.
//!
//! Zeta functions are computed on the maximal wonderful model, the
//! iterated blow-up of every proper flat. Its boundary strata are indexed
//! by chains of flats `W_1 ⊊ ⋯ ⊊ W_k`; the open stratum of a chain is a
//! product of projectivized complements of the interval arrangements
//! `W_{j+1} / W_j`, times the complement of the restriction to `W_1`.
//! The exceptional divisor over `W` has `N_W = Σ_{i ∈ I_W} d_i` and
//! `ν_W = codim W`.
//!
//! Candidate poles, on the other hand, come from dense edges only. Every
//! factor contributed by a non-dense flat cancels after normalization.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{divides_linear, AffineForm, MultiPoly, Rational};
use crate::arrangement::{Arrangement, Flat, IntersectionLattice};
use crate::error::{Error, Result};

/// Discrepancy and multiplicity data of the exceptional divisor over a flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionDatum {
    pub flat: Flat,
    /// `N = Σ_{i ∈ I_W} d_i`.
    pub order: u64,
    /// `ν = codim W`.
    pub nu: u64,
    /// `(Σ_{i ∈ I_W} d_ij)_j` when the arrangement carries a factorization.
    pub factor_orders: Option<Vec<u64>>,
}

impl ResolutionDatum {
    /// `N s + ν`, canonicalized.
    pub fn univariate_form(&self) -> AffineForm {
        AffineForm::from_orders(&[self.order], self.nu)
    }

    /// `Σ_j ord_j s_j + ν`, canonicalized.
    pub fn multivariate_form(&self) -> Option<AffineForm> {
        self.factor_orders
            .as_ref()
            .map(|ord| AffineForm::from_orders(ord, self.nu))
    }

    /// `-ν / N`.
    pub fn candidate_pole(&self) -> Rational {
        -Rational::new(self.nu.into(), self.order.into())
    }
}

pub fn resolution_datum(arr: &Arrangement, flat: &Flat) -> Result<ResolutionDatum> {
    if flat.is_ambient() {
        return Err(Error::AmbientFlat);
    }
    let order = flat.indices().iter().map(|&i| arr.mults()[i]).sum();
    let factor_orders = arr.factors().map(|rows| {
        rows.iter()
            .map(|row| flat.indices().iter().map(|&i| row[i]).sum())
            .collect()
    });
    Ok(ResolutionDatum {
        flat: flat.clone(),
        order,
        nu: flat.codim() as u64,
        factor_orders,
    })
}

/// Resolution data of every dense edge, in lattice order.
pub fn dense_resolution_data(arr: &Arrangement) -> Result<Vec<ResolutionDatum>> {
    arr.dense_edges()?
        .iter()
        .map(|w| resolution_datum(arr, w))
        .collect()
}

/// `{-ν_W / N_W : W dense}`, deduplicated, in decreasing order.
pub fn candidate_poles(arr: &Arrangement) -> Result<Vec<Rational>> {
    let mut poles: Vec<Rational> = dense_resolution_data(arr)?
        .iter()
        .map(ResolutionDatum::candidate_pole)
        .collect();
    poles.sort_by(|a, b| b.cmp(a));
    poles.dedup();
    Ok(poles)
}

/// `{Σ_j ord_{W,j} s_j + ν_W : W dense}`, canonicalized and sorted.
pub fn candidate_hyperplanes(arr: &Arrangement) -> Result<Vec<AffineForm>> {
    if arr.factors().is_none() {
        return Err(Error::MissingFactors);
    }
    let mut forms: Vec<AffineForm> = dense_resolution_data(arr)?
        .iter()
        .filter_map(ResolutionDatum::multivariate_form)
        .collect();
    forms.sort();
    forms.dedup();
    Ok(forms)
}

/// A strictly increasing chain of proper flats, smallest subspace first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain(pub Vec<Flat>);

impl Chain {
    pub fn flats(&self) -> &[Flat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn sort_key(&self) -> (usize, Vec<Vec<usize>>) {
        (
            self.0.len(),
            self.0.iter().map(|f| f.indices().to_vec()).collect(),
        )
    }
}

/// All nonempty chains of proper flats, or only those beginning at `start`,
/// ordered by length and then lexicographically by index sets.
pub fn enumerate_chains(lattice: &IntersectionLattice, start: Option<&Flat>) -> Vec<Chain> {
    let proper = lattice.proper_flats();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = proper
        .iter()
        .enumerate()
        .filter(|(_, f)| start.map_or(true, |s| *f == s))
        .map(|(i, _)| vec![i])
        .collect();
    while let Some(chain) = stack.pop() {
        let last = &proper[*chain.last().unwrap()];
        for (j, f) in proper.iter().enumerate() {
            if f != last && last.is_subspace_of(f) {
                let mut next = chain.clone();
                next.push(j);
                stack.push(next);
            }
        }
        out.push(Chain(chain.iter().map(|&i| proper[i].clone()).collect()));
    }
    out.sort_by_key(Chain::sort_key);
    out
}

/// One summand `coefficient / ∏ denominators` of a zeta function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTerm {
    pub coefficient: Rational,
    /// Canonical forms, sorted, with repetition.
    pub denominators: Vec<AffineForm>,
}

impl ZetaTerm {
    /// Builds a term, moving the scalar content of every form into the
    /// coefficient.
    pub fn new(coefficient: Rational, forms: impl IntoIterator<Item = AffineForm>) -> Self {
        let mut coefficient = coefficient;
        let mut denominators = Vec::new();
        for f in forms {
            let (c, canon) = f.canonical();
            coefficient /= c;
            denominators.push(canon);
        }
        denominators.sort();
        Self {
            coefficient,
            denominators,
        }
    }

    fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let mut v = self.coefficient.clone();
        for d in &self.denominators {
            let x = d.eval(point);
            if x.is_zero() {
                return None;
            }
            v /= x;
        }
        Some(v)
    }
}

/// An exact rational function in `k` pole variables, kept both as a sum of
/// terms with linear denominators and in normalized form
/// `numerator / ∏ ℓ^{m_ℓ}` with no common linear factor.
#[derive(Clone, Debug)]
pub struct ZetaFunction {
    nvars: usize,
    terms: Vec<ZetaTerm>,
    numerator: MultiPoly,
    denominator: BTreeMap<AffineForm, u32>,
}

impl PartialEq for ZetaFunction {
    /// Equality as rational functions.
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.numerator == other.numerator
            && self.denominator == other.denominator
    }
}

impl Eq for ZetaFunction {}

impl ZetaFunction {
    /// Sums the terms and normalizes.
    pub fn from_terms(nvars: usize, terms: Vec<ZetaTerm>) -> Result<Self> {
        let terms: Vec<ZetaTerm> = terms
            .into_iter()
            .filter(|t| !t.coefficient.is_zero())
            .collect();
        for t in &terms {
            for d in &t.denominators {
                if d.nvars() != nvars {
                    return Err(Error::DimensionMismatch {
                        expected: nvars,
                        got: d.nvars(),
                    });
                }
            }
        }
        let (numerator, denominator) = normalize_terms(nvars, &terms)?;
        Ok(Self {
            nvars,
            terms,
            numerator,
            denominator,
        })
    }

    /// Reassembles a zeta function from stored parts, checking that the
    /// normalized form matches the terms.
    pub fn from_parts(
        nvars: usize,
        terms: Vec<ZetaTerm>,
        numerator: MultiPoly,
        denominator: BTreeMap<AffineForm, u32>,
    ) -> Result<Self> {
        let z = Self::from_terms(nvars, terms)?;
        if z.numerator != numerator || z.denominator != denominator {
            return Err(Error::Parse(
                "normalized form does not match the term list".into(),
            ));
        }
        Ok(z)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[ZetaTerm] {
        &self.terms
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<AffineForm, u32> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    /// Value of the normalized form, `None` on a polar hyperplane.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let mut den = Rational::one();
        for (f, &m) in &self.denominator {
            let x = f.eval(point);
            if x.is_zero() {
                return None;
            }
            den *= num_traits::pow(x, m as usize);
        }
        Some(self.numerator.eval(point) / den)
    }

    /// Value of the term sum, `None` if any term denominator vanishes.
    pub fn eval_terms(&self, point: &[Rational]) -> Option<Rational> {
        self.terms
            .iter()
            .try_fold(Rational::zero(), |acc, t| Some(acc + t.eval(point)?))
    }

    pub fn poles(&self) -> PoleReport {
        if self.nvars == 1 {
            let mut univariate: Vec<(Rational, u32)> = self
                .denominator
                .iter()
                .map(|(f, &m)| (f.root().expect("nonconstant form"), m))
                .collect();
            univariate.sort_by(|a, b| b.0.cmp(&a.0));
            PoleReport {
                univariate,
                multivariate: Vec::new(),
            }
        } else {
            PoleReport {
                univariate: Vec::new(),
                multivariate: self.denominator.iter().map(|(f, &m)| (f.clone(), m)).collect(),
            }
        }
    }

    /// Substitutes `s_j = w_j s` and renormalizes.
    pub fn specialize(&self, weights: &[u64]) -> Result<ZetaFunction> {
        if weights.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: weights.len(),
            });
        }
        let w: Vec<BigInt> = weights.iter().map(|&x| x.into()).collect();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                ZetaTerm::new(
                    t.coefficient.clone(),
                    t.denominators.iter().map(|d| d.specialize(&w)),
                )
            })
            .collect();
        ZetaFunction::from_terms(1, terms)
    }
}

impl fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string();
        if self.denominator.is_empty() {
            return f.write_str(&num);
        }
        let num = if self.numerator.terms().count() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den: String = self
            .denominator
            .iter()
            .map(|(form, &m)| {
                if m == 1 {
                    format!("({form})")
                } else {
                    format!("({form})^{m}")
                }
            })
            .collect();
        let den = if self.denominator.len() == 1 {
            den
        } else {
            format!("({den})")
        };
        write!(f, "{num}/{den}")
    }
}

/// Surviving poles of a normalized zeta function with their orders.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoleReport {
    /// Poles of a univariate zeta function, decreasing.
    pub univariate: Vec<(Rational, u32)>,
    /// Polar hyperplanes of a multivariate zeta function, in form order.
    pub multivariate: Vec<(AffineForm, u32)>,
}

impl PoleReport {
    pub fn pole_values(&self) -> Vec<Rational> {
        self.univariate.iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn hyperplanes(&self) -> Vec<AffineForm> {
        self.multivariate.iter().map(|(h, _)| h.clone()).collect()
    }
}

/// Puts the term sum over the least common denominator and cancels every
/// linear factor that divides the numerator.
fn normalize_terms(
    nvars: usize,
    terms: &[ZetaTerm],
) -> Result<(MultiPoly, BTreeMap<AffineForm, u32>)> {
    let mut lcd: BTreeMap<AffineForm, u32> = BTreeMap::new();
    for t in terms {
        for (f, m) in multiplicities(&t.denominators) {
            let e = lcd.entry(f).or_insert(0);
            *e = (*e).max(m);
        }
    }
    let mut numerator = MultiPoly::zero(nvars);
    for t in terms {
        let own = multiplicities(&t.denominators);
        let mut p = MultiPoly::constant(nvars, t.coefficient.clone());
        for (f, &m) in &lcd {
            let missing = m - own.get(f).copied().unwrap_or(0);
            if missing > 0 {
                p = &p * &f.to_poly().pow(missing);
            }
        }
        numerator = &numerator + &p;
    }
    if numerator.is_zero() {
        return Ok((numerator, BTreeMap::new()));
    }
    let mut denominator = BTreeMap::new();
    for (f, mut m) in lcd {
        while m > 0 && divides_linear(&f, &numerator)? {
            numerator = f
                .divide(&numerator)?
                .expect("divisibility already established");
            m -= 1;
        }
        if m > 0 {
            denominator.insert(f, m);
        }
    }
    Ok((numerator, denominator))
}

fn multiplicities(forms: &[AffineForm]) -> BTreeMap<AffineForm, u32> {
    let mut out = BTreeMap::new();
    for f in forms {
        *out.entry(f.clone()).or_insert(0) += 1;
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Variables {
    Univariate,
    Multivariate,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Scope {
    /// Fiber over the origin.
    Local,
    Global,
}

fn chain_zeta(arr: &Arrangement, vars: Variables, scope: Scope) -> Result<ZetaFunction> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    if arr.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    let nvars = match vars {
        Variables::Univariate => 1,
        Variables::Multivariate => arr.factors().ok_or(Error::MissingFactors)?.len(),
    };
    let lattice = arr.intersection_lattice()?;
    let ambient = arr.ambient_flat();
    let center = arr.center();
    let start = match scope {
        Scope::Local => Some(&center),
        Scope::Global => None,
    };

    let mut forms: HashMap<Flat, AffineForm> = HashMap::new();
    for w in lattice.proper_flats() {
        let datum = resolution_datum(arr, w)?;
        let form = match vars {
            Variables::Univariate => {
                AffineForm::new(vec![datum.order.into()], datum.nu.into())
            }
            Variables::Multivariate => AffineForm::new(
                datum
                    .factor_orders
                    .expect("factorization present")
                    .into_iter()
                    .map(BigInt::from)
                    .collect(),
                datum.nu.into(),
            ),
        };
        forms.insert(w.clone(), form);
    }

    let mut interval_cache: HashMap<(Flat, Flat), Rational> = HashMap::new();
    let mut interval_euler = |lower: &Flat, upper: &Flat| -> Result<Rational> {
        let key = (lower.clone(), upper.clone());
        if let Some(v) = interval_cache.get(&key) {
            return Ok(v.clone());
        }
        let factor = arr.interval_arrangement(lower, upper)?;
        if factor.is_empty() {
            return Err(Error::Precondition(
                "interval arrangement between nested flats is empty".into(),
            ));
        }
        let v = factor.proj_complement_euler()?;
        interval_cache.insert(key, v.clone());
        Ok(v)
    };

    let mut terms = Vec::new();
    if scope == Scope::Global {
        terms.push(ZetaTerm::new(arr.complement_euler()?, []));
    }
    for chain in enumerate_chains(&lattice, start) {
        let flats = chain.flats();
        let mut coefficient = match scope {
            Scope::Local => Rational::one(),
            Scope::Global => arr.restriction_arrangement(&flats[0])?.complement_euler()?,
        };
        for (j, lower) in flats.iter().enumerate() {
            let upper = flats.get(j + 1).unwrap_or(&ambient);
            coefficient *= interval_euler(lower, upper)?;
            if coefficient.is_zero() {
                break;
            }
        }
        if coefficient.is_zero() {
            continue;
        }
        terms.push(ZetaTerm::new(
            coefficient,
            flats.iter().map(|w| forms[w].clone()),
        ));
    }
    ZetaFunction::from_terms(nvars, terms)
}

/// Local topological zeta function at the origin.
pub fn local_zeta(arr: &Arrangement) -> Result<ZetaFunction> {
    chain_zeta(arr, Variables::Univariate, Scope::Local)
}

/// Local topological zeta function at a point of the divisor.
pub fn local_zeta_at(arr: &Arrangement, point: &[Rational]) -> Result<ZetaFunction> {
    local_zeta(&arr.localize_at_point(point)?)
}

pub fn global_zeta(arr: &Arrangement) -> Result<ZetaFunction> {
    chain_zeta(arr, Variables::Univariate, Scope::Global)
}

/// Local zeta function of the tuple `F = (h_1, …, h_k)` at the origin.
pub fn multivariate_local_zeta(arr: &Arrangement) -> Result<ZetaFunction> {
    chain_zeta(arr, Variables::Multivariate, Scope::Local)
}

pub fn multivariate_local_zeta_at(arr: &Arrangement, point: &[Rational]) -> Result<ZetaFunction> {
    multivariate_local_zeta(&arr.localize_at_point(point)?)
}

pub fn multivariate_global_zeta(arr: &Arrangement) -> Result<ZetaFunction> {
    chain_zeta(arr, Variables::Multivariate, Scope::Global)
}

/// Local zeta function of a normal-crossings arrangement computed with the
/// identity resolution: `∏_i 1 / (d_i s + 1)`.
pub fn snc_zeta(arr: &Arrangement) -> Result<ZetaFunction> {
    require_snc(arr)?;
    let forms = arr
        .mults()
        .iter()
        .map(|&d| AffineForm::new(vec![d.into()], BigInt::one()));
    ZetaFunction::from_terms(1, vec![ZetaTerm::new(Rational::one(), forms)])
}

/// Multivariate identity-resolution zeta: `∏_i 1 / (Σ_j d_ij s_j + 1)`.
pub fn multivariate_snc_zeta(arr: &Arrangement) -> Result<ZetaFunction> {
    require_snc(arr)?;
    let rows = arr.factors().ok_or(Error::MissingFactors)?;
    let forms = (0..arr.len()).map(|i| {
        AffineForm::new(rows.iter().map(|row| row[i].into()).collect(), BigInt::one())
    });
    ZetaFunction::from_terms(rows.len(), vec![ZetaTerm::new(Rational::one(), forms)])
}

fn require_snc(arr: &Arrangement) -> Result<()> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    let all: Vec<usize> = (0..arr.len()).collect();
    if arr.rank_of(&all) != arr.len() {
        return Err(Error::Precondition(
            "normals are linearly dependent; not simple normal crossings".into(),
        ));
    }
    Ok(())
}

/// Local zeta function of `r ≥ 3` concurrent lines in the plane from the
/// single blow-up of the origin:
/// `(2 - r)/(d s + 2) + Σ_i 1/((d s + 2)(d_i s + 1))`.
pub fn rank2_zeta(arr: &Arrangement) -> Result<ZetaFunction> {
    if arr.dim() != 2 || arr.len() < 3 {
        return Err(Error::Precondition(
            "needs at least three lines in the plane".into(),
        ));
    }
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    let d = arr.degree();
    let exceptional = || AffineForm::new(vec![d.into()], 2.into());
    let mut terms = vec![ZetaTerm::new(
        Rational::from_integer(2.into()) - Rational::from_integer(arr.len().into()),
        [exceptional()],
    )];
    for &di in arr.mults() {
        terms.push(ZetaTerm::new(
            Rational::one(),
            [exceptional(), AffineForm::new(vec![di.into()], BigInt::one())],
        ));
    }
    ZetaFunction::from_terms(1, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};
    use crate::fixtures;

    fn uni(num: &[i64], den: &[(i64, i64, u32)]) -> (MultiPoly, BTreeMap<AffineForm, u32>) {
        let p = MultiPoly::from_terms(
            1,
            num.iter().enumerate().map(|(k, &c)| (vec![k as u32], qi(c))),
        );
        let d = den
            .iter()
            .map(|&(a, b, m)| (AffineForm::from_i64(&[a], b), m))
            .collect();
        (p, d)
    }

    fn parts(z: &ZetaFunction) -> (MultiPoly, BTreeMap<AffineForm, u32>) {
        (z.numerator().clone(), z.denominator().clone())
    }

    #[test]
    fn resolution_data() {
        let veys = fixtures::veys();
        let origin = veys.center();
        let d = resolution_datum(&veys, &origin).unwrap();
        assert_eq!((d.order, d.nu), (9, 3));
        assert_eq!(d.candidate_pole(), q(-1, 3));
        let line = veys.closure(&[0, 3]);
        let d = resolution_datum(&veys, &line).unwrap();
        assert_eq!((d.order, d.nu), (7, 2));
        let d = resolution_datum(&veys, &veys.closure(&[4])).unwrap();
        assert_eq!((d.order, d.nu), (4, 1));
        assert_eq!(
            resolution_datum(&veys, &veys.ambient_flat()),
            Err(Error::AmbientFlat)
        );
    }

    #[test]
    fn candidates() {
        let mut expected = vec![q(-1, 1), q(-1, 2), q(-1, 4), q(-2, 3), q(-2, 7), q(-1, 3)];
        expected.sort_by(|a, b| b.cmp(a));
        assert_eq!(candidate_poles(&fixtures::veys()).unwrap(), expected);
        assert_eq!(
            candidate_poles(&fixtures::three_lines()).unwrap(),
            vec![q(-2, 3), qi(-1)]
        );
        assert_eq!(
            candidate_poles(&fixtures::monomial(2, 3)).unwrap(),
            vec![q(-1, 3), q(-1, 2)]
        );
    }

    #[test]
    fn chain_counts() {
        let xy = fixtures::boolean(2);
        let l = xy.intersection_lattice().unwrap();
        assert_eq!(enumerate_chains(&l, Some(&xy.center())).len(), 3);
        assert_eq!(enumerate_chains(&l, None).len(), 5);
        let tl = fixtures::three_lines();
        let l = tl.intersection_lattice().unwrap();
        let chains = enumerate_chains(&l, Some(&tl.center()));
        assert_eq!(chains.len(), 4);
        assert_eq!(chains[0].len(), 1);
        assert_eq!(chains[1].flats()[1].indices(), &[0]);
    }

    #[test]
    fn closed_forms() {
        let z = local_zeta(&fixtures::boolean(2)).unwrap();
        assert_eq!(parts(&z), uni(&[1], &[(1, 1, 2)]));
        let z = local_zeta(&fixtures::three_lines()).unwrap();
        assert_eq!(parts(&z), uni(&[2, -1], &[(1, 1, 1), (3, 2, 1)]));
        let z = local_zeta(&fixtures::monomial(2, 3)).unwrap();
        assert_eq!(parts(&z), uni(&[1], &[(2, 1, 1), (3, 1, 1)]));
        assert_eq!(z.to_string(), "1/((2s + 1)(3s + 1))");
        let z = local_zeta(&fixtures::three_lines()).unwrap();
        assert_eq!(z.to_string(), "(-s + 2)/((s + 1)(3s + 2))");
        assert_eq!(local_zeta(&fixtures::boolean(2)).unwrap().to_string(), "1/(s + 1)^2");
    }

    #[test]
    fn global_matches_local_for_central() {
        for a in [fixtures::boolean(2), fixtures::three_lines(), fixtures::veys()] {
            assert_eq!(global_zeta(&a).unwrap(), local_zeta(&a).unwrap());
        }
        let empty = Arrangement::new(2, vec![], vec![]).unwrap();
        assert_eq!(global_zeta(&empty), Err(Error::EmptyArrangement));
    }

    #[test]
    fn multivariate_examples() {
        let z = multivariate_local_zeta(&fixtures::split_pair()).unwrap();
        assert_eq!(z.numerator(), &MultiPoly::one(2));
        let den: Vec<AffineForm> = z.denominator().keys().cloned().collect();
        assert_eq!(
            den,
            vec![AffineForm::from_i64(&[0, 1], 1), AffineForm::from_i64(&[1, 0], 1)]
        );
        // the exceptional factor s1 + s2 + 2 was present before cancelling
        assert!(z
            .terms()
            .iter()
            .any(|t| t.denominators.contains(&AffineForm::from_i64(&[1, 1], 2))));

        let z = multivariate_local_zeta(&fixtures::line_and_pair()).unwrap();
        let hyper = z.poles().hyperplanes();
        assert_eq!(
            hyper,
            vec![
                AffineForm::from_i64(&[0, 1], 1),
                AffineForm::from_i64(&[1, 0], 1),
                AffineForm::from_i64(&[1, 2], 2),
            ]
        );
        // -(s1+1)(s2+1) + (s2+1) + 2(s1+1) = -s1 s2 + s1 + 2
        let expected = MultiPoly::from_terms(
            2,
            [(vec![1, 1], qi(-1)), (vec![1, 0], qi(1)), (vec![0, 0], qi(2))],
        );
        assert_eq!(z.numerator(), &expected);
        assert_eq!(
            multivariate_local_zeta(&fixtures::three_lines()),
            Err(Error::MissingFactors)
        );
    }

    #[test]
    fn single_factor_matches_univariate() {
        let a = fixtures::veys().with_factors(vec![vec![1, 1, 1, 2, 4]]).unwrap();
        assert_eq!(multivariate_local_zeta(&a).unwrap(), local_zeta(&a).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let three_s_two = AffineForm::from_i64(&[3], 2);
        let s_one = AffineForm::from_i64(&[1], 1);
        let z = ZetaFunction::from_terms(
            1,
            vec![
                ZetaTerm::new(qi(-1), [three_s_two.clone()]),
                ZetaTerm::new(qi(3), [three_s_two.clone(), s_one.clone()]),
            ],
        )
        .unwrap();
        assert_eq!(parts(&z), uni(&[2, -1], &[(1, 1, 1), (3, 2, 1)]));
        let z = ZetaFunction::from_terms(
            1,
            vec![
                ZetaTerm::new(qi(1), [s_one.clone()]),
                ZetaTerm::new(qi(-2), [AffineForm::from_i64(&[2], 2)]),
            ],
        )
        .unwrap();
        assert!(z.is_zero());
        assert!(z.denominator().is_empty());
    }

    #[test]
    fn poles_and_specialization() {
        let z = local_zeta(&fixtures::three_lines()).unwrap();
        assert_eq!(z.poles().univariate, vec![(q(-2, 3), 1), (qi(-1), 1)]);
        let veys = local_zeta(&fixtures::veys()).unwrap();
        assert!(!veys.poles().pole_values().contains(&q(-1, 3)));

        let m = multivariate_local_zeta(&fixtures::split_pair()).unwrap();
        assert_eq!(
            m.specialize(&[1, 1]).unwrap(),
            local_zeta(&fixtures::boolean(2)).unwrap()
        );
        let m = multivariate_local_zeta(&fixtures::line_and_pair()).unwrap();
        assert_eq!(m.specialize(&[1, 1]).unwrap(), z);
        assert_eq!(z.specialize(&[1]).unwrap(), z);
        assert!(z.specialize(&[1, 1]).is_err());
    }

    #[test]
    fn oracles() {
        assert_eq!(
            parts(&snc_zeta(&fixtures::boolean(2)).unwrap()),
            uni(&[1], &[(1, 1, 2)])
        );
        assert_eq!(
            parts(&snc_zeta(&fixtures::monomial(2, 3)).unwrap()),
            uni(&[1], &[(2, 1, 1), (3, 1, 1)])
        );
        assert_eq!(
            parts(&snc_zeta(&fixtures::boolean(3)).unwrap()),
            uni(&[1], &[(1, 1, 3)])
        );
        assert!(snc_zeta(&fixtures::three_lines()).is_err());

        assert_eq!(
            rank2_zeta(&fixtures::three_lines()).unwrap(),
            local_zeta(&fixtures::three_lines()).unwrap()
        );
        let four = fixtures::concurrent_lines(4, &[1, 1, 1, 1]);
        let expected = ZetaFunction::from_terms(
            1,
            vec![
                ZetaTerm::new(qi(-2), [AffineForm::from_i64(&[4], 2)]),
                ZetaTerm::new(
                    qi(4),
                    [AffineForm::from_i64(&[4], 2), AffineForm::from_i64(&[1], 1)],
                ),
            ],
        )
        .unwrap();
        assert_eq!(rank2_zeta(&four).unwrap(), expected);
        let weighted = fixtures::concurrent_lines(3, &[2, 1, 1]);
        assert_eq!(rank2_zeta(&weighted).unwrap(), local_zeta(&weighted).unwrap());
        assert!(rank2_zeta(&fixtures::boolean(2)).is_err());
    }

    #[test]
    fn local_at_point() {
        let xy = fixtures::boolean(2);
        let z = local_zeta_at(&xy, &[qi(0), qi(5)]).unwrap();
        assert_eq!(parts(&z), uni(&[1], &[(1, 1, 1)]));
        assert_eq!(
            local_zeta_at(&xy, &[qi(1), qi(1)]),
            Err(Error::PointOffDivisor)
        );
        let affine = Arrangement::affine(1, vec![vec![qi(1)]], vec![qi(-1)], vec![1]).unwrap();
        assert_eq!(local_zeta(&affine), Err(Error::NotCentral));
    }
}
