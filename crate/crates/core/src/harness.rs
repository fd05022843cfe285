//! Verification workflows: log canonical thresholds and polytopes, adapted
//! vectors, n/d checks and pole-inclusion verdicts against supplied
//! Bernstein–Sato data.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{format_rational, AffineForm, Rational};
use crate::arrangement::{Arrangement, Flat};
use crate::error::{Error, Result};
use crate::zeta::{
    dense_resolution_data, global_zeta, local_zeta, multivariate_global_zeta,
    multivariate_local_zeta, resolution_datum,
};

/// `{β : Σ_{i ∈ I_W} β_i ≤ codim W for every dense W}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub ambient: usize,
    pub inequalities: Vec<(Vec<usize>, u64)>,
}

/// One violated clause of a verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    NonPositiveEntry { index: usize, value: Rational },
    PolytopeViolation { edge: Vec<usize>, sum: Rational, bound: u64 },
    WrongTotal { sum: Rational, expected: u64 },
    IntegralSum { edge: Vec<usize>, sum: Rational },
    PoleNotRoot { pole: Rational },
    HyperplaneNotInZeroLocus { form: AffineForm },
    NotCandidate { form: AffineForm },
}

fn fmt_edge(edge: &[usize]) -> String {
    let names: Vec<String> = edge.iter().map(|i| format!("D{}", i + 1)).collect();
    names.join(" ∩ ")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NonPositiveEntry { index, value } => {
                write!(f, "nonpositive entry {} at index {}", format_rational(value), index + 1)
            }
            Witness::PolytopeViolation { edge, sum, bound } => write!(
                f,
                "polytope inequality violated at dense edge {}: {} > {}",
                fmt_edge(edge),
                format_rational(sum),
                bound
            ),
            Witness::WrongTotal { sum, expected } => {
                write!(f, "entries sum to {} instead of {}", format_rational(sum), expected)
            }
            Witness::IntegralSum { edge, sum } => {
                let kind = if edge.len() == 1 { "hyperplane" } else { "edge" };
                write!(
                    f,
                    "integral sum at dense {} {}: {}",
                    kind,
                    fmt_edge(edge),
                    format_rational(sum)
                )
            }
            Witness::PoleNotRoot { pole } => {
                write!(f, "pole {} is not a supplied root", format_rational(pole))
            }
            Witness::HyperplaneNotInZeroLocus { form } => {
                write!(f, "polar hyperplane {} = 0 is not in the zero locus", form)
            }
            Witness::NotCandidate { form } => {
                write!(f, "{} = 0 is not a candidate hyperplane", form)
            }
        }
    }
}

/// Pass/fail with the list of violated clauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        Self {
            pass: witnesses.is_empty(),
            witnesses,
        }
    }
}

fn require_central_nonempty(arr: &Arrangement) -> Result<()> {
    if arr.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    Ok(())
}

fn require_good(arr: &Arrangement) -> Result<()> {
    require_central_nonempty(arr)?;
    if !arr.is_essential() {
        return Err(Error::Precondition(
            "arrangement is not essential: {0} is not an edge".into(),
        ));
    }
    if !arr.is_indecomposable()? {
        let parts: Vec<String> = arr
            .matroid_components(&(0..arr.len()).collect::<Vec<_>>())
            .iter()
            .map(|c| format!("{{{}}}", fmt_edge(c)))
            .collect();
        return Err(Error::Precondition(format!(
            "arrangement is decomposable into {}",
            parts.join(", ")
        )));
    }
    Ok(())
}

/// `min_W codim W / N_W` over dense edges.
pub fn lct(arr: &Arrangement) -> Result<Rational> {
    require_central_nonempty(arr)?;
    dense_resolution_data(arr)?
        .iter()
        .map(|d| Rational::new(d.nu.into(), d.order.into()))
        .min()
        .ok_or(Error::EmptyArrangement)
}

const BISECTION_ROUNDS: u32 = 40;

/// The largest `c` with `c (d_1, …, d_r)` in the closed log canonical
/// polytope, found by bisection on membership and then snapped to the
/// simplest rational of the final interval.
pub fn lct_by_bisection(arr: &Arrangement) -> Result<Rational> {
    require_central_nonempty(arr)?;
    let poly = log_canonical_polytope(arr)?;
    let d: Vec<Rational> = arr.mults().iter().map(|&m| Rational::from_integer(m.into())).collect();
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    let two = Rational::from_integer(2.into());
    if polytope_member(&poly, &d, false)? {
        return Ok(Rational::one());
    }
    for _ in 0..BISECTION_ROUNDS {
        let mid = (&lo + &hi) / &two;
        let point: Vec<Rational> = d.iter().map(|x| x * &mid).collect();
        if polytope_member(&poly, &point, false)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(simplest_between(&lo, &hi))
}

/// The rational with least denominator in `[lo, hi]`, for `0 ≤ lo < hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl < hi.floor() {
        return fl + Rational::one();
    }
    let inner = simplest_between(
        &(Rational::one() / (hi - &fl)),
        &(Rational::one() / (lo - &fl)),
    );
    fl + Rational::one() / inner
}

/// One inequality per dense edge.
pub fn log_canonical_polytope(arr: &Arrangement) -> Result<Polytope> {
    require_central_nonempty(arr)?;
    Ok(Polytope {
        ambient: arr.len(),
        inequalities: dense_resolution_data(arr)?
            .into_iter()
            .map(|d| (d.flat.indices().to_vec(), d.nu))
            .collect(),
    })
}

fn edge_sum(edge: &[usize], alpha: &[Rational]) -> Rational {
    edge.iter().fold(Rational::zero(), |acc, &i| acc + &alpha[i])
}

pub fn polytope_member(poly: &Polytope, alpha: &[Rational], strict: bool) -> Result<bool> {
    if alpha.len() != poly.ambient {
        return Err(Error::DimensionMismatch {
            expected: poly.ambient,
            got: alpha.len(),
        });
    }
    if alpha.iter().any(|a| !a.is_positive()) {
        return Err(Error::Precondition("polytope points must be positive".into()));
    }
    Ok(poly.inequalities.iter().all(|(edge, bound)| {
        let s = edge_sum(edge, alpha);
        let b = Rational::from_integer((*bound).into());
        if strict {
            s < b
        } else {
            s <= b
        }
    }))
}

/// Checks that `β` lies in the closed log canonical polytope, sums to `n`,
/// and has non-integral sums at every dense edge other than `{0}`.
pub fn validate_adapted(arr: &Arrangement, beta: &[Rational]) -> Result<Verdict> {
    require_good(arr)?;
    if beta.len() != arr.len() {
        return Err(Error::DimensionMismatch {
            expected: arr.len(),
            got: beta.len(),
        });
    }
    let mut witnesses = Vec::new();
    for (index, value) in beta.iter().enumerate() {
        if !value.is_positive() {
            witnesses.push(Witness::NonPositiveEntry {
                index,
                value: value.clone(),
            });
        }
    }
    let center = arr.center();
    for d in dense_resolution_data(arr)? {
        let sum = edge_sum(d.flat.indices(), beta);
        if sum > Rational::from_integer(d.nu.into()) {
            witnesses.push(Witness::PolytopeViolation {
                edge: d.flat.indices().to_vec(),
                sum: sum.clone(),
                bound: d.nu,
            });
        }
        if d.flat != center && sum.is_integer() {
            witnesses.push(Witness::IntegralSum {
                edge: d.flat.indices().to_vec(),
                sum,
            });
        }
    }
    let total = edge_sum(&(0..arr.len()).collect::<Vec<_>>(), beta);
    let n = arr.dim() as u64;
    if total != Rational::from_integer(n.into()) {
        witnesses.push(Witness::WrongTotal {
            sum: total,
            expected: n,
        });
    }
    Ok(Verdict::from_witnesses(witnesses))
}

const ADAPTED_HALVINGS: u32 = 64;

fn combinations(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            go(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, k, &mut Vec::new(), &mut out);
    out
}

/// A vector adapted to `{0}`, built as a convex combination of basis
/// indicator vectors.
///
/// Starts from the uniform combination of all bases. While some dense edge
/// `W ≠ {0}` has an integral sum, weight `ε` moves from a basis meeting
/// `I_W` least to one meeting it most; `ε` starts at half the donor's weight
/// and is halved until `W` turns non-integral without any other edge
/// turning integral.
pub fn adapted_vector(arr: &Arrangement) -> Result<Vec<Rational>> {
    require_good(arr)?;
    let r = arr.len();
    let bases: Vec<Vec<usize>> = combinations(r, arr.dim())
        .into_iter()
        .filter(|j| arr.rank_of(j) == arr.dim())
        .collect();
    let mut weights = vec![Rational::new(BigInt::one(), BigInt::from(bases.len())); bases.len()];
    let center = arr.center();
    let edges: Vec<Flat> = arr
        .dense_edges()?
        .into_iter()
        .filter(|w| *w != center)
        .collect();
    let vector = |weights: &[Rational]| -> Vec<Rational> {
        let mut beta = vec![Rational::zero(); r];
        for (j, w) in bases.iter().zip(weights) {
            for &i in j {
                beta[i] += w;
            }
        }
        beta
    };
    let integral = |beta: &[Rational]| -> BTreeSet<usize> {
        edges
            .iter()
            .enumerate()
            .filter(|(_, w)| edge_sum(w.indices(), beta).is_integer())
            .map(|(k, _)| k)
            .collect()
    };
    let mut bad = integral(&vector(&weights));
    while let Some(&target) = bad.iter().next() {
        let meet = |j: &Vec<usize>| j.iter().filter(|&&i| edges[target].contains_index(i)).count();
        let donor = (0..bases.len()).min_by_key(|&k| (meet(&bases[k]), k)).expect("bases exist");
        let receiver = (0..bases.len())
            .max_by_key(|&k| (meet(&bases[k]), std::cmp::Reverse(k)))
            .expect("bases exist");
        if meet(&bases[donor]) == meet(&bases[receiver]) {
            return Err(Error::Precondition(format!(
                "every basis meets dense edge {} equally",
                fmt_edge(edges[target].indices())
            )));
        }
        let mut eps = &weights[donor] / Rational::from_integer(2.into());
        let mut next = None;
        for _ in 0..ADAPTED_HALVINGS {
            let mut trial = weights.clone();
            trial[donor] -= &eps;
            trial[receiver] += &eps;
            let now = integral(&vector(&trial));
            if !now.contains(&target) && now.is_subset(&bad) {
                next = Some((trial, now));
                break;
            }
            eps /= Rational::from_integer(2.into());
        }
        let (w, now) = next.ok_or_else(|| {
            Error::ScheduleExhausted("adapted vector perturbation did not converge".into())
        })?;
        weights = w;
        bad = now;
    }
    let beta = vector(&weights);
    debug_assert!(validate_adapted(arr, &beta)?.pass);
    Ok(beta)
}

/// Outcome of the n/d check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdReport {
    pub n: u64,
    pub d: u64,
    /// `−n/d`.
    pub value: Rational,
    /// `−n/d` is the candidate pole of the edge `{0}`.
    pub candidate: bool,
    /// `−n/d` is a pole of the local zeta function.
    pub pole: bool,
    pub verdict: Verdict,
}

pub fn nd_check(arr: &Arrangement) -> Result<NdReport> {
    require_good(arr)?;
    let n = arr.dim() as u64;
    if n < 2 && arr.len() as u64 <= n {
        return Err(Error::Precondition("n/d check needs n ≥ 2 or r > n".into()));
    }
    let d = arr.degree();
    let value = -Rational::new(n.into(), d.into());
    let origin = resolution_datum(arr, &arr.center())?;
    let candidate = arr.dense_edges()?.contains(&arr.center()) && origin.candidate_pole() == value;
    let pole = local_zeta(arr)?.poles().pole_values().contains(&value);
    let witnesses = if candidate {
        Vec::new()
    } else {
        vec![Witness::NotCandidate {
            form: AffineForm::from_orders(&[d], n),
        }]
    };
    Ok(NdReport {
        n,
        d,
        value,
        candidate,
        pole,
        verdict: Verdict::from_witnesses(witnesses),
    })
}

/// Poles of the local (or global) zeta function must all be supplied roots.
pub fn smc_verify(arr: &Arrangement, roots: &[Rational], local: bool) -> Result<Verdict> {
    require_central_nonempty(arr)?;
    if roots.is_empty() {
        return Err(Error::Precondition("root set is empty".into()));
    }
    let zeta = if local { local_zeta(arr)? } else { global_zeta(arr)? };
    let roots: BTreeSet<&Rational> = roots.iter().collect();
    Ok(Verdict::from_witnesses(
        zeta.poles()
            .pole_values()
            .into_iter()
            .filter(|p| !roots.contains(p))
            .map(|pole| Witness::PoleNotRoot { pole })
            .collect(),
    ))
}

/// Outcome of the multivariate n/d check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiNdReport {
    /// `Σ_j deg(h_j) s_j + n`, canonicalized.
    pub hyperplane: AffineForm,
    pub candidate: bool,
    pub polar: bool,
    pub verdict: Verdict,
}

pub fn multi_nd_check(arr: &Arrangement) -> Result<MultiNdReport> {
    require_good(arr)?;
    let factors = arr.factors().ok_or(Error::MissingFactors)?;
    if arr.mults().iter().any(|&m| m != 1) {
        return Err(Error::Precondition("multivariate n/d check needs a reduced arrangement".into()));
    }
    let degrees: Vec<u64> = factors.iter().map(|row| row.iter().sum()).collect();
    let hyperplane = AffineForm::from_orders(&degrees, arr.dim() as u64);
    let candidate = resolution_datum(arr, &arr.center())?.multivariate_form() == Some(hyperplane.clone())
        && arr.dense_edges()?.contains(&arr.center());
    let polar = multivariate_local_zeta(arr)?
        .poles()
        .hyperplanes()
        .contains(&hyperplane);
    let witnesses = if candidate {
        Vec::new()
    } else {
        vec![Witness::NotCandidate {
            form: hyperplane.clone(),
        }]
    };
    Ok(MultiNdReport {
        hyperplane,
        candidate,
        polar,
        verdict: Verdict::from_witnesses(witnesses),
    })
}

/// Every polar hyperplane of the global multivariate zeta function must lie
/// in the supplied zero locus.
pub fn multi_smc_verify(arr: &Arrangement, zero_locus: &[AffineForm]) -> Result<Verdict> {
    require_central_nonempty(arr)?;
    if arr.factors().is_none() {
        return Err(Error::MissingFactors);
    }
    let locus: BTreeSet<AffineForm> = zero_locus
        .iter()
        .map(|f| {
            if f.is_constant() {
                Err(Error::ConstantForm)
            } else {
                Ok(f.canonical().1)
            }
        })
        .collect::<Result<_>>()?;
    Ok(Verdict::from_witnesses(
        multivariate_global_zeta(arr)?
            .poles()
            .hyperplanes()
            .into_iter()
            .filter(|h| !locus.contains(h))
            .map(|form| Witness::HyperplaneNotInZeroLocus { form })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};
    use crate::fixtures;

    #[test]
    fn thresholds() {
        assert_eq!(lct(&fixtures::monomial(2, 3)).unwrap(), q(1, 3));
        assert_eq!(lct(&fixtures::three_lines()).unwrap(), q(2, 3));
        assert_eq!(lct(&fixtures::veys()).unwrap(), q(1, 4));
        for arr in [fixtures::monomial(2, 3), fixtures::three_lines(), fixtures::veys(), fixtures::boolean(3)] {
            assert_eq!(lct_by_bisection(&arr).unwrap(), lct(&arr).unwrap());
        }
        let empty = Arrangement::new(2, vec![], vec![]).unwrap();
        assert_eq!(lct(&empty), Err(Error::EmptyArrangement));
    }

    #[test]
    fn simplest() {
        assert_eq!(simplest_between(&q(3, 10), &q(2, 5)), q(1, 3));
        assert_eq!(simplest_between(&q(1, 4), &q(1, 3)), q(1, 3));
        assert_eq!(simplest_between(&qi(0), &q(1, 3)), qi(0));
        assert_eq!(simplest_between(&q(7, 5), &q(8, 5)), q(3, 2));
    }

    #[test]
    fn polytopes() {
        let p = log_canonical_polytope(&fixtures::three_lines()).unwrap();
        assert_eq!(
            p.inequalities,
            vec![(vec![0], 1), (vec![1], 1), (vec![2], 1), (vec![0, 1, 2], 2)]
        );
        assert!(polytope_member(&p, &[q(2, 3), q(2, 3), q(2, 3)], false).unwrap());
        assert!(!polytope_member(&p, &[q(2, 3), q(2, 3), q(2, 3)], true).unwrap());
        assert!(!polytope_member(&p, &[qi(1), qi(1), qi(1)], false).unwrap());
        assert!(polytope_member(&p, &[qi(0), qi(1), qi(1)], false).is_err());
        let xy = log_canonical_polytope(&fixtures::boolean(2)).unwrap();
        assert_eq!(xy.inequalities.len(), 2);
        assert!(polytope_member(&xy, &[qi(1), qi(1)], false).unwrap());
        assert_eq!(log_canonical_polytope(&fixtures::veys()).unwrap().inequalities.len(), 8);
    }

    #[test]
    fn adapted() {
        let arr = fixtures::three_lines();
        assert!(validate_adapted(&arr, &[q(2, 3), q(2, 3), q(2, 3)]).unwrap().pass);
        let v = validate_adapted(&arr, &[qi(1), q(1, 2), q(1, 2)]).unwrap();
        assert!(!v.pass);
        assert!(v.witnesses[0].to_string().starts_with("integral sum at dense hyperplane D1"));
        assert!(validate_adapted(&fixtures::veys(), &vec![q(3, 5); 5]).unwrap().pass);
        for arr in [fixtures::three_lines(), fixtures::veys(), fixtures::concurrent_lines(4, &[1, 2, 3, 1])] {
            let beta = adapted_vector(&arr).unwrap();
            assert!(validate_adapted(&arr, &beta).unwrap().pass, "{:?}", beta);
        }
        assert_eq!(adapted_vector(&fixtures::three_lines()).unwrap(), vec![q(2, 3); 3]);
        assert!(matches!(adapted_vector(&fixtures::boolean(2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn nd() {
        let rep = nd_check(&fixtures::veys()).unwrap();
        assert_eq!((rep.n, rep.d, rep.value.clone()), (3, 9, q(-1, 3)));
        assert!(rep.candidate && !rep.pole && rep.verdict.pass);
        let rep = nd_check(&fixtures::three_lines()).unwrap();
        assert_eq!(rep.value, q(-2, 3));
        assert!(rep.candidate && rep.pole);
        let err = nd_check(&fixtures::monomial(2, 3)).unwrap_err();
        assert!(err.to_string().contains("decomposable"));
    }

    #[test]
    fn smc() {
        assert!(smc_verify(&fixtures::veys(), &fixtures::veys_bf_roots(), true).unwrap().pass);
        assert!(smc_verify(&fixtures::boolean(2), &[qi(-1)], true).unwrap().pass);
        let v = smc_verify(&fixtures::three_lines(), &[qi(-1)], true).unwrap();
        assert_eq!(v.witnesses, vec![Witness::PoleNotRoot { pole: q(-2, 3) }]);
        assert!(smc_verify(&fixtures::boolean(2), &[], true).is_err());
    }

    #[test]
    fn multi() {
        let rep = multi_nd_check(&fixtures::line_and_pair()).unwrap();
        assert_eq!(rep.hyperplane, AffineForm::from_i64(&[1, 2], 2));
        assert!(rep.candidate && rep.polar);
        let single = fixtures::three_lines().with_factors(vec![vec![1, 1, 1]]).unwrap();
        let rep = multi_nd_check(&single).unwrap();
        assert_eq!(rep.hyperplane, AffineForm::from_i64(&[3], 2));
        assert!(multi_nd_check(&fixtures::split_pair()).is_err());
        let axes = [AffineForm::from_i64(&[1, 0], 1), AffineForm::from_i64(&[0, 1], 1)];
        assert!(multi_smc_verify(&fixtures::split_pair(), &axes).unwrap().pass);
        let v = multi_smc_verify(&fixtures::line_and_pair(), &axes).unwrap();
        assert_eq!(
            v.witnesses,
            vec![Witness::HyperplaneNotInZeroLocus { form: AffineForm::from_i64(&[1, 2], 2) }]
        );
        let doubled = [AffineForm::from_i64(&[2, 0], 2), AffineForm::from_i64(&[0, 2], 2)];
        assert!(multi_smc_verify(&fixtures::split_pair(), &doubled).unwrap().pass);
        assert_eq!(multi_smc_verify(&fixtures::three_lines(), &axes), Err(Error::MissingFactors));
    }
}
