//! JSON file formats. Rationals are always written as `"p/q"` strings; on
//! input plain JSON integers are accepted as well.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, AffineForm, MultiPoly, Rational};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::harness::{Verdict, Witness};
use crate::zeta::{PoleReport, ResolutionDatum, ZetaFunction, ZetaTerm};

/// A rational given either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonRational {
    Int(i64),
    Text(String),
}

impl JsonRational {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            JsonRational::Int(n) => Ok(Rational::from_integer((*n).into())),
            JsonRational::Text(s) => parse_rational(s),
        }
    }
}

impl From<&Rational> for JsonRational {
    fn from(r: &Rational) -> Self {
        JsonRational::Text(format_rational(r))
    }
}

fn rationals(values: &[JsonRational]) -> Result<Vec<Rational>> {
    values.iter().map(JsonRational::to_rational).collect()
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// `{n, forms, mults, factors?, name?}`. A form has `n` coefficients, or
/// `n + 1` with a trailing constant term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub n: usize,
    pub forms: Vec<Vec<JsonRational>>,
    pub mults: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl ArrangementFile {
    pub fn from_arrangement(arr: &Arrangement) -> Self {
        let central = arr.is_central();
        Self {
            n: arr.dim(),
            forms: arr
                .normals()
                .iter()
                .zip(arr.constants())
                .map(|(normal, c)| {
                    let mut form: Vec<JsonRational> = normal.iter().map(JsonRational::from).collect();
                    if !central {
                        form.push(c.into());
                    }
                    form
                })
                .collect(),
            mults: arr.mults().to_vec(),
            factors: arr.factors().map(<[Vec<u64>]>::to_vec),
            name: arr.name().map(str::to_owned),
        }
    }

    pub fn to_arrangement(&self) -> Result<Arrangement> {
        let mut normals = Vec::new();
        let mut constants = Vec::new();
        for (i, form) in self.forms.iter().enumerate() {
            let mut values = rationals(form)?;
            if values.len() == self.n + 1 {
                constants.push(values.pop().expect("nonempty"));
            } else if values.len() == self.n {
                constants.push(Rational::from_integer(0.into()));
            } else {
                return Err(Error::InvalidArrangement(format!(
                    "form {} has {} entries, expected {} or {}",
                    i + 1,
                    values.len(),
                    self.n,
                    self.n + 1
                )));
            }
            normals.push(values);
        }
        let mut arr = Arrangement::affine(self.n, normals, constants, self.mults.clone())?;
        if let Some(f) = &self.factors {
            arr = arr.with_factors(f.clone())?;
        }
        if let Some(name) = &self.name {
            arr = arr.with_name(name.clone());
        }
        Ok(arr)
    }
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    parse_json::<ArrangementFile>(text)?.to_arrangement()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsFile {
    pub roots: Vec<JsonRational>,
}

/// `{"roots": [...]}`.
pub fn parse_roots(text: &str) -> Result<Vec<Rational>> {
    rationals(&parse_json::<RootsFile>(text)?.roots)
}

pub fn roots_file(roots: &[Rational]) -> RootsFile {
    RootsFile {
        roots: roots.iter().map(JsonRational::from).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroLocusFile {
    pub zero_locus: Vec<Vec<JsonRational>>,
}

/// `{"zero_locus": [[c_1, …, c_k, constant], …]}`; each entry is scaled to
/// an integral canonical form.
pub fn parse_zero_locus(text: &str) -> Result<Vec<AffineForm>> {
    let file: ZeroLocusFile = parse_json(text)?;
    let mut forms = Vec::new();
    for entry in &file.zero_locus {
        let values = rationals(entry)?;
        if values.len() < 2 {
            return Err(Error::Parse("zero locus entries need coefficients and a constant".into()));
        }
        let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = values
            .iter()
            .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let (constant, coeffs) = ints.split_last().expect("nonempty");
        let form = AffineForm::new(coeffs.to_vec(), constant.clone());
        if form.is_constant() {
            return Err(Error::ConstantForm);
        }
        forms.push(form.canonical().1);
    }
    if let Some(k) = forms.first().map(AffineForm::nvars) {
        if let Some(f) = forms.iter().find(|f| f.nvars() != k) {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: f.nvars(),
            });
        }
    }
    Ok(forms)
}

/// `Σ_j coeffs_j s_j + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub coeffs: Vec<String>,
    pub constant: String,
    pub text: String,
}

impl From<&AffineForm> for FormJson {
    fn from(f: &AffineForm) -> Self {
        Self {
            coeffs: f.coeffs().iter().map(BigInt::to_string).collect(),
            constant: f.constant().to_string(),
            text: f.to_string(),
        }
    }
}

impl FormJson {
    pub fn to_form(&self) -> Result<AffineForm> {
        let int = |s: &String| -> Result<BigInt> {
            s.parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
        };
        Ok(AffineForm::new(
            self.coeffs.iter().map(int).collect::<Result<_>>()?,
            int(&self.constant)?,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: String,
    pub denominators: Vec<FormJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub form: FormJson,
    pub multiplicity: u32,
}

/// A zeta function as its term list plus normalized numerator and
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaJson {
    pub nvars: usize,
    pub text: String,
    pub terms: Vec<TermJson>,
    pub numerator: Vec<MonomialJson>,
    pub denominator: Vec<FactorJson>,
}

impl From<&ZetaFunction> for ZetaJson {
    fn from(z: &ZetaFunction) -> Self {
        Self {
            nvars: z.nvars(),
            text: z.to_string(),
            terms: z
                .terms()
                .iter()
                .map(|t| TermJson {
                    coefficient: format_rational(&t.coefficient),
                    denominators: t.denominators.iter().map(FormJson::from).collect(),
                })
                .collect(),
            numerator: z
                .numerator()
                .terms()
                .map(|(e, c)| MonomialJson {
                    exponents: e.clone(),
                    coefficient: format_rational(c),
                })
                .collect(),
            denominator: z
                .denominator()
                .iter()
                .map(|(f, &m)| FactorJson {
                    form: f.into(),
                    multiplicity: m,
                })
                .collect(),
        }
    }
}

impl ZetaJson {
    /// Rebuilds the zeta function, checking that the stored normalized form
    /// agrees with the terms.
    pub fn to_zeta(&self) -> Result<ZetaFunction> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let forms = t.denominators.iter().map(FormJson::to_form).collect::<Result<Vec<_>>>()?;
                Ok(ZetaTerm::new(parse_rational(&t.coefficient)?, forms))
            })
            .collect::<Result<Vec<_>>>()?;
        let numerator = MultiPoly::from_terms(
            self.nvars,
            self.numerator
                .iter()
                .map(|m| Ok((m.exponents.clone(), parse_rational(&m.coefficient)?)))
                .collect::<Result<Vec<_>>>()?,
        );
        let denominator: BTreeMap<AffineForm, u32> = self
            .denominator
            .iter()
            .map(|f| Ok((f.form.to_form()?, f.multiplicity)))
            .collect::<Result<_>>()?;
        ZetaFunction::from_parts(self.nvars, terms, numerator, denominator)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleJson {
    pub pole: String,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneJson {
    pub form: FormJson,
    pub order: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolesJson {
    pub univariate: Vec<PoleJson>,
    pub multivariate: Vec<HyperplaneJson>,
}

impl From<&PoleReport> for PolesJson {
    fn from(p: &PoleReport) -> Self {
        Self {
            univariate: p
                .univariate
                .iter()
                .map(|(v, m)| PoleJson {
                    pole: format_rational(v),
                    order: *m,
                })
                .collect(),
            multivariate: p
                .multivariate
                .iter()
                .map(|(f, m)| HyperplaneJson {
                    form: f.into(),
                    order: *m,
                })
                .collect(),
        }
    }
}

impl PolesJson {
    pub fn to_report(&self) -> Result<PoleReport> {
        Ok(PoleReport {
            univariate: self
                .univariate
                .iter()
                .map(|p| Ok((parse_rational(&p.pole)?, p.order)))
                .collect::<Result<_>>()?,
            multivariate: self
                .multivariate
                .iter()
                .map(|h| Ok((h.form.to_form()?, h.order)))
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    pub edge: Vec<usize>,
    pub codim: usize,
    pub order: u64,
    pub nu: u64,
    pub candidate_pole: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_orders: Option<Vec<u64>>,
}

impl From<&ResolutionDatum> for DatumJson {
    fn from(d: &ResolutionDatum) -> Self {
        Self {
            edge: d.flat.indices().to_vec(),
            codim: d.flat.codim(),
            order: d.order,
            nu: d.nu,
            candidate_pole: format_rational(&d.candidate_pole()),
            factor_orders: d.factor_orders.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub flat_count: usize,
    pub rank: usize,
    pub characteristic_polynomial: String,
    pub dense_edges: Vec<Vec<usize>>,
}

impl LatticeJson {
    pub fn of(arr: &Arrangement) -> Result<Self> {
        let lattice = arr.intersection_lattice()?;
        let chi = arr.char_poly()?;
        Ok(Self {
            flat_count: lattice.flats().len(),
            rank: arr.rank_of(&(0..arr.len()).collect::<Vec<_>>()),
            characteristic_polynomial: chi.display_with(&["t".to_owned()]),
            dense_edges: arr
                .dense_edges()?
                .iter()
                .map(|f| f.indices().to_vec())
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub check: String,
    pub pass: bool,
    pub witnesses: Vec<WitnessJson>,
}

impl VerdictJson {
    pub fn new(check: &str, v: &Verdict) -> Self {
        Self {
            check: check.to_owned(),
            pass: v.pass,
            witnesses: v
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    kind: witness_kind(w).to_owned(),
                    message: w.to_string(),
                })
                .collect(),
        }
    }
}

fn witness_kind(w: &Witness) -> &'static str {
    match w {
        Witness::NonPositiveEntry { .. } => "nonpositive-entry",
        Witness::PolytopeViolation { .. } => "polytope-violation",
        Witness::WrongTotal { .. } => "wrong-total",
        Witness::IntegralSum { .. } => "integral-sum",
        Witness::PoleNotRoot { .. } => "pole-not-root",
        Witness::HyperplaneNotInZeroLocus { .. } => "hyperplane-not-in-zero-locus",
        Witness::NotCandidate { .. } => "not-candidate",
    }
}

/// The machine-readable report. Sections not computed by a command are
/// omitted; command-specific data goes under `details`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: ArrangementFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<Vec<DatumJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lct: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate_poles: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poles: Option<PolesJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictJson>,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub details: serde_json::Map<String, serde_json::Value>,
}

impl Report {
    pub fn new(command: &str, arr: &Arrangement) -> Self {
        Self {
            command: command.to_owned(),
            input: ArrangementFile::from_arrangement(arr),
            lattice: None,
            resolution: None,
            lct: None,
            candidate_poles: None,
            zeta: None,
            poles: None,
            verdicts: Vec::new(),
            details: serde_json::Map::new(),
        }
    }

    pub fn with_zeta(mut self, z: &ZetaFunction) -> Self {
        self.zeta = Some(z.into());
        self.poles = Some((&z.poles()).into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }
}

/// Rational list as `"p/q"` strings.
pub fn rational_texts(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}
