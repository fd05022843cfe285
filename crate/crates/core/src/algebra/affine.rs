use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

/// Affine-linear form `N_1 s_1 + ... + N_k s_k + ν` with integer
/// coefficients.
///
/// Zeta-function denominators are kept in canonical form: coprime entries
/// and a positive leading coefficient, so two forms define the same
/// hyperplane exactly when they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    coeffs: Vec<BigInt>,
    constant: BigInt,
}

impl AffineForm {
    pub fn new(coeffs: Vec<BigInt>, constant: BigInt) -> Self {
        Self { coeffs, constant }
    }

    pub fn from_i64(coeffs: &[i64], constant: i64) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect(), constant.into())
    }

    /// Canonical form of `Σ N_j s_j + ν` for nonnegative orders.
    pub fn from_orders(orders: &[u64], nu: u64) -> Self {
        Self::new(orders.iter().map(|&c| c.into()).collect(), nu.into()).canonical().1
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Splits `self = c · canonical` with `c` a nonzero integer. The zero
    /// form is returned unchanged with scalar 1.
    pub fn canonical(&self) -> (Rational, AffineForm) {
        let g = self
            .coeffs
            .iter()
            .fold(self.constant.abs(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return (Rational::one(), self.clone());
        }
        let lead = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .find(|x| !x.is_zero())
            .unwrap();
        let scalar = if lead.is_negative() { -g } else { g };
        let form = AffineForm {
            coeffs: self.coeffs.iter().map(|x| x / &scalar).collect(),
            constant: &self.constant / &scalar,
        };
        (Rational::from_integer(scalar), form)
    }

    pub fn is_canonical(&self) -> bool {
        &self.canonical().1 == self
    }

    pub fn to_poly(&self) -> MultiPoly {
        let coeffs: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        MultiPoly::linear(&coeffs, Rational::from_integer(self.constant.clone()))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        self.coeffs
            .iter()
            .zip(point)
            .fold(Rational::from_integer(self.constant.clone()), |acc, (c, x)| {
                acc + Rational::from_integer(c.clone()) * x
            })
    }

    /// Root of a univariate form `N s + ν`.
    pub fn root(&self) -> Option<Rational> {
        if self.nvars() != 1 || self.coeffs[0].is_zero() {
            return None;
        }
        Some(-Rational::new(self.constant.clone(), self.coeffs[0].clone()))
    }

    /// Substitutes `s_j = w_j · s`, giving a univariate form.
    pub fn specialize(&self, weights: &[BigInt]) -> AffineForm {
        assert_eq!(weights.len(), self.nvars());
        let n: BigInt = self.coeffs.iter().zip(weights).map(|(c, w)| c * w).sum();
        AffineForm::new(vec![n], self.constant.clone())
    }

    /// Exact quotient `p / self`, or `None` if the division leaves a
    /// remainder.
    pub fn divide(&self, p: &MultiPoly) -> Result<Option<MultiPoly>> {
        let var = self.pivot_var()?;
        let lead = Rational::from_integer(self.coeffs[var].clone());
        let divisor = self.to_poly();
        let k = p.nvars();
        let mut rest = p.clone();
        let mut quotient = MultiPoly::zero(k);
        loop {
            let top = rest
                .terms()
                .filter(|(e, _)| e[var] > 0)
                .max_by_key(|(e, _)| e[var])
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((mut e, c)) = top else { break };
            e[var] -= 1;
            let step = MultiPoly::from_terms(k, [(e, c / &lead)]);
            rest = &rest - &(&step * &divisor);
            quotient = &quotient + &step;
        }
        Ok(rest.is_zero().then_some(quotient))
    }

    fn pivot_var(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ConstantForm)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if mag.is_one() {
                name.clone()
            } else {
                format!("{mag}{name}")
            };
            parts.push((c.is_negative(), body));
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push((self.constant.is_negative(), self.constant.abs().to_string()));
        }
        let mut out = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&super::poly::variable_names(self.nvars())))
    }
}

/// Whether the affine form divides `p`, decided by substituting the
/// solution of `form = 0` for one variable and testing for zero.
pub fn divides_linear(form: &AffineForm, p: &MultiPoly) -> Result<bool> {
    let var = form.pivot_var()?;
    let k = form.nvars();
    if p.nvars() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: p.nvars(),
        });
    }
    let lead = Rational::from_integer(form.coeffs[var].clone());
    let images: Vec<MultiPoly> = (0..k)
        .map(|j| {
            if j != var {
                return MultiPoly::var(k, j);
            }
            let mut coeffs: Vec<Rational> = form
                .coeffs
                .iter()
                .map(|c| -Rational::from_integer(c.clone()) / &lead)
                .collect();
            coeffs[var] = Rational::zero();
            MultiPoly::linear(&coeffs, -Rational::from_integer(form.constant.clone()) / &lead)
        })
        .collect();
    Ok(p.compose(&images).is_zero())
}
