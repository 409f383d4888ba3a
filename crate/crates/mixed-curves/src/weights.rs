//! Weight systems for mixed polynomials, over exact rational arithmetic.
//!
//! A mixed polynomial is polar weighted homogeneous when there are integer
//! weight vectors Q (radial) and P (polar) with degrees d and q such that
//! every monomial satisfies sum q_i (nu_i + mu_i) = d and
//! sum p_i (nu_i - mu_i) = q. Inference solves the two linear systems, one
//! row per monomial, exactly over the rationals; floating point never enters
//! this module. The twisted-join extension appends a weight for one new
//! variable and rescales degrees through an lcm of denominators, which is an
//! exact-arithmetic statement and the reason for the rational core.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::MixedPolynomial;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq)]
pub enum WeightError {
    #[error("polynomial has no terms")]
    EmptyPolynomial,
    #[error("weight system is underdetermined (solution space dimension {nullity})")]
    UnderdeterminedWeights { nullity: usize },
    #[error("radial weights must be positive, found a zero or negative solution")]
    NonPositiveRadialWeight,
    #[error("weight does not fit in a 64-bit integer")]
    WeightOverflow,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid weight system: {0}")]
    InvalidWeightSystem(String),
}

/// Radial and polar weights with their degrees and exact normalized forms.
///
/// The normalized vectors are derived data: Qn_i = q_i/d and Pn_i = p_i/q_pol
/// always, enforced on construction and on deserialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WeightSystemRepr", into = "WeightSystemRepr")]
pub struct WeightSystem {
    radial: Vec<i64>,
    radial_degree: i64,
    polar: Vec<i64>,
    polar_degree: i64,
    radial_normalized: Vec<Rational>,
    polar_normalized: Vec<Rational>,
}

impl WeightSystem {
    /// Validates q_i >= 1, d >= 1, q_pol >= 1 and equal lengths, then fills
    /// in the normalized forms.
    pub fn new(
        radial: Vec<i64>,
        radial_degree: i64,
        polar: Vec<i64>,
        polar_degree: i64,
    ) -> Result<Self, WeightError> {
        if radial.len() != polar.len() {
            return Err(WeightError::InvalidWeightSystem(format!(
                "radial and polar weight counts differ: {} vs {}",
                radial.len(),
                polar.len()
            )));
        }
        if radial.is_empty() {
            return Err(WeightError::InvalidWeightSystem(
                "weight vectors are empty".into(),
            ));
        }
        if radial_degree < 1 || polar_degree < 1 {
            return Err(WeightError::InvalidWeightSystem(format!(
                "degrees must be positive, got d = {radial_degree}, q = {polar_degree}"
            )));
        }
        if radial.iter().any(|&q| q < 1) {
            return Err(WeightError::InvalidWeightSystem(
                "radial weights must be positive".into(),
            ));
        }
        let radial_normalized = radial
            .iter()
            .map(|&q| Rational::new(BigInt::from(q), BigInt::from(radial_degree)))
            .collect();
        let polar_normalized = polar
            .iter()
            .map(|&p| Rational::new(BigInt::from(p), BigInt::from(polar_degree)))
            .collect();
        Ok(WeightSystem {
            radial,
            radial_degree,
            polar,
            polar_degree,
            radial_normalized,
            polar_normalized,
        })
    }

    /// The standard weights (1,...,1) of a strongly polar homogeneous
    /// polynomial with radial degree `d` and polar degree `q_pol`.
    pub fn uniform(n_vars: usize, d: i64, q_pol: i64) -> Result<Self, WeightError> {
        Self::new(vec![1; n_vars], d, vec![1; n_vars], q_pol)
    }

    pub fn n_vars(&self) -> usize {
        self.radial.len()
    }

    pub fn radial(&self) -> &[i64] {
        &self.radial
    }

    pub fn radial_degree(&self) -> i64 {
        self.radial_degree
    }

    pub fn polar(&self) -> &[i64] {
        &self.polar
    }

    pub fn polar_degree(&self) -> i64 {
        self.polar_degree
    }

    pub fn radial_normalized(&self) -> &[Rational] {
        &self.radial_normalized
    }

    pub fn polar_normalized(&self) -> &[Rational] {
        &self.polar_normalized
    }

    pub fn is_uniform(&self) -> bool {
        self.radial.iter().all(|&q| q == 1) && self.polar.iter().all(|&p| p == 1)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightSystemRepr {
    #[serde(rename = "Q")]
    radial: Vec<i64>,
    #[serde(rename = "d")]
    radial_degree: i64,
    #[serde(rename = "P")]
    polar: Vec<i64>,
    #[serde(rename = "q")]
    polar_degree: i64,
    #[serde(rename = "Qn")]
    radial_normalized: Vec<String>,
    #[serde(rename = "Pn")]
    polar_normalized: Vec<String>,
}

impl From<WeightSystem> for WeightSystemRepr {
    fn from(ws: WeightSystem) -> Self {
        WeightSystemRepr {
            radial: ws.radial,
            radial_degree: ws.radial_degree,
            polar: ws.polar,
            polar_degree: ws.polar_degree,
            radial_normalized: ws.radial_normalized.iter().map(|r| r.to_string()).collect(),
            polar_normalized: ws.polar_normalized.iter().map(|r| r.to_string()).collect(),
        }
    }
}

impl TryFrom<WeightSystemRepr> for WeightSystem {
    type Error = WeightError;

    fn try_from(repr: WeightSystemRepr) -> Result<Self, WeightError> {
        let ws = WeightSystem::new(
            repr.radial,
            repr.radial_degree,
            repr.polar,
            repr.polar_degree,
        )?;
        let parse_all = |strings: &[String]| -> Result<Vec<Rational>, WeightError> {
            strings
                .iter()
                .map(|s| {
                    s.parse::<Rational>().map_err(|e| {
                        WeightError::InvalidWeightSystem(format!("bad rational {s:?}: {e}"))
                    })
                })
                .collect()
        };
        let qn = parse_all(&repr.radial_normalized)?;
        let pn = parse_all(&repr.polar_normalized)?;
        if qn != ws.radial_normalized || pn != ws.polar_normalized {
            return Err(WeightError::InvalidWeightSystem(
                "normalized weights do not match Q/d and P/q".into(),
            ));
        }
        Ok(ws)
    }
}

/// Where a polynomial sits in the homogeneity hierarchy. A weight system is
/// attached exactly when the polynomial is polar weighted homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomogeneityClass {
    NotWeightedHomogeneous,
    RadialOnly,
    PolarWeighted(WeightSystem),
    StronglyPolar(WeightSystem),
}

impl HomogeneityClass {
    pub fn weight_system(&self) -> Option<&WeightSystem> {
        match self {
            HomogeneityClass::PolarWeighted(ws) | HomogeneityClass::StronglyPolar(ws) => Some(ws),
            _ => None,
        }
    }

    pub fn is_strongly_polar(&self) -> bool {
        matches!(self, HomogeneityClass::StronglyPolar(_))
    }
}

enum ExactSolution {
    Unique(Vec<Rational>),
    Underdetermined { nullity: usize },
    Inconsistent,
}

/// Gauss-Jordan elimination over the rationals. `rows` is the coefficient
/// matrix, `rhs` the right-hand side, both exact.
fn solve_exact(rows: &[Vec<Rational>], rhs: &[Rational]) -> ExactSolution {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(p) = (row..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].clone();
        for entry in &mut aug[row][col..=n] {
            *entry = &*entry / &inv;
        }
        let pivot_row = aug[row].clone();
        for (r, other) in aug.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (entry, pivot) in other[col..=n].iter_mut().zip(&pivot_row[col..=n]) {
                    let delta = &f * pivot;
                    *entry = &*entry - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let rank = row;
    if aug[rank..].iter().any(|r| !r[n].is_zero()) {
        return ExactSolution::Inconsistent;
    }
    if rank < n {
        return ExactSolution::Underdetermined { nullity: n - rank };
    }
    let x = (0..n)
        .map(|c| aug[pivot_of_col[c].expect("full rank")][n].clone())
        .collect();
    ExactSolution::Unique(x)
}

/// lcm of the (positive) denominators, and each value scaled by it. The
/// scaled values are exact integers.
fn integerize(values: &[Rational]) -> Result<(Vec<i64>, i64), WeightError> {
    let mut l = BigInt::one();
    for v in values {
        l = l.lcm(v.denom());
    }
    let degree = l.to_i64().ok_or(WeightError::WeightOverflow)?;
    let scaled = values
        .iter()
        .map(|v| {
            let w = v * Rational::from_integer(l.clone());
            debug_assert!(w.is_integer());
            w.to_integer().to_i64().ok_or(WeightError::WeightOverflow)
        })
        .collect::<Result<Vec<i64>, _>>()?;
    Ok((scaled, degree))
}

/// Infers the weight system of `f` by solving the radial and polar monomial
/// conditions exactly. Classification:
///
/// * radial system inconsistent: `NotWeightedHomogeneous`
/// * radial solvable, polar system inconsistent: `RadialOnly`
/// * both solvable with uniform minimal weights: `StronglyPolar`
/// * both solvable otherwise: `PolarWeighted`
///
/// Underdetermined systems are an error rather than a canonical choice:
/// every construction in this crate determines its weights uniquely, so a
/// free direction means malformed input (for instance an unused variable).
pub fn infer_weights(f: &MixedPolynomial) -> Result<HomogeneityClass, WeightError> {
    if f.is_zero() {
        return Err(WeightError::EmptyPolynomial);
    }
    let n = f.n_vars();
    let one = Rational::one();
    let radial_rows: Vec<Vec<Rational>> = f
        .terms()
        .iter()
        .map(|t| {
            (0..n)
                .map(|i| Rational::from_integer(BigInt::from(t.nu[i] as i64 + t.mu[i] as i64)))
                .collect()
        })
        .collect();
    let rhs = vec![one.clone(); radial_rows.len()];
    let radial = match solve_exact(&radial_rows, &rhs) {
        ExactSolution::Inconsistent => return Ok(HomogeneityClass::NotWeightedHomogeneous),
        ExactSolution::Underdetermined { nullity } => {
            return Err(WeightError::UnderdeterminedWeights { nullity })
        }
        ExactSolution::Unique(x) => x,
    };
    if radial.iter().any(|q| !q.is_positive()) {
        return Err(WeightError::NonPositiveRadialWeight);
    }
    let polar_rows: Vec<Vec<Rational>> = f
        .terms()
        .iter()
        .map(|t| {
            (0..n)
                .map(|i| Rational::from_integer(BigInt::from(t.nu[i] as i64 - t.mu[i] as i64)))
                .collect()
        })
        .collect();
    let polar = match solve_exact(&polar_rows, &rhs) {
        ExactSolution::Inconsistent => return Ok(HomogeneityClass::RadialOnly),
        ExactSolution::Underdetermined { nullity } => {
            return Err(WeightError::UnderdeterminedWeights { nullity })
        }
        ExactSolution::Unique(x) => x,
    };
    let (q_vec, d) = integerize(&radial)?;
    let (p_vec, q_pol) = integerize(&polar)?;
    let ws = WeightSystem::new(q_vec, d, p_vec, q_pol)?;
    if ws.is_uniform() {
        Ok(HomogeneityClass::StronglyPolar(ws))
    } else {
        Ok(HomogeneityClass::PolarWeighted(ws))
    }
}

/// True iff every monomial of `f` satisfies the two exact degree conditions
/// of `ws`. Accumulates in 128-bit to stay overflow-safe.
pub fn check_weights(f: &MixedPolynomial, ws: &WeightSystem) -> bool {
    if f.n_vars() != ws.n_vars() {
        return false;
    }
    f.terms().iter().all(|t| {
        let mut radial: i128 = 0;
        let mut polar: i128 = 0;
        for i in 0..f.n_vars() {
            radial += ws.radial[i] as i128 * (t.nu[i] as i128 + t.mu[i] as i128);
            polar += ws.polar[i] as i128 * (t.nu[i] as i128 - t.mu[i] as i128);
        }
        radial == ws.radial_degree as i128 && polar == ws.polar_degree as i128
    })
}

/// Extends `ws` (for f in n variables) to the twisted join
/// f + zbar_n z_{n+1}^a zbar_{n+1}^b, appending the unique weight for the
/// new variable and rescaling through lcm of denominators:
///
///   qbar = (1 - q_n/d) / (a + b),   pbar = (1 + p_n/q) / (a - b),
///   d_new = lcm(d, denom(qbar)),    q_new = lcm(q, denom(pbar)).
///
/// Requires a > b >= 0 and q_n < d; both new normalized weights must come
/// out positive.
pub fn twisted_join_weights(
    ws: &WeightSystem,
    a: u32,
    b: u32,
) -> Result<WeightSystem, WeightError> {
    if a <= b {
        return Err(WeightError::PreconditionViolated(format!(
            "twist exponents need a > b, got a = {a}, b = {b}"
        )));
    }
    let n = ws.n_vars();
    let q_n = &ws.radial_normalized[n - 1];
    let p_n = &ws.polar_normalized[n - 1];
    let one = Rational::one();
    if q_n >= &one {
        return Err(WeightError::PreconditionViolated(format!(
            "last radial weight must satisfy q_n < d, got q_n/d = {q_n}"
        )));
    }
    let qbar = (&one - q_n) / Rational::from_integer(BigInt::from(a as i64 + b as i64));
    let pbar = (&one + p_n) / Rational::from_integer(BigInt::from(a as i64 - b as i64));
    if !qbar.is_positive() || !pbar.is_positive() {
        return Err(WeightError::PreconditionViolated(format!(
            "extension weights must be positive, got qbar = {qbar}, pbar = {pbar}"
        )));
    }
    let d_new = BigInt::from(ws.radial_degree).lcm(qbar.denom());
    let q_new = BigInt::from(ws.polar_degree).lcm(pbar.denom());
    let scale_exact = |r: &Rational, m: &BigInt| -> Result<i64, WeightError> {
        let v = r * Rational::from_integer(m.clone());
        debug_assert!(v.is_integer());
        v.to_integer().to_i64().ok_or(WeightError::WeightOverflow)
    };
    let mut radial = Vec::with_capacity(n + 1);
    for qn_i in &ws.radial_normalized {
        radial.push(scale_exact(qn_i, &d_new)?);
    }
    radial.push(scale_exact(&qbar, &d_new)?);
    let mut polar = Vec::with_capacity(n + 1);
    for pn_i in &ws.polar_normalized {
        polar.push(scale_exact(pn_i, &q_new)?);
    }
    polar.push(scale_exact(&pbar, &q_new)?);
    WeightSystem::new(
        radial,
        d_new.to_i64().ok_or(WeightError::WeightOverflow)?,
        polar,
        q_new.to_i64().ok_or(WeightError::WeightOverflow)?,
    )
}

/// True iff the restriction of `f` to each coordinate hyperplane z_i = 0 is
/// nonzero.
pub fn is_1_convenient(f: &MixedPolynomial) -> bool {
    (1..=f.n_vars()).all(|i| f.restrict(i).map(|r| !r.is_zero()).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MixedMonomial;
    use num_complex::Complex64;

    fn term(re: f64, nu: &[u32], mu: &[u32]) -> MixedMonomial {
        MixedMonomial::new(Complex64::new(re, 0.0), nu.to_vec(), mu.to_vec())
    }

    fn poly(terms: Vec<MixedMonomial>, n: usize) -> MixedPolynomial {
        MixedPolynomial::new(terms, n).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn infer_strongly_polar_cone() {
        // z1^2 zbar1 + z2^2 zbar2: both monomials have |nu|+|mu| = 3 and
        // |nu|-|mu| = 1.
        let f = poly(
            vec![term(1.0, &[2, 0], &[1, 0]), term(1.0, &[0, 2], &[0, 1])],
            2,
        );
        match infer_weights(&f).unwrap() {
            HomogeneityClass::StronglyPolar(ws) => {
                assert_eq!(ws.radial(), &[1, 1]);
                assert_eq!(ws.radial_degree(), 3);
                assert_eq!(ws.polar(), &[1, 1]);
                assert_eq!(ws.polar_degree(), 1);
                assert_eq!(ws.radial_normalized(), &[rat(1, 3), rat(1, 3)]);
            }
            other => panic!("expected StronglyPolar, got {other:?}"),
        }
    }

    #[test]
    fn infer_radial_only() {
        // z1^2 + z1 zbar1: radial weight 1/2 fits both, polar rows demand
        // 2 p = 1 and 0 = 1 at once.
        let f = poly(vec![term(1.0, &[2], &[0]), term(1.0, &[1], &[1])], 1);
        assert_eq!(infer_weights(&f).unwrap(), HomogeneityClass::RadialOnly);
    }

    #[test]
    fn infer_underdetermined() {
        let f = poly(vec![term(1.0, &[1, 0], &[0, 1])], 2);
        assert_eq!(
            infer_weights(&f).unwrap_err(),
            WeightError::UnderdeterminedWeights { nullity: 1 }
        );
    }

    #[test]
    fn infer_not_weighted_homogeneous() {
        // z1 + z1^2 + z1^3: three incompatible radial rows.
        let f = poly(
            vec![
                term(1.0, &[1], &[0]),
                term(1.0, &[2], &[0]),
                term(1.0, &[3], &[0]),
            ],
            1,
        );
        assert_eq!(
            infer_weights(&f).unwrap(),
            HomogeneityClass::NotWeightedHomogeneous
        );
    }

    #[test]
    fn infer_rejects_empty() {
        assert_eq!(
            infer_weights(&MixedPolynomial::zero(2)).unwrap_err(),
            WeightError::EmptyPolynomial
        );
    }

    #[test]
    fn infer_nonuniform_weights() {
        // z1^2 + z2^3 is holomorphic weighted homogeneous with Q = (3, 2),
        // d = 6; polar system coincides, so it is PolarWeighted, not
        // strongly polar.
        let f = poly(
            vec![term(1.0, &[2, 0], &[0, 0]), term(1.0, &[0, 3], &[0, 0])],
            2,
        );
        match infer_weights(&f).unwrap() {
            HomogeneityClass::PolarWeighted(ws) => {
                assert_eq!(ws.radial(), &[3, 2]);
                assert_eq!(ws.radial_degree(), 6);
                assert_eq!(ws.polar(), &[3, 2]);
                assert_eq!(ws.polar_degree(), 6);
            }
            other => panic!("expected PolarWeighted, got {other:?}"),
        }
    }

    #[test]
    fn infer_negative_polar_weight() {
        // zbar1 alone: polar row -p = 1.
        let f = poly(vec![term(1.0, &[0], &[1])], 1);
        match infer_weights(&f).unwrap() {
            HomogeneityClass::PolarWeighted(ws) => {
                assert_eq!(ws.polar(), &[-1]);
                assert_eq!(ws.polar_degree(), 1);
                assert_eq!(ws.radial(), &[1]);
            }
            other => panic!("expected PolarWeighted, got {other:?}"),
        }
    }

    #[test]
    fn infer_scale_invariant() {
        let f = poly(
            vec![term(2.0, &[2, 0], &[1, 0]), term(2.0, &[0, 2], &[0, 1])],
            2,
        );
        let g = f.scale(Complex64::new(0.0, -3.5)).unwrap();
        assert_eq!(infer_weights(&f).unwrap(), infer_weights(&g).unwrap());
    }

    #[test]
    fn check_weights_exact() {
        // The six-term expansion of (z1+z2)(z1-2z2)(zbar1-3zbar2).
        let h = poly(
            vec![
                term(-2.0, &[0, 2], &[1, 0]),
                term(6.0, &[0, 2], &[0, 1]),
                term(-1.0, &[1, 1], &[1, 0]),
                term(3.0, &[1, 1], &[0, 1]),
                term(1.0, &[2, 0], &[1, 0]),
                term(-3.0, &[2, 0], &[0, 1]),
            ],
            2,
        );
        let good = WeightSystem::uniform(2, 3, 1).unwrap();
        assert!(check_weights(&h, &good));
        let bad = WeightSystem::uniform(2, 4, 1).unwrap();
        assert!(!check_weights(&h, &bad));
    }

    #[test]
    fn twist_extension_unit_weights() {
        // Start from the weights of the cubic cone (d = 3, q = 1) and twist
        // with a = 2, b = 0: qbar = (1 - 1/3)/2 = 1/3, pbar = (1 + 1)/2 = 1.
        let ws = WeightSystem::uniform(2, 3, 1).unwrap();
        let ext = twisted_join_weights(&ws, 2, 0).unwrap();
        assert_eq!(ext.radial(), &[1, 1, 1]);
        assert_eq!(ext.radial_degree(), 3);
        assert_eq!(ext.polar(), &[1, 1, 1]);
        assert_eq!(ext.polar_degree(), 1);
    }

    #[test]
    fn twist_extension_octic() {
        // d = 8, q = 2 with a = 5, b = 2: qbar = (1 - 1/8)/7 = 1/8,
        // pbar = (1 + 1/2)/3 = 1/2, so degrees stay (8, 2).
        let ws = WeightSystem::uniform(2, 8, 2).unwrap();
        let ext = twisted_join_weights(&ws, 5, 2).unwrap();
        assert_eq!(ext.radial(), &[1, 1, 1]);
        assert_eq!(ext.radial_degree(), 8);
        assert_eq!(ext.polar(), &[1, 1, 1]);
        assert_eq!(ext.polar_degree(), 2);
        assert_eq!(ext.radial_normalized()[2], rat(1, 8));
        assert_eq!(ext.polar_normalized()[2], rat(1, 2));
    }

    #[test]
    fn twist_extension_denominator_growth() {
        // d = 3 with q_n/d = 1/3 and a + b = 4: qbar = (2/3)/4 = 1/6, so the
        // radial degree grows to lcm(3, 6) = 6.
        let ws = WeightSystem::new(vec![1, 1], 3, vec![1, 1], 1).unwrap();
        let ext = twisted_join_weights(&ws, 4, 0).unwrap();
        assert_eq!(ext.radial_degree(), 6);
        assert_eq!(ext.radial(), &[2, 2, 1]);
        // pbar = (1 + 1)/4 = 1/2: polar degree lcm(1, 2) = 2.
        assert_eq!(ext.polar_degree(), 2);
        assert_eq!(ext.polar(), &[2, 2, 1]);
    }

    #[test]
    fn twist_preconditions() {
        let ws = WeightSystem::uniform(2, 3, 1).unwrap();
        assert!(matches!(
            twisted_join_weights(&ws, 2, 2),
            Err(WeightError::PreconditionViolated(_))
        ));
        // q_n = d: normalized last weight is 1.
        let ws = WeightSystem::new(vec![1, 3], 3, vec![1, 1], 1).unwrap();
        assert!(matches!(
            twisted_join_weights(&ws, 2, 0),
            Err(WeightError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn one_convenience() {
        let h = poly(
            vec![
                term(1.0, &[2, 0], &[1, 0]),
                term(6.0, &[0, 2], &[0, 1]),
                term(-1.0, &[1, 1], &[1, 0]),
            ],
            2,
        );
        assert!(is_1_convenient(&h));
        let g = poly(vec![term(1.0, &[1, 1], &[0, 0])], 2);
        assert!(!is_1_convenient(&g));
    }

    #[test]
    fn weight_system_json_round_trip() {
        let ws = WeightSystem::new(vec![1, 1, 1], 3, vec![1, 1, 1], 1).unwrap();
        let s = serde_json::to_string(&ws).unwrap();
        assert!(s.contains("\"Q\":[1,1,1]"));
        assert!(s.contains("\"d\":3"));
        assert!(s.contains("\"Qn\":[\"1/3\",\"1/3\",\"1/3\"]"));
        assert!(s.contains("\"Pn\":[\"1\",\"1\",\"1\"]"));
        let back: WeightSystem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ws);
    }

    #[test]
    fn weight_system_json_rejects_mismatched_normals() {
        let bad = r#"{"Q":[1,1],"d":3,"P":[1,1],"q":1,"Qn":["1/2","1/3"],"Pn":["1","1"]}"#;
        assert!(serde_json::from_str::<WeightSystem>(bad).is_err());
        let bad = r#"{"Q":[1,0],"d":3,"P":[1,1],"q":1,"Qn":["1/3","0"],"Pn":["1","1"]}"#;
        assert!(serde_json::from_str::<WeightSystem>(bad).is_err());
    }
}
