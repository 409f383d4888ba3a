//! The parametric polynomial families.
//!
//! Everything grows out of one two-variable base polynomial
//!
//!   h = (z1^{q+j} zbar1^j + z2^{q+j} zbar2^j)
//!       (z1^{r-j} - alpha z2^{r-j}) (zbar1^{r-j} - beta zbar2^{r-j})
//!
//! with q >= 1, r >= j >= 0 and generic constants alpha, beta. Its radial
//! degree is q + 2r and its polar degree is q. Two three-variable extensions
//! are provided: the join, adding z3^{q+r} zbar3^r, and the twisted join,
//! adding zbar2 z3^{q+r} zbar3^{r-1} (r >= 1). The twisted join with q = 1,
//! j = 0 is the degree-one family: curves of polar degree one and genus r.
//! A four-term alternate base with the same topology,
//! (z1^{r+1} - z2^{r+1})(zbar1 - beta zbar2), is also constructed.
//!
//! Constructors return fully expanded canonical polynomials; the factored
//! form is exposed separately because the root finder uses it as an oracle.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{MixedMonomial, MixedPolynomial, PolyError};

/// Upper bound on q, r, j. Keeps exponents small enough that every
/// invariant formula downstream stays far from i64 overflow.
pub const MAX_FAMILY_PARAM: i64 = 10_000;

/// Modulus comparisons in the genericity test use this tolerance.
pub const GENERICITY_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("constants not generic: need |alpha|, |beta| outside {{0, 1}} and |alpha| != |beta|")]
    NonGenericConstants,
    #[error("constant factors cancel the polynomial to zero")]
    DegenerateConstants,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Which family a polynomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    /// The two-variable base h.
    #[serde(rename = "base")]
    BaseH,
    /// h + z3^{q+r} zbar3^r.
    #[serde(rename = "join")]
    JoinC,
    /// h + zbar2 z3^{q+r} zbar3^{r-1}.
    #[serde(rename = "twisted")]
    TwistedS,
    /// The twisted join at q = 1, j = 0.
    #[serde(rename = "degree-one")]
    DegreeOneF,
    /// (z1^{r+1} - z2^{r+1})(zbar1 - beta zbar2).
    #[serde(rename = "remark11")]
    Remark11H,
}

impl FamilyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::BaseH => "base",
            FamilyKind::JoinC => "join",
            FamilyKind::TwistedS => "twisted",
            FamilyKind::DegreeOneF => "degree-one",
            FamilyKind::Remark11H => "remark11",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s {
            "base" => Ok(FamilyKind::BaseH),
            "join" => Ok(FamilyKind::JoinC),
            "twisted" => Ok(FamilyKind::TwistedS),
            "degree-one" => Ok(FamilyKind::DegreeOneF),
            "remark11" => Ok(FamilyKind::Remark11H),
            other => Err(FamilyError::InvalidParams(format!(
                "unknown family kind {other:?} (expected base, join, twisted, degree-one, remark11)"
            ))),
        }
    }
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        w.write_str(self.as_str())
    }
}

/// Complex constants serialize as [re, im] pairs.
pub mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(c: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [c.re, c.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Parameters (q, r, j, alpha, beta) selecting one family member.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    #[serde(default = "default_q")]
    pub q: i64,
    #[serde(default = "default_r")]
    pub r: i64,
    #[serde(default)]
    pub j: i64,
    #[serde(default = "default_alpha", with = "complex_pair")]
    pub alpha: Complex64,
    #[serde(default = "default_beta", with = "complex_pair")]
    pub beta: Complex64,
}

fn default_q() -> i64 {
    1
}

fn default_r() -> i64 {
    1
}

fn default_alpha() -> Complex64 {
    Complex64::new(2.0, 0.0)
}

fn default_beta() -> Complex64 {
    Complex64::new(3.0, 0.0)
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            q: default_q(),
            r: default_r(),
            j: 0,
            alpha: default_alpha(),
            beta: default_beta(),
        }
    }
}

impl FamilyParams {
    pub fn new(q: i64, r: i64, j: i64) -> Self {
        FamilyParams {
            q,
            r,
            j,
            ..Default::default()
        }
    }

    pub fn with_constants(mut self, alpha: Complex64, beta: Complex64) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    /// Radial degree q + 2r of every family built from these parameters.
    pub fn radial_degree(&self) -> i64 {
        self.q + 2 * self.r
    }

    fn validate(&self) -> Result<(), FamilyError> {
        if self.q < 1 {
            return Err(FamilyError::InvalidParams(format!(
                "q must be >= 1, got {}",
                self.q
            )));
        }
        if self.j < 0 || self.r < self.j {
            return Err(FamilyError::InvalidParams(format!(
                "need r >= j >= 0, got r = {}, j = {}",
                self.r, self.j
            )));
        }
        if self.q > MAX_FAMILY_PARAM || self.r > MAX_FAMILY_PARAM {
            return Err(FamilyError::InvalidParams(format!(
                "parameters capped at {MAX_FAMILY_PARAM}, got q = {}, r = {}",
                self.q, self.r
            )));
        }
        if !self.alpha.is_finite() || !self.beta.is_finite() {
            return Err(FamilyError::InvalidParams(
                "alpha and beta must be finite".into(),
            ));
        }
        // The r = j case multiplies alpha, beta only into the constant
        // (1 - alpha)(1 - beta), so genericity is not needed there.
        if self.r > self.j && !validate_generic(self.alpha, self.beta) {
            return Err(FamilyError::NonGenericConstants);
        }
        Ok(())
    }
}

/// True iff |alpha| and |beta| avoid 0 and 1 and differ from each other,
/// all with tolerance [`GENERICITY_TOL`]. These conditions keep the three
/// factor root sets disjoint on the projective line.
pub fn validate_generic(alpha: Complex64, beta: Complex64) -> bool {
    let a = alpha.norm();
    let b = beta.norm();
    let away = |x: f64, c: f64| (x - c).abs() > GENERICITY_TOL;
    away(a, 0.0) && away(a, 1.0) && away(b, 0.0) && away(b, 1.0) && (a - b).abs() > GENERICITY_TOL
}

fn exp_u32(v: i64) -> u32 {
    // Callers validate v against MAX_FAMILY_PARAM sums first.
    u32::try_from(v).expect("validated exponent")
}

fn c_one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// The three factors of the base polynomial, in two variables:
/// A = z1^{q+j} zbar1^j + z2^{q+j} zbar2^j, B = z1^{r-j} - alpha z2^{r-j},
/// C = zbar1^{r-j} - beta zbar2^{r-j}. With r = j, B and C are the constants
/// 1 - alpha and 1 - beta.
pub fn h_factors(p: &FamilyParams) -> Result<[MixedPolynomial; 3], FamilyError> {
    p.validate()?;
    let qj = exp_u32(p.q + p.j);
    let j = exp_u32(p.j);
    let k = exp_u32(p.r - p.j);
    let a = MixedPolynomial::new(
        vec![
            MixedMonomial::new(c_one(), vec![qj, 0], vec![j, 0]),
            MixedMonomial::new(c_one(), vec![0, qj], vec![0, j]),
        ],
        2,
    )?;
    let b = MixedPolynomial::new(
        vec![
            MixedMonomial::new(c_one(), vec![k, 0], vec![0, 0]),
            MixedMonomial::new(-p.alpha, vec![0, k], vec![0, 0]),
        ],
        2,
    )?;
    let c = MixedPolynomial::new(
        vec![
            MixedMonomial::new(c_one(), vec![0, 0], vec![k, 0]),
            MixedMonomial::new(-p.beta, vec![0, 0], vec![0, k]),
        ],
        2,
    )?;
    Ok([a, b, c])
}

/// The expanded base polynomial h in two variables.
pub fn make_h(p: &FamilyParams) -> Result<MixedPolynomial, FamilyError> {
    let [a, b, c] = h_factors(p)?;
    let h = a.multiply(&b)?.multiply(&c)?;
    if h.is_zero() {
        // Possible only at r = j with alpha or beta equal to 1 exactly.
        return Err(FamilyError::DegenerateConstants);
    }
    Ok(h)
}

/// The join family in three variables: h + z3^{q+r} zbar3^r.
pub fn make_join(p: &FamilyParams) -> Result<MixedPolynomial, FamilyError> {
    let h = make_h(p)?.extend_vars(3)?;
    let joint = MixedPolynomial::new(
        vec![MixedMonomial::new(
            c_one(),
            vec![0, 0, exp_u32(p.q + p.r)],
            vec![0, 0, exp_u32(p.r)],
        )],
        3,
    )?;
    Ok(h.add(&joint)?)
}

/// The twisted join family in three variables: h + zbar2 z3^{q+r} zbar3^{r-1}.
/// Requires r >= 1 so the twist exponent r - 1 is a valid power.
pub fn make_twisted(p: &FamilyParams) -> Result<MixedPolynomial, FamilyError> {
    if p.r < 1 {
        return Err(FamilyError::InvalidParams(format!(
            "twisted join needs r >= 1, got r = {}",
            p.r
        )));
    }
    let h = make_h(p)?.extend_vars(3)?;
    let twist = MixedPolynomial::new(
        vec![MixedMonomial::new(
            c_one(),
            vec![0, 0, exp_u32(p.q + p.r)],
            vec![0, 1, exp_u32(p.r - 1)],
        )],
        3,
    )?;
    Ok(h.add(&twist)?)
}

/// The polar degree one family: the twisted join at q = 1, j = 0. Its curve
/// has genus r.
pub fn make_degree_one(
    r: i64,
    alpha: Complex64,
    beta: Complex64,
) -> Result<MixedPolynomial, FamilyError> {
    make_twisted(&FamilyParams {
        q: 1,
        r,
        j: 0,
        alpha,
        beta,
    })
}

/// The alternate four-term base (z1^{r+1} - z2^{r+1})(zbar1 - beta zbar2),
/// radial degree r + 2, polar degree r. Requires |beta| outside {0, 1}.
pub fn make_remark11(r: i64, beta: Complex64) -> Result<MixedPolynomial, FamilyError> {
    if !(1..=MAX_FAMILY_PARAM).contains(&r) {
        return Err(FamilyError::InvalidParams(format!(
            "need 1 <= r <= {MAX_FAMILY_PARAM}, got {r}"
        )));
    }
    let bmod = beta.norm();
    if !beta.is_finite() || bmod < GENERICITY_TOL || (bmod - 1.0).abs() < GENERICITY_TOL {
        return Err(FamilyError::NonGenericConstants);
    }
    let r1 = exp_u32(r + 1);
    let hol = MixedPolynomial::new(
        vec![
            MixedMonomial::new(c_one(), vec![r1, 0], vec![0, 0]),
            MixedMonomial::new(-c_one(), vec![0, r1], vec![0, 0]),
        ],
        2,
    )?;
    let anti = MixedPolynomial::new(
        vec![
            MixedMonomial::new(c_one(), vec![0, 0], vec![1, 0]),
            MixedMonomial::new(-beta, vec![0, 0], vec![0, 1]),
        ],
        2,
    )?;
    Ok(hol.multiply(&anti)?)
}

/// All k-th roots of c (k >= 1).
fn nth_roots(c: Complex64, k: u32) -> Vec<Complex64> {
    let modulus = c.norm().powf(1.0 / k as f64);
    let base_arg = c.arg() / k as f64;
    (0..k)
        .map(|m| {
            Complex64::from_polar(
                modulus,
                base_arg + 2.0 * std::f64::consts::PI * m as f64 / k as f64,
            )
        })
        .collect()
}

/// Exact zeros of the base polynomial in the affine chart z2 = 1: the q-th
/// roots of -1 (from the first factor, which forces |w| = 1), the
/// (r-j)-th roots of alpha, and the conjugated (r-j)-th roots of beta.
/// The chart misses no zero: h(1, 0) = 1. With the genericity conditions
/// the three sets are disjoint, giving q + 2(r - j) points.
pub fn h_chart_roots(p: &FamilyParams) -> Result<Vec<Complex64>, FamilyError> {
    p.validate()?;
    let mut roots = nth_roots(-c_one(), exp_u32(p.q));
    let k = exp_u32(p.r - p.j);
    if k > 0 {
        roots.extend(nth_roots(p.alpha, k));
        roots.extend(nth_roots(p.beta, k).into_iter().map(|w| w.conj()));
    }
    Ok(roots)
}

/// Exact chart zeros of the alternate base: the (r+1)-th roots of unity and
/// the conjugate of beta, r + 2 points in total.
pub fn remark11_chart_roots(r: i64, beta: Complex64) -> Result<Vec<Complex64>, FamilyError> {
    if !(1..=MAX_FAMILY_PARAM).contains(&r) {
        return Err(FamilyError::InvalidParams(format!(
            "need 1 <= r <= {MAX_FAMILY_PARAM}, got {r}"
        )));
    }
    let mut roots = nth_roots(c_one(), exp_u32(r + 1));
    roots.push(beta.conj());
    Ok(roots)
}

/// A family selection as exchanged with the CLI and config files:
/// {"kind":"twisted","q":1,"r":2,"j":0,"alpha":[2,0],"beta":[3,0]}.
/// Omitted parameters default to q = 1, r = 1, j = 0, alpha = 2, beta = 3.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    #[serde(flatten)]
    pub params: FamilyParams,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: FamilyParams) -> Self {
        FamilySpec { kind, params }
    }

    /// Constructs the selected polynomial. The degree-one kind insists on
    /// q = 1, j = 0; the alternate base reads only r and beta.
    pub fn build(&self) -> Result<MixedPolynomial, FamilyError> {
        match self.kind {
            FamilyKind::BaseH => make_h(&self.params),
            FamilyKind::JoinC => make_join(&self.params),
            FamilyKind::TwistedS => make_twisted(&self.params),
            FamilyKind::DegreeOneF => {
                if self.params.q != 1 || self.params.j != 0 {
                    return Err(FamilyError::InvalidParams(format!(
                        "degree-one family fixes q = 1 and j = 0, got q = {}, j = {}",
                        self.params.q, self.params.j
                    )));
                }
                make_degree_one(self.params.r, self.params.alpha, self.params.beta)
            }
            FamilyKind::Remark11H => make_remark11(self.params.r, self.params.beta),
        }
    }

    /// The analytic chart-root oracle for the two-variable kinds, if this
    /// kind has one.
    pub fn chart_roots(&self) -> Option<Result<Vec<Complex64>, FamilyError>> {
        match self.kind {
            FamilyKind::BaseH => Some(h_chart_roots(&self.params)),
            FamilyKind::Remark11H => Some(remark11_chart_roots(self.params.r, self.params.beta)),
            _ => None,
        }
    }
}
