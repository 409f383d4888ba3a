//! Closed-form invariants of the family curves and their Milnor fibrations.
//!
//! For a strongly polar homogeneous polynomial of polar degree q with Milnor
//! fiber F and projective curve V, the quantities here tie together as
//!
//!   chi(V) = n - chi(F)/q,   g(V) = (chi(F)/q - 1)/2,
//!   zeta(t) = (1 - t^q)^{-chi(F)/q},
//!
//! with n the number of variables. chi(F) itself comes from two independent
//! routes: a closed form per family, and a composition rule (join or twisted
//! join) building three-variable fibers out of two-variable ones. The two
//! routes agree everywhere for the join family. For the twisted family they
//! agree when q = 1 or r = j but differ otherwise; both values are always
//! reported side by side with a consistency flag, and the composition route
//! is the authoritative one since every unambiguous case confirms it.
//!
//! All arithmetic is exact. Divisions are checked; a non-integer genus or
//! Euler characteristic ratio is an error, never rounded.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{FamilyError, FamilyKind, FamilyParams, MAX_FAMILY_PARAM};

#[derive(Debug, Error, PartialEq)]
pub enum InvariantError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("required divisibility fails: {num} is not divisible by {den}")]
    DivisibilityViolation { num: i64, den: i64 },
    #[error("computed genus is negative: chi = {chi}, polar degree = {q}")]
    NegativeGenus { chi: i64, q: i64 },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn check_qrj(q: i64, r: i64, j: i64) -> Result<(), InvariantError> {
    if q < 1 || j < 0 || r < j {
        return Err(InvariantError::BadParams(format!(
            "need q >= 1 and r >= j >= 0, got q = {q}, r = {r}, j = {j}"
        )));
    }
    if q > MAX_FAMILY_PARAM || r > MAX_FAMILY_PARAM {
        return Err(InvariantError::BadParams(format!(
            "parameters capped at {MAX_FAMILY_PARAM}, got q = {q}, r = {r}"
        )));
    }
    Ok(())
}

/// chi of the Milnor fiber of the base family: -q((q - 2) + 2(r - j)).
pub fn chi_base(q: i64, r: i64, j: i64) -> Result<i64, InvariantError> {
    check_qrj(q, r, j)?;
    Ok(-q * ((q - 2) + 2 * (r - j)))
}

/// chi of the part of the base fiber inside the open torus (both
/// coordinates nonzero): -q(q + 2(r - j)). The full fiber adds one
/// q-point orbit on each axis, so chi_base = chi_base_torus + 2q.
pub fn chi_base_torus(q: i64, r: i64, j: i64) -> Result<i64, InvariantError> {
    check_qrj(q, r, j)?;
    Ok(-q * (q + 2 * (r - j)))
}

/// Number of link components of the base family curve: q + 2(r - j). This
/// is also the number of points of the curve on the projective line.
pub fn link_count(q: i64, r: i64, j: i64) -> Result<i64, InvariantError> {
    check_qrj(q, r, j)?;
    Ok(q + 2 * (r - j))
}

/// chi of the join family fiber, closed form:
/// q(q - 1)(q - 2) + 2q(q - 1)(r - j) + q.
pub fn chi_join_family(q: i64, r: i64, j: i64) -> Result<i64, InvariantError> {
    check_qrj(q, r, j)?;
    Ok(q * (q - 1) * (q - 2) + 2 * q * (q - 1) * (r - j) + q)
}

/// Euler characteristic of a join of two fibrations: reduced Euler
/// characteristics multiply with a sign, so chi = 1 - (chi_f - 1)(chi_k - 1).
pub fn join_chi(chi_f: i64, chi_k: i64) -> i64 {
    let v = 1 - (chi_f as i128 - 1) * (chi_k as i128 - 1);
    i64::try_from(v).expect("join_chi overflow")
}

/// chi of a twisted join fiber with twist exponents a > b >= 0, given the
/// fiber chi of the base and of its last-variable hyperplane section:
/// -(a - b - 1) chi_f + (a - b) chi_section.
pub fn chi_twisted(a: i64, b: i64, chi_f: i64, chi_section: i64) -> Result<i64, InvariantError> {
    if b < 0 || a <= b {
        return Err(InvariantError::BadParams(format!(
            "twist exponents need a > b >= 0, got a = {a}, b = {b}"
        )));
    }
    let v = -(a as i128 - b as i128 - 1) * chi_f as i128
        + (a as i128 - b as i128) * chi_section as i128;
    i64::try_from(v).map_err(|_| InvariantError::BadParams("twisted chi overflows i64".into()))
}

/// The two published-route values of chi for a twisted family fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedChi {
    /// Composition route: chi_twisted(q + r, r - 1, chi_base, q).
    pub composed: i64,
    /// Closed form q(q^2 - q + 1 + 2(r - j)).
    pub closed_form: i64,
    pub consistent: bool,
}

/// Both chi routes for the twisted family member (q, r, j), r >= 1. The
/// twist monomial zbar2 z3^{q+r} zbar3^{r-1} has exponents a = q + r,
/// b = r - 1, and the section of the base by z2 = 0 is a single monomial
/// whose fiber has q points, so chi_section = q.
pub fn chi_twisted_family(q: i64, r: i64, j: i64) -> Result<TwistedChi, InvariantError> {
    check_qrj(q, r, j)?;
    if r < 1 {
        return Err(InvariantError::BadParams(format!(
            "twisted family needs r >= 1, got r = {r}"
        )));
    }
    let composed = chi_twisted(q + r, r - 1, chi_base(q, r, j)?, q)?;
    let closed_form = q * (q * q - q + 1 + 2 * (r - j));
    Ok(TwistedChi {
        composed,
        closed_form,
        consistent: composed == closed_form,
    })
}

/// Genus from the fiber chi: (chi/q - 1)/2. Both divisions are exact or the
/// call fails; a negative result is invalid input, not a curve.
pub fn genus_from_chi(chi: i64, q: i64) -> Result<i64, InvariantError> {
    if q < 1 {
        return Err(InvariantError::BadParams(format!(
            "polar degree must be positive, got {q}"
        )));
    }
    if chi % q != 0 {
        return Err(InvariantError::DivisibilityViolation { num: chi, den: q });
    }
    let ratio = chi / q;
    if (ratio - 1) % 2 != 0 {
        return Err(InvariantError::DivisibilityViolation {
            num: ratio - 1,
            den: 2,
        });
    }
    let g = (ratio - 1) / 2;
    if g < 0 {
        return Err(InvariantError::NegativeGenus { chi, q });
    }
    Ok(g)
}

/// chi of the projective zero set and of its complement in P^{n-1}:
/// chi_V = n - chi/q and chi(complement) = chi/q, so chi = q * chi(complement).
pub fn chi_projective(n: i64, chi: i64, q: i64) -> Result<(i64, i64), InvariantError> {
    if q < 1 {
        return Err(InvariantError::BadParams(format!(
            "polar degree must be positive, got {q}"
        )));
    }
    if chi % q != 0 {
        return Err(InvariantError::DivisibilityViolation { num: chi, den: q });
    }
    let complement = chi / q;
    Ok((n - complement, complement))
}

/// A formal product of factors (1 - t^k)^e. The empty product is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaFactorization {
    factors: Vec<ZetaFactor>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaFactor {
    pub k: i64,
    pub e: i64,
}

impl ZetaFactorization {
    /// Merges duplicate k, sorts ascending, drops zero exponents.
    pub fn new(factors: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, InvariantError> {
        use std::collections::BTreeMap;
        let mut merged: BTreeMap<i64, i64> = BTreeMap::new();
        for (k, e) in factors {
            if k < 1 {
                return Err(InvariantError::BadParams(format!(
                    "factor period must be positive, got {k}"
                )));
            }
            *merged.entry(k).or_insert(0) += e;
        }
        Ok(ZetaFactorization {
            factors: merged
                .into_iter()
                .filter(|&(_, e)| e != 0)
                .map(|(k, e)| ZetaFactor { k, e })
                .collect(),
        })
    }

    pub fn one() -> Self {
        ZetaFactorization {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[ZetaFactor] {
        &self.factors
    }
}

impl std::fmt::Display for ZetaFactorization {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return w.write_str("1");
        }
        for (i, f) in self.factors.iter().enumerate() {
            if i > 0 {
                w.write_str("*")?;
            }
            if f.k == 1 {
                w.write_str("(1-t)")?;
            } else {
                write!(w, "(1-t^{})", f.k)?;
            }
            if f.e != 1 {
                write!(w, "^{{{}}}", f.e)?;
            }
        }
        Ok(())
    }
}

/// Monodromy zeta function of the fibration: (1 - t^q)^{-chi/q}.
pub fn zeta_function(chi: i64, q: i64) -> Result<ZetaFactorization, InvariantError> {
    if q < 1 {
        return Err(InvariantError::BadParams(format!(
            "polar degree must be positive, got {q}"
        )));
    }
    if chi % q != 0 {
        return Err(InvariantError::DivisibilityViolation { num: chi, den: q });
    }
    ZetaFactorization::new([(q, -chi / q)])
}

/// Lower bound (q - 1)(q - 2)/2 for the genus of a degree-q embedded curve.
pub fn thom_bound(q: i64) -> i64 {
    (q - 1) * (q - 2) / 2
}

/// Genus of a smooth holomorphic plane curve of degree q; numerically the
/// same expression as the bound.
pub fn plucker_genus(q: i64) -> i64 {
    thom_bound(q)
}

/// Genus of the join family curve: (q - 1)(q - 2)/2 + (q - 1)(r - j).
pub fn genus_join_family(q: i64, r: i64, j: i64) -> Result<i64, InvariantError> {
    check_qrj(q, r, j)?;
    Ok((q - 1) * (q - 2) / 2 + (q - 1) * (r - j))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanStatus {
    Twisted,
    Join,
    Unknown,
}

/// Result of the genus/degree planner: which family realizes a curve of the
/// requested genus and polar degree, if one is known. Serializes with the
/// parameter fields inlined, {"status":"Twisted","q":1,"r":5,"j":0,...}.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddingPlan {
    pub status: PlanStatus,
    #[serde(flatten)]
    pub params: Option<FamilyParams>,
    pub notes: String,
}

/// Picks a family member of genus g and polar degree q.
///
/// Preference order: the twisted family whenever g >= q(q-1)/2, with
/// r = g - q(q-1)/2 + 1 and j = 1 (for q = 1 the member is r = g, j = 0
/// when g >= 1, and r = j = 1 when g = 0, since a twist exponent r - 1 < 0
/// is ill-formed). Otherwise the join family when the residue
/// g - (q-1)(q-2)/2 is nonnegative and divisible by q - 1. Otherwise no
/// member is known and the plan is Unknown; every returned plan satisfies
/// g >= (q-1)(q-2)/2.
pub fn plan_embedding(g: i64, q: i64) -> EmbeddingPlan {
    if !(0..=MAX_FAMILY_PARAM).contains(&g) || !(1..=MAX_FAMILY_PARAM).contains(&q) {
        return EmbeddingPlan {
            status: PlanStatus::Unknown,
            params: None,
            notes: format!(
                "out of range: need 0 <= g <= {MAX_FAMILY_PARAM} and 1 <= q <= {MAX_FAMILY_PARAM}, got g = {g}, q = {q}"
            ),
        };
    }
    let twisted_floor = q * (q - 1) / 2;
    if g >= twisted_floor {
        let (r, j) = if q == 1 {
            if g >= 1 {
                (g, 0)
            } else {
                (1, 1)
            }
        } else {
            (g - twisted_floor + 1, 1)
        };
        let params = FamilyParams::new(q, r, j);
        let mut notes = format!(
            "twisted member with r = {r}, j = {j}: closed-form genus q(q-1)/2 + (r-j) = {g}"
        );
        if q >= 2 && r > j {
            let composed_genus = twisted_floor + q * (r - j);
            notes.push_str(&format!(
                "; caution: the composition route gives genus {composed_genus} for the same member, and the discrepancy between the two routes is unresolved"
            ));
        }
        return EmbeddingPlan {
            status: PlanStatus::Twisted,
            params: Some(params),
            notes,
        };
    }
    // q >= 2 from here on: q = 1 always lands in the twisted branch.
    let residue = g - plucker_genus(q);
    if residue >= 0 && residue % (q - 1) == 0 {
        let diff = residue / (q - 1);
        let params = FamilyParams::new(q, 1 + diff, 1);
        return EmbeddingPlan {
            status: PlanStatus::Join,
            params: Some(params),
            notes: format!(
                "join member with r - j = {diff}: genus (q-1)(q-2)/2 + (q-1)(r-j) = {g}"
            ),
        };
    }
    EmbeddingPlan {
        status: PlanStatus::Unknown,
        params: None,
        notes: format!(
            "no known member: g = {g} is below the twisted-family floor q(q-1)/2 = {twisted_floor}, and g - (q-1)(q-2)/2 = {residue} is negative or not divisible by q - 1 = {}; whether such an embedding exists is open",
            q - 1
        ),
    }
}

/// Everything the crate can say about one family member in one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub kind: FamilyKind,
    pub q: i64,
    pub r: i64,
    pub j: i64,
    pub n_vars: i64,
    #[serde(rename = "chi_F")]
    pub chi_fiber: i64,
    #[serde(rename = "chi_V")]
    pub chi_curve: i64,
    /// Genus of the projective curve; absent for the two-variable bases,
    /// whose projective zero set is a finite point set.
    pub genus: Option<i64>,
    pub embedding_degree: i64,
    pub radial_degree: i64,
    pub link_count: Option<i64>,
    pub zeta: ZetaFactorization,
    /// The closed-form chi for twisted members, reported next to the
    /// authoritative composition value in chi_F.
    pub closed_form_chi: Option<i64>,
    pub routes_consistent: bool,
}

/// Builds the full report for one family member. chi_F uses the composition
/// route for the three-variable families; for twisted members the closed
/// form is reported alongside with the consistency flag. Link counts apply
/// to the two-variable bases.
pub fn invariant_report(
    kind: FamilyKind,
    p: &FamilyParams,
) -> Result<InvariantReport, InvariantError> {
    let (q, r, j) = (p.q, p.r, p.j);
    match kind {
        FamilyKind::BaseH => {
            let chi = chi_base(q, r, j)?;
            let torus = chi_base_torus(q, r, j)?;
            let links = link_count(q, r, j)?;
            let (chi_v, _) = chi_projective(2, chi, q)?;
            Ok(InvariantReport {
                kind,
                q,
                r,
                j,
                n_vars: 2,
                chi_fiber: chi,
                chi_curve: chi_v,
                genus: None,
                embedding_degree: q,
                radial_degree: q + 2 * r,
                link_count: Some(links),
                zeta: zeta_function(chi, q)?,
                closed_form_chi: None,
                // chi = chi_torus + 2q, and the curve's points are its links.
                routes_consistent: chi == torus + 2 * q && chi_v == links,
            })
        }
        FamilyKind::Remark11H => {
            if r < 1 {
                return Err(InvariantError::BadParams(format!(
                    "alternate base needs r >= 1, got r = {r}"
                )));
            }
            // Polar degree r, radial degree r + 2, r + 2 links; the torus
            // relation chi = -links * q_pol + 2 q_pol gives chi = -r^2.
            let q_pol = r;
            let links = r + 2;
            let chi = -q_pol * (links - 2);
            let (chi_v, _) = chi_projective(2, chi, q_pol)?;
            Ok(InvariantReport {
                kind,
                q,
                r,
                j,
                n_vars: 2,
                chi_fiber: chi,
                chi_curve: chi_v,
                genus: None,
                embedding_degree: q_pol,
                radial_degree: r + 2,
                link_count: Some(links),
                zeta: zeta_function(chi, q_pol)?,
                closed_form_chi: None,
                routes_consistent: chi_v == links,
            })
        }
        FamilyKind::JoinC => {
            let closed = chi_join_family(q, r, j)?;
            let composed = join_chi(chi_base(q, r, j)?, q);
            let chi = composed;
            let genus = genus_from_chi(chi, q)?;
            let (chi_v, _) = chi_projective(3, chi, q)?;
            Ok(InvariantReport {
                kind,
                q,
                r,
                j,
                n_vars: 3,
                chi_fiber: chi,
                chi_curve: chi_v,
                genus: Some(genus),
                embedding_degree: q,
                radial_degree: q + 2 * r,
                link_count: None,
                zeta: zeta_function(chi, q)?,
                closed_form_chi: None,
                routes_consistent: composed == closed && chi_v == 2 - 2 * genus,
            })
        }
        FamilyKind::TwistedS | FamilyKind::DegreeOneF => {
            if kind == FamilyKind::DegreeOneF && (q != 1 || j != 0) {
                return Err(InvariantError::BadParams(format!(
                    "degree-one family fixes q = 1 and j = 0, got q = {q}, j = {j}"
                )));
            }
            let routes = chi_twisted_family(q, r, j)?;
            let chi = routes.composed;
            let genus = genus_from_chi(chi, q)?;
            let (chi_v, _) = chi_projective(3, chi, q)?;
            Ok(InvariantReport {
                kind,
                q,
                r,
                j,
                n_vars: 3,
                chi_fiber: chi,
                chi_curve: chi_v,
                genus: Some(genus),
                embedding_degree: q,
                radial_degree: q + 2 * r,
                link_count: None,
                zeta: zeta_function(chi, q)?,
                closed_form_chi: Some(routes.closed_form),
                routes_consistent: routes.consistent && chi_v == 2 - 2 * genus,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_base_values() {
        assert_eq!(chi_base(1, 1, 0).unwrap(), -1);
        assert_eq!(chi_base(2, 3, 1).unwrap(), -8);
        assert_eq!(chi_base(3, 1, 1).unwrap(), -3);
        // r = j reduces to -q(q-2).
        for q in 1..=6 {
            assert_eq!(chi_base(q, 4, 4).unwrap(), -q * (q - 2));
        }
    }

    #[test]
    fn torus_relation() {
        for q in 1..=4i64 {
            for r in 0..=4i64 {
                for j in 0..=r {
                    assert_eq!(
                        chi_base(q, r, j).unwrap(),
                        chi_base_torus(q, r, j).unwrap() + 2 * q
                    );
                }
            }
        }
    }

    #[test]
    fn link_counts() {
        assert_eq!(link_count(1, 1, 0).unwrap(), 3);
        assert_eq!(link_count(2, 3, 1).unwrap(), 6);
        assert_eq!(link_count(5, 2, 2).unwrap(), 5);
    }

    #[test]
    fn param_validation() {
        assert!(chi_base(0, 1, 0).is_err());
        assert!(chi_base(1, 0, 1).is_err());
        assert!(link_count(1, -1, -1).is_err());
        assert!(chi_twisted_family(1, 0, 0).is_err());
    }

    #[test]
    fn join_chi_closed_form_agrees() {
        assert_eq!(chi_join_family(3, 2, 1).unwrap(), 21);
        assert_eq!(chi_join_family(1, 3, 1).unwrap(), 1);
        assert_eq!(chi_join_family(2, 3, 1).unwrap(), 4 * 2 + 2);
        for q in 1..=3i64 {
            for r in 0..=3i64 {
                for j in 0..=r {
                    assert_eq!(
                        join_chi(chi_base(q, r, j).unwrap(), q),
                        chi_join_family(q, r, j).unwrap(),
                        "q={q} r={r} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn join_chi_examples() {
        assert_eq!(join_chi(-1, 1), 1);
        assert_eq!(join_chi(-4, 2), 6);
    }

    #[test]
    fn twisted_chi_examples() {
        assert_eq!(chi_twisted(2, 0, -1, 1).unwrap(), 3);
        assert_eq!(chi_twisted(5, 2, -8, 2).unwrap(), 22);
        // a - b = 1: the covering is trivial and only the section survives.
        assert_eq!(chi_twisted(3, 2, -77, 5).unwrap(), 5);
        assert!(chi_twisted(2, 2, 0, 0).is_err());
        assert!(chi_twisted(2, 3, 0, 0).is_err());
    }

    #[test]
    fn twisted_family_routes() {
        // q = 1: both routes give 2r + 1.
        for r in 1..=5i64 {
            let t = chi_twisted_family(1, r, 0).unwrap();
            assert_eq!(t.composed, 2 * r + 1);
            assert_eq!(t.closed_form, 2 * r + 1);
            assert!(t.consistent);
        }
        // r = j: both routes give q(q^2 - q + 1).
        let t = chi_twisted_family(2, 1, 1).unwrap();
        assert_eq!(t.composed, 6);
        assert_eq!(t.closed_form, 6);
        assert!(t.consistent);
        // q >= 2 with r > j: the routes disagree and the report says so.
        let t = chi_twisted_family(2, 3, 1).unwrap();
        assert_eq!(t.composed, 22);
        assert_eq!(t.closed_form, 14);
        assert!(!t.consistent);
        // Composed route in general: q(q^2 - q + 1 + 2q(r - j)).
        for q in 1..=4i64 {
            for r in 1..=4i64 {
                for j in 0..=r {
                    let t = chi_twisted_family(q, r, j).unwrap();
                    assert_eq!(t.composed, q * (q * q - q + 1 + 2 * q * (r - j)));
                    assert_eq!(t.consistent, q == 1 || r == j);
                }
            }
        }
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus_from_chi(3, 1).unwrap(), 1);
        assert_eq!(genus_from_chi(1, 1).unwrap(), 0);
        assert_eq!(genus_from_chi(9, 3).unwrap(), 1);
        assert_eq!(
            genus_from_chi(5, 2).unwrap_err(),
            InvariantError::DivisibilityViolation { num: 5, den: 2 }
        );
        assert_eq!(
            genus_from_chi(2, 1).unwrap_err(),
            InvariantError::DivisibilityViolation { num: 1, den: 2 }
        );
        assert_eq!(
            genus_from_chi(-1, 1).unwrap_err(),
            InvariantError::NegativeGenus { chi: -1, q: 1 }
        );
    }

    #[test]
    fn projective_chi() {
        assert_eq!(chi_projective(3, 3, 1).unwrap(), (0, 3));
        assert_eq!(chi_projective(3, 1, 1).unwrap(), (2, 1));
        assert_eq!(chi_projective(3, 9, 3).unwrap(), (0, 3));
        assert!(chi_projective(3, 5, 2).is_err());
    }

    #[test]
    fn zeta_display() {
        assert_eq!(zeta_function(3, 1).unwrap().to_string(), "(1-t)^{-3}");
        assert_eq!(zeta_function(-4, 2).unwrap().to_string(), "(1-t^2)^{2}");
        assert_eq!(zeta_function(0, 5).unwrap().to_string(), "1");
        assert_eq!(zeta_function(-1, 1).unwrap().to_string(), "(1-t)");
        assert!(zeta_function(5, 2).is_err());
    }

    #[test]
    fn zeta_normalization() {
        let z = ZetaFactorization::new([(2, 1), (1, 3), (2, -1)]).unwrap();
        assert_eq!(z.factors().len(), 1);
        assert_eq!(z.factors()[0], ZetaFactor { k: 1, e: 3 });
        assert!(ZetaFactorization::new([(0, 1)]).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(thom_bound(1), 0);
        assert_eq!(thom_bound(2), 0);
        assert_eq!(thom_bound(3), 1);
        assert_eq!(thom_bound(5), 6);
        assert_eq!(plucker_genus(4), 3);
    }

    #[test]
    fn join_genus_routes_agree() {
        assert_eq!(genus_join_family(3, 2, 1).unwrap(), 3);
        for q in 1..=3i64 {
            for r in 0..=3i64 {
                for j in 0..=r {
                    assert_eq!(
                        genus_join_family(q, r, j).unwrap(),
                        genus_from_chi(chi_join_family(q, r, j).unwrap(), q).unwrap(),
                        "q={q} r={r} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn planner_examples() {
        let plan = plan_embedding(5, 1);
        assert_eq!(plan.status, PlanStatus::Twisted);
        let p = plan.params.unwrap();
        assert_eq!((p.q, p.r, p.j), (1, 5, 0));

        let plan = plan_embedding(3, 2);
        assert_eq!(plan.status, PlanStatus::Twisted);
        let p = plan.params.unwrap();
        assert_eq!((p.q, p.r, p.j), (2, 3, 1));

        let plan = plan_embedding(1, 3);
        assert_eq!(plan.status, PlanStatus::Join);
        let p = plan.params.unwrap();
        assert_eq!((p.q, p.r - p.j), (3, 0));

        let plan = plan_embedding(2, 3);
        assert_eq!(plan.status, PlanStatus::Unknown);
        assert!(plan.params.is_none());

        // Genus 0 at q = 1 avoids the ill-formed twist exponent.
        let plan = plan_embedding(0, 1);
        assert_eq!(plan.status, PlanStatus::Twisted);
        let p = plan.params.unwrap();
        assert_eq!((p.r, p.j), (1, 1));

        let plan = plan_embedding(-1, 1);
        assert_eq!(plan.status, PlanStatus::Unknown);
    }

    #[test]
    fn planner_respects_thom_bound() {
        for g in 0..=12i64 {
            for q in 1..=4i64 {
                let plan = plan_embedding(g, q);
                match plan.status {
                    PlanStatus::Unknown => {}
                    _ => assert!(g >= thom_bound(q), "g={g} q={q}"),
                }
                if let Some(p) = &plan.params {
                    // Emitted parameters are always constructible.
                    assert!(p.q >= 1 && p.r >= p.j && p.j >= 0);
                    if plan.status == PlanStatus::Twisted {
                        assert!(p.r >= 1);
                        // Closed-form genus hits the target.
                        assert_eq!(p.q * (p.q - 1) / 2 + (p.r - p.j), g);
                    }
                    if plan.status == PlanStatus::Join {
                        assert_eq!(genus_join_family(p.q, p.r, p.j).unwrap(), g);
                    }
                }
            }
        }
    }

    #[test]
    fn planner_q1_plans_verify_by_composition() {
        for g in 0..=12i64 {
            let plan = plan_embedding(g, 1);
            let p = plan.params.unwrap();
            let report = invariant_report(FamilyKind::TwistedS, &p).unwrap();
            assert_eq!(report.genus, Some(g));
            assert!(report.routes_consistent);
        }
    }

    #[test]
    fn report_twisted_degree_one() {
        let p = FamilyParams::new(1, 2, 0);
        let rep = invariant_report(FamilyKind::TwistedS, &p).unwrap();
        assert_eq!(rep.chi_fiber, 5);
        assert_eq!(rep.genus, Some(2));
        assert_eq!(rep.embedding_degree, 1);
        assert_eq!(rep.chi_curve, -2);
        assert_eq!(rep.zeta.to_string(), "(1-t)^{-5}");
        assert!(rep.routes_consistent);
        assert_eq!(rep.closed_form_chi, Some(5));
        assert_eq!(rep.radial_degree, 5);
    }

    #[test]
    fn report_join() {
        let p = FamilyParams::new(2, 2, 1);
        let rep = invariant_report(FamilyKind::JoinC, &p).unwrap();
        assert_eq!(rep.chi_fiber, 6);
        assert_eq!(rep.genus, Some(1));
        assert_eq!(rep.embedding_degree, 2);
        assert_eq!(rep.chi_curve, 0);
        assert!(rep.routes_consistent);
    }

    #[test]
    fn report_base() {
        let p = FamilyParams::new(1, 1, 0);
        let rep = invariant_report(FamilyKind::BaseH, &p).unwrap();
        assert_eq!(rep.chi_fiber, -1);
        assert_eq!(rep.link_count, Some(3));
        assert_eq!(rep.genus, None);
        assert_eq!(rep.chi_curve, 3);
        assert!(rep.routes_consistent);
    }

    #[test]
    fn report_alternate_base() {
        let p = FamilyParams::new(1, 2, 0);
        let rep = invariant_report(FamilyKind::Remark11H, &p).unwrap();
        assert_eq!(rep.embedding_degree, 2);
        assert_eq!(rep.radial_degree, 4);
        assert_eq!(rep.chi_fiber, -4);
        assert_eq!(rep.link_count, Some(4));
        assert_eq!(rep.chi_curve, 4);
        assert!(rep.routes_consistent);
    }

    #[test]
    fn report_inconsistent_twisted_is_flagged() {
        let p = FamilyParams::new(2, 3, 1);
        let rep = invariant_report(FamilyKind::TwistedS, &p).unwrap();
        assert_eq!(rep.chi_fiber, 22);
        assert_eq!(rep.closed_form_chi, Some(14));
        assert!(!rep.routes_consistent);
        // The composition value still yields a valid genus.
        assert_eq!(rep.genus, Some(5));
    }

    #[test]
    fn plan_json_shape() {
        let s = serde_json::to_string(&plan_embedding(5, 1)).unwrap();
        assert!(s.contains("\"status\":\"Twisted\""));
        assert!(s.contains("\"q\":1"));
        assert!(s.contains("\"r\":5"));
        assert!(s.contains("\"alpha\":[2.0,0.0]"));
        // Unknown plans carry no parameter fields.
        let s = serde_json::to_string(&plan_embedding(2, 3)).unwrap();
        assert!(s.contains("\"status\":\"Unknown\""));
        assert!(!s.contains("\"q\""));
    }
}
