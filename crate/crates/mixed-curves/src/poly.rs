//! Sparse mixed polynomials: finite sums of terms c * z^nu * zbar^mu in n
//! complex variables and their conjugates.
//!
//! A mixed polynomial is real-analytic but usually not holomorphic, so the
//! calculus tracks the holomorphic and antiholomorphic exponents separately.
//! Everything downstream (weight inference, family constructors, the Newton
//! solvers) builds on the canonical representation maintained here: terms
//! sorted by exponent vectors, like terms merged, zero terms dropped.

use num_complex::Complex64;
use thiserror::Error;

use crate::weights::WeightSystem;

/// Coefficients with modulus at or below this are dropped when canonicalizing.
pub const DEFAULT_ZERO_THRESHOLD: f64 = 1e-14;

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range 1..={n_vars}")]
    VariableOutOfRange { index: usize, n_vars: usize },
    #[error("coefficient is NaN or infinite")]
    NonFiniteCoefficient,
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,
    #[error("weight does not fit in a hardware integer")]
    WeightTooLarge,
    #[error("scale action needs t > 0 and |rho| = 1, got t = {t}, |rho| = {rho_abs}")]
    BadScaleAction { t: f64, rho_abs: f64 },
}

/// One term c * z^nu * zbar^mu. `nu` and `mu` always have length `n_vars`
/// of the polynomial that owns the term.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedMonomial {
    pub coeff: Complex64,
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
}

impl MixedMonomial {
    pub fn new(coeff: Complex64, nu: Vec<u32>, mu: Vec<u32>) -> Self {
        MixedMonomial { coeff, nu, mu }
    }

    /// Radial degree |nu| + |mu|.
    pub fn radial_degree(&self) -> u64 {
        let s: u64 = self.nu.iter().map(|&e| e as u64).sum();
        s + self.mu.iter().map(|&e| e as u64).sum::<u64>()
    }

    /// Polar degree |nu| - |mu|.
    pub fn polar_degree(&self) -> i64 {
        let a: i64 = self.nu.iter().map(|&e| e as i64).sum();
        let b: i64 = self.mu.iter().map(|&e| e as i64).sum();
        a - b
    }

    fn eval(&self, z: &[Complex64]) -> Complex64 {
        let mut acc = self.coeff;
        for (i, &zi) in z.iter().enumerate() {
            if self.nu[i] > 0 {
                acc *= zi.powu(self.nu[i]);
            }
            if self.mu[i] > 0 {
                acc *= zi.conj().powu(self.mu[i]);
            }
        }
        acc
    }
}

/// A mixed polynomial in canonical form.
///
/// Canonical means: no term with coefficient modulus <= the zero threshold,
/// no two terms with the same exponent pair, terms sorted lexicographically
/// by (nu, mu). Two polynomials compare equal iff they have the same
/// variable count and identical term lists.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedPolynomial {
    n_vars: usize,
    terms: Vec<MixedMonomial>,
}

impl MixedPolynomial {
    /// Canonicalizes `terms` with the default zero threshold.
    pub fn new(terms: Vec<MixedMonomial>, n_vars: usize) -> Result<Self, PolyError> {
        Self::with_zero_threshold(terms, n_vars, DEFAULT_ZERO_THRESHOLD)
    }

    /// Canonicalizes `terms`, dropping merged coefficients with modulus
    /// <= `threshold`. Rejects non-finite coefficients, before and after
    /// merging.
    pub fn with_zero_threshold(
        terms: Vec<MixedMonomial>,
        n_vars: usize,
        threshold: f64,
    ) -> Result<Self, PolyError> {
        use std::collections::BTreeMap;
        let mut merged: BTreeMap<(Vec<u32>, Vec<u32>), Complex64> = BTreeMap::new();
        for t in terms {
            if t.nu.len() != n_vars || t.mu.len() != n_vars {
                return Err(PolyError::DimensionMismatch {
                    expected: n_vars,
                    found: t.nu.len().max(t.mu.len()),
                });
            }
            if !t.coeff.re.is_finite() || !t.coeff.im.is_finite() {
                return Err(PolyError::NonFiniteCoefficient);
            }
            *merged
                .entry((t.nu, t.mu))
                .or_insert(Complex64::new(0.0, 0.0)) += t.coeff;
        }
        let mut out = Vec::with_capacity(merged.len());
        for ((nu, mu), c) in merged {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(PolyError::NonFiniteCoefficient);
            }
            if c.norm() > threshold {
                out.push(MixedMonomial { coeff: c, nu, mu });
            }
        }
        Ok(MixedPolynomial { n_vars, terms: out })
    }

    pub fn zero(n_vars: usize) -> Self {
        MixedPolynomial {
            n_vars,
            terms: Vec::new(),
        }
    }

    /// The constant polynomial c (empty if c is below the zero threshold).
    pub fn constant(c: Complex64, n_vars: usize) -> Result<Self, PolyError> {
        Self::new(
            vec![MixedMonomial::new(c, vec![0; n_vars], vec![0; n_vars])],
            n_vars,
        )
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &[MixedMonomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64, PolyError> {
        if z.len() != self.n_vars {
            return Err(PolyError::DimensionMismatch {
                expected: self.n_vars,
                found: z.len(),
            });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            acc += t.eval(z);
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.n_vars != other.n_vars {
            return Err(PolyError::DimensionMismatch {
                expected: self.n_vars,
                found: other.n_vars,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(terms, self.n_vars)
    }

    pub fn scale(&self, c: Complex64) -> Result<Self, PolyError> {
        let terms = self
            .terms
            .iter()
            .map(|t| MixedMonomial::new(t.coeff * c, t.nu.clone(), t.mu.clone()))
            .collect();
        Self::new(terms, self.n_vars)
    }

    /// Term-by-term product, canonicalized. Exponent additions are checked.
    pub fn multiply(&self, other: &Self) -> Result<Self, PolyError> {
        if self.n_vars != other.n_vars {
            return Err(PolyError::DimensionMismatch {
                expected: self.n_vars,
                found: other.n_vars,
            });
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let nu = add_exponents(&a.nu, &b.nu)?;
                let mu = add_exponents(&a.mu, &b.mu)?;
                terms.push(MixedMonomial::new(a.coeff * b.coeff, nu, mu));
            }
        }
        Self::new(terms, self.n_vars)
    }

    /// Complex conjugate: coefficients conjugated, nu and mu swapped.
    pub fn conjugate(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| MixedMonomial::new(t.coeff.conj(), t.mu.clone(), t.nu.clone()))
            .collect();
        // Conjugation permutes canonical terms and preserves moduli, so
        // re-canonicalizing cannot fail or drop anything.
        Self::new(terms, self.n_vars).expect("conjugate of canonical polynomial")
    }

    /// Restriction to the coordinate hyperplane z_var = 0 (1-based index):
    /// keeps exactly the terms not involving z_var or its conjugate. The
    /// variable count is unchanged.
    pub fn restrict(&self, var: usize) -> Result<Self, PolyError> {
        let i = self.check_var(var)?;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.nu[i] == 0 && t.mu[i] == 0)
            .cloned()
            .collect();
        // Filtering a canonical term list keeps it canonical.
        Ok(MixedPolynomial {
            n_vars: self.n_vars,
            terms,
        })
    }

    /// Sets z_var = 1 (1-based index) and removes that variable slot,
    /// producing a polynomial in n_vars - 1 variables.
    pub fn dehomogenize(&self, var: usize) -> Result<Self, PolyError> {
        let i = self.check_var(var)?;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut nu = t.nu.clone();
                let mut mu = t.mu.clone();
                nu.remove(i);
                mu.remove(i);
                MixedMonomial::new(t.coeff, nu, mu)
            })
            .collect();
        Self::new(terms, self.n_vars - 1)
    }

    /// Reinterprets the polynomial in `new_n >= n_vars` variables; the added
    /// trailing variables do not occur in any term.
    pub fn extend_vars(&self, new_n: usize) -> Result<Self, PolyError> {
        if new_n < self.n_vars {
            return Err(PolyError::DimensionMismatch {
                expected: self.n_vars,
                found: new_n,
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut nu = t.nu.clone();
                let mut mu = t.mu.clone();
                nu.resize(new_n, 0);
                mu.resize(new_n, 0);
                MixedMonomial::new(t.coeff, nu, mu)
            })
            .collect();
        // Appending equal suffixes preserves the lexicographic order.
        Ok(MixedPolynomial {
            n_vars: new_n,
            terms,
        })
    }

    /// Wirtinger derivatives (df/dz_i, df/dzbar_i) at `z`, as two vectors of
    /// length n_vars. For each term, df/dz_i picks up the factor nu_i and
    /// lowers nu_i by one; dzbar works on mu the same way.
    pub fn wirtinger(
        &self,
        z: &[Complex64],
    ) -> Result<(Vec<Complex64>, Vec<Complex64>), PolyError> {
        if z.len() != self.n_vars {
            return Err(PolyError::DimensionMismatch {
                expected: self.n_vars,
                found: z.len(),
            });
        }
        let mut dz = vec![Complex64::new(0.0, 0.0); self.n_vars];
        let mut dzbar = vec![Complex64::new(0.0, 0.0); self.n_vars];
        for t in &self.terms {
            for i in 0..self.n_vars {
                if t.nu[i] > 0 {
                    let mut acc = t.coeff * (t.nu[i] as f64);
                    for (k, &zk) in z.iter().enumerate() {
                        let e = if k == i { t.nu[k] - 1 } else { t.nu[k] };
                        if e > 0 {
                            acc *= zk.powu(e);
                        }
                        if t.mu[k] > 0 {
                            acc *= zk.conj().powu(t.mu[k]);
                        }
                    }
                    dz[i] += acc;
                }
                if t.mu[i] > 0 {
                    let mut acc = t.coeff * (t.mu[i] as f64);
                    for (k, &zk) in z.iter().enumerate() {
                        if t.nu[k] > 0 {
                            acc *= zk.powu(t.nu[k]);
                        }
                        let e = if k == i { t.mu[k] - 1 } else { t.mu[k] };
                        if e > 0 {
                            acc *= zk.conj().powu(e);
                        }
                    }
                    dzbar[i] += acc;
                }
            }
        }
        Ok((dz, dzbar))
    }

    fn check_var(&self, var: usize) -> Result<usize, PolyError> {
        if var == 0 || var > self.n_vars {
            return Err(PolyError::VariableOutOfRange {
                index: var,
                n_vars: self.n_vars,
            });
        }
        Ok(var - 1)
    }
}

fn add_exponents(a: &[u32], b: &[u32]) -> Result<Vec<u32>, PolyError> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_add(y).ok_or(PolyError::ExponentOverflow))
        .collect()
}

/// The scaling (t, rho) acting coordinatewise, z_i -> t^{q_i} rho^{p_i} z_i.
/// Without a weight system the action is the standard one, q_i = p_i = 1.
#[derive(Clone, Debug)]
pub struct ScaleAction {
    pub t: f64,
    pub rho: Complex64,
    pub weights: Option<WeightSystem>,
}

impl ScaleAction {
    /// Requires t > 0 and |rho| = 1 up to 1e-12.
    pub fn new(t: f64, rho: Complex64, weights: Option<WeightSystem>) -> Result<Self, PolyError> {
        if t <= 0.0 || !t.is_finite() || (rho.norm() - 1.0).abs() > 1e-12 {
            return Err(PolyError::BadScaleAction {
                t,
                rho_abs: rho.norm(),
            });
        }
        Ok(ScaleAction { t, rho, weights })
    }

    pub fn standard(t: f64, rho: Complex64) -> Result<Self, PolyError> {
        Self::new(t, rho, None)
    }
}

/// Evaluates f((t, rho) . z): transforms the point by the action, then
/// evaluates. Weight vectors, when present, must match the variable count.
pub fn apply_action(
    f: &MixedPolynomial,
    action: &ScaleAction,
    z: &[Complex64],
) -> Result<Complex64, PolyError> {
    if z.len() != f.n_vars() {
        return Err(PolyError::DimensionMismatch {
            expected: f.n_vars(),
            found: z.len(),
        });
    }
    let w = transform_point(action, z, f.n_vars())?;
    f.evaluate(&w)
}

/// The transformed point (t, rho) . z without evaluation.
pub fn transform_point(
    action: &ScaleAction,
    z: &[Complex64],
    n_vars: usize,
) -> Result<Vec<Complex64>, PolyError> {
    if let Some(ws) = &action.weights {
        if ws.n_vars() != n_vars {
            return Err(PolyError::DimensionMismatch {
                expected: n_vars,
                found: ws.n_vars(),
            });
        }
        let mut w = Vec::with_capacity(n_vars);
        for (i, &zi) in z.iter().enumerate() {
            let qi = i32::try_from(ws.radial()[i]).map_err(|_| PolyError::WeightTooLarge)?;
            let pi = i32::try_from(ws.polar()[i]).map_err(|_| PolyError::WeightTooLarge)?;
            w.push(action.t.powi(qi) * action.rho.powi(pi) * zi);
        }
        Ok(w)
    } else {
        Ok(z.iter().map(|&zi| action.t * action.rho * zi).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn term(re: f64, im: f64, nu: &[u32], mu: &[u32]) -> MixedMonomial {
        MixedMonomial::new(c(re, im), nu.to_vec(), mu.to_vec())
    }

    /// z1 + z2 in two variables.
    fn z1_plus_z2() -> MixedPolynomial {
        MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[1, 0], &[0, 0]),
                term(1.0, 0.0, &[0, 1], &[0, 0]),
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn canonicalize_merges_and_sorts() {
        let p = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[0, 1], &[0, 0]),
                term(2.0, 0.0, &[1, 0], &[0, 0]),
                term(3.0, 0.0, &[0, 1], &[0, 0]),
            ],
            2,
        )
        .unwrap();
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.terms()[0].nu, vec![0, 1]);
        assert_eq!(p.terms()[0].coeff, c(4.0, 0.0));
        assert_eq!(p.terms()[1].nu, vec![1, 0]);
    }

    #[test]
    fn canonicalize_drops_cancellations() {
        let p = MixedPolynomial::new(
            vec![
                term(1.0, 2.0, &[1, 0], &[0, 1]),
                term(-1.0, -2.0, &[1, 0], &[0, 1]),
            ],
            2,
        )
        .unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn non_finite_coefficients_rejected() {
        let r = MixedPolynomial::new(vec![term(f64::NAN, 0.0, &[1], &[0])], 1);
        assert_eq!(r.unwrap_err(), PolyError::NonFiniteCoefficient);
        let r = MixedPolynomial::new(vec![term(f64::INFINITY, 0.0, &[1], &[0])], 1);
        assert_eq!(r.unwrap_err(), PolyError::NonFiniteCoefficient);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let r = MixedPolynomial::new(vec![term(1.0, 0.0, &[1], &[0])], 2);
        assert!(matches!(r, Err(PolyError::DimensionMismatch { .. })));
    }

    // (z1 + z2)(z1 - 2 z2) = z1^2 - z1 z2 - 2 z2^2, worked by hand.
    #[test]
    fn multiply_holomorphic_pair() {
        let b = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[1, 0], &[0, 0]),
                term(-2.0, 0.0, &[0, 1], &[0, 0]),
            ],
            2,
        )
        .unwrap();
        let p = z1_plus_z2().multiply(&b).unwrap();
        let want = MixedPolynomial::new(
            vec![
                term(-2.0, 0.0, &[0, 2], &[0, 0]),
                term(-1.0, 0.0, &[1, 1], &[0, 0]),
                term(1.0, 0.0, &[2, 0], &[0, 0]),
            ],
            2,
        )
        .unwrap();
        assert_eq!(p, want);
    }

    // (z1^2 - z1 z2 - 2 z2^2)(zbar1 - 3 zbar2): six terms, worked by hand.
    // This is the expanded h family member with q = 1, r = 1, j = 0,
    // alpha = 2, beta = 3.
    #[test]
    fn multiply_mixed_triple() {
        let b = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[1, 0], &[0, 0]),
                term(-2.0, 0.0, &[0, 1], &[0, 0]),
            ],
            2,
        )
        .unwrap();
        let cbar = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[0, 0], &[1, 0]),
                term(-3.0, 0.0, &[0, 0], &[0, 1]),
            ],
            2,
        )
        .unwrap();
        let h = z1_plus_z2().multiply(&b).unwrap().multiply(&cbar).unwrap();
        let want = MixedPolynomial::new(
            vec![
                term(-2.0, 0.0, &[0, 2], &[1, 0]),
                term(6.0, 0.0, &[0, 2], &[0, 1]),
                term(-1.0, 0.0, &[1, 1], &[1, 0]),
                term(3.0, 0.0, &[1, 1], &[0, 1]),
                term(1.0, 0.0, &[2, 0], &[1, 0]),
                term(-3.0, 0.0, &[2, 0], &[0, 1]),
            ],
            2,
        )
        .unwrap();
        assert_eq!(h, want);
        // Spot evaluations: at (1, 0) only z1^2 zbar1 survives; at (0, 1)
        // only -2 z2^2 zbar1 and 6 z2^2 zbar2 could, and zbar1 = 0 there.
        assert_eq!(
            h.evaluate(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap(),
            c(1.0, 0.0)
        );
        assert_eq!(
            h.evaluate(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap(),
            c(6.0, 0.0)
        );
    }

    #[test]
    fn evaluate_zero_polynomial() {
        let p = MixedPolynomial::zero(3);
        assert_eq!(p.evaluate(&[c(1.0, 2.0); 3]).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn evaluate_uses_conjugate() {
        // z1 zbar1 at 3 + 4i is |z|^2 = 25.
        let p = MixedPolynomial::new(vec![term(1.0, 0.0, &[1], &[1])], 1).unwrap();
        assert_eq!(p.evaluate(&[c(3.0, 4.0)]).unwrap(), c(25.0, 0.0));
    }

    #[test]
    fn conjugate_swaps_exponents() {
        // conj(i z1^2 zbar2) = -i zbar1^2 z2.
        let p = MixedPolynomial::new(vec![term(0.0, 1.0, &[2, 0], &[0, 1])], 2).unwrap();
        let q = p.conjugate();
        assert_eq!(q.terms().len(), 1);
        assert_eq!(q.terms()[0].coeff, c(0.0, -1.0));
        assert_eq!(q.terms()[0].nu, vec![0, 1]);
        assert_eq!(q.terms()[0].mu, vec![2, 0]);
        assert_eq!(q.conjugate(), p);
    }

    #[test]
    fn restrict_keeps_free_terms() {
        // h = z1^2 zbar1 + z1 z2 + z2^2 zbar2; restrict to z2 = 0 leaves the
        // first term, restrict to z1 = 0 leaves the last.
        let h = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[2, 0], &[1, 0]),
                term(1.0, 0.0, &[1, 1], &[0, 0]),
                term(1.0, 0.0, &[0, 2], &[0, 1]),
            ],
            2,
        )
        .unwrap();
        let r2 = h.restrict(2).unwrap();
        assert_eq!(r2.terms().len(), 1);
        assert_eq!(r2.terms()[0].nu, vec![2, 0]);
        let r1 = h.restrict(1).unwrap();
        assert_eq!(r1.terms().len(), 1);
        assert_eq!(r1.terms()[0].nu, vec![0, 2]);
        assert_eq!(
            h.restrict(3).unwrap_err(),
            PolyError::VariableOutOfRange {
                index: 3,
                n_vars: 2
            }
        );
        assert_eq!(
            h.restrict(0).unwrap_err(),
            PolyError::VariableOutOfRange {
                index: 0,
                n_vars: 2
            }
        );
    }

    #[test]
    fn dehomogenize_merges_collisions() {
        // z1 z2 + z1 z2^2 collapses to 2 z1 after z2 = 1.
        let p = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[1, 1], &[0, 0]),
                term(1.0, 0.0, &[1, 2], &[0, 0]),
            ],
            2,
        )
        .unwrap();
        let q = p.dehomogenize(2).unwrap();
        assert_eq!(q.n_vars(), 1);
        assert_eq!(q.terms().len(), 1);
        assert_eq!(q.terms()[0].coeff, c(2.0, 0.0));
        assert_eq!(q.terms()[0].nu, vec![1]);
    }

    #[test]
    fn wirtinger_of_norm_square() {
        // f = z zbar: df/dz = zbar, df/dzbar = z.
        let p = MixedPolynomial::new(vec![term(1.0, 0.0, &[1], &[1])], 1).unwrap();
        let (dz, dzbar) = p.wirtinger(&[c(2.0, 1.0)]).unwrap();
        assert_eq!(dz[0], c(2.0, -1.0));
        assert_eq!(dzbar[0], c(2.0, 1.0));
    }

    #[test]
    fn wirtinger_powers() {
        // f = z^2 zbar at z = 1: df/dz = 2 z zbar = 2, df/dzbar = z^2 = 1.
        let p = MixedPolynomial::new(vec![term(1.0, 0.0, &[2], &[1])], 1).unwrap();
        let (dz, dzbar) = p.wirtinger(&[c(1.0, 0.0)]).unwrap();
        assert_eq!(dz[0], c(2.0, 0.0));
        assert_eq!(dzbar[0], c(1.0, 0.0));
    }

    #[test]
    fn standard_action_is_radial_and_polar_scaling() {
        // h from multiply_mixed_triple has radial degree 3, polar degree 1:
        // under z -> t rho z with t = 2, rho = i the value at (1, 0) becomes
        // t^3 rho^1 * h(1, 0) = 8i.
        let b = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[1, 0], &[0, 0]),
                term(-2.0, 0.0, &[0, 1], &[0, 0]),
            ],
            2,
        )
        .unwrap();
        let cbar = MixedPolynomial::new(
            vec![
                term(1.0, 0.0, &[0, 0], &[1, 0]),
                term(-3.0, 0.0, &[0, 0], &[0, 1]),
            ],
            2,
        )
        .unwrap();
        let h = z1_plus_z2().multiply(&b).unwrap().multiply(&cbar).unwrap();
        let act = ScaleAction::standard(2.0, c(0.0, 1.0)).unwrap();
        let got = apply_action(&h, &act, &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((got - c(0.0, 8.0)).norm() < 1e-12);
    }

    #[test]
    fn bad_actions_rejected() {
        assert!(ScaleAction::standard(0.0, c(1.0, 0.0)).is_err());
        assert!(ScaleAction::standard(-1.0, c(1.0, 0.0)).is_err());
        assert!(ScaleAction::standard(1.0, c(1.0, 1.0)).is_err());
        assert!(ScaleAction::standard(f64::NAN, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn exponent_overflow_detected() {
        let p = MixedPolynomial::new(vec![term(1.0, 0.0, &[u32::MAX], &[0])], 1).unwrap();
        assert_eq!(p.multiply(&p).unwrap_err(), PolyError::ExponentOverflow);
    }
}
