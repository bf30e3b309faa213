//! Stretched Littlewood-Richardson coefficients c^{N·λ}_{N·μ, N·ν}, exact
//! rational interpolation of the LR polynomial, and the coefficient-sign
//! check for the nonnegativity conjecture.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::lr::lr_coefficient;
use crate::partitions::Partition;
use crate::Natural;

/// A polynomial with exact rational coefficients, constant term first.
/// Trailing zero coefficients are stripped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        RationalPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn evaluate(&self, x: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(x));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as "p/q" strings (or plain "p" for integers),
    /// constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    }
}

fn rational(v: &Natural) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, v.clone()))
}

/// Newton-form interpolation over exact rationals through all samples.
/// The degree is set by the divided differences: trailing zero Newton
/// coefficients (forward differences that vanish and stay vanished, for
/// consecutive nodes) are stripped before expansion.
pub fn fit_polynomial(samples: &[(i64, Natural)]) -> Result<RationalPoly, Error> {
    if samples.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: samples.len(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for &(x, _) in samples {
        if !seen.insert(x) {
            return Err(Error::DuplicateAbscissa(x));
        }
    }
    let xs: Vec<BigRational> = samples
        .iter()
        .map(|&(x, _)| BigRational::from_integer(BigInt::from(x)))
        .collect();
    let mut dd: Vec<BigRational> = samples.iter().map(|(_, y)| rational(y)).collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            dd[i] = num / (&xs[i] - &xs[i - level]);
        }
    }
    while dd.len() > 1 && dd.last().is_some_and(|c| c.is_zero()) {
        dd.pop();
    }
    // Expand Newton form to the monomial basis by polynomial Horner.
    let m = dd.len() - 1;
    let mut poly = vec![dd[m].clone()];
    for i in (0..m).rev() {
        // poly := poly * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    Ok(RationalPoly::new(poly))
}

/// Stretched LR coefficients c^{N·λ}_{N·μ, N·ν} for N = 1..=n_max.
pub fn stretched_sequence(
    outer: &Partition,
    inner: &Partition,
    content: &Partition,
    n_max: usize,
) -> Result<Vec<Natural>, Error> {
    if outer.size() != inner.size() + content.size() {
        return Err(Error::SizeMismatch {
            shape: outer.size().saturating_sub(inner.size()),
            content: content.size(),
        });
    }
    Ok((1..=n_max)
        .map(|n| {
            lr_coefficient(
                &outer.stretch_int(n),
                &inner.stretch_int(n),
                &content.stretch_int(n),
            )
        })
        .collect())
}

/// Full analysis of one stretched triple: the sampled coefficients, the
/// fitted polynomial, and the coefficient-sign finding.
#[derive(Clone, Debug)]
pub struct StretchReport {
    pub triple: (Partition, Partition, Partition),
    pub samples: Vec<(i64, Natural)>,
    pub poly: RationalPoly,
    pub degree: usize,
    pub extrapolation_checked_to: i64,
    pub all_coeffs_nonnegative: bool,
}

impl StretchReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema_version": 1,
            "triple": {
                "outer": self.triple.0.parts(),
                "inner": self.triple.1.parts(),
                "content": self.triple.2.parts(),
            },
            "samples": self.samples.iter()
                .map(|(n, v)| serde_json::json!([n, v.to_string()]))
                .collect::<Vec<_>>(),
            "polynomial": self.poly.coeff_strings(),
            "degree": self.degree,
            "extrapolation_checked_to": self.extrapolation_checked_to,
            "all_coeffs_nonnegative": self.all_coeffs_nonnegative,
        })
    }
}

/// Fits on N = 1..=fit_window and verifies exact agreement on the next
/// `check_window` points; a mismatch is an error carrying the failing N
/// (the fit window was too small for the true degree).
pub fn analyze_stretch(
    outer: &Partition,
    inner: &Partition,
    content: &Partition,
    fit_window: usize,
    check_window: usize,
) -> Result<StretchReport, Error> {
    assert!(fit_window >= 2, "fit window must be at least 2");
    let values = stretched_sequence(outer, inner, content, fit_window + check_window)?;
    let samples: Vec<(i64, Natural)> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (i as i64 + 1, v.clone()))
        .collect();
    let poly = fit_polynomial(&samples[..fit_window])?;
    for (n, value) in &samples[fit_window..] {
        let predicted = poly.evaluate(*n);
        if predicted != rational(value) {
            return Err(Error::ExtrapolationMismatch {
                n: *n,
                predicted: predicted.to_string(),
                actual: value.to_string(),
            });
        }
    }
    Ok(StretchReport {
        degree: poly.degree(),
        extrapolation_checked_to: (fit_window + check_window) as i64,
        all_coeffs_nonnegative: poly.all_coeffs_nonnegative(),
        triple: (outer.clone(), inner.clone(), content.clone()),
        samples,
        poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::staircase;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn samples(vals: &[(i64, u64)]) -> Vec<(i64, Natural)> {
        vals.iter().map(|&(x, y)| (x, nat(y))).collect()
    }

    #[test]
    fn fit_line() {
        let poly = fit_polynomial(&samples(&[(1, 2), (2, 3), (3, 4)])).unwrap();
        assert_eq!(poly.degree(), 1);
        assert_eq!(poly.coeff_strings(), vec!["1", "1"]); // N + 1
    }

    #[test]
    fn fit_constant() {
        let poly = fit_polynomial(&samples(&[(1, 1), (2, 1), (3, 1)])).unwrap();
        assert_eq!(poly.degree(), 0);
        assert_eq!(poly.coeff_strings(), vec!["1"]);
    }

    #[test]
    fn fit_cubic_row_and_extrapolate() {
        let poly = fit_polynomial(&samples(&[(1, 5), (2, 15), (3, 34), (4, 65)])).unwrap();
        assert_eq!(poly.degree(), 3);
        for (x, y) in [(5i64, 111u64), (6, 175), (7, 260)] {
            assert_eq!(poly.evaluate(x), rational(&nat(y)));
        }
    }

    #[test]
    fn fit_rejects_duplicates() {
        assert!(matches!(
            fit_polynomial(&samples(&[(1, 1), (1, 2)])),
            Err(Error::DuplicateAbscissa(1))
        ));
        assert!(matches!(
            fit_polynomial(&samples(&[(1, 1)])),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn stretched_sequences() {
        let seq = stretched_sequence(&staircase(4), &staircase(3), &p(&[2, 2]), 4).unwrap();
        assert_eq!(seq, vec![nat(2), nat(3), nat(4), nat(5)]);

        let seq = stretched_sequence(&staircase(2), &staircase(1), &p(&[1, 1]), 3).unwrap();
        assert_eq!(seq, vec![nat(1), nat(1), nat(1)]);

        let seq = stretched_sequence(&p(&[2, 1]), &p(&[1]), &p(&[1, 1]), 3).unwrap();
        assert_eq!(seq, vec![nat(1), nat(1), nat(1)]);

        assert!(matches!(
            stretched_sequence(&p(&[2]), &p(&[1]), &p(&[2]), 2),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn analyze_linear_family() {
        let report =
            analyze_stretch(&staircase(4), &staircase(3), &p(&[2, 2]), 3, 3).unwrap();
        assert_eq!(report.degree, 1);
        assert!(report.all_coeffs_nonnegative);
        assert_eq!(report.extrapolation_checked_to, 6);
    }

    #[test]
    fn analyze_cubic_family() {
        let report =
            analyze_stretch(&staircase(6), &staircase(5), &p(&[3, 3]), 5, 2).unwrap();
        assert_eq!(report.degree, 3);
        assert_eq!(report.samples[5], (6, nat(175)));
        assert_eq!(report.samples[6], (7, nat(260)));
    }

    #[test]
    fn analyze_degenerate_family() {
        // α_1 / α_0 with content (2): constant 1.
        let report = analyze_stretch(&p(&[2]), &Partition::empty(), &p(&[2]), 2, 2).unwrap();
        assert_eq!(report.degree, 0);
        assert_eq!(report.poly.coeff_strings(), vec!["1"]);
    }

    #[test]
    fn underestimated_degree_is_an_error() {
        // Row n=3 is cubic; a 2-point fit cannot extrapolate it.
        let err =
            analyze_stretch(&staircase(6), &staircase(5), &p(&[3, 3]), 2, 1).unwrap_err();
        assert!(matches!(err, Error::ExtrapolationMismatch { n: 3, .. }));
    }

    #[test]
    fn report_json_uses_decimal_strings() {
        let report =
            analyze_stretch(&staircase(4), &staircase(3), &p(&[2, 2]), 3, 1).unwrap();
        let json = report.to_json();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["samples"][0][1], "2");
        assert_eq!(json["polynomial"][0], "1");
    }
}
