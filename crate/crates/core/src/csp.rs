//! Generic cyclic sieving verifier.
//!
//! A triple `(X, C, X(q))` with `C` cyclic of order `N` exhibits cyclic
//! sieving when, for every `k`, the number of elements fixed by `g^k` equals
//! `X(ω^k)` with `ω = e^{2πi/N}`. [`verify_csp`] checks every `k` in `0..N`,
//! evaluating `X(q)` exactly at the primitive root of order `N / gcd(k, N)`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::gcd;
use rayon::prelude::*;
use serde::Serialize;

use crate::actions::{orbits_with, CyclicAction, CyclicObject};
use crate::closedform::rhs_closed_form;
use crate::objects::{CatalanObject, Family};
use crate::qpoly::{eval_at_primitive_root, q_catalan, CyclotomicValue, Polynomial};
use crate::{Error, Result};

type EnumerateFn<T> = Box<dyn Fn() -> Result<Vec<T>> + Send + Sync>;
type ActFn<T> = Box<dyn Fn(&T, i64) -> T + Send + Sync>;
type ClosedFormFn = Box<dyn Fn(i64) -> Result<BigInt> + Send + Sync>;

/// Everything the verifier needs about a candidate sieving triple.
pub struct FamilyDescriptor<T> {
    pub name: String,
    pub n: usize,
    pub group_order: usize,
    pub polynomial: Polynomial,
    enumerate: EnumerateFn<T>,
    act: ActFn<T>,
    closed_form: Option<ClosedFormFn>,
}

impl<T> FamilyDescriptor<T> {
    /// `act(x, k)` must apply the generator `k` times.
    pub fn new(
        name: impl Into<String>,
        n: usize,
        group_order: usize,
        polynomial: Polynomial,
        enumerate: impl Fn() -> Result<Vec<T>> + Send + Sync + 'static,
        act: impl Fn(&T, i64) -> T + Send + Sync + 'static,
    ) -> Self {
        FamilyDescriptor {
            name: name.into(),
            n,
            group_order,
            polynomial,
            enumerate: Box::new(enumerate),
            act: Box::new(act),
            closed_form: None,
        }
    }

    /// Attaches an independent closed form for the value at `ω^k`.
    pub fn with_closed_form(
        mut self,
        closed_form: impl Fn(i64) -> Result<BigInt> + Send + Sync + 'static,
    ) -> Self {
        self.closed_form = Some(Box::new(closed_form));
        self
    }

    pub fn has_closed_form(&self) -> bool {
        self.closed_form.is_some()
    }
}

impl FamilyDescriptor<CatalanObject> {
    /// One of the three Catalan families with rotation and `C_n(q)`.
    ///
    /// Configurations also carry the integer closed form of the fixed counts
    /// (for `n >= 2`).
    pub fn standard(family: Family, n: usize, cap: Option<usize>) -> Result<Self> {
        let action = CyclicAction::new(family, n)?;
        family.check_size(n, cap)?;
        let desc = FamilyDescriptor::new(
            family.name(),
            n,
            action.order,
            q_catalan(n),
            move || family.enumerate(n, cap),
            |x: &CatalanObject, k| x.rotate(k),
        );
        Ok(if family == Family::Configuration && n >= 2 {
            desc.with_closed_form(move |k| rhs_closed_form(n, k))
        } else {
            desc
        })
    }

    pub fn configurations(n: usize) -> Result<Self> {
        Self::standard(Family::Configuration, n, None)
    }

    pub fn matchings(n: usize) -> Result<Self> {
        Self::standard(Family::Matching, n, None)
    }

    pub fn triangulations(n: usize) -> Result<Self> {
        Self::standard(Family::Triangulation, n, None)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Also record the floating-point value of `X(ω^k)` per row.
    pub floating: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CspRow {
    pub k: usize,
    /// Order of the root `ω^k`.
    pub d: usize,
    pub fixed: u64,
    pub evaluation: CyclotomicValue,
    pub closed_form: Option<BigInt>,
    pub floating: Option<Complex64>,
}

impl CspRow {
    /// `X(ω^k)` when it is an integer.
    pub fn eval(&self) -> Option<BigInt> {
        self.evaluation.as_integer()
    }

    pub fn eval_matches(&self) -> bool {
        self.eval() == Some(BigInt::from(self.fixed))
    }

    pub fn closed_form_matches(&self) -> Option<bool> {
        self.closed_form
            .as_ref()
            .map(|c| *c == BigInt::from(self.fixed))
    }

    /// Every available column agrees.
    pub fn matches(&self) -> bool {
        self.eval_matches() && self.closed_form_matches() != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CspReport {
    pub family: String,
    pub n: usize,
    pub group_order: usize,
    pub polynomial: Polynomial,
    pub rows: Vec<CspRow>,
    /// Counted by walking orbits, independently of the fixed-point columns.
    pub orbits: u64,
    /// Every fixed count equals its exact evaluation.
    pub csp_holds: bool,
    pub elapsed: Duration,
}

pub fn verify_csp<T>(descriptor: &FamilyDescriptor<T>) -> Result<CspReport>
where
    T: Ord + Clone + Send + Sync,
{
    verify_csp_with(descriptor, VerifyOptions::default())
}

pub fn verify_csp_with<T>(
    descriptor: &FamilyDescriptor<T>,
    options: VerifyOptions,
) -> Result<CspReport>
where
    T: Ord + Clone + Send + Sync,
{
    let start = Instant::now();
    let order = descriptor.group_order;
    if order == 0 {
        return Err(Error::Domain("group order must be at least 1".into()));
    }
    let mut objects = (descriptor.enumerate)()?;
    objects.sort_unstable();
    objects.dedup();

    let act = &descriptor.act;
    let rows = (0..order)
        .into_par_iter()
        .map(|k| -> Result<CspRow> {
            let d = order / gcd(k, order);
            let fixed = objects.iter().filter(|x| act(x, k as i64) == **x).count() as u64;
            let closed_form = descriptor
                .closed_form
                .as_ref()
                .map(|f| f(k as i64))
                .transpose()?;
            Ok(CspRow {
                k,
                d,
                fixed,
                evaluation: eval_at_primitive_root(&descriptor.polynomial, d),
                closed_form,
                floating: options
                    .floating
                    .then(|| descriptor.polynomial.eval_complex(order, k as i64)),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let orbits = orbits_with(&objects, |x| act(x, 1))?.len() as u64;
    let csp_holds = rows.iter().all(CspRow::eval_matches);
    Ok(CspReport {
        family: descriptor.name.clone(),
        n: descriptor.n,
        group_order: order,
        polynomial: descriptor.polynomial.clone(),
        rows,
        orbits,
        csp_holds,
        elapsed: start.elapsed(),
    })
}

/// Burnside consistency: the fixed counts sum to `N` times the orbit count.
pub fn burnside_check(report: &CspReport) -> bool {
    let n = report.group_order as u64;
    let total: u64 = report.rows.iter().map(|r| r.fixed).sum();
    n > 0 && report.rows.len() as u64 == n && total.is_multiple_of(n) && total / n == report.orbits
}

#[derive(Serialize)]
struct RowJson {
    k: usize,
    d: usize,
    fixed: String,
    eval: Option<String>,
    closed_form: Option<String>,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    family: &'a str,
    n: usize,
    group_order: usize,
    rows: Vec<RowJson>,
    orbits: u64,
    csp_holds: bool,
}

impl CspReport {
    /// JSON form with big integers as decimal strings. Timing is omitted so
    /// output is reproducible.
    pub fn to_json(&self) -> serde_json::Value {
        let rows = self
            .rows
            .iter()
            .map(|r| RowJson {
                k: r.k,
                d: r.d,
                fixed: r.fixed.to_string(),
                eval: r.eval().map(|v| v.to_string()),
                closed_form: r.closed_form.as_ref().map(ToString::to_string),
                matches: r.matches(),
            })
            .collect();
        serde_json::to_value(ReportJson {
            family: &self.family,
            n: self.n,
            group_order: self.group_order,
            rows,
            orbits: self.orbits,
            csp_holds: self.csp_holds,
        })
        .expect("report serializes")
    }

    /// Fixed-width text table.
    pub fn to_text(&self) -> String {
        let with_float = self.rows.iter().any(|r| r.floating.is_some());
        let mut header = vec!["k", "d", "fixed", "eval", "closed_form"];
        if with_float {
            header.push("float");
        }
        header.push("match");
        let table: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                let mut cells = vec![
                    r.k.to_string(),
                    r.d.to_string(),
                    r.fixed.to_string(),
                    r.eval().map_or_else(|| "-".into(), |v| v.to_string()),
                    r.closed_form
                        .as_ref()
                        .map_or_else(|| "-".into(), ToString::to_string),
                ];
                if with_float {
                    let z = r.floating.unwrap_or_default();
                    cells.push(format!("{:.6}{:+.6}i", z.re, z.im));
                }
                cells.push(if r.matches() { "yes" } else { "NO" }.into());
                cells
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                table
                    .iter()
                    .map(|row| row[c].len())
                    .chain([header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let mut out = String::new();
        let _ = writeln!(
            out,
            "family={} n={} group_order={}",
            self.family, self.n, self.group_order
        );
        let _ = writeln!(out, "polynomial={}", self.polynomial);
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let header: Vec<String> = header.into_iter().map(String::from).collect();
        let _ = writeln!(out, "{}", line(&header));
        for row in &table {
            let _ = writeln!(out, "{}", line(row));
        }
        for r in self.rows.iter().filter(|r| r.eval().is_none()) {
            let _ = writeln!(
                out,
                "k={}: evaluation is not an integer: {}",
                r.k, r.evaluation
            );
        }
        let _ = writeln!(out, "orbits={}", self.orbits);
        let _ = writeln!(out, "csp_holds={}", self.csp_holds);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{enumerate_matchings, Matching};

    fn fixed(report: &CspReport) -> Vec<u64> {
        report.rows.iter().map(|r| r.fixed).collect()
    }

    #[test]
    fn configurations_n5() {
        let report = verify_csp(&FamilyDescriptor::configurations(5).unwrap()).unwrap();
        assert_eq!(report.group_order, 4);
        assert_eq!(fixed(&report), [42, 2, 10, 2]);
        assert!(report.rows.iter().all(CspRow::matches));
        assert!(report.rows.iter().all(|r| r.closed_form.is_some()));
        assert_eq!(
            report.rows.iter().map(|r| r.d).collect::<Vec<_>>(),
            [1, 4, 2, 4]
        );
        assert!(report.csp_holds);
        assert_eq!(report.orbits, 14);
        assert!(burnside_check(&report));
    }

    #[test]
    fn matchings_n2() {
        let report = verify_csp(&FamilyDescriptor::matchings(2).unwrap()).unwrap();
        assert_eq!(fixed(&report), [2, 0, 2, 0]);
        assert!(report.csp_holds);
        assert!(report.rows.iter().all(|r| r.closed_form.is_none()));
        assert_eq!(report.orbits, 1);
    }

    #[test]
    fn trivial_group() {
        let report = verify_csp(&FamilyDescriptor::configurations(1).unwrap()).unwrap();
        assert_eq!(report.group_order, 1);
        assert_eq!(fixed(&report), [1]);
        assert!(report.csp_holds);
        assert!(burnside_check(&report));

        let report = verify_csp(&FamilyDescriptor::configurations(2).unwrap()).unwrap();
        assert_eq!(fixed(&report), [2]);
        assert!(report.csp_holds);
    }

    #[test]
    fn corrupted_row_fails_burnside() {
        let mut report = verify_csp(&FamilyDescriptor::configurations(5).unwrap()).unwrap();
        report.rows[1].fixed += 1;
        assert!(!burnside_check(&report));
        let mut report = verify_csp(&FamilyDescriptor::configurations(1).unwrap()).unwrap();
        assert!(burnside_check(&report));
        report.rows[0].fixed += 1;
        assert!(!burnside_check(&report));
    }

    #[test]
    fn wrong_polynomial_is_reported_not_fatal() {
        // [2]_q [2]_q has the right count at q = 1 but is not a sieving polynomial here
        let wrong = Polynomial::from_i64s(&[1, 2, 1]);
        let desc = FamilyDescriptor::new(
            "matching-wrong",
            2,
            4,
            wrong,
            || enumerate_matchings(2),
            |m: &Matching, k| m.rotate(k),
        );
        let report = verify_csp(&desc).unwrap();
        assert!(!report.csp_holds);
        // at a primitive 4th root 1 + 2q + q^2 = 2q, not an integer
        assert_eq!(report.rows[1].eval(), None);
        assert!(report
            .to_text()
            .contains("k=1: evaluation is not an integer: 2q mod Phi_4"));
        assert_eq!(report.to_json()["rows"][1]["eval"], serde_json::Value::Null);
        assert_eq!(report.to_json()["csp_holds"], false);
    }

    #[test]
    fn non_permutation_is_an_error() {
        let desc = FamilyDescriptor::new(
            "collapse",
            2,
            4,
            Polynomial::from_i64s(&[1, 0, 1]),
            || enumerate_matchings(2),
            |m: &Matching, k| {
                if k == 0 {
                    m.clone()
                } else {
                    Matching::new(2, vec![(1, 2), (3, 4)]).unwrap()
                }
            },
        );
        assert!(verify_csp(&desc).is_err());
    }

    #[test]
    fn json_shape() {
        let report = verify_csp(&FamilyDescriptor::configurations(5).unwrap()).unwrap();
        let json = report.to_json();
        let expected = serde_json::json!({
            "family": "config", "n": 5, "group_order": 4,
            "rows": [
                {"k": 0, "d": 1, "fixed": "42", "eval": "42", "closed_form": "42", "match": true},
                {"k": 1, "d": 4, "fixed": "2", "eval": "2", "closed_form": "2", "match": true},
                {"k": 2, "d": 2, "fixed": "10", "eval": "10", "closed_form": "10", "match": true},
                {"k": 3, "d": 4, "fixed": "2", "eval": "2", "closed_form": "2", "match": true}
            ],
            "orbits": 14, "csp_holds": true
        });
        assert_eq!(json, expected);
        let keys: Vec<_> = json.as_object().unwrap().keys().cloned().collect();
        assert_eq!(
            keys,
            ["family", "n", "group_order", "rows", "orbits", "csp_holds"]
        );
    }

    #[test]
    fn floating_column() {
        let desc = FamilyDescriptor::matchings(2).unwrap();
        let report = verify_csp_with(&desc, VerifyOptions { floating: true }).unwrap();
        for r in &report.rows {
            let z = r.floating.unwrap();
            assert!((z.re - r.fixed as f64).abs() < 1e-9 && z.im.abs() < 1e-9);
        }
        assert!(report.to_text().contains("float"));
    }

    #[test]
    fn size_limit_surfaces() {
        assert!(matches!(
            FamilyDescriptor::matchings(9),
            Err(Error::SizeLimit { .. })
        ));
        assert!(FamilyDescriptor::standard(Family::Configuration, 5, Some(3)).is_err());
        assert!(FamilyDescriptor::configurations(0).is_err());
    }
}
