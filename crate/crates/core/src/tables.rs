//! The two code tables: GRS codes from the standard `p`-adic splittings and
//! alternant codes from duadic splittings, rebuilt and checked row by row.

use serde::Serialize;

use crate::codes::{
    constacyclic_alternant_mds, grs_equals_constacyclic, min_distance_exhaustive,
    negacyclic_alternant_mds, AlternantCode, Distance,
};
use crate::splitting::Params;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// How the distance of a row was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Certificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub label: &'static str,
    pub m: u64,
    pub q: u64,
    pub n: u64,
    pub r: u64,
    pub expected: [usize; 3],
    pub found: [Option<usize>; 3],
    pub mode: Mode,
    pub checks: Vec<Check>,
}

impl Row {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn within_budget(d: Result<Distance>) -> Result<Option<Distance>> {
    match d {
        Err(Error::TooLarge { .. }) => Ok(None),
        Ok(d) => Ok(Some(d)),
        Err(e) => Err(e),
    }
}

fn parameter_checks(expected: [usize; 3], n: usize, k: usize, d: Option<usize>, mode: Mode) -> Vec<Check> {
    vec![
        Check::new("length", n == expected[0], format!("n = {n}")),
        Check::new("dimension", k == expected[1], format!("k = {k}")),
        Check::new(
            "distance",
            d == Some(expected[2]),
            format!("d = {} ({})", d.map_or("?".into(), |d| d.to_string()), mode_name(mode)),
        ),
    ]
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Exhaustive => "exhaustive",
        Mode::Certificate => "certificate",
    }
}

/// `(label, m, q, n, r, p, k, [n, k, d])`.
pub const GRS_ROWS: [(&str, u64, u64, u64, u64, u64, u64, [usize; 3]); 6] = [
    ("i", 3, 19, 6, 3, 3, 2, [6, 4, 3]),
    ("ii", 3, 64, 21, 3, 3, 1, [21, 7, 15]),
    ("iii", 2, 17, 8, 2, 2, 1, [8, 4, 5]),
    ("iv", 2, 81, 40, 2, 2, 1, [40, 20, 21]),
    ("v", 2, 25, 12, 2, 2, 1, [12, 6, 7]),
    ("vi", 2, 49, 24, 2, 2, 1, [24, 12, 13]),
];

/// One GRS row. The distance is enumerated when `q^k ≤ budget`, otherwise
/// it comes from the GRS equality.
pub fn grs_row(index: usize, budget: u64) -> Result<Row> {
    let (label, m, q, n, r, p, k, expected) = GRS_ROWS[index];
    let params = Params::new(q, n, r)?;
    let (code, eq) = grs_equals_constacyclic(&params, p, k)?;
    let exhaustive = within_budget(min_distance_exhaustive(&code, budget))?;
    let (mode, d) = match exhaustive {
        Some(d) => (Mode::Exhaustive, d.value()),
        None => (Mode::Certificate, Some(eq.d_certified)),
    };
    let mut checks = parameter_checks(expected, code.n(), code.k(), d, mode);
    checks.push(Check::new(
        "grs-dimension",
        eq.k == eq.grs_k,
        format!("constacyclic k = {}, GRS k = {}", eq.k, eq.grs_k),
    ));
    checks.push(Check::new(
        "zeros-annihilated",
        eq.zeros_annihilated,
        "GRS rows vanish at every zero of the constacyclic code",
    ));
    checks.push(Check::new("same-row-space", eq.same_row_space, "row spaces agree over the extension"));
    if mode == Mode::Exhaustive {
        checks.push(Check::new(
            "certificate-agrees",
            d == Some(eq.d_certified),
            format!("certified d = {}", eq.d_certified),
        ));
    }
    Ok(Row {
        label,
        m,
        q,
        n,
        r,
        expected,
        found: [Some(code.n()), Some(code.k()), d],
        mode,
        checks,
    })
}

pub fn table_grs(budget: u64) -> Result<Vec<Row>> {
    (0..GRS_ROWS.len()).map(|i| grs_row(i, budget)).collect()
}

/// `(label, q, n, r, [n, k, d])`. Rows `i`–`iii` are negacyclic, `iv`–`v`
/// use `r = (q - 1)/2`.
pub const ALTERNANT_ROWS: [(&str, u64, u64, u64, [usize; 3]); 5] = [
    ("i", 9, 10, 2, [10, 5, 6]),
    ("ii", 5, 6, 2, [6, 3, 4]),
    ("iii", 7, 8, 2, [8, 4, 5]),
    ("iv", 9, 10, 4, [10, 5, 6]),
    ("v", 17, 18, 8, [18, 9, 10]),
];

pub fn alternant_row(index: usize, budget: u64) -> Result<Row> {
    let (label, q, n, r, expected) = ALTERNANT_ROWS[index];
    let negacyclic = r == 2;
    let code: AlternantCode = if negacyclic {
        negacyclic_alternant_mds(q, 1, budget)?
    } else {
        constacyclic_alternant_mds(q, budget)?
    };
    let mode = if code.exhaustive.is_some() {
        Mode::Exhaustive
    } else {
        Mode::Certificate
    };
    let d = code.distance().value();
    let cert = &code.certificate;
    let mut checks = parameter_checks(expected, code.code.n(), code.code.k(), d, mode);
    checks.push(Check::new(
        "parameters",
        (code.params.q(), code.params.n(), code.params.r()) == (q, n, r),
        format!("(q, n, r) = ({}, {}, {})", code.params.q(), code.params.n(), code.params.r()),
    ));
    checks.push(Check::new(
        "alternant",
        cert.contained_in_parent && cert.subfield_subcode_dim == cert.k,
        format!(
            "equals the subfield subcode of a [{}, {}] GRS code",
            cert.n, cert.parent_k
        ),
    ));
    checks.push(Check::new(
        "mds-certificate",
        cert.is_mds(),
        format!("{} <= d <= {}", cert.lower_bound, cert.upper_bound),
    ));
    if mode == Mode::Exhaustive {
        checks.push(Check::new(
            "certificate-agrees",
            cert.d_certified == d,
            format!("certified d = {:?}", cert.d_certified),
        ));
    }
    if negacyclic {
        checks.push(Check::new("self-dual", code.self_dual, "G G^T = 0 and 2k = n"));
    }
    let (locators, multipliers) = code.parent_exponents();
    let shown = 3.min(locators.len());
    checks.push(Check::new(
        "parent-exponents",
        true,
        format!(
            "locators w^{:?}, multipliers w^{:?}, ...",
            &locators[..shown],
            &multipliers[..shown]
        ),
    ));
    Ok(Row {
        label,
        m: 2,
        q,
        n,
        r,
        expected,
        found: [Some(code.code.n()), Some(code.code.k()), d],
        mode,
        checks,
    })
}

pub fn table_alternant(budget: u64) -> Result<Vec<Row>> {
    (0..ALTERNANT_ROWS.len()).map(|i| alternant_row(i, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows_exhaustive() {
        let row = grs_row(0, 1_000_000).unwrap();
        assert!(row.pass(), "{row:?}");
        assert_eq!(row.mode, Mode::Exhaustive);
        let row = grs_row(1, 1_000_000).unwrap();
        assert!(row.pass(), "{row:?}");
        assert_eq!(row.mode, Mode::Certificate);
        let row = alternant_row(1, 1_000_000).unwrap();
        assert!(row.pass(), "{row:?}");
        assert_eq!(row.found, [Some(6), Some(3), Some(4)]);
    }
}
