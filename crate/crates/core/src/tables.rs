//! Coefficient tables of k-Schur functions in Schur functions and of
//! Macdonald polynomials in k-Schur functions, plus the embedded reference
//! fixtures.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::exactalg::PolyQT;
use crate::kschur::{k_schur, KSchurError};
use crate::macdonald::{kschur_qt_kostka, MacError};
use crate::partitions::{k_bounded_partitions, Partition};

const FIXTURES: &str = include_str!("../fixtures/tables.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    /// Rows `s^(k)_λ`, columns `s_μ`.
    KSchurInSchur,
    /// Rows `H_λ`, columns `s^(k)_μ`.
    MacHInKSchur,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::KSchurInSchur => "kschur-in-schur",
            TableKind::MacHInKSchur => "mach-in-kschur",
        }
    }
}

impl FromStr for TableKind {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kschur-in-schur" => Ok(TableKind::KSchurInSchur),
            "mach-in-kschur" => Ok(TableKind::MacHInKSchur),
            other => Err(TableError::Malformed(format!("unknown table kind {other:?}"))),
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error(transparent)]
    KSchur(#[from] KSchurError),
    #[error(transparent)]
    Macdonald(#[from] MacError),
    #[error("coefficient {0} is not a polynomial in t")]
    NotPolynomial(String),
    #[error("malformed table: {0}")]
    Malformed(String),
}

/// A coefficient matrix; rows and columns in increasing graded-lex order.
/// Missing entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub kind: TableKind,
    pub k: usize,
    pub degree: usize,
    pub columns: Vec<Partition>,
    pub rows: Vec<(Partition, BTreeMap<Partition, PolyQT>)>,
}

impl Table {
    pub fn entry(&self, row: &Partition, col: &Partition) -> PolyQT {
        self.rows
            .iter()
            .find(|(r, _)| r == row)
            .and_then(|(_, m)| m.get(col).cloned())
            .unwrap_or_default()
    }

    pub fn row_indices(&self) -> Vec<&Partition> {
        self.rows.iter().map(|(p, _)| p).collect()
    }

    /// Same rows with the same nonzero entries; column lists are ignored.
    pub fn same_values(&self, other: &Table) -> bool {
        self.kind == other.kind
            && self.k == other.k
            && self.degree == other.degree
            && self.rows == other.rows
    }

    /// Cells where the two tables disagree, as `(row, column, ours, theirs)`.
    pub fn differences(&self, other: &Table) -> Vec<(Partition, Partition, PolyQT, PolyQT)> {
        let rows: BTreeSet<&Partition> =
            self.row_indices().into_iter().chain(other.row_indices()).collect();
        let cols: BTreeSet<&Partition> = self
            .rows
            .iter()
            .chain(&other.rows)
            .flat_map(|(_, m)| m.keys())
            .collect();
        let mut out = Vec::new();
        for r in &rows {
            for c in &cols {
                let (a, b) = (self.entry(r, c), other.entry(r, c));
                if a != b {
                    out.push(((*r).clone(), (*c).clone(), a, b));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(p, m)| {
                let coeffs: Vec<Value> = m
                    .iter()
                    .map(|(c, v)| json!({"index": c.parts(), "coeff": v.to_string()}))
                    .collect();
                json!({"index": p.parts(), "coeffs": coeffs})
            })
            .collect();
        json!({
            "kind": self.kind.name(),
            "k": self.k,
            "degree": self.degree,
            "columns": self.columns.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
            "rows": rows,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, TableError> {
        let bad = |m: &str| TableError::Malformed(m.to_string());
        let part = |v: &Value| -> Result<Partition, TableError> {
            let parts: Vec<usize> =
                serde_json::from_value(v.clone()).map_err(|e| bad(&e.to_string()))?;
            Partition::new(parts).map_err(|e| bad(&e.to_string()))
        };
        let kind: TableKind = v["kind"].as_str().ok_or_else(|| bad("missing kind"))?.parse()?;
        let k = v["k"].as_u64().ok_or_else(|| bad("missing k"))? as usize;
        let degree = v["degree"].as_u64().ok_or_else(|| bad("missing degree"))? as usize;
        let columns = v["columns"]
            .as_array()
            .ok_or_else(|| bad("missing columns"))?
            .iter()
            .map(part)
            .collect::<Result<Vec<_>, _>>()?;
        let mut rows = Vec::new();
        for r in v["rows"].as_array().ok_or_else(|| bad("missing rows"))? {
            let mut m = BTreeMap::new();
            for c in r["coeffs"].as_array().ok_or_else(|| bad("missing coeffs"))? {
                let s = c["coeff"].as_str().ok_or_else(|| bad("coefficient must be a string"))?;
                let val: PolyQT = s.parse().map_err(|_| bad(&format!("bad coefficient {s:?}")))?;
                if !val.is_zero() {
                    m.insert(part(&c["index"])?, val);
                }
            }
            rows.push((part(&r["index"])?, m));
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Table { kind, k, degree, columns, rows })
    }

    /// Plain aligned text, one line per row.
    pub fn to_text(&self) -> String {
        let header: Vec<String> = std::iter::once(format!("k={}", self.k))
            .chain(self.columns.iter().map(|c| format!("{c:?}")))
            .collect();
        let mut lines = vec![header];
        for (r, m) in &self.rows {
            let mut line = vec![format!("{r:?}")];
            for c in &self.columns {
                line.push(m.get(c).map(|v| v.to_string()).unwrap_or_default());
            }
            lines.push(line);
        }
        let ncol = lines[0].len();
        let widths: Vec<usize> = (0..ncol)
            .map(|j| lines.iter().map(|l| l[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for l in &lines {
            let cells: Vec<String> = l
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            out.push_str(cells.join(" | ").trim_end());
            out.push('\n');
        }
        out
    }

    /// CSV with a header row; partitions as `3 2 1`.
    pub fn to_csv(&self) -> String {
        let p = |x: &Partition| {
            x.parts().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        };
        let mut out = String::from("row");
        for c in &self.columns {
            out.push(',');
            out.push_str(&p(c));
        }
        out.push('\n');
        for (r, m) in &self.rows {
            out.push_str(&p(r));
            for c in &self.columns {
                out.push(',');
                if let Some(v) = m.get(c) {
                    out.push_str(&v.to_string());
                }
            }
            out.push('\n');
        }
        out
    }
}

fn laurent_row(exp: &crate::kschur::Exp) -> Result<BTreeMap<Partition, PolyQT>, TableError> {
    exp.iter()
        .map(|(p, c)| {
            PolyQT::from_laurent(c)
                .map(|v| (p.clone(), v))
                .ok_or_else(|| TableError::NotPolynomial(c.to_string()))
        })
        .collect()
}

/// Compute a table from scratch (or from the in-memory caches).
pub fn compute_table(kind: TableKind, k: usize, degree: usize) -> Result<Table, TableError> {
    let row_idx = k_bounded_partitions(degree, k);
    let mut rows = Vec::with_capacity(row_idx.len());
    for lam in &row_idx {
        let row = match kind {
            TableKind::KSchurInSchur => laurent_row(&*k_schur(k, lam)?)?,
            TableKind::MacHInKSchur => kschur_qt_kostka(k, lam)?,
        };
        rows.push((lam.clone(), row));
    }
    let columns = match kind {
        TableKind::KSchurInSchur => crate::partitions::partitions_of(degree),
        TableKind::MacHInKSchur => row_idx.clone(),
    };
    Ok(Table { kind, k, degree, columns, rows })
}

/// The reference tables shipped with the crate.
pub fn fixtures() -> Vec<Table> {
    let doc: Value = serde_json::from_str(FIXTURES).expect("embedded fixture is valid JSON");
    doc["tables"]
        .as_array()
        .expect("fixture has a table list")
        .iter()
        .map(|t| Table::from_json(t).expect("embedded fixture table is well formed"))
        .collect()
}

pub fn fixture(kind: TableKind, k: usize, degree: usize) -> Option<Table> {
    fixtures()
        .into_iter()
        .find(|t| t.kind == kind && t.k == k && t.degree == degree)
}
