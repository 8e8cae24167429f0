//! Standard Young tableaux: validation, parsing, serialization, transpose,
//! and exhaustive enumeration in a canonical order.

use crate::shape::{count_syt, Partition};
use crate::{Error, Result};

/// Default ceiling on the number of tableaux an enumeration may produce.
pub const DEFAULT_ENUM_LIMIT: u128 = 10_000_000;

/// A standard filling of a partition shape with `1..n`, strictly
/// increasing along rows and down columns. Cell `(1,1)` is the northwest
/// corner; public cell coordinates are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| Error::RaggedShape(e.to_string()))?;
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.shape.n() as u32;
        let mut seen = vec![false; n as usize + 1];
        for row in &self.rows {
            for &e in row {
                if e == 0 || e > n {
                    return Err(Error::WrongEntrySet {
                        expected: n,
                        detail: format!("entry {e} out of range"),
                    });
                }
                if seen[e as usize] {
                    return Err(Error::DuplicateEntry(e));
                }
                seen[e as usize] = true;
            }
        }
        // all of 1..n present follows from the pigeonhole above
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if j > 0 && row[j - 1] >= e {
                    return Err(Error::RowViolation(e));
                }
                if i > 0 && self.rows[i - 1][j] >= e {
                    return Err(Error::ColumnViolation(e));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Entry at 1-based cell `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// 1-based cell holding `value`.
    pub fn position_of(&self, value: u32) -> (usize, usize) {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == value {
                    return (i + 1, j + 1);
                }
            }
        }
        panic!("value {value} not in tableau");
    }

    /// Reflect about the main diagonal; the shape becomes the conjugate.
    pub fn transpose(&self) -> Tableau {
        let conj = self.shape.conjugate();
        let rows: Vec<Vec<u32>> = conj
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &len)| (0..len).map(|i| self.rows[i][j]).collect())
            .collect();
        Tableau { shape: conj, rows }
    }

    /// Row-major entry sequence, used for the canonical enumeration order.
    pub fn row_major(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Parse the text format: rows separated by `/`, entries by single spaces,
/// e.g. `1 4 5/2 6 8/3 7 13`.
pub fn parse_tableau(text: &str) -> Result<Tableau> {
    let rows: Result<Vec<Vec<u32>>> = text
        .trim()
        .split('/')
        .map(|row| {
            row.split_whitespace()
                .map(|e| {
                    e.parse::<u32>()
                        .map_err(|_| Error::MalformedTableau(format!("bad entry {e:?}")))
                })
                .collect()
        })
        .collect();
    Tableau::new(rows?)
}

/// Exact inverse of `parse_tableau`: single-space separators, `/` between
/// rows, no trailing whitespace.
pub fn serialize_tableau(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Parse the JSON alternative: `{"shape":[3,2,1],"rows":[[1,2,6],[3,5],[4]]}`.
pub fn parse_tableau_json(text: &str) -> Result<Tableau> {
    #[derive(serde::Deserialize)]
    struct J {
        shape: Vec<usize>,
        rows: Vec<Vec<u32>>,
    }
    let j: J = serde_json::from_str(text)
        .map_err(|e| Error::MalformedTableau(format!("bad JSON: {e}")))?;
    let t = Tableau::new(j.rows)?;
    if t.shape().parts() != j.shape.as_slice() {
        return Err(Error::ShapeMismatch(format!(
            "declared shape {:?} != row lengths {:?}",
            j.shape,
            t.shape().parts()
        )));
    }
    Ok(t)
}

pub fn tableau_to_json(t: &Tableau) -> serde_json::Value {
    serde_json::json!({ "shape": t.shape().parts(), "rows": t.rows() })
}

/// Accept either the text format or (when the input starts with `{`) JSON.
pub fn parse_tableau_any(text: &str) -> Result<Tableau> {
    if text.trim_start().starts_with('{') {
        parse_tableau_json(text)
    } else {
        parse_tableau(text)
    }
}

/// All standard Young tableaux of `shape`, in canonical order
/// (lexicographic on the row-major entry sequence), with the default limit.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<Tableau>> {
    enumerate_syt_with_limit(shape, DEFAULT_ENUM_LIMIT)
}

pub fn enumerate_syt_with_limit(shape: &Partition, limit: u128) -> Result<Vec<Tableau>> {
    let count = count_syt(shape)?;
    if count > limit {
        return Err(Error::EnumerationLimit { count, limit });
    }
    let r = shape.rows();
    let parts = shape.parts();
    let n = shape.n() as u32;
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&p| vec![0; p]).collect();
    let mut fill: Vec<usize> = vec![0; r]; // cells filled so far in each row
    let mut out = Vec::with_capacity(count as usize);

    // Place values 1..n in order; value v may go at the end of row i when
    // row i has room and row i-1 is strictly longer so far (column growth).
    fn rec(
        v: u32,
        n: u32,
        parts: &[usize],
        rows: &mut Vec<Vec<u32>>,
        fill: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if v > n {
            out.push(Tableau {
                shape: Partition::new(parts.to_vec()).unwrap(),
                rows: rows.clone(),
            });
            return;
        }
        for i in 0..parts.len() {
            if fill[i] < parts[i] && (i == 0 || fill[i - 1] > fill[i]) {
                let j = fill[i];
                rows[i][j] = v;
                fill[i] += 1;
                rec(v + 1, n, parts, rows, fill, out);
                fill[i] -= 1;
            }
        }
    }
    rec(1, n, parts, &mut rows, &mut fill, &mut out);
    out.sort_by_key(|a| a.row_major());
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}
