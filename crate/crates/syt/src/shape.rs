//! Partitions (shapes), shape classification, and hook-length counting.

use crate::{Error, Result};

/// An integer partition drawn as left-justified rows (English notation).
///
/// Parts are weakly decreasing, strictly positive, and the sequence is
/// nonempty; `n` is the total cell count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Shape classification used to dispatch shape-specific theorems.
///
/// Always recomputed from the parts, never trusted from input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeClass {
    /// All parts equal `c`, `r` of them.
    Rectangle { c: usize, r: usize },
    /// Parts are `(k, k-1, ..., 1)`.
    Staircase { k: usize },
    General,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Rectangle `c^r`: `r` rows of length `c`.
    pub fn rectangle(c: usize, r: usize) -> Result<Self> {
        Partition::new(vec![c; r])
    }

    /// Staircase `sc_k = (k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Result<Self> {
        Partition::new((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Total number of cells.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn classify(&self) -> ShapeClass {
        let r = self.parts.len();
        let c = self.parts[0];
        if self.parts.iter().all(|&p| p == c) {
            return ShapeClass::Rectangle { c, r };
        }
        if self
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p == r - i)
            && self.parts[0] == r
        {
            return ShapeClass::Staircase { k: r };
        }
        ShapeClass::General
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// True if cell `(i, j)` (0-based) lies inside the shape.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.parts.len() && j < self.parts[i]
    }

    /// Hook length of cell `(i, j)` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts.iter().skip(i + 1).filter(|&&p| p > j).count();
        arm + leg + 1
    }
}

/// Parse a shape from text: a comma list `3,2,1`, rectangle sugar `3^4`,
/// or staircase sugar `sc:4`.
pub fn parse_shape(text: &str) -> Result<Partition> {
    let text = text.trim();
    if let Some(k) = text.strip_prefix("sc:") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::MalformedShape(format!("bad staircase size {k:?}")))?;
        if k == 0 {
            return Err(Error::MalformedShape("staircase size must be positive".into()));
        }
        return Partition::staircase(k);
    }
    if let Some((c, r)) = text.split_once('^') {
        let c: usize = c
            .parse()
            .map_err(|_| Error::MalformedShape(format!("bad part {c:?}")))?;
        let r: usize = r
            .parse()
            .map_err(|_| Error::MalformedShape(format!("bad repeat count {r:?}")))?;
        if c == 0 || r == 0 {
            return Err(Error::MalformedShape("rectangle sides must be positive".into()));
        }
        return Partition::rectangle(c, r);
    }
    let parts: Result<Vec<usize>> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::MalformedShape(format!("bad part {p:?}")))
        })
        .collect();
    Partition::new(parts?)
}

/// Number of standard Young tableaux of the given shape, by the hook
/// length formula in exact (checked) integer arithmetic.
pub fn count_syt(shape: &Partition) -> Result<u128> {
    let n = shape.n() as u128;
    // n! / prod(hooks), computed as a running exact quotient: multiply the
    // factorial in while dividing out hooks as soon as divisibility allows.
    let mut hooks: Vec<u128> = Vec::new();
    for i in 0..shape.rows() {
        for j in 0..shape.parts()[i] {
            hooks.push(shape.hook(i, j) as u128);
        }
    }
    let mut num: u128 = 1;
    for f in 1..=n {
        num = num.checked_mul(f).ok_or(Error::Overflow)?;
        // divide out any hook that now divides the numerator
        for h in hooks.iter_mut() {
            if *h > 1 && num.is_multiple_of(*h) {
                num /= *h;
                *h = 1;
            }
        }
    }
    let rem: u128 = hooks.iter().product();
    debug_assert_eq!(num % rem, 0);
    Ok(num / rem)
}

/// All partitions of `n` in reverse lexicographic order; the exhaustive
/// test universes are built from this.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(acc.clone()).unwrap());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            acc.push(p);
            rec(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rectangle_sugar() {
        assert_eq!(parse_shape("3^4").unwrap().parts(), &[3, 3, 3, 3]);
    }

    #[test]
    fn parse_staircase_sugar() {
        assert_eq!(parse_shape("sc:3").unwrap().parts(), &[3, 2, 1]);
    }

    #[test]
    fn parse_literal_list() {
        assert_eq!(parse_shape("3,3,2").unwrap().parts(), &[3, 3, 2]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_shape("").is_err());
        assert!(parse_shape("2,3").is_err());
        assert!(parse_shape("3,0").is_err());
        assert!(parse_shape("sc:0").is_err());
        assert!(parse_shape("x^2").is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(
            parse_shape("3^4").unwrap().classify(),
            ShapeClass::Rectangle { c: 3, r: 4 }
        );
        assert_eq!(
            parse_shape("3,2,1").unwrap().classify(),
            ShapeClass::Staircase { k: 3 }
        );
        assert_eq!(parse_shape("3,3,2").unwrap().classify(), ShapeClass::General);
        // a single row/column is both; rectangle wins, except (1) which is both
        assert_eq!(
            parse_shape("1").unwrap().classify(),
            ShapeClass::Rectangle { c: 1, r: 1 }
        );
    }

    #[test]
    fn conjugate_of_staircase_is_itself() {
        let s = Partition::staircase(4).unwrap();
        assert_eq!(s.conjugate(), s);
    }

    #[test]
    fn hook_counts() {
        assert_eq!(count_syt(&parse_shape("3,2,1").unwrap()).unwrap(), 16);
        assert_eq!(count_syt(&parse_shape("3^4").unwrap()).unwrap(), 462);
        assert_eq!(count_syt(&parse_shape("4,3,2,1").unwrap()).unwrap(), 768);
        assert_eq!(count_syt(&parse_shape("1").unwrap()).unwrap(), 1);
        assert_eq!(count_syt(&parse_shape("sc:5").unwrap()).unwrap(), 292_864);
    }
}
