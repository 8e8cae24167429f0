//! Descent sets, extended descent sets, and cyclic descent vectors with
//! their rotation/flip algebra on rectangular and staircase tableaux.

use std::collections::BTreeSet;

use crate::dynamics::promote;
use crate::shape::ShapeClass;
use crate::tableau::Tableau;
use crate::{Error, Result};

/// A cyclic binary vector of dotted positions in `{1..length}` (length
/// `n` for rectangles, `2n` for staircases).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentVector {
    length: usize,
    dots: BTreeSet<usize>,
}

impl DescentVector {
    pub fn new(length: usize, dots: BTreeSet<usize>) -> Result<Self> {
        if length == 0 {
            return Err(Error::MalformedShape("zero-length descent vector".into()));
        }
        if dots.iter().any(|&d| d == 0 || d > length) {
            return Err(Error::MalformedShape(format!(
                "dot out of range 1..{length}"
            )));
        }
        Ok(DescentVector { length, dots })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dots(&self) -> &BTreeSet<usize> {
        &self.dots
    }

    /// Cyclic shift; positive `k` moves each dot rightward.
    pub fn rotate(&self, k: i64) -> DescentVector {
        let len = self.length as i64;
        let dots = self
            .dots
            .iter()
            .map(|&d| ((d as i64 - 1 + k).rem_euclid(len) + 1) as usize)
            .collect();
        DescentVector {
            length: self.length,
            dots,
        }
    }

    /// Reflection `i ↦ (m - i) mod length` (positions taken in
    /// `{1..length}`, with residue 0 meaning position `length`).
    pub fn flip_about(&self, m: i64) -> DescentVector {
        let len = self.length as i64;
        let dots = (1..=self.length)
            .filter(|&i| {
                let src = (m - i as i64).rem_euclid(len);
                let src = if src == 0 { self.length } else { src as usize };
                self.dots.contains(&src)
            })
            .collect();
        DescentVector {
            length: self.length,
            dots,
        }
    }

    /// Dot at `i` iff no dot at `i`.
    pub fn complement(&self) -> DescentVector {
        let dots = (1..=self.length)
            .filter(|i| !self.dots.contains(i))
            .collect();
        DescentVector {
            length: self.length,
            dots,
        }
    }

    /// Minimal `p` dividing the length with `rotate(p)` the identity.
    pub fn period(&self) -> usize {
        (1..=self.length)
            .filter(|p| self.length.is_multiple_of(*p))
            .find(|&p| self.rotate(p as i64) == *self)
            .unwrap()
    }
}

impl std::fmt::Display for DescentVector {
    /// ASCII rendering: `x` for a dot, `.` for an empty box, position 1
    /// leftmost.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 1..=self.length {
            write!(f, "{}", if self.dots.contains(&i) { 'x' } else { '.' })?;
        }
        Ok(())
    }
}

/// Descents of `t`: all `i` with `i+1` strictly south of `i`.
pub fn descent_set(t: &Tableau) -> BTreeSet<usize> {
    let n = t.n() as u32;
    (1..n)
        .filter(|&i| t.position_of(i + 1).0 > t.position_of(i).0)
        .map(|i| i as usize)
        .collect()
}

/// Extended descent vector of a rectangular tableau: length `n`, dotted
/// at the descents, and at `n` exactly when `1` is a descent of the
/// promotion.
pub fn extended_descent_rect(r: &Tableau) -> Result<DescentVector> {
    if !matches!(r.shape().classify(), ShapeClass::Rectangle { .. }) {
        return Err(Error::UnsupportedShape(format!(
            "expected rectangle, got {:?}",
            r.shape().parts()
        )));
    }
    let n = r.n();
    let mut dots: BTreeSet<usize> = descent_set(r);
    if descent_set(&promote(r).0).contains(&1) {
        dots.insert(n);
    }
    DescentVector::new(n, dots)
}

/// Extended descent vector of a staircase tableau: length `2n`; for
/// `i < n` exactly one of positions `i` and `n+i` is dotted (dot at `i`
/// iff `i` is a descent), and exactly one of `n` and `2n` is dotted (dot
/// at `2n` iff `1` is a descent of the promotion).
pub fn extended_descent_staircase(s: &Tableau) -> Result<DescentVector> {
    let is_staircase = {
        let parts = s.shape().parts();
        let k = parts.len();
        (0..k).all(|i| parts[i] == k - i)
    };
    if !is_staircase {
        return Err(Error::UnsupportedShape(format!(
            "expected staircase, got {:?}",
            s.shape().parts()
        )));
    }
    let n = s.n();
    let des = descent_set(s);
    let mut dots = BTreeSet::new();
    for i in 1..n {
        if des.contains(&i) {
            dots.insert(i);
        } else {
            dots.insert(n + i);
        }
    }
    if descent_set(&promote(s).0).contains(&1) {
        dots.insert(2 * n);
    } else {
        dots.insert(n);
    }
    DescentVector::new(2 * n, dots)
}

/// Extended descent vector of a rectangular or staircase tableau.
pub fn extended_descent(t: &Tableau) -> Result<DescentVector> {
    match t.shape().classify() {
        ShapeClass::Rectangle { .. } => extended_descent_rect(t),
        ShapeClass::Staircase { .. } => extended_descent_staircase(t),
        ShapeClass::General => Err(Error::UnsupportedShape(format!(
            "extended descents are defined for rectangles and staircases only, got {:?}",
            t.shape().parts()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{dual_evacuate, evacuate};
    use crate::shape::parse_shape;
    use crate::tableau::{enumerate_syt, parse_tableau};

    fn dots(v: &DescentVector) -> Vec<usize> {
        v.dots().iter().copied().collect()
    }

    #[test]
    fn descent_set_examples() {
        let t = parse_tableau("1 2 3/4 6 9/5 7/8").unwrap();
        assert_eq!(dots_of(descent_set(&t)), vec![3, 4, 6, 7]);
        let t = parse_tableau("1 2 3 4").unwrap();
        assert!(descent_set(&t).is_empty());
        let t = parse_tableau("1/2/3/4").unwrap();
        assert_eq!(dots_of(descent_set(&t)), vec![1, 2, 3]);
    }

    fn dots_of(s: BTreeSet<usize>) -> Vec<usize> {
        s.into_iter().collect()
    }

    #[test]
    fn extended_descent_rect_examples() {
        let r1 = parse_tableau("1 3 6/2 5 7/4 9 11/8 10 12").unwrap();
        assert_eq!(dots(&extended_descent_rect(&r1).unwrap()), vec![1, 3, 6, 7, 9, 11]);
        let r2 = parse_tableau("1 2 4/3 5 9/6 8 11/7 10 12").unwrap();
        assert_eq!(
            dots(&extended_descent_rect(&r2).unwrap()),
            vec![2, 4, 5, 6, 9, 11, 12]
        );
        let t = parse_tableau("1 5 9/2 6 10/3 7 11/4 8 12").unwrap();
        let v = extended_descent_rect(&t).unwrap();
        assert_eq!(dots(&v), vec![1, 2, 3, 5, 6, 7, 9, 10, 11]);
        assert_eq!(v.period(), 4);
        assert_eq!(v.to_string(), "xxx.xxx.xxx.");
    }

    #[test]
    fn extended_descent_staircase_examples() {
        let s1 = parse_tableau("1 4 5/2 6/3").unwrap();
        let v = extended_descent_staircase(&s1).unwrap();
        assert_eq!(dots(&v), vec![1, 2, 5, 6, 9, 10]);
        assert_eq!(v.to_string(), "xx..xx..xx..");
        let s2 = parse_tableau("1 2 5/3 6/4").unwrap();
        assert_eq!(
            dots(&extended_descent_staircase(&s2).unwrap()),
            vec![2, 3, 5, 7, 10, 12]
        );
        let full = parse_tableau("1 4 6/2 5/3").unwrap();
        let v = extended_descent_staircase(&full).unwrap();
        assert_eq!(dots(&v), vec![1, 2, 4, 6, 9, 11]);
        assert_eq!(v.period(), 12);
    }

    #[test]
    fn rejects_unsupported_shapes() {
        let t = parse_tableau("1 2 6/3 5/4").unwrap();
        assert!(extended_descent_rect(&t).is_err());
        let t = parse_tableau("1 2/3 4").unwrap();
        assert!(extended_descent_staircase(&t).is_err());
        let t = parse_tableau("1 2 3/4").unwrap();
        assert!(extended_descent(&t).is_err());
    }

    #[test]
    fn rotation_algebra() {
        let v = DescentVector::new(12, [1, 3, 6, 7, 9, 11].into()).unwrap();
        assert_eq!(dots(&v.rotate(1)), vec![2, 4, 7, 8, 10, 12]);
        assert_eq!(v.rotate(12), v);
        assert_eq!(v.rotate(5).rotate(-3), v.rotate(2));
        assert_eq!(v.complement().complement(), v);
    }

    #[test]
    fn period_examples() {
        let v = DescentVector::new(12, [1, 2, 3, 5, 6, 7, 9, 10, 11].into()).unwrap();
        assert_eq!(v.period(), 4);
        let v = DescentVector::new(12, [1, 3, 5, 7, 9, 11].into()).unwrap();
        assert_eq!(v.period(), 2);
        let v = DescentVector::new(12, [1, 2, 4, 6, 9, 11].into()).unwrap();
        assert_eq!(v.period(), 12);
    }

    #[test]
    fn flip_laws_golden() {
        // rectangle: Des_e(evacuate(R)) = flip about n
        let r3 = parse_tableau("1 3 5/2 4 6/7 9 10/8 11 12").unwrap();
        let v = extended_descent_rect(&r3).unwrap();
        assert_eq!(dots(&v), vec![1, 3, 5, 6, 7, 10, 12]);
        let ev = extended_descent_rect(&evacuate(&r3)).unwrap();
        assert_eq!(dots(&ev), vec![2, 5, 6, 7, 9, 11, 12]);
        assert_eq!(ev, v.flip_about(12));

        // staircase: evacuation flips about 2n, dual-evacuation about n
        let s3 = parse_tableau("1 2 4/3 6/5").unwrap();
        let v = extended_descent_staircase(&s3).unwrap();
        assert_eq!(dots(&v), vec![2, 4, 7, 9, 11, 12]);
        let ev = extended_descent_staircase(&evacuate(&s3)).unwrap();
        assert_eq!(dots(&ev), vec![1, 3, 5, 8, 10, 12]);
        assert_eq!(ev, v.flip_about(12));
        let dev = extended_descent_staircase(&dual_evacuate(&s3)).unwrap();
        assert_eq!(dots(&dev), vec![2, 4, 6, 7, 9, 11]);
        assert_eq!(dev, v.flip_about(6));
        assert_eq!(ev.complement(), dev);
    }

    #[test]
    fn staircase_complement_properties() {
        for s in enumerate_syt(&parse_shape("3,2,1").unwrap()).unwrap() {
            let v = extended_descent_staircase(&s).unwrap();
            let n = s.n();
            for i in 1..=n {
                assert_ne!(v.dots().contains(&i), v.dots().contains(&(n + i)));
            }
            let vt = extended_descent_staircase(&s.transpose()).unwrap();
            assert_eq!(v.complement(), vt);
        }
    }

    #[test]
    fn promotion_rotates_by_one() {
        for spec in ["2^2", "3^2", "3,2,1"] {
            for t in enumerate_syt(&parse_shape(spec).unwrap()).unwrap() {
                let v = extended_descent(&t).unwrap();
                let vp = extended_descent(&promote(&t).0).unwrap();
                assert_eq!(vp, v.rotate(1));
            }
        }
    }
}
