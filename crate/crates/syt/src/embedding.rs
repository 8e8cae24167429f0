//! The promotion- and evacuation-preserving embedding of staircase
//! tableaux into rectangular tableaux, its wide variant, and the
//! projection back to the pair `(S, evacuate(S))`.

use crate::dynamics::evacuate;
use crate::shape::Partition;
use crate::tableau::Tableau;
use crate::{Error, Result};

/// A rectangular tableau in the image of the embedding, together with the
/// staircase pair it encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedPair {
    /// The original staircase tableau `S` (northwest region).
    pub upper: Tableau,
    /// `evacuate(upper)`, encoded rotated and complemented in the
    /// southeast region.
    pub lower: Tableau,
    /// The full rectangle of shape `k^(k+1)`.
    pub rect: Tableau,
}

fn staircase_k(t: &Tableau) -> Result<usize> {
    let parts = t.shape().parts();
    let k = parts.len();
    if (0..k).all(|i| parts[i] == k - i) {
        Ok(k)
    } else {
        Err(Error::UnsupportedShape(format!(
            "expected staircase shape, got {:?}",
            parts
        )))
    }
}

/// Embed a staircase tableau of shape `sc_k` into the tall rectangle
/// `k^(k+1)` (k columns, k+1 rows): the staircase region keeps `S`, and
/// cell `(i,j)` with `i+j > k+1` holds `N+1 - evacuate(S)[k+2-i, k+1-j]`
/// with `N = (k+1)k`.
pub fn embed(s: &Tableau) -> Result<Tableau> {
    let k = staircase_k(s)?;
    let n_big = ((k + 1) * k) as u32;
    let ev = evacuate(s);
    let mut rows = vec![vec![0u32; k]; k + 1];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            // 1-based cell (i+1, j+1)
            let (ci, cj) = (i + 1, j + 1);
            *cell = if ci + cj <= k + 1 {
                s.entry(ci, cj)
            } else {
                n_big + 1 - ev.entry(k + 2 - ci, k + 1 - cj)
            };
        }
    }
    Tableau::new(rows)
}

/// The wide variant: embed into `(k+1)^k` (k rows, k+1 columns), with
/// `(i,j)` for `i+j > k+1` holding `N+1 - evacuate(S)[k+1-i, k+2-j]`.
pub fn embed_wide(s: &Tableau) -> Result<Tableau> {
    let k = staircase_k(s)?;
    let n_big = ((k + 1) * k) as u32;
    let ev = evacuate(s);
    let mut rows = vec![vec![0u32; k + 1]; k];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let (ci, cj) = (i + 1, j + 1);
            *cell = if ci + cj <= k + 1 {
                s.entry(ci, cj)
            } else {
                n_big + 1 - ev.entry(k + 1 - ci, k + 2 - cj)
            };
        }
    }
    Tableau::new(rows)
}

/// Split a `k^(k+1)` rectangle into its staircase pair. Returns `None`
/// when the rectangle is not in the image of the embedding (the decoded
/// lower staircase differs from `evacuate(upper)`).
pub fn project(r: &Tableau) -> Result<Option<EmbeddedPair>> {
    let parts = r.shape().parts();
    let k = parts[0];
    if parts.len() != k + 1 || parts.iter().any(|&p| p != k) {
        return Err(Error::UnsupportedShape(format!(
            "expected rectangle k^(k+1), got {:?}",
            parts
        )));
    }
    let n_big = ((k + 1) * k) as u32;
    let upper_rows: Vec<Vec<u32>> = (1..=k)
        .map(|i| (1..=(k + 1 - i)).map(|j| r.entry(i, j)).collect())
        .collect();
    let lower_rows: Vec<Vec<u32>> = (1..=k)
        .map(|a| {
            // lower[a,b] = N+1 - rect[k+2-a, k+1-b]
            (1..=(k + 1 - a))
                .map(|b| n_big + 1 - r.entry(k + 2 - a, k + 1 - b))
                .collect()
        })
        .collect();
    // a rectangle outside the image may decode to invalid fillings;
    // that means "not in image", not an error
    let (upper, lower) = match (Tableau::new(upper_rows), Tableau::new(lower_rows)) {
        (Ok(u), Ok(l)) => (u, l),
        _ => return Ok(None),
    };
    if lower != evacuate(&upper) {
        return Ok(None);
    }
    Ok(Some(EmbeddedPair {
        upper,
        lower,
        rect: r.clone(),
    }))
}

/// Staircase shape `sc_k`, for callers building test universes.
pub fn staircase_shape(k: usize) -> Partition {
    Partition::staircase(k).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{dual_evacuate, dual_promote, promote};
    use crate::shape::parse_shape;
    use crate::tableau::{enumerate_syt, parse_tableau, serialize_tableau};

    #[test]
    fn embed_golden() {
        let s = parse_tableau("1 2 6/3 5/4").unwrap();
        assert_eq!(
            serialize_tableau(&embed(&s).unwrap()),
            "1 2 6/3 5 10/4 7 11/8 9 12"
        );
    }

    #[test]
    fn embed_k1() {
        let s = parse_tableau("1").unwrap();
        assert_eq!(serialize_tableau(&embed(&s).unwrap()), "1/2");
    }

    #[test]
    fn embed_keeps_upper_region() {
        for s in enumerate_syt(&parse_shape("3,2,1").unwrap()).unwrap() {
            let r = embed(&s).unwrap();
            for i in 1..=3usize {
                for j in 1..=(4 - i) {
                    assert_eq!(r.entry(i, j), s.entry(i, j));
                }
            }
        }
    }

    #[test]
    fn embed_wide_golden() {
        let s = parse_tableau("1 2 6/3 5/4").unwrap();
        assert_eq!(
            serialize_tableau(&embed_wide(&s).unwrap()),
            "1 2 6 10/3 5 7 11/4 8 9 12"
        );
        // standardness is checked by the Tableau constructor
        for s in enumerate_syt(&parse_shape("3,2,1").unwrap()).unwrap() {
            embed_wide(&s).unwrap();
        }
    }

    #[test]
    fn embed_rejects_non_staircase() {
        let t = parse_tableau("1 2/3 4").unwrap();
        assert!(embed(&t).is_err());
        assert!(embed_wide(&t).is_err());
    }

    #[test]
    fn project_golden() {
        let r = parse_tableau("1 2 6/3 5 10/4 7 11/8 9 12").unwrap();
        let pair = project(&r).unwrap().unwrap();
        assert_eq!(serialize_tableau(&pair.upper), "1 2 6/3 5/4");
        assert_eq!(serialize_tableau(&pair.lower), "1 4 5/2 6/3");
    }

    #[test]
    fn project_is_left_inverse_and_counts_image() {
        let staircase = parse_shape("3,2,1").unwrap();
        for s in enumerate_syt(&staircase).unwrap() {
            let pair = project(&embed(&s).unwrap()).unwrap().unwrap();
            assert_eq!(pair.upper, s);
        }
        let mut in_image = 0;
        for r in enumerate_syt(&parse_shape("3^4").unwrap()).unwrap() {
            if project(&r).unwrap().is_some() {
                in_image += 1;
            }
        }
        assert_eq!(in_image, 16);
    }

    #[test]
    fn project_rejects_wrong_shape() {
        let t = parse_tableau("1 2/3 4").unwrap();
        assert!(project(&t).is_err());
    }

    #[test]
    fn embedding_commutes_with_promotion_and_evacuation() {
        for k in 2..=3usize {
            for s in enumerate_syt(&staircase_shape(k)).unwrap() {
                let r = embed(&s).unwrap();
                assert_eq!(embed(&promote(&s).0).unwrap(), promote(&r).0);
                assert_eq!(embed(&evacuate(&s)).unwrap(), evacuate(&r));
                assert_eq!(embed(&dual_promote(&s).0).unwrap(), dual_promote(&r).0);
                assert_eq!(embed(&evacuate(&s)).unwrap(), dual_evacuate(&r));
                assert_eq!(
                    embed(&dual_evacuate(&s)).unwrap(),
                    evacuate(&embed(&s.transpose()).unwrap())
                );
            }
        }
    }

    #[test]
    fn wide_embedding_commutes_with_promotion() {
        for s in enumerate_syt(&parse_shape("3,2,1").unwrap()).unwrap() {
            assert_eq!(embed_wide(&promote(&s).0).unwrap(), promote(&embed_wide(&s).unwrap()).0);
        }
    }

    #[test]
    fn promotion_path_passes_through_upper_max() {
        // the promotion path of embed(S) passes through the cell of
        // n = (k+1)k/2, the largest entry of the upper region
        for k in 2..=3usize {
            let n = (k + 1) * k / 2;
            for s in enumerate_syt(&staircase_shape(k)).unwrap() {
                let r = embed(&s).unwrap();
                let cell = r.position_of(n as u32);
                let (_, path) = promote(&r);
                assert!(path.cells().contains(&cell));
            }
        }
    }
}
