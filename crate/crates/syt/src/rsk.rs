//! Row-insertion RSK and the reverse-complement involution on
//! permutations, giving an independent route to dual-evacuation.

use crate::tableau::Tableau;
use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len() + 1];
        for &w in &images {
            if w == 0 || w > n || seen[w as usize] {
                return Err(Error::MalformedTableau(format!(
                    "not a permutation of 1..{n}: {images:?}"
                )));
            }
            seen[w as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Left descents: `i` such that `i` appears to the right of `i+1`.
    pub fn left_descents(&self) -> std::collections::BTreeSet<usize> {
        let n = self.images.len();
        let mut pos = vec![0usize; n + 1];
        for (p, &w) in self.images.iter().enumerate() {
            pos[w as usize] = p;
        }
        (1..n).filter(|&i| pos[i] > pos[i + 1]).collect()
    }
}

/// Parse space-separated one-line notation, e.g. `3 5 4 7 1 2 6`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let images: Result<Vec<u32>> = text
        .split_whitespace()
        .map(|e| {
            e.parse::<u32>()
                .map_err(|_| Error::MalformedTableau(format!("bad entry {e:?}")))
        })
        .collect();
    Permutation::new(images?)
}

/// Row-insertion RSK: returns the insertion tableau `P` and the recording
/// tableau `Q`.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &x) in w.images.iter().enumerate() {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            // bump the leftmost entry strictly greater than carry
            match p[row].iter().position(|&e| e > carry) {
                Some(k) => {
                    std::mem::swap(&mut p[row][k], &mut carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    (
        Tableau::new(p).expect("RSK produced a non-standard P"),
        Tableau::new(q).expect("RSK produced a non-standard Q"),
    )
}

/// The reversed complement `w♯ = (n+1-w_n) ... (n+1-w_1)`.
pub fn sharp(w: &Permutation) -> Permutation {
    let n = w.images.len() as u32;
    Permutation {
        images: w.images.iter().rev().map(|&x| n + 1 - x).collect(),
    }
}

/// Column reading word: columns left to right, each read bottom to top.
/// Its insertion tableau is the tableau itself.
pub fn column_reading_word(t: &Tableau) -> Permutation {
    let cols = t.shape().parts()[0];
    let mut images = Vec::with_capacity(t.n());
    for j in 0..cols {
        for i in (0..t.shape().rows()).rev() {
            if t.shape().contains(i, j) {
                images.push(t.rows()[i][j]);
            }
        }
    }
    Permutation { images }
}

/// Row reading word read bottom to top (rows last to first, each left to
/// right). Also inserts to the tableau itself.
pub fn row_reading_word(t: &Tableau) -> Permutation {
    let images = t.rows().iter().rev().flatten().copied().collect();
    Permutation { images }
}

/// Dual-evacuation via RSK: insert a witness word for `t`, apply `sharp`,
/// and re-insert. Independent of the sliding implementation.
pub fn dual_evacuate_via_rsk(t: &Tableau) -> Tableau {
    let w = column_reading_word(t);
    debug_assert_eq!(rsk(&w).0, *t);
    rsk(&sharp(&w)).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{all_partitions, parse_shape};
    use crate::tableau::{enumerate_syt, parse_tableau, serialize_tableau};

    fn all_permutations(n: u32) -> Vec<Permutation> {
        fn rec(rest: &mut Vec<u32>, acc: &mut Vec<u32>, out: &mut Vec<Permutation>) {
            if rest.is_empty() {
                out.push(Permutation { images: acc.clone() });
                return;
            }
            for k in 0..rest.len() {
                let x = rest.remove(k);
                acc.push(x);
                rec(rest, acc, out);
                acc.pop();
                rest.insert(k, x);
            }
        }
        let mut out = Vec::new();
        rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn rsk_identity_and_inversion() {
        let (p, q) = rsk(&parse_permutation("1 2 3").unwrap());
        assert_eq!(serialize_tableau(&p), "1 2 3");
        assert_eq!(serialize_tableau(&q), "1 2 3");
        let (p, q) = rsk(&parse_permutation("2 1").unwrap());
        assert_eq!(serialize_tableau(&p), "1/2");
        assert_eq!(serialize_tableau(&q), "1/2");
    }

    #[test]
    fn rsk_is_injective_on_s4() {
        let mut images = std::collections::HashSet::new();
        for w in all_permutations(4) {
            let (p, q) = rsk(&w);
            assert_eq!(p.shape(), q.shape());
            assert!(images.insert((p, q)), "collision for {:?}", w.images());
        }
        assert_eq!(images.len(), 24);
    }

    #[test]
    fn sharp_golden() {
        let w = parse_permutation("3 5 4 7 1 2 6").unwrap();
        assert_eq!(sharp(&w).images(), &[2, 6, 7, 1, 4, 3, 5]);
        for w in all_permutations(5) {
            assert_eq!(sharp(&sharp(&w)), w);
        }
        let id = parse_permutation("1 2 3 4").unwrap();
        assert_eq!(sharp(&id), id);
    }

    #[test]
    fn reading_words_insert_to_self() {
        for n in 1..=8usize {
            for shape in all_partitions(n) {
                for t in enumerate_syt(&shape).unwrap() {
                    assert_eq!(rsk(&column_reading_word(&t)).0, t);
                    assert_eq!(rsk(&row_reading_word(&t)).0, t);
                }
            }
        }
    }

    #[test]
    fn dual_evacuation_oracle_golden() {
        let t = parse_tableau("1 3 8/2 4/5 9/6 10/7").unwrap();
        assert_eq!(
            serialize_tableau(&dual_evacuate_via_rsk(&t)),
            "1 4 9/2 5/3 6/7 10/8"
        );
        let t = parse_tableau("1").unwrap();
        assert_eq!(dual_evacuate_via_rsk(&t), t);
    }

    #[test]
    fn oracle_agrees_with_sliding() {
        for spec in ["3,2,1", "2,2,2"] {
            for t in enumerate_syt(&parse_shape(spec).unwrap()).unwrap() {
                assert_eq!(dual_evacuate_via_rsk(&t), crate::dynamics::dual_evacuate(&t));
            }
        }
    }

    #[test]
    fn left_descents_match_tableau_descents() {
        for n in 1..=7usize {
            for shape in all_partitions(n) {
                for t in enumerate_syt(&shape).unwrap() {
                    let des = crate::descent::descent_set(&t);
                    assert_eq!(column_reading_word(&t).left_descents(), des);
                    assert_eq!(row_reading_word(&t).left_descents(), des);
                }
            }
        }
    }
}
