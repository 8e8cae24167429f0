//! Jeu-de-taquin sliding and the four tableau operators: promotion,
//! dual-promotion, evacuation, and dual-evacuation, with explicit sliding
//! paths and the path-dominance comparison.

use crate::shape::ShapeClass;
use crate::tableau::Tableau;
use crate::{Error, Result};

/// The sequence of positions the empty box moves along during (dual-)
/// sliding. Cells are 1-based `(row, col)`; consecutive cells differ by a
/// single north/west step (promotion path) or south/east step (dual path).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPath {
    cells: Vec<(usize, usize)>,
}

impl CellPath {
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// True if the final step of the path moves north (row decreases).
    /// Single-cell paths have no final step and count as horizontal.
    pub fn ends_vertically(&self) -> bool {
        let k = self.cells.len();
        k >= 2 && self.cells[k - 1].0 != self.cells[k - 2].0
    }
}

impl std::fmt::Display for CellPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self
            .cells
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Result of comparing a dual-promotion path against a promotion path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathRelation {
    WeaklyNortheast,
    WeaklySouthwest,
    /// Both weak relations hold (e.g. identical single-cell paths).
    Both,
    Incomparable,
}

// Skew working grid for the evacuation algorithms: None marks cells
// removed from the current shape.
type SkewGrid = Vec<Vec<Option<u32>>>;

// Slide the empty box at (i, j) northwest: repeatedly swap it with the
// larger of the entries above and to the left (among cells still present),
// recording each hole position. Ties are impossible in a standard tableau.
fn slide_nw(grid: &mut SkewGrid, mut i: usize, mut j: usize) -> Vec<(usize, usize)> {
    let mut path = vec![(i + 1, j + 1)];
    loop {
        let up = if i > 0 { grid[i - 1][j] } else { None };
        let left = if j > 0 { grid[i][j - 1] } else { None };
        let (ni, nj) = match (up, left) {
            (None, None) => break,
            (Some(_), None) => (i - 1, j),
            (None, Some(_)) => (i, j - 1),
            (Some(u), Some(l)) => {
                assert_ne!(u, l, "tie in standard tableau sliding");
                if u > l {
                    (i - 1, j)
                } else {
                    (i, j - 1)
                }
            }
        };
        grid[i][j] = grid[ni][nj];
        grid[ni][nj] = None;
        (i, j) = (ni, nj);
        path.push((i + 1, j + 1));
    }
    path
}

// Dual-sliding: move the empty box southeast, swapping with the smaller of
// the entries below and to the right.
fn slide_se(grid: &mut SkewGrid, mut i: usize, mut j: usize) -> Vec<(usize, usize)> {
    let mut path = vec![(i + 1, j + 1)];
    loop {
        let down = if i + 1 < grid.len() && j < grid[i + 1].len() {
            grid[i + 1][j]
        } else {
            None
        };
        let right = if j + 1 < grid[i].len() { grid[i][j + 1] } else { None };
        let (ni, nj) = match (down, right) {
            (None, None) => break,
            (Some(_), None) => (i + 1, j),
            (None, Some(_)) => (i, j + 1),
            (Some(d), Some(r)) => {
                assert_ne!(d, r, "tie in standard tableau dual-sliding");
                if d < r {
                    (i + 1, j)
                } else {
                    (i, j + 1)
                }
            }
        };
        grid[i][j] = grid[ni][nj];
        grid[ni][nj] = None;
        (i, j) = (ni, nj);
        path.push((i + 1, j + 1));
    }
    path
}

fn to_skew(t: &Tableau) -> SkewGrid {
    t.rows()
        .iter()
        .map(|row| row.iter().map(|&e| Some(e)).collect())
        .collect()
}

fn from_grid(shape: &crate::Partition, grid: Vec<Vec<u32>>) -> Tableau {
    let t = Tableau::new(grid).expect("operator produced a non-standard tableau");
    debug_assert_eq!(t.shape(), shape);
    t
}

/// Promotion: remove `n`, slide the hole northwest to `(1,1)`, place `0`
/// there, and increment every entry. Returns the new tableau and the
/// promotion path (from the cell that held `n` to `(1,1)`).
pub fn promote(t: &Tableau) -> (Tableau, CellPath) {
    let n = t.n() as u32;
    let (i, j) = t.position_of(n);
    let mut grid = to_skew(t);
    grid[i - 1][j - 1] = None;
    let path = slide_nw(&mut grid, i - 1, j - 1);
    let (ti, tj) = *path.last().unwrap();
    grid[ti - 1][tj - 1] = Some(0);
    let rows = grid
        .iter()
        .map(|row| row.iter().map(|e| e.unwrap() + 1).collect())
        .collect();
    (from_grid(t.shape(), rows), CellPath { cells: path })
}

/// Dual-promotion (the inverse of promotion): remove `1`, slide the hole
/// southeast to an outside corner, place `n+1`, and decrement.
pub fn dual_promote(t: &Tableau) -> (Tableau, CellPath) {
    let n = t.n() as u32;
    let (i, j) = t.position_of(1);
    debug_assert_eq!((i, j), (1, 1));
    let mut grid = to_skew(t);
    grid[i - 1][j - 1] = None;
    let path = slide_se(&mut grid, i - 1, j - 1);
    let (ti, tj) = *path.last().unwrap();
    grid[ti - 1][tj - 1] = Some(n + 1);
    let rows = grid
        .iter()
        .map(|row| row.iter().map(|e| e.unwrap() - 1).collect())
        .collect();
    (from_grid(t.shape(), rows), CellPath { cells: path })
}

/// Evacuation: iterate sliding `n` times, each round removing the current
/// maximum, sliding northwest, and recording the terminal inside corner.
pub fn evacuate(t: &Tableau) -> Tableau {
    let n = t.n() as u32;
    let mut work = to_skew(t);
    let mut out: Vec<Vec<u32>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    for k in 1..=n {
        let mut pos = None;
        let mut max = 0;
        for (i, row) in work.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if let Some(e) = e {
                    if *e > max {
                        max = *e;
                        pos = Some((i, j));
                    }
                }
            }
        }
        let (i, j) = pos.expect("working tableau exhausted early");
        work[i][j] = None;
        let path = slide_nw(&mut work, i, j);
        let (ti, tj) = *path.last().unwrap();
        out[ti - 1][tj - 1] = k;
        work[ti - 1][tj - 1] = None;
    }
    from_grid(t.shape(), out)
}

/// Dual-evacuation: iterate dual-sliding, round `k` removing the current
/// minimum and writing `n+1-k` at the terminal outside corner.
pub fn dual_evacuate(t: &Tableau) -> Tableau {
    let n = t.n() as u32;
    let mut work = to_skew(t);
    let mut out: Vec<Vec<u32>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    for k in 1..=n {
        let mut pos = None;
        let mut min = u32::MAX;
        for (i, row) in work.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if let Some(e) = e {
                    if *e < min {
                        min = *e;
                        pos = Some((i, j));
                    }
                }
            }
        }
        let (i, j) = pos.expect("working tableau exhausted early");
        work[i][j] = None;
        let path = slide_se(&mut work, i, j);
        let (ti, tj) = *path.last().unwrap();
        out[ti - 1][tj - 1] = n + 1 - k;
        work[ti - 1][tj - 1] = None;
    }
    from_grid(t.shape(), out)
}

/// Operators accepted by [`apply_power`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerOp {
    Promote,
    DualPromote,
}

/// `k`-fold application of promotion or dual-promotion; negative `k` means
/// the inverse. The exponent is reduced modulo the proven operator order
/// (`n` on rectangles, `2n` on staircases); general shapes iterate
/// literally.
pub fn apply_power(t: &Tableau, op: PowerOp, k: i64) -> Tableau {
    let n = t.n() as i64;
    let order: Option<i64> = match t.shape().classify() {
        ShapeClass::Rectangle { .. } => Some(n),
        ShapeClass::Staircase { .. } => Some(2 * n),
        ShapeClass::General => None,
    };
    // normalize to promotion steps: dual-promotion is the inverse
    let steps = match op {
        PowerOp::Promote => k,
        PowerOp::DualPromote => -k,
    };
    let steps = match order {
        Some(ord) => steps.rem_euclid(ord),
        None => steps,
    };
    let mut cur = t.clone();
    if steps >= 0 {
        for _ in 0..steps {
            cur = promote(&cur).0;
        }
    } else {
        for _ in 0..(-steps) {
            cur = dual_promote(&cur).0;
        }
    }
    cur
}

/// Cell of the maximal entry `n` (always an outside corner). 1-based.
pub fn corner_of_max(t: &Tableau) -> (usize, usize) {
    t.position_of(t.n() as u32)
}

/// Compare a promotion path `p` and a dual-promotion path `d` of the same
/// tableau: `d` is weakly northeast of `p` when no cell of `d` lies
/// strictly southwest of a cell of `p` (strictly larger row and strictly
/// smaller column), and symmetrically for weakly southwest.
pub fn compare_paths(p: &CellPath, d: &CellPath) -> Result<PathRelation> {
    if p.cells.is_empty() || d.cells.is_empty() {
        return Err(Error::ShapeMismatch("empty path".into()));
    }
    // "d weakly northeast of p" means no cell of d lies strictly
    // southwest (larger row AND smaller column) of a cell of p,
    // and symmetrically for the southwest relation
    let mut ne = true;
    let mut sw = true;
    for &(pi, pj) in &p.cells {
        for &(di, dj) in &d.cells {
            if di > pi && dj < pj {
                ne = false;
            }
            if di < pi && dj > pj {
                sw = false;
            }
        }
    }
    Ok(match (ne, sw) {
        (true, true) => PathRelation::Both,
        (true, false) => PathRelation::WeaklyNortheast,
        (false, true) => PathRelation::WeaklySouthwest,
        (false, false) => PathRelation::Incomparable,
    })
}
