//! Named verification checks over exhaustive small universes: operator
//! identities, embedding theorems, descent-vector laws, path dominance,
//! and cyclic-sieving certificates. Backs the `syt verify` command and
//! the acceptance suite.

use crate::csp::{
    canonical_csp_polynomial, csp_shifts, cycle_structure, fixed_point_count, is_csp_polynomial,
    maj, q_hook_length, statistic_generating_function, verify_cyclotomic_product, ActionOp,
};
use crate::descent::{descent_set, extended_descent, extended_descent_staircase};
use crate::dynamics::{
    apply_power, compare_paths, corner_of_max, dual_evacuate, dual_promote, evacuate, promote,
    PathRelation, PowerOp,
};
use crate::embedding::embed;
use crate::rsk::dual_evacuate_via_rsk;
use crate::shape::{all_partitions, Partition};
use crate::tableau::{enumerate_syt, parse_tableau, serialize_tableau, Tableau};
use crate::Result;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

fn check(name: &str, pass: bool) -> Check {
    Check {
        name: name.to_string(),
        pass,
    }
}

fn shapes_up_to(max_cells: usize) -> Vec<Partition> {
    (1..=max_cells).flat_map(all_partitions).collect()
}

fn rectangles() -> Vec<Partition> {
    [(2, 2), (3, 2), (2, 3), (3, 3), (3, 4)]
        .iter()
        .map(|&(c, r)| Partition::rectangle(c, r).unwrap())
        .collect()
}

fn staircases() -> Vec<Partition> {
    (2..=4).map(|k| Partition::staircase(k).unwrap()).collect()
}

fn for_all_syt(shapes: &[Partition], mut f: impl FnMut(&Tableau) -> bool) -> Result<bool> {
    for shape in shapes {
        for t in enumerate_syt(shape)? {
            if !f(&t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The worked examples reproduced byte-exactly.
pub fn golden_examples() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let t = parse_tableau("1 4 5/2 6 8/3 7 13/9 10 15/11 14/12")?;
    let (p, path) = promote(&t);
    out.push(check(
        "promotion worked example (tableau and path)",
        serialize_tableau(&p) == "1 2 6/3 5 7/4 8 9/10 11 14/12 15/13"
            && path.to_string() == "(4,3) (3,3) (2,3) (2,2) (1,2) (1,1)",
    ));
    let (d, dpath) = dual_promote(&t);
    out.push(check(
        "dual-promotion worked example (tableau and path)",
        serialize_tableau(&d) == "1 3 4/2 5 7/6 9 12/8 13 14/10 15/11"
            && dpath.to_string() == "(1,1) (2,1) (3,1) (3,2) (4,2) (5,2)",
    ));

    let t = parse_tableau("1 3 8/2 4/5 9/6 10/7")?;
    out.push(check(
        "evacuation worked example",
        serialize_tableau(&evacuate(&t)) == "1 3 8/2 5/4 6/7 10/9",
    ));
    out.push(check(
        "dual-evacuation worked example",
        serialize_tableau(&dual_evacuate(&t)) == "1 4 9/2 5/3 6/7 10/8",
    ));

    let s = parse_tableau("1 2 6/3 5/4")?;
    out.push(check(
        "embedding worked example",
        serialize_tableau(&embed(&s)?) == "1 2 6/3 5 10/4 7 11/8 9 12",
    ));
    out.push(check(
        "wide embedding worked example",
        serialize_tableau(&crate::embedding::embed_wide(&s)?) == "1 2 6 10/3 5 7 11/4 8 9 12",
    ));

    let vectors: &[(&str, &str)] = &[
        ("1 3 6/2 5 7/4 9 11/8 10 12", "x.x..xx.x.x."),
        ("1 2 4/3 5 9/6 8 11/7 10 12", ".x.xxx..x.xx"),
        ("1 3 5/2 4 6/7 9 10/8 11 12", "x.x.xxx..x.x"),
        ("1 2 5/3 4 6/7 9 11/8 10 12", ".x..xxx.x.xx"), // evacuation of the previous
        ("1 4 5/2 6/3", "xx..xx..xx.."),
        ("1 2 5/3 6/4", ".xx.x.x..x.x"),
        ("1 2 4/3 6/5", ".x.x..x.x.xx"),
        ("1 3 5/2 4/6", "x.x.x..x.x.x"), // evacuation of the previous
        ("1 2 6/3 4/5", ".x.x.xx.x.x."), // dual-evacuation of the same
    ];
    let mut all = true;
    for (text, expected) in vectors {
        let t = parse_tableau(text)?;
        let v = extended_descent(&t)?;
        if v.to_string() != *expected {
            all = false;
        }
    }
    out.push(check("descent vector worked examples", all));
    Ok(out)
}

/// Operator identities over every shape with at most `max_cells` cells,
/// plus the listed rectangles and staircases.
pub fn operator_identities(max_cells: usize) -> Result<Vec<Check>> {
    let small = shapes_up_to(max_cells.min(8));
    let mut out = Vec::new();

    out.push(check(
        "evacuation and dual-evacuation are involutions",
        for_all_syt(&small, |t| {
            evacuate(&evacuate(t)) == *t && dual_evacuate(&dual_evacuate(t)) == *t
        })?,
    ));
    out.push(check(
        "dual-promotion inverts promotion",
        for_all_syt(&shapes_up_to(max_cells.min(10)), |t| {
            dual_promote(&promote(t).0).0 == *t && promote(&dual_promote(t).0).0 == *t
        })?,
    ));
    out.push(check(
        "evacuations intertwine promotion with its inverse",
        for_all_syt(&small, |t| {
            evacuate(&promote(t).0) == dual_promote(&evacuate(t)).0
                && dual_evacuate(&promote(t).0) == dual_promote(&dual_evacuate(t)).0
        })?,
    ));
    out.push(check(
        "evacuation-then-dual-evacuation equals n-fold promotion",
        for_all_syt(&small, |t| {
            dual_evacuate(&evacuate(t)) == apply_power(t, PowerOp::Promote, t.n() as i64)
        })?,
    ));
    out.push(check(
        "promotion has order n on rectangles",
        for_all_syt(&rectangles(), |t| {
            apply_power(t, PowerOp::Promote, t.n() as i64) == *t
        })?,
    ));
    out.push(check(
        "evacuation equals dual-evacuation on rectangles",
        for_all_syt(&rectangles(), |t| evacuate(t) == dual_evacuate(t))?,
    ));
    out.push(check(
        "n-fold promotion transposes staircases (order 2n)",
        for_all_syt(&staircases(), |t| {
            let n = t.n() as i64;
            apply_power(t, PowerOp::Promote, n) == t.transpose()
                && apply_power(t, PowerOp::Promote, 2 * n) == *t
        })?,
    ));
    out.push(check(
        "dual-evacuation is transposed evacuation on staircases",
        for_all_syt(&staircases(), |t| dual_evacuate(t) == evacuate(t).transpose())?,
    ));
    Ok(out)
}

/// The embedding theorems over staircases `sc_2..sc_4`.
pub fn embedding_theorems() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    out.push(check(
        "embedding commutes with promotion",
        for_all_syt(&staircases(), |s| {
            embed(&promote(s).0).unwrap() == promote(&embed(s).unwrap()).0
        })?,
    ));
    out.push(check(
        "embedding commutes with evacuation",
        for_all_syt(&staircases(), |s| {
            embed(&evacuate(s)).unwrap() == evacuate(&embed(s).unwrap())
        })?,
    ));
    out.push(check(
        "embedding commutes with dual-promotion",
        for_all_syt(&staircases(), |s| {
            embed(&dual_promote(s).0).unwrap() == dual_promote(&embed(s).unwrap()).0
        })?,
    ));
    out.push(check(
        "embedded evacuation equals rectangular dual-evacuation",
        for_all_syt(&staircases(), |s| {
            embed(&evacuate(s)).unwrap() == dual_evacuate(&embed(s).unwrap())
        })?,
    ));
    out.push(check(
        "embedded dual-evacuation equals evacuation of embedded transpose",
        for_all_syt(&staircases(), |s| {
            embed(&dual_evacuate(s)).unwrap() == evacuate(&embed(&s.transpose()).unwrap())
        })?,
    ));
    out.push(check(
        "promotion path of the embedding passes through the staircase maximum",
        for_all_syt(&staircases(), |s| {
            let r = embed(s).unwrap();
            let cell = r.position_of(s.n() as u32);
            promote(&r).1.cells().contains(&cell)
        })?,
    ));
    let mut injective = true;
    for shape in staircases() {
        let mut images = std::collections::HashSet::new();
        for s in enumerate_syt(&shape)? {
            if !images.insert(embed(&s)?) {
                injective = false;
            }
        }
    }
    out.push(check("embedding is injective", injective));
    Ok(out)
}

/// Descent-vector laws on rectangles and staircases.
pub fn descent_vector_laws() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let both: Vec<Partition> = rectangles().into_iter().chain(staircases()).collect();

    out.push(check(
        "promotion rotates the descent vector right by one",
        for_all_syt(&both, |t| {
            extended_descent(&promote(t).0).unwrap() == extended_descent(t).unwrap().rotate(1)
        })?,
    ));
    out.push(check(
        "evacuation flips the rectangle descent vector about n",
        for_all_syt(&rectangles(), |r| {
            let n = r.n() as i64;
            extended_descent(&evacuate(r)).unwrap() == extended_descent(r).unwrap().flip_about(n)
        })?,
    ));
    out.push(check(
        "evacuation flips the staircase descent vector about 2n",
        for_all_syt(&staircases(), |s| {
            let n = s.n() as i64;
            extended_descent(&evacuate(s)).unwrap()
                == extended_descent(s).unwrap().flip_about(2 * n)
        })?,
    ));
    out.push(check(
        "dual-evacuation flips the staircase descent vector about n",
        for_all_syt(&staircases(), |s| {
            let n = s.n() as i64;
            extended_descent(&dual_evacuate(s)).unwrap()
                == extended_descent(s).unwrap().flip_about(n)
        })?,
    ));
    out.push(check(
        "staircase descent vector equals that of its embedding",
        for_all_syt(&staircases(), |s| {
            extended_descent_staircase(s).unwrap()
                == extended_descent(&embed(s).unwrap()).unwrap()
        })?,
    ));
    out.push(check(
        "staircase descent vector halves are complementary",
        for_all_syt(&staircases(), |s| {
            let v = extended_descent_staircase(s).unwrap();
            let n = s.n();
            (1..=n).all(|i| v.dots().contains(&i) != v.dots().contains(&(n + i)))
        })?,
    ));
    out.push(check(
        "half rotation complements the staircase vector (transpose law)",
        for_all_syt(&staircases(), |s| {
            let v = extended_descent_staircase(s).unwrap();
            v.rotate(s.n() as i64) == v.complement()
                && v.complement() == extended_descent_staircase(&s.transpose()).unwrap()
        })?,
    ));
    out.push(check(
        "corner displacement under dual-evacuation follows the final path move",
        for_all_syt(&staircases(), |s| {
            let (_, path) = promote(s);
            let (ri, rj) = corner_of_max(s);
            let (di, dj) = corner_of_max(&dual_evacuate(s));
            if path.ends_vertically() {
                di < ri && dj > rj
            } else {
                di > ri && dj < rj
            }
        })?,
    ));
    out.push(check(
        "vertical-ending promotion path matches a descent at 1 after promotion",
        for_all_syt(&both, |t| {
            let (pt, path) = promote(t);
            path.ends_vertically() == descent_set(&pt).contains(&1)
        })?,
    ));
    out.push(check(
        "descent vector period divides the promotion orbit size",
        {
            let mut ok = true;
            for shape in &both {
                let syt = enumerate_syt(shape)?;
                for t in &syt {
                    let mut orbit = 1usize;
                    let mut cur = promote(t).0;
                    while cur != *t {
                        cur = promote(&cur).0;
                        orbit += 1;
                    }
                    if !orbit.is_multiple_of(extended_descent(t)?.period()) {
                        ok = false;
                    }
                }
            }
            ok
        },
    ));
    out.push(check(
        "no staircase descent vector has period dividing n",
        for_all_syt(&staircases(), |s| {
            s.n() % extended_descent_staircase(s).unwrap().period() != 0
        })?,
    ));
    Ok(out)
}

/// Path dominance on staircases and every shape with at most `max_cells`
/// cells: the dual path lies weakly northeast of the promotion path when
/// the latter ends vertically, weakly southwest otherwise.
pub fn path_dominance(max_cells: usize) -> Result<Vec<Check>> {
    let mut shapes = staircases();
    shapes.extend(shapes_up_to(max_cells.min(8)));
    let ok = for_all_syt(&shapes, |t| {
        let (_, p) = promote(t);
        let (_, d) = dual_promote(t);
        let rel = compare_paths(&p, &d).unwrap();
        if p.ends_vertically() {
            matches!(rel, PathRelation::WeaklyNortheast | PathRelation::Both)
        } else {
            matches!(rel, PathRelation::WeaklySouthwest | PathRelation::Both)
        }
    })?;
    Ok(vec![check(
        "dual path dominance against the promotion path",
        ok,
    )])
}

/// Oracle equivalences: RSK-based dual-evacuation and fixed-point counts.
pub fn oracle_equivalences(max_cells: usize) -> Result<Vec<Check>> {
    let small = shapes_up_to(max_cells.min(8));
    let mut out = Vec::new();
    out.push(check(
        "RSK route agrees with sliding dual-evacuation",
        for_all_syt(&small, |t| dual_evacuate_via_rsk(t) == dual_evacuate(t))?,
    ));

    let mut fp_ok = true;
    for shape in shapes_up_to(max_cells.min(7)) {
        let syt = enumerate_syt(&shape)?;
        for op in [ActionOp::Promote, ActionOp::Evacuate, ActionOp::DualEvacuate] {
            let cs = cycle_structure(&shape, op)?;
            for k in 0..=(cs.order as i64) {
                let direct = syt
                    .iter()
                    .filter(|t| {
                        let mut cur = (*t).clone();
                        for _ in 0..k {
                            cur = match op {
                                ActionOp::Promote => promote(&cur).0,
                                ActionOp::Evacuate => evacuate(&cur),
                                ActionOp::DualEvacuate => dual_evacuate(&cur),
                            };
                        }
                        cur == **t
                    })
                    .count();
                if fixed_point_count(&cs, k) != direct {
                    fp_ok = false;
                }
            }
        }
    }
    out.push(check(
        "fixed-point counts agree with direct iteration",
        fp_ok,
    ));
    Ok(out)
}

/// Cycle-structure corollaries and cyclotomic certificates.
pub fn cycle_and_csp_checks(include_k5: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    for (k, name) in [(3usize, "sc_3"), (4, "sc_4")] {
        let shape = Partition::staircase(k)?;
        let cs = cycle_structure(&shape, ActionOp::Promote)?;
        let n_big = cs.order;
        out.push(check(
            &format!("{name}: every orbit divides 2n and none divides n"),
            cs.multiplicities
                .keys()
                .all(|&c| n_big % c == 0 && (n_big / 2) % c != 0),
        ));
        // column filling: 1..n down columns, left to right
        let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        let mut v = 0u32;
        for (j, &col_len) in shape.conjugate().parts().iter().enumerate() {
            for row in rows.iter_mut().take(col_len) {
                v += 1;
                row[j] = v;
            }
        }
        let col_fill = Tableau::new(rows)?;
        let mut orbit = 1usize;
        let mut cur = promote(&col_fill).0;
        while cur != col_fill {
            cur = promote(&cur).0;
            orbit += 1;
        }
        out.push(check(
            &format!("{name}: the column filling lies in a full orbit"),
            orbit == n_big,
        ));
    }

    let sc3 = Partition::staircase(3)?;
    out.push(check(
        "sc_3 cyclotomic certificate",
        verify_cyclotomic_product(&[(2, 1), (4, 2), (6, 1), (8, 1), (12, 1)], &sc3, ActionOp::Promote)?,
    ));
    out.push(check(
        "sc_3 second cyclotomic certificate",
        verify_cyclotomic_product(&[(2, 3), (4, 1), (6, 1), (10, 1), (12, 1)], &sc3, ActionOp::Promote)?,
    ));
    let sc4 = Partition::staircase(4)?;
    out.push(check(
        "sc_4 cyclotomic certificate",
        verify_cyclotomic_product(
            &[(2, 3), (3, 1), (4, 2), (8, 1), (10, 2), (16, 2), (20, 1)],
            &sc4,
            ActionOp::Promote,
        )?,
    ));
    if include_k5 {
        let sc5 = Partition::staircase(5)?;
        out.push(check(
            "sc_5 cyclotomic certificate",
            verify_cyclotomic_product(
                &[
                    (2, 11),
                    (6, 1),
                    (10, 3),
                    (11, 1),
                    (13, 1),
                    (15, 1),
                    (22, 1),
                    (24, 4),
                    (30, 1),
                ],
                &sc5,
                ActionOp::Promote,
            )?,
        ));
    }

    for (c, r) in [(2usize, 2usize), (3, 2), (3, 3), (3, 4)] {
        let shape = Partition::rectangle(c, r)?;
        let cs = cycle_structure(&shape, ActionOp::Promote)?;
        let qh = q_hook_length(&shape)?.reduce_mod_qn(cs.order)?;
        out.push(check(
            &format!("{c}x{r} rectangle: q-hook polynomial certifies the sieving"),
            is_csp_polynomial(&qh, &cs)?,
        ));
        let (_, majr) = statistic_generating_function(&shape, maj, cs.order)?;
        let shifts = csp_shifts(&majr, &cs)?;
        out.push(check(
            &format!("{c}x{r} rectangle: some shift of the maj generating function certifies"),
            !shifts.is_empty(),
        ));
    }

    // N=2 special case: fixed points of the evacuation involution
    let mut stem_ok = true;
    for shape in shapes_up_to(8) {
        let cs = cycle_structure(&shape, ActionOp::Evacuate)?;
        let direct = enumerate_syt(&shape)?
            .iter()
            .filter(|t| evacuate(t) == **t)
            .count();
        if fixed_point_count(&cs, 1) != direct {
            stem_ok = false;
        }
    }
    out.push(check(
        "evacuation fixed points match the order-2 sieving count",
        stem_ok,
    ));

    // soundness of the canonical polynomial itself
    let mut sound = true;
    for shape in shapes_up_to(6) {
        for op in [ActionOp::Promote, ActionOp::Evacuate] {
            let cs = cycle_structure(&shape, op)?;
            if !is_csp_polynomial(&canonical_csp_polynomial(&cs)?, &cs)? {
                sound = false;
            }
        }
    }
    out.push(check("canonical polynomial lies in its own coset", sound));
    Ok(out)
}

/// Run every suite; `max_cells` bounds the general-shape universes and
/// `include_k5` enables the long sc_5 certificate.
pub fn run_all(max_cells: usize, include_k5: bool, worked_examples: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if worked_examples {
        out.extend(golden_examples()?);
    }
    out.extend(operator_identities(max_cells)?);
    out.extend(embedding_theorems()?);
    out.extend(descent_vector_laws()?);
    out.extend(path_dominance(max_cells)?);
    out.extend(oracle_equivalences(max_cells)?);
    out.extend(cycle_and_csp_checks(include_k5)?);
    Ok(out)
}
