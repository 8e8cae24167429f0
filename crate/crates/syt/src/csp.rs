//! Cyclic sieving machinery: exact integer polynomials, reduction modulo
//! `q^N - 1`, cyclotomic polynomials, cycle structures of promotion and
//! evacuation, the canonical CSP polynomial, and tableau statistics.
//!
//! All coefficient arithmetic is checked `i64`; overflow aborts with an
//! error instead of wrapping, and no root of unity is ever evaluated
//! numerically — CSP membership is decided by exact congruence.

use std::collections::{BTreeMap, HashMap};

use crate::dynamics::{dual_evacuate, evacuate, promote};
use crate::shape::{Partition, ShapeClass};
use crate::tableau::{enumerate_syt_with_limit, Tableau, DEFAULT_ENUM_LIMIT};
use crate::{Error, Result};

/// Dense integer polynomial, lowest degree first. The zero polynomial is
/// the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> IntPoly {
        IntPoly { coeffs: vec![1] }
    }

    /// The monomial `q^d`.
    pub fn monomial(d: usize) -> IntPoly {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        IntPoly { coeffs }
    }

    /// `q^d - 1`.
    pub fn q_power_minus_one(d: usize) -> IntPoly {
        let mut coeffs = vec![0; d + 1];
        coeffs[0] = -1;
        coeffs[d] = 1;
        IntPoly { coeffs }
    }

    /// The q-integer `[m]_q = 1 + q + ... + q^(m-1)`.
    pub fn q_integer(m: usize) -> IntPoly {
        IntPoly { coeffs: vec![1; m] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPoly) -> Result<IntPoly> {
        let mut coeffs = vec![0i64; self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *c = a.checked_add(b).ok_or(Error::Overflow)?;
        }
        Ok(IntPoly::new(coeffs))
    }

    pub fn mul(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Exact euclidean division; errors if the division leaves a
    /// remainder or a non-integer quotient would be needed.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::Overflow);
        }
        let mut rem = self.coeffs.clone();
        let dlead = *divisor.coeffs.last().unwrap();
        let dd = divisor.coeffs.len() - 1;
        if rem.len() < divisor.coeffs.len() {
            return if self.is_zero() {
                Ok(IntPoly::zero())
            } else {
                Err(Error::InvalidPartition("inexact polynomial division".into()))
            };
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + dd];
            if lead % dlead != 0 {
                return Err(Error::InvalidPartition("inexact polynomial division".into()));
            }
            let q = lead / dlead;
            quot[k] = q;
            if q != 0 {
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let sub = q.checked_mul(dc).ok_or(Error::Overflow)?;
                    rem[k + i] = rem[k + i].checked_sub(sub).ok_or(Error::Overflow)?;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InvalidPartition("inexact polynomial division".into()));
        }
        Ok(IntPoly::new(quot))
    }

    pub fn eval_at_one(&self) -> Result<i64> {
        let mut acc: i64 = 0;
        for &c in &self.coeffs {
            acc = acc.checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Reduce modulo `q^N - 1` by folding exponents.
    pub fn reduce_mod_qn(&self, n: usize) -> Result<PolynomialModQN> {
        let mut coeffs = vec![0i64; n];
        for (d, &c) in self.coeffs.iter().enumerate() {
            coeffs[d % n] = coeffs[d % n].checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(PolynomialModQN {
            modulus_degree: n,
            coeffs,
        })
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match (d, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}q^{d}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// The unique reduced representative of a coset in `Z[q]/(q^N - 1)`:
/// exactly `N` exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialModQN {
    modulus_degree: usize,
    coeffs: Vec<i64>,
}

impl PolynomialModQN {
    pub fn modulus_degree(&self) -> usize {
        self.modulus_degree
    }

    /// Coefficients of `q^0 .. q^(N-1)`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Multiply by `q^s` (cyclic coefficient shift).
    pub fn shift(&self, s: usize) -> PolynomialModQN {
        let n = self.modulus_degree;
        let mut coeffs = vec![0i64; n];
        for (d, &c) in self.coeffs.iter().enumerate() {
            coeffs[(d + s) % n] = c;
        }
        PolynomialModQN {
            modulus_degree: n,
            coeffs,
        }
    }
}

/// Euler's totient, the degree of the cyclotomic polynomial.
fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The cyclotomic polynomial `Phi_d`, via
/// `Phi_d(q) = (q^d - 1) / prod_(e|d, e<d) Phi_e(q)` with exact division.
pub fn cyclotomic(d: usize) -> Result<IntPoly> {
    fn rec(d: usize, cache: &mut HashMap<usize, IntPoly>) -> Result<IntPoly> {
        if let Some(p) = cache.get(&d) {
            return Ok(p.clone());
        }
        let mut num = IntPoly::q_power_minus_one(d);
        for e in 1..d {
            if d.is_multiple_of(e) {
                num = num.div_exact(&rec(e, cache)?)?;
            }
        }
        cache.insert(d, num.clone());
        Ok(num)
    }
    if d == 0 {
        return Err(Error::InvalidPartition("cyclotomic index must be >= 1".into()));
    }
    let phi = rec(d, &mut HashMap::new())?;
    debug_assert_eq!(phi.degree(), Some(totient(d)));
    Ok(phi)
}

/// Operators whose cycle structure can be requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionOp {
    Promote,
    Evacuate,
    DualEvacuate,
}

impl ActionOp {
    fn apply(&self, t: &Tableau) -> Tableau {
        match self {
            ActionOp::Promote => promote(t).0,
            ActionOp::Evacuate => evacuate(t),
            ActionOp::DualEvacuate => dual_evacuate(t),
        }
    }
}

/// Orbit decomposition of a cyclic action on `SYT(shape)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    /// Order `N` of the cyclic group.
    pub order: usize,
    /// Multiplicity of each occurring cycle size.
    pub multiplicities: BTreeMap<usize, usize>,
    /// True when `order` is only the observed lcm of orbit sizes rather
    /// than a proven operator order.
    pub empirical: bool,
}

impl CycleStructure {
    pub fn total(&self) -> usize {
        self.multiplicities.iter().map(|(c, m)| c * m).sum()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Exact orbit decomposition by exhaustive enumeration and orbit
/// following. `N` is the proven operator order where one is known
/// (promotion: `n` on rectangles, `2n` on staircases; the evacuations are
/// involutions, so 2 everywhere); otherwise the empirical lcm of orbit
/// sizes, flagged as such.
pub fn cycle_structure(shape: &Partition, op: ActionOp) -> Result<CycleStructure> {
    cycle_structure_with_limit(shape, op, DEFAULT_ENUM_LIMIT)
}

pub fn cycle_structure_with_limit(
    shape: &Partition,
    op: ActionOp,
    limit: u128,
) -> Result<CycleStructure> {
    let tableaux = enumerate_syt_with_limit(shape, limit)?;
    let index: HashMap<&Tableau, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut visited = vec![false; tableaux.len()];
    let mut multiplicities: BTreeMap<usize, usize> = BTreeMap::new();
    let mut observed_lcm = 1usize;
    for start in 0..tableaux.len() {
        if visited[start] {
            continue;
        }
        let mut size = 0usize;
        let mut cur = start;
        loop {
            visited[cur] = true;
            size += 1;
            let next = op.apply(&tableaux[cur]);
            cur = *index.get(&next).expect("action left the enumerated set");
            if cur == start {
                break;
            }
        }
        *multiplicities.entry(size).or_insert(0) += 1;
        observed_lcm = lcm(observed_lcm, size);
    }
    let n = shape.n();
    let (order, empirical) = match op {
        ActionOp::Evacuate | ActionOp::DualEvacuate => (2, false),
        ActionOp::Promote => match shape.classify() {
            ShapeClass::Rectangle { .. } => (n, false),
            ShapeClass::Staircase { .. } => (2 * n, false),
            ShapeClass::General => (observed_lcm, true),
        },
    };
    debug_assert!(multiplicities.keys().all(|c| order % c == 0));
    Ok(CycleStructure {
        order,
        multiplicities,
        empirical,
    })
}

/// The least-degree CSP polynomial of a cycle structure:
/// `p = sum_c m_c * p_c` with `p_c = sum_(j<c) q^(jN/c)`.
pub fn canonical_csp_polynomial(cs: &CycleStructure) -> Result<PolynomialModQN> {
    let n = cs.order;
    let mut coeffs = vec![0i64; n];
    for (&c, &m) in &cs.multiplicities {
        for j in 0..c {
            let d = j * n / c;
            coeffs[d] = coeffs[d].checked_add(m as i64).ok_or(Error::Overflow)?;
        }
    }
    Ok(PolynomialModQN {
        modulus_degree: n,
        coeffs,
    })
}

/// Number of elements fixed by `a^k`: the sum of `c * m_c` over cycle
/// sizes `c` dividing `k`.
pub fn fixed_point_count(cs: &CycleStructure, k: i64) -> usize {
    cs.multiplicities
        .iter()
        .filter(|(&c, _)| k.rem_euclid(c as i64) == 0)
        .map(|(&c, &m)| c * m)
        .sum()
}

/// True iff `x` lies in the CSP coset of `cs`, i.e. equals the canonical
/// polynomial modulo `q^N - 1`.
pub fn is_csp_polynomial(x: &PolynomialModQN, cs: &CycleStructure) -> Result<bool> {
    if x.modulus_degree != cs.order {
        return Err(Error::ShapeMismatch(format!(
            "modulus degree {} != group order {}",
            x.modulus_degree, cs.order
        )));
    }
    Ok(*x == canonical_csp_polynomial(cs)?)
}

/// Major index: the sum of the descents.
pub fn maj(t: &Tableau) -> usize {
    crate::descent::descent_set(t).iter().sum()
}

/// Comajor index: the sum of `n - d` over descents `d`.
pub fn comaj(t: &Tableau) -> usize {
    let n = t.n();
    crate::descent::descent_set(t).iter().map(|d| n - d).sum()
}

/// `b(λ) = sum_i (i-1) λ_i`, the standard shift in q-hook identities.
pub fn b_number(shape: &Partition) -> usize {
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i * p)
        .sum()
}

/// Generating function `sum_t q^(stat(t))` over `SYT(shape)`. Returns the
/// unreduced polynomial and its reduction mod `q^N - 1`.
pub fn statistic_generating_function(
    shape: &Partition,
    stat: impl Fn(&Tableau) -> usize,
    n_modulus: usize,
) -> Result<(IntPoly, PolynomialModQN)> {
    let tableaux = enumerate_syt_with_limit(shape, DEFAULT_ENUM_LIMIT)?;
    let mut coeffs: Vec<i64> = Vec::new();
    for t in &tableaux {
        let d = stat(t);
        if d >= coeffs.len() {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] = coeffs[d].checked_add(1).ok_or(Error::Overflow)?;
    }
    let poly = IntPoly::new(coeffs);
    let reduced = poly.reduce_mod_qn(n_modulus)?;
    Ok((poly, reduced))
}

/// The q-analogue of the hook length formula:
/// `[n]_q! / prod_cells [hook]_q`, by exact polynomial division.
pub fn q_hook_length(shape: &Partition) -> Result<IntPoly> {
    let n = shape.n();
    let mut num = IntPoly::one();
    for m in 1..=n {
        num = num.mul(&IntPoly::q_integer(m))?;
    }
    for i in 0..shape.rows() {
        for j in 0..shape.parts()[i] {
            num = num.div_exact(&IntPoly::q_integer(shape.hook(i, j)))?;
        }
    }
    Ok(num)
}

/// Expand a multiset of cyclotomic factors `(d, exponent)`, reduce modulo
/// `q^N - 1`, and test membership in the CSP coset of `(shape, op)`.
pub fn verify_cyclotomic_product(
    factors: &[(usize, usize)],
    shape: &Partition,
    op: ActionOp,
) -> Result<bool> {
    let cs = cycle_structure(shape, op)?;
    let mut product = IntPoly::one();
    for &(d, e) in factors {
        let phi = cyclotomic(d)?;
        for _ in 0..e {
            product = product.mul(&phi)?;
        }
    }
    is_csp_polynomial(&product.reduce_mod_qn(cs.order)?, &cs)
}

/// All shifts `s` in `0..N` with `q^s * x` in the CSP coset of `cs`.
pub fn csp_shifts(x: &PolynomialModQN, cs: &CycleStructure) -> Result<Vec<usize>> {
    let canonical = canonical_csp_polynomial(cs)?;
    Ok((0..cs.order)
        .filter(|&s| x.shift(s) == canonical)
        .collect())
}
