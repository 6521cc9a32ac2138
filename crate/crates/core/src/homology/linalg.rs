//! Exact rank and Smith normal form for sparse integer matrices.
//!
//! Rows are eliminated against unit pivots only: a unit pivot at `(i, j)`
//! splits off a `1 ⊕ M'` block where `M'` is the Schur complement, so both the
//! rank and the invariant factors survive. Whatever is left without a unit
//! entry goes to a dense routine over big integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse row, sorted by column.
pub type Row<E> = Vec<(usize, E)>;

pub trait Arith {
    type E: Clone;
    fn from_i64(&self, x: i64) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_unit(&self, a: &Self::E) -> bool;
    /// `a / u` for a unit `u`.
    fn div_unit(&self, a: &Self::E, u: &Self::E) -> Option<Self::E>;
    /// `a - c * b`; `None` on overflow.
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Option<Self::E>;
}

pub struct ModP(pub u64);

impl Arith for ModP {
    type E = u64;

    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }

    fn div_unit(&self, a: &u64, u: &u64) -> Option<u64> {
        Some(a * pow_mod(*u, self.0 - 2, self.0) % self.0)
    }

    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> Option<u64> {
        let p = self.0;
        Some((a + p - c * b % p) % p)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Integers in `i128` with overflow detection.
pub struct Checked;

impl Arith for Checked {
    type E = i128;

    fn from_i64(&self, x: i64) -> i128 {
        x as i128
    }

    fn is_zero(&self, a: &i128) -> bool {
        *a == 0
    }

    fn is_unit(&self, a: &i128) -> bool {
        a.abs() == 1
    }

    fn div_unit(&self, a: &i128, u: &i128) -> Option<i128> {
        a.checked_mul(*u)
    }

    fn sub_mul(&self, a: &i128, c: &i128, b: &i128) -> Option<i128> {
        a.checked_sub(c.checked_mul(*b)?)
    }
}

pub struct Big;

impl Arith for Big {
    type E = BigInt;

    fn from_i64(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }

    fn div_unit(&self, a: &BigInt, u: &BigInt) -> Option<BigInt> {
        Some(a * u)
    }

    fn sub_mul(&self, a: &BigInt, c: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a - c * b)
    }
}

/// Result of unit-pivot elimination: `pivots` unit pivots split off, plus
/// the residual rows (no unit entries, pivot columns eliminated).
pub struct Eliminated<E> {
    pub pivots: usize,
    pub residual: Vec<Row<E>>,
}

struct Pivot<E> {
    col: usize,
    row: Row<E>,
}

/// `target - factor * pivot_row`, merged by column, zeros dropped.
fn axpy<A: Arith>(ar: &A, target: &Row<A::E>, factor: &A::E, pivot: &Row<A::E>) -> Option<Row<A::E>> {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    let zero = ar.from_i64(0);
    while i < target.len() || j < pivot.len() {
        let take_t = j == pivot.len() || (i < target.len() && target[i].0 < pivot[j].0);
        let take_p = i == target.len() || (j < pivot.len() && pivot[j].0 < target[i].0);
        let (col, val) = if take_t {
            i += 1;
            (target[i - 1].0, target[i - 1].1.clone())
        } else if take_p {
            j += 1;
            (pivot[j - 1].0, ar.sub_mul(&zero, factor, &pivot[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (target[i - 1].0, ar.sub_mul(&target[i - 1].1, factor, &pivot[j - 1].1)?)
        };
        if !ar.is_zero(&val) {
            out.push((col, val));
        }
    }
    Some(out)
}

/// Reduce `row` against the pivots in creation order. A pivot row never holds
/// an earlier pivot's column, so one forward sweep suffices.
fn reduce<A: Arith>(
    ar: &A,
    mut row: Row<A::E>,
    pivots: &[Pivot<A::E>],
    pivot_of_col: &HashMap<usize, usize>,
) -> Option<Row<A::E>> {
    loop {
        let next = row
            .iter()
            .filter_map(|(c, _)| pivot_of_col.get(c).copied())
            .min();
        let Some(k) = next else { return Some(row) };
        let p = &pivots[k];
        let pos = row.binary_search_by_key(&p.col, |e| e.0).expect("column present");
        let unit = &p.row[p.row.binary_search_by_key(&p.col, |e| e.0).expect("pivot present")].1;
        let factor = ar.div_unit(&row[pos].1, unit)?;
        row = axpy(ar, &row, &factor, &p.row)?;
    }
}

pub fn eliminate<A: Arith>(ar: &A, rows: impl IntoIterator<Item = Row<A::E>>) -> Option<Eliminated<A::E>> {
    let mut pivots: Vec<Pivot<A::E>> = Vec::new();
    let mut pivot_of_col: HashMap<usize, usize> = HashMap::new();
    let mut residual = Vec::new();
    for row in rows {
        let row = reduce(ar, row, &pivots, &pivot_of_col)?;
        if row.is_empty() {
            continue;
        }
        match row.iter().find(|(_, v)| ar.is_unit(v)) {
            Some(&(col, _)) => {
                pivot_of_col.insert(col, pivots.len());
                pivots.push(Pivot { col, row });
            }
            None => residual.push(row),
        }
    }
    let mut out = Vec::new();
    for row in residual {
        let row = reduce(ar, row, &pivots, &pivot_of_col)?;
        if !row.is_empty() {
            out.push(row);
        }
    }
    Some(Eliminated {
        pivots: pivots.len(),
        residual: out,
    })
}

/// Dense big-integer matrix from residual rows, over the columns they use.
fn densify<E: Clone>(rows: &[Row<E>], to_big: impl Fn(&E) -> BigInt) -> Vec<Vec<BigInt>> {
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    rows.iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); cols.len()];
            for (c, v) in r {
                dense[cols.binary_search(c).expect("column listed")] = to_big(v);
            }
            dense
        })
        .collect()
}

/// Fraction-free Gaussian elimination rank.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Invariant factors (`d_1 | d_2 | ...`, all positive) of a dense matrix.
pub fn smith_invariants(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&m, t, |_, _| true) else {
            break;
        };
        m.swap(t, pi);
        swap_cols(&mut m, t, pj);
        loop {
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = &m[i][t] / &m[t][t];
                    for j in t..cols {
                        let v = &m[i][j] - &q * &m[t][j];
                        m[i][j] = v;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = &m[t][j] / &m[t][t];
                    for i in t..rows {
                        let v = &m[i][j] - &q * &m[i][t];
                        m[i][j] = v;
                    }
                }
            }
            // Remainders smaller than the pivot move into pivot position.
            let rest = smallest_entry(&m, t, |i, j| (i == t) != (j == t));
            match rest {
                None => break,
                Some((i, j)) => {
                    m.swap(t, i);
                    swap_cols(&mut m, t, j);
                }
            }
        }
        diag.push(m[t][t].abs());
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(&diag[i], &diag[j]);
            if !g.is_zero() {
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    diag
}

fn smallest_entry(m: &[Vec<BigInt>], t: usize, keep: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && keep(i, j) && best.is_none_or(|(bi, bj)| v.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn signed_rows<A: Arith>(ar: &A, rows: &[Row<i8>]) -> Vec<Row<A::E>> {
    rows.iter()
        .map(|r| r.iter().map(|&(c, v)| (c, ar.from_i64(v as i64))).collect())
        .collect()
}

/// Rank over `F_p`.
pub fn rank_mod_p(rows: &[Row<i8>], p: u64) -> usize {
    let ar = ModP(p);
    let e = eliminate(&ar, signed_rows(&ar, rows)).expect("modular arithmetic cannot overflow");
    debug_assert!(e.residual.is_empty());
    e.pivots
}

/// Integer elimination, in `i128` first and big integers if that overflows.
fn eliminate_integer(rows: &[Row<i8>]) -> (usize, Vec<Vec<BigInt>>) {
    if let Some(e) = eliminate(&Checked, signed_rows(&Checked, rows)) {
        return (e.pivots, densify(&e.residual, |v| BigInt::from(*v)));
    }
    let e = eliminate(&Big, signed_rows(&Big, rows)).expect("big integers cannot overflow");
    (e.pivots, densify(&e.residual, Clone::clone))
}

/// Rank over the rationals, computed exactly.
pub fn rank_rational(rows: &[Row<i8>]) -> usize {
    let (pivots, rest) = eliminate_integer(rows);
    pivots + bareiss_rank(rest)
}

/// Rank and the invariant factors greater than one.
pub fn smith_rank_and_torsion(rows: &[Row<i8>]) -> (usize, Vec<BigInt>) {
    let (pivots, rest) = eliminate_integer(rows);
    let inv = smith_invariants(rest);
    let rank = pivots + inv.len();
    (rank, inv.into_iter().filter(|d| !d.is_one()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn dense_to_rows(m: &[Vec<i64>]) -> Vec<Row<i64>> {
        m.iter()
            .map(|r| r.iter().enumerate().filter(|e| *e.1 != 0).map(|(c, &v)| (c, v)).collect())
            .collect()
    }

    fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    /// Rank by exact rational elimination with `(num, den)` pairs in i128.
    fn oracle_rank(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<(i128, i128)>> =
            m.iter().map(|r| r.iter().map(|&v| (v as i128, 1)).collect()).collect();
        fn norm((n, d): (i128, i128)) -> (i128, i128) {
            let mut g = (n.abs(), d.abs());
            while g.1 != 0 {
                g = (g.1, g.0 % g.1);
            }
            let g = g.0.max(1) * d.signum();
            (n / g, d / g)
        }
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&i| a[i][c].0 != 0) else { continue };
            a.swap(rank, p);
            for i in 0..a.len() {
                if i != rank && a[i][c].0 != 0 {
                    let (pn, pd) = a[rank][c];
                    let (qn, qd) = a[i][c];
                    for j in 0..cols {
                        let (xn, xd) = a[rank][j];
                        let (yn, yd) = a[i][j];
                        // y - (q/p) x
                        let fn_ = qn * pd;
                        let fd = qd * pn;
                        a[i][j] = norm((yn * fd * xd - fn_ * xn * yd, yd * fd * xd));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn smith_form_of_small_matrices() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(
            smith_invariants(big(&m)),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        let m = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(smith_invariants(big(&m)), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn modular_rank_sees_characteristic() {
        let rows = vec![vec![(0, 1i8), (1, 1)], vec![(0, 1), (1, -1)]];
        assert_eq!(rank_rational(&rows), 2);
        assert_eq!(rank_mod_p(&rows, 2), 1);
        assert_eq!(rank_mod_p(&rows, 3), 2);
        let (rank, torsion) = smith_rank_and_torsion(&rows);
        assert_eq!((rank, torsion), (2, vec![BigInt::from(2)]));
    }

    #[test]
    fn overflow_is_detected_and_big_integers_agree() {
        let rows = vec![vec![(0, 1i128), (1, i128::MAX)], vec![(0, 1), (1, -i128::MAX)]];
        assert!(eliminate(&Checked, rows.clone()).is_none());
        let big_rows: Vec<Row<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, BigInt::from(*v))).collect())
            .collect();
        let e = eliminate(&Big, big_rows).unwrap();
        assert_eq!(e.pivots, 1);
        assert_eq!(e.residual.len(), 1);
    }

    proptest! {
        #[test]
        fn ranks_match_rational_oracle(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| if rng.random_bool(0.5) { 0 } else { rng.random_range(-3..=3) }).collect())
                .collect();
            let expected = oracle_rank(&m);
            let (pivots, rest) = {
                let e = eliminate(&Checked, dense_to_rows(&m).into_iter().map(|r| r.into_iter().map(|(c, v)| (c, v as i128)).collect())).unwrap();
                (e.pivots, densify(&e.residual, |v| BigInt::from(*v)))
            };
            prop_assert_eq!(pivots + bareiss_rank(rest), expected);
            prop_assert_eq!(bareiss_rank(big(&m)), expected);
            prop_assert_eq!(smith_invariants(big(&m)).len(), expected);
            // Product of invariant factors equals the gcd of maximal minors
            // when square and full rank: check via the determinant.
            if rows == cols && expected == rows {
                let det: BigInt = smith_invariants(big(&m)).iter().product();
                prop_assert_eq!(det, determinant(&m).abs());
            }
        }
    }

    fn determinant(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 1 {
            return BigInt::from(m[0][0]);
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|e| e.0 != j).map(|e| *e.1).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                BigInt::from(sign * m[0][j]) * determinant(&minor)
            })
            .sum()
    }
}
