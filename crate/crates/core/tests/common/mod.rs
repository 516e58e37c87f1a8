//! Oracles for the acceptance suite. They work from structure constants and
//! the defining evaluation formulas, with their own elimination, and share
//! no code paths with the differential or rank routines under test.
#![allow(dead_code)]

use locmod::{AltForm, LieAlgebra, Scalar, Subspace, Vector};
use num::{One, Zero};

pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![vec![]];
    }
    if p > n {
        return vec![];
    }
    let mut out = Vec::new();
    for mut s in subsets(n - 1, p - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.extend(subsets(n - 1, p));
    out
}

/// Rank by Gauss–Jordan on a row list.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        let inv = Scalar::one() / rows[r][c].clone();
        let pivot_row: Vec<Scalar> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

/// `e^I(e_{j_1}, …, e_{j_p})` for sorted `I` and arbitrary `j`: the sign of
/// the sorting permutation when the sets agree, else zero.
fn dual_eval(i: &[usize], j: &[usize]) -> i64 {
    let mut j = j.to_vec();
    let mut sign = 1;
    for a in 0..j.len() {
        for b in 0..j.len() - 1 - a {
            if j[b] == j[b + 1] {
                return 0;
            }
            if j[b] > j[b + 1] {
                j.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    if j == i { sign } else { 0 }
}

/// `(dα)(x_0,…,x_p) = Σ_{i<j} (-1)^{i+j} α([x_i,x_j], x_0,…,x̂_i,…,x̂_j,…,x_p)`
/// evaluated on basis vectors, for `α = e^I`.
fn d_basis_eval(g: &LieAlgebra, i_set: &[usize], args: &[usize]) -> Scalar {
    let mut total = Scalar::zero();
    let n = g.dim();
    for a in 0..args.len() {
        for b in a + 1..args.len() {
            let rest: Vec<usize> =
                args.iter().enumerate().filter(|(k, _)| *k != a && *k != b).map(|(_, &v)| v).collect();
            let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
            for k in 0..n {
                let c = g.structure_constant(args[a], args[b], k);
                if c.is_zero() {
                    continue;
                }
                let mut full = vec![k];
                full.extend(&rest);
                let v = dual_eval(i_set, &full);
                if v != 0 {
                    total += c * Scalar::from_integer((sign * v).into());
                }
            }
        }
    }
    total
}

/// Betti numbers of `H^*(g)` from the evaluation formula.
pub fn betti(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let rank_d = |p: usize| -> usize {
        if p >= n {
            return 0;
        }
        let targets = subsets(n, p + 1);
        let rows: Vec<Vec<Scalar>> =
            subsets(n, p).iter().map(|i| targets.iter().map(|j| d_basis_eval(g, i, j)).collect()).collect();
        rank(rows)
    };
    let ranks: Vec<usize> = (0..=n).map(rank_d).collect();
    (0..=n).map(|p| subsets(n, p).len() - ranks[p] - if p > 0 { ranks[p - 1] } else { 0 }).collect()
}

/// `(dα)(y_0,…,y_p)` for an arbitrary form through [`AltForm::evaluate`].
pub fn d_eval(g: &LieAlgebra, a: &AltForm, ys: &[Vector]) -> Scalar {
    let mut total = Scalar::zero();
    for i in 0..ys.len() {
        for j in i + 1..ys.len() {
            let mut args = vec![g.bracket(&ys[i], &ys[j])];
            args.extend(ys.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, v)| v.clone()));
            let s = a.evaluate(&args);
            if (i + j) % 2 == 0 {
                total += s;
            } else {
                total -= s;
            }
        }
    }
    total
}

/// `(L(x)α)(y_1,…,y_p) = -Σ α(y_1,…,[x,y_i],…,y_p)`.
pub fn lie_derivative_eval(g: &LieAlgebra, x: &Vector, a: &AltForm, ys: &[Vector]) -> Scalar {
    let mut total = Scalar::zero();
    for i in 0..ys.len() {
        let mut args = ys.to_vec();
        args[i] = g.bracket(x, &ys[i]);
        total -= a.evaluate(&args);
    }
    total
}

/// Coordinates of `v` in the basis of `s`, by elimination on the augmented system.
fn coords_in(s: &Subspace, v: &Vector) -> Vec<Scalar> {
    let b = s.basis();
    let (n, k) = (v.dim(), b.len());
    let mut rows: Vec<Vec<Scalar>> =
        (0..n).map(|r| b.iter().map(|c| c.0[r].clone()).chain(std::iter::once(v.0[r].clone())).collect()).collect();
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Scalar::one() / rows[r][c].clone();
        let pr: Vec<Scalar> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pr;
        piv_cols.push(c);
        r += 1;
    }
    let mut out = vec![Scalar::zero(); k];
    for (i, c) in piv_cols.iter().enumerate() {
        out[*c] = rows[i][k].clone();
    }
    out
}

/// `tr(ad y on g/h) = Σ_i (ad y)_{ii} - Σ_j (coefficient of b_j in [y, b_j])`.
pub fn quotient_trace(g: &LieAlgebra, y: &Vector, h: &Subspace) -> Scalar {
    let n = g.dim();
    let mut t = Scalar::zero();
    for i in 0..n {
        t += &g.bracket(y, &g.basis_vector(i)).0[i];
    }
    for (j, b) in h.basis().iter().enumerate() {
        t -= &coords_in(h, &g.bracket(y, b))[j];
    }
    t
}
