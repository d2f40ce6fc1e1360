//! Dense exact linear algebra over `Q(ζ_m)`: echelon reduction, kernels,
//! solving, inversion, and univariate polynomial utilities (gcd, squarefree
//! part, minimal polynomials via Krylov iteration).

use crate::cyclotomic::{Cyc, CycField};

pub type Mat = Vec<Vec<Cyc>>;

pub fn zeros(f: &CycField, rows: usize, cols: usize) -> Mat {
    vec![vec![f.zero(); cols]; rows]
}

pub fn identity(f: &CycField, n: usize) -> Mat {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn mat_vec(f: &CycField, a: &Mat, v: &[Cyc]) -> Vec<Cyc> {
    a.iter()
        .map(|row| {
            let mut s = f.zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    s = f.add(&s, &f.mul(x, y));
                }
            }
            s
        })
        .collect()
}

pub fn mat_mul(f: &CycField, a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = zeros(f, n, m);
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if b[t][j].is_zero() {
                    continue;
                }
                let p = f.mul(&a[i][t], &b[t][j]);
                out[i][j] = f.add(&out[i][j], &p);
            }
        }
    }
    out
}

/// Row echelon form, in place. Returns the pivot column for each pivot row.
pub fn echelon(f: &CycField, a: &mut Mat) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(&a[r][c]);
        for j in c..cols {
            a[r][j] = f.mul(&a[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..cols {
                    let t = f.mul(&factor, &a[r][j]);
                    a[i][j] = f.sub(&a[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &CycField, a: &Mat) -> usize {
    let mut m = a.clone();
    echelon(f, &mut m).len()
}

/// Basis of the right kernel `{v : A v = 0}`.
pub fn kernel_basis(f: &CycField, a: &Mat) -> Vec<Vec<Cyc>> {
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    let mut m = a.clone();
    let pivots = echelon(f, &mut m);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (row, &pc) in pivots.iter().enumerate() {
            // pivot row: x_pc = -sum of free contributions
            v[pc] = f.neg(&m[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// One solution of `A x = b`, if consistent.
pub fn solve(f: &CycField, a: &Mat, b: &[Cyc]) -> Option<Vec<Cyc>> {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut aug: Mat = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(f, &mut aug);
    // inconsistent if a pivot lands in the augmented column
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

pub fn inverse(f: &CycField, a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut aug: Mat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { f.one() } else { f.zero() });
            }
            r
        })
        .collect();
    let pivots = echelon(f, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn det(f: &CycField, a: &Mat) -> Cyc {
    // elimination without normalization, tracking the product of pivots
    let n = a.len();
    let mut m = a.clone();
    let mut det = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return f.zero();
        };
        if p != c {
            m.swap(c, p);
            det = f.neg(&det);
        }
        det = f.mul(&det, &m[c][c]);
        let inv = f.inv(&m[c][c]);
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = f.mul(&m[i][c], &inv);
            for j in c..n {
                let t = f.mul(&factor, &m[c][j]);
                m[i][j] = f.sub(&m[i][j], &t);
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Polynomials over Q(zeta): ascending coefficients, trimmed
// ---------------------------------------------------------------------------

pub type CPoly = Vec<Cyc>;

pub fn poly_trim(f: &CycField, mut p: CPoly) -> CPoly {
    let _ = f;
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

pub fn poly_deg(p: &CPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn poly_mul(f: &CycField, a: &CPoly, b: &CPoly) -> CPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    poly_trim(f, out)
}

pub fn poly_divrem(f: &CycField, a: &CPoly, b: &CPoly) -> (CPoly, CPoly) {
    assert!(!b.is_empty());
    let mut rem = a.clone();
    if a.len() < b.len() {
        return (vec![], poly_trim(f, rem));
    }
    let mut quot = vec![f.zero(); a.len() - b.len() + 1];
    let lead_inv = f.inv(b.last().unwrap());
    for k in (0..quot.len()).rev() {
        let c = f.mul(&rem[k + b.len() - 1], &lead_inv);
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, y) in b.iter().enumerate() {
            let t = f.mul(&c, y);
            rem[k + i] = f.sub(&rem[k + i], &t);
        }
    }
    (poly_trim(f, quot), poly_trim(f, rem))
}

pub fn poly_monic(f: &CycField, p: &CPoly) -> CPoly {
    if p.is_empty() {
        return vec![];
    }
    let inv = f.inv(p.last().unwrap());
    p.iter().map(|c| f.mul(c, &inv)).collect()
}

pub fn poly_gcd(f: &CycField, a: &CPoly, b: &CPoly) -> CPoly {
    let mut r0 = poly_trim(f, a.clone());
    let mut r1 = poly_trim(f, b.clone());
    while !r1.is_empty() {
        let (_, rem) = poly_divrem(f, &r0, &r1);
        r0 = r1;
        r1 = rem;
    }
    if r0.is_empty() {
        r0
    } else {
        poly_monic(f, &r0)
    }
}

pub fn poly_derivative(f: &CycField, p: &CPoly) -> CPoly {
    if p.len() <= 1 {
        return vec![];
    }
    let out: CPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul_i64(c, i as i64))
        .collect();
    poly_trim(f, out)
}

/// `p / gcd(p, p')` — the separable (squarefree) part.
pub fn poly_separable_part(f: &CycField, p: &CPoly) -> CPoly {
    let g = poly_gcd(f, p, &poly_derivative(f, p));
    if g.len() <= 1 {
        return poly_monic(f, p);
    }
    let (q, r) = poly_divrem(f, p, &g);
    assert!(r.is_empty());
    poly_monic(f, &q)
}

pub fn poly_is_squarefree(f: &CycField, p: &CPoly) -> bool {
    poly_gcd(f, p, &poly_derivative(f, p)).len() <= 1
}

/// Evaluate `p(A) v` by Horner iteration on the vector.
pub fn poly_apply_to_vector(f: &CycField, p: &CPoly, a: &Mat, v: &[Cyc]) -> Vec<Cyc> {
    let mut acc = vec![f.zero(); v.len()];
    for c in p.iter().rev() {
        acc = mat_vec(f, a, &acc);
        for (ai, vi) in acc.iter_mut().zip(v) {
            let t = f.mul(c, vi);
            *ai = f.add(ai, &t);
        }
    }
    acc
}

/// Evaluate `p(A)` as a matrix.
pub fn poly_apply_to_matrix(f: &CycField, p: &CPoly, a: &Mat) -> Mat {
    let n = a.len();
    let mut acc = zeros(f, n, n);
    for c in p.iter().rev() {
        acc = mat_mul(f, a, &acc);
        for (i, row) in acc.iter_mut().enumerate() {
            let _ = i;
            let _ = row;
        }
        for i in 0..n {
            acc[i][i] = f.add(&acc[i][i], c);
        }
    }
    acc
}

/// Monic annihilator of the vector `v` under `A`: the least-degree monic
/// polynomial with `p(A) v = 0`, found by incremental Krylov elimination.
pub fn vector_annihilator(f: &CycField, a: &Mat, v: &[Cyc]) -> CPoly {
    let n = v.len();
    // reduced Krylov basis rows together with their polynomial recipes
    let mut echelon_rows: Vec<(usize, Vec<Cyc>, CPoly)> = Vec::new(); // (pivot, row, recipe)
    let mut w = v.to_vec();
    let mut power: CPoly = vec![f.one()]; // x^k as a polynomial
    loop {
        // reduce w against the current echelon rows
        let mut cur = w.clone();
        let mut recipe = power.clone();
        for (pc, row, rec) in &echelon_rows {
            if cur[*pc].is_zero() {
                continue;
            }
            let factor = cur[*pc].clone();
            for j in 0..n {
                let t = f.mul(&factor, &row[j]);
                cur[j] = f.sub(&cur[j], &t);
            }
            let scaled: CPoly = rec.iter().map(|c| f.mul(c, &factor)).collect();
            recipe = poly_sub_(f, &recipe, &scaled);
        }
        match cur.iter().position(|x| !x.is_zero()) {
            None => {
                // recipe(A) v = 0
                return poly_monic(f, &poly_trim(f, recipe));
            }
            Some(pc) => {
                let inv = f.inv(&cur[pc]);
                let row: Vec<Cyc> = cur.iter().map(|x| f.mul(x, &inv)).collect();
                let rec: CPoly = recipe.iter().map(|c| f.mul(c, &inv)).collect();
                echelon_rows.push((pc, row, rec));
            }
        }
        w = mat_vec(f, a, &w);
        power.insert(0, f.zero());
    }
}

fn poly_sub_(f: &CycField, a: &CPoly, b: &CPoly) -> CPoly {
    let n = a.len().max(b.len());
    let mut out = vec![f.zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = f.add(&out[i], x);
    }
    for (i, x) in b.iter().enumerate() {
        out[i] = f.sub(&out[i], x);
    }
    out
}

/// Least common multiple of two monic polynomials.
pub fn poly_lcm(f: &CycField, a: &CPoly, b: &CPoly) -> CPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let g = poly_gcd(f, a, b);
    let (q, r) = poly_divrem(f, a, &g);
    assert!(r.is_empty());
    poly_monic(f, &poly_mul(f, &q, b))
}

/// Minimal polynomial of `A`, verified to annihilate every basis vector.
pub fn minimal_polynomial(f: &CycField, a: &Mat) -> CPoly {
    let n = a.len();
    let mut mu: CPoly = vec![f.one()];
    for i in 0..n {
        let mut e = vec![f.zero(); n];
        e[i] = f.one();
        // skip if mu already annihilates e_i
        if !poly_apply_to_vector(f, &mu, a, &e).iter().all(|x| x.is_zero()) {
            let ann = vector_annihilator(f, a, &e);
            mu = poly_lcm(f, &mu, &ann);
        }
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CycField {
        CycField::new(1)
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = q();
        // [[1,2],[2,4]] has kernel spanned by (-2,1)
        let a = vec![
            vec![f.from_i64(1), f.from_i64(2)],
            vec![f.from_i64(2), f.from_i64(4)],
        ];
        let k = kernel_basis(&f, &a);
        assert_eq!(k.len(), 1);
        let img = mat_vec(&f, &a, &k[0]);
        assert!(img.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_and_invert() {
        let f = CycField::new(4);
        let z = f.zeta_pow(1);
        let a = vec![
            vec![f.one(), z.clone()],
            vec![f.neg(&z), f.from_i64(2)],
        ];
        let inv = inverse(&f, &a).unwrap();
        let prod = mat_mul(&f, &a, &inv);
        assert!(f.eq(&prod[0][0], &f.one()));
        assert!(prod[0][1].is_zero());
        let b = vec![f.from_i64(3), f.zeta_pow(3)];
        let x = solve(&f, &a, &b).unwrap();
        let back = mat_vec(&f, &a, &x);
        assert!(f.eq(&back[0], &b[0]) && f.eq(&back[1], &b[1]));
    }

    #[test]
    fn minpoly_of_diagonal() {
        let f = CycField::new(3);
        // diag(1, zeta, zeta) has minimal polynomial (x-1)(x-zeta)
        let mut a = zeros(&f, 3, 3);
        a[0][0] = f.one();
        a[1][1] = f.zeta_pow(1);
        a[2][2] = f.zeta_pow(1);
        let mu = minimal_polynomial(&f, &a);
        assert_eq!(poly_deg(&mu), Some(2));
        assert!(poly_is_squarefree(&f, &mu));
        let at = poly_apply_to_matrix(&f, &mu, &a);
        assert!(at.iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn squarefree_part_detects_nilpotence() {
        let f = q();
        // nilpotent Jordan block: minpoly x^2, separable part x
        let mut a = zeros(&f, 2, 2);
        a[0][1] = f.one();
        let mu = minimal_polynomial(&f, &a);
        assert_eq!(poly_deg(&mu), Some(2));
        assert!(!poly_is_squarefree(&f, &mu));
        let sep = poly_separable_part(&f, &mu);
        assert_eq!(poly_deg(&sep), Some(1));
    }
}
