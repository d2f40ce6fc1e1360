//! Finite Weyl groups as explicit integer matrix groups on the root space,
//! plus exhaustive verification of the regular-element eigenspace theory:
//! for every element of a (possibly outer) coset with a regular
//! ζ-eigenvector, the eigenspace dimension matches the degree-count
//! formula, the full eigenvalue multiset is the predicted one, and the
//! dimension is maximal exactly on one conjugacy class.

use crate::cyclotomic::{Cyc, CycField};
use crate::error::{Error, Result};
use crate::linalg;
use crate::numerology::Factors;
use crate::rootsys::{DiagramAutomorphism, RootSystem};
use std::collections::{HashMap, HashSet, VecDeque};

/// Integer matrix acting on root coefficient vectors (columns are images
/// of the simple roots).
pub type IMat = Vec<Vec<i64>>;

pub fn identity_mat(n: usize) -> IMat {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul_i(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn mat_vec_i(a: &IMat, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(&x, &y)| x * y).sum())
        .collect()
}

/// Matrix of the simple reflection `s_i` in the simple-root basis.
pub fn simple_reflection_matrix(rs: &RootSystem, i: usize) -> IMat {
    let l = rs.rank;
    let mut m = identity_mat(l);
    for c in 0..l {
        m[i][c] -= rs.cartan()[i][c];
    }
    m
}

/// Matrix of a diagram automorphism (a permutation of the simple roots).
pub fn diagram_matrix(rs: &RootSystem, g: &DiagramAutomorphism) -> IMat {
    let l = rs.rank;
    let mut m = vec![vec![0i64; l]; l];
    for j in 0..l {
        m[g.perm[j]][j] = 1;
    }
    m
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub rs: RootSystem,
    pub elements: Vec<IMat>,
    /// Indices of the reflections (elements fixing a hyperplane).
    pub reflections: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumerateOptions {
    /// Lift the rank cap for E6 (51840 elements).
    pub allow_e6: bool,
}

/// Enumerate the full Weyl group by closure from the simple reflections.
/// Capped at rank 4 by default; E6 behind an explicit opt-in; E7/E8 always
/// rejected.
pub fn enumerate_weyl(rs: &RootSystem, opts: EnumerateOptions) -> Result<WeylGroup> {
    let is_e6 = rs.family == crate::rootsys::Family::E && rs.rank == 6;
    if rs.rank > 4 && !(is_e6 && opts.allow_e6) {
        return Err(Error::CapExceeded(format!(
            "Weyl enumeration capped at rank 4 ({} has rank {}; pass the E6 opt-in for E6)",
            rs.type_name(),
            rs.rank
        )));
    }
    let gens: Vec<IMat> = (0..rs.rank)
        .map(|i| simple_reflection_matrix(rs, i))
        .collect();
    let mut seen: HashSet<IMat> = HashSet::new();
    let mut elements: Vec<IMat> = Vec::new();
    let mut queue = VecDeque::new();
    let id = identity_mat(rs.rank);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = mat_mul_i(&w, g);
            if seen.insert(next.clone()) {
                queue.push_back(next.clone());
            }
        }
        elements.push(w);
    }
    let expected = rs.weyl_order();
    if elements.len() as u64 != expected {
        return Err(Error::Inconsistency(format!(
            "enumerated {} elements, degrees predict {}",
            elements.len(),
            expected
        )));
    }
    // reflections fix a hyperplane: rank(w - 1) = 1
    let reflections: Vec<usize> = elements
        .iter()
        .enumerate()
        .filter(|(_, w)| int_rank_of_w_minus_one(w) == 1)
        .map(|(i, _)| i)
        .collect();
    if reflections.len() != rs.n_positive() {
        return Err(Error::Inconsistency(
            "reflection count must equal the number of positive roots".into(),
        ));
    }
    Ok(WeylGroup {
        rs: rs.clone(),
        elements,
        reflections,
    })
}

fn int_rank_of_w_minus_one(w: &IMat) -> usize {
    let n = w.len();
    // fraction-free elimination on a small integer matrix
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| w[i][j] - i64::from(i == j)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..n {
            if r != rank && m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                for c in 0..n {
                    m[r][c] = m[r][c] * a - m[rank][c] * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn matrix_order(w: &IMat, cap: usize) -> Option<usize> {
    let id = identity_mat(w.len());
    let mut p = w.clone();
    for k in 1..=cap {
        if p == id {
            return Some(k);
        }
        p = mat_mul_i(&p, w);
    }
    None
}

/// Gram row functionals for regularity tests: `root_functionals[a][j]` is
/// the coefficient of `v_j` in `(alpha_a, v)`.
fn root_functionals(rs: &RootSystem) -> Vec<Vec<i64>> {
    let l = rs.rank;
    let gram: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| rs.symmetrizer()[i] * rs.cartan()[i][j]).collect())
        .collect();
    rs.positive_roots()
        .iter()
        .map(|alpha| {
            (0..l)
                .map(|j| (0..l).map(|i| alpha[i] * gram[i][j]).sum())
                .collect()
        })
        .collect()
}

fn to_cyc_matrix(f: &CycField, w: &IMat) -> linalg::Mat {
    w.iter()
        .map(|row| row.iter().map(|&x| f.from_i64(x)).collect())
        .collect()
}

/// Exact dimension of the `ζ^k`-eigenspace of `w` over `Q(ζ_m)`, plus a
/// flag: does the eigenspace contain a vector off every root hyperplane?
/// Decided by linear algebra — the eigenspace lies inside some hyperplane
/// iff one of the root functionals vanishes on all of it.
pub fn eigenspace_dim(
    rs: &RootSystem,
    f: &CycField,
    w: &IMat,
    zeta_exp: i64,
) -> (usize, bool) {
    let l = rs.rank;
    let zeta = f.zeta_pow(zeta_exp);
    let mut m = to_cyc_matrix(f, w);
    for i in 0..l {
        m[i][i] = f.sub(&m[i][i], &zeta);
    }
    let kernel = linalg::kernel_basis(f, &m);
    if kernel.is_empty() {
        return (0, false);
    }
    let functionals = root_functionals(rs);
    let regular = functionals.iter().all(|fun| {
        kernel.iter().any(|v| {
            let mut s = f.zero();
            for (c, x) in fun.iter().zip(v) {
                if *c != 0 && !x.is_zero() {
                    s = f.add(&s, &f.mul_i64(x, *c));
                }
            }
            !s.is_zero()
        })
    });
    (kernel.len(), regular)
}

#[derive(Debug, Clone)]
pub struct SpringerReport {
    pub coset_size: usize,
    pub m: usize,
    /// Elements with a regular ζ-eigenvector.
    pub regular_count: usize,
    pub max_dim: usize,
    pub formula_count: usize,
    pub violations: Vec<String>,
}

impl SpringerReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustively verify the regular-element theory over a coset `W` or
/// `W·σ` at the given order: eigenspace dimension formula, eigenvalue
/// multisets, maximality, and conjugacy of maximizers.
pub fn verify_springer(
    group: &WeylGroup,
    outer: Option<&DiagramAutomorphism>,
    m: usize,
    factors: &Factors,
) -> Result<SpringerReport> {
    let rs = &group.rs;
    let l = rs.rank;
    let degrees = rs.degrees();
    let r = factors.component_order;
    let big = lcm(r, m);
    // formula: #{j : eps_j zeta^{d_j} = 1} evaluated in Z_big
    let formula_count = factors
        .pairs
        .iter()
        .filter(|&&(mj, tj)| (tj * (big / r) + (mj + 1) * (big / m)) % big == 0)
        .count();

    let coset: Vec<IMat> = match outer {
        None => group.elements.clone(),
        Some(g) => {
            let gm = diagram_matrix(rs, g);
            group.elements.iter().map(|w| mat_mul_i(w, &gm)).collect()
        }
    };

    let mut fields: HashMap<usize, CycField> = HashMap::new();
    let mut dims = vec![0usize; coset.len()];
    let mut regular = vec![false; coset.len()];
    let mut violations = Vec::new();

    for (idx, sigma) in coset.iter().enumerate() {
        let ord = matrix_order(sigma, 4 * rs.coxeter_number().max(8))
            .ok_or_else(|| Error::Inconsistency("coset element of unbounded order".into()))?;
        let n = lcm(ord, m);
        let f = fields.entry(n).or_insert_with(|| CycField::new(n));
        let (d, reg) = eigenspace_dim(rs, f, sigma, (n / m) as i64);
        dims[idx] = d;
        regular[idx] = reg;
        if !reg {
            continue;
        }
        // (i) dimension formula
        if d != formula_count {
            violations.push(format!(
                "element {idx}: regular eigenspace has dim {d}, formula gives {formula_count}"
            ));
        }
        // (iii) full eigenvalue multiset: eps_i^{-1} zeta^{-d_i + 1}
        let nn = lcm(n, r);
        let fnn = fields.entry(nn).or_insert_with(|| CycField::new(nn));
        let mut predicted: HashMap<usize, usize> = HashMap::new();
        for &(mj, tj) in &factors.pairs {
            let e = ((nn as i64) - (tj * (nn / r)) as i64 - (mj as i64) * (nn / m) as i64)
                .rem_euclid(nn as i64) as usize;
            *predicted.entry(e).or_insert(0) += 1;
        }
        let mut total = 0usize;
        for (&e, &mult) in &predicted {
            let (de, _) = eigenspace_dim(rs, fnn, sigma, e as i64);
            if de != mult {
                violations.push(format!(
                    "element {idx}: eigenvalue ζ^{e} has multiplicity {de}, predicted {mult}"
                ));
            }
            total += de;
        }
        if total != l {
            violations.push(format!(
                "element {idx}: predicted eigenvalues account for {total} of {l} dimensions"
            ));
        }
        let _ = degrees;
    }

    let regular_count = regular.iter().filter(|&&x| x).count();
    let max_dim = dims.iter().copied().max().unwrap_or(0);
    // (iv) maximality and conjugacy
    if let Some(first_reg) = (0..coset.len()).find(|&i| regular[i]) {
        let d_reg = dims[first_reg];
        for idx in 0..coset.len() {
            if dims[idx] > d_reg {
                violations.push(format!(
                    "element {idx}: eigenspace dim {} exceeds the regular maximum {}",
                    dims[idx], d_reg
                ));
            }
            if dims[idx] == d_reg
                && !are_conjugate_in(&group.elements, &coset[first_reg], &coset[idx])
            {
                violations.push(format!(
                    "element {idx}: attains the maximal dimension but is not W-conjugate to the regular element"
                ));
            }
        }
    }

    Ok(SpringerReport {
        coset_size: coset.len(),
        m,
        regular_count,
        max_dim,
        formula_count,
        violations,
    })
}

fn are_conjugate_in(w_elements: &[IMat], a: &IMat, b: &IMat) -> bool {
    // inverse of an orthogonal-lattice element: search w with w a = b w
    w_elements
        .iter()
        .any(|w| mat_mul_i(w, a) == mat_mul_i(b, w))
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerology::{factors_of, Factors};
    use crate::rootsys::{diagram_automorphism_group, Family};

    fn group(f: Family, l: usize) -> WeylGroup {
        let rs = RootSystem::new(f, l).unwrap();
        enumerate_weyl(&rs, EnumerateOptions::default()).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(group(Family::A, 2).elements.len(), 6);
        assert_eq!(group(Family::B, 2).elements.len(), 8);
        assert_eq!(group(Family::G, 2).elements.len(), 12);
        assert_eq!(group(Family::A, 3).elements.len(), 24);
        assert_eq!(group(Family::F, 4).elements.len(), 1152);
    }

    #[test]
    fn caps() {
        let e7 = RootSystem::new(Family::E, 7).unwrap();
        assert!(enumerate_weyl(&e7, EnumerateOptions { allow_e6: true }).is_err());
        let e6 = RootSystem::new(Family::E, 6).unwrap();
        assert!(enumerate_weyl(&e6, EnumerateOptions::default()).is_err());
    }

    #[test]
    fn coxeter_element_eigenspaces() {
        let g = group(Family::A, 2);
        let rs = &g.rs;
        // a Coxeter element: s1 s2
        let c = mat_mul_i(
            &simple_reflection_matrix(rs, 0),
            &simple_reflection_matrix(rs, 1),
        );
        assert_eq!(matrix_order(&c, 10), Some(3));
        let f = CycField::new(3);
        let (d, reg) = eigenspace_dim(rs, &f, &c, 1);
        assert_eq!(d, 1);
        assert!(reg);

        let g2 = group(Family::G, 2);
        let c2 = mat_mul_i(
            &simple_reflection_matrix(&g2.rs, 0),
            &simple_reflection_matrix(&g2.rs, 1),
        );
        assert_eq!(matrix_order(&c2, 20), Some(6));
        let f6 = CycField::new(6);
        let (d, reg) = eigenspace_dim(&g2.rs, &f6, &c2, 1);
        assert_eq!(d, 1);
        assert!(reg);
    }

    #[test]
    fn identity_eigenspace_is_everything() {
        let g = group(Family::B, 2);
        let f = CycField::new(1);
        let (d, reg) = eigenspace_dim(&g.rs, &f, &identity_mat(2), 0);
        assert_eq!(d, 2);
        assert!(reg);
    }

    #[test]
    fn eigenspace_dims_sum_to_rank() {
        let g = group(Family::B, 2);
        for w in &g.elements {
            let ord = matrix_order(w, 16).unwrap();
            let f = CycField::new(ord);
            let total: usize = (0..ord)
                .map(|k| eigenspace_dim(&g.rs, &f, w, k as i64).0)
                .sum();
            assert_eq!(total, 2);
        }
    }

    #[test]
    fn springer_inner_small() {
        for (f, l, ms) in [
            (Family::A, 2, vec![1, 2, 3]),
            (Family::B, 2, vec![1, 2, 4]),
            (Family::G, 2, vec![1, 2, 3, 6]),
        ] {
            let g = group(f, l);
            let inner = Factors::trivial(g.rs.exponents());
            for m in ms {
                let rep = verify_springer(&g, None, m, &inner).unwrap();
                assert!(rep.ok(), "{}{} m={}: {:?}", f, l, m, rep.violations);
                assert!(rep.regular_count > 0, "{}{} m={} vacuous", f, l, m);
            }
        }
    }

    #[test]
    fn springer_outer_a3_order4() {
        let g = group(Family::A, 3);
        let rs = g.rs.clone();
        let outer = diagram_automorphism_group(&rs)
            .into_iter()
            .find(|a| a.order == 2)
            .unwrap();
        let factors = factors_of(&rs, &outer).unwrap();
        let rep = verify_springer(&g, Some(&outer), 4, &factors).unwrap();
        assert!(rep.ok(), "{:?}", rep.violations);
        assert!(rep.regular_count > 0);
    }
}
