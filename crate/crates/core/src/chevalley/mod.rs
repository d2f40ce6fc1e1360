//! Ground-truth oracle: an explicit Lie algebra with exact integer
//! structure constants.
//!
//! Basis: `h_1..h_l` (simple coroots) followed by one vector `e_β` per
//! root, in the root order of [`RootSystem::all_roots`]. Simply-laced
//! models come from a bimultiplicative sign cocycle attached to an
//! orientation of the diagram; B, C, F4 and G2 are realized as the fixed
//! subalgebras of a pinned diagram automorphism of a simply-laced parent,
//! with orbit sums as the folded basis. Either way the brackets are
//! integral, `[e_β, e_{-β}]` is the coroot of `β`, and the Jacobi identity
//! is checked exhaustively at small rank by the verification suites.

mod autom;
mod probes;

pub use autom::{Automorphism, GradedBasis};
pub use probes::*;

use crate::cyclotomic::{Cyc, CycField};
use crate::error::{Error, Result};
use crate::rootsys::{Coeffs, DiagramAutomorphism, Family, RootSystem};
use std::sync::OnceLock;

/// Exact element: coordinates over the model basis.
pub type Vect = Vec<Cyc>;

#[derive(Debug)]
pub struct LieAlgebraModel {
    pub rs: RootSystem,
    pub dim: usize,
    /// Sparse brackets of basis pairs, flattened: `table[a*dim+b]`.
    table: Vec<Vec<(usize, i64)>>,
    killing: OnceLock<Vec<Vec<i64>>>,
}

impl LieAlgebraModel {
    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    /// Basis index of the root vector for root index `r`.
    pub fn root_basis_index(&self, r: usize) -> usize {
        self.rs.rank + r
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a * self.dim + b]
    }

    pub fn zero_vect(&self, f: &CycField) -> Vect {
        vec![f.zero(); self.dim]
    }

    pub fn basis_vect(&self, f: &CycField, idx: usize) -> Vect {
        let mut v = self.zero_vect(f);
        v[idx] = f.one();
        v
    }

    pub fn bracket(&self, f: &CycField, x: &Vect, y: &Vect) -> Vect {
        let mut out = self.zero_vect(f);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let coef = f.mul(xa, yb);
                for &(t, c) in self.bracket_basis(a, b) {
                    let add = f.mul_i64(&coef, c);
                    out[t] = f.add(&out[t], &add);
                }
            }
        }
        out
    }

    /// `[x, e_b]` for a basis index `b`.
    pub fn bracket_with_basis(&self, f: &CycField, x: &Vect, b: usize) -> Vect {
        let mut out = self.zero_vect(f);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for &(t, c) in self.bracket_basis(a, b) {
                let add = f.mul_i64(xa, c);
                out[t] = f.add(&out[t], &add);
            }
        }
        out
    }

    pub fn ad_matrix(&self, f: &CycField, x: &Vect) -> Vec<Vec<Cyc>> {
        let cols: Vec<Vect> = (0..self.dim)
            .map(|b| self.bracket_with_basis(f, x, b))
            .collect();
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    /// Killing form on basis pairs, `tr(ad a · ad b)`, computed once.
    pub fn killing_gram(&self) -> &Vec<Vec<i64>> {
        self.killing.get_or_init(|| {
            let d = self.dim;
            // ad of a basis element as a sparse column list
            let ad: Vec<Vec<Vec<(usize, i64)>>> = (0..d)
                .map(|a| (0..d).map(|b| self.table[a * d + b].clone()).collect())
                .collect();
            let mut gram = vec![vec![0i64; d]; d];
            for a in 0..d {
                for b in a..d {
                    // tr(ad a ad b) = sum_v coeff of e_v in [a,[b,e_v]]
                    let mut tr = 0i64;
                    for v in 0..d {
                        for &(w, c1) in &ad[b][v] {
                            for &(u, c2) in &ad[a][w] {
                                if u == v {
                                    tr += c1 * c2;
                                }
                            }
                        }
                    }
                    gram[a][b] = tr;
                    gram[b][a] = tr;
                }
            }
            gram
        })
    }

    /// `κ(x, y)` through the precomputed Gram matrix.
    pub fn killing(&self, f: &CycField, x: &Vect, y: &Vect) -> Cyc {
        let gram = self.killing_gram();
        let mut s = f.zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() || gram[a][b] == 0 {
                    continue;
                }
                let t = f.mul_i64(&f.mul(xa, yb), gram[a][b]);
                s = f.add(&s, &t);
            }
        }
        s
    }
}

/// Build the explicit model for any supported simple type (rank <= 8).
pub fn build_model(family: Family, rank: usize) -> Result<LieAlgebraModel> {
    if rank > 8 {
        return Err(Error::CapExceeded(format!(
            "explicit models are built up to rank 8, requested {family}{rank}"
        )));
    }
    let rs = RootSystem::new(family, rank)?;
    match family {
        Family::A | Family::D | Family::E => Ok(simply_laced_model(rs)),
        Family::B => {
            if rank == 2 {
                // fold A3 along its flip; the folded order is (short, long),
                // so reverse to the B2 node order (long, short)
                let parent = RootSystem::new(Family::A, 3)?;
                fold_model(parent, &[2, 1, 0], vec![vec![1], vec![0, 2]], rs)
            } else {
                let parent = RootSystem::new(Family::D, rank + 1)?;
                let mut perm: Vec<usize> = (0..rank + 1).collect();
                perm.swap(rank - 1, rank);
                let mut orbits: Vec<Vec<usize>> = (0..rank - 1).map(|i| vec![i]).collect();
                orbits.push(vec![rank - 1, rank]);
                fold_model(parent, &perm, orbits, rs)
            }
        }
        Family::C => {
            let parent = RootSystem::new(Family::A, 2 * rank - 1)?;
            let n = 2 * rank - 1;
            let perm: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            let mut orbits: Vec<Vec<usize>> =
                (0..rank - 1).map(|i| vec![i, n - 1 - i]).collect();
            orbits.push(vec![rank - 1]);
            fold_model(parent, &perm, orbits, rs)
        }
        Family::F => {
            let parent = RootSystem::new(Family::E, 6)?;
            // E6 flip: a1<->a6, a3<->a5 (0-based 0<->5, 2<->4)
            let perm = vec![5, 1, 4, 3, 2, 0];
            let orbits = vec![vec![1], vec![3], vec![2, 4], vec![0, 5]];
            fold_model(parent, &perm, orbits, rs)
        }
        Family::G => {
            let parent = RootSystem::new(Family::D, 4)?;
            // triality: a1 -> a3 -> a4 -> a1
            let perm = vec![2, 1, 3, 0];
            let orbits = vec![vec![0, 2, 3], vec![1]];
            fold_model(parent, &perm, orbits, rs)
        }
    }
}

// ---------------------------------------------------------------------------
// Simply-laced construction via a sign cocycle
// ---------------------------------------------------------------------------

fn simply_laced_model(rs: RootSystem) -> LieAlgebraModel {
    let l = rs.rank;
    let dim = rs.dim();
    // orientation parity: epsilon(alpha_i, alpha_j) = -1 iff i == j or
    // there is an edge with i < j
    let mut parity = vec![vec![0u8; l]; l];
    for i in 0..l {
        parity[i][i] = 1;
        for j in i + 1..l {
            if rs.cartan()[i][j] != 0 {
                parity[i][j] = 1;
            }
        }
    }
    let eps = |a: &[i64], b: &[i64]| -> i64 {
        let mut s = 0i64;
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                if parity[i][j] == 1 {
                    s += a[i] * b[j];
                }
            }
        }
        if s.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    };

    let roots = rs.all_roots().to_vec();
    let mut table = vec![Vec::new(); dim * dim];
    {
        let mut set = |a: usize, b: usize, v: Vec<(usize, i64)>| {
            table[a * dim + b] = v;
        };
        // [h_i, e_beta] and [e_beta, h_i]
        for (ri, beta) in roots.iter().enumerate() {
            let eb = l + ri;
            for i in 0..l {
                let c = rs.pairing_simple_coroot(beta, i);
                if c != 0 {
                    set(i, eb, vec![(eb, c)]);
                    set(eb, i, vec![(eb, -c)]);
                }
            }
        }
        // [e_beta, e_gamma]. The raw cocycle convention yields
        // [e_beta, e_{-beta}] = -coroot; a diagonal sign twist on the
        // negative root vectors restores the classical [e, f] = +coroot.
        let n_pos = rs.n_positive();
        let twist = |ri: usize| -> i64 {
            if ri < n_pos {
                1
            } else {
                -1
            }
        };
        for (ri, beta) in roots.iter().enumerate() {
            for (rj, gamma) in roots.iter().enumerate() {
                let sum: Coeffs = beta.iter().zip(gamma).map(|(&x, &y)| x + y).collect();
                if sum.iter().all(|&c| c == 0) {
                    let coroot = rs.coroot(beta);
                    let s = -twist(ri) * twist(rj);
                    let entries: Vec<(usize, i64)> = coroot
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (i, s * c))
                        .collect();
                    set(l + ri, l + rj, entries);
                } else if let Some(rk) = rs.root_index(&sum) {
                    let sign = eps(beta, gamma) * twist(ri) * twist(rj) * twist(rk);
                    set(l + ri, l + rj, vec![(l + rk, sign)]);
                }
            }
        }
    }
    LieAlgebraModel {
        rs,
        dim,
        table,
        killing: OnceLock::new(),
    }
}

// ---------------------------------------------------------------------------
// Pinned diagram automorphisms and folding
// ---------------------------------------------------------------------------

/// A pinned automorphism of a model: a signed permutation of the basis
/// fixing the pinning (`e_{alpha_i} -> e_{alpha_perm(i)}` with sign +1),
/// extended to all root vectors by height recursion so that brackets are
/// preserved by construction.
#[derive(Debug, Clone)]
pub struct PinnedAutomorphism {
    /// Image of basis index `b` is `sign * basis[target]`.
    pub map: Vec<(usize, i64)>,
    pub order: usize,
}

pub fn pinned_automorphism(
    model: &LieAlgebraModel,
    perm: &[usize],
) -> Result<PinnedAutomorphism> {
    let rs = &model.rs;
    let l = rs.rank;
    let dim = model.dim;
    let g = DiagramAutomorphism {
        perm: perm.to_vec(),
        order: 0, // filled below
    };
    let mut map: Vec<Option<(usize, i64)>> = vec![None; dim];
    for i in 0..l {
        map[i] = Some((perm[i], 1));
    }
    // positive roots in height order; the root list is already sorted so
    let n_pos = rs.n_positive();
    for ri in 0..n_pos {
        let beta = &rs.all_roots()[ri];
        let target_root = g.apply(beta);
        let ti = rs
            .root_index(&target_root)
            .ok_or_else(|| Error::Inconsistency("permutation does not preserve roots".into()))?;
        if rs.height(beta) == 1 {
            map[l + ri] = Some((l + ti, 1));
            continue;
        }
        // decompose beta = alpha_i + gamma with the smallest such i
        let (si, gi, n) = decompose(rs, model, ri)?;
        // e_beta = [e_{alpha_si}, e_gamma] / n ; apply the (already known)
        // images and divide
        let (im_s, sg_s) = map[l + si].expect("height order");
        let (im_g, sg_g) = map[l + gi].expect("height order");
        let br = model.bracket_basis(im_s, im_g);
        if br.len() != 1 {
            return Err(Error::Inconsistency("image bracket not a root line".into()));
        }
        let (t, c) = br[0];
        debug_assert_eq!(t, l + ti);
        let num = sg_s * sg_g * c;
        if num % n != 0 {
            return Err(Error::Inconsistency("non-integral automorphism sign".into()));
        }
        map[l + ri] = Some((t, num / n));
    }
    // negative root vectors carry the same sign as their positives
    for ri in 0..n_pos {
        let (t, s) = map[l + ri].unwrap();
        let neg_src = l + rs.negative_of(ri);
        let neg_tgt = l + rs.negative_of(t - l) + 0;
        map[neg_src] = Some((neg_tgt, s));
    }
    let map: Vec<(usize, i64)> = map.into_iter().map(|x| x.unwrap()).collect();
    // order of the signed permutation
    let mut order = 1usize;
    let mut cur: Vec<(usize, i64)> = (0..dim).map(|i| (i, 1)).collect();
    loop {
        cur = (0..dim)
            .map(|i| {
                let (j, s) = cur[i];
                let (k, t) = map[j];
                (k, s * t)
            })
            .collect();
        if cur.iter().enumerate().all(|(i, &(j, s))| i == j && s == 1) {
            break;
        }
        order += 1;
        if order > 64 {
            return Err(Error::Inconsistency("pinned automorphism order overflow".into()));
        }
    }
    Ok(PinnedAutomorphism { map, order })
}

/// Pick the smallest simple root index `si` with `beta - alpha_si` a
/// positive root; returns (si, index of the complement, bracket constant).
fn decompose(
    rs: &RootSystem,
    model: &LieAlgebraModel,
    ri: usize,
) -> Result<(usize, usize, i64)> {
    let l = rs.rank;
    let beta = &rs.all_roots()[ri];
    for si in 0..l {
        let mut gamma = beta.clone();
        gamma[si] -= 1;
        if let Some(gi) = rs.root_index(&gamma) {
            if rs.all_roots()[gi].iter().all(|&c| c >= 0) {
                // constant in [e_{alpha_si}, e_gamma] = n e_beta
                let simple_idx = rs
                    .root_index(&unit_vec(l, si))
                    .expect("simple roots are roots");
                let br = model.bracket_basis(l + simple_idx, l + gi);
                if br.len() == 1 && br[0].0 == l + ri {
                    return Ok((simple_idx, gi, br[0].1));
                }
            }
        }
    }
    Err(Error::Inconsistency(format!(
        "no simple decomposition for root {ri}"
    )))
}

fn unit_vec(l: usize, i: usize) -> Coeffs {
    let mut v = vec![0i64; l];
    v[i] = 1;
    v
}

/// Fold a simply-laced parent along a pinned diagram automorphism. The
/// fixed subalgebra has basis: orbit sums of Cartan generators (the folded
/// simple coroots) and orbit sums of root vectors; its root data must
/// match `folded_rs` exactly.
fn fold_model(
    parent_rs: RootSystem,
    perm: &[usize],
    orbits: Vec<Vec<usize>>,
    folded_rs: RootSystem,
) -> Result<LieAlgebraModel> {
    let parent = simply_laced_model(parent_rs);
    let prs = &parent.rs;
    let pl = prs.rank;
    let pinned = pinned_automorphism(&parent, perm)?;
    let g = DiagramAutomorphism {
        perm: perm.to_vec(),
        order: pinned.order,
    };

    let fl = folded_rs.rank;
    let fdim = folded_rs.dim();

    // folded Cartan: h'_i = sum of parent h_j over the orbit
    let mut folded_basis: Vec<Vec<i64>> = Vec::with_capacity(fdim);
    for orbit in &orbits {
        let mut v = vec![0i64; parent.dim];
        for &j in orbit {
            v[j] = 1;
        }
        folded_basis.push(v);
    }

    // group parent roots into gamma-orbits and map each orbit to its
    // restricted coefficient vector over the folded simple roots
    let restricted = |beta: &Coeffs| -> Coeffs {
        (0..fl)
            .map(|i| orbits[i].iter().map(|&j| beta[j]).sum())
            .collect()
    };
    let n_roots = prs.all_roots().len();
    let mut orbit_of_root: Vec<Option<usize>> = vec![None; n_roots];
    let mut folded_root_vectors: std::collections::HashMap<Coeffs, Vec<i64>> =
        std::collections::HashMap::new();
    for ri in 0..n_roots {
        if orbit_of_root[ri].is_some() {
            continue;
        }
        // orbit sum with the pinned signs
        let mut v = vec![0i64; parent.dim];
        let mut idx = pl + ri;
        let mut sign = 1i64;
        loop {
            orbit_of_root[idx - pl] = Some(ri);
            v[idx] += sign;
            let (next, s) = pinned.map[idx];
            sign *= s;
            idx = next;
            if idx == pl + ri {
                break;
            }
        }
        if sign != 1 {
            return Err(Error::Inconsistency(
                "sign obstruction in a root orbit: folding not applicable".into(),
            ));
        }
        let label = restricted(&prs.all_roots()[ri]);
        if folded_root_vectors.insert(label, v).is_some() {
            return Err(Error::Inconsistency(
                "two orbits restrict to the same folded root".into(),
            ));
        }
    }
    let _ = g;
    // assemble in the folded root order
    for beta in folded_rs.all_roots() {
        let v = folded_root_vectors
            .get(beta)
            .ok_or_else(|| Error::Inconsistency("missing folded root".into()))?;
        folded_basis.push(v.clone());
    }
    if folded_root_vectors.len() != folded_rs.all_roots().len() {
        return Err(Error::Inconsistency(format!(
            "folded root count mismatch: {} orbits vs {} roots",
            folded_root_vectors.len(),
            folded_rs.all_roots().len()
        )));
    }

    // express a parent vector in the folded basis (all entries integral)
    let express = |v: &[i64]| -> Result<Vec<i64>> {
        let mut out = vec![0i64; fdim];
        let mut rem = v.to_vec();
        for (bi, bv) in folded_basis.iter().enumerate() {
            // leading support of bv
            let lead = bv.iter().position(|&c| c != 0).unwrap();
            if rem[lead] != 0 {
                let c = rem[lead] / bv[lead];
                out[bi] = c;
                for (r, b) in rem.iter_mut().zip(bv) {
                    *r -= c * b;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::Inconsistency(
                "bracket left the folded subalgebra".into(),
            ));
        }
        Ok(out)
    };

    // integer bracket in the parent
    let pbracket = |x: &[i64], y: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; parent.dim];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                for &(t, c) in parent.bracket_basis(a, b) {
                    out[t] += xa * yb * c;
                }
            }
        }
        out
    };

    let mut table = vec![Vec::new(); fdim * fdim];
    for a in 0..fdim {
        for b in 0..fdim {
            let br = pbracket(&folded_basis[a], &folded_basis[b]);
            let coords = express(&br)?;
            table[a * fdim + b] = coords
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .collect();
        }
    }
    Ok(LieAlgebraModel {
        rs: folded_rs,
        dim: fdim,
        table,
        killing: OnceLock::new(),
    })
}

/// The pinned automorphism realizing an outer diagram symmetry on the
/// simply-laced model of the same type (used for building outer
/// automorphism matrices).
pub fn outer_pinned(model: &LieAlgebraModel, g: &DiagramAutomorphism) -> Result<PinnedAutomorphism> {
    pinned_automorphism(model, &g.perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::diagram_automorphism_group;

    fn model(f: Family, l: usize) -> LieAlgebraModel {
        build_model(f, l).unwrap()
    }

    fn jacobi_ok(m: &LieAlgebraModel) -> bool {
        let f = CycField::new(1);
        let d = m.dim;
        for a in 0..d {
            let va = m.basis_vect(&f, a);
            for b in 0..d {
                let vb = m.basis_vect(&f, b);
                let ab = m.bracket(&f, &va, &vb);
                for c in 0..d {
                    let vc = m.basis_vect(&f, c);
                    let bc = m.bracket(&f, &vb, &vc);
                    let ca = m.bracket(&f, &vc, &va);
                    let t1 = m.bracket(&f, &ab, &vc);
                    let t2 = m.bracket(&f, &bc, &va);
                    let t3 = m.bracket(&f, &ca, &vb);
                    for i in 0..d {
                        let s = f.add(&f.add(&t1[i], &t2[i]), &t3[i]);
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn a1_model_is_sl2() {
        let m = model(Family::A, 1);
        assert_eq!(m.dim, 3);
        let f = CycField::new(1);
        let e = m.basis_vect(&f, 1);
        let fv = m.basis_vect(&f, 2);
        let h = m.bracket(&f, &e, &fv);
        // [e, f] = h
        assert!(f.eq(&h[0], &f.one()));
        let he = m.bracket(&f, &h, &e);
        assert!(f.eq(&he[1], &f.from_i64(2)));
        let hf = m.bracket(&f, &h, &fv);
        assert!(f.eq(&hf[2], &f.from_i64(-2)));
    }

    #[test]
    fn jacobi_small_rank() {
        for (f, l) in [
            (Family::A, 2),
            (Family::A, 3),
            (Family::B, 2),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
        ] {
            let m = model(f, l);
            assert!(jacobi_ok(&m), "{f}{l}");
        }
    }

    #[test]
    fn folded_structure_constants_are_chevalley_like() {
        // in G2 the positive-root strings give |N| up to 3
        let m = model(Family::G, 2);
        assert_eq!(m.dim, 14);
        let f = CycField::new(1);
        // [e_beta, e_{-beta}] = coroot for every root
        for (ri, beta) in m.rs.all_roots().to_vec().iter().enumerate() {
            let e = m.basis_vect(&f, m.root_basis_index(ri));
            let neg = m.rs.negative_of(ri);
            let fv = m.basis_vect(&f, m.root_basis_index(neg));
            let h = m.bracket(&f, &e, &fv);
            let coroot = m.rs.coroot(beta);
            for i in 0..m.rank() {
                assert!(f.eq(&h[i], &f.from_i64(coroot[i])), "coroot mismatch");
            }
            // and the pairing closes: [h, e] = 2e
            let he = m.bracket(&f, &h, &e);
            let idx = m.root_basis_index(ri);
            assert!(f.eq(&he[idx], &f.from_i64(2)));
        }
    }

    #[test]
    fn structure_constant_magnitudes_match_root_strings() {
        for (fam, l) in [(Family::B, 2), (Family::C, 3), (Family::G, 2)] {
            let m = model(fam, l);
            let rs = &m.rs;
            for (ri, beta) in rs.all_roots().iter().enumerate() {
                for (rj, gamma) in rs.all_roots().iter().enumerate() {
                    let sum: Coeffs = beta.iter().zip(gamma).map(|(&x, &y)| x + y).collect();
                    let Some(rk) = rs.root_index(&sum) else { continue };
                    let br = m.bracket_basis(m.root_basis_index(ri), m.root_basis_index(rj));
                    assert_eq!(br.len(), 1);
                    assert_eq!(br[0].0, m.root_basis_index(rk));
                    // p = largest k with gamma - k*beta a root
                    let mut p = 0i64;
                    let mut probe: Coeffs =
                        gamma.iter().zip(beta).map(|(&x, &y)| x - y).collect();
                    while rs.is_root(&probe) {
                        p += 1;
                        probe = probe.iter().zip(beta).map(|(&x, &y)| x - y).collect();
                    }
                    assert_eq!(br[0].1.abs(), p + 1, "{fam}{l} N magnitude");
                }
            }
        }
    }

    #[test]
    fn e6_model_dimension() {
        let m = model(Family::E, 6);
        assert_eq!(m.dim, 78);
        let f4 = model(Family::F, 4);
        assert_eq!(f4.dim, 52);
    }

    #[test]
    fn pinned_flip_preserves_brackets_a3() {
        let m = model(Family::A, 3);
        let g = diagram_automorphism_group(&m.rs)
            .into_iter()
            .find(|a| a.order == 2)
            .unwrap();
        let p = outer_pinned(&m, &g).unwrap();
        assert_eq!(p.order, 2);
        let f = CycField::new(1);
        let apply = |v: &Vect| -> Vect {
            let mut out = m.zero_vect(&f);
            for (b, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let (t, s) = p.map[b];
                    out[t] = f.add(&out[t], &f.mul_i64(x, s));
                }
            }
            out
        };
        for a in 0..m.dim {
            let va = m.basis_vect(&f, a);
            for b in 0..m.dim {
                let vb = m.basis_vect(&f, b);
                let lhs = apply(&m.bracket(&f, &va, &vb));
                let rhs = m.bracket(&f, &apply(&va), &apply(&vb));
                assert_eq!(lhs, rhs, "bracket preservation at ({a},{b})");
            }
        }
    }

    #[test]
    fn triality_has_order_three() {
        let m = model(Family::D, 4);
        let p = pinned_automorphism(&m, &[2, 1, 3, 0]).unwrap();
        assert_eq!(p.order, 3);
    }

    #[test]
    fn inner_automorphism_dims_match_combinatorics() {
        use crate::kacdiag::parse_kac_spec;
        for spec in [
            "A2^(1) s=[1,1,1]",
            "A1^(1) s=[1,1]",
            "B2^(1) s=[1,0,1]",
            "E6^(1) s=[1,0,0,0,1,0,0]",
        ] {
            let kac = parse_kac_spec(spec).unwrap();
            let model = Arc::new(build_model(kac.base().family, kac.base().rank).unwrap());
            let aut = autom::build_automorphism(model, &kac).unwrap();
            let dims = kac.graded_dimensions_inner().unwrap();
            assert_eq!(aut.graded.dims, dims.dims, "{spec}");
        }
    }

    use std::sync::Arc;

    #[test]
    fn twisted_canonical_outer_dims() {
        use crate::kacdiag::parse_kac_spec;
        let kac = parse_kac_spec("E6^(2) s=[0,0,0,1,0]").unwrap();
        let model = Arc::new(build_model(Family::E, 6).unwrap());
        let aut = autom::build_automorphism(model, &kac).unwrap();
        assert!(aut.canonical_rep);
        assert_eq!(aut.graded.dims, vec![18, 20, 20, 20]);
        assert!(bracket_preservation_ok(&aut, 1000, 7));
    }

    #[test]
    fn a2_principal_nilpotent_pipeline() {
        use crate::kacdiag::parse_kac_spec;
        let kac = parse_kac_spec("A2^(1) s=[1,1,1]").unwrap();
        let model = Arc::new(build_model(Family::A, 2).unwrap());
        let aut = autom::build_automorphism(model.clone(), &kac).unwrap();
        let cert = regular_nilpotent_search(&aut, ProbeOptions::default())
            .unwrap()
            .expect("principal grading is N-regular");
        assert_eq!(cert.z_dims.iter().sum::<usize>(), 2);
        let triple = theta_adapted_sl2(&aut, &cert.element).unwrap();
        // h lands in g_0, f in g_{-1}
        assert_eq!(aut.graded.degree_of(&aut.field, &triple.h), Some(0));
        assert_eq!(aut.graded.degree_of(&aut.field, &triple.f), Some(2));
        let kw = section_basis(&aut, &triple.f).unwrap();
        assert_eq!(kw.len(), 1); // k_{-1} = 1 for the principal A2 class
    }

    #[test]
    fn a1_involution_probe() {
        use crate::kacdiag::parse_kac_spec;
        let kac = parse_kac_spec("A1^(1) s=[1,1]").unwrap();
        let model = Arc::new(build_model(Family::A, 1).unwrap());
        let aut = autom::build_automorphism(model, &kac).unwrap();
        assert_eq!(aut.graded.dims, vec![1, 2]);
        let probe = semisimple_probe(&aut, ProbeOptions::default()).unwrap();
        assert!(probe.s_regular);
        assert!(probe.locally_free);
        // m = 2 half-dimension identity on an arbitrary sample
        let f = &aut.field;
        let e = aut.model.basis_vect(f, 1);
        assert!(half_dimension_check(&aut, &e).unwrap());
    }

    #[test]
    fn jordan_parts_in_a2() {
        let m = Arc::new(model(Family::A, 2));
        let f = CycField::new(3);
        // mix a semisimple Cartan element with a commuting nilpotent: take
        // e_theta (highest root vector) plus h orthogonal... simplest: a
        // generic element and check the parts recombine
        let mut x = m.zero_vect(&f);
        x[0] = f.from_i64(1);
        x[2] = f.from_i64(1); // h_1 + e_{alpha1}-ish mix
        x[4] = f.from_i64(2);
        let (xs, xn) = jordan_decompose(&m, &f, &x).unwrap();
        for i in 0..m.dim {
            let s = f.add(&xs[i], &xn[i]);
            assert!(f.eq(&s, &x[i]));
        }
        assert!(ad_semisimple_minpoly(&m, &f, &xs));
        assert!(is_ad_nilpotent(&m, &f, &xn));
    }

    #[test]
    fn killing_form_pairs_opposite_root_spaces() {
        let m = model(Family::A, 2);
        let gram = m.killing_gram();
        // kappa(e_beta, e_gamma) nonzero only for gamma = -beta
        for ri in 0..6 {
            for rj in 0..6 {
                let nonzero = gram[m.root_basis_index(ri)][m.root_basis_index(rj)] != 0;
                assert_eq!(nonzero, m.rs.negative_of(ri) == rj);
            }
        }
        // kappa(h, e) = 0
        for i in 0..2 {
            for rj in 0..6 {
                assert_eq!(gram[i][m.root_basis_index(rj)], 0);
            }
        }
    }
}
