//! Constructive certificates on top of an explicit automorphism: graded
//! centralizers, the randomized regular-semisimple probe, regular
//! nilpotent search, θ-adapted sl2-triples, section bases, the
//! orbit-dimension constancy report, and exact Jordan decomposition at
//! small rank.
//!
//! Every certificate is verified exactly before it is returned, so a
//! false positive is impossible; absence of a certificate is merely
//! inconclusive.

use super::autom::Automorphism;
use super::{LieAlgebraModel, Vect};
use crate::cyclotomic::{Cyc, CycField};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct ProbeOptions {
    pub seed: u64,
    pub trials: usize,
    /// Height bound for sampled rational coefficients.
    pub coeff_height: i64,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            seed: 1,
            trials: 8,
            coeff_height: 7,
        }
    }
}

/// Matrix of `ad x : g_from -> g_to` in the graded eigenbases, where `x`
/// is homogeneous of degree `to - from`.
pub fn ad_block(aut: &Automorphism, x: &Vect, from: usize, to: usize) -> Result<Mat> {
    let f = &aut.field;
    let gb = &aut.graded;
    let cols: Vec<Vec<Cyc>> = gb.vectors[from]
        .iter()
        .map(|v| {
            let w = aut.model.bracket(f, x, v);
            gb.coords_in_degree(f, &w, to)
        })
        .collect::<Result<_>>()?;
    let rows = gb.dims[to];
    Ok((0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect())
}

/// Graded centralizer dimensions of a homogeneous `x` of degree `d`:
/// `dim z(x)_i = dim g_i - rank(ad x : g_i -> g_{i+d})`.
pub fn centralizer_graded_dims(aut: &Automorphism, x: &Vect, x_deg: usize) -> Result<Vec<usize>> {
    let m = aut.order;
    let f = &aut.field;
    (0..m)
        .map(|i| {
            let to = (i + x_deg) % m;
            let block = ad_block(aut, x, i, to)?;
            Ok(aut.graded.dims[i] - linalg::rank(f, &block))
        })
        .collect()
}

/// Basis of the full centralizer of a homogeneous `x`, as the union of the
/// per-degree kernels, in model coordinates.
pub fn centralizer_basis(aut: &Automorphism, x: &Vect, x_deg: usize) -> Result<Vec<Vect>> {
    let m = aut.order;
    let f = &aut.field;
    let gb = &aut.graded;
    let mut out = Vec::new();
    for i in 0..m {
        let to = (i + x_deg) % m;
        let block = ad_block(aut, x, i, to)?;
        for kv in linalg::kernel_basis(f, &block) {
            let mut v = aut.model.zero_vect(f);
            for (c, basis_vec) in kv.iter().zip(&gb.vectors[i]) {
                if !c.is_zero() {
                    for (vi, bi) in v.iter_mut().zip(basis_vec) {
                        let t = f.mul(c, bi);
                        *vi = f.add(vi, &t);
                    }
                }
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// Exact regular-semisimplicity test for an element whose centralizer has
/// dimension equal to the rank: the centralizer is a Cartan subalgebra
/// exactly when the Killing form is nondegenerate on it (the nilpotent
/// part of the element always sits in the radical of that restriction).
pub fn killing_nondegenerate_on(model: &LieAlgebraModel, f: &CycField, basis: &[Vect]) -> bool {
    let n = basis.len();
    let mut gram = vec![vec![f.zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = model.killing(f, &basis[i], &basis[j]);
            gram[i][j] = v.clone();
            gram[j][i] = v;
        }
    }
    !linalg::det(f, &gram).is_zero()
}

#[derive(Debug, Clone)]
pub struct ProbeOutcome {
    pub s_regular: bool,
    pub locally_free: bool,
    pub trials_run: usize,
    /// Componentwise-minimal graded centralizer dimensions observed.
    pub generic_z_dims: Vec<usize>,
    /// Graded centralizer dimensions of the regular semisimple witness.
    pub witness_z_dims: Option<Vec<usize>>,
}

/// Sample exact rational elements of `g_1` with a fixed seed; certify
/// S-regularity on the first witness with `dim z(x) = rank` and a
/// semisimple `ad x`, and local freeness on the first witness with
/// `z(x)_0 = 0`. Negative outcomes carry the trial metadata.
pub fn semisimple_probe(aut: &Automorphism, opts: ProbeOptions) -> Result<ProbeOutcome> {
    let f = &aut.field;
    let m = aut.order;
    let deg1 = 1 % m;
    let rank = aut.model.rank();
    let g1 = &aut.graded.vectors[deg1];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut outcome = ProbeOutcome {
        s_regular: false,
        locally_free: false,
        trials_run: 0,
        generic_z_dims: aut.graded.dims.clone(),
        witness_z_dims: None,
    };
    for _ in 0..opts.trials {
        outcome.trials_run += 1;
        let x = random_element(f, &aut.model, g1, &mut rng, opts.coeff_height);
        let zdims = centralizer_graded_dims(aut, &x, deg1)?;
        if zdims.iter().sum::<usize>() < outcome.generic_z_dims.iter().sum::<usize>() {
            outcome.generic_z_dims = zdims.clone();
        }
        if zdims[0] == 0 {
            outcome.locally_free = true;
        }
        if !outcome.s_regular && zdims.iter().sum::<usize>() == rank {
            let z = centralizer_basis(aut, &x, deg1)?;
            if killing_nondegenerate_on(&aut.model, f, &z) {
                outcome.s_regular = true;
                outcome.witness_z_dims = Some(zdims);
            }
        }
        if outcome.s_regular && outcome.locally_free {
            break;
        }
    }
    Ok(outcome)
}

fn random_element(
    f: &CycField,
    model: &LieAlgebraModel,
    basis: &[Vect],
    rng: &mut ChaCha8Rng,
    height: i64,
) -> Vect {
    let mut x = model.zero_vect(f);
    for v in basis {
        let num = rng.gen_range(-height..=height);
        let den = rng.gen_range(1..=height);
        if num == 0 {
            continue;
        }
        let c = f.from_ratio(num, den);
        for (xi, vi) in x.iter_mut().zip(v) {
            if !vi.is_zero() {
                let t = f.mul(&c, vi);
                *xi = f.add(xi, &t);
            }
        }
    }
    x
}

/// Exact nilpotency test: `(ad x)^(2 m_l + 1)` annihilates every basis
/// vector, the bound coming from the highest exponent.
pub fn is_ad_nilpotent(model: &LieAlgebraModel, f: &CycField, x: &Vect) -> bool {
    let power = 2 * model.rs.exponents()[model.rank() - 1] + 1;
    for b in 0..model.dim {
        let mut v = model.basis_vect(f, b);
        for _ in 0..power {
            if v.iter().all(|c| c.is_zero()) {
                break;
            }
            v = model.bracket(f, x, &v);
        }
        if v.iter().any(|c| !c.is_zero()) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct NilpotentCertificate {
    pub element: Vect,
    pub z_dims: Vec<usize>,
}

/// Search for a regular nilpotent element of `g_1`. A returned certificate
/// is definitive (`dim z(e) = rank` is verified exactly); absence is not.
///
/// Search order: for inner classes, a combinatorial hunt for a simple
/// system of degree-1 roots (any such set sums to a regular nilpotent);
/// for the canonical representative of a twisted class, the sum of the
/// simple root vectors; then 0/1 and random-coefficient patterns over the
/// positive part of `g_1`, and finally mixed random samples gated by the
/// exact nilpotency test.
pub fn regular_nilpotent_search(
    aut: &Automorphism,
    opts: ProbeOptions,
) -> Result<Option<NilpotentCertificate>> {
    let f = &aut.field;
    let m = aut.order;
    let deg1 = 1 % m;
    let rank = aut.model.rank();
    let model = &aut.model;

    let verify = |e: &Vect| -> Result<Option<NilpotentCertificate>> {
        if e.iter().all(|c| c.is_zero()) {
            return Ok(None);
        }
        let zdims = centralizer_graded_dims(aut, e, deg1)?;
        if zdims.iter().sum::<usize>() == rank {
            Ok(Some(NilpotentCertificate {
                element: e.clone(),
                z_dims: zdims,
            }))
        } else {
            Ok(None)
        }
    };

    if aut.kac.twist() == 1 {
        if let Some(base) = degree_one_simple_system(aut) {
            let mut e = model.zero_vect(f);
            for ri in base {
                e[model.root_basis_index(ri)] = f.one();
            }
            if let Some(cert) = verify(&e)? {
                return Ok(Some(cert));
            }
        }
    } else if aut.canonical_rep {
        // the canonical representative scales every simple root vector by ζ
        let mut e = model.zero_vect(f);
        for i in 0..rank {
            let mut unit = vec![0i64; rank];
            unit[i] = 1;
            let ri = model.rs.root_index(&unit).expect("simple root");
            e[model.root_basis_index(ri)] = f.one();
        }
        if let Some(cert) = verify(&e)? {
            return Ok(Some(cert));
        }
    }

    // positive part of g_1: eigenbasis vectors supported on positive roots
    let positive: Vec<Vect> = aut.graded.vectors[deg1]
        .iter()
        .filter(|v| {
            v.iter().enumerate().all(|(b, c)| {
                c.is_zero() || (b >= rank && b - rank < model.rs.n_positive())
            })
        })
        .cloned()
        .collect();
    let mut candidates: Vec<Vect> = Vec::new();
    if !positive.is_empty() {
        // full sum
        let mut e = model.zero_vect(f);
        for v in &positive {
            for (ei, vi) in e.iter_mut().zip(v) {
                *ei = f.add(ei, vi);
            }
        }
        candidates.push(e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e3779b9);
    for _ in 0..opts.trials {
        if positive.is_empty() {
            break;
        }
        candidates.push(random_element(f, model, &positive, &mut rng, opts.coeff_height));
    }
    for e in &candidates {
        // positive support keeps these inside the nilradical of a Borel
        if let Some(cert) = verify(e)? {
            return Ok(Some(cert));
        }
    }
    // mixed samples need the exact nilpotency gate
    for _ in 0..opts.trials.min(4) {
        let x = random_element(f, model, &aut.graded.vectors[deg1], &mut rng, 2);
        if is_ad_nilpotent(model, f, &x) {
            if let Some(cert) = verify(&x)? {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// Find `rank` many roots of degree 1 forming a simple system (pairwise
/// obtuse, connected, and diagram-isomorphic to the base). Such a set is a
/// Weyl image of the base, so the sum of its root vectors is a regular
/// nilpotent lying in `g_1`.
fn degree_one_simple_system(aut: &Automorphism) -> Option<Vec<usize>> {
    let rs = &aut.model.rs;
    let m = aut.order;
    let deg1 = 1 % m;
    let rank = rs.rank;
    let cands: Vec<usize> = (0..rs.all_roots().len())
        .filter(|&ri| aut.kac.root_degree(&rs.all_roots()[ri], m) == deg1)
        .collect();
    if cands.len() < rank {
        return None;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(rank);
    let mut budget = 500_000usize;
    fn rec(
        rs: &crate::rootsys::RootSystem,
        cands: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        budget: &mut usize,
    ) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if chosen.len() == rs.rank {
            // build the pairing matrix and classify it
            let gcm: Vec<Vec<i64>> = chosen
                .iter()
                .map(|&i| {
                    chosen
                        .iter()
                        .map(|&j| {
                            let bi = &rs.all_roots()[i];
                            let bj = &rs.all_roots()[j];
                            2 * rs.inner(bi, bj) / rs.inner(bi, bi)
                        })
                        .collect()
                })
                .collect();
            // connectivity
            let n = gcm.len();
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    if !seen[v] && gcm[u][v] != 0 {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            if !seen.iter().all(|&s| s) {
                return false;
            }
            return crate::rootsys::classify_gcm(&gcm) == Some((rs.family, rs.rank));
        }
        for (pos, &cand) in cands.iter().enumerate().skip(start) {
            let beta = &rs.all_roots()[cand];
            let ok = chosen.iter().all(|&c| {
                let gamma = &rs.all_roots()[c];
                rs.inner(beta, gamma) <= 0
            });
            if ok {
                chosen.push(cand);
                if rec(rs, cands, pos + 1, chosen, budget) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if rec(rs, &cands, 0, &mut chosen, &mut budget) {
        Some(chosen)
    } else {
        None
    }
}

#[derive(Debug, Clone)]
pub struct Sl2Triple {
    pub e: Vect,
    pub h: Vect,
    pub f: Vect,
}

/// Complete a nilpotent `e ∈ g_1` to a θ-adapted sl2-triple by exact
/// linear solves within the graded pieces: first `f'` with
/// `(ad e)^2 f' = -2e` gives `h = [e, f'] ∈ g_0`, then `f ∈ g_{-1}` solves
/// `[e,f] = h`, `[h,f] = -2f`.
pub fn theta_adapted_sl2(aut: &Automorphism, e: &Vect) -> Result<Sl2Triple> {
    let f = &aut.field;
    let m = aut.order;
    let deg1 = 1 % m;
    let degm1 = (m - 1) % m;
    let gb = &aut.graded;
    let model = &aut.model;

    // (ad e)^2 : g_{-1} -> g_1
    let b1 = ad_block(aut, e, degm1, 0)?;
    let b2 = ad_block(aut, e, 0, deg1)?;
    let sq = linalg::mat_mul(f, &b2, &b1);
    let rhs: Vec<Cyc> = gb
        .coords_in_degree(f, e, deg1)?
        .into_iter()
        .map(|c| f.mul_i64(&c, -2))
        .collect();
    let fp_coords = linalg::solve(f, &sq, &rhs).ok_or_else(|| {
        Error::Inconsistency("no solution for the sl2 completion: e is not nilpotent in g_1".into())
    })?;
    let fprime = from_degree_coords(model, f, gb, degm1, &fp_coords);
    let h = model.bracket(f, e, &fprime);

    // now f: [e, f] = h and [h, f] = -2 f, both linear in f
    let be = ad_block(aut, e, degm1, 0)?;
    let bh = ad_block(aut, &h, degm1, degm1)?;
    let n_m1 = gb.dims[degm1];
    let mut stacked: Mat = Vec::new();
    let mut rhs2: Vec<Cyc> = Vec::new();
    let h_coords = gb.coords_in_degree(f, &h, 0)?;
    for (r, row) in be.iter().enumerate() {
        stacked.push(row.clone());
        rhs2.push(h_coords[r].clone());
    }
    for (r, row) in bh.iter().enumerate() {
        let mut row = row.clone();
        row[r] = f.add(&row[r], &f.from_i64(2));
        stacked.push(row);
        rhs2.push(f.zero());
    }
    let _ = n_m1;
    let f_coords = linalg::solve(f, &stacked, &rhs2)
        .ok_or_else(|| Error::Inconsistency("sl2 closure system inconsistent".into()))?;
    let fvec = from_degree_coords(model, f, gb, degm1, &f_coords);

    let triple = Sl2Triple {
        e: e.clone(),
        h,
        f: fvec,
    };
    verify_sl2(model, f, &triple)?;
    Ok(triple)
}

fn from_degree_coords(
    model: &LieAlgebraModel,
    f: &CycField,
    gb: &super::autom::GradedBasis,
    deg: usize,
    coords: &[Cyc],
) -> Vect {
    let mut v = model.zero_vect(f);
    for (c, basis_vec) in coords.iter().zip(&gb.vectors[deg]) {
        if !c.is_zero() {
            for (vi, bi) in v.iter_mut().zip(basis_vec) {
                let t = f.mul(c, bi);
                *vi = f.add(vi, &t);
            }
        }
    }
    v
}

fn verify_sl2(model: &LieAlgebraModel, f: &CycField, t: &Sl2Triple) -> Result<()> {
    let he = model.bracket(f, &t.h, &t.e);
    let hf = model.bracket(f, &t.h, &t.f);
    let ef = model.bracket(f, &t.e, &t.f);
    for i in 0..model.dim {
        let c1 = f.sub(&he[i], &f.mul_i64(&t.e[i], 2));
        let c2 = f.add(&hf[i], &f.mul_i64(&t.f[i], 2));
        let c3 = f.sub(&ef[i], &t.h[i]);
        if !c1.is_zero() || !c2.is_zero() || !c3.is_zero() {
            return Err(Error::Inconsistency("sl2 relations fail".into()));
        }
    }
    Ok(())
}

/// Basis of `z(f) ∩ g_1`, the linear part of the section through `e`.
pub fn section_basis(aut: &Automorphism, f_elt: &Vect) -> Result<Vec<Vect>> {
    let f = &aut.field;
    let m = aut.order;
    let deg1 = 1 % m;
    let gb = &aut.graded;
    let block = ad_block(aut, f_elt, deg1, 0)?;
    let kernel = linalg::kernel_basis(f, &block);
    Ok(kernel
        .into_iter()
        .map(|k| from_degree_coords(&aut.model, f, gb, deg1, &k))
        .collect())
}

/// For semisimple `x ∈ g_1`: the differences `dim g_k - dim z(x)_k` must
/// not depend on `k`. Returns the difference vector for reporting.
pub fn orbit_dim_differences(aut: &Automorphism, x: &Vect) -> Result<Vec<i64>> {
    let m = aut.order;
    let zdims = centralizer_graded_dims(aut, x, 1 % m)?;
    Ok((0..m)
        .map(|k| aut.graded.dims[k] as i64 - zdims[k] as i64)
        .collect())
}

/// The order-2 identity `dim [g_0, x] = dim [g, x] / 2`, valid for every
/// `x ∈ g_1` when m = 2.
pub fn half_dimension_check(aut: &Automorphism, x: &Vect) -> Result<bool> {
    if aut.order != 2 {
        return Err(Error::Precondition("half-dimension identity needs order 2".into()));
    }
    let f = &aut.field;
    let b0 = ad_block(aut, x, 0, 1)?;
    let b1 = ad_block(aut, x, 1, 0)?;
    let r0 = linalg::rank(f, &b0);
    let r1 = linalg::rank(f, &b1);
    Ok(2 * r0 == r0 + r1)
}

// ---------------------------------------------------------------------------
// Exact Jordan decomposition (for small ranks)
// ---------------------------------------------------------------------------

/// Semisimplicity of `ad x` by the stated squarefreeness test: the minimal
/// polynomial is coprime to its derivative.
pub fn ad_semisimple_minpoly(model: &LieAlgebraModel, f: &CycField, x: &Vect) -> bool {
    let a = model.ad_matrix(f, x);
    let mu = linalg::minimal_polynomial(f, &a);
    linalg::poly_is_squarefree(f, &mu)
}

/// Jordan decomposition `x = x_s + x_n` via the separable-part Newton
/// iteration on `ad x`, then pulling the semisimple part back through the
/// (injective) adjoint map. Intended for models of rank <= 3.
pub fn jordan_decompose(model: &LieAlgebraModel, f: &CycField, x: &Vect) -> Result<(Vect, Vect)> {
    let a = model.ad_matrix(f, x);
    let mu = linalg::minimal_polynomial(f, &a);
    let sep = linalg::poly_separable_part(f, &mu);
    let mut s = a.clone();
    for _ in 0..12 {
        let gs = linalg::poly_apply_to_matrix(f, &sep, &s);
        if gs.iter().flatten().all(|c| c.is_zero()) {
            break;
        }
        let dsep = linalg::poly_derivative(f, &sep);
        let dgs = linalg::poly_apply_to_matrix(f, &dsep, &s);
        let inv = linalg::inverse(f, &dgs)
            .ok_or_else(|| Error::Inconsistency("derivative not invertible in Jordan iteration".into()))?;
        let delta = linalg::mat_mul(f, &gs, &inv);
        for i in 0..s.len() {
            for j in 0..s.len() {
                s[i][j] = f.sub(&s[i][j], &delta[i][j]);
            }
        }
    }
    let gs = linalg::poly_apply_to_matrix(f, &sep, &s);
    if !gs.iter().flatten().all(|c| c.is_zero()) {
        return Err(Error::Inconsistency("Jordan iteration did not converge".into()));
    }
    // solve ad(y) = S: stack the columns of the adjoint map
    let dim = model.dim;
    let mut system: Mat = Vec::with_capacity(dim * dim);
    let mut rhs: Vec<Cyc> = Vec::with_capacity(dim * dim);
    // precompute ad of each basis vector as columns
    let ad_basis: Vec<Mat> = (0..dim)
        .map(|b| {
            let v = model.basis_vect(f, b);
            model.ad_matrix(f, &v)
        })
        .collect();
    for r in 0..dim {
        for c in 0..dim {
            let row: Vec<Cyc> = (0..dim).map(|b| ad_basis[b][r][c].clone()).collect();
            if row.iter().all(|x| x.is_zero()) && s[r][c].is_zero() {
                continue;
            }
            system.push(row);
            rhs.push(s[r][c].clone());
        }
    }
    let y =
        linalg::solve(f, &system, &rhs).ok_or_else(|| Error::Inconsistency("ad(y) = S unsolvable".into()))?;
    let xs = y;
    let xn: Vect = x.iter().zip(&xs).map(|(a, b)| f.sub(a, b)).collect();
    // sanity: parts commute and x_n is nilpotent
    let comm = model.bracket(f, &xs, &xn);
    if comm.iter().any(|c| !c.is_zero()) {
        return Err(Error::Inconsistency("Jordan parts do not commute".into()));
    }
    if !is_ad_nilpotent(model, f, &xn) {
        return Err(Error::Inconsistency("nilpotent part is not nilpotent".into()));
    }
    Ok((xs, xn))
}

/// Bracket preservation of the automorphism: exhaustive over basis pairs
/// at rank <= 4, sampled (seeded, at least the requested count) above.
pub fn bracket_preservation_ok(aut: &Automorphism, sample_pairs: usize, seed: u64) -> bool {
    let f = &aut.field;
    let model = &aut.model;
    let dim = model.dim;
    let check_pair = |a: usize, b: usize| -> bool {
        let va = model.basis_vect(f, a);
        let vb = model.basis_vect(f, b);
        let lhs = aut.apply(&model.bracket(f, &va, &vb));
        let rhs = model.bracket(f, &aut.apply(&va), &aut.apply(&vb));
        lhs.iter().zip(&rhs).all(|(x, y)| f.eq(x, y))
    };
    if model.rank() <= 4 {
        for a in 0..dim {
            for b in a..dim {
                if !check_pair(a, b) {
                    return false;
                }
            }
        }
        true
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..sample_pairs.max(1000) {
            let a = rng.gen_range(0..dim);
            let b = rng.gen_range(0..dim);
            if !check_pair(a, b) {
                return false;
            }
        }
        true
    }
}
