//! Explicit automorphism matrices over `Q(ζ_m)` and their graded
//! eigenbases.
//!
//! Every automorphism built here is monomial: each basis vector maps to a
//! scalar multiple of a single basis vector. Inner classes scale root
//! vectors by `ζ^deg`; outer classes compose the pinned diagram
//! automorphism with that scaling. Eigenbases therefore come from the
//! cycle decomposition of the underlying basis permutation, with no
//! elimination at all.

use super::{outer_pinned, LieAlgebraModel, Vect};
use crate::cyclotomic::{Cyc, CycField};
use crate::error::{Error, Result};
use crate::kacdiag::{class_matches_canonical, KacCoordinates};
use crate::linalg;
use crate::rootsys::{DiagramAutomorphism, Family, RootSystem};
use std::sync::Arc;

/// Exact basis of each `ζ^i`-eigenspace, plus the change of coordinates
/// into the eigenbasis (assembled cycle by cycle, so its inverse is cheap).
#[derive(Debug, Clone)]
pub struct GradedBasis {
    pub m: usize,
    pub dims: Vec<usize>,
    /// `vectors[d]` is the basis of the degree-`d` component, in model
    /// coordinates.
    pub vectors: Vec<Vec<Vect>>,
    /// Sparse rows of the inverse eigenbasis matrix, indexed like the
    /// flattened eigenbasis (degree-major).
    rows: Vec<Vec<(usize, Cyc)>>,
    /// Flattened index of eigen slot `(degree, position)`.
    offsets: Vec<usize>,
}

impl GradedBasis {
    /// Coordinates of `v` over the full eigenbasis, degree-major.
    pub fn eigen_coords(&self, f: &CycField, v: &Vect) -> Vec<Cyc> {
        self.rows
            .iter()
            .map(|row| {
                let mut s = f.zero();
                for (col, c) in row {
                    if !v[*col].is_zero() {
                        s = f.add(&s, &f.mul(c, &v[*col]));
                    }
                }
                s
            })
            .collect()
    }

    /// Coordinates of `v` inside the degree-`d` component; errors if `v`
    /// has any component outside that degree.
    pub fn coords_in_degree(&self, f: &CycField, v: &Vect, d: usize) -> Result<Vec<Cyc>> {
        let all = self.eigen_coords(f, v);
        let start = self.offsets[d];
        let end = start + self.dims[d];
        for (i, c) in all.iter().enumerate() {
            if (i < start || i >= end) && !c.is_zero() {
                return Err(Error::Inconsistency(format!(
                    "vector is not homogeneous of degree {d}"
                )));
            }
        }
        Ok(all[start..end].to_vec())
    }

    pub fn degree_of(&self, f: &CycField, v: &Vect) -> Option<usize> {
        let all = self.eigen_coords(f, v);
        let mut found = None;
        for d in 0..self.m {
            let start = self.offsets[d];
            if all[start..start + self.dims[d]].iter().any(|c| !c.is_zero()) {
                if found.is_some() {
                    return None;
                }
                found = Some(d);
            }
        }
        found
    }
}

/// An explicit finite-order automorphism of a model, as a monomial matrix
/// over `Q(ζ_m)`, together with its graded eigenbasis.
#[derive(Debug)]
pub struct Automorphism {
    pub model: Arc<LieAlgebraModel>,
    pub field: CycField,
    pub order: usize,
    pub kac: KacCoordinates,
    /// Whether the matrix is the canonical "height" representative of a
    /// twisted canonical class rather than the literal label dictionary.
    pub canonical_rep: bool,
    /// `θ(basis_b) = scalar · basis_target`.
    map: Vec<(usize, Cyc)>,
    pub graded: GradedBasis,
}

fn outer_perm(family: Family, rank: usize, twist: usize) -> Result<Vec<usize>> {
    match (family, twist) {
        (Family::A, 2) => Ok((0..rank).rev().collect()),
        (Family::D, 2) => {
            let mut p: Vec<usize> = (0..rank).collect();
            p.swap(rank - 2, rank - 1);
            Ok(p)
        }
        (Family::E, 2) if rank == 6 => Ok(vec![5, 1, 4, 3, 2, 0]),
        (Family::D, 3) if rank == 4 => Ok(vec![2, 1, 3, 0]),
        _ => Err(Error::UnsupportedTwist {
            family: family.letter(),
            rank,
            twist,
        }),
    }
}

pub fn build_automorphism(
    model: Arc<LieAlgebraModel>,
    kac: &KacCoordinates,
) -> Result<Automorphism> {
    let rs = &model.rs;
    if rs.family != kac.base().family || rs.rank != kac.base().rank {
        return Err(Error::Precondition(format!(
            "model is {} but the labels describe {}",
            rs.type_name(),
            kac.base().type_name()
        )));
    }
    let m = kac.order();
    let field = CycField::new(m);
    let l = rs.rank;
    let twist = kac.twist();

    let mut map: Vec<(usize, Cyc)> = Vec::with_capacity(model.dim);
    let mut canonical_rep = false;
    if twist == 1 {
        for i in 0..l {
            map.push((i, field.one()));
        }
        for (ri, beta) in rs.all_roots().iter().enumerate() {
            let deg = kac.root_degree(beta, m);
            map.push((model.root_basis_index(ri), field.zeta_pow(deg as i64)));
        }
    } else {
        let perm = outer_perm(rs.family, rs.rank, twist)?;
        let pinned = outer_pinned(&model, &DiagramAutomorphism {
            perm: perm.clone(),
            order: twist,
        })?;
        if pinned.order != twist {
            return Err(Error::Inconsistency("pinned order != twist".into()));
        }
        canonical_rep = class_matches_canonical(kac);
        if !canonical_rep && !(rs.family == Family::E && rs.rank == 6) {
            return Err(Error::Precondition(format!(
                "outer labels for {} are supported only for the canonical N-regular class",
                kac.diagram.type_label()
            )));
        }
        for i in 0..l {
            map.push((perm[i], field.one()));
        }
        for (ri, beta) in rs.all_roots().iter().enumerate() {
            let deg = if canonical_rep {
                // the height representative: θ(e_β) = ζ^{ht β} γ̂(e_β)
                rs.height(beta).rem_euclid(m as i64) as usize
            } else {
                kac.root_degree(beta, m)
            };
            let (t, s) = pinned.map[model.root_basis_index(ri)];
            let scalar = field.mul_i64(&field.zeta_pow(deg as i64), s);
            map.push((t, scalar));
        }
    }

    let graded = graded_basis_from_cycles(&model, &field, &map, m)?;
    let aut = Automorphism {
        model,
        field,
        order: m,
        kac: kac.clone(),
        canonical_rep,
        map,
        graded,
    };
    aut.check_order()?;
    aut.check_fixed_type()?;
    Ok(aut)
}

impl Automorphism {
    pub fn apply(&self, v: &Vect) -> Vect {
        let f = &self.field;
        let mut out = vec![f.zero(); v.len()];
        for (b, x) in v.iter().enumerate() {
            if !x.is_zero() {
                let (t, s) = &self.map[b];
                out[*t] = f.add(&out[*t], &f.mul(x, s));
            }
        }
        out
    }

    pub fn image_of_basis(&self, b: usize) -> &(usize, Cyc) {
        &self.map[b]
    }

    /// The matrix order must equal the declared class order.
    fn check_order(&self) -> Result<()> {
        let f = &self.field;
        let m = self.order;
        let mut overall = 1usize;
        let mut seen = vec![false; self.map.len()];
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut idx = start;
            let mut prod = f.one();
            let mut len = 0usize;
            loop {
                seen[idx] = true;
                let (t, s) = &self.map[idx];
                prod = f.mul(&prod, s);
                idx = *t;
                len += 1;
                if idx == start {
                    break;
                }
            }
            let t_exp = f
                .as_zeta_power(&prod)
                .ok_or_else(|| Error::Inconsistency("cycle scalar is not a root of unity".into()))?;
            // gcd(m, 0) = m, so scalar-1 cycles contribute their length
            let cycle_order = len * (m / gcd(m, t_exp));
            overall = lcm(overall, cycle_order);
        }
        if overall != m {
            return Err(Error::Inconsistency(format!(
                "matrix order {overall} != declared class order {m}"
            )));
        }
        Ok(())
    }

    /// dim and rank of the fixed subalgebra must match the white-subdiagram
    /// reading of the labels.
    fn check_fixed_type(&self) -> Result<()> {
        let ty = self.kac.fixed_subalgebra_type();
        let mut expect_dim = ty.center_dim;
        let mut expect_rank = ty.center_dim;
        for &(fam, r) in &ty.simple_factors {
            let rs = RootSystem::new(fam, r)?;
            expect_dim += rs.dim();
            expect_rank += r;
        }
        let got_dim = self.graded.dims[0];
        if got_dim != expect_dim {
            return Err(Error::Inconsistency(format!(
                "fixed subalgebra has dim {got_dim}, labels predict {expect_dim}"
            )));
        }
        // rank of g_0 = number of cycles in the Cartan permutation
        let l = self.model.rank();
        let mut seen = vec![false; l];
        let mut cartan_orbits = 0usize;
        for i in 0..l {
            if seen[i] {
                continue;
            }
            cartan_orbits += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.map[j].0;
            }
        }
        if cartan_orbits != expect_rank {
            return Err(Error::Inconsistency(format!(
                "fixed subalgebra has rank {cartan_orbits}, labels predict {expect_rank}"
            )));
        }
        Ok(())
    }
}

fn graded_basis_from_cycles(
    model: &LieAlgebraModel,
    f: &CycField,
    map: &[(usize, Cyc)],
    m: usize,
) -> Result<GradedBasis> {
    let dim = model.dim;
    let mut buckets: Vec<Vec<Vect>> = vec![Vec::new(); m];
    // collect inverse-row data alongside: (degree, row entries)
    let mut pending_rows: Vec<(usize, Vec<(usize, Cyc)>)> = Vec::new();

    let mut seen = vec![false; dim];
    for start in 0..dim {
        if seen[start] {
            continue;
        }
        // walk the cycle
        let mut indices = Vec::new();
        let mut scalars = Vec::new();
        let mut idx = start;
        loop {
            seen[idx] = true;
            indices.push(idx);
            let (t, s) = &map[idx];
            scalars.push(s.clone());
            idx = *t;
            if idx == start {
                break;
            }
        }
        let k = indices.len();
        if m % k != 0 {
            return Err(Error::Inconsistency(
                "basis cycle length does not divide the order".into(),
            ));
        }
        let mut prod = f.one();
        for s in &scalars {
            prod = f.mul(&prod, s);
        }
        let t_exp = f
            .as_zeta_power(&prod)
            .ok_or_else(|| Error::Inconsistency("cycle scalar not a power of ζ".into()))?;
        if t_exp % k != 0 {
            return Err(Error::Inconsistency(
                "cycle scalar exponent not divisible by the cycle length".into(),
            ));
        }
        // eigenvalues ζ^u with u = t/k + j·m/k
        let mut xmat: Vec<Vec<Cyc>> = Vec::with_capacity(k); // rows t, cols j
        for _ in 0..k {
            xmat.push(vec![f.zero(); k]);
        }
        let mut degs = Vec::with_capacity(k);
        for j in 0..k {
            let u = (t_exp / k + j * (m / k)) % m;
            degs.push(u);
            // x_0 = 1, x_{t+1} = x_t c_t ζ^{-u}
            let mut x = f.one();
            let zinv = f.zeta_pow(-(u as i64));
            for t in 0..k {
                xmat[t][j] = x.clone();
                x = f.mul(&f.mul(&x, &scalars[t]), &zinv);
            }
            let vect: Vect = {
                let mut v = vec![f.zero(); dim];
                for (t, &bi) in indices.iter().enumerate() {
                    v[bi] = xmat[t][j].clone();
                }
                v
            };
            buckets[u].push(vect);
        }
        // inverse of the k×k cycle block gives the eigen-coordinate rows
        let inv = linalg::inverse(f, &xmat)
            .ok_or_else(|| Error::Inconsistency("cycle eigenbasis not invertible".into()))?;
        for (j, &u) in degs.iter().enumerate() {
            let row: Vec<(usize, Cyc)> = indices
                .iter()
                .enumerate()
                .map(|(t, &bi)| (bi, inv[j][t].clone()))
                .collect();
            // position within the bucket: it was just pushed j-th for this
            // cycle; record and fix up after all cycles are collected
            pending_rows.push((u * dim + (buckets[u].len() - 1), row));
        }
    }

    let dims: Vec<usize> = buckets.iter().map(|b| b.len()).collect();
    if dims.iter().sum::<usize>() != dim {
        return Err(Error::Inconsistency("graded dimensions do not sum to dim".into()));
    }
    let mut offsets = vec![0usize; m];
    for d in 1..m {
        offsets[d] = offsets[d - 1] + dims[d - 1];
    }
    let mut rows: Vec<Vec<(usize, Cyc)>> = vec![Vec::new(); dim];
    for (key, row) in pending_rows {
        let (u, pos) = (key / dim, key % dim);
        rows[offsets[u] + pos] = row;
    }
    Ok(GradedBasis {
        m,
        dims,
        vectors: buckets,
        rows,
        offsets,
    })
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
