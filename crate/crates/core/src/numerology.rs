//! Closed-form invariants of a graded class: the factors by which an outer
//! component scales the basic adjoint invariants, the `k_i`/`l_i` counting
//! sequences, dimension identities, regularity consistency checks, the
//! invariant degrees of the θ-group, little-Weyl exponents and coexponents,
//! the ideal-generator selector, and identification of the little Weyl
//! group in the Shephard–Todd catalogue.
//!
//! Everything here is integer arithmetic on exponents; roots of unity are
//! carried as integer exponents of the distinguished primitive root.

use crate::error::{Error, Result};
use crate::kacdiag::GradedDims;
use crate::rootsys::{DiagramAutomorphism, Family, RootSystem};
use serde::{Deserialize, Serialize};

/// Roots of unity `ε_1..ε_l` attached to the degrees `d_1..d_l`, recording
/// how a chosen outer component scales the basic adjoint invariants.
/// `ε_i = exp(2πi t_i / r)`; all `t_i = 0` for inner components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factors {
    /// Order `r` of the component in the outer automorphism group.
    pub component_order: usize,
    /// Pairs `(m_i, t_i)`: exponent and the ε-exponent in `Z_r`.
    pub pairs: Vec<(usize, usize)>,
}

impl Factors {
    pub fn trivial(exponents: &[usize]) -> Factors {
        Factors {
            component_order: 1,
            pairs: exponents.iter().map(|&m| (m, 0)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }
}

/// Factors of the component of `Aut g` determined by a diagram symmetry.
///
/// Inner components scale nothing. For order-2 components: type A scales
/// the degree-d invariant by `(-1)^d`; type D negates exactly the Pfaffian
/// (degree l); type E6 negates the degree-5 and degree-9 invariants. The
/// order-3 component of D4 scales the two degree-4 invariants by ω and ω²
/// — which of the pair carries ω is a recorded basis convention, and every
/// downstream count is invariant under the swap.
pub fn factors_of(rs: &RootSystem, component: &DiagramAutomorphism) -> Result<Factors> {
    let r = component.order;
    let exps = rs.exponents();
    if r == 1 {
        return Ok(Factors::trivial(exps));
    }
    let pairs: Vec<(usize, usize)> = match (rs.family, r) {
        (Family::A, 2) => exps.iter().map(|&m| (m, (m + 1) % 2)).collect(),
        (Family::D, 2) => {
            // the Pfaffian has degree l, exponent l-1; negate exactly one copy
            let mut used = false;
            exps.iter()
                .map(|&m| {
                    if m == rs.rank - 1 && !used {
                        used = true;
                        (m, 1)
                    } else {
                        (m, 0)
                    }
                })
                .collect()
        }
        (Family::E, 2) if rs.rank == 6 => exps
            .iter()
            .map(|&m| (m, usize::from(m == 4 || m == 8)))
            .collect(),
        (Family::D, 3) if rs.rank == 4 => {
            // exponents (1,3,3,5): eigenvalues (1, ω, ω², 1)
            let t = [0usize, 1, 2, 0];
            exps.iter().zip(t).map(|(&m, ti)| (m, ti)).collect()
        }
        _ => {
            return Err(Error::Precondition(format!(
                "no factor rule for an order-{r} component of {}",
                rs.type_name()
            )))
        }
    };
    Ok(Factors {
        component_order: r,
        pairs,
    })
}

/// The two counting sequences over `Z_m`:
/// `k_i = #{j : ζ^(m_j - i) ε_j = 1}` and `l_i` likewise with `ε_j^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSequence {
    pub m: usize,
    pub k: Vec<usize>,
    pub l: Vec<usize>,
}

impl KSequence {
    pub fn k_at(&self, i: i64) -> usize {
        self.k[i.rem_euclid(self.m as i64) as usize]
    }

    pub fn l_at(&self, i: i64) -> usize {
        self.l[i.rem_euclid(self.m as i64) as usize]
    }

    pub fn k_minus_1(&self) -> usize {
        self.k_at(-1)
    }
}

pub fn k_sequence(m: usize, factors: &Factors) -> Result<KSequence> {
    let r = factors.component_order;
    if m == 0 || m % r != 0 {
        return Err(Error::TwistOrderMismatch { twist: r, order: m });
    }
    let shift = m / r;
    let mut k = vec![0usize; m];
    let mut l = vec![0usize; m];
    for &(mj, tj) in &factors.pairs {
        // ζ^(m_j - i) ε_j = 1  <=>  i ≡ m_j + t_j·m/r (mod m)
        k[(mj + tj * shift) % m] += 1;
        l[(mj + (r - tj) % r * shift) % m] += 1;
    }
    debug_assert_eq!(k.iter().sum::<usize>(), factors.rank());
    debug_assert_eq!(l.iter().sum::<usize>(), factors.rank());
    Ok(KSequence { m, k, l })
}

/// `D_i = k_(-i-1) - k_i`: the predicted successive dimension differences
/// under the N-regularity hypothesis. Sums to zero over a full period.
pub fn nregular_dim_differences(kseq: &KSequence) -> Vec<i64> {
    (0..kseq.m)
        .map(|i| kseq.k_at(-(i as i64) - 1) as i64 - kseq.k[i] as i64)
        .collect()
}

/// `dim g_0 = (dim g + Σ_{i=0}^{m-1} (m-1-2i) k_i) / m` for N-regular
/// classes. A non-integer value certifies that the hypothesis fails.
pub fn nregular_dim_g0(kseq: &KSequence, dim_g: usize) -> Result<usize> {
    let m = kseq.m as i64;
    let mut num = dim_g as i64;
    for (i, &ki) in kseq.k.iter().enumerate() {
        num += (m - 1 - 2 * i as i64) * ki as i64;
    }
    if num % m != 0 || num < 0 {
        return Err(Error::Precondition(format!(
            "dim formula gives {num}/{m}: the class is not N-regular"
        )));
    }
    Ok((num / m) as usize)
}

/// Necessary conditions for S-regularity: `k_i = k_(-i)`,
/// `dim g_0 - k_0 = (dim g - l)/m`, and `dim g_i + k_0 = dim g_0 + k_i`.
/// A `false` certifies non-S-regularity; `true` still needs an oracle
/// witness before the flag may be set.
pub fn sregular_consistency(dims: &GradedDims, kseq: &KSequence, dim_g: usize, rank: usize) -> bool {
    let m = kseq.m;
    debug_assert_eq!(dims.m, m);
    for i in 0..m {
        if kseq.k[i] != kseq.k_at(-(i as i64)) {
            return false;
        }
    }
    if (dim_g - rank) % m != 0 {
        return false;
    }
    let lhs = dims.dims[0] as i64 - kseq.k[0] as i64;
    if lhs != ((dim_g - rank) / m) as i64 {
        return false;
    }
    (0..m).all(|i| dims.dims[i] + kseq.k[0] == dims.dims[0] + kseq.k[i])
}

/// `k_(-1)`: an upper bound for the Cartan subspace dimension in all cases,
/// attained for N-regular or S-regular classes.
pub fn cartan_dim_bound(kseq: &KSequence) -> usize {
    kseq.k_minus_1()
}

/// Degrees of the free generators of the θ-group invariant algebra for an
/// N-regular class: `{d_j : ζ^(m_j + 1) ε_j = 1}`. Cardinality `k_(-1)`.
pub fn invariant_degrees_nregular(m: usize, factors: &Factors) -> Result<Vec<usize>> {
    let r = factors.component_order;
    if m % r != 0 {
        return Err(Error::TwistOrderMismatch { twist: r, order: m });
    }
    let shift = m / r;
    let mut out: Vec<usize> = factors
        .pairs
        .iter()
        .filter(|&&(mj, tj)| (mj + 1 + tj * shift) % m == 0)
        .map(|&(mj, _)| mj + 1)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Eigenvalue exponent multisets of θ on the centralizers `z(e)`, `z(h)`,
/// `z(f)` of a θ-adapted regular sl2-triple: `ζ^(m_i) ε_i^{-1}`,
/// `ε_i^{-1}`, and `ζ^(-m_i) ε_i^{-1}`.
pub fn centralizer_eigenvalues(
    m: usize,
    factors: &Factors,
) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let r = factors.component_order;
    if m % r != 0 {
        return Err(Error::TwistOrderMismatch { twist: r, order: m });
    }
    let shift = (m / r) as i64;
    let mi = m as i64;
    let reduce = |x: i64| x.rem_euclid(mi) as usize;
    let mut ze = Vec::new();
    let mut zh = Vec::new();
    let mut zf = Vec::new();
    for &(mj, tj) in &factors.pairs {
        let t = tj as i64 * shift;
        ze.push(reduce(mj as i64 - t));
        zh.push(reduce(-t));
        zf.push(reduce(-(mj as i64) - t));
    }
    ze.sort_unstable();
    zh.sort_unstable();
    zf.sort_unstable();
    Ok((ze, zh, zf))
}

/// Exponents of the little Weyl group for an N-regular class:
/// `{m_j : ε_j ζ^(m_j) = ζ^(-1)}`. Elementwise one less than the
/// invariant degrees.
pub fn little_weyl_exponents(m: usize, factors: &Factors) -> Result<Vec<usize>> {
    let r = factors.component_order;
    if m % r != 0 {
        return Err(Error::TwistOrderMismatch { twist: r, order: m });
    }
    let shift = m / r;
    let mut out: Vec<usize> = factors
        .pairs
        .iter()
        .filter(|&&(mj, tj)| (mj + tj * shift + 1) % m == 0)
        .map(|&(mj, _)| mj)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Coexponents of the little Weyl group: `{m_j : ε_j ζ^(m_j) = ζ}`.
/// Characterised only when the class is both N-regular and S-regular;
/// callers pass the certified S-flag and get a refusal otherwise (when
/// `k_1 > k_(-1)` no characterisation is known).
pub fn little_weyl_coexponents(
    m: usize,
    factors: &Factors,
    s_regular_certified: bool,
) -> Result<Vec<usize>> {
    if !s_regular_certified {
        return Err(Error::Precondition(
            "coexponents are only characterised for classes that are both N-regular and S-regular"
                .into(),
        ));
    }
    let r = factors.component_order;
    if m % r != 0 {
        return Err(Error::TwistOrderMismatch { twist: r, order: m });
    }
    let shift = m / r;
    let mut out: Vec<usize> = factors
        .pairs
        .iter()
        .filter(|&&(mj, tj)| (mj + tj * shift) % m == 1 % m)
        .map(|&(mj, _)| mj)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Indices `i` (into the degree list) with `ε_i ζ^(d_i) != 1`: the basic
/// invariants cutting out the closure of the saturation of a Cartan
/// subspace. The complement has cardinality `k_(-1)`.
pub fn ideal_generator_indices(m: usize, factors: &Factors) -> Result<Vec<usize>> {
    let r = factors.component_order;
    if m % r != 0 {
        return Err(Error::TwistOrderMismatch { twist: r, order: m });
    }
    let shift = m / r;
    let out: Vec<usize> = factors
        .pairs
        .iter()
        .enumerate()
        .filter(|&(_, &(mj, tj))| (mj + 1 + tj * shift) % m != 0)
        .map(|(i, _)| i)
        .collect();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Shephard–Todd identification
// ---------------------------------------------------------------------------

/// Exceptional irreducible complex reflection groups of rank <= 3:
/// (number, degrees, codegrees).
const EXCEPTIONAL: &[(u32, &[usize], &[usize])] = &[
    (4, &[4, 6], &[0, 2]),
    (5, &[6, 12], &[0, 6]),
    (6, &[4, 12], &[0, 8]),
    (7, &[12, 12], &[0, 12]),
    (8, &[8, 12], &[0, 4]),
    (9, &[8, 24], &[0, 16]),
    (10, &[12, 24], &[0, 12]),
    (11, &[24, 24], &[0, 24]),
    (12, &[6, 8], &[0, 10]),
    (13, &[8, 12], &[0, 16]),
    (14, &[6, 24], &[0, 18]),
    (15, &[12, 24], &[0, 24]),
    (16, &[20, 30], &[0, 10]),
    (17, &[20, 60], &[0, 40]),
    (18, &[30, 60], &[0, 30]),
    (19, &[60, 60], &[0, 60]),
    (20, &[12, 30], &[0, 18]),
    (21, &[12, 60], &[0, 48]),
    (22, &[12, 20], &[0, 28]),
    (23, &[2, 6, 10], &[0, 4, 8]),
    (24, &[4, 6, 14], &[0, 8, 10]),
    (25, &[6, 9, 12], &[0, 3, 6]),
    (26, &[6, 12, 18], &[0, 6, 12]),
    (27, &[6, 12, 30], &[0, 18, 24]),
];

/// Identify all irreducible complex reflection groups whose degree multiset
/// is `{exponents + 1}` and codegree multiset is `{coexponents - 1}`. The
/// catalogue holds the rank-<=-3 exceptional groups and the imprimitive
/// families `G(de,e,r)` in closed form; familiar Weyl/Coxeter names are
/// preferred where they coincide. An empty result means no irreducible
/// match (the group is reducible or beyond the catalogue).
pub fn shephard_todd_identify(exponents: &[usize], coexponents: &[usize]) -> Vec<String> {
    if exponents.len() != coexponents.len() || exponents.is_empty() {
        return vec![];
    }
    let mut degrees: Vec<usize> = exponents.iter().map(|m| m + 1).collect();
    degrees.sort_unstable();
    let codegrees_opt: Option<Vec<usize>> =
        coexponents.iter().map(|&c| c.checked_sub(1)).collect();
    let mut codegrees = match codegrees_opt {
        Some(v) => v,
        None => return vec![],
    };
    codegrees.sort_unstable();
    let rank = degrees.len();
    let mut names: Vec<String> = Vec::new();
    let mut push = |name: String, names: &mut Vec<String>| {
        if !names.contains(&name) {
            names.push(name);
        }
    };

    for &(num, degs, codegs) in EXCEPTIONAL {
        if degs == degrees.as_slice() && codegs == codegrees.as_slice() {
            let alias = if num == 23 { " (H3)" } else { "" };
            push(format!("G{num}{alias}"), &mut names);
        }
    }

    // the symmetric group family acting on its reflection representation
    if degrees == (2..=rank + 1).collect::<Vec<_>>() && codegrees == (0..rank).collect::<Vec<_>>() {
        push(format!("A{rank}"), &mut names);
    }

    if rank == 1 {
        // cyclic groups: degrees {d}, codegrees {0}
        let d = degrees[0];
        if codegrees == [0] && d >= 2 && d != 2 {
            push(format!("Z{d} = G({d},1,1)"), &mut names);
        } else if codegrees == [0] && d == 2 {
            push("A1".into(), &mut names);
        }
    } else {
        // imprimitive G(de,e,r): degrees de, 2de, .., (r-1)de, rd;
        // codegrees 0, de, .., (r-1)de for d > 1 and
        //           0, e, .., (r-2)e, (r-1)e - r for d = 1.
        let dmax = *degrees.last().unwrap();
        for de in 1..=dmax {
            for d in (1..=de).filter(|d| de % d == 0) {
                let e = de / d;
                if d == 1 && e == 1 {
                    continue; // G(1,1,r) is the symmetric group, handled above
                }
                let mut degs: Vec<usize> = (1..rank).map(|i| i * de).collect();
                degs.push(rank * d);
                degs.sort_unstable();
                if degs != degrees {
                    continue;
                }
                let mut codegs: Vec<usize> = if d > 1 {
                    (0..rank).map(|i| i * de).collect()
                } else {
                    let last = (rank - 1) * e;
                    if last < rank {
                        continue;
                    }
                    let mut v: Vec<usize> = (0..rank - 1).map(|i| i * e).collect();
                    v.push(last - rank);
                    v
                };
                codegs.sort_unstable();
                if codegs != codegrees {
                    continue;
                }
                let name = match (d, e, rank) {
                    (2, 1, r) => format!("B{r}"),
                    (1, 2, 3) => continue, // G(2,2,3) = A3
                    (1, 2, r) => format!("D{r}"),
                    (1, 3, 2) => continue, // G(3,3,2) = A2
                    (1, 4, 2) => continue, // G(4,4,2) = B2
                    (1, 6, 2) => "G2".into(),
                    (1, ee, 2) => format!("I2({ee})"),
                    _ => format!("G({de},{e},{rank})"),
                };
                push(name, &mut names);
            }
        }
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::diagram_automorphism_group;

    fn rs(f: Family, l: usize) -> RootSystem {
        RootSystem::new(f, l).unwrap()
    }

    fn outer(rsys: &RootSystem, order: usize) -> DiagramAutomorphism {
        diagram_automorphism_group(rsys)
            .into_iter()
            .find(|a| a.order == order)
            .unwrap()
    }

    #[test]
    fn e6_outer_factor_pairs() {
        let e6 = rs(Family::E, 6);
        let f = factors_of(&e6, &outer(&e6, 2)).unwrap();
        // (m_i, eps_i) = (1,1),(4,-1),(5,1),(7,1),(8,-1),(11,1)
        assert_eq!(
            f.pairs,
            vec![(1, 0), (4, 1), (5, 0), (7, 0), (8, 1), (11, 0)]
        );
    }

    #[test]
    fn a2_outer_factors_from_transpose_realization() {
        let a2 = rs(Family::A, 2);
        let f = factors_of(&a2, &outer(&a2, 2)).unwrap();
        // trace invariants of degree 2 and 3 pick up (-1)^k
        assert_eq!(f.pairs, vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn k_sequences_match_worked_values() {
        let e6 = rs(Family::E, 6);
        let inner = Factors::trivial(e6.exponents());
        let ks = k_sequence(4, &inner).unwrap();
        assert_eq!(ks.k, vec![2, 2, 0, 2]);

        let fout = factors_of(&e6, &outer(&e6, 2)).unwrap();
        let ks_out = k_sequence(4, &fout).unwrap();
        assert_eq!(ks_out.k, vec![0, 2, 2, 2]);
        assert_eq!(ks_out.k_minus_1(), 2);

        let e7 = rs(Family::E, 7);
        let ks7 = k_sequence(4, &Factors::trivial(e7.exponents())).unwrap();
        assert_eq!(ks7.k, vec![0, 5, 0, 2]);
        assert_eq!(ks7.k_minus_1(), 2);

        let ks5 = k_sequence(5, &Factors::trivial(e6.exponents())).unwrap();
        assert_eq!(ks5.k_at(1), 2);
        assert_eq!(ks5.k_minus_1(), 1);
    }

    #[test]
    fn dim_formulas() {
        let e6 = rs(Family::E, 6);
        let inner = Factors::trivial(e6.exponents());
        let ks = k_sequence(4, &inner).unwrap();
        assert_eq!(nregular_dim_g0(&ks, 78).unwrap(), 20);
        assert_eq!(nregular_dim_differences(&ks), vec![0, -2, 2, 0]);

        let fout = factors_of(&e6, &outer(&e6, 2)).unwrap();
        let kso = k_sequence(4, &fout).unwrap();
        assert_eq!(nregular_dim_g0(&kso, 78).unwrap(), 18);
        assert_eq!(nregular_dim_differences(&kso), vec![2, 0, 0, -2]);

        let a2 = rs(Family::A, 2);
        let ksa = k_sequence(3, &Factors::trivial(a2.exponents())).unwrap();
        assert_eq!(ksa.k, vec![0, 1, 1]);
        assert_eq!(nregular_dim_g0(&ksa, 8).unwrap(), 2);
    }

    #[test]
    fn sregular_checks() {
        let e7 = rs(Family::E, 7);
        let ks7 = k_sequence(4, &Factors::trivial(e7.exponents())).unwrap();
        let dims = GradedDims {
            m: 4,
            dims: vec![33, 32, 36, 32],
        };
        // (133 - 7)/4 is not an integer
        assert!(!sregular_consistency(&dims, &ks7, 133, 7));

        let e6 = rs(Family::E, 6);
        let ks = k_sequence(4, &Factors::trivial(e6.exponents())).unwrap();
        let dims = GradedDims {
            m: 4,
            dims: vec![20, 20, 18, 20],
        };
        assert!(sregular_consistency(&dims, &ks, 78, 6));
    }

    #[test]
    fn degrees_exponents_coexponents() {
        let e6 = rs(Family::E, 6);
        let inner = Factors::trivial(e6.exponents());
        assert_eq!(invariant_degrees_nregular(4, &inner).unwrap(), vec![8, 12]);
        assert_eq!(little_weyl_exponents(4, &inner).unwrap(), vec![7, 11]);
        assert_eq!(little_weyl_coexponents(4, &inner, true).unwrap(), vec![1, 5]);

        let fout = factors_of(&e6, &outer(&e6, 2)).unwrap();
        assert_eq!(invariant_degrees_nregular(4, &fout).unwrap(), vec![8, 12]);
        assert_eq!(little_weyl_exponents(4, &fout).unwrap(), vec![7, 11]);
        assert_eq!(little_weyl_coexponents(4, &fout, true).unwrap(), vec![1, 5]);

        // order 5: k_1 = 2 > k_-1 = 1, the coexponent evaluator refuses
        assert!(little_weyl_coexponents(5, &inner, false).is_err());

        let a2 = rs(Family::A, 2);
        let ia2 = Factors::trivial(a2.exponents());
        assert_eq!(invariant_degrees_nregular(3, &ia2).unwrap(), vec![3]);
        assert_eq!(little_weyl_exponents(3, &ia2).unwrap(), vec![2]);
    }

    #[test]
    fn ideal_indices() {
        let e6 = rs(Family::E, 6);
        let inner = Factors::trivial(e6.exponents());
        let idx = ideal_generator_indices(4, &inner).unwrap();
        let degrees = e6.degrees();
        let cut: Vec<usize> = idx.iter().map(|&i| degrees[i]).collect();
        assert_eq!(cut, vec![2, 5, 6, 9]);

        let a2 = rs(Family::A, 2);
        let idx = ideal_generator_indices(3, &Factors::trivial(a2.exponents())).unwrap();
        assert_eq!(idx, vec![0]); // the degree-2 invariant only
    }

    #[test]
    fn centralizer_eigenvalue_bookkeeping() {
        let e6 = rs(Family::E, 6);
        let inner = Factors::trivial(e6.exponents());
        let (ze, _zh, _zf) = centralizer_eigenvalues(4, &inner).unwrap();
        // multiplicity of eigenvalue 1 on z(e) is k_0 = 2
        assert_eq!(ze.iter().filter(|&&x| x == 0).count(), 2);
        let fout = factors_of(&e6, &outer(&e6, 2)).unwrap();
        let (_, _, zf_out) = centralizer_eigenvalues(4, &fout).unwrap();
        // eigenvalue ζ on z(f) has multiplicity k_(-1) = 2
        assert_eq!(zf_out.iter().filter(|&&x| x == 1).count(), 2);
    }

    #[test]
    fn shephard_todd_matches() {
        assert_eq!(shephard_todd_identify(&[7, 11], &[1, 5]), vec!["G8"]);
        assert_eq!(shephard_todd_identify(&[1], &[1]), vec!["A1"]);
        assert_eq!(shephard_todd_identify(&[1, 2], &[1, 2]), vec!["A2"]);
        assert_eq!(shephard_todd_identify(&[1, 5], &[1, 5]), vec!["G2"]);
        assert_eq!(shephard_todd_identify(&[1, 3, 5], &[1, 3, 5]), vec!["B3"]);
        // the G8/G13 degree collision is resolved by codegrees
        assert_eq!(shephard_todd_identify(&[7, 11], &[1, 17]), vec!["G13"]);
        assert!(shephard_todd_identify(&[9, 99], &[1, 2]).is_empty());
    }

    #[test]
    fn k_sums_and_inner_symmetry() {
        for (f, l) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::E, 6)] {
            let r = rs(f, l);
            let inner = Factors::trivial(r.exponents());
            for m in 1..=8 {
                let ks = k_sequence(m, &inner).unwrap();
                assert_eq!(ks.k.iter().sum::<usize>(), l);
                assert_eq!(ks.l.iter().sum::<usize>(), l);
                // inner factors are self-inverse
                assert_eq!(ks.k, ks.l);
            }
        }
        // D4 triality: the k-sequence is invariant under the ω ↔ ω² swap
        let d4 = rs(Family::D, 4);
        let tri = outer(&d4, 3);
        let f1 = factors_of(&d4, &tri).unwrap();
        let mut f2 = f1.clone();
        for p in f2.pairs.iter_mut() {
            p.1 = (3 - p.1) % 3;
        }
        for m in [3, 6, 12] {
            assert_eq!(k_sequence(m, &f1).unwrap().k, k_sequence(m, &f2).unwrap().k);
        }
    }

    #[test]
    fn m_one_degeneration() {
        for (f, l) in [(Family::A, 2), (Family::F, 4), (Family::E, 8)] {
            let r = rs(f, l);
            let inner = Factors::trivial(r.exponents());
            let ks = k_sequence(1, &inner).unwrap();
            assert_eq!(ks.k, vec![l]);
            assert_eq!(invariant_degrees_nregular(1, &inner).unwrap(), r.degrees());
            assert_eq!(
                little_weyl_exponents(1, &inner).unwrap(),
                r.exponents().to_vec()
            );
        }
    }
}
