//! Static exact data for the simple root systems A–G and their (twisted)
//! affine diagrams.
//!
//! Roots are stored as integer coefficient vectors over the simple roots;
//! every pairing goes through the Cartan matrix, so all arithmetic is exact.
//! Node numbering is Bourbaki for the finite diagrams. Affine diagrams put
//! the affine node at index 0; twisted diagrams number the remaining nodes
//! in chain order away from it (for `A_{2n-1}^(2)` the two fork tips are
//! nodes 0 and 1, then the chain 2..n).

mod tables;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// Coefficient vector of a root over the simple roots.
pub type Coeffs = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Valid ranks: A_l l≥1, B_l l≥2, C_l l≥3, D_l l≥4, E6–E8, F4, G2.
    pub fn rank_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Immutable exact tables for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    /// Symmetrizer `d_i = (alpha_i, alpha_i)/2`, short roots normalized to 1.
    sym: Vec<i64>,
    /// All roots: positive roots first (sorted by height then lex), then
    /// their negatives in the same order.
    roots: Vec<Coeffs>,
    n_pos: usize,
    index: HashMap<Coeffs, usize>,
    exponents: Vec<usize>,
    highest: Coeffs,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        if !family.rank_valid(rank) {
            return Err(Error::InvalidType {
                family: family.letter(),
                rank,
                reason: "rank out of range for this family".into(),
            });
        }
        let cartan = simple_cartan(family, rank);
        let sym = symmetrizer(&cartan);
        let roots = close_roots(&cartan);
        let n_pos = roots.len() / 2;
        let index: HashMap<Coeffs, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let highest = roots[n_pos - 1].clone();

        let exponents = exponents_for(family, rank);
        let rs = RootSystem {
            family,
            rank,
            cartan,
            sym,
            roots,
            n_pos,
            index,
            exponents,
            highest,
        };
        rs.validate()?;
        Ok(rs)
    }

    fn validate(&self) -> Result<()> {
        // Exponents must match the positive-root height distribution: the
        // number of positive roots of height >= i equals... the conjugate
        // partition of the height counts is the exponent multiset.
        let h_max = self.height(&self.highest) as usize;
        let mut counts = vec![0usize; h_max + 1];
        for r in self.positive_roots() {
            counts[self.height(r) as usize] += 1;
        }
        let mut conj: Vec<usize> = Vec::new();
        for i in 1..=self.rank {
            let c = (1..=h_max).filter(|&k| counts[k] >= i).count();
            if c > 0 {
                conj.push(c);
            }
        }
        conj.sort_unstable();
        if conj != self.exponents {
            return Err(Error::Inconsistency(format!(
                "{}{}: stored exponents {:?} disagree with height distribution {:?}",
                self.family, self.rank, self.exponents, conj
            )));
        }
        let sum: usize = self.exponents.iter().sum();
        if sum != self.n_pos {
            return Err(Error::Inconsistency("sum of exponents != #positive roots".into()));
        }
        if self.coxeter_number() != self.exponents[self.rank - 1] + 1 {
            return Err(Error::Inconsistency("coxeter number mismatch".into()));
        }
        let mark_sum: i64 = self.marks().iter().sum();
        if mark_sum as usize != self.coxeter_number() - 1 {
            return Err(Error::Inconsistency("marks do not sum to h-1".into()));
        }
        Ok(())
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn all_roots(&self) -> &[Coeffs] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Coeffs] {
        &self.roots[..self.n_pos]
    }

    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.index.contains_key(r)
    }

    /// Index of the negative of root `i`.
    pub fn negative_of(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn height(&self, r: &[i64]) -> i64 {
        r.iter().sum()
    }

    /// `<beta, alpha_i^vee>`.
    pub fn pairing_simple_coroot(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum()
    }

    /// Exact inner product `(a, b)` with short roots of squared length 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * b[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `(beta, beta)/2` for a root.
    pub fn half_norm(&self, beta: &[i64]) -> i64 {
        self.inner(beta, beta) / 2
    }

    /// Coroot of `beta` as coefficients over the simple coroots.
    pub fn coroot(&self, beta: &[i64]) -> Coeffs {
        let d = self.half_norm(beta);
        (0..self.rank)
            .map(|j| {
                let num = beta[j] * self.sym[j];
                debug_assert_eq!(num % d, 0);
                num / d
            })
            .collect()
    }

    /// Reflection of `x` (a root coefficient vector) in the root `beta`.
    pub fn reflect_in_root(&self, x: &[i64], beta: &[i64]) -> Coeffs {
        let d = self.half_norm(beta);
        let num = self.inner(x, beta);
        debug_assert_eq!(num % d, 0);
        let c = num / d;
        (0..self.rank).map(|j| x[j] - c * beta[j]).collect()
    }

    /// Simple reflection `s_i` applied to a coefficient vector.
    pub fn simple_reflect(&self, x: &[i64], i: usize) -> Coeffs {
        let c: i64 = (0..self.rank).map(|j| self.cartan[i][j] * x[j]).sum();
        let mut y = x.to_vec();
        y[i] -= c;
        y
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.exponents.iter().map(|m| m + 1).collect()
    }

    pub fn coxeter_number(&self) -> usize {
        self.exponents[self.rank - 1] + 1
    }

    pub fn weyl_order(&self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank
    }

    pub fn highest_root(&self) -> &Coeffs {
        &self.highest
    }

    /// Coefficients of the highest root (the marks `a_1..a_l`).
    pub fn marks(&self) -> &[i64] {
        &self.highest
    }

    pub fn type_name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

fn simple_cartan(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let l = rank;
    let mut a = vec![vec![0i64; l]; l];
    for i in 0..l {
        a[i][i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 0..l.saturating_sub(1) {
                chain(i, i + 1);
            }
        }
        Family::B => {
            for i in 0..l - 1 {
                chain(i, i + 1);
            }
            a[l - 1][l - 2] = -2; // alpha_l short
        }
        Family::C => {
            for i in 0..l - 1 {
                chain(i, i + 1);
            }
            a[l - 2][l - 1] = -2; // alpha_l long
        }
        Family::D => {
            for i in 0..l - 2 {
                chain(i, i + 1);
            }
            chain(l - 3, l - 1);
        }
        Family::E | Family::F | Family::G => {
            let t = tables::tables()
                .get(family.letter(), rank, "cartan")
                .expect("cartan table");
            for i in 0..l {
                for j in 0..l {
                    a[i][j] = t[i * l + j];
                }
            }
        }
    }
    a
}

/// Integer diagonal `d` with `d_i a_ij = d_j a_ji`, short roots at 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let l = cartan.len();
    // propagate d_j = d_i * a_ij / a_ji as exact fractions, then clear
    let mut num = vec![0i64; l];
    let mut den = vec![1i64; l];
    num[0] = 1;
    let mut done = vec![false; l];
    done[0] = true;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && cartan[i][j] != 0 && !done[j] {
                let n = num[i] * cartan[i][j];
                let d = den[i] * cartan[j][i];
                let g = gcd(n.unsigned_abs() as usize, d.unsigned_abs() as usize) as i64;
                let sign = if (n < 0) == (d < 0) { 1 } else { -1 };
                num[j] = sign * n.abs() / g;
                den[j] = d.abs() / g;
                done[j] = true;
                stack.push(j);
            }
        }
    }
    let scale = den.iter().fold(1i64, |acc, &d| acc / gcd(acc as usize, d as usize) as i64 * d);
    let mut out: Vec<i64> = (0..l).map(|i| num[i] * (scale / den[i])).collect();
    let g = out
        .iter()
        .fold(0usize, |acc, &x| gcd(acc, x.unsigned_abs() as usize)) as i64;
    for x in out.iter_mut() {
        *x /= g;
    }
    debug_assert!(out.iter().all(|&x| x > 0));
    out
}

/// Generate all roots by closing the simple roots under simple reflections.
fn close_roots(cartan: &[Vec<i64>]) -> Vec<Coeffs> {
    let l = cartan.len();
    let mut seen: HashSet<Coeffs> = HashSet::new();
    let mut queue: Vec<Coeffs> = Vec::new();
    for i in 0..l {
        let mut e = vec![0i64; l];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(r) = queue.pop() {
        for i in 0..l {
            let c: i64 = (0..l).map(|j| cartan[i][j] * r[j]).sum();
            let mut y = r.clone();
            y[i] -= c;
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    let mut pos: Vec<Coeffs> = seen
        .iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .cloned()
        .collect();
    pos.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    assert_eq!(2 * pos.len(), seen.len(), "roots must come in +/- pairs");
    let mut all = pos.clone();
    all.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Coeffs>()));
    all
}

fn exponents_for(family: Family, rank: usize) -> Vec<usize> {
    let l = rank;
    match family {
        Family::A => (1..=l).collect(),
        Family::B | Family::C => (0..l).map(|i| 2 * i + 1).collect(),
        Family::D => {
            let mut e: Vec<usize> = (0..l - 1).map(|i| 2 * i + 1).collect();
            e.push(l - 1);
            e.sort_unstable();
            e
        }
        Family::E | Family::F | Family::G => tables::tables()
            .get(family.letter(), rank, "exponents")
            .expect("exponent table")
            .iter()
            .map(|&x| x as usize)
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Diagram automorphisms of the finite diagram
// ---------------------------------------------------------------------------

/// A symmetry of the finite Dynkin diagram, as a permutation of node
/// indices 0..l-1 preserving the Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
    pub order: usize,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> DiagramAutomorphism {
        DiagramAutomorphism {
            perm: (0..rank).collect(),
            order: 1,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Image of a root coefficient vector.
    pub fn apply(&self, r: &[i64]) -> Coeffs {
        let mut y = vec![0i64; r.len()];
        for (i, &c) in r.iter().enumerate() {
            y[self.perm[i]] = c;
        }
        y
    }
}

fn perm_order(perm: &[usize]) -> usize {
    let mut order = 1usize;
    let n = perm.len();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        order = lcm(order, len);
    }
    order
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

/// All permutations of node indices preserving a square integer matrix
/// (and, optionally, a weight vector). Backtracking search.
fn matrix_automorphisms(mat: &[Vec<i64>], weights: Option<&[i64]>) -> Vec<Vec<usize>> {
    let n = mat.len();
    let mut result = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        mat: &[Vec<i64>],
        weights: Option<&[i64]>,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        result: &mut Vec<Vec<usize>>,
    ) {
        let n = mat.len();
        if depth == n {
            result.push(perm.clone());
            return;
        }
        'cand: for cand in 0..n {
            if used[cand] {
                continue;
            }
            if let Some(w) = weights {
                if w[cand] != w[depth] {
                    continue;
                }
            }
            if mat[cand][cand] != mat[depth][depth] {
                continue;
            }
            for j in 0..depth {
                if mat[depth][j] != mat[cand][perm[j]] || mat[j][depth] != mat[perm[j]][cand] {
                    continue 'cand;
                }
            }
            perm[depth] = cand;
            used[cand] = true;
            rec(mat, weights, perm, used, depth + 1, result);
            used[cand] = false;
            perm[depth] = usize::MAX;
        }
    }
    rec(mat, weights, &mut perm, &mut used, 0, &mut result);
    result
}

/// The symmetry group of the finite Dynkin diagram. Trivial except for
/// A_l (l>=2), D_l, E6 (order 2) and D4 (order 6).
pub fn diagram_automorphism_group(rs: &RootSystem) -> Vec<DiagramAutomorphism> {
    let mut perms = matrix_automorphisms(rs.cartan(), None);
    perms.sort();
    perms
        .into_iter()
        .map(|perm| {
            let order = perm_order(&perm);
            DiagramAutomorphism { perm, order }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Affine diagrams
// ---------------------------------------------------------------------------

/// A (possibly twisted) affine Dynkin diagram with its marks and symmetry
/// group. Node 0 is always the affine node.
#[derive(Debug, Clone)]
pub struct AffineDiagram {
    pub base: RootSystem,
    pub twist: usize,
    /// Generalized Cartan matrix of the affine diagram.
    cartan: Vec<Vec<i64>>,
    /// Marks `a_0..a_n`: the primitive positive kernel vector of the GCM.
    marks: Vec<i64>,
    /// For each node >= 1, the orbit of base simple roots it represents
    /// (0-based base indices). Singletons for twist 1.
    orbits: Vec<Vec<usize>>,
    automorphisms: Vec<Vec<usize>>,
}

impl AffineDiagram {
    pub fn new(base: RootSystem, twist: usize) -> Result<AffineDiagram> {
        let (cartan, marks, orbits) = match twist {
            1 => untwisted_affine(&base),
            2 | 3 => twisted_affine(&base, twist)?,
            _ => {
                return Err(Error::UnsupportedTwist {
                    family: base.family.letter(),
                    rank: base.rank,
                    twist,
                })
            }
        };
        // the marks must span the kernel of the GCM
        let n = cartan.len();
        for i in 0..n {
            let s: i64 = (0..n).map(|j| cartan[i][j] * marks[j]).sum();
            if s != 0 {
                return Err(Error::Inconsistency(format!(
                    "affine marks are not in the GCM kernel at row {i}"
                )));
            }
        }
        let g = marks.iter().fold(0i64, |acc, &m| gcd(acc as usize, m as usize) as i64);
        if g != 1 || marks.iter().any(|&m| m <= 0) {
            return Err(Error::Inconsistency("affine marks not primitive positive".into()));
        }
        let automorphisms = matrix_automorphisms(&cartan, Some(&marks));
        Ok(AffineDiagram {
            base,
            twist,
            cartan,
            marks,
            orbits,
            automorphisms,
        })
    }

    pub fn from_type(family: Family, rank: usize, twist: usize) -> Result<AffineDiagram> {
        AffineDiagram::new(RootSystem::new(family, rank)?, twist)
    }

    pub fn node_count(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Base simple-root orbit attached to node `i >= 1`.
    pub fn orbit(&self, i: usize) -> &[usize] {
        &self.orbits[i]
    }

    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }

    pub fn type_label(&self) -> String {
        format!("{}{}^({})", self.base.family, self.base.rank, self.twist)
    }
}

fn untwisted_affine(base: &RootSystem) -> (Vec<Vec<i64>>, Vec<i64>, Vec<Vec<usize>>) {
    let l = base.rank;
    let n = l + 1;
    let theta = base.highest_root().clone();
    let d_theta = base.half_norm(&theta);
    let mut a = vec![vec![0i64; n]; n];
    a[0][0] = 2;
    for i in 0..l {
        for j in 0..l {
            a[i + 1][j + 1] = base.cartan()[i][j];
        }
        // <alpha_j, alpha_0^vee> = -(alpha_j, theta)/d_theta
        let num = base.inner(&unit(l, i), &theta);
        debug_assert_eq!(num % d_theta, 0);
        a[0][i + 1] = -num / d_theta;
        // <alpha_0, alpha_j^vee> = -<theta, alpha_j^vee>
        a[i + 1][0] = -base.pairing_simple_coroot(&theta, i);
    }
    let mut marks = vec![1i64];
    marks.extend_from_slice(&theta);
    let orbits: Vec<Vec<usize>> = std::iter::once(Vec::new())
        .chain((0..l).map(|i| vec![i]))
        .collect();
    (a, marks, orbits)
}

fn unit(l: usize, i: usize) -> Coeffs {
    let mut e = vec![0i64; l];
    e[i] = 1;
    e
}

#[allow(clippy::type_complexity)]
fn twisted_affine(
    base: &RootSystem,
    twist: usize,
) -> Result<(Vec<Vec<i64>>, Vec<i64>, Vec<Vec<usize>>)> {
    let l = base.rank;
    let reject = || Error::UnsupportedTwist {
        family: base.family.letter(),
        rank: base.rank,
        twist,
    };
    match (base.family, twist) {
        (Family::A, 2) if l >= 2 => {
            if l % 2 == 0 {
                // A_{2n}^(2): chain 0 - 1 - .. - n with double bonds at
                // both ends; marks (1, 2, .., 2).
                let n = l / 2;
                let mut a = ident2(n + 1);
                a[0][1] = -1;
                a[1][0] = -2;
                for i in 1..n.saturating_sub(1) {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
                if n >= 2 {
                    a[n - 1][n] = -1;
                    a[n][n - 1] = -2;
                } else {
                    // A_2^(2): a single quadruple bond
                    a[0][1] = -1;
                    a[1][0] = -4;
                }
                let mut marks = vec![1i64];
                marks.extend(std::iter::repeat(2).take(n));
                let orbits: Vec<Vec<usize>> = std::iter::once(Vec::new())
                    .chain((1..=n).map(|i| {
                        if i == n {
                            vec![n - 1, n]
                        } else {
                            vec![i - 1, 2 * n - i]
                        }
                    }))
                    .collect();
                Ok((a, marks, orbits))
            } else {
                // A_{2n-1}^(2): nodes 0,1 fork into 2, chain to n with a
                // double bond at the long end; marks (1,1,2,..,2,1).
                let n = (l + 1) / 2;
                if n < 2 {
                    return Err(reject());
                }
                let mut a = ident2(n + 1);
                if n == 2 {
                    // degenerate fork: 0 and 1 each double-bonded to 2
                    a[0][2] = -2;
                    a[2][0] = -1;
                    a[1][2] = -2;
                    a[2][1] = -1;
                    let marks = vec![1, 1, 1];
                    let orbits = vec![Vec::new(), vec![0, 2], vec![1]];
                    return Ok((a, marks, orbits));
                }
                a[0][2] = -1;
                a[2][0] = -1;
                a[1][2] = -1;
                a[2][1] = -1;
                for i in 2..n - 1 {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
                a[n - 1][n] = -2;
                a[n][n - 1] = -1;
                let mut marks = vec![1i64, 1];
                marks.extend(std::iter::repeat(2).take(n - 2));
                marks.push(1);
                let orbits: Vec<Vec<usize>> = std::iter::once(Vec::new())
                    .chain((1..=n).map(|i| {
                        if i == n {
                            vec![n - 1]
                        } else {
                            vec![i - 1, 2 * n - 1 - i]
                        }
                    }))
                    .collect();
                Ok((a, marks, orbits))
            }
        }
        (Family::D, 2) => {
            // D_l^(2): chain of l nodes, double bonds at both ends
            // pointing outward; marks all 1.
            let n = l - 1;
            let mut a = ident2(n + 1);
            a[0][1] = -2;
            a[1][0] = -1;
            for i in 1..n - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 1][n] = -1;
            a[n][n - 1] = -2;
            let marks = vec![1i64; n + 1];
            let orbits: Vec<Vec<usize>> = std::iter::once(Vec::new())
                .chain((1..=n).map(|i| {
                    if i == n {
                        vec![l - 2, l - 1]
                    } else {
                        vec![i - 1]
                    }
                }))
                .collect();
            Ok((a, marks, orbits))
        }
        (Family::E, 2) if l == 6 => {
            let t = tables::tables().get('E', 6, "twisted2").expect("E6^(2) table");
            let a = from_rowmajor(t, 5);
            let marks = vec![1, 2, 3, 2, 1];
            // chain order: affine, {a1,a6}, {a3,a5}, {a4}, {a2}
            let orbits = vec![Vec::new(), vec![0, 5], vec![2, 4], vec![3], vec![1]];
            Ok((a, marks, orbits))
        }
        (Family::D, 3) if l == 4 => {
            let t = tables::tables().get('D', 4, "twisted3").expect("D4^(3) table");
            let a = from_rowmajor(t, 3);
            let marks = vec![1, 2, 1];
            let orbits = vec![Vec::new(), vec![0, 2, 3], vec![1]];
            Ok((a, marks, orbits))
        }
        _ => Err(reject()),
    }
}

fn ident2(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    a
}

fn from_rowmajor(t: &[i64], n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| t[i * n..(i + 1) * n].to_vec()).collect()
}

/// Classify a connected generalized Cartan matrix of finite type.
/// Returns the family and rank, preferring B over the isomorphic C at rank 2.
pub fn classify_gcm(gcm: &[Vec<i64>]) -> Option<(Family, usize)> {
    let r = gcm.len();
    let candidates: Vec<(Family, usize)> = [
        (Family::A, r),
        (Family::B, r),
        (Family::C, r),
        (Family::D, r),
        (Family::E, r),
        (Family::F, r),
        (Family::G, r),
    ]
    .into_iter()
    .filter(|(f, k)| f.rank_valid(*k))
    .collect();
    for (f, k) in candidates {
        let std_gcm = simple_cartan(f, k);
        if gcm_isomorphic(gcm, &std_gcm) {
            return Some((f, k));
        }
    }
    None
}

fn gcm_isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    // search a permutation p with b[p(i)][p(j)] == a[i][j]
    let n = a.len();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> bool {
        let n = a.len();
        if depth == n {
            return true;
        }
        'cand: for cand in 0..n {
            if used[cand] {
                continue;
            }
            for j in 0..depth {
                if a[depth][j] != b[cand][perm[j]] || a[j][depth] != b[perm[j]][cand] {
                    continue 'cand;
                }
            }
            perm[depth] = cand;
            used[cand] = true;
            if rec(a, b, perm, used, depth + 1) {
                return true;
            }
            used[cand] = false;
            perm[depth] = usize::MAX;
        }
        false
    }
    rec(a, b, &mut perm, &mut used, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_basics() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(rs.all_roots().len(), 6);
        assert_eq!(rs.exponents(), &[1, 2]);
        assert_eq!(rs.coxeter_number(), 3);
        assert_eq!(rs.dim(), 8);
    }

    #[test]
    fn e6_exponents_and_degrees() {
        let rs = RootSystem::new(Family::E, 6).unwrap();
        assert_eq!(rs.exponents(), &[1, 4, 5, 7, 8, 11]);
        assert_eq!(rs.degrees(), vec![2, 5, 6, 8, 9, 12]);
        assert_eq!(rs.dim(), 78);
    }

    #[test]
    fn e7_from_closure() {
        let rs = RootSystem::new(Family::E, 7).unwrap();
        assert_eq!(rs.dim(), 133);
        assert_eq!(rs.rank, 7);
        assert_eq!(rs.exponents(), &[1, 5, 7, 9, 11, 13, 17]);
    }

    #[test]
    fn root_counts_all_types() {
        for (f, l, n_roots) in [
            (Family::A, 1, 2),
            (Family::A, 3, 12),
            (Family::B, 2, 8),
            (Family::B, 3, 18),
            (Family::C, 3, 18),
            (Family::C, 4, 32),
            (Family::D, 4, 24),
            (Family::D, 5, 40),
            (Family::E, 8, 240),
            (Family::F, 4, 48),
            (Family::G, 2, 12),
        ] {
            let rs = RootSystem::new(f, l).unwrap();
            assert_eq!(rs.all_roots().len(), n_roots, "{}{}", f, l);
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::new(Family::E, 9).is_err());
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::C, 2).is_err());
        assert!(RootSystem::new(Family::D, 3).is_err());
        assert!(RootSystem::new(Family::F, 3).is_err());
        assert!(RootSystem::new(Family::G, 3).is_err());
    }

    #[test]
    fn diagram_automorphisms() {
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(diagram_automorphism_group(&a1).len(), 1);
        let e6 = RootSystem::new(Family::E, 6).unwrap();
        assert_eq!(diagram_automorphism_group(&e6).len(), 2);
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        let g = diagram_automorphism_group(&d4);
        assert_eq!(g.len(), 6);
        assert!(g.iter().any(|p| p.order == 3));
        let a5 = RootSystem::new(Family::A, 5).unwrap();
        assert_eq!(diagram_automorphism_group(&a5).len(), 2);
    }

    #[test]
    fn diagram_automorphisms_permute_roots() {
        for (f, l) in [(Family::A, 3), (Family::D, 4), (Family::E, 6)] {
            let rs = RootSystem::new(f, l).unwrap();
            for g in diagram_automorphism_group(&rs) {
                for r in rs.all_roots() {
                    assert!(rs.is_root(&g.apply(r)));
                }
            }
        }
    }

    #[test]
    fn untwisted_affine_marks() {
        let e6 = AffineDiagram::from_type(Family::E, 6, 1).unwrap();
        assert_eq!(e6.node_count(), 7);
        assert_eq!(e6.marks(), &[1, 1, 2, 2, 3, 2, 1]);
        let a1 = AffineDiagram::from_type(Family::A, 1, 1).unwrap();
        assert_eq!(a1.marks(), &[1, 1]);
        assert_eq!(a1.cartan()[0][1], -2);
    }

    #[test]
    fn twisted_affine_tables() {
        let e62 = AffineDiagram::from_type(Family::E, 6, 2).unwrap();
        assert_eq!(e62.node_count(), 5);
        assert_eq!(e62.marks(), &[1, 2, 3, 2, 1]);
        // exactly one double bond
        let mut double = 0;
        for i in 0..5 {
            for j in 0..i {
                let m = e62.cartan()[i][j] * e62.cartan()[j][i];
                if m == 2 {
                    double += 1;
                }
            }
        }
        assert_eq!(double, 1);

        let a22 = AffineDiagram::from_type(Family::A, 2, 2).unwrap();
        assert_eq!(a22.marks(), &[1, 2]);
        let a42 = AffineDiagram::from_type(Family::A, 4, 2).unwrap();
        assert_eq!(a42.marks(), &[1, 2, 2]);
        let a52 = AffineDiagram::from_type(Family::A, 5, 2).unwrap();
        assert_eq!(a52.marks(), &[1, 1, 2, 1]);
        let d42_ = AffineDiagram::from_type(Family::D, 4, 2).unwrap();
        assert_eq!(d42_.marks(), &[1, 1, 1, 1]);
        let d43 = AffineDiagram::from_type(Family::D, 4, 3).unwrap();
        assert_eq!(d43.marks(), &[1, 2, 1]);

        assert!(AffineDiagram::from_type(Family::B, 3, 2).is_err());
        assert!(AffineDiagram::from_type(Family::E, 7, 2).is_err());
        assert!(AffineDiagram::from_type(Family::D, 5, 3).is_err());
    }

    #[test]
    fn affine_automorphisms_preserve_structure() {
        for (f, l, t) in [
            (Family::A, 2, 1),
            (Family::A, 3, 1),
            (Family::D, 4, 1),
            (Family::E, 6, 1),
            (Family::A, 5, 2),
            (Family::E, 6, 2),
        ] {
            let ad = AffineDiagram::from_type(f, l, t).unwrap();
            for p in ad.automorphisms() {
                for i in 0..ad.node_count() {
                    assert_eq!(ad.marks()[p[i]], ad.marks()[i]);
                    for j in 0..ad.node_count() {
                        assert_eq!(ad.cartan()[p[i]][p[j]], ad.cartan()[i][j]);
                    }
                }
            }
        }
        // affine A2 has the full dihedral symmetry of the triangle
        let a2 = AffineDiagram::from_type(Family::A, 2, 1).unwrap();
        assert_eq!(a2.automorphisms().len(), 6);
        // the twisted E6 chain is rigid
        let e62 = AffineDiagram::from_type(Family::E, 6, 2).unwrap();
        assert_eq!(e62.automorphisms().len(), 1);
    }

    #[test]
    fn marks_match_highest_root_two_ways() {
        for (f, l) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 5),
            (Family::E, 7),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let rs = RootSystem::new(f, l).unwrap();
            let max_h = rs
                .positive_roots()
                .iter()
                .map(|r| rs.height(r))
                .max()
                .unwrap();
            assert_eq!(rs.height(rs.highest_root()), max_h);
            let ad = AffineDiagram::new(rs.clone(), 1).unwrap();
            assert_eq!(&ad.marks()[1..], rs.marks());
        }
    }

    #[test]
    fn classify_components() {
        let b3 = simple_cartan(Family::B, 3);
        assert_eq!(classify_gcm(&b3), Some((Family::B, 3)));
        let c3 = simple_cartan(Family::C, 3);
        assert_eq!(classify_gcm(&c3), Some((Family::C, 3)));
        // rank-2 double bond canonicalizes to B2
        let c2 = vec![vec![2, -2], vec![-1, 2]];
        assert_eq!(classify_gcm(&c2), Some((Family::B, 2)));
        let a1 = vec![vec![2]];
        assert_eq!(classify_gcm(&a1), Some((Family::A, 1)));
    }
}
