//! Kac coordinates: nonnegative integer labels on a (twisted) affine
//! diagram, gcd 1, classifying conjugacy classes of finite-order
//! automorphisms. The order of the class is `twist * sum(a_i s_i)`.
//!
//! Conjugacy convention: classes of order-m automorphisms in the component
//! determined by the twist correspond to label vectors in the closed
//! fundamental alcove (all labels >= 0) up to automorphisms of the affine
//! diagram. `normalize` reduces arbitrary integer labels into the alcove by
//! affine reflections and then picks the lexicographically least vector in
//! the diagram-symmetry orbit.

use crate::error::{Error, Result};
use crate::rootsys::{classify_gcm, AffineDiagram, Coeffs, Family, RootSystem};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct KacCoordinates {
    pub diagram: Arc<AffineDiagram>,
    pub labels: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedSubalgebraType {
    /// Simple factors of the semisimple part, sorted.
    pub simple_factors: Vec<(Family, usize)>,
    pub center_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub m: usize,
    pub dims: Vec<usize>,
}

impl KacCoordinates {
    pub fn new(diagram: Arc<AffineDiagram>, labels: Vec<i64>) -> Result<KacCoordinates> {
        if labels.len() != diagram.node_count() {
            return Err(Error::InvalidLabels(format!(
                "expected {} labels for {}, got {}",
                diagram.node_count(),
                diagram.type_label(),
                labels.len()
            )));
        }
        if labels.iter().any(|&s| s < 0) {
            return Err(Error::InvalidLabels("labels must be nonnegative".into()));
        }
        let g = labels.iter().fold(0i64, |acc, &s| gcd64(acc, s.abs()));
        if g != 1 {
            return Err(Error::InvalidLabels(format!(
                "labels must have gcd 1 (got gcd {g})"
            )));
        }
        Ok(KacCoordinates { diagram, labels })
    }

    /// Order of the automorphism class: twist * sum(a_i s_i).
    pub fn order(&self) -> usize {
        let s: i64 = self
            .labels
            .iter()
            .zip(self.diagram.marks())
            .map(|(&s, &a)| s * a)
            .sum();
        self.diagram.twist * s as usize
    }

    pub fn twist(&self) -> usize {
        self.diagram.twist
    }

    pub fn base(&self) -> &RootSystem {
        &self.diagram.base
    }

    /// Number of nodes with a positive label ("black" nodes). Equals the
    /// number of irreducible summands of the degree-1 component; only the
    /// count is exposed, not the module structure.
    pub fn summand_count(&self) -> usize {
        self.labels.iter().filter(|&&s| s > 0).count()
    }

    /// Reads the reductive fixed subalgebra off the zero-label subdiagram:
    /// simple factors from the white components, center dimension from the
    /// black count minus one.
    pub fn fixed_subalgebra_type(&self) -> FixedSubalgebraType {
        let white: Vec<usize> = (0..self.labels.len())
            .filter(|&i| self.labels[i] == 0)
            .collect();
        let gcm = self.diagram.cartan();
        // connected components of the white subdiagram
        let mut seen = vec![false; white.len()];
        let mut factors = Vec::new();
        for start in 0..white.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in 0..white.len() {
                    if !seen[v] && gcm[white[u]][white[v]] != 0 {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            let sub: Vec<Vec<i64>> = comp
                .iter()
                .map(|&u| comp.iter().map(|&v| gcm[white[u]][white[v]]).collect())
                .collect();
            let (fam, rank) = classify_gcm(&sub)
                .expect("white subdiagram of an affine diagram must be of finite type");
            factors.push((fam, rank));
        }
        factors.sort_by_key(|&(f, r)| (std::cmp::Reverse(r), f.letter()));
        FixedSubalgebraType {
            simple_factors: factors,
            center_dim: self.summand_count().saturating_sub(1),
        }
    }

    /// Graded dimensions for inner classes: each root contributes to the
    /// degree `sum c_j s_j mod m`, the Cartan contributes the rank to
    /// degree 0. Twisted classes must go through the explicit oracle.
    pub fn graded_dimensions_inner(&self) -> Result<GradedDims> {
        if self.twist() != 1 {
            return Err(Error::WrongTwist {
                required: 1,
                got: self.twist(),
                hint: "outer graded dimensions come from chevalley::graded_basis".into(),
            });
        }
        let m = self.order();
        let rs = self.base();
        let mut dims = vec![0usize; m];
        dims[0] = rs.rank;
        for r in rs.all_roots() {
            dims[self.root_degree(r, m)] += 1;
        }
        debug_assert_eq!(dims.iter().sum::<usize>(), rs.dim());
        for i in 0..m {
            debug_assert_eq!(dims[i], dims[(m - i) % m], "dim g_i = dim g_-i");
        }
        Ok(GradedDims { m, dims })
    }

    /// Degree of a root under this label vector, reduced mod `modulus`.
    /// For twisted diagrams the label of a node applies to every base
    /// simple root in its orbit.
    pub fn root_degree(&self, root: &[i64], modulus: usize) -> usize {
        let mut per_simple = vec![0i64; self.base().rank];
        for node in 1..self.labels.len() {
            for &j in self.diagram.orbit(node) {
                per_simple[j] = self.labels[node];
            }
        }
        let d: i64 = root.iter().zip(&per_simple).map(|(&c, &s)| c * s).sum();
        d.rem_euclid(modulus as i64) as usize
    }

    /// Canonical representative: labels are already in the closed alcove,
    /// so this picks a fixed representative of the diagram-symmetry orbit
    /// (the lexicographically greatest vector, which keeps the affine-node
    /// label maximal). Idempotent and order-preserving.
    pub fn normalize(&self) -> KacCoordinates {
        let labels = orbit_canonical(&self.diagram, &self.labels);
        KacCoordinates {
            diagram: Arc::clone(&self.diagram),
            labels,
        }
    }

    pub fn render_spec(&self) -> String {
        let labels: Vec<String> = self.labels.iter().map(|s| s.to_string()).collect();
        format!("{} s=[{}]", self.diagram.type_label(), labels.join(","))
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

/// Reduce an arbitrary integer label vector (positive level) into the
/// closed fundamental alcove by reflecting at negative walls. Each
/// reflection `r_i` sends `s_j` to `s_j - A[i][j] s_i`; the level
/// `sum a_j s_j` is preserved, and the walk terminates because every step
/// lowers the number of separating affine hyperplanes.
pub fn reduce_to_alcove(diagram: &AffineDiagram, raw: &[i64]) -> Result<Vec<i64>> {
    let a = diagram.cartan();
    let n = raw.len();
    let level: i64 = raw
        .iter()
        .zip(diagram.marks())
        .map(|(&s, &m)| s * m)
        .sum();
    if level <= 0 {
        return Err(Error::InvalidLabels(
            "alcove reduction needs positive level".into(),
        ));
    }
    let mut s = raw.to_vec();
    for _ in 0..10_000_000u64 {
        match (0..n).find(|&i| s[i] < 0) {
            None => return Ok(s),
            Some(i) => {
                let si = s[i];
                for j in 0..n {
                    s[j] -= a[i][j] * si;
                }
            }
        }
    }
    Err(Error::Inconsistency("alcove reduction did not terminate".into()))
}

fn orbit_canonical(diagram: &AffineDiagram, labels: &[i64]) -> Vec<i64> {
    let mut best = labels.to_vec();
    for p in diagram.automorphisms() {
        let mut cand = vec![0i64; labels.len()];
        for (i, &s) in labels.iter().enumerate() {
            cand[p[i]] = s;
        }
        if cand > best {
            best = cand;
        }
    }
    best
}

/// Normalize raw (possibly negative) labels: alcove reduction, gcd check,
/// then the orbit minimum.
pub fn normalize_raw(diagram: &Arc<AffineDiagram>, raw: &[i64]) -> Result<KacCoordinates> {
    let alcove = reduce_to_alcove(diagram, raw)?;
    let labels = orbit_canonical(diagram, &alcove);
    KacCoordinates::new(Arc::clone(diagram), labels)
}

/// The unique N-regular class of order `m` in the component of the given
/// twist: the class of the automorphism scaling every (folded) simple root
/// vector by the primitive m-th root of unity. For twist 1 this is the
/// alcove reduction of the barycentric point with all finite labels 1.
pub fn canonical_nregular(base: &RootSystem, twist: usize, m: usize) -> Result<KacCoordinates> {
    if m == 0 {
        return Err(Error::Precondition("order must be positive".into()));
    }
    if m % twist != 0 {
        return Err(Error::TwistOrderMismatch { twist, order: m });
    }
    let diagram = Arc::new(AffineDiagram::new(base.clone(), twist)?);
    let n = diagram.node_count();
    debug_assert_eq!(diagram.marks()[0], 1, "affine node always has mark 1 here");
    let finite_sum: i64 = diagram.marks()[1..].iter().sum();
    let mut raw = vec![1i64; n];
    raw[0] = (m / twist) as i64 - finite_sum;
    let kac = normalize_raw(&diagram, &raw)?;
    debug_assert_eq!(kac.order(), m);
    Ok(kac)
}

/// Decision procedure for N-regularity of inner classes: the N-regular
/// class of a given order is unique up to conjugacy, so normalize and
/// compare against the canonical representative.
pub fn is_nregular(kac: &KacCoordinates) -> Result<bool> {
    if kac.twist() != 1 {
        return Err(Error::WrongTwist {
            required: 1,
            got: kac.twist(),
            hint: "outer N-regularity is certified through the oracle or the twisted canonical class".into(),
        });
    }
    Ok(class_matches_canonical(kac))
}

/// Same comparison for any twist; used by the profile builder, where the
/// uniqueness theorem applies verbatim in every component.
pub fn class_matches_canonical(kac: &KacCoordinates) -> bool {
    let canonical = canonical_nregular(kac.base(), kac.twist(), kac.order())
        .expect("twist divides the order of one of its own classes");
    kac.normalize().labels == canonical.labels
}

/// All classes of order `m` for the given diagram: label vectors with
/// `twist * sum a_i s_i = m`, gcd 1, one representative per
/// diagram-symmetry orbit, sorted.
pub fn enumerate_classes(diagram: &Arc<AffineDiagram>, m: usize) -> Result<Vec<KacCoordinates>> {
    if m == 0 || m % diagram.twist != 0 {
        return Err(Error::TwistOrderMismatch {
            twist: diagram.twist,
            order: m,
        });
    }
    let target = (m / diagram.twist) as i64;
    let marks = diagram.marks();
    let n = diagram.node_count();
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(
        marks: &[i64],
        node: usize,
        remaining: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if node == marks.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = remaining / marks[node];
        for v in 0..=max {
            cur[node] = v;
            rec(marks, node + 1, remaining - v * marks[node], cur, out);
        }
        cur[node] = 0;
    }
    rec(marks, 0, target, &mut cur, &mut out);

    let mut reps: Vec<Vec<i64>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for labels in out {
        let g = labels.iter().fold(0i64, |acc, &s| gcd64(acc, s));
        if g != 1 {
            continue;
        }
        let rep = orbit_canonical(diagram, &labels);
        if seen.insert(rep.clone()) {
            reps.push(rep);
        }
    }
    reps.sort();
    reps.into_iter()
        .map(|labels| KacCoordinates::new(Arc::clone(diagram), labels))
        .collect()
}

// ---------------------------------------------------------------------------
// Textual syntax: `E6^(1) s=[1,0,0,0,1,0,0]`
// ---------------------------------------------------------------------------

pub fn parse_kac_spec(input: &str) -> Result<KacCoordinates> {
    let s = input.trim();
    let err = |msg: &str| Error::Parse(format!("{msg} in {s:?} (expected `E6^(1) s=[1,0,...]`)"));
    let mut chars = s.chars().peekable();
    let fam_ch = chars.next().ok_or_else(|| err("empty spec"))?;
    let family = Family::from_char(fam_ch).ok_or_else(|| err("unknown family letter"))?;
    let mut rank_str = String::new();
    while let Some(c) = chars.peek() {
        if c.is_ascii_digit() {
            rank_str.push(*c);
            chars.next();
        } else {
            break;
        }
    }
    let rank: usize = rank_str.parse().map_err(|_| err("missing rank"))?;
    let rest: String = chars.collect();
    let rest = rest.trim_start();
    let rest = rest.strip_prefix("^(").ok_or_else(|| err("missing ^(r)"))?;
    let (twist_str, rest) = rest.split_once(')').ok_or_else(|| err("missing )"))?;
    let twist: usize = twist_str.trim().parse().map_err(|_| err("bad twist"))?;
    let rest = rest.trim_start();
    let rest = rest.strip_prefix("s=").ok_or_else(|| err("missing s="))?;
    let rest = rest.trim_start();
    let rest = rest.strip_prefix('[').ok_or_else(|| err("missing ["))?;
    let (list, tail) = rest.split_once(']').ok_or_else(|| err("missing ]"))?;
    if !tail.trim().is_empty() {
        return Err(err("trailing input"));
    }
    let labels: Vec<i64> = list
        .split(',')
        .map(|v| v.trim().parse::<i64>().map_err(|_| err("bad label")))
        .collect::<Result<_>>()?;
    let diagram = Arc::new(AffineDiagram::from_type(family, rank, twist)?);
    KacCoordinates::new(diagram, labels)
}

// ---------------------------------------------------------------------------
// ASCII rendering
// ---------------------------------------------------------------------------

/// Render the labeled diagram: `o` white, `*` black (label printed when
/// greater than one), with `=<k=` / `=k>=` arrows on multiple bonds.
pub fn ascii_diagram(kac: &KacCoordinates) -> String {
    let d = &kac.diagram;
    let n = d.node_count();
    let gcm = d.cartan();
    let node_txt = |i: usize| -> String {
        let s = kac.labels[i];
        let dot = if s > 0 { "*" } else { "o" };
        let lbl = if s > 1 { format!("{s}") } else { String::new() };
        format!("[{i}]{dot}{lbl}")
    };
    let edge_txt = |i: usize, j: usize| -> String {
        let mult = (gcm[i][j] * gcm[j][i]).max(1);
        if mult == 1 {
            "---".to_string()
        } else if gcm[i][j] <= -2 {
            // i is the short side (its row carries the big entry toward j)
            format!("={mult}>=")
        } else {
            format!("=<{mult}=")
        }
    };
    // build adjacency
    let deg = |i: usize| (0..n).filter(|&j| j != i && gcm[i][j] != 0).count();
    let neighbors = |i: usize| -> Vec<usize> {
        (0..n).filter(|&j| j != i && gcm[i][j] != 0).collect()
    };
    let edge_count: usize = (0..n).map(deg).sum::<usize>() / 2;
    let mut lines = Vec::new();
    if edge_count == n {
        // cycle (untwisted A_l, l >= 2): print the chain and repeat node 0
        let mut chain = vec![0usize];
        let mut prev = 0;
        let mut cur = neighbors(0)[0];
        while cur != 0 {
            chain.push(cur);
            let next = neighbors(cur).into_iter().find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        let mut line = String::new();
        for (idx, &i) in chain.iter().enumerate() {
            line.push_str(&node_txt(i));
            let j = chain[(idx + 1) % chain.len()];
            line.push_str(&edge_txt(i, j));
        }
        line.push_str("[0]");
        lines.push(line);
        lines.push("(the final edge closes the cycle back to node 0)".into());
    } else {
        // tree: longest path as the main line, branch nodes below
        let path = longest_path(n, &neighbors);
        let on_path: std::collections::HashSet<usize> = path.iter().copied().collect();
        let mut line = String::new();
        let mut branch_at: Vec<(usize, usize)> = Vec::new(); // (column, branch node)
        for (idx, &i) in path.iter().enumerate() {
            let col = line.chars().count();
            for j in neighbors(i) {
                if !on_path.contains(&j) {
                    branch_at.push((col + 3, j)); // roughly under the node symbol
                }
            }
            line.push_str(&node_txt(i));
            if idx + 1 < path.len() {
                line.push_str(&edge_txt(i, path[idx + 1]));
            }
        }
        lines.push(line);
        for (col, j) in branch_at {
            let mut bar = " ".repeat(col);
            bar.push('|');
            lines.push(bar);
            let mut nd = " ".repeat(col.saturating_sub(2));
            nd.push_str(&node_txt(j));
            lines.push(nd);
        }
    }
    lines.join("\n")
}

fn longest_path(n: usize, neighbors: &dyn Fn(usize) -> Vec<usize>) -> Vec<usize> {
    // two BFS passes from an endpoint; fine for trees of <= 9 nodes
    fn bfs(n: usize, start: usize, neighbors: &dyn Fn(usize) -> Vec<usize>) -> (usize, Vec<i64>) {
        let mut dist = vec![-1i64; n];
        dist[start] = 0;
        let mut q = std::collections::VecDeque::from([start]);
        let mut far = start;
        while let Some(u) = q.pop_front() {
            for v in neighbors(u) {
                if dist[v] < 0 {
                    dist[v] = dist[u] + 1;
                    if dist[v] > dist[far] {
                        far = v;
                    }
                    q.push_back(v);
                }
            }
        }
        (far, dist)
    }
    let (a, _) = bfs(n, 0, neighbors);
    let (b, dist) = bfs(n, a, neighbors);
    // walk back from b to a
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        let next = neighbors(cur)
            .into_iter()
            .find(|&x| dist[x] == dist[cur] - 1)
            .unwrap();
        path.push(next);
        cur = next;
    }
    path
}

impl fmt::Display for FixedSubalgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.simple_factors.is_empty() {
            write!(f, "trivial")?;
        } else {
            let parts: Vec<String> = self
                .simple_factors
                .iter()
                .map(|(fam, r)| format!("{fam}{r}"))
                .collect();
            write!(f, "{}", parts.join("+"))?;
        }
        if self.center_dim > 0 {
            write!(f, " + center^{}", self.center_dim)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn kac(spec: &str) -> KacCoordinates {
        parse_kac_spec(spec).unwrap()
    }

    #[test]
    fn orders_of_named_classes() {
        assert_eq!(kac("E6^(1) s=[1,0,0,0,1,0,0]").order(), 4);
        assert_eq!(kac("E7^(1) s=[0,0,0,0,1,0,0,0]").order(), 4);
        assert_eq!(kac("E6^(2) s=[0,0,0,1,0]").order(), 4);
        assert_eq!(kac("A1^(1) s=[1,1]").order(), 2);
    }

    #[test]
    fn fixed_subalgebras_of_named_classes() {
        let t1 = kac("E6^(1) s=[1,0,0,0,1,0,0]").fixed_subalgebra_type();
        assert_eq!(
            t1.simple_factors,
            vec![(Family::A, 2), (Family::A, 2), (Family::A, 1)]
        );
        assert_eq!(t1.center_dim, 1);

        let t2 = kac("E6^(1) s=[0,1,1,0,0,0,1]").fixed_subalgebra_type();
        assert_eq!(t2.simple_factors, vec![(Family::A, 3), (Family::A, 1)]);
        assert_eq!(t2.center_dim, 2);

        let e7 = kac("E7^(1) s=[0,0,0,0,1,0,0,0]").fixed_subalgebra_type();
        assert_eq!(
            e7.simple_factors,
            vec![(Family::A, 3), (Family::A, 3), (Family::A, 1)]
        );
        assert_eq!(e7.center_dim, 0);

        let outer = kac("E6^(2) s=[0,0,0,1,0]").fixed_subalgebra_type();
        assert_eq!(outer.simple_factors, vec![(Family::A, 3), (Family::A, 1)]);
        assert_eq!(outer.center_dim, 0);
    }

    #[test]
    fn graded_dims_small() {
        let a2 = kac("A2^(1) s=[1,1,1]");
        assert_eq!(a2.graded_dimensions_inner().unwrap().dims, vec![2, 3, 3]);
        let t1 = kac("E6^(1) s=[1,0,0,0,1,0,0]");
        let d = t1.graded_dimensions_inner().unwrap();
        assert_eq!(d.dims[0], 20);
        assert_eq!(d.dims[1], 20);
        assert_eq!(d.dims.iter().sum::<usize>(), 78);
        let e7 = kac("E7^(1) s=[0,0,0,0,1,0,0,0]");
        let d = e7.graded_dimensions_inner().unwrap();
        assert_eq!(d.dims[1], 32);
        assert_eq!(d.dims[0], 33);
        // outer refuses
        assert!(kac("E6^(2) s=[0,0,0,1,0]").graded_dimensions_inner().is_err());
    }

    #[test]
    fn canonical_classes() {
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(canonical_nregular(&a1, 1, 2).unwrap().labels, vec![1, 1]);
        assert_eq!(canonical_nregular(&a1, 1, 3).unwrap().labels, vec![2, 1]);
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(canonical_nregular(&a2, 1, 3).unwrap().labels, vec![1, 1, 1]);
        // order 1 is the identity class
        assert_eq!(canonical_nregular(&a2, 1, 1).unwrap().labels, vec![1, 0, 0]);
    }

    #[test]
    fn nregular_decision_for_e6() {
        let t1 = kac("E6^(1) s=[1,0,0,0,1,0,0]");
        assert!(is_nregular(&t1).unwrap());
        let t2 = kac("E6^(1) s=[0,1,1,0,0,0,1]");
        assert!(!is_nregular(&t2).unwrap());
        let e7 = kac("E7^(1) s=[0,0,0,0,1,0,0,0]");
        assert!(!is_nregular(&e7).unwrap());
    }

    #[test]
    fn twisted_canonical_is_the_named_outer_class() {
        let e6 = RootSystem::new(Family::E, 6).unwrap();
        let c = canonical_nregular(&e6, 2, 4).unwrap();
        assert_eq!(c.labels, vec![0, 0, 0, 1, 0]);
        assert!(canonical_nregular(&e6, 2, 5).is_err());
    }

    #[test]
    fn normalize_idempotent_and_order_preserving() {
        let d = Arc::new(AffineDiagram::from_type(Family::A, 2, 1).unwrap());
        for raw in [vec![3, -1, 1], vec![-2, 4, 1], vec![0, -1, 4]] {
            let k = normalize_raw(&d, &raw).unwrap();
            let level: i64 = raw.iter().sum();
            assert_eq!(k.order() as i64, level);
            let again = k.normalize();
            assert_eq!(again.labels, k.labels);
            assert!(k.labels.iter().all(|&s| s >= 0));
        }
    }

    #[test]
    fn enumerate_counts() {
        let a1 = Arc::new(AffineDiagram::from_type(Family::A, 1, 1).unwrap());
        let cls = enumerate_classes(&a1, 2).unwrap();
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].labels, vec![1, 1]);

        let a2 = Arc::new(AffineDiagram::from_type(Family::A, 2, 1).unwrap());
        let cls = enumerate_classes(&a2, 3).unwrap();
        assert_eq!(cls.len(), 2);

        let e6 = Arc::new(AffineDiagram::from_type(Family::E, 6, 1).unwrap());
        let cls = enumerate_classes(&e6, 4).unwrap();
        let t1 = kac("E6^(1) s=[1,0,0,0,1,0,0]").normalize().labels;
        let t2 = kac("E6^(1) s=[0,1,1,0,0,0,1]").normalize().labels;
        assert!(cls.iter().any(|k| k.labels == t1));
        assert!(cls.iter().any(|k| k.labels == t2));
        assert_ne!(t1, t2);
    }

    #[test]
    fn parse_render_roundtrip() {
        for spec in [
            "E6^(1) s=[1,0,0,0,1,0,0]",
            "E6^(2) s=[0,0,0,1,0]",
            "A1^(1) s=[1,1]",
            "D4^(3) s=[0,0,1]",
        ] {
            let k = parse_kac_spec(spec).unwrap();
            let rendered = k.render_spec();
            let k2 = parse_kac_spec(&rendered).unwrap();
            assert_eq!(k.labels, k2.labels);
            assert_eq!(k.diagram.type_label(), k2.diagram.type_label());
        }
        assert!(parse_kac_spec("H3^(1) s=[1]").is_err());
        assert!(parse_kac_spec("E6^(1) s=[2,0,0,0,2,0,0]").is_err()); // gcd 2
        assert!(parse_kac_spec("E6^(1) s=[1,0]").is_err());
    }

    #[test]
    fn ascii_rendering_smoke() {
        let a2 = ascii_diagram(&kac("A2^(1) s=[1,1,1]"));
        assert!(a2.contains('*'));
        let e62 = ascii_diagram(&kac("E6^(2) s=[0,0,0,1,0]"));
        assert!(e62.contains("=<2=") || e62.contains("=2>="));
        let e6 = ascii_diagram(&kac("E6^(1) s=[1,0,0,0,1,0,0]"));
        assert!(e6.lines().count() >= 3);
    }
}
