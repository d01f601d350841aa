//! Root systems of the finite crystallographic types, stored exactly.
//!
//! Roots are integer coefficient vectors over the simple roots in Bourbaki
//! numbering; the invariant bilinear form is derived from the Cartan matrix
//! by the standard symmetrizer, so everything stays in integer arithmetic.

use crate::linalg::Matrix;
use crate::{Error, IntMatrix, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
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
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "A" | "a" => Some(Family::A),
            "B" | "b" => Some(Family::B),
            "C" | "c" => Some(Family::C),
            "D" | "d" => Some(Family::D),
            "E" | "e" => Some(Family::E),
            "F" | "f" => Some(Family::F),
            "G" | "g" => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// One root: coefficients over the simple roots, cached height and norm.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub height: i64,
    pub norm: i64,
}

impl Root {
    pub fn is_long(&self, rs: &RootSystem) -> bool {
        self.norm == rs.max_norm
    }
}

/// Immutable root datum for one simple type.
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// cartan[(i,j)] = <alpha_i, alpha_j^vee>
    pub cartan: IntMatrix,
    /// Symmetrizer: (alpha_i, alpha_i) = 2 d_i in the scaled form.
    pub d: Vec<i64>,
    /// All roots; positives first (sorted by height then lex), and the
    /// negative of root k sits at index k + n_pos.
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    beta1: usize,
    max_norm: i64,
    refl_mats: Vec<IntMatrix>,
    refl_perms: Vec<Vec<u32>>,
}

fn chain_cartan(n: usize) -> IntMatrix {
    let mut c = Matrix::zeros(n, n);
    for i in 0..n {
        c[(i, i)] = 2;
        if i + 1 < n {
            c[(i, i + 1)] = -1;
            c[(i + 1, i)] = -1;
        }
    }
    c
}

fn cartan_and_symmetrizer(family: Family, rank: usize) -> Result<(IntMatrix, Vec<i64>)> {
    let bad = |reason: &str| Error::InvalidType {
        family,
        rank,
        reason: reason.to_string(),
    };
    let n = rank;
    match family {
        Family::A => {
            if n < 1 {
                return Err(bad("A_n needs n >= 1"));
            }
            Ok((chain_cartan(n), vec![1; n]))
        }
        Family::B => {
            if n < 2 {
                return Err(bad("B_n needs n >= 2"));
            }
            let mut c = chain_cartan(n);
            c[(n - 2, n - 1)] = -2;
            let mut d = vec![2; n];
            d[n - 1] = 1;
            Ok((c, d))
        }
        Family::C => {
            if n < 2 {
                return Err(bad("C_n needs n >= 2"));
            }
            let mut c = chain_cartan(n);
            c[(n - 1, n - 2)] = -2;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            Ok((c, d))
        }
        Family::D => {
            if n < 4 {
                return Err(bad("D_n needs n >= 4"));
            }
            let mut c = chain_cartan(n - 1);
            let mut full = Matrix::zeros(n, n);
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    full[(i, j)] = c[(i, j)];
                }
            }
            c = full;
            c[(n - 1, n - 1)] = 2;
            c[(n - 3, n - 1)] = -1;
            c[(n - 1, n - 3)] = -1;
            Ok((c, vec![1; n]))
        }
        Family::E => {
            if !(6..=8).contains(&n) {
                return Err(bad("E_n needs n in 6..8"));
            }
            let mut c = Matrix::zeros(n, n);
            for i in 0..n {
                c[(i, i)] = 2;
            }
            let mut edges = vec![(0usize, 2usize), (1, 3), (2, 3), (3, 4), (4, 5)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n == 8 {
                edges.push((6, 7));
            }
            for (i, j) in edges {
                c[(i, j)] = -1;
                c[(j, i)] = -1;
            }
            Ok((c, vec![1; n]))
        }
        Family::F => {
            if n != 4 {
                return Err(bad("F_n needs n = 4"));
            }
            let mut c = chain_cartan(4);
            c[(1, 2)] = -2;
            Ok((c, vec![2, 2, 1, 1]))
        }
        Family::G => {
            if n != 2 {
                return Err(bad("G_n needs n = 2"));
            }
            let mut c = Matrix::zeros(2, 2);
            c[(0, 0)] = 2;
            c[(1, 1)] = 2;
            c[(0, 1)] = -1;
            c[(1, 0)] = -3;
            Ok((c, vec![1, 3]))
        }
    }
}

/// Builds the root system for one simple type; roots come from reflection
/// closure of the simple roots.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let (cartan, d) = cartan_and_symmetrizer(family, rank)?;
    let n = rank;

    let pairing = |v: &[i64], j: usize| -> i64 {
        (0..n).map(|i| v[i] * cartan[(i, j)]).sum()
    };
    let reflect_simple = |v: &[i64], i: usize| -> Vec<i64> {
        let k = pairing(v, i);
        let mut out = v.to_vec();
        out[i] -= k;
        out
    };

    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        seen.insert(v.clone(), ());
        queue.push(v);
    }
    while let Some(v) = queue.pop() {
        for i in 0..n {
            let w = reflect_simple(&v, i);
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), ());
                queue.push(w);
            }
        }
    }

    let norm_of = |v: &[i64]| -> i64 {
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += v[i] * d[j] * cartan[(i, j)] * v[j];
            }
        }
        acc
    };

    let mut positives: Vec<Root> = seen
        .keys()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .map(|v| Root {
            coeffs: v.clone(),
            height: v.iter().sum(),
            norm: norm_of(v),
        })
        .collect();
    positives.sort_by(|a, b| (a.height, &a.coeffs).cmp(&(b.height, &b.coeffs)));
    let n_pos = positives.len();
    assert_eq!(seen.len(), 2 * n_pos, "root set must be symmetric");

    let mut roots = positives;
    for k in 0..n_pos {
        let neg = Root {
            coeffs: roots[k].coeffs.iter().map(|c| -c).collect(),
            height: -roots[k].height,
            norm: roots[k].norm,
        };
        roots.push(neg);
    }
    let index: HashMap<Vec<i64>, usize> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| (r.coeffs.clone(), k))
        .collect();

    let beta1 = (0..n_pos)
        .max_by_key(|&k| roots[k].height)
        .expect("nonempty root system");
    let max_norm = roots.iter().map(|r| r.norm).max().unwrap();

    let mut rs = RootSystem {
        family,
        rank,
        cartan,
        d,
        roots,
        n_pos,
        index,
        beta1,
        max_norm,
        refl_mats: Vec::new(),
        refl_perms: Vec::new(),
    };

    for i in 0..n {
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![0i64; n];
            e[j] = 1;
            let img = rs.reflect_simple(&e, i);
            for (r, &val) in img.iter().enumerate() {
                m[(r, j)] = val;
            }
        }
        rs.refl_mats.push(m);
    }
    for i in 0..n {
        let perm: Vec<u32> = (0..rs.roots.len())
            .map(|k| {
                let img = rs.reflect_simple(&rs.roots[k].coeffs, i);
                rs.index[&img] as u32
            })
            .collect();
        rs.refl_perms.push(perm);
    }
    Ok(rs)
}

impl RootSystem {
    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn all_roots(&self) -> &[Root] {
        &self.roots
    }

    /// Index of -root_k.
    pub fn negate(&self, k: usize) -> usize {
        if k < self.n_pos {
            k + self.n_pos
        } else {
            k - self.n_pos
        }
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.n_pos
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut e = vec![0i64; self.rank];
        e[i] = 1;
        self.index[&e]
    }

    /// Highest root beta_1.
    pub fn highest_root(&self) -> &Root {
        &self.roots[self.beta1]
    }

    pub fn highest_root_index(&self) -> usize {
        self.beta1
    }

    /// <v, alpha_j^vee>
    pub fn pairing_simple_coroot(&self, v: &[i64], j: usize) -> i64 {
        (0..self.rank).map(|i| v[i] * self.cartan[(i, j)]).sum()
    }

    /// Scaled invariant form (u, v).
    pub fn bilinear(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += u[i] * self.d[j] * self.cartan[(i, j)] * v[j];
            }
        }
        acc
    }

    /// <x, gamma^vee> = 2 (x, gamma) / (gamma, gamma)
    pub fn pairing_coroot(&self, x: &[i64], gamma: &[i64]) -> i64 {
        let num = 2 * self.bilinear(x, gamma);
        let den = self.bilinear(gamma, gamma);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    pub fn orthogonal(&self, a: &[i64], b: &[i64]) -> bool {
        self.bilinear(a, b) == 0
    }

    pub fn reflect_simple(&self, v: &[i64], i: usize) -> Vec<i64> {
        let k = self.pairing_simple_coroot(v, i);
        let mut out = v.to_vec();
        out[i] -= k;
        out
    }

    pub fn reflect_by_root(&self, x: &[i64], gamma: &[i64]) -> Vec<i64> {
        let k = self.pairing_coroot(x, gamma);
        x.iter()
            .zip(gamma)
            .map(|(&xi, &gi)| xi - k * gi)
            .collect()
    }

    pub fn simple_reflection_matrix(&self, i: usize) -> &IntMatrix {
        &self.refl_mats[i]
    }

    /// Action of s_i on root indices.
    pub fn simple_reflection_perm(&self, i: usize) -> &[u32] {
        &self.refl_perms[i]
    }

    pub fn bad_primes(&self) -> Vec<u64> {
        match self.family {
            Family::A => vec![],
            Family::B | Family::C | Family::D => vec![2],
            Family::G | Family::F => vec![2, 3],
            Family::E => {
                if self.rank == 8 {
                    vec![2, 3, 5]
                } else {
                    vec![2, 3]
                }
            }
        }
    }

    pub fn is_good_prime(&self, p: u64) -> bool {
        !self.bad_primes().contains(&p)
    }

    /// Coefficients of gamma^vee over the simple coroots.
    pub fn coroot_coeffs(&self, gamma: &[i64]) -> Vec<i64> {
        let gg = self.bilinear(gamma, gamma);
        (0..self.rank)
            .map(|i| {
                let num = gamma[i] * 2 * self.d[i];
                debug_assert_eq!(num % gg, 0);
                num / gg
            })
            .collect()
    }

    pub fn json_doc(&self) -> RootSystemJson {
        RootSystemJson {
            family: self.family,
            rank: self.rank,
            roots: self.roots.iter().map(|r| r.coeffs.clone()).collect(),
            cartan: (0..self.rank)
                .map(|i| self.cartan.row(i).to_vec())
                .collect(),
            beta1: self.highest_root().coeffs.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RootSystemJson {
    pub family: Family,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    pub beta1: Vec<i64>,
}

/// Element of the extended basis Delta U {-beta_1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PiElt {
    Simple(usize),
    MinusHighest,
}

impl PiElt {
    pub fn name(&self) -> String {
        match self {
            PiElt::Simple(i) => format!("a{}", i + 1),
            PiElt::MinusHighest => "-b1".to_string(),
        }
    }
}

/// A subsystem with basis inside Delta U {-beta_1}.
#[derive(Debug, Clone)]
pub struct SubsystemSpec {
    pub pi: Vec<PiElt>,
    pub pi_coeffs: Vec<Vec<i64>>,
    /// Indices of the roots of Phi in the span of pi.
    pub closure: Vec<usize>,
    /// Cartan classification of the sub-Cartan matrix, sorted.
    pub components: Vec<(Family, usize)>,
    pub torus_rank: usize,
}

impl SubsystemSpec {
    pub fn type_string(&self) -> String {
        let mut s = if self.components.is_empty() {
            "torus".to_string()
        } else {
            self.components
                .iter()
                .map(|(f, r)| format!("{}{}", f, r))
                .collect::<Vec<_>>()
                .join("x")
        };
        if !self.components.is_empty() && self.torus_rank > 0 {
            s.push_str(&format!("xT{}", self.torus_rank));
        }
        s
    }

    pub fn pi_names(&self) -> String {
        self.pi
            .iter()
            .map(|e| e.name())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl RootSystem {
    fn pi_coeffs(&self, e: PiElt) -> Vec<i64> {
        match e {
            PiElt::Simple(i) => {
                let mut v = vec![0i64; self.rank];
                v[i] = 1;
                v
            }
            PiElt::MinusHighest => self
                .highest_root()
                .coeffs
                .iter()
                .map(|c| -c)
                .collect(),
        }
    }

    /// Classifies the subsystem generated by a subset of Delta U {-beta_1}.
    pub fn classify_subsystem(&self, pi: &[PiElt]) -> Result<SubsystemSpec> {
        let mut pi = pi.to_vec();
        pi.sort();
        pi.dedup();
        let coeffs: Vec<Vec<i64>> = pi.iter().map(|&e| self.pi_coeffs(e)).collect();
        let rows: Vec<&[i64]> = coeffs.iter().map(|v| v.as_slice()).collect();
        if crate::linalg::int_rank_with_row(&rows, None) != coeffs.len() {
            return Err(Error::LinearlyDependent);
        }

        // Integer-span membership: the rational solution must exist and be
        // integral (rational span is too big once pi has full rank).
        let closure: Vec<usize> = (0..self.roots.len())
            .filter(|&k| {
                let r = &self.roots[k].coeffs;
                match crate::linalg::solve_columns_exact(&rows, r) {
                    Some(sol) => sol.iter().all(|&(_, den)| den == 1),
                    None => false,
                }
            })
            .collect();

        let components = self.classify_base(&coeffs)?;
        Ok(SubsystemSpec {
            torus_rank: self.rank - pi.len(),
            pi,
            pi_coeffs: coeffs,
            closure,
            components,
        })
    }

    /// Cartan classification of an independent base of roots with pairwise
    /// non-positive products.
    pub fn classify_base(&self, base: &[Vec<i64>]) -> Result<Vec<(Family, usize)>> {
        let m = base.len();
        let mut cart = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                cart[(i, j)] = self.pairing_coroot(&base[i], &base[j]);
            }
        }
        // Connected components of the Coxeter graph.
        let mut comp = vec![usize::MAX; m];
        let mut n_comp = 0;
        for start in 0..m {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = n_comp;
            while let Some(v) = stack.pop() {
                for u in 0..m {
                    if comp[u] == usize::MAX && cart[(v, u)] != 0 {
                        comp[u] = n_comp;
                        stack.push(u);
                    }
                }
            }
            n_comp += 1;
        }
        let mut types = Vec::new();
        for c in 0..n_comp {
            let nodes: Vec<usize> = (0..m).filter(|&v| comp[v] == c).collect();
            let r = nodes.len();
            let mut sub = Matrix::zeros(r, r);
            for (a, &i) in nodes.iter().enumerate() {
                for (b, &j) in nodes.iter().enumerate() {
                    sub[(a, b)] = cart[(i, j)];
                }
            }
            types.push(identify_component(&sub)?);
        }
        types.sort();
        Ok(types)
    }
}

fn int_rank_with_row(rows: &[&[i64]], extra: Option<&[i64]>) -> usize {
    crate::linalg::int_rank_with_row(rows, extra)
}

/// Identifies a connected Cartan matrix up to simultaneous permutation.
fn identify_component(sub: &IntMatrix) -> Result<(Family, usize)> {
    let r = sub.rows();
    let mut candidates: Vec<(Family, usize)> = vec![(Family::A, r)];
    if r >= 2 {
        candidates.push((Family::B, r));
    }
    if r >= 3 {
        candidates.push((Family::C, r));
    }
    if r >= 4 {
        candidates.push((Family::D, r));
    }
    if (6..=8).contains(&r) {
        candidates.push((Family::E, r));
    }
    if r == 4 {
        candidates.push((Family::F, r));
    }
    if r == 2 {
        candidates.push((Family::G, r));
    }
    for (fam, rank) in candidates {
        let (std_cartan, _) = cartan_and_symmetrizer(fam, rank)?;
        if cartan_isomorphic(sub, &std_cartan) {
            return Ok((fam, rank));
        }
    }
    Err(Error::NotComputed(format!(
        "unrecognized Cartan component of rank {}",
        r
    )))
}

/// Permutation equivalence of two Cartan matrices (backtracking; ranks <= 8).
fn cartan_isomorphic(a: &IntMatrix, b: &IntMatrix) -> bool {
    let n = a.rows();
    if b.rows() != n {
        return false;
    }
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn bt(a: &IntMatrix, b: &IntMatrix, assign: &mut [usize], used: &mut [bool], i: usize) -> bool {
        let n = assign.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let mut ok = true;
            for j in 0..i {
                if a[(i, j)] != b[(cand, assign[j])] || a[(j, i)] != b[(assign[j], cand)] {
                    ok = false;
                    break;
                }
            }
            if ok {
                assign[i] = cand;
                used[cand] = true;
                if bt(a, b, assign, used, i + 1) {
                    return true;
                }
                used[cand] = false;
                assign[i] = usize::MAX;
            }
        }
        false
    }
    bt(a, b, &mut assign, &mut used, 0)
}

/// All proper subsets of Delta U {-beta_1} whose subsystem leaves a class
/// dimension |Phi| - |Phi(pi)| within `dim_bound`, excluding subsets whose
/// closure is all of Phi.  Purely combinatorial; deterministic order
/// (lexicographic on pi).
pub fn enumerate_semisimple_candidates(
    rs: &RootSystem,
    dim_bound: usize,
) -> Result<Vec<SubsystemSpec>> {
    let n = rs.rank;
    let universe: Vec<PiElt> = (0..n)
        .map(PiElt::Simple)
        .chain(std::iter::once(PiElt::MinusHighest))
        .collect();
    let total = rs.n_roots();
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n + 1)) {
        if mask == (1 << (n + 1)) - 1 {
            continue; // proper subsets only
        }
        let pi: Vec<PiElt> = (0..=n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| universe[i])
            .collect();
        let spec = match rs.classify_subsystem(&pi) {
            Ok(s) => s,
            Err(Error::LinearlyDependent) => continue,
            Err(e) => return Err(e),
        };
        if spec.closure.len() >= total {
            continue;
        }
        let dim = total - spec.closure.len();
        if dim <= dim_bound {
            out.push(spec);
        }
    }
    out.sort_by(|a, b| a.pi.cmp(&b.pi));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        build_root_system(f, n).unwrap()
    }

    #[test]
    fn root_counts() {
        for (f, n, count) in [
            (Family::A, 1, 1),
            (Family::A, 4, 10),
            (Family::B, 2, 4),
            (Family::B, 4, 16),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::D, 5, 20),
            (Family::G, 2, 6),
            (Family::F, 4, 24),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
        ] {
            assert_eq!(rs(f, n).n_positive(), count, "{f}{n}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(build_root_system(Family::D, 3).is_err());
        assert!(build_root_system(Family::D, 2).is_err());
        assert!(build_root_system(Family::E, 5).is_err());
        assert!(build_root_system(Family::F, 3).is_err());
        assert!(build_root_system(Family::G, 3).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
    }

    #[test]
    fn g2_highest_root() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.highest_root().coeffs, vec![3, 2]);
        assert_eq!(g2.n_roots(), 12);
    }

    #[test]
    fn a1_trivial() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.n_roots(), 2);
        assert_eq!(a1.highest_root().coeffs, vec![1]);
    }

    #[test]
    fn cn_highest_root() {
        for n in 2..=5 {
            let c = rs(Family::C, n);
            let mut expect = vec![2i64; n];
            expect[n - 1] = 1;
            assert_eq!(c.highest_root().coeffs, expect, "C{n}");
        }
    }

    #[test]
    fn highest_root_plus_simple_not_root() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
            (Family::E, 6),
        ] {
            let r = rs(f, n);
            let b1 = r.highest_root().coeffs.clone();
            for i in 0..n {
                let mut v = b1.clone();
                v[i] += 1;
                assert!(r.root_index(&v).is_none(), "{f}{n} beta1+a{}", i + 1);
            }
        }
    }

    #[test]
    fn reflection_closure_invariant() {
        for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::F, 4)] {
            let r = rs(f, n);
            for root in r.all_roots() {
                for i in 0..n {
                    let img = r.reflect_simple(&root.coeffs, i);
                    assert!(r.root_index(&img).is_some());
                }
            }
        }
    }

    #[test]
    fn bad_primes_by_family() {
        assert!(rs(Family::A, 3).bad_primes().is_empty());
        assert_eq!(rs(Family::C, 2).bad_primes(), vec![2]);
        assert_eq!(rs(Family::G, 2).bad_primes(), vec![2, 3]);
        assert_eq!(rs(Family::E, 7).bad_primes(), vec![2, 3]);
        assert_eq!(rs(Family::E, 8).bad_primes(), vec![2, 3, 5]);
    }

    #[test]
    fn classify_full_delta_is_ambient() {
        for (f, n) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 5),
            (Family::F, 4),
            (Family::G, 2),
            (Family::E, 6),
        ] {
            let r = rs(f, n);
            let pi: Vec<PiElt> = (0..n).map(PiElt::Simple).collect();
            let spec = r.classify_subsystem(&pi).unwrap();
            assert_eq!(spec.components, vec![(f, n)]);
            assert_eq!(spec.closure.len(), r.n_roots());
            assert_eq!(spec.torus_rank, 0);
        }
    }

    #[test]
    fn classify_empty_is_torus() {
        let r = rs(Family::C, 3);
        let spec = r.classify_subsystem(&[]).unwrap();
        assert!(spec.components.is_empty());
        assert!(spec.closure.is_empty());
        assert_eq!(spec.torus_rank, 3);
    }

    #[test]
    fn e6_pi1_is_a5_a1() {
        let r = rs(Family::E, 6);
        let pi = vec![
            PiElt::Simple(0),
            PiElt::Simple(2),
            PiElt::Simple(3),
            PiElt::Simple(4),
            PiElt::Simple(5),
            PiElt::MinusHighest,
        ];
        let spec = r.classify_subsystem(&pi).unwrap();
        assert_eq!(spec.components, vec![(Family::A, 1), (Family::A, 5)]);
        assert_eq!(spec.closure.len(), 32);
    }

    #[test]
    fn e7_levi_e6() {
        let r = rs(Family::E, 7);
        let pi: Vec<PiElt> = (0..6).map(PiElt::Simple).collect();
        let spec = r.classify_subsystem(&pi).unwrap();
        assert_eq!(spec.components, vec![(Family::E, 6)]);
        assert_eq!(spec.torus_rank, 1);
        assert_eq!(spec.closure.len(), 72);
    }

    #[test]
    fn dependent_subset_rejected() {
        let r = rs(Family::A, 2);
        let pi = vec![PiElt::Simple(0), PiElt::Simple(1), PiElt::MinusHighest];
        assert!(matches!(
            r.classify_subsystem(&pi),
            Err(Error::LinearlyDependent)
        ));
    }

    #[test]
    fn candidate_dims_even() {
        let r = rs(Family::F, 4);
        let total = r.n_roots();
        for spec in enumerate_semisimple_candidates(&r, 28).unwrap() {
            assert_eq!((total - spec.closure.len()) % 2, 0);
        }
    }

    #[test]
    fn candidate_enumeration_deterministic() {
        let r = rs(Family::E, 6);
        let a = enumerate_semisimple_candidates(&r, 40).unwrap();
        let b = enumerate_semisimple_candidates(&r, 40).unwrap();
        let names: Vec<String> = a.iter().map(|s| s.pi_names()).collect();
        let names2: Vec<String> = b.iter().map(|s| s.pi_names()).collect();
        assert_eq!(names, names2);
    }
}
