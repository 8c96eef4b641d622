//! The monomial crystal: Laurent monomials in the variables y_{i,k}, the
//! Kashiwara operators acting by z_{i,k}^{±1}, and generation of the
//! product monomial crystal B(R) from its defining product formula.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::dynkin::{parity_of, DynkinGraph, Vertex, WeightVec};
use crate::error::{Error, Result};
use crate::exec;
use crate::multiset::{factorize, y_product, ParamSet};

/// A Laurent monomial in the variables y_{i,k}. Keys are (vertex, longitude);
/// zero exponents are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<(Vertex, i64), i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn y(i: Vertex, k: i64) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert((i, k), 1);
        Monomial { exps }
    }

    pub fn from_exponents(it: impl IntoIterator<Item = ((Vertex, i64), i64)>) -> Self {
        let mut m = Self::one();
        for ((i, k), e) in it {
            m.add_exp(i, k, e);
        }
        m
    }

    fn add_exp(&mut self, i: Vertex, k: i64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exps.entry((i, k)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&(i, k));
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: Vertex, k: i64) -> i64 {
        self.exps.get(&(i, k)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Vertex, i64), i64)> + '_ {
        self.exps.iter().map(|(&key, &e)| (key, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for ((i, k), e) in other.iter() {
            out.add_exp(i, k, e);
        }
        out
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(&k, &e)| (k, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(&k, &e)| (k, e * n)).collect(),
        }
    }

    /// Entry with the minimal longitude (ties broken by vertex id).
    pub fn min_longitude_entry(&self) -> Option<((Vertex, i64), i64)> {
        self.iter().min_by_key(|&((i, k), _)| (k, i))
    }

    /// wt(p) = sum_i (total y_{i,*} exponent) * varpi_i.
    pub fn weight(&self) -> WeightVec {
        let mut w = WeightVec::zero();
        for ((i, _), e) in self.iter() {
            w.add_coeff(i, e);
        }
        w
    }

    /// Serialization: sorted [i, k, exponent] triples.
    pub fn to_triples(&self) -> Vec<(Vertex, i64, i64)> {
        self.iter().map(|((i, k), e)| (i, k, e)).collect()
    }

    pub fn from_triples(triples: &[(Vertex, i64, i64)]) -> Self {
        Self::from_exponents(triples.iter().map(|&(i, k, e)| ((i, k), e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for ((i, k), e) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "y({i},{k})")?;
            } else {
                write!(f, "y({i},{k})^{e}")?;
            }
        }
        Ok(())
    }
}

/// z_{i,k} = y_{i,k} y_{i,k+2} / prod_{j ~ i} y_{j,k+1}.
pub fn z_monomial(g: &DynkinGraph, i: Vertex, k: i64) -> Result<Monomial> {
    if !g.contains(i) {
        return Err(Error::UnknownVertex(i));
    }
    if parity_of(k) != g.parity(i) {
        return Err(Error::ParityMismatch {
            vertex: i,
            longitude: k,
        });
    }
    let mut m = Monomial::y(i, k).mul(&Monomial::y(i, k + 2));
    for &j in g.neighbors(i) {
        m = m.mul(&Monomial::y(j, k + 1).inv());
    }
    Ok(m)
}

/// String data of a monomial in direction i: the statistics eps_i, phi_i
/// and the extremal longitudes where they are attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StringData {
    pub eps: i64,
    pub phi: i64,
    /// minimal m with eps_i^m = eps_i, when eps_i > 0 (used by the raising operator)
    pub m_min: Option<i64>,
    /// maximal m with phi_i^m = phi_i, when phi_i > 0 (used by the lowering operator)
    pub m_max: Option<i64>,
}

pub fn string_data(p: &Monomial, i: Vertex) -> StringData {
    let support: Vec<(i64, i64)> = p
        .iter()
        .filter(|&((j, _), _)| j == i)
        .map(|((_, k), e)| (k, e))
        .collect();
    // eps^m = -sum_{l <= m} d_l, maximized at support points
    let mut eps = 0i64;
    let mut m_min = None;
    let mut prefix = 0i64;
    for &(k, e) in &support {
        prefix += e;
        if -prefix > eps {
            eps = -prefix;
            m_min = Some(k);
        }
    }
    // phi^m = sum_{l >= m} d_l, maximized at support points
    let mut phi = 0i64;
    let mut m_max = None;
    let mut suffix = 0i64;
    for &(k, e) in support.iter().rev() {
        suffix += e;
        if suffix > phi {
            phi = suffix;
            m_max = Some(k);
        }
    }
    StringData {
        eps,
        phi,
        m_min,
        m_max,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    /// Kashiwara raising operator (multiplies by z_{i,m}).
    Raise,
    /// Kashiwara lowering operator (multiplies by z_{i,m-2}^{-1}).
    Lower,
}

/// Apply a Kashiwara operator; `None` when the operator kills p. Also
/// returns the longitude of the z-factor that was applied.
pub fn kashiwara_with_longitude(
    g: &DynkinGraph,
    p: &Monomial,
    i: Vertex,
    dir: Dir,
) -> Option<(Monomial, i64)> {
    let sd = string_data(p, i);
    match dir {
        Dir::Raise => {
            if sd.eps == 0 {
                return None;
            }
            let m = sd.m_min.expect("eps > 0 implies a witness longitude");
            let z = z_monomial(g, i, m).expect("support longitudes have the vertex parity");
            Some((p.mul(&z), m))
        }
        Dir::Lower => {
            if sd.phi == 0 {
                return None;
            }
            let m = sd.m_max.expect("phi > 0 implies a witness longitude");
            let z = z_monomial(g, i, m - 2).expect("support longitudes have the vertex parity");
            Some((p.mul(&z.inv()), m - 2))
        }
    }
}

pub fn kashiwara(g: &DynkinGraph, p: &Monomial, i: Vertex, dir: Dir) -> Option<Monomial> {
    kashiwara_with_longitude(g, p, i, dir).map(|(m, _)| m)
}

pub const DEFAULT_DEPTH_LIMIT: usize = 10_000;

/// Kashiwara closure of y_{i,c} under the lowering operators, with the
/// number of lowering steps (= root-lattice depth) per element.
pub fn fundamental_crystal(
    g: &DynkinGraph,
    i: Vertex,
    c: i64,
    depth_limit: Option<usize>,
) -> Result<Vec<(Monomial, u32)>> {
    let limit = depth_limit.unwrap_or(DEFAULT_DEPTH_LIMIT);
    let start = Monomial::y(i, c);
    if parity_of(c) != g.parity(i) {
        return Err(Error::ParityMismatch {
            vertex: i,
            longitude: c,
        });
    }
    let mut seen: BTreeMap<Monomial, u32> = BTreeMap::new();
    seen.insert(start.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut expansions = 0usize;
    while let Some(p) = queue.pop_front() {
        expansions += 1;
        if expansions > limit {
            return Err(Error::DepthLimit(limit));
        }
        let d = seen[&p];
        for &j in g.vertices() {
            if let Some(next) = kashiwara(g, &p, j, Dir::Lower) {
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The product monomial crystal as a labeled graph: nodes are monomials,
/// edges (src, i, dst) mean the lowering operator at i maps src to dst.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub nodes: Vec<Monomial>,
    pub edges: Vec<(usize, Vertex, usize)>,
}

impl CrystalGraph {
    pub fn node_index(&self, p: &Monomial) -> Option<usize> {
        self.nodes.binary_search(p).ok()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// B(R): the set of all products of one element from each fundamental
/// crystal B(varpi_i, c), over all parameters c in R_i with multiplicity,
/// deduplicated; edges are attached by re-applying the Kashiwara operators.
pub fn generate_product_crystal(
    g: &DynkinGraph,
    r: &ParamSet,
    depth_limit: Option<usize>,
) -> Result<CrystalGraph> {
    r.validate(g)?;
    let factors: Vec<Vec<Monomial>> = {
        let params: Vec<(Vertex, i64)> = r.iter().collect();
        let closures = exec::map_vec(params, |(i, c)| {
            fundamental_crystal(g, i, c, depth_limit)
                .map(|v| v.into_iter().map(|(m, _)| m).collect::<Vec<_>>())
        });
        let mut out = Vec::new();
        for c in closures {
            out.push(c?);
        }
        out
    };
    let mut products: BTreeSet<Monomial> = BTreeSet::new();
    products.insert(Monomial::one());
    for factor in &factors {
        let base: Vec<Monomial> = products.into_iter().collect();
        let chunks = exec::flat_map_vec(base, |p| {
            factor.iter().map(|q| p.mul(q)).collect::<Vec<_>>()
        });
        products = chunks.into_iter().collect();
    }
    // For resonant parameters the set of products can contain the identity
    // monomial (a cancellation y_{i,c} * y_{i,c}^{-1}); the crystal excludes
    // it. No Kashiwara operator ever produces the identity from a nontrivial
    // monomial, so the remaining set is still closed.
    products.remove(&Monomial::one());
    let nodes: Vec<Monomial> = products.into_iter().collect();
    let edge_map: BTreeMap<&Monomial, usize> =
        nodes.iter().enumerate().map(|(idx, m)| (m, idx)).collect();
    let indexed: Vec<(usize, Monomial)> = nodes.iter().cloned().enumerate().collect();
    let edges = exec::flat_map_vec(indexed, |(src, p)| {
        let mut out = Vec::new();
        for &i in g.vertices() {
            if let Some(q) = kashiwara(g, &p, i, Dir::Lower) {
                if let Some(&dst) = edge_map.get(&q) {
                    out.push((src, i, dst));
                }
            }
        }
        out
    });
    Ok(CrystalGraph { nodes, edges })
}

/// A closure violation: applying the operator escaped the node set.
#[derive(Debug, Clone)]
pub struct ClosureViolation {
    pub node: Monomial,
    pub vertex: Vertex,
    pub dir: Dir,
    pub image: Monomial,
}

/// Verification pass for the subcrystal property: every Kashiwara image of
/// every node is either absent or again a node.
pub fn check_closure(g: &DynkinGraph, crystal: &CrystalGraph) -> Vec<ClosureViolation> {
    let nodes: BTreeSet<&Monomial> = crystal.nodes.iter().collect();
    let items: Vec<&Monomial> = crystal.nodes.iter().collect();
    exec::flat_map_vec(items, |p| {
        let mut out = Vec::new();
        for &i in g.vertices() {
            for dir in [Dir::Raise, Dir::Lower] {
                if let Some(q) = kashiwara(g, p, i, dir) {
                    if !nodes.contains(&q) {
                        out.push(ClosureViolation {
                            node: p.clone(),
                            vertex: i,
                            dir,
                            image: q,
                        });
                    }
                }
            }
        }
        out
    })
}

/// Elements of B(R) whose depth `ht(lambda - wt)` is at most `budget`,
/// without materializing the whole crystal. Exact for the weight slices
/// at depth <= budget because products are graded by total depth.
pub fn product_crystal_depth_slice(
    g: &DynkinGraph,
    r: &ParamSet,
    budget: u32,
    depth_limit: Option<usize>,
) -> Result<Vec<Monomial>> {
    r.validate(g)?;
    let mut factors: Vec<Vec<(Monomial, u32)>> = Vec::new();
    for (i, c) in r.iter() {
        let all = fundamental_crystal(g, i, c, depth_limit)?;
        factors.push(all.into_iter().filter(|&(_, d)| d <= budget).collect());
    }
    let mut acc: BTreeSet<(u32, Monomial)> = BTreeSet::new();
    acc.insert((0, Monomial::one()));
    for factor in &factors {
        let mut next = BTreeSet::new();
        for (d, p) in &acc {
            for (q, dq) in factor {
                let nd = d + dq;
                if nd <= budget {
                    next.insert((nd, p.mul(q)));
                }
            }
        }
        acc = next;
    }
    let mut set: BTreeSet<Monomial> = acc.into_iter().map(|(_, m)| m).collect();
    set.remove(&Monomial::one());
    Ok(set.into_iter().collect())
}

/// DOT export. Nodes are labeled in the y_R z_S^{-1} form when `r` is
/// given (falling back to the raw y-form when factorization fails).
pub fn crystal_to_dot(g: &DynkinGraph, crystal: &CrystalGraph, r: Option<&ParamSet>) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
    for (idx, node) in crystal.nodes.iter().enumerate() {
        let label = node_label(g, node, r);
        out.push_str(&format!("  n{idx} [label=\"{label}\"];\n"));
    }
    for &(src, i, dst) in &crystal.edges {
        out.push_str(&format!("  n{src} -> n{dst} [label=\"{i}\"];\n"));
    }
    out.push_str("}\n");
    out
}

pub fn node_label(g: &DynkinGraph, node: &Monomial, r: Option<&ParamSet>) -> String {
    if let Some(r) = r {
        if let Ok(s) = factorize(g, node, r) {
            if s.is_empty() {
                return "y_R".to_string();
            }
            let mut label = String::from("y_R");
            for (i, k) in s.iter() {
                label.push_str(&format!(" z({i},{k})^-1"));
            }
            return label;
        }
    }
    node.to_string()
}

/// JSON export of a crystal graph: nodes as sorted triple lists, edges as
/// (src, vertex, dst) index triples.
pub fn crystal_to_json(crystal: &CrystalGraph) -> String {
    #[derive(serde::Serialize)]
    struct Out<'a> {
        nodes: Vec<Vec<(Vertex, i64, i64)>>,
        edges: &'a [(usize, Vertex, usize)],
    }
    serde_json::to_string_pretty(&Out {
        nodes: crystal.nodes.iter().map(Monomial::to_triples).collect(),
        edges: &crystal.edges,
    })
    .expect("serializable")
}

/// Highest-weight monomial check: killed by every raising operator.
pub fn is_highest_weight(g: &DynkinGraph, p: &Monomial) -> bool {
    g.vertices().iter().all(|&i| string_data(p, i).eps == 0)
}

pub fn y_r(r: &ParamSet) -> Monomial {
    y_product(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> DynkinGraph {
        DynkinGraph::path(1, 1)
    }

    fn a2() -> DynkinGraph {
        DynkinGraph::new(&[(1, 1), (2, 0)], &[(1, 2)], &[2, 1]).unwrap()
    }

    #[test]
    fn z_monomial_cases() {
        let g = a1();
        // no neighbours: z_{1,k} = y_{1,k} y_{1,k+2}
        let z = z_monomial(&g, 1, 1).unwrap();
        assert_eq!(z, Monomial::from_exponents([((1, 1), 1), ((1, 3), 1)]));

        let g = a2();
        let z = z_monomial(&g, 1, -3).unwrap();
        assert_eq!(
            z,
            Monomial::from_exponents([((1, -3), 1), ((1, -1), 1), ((2, -2), -1)])
        );
        // parity mismatch
        assert!(z_monomial(&g, 1, 0).is_err());
    }

    #[test]
    fn z_has_weight_alpha() {
        for g in [a1(), a2(), DynkinGraph::path(3, 1)] {
            for &i in g.vertices() {
                let k = if g.parity(i) == 0 { 0 } else { 1 };
                let z = z_monomial(&g, i, k).unwrap();
                let alpha = g.root_to_weight(&crate::dynkin::RootVec::basis(i));
                assert_eq!(z.weight(), alpha);
            }
        }
    }

    #[test]
    fn weight_basics() {
        assert_eq!(Monomial::y(1, 5).weight(), WeightVec::basis(1));
        assert!(Monomial::one().weight().is_zero());
    }

    #[test]
    fn string_data_cases() {
        let g = a2();
        // single dominant variable
        let sd = string_data(&Monomial::y(1, 3), 1);
        assert_eq!((sd.eps, sd.phi, sd.m_max), (0, 1, Some(3)));

        // y_R = y_{1,-1} y_{2,2}: phi_1 = 1 attained at -1
        let y_r = Monomial::y(1, -1).mul(&Monomial::y(2, 2));
        let sd = string_data(&y_r, 1);
        assert_eq!((sd.phi, sd.m_max), (1, Some(-1)));

        // y_{2,2} y_{2,-2} y_{1,-3}^{-1}: phi_2 = 2 attained at -2
        let p = Monomial::from_exponents([((2, 2), 1), ((2, -2), 1), ((1, -3), -1)]);
        let sd = string_data(&p, 2);
        assert_eq!((sd.phi, sd.m_max), (2, Some(-2)));
        let _ = g;
    }

    #[test]
    fn kashiwara_matches_worked_example_edge() {
        let g = a2();
        let y_r = Monomial::y(1, -1).mul(&Monomial::y(2, 2));
        let (lowered, long) = kashiwara_with_longitude(&g, &y_r, 1, Dir::Lower).unwrap();
        assert_eq!(long, -3);
        let expected = y_r.mul(&z_monomial(&g, 1, -3).unwrap().inv());
        assert_eq!(lowered, expected);
        // raising a single y kills it
        assert!(kashiwara(&g, &Monomial::y(1, 1), 1, Dir::Raise).is_none());
    }

    #[test]
    fn kashiwara_partial_inverse() {
        let g = a2();
        let y_r = Monomial::y(1, -1).mul(&Monomial::y(2, 2));
        let mut frontier = vec![y_r];
        for _ in 0..4 {
            let mut next = Vec::new();
            for p in &frontier {
                for &i in g.vertices() {
                    if let Some(q) = kashiwara(&g, p, i, Dir::Lower) {
                        assert_eq!(kashiwara(&g, &q, i, Dir::Raise).as_ref(), Some(p));
                        assert_eq!(
                            q.weight(),
                            p.weight()
                                .sub(&g.root_to_weight(&crate::dynkin::RootVec::basis(i)))
                        );
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
    }

    #[test]
    fn fundamental_a1_has_two_elements() {
        let g = a1();
        let c = fundamental_crystal(&g, 1, 5, None).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn product_crystal_worked_example_size() {
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![2])]);
        let b = generate_product_crystal(&g, &r, None).unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b.edges.len(), 8);
        assert!(check_closure(&g, &b).is_empty());
    }

    #[test]
    fn product_crystal_generic_size_is_tensor_size() {
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![100])]);
        let b = generate_product_crystal(&g, &r, None).unwrap();
        assert_eq!(b.len(), 9);
    }

    #[test]
    fn depth_slice_agrees_with_full_generation() {
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![2])]);
        let full = generate_product_crystal(&g, &r, None).unwrap();
        let slice = product_crystal_depth_slice(&g, &r, 2, None).unwrap();
        let lambda = r.weight();
        let expect: Vec<&Monomial> = full
            .nodes
            .iter()
            .filter(|p| {
                g.weight_to_root(&lambda.sub(&p.weight()))
                    .is_some_and(|rt| rt.height() <= 2)
            })
            .collect();
        assert_eq!(slice.iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn depth_limit_guards_closures() {
        let g = a2();
        assert!(matches!(
            fundamental_crystal(&g, 1, -1, Some(1)),
            Err(Error::DepthLimit(1))
        ));
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![2])]);
        assert!(generate_product_crystal(&g, &r, Some(1)).is_err());
    }

    #[test]
    fn triple_serialization_round_trip() {
        let p = Monomial::from_exponents([((1, -3), 2), ((2, 4), -1)]);
        assert_eq!(Monomial::from_triples(&p.to_triples()), p);
    }

    #[test]
    fn string_identity_on_generated_crystal() {
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![2])]);
        let b = generate_product_crystal(&g, &r, None).unwrap();
        for p in &b.nodes {
            for &i in g.vertices() {
                let sd = string_data(p, i);
                assert_eq!(sd.phi - sd.eps, g.pairing_weight(&p.weight(), i).unwrap());
            }
        }
    }
}
