//! Root datum for a bipartite simply-laced graph: parities, adjacency,
//! weight/root lattice arithmetic.
//!
//! Vertices carry a parity in {0, 1} (0 = even, 1 = odd); every edge must
//! join opposite parities, and the fixed total order on vertices puts all
//! even vertices before all odd ones. Edges are oriented even -> odd.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Parity of an integer, as an element of {0, 1}.
pub fn parity_of(k: i64) -> u8 {
    (k.rem_euclid(2)) as u8
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub order: Vec<Vertex>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexSpec {
    pub id: Vertex,
    pub parity: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinGraph {
    vertices: Vec<Vertex>,
    parity: BTreeMap<Vertex, u8>,
    adj: BTreeMap<Vertex, Vec<Vertex>>,
    order: Vec<Vertex>,
    order_index: BTreeMap<Vertex, usize>,
}

impl DynkinGraph {
    /// Build and validate a graph. `vertices` lists (id, parity); `order` is
    /// the total order on vertex ids, all even before all odd.
    pub fn new(
        vertices: &[(Vertex, u8)],
        edges: &[(Vertex, Vertex)],
        order: &[Vertex],
    ) -> Result<Self> {
        let mut parity = BTreeMap::new();
        for &(v, p) in vertices {
            if p > 1 {
                return Err(Error::InvalidGraph(format!("vertex {v} has parity {p}")));
            }
            if parity.insert(v, p).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {v}")));
            }
        }
        let ids: Vec<Vertex> = parity.keys().copied().collect();
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = ids.iter().map(|&v| (v, Vec::new())).collect();
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let (pa, pb) = match (parity.get(&a), parity.get(&b)) {
                (Some(&pa), Some(&pb)) => (pa, pb),
                _ => {
                    return Err(Error::InvalidGraph(format!(
                        "edge ({a},{b}) off vertex set"
                    )))
                }
            };
            if pa == pb {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) joins two vertices of parity {pa}; the graph has an odd cycle or a bad parity assignment"
                )));
            }
            if seen.insert((a.min(b), a.max(b))) {
                adj.get_mut(&a).unwrap().push(b);
                adj.get_mut(&b).unwrap().push(a);
            }
        }
        for nbrs in adj.values_mut() {
            nbrs.sort_unstable();
        }
        if order.len() != ids.len() || order.iter().collect::<BTreeSet<_>>().len() != ids.len() {
            return Err(Error::InvalidGraph(
                "order is not a permutation of the vertex set".into(),
            ));
        }
        let mut order_index = BTreeMap::new();
        for (pos, &v) in order.iter().enumerate() {
            if !parity.contains_key(&v) {
                return Err(Error::InvalidGraph(format!(
                    "order mentions unknown vertex {v}"
                )));
            }
            order_index.insert(v, pos);
        }
        let mut seen_odd = false;
        for &v in order {
            match parity[&v] {
                1 => seen_odd = true,
                _ if seen_odd => {
                    return Err(Error::InvalidGraph(format!(
                        "even vertex {v} ordered after an odd vertex"
                    )))
                }
                _ => {}
            }
        }
        Ok(Self {
            vertices: ids,
            parity,
            adj,
            order: order.to_vec(),
            order_index,
        })
    }

    /// Type A path `1 - 2 - ... - n`, with `parity_of_one` assigned to
    /// vertex 1 and parities alternating along the path. The total order
    /// lists even vertices then odd vertices, each group ascending.
    pub fn path(n: usize, parity_of_one: u8) -> Self {
        let vertices: Vec<(Vertex, u8)> = (1..=n)
            .map(|v| (v, ((parity_of_one as usize + v - 1) % 2) as u8))
            .collect();
        let edges: Vec<(Vertex, Vertex)> = (1..n).map(|v| (v, v + 1)).collect();
        let mut order: Vec<Vertex> = vertices.iter().filter(|x| x.1 == 0).map(|x| x.0).collect();
        order.extend(vertices.iter().filter(|x| x.1 == 1).map(|x| x.0));
        Self::new(&vertices, &edges, &order).expect("path graph is valid")
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        let vertices: Vec<(Vertex, u8)> = spec.vertices.iter().map(|v| (v.id, v.parity)).collect();
        Self::new(&vertices, &spec.edges, &spec.order)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: GraphSpec = serde_json::from_str(s)?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> GraphSpec {
        let mut edges = Vec::new();
        for (&v, nbrs) in &self.adj {
            for &w in nbrs {
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        GraphSpec {
            vertices: self
                .vertices
                .iter()
                .map(|&v| VertexSpec {
                    id: v,
                    parity: self.parity[&v],
                })
                .collect(),
            edges,
            order: self.order.clone(),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.parity.contains_key(&v)
    }

    pub fn parity(&self, v: Vertex) -> u8 {
        self.parity[&v]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[&v]
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adj
            .get(&a)
            .is_some_and(|n| n.binary_search(&b).is_ok())
    }

    /// Oriented edge a -> b (arrows point even -> odd).
    pub fn arrow(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacent(a, b) && self.parity(a) == 0
    }

    /// The fixed total order (all even vertices before all odd ones).
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn order_index(&self, v: Vertex) -> usize {
        self.order_index[&v]
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// `<w, alpha_i^vee>` for a vector in the fundamental-weight basis.
    pub fn pairing_weight(&self, w: &WeightVec, i: Vertex) -> Result<i64> {
        self.check_vertex(i)?;
        Ok(w.coeff(i))
    }

    /// `<r, alpha_i^vee>` for a vector in the simple-root basis.
    pub fn pairing_root(&self, r: &RootVec, i: Vertex) -> Result<i64> {
        self.check_vertex(i)?;
        let mut acc = 2 * r.coeff(i);
        for &j in self.neighbors(i) {
            acc -= r.coeff(j);
        }
        Ok(acc)
    }

    /// Cartan-matrix expansion `alpha_i = 2 varpi_i - sum_{j ~ i} varpi_j`.
    pub fn root_to_weight(&self, r: &RootVec) -> WeightVec {
        let mut w = WeightVec::zero();
        for (&i, &c) in &r.0 {
            w.add_coeff(i, 2 * c);
            for &j in self.neighbors(i) {
                w.add_coeff(j, -c);
            }
        }
        w
    }

    /// Solve `sum_i m_i alpha_i = w` exactly; `None` if no solution in Z^I.
    #[allow(clippy::needless_range_loop)]
    pub fn weight_to_root(&self, w: &WeightVec) -> Option<RootVec> {
        let n = self.vertices.len();
        let idx: BTreeMap<Vertex, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, k))
            .collect();
        // rows: pairing with alpha_i^vee; unknowns: m_j
        let mut mat = vec![vec![BigRational::zero(); n + 1]; n];
        for (&i, &ri) in &idx {
            for (&j, &rj) in &idx {
                let a = if i == j {
                    2
                } else if self.adjacent(i, j) {
                    -1
                } else {
                    0
                };
                mat[ri][rj] = BigRational::from_integer(a.into());
            }
            mat[ri][n] = BigRational::from_integer(w.coeff(i).into());
        }
        // Gaussian elimination
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(row, p);
            let inv = mat[row][col].clone();
            for c in col..=n {
                mat[row][c] = &mat[row][c] / &inv;
            }
            for r in 0..n {
                if r != row && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c in col..=n {
                        mat[r][c] = &mat[r][c] - &f * &mat[row][c];
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == n {
                break;
            }
        }
        for r in row..n {
            if !mat[r][n].is_zero() {
                return None;
            }
        }
        let mut sol = vec![BigRational::zero(); n];
        for &(r, c) in &pivots {
            sol[c] = mat[r][n].clone();
        }
        let mut out = RootVec::zero();
        for (k, v) in self.vertices.iter().enumerate() {
            let s = &sol[k];
            if !s.denom().is_one() && !s.is_zero() {
                return None;
            }
            if !s.is_zero() {
                let num = s.numer();
                let val: i64 = num.try_into().ok()?;
                let val = if s.is_negative() && val > 0 {
                    -val
                } else {
                    val
                };
                out.add_coeff(*v, val);
            }
        }
        // verify (guards rank-deficient systems)
        if &self.root_to_weight(&out) == w {
            Some(out)
        } else {
            None
        }
    }
}

macro_rules! lattice_vec {
    ($name:ident, $sym:literal) => {
        /// Finitely supported integer vector; zero coefficients are not stored.
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
        pub struct $name(BTreeMap<Vertex, i64>);

        impl $name {
            pub fn zero() -> Self {
                Self(BTreeMap::new())
            }

            pub fn basis(i: Vertex) -> Self {
                let mut m = BTreeMap::new();
                m.insert(i, 1);
                Self(m)
            }

            pub fn from_coeffs(it: impl IntoIterator<Item = (Vertex, i64)>) -> Self {
                let mut v = Self::zero();
                for (i, c) in it {
                    v.add_coeff(i, c);
                }
                v
            }

            pub fn coeff(&self, i: Vertex) -> i64 {
                self.0.get(&i).copied().unwrap_or(0)
            }

            pub fn add_coeff(&mut self, i: Vertex, c: i64) {
                let e = self.0.entry(i).or_insert(0);
                *e += c;
                if *e == 0 {
                    self.0.remove(&i);
                }
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_empty()
            }

            pub fn iter(&self) -> impl Iterator<Item = (Vertex, i64)> + '_ {
                self.0.iter().map(|(&i, &c)| (i, c))
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (i, c) in other.iter() {
                    out.add_coeff(i, c);
                }
                out
            }

            pub fn sub(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (i, c) in other.iter() {
                    out.add_coeff(i, -c);
                }
                out
            }

            pub fn scale(&self, k: i64) -> Self {
                if k == 0 {
                    return Self::zero();
                }
                Self(self.0.iter().map(|(&i, &c)| (i, c * k)).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (&i, &c) in &self.0 {
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    if c == 1 {
                        write!(f, "{}[{}]", $sym, i)?;
                    } else {
                        write!(f, "{}*{}[{}]", c, $sym, i)?;
                    }
                }
                Ok(())
            }
        }
    };
}

lattice_vec!(WeightVec, "w");
lattice_vec!(RootVec, "a");

impl RootVec {
    /// Height: sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.iter().map(|(_, c)| c).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> DynkinGraph {
        // vertex 1 odd, vertex 2 even, order 2 < 1
        DynkinGraph::new(&[(1, 1), (2, 0)], &[(1, 2)], &[2, 1]).unwrap()
    }

    #[test]
    fn cartan_pairings_on_a2() {
        let g = a2();
        let a1 = RootVec::basis(1);
        let a2v = RootVec::basis(2);
        assert_eq!(g.pairing_root(&a1, 1).unwrap(), 2);
        assert_eq!(g.pairing_root(&a2v, 1).unwrap(), -1);
        let w1 = WeightVec::basis(1);
        assert_eq!(g.pairing_weight(&w1, 2).unwrap(), 0);
        assert_eq!(g.pairing_weight(&w1, 1).unwrap(), 1);
        assert!(g.pairing_root(&a1, 7).is_err());
    }

    #[test]
    fn root_to_weight_matches_cartan_columns() {
        let g1 = DynkinGraph::path(1, 1);
        let r = RootVec::basis(1);
        assert_eq!(g1.root_to_weight(&r), WeightVec::from_coeffs([(1, 2)]));

        let g = a2();
        assert_eq!(
            g.root_to_weight(&RootVec::basis(1)),
            WeightVec::from_coeffs([(1, 2), (2, -1)])
        );
        // sum of columns
        let s = RootVec::from_coeffs([(1, 1), (2, 1)]);
        assert_eq!(
            g.root_to_weight(&s),
            WeightVec::from_coeffs([(1, 1), (2, 1)])
        );
    }

    #[test]
    fn pairing_via_root_to_weight_agrees() {
        let g = DynkinGraph::path(3, 1);
        for i in 1..=3 {
            for j in 1..=3 {
                let r = RootVec::basis(j);
                let w = g.root_to_weight(&r);
                assert_eq!(
                    g.pairing_root(&r, i).unwrap(),
                    g.pairing_weight(&w, i).unwrap()
                );
            }
        }
    }

    #[test]
    fn weight_to_root_round_trip() {
        let g = DynkinGraph::path(3, 1);
        let m = RootVec::from_coeffs([(1, 2), (2, 1), (3, 4)]);
        let w = g.root_to_weight(&m);
        assert_eq!(g.weight_to_root(&w), Some(m));
        // varpi_1 is not in the root lattice of A_3
        assert_eq!(g.weight_to_root(&WeightVec::basis(1)), None);
    }

    #[test]
    fn validation_rejects_bad_graphs() {
        // triangle: some edge must join equal parities
        assert!(DynkinGraph::new(
            &[(1, 0), (2, 1), (3, 0)],
            &[(1, 2), (2, 3), (3, 1)],
            &[1, 3, 2]
        )
        .is_err());
        // both vertices even
        assert!(DynkinGraph::new(&[(1, 0), (2, 0)], &[(1, 2)], &[1, 2]).is_err());
        // odd before even in the order
        assert!(DynkinGraph::new(&[(1, 1), (2, 0)], &[(1, 2)], &[1, 2]).is_err());
        // the A_2 test graph is fine
        assert!(DynkinGraph::new(&[(1, 1), (2, 0)], &[(1, 2)], &[2, 1]).is_ok());
    }

    #[test]
    fn every_edge_joins_opposite_parities() {
        for n in 1..=5 {
            for p in 0..=1 {
                let g = DynkinGraph::path(n, p);
                for &v in g.vertices() {
                    for &w in g.neighbors(v) {
                        assert_ne!(g.parity(v), g.parity(w));
                    }
                }
            }
        }
    }
}
