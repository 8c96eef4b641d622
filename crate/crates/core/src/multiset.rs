//! Collections of per-vertex integer multisets: parameter sets R, weight
//! labels S, the monomials y_S and z_S, the factorization p = y_R z_S^{-1},
//! and the statistic x(S).

use std::collections::BTreeMap;
use std::fmt;

use crate::dynkin::{parity_of, DynkinGraph, Vertex};
use crate::error::{Error, Result};
use crate::monomial::{z_monomial, Monomial};

/// Per-vertex finite integer multisets. Used both for parameter sets R
/// (where |R_i| records the weight) and for the labels S of crystal
/// elements (no cardinality restriction).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MultisetCollection {
    sets: BTreeMap<Vertex, Vec<i64>>,
}

/// A set of parameters of weight lambda is the same data, with lambda_i
/// recovered as |R_i|.
pub type ParamSet = MultisetCollection;

impl MultisetCollection {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Vertex, Vec<i64>)>) -> Self {
        let mut c = Self::empty();
        for (i, vals) in entries {
            for v in vals {
                c.insert(i, v);
            }
        }
        c
    }

    pub fn insert(&mut self, i: Vertex, value: i64) {
        let set = self.sets.entry(i).or_default();
        set.push(value);
        set.sort_unstable();
    }

    pub fn remove_one(&mut self, i: Vertex, value: i64) -> bool {
        let Some(set) = self.sets.get_mut(&i) else {
            return false;
        };
        let Ok(pos) = set.binary_search(&value) else {
            return false;
        };
        set.remove(pos);
        if set.is_empty() {
            self.sets.remove(&i);
        }
        true
    }

    pub fn get(&self, i: Vertex) -> &[i64] {
        self.sets.get(&i).map_or(&[], Vec::as_slice)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.sets.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, i64)> + '_ {
        self.sets
            .iter()
            .flat_map(|(&i, vals)| vals.iter().map(move |&v| (i, v)))
    }

    pub fn len(&self) -> usize {
        self.sets.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn card(&self, i: Vertex) -> usize {
        self.get(i).len()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, v) in other.iter() {
            out.insert(i, v);
        }
        out
    }

    /// Shift every element by a fixed amount (even shifts preserve parity).
    pub fn translate(&self, by: i64) -> Self {
        Self {
            sets: self
                .sets
                .iter()
                .map(|(&i, vals)| (i, vals.iter().map(|v| v + by).collect()))
                .collect(),
        }
    }

    /// Every element has the parity of its vertex, and all vertices exist.
    pub fn validate(&self, g: &DynkinGraph) -> Result<()> {
        for (i, v) in self.iter() {
            if !g.contains(i) {
                return Err(Error::UnknownVertex(i));
            }
            if parity_of(v) != g.parity(i) {
                return Err(Error::ParityMismatch {
                    vertex: i,
                    longitude: v,
                });
            }
        }
        Ok(())
    }

    /// x(S): the sum of all elements over all vertices.
    pub fn x_statistic(&self) -> i64 {
        self.iter().map(|(_, v)| v).sum()
    }

    /// lambda with lambda_i = |S_i|, in the fundamental-weight basis.
    pub fn weight(&self) -> crate::dynkin::WeightVec {
        crate::dynkin::WeightVec::from_coeffs(
            self.sets.iter().map(|(&i, vals)| (i, vals.len() as i64)),
        )
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<String, &Vec<i64>> =
            self.sets.iter().map(|(i, v)| (i.to_string(), v)).collect();
        serde_json::to_string(&map).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let map: BTreeMap<String, Vec<i64>> = serde_json::from_str(s)?;
        let mut out = Self::empty();
        for (k, vals) in map {
            let i: Vertex = k
                .parse()
                .map_err(|_| Error::BadInput(format!("bad vertex key {k:?}")))?;
            for v in vals {
                out.insert(i, v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MultisetCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sets.is_empty() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        for (&i, vals) in &self.sets {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "S{i}={{")?;
            for (k, v) in vals.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// y_S = prod y_{i,k} over all (i, k in S_i).
pub fn y_product(s: &MultisetCollection) -> Monomial {
    let mut m = Monomial::one();
    for (i, k) in s.iter() {
        m = m.mul(&Monomial::y(i, k));
    }
    m
}

/// z_S = prod z_{i,k} over all (i, k in S_i).
pub fn z_product(g: &DynkinGraph, s: &MultisetCollection) -> Result<Monomial> {
    let mut m = Monomial::one();
    for (i, k) in s.iter() {
        m = m.mul(&z_monomial(g, i, k)?);
    }
    Ok(m)
}

/// The unique S with `p = y_R z_S^{-1}`, found by peeling z-factors greedily
/// from the lowest longitude: at the minimal (i,k) with a negative residual
/// exponent the factor z_{i,k}^{-1} is forced.
pub fn factorize(g: &DynkinGraph, p: &Monomial, r: &ParamSet) -> Result<MultisetCollection> {
    let mut residual = p.mul(&y_product(r).inv());
    let mut s = MultisetCollection::empty();
    let mut steps = 0usize;
    while !residual.is_one() {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::NotInSpan(residual.to_string()));
        }
        let Some(((i, k), e)) = residual.min_longitude_entry() else {
            break;
        };
        if e > 0 {
            return Err(Error::NotInSpan(residual.to_string()));
        }
        let z = z_monomial(g, i, k)?;
        residual = residual.mul(&z.pow(-e));
        for _ in 0..(-e) {
            s.insert(i, k);
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> DynkinGraph {
        DynkinGraph::new(&[(1, 1), (2, 0)], &[(1, 2)], &[2, 1]).unwrap()
    }

    #[test]
    fn products_of_empty_collection() {
        let g = a2();
        let s = MultisetCollection::empty();
        assert!(y_product(&s).is_one());
        assert!(z_product(&g, &s).unwrap().is_one());
        assert_eq!(s.x_statistic(), 0);
    }

    #[test]
    fn z_product_single() {
        let g = a2();
        let s = MultisetCollection::from_entries([(1, vec![-3])]);
        let z = z_product(&g, &s).unwrap();
        let expected = Monomial::from_exponents([((1, -3), 1), ((1, -1), 1), ((2, -2), -1)]);
        assert_eq!(z, expected);
    }

    #[test]
    fn z_is_multiplicative_and_x_additive() {
        let g = a2();
        let s1 = MultisetCollection::from_entries([(1, vec![-3]), (2, vec![0])]);
        let s2 = MultisetCollection::from_entries([(1, vec![-1]), (2, vec![0, 2])]);
        let u = s1.union(&s2);
        assert_eq!(
            z_product(&g, &u).unwrap(),
            z_product(&g, &s1)
                .unwrap()
                .mul(&z_product(&g, &s2).unwrap())
        );
        assert_eq!(u.x_statistic(), s1.x_statistic() + s2.x_statistic());
        assert_eq!(s1.x_statistic(), -3);
    }

    #[test]
    fn factorize_round_trips() {
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![2])]);
        for s in [
            MultisetCollection::empty(),
            MultisetCollection::from_entries([(1, vec![-3])]),
            MultisetCollection::from_entries([(1, vec![-3, -1]), (2, vec![-4, 0])]),
            MultisetCollection::from_entries([(2, vec![0, 0])]),
        ] {
            let p = y_product(&r).mul(&z_product(&g, &s).unwrap().inv());
            assert_eq!(factorize(&g, &p, &r).unwrap(), s, "round trip for {s}");
        }
    }

    #[test]
    fn factorize_y_r_itself_is_empty() {
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![2])]);
        let s = factorize(&g, &y_product(&r), &r).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn factorize_rejects_monomials_outside_span() {
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1])]);
        // y_R * y_{1,5} has a positive residual entry
        let p = y_product(&r).mul(&Monomial::y(1, 5));
        assert!(matches!(factorize(&g, &p, &r), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn uniqueness_of_z_products_small() {
        // distinct small S give distinct z_S (bounded exhaustive check)
        let g = a2();
        // pools with a repeated value, so multiset multiplicities are covered
        let longs1 = [-3i64, -3, -1, 1];
        let longs2 = [-2i64, 0, 0, 2];
        let mut seen = std::collections::BTreeMap::new();
        let mut subsets1 = vec![vec![]];
        for &l in &longs1 {
            let mut next = subsets1.clone();
            for s in &subsets1 {
                let mut t = s.clone();
                t.push(l);
                next.push(t);
            }
            subsets1 = next;
        }
        let mut subsets2 = vec![vec![]];
        for &l in &longs2 {
            let mut next = subsets2.clone();
            for s in &subsets2 {
                let mut t = s.clone();
                t.push(l);
                next.push(t);
            }
            subsets2 = next;
        }
        for a in &subsets1 {
            for b in &subsets2 {
                let s = MultisetCollection::from_entries([(1, a.clone()), (2, b.clone())]);
                let z = z_product(&g, &s).unwrap();
                if let Some(prev) = seen.insert(z, s.clone()) {
                    assert_eq!(prev, s, "z_S collision between distinct collections");
                }
            }
        }
    }

    #[test]
    fn cardinalities_match_root_coefficients() {
        // for every node of B(R), |S_i| equals the alpha_i coefficient of
        // lambda - wt(p)
        let g = a2();
        let r = ParamSet::from_entries([(1, vec![-1]), (2, vec![2])]);
        let crystal = crate::monomial::generate_product_crystal(&g, &r, None).unwrap();
        let lambda = r.weight();
        for p in &crystal.nodes {
            let s = factorize(&g, p, &r).unwrap();
            let depth = g
                .weight_to_root(&lambda.sub(&p.weight()))
                .expect("weight drop lies in the root lattice");
            for &i in g.vertices() {
                assert_eq!(s.card(i) as i64, depth.coeff(i), "at {p}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s = MultisetCollection::from_entries([(1, vec![-1, 3]), (2, vec![0])]);
        let j = s.to_json();
        assert_eq!(MultisetCollection::from_json(&j).unwrap(), s);
    }
}
