//! Abstract finite crystals, the tensor product rule, decomposition into
//! connected components, and the embedding checks relating B(R) to the
//! irreducible crystal and the tensor product of fundamental crystals.

use std::collections::BTreeMap;

use crate::dynkin::{DynkinGraph, Vertex, WeightVec};
use crate::error::{Error, Result};
use crate::monomial::{fundamental_crystal, generate_product_crystal, CrystalGraph};
use crate::multiset::ParamSet;

/// A finite crystal presented by its element weights and the partial
/// raising/lowering maps.
#[derive(Debug, Clone)]
pub struct AbstractCrystal {
    pub graph: DynkinGraph,
    pub weights: Vec<WeightVec>,
    /// labels carried along for reporting (monomial strings, pair labels)
    pub labels: Vec<String>,
    raise: BTreeMap<(usize, Vertex), usize>,
    lower: BTreeMap<(usize, Vertex), usize>,
}

impl AbstractCrystal {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn raise(&self, x: usize, i: Vertex) -> Option<usize> {
        self.raise.get(&(x, i)).copied()
    }

    pub fn lower(&self, x: usize, i: Vertex) -> Option<usize> {
        self.lower.get(&(x, i)).copied()
    }

    /// eps_i: how many times the raising operator applies.
    pub fn eps(&self, x: usize, i: Vertex) -> i64 {
        let mut n = 0;
        let mut cur = x;
        while let Some(next) = self.raise(cur, i) {
            n += 1;
            cur = next;
        }
        n
    }

    /// phi_i: how many times the lowering operator applies.
    pub fn phi(&self, x: usize, i: Vertex) -> i64 {
        let mut n = 0;
        let mut cur = x;
        while let Some(next) = self.lower(cur, i) {
            n += 1;
            cur = next;
        }
        n
    }

    pub fn is_highest(&self, x: usize) -> bool {
        self.graph
            .vertices()
            .iter()
            .all(|&i| self.raise(x, i).is_none())
    }

    /// Build from a generated monomial crystal graph (lowering edges).
    pub fn from_crystal_graph(g: &DynkinGraph, c: &CrystalGraph) -> Self {
        let mut lower = BTreeMap::new();
        let mut raise = BTreeMap::new();
        for &(src, i, dst) in &c.edges {
            lower.insert((src, i), dst);
            raise.insert((dst, i), src);
        }
        AbstractCrystal {
            graph: g.clone(),
            weights: c.nodes.iter().map(|m| m.weight()).collect(),
            labels: c.nodes.iter().map(|m| m.to_string()).collect(),
            raise,
            lower,
        }
    }

    pub fn from_fundamental(g: &DynkinGraph, i: Vertex, c: i64) -> Result<Self> {
        let elements = fundamental_crystal(g, i, c, None)?;
        let nodes: Vec<_> = elements.into_iter().map(|(m, _)| m).collect();
        let idx: BTreeMap<_, usize> = nodes.iter().cloned().zip(0..).collect();
        let mut lower = BTreeMap::new();
        let mut raise = BTreeMap::new();
        for (src, m) in nodes.iter().enumerate() {
            for &j in g.vertices() {
                if let Some(q) = crate::monomial::kashiwara(g, m, j, crate::monomial::Dir::Lower) {
                    if let Some(&dst) = idx.get(&q) {
                        lower.insert((src, j), dst);
                        raise.insert((dst, j), src);
                    }
                }
            }
        }
        Ok(AbstractCrystal {
            graph: g.clone(),
            weights: nodes.iter().map(|m| m.weight()).collect(),
            labels: nodes.iter().map(|m| m.to_string()).collect(),
            raise,
            lower,
        })
    }

    /// Normality assertion: phi_i - eps_i = <wt, alpha_i^vee> everywhere.
    pub fn check_string_identity(&self) -> Result<()> {
        for x in 0..self.len() {
            for &i in self.graph.vertices() {
                let lhs = self.phi(x, i) - self.eps(x, i);
                let rhs = self.graph.pairing_weight(&self.weights[x], i)?;
                if lhs != rhs {
                    return Err(Error::NotNormal(format!(
                        "string identity fails at element {} direction {i}: phi-eps={lhs}, <wt,a^>={rhs}",
                        self.labels[x]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Tensor product with the convention: raising acts on the left factor when
/// phi(b1) >= eps(b2), lowering acts on the left factor when phi(b1) > eps(b2).
pub fn tensor(b1: &AbstractCrystal, b2: &AbstractCrystal) -> AbstractCrystal {
    assert_eq!(b1.graph, b2.graph, "tensor factors over different graphs");
    let g = b1.graph.clone();
    let n2 = b2.len();
    let pair = |x: usize, y: usize| x * n2 + y;
    let mut raise = BTreeMap::new();
    let mut lower = BTreeMap::new();
    let mut weights = Vec::with_capacity(b1.len() * n2);
    let mut labels = Vec::with_capacity(b1.len() * n2);
    for x in 0..b1.len() {
        for y in 0..n2 {
            weights.push(b1.weights[x].add(&b2.weights[y]));
            labels.push(format!("{} (x) {}", b1.labels[x], b2.labels[y]));
            for &i in g.vertices() {
                let phi1 = b1.phi(x, i);
                let eps2 = b2.eps(y, i);
                // raising
                let up = if phi1 >= eps2 {
                    b1.raise(x, i).map(|nx| pair(nx, y))
                } else {
                    b2.raise(y, i).map(|ny| pair(x, ny))
                };
                if let Some(t) = up {
                    raise.insert((pair(x, y), i), t);
                }
                // lowering
                let down = if phi1 > eps2 {
                    b1.lower(x, i).map(|nx| pair(nx, y))
                } else {
                    b2.lower(y, i).map(|ny| pair(x, ny))
                };
                if let Some(t) = down {
                    lower.insert((pair(x, y), i), t);
                }
            }
        }
    }
    AbstractCrystal {
        graph: g,
        weights,
        labels,
        raise,
        lower,
    }
}

#[derive(Debug, Clone)]
pub struct Component {
    pub highest: usize,
    pub highest_weight: WeightVec,
    pub size: usize,
}

/// Connected components under all raising/lowering operators; each must
/// contain exactly one highest-weight element, otherwise the crystal is
/// not normal.
pub fn decompose(b: &AbstractCrystal) -> Result<Vec<Component>> {
    let n = b.len();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0usize;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = count;
        count += 1;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(x) = stack.pop() {
            for &i in b.graph.vertices() {
                for next in [b.raise(x, i), b.lower(x, i)].into_iter().flatten() {
                    if comp[next] == usize::MAX {
                        comp[next] = id;
                        stack.push(next);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for id in 0..count {
        let members: Vec<usize> = (0..n).filter(|&x| comp[x] == id).collect();
        let highs: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&x| b.is_highest(x))
            .collect();
        match highs.as_slice() {
            [h] => out.push(Component {
                highest: *h,
                highest_weight: b.weights[*h].clone(),
                size: members.len(),
            }),
            [] => {
                return Err(Error::NotNormal(format!(
                    "component of {} has no highest-weight element",
                    b.labels[members[0]]
                )))
            }
            many => {
                return Err(Error::NotNormal(format!(
                    "component of {} has {} highest-weight elements",
                    b.labels[members[0]],
                    many.len()
                )))
            }
        }
    }
    out.sort_by(|a, c| {
        a.highest_weight
            .cmp(&c.highest_weight)
            .then(a.size.cmp(&c.size))
    });
    Ok(out)
}

/// Sorted multiset of highest weights of the components.
pub fn highest_weight_multiset(b: &AbstractCrystal) -> Result<Vec<WeightVec>> {
    Ok(decompose(b)?
        .into_iter()
        .map(|c| c.highest_weight)
        .collect())
}

fn multiset_contains(big: &[WeightVec], small: &[WeightVec]) -> Option<WeightVec> {
    let mut counts: BTreeMap<&WeightVec, i64> = BTreeMap::new();
    for w in big {
        *counts.entry(w).or_insert(0) += 1;
    }
    for w in small {
        let c = counts.entry(w).or_insert(0);
        *c -= 1;
        if *c < 0 {
            return Some(w.clone());
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub br_size: usize,
    pub tensor_size: usize,
    pub br_components: usize,
    pub tensor_components: usize,
    pub br_highest_weights: Vec<WeightVec>,
    pub tensor_highest_weights: Vec<WeightVec>,
    /// lambda occurs among B(R)'s component highest weights (B(lambda) side)
    pub lambda_embeds: bool,
    /// B(R)'s highest-weight multiset is contained in the tensor one
    pub tensor_contains: bool,
    pub hw_multisets_equal: bool,
    pub witness: Option<String>,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.lambda_embeds && self.tensor_contains
    }
}

/// Certify B(lambda) ⊆ B(R) ⊆ tensor of fundamentals by highest-weight
/// multiset containment (sufficient for normal crystals).
pub fn check_embeddings(g: &DynkinGraph, r: &ParamSet) -> Result<EmbeddingReport> {
    let br_graph = generate_product_crystal(g, r, None)?;
    let br = AbstractCrystal::from_crystal_graph(g, &br_graph);
    br.check_string_identity()?;
    let br_hw = highest_weight_multiset(&br)?;

    let mut factors: Vec<(Vertex, i64)> = r.iter().collect();
    factors.sort();
    let mut tens: Option<AbstractCrystal> = None;
    for (i, c) in factors {
        let f = AbstractCrystal::from_fundamental(g, i, c)?;
        tens = Some(match tens {
            None => f,
            Some(t) => tensor(&t, &f),
        });
    }
    let tens = tens.ok_or_else(|| Error::BadInput("empty parameter set".into()))?;
    let tensor_hw = highest_weight_multiset(&tens)?;

    let lambda = r.weight();
    let lambda_embeds = br_hw.contains(&lambda);
    let witness = multiset_contains(&tensor_hw, &br_hw);
    Ok(EmbeddingReport {
        br_size: br.len(),
        tensor_size: tens.len(),
        br_components: br_hw.len(),
        tensor_components: tensor_hw.len(),
        lambda_embeds,
        tensor_contains: witness.is_none(),
        hw_multisets_equal: {
            let mut a = br_hw.clone();
            let mut b = tensor_hw.clone();
            a.sort();
            b.sort();
            a == b
        },
        br_highest_weights: br_hw,
        tensor_highest_weights: tensor_hw,
        witness: witness.map(|w| format!("highest weight {w} of B(R) missing in tensor")),
    })
}

/// Parameters whose pairwise longitude gaps exceed 2 (#nodes + sum lambda_i),
/// so all idempotents at test scale are parity and B(R) is the full tensor.
pub fn generic_params(g: &DynkinGraph, lambda: &WeightVec) -> ParamSet {
    let total: i64 = lambda.iter().map(|(_, c)| c).sum();
    let gap = 2 * (g.vertices().len() as i64 + total) + 2;
    let mut out = ParamSet::empty();
    let mut next = 0i64;
    for (i, li) in lambda.iter() {
        for _ in 0..li {
            let c = if crate::dynkin::parity_of(next) == g.parity(i) {
                next
            } else {
                next + 1
            };
            out.insert(i, c);
            next = c + gap;
        }
    }
    out
}
