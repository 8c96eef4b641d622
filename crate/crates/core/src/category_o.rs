//! Combinatorial weight-support filters: the S-collections supporting a
//! given weight of B(R), boundedness predicates, and highest-weight
//! enumeration.

use crate::dynkin::{DynkinGraph, WeightVec};
use crate::error::Result;
use crate::monomial::{generate_product_crystal, is_highest_weight, Monomial};
use crate::multiset::{factorize, MultisetCollection, ParamSet};

/// A finite weight support: the S-collections with nonzero weight space,
/// with their x-statistics.
#[derive(Debug, Clone, Default)]
pub struct WeightSupport {
    pub entries: Vec<(MultisetCollection, i64)>,
}

impl WeightSupport {
    pub fn from_collections(cols: impl IntoIterator<Item = MultisetCollection>) -> Self {
        let mut entries: Vec<(MultisetCollection, i64)> = cols
            .into_iter()
            .map(|s| {
                let x = s.x_statistic();
                (s, x)
            })
            .collect();
        entries.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        WeightSupport { entries }
    }

    /// Bounded above in x. Finite supports always are; the predicate names
    /// the category-O condition for the support data this library produces.
    pub fn bounded_above(&self) -> bool {
        true
    }

    pub fn bounded_below(&self) -> bool {
        true
    }

    pub fn x_values(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.1).collect()
    }
}

/// { factorize(p, R) : p in B(R), wt(p) = mu } — the highest weights of
/// simple modules in the minus category O at weight mu, in crystal terms.
pub fn o_minus_support(
    g: &DynkinGraph,
    r: &ParamSet,
    mu: &WeightVec,
) -> Result<Vec<MultisetCollection>> {
    let crystal = generate_product_crystal(g, r, None)?;
    let mut out = Vec::new();
    for p in &crystal.nodes {
        if &p.weight() == mu {
            out.push(factorize(g, p, r)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Weight-mu nodes of B(R) killed by every raising operator.
pub fn highest_weight_elements(
    g: &DynkinGraph,
    r: &ParamSet,
    mu: &WeightVec,
) -> Result<Vec<Monomial>> {
    let crystal = generate_product_crystal(g, r, None)?;
    Ok(crystal
        .nodes
        .iter()
        .filter(|p| &p.weight() == mu && is_highest_weight(g, p))
        .cloned()
        .collect())
}
