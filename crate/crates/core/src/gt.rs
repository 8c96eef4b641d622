//! Gelfand-Tsetlin specialization: partition/multiplicity dictionaries,
//! central characters, crystal classification of simple modules through
//! large finite padding, and the interlacing-pattern counting oracle.

use num_rational::BigRational;

use crate::dynkin::{parity_of, DynkinGraph, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::monomial::{product_crystal_depth_slice, Monomial};
use crate::multiset::{factorize, MultisetCollection, ParamSet};
use crate::poly::q;

/// Context for the type-A specialization: N boxes, n levels, the partition
/// p_1 <= ... <= p_n, the multiplicities m_1..m_{n-1}, and the central
/// character multiset R (size N, attached to node n-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GtContext {
    pub n_boxes: u64,
    pub levels: usize,
    pub partition: Vec<u64>,
    pub mult: Vec<u64>,
    pub central: Vec<i64>,
}

/// Both directions of the dictionary p_1 = m_1, p_k = m_k - m_{k-1},
/// p_n = N - m_{n-1}.
#[derive(Debug, Clone)]
pub enum GtInput {
    Partition(Vec<u64>),
    Multiplicities(Vec<u64>),
}

pub fn partition_mu_dictionary(
    n_boxes: u64,
    levels: usize,
    input: GtInput,
    central: Vec<i64>,
) -> Result<GtContext> {
    if levels == 0 {
        return Err(Error::BadInput("need at least one level".into()));
    }
    let (partition, mult) = match input {
        GtInput::Partition(p) => {
            if p.len() != levels {
                return Err(Error::BadInput(format!(
                    "partition has {} parts, expected {levels}",
                    p.len()
                )));
            }
            if p.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::BadInput(
                    "partition parts must be weakly increasing".into(),
                ));
            }
            if p.iter().sum::<u64>() != n_boxes {
                return Err(Error::BadInput("partition parts must sum to N".into()));
            }
            let mut m = Vec::with_capacity(levels - 1);
            let mut acc = 0;
            for &part in p.iter().take(levels - 1) {
                acc += part;
                m.push(acc);
            }
            (p, m)
        }
        GtInput::Multiplicities(m) => {
            if m.len() != levels - 1 {
                return Err(Error::BadInput(format!(
                    "got {} multiplicities, expected {}",
                    m.len(),
                    levels - 1
                )));
            }
            let mut p = Vec::with_capacity(levels);
            let mut prev = 0;
            for &mk in &m {
                if mk < prev {
                    return Err(Error::BadInput(
                        "multiplicities must be weakly increasing".into(),
                    ));
                }
                p.push(mk - prev);
                prev = mk;
            }
            if n_boxes < prev {
                return Err(Error::BadInput("m_{n-1} exceeds N".into()));
            }
            p.push(n_boxes - prev);
            if p.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::BadInput(
                    "multiplicities do not give a weakly increasing partition".into(),
                ));
            }
            (p, m)
        }
    };
    if central.len() != n_boxes as usize {
        return Err(Error::BadInput(format!(
            "central character needs {n_boxes} roots, got {}",
            central.len()
        )));
    }
    let mut central = central;
    central.sort_unstable();
    Ok(GtContext {
        n_boxes,
        levels,
        partition,
        mult,
        central,
    })
}

/// The highest-weight vector killed by the central character with roots
/// r_1 <= ... <= r_N: (1/2)(r_1 - N + 1, r_2 - N + 3, ..., r_N + N - 1).
pub fn central_character(n_boxes: u64, roots: &[i64]) -> Result<Vec<BigRational>> {
    if roots.len() != n_boxes as usize {
        return Err(Error::BadInput("central character needs N roots".into()));
    }
    let mut sorted = roots.to_vec();
    sorted.sort_unstable();
    let n = n_boxes as i64;
    Ok(sorted
        .iter()
        .enumerate()
        .map(|(k, &r)| q(r - n + 1 + 2 * k as i64) / q(2))
        .collect())
}

/// The integral-class parity convention for matching classical weights:
/// every root must satisfy r ≢ N (mod 2).
pub fn classical_parity_valid(n_boxes: u64, roots: &[i64]) -> bool {
    roots
        .iter()
        .all(|&r| parity_of(r) != parity_of(n_boxes as i64))
}

impl GtContext {
    /// The type A_{n-1} graph carrying the data: node n-1 takes the parity
    /// of the central character roots, alternating down the chain.
    pub fn graph(&self) -> Result<DynkinGraph> {
        let rank = self.levels - 1;
        if rank == 0 {
            return Err(Error::BadInput("levels = 1 has an empty diagram".into()));
        }
        let top_parity = match self.central.first() {
            Some(&r) => parity_of(r),
            None => 0,
        };
        if self.central.iter().any(|&r| parity_of(r) != top_parity) {
            return Err(Error::BadInput(
                "central character roots must share a parity".into(),
            ));
        }
        // alternate so node `rank` has top_parity
        let parity_of_one = if rank % 2 == 1 {
            top_parity
        } else {
            1 - top_parity
        };
        Ok(DynkinGraph::path(rank, parity_of_one))
    }

    pub fn param_set(&self) -> ParamSet {
        ParamSet::from_entries([(self.levels - 1, self.central.clone())])
    }

    /// Depth vector of the target weight: node j carries multiplicity m_j.
    pub fn depth(&self) -> RootVec {
        RootVec::from_coeffs(
            self.mult
                .iter()
                .enumerate()
                .map(|(k, &m)| (k + 1, m as i64)),
        )
    }

    pub fn lambda(&self) -> WeightVec {
        WeightVec::from_coeffs([(self.levels - 1, self.n_boxes as i64)])
    }
}

/// One classified module: a crystal element of the padded product crystal
/// at the target weight, with its label collection relative to R_+.
#[derive(Debug, Clone)]
pub struct GtClassEntry {
    pub monomial: Monomial,
    pub labels: MultisetCollection,
}

/// Enumerate the weight-mu_S elements of B(R_+), where R_+ adds `padding`
/// far-separated parameters at every node (the finite stand-in for the
/// infinite longitudes). Stability under padding+1 is always verified.
pub fn classify_gt(ctx: &GtContext, padding: usize) -> Result<Vec<GtClassEntry>> {
    let g = ctx.graph()?;
    let depth = ctx.depth();
    let budget: i64 = depth.height();
    if budget < 0 {
        return Err(Error::BadInput("negative depth".into()));
    }
    let first = classify_with_padding(ctx, &g, &depth, padding)?;
    let second = classify_with_padding(ctx, &g, &depth, padding + 1)?;
    if first.len() != second.len() {
        return Err(Error::PaddingUnstable(padding));
    }
    Ok(first)
}

/// The padded parameter set used by the classifier (exposed so oracles can
/// recompute weight multiplicities on the same crystal).
pub fn padded_param_set(ctx: &GtContext, padding: usize) -> Result<ParamSet> {
    let g = ctx.graph()?;
    Ok(padded_params(ctx, &g, padding))
}

fn padded_params(ctx: &GtContext, g: &DynkinGraph, padding: usize) -> ParamSet {
    let span = ctx.central.iter().max().copied().unwrap_or(0)
        - ctx.central.iter().min().copied().unwrap_or(0);
    let delta = 2 * (span + ctx.n_boxes as i64 + padding as i64 + 2);
    let base = ctx.central.iter().max().copied().unwrap_or(0) + delta;
    let base = base + base.rem_euclid(2); // even anchor
    let mut r_plus = ctx.param_set();
    for &i in g.vertices() {
        // the infinite longitudes form a single coincident packet far
        // beyond any interaction window: `padding` copies of one value
        // per node, all in the same coarse position
        let c = if parity_of(base) == g.parity(i) {
            base
        } else {
            base + 1
        };
        for _ in 0..padding {
            r_plus.insert(i, c);
        }
    }
    r_plus
}

fn classify_with_padding(
    ctx: &GtContext,
    g: &DynkinGraph,
    depth: &RootVec,
    padding: usize,
) -> Result<Vec<GtClassEntry>> {
    let r_plus = padded_params(ctx, g, padding);
    r_plus.validate(g)?;
    let budget = depth.height() as u32;
    let slice = product_crystal_depth_slice(g, &r_plus, budget, None)?;
    let lambda_plus = r_plus.weight();
    let target = lambda_plus.sub(&g.root_to_weight(depth));
    let mut out = Vec::new();
    for p in slice {
        if p.weight() == target {
            let labels = factorize(g, &p, &r_plus)?;
            out.push(GtClassEntry {
                monomial: p,
                labels,
            });
        }
    }
    Ok(out)
}

/// Top row of the finite-dimensional module attached to a regular integral
/// central character, in the classical coordinates: t_k = r_{N+1-k} / 2.
/// `None` when the roots are not distinct or fail the parity convention.
pub fn fd_top_row(n_boxes: u64, roots: &[i64]) -> Option<Vec<i64>> {
    if roots.len() != n_boxes as usize || !classical_parity_valid(n_boxes, roots) {
        return None;
    }
    let mut sorted = roots.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    if sorted.iter().any(|r| r.rem_euclid(2) != 0) {
        return None;
    }
    Some(sorted.iter().rev().map(|r| r / 2).collect())
}

/// Dimension of the corresponding finite-dimensional module computed on
/// the crystal side: the size of the y_R component of a product monomial
/// crystal of highest weight lambda'(top row). An independent partner for
/// the interlacing-pattern count below.
pub fn fd_dimension_crystal(top_row: &[i64]) -> Result<u64> {
    if top_row.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadInput("top row must be weakly decreasing".into()));
    }
    let n = top_row.len();
    if n < 2 {
        return Ok(1);
    }
    let g = DynkinGraph::path(n - 1, 1);
    let lambda = WeightVec::from_coeffs((1..n).map(|k| (k, top_row[k - 1] - top_row[k])));
    if lambda.is_zero() {
        return Ok(1);
    }
    let r = crate::tensor::generic_params(&g, &lambda);
    let crystal = crate::monomial::generate_product_crystal(&g, &r, None)?;
    let a = crate::tensor::AbstractCrystal::from_crystal_graph(&g, &crystal);
    let comps = crate::tensor::decompose(&a)?;
    comps
        .iter()
        .find(|c| c.highest_weight == lambda)
        .map(|c| c.size as u64)
        .ok_or_else(|| Error::NotNormal("no component of highest weight lambda".into()))
}

/// Number of triangular Gelfand-Tsetlin patterns with the given weakly
/// decreasing integer top row (weak interlacing), by brute force.
pub fn gt_pattern_count(top_row: &[i64]) -> u64 {
    fn rec(row: &[i64]) -> u64 {
        if row.len() <= 1 {
            return 1;
        }
        // enumerate interlacing next rows: row[k] >= next[k] >= row[k+1]
        fn build(row: &[i64], k: usize, acc: &mut Vec<i64>, total: &mut u64) {
            if k + 1 == row.len() {
                *total += rec(acc);
                return;
            }
            let hi = if k == 0 {
                row[0]
            } else {
                acc[k - 1].min(row[k])
            };
            for v in row[k + 1]..=hi {
                acc.push(v);
                build(row, k + 1, acc, total);
                acc.pop();
            }
        }
        let mut total = 0;
        build(row, 0, &mut Vec::new(), &mut total);
        total
    }
    let mut row = top_row.to_vec();
    row.sort_unstable_by(|a, b| b.cmp(a));
    rec(&row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dictionary_round_trips() {
        // U(gl_N): all-ones partition gives m_k = k
        let ctx = partition_mu_dictionary(3, 3, GtInput::Partition(vec![1, 1, 1]), vec![0, 2, 4])
            .unwrap();
        assert_eq!(ctx.mult, vec![1, 2]);
        // N=2, n=2, partition (1,1) -> m_1 = 1
        let ctx2 =
            partition_mu_dictionary(2, 2, GtInput::Partition(vec![1, 1]), vec![1, 3]).unwrap();
        assert_eq!(ctx2.mult, vec![1]);
        // round trip partition -> m -> partition
        let back = partition_mu_dictionary(
            3,
            3,
            GtInput::Multiplicities(ctx.mult.clone()),
            vec![0, 2, 4],
        )
        .unwrap();
        assert_eq!(back.partition, ctx.partition);
        // inconsistent totals error
        assert!(
            partition_mu_dictionary(4, 3, GtInput::Partition(vec![1, 1, 1]), vec![0; 4]).is_err()
        );
    }

    #[test]
    fn central_character_examples() {
        // N=2, R={1,3} -> (0, 2)
        let hw = central_character(2, &[1, 3]).unwrap();
        assert_eq!(hw, vec![q(0), q(2)]);
        // N=1, R={r} -> (r/2)
        let hw = central_character(1, &[5]).unwrap();
        assert_eq!(hw, vec![q(5) / q(2)]);
        // parity flag: N=3 wants even roots
        assert!(classical_parity_valid(3, &[0, 2, 4]));
        assert!(!classical_parity_valid(3, &[1, 2, 4]));
        assert!(classical_parity_valid(2, &[1, 3]));
    }

    #[test]
    fn pattern_count_oracle() {
        // gl_2 top row (a, b): a - b + 1
        assert_eq!(gt_pattern_count(&[3, 0]), 4);
        assert_eq!(gt_pattern_count(&[5, 5]), 1);
        // gl_3 adjoint: (2, 1, 0) -> 8
        assert_eq!(gt_pattern_count(&[2, 1, 0]), 8);
        // constant top rows are forced
        assert_eq!(gt_pattern_count(&[4, 4, 4]), 1);
        // dimension of the standard gl_3 module
        assert_eq!(gt_pattern_count(&[1, 0, 0]), 3);
    }

    #[test]
    fn classify_highest_weight_is_singleton() {
        // depth 0: the only element at lambda_+ is y_{R_+}
        let ctx =
            partition_mu_dictionary(2, 2, GtInput::Partition(vec![0, 2]), vec![0, 4]).unwrap();
        assert_eq!(ctx.mult, vec![0]);
        let entries = classify_gt(&ctx, 1).unwrap();
        assert_eq!(entries.len(), 1);
        assert!(entries[0].labels.is_empty());
    }

    #[test]
    fn gl2_one_box_removed_matches_tensor_multiplicity() {
        // N=2, n=2, partition (1,1): depth alpha_1; distinct central roots
        let ctx =
            partition_mu_dictionary(2, 2, GtInput::Partition(vec![1, 1]), vec![0, 4]).unwrap();
        let entries = classify_gt(&ctx, 1).unwrap();
        // oracle: weight multiplicity in the padded tensor crystal
        let g = ctx.graph().unwrap();
        let r_plus = super::padded_params(&ctx, &g, 1);
        let crystal = crate::monomial::generate_product_crystal(&g, &r_plus, None).unwrap();
        let target = r_plus.weight().sub(&g.root_to_weight(&ctx.depth()));
        let expected = crystal
            .nodes
            .iter()
            .filter(|p| p.weight() == target)
            .count();
        assert_eq!(entries.len(), expected);
    }

    #[test]
    fn fd_dictionary_and_dimension() {
        // roots (0, 2, 4) <-> top row (2, 1, 0); dimension 8 both ways
        assert_eq!(fd_top_row(3, &[0, 2, 4]), Some(vec![2, 1, 0]));
        assert_eq!(fd_top_row(3, &[0, 2, 2]), None);
        assert_eq!(fd_top_row(3, &[1, 3, 5]), None);
        let t = vec![2, 1, 0];
        assert_eq!(fd_dimension_crystal(&t).unwrap(), gt_pattern_count(&t));
        assert_eq!(fd_dimension_crystal(&t).unwrap(), 8);
        // another spacing: top row (3, 1, 0) has 3*2*5/... = 15 patterns
        let t = vec![3, 1, 0];
        assert_eq!(fd_dimension_crystal(&t).unwrap(), gt_pattern_count(&t));
        // gl_2
        let t = vec![4, 1];
        assert_eq!(fd_dimension_crystal(&t).unwrap(), gt_pattern_count(&t));
        assert_eq!(gt_pattern_count(&t), 4);
    }

    #[test]
    fn classify_counts_translation_invariant() {
        let ctx =
            partition_mu_dictionary(2, 2, GtInput::Partition(vec![1, 1]), vec![0, 4]).unwrap();
        let shifted =
            partition_mu_dictionary(2, 2, GtInput::Partition(vec![1, 1]), vec![2, 6]).unwrap();
        assert_eq!(
            classify_gt(&ctx, 1).unwrap().len(),
            classify_gt(&shifted, 1).unwrap().len()
        );
    }
}
