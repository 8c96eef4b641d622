//! Switchable pairs, admissible permutations, the canonical sorting
//! permutations, and stagewise-admissible reduced words.

use crate::dynkin::{parity_of, DynkinGraph, Vertex};
use crate::error::{Error, Result};

/// A pair of label and longitude sequences (Bi, Ba) with matching parities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralPair {
    pub labels: Vec<Vertex>,
    pub longs: Vec<i64>,
}

impl IntegralPair {
    pub fn new(g: &DynkinGraph, labels: Vec<Vertex>, longs: Vec<i64>) -> Result<Self> {
        if labels.len() != longs.len() {
            return Err(Error::BadInput("label/longitude length mismatch".into()));
        }
        for (&i, &a) in labels.iter().zip(&longs) {
            if !g.contains(i) {
                return Err(Error::UnknownVertex(i));
            }
            if parity_of(a) != g.parity(i) {
                return Err(Error::ParityMismatch {
                    vertex: i,
                    longitude: a,
                });
            }
        }
        Ok(IntegralPair { labels, longs })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Apply pi: entry k moves to position pi(k).
    pub fn permuted(&self, pi: &Perm) -> IntegralPair {
        let n = self.len();
        let mut labels = vec![0; n];
        let mut longs = vec![0; n];
        for k in 0..n {
            labels[pi.map(k)] = self.labels[k];
            longs[pi.map(k)] = self.longs[k];
        }
        IntegralPair { labels, longs }
    }

    pub fn swapped(&self, k: usize) -> IntegralPair {
        let mut out = self.clone();
        out.labels.swap(k, k + 1);
        out.longs.swap(k, k + 1);
        out
    }
}

/// A permutation of {0, .., n-1}, stored as the image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            image: (0..n).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || seen[v] {
                return Err(Error::BadInput("not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(Perm { image })
    }

    /// Adjacent transposition s_k (0-based: swaps k and k+1).
    pub fn transposition(n: usize, k: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(k, k + 1);
        Perm { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn map(&self, k: usize) -> usize {
        self.image[k]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            image: (0..self.len()).map(|k| self.map(other.map(k))).collect(),
        }
    }

    pub fn inversions(&self) -> usize {
        let mut n = 0;
        for a in 0..self.len() {
            for b in (a + 1)..self.len() {
                if self.map(a) > self.map(b) {
                    n += 1;
                }
            }
        }
        n
    }

    /// All permutations of {0,..,n-1} (for brute-force tests).
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Perm>) {
            if rest.is_empty() {
                out.push(Perm {
                    image: prefix.clone(),
                });
                return;
            }
            for idx in 0..rest.len() {
                let v = rest.remove(idx);
                prefix.push(v);
                rec(prefix, rest, out);
                prefix.pop();
                rest.insert(idx, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
        out
    }
}

/// The ordered pair (k, l) is not switchable when i_k <- i_l and
/// a_k = a_l + 1; everything else is switchable.
pub fn switchable(g: &DynkinGraph, pair: &IntegralPair, k: usize, l: usize) -> bool {
    assert_ne!(k, l);
    let (ik, il) = (pair.labels[k], pair.labels[l]);
    // i_k <- i_l is the arrow i_l -> i_k
    !(g.arrow(il, ik) && pair.longs[k] == pair.longs[l] + 1)
}

/// pi is admissible when every non-switchable ordered pair keeps its
/// relative order.
pub fn is_admissible(g: &DynkinGraph, pair: &IntegralPair, pi: &Perm) -> bool {
    let n = pair.len();
    for k in 0..n {
        for l in 0..n {
            if k == l || switchable(g, pair, k, l) {
                continue;
            }
            let before = k < l;
            let after = pi.map(k) < pi.map(l);
            if before != after {
                return false;
            }
        }
    }
    true
}

/// Shortest permutation sorting the longitudes weakly increasingly in the
/// coarse preorder: the stable sort by floor(a/2).
pub fn pi_sort_longitudes(pair: &IntegralPair) -> Perm {
    let n = pair.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&k| pair.longs[k].div_euclid(2)); // stable
    let mut image = vec![0; n];
    for (target, &src) in order.iter().enumerate() {
        image[src] = target;
    }
    Perm { image }
}

/// Shortest permutation rearranging the labels into the canonical order
/// (the graph's total order, evens before odds): the stable sort by order
/// index. Requires the longitudes to be weakly increasing in the usual
/// order.
pub fn pi_sort_labels(g: &DynkinGraph, pair: &IntegralPair) -> Result<Perm> {
    if pair.longs.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadInput(
            "longitudes must be weakly increasing".into(),
        ));
    }
    let n = pair.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&k| g.order_index(pair.labels[k])); // stable
    let mut image = vec![0; n];
    for (target, &src) in order.iter().enumerate() {
        image[src] = target;
    }
    Ok(Perm { image })
}

/// A reduced word s_{k_r} ... s_{k_1} for an admissible permutation such
/// that each letter is admissible at its stage (0-based letter indices,
/// listed in application order: first applied first).
pub fn admissible_reduced_word(
    g: &DynkinGraph,
    pair: &IntegralPair,
    pi: &Perm,
) -> Result<Vec<usize>> {
    if !is_admissible(g, pair, pi) {
        return Err(Error::NotAdmissible);
    }
    let n = pair.len();
    // bubble: current arrangement tracks where each original entry sits
    let mut cur: Vec<usize> = (0..n).collect(); // cur[pos] = original index
    let mut cur_pair = pair.clone();
    let mut word = Vec::new();
    loop {
        let mut progressed = false;
        for k in 0..n.saturating_sub(1) {
            if pi.map(cur[k]) > pi.map(cur[k + 1]) {
                // stagewise admissibility of s_k for the current pair
                if !switchable(g, &cur_pair, k, k + 1) || !switchable(g, &cur_pair, k + 1, k) {
                    return Err(Error::NotAdmissible);
                }
                cur.swap(k, k + 1);
                cur_pair = cur_pair.swapped(k);
                word.push(k);
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    debug_assert_eq!(word.len(), pi.inversions());
    Ok(word)
}
