//! Strand sequences of KLRW idempotents: parity distance, the parity
//! condition, the dictionary between idempotents and multiset collections,
//! metric and coarse longitude triples, and the exhaustive equivalence
//! check between metric-longitude existence and the parity condition.

use crate::dynkin::{parity_of, DynkinGraph, Vertex};
use crate::error::{Error, Result};
use crate::exec;
use crate::multiset::{MultisetCollection, ParamSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Strand {
    Red { label: Vertex, longitude: i64 },
    Black { label: Vertex },
}

impl Strand {
    pub fn label(&self) -> Vertex {
        match *self {
            Strand::Red { label, .. } | Strand::Black { label } => label,
        }
    }

    pub fn is_red(&self) -> bool {
        matches!(self, Strand::Red { .. })
    }
}

/// Red strands of an idempotent for the parameter set R: labels and
/// longitudes in the weakly increasing longitude order, ties broken by the
/// fixed vertex order.
pub fn red_sequence(g: &DynkinGraph, r: &ParamSet) -> Vec<(Vertex, i64)> {
    let mut reds: Vec<(Vertex, i64)> = r.iter().collect();
    reds.sort_by_key(|&(i, c)| (c, g.order_index(i)));
    reds
}

/// An idempotent diagram: the left-to-right sequence of strands. Red
/// strands appear in the order fixed by R.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StrandSeq {
    pub strands: Vec<Strand>,
}

impl StrandSeq {
    /// Assemble from black labels and the red positions kappa: red strand p
    /// sits right of the first kappa(p) black strands.
    pub fn from_kappa(g: &DynkinGraph, r: &ParamSet, blacks: &[Vertex], kappa: &[usize]) -> Self {
        let reds = red_sequence(g, r);
        assert_eq!(
            reds.len(),
            kappa.len(),
            "kappa length must match the red count"
        );
        let mut strands = Vec::with_capacity(blacks.len() + reds.len());
        let mut red_iter = reds.iter().zip(kappa.iter()).peekable();
        for (pos, &b) in blacks.iter().enumerate() {
            while let Some(&(&(label, longitude), &k)) = red_iter.peek() {
                if k <= pos {
                    strands.push(Strand::Red { label, longitude });
                    red_iter.next();
                } else {
                    break;
                }
            }
            strands.push(Strand::Black { label: b });
        }
        for (&(label, longitude), _) in red_iter {
            strands.push(Strand::Red { label, longitude });
        }
        StrandSeq { strands }
    }

    pub fn blacks(&self) -> Vec<Vertex> {
        self.strands
            .iter()
            .filter(|s| !s.is_red())
            .map(Strand::label)
            .collect()
    }

    pub fn kappa(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut black_count = 0usize;
        for s in &self.strands {
            match s {
                Strand::Black { .. } => black_count += 1,
                Strand::Red { .. } => out.push(black_count),
            }
        }
        out
    }

    /// Shorthand rendering: black strands as bare labels, red strands as
    /// `R<label>`.
    pub fn shorthand(&self) -> String {
        self.strands
            .iter()
            .map(|s| match s {
                Strand::Black { label } => label.to_string(),
                Strand::Red { label, .. } => format!("R{label}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parity distance between strand positions p < q: the sum over consecutive
/// pairs of 2 (same parity, black then red), 1 (opposite parity), else 0.
pub fn parity_distance(g: &DynkinGraph, seq: &StrandSeq, p: usize, q: usize) -> u64 {
    assert!(p <= q && q < seq.strands.len(), "positions out of range");
    let mut total = 0u64;
    for k in p..q {
        let a = &seq.strands[k];
        let b = &seq.strands[k + 1];
        let same_parity = g.parity(a.label()) == g.parity(b.label());
        total += if same_parity && !a.is_red() && b.is_red() {
            2
        } else if !same_parity {
            1
        } else {
            0
        };
    }
    total
}

/// An idempotent is parity if every pair of red strands satisfies
/// delta(p, p') <= |r - r'|.
pub fn is_parity(g: &DynkinGraph, seq: &StrandSeq) -> bool {
    let reds: Vec<(usize, i64)> = seq
        .strands
        .iter()
        .enumerate()
        .filter_map(|(k, s)| match s {
            Strand::Red { longitude, .. } => Some((k, *longitude)),
            _ => None,
        })
        .collect();
    for a in 0..reds.len() {
        for b in (a + 1)..reds.len() {
            let (pa, ra) = reds[a];
            let (pb, rb) = reds[b];
            if parity_distance(g, seq, pa, pb) > ra.abs_diff(rb) {
                return false;
            }
        }
    }
    true
}

/// Longitude triple (Bi, kappa, a): black labels, red positions, and the
/// longitudes of the black strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongitudeTriple {
    pub blacks: Vec<Vertex>,
    pub kappa: Vec<usize>,
    pub longs: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LongMode {
    Metric,
    Coarse,
}

/// a >= b in the coarse preorder iff floor(a/2) >= floor(b/2).
pub fn coarse_geq(a: i64, b: i64) -> bool {
    a.div_euclid(2) >= b.div_euclid(2)
}

/// a ~ b: both orders hold, i.e. {a,b} ⊆ {2p, 2p+1} for some p.
pub fn coarse_equiv(a: i64, b: i64) -> bool {
    a.div_euclid(2) == b.div_euclid(2)
}

impl LongitudeTriple {
    /// Check the three longitude conditions in the requested mode against
    /// the red longitudes of R.
    pub fn check(&self, g: &DynkinGraph, r: &ParamSet, mode: LongMode) -> bool {
        let n = self.blacks.len();
        if self.longs.len() != n {
            return false;
        }
        let reds = red_sequence(g, r);
        if self.kappa.len() != reds.len() {
            return false;
        }
        // (1) parity
        for (k, &i) in self.blacks.iter().enumerate() {
            if parity_of(self.longs[k]) != g.parity(i) {
                return false;
            }
        }
        // (2) weakly increasing
        for k in 1..n {
            let ok = match mode {
                LongMode::Metric => self.longs[k - 1] <= self.longs[k],
                LongMode::Coarse => coarse_geq(self.longs[k], self.longs[k - 1]),
            };
            if !ok {
                return false;
            }
        }
        // (3) relative red/black position
        for (p, &(_, rp)) in reds.iter().enumerate() {
            for k in 1..=n {
                let a = self.longs[k - 1];
                let right_of_red = k > self.kappa[p];
                let ok = match (mode, right_of_red) {
                    (LongMode::Metric, true) => a >= rp,
                    (LongMode::Metric, false) => a < rp,
                    (LongMode::Coarse, true) => coarse_geq(a, rp),
                    (LongMode::Coarse, false) => a < rp,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_seq(&self, g: &DynkinGraph, r: &ParamSet) -> StrandSeq {
        StrandSeq::from_kappa(g, r, &self.blacks, &self.kappa)
    }
}

/// The metric idempotent d(S): black strands sorted by longitude (reds go
/// left of blacks at equal longitude; equal-longitude blacks are stored in
/// the fixed vertex order), with the induced kappa and longitudes.
pub fn idempotent_from_s(
    g: &DynkinGraph,
    r: &ParamSet,
    s: &MultisetCollection,
) -> (StrandSeq, LongitudeTriple) {
    let mut blacks: Vec<(i64, usize, Vertex)> =
        s.iter().map(|(i, v)| (v, g.order_index(i), i)).collect();
    blacks.sort();
    let reds = red_sequence(g, r);
    // merge: at equal longitude the red goes left of the black
    let mut strands = Vec::new();
    let mut kappa = Vec::new();
    let mut bi = Vec::new();
    let mut longs = Vec::new();
    let mut b_iter = blacks.iter().peekable();
    for &(label, longitude) in &reds {
        while let Some(&&(bl, _, blabel)) = b_iter.peek() {
            if bl < longitude {
                strands.push(Strand::Black { label: blabel });
                bi.push(blabel);
                longs.push(bl);
                b_iter.next();
            } else {
                break;
            }
        }
        kappa.push(bi.len());
        strands.push(Strand::Red { label, longitude });
    }
    for &(bl, _, blabel) in b_iter {
        strands.push(Strand::Black { label: blabel });
        bi.push(blabel);
        longs.push(bl);
    }
    (
        StrandSeq { strands },
        LongitudeTriple {
            blacks: bi,
            kappa,
            longs,
        },
    )
}

/// Recover S from an idempotent: each black strand contributes
/// (longitude of the closest red to its right) - (parity distance to it).
/// Errors when some black strand has no red strand to its right.
pub fn s_from_idempotent(g: &DynkinGraph, seq: &StrandSeq) -> Result<MultisetCollection> {
    let mut out = MultisetCollection::empty();
    for (k, s) in seq.strands.iter().enumerate() {
        let Strand::Black { label } = *s else {
            continue;
        };
        let red = seq.strands[k + 1..]
            .iter()
            .enumerate()
            .find_map(|(off, t)| match t {
                Strand::Red { longitude, .. } => Some((k + 1 + off, *longitude)),
                _ => None,
            });
        let Some((rpos, rlong)) = red else {
            return Err(Error::NoRedToRight(k));
        };
        out.insert(label, rlong - parity_distance(g, seq, k, rpos) as i64);
    }
    Ok(out)
}

/// Greedy search for a compatible metric longitude; returns one if it
/// exists. Constraints per black strand form an interval intersected with
/// a parity class, monotone in the previous choice, so taking the least
/// feasible value at each step is exact.
pub fn find_metric_longitude(g: &DynkinGraph, r: &ParamSet, seq: &StrandSeq) -> Option<Vec<i64>> {
    let blacks = seq.blacks();
    let kappa = seq.kappa();
    let reds = red_sequence(g, r);
    let n = blacks.len();
    let mut longs = Vec::with_capacity(n);
    let mut prev: Option<i64> = None;
    for k in 1..=n {
        let mut lower: Option<i64> = prev;
        let mut upper: Option<i64> = None;
        for (p, &(_, rp)) in reds.iter().enumerate() {
            if kappa[p] < k {
                lower = Some(lower.map_or(rp, |lo| lo.max(rp)));
            } else {
                upper = Some(upper.map_or(rp, |hi| hi.min(rp)));
            }
        }
        let want = g.parity(blacks[k - 1]);
        let a = match lower {
            // least value >= the lower bound with the right parity
            Some(lo) => {
                if parity_of(lo) == want {
                    lo
                } else {
                    lo + 1
                }
            }
            // unbounded below: lower is always at least as feasible, so
            // start far below every red longitude
            None => {
                let floor = reds.iter().map(|&(_, rp)| rp).min().unwrap_or(0);
                let target = floor - 2 * (n as i64 + 2);
                if parity_of(target) == want {
                    target
                } else {
                    target - 1
                }
            }
        };
        if let Some(hi) = upper {
            if a >= hi {
                return None;
            }
        }
        longs.push(a);
        prev = Some(a);
    }
    Some(longs)
}

#[derive(Debug, Clone)]
pub struct CompatLongReport {
    pub cases: usize,
    pub parity_count: usize,
    pub counterexample: Option<String>,
}

/// For every strand sequence with at most `max_blacks` black strands,
/// compare metric-longitude existence against the parity condition
/// (their equivalence is the content of the compatibility lemma).
pub fn verify_compat_long(g: &DynkinGraph, r: &ParamSet, max_blacks: usize) -> CompatLongReport {
    let verts = g.vertices().to_vec();
    let ell = r.len();
    let mut cases: Vec<(Vec<Vertex>, Vec<usize>)> = Vec::new();
    for n in 0..=max_blacks {
        let mut seqs: Vec<Vec<Vertex>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for s in &seqs {
                for &v in &verts {
                    let mut t = s.clone();
                    t.push(v);
                    next.push(t);
                }
            }
            seqs = next;
        }
        let mut kappas: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..ell {
            let mut next = Vec::new();
            for k in &kappas {
                let lo = k.last().copied().unwrap_or(0);
                for v in lo..=n {
                    let mut t = k.clone();
                    t.push(v);
                    next.push(t);
                }
            }
            kappas = next;
        }
        for s in &seqs {
            for k in &kappas {
                cases.push((s.clone(), k.clone()));
            }
        }
    }
    let total = cases.len();
    let results = exec::map_vec(cases, |(blacks, kappa)| {
        let seq = StrandSeq::from_kappa(g, r, &blacks, &kappa);
        let parity = is_parity(g, &seq);
        let found = find_metric_longitude(g, r, &seq);
        if let Some(ref longs) = found {
            // the witness itself must pass the metric triple check
            let triple = LongitudeTriple {
                blacks: blacks.clone(),
                kappa: kappa.clone(),
                longs: longs.clone(),
            };
            if !triple.check(g, r, LongMode::Metric) {
                return (
                    false,
                    Some(format!("witness fails recheck: {}", seq.shorthand())),
                );
            }
        }
        if parity != found.is_some() {
            (
                parity,
                Some(format!(
                    "{} : parity={} but metric longitude {}",
                    seq.shorthand(),
                    parity,
                    if found.is_some() {
                        "exists"
                    } else {
                        "does not exist"
                    }
                )),
            )
        } else {
            (parity, None)
        }
    });
    let parity_count = results.iter().filter(|(p, _)| *p).count();
    let counterexample = results.into_iter().find_map(|(_, w)| w);
    CompatLongReport {
        cases: total,
        parity_count,
        counterexample,
    }
}
