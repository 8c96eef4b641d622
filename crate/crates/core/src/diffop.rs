//! Difference operators: finite sums of rational-function coefficients
//! composed with integer shifts of the variables. The carrier of the GKLO
//! action and of the cylindrical KLR polynomial action.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{Poly, RatFunc, Var, Q};

/// A commuting family of variable shifts; composition adds offsets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ShiftOp {
    offsets: BTreeMap<Var, i64>,
}

impl ShiftOp {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn single(v: Var, by: i64) -> Self {
        let mut offsets = BTreeMap::new();
        if by != 0 {
            offsets.insert(v, by);
        }
        ShiftOp { offsets }
    }

    pub fn is_identity(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn compose(&self, other: &ShiftOp) -> ShiftOp {
        let mut offsets = self.offsets.clone();
        for (&v, &c) in &other.offsets {
            let e = offsets.entry(v).or_insert(0);
            *e += c;
            if *e == 0 {
                offsets.remove(&v);
            }
        }
        ShiftOp { offsets }
    }

    pub fn inverse(&self) -> ShiftOp {
        ShiftOp {
            offsets: self.offsets.iter().map(|(&v, &c)| (v, -c)).collect(),
        }
    }

    pub fn apply_poly(&self, f: &Poly) -> Poly {
        f.shift_vars(&self.offsets)
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        f.shift_vars(&self.offsets)
    }
}

impl fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offsets.is_empty() {
            return write!(f, "id");
        }
        let mut first = true;
        for (v, c) in &self.offsets {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "[{v}+={c}]")?;
        }
        Ok(())
    }
}

/// Finite sum of (rational coefficient) ∘ (shift) terms, normalized by
/// merging equal shifts and dropping zero coefficients.
#[derive(Debug, Clone)]
pub struct DiffOp {
    terms: BTreeMap<ShiftOp, RatFunc>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(RatFunc::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_rat(RatFunc::from_poly(p))
    }

    pub fn from_rat(c: RatFunc) -> Self {
        Self::term(c, ShiftOp::identity())
    }

    pub fn shift(s: ShiftOp) -> Self {
        Self::term(RatFunc::one(), s)
    }

    pub fn term(c: RatFunc, s: ShiftOp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(s, c);
        }
        DiffOp { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, s: ShiftOp, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&s) {
            None => {
                self.terms.insert(s, c);
            }
            Some(prev) => {
                let sum = prev.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(s, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.insert(s.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> DiffOp {
        DiffOp {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c.scale(k)))
                .collect(),
        }
    }

    /// Operator composition: (c1 ∘ s1)(c2 ∘ s2) = (c1 · s1(c2)) ∘ (s1 s2).
    pub fn mul(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                out.insert(s1.compose(s2), c1.mul(&s1.apply(c2)));
            }
        }
        out
    }

    pub fn mul_rat(&self, c: &RatFunc) -> DiffOp {
        self.mul(&DiffOp::from_rat(c.clone()))
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (s, c) in &self.terms {
            acc = acc.add(&c.mul(&s.apply(f)));
        }
        acc
    }

    pub fn apply_poly(&self, f: &Poly) -> RatFunc {
        self.apply(&RatFunc::from_poly(f.clone()))
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})∘{s}")?;
        }
        Ok(())
    }
}
