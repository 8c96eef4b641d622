//! Exact multivariate polynomial and rational-function arithmetic over Q,
//! shift endomorphisms, divided differences, symmetrizers, and the
//! degree-truncated bases used by the operator-identity suites.
//!
//! Rational functions are kept as numerator/denominator pairs with only
//! content normalization; equality is decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A polynomial variable. `Z{node,slot}` are the GKLO variables (slot
/// counted from 1), `Pos(k)` the position-indexed strand variables
/// (k from 1), `Param(t)` free symbolic parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z { node: u16, slot: u16 },
    Pos(u16),
    Param(u16),
}

impl Var {
    pub fn z(node: usize, slot: usize) -> Self {
        Var::Z {
            node: node as u16,
            slot: slot as u16,
        }
    }

    pub fn pos(k: usize) -> Self {
        Var::Pos(k as u16)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z { node, slot } => write!(f, "z[{node},{slot}]"),
            Var::Pos(k) => write!(f, "Z{k}"),
            Var::Param(t) => write!(f, "c{t}"),
        }
    }
}

/// Exponent vector, sorted by variable, no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monom(Vec<(Var, u32)>);

impl Monom {
    pub fn one() -> Self {
        Monom(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monom(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monom(map.into_iter().collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monom) -> Monom {
        Monom::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monom) -> Option<Monom> {
        let mut out = Vec::new();
        for &(v, e) in &self.0 {
            let oe = other.exponent(v);
            if oe > e {
                return None;
            }
            if e - oe > 0 {
                out.push((v, e - oe));
            }
        }
        for &(v, oe) in &other.0 {
            if self.exponent(v) < oe {
                return None;
            }
        }
        Some(Monom(out))
    }

    /// Graded lexicographic order (used as the division order): compare by
    /// total degree, then a larger exponent on an earlier variable wins.
    pub fn cmp_grlex(&self, other: &Monom) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if va > vb {
                        return Ordering::Less;
                    }
                    match ea.cmp(&eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        o => return o,
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monom, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(q(1))
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monom::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(q(n))
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monom::var(v), q(1));
        Poly { terms }
    }

    /// `v + c`
    pub fn var_plus(v: Var, c: i64) -> Self {
        Poly::var(v).add(&Poly::int(c))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monom, Q)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monom, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            Some(Q::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monom, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monom::degree).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Simultaneous substitution of variables by polynomials. Variables not
    /// in the map are left alone.
    pub fn subst(&self, map: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                let factor = match map.get(&v) {
                    Some(p) => p.pow(e),
                    None => Poly::from_terms([(Monom::from_pairs([(v, e)]), q(1))]),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Rename `a -> b` and `b -> a`.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        let mut map = BTreeMap::new();
        map.insert(a, Poly::var(b));
        map.insert(b, Poly::var(a));
        self.subst(&map)
    }

    /// Shift each mapped variable by the given integer offset.
    pub fn shift_vars(&self, offsets: &BTreeMap<Var, i64>) -> Poly {
        if offsets.is_empty() {
            return self.clone();
        }
        let map: BTreeMap<Var, Poly> = offsets
            .iter()
            .map(|(&v, &c)| (v, Poly::var_plus(v, c)))
            .collect();
        self.subst(&map)
    }

    pub fn apply_perm(&self, perm_map: &BTreeMap<Var, Var>) -> Poly {
        let map: BTreeMap<Var, Poly> = perm_map.iter().map(|(&a, &b)| (a, Poly::var(b))).collect();
        self.subst(&map)
    }

    pub fn leading_grlex(&self) -> Option<(&Monom, &Q)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_grlex(b.0))
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&(Q::one() / c)));
        }
        let (dm, dc) = divisor
            .leading_grlex()
            .map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let (lm, lc) = rem.leading_grlex().map(|(m, c)| (m.clone(), c.clone()))?;
            let mq = lm.div(&dm)?;
            let cq = lc / &dc;
            let t = Poly::from_terms([(mq, cq)]);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        Some(quot)
    }

    /// Content: gcd of the coefficients (positive), 0 for the zero poly.
    fn content(&self) -> Q {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        if num_gcd.is_zero() {
            Q::zero()
        } else {
            Q::new(num_gcd, den_lcm)
        }
    }

    pub fn eval(&self, point: &BTreeMap<Var, Q>) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = point.get(&v).cloned().unwrap_or_else(Q::zero);
                for _ in 0..e {
                    t *= &x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp_grlex(a.0));
        for (idx, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                let mut first = true;
                for (v, e) in m.iter() {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{v}")?;
                    } else {
                        write!(f, "{v}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Divided difference `(s f - f) / (y - x)` where `s` swaps `x` and `y`
/// (x is the left variable z_r, y the right variable z_{r+1}).
pub fn divided_difference(f: &Poly, x: Var, y: Var) -> Poly {
    let num = f.swap_vars(x, y).sub(f);
    let den = Poly::var(y).sub(&Poly::var(x));
    num.div_exact(&den)
        .expect("s f - f is always divisible by the variable difference")
}

/// Reduced word for the longest element of S_m, as adjacent transposition
/// indices (1-based, s_k swaps k and k+1).
fn longest_word(m: usize) -> Vec<usize> {
    let mut w = Vec::new();
    for j in 1..m {
        for k in (1..=j).rev() {
            w.push(k);
        }
    }
    w
}

/// Projection of `f` onto the invariants of the product of symmetric groups
/// permuting each variable block, computed by the divided-difference formula
/// `prod_i (1/m_i!) del_{i,w_0} prod_{k<l} (v_k - v_l)`.
pub fn symmetrize(f: &Poly, groups: &[Vec<Var>]) -> Poly {
    let mut out = f.clone();
    for group in groups {
        let m = group.len();
        if m <= 1 {
            continue;
        }
        let mut vandermonde = Poly::one();
        for k in 0..m {
            for l in (k + 1)..m {
                vandermonde = vandermonde.mul(&Poly::var(group[k]).sub(&Poly::var(group[l])));
            }
        }
        out = out.mul(&vandermonde);
        for k in longest_word(m) {
            out = divided_difference(&out, group[k - 1], group[k]);
        }
        let mut fact = Q::one();
        for j in 2..=m {
            fact *= q(j as i64);
        }
        out = out.scale(&(Q::one() / fact));
    }
    out
}

pub fn is_symmetric(f: &Poly, groups: &[Vec<Var>]) -> bool {
    for group in groups {
        for k in 0..group.len().saturating_sub(1) {
            if &f.swap_vars(group[k], group[k + 1]) != f {
                return false;
            }
        }
    }
    true
}

/// Spanning set of the block-symmetric polynomials up to `max_degree`:
/// one orbit-sum per orbit of monomials, duplicate-free, ordered.
pub fn symmetric_basis(groups: &[Vec<Var>], max_degree: u32) -> Vec<Poly> {
    // weakly decreasing exponent tuples per group
    fn partitions_into(
        len: usize,
        max: u32,
        budget: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if len == 0 {
            out.push(acc.clone());
            return;
        }
        let hi = max.min(budget);
        for e in (0..=hi).rev() {
            acc.push(e);
            partitions_into(len - 1, e, budget - e, acc, out);
            acc.pop();
        }
    }

    fn orbit_sum(group: &[Var], shape: &[u32]) -> Poly {
        // sum over distinct permutations of the exponent tuple
        let mut sorted = shape.to_vec();
        sorted.sort_unstable();
        let mut perms = Vec::new();
        permute_distinct(&mut sorted, 0, &mut perms);
        let mut p = Poly::zero();
        for exps in perms {
            let m = Monom::from_pairs(group.iter().copied().zip(exps.iter().copied()));
            p.add_term(m, q(1));
        }
        p
    }

    fn permute_distinct(vals: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
        if k == vals.len() {
            out.push(vals.clone());
            return;
        }
        let mut seen = Vec::new();
        for i in k..vals.len() {
            if seen.contains(&vals[i]) {
                continue;
            }
            seen.push(vals[i]);
            vals.swap(k, i);
            permute_distinct(vals, k + 1, out);
            vals.swap(k, i);
        }
    }

    // shapes per group, then cartesian product with total degree bound
    let mut per_group: Vec<Vec<Vec<u32>>> = Vec::new();
    for group in groups {
        let mut shapes = Vec::new();
        let mut acc = Vec::new();
        partitions_into(group.len(), max_degree, max_degree, &mut acc, &mut shapes);
        shapes.sort();
        shapes.dedup();
        per_group.push(shapes);
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let total: u32 = choice
            .iter()
            .zip(&per_group)
            .map(|(&c, shapes)| shapes[c].iter().sum::<u32>())
            .sum();
        if total <= max_degree {
            let mut p = Poly::one();
            for ((&c, shapes), group) in choice.iter().zip(&per_group).zip(groups) {
                p = p.mul(&orbit_sum(group, &shapes[c]));
            }
            out.push(p);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == groups.len() {
                out.sort_by(|a, b| {
                    a.degree()
                        .cmp(&b.degree())
                        .then_with(|| format!("{a}").cmp(&format!("{b}")))
                });
                out.dedup();
                return out;
            }
            choice[k] += 1;
            if choice[k] < per_group[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// All monomials in `vars` of total degree `<= max_degree` (as polynomials).
pub fn monomial_basis(vars: &[Var], max_degree: u32) -> Vec<Poly> {
    fn rec(vars: &[Var], budget: u32, acc: &Monom, out: &mut Vec<Monom>) {
        match vars.split_first() {
            None => out.push(acc.clone()),
            Some((&v, rest)) => {
                for e in 0..=budget {
                    let m = acc.mul(&Monom::from_pairs([(v, e)]));
                    rec(rest, budget - e, &m, out);
                }
            }
        }
    }
    let mut ms = Vec::new();
    rec(vars, max_degree, &Monom::one(), &mut ms);
    ms.sort_by(|a, b| a.cmp_grlex(b));
    ms.into_iter()
        .map(|m| Poly::from_terms([(m, q(1))]))
        .collect()
}

/// Rational function kept as an unreduced fraction; equality is decided by
/// cross-multiplication, and only content normalization is applied.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if let Some(c) = self.den.as_constant() {
            self.num = self.num.scale(&(Q::one() / c));
            self.den = Poly::one();
            return;
        }
        // cheap exact-cancellation attempt keeps compositions small
        if let Some(qt) = self.num.div_exact(&self.den) {
            self.num = qt;
            self.den = Poly::one();
            return;
        }
        // rescale so den has content 1 and positive leading coefficient
        let c = self.den.content();
        let mut scale = Q::one() / c;
        if let Some((_, lc)) = self.den.leading_grlex() {
            if lc.is_negative() {
                scale = -scale;
            }
        }
        self.num = self.num.scale(&scale);
        self.den = self.den.scale(&scale);
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return RatFunc::new(self.num.sub(&other.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        RatFunc::new(self.num.mul(p), self.den.clone())
    }

    pub fn scale(&self, c: &Q) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverting zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        self.mul(&other.inv())
    }

    pub fn shift_vars(&self, offsets: &BTreeMap<Var, i64>) -> RatFunc {
        RatFunc::new(self.num.shift_vars(offsets), self.den.shift_vars(offsets))
    }

    pub fn subst(&self, map: &BTreeMap<Var, Poly>) -> RatFunc {
        RatFunc::new(self.num.subst(map), self.den.subst(map))
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> RatFunc {
        RatFunc::new(self.num.swap_vars(a, b), self.den.swap_vars(a, b))
    }

    /// Exact polynomial content, when the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<Poly> {
        self.num.div_exact(&self.den)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Var {
        Var::pos(1)
    }
    fn y() -> Var {
        Var::pos(2)
    }
    fn zvars(m: usize) -> Vec<Var> {
        (1..=m).map(Var::pos).collect()
    }

    #[test]
    fn divided_difference_basics() {
        // del(z_r) = 1
        let f = Poly::var(x());
        assert_eq!(divided_difference(&f, x(), y()), Poly::one());
        let f = Poly::var(y());
        assert_eq!(divided_difference(&f, x(), y()), Poly::int(-1));
        // del(symmetric) = 0
        let s = Poly::var(x()).mul(&Poly::var(y()));
        assert!(divided_difference(&s, x(), y()).is_zero());
        // del composed with itself is zero
        let g = Poly::var(x())
            .pow(3)
            .add(&Poly::var(y()).pow(2).mul(&Poly::var(x())));
        let d = divided_difference(&g, x(), y());
        assert!(divided_difference(&d, x(), y()).is_zero());
    }

    #[test]
    fn divided_difference_braid() {
        let v = zvars(3);
        let f = Poly::var(v[0])
            .pow(3)
            .mul(&Poly::var(v[1]).pow(2))
            .add(&Poly::var(v[2]).pow(4));
        let d1 = |p: &Poly| divided_difference(p, v[0], v[1]);
        let d2 = |p: &Poly| divided_difference(p, v[1], v[2]);
        assert_eq!(d1(&d2(&d1(&f))), d2(&d1(&d2(&f))));
    }

    #[test]
    fn symmetrizer_is_projection() {
        let groups = vec![zvars(2)];
        // fixes invariants
        let e1 = Poly::var(Var::pos(1)).add(&Poly::var(Var::pos(2)));
        assert_eq!(symmetrize(&e1, &groups), e1);
        // z_1 -> (z_1+z_2)/2
        let got = symmetrize(&Poly::var(Var::pos(1)), &groups);
        assert_eq!(got, e1.scale(&Q::new(1.into(), 2.into())));
        // idempotent on assorted polynomials
        for f in monomial_basis(&zvars(2), 3) {
            let once = symmetrize(&f, &groups);
            assert!(is_symmetric(&once, &groups));
            assert_eq!(symmetrize(&once, &groups), once);
        }
    }

    #[test]
    fn symmetrizer_three_variables() {
        let groups = vec![zvars(3)];
        for f in [
            Poly::var(Var::pos(1)).pow(2),
            Poly::var(Var::pos(1)).mul(&Poly::var(Var::pos(2)).pow(2)),
        ] {
            let once = symmetrize(&f, &groups);
            assert!(is_symmetric(&once, &groups));
            assert_eq!(symmetrize(&once, &groups), once);
        }
    }

    #[test]
    fn symmetric_basis_small_cases() {
        // m = (1), degree 2: {1, z, z^2}
        let b = symmetric_basis(&[zvars(1)], 2);
        assert_eq!(b.len(), 3);
        // m = (2), degree 1: {1, z1 + z2}
        let b = symmetric_basis(&[zvars(2)], 1);
        assert_eq!(b.len(), 2);
        // m = (2), degree 2: orbit sums of shapes (0,0), (1,0), (1,1), (2,0)
        let b = symmetric_basis(&[zvars(2)], 2);
        assert_eq!(b.len(), 4);
        for p in &b {
            assert!(is_symmetric(p, &[zvars(2)]));
        }
    }

    #[test]
    fn ratfunc_equality_is_cross_multiplied() {
        let a = RatFunc::new(
            Poly::var(x()).pow(2).sub(&Poly::var(y()).pow(2)),
            Poly::var(x()).sub(&Poly::var(y())),
        );
        let b = RatFunc::from_poly(Poly::var(x()).add(&Poly::var(y())));
        assert_eq!(a, b);
        assert!(a.to_poly().is_some());
    }

    #[test]
    fn div_exact_detects_non_divisibility() {
        let f = Poly::var(x()).pow(2).add(&Poly::one());
        let g = Poly::var(x()).sub(&Poly::var(y()));
        assert!(f.div_exact(&g).is_none());
        let h = f.mul(&g);
        assert_eq!(h.div_exact(&g), Some(f));
    }

    #[test]
    fn shifts_compose_and_commute() {
        let f = Poly::var(x()).pow(2).mul(&Poly::var(y()));
        let mut s1 = BTreeMap::new();
        s1.insert(x(), 2i64);
        let mut s2 = BTreeMap::new();
        s2.insert(y(), -4i64);
        assert_eq!(
            f.shift_vars(&s1).shift_vars(&s2),
            f.shift_vars(&s2).shift_vars(&s1)
        );
        let mut inv = BTreeMap::new();
        inv.insert(x(), -2i64);
        assert_eq!(f.shift_vars(&s1).shift_vars(&inv), f);
    }
}
