//! The GKLO difference-operator representation of the shifted Yangian:
//! the series A_i(u), E_i(u), F_i(u), the H_i(u) expansion, and exhaustive
//! verification of the defining relations by action on symmetric bases.

use std::collections::BTreeMap;

use crate::diffop::{DiffOp, ShiftOp};
use crate::dynkin::{DynkinGraph, RootVec, Vertex, WeightVec};
use crate::error::{Error, Result};
use crate::exec;
use crate::multiset::ParamSet;
use crate::poly::{q, symmetric_basis, Poly, RatFunc, Var};
use crate::report::{all_required_pass, RelationReport};

/// Data of a truncated shifted Yangian: graph, dominant weight lambda
/// (from the parameter set), mu = lambda - sum m_i alpha_i, and the roots
/// of the polynomials p_i (integers, or free symbols for hand checks).
#[derive(Debug, Clone)]
pub struct YangianData {
    pub graph: DynkinGraph,
    pub lambda: WeightVec,
    pub mu: WeightVec,
    pub m: BTreeMap<Vertex, usize>,
    params: BTreeMap<Vertex, Vec<Poly>>,
}

impl YangianData {
    pub fn new(g: &DynkinGraph, r: &ParamSet, m: &[(Vertex, usize)]) -> Result<Self> {
        r.validate(g)?;
        let lambda = r.weight();
        let m: BTreeMap<Vertex, usize> = m.iter().copied().filter(|&(_, k)| k > 0).collect();
        for &i in m.keys() {
            if !g.contains(i) {
                return Err(Error::UnknownVertex(i));
            }
        }
        let depth = RootVec::from_coeffs(m.iter().map(|(&i, &k)| (i, k as i64)));
        let mu = lambda.sub(&g.root_to_weight(&depth));
        let params = g
            .vertices()
            .iter()
            .map(|&i| (i, r.get(i).iter().map(|&c| Poly::int(c)).collect()))
            .collect();
        Ok(YangianData {
            graph: g.clone(),
            lambda,
            mu,
            m,
            params,
        })
    }

    /// Same data with mu given instead of the multiplicities.
    pub fn from_mu(g: &DynkinGraph, r: &ParamSet, mu: &WeightVec) -> Result<Self> {
        let lambda = r.weight();
        let depth = g
            .weight_to_root(&lambda.sub(mu))
            .ok_or_else(|| Error::BadInput("lambda - mu is not in the root lattice".into()))?;
        let mut m = Vec::new();
        for (i, c) in depth.iter() {
            if c < 0 {
                return Err(Error::BadInput(format!("m_{i} = {c} is negative")));
            }
            m.push((i, c as usize));
        }
        Self::new(g, r, &m)
    }

    /// Replace the parameters at vertex `i` by free symbols c0, c1, ...
    /// (used for symbolic spot checks).
    pub fn with_symbolic_params(mut self, i: Vertex, count: usize) -> Self {
        self.params.insert(
            i,
            (0..count as u16)
                .map(|t| Poly::var(Var::Param(t)))
                .collect(),
        );
        let mut l = self.lambda.clone();
        let old = l.coeff(i);
        l.add_coeff(i, count as i64 - old);
        // mu moves with lambda so that the multiplicities stay fixed
        let mut mu = self.mu.clone();
        mu.add_coeff(i, count as i64 - old);
        self.lambda = l;
        self.mu = mu;
        self
    }

    pub fn mult(&self, i: Vertex) -> usize {
        self.m.get(&i).copied().unwrap_or(0)
    }

    pub fn zvar(&self, i: Vertex, r: usize) -> Var {
        Var::z(i, r)
    }

    /// Variable blocks per vertex, in the graph's total order.
    pub fn groups(&self) -> Vec<Vec<Var>> {
        self.graph
            .order()
            .iter()
            .filter(|&&i| self.mult(i) > 0)
            .map(|&i| (1..=self.mult(i)).map(|r| Var::z(i, r)).collect())
            .collect()
    }

    /// The variables in the canonical strand order: vertices by the total
    /// order, slots ascending.
    pub fn z_vars_in_order(&self) -> Vec<Var> {
        self.groups().into_iter().flatten().collect()
    }

    pub fn symmetric_basis(&self, degree: u32) -> Vec<Poly> {
        symmetric_basis(&self.groups(), degree)
    }

    /// p_i evaluated at a polynomial argument.
    pub fn p_at(&self, i: Vertex, arg: &Poly) -> Poly {
        let mut acc = Poly::one();
        for c in &self.params[&i] {
            acc = acc.mul(&arg.sub(c));
        }
        acc
    }

    /// W_i evaluated at a polynomial argument.
    pub fn w_at(&self, i: Vertex, arg: &Poly) -> Poly {
        let mut acc = Poly::one();
        for r in 1..=self.mult(i) {
            acc = acc.mul(&arg.sub(&Poly::var(self.zvar(i, r))));
        }
        acc
    }

    /// W_{i,r}: the product skipping slot r, evaluated at an argument.
    pub fn w_skip_at(&self, i: Vertex, r: usize, arg: &Poly) -> Poly {
        let mut acc = Poly::one();
        for s in 1..=self.mult(i) {
            if s != r {
                acc = acc.mul(&arg.sub(&Poly::var(self.zvar(i, s))));
            }
        }
        acc
    }

    /// A_i^{(s)}: multiplication by (-1)^s e_s(z_{i,*}); zero for s > m_i.
    pub fn a_op(&self, i: Vertex, s: usize) -> DiffOp {
        if s == 0 {
            return DiffOp::one();
        }
        if s > self.mult(i) {
            return DiffOp::zero();
        }
        // elementary symmetric polynomial e_s
        let vars: Vec<Var> = (1..=self.mult(i)).map(|r| self.zvar(i, r)).collect();
        let mut e = vec![Poly::zero(); s + 1];
        e[0] = Poly::one();
        for &v in &vars {
            for k in (1..=s).rev() {
                let add = e[k - 1].mul(&Poly::var(v));
                e[k] = e[k].add(&add);
            }
        }
        let sign = if s.is_multiple_of(2) { q(1) } else { q(-1) };
        DiffOp::from_poly(e[s].scale(&sign))
    }

    /// E_i^{(r)} = -sum_s z_{i,s}^{r-1} prod_{j->i} W_j(z_{i,s}-1) / W_{i,s}(z_{i,s}) β_{i,s}^{-1}.
    pub fn e_op(&self, i: Vertex, r: usize) -> DiffOp {
        assert!(r >= 1);
        let mut out = DiffOp::zero();
        for s in 1..=self.mult(i) {
            let zs = Poly::var(self.zvar(i, s));
            let mut num = zs.pow(r as u32 - 1).neg();
            for &j in self.graph.neighbors(i) {
                if self.graph.arrow(j, i) {
                    num = num.mul(&self.w_at(j, &zs.sub(&Poly::one())));
                }
            }
            let den = self.w_skip_at(i, s, &zs);
            let coeff = RatFunc::new(num, den);
            out = out.add(&DiffOp::term(coeff, ShiftOp::single(self.zvar(i, s), -2)));
        }
        out
    }

    /// F_i^{(r)} = sum_s (z_{i,s}+2)^{r-1} p_i(z_{i,s}+2) prod_{j<-i} W_j(z_{i,s}+1) / W_{i,s}(z_{i,s}) β_{i,s}.
    pub fn f_op(&self, i: Vertex, r: usize) -> DiffOp {
        assert!(r >= 1);
        let mut out = DiffOp::zero();
        for s in 1..=self.mult(i) {
            let zs = Poly::var(self.zvar(i, s));
            let zs2 = zs.add(&Poly::int(2));
            let mut num = zs2.pow(r as u32 - 1).mul(&self.p_at(i, &zs2));
            for &j in self.graph.neighbors(i) {
                if self.graph.arrow(i, j) {
                    num = num.mul(&self.w_at(j, &zs.add(&Poly::one())));
                }
            }
            let den = self.w_skip_at(i, s, &zs);
            let coeff = RatFunc::new(num, den);
            out = out.add(&DiffOp::term(coeff, ShiftOp::single(self.zvar(i, s), 2)));
        }
        out
    }

    /// Leading u-exponent of H_i(u): <mu, alpha_i^vee>.
    pub fn h_lead(&self, i: Vertex) -> i64 {
        self.graph
            .pairing_weight(&self.mu, i)
            .expect("vertex in graph")
    }

    /// Coefficient of u^{-t} in the expansion of
    /// H_i(u) = p_i(u) prod_{j~i} W_j(u-1) / (W_i(u) W_i(u-2))
    /// at u = infinity. These are multiplication operators; the coefficient
    /// at the leading exponent is the identity.
    pub fn h_coeff(&self, i: Vertex, t: i64) -> DiffOp {
        // numerator and denominator as coefficient lists in u (index = power)
        let mut num = vec![Poly::one()];
        for c in &self.params[&i] {
            num = upoly_mul_linear(&num, &c.neg());
        }
        for &j in self.graph.neighbors(i) {
            for s in 1..=self.mult(j) {
                // factor (u - 1 - z_{j,s})
                let c = Poly::var(self.zvar(j, s)).add(&Poly::one()).neg();
                num = upoly_mul_linear(&num, &c);
            }
        }
        let mut den = vec![Poly::one()];
        for s in 1..=self.mult(i) {
            den = upoly_mul_linear(&den, &Poly::var(self.zvar(i, s)).neg());
            let c = Poly::var(self.zvar(i, s)).add(&Poly::int(2)).neg();
            den = upoly_mul_linear(&den, &c);
        }
        let lead = (num.len() as i64 - 1) - (den.len() as i64 - 1);
        debug_assert_eq!(lead, self.h_lead(i));
        let order = t + lead;
        if order < 0 {
            return DiffOp::zero();
        }
        let order = order as usize;
        // reverse into power series in 1/u (leading coefficients are 1)
        let tilde = |p: &[Poly], k: usize| -> Poly {
            let deg = p.len() - 1;
            if k > deg {
                Poly::zero()
            } else {
                p[deg - k].clone()
            }
        };
        // invert the denominator series up to `order`
        let mut inv = vec![Poly::one()];
        for k in 1..=order {
            let mut acc = Poly::zero();
            for j in 1..=k {
                acc = acc.add(&tilde(&den, j).mul(&inv[k - j]));
            }
            inv.push(acc.neg());
        }
        let mut coeff = Poly::zero();
        for a in 0..=order {
            coeff = coeff.add(&tilde(&num, a).mul(&inv[order - a]));
        }
        DiffOp::from_poly(coeff)
    }
}

/// Multiply a u-coefficient list by the linear factor (u + c).
fn upoly_mul_linear(p: &[Poly], c: &Poly) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); p.len() + 1];
    for (k, coeff) in p.iter().enumerate() {
        out[k + 1] = out[k + 1].add(coeff);
        out[k] = out[k].add(&coeff.mul(c));
    }
    out
}

fn alpha_dot(g: &DynkinGraph, i: Vertex, j: Vertex) -> i64 {
    if i == j {
        2
    } else if g.adjacent(i, j) {
        -1
    } else {
        0
    }
}

enum Instance {
    /// [A_i^{(p)}, A_j^{(q)}] = 0
    AA(Vertex, Vertex, usize, usize),
    /// [E_i^{(p)}, F_j^{(q)}] = 2 δ_ij H_i^{(p+q-1)}
    EF(Vertex, Vertex, usize, usize),
    /// [A_i^{(p+1)}, E_j^{(q)}] - [A_i^{(p)}, E_j^{(q+1)}] = -2 δ_ij A_i^{(p)} E_j^{(q)}
    AE(Vertex, Vertex, usize, usize),
    /// [A_i^{(p+1)}, F_j^{(q)}] - [A_i^{(p)}, F_j^{(q+1)}] = 2 δ_ij F_j^{(q)} A_i^{(p)}
    AF(Vertex, Vertex, usize, usize),
    /// [E_i^{(p+1)}, E_j^{(q)}] - [E_i^{(p)}, E_j^{(q+1)}] = a_ij (E_i^{(p)} E_j^{(q)} + E_j^{(q)} E_i^{(p)})
    EE(Vertex, Vertex, usize, usize),
    /// F analogue, with the second term in the anticommutator order
    FF(Vertex, Vertex, usize, usize),
    /// F analogue exactly as printed, with indices (p), (q) split across
    /// the factors; retained as an informational check
    FFVerbatim(Vertex, Vertex, usize, usize),
    /// non-adjacent Serre: [E_i^{(p)}, E_j^{(q)}] = 0, same for F
    SerreE1(Vertex, Vertex, usize, usize),
    SerreF1(Vertex, Vertex, usize, usize),
    /// adjacent Serre: sym [E_i^{(p1)}, [E_i^{(p2)}, E_j^{(q)}]] = 0
    SerreE2(Vertex, Vertex, usize, usize, usize),
    SerreF2(Vertex, Vertex, usize, usize, usize),
    /// [H_i^{(p+1)}, E_j^{(q)}] - [H_i^{(p)}, E_j^{(q+1)}] = a_ij (H_i^{(p)} E_j^{(q)} + E_j^{(q)} H_i^{(p)})
    HE(Vertex, Vertex, i64, usize),
    HF(Vertex, Vertex, i64, usize),
    HFVerbatim(Vertex, Vertex, i64, usize),
    /// E/F/A/H map symmetric polynomials to symmetric polynomials
    Preserves(&'static str, Vertex, usize),
}

impl Instance {
    fn name(&self) -> &'static str {
        match self {
            Instance::AA(..) => "AA-commute",
            Instance::EF(..) => "EF-cartan",
            Instance::AE(..) => "AE-shift",
            Instance::AF(..) => "AF-shift",
            Instance::EE(..) => "EE-current",
            Instance::FF(..) => "FF-current",
            Instance::FFVerbatim(..) => "FF-current-verbatim",
            Instance::SerreE1(..) => "E-commute-nonadjacent",
            Instance::SerreF1(..) => "F-commute-nonadjacent",
            Instance::SerreE2(..) => "E-serre",
            Instance::SerreF2(..) => "F-serre",
            Instance::HE(..) => "HE-current",
            Instance::HF(..) => "HF-current",
            Instance::HFVerbatim(..) => "HF-current-verbatim",
            Instance::Preserves(..) => "preserves-symmetric",
        }
    }

    fn describe(&self) -> String {
        match *self {
            Instance::AA(i, j, p, q)
            | Instance::EF(i, j, p, q)
            | Instance::AE(i, j, p, q)
            | Instance::AF(i, j, p, q)
            | Instance::EE(i, j, p, q)
            | Instance::FF(i, j, p, q)
            | Instance::FFVerbatim(i, j, p, q)
            | Instance::SerreE1(i, j, p, q)
            | Instance::SerreF1(i, j, p, q) => format!("i={i} j={j} p={p} q={q}"),
            Instance::SerreE2(i, j, p1, p2, q) | Instance::SerreF2(i, j, p1, p2, q) => {
                format!("i={i} j={j} p1={p1} p2={p2} q={q}")
            }
            Instance::HE(i, j, p, q)
            | Instance::HF(i, j, p, q)
            | Instance::HFVerbatim(i, j, p, q) => {
                format!("i={i} j={j} p={p} q={q}")
            }
            Instance::Preserves(kind, i, r) => format!("{kind}_{i}^({r})"),
        }
    }
}

/// The operator-identity defect LHS - RHS of an instance; the relation
/// holds when the defect kills every symmetric polynomial.
fn defect(d: &YangianData, inst: &Instance) -> DiffOp {
    let g = &d.graph;
    match *inst {
        Instance::AA(i, j, p, qn) => d.a_op(i, p).commutator(&d.a_op(j, qn)),
        Instance::EF(i, j, p, qn) => {
            let lhs = d.e_op(i, p).commutator(&d.f_op(j, qn));
            if i == j {
                lhs.sub(&d.h_coeff(i, (p + qn - 1) as i64).scale(&q(2)))
            } else {
                lhs
            }
        }
        Instance::AE(i, j, p, qn) => {
            let lhs = d
                .a_op(i, p + 1)
                .commutator(&d.e_op(j, qn))
                .sub(&d.a_op(i, p).commutator(&d.e_op(j, qn + 1)));
            if i == j {
                lhs.add(&d.a_op(i, p).mul(&d.e_op(j, qn)).scale(&q(2)))
            } else {
                lhs
            }
        }
        Instance::AF(i, j, p, qn) => {
            let lhs = d
                .a_op(i, p + 1)
                .commutator(&d.f_op(j, qn))
                .sub(&d.a_op(i, p).commutator(&d.f_op(j, qn + 1)));
            if i == j {
                lhs.sub(&d.f_op(j, qn).mul(&d.a_op(i, p)).scale(&q(2)))
            } else {
                lhs
            }
        }
        Instance::EE(i, j, p, qn) => {
            let lhs = d
                .e_op(i, p + 1)
                .commutator(&d.e_op(j, qn))
                .sub(&d.e_op(i, p).commutator(&d.e_op(j, qn + 1)));
            let anti = d
                .e_op(i, p)
                .mul(&d.e_op(j, qn))
                .add(&d.e_op(j, qn).mul(&d.e_op(i, p)));
            lhs.sub(&anti.scale(&q(alpha_dot(g, i, j))))
        }
        Instance::FF(i, j, p, qn) => {
            let lhs = d
                .f_op(i, p + 1)
                .commutator(&d.f_op(j, qn))
                .sub(&d.f_op(i, p).commutator(&d.f_op(j, qn + 1)));
            let anti = d
                .f_op(i, p)
                .mul(&d.f_op(j, qn))
                .add(&d.f_op(j, qn).mul(&d.f_op(i, p)));
            lhs.add(&anti.scale(&q(alpha_dot(g, i, j))))
        }
        Instance::FFVerbatim(i, j, p, qn) => {
            let lhs = d
                .f_op(i, p + 1)
                .commutator(&d.f_op(j, qn))
                .sub(&d.f_op(i, p).commutator(&d.f_op(j, qn + 1)));
            let rhs = d
                .f_op(i, p)
                .mul(&d.f_op(j, qn))
                .add(&d.f_op(j, p).mul(&d.f_op(i, qn)));
            lhs.add(&rhs.scale(&q(alpha_dot(g, i, j))))
        }
        Instance::SerreE1(i, j, p, qn) => d.e_op(i, p).commutator(&d.e_op(j, qn)),
        Instance::SerreF1(i, j, p, qn) => d.f_op(i, p).commutator(&d.f_op(j, qn)),
        Instance::SerreE2(i, j, p1, p2, qn) => {
            let a = d
                .e_op(i, p1)
                .commutator(&d.e_op(i, p2).commutator(&d.e_op(j, qn)));
            let b = d
                .e_op(i, p2)
                .commutator(&d.e_op(i, p1).commutator(&d.e_op(j, qn)));
            a.add(&b)
        }
        Instance::SerreF2(i, j, p1, p2, qn) => {
            let a = d
                .f_op(i, p1)
                .commutator(&d.f_op(i, p2).commutator(&d.f_op(j, qn)));
            let b = d
                .f_op(i, p2)
                .commutator(&d.f_op(i, p1).commutator(&d.f_op(j, qn)));
            a.add(&b)
        }
        Instance::HE(i, j, p, qn) => {
            let lhs = d
                .h_coeff(i, p + 1)
                .commutator(&d.e_op(j, qn))
                .sub(&d.h_coeff(i, p).commutator(&d.e_op(j, qn + 1)));
            let anti = d
                .h_coeff(i, p)
                .mul(&d.e_op(j, qn))
                .add(&d.e_op(j, qn).mul(&d.h_coeff(i, p)));
            lhs.sub(&anti.scale(&q(alpha_dot(g, i, j))))
        }
        Instance::HF(i, j, p, qn) => {
            let lhs = d
                .h_coeff(i, p + 1)
                .commutator(&d.f_op(j, qn))
                .sub(&d.h_coeff(i, p).commutator(&d.f_op(j, qn + 1)));
            let anti = d
                .h_coeff(i, p)
                .mul(&d.f_op(j, qn))
                .add(&d.f_op(j, qn).mul(&d.h_coeff(i, p)));
            lhs.add(&anti.scale(&q(alpha_dot(g, i, j))))
        }
        Instance::HFVerbatim(i, j, p, qn) => {
            let lhs = d
                .h_coeff(i, p + 1)
                .commutator(&d.f_op(j, qn))
                .sub(&d.h_coeff(i, p).commutator(&d.f_op(j, qn + 1)));
            // as printed: H_i^{(p)} F_j^{(q)} + F_j^{(p)} H_i^{(q)}
            let rhs = d
                .h_coeff(i, p)
                .mul(&d.f_op(j, qn))
                .add(&d.f_op(j, p.max(1) as usize).mul(&d.h_coeff(i, qn as i64)));
            lhs.add(&rhs.scale(&q(alpha_dot(g, i, j))))
        }
        Instance::Preserves(..) => unreachable!("handled separately"),
    }
}

/// Verify all shifted-Yangian relations (plus the H-current relations) for
/// orders p, q <= q_max, by applying both sides to every element of the
/// symmetric basis of the given degree. Exact equality throughout.
pub fn verify_relations(d: &YangianData, q_max: usize, degree: u32) -> Vec<RelationReport> {
    let verts = d.graph.vertices().to_vec();
    let mut instances: Vec<Instance> = Vec::new();
    for &i in &verts {
        for &j in &verts {
            for p in 1..=q_max {
                for qq in 1..=q_max {
                    instances.push(Instance::AA(i, j, p, qq));
                    instances.push(Instance::EF(i, j, p, qq));
                    instances.push(Instance::EE(i, j, p, qq));
                    instances.push(Instance::FF(i, j, p, qq));
                    if i != j {
                        instances.push(Instance::FFVerbatim(i, j, p, qq));
                    }
                    if i != j && !d.graph.adjacent(i, j) {
                        instances.push(Instance::SerreE1(i, j, p, qq));
                        instances.push(Instance::SerreF1(i, j, p, qq));
                    }
                }
            }
            for p in 0..=q_max {
                for qq in 1..=q_max {
                    instances.push(Instance::AE(i, j, p, qq));
                    instances.push(Instance::AF(i, j, p, qq));
                }
            }
            if i != j && d.graph.adjacent(i, j) {
                for p1 in 1..=q_max {
                    for p2 in p1..=q_max {
                        for qq in 1..=q_max {
                            instances.push(Instance::SerreE2(i, j, p1, p2, qq));
                            instances.push(Instance::SerreF2(i, j, p1, p2, qq));
                        }
                    }
                }
            }
            let t0 = -d.h_lead(i);
            for p in t0..=(q_max as i64) {
                for qq in 1..=q_max {
                    instances.push(Instance::HE(i, j, p, qq));
                    instances.push(Instance::HF(i, j, p, qq));
                    if i != j && p >= 1 {
                        instances.push(Instance::HFVerbatim(i, j, p, qq));
                    }
                }
            }
        }
        for r in 1..=q_max {
            instances.push(Instance::Preserves("E", i, r));
            instances.push(Instance::Preserves("F", i, r));
            instances.push(Instance::Preserves("A", i, r));
        }
    }
    let basis = d.symmetric_basis(degree);
    let groups = d.groups();
    exec::map_vec(instances, |inst| {
        let informational = matches!(inst, Instance::FFVerbatim(..) | Instance::HFVerbatim(..));
        let rep = match &inst {
            Instance::Preserves(kind, i, r) => {
                let op = match *kind {
                    "E" => d.e_op(*i, *r),
                    "F" => d.f_op(*i, *r),
                    _ => d.a_op(*i, *r),
                };
                let bad = basis.iter().find_map(|f| {
                    let img = op.apply_poly(f);
                    match img.to_poly() {
                        None => Some(format!("image of {f} is not polynomial")),
                        Some(p) => {
                            if crate::poly::is_symmetric(&p, &groups) {
                                None
                            } else {
                                Some(format!("image of {f} is not symmetric"))
                            }
                        }
                    }
                });
                match bad {
                    None => RelationReport::pass(inst.name(), inst.describe()),
                    Some(w) => RelationReport::fail(inst.name(), inst.describe(), w),
                }
            }
            _ => {
                let def = defect(d, &inst);
                let bad = basis.iter().find_map(|f| {
                    let img = def.apply_poly(f);
                    if img.is_zero() {
                        None
                    } else {
                        Some(format!("defect acts on {f} as {img}"))
                    }
                });
                match bad {
                    None => RelationReport::pass(inst.name(), inst.describe()),
                    Some(w) => RelationReport::fail(inst.name(), inst.describe(), w),
                }
            }
        };
        if informational {
            rep.informational()
        } else {
            rep
        }
    })
}

pub fn relations_hold(d: &YangianData, q_max: usize, degree: u32) -> bool {
    all_required_pass(&verify_relations(d, q_max, degree))
}

/// The two operator forms of the auxiliary lemma:
/// sum_r c(z_r)/prod_{s != r}(z_r - z_s) β_r  versus  ∂_{m-1}...∂_1 c(z_1) β_1,
/// compared on symmetric polynomials, with polynomiality of the output.
#[allow(clippy::needless_range_loop)]
pub fn verify_lemma_filgklo(c: &Poly, t_var: Var, m: usize, degree: u32) -> Vec<RelationReport> {
    let vars: Vec<Var> = (1..=m).map(Var::pos).collect();
    let c_at = |arg: &Poly| -> Poly {
        let mut map = BTreeMap::new();
        map.insert(t_var, arg.clone());
        c.subst(&map)
    };
    // operator (1)
    let mut op1 = DiffOp::zero();
    for r in 0..m {
        let zr = Poly::var(vars[r]);
        let mut den = Poly::one();
        for s in 0..m {
            if s != r {
                den = den.mul(&zr.sub(&Poly::var(vars[s])));
            }
        }
        op1 = op1.add(&DiffOp::term(
            RatFunc::new(c_at(&zr), den),
            ShiftOp::single(vars[r], 2),
        ));
    }
    // operator (2): rightmost factor first
    let apply_op2 = |f: &Poly| -> RatFunc {
        let shifted = f.shift_vars(&[(vars[0], 2i64)].into_iter().collect());
        let mut acc = RatFunc::from_poly(c_at(&Poly::var(vars[0])).mul(&shifted));
        for r in 1..m {
            // divided difference in the rational field
            let swapped = acc.swap_vars(vars[r - 1], vars[r]);
            let den = RatFunc::from_poly(Poly::var(vars[r]).sub(&Poly::var(vars[r - 1])));
            acc = swapped.sub(&acc).div(&den);
        }
        acc
    };
    let basis = symmetric_basis(std::slice::from_ref(&vars), degree);
    let mut out = Vec::new();
    for f in &basis {
        let lhs = op1.apply_poly(f);
        let rhs = apply_op2(f);
        let instance = format!("m={m} c={c} f={f}");
        if lhs != rhs {
            out.push(RelationReport::fail(
                "filgklo-equality",
                instance,
                format!("{lhs} vs {rhs}"),
            ));
            continue;
        }
        match lhs.to_poly() {
            Some(_) => out.push(RelationReport::pass("filgklo-equality", instance)),
            None => out.push(RelationReport::fail(
                "filgklo-polynomiality",
                instance,
                format!("output {lhs} is not polynomial"),
            )),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::failures;

    fn a1_odd() -> DynkinGraph {
        DynkinGraph::path(1, 1)
    }

    /// A_1, lambda = varpi, m = 1, with a symbolic parameter r.
    fn minimal() -> YangianData {
        let g = a1_odd();
        let r = ParamSet::from_entries([(1, vec![1])]);
        YangianData::new(&g, &r, &[(1, 1)])
            .unwrap()
            .with_symbolic_params(1, 1)
    }

    #[test]
    fn a_op_minimal() {
        let d = minimal();
        // A^{(1)} is multiplication by -z
        let f = Poly::var(Var::z(1, 1));
        let got = d.a_op(1, 1).apply_poly(&f);
        assert_eq!(got, RatFunc::from_poly(f.neg().mul(&f)));
        assert!(d.a_op(1, 2).is_zero());
        assert!(d.a_op(1, 5).is_zero());
    }

    #[test]
    fn e_and_f_minimal() {
        let d = minimal();
        let z = Var::z(1, 1);
        let r = Poly::var(Var::Param(0));
        // E^{(1)} = -β^{-1}
        let f = Poly::var(z).pow(2);
        let got = d.e_op(1, 1).apply_poly(&f);
        let expected = RatFunc::from_poly(Poly::var_plus(z, -2).pow(2).neg());
        assert_eq!(got, expected);
        // F^{(1)} = (z + 2 - r) β
        let got = d.f_op(1, 1).apply_poly(&f);
        let expected = RatFunc::from_poly(
            Poly::var_plus(z, 2)
                .sub(&r)
                .mul(&Poly::var_plus(z, 2).pow(2)),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn h_series_minimal_matches_oracle() {
        // H(u) = (u - r)/((u - z)(u - z - 2)) = u^{-1} + (2z + 2 - r) u^{-2} + ...
        let d = minimal();
        let z = Poly::var(Var::z(1, 1));
        let r = Poly::var(Var::Param(0));
        assert_eq!(d.h_lead(1), -1);
        assert!(d.h_coeff(1, 0).is_zero());
        let probe = Poly::one();
        assert_eq!(d.h_coeff(1, 1).apply_poly(&probe), RatFunc::one());
        let h2 = d.h_coeff(1, 2).apply_poly(&probe);
        let expected = z.scale(&q(2)).add(&Poly::int(2)).sub(&r);
        assert_eq!(h2, RatFunc::from_poly(expected));
        // independent oracle for the u^{-3} coefficient:
        // sum_{a+b+c=2} z^a (z+2)^b (-r)^{[c=1]} ... computed via explicit
        // geometric expansion of 1/(u-z), 1/(u-z-2) multiplied by (u - r):
        // coeff of u^{-3} = s_3 - r s_2 with s_k = sum_{a+b=k-1... }
        // s_k := sum_{a+b=k} z^a (z+2)^b
        let s = |k: u32| -> Poly {
            let mut acc = Poly::zero();
            for a in 0..=k {
                acc = acc.add(&z.pow(a).mul(&z.add(&Poly::int(2)).pow(k - a)));
            }
            acc
        };
        let expected3 = s(2).sub(&r.mul(&s(1)));
        assert_eq!(
            d.h_coeff(1, 3).apply_poly(&probe),
            RatFunc::from_poly(expected3)
        );
    }

    #[test]
    fn ef_hand_checks_symbolic() {
        let d = minimal();
        // [E^{(1)}, F^{(1)}] f = 2 f
        let f = Poly::var(Var::z(1, 1)).pow(3);
        let got = d.e_op(1, 1).commutator(&d.f_op(1, 1)).apply_poly(&f);
        assert_eq!(got, RatFunc::from_poly(f.scale(&q(2))));
        // [E^{(1)}, F^{(2)}] = 2 H^{(2)} = 2(2z + 2 - r) id
        let got = d.e_op(1, 1).commutator(&d.f_op(1, 2)).apply_poly(&f);
        let z = Poly::var(Var::z(1, 1));
        let r = Poly::var(Var::Param(0));
        let h2 = z.scale(&q(2)).add(&Poly::int(2)).sub(&r);
        assert_eq!(got, RatFunc::from_poly(h2.mul(&f).scale(&q(2))));
    }

    #[test]
    fn minimal_relation_suite_passes() {
        let g = a1_odd();
        let r = ParamSet::from_entries([(1, vec![3])]);
        let d = YangianData::new(&g, &r, &[(1, 1)]).unwrap();
        let reports = verify_relations(&d, 3, 3);
        assert!(failures(&reports).is_empty(), "{:?}", failures(&reports));
    }

    #[test]
    fn lemma_filgklo_cases() {
        let t = Var::Param(7);
        // m = 1: both operators equal c(z) β, trivially
        let c = Poly::var(t).pow(2).add(&Poly::int(1));
        assert!(failures(&verify_lemma_filgklo(&c, t, 1, 3)).is_empty());
        // m = 2, c = 1
        assert!(failures(&verify_lemma_filgklo(&Poly::one(), t, 2, 4)).is_empty());
        // m = 3, c = t^2
        assert!(failures(&verify_lemma_filgklo(&Poly::var(t).pow(2), t, 3, 4)).is_empty());
    }
}
