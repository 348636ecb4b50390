//! Truncated polynomial Fock space with odd-moded oscillators, an independent model of the
//! Heisenberg algebra at q = -1.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::heisenberg::{normal_form, specialize, GenKind, HeisenGen};
use crate::report::{Record, Report};
use crate::wreath::CartanData;

type Vector = BTreeMap<usize, BigRational>;

/// Monomials in x_{i,m} (node i, odd m) of weighted degree at most D, where x_{i,m} weighs m half-units.
#[derive(Clone, Debug)]
pub struct FockSpace {
    cartan: CartanData,
    truncation: u32,
    vars: Vec<(usize, u32)>,
    basis: Vec<Vec<u8>>,
    weights: Vec<u32>,
    index: HashMap<Vec<u8>, usize>,
}

impl FockSpace {
    pub fn new(cartan: &CartanData, truncation: u32) -> Self {
        let mut vars = Vec::new();
        for i in 1..=cartan.nodes() {
            for m in (1..=truncation).step_by(2) {
                vars.push((i, m));
            }
        }
        let mut basis = Vec::new();
        let mut cur = vec![0u8; vars.len()];
        enumerate(&vars, 0, truncation, &mut cur, &mut basis);
        basis.sort_by_key(|m| (weight_of(&vars, m), m.clone()));
        let weights = basis.iter().map(|m| weight_of(&vars, m)).collect();
        let index = basis.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        FockSpace { cartan: cartan.clone(), truncation, vars, basis, weights, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    /// Weighted degree of a basis monomial, in half-units.
    pub fn weight(&self, k: usize) -> u32 {
        self.weights[k]
    }

    /// Indices of basis monomials with weight at most w.
    pub fn window(&self, w: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).take_while(move |&k| self.weights[k] <= w)
    }

    fn var_index(&self, node: usize, m: u32) -> Option<usize> {
        self.vars.iter().position(|&v| v == (node, m))
    }

    fn describe(&self, k: usize) -> String {
        let parts: Vec<String> = self.basis[k]
            .iter()
            .zip(&self.vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, (i, m))| if *e == 1 { format!("x{i}_{m}") } else { format!("x{i}_{m}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

fn weight_of(vars: &[(usize, u32)], mono: &[u8]) -> u32 {
    mono.iter().zip(vars).map(|(e, (_, m))| *e as u32 * m).sum()
}

fn enumerate(vars: &[(usize, u32)], at: usize, budget: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if at == vars.len() {
        out.push(cur.clone());
        return;
    }
    let m = vars[at].1;
    let mut e = 0u32;
    while e * m <= budget {
        cur[at] = e as u8;
        enumerate(vars, at + 1, budget - e * m, cur, out);
        e += 1;
    }
    cur[at] = 0;
}

/// Exact sparse matrix on the monomial basis; `creation` bounds how far it raises weight.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOperator {
    cols: Vec<Vec<(usize, BigRational)>>,
    creation: u32,
}

impl FockOperator {
    pub fn identity(space: &FockSpace) -> Self {
        FockOperator { cols: (0..space.dim()).map(|k| vec![(k, BigRational::one())]).collect(), creation: 0 }
    }

    pub fn zero(space: &FockSpace) -> Self {
        FockOperator { cols: vec![Vec::new(); space.dim()], creation: 0 }
    }

    /// Upper bound on the weight this operator adds; results are exact on inputs of weight up to D minus it.
    pub fn creation(&self) -> u32 {
        self.creation
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (j, c) in v {
            for (i, a) in &self.cols[*j] {
                let e = out.entry(*i).or_insert_with(BigRational::zero);
                *e += a * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// self after other.
    pub fn compose(&self, other: &Self) -> Self {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let v: Vector = col.iter().cloned().collect();
                self.apply(&v).into_iter().collect()
            })
            .collect();
        FockOperator { cols, creation: self.creation + other.creation }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut v: Vector = a.iter().cloned().collect();
                for (i, c) in b {
                    *v.entry(*i).or_insert_with(BigRational::zero) += c;
                }
                v.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        FockOperator { cols, creation: self.creation.max(other.creation) }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|col| if s.is_zero() { Vec::new() } else { col.iter().map(|(i, c)| (*i, c * s)).collect() })
            .collect();
        FockOperator { cols, creation: self.creation }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Column j as a sparse vector.
    pub fn column(&self, j: usize) -> Vector {
        self.cols[j].iter().cloned().collect()
    }

    /// First basis monomial of weight at most `window` on which the two operators differ.
    pub fn first_difference(&self, other: &Self, space: &FockSpace, window: u32) -> Option<usize> {
        space.window(window).find(|&k| self.column(k) != other.column(k))
    }
}

/// h_i(m/2) for odd nonzero m: multiplication by x_{i,|m|} when m < 0, the derivation
/// x_{j,m} -> (m/2) a_ij when m > 0.
pub fn oscillator(space: &FockSpace, i: usize, m: i64) -> Result<FockOperator> {
    if m % 2 == 0 {
        return Err(Error::EvenMode(m));
    }
    space.cartan.check_node(i)?;
    let am = m.unsigned_abs() as u32;
    let mut cols = Vec::with_capacity(space.dim());
    for (k, mono) in space.basis.iter().enumerate() {
        let mut col = Vec::new();
        if m < 0 {
            if space.weights[k] + am <= space.truncation {
                let v = space.var_index(i, am).expect("variable exists below truncation");
                let mut t = mono.clone();
                t[v] += 1;
                col.push((space.index[&t], BigRational::one()));
            }
        } else {
            for j in 1..=space.cartan.nodes() {
                let a = space.cartan.a(i, j);
                if a == 0 {
                    continue;
                }
                let Some(v) = space.var_index(j, am) else { continue };
                let e = mono[v];
                if e == 0 {
                    continue;
                }
                let mut t = mono.clone();
                t[v] -= 1;
                let c = BigRational::new((e as i64 * a as i64 * m).into(), 2.into());
                col.push((space.index[&t], c));
            }
            col.sort_by_key(|(r, _)| *r);
        }
        cols.push(col);
    }
    Ok(FockOperator { cols, creation: if m < 0 { am } else { 0 } })
}

/// p_i^(k) and q_i^(k) for k = 0..=up_to from the exponential generating series,
/// via k E_k = sum over odd j of 2 H_j E_{k-j}.
pub fn pq_operators(space: &FockSpace, i: usize, up_to: u32) -> Result<(Vec<FockOperator>, Vec<FockOperator>)> {
    if up_to > space.truncation {
        return Err(Error::TruncationTooSmall { truncation: space.truncation, level: up_to });
    }
    let two = BigRational::from_integer(2.into());
    let mut hp = BTreeMap::new();
    let mut hq = BTreeMap::new();
    for j in (1..=up_to as i64).step_by(2) {
        hp.insert(j, oscillator(space, i, -j)?.scale(&-&two));
        hq.insert(j, oscillator(space, i, j)?.scale(&two));
    }
    let build = |h: &BTreeMap<i64, FockOperator>| {
        let mut es = vec![FockOperator::identity(space)];
        for k in 1..=up_to as i64 {
            let mut acc = FockOperator::zero(space);
            for j in (1..=k).step_by(2) {
                acc = acc.add(&h[&j].compose(&es[(k - j) as usize]));
            }
            es.push(acc.scale(&BigRational::new(1.into(), k.into())));
        }
        es
    };
    Ok((build(&hp), build(&hq)))
}

/// All p and q operators for every node, up to a level.
pub struct FockModel {
    pub space: FockSpace,
    p: Vec<Vec<FockOperator>>,
    q: Vec<Vec<FockOperator>>,
}

impl FockModel {
    pub fn new(cartan: &CartanData, truncation: u32, up_to: u32) -> Result<Self> {
        let space = FockSpace::new(cartan, truncation);
        let mut p = Vec::new();
        let mut q = Vec::new();
        for i in 1..=cartan.nodes() {
            let (pi, qi) = pq_operators(&space, i, up_to)?;
            p.push(pi);
            q.push(qi);
        }
        Ok(FockModel { space, p, q })
    }

    pub fn gen(&self, g: HeisenGen) -> &FockOperator {
        match g.kind {
            GenKind::P => &self.p[g.node - 1][g.level as usize],
            GenKind::Q => &self.q[g.node - 1][g.level as usize],
        }
    }

    pub fn p(&self, i: usize, k: u32) -> &FockOperator {
        &self.p[i - 1][k as usize]
    }

    pub fn q(&self, i: usize, k: u32) -> &FockOperator {
        &self.q[i - 1][k as usize]
    }

    /// Applies a word right to left to a vector.
    pub fn apply_word(&self, word: &[HeisenGen], v: &Vector) -> Vector {
        word.iter().rev().fold(v.clone(), |acc, g| self.gen(*g).apply(&acc))
    }
}

fn unit_vector(k: usize) -> Vector {
    std::iter::once((k, BigRational::one())).collect()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Checks the bracket relation of the oscillators on the exact window.
pub fn verify_brackets(cartan: &CartanData, truncation: u32) -> Result<Report> {
    let start = Instant::now();
    let space = FockSpace::new(cartan, truncation);
    let mut rec = Record::new("fock-bracket").with_param("D", truncation);
    let r = cartan.nodes();
    let modes: Vec<i64> = (1..=truncation as i64).step_by(2).flat_map(|m| [m, -m]).collect();
    for i in 1..=r {
        for j in 1..=r {
            for &m in &modes {
                for &n in &modes {
                    let a = oscillator(&space, i, m)?;
                    let b = oscillator(&space, j, n)?;
                    let lhs = a.compose(&b).sub(&b.compose(&a));
                    let expect = if m == -n {
                        BigRational::new((m * cartan.a(i, j) as i64).into(), 2.into())
                    } else {
                        BigRational::zero()
                    };
                    let rhs = FockOperator::identity(&space).scale(&expect);
                    let window = truncation.saturating_sub(m.unsigned_abs().max(n.unsigned_abs()) as u32);
                    let diff = lhs.first_difference(&rhs, &space, window);
                    rec.check(diff.is_none(), || {
                        format!("[h{i}({m}/2), h{j}({n}/2)] wrong on {}", space.describe(diff.unwrap_or(0)))
                    });
                }
            }
        }
    }
    Ok(Report::single(rec.timed(start)))
}

/// The five defining relations at q = -1 as operator identities, levels up to kmax.
pub fn verify_presentation(kmax: u32, cartan: &CartanData, truncation: u32) -> Result<Report> {
    if 2 * kmax > truncation {
        return Err(Error::EmptyWindow);
    }
    let model = FockModel::new(cartan, truncation, kmax)?;
    let space = &model.space;
    let r = cartan.nodes();
    let mut report = Report::new();
    let mut recs: Vec<Record> =
        (1..=5).map(|k| Record::new(format!("fock-rel{k}")).with_param("D", truncation)).collect();
    let start = Instant::now();
    for i in 1..=r {
        for j in 1..=r {
            for n in 1..=kmax {
                for m in 1..=kmax {
                    // relation 1: creators commute
                    let lhs = model.p(i, n).compose(model.p(j, m));
                    let rhs = model.p(j, m).compose(model.p(i, n));
                    let d = lhs.first_difference(&rhs, space, truncation - n - m);
                    recs[0]
                        .check(d.is_none(), || format!("p{i}^({n}) p{j}^({m}) on {}", space.describe(d.unwrap_or(0))));
                    // relation 2: annihilators commute
                    let lhs = model.q(i, n).compose(model.q(j, m));
                    let rhs = model.q(j, m).compose(model.q(i, n));
                    let d = lhs.first_difference(&rhs, space, truncation);
                    recs[1]
                        .check(d.is_none(), || format!("q{i}^({n}) q{j}^({m}) on {}", space.describe(d.unwrap_or(0))));
                    // relations 3-5: q_i^(n) p_j^(m)
                    let lhs = model.q(i, n).compose(model.p(j, m));
                    let mut rhs = model.p(j, m).compose(model.q(i, n));
                    let slot = match cartan.a(i, j) {
                        2 => 2,
                        -1 => 3,
                        _ => 4,
                    };
                    if slot != 4 {
                        for k in 1..=n.min(m) {
                            let c = if slot == 2 { rat(if k % 2 == 0 { 4 } else { -4 } * k as i64) } else { rat(2) };
                            rhs = rhs.add(&model.p(j, m - k).compose(model.q(i, n - k)).scale(&c));
                        }
                    }
                    let d = lhs.first_difference(&rhs, space, truncation - m);
                    recs[slot]
                        .check(d.is_none(), || format!("q{i}^({n}) p{j}^({m}) on {}", space.describe(d.unwrap_or(0))));
                }
            }
        }
    }
    for rec in recs {
        report.push(rec.timed(start));
    }
    Ok(report)
}

/// The four closed forms p^(1) = -2h(-1/2), q^(1) = 2h(1/2), p^(2) = 2h(-1/2)^2, q^(2) = 2h(1/2)^2.
pub fn verify_low_levels(cartan: &CartanData, truncation: u32) -> Result<Report> {
    let start = Instant::now();
    let model = FockModel::new(cartan, truncation, 2)?;
    let space = &model.space;
    let mut rec = Record::new("fock-low-levels").with_param("D", truncation);
    for i in 1..=cartan.nodes() {
        let hm = oscillator(space, i, -1)?;
        let hp = oscillator(space, i, 1)?;
        let cases = [
            ("p^(1) = -2h(-1/2)", model.p(i, 1).clone(), hm.scale(&rat(-2))),
            ("q^(1) = 2h(1/2)", model.q(i, 1).clone(), hp.scale(&rat(2))),
            ("p^(2) = 2h(-1/2)^2", model.p(i, 2).clone(), hm.compose(&hm).scale(&rat(2))),
            ("q^(2) = 2h(1/2)^2", model.q(i, 2).clone(), hp.compose(&hp).scale(&rat(2))),
        ];
        for (name, lhs, rhs) in cases {
            let window = truncation - lhs.creation().max(rhs.creation());
            let d = lhs.first_difference(&rhs, space, window);
            rec.check(d.is_none(), || format!("node {i}: {name} fails on {}", space.describe(d.unwrap_or(0))));
        }
    }
    Ok(Report::single(rec.timed(start)))
}

/// Every word of length up to `max_len` in generators of level 1..=max_level.
pub fn all_words(nodes: usize, max_len: usize, max_level: u32) -> Vec<Vec<HeisenGen>> {
    let mut gens = Vec::new();
    for kind in [GenKind::P, GenKind::Q] {
        for node in 1..=nodes {
            for level in 1..=max_level {
                gens.push(HeisenGen { kind, node, level });
            }
        }
    }
    let mut out = Vec::new();
    let mut layer: Vec<Vec<HeisenGen>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                gens.iter().map(move |g| {
                    let mut n = w.clone();
                    n.push(*g);
                    n
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Compares specialized normal forms, evaluated as operators, with direct operator products of every word.
pub fn verify_engine_agreement(cartan: &CartanData, truncation: u32, max_len: usize, max_level: u32) -> Result<Report> {
    let start = Instant::now();
    let model = FockModel::new(cartan, truncation, max_level)?;
    let words = all_words(cartan.nodes(), max_len, max_level);
    let results: Vec<(u64, Option<String>)> = words
        .par_iter()
        .map(|w| {
            let creation: u32 = w.iter().filter(|g| g.kind == GenKind::P).map(|g| g.level).sum();
            let annihilation: u32 = w.iter().filter(|g| g.kind == GenKind::Q).map(|g| g.level).sum();
            if creation > truncation {
                return (0, None);
            }
            let window = (truncation - creation).min(annihilation);
            let nf = match normal_form(w, cartan) {
                Ok(nf) => specialize(&nf),
                Err(e) => return (1, Some(format!("normal form failed: {e}"))),
            };
            let mut checked = 0;
            for k in model.space.window(window) {
                let v = unit_vector(k);
                let direct = model.apply_word(w, &v);
                let mut via = Vector::new();
                for (mono, c) in nf.terms() {
                    let scalar = c.coeff(0).and_then(|s| s.as_rational().cloned()).unwrap_or_else(BigRational::zero);
                    for (i, a) in model.apply_word(&mono.word(), &v) {
                        *via.entry(i).or_insert_with(BigRational::zero) += a * &scalar;
                    }
                }
                via.retain(|_, c| !c.is_zero());
                checked += 1;
                if via != direct {
                    let word: Vec<String> = w.iter().map(ToString::to_string).collect();
                    return (checked, Some(format!("{} on {}", word.join(" "), model.space.describe(k))));
                }
            }
            (checked, None)
        })
        .collect();
    let mut rec = Record::new("fock-engine")
        .with_param("D", truncation)
        .with_param("max_len", max_len)
        .with_param("max_level", max_level);
    for (checked, failure) in results {
        rec.absorb(checked, failure);
    }
    Ok(Report::single(rec.timed(start)))
}
