//! Verifiers for the character identities among KR modules.
//!
//! Each verifier builds both sides exactly and returns a [`VerifyReport`];
//! `pass` holds iff the two sides agree term by term.
//!
//! # Fermionic truncation
//!
//! In the fermionic sum a configuration `N` contributes only at root degree
//! `Σ_{i,k} k N_k^{(i)}`. Truncating at degree `D` therefore means
//! enumerating exactly the `N` with `Σ k N_k^{(i)} <= D`, which forces
//! `k <= D` for every nonzero entry. The left side is a product of power
//! series in the `e^{-α_i}` with nonnegative exponents, so truncating each
//! factor and every partial product at degree `D` loses nothing below `D`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::Engine;
use crate::error::{parse_err, Error, Result};
use crate::qtpoly::{
    normalized_in_a, q_product, q_sum, restrict_to_g, specialize_t1, twisted_tensor, GCharacter,
    QCharacter, QtCharacter,
};
use crate::root_data::{positive_roots, weight_to_root_coords, LieType, RootVector};
use crate::tcoeff::{gen_binomial, Convention, TPoly};
use crate::ymono::{DrinfeldPoly, YMonomial, YVar};

/// Multiplicities `ν_k^{(i)}`, keyed by `(i, k)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NuConfig {
    nu: BTreeMap<(usize, usize), u32>,
}

impl NuConfig {
    pub fn new() -> NuConfig {
        NuConfig::default()
    }

    pub fn single(i: usize, k: usize) -> NuConfig {
        let mut nu = NuConfig::new();
        nu.set(i, k, 1);
        nu
    }

    pub fn set(&mut self, i: usize, k: usize, v: u32) {
        if v == 0 {
            self.nu.remove(&(i, k));
        } else {
            self.nu.insert((i, k), v);
        }
    }

    pub fn get(&self, i: usize, k: usize) -> u32 {
        self.nu.get(&(i, k)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.nu.iter().map(|(&a, &b)| (a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.nu.is_empty()
    }

    /// Parses one `i:k=v` fragment and adds it.
    pub fn add_fragment(&mut self, frag: &str) -> Result<()> {
        let bad = || parse_err(0, format!("expected i:k=v, got '{frag}'"));
        let (ik, v) = frag.split_once('=').ok_or_else(bad)?;
        let (i, k) = ik.split_once(':').ok_or_else(bad)?;
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        let v: u32 = v.trim().parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(Error::DomainError(format!("k must be positive in '{frag}'")));
        }
        let cur = self.get(i, k);
        self.set(i, k, cur + v);
        Ok(())
    }
}

impl fmt::Display for NuConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nu.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .nu
            .iter()
            .map(|((i, k), v)| format!("{i}:{k}={v}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub claim: String,
    pub params: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    /// Mismatching terms as `key: lhs <a> rhs <b>`.
    pub diff: Vec<String>,
}

impl VerifyReport {
    fn compare<K: Ord + fmt::Display, V: PartialEq + fmt::Display>(
        claim: &str,
        params: String,
        lhs: &BTreeMap<K, V>,
        rhs: &BTreeMap<K, V>,
        zero: V,
    ) -> VerifyReport {
        let mut diff = Vec::new();
        for (k, a) in lhs {
            let b = rhs.get(k).unwrap_or(&zero);
            if a != b {
                diff.push(format!("{k}: lhs {a} rhs {b}"));
            }
        }
        for (k, b) in rhs {
            if !lhs.contains_key(k) && *b != zero {
                diff.push(format!("{k}: lhs {zero} rhs {b}"));
            }
        }
        VerifyReport {
            claim: claim.to_string(),
            params,
            pass: diff.is_empty(),
            lhs: serialize_map(lhs),
            rhs: serialize_map(rhs),
            diff,
        }
    }

    fn flag(claim: &str, params: String, problems: Vec<String>) -> VerifyReport {
        VerifyReport {
            claim: claim.to_string(),
            params,
            pass: problems.is_empty(),
            lhs: String::new(),
            rhs: String::new(),
            diff: problems,
        }
    }

    pub fn status(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CLAIM {} PARAMS {} STATUS {}",
            self.claim,
            self.params,
            self.status()
        )?;
        for d in &self.diff {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

fn serialize_map<K: fmt::Display, V: fmt::Display>(m: &BTreeMap<K, V>) -> String {
    m.iter()
        .map(|(k, v)| format!("{v} : {k}"))
        .collect::<Vec<_>>()
        .join("; ")
}

fn params(lt: &LieType, i: usize, k: usize) -> String {
    format!("type={lt} i={i} k={k}")
}

fn check_node(lt: &LieType, i: usize) -> Result<()> {
    if lt.is_node(i) {
        Ok(())
    } else {
        Err(Error::DomainError(format!("node {i} out of range for {lt}")))
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::DomainError("k must be positive".into()))
    } else {
        Ok(())
    }
}

/// `χ_q(W_{k,0}) χ_q(W_{k,2}) = χ_q(W_{k+1,0}) χ_q(W_{k-1,2}) + ∏_j χ_q(W^{(j)}_{k,1})`.
pub fn verify_t_system_t1(engine: &Engine, i: usize, k: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let kr = |j: usize, kk: usize, s: i32| -> Result<QCharacter> {
        Ok(specialize_t1(&engine.kr_char_direct(j, kk, s)?))
    };
    let lhs = q_product(&kr(i, k, 0)?, &kr(i, k, 2)?);
    let first = q_product(&kr(i, k + 1, 0)?, &kr(i, k - 1, 2)?);
    let mut second = specialize_t1(&QtCharacter::unit(lt.clone()));
    for &j in lt.neighbors(i) {
        second = q_product(&second, &kr(j, k, 1)?);
    }
    let rhs = q_sum(&first, &second);
    Ok(VerifyReport::compare(
        "t-system-t1",
        params(lt, i, k),
        &lhs,
        &rhs,
        0,
    ))
}

/// `t^{-N} ∗_j χ(W^{(j)}_{k,1})` over the neighbours of `i` in ascending
/// order, `N = Σ_{a<b} ε(P^{(j_a)}, P^{(j_b)})`.
fn neighbour_product(engine: &Engine, i: usize, k: usize) -> Result<QtCharacter> {
    let lt = engine.lie_type();
    let mut acc = QtCharacter::unit(lt.clone());
    for &j in lt.neighbors(i) {
        acc = twisted_tensor(&acc, &engine.kr_char_direct(j, k, 1)?);
    }
    Ok(acc)
}

/// The t-analog:
/// `t^{-ε} χ(W_{k,0}) ∗ χ(W_{k,2}) = t^{-ε} χ(W_{k+1,0}) ∗ χ(W_{k-1,2}) + t^{-1-N} ∗_j χ(W^{(j)}_{k,1})`.
pub fn verify_t_system_t(engine: &Engine, i: usize, k: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let kr = |kk: usize, s: i32| engine.kr_char_direct(i, kk, s);
    let lhs = twisted_tensor(&kr(k, 0)?, &kr(k, 2)?);
    let first = twisted_tensor(&kr(k + 1, 0)?, &kr(k - 1, 2)?);
    let second = neighbour_product(engine, i, k)?.t_shift(-1);
    let rhs = first.add(&second);
    Ok(VerifyReport::compare(
        "t-system-t",
        params(lt, i, k),
        lhs.terms(),
        rhs.terms(),
        TPoly::zero(),
    ))
}

/// `P^{(i)}_{k-1,0} ∏_j P^{(j)}_{1,2k-1}`.
pub fn kr_tensor_second_poly(lt: &LieType, i: usize, k: usize) -> DrinfeldPoly {
    let mut p = DrinfeldPoly::kr(i, k - 1, 0);
    for &j in lt.neighbors(i) {
        p = p.product(&DrinfeldPoly::fundamental(j, 2 * k as i32 - 1));
    }
    p
}

/// `t^{-ε} χ(W_{k,0}) ∗ χ(W^{(i)}_{1,2k}) = χ(W_{k+1,0}) + t^{-1} χ(L(P^{(i)}_{k-1,0} ∏_j P^{(j)}_{1,2k-1}))`,
/// the second simple computed by triangular decomposition.
pub fn verify_kr_tensor_decomposition(
    engine: &Engine,
    i: usize,
    k: usize,
) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let lhs = twisted_tensor(
        &engine.kr_char_direct(i, k, 0)?,
        &engine.fundamental_char(i, 2 * k as i32)?,
    );
    let simple = engine.simple_char(&kr_tensor_second_poly(lt, i, k))?;
    let rhs = engine.kr_char_direct(i, k + 1, 0)?.add(&simple.t_shift(-1));
    Ok(VerifyReport::compare(
        "kr-tensor-decomposition",
        params(lt, i, k),
        lhs.terms(),
        rhs.terms(),
        TPoly::zero(),
    ))
}

fn a_vector_key(v: &BTreeMap<YVar, i64>) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(k, x)| format!("A[{},{}]^{x}", k.node, k.shift))
        .collect::<Vec<_>>()
        .join(" ")
}

fn truncated_at_one(chi: &QtCharacter, d: usize) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for (v, c) in normalized_in_a(chi, d as i64)? {
        let x = c.eval_at_one();
        if x != 0 {
            out.insert(a_vector_key(&v), x);
        }
    }
    Ok(out)
}

/// Stabilization of the A-degree `<= D` part of the normalized KR
/// characters at `t = 1`. The strings are aligned at their top end: for
/// each `k` in `D..k_max`, `W^{(i)}_{k,2}` is compared with
/// `W^{(i)}_{k+1,0}`, whose Drinfeld polynomial has the same last root.
pub fn verify_convergence(engine: &Engine, i: usize, k_max: usize, d: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    if d > k_max {
        return Err(Error::DomainError(format!("need k_max >= D, got {k_max} < {d}")));
    }
    let mut diff = Vec::new();
    let mut last = (BTreeMap::new(), BTreeMap::new());
    for k in d..k_max {
        let a = truncated_at_one(&engine.kr_char_direct(i, k, 2)?, d)?;
        let b = truncated_at_one(&engine.kr_char_direct(i, k + 1, 0)?, d)?;
        let rep = VerifyReport::compare("", String::new(), &a, &b, 0);
        diff.extend(rep.diff.into_iter().map(|x| format!("k={k}: {x}")));
        last = (a, b);
    }
    Ok(VerifyReport {
        claim: "convergence".into(),
        params: format!("type={lt} i={i} k_max={k_max} D={d}"),
        pass: diff.is_empty(),
        lhs: serialize_map(&last.0),
        rhs: serialize_map(&last.1),
        diff,
    })
}

/// `Res W^{(i)}_{k,0}` as a finite-type character.
pub fn q_character_q(engine: &Engine, i: usize, k: usize) -> Result<GCharacter> {
    Ok(restrict_to_g(&engine.kr_char_direct(i, k, 0)?))
}

/// `Q_k^2 = Q_{k+1} Q_{k-1} + ∏_j Q^{(j)}_k`.
pub fn verify_q_system(engine: &Engine, i: usize, k: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let q = q_character_q(engine, i, k)?;
    let lhs = q.mul(&q);
    let mut prod = GCharacter::one(lt.clone());
    for &j in lt.neighbors(i) {
        prod = prod.mul(&q_character_q(engine, j, k)?);
    }
    let rhs = q_character_q(engine, i, k + 1)?
        .mul(&q_character_q(engine, i, k - 1)?)
        .add(&prod);
    Ok(VerifyReport::compare(
        "q-system",
        params(lt, i, k),
        lhs.terms(),
        rhs.terms(),
        0,
    ))
}

/// Restriction of both sides of the `t = 1` T-system equals the Q-system
/// identity term by term.
pub fn verify_restriction_compatibility(
    engine: &Engine,
    i: usize,
    k: usize,
) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let res = |j: usize, kk: usize, s: i32| -> Result<GCharacter> {
        Ok(restrict_to_g(&engine.kr_char_direct(j, kk, s)?))
    };
    let lhs = res(i, k, 0)?.mul(&res(i, k, 2)?);
    let mut prod = GCharacter::one(lt.clone());
    for &j in lt.neighbors(i) {
        prod = prod.mul(&res(j, k, 1)?);
    }
    let rhs = res(i, k + 1, 0)?.mul(&res(i, k - 1, 2)?).add(&prod);
    let q = verify_q_system(engine, i, k)?;
    let mut rep = VerifyReport::compare("restriction-compatibility", params(lt, i, k), lhs.terms(), rhs.terms(), 0);
    if rep.lhs != q.lhs || rep.rhs != q.rhs {
        rep.pass = false;
        rep.diff.push("restricted sides differ from the Q-system sides".into());
    }
    Ok(rep)
}

/// A power series in the `e^{-α_i}`, keyed by root coordinates.
pub type RootSeries = BTreeMap<RootVector, BigInt>;

fn series_mul(a: &RootSeries, b: &RootSeries, d: i64) -> RootSeries {
    let mut out: RootSeries = BTreeMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            let z = x.add(y);
            if z.height() <= d {
                *out.entry(z).or_insert_with(BigInt::zero) += cx * cy;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn min_k(a: usize, b: usize) -> i64 {
    a.min(b) as i64
}

/// `P_k^{(i)}(ν, N) = Σ_l ν_l^{(i)} min(k,l) - Σ_j a_{ij} Σ_l N_l^{(j)} min(k,l)`.
pub fn vacancy(lt: &LieType, nu: &NuConfig, n: &BTreeMap<(usize, usize), i64>, i: usize, k: usize) -> i64 {
    let mut p: i64 = nu
        .entries()
        .filter(|&((j, _), _)| j == i)
        .map(|((_, l), v)| v as i64 * min_k(k, l))
        .sum();
    for (&(j, l), &x) in n {
        p -= lt.cartan(i, j) * x * min_k(k, l);
    }
    p
}

/// Enumerates all `N` with `Σ k N_k^{(i)} <= D`.
fn configurations(rank: usize, d: usize) -> Vec<BTreeMap<(usize, usize), i64>> {
    let slots: Vec<(usize, usize)> = (1..=rank)
        .flat_map(|i| (1..=d).map(move |k| (i, k)))
        .collect();
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    fn rec(
        slots: &[(usize, usize)],
        budget: usize,
        cur: &mut BTreeMap<(usize, usize), i64>,
        out: &mut Vec<BTreeMap<(usize, usize), i64>>,
    ) {
        let Some((&(i, k), rest)) = slots.split_first() else {
            out.push(cur.clone());
            return;
        };
        for x in 0..=budget / k {
            if x > 0 {
                cur.insert((i, k), x as i64);
            }
            rec(rest, budget - x * k, cur, out);
        }
        cur.remove(&(i, k));
    }
    rec(&slots, d, &mut cur, &mut out);
    out
}

/// Fermionic sum truncated at root degree `D`.
pub fn fermionic_rhs(lt: &LieType, nu: &NuConfig, d: usize, conv: Convention) -> RootSeries {
    let mut out: RootSeries = BTreeMap::new();
    for n in configurations(lt.rank(), d) {
        let mut term = BigInt::one();
        let mut at = vec![0i64; lt.rank()];
        for (&(i, k), &x) in &n {
            let p = vacancy(lt, nu, &n, i, k);
            term *= gen_binomial(p + x, x, conv);
            at[i - 1] += k as i64 * x;
        }
        if !term.is_zero() {
            *out.entry(RootVector(at)).or_insert_with(BigInt::zero) += term;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Whether every binomial top `P + N` met in the enumeration is nonnegative.
pub fn all_tops_nonnegative(lt: &LieType, nu: &NuConfig, d: usize) -> bool {
    configurations(lt.rank(), d).iter().all(|n| {
        n.iter()
            .all(|(&(i, k), &x)| vacancy(lt, nu, n, i, k) + x >= 0)
    })
}

/// Outcome of evaluating the fermionic sum under both binomial conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionComparison {
    pub agree: bool,
    pub tops_nonnegative: bool,
    pub gamma: RootSeries,
    pub lusztig: RootSeries,
}

pub fn compare_conventions(lt: &LieType, nu: &NuConfig, d: usize) -> ConventionComparison {
    let gamma = fermionic_rhs(lt, nu, d, Convention::Gamma);
    let lusztig = fermionic_rhs(lt, nu, d, Convention::Lusztig);
    ConventionComparison {
        agree: gamma == lusztig,
        tops_nonnegative: all_tops_nonnegative(lt, nu, d),
        gamma,
        lusztig,
    }
}

/// `e^{-kΛ_i} Res W^{(i)}_k` in root coordinates, truncated.
fn normalized_restriction(engine: &Engine, i: usize, k: usize, d: i64) -> Result<RootSeries> {
    let lt = engine.lie_type();
    let top = lt.fundamental_weight(i);
    let top = crate::root_data::Weight(top.0.iter().map(|x| x * k as i64).collect());
    let g = q_character_q(engine, i, k)?;
    let mut out = BTreeMap::new();
    for (w, &c) in g.terms() {
        let r = weight_to_root_coords(lt, &top.sub(w))?;
        if r.0.iter().any(|&x| x < 0) {
            return Err(Error::NotInRootLattice(format!(
                "{w} is not below the highest weight"
            )));
        }
        if r.height() <= d {
            out.insert(r, BigInt::from(c));
        }
    }
    Ok(out)
}

/// `∏ (e^{-kΛ_i} Q_k^{(i)})^{ν_k^{(i)}} ∏_{α>0} (1 - e^{-α})`, truncated.
pub fn fermionic_lhs(engine: &Engine, nu: &NuConfig, d: usize) -> Result<RootSeries> {
    let lt = engine.lie_type();
    let d = d as i64;
    let zero = RootVector(vec![0; lt.rank()]);
    let mut acc: RootSeries = BTreeMap::from([(zero.clone(), BigInt::one())]);
    for ((i, k), v) in nu.entries() {
        check_node(lt, i)?;
        let f = normalized_restriction(engine, i, k, d)?;
        for _ in 0..v {
            acc = series_mul(&acc, &f, d);
        }
    }
    for a in positive_roots(lt) {
        let f = BTreeMap::from([(zero.clone(), BigInt::one()), (a, -BigInt::one())]);
        acc = series_mul(&acc, &f, d);
    }
    Ok(acc)
}

/// Fermionic formula with the `Γ`-convention binomials.
pub fn verify_kr_formula(engine: &Engine, nu: &NuConfig, d: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    let lhs = fermionic_lhs(engine, nu, d)?;
    let rhs = fermionic_rhs(lt, nu, d, Convention::Gamma);
    Ok(VerifyReport::compare(
        "kr-fermionic",
        format!("type={lt} nu={nu} D={d}"),
        &lhs,
        &rhs,
        BigInt::zero(),
    ))
}

/// `∏_{t<s} Y_{i,2t} · ∏_{t=s+1}^{k} Y_{i,2t}^{-1} ∏_j Y_{j,2t-1}`.
pub fn kr_right_negative_form(lt: &LieType, i: usize, k: usize, s: usize) -> YMonomial {
    let mut m = YMonomial::one();
    for t in 0..s {
        m = m.mul(&YMonomial::var(i, 2 * t as i32, 1));
    }
    for t in s + 1..=k {
        m = m.mul(&YMonomial::var(i, 2 * t as i32, -1));
        for &j in lt.neighbors(i) {
            m = m.mul(&YMonomial::var(j, 2 * t as i32 - 1, 1));
        }
    }
    m
}

/// Structure of `χ_{q,t}(W^{(i)}_{k,0})`: the highest monomial is the only
/// one that is not right negative (so the only l-dominant one), and the
/// right-negative monomials with `r <= 2k` are exactly the `k` forms of
/// [`kr_right_negative_form`], each with coefficient 1.
pub fn check_kr_structure(engine: &Engine, i: usize, k: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let chi = engine.kr_char_direct(i, k, 0)?;
    let mut problems = Vec::new();
    let dominant = chi.dominant_monomials();
    if dominant != vec![chi.highest()] {
        problems.push(format!("l-dominant monomials: {dominant:?}"));
    }
    for m in chi.terms().keys() {
        if m != chi.highest() && !m.is_right_negative() {
            problems.push(format!("{m} is neither highest nor right negative"));
        }
    }
    let mut found: BTreeMap<YMonomial, TPoly> = BTreeMap::new();
    for (m, c) in chi.terms() {
        if m.is_right_negative() && m.r().is_some_and(|r| r <= 2 * k as i32) {
            found.insert(m.clone(), c.clone());
        }
    }
    let want: BTreeMap<YMonomial, TPoly> = (0..k)
        .map(|s| (kr_right_negative_form(lt, i, k, s), TPoly::one()))
        .collect();
    let rep = VerifyReport::compare("", String::new(), &found, &want, TPoly::zero());
    problems.extend(rep.diff);
    Ok(VerifyReport::flag("kr-structure", params(lt, i, k), problems))
}

/// `Y_{i,0} Y_{i,2}^2 ⋯ Y_{i,2s-2}^2 Y_{i,2s} ∏_j Y_{j,2s+1} ⋯ Y_{j,2k-1}`.
pub fn semismall_monomial(lt: &LieType, i: usize, k: usize, s: usize) -> YMonomial {
    let mut m = YMonomial::one();
    for t in 0..s {
        m = m
            .mul(&YMonomial::var(i, 2 * t as i32, 1))
            .mul(&YMonomial::var(i, 2 * t as i32 + 2, 1));
    }
    for t in s..k {
        for &j in lt.neighbors(i) {
            m = m.mul(&YMonomial::var(j, 2 * t as i32 + 1, 1));
        }
    }
    m
}

/// In `χ_{q,t}(M(P))`, `P = P^{(i)}_{k,0} P^{(i)}_{k,2}`, the monomials of
/// [`semismall_monomial`] carry `(1+t^2)^{k-s} t^{2(s-k)}`; in `χ_{q,t}(L(P))`
/// they carry 1.
pub fn check_semismall_coefficients(engine: &Engine, i: usize, k: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let p = DrinfeldPoly::kr(i, k, 0).product(&DrinfeldPoly::kr(i, k, 2));
    let std = engine.standard_char(&p)?;
    let simple = engine.simple_char(&p)?;
    let mut problems = Vec::new();
    let base = TPoly::from_terms([(0, 1), (2, 1)]);
    for s in 1..k {
        let m = semismall_monomial(lt, i, k, s);
        let want = base.pow((k - s) as u32).shift(2 * (s as i32 - k as i32));
        let got = std.coeff(&m);
        if got != want {
            problems.push(format!("standard {m}: {got}, expected {want}"));
        }
        let got = simple.coeff(&m);
        if !got.is_one() {
            problems.push(format!("simple {m}: {got}, expected 1"));
        }
    }
    Ok(VerifyReport::flag("semismall-coefficients", params(lt, i, k), problems))
}

/// `t^{-ε} χ(W_{k+1,0}) ∗ χ(W_{k-1,2})` has, besides its highest monomial,
/// only the l-dominant monomials of [`semismall_monomial`], each with
/// coefficient 1.
pub fn check_irreducibility_shadow(engine: &Engine, i: usize, k: usize) -> Result<VerifyReport> {
    let lt = engine.lie_type();
    check_node(lt, i)?;
    check_k(k)?;
    let prod = twisted_tensor(
        &engine.kr_char_direct(i, k + 1, 0)?,
        &engine.kr_char_direct(i, k - 1, 2)?,
    );
    let found: BTreeMap<YMonomial, TPoly> = prod
        .dominant_monomials()
        .into_iter()
        .map(|m| (m.clone(), prod.coeff(m)))
        .collect();
    let mut want: BTreeMap<YMonomial, TPoly> = (1..k)
        .map(|s| (semismall_monomial(lt, i, k, s), TPoly::one()))
        .collect();
    want.insert(prod.highest().clone(), TPoly::one());
    let rep = VerifyReport::compare("", String::new(), &found, &want, TPoly::zero());
    Ok(VerifyReport::flag("irreducibility-shadow", params(lt, i, k), rep.diff))
}

/// Splits a finite-type character into irreducibles by repeatedly removing
/// the character of a highest weight of maximal height. Returns the
/// multiplicities, or the remainder if a negative multiplicity or a
/// non-dominant maximal weight appears.
pub fn decompose_into_irreducibles(
    g: &GCharacter,
) -> std::result::Result<BTreeMap<crate::root_data::Weight, i64>, GCharacter> {
    let lt = g.lie_type().clone();
    let mut rest = g.clone();
    let mut out = BTreeMap::new();
    while !rest.is_empty() {
        let top = rest
            .terms()
            .keys()
            .max_by(|a, b| lt.height(a).cmp(&lt.height(b)).then_with(|| a.cmp(b)))
            .cloned()
            .expect("nonempty");
        let mult = rest.get(&top);
        if !top.is_dominant() || mult < 0 {
            return Err(rest);
        }
        let irr = GCharacter::new(
            lt.clone(),
            crate::root_data::irreducible_character(&lt, &top)
                .into_iter()
                .map(|(w, c)| (w, c * mult)),
        );
        rest = rest.sub(&irr);
        out.insert(top, mult);
    }
    Ok(out)
}
