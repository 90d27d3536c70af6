//! Monomials in the variables `Y_{i,s}^{±1}`.
//!
//! All spectral parameters live on the single lattice `q^Z`: the variable
//! `Y_{i,q^s}` is stored under the key `(i, s)`. Factors are kept sorted by
//! `(i, s)`, which is also the canonical order used for iteration and
//! printing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{parse_err, Error, Result};
use crate::root_data::LieType;

/// The variable `Y_{node, shift}` (also used as the index of `A_{node, shift}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YVar {
    pub node: u32,
    pub shift: i32,
}

impl YVar {
    pub fn new(node: usize, shift: i32) -> YVar {
        YVar {
            node: node as u32,
            shift,
        }
    }

    pub fn node(&self) -> usize {
        self.node as usize
    }
}

/// Sparse exponents `v_{i,s}` of a monomial in the `A_{i,s}^{-1}`.
pub type AVector = BTreeMap<YVar, i64>;

type Factors = SmallVec<[(YVar, i32); 8]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YMonomial {
    factors: Factors,
}

impl YMonomial {
    pub fn one() -> YMonomial {
        YMonomial::default()
    }

    /// `Y_{i,s}^e`.
    pub fn var(i: usize, s: i32, e: i32) -> YMonomial {
        YMonomial::from_factors([(YVar::new(i, s), e)])
    }

    pub fn from_factors<I: IntoIterator<Item = (YVar, i32)>>(it: I) -> YMonomial {
        let mut v: Factors = it.into_iter().collect();
        v.sort_by_key(|&(k, _)| k);
        let mut factors = Factors::new();
        for (k, e) in v {
            match factors.last_mut() {
                Some(last) if last.0 == k => last.1 += e,
                _ => factors.push((k, e)),
            }
        }
        factors.retain(|&mut (_, e)| e != 0);
        YMonomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(YVar, i32)] {
        &self.factors
    }

    /// `u_{i,s}(m)`.
    pub fn exponent(&self, i: usize, s: i32) -> i32 {
        let key = YVar::new(i, s);
        self.factors
            .binary_search_by_key(&key, |&(k, _)| k)
            .map(|p| self.factors[p].1)
            .unwrap_or(0)
    }

    fn combine(&self, other: &YMonomial, sign: i32) -> YMonomial {
        let a = &self.factors;
        let b = &other.factors;
        let mut out = Factors::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, sign * b[j].1));
                j += 1;
            } else {
                let e = a[i].1 + sign * b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        YMonomial { factors: out }
    }

    pub fn mul(&self, other: &YMonomial) -> YMonomial {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &YMonomial) -> YMonomial {
        self.combine(other, -1)
    }

    pub fn inv(&self) -> YMonomial {
        YMonomial {
            factors: self.factors.iter().map(|&(k, e)| (k, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i32) -> YMonomial {
        if n == 0 {
            return YMonomial::one();
        }
        YMonomial {
            factors: self.factors.iter().map(|&(k, e)| (k, e * n)).collect(),
        }
    }

    /// Adds `ds` to every spectral exponent.
    pub fn shifted(&self, ds: i32) -> YMonomial {
        YMonomial {
            factors: self
                .factors
                .iter()
                .map(|&(k, e)| (YVar::new(k.node(), k.shift + ds), e))
                .collect(),
        }
    }

    pub fn max_shift(&self) -> Option<i32> {
        self.factors.iter().map(|(k, _)| k.shift).max()
    }

    pub fn min_shift(&self) -> Option<i32> {
        self.factors.iter().map(|(k, _)| k.shift).min()
    }

    pub fn is_i_dominant(&self, i: usize) -> bool {
        self.factors
            .iter()
            .all(|&(k, e)| k.node() != i || e > 0)
    }

    pub fn is_l_dominant(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e > 0)
    }

    /// `r(m)`: the largest spectral exponent, absent for `m = 1`.
    pub fn r(&self) -> Option<i32> {
        self.max_shift()
    }

    pub fn is_right_negative(&self) -> bool {
        match self.r() {
            None => false,
            Some(r) => self
                .factors
                .iter()
                .filter(|(k, _)| k.shift == r)
                .all(|&(_, e)| e <= 0),
        }
    }

    /// Sum of all exponents at node `i`.
    pub fn node_degree(&self, i: usize) -> i64 {
        self.factors
            .iter()
            .filter(|(k, _)| k.node() == i)
            .map(|&(_, e)| e as i64)
            .sum()
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (n, &(k, e)) in self.factors.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y[{},{}]", k.node, k.shift)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for YMonomial {
    type Err = Error;

    /// Space-separated factors `Y[i,s]` or `Y[i,s]^e`, or `1`. Repeated
    /// variables are multiplied together.
    fn from_str(s: &str) -> Result<YMonomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(YMonomial::one());
        }
        let bad = |tok: &str| parse_err(0, format!("invalid monomial factor '{tok}'"));
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            let rest = tok.strip_prefix("Y[").ok_or_else(|| bad(tok))?;
            let close = rest.find(']').ok_or_else(|| bad(tok))?;
            let (inner, tail) = rest.split_at(close);
            let tail = &tail[1..];
            let (i, sh) = inner.split_once(',').ok_or_else(|| bad(tok))?;
            let i: usize = i.trim().parse().map_err(|_| bad(tok))?;
            let sh: i32 = sh.trim().parse().map_err(|_| bad(tok))?;
            let e: i32 = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .ok_or_else(|| bad(tok))?
                    .parse()
                    .map_err(|_| bad(tok))?
            };
            if i == 0 || e == 0 {
                return Err(bad(tok));
            }
            out.push((YVar::new(i, sh), e));
        }
        if out.is_empty() {
            return Err(bad(s));
        }
        Ok(YMonomial::from_factors(out))
    }
}

/// `A_{i,s} = Y_{i,s-1} Y_{i,s+1} ∏_{j≠i} Y_{j,s}^{a_{ij}}`.
pub fn a_monomial(lt: &LieType, i: usize, s: i32) -> YMonomial {
    let mut f = vec![(YVar::new(i, s - 1), 1), (YVar::new(i, s + 1), 1)];
    for &j in lt.neighbors(i) {
        f.push((YVar::new(j, s), -1));
    }
    YMonomial::from_factors(f)
}

/// `∏ A_{i,s}^{-v_{i,s}}`.
pub fn a_inverse_product(lt: &LieType, v: &AVector) -> YMonomial {
    let mut m = YMonomial::one();
    for (k, &n) in v {
        m = m.div(&a_monomial(lt, k.node(), k.shift).pow(n as i32));
    }
    m
}

/// Total A-degree `Σ v_{i,s}`.
pub fn a_degree(v: &AVector) -> i64 {
    v.values().sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialProfile {
    pub r: Option<i32>,
    pub right_negative: bool,
    /// Indexed by node - 1.
    pub i_dominant: Vec<bool>,
    pub l_dominant: bool,
}

pub fn monomial_profile(lt: &LieType, m: &YMonomial) -> MonomialProfile {
    MonomialProfile {
        r: m.r(),
        right_negative: m.is_right_negative(),
        i_dominant: lt.nodes().map(|i| m.is_i_dominant(i)).collect(),
        l_dominant: m.is_l_dominant(),
    }
}

/// Solves `m = m_ref ∏ A_{i,s}^{-v_{i,s}}` with all `v_{i,s} >= 0`.
///
/// Eliminates upward in `s`: the lowest remaining factor `Y_{i,s}` of
/// `m_ref / m` can only be produced by the bottom factor of `A_{i,s+1}`.
pub fn v_factorization(lt: &LieType, m: &YMonomial, m_ref: &YMonomial) -> Result<AVector> {
    let not_cmp = || Error::NotComparable(m.to_string(), m_ref.to_string());
    // keyed by (shift, node) so that iteration runs upward in s
    let mut w: BTreeMap<(i32, u32), i64> = BTreeMap::new();
    for &(k, e) in m_ref.div(m).factors() {
        w.insert((k.shift, k.node), e as i64);
    }
    let top = match w.keys().map(|&(s, _)| s).max() {
        None => return Ok(AVector::new()),
        Some(t) => t,
    };
    let mut v = AVector::new();
    while let Some((&(s, i), &c)) = w.iter().next() {
        if c < 0 || s >= top {
            return Err(not_cmp());
        }
        let node = i as usize;
        v.insert(YVar::new(node, s + 1), c);
        let mut bump = |key: (i32, u32), delta: i64| {
            let e = w.entry(key).or_insert(0);
            *e += delta;
            if *e == 0 {
                w.remove(&key);
            }
        };
        bump((s, i), -c);
        bump((s + 2, i), -c);
        for &j in lt.neighbors(node) {
            bump((s + 1, j as u32), c);
        }
    }
    Ok(v)
}

/// `ũ_{i,s}(m)` for all nodes and all `s <= s_max`; only nonzero values are
/// returned. Values below the support of `m` vanish.
pub fn tilde_u(lt: &LieType, m: &YMonomial, s_max: i32) -> AVector {
    let mut out = AVector::new();
    let s0 = match m.min_shift() {
        None => return out,
        Some(s) => s,
    };
    if s_max <= s0 {
        return out;
    }
    let n = lt.rank();
    let len = (s_max - s0 + 1) as usize;
    // vals[i][k] = ũ_{i+1, s0 + k}
    let mut vals = vec![vec![0i64; len]; n];
    for k in 0..len - 1 {
        let s = s0 + k as i32;
        for i in 1..=n {
            let below = if k >= 1 { vals[i - 1][k - 1] } else { 0 };
            let mut x = m.exponent(i, s) as i64 - below;
            for &j in lt.neighbors(i) {
                x += vals[j - 1][k];
            }
            vals[i - 1][k + 1] = x;
        }
    }
    for (i, row) in vals.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            if x != 0 {
                out.insert(YVar::new(i + 1, s0 + k as i32), x);
            }
        }
    }
    out
}

fn v_at(v: &AVector, i: usize, s: i32) -> i64 {
    v.get(&YVar::new(i, s)).copied().unwrap_or(0)
}

/// `d` from precomputed v-vectors:
/// `Σ_{i,s} v_{i,s+1}(m¹) u_{i,s}(m²) + u_{i,s+1}(m_{P¹}) v_{i,s}(m²)`.
pub fn pairing_d_parts(v1: &AVector, mp1: &YMonomial, m2: &YMonomial, v2: &AVector) -> i64 {
    let mut d = 0i64;
    for (k, &x) in v1 {
        d += x * m2.exponent(k.node(), k.shift - 1) as i64;
    }
    for (k, &x) in v2 {
        d += x * mp1.exponent(k.node(), k.shift + 1) as i64;
    }
    d
}

/// `d(m¹, m_{P¹}; m², m_{P²})`.
pub fn pairing_d(
    lt: &LieType,
    m1: &YMonomial,
    mp1: &YMonomial,
    m2: &YMonomial,
    mp2: &YMonomial,
) -> Result<i64> {
    let v1 = v_factorization(lt, m1, mp1)?;
    let v2 = v_factorization(lt, m2, mp2)?;
    Ok(pairing_d_parts(&v1, mp1, m2, &v2))
}

/// The second expression for `d`:
/// `Σ_{i,s} u_{i,s}(m¹) v_{i,s-1}(m²) + v_{i,s}(m¹) u_{i,s-1}(m_{P²})`.
///
/// The last factor must be taken at `m_{P²}`; with `m_{P¹}` the two
/// expressions differ by `Σ v_{i,s+1}(m¹) (u_{i,s}(m_{P²}) - u_{i,s}(m_{P¹}))`.
pub fn pairing_d_alt(
    lt: &LieType,
    m1: &YMonomial,
    mp1: &YMonomial,
    m2: &YMonomial,
    mp2: &YMonomial,
) -> Result<i64> {
    let v1 = v_factorization(lt, m1, mp1)?;
    let v2 = v_factorization(lt, m2, mp2)?;
    let mut d = 0i64;
    for &(k, e) in m1.factors() {
        d += e as i64 * v_at(&v2, k.node(), k.shift - 1);
    }
    for (k, &x) in &v1 {
        d += x * mp2.exponent(k.node(), k.shift - 1) as i64;
    }
    Ok(d)
}

/// `d̃(m¹, m²) = -Σ_{i,s} u_{i,s+1}(m¹) ũ_{i,s}(m²)`.
pub fn d_tilde(lt: &LieType, m1: &YMonomial, m2: &YMonomial) -> i64 {
    let s_max = match m1.max_shift() {
        None => return 0,
        Some(s) => s - 1,
    };
    let tu = tilde_u(lt, m2, s_max);
    -m1.factors()
        .iter()
        .map(|&(k, e)| e as i64 * v_at(&tu, k.node(), k.shift - 1))
        .sum::<i64>()
}

/// `ε(m¹, m²) = d̃(m¹, m²) - d̃(m², m¹)`.
pub fn epsilon(lt: &LieType, m1: &YMonomial, m2: &YMonomial) -> i64 {
    d_tilde(lt, m1, m2) - d_tilde(lt, m2, m1)
}

/// Precomputed values of `ũ` on single variables, making `ε` a cheap
/// bilinear form. Valid for monomial pairs whose combined spectral support
/// spans at most `span`.
#[derive(Debug, Clone)]
pub struct EpsilonForm {
    span: i32,
    // table[j-1][i-1][δ] = ũ_{i,δ}(Y_{j,0})
    table: Vec<Vec<Vec<i64>>>,
}

impl EpsilonForm {
    pub fn new(lt: &LieType, span: i32) -> EpsilonForm {
        let span = span.max(1);
        let n = lt.rank();
        let mut table = vec![vec![vec![0i64; span as usize + 2]; n]; n];
        for j in 1..=n {
            let tu = tilde_u(lt, &YMonomial::var(j, 0, 1), span + 1);
            for (k, &x) in &tu {
                table[j - 1][k.node() - 1][k.shift as usize] = x;
            }
        }
        EpsilonForm { span, table }
    }

    /// Form large enough for any pair drawn from monomials supported in
    /// `[lo, hi]`.
    pub fn for_range(lt: &LieType, lo: i32, hi: i32) -> EpsilonForm {
        EpsilonForm::new(lt, hi - lo + 2)
    }

    fn g(&self, j: usize, i: usize, delta: i32) -> i64 {
        if delta <= 0 {
            return 0;
        }
        assert!(delta <= self.span + 1, "EpsilonForm span exceeded");
        self.table[j - 1][i - 1][delta as usize]
    }

    pub fn epsilon(&self, m1: &YMonomial, m2: &YMonomial) -> i64 {
        let mut acc = 0i64;
        for &(a, e1) in m1.factors() {
            for &(b, e2) in m2.factors() {
                let x = -self.g(b.node(), a.node(), a.shift - 1 - b.shift)
                    + self.g(a.node(), b.node(), b.shift - 1 - a.shift);
                acc += (e1 as i64) * (e2 as i64) * x;
            }
        }
        acc
    }
}

/// Drinfeld polynomial `P_i(u) = ∏_s (1 - q^s u)`, stored as per-node sorted
/// lists of root exponents `s`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DrinfeldPoly {
    roots: BTreeMap<usize, Vec<i32>>,
}

impl DrinfeldPoly {
    pub fn empty() -> DrinfeldPoly {
        DrinfeldPoly::default()
    }

    pub fn from_roots<I: IntoIterator<Item = (usize, i32)>>(it: I) -> DrinfeldPoly {
        let mut roots: BTreeMap<usize, Vec<i32>> = BTreeMap::new();
        for (i, s) in it {
            roots.entry(i).or_default().push(s);
        }
        for v in roots.values_mut() {
            v.sort_unstable();
        }
        DrinfeldPoly { roots }
    }

    pub fn fundamental(i: usize, s: i32) -> DrinfeldPoly {
        DrinfeldPoly::from_roots([(i, s)])
    }

    /// `P^{(i)}_{k,s}`: roots `s, s+2, ..., s+2k-2` at node `i`.
    pub fn kr(i: usize, k: usize, s: i32) -> DrinfeldPoly {
        DrinfeldPoly::from_roots((0..k).map(|t| (i, s + 2 * t as i32)))
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.roots.values().map(Vec::len).sum()
    }

    pub fn roots_at(&self, i: usize) -> &[i32] {
        self.roots.get(&i).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All roots as `(node, s)`, node-major.
    pub fn roots(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.roots
            .iter()
            .flat_map(|(&i, v)| v.iter().map(move |&s| (i, s)))
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.roots.keys().copied()
    }

    /// Fundamental factors sorted by nondecreasing `s`, ties by node.
    pub fn fundamental_factors(&self) -> Vec<(usize, i32)> {
        let mut v: Vec<(usize, i32)> = self.roots().collect();
        v.sort_by_key(|&(i, s)| (s, i));
        v
    }

    pub fn product(&self, other: &DrinfeldPoly) -> DrinfeldPoly {
        DrinfeldPoly::from_roots(self.roots().chain(other.roots()))
    }

    pub fn shifted(&self, ds: i32) -> DrinfeldPoly {
        DrinfeldPoly::from_roots(self.roots().map(|(i, s)| (i, s + ds)))
    }

    /// `m_P = ∏ Y_{i,s}` over the roots.
    pub fn monomial(&self) -> YMonomial {
        YMonomial::from_factors(self.roots().map(|(i, s)| (YVar::new(i, s), 1)))
    }

    pub fn from_dominant(m: &YMonomial) -> Result<DrinfeldPoly> {
        if !m.is_l_dominant() {
            return Err(Error::DomainError(format!("{m} is not l-dominant")));
        }
        Ok(DrinfeldPoly::from_roots(m.factors().iter().flat_map(|&(k, e)| {
            std::iter::repeat_n((k.node(), k.shift), e as usize)
        })))
    }

    /// Parses lines `P i: s1 s2 ...`; blank input is the empty polynomial.
    pub fn parse_lines(text: &str) -> Result<DrinfeldPoly> {
        let mut roots = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            roots.extend(parse_p_line(line).map_err(|e| match e {
                Error::Parse { msg, .. } => parse_err(n + 1, msg),
                other => other,
            })?);
        }
        Ok(DrinfeldPoly::from_roots(roots))
    }
}

pub(crate) fn parse_p_line(line: &str) -> Result<Vec<(usize, i32)>> {
    let bad = || parse_err(0, format!("invalid Drinfeld line '{line}'"));
    let rest = line.strip_prefix("P").ok_or_else(bad)?;
    let (i, ss) = rest.split_once(':').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    if i == 0 {
        return Err(bad());
    }
    ss.split_whitespace()
        .map(|x| x.parse::<i32>().map(|s| (i, s)).map_err(|_| bad()))
        .collect()
}

impl fmt::Display for DrinfeldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (i, v)) in self.roots.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "P {i}:")?;
            for s in v {
                write!(f, " {s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DrinfeldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("P{}");
        }
        f.write_str("P{")?;
        for (n, (i, v)) in self.roots.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{i}:{v:?}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lt(s: &str) -> LieType {
        LieType::parse(s).unwrap()
    }

    fn mono(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    fn avec(entries: &[((usize, i32), i64)]) -> AVector {
        entries
            .iter()
            .map(|&((i, s), x)| (YVar::new(i, s), x))
            .collect()
    }

    /// Elimination from the top: the highest factor `Y_{i,s}` of
    /// `m_ref / m` comes from the top factor of `A_{i,s-1}`.
    fn v_top_down(lt: &LieType, m: &YMonomial, m_ref: &YMonomial) -> Option<AVector> {
        let mut w: BTreeMap<(i32, u32), i64> = m_ref
            .div(m)
            .factors()
            .iter()
            .map(|&(k, e)| ((k.shift, k.node), e as i64))
            .collect();
        let bottom = w.keys().map(|&(s, _)| s).min()?;
        let mut v = AVector::new();
        while let Some((&(s, i), &c)) = w.iter().next_back() {
            if c < 0 || s <= bottom {
                return None;
            }
            v.insert(YVar::new(i as usize, s - 1), c);
            let a = a_monomial(lt, i as usize, s - 1);
            for &(k, e) in a.factors() {
                let key = (k.shift, k.node);
                let x = w.entry(key).or_insert(0);
                *x -= c * e as i64;
                if *x == 0 {
                    w.remove(&key);
                }
            }
        }
        Some(v)
    }

    #[test]
    fn a_monomial_examples() {
        assert_eq!(a_monomial(&lt("A2"), 1, 1), mono("Y[1,0] Y[1,2] Y[2,1]^-1"));
        assert_eq!(a_monomial(&lt("A1"), 1, 5), mono("Y[1,4] Y[1,6]"));
        assert_eq!(
            a_monomial(&lt("D4"), 2, 0),
            mono("Y[2,-1] Y[2,1] Y[1,0]^-1 Y[3,0]^-1 Y[4,0]^-1")
        );
    }

    #[test]
    fn monomial_text() {
        let m = mono("Y[2,1] Y[1,2]^-1");
        assert_eq!(m.to_string(), "Y[1,2]^-1 Y[2,1]");
        assert_eq!(mono("1"), YMonomial::one());
        assert_eq!(YMonomial::one().to_string(), "1");
        assert_eq!(mono("Y[1,0] Y[1,0]"), YMonomial::var(1, 0, 2));
        assert!("Y[1,0]^0".parse::<YMonomial>().is_err());
        assert!("Y[0,0]".parse::<YMonomial>().is_err());
        assert!("X[1,0]".parse::<YMonomial>().is_err());
        assert!("".parse::<YMonomial>().is_err());
    }

    #[test]
    fn profile_examples() {
        let a2 = lt("A2");
        let p = monomial_profile(&a2, &mono("Y[2,3]^-1"));
        assert_eq!(p.r, Some(3));
        assert!(p.right_negative);
        assert!(!p.l_dominant);
        let p = monomial_profile(&a2, &YMonomial::one());
        assert_eq!(p.r, None);
        assert!(!p.right_negative);
        assert!(p.l_dominant);
        let p = monomial_profile(&a2, &mono("Y[1,2]^-1 Y[2,1]"));
        assert_eq!(p.r, Some(2));
        assert!(p.right_negative);
        assert_eq!(p.i_dominant, vec![false, true]);
    }

    #[test]
    fn v_factorization_examples() {
        let a2 = lt("A2");
        let m = mono("Y[1,0]");
        assert!(v_factorization(&a2, &m, &m).unwrap().is_empty());
        assert_eq!(
            v_factorization(&a2, &mono("Y[1,2]^-1 Y[2,1]"), &m).unwrap(),
            avec(&[((1, 1), 1)])
        );
        assert_eq!(
            v_factorization(&a2, &mono("Y[2,3]^-1"), &m).unwrap(),
            avec(&[((1, 1), 1), ((2, 2), 1)])
        );
        assert!(matches!(
            v_factorization(&a2, &mono("Y[1,0]"), &mono("Y[2,0]")),
            Err(Error::NotComparable(..))
        ));
        // the reverse direction is not ≤ either
        assert!(v_factorization(&a2, &m, &mono("Y[2,3]^-1")).is_err());
    }

    #[test]
    fn tilde_u_examples() {
        assert_eq!(
            tilde_u(&lt("A1"), &mono("Y[1,0]"), 5),
            avec(&[((1, 1), 1), ((1, 3), -1), ((1, 5), 1)])
        );
        assert_eq!(
            tilde_u(&lt("A2"), &mono("Y[1,2]"), 5),
            avec(&[((1, 3), 1), ((2, 4), 1)])
        );
        assert!(tilde_u(&lt("A2"), &YMonomial::one(), 5).is_empty());
    }

    #[test]
    fn pairing_examples() {
        let a1 = lt("A1");
        let y0 = mono("Y[1,0]");
        let y2 = mono("Y[1,2]");
        let y2i = mono("Y[1,2]^-1");
        assert_eq!(pairing_d(&a1, &y0, &y0, &y2, &y2).unwrap(), 0);
        assert_eq!(pairing_d(&a1, &y2i, &y0, &y2, &y2).unwrap(), 0);
        assert_eq!(pairing_d(&a1, &y2, &y2, &y2i, &y0).unwrap(), 1);
        assert_eq!(pairing_d_alt(&a1, &y2i, &y0, &y2, &y2).unwrap(), 0);
        assert_eq!(pairing_d_alt(&a1, &y2, &y2, &y2i, &y0).unwrap(), 1);
        assert!(pairing_d(&a1, &y0, &y2, &y0, &y0).is_err());
        assert_eq!(epsilon(&a1, &y0, &y2), 1);
        assert_eq!(epsilon(&lt("A2"), &y0, &y2), 1);
        assert_eq!(epsilon(&a1, &y0, &y0), 0);
    }

    #[test]
    fn epsilon_form_matches_direct() {
        for name in ["A1", "A2", "A3", "D4"] {
            let l = lt(name);
            let form = EpsilonForm::new(&l, 14);
            let n = l.rank();
            for i in 1..=n {
                for j in 1..=n {
                    for s in -3..=6 {
                        let m1 = YMonomial::var(i, 0, 1);
                        let m2 = YMonomial::var(j, s, 1);
                        assert_eq!(form.epsilon(&m1, &m2), epsilon(&l, &m1, &m2));
                    }
                }
            }
        }
    }

    #[test]
    fn drinfeld_poly_basics() {
        let p = DrinfeldPoly::kr(1, 2, 0);
        assert_eq!(p.monomial(), mono("Y[1,0] Y[1,2]"));
        assert_eq!(p.to_string(), "P 1: 0 2");
        assert_eq!(DrinfeldPoly::from_dominant(&p.monomial()).unwrap(), p);
        let q = DrinfeldPoly::from_roots([(2, 1), (1, 4), (1, 0)]);
        assert_eq!(q.fundamental_factors(), vec![(1, 0), (2, 1), (1, 4)]);
        assert_eq!(DrinfeldPoly::parse_lines(&q.to_string()).unwrap(), q);
        assert!(DrinfeldPoly::from_dominant(&mono("Y[1,0]^-1")).is_err());
        assert_eq!(
            DrinfeldPoly::from_dominant(&mono("Y[1,2]^2")).unwrap().roots_at(1),
            &[2, 2]
        );
    }

    fn arb_monomial(rank: usize) -> impl Strategy<Value = YMonomial> {
        proptest::collection::vec((1..=rank, -4i32..8, -2i32..3), 0..6).prop_map(|v| {
            YMonomial::from_factors(v.into_iter().map(|(i, s, e)| (YVar::new(i, s), e)))
        })
    }

    fn arb_a_vector(rank: usize) -> impl Strategy<Value = AVector> {
        proptest::collection::vec((1..=rank, -2i32..7, 1i64..3), 0..5).prop_map(|v| {
            let mut out = AVector::new();
            for (i, s, x) in v {
                *out.entry(YVar::new(i, s)).or_insert(0) += x;
            }
            out
        })
    }

    proptest! {
        #[test]
        fn right_negative_closed_under_products(a in arb_monomial(3), b in arb_monomial(3)) {
            if a.is_right_negative() && b.is_right_negative() {
                prop_assert!(a.mul(&b).is_right_negative());
            }
            if a.is_l_dominant() {
                prop_assert!(!a.is_right_negative());
            }
        }

        #[test]
        fn v_factorization_recovers_and_is_unique(
            m_ref in arb_monomial(3), v in arb_a_vector(3)
        ) {
            let l = lt("A3");
            let m = m_ref.mul(&a_inverse_product(&l, &v));
            let got = v_factorization(&l, &m, &m_ref).unwrap();
            prop_assert_eq!(&got, &v);
            prop_assert_eq!(v_top_down(&l, &m, &m_ref).unwrap_or_default(), v);
        }

        #[test]
        fn epsilon_antisymmetric(a in arb_monomial(3), b in arb_monomial(3)) {
            let l = lt("A3");
            prop_assert_eq!(epsilon(&l, &a, &b), -epsilon(&l, &b, &a));
            let form = EpsilonForm::new(&l, 16);
            prop_assert_eq!(form.epsilon(&a, &b), epsilon(&l, &a, &b));
        }

        #[test]
        fn pairing_forms_agree_and_twist_identity(
            p1 in arb_monomial(3), v1 in arb_a_vector(3),
            p2 in arb_monomial(3), v2 in arb_a_vector(3),
        ) {
            let l = lt("A3");
            let m1 = p1.mul(&a_inverse_product(&l, &v1));
            let m2 = p2.mul(&a_inverse_product(&l, &v2));
            let d12 = pairing_d(&l, &m1, &p1, &m2, &p2).unwrap();
            let d21 = pairing_d(&l, &m2, &p2, &m1, &p1).unwrap();
            prop_assert_eq!(pairing_d_alt(&l, &m1, &p1, &m2, &p2).unwrap(), d12);
            prop_assert_eq!(pairing_d_alt(&l, &m2, &p2, &m1, &p1).unwrap(), d21);
            prop_assert_eq!(epsilon(&l, &m1, &m2), d12 - d21 + epsilon(&l, &p1, &p2));
        }

        #[test]
        fn tilde_u_satisfies_recursion(m in arb_monomial(4), extra in 0i32..6) {
            let l = lt("D4");
            let s_max = m.max_shift().unwrap_or(0) + extra;
            let tu = tilde_u(&l, &m, s_max);
            let lo = m.min_shift().unwrap_or(0) - 2;
            for i in l.nodes() {
                for s in lo..s_max {
                    let mut rhs = v_at(&tu, i, s - 1) + v_at(&tu, i, s + 1);
                    for &j in l.neighbors(i) {
                        rhs -= v_at(&tu, j, s);
                    }
                    prop_assert_eq!(m.exponent(i, s) as i64, rhs, "i={} s={}", i, s);
                }
            }
        }

        #[test]
        fn monomial_text_round_trip(m in arb_monomial(4)) {
            prop_assert_eq!(m.to_string().parse::<YMonomial>().unwrap(), m);
        }
    }
}
