//! `χ_{q,t}`-valued polynomials and finite-type characters.
//!
//! A [`QtCharacter`] is a finite sum `Σ a_m(t) m` with a designated highest
//! monomial. Two products are provided:
//!
//! * [`multiply_standard`] combines standard-module characters: the inputs
//!   are un-normalized by `t^{d(m,m_P;m,m_P)}`, multiplied with the twist
//!   `t^{2d(m¹,m_{P¹};m²,m_{P²})}`, and renormalized against the product of
//!   the highest monomials. Because `d` is bilinear in `(m, m_P)` this equals
//!   `t^{-ε(P¹,P²)} χ¹ ∗ χ²`.
//! * [`star_product`] is `m¹ ∗ m² = t^{ε(m¹,m²)} m¹ m²`, the character of
//!   a tensor product of arbitrary modules.
//!
//! The text format (`# qtc v1`) is documented on [`write_qtc`].

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::root_data::{LieType, Weight};
use crate::tcoeff::{t_binomial, TPoly};
use crate::ymono::{
    a_monomial, pairing_d_parts, v_factorization, AVector, DrinfeldPoly, EpsilonForm,
    YMonomial, YVar,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtCharacter {
    lie: LieType,
    highest: YMonomial,
    terms: BTreeMap<YMonomial, TPoly>,
}

impl QtCharacter {
    /// Builds a character, dropping zero coefficients.
    pub fn new(
        lie: LieType,
        highest: YMonomial,
        terms: impl IntoIterator<Item = (YMonomial, TPoly)>,
    ) -> QtCharacter {
        let mut map: BTreeMap<YMonomial, TPoly> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_default() += &c;
        }
        map.retain(|_, c| !c.is_zero());
        QtCharacter {
            lie,
            highest,
            terms: map,
        }
    }

    /// The character `{1: 1}` of the trivial module.
    pub fn unit(lie: LieType) -> QtCharacter {
        QtCharacter::new(lie, YMonomial::one(), [(YMonomial::one(), TPoly::one())])
    }

    pub fn lie_type(&self) -> &LieType {
        &self.lie
    }

    pub fn highest(&self) -> &YMonomial {
        &self.highest
    }

    pub fn terms(&self) -> &BTreeMap<YMonomial, TPoly> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &YMonomial) -> TPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Drinfeld polynomial of the (l-dominant) highest monomial.
    pub fn drinfeld(&self) -> Result<DrinfeldPoly> {
        DrinfeldPoly::from_dominant(&self.highest)
    }

    pub fn shifted(&self, ds: i32) -> QtCharacter {
        QtCharacter {
            lie: self.lie.clone(),
            highest: self.highest.shifted(ds),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shifted(ds), c.clone()))
                .collect(),
        }
    }

    /// Multiplies every coefficient by `t^n`.
    pub fn t_shift(&self, n: i32) -> QtCharacter {
        QtCharacter {
            lie: self.lie.clone(),
            highest: self.highest.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.shift(n))).collect(),
        }
    }

    /// Sum; the highest monomial of `self` is kept.
    pub fn add(&self, other: &QtCharacter) -> QtCharacter {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(m.clone()).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        QtCharacter {
            lie: self.lie.clone(),
            highest: self.highest.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &QtCharacter) -> QtCharacter {
        self.add(&other.scale(&TPoly::monomial(-1, 0)))
    }

    pub fn scale(&self, c: &TPoly) -> QtCharacter {
        QtCharacter::new(
            self.lie.clone(),
            self.highest.clone(),
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)),
        )
    }

    /// l-dominant monomials in the support.
    pub fn dominant_monomials(&self) -> Vec<&YMonomial> {
        self.terms.keys().filter(|m| m.is_l_dominant()).collect()
    }

    /// Smallest and largest spectral exponent over the support.
    pub fn shift_range(&self) -> Option<(i32, i32)> {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for m in self.terms.keys().chain(std::iter::once(&self.highest)) {
            if let (Some(a), Some(b)) = (m.min_shift(), m.max_shift()) {
                lo = lo.min(a);
                hi = hi.max(b);
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// `χ̃ = Σ t^{d(m,m_P;m,m_P)} a_m m` relative to the highest monomial.
    pub fn untwisted(&self) -> Result<QtCharacter> {
        self.renormalize(1)
    }

    /// Inverse of [`QtCharacter::untwisted`].
    pub fn normalized(&self) -> Result<QtCharacter> {
        self.renormalize(-1)
    }

    fn renormalize(&self, sign: i32) -> Result<QtCharacter> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = v_factorization(&self.lie, m, &self.highest)?;
            let d = pairing_d_parts(&v, &self.highest, m, &v);
            terms.insert(m.clone(), c.shift(sign * d as i32));
        }
        Ok(QtCharacter {
            lie: self.lie.clone(),
            highest: self.highest.clone(),
            terms,
        })
    }
}

/// `E_i(m) = m ∏_s Σ_r t^{r(u-r)} [u r]_t A_{i,s+1}^{-r}` with `u = u_{i,s}(m)`.
pub fn expand_e_i(lt: &LieType, m: &YMonomial, i: usize) -> Result<QtCharacter> {
    Ok(QtCharacter::new(
        lt.clone(),
        m.clone(),
        e_i_terms(lt, m, i)?.into_iter().map(|(mm, c, _)| (mm, c)),
    ))
}

/// Terms of `E_i(m)` as `(monomial, coefficient, A-degree)`.
pub(crate) fn e_i_terms(
    lt: &LieType,
    m: &YMonomial,
    i: usize,
) -> Result<Vec<(YMonomial, TPoly, u32)>> {
    if !m.is_i_dominant(i) {
        return Err(Error::NotDominant {
            monomial: m.to_string(),
            node: i,
        });
    }
    let mut out = vec![(m.clone(), TPoly::one(), 0u32)];
    for &(k, u) in m.factors() {
        if k.node() != i {
            continue;
        }
        let a_inv = a_monomial(lt, i, k.shift + 1).inv();
        let factor: Vec<(YMonomial, TPoly)> = (0..=u)
            .map(|r| {
                let c = t_binomial(u as i64, r as i64)
                    .expect("0 <= r <= u")
                    .shift(r * (u - r));
                (a_inv.pow(r), c)
            })
            .collect();
        let mut next = Vec::with_capacity(out.len() * factor.len());
        for (mm, c, deg) in &out {
            for (r, (am, fc)) in factor.iter().enumerate() {
                next.push((mm.mul(am), c * fc, deg + r as u32));
            }
        }
        out = next;
    }
    Ok(out)
}

/// Checks the separation condition: no root `a` of `p1` and `b` of `p2`
/// with `a - b >= 2`.
pub fn check_separation(p1: &DrinfeldPoly, p2: &DrinfeldPoly) -> Result<()> {
    let max1 = p1.roots().map(|(_, s)| s).max();
    let min2 = p2.roots().map(|(_, s)| s).min();
    if let (Some(a), Some(b)) = (max1, min2) {
        if a - b >= 2 {
            return Err(Error::SeparationViolation {
                first: a,
                second: b,
            });
        }
    }
    Ok(())
}

struct Prepared<'a> {
    mono: &'a YMonomial,
    coeff: TPoly,
    v: AVector,
}

fn prepare(chi: &QtCharacter) -> Result<Vec<Prepared<'_>>> {
    chi.terms
        .iter()
        .map(|(m, c)| {
            let v = v_factorization(&chi.lie, m, &chi.highest)?;
            let d = pairing_d_parts(&v, &chi.highest, m, &v);
            Ok(Prepared {
                mono: m,
                coeff: c.shift(d as i32),
                v,
            })
        })
        .collect()
}

fn add_vectors(a: &AVector, b: &AVector) -> AVector {
    let mut out = a.clone();
    for (k, &x) in b {
        *out.entry(*k).or_insert(0) += x;
    }
    out
}

/// `χ_{q,t}(M(P¹P²))` from `χ_{q,t}(M(P¹))` and `χ_{q,t}(M(P²))`.
///
/// The Drinfeld polynomials are read off the highest monomials.
pub fn multiply_standard(chi1: &QtCharacter, chi2: &QtCharacter) -> Result<QtCharacter> {
    let p1 = chi1.drinfeld()?;
    let p2 = chi2.drinfeld()?;
    check_separation(&p1, &p2)?;
    let mp1 = &chi1.highest;
    let mp2 = &chi2.highest;
    let mp = mp1.mul(mp2);
    let a = prepare(chi1)?;
    let b = prepare(chi2)?;
    let mut acc: HashMap<YMonomial, TPoly> = HashMap::new();
    for x in &a {
        for y in &b {
            let d12 = pairing_d_parts(&x.v, mp1, y.mono, &y.v);
            let m = x.mono.mul(y.mono);
            let v = add_vectors(&x.v, &y.v);
            let dd = pairing_d_parts(&v, &mp, &m, &v);
            let c = (&x.coeff * &y.coeff).shift((2 * d12 - dd) as i32);
            *acc.entry(m).or_default() += &c;
        }
    }
    Ok(QtCharacter::new(chi1.lie.clone(), mp, acc))
}

/// `χ¹ ∗ χ² = Σ t^{ε(m¹,m²)} a_{m¹} a_{m²} m¹m²`.
pub fn star_product(chi1: &QtCharacter, chi2: &QtCharacter) -> QtCharacter {
    let form = epsilon_form_for(&[chi1, chi2]);
    star_product_with(&form, chi1, chi2)
}

pub(crate) fn epsilon_form_for(chis: &[&QtCharacter]) -> EpsilonForm {
    let mut lo = 0;
    let mut hi = 0;
    for chi in chis {
        if let Some((a, b)) = chi.shift_range() {
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    EpsilonForm::for_range(&chis[0].lie, lo, hi)
}

pub(crate) fn star_product_with(
    form: &EpsilonForm,
    chi1: &QtCharacter,
    chi2: &QtCharacter,
) -> QtCharacter {
    let mut acc: HashMap<YMonomial, TPoly> = HashMap::new();
    for (m1, c1) in &chi1.terms {
        for (m2, c2) in &chi2.terms {
            let e = form.epsilon(m1, m2);
            let c = (c1 * c2).shift(e as i32);
            *acc.entry(m1.mul(m2)).or_default() += &c;
        }
    }
    QtCharacter::new(chi1.lie.clone(), chi1.highest.mul(&chi2.highest), acc)
}

/// `t^{-ε(P¹,P²)} χ¹ ∗ χ²`.
pub fn twisted_tensor(chi1: &QtCharacter, chi2: &QtCharacter) -> QtCharacter {
    let form = epsilon_form_for(&[chi1, chi2]);
    let e = form.epsilon(&chi1.highest, &chi2.highest);
    star_product_with(&form, chi1, chi2).t_shift(-(e as i32))
}

/// Coefficient-wise `t ↦ t^-1`.
pub fn bar_char(chi: &QtCharacter) -> QtCharacter {
    QtCharacter {
        lie: chi.lie.clone(),
        highest: chi.highest.clone(),
        terms: chi.terms.iter().map(|(m, c)| (m.clone(), c.bar())).collect(),
    }
}

/// Integer-valued `χ_q`-type polynomial.
pub type QCharacter = BTreeMap<YMonomial, i64>;

/// Evaluates every coefficient at `t = 1`.
pub fn specialize_t1(chi: &QtCharacter) -> QCharacter {
    chi.terms
        .iter()
        .map(|(m, c)| (m.clone(), c.eval_at_one()))
        .filter(|&(_, c)| c != 0)
        .collect()
}

/// Commutative product of `t = 1` characters.
pub fn q_product(a: &QCharacter, b: &QCharacter) -> QCharacter {
    let mut acc: HashMap<YMonomial, i64> = HashMap::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            *acc.entry(m1.mul(m2)).or_insert(0) += c1 * c2;
        }
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

pub fn q_sum(a: &QCharacter, b: &QCharacter) -> QCharacter {
    let mut out = a.clone();
    for (m, c) in b {
        *out.entry(m.clone()).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Finite-type character `Σ c_λ e^λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCharacter {
    lie: LieType,
    terms: BTreeMap<Weight, i64>,
}

impl GCharacter {
    pub fn new(lie: LieType, terms: impl IntoIterator<Item = (Weight, i64)>) -> GCharacter {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            *map.entry(w).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        GCharacter { lie, terms: map }
    }

    pub fn one(lie: LieType) -> GCharacter {
        let z = lie.zero_weight();
        GCharacter::new(lie, [(z, 1)])
    }

    pub fn lie_type(&self) -> &LieType {
        &self.lie
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn mul(&self, other: &GCharacter) -> GCharacter {
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a.add(b)).or_insert(0) += x * y;
            }
        }
        GCharacter::new(self.lie.clone(), acc)
    }

    pub fn add(&self, other: &GCharacter) -> GCharacter {
        GCharacter::new(
            self.lie.clone(),
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(w, c)| (w.clone(), *c)),
        )
    }

    pub fn sub(&self, other: &GCharacter) -> GCharacter {
        GCharacter::new(
            self.lie.clone(),
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), *c))
                .chain(other.terms.iter().map(|(w, c)| (w.clone(), -*c))),
        )
    }

    /// Multiplies by `e^w`.
    pub fn shift(&self, w: &Weight) -> GCharacter {
        GCharacter::new(
            self.lie.clone(),
            self.terms.iter().map(|(x, c)| (x.add(w), *c)),
        )
    }
}

/// Restriction to the finite-type algebra: `Y_{i,s} ↦ e^{Λ_i}` at `t = 1`.
pub fn restrict_to_g(chi: &QtCharacter) -> GCharacter {
    let lt = &chi.lie;
    GCharacter::new(
        lt.clone(),
        chi.terms.iter().map(|(m, c)| {
            let w = Weight(lt.nodes().map(|i| m.node_degree(i)).collect());
            (w, c.eval_at_one())
        }),
    )
}

/// Reindexes terms by their v-vectors against the highest monomial, keeping
/// total A-degree `<= max_degree`.
pub fn normalized_in_a(chi: &QtCharacter, max_degree: i64) -> Result<BTreeMap<AVector, TPoly>> {
    let mut out: BTreeMap<AVector, TPoly> = BTreeMap::new();
    for (m, c) in &chi.terms {
        let v = v_factorization(&chi.lie, m, &chi.highest)?;
        if v.values().sum::<i64>() <= max_degree {
            *out.entry(v).or_default() += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Greedy check that `chi` is a `Z[t,t^-1]`-combination of the `E_i(m)` for
/// the given node: peel off `c E_i(m)` at the top of each remaining slice.
pub fn in_k_t_i(chi: &QtCharacter, i: usize) -> bool {
    let lt = &chi.lie;
    let mut rest: BTreeMap<(i64, YMonomial), TPoly> = BTreeMap::new();
    for (m, c) in &chi.terms {
        match v_factorization(lt, m, &chi.highest) {
            Ok(v) => {
                rest.insert((v.values().sum(), m.clone()), c.clone());
            }
            Err(_) => return false,
        }
    }
    while let Some(((deg, m), c)) = rest.pop_first() {
        if c.is_zero() {
            continue;
        }
        let terms = match e_i_terms(lt, &m, i) {
            Ok(t) => t,
            Err(_) => return false,
        };
        for (mm, ec, r) in terms.into_iter().skip(1) {
            let key = (deg + r as i64, mm);
            let e = rest.entry(key).or_default();
            *e -= &(&c * &ec);
        }
    }
    true
}

/// Membership in every `K_{t,i}`.
pub fn in_k_t(chi: &QtCharacter) -> bool {
    chi.lie.nodes().all(|i| in_k_t_i(chi, i))
}

/// Writes the `# qtc v1` text form:
///
/// ```text
/// # qtc v1
/// type A 2
/// P 1: 0 2
/// term 1 : Y[1,0] Y[1,2]
/// term t^-1 : Y[2,1]
/// ```
///
/// `P` lines give the Drinfeld polynomial of the highest monomial (none for
/// the trivial character); when the highest monomial is not l-dominant a
/// `highest <monomial>` line is written instead. Terms follow in canonical
/// monomial order.
pub fn write_qtc(chi: &QtCharacter) -> String {
    let mut s = String::new();
    s.push_str("# qtc v1\n");
    let _ = writeln!(s, "type {} {}", chi.lie.family(), chi.lie.rank());
    match chi.drinfeld() {
        Ok(p) => {
            if !p.is_empty() {
                let _ = writeln!(s, "{p}");
            }
        }
        Err(_) => {
            let _ = writeln!(s, "highest {}", chi.highest);
        }
    }
    for (m, c) in &chi.terms {
        let _ = writeln!(s, "term {c} : {m}");
    }
    s
}

/// Parses the format produced by [`write_qtc`]. Blank lines and further
/// `#` comments are ignored.
pub fn parse_qtc(text: &str) -> Result<QtCharacter> {
    let mut lines = text.lines().enumerate();
    let header = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "empty input"))?;
    if header.1.trim() != "# qtc v1" {
        return Err(parse_err(header.0 + 1, "missing '# qtc v1' header"));
    }
    let mut lie: Option<LieType> = None;
    let mut roots: Vec<(usize, i32)> = Vec::new();
    let mut highest: Option<YMonomial> = None;
    let mut terms: Vec<(YMonomial, TPoly)> = Vec::new();
    for (n, raw) in lines {
        let line = raw.trim();
        let ln = n + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let relabel = |e: Error| match e {
            Error::Parse { msg, .. } => parse_err(ln, msg),
            other => other,
        };
        if let Some(rest) = line.strip_prefix("type ") {
            let mut parts = rest.split_whitespace();
            let fam = parts.next().ok_or_else(|| parse_err(ln, "missing family"))?;
            let rank = parts.next().ok_or_else(|| parse_err(ln, "missing rank"))?;
            lie = Some(LieType::parse(&format!("{fam}{rank}"))?);
        } else if line.starts_with("P ") || line.starts_with("P\t") {
            roots.extend(crate::ymono::parse_p_line(line).map_err(relabel)?);
        } else if let Some(rest) = line.strip_prefix("highest ") {
            highest = Some(rest.parse().map_err(relabel)?);
        } else if let Some(rest) = line.strip_prefix("term ") {
            let (c, m) = rest
                .split_once(" : ")
                .ok_or_else(|| parse_err(ln, "term line needs ' : '"))?;
            let c: TPoly = c.parse().map_err(relabel)?;
            let m: YMonomial = m.parse().map_err(relabel)?;
            terms.push((m, c));
        } else {
            return Err(parse_err(ln, format!("unrecognized line '{line}'")));
        }
    }
    let lie = lie.ok_or_else(|| parse_err(0, "missing type line"))?;
    let highest = match highest {
        Some(h) => h,
        None => DrinfeldPoly::from_roots(roots).monomial(),
    };
    for (m, _) in &terms {
        for &(k, _) in m.factors() {
            if !lie.is_node(k.node()) {
                return Err(parse_err(0, format!("node {} out of range in {m}", k.node())));
            }
        }
    }
    Ok(QtCharacter::new(lie, highest, terms))
}

/// Convenience: index of a v-vector as a flat list of `((i, s), v)`.
pub fn a_vector_entries(v: &AVector) -> Vec<((usize, i32), i64)> {
    v.iter().map(|(k, &x)| ((k.node(), k.shift), x)).collect()
}

pub fn a_vector_from(entries: &[((usize, i32), i64)]) -> AVector {
    entries
        .iter()
        .map(|&((i, s), x)| (YVar::new(i, s), x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(s: &str) -> LieType {
        LieType::parse(s).unwrap()
    }

    fn mono(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    fn tp(s: &str) -> TPoly {
        s.parse().unwrap()
    }

    fn chi(l: &LieType, highest: &str, terms: &[(&str, &str)]) -> QtCharacter {
        QtCharacter::new(
            l.clone(),
            mono(highest),
            terms.iter().map(|(m, c)| (mono(m), tp(c))),
        )
    }

    fn a1_fund(s: i32) -> QtCharacter {
        let l = lt("A1");
        QtCharacter::new(
            l,
            YMonomial::var(1, s, 1),
            [
                (YMonomial::var(1, s, 1), TPoly::one()),
                (YMonomial::var(1, s + 2, -1), TPoly::one()),
            ],
        )
    }

    fn a2_fund1(s: i32) -> QtCharacter {
        let l = lt("A2");
        chi(
            &l,
            "Y[1,0]",
            &[("Y[1,0]", "1"), ("Y[1,2]^-1 Y[2,1]", "1"), ("Y[2,3]^-1", "1")],
        )
        .shifted(s)
    }

    #[test]
    fn e_i_examples() {
        let a1 = lt("A1");
        assert_eq!(
            expand_e_i(&a1, &mono("Y[1,0]"), 1).unwrap(),
            chi(&a1, "Y[1,0]", &[("Y[1,0]", "1"), ("Y[1,2]^-1", "1")])
        );
        assert_eq!(
            expand_e_i(&a1, &mono("Y[1,0]^2"), 1).unwrap(),
            chi(
                &a1,
                "Y[1,0]^2",
                &[("Y[1,0]^2", "1"), ("Y[1,0] Y[1,2]^-1", "1+t^2"), ("Y[1,2]^-2", "1")]
            )
        );
        let a2 = lt("A2");
        let e = expand_e_i(&a2, &mono("Y[1,0] Y[1,2]"), 1).unwrap();
        assert_eq!(e.len(), 4);
        assert!(e.terms().values().all(TPoly::is_one));
        let m = mono("Y[1,0] Y[1,2]");
        let a11 = a_monomial(&a2, 1, 1).inv();
        let a13 = a_monomial(&a2, 1, 3).inv();
        for x in [m.clone(), m.mul(&a11), m.mul(&a13), m.mul(&a11).mul(&a13)] {
            assert!(e.terms().contains_key(&x), "{x}");
        }
        assert!(matches!(
            expand_e_i(&a2, &mono("Y[1,2]^-1"), 1),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn multiply_standard_a1() {
        let prod = multiply_standard(&a1_fund(0), &a1_fund(2)).unwrap();
        let l = lt("A1");
        assert_eq!(
            prod,
            chi(
                &l,
                "Y[1,0] Y[1,2]",
                &[
                    ("Y[1,0] Y[1,2]", "1"),
                    ("Y[1,0] Y[1,4]^-1", "1"),
                    ("1", "t^-1"),
                    ("Y[1,2]^-1 Y[1,4]^-1", "1")
                ]
            )
        );
        assert!(matches!(
            multiply_standard(&a1_fund(4), &a1_fund(0)),
            Err(Error::SeparationViolation { first: 4, second: 0 })
        ));
    }

    #[test]
    fn multiply_standard_a2_example_graph() {
        let prod = multiply_standard(&a2_fund1(0), &a2_fund1(2)).unwrap();
        let l = lt("A2");
        let want = chi(
            &l,
            "Y[1,0] Y[1,2]",
            &[
                ("Y[1,0] Y[1,2]", "1"),
                ("Y[2,1]", "t^-1"),
                ("Y[1,2] Y[2,3]^-1", "t^-1"),
                ("Y[1,0] Y[1,4]^-1 Y[2,3]", "1"),
                ("Y[1,2]^-1 Y[1,4]^-1 Y[2,1] Y[2,3]", "1"),
                ("Y[1,4]^-1", "t^-1"),
                ("Y[1,0] Y[2,5]^-1", "1"),
                ("Y[1,2]^-1 Y[2,1] Y[2,5]^-1", "1"),
                ("Y[2,3]^-1 Y[2,5]^-1", "1"),
            ],
        );
        assert_eq!(prod, want);
        // twisted tensor product route agrees
        assert_eq!(twisted_tensor(&a2_fund1(0), &a2_fund1(2)), want);
    }

    #[test]
    fn multiply_by_unit_is_identity() {
        let a = a2_fund1(0);
        let u = QtCharacter::unit(lt("A2"));
        assert_eq!(multiply_standard(&a, &u).unwrap(), a);
        assert_eq!(multiply_standard(&u, &a).unwrap(), a);
    }

    #[test]
    fn bar_and_specialize() {
        let l = lt("A1");
        let c = chi(&l, "Y[1,0]", &[("Y[1,0]", "t^-1")]);
        assert_eq!(bar_char(&c), chi(&l, "Y[1,0]", &[("Y[1,0]", "t")]));
        let c = chi(&l, "Y[1,0]", &[("Y[1,0]", "1+t^2")]);
        assert_eq!(specialize_t1(&c)[&mono("Y[1,0]")], 2);
        let e = QtCharacter::new(l, YMonomial::one(), []);
        assert!(specialize_t1(&e).is_empty());
        assert!(restrict_to_g(&e).is_empty());
        let prod = multiply_standard(&a2_fund1(0), &a2_fund1(2)).unwrap();
        let s = specialize_t1(&prod);
        assert_eq!(s.len(), 9);
        assert!(s.values().all(|&c| c == 1));
    }

    #[test]
    fn restriction_of_a2_fundamental() {
        let g = restrict_to_g(&a2_fund1(0));
        let want = GCharacter::new(
            lt("A2"),
            [
                (Weight(vec![1, 0]), 1),
                (Weight(vec![-1, 1]), 1),
                (Weight(vec![0, -1]), 1),
            ],
        );
        assert_eq!(g, want);
        let prod = multiply_standard(&a2_fund1(0), &a2_fund1(2)).unwrap();
        let g2 = restrict_to_g(&prod);
        assert_eq!(g2, want.mul(&want));
        assert_eq!(g2.total_mass(), 9);
    }

    #[test]
    fn normalized_in_a_examples() {
        let a = a1_fund(0);
        let n0 = normalized_in_a(&a, 0).unwrap();
        assert_eq!(n0.len(), 1);
        assert!(n0[&AVector::new()].is_one());
        let n1 = normalized_in_a(&a, 1).unwrap();
        assert_eq!(n1.len(), 2);
        assert!(n1[&a_vector_from(&[((1, 1), 1)])].is_one());
    }

    #[test]
    fn qtc_round_trip() {
        let prod = multiply_standard(&a2_fund1(0), &a2_fund1(2)).unwrap();
        let text = write_qtc(&prod);
        assert!(text.starts_with("# qtc v1\ntype A 2\nP 1: 0 2\n"));
        assert!(text.contains("term t^-1 : Y[2,1]\n"));
        assert_eq!(parse_qtc(&text).unwrap(), prod);
        let u = QtCharacter::unit(lt("D4"));
        assert_eq!(parse_qtc(&write_qtc(&u)).unwrap(), u);
        assert!(parse_qtc("type A 2\n").is_err());
        assert!(parse_qtc("# qtc v1\ntype A 2\nterm 1 Y[1,0]\n").is_err());
        assert!(parse_qtc("# qtc v1\ntype A 2\nterm 1 : Y[3,0]\n").is_err());
    }

    #[test]
    fn k_t_membership() {
        let prod = multiply_standard(&a2_fund1(0), &a2_fund1(2)).unwrap();
        assert!(in_k_t(&prod.untwisted().unwrap()));
        assert!(in_k_t(&a2_fund1(0)));
        let l = lt("A1");
        // Y[1,0] alone is not 1-complete
        assert!(!in_k_t(&chi(&l, "Y[1,0]", &[("Y[1,0]", "1")])));
    }
}
