//! Character algorithms: l-fundamental and KR characters by slice
//! completion, standard modules by the twisted product, and simple modules
//! by triangular decomposition.
//!
//! # Slice completion
//!
//! The expansion works with the untwisted character
//! `χ̃ = Σ t^{d(m,m_P;m,m_P)} a_m m`, which lies in every `K_{t,j}`: its
//! `j`-slice is a `Z[t,t^-1]`-combination of `E_j(m')` over `j`-dominant
//! members `m'`. Monomials are visited by increasing A-degree (then
//! canonical order), so every contribution to a monomial is known when it
//! is visited. For each node `j` the map `contrib_j` holds the coefficient
//! forced by the `E_j` expansions already placed. A visited monomial takes
//! its coefficient from any node where it is not dominant (all such nodes
//! must agree), and for each node where it is dominant, the difference to
//! `contrib_j` is placed as a new multiple of `E_j`.
//!
//! Non-highest l-dominant monomials are an error for fundamentals; the KR
//! variant gives them coefficient zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::qtpoly::{e_i_terms, multiply_standard, parse_qtc, write_qtc, QtCharacter};
use crate::root_data::LieType;
use crate::tcoeff::TPoly;
use crate::ymono::{v_factorization, DrinfeldPoly, YMonomial};

/// Output of [`Engine::kl_decompose`].
#[derive(Debug, Clone)]
pub struct KLResult {
    pub standard: DrinfeldPoly,
    /// Nonzero `Z_{PQ}`, starting with `(P, 1)`.
    pub factors: Vec<(DrinfeldPoly, TPoly)>,
    pub simples: BTreeMap<DrinfeldPoly, QtCharacter>,
    /// The closed set of Drinfeld polynomials below `P`, linearly ordered
    /// with `P` first.
    pub poset: Vec<DrinfeldPoly>,
    /// `c_{QR}`, `L_{QR}`, `Z_{QR}` indexed by positions in `poset`; only
    /// nonzero entries are stored.
    pub c: BTreeMap<(usize, usize), TPoly>,
    pub l: BTreeMap<(usize, usize), TPoly>,
    pub z: BTreeMap<(usize, usize), TPoly>,
}

impl KLResult {
    pub fn z_factor(&self, q: &DrinfeldPoly) -> TPoly {
        self.factors
            .iter()
            .find(|(p, _)| p == q)
            .map(|(_, z)| z.clone())
            .unwrap_or_default()
    }

    pub fn simple(&self) -> &QtCharacter {
        &self.simples[&self.standard]
    }
}

/// Character engine for one Lie type with in-memory memo and an optional
/// on-disk cache of fundamental and KR characters at shift 0.
pub struct Engine {
    lie: LieType,
    cache_dir: Option<PathBuf>,
    kr_memo: Mutex<HashMap<(usize, usize), QtCharacter>>,
    std_memo: Mutex<HashMap<DrinfeldPoly, QtCharacter>>,
}

impl Engine {
    pub fn new(lie: LieType) -> Engine {
        Engine {
            lie,
            cache_dir: None,
            kr_memo: Mutex::new(HashMap::new()),
            std_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_cache_dir(lie: LieType, dir: impl Into<PathBuf>) -> Engine {
        Engine {
            cache_dir: Some(dir.into()),
            ..Engine::new(lie)
        }
    }

    pub fn lie_type(&self) -> &LieType {
        &self.lie
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if self.lie.is_node(i) {
            Ok(())
        } else {
            Err(Error::DomainError(format!(
                "node {i} out of range for {}",
                self.lie
            )))
        }
    }

    pub fn fundamental_char(&self, i: usize, s: i32) -> Result<QtCharacter> {
        self.kr_char_direct(i, 1, s)
    }

    /// `χ_{q,t}(W^{(i)}_{k,s})`; `k = 0` gives the unit character.
    pub fn kr_char_direct(&self, i: usize, k: usize, s: i32) -> Result<QtCharacter> {
        self.check_node(i)?;
        if k == 0 {
            return Ok(QtCharacter::unit(self.lie.clone()));
        }
        if let Some(c) = self.kr_memo.lock().unwrap().get(&(i, k)) {
            return Ok(c.shifted(s));
        }
        let name = if k == 1 {
            format!("{}{}_fund_{}.qtc", self.lie.family(), self.lie.rank(), i)
        } else {
            format!("{}{}_kr_{}_{}.qtc", self.lie.family(), self.lie.rank(), i, k)
        };
        let chi = match self.load_cached(&name)? {
            Some(c) => c,
            None => {
                let highest = DrinfeldPoly::kr(i, k, 0).monomial();
                let c = expand(&self.lie, &highest, k > 1)?;
                self.store_cached(&name, &c)?;
                c
            }
        };
        let out = chi.shifted(s);
        self.kr_memo.lock().unwrap().insert((i, k), chi);
        Ok(out)
    }

    fn load_cached(&self, name: &str) -> Result<Option<QtCharacter>> {
        let Some(dir) = &self.cache_dir else {
            return Ok(None);
        };
        let path = dir.join(name);
        match fs::read_to_string(&path) {
            Ok(text) => {
                let chi = parse_qtc(&text)?;
                if chi.lie_type() != &self.lie {
                    return Err(Error::Io(format!(
                        "{} holds a {} character",
                        path.display(),
                        chi.lie_type()
                    )));
                }
                Ok(Some(chi))
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    fn store_cached(&self, name: &str, chi: &QtCharacter) -> Result<()> {
        let Some(dir) = &self.cache_dir else {
            return Ok(());
        };
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
        fs::write(&tmp, write_qtc(chi))?;
        fs::rename(&tmp, dir.join(name))?;
        Ok(())
    }

    /// `χ_{q,t}(M(P))`: fundamentals sorted by nondecreasing `s` (ties by
    /// node), folded left to right with [`multiply_standard`].
    pub fn standard_char(&self, p: &DrinfeldPoly) -> Result<QtCharacter> {
        for i in p.nodes() {
            self.check_node(i)?;
        }
        let base = p.roots().map(|(_, s)| s).min().unwrap_or(0);
        let p0 = p.shifted(-base);
        if let Some(c) = self.std_memo.lock().unwrap().get(&p0) {
            return Ok(c.shifted(base));
        }
        let mut acc = QtCharacter::unit(self.lie.clone());
        for (i, s) in p0.fundamental_factors() {
            let f = self.fundamental_char(i, s)?;
            acc = multiply_standard(&acc, &f)?;
        }
        self.std_memo.lock().unwrap().insert(p0, acc.clone());
        Ok(acc.shifted(base))
    }

    /// Triangular decomposition `C = Z L` on the closed set below `P`.
    pub fn kl_decompose(&self, p: &DrinfeldPoly) -> Result<KLResult> {
        let top = p.monomial();
        // closure of l-dominant monomials
        let mut seen: BTreeSet<YMonomial> = BTreeSet::new();
        let mut stack = vec![top.clone()];
        let mut standards: HashMap<YMonomial, QtCharacter> = HashMap::new();
        while let Some(m) = stack.pop() {
            if !seen.insert(m.clone()) {
                continue;
            }
            let chi = self.standard_char(&DrinfeldPoly::from_dominant(&m)?)?;
            for d in chi.dominant_monomials() {
                if !seen.contains(d) {
                    stack.push(d.clone());
                }
            }
            standards.insert(m, chi);
        }
        let mut keyed: Vec<(i64, YMonomial)> = seen
            .into_iter()
            .map(|m| {
                let v = v_factorization(&self.lie, &m, &top)?;
                Ok((v.values().sum(), m))
            })
            .collect::<Result<_>>()?;
        keyed.sort();
        let monos: Vec<YMonomial> = keyed.into_iter().map(|(_, m)| m).collect();
        let poset: Vec<DrinfeldPoly> = monos
            .iter()
            .map(DrinfeldPoly::from_dominant)
            .collect::<Result<_>>()?;
        let n = monos.len();

        let mut c = BTreeMap::new();
        for (a, ma) in monos.iter().enumerate() {
            let chi = &standards[ma];
            for (b, mb) in monos.iter().enumerate() {
                let x = chi.coeff(mb);
                if !x.is_zero() {
                    if b < a || (b == a && !x.is_one()) {
                        return Err(Error::InternalError(format!(
                            "standard character of {ma} is not unitriangular at {mb}"
                        )));
                    }
                    c.insert((a, b), x);
                }
            }
        }

        let mut l: BTreeMap<(usize, usize), TPoly> = BTreeMap::new();
        let mut z: BTreeMap<(usize, usize), TPoly> = BTreeMap::new();
        for a in (0..n).rev() {
            l.insert((a, a), TPoly::one());
            z.insert((a, a), TPoly::one());
            for b in a + 1..n {
                let mut f = c.get(&(a, b)).cloned().unwrap_or_default();
                for r in a + 1..b {
                    if let (Some(zz), Some(ll)) = (z.get(&(a, r)), l.get(&(r, b))) {
                        f -= &(zz * ll);
                    }
                }
                if f.is_zero() {
                    continue;
                }
                let lv = f.nonneg_part().symmetric_completion();
                let zv = &f - &lv;
                if !zv.in_negative_ideal() || !zv.has_nonneg_coeffs() {
                    return Err(Error::InternalError(format!(
                        "Z entry {zv} at ({}, {}) violates positivity",
                        monos[a], monos[b]
                    )));
                }
                if !lv.is_zero() {
                    l.insert((a, b), lv);
                }
                if !zv.is_zero() {
                    z.insert((a, b), zv);
                }
            }
        }

        let mut simples: BTreeMap<DrinfeldPoly, QtCharacter> = BTreeMap::new();
        let mut by_index: Vec<Option<QtCharacter>> = vec![None; n];
        for a in (0..n).rev() {
            let mut chi = standards[&monos[a]].clone();
            for b in a + 1..n {
                if let Some(zz) = z.get(&(a, b)) {
                    let lb = by_index[b].as_ref().expect("deeper simples first");
                    chi = chi.sub(&lb.scale(zz));
                }
            }
            simples.insert(poset[a].clone(), chi.clone());
            by_index[a] = Some(chi);
        }

        let factors = (0..n)
            .filter_map(|b| z.get(&(0, b)).map(|zz| (poset[b].clone(), zz.clone())))
            .collect();
        Ok(KLResult {
            standard: p.clone(),
            factors,
            simples,
            poset,
            c,
            l,
            z,
        })
    }

    pub fn simple_char(&self, p: &DrinfeldPoly) -> Result<QtCharacter> {
        let base = p.roots().map(|(_, s)| s).min().unwrap_or(0);
        let res = self.kl_decompose(&p.shifted(-base))?;
        Ok(res.simple().shifted(base))
    }
}

/// Slice completion from `highest`; see the module docs.
pub(crate) fn expand(lt: &LieType, highest: &YMonomial, discard_dominant: bool) -> Result<QtCharacter> {
    let nodes: Vec<usize> = lt.nodes().collect();
    let mut contrib: Vec<HashMap<YMonomial, TPoly>> = vec![HashMap::new(); nodes.len()];
    let mut work: BTreeSet<(u32, YMonomial)> = BTreeSet::new();
    let mut depth_of: HashMap<YMonomial, u32> = HashMap::new();
    let mut out: Vec<(YMonomial, TPoly)> = Vec::new();
    work.insert((0, highest.clone()));
    depth_of.insert(highest.clone(), 0);

    while let Some((depth, m)) = work.pop_first() {
        let coeff = if &m == highest {
            TPoly::one()
        } else {
            let mut forced: Option<TPoly> = None;
            for (jx, &j) in nodes.iter().enumerate() {
                if m.is_i_dominant(j) {
                    continue;
                }
                let x = contrib[jx].get(&m).cloned().unwrap_or_default();
                match &forced {
                    None => forced = Some(x),
                    Some(f) if *f != x => {
                        return Err(Error::InconsistentExpansion(format!(
                            "{m}: {f} versus {x} at node {j}"
                        )))
                    }
                    _ => {}
                }
            }
            match forced {
                Some(f) => f,
                None if discard_dominant => TPoly::zero(),
                None => {
                    return Err(Error::InconsistentExpansion(format!(
                        "unexpected l-dominant monomial {m}"
                    )))
                }
            }
        };
        for (jx, &j) in nodes.iter().enumerate() {
            if !m.is_i_dominant(j) {
                continue;
            }
            let have = contrib[jx].get(&m).cloned().unwrap_or_default();
            let extra = &coeff - &have;
            if extra.is_zero() {
                continue;
            }
            for (mm, ec, r) in e_i_terms(lt, &m, j)?.into_iter().skip(1) {
                let x = &extra * &ec;
                let slot = contrib[jx].entry(mm.clone()).or_default();
                *slot += &x;
                let d = depth + r;
                let prev = *depth_of.entry(mm.clone()).or_insert(d);
                if prev != d {
                    return Err(Error::InternalError(format!(
                        "{mm} reached at A-degrees {prev} and {d}"
                    )));
                }
                work.insert((d, mm));
            }
        }
        if !coeff.is_zero() {
            out.push((m, coeff));
        }
    }
    let tilde = QtCharacter::new(lt.clone(), highest.clone(), out);
    tilde.normalized()
}
