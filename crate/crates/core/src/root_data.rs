//! Simply-laced Cartan data, positive roots and lattice coordinates.
//!
//! Nodes are numbered from 1. The numbering per family is fixed:
//!
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `D_n`: the path `1 - 2 - ... - (n-2)`, with `n-1` and `n` both attached
//!   to `n-2`.
//! * `E_n` (n = 6, 7, 8): Bourbaki numbering, the path `1 - 3 - 4 - ... - n`
//!   with node `2` attached to node `4`.
//!
//! Weights are stored in the fundamental-weight basis `Λ_i`, root vectors in
//! the simple-root basis `α_i`. The simple root `α_j` has fundamental-weight
//! coordinates given by the j-th column of the Cartan matrix, so a root
//! vector `c` converts to the weight `C c`. The matrix is symmetric, so the
//! row/column convention does not matter in practice.
//!
//! | family | dim g      | #positive roots |
//! |--------|------------|-----------------|
//! | A_n    | n(n+2)     | n(n+1)/2        |
//! | D_n    | n(2n-1)    | n(n-1)          |
//! | E_6    | 78         | 36              |
//! | E_7    | 133        | 63              |
//! | E_8    | 248        | 120             |

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

#[derive(Debug)]
struct LieTypeInner {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    neighbors: Vec<Vec<usize>>,
}

/// A simply-laced Cartan type. Cheap to clone.
#[derive(Debug, Clone)]
pub struct LieType(Arc<LieTypeInner>);

impl PartialEq for LieType {
    fn eq(&self, other: &Self) -> bool {
        self.family() == other.family() && self.rank() == other.rank()
    }
}

impl Eq for LieType {}

impl std::hash::Hash for LieType {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.family().hash(state);
        self.rank().hash(state);
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.rank())
    }
}

/// Builds the Cartan data for `family` of the given rank.
pub fn build_lie_type(family: Family, rank: usize) -> Result<LieType> {
    let admissible = match family {
        Family::A => rank >= 1,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
    };
    if !admissible {
        return Err(Error::UnsupportedType(format!("{family}{rank}")));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match family {
        Family::A => {
            for i in 1..rank {
                edges.push((i, i + 1));
            }
        }
        Family::D => {
            for i in 1..rank - 2 {
                edges.push((i, i + 1));
            }
            edges.push((rank - 2, rank - 1));
            edges.push((rank - 2, rank));
        }
        Family::E => {
            edges.push((1, 3));
            edges.push((2, 4));
            for i in 3..rank {
                edges.push((i, i + 1));
            }
        }
    }
    let mut cartan = vec![vec![0i64; rank]; rank];
    let mut neighbors = vec![Vec::new(); rank];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in &edges {
        cartan[a - 1][b - 1] = -1;
        cartan[b - 1][a - 1] = -1;
        neighbors[a - 1].push(b);
        neighbors[b - 1].push(a);
    }
    for n in &mut neighbors {
        n.sort_unstable();
    }
    Ok(LieType(Arc::new(LieTypeInner {
        family,
        rank,
        cartan,
        neighbors,
    })))
}

impl LieType {
    /// Parses strings such as `"A2"`, `"d4"`, `"E6"`.
    pub fn parse(s: &str) -> Result<LieType> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars
            .next()
            .ok_or_else(|| Error::UnsupportedType(s.to_string()))?;
        let family = Family::parse(&fam.to_string())
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        build_lie_type(family, rank)
    }

    pub fn family(&self) -> Family {
        self.0.family
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank()
    }

    pub fn is_node(&self, i: usize) -> bool {
        i >= 1 && i <= self.rank()
    }

    /// Entry `a_{ij}` with 1-based node indices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.0.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.0.cartan
    }

    /// Nodes `j` with `a_{ij} = -1`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.0.neighbors[i - 1]
    }

    pub fn dimension(&self) -> usize {
        let n = self.rank();
        match self.family() {
            Family::A => n * (n + 2),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
        }
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        RootVector(c)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Weight(c)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(vec![0; self.rank()])
    }

    /// Converts root coordinates to fundamental-weight coordinates (`C c`).
    pub fn root_to_weight(&self, r: &RootVector) -> Weight {
        let n = self.rank();
        let coords = (0..n)
            .map(|i| (0..n).map(|j| self.0.cartan[i][j] * r.0[j]).sum())
            .collect();
        Weight(coords)
    }

    /// Pairing `(μ, β)` of a weight with a root-lattice element.
    pub fn pair(&self, w: &Weight, r: &RootVector) -> i64 {
        w.0.iter().zip(&r.0).map(|(a, b)| a * b).sum()
    }

    /// `Σ_j (C⁻¹ w)_j`, a linear functional positive on positive roots.
    pub fn height(&self, w: &Weight) -> Ratio<i64> {
        let sol = self.solve_cartan(w);
        sol.into_iter().fold(Ratio::zero(), |acc, x| acc + x)
    }

    fn solve_cartan(&self, w: &Weight) -> Vec<Ratio<i64>> {
        let n = self.rank();
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> =
                    self.0.cartan[i].iter().map(|&x| Ratio::from(x)).collect();
                row.push(Ratio::from(w.0[i]));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("Cartan matrix is nonsingular");
            m.swap(col, pivot);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in col..=n {
                        let v = m[col][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n]).collect()
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// An element of the root lattice in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl RootVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sum of coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// The positive roots, generated by closure under simple-root strings.
///
/// A root `β` at height `h` extends to `β + α_i` exactly when the
/// `α_i`-string through `β` continues upward: with `p` the number of times
/// `α_i` can be subtracted, the string has `q = p - ⟨β, α_i^∨⟩` further
/// steps up.
pub fn positive_roots(lt: &LieType) -> Vec<RootVector> {
    let n = lt.rank();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (1..=n).map(|i| lt.simple_root(i).0).collect();
    let mut ordered: Vec<RootVector> = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            all.insert(r.clone());
            ordered.push(RootVector(r.clone()));
        }
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * lt.0.cartan[i][j]).sum();
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    ordered
}

/// Solves `w = Σ c_i α_i` over the integers.
pub fn weight_to_root_coords(lt: &LieType, w: &Weight) -> Result<RootVector> {
    if w.0.len() != lt.rank() {
        return Err(Error::DomainError(format!(
            "weight {w} has wrong length for {lt}"
        )));
    }
    let sol = lt.solve_cartan(w);
    let mut out = Vec::with_capacity(sol.len());
    for x in sol {
        if !x.denom().is_one() {
            return Err(Error::NotInRootLattice(w.to_string()));
        }
        out.push(*x.numer());
    }
    Ok(RootVector(out))
}

/// Character of the irreducible finite-type module of highest weight `hw`,
/// by Freudenthal's multiplicity formula.
pub fn irreducible_character(lt: &LieType, hw: &Weight) -> BTreeMap<Weight, i64> {
    assert!(hw.is_dominant(), "highest weight must be dominant");
    let n = lt.rank();
    let roots = positive_roots(lt);
    let rho = Weight(vec![1; n]);
    let two_rho_plus = hw.add(&rho).add(&rho);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    mult.insert(hw.clone(), 1);
    let mut layer = vec![hw.clone()];
    while !layer.is_empty() {
        let mut candidates: BTreeSet<Weight> = BTreeSet::new();
        for mu in &layer {
            for i in 1..=n {
                let alpha = lt.root_to_weight(&lt.simple_root(i));
                candidates.insert(mu.sub(&alpha));
            }
        }
        let mut next = Vec::new();
        for mu in candidates {
            // λ - μ as a root vector
            let beta = match weight_to_root_coords(lt, &hw.sub(&mu)) {
                Ok(b) => b,
                Err(_) => continue,
            };
            // (λ+ρ)² - (μ+ρ)² = (λ-μ, λ+μ+2ρ)
            let denom = lt.pair(&two_rho_plus.add(&mu), &beta);
            if denom <= 0 {
                continue;
            }
            let mut num = 0i64;
            for alpha in &roots {
                let aw = lt.root_to_weight(alpha);
                let mut nu = mu.add(&aw);
                while let Some(&m) = mult.get(&nu) {
                    num += lt.pair(&nu, alpha) * m;
                    nu = nu.add(&aw);
                }
            }
            let num = 2 * num;
            if num % denom != 0 {
                panic!("Freudenthal recursion produced a non-integer multiplicity");
            }
            let m = num / denom;
            if m > 0 {
                mult.insert(mu.clone(), m);
                next.push(mu);
            }
        }
        layer = next;
    }
    mult.into_iter().collect()
}
