//! Laurent polynomials in `t` with integer coefficients.
//!
//! Coefficients are `i64` with checked arithmetic: an overflow panics rather
//! than wrapping. Character coefficients stay tiny; the fermionic sums, whose
//! intermediate binomials can grow, use [`gen_binomial`] over `BigInt`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Terms = SmallVec<[(i32, i64); 2]>;

/// Element of `Z[t, t^-1]`, stored as `(exponent, coefficient)` pairs sorted
/// by exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    terms: Terms,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("TPoly coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("TPoly coefficient overflow")
}

impl TPoly {
    pub fn zero() -> TPoly {
        TPoly::default()
    }

    pub fn one() -> TPoly {
        TPoly::monomial(1, 0)
    }

    /// `c t^e`.
    pub fn monomial(c: i64, e: i32) -> TPoly {
        let mut terms = Terms::new();
        if c != 0 {
            terms.push((e, c));
        }
        TPoly { terms }
    }

    /// `t^e`.
    pub fn t_pow(e: i32) -> TPoly {
        TPoly::monomial(1, e)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(it: I) -> TPoly {
        let mut v: Vec<(i32, i64)> = it.into_iter().collect();
        v.sort_by_key(|&(e, _)| e);
        let mut terms = Terms::new();
        for (e, c) in v {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = checked_add(last.1, c),
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|&mut (_, c)| c != 0);
        TPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == (0, 1)
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms
            .binary_search_by_key(&e, |&(x, _)| x)
            .map(|k| self.terms[k].1)
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: i32) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|&(e, c)| (e + n, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> TPoly {
        if k == 0 {
            return TPoly::zero();
        }
        TPoly {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| (e, checked_mul(c, k)))
                .collect(),
        }
    }

    /// `t ↦ t^-1`.
    pub fn bar(&self) -> TPoly {
        TPoly {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.iter().fold(0, |acc, &(_, c)| checked_add(acc, c))
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.iter().all(|&(_, c)| c >= 0)
    }

    /// True for elements of `t^-1 Z[t^-1]` (including zero).
    pub fn in_negative_ideal(&self) -> bool {
        self.max_degree().is_none_or(|e| e < 0)
    }

    /// Part with exponents `>= 0`.
    pub fn nonneg_part(&self) -> TPoly {
        TPoly {
            terms: self.terms.iter().copied().filter(|&(e, _)| e >= 0).collect(),
        }
    }

    /// The unique bar-invariant polynomial agreeing with `self` in degrees `>= 0`.
    pub fn symmetric_completion(&self) -> TPoly {
        let pos = self.nonneg_part();
        let neg: Vec<(i32, i64)> = pos
            .terms
            .iter()
            .filter(|&&(e, _)| e > 0)
            .map(|&(e, c)| (-e, c))
            .collect();
        TPoly::from_terms(pos.terms.iter().copied().chain(neg))
    }

    pub fn pow(&self, n: u32) -> TPoly {
        let mut acc = TPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn add_scaled(&mut self, other: &TPoly, sign: i64) {
        if other.is_zero() {
            return;
        }
        let mut out = Terms::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, checked_mul(sign, b[j].1)));
                j += 1;
            } else {
                let c = checked_add(a[i].1, checked_mul(sign, b[j].1));
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        self.terms = out;
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        self.add_scaled(rhs, -1);
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(-1)
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = rhs.terms[0];
            return self.scale(c).shift(e);
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms[0];
            return rhs.scale(c).shift(e);
        }
        let mut pairs = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &rhs.terms {
                pairs.push((e1 + e2, checked_mul(c1, c2)));
            }
        }
        TPoly::from_terms(pairs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TPoly> for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, &(e, c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let a = c.unsigned_abs();
            f.write_str(sign)?;
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "t^{e}")?,
                (_, 1) => write!(f, "{a}t")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl FromStr for TPoly {
    type Err = Error;

    /// Grammar: `term (('+'|'-') term)*` with an optional leading `-`, where a
    /// term is `digits`, `[digits] 't'`, or `[digits] 't^' ['-'] digits`.
    /// `"0"` is the zero polynomial.
    fn from_str(s: &str) -> Result<TPoly> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("invalid t-polynomial '{s}'"),
        };
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut out = Vec::new();
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(bad());
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &s[start..pos];
            let mut coeff: Option<i64> = if digits.is_empty() {
                None
            } else {
                Some(digits.parse().map_err(|_| bad())?)
            };
            let mut exp = 0i32;
            if pos < bytes.len() && bytes[pos] == b't' {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let es = pos;
                    if pos < bytes.len() && bytes[pos] == b'-' {
                        pos += 1;
                    }
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    exp = s[es..pos].parse().map_err(|_| bad())?;
                }
                coeff.get_or_insert(1);
            }
            let c = coeff.ok_or_else(bad)?;
            out.push((exp, sign * c));
        }
        Ok(TPoly::from_terms(out))
    }
}

/// Balanced Gaussian binomial `[n r]_t` with `[m]_t = (t^m - t^-m)/(t - t^-1)`.
pub fn t_binomial(n: i64, r: i64) -> Result<TPoly> {
    if n < 0 || r < 0 || r > n {
        return Err(Error::DomainError(format!("t-binomial [{n} {r}]")));
    }
    // rows of the balanced Pascal rule [n r] = t^-r [n-1 r] + t^(n-r) [n-1 r-1]
    let mut row: Vec<TPoly> = vec![TPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for k in 0..=m {
            let mut p = TPoly::zero();
            if k < m {
                p += &row[k as usize].shift(-(k as i32));
            }
            if k > 0 {
                p += &row[k as usize - 1].shift((m - k) as i32);
            }
            next.push(p);
        }
        row = next;
    }
    Ok(row.swap_remove(r as usize))
}

/// Binomial convention for the fermionic sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `Γ(a+1)/(Γ(a-b+1)Γ(b+1))`, i.e. the falling factorial over `b!`.
    Gamma,
    /// As `Gamma`, but zero whenever `b > a`.
    Lusztig,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Convention> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" => Ok(Convention::Gamma),
            "lusztig" => Ok(Convention::Lusztig),
            _ => Err(Error::DomainError(format!("unknown convention '{s}'"))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Gamma => "gamma",
            Convention::Lusztig => "lusztig",
        })
    }
}

/// Generalized binomial coefficient `binom(a, b)` for arbitrary integer `a`.
pub fn gen_binomial(a: i64, b: i64, convention: Convention) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if convention == Convention::Lusztig && b > a {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..b {
        num *= BigInt::from(a - k);
        den *= BigInt::from(k + 1);
    }
    num / den
}
