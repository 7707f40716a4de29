//! Exact polynomials in `t` with arbitrary-precision integer coefficients,
//! and the `t`-analog tower built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partition::Partition;

static NOT_DIVISIBLE_EVENTS: AtomicU64 = AtomicU64::new(0);

/// How many times [`TPoly::exact_divide`] has reported a nonzero remainder
/// in this process. Valid inputs never trigger it.
pub fn not_divisible_events() -> u64 {
    NOT_DIVISIBLE_EVENTS.load(Ordering::Relaxed)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
}

/// A polynomial in `t`: a sparse map from exponent to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · t^e`.
    pub fn monomial(e: u32, c: impl Into<BigInt>) -> Self {
        let mut p = TPoly::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, C)>) -> Self {
        let mut p = TPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds from a dense coefficient list, lowest degree first.
    pub fn from_dense<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(e, c)| (e as u32, c)))
    }

    fn add_term(&mut self, e: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: u32) -> TPoly {
        TPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k + e, c.clone()))
                .collect(),
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        // Horner over the sparse support, highest exponent first
        let mut acc = BigInt::zero();
        let mut prev: Option<u32> = None;
        for (&e, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev {
                acc *= num_traits::pow(x.clone(), (p - e) as usize);
            }
            acc += c;
            prev = Some(e);
        }
        if let Some(p) = prev {
            acc *= num_traits::pow(x.clone(), p as usize);
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Coefficients from `low_degree()` to `degree()` inclusive.
    fn to_dense(&self) -> (u32, Vec<BigInt>) {
        let (Some(lo), Some(hi)) = (self.low_degree(), self.degree()) else {
            return (0, Vec::new());
        };
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.coeffs {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    fn from_offset_dense(offset: u32, dense: Vec<BigInt>) -> TPoly {
        TPoly {
            coeffs: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (offset + i as u32, c))
                .collect(),
        }
    }

    /// Quotient `q` with `q · divisor = self`, or an error when the division
    /// leaves a remainder.
    pub fn exact_divide(&self, divisor: &TPoly) -> Result<TPoly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let not_divisible = || {
            NOT_DIVISIBLE_EVENTS.fetch_add(1, Ordering::Relaxed);
            PolyError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            }
        };
        if self.is_zero() {
            return Ok(TPoly::zero());
        }
        let (a_lo, mut rem) = self.to_dense();
        let (b_lo, div) = divisor.to_dense();
        if a_lo < b_lo || rem.len() < div.len() {
            return Err(not_divisible());
        }
        // long division from the top; divisor is trimmed so div[last] != 0
        let lead = div.last().expect("nonzero divisor");
        let q_len = rem.len() - div.len() + 1;
        let mut quot = vec![BigInt::zero(); q_len];
        for qi in (0..q_len).rev() {
            let top = qi + div.len() - 1;
            if rem[top].is_zero() {
                continue;
            }
            let (q, r) = rem[top].div_rem(lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (j, d) in div.iter().enumerate() {
                if !d.is_zero() {
                    rem[qi + j] -= d * &q;
                }
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        Ok(TPoly::from_offset_dense(a_lo - b_lo, quot))
    }

    /// LaTeX rendering: `t^{3}+t^{4}+2t^{5}`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            let sep = match (i == 0, negative, latex) {
                (true, true, _) => "-",
                (true, false, _) => "",
                (false, true, true) => "-",
                (false, false, true) => "+",
                (false, true, false) => " - ",
                (false, false, false) => " + ",
            };
            out.push_str(sep);
            let mag = c.abs();
            if e == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match (e, latex) {
                (0, _) => {}
                (1, _) => out.push('t'),
                (_, true) => out.push_str(&format!("t^{{{e}}}")),
                (_, false) => out.push_str(&format!("t^{e}")),
            }
        }
        out
    }
}

/// Plain rendering: `t + 2t^2 + t^3`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// JSON form: `[[exponent, "coefficient"], ...]`, ascending exponents.
impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (&e, c) in &self.coeffs {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(u32, String)> = Vec::deserialize(deserializer)?;
        let mut coeffs = BTreeMap::new();
        let mut last: Option<u32> = None;
        for (e, c) in pairs {
            if last.is_some_and(|l| l >= e) {
                return Err(D::Error::custom("exponents must be strictly ascending"));
            }
            last = Some(e);
            let c: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient stored"));
            }
            coeffs.insert(e, c);
        }
        Ok(TPoly { coeffs })
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(mut self, rhs: TPoly) -> TPoly {
        self -= &rhs;
        self
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(mut self) -> TPoly {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let (a_lo, a) = self.to_dense();
        let (b_lo, b) = rhs.to_dense();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    out[i + j] += ca * cb;
                }
            }
        }
        TPoly::from_offset_dense(a_lo + b_lo, out)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

/// `[n] = 1 + t + ... + t^{n-1}`, with `[0] = 1`.
pub fn t_integer(n: u32) -> TPoly {
    if n == 0 {
        return TPoly::one();
    }
    TPoly::from_terms((0..n).map(|e| (e, 1)))
}

/// `[n]! = [n][n-1]...[1]`.
pub fn t_factorial(n: u32) -> TPoly {
    (1..=n).fold(TPoly::one(), |acc, k| &acc * &t_integer(k))
}

/// Gaussian binomial `[n]! / ([k]! [n-k]!)`, zero when `k > n`.
pub fn t_binomial(n: u32, k: u32) -> TPoly {
    if k > n {
        return TPoly::zero();
    }
    let denom = &t_factorial(k) * &t_factorial(n - k);
    t_factorial(n)
        .exact_divide(&denom)
        .expect("t-factorial quotient is always exact")
}

/// `b_λ(t) = (1-t)^{l(λ)} Π_i [m_i(λ)]!`.
pub fn b_poly(p: &Partition) -> TPoly {
    let one_minus_t = TPoly::from_dense([1, -1]);
    let mut acc = TPoly::one();
    for _ in 0..p.length() {
        acc = &acc * &one_minus_t;
    }
    let mut parts = p.parts().to_vec();
    parts.dedup();
    for part in parts {
        acc = &acc * &t_factorial(p.multiplicity(part) as u32);
    }
    acc
}
