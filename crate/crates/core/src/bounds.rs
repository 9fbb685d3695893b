//! Hitting-set size functions `f`, `g`, `f1`, `f2` in arbitrary precision.
//!
//! Values that would exceed the table's bit budget are reported as lower
//! bounds `>= 2^b`. Every function dominates the values it is built from, so a
//! lower bound on an input is a lower bound on the output.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundFn {
    F,
    G,
    F1,
    F2,
}

impl fmt::Display for BoundFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundFn::F => "f",
            BoundFn::G => "g",
            BoundFn::F1 => "f1",
            BoundFn::F2 => "f2",
        })
    }
}

impl FromStr for BoundFn {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "f" => Ok(BoundFn::F),
            "g" => Ok(BoundFn::G),
            "f1" => Ok(BoundFn::F1),
            "f2" => Ok(BoundFn::F2),
            _ => Err(format!("unknown bound function {s:?} (expected f, g, f1 or f2)")),
        }
    }
}

/// A bound value: exact, or known only to be at least `2^bits`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundValue {
    Exact(BigUint),
    AtLeastPow2(u64),
}

impl BoundValue {
    pub fn zero() -> Self {
        BoundValue::Exact(BigUint::zero())
    }

    pub fn from_u64(v: u64) -> Self {
        BoundValue::Exact(BigUint::from(v))
    }

    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            BoundValue::Exact(v) => Some(v),
            BoundValue::AtLeastPow2(_) => None,
        }
    }

    /// Whether a hitting set of `size` edges is certified to be within this
    /// bound. For a lower bound only sizes up to `2^bits` are accepted.
    pub fn admits(&self, size: usize) -> bool {
        match self {
            BoundValue::Exact(v) => BigUint::from(size) <= *v,
            BoundValue::AtLeastPow2(b) => *b >= 64 || (size as u128) <= (1u128 << b),
        }
    }

    /// Largest `b` with `value >= 2^b` known (0 for values below 2).
    fn floor_log2(&self) -> u64 {
        match self {
            BoundValue::Exact(v) => v.bits().saturating_sub(1),
            BoundValue::AtLeastPow2(b) => *b,
        }
    }

    pub fn add(&self, other: &BoundValue) -> BoundValue {
        match (self, other) {
            (BoundValue::Exact(a), BoundValue::Exact(b)) => BoundValue::Exact(a + b),
            _ => BoundValue::AtLeastPow2(self.floor_log2().max(other.floor_log2())),
        }
    }

    pub fn add_u64(&self, c: u64) -> BoundValue {
        self.add(&BoundValue::from_u64(c))
    }

    pub fn mul_u64(&self, c: u64) -> BoundValue {
        match self {
            BoundValue::Exact(a) => BoundValue::Exact(a * BigUint::from(c)),
            BoundValue::AtLeastPow2(_) if c == 0 => BoundValue::zero(),
            BoundValue::AtLeastPow2(b) => BoundValue::AtLeastPow2(b + (63 - c.leading_zeros() as u64)),
        }
    }

    pub fn max(&self, other: &BoundValue) -> BoundValue {
        match (self, other) {
            (BoundValue::Exact(a), BoundValue::Exact(b)) => BoundValue::Exact(a.max(b).clone()),
            _ => BoundValue::AtLeastPow2(self.floor_log2().max(other.floor_log2())),
        }
    }

    /// Exact comparison when both sides are exact.
    pub fn cmp_exact(&self, other: &BoundValue) -> Option<Ordering> {
        Some(self.exact()?.cmp(other.exact()?))
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(v) => write!(f, "{v}"),
            BoundValue::AtLeastPow2(b) => write!(f, ">=2^{b}"),
        }
    }
}

impl FromStr for BoundValue {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(bits) = s.strip_prefix(">=2^") {
            return bits.parse::<u64>().map(BoundValue::AtLeastPow2).map_err(|e| format!("bad bound {s:?}: {e}"));
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(BoundValue::Exact)
            .ok_or_else(|| format!("bad bound {s:?}: expected a decimal integer or >=2^<bits>"))
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BoundValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Memoized evaluator. Chains in `k` are filled bottom-up so evaluation depth
/// only grows with the length parameter.
#[derive(Debug, Clone)]
pub struct BoundTable {
    max_bits: u64,
    max_chain: u64,
    /// `memo[(func, len)][k - 1]`, always a prefix `1..=n`.
    memo: HashMap<(BoundFn, u64), Vec<BoundValue>>,
}

impl Default for BoundTable {
    fn default() -> Self {
        Self::with_limits(1 << 20, 4096)
    }
}

impl BoundTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `max_bits`: exact values longer than this become lower bounds.
    /// `max_chain`: largest `k` evaluated through its recurrence chain.
    pub fn with_limits(max_bits: u64, max_chain: u64) -> Self {
        BoundTable { max_bits, max_chain, memo: HashMap::new() }
    }

    pub fn value(&mut self, func: BoundFn, k: u64, len: u64) -> BoundValue {
        assert!(k >= 1 && len >= 1, "bound functions need k >= 1 and len >= 1");
        match func {
            BoundFn::F => self.f(k, len),
            BoundFn::G => self.g(k, len),
            BoundFn::F1 => self.f(k, len + 1),
            BoundFn::F2 => self.f2(k, len),
        }
    }

    pub fn f(&mut self, k: u64, len: u64) -> BoundValue {
        if k == 1 {
            return BoundValue::zero();
        }
        if len <= 2 {
            return BoundValue::from_u64(k - 1);
        }
        if k > self.max_chain {
            return BoundValue::AtLeastPow2(inner_k(k, len).saturating_sub(1));
        }
        self.fill(BoundFn::F, k, len)
    }

    pub fn g(&mut self, k: u64, len: u64) -> BoundValue {
        if k == 1 {
            return BoundValue::zero();
        }
        if k > self.max_chain {
            return BoundValue::AtLeastPow2(k - 1);
        }
        self.fill(BoundFn::G, k, len)
    }

    pub fn f1(&mut self, k: u64, len: u64) -> BoundValue {
        self.f(k, len + 1)
    }

    pub fn f2(&mut self, k: u64, len: u64) -> BoundValue {
        if k == 1 {
            return BoundValue::zero();
        }
        if k > self.max_chain {
            return BoundValue::AtLeastPow2(k - 1);
        }
        self.fill(BoundFn::F2, k, len)
    }

    fn fill(&mut self, func: BoundFn, k: u64, len: u64) -> BoundValue {
        let have = self.memo.get(&(func, len)).map_or(0, |v| v.len() as u64);
        for j in (have + 1)..=k {
            let v = if j == 1 { BoundValue::zero() } else { self.step(func, j, len) };
            let v = self.clamp(v);
            self.memo.entry((func, len)).or_default().push(v);
        }
        self.memo[&(func, len)][(k - 1) as usize].clone()
    }

    /// One recurrence step at `k >= 2`; the `k - 1` entry is already memoized.
    fn step(&mut self, func: BoundFn, k: u64, len: u64) -> BoundValue {
        let prev = self.memo[&(func, len)][(k - 2) as usize].clone();
        match func {
            BoundFn::F => {
                let ell = len - 1;
                let inner = self.f2(inner_k(k, len), len - 2);
                inner.max(&prev.add_u64((2 * ell + 5) * k))
            }
            BoundFn::G => {
                let f = self.f(k, len);
                let a = prev.add_u64(2 * len);
                let b = f.add(&prev.mul_u64(2));
                let c = f.mul_u64(3);
                a.max(&b).max(&c)
            }
            BoundFn::F2 => {
                let a = self.f1(k, len).mul_u64(4).add(&self.g(k, len));
                let b = prev.add_u64((len + 1) * (len - 1));
                a.max(&b)
            }
            BoundFn::F1 => unreachable!("f1 delegates to f"),
        }
    }

    fn clamp(&self, v: BoundValue) -> BoundValue {
        match v {
            BoundValue::Exact(x) if x.bits() > self.max_bits => BoundValue::AtLeastPow2(x.bits() - 1),
            v => v,
        }
    }

    /// Number of memoized entries.
    pub fn memo_len(&self) -> usize {
        self.memo.values().map(Vec::len).sum()
    }

    /// Memoized entries as `(func, k, len, value)`.
    pub fn memo_entries(&self) -> Vec<(BoundFn, u64, u64, BoundValue)> {
        let mut out: Vec<_> = self
            .memo
            .iter()
            .flat_map(|(&(func, len), vs)| {
                vs.iter().enumerate().map(move |(i, v)| (func, i as u64 + 1, len, v.clone()))
            })
            .collect();
        out.sort_by_key(|e| (e.0, e.2, e.1));
        out
    }
}

/// The `k` argument of the `f2` term in the `f` recurrence, saturating.
fn inner_k(k: u64, len: u64) -> u64 {
    let ell = len - 1;
    2u64.saturating_mul(k).saturating_mul(2u64.saturating_mul(ell).saturating_add(5)).saturating_mul(k - 1)
}

/// `3 * 2^(k-1) - (k+1)`, the value of `g(k, 1)` for `k >= 2`.
pub fn g_len1_closed_form(k: u64) -> BigUint {
    assert!(k >= 2);
    (BigUint::from(3u32) << (k - 1) as usize) - BigUint::from(k + 1)
}
