//! Euler characteristics of `I(P_n x P_k)` by a signed transfer matrix.
//!
//! A column of height `k` contributes an independent row subset (a "state").
//! Consecutive columns must use disjoint states. Summing
//! `Π (-1)^{|S_i|}` over all admissible sequences `(S_1, ..., S_n)` evaluates
//! the independence polynomial of the grid at `-1`, and
//! `χ(I(P_n x P_k)) = 1 - Z`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub const MAX_K: u32 = 24;

// Up to this height the compatibility lists are stored explicitly; above it
// a subset-sum transform over all 2^k masks is applied instead.
const EXPLICIT_K: u32 = 12;

/// Row subsets of `{1..k}` without two consecutive rows, as bitmasks (bit
/// `i` is row `i + 1`), in increasing order.
pub fn column_states(k: u32) -> Result<Vec<u32>> {
    if k == 0 || k > MAX_K {
        return Err(Error::StatesOutOfRange(k));
    }
    Ok((0u32..1 << k).filter(|m| m & (m >> 1) == 0).collect())
}

/// What to do when 64-bit arithmetic overflows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OverflowPolicy {
    #[default]
    Escalate,
    Abort,
}

trait Exact: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Exact for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Exact for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

#[derive(Clone, Debug)]
pub struct TransferModel {
    k: u32,
    states: Vec<u32>,
    // compat[t] = indices s with states[s] & states[t] == 0
    compat: Option<Vec<Vec<u32>>>,
    // position of each mask in `states`, for the subset-sum path
    slot: Option<Vec<u32>>,
}

impl TransferModel {
    pub fn new(k: u32) -> Result<Self> {
        let states = column_states(k)?;
        let (compat, slot) = if k <= EXPLICIT_K {
            let compat = states
                .iter()
                .map(|&t| {
                    (0..states.len() as u32)
                        .filter(|&s| states[s as usize] & t == 0)
                        .collect()
                })
                .collect();
            (Some(compat), None)
        } else {
            let mut slot = vec![u32::MAX; 1 << k];
            for (i, &m) in states.iter().enumerate() {
                slot[m as usize] = i as u32;
            }
            (None, Some(slot))
        };
        Ok(Self {
            k,
            states,
            compat,
            slot,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn states(&self) -> &[u32] {
        &self.states
    }

    /// Matrix entry for the state pair `(s, t)` (indices into
    /// [`states`](Self::states)): `(-1)^{|t|}` when disjoint, else 0.
    pub fn entry(&self, s: usize, t: usize) -> i64 {
        let (a, b) = (self.states[s], self.states[t]);
        match (a & b == 0, b.count_ones() % 2 == 0) {
            (false, _) => 0,
            (true, true) => 1,
            (true, false) => -1,
        }
    }

    fn sign_vector<T: Exact>(&self) -> Option<Vec<T>> {
        self.states
            .iter()
            .map(|t| {
                if t.count_ones() % 2 == 0 {
                    Some(T::one())
                } else {
                    T::one().neg()
                }
            })
            .collect()
    }

    /// One column: `v'[t] = (-1)^{|t|} Σ_{s disjoint from t} v[s]`.
    fn step<T: Exact>(&self, v: &[T]) -> Option<Vec<T>> {
        let sums: Vec<T> = match (&self.compat, &self.slot) {
            (Some(compat), _) => compat
                .iter()
                .map(|list| {
                    list.iter()
                        .try_fold(T::zero(), |acc, &s| acc.add(&v[s as usize]))
                })
                .collect::<Option<_>>()?,
            (None, Some(slot)) => {
                let full = (1usize << self.k) - 1;
                let mut zeta: Vec<T> = slot
                    .iter()
                    .map(|&i| {
                        if i == u32::MAX {
                            T::zero()
                        } else {
                            v[i as usize].clone()
                        }
                    })
                    .collect();
                for bit in 0..self.k {
                    let b = 1usize << bit;
                    for m in 0..=full {
                        if m & b != 0 {
                            zeta[m] = zeta[m].add(&zeta[m ^ b])?;
                        }
                    }
                }
                self.states
                    .iter()
                    .map(|&t| zeta[full & !(t as usize)].clone())
                    .collect()
            }
            (None, None) => unreachable!("model has one representation"),
        };
        sums.into_iter()
            .zip(&self.states)
            .map(|(s, t)| {
                if t.count_ones() % 2 == 0 {
                    Some(s)
                } else {
                    s.neg()
                }
            })
            .collect()
    }

    fn chi_of<T: Exact>(v: &[T]) -> Option<T> {
        let z = v.iter().try_fold(T::zero(), |acc, x| acc.add(x))?;
        T::one().add(&z.neg()?)
    }

    /// `χ(I(Γ_{n,k}))` for `n = 1..=max_n`, in 64-bit arithmetic.
    pub fn sweep(&self, max_n: usize) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(max_n);
        let mut v: Vec<i64> = self.sign_vector().ok_or(Error::Overflow { n: 1 })?;
        for n in 1..=max_n {
            out.push(Self::chi_of(&v).ok_or(Error::Overflow { n })?);
            if n < max_n {
                v = self.step(&v).ok_or(Error::Overflow { n: n + 1 })?;
            }
        }
        Ok(out)
    }

    /// `χ(I(Γ_{n,k}))` in 64-bit arithmetic; overflow is an error.
    pub fn chi(&self, n: usize) -> Result<i64> {
        self.check_n(n)?;
        Ok(*self.sweep(n)?.last().expect("n >= 1"))
    }

    /// `χ(I(Γ_{n,k}))` in arbitrary precision.
    pub fn chi_exact(&self, n: usize) -> Result<BigInt> {
        self.check_n(n)?;
        let mut v: Vec<BigInt> = self.sign_vector().expect("bigint arithmetic is total");
        for _ in 1..n {
            v = self.step(&v).expect("bigint arithmetic is total");
        }
        Ok(Self::chi_of(&v).expect("bigint arithmetic is total"))
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 {
            Err(Error::EmptyGrid { n: 0, k: self.k })
        } else {
            Ok(())
        }
    }
}

/// `χ(I(Γ_{n,k}))`; falls back to arbitrary precision on overflow unless the
/// policy says to abort.
pub fn euler_chi(n: usize, k: u32, policy: OverflowPolicy) -> Result<BigInt> {
    let model = TransferModel::new(k)?;
    match (model.chi(n), policy) {
        (Ok(c), _) => Ok(BigInt::from(c)),
        (Err(Error::Overflow { .. }), OverflowPolicy::Escalate) => model.chi_exact(n),
        (Err(e), _) => Err(e),
    }
}

/// Smallest `p` with `χ(n + p) = χ(n)` for every `n` in `1..=max_n - p`,
/// searching `p <= max_n / 4` so the window spans at least four periods.
///
/// This only checks the window; it proves nothing about larger `n`.
pub fn period_detect(k: u32, max_n: usize) -> Result<Option<usize>> {
    let values = TransferModel::new(k)?.sweep(max_n)?;
    Ok(period_of(&values))
}

/// Minimal period of a finite sequence over windows of at least four periods.
pub fn period_of(values: &[i64]) -> Option<usize> {
    (1..=values.len() / 4).find(|&p| (0..values.len() - p).all(|i| values[i + p] == values[i]))
}
