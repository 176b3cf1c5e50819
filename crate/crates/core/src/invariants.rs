//! Exact Seidel characteristic polynomial.
//!
//! The Seidel matrix has zero diagonal, `-1` for adjacent pairs and `+1` for
//! non-adjacent pairs (`J - I - 2A`). Switching by `S` conjugates it by the
//! diagonal `±1` matrix that is `-1` on `S`, so its characteristic
//! polynomial is constant on switching classes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{check_bound, Error, Result};
use crate::graph::Graph;

pub const MAX_POLY_ORDER: usize = 16;

/// Monic integer polynomial, coefficients stored constant term first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        match coefficients.last() {
            Some(lead) if lead.is_one() => Ok(IntPolynomial { coefficients }),
            _ => Err(Error::Precondition("polynomial must be monic".into())),
        }
    }

    pub fn from_i64(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    /// Coefficients as `i64`, or `None` if any does not fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coefficients.iter().map(|c| c.to_i64()).collect()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if c < &BigInt::zero() { -c } else { c.clone() };
            if first {
                if c < &BigInt::zero() {
                    f.write_str("-")?;
                }
            } else if c < &BigInt::zero() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{magnitude}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{magnitude}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

pub fn seidel_matrix(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, g.has_edge(i, j)) {
                    (true, _) => 0,
                    (false, true) => -1,
                    (false, false) => 1,
                })
                .collect()
        })
        .collect()
}

/// `det(xI - S)` by the Faddeev–LeVerrier recurrence
/// `M_k = S M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(S M_k) / k`.
/// The division is exact at every step. Runs in checked `i128` and redoes
/// the computation with big integers if anything overflows.
pub fn seidel_char_poly(g: &Graph) -> Result<IntPolynomial> {
    let n = g.order();
    check_bound("seidel_char_poly", n, MAX_POLY_ORDER)?;
    let s = seidel_matrix(g);
    let coefficients = match faddeev_leverrier_i128(&s) {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => faddeev_leverrier_big(&s),
    };
    IntPolynomial::new(coefficients)
}

/// `sum_l s[i][l] * m[l][j]` for a `±1/0` matrix `s`.
fn signed_sum<T, F>(srow: &[i64], mut entry: F, zero: T) -> Option<T>
where
    F: FnMut(usize) -> Option<T>,
    T: SignedAcc,
{
    let mut acc = zero;
    for (l, &sil) in srow.iter().enumerate() {
        match sil {
            1 => acc = acc.add(entry(l)?)?,
            -1 => acc = acc.sub(entry(l)?)?,
            _ => {}
        }
    }
    Some(acc)
}

trait SignedAcc: Sized {
    fn add(self, other: Self) -> Option<Self>;
    fn sub(self, other: Self) -> Option<Self>;
}

impl SignedAcc for i128 {
    fn add(self, other: Self) -> Option<Self> {
        self.checked_add(other)
    }
    fn sub(self, other: Self) -> Option<Self> {
        self.checked_sub(other)
    }
}

impl SignedAcc for BigInt {
    fn add(self, other: Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub(self, other: Self) -> Option<Self> {
        Some(self - other)
    }
}

fn faddeev_leverrier_i128(s: &[Vec<i64>]) -> Option<Vec<i128>> {
    let n = s.len();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut v = signed_sum(&s[i], |l| Some(m[l][j]), 0i128)?;
                if i == j {
                    v = v.checked_add(c[n - k + 1])?;
                }
                next[i][j] = v;
            }
        }
        m = next;
        let mut trace = 0i128;
        for i in 0..n {
            trace = trace.checked_add(signed_sum(&s[i], |l| Some(m[l][i]), 0i128)?)?;
        }
        let k = k as i128;
        debug_assert_eq!(trace % k, 0);
        c[n - k as usize] = -(trace / k);
    }
    Some(c)
}

fn faddeev_leverrier_big(s: &[Vec<i64>]) -> Vec<BigInt> {
    let n = s.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut v = signed_sum(&s[i], |l| Some(m[l][j].clone()), BigInt::zero()).expect("no overflow");
                if i == j {
                    v += &c[n - k + 1];
                }
                next[i][j] = v;
            }
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            trace += signed_sum(&s[i], |l| Some(m[l][i].clone()), BigInt::zero()).expect("no overflow");
        }
        let divisor = BigInt::from(k);
        debug_assert!((&trace % &divisor).is_zero());
        c[n - k] = -(trace / divisor);
    }
    c
}

/// Necessary condition for Seidel equivalence: equal order and equal Seidel
/// polynomial. Used to bucket candidates, never as the final equality test.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSignature {
    pub order: usize,
    pub poly: IntPolynomial,
}

pub fn class_signature(g: &Graph) -> Result<ClassSignature> {
    Ok(ClassSignature {
        order: g.order(),
        poly: seidel_char_poly(g)?,
    })
}
