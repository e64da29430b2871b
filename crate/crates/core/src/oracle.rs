//! Ground truth on products of projective spaces `P^{p_1} × ... × P^{p_m}`.
//!
//! `h^0` is a monomial count; intersection numbers are read off the top
//! coefficient in `Z[H_1..H_m] / (H_j^{p_j + 1})`.

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounds::EmbeddedVariety;
use crate::combinatorics::{binom, BigInteger};
use crate::error::{require, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiProjective {
    factor_dims: Vec<i64>,
}

impl MultiProjective {
    pub fn new(factor_dims: Vec<i64>) -> Result<Self> {
        require(!factor_dims.is_empty(), "at least one factor")?;
        require(factor_dims.iter().all(|&p| p >= 1), "every factor has dimension >= 1")?;
        let total: i64 = factor_dims.iter().sum();
        require(total <= 64, "total dimension <= 64")?;
        Ok(MultiProjective { factor_dims })
    }

    pub fn factor_dims(&self) -> &[i64] {
        &self.factor_dims
    }

    pub fn dim(&self) -> i64 {
        self.factor_dims.iter().sum()
    }

    /// `O(1, ..., 1)`, the Segre polarization.
    pub fn segre_class(&self) -> Multidegree {
        Multidegree::new(vec![1; self.factor_dims.len()])
    }

    /// `(n, r, d)` of the Segre embedding.
    pub fn segre_variety(&self) -> Result<EmbeddedVariety> {
        let n = self.dim();
        let h0 = h0_multidegree(self, &self.segre_class())?;
        let r = i64::try_from(h0 - 1 - n).map_err(|_| Error::Domain("codimension overflows i64".into()))?;
        let d = i64::try_from(segre_degree(self)).map_err(|_| Error::Domain("degree overflows i64".into()))?;
        EmbeddedVariety::new(n, r, d)
    }

    fn check(&self, deg: &Multidegree) -> Result<()> {
        require(
            deg.degrees.len() == self.factor_dims.len(),
            format!(
                "multidegree has {} entries but the space has {} factors",
                deg.degrees.len(),
                self.factor_dims.len()
            ),
        )
    }
}

/// The class `O(a_1, ..., a_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multidegree {
    pub degrees: Vec<i64>,
}

impl Multidegree {
    pub fn new(degrees: Vec<i64>) -> Self {
        Multidegree { degrees }
    }

    pub fn zero(len: usize) -> Self {
        Multidegree { degrees: vec![0; len] }
    }

    pub fn scaled(&self, c: i64) -> Self {
        Multidegree { degrees: self.degrees.iter().map(|a| a * c).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.degrees.len(), other.degrees.len(), "multidegree length mismatch");
        Multidegree { degrees: self.degrees.iter().zip(&other.degrees).map(|(&a, &b)| f(a, b)).collect() }
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, other: &Multidegree) -> Multidegree {
        self.zip(other, |a, b| a + b)
    }
}

impl Sub for &Multidegree {
    type Output = Multidegree;
    fn sub(self, other: &Multidegree) -> Multidegree {
        self.zip(other, |a, b| a - b)
    }
}

impl Neg for &Multidegree {
    type Output = Multidegree;
    fn neg(self) -> Multidegree {
        self.scaled(-1)
    }
}

/// `Π C(a_i + p_i, p_i)`, or `0` if some `a_i < 0`.
pub fn h0_multidegree(space: &MultiProjective, deg: &Multidegree) -> Result<BigInteger> {
    space.check(deg)?;
    if deg.degrees.iter().any(|&a| a < 0) {
        return Ok(BigInt::zero());
    }
    Ok(space
        .factor_dims
        .iter()
        .zip(&deg.degrees)
        .map(|(&p, &a)| binom(a + p, p))
        .product())
}

/// Top-degree coefficient of `Π_i (Σ_j a_ij H_j)` in the truncated ring.
pub fn intersection_number(space: &MultiProjective, classes: &[Multidegree]) -> Result<BigInteger> {
    let n = space.dim();
    require(
        classes.len() as i64 == n,
        format!("expected {n} classes, got {}", classes.len()),
    )?;
    for c in classes {
        space.check(c)?;
    }
    let caps: Vec<usize> = space.factor_dims.iter().map(|&p| p as usize).collect();
    // mixed radix: exponent e_j has weight stride_j, digits 0..=p_j
    let mut strides = Vec::with_capacity(caps.len());
    let mut size = 1usize;
    for &p in &caps {
        strides.push(size);
        size = size
            .checked_mul(p + 1)
            .filter(|&s| s <= 1 << 24)
            .ok_or_else(|| Error::Domain("truncated ring too large".into()))?;
    }
    let exponent = |idx: usize, j: usize| (idx / strides[j]) % (caps[j] + 1);

    let mut poly = vec![BigInt::zero(); size];
    poly[0] = BigInt::one();
    for class in classes {
        let mut next = vec![BigInt::zero(); size];
        for (idx, coeff) in poly.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (j, &a) in class.degrees.iter().enumerate() {
                if a != 0 && exponent(idx, j) < caps[j] {
                    next[idx + strides[j]] += coeff * a;
                }
            }
        }
        poly = next;
    }
    Ok(poly.pop().expect("ring is nonempty"))
}

/// `O(1,...,1)^n`, the multinomial `n! / Π p_i!`.
pub fn segre_degree(space: &MultiProjective) -> BigInteger {
    let classes = vec![space.segre_class(); space.dim() as usize];
    intersection_number(space, &classes).expect("segre classes match the space")
}
