// Copyright 2026 The pbr-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Small dense complex linear algebra.
//!
//! Vectors and square operators are stored densely. Kronecker products use
//! first-factor-major ordering: entry `i * dim(b) + k` of `a ⊗ b` holds
//! `a_i * b_k`, so `|0⟩ ⊗ |1⟩` is the second basis vector of the product
//! space.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use crate::tol::TOL_NORM;
use crate::{Error, Result};

/// A complex amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
}

impl Complex {
    /// Zero.
    pub const ZERO: Complex = Complex::new(0.0, 0.0);
    /// One.
    pub const ONE: Complex = Complex::new(1.0, 0.0);
    /// The imaginary unit.
    pub const I: Complex = Complex::new(0.0, 1.0);

    /// Creates `re + i·im`.
    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    /// A purely real amplitude.
    pub const fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    /// The unit phase `e^{iθ}`.
    pub fn cis(theta: f64) -> Self {
        let (s, c) = libm::sincos(theta);
        Complex::new(c, s)
    }

    /// `r·e^{iθ}`.
    pub fn from_polar(r: f64, theta: f64) -> Self {
        Complex::cis(theta).scale(r)
    }

    /// Complex conjugate.
    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    /// `|z|²`.
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// `|z|`.
    pub fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    /// Principal argument in `(-π, π]`.
    pub fn arg(self) -> f64 {
        let theta = libm::atan2(self.im, self.re);
        // atan2(-0.0, x<0) yields -π; fold it onto the closed end of the range.
        if theta <= -core::f64::consts::PI {
            core::f64::consts::PI
        } else {
            theta
        }
    }

    /// Multiplies by a real scalar.
    pub fn scale(self, k: f64) -> Self {
        Complex::new(self.re * k, self.im * k)
    }

    /// True when both components are finite.
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl From<f64> for Complex {
    fn from(re: f64) -> Self {
        Complex::real(re)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for Complex {
    fn add_assign(&mut self, rhs: Complex) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    fn mul(self, rhs: f64) -> Complex {
        self.scale(rhs)
    }
}

impl Div<f64> for Complex {
    type Output = Complex;
    fn div(self, rhs: f64) -> Complex {
        Complex::new(self.re / rhs, self.im / rhs)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

/// A dense state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex>,
}

impl StateVector {
    /// Wraps amplitudes; rejects empty or non-finite input.
    pub fn new(amplitudes: Vec<Complex>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Empty);
        }
        if !amplitudes.iter().all(|a| a.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(StateVector { amplitudes })
    }

    /// A real vector.
    pub fn from_real(values: &[f64]) -> Result<Self> {
        StateVector::new(values.iter().map(|&v| Complex::real(v)).collect())
    }

    /// The computational basis vector `e_index` in dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut amplitudes = alloc::vec![Complex::ZERO; dim];
        amplitudes[index] = Complex::ONE;
        StateVector { amplitudes }
    }

    pub(crate) fn from_vec_unchecked(amplitudes: Vec<Complex>) -> Self {
        debug_assert!(!amplitudes.is_empty());
        StateVector { amplitudes }
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// Amplitudes in basis order.
    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    /// Amplitude `i`.
    pub fn get(&self, i: usize) -> Complex {
        self.amplitudes[i]
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.amplitudes.iter().map(|a| a.norm_sqr()).sum())
    }

    /// True when the norm is within [`TOL_NORM`] of one.
    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= TOL_NORM
    }

    /// Returns the vector divided by its norm.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(self.map(|a| a / norm))
    }

    /// Multiplies every amplitude by `k`.
    pub fn scale(&self, k: Complex) -> Self {
        self.map(|a| a * k)
    }

    /// Adds `k·other` to `self`.
    pub fn axpy(&self, k: Complex, other: &StateVector) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        Ok(StateVector::from_vec_unchecked(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(&a, &b)| a + k * b)
                .collect(),
        ))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(&a, &b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        StateVector::from_vec_unchecked(self.amplitudes.iter().map(|&a| f(a)).collect())
    }
}

/// A dense square operator stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    dim: usize,
    entries: Vec<Complex>,
}

impl Operator {
    /// Builds an operator from row-major entries; the length must be a perfect square.
    pub fn from_row_major(entries: Vec<Complex>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        let dim = libm::sqrt(entries.len() as f64) as usize;
        let dim = (dim.saturating_sub(1)..=dim + 1)
            .find(|d| d * d == entries.len())
            .ok_or(Error::NotSquare { len: entries.len() })?;
        if !entries.iter().all(|a| a.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Operator { dim, entries })
    }

    /// Builds an operator whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[StateVector]) -> Result<Self> {
        let dim = columns.len();
        if dim == 0 {
            return Err(Error::Empty);
        }
        for c in columns {
            check_dims(dim, c.dim())?;
        }
        let mut entries = alloc::vec![Complex::ZERO; dim * dim];
        for (j, c) in columns.iter().enumerate() {
            for (i, &a) in c.amplitudes().iter().enumerate() {
                entries[i * dim + j] = a;
            }
        }
        Ok(Operator { dim, entries })
    }

    /// The identity in dimension `dim`.
    pub fn identity(dim: usize) -> Self {
        assert!(dim > 0, "identity needs a positive dimension");
        let mut entries = alloc::vec![Complex::ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex::ONE;
        }
        Operator { dim, entries }
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `⟨row|A|col⟩`.
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> StateVector {
        StateVector::from_vec_unchecked((0..self.dim).map(|i| self.get(i, j)).collect())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).conj());
            }
        }
        Operator { dim: n, entries }
    }

    /// Matrix product `self · rhs`.
    pub fn matmul(&self, rhs: &Operator) -> Result<Self> {
        check_dims(self.dim, rhs.dim)?;
        let n = self.dim;
        let mut entries = alloc::vec![Complex::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(Operator { dim: n, entries })
    }

    /// Applies the operator to a vector.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        check_dims(self.dim, v.dim())?;
        let n = self.dim;
        Ok(StateVector::from_vec_unchecked(
            (0..n)
                .map(|i| {
                    v.amplitudes()
                        .iter()
                        .enumerate()
                        .fold(Complex::ZERO, |acc, (k, &x)| acc + self.get(i, k) * x)
                })
                .collect(),
        ))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Operator) -> Result<f64> {
        check_dims(self.dim, other.dim)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Kronecker product with first-factor-major ordering.
pub trait Kron<Rhs = Self> {
    /// Result of the product.
    type Output;
    /// `self ⊗ rhs`.
    fn kron(&self, rhs: &Rhs) -> Self::Output;
}

impl Kron for StateVector {
    type Output = StateVector;

    fn kron(&self, rhs: &StateVector) -> StateVector {
        let mut out = Vec::with_capacity(self.dim() * rhs.dim());
        for &a in self.amplitudes() {
            for &b in rhs.amplitudes() {
                out.push(a * b);
            }
        }
        StateVector::from_vec_unchecked(out)
    }
}

impl Kron for Operator {
    type Output = Operator;

    fn kron(&self, rhs: &Operator) -> Operator {
        let (na, nb) = (self.dim, rhs.dim);
        let n = na * nb;
        let mut entries = alloc::vec![Complex::ZERO; n * n];
        for i in 0..na {
            for j in 0..na {
                let a = self.get(i, j);
                for k in 0..nb {
                    for l in 0..nb {
                        entries[(i * nb + k) * n + (j * nb + l)] = a * rhs.get(k, l);
                    }
                }
            }
        }
        Operator { dim: n, entries }
    }
}

/// `⟨u|v⟩`, conjugate-linear in `u`.
pub fn inner_product(u: &StateVector, v: &StateVector) -> Result<Complex> {
    check_dims(u.dim(), v.dim())?;
    Ok(u.amplitudes()
        .iter()
        .zip(v.amplitudes())
        .fold(Complex::ZERO, |acc, (&a, &b)| acc + a.conj() * b))
}

/// Outcome of [`is_unitary`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitarityCheck {
    /// Whether the residual is within tolerance.
    pub unitary: bool,
    /// Max-entry modulus of `U†U − I`.
    pub residual: f64,
}

/// Checks `U†U = I` entrywise within `tol`.
pub fn is_unitary(u: &Operator, tol: f64) -> UnitarityCheck {
    let n = u.dim();
    let mut residual = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex::ZERO;
            for k in 0..n {
                acc += u.get(k, i).conj() * u.get(k, j);
            }
            if i == j {
                acc = acc - Complex::ONE;
            }
            residual = residual.max(acc.abs());
        }
    }
    UnitarityCheck {
        unitary: residual <= tol,
        residual,
    }
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimMismatch { left, right })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use core::f64::consts::FRAC_1_SQRT_2;
    use proptest::prelude::*;

    fn arb_state(dim: usize) -> impl Strategy<Value = StateVector> {
        proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), dim)
            .prop_filter("nonzero", |v| v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3))
            .prop_map(|v| {
                StateVector::new(v.into_iter().map(|(re, im)| Complex::new(re, im)).collect())
                    .unwrap()
                    .normalized()
                    .unwrap()
            })
    }

    #[test]
    fn kron_basis_ordering_is_first_factor_major() {
        let e0 = StateVector::basis(2, 0);
        let e1 = StateVector::basis(2, 1);
        assert_eq!(e0.kron(&e1), StateVector::basis(4, 1));
        assert_eq!(e1.kron(&e0), StateVector::basis(4, 2));
    }

    #[test]
    fn kron_identities() {
        assert_eq!(Operator::identity(2).kron(&Operator::identity(2)), Operator::identity(4));
    }

    #[test]
    fn kron_of_orthogonal_pair_halves() {
        let h = FRAC_1_SQRT_2;
        let psi = StateVector::from_real(&[h, h]).unwrap();
        let phi = StateVector::from_real(&[h, -h]).unwrap();
        let expected = StateVector::from_real(&[0.5, -0.5, 0.5, -0.5]).unwrap();
        assert!(psi.kron(&phi).max_abs_diff(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn operator_kron_matches_vector_kron() {
        let a = Operator::from_row_major(vec![
            Complex::new(1.0, 2.0),
            Complex::new(0.0, -1.0),
            Complex::new(3.0, 0.5),
            Complex::new(-2.0, 0.0),
        ])
        .unwrap();
        let b = Operator::from_row_major(vec![
            Complex::new(0.5, 0.0),
            Complex::new(1.0, 1.0),
            Complex::new(0.0, 2.0),
            Complex::new(-1.0, 0.0),
        ])
        .unwrap();
        let u = StateVector::new(vec![Complex::new(1.0, 0.0), Complex::new(0.3, -0.7)]).unwrap();
        let v = StateVector::new(vec![Complex::new(-0.2, 0.1), Complex::new(0.0, 1.0)]).unwrap();
        let lhs = a.kron(&b).apply(&u.kron(&v)).unwrap();
        let rhs = a.apply(&u).unwrap().kron(&b.apply(&v).unwrap());
        assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-14);
    }

    #[test]
    fn inner_product_basics() {
        let e0 = StateVector::basis(3, 0);
        let e1 = StateVector::basis(3, 1);
        assert_eq!(inner_product(&e0, &e1).unwrap(), Complex::ZERO);
        let u = StateVector::new(vec![Complex::I, Complex::ZERO]).unwrap();
        let v = StateVector::new(vec![Complex::ONE, Complex::ZERO]).unwrap();
        // conjugate-linear in the first slot
        assert_eq!(inner_product(&u, &v).unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(
            inner_product(&e0, &u),
            Err(Error::DimMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn identity_is_unitary_with_zero_residual() {
        let check = is_unitary(&Operator::identity(4), TOL_NORM);
        assert!(check.unitary);
        assert_eq!(check.residual, 0.0);
    }

    #[test]
    fn operator_rejects_bad_shapes() {
        assert_eq!(Operator::from_row_major(vec![]), Err(Error::Empty));
        assert_eq!(
            Operator::from_row_major(vec![Complex::ONE; 3]),
            Err(Error::NotSquare { len: 3 })
        );
        assert_eq!(
            StateVector::new(vec![Complex::new(f64::NAN, 0.0)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn adjoint_and_matmul() {
        let a = Operator::from_row_major(vec![
            Complex::new(0.0, 1.0),
            Complex::new(2.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(1.0, -1.0),
        ])
        .unwrap();
        let adj = a.adjoint();
        assert_eq!(adj.get(0, 0), Complex::new(0.0, -1.0));
        assert_eq!(adj.get(1, 0), Complex::new(2.0, 0.0));
        let p = a.matmul(&Operator::identity(2)).unwrap();
        assert_eq!(p, a);
    }

    #[test]
    fn arg_range_is_half_open_at_minus_pi() {
        assert_eq!(Complex::new(-1.0, -0.0).arg(), core::f64::consts::PI);
        assert_eq!(Complex::new(-1.0, 0.0).arg(), core::f64::consts::PI);
    }

    proptest! {
        #[test]
        fn kron_is_associative(a in arb_state(2), b in arb_state(3), c in arb_state(2)) {
            let left = a.kron(&b).kron(&c);
            let right = a.kron(&b.kron(&c));
            prop_assert!(left.max_abs_diff(&right).unwrap() < 1e-15);
        }

        #[test]
        fn inner_product_factorizes_over_kron(
            u1 in arb_state(2), u2 in arb_state(3), v1 in arb_state(2), v2 in arb_state(3)
        ) {
            let lhs = inner_product(&u1.kron(&u2), &v1.kron(&v2)).unwrap();
            let rhs = inner_product(&u1, &v1).unwrap() * inner_product(&u2, &v2).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }

        #[test]
        fn self_overlap_is_one(u in arb_state(5)) {
            let z = inner_product(&u, &u).unwrap();
            prop_assert!((z.re - 1.0).abs() < 1e-12 && z.im.abs() < 1e-12);
        }

        #[test]
        fn unitary_implies_orthonormal_columns(theta in -3.2..3.2f64, phi in -3.2..3.2f64, lam in -3.2..3.2f64) {
            // generic single-qubit unitary
            let (c, s) = (libm::cos(theta / 2.0), libm::sin(theta / 2.0));
            let u = Operator::from_row_major(vec![
                Complex::real(c),
                -Complex::cis(lam) * s,
                Complex::cis(phi) * s,
                Complex::cis(phi + lam) * c,
            ]).unwrap();
            let u = u.kron(&u);
            let check = is_unitary(&u, TOL_NORM);
            prop_assert!(check.unitary);
            for i in 0..4 {
                for j in 0..4 {
                    let z = inner_product(&u.column(i), &u.column(j)).unwrap();
                    let target = if i == j { 1.0 } else { 0.0 };
                    prop_assert!((z - Complex::real(target)).abs() <= TOL_NORM);
                }
            }
        }
    }
}
