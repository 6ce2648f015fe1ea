use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::field::{Field, PrimeField, Residue};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Default refusal threshold for exhaustive subspace enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// A linear subspace of `F^n`, stored as its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// basis matrices are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Row space of `m`.
    pub fn row_space(m: &Matrix<F>) -> Self {
        let r = m.rref();
        Subspace {
            basis: r.reduced.truncate_rows(r.rank),
        }
    }

    pub fn span(field: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Result<Self> {
        Ok(Self::row_space(&Matrix::from_rows(field, ambient, vectors)?))
    }

    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Span of the first `k` standard basis vectors.
    pub fn coordinate(field: &F, ambient: usize, k: usize) -> Self {
        let mut b = Matrix::zeros(field, k, ambient);
        for i in 0..k {
            b.set(i, i, field.one());
        }
        Subspace { basis: b }
    }

    /// Caller guarantees `basis` is already in reduced row echelon form with
    /// no zero rows.
    pub(crate) fn from_rref_unchecked(basis: Matrix<F>) -> Self {
        debug_assert_eq!(basis.rref().reduced, basis);
        debug_assert_eq!(basis.rank(), basis.rows());
        Subspace { basis }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[F::Elem]> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let f = self.field();
        self.vectors()
            .map(|v| v.iter().position(|x| !f.is_zero(x)).expect("basis rows are nonzero"))
            .collect()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        // reduce v against the echelon basis
        let f = self.field();
        let mut w = v.to_vec();
        for (row, piv) in self.vectors().zip(self.pivots()) {
            if f.is_zero(&w[piv]) {
                continue;
            }
            let c = w[piv].clone();
            for (x, b) in w.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&c, b));
            }
        }
        w.iter().all(|x| f.is_zero(x))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.vectors().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// `{x : <a, x> = 0 for all a in self}` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        kernel_basis(&self.basis)
    }

    /// `self ∩ other`, computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let stacked = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        Ok(kernel_basis(&stacked))
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}", self.basis)
    }
}

/// `{x : m x = 0}` with its canonical basis.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let f = m.field();
    let r = m.rref();
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (i, &pc) in r.pivots.iter().enumerate() {
                v[pc] = f.neg(r.reduced.get(i, fc));
            }
            v
        })
        .collect();
    Subspace::row_space(&Matrix::from_rows(f, n, vectors).expect("kernel vectors have ambient length"))
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// Every `dim`-dimensional subspace of `F_p^ambient`, each exactly once.
///
/// Subspaces are produced as RREF patterns, ordered lexicographically by
/// pivot column set and then by the free entries (row-major, earlier entries
/// more significant). Refuses when the count exceeds `cap`.
pub fn enumerate_subspaces(
    field: &PrimeField,
    ambient: usize,
    dim: usize,
    cap: u64,
) -> Result<impl Iterator<Item = Subspace<PrimeField>> + '_> {
    if dim > ambient {
        return Err(Error::Precondition(format!(
            "no {dim}-dimensional subspaces of F^{ambient}"
        )));
    }
    let count = gaussian_binomial(ambient, dim, field.modulus());
    if count.to_u64().is_none_or(|c| c > cap) {
        return Err(Error::EnumerationCap { count, cap });
    }
    let p = field.modulus();
    Ok((0..ambient).combinations(dim).flat_map(move |pivots| {
        let free: Vec<(usize, usize)> = (0..dim)
            .flat_map(|i| {
                let pivots = &pivots;
                (pivots[i] + 1..ambient)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let total = p.pow(free.len() as u32);
        (0..total).map(move |mut code| {
            let mut m = Matrix::zeros(field, dim, ambient);
            for (i, &c) in pivots.iter().enumerate() {
                m.set(i, c, field.one());
            }
            // last free entry is the least significant digit
            for &(i, c) in free.iter().rev() {
                m.set(i, c, Residue(code % p));
                code /= p;
            }
            Subspace::from_rref_unchecked(m)
        })
    }))
}
