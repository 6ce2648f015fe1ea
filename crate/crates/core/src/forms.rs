//! Alternating bilinear forms and ordered tuples of them.
//!
//! The space `B_n` of alternating forms on `F^n` has the fixed basis
//! `ψ_ij` (`i < j`, lexicographic), where `ψ_ij` has `+1` at `(i, j)` and
//! `-1` at `(j, i)`. Coordinates of a form are taken in this basis, so a form
//! is the vector of its strictly upper triangular entries.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::field::as_integer;
use crate::linalg::{kernel_basis, Field, Matrix, PrimeField, Rationals, Subspace};
use crate::rng;

/// `dim B_n = n(n-1)/2`.
pub fn form_space_dim(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `ψ_ij` (`i < j`, 0-based) in the standard basis of `B_n`.
pub fn coordinate_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Pairs `(i, j)` with `i < j` in coordinate order.
pub fn coordinate_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingForm<F: Field> {
    matrix: Matrix<F>,
}

impl<F: Field> AlternatingForm<F> {
    pub fn new(matrix: Matrix<F>) -> Result<Self> {
        if !matrix.is_alternating() {
            return Err(Error::NotAlternating);
        }
        Ok(AlternatingForm { matrix })
    }

    pub fn zero(field: &F, n: usize) -> Self {
        AlternatingForm {
            matrix: Matrix::zeros(field, n, n),
        }
    }

    /// The basis form `ψ_ij` (0-based, `i < j`).
    pub fn standard(field: &F, n: usize, i: usize, j: usize) -> Self {
        assert!(i < j && j < n, "ψ_ij needs i < j < n");
        let mut m = Matrix::zeros(field, n, n);
        m.set(i, j, field.one());
        m.set(j, i, field.neg(&field.one()));
        AlternatingForm { matrix: m }
    }

    pub fn from_coordinates(field: &F, n: usize, coords: &[F::Elem]) -> Result<Self> {
        if coords.len() != form_space_dim(n) {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for B_{n} of dimension {}",
                coords.len(),
                form_space_dim(n)
            )));
        }
        let mut m = Matrix::zeros(field, n, n);
        for ((i, j), c) in coordinate_pairs(n).zip(coords) {
            m.set(i, j, c.clone());
            m.set(j, i, field.neg(c));
        }
        Ok(AlternatingForm { matrix: m })
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> &F {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &F::Elem {
        self.matrix.get(i, j)
    }

    /// `xᵀ A y`.
    pub fn evaluate(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<F::Elem> {
        if x.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a form on F^{}",
                x.len(),
                self.n()
            )));
        }
        let ay = self.matrix.mul_vec(y)?;
        Ok(self.field().dot(x, &ay))
    }

    pub fn coordinates(&self) -> Vec<F::Elem> {
        coordinate_pairs(self.n())
            .map(|(i, j)| self.matrix.get(i, j).clone())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(AlternatingForm {
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        AlternatingForm {
            matrix: self.matrix.scale(s),
        }
    }

    /// Radical `{x : φ(x, ·) = 0}`.
    pub fn radical(&self) -> Subspace<F> {
        kernel_basis(&self.matrix)
    }
}

/// `φ(x, y) = Σ_{i<j} c_ij (x_i y_j - x_j y_i)` straight from coordinates.
pub fn evaluate_coordinates<F: Field>(
    field: &F,
    n: usize,
    coords: &[F::Elem],
    x: &[F::Elem],
    y: &[F::Elem],
) -> F::Elem {
    coordinate_pairs(n).zip(coords).fold(field.zero(), |acc, ((i, j), c)| {
        let minor = field.sub(&field.mul(&x[i], &y[j]), &field.mul(&x[j], &y[i]));
        field.add(&acc, &field.mul(c, &minor))
    })
}

/// An ordered tuple `Φ = (φ_1, ..., φ_t)` of alternating forms on `F^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormTuple<F: Field> {
    field: F,
    n: usize,
    forms: Vec<AlternatingForm<F>>,
}

impl<F: Field> FormTuple<F> {
    pub fn new(field: &F, n: usize, forms: Vec<AlternatingForm<F>>) -> Result<Self> {
        if let Some(f) = forms.iter().find(|f| f.n() != n) {
            return Err(Error::DimensionMismatch(format!(
                "form of size {} in a tuple on F^{n}",
                f.n()
            )));
        }
        Ok(FormTuple {
            field: field.clone(),
            n,
            forms,
        })
    }

    /// Builds a tuple from integer matrices, validating that each is alternating.
    pub fn from_i64(field: &F, n: usize, mats: &[Vec<Vec<i64>>]) -> Result<Self> {
        let forms = mats
            .iter()
            .map(|m| {
                if m.len() != n || m.iter().any(|r| r.len() != n) {
                    return Err(Error::DimensionMismatch(format!("expected {n}x{n} matrices")));
                }
                AlternatingForm::new(Matrix::from_i64(field, m))
            })
            .collect::<Result<_>>()?;
        Self::new(field, n, forms)
    }

    /// Rows of `coords` are form coordinates.
    pub fn from_coordinate_rows(field: &F, n: usize, coords: &Matrix<F>) -> Result<Self> {
        let forms = coords
            .row_vecs()
            .map(|r| AlternatingForm::from_coordinates(field, n, r))
            .collect::<Result<_>>()?;
        Self::new(field, n, forms)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[AlternatingForm<F>] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &AlternatingForm<F> {
        &self.forms[i]
    }

    /// The `t × n(n-1)/2` matrix whose rows are form coordinates.
    pub fn vectorization(&self) -> Matrix<F> {
        let rows = self.forms.iter().map(|f| f.coordinates()).collect();
        Matrix::from_rows(&self.field, form_space_dim(self.n), rows).expect("coordinate rows")
    }

    pub fn rank(&self) -> usize {
        self.vectorization().rank()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.t()
    }

    /// `span Φ` as a subspace of coordinate space.
    pub fn span(&self) -> Subspace<F> {
        Subspace::row_space(&self.vectorization())
    }

    /// `(φ_1(x, y), ..., φ_t(x, y))`.
    pub fn evaluate_all(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.forms.iter().map(|f| f.evaluate(x, y)).collect()
    }

    /// `φ'_i = Σ_j c[i][j] φ_j` for an invertible `t × t` matrix `c`.
    pub fn change_basis(&self, c: &Matrix<F>) -> Result<Self> {
        let t = self.t();
        if c.rows() != t || c.cols() != t {
            return Err(Error::DimensionMismatch(format!(
                "basis change of size {}x{} for {t} forms",
                c.rows(),
                c.cols()
            )));
        }
        if c.rank() < t {
            return Err(Error::Singular);
        }
        let coords = c.mul(&self.vectorization())?;
        Self::from_coordinate_rows(&self.field, self.n, &coords)
    }

    pub fn spans_equal(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "tuples on F^{} and F^{}",
                self.n, other.n
            )));
        }
        Ok(self.span() == other.span())
    }

    /// Every form that vanishes on `U`, intersected with `span Φ`.
    pub fn n0_intersection(&self, u: &Subspace<F>) -> Result<Subspace<F>> {
        if u.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} for forms on F^{}",
                u.ambient_dim(),
                self.n
            )));
        }
        n0_space(u).intersect(&self.span())
    }
}

impl FormTuple<Rationals> {
    /// Reduces an integral tuple modulo `p` (forms may become dependent).
    pub fn reduce_mod(&self, fp: &PrimeField) -> Result<FormTuple<PrimeField>> {
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let m = f.matrix.convert(fp, |q| fp.reduce_rational(q))?;
                Ok(AlternatingForm { matrix: m })
            })
            .collect::<Result<_>>()?;
        FormTuple::new(fp, self.n, forms)
    }

    /// Integer entries, if every entry is an integer.
    pub fn integer_entries(&self) -> Option<Vec<Vec<Vec<BigInt>>>> {
        self.forms
            .iter()
            .map(|f| {
                (0..self.n)
                    .map(|i| {
                        (0..self.n)
                            .map(|j| as_integer(f.entry(i, j)).cloned())
                            .collect::<Option<Vec<_>>>()
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect()
    }

    pub fn to_json_value(&self) -> Result<FormTupleJson> {
        let ints = self
            .integer_entries()
            .ok_or_else(|| Error::Precondition("JSON form tuples must have integer entries".into()))?;
        let forms = ints
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|v| {
                                v.to_i64()
                                    .ok_or_else(|| Error::Precondition(format!("entry {v} exceeds 64 bits")))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(FormTupleJson {
            n: self.n,
            t: self.t(),
            forms,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(&self.to_json_value()?).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: FormTupleJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_tuple()
    }
}

/// On-disk shape of a form tuple: `{"n": .., "t": .., "forms": [[[..]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTupleJson {
    pub n: usize,
    pub t: usize,
    pub forms: Vec<Vec<Vec<i64>>>,
}

impl FormTupleJson {
    pub fn into_tuple(self) -> Result<FormTuple<Rationals>> {
        if self.forms.len() != self.t {
            return Err(Error::Parse(format!(
                "t = {} but {} forms given",
                self.t,
                self.forms.len()
            )));
        }
        FormTuple::from_i64(&Rationals, self.n, &self.forms)
    }
}

/// `N_0(U) = {φ ∈ B_n : φ(x, u) = 0 for all x ∈ V, u ∈ U}` in form coordinates.
///
/// Solved directly as linear constraints `φ(e_a, u) = 0` on the coordinates;
/// the result has dimension `(n-k)(n-k-1)/2` for `k = dim U`.
pub fn n0_space<F: Field>(u: &Subspace<F>) -> Subspace<F> {
    let f = u.field();
    let n = u.ambient_dim();
    let dim = form_space_dim(n);
    let mut rows = Vec::with_capacity(n * u.dim());
    for vec in u.vectors() {
        for a in 0..n {
            // φ(e_a, u) = Σ_b φ_ab u_b, with φ_ab = c_ab (a<b) and -c_ba (a>b)
            let mut row = vec![f.zero(); dim];
            for (b, ub) in vec.iter().enumerate() {
                if a < b {
                    row[coordinate_index(n, a, b)] = ub.clone();
                } else if b < a {
                    row[coordinate_index(n, b, a)] = f.neg(ub);
                }
            }
            rows.push(row);
        }
    }
    let constraints = Matrix::from_rows(f, dim, rows).expect("constraint rows");
    let result = kernel_basis(&constraints);
    debug_assert_eq!(result.dim(), form_space_dim(n - u.dim()));
    result
}

/// Random tuple with strictly upper triangular entries uniform in
/// `[-bound, bound]`, resampled until the forms are linearly independent.
pub fn random_tuple(n: usize, t: usize, bound: i64, seed: u64) -> Result<FormTuple<Rationals>> {
    random_tuple_with(&mut rng::seeded(seed), n, t, bound)
}

pub fn random_tuple_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    t: usize,
    bound: i64,
) -> Result<FormTuple<Rationals>> {
    if t == 0 || t > form_space_dim(n) {
        return Err(Error::Precondition(format!(
            "need 1 <= t <= {} for n = {n}, got t = {t}",
            form_space_dim(n)
        )));
    }
    if bound < 1 {
        return Err(Error::Precondition(format!("entry bound must be >= 1, got {bound}")));
    }
    let q = Rationals;
    loop {
        let forms = (0..t)
            .map(|_| {
                let coords: Vec<_> = (0..form_space_dim(n))
                    .map(|_| q.from_i64(rng.random_range(-bound..=bound)))
                    .collect();
                AlternatingForm::from_coordinates(&q, n, &coords)
            })
            .collect::<Result<Vec<_>>>()?;
        let tuple = FormTuple::new(&q, n, forms)?;
        if tuple.is_independent() {
            return Ok(tuple);
        }
    }
}
