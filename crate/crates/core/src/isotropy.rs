//! Common isotropic subspaces of a form tuple, which are the abelian
//! subalgebras of `L(Φ)` modulo `S`.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{AlternatingForm, FormTuple};
use crate::linalg::{enumerate_subspaces, kernel_basis, Field, Matrix, PrimeField, Subspace};
use crate::rng;

fn check_t(t: usize) -> Result<()> {
    if t < 2 {
        return Err(Error::Precondition(format!(
            "isotropic dimension bounds need t >= 2, got t = {t}"
        )));
    }
    Ok(())
}

/// Largest `k` with `2n >= t(k-1) + 2k`, i.e. `⌊(2n + t)/(t + 2)⌋`.
pub fn bound_k(n: usize, t: usize) -> Result<usize> {
    check_t(t)?;
    Ok((2 * n + t) / (t + 2))
}

/// Dimension of a commutative subalgebra guaranteed over an algebraically
/// closed field: `⌊(2n + t² + 3t)/(t + 2)⌋`.
pub fn bound_s(n: usize, t: usize) -> Result<usize> {
    check_t(t)?;
    Ok((2 * n + t * t + 3 * t) / (t + 2))
}

/// Maximal abelian subalgebra dimension of the Heisenberg algebra of odd
/// dimension `m`: `(m + 1)/2`.
pub fn heisenberg_abelian_dim(m: usize) -> Result<usize> {
    if m.is_multiple_of(2) {
        return Err(Error::Precondition(format!("Heisenberg algebras have odd dimension, got {m}")));
    }
    Ok(m.div_ceil(2))
}

/// The `t × n` matrix with entries `φ_i(e_j, x)`. Its kernel is the set of
/// `y` with `φ_i(y, x) = 0` for every `i`, and always contains `x`.
pub fn commutation_matrix<F: Field>(phi: &FormTuple<F>, x: &[F::Elem]) -> Result<Matrix<F>> {
    let n = phi.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!("vector of length {} for n = {n}", x.len())));
    }
    let rows = phi
        .forms()
        .iter()
        .map(|form| form.matrix().mul_vec(x))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(phi.field(), n, rows)
}

/// Whether every form vanishes on every pair of basis vectors of `u`.
pub fn is_isotropic<F: Field>(phi: &FormTuple<F>, u: &Subspace<F>) -> bool {
    if u.ambient_dim() != phi.n() {
        return false;
    }
    let f = phi.field();
    let vs: Vec<&[F::Elem]> = u.vectors().collect();
    phi.forms().iter().all(|form: &AlternatingForm<F>| {
        vs.iter().enumerate().all(|(a, x)| {
            vs[a + 1..]
                .iter()
                .all(|y| form.evaluate(x, y).is_ok_and(|v| f.is_zero(&v)))
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicCertificate<F: Field> {
    pub subspace: Subspace<F>,
    pub verified: bool,
}

impl<F: Field> IsotropicCertificate<F> {
    pub fn check(phi: &FormTuple<F>, subspace: Subspace<F>) -> Self {
        let verified = is_isotropic(phi, &subspace);
        IsotropicCertificate { subspace, verified }
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

/// `{y : φ_i(w, y) = 0 for all i and all w in the basis of W}`.
fn orthogonal<F: Field>(phi: &FormTuple<F>, w: &Subspace<F>) -> Result<Subspace<F>> {
    let n = phi.n();
    let mut stacked = Matrix::zeros(phi.field(), 0, n);
    for v in w.vectors() {
        stacked = stacked.vstack(&commutation_matrix(phi, v)?)?;
    }
    Ok(kernel_basis(&stacked))
}

/// Coefficients of random extension vectors lie in `[-B, B]`.
const EXTENSION_BOUND: i64 = 3;
/// Random draws per extension step before falling back to the first
/// admissible kernel vector.
const EXTENSION_ATTEMPTS: usize = 64;

/// One greedy run. With `rng = None` the extension vector is the first
/// kernel basis vector outside `W`; otherwise a random combination of the
/// kernel basis.
fn greedy_run<F: Field, R: Rng + ?Sized>(phi: &FormTuple<F>, mut rng: Option<&mut R>) -> Result<Subspace<F>> {
    let f = phi.field();
    let n = phi.n();
    let mut w = Subspace::zero(f, n);
    loop {
        let k = orthogonal(phi, &w)?;
        if k.dim() == w.dim() {
            return Ok(w);
        }
        let first = k
            .vectors()
            .find(|v| !w.contains(v))
            .expect("kernel strictly contains W")
            .to_vec();
        let mut next = first.clone();
        if let Some(rng) = rng.as_deref_mut() {
            let kv: Vec<&[F::Elem]> = k.vectors().collect();
            for _ in 0..EXTENSION_ATTEMPTS {
                let mut v = vec![f.zero(); n];
                for b in &kv {
                    let c = f.from_i64(rng.random_range(-EXTENSION_BOUND..=EXTENSION_BOUND));
                    for (x, y) in v.iter_mut().zip(b.iter()) {
                        *x = f.add(x, &f.mul(&c, y));
                    }
                }
                if !w.contains(&v) {
                    next = v;
                    break;
                }
            }
        }
        let mut rows: Vec<Vec<F::Elem>> = w.vectors().map(|v| v.to_vec()).collect();
        rows.push(next);
        w = Subspace::span(f, n, rows)?;
    }
}

/// Greedy common isotropic subspace: a deterministic run plus `restarts`
/// randomized runs, each on its own stream of `seed`. Keeps the largest
/// result, earliest run on ties. The dimension is at least `⌈n/(t+1)⌉`.
pub fn greedy_isotropic<F: Field>(phi: &FormTuple<F>, seed: u64, restarts: usize) -> Result<IsotropicCertificate<F>> {
    let runs: Vec<Subspace<F>> = (0..=restarts as u64)
        .into_par_iter()
        .map(|i| {
            if i == 0 {
                greedy_run::<F, rand_chacha::ChaCha8Rng>(phi, None)
            } else {
                let mut r = rng::trial_rng(seed, i);
                greedy_run(phi, Some(&mut r))
            }
        })
        .collect::<Result<_>>()?;
    let mut best = 0;
    for (i, w) in runs.iter().enumerate() {
        if w.dim() > runs[best].dim() {
            best = i;
        }
    }
    let best = runs.into_iter().nth(best).expect("at least one run");
    Ok(IsotropicCertificate::check(phi, best))
}

/// A `k`-dimensional common isotropic subspace of `F_p^n`, or `None` if
/// exhaustive enumeration finds none.
pub fn max_isotropic_fp(phi: &FormTuple<PrimeField>, k: usize, cap: u64) -> Result<Option<Subspace<PrimeField>>> {
    Ok(enumerate_subspaces(phi.field(), phi.n(), k, cap)?.find(|u| is_isotropic(phi, u)))
}

/// Largest isotropic dimension over `F_p` as far as enumeration allows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "dim", rename_all = "kebab-case")]
pub enum OracleDim {
    Exact(usize),
    /// The next dimension could not be enumerated within the cap.
    AtLeast(usize),
}

impl OracleDim {
    pub fn lower(&self) -> usize {
        match *self {
            OracleDim::Exact(d) | OracleDim::AtLeast(d) => d,
        }
    }
}

/// Searches dimensions `start, start + 1, ...` and stops at the first one
/// without an isotropic subspace. `start - 1` must already be known to be
/// attained (every line is isotropic, so `start = 2` is always safe).
pub fn isotropic_dim_fp(phi: &FormTuple<PrimeField>, start: usize, cap: u64) -> Result<(OracleDim, Option<Subspace<PrimeField>>)> {
    let n = phi.n();
    let start = start.max(1);
    let mut witness = None;
    let mut k = start;
    while k <= n {
        match max_isotropic_fp(phi, k, cap) {
            Ok(Some(u)) => {
                witness = Some(u);
                k += 1;
            }
            Ok(None) => return Ok((OracleDim::Exact(k - 1), witness)),
            Err(Error::EnumerationCap { .. }) => return Ok((OracleDim::AtLeast(k - 1), witness)),
            Err(e) => return Err(e),
        }
    }
    Ok((OracleDim::Exact(n), witness))
}

/// Vector of rationals `a/b` with `a` uniform in `[-bound, bound]` and `b`
/// uniform in `[1, bound]`.
pub fn random_rational_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Vec<num_rational::BigRational> {
    (0..n)
        .map(|_| {
            let num = rng.random_range(-bound..=bound);
            let den = rng.random_range(1..=bound.max(1));
            num_rational::BigRational::new(num.into(), den.into())
        })
        .collect()
}

/// The three forms on a 4-dimensional space built from quaternion
/// multiplication. Over a real field their only common isotropic subspaces
/// are lines.
pub fn quaternion_example<F: Field>(field: &F) -> FormTuple<F> {
    let mats = [
        vec![vec![0, 1, 0, 0], vec![-1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, -1, 0]],
        vec![vec![0, 0, 1, 0], vec![0, 0, 0, -1], vec![-1, 0, 0, 0], vec![0, 1, 0, 0]],
        vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, -1, 0, 0], vec![-1, 0, 0, 0]],
    ];
    FormTuple::from_i64(field, 4, &mats).expect("fixed alternating matrices")
}

/// The four maximal minors of the commutation matrix of the quaternion
/// tuple at `x`; minor `i` deletes column `i`.
pub fn quaternion_minors<F: Field>(field: &F, x: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let m = commutation_matrix(&quaternion_example(field), x)?;
    (0..4)
        .map(|i| {
            let cols: Vec<usize> = (0..4).filter(|&c| c != i).collect();
            m.select(&[0, 1, 2], &cols).determinant()
        })
        .collect()
}

/// Checks that minor `i` (1-based) equals `(-1)^i x_i (x_1² + x_2² + x_3² + x_4²)`.
pub fn quaternion_minor_identity<F: Field>(field: &F, x: &[F::Elem]) -> Result<bool> {
    let minors = quaternion_minors(field, x)?;
    let norm = x.iter().fold(field.zero(), |acc, v| field.add(&acc, &field.mul(v, v)));
    Ok(minors.iter().enumerate().all(|(i, m)| {
        let mut expected = field.mul(&x[i], &norm);
        if i % 2 == 0 {
            expected = field.neg(&expected);
        }
        *m == expected
    }))
}
