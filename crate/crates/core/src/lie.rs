//! The 2-step nilpotent Lie algebra `L(Φ) = V ⊕ S` of a form tuple.
//!
//! `V` has basis `e_1..e_n`, `S` has basis `z_1..z_t`, and the bracket is
//! `[x, y] = Σ φ_i(x̄, ȳ) z_i`. Besides the bracket this module computes the
//! center, derived subalgebra and central quotients, and decides the
//! surjection property `MS(n0, t0)` through the subspace certificate
//! `dim(N_0(U) ∩ span Φ) >= t0` with `dim U = n - n0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{form_space_dim, FormTuple};
use crate::linalg::{enumerate_subspaces, kernel_basis, next_prime, Field, Matrix, PrimeField, Rationals, Subspace};
use crate::rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement<F: Field> {
    pub v: Vec<F::Elem>,
    pub s: Vec<F::Elem>,
}

impl<F: Field> LieElement<F> {
    pub fn zero(field: &F, n: usize, t: usize) -> Self {
        LieElement {
            v: vec![field.zero(); n],
            s: vec![field.zero(); t],
        }
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.v.iter().chain(&self.s).all(|x| field.is_zero(x))
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        LieElement {
            v: self.v.iter().zip(&other.v).map(|(a, b)| field.add(a, b)).collect(),
            s: self.s.iter().zip(&other.s).map(|(a, b)| field.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        LieElement {
            v: self.v.iter().map(|a| field.mul(c, a)).collect(),
            s: self.s.iter().map(|a| field.mul(c, a)).collect(),
        }
    }

    pub fn neg(&self, field: &F) -> Self {
        self.scale(field, &field.neg(&field.one()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra2<F: Field> {
    phi: FormTuple<F>,
}

impl<F: Field> LieAlgebra2<F> {
    /// Requires linearly independent forms, so that `S = [L, L]`.
    pub fn new(phi: FormTuple<F>) -> Result<Self> {
        if !phi.is_independent() {
            return Err(Error::DependentForms);
        }
        Ok(LieAlgebra2 { phi })
    }

    /// Skips the independence check; `S` may then be larger than `[L, L]`.
    pub fn new_unchecked(phi: FormTuple<F>) -> Self {
        LieAlgebra2 { phi }
    }

    pub fn phi(&self) -> &FormTuple<F> {
        &self.phi
    }

    pub fn field(&self) -> &F {
        self.phi.field()
    }

    pub fn n(&self) -> usize {
        self.phi.n()
    }

    pub fn t(&self) -> usize {
        self.phi.t()
    }

    pub fn element(&self, v: Vec<F::Elem>, s: Vec<F::Elem>) -> Result<LieElement<F>> {
        let x = LieElement { v, s };
        self.check(&x)?;
        Ok(x)
    }

    /// `e_i` (0-based).
    pub fn e(&self, i: usize) -> LieElement<F> {
        let f = self.field();
        let mut x = LieElement::zero(f, self.n(), self.t());
        x.v[i] = f.one();
        x
    }

    /// `z_j` (0-based).
    pub fn z(&self, j: usize) -> LieElement<F> {
        let f = self.field();
        let mut x = LieElement::zero(f, self.n(), self.t());
        x.s[j] = f.one();
        x
    }

    fn check(&self, x: &LieElement<F>) -> Result<()> {
        if x.v.len() != self.n() || x.s.len() != self.t() {
            return Err(Error::DimensionMismatch(format!(
                "element with parts ({}, {}) in an algebra with (n, t) = ({}, {})",
                x.v.len(),
                x.s.len(),
                self.n(),
                self.t()
            )));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &LieElement<F>, y: &LieElement<F>) -> Result<LieElement<F>> {
        self.check(x)?;
        self.check(y)?;
        Ok(LieElement {
            v: vec![self.field().zero(); self.n()],
            s: self.phi.evaluate_all(&x.v, &y.v)?,
        })
    }

    /// `{c ∈ V : φ_i(c, e_j) = 0 for all i, j}`; the full center is this plus `S`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.n();
        let mut stacked = Matrix::zeros(self.field(), 0, n);
        for form in self.phi.forms() {
            stacked = stacked.vstack(form.matrix()).expect("forms share n");
        }
        kernel_basis(&stacked)
    }

    pub fn center_dim(&self) -> usize {
        self.center().dim() + self.t()
    }

    /// `dim [L, L]`, the rank of the forms.
    pub fn derived_dim(&self) -> usize {
        self.phi.rank()
    }

    /// `L / H` for a subspace `H ⊂ S` of dimension `k < t`.
    ///
    /// `S` gets the basis (complement of `H`, basis of `H`); the forms are
    /// rewritten in it and the last `k` are dropped.
    pub fn quotient_central(&self, h: &Subspace<F>) -> Result<Self> {
        let t = self.t();
        let f = self.field();
        if h.ambient_dim() != t {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} inside S of dimension {t}",
                h.ambient_dim()
            )));
        }
        let k = h.dim();
        if k >= t {
            return Err(Error::Precondition(format!(
                "quotient by a {k}-dimensional subspace of S (dim {t}) leaves an abelian algebra"
            )));
        }
        let pivots = h.pivots();
        let mut rows: Vec<Vec<F::Elem>> = (0..t)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut v = vec![f.zero(); t];
                v[c] = f.one();
                v
            })
            .collect();
        rows.extend(h.vectors().map(|v| v.to_vec()));
        let new_basis = Matrix::from_rows(f, t, rows)?;
        // old coordinates s = Z'ᵀ s', so φ' = (Z'ᵀ)^{-1} Φ
        let c = new_basis.transpose().inverse()?;
        let rewritten = self.phi.change_basis(&c)?;
        let kept = rewritten.forms()[..t - k].to_vec();
        Ok(LieAlgebra2 {
            phi: FormTuple::new(f, self.n(), kept)?,
        })
    }

    /// Whether `dim(N_0(U) ∩ span Φ) >= t0`, i.e. `U` certifies a surjection
    /// onto an algebra with invariants `(n0, t0)`.
    pub fn ms_certificate(&self, u: &Subspace<F>, n0: usize, t0: usize) -> Result<bool> {
        check_ms_params(self.n(), n0, t0)?;
        if u.ambient_dim() != self.n() || u.dim() != self.n() - n0 {
            return Err(Error::Precondition(format!(
                "certificate subspace must have dimension n - n0 = {} in F^{}, got {} in F^{}",
                self.n() - n0,
                self.n(),
                u.dim(),
                u.ambient_dim()
            )));
        }
        if t0 > self.t() {
            return Ok(false);
        }
        Ok(self.phi.n0_intersection(u)?.dim() >= t0)
    }
}

fn check_ms_params(n: usize, n0: usize, t0: usize) -> Result<()> {
    if n0 > n {
        return Err(Error::Precondition(format!("n0 = {n0} exceeds n = {n}")));
    }
    if t0 == 0 || t0 > form_space_dim(n0) {
        return Err(Error::Precondition(format!(
            "need 1 <= t0 <= n0(n0-1)/2 = {}, got t0 = {t0}",
            form_space_dim(n0)
        )));
    }
    Ok(())
}

/// How to look for a certificate subspace `U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MsStrategy {
    /// Reduce `Φ` mod `p` and try every `(n - n0)`-dimensional subspace of
    /// `F_p^n`: a definitive answer for the reduced algebra.
    ExhaustiveFp { p: u64, cap: u64 },
    /// Sample `U` over `Q` with small integer entries; can only report found
    /// or not found.
    RandomizedQ { trials: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MsWitness {
    Fp { p: u64, u: Subspace<PrimeField> },
    Q { u: Subspace<Rationals> },
}

impl MsWitness {
    pub fn basis_strings(&self) -> Vec<String> {
        fn rows<F: Field>(s: &Subspace<F>) -> Vec<String> {
            s.vectors()
                .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .collect()
        }
        match self {
            MsWitness::Fp { u, .. } => rows(u),
            MsWitness::Q { u } => rows(u),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MsSearch {
    pub strategy: MsStrategy,
    /// Candidate subspaces checked before stopping.
    pub examined: u64,
    pub witness: Option<MsWitness>,
}

/// Entries of randomly sampled certificate candidates lie in `[-B, B]`.
pub const RANDOM_SUBSPACE_BOUND: i64 = 3;

impl LieAlgebra2<Rationals> {
    pub fn reduce_mod(&self, fp: &PrimeField) -> Result<LieAlgebra2<PrimeField>> {
        let reduced = self.phi.reduce_mod(fp)?;
        if !reduced.is_independent() {
            return Err(Error::DegenerateReduction { p: fp.modulus() });
        }
        Ok(LieAlgebra2 { phi: reduced })
    }

    /// Smallest prime `p >= start` (and `>= 3`) whose reduction keeps the
    /// forms independent.
    pub fn default_prime(&self, start: u64) -> Result<u64> {
        let mut p = next_prime(start.max(3));
        for _ in 0..1000 {
            let fp = PrimeField::new(p)?;
            if self.reduce_mod(&fp).is_ok() {
                return Ok(p);
            }
            p = next_prime(p + 1);
        }
        Err(Error::Precondition("no prime keeps the forms independent".into()))
    }

    pub fn ms_search(&self, n0: usize, t0: usize, strategy: &MsStrategy) -> Result<MsSearch> {
        check_ms_params(self.n(), n0, t0)?;
        let k = self.n() - n0;
        match *strategy {
            MsStrategy::ExhaustiveFp { p, cap } => {
                let fp = PrimeField::new(p)?;
                let reduced = self.reduce_mod(&fp)?;
                let mut examined = 0;
                for u in enumerate_subspaces(&fp, self.n(), k, cap)? {
                    examined += 1;
                    if reduced.ms_certificate(&u, n0, t0)? {
                        return Ok(MsSearch {
                            strategy: strategy.clone(),
                            examined,
                            witness: Some(MsWitness::Fp { p, u }),
                        });
                    }
                }
                Ok(MsSearch {
                    strategy: strategy.clone(),
                    examined,
                    witness: None,
                })
            }
            MsStrategy::RandomizedQ { trials, seed } => {
                let found = (0..trials as u64).into_par_iter().find_map_first(|i| {
                    let mut rng = rng::trial_rng(seed, i);
                    let u = random_subspace(&mut rng, self.n(), k, RANDOM_SUBSPACE_BOUND);
                    match self.ms_certificate(&u, n0, t0) {
                        Ok(true) => Some((i, u)),
                        _ => None,
                    }
                });
                Ok(match found {
                    Some((i, u)) => MsSearch {
                        strategy: strategy.clone(),
                        examined: i + 1,
                        witness: Some(MsWitness::Q { u }),
                    },
                    None => MsSearch {
                        strategy: strategy.clone(),
                        examined: trials as u64,
                        witness: None,
                    },
                })
            }
        }
    }
}

/// Random `k`-dimensional subspace of `Q^n` with integer entries in `[-bound, bound]`.
pub fn random_subspace<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, bound: i64) -> Subspace<Rationals> {
    let q = Rationals;
    loop {
        let rows = (0..k)
            .map(|_| (0..n).map(|_| q.from_i64(rng.random_range(-bound..=bound))).collect())
            .collect();
        let u = Subspace::row_space(&Matrix::from_rows(&q, n, rows).expect("rows of length n"));
        if u.dim() == k {
            return u;
        }
    }
}

/// Center dimension of a generic algebra with invariants `(n, t)`: 2 when
/// `t = 1` and `n` is odd, otherwise `t` (the center is `[L, L]`).
pub fn generic_center_dim(n: usize, t: usize) -> usize {
    if t == 1 && n % 2 == 1 {
        2
    } else {
        t
    }
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Bracket on the threshold `C(n, n0, t0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MsThresholds {
    /// For `t` strictly below this, a generic algebra lacks `MS(n0, t0)`.
    pub generic_absence_below: BigRational,
    /// For `t` at or above this, every algebra has `MS(n0, t0)`.
    pub guaranteed_at_or_above: BigRational,
}

pub fn ms_thresholds(n: usize, n0: usize, t0: usize) -> Result<MsThresholds> {
    check_ms_params(n, n0, t0)?;
    let (n, n0, t0) = (n as i64, n0 as i64, t0 as i64);
    let big = rat(n * (n - 1), 2);
    let small = rat(n0 * (n0 - 1), 2);
    let absence = &big - rat(n * n0, t0) + rat(n0 * n0, t0) + rat(t0, 1) - &small;
    let guaranteed = big - small + rat(t0, 1);
    Ok(MsThresholds {
        generic_absence_below: absence,
        guaranteed_at_or_above: guaranteed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MsRegime {
    /// `t` below the absence bound: a generic algebra lacks the property.
    GenericAbsence,
    /// Between the bounds: the threshold is not pinned down.
    Undetermined,
    /// `t` at or above the guarantee bound: every algebra has the property.
    Guaranteed,
}

impl MsThresholds {
    pub fn regime(&self, t: usize) -> MsRegime {
        let t = rat(t as i64, 1);
        if t >= self.guaranteed_at_or_above {
            MsRegime::Guaranteed
        } else if t < self.generic_absence_below {
            MsRegime::GenericAbsence
        } else {
            MsRegime::Undetermined
        }
    }
}

/// Below this `t`, a generic algebra of `N_2(n, t)` has no surjection onto a
/// non-abelian algebra of dimension `N < n`:
/// `n²/2 - n(N - 1/2) + N(N-1)/2 + 1`.
pub fn corollary_bound(n: usize, big_n: usize) -> Result<BigRational> {
    if big_n >= n {
        return Err(Error::Precondition(format!("need N < n, got N = {big_n}, n = {n}")));
    }
    let (n, nn) = (n as i64, big_n as i64);
    Ok(rat(n * n, 2) - rat(n * (2 * nn - 1), 2) + rat(nn * (nn - 1), 2) + rat(1, 1))
}
