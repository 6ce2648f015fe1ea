//! Plücker coordinates of subspaces, the Grassmann–Plücker relations, basis
//! recovery, and the dimension counts of Grassmannians, Schubert cells and
//! the incidence varieties attached to the surjection property.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::forms::form_space_dim;
use crate::linalg::{Field, Matrix, Subspace};

/// Projective point in `P(Λ^k F^n)`, normalized so that the first nonzero
/// coordinate (lexicographic index order) is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerPoint<F: Field> {
    field: F,
    k: usize,
    n: usize,
    coords: BTreeMap<Vec<usize>, F::Elem>,
}

/// Sign of the permutation sorting `seq`, or `None` when an index repeats.
fn sort_sign(seq: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut v = seq.to_vec();
    let mut negative = false;
    // insertion sort counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((negative, v))
}

impl<F: Field> PluckerPoint<F> {
    /// Builds a point from coordinates listed in lexicographic order of the
    /// index sets. Normalizes; fails when all coordinates vanish.
    pub fn from_values(field: &F, k: usize, n: usize, values: Vec<F::Elem>) -> Result<Self> {
        let keys: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        if values.len() != keys.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} Plücker coordinates given, G({k},{n}) needs {}",
                values.len(),
                keys.len()
            )));
        }
        let lead = values
            .iter()
            .find(|x| !field.is_zero(x))
            .ok_or_else(|| Error::Precondition("all Plücker coordinates vanish".into()))?;
        let inv = field.inv(lead).expect("nonzero");
        let coords = keys
            .into_iter()
            .zip(values.iter().map(|x| field.mul(&inv, x)))
            .collect();
        Ok(PluckerPoint {
            field: field.clone(),
            k,
            n,
            coords,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coords(&self) -> &BTreeMap<Vec<usize>, F::Elem> {
        &self.coords
    }

    pub fn values(&self) -> Vec<F::Elem> {
        self.coords.values().cloned().collect()
    }

    /// `p_{i_1...i_k}` for strictly increasing 0-based indices.
    pub fn get(&self, idx: &[usize]) -> Option<&F::Elem> {
        self.coords.get(idx)
    }

    /// Coordinate at an arbitrary index sequence, extended alternatingly.
    fn signed(&self, seq: &[usize]) -> F::Elem {
        match sort_sign(seq) {
            None => self.field.zero(),
            Some((negative, sorted)) => {
                let v = self.coords[&sorted].clone();
                if negative {
                    self.field.neg(&v)
                } else {
                    v
                }
            }
        }
    }

    fn leading_index(&self) -> &Vec<usize> {
        self.coords
            .iter()
            .find(|(_, v)| !self.field.is_zero(v))
            .map(|(key, _)| key)
            .expect("normalized point has a nonzero coordinate")
    }
}

/// Maximal minors of a basis matrix of `u`.
pub fn plucker<F: Field>(u: &Subspace<F>) -> Result<PluckerPoint<F>> {
    let k = u.dim();
    if k == 0 {
        return Err(Error::Precondition("the zero subspace has no Plücker point".into()));
    }
    let n = u.ambient_dim();
    let all_rows: Vec<usize> = (0..k).collect();
    let values = (0..n)
        .combinations(k)
        .map(|cols| u.basis().select(&all_rows, &cols).determinant())
        .collect::<Result<Vec<_>>>()?;
    PluckerPoint::from_values(u.field(), k, n, values)
}

/// Whether `Σ_r (-1)^r p_{i_1..i_{k-1} j_r} p_{j_1..ĵ_r..j_{k+1}}` vanishes
/// for all increasing `i` and `j`.
pub fn check_plucker_relations<F: Field>(p: &PluckerPoint<F>) -> bool {
    let (k, n, f) = (p.k, p.n, &p.field);
    if k + 1 > n {
        return true;
    }
    (0..n).combinations(k - 1).all(|i| {
        (0..n).combinations(k + 1).all(|j| {
            let mut sum = f.zero();
            for r in 0..=k {
                let mut left = i.clone();
                left.push(j[r]);
                let right: Vec<usize> = j.iter().enumerate().filter(|&(s, _)| s != r).map(|(_, &x)| x).collect();
                let term = f.mul(&p.signed(&left), &p.signed(&right));
                sum = if r % 2 == 0 { f.sub(&sum, &term) } else { f.add(&sum, &term) };
            }
            f.is_zero(&sum)
        })
    })
}

/// Recovers the subspace of a valid Plücker point. With `I` the leading
/// nonzero index set, the basis is `f_a = e_{i_a} + Σ_{r ∉ I} a_{ar} e_r`
/// where `a_{ar} = (-1)^{k-a} p_{i_1..î_a..i_k r} / p_I`.
pub fn basis_from_plucker<F: Field>(p: &PluckerPoint<F>) -> Result<Subspace<F>> {
    if !check_plucker_relations(p) {
        return Err(Error::Precondition("point violates the Plücker relations".into()));
    }
    let (k, n, f) = (p.k, p.n, &p.field);
    let lead = p.leading_index().clone();
    let inv = f.inv(&p.coords[&lead]).expect("leading coordinate nonzero");
    let mut rows = Vec::with_capacity(k);
    for a in 0..k {
        let mut row = vec![f.zero(); n];
        row[lead[a]] = f.one();
        let mut rest: Vec<usize> = lead.iter().enumerate().filter(|&(b, _)| b != a).map(|(_, &x)| x).collect();
        for r in (0..n).filter(|r| !lead.contains(r)) {
            rest.push(r);
            let mut v = f.mul(&p.signed(&rest), &inv);
            // 1-based exponent k - (a + 1)
            if (k - a - 1) % 2 == 1 {
                v = f.neg(&v);
            }
            row[r] = v;
            rest.pop();
        }
        rows.push(row);
    }
    Ok(Subspace::row_space(&Matrix::from_rows(f, n, rows)?))
}

/// `dim G(k, n) = k(n - k)`.
pub fn dim_grassmannian(k: usize, n: usize) -> Result<usize> {
    if k > n {
        return Err(Error::Precondition(format!("G({k},{n}) is empty")));
    }
    Ok(k * (n - k))
}

/// `Σ (dim V_i - i)` (1-based `i`) for a flag with the given dimensions.
pub fn schubert_dim(vdims: &[usize]) -> Result<usize> {
    let mut total = 0;
    for (i, &d) in vdims.iter().enumerate() {
        if d < i + 1 || (i > 0 && d <= vdims[i - 1]) {
            return Err(Error::Precondition(format!(
                "flag dimensions must be strictly increasing with dim V_i >= i, got {vdims:?}"
            )));
        }
        total += d - (i + 1);
    }
    Ok(total)
}

/// Dimension of `{U ∈ G(k, n) : dim(U ∩ U') >= s}` for `dim U' = m`:
/// `s(m - s) + (k - s)(n - k)`.
pub fn gs_dim(s: usize, m: usize, k: usize, n: usize) -> Result<usize> {
    if k > n || m > n || s > k.min(m) || s + n < k + m {
        return Err(Error::Precondition(format!(
            "need max(0, k+m-n) <= s <= min(k, m), got (s, m, k, n) = ({s}, {m}, {k}, {n})"
        )));
    }
    Ok(s * (m - s) + (k - s) * (n - k))
}

/// Whether `dim(u ∩ uprime) >= s`.
pub fn gs_member<F: Field>(uprime: &Subspace<F>, u: &Subspace<F>, s: usize) -> Result<bool> {
    Ok(u.intersect(uprime)?.dim() >= s)
}

/// Whether `t >= n(n-1)/2 - n0(n0-1)/2 + t0`, the regime where every
/// algebra has the surjection property.
pub fn guaranteed_regime(n: usize, n0: usize, t: usize, t0: usize) -> bool {
    t + form_space_dim(n0) >= form_space_dim(n) + t0
}

fn check_fiber(n: usize, n0: usize, t: usize, t0: usize) -> Result<()> {
    if n0 > n || t0 == 0 || t0 > t || t0 > form_space_dim(n0) || t > form_space_dim(n) {
        return Err(Error::Precondition(format!(
            "need n0 <= n, 1 <= t0 <= min(t, n0(n0-1)/2), t <= n(n-1)/2; got (n, n0, t, t0) = ({n}, {n0}, {t}, {t0})"
        )));
    }
    if guaranteed_regime(n, n0, t, t0) {
        return Err(Error::Precondition(format!(
            "(n, n0, t, t0) = ({n}, {n0}, {t}, {t0}) lies in the guaranteed regime"
        )));
    }
    Ok(())
}

/// Dimension of the variety of `t`-subspaces `W ⊂ B_n` with
/// `dim(W ∩ N_0(U)) >= t0` for a fixed `U`:
/// `t0(n0(n0-1)/2 - t0) + (t - t0)(n(n-1)/2 - t)`.
pub fn fiber_dim(n: usize, n0: usize, t: usize, t0: usize) -> Result<usize> {
    check_fiber(n, n0, t, t0)?;
    gs_dim(t0, form_space_dim(n0), t, form_space_dim(n))
}

/// Dimension of the incidence variety `D` of pairs `(U, W)`:
/// the fiber dimension plus `dim G(n - n0, n) = n0(n - n0)`.
pub fn variety_d_dim(n: usize, n0: usize, t: usize, t0: usize) -> Result<usize> {
    Ok(fiber_dim(n, n0, t, t0)? + n0 * (n - n0))
}
