//! Torsion-free class-2 nilpotent groups `G(Φ)` defined by integer form
//! tuples, and their embedding into the Mal'cev completion `L(Φ)` with the
//! product `x ∘ y = x + y + [x, y]/2`.
//!
//! Elements are kept in the normal form `a_1^{k_1} ... a_n^{k_n} b_1^{l_1} ... b_t^{l_t}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::forms::FormTuple;
use crate::lie::{LieAlgebra2, LieElement};
use crate::linalg::{Field, Rationals};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    algebra: LieAlgebra2<Rationals>,
    /// `entries[k][i][j] = φ_k(a_i, a_j)`.
    entries: Vec<Vec<Vec<BigInt>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
}

pub type MalcevElement = LieElement<Rationals>;

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.a.iter().chain(&self.b).all(Zero::is_zero)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .a
            .iter()
            .enumerate()
            .map(|(i, k)| ('a', i, k))
            .chain(self.b.iter().enumerate().map(|(j, l)| ('b', j, l)))
            .filter(|(_, _, e)| !e.is_zero())
            .map(|(c, i, e)| format!("{c}{}^{e}", i + 1))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl GroupPresentation {
    /// Requires integer entries and linearly independent forms.
    pub fn new(phi: FormTuple<Rationals>) -> Result<Self> {
        let entries = phi
            .integer_entries()
            .ok_or_else(|| Error::Precondition("group presentations need integer forms".into()))?;
        Ok(GroupPresentation {
            algebra: LieAlgebra2::new(phi)?,
            entries,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra2<Rationals> {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn t(&self) -> usize {
        self.algebra.t()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            a: vec![BigInt::zero(); self.n()],
            b: vec![BigInt::zero(); self.t()],
        }
    }

    pub fn element(&self, a: Vec<BigInt>, b: Vec<BigInt>) -> Result<GroupElement> {
        let g = GroupElement { a, b };
        self.check(&g)?;
        Ok(g)
    }

    pub fn element_i64(&self, a: &[i64], b: &[i64]) -> Result<GroupElement> {
        self.element(a.iter().map(|&x| x.into()).collect(), b.iter().map(|&x| x.into()).collect())
    }

    /// Generator `a_i` (0-based).
    pub fn a(&self, i: usize) -> GroupElement {
        let mut g = self.identity();
        g.a[i] = BigInt::one();
        g
    }

    /// Generator `b_j` (0-based).
    pub fn b(&self, j: usize) -> GroupElement {
        let mut g = self.identity();
        g.b[j] = BigInt::one();
        g
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if g.a.len() != self.n() || g.b.len() != self.t() {
            return Err(Error::DimensionMismatch(format!(
                "element with exponent lengths ({}, {}) for (n, t) = ({}, {})",
                g.a.len(),
                g.b.len(),
                self.n(),
                self.t()
            )));
        }
        Ok(())
    }

    /// `Σ_{i>j} x_i y_j φ_k(a_i, a_j)` for each `k`.
    fn lower_sum(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        self.entries
            .iter()
            .map(|m| {
                let mut s = BigInt::zero();
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate().take(i) {
                        s += xi * yj * &m[i][j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        let a = g.a.iter().zip(&h.a).map(|(x, y)| x + y).collect();
        let b = self
            .lower_sum(&g.a, &h.a)
            .into_iter()
            .zip(g.b.iter().zip(&h.b))
            .map(|(s, (x, y))| s + x + y)
            .collect();
        Ok(GroupElement { a, b })
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        let a = g.a.iter().map(|x| -x).collect();
        let b = self
            .lower_sum(&g.a, &g.a)
            .into_iter()
            .zip(&g.b)
            .map(|(s, x)| s - x)
            .collect();
        Ok(GroupElement { a, b })
    }

    pub fn pow(&self, g: &GroupElement, e: i64) -> Result<GroupElement> {
        let base = if e < 0 { self.inverse(g)? } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..e.unsigned_abs() {
            acc = self.multiply(&acc, &base)?;
        }
        Ok(acc)
    }

    /// `g^{-1} h^{-1} g h`, whose `b`-exponents are `Σ_{i,j} g_i h_j φ_l(a_i, a_j)`.
    pub fn commutator(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        let b = self
            .entries
            .iter()
            .map(|m| {
                let mut s = BigInt::zero();
                for (i, gi) in g.a.iter().enumerate() {
                    for (j, hj) in h.a.iter().enumerate() {
                        s += gi * hj * &m[i][j];
                    }
                }
                s
            })
            .collect();
        Ok(GroupElement {
            a: vec![BigInt::zero(); self.n()],
            b,
        })
    }

    /// Torsion-free rank of the center, `dim Z(L(Φ))`.
    pub fn center_rank(&self) -> usize {
        self.algebra.center_dim()
    }

    /// `x ∘ y = x + y + [x, y]/2`.
    pub fn bch_mul(&self, x: &MalcevElement, y: &MalcevElement) -> Result<MalcevElement> {
        let q = Rationals;
        let half = BigRational::new(1.into(), 2.into());
        let br = self.algebra.bracket(x, y)?;
        Ok(x.add(&q, y).add(&q, &br.scale(&q, &half)))
    }

    /// `(k_1 a_1) ∘ ... ∘ (k_n a_n) ∘ (Σ l_j z_j)`, folded from the left.
    pub fn malcev_map(&self, g: &GroupElement) -> Result<MalcevElement> {
        self.check(g)?;
        let q = Rationals;
        let (n, t) = (self.n(), self.t());
        let mut acc = LieElement::zero(&q, n, t);
        for (i, k) in g.a.iter().enumerate() {
            let step = self.algebra.e(i).scale(&q, &q.from_bigint(k));
            acc = self.bch_mul(&acc, &step)?;
        }
        let central = LieElement {
            v: vec![q.zero(); n],
            s: g.b.iter().map(|l| q.from_bigint(l)).collect(),
        };
        self.bch_mul(&acc, &central)
    }

    /// Parses the normal-form text `a1^k1 ... an^kn b1^l1 ... bt^lt`; a bare
    /// generator means exponent 1 and `1` (or empty text) is the identity.
    pub fn parse(&self, text: &str) -> Result<GroupElement> {
        let mut g = self.identity();
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(g);
        }
        // position in the normal-form order: a1..an then b1..bt
        let mut last: Option<usize> = None;
        for tok in text.split_whitespace() {
            let bad = || Error::Parse(format!("bad factor `{tok}`"));
            let (gen, exp) = match tok.split_once('^') {
                Some((gen, e)) => (gen, e.parse::<BigInt>().map_err(|_| bad())?),
                None => (tok, BigInt::one()),
            };
            let mut chars = gen.chars();
            let kind = chars.next().ok_or_else(bad)?;
            let idx: usize = chars.as_str().parse().map_err(|_| bad())?;
            let pos = match kind {
                'a' if (1..=self.n()).contains(&idx) => idx - 1,
                'b' if (1..=self.t()).contains(&idx) => self.n() + idx - 1,
                _ => return Err(bad()),
            };
            if last.is_some_and(|l| l >= pos) {
                return Err(Error::Parse(format!("`{tok}` is out of normal-form order")));
            }
            last = Some(pos);
            if pos < self.n() {
                g.a[pos] = exp;
            } else {
                g.b[pos - self.n()] = exp;
            }
        }
        Ok(g)
    }
}

/// Element with all exponents uniform in `[-bound, bound]`.
pub fn random_element<R: Rng + ?Sized>(gp: &GroupPresentation, rng: &mut R, bound: i64) -> GroupElement {
    let mut draw = |len: usize| -> Vec<BigInt> { (0..len).map(|_| rng.random_range(-bound..=bound).into()).collect() };
    let a = draw(gp.n());
    let b = draw(gp.t());
    GroupElement { a, b }
}

/// Smallest integer multiple of a rational vector with integer entries.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}
