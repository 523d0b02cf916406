//! Intersection theory on the Picard lattice of a blow-up of the plane.
//!
//! A class is stored as `d0·L − Σ mᵢ·eᵢ` where `L` is the pullback of a line
//! and `eᵢ` are total transforms of the exceptional curves.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of blown-up points supported.
pub const MAX_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: {0} vs {1} exceptional classes")]
    DimensionMismatch(usize, usize),
    #[error("too many points: {0} (at most {MAX_POINTS})")]
    TooManyPoints(usize),
    #[error("empty coefficient array")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DivisorClass {
    d0: i64,
    m: Vec<i64>,
}

impl DivisorClass {
    pub fn new(d0: i64, m: Vec<i64>) -> Result<Self, LatticeError> {
        if m.len() > MAX_POINTS {
            return Err(LatticeError::TooManyPoints(m.len()));
        }
        Ok(Self { d0, m })
    }

    pub fn zero(n: usize) -> Self {
        Self { d0: 0, m: vec![0; n] }
    }

    pub fn line(n: usize) -> Self {
        Self { d0: 1, m: vec![0; n] }
    }

    /// Total transform `eᵢ` (0-based index).
    pub fn exceptional(n: usize, i: usize) -> Self {
        let mut m = vec![0; n];
        m[i] = -1;
        Self { d0: 0, m }
    }

    /// `K = −3L + Σ eᵢ`.
    pub fn canonical(n: usize) -> Self {
        Self { d0: -3, m: vec![-1; n] }
    }

    pub fn anticanonical(n: usize) -> Self {
        Self { d0: 3, m: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn d0(&self) -> i64 {
        self.d0
    }

    /// Multiplicity coefficients `m₁..mₙ`.
    pub fn mults(&self) -> &[i64] {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.d0 == 0 && self.m.iter().all(|&x| x == 0)
    }

    /// Unchecked pairing; panics on dimension mismatch.
    pub fn dot(&self, other: &Self) -> i64 {
        assert_eq!(self.n(), other.n(), "pairing classes of different dimension");
        self.d0 * other.d0 - self.m.iter().zip(&other.m).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn square(&self) -> i64 {
        self.dot(self)
    }

    /// Pairing with `−K`.
    pub fn anticanonical_degree(&self) -> i64 {
        3 * self.d0 - self.m.iter().sum::<i64>()
    }

    pub fn to_vec(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(self.m.len() + 1);
        v.push(self.d0);
        v.extend_from_slice(&self.m);
        v
    }
}

impl TryFrom<Vec<i64>> for DivisorClass {
    type Error = LatticeError;

    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        let (d0, m) = v.split_first().ok_or(LatticeError::Empty)?;
        Self::new(*d0, m.to_vec())
    }
}

impl From<DivisorClass> for Vec<i64> {
    fn from(c: DivisorClass) -> Self {
        c.to_vec()
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.n(), rhs.n(), "adding classes of different dimension");
        DivisorClass {
            d0: self.d0 + rhs.d0,
            m: self.m.iter().zip(&rhs.m).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &(-rhs)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            d0: -self.d0,
            m: self.m.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass {
            d0: self * rhs.d0,
            m: rhs.m.iter().map(|a| self * a).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    /// Writes e.g. `2L-e1-e2-2e3`; the zero class prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = Vec::new();
        if self.d0 != 0 {
            terms.push((self.d0, "L".to_string()));
        }
        for (i, &mi) in self.m.iter().enumerate() {
            if mi != 0 {
                terms.push((-mi, format!("e{}", i + 1)));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, sym)) in terms.iter().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let abs = c.abs();
            if abs == 1 {
                write!(f, "{sign}{sym}")?;
            } else {
                write!(f, "{sign}{abs}{sym}")?;
            }
        }
        Ok(())
    }
}

/// Checked intersection pairing.
pub fn pairing(u: &DivisorClass, v: &DivisorClass) -> Result<i64, LatticeError> {
    if u.n() != v.n() {
        return Err(LatticeError::DimensionMismatch(u.n(), v.n()));
    }
    Ok(u.dot(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    MinusOne,
    Root,
    Other,
}

pub fn classify_class(v: &DivisorClass) -> ClassKind {
    let sq = v.square();
    let kdeg = v.anticanonical_degree();
    match (sq, kdeg) {
        (-1, 1) => ClassKind::MinusOne,
        (-2, 0) => ClassKind::Root,
        _ => ClassKind::Other,
    }
}

/// Orientation test for roots: positive against `N·L − Σ εᵢeᵢ` with `ε` strictly
/// decreasing, i.e. `d0 > 0`, or `d0 == 0` and the first nonzero `mᵢ` is negative.
pub fn is_positive_root(v: &DivisorClass) -> bool {
    if v.d0 != 0 {
        return v.d0 > 0;
    }
    v.m.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCandidates {
    pub minus_one: Vec<DivisorClass>,
    pub roots: Vec<DivisorClass>,
}

fn line_degree_bound(n: usize) -> i64 {
    if n <= 7 {
        3
    } else {
        6
    }
}

/// All `m ∈ ℤⁿ` with `Σmᵢ = s1`, `Σmᵢ² = s2`.
fn solutions(n: usize, s1: i64, s2: i64, out: &mut Vec<Vec<i64>>) {
    fn rec(k: usize, s1: i64, s2: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == 0 {
            if s1 == 0 && s2 == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // Cauchy-Schwarz: s1² ≤ k·s2
        if s2 < 0 || s1 * s1 > (k as i64) * s2 {
            return;
        }
        let r = s2.sqrt();
        for x in -r..=r {
            cur.push(x);
            rec(k - 1, s1 - x, s2 - x * x, cur, out);
            cur.pop();
        }
    }
    rec(n, s1, s2, &mut Vec::with_capacity(n), out);
}

/// Exhaustive lists of exceptional classes and positive roots with bounded line degree.
pub fn enumerate_negative_candidates(n: usize) -> Result<NegativeCandidates, LatticeError> {
    if n > MAX_POINTS {
        return Err(LatticeError::TooManyPoints(n));
    }
    let bound = line_degree_bound(n);
    let mut minus_one = Vec::new();
    let mut roots = Vec::new();
    for d0 in -bound..=bound {
        // v² = d0² − Σm², (−K)·v = 3d0 − Σm
        let mut sols = Vec::new();
        solutions(n, 3 * d0 - 1, d0 * d0 + 1, &mut sols);
        minus_one.extend(sols.into_iter().map(|m| DivisorClass { d0, m }));
        let mut sols = Vec::new();
        solutions(n, 3 * d0, d0 * d0 + 2, &mut sols);
        roots.extend(
            sols.into_iter()
                .map(|m| DivisorClass { d0, m })
                .filter(is_positive_root),
        );
    }
    minus_one.sort();
    roots.sort();
    Ok(NegativeCandidates { minus_one, roots })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(v: &[i64]) -> DivisorClass {
        DivisorClass::try_from(v.to_vec()).unwrap()
    }

    #[test]
    fn basic_pairings() {
        let l = DivisorClass::line(3);
        assert_eq!(pairing(&l, &l).unwrap(), 1);
        let k = DivisorClass::canonical(3);
        assert_eq!(pairing(&k, &k).unwrap(), 6);
        assert_eq!(pairing(&cls(&[1, 1, 1, 1]), &cls(&[0, -1, 1, 0])).unwrap(), 0);
        assert!(matches!(
            pairing(&DivisorClass::line(2), &DivisorClass::line(3)),
            Err(LatticeError::DimensionMismatch(2, 3))
        ));
    }

    #[test]
    fn degree_is_nine_minus_n() {
        for n in 0..=8 {
            assert_eq!(DivisorClass::canonical(n).square(), 9 - n as i64);
        }
    }

    #[test]
    fn classification() {
        assert_eq!(classify_class(&DivisorClass::exceptional(3, 2)), ClassKind::MinusOne);
        assert_eq!(classify_class(&cls(&[0, -1, 1, 0])), ClassKind::Root);
        assert_eq!(classify_class(&DivisorClass::line(3)), ClassKind::Other);
    }

    #[test]
    fn small_candidate_lists() {
        let c = enumerate_negative_candidates(0).unwrap();
        assert!(c.minus_one.is_empty() && c.roots.is_empty());

        let c = enumerate_negative_candidates(2).unwrap();
        let mut want = vec![cls(&[0, -1, 0]), cls(&[0, 0, -1]), cls(&[1, 1, 1])];
        want.sort();
        assert_eq!(c.minus_one, want);
        assert_eq!(c.roots, vec![cls(&[0, -1, 1])]);

        let c = enumerate_negative_candidates(3).unwrap();
        let mut want = vec![
            cls(&[0, -1, 1, 0]),
            cls(&[0, 0, -1, 1]),
            cls(&[0, -1, 0, 1]),
            cls(&[1, 1, 1, 1]),
        ];
        want.sort();
        assert_eq!(c.roots, want);
    }

    #[test]
    fn classical_counts() {
        // (exceptional classes, positive roots) for n = 3..8
        let counts = [(3, 6, 4), (4, 10, 10), (5, 16, 20), (6, 27, 36), (7, 56, 63), (8, 240, 120)];
        for (n, ex, rt) in counts {
            let c = enumerate_negative_candidates(n).unwrap();
            assert_eq!((c.minus_one.len(), c.roots.len()), (ex, rt), "n = {n}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(cls(&[2, 1, 1, 2]).to_string(), "2L-e1-e2-2e3");
        assert_eq!(cls(&[0, -1, 1]).to_string(), "e1-e2");
        assert_eq!(DivisorClass::zero(2).to_string(), "0");
    }

    #[test]
    fn serde_round_trip() {
        let c = cls(&[3, 2, 1, 1]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, "[3,2,1,1]");
        assert_eq!(serde_json::from_str::<DivisorClass>(&s).unwrap(), c);
        assert!(serde_json::from_str::<DivisorClass>("[]").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn class_pair() -> impl Strategy<Value = (DivisorClass, DivisorClass)> {
            (0usize..=8).prop_flat_map(|n| {
                let one = (-6i64..=6, prop::collection::vec(-4i64..=4, n))
                    .prop_map(|(d0, m)| DivisorClass::new(d0, m).unwrap());
                (one.clone(), one)
            })
        }

        proptest! {
            #[test]
            fn pairing_symmetric((u, v) in class_pair()) {
                prop_assert_eq!(pairing(&u, &v).unwrap(), pairing(&v, &u).unwrap());
            }

            #[test]
            fn pairing_bilinear((u, v) in class_pair(), k in -3i64..=3) {
                let w = &(k * &u) + &v;
                prop_assert_eq!(w.dot(&u), k * u.dot(&u) + v.dot(&u));
            }
        }

        #[test]
        fn candidates_are_k_orthogonal_or_degree_one() {
            for n in 0..=8 {
                let c = enumerate_negative_candidates(n).unwrap();
                let mk = DivisorClass::anticanonical(n);
                for e in &c.minus_one {
                    assert_eq!(e.dot(&mk), 1);
                    assert_eq!(classify_class(e), ClassKind::MinusOne);
                }
                for r in &c.roots {
                    assert_eq!(r.dot(&mk), 0);
                    assert_eq!(classify_class(r), ClassKind::Root);
                }
            }
        }
    }
}
