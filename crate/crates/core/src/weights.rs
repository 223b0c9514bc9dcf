//! Weights for the supported Cartan types, Weyl-orbit dominant
//! representatives, and partitions.
//!
//! Coordinates are the standard ones: `GL(n)` and `Sp(2n)` use the
//! `ε`-basis of `Z^n`; `SL(2)` stores the single integer `<wt, α^∨>`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(CartanContext, CartanContext),
    #[error("invalid rank {rank} for {family:?}")]
    BadRank { family: Family, rank: usize },
    #[error("weight has {got} coordinates, context {context} needs {want}")]
    LengthMismatch {
        context: CartanContext,
        got: usize,
        want: usize,
    },
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<i64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    GL,
    SL2,
    Sp,
}

/// A Cartan type together with its rank: `GL(n)` has rank `n`, `Sp(2n)` has
/// rank `n`, and `SL(2)` has rank 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ContextRepr")]
pub struct CartanContext {
    family: Family,
    rank: usize,
}

#[derive(Deserialize)]
struct ContextRepr {
    family: Family,
    rank: usize,
}

impl TryFrom<ContextRepr> for CartanContext {
    type Error = WeightError;
    fn try_from(r: ContextRepr) -> Result<Self, Self::Error> {
        CartanContext::new(r.family, r.rank)
    }
}

impl CartanContext {
    pub fn new(family: Family, rank: usize) -> Result<Self, WeightError> {
        let ok = match family {
            Family::SL2 => rank == 1,
            Family::GL | Family::Sp => rank >= 1,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(WeightError::BadRank { family, rank })
        }
    }

    pub fn gl(n: usize) -> Self {
        Self::new(Family::GL, n).expect("GL rank must be positive")
    }

    pub fn sl2() -> Self {
        Self {
            family: Family::SL2,
            rank: 1,
        }
    }

    /// `Sp(2n)`.
    pub fn sp(n: usize) -> Self {
        Self::new(Family::Sp, n).expect("Sp rank must be positive")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Labels of the simple roots: `1..n-1` for `GL(n)`, `1..n` for
    /// `Sp(2n)` (with `n` the long root), `1` for `SL(2)`.
    pub fn index_set(&self) -> std::ops::RangeInclusive<usize> {
        match self.family {
            Family::GL => 1..=self.rank - 1,
            Family::Sp => 1..=self.rank,
            Family::SL2 => 1..=1,
        }
    }

    pub fn zero(&self) -> Weight {
        Weight {
            context: *self,
            coords: vec![0; self.rank],
        }
    }

    pub fn weight(&self, coords: Vec<i64>) -> Result<Weight, WeightError> {
        Weight::new(*self, coords)
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        assert!(self.index_set().contains(&i), "simple root index {i} out of range");
        let mut v = vec![0; self.rank];
        match self.family {
            Family::SL2 => v[0] = 2,
            Family::Sp if i == self.rank => v[i - 1] = 2,
            Family::GL | Family::Sp => {
                v[i - 1] = 1;
                v[i] = -1;
            }
        }
        Weight {
            context: *self,
            coords: v,
        }
    }

    /// `<w, α_i^∨>`.
    pub fn pairing(&self, w: &Weight, i: usize) -> i64 {
        let c = &w.coords;
        match self.family {
            Family::SL2 => c[0],
            Family::Sp if i == self.rank => c[i - 1],
            Family::GL | Family::Sp => c[i - 1] - c[i],
        }
    }
}

impl fmt::Display for CartanContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::GL => write!(f, "GL({})", self.rank),
            Family::SL2 => f.write_str("SL(2)"),
            Family::Sp => write!(f, "Sp({})", 2 * self.rank),
        }
    }
}

/// A fixed-length integer weight in a declared context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr")]
pub struct Weight {
    #[serde(flatten)]
    context: CartanContext,
    coords: Vec<i64>,
}

#[derive(Deserialize)]
struct WeightRepr {
    family: Family,
    rank: usize,
    coords: Vec<i64>,
}

impl TryFrom<WeightRepr> for Weight {
    type Error = WeightError;
    fn try_from(r: WeightRepr) -> Result<Self, Self::Error> {
        Weight::new(CartanContext::new(r.family, r.rank)?, r.coords)
    }
}

impl Weight {
    pub fn new(context: CartanContext, coords: Vec<i64>) -> Result<Self, WeightError> {
        if coords.len() != context.rank {
            return Err(WeightError::LengthMismatch {
                context,
                got: coords.len(),
                want: context.rank,
            });
        }
        Ok(Self { context, coords })
    }

    pub fn context(&self) -> CartanContext {
        self.context
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight, WeightError> {
        self.same_context(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight, WeightError> {
        self.same_context(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn same_context(&self, other: &Weight) -> Result<(), WeightError> {
        if self.context == other.context {
            Ok(())
        } else {
            Err(WeightError::ContextMismatch(self.context, other.context))
        }
    }

    fn zip(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        Weight {
            context: self.context,
            coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// The dominant weight in the Weyl orbit of `self`.
    pub fn dom_w(&self) -> Weight {
        let mut coords = self.coords.clone();
        match self.context.family {
            Family::GL => {}
            Family::SL2 | Family::Sp => coords.iter_mut().for_each(|c| *c = c.abs()),
        }
        coords.sort_unstable_by(|a, b| b.cmp(a));
        Weight {
            context: self.context,
            coords,
        }
    }

    pub fn is_dominant(&self) -> bool {
        let decreasing = self.coords.windows(2).all(|w| w[0] >= w[1]);
        match self.context.family {
            Family::GL => decreasing,
            Family::SL2 | Family::Sp => decreasing && self.coords.last().is_none_or(|&c| c >= 0),
        }
    }

    /// All distinct images of `self` under the Weyl group (permutations for
    /// `GL`, signed permutations for `Sp`, sign changes for `SL2`).
    pub fn weyl_orbit(&self) -> Vec<Weight> {
        let mut out = std::collections::BTreeSet::new();
        let mut perm = self.coords.clone();
        perm.sort_unstable();
        loop {
            match self.context.family {
                Family::GL => {
                    out.insert(perm.clone());
                }
                Family::SL2 | Family::Sp => {
                    let n = perm.len();
                    for mask in 0u32..(1 << n) {
                        let v = perm
                            .iter()
                            .enumerate()
                            .map(|(k, &c)| if mask & (1 << k) != 0 { -c } else { c })
                            .collect::<Vec<_>>();
                        out.insert(v);
                    }
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out.into_iter()
            .map(|coords| Weight {
                context: self.context,
                coords,
            })
            .collect()
    }

    /// Interpret a dominant `GL`/`Sp` weight with nonnegative entries as a
    /// partition.
    pub fn to_partition(&self) -> Result<Partition, WeightError> {
        if self.context.family == Family::SL2 {
            return Err(WeightError::NotPartition(self.coords.clone()));
        }
        Partition::from_signed(&self.coords)
    }
}

fn next_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("weight context mismatch")
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs).expect("weight context mismatch")
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            context: self.context,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A partition. Trailing zeros are dropped on construction, so equality
/// ignores them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, WeightError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeightError::NotPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    fn from_signed(v: &[i64]) -> Result<Self, WeightError> {
        if v.iter().any(|&c| c < 0) {
            return Err(WeightError::NotPartition(v.to_vec()));
        }
        Self::new(v.iter().map(|&c| c as u32).collect()).map_err(|_| WeightError::NotPartition(v.to_vec()))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Pad to `rank` coordinates as a `GL`/`Sp` weight.
    pub fn to_weight(&self, context: CartanContext) -> Result<Weight, WeightError> {
        if self.len() > context.rank() || context.family() == Family::SL2 {
            return Err(WeightError::LengthMismatch {
                context,
                got: self.len(),
                want: context.rank(),
            });
        }
        let mut coords: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        coords.resize(context.rank(), 0);
        Weight::new(context, coords)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = WeightError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        Partition::from_signed(&v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// True when `inner ⊆ outer` and `outer / inner` has at most one box in each
/// column (horizontal) or each row (vertical).
pub fn strip_check(inner: &Partition, outer: &Partition, kind: StripKind) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    match kind {
        StripKind::Horizontal => (0..outer.len()).all(|i| i == 0 || outer.part(i) <= inner.part(i - 1)),
        StripKind::Vertical => (0..outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(ctx: CartanContext, v: &[i64]) -> Weight {
        Weight::new(ctx, v.to_vec()).unwrap()
    }

    #[test]
    fn dom_examples() {
        let gl4 = CartanContext::gl(4);
        assert_eq!(w(gl4, &[1, 2, 1, 0]).dom_w(), w(gl4, &[2, 1, 1, 0]));
        assert_eq!(w(gl4, &[1, 2, 1, 0]).dom_w().to_partition().unwrap(), p(&[2, 1, 1]));
        let sp4 = CartanContext::sp(2);
        assert_eq!(w(sp4, &[-1, 2]).dom_w(), w(sp4, &[2, 1]));
        assert_eq!(w(CartanContext::sl2(), &[-3]).dom_w(), w(CartanContext::sl2(), &[3]));
        let d = w(gl4, &[3, 1, 0, -2]);
        assert_eq!(d.dom_w(), d);
    }

    #[test]
    fn dominance() {
        let gl3 = CartanContext::gl(3);
        assert!(w(gl3, &[2, 1, 1]).is_dominant());
        assert!(!w(gl3, &[1, 2, 0]).is_dominant());
        assert!(w(gl3, &[0, 0, -1]).is_dominant());
        assert!(!w(CartanContext::sp(2), &[1, -1]).is_dominant());
        assert!(!w(CartanContext::sl2(), &[-1]).is_dominant());
    }

    #[test]
    fn dom_constant_on_orbits() {
        for ctx in [
            CartanContext::gl(1),
            CartanContext::gl(2),
            CartanContext::gl(3),
            CartanContext::gl(4),
            CartanContext::sp(1),
            CartanContext::sp(2),
            CartanContext::sp(3),
            CartanContext::sp(4),
            CartanContext::sl2(),
        ] {
            let n = ctx.rank() as u32;
            for code in 0..7i64.pow(n) {
                let coords: Vec<i64> = (0..n).map(|k| (code / 7i64.pow(k)) % 7 - 3).collect();
                let x = w(ctx, &coords);
                let d = x.dom_w();
                assert!(d.is_dominant());
                assert_eq!(d.dom_w(), d);
                for y in x.weyl_orbit() {
                    assert_eq!(y.dom_w(), d, "{ctx} {x} -> {y}");
                }
            }
        }
    }

    #[test]
    fn strips() {
        assert!(strip_check(&p(&[3]), &p(&[4, 1]), StripKind::Horizontal));
        assert!(strip_check(&p(&[1, 1, 1]), &p(&[2, 1, 1, 1]), StripKind::Vertical));
        assert!(!strip_check(&p(&[1]), &p(&[3, 1]), StripKind::Vertical));
        assert!(!strip_check(&p(&[1]), &p(&[1, 1, 1]), StripKind::Horizontal));
        assert!(!strip_check(&p(&[2]), &p(&[1, 1]), StripKind::Vertical));
        for q in [p(&[]), p(&[3, 1]), p(&[2, 2, 1])] {
            assert!(strip_check(&q, &q, StripKind::Horizontal));
            assert!(strip_check(&q, &q, StripKind::Vertical));
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
    }

    #[test]
    fn trailing_zeros_ignored() {
        assert_eq!(p(&[2, 1, 1, 0]), p(&[2, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn json_shapes() {
        let x = w(CartanContext::gl(3), &[2, 1, 0]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"family":"GL","rank":3,"coords":[2,1,0]}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), x);
        assert!(serde_json::from_str::<Weight>(r#"{"family":"GL","rank":3,"coords":[1]}"#).is_err());
        assert!(serde_json::from_str::<Weight>(r#"{"family":"SL2","rank":2,"coords":[1,1]}"#).is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn conjugate_is_involution(mut v in prop::collection::vec(0u32..7, 0..7)) {
                v.sort_unstable_by(|a, b| b.cmp(a));
                let q = Partition::new(v).unwrap();
                prop_assert_eq!(q.conjugate().conjugate(), q.clone());
                prop_assert_eq!(q.conjugate().size(), q.size());
            }
        }
    }
}
