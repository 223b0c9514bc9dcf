//! The cactus group as formal words in the generators `s_{p,q}`.
//!
//! A word `g_1 g_2 … g_k` acts by applying `g_k` first.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CactusError {
    #[error("generator s({p},{q}) needs 1 <= p < q <= {r}")]
    BadGenerator { p: usize, q: usize, r: usize },
    #[error("τ_{i} needs 1 <= i < {r}")]
    BadTau { i: usize, r: usize },
    #[error("relation side condition fails: {0}")]
    BadParams(String),
    #[error("cannot parse cactus word: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CactusGen {
    p: usize,
    q: usize,
}

impl CactusGen {
    pub fn new(p: usize, q: usize, r: usize) -> Result<Self, CactusError> {
        if 1 <= p && p < q && q <= r {
            Ok(Self { p, q })
        } else {
            Err(CactusError::BadGenerator { p, q, r })
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Every generator of `𝔠_r`.
    pub fn all(r: usize) -> Vec<CactusGen> {
        (1..=r)
            .flat_map(|p| (p + 1..=r).map(move |q| CactusGen { p, q }))
            .collect()
    }

    pub fn contains(&self, other: &CactusGen) -> bool {
        self.p <= other.p && other.q <= self.q
    }

    pub fn disjoint(&self, other: &CactusGen) -> bool {
        self.q < other.p || other.q < self.p
    }

    /// `ŝ_{p,q}(i)`.
    pub fn reflect(&self, i: usize) -> usize {
        if self.p <= i && i <= self.q {
            self.p + self.q - i
        } else {
            i
        }
    }
}

impl fmt::Display for CactusGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CactusWord {
    r: usize,
    gens: Vec<CactusGen>,
}

impl CactusWord {
    pub fn identity(r: usize) -> Self {
        Self { r, gens: Vec::new() }
    }

    pub fn new(r: usize, gens: Vec<CactusGen>) -> Result<Self, CactusError> {
        for g in &gens {
            CactusGen::new(g.p, g.q, r)?;
        }
        Ok(Self { r, gens })
    }

    pub fn from_pairs(r: usize, pairs: &[(usize, usize)]) -> Result<Self, CactusError> {
        let gens = pairs
            .iter()
            .map(|&(p, q)| CactusGen::new(p, q, r))
            .collect::<Result<_, _>>()?;
        Ok(Self { r, gens })
    }

    pub fn generator(g: CactusGen, r: usize) -> Result<Self, CactusError> {
        Self::new(r, vec![g])
    }

    /// Parse `s(1,4) s(2,3)`; the empty string is the identity.
    pub fn parse(r: usize, s: &str) -> Result<Self, CactusError> {
        let err = || CactusError::Parse(s.to_string());
        let mut gens = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix("s(").ok_or_else(err)?;
            let close = body.find(')').ok_or_else(err)?;
            let (a, b) = body[..close].split_once(',').ok_or_else(err)?;
            let p = a.trim().parse().map_err(|_| err())?;
            let q = b.trim().parse().map_err(|_| err())?;
            gens.push(CactusGen::new(p, q, r)?);
            rest = body[close + 1..].trim_start_matches([' ', '*', '·']).trim_start();
        }
        Ok(Self { r, gens })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn gens(&self) -> &[CactusGen] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self · other` (so `other` acts first).
    pub fn then_after(&self, other: &CactusWord) -> CactusWord {
        assert_eq!(self.r, other.r, "strand counts differ");
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        CactusWord { r: self.r, gens }
    }

    pub fn inverse(&self) -> CactusWord {
        CactusWord {
            r: self.r,
            gens: self.gens.iter().rev().copied().collect(),
        }
    }

    /// Rewrite every generator in terms of `s_{1,q}`.
    pub fn reduce_to_s1q(&self) -> CactusWord {
        let gens = self.gens.iter().flat_map(|&g| reduce_to_s1q(g).gens).collect();
        CactusWord { r: self.r, gens }
    }

    pub fn perm_image(&self) -> Permutation {
        perm_image(self)
    }
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for CactusWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.gens.iter().map(|g| [g.p, g.q]))
    }
}

/// A permutation of `1..=r` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Self((1..=r).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i == 0 || i > images.len() || std::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Self(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &i)| i == k + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The image of a word in `S_r`.
pub fn perm_image(w: &CactusWord) -> Permutation {
    let images = (1..=w.r)
        .map(|i| w.gens.iter().rev().fold(i, |x, g| g.reflect(x)))
        .collect();
    Permutation(images)
}

/// `s_{p,q} = s_{1,q} s_{1,q−p+1} s_{1,q}`.
pub fn reduce_to_s1q(g: CactusGen) -> CactusWord {
    let r = g.q;
    if g.p == 1 {
        return CactusWord { r, gens: vec![g] };
    }
    let outer = CactusGen { p: 1, q: g.q };
    let inner = CactusGen { p: 1, q: g.q - g.p + 1 };
    CactusWord {
        r,
        gens: vec![outer, inner, outer],
    }
}

/// Generator `τ_i` of the Bender-Knuth style presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TauGen {
    pub i: usize,
}

impl fmt::Display for TauGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.i)
    }
}

/// `q_i = τ_1 (τ_2 τ_1) ⋯ (τ_i τ_{i−1} ⋯ τ_1)`, leftmost first.
pub fn q_word(i: usize) -> Vec<TauGen> {
    (1..=i).flat_map(|k| (1..=k).rev().map(|j| TauGen { i: j })).collect()
}

/// `s_{i,j} ↦ q_{j−1} q_{j−i} q_{j−1}`.
pub fn s_to_tau(g: CactusGen) -> Vec<TauGen> {
    let mut out = q_word(g.q - 1);
    out.extend(q_word(g.q - g.p));
    out.extend(q_word(g.q - 1));
    out
}

pub fn tau_to_s(t: TauGen, r: usize) -> Result<CactusWord, CactusError> {
    let i = t.i;
    if i == 0 || i >= r {
        return Err(CactusError::BadTau { i, r });
    }
    let s = |q| (1, q);
    let pairs = match i {
        1 => vec![s(2)],
        2 => vec![s(2), s(3), s(2)],
        _ => vec![s(i), s(i + 1), s(i), s(i - 1)],
    };
    CactusWord::from_pairs(r, &pairs)
}

/// Expand a `τ`-word into a cactus word.
pub fn tau_word_to_cactus(word: &[TauGen], r: usize) -> Result<CactusWord, CactusError> {
    let mut gens = Vec::new();
    for &t in word {
        gens.extend(tau_to_s(t, r)?.gens);
    }
    Ok(CactusWord { r, gens })
}

/// The third relation of the `τ`-presentation:
/// `(τ_i q_{k−1} q_{k−j} q_{k−1})^2` for `i + 1 < j < k`.
pub fn tau_third_relation(i: usize, j: usize, k: usize) -> Result<Vec<TauGen>, CactusError> {
    if !(i >= 1 && i + 1 < j && j < k) {
        return Err(CactusError::BadParams(format!(
            "need i + 1 < j < k, got i={i} j={j} k={k}"
        )));
    }
    let mut once = vec![TauGen { i }];
    once.extend(q_word(k - 1));
    once.extend(q_word(k - j));
    once.extend(q_word(k - 1));
    let mut twice = once.clone();
    twice.extend(once);
    Ok(twice)
}

/// Something the cactus group acts on.
pub trait CactusAction {
    type Point: Clone + PartialEq + fmt::Debug;
    type Error;

    fn act_gen(&self, g: CactusGen, x: &Self::Point) -> Result<Self::Point, Self::Error>;

    fn act_word(&self, w: &CactusWord, x: &Self::Point) -> Result<Self::Point, Self::Error> {
        w.gens.iter().rev().try_fold(x.clone(), |acc, &g| self.act_gen(g, &acc))
    }
}

/// `S_r` acting on sequences by reversing the segment `p..=q`, through
/// `perm_image`.
pub struct PermutationAction;

impl CactusAction for PermutationAction {
    type Point = Vec<usize>;
    type Error = std::convert::Infallible;

    fn act_gen(&self, g: CactusGen, x: &Vec<usize>) -> Result<Vec<usize>, Self::Error> {
        let mut y = x.clone();
        y[g.p - 1..g.q].reverse();
        Ok(y)
    }
}

/// One of the defining relations, as a pair of words to compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `s_{p,q}^2 = 1`
    Involution(CactusGen),
    /// `s_{p,q} s_{k,l} = s_{k,l} s_{p,q}` for disjoint intervals
    Disjoint(CactusGen, CactusGen),
    /// `s_{p,q} s_{k,l} = s_{p+q−l,p+q−k} s_{p,q}` for `[k,l] ⊆ [p,q]`
    Nested(CactusGen, CactusGen),
}

impl Relation {
    pub fn sides(&self, r: usize) -> Result<(CactusWord, CactusWord), CactusError> {
        let w = |gens: Vec<CactusGen>| CactusWord::new(r, gens);
        match *self {
            Relation::Involution(g) => Ok((w(vec![g, g])?, CactusWord::identity(r))),
            Relation::Disjoint(a, b) => {
                if !a.disjoint(&b) {
                    return Err(CactusError::BadParams(format!("{a} and {b} overlap")));
                }
                Ok((w(vec![a, b])?, w(vec![b, a])?))
            }
            Relation::Nested(a, b) => {
                if !a.contains(&b) {
                    return Err(CactusError::BadParams(format!("{b} is not inside {a}")));
                }
                let m = CactusGen {
                    p: a.p + a.q - b.q,
                    q: a.p + a.q - b.p,
                };
                Ok((w(vec![a, b])?, w(vec![m, a])?))
            }
        }
    }

    /// Every instance of the defining relations in `𝔠_r`.
    pub fn all(r: usize) -> Vec<Relation> {
        let gens = CactusGen::all(r);
        let mut out: Vec<Relation> = gens.iter().map(|&g| Relation::Involution(g)).collect();
        for &a in &gens {
            for &b in &gens {
                if a.disjoint(&b) && a < b {
                    out.push(Relation::Disjoint(a, b));
                }
                if a.contains(&b) {
                    out.push(Relation::Nested(a, b));
                }
            }
        }
        out
    }
}

/// Whether both sides of `rel` act identically on every point.
pub fn relation_check<A: CactusAction>(
    rel: Relation,
    r: usize,
    action: &A,
    points: &[A::Point],
) -> Result<Result<bool, A::Error>, CactusError> {
    let (lhs, rhs) = rel.sides(r)?;
    for x in points {
        let a = match action.act_word(&lhs, x) {
            Ok(a) => a,
            Err(e) => return Ok(Err(e)),
        };
        let b = match action.act_word(&rhs, x) {
            Ok(b) => b,
            Err(e) => return Ok(Err(e)),
        };
        if a != b {
            return Ok(Ok(false));
        }
    }
    Ok(Ok(true))
}

impl FromStr for CactusGen {
    type Err = CactusError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w = CactusWord::parse(usize::MAX, s)?;
        match w.gens.as_slice() {
            [g] => Ok(*g),
            _ => Err(CactusError::Parse(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: usize, q: usize) -> CactusGen {
        CactusGen { p, q }
    }

    fn word(r: usize, pairs: &[(usize, usize)]) -> CactusWord {
        CactusWord::from_pairs(r, pairs).unwrap()
    }

    fn tau_perm(t: &[TauGen], r: usize) -> Permutation {
        // τ_i reflects positions i, i+1
        let images = (1..=r)
            .map(|x| t.iter().rev().fold(x, |x, t| g(t.i, t.i + 1).reflect(x)))
            .collect();
        Permutation(images)
    }

    #[test]
    fn perm_examples() {
        assert_eq!(word(3, &[(1, 3)]).perm_image().images(), &[3, 2, 1]);
        assert_eq!(
            word(3, &[(1, 3), (1, 2), (1, 3)]).perm_image(),
            word(3, &[(2, 3)]).perm_image()
        );
        assert!(CactusWord::identity(5).perm_image().is_identity());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_to_s1q(g(1, 5)).gens(), &[g(1, 5)]);
        assert_eq!(reduce_to_s1q(g(2, 3)).gens(), &[g(1, 3), g(1, 2), g(1, 3)]);
        assert_eq!(reduce_to_s1q(g(2, 4)).gens(), &[g(1, 4), g(1, 3), g(1, 4)]);
    }

    #[test]
    fn reduce_preserves_permutation() {
        for r in 2..=7 {
            for gen in CactusGen::all(r) {
                let lhs = CactusWord::generator(gen, r).unwrap();
                let reduced = CactusWord::new(r, reduce_to_s1q(gen).gens).unwrap();
                assert_eq!(lhs.perm_image(), reduced.perm_image(), "{gen}");
                assert!(reduced.gens().iter().all(|h| h.p() == 1));
            }
        }
    }

    #[test]
    fn perm_respects_relations() {
        for r in 1..=7 {
            let points = vec![(1..=r).collect::<Vec<_>>()];
            for rel in Relation::all(r) {
                assert!(
                    relation_check(rel, r, &PermutationAction, &points).unwrap().unwrap(),
                    "{rel:?}"
                );
                let (a, b) = rel.sides(r).unwrap();
                assert_eq!(a.perm_image(), b.perm_image());
            }
        }
    }

    #[test]
    fn permutation_action_matches_image() {
        let w = word(5, &[(1, 4), (2, 5), (3, 4)]);
        let pi = w.perm_image();
        let list: Vec<usize> = (1..=5).collect();
        let moved = PermutationAction.act_word(&w, &list).unwrap();
        for (k, &x) in list.iter().enumerate() {
            assert_eq!(moved[pi.apply(k + 1) - 1], x);
        }
    }

    #[test]
    fn relation_params() {
        assert!(Relation::Disjoint(g(1, 3), g(3, 4)).sides(4).is_err());
        assert!(Relation::Nested(g(2, 3), g(1, 4)).sides(4).is_err());
        let (a, b) = Relation::Nested(g(1, 6), g(2, 3)).sides(6).unwrap();
        assert_eq!(a.to_string(), "s(1,6) s(2,3)");
        assert_eq!(b.to_string(), "s(4,5) s(1,6)");
    }

    #[test]
    fn tau_generators() {
        assert_eq!(tau_to_s(TauGen { i: 1 }, 3).unwrap().to_string(), "s(1,2)");
        assert_eq!(
            tau_to_s(TauGen { i: 2 }, 3).unwrap().to_string(),
            "s(1,2) s(1,3) s(1,2)"
        );
        assert!(tau_to_s(TauGen { i: 3 }, 3).is_err());
        for r in 2..=7 {
            for i in 1..r {
                let t = TauGen { i };
                assert_eq!(
                    tau_to_s(t, r).unwrap().perm_image(),
                    word(r, &[(i, i + 1)]).perm_image()
                );
            }
            for gen in CactusGen::all(r) {
                let tw = s_to_tau(gen);
                assert_eq!(
                    tau_perm(&tw, r),
                    CactusWord::generator(gen, r).unwrap().perm_image(),
                    "{gen}"
                );
                let back = tau_word_to_cactus(&tw, r).unwrap();
                assert_eq!(back.perm_image(), CactusWord::generator(gen, r).unwrap().perm_image());
            }
        }
    }

    #[test]
    fn q_words() {
        let show = |v: Vec<TauGen>| v.iter().map(|t| t.i.to_string()).collect::<String>();
        assert_eq!(show(q_word(1)), "1");
        assert_eq!(show(q_word(3)), "121321");
        assert!(tau_third_relation(1, 2, 4).is_err());
        assert_eq!(tau_third_relation(1, 3, 4).unwrap().len(), 2 * (1 + 6 + 1 + 6));
    }

    #[test]
    fn text_and_json() {
        let w = CactusWord::parse(6, "s(1,4) s(2,3)").unwrap();
        assert_eq!(w.to_string(), "s(1,4) s(2,3)");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[[1,4],[2,3]]");
        assert!(CactusWord::parse(3, "s(1,4)").is_err());
        assert!(CactusWord::parse(3, "s(2,2)").is_err());
        assert!(CactusWord::parse(3, "t(1,2)").is_err());
        assert!(CactusWord::parse(3, "").unwrap().is_empty());
        assert_eq!("s(2,5)".parse::<CactusGen>().unwrap(), g(2, 5));
    }
}
