//! Paths of dominant weights, the minuscule cell rule
//! `μ = dom_W(κ + ν − λ)`, and the involutions `τ_i` on highest weight words.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weights::{CartanContext, Family, Partition, Weight, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalRuleError {
    #[error("invalid step {from} -> {to} for {kind} in {context}")]
    InvalidStep {
        context: CartanContext,
        kind: StepKind,
        from: Weight,
        to: Weight,
    },
    #[error("corner {0} is not dominant")]
    NotDominant(Weight),
    #[error("word must start at the zero weight, found {0}")]
    NotRooted(Weight),
    #[error("{steps} steps need {} corners, got {corners}", steps + 1)]
    LengthMismatch { steps: usize, corners: usize },
    #[error("position {i} out of range 1..={max}")]
    BadPosition { i: usize, max: usize },
    #[error("step {0} is not available in {1}")]
    UnsupportedStep(StepKind, CartanContext),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("cannot parse corner {0:?}")]
    Parse(String),
}

/// Which minuscule crystal a step comes from. For `GL(n)` the vector
/// representation is `Exterior(1)`; `Exterior(0)` is the trivial crystal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Vector,
    Exterior(usize),
}

impl StepKind {
    /// Canonical form in `context`.
    pub fn normalize(self, context: CartanContext) -> Result<StepKind, LocalRuleError> {
        match (context.family(), self) {
            (Family::GL, StepKind::Vector) => Ok(StepKind::Exterior(1)),
            (Family::GL, StepKind::Exterior(k)) if k <= context.rank() => Ok(self),
            (Family::SL2 | Family::Sp, StepKind::Vector) => Ok(self),
            _ => Err(LocalRuleError::UnsupportedStep(self, context)),
        }
    }

    /// Weights of the crystal: one Weyl orbit.
    pub fn weights(self, context: CartanContext) -> Vec<Weight> {
        let n = context.rank();
        let coords: Vec<Vec<i64>> = match (context.family(), self) {
            (Family::GL, StepKind::Vector) => return StepKind::Exterior(1).weights(context),
            (Family::GL, StepKind::Exterior(k)) => {
                let mut v = vec![0; n];
                v[..k.min(n)].iter_mut().for_each(|c| *c = 1);
                return Weight::new(context, v).expect("rank-length").weyl_orbit();
            }
            _ => (0..n)
                .flat_map(|j| {
                    [1, -1].map(|s| {
                        let mut v = vec![0; n];
                        v[j] = s;
                        v
                    })
                })
                .collect(),
        };
        coords
            .into_iter()
            .map(|c| Weight::new(context, c).expect("rank-length"))
            .collect()
    }

    /// Whether `to − from` is a weight of this crystal.
    pub fn admits(self, from: &Weight, to: &Weight) -> bool {
        let d = to - from;
        match (from.context().family(), self) {
            (Family::GL, StepKind::Vector) => StepKind::Exterior(1).admits(from, to),
            (Family::GL, StepKind::Exterior(k)) => {
                d.coords().iter().all(|&c| c == 0 || c == 1) && d.coords().iter().filter(|&&c| c == 1).count() == k
            }
            (_, StepKind::Vector) => d.coords().iter().map(|c| c.abs()).sum::<i64>() == 1,
            _ => false,
        }
    }

    /// The kind of a step `from -> to` when the weights determine it.
    pub fn infer(from: &Weight, to: &Weight) -> Option<StepKind> {
        let d = to - from;
        match from.context().family() {
            Family::GL => d
                .coords()
                .iter()
                .all(|&c| c == 0 || c == 1)
                .then(|| StepKind::Exterior(d.coords().iter().filter(|&&c| c == 1).count())),
            Family::SL2 | Family::Sp => {
                (d.coords().iter().map(|c| c.abs()).sum::<i64>() == 1).then_some(StepKind::Vector)
            }
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Vector => f.write_str("vector"),
            StepKind::Exterior(k) => write!(f, "exterior({k})"),
        }
    }
}

fn check_step(kind: StepKind, from: &Weight, to: &Weight) -> Result<(), LocalRuleError> {
    if !to.is_dominant() {
        return Err(LocalRuleError::NotDominant(to.clone()));
    }
    if kind.admits(from, to) {
        Ok(())
    } else {
        Err(LocalRuleError::InvalidStep {
            context: from.context(),
            kind,
            from: from.clone(),
            to: to.clone(),
        })
    }
}

/// `dom_W(κ + ν − λ)` with no validity checks.
pub fn local_rule(kappa: &Weight, lambda: &Weight, nu: &Weight) -> Weight {
    (&(kappa + nu) - lambda).dom_w()
}

/// Complete a cell with `κ` bottom-left, `λ` top-left and `ν` top-right,
/// returning the bottom-right corner `μ`. The step kinds are read off the
/// weights and the completed cell is checked.
pub fn complete_cell(kappa: &Weight, lambda: &Weight, nu: &Weight) -> Result<Weight, LocalRuleError> {
    for w in [kappa, lambda, nu] {
        if !w.is_dominant() {
            return Err(LocalRuleError::NotDominant(w.clone()));
        }
    }
    let invalid = |from: &Weight, to: &Weight| LocalRuleError::InvalidStep {
        context: from.context(),
        kind: StepKind::Vector,
        from: from.clone(),
        to: to.clone(),
    };
    let b = StepKind::infer(kappa, lambda).ok_or_else(|| invalid(kappa, lambda))?;
    let c = StepKind::infer(lambda, nu).ok_or_else(|| invalid(lambda, nu))?;
    let mu = local_rule(kappa, lambda, nu);
    check_step(c, kappa, &mu)?;
    check_step(b, &mu, nu)?;
    Ok(mu)
}

/// A path of dominant weights `λ_0 → λ_1 → … → λ_r` whose `k`-th step is a
/// weight of the minuscule crystal `steps[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightPath {
    context: CartanContext,
    steps: Vec<StepKind>,
    #[serde(serialize_with = "ser_corners")]
    corners: Vec<Weight>,
}

fn ser_corners<S: serde::Serializer>(c: &[Weight], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|w| w.coords()))
}

#[derive(Deserialize)]
struct PathRepr {
    context: CartanContext,
    steps: Vec<StepKind>,
    corners: Vec<Vec<i64>>,
}

impl<'de> Deserialize<'de> for WeightPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PathRepr::deserialize(d)?;
        let corners = r
            .corners
            .into_iter()
            .map(|c| Weight::new(r.context, c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        WeightPath::new(r.context, r.steps, corners).map_err(serde::de::Error::custom)
    }
}

impl WeightPath {
    pub fn new(context: CartanContext, steps: Vec<StepKind>, corners: Vec<Weight>) -> Result<Self, LocalRuleError> {
        if corners.len() != steps.len() + 1 {
            return Err(LocalRuleError::LengthMismatch {
                steps: steps.len(),
                corners: corners.len(),
            });
        }
        let steps = steps
            .into_iter()
            .map(|s| s.normalize(context))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(w) = corners.iter().find(|w| w.context() != context) {
            return Err(WeightError::ContextMismatch(context, w.context()).into());
        }
        if !corners[0].is_dominant() {
            return Err(LocalRuleError::NotDominant(corners[0].clone()));
        }
        for (k, s) in steps.iter().enumerate() {
            check_step(*s, &corners[k], &corners[k + 1])?;
        }
        Ok(Self {
            context,
            steps,
            corners,
        })
    }

    /// Build from corners alone, inferring each step kind.
    pub fn from_corners(context: CartanContext, corners: Vec<Weight>) -> Result<Self, LocalRuleError> {
        let mut steps = Vec::with_capacity(corners.len().saturating_sub(1));
        for w in corners.windows(2) {
            let k = StepKind::infer(&w[0], &w[1]).ok_or_else(|| LocalRuleError::InvalidStep {
                context,
                kind: StepKind::Vector,
                from: w[0].clone(),
                to: w[1].clone(),
            })?;
            steps.push(k);
        }
        Self::new(context, steps, corners)
    }

    pub(crate) fn from_parts_unchecked(context: CartanContext, steps: Vec<StepKind>, corners: Vec<Weight>) -> Self {
        debug_assert_eq!(corners.len(), steps.len() + 1);
        Self {
            context,
            steps,
            corners,
        }
    }

    pub fn context(&self) -> CartanContext {
        self.context
    }

    /// Number of steps `r`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[StepKind] {
        &self.steps
    }

    pub fn corners(&self) -> &[Weight] {
        &self.corners
    }

    pub fn corner(&self, k: usize) -> &Weight {
        &self.corners[k]
    }

    pub fn last(&self) -> &Weight {
        self.corners.last().expect("nonempty corners")
    }

    /// Replace `λ_i` by `dom_W(λ_{i−1} + λ_{i+1} − λ_i)` and swap the step
    /// kinds at `i` and `i+1`.
    pub fn tau(&self, i: usize) -> Result<Self, LocalRuleError> {
        let r = self.len();
        if i == 0 || i >= r {
            return Err(LocalRuleError::BadPosition {
                i,
                max: r.saturating_sub(1),
            });
        }
        let mu = local_rule(&self.corners[i - 1], &self.corners[i], &self.corners[i + 1]);
        check_step(self.steps[i], &self.corners[i - 1], &mu)?;
        check_step(self.steps[i - 1], &mu, &self.corners[i + 1])?;
        let mut out = self.clone();
        out.corners[i] = mu;
        out.steps.swap(i - 1, i);
        Ok(out)
    }

    /// `τ_{r−1} ∘ … ∘ τ_split`: moves step `split` to the end.
    pub fn commutor_prefix(&self, split: usize) -> Result<Self, LocalRuleError> {
        let r = self.len();
        if split == 0 || split >= r {
            return Err(LocalRuleError::BadPosition {
                i: split,
                max: r.saturating_sub(1),
            });
        }
        (split..r).try_fold(self.clone(), |w, i| w.tau(i))
    }

    /// The first `k` steps.
    pub fn prefix(&self, k: usize) -> Self {
        Self {
            context: self.context,
            steps: self.steps[..k].to_vec(),
            corners: self.corners[..=k].to_vec(),
        }
    }

    /// Corners rendered as partitions where possible, e.g. `∅,1,2,21`.
    pub fn corner_string(&self) -> String {
        self.corners.iter().map(format_corner).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for WeightPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.corner_string())
    }
}

/// Compact corner rendering: `∅`, `21` for single-digit partitions,
/// otherwise `[10,2]` or the raw coordinates.
pub fn format_corner(w: &Weight) -> String {
    if w.context().family() == Family::SL2 {
        return w.coords()[0].to_string();
    }
    match w.to_partition() {
        Ok(p) if p.is_empty() => "∅".to_string(),
        Ok(p) if p.parts().iter().all(|&x| x < 10) => p.parts().iter().map(|x| x.to_string()).collect(),
        Ok(p) => p.to_string(),
        Err(_) => w.to_string(),
    }
}

/// Inverse of [`format_corner`]; also accepts `[2,1]` and `(2,1,0)`.
pub fn parse_corner(context: CartanContext, s: &str) -> Result<Weight, LocalRuleError> {
    let t = s.trim();
    let err = || LocalRuleError::Parse(s.to_string());
    if context.family() == Family::SL2 {
        let v: i64 = t.trim_matches(|c| c == '[' || c == ']').parse().map_err(|_| err())?;
        return Ok(Weight::new(context, vec![v])?);
    }
    let mut coords: Vec<i64> = if t.is_empty() || t == "∅" || t == "0" || t == "[]" {
        Vec::new()
    } else if let Some(inner) = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
    {
        inner
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| err()))
            .collect::<Result<_, _>>()?
    } else {
        t.chars()
            .map(|c| c.to_digit(10).map(i64::from).ok_or_else(err))
            .collect::<Result<_, _>>()?
    };
    if coords.len() > context.rank() {
        return Err(err());
    }
    coords.resize(context.rank(), 0);
    Ok(Weight::new(context, coords)?)
}

/// A path starting at the zero weight, i.e. a highest weight word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HighestWeightWord(WeightPath);

impl<'de> Deserialize<'de> for HighestWeightWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let p = WeightPath::deserialize(d)?;
        HighestWeightWord::try_from(p).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<WeightPath> for HighestWeightWord {
    type Error = LocalRuleError;
    fn try_from(p: WeightPath) -> Result<Self, Self::Error> {
        if !p.corners[0].is_zero() {
            return Err(LocalRuleError::NotRooted(p.corners[0].clone()));
        }
        Ok(Self(p))
    }
}

impl Deref for HighestWeightWord {
    type Target = WeightPath;
    fn deref(&self) -> &WeightPath {
        &self.0
    }
}

impl fmt::Display for HighestWeightWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl HighestWeightWord {
    pub fn new(context: CartanContext, steps: Vec<StepKind>, corners: Vec<Weight>) -> Result<Self, LocalRuleError> {
        WeightPath::new(context, steps, corners)?.try_into()
    }

    pub fn from_corners(context: CartanContext, corners: Vec<Weight>) -> Result<Self, LocalRuleError> {
        WeightPath::from_corners(context, corners)?.try_into()
    }

    /// Parse comma-separated corners such as `∅,1,2,21,11,1,∅`.
    pub fn parse(context: CartanContext, s: &str) -> Result<Self, LocalRuleError> {
        let corners = s
            .split(',')
            .map(|c| parse_corner(context, c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_corners(context, corners)
    }

    /// Parse a bracketed list of partitions such as `[],[3],[4,1]`.
    pub fn parse_partitions(context: CartanContext, s: &str) -> Result<Self, LocalRuleError> {
        let mut corners = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let end = rest.find(']').ok_or_else(|| LocalRuleError::Parse(s.to_string()))?;
            corners.push(parse_corner(context, &rest[..=end])?);
            rest = rest[end + 1..].trim_start_matches([',', ' ']);
        }
        Self::from_corners(context, corners)
    }

    /// The word of a partition sequence, one weight per partition.
    pub fn from_partitions(context: CartanContext, parts: &[Partition]) -> Result<Self, LocalRuleError> {
        let corners = parts
            .iter()
            .map(|p| p.to_weight(context))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_corners(context, corners)
    }

    pub fn path(&self) -> &WeightPath {
        &self.0
    }

    pub fn into_path(self) -> WeightPath {
        self.0
    }

    pub fn tau(&self, i: usize) -> Result<Self, LocalRuleError> {
        Ok(Self(self.0.tau(i)?))
    }

    pub fn commutor_prefix(&self, split: usize) -> Result<Self, LocalRuleError> {
        Ok(Self(self.0.commutor_prefix(split)?))
    }

    pub fn prefix(&self, k: usize) -> Self {
        Self(self.0.prefix(k))
    }

    pub fn shape(&self) -> &Weight {
        self.0.last()
    }

    /// Corner partitions (for `GL`/`Sp`).
    pub fn partitions(&self) -> Result<Vec<Partition>, LocalRuleError> {
        Ok(self
            .corners()
            .iter()
            .map(Weight::to_partition)
            .collect::<Result<Vec<_>, _>>()?)
    }
}

/// Every highest weight word with the given step kinds.
pub fn all_words(context: CartanContext, steps: &[StepKind]) -> Result<Vec<HighestWeightWord>, LocalRuleError> {
    let steps = steps
        .iter()
        .map(|s| s.normalize(context))
        .collect::<Result<Vec<_>, _>>()?;
    let deltas: Vec<Vec<Weight>> = steps.iter().map(|s| s.weights(context)).collect();
    let mut out = Vec::new();
    let mut corners = vec![context.zero()];
    fn go(
        k: usize,
        deltas: &[Vec<Weight>],
        corners: &mut Vec<Weight>,
        steps: &[StepKind],
        out: &mut Vec<HighestWeightWord>,
    ) {
        if k == deltas.len() {
            let p = WeightPath::from_parts_unchecked(corners[0].context(), steps.to_vec(), corners.clone());
            out.push(HighestWeightWord(p));
            return;
        }
        for d in &deltas[k] {
            let next = &corners[k] + d;
            if next.is_dominant() {
                corners.push(next);
                go(k + 1, deltas, corners, steps, out);
                corners.pop();
            }
        }
    }
    go(0, &deltas, &mut corners, &steps, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{build_minuscule, Crystal, ElementId, Minuscule};

    fn w(ctx: CartanContext, v: &[i64]) -> Weight {
        Weight::new(ctx, v.to_vec()).unwrap()
    }

    fn suites() -> Vec<(CartanContext, StepKind, usize)> {
        vec![
            (CartanContext::gl(2), StepKind::Vector, 6),
            (CartanContext::gl(3), StepKind::Vector, 6),
            (CartanContext::sp(2), StepKind::Vector, 6),
            (CartanContext::gl(4), StepKind::Exterior(2), 4),
            (CartanContext::sl2(), StepKind::Vector, 6),
        ]
    }

    #[test]
    fn cell_examples() {
        let gl2 = CartanContext::gl(2);
        assert_eq!(
            complete_cell(&w(gl2, &[1, 0]), &w(gl2, &[2, 0]), &w(gl2, &[2, 1])).unwrap(),
            w(gl2, &[1, 1])
        );
        let gl4 = CartanContext::gl(4);
        let mu = complete_cell(&w(gl4, &[1, 1, 1, 0]), &w(gl4, &[2, 1, 1, 1]), &w(gl4, &[2, 2, 1, 1])).unwrap();
        assert_eq!(mu, w(gl4, &[2, 1, 1, 0]));
        let k = w(gl4, &[2, 1, 0, 0]);
        assert_eq!(complete_cell(&k, &k, &k).unwrap(), k);
        // not a step at all
        assert!(matches!(
            complete_cell(&w(gl2, &[0, 0]), &w(gl2, &[2, 0]), &w(gl2, &[2, 1])),
            Err(LocalRuleError::InvalidStep { .. })
        ));
        assert!(complete_cell(&w(gl2, &[0, 1]), &w(gl2, &[1, 1]), &w(gl2, &[2, 1])).is_err());
    }

    #[test]
    fn cell_rule_is_symmetric() {
        for (ctx, kind, r) in suites() {
            for word in all_words(ctx, &vec![kind; r.min(4)]).unwrap() {
                for i in 1..word.len() {
                    let (k, l, n) = (word.corner(i - 1), word.corner(i), word.corner(i + 1));
                    let mu = complete_cell(k, l, n).unwrap();
                    assert_eq!(&local_rule(k, &mu, n), l);
                }
            }
        }
    }

    #[test]
    fn tau_example() {
        let gl2 = CartanContext::gl(2);
        let word = HighestWeightWord::parse(gl2, "∅,1,2,21").unwrap();
        assert_eq!(word.tau(2).unwrap().to_string(), "∅,1,11,21");
        assert!(word.tau(0).is_err());
        assert!(word.tau(3).is_err());
    }

    #[test]
    fn bk_conjugate_sequence() {
        let gl4 = CartanContext::gl(4);
        let word =
            HighestWeightWord::parse_partitions(gl4, "[],[1,1,1],[2,1,1,1],[2,2,1,1],[3,2,1,1],[3,2,1,1]").unwrap();
        assert_eq!(
            word.steps(),
            &[
                StepKind::Exterior(3),
                StepKind::Exterior(2),
                StepKind::Exterior(1),
                StepKind::Exterior(1),
                StepKind::Exterior(0)
            ]
        );
        let out = word.tau(2).unwrap();
        assert_eq!(out.steps()[1..3], [StepKind::Exterior(1), StepKind::Exterior(2)]);
        let expect =
            HighestWeightWord::parse_partitions(gl4, "[],[1,1,1],[2,1,1],[2,2,1,1],[3,2,1,1],[3,2,1,1]").unwrap();
        assert_eq!(out, expect);
    }

    #[test]
    fn mixed_steps_swap() {
        let gl3 = CartanContext::gl(3);
        let word = HighestWeightWord::parse(gl3, "∅,11,21").unwrap();
        assert_eq!(word.steps(), &[StepKind::Exterior(2), StepKind::Exterior(1)]);
        let t = word.tau(1).unwrap();
        assert_eq!(t.to_string(), "∅,1,21");
        assert_eq!(t.steps(), &[StepKind::Exterior(1), StepKind::Exterior(2)]);
    }

    #[test]
    fn tau_involutive_and_local() {
        for (ctx, kind, r) in suites() {
            let words = all_words(ctx, &vec![kind; r]).unwrap();
            assert!(!words.is_empty());
            for word in &words {
                for i in 1..r {
                    let t = word.tau(i).unwrap();
                    assert_eq!(&t.tau(i).unwrap(), word, "{ctx} {word} τ_{i}");
                    for j in 1..r {
                        if i.abs_diff(j) > 1 {
                            assert_eq!(t.tau(j).unwrap(), word.tau(j).unwrap().tau(i).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn word_counts_match_tableaux() {
        // GL(2) vector words of length 4: SYT with ≤ 2 rows of size 4 = 1 + 3 + 2
        assert_eq!(
            all_words(CartanContext::gl(2), &[StepKind::Vector; 4]).unwrap().len(),
            6
        );
        // SL2 words returning to 0 at length 6: Catalan(3)
        let n = all_words(CartanContext::sl2(), &[StepKind::Vector; 6])
            .unwrap()
            .into_iter()
            .filter(|w| w.shape().is_zero())
            .count();
        assert_eq!(n, 5);
    }

    #[test]
    fn commutor_prefix_cases() {
        let gl3 = CartanContext::gl(3);
        for word in all_words(gl3, &[StepKind::Vector; 5]).unwrap() {
            assert_eq!(word.commutor_prefix(4).unwrap(), word.tau(4).unwrap());
        }
        // full columns of Λ^n never change
        let gl2 = CartanContext::gl(2);
        let word = HighestWeightWord::parse(gl2, "∅,11,22,33").unwrap();
        assert_eq!(word.commutor_prefix(1).unwrap(), word);
    }

    #[test]
    fn commutor_prefix_matches_rectangle() {
        // moving step `split` to the end equals completing the rectangle
        // whose left edge is that single step and whose top edge is the rest
        for (ctx, kind, r) in suites() {
            let r = r.min(5);
            for word in all_words(ctx, &vec![kind; r]).unwrap() {
                for split in 1..r {
                    let out = word.commutor_prefix(split).unwrap();
                    let mut bottom = vec![word.corner(split - 1).clone()];
                    for k in split..r {
                        let next = local_rule(bottom.last().unwrap(), word.corner(k), word.corner(k + 1));
                        bottom.push(next);
                    }
                    assert_eq!(&out.corners()[split - 1..r], &bottom[..]);
                    assert_eq!(&out.corners()[..split], &word.corners()[..split]);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let word = HighestWeightWord::parse(CartanContext::sp(2), "∅,1,2,21,11,1,∅").unwrap();
        let s = serde_json::to_string(&word).unwrap();
        assert!(
            s.starts_with(r#"{"context":{"family":"Sp","rank":2},"steps":["vector""#),
            "{s}"
        );
        assert_eq!(serde_json::from_str::<HighestWeightWord>(&s).unwrap(), word);
        let bad = r#"{"context":{"family":"GL","rank":2},"steps":["vector"],"corners":[[0,0],[2,0]]}"#;
        assert!(serde_json::from_str::<HighestWeightWord>(bad).is_err());
    }

    // Crystal-level oracle: τ^A_{B,C} = σ_{B,A⊗C} ∘ (σ_{A,B} ⊗ 1) with the
    // commutor σ_{X,Y}(x ⊗ y) = ξ(ξ(y) ⊗ ξ(x)) built from Schützenberger
    // involutions of materialized crystals.

    struct Sigma {
        xy_to_yx: Vec<ElementId>,
    }

    fn commutor(x: &Crystal, y: &Crystal) -> Sigma {
        let xi_x = x.lusztig_involution();
        let xi_y = y.lusztig_involution();
        let yx = y.tensor(x).unwrap();
        let xi_yx = yx.lusztig_involution();
        let xy_to_yx = (0..x.len() * y.len())
            .map(|z| {
                let (a, b) = (z / y.len(), z % y.len());
                xi_yx[xi_y[b].0 * x.len() + xi_x[a].0]
            })
            .collect();
        Sigma { xy_to_yx }
    }

    fn prefix_weights(base: &Crystal, full: &Crystal, x: ElementId) -> Vec<Weight> {
        let mut acc = base.context().zero();
        let mut out = vec![acc.clone()];
        for f in full.factor_ids(x) {
            acc = &acc + base.weight(f);
            out.push(acc.clone());
        }
        out
    }

    #[test]
    fn tau_agrees_with_crystal_commutor() {
        let cases = [
            (CartanContext::gl(2), Minuscule::Vector, 5),
            (CartanContext::gl(3), Minuscule::Vector, 5),
            (CartanContext::sp(2), Minuscule::Vector, 4),
            (CartanContext::sl2(), Minuscule::Sl2, 5),
            (CartanContext::gl(4), Minuscule::Exterior(2), 3),
        ];
        for (ctx, which, r) in cases {
            let c = build_minuscule(ctx, which).unwrap();
            let full = c.tensor_power(r, 1 << 16).unwrap();
            for i in 1..r {
                // positions i, i+1 are B and C; A is the first i-1 factors
                let a = c.tensor_power(i - 1, 1 << 16).unwrap();
                let ab = commutor(&a, &c);
                let ac = a.tensor(&c).unwrap();
                let b_ac = commutor(&c, &ac);
                let tail = c.len().pow((r - i - 1) as u32);
                for z in full.highest_weight_elements() {
                    let head = z.0 / tail / (c.len() * c.len());
                    let bb = z.0 / tail / c.len() % c.len();
                    let cc = z.0 / tail % c.len();
                    let d = z.0 % tail;
                    // σ_{A,B}(a ⊗ b) = b1 ⊗ a1
                    let ba = ab.xy_to_yx[head * c.len() + bb].0;
                    let (b1, a1) = (ba / a.len(), ba % a.len());
                    // σ_{B, A⊗C}(b1 ⊗ (a1 ⊗ c)) ∈ (A⊗C)⊗B
                    let acb = b_ac.xy_to_yx[b1 * ac.len() + a1 * c.len() + cc].0;
                    let out = ElementId(acb * tail + d);
                    assert!(full.is_highest_weight(out));
                    let word = HighestWeightWord::from_corners(ctx, prefix_weights(&c, &full, z)).unwrap();
                    let expect = HighestWeightWord::from_corners(ctx, prefix_weights(&c, &full, out)).unwrap();
                    assert_eq!(word.tau(i).unwrap(), expect, "{ctx} τ_{i} on {word}");
                }
            }
        }
    }
}
