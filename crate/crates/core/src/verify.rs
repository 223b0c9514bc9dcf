//! Exhaustive property suites shared by the command line and the tests.

use std::time::Instant;

use serde::Serialize;

use crate::cactus::{relation_check, CactusGen, CactusWord, Relation};
use crate::crystal::{build_minuscule, decompose, Crystal, Minuscule, DEFAULT_SIZE_LIMIT};
use crate::growth::{
    act, evacuation, promotion, rectify_by_growth, wall_cross, wall_cross_violations, CylWindow, HwAction,
};
use crate::hecke::{block_identity_holds, check_shape, shapes_up_to};
use crate::localrules::{all_words, HighestWeightWord, StepKind, WeightPath};
use crate::oracles::{
    bender_knuth, dual_knuth, evacuation_oracle, partitions_of, promotion_oracle, syt_from_corners, syt_to_corners,
    SemistandardTableau, StandardTableau,
};
use crate::weights::{CartanContext, Partition, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Wall-clock time; not serialized so that reports are reproducible.
    #[serde(skip)]
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0 && c.checked > 0)
    }

    pub fn total_checked(&self) -> usize {
        self.checks.iter().map(|c| c.checked).sum()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Recorder {
    suite: String,
    checks: Vec<Check>,
    start: Instant,
}

impl Recorder {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    fn entry(&mut self, name: &str) -> &mut Check {
        let pos = match self.checks.iter().position(|c| c.name == name) {
            Some(p) => p,
            None => {
                self.checks.push(Check {
                    name: name.to_string(),
                    checked: 0,
                    failures: 0,
                    first_failure: None,
                });
                self.checks.len() - 1
            }
        };
        &mut self.checks[pos]
    }

    fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let c = self.entry(name);
        c.checked += 1;
        if !ok {
            c.failures += 1;
            if c.first_failure.is_none() {
                c.first_failure = Some(detail());
            }
        }
    }

    fn add(&mut self, name: &str, checked: usize, failures: usize) {
        let c = self.entry(name);
        c.checked += checked;
        c.failures += failures;
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            checks: self.checks,
            seconds: self.start.elapsed().as_secs_f64(),
        }
    }
}

/// A minuscule crystal used as the letter of highest weight words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Letter {
    pub context: CartanContext,
    pub step: StepKind,
}

impl Letter {
    pub fn gl_vector(n: usize) -> Self {
        Self {
            context: CartanContext::gl(n),
            step: StepKind::Vector,
        }
    }

    pub fn gl_exterior(n: usize, k: usize) -> Self {
        Self {
            context: CartanContext::gl(n),
            step: StepKind::Exterior(k),
        }
    }

    pub fn sp_vector(n: usize) -> Self {
        Self {
            context: CartanContext::sp(n),
            step: StepKind::Vector,
        }
    }

    pub fn sl2() -> Self {
        Self {
            context: CartanContext::sl2(),
            step: StepKind::Vector,
        }
    }

    pub fn words(&self, r: usize) -> Vec<HighestWeightWord> {
        all_words(self.context, &vec![self.step; r]).expect("letter kinds are valid for their context")
    }

    pub fn label(&self) -> String {
        format!("{} {}", self.context, self.step)
    }
}

/// The letters of the cactus relation suite.
pub fn standard_letters() -> Vec<Letter> {
    vec![
        Letter::gl_vector(2),
        Letter::gl_vector(3),
        Letter::gl_exterior(4, 2),
        Letter::sp_vector(2),
    ]
}

/// Cactus relations, τ-involutivity and evacuation involutivity on every
/// highest weight word of length `2..=max_r`.
pub fn cactus_suite(max_r: usize, letters: &[Letter]) -> SuiteReport {
    let mut rec = Recorder::new("cactus");
    for letter in letters {
        for r in 2..=max_r {
            cactus_checks(&mut rec, letter, r, &letter.words(r));
        }
    }
    rec.finish()
}

/// The checks of [`cactus_suite`] on a given list of words of length `r`.
pub fn cactus_suite_on(letter: &Letter, r: usize, words: &[HighestWeightWord]) -> SuiteReport {
    let mut rec = Recorder::new("cactus");
    cactus_checks(&mut rec, letter, r, words);
    rec.finish()
}

fn cactus_checks(rec: &mut Recorder, letter: &Letter, r: usize, words: &[HighestWeightWord]) {
    for rel in Relation::all(r) {
        let ok = matches!(relation_check(rel, r, &HwAction, words), Ok(Ok(true)));
        let name = match rel {
            Relation::Involution(_) => "s^2 = 1",
            Relation::Disjoint(..) => "disjoint generators commute",
            Relation::Nested(..) => "nested conjugation",
        };
        rec.record(name, ok, || format!("{} r={r} {rel:?}", letter.label()));
    }
    for w in words {
        for i in 1..r {
            let ok = w.tau(i).and_then(|x| x.tau(i)).is_ok_and(|x| x == *w);
            rec.record("tau_i^2 = 1", ok, || format!("{w} i={i}"));
        }
        let ok = evacuation(w).and_then(|e| evacuation(&e)).is_ok_and(|e| e == *w);
        rec.record("evacuation involution", ok, || w.to_string());
    }
}

/// A highest weight word of length `r` grown one letter at a time;
/// `pick(n)` chooses among the `n` dominant continuations.
pub fn grow_word(letter: &Letter, r: usize, mut pick: impl FnMut(usize) -> usize) -> HighestWeightWord {
    let steps = letter.step.weights(letter.context);
    let mut corners = vec![letter.context.zero()];
    for _ in 0..r {
        let last = corners.last().expect("nonempty");
        let next: Vec<Weight> = steps.iter().map(|s| last + s).filter(Weight::is_dominant).collect();
        let k = pick(next.len()).min(next.len() - 1);
        corners.push(next[k].clone());
    }
    HighestWeightWord::new(letter.context, vec![letter.step; r], corners).expect("dominant steps form a word")
}

fn gl_word(t: &StandardTableau) -> HighestWeightWord {
    let ctx = CartanContext::gl(t.shape().len().max(1));
    HighestWeightWord::from_corners(ctx, syt_to_corners(t, ctx).expect("tableau shape fits"))
        .expect("tableau words are valid")
}

fn as_tableau(w: &HighestWeightWord) -> Option<StandardTableau> {
    syt_from_corners(w.corners()).ok()
}

/// Local-rule computations against the classical algorithms.
pub fn oracle_suite(max_boxes: u32, bk_shape: &Partition, bk_entries: usize) -> SuiteReport {
    let mut rec = Recorder::new("oracle");
    for n in 1..=max_boxes {
        for t in StandardTableau::all_of_size(n) {
            let w = gl_word(&t);
            let e = evacuation(&w).ok().and_then(|x| as_tableau(&x));
            rec.record(
                "evacuation = Schützenberger",
                e.as_ref() == Some(&evacuation_oracle(&t)),
                || t.to_string(),
            );
            let p = promotion(&w).ok().and_then(|x| as_tableau(&x));
            rec.record(
                "promotion = jeu de taquin",
                p.as_ref() == Some(&promotion_oracle(&t)),
                || t.to_string(),
            );
            let r = n as usize;
            for i in 1..r.saturating_sub(1) {
                let g = CactusWord::from_pairs(r, &[(i, i + 2)]).expect("valid generator");
                let got = act(&g, &w).ok().and_then(|x| as_tableau(&x));
                let expect = dual_knuth(&t, i).ok();
                rec.record("s_(i,i+2) = dual Knuth", got.is_some() && got == expect, || {
                    format!("{t} i={i}")
                });
            }
        }
    }
    let ctx = CartanContext::gl(bk_shape.part(0).max(1) as usize);
    let conj_word = |t: &SemistandardTableau| {
        let seq: Vec<Partition> = t.gt_pattern(bk_entries).iter().map(Partition::conjugate).collect();
        HighestWeightWord::from_partitions(ctx, &seq).ok()
    };
    for size in 0..=bk_shape.size() {
        for shape in partitions_of(size).into_iter().filter(|s| bk_shape.contains(s)) {
            for t in SemistandardTableau::all_of_shape(&shape, bk_entries) {
                let w = conj_word(&t);
                for i in 1..bk_entries {
                    let via_rules = w.as_ref().and_then(|w| w.tau(i).ok());
                    let direct = bender_knuth(&t, i).ok().and_then(|b| conj_word(&b));
                    rec.record(
                        "tau_i on conjugates = Bender-Knuth",
                        via_rules.is_some() && via_rules == direct,
                        || format!("{t} i={i}"),
                    );
                }
            }
        }
    }
    rec.finish()
}

/// Seminormal identities on every shape with at most `max_size` boxes;
/// cactus relations in the representation up to `cactus_limit` boxes.
pub fn hecke_suite(max_size: u32, cactus_limit: usize) -> SuiteReport {
    let mut rec = Recorder::new("hecke");
    for shape in shapes_up_to(max_size) {
        match check_shape(&shape, cactus_limit) {
            Ok(results) => {
                for c in results {
                    rec.add(&c.name, c.checked, c.failures);
                    if c.failures > 0 {
                        let e = rec.entry(&c.name);
                        e.first_failure.get_or_insert_with(|| shape.to_string());
                    }
                }
            }
            Err(e) => rec.record("representation construction", false, || format!("{shape}: {e}")),
        }
    }
    for a in 2..=6 {
        for r in -6..=6 {
            rec.record("2x2 conjugation identity", block_identity_holds(a, r), || {
                format!("a={a} r={r}")
            });
        }
    }
    rec.finish()
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Word of a dominant weight filled row by row, so that `φ_i` of its
/// highest weight element is as large as the weight allows.
fn row_filling(ctx: CartanContext, shape: &Weight) -> HighestWeightWord {
    let mut acc = vec![0i64; ctx.rank()];
    let mut corners = vec![ctx.zero()];
    for (k, &len) in shape.coords().iter().enumerate() {
        for _ in 0..len {
            acc[k] += 1;
            corners.push(Weight::new(ctx, acc.clone()).expect("rank-length vector"));
        }
    }
    HighestWeightWord::from_corners(ctx, corners).expect("row filling is a highest weight word")
}

fn corners_of(c: &Crystal, letter: &Crystal, x: crate::crystal::ElementId, start: &Weight) -> Vec<Weight> {
    let mut acc = start.clone();
    let mut out = vec![acc.clone()];
    for f in c.factor_ids(x) {
        acc = &acc + letter.weight(f);
        out.push(acc.clone());
    }
    out
}

/// Brute-force crystal checks: component census, SL(2) invariants and
/// rectification through a rectangle against raising operators.
pub fn crystal_suite(max_r: usize, catalan_r: usize) -> SuiteReport {
    let mut rec = Recorder::new("crystal");
    let letters = [
        (CartanContext::gl(2), Minuscule::Vector, StepKind::Vector),
        (CartanContext::gl(3), Minuscule::Vector, StepKind::Vector),
        (CartanContext::sl2(), Minuscule::Sl2, StepKind::Vector),
    ];
    for (ctx, which, step) in letters {
        let c = build_minuscule(ctx, which).expect("minuscule letter");
        for r in 1..=max_r {
            match decompose(&c, r, DEFAULT_SIZE_LIMIT) {
                Ok(census) => {
                    let total: usize = census.values().map(|v| v.count * v.size).sum();
                    rec.record("sum |C(w)| |B(w)| = |C|^r", total == c.len().pow(r as u32), || {
                        format!("{ctx} r={r}")
                    });
                    let words = all_words(ctx, &vec![step; r]).expect("valid kinds");
                    let agree = census
                        .iter()
                        .all(|(wt, v)| words.iter().filter(|w| w.shape() == wt).count() == v.count)
                        && census.values().map(|v| v.count).sum::<usize>() == words.len();
                    rec.record("|B(w)| = highest weight words", agree, || format!("{ctx} r={r}"));
                }
                Err(e) => rec.record("sum |C(w)| |B(w)| = |C|^r", false, || e.to_string()),
            }
            // rectification by growth against e-ascent
            let Ok(power) = c.tensor_power(r, DEFAULT_SIZE_LIMIT) else {
                rec.record("rectangle rectification = e-ascent", false, || {
                    format!("{ctx} r={r}: too large")
                });
                continue;
            };
            let n = ctx.rank();
            let big: Vec<i64> = match ctx.family() {
                crate::weights::Family::SL2 => vec![r as i64],
                _ => (0..n).map(|k| ((n - 1 - k) * r) as i64).collect(),
            };
            let u = if ctx.family() == crate::weights::Family::SL2 {
                let corners = (0..=r as i64)
                    .map(|k| Weight::new(ctx, vec![k]).expect("rank 1"))
                    .collect();
                HighestWeightWord::from_corners(ctx, corners).expect("all-plus word")
            } else {
                row_filling(ctx, &Weight::new(ctx, big).expect("rank-length"))
            };
            for x in power.elements() {
                let top = WeightPath::from_corners(ctx, corners_of(&power, &c, x, u.shape()));
                let got = top.ok().and_then(|t| rectify_by_growth(&u, &t).ok()).map(|(w, _)| w);
                let hw = power.rectify(x);
                let expect = corners_of(&power, &c, hw, &ctx.zero());
                let ok = got.as_ref().map(|w| w.corners()) == Some(&expect[..]);
                rec.record("rectangle rectification = e-ascent", ok, || {
                    format!("{ctx} {}", power.label(x))
                });
            }
        }
    }
    let sl2 = build_minuscule(CartanContext::sl2(), Minuscule::Sl2).expect("sl2 letter");
    for r in 1..=catalan_r {
        let Ok(power) = sl2.tensor_power(r, DEFAULT_SIZE_LIMIT) else {
            rec.record("SL(2) invariants = Catalan", false, || format!("r={r}: too large"));
            continue;
        };
        let zero = power
            .highest_weight_elements()
            .into_iter()
            .filter(|&x| power.weight(x).is_zero())
            .count();
        let expect = if r % 2 == 0 { catalan(r as u64 / 2) as usize } else { 0 };
        rec.record("SL(2) invariants = Catalan", zero == expect, || {
            format!("r={r}: {zero} vs {expect}")
        });
    }
    rec.finish()
}

/// The wall-crossing operator against the growth action.
pub fn wall_suite(max_r: usize, letter: Letter) -> SuiteReport {
    let mut rec = Recorder::new("wall");
    for r in 2..=max_r {
        for w in letter.words(r) {
            let before = CylWindow::from_top(&w, 0, r + 1);
            for g in CactusGen::all(r) {
                let expect = CactusWord::generator(g, r).ok().and_then(|gw| act(&gw, &w).ok());
                match wall_cross(g, &before) {
                    Ok(after) => {
                        rec.record("wall crossing top row = action", Some(after.top()) == expect, || {
                            format!("{g} on {w}")
                        });
                        rec.record(
                            "wall crossing cases",
                            wall_cross_violations(g, &before, &after).is_empty(),
                            || format!("{g} on {w}"),
                        );
                        rec.record("wall crossing window valid", after.violations().is_empty(), || {
                            format!("{g} on {w}")
                        });
                    }
                    Err(e) => rec.record("wall crossing top row = action", false, || format!("{g} on {w}: {e}")),
                }
            }
        }
    }
    rec.finish()
}
