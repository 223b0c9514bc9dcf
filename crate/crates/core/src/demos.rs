//! Reproductions of the worked examples stored under `fixtures/`.
//!
//! Each demo recomputes the printed data from its starting point and
//! compares line by line. A line whose printed value is contradicted by
//! every independent computation is reported as [`Status::Discrepancy`]
//! together with the value those computations agree on; a line counts as
//! a failure only if the computations disagree with each other or with a
//! printed value that is not marked as corrected.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cactus::{CactusGen, CactusWord};
use crate::growth::{act, evacuation, promotion, wall_cross, CylPath, CylWindow, GrowthError};
use crate::localrules::{local_rule, HighestWeightWord, LocalRuleError};
use crate::oracles::{
    bender_knuth, dual_knuth, matching_action_pq, syt_from_corners, syt_to_corners, Matching, OracleError,
    SemistandardTableau, StandardTableau,
};
use crate::weights::{CartanContext, Partition, Weight, WeightError};

pub const BENDER_KNUTH: &str = include_str!("../fixtures/bender_knuth.toml");
pub const FIG_CAT: &str = include_str!("../fixtures/fig_cat.toml");
pub const SP_CYLINDER: &str = include_str!("../fixtures/sp_cylinder.toml");
pub const GL_CYLINDER: &str = include_str!("../fixtures/gl_cylinder.toml");

pub const NAMES: [&str; 5] = ["bk", "fig-cat", "ex-sp", "wall", "gl-grid"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DemoError {
    #[error("fixture: {0}")]
    Fixture(#[from] toml::de::Error),
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    LocalRule(#[from] LocalRuleError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Cactus(#[from] crate::cactus::CactusError),
    #[error("unknown demo {0:?}")]
    Unknown(String),
    #[error("cannot parse partition sequence {0:?}")]
    BadSequence(String),
    #[error("fixture refers to unknown tableau {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Discrepancy,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoLine {
    pub label: String,
    pub printed: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoReport {
    pub name: String,
    pub lines: Vec<DemoLine>,
}

impl DemoReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            lines: Vec::new(),
        }
    }

    fn compare(&mut self, label: impl Into<String>, printed: impl ToString, computed: impl ToString) {
        let (printed, computed) = (printed.to_string(), computed.to_string());
        let status = if printed == computed {
            Status::Match
        } else {
            Status::Mismatch
        };
        self.lines.push(DemoLine {
            label: label.into(),
            printed,
            computed,
            status,
            note: None,
        });
    }

    /// A printed value that the computations contradict. `agreed` says
    /// whether all independent routes produced `computed`.
    fn discrepancy(
        &mut self,
        label: impl Into<String>,
        printed: impl ToString,
        computed: impl ToString,
        agreed: bool,
        note: &str,
    ) {
        let (printed, computed) = (printed.to_string(), computed.to_string());
        let status = if agreed && printed != computed {
            Status::Discrepancy
        } else {
            Status::Mismatch
        };
        self.lines.push(DemoLine {
            label: label.into(),
            printed,
            computed,
            status,
            note: Some(note.to_string()),
        });
    }

    pub fn ok(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Mismatch)
    }

    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }
}

impl fmt::Display for DemoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.name)?;
        for l in &self.lines {
            let tag = match l.status {
                Status::Match => "ok  ",
                Status::Discrepancy => "note",
                Status::Mismatch => "FAIL",
            };
            writeln!(f, "  [{tag}] {}: {}", l.label, l.computed)?;
            if l.status != Status::Match {
                writeln!(f, "         printed: {}", l.printed)?;
            }
            if let Some(n) = &l.note {
                writeln!(f, "         {n}")?;
            }
        }
        Ok(())
    }
}

pub fn run(name: &str) -> Result<DemoReport, DemoError> {
    match name {
        "bk" => bender_knuth_demo(),
        "fig-cat" => fig_cat_demo(),
        "ex-sp" => sp_cylinder_demo(),
        "wall" => wall_demo(),
        "gl-grid" => gl_grid_demo(),
        other => Err(DemoError::Unknown(other.to_string())),
    }
}

/// Starting words of the examples, for use as command-line input.
pub const WORD_NAMES: [&str; 8] = [
    "fig-cat-A",
    "fig-cat-B",
    "fig-cat-C",
    "fig-cat-D",
    "fig-cat-E",
    "ex-sp",
    "ex-sp-wall",
    "gl-grid",
];

/// The word called `name` in [`WORD_NAMES`]. `ex-sp` is the first row of
/// the symplectic window and `ex-sp-wall` the row the wall-crossing
/// diagram is seeded on.
pub fn named_word(name: &str) -> Result<HighestWeightWord, DemoError> {
    if let Some(label) = name.strip_prefix("fig-cat-") {
        let fx: FigCatFixture = toml::from_str(FIG_CAT)?;
        let t: StandardTableau = fx
            .tableaux
            .get(label)
            .ok_or_else(|| DemoError::UnknownName(label.to_string()))?
            .parse()?;
        let gl2 = CartanContext::gl(2);
        return Ok(HighestWeightWord::from_corners(gl2, syt_to_corners(&t, gl2)?)?);
    }
    match name {
        "ex-sp" | "ex-sp-wall" => {
            let (ctx, fx) = sp_fixture()?;
            let k = if name == "ex-sp" { 0 } else { fx.wall.seed_row - 1 };
            Ok(HighestWeightWord::parse(ctx, &fx.rows[k])?)
        }
        "gl-grid" => {
            let fx: GlFixture = toml::from_str(GL_CYLINDER)?;
            Ok(HighestWeightWord::parse(CartanContext::gl(fx.rank), &fx.rows[0])?)
        }
        other => Err(DemoError::Unknown(other.to_string())),
    }
}

fn parse_seq(s: &str) -> Result<Vec<Partition>, DemoError> {
    let inner = s.trim();
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (k, c) in inner.char_indices() {
        match c {
            '[' => {
                if depth == 0 {
                    start = k + 1;
                }
                depth += 1;
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    let parts = inner[start..k]
                        .split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| {
                            t.trim()
                                .parse::<u32>()
                                .map_err(|_| DemoError::BadSequence(s.to_string()))
                        })
                        .collect::<Result<Vec<u32>, DemoError>>()?;
                    out.push(Partition::new(parts)?);
                }
            }
            _ => {}
        }
    }
    Ok(out)
}

fn show_seq(seq: &[Partition]) -> String {
    seq.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Deserialize)]
struct BkFixture {
    rank: usize,
    length: usize,
    index: usize,
    tableau: String,
    gt: String,
    conjugate: String,
    rule_inputs: [Vec<i64>; 3],
    rule_unsorted: Vec<i64>,
    rule_output: Vec<i64>,
    after_tau: String,
    after_conjugate: String,
    result: String,
}

fn bender_knuth_demo() -> Result<DemoReport, DemoError> {
    let fx: BkFixture = toml::from_str(BENDER_KNUTH)?;
    let ctx = CartanContext::gl(fx.rank);
    let mut rep = DemoReport::new("bk");
    let t: SemistandardTableau = fx.tableau.parse()?;
    let gt = t.gt_pattern(fx.length);
    rep.compare("Gelfand-Tsetlin pattern", show_seq(&parse_seq(&fx.gt)?), show_seq(&gt));
    let conj: Vec<Partition> = gt.iter().map(Partition::conjugate).collect();
    rep.compare(
        "conjugate sequence",
        show_seq(&parse_seq(&fx.conjugate)?),
        show_seq(&conj),
    );

    let w = |v: &[i64]| Weight::new(ctx, v.to_vec());
    let (k, l, n) = (w(&fx.rule_inputs[0])?, w(&fx.rule_inputs[1])?, w(&fx.rule_inputs[2])?);
    let unsorted = &(&k + &n) - &l;
    rep.compare(
        "κ + ν − λ",
        format!("{:?}", fx.rule_unsorted),
        format!("{:?}", unsorted.coords()),
    );
    let mu = local_rule(&k, &l, &n);
    let mu_p = mu.to_partition()?;
    rep.compare(
        "local rule",
        Partition::new(fx.rule_output.iter().map(|&x| x as u32).collect())?,
        &mu_p,
    );

    let word = HighestWeightWord::from_partitions(ctx, &conj)?;
    let moved = word.tau(fx.index)?;
    let moved_seq = moved.partitions()?;
    rep.compare(
        format!("after τ_{}", fx.index),
        show_seq(&parse_seq(&fx.after_tau)?),
        show_seq(&moved_seq),
    );
    let back: Vec<Partition> = moved_seq.iter().map(Partition::conjugate).collect();
    rep.compare(
        "conjugate back",
        show_seq(&parse_seq(&fx.after_conjugate)?),
        show_seq(&back),
    );
    let via_rules = SemistandardTableau::from_gt_pattern(&back)?;
    rep.compare(format!("b_{} via local rules", fx.index), &fx.result, &via_rules);
    let direct = bender_knuth(&t, fx.index)?;
    rep.compare(format!("b_{} directly", fx.index), &fx.result, &direct);
    Ok(rep)
}

#[derive(Deserialize)]
struct Edge {
    from: String,
    p: usize,
    q: usize,
    to: String,
    corrected: Option<String>,
}

#[derive(Deserialize)]
struct FigCatFixture {
    tableaux: BTreeMap<String, String>,
    edge: Vec<Edge>,
}

fn fig_cat_demo() -> Result<DemoReport, DemoError> {
    let fx: FigCatFixture = toml::from_str(FIG_CAT)?;
    let mut rep = DemoReport::new("fig-cat");
    let gl2 = CartanContext::gl(2);
    let mut named: Vec<(String, StandardTableau)> = Vec::new();
    for (k, v) in &fx.tableaux {
        named.push((k.clone(), v.parse()?));
    }
    let lookup = |k: &str| {
        named
            .iter()
            .find(|(n, _)| n == k)
            .map(|(_, t)| t.clone())
            .ok_or_else(|| DemoError::UnknownName(k.to_string()))
    };
    let name_of = |t: &StandardTableau| {
        named
            .iter()
            .find(|(_, u)| u == t)
            .map_or_else(|| t.to_string(), |(n, _)| n.clone())
    };
    for e in &fx.edge {
        let src = lookup(&e.from)?;
        let r = src.size();
        let g = CactusWord::generator(CactusGen::new(e.p, e.q, r)?, r)?;
        let w = HighestWeightWord::from_corners(gl2, syt_to_corners(&src, gl2)?)?;
        let by_rules = syt_from_corners(act(&g, &w)?.corners())?;
        let by_matching = matching_action_pq(e.p, e.q, &Matching::from_tableau(&src)?)?.to_tableau();
        let mut routes = vec![by_rules.clone(), by_matching];
        if e.q == e.p + 2 {
            routes.push(dual_knuth(&src, e.p)?);
        }
        let agreed = routes.iter().all(|t| *t == by_rules);
        let label = format!("{} --({},{})--> ", e.from, e.p, e.q);
        let computed = format!("{} = {}", name_of(&by_rules), by_rules);
        let printed_t = lookup(&e.to)?;
        let printed = format!("{} = {}", e.to, printed_t);
        match &e.corrected {
            Some(c) => {
                let ok = agreed && name_of(&by_rules) == *c;
                let note = format!(
                    "local rules, matchings{} all give {}",
                    if routes.len() > 2 {
                        " and the dual Knuth move"
                    } else {
                        ""
                    },
                    c
                );
                rep.discrepancy(label, printed, computed, ok, &note);
            }
            None => {
                let status_computed = if agreed {
                    computed
                } else {
                    format!("routes disagree: {routes:?}")
                };
                rep.compare(label, printed, status_computed);
            }
        }
    }
    Ok(rep)
}

#[derive(Deserialize)]
struct TextWords {
    start: String,
    promotion: String,
    evacuation_column: String,
}

#[derive(Deserialize)]
struct WallFixture {
    seed_row: usize,
    p: usize,
    q: usize,
    rows: Vec<String>,
    missing_row: String,
    missing_after: usize,
}

#[derive(Deserialize)]
struct SpFixture {
    rank: usize,
    rows: Vec<String>,
    repeated_row: usize,
    text: TextWords,
    wall: WallFixture,
}

fn sp_fixture() -> Result<(CartanContext, SpFixture), DemoError> {
    let fx: SpFixture = toml::from_str(SP_CYLINDER)?;
    Ok((CartanContext::sp(fx.rank), fx))
}

fn sp_cylinder_demo() -> Result<DemoReport, DemoError> {
    let (ctx, fx) = sp_fixture()?;
    let mut rep = DemoReport::new("ex-sp");
    let printed: Vec<HighestWeightWord> = fx
        .rows
        .iter()
        .map(|s| HighestWeightWord::parse(ctx, s))
        .collect::<Result<_, _>>()?;
    let top = &printed[0];
    let win = CylWindow::from_top(top, 0, printed.len());
    // rows after the repeated one are shifted up by one
    let mut t = 0;
    for (k, row) in printed.iter().enumerate() {
        let label = format!("row {}", k + 1);
        if k + 1 == fx.repeated_row {
            let as_window = CylWindow::from_rows_unchecked(0, printed.iter().map(|w| w.corners().to_vec()).collect());
            let bad = as_window.violations();
            let computed = win.row(t as i64).expect("in window")?;
            let note = format!("repeats the row above; printed rows violate the local rule at {bad:?}");
            rep.discrepancy(label, row, computed, !bad.is_empty(), &note);
            continue;
        }
        let computed = win.row(t as i64).expect("in window")?;
        rep.compare(label, row, computed);
        t += 1;
    }

    let start = HighestWeightWord::parse(ctx, &fx.text.start)?;
    let named_promotion = HighestWeightWord::parse(ctx, &fx.text.promotion)?;
    let first_promoted = promotion(top)?;
    rep.compare("promotion of row 1 is row 2", &printed[1], &first_promoted);
    let p = promotion(&start)?;
    let swapped = promotion(&named_promotion)? == start;
    rep.discrepancy(
        "promotion of the word named as start",
        &named_promotion,
        &p,
        swapped,
        "the two words are exchanged: promotion maps the named result to the named start",
    );

    // column r read top to bottom
    let r = top.len() as i64;
    let column = win.column_down(r);
    let column_word = HighestWeightWord::from_corners(ctx, column)?;
    rep.compare(
        "column with head ∅, read downwards",
        &fx.text.evacuation_column,
        &column_word,
    );
    let mut up = win
        .restrict(&CylPath::column(r, r as usize))
        .expect("column inside window");
    let e = evacuation(top)?;
    up.reverse();
    let consistent =
        HighestWeightWord::from_corners(ctx, up)? == column_word && e.corners().iter().rev().eq(column_word.corners());
    rep.compare(
        "evacuation of row 1 (column read upwards)",
        if consistent {
            e.to_string()
        } else {
            "inconsistent".into()
        },
        &e,
    );
    Ok(rep)
}

fn wall_demo() -> Result<DemoReport, DemoError> {
    let (ctx, fx) = sp_fixture()?;
    let wf = &fx.wall;
    let mut rep = DemoReport::new("wall");
    let seed = HighestWeightWord::parse(ctx, &fx.rows[wf.seed_row - 1])?;
    let r = seed.len();
    // the printed interval indexes vertices, so it reverses letters p+1..q
    let g = CactusGen::new(wf.p + 1, wf.q, r)?;
    let by_action = act(&CactusWord::generator(g, r)?, &seed)?;
    let by_wall = wall_cross(g, &CylWindow::from_top(&seed, 0, r))?.top();
    let printed: Vec<HighestWeightWord> = wf
        .rows
        .iter()
        .map(|s| HighestWeightWord::parse(ctx, s))
        .collect::<Result<_, _>>()?;
    rep.compare(
        format!("{g} on row {} (growth action)", wf.seed_row),
        &printed[0],
        &by_action,
    );
    rep.compare(
        format!("{g} on row {} (wall crossing)", wf.seed_row),
        &printed[0],
        &by_wall,
    );
    let win = CylWindow::from_top(&by_action, 0, printed.len() + 1);
    let mut t = 0;
    for (k, row) in printed.iter().enumerate() {
        if k == wf.missing_after {
            let computed = win.row(t as i64).expect("in window")?;
            let missing = HighestWeightWord::parse(ctx, &wf.missing_row)?;
            rep.discrepancy(
                format!("between rows {} and {}", k, k + 1),
                "(no row)",
                &computed,
                computed == missing,
                "promotion of the row above is not printed",
            );
            t += 1;
        }
        let computed = win.row(t as i64).expect("in window")?;
        rep.compare(format!("row {}", k + 1), row, computed);
        t += 1;
    }
    Ok(rep)
}

#[derive(Deserialize)]
struct GlFixture {
    rank: usize,
    rows: Vec<String>,
}

fn gl_grid_demo() -> Result<DemoReport, DemoError> {
    let fx: GlFixture = toml::from_str(GL_CYLINDER)?;
    let ctx = CartanContext::gl(fx.rank);
    let mut rep = DemoReport::new("gl-grid");
    let top = HighestWeightWord::parse(ctx, &fx.rows[0])?;
    let win = CylWindow::from_top(&top, 0, fx.rows.len() - 1);
    for (k, row) in fx.rows.iter().enumerate() {
        rep.compare(format!("row {}", k + 1), row, win.row(k as i64).expect("in window")?);
    }
    for k in 0..fx.rows.len() {
        let w = win.row(k as i64).expect("in window")?;
        let t = syt_from_corners(w.corners())?;
        rep.compare(
            format!("row {} as a tableau", k + 1),
            &fx.rows[k],
            HighestWeightWord::from_corners(ctx, syt_to_corners(&t, ctx)?)?,
        );
    }
    Ok(rep)
}
