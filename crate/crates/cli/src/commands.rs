use std::fmt::Write as _;

use cactus_core::cactus::{CactusGen, CactusWord};
use cactus_core::crystal::{build_minuscule, decompose, Minuscule, DEFAULT_SIZE_LIMIT};
use cactus_core::demos::{self, DemoReport};
use cactus_core::growth::{
    act, evacuation, inverse_promotion, promotion, render_rows, wall_cross, wall_cross_violations, CylWindow,
    TriDiagram,
};
use cactus_core::hecke::{check_shape, JmPower, SeminormalRep};
use cactus_core::localrules::{all_words, format_corner, HighestWeightWord, StepKind};
use cactus_core::oracles::{
    bender_knuth, dual_knuth, evacuation_oracle, promotion_oracle, syt_from_corners, syt_to_corners,
    SemistandardTableau, StandardTableau,
};
use cactus_core::verify::{self, Letter, SuiteReport};
use cactus_core::weights::{CartanContext, Family, Partition, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{parse_group, parse_row, parse_step};
use crate::{Cli, Command, CrystalOp, Format, HeckeOp, MatrixOp, OracleOp, Suite};

pub struct Output {
    ascii: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(ascii: String, json: Value) -> Self {
        Self {
            ascii,
            json,
            failed: false,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Ascii => self.ascii.clone(),
            Format::Json => format!(
                "{}\n",
                serde_json::to_string_pretty(&self.json).expect("json values serialize")
            ),
        }
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(self.failed)
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Act { word, input } => cmd_act(word, &input.resolve()?),
        Command::Evacuate { input, diagram } => cmd_evacuate(&input.resolve()?, *diagram),
        Command::Promote { input, inverse, times } => cmd_promote(&input.resolve()?, *inverse, *times),
        Command::Cylinder {
            input,
            depth,
            first,
            wall,
        } => cmd_cylinder(&input.resolve()?, *depth, *first, wall.as_deref()),
        Command::Validate {
            rows,
            file,
            group,
            first,
        } => {
            let text = match (rows, file) {
                (Some(r), None) => r.split(';').map(str::to_string).collect::<Vec<_>>(),
                (None, Some(path)) => std::fs::read_to_string(path)?.lines().map(str::to_string).collect(),
                _ => return Err(CliError::Parse("give exactly one of --rows or --file".into())),
            };
            cmd_validate(parse_group(group)?, &text, *first)
        }
        Command::Oracle { op } => cmd_oracle(op),
        Command::Hecke { op } => cmd_hecke(op),
        Command::Verify {
            suite,
            r,
            tiny,
            samples,
            cactus_limit,
        } => cmd_verify(
            *suite,
            &Bounds {
                r: *r,
                tiny: *tiny,
                samples: *samples,
                cactus_limit: *cactus_limit,
                max_size: cli.max_size,
                seed: cli.seed,
            },
        ),
        Command::Demo { name, list } => cmd_demo(name.as_deref(), *list),
        Command::Crystal { op } => cmd_crystal(op),
    }
}

fn tableau_of(w: &HighestWeightWord) -> Option<String> {
    if w.context().family() != Family::GL {
        return None;
    }
    syt_from_corners(w.corners()).ok().map(|t| t.to_string())
}

fn word_json(w: &HighestWeightWord) -> Value {
    let mut v = json!({ "group": w.context().to_string(), "corners": w.corner_string() });
    if let Some(t) = tableau_of(w) {
        v["tableau"] = json!(t);
    }
    v
}

fn word_line(label: &str, w: &HighestWeightWord) -> String {
    match tableau_of(w) {
        Some(t) => format!("{label:<8}{w}   ({t})\n"),
        None => format!("{label:<8}{w}\n"),
    }
}

fn cmd_act(word: &str, w: &HighestWeightWord) -> Result<Output, CliError> {
    let g = CactusWord::parse(w.len(), word)?;
    let out = act(&g, w)?;
    let ascii = format!("word    {g}\n{}{}", word_line("input", w), word_line("result", &out));
    let json = json!({ "word": g.to_string(), "input": word_json(w), "result": word_json(&out) });
    Ok(Output::ok(ascii, json))
}

fn rows_json(rows: &[Vec<Weight>]) -> Value {
    json!(rows
        .iter()
        .map(|row| row.iter().map(format_corner).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>())
}

fn cmd_evacuate(w: &HighestWeightWord, diagram: bool) -> Result<Output, CliError> {
    let e = evacuation(w)?;
    let mut ascii = format!("{}{}", word_line("input", w), word_line("result", &e));
    let mut json = json!({ "input": word_json(w), "result": word_json(&e) });
    if diagram {
        let tri = TriDiagram::from_top(w);
        ascii.push('\n');
        ascii.push_str(&render_rows(tri.rows()));
        json["diagram"] = rows_json(tri.rows());
    }
    Ok(Output::ok(ascii, json))
}

fn cmd_promote(w: &HighestWeightWord, inverse: bool, times: usize) -> Result<Output, CliError> {
    let mut cur = w.clone();
    let mut seq = vec![cur.clone()];
    for _ in 0..times {
        cur = if inverse {
            inverse_promotion(&cur)?
        } else {
            promotion(&cur)?
        };
        seq.push(cur.clone());
    }
    let mut ascii = String::new();
    for (k, x) in seq.iter().enumerate() {
        ascii.push_str(&word_line(&k.to_string(), x));
    }
    let json = json!({ "inverse": inverse, "sequence": seq.iter().map(word_json).collect::<Vec<_>>() });
    Ok(Output::ok(ascii, json))
}

fn single_generator(r: usize, s: &str) -> Result<CactusGen, CliError> {
    let w = CactusWord::parse(r, s)?;
    match w.gens() {
        [g] => Ok(*g),
        _ => Err(CliError::Parse(format!("expected a single generator, got {s:?}"))),
    }
}

fn window_json(w: &CylWindow) -> Value {
    json!({ "first": w.first(), "rows": rows_json(w.rows()) })
}

fn cmd_cylinder(
    w: &HighestWeightWord,
    depth: Option<usize>,
    first: i64,
    wall: Option<&str>,
) -> Result<Output, CliError> {
    let r = w.len();
    let window = CylWindow::from_top(w, first, depth.unwrap_or(r + 1));
    let mut ascii = format!(
        "rows {}..={}\n{}",
        window.first(),
        window.first() + window.depth() as i64,
        window.render_ascii()
    );
    let mut json = json!({ "window": window_json(&window) });
    let mut failed = false;
    if let Some(s) = wall {
        let g = single_generator(r, s)?;
        let after = wall_cross(g, &window)?;
        let bad = wall_cross_violations(g, &window, &after);
        let invalid = after.violations();
        failed = !bad.is_empty() || !invalid.is_empty();
        let _ = write!(ascii, "\nafter wall crossing {g}\n{}", after.render_ascii());
        ascii.push_str(&word_line("top", &after.top()));
        if failed {
            let _ = writeln!(ascii, "violations: cases {bad:?}, local rule {invalid:?}");
        }
        json["wall"] = json!({
            "generator": g.to_string(),
            "window": window_json(&after),
            "top": word_json(&after.top()),
            "case_violations": bad,
            "rule_violations": invalid,
        });
    }
    Ok(Output { ascii, json, failed })
}

fn cmd_validate(ctx: CartanContext, text: &[String], first: i64) -> Result<Output, CliError> {
    let rows = text
        .iter()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_row(ctx, l))
        .collect::<Result<Vec<_>, _>>()?;
    let Some(len) = rows.first().map(Vec::len) else {
        return Err(CliError::Parse("no rows given".into()));
    };
    if rows.len() < 2 || rows.iter().any(|r| r.len() != len) {
        return Err(CliError::Parse("need at least two rows of equal length".into()));
    }
    let window = CylWindow::from_rows_unchecked(first, rows);
    let bad = window.violations();
    let mut ascii = window.render_ascii();
    if bad.is_empty() {
        ascii.push_str("valid: every cell satisfies the local rule\n");
    } else {
        let cells: Vec<String> = bad.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let _ = writeln!(
            ascii,
            "invalid (i,j): vertex or top left corner of a cell: {}",
            cells.join(" ")
        );
    }
    let json = json!({ "valid": bad.is_empty(), "violations": bad, "window": window_json(&window) });
    Ok(Output {
        ascii,
        json,
        failed: !bad.is_empty(),
    })
}

fn gl_word(t: &StandardTableau) -> Result<HighestWeightWord, CliError> {
    let ctx = CartanContext::gl(t.shape().len().max(1));
    Ok(HighestWeightWord::from_corners(ctx, syt_to_corners(t, ctx)?)?)
}

fn as_tableau(w: &HighestWeightWord) -> Result<StandardTableau, CliError> {
    Ok(syt_from_corners(w.corners())?)
}

fn comparison(name: &str, input: String, oracle: String, rules: String) -> Output {
    let agree = oracle == rules;
    let ascii = format!(
        "{name}\ninput        {input}\noracle       {oracle}\nlocal rules  {rules}\n{}\n",
        if agree { "agree" } else { "DISAGREE" }
    );
    let json = json!({ "operation": name, "input": input, "oracle": oracle, "local_rules": rules, "agree": agree });
    Output {
        ascii,
        json,
        failed: !agree,
    }
}

fn cmd_oracle(op: &OracleOp) -> Result<Output, CliError> {
    match op {
        OracleOp::Evacuation { tableau } => {
            let t: StandardTableau = tableau.parse()?;
            let rules = as_tableau(&evacuation(&gl_word(&t)?)?)?;
            Ok(comparison(
                "evacuation",
                t.to_string(),
                evacuation_oracle(&t).to_string(),
                rules.to_string(),
            ))
        }
        OracleOp::Promotion { tableau } => {
            let t: StandardTableau = tableau.parse()?;
            let rules = as_tableau(&promotion(&gl_word(&t)?)?)?;
            Ok(comparison(
                "promotion",
                t.to_string(),
                promotion_oracle(&t).to_string(),
                rules.to_string(),
            ))
        }
        OracleOp::DualKnuth { tableau, i } => {
            let t: StandardTableau = tableau.parse()?;
            let oracle = dual_knuth(&t, *i)?;
            let g = CactusWord::from_pairs(t.size(), &[(*i, i + 2)])?;
            let rules = as_tableau(&act(&g, &gl_word(&t)?)?)?;
            Ok(comparison(
                &format!("dual Knuth D_{i}"),
                t.to_string(),
                oracle.to_string(),
                rules.to_string(),
            ))
        }
        OracleOp::BenderKnuth { tableau, i, max_entry } => {
            let t: SemistandardTableau = tableau.parse()?;
            let m = max_entry.unwrap_or_else(|| t.max_entry()).max(i + 1);
            let oracle = bender_knuth(&t, *i)?;
            let ctx = CartanContext::gl(t.shape().part(0).max(1) as usize);
            let conj: Vec<Partition> = t.gt_pattern(m).iter().map(Partition::conjugate).collect();
            let moved = HighestWeightWord::from_partitions(ctx, &conj)?.tau(*i)?;
            let back: Vec<Partition> = moved.partitions()?.iter().map(Partition::conjugate).collect();
            let rules = SemistandardTableau::from_gt_pattern(&back)?;
            Ok(comparison(
                &format!("Bender-Knuth b_{i}"),
                t.to_string(),
                oracle.to_string(),
                rules.to_string(),
            ))
        }
    }
}

fn parse_shape(s: &str) -> Result<Partition, CliError> {
    let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let parts = t
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Parse(format!("bad shape {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(CliError::domain)
}

fn cmd_hecke(op: &HeckeOp) -> Result<Output, CliError> {
    match op {
        HeckeOp::Check { shape, cactus_limit } => {
            let shape = parse_shape(shape)?;
            let results = check_shape(&shape, *cactus_limit)?;
            let mut ascii = format!("shape {shape}\n");
            for c in &results {
                let tag = if c.passed() { "pass" } else { "FAIL" };
                let _ = writeln!(ascii, "  [{tag}] {:<45} {:>5} checked", c.name, c.checked);
            }
            let failed = results.iter().any(|c| !c.passed());
            let json = json!({
                "shape": shape.parts(),
                "passed": !failed,
                "checks": results.iter().map(|c| json!({ "name": c.name, "checked": c.checked, "failures": c.failures })).collect::<Vec<_>>(),
            });
            Ok(Output { ascii, json, failed })
        }
        HeckeOp::Matrix { op, i, shape } => {
            let shape = parse_shape(shape)?;
            let rep = SeminormalRep::new(&shape);
            let m = match op {
                MatrixOp::U => rep.u_matrix(*i)?,
                MatrixOp::T => rep.t_matrix(*i)?,
                MatrixOp::Tinv => rep.t_inv_matrix(*i)?,
                MatrixOp::Tau => rep.tau_matrix(*i)?,
                MatrixOp::Jm => rep.jm_matrix(*i, JmPower::One)?,
                MatrixOp::JmSqrt => rep.jm_matrix(*i, JmPower::Sqrt)?,
                MatrixOp::JmInvSqrt => rep.jm_matrix(*i, JmPower::InverseSqrt)?,
                MatrixOp::JmWord => rep.jm_word(*i)?,
                MatrixOp::SigmaVv => rep.sigma_vv()?,
            };
            let basis: Vec<String> = rep.basis().iter().map(ToString::to_string).collect();
            let entries: Vec<Vec<String>> = (0..m.rows())
                .map(|r| m.row(r).iter().map(ToString::to_string).collect())
                .collect();
            let ascii = format!("basis {}\n{m}", basis.join(" "));
            let json = json!({ "shape": shape.parts(), "op": format!("{op:?}").to_lowercase(), "i": i, "basis": basis, "matrix": entries });
            Ok(Output::ok(ascii, json))
        }
    }
}

struct Bounds {
    r: Option<usize>,
    tiny: bool,
    samples: Option<usize>,
    cactus_limit: Option<usize>,
    max_size: Option<u32>,
    seed: u64,
}

fn within<T: PartialOrd + std::fmt::Display>(name: &str, v: T, max: T) -> Result<T, CliError> {
    if v > max {
        Err(CliError::Parse(format!(
            "{name} = {v} exceeds the supported maximum {max}"
        )))
    } else {
        Ok(v)
    }
}

fn suite_text(rep: &SuiteReport) -> String {
    let mut s = format!("{} {}\n", rep.suite, if rep.passed() { "PASS" } else { "FAIL" });
    for c in &rep.checks {
        let tag = if c.failures == 0 && c.checked > 0 {
            "pass"
        } else {
            "FAIL"
        };
        let _ = writeln!(
            s,
            "  [{tag}] {:<45} {:>8} checked {:>5} failed",
            c.name, c.checked, c.failures
        );
        if let Some(f) = &c.first_failure {
            let _ = writeln!(s, "         first failure: {f}");
        }
    }
    s
}

fn cmd_verify(suite: Suite, b: &Bounds) -> Result<Output, CliError> {
    let pick = |tiny: usize, full: usize| if b.tiny { tiny } else { full };
    let mut reports = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Cactus) {
        let r = within("r", b.r.unwrap_or(pick(3, 6)), if b.samples.is_some() { 12 } else { 7 })?;
        match b.samples {
            None => reports.push(verify::cactus_suite(r, &verify::standard_letters())),
            Some(n) => {
                let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
                for letter in verify::standard_letters() {
                    let mut words: Vec<HighestWeightWord> = (0..n)
                        .map(|_| verify::grow_word(&letter, r, |k| rng.gen_range(0..k)))
                        .collect();
                    words.sort();
                    words.dedup();
                    let mut rep = verify::cactus_suite_on(&letter, r, &words);
                    rep.suite = format!("cactus {} r={r} ({} sampled words)", letter.label(), words.len());
                    reports.push(rep);
                }
            }
        }
    }
    if wants(Suite::Oracle) {
        let n = within("max-size", b.max_size.unwrap_or(pick(4, 8) as u32), 10)?;
        let (shape, entries) = if b.tiny { (vec![2, 1], 3) } else { (vec![4, 3, 2, 1], 5) };
        reports.push(verify::oracle_suite(
            n,
            &Partition::new(shape).expect("partition"),
            entries,
        ));
    }
    if wants(Suite::Hecke) {
        let n = within("max-size", b.max_size.unwrap_or(pick(3, 6) as u32), 7)?;
        let limit = b.cactus_limit.unwrap_or(pick(3, 5));
        reports.push(verify::hecke_suite(n, limit));
    }
    if wants(Suite::Crystal) {
        let r = within("r", b.r.unwrap_or(pick(3, 5)), 7)?;
        reports.push(verify::crystal_suite(r, pick(6, 10)));
    }
    if wants(Suite::Wall) {
        let r = within("r", b.r.unwrap_or(pick(3, 5)), 7)?;
        reports.push(verify::wall_suite(r, Letter::gl_vector(2)));
    }
    let failed = reports.iter().any(|r| !r.passed());
    let ascii = reports.iter().map(suite_text).collect::<String>();
    let json = json!({
        "passed": !failed,
        "suites": reports.iter().map(|r| json!({ "suite": r.suite, "passed": r.passed(), "checks": r.checks })).collect::<Vec<_>>(),
    });
    Ok(Output { ascii, json, failed })
}

fn cmd_demo(name: Option<&str>, list: bool) -> Result<Output, CliError> {
    if list || name.is_none() {
        let ascii = format!(
            "demos: {}\nexample words (--demo): {}\n",
            demos::NAMES.join(" "),
            demos::WORD_NAMES.join(" ")
        );
        return Ok(Output::ok(
            ascii,
            json!({ "demos": demos::NAMES, "words": demos::WORD_NAMES }),
        ));
    }
    let names: Vec<&str> = match name {
        Some("all") => demos::NAMES.to_vec(),
        Some(n) => vec![n],
        None => unreachable!("handled above"),
    };
    let reports = names
        .iter()
        .map(|n| demos::run(n))
        .collect::<Result<Vec<DemoReport>, _>>()?;
    let failed = reports.iter().any(|r| !r.ok());
    let ascii = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    let json = if reports.len() == 1 {
        json!(reports[0])
    } else {
        json!(reports)
    };
    Ok(Output { ascii, json, failed })
}

fn minuscule(ctx: CartanContext, step: StepKind) -> Minuscule {
    match (ctx.family(), step) {
        (Family::SL2, _) => Minuscule::Sl2,
        (_, StepKind::Vector) => Minuscule::Vector,
        (_, StepKind::Exterior(k)) => Minuscule::Exterior(k),
    }
}

fn cmd_crystal(op: &CrystalOp) -> Result<Output, CliError> {
    match op {
        CrystalOp::Decompose { group, step, r } => {
            let ctx = parse_group(group)?;
            let c = build_minuscule(ctx, minuscule(ctx, parse_step(step)?)).map_err(CliError::domain)?;
            let census = decompose(&c, *r, DEFAULT_SIZE_LIMIT).map_err(CliError::domain)?;
            let total: usize = census.values().map(|v| v.count * v.size).sum();
            let mut ascii = format!("{ctx} {step} ⊗{r}: {total} elements\n");
            let mut rows = Vec::new();
            for (w, v) in &census {
                let _ = writeln!(
                    ascii,
                    "  {:<12} count {:>5}  size {:>6}",
                    format_corner(w),
                    v.count,
                    v.size
                );
                rows.push(json!({ "highest_weight": format_corner(w), "count": v.count, "size": v.size }));
            }
            Ok(Output::ok(
                ascii,
                json!({ "group": ctx.to_string(), "r": r, "total": total, "components": rows }),
            ))
        }
        CrystalOp::Words { group, step, r } => {
            let ctx = parse_group(group)?;
            let words = all_words(ctx, &vec![parse_step(step)?; *r])?;
            let ascii = words.iter().map(|w| format!("{w}\n")).collect::<String>();
            let json = json!(words.iter().map(|w| w.corner_string()).collect::<Vec<_>>());
            Ok(Output::ok(ascii, json))
        }
    }
}
