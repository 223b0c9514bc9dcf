//! Growth diagrams: rectangles (rectification), triangles (evacuation),
//! two-row diagrams (promotion) and windows of cylindrical diagrams.
//!
//! Cells follow the layout `λ ν / κ μ` (top-left, top-right, bottom-left,
//! bottom-right) and satisfy `μ = dom_W(κ + ν − λ)`. In a cylindrical
//! diagram `γ(i, j)` sits in row `i`; the vertical edge runs from
//! `γ(i+1, j)` up to `γ(i, j)`, so a cell is
//! `λ = γ(i, j)`, `ν = γ(i, j+1)`, `κ = γ(i+1, j)`, `μ = γ(i+1, j+1)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cactus::{reduce_to_s1q, CactusAction, CactusError, CactusGen, CactusWord};
use crate::localrules::{format_corner, local_rule, HighestWeightWord, LocalRuleError, WeightPath};
use crate::weights::{CartanContext, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error(transparent)]
    LocalRule(#[from] LocalRuleError),
    #[error(transparent)]
    Cactus(#[from] CactusError),
    #[error("bad path: {0}")]
    BadPath(String),
    #[error("word has length {word}, cactus word acts on {strands} strands")]
    LengthMismatch { word: usize, strands: usize },
    #[error("edges do not meet: {0} vs {1}")]
    CornerMismatch(Weight, Weight),
}

fn rule(kappa: &Weight, lambda: &Weight, nu: &Weight) -> Weight {
    local_rule(kappa, lambda, nu)
}

/// A filled rectangle; `grid[a][b]` is row `a` from the top, column `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectDiagram {
    #[serde(serialize_with = "ser_grid")]
    grid: Vec<Vec<Weight>>,
}

fn ser_grid<S: serde::Serializer>(g: &[Vec<Weight>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        g.iter()
            .map(|row| row.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>()),
    )
}

impl RectDiagram {
    /// Fill the rectangle with top edge `top` and left edge `left`, the
    /// latter read upwards so that `left.last() == top.corner(0)`.
    pub fn complete(top: &WeightPath, left: &WeightPath) -> Result<Self, GrowthError> {
        if left.last() != top.corner(0) {
            return Err(GrowthError::CornerMismatch(left.last().clone(), top.corner(0).clone()));
        }
        let m = left.len();
        let mut grid = vec![top.corners().to_vec()];
        for a in 0..m {
            let prev = &grid[a];
            let mut row = Vec::with_capacity(prev.len());
            row.push(left.corner(m - a - 1).clone());
            for b in 0..top.len() {
                row.push(rule(&row[b], &prev[b], &prev[b + 1]));
            }
            grid.push(row);
        }
        let d = Self { grid };
        d.bottom()?;
        d.right()?;
        Ok(d)
    }

    pub fn grid(&self) -> &[Vec<Weight>] {
        &self.grid
    }

    fn context(&self) -> CartanContext {
        self.grid[0][0].context()
    }

    pub fn bottom(&self) -> Result<WeightPath, LocalRuleError> {
        WeightPath::from_corners(self.context(), self.grid.last().expect("nonempty grid").clone())
    }

    /// Right edge read upwards.
    pub fn right(&self) -> Result<WeightPath, LocalRuleError> {
        let col = self
            .grid
            .iter()
            .rev()
            .map(|row| row.last().expect("nonempty row").clone())
            .collect();
        WeightPath::from_corners(self.context(), col)
    }

    /// Cells `(a, b)` (top-left corner) violating the local rule.
    pub fn violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.grid.len() - 1 {
            for b in 0..self.grid[a].len() - 1 {
                let (l, n) = (&self.grid[a][b], &self.grid[a][b + 1]);
                let (k, mu) = (&self.grid[a + 1][b], &self.grid[a + 1][b + 1]);
                if &rule(k, l, n) != mu || &rule(k, mu, n) != l {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Rectification through a rectangle: `u ⊗ w` is highest weight with `u`
/// given by `left` (from 0) and `w` by the path `top` starting at
/// `left.shape()`. Returns `(rect(w), u')`.
pub fn rectify_by_growth(
    left: &HighestWeightWord,
    top: &WeightPath,
) -> Result<(HighestWeightWord, WeightPath), GrowthError> {
    let d = RectDiagram::complete(top, left.path())?;
    let bottom = HighestWeightWord::try_from(d.bottom()?)?;
    Ok((bottom, d.right()?))
}

/// Staircase `γ(i, j)`, `0 ≤ i ≤ j ≤ r`, stored as `rows[i][j − i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriDiagram {
    #[serde(serialize_with = "ser_grid")]
    rows: Vec<Vec<Weight>>,
}

impl TriDiagram {
    pub fn from_top(w: &HighestWeightWord) -> Self {
        let r = w.len();
        let zero = w.context().zero();
        let mut rows: Vec<Vec<Weight>> = vec![w.corners().to_vec()];
        for i in 0..r {
            let prev = &rows[i];
            let mut row = Vec::with_capacity(prev.len() - 1);
            row.push(zero.clone());
            for k in 1..prev.len() - 1 {
                row.push(rule(&row[k - 1], &prev[k], &prev[k + 1]));
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<Weight>] {
        &self.rows
    }

    pub fn gamma(&self, i: usize, j: usize) -> &Weight {
        &self.rows[i][j - i]
    }

    /// Right edge read from `γ(r, r)` up to `γ(0, r)`.
    pub fn right_edge(&self) -> Vec<Weight> {
        self.rows
            .iter()
            .rev()
            .map(|row| row.last().expect("nonempty row").clone())
            .collect()
    }

    /// The reflected staircase `γ'(i, j) = γ(r − j, r − i)`.
    pub fn reflect(&self) -> TriDiagram {
        let r = self.rows.len() - 1;
        let rows = (0..=r)
            .map(|i| (i..=r).map(|j| self.gamma(r - j, r - i).clone()).collect())
            .collect();
        TriDiagram { rows }
    }

    pub fn violations(&self) -> Vec<(usize, usize)> {
        let r = self.rows.len() - 1;
        let mut out = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let (l, n) = (self.gamma(i, j), self.gamma(i, j + 1));
                let (k, mu) = (self.gamma(i + 1, j), self.gamma(i + 1, j + 1));
                if &rule(k, l, n) != mu || &rule(k, mu, n) != l {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// `s_{1,r}` through the triangular diagram.
pub fn evacuation(w: &HighestWeightWord) -> Result<HighestWeightWord, GrowthError> {
    if w.len() <= 1 {
        return Ok(w.clone());
    }
    let t = TriDiagram::from_top(w);
    Ok(HighestWeightWord::from_corners(w.context(), t.right_edge())?)
}

/// Two-row diagram: top `a_0..a_r`, bottom `b_0..b_r` with `b_j` under
/// `a_{j+1}`; `b_0 = 0` and `b_r = λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoRowDiagram {
    pub top: HighestWeightWord,
    pub bottom: HighestWeightWord,
}

fn promote_corners(a: &[Weight]) -> Vec<Weight> {
    let r = a.len() - 1;
    let mut b = Vec::with_capacity(r + 1);
    b.push(a[0].context().zero());
    for j in 1..r {
        let next = rule(&b[j - 1], &a[j], &a[j + 1]);
        b.push(next);
    }
    b.push(a[r].clone());
    b
}

fn unpromote_corners(b: &[Weight]) -> Vec<Weight> {
    let r = b.len() - 1;
    let mut a = vec![b[0].context().zero(); r + 1];
    a[r] = b[r].clone();
    for j in (1..r).rev() {
        a[j] = rule(&b[j - 1], &b[j], &a[j + 1]);
    }
    a
}

impl TwoRowDiagram {
    pub fn from_top(w: &HighestWeightWord) -> Result<Self, GrowthError> {
        let b = promote_corners(w.corners());
        Ok(Self {
            top: w.clone(),
            bottom: HighestWeightWord::from_corners(w.context(), b)?,
        })
    }

    pub fn violations(&self) -> Vec<usize> {
        let (a, b) = (self.top.corners(), self.bottom.corners());
        let r = a.len() - 1;
        (1..r)
            .filter(|&j| {
                let (l, n, k, mu) = (&a[j], &a[j + 1], &b[j - 1], &b[j]);
                &rule(k, l, n) != mu || &rule(k, mu, n) != l
            })
            .collect()
    }
}

/// `s_{1,r} s_{2,r}` through the two-row diagram.
pub fn promotion(w: &HighestWeightWord) -> Result<HighestWeightWord, GrowthError> {
    if w.is_empty() {
        return Ok(w.clone());
    }
    Ok(TwoRowDiagram::from_top(w)?.bottom)
}

/// The inverse of [`promotion`].
pub fn inverse_promotion(w: &HighestWeightWord) -> Result<HighestWeightWord, GrowthError> {
    if w.is_empty() {
        return Ok(w.clone());
    }
    Ok(HighestWeightWord::from_corners(
        w.context(),
        unpromote_corners(w.corners()),
    )?)
}

/// `s_{1,q}`: evacuate the first `q` steps, keep the rest.
pub fn act_s1q(q: usize, w: &HighestWeightWord) -> Result<HighestWeightWord, GrowthError> {
    if q > w.len() {
        return Err(GrowthError::LengthMismatch {
            word: w.len(),
            strands: q,
        });
    }
    let head = evacuation(&w.prefix(q))?;
    let mut corners = head.corners().to_vec();
    corners.extend_from_slice(&w.corners()[q + 1..]);
    Ok(HighestWeightWord::from_corners(w.context(), corners)?)
}

pub fn act_gen(g: CactusGen, w: &HighestWeightWord) -> Result<HighestWeightWord, GrowthError> {
    reduce_to_s1q(g)
        .gens()
        .iter()
        .rev()
        .try_fold(w.clone(), |acc, h| act_s1q(h.q(), &acc))
}

/// Act by a cactus word; the rightmost generator acts first.
pub fn act(g: &CactusWord, w: &HighestWeightWord) -> Result<HighestWeightWord, GrowthError> {
    if g.r() != w.len() {
        return Err(GrowthError::LengthMismatch {
            word: w.len(),
            strands: g.r(),
        });
    }
    HwAction.act_word(g, w)
}

/// The cactus group acting on highest weight words through growth diagrams.
pub struct HwAction;

impl CactusAction for HwAction {
    type Point = HighestWeightWord;
    type Error = GrowthError;

    fn act_gen(&self, g: CactusGen, x: &HighestWeightWord) -> Result<HighestWeightWord, GrowthError> {
        act_gen(g, x)
    }
}

/// One move along a path through the cylinder: `Up` is `(−1, 0)`,
/// `Right` is `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Move {
    Up,
    Right,
}

/// A path `(i_0, i_0) → … ` through `𝕀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CylPath {
    pub start: i64,
    pub moves: Vec<Move>,
}

impl CylPath {
    /// Parse `U`/`R` letters, e.g. `RRURRR`.
    pub fn parse(start: i64, s: &str) -> Result<Self, GrowthError> {
        let moves = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(Move::Up),
                'R' | 'r' => Ok(Move::Right),
                other => Err(GrowthError::BadPath(format!("unexpected move {other:?}"))),
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { start, moves })
    }

    /// The horizontal path along row `i`.
    pub fn row(i: i64, r: usize) -> Self {
        Self {
            start: i,
            moves: vec![Move::Right; r],
        }
    }

    /// The path up column `j` (from `(j, j)` to `(j − r, j)`).
    pub fn column(j: i64, r: usize) -> Self {
        Self {
            start: j,
            moves: vec![Move::Up; r],
        }
    }

    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut p = (self.start, self.start);
        let mut out = vec![p];
        for m in &self.moves {
            match m {
                Move::Up => p.0 -= 1,
                Move::Right => p.1 += 1,
            }
            out.push(p);
        }
        out
    }
}

/// Consecutive rows `first ..= first + depth` of a cylindrical diagram;
/// `rows[t][k] = γ(first + t, first + t + k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CylWindow {
    r: usize,
    first: i64,
    #[serde(serialize_with = "ser_grid")]
    rows: Vec<Vec<Weight>>,
}

impl CylWindow {
    /// Window whose first row is `top` (as row `first`), extended by
    /// `depth` promotions.
    pub fn from_top(top: &HighestWeightWord, first: i64, depth: usize) -> Self {
        let mut rows = vec![top.corners().to_vec()];
        for _ in 0..depth {
            let next = promote_corners(rows.last().expect("nonempty"));
            rows.push(next);
        }
        Self {
            r: top.len(),
            first,
            rows,
        }
    }

    /// Raw rows, e.g. transcribed from a figure. Use [`CylWindow::violations`]
    /// to check them.
    pub fn from_rows_unchecked(first: i64, rows: Vec<Vec<Weight>>) -> Self {
        let r = rows.first().map_or(0, |row| row.len() - 1);
        Self { r, first, rows }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn first(&self) -> i64 {
        self.first
    }

    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Weight>] {
        &self.rows
    }

    pub fn context(&self) -> CartanContext {
        self.rows[0][0].context()
    }

    pub fn gamma(&self, i: i64, j: i64) -> Option<&Weight> {
        let t = i - self.first;
        let k = j - i;
        if t < 0 || k < 0 || k > self.r as i64 {
            return None;
        }
        self.rows.get(t as usize).map(|row| &row[k as usize])
    }

    pub fn row(&self, i: i64) -> Option<Result<HighestWeightWord, LocalRuleError>> {
        let t = i - self.first;
        if t < 0 {
            return None;
        }
        self.rows
            .get(t as usize)
            .map(|row| HighestWeightWord::from_corners(self.context(), row.clone()))
    }

    pub fn top(&self) -> HighestWeightWord {
        self.row(self.first)
            .expect("window has a row")
            .expect("window rows are words")
    }

    /// Column `j` read top to bottom over the rows present.
    pub fn column_down(&self, j: i64) -> Vec<Weight> {
        (0..self.rows.len() as i64)
            .filter_map(|t| self.gamma(self.first + t, j).cloned())
            .collect()
    }

    /// Labels along a path, when all its points lie in the window.
    pub fn restrict(&self, path: &CylPath) -> Option<Vec<Weight>> {
        path.points()
            .into_iter()
            .map(|(i, j)| self.gamma(i, j).cloned())
            .collect()
    }

    /// Failures of the boundary conditions and local rule, as `(i, j)` of
    /// the offending vertex or cell's top-left corner.
    pub fn violations(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let shape = &self.rows[0][self.r];
        for (t, row) in self.rows.iter().enumerate() {
            let i = self.first + t as i64;
            if !row[0].is_zero() {
                out.push((i, i));
            }
            if &row[self.r] != shape {
                out.push((i, i + self.r as i64));
            }
        }
        for t in 0..self.rows.len().saturating_sub(1) {
            let i = self.first + t as i64;
            for k in 1..self.r {
                let j = i + k as i64;
                let l = &self.rows[t][k];
                let n = &self.rows[t][k + 1];
                let kap = &self.rows[t + 1][k - 1];
                let mu = &self.rows[t + 1][k];
                if &rule(kap, l, n) != mu || &rule(kap, mu, n) != l {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Aligned text grid, each row shifted one column per row.
    pub fn render_ascii(&self) -> String {
        render_rows(&self.rows)
    }
}

impl fmt::Display for CylWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

/// Render staggered rows (row `t` starts in column `t`) using bracketed
/// partitions such as `[2,1]`.
pub fn render_rows(rows: &[Vec<Weight>]) -> String {
    let cell = |w: &Weight| match w.to_partition() {
        Ok(p) if p.is_empty() => "∅".to_string(),
        Ok(p) => p.to_string(),
        Err(_) => format_corner(w),
    };
    let cells: Vec<Vec<String>> = rows.iter().map(|row| row.iter().map(cell).collect()).collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for (t, row) in cells.iter().enumerate() {
        let mut line = " ".repeat((width + 1) * t);
        for (k, c) in row.iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            line.push_str(&format!("{c:<width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Rebuild a window from the labels along a path. The result starts at the
/// topmost row the path visits and has `depth` further rows.
pub fn cylinder_from_path(path: &CylPath, labels: &HighestWeightWord, depth: usize) -> Result<CylWindow, GrowthError> {
    let r = labels.len();
    if path.moves.len() != r {
        return Err(GrowthError::BadPath(format!(
            "path has {} moves, word has {} steps",
            path.moves.len(),
            r
        )));
    }
    let pts = path.points();
    let corners = labels.corners();
    // segments[row offset from the bottom] = (i, j range start, known values)
    let mut segments: Vec<(i64, i64, Vec<Weight>)> = Vec::new();
    for (k, &(i, j)) in pts.iter().enumerate() {
        match segments.last_mut() {
            Some((si, _, vals)) if *si == i => vals.push(corners[k].clone()),
            _ => segments.push((i, j, vec![corners[k].clone()])),
        }
    }
    // climb: each higher row is filled right to left from the row below
    let (mut i, mut start, mut known) = segments[0].clone();
    for (ni, nstart, nvals) in segments.iter().skip(1) {
        debug_assert_eq!(*ni, i - 1);
        // row i known on j in start ..= start + known.len() - 1, and nstart is its end
        let mut row: Vec<Weight> = nvals.clone();
        let mut j = *nstart;
        while j > i {
            // cell with λ = γ(i−1, j−1), ν = γ(i−1, j), κ = γ(i, j−1), μ = γ(i, j)
            let kap = &known[(j - 1 - start) as usize];
            let mu = &known[(j - start) as usize];
            let lam = rule(kap, mu, &row[0]);
            row.insert(0, lam);
            j -= 1;
        }
        // j == i: γ(i−1, i−1) is the zero boundary
        row.insert(0, labels.context().zero());
        i = *ni;
        start = i;
        known = row;
    }
    if known.len() != r + 1 {
        return Err(GrowthError::BadPath("path does not reach the shape".into()));
    }
    let top = HighestWeightWord::from_corners(labels.context(), known)?;
    let bottom_row = pts[0].0;
    let depth = depth.max((bottom_row - i) as usize);
    let window = CylWindow::from_top(&top, i, depth);
    if window.restrict(path).as_deref() != Some(corners) {
        return Err(GrowthError::BadPath(
            "labels are not consistent with the local rules".into(),
        ));
    }
    Ok(window)
}

/// The operator on cylindrical diagrams that realizes `s_{p,q}`; the
/// window's first row is taken as row 0. Rows `0..=q` of the result are
/// returned (or more if the input window is deeper).
pub fn wall_cross(g: CactusGen, window: &CylWindow) -> Result<CylWindow, GrowthError> {
    let r = window.r();
    if g.q() > r {
        return Err(CactusError::BadGenerator { p: g.p(), q: g.q(), r }.into());
    }
    let top = window.top();
    let depth = window.depth().max(g.q());
    let full = CylWindow::from_top(&top, 0, depth);
    let pr = (g.p() - 1) as i64;
    let q = g.q() as i64;
    let get = |i: i64, j: i64| full.gamma(i, j).expect("inside window").clone();
    // row pr of the new diagram
    let mut new_row: Vec<Weight> = (pr..=q).map(|j| get(pr + q - j, q)).collect();
    new_row.extend((q + 1..=pr + r as i64).map(|j| get(pr, j)));
    let mut w = HighestWeightWord::from_corners(top.context(), new_row)?;
    for _ in 0..pr {
        w = inverse_promotion(&w)?;
    }
    Ok(CylWindow::from_top(&w, 0, depth))
}

/// Check the defining cases of the operator for `s_{p,q}` on the vertices
/// `0 ≤ i ≤ j ≤ r` present in both windows (letters of `γ(i, j)` are
/// `i+1 ..= j`). Returns the offending vertices.
pub fn wall_cross_violations(g: CactusGen, before: &CylWindow, after: &CylWindow) -> Vec<(i64, i64)> {
    let pr = (g.p() - 1) as i64;
    let q = g.q() as i64;
    let mut out = Vec::new();
    for t in 0..after.rows.len() as i64 {
        let i = after.first + t;
        for k in 0..=after.r as i64 {
            let j = i + k;
            if i < 0 || j > after.r as i64 {
                continue;
            }
            let expected = if j <= pr || i >= q || (i <= pr && j >= q) {
                before.gamma(i, j)
            } else if pr <= i && j <= q {
                before.gamma(pr + q - j, pr + q - i)
            } else {
                continue;
            };
            if let Some(e) = expected {
                if after.gamma(i, j) != Some(e) {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cactus::Relation;
    use crate::localrules::{all_words, StepKind};

    fn gl2_words(r: usize) -> Vec<HighestWeightWord> {
        all_words(CartanContext::gl(2), &vec![StepKind::Vector; r]).unwrap()
    }

    fn suites(max_r: usize) -> Vec<HighestWeightWord> {
        let mut out = Vec::new();
        for r in 1..=max_r {
            for ctx in [CartanContext::gl(2), CartanContext::gl(3), CartanContext::sp(2)] {
                out.extend(all_words(ctx, &vec![StepKind::Vector; r]).unwrap());
            }
        }
        out
    }

    fn word(ctx: CartanContext, s: &str) -> HighestWeightWord {
        HighestWeightWord::parse(ctx, s).unwrap()
    }

    #[test]
    fn rectangle_edges() {
        let gl2 = CartanContext::gl(2);
        let top = word(gl2, "∅,1,2,21");
        let empty = HighestWeightWord::parse(gl2, "∅").unwrap();
        let d = RectDiagram::complete(top.path(), empty.path()).unwrap();
        assert_eq!(d.grid().len(), 1);
        assert_eq!(d.bottom().unwrap(), *top.path());
        // 1×1 is a single cell
        let left = word(gl2, "∅,1");
        let top =
            WeightPath::from_corners(gl2, vec![left.shape().clone(), word(gl2, "∅,1,2").shape().clone()]).unwrap();
        let d = RectDiagram::complete(&top, left.path()).unwrap();
        assert_eq!(format_corner(&d.grid()[1][1]), "1");
        assert!(d.violations().is_empty());
        let bad = WeightPath::from_corners(gl2, vec![word(gl2, "∅,1,2").shape().clone()]).unwrap();
        assert!(RectDiagram::complete(&bad, left.path()).is_err());
    }

    #[test]
    fn evacuation_small_cases() {
        let gl2 = CartanContext::gl(2);
        let w = word(gl2, "∅,1");
        assert_eq!(evacuation(&w).unwrap(), w);
        // 134/256 -> 125/346
        let c = word(gl2, "∅,1,11,21,31,32,33");
        assert_eq!(evacuation(&c).unwrap().to_string(), "∅,1,2,21,22,32,33");
    }

    #[test]
    fn sp_example_rows() {
        let sp = CartanContext::sp(2);
        let x = word(sp, "∅,1,2,21,11,1,∅");
        let a = word(sp, "∅,1,11,1,11,1,∅");
        let b = word(sp, "∅,1,11,21,2,1,∅");
        assert_eq!(promotion(&x).unwrap(), a);
        assert_eq!(promotion(&a).unwrap(), b);
        assert_eq!(promotion(&b).unwrap(), x);
        assert_eq!(evacuation(&x).unwrap(), b);
        assert_eq!(evacuation(&a).unwrap(), a);
        let t = TriDiagram::from_top(&x);
        let mut col = t.right_edge();
        col.reverse();
        assert_eq!(
            WeightPath::from_corners(sp, col).unwrap().to_string(),
            "∅,1,2,21,11,1,∅"
        );
    }

    #[test]
    fn produced_diagrams_validate() {
        for w in suites(5) {
            let t = TriDiagram::from_top(&w);
            assert!(t.violations().is_empty());
            assert!(t.reflect().violations().is_empty());
            assert!(TwoRowDiagram::from_top(&w).unwrap().violations().is_empty());
            let win = CylWindow::from_top(&w, 0, w.len() + 1);
            assert!(win.violations().is_empty(), "{w}");
        }
    }

    #[test]
    fn evacuation_involution_and_promotion_inverse() {
        for w in suites(6) {
            let e = evacuation(&w).unwrap();
            assert_eq!(evacuation(&e).unwrap(), w);
            let p = promotion(&w).unwrap();
            assert_eq!(inverse_promotion(&p).unwrap(), w);
            // promotion = s_{1,r} s_{2,r}
            if w.len() >= 3 {
                let r = w.len();
                let g = CactusWord::from_pairs(r, &[(1, r), (2, r)]).unwrap();
                assert_eq!(act(&g, &w).unwrap(), p, "{w}");
            }
        }
    }

    #[test]
    fn adjacent_generators_trivial_on_gl_vector() {
        for r in 2..=6 {
            for w in all_words(CartanContext::gl(3), &vec![StepKind::Vector; r]).unwrap() {
                for p in 1..r {
                    let g = CactusWord::from_pairs(r, &[(p, p + 1)]).unwrap();
                    assert_eq!(act(&g, &w).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn cactus_relations_on_words() {
        for r in 2..=5 {
            for ctx in [CartanContext::gl(2), CartanContext::gl(3), CartanContext::sp(2)] {
                let words = all_words(ctx, &vec![StepKind::Vector; r]).unwrap();
                for rel in Relation::all(r) {
                    let ok = crate::cactus::relation_check(rel, r, &HwAction, &words)
                        .unwrap()
                        .unwrap();
                    assert!(ok, "{ctx} {rel:?}");
                }
            }
        }
    }

    #[test]
    fn tau_equals_cactus_image() {
        use crate::cactus::{tau_to_s, TauGen};
        for r in 2..=6 {
            for w in all_words(CartanContext::gl(3), &vec![StepKind::Vector; r]).unwrap() {
                for i in 1..r {
                    let g = tau_to_s(TauGen { i }, r).unwrap();
                    assert_eq!(act(&g, &w).unwrap(), w.tau(i).unwrap());
                }
            }
        }
    }

    #[test]
    fn gl_cylinder_grid() {
        let gl2 = CartanContext::gl(2);
        let w = word(gl2, "∅,1,2,21,22");
        let win = CylWindow::from_top(&w, 0, 2);
        let rows: Vec<String> = (0..=2).map(|i| win.row(i).unwrap().unwrap().to_string()).collect();
        assert_eq!(rows, vec!["∅,1,2,21,22", "∅,1,11,21,22", "∅,1,2,21,22"]);
        let text = win.render_ascii();
        assert_eq!(text.lines().next().unwrap(), "∅     [1]   [2]   [2,1] [2,2]");
    }

    #[test]
    fn cylinder_from_paths() {
        let sp = CartanContext::sp(2);
        let x = word(sp, "∅,1,2,21,11,1,∅");
        let win = CylWindow::from_top(&x, 0, 8);
        // horizontal path on row 0 gives back the window
        let from_row = cylinder_from_path(&CylPath::row(0, 6), &x, 8).unwrap();
        assert_eq!(from_row, win);
        // a staircase path starting at (4,4)
        assert!(matches!(CylPath::parse(4, "RXR"), Err(GrowthError::BadPath(_))));
        let path = CylPath::parse(3, "RRURUU").unwrap();
        let labels = HighestWeightWord::from_corners(sp, win.restrict(&path).unwrap()).unwrap();
        let rebuilt = cylinder_from_path(&path, &labels, 8).unwrap();
        assert_eq!(rebuilt.first(), 0);
        assert_eq!(rebuilt, win);
        // the column path: reading up column 6 from (6,6)
        let col = CylPath::column(6, 6);
        let labels = HighestWeightWord::from_corners(sp, win.restrict(&col).unwrap()).unwrap();
        assert_eq!(labels, evacuation(&x).unwrap());
        assert_eq!(cylinder_from_path(&col, &labels, 8).unwrap().top(), x);
        // wrong length
        assert!(cylinder_from_path(&CylPath::row(0, 5), &x, 2).is_err());
    }

    #[test]
    fn cylinder_paths_exhaustive() {
        for w in suites(4) {
            let r = w.len();
            let win = CylWindow::from_top(&w, 0, 2 * r);
            for mask in 0u32..(1 << r) {
                let moves: Vec<Move> = (0..r)
                    .map(|k| if mask >> k & 1 == 1 { Move::Up } else { Move::Right })
                    .collect();
                let ups = moves.iter().filter(|m| **m == Move::Up).count() as i64;
                let path = CylPath { start: ups, moves };
                let labels = HighestWeightWord::from_corners(w.context(), win.restrict(&path).unwrap()).unwrap();
                let rebuilt = cylinder_from_path(&path, &labels, 0).unwrap();
                assert_eq!(rebuilt.top(), w);
            }
        }
    }

    #[test]
    fn wall_cross_matches_action() {
        for r in 2..=5 {
            for w in gl2_words(r) {
                let win = CylWindow::from_top(&w, 0, r);
                for g in CactusGen::all(r) {
                    let out = wall_cross(g, &win).unwrap();
                    let expect = act(&CactusWord::generator(g, r).unwrap(), &w).unwrap();
                    assert_eq!(out.top(), expect, "{g} on {w}");
                    let v = wall_cross_violations(g, &CylWindow::from_top(&w, 0, r + 1), &out);
                    assert!(v.is_empty(), "{g} {w} {v:?}");
                    assert!(out.violations().is_empty());
                }
            }
        }
    }

    #[test]
    fn rectify_matches_crystal() {
        use crate::crystal::{build_minuscule, Minuscule};
        let gl2 = CartanContext::gl(2);
        let c = build_minuscule(gl2, Minuscule::Vector).unwrap();
        for r in 1..=4 {
            let full = c.tensor_power(r, 1 << 12).unwrap();
            // u = 1^r is highest weight with φ_1(u) = r, so u ⊗ x is highest weight
            let u = HighestWeightWord::from_corners(
                gl2,
                (0..=r as i64).map(|k| Weight::new(gl2, vec![k, 0]).unwrap()).collect(),
            )
            .unwrap();
            for x in full.elements() {
                let mut acc = u.shape().clone();
                let mut corners = vec![acc.clone()];
                for f in full.factor_ids(x) {
                    acc = &acc + c.weight(f);
                    corners.push(acc.clone());
                }
                let top = WeightPath::from_corners(gl2, corners).unwrap();
                let (rect, _) = rectify_by_growth(&u, &top).unwrap();
                let hw = full.rectify(x);
                let mut acc = gl2.zero();
                let mut expect = vec![acc.clone()];
                for f in full.factor_ids(hw) {
                    acc = &acc + c.weight(f);
                    expect.push(acc.clone());
                }
                assert_eq!(rect.corners(), &expect[..], "{}", full.label(x));
            }
        }
    }
}
