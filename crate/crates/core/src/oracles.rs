//! Classical tableau algorithms used as ground truth: jeu de taquin
//! promotion and evacuation, dual Knuth moves, Bender-Knuth involutions,
//! Gelfand-Tsetlin patterns and SL(2) noncrossing matchings.
//!
//! Nothing here touches local rules; the only dependency is `weights`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weights::{strip_check, CartanContext, Partition, StripKind, Weight, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("not a standard tableau: {0}")]
    NotStandard(String),
    #[error("not a semistandard tableau: {0}")]
    NotSemistandard(String),
    #[error("index {i} out of range 1..={max}")]
    BadIndex { i: usize, max: usize },
    #[error("step {step} of the pattern is not a {kind:?} strip")]
    StripViolation { step: usize, kind: StripKind },
    #[error("bad matching: {0}")]
    BadMatching(String),
    #[error("cannot parse tableau {0:?}")]
    Parse(String),
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>, OracleError> {
    let err = || OracleError::Parse(s.to_string());
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    let separated = s.contains(',') || s.contains(' ');
    s.split('/')
        .map(|row| {
            let row = row.trim();
            if separated {
                row.split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| err()))
                    .collect()
            } else {
                row.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err))
                    .collect()
            }
        })
        .collect()
}

fn fmt_rows(rows: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let wide = rows.iter().flatten().any(|&v| v > 9);
    let mut first = true;
    for row in rows {
        if !first {
            f.write_str("/")?;
        }
        first = false;
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        f.write_str(&cells.join(if wide { "," } else { "" }))?;
    }
    if rows.is_empty() {
        f.write_str("∅")?;
    }
    Ok(())
}

fn shape_of(rows: &[Vec<usize>]) -> Result<Partition, OracleError> {
    Ok(Partition::new(rows.iter().map(|r| r.len() as u32).collect())?)
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(acc.clone()).expect("weakly decreasing"));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            acc.push(k);
            go(n - k, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau in English notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, OracleError> {
        let bad = |m: &str| OracleError::NotStandard(m.to_string());
        shape_of(&rows).map_err(|_| bad("rows must weakly decrease in length"))?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (a, row) in rows.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(bad("entries must be 1..n, each once"));
                }
                seen[v] = true;
                if b > 0 && row[b - 1] >= v {
                    return Err(bad("rows must increase"));
                }
                if a > 0 && rows[a - 1][b] >= v {
                    return Err(bad("columns must increase"));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows).expect("validated")
    }

    /// Row index of each entry; `rows_of()[k - 1]` is the row of `k`.
    pub fn rows_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (a, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = a;
            }
        }
        out
    }

    /// Shapes of the subtableaux of entries `≤ k`, `k = 0..=n`.
    pub fn shape_sequence(&self) -> Vec<Partition> {
        let mut counts: Vec<u32> = Vec::new();
        let mut out = vec![Partition::empty()];
        for a in self.rows_of() {
            if counts.len() <= a {
                counts.resize(a + 1, 0);
            }
            counts[a] += 1;
            out.push(Partition::new(counts.clone()).expect("standard tableaux grow by corners"));
        }
        out
    }

    pub fn from_shape_sequence(seq: &[Partition]) -> Result<Self, OracleError> {
        let bad = || OracleError::NotStandard("each step must add one box".into());
        if seq.first().is_none_or(|p| !p.is_empty()) {
            return Err(bad());
        }
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (k, pair) in seq.windows(2).enumerate() {
            let (a, b) = (&pair[0], &pair[1]);
            if b.size() != a.size() + 1 || !b.contains(a) {
                return Err(bad());
            }
            let row = (0..b.len()).find(|&i| b.part(i) != a.part(i)).ok_or_else(bad)?;
            if rows.len() <= row {
                rows.push(Vec::new());
            }
            rows[row].push(k + 1);
        }
        Self::new(rows)
    }

    pub fn all_of_shape(shape: &Partition) -> Vec<Self> {
        fn go(shape: &[u32], rows: &mut Vec<Vec<usize>>, k: usize, n: usize, out: &mut Vec<StandardTableau>) {
            if k > n {
                out.push(StandardTableau { rows: rows.clone() });
                return;
            }
            for a in 0..shape.len() {
                let len = rows[a].len();
                let fits = (len as u32) < shape[a] && (a == 0 || rows[a - 1].len() > len);
                if fits {
                    rows[a].push(k);
                    go(shape, rows, k + 1, n, out);
                    rows[a].pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); shape.len()];
        go(shape.parts(), &mut rows, 1, shape.size() as usize, &mut out);
        out
    }

    /// Every standard tableau with `n` boxes.
    pub fn all_of_size(n: u32) -> Vec<Self> {
        partitions_of(n).iter().flat_map(Self::all_of_shape).collect()
    }

    /// Reading word: rows bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        Self {
            rows: self.rows.iter().map(|r| r.iter().map(|&v| f(v)).collect()).collect(),
        }
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = OracleError;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, OracleError> {
        Self::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl FromStr for StandardTableau {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, OracleError> {
        Self::new(parse_rows(s)?)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(&self.rows, f)
    }
}

/// Corner weights of the highest weight word of `t` in `GL(n)`.
pub fn syt_to_corners(t: &StandardTableau, ctx: CartanContext) -> Result<Vec<Weight>, OracleError> {
    t.shape_sequence()
        .iter()
        .map(|p| p.to_weight(ctx).map_err(OracleError::from))
        .collect()
}

pub fn syt_from_corners(corners: &[Weight]) -> Result<StandardTableau, OracleError> {
    let seq = corners
        .iter()
        .map(Weight::to_partition)
        .collect::<Result<Vec<_>, _>>()?;
    StandardTableau::from_shape_sequence(&seq)
}

/// Remove the cell at `(0, 0)` and slide the hole outward, each time
/// pulling in the smaller of the right and lower neighbours. Returns the
/// cell that ends up vacated (already removed from `rows`).
fn slide_out(rows: &mut Vec<Vec<usize>>) -> (usize, usize) {
    let (mut a, mut b) = (0, 0);
    loop {
        let right = rows[a].get(b + 1).copied();
        let below = rows.get(a + 1).and_then(|r| r.get(b)).copied();
        match (right, below) {
            (None, None) => break,
            (Some(x), Some(y)) if y < x => {
                rows[a][b] = y;
                a += 1;
            }
            (Some(x), _) => {
                rows[a][b] = x;
                b += 1;
            }
            (None, Some(y)) => {
                rows[a][b] = y;
                a += 1;
            }
        }
    }
    rows[a].pop();
    if rows[a].is_empty() {
        rows.pop();
    }
    (a, b)
}

/// Schützenberger evacuation: delete the smallest entry, slide, and record
/// the vacated cell with the next largest label.
pub fn evacuation_oracle(t: &StandardTableau) -> StandardTableau {
    let n = t.size();
    let mut work = t.rows.clone();
    let mut out: Vec<Vec<usize>> = t.rows.iter().map(|r| vec![0; r.len()]).collect();
    for k in 0..n {
        let (a, b) = slide_out(&mut work);
        out[a][b] = n - k;
    }
    StandardTableau { rows: out }
}

/// Jeu de taquin promotion: delete 1, slide the hole out to a corner,
/// subtract 1 from every entry and put `n` in the vacated cell.
pub fn promotion_oracle(t: &StandardTableau) -> StandardTableau {
    let n = t.size();
    if n == 0 {
        return t.clone();
    }
    let mut work = t.rows.clone();
    let (a, _) = slide_out(&mut work);
    let mut out = StandardTableau { rows: work }.relabel(|v| v - 1).rows;
    if out.len() <= a {
        out.push(Vec::new());
    }
    out[a].push(n);
    StandardTableau { rows: out }
}

/// The dual Knuth move `D_i` on the letters `i, i+1, i+2`.
pub fn dual_knuth(t: &StandardTableau, i: usize) -> Result<StandardTableau, OracleError> {
    let n = t.size();
    if i == 0 || i + 2 > n {
        return Err(OracleError::BadIndex {
            i,
            max: n.saturating_sub(2),
        });
    }
    let word = t.reading_word();
    let pos = |v: usize| word.iter().position(|&x| x == v).expect("entry present");
    let (p0, p1, p2) = (pos(i), pos(i + 1), pos(i + 2));
    let between = |x: usize, a: usize, b: usize| (a < x && x < b) || (b < x && x < a);
    let swap = if between(p2, p0, p1) {
        Some((i, i + 1))
    } else if between(p0, p1, p2) {
        Some((i + 1, i + 2))
    } else {
        None
    };
    Ok(match swap {
        Some((x, y)) => t.relabel(|v| {
            if v == x {
                y
            } else if v == y {
                x
            } else {
                v
            }
        }),
        None => t.clone(),
    })
}

/// Weak rows, strict columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
}

/// Strict rows, weak columns (the transpose of a semistandard tableau).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct DualSemistandardTableau {
    rows: Vec<Vec<usize>>,
}

fn check_rows(rows: &[Vec<usize>], strict_rows: bool) -> Result<(), OracleError> {
    let bad = |m: &str| OracleError::NotSemistandard(m.to_string());
    shape_of(rows).map_err(|_| bad("rows must weakly decrease in length"))?;
    for (a, row) in rows.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            if v == 0 {
                return Err(bad("entries start at 1"));
            }
            if b > 0 && (row[b - 1] > v || (strict_rows && row[b - 1] == v)) {
                return Err(bad("row order"));
            }
            if a > 0 {
                let up = rows[a - 1][b];
                if up > v || (!strict_rows && up == v) {
                    return Err(bad("column order"));
                }
            }
        }
    }
    Ok(())
}

fn transpose(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|b| rows.iter().take_while(|r| r.len() > b).map(|r| r[b]).collect())
        .collect()
}

/// Shapes of entries `≤ k` for `k = 0..=m`, checked against `kind`.
fn pattern(rows: &[Vec<usize>], m: usize) -> Vec<Partition> {
    (0..=m)
        .map(|k| {
            let parts = rows
                .iter()
                .map(|r| r.iter().filter(|&&v| v <= k).count() as u32)
                .collect();
            Partition::new(parts).expect("subtableau shapes are partitions")
        })
        .collect()
}

fn from_pattern(seq: &[Partition], kind: StripKind) -> Result<Vec<Vec<usize>>, OracleError> {
    if seq.first().is_none_or(|p| !p.is_empty()) {
        return Err(OracleError::StripViolation { step: 0, kind });
    }
    let last = seq.last().expect("nonempty");
    let mut rows: Vec<Vec<usize>> = (0..last.len()).map(|_| Vec::new()).collect();
    for (k, pair) in seq.windows(2).enumerate() {
        if !strip_check(&pair[0], &pair[1], kind) {
            return Err(OracleError::StripViolation { step: k + 1, kind });
        }
        for (a, row) in rows.iter_mut().enumerate() {
            for _ in pair[0].part(a)..pair[1].part(a) {
                row.push(k + 1);
            }
        }
    }
    Ok(rows)
}

macro_rules! tableau_common {
    ($t:ident, $strict:expr, $kind:expr) => {
        impl $t {
            pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, OracleError> {
                check_rows(&rows, $strict)?;
                Ok(Self { rows })
            }

            pub fn rows(&self) -> &[Vec<usize>] {
                &self.rows
            }

            pub fn shape(&self) -> Partition {
                shape_of(&self.rows).expect("validated")
            }

            pub fn max_entry(&self) -> usize {
                self.rows.iter().flatten().copied().max().unwrap_or(0)
            }

            /// Gelfand-Tsetlin pattern `λ^(0) ⊆ … ⊆ λ^(m)`.
            pub fn gt_pattern(&self, m: usize) -> Vec<Partition> {
                pattern(&self.rows, m)
            }

            pub fn from_gt_pattern(seq: &[Partition]) -> Result<Self, OracleError> {
                Self::new(from_pattern(seq, $kind)?)
            }
        }

        impl TryFrom<Vec<Vec<usize>>> for $t {
            type Error = OracleError;
            fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, OracleError> {
                Self::new(rows)
            }
        }

        impl From<$t> for Vec<Vec<usize>> {
            fn from(t: $t) -> Self {
                t.rows
            }
        }

        impl FromStr for $t {
            type Err = OracleError;
            fn from_str(s: &str) -> Result<Self, OracleError> {
                Self::new(parse_rows(s)?)
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_rows(&self.rows, f)
            }
        }
    };
}

tableau_common!(SemistandardTableau, false, StripKind::Horizontal);
tableau_common!(DualSemistandardTableau, true, StripKind::Vertical);

impl SemistandardTableau {
    pub fn transpose(&self) -> DualSemistandardTableau {
        DualSemistandardTableau {
            rows: transpose(&self.rows),
        }
    }

    /// All semistandard tableaux of the given shape with entries `≤ m`.
    pub fn all_of_shape(shape: &Partition, m: usize) -> Vec<Self> {
        let cells: Vec<(usize, usize)> = (0..shape.len())
            .flat_map(|a| (0..shape.part(a) as usize).map(move |b| (a, b)))
            .collect();
        let mut rows: Vec<Vec<usize>> = (0..shape.len()).map(|a| vec![0; shape.part(a) as usize]).collect();
        let mut out = Vec::new();
        fn go(
            k: usize,
            cells: &[(usize, usize)],
            m: usize,
            rows: &mut Vec<Vec<usize>>,
            out: &mut Vec<SemistandardTableau>,
        ) {
            let Some(&(a, b)) = cells.get(k) else {
                out.push(SemistandardTableau { rows: rows.clone() });
                return;
            };
            let lo_row = if b > 0 { rows[a][b - 1] } else { 1 };
            let lo_col = if a > 0 { rows[a - 1][b] + 1 } else { 1 };
            for v in lo_row.max(lo_col)..=m {
                rows[a][b] = v;
                go(k + 1, cells, m, rows, out);
            }
            rows[a][b] = 0;
        }
        go(0, &cells, m, &mut rows, &mut out);
        out
    }
}

impl DualSemistandardTableau {
    pub fn transpose(&self) -> SemistandardTableau {
        SemistandardTableau {
            rows: transpose(&self.rows),
        }
    }
}

/// Bender-Knuth involution `b_i`: in each row the free `i`s and `i+1`s
/// (those not stacked on one another) exchange multiplicities.
pub fn bender_knuth(t: &SemistandardTableau, i: usize) -> Result<SemistandardTableau, OracleError> {
    if i == 0 {
        return Err(OracleError::BadIndex { i, max: usize::MAX });
    }
    let rows = &t.rows;
    let mut out = rows.clone();
    for (a, row) in rows.iter().enumerate() {
        let free = |b: usize| match row[b] {
            v if v == i => rows.get(a + 1).and_then(|r| r.get(b)) != Some(&(i + 1)),
            v if v == i + 1 => a == 0 || rows[a - 1][b] != i,
            _ => false,
        };
        let idx: Vec<usize> = (0..row.len()).filter(|&b| free(b)).collect();
        let n_i = idx.iter().filter(|&&b| row[b] == i).count();
        let n_j = idx.len() - n_i;
        for (k, &b) in idx.iter().enumerate() {
            out[a][b] = if k < n_j { i } else { i + 1 };
        }
    }
    SemistandardTableau::new(out)
}

/// A perfect matching on `1..=r`, stored as sorted pairs `(i, j)`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    r: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(r: usize, pairs: Vec<(usize, usize)>) -> Result<Self, OracleError> {
        let m = Self::from_pairs(r, pairs)?;
        if !m.is_noncrossing() {
            return Err(OracleError::BadMatching("pairs cross".into()));
        }
        Ok(m)
    }

    fn from_pairs(r: usize, pairs: Vec<(usize, usize)>) -> Result<Self, OracleError> {
        let mut seen = vec![false; r + 1];
        let mut norm = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            let (i, j) = (x.min(y), x.max(y));
            if i == 0 || j > r || i == j || seen[i] || seen[j] {
                return Err(OracleError::BadMatching(format!("bad pair ({x},{y})")));
            }
            seen[i] = true;
            seen[j] = true;
            norm.push((i, j));
        }
        if 2 * norm.len() != r {
            return Err(OracleError::BadMatching("not perfect".into()));
        }
        norm.sort_unstable();
        Ok(Self { r, pairs: norm })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_noncrossing(&self) -> bool {
        self.pairs
            .iter()
            .all(|&(i, j)| self.pairs.iter().all(|&(k, l)| !(i < k && k < j && j < l)))
    }

    fn openers(&self) -> Vec<bool> {
        let mut op = vec![false; self.r + 1];
        for &(i, _) in &self.pairs {
            op[i] = true;
        }
        op
    }

    /// The noncrossing matching with the given opener set.
    fn from_openers(r: usize, op: &[bool]) -> Result<Self, OracleError> {
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        for k in 1..=r {
            if op[k] {
                stack.push(k);
            } else {
                let i = stack
                    .pop()
                    .ok_or_else(|| OracleError::BadMatching("unbalanced".into()))?;
                pairs.push((i, k));
            }
        }
        if !stack.is_empty() {
            return Err(OracleError::BadMatching("unbalanced".into()));
        }
        Self::new(r, pairs)
    }

    pub fn all(r: usize) -> Vec<Self> {
        if r % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for mask in 0u64..(1 << r) {
            let op: Vec<bool> = std::iter::once(false)
                .chain((0..r).map(|k| mask >> k & 1 == 1))
                .collect();
            if let Ok(m) = Self::from_openers(r, &op) {
                out.push(m);
            }
        }
        out.sort();
        out
    }

    /// Two-row standard tableau whose first row holds the openers.
    pub fn to_tableau(&self) -> StandardTableau {
        let op = self.openers();
        let first = (1..=self.r).filter(|&k| op[k]).collect();
        let second = (1..=self.r).filter(|&k| !op[k]).collect();
        let rows = [first, second]
            .into_iter()
            .filter(|r: &Vec<usize>| !r.is_empty())
            .collect();
        StandardTableau::new(rows).expect("balanced openers give a standard tableau")
    }

    pub fn from_tableau(t: &StandardTableau) -> Result<Self, OracleError> {
        let rows = t.rows();
        if rows.len() > 2 || (rows.len() == 2 && rows[0].len() != rows[1].len()) {
            return Err(OracleError::BadMatching(format!("shape {} is not (k,k)", t.shape())));
        }
        let mut op = vec![false; t.size() + 1];
        for &v in rows.first().into_iter().flatten() {
            op[v] = true;
        }
        Self::from_openers(t.size(), &op)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
        f.write_str(&parts.join(""))
    }
}

/// `s_{1,p}` on matchings: reflect the pairs inside `1..=p`, move the inner
/// end of a straddling pair, and fix the rest. The resulting opener set is
/// then re-paired by bracket matching, since with several straddling pairs
/// the moved ends come out crossed.
pub fn matching_action(p: usize, m: &Matching) -> Result<Matching, OracleError> {
    if p < 2 || p > m.r {
        return Err(OracleError::BadIndex { i: p, max: m.r });
    }
    let raw: Vec<(usize, usize)> = m
        .pairs
        .iter()
        .map(|&(i, j)| {
            if j <= p {
                (p - j + 1, p - i + 1)
            } else if i <= p {
                (p - i + 1, j)
            } else {
                (i, j)
            }
        })
        .collect();
    let image = Matching::from_pairs(m.r, raw)?;
    Matching::from_openers(m.r, &image.openers())
}

/// `s_{p,q} = s_{1,q} s_{1,q−p+1} s_{1,q}` on matchings.
pub fn matching_action_pq(p: usize, q: usize, m: &Matching) -> Result<Matching, OracleError> {
    if p == 0 || p >= q || q > m.r {
        return Err(OracleError::BadIndex { i: p, max: q });
    }
    if p == 1 {
        return matching_action(q, m);
    }
    let m = matching_action(q, m)?;
    let m = matching_action(q - p + 1, &m)?;
    matching_action(q, &m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn ssyt(s: &str) -> SemistandardTableau {
        s.parse().unwrap()
    }

    fn parts(v: &[&[u32]]) -> Vec<Partition> {
        v.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect()
    }

    #[test]
    fn validation_and_parsing() {
        assert!("12/3".parse::<StandardTableau>().is_ok());
        assert!("13/2".parse::<StandardTableau>().is_ok());
        assert!("21/3".parse::<StandardTableau>().is_err());
        assert!("1/23".parse::<StandardTableau>().is_err());
        assert!("12/4".parse::<StandardTableau>().is_err());
        let t = syt("1,2,3,4,5,6,7,8,9,10/11");
        assert_eq!(t.to_string(), "1,2,3,4,5,6,7,8,9,10/11");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<StandardTableau>(&json).unwrap(), t);
        assert!(serde_json::from_str::<StandardTableau>("[[2,1]]").is_err());
        assert!("1112/23/4".parse::<SemistandardTableau>().is_ok());
        assert!("11/1".parse::<SemistandardTableau>().is_err());
        assert!("12/12".parse::<DualSemistandardTableau>().is_ok());
        assert!("11".parse::<DualSemistandardTableau>().is_err());
    }

    #[test]
    fn corners_and_counts() {
        let gl3 = CartanContext::gl(3);
        let c = syt_to_corners(&syt("12/3"), gl3).unwrap();
        let coords: Vec<Vec<i64>> = c.iter().map(|w| w.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 0, 0], vec![2, 1, 0]]);
        let shape33 = Partition::new(vec![3, 3]).unwrap();
        assert_eq!(StandardTableau::all_of_shape(&shape33).len(), 5);
        let counts: Vec<usize> = (0..=8).map(|n| StandardTableau::all_of_size(n).len()).collect();
        // number of involutions
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
        for n in 0..=8 {
            for t in StandardTableau::all_of_size(n) {
                let ctx = CartanContext::gl(t.shape().len().max(1));
                assert_eq!(syt_from_corners(&syt_to_corners(&t, ctx).unwrap()).unwrap(), t);
            }
        }
    }

    #[test]
    fn evacuation_classical() {
        assert_eq!(evacuation_oracle(&syt("134/256")), syt("125/346"));
        assert_eq!(evacuation_oracle(&syt("12345")), syt("12345"));
        for n in 0..=8 {
            for t in StandardTableau::all_of_size(n) {
                let e = evacuation_oracle(&t);
                assert_eq!(e.shape(), t.shape());
                assert_eq!(evacuation_oracle(&e), t);
            }
        }
    }

    #[test]
    fn promotion_classical() {
        assert_eq!(promotion_oracle(&syt("1/2/3")), syt("1/2/3"));
        assert_eq!(promotion_oracle(&syt("12/34")), syt("13/24"));
        // order n on rectangles
        for t in StandardTableau::all_of_shape(&Partition::new(vec![3, 2, 1]).unwrap()) {
            let mut u = t.clone();
            for _ in 0..6 {
                u = promotion_oracle(&u);
            }
            assert_eq!(StandardTableau::new(u.rows.clone()).unwrap().shape(), t.shape());
        }
        for t in StandardTableau::all_of_shape(&Partition::new(vec![3, 3]).unwrap()) {
            let mut u = t.clone();
            for _ in 0..6 {
                u = promotion_oracle(&u);
            }
            assert_eq!(u, t);
        }
    }

    #[test]
    fn dual_knuth_moves() {
        assert_eq!(dual_knuth(&syt("12/34"), 1).unwrap(), syt("13/24"));
        assert_eq!(dual_knuth(&syt("123/456"), 2).unwrap(), syt("124/356"));
        assert!(dual_knuth(&syt("12/3"), 2).is_err());
        for n in 3..=7 {
            for t in StandardTableau::all_of_size(n) {
                for i in 1..=(n as usize - 2) {
                    let d = dual_knuth(&t, i).unwrap();
                    assert!(StandardTableau::new(d.rows.clone()).is_ok());
                    assert_eq!(dual_knuth(&d, i).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn gelfand_tsetlin() {
        let t = ssyt("1112/23/4");
        let gt = t.gt_pattern(5);
        assert_eq!(gt, parts(&[&[], &[3], &[4, 1], &[4, 2], &[4, 2, 1], &[4, 2, 1]]));
        assert_eq!(SemistandardTableau::from_gt_pattern(&gt).unwrap(), t);
        let conj: Vec<Partition> = gt.iter().map(Partition::conjugate).collect();
        assert_eq!(
            conj,
            parts(&[
                &[],
                &[1, 1, 1],
                &[2, 1, 1, 1],
                &[2, 2, 1, 1],
                &[3, 2, 1, 1],
                &[3, 2, 1, 1]
            ])
        );
        let dual = t.transpose();
        assert_eq!(dual.gt_pattern(5), conj);
        assert_eq!(DualSemistandardTableau::from_gt_pattern(&conj).unwrap(), dual);
        assert!(matches!(
            SemistandardTableau::from_gt_pattern(&conj),
            Err(OracleError::StripViolation { step: 1, .. })
        ));
        assert!(matches!(
            DualSemistandardTableau::from_gt_pattern(&gt),
            Err(OracleError::StripViolation { step: 1, .. })
        ));
    }

    #[test]
    fn bender_knuth_classical() {
        assert_eq!(bender_knuth(&ssyt("1112/23/4"), 2).unwrap(), ssyt("1113/23/4"));
        let shapes = [vec![4, 2, 1], vec![3, 3], vec![2, 2, 2], vec![5]];
        for sh in shapes {
            let sh = Partition::new(sh).unwrap();
            for t in SemistandardTableau::all_of_shape(&sh, 5) {
                for i in 1..5 {
                    let b = bender_knuth(&t, i).unwrap();
                    assert_eq!(bender_knuth(&b, i).unwrap(), t);
                    for j in 1..5 {
                        if i.abs_diff(j) > 1 {
                            let x = bender_knuth(&bender_knuth(&t, i).unwrap(), j).unwrap();
                            let y = bender_knuth(&bender_knuth(&t, j).unwrap(), i).unwrap();
                            assert_eq!(x, y);
                        }
                    }
                    // exchanges the multiplicities of i and i+1
                    let count =
                        |t: &SemistandardTableau, v: usize| t.rows().iter().flatten().filter(|&&x| x == v).count();
                    assert_eq!(count(&b, i), count(&t, i + 1));
                }
            }
        }
    }

    #[test]
    fn matchings() {
        let counts: Vec<usize> = (0..=10).step_by(2).map(|r| Matching::all(r).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        let m = Matching::new(6, vec![(1, 2), (3, 4), (5, 6)]).unwrap();
        assert_eq!(matching_action(6, &m).unwrap(), m);
        let nested = Matching::new(6, vec![(1, 6), (2, 5), (3, 4)]).unwrap();
        assert_eq!(matching_action(6, &nested).unwrap(), nested);
        assert!(Matching::new(4, vec![(1, 3), (2, 4)]).is_err());
        for r in (2..=8).step_by(2) {
            for m in Matching::all(r) {
                assert_eq!(Matching::from_tableau(&m.to_tableau()).unwrap(), m);
                for p in 2..=r {
                    let a = matching_action(p, &m).unwrap();
                    assert!(a.is_noncrossing());
                    assert_eq!(matching_action(p, &a).unwrap(), m);
                }
            }
        }
    }
}
