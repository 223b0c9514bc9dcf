//! Seminormal representations of the Hecke algebra `H_r(q)` over `Q(q)`.
//!
//! The basis of the irreducible module for a shape is its set of standard
//! tableaux, ordered lexicographically by row reading. Matrices act on
//! column vectors: column `T` holds the coordinates of the image of `T`.
//!
//! With `a = c_T(i+1) − c_T(i)` and `S = s_i T`:
//!
//! * `u_i T = −[a−1]/[a] T + S` when `a > 0`,
//! * `u_i T = −[a−1]/[a] T + [a−1][a+1]/[a]² S` when `a < 0`,
//! * `t_i = q + u_i`, `t_i^{-1} = q^{-1} + u_i`,
//! * `τ_i` has the same off-diagonal entries and diagonal `1/[a]`.
//!
//! For `a = ±1` the tableau `S` is not standard and only the diagonal term
//! survives: `u_i = 0, τ_i = 1` on a row and `u_i = −[2], τ_i = −1` on a
//! column.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{q_int, AlgebraError, QMatrix, RationalFunction};
use crate::cactus::{s_to_tau, CactusError, CactusGen, CactusWord, Relation, TauGen};
use crate::oracles::{OracleError, StandardTableau};
use crate::weights::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Cactus(#[from] CactusError),
    #[error("index {i} out of range for r = {r}")]
    IndexOutOfRange { i: usize, r: usize },
    #[error("cactus word on {word} strands, representation has r = {rep}")]
    StrandMismatch { word: usize, rep: usize },
}

/// Content vector of a standard tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContentData {
    pub tableau: StandardTableau,
    pub contents: Vec<i64>,
}

impl ContentData {
    pub fn new(t: &StandardTableau) -> Self {
        let mut contents = vec![0; t.size()];
        for (i, row) in t.rows().iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                contents[v - 1] = j as i64 - i as i64;
            }
        }
        Self {
            tableau: t.clone(),
            contents,
        }
    }

    /// `c_T(k)`, 1-based.
    pub fn content(&self, k: usize) -> i64 {
        self.contents[k - 1]
    }

    /// `a_T(i) = c_T(i+1) − c_T(i)`.
    pub fn axial(&self, i: usize) -> i64 {
        self.content(i + 1) - self.content(i)
    }

    /// Recover the tableau: the `n`-th entry on diagonal `c` sits `n` steps
    /// down that diagonal.
    pub fn tableau_from_contents(contents: &[i64]) -> Result<StandardTableau, OracleError> {
        let mut seen: HashMap<i64, usize> = HashMap::new();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (k, &c) in contents.iter().enumerate() {
            let n = seen.entry(c).or_insert(0);
            let (i, j) = if c >= 0 {
                (*n, c as usize + *n)
            } else {
                ((-c) as usize + *n, *n)
            };
            *n += 1;
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            if rows[i].len() != j {
                return Err(OracleError::NotStandard(format!("content vector {contents:?}")));
            }
            rows[i].push(k + 1);
        }
        StandardTableau::new(rows)
    }
}

fn qi(n: i64) -> RationalFunction {
    q_int(n).into()
}

fn ratio(num: RationalFunction, den: RationalFunction) -> RationalFunction {
    num.checked_div(&den)
        .expect("quantum integers with nonzero argument are nonzero")
}

/// `[a−1][a+1] / [a]²`.
fn off_diagonal(a: i64) -> RationalFunction {
    ratio(qi(a - 1) * qi(a + 1), qi(a) * qi(a))
}

/// A seminormal representation together with its content data.
#[derive(Debug, Clone)]
pub struct SeminormalRep {
    shape: Partition,
    basis: Vec<StandardTableau>,
    contents: Vec<ContentData>,
    index: HashMap<StandardTableau, usize>,
}

/// Powers of Jucys-Murphy elements that have exact diagonal matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum JmPower {
    Inverse,
    InverseSqrt,
    Sqrt,
    One,
}

impl JmPower {
    /// Exponent in units of one half.
    fn halves(self) -> i64 {
        match self {
            JmPower::Inverse => -2,
            JmPower::InverseSqrt => -1,
            JmPower::Sqrt => 1,
            JmPower::One => 2,
        }
    }
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> Self {
        let mut basis = StandardTableau::all_of_shape(shape);
        basis.sort_by_key(|t| t.rows().concat());
        let contents = basis.iter().map(ContentData::new).collect();
        let index = basis.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        Self {
            shape: shape.clone(),
            basis,
            contents,
            index,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn r(&self) -> usize {
        self.shape.size() as usize
    }

    pub fn content_data(&self) -> &[ContentData] {
        &self.contents
    }

    fn check_index(&self, i: usize) -> Result<(), HeckeError> {
        if i == 0 || i >= self.r() {
            return Err(HeckeError::IndexOutOfRange { i, r: self.r() });
        }
        Ok(())
    }

    /// Index of `s_i T` when it is standard.
    fn swapped(&self, k: usize, i: usize) -> Option<usize> {
        let rows = self.basis[k]
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        if v == i {
                            i + 1
                        } else if v == i + 1 {
                            i
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        StandardTableau::new(rows)
            .ok()
            .and_then(|t| self.index.get(&t).copied())
    }

    /// Matrix with diagonal `diag(a)` and the seminormal off-diagonal part.
    fn seminormal(&self, i: usize, diag: impl Fn(i64) -> RationalFunction) -> Result<QMatrix, HeckeError> {
        self.check_index(i)?;
        let mut m = QMatrix::zero(self.dim(), self.dim());
        for k in 0..self.dim() {
            let a = self.contents[k].axial(i);
            m.set(k, k, diag(a));
            if let Some(s) = self.swapped(k, i) {
                let coeff = if a > 0 {
                    RationalFunction::one()
                } else {
                    off_diagonal(a)
                };
                m.set(s, k, coeff);
            }
        }
        Ok(m)
    }

    pub fn u_matrix(&self, i: usize) -> Result<QMatrix, HeckeError> {
        self.seminormal(i, |a| -ratio(qi(a - 1), qi(a)))
    }

    pub fn t_matrix(&self, i: usize) -> Result<QMatrix, HeckeError> {
        let u = self.u_matrix(i)?;
        Ok(u.add(&QMatrix::identity(self.dim()).scale(&RationalFunction::q_pow(1)))?)
    }

    pub fn t_inv_matrix(&self, i: usize) -> Result<QMatrix, HeckeError> {
        let u = self.u_matrix(i)?;
        Ok(u.add(&QMatrix::identity(self.dim()).scale(&RationalFunction::q_pow(-1)))?)
    }

    pub fn tau_matrix(&self, i: usize) -> Result<QMatrix, HeckeError> {
        self.seminormal(i, |a| ratio(RationalFunction::one(), qi(a)))
    }

    /// `J_i^p` from the spectrum: `J_i T = q^{2 c_T(i+1)} T`, `J_0 = 1`.
    pub fn jm_matrix(&self, i: usize, power: JmPower) -> Result<QMatrix, HeckeError> {
        if i >= self.r() {
            return Err(HeckeError::IndexOutOfRange { i, r: self.r() });
        }
        Ok(QMatrix::diagonal(self.contents.iter().map(|c| {
            RationalFunction::q_pow((power.halves() * c.content(i + 1)) as i32)
        })))
    }

    /// `J_i = (t_i ⋯ t_1)(t_1 ⋯ t_i)` as a product of generator matrices.
    pub fn jm_word(&self, i: usize) -> Result<QMatrix, HeckeError> {
        if i >= self.r() {
            return Err(HeckeError::IndexOutOfRange { i, r: self.r() });
        }
        let ts = (1..=i).map(|k| self.t_matrix(k)).collect::<Result<Vec<_>, _>>()?;
        let order = ts.iter().rev().chain(ts.iter());
        Ok(QMatrix::product(self.dim(), order)?)
    }

    /// `1 + (2/[2]) u_1`.
    pub fn sigma_vv(&self) -> Result<QMatrix, HeckeError> {
        let u = self.u_matrix(1)?;
        let c = ratio(RationalFunction::from(2), qi(2));
        Ok(QMatrix::identity(self.dim()).add(&u.scale(&c))?)
    }

    /// `(t_1²)^{-1/2} = q^{-1} − ((q − q^{-1})/(q + q^{-1})) u_1`.
    pub fn t1_sq_inv_sqrt(&self) -> Result<QMatrix, HeckeError> {
        let u = self.u_matrix(1)?;
        let q = RationalFunction::q_pow(1);
        let qinv = RationalFunction::q_pow(-1);
        let c = ratio(&q - &qinv, &q + &qinv);
        Ok(QMatrix::identity(self.dim()).scale(&qinv).sub(&u.scale(&c))?)
    }

    pub fn tau_word_matrix(&self, word: &[TauGen]) -> Result<QMatrix, HeckeError> {
        let ms = word
            .iter()
            .map(|t| self.tau_matrix(t.i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QMatrix::product(self.dim(), &ms)?)
    }

    /// Matrices of `q_0, …, q_{r−1}`, each built from the previous one.
    pub fn q_matrices(&self) -> Result<Vec<QMatrix>, HeckeError> {
        let taus = (1..self.r())
            .map(|i| self.tau_matrix(i))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = vec![QMatrix::identity(self.dim())];
        for k in 1..self.r() {
            let step = QMatrix::product(self.dim(), taus[..k].iter().rev())?;
            out.push(out[k - 1].matmul(&step)?);
        }
        Ok(out)
    }

    /// Images of all generators `s_{p,q}`, sharing the `q_k` products.
    pub fn cactus_generator_matrices(&self) -> Result<BTreeMap<CactusGen, QMatrix>, HeckeError> {
        let qs = self.q_matrices()?;
        let mut out = BTreeMap::new();
        for g in CactusGen::all(self.r()) {
            let m = QMatrix::product(self.dim(), [&qs[g.q() - 1], &qs[g.q() - g.p()], &qs[g.q() - 1]])?;
            out.insert(g, m);
        }
        Ok(out)
    }

    /// Image of a cactus word through `s_{i,j} ↦ q_{j−1} q_{j−i} q_{j−1}`.
    pub fn cactus_matrix(&self, g: &CactusWord) -> Result<QMatrix, HeckeError> {
        if g.r() != self.r() {
            return Err(HeckeError::StrandMismatch {
                word: g.r(),
                rep: self.r(),
            });
        }
        let word: Vec<TauGen> = g.gens().iter().flat_map(|&h| s_to_tau(h)).collect();
        self.tau_word_matrix(&word)
    }
}

/// `diag(q^r, q^{-s}) τ = t diag(q^{-s}, q^r)` on the 2×2 block of axial
/// distance `a = r + s`, basis `(T, s_i T)`.
pub fn block_identity_holds(a: i64, r: i64) -> bool {
    let s = a - r;
    let q = RationalFunction::q_pow(1);
    let one = RationalFunction::one();
    let tau = QMatrix::from_rows(vec![
        vec![ratio(one.clone(), qi(a)), off_diagonal(a)],
        vec![one.clone(), -ratio(one.clone(), qi(a))],
    ])
    .expect("2x2");
    let t = QMatrix::from_rows(vec![
        vec![&q - ratio(qi(a - 1), qi(a)), off_diagonal(a)],
        vec![one.clone(), &q - ratio(qi(a + 1), qi(a))],
    ])
    .expect("2x2");
    let left = QMatrix::diagonal([RationalFunction::q_pow(r as i32), RationalFunction::q_pow(-s as i32)]);
    let right = QMatrix::diagonal([RationalFunction::q_pow(-s as i32), RationalFunction::q_pow(r as i32)]);
    left.matmul(&tau).ok() == t.matmul(&right).ok()
}

/// Outcome of one identity over one shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally(Vec<CheckResult>);

impl Tally {
    fn record(&mut self, name: &str, ok: bool) {
        if let Some(c) = self.0.iter_mut().find(|c| c.name == name) {
            c.checked += 1;
            c.failures += usize::from(!ok);
        } else {
            self.0.push(CheckResult {
                name: name.to_string(),
                checked: 1,
                failures: usize::from(!ok),
            });
        }
    }
}

/// Every identity of the suite on one shape. Cactus relations are checked
/// when `r ≤ cactus_limit`.
pub fn check_shape(shape: &Partition, cactus_limit: usize) -> Result<Vec<CheckResult>, HeckeError> {
    let rep = SeminormalRep::new(shape);
    let r = rep.r();
    let n = rep.dim();
    let id = QMatrix::identity(n);
    let q = RationalFunction::q_pow(1);
    let mut tally = Tally(Vec::new());
    let mut u = Vec::new();
    let mut t = Vec::new();
    let mut tau = Vec::new();
    for i in 1..r {
        u.push(rep.u_matrix(i)?);
        t.push(rep.t_matrix(i)?);
        tau.push(rep.tau_matrix(i)?);
    }
    let mul = |a: &QMatrix, b: &QMatrix| a.matmul(b).expect("square");
    for i in 0..r.saturating_sub(1) {
        let (ui, ti) = (&u[i], &t[i]);
        tally.record("u_i^2 = -[2] u_i", mul(ui, ui) == ui.scale(&-qi(2)));
        let tinv = rep.t_inv_matrix(i + 1)?;
        tally.record("t_i t_i^-1 = 1", mul(ti, &tinv).is_identity());
        let minus_q = ti.sub(&id.scale(&q))?;
        let plus_qinv = ti.add(&id.scale(&RationalFunction::q_pow(-1)))?;
        tally.record("(t_i - q)(t_i + q^-1) = 0", mul(&minus_q, &plus_qinv).is_zero());
        tally.record("tau_i^2 = 1", mul(&tau[i], &tau[i]).is_identity());
        // τ_i = J_{i-1}^{1/2} t_i J_i^{-1/2}
        let jh = rep.jm_matrix(i, JmPower::Sqrt)?;
        let jih = rep.jm_matrix(i + 1, JmPower::InverseSqrt)?;
        tally.record(
            "tau_i = J_(i-1)^(1/2) t_i J_i^(-1/2)",
            mul(&mul(&jh, ti), &jih) == tau[i],
        );
        for j in i + 1..r - 1 {
            if j == i + 1 {
                let (uj, tj) = (&u[j], &t[j]);
                let lhs = mul(&mul(ui, uj), ui).sub(ui)?;
                let rhs = mul(&mul(uj, ui), uj).sub(uj)?;
                tally.record("u_i u_j u_i - u_i = u_j u_i u_j - u_j", lhs == rhs);
                tally.record(
                    "t_i t_j t_i = t_j t_i t_j",
                    mul(&mul(ti, tj), ti) == mul(&mul(tj, ti), tj),
                );
            } else {
                tally.record("u_i u_j = u_j u_i", mul(ui, &u[j]) == mul(&u[j], ui));
                tally.record(
                    "tau_i tau_j = tau_j tau_i",
                    mul(&tau[i], &tau[j]) == mul(&tau[j], &tau[i]),
                );
            }
        }
        // entries only between tableaux differing by s_i
        let mut block_ok = true;
        for a in 0..n {
            for b in 0..n {
                if a != b && !ui.get(a, b).is_zero() && rep.swapped(b, i + 1) != Some(a) {
                    block_ok = false;
                }
            }
        }
        tally.record("block structure", block_ok);
    }
    for i in 0..r {
        let word = rep.jm_word(i)?;
        tally.record("J_i word = spectrum", word == rep.jm_matrix(i, JmPower::One)?);
        let h = rep.jm_matrix(i, JmPower::Sqrt)?;
        tally.record("J^(1/2) J^(1/2) = J", mul(&h, &h) == word);
        let inv = rep.jm_matrix(i, JmPower::Inverse)?;
        tally.record("J J^-1 = 1", mul(&word, &inv).is_identity());
        for j in 0..i {
            let other = rep.jm_word(j)?;
            tally.record("J_i J_j = J_j J_i", mul(&word, &other) == mul(&other, &word));
        }
    }
    if r >= 2 {
        let s = rep.sigma_vv()?;
        tally.record("sigma_VV^2 = 1", mul(&s, &s).is_identity());
        tally.record("sigma_VV = tau_1", s == tau[0]);
        let h = rep.t1_sq_inv_sqrt()?;
        let t1sq = mul(&t[0], &t[0]);
        tally.record("((t_1^2)^(-1/2))^2 t_1^2 = 1", mul(&mul(&h, &h), &t1sq).is_identity());
        tally.record("sigma_VV = t_1 (t_1^2)^(-1/2)", mul(&t[0], &h) == s);
    }
    if r <= cactus_limit {
        let gens = rep.cactus_generator_matrices()?;
        let image = |w: &CactusWord| QMatrix::product(n, w.gens().iter().map(|g| &gens[g]));
        for rel in Relation::all(r) {
            let (lhs, rhs) = rel.sides(r)?;
            tally.record("cactus relations", image(&lhs)? == image(&rhs)?);
        }
        let qs = rep.q_matrices()?;
        for k in 4..=r {
            for j in 3..k {
                for i in 1..j - 1 {
                    let once = QMatrix::product(n, [&tau[i - 1], &qs[k - 1], &qs[k - j], &qs[k - 1]])?;
                    tally.record("(tau_i q_(k-1) q_(k-j) q_(k-1))^2 = 1", mul(&once, &once).is_identity());
                }
            }
        }
    }
    Ok(tally.0)
}

/// Shapes of every size up to `max_size`.
pub fn shapes_up_to(max_size: u32) -> Vec<Partition> {
    (1..=max_size).flat_map(crate::oracles::partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn shared_generator_images_match_tau_words() {
        let rep = SeminormalRep::new(&shape(&[3, 2]));
        let gens = rep.cactus_generator_matrices().unwrap();
        for (g, m) in &gens {
            assert_eq!(
                *m,
                rep.cactus_matrix(&CactusWord::generator(*g, 5).unwrap()).unwrap(),
                "{g}"
            );
        }
        let word = crate::cactus::tau_third_relation(1, 3, 4).unwrap();
        assert!(rep.tau_word_matrix(&word).unwrap().is_identity());
    }

    #[test]
    fn contents() {
        let t: StandardTableau = "124/35".parse().unwrap();
        let c = ContentData::new(&t);
        assert_eq!(c.contents, vec![0, 1, -1, 2, 0]);
        assert_eq!(c.axial(1), 1);
        assert_eq!(c.axial(2), -2);
        for t in StandardTableau::all_of_size(6) {
            let c = ContentData::new(&t);
            assert_eq!(ContentData::tableau_from_contents(&c.contents).unwrap(), t);
        }
        assert!(ContentData::tableau_from_contents(&[0, -1, 1, 1]).is_err());
    }

    #[test]
    fn one_dimensional_blocks() {
        let row = SeminormalRep::new(&shape(&[3]));
        let col = SeminormalRep::new(&shape(&[1, 1, 1]));
        for i in 1..3 {
            assert!(row.u_matrix(i).unwrap().is_zero());
            assert_eq!(*col.u_matrix(i).unwrap().get(0, 0), -qi(2));
            assert_eq!(*row.t_matrix(i).unwrap().get(0, 0), RationalFunction::q_pow(1));
            assert_eq!(*col.t_matrix(i).unwrap().get(0, 0), -RationalFunction::q_pow(-1));
            assert!(row.tau_matrix(i).unwrap().is_identity());
            assert_eq!(*col.tau_matrix(i).unwrap().get(0, 0), RationalFunction::from(-1));
        }
        let two = SeminormalRep::new(&shape(&[2]));
        assert_eq!(
            *two.jm_matrix(1, JmPower::One).unwrap().get(0, 0),
            RationalFunction::q_pow(2)
        );
        assert!(row.u_matrix(3).is_err());
        assert!(row.u_matrix(0).is_err());
    }

    #[test]
    fn shape_21_block() {
        let rep = SeminormalRep::new(&shape(&[2, 1]));
        let names: Vec<String> = rep.basis().iter().map(|t| t.to_string()).collect();
        assert_eq!(names, vec!["12/3", "13/2"]);
        // i = 2: 12/3 has a = -2, 13/2 has a = 2
        let u = rep.u_matrix(2).unwrap();
        assert_eq!(*u.get(1, 1), -ratio(qi(1), qi(2)));
        assert_eq!(*u.get(0, 0), -ratio(qi(3), qi(2)));
        assert_eq!(*u.get(0, 1), RationalFunction::one());
        assert_eq!(*u.get(1, 0), ratio(qi(1) * qi(3), qi(2) * qi(2)));
        assert_eq!(u.matmul(&u).unwrap(), u.scale(&-qi(2)));
        assert_eq!(*rep.t_matrix(2).unwrap().get(1, 1), rf("(q^3)/(q^2 + 1)"));
        let t1 = rep.t_matrix(1).unwrap();
        let t2 = rep.t_matrix(2).unwrap();
        assert_eq!(
            t1.matmul(&t2).unwrap().matmul(&t1).unwrap(),
            t2.matmul(&t1).unwrap().matmul(&t2).unwrap()
        );
    }

    #[test]
    fn quantum_identity() {
        let a = 4;
        assert_eq!(qi(a) * qi(a) - qi(a - 1) * qi(a + 1), RationalFunction::one());
    }

    #[test]
    fn conjugation_blocks() {
        for a in 2..=6 {
            for r in -6..=6 {
                assert!(block_identity_holds(a, r), "a={a} r={r}");
            }
        }
    }

    #[test]
    fn suites_small_shapes() {
        for sh in shapes_up_to(5) {
            for c in check_shape(&sh, 4).unwrap() {
                assert!(c.passed(), "{sh}: {} ({} of {})", c.name, c.failures, c.checked);
            }
        }
    }

    #[test]
    fn third_relation_r5() {
        let checks = check_shape(&shape(&[3, 2]), 5).unwrap();
        let c = checks.iter().find(|c| c.name.starts_with("(tau_i")).unwrap();
        assert_eq!(c.checked, 4);
        assert!(c.passed());
    }

    #[test]
    fn cactus_generators() {
        let rep = SeminormalRep::new(&shape(&[2, 1]));
        let g = CactusWord::from_pairs(3, &[(1, 2)]).unwrap();
        assert_eq!(rep.cactus_matrix(&g).unwrap(), rep.tau_matrix(1).unwrap());
        assert!(rep.cactus_matrix(&CactusWord::identity(4)).is_err());
    }
}
