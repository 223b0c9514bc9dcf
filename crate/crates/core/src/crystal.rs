//! Finite normal crystals stored as explicit labelled graphs.
//!
//! Raising operators are the primary data; `f_i`, `ε_i` and `φ_i` are
//! derived. Tensor products follow the convention
//! `e_i(x ⊗ y) = e_i x ⊗ y` when `φ_i(x) ≥ ε_i(y)` and `x ⊗ e_i y` otherwise.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::weights::{CartanContext, Family, Weight};

pub const DEFAULT_SIZE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("e_{index} has an oriented cycle")]
    CyclicGraph { index: usize },
    #[error("e_{index} is not injective at element {element}")]
    NotInjective { index: usize, element: usize },
    #[error("edge e_{index}({from}) = {to} does not raise the weight by the simple root")]
    WeightIncompatible { index: usize, from: usize, to: usize },
    #[error("edge e_{index}({from}) = {to} is out of range")]
    InvalidEdge { index: usize, from: usize, to: usize },
    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(CartanContext, CartanContext),
    #[error("crystal would have {requested} elements, limit is {limit}")]
    SizeLimit { requested: u128, limit: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementId(pub usize);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Which minuscule crystal to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Minuscule {
    Vector,
    Exterior(usize),
    Sl2,
}

#[derive(Debug, Clone)]
enum Labels {
    Named(Vec<String>),
    /// Mixed-radix tensor of named factors, first factor most significant.
    Tensor(Vec<Arc<Crystal>>),
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct Crystal {
    context: CartanContext,
    labels: Labels,
    weights: Vec<Weight>,
    // per index (position i-1): e_i and f_i images, NONE when undefined
    raise: Vec<Vec<u32>>,
    lower: Vec<Vec<u32>>,
    eps: Vec<Vec<u32>>,
    phi: Vec<Vec<u32>>,
}

impl Crystal {
    /// Build a crystal from labels, weights and `e_i` edges `(i, x, e_i x)`.
    /// Checks injectivity, acyclicity and weight compatibility.
    pub fn new(
        context: CartanContext,
        labels: Vec<String>,
        weights: Vec<Weight>,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, CrystalError> {
        let n = labels.len();
        if weights.len() != n {
            return Err(CrystalError::BadParameter(format!(
                "{} labels but {} weights",
                n,
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| w.context() != context) {
            return Err(CrystalError::ContextMismatch(context, w.context()));
        }
        let idx: Vec<usize> = context.index_set().collect();
        let mut raise = vec![vec![NONE; n]; idx.len()];
        for (i, from, to) in edges {
            if !context.index_set().contains(&i) || from >= n || to >= n {
                return Err(CrystalError::InvalidEdge { index: i, from, to });
            }
            let slot = &mut raise[i - 1][from];
            if *slot != NONE && *slot as usize != to {
                return Err(CrystalError::NotInjective {
                    index: i,
                    element: from,
                });
            }
            *slot = to as u32;
        }
        for (pos, r) in raise.iter().enumerate() {
            let mut seen = vec![false; n];
            for (x, &y) in r.iter().enumerate() {
                if y == NONE {
                    continue;
                }
                if std::mem::replace(&mut seen[y as usize], true) {
                    return Err(CrystalError::NotInjective {
                        index: pos + 1,
                        element: x,
                    });
                }
            }
        }
        let c = Self::from_raise(context, Labels::Named(labels), weights, raise)?;
        c.check_weights()?;
        Ok(c)
    }

    fn from_raise(
        context: CartanContext,
        labels: Labels,
        weights: Vec<Weight>,
        raise: Vec<Vec<u32>>,
    ) -> Result<Self, CrystalError> {
        let n = weights.len();
        let mut lower = Vec::with_capacity(raise.len());
        let mut eps = Vec::with_capacity(raise.len());
        let mut phi = Vec::with_capacity(raise.len());
        for (pos, r) in raise.iter().enumerate() {
            let mut l = vec![NONE; n];
            for (x, &y) in r.iter().enumerate() {
                if y != NONE {
                    l[y as usize] = x as u32;
                }
            }
            // walk each i-string from its top down the f_i edges
            let mut e_len = vec![NONE; n];
            let mut p_len = vec![0u32; n];
            let mut string = Vec::new();
            for top in 0..n {
                if r[top] != NONE {
                    continue;
                }
                string.clear();
                let mut x = top as u32;
                while x != NONE {
                    e_len[x as usize] = string.len() as u32;
                    string.push(x);
                    x = l[x as usize];
                }
                let len = string.len() as u32;
                for (k, &x) in string.iter().enumerate() {
                    p_len[x as usize] = len - 1 - k as u32;
                }
            }
            if e_len.contains(&NONE) {
                return Err(CrystalError::CyclicGraph { index: pos + 1 });
            }
            lower.push(l);
            eps.push(e_len);
            phi.push(p_len);
        }
        Ok(Self {
            context,
            labels,
            weights,
            raise,
            lower,
            eps,
            phi,
        })
    }

    fn check_weights(&self) -> Result<(), CrystalError> {
        for i in self.context.index_set() {
            let alpha = self.context.simple_root(i);
            for (x, &y) in self.raise[i - 1].iter().enumerate() {
                if y != NONE && self.weights[y as usize] != &self.weights[x] + &alpha {
                    return Err(CrystalError::WeightIncompatible {
                        index: i,
                        from: x,
                        to: y as usize,
                    });
                }
            }
        }
        Ok(())
    }

    /// The one-element crystal of weight zero, unit for `⊗`.
    pub fn trivial(context: CartanContext) -> Self {
        Self::new(context, vec!["∅".into()], vec![context.zero()], []).expect("trivial crystal")
    }

    pub fn context(&self) -> CartanContext {
        self.context
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.len()).map(ElementId)
    }

    pub fn weight(&self, x: ElementId) -> &Weight {
        &self.weights[x.0]
    }

    pub fn e(&self, i: usize, x: ElementId) -> Option<ElementId> {
        let y = self.raise[i - 1][x.0];
        (y != NONE).then_some(ElementId(y as usize))
    }

    pub fn f(&self, i: usize, x: ElementId) -> Option<ElementId> {
        let y = self.lower[i - 1][x.0];
        (y != NONE).then_some(ElementId(y as usize))
    }

    pub fn eps(&self, i: usize, x: ElementId) -> u32 {
        self.eps[i - 1][x.0]
    }

    pub fn phi(&self, i: usize, x: ElementId) -> u32 {
        self.phi[i - 1][x.0]
    }

    pub fn label(&self, x: ElementId) -> String {
        match &self.labels {
            Labels::Named(v) => v[x.0].clone(),
            Labels::Tensor(factors) => {
                let mut rest = x.0;
                let mut parts = Vec::with_capacity(factors.len());
                for c in factors.iter().rev() {
                    parts.push(c.label(ElementId(rest % c.len())));
                    rest /= c.len();
                }
                parts.reverse();
                parts.join("⊗")
            }
        }
    }

    pub fn find(&self, label: &str) -> Option<ElementId> {
        self.elements().find(|&x| self.label(x) == label)
    }

    /// Split a tensor element into its factor elements.
    pub fn factor_ids(&self, x: ElementId) -> Vec<ElementId> {
        match &self.labels {
            Labels::Named(_) => vec![x],
            Labels::Tensor(factors) => {
                let mut rest = x.0;
                let mut out: Vec<ElementId> = factors
                    .iter()
                    .rev()
                    .map(|c| {
                        let id = ElementId(rest % c.len());
                        rest /= c.len();
                        id
                    })
                    .collect();
                out.reverse();
                out
            }
        }
    }

    fn factors(&self) -> Vec<Arc<Crystal>> {
        match &self.labels {
            Labels::Named(_) => vec![Arc::new(self.clone())],
            Labels::Tensor(f) => f.clone(),
        }
    }

    pub fn is_highest_weight(&self, x: ElementId) -> bool {
        self.context.index_set().all(|i| self.eps(i, x) == 0)
    }

    pub fn highest_weight_elements(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| self.is_highest_weight(x)).collect()
    }

    /// Raise along any available `e_i` until none applies.
    pub fn rectify(&self, x: ElementId) -> ElementId {
        let mut x = x;
        'outer: loop {
            for i in self.context.index_set() {
                if let Some(y) = self.e(i, x) {
                    x = y;
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// Connected components, each sorted, ordered by smallest element.
    pub fn components(&self) -> Vec<Vec<ElementId>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for r in &self.raise {
            for (x, &y) in r.iter().enumerate() {
                if y != NONE {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<ElementId>> = BTreeMap::new();
        for x in 0..n {
            let root = find(&mut parent, x);
            groups.entry(root).or_default().push(ElementId(x));
        }
        groups.into_values().collect()
    }

    /// `⟨wt(x), α_i^∨⟩ = φ_i(x) − ε_i(x)` for every element and index.
    pub fn is_normal_weighted(&self) -> bool {
        self.elements().all(|x| {
            self.context
                .index_set()
                .all(|i| self.context.pairing(self.weight(x), i) == self.phi(i, x) as i64 - self.eps(i, x) as i64)
        })
    }

    /// The diagram automorphism `θ` with `w_0 α_i = −α_θ(i)`.
    pub fn theta(&self, i: usize) -> usize {
        match self.context.family() {
            Family::GL => self.context.rank() - i,
            Family::SL2 | Family::Sp => i,
        }
    }

    /// The Schützenberger (Lusztig) involution `ξ`: on each component it
    /// sends the highest weight element to the lowest one and intertwines
    /// `f_i` with `e_θ(i)`.
    pub fn lusztig_involution(&self) -> Vec<ElementId> {
        let mut out = vec![ElementId(usize::MAX); self.len()];
        for top in self.highest_weight_elements() {
            let mut low = top;
            'down: loop {
                for i in self.context.index_set() {
                    if let Some(y) = self.f(i, low) {
                        low = y;
                        continue 'down;
                    }
                }
                break;
            }
            out[top.0] = low;
            let mut stack = vec![top];
            while let Some(x) = stack.pop() {
                for i in self.context.index_set() {
                    if let Some(y) = self.f(i, x) {
                        if out[y.0].0 == usize::MAX {
                            out[y.0] = self.e(self.theta(i), out[x.0]).expect("component is not normal");
                            stack.push(y);
                        }
                    }
                }
            }
        }
        out
    }

    /// Element of a tensor crystal from its factor elements.
    pub fn join_ids(&self, parts: &[ElementId]) -> ElementId {
        match &self.labels {
            Labels::Named(_) => {
                assert_eq!(parts.len(), 1);
                parts[0]
            }
            Labels::Tensor(factors) => {
                assert_eq!(parts.len(), factors.len());
                ElementId(factors.iter().zip(parts).fold(0, |acc, (c, p)| acc * c.len() + p.0))
            }
        }
    }

    pub fn tensor(&self, other: &Crystal) -> Result<Crystal, CrystalError> {
        self.tensor_limited(other, DEFAULT_SIZE_LIMIT)
    }

    pub fn tensor_limited(&self, other: &Crystal, limit: usize) -> Result<Crystal, CrystalError> {
        if self.context != other.context {
            return Err(CrystalError::ContextMismatch(self.context, other.context));
        }
        let requested = self.len() as u128 * other.len() as u128;
        if requested > limit as u128 || requested > NONE as u128 {
            return Err(CrystalError::SizeLimit { requested, limit });
        }
        let m = other.len();
        let n = self.len() * m;
        let mut weights = Vec::with_capacity(n);
        for x in &self.weights {
            for y in &other.weights {
                weights.push(x + y);
            }
        }
        let mut raise = Vec::with_capacity(self.raise.len());
        for pos in 0..self.raise.len() {
            let mut r = vec![NONE; n];
            for x in 0..self.len() {
                for y in 0..m {
                    let img = if self.phi[pos][x] >= other.eps[pos][y] {
                        let ex = self.raise[pos][x];
                        (ex != NONE).then(|| ex as usize * m + y)
                    } else {
                        let ey = other.raise[pos][y];
                        (ey != NONE).then(|| x * m + ey as usize)
                    };
                    if let Some(z) = img {
                        r[x * m + y] = z as u32;
                    }
                }
            }
            raise.push(r);
        }
        let mut factors = self.factors();
        factors.extend(other.factors());
        Crystal::from_raise(self.context, Labels::Tensor(factors), weights, raise)
    }

    /// `⊗^r self`; `r = 0` gives the trivial crystal.
    pub fn tensor_power(&self, r: usize, limit: usize) -> Result<Crystal, CrystalError> {
        let requested = (self.len() as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        if requested > limit as u128 {
            return Err(CrystalError::SizeLimit { requested, limit });
        }
        if r == 0 {
            return Ok(Crystal::trivial(self.context));
        }
        let mut acc = self.clone();
        for _ in 1..r {
            acc = acc.tensor_limited(self, limit)?;
        }
        Ok(acc)
    }

    pub fn to_dump(&self) -> CrystalDump {
        let elements = self
            .elements()
            .map(|x| DumpElement {
                id: x.0,
                label: self.label(x),
                weight: self.weight(x).coords().to_vec(),
            })
            .collect();
        let edges = self
            .context
            .index_set()
            .map(|i| {
                let list = self.raise[i - 1]
                    .iter()
                    .enumerate()
                    .filter(|(_, &y)| y != NONE)
                    .map(|(x, &y)| (x, y as usize))
                    .collect();
                (i.to_string(), list)
            })
            .collect();
        CrystalDump {
            context: self.context,
            elements,
            edges,
        }
    }
}

/// JSON form: elements with weights, and per-index `e_i` edge lists
/// `[x, e_i x]`.
#[derive(Debug, Clone, Serialize)]
pub struct CrystalDump {
    pub context: CartanContext,
    pub elements: Vec<DumpElement>,
    pub edges: BTreeMap<String, Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DumpElement {
    pub id: usize,
    pub label: String,
    pub weight: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentCensus {
    /// Number of components with this highest weight.
    pub count: usize,
    /// Size of each such component.
    pub size: usize,
}

/// Census of the connected components of `⊗^r c` by highest weight.
pub fn decompose(c: &Crystal, r: usize, limit: usize) -> Result<BTreeMap<Weight, ComponentCensus>, CrystalError> {
    let power = c.tensor_power(r, limit)?;
    let mut out: BTreeMap<Weight, ComponentCensus> = BTreeMap::new();
    for comp in power.components() {
        let hw: Vec<_> = comp.iter().copied().filter(|&x| power.is_highest_weight(x)).collect();
        assert_eq!(hw.len(), 1, "component without a unique highest weight element");
        let entry = out.entry(power.weight(hw[0]).clone()).or_insert(ComponentCensus {
            count: 0,
            size: comp.len(),
        });
        entry.count += 1;
    }
    Ok(out)
}

fn unit(ctx: CartanContext, k: usize, sign: i64) -> Weight {
    let mut v = vec![0; ctx.rank()];
    v[k] = sign;
    Weight::new(ctx, v).expect("rank-length vector")
}

fn overline(k: usize) -> String {
    format!("{k}\u{0304}")
}

pub fn build_minuscule(context: CartanContext, which: Minuscule) -> Result<Crystal, CrystalError> {
    let n = context.rank();
    match (context.family(), which) {
        (Family::SL2, Minuscule::Sl2 | Minuscule::Vector) => Crystal::new(
            context,
            vec!["+".into(), "-".into()],
            vec![unit(context, 0, 1), unit(context, 0, -1)],
            [(1, 1, 0)],
        ),
        (Family::GL, Minuscule::Vector) => build_minuscule(context, Minuscule::Exterior(1)),
        (Family::GL, Minuscule::Exterior(k)) => {
            if k == 0 || k > n {
                return Err(CrystalError::BadParameter(format!(
                    "exterior power {k} of GL({n}) needs 1 <= k <= n"
                )));
            }
            let subsets = k_subsets(n, k);
            let pos: BTreeMap<Vec<usize>, usize> = subsets.iter().enumerate().map(|(a, s)| (s.clone(), a)).collect();
            let sep = if n > 9 { "," } else { "" };
            let labels = subsets
                .iter()
                .map(|s| s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(sep))
                .collect();
            let weights = subsets
                .iter()
                .map(|s| {
                    let mut v = vec![0; n];
                    s.iter().for_each(|&j| v[j] = 1);
                    Weight::new(context, v).expect("rank-length vector")
                })
                .collect();
            let mut edges = Vec::new();
            for (a, s) in subsets.iter().enumerate() {
                for i in 1..n {
                    // 0-based values i-1, i stand for letters i, i+1
                    if s.contains(&i) && !s.contains(&(i - 1)) {
                        let mut t: Vec<usize> = s.iter().map(|&v| if v == i { i - 1 } else { v }).collect();
                        t.sort_unstable();
                        edges.push((i, a, pos[&t]));
                    }
                }
            }
            Crystal::new(context, labels, weights, edges)
        }
        (Family::Sp, Minuscule::Vector) => {
            // order 1..n then n̄..1̄; element a < n is letter a+1, element 2n-1-a is its bar
            let mut labels: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
            labels.extend((1..=n).rev().map(overline));
            let mut weights: Vec<Weight> = (0..n).map(|k| unit(context, k, 1)).collect();
            weights.extend((0..n).rev().map(|k| unit(context, k, -1)));
            let bar = |k: usize| 2 * n - 1 - k;
            let mut edges = Vec::new();
            for i in 1..n {
                edges.push((i, i, i - 1));
                edges.push((i, bar(i - 1), bar(i)));
            }
            edges.push((n, n, n - 1));
            Crystal::new(context, labels, weights, edges)
        }
        (fam, w) => Err(CrystalError::BadParameter(format!(
            "{w:?} is not available for {fam:?}"
        ))),
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Partition;

    fn sl2() -> Crystal {
        build_minuscule(CartanContext::sl2(), Minuscule::Sl2).unwrap()
    }

    fn all_minuscule() -> Vec<Crystal> {
        let mut out = vec![sl2()];
        for n in 1..=4 {
            for k in 1..=n {
                out.push(build_minuscule(CartanContext::gl(n), Minuscule::Exterior(k)).unwrap());
            }
            out.push(build_minuscule(CartanContext::sp(n), Minuscule::Vector).unwrap());
        }
        out
    }

    #[test]
    fn sl2_basics() {
        let b = sl2();
        let plus = b.find("+").unwrap();
        let minus = b.find("-").unwrap();
        assert_eq!(b.f(1, plus), Some(minus));
        assert_eq!(b.eps(1, plus), 0);
        assert_eq!(b.phi(1, plus), 1);
        assert_eq!(b.highest_weight_elements(), vec![plus]);
    }

    #[test]
    fn gl3_vector_strings() {
        let b = build_minuscule(CartanContext::gl(3), Minuscule::Vector).unwrap();
        let two = b.find("2").unwrap();
        assert_eq!(b.eps(1, two), 1);
        assert_eq!(b.phi(2, two), 1);
    }

    #[test]
    fn sl2_tensor_square() {
        let b = sl2();
        let bb = b.tensor(&b).unwrap();
        let mm = bb.find("-⊗-").unwrap();
        assert_eq!(bb.label(bb.e(1, mm).unwrap()), "-⊗+");
        let hw: Vec<String> = bb.highest_weight_elements().into_iter().map(|x| bb.label(x)).collect();
        assert_eq!(hw, vec!["+⊗+", "+⊗-"]);
        // hw of a tensor product: x hw and ε(y) ≤ φ(x), by brute force
        for x in bb.elements() {
            let f = bb.factor_ids(x);
            let predicted = b.is_highest_weight(f[0]) && b.eps(1, f[1]) <= b.phi(1, f[0]);
            assert_eq!(bb.is_highest_weight(x), predicted);
        }
        assert_eq!(bb.label(bb.rectify(bb.find("-⊗+").unwrap())), "+⊗+");
    }

    #[test]
    fn gl2_tensor_cube_hw_count() {
        let v = build_minuscule(CartanContext::gl(2), Minuscule::Vector).unwrap();
        // hw elements of ⊗^r are lattice words: 111, 112, 121 (two distinct weights)
        let p3 = v.tensor_power(3, 1000).unwrap();
        let lattice = (0..8u32)
            .filter(|m| {
                let mut ones = 0;
                (0..3).all(|k| {
                    let two = m >> (2 - k) & 1 == 1;
                    ones += if two { -1 } else { 1 };
                    ones >= 0
                })
            })
            .count();
        assert_eq!(lattice, 3);
        assert_eq!(p3.highest_weight_elements().len(), lattice);
        let distinct: std::collections::BTreeSet<_> = p3
            .highest_weight_elements()
            .into_iter()
            .map(|x| p3.weight(x).clone())
            .collect();
        assert_eq!(distinct.len(), 2);
        let p4 = v.tensor_power(4, 1000).unwrap();
        let mut ws: Vec<Vec<i64>> = p4
            .highest_weight_elements()
            .into_iter()
            .map(|x| p4.weight(x).coords().to_vec())
            .collect();
        ws.sort();
        assert_eq!(
            ws,
            vec![vec![2, 2], vec![2, 2], vec![3, 1], vec![3, 1], vec![3, 1], vec![4, 0]]
        );
    }

    #[test]
    fn minuscule_shapes() {
        let l2 = build_minuscule(CartanContext::gl(3), Minuscule::Exterior(2)).unwrap();
        let labels: Vec<String> = l2.elements().map(|x| l2.label(x)).collect();
        assert_eq!(labels, vec!["12", "13", "23"]);
        let sp = build_minuscule(CartanContext::sp(2), Minuscule::Vector).unwrap();
        let ws: Vec<Vec<i64>> = sp.elements().map(|x| sp.weight(x).coords().to_vec()).collect();
        assert_eq!(ws, vec![vec![1, 0], vec![0, 1], vec![0, -1], vec![-1, 0]]);
        assert!(build_minuscule(CartanContext::gl(3), Minuscule::Exterior(4)).is_err());
        assert!(build_minuscule(CartanContext::gl(3), Minuscule::Exterior(0)).is_err());
        assert!(build_minuscule(CartanContext::sp(2), Minuscule::Exterior(2)).is_err());
    }

    #[test]
    fn minuscule_invariants() {
        for c in all_minuscule() {
            assert!(c.is_normal_weighted(), "{}", c.context());
            // single component, Weyl group transitive on weights
            assert_eq!(c.components().len(), 1);
            let w0 = c.weight(c.highest_weight_elements()[0]).clone();
            let orbit = w0.weyl_orbit();
            assert_eq!(orbit.len(), c.len());
            for x in c.elements() {
                assert!(orbit.contains(c.weight(x)));
                for i in c.context().index_set() {
                    if let Some(y) = c.f(i, x) {
                        assert_eq!(c.e(i, y), Some(x));
                    }
                    if let Some(y) = c.e(i, x) {
                        assert_eq!(c.f(i, y), Some(x));
                        assert_eq!(c.weight(y), &(c.weight(x) + &c.context().simple_root(i)));
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_associative_on_indices() {
        for c in all_minuscule() {
            if c.len() > 4 {
                continue;
            }
            let a = c.tensor(&c).unwrap().tensor(&c).unwrap();
            let b = c.tensor(&c.tensor(&c).unwrap()).unwrap();
            assert_eq!(a.len(), b.len());
            for x in a.elements() {
                assert_eq!(a.label(x), b.label(x));
                assert_eq!(a.weight(x), b.weight(x));
                for i in c.context().index_set() {
                    assert_eq!(a.e(i, x), b.e(i, x));
                }
            }
            assert!(a.is_normal_weighted());
        }
    }

    #[test]
    fn rejects_bad_graphs() {
        let ctx = CartanContext::sl2();
        let w = |k| Weight::new(ctx, vec![k]).unwrap();
        let labels = vec!["a".to_string(), "b".to_string()];
        let err = Crystal::new(ctx, labels.clone(), vec![w(0), w(0)], [(1, 0, 1), (1, 1, 0)]);
        assert_eq!(err.unwrap_err(), CrystalError::CyclicGraph { index: 1 });
        let err = Crystal::new(ctx, labels.clone(), vec![w(-1), w(-1)], [(1, 0, 1)]);
        assert!(matches!(err, Err(CrystalError::WeightIncompatible { .. })));
        let three = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let err = Crystal::new(ctx, three, vec![w(-1), w(-1), w(1)], [(1, 0, 2), (1, 1, 2)]);
        assert!(matches!(err, Err(CrystalError::NotInjective { .. })));
        let err = Crystal::new(ctx, labels, vec![w(0), w(0)], [(2, 0, 1)]);
        assert!(matches!(err, Err(CrystalError::InvalidEdge { .. })));
        let gl = build_minuscule(CartanContext::gl(2), Minuscule::Vector).unwrap();
        assert!(matches!(sl2().tensor(&gl), Err(CrystalError::ContextMismatch(..))));
        assert!(matches!(
            sl2().tensor_power(21, 1_000_000),
            Err(CrystalError::SizeLimit { .. })
        ));
    }

    #[test]
    fn decompose_examples() {
        let v = build_minuscule(CartanContext::gl(2), Minuscule::Vector).unwrap();
        let d = decompose(&v, 2, 1000).unwrap();
        let w = |a, b| Weight::new(CartanContext::gl(2), vec![a, b]).unwrap();
        assert_eq!(d[&w(2, 0)], ComponentCensus { count: 1, size: 3 });
        assert_eq!(d[&w(1, 1)], ComponentCensus { count: 1, size: 1 });
        let d = decompose(&sl2(), 4, 1000).unwrap();
        assert_eq!(d[&Weight::new(CartanContext::sl2(), vec![0]).unwrap()].count, 2);
        let d = decompose(&v, 0, 1000).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&w(0, 0)], ComponentCensus { count: 1, size: 1 });
    }

    #[test]
    fn decompose_totals() {
        for c in all_minuscule() {
            for r in 0..=4usize {
                if (c.len() as u128).pow(r as u32) > 5000 {
                    continue;
                }
                let d = decompose(&c, r, 5000).unwrap();
                let total: usize = d.values().map(|s| s.count * s.size).sum();
                assert_eq!(total, c.len().pow(r as u32));
            }
        }
    }

    #[test]
    fn sl2_invariant_counts_are_catalan() {
        let mut catalan = vec![1u64];
        for m in 0..5 {
            let next = (0..=m).map(|k| catalan[k] * catalan[m - k]).sum();
            catalan.push(next);
        }
        for r in (0..=10).step_by(2) {
            let d = decompose(&sl2(), r, 1 << 12).unwrap();
            let zero = Weight::new(CartanContext::sl2(), vec![0]).unwrap();
            assert_eq!(d[&zero].count as u64, catalan[r / 2], "r={r}");
        }
    }

    #[test]
    fn gl_components_match_partitions() {
        // components of ⊗^4 of the GL(3) vector crystal are indexed by
        // partitions of 4 with ≤ 3 rows, counted by the number of SYT
        let v = build_minuscule(CartanContext::gl(3), Minuscule::Vector).unwrap();
        let d = decompose(&v, 4, 1000).unwrap();
        let counts: BTreeMap<Partition, usize> = d.iter().map(|(w, s)| (w.to_partition().unwrap(), s.count)).collect();
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(counts[&p(&[4])], 1);
        assert_eq!(counts[&p(&[3, 1])], 3);
        assert_eq!(counts[&p(&[2, 2])], 2);
        assert_eq!(counts[&p(&[2, 1, 1])], 3);
        assert_eq!(counts.len(), 4);
    }

    #[test]
    fn json_dump() {
        let v = sl2().to_dump();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains(r#""edges":{"1":[[1,0]]}"#), "{s}");
    }
}
