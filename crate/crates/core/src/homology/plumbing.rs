//! Framed plumbing graphs and their linking matrices.
//!
//! Text format, one item per line, `#` starts a comment:
//!
//! ```text
//! vertex c 0
//! vertex a 2
//! vertex b -3
//! vertex d -11/2
//! edge c a
//! edge c b
//! edge c d
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;
use crate::error::{invalid, Error, Result};
use crate::slope::{neg_continued_fraction, Slope};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    /// Always finite.
    pub framing: Slope,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str, framing: Slope) -> Result<usize> {
        if framing.is_infinite() {
            return Err(invalid(format!("vertex `{name}` has infinite framing")));
        }
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(invalid(format!("bad vertex name `{name}`")));
        }
        if self.index_of(name).is_some() {
            return Err(invalid(format!("duplicate vertex `{name}`")));
        }
        self.vertices.push(Vertex { name: name.to_string(), framing });
        Ok(self.vertices.len() - 1)
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let ia = self.index_of(a).ok_or_else(|| invalid(format!("unknown vertex `{a}`")))?;
        let ib = self.index_of(b).ok_or_else(|| invalid(format!("unknown vertex `{b}`")))?;
        if ia == ib {
            return Err(invalid(format!("self-loop at `{a}`")));
        }
        let key = (ia.min(ib), ia.max(ib));
        if self.edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == key) {
            return Err(invalid(format!("duplicate edge `{a}`-`{b}`")));
        }
        self.edges.push((ia, ib));
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// A forest: no cycles (connectedness is not required).
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty() && self.edges.len() + 1 == self.vertices.len() && self.is_forest()
    }

    pub fn has_rational_framings(&self) -> bool {
        self.vertices.iter().any(|v| v.framing.as_integer().is_none())
    }

    /// Same graph with vertices listed in the order `perm` (new index `i`
    /// holds old vertex `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertices.len();
        let seen: BTreeSet<usize> = perm.iter().copied().collect();
        if perm.len() != n || seen.len() != n || seen.iter().any(|&x| x >= n) {
            return Err(invalid("not a permutation of the vertices"));
        }
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        Ok(PlumbingGraph {
            vertices: perm.iter().map(|&o| self.vertices[o].clone()).collect(),
            edges: self.edges.iter().map(|&(a, b)| (inv[a], inv[b])).collect(),
        })
    }

    /// The star of Seifert invariants for `-Σ(2,3,6n-1)`: a 0-framed centre
    /// with leaves framed 2, -3 and -(6n-1)/n.
    pub fn brieskorn(n: i64) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("n must be at least 2, got {n}")));
        }
        let mut g = PlumbingGraph::new();
        g.add_vertex("c", Slope::integer(0))?;
        g.add_vertex("a", Slope::integer(2))?;
        g.add_vertex("b", Slope::integer(-3))?;
        g.add_vertex("d", Slope::from_ratio(-(6 * n - 1), n)?)?;
        for leaf in ["a", "b", "d"] {
            g.add_edge("c", leaf)?;
        }
        Ok(g)
    }

    /// A single 0-framed unknot.
    pub fn zero_surgery_unknot() -> Self {
        let mut g = PlumbingGraph::new();
        g.add_vertex("u", Slope::integer(0)).expect("fresh graph");
        g
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut g = PlumbingGraph::new();
        let mut seen_edge = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line, msg };
            let toks: Vec<&str> = body.split_whitespace().collect();
            match toks.as_slice() {
                ["vertex", name, framing] => {
                    if seen_edge {
                        return Err(err("vertex lines must precede edge lines".into()));
                    }
                    let f = parse_rational(framing).map_err(|e| err(e.to_string()))?;
                    g.add_vertex(name, f).map_err(|e| err(e.to_string()))?;
                }
                ["edge", a, b] => {
                    seen_edge = true;
                    g.add_edge(a, b).map_err(|e| err(e.to_string()))?;
                }
                _ => return Err(err(format!("unrecognized line `{body}`"))),
            }
        }
        if g.vertices.is_empty() {
            return Err(Error::Parse { line: 0, msg: "no vertices".into() });
        }
        Ok(g)
    }
}

fn parse_rational(s: &str) -> Result<Slope> {
    let bad = || invalid(format!("bad framing `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Slope::from_ratio(p, q)
        }
        None => Ok(Slope::integer(s.parse::<BigInt>().map_err(|_| bad())?)),
    }
}

impl fmt::Display for PlumbingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {} {}", v.name, v.framing)?;
        }
        for &(a, b) in &self.edges {
            writeln!(f, "edge {} {}", self.vertices[a].name, self.vertices[b].name)?;
        }
        Ok(())
    }
}

/// Replaces each rationally framed vertex of degree at most one by a chain
/// carrying its negative continued fraction. The vertex keeps the first
/// coefficient; the tail hangs off it as `name#1`, `name#2`, ...
pub fn expand_rational_framings(g: &PlumbingGraph) -> Result<PlumbingGraph> {
    let mut out = PlumbingGraph::new();
    let mut tails: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for (idx, v) in g.vertices.iter().enumerate() {
        if v.framing.as_integer().is_some() {
            out.add_vertex(&v.name, v.framing.clone())?;
            continue;
        }
        if g.degree(idx) > 1 {
            return Err(invalid(format!(
                "rational framing on `{}` needs a leaf or isolated vertex",
                v.name
            )));
        }
        let (numer, denom) = (v.framing.numer().clone(), v.framing.denom().clone());
        if !numer.is_negative() || numer.abs() <= denom {
            return Err(invalid(format!(
                "framing {} of `{}` has no expansion with entries <= -2",
                v.framing, v.name
            )));
        }
        let ncf = neg_continued_fraction(numer, denom)?;
        let coeffs = ncf.coefficients();
        out.add_vertex(&v.name, Slope::integer(coeffs[0].clone()))?;
        tails.insert(idx, coeffs[1..].to_vec());
    }
    for &(a, b) in &g.edges {
        out.add_edge(&g.vertices[a].name, &g.vertices[b].name)?;
    }
    for (idx, tail) in tails {
        let base = &g.vertices[idx].name;
        let mut prev = base.clone();
        for (k, a) in tail.into_iter().enumerate() {
            let name = format!("{base}#{}", k + 1);
            if g.index_of(&name).is_some() {
                return Err(invalid(format!("expansion name `{name}` already taken")));
            }
            out.add_vertex(&name, Slope::integer(a))?;
            out.add_edge(&prev, &name)?;
            prev = name;
        }
    }
    Ok(out)
}

/// Framings on the diagonal, one per edge off it.
pub fn linking_matrix(g: &PlumbingGraph) -> Result<IntegerMatrix> {
    let n = g.vertices.len();
    let mut m = IntegerMatrix::zeros(n, n);
    for (i, v) in g.vertices.iter().enumerate() {
        m[(i, i)] = v
            .framing
            .as_integer()
            .ok_or_else(|| {
                invalid(format!("vertex `{}` has rational framing; expand it first", v.name))
            })?
            .clone();
    }
    for &(a, b) in &g.edges {
        m[(a, b)] += BigInt::one();
        m[(b, a)] += BigInt::one();
    }
    Ok(m)
}
