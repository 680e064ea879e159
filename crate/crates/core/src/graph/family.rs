use super::{bits, Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A named graph family with its parameters.
///
/// The textual form is `name:params`, e.g. `path:5`, `star:3`,
/// `complete_bipartite:2,3` or `corona_cycle_k1:4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FamilySpec {
    /// `P_n` on `n >= 1` vertices.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_{1,n}` with `n >= 1` leaves; `n + 1` vertices, vertex 0 is the center.
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `C_n ∘ K_1`.
    CoronaCycleK1(usize),
    /// `K_n ∘ K_1`.
    CoronaCompleteK1(usize),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Star(_) => "star",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::CoronaCycleK1(_) => "corona_cycle_k1",
            FamilySpec::CoronaCompleteK1(_) => "corona_complete_k1",
        }
    }

    /// Vertex count of the built graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::Star(k) => k + 1,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::CoronaCycleK1(n) | FamilySpec::CoronaCompleteK1(n) => 2 * n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |c: &str| Err(Error::invalid(format!("{self}: {c}")));
        match *self {
            FamilySpec::Path(n) if n < 1 => return fail("path needs n >= 1"),
            FamilySpec::Cycle(n) if n < 3 => return fail("cycle needs n >= 3"),
            FamilySpec::Star(k) if k < 1 => return fail("star needs at least 1 leaf"),
            FamilySpec::Complete(n) if n < 1 => return fail("complete needs n >= 1"),
            FamilySpec::CompleteBipartite(a, b) if a < 1 || b < 1 => {
                return fail("complete_bipartite needs a, b >= 1")
            }
            FamilySpec::CoronaCycleK1(n) if n < 3 => return fail("corona_cycle_k1 needs n >= 3"),
            FamilySpec::CoronaCompleteK1(n) if n < 1 => {
                return fail("corona_complete_k1 needs n >= 1")
            }
            _ => {}
        }
        if self.order() > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "{self} has {} vertices, more than {MAX_VERTICES}",
                self.order()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CoronaCycleK1(n)
            | FamilySpec::CoronaCompleteK1(n) => write!(f, "{}:{n}", self.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("family `{s}` must look like name:params")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("family `{s}`: `{p}` is not a count")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(Error::invalid(format!("family `{name}` takes one parameter"))),
        };
        let spec = match name.trim() {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "star" => FamilySpec::Star(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "corona_cycle_k1" => FamilySpec::CoronaCycleK1(one()?),
            "corona_complete_k1" => FamilySpec::CoronaCompleteK1(one()?),
            "complete_bipartite" => match nums.as_slice() {
                [a, b] => FamilySpec::CompleteBipartite(*a, *b),
                _ => return Err(Error::invalid("complete_bipartite takes two parameters a,b")),
            },
            other => return Err(Error::invalid(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl TryFrom<String> for FamilySpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FamilySpec> for String {
    fn from(f: FamilySpec) -> Self {
        f.to_string()
    }
}

/// Builds the family member in its canonical vertex order.
///
/// Paths and cycles number their vertices consecutively (the cycle closes
/// `n-1 -> 0`), the star center is vertex 0, `K_{a,b}` puts the `a`-side first,
/// and coronas list the base graph first with pendant `n + i` attached to `i`.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Path(n) => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(n) => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star(k) => {
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        FamilySpec::Complete(n) => {
            let mut g = Graph::empty(n)?;
            for v in 0..n {
                g.adj[v] = super::low_mask(n) & !(1 << v);
            }
            Ok(g)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            let mut g = Graph::empty(a + b)?;
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        FamilySpec::CoronaCycleK1(n) => corona(&build_family(&FamilySpec::Cycle(n))?, &Graph::empty(1)?),
        FamilySpec::CoronaCompleteK1(n) => {
            corona(&build_family(&FamilySpec::Complete(n))?, &Graph::empty(1)?)
        }
    }
}

/// Corona `J ∘ K`: one copy of `J` on vertices `0..j`, then `j` copies of `K`,
/// copy `i` occupying `j + i*k .. j + (i+1)*k` with every vertex joined to `i`.
pub fn corona(base: &Graph, fiber: &Graph) -> Result<Graph> {
    let j = base.n();
    let k = fiber.n();
    if j == 0 {
        return Err(Error::invalid("corona needs a base graph with at least one vertex"));
    }
    let mut g = Graph::empty(j * (1 + k))?;
    for (u, v) in base.edges() {
        g.add_edge(u, v)?;
    }
    let fiber_edges = fiber.edges();
    for i in 0..j {
        let off = j + i * k;
        for x in 0..k {
            g.add_edge(i, off + x)?;
        }
        for &(x, y) in &fiber_edges {
            g.add_edge(off + x, off + y)?;
        }
    }
    Ok(g)
}

/// Disjoint union with the vertices of `b` shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut g = Graph::empty(a.n() + b.n())?;
    let shift = a.n();
    g.adj[..shift].copy_from_slice(a.adjacency());
    for v in 0..b.n() {
        g.adj[shift + v] = bits(b.neighbors(v)).fold(0, |acc, u| acc | 1 << (shift + u));
    }
    Ok(g)
}

/// Disjoint union of `g1` and `g2` plus the single edge `{u, g1.n() + v}`.
pub fn bridge_join(g1: &Graph, u: usize, g2: &Graph, v: usize) -> Result<Graph> {
    if u >= g1.n() {
        return Err(Error::invalid(format!("bridge endpoint {u} outside the first graph (n={})", g1.n())));
    }
    if v >= g2.n() {
        return Err(Error::invalid(format!("bridge endpoint {v} outside the second graph (n={})", g2.n())));
    }
    let mut g = disjoint_union(g1, g2)?;
    g.add_edge(u, g1.n() + v)?;
    Ok(g)
}
