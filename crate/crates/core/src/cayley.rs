//! Cayley graphs, Cayley digraphs and triangle censuses.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{Ball, Group};
use crate::set::SymmetricSet;

/// Default cap on materialised vertices.
pub const DEFAULT_VERTEX_BUDGET: usize = 200_000;

/// `Δ_S(s) = |S ∩ sS|` when `s ∈ S`, else 0: the number of triangles of
/// Cay(G,S) through the vertices `1` and `s`.
pub fn triangle_count<G: Group>(group: &G, set: &SymmetricSet<G::Elem>, s: &G::Elem) -> usize {
    if !set.contains(s) {
        return 0;
    }
    let si = group.inv(s);
    set.elems().iter().filter(|t| set.contains(&group.mul(&si, t))).count()
}

/// Triangle counts for every element of a set, in set order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census<E> {
    pub entries: Vec<(E, usize)>,
}

impl<E: Clone + Eq + std::hash::Hash> Census<E> {
    pub fn get(&self, e: &E) -> Option<usize> {
        self.entries.iter().find(|(x, _)| x == e).map(|(_, c)| *c)
    }

    pub fn values(&self) -> Vec<usize> {
        self.entries.iter().map(|(_, c)| *c).collect()
    }

    pub fn to_map(&self) -> HashMap<E, usize> {
        self.entries.iter().cloned().collect()
    }

    /// `{"element": count}` in set order.
    pub fn to_json<G: Group<Elem = E>>(&self, group: &G) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.entries.iter().map(|(e, c)| (group.format(e), serde_json::Value::from(*c))).collect();
        serde_json::Value::Object(map)
    }
}

/// Census of `set` computed directly from the definition.
pub fn census<G: Group>(group: &G, set: &SymmetricSet<G::Elem>) -> Census<G::Elem> {
    Census { entries: set.elems().iter().map(|s| (s.clone(), triangle_count(group, set, s))).collect() }
}

/// A materialised Cayley graph or digraph. Vertices are group elements;
/// `(g, h)` is an arc iff `g^-1 h ∈ S`. Arc colours index into `colours`:
/// inverse-pair classes for graphs, single elements for digraphs.
#[derive(Clone, Debug)]
pub struct CayleyGraph<E> {
    pub vertices: Vec<E>,
    index: HashMap<E, usize>,
    /// `out[v]` lists `(w, colour)`.
    pub out: Vec<Vec<(u32, u32)>>,
    pub colours: Vec<E>,
    pub directed: bool,
    /// True when the vertex set is a ball in an infinite (or larger) group.
    pub partial: bool,
    /// Vertices with a neighbour outside the vertex set.
    pub boundary: Vec<bool>,
}

impl<E: Clone + Eq + std::hash::Hash> CayleyGraph<E> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn edge_count(&self) -> usize {
        let arcs: usize = self.out.iter().map(Vec::len).sum();
        if self.directed {
            arcs
        } else {
            arcs / 2
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].iter().any(|&(w, _)| w as usize == v)
    }

    /// Adjacency lists without colours.
    pub fn neighbours(&self) -> Vec<Vec<u32>> {
        self.out.iter().map(|l| l.iter().map(|&(w, _)| w).collect()).collect()
    }

    /// True iff the connection set meets its inverse (only meaningful for
    /// digraphs).
    pub fn has_bigons(&self) -> bool {
        (0..self.len()).any(|u| self.out[u].iter().any(|&(v, _)| self.has_arc(v as usize, u)))
    }

    pub fn to_json<G: Group<Elem = E>>(&self, group: &G) -> GraphJson {
        let mut edges = Vec::new();
        for (u, l) in self.out.iter().enumerate() {
            for &(v, c) in l {
                if self.directed || u < v as usize {
                    edges.push([u as u32, v, c]);
                }
            }
        }
        GraphJson {
            directed: self.directed,
            partial: self.partial,
            vertices: self.vertices.iter().map(|e| group.format(e)).collect(),
            colours: self.colours.iter().map(|e| group.format(e)).collect(),
            edges,
            boundary: (0..self.len()).filter(|&i| self.boundary[i]).collect(),
        }
    }

    /// Graphviz DOT; edges carry their colour class as a label.
    pub fn to_dot<G: Group<Elem = E>>(&self, group: &G) -> String {
        let mut s = String::new();
        let (kw, arrow) = if self.directed { ("digraph", "->") } else { ("graph", "--") };
        let _ = writeln!(s, "{kw} cayley {{");
        for (i, v) in self.vertices.iter().enumerate() {
            let extra = if self.boundary[i] { ", style=dashed" } else { "" };
            let _ = writeln!(s, "  {i} [label=\"{}\"{extra}];", escape(&group.format(v)));
        }
        for (u, l) in self.out.iter().enumerate() {
            for &(v, c) in l {
                if self.directed || u < v as usize {
                    let label = escape(&group.format(&self.colours[c as usize]));
                    let _ = writeln!(s, "  {u} {arrow} {v} [label=\"{label}\"];");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// JSON adjacency export.
#[derive(Clone, Debug, Serialize)]
pub struct GraphJson {
    pub directed: bool,
    pub partial: bool,
    pub vertices: Vec<String>,
    pub colours: Vec<String>,
    /// `[u, v, colour]`.
    pub edges: Vec<[u32; 3]>,
    pub boundary: Vec<usize>,
}

fn build<G: Group>(
    group: &G,
    set: &SymmetricSet<G::Elem>,
    radius: Option<usize>,
    max_vertices: usize,
    directed: bool,
) -> Result<CayleyGraph<G::Elem>> {
    if !directed && !set.is_symmetric() {
        return Err(Error::InvalidSet("an undirected Cayley graph needs a symmetric set".into()));
    }
    let (vertices, partial) = match radius {
        Some(r) => {
            let ball = Ball::new(group, set.elems(), r, max_vertices)?;
            let complete = group.order().is_some_and(|n| n == ball.len());
            (ball.elements().cloned().collect::<Vec<_>>(), !complete)
        }
        None => {
            let all = group
                .elements()
                .ok_or_else(|| Error::ScopeRequired(format!("{} is infinite; pass a ball radius", group.name())))?;
            if all.len() > max_vertices {
                return Err(Error::BudgetExhausted(format!("{} vertices exceed the budget", all.len())));
            }
            (all, false)
        }
    };
    let index: HashMap<G::Elem, usize> = vertices.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    // Colour of each connection-set element.
    let (colours, colour_of): (Vec<G::Elem>, Vec<u32>) = if directed {
        (set.elems().to_vec(), (0..set.len() as u32).collect())
    } else {
        let classes = set.inverse_classes(group);
        let reps: Vec<G::Elem> = classes.iter().map(|(s, _)| s.clone()).collect();
        let col = set
            .elems()
            .iter()
            .map(|s| {
                let si = group.inv(s);
                classes.iter().position(|(a, _)| a == s || *a == si).unwrap() as u32
            })
            .collect();
        (reps, col)
    };
    let mut out = vec![Vec::with_capacity(set.len()); vertices.len()];
    let mut boundary = vec![false; vertices.len()];
    for (u, g) in vertices.iter().enumerate() {
        for (k, s) in set.elems().iter().enumerate() {
            match index.get(&group.mul(g, s)) {
                Some(&v) => out[u].push((v as u32, colour_of[k])),
                None => boundary[u] = true,
            }
        }
    }
    Ok(CayleyGraph { vertices, index, out, colours, directed, partial, boundary })
}

/// Cay(G,S) for symmetric `S`, on all of `G` (finite) or on the ball of
/// radius `radius` for `S`.
pub fn build_graph<G: Group>(
    group: &G,
    set: &SymmetricSet<G::Elem>,
    radius: Option<usize>,
    max_vertices: usize,
) -> Result<CayleyGraph<G::Elem>> {
    build(group, set, radius, max_vertices, false)
}

/// The Cayley digraph for an arbitrary set; see [`build_graph`].
pub fn build_digraph<G: Group>(
    group: &G,
    set: &SymmetricSet<G::Elem>,
    radius: Option<usize>,
    max_vertices: usize,
) -> Result<CayleyGraph<G::Elem>> {
    build(group, set, radius, max_vertices, true)
}
