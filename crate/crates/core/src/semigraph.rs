//! The semi-graph data model.
//!
//! A semi-graph is a finite loopless simple graph together with *semi-edges*:
//! elements attached to exactly one vertex. Each vertex carries at most one
//! semi-edge. The degree of a vertex counts incident edges plus its semi-edge.
//!
//! Values are immutable once built. Mutating operations ([`SemiGraph::join`],
//! [`SemiGraph::closure_to_graph`], ...) return fresh values, so solvers can
//! share graphs freely across threads.

use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};

pub type Vertex = usize;

/// The unit of colouring and matching: an edge `uv` or a semi-edge `(u)`.
///
/// Edges are kept canonical (`u < v`); the derived order sorts all edges
/// lexicographically before all semi-edges, which is the canonical element
/// order used by every deterministic search in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Edge(Vertex, Vertex),
    SemiEdge(Vertex),
}

impl Element {
    pub fn edge(u: Vertex, v: Vertex) -> Element {
        if u <= v {
            Element::Edge(u, v)
        } else {
            Element::Edge(v, u)
        }
    }

    pub fn semi(u: Vertex) -> Element {
        Element::SemiEdge(u)
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, Element::Edge(..))
    }

    pub fn is_semi_edge(&self) -> bool {
        matches!(self, Element::SemiEdge(_))
    }

    /// Vertices covered by this element (two for an edge, one for a semi-edge).
    pub fn endpoints(&self) -> impl Iterator<Item = Vertex> {
        let (a, b) = match *self {
            Element::Edge(u, v) => (u, Some(v)),
            Element::SemiEdge(u) => (u, None),
        };
        std::iter::once(a).chain(b)
    }

    pub fn is_incident_to(&self, v: Vertex) -> bool {
        match *self {
            Element::Edge(a, b) => a == v || b == v,
            Element::SemiEdge(a) => a == v,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Edge(u, v) => write!(f, "{u}-{v}"),
            Element::SemiEdge(u) => write!(f, "({u})"),
        }
    }
}

// Serialized as [u, v] for an edge and [u] for a semi-edge: compact and
// re-parseable by certificate checkers outside this crate.
impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Element::Edge(u, v) => {
                let mut seq = serializer.serialize_seq(Some(2))?;
                seq.serialize_element(&u)?;
                seq.serialize_element(&v)?;
                seq.end()
            }
            Element::SemiEdge(u) => {
                let mut seq = serializer.serialize_seq(Some(1))?;
                seq.serialize_element(&u)?;
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ElVisitor;
        impl<'de> Visitor<'de> for ElVisitor {
            type Value = Element;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array [u, v] (edge) or [u] (semi-edge)")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Element, A::Error> {
                let first: Vertex = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                match seq.next_element::<Vertex>()? {
                    Some(second) => {
                        if seq.next_element::<Vertex>()?.is_some() {
                            return Err(de::Error::invalid_length(3, &self));
                        }
                        Ok(Element::edge(first, second))
                    }
                    None => Ok(Element::SemiEdge(first)),
                }
            }
        }
        deserializer.deserialize_seq(ElVisitor)
    }
}

/// A named attachment point. Compositions wire gadgets together through
/// ports rather than positional conventions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PortLabel {
    pub name: String,
    pub vertex: Vertex,
}

/// Join target for [`SemiGraph::join`]: a second semi-edge or a bare vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinTarget {
    SemiEdge(Vertex),
    Vertex(Vertex),
}

/// An immutable semi-graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    semi: Vec<Vertex>,
    ports: Vec<PortLabel>,
    // Derived, cached at construction: canonical element list and, per
    // vertex, the ids of incident elements (ascending).
    elements: Vec<Element>,
    incident: Vec<Vec<u32>>,
}

impl SemiGraph {
    pub fn builder(n: usize) -> SemiGraphBuilder {
        SemiGraphBuilder::new(n)
    }

    /// Empty graph on `n` isolated vertices.
    pub fn empty(n: usize) -> SemiGraph {
        SemiGraphBuilder::new(n).build().expect("empty graph is valid")
    }

    fn from_parts(
        n: usize,
        mut edges: Vec<(Vertex, Vertex)>,
        mut semi: Vec<Vertex>,
        ports: Vec<PortLabel>,
    ) -> SemiGraph {
        edges.sort_unstable();
        semi.sort_unstable();
        let mut elements = Vec::with_capacity(edges.len() + semi.len());
        elements.extend(edges.iter().map(|&(u, v)| Element::Edge(u, v)));
        elements.extend(semi.iter().map(|&u| Element::SemiEdge(u)));
        let mut incident = vec![Vec::new(); n];
        for (id, el) in elements.iter().enumerate() {
            for v in el.endpoints() {
                incident[v].push(id as u32);
            }
        }
        SemiGraph { n, edges, semi, ports, elements, incident }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn semi_count(&self) -> usize {
        self.semi.len()
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Semi-edge carriers in ascending order.
    pub fn semi(&self) -> &[Vertex] {
        &self.semi
    }

    /// All elements in canonical order: edges first, then semi-edges.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, id: usize) -> Element {
        self.elements[id]
    }

    pub fn element_id(&self, el: Element) -> Option<usize> {
        self.elements.binary_search(&el).ok()
    }

    pub fn contains_element(&self, el: Element) -> bool {
        self.element_id(el).is_some()
    }

    /// Ids of elements incident to `v`, ascending.
    pub fn incident_elements(&self, v: Vertex) -> &[u32] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn has_semi(&self, v: Vertex) -> bool {
        self.semi.binary_search(&v).is_ok()
    }

    /// Edge-neighbours of `v` (semi-edges have no second endpoint).
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incident[v].iter().filter_map(move |&id| match self.elements[id as usize] {
            Element::Edge(a, b) => Some(if a == v { b } else { a }),
            Element::SemiEdge(_) => None,
        })
    }

    pub fn is_graph(&self) -> bool {
        self.semi.is_empty()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    pub fn ports(&self) -> &[PortLabel] {
        &self.ports
    }

    pub fn port(&self, name: &str) -> Result<Vertex> {
        self.ports
            .iter()
            .find(|p| p.name == name)
            .map(|p| p.vertex)
            .ok_or_else(|| GraphError::MissingPort(name.to_string()))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// New graph with the edge `uv` added.
    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<SemiGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            let (a, b) = if u <= v { (u, v) } else { (v, u) };
            return Err(GraphError::DuplicateEdge(a, b));
        }
        let mut edges = self.edges.clone();
        edges.push(if u <= v { (u, v) } else { (v, u) });
        Ok(SemiGraph::from_parts(self.n, edges, self.semi.clone(), self.ports.clone()))
    }

    /// New graph with a semi-edge added at `v`.
    pub fn add_semi_edge(&self, v: Vertex) -> Result<SemiGraph> {
        self.check_vertex(v)?;
        if self.has_semi(v) {
            return Err(GraphError::DuplicateSemiEdge(v));
        }
        let mut semi = self.semi.clone();
        semi.push(v);
        Ok(SemiGraph::from_parts(self.n, self.edges.clone(), semi, self.ports.clone()))
    }

    /// New graph with one more (isolated) vertex; returns it and the graph.
    pub fn add_vertex(&self) -> (SemiGraph, Vertex) {
        let g = SemiGraph::from_parts(
            self.n + 1,
            self.edges.clone(),
            self.semi.clone(),
            self.ports.clone(),
        );
        (g, self.n)
    }

    /// Attach a named port to a vertex currently carrying a semi-edge.
    pub fn with_port(&self, name: &str, v: Vertex) -> Result<SemiGraph> {
        self.check_vertex(v)?;
        if !self.has_semi(v) {
            return Err(GraphError::MissingSemiEdge(v));
        }
        if self.ports.iter().any(|p| p.name == name) {
            return Err(GraphError::DuplicatePort(name.to_string()));
        }
        let mut ports = self.ports.clone();
        ports.push(PortLabel { name: name.to_string(), vertex: v });
        Ok(SemiGraph::from_parts(self.n, self.edges.clone(), self.semi.clone(), ports))
    }

    /// Drop all port labels.
    pub fn without_ports(&self) -> SemiGraph {
        SemiGraph::from_parts(self.n, self.edges.clone(), self.semi.clone(), Vec::new())
    }

    /// Join a semi-edge with another semi-edge or with a bare vertex: the
    /// semi-edges involved disappear and an ordinary edge appears between the
    /// carrier vertices.
    pub fn join(&self, a: Element, b: JoinTarget) -> Result<SemiGraph> {
        let u = match a {
            Element::SemiEdge(u) => u,
            other => return Err(GraphError::NotASemiEdge(other)),
        };
        self.check_vertex(u)?;
        if !self.has_semi(u) {
            return Err(GraphError::MissingSemiEdge(u));
        }
        let (v, consume_v) = match b {
            JoinTarget::SemiEdge(v) => {
                self.check_vertex(v)?;
                if !self.has_semi(v) {
                    return Err(GraphError::MissingSemiEdge(v));
                }
                (v, true)
            }
            JoinTarget::Vertex(v) => {
                self.check_vertex(v)?;
                (v, false)
            }
        };
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            let (a, b) = if u <= v { (u, v) } else { (v, u) };
            return Err(GraphError::DuplicateEdge(a, b));
        }
        let mut semi: Vec<Vertex> = self.semi.iter().copied().filter(|&s| s != u).collect();
        if consume_v {
            semi.retain(|&s| s != v);
        }
        let mut edges = self.edges.clone();
        edges.push(if u <= v { (u, v) } else { (v, u) });
        Ok(SemiGraph::from_parts(self.n, edges, semi, self.ports.clone()))
    }

    /// Close all semi-edges into ordinary edges according to `pairing`.
    ///
    /// The pairing lists disjoint pairs of semi-edge carriers to be joined.
    /// Any leftover semi-edges (there must be 0, 1 or 3 of them) are joined
    /// to one freshly added vertex.
    pub fn closure_to_graph(&self, pairing: &[(Vertex, Vertex)]) -> Result<SemiGraph> {
        let mut used = vec![false; self.n];
        let mut g = self.clone();
        for &(a, b) in pairing {
            for v in [a, b] {
                self.check_vertex(v)?;
                if !self.has_semi(v) {
                    return Err(GraphError::BadPairing(format!("vertex {v} has no semi-edge")));
                }
                if used[v] {
                    return Err(GraphError::BadPairing(format!("vertex {v} paired twice")));
                }
                used[v] = true;
            }
            g = g.join(Element::SemiEdge(a), JoinTarget::SemiEdge(b))?;
        }
        let leftovers: Vec<Vertex> = g.semi().to_vec();
        match leftovers.len() {
            0 => Ok(g),
            1 | 3 => {
                let (mut g, hub) = g.add_vertex();
                for s in leftovers {
                    g = g.join(Element::SemiEdge(s), JoinTarget::Vertex(hub))?;
                }
                Ok(g)
            }
            left => Err(GraphError::BadLeftoverCount { left }),
        }
    }

    /// Delete vertices, renumbering the survivors densely (order preserved).
    /// Every edge from a survivor to a deleted vertex becomes a semi-edge at
    /// the survivor; a survivor that would end up with two semi-edges is an
    /// error. Ports on deleted vertices are dropped.
    pub fn delete_vertices(&self, verts: &[Vertex]) -> Result<SemiGraph> {
        for &v in verts {
            self.check_vertex(v)?;
        }
        let mut gone = vec![false; self.n];
        for &v in verts {
            gone[v] = true;
        }
        let mut remap = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone[v] {
                remap[v] = next;
                next += 1;
            }
        }
        let mut edges = Vec::new();
        let mut semi: Vec<Vertex> =
            self.semi.iter().filter(|&&s| !gone[s]).map(|&s| remap[s]).collect();
        for &(u, v) in &self.edges {
            match (gone[u], gone[v]) {
                (false, false) => edges.push((remap[u], remap[v])),
                (false, true) => semi.push(remap[u]),
                (true, false) => semi.push(remap[v]),
                (true, true) => {}
            }
        }
        semi.sort_unstable();
        if let Some(w) = semi.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateSemiEdge(w[0]));
        }
        let ports = self
            .ports
            .iter()
            .filter(|p| !gone[p.vertex])
            .map(|p| PortLabel { name: p.name.clone(), vertex: remap[p.vertex] })
            .collect();
        Ok(SemiGraph::from_parts(next, edges, semi, ports))
    }

    /// New graph with the listed edges removed (endpoints keep their
    /// reduced degree; no semi-edges are introduced).
    pub fn without_edges(&self, remove: &[(Vertex, Vertex)]) -> Result<SemiGraph> {
        let mut edges = self.edges.clone();
        for &(u, v) in remove {
            let (a, b) = if u <= v { (u, v) } else { (v, u) };
            match edges.iter().position(|&e| e == (a, b)) {
                Some(i) => {
                    edges.swap_remove(i);
                }
                None => return Err(GraphError::MissingEdge(a, b)),
            }
        }
        Ok(SemiGraph::from_parts(self.n, edges, self.semi.clone(), self.ports.clone()))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    /// Port names of `other` get the given prefix.
    pub fn disjoint_union(&self, other: &SemiGraph, port_prefix: &str) -> SemiGraph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        let mut semi = self.semi.clone();
        semi.extend(other.semi.iter().map(|&s| s + off));
        let mut ports = self.ports.clone();
        ports.extend(other.ports.iter().map(|p| PortLabel {
            name: format!("{port_prefix}{}", p.name),
            vertex: p.vertex + off,
        }));
        SemiGraph::from_parts(self.n + other.n, edges, semi, ports)
    }
}

/// Does `g` contain `h` as a semi-subgraph under the vertex map `embedding`
/// (`embedding[u]` is the image of `h`-vertex `u`)?
///
/// Every edge of `h` must map to an edge of `g`; every semi-edge of `h` must
/// map to a semi-edge or to some incident edge of `g`; and degrees must not
/// decrease under the embedding. Violations yield `false`; only an
/// out-of-range or non-injective map is an error.
pub fn is_semi_subgraph(h: &SemiGraph, g: &SemiGraph, embedding: &[Vertex]) -> Result<bool> {
    if embedding.len() != h.n() {
        return Err(GraphError::BadEmbedding(format!(
            "embedding has {} entries for {} vertices",
            embedding.len(),
            h.n()
        )));
    }
    let mut seen = vec![false; g.n()];
    for &img in embedding {
        if img >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: img, n: g.n() });
        }
        if seen[img] {
            return Err(GraphError::BadEmbedding(format!("vertex {img} is hit twice")));
        }
        seen[img] = true;
    }
    for &(u, v) in h.edges() {
        if !g.has_edge(embedding[u], embedding[v]) {
            return Ok(false);
        }
    }
    for &s in h.semi() {
        let img = embedding[s];
        if !g.has_semi(img) && g.neighbours(img).next().is_none() {
            return Ok(false);
        }
    }
    for u in 0..h.n() {
        if g.degree(embedding[u]) < h.degree(u) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builder for [`SemiGraph`]. Single-owner; `build` validates the invariants
/// (no loops, no parallel edges, at most one semi-edge per vertex, ports on
/// semi-edge carriers).
#[derive(Debug, Clone)]
pub struct SemiGraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    semi: Vec<Vertex>,
    ports: Vec<PortLabel>,
}

impl SemiGraphBuilder {
    pub fn new(n: usize) -> SemiGraphBuilder {
        SemiGraphBuilder { n, edges: Vec::new(), semi: Vec::new(), ports: Vec::new() }
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let e = if u <= v { (u, v) } else { (v, u) };
        if self.edges.contains(&e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        self.edges.push(e);
        Ok(self)
    }

    pub fn edges<I: IntoIterator<Item = (Vertex, Vertex)>>(&mut self, it: I) -> Result<&mut Self> {
        for (u, v) in it {
            self.edge(u, v)?;
        }
        Ok(self)
    }

    pub fn semi_edge(&mut self, v: Vertex) -> Result<&mut Self> {
        self.check_vertex(v)?;
        if self.semi.contains(&v) {
            return Err(GraphError::DuplicateSemiEdge(v));
        }
        self.semi.push(v);
        Ok(self)
    }

    pub fn port(&mut self, name: &str, v: Vertex) -> Result<&mut Self> {
        self.check_vertex(v)?;
        if self.ports.iter().any(|p| p.name == name) {
            return Err(GraphError::DuplicatePort(name.to_string()));
        }
        self.ports.push(PortLabel { name: name.to_string(), vertex: v });
        Ok(self)
    }

    pub fn build(&self) -> Result<SemiGraph> {
        for p in &self.ports {
            if !self.semi.contains(&p.vertex) {
                return Err(GraphError::MissingSemiEdge(p.vertex));
            }
        }
        Ok(SemiGraph::from_parts(
            self.n,
            self.edges.clone(),
            self.semi.clone(),
            self.ports.clone(),
        ))
    }
}
