//! The building blocks and their composition: the Petersen graph, the
//! gadgets `X` (Petersen minus two adjacent vertices) and `Y` (two copies of
//! `X` glued through a junction vertex), a catalog of bipartite cubic graphs,
//! path-removal gadgets, the validated five-port `Z` contract, and the
//! chained composition that produces cubic graphs from all of the above.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::colouring;
use crate::error::{GraphError, Result};
use crate::invariants::{self, Girth};
use crate::measure::BudgetMeter;
use crate::semigraph::{Element, SemiGraph, Vertex};

/// A semi-graph with named ports (semi-edge attachment points).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: SemiGraph,
}

impl Gadget {
    pub fn new(graph: SemiGraph) -> Result<Gadget> {
        for p in graph.ports() {
            if !graph.has_semi(p.vertex) {
                return Err(GraphError::MissingSemiEdge(p.vertex));
            }
        }
        Ok(Gadget { graph })
    }

    pub fn port(&self, name: &str) -> Result<Vertex> {
        self.graph.port(name)
    }

    pub fn port_count(&self) -> usize {
        self.graph.ports().len()
    }
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`
/// (`5+i ~ 5+((i+2) mod 5)`), spokes `i ~ i+5`.
pub fn petersen() -> SemiGraph {
    let mut b = SemiGraph::builder(10);
    for i in 0..5 {
        b.edge(i, (i + 1) % 5).unwrap();
        b.edge(5 + i, 5 + ((i + 2) % 5)).unwrap();
        b.edge(i, 5 + i).unwrap();
    }
    b.build().expect("Petersen construction is valid")
}

/// The gadget `X`: the Petersen graph with the two adjacent vertices 0 and 1
/// removed and the dangling edge ends turned into semi-edges. Ports, in the
/// renumbered graph: `u0` and `u1` on the surviving pentagram, `v0` and `v1`
/// on the surviving outer path.
pub fn gadget_x() -> Gadget {
    let x = petersen()
        .delete_vertices(&[0, 1])
        .expect("each surviving vertex loses at most one edge");
    // survivors 2..10 renumber to 0..8: old 2 -> 0, 4 -> 2, 5 -> 3, 6 -> 4
    let x = x
        .with_port("u0", 4)
        .and_then(|g| g.with_port("v0", 0))
        .and_then(|g| g.with_port("u1", 3))
        .and_then(|g| g.with_port("v1", 2))
        .expect("port vertices carry semi-edges");
    Gadget::new(x).expect("X is a valid gadget")
}

/// The gadget `Y`: two copies of `X` plus a junction vertex `x`, wired
/// `leftX.u1 - x`, `leftX.v1 - rightX.v0`, `x - rightX.u0`, with a fresh
/// semi-edge at `x`. Ports: `(u0, v0, x, u1, v1)` = (left `u0`, left `v0`,
/// `x`, right `u1`, right `v1`).
pub fn gadget_y() -> Gadget {
    let x = gadget_x().graph;
    let both = x.disjoint_union(&x, "r_");
    let left_u1 = both.port("u1").unwrap();
    let left_v1 = both.port("v1").unwrap();
    let right_v0 = both.port("r_v0").unwrap();
    let right_u0 = both.port("r_u0").unwrap();
    let (g, xv) = both.add_vertex();
    let g = g
        .join(Element::semi(left_u1), crate::semigraph::JoinTarget::Vertex(xv))
        .and_then(|g| {
            g.join(
                Element::semi(left_v1),
                crate::semigraph::JoinTarget::SemiEdge(right_v0),
            )
        })
        .and_then(|g| g.join(Element::semi(right_u0), crate::semigraph::JoinTarget::Vertex(xv)))
        .and_then(|g| g.add_semi_edge(xv))
        .expect("Y wiring is legal");
    let u0 = g.port("u0").unwrap();
    let v0 = g.port("v0").unwrap();
    let u1 = g.port("r_u1").unwrap();
    let v1 = g.port("r_v1").unwrap();
    let g = g.without_ports();
    let g = g
        .with_port("u0", u0)
        .and_then(|g| g.with_port("v0", v0))
        .and_then(|g| g.with_port("x", xv))
        .and_then(|g| g.with_port("u1", u1))
        .and_then(|g| g.with_port("v1", v1))
        .expect("Y ports carry semi-edges");
    Gadget::new(g).expect("Y is a valid gadget")
}

/// Connected bipartite cubic graphs of girth 4, 6 and 8: K(3,3), the Heawood
/// graph (incidence graph of the Fano plane) and the Tutte-Coxeter graph
/// (pairs versus perfect matchings of K6).
pub fn catalog_bipartite_cubic(girth: usize) -> Result<SemiGraph> {
    match girth {
        4 => {
            let mut b = SemiGraph::builder(6);
            for u in 0..3 {
                for v in 3..6 {
                    b.edge(u, v).unwrap();
                }
            }
            Ok(b.build().unwrap())
        }
        6 => {
            // points 0..7, lines 7..14; line i covers {i, i+1, i+3} mod 7
            let mut b = SemiGraph::builder(14);
            for i in 0..7 {
                for j in [i, (i + 1) % 7, (i + 3) % 7] {
                    b.edge(j, 7 + i).unwrap();
                }
            }
            Ok(b.build().unwrap())
        }
        8 => {
            // pairs of {0..6} versus the 15 perfect matchings of K6
            let mut pairs = Vec::new();
            for a in 0..6 {
                for b in a + 1..6 {
                    pairs.push((a, b));
                }
            }
            let matchings = k6_matchings();
            let mut b = SemiGraph::builder(30);
            for (mi, m) in matchings.iter().enumerate() {
                for p in m {
                    let pi = pairs.iter().position(|q| q == p).unwrap();
                    b.edge(pi, 15 + mi).unwrap();
                }
            }
            Ok(b.build().unwrap())
        }
        g => Err(GraphError::Unsupported(format!(
            "no built-in bipartite cubic graph of girth {g}; import one instead"
        ))),
    }
}

fn k6_matchings() -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rem.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = rem[0];
        for &b in &rem[1..] {
            let rest: Vec<usize> = rem.iter().copied().filter(|&x| x != a && x != b).collect();
            cur.push((a, b));
            rec(rest, cur, out);
            cur.pop();
        }
    }
    rec((0..6).collect(), &mut cur, &mut out);
    out
}

/// Remove the path `u-v-w` from a cubic graph, leaving semi-edges at the
/// dangling ends. The result must have exactly five semi-edges (girth >= 5
/// hosts always do); its ports are named `s0..s4` in vertex order.
pub fn m_gadget(l: &SemiGraph, path: (Vertex, Vertex, Vertex)) -> Result<Gadget> {
    let (u, v, w) = path;
    if !l.is_cubic() {
        return Err(GraphError::NotCubic);
    }
    if u == v || v == w || u == w || !l.has_edge(u, v) || !l.has_edge(v, w) {
        return Err(GraphError::InvalidPath(u, v, w));
    }
    let mut g = l.delete_vertices(&[u, v, w])?;
    if g.semi_count() != 5 {
        return Err(GraphError::Contract(format!(
            "path removal left {} semi-edges instead of 5 (the path closes a triangle)",
            g.semi_count()
        )));
    }
    g = g.without_ports();
    for (i, &s) in g.semi().to_vec().iter().enumerate() {
        g = g.with_port(&format!("s{i}"), s)?;
    }
    Gadget::new(g)
}

pub const Z_PORTS: [&str; 5] = ["top1", "top2", "mid", "bot1", "bot2"];

/// Outcome of one `Z`-contract clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZClause {
    pub clause: String,
    pub pass: bool,
    pub detail: String,
}

/// Validation report for a candidate `Z` gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZValidation {
    pub pass: bool,
    pub clauses: Vec<ZClause>,
    /// Vertices that can host the single conflict of a total colouring whose
    /// five port colours form two disjoint equal pairs plus a fifth.
    pub conflict_candidates: Vec<Vertex>,
}

/// Do five port colours contain two disjoint equal pairs (values need not be
/// distinct)? Of the colour multisets over three colours only the 3+1+1
/// split lacks them.
pub fn has_two_disjoint_pairs(colours: &[u8; 5]) -> bool {
    let mut counts = [0usize; 4];
    for &c in colours {
        counts[c as usize] += 1;
    }
    let mut split: Vec<usize> = counts[1..].iter().copied().filter(|&c| c > 0).collect();
    split.sort_unstable_by(|a, b| b.cmp(a));
    split != [3, 1, 1]
}

/// Check every clause of the `Z` contract for `girth_param`: cubic, the five
/// named ports, not 3-edge-colourable, vertex resistance exactly 1,
/// semi-girth at least `girth_param`, and a one-conflict colouring whose
/// port colours form two equal pairs plus one.
pub fn validate_z(gadget: &Gadget, girth_param: usize) -> ZValidation {
    let g = &gadget.graph;
    let mut clauses = Vec::new();
    let mut push = |clause: &str, pass: bool, detail: String| {
        clauses.push(ZClause { clause: clause.to_string(), pass, detail });
        pass
    };

    let cubic = push("cubic", g.is_cubic(), format!("max degree {}", g.max_degree()));
    let ports_ok = Z_PORTS.iter().all(|p| g.port(p).is_ok());
    let ports_distinct = {
        let mut vs: Vec<_> = Z_PORTS.iter().filter_map(|p| g.port(p).ok()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == 5
    };
    push(
        "ports",
        ports_ok && ports_distinct && g.ports().len() == 5 && g.semi_count() == 5,
        format!("{} ports, {} semi-edges", g.ports().len(), g.semi_count()),
    );
    if !(cubic && ports_ok && ports_distinct) {
        return ZValidation { pass: false, clauses, conflict_candidates: Vec::new() };
    }

    let uncolourable = colouring::find_proper_colouring(g).is_none();
    push("not_colourable", uncolourable, String::new());

    let sg = invariants::semi_girth(g);
    push(
        "semi_girth",
        sg >= Girth::Finite(girth_param),
        format!("semi-girth {sg}, needs >= {girth_param}"),
    );

    // candidates: vertices admitting a single-conflict colouring with the
    // two-pair port pattern
    let port_vertices: [Vertex; 5] = [
        g.port("top1").unwrap(),
        g.port("top2").unwrap(),
        g.port("mid").unwrap(),
        g.port("bot1").unwrap(),
        g.port("bot2").unwrap(),
    ];
    let mut candidates = Vec::new();
    for w in 0..g.n() {
        if conflict_colouring_with_pattern(g, w, &port_vertices).is_some() {
            candidates.push(w);
        }
    }
    push(
        "port_pattern",
        !candidates.is_empty(),
        format!("{} candidate conflict vertices", candidates.len()),
    );

    // r_v = 1 follows: uncolourable rules out 0, a 1-conflict colouring
    // exists at any candidate
    let rv_one = uncolourable && !candidates.is_empty();
    push("vertex_resistance_one", rv_one, String::new());

    let pass = clauses.iter().all(|c| c.pass);
    ZValidation { pass, clauses, conflict_candidates: candidates }
}

/// First total colouring with conflicts exactly `{w}` whose port colours
/// form two disjoint equal pairs plus one.
pub(crate) fn conflict_colouring_with_pattern(
    g: &SemiGraph,
    w: Vertex,
    port_vertices: &[Vertex; 5],
) -> Option<colouring::EdgeColouring> {
    let mut found = None;
    colouring::enumerate_colourings_conflicts_within(
        g,
        &[w],
        &mut BudgetMeter::unlimited(),
        &mut |col| {
            let ports: [u8; 5] = std::array::from_fn(|i| {
                col.colour(Element::semi(port_vertices[i])).expect("total")
            });
            if !col.conflicts.is_empty() && has_two_disjoint_pairs(&ports) {
                found = Some(col.clone());
                false
            } else {
                true
            }
        },
    );
    found
}

/// A validated five-port gadget for composition: cubic, uncolourable,
/// resistance one, semi-girth at least `girth_param`, ports colourable in
/// the two-pair pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZContract {
    pub girth_param: usize,
    pub gadget: Gadget,
    pub conflict_candidates: Vec<Vertex>,
}

impl ZContract {
    pub fn new(gadget: Gadget, girth_param: usize) -> Result<ZContract> {
        let v = validate_z(&gadget, girth_param);
        if !v.pass {
            let failing: Vec<String> = v
                .clauses
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{} ({})", c.clause, c.detail))
                .collect();
            return Err(GraphError::Contract(failing.join("; ")));
        }
        Ok(ZContract { girth_param, gadget, conflict_candidates: v.conflict_candidates })
    }
}

/// The default `Z`: the gadget `Y` with its ports renamed
/// `(u0, v0, x, u1, v1) -> (top1, top2, mid, bot1, bot2)`, validated for
/// girth parameter 5.
pub fn z_default() -> ZContract {
    let y = gadget_y();
    let mapping = [("u0", "top1"), ("v0", "top2"), ("x", "mid"), ("u1", "bot1"), ("v1", "bot2")];
    let mut g = y.graph.clone().without_ports();
    for (from, to) in mapping {
        let v = y.port(from).expect("Y port");
        g = g.with_port(to, v).expect("semi-edge present");
    }
    ZContract::new(Gadget::new(g).expect("valid gadget"), 5)
        .expect("Y satisfies the five-port contract at girth parameter 5")
}

/// Parameters of a composition: `y_count` junction gadgets in the middle
/// strand, a top chain of `top_count` copies of `X`, and `y_count + 1`
/// bottom chains of `bottom_counts[i]` copies of `X`, between two copies of
/// the `Z` gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionPlan {
    pub y_count: usize,
    pub top_count: usize,
    pub bottom_counts: Vec<usize>,
    pub z: ZContract,
}

impl CompositionPlan {
    pub fn new(
        y_count: usize,
        top_count: usize,
        bottom_counts: Vec<usize>,
        z: ZContract,
    ) -> Result<CompositionPlan> {
        if bottom_counts.len() != y_count + 1 {
            return Err(GraphError::BadPlan(format!(
                "{} bottom chains for {} junction gadgets (need {})",
                bottom_counts.len(),
                y_count,
                y_count + 1
            )));
        }
        Ok(CompositionPlan { y_count, top_count, bottom_counts, z })
    }

    /// Vertex count of the composed graph.
    pub fn expected_order(&self) -> usize {
        let x_total: usize = self.top_count + self.bottom_counts.iter().sum::<usize>();
        2 * self.z.gadget.graph.n() + 8 * x_total + 18 * self.y_count
    }
}

/// Plan matching the target resistance and oddness: `y_count = r - 2`,
/// `top_count = omega - r` (so 2 + y_count + top_count = omega), bottom
/// chains one longer than the top chain, `Z` chosen for `girth_param`.
pub fn theorem_plan(r: usize, omega: usize, girth_param: usize) -> Result<CompositionPlan> {
    if r < 3 {
        return Err(GraphError::BadPlan(format!("resistance target {r} is below 3")));
    }
    if omega % 2 != 0 {
        return Err(GraphError::BadPlan(format!("oddness target {omega} must be even")));
    }
    if omega < r {
        return Err(GraphError::BadPlan(format!(
            "oddness target {omega} is below resistance target {r}"
        )));
    }
    if girth_param > 5 {
        return Err(GraphError::Unsupported(format!(
            "no built-in Z gadget reaches girth parameter {girth_param}; import one from sgf"
        )));
    }
    let a = r - 2;
    let b = omega - r;
    CompositionPlan::new(a, b, vec![b + 1; a + 1], z_default())
}

/// One placed gadget: its vertex map into the composed graph and, per port,
/// the boundary edge created when that port was joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub map: Vec<Vertex>,
    pub boundary: BTreeMap<String, (Vertex, Vertex)>,
}

impl Instance {
    fn place(offset: usize, n: usize) -> Instance {
        Instance { map: (offset..offset + n).collect(), boundary: BTreeMap::new() }
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.map[v]
    }
}

/// A composed cubic graph plus the bookkeeping the verification suites need:
/// where every gadget instance lives and which composed edge realises each
/// port.
#[derive(Debug, Clone)]
pub struct Composition {
    pub graph: SemiGraph,
    pub plan: CompositionPlan,
    pub left_z: Instance,
    pub right_z: Instance,
    pub top_xs: Vec<Instance>,
    pub ys: Vec<Instance>,
    pub bottom_chains: Vec<Vec<Instance>>,
    /// The middle-strand vertices, left to right.
    pub path_vertices: Vec<Vertex>,
}

impl Composition {
    /// The junction vertex of the `i`-th placed `Y` gadget.
    pub fn y_junction(&self, i: usize) -> Vertex {
        let x = gadget_y().port("x").expect("Y has an x port");
        self.ys[i].image(x)
    }
}

struct Assembler {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    semi: Vec<bool>,
}

impl Assembler {
    fn new() -> Assembler {
        Assembler { n: 0, edges: Vec::new(), semi: Vec::new() }
    }

    fn place(&mut self, g: &SemiGraph) -> usize {
        let off = self.n;
        self.n += g.n();
        self.semi.resize(self.n, false);
        for &(u, v) in g.edges() {
            self.edges.push((u + off, v + off));
        }
        for &s in g.semi() {
            self.semi[s + off] = true;
        }
        off
    }

    fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.semi.push(false);
        self.n - 1
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> (Vertex, Vertex) {
        let e = if u <= v { (u, v) } else { (v, u) };
        self.edges.push(e);
        e
    }

    fn join_semis(&mut self, a: Vertex, b: Vertex) -> Result<(Vertex, Vertex)> {
        for v in [a, b] {
            if !self.semi[v] {
                return Err(GraphError::MissingSemiEdge(v));
            }
        }
        self.semi[a] = false;
        self.semi[b] = false;
        Ok(self.add_edge(a, b))
    }

    fn join_semi_to_vertex(&mut self, s: Vertex, v: Vertex) -> Result<(Vertex, Vertex)> {
        if !self.semi[s] {
            return Err(GraphError::MissingSemiEdge(s));
        }
        self.semi[s] = false;
        Ok(self.add_edge(s, v))
    }

    fn build(self) -> Result<SemiGraph> {
        if let Some(v) = self.semi.iter().position(|&s| s) {
            return Err(GraphError::Contract(format!(
                "composition left a semi-edge at vertex {v}"
            )));
        }
        let mut b = SemiGraph::builder(self.n);
        b.edges(self.edges.iter().copied())?;
        b.build()
    }
}

/// Build the composed graph for `plan`.
///
/// Strand pairing is canonical: the first port of each pair joins the `u`
/// strand and the second the `v` strand, with `(u0, v0)` entering each `X`
/// from the left and `(u1, v1)` leaving it to the right. The two `Z` top
/// pairs bracket the top chain; the middle strand runs
/// `leftZ.mid - y_1 - ... - y_k - rightZ.mid` with each `y_i` also joined to
/// the `mid` port of a fresh `Y`; the bottom chains run between the `Z`
/// bottom pairs through the `Y` side pairs. With no junction gadgets the
/// `mid` ports join directly and a single bottom chain bridges the `Z`s.
pub fn compose(plan: &CompositionPlan) -> Result<Composition> {
    if plan.bottom_counts.len() != plan.y_count + 1 {
        return Err(GraphError::BadPlan("bottom chain count mismatch".into()));
    }
    let z = &plan.z.gadget.graph;
    let x = gadget_x().graph;
    let y = gadget_y().graph;
    let a = plan.y_count;
    let b = plan.top_count;

    let mut asm = Assembler::new();
    let mut left_z = Instance::place(asm.place(z), z.n());
    let mut right_z = Instance::place(asm.place(z), z.n());
    let mut top_xs: Vec<Instance> =
        (0..b).map(|_| Instance::place(asm.place(&x), x.n())).collect();
    let mut path_vertices = Vec::new();
    let mut ys = Vec::new();
    for _ in 0..a {
        path_vertices.push(asm.add_vertex());
        ys.push(Instance::place(asm.place(&y), y.n()));
    }
    let mut bottom_chains: Vec<Vec<Instance>> = plan
        .bottom_counts
        .iter()
        .map(|&len| (0..len).map(|_| Instance::place(asm.place(&x), x.n())).collect())
        .collect();

    // a strand end: the mapped port vertex plus where to note the join edge
    struct End(Vertex, Side, &'static str);
    let mut notes: Vec<(Side, &'static str, (Vertex, Vertex))> = Vec::new();

    {
        let zport = |inst: &Instance, name: &str| inst.image(z.port(name).expect("z port"));
        let xport = |inst: &Instance, name: &str| inst.image(x.port(name).expect("x port"));
        let yport = |inst: &Instance, name: &str| inst.image(y.port(name).expect("y port"));
        fn weld(
            asm: &mut Assembler,
            notes: &mut Vec<(Side, &'static str, (Vertex, Vertex))>,
            from: End,
            to: End,
        ) -> Result<()> {
            let e = asm.join_semis(from.0, to.0)?;
            notes.push((from.1, from.2, e));
            notes.push((to.1, to.2, e));
            Ok(())
        }

        // top chain: leftZ.(top1,top2) -> b copies of X -> rightZ.(top1,top2)
        let mut su = End(zport(&left_z, "top1"), Side::LeftZ, "top1");
        let mut sv = End(zport(&left_z, "top2"), Side::LeftZ, "top2");
        for (i, inst) in top_xs.iter().enumerate() {
            weld(&mut asm, &mut notes, su, End(xport(inst, "u0"), Side::TopX(i), "u0"))?;
            weld(&mut asm, &mut notes, sv, End(xport(inst, "v0"), Side::TopX(i), "v0"))?;
            su = End(xport(inst, "u1"), Side::TopX(i), "u1");
            sv = End(xport(inst, "v1"), Side::TopX(i), "v1");
        }
        weld(&mut asm, &mut notes, su, End(zport(&right_z, "top1"), Side::RightZ, "top1"))?;
        weld(&mut asm, &mut notes, sv, End(zport(&right_z, "top2"), Side::RightZ, "top2"))?;

        // middle strand
        if a == 0 {
            weld(
                &mut asm,
                &mut notes,
                End(zport(&left_z, "mid"), Side::LeftZ, "mid"),
                End(zport(&right_z, "mid"), Side::RightZ, "mid"),
            )?;
        } else {
            let e = asm.join_semi_to_vertex(zport(&left_z, "mid"), path_vertices[0])?;
            notes.push((Side::LeftZ, "mid", e));
            for i in 1..a {
                asm.add_edge(path_vertices[i - 1], path_vertices[i]);
            }
            let e = asm.join_semi_to_vertex(zport(&right_z, "mid"), path_vertices[a - 1])?;
            notes.push((Side::RightZ, "mid", e));
            for (i, inst) in ys.iter().enumerate() {
                let e = asm.join_semi_to_vertex(yport(inst, "x"), path_vertices[i])?;
                notes.push((Side::Y(i), "x", e));
            }
        }

        // bottom chains: leftZ -> chain 0 -> Y_1 -> chain 1 -> ... -> rightZ
        let mut pu = End(zport(&left_z, "bot1"), Side::LeftZ, "bot1");
        let mut pv = End(zport(&left_z, "bot2"), Side::LeftZ, "bot2");
        for chain in 0..=a {
            for (j, inst) in bottom_chains[chain].iter().enumerate() {
                weld(&mut asm, &mut notes, pu, End(xport(inst, "u0"), Side::BottomX(chain, j), "u0"))?;
                weld(&mut asm, &mut notes, pv, End(xport(inst, "v0"), Side::BottomX(chain, j), "v0"))?;
                pu = End(xport(inst, "u1"), Side::BottomX(chain, j), "u1");
                pv = End(xport(inst, "v1"), Side::BottomX(chain, j), "v1");
            }
            if chain < a {
                let inst = &ys[chain];
                weld(&mut asm, &mut notes, pu, End(yport(inst, "u0"), Side::Y(chain), "u0"))?;
                weld(&mut asm, &mut notes, pv, End(yport(inst, "v0"), Side::Y(chain), "v0"))?;
                pu = End(yport(inst, "u1"), Side::Y(chain), "u1");
                pv = End(yport(inst, "v1"), Side::Y(chain), "v1");
            } else {
                weld(&mut asm, &mut notes, pu, End(zport(&right_z, "bot1"), Side::RightZ, "bot1"))?;
                weld(&mut asm, &mut notes, pv, End(zport(&right_z, "bot2"), Side::RightZ, "bot2"))?;
                break;
            }
        }
    }

    for (side, port, edge) in notes {
        let inst = match side {
            Side::LeftZ => &mut left_z,
            Side::RightZ => &mut right_z,
            Side::TopX(i) => &mut top_xs[i],
            Side::Y(i) => &mut ys[i],
            Side::BottomX(c, j) => &mut bottom_chains[c][j],
        };
        inst.boundary.insert(port.to_string(), edge);
    }

    let graph = asm.build()?;
    debug_assert_eq!(graph.n(), plan.expected_order());
    Ok(Composition {
        graph,
        plan: plan.clone(),
        left_z,
        right_z,
        top_xs,
        ys,
        bottom_chains,
        path_vertices,
    })
}

/// Which placed instance a strand endpoint belongs to.
#[derive(Debug, Clone, Copy)]
enum Side {
    LeftZ,
    RightZ,
    TopX(usize),
    Y(usize),
    BottomX(usize, usize),
}
