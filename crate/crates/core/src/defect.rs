//! Triples of 1-factors, cores and their classification, and the exact or
//! bounded colouring defect.
//!
//! For a triple of 1-factors, `E_i` collects the elements lying in exactly
//! `i` of the three factors. The core is the sub-semi-graph induced by
//! `E_0 ∪ E_2 ∪ E_3`; its components are even cycles, 2-semi-paths, or
//! subdivisions of cubic semi-graphs, and the defect is the minimum possible
//! `|E_0|`.
//!
//! Lower bounds here are deliberately conservative around semi-edges: the
//! terminal semi-edges of a core 2-semi-path may themselves be covered, in
//! which case only every other interior element is uncovered. A length-L
//! 2-semi-path therefore guarantees just ⌊L/2⌋ uncovered elements, and the
//! gadget `Y` realises this minimum (its defect is 2, one below half its
//! semi-girth rounded up). Plain graphs have no semi-path components, so the
//! classical ⌈girth/2⌉ bound applies unchanged.

use serde::{Deserialize, Serialize};

use crate::colouring::{self, ColouringSearch, EdgeColouring};
use crate::error::{GraphError, Result};
use crate::factors::{self, Enumeration, OneFactor};
use crate::invariants::{self, Girth};
use crate::measure::{Budget, MeasureResult};
use crate::semigraph::{is_semi_subgraph, Element, SemiGraph, Vertex};

/// A multiset of three 1-factors (repetitions allowed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorTriple {
    pub factors: [OneFactor; 3],
}

impl FactorTriple {
    pub fn new(m1: OneFactor, m2: OneFactor, m3: OneFactor) -> FactorTriple {
        FactorTriple { factors: [m1, m2, m3] }
    }

    pub fn validate(&self, g: &SemiGraph) -> Result<()> {
        for f in &self.factors {
            f.validate(g)?;
        }
        Ok(())
    }

    /// How many of the three factors contain each element of `g`.
    pub fn multiplicities(&self, g: &SemiGraph) -> Vec<u8> {
        let mut mult = vec![0u8; g.element_count()];
        for f in &self.factors {
            for &el in &f.elements {
                if let Some(id) = g.element_id(el) {
                    mult[id] += 1;
                }
            }
        }
        mult
    }

    /// Build the triple of colour classes of a proper colouring; each class
    /// of a proper total colouring of a cubic semi-graph is a 1-factor.
    pub fn from_proper_colouring(g: &SemiGraph, col: &EdgeColouring) -> Result<FactorTriple> {
        if !col.is_proper(g) {
            return Err(GraphError::Unsupported(
                "factor triple from a colouring needs a proper colouring".into(),
            ));
        }
        let mut classes: [Vec<Element>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for &(el, c) in &col.assignment {
            classes[(c - 1) as usize].push(el);
        }
        let [a, b, c] = classes;
        let triple =
            FactorTriple::new(OneFactor::new(a), OneFactor::new(b), OneFactor::new(c));
        triple.validate(g)?;
        Ok(triple)
    }
}

/// Kind of one core component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoreComponent {
    EvenCycle { len: usize },
    TwoSemiPath { len: usize },
    CubicSubdivision,
}

/// The partition `E_0..E_3`, the induced core, and the per-component
/// classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    pub e0: Vec<Element>,
    pub e1: Vec<Element>,
    pub e2: Vec<Element>,
    pub e3: Vec<Element>,
    pub core: Vec<Element>,
    pub components: Vec<CoreComponent>,
}

impl CoreDecomposition {
    pub fn uncovered(&self) -> usize {
        self.e0.len()
    }
}

/// Compute `E_0..E_3`, the core (`E_0 ∪ E_2 ∪ E_3`) and classify each core
/// component. Components violating the trichotomy are an error: for valid
/// 1-factors of a cubic semi-graph they cannot occur.
pub fn classify_triple(g: &SemiGraph, t: &FactorTriple) -> Result<CoreDecomposition> {
    t.validate(g)?;
    let mult = t.multiplicities(g);
    let mut sets: [Vec<Element>; 4] = Default::default();
    for (id, &m) in mult.iter().enumerate() {
        sets[m as usize].push(g.element(id));
    }
    let [e0, e1, e2, e3] = sets;
    let mut core: Vec<Element> =
        e0.iter().chain(e2.iter()).chain(e3.iter()).copied().collect();
    core.sort_unstable();
    let components = classify_components(g, &core, &mult)?;
    Ok(CoreDecomposition { e0, e1, e2, e3, core, components })
}

fn classify_components(
    g: &SemiGraph,
    core: &[Element],
    mult: &[u8],
) -> Result<Vec<CoreComponent>> {
    let in_core = |id: usize| -> bool { mult[id] != 1 && core.binary_search(&g.element(id)).is_ok() };
    // adjacency restricted to core edges
    let mut comp_of = vec![usize::MAX; g.n()];
    let mut vertices_of: Vec<Vec<Vertex>> = Vec::new();
    for start in 0..g.n() {
        let touched = g.incident_elements(start).iter().any(|&id| in_core(id as usize));
        if !touched || comp_of[start] != usize::MAX {
            continue;
        }
        let idx = vertices_of.len();
        let mut verts = Vec::new();
        let mut queue = std::collections::VecDeque::from([start]);
        comp_of[start] = idx;
        while let Some(v) = queue.pop_front() {
            verts.push(v);
            for &id in g.incident_elements(v) {
                if !in_core(id as usize) {
                    continue;
                }
                if let Element::Edge(a, b) = g.element(id as usize) {
                    let w = if a == v { b } else { a };
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = idx;
                        queue.push_back(w);
                    }
                }
            }
        }
        vertices_of.push(verts);
    }
    let mut out = Vec::new();
    for verts in &vertices_of {
        out.push(classify_one(g, verts, mult, &in_core)?);
    }
    Ok(out)
}

fn classify_one(
    g: &SemiGraph,
    verts: &[Vertex],
    mult: &[u8],
    in_core: &impl Fn(usize) -> bool,
) -> Result<CoreComponent> {
    let mut edges = std::collections::BTreeSet::new();
    let mut semis = Vec::new();
    let mut trivalent = false;
    for &v in verts {
        let mut deg = 0;
        for &id in g.incident_elements(v) {
            let id = id as usize;
            if !in_core(id) {
                continue;
            }
            deg += 1;
            match g.element(id) {
                Element::Edge(a, b) => {
                    edges.insert((a.min(b), a.max(b)));
                }
                Element::SemiEdge(s) => semis.push(s),
            }
        }
        if deg >= 3 {
            trivalent = true;
        }
        if deg <= 1 {
            return Err(GraphError::CoreClassification(format!(
                "core vertex {v} has degree {deg}"
            )));
        }
    }
    if trivalent {
        return Ok(CoreComponent::CubicSubdivision);
    }
    // every vertex has core-degree exactly 2: a cycle, or a path capped by
    // two semi-edges; elements must alternate between covered (E2/E3) and
    // uncovered (E0)
    let is_covered = |el: Element| -> bool {
        let id = g.element_id(el).expect("core element");
        mult[id] >= 2
    };
    match semis.len() {
        0 => {
            let len = edges.len();
            let walk = walk_cycle(verts, &edges)?;
            check_alternation(&walk, &is_covered)?;
            if len % 2 != 0 {
                return Err(GraphError::CoreClassification(format!(
                    "odd cycle of length {len} in core"
                )));
            }
            Ok(CoreComponent::EvenCycle { len })
        }
        2 => {
            let walk = walk_path(semis[0], semis[1], &edges)?;
            check_alternation(&walk, &is_covered)?;
            Ok(CoreComponent::TwoSemiPath { len: edges.len() + 2 })
        }
        k => Err(GraphError::CoreClassification(format!(
            "component with {k} semi-edges"
        ))),
    }
}

fn walk_cycle(
    verts: &[Vertex],
    edges: &std::collections::BTreeSet<(Vertex, Vertex)>,
) -> Result<Vec<Element>> {
    let start = *verts.iter().min().expect("nonempty component");
    let mut adj = std::collections::BTreeMap::<Vertex, Vec<Vertex>>::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut walk = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let ns = &adj[&cur];
        if ns.len() != 2 {
            return Err(GraphError::CoreClassification(format!(
                "cycle vertex {cur} has degree {}",
                ns.len()
            )));
        }
        let next = if ns[0] != prev { ns[0] } else { ns[1] };
        walk.push(Element::edge(cur, next));
        prev = cur;
        cur = next;
        if cur == start {
            break;
        }
    }
    Ok(walk)
}

fn walk_path(
    from: Vertex,
    to: Vertex,
    edges: &std::collections::BTreeSet<(Vertex, Vertex)>,
) -> Result<Vec<Element>> {
    let mut adj = std::collections::BTreeMap::<Vertex, Vec<Vertex>>::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut walk = vec![Element::semi(from)];
    let mut prev = usize::MAX;
    let mut cur = from;
    while cur != to {
        let ns = adj.get(&cur).ok_or_else(|| {
            GraphError::CoreClassification(format!("path breaks at vertex {cur}"))
        })?;
        let next = *ns
            .iter()
            .find(|&&w| w != prev)
            .ok_or_else(|| GraphError::CoreClassification("dead-end path".into()))?;
        walk.push(Element::edge(cur, next));
        prev = cur;
        cur = next;
    }
    walk.push(Element::semi(to));
    Ok(walk)
}

fn check_alternation(walk: &[Element], is_covered: &impl Fn(Element) -> bool) -> Result<()> {
    for pair in walk.windows(2) {
        if is_covered(pair[0]) == is_covered(pair[1]) {
            return Err(GraphError::CoreClassification(format!(
                "consecutive core elements {} and {} are both {}",
                pair[0],
                pair[1],
                if is_covered(pair[0]) { "covered" } else { "uncovered" }
            )));
        }
    }
    Ok(())
}

/// A core is proper when its element set is a strict subset of the graph's
/// (the empty core counts as proper).
pub fn is_proper_core(g: &SemiGraph, cd: &CoreDecomposition) -> bool {
    cd.core.len() < g.element_count()
}

/// Some triple of 1-factors with a proper core. Existence is guaranteed for
/// every cubic semi-graph admitting a 1-factor, so exhaustion is an error of
/// theorem-violation severity.
pub fn find_proper_core(g: &SemiGraph) -> Result<(FactorTriple, CoreDecomposition)> {
    if !g.is_cubic() {
        return Err(GraphError::NotCubic);
    }
    if let Some(col) = colouring::find_proper_colouring(g) {
        let triple = FactorTriple::from_proper_colouring(g, &col)?;
        let cd = classify_triple(g, &triple)?;
        debug_assert!(cd.core.is_empty());
        return Ok((triple, cd));
    }
    let ms = factors::one_factors(g)?;
    if ms.is_empty() {
        return Err(GraphError::NoOneFactor);
    }
    for i in 0..ms.len() {
        for j in i..ms.len() {
            for k in j..ms.len() {
                let t = FactorTriple::new(ms[i].clone(), ms[j].clone(), ms[k].clone());
                let cd = classify_triple(g, &t)?;
                if is_proper_core(g, &cd) {
                    return Ok((t, cd));
                }
            }
        }
    }
    Err(GraphError::NoProperCore)
}

/// Conservative defect floor for a graph already known non-3-edge-colourable.
/// Graphs get `max(3, ceil(girth/2))` (the snark floor plus the classical
/// girth bound); semi-graphs additionally admit 2-semi-path cores, capping
/// the floor at `floor(semi_girth/2)`.
pub fn defect_floor_assuming_uncolourable(g: &SemiGraph) -> usize {
    let girth_term = match invariants::girth(g) {
        Girth::Finite(gi) => gi.div_ceil(2),
        Girth::Infinite => {
            debug_assert!(false, "an uncolourable semi-graph of max degree 3 has a cycle");
            return 0;
        }
    };
    if g.is_graph() {
        let snark_floor = if g.is_cubic() && invariants::is_bridgeless(g) { 3 } else { 1 };
        girth_term.max(snark_floor)
    } else {
        let path_term = match invariants::semi_girth(g) {
            Girth::Finite(sg) => sg / 2,
            Girth::Infinite => usize::MAX,
        };
        girth_term.min(path_term).max(1)
    }
}

/// Defect lower bound from girth data alone: 0 for colourable inputs,
/// otherwise [`defect_floor_assuming_uncolourable`]. Colourability is
/// decided exactly (exponential in the worst case).
pub fn defect_lower_bound_girth(g: &SemiGraph) -> usize {
    if colouring::find_proper_colouring(g).is_some() {
        0
    } else {
        defect_floor_assuming_uncolourable(g)
    }
}

/// Defect lower bound from an embedded conflicting (non-3-edge-colourable)
/// cubic semi-subgraph `h`: any array of 1-factors of `g` restricts to one of
/// `h`, so `mu3(g) >= mu3(h) >= floor(h)`; and containing `h` makes `g`
/// itself uncolourable, so `g`'s own floor applies too.
pub fn defect_lower_bound_conflicting(
    g: &SemiGraph,
    h: &SemiGraph,
    embedding: &[Vertex],
) -> Result<usize> {
    if !h.is_cubic() {
        return Err(GraphError::NotCubic);
    }
    if !is_semi_subgraph(h, g, embedding)? {
        return Err(GraphError::BadEmbedding(
            "h is not a semi-subgraph of g under the given vertex map".into(),
        ));
    }
    if colouring::find_proper_colouring(h).is_some() {
        return Err(GraphError::SubgraphColourable);
    }
    let from_h = defect_floor_assuming_uncolourable(h);
    let from_g = defect_floor_assuming_uncolourable(g);
    Ok(from_h.max(from_g))
}

/// Exact colouring defect: minimum `|E_0|` over all multiset triples of
/// 1-factors, with an optimal witness triple. Interval fallback on budget
/// exhaustion: lower from the girth floor when non-colourability was proven,
/// upper from the best triple seen.
pub fn mu3(g: &SemiGraph, budget: &Budget) -> Result<MeasureResult<FactorTriple>> {
    if !g.is_cubic() {
        return Err(GraphError::NotCubic);
    }
    let mut meter = budget.meter();
    match colouring::find_proper_colouring_budgeted(g, &mut meter) {
        ColouringSearch::Found(col) => {
            let triple = FactorTriple::from_proper_colouring(g, &col)?;
            return Ok(MeasureResult::Exact { value: 0, certificate: triple });
        }
        ColouringSearch::ProvedNone => {}
        ColouringSearch::Truncated => {
            return Ok(MeasureResult::Bounded {
                lower: 0,
                upper: g.element_count(),
                witness: None,
            });
        }
    }
    let floor = defect_floor_assuming_uncolourable(g);

    // collect 1-factors as element bitmasks, capped to keep memory flat on
    // large inputs (hitting the cap downgrades the answer to an interval)
    const MAX_STORED_FACTORS: usize = 50_000;
    let words = g.element_count().div_ceil(64);
    let mut masks: Vec<Vec<u64>> = Vec::new();
    let mut factors_list: Vec<OneFactor> = Vec::new();
    let enumeration = factors::enumerate_one_factors(g, &mut meter, |f| {
        let mut mask = vec![0u64; words];
        for &el in &f.elements {
            let id = g.element_id(el).expect("factor element");
            mask[id / 64] |= 1 << (id % 64);
        }
        masks.push(mask);
        factors_list.push(f.clone());
        factors_list.len() < MAX_STORED_FACTORS
    })?;
    if factors_list.is_empty() {
        return match enumeration {
            Enumeration::Complete { .. } => Err(GraphError::NoOneFactor),
            _ => Ok(MeasureResult::Bounded {
                lower: floor,
                upper: g.element_count(),
                witness: None,
            }),
        };
    }

    let full_union = {
        let mut u = vec![0u64; words];
        for m in &masks {
            for (w, &b) in u.iter_mut().zip(m) {
                *w |= b;
            }
        }
        u
    };
    let total = g.element_count();
    let uncovered = |union: &[u64]| -> usize {
        let covered: u32 = union.iter().map(|w| w.count_ones()).sum();
        total - covered as usize
    };

    let mut incumbent = usize::MAX;
    let mut witness: (usize, usize, usize) = (0, 0, 0);
    let mut truncated = !enumeration.is_complete();
    'outer: for i in 0..masks.len() {
        for j in i..masks.len() {
            let mut pair = masks[i].clone();
            for (w, &b) in pair.iter_mut().zip(&masks[j]) {
                *w |= b;
            }
            // even with every other factor added, at least this many
            // elements stay uncovered
            let mut reachable = pair.clone();
            for (w, &b) in reachable.iter_mut().zip(&full_union) {
                *w |= b;
            }
            if uncovered(&reachable) >= incumbent {
                continue;
            }
            for k in j..masks.len() {
                if !meter.tick() {
                    truncated = true;
                    break 'outer;
                }
                let mut union = pair.clone();
                for (w, &b) in union.iter_mut().zip(&masks[k]) {
                    *w |= b;
                }
                let unc = uncovered(&union);
                if unc < incumbent {
                    incumbent = unc;
                    witness = (i, j, k);
                    if incumbent <= floor {
                        break 'outer; // the floor is a proven lower bound
                    }
                }
            }
        }
    }

    if incumbent == usize::MAX {
        // the budget died before any triple was evaluated
        return Ok(MeasureResult::Bounded {
            lower: floor,
            upper: g.element_count(),
            witness: None,
        });
    }
    let certificate = FactorTriple::new(
        factors_list[witness.0].clone(),
        factors_list[witness.1].clone(),
        factors_list[witness.2].clone(),
    );
    debug_assert_eq!(
        classify_triple(g, &certificate)?.uncovered(),
        incumbent,
        "witness must reproduce the claimed uncovered count"
    );
    if truncated && incumbent > floor {
        Ok(MeasureResult::Bounded { lower: floor, upper: incumbent, witness: Some(certificate) })
    } else {
        Ok(MeasureResult::Exact { value: incumbent, certificate })
    }
}
