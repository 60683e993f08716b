//! Exact 3-edge-colouring: decision, enumeration, parity profiles, and the
//! two resistance measures.
//!
//! All searches run over the canonical element list with a
//! most-constrained-first ordering and colour-symmetry breaking by first
//! occurrence (a fresh colour may only be introduced as the smallest unused
//! one). Enumeration therefore visits exactly one representative per orbit
//! under colour permutations, and results are deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::measure::{Budget, BudgetMeter, MeasureResult, SearchStatus};
use crate::semigraph::{Element, SemiGraph, Vertex};

pub const COLOUR_COUNT: u8 = 3;

/// A (possibly partial) assignment of colours `1..=3` to elements, with the
/// conflicting vertices it induces. `conflicts` is always recomputable from
/// `assignment` via [`conflicts_of_assignment`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColouring {
    /// Sorted by element, one entry per coloured element.
    pub assignment: Vec<(Element, u8)>,
    /// Vertices with two or more incident elements of equal colour, sorted.
    pub conflicts: Vec<Vertex>,
}

impl EdgeColouring {
    /// Build from an assignment, validating colours and recomputing the
    /// conflict set against `g`.
    pub fn new(g: &SemiGraph, mut assignment: Vec<(Element, u8)>) -> Result<EdgeColouring> {
        assignment.sort_unstable();
        for &(el, c) in &assignment {
            if !g.contains_element(el) {
                return Err(GraphError::UnknownElement(el));
            }
            if !(1..=COLOUR_COUNT).contains(&c) {
                return Err(GraphError::Unsupported(format!("colour {c} out of range")));
            }
        }
        if assignment.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(GraphError::Unsupported("element coloured twice".into()));
        }
        let conflicts = conflicts_of_assignment(g, &assignment);
        Ok(EdgeColouring { assignment, conflicts })
    }

    fn from_ids(g: &SemiGraph, cols: &[u8]) -> EdgeColouring {
        let assignment: Vec<(Element, u8)> = cols
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(id, &c)| (g.element(id), c))
            .collect();
        let conflicts = conflicts_of_assignment(g, &assignment);
        EdgeColouring { assignment, conflicts }
    }

    pub fn colour(&self, el: Element) -> Option<u8> {
        self.assignment
            .binary_search_by_key(&el, |&(e, _)| e)
            .ok()
            .map(|i| self.assignment[i].1)
    }

    pub fn is_total(&self, g: &SemiGraph) -> bool {
        self.assignment.len() == g.element_count()
            && self.assignment.iter().all(|&(el, _)| g.contains_element(el))
    }

    pub fn is_proper(&self, g: &SemiGraph) -> bool {
        self.is_total(g) && self.conflicts.is_empty()
    }
}

/// Vertices where at least two incident elements share a colour.
pub fn conflicts_of_assignment(g: &SemiGraph, assignment: &[(Element, u8)]) -> Vec<Vertex> {
    let mut colour_of = vec![0u8; g.element_count()];
    for &(el, c) in assignment {
        if let Some(id) = g.element_id(el) {
            colour_of[id] = c;
        }
    }
    let mut out = Vec::new();
    for v in 0..g.n() {
        let mut seen = [false; 4];
        let mut clash = false;
        for &id in g.incident_elements(v) {
            let c = colour_of[id as usize] as usize;
            if c != 0 {
                if seen[c] {
                    clash = true;
                    break;
                }
                seen[c] = true;
            }
        }
        if clash {
            out.push(v);
        }
    }
    out
}

/// Certificate for a resistance value: either a set of removed edges with a
/// proper colouring of the remainder, or a total colouring exhibiting the
/// claimed number of conflicting vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResistanceCertificate {
    RemovedEdges { removed: Vec<Element>, colouring: EdgeColouring },
    ConflictColouring { colouring: EdgeColouring },
}

/// Outcome of a budgeted colouring search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringSearch {
    Found(EdgeColouring),
    ProvedNone,
    Truncated,
}

impl ColouringSearch {
    pub fn found(self) -> Option<EdgeColouring> {
        match self {
            ColouringSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// search engine
// ---------------------------------------------------------------------------

struct Engine<'g> {
    g: &'g SemiGraph,
    relaxed: Vec<bool>,
    /// used[v][c] = how many elements at v currently have colour c (1-based).
    used: Vec<[u8; 4]>,
    colour: Vec<u8>,
    assigned: usize,
    max_used: u8,
}

enum Walk {
    Continue,
    Stop,
}

impl<'g> Engine<'g> {
    fn new(g: &'g SemiGraph, relaxed: &[Vertex]) -> Engine<'g> {
        let mut rel = vec![false; g.n()];
        for &v in relaxed {
            rel[v] = true;
        }
        Engine {
            g,
            relaxed: rel,
            used: vec![[0; 4]; g.n()],
            colour: vec![0; g.element_count()],
            assigned: 0,
            max_used: 0,
        }
    }

    /// Colours legal for `id` at its constrained endpoints.
    #[inline]
    fn feasible(&self, id: usize) -> [bool; 4] {
        let mut ok = [false, true, true, true];
        for v in self.g.element(id).endpoints() {
            if self.relaxed[v] {
                continue;
            }
            for c in 1..=COLOUR_COUNT as usize {
                if self.used[v][c] != 0 {
                    ok[c] = false;
                }
            }
        }
        ok
    }

    /// Unassigned element with the fewest feasible colours (ties: lowest id).
    fn pick(&self) -> Option<(usize, [bool; 4], usize)> {
        let mut best: Option<(usize, [bool; 4], usize)> = None;
        for id in 0..self.colour.len() {
            if self.colour[id] != 0 {
                continue;
            }
            let f = self.feasible(id);
            let count = f.iter().filter(|&&b| b).count();
            match best {
                Some((_, _, c)) if c <= count => {}
                _ => best = Some((id, f, count)),
            }
            if count == 0 {
                break;
            }
        }
        best
    }

    #[inline]
    fn set(&mut self, id: usize, c: u8) {
        self.colour[id] = c;
        self.assigned += 1;
        for v in self.g.element(id).endpoints() {
            self.used[v][c as usize] += 1;
        }
    }

    #[inline]
    fn unset(&mut self, id: usize, c: u8) {
        self.colour[id] = 0;
        self.assigned -= 1;
        for v in self.g.element(id).endpoints() {
            self.used[v][c as usize] -= 1;
        }
    }

    /// Enumerate all total colourings proper outside the relaxed vertices,
    /// one representative per colour-permutation orbit.
    fn enumerate(
        &mut self,
        meter: &mut BudgetMeter,
        on_solution: &mut impl FnMut(&[u8]) -> Walk,
    ) -> SearchStatus {
        if self.assigned == self.colour.len() {
            return match on_solution(&self.colour) {
                Walk::Continue => SearchStatus::Complete,
                Walk::Stop => SearchStatus::Truncated,
            };
        }
        let (id, feasible, count) = self.pick().expect("unassigned element exists");
        if count == 0 {
            return SearchStatus::Complete;
        }
        let cap = (self.max_used + 1).min(COLOUR_COUNT);
        for c in 1..=cap {
            if !feasible[c as usize] {
                continue;
            }
            if !meter.tick() {
                return SearchStatus::Truncated;
            }
            let old_max = self.max_used;
            self.max_used = self.max_used.max(c);
            self.set(id, c);
            let status = self.enumerate(meter, on_solution);
            self.unset(id, c);
            self.max_used = old_max;
            if status == SearchStatus::Truncated {
                return SearchStatus::Truncated;
            }
        }
        SearchStatus::Complete
    }
}

/// First total colouring (in canonical search order) that is proper at every
/// vertex outside `allowed`.
pub fn find_colouring_conflicts_within(
    g: &SemiGraph,
    allowed: &[Vertex],
    meter: &mut BudgetMeter,
) -> ColouringSearch {
    let mut engine = Engine::new(g, allowed);
    let mut found: Option<EdgeColouring> = None;
    let status = engine.enumerate(meter, &mut |cols| {
        found = Some(EdgeColouring::from_ids(g, cols));
        Walk::Stop
    });
    match (found, status) {
        (Some(c), _) => ColouringSearch::Found(c),
        (None, SearchStatus::Complete) => ColouringSearch::ProvedNone,
        (None, SearchStatus::Truncated) => ColouringSearch::Truncated,
    }
}

pub fn find_proper_colouring_budgeted(g: &SemiGraph, meter: &mut BudgetMeter) -> ColouringSearch {
    find_colouring_conflicts_within(g, &[], meter)
}

/// Enumerate every total colouring whose conflicts all lie in `allowed`, one
/// representative per colour-permutation orbit. The visitor returns `false`
/// to stop early.
pub fn enumerate_colourings_conflicts_within(
    g: &SemiGraph,
    allowed: &[Vertex],
    meter: &mut BudgetMeter,
    visitor: &mut impl FnMut(&EdgeColouring) -> bool,
) -> SearchStatus {
    let mut engine = Engine::new(g, allowed);
    engine.enumerate(meter, &mut |cols| {
        if visitor(&EdgeColouring::from_ids(g, cols)) {
            Walk::Continue
        } else {
            Walk::Stop
        }
    })
}

/// Deterministic proper 3-edge-colouring, or `None` (exhaustive).
pub fn find_proper_colouring(g: &SemiGraph) -> Option<EdgeColouring> {
    find_proper_colouring_budgeted(g, &mut BudgetMeter::unlimited()).found()
}

/// Visit every proper colouring exactly once up to colour permutation;
/// returns how many were visited.
pub fn for_each_proper_colouring(g: &SemiGraph, mut visitor: impl FnMut(&EdgeColouring)) -> usize {
    let mut engine = Engine::new(g, &[]);
    let mut count = 0usize;
    let status = engine.enumerate(&mut BudgetMeter::unlimited(), &mut |cols| {
        visitor(&EdgeColouring::from_ids(g, cols));
        count += 1;
        Walk::Continue
    });
    debug_assert!(status.is_complete());
    count
}

/// Semi-edge counts per colour of a proper total colouring. By the parity
/// argument each count is congruent to the number of semi-edges mod 2.
pub fn parity_profile(g: &SemiGraph, c: &EdgeColouring) -> Result<(usize, usize, usize)> {
    if !c.is_proper(g) {
        return Err(GraphError::Unsupported("parity profile needs a proper colouring".into()));
    }
    let mut counts = [0usize; 4];
    for &s in g.semi() {
        let col = c.colour(Element::semi(s)).expect("total colouring");
        counts[col as usize] += 1;
    }
    Ok((counts[1], counts[2], counts[3]))
}

// ---------------------------------------------------------------------------
// vertex resistance: branch-and-bound over total colourings
// ---------------------------------------------------------------------------

struct ConflictBb<'g> {
    g: &'g SemiGraph,
    used: Vec<[u8; 4]>,
    colour: Vec<u8>,
    assigned: usize,
    max_used: u8,
    conflicted: Vec<bool>,
    conflict_count: usize,
    incumbent: usize,
    best: Option<Vec<u8>>,
    floor: usize,
}

impl<'g> ConflictBb<'g> {
    /// Number of brand-new conflicts created by giving `id` colour `c`.
    fn new_conflicts(&self, id: usize, c: u8) -> usize {
        self.g
            .element(id)
            .endpoints()
            .filter(|&v| !self.conflicted[v] && self.used[v][c as usize] != 0)
            .count()
    }

    fn pick(&self) -> Option<(usize, usize)> {
        // most saturated first: fewest conflict-free colours available
        let mut best: Option<(usize, usize)> = None;
        for id in 0..self.colour.len() {
            if self.colour[id] != 0 {
                continue;
            }
            let free = (1..=COLOUR_COUNT)
                .filter(|&c| self.new_conflicts(id, c) == 0)
                .count();
            match best {
                Some((_, f)) if f <= free => {}
                _ => best = Some((id, free)),
            }
            if free == 0 {
                break;
            }
        }
        best
    }

    fn run(&mut self, meter: &mut BudgetMeter) -> SearchStatus {
        if self.conflict_count >= self.incumbent {
            return SearchStatus::Complete; // pruned
        }
        if self.assigned == self.colour.len() {
            self.incumbent = self.conflict_count;
            self.best = Some(self.colour.clone());
            return SearchStatus::Complete;
        }
        let (id, _) = self.pick().expect("unassigned element exists");
        // conflict-free colours first, then by how many conflicts they add
        let cap = (self.max_used + 1).min(COLOUR_COUNT);
        let mut order: Vec<(usize, u8)> =
            (1..=cap).map(|c| (self.new_conflicts(id, c), c)).collect();
        order.sort_unstable();
        for (added, c) in order {
            if self.conflict_count + added >= self.incumbent {
                continue;
            }
            if !meter.tick() {
                return SearchStatus::Truncated;
            }
            let old_max = self.max_used;
            self.max_used = self.max_used.max(c);
            let mut newly = Vec::new();
            for v in self.g.element(id).endpoints() {
                if !self.conflicted[v] && self.used[v][c as usize] != 0 {
                    self.conflicted[v] = true;
                    newly.push(v);
                }
            }
            self.conflict_count += newly.len();
            self.colour[id] = c;
            self.assigned += 1;
            for v in self.g.element(id).endpoints() {
                self.used[v][c as usize] += 1;
            }

            let status = self.run(meter);

            for v in self.g.element(id).endpoints() {
                self.used[v][c as usize] -= 1;
            }
            self.assigned -= 1;
            self.colour[id] = 0;
            self.conflict_count -= newly.len();
            for v in newly {
                self.conflicted[v] = false;
            }
            self.max_used = old_max;
            if status == SearchStatus::Truncated {
                return SearchStatus::Truncated;
            }
            if self.incumbent <= self.floor {
                return SearchStatus::Complete; // cannot improve further
            }
        }
        SearchStatus::Complete
    }
}

/// Greedy total colouring: every element takes the colour adding the fewest
/// new conflicts. Supplies the initial incumbent for the exact search.
fn greedy_colouring(g: &SemiGraph) -> Vec<u8> {
    let mut used = vec![[0u8; 4]; g.n()];
    let mut cols = vec![0u8; g.element_count()];
    for id in 0..g.element_count() {
        let mut best = (usize::MAX, 1u8);
        for c in 1..=COLOUR_COUNT {
            let clashes = g
                .element(id)
                .endpoints()
                .filter(|&v| used[v][c as usize] != 0)
                .count();
            if clashes < best.0 {
                best = (clashes, c);
            }
        }
        cols[id] = best.1;
        for v in g.element(id).endpoints() {
            used[v][best.1 as usize] += 1;
        }
    }
    cols
}

/// Minimum number of conflicting vertices over all total 3-edge-colourings
/// (the vertex form of resistance), by branch and bound. `lower_hint` is a
/// caller-supplied sound lower bound used only for the interval fallback and
/// for stopping once the incumbent reaches it.
pub fn vertex_resistance_with_hint(
    g: &SemiGraph,
    budget: &Budget,
    lower_hint: usize,
) -> MeasureResult<ResistanceCertificate> {
    let mut meter = budget.meter();
    let greedy = greedy_colouring(g);
    let greedy_col = EdgeColouring::from_ids(g, &greedy);
    let incumbent = greedy_col.conflicts.len();
    let mut bb = ConflictBb {
        g,
        used: vec![[0; 4]; g.n()],
        colour: vec![0; g.element_count()],
        assigned: 0,
        max_used: 0,
        conflicted: vec![false; g.n()],
        conflict_count: 0,
        incumbent: incumbent + 1,
        best: None,
        floor: lower_hint,
    };
    let status = bb.run(&mut meter);
    let (value, cols) = match bb.best {
        Some(cols) if bb.incumbent <= incumbent => (bb.incumbent, cols),
        _ => (incumbent, greedy),
    };
    let colouring = EdgeColouring::from_ids(g, &cols);
    debug_assert_eq!(colouring.conflicts.len(), value);
    let certificate = ResistanceCertificate::ConflictColouring { colouring };
    if status.is_complete() {
        MeasureResult::Exact { value, certificate }
    } else {
        MeasureResult::Bounded { lower: lower_hint, upper: value, witness: Some(certificate) }
    }
}

pub fn vertex_resistance(g: &SemiGraph, budget: &Budget) -> MeasureResult<ResistanceCertificate> {
    vertex_resistance_with_hint(g, budget, 0)
}

// ---------------------------------------------------------------------------
// edge resistance: iterative deepening over removal sets
// ---------------------------------------------------------------------------

/// Minimum number of edges whose removal renders the graph 3-edge-colourable.
/// Removal sets are enumerated by size then lexicographically; colourability
/// of each residual graph is decided exactly under the shared budget.
pub fn edge_resistance(g: &SemiGraph, budget: &Budget) -> MeasureResult<ResistanceCertificate> {
    let mut meter = budget.meter();
    let m = g.edge_count();
    for k in 0..=m {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let removed: Vec<(Vertex, Vertex)> =
                subset.iter().map(|&i| g.edges()[i]).collect();
            let residual = g.without_edges(&removed).expect("edges exist");
            match find_proper_colouring_budgeted(&residual, &mut meter) {
                ColouringSearch::Found(colouring) => {
                    return MeasureResult::Exact {
                        value: k,
                        certificate: ResistanceCertificate::RemovedEdges {
                            removed: removed
                                .iter()
                                .map(|&(u, v)| Element::Edge(u, v))
                                .collect(),
                            colouring,
                        },
                    };
                }
                ColouringSearch::ProvedNone => {}
                ColouringSearch::Truncated => {
                    // sizes below k are exhausted, so k is a sound lower bound
                    return MeasureResult::Bounded { lower: k, upper: m, witness: None };
                }
            }
            if !next_subset(&mut subset, m) {
                break;
            }
        }
    }
    unreachable!("removing all edges leaves a properly colourable graph");
}

/// Advance a sorted k-subset of 0..m to its lexicographic successor.
fn next_subset(subset: &mut [usize], m: usize) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < m - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
