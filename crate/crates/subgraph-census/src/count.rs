use moment_theory::OrderedGraph;
use pa_core::MultiGraph;

use crate::CensusError;

/// `(max vertices, max edges)` for census patterns.
pub const CENSUS_CAPS: (usize, usize) = (4, 5);

/// Restriction on the host labels each pattern vertex may take.
#[derive(Debug, Clone)]
pub enum VertexWindow {
    All,
    /// One inclusive label range shared by every pattern vertex.
    Range(u32, u32),
    /// One inclusive label range per pattern vertex, in pattern order.
    PerVertex(Vec<(u32, u32)>),
}

impl VertexWindow {
    fn resolve(&self, t: usize, g: &MultiGraph) -> Result<Vec<(u32, u32)>, CensusError> {
        let full = (g.vertex_offset(), g.n());
        match self {
            VertexWindow::All => Ok(vec![full; t]),
            VertexWindow::Range(lo, hi) => Ok(vec![(*lo.max(&full.0), *hi.min(&full.1)); t]),
            VertexWindow::PerVertex(v) => {
                if v.len() != t {
                    return Err(CensusError::WindowMismatch(v.len(), t));
                }
                Ok(v.iter()
                    .map(|&(lo, hi)| (lo.max(full.0), hi.min(full.1)))
                    .collect())
            }
        }
    }
}

struct HostIndex {
    offset: u32,
    // per vertex: sorted (neighbor label, multiplicity), loops excluded
    adj: Vec<Vec<(u32, u32)>>,
    loops: Vec<u32>,
}

impl HostIndex {
    fn build(g: &MultiGraph) -> Self {
        let n = g.num_vertices() as usize;
        let off = g.vertex_offset();
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        let mut loops = vec![0u32; n];
        let mut raw: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in g.edges() {
            if u == v {
                loops[(u - off) as usize] += 1;
            } else {
                raw[(u - off) as usize].push(v);
                raw[(v - off) as usize].push(u);
            }
        }
        for (i, mut list) in raw.into_iter().enumerate() {
            list.sort_unstable();
            let mut packed: Vec<(u32, u32)> = Vec::with_capacity(list.len());
            for x in list {
                match packed.last_mut() {
                    Some(last) if last.0 == x => last.1 += 1,
                    _ => packed.push((x, 1)),
                }
            }
            adj[i] = packed;
        }
        Self {
            offset: off,
            adj,
            loops,
        }
    }

    fn idx(&self, label: u32) -> usize {
        (label - self.offset) as usize
    }

    fn multiplicity(&self, a: u32, b: u32) -> u32 {
        let row = &self.adj[self.idx(a)];
        match row.binary_search_by_key(&b, |&(l, _)| l) {
            Ok(pos) => row[pos].1,
            Err(_) => 0,
        }
    }

    fn loops_at(&self, label: u32) -> u32 {
        self.loops[self.idx(label)]
    }
}

struct Pattern {
    t: usize,
    // distinct undirected pairs (i < j) with multiplicities
    pairs: Vec<(usize, usize, u32)>,
    loops: Vec<u32>,
    // neighbors of each pattern vertex among pattern vertices
    neighbors: Vec<Vec<usize>>,
}

impl Pattern {
    fn build(h: &OrderedGraph) -> Self {
        let t = h.t();
        let mut loops = vec![0u32; t];
        let mut pair_mult = std::collections::BTreeMap::new();
        for &(i, j) in h.edges() {
            if i == j {
                loops[i] += 1;
            } else {
                *pair_mult.entry((i, j)).or_insert(0u32) += 1;
            }
        }
        let pairs: Vec<(usize, usize, u32)> =
            pair_mult.iter().map(|(&(i, j), &m)| (i, j, m)).collect();
        let mut neighbors = vec![Vec::new(); t];
        for &(i, j, _) in &pairs {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        Self {
            t,
            pairs,
            loops,
            neighbors,
        }
    }

    /// Placement order: highest-degree vertex first, then vertices adjacent
    /// to an already placed one whenever possible, so candidates come from
    /// host adjacency lists instead of label scans.
    fn placement_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.t);
        let mut placed = vec![false; self.t];
        let degree = |v: usize| -> usize { self.neighbors[v].len() + 2 * self.loops[v] as usize };
        while order.len() < self.t {
            let next = (0..self.t)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let attached = self.neighbors[v].iter().any(|&w| placed[w]);
                    (usize::from(attached || order.is_empty()), degree(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        order
    }
}

/// Number of order-preserving copies of `h` in `g` within the window,
/// counting parallel-edge and loop choices binomially: a host pair of
/// multiplicity `M` hosts `C(M, mu)` copies of a pattern pair of
/// multiplicity `mu`, and loops likewise.
pub fn count_ordered_subgraphs(
    g: &MultiGraph,
    h: &OrderedGraph,
    window: &VertexWindow,
) -> Result<u128, CensusError> {
    let (cap_v, cap_e) = CENSUS_CAPS;
    if h.t() > cap_v || h.num_edges() > cap_e {
        return Err(CensusError::PatternTooBig(
            h.t(),
            h.num_edges(),
            cap_v,
            cap_e,
        ));
    }
    if h.t() == 0 {
        return Ok(1);
    }
    let windows = window.resolve(h.t(), g)?;
    if h.t() as u32 > g.num_vertices() {
        return Ok(0);
    }
    let host = HostIndex::build(g);
    let pattern = Pattern::build(h);
    let order = pattern.placement_order();
    let mut assignment: Vec<Option<u32>> = vec![None; pattern.t];
    let mut total = 0u128;
    place(
        &host,
        &pattern,
        &order,
        0,
        &windows,
        &mut assignment,
        &mut total,
    );
    Ok(total)
}

fn place(
    host: &HostIndex,
    pattern: &Pattern,
    order: &[usize],
    depth: usize,
    windows: &[(u32, u32)],
    assignment: &mut Vec<Option<u32>>,
    total: &mut u128,
) {
    if depth == order.len() {
        *total += embedding_weight(host, pattern, assignment);
        return;
    }
    let p = order[depth];
    // order constraints against placed vertices
    let mut lo = windows[p].0;
    let mut hi = windows[p].1;
    for (q, x) in assignment.iter().enumerate() {
        if let Some(x) = x {
            if q < p {
                lo = lo.max(x + 1);
            } else {
                hi = hi.min(x.saturating_sub(1));
            }
        }
    }
    if lo > hi {
        return;
    }
    // snapshot (host vertex, required multiplicity) for each placed
    // pattern neighbor so the feasibility check does not borrow the
    // assignment during recursion
    let placed_requirements: Vec<(u32, u32)> = pattern.neighbors[p]
        .iter()
        .filter_map(|&q| {
            assignment[q].map(|xq| {
                let need = pattern
                    .pairs
                    .iter()
                    .find(|&&(a, b, _)| (a, b) == (p.min(q), p.max(q)))
                    .map(|&(_, _, m)| m)
                    .unwrap_or(0);
                (xq, need)
            })
        })
        .collect();
    let need_loops = pattern.loops[p];
    let feasible = |x: u32| -> bool {
        host.loops_at(x) >= need_loops
            && placed_requirements
                .iter()
                .all(|&(xq, need)| host.multiplicity(xq, x) >= need)
    };
    if let Some(&(ax, _)) = placed_requirements.first() {
        for &(nb, _) in &host.adj[host.idx(ax)] {
            if nb < lo || nb > hi {
                continue;
            }
            if feasible(nb) {
                assignment[p] = Some(nb);
                place(host, pattern, order, depth + 1, windows, assignment, total);
                assignment[p] = None;
            }
        }
    } else {
        for x in lo..=hi {
            if feasible(x) {
                assignment[p] = Some(x);
                place(host, pattern, order, depth + 1, windows, assignment, total);
                assignment[p] = None;
            }
        }
    }
}

fn embedding_weight(host: &HostIndex, pattern: &Pattern, assignment: &[Option<u32>]) -> u128 {
    let mut w: u128 = 1;
    for &(i, j, mu) in &pattern.pairs {
        let m = host.multiplicity(assignment[i].unwrap(), assignment[j].unwrap());
        w *= binomial(m, mu);
        if w == 0 {
            return 0;
        }
    }
    for (i, &lp) in pattern.loops.iter().enumerate() {
        if lp > 0 {
            w *= binomial(host.loops_at(assignment[i].unwrap()), lp);
            if w == 0 {
                return 0;
            }
        }
    }
    w
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All connected ordered multigraphs with no isolated vertex, at most
/// `max_t` vertices and exactly `1..=max_e` edge instances: the patterns a
/// closed walk of length `max_e` can trace out. Used by the trace-identity
/// census.
pub fn enumerate_walk_patterns(max_t: usize, max_e: usize) -> Vec<OrderedGraph> {
    let mut out = Vec::new();
    for t in 1..=max_t {
        // slot list: loops then pairs
        let mut slots: Vec<(usize, usize)> = (0..t).map(|i| (i, i)).collect();
        for i in 0..t {
            for j in (i + 1)..t {
                slots.push((i, j));
            }
        }
        let mut multiset: Vec<(usize, usize)> = Vec::new();
        enumerate_multisets(&slots, 0, max_e, &mut multiset, &mut |edges| {
            let h = OrderedGraph::new(t, edges.iter().copied());
            if h.is_connected() && h.degree_sequence().iter().all(|&d| d > 0) {
                out.push(h);
            }
        });
    }
    out
}

fn enumerate_multisets(
    slots: &[(usize, usize)],
    from: usize,
    budget: usize,
    current: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if !current.is_empty() {
        emit(current);
    }
    if budget == 0 {
        return;
    }
    for s in from..slots.len() {
        current.push(slots[s]);
        enumerate_multisets(slots, s, budget - 1, current, emit);
        current.pop();
    }
}
