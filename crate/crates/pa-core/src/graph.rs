use crate::CoreError;

/// Parameters of one sampled graph. Identical `(m, n, seed)` produce
/// bit-identical edge lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphConfig {
    pub m: u32,
    pub n: u32,
    pub seed: u64,
}

impl GraphConfig {
    pub fn new(m: u32, n: u32, seed: u64) -> Result<Self, CoreError> {
        if m == 0 {
            return Err(CoreError::BadM);
        }
        if n == 0 {
            return Err(CoreError::EmptyGraph);
        }
        if (m as u64) * (n as u64) > u32::MAX as u64 {
            return Err(CoreError::TooLarge(m as u64 * n as u64));
        }
        Ok(Self { m, n, seed })
    }

    /// Seed-splitting rule for replicate `r`: `base_seed + r` (wrapping).
    /// Documented so parallel runs stay reproducible.
    pub fn replicate_seed(base_seed: u64, r: u64) -> u64 {
        base_seed.wrapping_add(r)
    }
}

/// Undirected multigraph with loops on the label range
/// `[vertex_offset, n]`. Untruncated graphs have `vertex_offset = 1`;
/// truncation raises the offset but keeps the original labels.
///
/// Edges are stored `(u, v)` with `u <= v`, in birth order; multiplicity is
/// repetition, a loop is `(u, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: u32,
    vertex_offset: u32,
    edges: Vec<(u32, u32)>,
    m: u32,
    seed: u64,
}

impl MultiGraph {
    pub(crate) fn from_parts(
        n: u32,
        vertex_offset: u32,
        edges: Vec<(u32, u32)>,
        m: u32,
        seed: u64,
    ) -> Self {
        debug_assert!(vertex_offset >= 1 && vertex_offset <= n);
        debug_assert!(edges
            .iter()
            .all(|&(u, v)| u <= v && u >= vertex_offset && v <= n));
        Self {
            n,
            vertex_offset,
            edges,
            m,
            seed,
        }
    }

    /// Builds a graph from an explicit edge list (used by the parser and by
    /// tests that need hand-made graphs). Endpoints are normalized to
    /// `u <= v`.
    pub fn from_edges(
        n: u32,
        vertex_offset: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
        m: u32,
        seed: u64,
    ) -> Result<Self, CoreError> {
        if n == 0 || vertex_offset == 0 || vertex_offset > n {
            return Err(CoreError::EmptyGraph);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            if u < vertex_offset || v > n {
                return Err(CoreError::Parse {
                    line: list.len() + 2,
                    msg: format!("endpoint ({u},{v}) outside [{vertex_offset},{n}]"),
                });
            }
            list.push((u, v));
        }
        Ok(Self::from_parts(n, vertex_offset, list, m, seed))
    }

    /// Largest vertex label.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// First live vertex label (1 unless truncated).
    pub fn vertex_offset(&self) -> u32 {
        self.vertex_offset
    }

    /// Number of live vertices.
    pub fn num_vertices(&self) -> u32 {
        self.n - self.vertex_offset + 1
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Live vertex labels in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertex_offset..=self.n
    }

    /// Degree vector indexed by `label - vertex_offset`. A loop adds 2,
    /// which is the process convention (the adjacency diagonal counts loops
    /// once instead; see `loop_counts`).
    pub fn degree_vec(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.num_vertices() as usize];
        let off = self.vertex_offset;
        for &(u, v) in &self.edges {
            deg[(u - off) as usize] += 1;
            deg[(v - off) as usize] += 1;
        }
        deg
    }

    /// Number of loops per live vertex (the adjacency-diagonal convention).
    pub fn loop_counts(&self) -> Vec<u32> {
        let mut loops = vec![0u32; self.num_vertices() as usize];
        let off = self.vertex_offset;
        for &(u, v) in &self.edges {
            if u == v {
                loops[(u - off) as usize] += 1;
            }
        }
        loops
    }

    pub fn degree_of(&self, v: u32) -> u32 {
        assert!(v >= self.vertex_offset && v <= self.n);
        self.edges
            .iter()
            .map(|&(a, b)| u32::from(a == v) + u32::from(b == v))
            .sum()
    }
}

/// Truncation parameter; the cut index is `ceil(epsilon * n)` and vertices
/// `cut+1 ..= n` survive with their original labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationSpec {
    pub epsilon: f64,
}

impl TruncationSpec {
    pub fn new(epsilon: f64) -> Result<Self, CoreError> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(CoreError::BadEpsilon(epsilon));
        }
        Ok(Self { epsilon })
    }

    pub fn cut_index(&self, n: u32) -> u32 {
        (self.epsilon * n as f64).ceil() as u32
    }
}

/// Removes vertices `1 ..= ceil(epsilon*n)` and all incident edges.
pub fn truncate(g: &MultiGraph, spec: &TruncationSpec) -> Result<MultiGraph, CoreError> {
    if !(spec.epsilon > 0.0 && spec.epsilon < 1.0) {
        return Err(CoreError::BadEpsilon(spec.epsilon));
    }
    let cut = spec.cut_index(g.n());
    if cut >= g.n() {
        return Err(CoreError::TruncationEmpty(spec.epsilon));
    }
    let first_live = g.vertex_offset().max(cut + 1);
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, _)| u >= first_live)
        .collect();
    Ok(MultiGraph::from_parts(
        g.n(),
        first_live,
        edges,
        g.m(),
        g.seed(),
    ))
}

/// Per-vertex degrees of the live vertices, in label order.
pub fn degrees(g: &MultiGraph) -> Vec<(u32, u32)> {
    let deg = g.degree_vec();
    g.vertices().zip(deg).collect()
}

/// Result of `top_degrees`: `truncated` is set when fewer than the requested
/// number of vertices exist.
#[derive(Debug, Clone)]
pub struct TopDegrees {
    pub list: Vec<(u32, u32)>,
    pub requested: usize,
    pub truncated: bool,
}

/// The `k` largest degrees in decreasing order; ties broken by smaller
/// vertex label first.
pub fn top_degrees(g: &MultiGraph, k: usize) -> TopDegrees {
    let mut all = degrees(g);
    all.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let truncated = k > all.len();
    all.truncate(k);
    TopDegrees {
        list: all,
        requested: k,
        truncated,
    }
}
