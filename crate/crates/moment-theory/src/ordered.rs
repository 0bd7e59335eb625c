/// Small graph on ordered vertices `v_1 < ... < v_t` (0-based indices in
/// code). Isomorphism between ordered graphs must preserve the order, so
/// two labeled trees are the same ordered graph exactly when their edge
/// lists agree. Loops and parallel edges are allowed; edges are stored
/// `(i, j)` with `i <= j`.
///
/// Edges are directed from the larger endpoint to the smaller one, matching
/// the attachment process where the younger vertex does the choosing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    t: usize,
    edges: Vec<(usize, usize)>,
}

impl OrderedGraph {
    pub fn new(t: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        assert!(
            list.iter().all(|&(_, j)| j < t),
            "edge endpoint out of range"
        );
        list.sort_unstable();
        Self { t, edges: list }
    }

    /// Number of vertices.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Degrees in vertex order; a loop contributes 2.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.t];
        for &(i, j) in &self.edges {
            d[i] += 1;
            d[j] += 1;
        }
        d
    }

    /// In-degree under the larger-to-smaller orientation; a loop counts as
    /// one in and one out at its vertex.
    pub fn d_in(&self, v: usize) -> u32 {
        self.edges.iter().filter(|&&(i, _)| i == v).count() as u32
    }

    pub fn d_out(&self, v: usize) -> u32 {
        self.edges.iter().filter(|&&(_, j)| j == v).count() as u32
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(i, j)| i == j)
    }

    /// Connected when every vertex is reachable treating edges as
    /// undirected (isolated vertices make a graph with edges disconnected).
    pub fn is_connected(&self) -> bool {
        if self.t == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.t];
        for &(i, j) in &self.edges {
            if i != j {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        let mut seen = vec![false; self.t];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Loopless, connected, `t - 1` distinct edges.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.t
            && !self.has_loops()
            && self.edges.windows(2).all(|w| w[0] != w[1])
            && self.is_connected()
    }

    /// Canonical invariant for unlabeled tree shape (rooted at the
    /// centroid, subtree codes sorted), used to share walk-count
    /// computations between trees that differ only by labeling.
    pub fn tree_canonical_code(&self) -> Vec<u8> {
        assert!(self.is_tree(), "canonical code is for trees");
        if self.t == 1 {
            return vec![b'(', b')'];
        }
        let mut adj = vec![Vec::new(); self.t];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let centroids = tree_centroids(&adj);
        let mut best: Option<Vec<u8>> = None;
        for &c in &centroids {
            let code = encode_rooted(&adj, c, usize::MAX);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap()
    }
}

fn tree_centroids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut size = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut visited = vec![false; n];
    visited[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    for &v in order.iter().rev() {
        size[v] = 1 + adj[v]
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| size[w])
            .sum::<usize>();
    }
    let mut best = n;
    let mut centroids = Vec::new();
    for v in 0..n {
        let mut heaviest = n - size[v];
        for &w in &adj[v] {
            if parent[w] == v {
                heaviest = heaviest.max(size[w]);
            }
        }
        match heaviest.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = heaviest;
                centroids = vec![v];
            }
            std::cmp::Ordering::Equal => centroids.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    centroids
}

fn encode_rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut codes: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(adj, w, v))
        .collect();
    codes.sort();
    let mut out = vec![b'('];
    for c in codes {
        out.extend(c);
    }
    out.push(b')');
    out
}
