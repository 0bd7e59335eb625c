use pa_core::MultiGraph;

/// Dense symmetric integer adjacency matrix. Off-diagonal entries are edge
/// multiplicities; the diagonal counts loops once (so the trace equals the
/// number of loops, while degrees count them twice).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    data: Vec<i32>,
    labels: Vec<u32>,
}

impl AdjacencyMatrix {
    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let n = rows.len();
        let mut data = vec![0i32; n * n];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "ragged rows");
            data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        Self {
            n,
            data,
            labels: (1..=n as u32).collect(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n],
            labels: (1..=n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i32) {
        self.data[i * self.n + j] = v;
    }

    /// Original vertex label of dense index `i` (identity for hand-made
    /// matrices).
    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_symmetric(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i) as i64).sum()
    }

    /// Principal submatrix on the given (sorted, distinct) dense indices.
    pub fn principal_submatrix(&self, keep: &[usize]) -> AdjacencyMatrix {
        let m = keep.len();
        let mut data = vec![0i32; m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                data[a * m + b] = self.get(i, j);
            }
        }
        AdjacencyMatrix {
            n: m,
            data,
            labels: keep.iter().map(|&i| self.labels[i]).collect(),
        }
    }

    pub fn to_faer(&self) -> faer::Mat<f64> {
        faer::Mat::from_fn(self.n, self.n, |i, j| self.get(i, j) as f64)
    }
}

/// Builds the adjacency matrix of the live vertices; dense index `i` maps
/// to label `vertex_offset + i`.
pub fn adjacency(g: &MultiGraph) -> AdjacencyMatrix {
    let n = g.num_vertices() as usize;
    let off = g.vertex_offset();
    let mut a = AdjacencyMatrix::zeros(n);
    a.labels = g.vertices().collect();
    for &(u, v) in g.edges() {
        let i = (u - off) as usize;
        let j = (v - off) as usize;
        if i == j {
            a.data[i * n + i] += 1;
        } else {
            a.data[i * n + j] += 1;
            a.data[j * n + i] += 1;
        }
    }
    a
}

/// Compressed sparse rows over the live vertices, with multiplicities
/// aggregated into weights and loops appearing once on the diagonal. This
/// is the matrix the walk DP and the power iteration multiply by.
#[derive(Debug, Clone)]
pub struct CsrMatrix {
    n: usize,
    offsets: Vec<usize>,
    cols: Vec<u32>,
    weights: Vec<u32>,
    labels_offset: u32,
}

impl CsrMatrix {
    pub fn from_graph(g: &MultiGraph) -> Self {
        let n = g.num_vertices() as usize;
        let off = g.vertex_offset();
        let mut entries: Vec<(u32, u32)> = Vec::with_capacity(2 * g.num_edges());
        for &(u, v) in g.edges() {
            let i = u - off;
            let j = v - off;
            if i == j {
                entries.push((i, j));
            } else {
                entries.push((i, j));
                entries.push((j, i));
            }
        }
        entries.sort_unstable();
        let mut offsets = vec![0usize; n + 1];
        let mut cols = Vec::with_capacity(entries.len());
        let mut weights: Vec<u32> = Vec::with_capacity(entries.len());
        let mut idx = 0;
        for r in 0..n as u32 {
            let row_start = cols.len();
            while idx < entries.len() && entries[idx].0 == r {
                let c = entries[idx].1;
                if cols.len() > row_start && *cols.last().unwrap() == c {
                    *weights.last_mut().unwrap() += 1;
                } else {
                    cols.push(c);
                    weights.push(1);
                }
                idx += 1;
            }
            offsets[r as usize + 1] = cols.len();
        }
        Self {
            n,
            offsets,
            cols,
            weights,
            labels_offset: off,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize) -> u32 {
        self.labels_offset + i as u32
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let lo = self.offsets[i];
        let hi = self.offsets[i + 1];
        self.cols[lo..hi]
            .iter()
            .zip(&self.weights[lo..hi])
            .map(|(&c, &w)| (c as usize, w))
    }

    /// Matrix entry by binary search within the row.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        let lo = self.offsets[i];
        let hi = self.offsets[i + 1];
        match self.cols[lo..hi].binary_search(&(j as u32)) {
            Ok(pos) => self.weights[lo + pos],
            Err(_) => 0,
        }
    }

    /// Row sum with the diagonal counted once (matrix row sum, not degree).
    pub fn row_sum(&self, i: usize) -> u64 {
        self.row(i).map(|(_, w)| w as u64).sum()
    }

    /// `y = A x` into the provided buffer.
    pub fn mul_into(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        for i in 0..self.n {
            let mut acc = 0.0;
            for (j, w) in self.row(i) {
                acc += w as f64 * x[j];
            }
            y[i] = acc;
        }
    }
}
