use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::ProbError;

/// A set of labeled edges inside the uncollapsed process. Each edge is a
/// pair `(in_vertex, out_vertex)` with `in <= out`: the out-vertex is the
/// younger endpoint, which chose the in-vertex when it was born. The
/// process gives every vertex out-degree at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    edges: Vec<(u32, u32)>,
}

impl LabeledGraph {
    /// Edges may be given in any order; they are validated and sorted by
    /// out-vertex. Out-degree two is rejected here (such a graph has
    /// probability zero; `ProbError::OutDegreeExceeded` is the flag).
    pub fn new(edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, ProbError> {
        let mut list: Vec<(u32, u32)> = edges.into_iter().collect();
        for &(i, j) in &list {
            if i == 0 || j == 0 || i > j {
                return Err(ProbError::BadOrientation(i, j));
            }
        }
        list.sort_unstable_by_key(|&(i, j)| (j, i));
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(ProbError::DuplicateEdge(w[0].0, w[0].1));
            }
            if w[0].1 == w[1].1 {
                return Err(ProbError::OutDegreeExceeded);
            }
        }
        Ok(Self { edges: list })
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn max_vertex(&self) -> u32 {
        self.edges.iter().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// In-degree of `v`.
    pub fn d_in(&self, v: u32) -> u32 {
        self.edges.iter().filter(|&&(i, _)| i == v).count() as u32
    }

    /// Number of edges `(i, j)` with `i <= t <= j`.
    pub fn spanning_count(&self, t: u32) -> u32 {
        self.edges
            .iter()
            .filter(|&&(i, j)| i <= t && t <= j)
            .count() as u32
    }

    pub fn out_vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.edges.iter().map(|&(_, j)| j)
    }

    pub fn in_vertices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.edges.iter().map(|&(i, _)| i).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// All endpoints (for vertex-disjointness checks).
    pub fn vertex_set(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.edges.iter().flat_map(|&(i, j)| [i, j]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_vertex_disjoint(&self, other: &Self) -> bool {
        let a = self.vertex_set();
        let b = other.vertex_set();
        let mut i = 0;
        let mut j = 0;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Self) -> Result<Self, ProbError> {
        Self::new(self.edges.iter().chain(other.edges.iter()).copied())
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// Exact probability that every edge of `S` appears in the size-`n`
/// process:
///
/// ```text
/// P[S] = prod_{i in V-} d_in(i,S)!  *  prod_{j in V+} 1/(2j-1)
///        *  prod_{t not in V+} (1 + C_S(t)/(2t-1))
/// ```
///
/// where `C_S(t)` counts edges spanning `t`. The in-degree factor is the
/// factorial (the plain `d_in` sometimes seen in print fails the process
/// already at in-degree three; the enumeration oracle in this crate pins
/// the factorial form). The initial loop `(1,1)` needs no special casing:
/// its out-vertex factor is `1/(2*1-1) = 1`.
pub fn labeled_probability_exact(s: &LabeledGraph, n: u32) -> Result<BigRational, ProbError> {
    if n == 0 {
        return Err(ProbError::EmptyProcess);
    }
    for &(i, j) in s.edges() {
        if j > n {
            return Err(ProbError::EdgeOutOfRange(i, j, n));
        }
    }
    let mut p = BigRational::one();
    for v in s.in_vertices() {
        let mut f = BigInt::one();
        for d in 2..=s.d_in(v) as u64 {
            f *= big(d);
        }
        p *= BigRational::from_integer(f);
    }
    let out: Vec<u32> = s.out_vertices().collect();
    for &j in &out {
        p *= BigRational::new(BigInt::one(), big(2 * j as u64 - 1));
    }
    for t in 1..=n {
        if out.contains(&t) {
            continue;
        }
        let c = s.spanning_count(t);
        if c > 0 {
            let odd = big(2 * t as u64 - 1);
            p *= BigRational::new(&odd + big(c as u64), odd);
        }
    }
    Ok(p)
}

/// The square-root approximation with its multiplicative error band.
#[derive(Debug, Clone)]
pub struct ApproxProbability {
    /// `prod d_in! * prod 1/(2 sqrt(ij))`
    pub value: f64,
    /// `sum_t C_S(t)^2 / t`, the exponent scale of the correction factor.
    pub band_exponent: f64,
    /// `[value * exp(-band_exponent), value * exp(+band_exponent)]`
    pub bracket: (f64, f64),
}

/// Approximate appearance probability
/// `prod d_in(i,S)! * prod_{(i,j)} 1/(2 sqrt(ij))` together with the
/// bracketing interval `value * exp(+- sum C_S(t)^2/t)`.
pub fn labeled_probability_approx(
    s: &LabeledGraph,
    n: u32,
) -> Result<ApproxProbability, ProbError> {
    if n == 0 {
        return Err(ProbError::EmptyProcess);
    }
    for &(i, j) in s.edges() {
        if j > n {
            return Err(ProbError::EdgeOutOfRange(i, j, n));
        }
    }
    let mut value = 1.0f64;
    for v in s.in_vertices() {
        for d in 2..=s.d_in(v) as u64 {
            value *= d as f64;
        }
    }
    for &(i, j) in s.edges() {
        value /= 2.0 * ((i as f64) * (j as f64)).sqrt();
    }
    let mut band = 0.0f64;
    for t in 1..=n {
        let c = s.spanning_count(t) as f64;
        if c > 0.0 {
            band += c * c / t as f64;
        }
    }
    Ok(ApproxProbability {
        value,
        band_exponent: band,
        bracket: (value * (-band).exp(), value * band.exp()),
    })
}
