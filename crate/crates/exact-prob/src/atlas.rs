use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{LabeledGraph, ProbError};

/// Hard cap on exhaustive enumeration; n = 8 already has
/// 3*5*...*15 = 2_027_025 outcomes.
pub const ATLAS_CAP: u32 = 8;

const MAX_CHOICES: usize = (ATLAS_CAP - 1) as usize;

/// One complete run of the process: the attachment choices `X_2 ... X_n`
/// and the exact probability numerator over the shared denominator
/// `3 * 5 * ... * (2n-1)`.
#[derive(Debug, Clone, Copy)]
pub struct Outcome {
    choices: [u8; MAX_CHOICES],
    len: u8,
    pub numerator: u64,
}

impl Outcome {
    /// `X_2 ... X_n`.
    pub fn choices(&self) -> &[u8] {
        &self.choices[..self.len as usize]
    }

    /// Whether the labeled edge `(i, j)` (with `i <= j`) is present. The
    /// initial loop `(1, 1)` is always present.
    pub fn contains_edge(&self, i: u32, j: u32) -> bool {
        if j == 1 {
            return i == 1;
        }
        let idx = j as usize - 2;
        idx < self.len as usize && self.choices[idx] as u32 == i
    }

    pub fn contains_labeled(&self, s: &LabeledGraph) -> bool {
        s.edges().iter().all(|&(i, j)| self.contains_edge(i, j))
    }

    /// Edge list `(u, v)` with `u <= v`, in birth order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        std::iter::once((1, 1)).chain(
            self.choices()
                .iter()
                .enumerate()
                .map(|(k, &x)| (x as u32, k as u32 + 2)),
        )
    }
}

/// Every outcome of the process at size `n <= ATLAS_CAP`, with exact
/// rational probabilities.
pub struct ProcessAtlas {
    n: u32,
    denominator: u64,
    outcomes: Vec<Outcome>,
}

impl ProcessAtlas {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `3 * 5 * ... * (2n-1)`, the shared probability denominator.
    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    /// Exact marginal `P[S subset G_{1,n}]`.
    pub fn marginal(&self, s: &LabeledGraph) -> BigRational {
        self.probability_of(|o| o.contains_labeled(s))
    }

    pub fn probability_of(&self, pred: impl Fn(&Outcome) -> bool) -> BigRational {
        let num: u64 = self
            .outcomes
            .iter()
            .filter(|o| pred(o))
            .map(|o| o.numerator)
            .sum();
        BigRational::new(BigInt::from(num), BigInt::from(self.denominator))
    }
}

/// Enumerates the full outcome tree of the size-`n` process by walking all
/// attachment choices depth-first, carrying the degree vector.
pub fn enumerate_process(n: u32) -> Result<ProcessAtlas, ProbError> {
    if n == 0 {
        return Err(ProbError::EmptyProcess);
    }
    if n > ATLAS_CAP {
        return Err(ProbError::AtlasCap(n, ATLAS_CAP));
    }
    let mut denominator = 1u64;
    for t in 2..=n as u64 {
        denominator *= 2 * t - 1;
    }
    let mut outcomes = Vec::new();
    let mut deg = [0u8; ATLAS_CAP as usize + 1];
    deg[1] = 2;
    let mut choices = [0u8; MAX_CHOICES];
    recurse(n, 2, 1, &mut deg, &mut choices, &mut outcomes);
    Ok(ProcessAtlas {
        n,
        denominator,
        outcomes,
    })
}

fn recurse(
    n: u32,
    t: u32,
    numerator: u64,
    deg: &mut [u8; ATLAS_CAP as usize + 1],
    choices: &mut [u8; MAX_CHOICES],
    out: &mut Vec<Outcome>,
) {
    if t > n {
        out.push(Outcome {
            choices: *choices,
            len: (n - 1) as u8,
            numerator,
        });
        return;
    }
    for i in 1..=t {
        let weight = if i < t { deg[i as usize] as u64 } else { 1 };
        choices[t as usize - 2] = i as u8;
        if i < t {
            deg[i as usize] += 1;
            deg[t as usize] = 1;
        } else {
            deg[t as usize] = 2;
        }
        recurse(n, t + 1, numerator * weight, deg, choices, out);
        if i < t {
            deg[i as usize] -= 1;
        }
        deg[t as usize] = 0;
    }
}

/// Convenience wrapper matching the report-style call sites.
pub fn event_probability(atlas: &ProcessAtlas, pred: impl Fn(&Outcome) -> bool) -> BigRational {
    atlas.probability_of(pred)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeled_probability_exact;
    use num_traits::One;

    #[test]
    fn two_step_process_has_the_two_known_outcomes() {
        let atlas = enumerate_process(2).unwrap();
        assert_eq!(atlas.outcomes().len(), 2);
        assert_eq!(atlas.denominator(), 3);
        let mut nums: Vec<(Vec<u8>, u64)> = atlas
            .outcomes()
            .iter()
            .map(|o| (o.choices().to_vec(), o.numerator))
            .collect();
        nums.sort();
        assert_eq!(nums, vec![(vec![1], 2), (vec![2], 1)]);
    }

    #[test]
    fn probabilities_sum_to_one() {
        for n in 1..=6 {
            let atlas = enumerate_process(n).unwrap();
            assert!(atlas.probability_of(|_| true).is_one(), "n = {n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_process(ATLAS_CAP + 1),
            Err(ProbError::AtlasCap(..))
        ));
    }

    #[test]
    fn atlas_marginal_equals_formula_for_a_fan() {
        let atlas = enumerate_process(3).unwrap();
        let s = LabeledGraph::new([(1, 2), (1, 3)]).unwrap();
        assert_eq!(
            atlas.marginal(&s),
            labeled_probability_exact(&s, 3).unwrap()
        );
    }

    #[test]
    fn atlas_marginal_equals_formula_exhaustively_small() {
        // Every labeled graph with <= 2 edges at n = 5.
        let n = 5u32;
        let atlas = enumerate_process(n).unwrap();
        let mut all_edges = Vec::new();
        for j in 1..=n {
            for i in 1..=j {
                all_edges.push((i, j));
            }
        }
        for (a, &ea) in all_edges.iter().enumerate() {
            for &eb in &all_edges[a..] {
                let Ok(s) = LabeledGraph::new(if ea == eb { vec![ea] } else { vec![ea, eb] })
                else {
                    continue;
                };
                assert_eq!(
                    atlas.marginal(&s),
                    labeled_probability_exact(&s, n).unwrap(),
                    "mismatch for {s:?}"
                );
            }
        }
    }
}
