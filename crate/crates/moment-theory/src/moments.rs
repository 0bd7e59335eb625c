use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::{enumerate_labeled_trees, phi, psi, walk_count_m, MomentError, OrderedGraph};

/// Moment orders above this would need trees beyond the enumeration cap.
pub const MOMENT_ORDER_CAP: u32 = 12;

/// The limiting moment constant: 0 for odd orders, 1 at order 0, and for
/// order `2k` the tree sum
/// `1/(1-eps) * sum_{T, |E(T)| <= k} phi(T, m) M_{2k}(T) psi(D(T), eps)`.
///
/// Walk counts are shared across labelings through the canonical tree
/// shape; each labeling keeps its own weight and integral. Terms are summed
/// innermost-deterministically (tree size ascending, decode order), with
/// Neumaier compensation.
pub fn limit_moment_c(k: u32, epsilon: f64, m: u32) -> Result<f64, MomentError> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(MomentError::BadEpsilon(epsilon));
    }
    if m == 0 {
        return Err(MomentError::BadM);
    }
    if k > MOMENT_ORDER_CAP {
        return Err(MomentError::MomentCap(k, MOMENT_ORDER_CAP));
    }
    if k == 0 {
        return Ok(1.0);
    }
    if k % 2 == 1 {
        return Ok(0.0);
    }
    let half = (k / 2) as usize;
    let mut walk_memo: HashMap<Vec<u8>, u128> = HashMap::new();
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in 2..=half + 1 {
        for tree in enumerate_labeled_trees(t)? {
            let weight = phi(&tree, m);
            if weight == 0 {
                continue;
            }
            let code = tree.tree_canonical_code();
            let walks = match walk_memo.get(&code) {
                Some(&w) => w,
                None => {
                    let w = walk_count_m(&tree, k)?;
                    walk_memo.insert(code, w);
                    w
                }
            };
            if walks == 0 {
                continue;
            }
            let integral = psi(&tree.degree_sequence(), epsilon, m)?;
            let term = weight as f64 * walks as f64 * integral;
            let s = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - s) + term;
            } else {
                comp += (term - s) + sum;
            }
            sum = s;
        }
    }
    Ok((sum + comp) / (1.0 - epsilon))
}

/// Moments `C(0..=k_max, eps, m)`; serialized as
/// `{"epsilon": .., "m": .., "K": .., "moments": [..]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MomentTable {
    pub epsilon: f64,
    pub m: u32,
    #[serde(rename = "K")]
    pub k_max: u32,
    pub moments: Vec<f64>,
}

impl MomentTable {
    pub fn moment(&self, k: u32) -> Option<f64> {
        self.moments.get(k as usize).copied()
    }

    pub fn validate(&self) -> Result<(), MomentError> {
        if self.moments.len() != self.k_max as usize + 1 {
            return Err(MomentError::BadTable(format!(
                "K = {} but {} moments",
                self.k_max,
                self.moments.len()
            )));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(MomentError::BadTable("epsilon out of range".into()));
        }
        if self.m == 0 {
            return Err(MomentError::BadTable("m must be positive".into()));
        }
        if self.moments.first() != Some(&1.0) {
            return Err(MomentError::BadTable("moment 0 must be 1".into()));
        }
        for (k, &c) in self.moments.iter().enumerate() {
            if !c.is_finite() {
                return Err(MomentError::BadTable(format!("moment {k} not finite")));
            }
            if k % 2 == 1 && c != 0.0 {
                return Err(MomentError::BadTable(format!("odd moment {k} nonzero")));
            }
            if k % 2 == 0 && c <= 0.0 {
                return Err(MomentError::BadTable(format!(
                    "even moment {k} not positive"
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, MomentError> {
        let table: MomentTable =
            serde_json::from_str(text).map_err(|e| MomentError::Json(e.to_string()))?;
        table.validate()?;
        Ok(table)
    }
}

pub fn build_moment_table(k_max: u32, epsilon: f64, m: u32) -> Result<MomentTable, MomentError> {
    let mut moments = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        moments.push(limit_moment_c(k, epsilon, m)?);
    }
    Ok(MomentTable {
        epsilon,
        m,
        k_max,
        moments,
    })
}

/// Count-growth exponents of an ordered graph: `f(H)/2` with `f` the number
/// of degree-1 vertices (power of n), and `g(H)` the number of degree-2
/// vertices (power of log n).
pub fn magnitude_exponents(h: &OrderedGraph) -> (f64, u32) {
    let degs = h.degree_sequence();
    let f = degs.iter().filter(|&&d| d == 1).count() as f64;
    let g = degs.iter().filter(|&&d| d == 2).count() as u32;
    (f / 2.0, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c2_closed_form(eps: f64, m: u32) -> f64 {
        2.0 * m as f64 * (1.0 - eps.sqrt()) / (1.0 + eps.sqrt())
    }

    #[test]
    fn odd_moments_are_exactly_zero() {
        assert_eq!(limit_moment_c(1, 0.1, 2).unwrap(), 0.0);
        assert_eq!(limit_moment_c(3, 0.1, 2).unwrap(), 0.0);
        assert_eq!(limit_moment_c(11, 0.3, 1).unwrap(), 0.0);
        assert_eq!(limit_moment_c(0, 0.1, 2).unwrap(), 1.0);
    }

    #[test]
    fn second_moment_matches_closed_form() {
        for &eps in &[0.05, 0.1, 0.25] {
            for &m in &[1u32, 2, 5] {
                assert_relative_eq!(
                    limit_moment_c(2, eps, m).unwrap(),
                    c2_closed_form(eps, m),
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn reference_value_for_figure_parameters() {
        // 2m (1 - sqrt(eps)) / (1 + sqrt(eps)) at eps = 0.1, m = 2
        let c2 = limit_moment_c(2, 0.1, 2).unwrap();
        assert_relative_eq!(c2, 2.0779, max_relative = 1e-4);
    }

    #[test]
    fn fourth_moment_matches_hand_assembled_terms() {
        // The four contributions at order 4: the single edge at walk
        // length 4 and the three path labelings with their weights.
        let eps = 0.1;
        for &m in &[1u32, 2, 3] {
            let mf = m as f64;
            let by_hand = (2.0 * mf * mf * psi(&[1, 1], eps, m).unwrap()
                + 4.0
                    * (mf.powi(3) * (mf + 1.0) * psi(&[2, 1, 1], eps, m).unwrap()
                        + mf.powi(4) * psi(&[1, 2, 1], eps, m).unwrap()
                        + mf.powi(3) * (mf - 1.0) * psi(&[1, 1, 2], eps, m).unwrap()))
                / (1.0 - eps);
            assert_relative_eq!(
                limit_moment_c(4, eps, m).unwrap(),
                by_hand,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn table_round_trips_and_validates() {
        let table = build_moment_table(6, 0.1, 2).unwrap();
        table.validate().unwrap();
        let json = table.to_json();
        let back = MomentTable::from_json(&json).unwrap();
        assert_eq!(back, table);

        let mut broken = table.clone();
        broken.moments[1] = 0.5;
        assert!(broken.validate().is_err());
        assert!(MomentTable::from_json("{\"bad\":").is_err());
    }

    #[test]
    fn moment_cap_enforced() {
        assert!(matches!(
            limit_moment_c(MOMENT_ORDER_CAP + 2, 0.1, 2),
            Err(MomentError::MomentCap(..))
        ));
    }

    #[test]
    fn exponent_counts() {
        let edge = OrderedGraph::new(2, [(0, 1)]);
        assert_eq!(magnitude_exponents(&edge), (1.0, 0));
        let path = OrderedGraph::new(3, [(0, 1), (1, 2)]);
        assert_eq!(magnitude_exponents(&path), (1.0, 1));
        let star5 = OrderedGraph::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(magnitude_exponents(&star5), (2.5, 0));
    }
}
