use crate::{MomentError, SymbolicFn};

/// Iterated integral over the ordered simplex
/// `eps <= y_1 <= ... <= y_t <= 1` of `prod y_i^(-d_i/2)`, times the
/// prefactor `1/(2m)^(t-1)`, evaluated exactly in the power-log term ring
/// (float coefficients, compensated evaluation).
///
/// The innermost variable is `y_1` (the smallest vertex of the tree).
pub fn psi(degrees: &[u32], epsilon: f64, m: u32) -> Result<f64, MomentError> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(MomentError::BadEpsilon(epsilon));
    }
    if m == 0 {
        return Err(MomentError::BadM);
    }
    let t = degrees.len();
    if t == 0 || degrees.iter().any(|&d| d == 0) {
        return Err(MomentError::BadDegrees(format!("{degrees:?}")));
    }
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    if sum != 2 * (t as u64 - 1) {
        return Err(MomentError::BadDegrees(format!(
            "degree sum {sum} != 2(t-1) for t = {t}"
        )));
    }
    // g carries the inner integral as a function of the current variable
    let mut g = SymbolicFn::one();
    for &d in degrees {
        let integrand = g.mul_half_power(-(d as i32));
        let anti = integrand.antiderivative();
        g = anti.sub_constant(anti.eval(epsilon));
    }
    let raw = g.eval(1.0);
    Ok(raw / (2.0 * m as f64).powi(t as i32 - 1))
}
