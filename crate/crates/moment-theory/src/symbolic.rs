use std::collections::BTreeMap;

/// Finite linear combination `sum c * y^(a/2) * ln(y)^b`, the closed ring
/// in which the iterated simplex integrals live: multiplying by `y^(-d/2)`
/// shifts `a`, and term-wise antiderivatives stay inside the ring (the
/// `a = -2` term promotes the log power).
///
/// Keys are `(a, b)` with `a` the half-power numerator; coefficients are
/// folded on insertion, and evaluation sums with Neumaier compensation.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicFn {
    terms: BTreeMap<(i32, u32), f64>,
}

impl SymbolicFn {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1.0)
    }

    pub fn constant(c: f64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0.0 {
            terms.insert((0, 0), c);
        }
        Self { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, f64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    fn insert(&mut self, a: i32, b: u32, c: f64) {
        if c == 0.0 {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert(0.0);
        *slot += c;
        if *slot == 0.0 {
            self.terms.remove(&(a, b));
        }
    }

    /// Multiply by `y^(da/2)`.
    pub fn mul_half_power(&self, da: i32) -> SymbolicFn {
        let mut out = SymbolicFn::zero();
        for (a, b, c) in self.terms() {
            out.insert(a + da, b, c);
        }
        out
    }

    /// Term-wise antiderivative in `y` (constant of integration zero).
    ///
    /// For `a != -2`:  integral of y^s ln^b y  with s = a/2 is
    /// `y^{s+1} sum_{j=0..b} (-1)^j (b!/(b-j)!) ln^{b-j} y / (s+1)^{j+1}`;
    /// for `a = -2` it is `ln^{b+1} y / (b+1)`.
    pub fn antiderivative(&self) -> SymbolicFn {
        let mut out = SymbolicFn::zero();
        for (a, b, c) in self.terms() {
            if a == -2 {
                out.insert(0, b + 1, c / (b as f64 + 1.0));
            } else {
                let s1 = (a as f64) / 2.0 + 1.0;
                let mut factor = c / s1;
                let mut j = 0u32;
                loop {
                    out.insert(a + 2, b - j, factor);
                    if j == b {
                        break;
                    }
                    factor *= -((b - j) as f64) / s1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Evaluate at `y > 0`.
    pub fn eval(&self, y: f64) -> f64 {
        let ln = y.ln();
        // Neumaier-compensated sum over canonical term order.
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (a, b, c) in self.terms() {
            let term = c * y.powf(a as f64 / 2.0) * ln.powi(b as i32);
            let t = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - t) + term;
            } else {
                comp += (term - t) + sum;
            }
            sum = t;
        }
        sum + comp
    }

    pub fn sub_constant(&self, c: f64) -> SymbolicFn {
        let mut out = self.clone();
        out.insert(0, 0, -c);
        out
    }
}
