//! Sum-of-stabilizers Bell functional built from the local expansion.
//!
//! Each party has two dichotomic settings: setting 0 plays the role of X and
//! setting 1 the role of Z. The functional is
//!
//! ```text
//! B = sum_l A0(l) [ C_0 + sum_m C_m sum_{|v| = m, l not in v} prod_{i in v} A1(i) ]
//! ```
//!
//! Its quantum value on the hypergraph state is `n` (every stabilizer has
//! expectation 1). The classical bound is the maximum over deterministic
//! local strategies, computed exactly.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::combinatorics::binom;
use crate::dyadic::DyadicRational;
use crate::error::{check_cap, Error, Result};
use crate::expansion::{apply_zx_polynomial, coefficients, expanded_stabilizer, LocalExpansion};
use crate::hypergraph::{Hypergraph, UniformityProfile};
use crate::statevector::build_state;

pub const FAST_BOUND_MAX_N: usize = 24;
pub const EXHAUSTIVE_BOUND_MAX_N: usize = 12;
pub const QUANTUM_VALUE_MAX_N: usize = 14;
const LITERAL_VALUE_MAX_N: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellFunctional {
    expansion: LocalExpansion,
}

impl BellFunctional {
    pub fn new(n: usize, profile: &UniformityProfile) -> Result<Self> {
        Ok(BellFunctional { expansion: coefficients(n, profile)? })
    }

    pub fn from_expansion(expansion: LocalExpansion) -> Self {
        BellFunctional { expansion }
    }

    pub fn n(&self) -> usize {
        self.expansion.n()
    }

    pub fn expansion(&self) -> &LocalExpansion {
        &self.expansion
    }

    /// Party bracket when `t` of the other `n - 1` parties output -1 on setting 1:
    /// `sum_m C_m K_m(t)` with `K_m(t) = sum_j (-1)^j C(t, j) C(n-1-t, m-j)`.
    fn bracket(&self, t: usize) -> DyadicRational {
        let others = self.n() - 1;
        self.expansion
            .coeffs()
            .iter()
            .enumerate()
            .map(|(m, c)| {
                let kraw: BigInt = (0..=m.min(t))
                    .map(|j| {
                        let term = binom(t as u64, j as i64) * binom((others - t) as u64, (m - j) as i64);
                        if j % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum();
                c * &kraw
            })
            .sum()
    }
}

/// Extremal local-hidden-variable point: fixed outputs for both settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterministicStrategy {
    x: Vec<i8>,
    z: Vec<i8>,
}

impl DeterministicStrategy {
    pub fn new(x: Vec<i8>, z: Vec<i8>) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::Mismatch(format!("{} setting-0 outputs, {} setting-1 outputs", x.len(), z.len())));
        }
        if x.iter().chain(&z).any(|&o| o != 1 && o != -1) {
            return Err(Error::OutOfRange("outputs must be +1 or -1".into()));
        }
        Ok(DeterministicStrategy { x, z })
    }

    /// Strategy whose `-1` outputs are the set bits of the two masks.
    pub fn from_masks(n: usize, x_neg: u64, z_neg: u64) -> Self {
        let out = |mask: u64| (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        DeterministicStrategy { x: out(x_neg), z: out(z_neg) }
    }

    pub fn x(&self) -> &[i8] {
        &self.x
    }

    pub fn z(&self) -> &[i8] {
        &self.z
    }

    /// Party `i` takes the place of party `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut x = vec![0; self.x.len()];
        let mut z = vec![0; self.z.len()];
        for (i, &p) in perm.iter().enumerate() {
            x[p - 1] = self.x[i];
            z[p - 1] = self.z[i];
        }
        DeterministicStrategy { x, z }
    }

    /// Functional value, summed term by term over every Z string.
    pub fn value(&self, f: &BellFunctional) -> Result<DyadicRational> {
        let n = f.n();
        if self.x.len() != n {
            return Err(Error::Mismatch(format!("strategy for {} parties, functional for {n}", self.x.len())));
        }
        check_cap("literal functional value", n, LITERAL_VALUE_MAX_N)?;
        let coeffs = f.expansion().coeffs();
        let mut total = DyadicRational::zero();
        for l in 0..n {
            let others = ((1u64 << n) - 1) & !(1 << l);
            let mut bracket = DyadicRational::zero();
            let mut v = others;
            loop {
                let product: i8 = (0..n).filter(|i| v >> i & 1 == 1).map(|i| self.z[i]).product();
                let c = &coeffs[v.count_ones() as usize];
                if product > 0 {
                    bracket += c;
                } else {
                    bracket -= c;
                }
                if v == 0 {
                    break;
                }
                v = (v - 1) & others;
            }
            if self.x[l] > 0 {
                total += bracket;
            } else {
                total -= &bracket;
            }
        }
        Ok(total)
    }
}

/// Classical bound through permutation symmetry: only the number `T` of
/// parties answering -1 on setting 1 matters, and each party then picks its
/// setting-0 output to match the sign of its bracket.
pub fn classical_bound(f: &BellFunctional) -> Result<DyadicRational> {
    let n = f.n();
    check_cap("symmetric classical bound", n, FAST_BOUND_MAX_N)?;
    let brackets: Vec<DyadicRational> = (0..n).map(|t| f.bracket(t)).collect();
    let best = (0..=n)
        .map(|t_total| {
            let mut v = DyadicRational::zero();
            if t_total > 0 {
                v += &brackets[t_total - 1].abs() * t_total as i64;
            }
            if t_total < n {
                v += &brackets[t_total].abs() * (n - t_total) as i64;
            }
            v
        })
        .max()
        .expect("n >= 1");
    Ok(best)
}

/// Classical bound by enumerating all `4^n` deterministic strategies.
///
/// Coefficients are rescaled to a common power-of-two denominator so the
/// enumeration runs on machine integers; setting-0 outputs are walked in
/// Gray-code order so each strategy costs one update.
pub fn classical_bound_exhaustive(f: &BellFunctional) -> Result<DyadicRational> {
    let n = f.n();
    check_cap("exhaustive classical bound", n, EXHAUSTIVE_BOUND_MAX_N)?;
    let coeffs = f.expansion().coeffs();
    let exponent = coeffs.iter().map(DyadicRational::exponent).max().unwrap_or(0);
    let scaled: Vec<i128> = coeffs
        .iter()
        .map(|c| {
            c.scaled_numerator(exponent)
                .to_i128()
                .ok_or_else(|| Error::OutOfRange("coefficient too large for exhaustive search".into()))
        })
        .collect::<Result<_>>()?;
    let full = (1u64 << n) - 1;
    let best = (0..=full)
        .into_par_iter()
        .map(|z_neg| {
            let brackets: Vec<i128> = (0..n)
                .map(|l| {
                    let others = full & !(1 << l);
                    let mut acc = 0i128;
                    let mut v = others;
                    loop {
                        let c = scaled[v.count_ones() as usize];
                        if (v & z_neg).count_ones().is_multiple_of(2) {
                            acc += c;
                        } else {
                            acc -= c;
                        }
                        if v == 0 {
                            break;
                        }
                        v = (v - 1) & others;
                    }
                    acc
                })
                .collect();
            let mut x = vec![1i128; n];
            let mut value: i128 = brackets.iter().sum();
            let mut best = value;
            for step in 1u64..1 << n {
                let l = step.trailing_zeros() as usize;
                value -= 2 * x[l] * brackets[l];
                x[l] = -x[l];
                best = best.max(value);
            }
            best
        })
        .max()
        .expect("at least one strategy");
    Ok(DyadicRational::new(best, exponent))
}

/// `sum_l <H| g_l |H>` with each `g_l` in expanded form.
pub fn quantum_value(f: &BellFunctional, h: &Hypergraph) -> Result<DyadicRational> {
    let n = f.n();
    check_cap("quantum value", n, QUANTUM_VALUE_MAX_N)?;
    let profile = f.expansion().profile();
    if h.n() != n || *h != Hypergraph::complete_k_uniform(n, profile)? {
        return Err(Error::Mismatch(format!(
            "hypergraph is not the complete ({profile})-uniform hypergraph on {n} vertices"
        )));
    }
    let state = build_state(h)?;
    let mut total = DyadicRational::zero();
    for l in 1..=n {
        let p = expanded_stabilizer(n, profile, l)?;
        total += state.inner_product(&apply_zx_polynomial(&state, &p)?)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationRow {
    pub n: usize,
    pub k: usize,
    pub classical_bound: DyadicRational,
    pub quantum_value: DyadicRational,
    pub violated: bool,
}

impl ViolationRow {
    pub const CSV_HEADER: &'static str = "n,k,classical_bound,quantum_value,violated";

    pub fn compute(n: usize, k: usize) -> Result<Self> {
        let profile = UniformityProfile::single(k)?;
        let f = BellFunctional::new(n, &profile)?;
        let h = Hypergraph::complete_k_uniform(n, &profile)?;
        let classical_bound = classical_bound(&f)?;
        let quantum_value = quantum_value(&f, &h)?;
        let violated = quantum_value > classical_bound;
        Ok(ViolationRow { n, k, classical_bound, quantum_value, violated })
    }

    pub fn csv_record(&self) -> String {
        format!("{},{},{},{},{}", self.n, self.k, self.classical_bound, self.quantum_value, self.violated)
    }
}

/// Rows for `2 <= k <= min(n, k_max)`, `2 <= n <= n_max`, ordered by `(n, k)`.
pub fn violation_report(n_max: usize, k_max: usize) -> Result<Vec<ViolationRow>> {
    check_cap("violation report", n_max, QUANTUM_VALUE_MAX_N)?;
    let pairs: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| (2..=n.min(k_max)).map(move |k| (n, k)))
        .collect();
    pairs.into_par_iter().map(|(n, k)| ViolationRow::compute(n, k)).collect()
}
