//! Cross-checks between the closed-form expansion and the dense simulator
//! for a single `(n, profile)` pair. Each check either passes, fails, or is
//! skipped because `n` is above its cap.

use std::fmt;

use crate::bell::{classical_bound, classical_bound_exhaustive, quantum_value, BellFunctional};
use crate::dyadic::DyadicRational;
use crate::error::Result;
use crate::expansion::{coefficients, expanded_stabilizer, f_k};
use crate::hypergraph::{Hypergraph, UniformityProfile};
use crate::statevector::{
    build_state, probe_expectation_direct, projector_identity_holds, stabilizer_on_basis, stabilizers_commute,
    ProbeState, DENSE_MAX_N, PROBE_DIRECT_MAX_LEN,
};

const GROUP_MAX_N: usize = 10;
const COMMUTATION_MAX_N: usize = 8;
const PROJECTOR_CHECK_MAX_N: usize = 4;
const EQUIVALENCE_MAX_N: usize = 12;
const PROBE_SIM_MAX_N: usize = 16;
const QUANTUM_MAX_N: usize = 14;
const BOUND_PATHS_MAX_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            CheckStatus::Passed => write!(f, "PASS {}", self.name),
            CheckStatus::Failed(why) => write!(f, "FAIL {}: {why}", self.name),
            CheckStatus::Skipped(why) => write!(f, "SKIP {}: {why}", self.name),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub profile: UniformityProfile,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.status, CheckStatus::Failed(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| matches!(c.status, CheckStatus::Failed(_)))
    }
}

struct Suite {
    n: usize,
    max_dense: usize,
    checks: Vec<CheckOutcome>,
}

impl Suite {
    fn run(&mut self, name: &'static str, cap: usize, check: impl FnOnce() -> Result<Option<String>>) -> Result<()> {
        let cap = cap.min(self.max_dense);
        let status = if self.n > cap {
            CheckStatus::Skipped(format!("n = {} above cap {cap}", self.n))
        } else {
            match check()? {
                None => CheckStatus::Passed,
                Some(why) => CheckStatus::Failed(why),
            }
        };
        self.checks.push(CheckOutcome { name, status });
        Ok(())
    }
}

/// Runs every applicable check. Dense checks are skipped when `n` exceeds
/// either their own cap or `max_dense`.
pub fn verify_profile(n: usize, profile: &UniformityProfile, max_dense: usize) -> Result<VerificationReport> {
    profile.validate_for(n)?;
    let expansion = coefficients(n, profile)?;
    let mut suite = Suite { n, max_dense: max_dense.min(DENSE_MAX_N), checks: Vec::new() };

    let mut master = CheckStatus::Passed;
    for m in 0..n {
        if f_k(n, profile, m)? != expansion.recombine(m) {
            master = CheckStatus::Failed(format!("recombined coefficients differ from f_k at m = {m}"));
            break;
        }
    }
    suite.checks.push(CheckOutcome { name: "master-identity", status: master });

    let direct_ms: Vec<usize> = (0..n).filter(|&m| n - m - 1 <= PROBE_DIRECT_MAX_LEN).collect();
    let mut dual = None;
    for &m in &direct_ms {
        if f_k(n, profile, m)? != probe_expectation_direct(n, profile, m)? {
            dual = Some(format!("weight-grouped and literal probe sums differ at m = {m}"));
            break;
        }
    }
    suite.checks.push(CheckOutcome {
        name: "dual-formula",
        status: match dual {
            Some(why) => CheckStatus::Failed(why),
            None if direct_ms.is_empty() => CheckStatus::Skipped("no m within the literal-sum cap".into()),
            None => CheckStatus::Passed,
        },
    });

    let hypergraph = if n <= suite.max_dense {
        Some(Hypergraph::complete_k_uniform(n, profile)?)
    } else {
        None
    };
    let h = || hypergraph.as_ref().expect("dense checks run only below the dense cap");

    suite.run("stabilization", DENSE_MAX_N, || {
        let state = build_state(h())?;
        for l in 1..=n {
            let mut g = state.clone();
            g.direct_stabilizer(h(), l)?;
            if g != state {
                return Ok(Some(format!("g_{l} does not fix the state")));
            }
        }
        Ok(None)
    })?;

    suite.run("stabilizer-group", GROUP_MAX_N, || {
        let state = build_state(h())?;
        for x in 0..1u64 << n {
            let mut s = state.clone();
            s.stabilizer_product(h(), x)?;
            if s != state {
                return Ok(Some(format!("S_x with x = {x:0n$b} does not fix the state")));
            }
        }
        Ok(None)
    })?;

    suite.run("commutation", COMMUTATION_MAX_N, || {
        Ok((!stabilizers_commute(h())?).then(|| "some g_i, g_j do not commute".to_string()))
    })?;

    suite.run("projector", PROJECTOR_CHECK_MAX_N, || {
        Ok((!projector_identity_holds(h())?).then(|| "2^-n sum_x S_x differs from |H><H|".to_string()))
    })?;

    suite.run("expansion-equivalence", EQUIVALENCE_MAX_N, || {
        for l in 1..=n {
            let op = expanded_stabilizer(n, profile, l)?.operator()?;
            for sigma in 0..1u64 << n {
                let (sign, image) = stabilizer_on_basis(h(), l, sigma)?;
                let (coeff, expanded_image) = op.apply_to_basis(sigma);
                if image != expanded_image || coeff != DyadicRational::from(i64::from(sign)) {
                    return Ok(Some(format!("expanded and direct g_{l} differ on basis state {sigma:0n$b}")));
                }
            }
        }
        Ok(None)
    })?;

    suite.run("probe-simulation", PROBE_SIM_MAX_N, || {
        for m in 0..n {
            if ProbeState::new(m, n)?.stabilizer_expectation(h())? != f_k(n, profile, m)? {
                return Ok(Some(format!("simulated <psi_m|g_n|psi_m> differs from f_k at m = {m}")));
            }
        }
        Ok(None)
    })?;

    suite.run("quantum-value", QUANTUM_MAX_N, || {
        let f = BellFunctional::from_expansion(expansion.clone());
        let q = quantum_value(&f, h())?;
        Ok((q != DyadicRational::from(n as i64)).then(|| format!("quantum value {q}, expected {n}")))
    })?;

    suite.run("classical-bound-paths", BOUND_PATHS_MAX_N, || {
        let f = BellFunctional::from_expansion(expansion.clone());
        let (fast, slow) = (classical_bound(&f)?, classical_bound_exhaustive(&f)?);
        Ok((fast != slow).then(|| format!("symmetric bound {fast}, exhaustive bound {slow}")))
    })?;

    Ok(VerificationReport { n, profile: profile.clone(), checks: suite.checks })
}
