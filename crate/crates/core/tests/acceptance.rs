//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperstab::bell::{classical_bound, classical_bound_exhaustive, quantum_value, BellFunctional};
use hyperstab::expansion::{c0_scan, coefficients, expanded_stabilizer, f_k, sign_scan};
use hyperstab::statevector::{build_state, probe_expectation_direct, projector_identity_holds, stabilizer_on_basis};
use hyperstab::{alt_binom_identity, binom, DyadicRational, Hypergraph, UniformityProfile};
use num_bigint::BigInt;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

const MILLIS: Duration = Duration::from_secs(1);
const SECONDS: Duration = Duration::from_secs(30);
const MINUTE: Duration = Duration::from_secs(60);

fn d(num: i64, e: u32) -> DyadicRational {
    DyadicRational::new(num, e)
}

fn single(k: usize) -> UniformityProfile {
    UniformityProfile::single(k).unwrap()
}

fn complete(n: usize, profile: &UniformityProfile) -> Hypergraph {
    Hypergraph::complete_k_uniform(n, profile).unwrap()
}

/// Every single-k and two-element profile valid for `n`.
fn one_and_two_k_profiles(n: usize) -> Vec<UniformityProfile> {
    let mut out: Vec<_> = (2..=n).map(single).collect();
    for a in 2..=n {
        for b in a + 1..=n {
            out.push(UniformityProfile::new(vec![a, b]).unwrap());
        }
    }
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn four_qubit_example() -> Outcome {
    let c = coefficients(4, &single(3)).map_err(|e| e.to_string())?;
    let expected = [d(0, 0), d(1, 1), d(0, 0), d(-1, 1)];
    ensure(c.coeffs() == expected, || format!("got {:?}", c.coeffs()))?;
    Ok("C = (0, 1/2, 0, -1/2) for n = 4, k = 3".into())
}

fn stabilization() -> Outcome {
    let pairs: Vec<(usize, usize)> = (2..=10).flat_map(|n| (2..=n).map(move |k| (n, k))).collect();
    pairs.par_iter().try_for_each(|&(n, k)| {
        let h = complete(n, &single(k));
        let state = build_state(&h).unwrap();
        for l in 1..=n {
            let mut g = state.clone();
            g.direct_stabilizer(&h, l).unwrap();
            ensure(g == state, || format!("g_{l} moves the state for n = {n}, k = {k}"))?;
        }
        if n <= 8 {
            for x in 0..1u64 << n {
                let mut s = state.clone();
                s.stabilizer_product(&h, x).unwrap();
                ensure(s == state, || format!("S_{x:b} moves the state for n = {n}, k = {k}"))?;
            }
        }
        Ok::<(), String>(())
    })?;
    Ok(format!("{} profiles: every g_l fixes |H>; every S_x fixes |H> for n <= 8", pairs.len()))
}

fn expansion_equals_direct() -> Outcome {
    let pairs: Vec<(usize, usize)> = (2..=10).flat_map(|n| (2..=n).map(move |k| (n, k))).collect();
    let checked: u64 = pairs
        .par_iter()
        .map(|&(n, k)| -> Result<u64, String> {
            let h = complete(n, &single(k));
            for l in 1..=n {
                let op = expanded_stabilizer(n, &single(k), l).unwrap().operator().unwrap();
                for sigma in 0..1u64 << n {
                    let (sign, image) = stabilizer_on_basis(&h, l, sigma).unwrap();
                    let (coeff, expanded_image) = op.apply_to_basis(sigma);
                    ensure(image == expanded_image && coeff == d(i64::from(sign), 0), || {
                        format!("n = {n}, k = {k}, l = {l}, basis {sigma:b}: direct {sign}, expanded {coeff}")
                    })?;
                }
            }
            Ok(n as u64 * (1 << n))
        })
        .sum::<Result<u64, String>>()?;
    Ok(format!("{} profiles, {checked} (l, basis state) columns agree exactly", pairs.len()))
}

fn dual_formula_and_master_identity() -> Outcome {
    let dual: Vec<(usize, UniformityProfile)> = (2..=20)
        .flat_map(|n| one_and_two_k_profiles(n).into_iter().map(move |p| (n, p)))
        .collect();
    dual.par_iter().try_for_each(|(n, p)| {
        for m in 0..*n {
            let fast = f_k(*n, p, m).unwrap();
            let literal = probe_expectation_direct(*n, p, m).unwrap();
            ensure(fast == literal, || format!("n = {n}, k = ({p}), m = {m}: {fast} vs {literal}"))?;
        }
        Ok::<(), String>(())
    })?;
    let master: Vec<(usize, UniformityProfile)> = (2..=64)
        .flat_map(|n| one_and_two_k_profiles(n).into_iter().map(move |p| (n, p)))
        .collect();
    master.par_iter().try_for_each(|(n, p)| {
        let c = coefficients(*n, p).unwrap();
        ensure(c.master_identity_holds().unwrap(), || format!("master identity fails for n = {n}, k = ({p})"))
    })?;
    Ok(format!(
        "f_k = literal tau-sum on {} (n, k) pairs with n <= 20; master identity on {} pairs with n <= 64",
        dual.len(),
        master.len()
    ))
}

fn binomial_identity() -> Outcome {
    for m in 0..=30u64 {
        for r in 0..=m {
            alt_binom_identity(m, r).map_err(|e| e.to_string())?;
        }
    }
    // The sign as printed, -(-1)^m C(m+1, r), fails already at m = 2, r = 0:
    // direct summation gives 1 - 3 + 3 = +1.
    let (lhs, _) = alt_binom_identity(2, 0).map_err(|e| e.to_string())?;
    let printed = -binom(3, 0);
    ensure(lhs == BigInt::from(1) && lhs != printed, || format!("lhs at (2, 0) is {lhs}"))?;
    Ok("identity with sign (-1)^m holds for 0 <= r <= m <= 30; printed sign -(-1)^m fails at (m=2, r=0)".into())
}

fn c0_conditions() -> Outcome {
    let scan = c0_scan(64, 64).map_err(|e| e.to_string())?;
    let mut graph_rows = Vec::new();
    for row in scan.discrepancies() {
        ensure(row.k == 2, || {
            format!(
                "n = {}, k = {}: exact C0 = 0 is {}, predicate is {}",
                row.n, row.k, row.c0_is_zero_exact, row.c0_predicate
            )
        })?;
        graph_rows.push(row.n);
    }
    let checked = scan.rows.iter().filter(|r| r.k >= 3).count();
    let zero_rows = scan.rows.iter().filter(|r| r.k >= 3 && r.c0_is_zero_exact).count();
    ensure(graph_rows.iter().all(|n| n % 2 == 1), || format!("unexpected k = 2 rows {graph_rows:?}"))?;
    Ok(format!(
        "{checked} rows with 3 <= k <= n <= 64 agree ({zero_rows} with C0 = 0); \
         k = 2 discrepancy rows (C0 = 0, predicate false) at n = {graph_rows:?}"
    ))
}

fn negative_coefficients() -> Outcome {
    let scan = sign_scan(20, 20).map_err(|e| e.to_string())?;
    let missing = scan.pairs_without_negative();
    ensure(missing.is_empty(), || format!("no negative coefficient for {missing:?}"))?;
    Ok(format!("all {} pairs with 3 <= k < n <= 20 have min C_m < 0", scan.rows.len()))
}

fn bell_negative_result() -> Outcome {
    let spot = |n, k| classical_bound(&BellFunctional::new(n, &single(k)).unwrap()).unwrap();
    ensure(spot(4, 3) == d(4, 0), || format!("classical bound (4, 3) = {}", spot(4, 3)))?;
    ensure(spot(3, 3) == d(3, 0), || format!("classical bound (3, 3) = {}", spot(3, 3)))?;
    let pairs: Vec<(usize, usize)> = (4..=10).flat_map(|n| (3..n).map(move |k| (n, k))).collect();
    pairs.par_iter().try_for_each(|&(n, k)| {
        let f = BellFunctional::new(n, &single(k)).unwrap();
        let fast = classical_bound(&f).unwrap();
        let exhaustive = classical_bound_exhaustive(&f).unwrap();
        let quantum = quantum_value(&f, &complete(n, &single(k))).unwrap();
        ensure(fast == exhaustive, || format!("n = {n}, k = {k}: fast {fast} vs exhaustive {exhaustive}"))?;
        ensure(quantum == d(n as i64, 0), || format!("n = {n}, k = {k}: quantum value {quantum}"))?;
        ensure(fast >= quantum, || format!("n = {n}, k = {k}: violation, bound {fast} < quantum {quantum}"))
    })?;
    Ok(format!("no violation on {} pairs with 3 <= k < n <= 10; bounds (4,3) = 4, (3,3) = 3", pairs.len()))
}

fn projector_identity() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        let mut ks = vec![2, 3, n];
        ks.retain(|&k| k <= n);
        ks.dedup();
        for k in ks {
            let ok = projector_identity_holds(&complete(n, &single(k))).map_err(|e| e.to_string())?;
            ensure(ok, || format!("projector identity fails for n = {n}, k = {k}"))?;
            count += 1;
        }
    }
    Ok(format!("2^-n sum_x S_x = |H><H| entrywise on {count} profiles with n <= 4"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 four-qubit example exactness", MILLIS, four_qubit_example),
        ("AC2 stabilization suite", SECONDS, stabilization),
        ("AC3 expansion equals direct operator", MINUTE, expansion_equals_direct),
        ("AC4 dual-formula oracle and master identity", MINUTE, dual_formula_and_master_identity),
        ("AC5 alternating binomial identity", SECONDS, binomial_identity),
        ("AC6 C0 = 0 conditions", MINUTE, c0_conditions),
        ("AC7 negative coefficient for k > 2", SECONDS, negative_coefficients),
        ("AC8 no Bell violation", MINUTE, bell_negative_result),
        ("AC9 projector identity", SECONDS, projector_identity),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()))
            .and_then(|summary| {
                let took = start.elapsed();
                if took > budget {
                    Err(format!("took {took:.2?}, budget {budget:?}"))
                } else {
                    Ok(summary)
                }
            });
        let took = start.elapsed();
        match outcome {
            Ok(summary) => println!("PASS {name} [{took:.2?}]: {summary}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} [{took:.2?}]: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
