//! Local expansion of complete **k**-uniform hypergraph stabilizers.
//!
//! The stabilizer `g_l = X_l prod_{e' in N(l)} CZ_{e'}` of a complete
//! **k**-uniform hypergraph state is rewritten as
//!
//! ```text
//! g_l = X_l ( C_0 I + sum_{m=1}^{n-1} C_m sum_{v in V\{l}, |v| = m} Z_v )
//! ```
//!
//! The coefficients come from the probe function
//!
//! ```text
//! f_k(m) = 2^{-(n-1-m)} sum_{s=0}^{n-1-m} C(n-1-m, s) (-1)^{sum_i C(s, k_i - 1)}
//! ```
//!
//! which satisfies `f_k(m) = C_0 + sum_{j=1}^{m} C_j C(m, j)` and is inverted as
//! `C_j = sum_{r=0}^{j} (-1)^{j-r} C(j, r) f_k(r)`. Only the parity of the
//! exponent in `f_k` matters, and it is read off bitwise, so coefficient
//! computation never touches a state vector and scales well past the dense cap.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::{binom_parity, binomial_row};
use crate::dyadic::DyadicRational;
use crate::error::{check_cap, Error, Result};
use crate::hypergraph::{UniformityProfile, VertexSet, MAX_VERTICES};
use crate::statevector::SignState;

/// Cap for materializing all `2^{n-1}` terms of an expanded stabilizer.
pub const EXPANDED_MAX_N: usize = 20;
/// Cap for applying an expanded stabilizer to a dense vector.
pub const ZX_APPLY_MAX_N: usize = 14;
/// Largest `n` accepted by the coefficient scans.
pub const SCAN_MAX_N: usize = 128;

/// Expansion of a single generalized CZ on `arity` qubits:
/// `CZ_v = constant I + sum_{m=1}^{arity} level(m) sum_{|v'| = m} Z_{v'}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CzExpansion {
    arity: usize,
    constant: DyadicRational,
    level_coeff: Vec<DyadicRational>,
}

impl CzExpansion {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn constant(&self) -> &DyadicRational {
        &self.constant
    }

    /// Shared coefficient of every `Z_{v'}` with `|v'| = m`, for `1 <= m <= arity`.
    pub fn level(&self, m: usize) -> &DyadicRational {
        &self.level_coeff[m - 1]
    }

    /// Diagonal of the reassembled operator, indexed by basis state of the
    /// `arity` qubits.
    pub fn diagonal(&self) -> Vec<DyadicRational> {
        let w = self.arity;
        (0..1u64 << w)
            .map(|sigma| {
                let mut entry = self.constant.clone();
                for v in 1..1u64 << w {
                    let c = self.level(v.count_ones() as usize);
                    if (sigma & v).count_ones() % 2 == 0 {
                        entry += c;
                    } else {
                        entry -= c;
                    }
                }
                entry
            })
            .collect()
    }
}

pub fn cz_expand(arity: usize) -> Result<CzExpansion> {
    if arity == 0 {
        return Err(Error::ZeroArity);
    }
    let scale = (arity - 1) as u32;
    let constant = DyadicRational::one() - DyadicRational::new(1, scale);
    let level_coeff = (1..=arity)
        .map(|m| DyadicRational::new(if m % 2 == 1 { 1 } else { -1 }, scale))
        .collect();
    Ok(CzExpansion { arity, constant, level_coeff })
}

fn check_m(n: usize, m: usize) -> Result<()> {
    if n == 0 || m > n - 1 {
        return Err(Error::OutOfRange(format!("m = {m} outside 0..={}", n.saturating_sub(1))));
    }
    Ok(())
}

/// Probe value `f_k(m) = <psi_m| g_n |psi_m>` through the weight-grouped sum.
pub fn f_k(n: usize, profile: &UniformityProfile, m: usize) -> Result<DyadicRational> {
    profile.validate_for(n)?;
    check_m(n, m)?;
    let len = (n - 1 - m) as u64;
    let reduced: Vec<u64> = profile.ks().iter().map(|&k| k as u64 - 1).collect();
    let mut total = BigInt::zero();
    for (s, weight) in binomial_row(len).into_iter().enumerate() {
        let odd = reduced.iter().filter(|&&j| binom_parity(s as u64, j)).count() % 2 == 1;
        if odd {
            total -= weight;
        } else {
            total += weight;
        }
    }
    Ok(DyadicRational::new(total, len as u32))
}

/// Coefficients `C_0 .. C_{n-1}` of the expanded stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    n: usize,
    profile: UniformityProfile,
    coeffs: Vec<DyadicRational>,
}

impl LocalExpansion {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn profile(&self) -> &UniformityProfile {
        &self.profile
    }

    pub fn coeffs(&self) -> &[DyadicRational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &DyadicRational {
        &self.coeffs[m]
    }

    pub fn c0(&self) -> &DyadicRational {
        &self.coeffs[0]
    }

    /// `C_0 + sum_{j=1}^{m} C_j C(m, j)`, the probe value rebuilt from the coefficients.
    pub fn recombine(&self, m: usize) -> DyadicRational {
        binomial_row(m as u64)
            .iter()
            .zip(&self.coeffs)
            .map(|(b, c)| c * b)
            .sum()
    }

    /// Whether `recombine(m) == f_k(m)` for every `m` in `0..n`.
    pub fn master_identity_holds(&self) -> Result<bool> {
        for m in 0..self.n {
            if self.recombine(m) != f_k(self.n, &self.profile, m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn min_coeff(&self) -> &DyadicRational {
        self.coeffs.iter().min().expect("at least one coefficient")
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(DyadicRational::is_negative)
    }
}

pub fn coefficients(n: usize, profile: &UniformityProfile) -> Result<LocalExpansion> {
    profile.validate_for(n)?;
    let fs = (0..n).map(|m| f_k(n, profile, m)).collect::<Result<Vec<_>>>()?;
    let coeffs = (0..n)
        .map(|j| {
            binomial_row(j as u64)
                .iter()
                .enumerate()
                .map(|(r, b)| {
                    let term = &fs[r] * b;
                    if (j - r) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    Ok(LocalExpansion { n, profile: profile.clone(), coeffs })
}

/// `X_l (sum_v c_v Z_v)` with every `v` avoiding the X site.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZXPolynomial {
    n: usize,
    x_site: usize,
    terms: BTreeMap<VertexSet, DyadicRational>,
}

impl ZXPolynomial {
    pub fn new(n: usize, x_site: usize, terms: BTreeMap<VertexSet, DyadicRational>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OutOfRange(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
        }
        if x_site == 0 || x_site > n {
            return Err(Error::VertexOutOfRange { vertex: x_site, n });
        }
        for v in terms.keys() {
            if v.max_vertex() > n {
                return Err(Error::VertexOutOfRange { vertex: v.max_vertex(), n });
            }
            if v.contains(x_site) {
                return Err(Error::XSiteInZString { x_site, z_support: v.to_string() });
            }
        }
        Ok(ZXPolynomial { n, x_site, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_site(&self) -> usize {
        self.x_site
    }

    pub fn terms(&self) -> &BTreeMap<VertexSet, DyadicRational> {
        &self.terms
    }

    pub fn coefficient(&self, v: VertexSet) -> DyadicRational {
        self.terms.get(&v).cloned().unwrap_or_default()
    }

    /// Image under the relabeling `i -> perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<ZXPolynomial> {
        let terms = self.terms.iter().map(|(v, c)| (v.relabel(perm), c.clone())).collect();
        ZXPolynomial::new(self.n, perm[self.x_site - 1], terms)
    }

    /// Dense form of the operator: the diagonal `D(sigma) = sum_v c_v (-1)^{|sigma & v|}`
    /// of the Z part, evaluated with a Walsh-Hadamard transform.
    pub fn operator(&self) -> Result<ZxOperator> {
        check_cap("expanded stabilizer application", self.n, ZX_APPLY_MAX_N)?;
        let exponent = self.terms.values().map(DyadicRational::exponent).max().unwrap_or(0);
        let mut a = vec![BigInt::zero(); 1 << self.n];
        for (v, c) in &self.terms {
            a[v.bits() as usize] = c.scaled_numerator(exponent);
        }
        for i in 0..self.n {
            let bit = 1usize << i;
            for tau in 0..a.len() {
                if tau & bit == 0 {
                    let hi = std::mem::take(&mut a[tau | bit]);
                    let lo = std::mem::take(&mut a[tau]);
                    a[tau | bit] = &lo - &hi;
                    a[tau] = lo + hi;
                }
            }
        }
        let diagonal = a.into_iter().map(|x| DyadicRational::new(x, exponent)).collect();
        Ok(ZxOperator { n: self.n, x_site: self.x_site, diagonal })
    }
}

/// `X_l D` in dense form: `(X_l D)|sigma> = D(sigma) |sigma xor bit(l)>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZxOperator {
    n: usize,
    x_site: usize,
    diagonal: Vec<DyadicRational>,
}

impl ZxOperator {
    pub fn diagonal(&self) -> &[DyadicRational] {
        &self.diagonal
    }

    pub fn apply_to_basis(&self, sigma: u64) -> (DyadicRational, u64) {
        (self.diagonal[sigma as usize].clone(), sigma ^ (1 << (self.x_site - 1)))
    }

    /// `out[tau] = D(tau xor bit) amps[tau xor bit]`; the Z part never touches
    /// the X site, so `D(tau xor bit) = D(tau)`.
    pub fn apply(&self, amps: &[DyadicRational]) -> Result<Vec<DyadicRational>> {
        if amps.len() != self.diagonal.len() {
            return Err(Error::Mismatch(format!(
                "vector of length {} for n = {}",
                amps.len(),
                self.n
            )));
        }
        let bit = 1usize << (self.x_site - 1);
        Ok((0..amps.len())
            .map(|tau| &self.diagonal[tau ^ bit] * &amps[tau ^ bit])
            .collect())
    }
}

/// The expanded form of `g_l`: coefficient `C_{|v|}` on every `v` in
/// `V \ {l}` (the empty set carries `C_0`). Zero coefficients are omitted.
pub fn expanded_stabilizer(n: usize, profile: &UniformityProfile, l: usize) -> Result<ZXPolynomial> {
    check_cap("expanded stabilizer", n, EXPANDED_MAX_N)?;
    if l == 0 || l > n {
        return Err(Error::VertexOutOfRange { vertex: l, n });
    }
    let expansion = coefficients(n, profile)?;
    let others = ((1u64 << n) - 1) & !(1 << (l - 1));
    let mut terms = BTreeMap::new();
    let mut sub = others;
    loop {
        let c = expansion.coeff(sub.count_ones() as usize);
        if !c.is_zero() {
            terms.insert(VertexSet::from_bits(sub), c.clone());
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
    ZXPolynomial::new(n, l, terms)
}

/// `sum_v c_v (X_l Z_v) |state>` as exact amplitudes on the state's implicit scale.
pub fn apply_zx_polynomial(state: &SignState, p: &ZXPolynomial) -> Result<Vec<DyadicRational>> {
    if state.n() != p.n() {
        return Err(Error::Mismatch(format!("state on {} qubits, polynomial on {}", state.n(), p.n())));
    }
    let amps: Vec<DyadicRational> = state.signs().iter().map(|&s| DyadicRational::from(i64::from(s))).collect();
    p.operator()?.apply(&amps)
}

/// True iff `k - 1 = 2^a` and `n` is a positive multiple of `2^{a+1}`.
/// Defined for single-uniformity profiles only.
pub fn c0_zero_predicate(n: usize, profile: &UniformityProfile) -> Result<bool> {
    let k = profile
        .as_single()
        .ok_or_else(|| Error::MultiUniformity(profile.to_string()))?;
    profile.validate_for(n)?;
    let j = k - 1;
    if !j.is_power_of_two() {
        return Ok(false);
    }
    Ok(n > 0 && n.is_multiple_of(2 * j))
}

/// One `(n, k)` row of a coefficient scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    pub k: usize,
    pub c0_is_zero_exact: bool,
    pub c0_predicate: bool,
    pub min_coeff: DyadicRational,
    pub first_negative_index: Option<usize>,
}

impl ScanRow {
    pub const CSV_HEADER: &'static str = "n,k,c0_is_zero_exact,c0_predicate,min_coeff,first_negative_index";

    pub fn compute(n: usize, k: usize) -> Result<Self> {
        let profile = UniformityProfile::single(k)?;
        let expansion = coefficients(n, &profile)?;
        Ok(ScanRow {
            n,
            k,
            c0_is_zero_exact: expansion.c0().is_zero(),
            c0_predicate: c0_zero_predicate(n, &profile)?,
            min_coeff: expansion.min_coeff().clone(),
            first_negative_index: expansion.first_negative(),
        })
    }

    /// The exact C0 test and the closed-form predicate disagree.
    pub fn is_c0_discrepancy(&self) -> bool {
        self.c0_is_zero_exact != self.c0_predicate
    }

    pub fn csv_record(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.k,
            self.c0_is_zero_exact,
            self.c0_predicate,
            self.min_coeff,
            self.first_negative_index.map(|i| i.to_string()).unwrap_or_default()
        )
    }
}

fn scan(pairs: Vec<(usize, usize)>) -> Result<Vec<ScanRow>> {
    pairs.into_par_iter().map(|(n, k)| ScanRow::compute(n, k)).collect()
}

/// Rows for `3 <= k < n <= n_max`, `k <= k_max`, ordered by `(n, k)`.
#[derive(Clone, Debug)]
pub struct SignScan {
    pub rows: Vec<ScanRow>,
}

impl SignScan {
    /// Pairs with no negative coefficient at all.
    pub fn pairs_without_negative(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .filter(|r| r.first_negative_index.is_none())
            .map(|r| (r.n, r.k))
            .collect()
    }
}

pub fn sign_scan(n_max: usize, k_max: usize) -> Result<SignScan> {
    check_cap("sign scan", n_max, SCAN_MAX_N)?;
    let pairs = (4..=n_max)
        .flat_map(|n| (3..n.min(k_max + 1)).map(move |k| (n, k)))
        .collect();
    Ok(SignScan { rows: scan(pairs)? })
}

/// Rows for `2 <= k <= min(n, k_max)`, `2 <= n <= n_max`, ordered by `(n, k)`.
#[derive(Clone, Debug)]
pub struct C0Scan {
    pub rows: Vec<ScanRow>,
}

impl C0Scan {
    pub fn discrepancies(&self) -> Vec<&ScanRow> {
        self.rows.iter().filter(|r| r.is_c0_discrepancy()).collect()
    }
}

pub fn c0_scan(n_max: usize, k_max: usize) -> Result<C0Scan> {
    check_cap("C0 scan", n_max, SCAN_MAX_N)?;
    let pairs = (2..=n_max)
        .flat_map(|n| (2..=n.min(k_max)).map(move |k| (n, k)))
        .collect();
    Ok(C0Scan { rows: scan(pairs)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::statevector::{build_state, stabilizer_on_basis};

    fn d(num: i64, e: u32) -> DyadicRational {
        DyadicRational::new(num, e)
    }

    fn single(k: usize) -> UniformityProfile {
        UniformityProfile::single(k).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs, 64).unwrap()
    }

    #[test]
    fn cz_expansion_examples() {
        let two = cz_expand(2).unwrap();
        assert_eq!(two.constant(), &d(1, 1));
        assert_eq!(two.level(1), &d(1, 1));
        assert_eq!(two.level(2), &d(-1, 1));

        let one = cz_expand(1).unwrap();
        assert_eq!(one.constant(), &d(0, 0));
        assert_eq!(one.level(1), &d(1, 0));

        let three = cz_expand(3).unwrap();
        assert_eq!(three.constant(), &d(3, 2));
        assert_eq!(
            [three.level(1), three.level(2), three.level(3)],
            [&d(1, 2), &d(-1, 2), &d(1, 2)]
        );
        assert!(matches!(cz_expand(0), Err(Error::ZeroArity)));
    }

    #[test]
    fn cz_expansion_reassembles_to_cz() {
        for w in 1..=6 {
            let diag = cz_expand(w).unwrap().diagonal();
            let all_ones = (1usize << w) - 1;
            for (sigma, entry) in diag.iter().enumerate() {
                let expected = if sigma == all_ones { -1 } else { 1 };
                assert_eq!(entry, &d(expected, 0), "w={w} sigma={sigma:b}");
            }
        }
    }

    #[test]
    fn f_k_examples() {
        let k3 = single(3);
        let values: Vec<_> = (0..4).map(|m| f_k(4, &k3, m).unwrap()).collect();
        assert_eq!(values, vec![d(0, 0), d(1, 1), d(1, 0), d(1, 0)]);
        for n in 2..12 {
            for m in 0..n {
                let expected = if m == n - 1 { d(1, 0) } else { d(0, 0) };
                assert_eq!(f_k(n, &single(2), m).unwrap(), expected);
            }
        }
        assert_eq!(f_k(6, &k3, 0).unwrap(), d(-1, 2));
        assert!(f_k(4, &k3, 4).is_err());
        assert!(f_k(2, &k3, 0).is_err());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(
            coefficients(4, &single(3)).unwrap().coeffs(),
            &[d(0, 0), d(1, 1), d(0, 0), d(-1, 1)]
        );
        assert_eq!(
            coefficients(3, &single(3)).unwrap().coeffs(),
            &[d(1, 1), d(1, 1), d(-1, 1)]
        );
        for n in 2..=30 {
            let c = coefficients(n, &single(2)).unwrap();
            for (m, cm) in c.coeffs().iter().enumerate() {
                assert_eq!(cm, &d(i64::from(m == n - 1), 0), "n={n} m={m}");
            }
        }
        assert!(matches!(coefficients(4, &single(5)), Err(Error::InvalidProfile(_))));
    }

    #[test]
    fn master_identity_small() {
        for n in 2..=24 {
            for k in 2..=n {
                let c = coefficients(n, &single(k)).unwrap();
                assert!(c.master_identity_holds().unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn expanded_stabilizer_examples() {
        let p = expanded_stabilizer(4, &single(3), 1).unwrap();
        let expected: BTreeMap<_, _> = [
            (set(&[2]), d(1, 1)),
            (set(&[3]), d(1, 1)),
            (set(&[4]), d(1, 1)),
            (set(&[2, 3, 4]), d(-1, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(p.terms(), &expected);
        assert_eq!(p.x_site(), 1);

        for n in 2..=8 {
            for l in 1..=n {
                let g = expanded_stabilizer(n, &single(2), l).unwrap();
                let all_but_l = VertexSet::from_bits((1 << n) - 1).without(l);
                assert_eq!(g.terms().len(), 1);
                assert_eq!(g.coefficient(all_but_l), d(1, 0));
            }
        }

        let p = expanded_stabilizer(3, &single(3), 2).unwrap();
        let expected: BTreeMap<_, _> = [
            (VertexSet::EMPTY, d(1, 1)),
            (set(&[1]), d(1, 1)),
            (set(&[3]), d(1, 1)),
            (set(&[1, 3]), d(-1, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(p.terms(), &expected);
        assert!(expanded_stabilizer(21, &single(3), 1).is_err());
        assert!(expanded_stabilizer(4, &single(3), 5).is_err());
    }

    #[test]
    fn zx_polynomial_rejects_x_site_in_terms() {
        let terms = [(set(&[1, 2]), d(1, 0))].into_iter().collect();
        assert!(matches!(ZXPolynomial::new(3, 1, terms), Err(Error::XSiteInZString { .. })));
    }

    #[test]
    fn walsh_transform_matches_term_by_term_sum() {
        for (n, k, l) in [(5, 3, 2), (6, 4, 6), (4, 3, 1), (7, 5, 3)] {
            let p = expanded_stabilizer(n, &single(k), l).unwrap();
            let op = p.operator().unwrap();
            for sigma in 0..1u64 << n {
                let naive: DyadicRational = p
                    .terms()
                    .iter()
                    .map(|(v, c)| if (sigma & v.bits()).count_ones() % 2 == 0 { c.clone() } else { -c })
                    .sum();
                assert_eq!(op.diagonal()[sigma as usize], naive);
            }
        }
    }

    #[test]
    fn expanded_form_fixes_the_state() {
        for n in 2..=8 {
            for k in 2..=n {
                let h = Hypergraph::complete_k_uniform(n, &single(k)).unwrap();
                let s = build_state(&h).unwrap();
                let as_dyadic: Vec<_> = s.signs().iter().map(|&x| DyadicRational::from(i64::from(x))).collect();
                for l in 1..=n {
                    let p = expanded_stabilizer(n, &single(k), l).unwrap();
                    assert_eq!(apply_zx_polynomial(&s, &p).unwrap(), as_dyadic, "n={n} k={k} l={l}");
                }
            }
        }
    }

    #[test]
    fn h34_expanded_matrix_matches_direct_matrix() {
        let h = Hypergraph::complete_k_uniform(4, &single(3)).unwrap();
        let op = expanded_stabilizer(4, &single(3), 1).unwrap().operator().unwrap();
        for sigma in 0..16u64 {
            let mut basis = vec![DyadicRational::zero(); 16];
            basis[sigma as usize] = DyadicRational::one();
            let column = op.apply(&basis).unwrap();
            let (sign, image) = stabilizer_on_basis(&h, 1, sigma).unwrap();
            for (row, amp) in column.iter().enumerate() {
                let expected = if row as u64 == image { i64::from(sign) } else { 0 };
                assert_eq!(amp, &d(expected, 0));
            }
        }
    }

    #[test]
    fn expanded_stabilizer_is_permutation_symmetric() {
        let p = expanded_stabilizer(6, &UniformityProfile::new(vec![2, 4]).unwrap(), 3).unwrap();
        // Relabelings that fix vertex 3.
        for perm in [[2, 1, 3, 4, 5, 6], [6, 5, 3, 1, 2, 4], [1, 4, 3, 2, 6, 5]] {
            assert_eq!(p.relabel(&perm).unwrap(), p);
        }
    }

    #[test]
    fn c0_predicate_examples() {
        assert!(c0_zero_predicate(4, &single(3)).unwrap());
        assert!(coefficients(4, &single(3)).unwrap().c0().is_zero());

        assert!(!c0_zero_predicate(6, &single(3)).unwrap());
        assert_eq!(coefficients(6, &single(3)).unwrap().c0(), &d(-1, 2));

        // Known disagreement: k = 2 with odd n has C0 = 0 but the predicate is false.
        assert!(!c0_zero_predicate(3, &single(2)).unwrap());
        assert!(coefficients(3, &single(2)).unwrap().c0().is_zero());

        assert!(c0_zero_predicate(8, &single(5)).unwrap());
        assert!(c0_zero_predicate(16, &single(5)).unwrap());
        assert!(!c0_zero_predicate(12, &single(5)).unwrap());
        assert!(matches!(
            c0_zero_predicate(6, &UniformityProfile::new(vec![2, 3]).unwrap()),
            Err(Error::MultiUniformity(_))
        ));
    }

    #[test]
    fn sign_scan_examples() {
        let scan = sign_scan(6, 6).unwrap();
        let row = |n, k| scan.rows.iter().find(|r| r.n == n && r.k == k).unwrap();
        assert_eq!(row(4, 3).first_negative_index, Some(3));
        assert_eq!(row(4, 3).min_coeff, d(-1, 1));
        assert_eq!(row(6, 3).first_negative_index, Some(0));
        assert_eq!(row(6, 3).min_coeff, d(-1, 2));
        let pairs: Vec<_> = scan.rows.iter().map(|r| (r.n, r.k)).collect();
        assert_eq!(pairs, vec![(4, 3), (5, 3), (5, 4), (6, 3), (6, 4), (6, 5)]);
        assert!(sign_scan(129, 3).is_err());
        assert_eq!(row(4, 3).csv_record(), "4,3,true,true,-1/2^1,3");
    }

    #[test]
    fn c0_scan_flags_odd_graph_rows() {
        let scan = c0_scan(9, 9).unwrap();
        let odd: Vec<_> = scan.discrepancies().iter().map(|r| (r.n, r.k)).collect();
        assert_eq!(odd, vec![(3, 2), (5, 2), (7, 2), (9, 2)]);
    }
}
