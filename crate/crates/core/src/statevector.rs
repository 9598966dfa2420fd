//! Dense desk-scale simulator for hypergraph states.
//!
//! Every operator in play (X, Z, generalized CZ) maps a computational basis
//! state to plus or minus another basis state, so a hypergraph state is
//! stored as one sign per basis index with the `2^{-n/2}` normalization left
//! implicit. All checks in this module are exact integer comparisons.
//!
//! The gate kernels are generic over the amplitude type so the same code can
//! act on sign vectors, integer basis vectors, and dyadic amplitude vectors.

use std::ops::Neg;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::dyadic::DyadicRational;
use crate::error::{check_cap, Error, Result};
use crate::hypergraph::{Hypergraph, UniformityProfile, VertexSet};

/// Largest vertex count for which a full state vector is built.
pub const DENSE_MAX_N: usize = 20;
/// Cap for applying products of stabilizers.
pub const PRODUCT_MAX_N: usize = 16;
/// Cap for the `2^n x 2^n` projector assembly.
pub const PROJECTOR_MAX_N: usize = 6;
/// Cap on the string length `n - m - 1` of the literal probe sum.
pub const PROBE_DIRECT_MAX_LEN: usize = 24;

/// Flip the sign of every amplitude whose index contains all of `mask`.
pub fn apply_cz_to<T: Neg<Output = T> + Default>(amps: &mut [T], mask: u64) {
    let full = (amps.len() - 1) as u64;
    debug_assert!(mask & !full == 0);
    let free = full & !mask;
    let mut sub = free;
    loop {
        let idx = (sub | mask) as usize;
        let v = std::mem::take(&mut amps[idx]);
        amps[idx] = -v;
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
}

/// Swap amplitude pairs that differ in the bit of vertex `l`.
pub fn apply_x_to<T>(amps: &mut [T], l: usize) {
    let bit = 1usize << (l - 1);
    for tau in 0..amps.len() {
        if tau & bit == 0 {
            amps.swap(tau, tau | bit);
        }
    }
}

/// `g_l = X_l prod_{e' in N(l)} CZ_{e'}`: all CZ first, then `X_l`.
pub fn direct_stabilizer_to<T: Neg<Output = T> + Default>(
    amps: &mut [T],
    h: &Hypergraph,
    l: usize,
) -> Result<()> {
    check_len(amps.len(), h.n())?;
    for e in h.neighborhood(l)? {
        apply_cz_to(amps, e.bits());
    }
    apply_x_to(amps, l);
    Ok(())
}

/// `S_x = prod_i g_i^{x_i}`, applying the `g_i` in ascending vertex order.
pub fn stabilizer_product_to<T: Neg<Output = T> + Default>(
    amps: &mut [T],
    h: &Hypergraph,
    x: u64,
) -> Result<()> {
    check_cap("stabilizer product", h.n(), PRODUCT_MAX_N)?;
    if x >> h.n() != 0 {
        return Err(Error::OutOfRange(format!("x = {x:#b} has more than n = {} bits", h.n())));
    }
    for i in VertexSet::from_bits(x).iter() {
        direct_stabilizer_to(amps, h, i)?;
    }
    Ok(())
}

/// Image of the basis state `|sigma>` under `g_l`: `g_l |sigma> = sign |image>`.
pub fn stabilizer_on_basis(h: &Hypergraph, l: usize, sigma: u64) -> Result<(i8, u64)> {
    let mut sign = 1i8;
    for e in h.neighborhood(l)? {
        if e.bits() & sigma == e.bits() {
            sign = -sign;
        }
    }
    Ok((sign, sigma ^ (1 << (l - 1))))
}

fn check_len(len: usize, n: usize) -> Result<()> {
    if len != 1usize << n {
        return Err(Error::Mismatch(format!("vector of length {len} for n = {n}")));
    }
    Ok(())
}

fn check_vertex(l: usize, n: usize) -> Result<()> {
    if l == 0 || l > n {
        Err(Error::VertexOutOfRange { vertex: l, n })
    } else {
        Ok(())
    }
}

/// A real equal-magnitude state `2^{-n/2} sum_tau signs[tau] |tau>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignState {
    n: usize,
    signs: Vec<i8>,
}

impl SignState {
    /// `|+>^{n}`.
    pub fn plus(n: usize) -> Result<Self> {
        check_cap("dense state", n, DENSE_MAX_N)?;
        Ok(SignState { n, signs: vec![1; 1 << n] })
    }

    pub fn from_signs(n: usize, signs: Vec<i8>) -> Result<Self> {
        check_cap("dense state", n, DENSE_MAX_N)?;
        check_len(signs.len(), n)?;
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::OutOfRange(format!("sign {bad} is not +1 or -1")));
        }
        Ok(SignState { n, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn apply_cz(&mut self, e: VertexSet) -> Result<()> {
        if e.max_vertex() > self.n {
            return Err(Error::VertexOutOfRange { vertex: e.max_vertex(), n: self.n });
        }
        if e.is_empty() {
            return Err(Error::OutOfRange("CZ on an empty vertex set".into()));
        }
        apply_cz_to(&mut self.signs, e.bits());
        Ok(())
    }

    pub fn apply_x(&mut self, l: usize) -> Result<()> {
        check_vertex(l, self.n)?;
        apply_x_to(&mut self.signs, l);
        Ok(())
    }

    pub fn direct_stabilizer(&mut self, h: &Hypergraph, l: usize) -> Result<()> {
        direct_stabilizer_to(&mut self.signs, h, l)
    }

    pub fn stabilizer_product(&mut self, h: &Hypergraph, x: u64) -> Result<()> {
        stabilizer_product_to(&mut self.signs, h, x)
    }

    /// `<psi| X_l Z_v |psi>`, exactly.
    pub fn expectation_zx(&self, l: usize, v: VertexSet) -> Result<DyadicRational> {
        check_vertex(l, self.n)?;
        if v.max_vertex() > self.n {
            return Err(Error::VertexOutOfRange { vertex: v.max_vertex(), n: self.n });
        }
        if v.contains(l) {
            return Err(Error::XSiteInZString { x_site: l, z_support: v.to_string() });
        }
        let bit = 1usize << (l - 1);
        let total: i64 = (0..self.signs.len())
            .map(|tau| {
                let z = if (tau as u64 & v.bits()).count_ones().is_multiple_of(2) { 1 } else { -1 };
                i64::from(self.signs[tau]) * i64::from(self.signs[tau ^ bit]) * z
            })
            .sum();
        Ok(DyadicRational::new(total, self.n as u32))
    }

    /// `<self|amps>` where `amps` uses the same implicit `2^{-n/2}` scale.
    pub fn inner_product(&self, amps: &[DyadicRational]) -> Result<DyadicRational> {
        check_len(amps.len(), self.n)?;
        let sum: DyadicRational = self
            .signs
            .iter()
            .zip(amps)
            .map(|(&s, a)| if s > 0 { a.clone() } else { -a })
            .sum();
        Ok(sum.div_pow2(self.n as u32))
    }
}

/// `|H> = prod_e CZ_e |+>^n`, with `signs[tau] = (-1)^{n_E(tau)}`.
pub fn build_state(h: &Hypergraph) -> Result<SignState> {
    let n = h.n();
    check_cap("dense state", n, DENSE_MAX_N)?;
    // Parity of the number of edges below each index: subset-sum transform mod 2.
    let mut parity = vec![0u8; 1 << n];
    for e in h.edges() {
        parity[e.bits() as usize] ^= 1;
    }
    for i in 0..n {
        let bit = 1usize << i;
        for tau in 0..parity.len() {
            if tau & bit != 0 {
                parity[tau] ^= parity[tau ^ bit];
            }
        }
    }
    let signs = parity.into_iter().map(|p| 1 - 2 * p as i8).collect();
    Ok(SignState { n, signs })
}

/// Whether every `g_l` commutes with every `g_j`, checked on each basis state.
pub fn stabilizers_commute(h: &Hypergraph) -> Result<bool> {
    check_cap("commutation check", h.n(), PRODUCT_MAX_N)?;
    let n = h.n();
    let apply = |l: usize, (s, sigma): (i8, u64)| -> Result<(i8, u64)> {
        let (s2, image) = stabilizer_on_basis(h, l, sigma)?;
        Ok((s * s2, image))
    };
    for sigma in 0..1u64 << n {
        for i in 1..=n {
            for j in i + 1..=n {
                let ij = apply(j, apply(i, (1, sigma))?)?;
                let ji = apply(i, apply(j, (1, sigma))?)?;
                if ij != ji {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `sum_x S_x` as a dense row-major `2^n x 2^n` integer matrix, assembled by
/// applying every group element to every basis state.
pub fn stabilizer_group_sum(h: &Hypergraph) -> Result<Vec<i64>> {
    let n = h.n();
    check_cap("projector assembly", n, PROJECTOR_MAX_N)?;
    let dim = 1usize << n;
    let mut matrix = vec![0i64; dim * dim];
    for x in 0..1u64 << n {
        for col in 0..dim {
            let mut basis = vec![0i64; dim];
            basis[col] = 1;
            stabilizer_product_to(&mut basis, h, x)?;
            for (row, amp) in basis.into_iter().enumerate() {
                matrix[row * dim + col] += amp;
            }
        }
    }
    Ok(matrix)
}

/// `|H><H| = 2^{-n} sum_x S_x`, compared entrywise. Both sides are scaled by
/// `2^n`, so the check is `sum_x S_x [i][j] = s_i s_j`.
pub fn projector_identity_holds(h: &Hypergraph) -> Result<bool> {
    let sum = stabilizer_group_sum(h)?;
    let state = build_state(h)?;
    let s = state.signs();
    let dim = s.len();
    Ok((0..dim).all(|i| (0..dim).all(|j| sum[i * dim + j] == i64::from(s[i]) * i64::from(s[j]))))
}

/// `|psi_m> = |0...0> (m zeros) followed by |+...+>` on `n` qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeState {
    m: usize,
    n: usize,
}

impl ProbeState {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n == 0 || m > n - 1 {
            return Err(Error::OutOfRange(format!("probe needs 0 <= m <= n - 1, got m = {m}, n = {n}")));
        }
        Ok(ProbeState { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `<psi_m| g_n |psi_m>` for the last vertex, via the dense simulator.
    pub fn stabilizer_expectation(&self, h: &Hypergraph) -> Result<DyadicRational> {
        if h.n() != self.n {
            return Err(Error::Mismatch(format!("probe on {} qubits, hypergraph on {}", self.n, h.n())));
        }
        check_cap("dense probe", self.n, DENSE_MAX_N)?;
        let zeros = (1u64 << self.m) - 1;
        // Unnormalized: amplitude 1 on every index with the first m bits clear.
        let psi: Vec<i64> = (0..1u64 << self.n).map(|t| i64::from(t & zeros == 0)).collect();
        let mut g_psi = psi.clone();
        direct_stabilizer_to(&mut g_psi, h, self.n)?;
        let overlap: i64 = psi.iter().zip(&g_psi).map(|(a, b)| a * b).sum();
        Ok(DyadicRational::new(overlap, (self.n - self.m) as u32))
    }
}

/// `2^{-(n-m-1)} sum_{tau in {0,1}^{n-m-1}} (-1)^{n_{k-1}(tau)}`, summed
/// string by string with `n_{k-1}(tau) = sum_i C(|tau|, k_i - 1)` taken as an
/// exact integer before its parity is read.
pub fn probe_expectation_direct(n: usize, profile: &UniformityProfile, m: usize) -> Result<DyadicRational> {
    profile.validate_for(n)?;
    if m > n - 1 {
        return Err(Error::OutOfRange(format!("m = {m} outside 0..={}", n - 1)));
    }
    let len = n - m - 1;
    check_cap("literal probe sum", len, PROBE_DIRECT_MAX_LEN)?;
    let reduced: Vec<usize> = profile.ks().iter().map(|k| k - 1).collect();
    let two = BigInt::from(2);
    let odd_by_weight: Vec<bool> = (0..=len)
        .map(|w| {
            let count: BigInt = reduced.iter().map(|&j| crate::combinatorics::binom(w as u64, j as i64)).sum();
            count % &two != BigInt::from(0)
        })
        .collect();
    let total: i64 = (0..1u64 << len)
        .into_par_iter()
        .map(|tau| if odd_by_weight[tau.count_ones() as usize] { -1 } else { 1 })
        .sum();
    Ok(DyadicRational::new(total, len as u32))
}
