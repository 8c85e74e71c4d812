//! Index tuples, weights, N-statistics, Bruhat orders, and index-set
//! membership.
//!
//! Tuples `b ∈ ℤⁿ` index tensor monomials.  In the symplectic convention
//! (type C) the entry `j` carries weight `ε_{j−1}` when `j > 0` and `−ε_{−j}`
//! when `j ≤ 0`; in the linear convention (type A) a sign vector `σ` chooses
//! a dual or non-dual factor per slot and the entry `j` carries weight
//! `σ_r ε_j`.  The Bruhat order on tuples is the inverse-dominance order on
//! their weight sequences; [`bruhat_leq`] implements the finite N-statistic
//! characterisation, while [`inverse_dominance_leq`] expands partial-sum
//! differences in the simple-root basis and serves as the brute-force
//! cross-check.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// One tensor slot of the type A convention: `+` for the vector
/// representation, `-` for its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A word in `{+,-}ⁿ` selecting the type A tensor factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        assert!(!signs.is_empty(), "sign vector must be non-empty");
        SignVector(signs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, idx: usize) -> Sign {
        self.0[idx]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Drops the last slot (the length must be at least 2).
    pub fn prefix(&self) -> SignVector {
        assert!(self.len() > 1);
        SignVector(self.0[..self.len() - 1].to_vec())
    }

    /// `σ_1 + ⋯ + σ_s` as an integer.
    pub fn partial_sum(&self, s: usize) -> i64 {
        self.0[..s].iter().map(|x| x.value()).sum()
    }

    /// All `2ⁿ` sign vectors of the given length, lexicographically.
    pub fn all(n: usize) -> Vec<SignVector> {
        assert!(n >= 1);
        (0..1u32 << n)
            .map(|mask| {
                SignVector(
                    (0..n)
                        .map(|r| {
                            if mask & (1 << r) == 0 {
                                Sign::Plus
                            } else {
                                Sign::Minus
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// The sign vector matching the slot signs of `b`: `+` where the entry is
    /// positive, `-` where it is ≤ 0.
    pub fn from_tuple(b: &Tuple) -> SignVector {
        SignVector(
            b.entries()
                .iter()
                .map(|&x| if x > 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s == Sign::Plus { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::InvalidInput(format!(
                    "bad sign character {other:?} (expected + or -)"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        if signs.is_empty() {
            return Err(Error::InvalidInput("empty sign vector".into()));
        }
        Ok(SignVector(signs))
    }
}

/// An index tuple `b ∈ ℤⁿ`, `n ≥ 1`.  The derived `Ord` is lexicographic and
/// is the tie-break order used throughout.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple(Vec<i64>);

impl Tuple {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty(), "tuple must be non-empty");
        Tuple(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, idx: usize) -> i64 {
        self.0[idx]
    }

    pub fn last(&self) -> i64 {
        *self.0.last().unwrap()
    }

    /// Drops the last entry (the length must be at least 2).
    pub fn prefix(&self) -> Tuple {
        assert!(self.len() > 1);
        Tuple(self.0[..self.len() - 1].to_vec())
    }

    /// Appends an entry.
    pub fn push(&self, entry: i64) -> Tuple {
        let mut v = self.0.clone();
        v.push(entry);
        Tuple(v)
    }

    /// Adds `delta` to the entry at `idx`.
    pub fn bump(&self, idx: usize, delta: i64) -> Tuple {
        let mut v = self.0.clone();
        v[idx] += delta;
        Tuple(v)
    }

    /// Weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Strictly decreasing.
    pub fn is_strictly_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Weakly increasing.
    pub fn is_antidominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// No two entries sum to 1.
    pub fn is_typical(&self) -> bool {
        self.atypicality() == 0
    }

    /// Number of pairs `r < s` with `b_r + b_s = 1`.
    pub fn atypicality(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for r in 0..n {
            for s in r + 1..n {
                if self.0[r] + self.0[s] == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn count_positive(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    /// Enumerates the box `[lo, hi]ⁿ` in lexicographic order.
    pub fn box_iter(n: usize, lo: i64, hi: i64) -> impl Iterator<Item = Tuple> {
        assert!(n >= 1 && lo <= hi);
        let width = (hi - lo + 1) as u64;
        let total = width.checked_pow(n as u32).expect("box too large");
        (0..total).map(move |mut code| {
            let mut entries = vec![0i64; n];
            for slot in (0..n).rev() {
                entries[slot] = lo + (code % width) as i64;
                code /= width;
            }
            Tuple(entries)
        })
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, x) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Tuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidInput(format!("bad tuple entry {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::InvalidInput("empty tuple".into()));
        }
        Ok(Tuple(entries))
    }
}

/// Which weight lattice a [`Weight`] lives in: `ε_i` indices range over ℕ in
/// the symplectic convention and over ℤ in the linear one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    TypeC,
    TypeA,
}

/// An element of the free abelian group on the `ε_i`, tagged by its domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    domain: Domain,
    coeffs: BTreeMap<i64, i64>,
}

impl Weight {
    pub fn zero(domain: Domain) -> Self {
        Weight {
            domain,
            coeffs: BTreeMap::new(),
        }
    }

    /// The weight `sign · ε_index`.
    pub fn eps(domain: Domain, index: i64, sign: i64) -> Self {
        assert!(domain == Domain::TypeA || index >= 0, "type C indices lie in ℕ");
        let mut w = Weight::zero(domain);
        w.add_eps(index, sign);
        w
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, index: i64) -> i64 {
        self.coeffs.get(&index).copied().unwrap_or(0)
    }

    fn add_eps(&mut self, index: i64, amount: i64) {
        if amount == 0 {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert(0);
        *entry += amount;
        if *entry == 0 {
            self.coeffs.remove(&index);
        }
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        if self.domain != other.domain {
            return Err(Error::Incompatible("mixed weight domains".into()));
        }
        let mut out = self.clone();
        for (&i, &c) in &other.coeffs {
            out.add_eps(i, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        if self.domain != other.domain {
            return Err(Error::Incompatible("mixed weight domains".into()));
        }
        let mut out = self.clone();
        for (&i, &c) in &other.coeffs {
            out.add_eps(i, -c);
        }
        Ok(out)
    }

    /// Expands the weight in the simple-root basis, returning the coefficient
    /// of each `α_j` (omitting zeros), or `None` when the weight is not in
    /// the root lattice.
    ///
    /// Type A: `α_j = ε_j − ε_{j+1}` for `j ∈ ℤ`, so the coefficient of `α_j`
    /// is the prefix sum `Σ_{i ≤ j} c_i`; the expansion exists iff the
    /// coefficients sum to zero.  Type C: `α_0 = −2ε_0` and
    /// `α_j = ε_{j−1} − ε_j` for `j ≥ 1`, so the coefficient of `α_j` is the
    /// negated tail sum `−Σ_{i ≥ j} c_i` and the coefficient of `α_0` is
    /// `−(Σ_i c_i)/2`; the expansion exists iff the total is even.
    pub fn simple_root_coeffs(&self) -> Option<BTreeMap<i64, i64>> {
        let total: i64 = self.coeffs.values().sum();
        let mut out = BTreeMap::new();
        match self.domain {
            Domain::TypeA => {
                if total != 0 {
                    return None;
                }
                let mut prefix = 0i64;
                let indices: Vec<i64> = self.coeffs.keys().copied().collect();
                for (pos, &i) in indices.iter().enumerate() {
                    prefix += self.coeffs[&i];
                    // The prefix sum is constant on [i, next − 1]; record it
                    // for each j in that range (it vanishes past the support).
                    let upper = match indices.get(pos + 1) {
                        Some(&next) => next - 1,
                        None => i - 1, // prefix is 0 here; nothing to record
                    };
                    if prefix != 0 {
                        for j in i..=upper {
                            out.insert(j, prefix);
                        }
                    }
                }
            }
            Domain::TypeC => {
                if total.rem_euclid(2) != 0 {
                    return None;
                }
                if total != 0 {
                    out.insert(0, -total / 2);
                }
                let mut tail = 0i64;
                let indices: Vec<i64> = self.coeffs.keys().copied().collect();
                for (pos, &i) in indices.iter().enumerate().rev() {
                    tail += self.coeffs[&i];
                    if i == 0 {
                        break; // tails are only taken from j ≥ 1
                    }
                    let lower = match pos.checked_sub(1) {
                        Some(prev) => (indices[prev] + 1).max(1),
                        None => 1,
                    };
                    if -tail != 0 {
                        for j in lower..=i {
                            out.insert(j, -tail);
                        }
                    }
                }
            }
        }
        Some(out)
    }

    /// True when the weight is an ℕ-combination of simple roots.
    pub fn nonneg_root_combo(&self) -> bool {
        match self.simple_root_coeffs() {
            None => false,
            Some(m) => m.values().all(|&c| c >= 0),
        }
    }

    /// Dominance order: `self ⊵ other` iff the difference is an
    /// ℕ-combination of simple roots.
    pub fn dominates(&self, other: &Weight) -> Result<bool> {
        Ok(self.sub(other)?.nonneg_root_combo())
    }
}

/// Type C slot weight: `ε_{j−1}` for `j > 0`, `−ε_{−j}` for `j ≤ 0`.
pub fn slot_weight_c(entry: i64) -> Weight {
    if entry > 0 {
        Weight::eps(Domain::TypeC, entry - 1, 1)
    } else {
        Weight::eps(Domain::TypeC, -entry, -1)
    }
}

/// Type A slot weight: `σ_r ε_j`.
pub fn slot_weight_a(entry: i64, sign: Sign) -> Weight {
    Weight::eps(Domain::TypeA, entry, sign.value())
}

/// The weight sequence of a tuple in the type C convention.
pub fn wt_c(b: &Tuple) -> Vec<Weight> {
    b.entries().iter().map(|&x| slot_weight_c(x)).collect()
}

/// The weight sequence of a tuple in the type A convention.
pub fn wt_a(b: &Tuple, sigma: &SignVector) -> Vec<Weight> {
    assert_eq!(b.len(), sigma.len());
    b.entries()
        .iter()
        .zip(sigma.signs())
        .map(|(&x, &s)| slot_weight_a(x, s))
        .collect()
}

/// Total weight `|WT(b)|` in the type C convention.
pub fn total_weight_c(b: &Tuple) -> Weight {
    let mut w = Weight::zero(Domain::TypeC);
    for x in b.entries() {
        w = w.add(&slot_weight_c(*x)).unwrap();
    }
    w
}

/// Total weight `|WT(b)|` in the type A convention.
pub fn total_weight_a(b: &Tuple, sigma: &SignVector) -> Weight {
    let mut w = Weight::zero(Domain::TypeA);
    for (x, s) in b.entries().iter().zip(sigma.signs()) {
        w = w.add(&slot_weight_a(*x, *s)).unwrap();
    }
    w
}

/// Type C N-statistic `N_{[1,s]}(b, i) = #{r ≤ s : b_r > i} − #{r ≤ s : b_r ≤ −i}`.
pub fn n_stat_c(b: &Tuple, i: i64, s: usize) -> i64 {
    assert!(i >= 0, "type C N-statistics take i ∈ ℕ");
    assert!(s >= 1 && s <= b.len());
    let mut acc = 0i64;
    for &x in &b.entries()[..s] {
        if x > i {
            acc += 1;
        }
        if x <= -i {
            acc -= 1;
        }
    }
    acc
}

/// Type A N-statistic
/// `N^σ_{[1,s]}(b, i) = #{r ≤ s : b_r > i, σ_r = +} − #{r ≤ s : b_r > i, σ_r = −}`.
pub fn n_stat_a(b: &Tuple, sigma: &SignVector, i: i64, s: usize) -> i64 {
    assert_eq!(b.len(), sigma.len());
    assert!(s >= 1 && s <= b.len());
    let mut acc = 0i64;
    for (r, &x) in b.entries()[..s].iter().enumerate() {
        if x > i {
            acc += sigma.get(r).value();
        }
    }
    acc
}

/// Which Bruhat order to use: the symplectic one, or the linear one attached
/// to a sign vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    C,
    A(SignVector),
}

/// Outcome of a Bruhat comparison with the first violated condition, for
/// reporting.
#[derive(Clone, Debug)]
pub struct BruhatCheck {
    pub holds: bool,
    pub violation: Option<String>,
}

fn bruhat_check_c(a: &Tuple, b: &Tuple) -> BruhatCheck {
    let n = a.len();
    let imax = a
        .entries()
        .iter()
        .chain(b.entries())
        .map(|x| x.abs())
        .max()
        .unwrap();
    for s in 1..n {
        let na = n_stat_c(a, 0, s);
        let nb = n_stat_c(b, 0, s);
        if (na - nb).rem_euclid(2) != 0 {
            return BruhatCheck {
                holds: false,
                violation: Some(format!(
                    "parity differs at s={s}: N_[1,{s}](a,0) = {na}, N_[1,{s}](b,0) = {nb}"
                )),
            };
        }
    }
    for i in 0..=imax {
        for s in 1..n {
            let na = n_stat_c(a, i, s);
            let nb = n_stat_c(b, i, s);
            if na > nb {
                return BruhatCheck {
                    holds: false,
                    violation: Some(format!(
                        "N_[1,{s}](a,{i}) = {na} > {nb} = N_[1,{s}](b,{i})"
                    )),
                };
            }
        }
    }
    for i in 0..=imax {
        let na = n_stat_c(a, i, n);
        let nb = n_stat_c(b, i, n);
        if na != nb {
            return BruhatCheck {
                holds: false,
                violation: Some(format!(
                    "N_[1,{n}](a,{i}) = {na} ≠ {nb} = N_[1,{n}](b,{i}) at s = n"
                )),
            };
        }
    }
    BruhatCheck {
        holds: true,
        violation: None,
    }
}

fn bruhat_check_a(a: &Tuple, b: &Tuple, sigma: &SignVector) -> BruhatCheck {
    let n = a.len();
    let lo = a.entries().iter().chain(b.entries()).min().unwrap() - 1;
    let hi = *a.entries().iter().chain(b.entries()).max().unwrap();
    for i in lo..=hi {
        for s in 1..n {
            let na = n_stat_a(a, sigma, i, s);
            let nb = n_stat_a(b, sigma, i, s);
            if na > nb {
                return BruhatCheck {
                    holds: false,
                    violation: Some(format!(
                        "N^σ_[1,{s}](a,{i}) = {na} > {nb} = N^σ_[1,{s}](b,{i})"
                    )),
                };
            }
        }
    }
    for i in lo..=hi {
        let na = n_stat_a(a, sigma, i, n);
        let nb = n_stat_a(b, sigma, i, n);
        if na != nb {
            return BruhatCheck {
                holds: false,
                violation: Some(format!(
                    "N^σ_[1,{n}](a,{i}) = {na} ≠ {nb} = N^σ_[1,{n}](b,{i}) at s = n"
                )),
            };
        }
    }
    BruhatCheck {
        holds: true,
        violation: None,
    }
}

/// Bruhat comparison with a human-readable violation report.
pub fn bruhat_check(a: &Tuple, b: &Tuple, order: &Order) -> BruhatCheck {
    assert_eq!(a.len(), b.len(), "tuples must have equal length");
    match order {
        Order::C => bruhat_check_c(a, b),
        Order::A(sigma) => {
            assert_eq!(sigma.len(), a.len(), "sign vector length must match");
            bruhat_check_a(a, b, sigma)
        }
    }
}

/// `a ⪯ b` in the chosen Bruhat order.
pub fn bruhat_leq(a: &Tuple, b: &Tuple, order: &Order) -> bool {
    bruhat_check(a, b, order).holds
}

/// `a ≺ b` (strict).
pub fn bruhat_lt(a: &Tuple, b: &Tuple, order: &Order) -> bool {
    a != b && bruhat_leq(a, b, order)
}

/// Every N-statistic comparison underlying `bruhat_check(a, b, order)`,
/// rendered as display lines for reporting front ends: inequalities for
/// the proper prefixes and equalities for the full length.
pub fn bruhat_statistics(a: &Tuple, b: &Tuple, order: &Order) -> Vec<String> {
    assert_eq!(a.len(), b.len(), "tuples must have equal length");
    let n = a.len();
    let mut lines = Vec::new();
    match order {
        Order::C => {
            let imax = a
                .entries()
                .iter()
                .chain(b.entries())
                .map(|x| x.abs())
                .max()
                .unwrap();
            for i in 0..=imax {
                for s in 1..=n {
                    let na = n_stat_c(a, i, s);
                    let nb = n_stat_c(b, i, s);
                    let rel = if s == n {
                        if na == nb { "=" } else { "≠" }
                    } else if na <= nb {
                        "≤"
                    } else {
                        ">"
                    };
                    lines.push(format!("N_[1,{s}](a,{i}) = {na} {rel} {nb} = N_[1,{s}](b,{i})"));
                }
            }
        }
        Order::A(sigma) => {
            assert_eq!(sigma.len(), n, "sign vector length must match");
            let lo = a.entries().iter().chain(b.entries()).min().unwrap() - 1;
            let hi = *a.entries().iter().chain(b.entries()).max().unwrap();
            for i in lo..=hi {
                for s in 1..=n {
                    let na = n_stat_a(a, sigma, i, s);
                    let nb = n_stat_a(b, sigma, i, s);
                    let rel = if s == n {
                        if na == nb { "=" } else { "≠" }
                    } else if na <= nb {
                        "≤"
                    } else {
                        ">"
                    };
                    lines.push(format!(
                        "N^σ_[1,{s}](a,{i}) = {na} {rel} {nb} = N^σ_[1,{s}](b,{i})"
                    ));
                }
            }
        }
    }
    lines
}

/// Inverse dominance on weight sequences: `β ⪯ γ` iff the total weights
/// agree and every partial sum of `β` dominates the corresponding partial
/// sum of `γ`.  This is the brute-force order underlying [`bruhat_leq`].
pub fn inverse_dominance_leq(beta: &[Weight], gamma: &[Weight]) -> Result<bool> {
    if beta.len() != gamma.len() || beta.is_empty() {
        return Err(Error::Incompatible(
            "weight sequences must have equal positive length".into(),
        ));
    }
    let domain = beta[0].domain();
    if beta
        .iter()
        .chain(gamma.iter())
        .any(|w| w.domain() != domain)
    {
        return Err(Error::Incompatible("mixed weight domains".into()));
    }
    let n = beta.len();
    let mut diff = Weight::zero(domain);
    for s in 0..n {
        diff = diff.add(&beta[s])?;
        diff = diff.sub(&gamma[s])?;
        if s + 1 == n {
            if !diff.is_zero() {
                return Ok(false);
            }
        } else if !diff.nonneg_root_combo() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The entrywise map `b_r ↦ b_r` for positive entries and `b_r ↦ 1 − b_r`
/// otherwise; it lands in the all-positive index set and restricts to a
/// poset isomorphism on each sign-compatible slice.
pub fn prime_map(b: &Tuple) -> Tuple {
    Tuple::new(
        b.entries()
            .iter()
            .map(|&x| if x > 0 { x } else { 1 - x })
            .collect(),
    )
}

/// Inverse of [`prime_map`] on all-positive tuples, for a given sign vector.
pub fn prime_map_inverse(c: &Tuple, sigma: &SignVector) -> Result<Tuple> {
    assert_eq!(c.len(), sigma.len());
    if c.entries().iter().any(|&x| x <= 0) {
        return Err(Error::InvalidInput(
            "prime-map inverse requires an all-positive tuple".into(),
        ));
    }
    Ok(Tuple::new(
        c.entries()
            .iter()
            .zip(sigma.signs())
            .map(|(&x, &s)| match s {
                Sign::Plus => x,
                Sign::Minus => 1 - x,
            })
            .collect(),
    ))
}

/// Membership predicates for the index sets used by truncation and blocks.
#[derive(Clone, Debug)]
pub enum SetSpec {
    /// `B₀`: all entries positive.
    AllPositive,
    /// `B_k`: all entries in `(−k, k]`, `k ≥ 1`.
    Box(i64),
    /// `B_σ`: entry signs match `σ` slotwise.
    SignCompatible(SignVector),
    /// `B_{≤k}`: `N_{[1,s]}(b,k) ≤ 0` for `s < n` and `= 0` at `s = n`.
    TruncLeq(i64),
    /// `B_{<k}`: in `B_{≤k}` with at least one strict inequality.
    TruncLt(i64),
    /// `B_{≤σ}`: `N_{[1,s]}(b,0) ≤ σ_1 + ⋯ + σ_s` for `s < n`, equality at `n`.
    TruncLeqSigma(SignVector),
    /// `B_{<σ}`: in `B_{≤σ}` with at least one strict inequality.
    TruncLtSigma(SignVector),
    /// `B_{n₀|n₁}`: exactly `n₀` positive and `n₁` non-positive entries.
    Block(usize, usize),
    /// `B^#_{n₀|n₁}`: the first `n₀` entries positive, the rest non-positive.
    BlockSharp(usize, usize),
    /// `B^+_{n₀|n₁}`: strictly decreasing with exactly `n₀` positive entries.
    BlockStrict(usize, usize),
    Dominant,
    StrictlyDominant,
    Antidominant,
    Typical,
}

/// Does `b` belong to the given index set?
pub fn set_membership(b: &Tuple, spec: &SetSpec) -> bool {
    let n = b.len();
    match spec {
        SetSpec::AllPositive => b.entries().iter().all(|&x| x > 0),
        SetSpec::Box(k) => {
            assert!(*k >= 1);
            b.entries().iter().all(|&x| -k < x && x <= *k)
        }
        SetSpec::SignCompatible(sigma) => {
            assert_eq!(sigma.len(), n);
            b.entries()
                .iter()
                .zip(sigma.signs())
                .all(|(&x, &s)| (x > 0) == (s == Sign::Plus))
        }
        SetSpec::TruncLeq(k) => {
            assert!(*k >= 1);
            (1..n).all(|s| n_stat_c(b, *k, s) <= 0) && n_stat_c(b, *k, n) == 0
        }
        SetSpec::TruncLt(k) => {
            set_membership(b, &SetSpec::TruncLeq(*k)) && (1..n).any(|s| n_stat_c(b, *k, s) < 0)
        }
        SetSpec::TruncLeqSigma(sigma) => {
            assert_eq!(sigma.len(), n);
            (1..n).all(|s| n_stat_c(b, 0, s) <= sigma.partial_sum(s))
                && n_stat_c(b, 0, n) == sigma.partial_sum(n)
        }
        SetSpec::TruncLtSigma(sigma) => {
            set_membership(b, &SetSpec::TruncLeqSigma(sigma.clone()))
                && (1..n).any(|s| n_stat_c(b, 0, s) < sigma.partial_sum(s))
        }
        SetSpec::Block(n0, n1) => {
            assert_eq!(n0 + n1, n);
            b.count_positive() == *n0
        }
        SetSpec::BlockSharp(n0, n1) => {
            assert_eq!(n0 + n1, n);
            b.entries()[..*n0].iter().all(|&x| x > 0)
                && b.entries()[*n0..].iter().all(|&x| x <= 0)
        }
        SetSpec::BlockStrict(n0, n1) => {
            assert_eq!(n0 + n1, n);
            b.is_strictly_dominant() && b.count_positive() == *n0
        }
        SetSpec::Dominant => b.is_dominant(),
        SetSpec::StrictlyDominant => b.is_strictly_dominant(),
        SetSpec::Antidominant => b.is_antidominant(),
        SetSpec::Typical => b.is_typical(),
    }
}
