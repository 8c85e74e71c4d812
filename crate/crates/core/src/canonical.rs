//! The canonical-basis engine.
//!
//! For a tuple `b` the canonical vector `c_b` is the unique bar-invariant
//! vector equal to `v_b` plus a `qℤ[q]`-combination of Bruhat-greater
//! monomials.  It is computed by recursion on the length of `b`:
//!
//! 1. compute `c_{b̄}` for the length-`(n−1)` prefix `b̄`;
//! 2. pick the extremal slot value `j` allowed by the support of `c_{b̄}`
//!    and form the *rough* bar-invariant vector by applying a word of
//!    quantum `f` generators to `c_{b̄} ⊗ v_j` (walking `v_j` up or down to
//!    `v_{b_n}`);
//! 3. *straighten*: while some non-leading coefficient escapes `qℤ[q]`,
//!    subtract the bar-symmetric completion of its low part times the
//!    canonical vector of a Bruhat-minimal offending tuple.
//!
//! Each subtraction fixes its offender and can only disturb strictly
//! Bruhat-greater tuples, which the loop asserts; the depth and support
//! guards bound the work.  Entries are memoized per tuple (and sign vector),
//! behind a mutex so scans may share an engine across threads: concurrent
//! callers can duplicate work but always observe the single canonical value.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::laurent::LaurentPoly;
use crate::orders::{
    bruhat_leq, bruhat_lt, prime_map, total_weight_c, Order, Sign, SignVector, Tuple,
};
use crate::tensor::{chevalley_quantum, project, Gen, Projection, Space, TensorVec};
use crate::{Config, Error, Int, Result, Scalar};

/// A memoized canonical-basis element: the canonical vector together with
/// the rough bar-invariant vector it was straightened from.
#[derive(Clone, Debug)]
pub struct CanonicalEntry<C: Scalar = Int> {
    pub b: Tuple,
    pub vector: TensorVec<C>,
    pub rough: TensorVec<C>,
}

/// Outcome of the invariant checks on a canonical entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificates {
    /// Coefficient 1 at `b`; every other coefficient in `qℤ[q]` and indexed
    /// by a strictly Bruhat-greater tuple.
    pub unitriangular: bool,
    /// All supported tuples share one total weight.
    pub weight_homogeneous: bool,
    /// The expansion in rough vectors has bar-symmetric coefficients, i.e.
    /// the vector is fixed by the bar involution.
    pub bar_invariant: bool,
}

impl Certificates {
    pub fn all(&self) -> bool {
        self.unitriangular && self.weight_homogeneous && self.bar_invariant
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Kind {
    C,
    A(SignVector),
}

impl Kind {
    fn space(&self, n: usize) -> Space {
        match self {
            Kind::C => Space::type_c(n),
            Kind::A(sigma) => {
                assert_eq!(sigma.len(), n);
                Space::type_a(sigma.clone())
            }
        }
    }

    fn order(&self) -> Order {
        match self {
            Kind::C => Order::C,
            Kind::A(sigma) => Order::A(sigma.clone()),
        }
    }

    fn prefix(&self) -> Kind {
        match self {
            Kind::C => Kind::C,
            Kind::A(sigma) => Kind::A(sigma.prefix()),
        }
    }

    fn from_space(space: &Space) -> Kind {
        match space.sigma() {
            None => Kind::C,
            Some(sigma) => Kind::A(sigma.clone()),
        }
    }
}

/// The bar-symmetric completion of the part of `p` outside `qℤ[q]`:
/// `Σ_{e<0} c_e (q^e + q^{−e}) + c_0`.  Subtracting `correction(p) · c_a`
/// from a vector with coefficient `p` at `a` leaves a coefficient in
/// `qℤ[q]` while preserving bar-invariance.
fn correction<C: Scalar>(p: &LaurentPoly<C>) -> LaurentPoly<C> {
    let mut mu = LaurentPoly::zero();
    for (e, c) in p.iter() {
        if e < 0 {
            mu.add_term(e, c.clone());
            mu.add_term(-e, c.clone());
        } else if e == 0 {
            mu.add_term(0, c.clone());
        }
    }
    mu
}

/// Report of one canonical-vs-canonical comparison through the projections:
/// the symplectic vector pushed through `pr_σ` against the linear vector
/// pushed through `pr_0`.
#[derive(Clone, Debug)]
pub struct CkwReport<C: Scalar = Int> {
    pub b: Tuple,
    pub sigma: SignVector,
    pub b_prime: Tuple,
    pub lhs: TensorVec<C>,
    pub rhs: TensorVec<C>,
    pub equal: bool,
}

/// Parameters of a negativity scan over a box of tuples.
#[derive(Clone, Debug)]
pub struct ScanParams {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    /// Restrict to tuples with the same total weight as this reference.
    pub weight_of: Option<Tuple>,
    /// Wall-clock limit for the whole scan.
    pub deadline: Option<Duration>,
    pub parallel: bool,
}

/// One coefficient found outside `ℕ[q]`.
#[derive(Clone, Debug)]
pub struct ScanHit<C: Scalar = Int> {
    pub b: Tuple,
    pub a: Tuple,
    pub poly: LaurentPoly<C>,
}

#[derive(Clone, Debug)]
pub struct ScanReport<C: Scalar = Int> {
    pub hits: Vec<ScanHit<C>>,
    pub errors: Vec<(Tuple, String)>,
    pub scanned: usize,
    pub timed_out: bool,
}

impl<C: Scalar> Default for ScanReport<C> {
    fn default() -> Self {
        ScanReport {
            hits: Vec::new(),
            errors: Vec::new(),
            scanned: 0,
            timed_out: false,
        }
    }
}

type Memo<K, C> = Mutex<HashMap<K, Arc<CanonicalEntry<C>>>>;

/// Memoizing canonical-basis calculator.
pub struct Engine<C: Scalar = Int> {
    config: Config,
    memo_c: Memo<Tuple, C>,
    memo_a: Memo<(SignVector, Tuple), C>,
}

impl<C: Scalar> Default for Engine<C> {
    fn default() -> Self {
        Engine::new(Config::default())
    }
}

impl<C: Scalar> Engine<C> {
    pub fn new(config: Config) -> Self {
        Engine {
            config,
            memo_c: Mutex::new(HashMap::new()),
            memo_a: Mutex::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    /// Canonical vector in the symplectic convention.
    pub fn canonical_c(&self, b: &Tuple) -> Result<Arc<CanonicalEntry<C>>> {
        self.canonical_inner(&Kind::C, b)
    }

    /// Canonical vector in the linear convention for the duality pattern `σ`.
    pub fn canonical_a(&self, sigma: &SignVector, b: &Tuple) -> Result<Arc<CanonicalEntry<C>>> {
        assert_eq!(sigma.len(), b.len(), "sign vector length must match");
        self.canonical_inner(&Kind::A(sigma.clone()), b)
    }

    /// Rough bar-invariant vector for `b` (the pre-straightening vector).
    pub fn rough_c(&self, b: &Tuple) -> Result<TensorVec<C>> {
        self.rough_inner(&Kind::C, b)
    }

    pub fn rough_a(&self, sigma: &SignVector, b: &Tuple) -> Result<TensorVec<C>> {
        assert_eq!(sigma.len(), b.len(), "sign vector length must match");
        self.rough_inner(&Kind::A(sigma.clone()), b)
    }

    fn memo_get(&self, kind: &Kind, b: &Tuple) -> Option<Arc<CanonicalEntry<C>>> {
        match kind {
            Kind::C => self.memo_c.lock().unwrap().get(b).cloned(),
            Kind::A(sigma) => self
                .memo_a
                .lock()
                .unwrap()
                .get(&(sigma.clone(), b.clone()))
                .cloned(),
        }
    }

    fn memo_insert(&self, kind: &Kind, b: &Tuple, entry: CanonicalEntry<C>) -> Arc<CanonicalEntry<C>> {
        match kind {
            Kind::C => self
                .memo_c
                .lock()
                .unwrap()
                .entry(b.clone())
                .or_insert_with(|| Arc::new(entry))
                .clone(),
            Kind::A(sigma) => self
                .memo_a
                .lock()
                .unwrap()
                .entry((sigma.clone(), b.clone()))
                .or_insert_with(|| Arc::new(entry))
                .clone(),
        }
    }

    fn check_support(&self, v: &TensorVec<C>) -> Result<()> {
        if v.num_terms() > self.config.support_guard {
            return Err(Error::SupportGuard {
                terms: v.num_terms(),
                limit: self.config.support_guard,
            });
        }
        Ok(())
    }

    fn canonical_inner(&self, kind: &Kind, b: &Tuple) -> Result<Arc<CanonicalEntry<C>>> {
        if let Some(entry) = self.memo_get(kind, b) {
            return Ok(entry);
        }
        let rough = self.rough_inner(kind, b)?;
        let vector = self.straighten(kind, b, rough.clone())?;
        let entry = CanonicalEntry {
            b: b.clone(),
            vector,
            rough,
        };
        Ok(self.memo_insert(kind, b, entry))
    }

    fn rough_inner(&self, kind: &Kind, b: &Tuple) -> Result<TensorVec<C>> {
        let n = b.len();
        let space = kind.space(n);
        if n == 1 {
            return Ok(TensorVec::monomial(space, b.clone()));
        }
        let prefix = self.canonical_inner(&kind.prefix(), &b.prefix())?;
        let bn = b.last();

        // Extremal admissible last slot j and the f-word walking it to b_n.
        let (j, word): (i64, Vec<i64>) = match kind {
            Kind::C => {
                let mut j = bn;
                for a in prefix.vector.support() {
                    for &x in a.entries() {
                        j = j.min(-x.abs());
                    }
                }
                (j, (j..bn).map(|m| m.abs()).collect())
            }
            Kind::A(sigma) => match sigma.get(n - 1) {
                Sign::Plus => {
                    let mut j = bn;
                    for a in prefix.vector.support() {
                        for (r, &x) in a.entries().iter().enumerate() {
                            j = j.min(match sigma.get(r) {
                                Sign::Plus => x,
                                Sign::Minus => x - 1,
                            });
                        }
                    }
                    (j, (j..bn).collect())
                }
                Sign::Minus => {
                    let mut j = bn;
                    for a in prefix.vector.support() {
                        for (r, &x) in a.entries().iter().enumerate() {
                            j = j.max(match sigma.get(r) {
                                Sign::Plus => x + 1,
                                Sign::Minus => x,
                            });
                        }
                    }
                    (j, (bn..j).rev().collect())
                }
            },
        };

        let mut v = TensorVec::zero(space);
        for (a, p) in prefix.vector.iter() {
            v.add_term(a.push(j), p.clone());
        }
        for i in word {
            v = chevalley_quantum(&v, i, Gen::F);
            self.check_support(&v)?;
        }
        assert!(
            v.coeff(b).is_one(),
            "rough vector is not unitriangular at {b:?}"
        );
        #[cfg(debug_assertions)]
        {
            let order = kind.order();
            for a in v.support() {
                debug_assert!(
                    bruhat_leq(b, a, &order),
                    "rough support {a:?} not above {b:?}"
                );
            }
        }
        Ok(v)
    }

    fn straighten(&self, kind: &Kind, b: &Tuple, rough: TensorVec<C>) -> Result<TensorVec<C>> {
        let order = kind.order();
        let mut v = rough;
        let mut steps = 0usize;
        loop {
            let offenders: Vec<Tuple> = v
                .iter()
                .filter(|(a, p)| *a != b && !p.in_q_zq())
                .map(|(a, _)| a.clone())
                .collect();
            if offenders.is_empty() {
                break;
            }
            steps += 1;
            if steps > self.config.depth_guard {
                return Err(Error::DepthGuard {
                    steps,
                    limit: self.config.depth_guard,
                });
            }
            // Bruhat-minimal offender; the lexicographically first one wins
            // among incomparable minima (support iteration is already lex).
            let a = offenders
                .iter()
                .find(|o| !offenders.iter().any(|o2| bruhat_lt(o2, o, &order)))
                .expect("a finite nonempty set has a minimal element")
                .clone();
            let mu = correction(&v.coeff(&a));
            debug_assert!(mu.is_bar_symmetric());
            let entry_a = self.canonical_inner(kind, &a)?;
            v.sub_assign(&entry_a.vector.scale(&mu));
            self.check_support(&v)?;
            assert!(
                v.coeff(&a).in_q_zq(),
                "straightening failed to fix the coefficient at {a:?}"
            );
            for (o, p) in v.iter() {
                if o != b && !p.in_q_zq() && !offenders.iter().any(|x| x == o) {
                    assert!(
                        bruhat_lt(&a, o, &order),
                        "straightening introduced an offender {o:?} not above {a:?}"
                    );
                }
            }
        }
        assert!(
            v.coeff(b).is_one(),
            "canonical vector is not unitriangular at {b:?}"
        );
        Ok(v)
    }

    /// Expresses `v` as a combination `Σ u_a · rough(a)` by top-down
    /// elimination along the Bruhat order, returning the coefficients `u_a`.
    pub fn express_in_rough(&self, v: &TensorVec<C>) -> Result<BTreeMap<Tuple, LaurentPoly<C>>> {
        let kind = Kind::from_space(v.space());
        let order = kind.order();
        let mut r = v.clone();
        let mut out = BTreeMap::new();
        let mut steps = 0usize;
        while !r.is_zero() {
            steps += 1;
            if steps > self.config.depth_guard {
                return Err(Error::DepthGuard {
                    steps,
                    limit: self.config.depth_guard,
                });
            }
            let supp: Vec<Tuple> = r.support().cloned().collect();
            let a = supp
                .iter()
                .find(|o| !supp.iter().any(|o2| bruhat_lt(o2, o, &order)))
                .expect("a finite nonempty set has a minimal element")
                .clone();
            let u = r.coeff(&a);
            let rough_a = self.rough_inner(&kind, &a)?;
            r.sub_assign(&rough_a.scale(&u));
            self.check_support(&r)?;
            assert!(
                !r.contains(&a),
                "rough elimination failed to clear the minimal tuple {a:?}"
            );
            out.insert(a, u);
        }
        Ok(out)
    }

    /// Runs the invariant checks on a canonical entry: unitriangularity,
    /// weight homogeneity, and the bar-invariance certificate through the
    /// rough expansion.
    pub fn certify(&self, entry: &CanonicalEntry<C>) -> Result<Certificates> {
        let kind = Kind::from_space(entry.vector.space());
        let order = kind.order();
        let mut unitriangular = entry.vector.coeff(&entry.b).is_one();
        for (a, p) in entry.vector.iter() {
            if *a != entry.b {
                unitriangular &= p.in_q_zq() && bruhat_lt(&entry.b, a, &order);
            }
        }
        let weight_homogeneous = entry.vector.is_weight_homogeneous();
        let expansion = self.express_in_rough(&entry.vector)?;
        let bar_invariant = expansion.values().all(|u| u.is_bar_symmetric());
        Ok(Certificates {
            unitriangular,
            weight_homogeneous,
            bar_invariant,
        })
    }

    /// Compares the symplectic canonical vector of `b` through `pr_σ`
    /// (with `σ` read off the entry signs of `b`) against the linear
    /// canonical vector of the prime-mapped tuple through `pr_0`.
    pub fn verify_ckw(&self, b: &Tuple) -> Result<CkwReport<C>> {
        let sigma = SignVector::from_tuple(b);
        let b_prime = prime_map(b);
        let lhs = project(
            &self.canonical_c(b)?.vector,
            &Projection::Sigma(sigma.clone()),
        )?;
        let rhs = project(
            &self.canonical_a(&sigma, &b_prime)?.vector,
            &Projection::Positive,
        )?;
        let equal = lhs == rhs;
        Ok(CkwReport {
            b: b.clone(),
            sigma,
            b_prime,
            lhs,
            rhs,
            equal,
        })
    }

    /// Scans a box of tuples for canonical-basis coefficients outside
    /// `ℕ[q]`.  Guard exhaustion for one tuple is recorded and the scan
    /// continues.
    pub fn negativity_scan(&self, params: &ScanParams) -> ScanReport<C> {
        let start = Instant::now();
        let reference = params
            .weight_of
            .as_ref()
            .map(|w| {
                assert_eq!(w.len(), params.n, "weight reference length must be n");
                total_weight_c(w)
            });
        let candidates: Vec<Tuple> = Tuple::box_iter(params.n, params.lo, params.hi)
            .filter(|b| match &reference {
                None => true,
                Some(w) => total_weight_c(b) == *w,
            })
            .collect();

        let scan_one = |b: &Tuple| -> (Vec<ScanHit<C>>, Option<(Tuple, String)>) {
            match self.canonical_c(b) {
                Err(e) => (Vec::new(), Some((b.clone(), e.to_string()))),
                Ok(entry) => {
                    let hits = entry
                        .vector
                        .iter()
                        .filter(|(_, p)| !p.in_nat_q())
                        .map(|(a, p)| ScanHit {
                            b: b.clone(),
                            a: a.clone(),
                            poly: p.clone(),
                        })
                        .collect();
                    (hits, None)
                }
            }
        };

        let mut report = ScanReport::default();
        if params.parallel {
            let expired = |now: Instant| {
                params
                    .deadline
                    .is_some_and(|d| now.duration_since(start) > d)
            };
            let results: Vec<_> = candidates
                .par_iter()
                .map(|b| {
                    if expired(Instant::now()) {
                        None
                    } else {
                        Some(scan_one(b))
                    }
                })
                .collect();
            for result in results {
                match result {
                    None => report.timed_out = true,
                    Some((hits, err)) => {
                        report.scanned += 1;
                        report.hits.extend(hits);
                        report.errors.extend(err);
                    }
                }
            }
        } else {
            for b in &candidates {
                if params
                    .deadline
                    .is_some_and(|d| start.elapsed() > d)
                {
                    report.timed_out = true;
                    break;
                }
                report.scanned += 1;
                let (hits, err) = scan_one(b);
                report.hits.extend(hits);
                report.errors.extend(err);
            }
        }
        report.hits.sort_by(|x, y| (&x.b, &x.a).cmp(&(&y.b, &y.a)));
        report.errors.sort_by(|x, y| x.0.cmp(&y.0));
        report
    }
}

/// Builds the strictly dominant typical tuple `a` below `b` together with
/// the word of classical `f`-indices carrying `v_a` to `v_b` modulo strictly
/// Bruhat-greater terms: slot by slot, each `a_s` is the largest value
/// allowed below `b_s` and below `a_r − 1`, `−b_r` for all earlier slots.
pub fn construct_dominant(b: &Tuple) -> (Tuple, Vec<i64>) {
    let n = b.len();
    let mut a = vec![b.get(0)];
    let mut word = Vec::new();
    let mut bound = i64::MAX;
    for s in 1..n {
        bound = bound.min(a[s - 1] - 1).min(-b.get(s - 1));
        let a_s = b.get(s).min(bound);
        a.push(a_s);
        for m in a_s..b.get(s) {
            word.push(m.abs());
        }
    }
    let a = Tuple::new(a);
    debug_assert!(a.is_strictly_dominant() && a.is_typical());
    (a, word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::chevalley_classical;

    fn t(entries: &[i64]) -> Tuple {
        Tuple::new(entries.to_vec())
    }

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn poly(pairs: &[(i64, i32)]) -> LaurentPoly<Int> {
        LaurentPoly::from_pairs(pairs.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    type Term<'a> = (&'a [i64], &'a [(i64, i32)]);

    fn vec_c(terms: &[Term<'_>]) -> TensorVec<Int> {
        let n = terms[0].0.len();
        let mut v = TensorVec::zero(Space::type_c(n));
        for (b, p) in terms {
            v.add_term(t(b), poly(p));
        }
        v
    }

    #[test]
    fn rough_examples() {
        let engine = Engine::<Int>::default();
        assert_eq!(
            engine.rough_c(&t(&[1, 0])).unwrap(),
            vec_c(&[(&[1, 0], &[(0, 1)]), (&[2, -1], &[(1, 1)])])
        );
        assert_eq!(
            engine.rough_c(&t(&[0, 1])).unwrap(),
            vec_c(&[(&[0, 1], &[(0, 1)]), (&[1, 0], &[(2, 1)])])
        );
    }

    #[test]
    fn canonical_small_type_c() {
        let engine = Engine::<Int>::default();
        // Dominant with no atypical pair: a bare monomial.
        assert_eq!(
            engine.canonical_c(&t(&[2, 1])).unwrap().vector,
            vec_c(&[(&[2, 1], &[(0, 1)])])
        );
        // Increasing, sum ≠ 1: two terms.
        assert_eq!(
            engine.canonical_c(&t(&[1, 2])).unwrap().vector,
            vec_c(&[(&[1, 2], &[(0, 1)]), (&[2, 1], &[(1, 1)])])
        );
        // Atypical pair with positive first entry.
        assert_eq!(
            engine.canonical_c(&t(&[2, -1])).unwrap().vector,
            vec_c(&[(&[2, -1], &[(0, 1)]), (&[3, -2], &[(1, 1)])])
        );
        // Atypical pair with negative first entry: four terms.
        assert_eq!(
            engine.canonical_c(&t(&[-1, 2])).unwrap().vector,
            vec_c(&[
                (&[-1, 2], &[(0, 1)]),
                (&[0, 1], &[(1, 1)]),
                (&[1, 0], &[(1, 1)]),
                (&[2, -1], &[(2, 1)]),
            ])
        );
        // The zero-entry atypical pair.
        assert_eq!(
            engine.canonical_c(&t(&[0, 1])).unwrap().vector,
            vec_c(&[(&[0, 1], &[(0, 1)]), (&[1, 0], &[(2, 1)])])
        );
    }

    #[test]
    fn canonical_small_type_a() {
        let engine = Engine::<Int>::default();
        let entry = engine.canonical_a(&sv("++"), &t(&[1, 1])).unwrap();
        let mut expected = TensorVec::zero(Space::type_a(sv("++")));
        expected.add_term(t(&[1, 1]), poly(&[(0, 1)]));
        assert_eq!(entry.vector, expected);

        let entry = engine.canonical_a(&sv("++"), &t(&[1, 2])).unwrap();
        let mut expected = TensorVec::zero(Space::type_a(sv("++")));
        expected.add_term(t(&[1, 2]), poly(&[(0, 1)]));
        expected.add_term(t(&[2, 1]), poly(&[(1, 1)]));
        assert_eq!(entry.vector, expected);

        let entry = engine.canonical_a(&sv("+-"), &t(&[1, 1])).unwrap();
        let mut expected = TensorVec::zero(Space::type_a(sv("+-")));
        expected.add_term(t(&[1, 1]), poly(&[(0, 1)]));
        expected.add_term(t(&[2, 2]), poly(&[(1, 1)]));
        assert_eq!(entry.vector, expected);
    }

    #[test]
    fn express_in_rough_recovers_combinations() {
        let engine = Engine::<Int>::default();
        let r10 = engine.rough_c(&t(&[1, 0])).unwrap();
        let r01 = engine.rough_c(&t(&[0, 1])).unwrap();
        let mut v = r01.clone();
        v.add_assign(&r10.scale(&poly(&[(1, 1), (-1, 1)])));
        let expansion = engine.express_in_rough(&v).unwrap();
        assert_eq!(
            expansion,
            BTreeMap::from([
                (t(&[0, 1]), poly(&[(0, 1)])),
                (t(&[1, 0]), poly(&[(1, 1), (-1, 1)])),
            ])
        );
    }

    #[test]
    fn certificates_pass_on_small_entries() {
        let engine = Engine::<Int>::default();
        for b in Tuple::box_iter(2, -2, 2) {
            let entry = engine.canonical_c(&b).unwrap();
            let certs = engine.certify(&entry).unwrap();
            assert!(certs.all(), "certificates failed at {b:?}: {certs:?}");
        }
    }

    #[test]
    fn ckw_agrees_on_examples() {
        let engine = Engine::<Int>::default();
        for b in [t(&[1, 0]), t(&[2, -1]), t(&[-1, 2]), t(&[1, 2]), t(&[0, 0])] {
            let report = engine.verify_ckw(&b).unwrap();
            assert!(report.equal, "projection comparison failed at {b:?}");
        }
    }

    #[test]
    fn scan_finds_nothing_small() {
        let engine = Engine::<Int>::default();
        let report = engine.negativity_scan(&ScanParams {
            n: 2,
            lo: -4,
            hi: 4,
            weight_of: None,
            deadline: None,
            parallel: false,
        });
        assert_eq!(report.scanned, 81);
        assert!(report.hits.is_empty());
        assert!(report.errors.is_empty());
    }

    #[test]
    fn construct_dominant_examples() {
        assert_eq!(construct_dominant(&t(&[5])), (t(&[5]), vec![]));
        assert_eq!(construct_dominant(&t(&[0, 0])), (t(&[0, -1]), vec![1]));
        assert_eq!(construct_dominant(&t(&[1, 0])), (t(&[1, -1]), vec![1]));
    }

    /// The classical word from `construct_dominant` carries `v_a` to `v_b`
    /// plus strictly Bruhat-greater monomials.
    #[test]
    fn construct_dominant_word_is_triangular() {
        for b in Tuple::box_iter(2, -2, 2).chain(Tuple::box_iter(3, -1, 1)) {
            let (a, word) = construct_dominant(&b);
            let mut v = TensorVec::<Int>::monomial(Space::type_c(b.len()), a.clone());
            for i in &word {
                v = chevalley_classical(&v, *i, Gen::F);
            }
            let at_b = v.coeff(&b);
            assert!(at_b.is_one(), "coefficient at {b:?} is {at_b:?} from {a:?}");
            for (c, _) in v.iter() {
                assert!(
                    c == &b || bruhat_lt(&b, c, &Order::C),
                    "stray term {c:?} not above {b:?} (from {a:?} via {word:?})"
                );
            }
        }
    }

    #[test]
    fn guards_trip() {
        let engine = Engine::<Int>::new(Config {
            support_guard: 2,
            depth_guard: 10_000,
        });
        let err = engine.canonical_c(&t(&[-1, 2])).unwrap_err();
        assert!(err.is_guard());
    }
}
