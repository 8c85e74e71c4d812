//! Formal `ℤ[q,q⁻¹]`-linear combinations of tensor monomials and the
//! Chevalley-generator actions on them.
//!
//! A monomial `v_b = v_{b_1} ⊗ ⋯ ⊗ v_{b_n}` is indexed by a tuple; a vector
//! is a finite sum `Σ p_b(q) · v_b` stored sparsely.  The generator `f_i`
//! (resp. `e_i`) acts slotwise at the positions flagged by the local
//! [`isig_c`]/[`isig_a`] signature; the quantum action additionally picks up
//! the `k_i`-eigenvalue powers of the slots to the right of the acting slot
//! (for `f_i`) or the `k_i⁻¹`-eigenvalue powers of the slots to the left
//! (for `e_i`), which is the comultiplication
//! `Δ(f_i) = 1 ⊗ f_i + f_i ⊗ k_i`, `Δ(e_i) = k_i⁻¹ ⊗ e_i + e_i ⊗ 1`
//! iterated across the factors.

use std::collections::BTreeMap;
use std::fmt;

use crate::laurent::LaurentPoly;
use crate::orders::{
    self, prime_map, prime_map_inverse, set_membership, SetSpec, Sign, SignVector, Tuple, Weight,
};
use crate::{Error, Int, Result, Scalar};

/// The ambient tensor space: `n` symplectic minuscule factors, or `n` linear
/// factors with duality pattern `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Space {
    C { n: usize },
    A { n: usize, sigma: SignVector },
}

impl Space {
    pub fn type_c(n: usize) -> Space {
        assert!(n >= 1);
        Space::C { n }
    }

    pub fn type_a(sigma: SignVector) -> Space {
        Space::A {
            n: sigma.len(),
            sigma,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Space::C { n } => *n,
            Space::A { n, .. } => *n,
        }
    }

    pub fn sigma(&self) -> Option<&SignVector> {
        match self {
            Space::C { .. } => None,
            Space::A { sigma, .. } => Some(sigma),
        }
    }

    /// Total weight of a monomial in this space.
    pub fn total_weight(&self, b: &Tuple) -> Weight {
        match self {
            Space::C { .. } => orders::total_weight_c(b),
            Space::A { sigma, .. } => orders::total_weight_a(b, sigma),
        }
    }
}

/// Local signature mark of one slot for a fixed generator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    F,
    E,
    Dot,
}

/// The slotwise signature of a tuple for a fixed generator index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature(pub Vec<Mark>);

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.0 {
            write!(
                f,
                "{}",
                match m {
                    Mark::F => 'f',
                    Mark::E => 'e',
                    Mark::Dot => '.',
                }
            )?;
        }
        Ok(())
    }
}

/// Chevalley generator kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    F,
    E,
}

/// Symplectic i-signature: slot `t` is `f` when `b_t = ±i`, `e` when
/// `b_t = 1 ± i` (the two cases are disjoint for integer `i`).
pub fn isig_c(b: &Tuple, i: i64) -> Signature {
    assert!(i >= 0);
    Signature(
        b.entries()
            .iter()
            .map(|&x| {
                if x == i || x == -i {
                    Mark::F
                } else if x == 1 + i || x == 1 - i {
                    Mark::E
                } else {
                    Mark::Dot
                }
            })
            .collect(),
    )
}

/// Linear i-signature: slot `t` is `f` when `(b_t, σ_t)` is `(i, +)` or
/// `(1+i, −)`, and `e` when it is `(1+i, +)` or `(i, −)`.
pub fn isig_a(b: &Tuple, sigma: &SignVector, i: i64) -> Signature {
    assert_eq!(b.len(), sigma.len());
    Signature(
        b.entries()
            .iter()
            .zip(sigma.signs())
            .map(|(&x, &s)| match s {
                Sign::Plus if x == i => Mark::F,
                Sign::Minus if x == 1 + i => Mark::F,
                Sign::Plus if x == 1 + i => Mark::E,
                Sign::Minus if x == i => Mark::E,
                _ => Mark::Dot,
            })
            .collect(),
    )
}

/// Signature of `b` for generator `i` in the given space.
pub fn isig(space: &Space, b: &Tuple, i: i64) -> Signature {
    match space {
        Space::C { .. } => isig_c(b, i),
        Space::A { sigma, .. } => isig_a(b, sigma, i),
    }
}

/// Exponent of the `k_i` eigenvalue on the symplectic basis vector `v_j`.
fn kexp_c(i: i64, j: i64) -> i64 {
    let d = |a: i64, b: i64| (a == b) as i64;
    d(i, j) + d(-i, j) - d(1 + i, j) - d(1 - i, j)
}

/// Exponent of the `k_i` eigenvalue on the linear basis vector `v_j` of the
/// slot with sign `s`.
fn kexp_a(i: i64, j: i64, s: Sign) -> i64 {
    let d = |a: i64, b: i64| (a == b) as i64;
    match s {
        Sign::Plus => d(i, j) - d(1 + i, j),
        Sign::Minus => d(1 + i, j) - d(i, j),
    }
}

/// How a generator application moves the acting slot and what `q`-power it
/// picks up from the other slots.
fn slot_moves(space: &Space, b: &Tuple, i: i64, gen: Gen, quantum: bool) -> Vec<(usize, i64, i64)> {
    let sig = isig(space, b, i);
    let n = b.len();
    let mut moves = Vec::new();
    for t in 0..n {
        let wanted = match gen {
            Gen::F => Mark::F,
            Gen::E => Mark::E,
        };
        if sig.0[t] != wanted {
            continue;
        }
        let step = match space {
            Space::C { .. } => 1,
            Space::A { sigma, .. } => sigma.get(t).value(),
        };
        let delta = match gen {
            Gen::F => step,
            Gen::E => -step,
        };
        let mut qexp = 0i64;
        if quantum {
            match gen {
                Gen::F => {
                    for u in t + 1..n {
                        qexp += match space {
                            Space::C { .. } => kexp_c(i, b.get(u)),
                            Space::A { sigma, .. } => kexp_a(i, b.get(u), sigma.get(u)),
                        };
                    }
                }
                Gen::E => {
                    for u in 0..t {
                        qexp -= match space {
                            Space::C { .. } => kexp_c(i, b.get(u)),
                            Space::A { sigma, .. } => kexp_a(i, b.get(u), sigma.get(u)),
                        };
                    }
                }
            }
        }
        moves.push((t, delta, qexp));
    }
    moves
}

/// A finite formal sum `Σ p_b(q) · v_b` over a fixed tensor space.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVec<C = Int> {
    space: Space,
    terms: BTreeMap<Tuple, LaurentPoly<C>>,
}

impl<C: Scalar> TensorVec<C> {
    pub fn zero(space: Space) -> Self {
        TensorVec {
            space,
            terms: BTreeMap::new(),
        }
    }

    /// The monomial `v_b` with coefficient 1.
    pub fn monomial(space: Space, b: Tuple) -> Self {
        assert_eq!(b.len(), space.n());
        let mut v = Self::zero(space);
        v.add_term(b, LaurentPoly::one());
        v
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic tuple order.
    pub fn iter(&self) -> impl Iterator<Item = (&Tuple, &LaurentPoly<C>)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Tuple> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, b: &Tuple) -> LaurentPoly<C> {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn contains(&self, b: &Tuple) -> bool {
        self.terms.contains_key(b)
    }

    /// Adds `p · v_b` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, b: Tuple, p: LaurentPoly<C>) {
        assert_eq!(b.len(), self.space.n());
        if p.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &p;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorVec<C>) {
        assert_eq!(self.space, other.space, "mixed tensor spaces");
        for (b, p) in &other.terms {
            self.add_term(b.clone(), p.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &TensorVec<C>) {
        assert_eq!(self.space, other.space, "mixed tensor spaces");
        for (b, p) in &other.terms {
            self.add_term(b.clone(), -p.clone());
        }
    }

    /// Scales every coefficient by `p`.
    pub fn scale(&self, p: &LaurentPoly<C>) -> Self {
        let mut out = Self::zero(self.space.clone());
        if p.is_zero() {
            return out;
        }
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c * p);
        }
        out
    }

    /// Applies the bar involution to every coefficient (the basis monomials
    /// are treated as fixed points, which is the correct behaviour only for
    /// vectors already expressed in a bar-invariant frame; it is exactly the
    /// coefficient test used by the certificates).
    pub fn bar_coeffs(&self) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.bar());
        }
        out
    }

    /// Specialises every coefficient at `q = 1`.
    pub fn eval_one(&self) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (b, c) in &self.terms {
            out.add_term(b.clone(), LaurentPoly::constant(c.eval_one()));
        }
        out
    }

    /// True when every supported tuple has the same total weight.
    pub fn is_weight_homogeneous(&self) -> bool {
        let mut expected: Option<Weight> = None;
        for b in self.terms.keys() {
            let w = self.space.total_weight(b);
            match &expected {
                None => expected = Some(w),
                Some(e) => {
                    if *e != w {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// JSON form with terms sorted lexicographically by tuple.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        match &self.space {
            Space::C { n } => {
                map.insert("space".into(), "typeC".into());
                map.insert("n".into(), (*n).into());
            }
            Space::A { n, sigma } => {
                map.insert("space".into(), "typeA".into());
                map.insert("n".into(), (*n).into());
                map.insert("sigma".into(), sigma.to_string().into());
            }
        }
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(b, p)| {
                let mut term = serde_json::Map::new();
                term.insert(
                    "b".into(),
                    serde_json::Value::Array(
                        b.entries().iter().map(|&x| x.into()).collect(),
                    ),
                );
                term.insert("poly".into(), p.to_json());
                serde_json::Value::Object(term)
            })
            .collect();
        map.insert("terms".into(), serde_json::Value::Array(terms));
        serde_json::Value::Object(map)
    }
}

impl TensorVec<Int> {
    /// Parses the JSON form produced by [`to_json`](TensorVec::to_json).
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidInput("vector JSON must be an object".into()))?;
        let n = obj
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::InvalidInput("missing n".into()))? as usize;
        let space = match obj.get("space").and_then(|v| v.as_str()) {
            Some("typeC") => Space::type_c(n),
            Some("typeA") => {
                let sigma: SignVector = obj
                    .get("sigma")
                    .and_then(|v| v.as_str())
                    .ok_or_else(|| Error::InvalidInput("missing sigma".into()))?
                    .parse()?;
                if sigma.len() != n {
                    return Err(Error::InvalidInput("sigma length must equal n".into()));
                }
                Space::type_a(sigma)
            }
            other => {
                return Err(Error::InvalidInput(format!("bad space tag {other:?}")));
            }
        };
        let mut out = TensorVec::zero(space);
        let terms = obj
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::InvalidInput("missing terms".into()))?;
        for term in terms {
            let term = term
                .as_object()
                .ok_or_else(|| Error::InvalidInput("term must be an object".into()))?;
            let entries = term
                .get("b")
                .and_then(|v| v.as_array())
                .ok_or_else(|| Error::InvalidInput("term missing b".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::InvalidInput("tuple entries must be integers".into()))
                })
                .collect::<Result<Vec<i64>>>()?;
            let poly = LaurentPoly::from_json(
                term.get("poly")
                    .ok_or_else(|| Error::InvalidInput("term missing poly".into()))?,
            )?;
            out.add_term(Tuple::new(entries), poly);
        }
        Ok(out)
    }
}

impl<C: Scalar> fmt::Display for TensorVec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (b, p)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if p.is_one() {
                // bare monomial
            } else if p.num_terms() == 1 && p.iter().next().is_some_and(|(_, c)| c.is_positive()) {
                write!(f, "{p} ")?;
            } else {
                write!(f, "({p}) ")?;
            }
            write!(f, "v[{b}]")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for TensorVec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Classical (`q`-free) action of `f_i` or `e_i`.
pub fn chevalley_classical<C: Scalar>(v: &TensorVec<C>, i: i64, gen: Gen) -> TensorVec<C> {
    apply_chevalley(v, i, gen, false)
}

/// Quantum action of `f_i` or `e_i` in the `k`-twisted comultiplication.
pub fn chevalley_quantum<C: Scalar>(v: &TensorVec<C>, i: i64, gen: Gen) -> TensorVec<C> {
    apply_chevalley(v, i, gen, true)
}

fn apply_chevalley<C: Scalar>(v: &TensorVec<C>, i: i64, gen: Gen, quantum: bool) -> TensorVec<C> {
    if let Space::C { .. } = v.space() {
        assert!(i >= 0, "symplectic generators are indexed by ℕ");
    }
    let mut out = TensorVec::zero(v.space().clone());
    for (b, p) in v.iter() {
        for (t, delta, qexp) in slot_moves(v.space(), b, i, gen, quantum) {
            out.add_term(b.bump(t, delta), p.shift(qexp));
        }
    }
    out
}

/// Truncation projections between spaces.
#[derive(Clone, Debug)]
pub enum Projection {
    /// `pr_k`: keep symplectic monomials with entries in `(−k, k]`.
    Rank(i64),
    /// `pr_0`: keep linear monomials with all entries positive.
    Positive,
    /// `pr_σ`: keep symplectic monomials with sign pattern `σ` and relabel
    /// them by the prime map into the linear space.
    Sigma(SignVector),
}

/// Applies a projection.
pub fn project<C: Scalar>(v: &TensorVec<C>, projection: &Projection) -> Result<TensorVec<C>> {
    match projection {
        Projection::Rank(k) => {
            if v.space().sigma().is_some() {
                return Err(Error::Incompatible("pr_k acts on the symplectic space".into()));
            }
            let mut out = TensorVec::zero(v.space().clone());
            for (b, p) in v.iter() {
                if set_membership(b, &SetSpec::Box(*k)) {
                    out.add_term(b.clone(), p.clone());
                }
            }
            Ok(out)
        }
        Projection::Positive => {
            if v.space().sigma().is_none() {
                return Err(Error::Incompatible("pr_0 acts on the linear space".into()));
            }
            let mut out = TensorVec::zero(v.space().clone());
            for (b, p) in v.iter() {
                if set_membership(b, &SetSpec::AllPositive) {
                    out.add_term(b.clone(), p.clone());
                }
            }
            Ok(out)
        }
        Projection::Sigma(sigma) => {
            if v.space().sigma().is_some() {
                return Err(Error::Incompatible("pr_σ acts on the symplectic space".into()));
            }
            if sigma.len() != v.space().n() {
                return Err(Error::Incompatible("sign vector length must match".into()));
            }
            let mut out = TensorVec::zero(Space::type_a(sigma.clone()));
            let spec = SetSpec::SignCompatible(sigma.clone());
            for (b, p) in v.iter() {
                if set_membership(b, &spec) {
                    out.add_term(prime_map(b), p.clone());
                }
            }
            Ok(out)
        }
    }
}

/// Applies the section of a projection (the inclusion of the truncated
/// space); `project ∘ include` is the identity.
pub fn include<C: Scalar>(v: &TensorVec<C>, projection: &Projection) -> Result<TensorVec<C>> {
    match projection {
        Projection::Rank(k) => {
            for b in v.support() {
                if !set_membership(b, &SetSpec::Box(*k)) {
                    return Err(Error::InvalidInput(format!(
                        "support outside the rank-{k} box: {b:?}"
                    )));
                }
            }
            Ok(v.clone())
        }
        Projection::Positive => {
            for b in v.support() {
                if !set_membership(b, &SetSpec::AllPositive) {
                    return Err(Error::InvalidInput(format!(
                        "support outside the positive set: {b:?}"
                    )));
                }
            }
            Ok(v.clone())
        }
        Projection::Sigma(sigma) => {
            if v.space().sigma() != Some(sigma) {
                return Err(Error::Incompatible(
                    "inclusion source must be the linear space for σ".into(),
                ));
            }
            let mut out = TensorVec::zero(Space::type_c(v.space().n()));
            for (b, p) in v.iter() {
                out.add_term(prime_map_inverse(b, sigma)?, p.clone());
            }
            Ok(out)
        }
    }
}
