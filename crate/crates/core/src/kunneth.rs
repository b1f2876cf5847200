//! Chow classes on `P = P^{n_1} × ⋯ × P^{n_r}` in the Künneth monomial basis
//! `H_1^{m_1} ⋯ H_r^{m_r}`, and the projection dimensions they determine.
//!
//! Everything derived from a support (projection codimensions, admissible
//! shapes, slab tests) is only meaningful for the class of an irreducible
//! subvariety; callers vouch for that.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::certificate::{Certificate, Criterion, Witness};

/// Subset iteration is exhaustive, so the factor count is capped.
pub const MAX_FACTORS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KunnethError {
    #[error("a product space needs at least one factor")]
    NoFactors,
    #[error("{0} factors exceed the supported maximum of {MAX_FACTORS}")]
    TooManyFactors(usize),
    #[error("factor {0} has dimension 0")]
    PointFactor(usize),
    #[error("classes live on different spaces ({0} vs {1})")]
    SpaceMismatch(ProductSpace, ProductSpace),
    #[error("multidegree {m:?} does not match {space}")]
    DegreeOutOfRange { m: Vec<u32>, space: ProductSpace },
    #[error("the zero class has no projections")]
    ZeroClass,
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("index {0} is not a factor")]
    BadIndex(usize),
    #[error("class is not pure of one codimension")]
    MixedCodim,
    #[error("class has a negative coefficient")]
    NegativeCoefficient,
    #[error("declared dimension {declared} but the class has dimension {actual}")]
    DimensionMismatch { declared: u32, actual: u32 },
}

/// `P^{n_1} × ⋯ × P^{n_r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductSpace {
    dims: Vec<u32>,
}

impl ProductSpace {
    pub fn new(dims: Vec<u32>) -> Result<Self, KunnethError> {
        if dims.is_empty() {
            return Err(KunnethError::NoFactors);
        }
        if dims.len() > MAX_FACTORS {
            return Err(KunnethError::TooManyFactors(dims.len()));
        }
        if let Some(i) = dims.iter().position(|&n| n == 0) {
            return Err(KunnethError::PointFactor(i + 1));
        }
        Ok(ProductSpace { dims })
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self) -> u32 {
        self.dims.iter().sum()
    }

    /// `n_I = Σ_{i ∈ I} n_i`.
    pub fn dim_of(&self, set: IndexSet) -> u32 {
        set.members().map(|i| self.dims[i]).sum()
    }

    /// All `2^r - 1` non-empty index sets, by increasing bitmask.
    pub fn subsets(&self) -> impl Iterator<Item = IndexSet> {
        let r = self.dims.len();
        (1u32..(1u32 << r)).map(IndexSet)
    }

    pub fn singletons(&self) -> impl Iterator<Item = IndexSet> {
        (0..self.dims.len()).map(|i| IndexSet(1 << i))
    }

    pub fn full_set(&self) -> IndexSet {
        IndexSet((1u32 << self.dims.len()) - 1)
    }

    /// Multidegrees `m` with `|m| = k` and `m_i <= n_i`, lexicographically.
    pub fn slab(&self, k: u32) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        let mut m = Vec::with_capacity(self.dims.len());
        self.slab_rec(k, &mut m, &mut out);
        out
    }

    fn slab_rec(&self, left: u32, m: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
        let i = m.len();
        if i == self.dims.len() {
            if left == 0 {
                out.push(MultiDegree(m.clone()));
            }
            return;
        }
        let rest: u32 = self.dims[i + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for v in lo..=left.min(self.dims[i]) {
            m.push(v);
            self.slab_rec(left - v, m, out);
            m.pop();
        }
    }

    fn check(&self, m: &MultiDegree) -> Result<(), KunnethError> {
        if m.0.len() != self.dims.len() || m.0.iter().zip(&self.dims).any(|(a, n)| a > n) {
            return Err(KunnethError::DegreeOutOfRange {
                m: m.0.clone(),
                space: self.clone(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ProductSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "P^{n}")?;
        }
        Ok(())
    }
}

/// Non-empty subset of the factors, as a bitmask over 0-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u32);

impl IndexSet {
    /// From 1-based factor indices.
    pub fn from_indices(space: &ProductSpace, indices: &[usize]) -> Result<Self, KunnethError> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > space.factors() {
                return Err(KunnethError::BadIndex(i));
            }
            mask |= 1 << (i - 1);
        }
        if mask == 0 {
            return Err(KunnethError::EmptyIndexSet);
        }
        Ok(IndexSet(mask))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn meets(&self, other: IndexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(&self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based indices, for output.
    pub fn indices(&self) -> Vec<usize> {
        self.members().map(|i| i + 1).collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Exponent vector `(m_1, ..., m_r)` of a Künneth monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<u32>);

impl MultiDegree {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn partial(&self, set: IndexSet) -> u32 {
        set.members().map(|i| self.0[i]).sum()
    }
}

/// Integer combination of Künneth monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiProjClass {
    space: ProductSpace,
    terms: BTreeMap<MultiDegree, BigInt>,
}

impl MultiProjClass {
    pub fn zero(space: ProductSpace) -> Self {
        MultiProjClass {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(space: ProductSpace, terms: I) -> Result<Self, KunnethError>
    where
        I: IntoIterator<Item = (MultiDegree, BigInt)>,
    {
        let mut c = Self::zero(space);
        for (m, k) in terms {
            c.add_term(m, k)?;
        }
        Ok(c)
    }

    pub fn monomial(space: ProductSpace, m: Vec<u32>, coeff: BigInt) -> Result<Self, KunnethError> {
        Self::from_terms(space, [(MultiDegree(m), coeff)])
    }

    /// `H_i`, pulled back from the hyperplane class of factor `i` (1-based).
    pub fn hyperplane(space: &ProductSpace, i: usize) -> Result<Self, KunnethError> {
        if i == 0 || i > space.factors() {
            return Err(KunnethError::BadIndex(i));
        }
        let mut m = vec![0; space.factors()];
        m[i - 1] = 1;
        Self::monomial(space.clone(), m, BigInt::from(1))
    }

    pub fn unit(space: &ProductSpace) -> Self {
        Self::monomial(space.clone(), vec![0; space.factors()], BigInt::from(1))
            .expect("zero degree fits")
    }

    pub fn add_term(&mut self, m: MultiDegree, coeff: BigInt) -> Result<(), KunnethError> {
        self.space.check(&m)?;
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiProjClass) -> Result<MultiProjClass, KunnethError> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, k) in &other.terms {
            out.add_term(m.clone(), k.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> MultiProjClass {
        let mut out = Self::zero(self.space.clone());
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        }
        out
    }

    fn same_space(&self, other: &MultiProjClass) -> Result<(), KunnethError> {
        if self.space != other.space {
            return Err(KunnethError::SpaceMismatch(
                self.space.clone(),
                other.space.clone(),
            ));
        }
        Ok(())
    }

    pub fn space(&self) -> &ProductSpace {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiDegree, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &MultiDegree> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &MultiDegree) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(Signed::is_negative)
    }

    pub fn is_pure_of(&self, codim: u32) -> bool {
        self.terms.keys().all(|m| m.total() == codim)
    }

    pub fn pure_codim(&self) -> Option<u32> {
        let mut totals = self.terms.keys().map(MultiDegree::total);
        let first = totals.next()?;
        totals.all(|t| t == first).then_some(first)
    }

    fn require_pure(&self) -> Result<u32, KunnethError> {
        if self.is_zero() {
            return Err(KunnethError::ZeroClass);
        }
        self.pure_codim().ok_or(KunnethError::MixedCodim)
    }
}

/// Product in `A*(P)`, with `H_i^{n_i+1} = 0`.
pub fn multiply_mp(a: &MultiProjClass, b: &MultiProjClass) -> Result<MultiProjClass, KunnethError> {
    a.same_space(b)?;
    let dims = a.space.dims();
    let mut out = MultiProjClass::zero(a.space.clone());
    for (ma, ka) in &a.terms {
        for (mb, kb) in &b.terms {
            let m: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
            if m.iter().zip(dims).any(|(v, n)| v > n) {
                continue;
            }
            out.add_term(MultiDegree(m), ka * kb)?;
        }
    }
    Ok(out)
}

/// `codim p_I(X)`: the least `Σ_{i ∈ I} m_i` over the support.
pub fn proj_codim(c: &MultiProjClass, set: IndexSet) -> Result<u32, KunnethError> {
    if set.0 == 0 {
        return Err(KunnethError::EmptyIndexSet);
    }
    if set.0 >> c.space.factors() != 0 {
        return Err(KunnethError::BadIndex(32 - set.0.leading_zeros() as usize));
    }
    c.terms
        .keys()
        .map(|m| m.partial(set))
        .min()
        .ok_or(KunnethError::ZeroClass)
}

/// `dim p_I(X) = n_I - codim p_I(X)`.
pub fn proj_dim(c: &MultiProjClass, set: IndexSet) -> Result<u32, KunnethError> {
    Ok(c.space.dim_of(set) - proj_codim(c, set)?)
}

/// Checks that the support is exactly the set of multidegrees allowed by the
/// projection inequalities `Σ_{i ∈ I} m_i >= codim p_I(X)`.
pub fn support_admissible(c: &MultiProjClass) -> Result<Certificate, KunnethError> {
    let k = c.require_pure()?;
    let mut cert = Certificate::new(Criterion::Prop31).assume("irreducible");
    let bounds: Vec<(IndexSet, u32)> = c
        .space
        .subsets()
        .map(|s| proj_codim(c, s).map(|b| (s, b)))
        .collect::<Result<_, _>>()?;
    for (s, b) in &bounds {
        cert.witness(Witness::Quantity {
            name: format!("codim p_{s}"),
            value: *b as i64,
        });
    }
    let predicted: BTreeSet<MultiDegree> = c
        .space
        .slab(k)
        .into_iter()
        .filter(|m| bounds.iter().all(|(s, b)| m.partial(*s) >= *b))
        .collect();
    let actual: BTreeSet<MultiDegree> = c.terms.keys().cloned().collect();
    let missing: Vec<_> = predicted.difference(&actual).cloned().collect();
    let extra: Vec<_> = actual.difference(&predicted).cloned().collect();
    for m in &missing {
        cert.witness(Witness::MultiDegree {
            role: "missing".into(),
            m: m.0.clone(),
        });
    }
    for m in &extra {
        cert.witness(Witness::MultiDegree {
            role: "extra".into(),
            m: m.0.clone(),
        });
    }
    let holds = missing.is_empty() && extra.is_empty();
    let reason = if holds {
        format!(
            "support is exactly the {} lattice points cut out by the projection inequalities",
            predicted.len()
        )
    } else {
        format!(
            "support differs from the inequality set: {} missing, {} extra",
            missing.len(),
            extra.len()
        )
    };
    Ok(cert.verdict(holds, reason))
}

/// Neighbour inequalities `c_m² >= c_{m+e_α-e_β} · c_{m-e_α+e_β}` over the
/// support; absent neighbours count as zero.
pub fn hodge_check(c: &MultiProjClass) -> Result<Certificate, KunnethError> {
    c.require_pure()?;
    if c.has_negative() {
        return Err(KunnethError::NegativeCoefficient);
    }
    let r = c.space.factors();
    let mut cert = Certificate::new(Criterion::Hodge).assume("irreducible");
    let shifted = |m: &MultiDegree, up: usize, down: usize| -> BigInt {
        if m.0[down] == 0 || m.0[up] == c.space.dims()[up] {
            return BigInt::zero();
        }
        let mut v = m.0.clone();
        v[up] += 1;
        v[down] -= 1;
        c.coefficient(&MultiDegree(v))
    };
    let mut checked = 0usize;
    for (m, k) in &c.terms {
        for alpha in 0..r {
            for beta in alpha + 1..r {
                checked += 1;
                let square = k * k;
                let product = shifted(m, alpha, beta) * shifted(m, beta, alpha);
                if square < product {
                    cert.witness(Witness::Hodge {
                        m: m.0.clone(),
                        alpha: alpha + 1,
                        beta: beta + 1,
                        square: square.into(),
                        product: product.into(),
                    });
                }
            }
        }
    }
    let violations = cert.witnesses.len();
    Ok(if violations == 0 {
        cert.verdict(true, format!("all {checked} neighbour inequalities hold"))
    } else {
        cert.verdict(false, format!("{violations} neighbour inequalities fail"))
    })
}

/// Every monomial of the class's codimension that is non-zero in `A*(P)`
/// appears in the support.
pub fn encombrante_mp(c: &MultiProjClass) -> Result<bool, KunnethError> {
    let k = c.require_pure()?;
    Ok(c.space.slab(k).iter().all(|m| c.terms.contains_key(m)))
}

/// `dim p_i(Z) = dim Z` for every single factor `i`.
pub fn is_bonne(c: &MultiProjClass, dim_z: u32) -> Result<bool, KunnethError> {
    let k = c.require_pure()?;
    let actual = c.space.dim() - k;
    if actual != dim_z {
        return Err(KunnethError::DimensionMismatch {
            declared: dim_z,
            actual,
        });
    }
    for s in c.space.singletons() {
        if proj_dim(c, s)? != dim_z {
            return Ok(false);
        }
    }
    Ok(true)
}
