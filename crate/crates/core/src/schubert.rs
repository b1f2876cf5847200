//! The Chow ring of `G(d, P^n)` in the Schubert basis.
//!
//! Products are computed by expanding one factor into special classes with
//! the Giambelli determinant and applying the Pieri rule once per special
//! factor, discarding partitions that leave the box. The Littlewood-Richardson
//! rule in [`crate::lr`] is an independent cross-check of this path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::partitions::{BoxedPartition, PartitionBox, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchubertError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("special class index {m} is outside 0..={width}")]
    SpecialOutOfRange { m: u32, width: u32 },
    #[error("special indices {0:?} must be non-increasing")]
    NotSorted(Vec<u32>),
    #[error("classes live on different Grassmannians ({0} vs {1})")]
    BoxMismatch(PartitionBox, PartitionBox),
}

/// Finite integer combination of Schubert classes `σ_λ` on one Grassmannian.
///
/// Zero coefficients are never stored; terms iterate in the canonical
/// partition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    frame: PartitionBox,
    terms: BTreeMap<BoxedPartition, BigInt>,
}

impl SchubertClass {
    pub fn zero(frame: PartitionBox) -> Self {
        SchubertClass {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(frame: PartitionBox) -> Self {
        Self::basis(frame.empty())
    }

    pub fn basis(lambda: BoxedPartition) -> Self {
        Self::monomial(lambda, BigInt::one())
    }

    pub fn monomial(lambda: BoxedPartition, coeff: BigInt) -> Self {
        let mut c = Self::zero(lambda.frame());
        c.add_term(lambda, coeff)
            .expect("partition lives in the class box");
        c
    }

    pub fn from_terms<I>(frame: PartitionBox, terms: I) -> Result<Self, SchubertError>
    where
        I: IntoIterator<Item = (BoxedPartition, BigInt)>,
    {
        let mut c = Self::zero(frame);
        for (lambda, coeff) in terms {
            c.add_term(lambda, coeff)?;
        }
        Ok(c)
    }

    pub fn frame(&self) -> PartitionBox {
        self.frame
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BoxedPartition, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &BoxedPartition> {
        self.terms.keys()
    }

    /// Number of non-zero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `σ_λ`; zero when absent.
    pub fn coefficient(&self, lambda: &BoxedPartition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Common weight of the support, or `None` for the zero class or a class
    /// of mixed codimension.
    pub fn pure_codim(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(BoxedPartition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// The zero class is pure of every codimension.
    pub fn is_pure_of(&self, codim: u32) -> bool {
        self.terms.keys().all(|l| l.weight() == codim)
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(Signed::is_negative)
    }

    pub fn add_term(&mut self, lambda: BoxedPartition, coeff: BigInt) -> Result<(), SchubertError> {
        if lambda.frame() != self.frame {
            return Err(SchubertError::BoxMismatch(self.frame, lambda.frame()));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &SchubertClass) -> Result<SchubertClass, SchubertError> {
        self.same_box(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> SchubertClass {
        if k.is_zero() {
            return Self::zero(self.frame);
        }
        SchubertClass {
            frame: self.frame,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }

    fn same_box(&self, other: &SchubertClass) -> Result<(), SchubertError> {
        if self.frame != other.frame {
            return Err(SchubertError::BoxMismatch(self.frame, other.frame));
        }
        Ok(())
    }

    /// Product with the special class `σ_m` (Pieri rule).
    pub fn pieri(&self, m: u32) -> Result<SchubertClass, SchubertError> {
        check_special(self.frame, m)?;
        let mut out = Self::zero(self.frame);
        for (lambda, c) in &self.terms {
            for nu in horizontal_strips(lambda, m) {
                out.add_term(nu, c.clone())?;
            }
        }
        Ok(out)
    }

    /// Transport to the dual Grassmannian `G(n-d-1, P^n*)`: `σ_λ ↦ σ_{λ*}`.
    pub fn conjugate(&self) -> Result<SchubertClass, SchubertError> {
        let frame = self.frame.transpose()?;
        let mut out = Self::zero(frame);
        for (l, c) in &self.terms {
            out.add_term(l.conjugate()?, c.clone())?;
        }
        Ok(out)
    }
}

fn check_special(frame: PartitionBox, m: u32) -> Result<(), SchubertError> {
    if m > frame.width() {
        return Err(SchubertError::SpecialOutOfRange {
            m,
            width: frame.width(),
        });
    }
    Ok(())
}

/// All `ν ⊇ λ` inside the box with `ν/λ` a horizontal strip of `m` cells.
fn horizontal_strips(lambda: &BoxedPartition, m: u32) -> Vec<BoxedPartition> {
    let frame = lambda.frame();
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(parts.len());
    strip_rows(frame, parts, m, &mut nu, &mut out);
    out
}

fn strip_rows(
    frame: PartitionBox,
    parts: &[u32],
    left: u32,
    nu: &mut Vec<u32>,
    out: &mut Vec<BoxedPartition>,
) {
    let i = nu.len();
    if i == parts.len() {
        if left == 0 {
            out.push(BoxedPartition::new(frame, nu).expect("strip stays in the box"));
        }
        return;
    }
    let ceiling = if i == 0 { frame.width() } else { parts[i - 1] };
    let room = ceiling - parts[i];
    for add in 0..=room.min(left) {
        nu.push(parts[i] + add);
        strip_rows(frame, parts, left - add, nu, out);
        nu.pop();
    }
}

/// `σ_m = σ_{(m,0,...,0)}`.
pub fn special(frame: PartitionBox, m: u32) -> Result<SchubertClass, SchubertError> {
    check_special(frame, m)?;
    Ok(SchubertClass::basis(BoxedPartition::new(frame, &[m])?))
}

/// One signed product `coeff · σ_{k_1} ⋯ σ_{k_r}` of special classes, with
/// `k_1 >= ... >= k_r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialWord {
    pub coeff: BigInt,
    pub factors: Vec<u32>,
}

impl SpecialWord {
    /// `coeff · σ_{k_1} ⋯ σ_{k_r} · base`, by repeated Pieri.
    pub fn apply(&self, base: &SchubertClass) -> Result<SchubertClass, SchubertError> {
        let mut acc = base.clone();
        for &k in &self.factors {
            if acc.is_zero() {
                break;
            }
            acc = acc.pieri(k)?;
        }
        Ok(acc.scale(&self.coeff))
    }
}

/// Giambelli expansion `σ_λ = det(σ_{λ_i + j - i})` over the non-zero rows of
/// `λ`, with `σ_k = 0` for `k < 0` or `k > w`, collected into special words.
pub fn giambelli_expand(lambda: &BoxedPartition) -> Vec<SpecialWord> {
    let w = lambda.frame().width() as i64;
    let rows: Vec<i64> = lambda
        .parts()
        .iter()
        .take_while(|&&p| p > 0)
        .map(|&p| p as i64)
        .collect();
    let len = rows.len();
    if len == 0 {
        return vec![SpecialWord {
            coeff: BigInt::one(),
            factors: Vec::new(),
        }];
    }

    assert!(len <= 128, "Giambelli expansion supports at most 128 rows");

    // Laplace expansion row by row; the state is the set of used columns.
    // Entries vanish outside a band of width w+1, which keeps the state
    // space small.
    type Poly = BTreeMap<Vec<u32>, BigInt>;
    let mut layer: BTreeMap<u128, Poly> = BTreeMap::new();
    layer.insert(0, Poly::from([(Vec::new(), BigInt::one())]));
    for (i, &row) in rows.iter().enumerate() {
        let mut next: BTreeMap<u128, Poly> = BTreeMap::new();
        for (mask, poly) in &layer {
            for j in 0..len {
                if mask & (1u128 << j) != 0 {
                    continue;
                }
                let k = row + j as i64 - i as i64;
                if k < 0 || k > w {
                    continue;
                }
                let inversions = (mask >> (j + 1)).count_ones();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                let target = next.entry(mask | (1u128 << j)).or_default();
                for (word, c) in poly {
                    let mut word = word.clone();
                    if k > 0 {
                        let at = word.partition_point(|&x| x >= k as u32);
                        word.insert(at, k as u32);
                    }
                    *target.entry(word).or_default() += c * sign;
                }
            }
        }
        layer = next;
    }

    let full = if len == 128 { u128::MAX } else { (1u128 << len) - 1 };
    layer
        .remove(&full)
        .unwrap_or_default()
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(factors, coeff)| SpecialWord { coeff, factors })
        .collect()
}

/// Evaluates a signed sum of special words against `base`.
pub fn evaluate_words(
    words: &[SpecialWord],
    base: &SchubertClass,
) -> Result<SchubertClass, SchubertError> {
    let mut out = SchubertClass::zero(base.frame());
    for word in words {
        out = out.add(&word.apply(base)?)?;
    }
    Ok(out)
}

/// Ring product in `A*(G(d, P^n))`.
pub fn multiply(a: &SchubertClass, b: &SchubertClass) -> Result<SchubertClass, SchubertError> {
    a.same_box(b)?;
    let mut out = SchubertClass::zero(a.frame);
    if b.is_zero() {
        return Ok(out);
    }
    for (lambda, c) in &a.terms {
        let part = evaluate_words(&giambelli_expand(lambda), b)?;
        out = out.add(&part.scale(c))?;
    }
    Ok(out)
}

/// Product of several classes, left to right. Empty input is an error-free
/// unit only when a box is known, so at least one factor is required.
pub fn multiply_all(factors: &[&SchubertClass]) -> Result<SchubertClass, SchubertError> {
    let (first, rest) = factors
        .split_first()
        .expect("multiply_all needs at least one factor");
    rest.iter()
        .try_fold((*first).clone(), |acc, f| multiply(&acc, f))
}

/// `[X]_λ`: the coefficient of `σ_λ` in `c`.
pub fn component(c: &SchubertClass, lambda: &BoxedPartition) -> Result<BigInt, SchubertError> {
    if c.frame != lambda.frame() {
        return Err(SchubertError::BoxMismatch(c.frame, lambda.frame()));
    }
    Ok(c.coefficient(lambda))
}

/// `σ_λ · σ_μ ≠ 0` iff `λ <= μ̄`.
pub fn nonzero_pair(lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<bool, SchubertError> {
    Ok(lambda.leq(&mu.complement())?)
}

/// `σ_λ̄ · σ_{ℓ_0} ⋯ σ_{ℓ_r} ≠ 0` iff `ℓ_0 + ... + ℓ_i <= λ_0 + ... + λ_i`
/// for every `i`, with `λ_i = 0` past row `d`.
pub fn nonzero_special_product(
    lambda: &BoxedPartition,
    ell: &[u32],
) -> Result<bool, SchubertError> {
    check_special_list(lambda.frame(), ell)?;
    let mut lhs = 0u64;
    let mut rhs = 0u64;
    for (i, &l) in ell.iter().enumerate() {
        lhs += l as u64;
        rhs += lambda.part(i) as u64;
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_special_list(frame: PartitionBox, ell: &[u32]) -> Result<(), SchubertError> {
    if ell.windows(2).any(|p| p[0] < p[1]) {
        return Err(SchubertError::NotSorted(ell.to_vec()));
    }
    if let Some(&m) = ell.first() {
        check_special(frame, m)?;
    }
    Ok(())
}

/// `σ_c,...,c` with `d+1` copies: the class of `G(d, M)` for `codim M = c`.
pub fn sub_grassmannian_class(frame: PartitionBox, c: u32) -> Result<SchubertClass, SchubertError> {
    check_special(frame, c)?;
    Ok(SchubertClass::basis(BoxedPartition::new(
        frame,
        &vec![c; frame.rows()],
    )?))
}

/// Integer combination of `p₁*σ_λ · p₂*σ_μ` on `G(d, P^n) × G(d, P^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSchubertClass {
    frame: PartitionBox,
    terms: BTreeMap<(BoxedPartition, BoxedPartition), BigInt>,
}

impl BiSchubertClass {
    pub fn zero(frame: PartitionBox) -> Self {
        BiSchubertClass {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(frame: PartitionBox, terms: I) -> Result<Self, SchubertError>
    where
        I: IntoIterator<Item = (BoxedPartition, BoxedPartition, BigInt)>,
    {
        let mut c = Self::zero(frame);
        for (l, m, k) in terms {
            c.add_term(l, m, k)?;
        }
        Ok(c)
    }

    /// `p₁*a · p₂*b`, the class of a product `X × Y`.
    pub fn tensor(a: &SchubertClass, b: &SchubertClass) -> Result<Self, SchubertError> {
        a.same_box(b)?;
        let mut c = Self::zero(a.frame);
        for (l, x) in &a.terms {
            for (m, y) in &b.terms {
                c.add_term(l.clone(), m.clone(), x * y)?;
            }
        }
        Ok(c)
    }

    pub fn add_term(
        &mut self,
        lambda: BoxedPartition,
        mu: BoxedPartition,
        coeff: BigInt,
    ) -> Result<(), SchubertError> {
        for p in [&lambda, &mu] {
            if p.frame() != self.frame {
                return Err(SchubertError::BoxMismatch(self.frame, p.frame()));
            }
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let key = (lambda, mu);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn frame(&self) -> PartitionBox {
        self.frame
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BoxedPartition, &BoxedPartition, &BigInt)> {
        self.terms.iter().map(|((l, m), c)| (l, m, c))
    }

    pub fn coefficient(&self, lambda: &BoxedPartition, mu: &BoxedPartition) -> BigInt {
        self.terms
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Number of non-zero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(Signed::is_negative)
    }

    pub fn is_pure_of(&self, codim: u32) -> bool {
        self.terms.keys().all(|(l, m)| l.weight() + m.weight() == codim)
    }

    pub fn pure_codim(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(|(l, m)| l.weight() + m.weight());
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }
}

/// Class of `Ω_M`: the sum of `p₁*σ_α · p₂*σ_β` over all pairs with
/// `α_i + β_{d-i} = w + 1` for every row.
pub fn omega_class(frame: PartitionBox) -> BiSchubertClass {
    let w = frame.width();
    let mut out = BiSchubertClass::zero(frame);
    for alpha in frame.partitions(None) {
        // β is forced row by row; it must be a partition inside the box
        let beta: Option<Vec<u32>> = alpha
            .parts()
            .iter()
            .rev()
            .map(|&a| (w + 1).checked_sub(a).filter(|&b| b <= w))
            .collect();
        let Some(beta) = beta else { continue };
        if let Ok(beta) = BoxedPartition::new(frame, &beta) {
            out.add_term(alpha, beta, BigInt::one())
                .expect("same box");
        }
    }
    out
}
