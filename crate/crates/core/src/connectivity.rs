//! Numeric hypotheses of the connectedness theorems, checked against class
//! data and reported as certificates.
//!
//! Dimensions of projections are read off class supports, which is only
//! valid for the class of an irreducible variety; every certificate that
//! relies on this records the `irreducible` assumption. A `false` verdict is
//! data, never an error. Errors are reserved for malformed input and for the
//! two-route checks disagreeing, which can only happen on classes that are
//! not realised by any variety.

use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::certificate::{Certificate, Criterion, Witness};
use crate::json::{BiClassJson, BoxJson, ClassJson, MultiProjJson};
use crate::kunneth::{
    encombrante_mp, hodge_check, is_bonne, proj_dim, support_admissible, IndexSet, KunnethError,
    MultiProjClass,
};
use crate::partitions::{BoxedPartition, PartitionBox, PartitionError};
use crate::schubert::{
    check_special_list, multiply, multiply_all, special, sub_grassmannian_class, BiSchubertClass,
    SchubertClass, SchubertError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
    #[error(transparent)]
    Kunneth(#[from] KunnethError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("the zero class is not the class of a variety")]
    ZeroClass,
    #[error("class is not pure of one codimension")]
    MixedCodim,
    #[error("class has a negative coefficient")]
    NegativeCoefficient,
    #[error("declared dimension {declared} but the class has dimension {actual}")]
    DimensionMismatch { declared: u32, actual: u32 },
    #[error("{0} needs irreducible varieties")]
    NotIrreducible(Criterion),
    #[error("{0}")]
    OutOfRange(String),
    #[error("{criterion}: the two evaluation routes disagree ({detail})")]
    RouteDisagreement { criterion: Criterion, detail: String },
}

/// What a checker needs to know about a class: its ambient and its grading.
pub trait ClassData: Clone {
    fn ambient_dim(&self) -> u32;
    fn codim(&self) -> Option<u32>;
    fn is_zero(&self) -> bool;
    fn has_negative(&self) -> bool;
}

impl ClassData for SchubertClass {
    fn ambient_dim(&self) -> u32 {
        self.frame().cells()
    }
    fn codim(&self) -> Option<u32> {
        self.pure_codim()
    }
    fn is_zero(&self) -> bool {
        SchubertClass::is_zero(self)
    }
    fn has_negative(&self) -> bool {
        SchubertClass::has_negative(self)
    }
}

impl ClassData for BiSchubertClass {
    fn ambient_dim(&self) -> u32 {
        2 * self.frame().cells()
    }
    fn codim(&self) -> Option<u32> {
        self.pure_codim()
    }
    fn is_zero(&self) -> bool {
        BiSchubertClass::is_zero(self)
    }
    fn has_negative(&self) -> bool {
        BiSchubertClass::has_negative(self)
    }
}

impl ClassData for MultiProjClass {
    fn ambient_dim(&self) -> u32 {
        self.space().dim()
    }
    fn codim(&self) -> Option<u32> {
        self.pure_codim()
    }
    fn is_zero(&self) -> bool {
        MultiProjClass::is_zero(self)
    }
    fn has_negative(&self) -> bool {
        MultiProjClass::has_negative(self)
    }
}

/// The class of (the closure of the image of) a variety, with its dimension
/// and the geometric flags the caller vouches for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variety<C> {
    pub class: C,
    pub dim: u32,
    pub irreducible: bool,
    pub complete: bool,
}

impl<C: ClassData> Variety<C> {
    /// Irreducible and complete, with the dimension read off the class.
    pub fn new(class: C) -> Result<Self, CheckError> {
        if class.is_zero() {
            return Err(CheckError::ZeroClass);
        }
        let codim = class.codim().ok_or(CheckError::MixedCodim)?;
        if class.has_negative() {
            return Err(CheckError::NegativeCoefficient);
        }
        Ok(Variety {
            dim: class.ambient_dim() - codim,
            class,
            irreducible: true,
            complete: true,
        })
    }

    pub fn with_dim(class: C, declared: u32) -> Result<Self, CheckError> {
        let v = Self::new(class)?;
        if v.dim != declared {
            return Err(CheckError::DimensionMismatch {
                declared,
                actual: v.dim,
            });
        }
        Ok(v)
    }

    pub fn flags(mut self, irreducible: bool, complete: bool) -> Self {
        self.irreducible = irreducible;
        self.complete = complete;
        self
    }

    pub fn codim(&self) -> u32 {
        self.class.ambient_dim() - self.dim
    }
}

fn require_irreducible<C>(c: Criterion, vs: &[&Variety<C>]) -> Result<(), CheckError> {
    if vs.iter().all(|v| v.irreducible) {
        Ok(())
    } else {
        Err(CheckError::NotIrreducible(c))
    }
}

/// Adds `complete`, or notes that only the non-proper conclusions apply.
fn completeness<C>(cert: Certificate, vs: &[&Variety<C>]) -> Certificate {
    if vs.iter().all(|v| v.complete) {
        cert.assume("complete")
    } else {
        cert.assume("not complete: connectedness conclusions need completeness")
    }
}

fn same_space(a: &MultiProjClass, b: &MultiProjClass) -> Result<(), CheckError> {
    if a.space() != b.space() {
        return Err(KunnethError::SpaceMismatch(a.space().clone(), b.space().clone()).into());
    }
    Ok(())
}

fn same_box(a: PartitionBox, b: PartitionBox) -> Result<(), CheckError> {
    if a != b {
        return Err(SchubertError::BoxMismatch(a, b).into());
    }
    Ok(())
}

fn index_witness(set: IndexSet, lhs: u32, relation: &str, rhs: u32, ok: bool) -> Witness {
    Witness::IndexSet {
        indices: set.indices(),
        lhs: lhs as i64,
        relation: relation.into(),
        rhs: rhs as i64,
        satisfied: ok,
    }
}

fn quantity(name: &str, value: impl Into<i64>) -> Witness {
    Witness::Quantity {
        name: name.into(),
        value: value.into(),
    }
}

fn reading(name: &str, holds: bool) -> Witness {
    Witness::Reading {
        name: name.into(),
        holds,
    }
}

fn partition_witness(role: &str, p: &BoxedPartition, ok: bool) -> Witness {
    Witness::Partition {
        role: role.into(),
        parts: p.parts().to_vec(),
        satisfied: ok,
    }
}

fn count_failures(cert: &Certificate) -> usize {
    cert.witnesses
        .iter()
        .filter(|w| matches!(w, Witness::IndexSet { satisfied: false, .. }))
        .count()
}

// ---------------------------------------------------------------------------
// Products of projective spaces

/// `dim p_I f(X) + dim p_I g(Y) > n_I` (strict) or `>= n_I` for every `I`.
pub fn check_th22(
    x: &Variety<MultiProjClass>,
    y: &Variety<MultiProjClass>,
    strict: bool,
) -> Result<Certificate, CheckError> {
    pair_sum_check(Criterion::Th22, x, y, strict)
}

/// `dim p_I f(X) + dim p_I(Y) > n_I` for every `I`.
pub fn check_cor23(
    x: &Variety<MultiProjClass>,
    y: &Variety<MultiProjClass>,
) -> Result<Certificate, CheckError> {
    pair_sum_check(Criterion::Cor23, x, y, true)
}

fn pair_sum_check(
    criterion: Criterion,
    x: &Variety<MultiProjClass>,
    y: &Variety<MultiProjClass>,
    strict: bool,
) -> Result<Certificate, CheckError> {
    same_space(&x.class, &y.class)?;
    require_irreducible(criterion, &[x, y])?;
    let space = x.class.space();
    let mut cert = completeness(Certificate::new(criterion).assume("irreducible"), &[x, y]);
    let relation = if strict { ">" } else { ">=" };
    for set in space.subsets() {
        let lhs = proj_dim(&x.class, set)? + proj_dim(&y.class, set)?;
        let rhs = space.dim_of(set);
        let ok = if strict { lhs > rhs } else { lhs >= rhs };
        cert.witness(index_witness(set, lhs, relation, rhs, ok));
    }
    let failures = count_failures(&cert);
    let total = cert.witnesses.len();
    Ok(if failures == 0 {
        cert.verdict(
            true,
            format!("dim p_I f(X) + dim p_I Y {relation} n_I for all {total} index sets"),
        )
    } else {
        cert.verdict(
            false,
            format!("{failures} of {total} index sets violate dim p_I f(X) + dim p_I Y {relation} n_I"),
        )
    })
}

/// `2 dim p_I(X) > n_I` for every `I`.
pub fn check_cor24(x: &Variety<MultiProjClass>) -> Result<Certificate, CheckError> {
    require_irreducible(Criterion::Cor24, &[x])?;
    let space = x.class.space();
    let mut cert = Certificate::new(Criterion::Cor24).assume("irreducible");
    for set in space.subsets() {
        let lhs = 2 * proj_dim(&x.class, set)?;
        let rhs = space.dim_of(set);
        cert.witness(index_witness(set, lhs, ">", rhs, lhs > rhs));
    }
    let failures = count_failures(&cert);
    Ok(if failures == 0 {
        cert.verdict(true, "2 dim p_I(X) > n_I for every index set")
    } else {
        cert.verdict(false, format!("{failures} index sets have 2 dim p_I(X) <= n_I"))
    })
}

/// `dim p_I(Z) = min(dim Z, n_I)` for every `I`, cross-checked against the
/// full-slab criterion for encombrante subvarieties.
pub fn check_prop26(z: &Variety<MultiProjClass>) -> Result<Certificate, CheckError> {
    require_irreducible(Criterion::Prop26, &[z])?;
    let space = z.class.space();
    let mut cert = Certificate::new(Criterion::Prop26).assume("irreducible");
    for set in space.subsets() {
        let lhs = proj_dim(&z.class, set)?;
        let rhs = z.dim.min(space.dim_of(set));
        cert.witness(index_witness(set, lhs, "=", rhs, lhs == rhs));
    }
    let failures = count_failures(&cert);
    let by_dims = failures == 0;
    let by_slab = encombrante_mp(&z.class)?;
    if by_dims != by_slab {
        return Err(CheckError::RouteDisagreement {
            criterion: Criterion::Prop26,
            detail: format!("projection dimensions say {by_dims}, full slab says {by_slab}"),
        });
    }
    cert.witness(reading("projection dimensions", by_dims));
    cert.witness(reading("full slab", by_slab));
    Ok(if by_dims {
        cert.verdict(true, "every projection has dimension min(dim Z, n_I); Z is encombrante")
    } else {
        cert.verdict(false, format!("{failures} projections are smaller than min(dim Z, n_I)"))
    })
}

/// Which half of the preimage statement for encombrante or bonne targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop27Variant {
    /// `Z` encombrante and every `dim p_i f(X) > 0`.
    Encombrante,
    /// `Z` bonne.
    Bonne,
}

pub fn check_prop27(
    x: &Variety<MultiProjClass>,
    z: &Variety<MultiProjClass>,
    variant: Prop27Variant,
) -> Result<Certificate, CheckError> {
    let criterion = match variant {
        Prop27Variant::Encombrante => Criterion::Prop27a,
        Prop27Variant::Bonne => Criterion::Prop27b,
    };
    same_space(&x.class, &z.class)?;
    require_irreducible(criterion, &[x, z])?;
    let mut cert = completeness(Certificate::new(criterion).assume("irreducible"), &[x]);
    let codim_z = z.codim();
    cert.witness(quantity("dim f(X)", x.dim));
    cert.witness(quantity("codim Z", codim_z));
    if x.dim <= codim_z {
        return Ok(cert.verdict(false, "dim f(X) <= codim Z"));
    }
    match variant {
        Prop27Variant::Encombrante => {
            let enc = encombrante_mp(&z.class)?;
            cert.witness(reading("Z encombrante", enc));
            let space = x.class.space();
            let mut all_positive = true;
            for set in space.singletons() {
                let dim = proj_dim(&x.class, set)?;
                let ok = dim > 0;
                all_positive &= ok;
                cert.witness(index_witness(set, dim, ">", 0, ok));
            }
            Ok(match (enc, all_positive) {
                (true, true) => cert.verdict(
                    true,
                    "Z is encombrante and every single-factor projection of f(X) is positive-dimensional",
                ),
                (false, _) => cert.verdict(false, "Z is not encombrante"),
                (true, false) => {
                    cert.verdict(false, "some single-factor projection of f(X) is a point")
                }
            })
        }
        Prop27Variant::Bonne => {
            let bonne = is_bonne(&z.class, z.dim)?;
            for set in z.class.space().singletons() {
                let dim = proj_dim(&z.class, set)?;
                cert.witness(index_witness(set, dim, "=", z.dim, dim == z.dim));
            }
            Ok(if bonne {
                cert.verdict(true, "every single-factor projection of Z has dimension dim Z")
            } else {
                cert.verdict(false, "some single-factor projection of Z loses dimension")
            })
        }
    }
}

/// Bertini-type hypothesis for a product of general linear subspaces with
/// codimensions `codims[i]` in the factors. Non-strict:
/// `dim p_I f(X) >= Σ_{i ∈ I} codims[i]` for all `I`; strict adds `>` for
/// every `I` meeting `J = {i : codims[i] > 0}`.
pub fn check_th13(
    x: &Variety<MultiProjClass>,
    codims: &[u32],
    strict: bool,
) -> Result<Certificate, CheckError> {
    require_irreducible(Criterion::Th13, &[x])?;
    let space = x.class.space();
    if codims.len() != space.factors() {
        return Err(CheckError::OutOfRange(format!(
            "{} codimensions given for {} factors",
            codims.len(),
            space.factors()
        )));
    }
    if let Some((i, (&c, &n))) = codims
        .iter()
        .zip(space.dims())
        .enumerate()
        .find(|(_, (&c, &n))| c > n)
    {
        return Err(CheckError::OutOfRange(format!(
            "codimension {c} of factor {} exceeds its dimension {n}",
            i + 1
        )));
    }
    let j_set: u32 = codims
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .fold(0, |m, (i, _)| m | (1 << i));
    let mut cert = Certificate::new(Criterion::Th13).assume("irreducible");
    for set in space.subsets() {
        let lhs = proj_dim(&x.class, set)?;
        let rhs: u32 = set.members().map(|i| codims[i]).sum();
        let meets_j = set.members().any(|i| j_set & (1 << i) != 0);
        let (relation, ok) = if strict && meets_j {
            (">", lhs > rhs)
        } else {
            (">=", lhs >= rhs)
        };
        cert.witness(index_witness(set, lhs, relation, rhs, ok));
    }
    let failures = count_failures(&cert);
    Ok(if failures == 0 {
        cert.verdict(true, "every projection is large enough for the linear section")
    } else {
        cert.verdict(false, format!("{failures} index sets fail the projection bound"))
    })
}

// ---------------------------------------------------------------------------
// Grassmannians

/// Hansen's bound for the diagonal of `G(d, P^n) × G(d, P^n)`, given the
/// dimension of the image. The verdict uses `dim f(X) < n`; the reading
/// `codim f(X) < n` inside the product is reported next to it.
pub fn check_hansen(image_dim: u32, frame: PartitionBox) -> Result<Certificate, CheckError> {
    let n = frame.n();
    let product_dim = 2 * frame.cells();
    if image_dim > product_dim {
        return Err(CheckError::OutOfRange(format!(
            "image dimension {image_dim} exceeds dim G x G = {product_dim}"
        )));
    }
    let codim = product_dim - image_dim;
    let by_dim = image_dim < n;
    let by_codim = codim < n;
    let mut cert = Certificate::new(Criterion::Hansen).assume("complete");
    cert.witness(quantity("n", n));
    cert.witness(quantity("dim f(X)", image_dim));
    cert.witness(quantity("codim f(X)", codim));
    cert.witness(reading("dim f(X) < n", by_dim));
    cert.witness(reading("codim f(X) < n", by_codim));
    let reason = if by_dim == by_codim {
        format!("dim f(X) = {image_dim}, codim f(X) = {codim}, n = {n}; both readings agree")
    } else {
        format!(
            "dim f(X) = {image_dim}, codim f(X) = {codim}, n = {n}; the readings disagree \
             (dim form {by_dim}, codim form {by_codim})"
        )
    };
    Ok(cert.verdict(by_dim, reason))
}

fn pair_satisfies(lambda: &BoxedPartition, mu: &BoxedPartition) -> Result<Option<&'static str>, CheckError> {
    if lambda.pair_condition_a(mu)? {
        Ok(Some("A"))
    } else if lambda.pair_condition_b(mu)? {
        Ok(Some("B"))
    } else {
        Ok(None)
    }
}

/// Some pair `(λ, μ)` with `[f(X)]·p₁*σ_λ̄·p₂*σ_μ̄ ≠ 0` satisfies `λ < μ̄` or
/// `λ* < μ̄*`. The pairing is non-zero exactly when some supported `(α, β)`
/// has `α <= λ`, `β <= μ`, and both conditions only get easier as `λ, μ`
/// shrink, so scanning the support suffices.
pub fn check_th71(f: &Variety<BiSchubertClass>) -> Result<Certificate, CheckError> {
    require_irreducible(Criterion::Th71, &[f])?;
    let cert = completeness(Certificate::new(Criterion::Th71).assume("irreducible"), &[f]);
    scan_th71(cert, &f.class)
}

/// The same scan on a bare bi-class; the zero class gives `false`.
pub fn check_th71_class(class: &BiSchubertClass) -> Result<Certificate, CheckError> {
    scan_th71(Certificate::new(Criterion::Th71).assume("irreducible"), class)
}

fn scan_th71(mut cert: Certificate, class: &BiSchubertClass) -> Result<Certificate, CheckError> {
    if class.has_negative() {
        return Err(CheckError::NegativeCoefficient);
    }
    for (lambda, mu, _) in class.terms() {
        if let Some(cond) = pair_satisfies(lambda, mu)? {
            cert.witness(Witness::Pair {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
                condition: cond.into(),
                satisfied: true,
            });
        }
    }
    let found = cert.witnesses.len();
    let total = class.term_count();
    Ok(if found > 0 {
        cert.verdict(true, format!("{found} of {total} supported pairs satisfy condition A or B"))
    } else {
        cert.verdict(false, format!("none of the {total} supported pairs satisfies condition A or B"))
    })
}

/// `σ_{1,...,1} + σ_w`, with the first term absent when `w = 0`.
fn diagonal_test_class(frame: PartitionBox) -> Result<SchubertClass, CheckError> {
    let top = special(frame, frame.width())?;
    if frame.width() == 0 {
        return Ok(top);
    }
    let column = SchubertClass::basis(BoxedPartition::new(frame, &vec![1; frame.rows()])?);
    Ok(column.add(&top)?)
}

/// `[f(X)]·[g(Y)]·(σ_{1,...,1} + σ_w) ≠ 0`, evaluated as a ring product and
/// as a search for a supported pair meeting condition A or B.
pub fn check_cor73(
    x: &Variety<SchubertClass>,
    y: &Variety<SchubertClass>,
) -> Result<Certificate, CheckError> {
    grass_pair_check(Criterion::Cor73, x, y)
}

/// The self-intersection case `Y = X`.
pub fn check_cor74(x: &Variety<SchubertClass>) -> Result<Certificate, CheckError> {
    grass_pair_check(Criterion::Cor74, x, x)
}

fn grass_pair_check(
    criterion: Criterion,
    x: &Variety<SchubertClass>,
    y: &Variety<SchubertClass>,
) -> Result<Certificate, CheckError> {
    let frame = x.class.frame();
    same_box(frame, y.class.frame())?;
    require_irreducible(criterion, &[x, y])?;
    let mut cert = completeness(Certificate::new(criterion).assume("irreducible"), &[x, y]);

    let product = multiply_all(&[&x.class, &y.class, &diagonal_test_class(frame)?])?;
    let by_product = !product.is_zero();

    let mut witness = None;
    'search: for lambda in x.class.support() {
        for mu in y.class.support() {
            if let Some(cond) = pair_satisfies(lambda, mu)? {
                witness = Some((lambda.clone(), mu.clone(), cond));
                break 'search;
            }
        }
    }
    let by_pairs = witness.is_some();
    if by_product != by_pairs {
        return Err(CheckError::RouteDisagreement {
            criterion,
            detail: format!("triple product says {by_product}, pair search says {by_pairs}"),
        });
    }
    cert.witness(reading("triple product", by_product));
    cert.witness(reading("pair search", by_pairs));
    Ok(match witness {
        Some((lambda, mu, cond)) => {
            cert.witness(Witness::Pair {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
                condition: cond.into(),
                satisfied: true,
            });
            cert.verdict(
                true,
                format!("[X][Y](σ_1..1 + σ_w) has {} terms; {lambda}, {mu} meet condition {cond}", product.term_count()),
            )
        }
        None => cert.verdict(false, "[X][Y](σ_1..1 + σ_w) = 0: no supported pair meets condition A or B"),
    })
}

fn missing_of_weight(c: &SchubertClass, weight: u32) -> Vec<BoxedPartition> {
    c.frame()
        .partitions(Some(weight))
        .into_iter()
        .filter(|p| c.coefficient(p).is_zero())
        .collect()
}

/// Every partition of weight `codim Z` carries a non-zero coefficient.
pub fn check_grass_encombrante(z: &Variety<SchubertClass>) -> Result<Certificate, CheckError> {
    require_irreducible(Criterion::Encombrante, &[z])?;
    let mut cert = Certificate::new(Criterion::Encombrante).assume("irreducible");
    let codim = z.codim();
    let missing = missing_of_weight(&z.class, codim);
    for p in &missing {
        cert.witness(partition_witness("missing", p, false));
    }
    let total = z.class.frame().partitions(Some(codim)).len();
    Ok(if missing.is_empty() {
        cert.witness(quantity("partitions of weight codim Z", total as i64));
        cert.verdict(true, format!("all {total} partitions of weight {codim} are in the support"))
    } else {
        cert.verdict(
            false,
            format!("{} of {total} partitions of weight {codim} are missing", missing.len()),
        )
    })
}

/// For `f(X)` encombrante: `dim Z > codim f(X) + d` with `[Z]·σ_{1,...,1} ≠ 0`,
/// or `dim Z > codim f(X) + w - 1` with `[Z]·σ_w ≠ 0`.
pub fn check_cor75(
    x: &Variety<SchubertClass>,
    z: &Variety<SchubertClass>,
) -> Result<Certificate, CheckError> {
    let frame = x.class.frame();
    same_box(frame, z.class.frame())?;
    require_irreducible(Criterion::Cor75, &[x, z])?;
    let mut cert = completeness(Certificate::new(Criterion::Cor75).assume("irreducible"), &[x]);
    let enc = check_grass_encombrante(x)?.holds;
    cert.witness(reading("f(X) encombrante", enc));
    if !enc {
        return Ok(cert.verdict(false, "f(X) is not encombrante"));
    }
    let (d, w) = (frame.d(), frame.width());
    let codim_x = x.codim();
    cert.witness(quantity("dim Z", z.dim));
    cert.witness(quantity("codim f(X)", codim_x));

    let column_branch = w > 0 && z.dim > codim_x + d && {
        let column = SchubertClass::basis(BoxedPartition::new(frame, &vec![1; frame.rows()])?);
        !multiply(&z.class, &column)?.is_zero()
    };
    let row_branch = w > 0 && z.dim + 1 > codim_x + w && !z.class.pieri(w)?.is_zero();
    cert.witness(reading("dim Z > codim f(X) + d and [Z]σ_1..1 != 0", column_branch));
    cert.witness(reading("dim Z > codim f(X) + w - 1 and [Z]σ_w != 0", row_branch));
    Ok(match (column_branch, row_branch) {
        (true, _) => cert.verdict(true, "column branch holds"),
        (false, true) => cert.verdict(true, "row branch holds"),
        (false, false) => cert.verdict(false, "neither branch holds"),
    })
}

/// `[f(X)]·σ_{μ^(j)} ≠ 0` for every descent `j` of `μ`.
pub fn check_th81(f: &Variety<SchubertClass>, mu: &BoxedPartition) -> Result<Certificate, CheckError> {
    let frame = f.class.frame();
    same_box(frame, mu.frame())?;
    require_irreducible(Criterion::Th81, &[f])?;
    if mu.weight() >= frame.cells() {
        return Err(CheckError::OutOfRange(format!(
            "the Schubert variety of {mu} is a point; it must have positive dimension"
        )));
    }
    let mut cert = completeness(Certificate::new(Criterion::Th81).assume("irreducible"), &[f]);
    let mut failures = 0;
    let descents = mu.descent_set();
    for &j in &descents {
        let enlarged = mu.mu_j(j)?;
        let nonzero = !multiply(&f.class, &SchubertClass::basis(enlarged.clone()))?.is_zero();
        failures += usize::from(!nonzero);
        cert.witness(Witness::Descent {
            j,
            partition: enlarged.parts().to_vec(),
            nonzero,
        });
    }
    Ok(if failures == 0 {
        cert.verdict(
            true,
            format!("[f(X)]σ_mu(j) != 0 for all {} descents of {mu}", descents.len()),
        )
    } else {
        cert.verdict(false, format!("{failures} of {} descents give a zero product", descents.len()))
    })
}

/// For `f(X)` encombrante: `dim Σ_μ > codim f(X) + δ(μ)`.
pub fn check_cor83(f: &Variety<SchubertClass>, mu: &BoxedPartition) -> Result<Certificate, CheckError> {
    let frame = f.class.frame();
    same_box(frame, mu.frame())?;
    require_irreducible(Criterion::Cor83, &[f])?;
    let mut cert = completeness(Certificate::new(Criterion::Cor83).assume("irreducible"), &[f]);
    let enc = check_grass_encombrante(f)?.holds;
    cert.witness(reading("f(X) encombrante", enc));
    if !enc {
        return Ok(cert.verdict(false, "f(X) is not encombrante"));
    }
    let dim_sigma = (frame.cells() - mu.weight()) as i64;
    let codim = f.codim() as i64;
    let delta = mu.delta();
    cert.witness(quantity("dim Sigma_mu", dim_sigma));
    cert.witness(quantity("codim f(X)", codim));
    cert.witness(quantity("delta(mu)", delta));
    let holds = dim_sigma > codim + delta;
    let rel = if holds { ">" } else { "<=" };
    Ok(cert.verdict(
        holds,
        format!("dim Sigma_mu = {dim_sigma} {rel} codim f(X) + delta(mu) = {}", codim + delta),
    ))
}

/// Hypothesis for preimages of intersections of special Schubert varieties
/// of codimensions `ell` (non-increasing). With `s = #{ℓ_i = w}`:
/// `[F]·σ_w^s·σ_{ℓ_s+1}·σ_{ℓ_{s+1}}⋯ ≠ 0` when `s < len`, and
/// `[F]·σ_w^{s+1} ≠ 0` when `s > 0`. Evaluated by repeated Pieri and by the
/// equivalent prefix-sum scan of the support.
pub fn check_th84(f: &Variety<SchubertClass>, ell: &[u32]) -> Result<Certificate, CheckError> {
    let frame = f.class.frame();
    check_special_list(frame, ell)?;
    require_irreducible(Criterion::Th84, &[f])?;
    let mut cert = completeness(Certificate::new(Criterion::Th84).assume("irreducible"), &[f]);
    let w = frame.width();
    let s = ell.iter().take_while(|&&l| l == w).count();
    cert.witness(quantity("s", s as i64));

    // product route
    let word_one: Option<Vec<u32>> = (s < ell.len()).then(|| {
        let mut v = vec![w; s];
        v.push(ell[s] + 1);
        v.extend_from_slice(&ell[s + 1..]);
        v
    });
    let word_two: Option<Vec<u32>> = (s > 0).then(|| vec![w; s + 1]);
    let apply = |word: &[u32]| -> Result<bool, CheckError> {
        let mut acc = f.class.clone();
        for &k in word {
            if acc.is_zero() {
                break;
            }
            acc = acc.pieri(k)?;
        }
        Ok(!acc.is_zero())
    };
    let one = word_one.as_deref().map(apply).transpose()?;
    let two = word_two.as_deref().map(apply).transpose()?;
    let by_product = one.unwrap_or(true) && two.unwrap_or(true);

    // prefix route
    let prefix_ok = |lambda: &BoxedPartition| {
        let bar = lambda.complement();
        let (mut lhs, mut rhs) = (0u64, 0u64);
        ell.iter().enumerate().all(|(i, &l)| {
            lhs += l as u64;
            rhs += bar.part(i) as u64;
            if i >= s {
                lhs < rhs
            } else {
                lhs <= rhs
            }
        })
    };
    let prefix_witness = if s < ell.len() {
        f.class.support().find(|l| prefix_ok(l)).cloned()
    } else {
        None
    };
    let row_witness = if s > 0 && (s as u32) <= frame.d() {
        let row = frame.d() as usize - s;
        f.class.support().find(|l| l.part(row) == 0).cloned()
    } else {
        None
    };
    let prefix_part = s == ell.len() || prefix_witness.is_some();
    let row_part = s == 0 || row_witness.is_some() || ((s as u32) > frame.d() && w == 0);
    let by_prefix = prefix_part && row_part;

    if by_product != by_prefix {
        return Err(CheckError::RouteDisagreement {
            criterion: Criterion::Th84,
            detail: format!("Pieri products say {by_product}, prefix sums say {by_prefix}"),
        });
    }
    if let Some(v) = one {
        cert.witness(reading("[F]σ_w^s σ_(l_s+1) σ_l_(s+1)... != 0", v));
    }
    if let Some(v) = two {
        cert.witness(reading("[F]σ_w^(s+1) != 0", v));
    }
    if let Some(l) = &prefix_witness {
        cert.witness(partition_witness("prefix", l, true));
    }
    if let Some(l) = &row_witness {
        cert.witness(partition_witness("empty row d-s", l, true));
    }
    let reason = if ell.is_empty() {
        "no special Schubert conditions: vacuous".to_string()
    } else if by_product {
        format!("s = {s}; all required products are non-zero")
    } else {
        format!("s = {s}; a required product vanishes")
    };
    Ok(cert.verdict(by_product, reason))
}

/// `[F]·σ_{c,...,c} ≠ 0` with `c = n - l + 1`: `f(X)` meets `G(d, M)` for a
/// general `M` of dimension `l - 1`.
pub fn check_bertini62(f: &Variety<SchubertClass>, l: u32) -> Result<Certificate, CheckError> {
    let frame = f.class.frame();
    let (d, n) = (frame.d(), frame.n());
    if l <= d || l > n {
        return Err(CheckError::OutOfRange(format!("l = {l} must satisfy {d} < l <= {n}")));
    }
    require_irreducible(Criterion::Bertini62, &[f])?;
    let c = n - l + 1;
    let sub = sub_grassmannian_class(frame, c)?;
    let holds = !multiply(&f.class, &sub)?.is_zero();
    let mut cert = Certificate::new(Criterion::Bertini62)
        .assume("irreducible")
        .assume("general M");
    cert.witness(quantity("c", c));
    let tail = "non-vanishing of the class product is a sufficient numeric proxy for meeting G(d, M)";
    Ok(if holds {
        cert.verdict(true, format!("[F]σ_(c^(d+1)) != 0 with c = {c}; {tail}"))
    } else {
        cert.verdict(false, format!("[F]σ_(c^(d+1)) = 0 with c = {c}; {tail}"))
    })
}

// ---------------------------------------------------------------------------
// JSON dispatch

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VarietyJson<C> {
    class: C,
    dim: Option<u32>,
    #[serde(default = "yes")]
    irreducible: bool,
    #[serde(default = "yes")]
    complete: bool,
}

fn yes() -> bool {
    true
}

fn input_err(name: &str, e: impl std::fmt::Display) -> CheckError {
    CheckError::Input(format!("{name}: {e}"))
}

fn field<'a>(inputs: &'a Value, name: &str) -> Result<&'a Value, CheckError> {
    inputs
        .get(name)
        .ok_or_else(|| CheckError::Input(format!("missing field {name:?}")))
}

fn parse<T: DeserializeOwned>(inputs: &Value, name: &str) -> Result<T, CheckError> {
    serde_json::from_value(field(inputs, name)?.clone()).map_err(|e| input_err(name, e))
}

/// A variety is either a bare class or `{"class", "dim"?, "irreducible"?,
/// "complete"?}`.
fn variety<J, C>(
    inputs: &Value,
    name: &str,
    convert: impl Fn(&J) -> Result<C, CheckError>,
) -> Result<Variety<C>, CheckError>
where
    J: DeserializeOwned,
    C: ClassData,
{
    let raw = field(inputs, name)?;
    if raw.get("class").is_some() {
        let v: VarietyJson<J> =
            serde_json::from_value(raw.clone()).map_err(|e| input_err(name, e))?;
        let class = convert(&v.class)?;
        let var = match v.dim {
            Some(d) => Variety::with_dim(class, d)?,
            None => Variety::new(class)?,
        };
        Ok(var.flags(v.irreducible, v.complete))
    } else {
        let j: J = serde_json::from_value(raw.clone()).map_err(|e| input_err(name, e))?;
        Variety::new(convert(&j)?)
    }
}

fn grass(inputs: &Value, name: &str) -> Result<Variety<SchubertClass>, CheckError> {
    variety(inputs, name, |j: &ClassJson| Ok(j.to_class()?))
}

fn multiproj(inputs: &Value, name: &str) -> Result<Variety<MultiProjClass>, CheckError> {
    variety(inputs, name, |j: &MultiProjJson| Ok(j.to_class()?))
}

fn bi(inputs: &Value, name: &str) -> Result<Variety<BiSchubertClass>, CheckError> {
    variety(inputs, name, |j: &BiClassJson| Ok(j.to_class()?))
}

fn flag(inputs: &Value, name: &str, default: bool) -> Result<bool, CheckError> {
    match inputs.get(name) {
        None => Ok(default),
        Some(v) => v
            .as_bool()
            .ok_or_else(|| input_err(name, "expected a boolean")),
    }
}

fn partition_in(inputs: &Value, name: &str, frame: PartitionBox) -> Result<BoxedPartition, CheckError> {
    let parts: Vec<u32> = parse(inputs, name)?;
    Ok(BoxedPartition::new(frame, &parts)?)
}

/// Runs one criterion on a JSON `inputs` object. Field names:
///
/// | criterion | fields |
/// |---|---|
/// | th2.2 | `x`, `y`, `strict` (default true) |
/// | cor2.3 | `x`, `y` |
/// | cor2.4, prop3.1, hodge | `x` |
/// | prop2.6 | `z` |
/// | prop2.7a, prop2.7b | `x`, `z` |
/// | th1.3 | `x`, `codims`, `strict` (default false) |
/// | hansen | `dim`, `box` |
/// | th7.1 | `f` (bi-class), or `x` and `y` |
/// | cor7.3 | `x`, `y` |
/// | cor7.4 | `x` |
/// | cor7.5 | `x`, `z` |
/// | encombrante | `z` |
/// | th8.1, cor8.3 | `f`, `mu` |
/// | th8.4 | `f`, `ell` |
/// | bertini6.2 | `f`, `l` |
///
/// Multiprojective classes use the `space`/`terms` form, Grassmannian
/// classes the `box`/`terms` form.
pub fn evaluate(criterion: Criterion, inputs: &Value) -> Result<Certificate, CheckError> {
    if !inputs.is_object() {
        return Err(CheckError::Input("inputs must be a JSON object".into()));
    }
    match criterion {
        Criterion::Th22 => check_th22(
            &multiproj(inputs, "x")?,
            &multiproj(inputs, "y")?,
            flag(inputs, "strict", true)?,
        ),
        Criterion::Cor23 => check_cor23(&multiproj(inputs, "x")?, &multiproj(inputs, "y")?),
        Criterion::Cor24 => check_cor24(&multiproj(inputs, "x")?),
        Criterion::Prop26 => check_prop26(&multiproj(inputs, "z")?),
        Criterion::Prop27a | Criterion::Prop27b => {
            let variant = if criterion == Criterion::Prop27a {
                Prop27Variant::Encombrante
            } else {
                Prop27Variant::Bonne
            };
            check_prop27(&multiproj(inputs, "x")?, &multiproj(inputs, "z")?, variant)
        }
        Criterion::Prop31 => {
            let x = multiproj(inputs, "x")?;
            require_irreducible(criterion, &[&x])?;
            Ok(support_admissible(&x.class)?)
        }
        Criterion::Hodge => {
            let x = multiproj(inputs, "x")?;
            require_irreducible(criterion, &[&x])?;
            Ok(hodge_check(&x.class)?)
        }
        Criterion::Th13 => {
            let codims: Vec<u32> = parse(inputs, "codims")?;
            check_th13(&multiproj(inputs, "x")?, &codims, flag(inputs, "strict", false)?)
        }
        Criterion::Hansen => {
            let dim: u32 = parse(inputs, "dim")?;
            let frame = parse::<BoxJson>(inputs, "box")?.to_box()?;
            check_hansen(dim, frame)
        }
        Criterion::Th71 => {
            if let Some(raw) = inputs.get("f") {
                let bare: Option<BiClassJson> = serde_json::from_value(raw.clone()).ok();
                match bare.map(|j| j.to_class()).transpose()? {
                    Some(class) if class.is_zero() => check_th71_class(&class),
                    _ => check_th71(&bi(inputs, "f")?),
                }
            } else {
                let (x, y) = (grass(inputs, "x")?, grass(inputs, "y")?);
                let tensor = BiSchubertClass::tensor(&x.class, &y.class)?;
                let f = Variety::new(tensor)?.flags(
                    x.irreducible && y.irreducible,
                    x.complete && y.complete,
                );
                check_th71(&f)
            }
        }
        Criterion::Cor73 => check_cor73(&grass(inputs, "x")?, &grass(inputs, "y")?),
        Criterion::Cor74 => check_cor74(&grass(inputs, "x")?),
        Criterion::Cor75 => check_cor75(&grass(inputs, "x")?, &grass(inputs, "z")?),
        Criterion::Encombrante => check_grass_encombrante(&grass(inputs, "z")?),
        Criterion::Th81 | Criterion::Cor83 => {
            let f = grass(inputs, "f")?;
            let mu = partition_in(inputs, "mu", f.class.frame())?;
            if criterion == Criterion::Th81 {
                check_th81(&f, &mu)
            } else {
                check_cor83(&f, &mu)
            }
        }
        Criterion::Th84 => {
            let ell: Vec<u32> = parse(inputs, "ell")?;
            check_th84(&grass(inputs, "f")?, &ell)
        }
        Criterion::Bertini62 => {
            let l: u32 = parse(inputs, "l")?;
            check_bertini62(&grass(inputs, "f")?, l)
        }
    }
}

/// `{"criterion": name, "inputs": {...}}`.
pub fn evaluate_request(request: &Value) -> Result<Certificate, CheckError> {
    let criterion: Criterion = parse(request, "criterion")?;
    evaluate(criterion, field(request, "inputs")?)
}

/// Checks that a certificate's verdict follows from its own witnesses. This
/// is the re-verification contract: no state beyond the certificate is used.
pub fn witnesses_support_verdict(cert: &Certificate) -> bool {
    let index_ok = || {
        cert.witnesses.iter().all(|w| match w {
            Witness::IndexSet {
                lhs,
                relation,
                rhs,
                satisfied,
                ..
            } => {
                let truth = match relation.as_str() {
                    ">" => lhs > rhs,
                    ">=" => lhs >= rhs,
                    "=" => lhs == rhs,
                    _ => return false,
                };
                truth == *satisfied
            }
            _ => true,
        })
    };
    let any_index = || cert.witnesses.iter().any(|w| matches!(w, Witness::IndexSet { .. }));
    let all_index_sat = || {
        cert.witnesses
            .iter()
            .all(|w| !matches!(w, Witness::IndexSet { satisfied: false, .. }))
    };
    match cert.criterion {
        Criterion::Th22 | Criterion::Cor23 | Criterion::Cor24 | Criterion::Th13 => {
            index_ok() && any_index() && all_index_sat() == cert.holds
        }
        Criterion::Th81 => {
            let all = cert
                .witnesses
                .iter()
                .all(|w| !matches!(w, Witness::Descent { nonzero: false, .. }));
            all == cert.holds
        }
        Criterion::Th71 | Criterion::Cor73 | Criterion::Cor74 => {
            let pairs = cert
                .witnesses
                .iter()
                .any(|w| matches!(w, Witness::Pair { satisfied: true, .. }));
            pairs == cert.holds
        }
        Criterion::Cor83 => {
            let q = |name: &str| {
                cert.witnesses.iter().find_map(|w| match w {
                    Witness::Quantity { name: n, value } if n == name => Some(*value),
                    _ => None,
                })
            };
            match (q("dim Sigma_mu"), q("codim f(X)"), q("delta(mu)")) {
                (Some(a), Some(b), Some(c)) => (a > b + c) == cert.holds,
                _ => !cert.holds,
            }
        }
        _ => true,
    }
}

/// Re-checks a `holds = true` certificate of the pair-search kind by
/// recomputing its witness pair's conditions in `frame`.
pub fn recheck_pair_witnesses(cert: &Certificate, frame: PartitionBox) -> Result<bool, CheckError> {
    for w in &cert.witnesses {
        if let Witness::Pair {
            lambda,
            mu,
            condition,
            satisfied: true,
        } = w
        {
            let l = BoxedPartition::new(frame, lambda)?;
            let m = BoxedPartition::new(frame, mu)?;
            let ok = match condition.as_str() {
                "A" => l.pair_condition_a(&m)?,
                "B" => l.pair_condition_b(&m)?,
                _ => false,
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
