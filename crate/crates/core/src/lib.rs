//! Schubert calculus on `G(d, P^n)`, Künneth classes on products of
//! projective spaces, and numeric checkers for connectedness hypotheses
//! phrased in those two rings.

pub mod certificate;
pub mod connectivity;
pub mod json;
pub mod kunneth;
pub mod lr;
pub mod partitions;
pub mod schubert;

pub use certificate::{Certificate, Criterion, Witness};
pub use connectivity::{evaluate, evaluate_request, CheckError, Variety};
pub use json::{BigIntJson, BiClassJson, BoxJson, ClassJson, MultiProjJson};
pub use kunneth::{
    encombrante_mp, hodge_check, is_bonne, multiply_mp, proj_codim, proj_dim, support_admissible,
    IndexSet, KunnethError, MultiDegree, MultiProjClass, ProductSpace,
};
pub use lr::lr_oracle;
pub use partitions::{BoxedPartition, PartitionBox, PartitionError};
pub use schubert::{
    giambelli_expand, multiply, multiply_all, nonzero_pair, nonzero_special_product, omega_class,
    special, sub_grassmannian_class, BiSchubertClass, SchubertClass, SchubertError, SpecialWord,
};
pub use num_bigint::BigInt;
