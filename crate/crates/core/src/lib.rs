//! Combinatorial Schubert calculus in type A.
//!
//! The crate covers the symmetric group as a Weyl group ([`weyl`]),
//! Grassmannian Schubert varieties through partitions and torus-fixed
//! points ([`grassmann`]), the small quantum cohomology ring of `Gr(k, n)`
//! ([`quantum`]), and two-pointed curve neighborhoods of Seidel products
//! together with an exhaustive verifier ([`curve`], [`sweep`]).
//!
//! The central identity checked here is
//! `Γ_d(X_{w₀w}, X^u) = w⁻¹.X^{wu}` for every Seidel element `w`, every
//! `u`, and `d` the minimal degree of the quantum product
//! `[X^w] ⋆ [X^u] = q^d [X^{wu}]`.

pub mod curve;
pub mod error;
pub mod grassmann;
pub mod quantum;
pub mod sweep;
pub mod weyl;

/// Largest supported rank `n`. Fixed points are stored as `u32` masks.
pub const MAX_RANK: usize = 16;

pub use curve::{
    fp_projected_schubert, fp_richardson, g_flag_chain, gamma_fp, v_from_gflags, verify_case,
    CaseChecks, GFlagChain, SchubertSide, TwoStepPoint, VerificationReport,
};
pub use error::{Error, Result};
pub use grassmann::{
    translate_fp, FixedPoints, FlagOrdering, Grassmannian, Partition, SubsetPoint,
};
pub use quantum::{
    classical_product, lr_coeff, quantum_product, seidel_class, seidel_degree,
    seidel_product_check, QClass, QTerm, SeidelProductCheck,
};
pub use sweep::{
    enumerate_cases, sweep, sweep_with_cancel, CaseSpec, SweepConfig, SweepMode, SweepReport,
};
pub use weyl::{join, parabolic_quotient, JoinOutcome, ParabolicSet, Permutation};

/// Implements serde for a type through its `Display` / `FromStr` pair.
#[macro_export]
#[doc(hidden)]
macro_rules! string_serde {
    ($ty:ty) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(
                d: D,
            ) -> std::result::Result<Self, D::Error> {
                let s = <String as serde::Deserialize>::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}
