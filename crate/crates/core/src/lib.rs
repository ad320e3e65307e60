//! Exact Coxeter-polynomial toolkit for triangular finite-dimensional
//! algebras: Cartan matrices from combinatorial data, Coxeter matrices and
//! their polynomials, cyclotomic factorization, periodicity, the homological
//! quadratic form and spectral measures.
//!
//! All Coxeter matrices use the column convention `phi = -C^T C^{-1}`, under
//! which column `i` of the Cartan matrix is the class of the `i`-th
//! projective and `phi` sends it to minus the class of the `i`-th injective.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod coxeter;
pub mod error;
pub mod input;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod spectral;
pub mod tables;

pub use algebra::{
    canonical, direct_sum, double_repetitive, dynkin, extended_canonical, extended_dynkin, from_hereditary_quiver,
    from_poset, galois_quotient, one_point_extension, supercanonical, supercanonical_poly, tensor, truncated_linear,
    CartanAlgebra, DynkinType, ExtendedDynkinType, GroupAction, PosetSpec, Provenance, QuiverSpec,
};
pub use coxeter::{
    char_poly, coxeter_matrix, coxeter_polynomial, euler_form, homological_form, invariant_restriction,
    is_cyclotomic_type, minimal_poly, periodicity, star_poly, symmetry_factor, weight_classify, CoxeterMatrix,
    FormClass, HomFormReport, Period, PeriodicityReport, StarClass,
};
pub use error::{Error, Result};
pub use input::InputDocument;
pub use linalg::IntMatrix;
pub use poly::cyclotomic::{
    coefficient_conditions, cyclotomic, cyclotomic_factorize, is_self_reciprocal, special_value_formula, v_poly,
    CoefficientConditions, CycFactorization, SpecialPoint,
};
pub use poly::tensor::tensor_product;
pub use poly::IntPoly;
pub use report::{analyze, AnalysisOptions, AnalysisReport, Operation};
pub use spectral::{measures, numeric_roots, verify_inequality_chain, SpectralReport};
pub use tables::{regenerate, TableName, TableReport};
