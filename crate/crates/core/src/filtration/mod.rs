//! Filtration bases, the span membership oracle, closure checks and the
//! rank one-one worked example.

mod basis;
mod closure;
mod gl11;
mod span;

pub use basis::{
    c_leq_basis_truncated, c_leq_vectors_truncated, c_less_vectors_truncated, c_level_vectors, c_quotient_basis,
    m_lambda_l, m_leq_basis, m_less_basis, mask_product, span_of, CBasisVector, EvBasisVector,
};
pub use closure::{
    level_escape_witness, quotient_pair_counts, verify_closure, verify_even_stability, verify_quotient_iso_dims,
    EscapeWitness, FiltrationCheck, FiltrationReport, Status,
};
pub use gl11::{gl11_monomial, verify_gl11_generators, verify_gl11_families, Gl11Kind};
pub use span::{Membership, SpanMatrix};
