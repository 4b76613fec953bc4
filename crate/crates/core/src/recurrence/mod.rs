//! The recurrence systems for `G_{k_x}` and `E_{k_x}`, the transformation
//! chain `H → f → g → a_n`, and the closed forms they lead to.

mod chain;
pub mod checks;
mod closed;
mod lemma;
pub mod ring;

pub use chain::{neg_x_pochhammer, transform_chain, transform_chain_from, TransformChain, XSeries};
pub use closed::{
    a_closed_form, closed_form_gkd, final_limit_sides, h_recurrence_rhs, h_term, rr_identity,
    theorem_product,
};
pub use lemma::{gkd_prop_recurrence, lemma_init, lemma_run, lemma_step, LemmaState};
pub use ring::Ring;
