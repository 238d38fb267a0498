//! Exact value types: Laurent polynomials in `q`, polynomials in `t` over
//! them, rational series with the `prod (1 - t q^i)` denominator, and
//! bivariate integer polynomials.
//!
//! Every type keeps a canonical form with zero coefficients stripped, so
//! `==` is structural equality. There is no floating point anywhere.

mod bipoly;
mod laurent;
mod poly_tq;
pub mod qnum;
mod series;

pub use bipoly::BiPolyXY;
pub use laurent::LaurentQ;
pub use poly_tq::PolyTQ;
pub use qnum::{q_factorial, q_int, qbinom};
pub use series::{expand, RatSeries};

/// The involution `q -> q^{-1}`.
pub fn bar_q(p: &LaurentQ) -> LaurentQ {
    p.bar()
}
