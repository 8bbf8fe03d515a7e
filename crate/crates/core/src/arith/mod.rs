//! Exact arithmetic: Laurent polynomials over the integers and p-adic digits.

mod laurent;
mod padic;

pub use laurent::{c_factor, quantum_factorial, quantum_integer, LaurentPoly};
pub use padic::{is_prime, leq_p, nu_p, preceq_p, Characteristic, PadicExpansion};
