//! Exact computer algebra for non-symmetric interpolation Macdonald
//! polynomials and the Hecke-operator calculus over `Q(q,t,a)`.

pub mod combin;
pub mod exactalg;
pub mod families;
pub mod heckeops;
pub mod identities;
pub mod linalg;
