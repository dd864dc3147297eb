//! Exact coefficient arithmetic.

pub mod laurent;
pub mod multipoly;
pub mod multirat;
pub mod qint;
pub mod ratfunc;
pub mod rational;
pub mod unit;
pub mod weight;

pub use laurent::{LaurentQ, Var};
pub use multipoly::MultiPoly;
pub use multirat::MultiRat;
pub use qint::{cyclotomic, factor_q_integers, q_bracket_binom, q_int, render_q_integers, val_cyclotomic};
pub use ratfunc::RatFunc;
pub use rational::{rat, ratio, QRational};
pub use unit::{agrees, agrees_q, unit_ratio, Tolerance, UnitRatio};
pub use weight::WeightVec;
