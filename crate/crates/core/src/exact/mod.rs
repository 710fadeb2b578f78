//! Exact scalars: arbitrary-precision rationals and elements of cyclotomic
//! fields. Nothing in here touches floating point.

mod cyclotomic;
mod poly;
mod rational;

pub use cyclotomic::{CyclotomicField, CyclotomicNumber};
pub use rational::{int, parse_rational, rat, rat_cmp_sqrt, Rational};
