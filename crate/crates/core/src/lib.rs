#![no_std]
// `^` is the wedge product, so `a ^ a` is meaningful; index loops mirror the formulas
#![allow(clippy::eq_op, clippy::needless_range_loop)]

extern crate alloc;

pub mod decomp;
pub mod diffops;
pub mod exterior;
pub mod g2forms;
pub mod linalg;
pub mod octonion;
pub mod random;
pub mod scalars;
pub mod verify;
