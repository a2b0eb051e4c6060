//! Exhaustive deciders for tiny instances, used as references for the
//! polynomial algorithms. They only rely on computing foremost matrices.

mod budget;
mod foremost;
mod ranged;
mod sat;

pub use budget::{SearchBudget, Verdict};
pub use foremost::{oracle_foremost_realizable, oracle_single_label_foremost};
pub use ranged::oracle_ranged;
pub use sat::sat_solve_brute;
