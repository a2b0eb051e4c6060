//! Instance generators for the hardness constructions, each paired with a
//! witness builder for YES instances. Every builder checks its own output
//! against the metric engine before returning it.

pub mod fastest;
pub mod lower_bound;
pub mod mcc;
pub mod sat;

pub use fastest::{lift_fastest_to_periodic, periodic_witness, reduce_mcc_to_fastest, witness_fastest, FastestLayout};
pub use lower_bound::gen_lower_bound_family;
pub use mcc::{gen_mcc_instance, parse_clique, parse_mcc, read_clique, read_mcc, write_clique, write_mcc, MccInstance};
pub use sat::{
    reduce_sat_to_foremost_single, reduce_sat_to_ranged, reduce_sat_to_shortest, witness_foremost_single,
    witness_ranged, witness_shortest, SatLayout,
};
