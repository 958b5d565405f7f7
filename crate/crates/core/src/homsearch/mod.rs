//! Homomorphism enumeration into finite groups, conjugation orbits, the
//! extension construction for G_n and property T.

mod extension;
mod orbits;
mod search;
mod witness;

pub use extension::{
    check_property_t, extend_g1_hom, extend_with_root, g1_base_homs, structured_count, ExtensionWitness,
    PropertyReport, SubgroupImages,
};
pub use orbits::{conjugation_orbits, orbit_count, orbit_representatives};
pub use search::{
    count_homs, count_homs_total, enumerate_homs, enumerate_homs_sharded, HomSearch, Homomorphism, SearchStats,
};
pub use witness::{verify_paper_witness, WitnessReport, WITNESS_B, WITNESS_D, WITNESS_D_HAT, WITNESS_E};
