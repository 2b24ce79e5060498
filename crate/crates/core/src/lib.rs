pub mod acceptance;
pub mod exact;
pub mod graphs;
pub mod hopf;
pub mod lattice;
pub mod protect;
pub mod reps;
