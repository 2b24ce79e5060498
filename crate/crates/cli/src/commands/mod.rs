pub mod acceptance;
pub mod graph;
pub mod hopf;
pub mod lattice;
pub mod protect;
