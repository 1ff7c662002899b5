//! Class-membership tests: long holes, induced k-prisms, chordality, minimal
//! triangulations and clique trees.

mod chordal;
mod holes;
mod prism;

pub use chordal::{
    clique_tree, is_chordal, maximal_cliques_of_chordal, minimal_triangulation, Chordality, CliqueTree, FillIn,
};
pub use holes::{find_long_hole, is_induced_cycle};
pub use prism::{find_k_prism, largest_prism, PrismWitness};
