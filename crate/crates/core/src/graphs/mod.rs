//! Small labeled graphs, Cartesian products, and the executable check of the
//! correspondence between `Irr(G_n)` constituents and the graphs `Γ_n`.

mod graph;
mod lemma;

pub use graph::{bfs_distance, cartesian_product, gamma, gamma_base, Graph, Label};
pub use lemma::{verify_lemma, verify_lemma_with, LemmaPart, LemmaReport};
