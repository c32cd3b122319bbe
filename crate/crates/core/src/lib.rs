//! Graphs, coverings and Stallings cores of subgroups of free groups.
//!
//! - [`graph`]: graphs as half-edge involutions, paths, spines, quotients.
//! - [`covering`]: graph maps, coverings, lifting, excision, universal balls.
//! - [`subgroup`]: subgroups as folded labeled cores; membership, index,
//!   bases, Hall completion, deck groups and intermediate lattices.
//! - [`lattice`]: intersections, joins and double coset tags.
//! - [`hn`]: run and checker profiles of rank-two cores and the resulting
//!   bound on ranks of intersections.
//!
//! ```
//! use stallings::{LabeledCore, Word};
//!
//! let gens = Word::parse_list("a,bAB,bb").unwrap();
//! let core = LabeledCore::from_words(2, &gens).unwrap();
//! assert_eq!(core.index().finite(), Some(2));
//! assert!(core.contains(&"bab".parse().unwrap()).unwrap());
//! ```

pub mod cli;
pub mod covering;
pub mod error;
pub mod graph;
pub mod hn;
pub mod lattice;
pub mod random;
pub mod subgroup;
mod union_find;
pub mod word;

pub use covering::{check_covering, universal_ball, Cell, Covering, Degree, GraphMorphism};
pub use error::{Error, Result};
pub use graph::{Graph, Path, QuotientSpec, Subgraph};
pub use subgroup::LabeledCore;
pub use word::{Letter, Word};
