//! Classical encodings of faces, used as independent checks of the generic product.

pub mod counts;
pub mod cube;
pub mod packed;
pub mod schroeder;

pub use counts::{erosohedron_counts, ErosohedronCounts};
pub use cube::{hypercube_decode, hypercube_encode, hypercube_star_words, hypercube_trio_words, CubeLetter, CubeTrio, CubeWord, WordSum};
pub use packed::{br_shuffle, permutohedron_decode, permutohedron_encode, std_word, PackedWord, WordTrio};
pub use schroeder::{associahedron_decode, associahedron_encode, lr_star, lr_trio_trees, SchroederTree, TreeSum, TreeTrio};
