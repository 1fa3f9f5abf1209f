//! Multigraded combinatorics: `l`-partite numbers, vector compositions and
//! partitions, refinement orders, descent/color statistics, colored
//! permutations, shuffles, Lyndon tests, and peak factorizations.

mod composition;
mod lpartite;
mod peaks;
mod perm;
mod shuffle;

pub use composition::{Order, VectorComposition, VectorPartition};
pub use lpartite::{ExtNat, ExtVec, LPartite};
pub use peaks::{comp_from_peaks, is_admissible, is_peak_set, lambda, odd_part, pof, tilde};
pub use perm::{comp_of_color_word, ColoredPermutation};
pub use shuffle::{concat_splits, quasi_shuffles, shuffles};
