//! Finite-window model of eventually constant functions on finite sets of
//! naturals, their limits, and the good-pair search kernels built on them.
//!
//! An eventually constant function promises that along every infinite
//! increasing chain of prefixes its values stabilize. At desk scale that
//! promise is truncated to a [`StabilizingArray`]: a total value table on the
//! subsets of a bounded window up to a bounded size, together with a guard
//! certificate stating that the last `guard + 1` values along every maximal
//! prefix chain agree. The stabilized value plays the role of the limit
//! function and is computed by [`StabilizingArray::fbar`].
//!
//! On top of that sit three searches:
//!
//! * [`good_pair_search`] looks for a set whose limit value relates to the
//!   limit value of the set minus its minimum — the good-pair condition for
//!   a quasi-order;
//! * [`cofinite_homogeneous_search`] looks for a set on which the limit is
//!   constant across all in-window "cofinite" subsets, which at this scale
//!   is exactly constancy of the table on the fixed-size subsets;
//! * [`three_antichain_good_pair`] extracts a good pair for the three-element
//!   antichain from a two-colour homogeneous set, a stable root, and a parity
//!   scan over adjacent drops.
//!
//! The two-colour homogeneity step cannot be iterated to handle a third
//! colour directly: homogeneity only controls subsets that keep all but
//! finitely many elements of the set it produces, which is too weak to feed
//! a second round. The three-colour extraction therefore splits the colours
//! into "top colour" versus "the rest" and works around the obstruction with
//! the stable-root parity argument. Witness searches are deterministic and
//! return lexicographically least witnesses; a reported absence is always
//! window-relative and carries no meaning beyond the truncation.

mod array;
mod finset;
mod quasi;
mod search;

pub use array::{ArrayError, StabilizingArray};
pub use finset::FinSet;
pub use quasi::QuasiOrder;
pub use search::{
    cofinite_homogeneous_search, find_stable_root, good_pair_search, three_antichain_good_pair,
    verify_homogeneous,
};
