//! Listers reaching the optimal `Θ(m^{3/2})` bound on sparse graphs.
//!
//! | lister                         | needs matrix | auxiliary space      |
//! |--------------------------------|--------------|----------------------|
//! | [`tree_listing`]               | yes (mutated)| `Θ(n)`               |
//! | [`ayz_listing`]                | yes          | `Θ(m)` at `K ~ √m`   |
//! | [`forward`]                    | no           | `Θ(m)`               |
//! | [`compact_forward_in_place`]   | no           | `Θ(n)`               |
//! | [`new_listing`]                | no           | `Θ(n)`               |
//! | [`new_listing_constant_space`] | no           | `Θ(1)`               |

mod ayz;
mod compact;
mod edge_scan;
mod forward;
mod new_listing;
mod tree;

pub use ayz::{ayz_listing, AyzListing};
pub use compact::{compact_forward, compact_forward_in_place, CompactForward};
pub use forward::{forward, Forward};
pub use new_listing::{
    new_listing, new_listing_constant_space, new_vertex_listing, NewListing, NewVertexListing,
};
pub use tree::{tree_listing, TreeListing};

/// `⌈√m⌉`, the default degree threshold of the split listers.
pub fn default_threshold(m: usize) -> usize {
    ceil_sqrt(m)
}

pub(crate) fn ceil_sqrt(x: usize) -> usize {
    let mut r = (x as f64).sqrt() as usize;
    while r * r > x {
        r -= 1;
    }
    while r * r < x {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_sqrt_is_exact() {
        let expect = [(0, 0), (1, 1), (2, 2), (4, 2), (5, 3), (99, 10), (100, 10), (101, 11)];
        for (x, r) in expect {
            assert_eq!(ceil_sqrt(x), r, "x = {x}");
        }
        let big = (1usize << 52) + 1;
        assert_eq!(ceil_sqrt(big), (1 << 26) + 1);
    }
}
