use crate::graph::VertexId;

/// Common elements of two strictly increasing slices, by linear merge.
#[derive(Debug, Clone)]
pub(crate) struct Intersection<'a> {
    left: &'a [VertexId],
    right: &'a [VertexId],
}

impl<'a> Intersection<'a> {
    pub(crate) fn new(left: &'a [VertexId], right: &'a [VertexId]) -> Self {
        Intersection { left, right }
    }
}

impl Iterator for Intersection<'_> {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        while let (Some(&x), Some(&y)) = (self.left.first(), self.right.first()) {
            if x < y {
                self.left = &self.left[1..];
            } else if x > y {
                self.right = &self.right[1..];
            } else {
                self.left = &self.left[1..];
                self.right = &self.right[1..];
                return Some(x);
            }
        }
        None
    }
}

/// Suffix of a sorted slice holding the elements strictly greater than `bound`.
#[inline]
pub(crate) fn above(slice: &[VertexId], bound: VertexId) -> &[VertexId] {
    &slice[slice.partition_point(|&x| x <= bound)..]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersects_sorted_lists() {
        let v: Vec<_> = Intersection::new(&[1, 3, 5, 7, 9], &[0, 3, 4, 9, 10]).collect();
        assert_eq!(v, vec![3, 9]);
        assert_eq!(Intersection::new(&[], &[1, 2]).count(), 0);
    }

    #[test]
    fn bounds() {
        assert_eq!(above(&[1, 3, 5], 3), &[5]);
    }
}
