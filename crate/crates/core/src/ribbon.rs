//! Ribbons (border strips).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::SkewShape;
use crate::qlaurent::HalfInt;

/// A connected skew diagram containing no 2x2 square.
///
/// Cells are `(row, col)` in English notation, row 0 on top. The head is the
/// rightmost cell of the top row; it plays the role of the root when
/// diagrams are drawn bottom-up (French notation), and its column is the
/// root position used by the ribbon-sliding picture of the affine Weyl
/// action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ribbon {
    cells: BTreeSet<(usize, usize)>,
}

impl Ribbon {
    pub fn from_cells<I: IntoIterator<Item = (usize, usize)>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::InvalidParameter(
                "a ribbon has at least one cell".into(),
            ));
        }
        // A ribbon is a lattice path from its tail (bottom-left) to its head
        // (top-right) moving up or right one cell at a time.
        let &tail = cells
            .iter()
            .max_by_key(|&&(i, j)| (i, std::cmp::Reverse(j)))
            .unwrap();
        let mut cur = tail;
        let mut seen = 1;
        loop {
            let right = (cur.0, cur.1 + 1);
            let up = cur.0.checked_sub(1).map(|i| (i, cur.1));
            let has_right = cells.contains(&right);
            let has_up = up.is_some_and(|u| cells.contains(&u));
            cur = match (has_right, has_up) {
                (true, false) => right,
                (false, true) => up.unwrap(),
                (false, false) => break,
                (true, true) => {
                    return Err(Error::InvalidParameter(
                        "cells contain a 2x2 square or a fork".into(),
                    ))
                }
            };
            seen += 1;
        }
        if seen != cells.len() {
            return Err(Error::InvalidParameter("cells do not form a ribbon".into()));
        }
        Ok(Ribbon { cells })
    }

    pub fn from_skew(skew: &SkewShape) -> Result<Self> {
        Self::from_cells(skew.cells())
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cells(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.cells.iter()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.contains(&cell)
    }

    /// Number of rows the ribbon occupies.
    pub fn height(&self) -> usize {
        let top = self.cells.iter().map(|c| c.0).min().unwrap();
        let bottom = self.cells.iter().map(|c| c.0).max().unwrap();
        bottom - top + 1
    }

    /// `(height - 1) / 2`.
    pub fn spin(&self) -> HalfInt {
        HalfInt::from_twice(self.height() as i64 - 1)
    }

    /// Rightmost cell of the top row.
    pub fn head(&self) -> (usize, usize) {
        let top = self.cells.iter().map(|c| c.0).min().unwrap();
        *self.cells.iter().filter(|c| c.0 == top).max().unwrap()
    }

    /// Leftmost cell of the bottom row.
    pub fn tail(&self) -> (usize, usize) {
        *self
            .cells
            .iter()
            .max_by_key(|&&(i, j)| (i, std::cmp::Reverse(j)))
            .unwrap()
    }

    /// Column of the head.
    pub fn root_position(&self) -> usize {
        self.head().1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn shapes() {
        let column = Ribbon::from_skew(&SkewShape::straight(partition![1, 1, 1])).unwrap();
        assert_eq!(column.height(), 3);
        assert_eq!(column.spin(), HalfInt::from_int(1));
        assert_eq!(column.head(), (0, 0));
        let row = Ribbon::from_skew(&SkewShape::straight(partition![3])).unwrap();
        assert_eq!(row.spin(), HalfInt::ZERO);
        assert_eq!(row.root_position(), 2);
        // (3,3,1)/(2,1): cells (0,2),(1,1),(1,2),(2,0) is disconnected
        let skew = SkewShape::new(partition![3, 3, 1], partition![2, 1]).unwrap();
        assert!(Ribbon::from_skew(&skew).is_err());
        assert!(
            Ribbon::from_skew(&SkewShape::new(partition![3, 2, 2], partition![2, 1]).unwrap())
                .is_err()
        );
        let strip = SkewShape::new(partition![3, 3, 2], partition![2, 1]).unwrap();
        let r = Ribbon::from_skew(&strip).unwrap();
        assert_eq!(
            (r.len(), r.height(), r.head(), r.tail()),
            (5, 3, (0, 2), (2, 0))
        );
        assert!(Ribbon::from_skew(&SkewShape::straight(partition![2, 2])).is_err());
    }
}
