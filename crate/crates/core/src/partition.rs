use crate::error::{Error, Result};
use crate::perm::Perm;

/// A set partition of `0..n`. Cells are sorted internally and ordered by
/// their least point, so two equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    pub fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> Result<Partition> {
        let mut cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        if cells.iter().any(Vec::is_empty) {
            return Err(Error::InvalidGraph("partition has an empty cell".into()));
        }
        cells.sort_unstable_by_key(|c| c[0]);
        let mut cell_of = vec![usize::MAX; n];
        for (i, cell) in cells.iter().enumerate() {
            for &x in cell {
                if x >= n || cell_of[x] != usize::MAX {
                    return Err(Error::InvalidGraph(format!(
                        "point {x} is out of range or lies in two cells"
                    )));
                }
                cell_of[x] = i;
            }
        }
        if cell_of.contains(&usize::MAX) {
            return Err(Error::InvalidGraph("cells do not cover every point".into()));
        }
        Ok(Partition { cells, cell_of })
    }

    /// Builds a partition from a labelling `point -> key`, one cell per key.
    pub fn from_labels<K: Eq + std::hash::Hash>(labels: impl IntoIterator<Item = K>) -> Partition {
        let mut ids = std::collections::HashMap::new();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for (x, key) in labels.into_iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(key).or_insert(next);
            if id == cells.len() {
                cells.push(Vec::new());
            }
            cells[id].push(x);
        }
        let n = cells.iter().map(Vec::len).sum();
        Partition::from_cells(n, cells).expect("labels always give a partition")
    }

    pub fn discrete(n: usize) -> Partition {
        Partition {
            cells: (0..n).map(|x| vec![x]).collect(),
            cell_of: (0..n).collect(),
        }
    }

    pub fn points(&self) -> usize {
        self.cell_of.len()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &[usize] {
        &self.cells[i]
    }

    pub fn cell_of(&self, x: usize) -> usize {
        self.cell_of[x]
    }

    pub fn is_uniform(&self) -> bool {
        self.cells.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// True if every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.cells
            .iter()
            .all(|c| c.iter().all(|&x| coarser.cell_of(x) == coarser.cell_of(c[0])))
    }

    /// The permutation of cells induced by `g`, or `NotInvariant` when `g`
    /// splits some cell across two cells.
    pub fn induced(&self, g: &Perm) -> Result<Perm> {
        if g.degree() != self.points() {
            return Err(Error::DegreeMismatch { expected: self.points(), found: g.degree() });
        }
        let mut images = Vec::with_capacity(self.len());
        for cell in &self.cells {
            let target = self.cell_of(g.image(cell[0]));
            if cell.iter().any(|&x| self.cell_of(g.image(x)) != target) {
                return Err(Error::NotInvariant);
            }
            images.push(target as u32);
        }
        Perm::from_images(images).map_err(|_| Error::NotInvariant)
    }

    pub fn is_invariant_under(&self, g: &Perm) -> bool {
        self.induced(g).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_cell_order() {
        let p = Partition::from_cells(5, vec![vec![4, 2], vec![3, 1, 0]]).unwrap();
        assert_eq!(p.cells(), &[vec![0, 1, 3], vec![2, 4]]);
        assert_eq!(p.cell_of(4), 1);
        let q = Partition::from_labels([0, 0, 1, 0, 1]);
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_overlap_and_gaps() {
        assert!(Partition::from_cells(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_cells(3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn induced_action() {
        let p = Partition::from_labels([0, 0, 1, 1]);
        let swap = Perm::from_images(vec![2, 3, 0, 1]).unwrap();
        assert_eq!(p.induced(&swap).unwrap().images(), &[1, 0]);
        let bad = Perm::from_images(vec![0, 2, 1, 3]).unwrap();
        assert_eq!(p.induced(&bad), Err(Error::NotInvariant));
        assert!(Partition::discrete(4).refines(&p));
        assert!(!p.refines(&Partition::discrete(4)));
    }
}
