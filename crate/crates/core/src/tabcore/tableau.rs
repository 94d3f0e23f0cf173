use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{Cell, Composition, Partition};
use crate::error::{domain, Error, Result};

/// A filling of a Ferrers diagram by positive integers, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::from_rows(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl Tableau {
    /// Builds a tableau; row lengths must weakly decrease and entries be positive.
    pub fn from_rows(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) || rows.iter().any(|r| r.is_empty()) {
            return domain("row lengths of a tableau must weakly decrease");
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return domain("tableau entries must be positive");
        }
        Ok(Tableau { rows })
    }

    /// Convenience constructor for literals in tests and examples.
    pub fn from_slices(rows: &[&[usize]]) -> Result<Self> {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entries in row-major order, top row first.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word_rows(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Number of occurrences of each of `1..=k`.
    pub fn content(&self, k: usize) -> Composition {
        let mut parts = vec![0; k];
        for &x in self.rows.iter().flatten() {
            if x <= k {
                parts[x - 1] += 1;
            }
        }
        Composition::new(parts)
    }

    pub fn is_column_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b))
    }

    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a <= b))
    }

    /// Column strict with every value `1..=n` used once.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<usize> = self.row_word();
        seen.sort_unstable();
        self.is_column_strict() && seen.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Tableau { rows }
    }

    /// Cell holding each value of a standard tableau, indexed by value.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(0, 0); self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x < pos.len() {
                    pos[x] = Cell::new(r + 1, c + 1);
                }
            }
        }
        pos
    }

    fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            domain("operation needs a standard tableau")
        }
    }

    /// `i` such that `i + 1` lies strictly south and weakly west of `i`.
    pub fn descent_set(&self) -> Result<BTreeSet<usize>> {
        self.require_standard()?;
        let pos = self.positions();
        Ok((1..self.size())
            .filter(|&i| pos[i + 1].row > pos[i].row && pos[i + 1].col <= pos[i].col)
            .collect())
    }

    /// Descents together with the wrap-around membership of `n` for
    /// rectangular shapes: delete the 1, slide the hole to the south-east
    /// corner, and include `n` when it ends immediately north of the hole.
    pub fn extended_descent_set(&self) -> Result<BTreeSet<usize>> {
        self.require_standard()?;
        let (rows, cols) = match self.shape().rectangle_dims() {
            Some(d) => d,
            None => return domain("extended descents need a rectangular shape"),
        };
        let mut set = self.descent_set()?;
        let n = self.size();
        if n <= 1 {
            return Ok(set);
        }
        let mut grid = self.rows.clone();
        let (mut r, mut c) = (0, 0);
        loop {
            let south = (r + 1 < rows).then(|| grid[r + 1][c]);
            let east = (c + 1 < cols).then(|| grid[r][c + 1]);
            let (nr, nc) = match (south, east) {
                (None, None) => break,
                (Some(_), None) => (r + 1, c),
                (None, Some(_)) => (r, c + 1),
                (Some(s), Some(e)) if s < e => (r + 1, c),
                _ => (r, c + 1),
            };
            grid[r][c] = grid[nr][nc];
            r = nr;
            c = nc;
        }
        if rows >= 2 && grid[rows - 2][cols - 1] == n {
            set.insert(n);
        }
        Ok(set)
    }

    /// Replaces every entry `x` by `f(x)`.
    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Tableau {
        Tableau {
            rows: self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// Columns filled top to bottom, left to right.
pub fn css(shape: &Partition) -> Tableau {
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut next = 1;
    for c in 1..=shape.row_len(1) {
        for row in rows.iter_mut().take(shape.col_len(c)) {
            row.push(next);
            next += 1;
        }
    }
    Tableau::from_rows_unchecked(rows)
}

/// Row `i` filled with `i`; the unique tableau of minimal weight.
pub fn superstandard(shape: &Partition) -> Tableau {
    Tableau::from_rows_unchecked(
        shape.parts().iter().enumerate().map(|(i, &l)| vec![i + 1; l]).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::from_slices(rows).unwrap()
    }

    #[test]
    fn descent_example() {
        let x = t(&[&[1, 3, 5], &[2, 4, 7], &[6]]);
        assert_eq!(x.descent_set().unwrap(), BTreeSet::from([1, 3, 5]));
        assert!(t(&[&[1, 2, 3, 4]]).descent_set().unwrap().is_empty());
        let col = t(&[&[1], &[2], &[3], &[4]]);
        assert_eq!(col.descent_set().unwrap(), BTreeSet::from([1, 2, 3]));
        assert!(t(&[&[1, 1]]).descent_set().is_err());
    }

    #[test]
    fn extended_descent_examples() {
        let p = t(&[&[1, 2, 4, 9], &[3, 5, 8, 11], &[6, 7, 10, 12]]);
        assert_eq!(p.extended_descent_set().unwrap(), BTreeSet::from([2, 4, 5, 9, 11]));
        let jp = t(&[&[1, 2, 3, 5], &[4, 6, 9, 10], &[7, 8, 11, 12]]);
        assert_eq!(jp.extended_descent_set().unwrap(), BTreeSet::from([3, 5, 6, 10, 12]));
        assert!(t(&[&[1, 2, 3]]).extended_descent_set().unwrap().is_empty());
        assert_eq!(
            t(&[&[1], &[2], &[3]]).extended_descent_set().unwrap(),
            BTreeSet::from([1, 2, 3])
        );
        assert!(t(&[&[1, 2], &[3]]).extended_descent_set().is_err());
    }

    #[test]
    fn css_examples() {
        let shape = Partition::new(vec![3, 3, 2]).unwrap();
        assert_eq!(css(&shape), t(&[&[1, 4, 7], &[2, 5, 8], &[3, 6]]));
        assert_eq!(css(&Partition::new(vec![1, 1, 1]).unwrap()), t(&[&[1], &[2], &[3]]));
        assert_eq!(css(&Partition::rectangle(2, 2)), t(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn strictness_and_transpose() {
        let x = t(&[&[1, 1, 2], &[2, 3]]);
        assert!(x.is_column_strict());
        assert!(!x.is_row_strict());
        assert!(x.transpose().is_row_strict());
        assert_eq!(x.transpose().transpose(), x);
        assert_eq!(x.content(4).parts(), &[2, 2, 1, 0]);
        assert!(Tableau::from_slices(&[&[1], &[2, 3]]).is_err());
    }
}
