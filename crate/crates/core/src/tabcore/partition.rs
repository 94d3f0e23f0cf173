use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A box of a Ferrers diagram, 1-indexed, rows counted downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{parts:?} is not weakly decreasing"));
        }
        if parts.contains(&0) {
            return domain(format!("{parts:?} has an interior zero part"));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: v }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            return Partition::default();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-indexed), zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Length of column `c` (1-indexed).
    pub fn col_len(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Whether `other` fits inside `self`.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width).map(|c| self.col_len(c)).collect(),
        }
    }

    /// `(rows, cols)` when the shape is a nonempty rectangle.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        let first = *self.parts.first()?;
        self.parts.iter().all(|&p| p == first).then_some((self.len(), first))
    }

    pub fn is_rectangle(&self) -> bool {
        self.rectangle_dims().is_some()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return domain(format!("cell {cell:?} is outside {self}"));
        }
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        Ok(arm + leg + 1)
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        self.cells().map(|c| self.hook_length(c).expect("cell in shape")).collect()
    }

    /// Corner cells, whose removal leaves a partition.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    pub fn without_cell(&self, r: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        Partition::new(parts).expect("removing a corner keeps a partition")
    }

    /// Dominance order on partitions of the same size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return domain("dominance compares partitions of one size");
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.row_len(i);
            b += other.row_len(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing"));
                return;
            }
            for p in 0..=outer[i].min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Nonempty rectangles with at most `max_size` cells.
    pub fn rectangles_up_to(max_size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for rows in 1..=max_size {
            for cols in 1..=max_size / rows {
                out.push(Partition::rectangle(rows, cols));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses "3,3,1", "3 3 1", "2^3" or mixed forms like "4^2,3,1".
/// A token `b^a` stands for `a` parts equal to `b`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let bad = || Error::Domain(format!("cannot parse shape token {tok:?}"));
            match tok.split_once('^') {
                Some((b, a)) => {
                    let b: usize = b.trim().parse().map_err(|_| bad())?;
                    let a: usize = a.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(b, a));
                }
                None => parts.push(tok.parse().map_err(|_| bad())?),
            }
        }
        Partition::new(parts)
    }
}

/// Finite sequence of nonnegative parts; zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    /// `n` ones.
    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cyclic shift sending the last part to the front:
    /// `(a_1, ..., a_k) -> (a_k, a_1, ..., a_{k-1})`.
    /// This is how promotion moves contents.
    pub fn rotate(&self) -> Composition {
        let mut parts = self.parts.clone();
        if !parts.is_empty() {
            parts.rotate_right(1);
        }
        Composition { parts }
    }

    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    /// Sorted nonzero parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(&self.parts)
    }

    /// Block index of each of `1..=n`: value `i` for the `parts[i-1]`
    /// consecutive integers of block `i`.
    pub fn block_map(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i + 1, p))
            .collect()
    }

    /// Whether `parts[i] == parts[i + d]` for all valid `i`.
    pub fn has_period(&self, d: usize) -> bool {
        d > 0 && (0..self.parts.len().saturating_sub(d)).all(|i| self.parts[i] == self.parts[i + d])
    }

    /// All compositions of `n` with exactly `k` (possibly zero) parts,
    /// in lexicographic order.
    pub fn all_weak(n: usize, k: usize) -> Vec<Composition> {
        fn rec(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if slots == 1 {
                cur.push(rem);
                out.push(Composition { parts: cur.clone() });
                cur.pop();
                return;
            }
            for p in 0..=rem {
                cur.push(p);
                rec(rem - p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k == 0 {
            if n == 0 {
                out.push(Composition::default());
            }
            return out;
        }
        rec(n, k, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition { parts }
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let bad = || Error::Domain(format!("cannot parse content token {tok:?}"));
            match tok.split_once('^') {
                Some((b, a)) => {
                    let b: usize = b.trim().parse().map_err(|_| bad())?;
                    let a: usize = a.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(b, a));
                }
                None => parts.push(tok.parse().map_err(|_| bad())?),
            }
        }
        Ok(Composition { parts })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
