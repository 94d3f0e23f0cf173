//! Jeu-de-taquin operators on column-strict and row-strict tableaux.
//!
//! Promotion replaces every largest entry by a dot, slides the dots to the
//! north-west corner, increments the remaining entries and fills the dots
//! with 1. Demotion runs the same slides backwards. Evacuation rotates the
//! tableau inside its bounding box, complements entries and rectifies.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::tabcore::{Cell, Composition, Partition, Tableau};

/// Cells visited by a dot during one slide, starting where it began.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideTrace {
    pub path: Vec<Cell>,
}

type Grid = Vec<Vec<Option<usize>>>;

fn check_bound(t: &Tableau, k: usize) -> Result<()> {
    if t.max_entry() > k {
        return domain(format!("entry {} exceeds bound {k}", t.max_entry()));
    }
    Ok(())
}

fn check_column_strict(t: &Tableau) -> Result<()> {
    if !t.is_column_strict() {
        return domain("expected a column-strict tableau");
    }
    Ok(())
}

fn at(grid: &Grid, r: usize, c: usize) -> Option<Option<usize>> {
    grid.get(r)?.get(c).copied()
}

/// Promotion with the path of every dot slide.
pub fn promote_traced(t: &Tableau, k: usize) -> Result<(Tableau, Vec<SlideTrace>)> {
    check_column_strict(t)?;
    check_bound(t, k)?;
    let mut grid: Grid = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&x| (x != k).then_some(x)).collect())
        .collect();
    let mut traces = Vec::new();
    loop {
        // A dot is unsettled while a number sits directly north or west of it.
        let mut pick: Option<(usize, usize)> = None;
        for (r, row) in grid.iter().enumerate() {
            for (c, slot) in row.iter().enumerate() {
                if slot.is_some() {
                    continue;
                }
                let north = r > 0 && grid[r - 1][c].is_some();
                let west = c > 0 && grid[r][c - 1].is_some();
                if (north || west) && pick.is_none_or(|(_, pc)| c < pc) {
                    pick = Some((r, c));
                }
            }
        }
        let Some((mut r, mut c)) = pick else { break };
        let mut path = vec![Cell::new(r + 1, c + 1)];
        loop {
            let north = if r > 0 { at(&grid, r - 1, c).flatten() } else { None };
            let west = if c > 0 { at(&grid, r, c - 1).flatten() } else { None };
            let (nr, nc) = match (north, west) {
                (None, None) => break,
                (Some(_), None) => (r - 1, c),
                (None, Some(_)) => (r, c - 1),
                (Some(n), Some(w)) => {
                    if n >= w {
                        (r - 1, c)
                    } else {
                        (r, c - 1)
                    }
                }
            };
            grid[r][c] = grid[nr][nc];
            grid[nr][nc] = None;
            r = nr;
            c = nc;
            path.push(Cell::new(r + 1, c + 1));
        }
        traces.push(SlideTrace { path });
    }
    let rows = grid
        .into_iter()
        .map(|row| row.into_iter().map(|s| s.map_or(1, |x| x + 1)).collect())
        .collect();
    Ok((Tableau::from_rows(rows)?, traces))
}

/// Jeu-de-taquin promotion on CST(shape, k).
pub fn promote(t: &Tableau, k: usize) -> Result<Tableau> {
    Ok(promote_traced(t, k)?.0)
}

/// Inverse of [`promote`].
pub fn demote(t: &Tableau, k: usize) -> Result<Tableau> {
    check_column_strict(t)?;
    check_bound(t, k)?;
    let mut grid: Grid = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&x| (x != 1).then(|| x - 1)).collect())
        .collect();
    loop {
        let mut pick: Option<(usize, usize)> = None;
        for (r, row) in grid.iter().enumerate() {
            for (c, slot) in row.iter().enumerate() {
                if slot.is_some() {
                    continue;
                }
                let south = at(&grid, r + 1, c).flatten().is_some();
                let east = at(&grid, r, c + 1).flatten().is_some();
                if (south || east) && pick.is_none_or(|(_, pc)| c > pc) {
                    pick = Some((r, c));
                }
            }
        }
        let Some((mut r, mut c)) = pick else { break };
        loop {
            let south = at(&grid, r + 1, c).flatten();
            let east = at(&grid, r, c + 1).flatten();
            let (nr, nc) = match (south, east) {
                (None, None) => break,
                (Some(_), None) => (r + 1, c),
                (None, Some(_)) => (r, c + 1),
                (Some(s), Some(e)) => {
                    if s <= e {
                        (r + 1, c)
                    } else {
                        (r, c + 1)
                    }
                }
            };
            grid[r][c] = grid[nr][nc];
            grid[nr][nc] = None;
            r = nr;
            c = nc;
        }
    }
    let rows = grid
        .into_iter()
        .map(|row| row.into_iter().map(|s| s.unwrap_or(k)).collect())
        .collect();
    Tableau::from_rows(rows)
}

/// `promote` applied `times` times.
pub fn promote_power(t: &Tableau, k: usize, times: usize) -> Result<Tableau> {
    let mut cur = t.clone();
    for _ in 0..times {
        cur = promote(&cur, k)?;
    }
    Ok(cur)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Outside,
    Empty,
    Num(usize),
}

/// Evacuation on CST(shape, k).
pub fn evacuate(t: &Tableau, k: usize) -> Result<Tableau> {
    check_column_strict(t)?;
    check_bound(t, k)?;
    let shape = t.shape();
    let height = shape.len();
    let width = shape.row_len(1);
    // Rotate by 180 degrees inside the bounding box and complement.
    let mut grid = vec![vec![Slot::Empty; width]; height];
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            grid[height - 1 - r][width - 1 - c] = Slot::Num(k + 1 - x);
        }
    }
    // Rectify: slide each inner corner hole out to the south-east.
    loop {
        let mut hole = None;
        'find: for r in (0..height).rev() {
            for c in (0..width).rev() {
                if grid[r][c] != Slot::Empty {
                    continue;
                }
                let south_free = r + 1 >= height || grid[r + 1][c] != Slot::Empty;
                let east_free = c + 1 >= width || grid[r][c + 1] != Slot::Empty;
                if south_free && east_free {
                    hole = Some((r, c));
                    break 'find;
                }
            }
        }
        let Some((mut r, mut c)) = hole else { break };
        loop {
            let south = match grid.get(r + 1).map(|row| row[c]) {
                Some(Slot::Num(x)) => Some(x),
                _ => None,
            };
            let east = match grid[r].get(c + 1) {
                Some(Slot::Num(x)) => Some(*x),
                _ => None,
            };
            let (nr, nc) = match (south, east) {
                (None, None) => break,
                (Some(_), None) => (r + 1, c),
                (None, Some(_)) => (r, c + 1),
                (Some(s), Some(e)) => {
                    if s <= e {
                        (r + 1, c)
                    } else {
                        (r, c + 1)
                    }
                }
            };
            grid[r][c] = grid[nr][nc];
            r = nr;
            c = nc;
        }
        grid[r][c] = Slot::Outside;
    }
    let rows: Vec<Vec<usize>> = grid
        .into_iter()
        .map(|row| {
            row.into_iter()
                .filter_map(|s| match s {
                    Slot::Num(x) => Some(x),
                    _ => None,
                })
                .collect()
        })
        .collect();
    let out = Tableau::from_rows(rows)?;
    debug_assert_eq!(out.shape(), shape);
    Ok(out)
}

/// Standardizes a row-strict tableau: the copies of each value, taken top
/// to bottom, become consecutive integers.
pub fn standardize(p: &Tableau) -> Result<Tableau> {
    if !p.is_row_strict() {
        return domain("standardization expects a row-strict tableau");
    }
    let mut cells: Vec<(usize, usize, usize)> = Vec::with_capacity(p.size());
    for (r, row) in p.rows().iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            cells.push((x, r, c));
        }
    }
    cells.sort_unstable();
    let mut rows: Vec<Vec<usize>> = p.rows().iter().map(|r| vec![0; r.len()]).collect();
    for (i, &(_, r, c)) in cells.iter().enumerate() {
        rows[r][c] = i + 1;
    }
    Tableau::from_rows(rows)
}

/// Whether every block of consecutive integers singled out by `alpha` runs
/// down a vertical strip of `t`.
pub fn is_semistandardizable(t: &Tableau, alpha: &Composition) -> Result<bool> {
    if alpha.size() != t.size() {
        return domain(format!("composition {alpha} does not match size {}", t.size()));
    }
    let descents = t.descent_set()?;
    let mut start = 0;
    for &part in alpha.parts() {
        for i in start + 1..start + part {
            if !descents.contains(&i) {
                return Ok(false);
            }
        }
        start += part;
    }
    Ok(true)
}

/// Collapses each block of `alpha` to a single label, when possible.
pub fn semistandardize(t: &Tableau, alpha: &Composition) -> Result<Option<Tableau>> {
    if !is_semistandardizable(t, alpha)? {
        return Ok(None);
    }
    let blocks = alpha.block_map();
    Ok(Some(t.map_entries(|x| blocks[x - 1])))
}

/// Promotion on row-strict tableaux, by transposition.
pub fn promote_rst(u: &Tableau, k: usize) -> Result<Tableau> {
    if !u.is_row_strict() {
        return domain("expected a row-strict tableau");
    }
    Ok(promote(&u.transpose(), k)?.transpose())
}

/// Order of promotion acting on `set`, which must be closed under it.
pub fn promotion_order(set: &[Tableau], k: usize) -> Result<usize> {
    use num_integer::Integer;
    let mut order = 1usize;
    let mut seen = std::collections::HashSet::new();
    for t in set {
        if seen.contains(t) {
            continue;
        }
        let mut len = 0;
        let mut cur = t.clone();
        loop {
            seen.insert(cur.clone());
            cur = promote(&cur, k)?;
            len += 1;
            if &cur == t {
                break;
            }
        }
        order = order.lcm(&len);
    }
    Ok(order)
}

/// Shape check shared by callers that only accept rectangles.
pub fn require_rectangle(shape: &Partition) -> Result<(usize, usize)> {
    match shape.rectangle_dims() {
        Some(d) => Ok(d),
        None => domain(format!("{shape} is not a rectangle")),
    }
}
