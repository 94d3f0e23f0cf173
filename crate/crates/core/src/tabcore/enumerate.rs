use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::partition::{Composition, Partition};
use super::tableau::Tableau;
use crate::error::{domain, Error, Result};

/// Default ceiling on the number of objects any enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// `n! / prod(hooks)`.
pub fn syt_count(shape: &Partition) -> BigUint {
    let n = shape.size();
    let mut num = BigUint::one();
    for i in 2..=n {
        num *= BigUint::from(i);
    }
    let mut den = BigUint::one();
    for h in shape.hook_lengths() {
        den *= BigUint::from(h);
    }
    num / den
}

fn resource(what: &str, needed: u64, cap: usize) -> Error {
    Error::Resource {
        what: what.to_string(),
        needed,
        cap: cap as u64,
    }
}

/// All standard tableaux of `shape`, sorted by row word.
pub fn enumerate_syt(shape: &Partition, cap: usize) -> Result<Vec<Tableau>> {
    let count = syt_count(shape);
    if count > BigUint::from(cap) {
        return Err(resource(
            &format!("SYT{shape}"),
            count.to_u64().unwrap_or(u64::MAX),
            cap,
        ));
    }
    // Place the largest entry in each corner in turn.
    fn rec(shape: &Partition, n: usize, grid: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if n == 0 {
            out.push(Tableau::from_rows_unchecked(grid.clone()));
            return;
        }
        for corner in shape.corners() {
            grid[corner.row - 1][corner.col - 1] = n;
            rec(&shape.without_cell(corner.row), n - 1, grid, out);
        }
    }
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    rec(shape, shape.size(), &mut grid, &mut out);
    out.sort_by_cached_key(Tableau::row_word);
    Ok(out)
}

/// Column-strict tableaux of `shape` with entries at most `k`, optionally of
/// fixed content. Produced directly in row-word lexicographic order.
pub fn enumerate_cst(
    shape: &Partition,
    k: usize,
    content: Option<&Composition>,
    cap: usize,
) -> Result<Vec<Tableau>> {
    let mut remaining: Option<Vec<usize>> = None;
    if let Some(alpha) = content {
        if alpha.len() != k {
            return domain(format!("content {alpha} must have {k} parts"));
        }
        if alpha.size() != shape.size() {
            return domain(format!("content {alpha} does not have size {}", shape.size()));
        }
        remaining = Some(alpha.parts().to_vec());
    }
    let mut out = Vec::new();
    if shape.len() > k {
        return Ok(out);
    }
    let cells: Vec<(usize, usize)> = shape.cells().map(|c| (c.row - 1, c.col - 1)).collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        k: usize,
        cap: usize,
        shape: &'a Partition,
    }
    fn rec(
        ctx: &Ctx,
        idx: usize,
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Option<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) -> Result<()> {
        if idx == ctx.cells.len() {
            if out.len() >= ctx.cap {
                return Err(resource(&format!("CST{}", ctx.shape), out.len() as u64 + 1, ctx.cap));
            }
            out.push(Tableau::from_rows_unchecked(grid.clone()));
            return Ok(());
        }
        let (r, c) = ctx.cells[idx];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        // Entries below this cell in its column still need room.
        let below = ctx.shape.col_len(c + 1) - r - 1;
        let hi = ctx.k.saturating_sub(below);
        for v in left.max(above)..=hi {
            if let Some(rem) = remaining.as_mut() {
                if rem[v - 1] == 0 {
                    continue;
                }
                rem[v - 1] -= 1;
            }
            grid[r][c] = v;
            let res = rec(ctx, idx + 1, grid, remaining, out);
            if let Some(rem) = remaining.as_mut() {
                rem[v - 1] += 1;
            }
            res?;
        }
        Ok(())
    }
    let ctx = Ctx {
        cells: &cells,
        k,
        cap,
        shape,
    };
    rec(&ctx, 0, &mut grid, &mut remaining, &mut out)?;
    Ok(out)
}

/// Row-strict tableaux of `shape` with entries at most `k`, optionally of
/// fixed content, sorted by row word.
pub fn enumerate_rst(
    shape: &Partition,
    k: usize,
    content: Option<&Composition>,
    cap: usize,
) -> Result<Vec<Tableau>> {
    let mut out: Vec<Tableau> = enumerate_cst(&shape.conjugate(), k, content, cap)?
        .iter()
        .map(Tableau::transpose)
        .collect();
    out.sort_by_cached_key(Tableau::row_word);
    Ok(out)
}

/// Number of column-strict tableaux of `shape` and content `content`.
pub fn kostka_number(shape: &Partition, content: &Composition, cap: usize) -> Result<usize> {
    Ok(enumerate_cst(shape, content.len(), Some(content), cap)?.len())
}
