//! Ribbons, ribbon tableaux, cores and quotients.
//!
//! Partitions are manipulated through beta-numbers: with `L` parts, part `i`
//! (1-based) becomes the bead `lambda_i + L - i`, and removing an `m`-ribbon
//! moves one bead down by `m` onto an empty position.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::cyclo::{eval_at_root, CyclotomicElement};
use crate::error::{domain, Result};
use crate::qpoly::{cst_contents, kappa, kostka_foulkes, schur_evaluate, RingElement};
use crate::tabcore::{Cell, Composition, Partition};

/// A connected skew shape without 2x2 squares, carrying a label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ribbon {
    cells: Vec<Cell>,
    label: usize,
}

impl Ribbon {
    /// Validates connectivity and the no-square condition.
    pub fn new(mut cells: Vec<Cell>, label: usize) -> Result<Self> {
        cells.sort();
        cells.dedup();
        if cells.is_empty() {
            return domain("a ribbon needs at least one cell");
        }
        let set: HashSet<Cell> = cells.iter().copied().collect();
        let square = cells.iter().any(|c| {
            set.contains(&Cell::new(c.row + 1, c.col))
                && set.contains(&Cell::new(c.row, c.col + 1))
                && set.contains(&Cell::new(c.row + 1, c.col + 1))
        });
        if square {
            return domain("a ribbon contains no 2x2 square");
        }
        // Walk from the tail: each step goes west or south.
        let mut cur = Self::tail_of(&cells);
        let mut seen = 1;
        loop {
            let west = Cell::new(cur.row, cur.col.wrapping_sub(1));
            let south = Cell::new(cur.row + 1, cur.col);
            if cur.col > 1 && set.contains(&west) {
                cur = west;
            } else if set.contains(&south) {
                cur = south;
            } else {
                break;
            }
            seen += 1;
        }
        if seen != cells.len() {
            return domain("a ribbon must be edge-connected");
        }
        Ok(Ribbon { cells, label })
    }

    fn tail_of(cells: &[Cell]) -> Cell {
        let top = cells.iter().map(|c| c.row).min().expect("nonempty");
        *cells.iter().filter(|c| c.row == top).max_by_key(|c| c.col).expect("nonempty")
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Southwesternmost cell.
    pub fn head(&self) -> Cell {
        let bottom = self.cells.iter().map(|c| c.row).max().expect("nonempty");
        *self.cells.iter().filter(|c| c.row == bottom).min_by_key(|c| c.col).expect("nonempty")
    }

    /// Northeasternmost cell.
    pub fn tail(&self) -> Cell {
        Self::tail_of(&self.cells)
    }

    /// Number of rows minus one.
    pub fn height(&self) -> usize {
        self.head().row - self.tail().row
    }
}

/// A labelled tiling of `outer / inner` by ribbons of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonTiling {
    outer: Partition,
    inner: Partition,
    ribbons: Vec<Ribbon>,
}

impl RibbonTiling {
    pub fn new(outer: Partition, inner: Partition, mut ribbons: Vec<Ribbon>, m: usize) -> Result<Self> {
        if !outer.contains_partition(&inner) {
            return domain(format!("{inner} is not contained in {outer}"));
        }
        let mut covered: HashSet<Cell> = HashSet::new();
        for r in &ribbons {
            if r.len() != m {
                return domain(format!("ribbon of size {} in an {m}-ribbon tiling", r.len()));
            }
            for &c in r.cells() {
                if !outer.contains(c) || inner.contains(c) || !covered.insert(c) {
                    return domain("ribbons must partition the skew diagram");
                }
            }
        }
        if covered.len() != outer.size() - inner.size() {
            return domain("ribbons do not cover the skew diagram");
        }
        ribbons.sort();
        Ok(RibbonTiling { outer, inner, ribbons })
    }

    pub fn ribbons(&self) -> &[Ribbon] {
        &self.ribbons
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn total_height(&self) -> usize {
        self.ribbons.iter().map(Ribbon::height).sum()
    }

    pub fn sign(&self) -> i8 {
        if self.total_height().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of ribbons with each label `1..=labels`.
    pub fn content(&self, labels: usize) -> Composition {
        let mut parts = vec![0; labels];
        for r in &self.ribbons {
            if (1..=labels).contains(&r.label) {
                parts[r.label - 1] += 1;
            }
        }
        Composition::new(parts)
    }

    /// No head sits directly east of a larger label; no tail sits directly
    /// south of a label at least as large.
    pub fn is_column_strict(&self) -> bool {
        let mut label_at: HashMap<Cell, (usize, usize)> = HashMap::new();
        for (idx, r) in self.ribbons.iter().enumerate() {
            for &c in r.cells() {
                label_at.insert(c, (idx, r.label));
            }
        }
        self.ribbons.iter().enumerate().all(|(idx, r)| {
            let h = r.head();
            let t = r.tail();
            let west_ok = h.col == 1
                || label_at
                    .get(&Cell::new(h.row, h.col - 1))
                    .is_none_or(|&(_, l)| l <= r.label);
            let north_ok = t.row == 1
                || label_at
                    .get(&Cell::new(t.row - 1, t.col))
                    .is_none_or(|&(other, l)| other == idx || l < r.label);
            west_ok && north_ok
        })
    }
}

fn beta_numbers(shape: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| shape.row_len(i + 1) + len - 1 - i).collect()
}

fn from_beta(beads: &[usize]) -> Partition {
    let mut b = beads.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    Partition::from_unsorted(&b.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect::<Vec<_>>())
}

fn padded_len(shape: &Partition, m: usize) -> usize {
    shape.len().div_ceil(m) * m
}

/// The `m`-core.
pub fn m_core(shape: &Partition, m: usize) -> Result<Partition> {
    if m == 0 {
        return domain("core needs m >= 1");
    }
    let len = padded_len(shape, m);
    let beads = beta_numbers(shape, len);
    let mut out = Vec::with_capacity(len);
    for r in 0..m {
        let count = beads.iter().filter(|&&b| b % m == r).count();
        out.extend((0..count).map(|p| p * m + r));
    }
    Ok(from_beta(&out))
}

/// The `m`-quotient; runner `r` holds beads congruent to `r` modulo `m`, with
/// the bead count padded to a multiple of `m`.
pub fn m_quotient(shape: &Partition, m: usize) -> Result<Vec<Partition>> {
    if m == 0 {
        return domain("quotient needs m >= 1");
    }
    let len = padded_len(shape, m);
    let beads = beta_numbers(shape, len);
    Ok((0..m)
        .map(|r| {
            let runner: Vec<usize> = beads.iter().filter(|&&b| b % m == r).map(|&b| b / m).collect();
            from_beta(&runner)
        })
        .collect())
}

/// Every way to remove one `m`-ribbon from the rim of `shape`.
pub fn removable_ribbons(shape: &Partition, m: usize) -> Vec<(Partition, Ribbon)> {
    let len = shape.len();
    let beads = beta_numbers(shape, len);
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    for (i, &b) in beads.iter().enumerate() {
        if b < m || beads.contains(&(b - m)) {
            continue;
        }
        let mut next = beads.clone();
        next[i] = b - m;
        let inner = from_beta(&next);
        let cells: Vec<Cell> = shape.cells().filter(|c| !inner.contains(*c)).collect();
        let ribbon = Ribbon::new(cells, 0).expect("rim hooks are ribbons");
        out.push((inner, ribbon));
    }
    out
}

/// Inner shapes `nu` with `shape / nu` a horizontal strip of `count`
/// `m`-ribbons, together with the unique admissible tiling.
pub fn horizontal_ribbon_strips(shape: &Partition, m: usize, count: usize) -> Vec<(Partition, Vec<Ribbon>)> {
    let mut found: HashMap<Partition, Vec<Ribbon>> = HashMap::new();
    let mut seen: HashSet<(Partition, Vec<Ribbon>)> = HashSet::new();
    fn rec(
        cur: &Partition,
        m: usize,
        left: usize,
        removed: &mut Vec<Ribbon>,
        strip: &mut HashSet<Cell>,
        seen: &mut HashSet<(Partition, Vec<Ribbon>)>,
        found: &mut HashMap<Partition, Vec<Ribbon>>,
    ) {
        let mut key = removed.clone();
        key.sort();
        if !seen.insert((cur.clone(), key.clone())) {
            return;
        }
        if left == 0 {
            found.entry(cur.clone()).or_insert(key);
            return;
        }
        for (inner, ribbon) in removable_ribbons(cur, m) {
            let t = ribbon.tail();
            if t.row > 1 && strip.contains(&Cell::new(t.row - 1, t.col)) {
                continue;
            }
            let covers_earlier = removed.iter().any(|r| {
                let rt = r.tail();
                rt.row > 1 && ribbon.cells().contains(&Cell::new(rt.row - 1, rt.col))
            });
            if covers_earlier {
                continue;
            }
            strip.extend(ribbon.cells().iter().copied());
            removed.push(ribbon);
            rec(&inner, m, left - 1, removed, strip, seen, found);
            let ribbon = removed.pop().expect("pushed above");
            for c in ribbon.cells() {
                strip.remove(c);
            }
        }
    }
    rec(shape, m, count, &mut Vec::new(), &mut HashSet::new(), &mut seen, &mut found);
    let mut out: Vec<(Partition, Vec<Ribbon>)> = found.into_iter().collect();
    out.sort();
    out
}

/// Number of column-strict `m`-ribbon tableaux of straight shape `shape`
/// with content `content`.
pub fn count_ribbon_cst(shape: &Partition, m: usize, content: &Composition) -> Result<u64> {
    if m == 0 {
        return domain("ribbon size must be positive");
    }
    if shape.size() != m * content.size() {
        return Ok(0);
    }
    let mut memo: HashMap<(Partition, usize), u64> = HashMap::new();
    fn rec(shape: &Partition, m: usize, parts: &[usize], memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
        let Some((&last, rest)) = parts.split_last() else {
            return u64::from(shape.size() == 0);
        };
        let key = (shape.clone(), parts.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let total = horizontal_ribbon_strips(shape, m, last)
            .iter()
            .map(|(inner, _)| rec(inner, m, rest, memo))
            .sum();
        memo.insert(key, total);
        total
    }
    Ok(rec(shape, m, content.parts(), &mut memo))
}

/// All column-strict `m`-ribbon tableaux of `shape` with content `content`,
/// built strip by strip.
pub fn enumerate_ribbon_cst(shape: &Partition, m: usize, content: &Composition) -> Result<Vec<RibbonTiling>> {
    if m == 0 {
        return domain("ribbon size must be positive");
    }
    let mut out = Vec::new();
    if shape.size() != m * content.size() {
        return Ok(out);
    }
    fn rec(shape: &Partition, m: usize, parts: &[usize], acc: &mut Vec<Ribbon>, out: &mut Vec<Vec<Ribbon>>) {
        let Some((&last, rest)) = parts.split_last() else {
            if shape.size() == 0 {
                out.push(acc.clone());
            }
            return;
        };
        for (inner, strip) in horizontal_ribbon_strips(shape, m, last) {
            let base = acc.len();
            acc.extend(strip.into_iter().map(|r| Ribbon { label: parts.len(), ..r }));
            rec(&inner, m, rest, acc, out);
            acc.truncate(base);
        }
    }
    let mut raw = Vec::new();
    rec(shape, m, content.parts(), &mut Vec::new(), &mut raw);
    for ribbons in raw {
        out.push(RibbonTiling::new(shape.clone(), Partition::default(), ribbons, m)?);
    }
    Ok(out)
}

/// `(-1)^(total height)` of any `m`-ribbon tiling of `outer / inner`, or 0
/// when none exists.
pub fn spin_sign(outer: &Partition, inner: &Partition, m: usize) -> i8 {
    if m == 0 || !outer.contains_partition(inner) || !(outer.size() - inner.size()).is_multiple_of(m) {
        return 0;
    }
    let mut dead: HashSet<Partition> = HashSet::new();
    fn rec(cur: &Partition, inner: &Partition, m: usize, dead: &mut HashSet<Partition>) -> Option<usize> {
        if cur == inner {
            return Some(0);
        }
        if dead.contains(cur) {
            return None;
        }
        for (next, ribbon) in removable_ribbons(cur, m) {
            if !next.contains_partition(inner) {
                continue;
            }
            if let Some(h) = rec(&next, inner, m, dead) {
                return Some(h + ribbon.height());
            }
        }
        dead.insert(cur.clone());
        None
    }
    match rec(outer, inner, m, &mut dead) {
        None => 0,
        Some(h) if h % 2 == 0 => 1,
        Some(_) => -1,
    }
}

/// Content of length `len` sharing part multiplicities with `alpha`
/// divided by `d`, or `None` when some multiplicity is not divisible.
pub fn reduced_content(alpha: &Composition, d: usize) -> Option<Composition> {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in alpha.parts().iter().filter(|&&p| p > 0) {
        *mult.entry(p).or_default() += 1;
    }
    if d == 0 || mult.values().any(|&c| c % d != 0) {
        return None;
    }
    let mut parts: Vec<usize> = mult.iter().flat_map(|(&p, &c)| std::iter::repeat_n(p, c / d)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some(Composition::new(parts))
}

/// Kostka-Foulkes value at a primitive `d`-th root of unity against the
/// ribbon count.
#[derive(Debug, Clone, Serialize)]
pub struct KfRootReport {
    pub shape: Partition,
    pub content: Composition,
    pub d: usize,
    pub value: Option<String>,
    pub modulus: Option<u64>,
    pub ribbon_count: Option<u64>,
    pub divisible: bool,
    pub holds: bool,
}

pub fn kf_root_of_unity_check(shape: &Partition, alpha: &Composition, d: usize, cap: usize) -> Result<KfRootReport> {
    if d == 0 || !shape.size().is_multiple_of(d) {
        return domain(format!("d = {d} must divide |shape| = {}", shape.size()));
    }
    let kf = kostka_foulkes(shape, alpha, cap)?;
    let value = eval_at_root(&kf, d, 1);
    let as_int = value.as_integer();
    let modulus = as_int.as_ref().map(|v| u64::try_from(v.abs()).unwrap_or(u64::MAX));
    let reduced = reduced_content(alpha, d);
    let (ribbon_count, holds) = match &reduced {
        None => (None, as_int.as_ref().is_some_and(Zero::is_zero)),
        Some(tilde) => {
            let c = count_ribbon_cst(shape, d, tilde)?;
            (Some(c), modulus == Some(c))
        }
    };
    Ok(KfRootReport {
        shape: shape.clone(),
        content: alpha.clone(),
        d,
        value: Some(value.to_string()),
        modulus,
        ribbon_count,
        divisible: reduced.is_some(),
        holds,
    })
}

/// Both sides of the twisted Schur evaluation identity.
#[derive(Debug, Clone)]
pub struct TwistedSchur {
    /// `s_shape` at `a_j * zeta_k^(d t)`, `t < k/d`.
    pub schur: CyclotomicElement,
    /// `(zeta_k^d)^kappa * schur`.
    pub kappa_twisted: CyclotomicElement,
    /// Spin sign of `shape` over its `k/d`-core times `schur`.
    pub spin_twisted: CyclotomicElement,
    /// Ribbon-tableau generating function at the points.
    pub ribbon_side: BigInt,
}

impl TwistedSchur {
    pub fn kappa_form_holds(&self) -> bool {
        self.kappa_twisted.as_integer().as_ref() == Some(&self.ribbon_side)
    }

    pub fn spin_form_holds(&self) -> bool {
        self.spin_twisted.as_integer().as_ref() == Some(&self.ribbon_side)
    }
}

pub fn twisted_schur(shape: &Partition, k: usize, d: usize, points: &[i64], cap: usize) -> Result<TwistedSchur> {
    if k == 0 || d == 0 || !k.is_multiple_of(d) {
        return domain(format!("need d | k, got d = {d}, k = {k}"));
    }
    if points.len() != d {
        return domain(format!("need {d} evaluation points"));
    }
    let m = k / d;
    let mut values = Vec::with_capacity(k);
    for &a in points {
        for t in 0..m {
            let z = CyclotomicElement::zeta_power(k, (d * t) as i64);
            values.push(z.scale_int(&BigInt::from(a)));
        }
    }
    let schur = schur_evaluate(shape, &values, cap)?;
    let twist = CyclotomicElement::zeta_power(k, ((d * kappa(shape)) % k) as i64);
    let kappa_twisted = twist.mul(&schur);
    let eps = spin_sign(shape, &m_core(shape, m)?, m);
    let spin_twisted = schur.scale_int(&BigInt::from(eps));

    let mut ribbon_side = BigInt::zero();
    if shape.size().is_multiple_of(m) {
        let total = shape.size() / m;
        for beta in Composition::all_weak(total, d) {
            let c = count_ribbon_cst(shape, m, &beta)?;
            if c == 0 {
                continue;
            }
            let mut term = BigInt::from(c);
            for (&a, &b) in points.iter().zip(beta.parts()) {
                term *= BigInt::from(a).pow((m * b) as u32);
            }
            ribbon_side += term;
        }
    }
    Ok(TwistedSchur {
        schur,
        kappa_twisted,
        spin_twisted,
        ribbon_side,
    })
}

/// Coefficient of `x^content` in the product of quotient Schur polynomials
/// in `content.len()` variables.
pub fn quotient_product_coefficient(shape: &Partition, m: usize, content: &Composition, cap: usize) -> Result<u64> {
    if !m_core(shape, m)?.is_empty() {
        return Ok(0);
    }
    let vars = content.len();
    let mut acc: HashMap<Vec<usize>, u64> = HashMap::from([(vec![0; vars], 1)]);
    for q in m_quotient(shape, m)? {
        let factor = cst_contents(&q, vars, cap)?;
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &factor {
                let sum: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if sum.iter().zip(content.parts()).all(|(s, t)| s <= t) {
                    *next.entry(sum).or_default() += ca * (*cb as u64);
                }
            }
        }
        acc = next;
    }
    Ok(acc.get(content.parts()).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabcore::{kostka_number, DEFAULT_ENUMERATION_CAP};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Every tiling of `outer / inner` by `m`-ribbons: cover the first free
    /// cell in reading order with each ribbon whose top-left cell it is.
    fn all_tilings(outer: &Partition, inner: &Partition, m: usize) -> Vec<Vec<Vec<Cell>>> {
        fn rec(free: &mut BTreeSetCells, m: usize, acc: &mut Vec<Vec<Cell>>, out: &mut Vec<Vec<Vec<Cell>>>) {
            let Some(&c) = free.iter().next() else {
                out.push(acc.clone());
                return;
            };
            for tail_col in c.col..c.col + m {
                for mask in 0u32..(1 << (m - 1)) {
                    let mut cur = Cell::new(c.row, tail_col);
                    let mut cells = vec![cur];
                    let mut ok = free.contains(&cur);
                    for step in 0..m - 1 {
                        if !ok {
                            break;
                        }
                        cur = if mask >> step & 1 == 0 {
                            if cur.col == 1 {
                                ok = false;
                                break;
                            }
                            Cell::new(cur.row, cur.col - 1)
                        } else {
                            Cell::new(cur.row + 1, cur.col)
                        };
                        ok = free.contains(&cur);
                        cells.push(cur);
                    }
                    if !ok || cells.iter().min() != Some(&c) {
                        continue;
                    }
                    for x in &cells {
                        free.remove(x);
                    }
                    acc.push(cells.clone());
                    rec(free, m, acc, out);
                    acc.pop();
                    free.extend(cells);
                }
            }
        }
        type BTreeSetCells = std::collections::BTreeSet<Cell>;
        let mut free: BTreeSetCells = outer.cells().filter(|c| !inner.contains(*c)).collect();
        let mut out = Vec::new();
        if (outer.size() - inner.size()).is_multiple_of(m) {
            rec(&mut free, m, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Column-strict ribbon tableaux by labelling every tiling every way.
    fn brute_count(shape: &Partition, m: usize, content: &Composition) -> u64 {
        let labels = content.len();
        let mut count = 0;
        for tiling in all_tilings(shape, &Partition::default(), m) {
            let r = tiling.len();
            if r != content.size() {
                continue;
            }
            let total = labels.pow(r as u32);
            for code in 0..total {
                let mut c = code;
                let mut ribbons = Vec::with_capacity(r);
                for cells in &tiling {
                    ribbons.push(Ribbon::new(cells.clone(), c % labels + 1).unwrap());
                    c /= labels;
                }
                let t = RibbonTiling::new(shape.clone(), Partition::default(), ribbons, m).unwrap();
                if t.content(labels) == *content && t.is_column_strict() {
                    count += 1;
                }
            }
        }
        count
    }

    /// Core by repeatedly deleting the rim hook of a cell with hook length `m`.
    fn diagram_core(shape: &Partition, m: usize) -> Partition {
        let mut cur = shape.clone();
        'outer: loop {
            for cell in cur.cells().collect::<Vec<_>>() {
                if cur.hook_length(cell).unwrap() != m {
                    continue;
                }
                let rows: Vec<usize> = (1..=cur.len())
                    .map(|r| {
                        let rim_cells = cur
                            .cells()
                            .filter(|c| {
                                c.row == r
                                    && c.row >= cell.row
                                    && c.col >= cell.col
                                    && !cur.contains(Cell::new(c.row + 1, c.col + 1))
                            })
                            .count();
                        cur.row_len(r) - rim_cells
                    })
                    .collect();
                cur = Partition::from_unsorted(&rows);
                continue 'outer;
            }
            return cur;
        }
    }

    #[test]
    fn ribbon_validation() {
        assert!(Ribbon::new(vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1), Cell::new(2, 2)], 1).is_err());
        assert!(Ribbon::new(vec![Cell::new(1, 1), Cell::new(2, 2)], 1).is_err());
        let r = Ribbon::new(vec![Cell::new(1, 2), Cell::new(1, 3), Cell::new(2, 1), Cell::new(2, 2)], 1).unwrap();
        assert_eq!(r.head(), Cell::new(2, 1));
        assert_eq!(r.tail(), Cell::new(1, 3));
        assert_eq!(r.height(), 1);
    }

    #[test]
    fn cores_and_quotients() {
        assert!(m_core(&p(&[2, 2]), 2).unwrap().is_empty());
        assert!(m_core(&p(&[3, 1]), 2).unwrap().is_empty());
        assert_eq!(m_core(&p(&[2, 1]), 2).unwrap(), p(&[2, 1]));
        assert!(m_core(&p(&[4, 3, 1]), 1).unwrap().is_empty());
        assert_eq!(m_quotient(&p(&[4, 3, 1]), 1).unwrap(), vec![p(&[4, 3, 1])]);
        for n in 0..=10 {
            for lam in Partition::all_of_size(n) {
                for m in 1..=4 {
                    let core = m_core(&lam, m).unwrap();
                    assert_eq!(core, diagram_core(&lam, m), "{lam} m={m}");
                    let quot = m_quotient(&lam, m).unwrap();
                    assert_eq!(quot.len(), m);
                    let qsize: usize = quot.iter().map(Partition::size).sum();
                    assert_eq!(qsize * m + core.size(), n);
                }
            }
        }
    }

    #[test]
    fn counts_match_labelled_tilings() {
        for n in 1..=8 {
            for lam in Partition::all_of_size(n) {
                for m in 1..=3 {
                    if n % m != 0 {
                        continue;
                    }
                    for labels in 1..=3 {
                        for beta in Composition::all_weak(n / m, labels) {
                            let fast = count_ribbon_cst(&lam, m, &beta).unwrap();
                            assert_eq!(fast, brute_count(&lam, m, &beta), "{lam} m={m} {beta}");
                            let listed = enumerate_ribbon_cst(&lam, m, &beta).unwrap();
                            assert_eq!(listed.len() as u64, fast);
                            assert!(listed.iter().all(|t| t.is_column_strict() && t.content(labels) == beta));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_cells_give_kostka_numbers() {
        for n in 1..=7 {
            for lam in Partition::all_of_size(n) {
                for beta in Composition::all_weak(n, 3) {
                    assert_eq!(
                        count_ribbon_cst(&lam, 1, &beta).unwrap() as usize,
                        kostka_number(&lam, &beta, DEFAULT_ENUMERATION_CAP).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn counts_factor_through_quotient() {
        for n in 1..=8 {
            for lam in Partition::all_of_size(n) {
                for m in 1..=3 {
                    if n % m != 0 {
                        continue;
                    }
                    for labels in 1..=3 {
                        for beta in Composition::all_weak(n / m, labels) {
                            assert_eq!(
                                count_ribbon_cst(&lam, m, &beta).unwrap(),
                                quotient_product_coefficient(&lam, m, &beta, DEFAULT_ENUMERATION_CAP).unwrap(),
                                "{lam} m={m} {beta}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spin_sign_examples_and_independence() {
        for m in 1..=5 {
            let col = Partition::new(vec![1; m]).unwrap();
            let expected = if (m - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(spin_sign(&col, &Partition::default(), m), expected);
            assert_eq!(spin_sign(&p(&[m]), &Partition::default(), m), 1);
        }
        assert_eq!(all_tilings(&p(&[2, 2]), &Partition::default(), 2).len(), 2);
        assert_eq!(spin_sign(&p(&[2, 2]), &Partition::default(), 2), 1);
        assert_eq!(spin_sign(&p(&[2, 1]), &Partition::default(), 2), 0);
        for n in 1..=8 {
            for lam in Partition::all_of_size(n) {
                for inner in lam.subpartitions() {
                    for m in 1..=3 {
                        let tilings = all_tilings(&lam, &inner, m);
                        let sign = spin_sign(&lam, &inner, m);
                        if tilings.is_empty() {
                            assert_eq!(sign, 0, "{lam}/{inner} m={m}");
                        }
                        for t in tilings {
                            let ribbons = t.into_iter().map(|c| Ribbon::new(c, 1).unwrap()).collect();
                            let tiling = RibbonTiling::new(lam.clone(), inner.clone(), ribbons, m).unwrap();
                            assert_eq!(tiling.sign(), sign, "{lam}/{inner} m={m}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_foulkes_at_roots_counts_ribbon_tableaux() {
        let r = kf_root_of_unity_check(&p(&[2, 2]), &Composition::ones(4), 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(r.holds && r.divisible);
        assert_eq!(r.ribbon_count, Some(count_ribbon_cst(&p(&[2, 2]), 2, &Composition::ones(2)).unwrap()));
        // Non-divisible multiplicities need not force a zero: K_{(2),(2)} = 1.
        let r = kf_root_of_unity_check(&p(&[2]), &Composition::new(vec![2]), 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(!r.divisible && !r.holds);
        assert_eq!(r.modulus, Some(1));
        let r = kf_root_of_unity_check(&p(&[2, 1, 1]), &Composition::new(vec![2, 1, 1]), 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(!r.divisible);
        for n in 1..=8 {
            for lam in Partition::all_of_size(n) {
                for mu in Partition::all_of_size(n) {
                    for d in (1..=n).filter(|d| n % d == 0) {
                        let alpha = Composition::new(mu.parts().to_vec());
                        let r = kf_root_of_unity_check(&lam, &alpha, d, DEFAULT_ENUMERATION_CAP).unwrap();
                        assert!(r.holds || !r.divisible, "{lam} {alpha} d={d}: {r:?}");
                        if d == 1 {
                            assert_eq!(r.modulus.unwrap() as usize, kostka_number(&lam, &alpha, DEFAULT_ENUMERATION_CAP).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twisted_schur_on_rectangles() {
        for lam in Partition::rectangles_up_to(8) {
            for k in 1..=6 {
                for d in (1..=k).filter(|d| k % d == 0) {
                    let pts: Vec<i64> = [2, 3, 5, 7, 2, 3][..d].to_vec();
                    let t = twisted_schur(&lam, k, d, &pts, DEFAULT_ENUMERATION_CAP).unwrap();
                    assert!(t.kappa_form_holds(), "{lam} k={k} d={d}: {:?}", t);
                    assert!(t.spin_form_holds(), "{lam} k={k} d={d}");
                }
            }
        }
    }

    #[test]
    fn twisted_schur_spin_form_all_shapes() {
        for n in 1..=6 {
            for lam in Partition::all_of_size(n) {
                for k in 1..=6 {
                    for d in (1..=k).filter(|d| k % d == 0) {
                        let pts: Vec<i64> = [2, 3, 5, 7, 2, 3][..d].to_vec();
                        let t = twisted_schur(&lam, k, d, &pts, DEFAULT_ENUMERATION_CAP).unwrap();
                        assert!(t.spin_form_holds(), "{lam} k={k} d={d}");
                    }
                }
            }
        }
        // The kappa twist is not the right sign off rectangles.
        let t = twisted_schur(&p(&[2, 1]), 3, 1, &[2], DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(!t.kappa_form_holds());
        assert_eq!(t.ribbon_side, BigInt::from(8));
        assert_eq!(t.schur.as_integer(), Some(BigInt::from(-8)));
    }
}
