//! Kazhdan-Lusztig polynomials of `S_n`, the mu function, the cell
//! representations they define on standard tableaux, and KL immanants.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::jdt::{is_semistandardizable, promote, require_rectangle};
use crate::permrsk::{bruhat_leq, rsk, rsk_inverse, Permutation};
use crate::qpoly::IntPolynomial;
use crate::tabcore::{css, enumerate_syt, Composition, Partition, Tableau, DEFAULT_ENUMERATION_CAP};

/// Largest rank built unless a caller raises the cap.
pub const DEFAULT_KL_RANK_CAP: usize = 6;

/// All `P_{u,w}(q)` for one symmetric group.
///
/// Polynomials are packed per `w`: `starts[w][u]..starts[w][u + 1]` slices
/// the coefficient run of `P_{u,w}` inside `coeffs[w]`.
#[derive(Debug, Clone)]
pub struct KLTable {
    n: usize,
    perms: Vec<Permutation>,
    lengths: Vec<usize>,
    starts: Vec<Vec<u32>>,
    coeffs: Vec<Vec<i64>>,
}

/// One entry of a table dump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KLEntry {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub coefficients: Vec<i64>,
}

fn shifted_add(acc: &mut Vec<i64>, src: &[i64], shift: usize, sign: i64) {
    if src.is_empty() {
        return;
    }
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, 0);
    }
    for (i, &c) in src.iter().enumerate() {
        acc[i + shift] += sign * c;
    }
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Builds the table for `S_n` with the default rank cap.
pub fn build_kl_table(n: usize) -> Result<KLTable> {
    build_kl_table_with_cap(n, DEFAULT_KL_RANK_CAP)
}

/// Builds the table for `S_n`, refusing ranks above `cap`.
pub fn build_kl_table_with_cap(n: usize, cap: usize) -> Result<KLTable> {
    if n > cap {
        return Err(Error::Resource {
            what: "Kazhdan-Lusztig table rank".into(),
            needed: n as u64,
            cap: cap as u64,
        });
    }
    let perms = Permutation::all(n);
    let size = perms.len();
    let lengths: Vec<usize> = perms.iter().map(Permutation::length).collect();
    // left[i][r] = rank of s_i * perms[r]
    let mut left = vec![Vec::new(); n.max(1)];
    for (i, row) in left.iter_mut().enumerate().skip(1) {
        *row = perms.iter().map(|p| p.left_mul_simple(i).rank()).collect();
    }
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&r| (lengths[r], r));

    let mut starts: Vec<Vec<u32>> = vec![Vec::new(); size];
    let mut coeffs: Vec<Vec<i64>> = vec![Vec::new(); size];
    let get = |starts: &[Vec<u32>], coeffs: &[Vec<i64>], u: usize, w: usize| -> Vec<i64> {
        let s = &starts[w];
        coeffs[w][s[u] as usize..s[u + 1] as usize].to_vec()
    };

    for &w in &order {
        let mut polys: Vec<Vec<i64>> = vec![Vec::new(); size];
        if lengths[w] == 0 {
            polys[w] = vec![1];
        } else {
            let wp = &perms[w];
            let i = (1..n).find(|&i| wp.has_left_descent(i)).expect("nonidentity has a descent");
            let v = left[i][w];
            let lv = lengths[v];
            // z < v with s_i z < z and mu(z, v) != 0
            let mut correction: Vec<(usize, i64)> = Vec::new();
            for z in 0..size {
                if lengths[z] >= lv || (lv - lengths[z]).is_multiple_of(2) || !perms[z].has_left_descent(i) {
                    continue;
                }
                let p = get(&starts, &coeffs, z, v);
                let top = (lv - lengths[z] - 1) / 2;
                if let Some(&m) = p.get(top) {
                    if m != 0 {
                        correction.push((z, m));
                    }
                }
            }
            for (u, slot) in polys.iter_mut().enumerate() {
                let c = usize::from(perms[u].has_left_descent(i));
                let mut acc = Vec::new();
                shifted_add(&mut acc, &get(&starts, &coeffs, left[i][u], v), 1 - c, 1);
                shifted_add(&mut acc, &get(&starts, &coeffs, u, v), c, 1);
                for &(z, m) in &correction {
                    let shift = (lengths[w] - lengths[z]) / 2;
                    shifted_add(&mut acc, &get(&starts, &coeffs, u, z), shift, -m);
                }
                trim(&mut acc);
                *slot = acc;
            }
        }
        let mut s = Vec::with_capacity(size + 1);
        let mut data = Vec::new();
        s.push(0u32);
        for p in polys {
            data.extend_from_slice(&p);
            s.push(data.len() as u32);
        }
        starts[w] = s;
        coeffs[w] = data;
    }
    Ok(KLTable { n, perms, lengths, starts, coeffs })
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<KLTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KLTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A process-wide shared table for `S_n` (default cap).
pub fn shared_kl_table(n: usize) -> Result<Arc<KLTable>> {
    if let Some(t) = table_cache().lock().expect("KL cache poisoned").get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(build_kl_table(n)?);
    table_cache()
        .lock()
        .expect("KL cache poisoned")
        .entry(n)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}

impl KLTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `S_n` in rank order.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    fn check(&self, p: &Permutation) -> Result<usize> {
        if p.n() != self.n {
            return domain(format!("{p} is not in S_{}", self.n));
        }
        Ok(p.rank())
    }

    /// Coefficients of `P_{u,w}` by rank, constant term first.
    pub fn coeffs_by_rank(&self, u: usize, w: usize) -> &[i64] {
        let s = &self.starts[w];
        &self.coeffs[w][s[u] as usize..s[u + 1] as usize]
    }

    pub fn poly(&self, u: &Permutation, w: &Permutation) -> Result<IntPolynomial> {
        let (u, w) = (self.check(u)?, self.check(w)?);
        Ok(IntPolynomial::from_i64s(self.coeffs_by_rank(u, w)))
    }

    /// Directed `mu(u, w)` by rank.
    pub fn mu_by_rank(&self, u: usize, w: usize) -> i64 {
        let (lu, lw) = (self.lengths[u], self.lengths[w]);
        if lu >= lw || (lw - lu) % 2 == 0 {
            return 0;
        }
        self.coeffs_by_rank(u, w).get((lw - lu - 1) / 2).copied().unwrap_or(0)
    }

    /// Coefficient of `q^{(l(w) - l(u) - 1)/2}` in `P_{u,w}`.
    pub fn mu(&self, u: &Permutation, w: &Permutation) -> Result<i64> {
        Ok(self.mu_by_rank(self.check(u)?, self.check(w)?))
    }

    /// The symmetric `mu[u, v]`.
    pub fn mu_sym(&self, u: &Permutation, v: &Permutation) -> Result<i64> {
        let (u, v) = (self.check(u)?, self.check(v)?);
        Ok(self.mu_by_rank(u, v).max(self.mu_by_rank(v, u)))
    }

    /// Normalization, Bruhat compatibility and the degree bound, as a list
    /// of violations.
    pub fn axiom_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (w, wp) in self.perms.iter().enumerate() {
            for (u, up) in self.perms.iter().enumerate() {
                let p = self.coeffs_by_rank(u, w);
                if u == w {
                    if p != [1] {
                        out.push(format!("P_{{{up},{up}}} = {p:?}"));
                    }
                    continue;
                }
                if p.is_empty() {
                    if bruhat_leq(up, wp).unwrap_or(false) {
                        out.push(format!("P_{{{up},{wp}}} vanishes on a Bruhat pair"));
                    }
                    continue;
                }
                if !bruhat_leq(up, wp).unwrap_or(false) {
                    out.push(format!("P_{{{up},{wp}}} nonzero off Bruhat order"));
                    continue;
                }
                let (lu, lw) = (self.lengths[u], self.lengths[w]);
                if 2 * (p.len() - 1) + 1 > lw - lu {
                    out.push(format!("P_{{{up},{wp}}} = {p:?} exceeds the degree bound"));
                }
                if p[0] != 1 {
                    out.push(format!("P_{{{up},{wp}}} has constant term {}", p[0]));
                }
            }
        }
        out
    }

    /// All nonzero entries, for golden-file regression.
    pub fn entries(&self) -> Vec<KLEntry> {
        let mut out = Vec::new();
        for (w, wp) in self.perms.iter().enumerate() {
            for (u, up) in self.perms.iter().enumerate() {
                let p = self.coeffs_by_rank(u, w);
                if !p.is_empty() {
                    out.push(KLEntry {
                        u: up.one_line().to_vec(),
                        v: wp.one_line().to_vec(),
                        coefficients: p.to_vec(),
                    });
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "entries": self.entries() })
    }
}

fn table_for(table: &KLTable, n: usize) -> Result<()> {
    if table.n() != n {
        return domain(format!("table has rank {}, tableaux have size {n}", table.n()));
    }
    Ok(())
}

/// `mu[(T, P), (T, Q)]` for the permutations with insertion tableau `P`
/// (resp. `Q`) and a common recording tableau `T`, here taken to be `P`.
pub fn mu_tableaux(table: &KLTable, p: &Tableau, q: &Tableau) -> Result<i64> {
    mu_tableaux_with(table, p, q, p)
}

/// [`mu_tableaux`] with an explicit recording tableau.
pub fn mu_tableaux_with(table: &KLTable, p: &Tableau, q: &Tableau, recording: &Tableau) -> Result<i64> {
    if p.shape() != q.shape() || p.shape() != recording.shape() {
        return domain("mu between tableaux needs a common shape");
    }
    table_for(table, p.size())?;
    let u = rsk_inverse(p, recording)?;
    let v = rsk_inverse(q, recording)?;
    table.mu_sym(&u, &v)
}

/// Dense integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity_matrix(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0; m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            if x != 0 {
                for j in 0..m {
                    out[i][j] += x * b[k][j];
                }
            }
        }
    }
    out
}

fn mat_scale(a: &IntMatrix, c: i64) -> IntMatrix {
    a.iter().map(|r| r.iter().map(|x| c * x).collect()).collect()
}

/// The action of one generator on the cell module of a shape.
///
/// Column `p` holds the coordinates of `s_i` applied to `basis[p]`, so
/// that products of matrices follow products in the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMatrix {
    pub shape: Partition,
    pub generator: usize,
    pub basis: Vec<Tableau>,
    pub matrix: IntMatrix,
}

fn syt_basis(shape: &Partition) -> Result<Vec<Tableau>> {
    enumerate_syt(shape, DEFAULT_ENUMERATION_CAP)
}

/// `s_i` on the cell module of `shape`: `-P` for `i` a descent of `P`,
/// otherwise `P` plus `mu[P, Q] Q` over the `Q` having `i` as a descent.
pub fn cell_generator_matrix(table: &KLTable, shape: &Partition, i: usize) -> Result<CellMatrix> {
    let n = shape.size();
    table_for(table, n)?;
    if i == 0 || i >= n {
        return domain(format!("generator s_{i} is outside S_{n}"));
    }
    let basis = syt_basis(shape)?;
    let descents: Vec<BTreeSet<usize>> = basis.iter().map(Tableau::descent_set).collect::<Result<_>>()?;
    descent_matrix(table, shape, i, basis, &descents)
}

fn descent_matrix(
    table: &KLTable,
    shape: &Partition,
    i: usize,
    basis: Vec<Tableau>,
    descents: &[BTreeSet<usize>],
) -> Result<CellMatrix> {
    let size = basis.len();
    let mut matrix = vec![vec![0; size]; size];
    for (p, pt) in basis.iter().enumerate() {
        if descents[p].contains(&i) {
            matrix[p][p] = -1;
            continue;
        }
        matrix[p][p] = 1;
        for (q, qt) in basis.iter().enumerate() {
            if descents[q].contains(&i) {
                matrix[q][p] += mu_tableaux(table, pt, qt)?;
            }
        }
    }
    Ok(CellMatrix {
        shape: shape.clone(),
        generator: i,
        basis,
        matrix,
    })
}

/// `rho(s_1) rho(s_2) ... rho(s_{n-1})`, i.e. the long cycle.
pub fn long_cycle_matrix(table: &KLTable, shape: &Partition) -> Result<IntMatrix> {
    let n = shape.size();
    let size = syt_basis(shape)?.len();
    let mut acc = identity_matrix(size);
    for i in 1..n {
        acc = mat_mul(&acc, &cell_generator_matrix(table, shape, i)?.matrix);
    }
    Ok(acc)
}

/// Permutation matrix of promotion on the standard basis: column `P` has
/// its one at row `j(P)`.
pub fn promotion_matrix(shape: &Partition) -> Result<IntMatrix> {
    let basis = syt_basis(shape)?;
    let n = shape.size();
    let index: HashMap<&Tableau, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = vec![vec![0; basis.len()]; basis.len()];
    for (p, t) in basis.iter().enumerate() {
        let image = promote(t, n)?;
        m[index[&image]][p] = 1;
    }
    Ok(m)
}

/// Coordinates of `x` in the KL basis `{C'_w(1)}`, where `x` is a group
/// algebra element keyed by permutation rank.
pub fn kl_basis_coordinates(table: &KLTable, x: &[i64]) -> Vec<i64> {
    let size = table.perms.len();
    let mut rem = x.to_vec();
    let mut out = vec![0; size];
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&r| std::cmp::Reverse((table.lengths[r], r)));
    for &w in &order {
        let c = rem[w];
        if c == 0 {
            continue;
        }
        out[w] = c;
        for (v, r) in rem.iter_mut().enumerate() {
            let p = table.coeffs_by_rank(v, w);
            if !p.is_empty() {
                let at_one: i64 = p.iter().sum();
                let sign = if (table.lengths[w] - table.lengths[v]).is_multiple_of(2) { 1 } else { -1 };
                *r -= c * sign * at_one;
            }
        }
    }
    out
}

/// `C'_w(1) = sum_v (-1)^{l(w) - l(v)} P_{v,w}(1) v`, keyed by rank.
pub fn kl_basis_element(table: &KLTable, w: usize) -> Vec<i64> {
    (0..table.perms.len())
        .map(|v| {
            let at_one: i64 = table.coeffs_by_rank(v, w).iter().sum();
            if at_one == 0 {
                return 0;
            }
            let sign = if (table.lengths[w] - table.lengths[v]).is_multiple_of(2) { 1 } else { -1 };
            sign * at_one
        })
        .collect()
}

/// Outcome of checking the long-cycle identity on a rectangular cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PromotionIdentityReport {
    pub shape: Partition,
    pub sign: i64,
    /// `rho(c_n) = sign * J` with `J` sending `P` to `j(P)`.
    pub long_cycle_holds: bool,
    /// `rho(c_n) rho(s_{n-1}) rho(c_n)^{-1}` equals the extended-descent rule.
    pub wrap_generator_holds: bool,
    /// Coefficient of `C'_v` in `c_n C'_u` for `u = (CSS, CSS)` and
    /// `v = (j(CSS), CSS)` in (insertion, recording) form.
    pub leading_coefficient: i64,
    pub leading_coefficient_holds: bool,
    pub holds: bool,
}

pub fn verify_promotion_identity(table: &KLTable, shape: &Partition) -> Result<PromotionIdentityReport> {
    let (a, _) = require_rectangle(shape)?;
    let n = shape.size();
    table_for(table, n)?;
    let sign = if a % 2 == 1 { 1 } else { -1 };
    let basis = syt_basis(shape)?;
    let rho_c = long_cycle_matrix(table, shape)?;
    let j = promotion_matrix(shape)?;
    let long_cycle_holds = rho_c == mat_scale(&j, sign);

    let wrap_generator_holds = if n >= 2 {
        // rho(c)^{-1} = rho(s_{n-1}) ... rho(s_1)
        let mut inv = identity_matrix(basis.len());
        for i in (1..n).rev() {
            inv = mat_mul(&inv, &cell_generator_matrix(table, shape, i)?.matrix);
        }
        let last = cell_generator_matrix(table, shape, n - 1)?.matrix;
        let conj = mat_mul(&mat_mul(&rho_c, &last), &inv);
        let extended: Vec<BTreeSet<usize>> =
            basis.iter().map(Tableau::extended_descent_set).collect::<Result<_>>()?;
        let wrap = wrap_descent_matrix(table, &basis, n, &extended)?;
        conj == wrap
    } else {
        true
    };

    let top = css(shape);
    let u = rsk_inverse(&top, &top)?;
    let v = rsk_inverse(&promote(&top, n)?, &top)?;
    let c = Permutation::long_cycle(n);
    let cu = kl_basis_element(table, u.rank());
    let mut product = vec![0; cu.len()];
    for (x, &coef) in cu.iter().enumerate() {
        if coef != 0 {
            product[c.compose(&table.perms[x]).rank()] += coef;
        }
    }
    let coords = kl_basis_coordinates(table, &product);
    let leading_coefficient = coords[v.rank()];
    let leading_coefficient_holds = leading_coefficient == sign;
    Ok(PromotionIdentityReport {
        shape: shape.clone(),
        sign,
        long_cycle_holds,
        wrap_generator_holds,
        leading_coefficient,
        leading_coefficient_holds,
        holds: long_cycle_holds && wrap_generator_holds && leading_coefficient_holds,
    })
}

/// `s_n` by the wrap-around rule: `-P` when `n` is an extended descent,
/// otherwise `P` plus `mu[P, Q] Q` over `Q` with `n` an extended descent.
fn wrap_descent_matrix(
    table: &KLTable,
    basis: &[Tableau],
    n: usize,
    extended: &[BTreeSet<usize>],
) -> Result<IntMatrix> {
    let size = basis.len();
    let mut m = vec![vec![0; size]; size];
    for (p, pt) in basis.iter().enumerate() {
        if extended[p].contains(&n) {
            m[p][p] = -1;
            continue;
        }
        m[p][p] = 1;
        for (q, qt) in basis.iter().enumerate() {
            if extended[q].contains(&n) {
                m[q][p] += mu_tableaux(table, pt, qt)?;
            }
        }
    }
    Ok(m)
}

/// A pair on which promotion changes `mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuViolation {
    pub p: Tableau,
    pub q: Tableau,
    pub before: i64,
    pub after: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuInvarianceReport {
    pub shape: Partition,
    pub pairs_checked: usize,
    pub violations: Vec<MuViolation>,
    pub holds: bool,
}

/// Checks `mu[P, Q] = mu[j(P), j(Q)]` over all pairs of standard tableaux.
pub fn mu_promotion_invariance(table: &KLTable, shape: &Partition) -> Result<MuInvarianceReport> {
    let n = shape.size();
    table_for(table, n)?;
    let basis = syt_basis(shape)?;
    let images: Vec<Tableau> = basis.iter().map(|t| promote(t, n)).collect::<Result<_>>()?;
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for (a, p) in basis.iter().enumerate() {
        for (b, q) in basis.iter().enumerate() {
            pairs_checked += 1;
            let before = mu_tableaux(table, p, q)?;
            let after = mu_tableaux(table, &images[a], &images[b])?;
            if before != after {
                violations.push(MuViolation {
                    p: p.clone(),
                    q: q.clone(),
                    before,
                    after,
                });
            }
        }
    }
    Ok(MuInvarianceReport {
        shape: shape.clone(),
        pairs_checked,
        holds: violations.is_empty(),
        violations,
    })
}

/// A polynomial in commuting variables `x_{a,b}`, keyed by the sorted
/// multiset of variable indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<(usize, usize)>, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn add_term(&mut self, mut vars: Vec<(usize, usize)>, coeff: i64) {
        vars.sort_unstable();
        let entry = self.terms.entry(vars.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&vars);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<(usize, usize)>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MultiPoly, scale: i64) -> MultiPoly {
        let mut out = self.clone();
        for (vars, &c) in &other.terms {
            out.add_term(vars.clone(), scale * c);
        }
        out
    }

    /// Renames every variable through `f`.
    pub fn map_vars(&self, f: impl Fn((usize, usize)) -> (usize, usize)) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (vars, &c) in &self.terms {
            out.add_term(vars.iter().map(|&v| f(v)).collect(), c);
        }
        out
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, (a, b): (usize, usize)) -> fmt::Result {
    if a < 10 && b < 10 {
        write!(f, "x{a}{b}")
    } else {
        write!(f, "x{a},{b}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (vars, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if c.abs() != 1 || vars.is_empty() {
                write!(f, "{}", c.abs())?;
            }
            for &v in vars {
                fmt_var(f, v)?;
            }
        }
        Ok(())
    }
}

/// `Imm_w` as a combination of permutation monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Immanant {
    pub w: Permutation,
    pub terms: BTreeMap<Permutation, i64>,
}

/// `Imm_w(x) = sum_{v >= w} (-1)^{l(v) - l(w)} P_{w_o v, w_o w}(1) x_{1,v(1)} ... x_{n,v(n)}`.
pub fn immanant(table: &KLTable, w: &Permutation) -> Result<Immanant> {
    let wr = table.check(w)?;
    let wo = Permutation::longest(table.n);
    let top = wo.compose(w).rank();
    let mut terms = BTreeMap::new();
    for (v, vp) in table.perms.iter().enumerate() {
        let p = table.coeffs_by_rank(wo.compose(vp).rank(), top);
        let at_one: i64 = p.iter().sum();
        if at_one != 0 {
            let diff = table.lengths[v] as i64 - table.lengths[wr] as i64;
            let sign = if diff.rem_euclid(2) == 0 { 1 } else { -1 };
            terms.insert(vp.clone(), sign * at_one);
        }
    }
    Ok(Immanant { w: w.clone(), terms })
}

/// One unexpanded summand of an immanant evaluated on `x_{alpha,beta}`;
/// `vars` lists the matrix entries in row order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImmanantTerm {
    pub perm: Permutation,
    pub coefficient: i64,
    pub vars: Vec<(usize, usize)>,
}

fn block_maps(n: usize, alpha: &Composition, beta: &Composition) -> Result<(Vec<usize>, Vec<usize>)> {
    if alpha.size() != n || beta.size() != n {
        return domain(format!("compositions {alpha} and {beta} must both have size {n}"));
    }
    Ok((alpha.block_map(), beta.block_map()))
}

/// The summands of `Imm_w(x_{alpha,beta})`, where entry `(i, j)` of
/// `x_{alpha,beta}` is `x_{a,b}` for `i` in block `a` of `alpha` and `j` in
/// block `b` of `beta`.
pub fn immanant_terms(
    table: &KLTable,
    w: &Permutation,
    alpha: &Composition,
    beta: &Composition,
) -> Result<Vec<ImmanantTerm>> {
    let (rows, cols) = block_maps(table.n, alpha, beta)?;
    let imm = immanant(table, w)?;
    Ok(imm
        .terms
        .into_iter()
        .map(|(perm, coefficient)| {
            let vars = (1..=table.n).map(|i| (rows[i - 1], cols[perm.apply(i) - 1])).collect();
            ImmanantTerm { perm, coefficient, vars }
        })
        .collect())
}

/// `Imm_w(x_{alpha,beta})` with like monomials combined.
pub fn kl_immanant(table: &KLTable, w: &Permutation, alpha: &Composition, beta: &Composition) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    for t in immanant_terms(table, w, alpha, beta)? {
        out.add_term(t.vars, t.coefficient);
    }
    Ok(out)
}

/// `s_i` applied to `Imm_w`: `-Imm_w` when `s_i w > w`, otherwise
/// `Imm_w + Imm_{s_i w} + sum mu(w, z) Imm_z` over `z > w` with `s_i z > z`.
///
/// Here `s_i` acts on polynomials by exchanging the column indices `i` and
/// `i + 1` of every variable.
pub fn immanant_generator_action(table: &KLTable, w: &Permutation, i: usize) -> Result<BTreeMap<Permutation, i64>> {
    let wr = table.check(w)?;
    if i == 0 || i >= table.n {
        return domain(format!("generator s_{i} is outside S_{}", table.n));
    }
    let mut out = BTreeMap::new();
    if !w.has_left_descent(i) {
        out.insert(w.clone(), -1);
        return Ok(out);
    }
    out.insert(w.clone(), 1);
    *out.entry(w.left_mul_simple(i)).or_insert(0) += 1;
    for (z, zp) in table.perms.iter().enumerate() {
        if zp.has_left_descent(i) {
            continue;
        }
        let m = table.mu_by_rank(wr, z);
        if m != 0 && z != w.left_mul_simple(i).rank() {
            *out.entry(zp.clone()).or_insert(0) += m;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Outcome of the vanishing criterion over all of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub n: usize,
    pub cases: usize,
    pub mismatches: Vec<(Permutation, Composition)>,
    pub holds: bool,
}

fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::new(Vec::new())];
    }
    // cut points as bit masks over the n - 1 gaps
    (0..1usize << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for gap in 0..n - 1 {
                if mask >> gap & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition::new(parts)
        })
        .collect()
}

/// `Imm_w(x_{alpha,1^n}) = 0` exactly when the recording tableau of `w` is
/// not `alpha`-semistandardizable, for every `w` and composition `alpha`.
pub fn vanishing_criterion_check(table: &KLTable, n: usize) -> Result<VanishingReport> {
    table_for(table, n)?;
    if n > 5 {
        return Err(Error::Resource {
            what: "immanant expansion rank".into(),
            needed: n as u64,
            cap: 5,
        });
    }
    let ones = Composition::ones(n);
    let alphas = compositions(n);
    let mut mismatches = Vec::new();
    let mut cases = 0;
    for w in table.perms() {
        let (_, recording) = rsk(w);
        for alpha in &alphas {
            cases += 1;
            let vanishes = kl_immanant(table, w, alpha, &ones)?.is_zero();
            if vanishes == is_semistandardizable(&recording, alpha)? {
                mismatches.push((w.clone(), alpha.clone()));
            }
        }
    }
    Ok(VanishingReport {
        n,
        cases,
        holds: mismatches.is_empty(),
        mismatches,
    })
}
