use crate::error::{domain, Result};
use crate::jdt::{promote_power, require_rectangle};
use crate::qpoly::{kappa, IntPolynomial, kostka_foulkes, q_binomial, q_hook_formula, schur_principal_specialization};
use crate::tabcore::{enumerate_cst, enumerate_syt, Composition, Partition, Tableau};

use super::{verify_csp, verify_csp_modulus, CSPReport, FiniteAction};

/// `j^power` on `CST(shape, k)`, or on the tableaux of fixed `content` when
/// given; the content must be invariant under rotation by `power`.
pub fn promotion_action(
    shape: &Partition,
    k: usize,
    content: Option<&Composition>,
    power: usize,
    cap: usize,
) -> Result<FiniteAction<Tableau>> {
    if power == 0 {
        return domain("promotion power must be positive");
    }
    if let Some(alpha) = content {
        if alpha.len() != k {
            return domain(format!("content {alpha} must have {k} parts"));
        }
        if !k.is_multiple_of(power) || !alpha.has_period(power) {
            return domain(format!("content {alpha} is not invariant under rotation by {power}"));
        }
    }
    let set = enumerate_cst(shape, k, content, cap)?;
    FiniteAction::from_map(set, |t| promote_power(t, k, power))
}

/// Promotion on `SYT(shape)` against the q-hook formula at `n`-th roots.
pub fn syt_csp(shape: &Partition, cap: usize) -> Result<CSPReport> {
    syt_csp_with_modulus(shape, shape.size(), cap)
}

/// [`syt_csp`] at `m`-th roots of unity.
pub fn syt_csp_with_modulus(shape: &Partition, m: usize, cap: usize) -> Result<CSPReport> {
    let n = shape.size();
    let set = enumerate_syt(shape, cap)?;
    let action = FiniteAction::from_map(set, |t| promote_power(t, n, 1))?;
    let x = q_hook_formula(shape)?;
    Ok(verify_csp(&action, &x, m)?.labelled("syt", &[("shape", shape.to_string())]))
}

/// Promotion on `CST(shape, k)` against `q^{-kappa} s_shape(1, q, ..., q^{k-1})`.
pub fn cst_csp(shape: &Partition, k: usize, cap: usize) -> Result<CSPReport> {
    if k == 0 {
        return domain("the entry bound must be positive");
    }
    let action = promotion_action(shape, k, None, 1, cap)?;
    let spec = schur_principal_specialization(shape, k, cap)?;
    let x = if spec.is_zero() { spec } else { spec.shift_down(kappa(shape))? };
    Ok(verify_csp(&action, &x, k)?.labelled("cst", &[("shape", shape.to_string()), ("bound", k.to_string())]))
}

/// `j^d` on tableaux of rectangular shape and content `alpha` against the
/// modulus of the Kostka-Foulkes polynomial at `(k/d)`-th roots.
pub fn content_csp_check(shape: &Partition, alpha: &Composition, d: usize, cap: usize) -> Result<CSPReport> {
    require_rectangle(shape)?;
    let k = alpha.len();
    if d == 0 || !k.is_multiple_of(d) {
        return domain(format!("{d} does not divide the content length {k}"));
    }
    let action = promotion_action(shape, k, Some(alpha), d, cap)?;
    let x = kostka_foulkes(shape, alpha, cap)?;
    Ok(verify_csp_modulus(&action, &x, k / d)?.labelled(
        "content",
        &[
            ("shape", shape.to_string()),
            ("content", alpha.to_string()),
            ("power", d.to_string()),
        ],
    ))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn rotate_set(s: &[usize], n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = s.iter().map(|&x| x % n + 1).collect();
    v.sort_unstable();
    v
}

/// `k`-subsets of `[n]` under `i -> i + 1 mod n` against `[n choose k]_q`.
pub fn subset_csp(n: usize, k: usize) -> Result<CSPReport> {
    if n == 0 {
        return domain("the ground set must be nonempty");
    }
    let action = FiniteAction::from_map(subsets(n, k), |s| Ok(rotate_set(s, n)))?;
    let x = if k > n { IntPolynomial::zero() } else { q_binomial(n, k)? };
    Ok(verify_csp(&action, &x, n)?.labelled("subsets", &[("n", n.to_string()), ("k", k.to_string())]))
}

/// `k`-multisets of `[n]` under rotation against `[n + k - 1 choose k]_q`.
pub fn multiset_csp(n: usize, k: usize) -> Result<CSPReport> {
    if n == 0 {
        return domain("the ground set must be nonempty");
    }
    let action = FiniteAction::from_map(multisets(n, k), |s| Ok(rotate_set(s, n)))?;
    let x = q_binomial(n + k - 1, k)?;
    Ok(verify_csp(&action, &x, n)?.labelled("multisets", &[("n", n.to_string()), ("k", k.to_string())]))
}
