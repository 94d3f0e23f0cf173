use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::qpoly::q_hook_formula;
use crate::tabcore::Partition;

use super::{verify_csp, CSPReport, FiniteAction};

/// Largest rank whose long-element reduced words are materialized.
pub const DEFAULT_BN_RANK_CAP: usize = 4;

/// An element of the hyperoctahedral group in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return domain(format!("{window:?} is not a signed permutation"));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i64).collect() }
    }

    /// `i -> -i` for every `i`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i64).map(|i| -i).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Inversions of the window plus the absolute values of its negative entries.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let inv = (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count();
        let neg: i64 = w.iter().filter(|&&x| x < 0).map(|&x| -x).sum();
        inv + neg as usize
    }

    /// `w s_i`: `s_0` negates the first entry, `s_i` swaps entries `i` and `i + 1`.
    pub fn times_generator(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i >= n {
            return domain(format!("generator s_{i} is outside B_{n}"));
        }
        let mut w = self.window.clone();
        if i == 0 {
            w[0] = -w[0];
        } else {
            w.swap(i - 1, i);
        }
        Ok(SignedPermutation { window: w })
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        match i {
            0 => self.window.first().is_some_and(|&x| x < 0),
            _ => i < self.n() && self.window[i - 1] > self.window[i],
        }
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i64 + 1)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn count_memo(w: &SignedPermutation, memo: &mut HashMap<SignedPermutation, BigUint>) -> BigUint {
    if w.is_identity() {
        return BigUint::one();
    }
    if let Some(c) = memo.get(w) {
        return c.clone();
    }
    let mut total = BigUint::zero();
    for i in w.right_descents() {
        let v = w.times_generator(i).expect("descents are in range");
        total += count_memo(&v, memo);
    }
    memo.insert(w.clone(), total.clone());
    total
}

/// Number of reduced words of `w`.
pub fn reduced_word_count(w: &SignedPermutation) -> BigUint {
    count_memo(w, &mut HashMap::new())
}

/// All reduced words of the long element of `B_n`, as generator indices
/// `0..n`, in lexicographic order.
pub fn long_element_reduced_words(n: usize, cap: usize) -> Result<Vec<Vec<u8>>> {
    if n > DEFAULT_BN_RANK_CAP {
        return Err(Error::Resource { what: "B_n rank".into(), needed: n as u64, cap: DEFAULT_BN_RANK_CAP as u64 });
    }
    let wo = SignedPermutation::longest(n);
    let count = reduced_word_count(&wo);
    if count > BigUint::from(cap) {
        let needed = u64::try_from(&count).unwrap_or(u64::MAX);
        return Err(Error::Resource { what: "reduced words".into(), needed, cap: cap as u64 });
    }
    fn dfs(w: &SignedPermutation, suffix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if w.is_identity() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in w.right_descents() {
            suffix.push(i as u8);
            dfs(&w.times_generator(i).expect("descents are in range"), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    dfs(&wo, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Rotation `a_1 a_2 ... a_N -> a_2 ... a_N a_1` of long-element words.
pub fn bn_long_word_action(n: usize, cap: usize) -> Result<FiniteAction<Vec<u8>>> {
    let words = long_element_reduced_words(n, cap)?;
    FiniteAction::from_map(words, |w| {
        let mut r = w.clone();
        r.rotate_left(1);
        Ok(r)
    })
}

/// Word rotation against the q-hook formula of the `n x n` square at `n^2`-th roots.
pub fn bn_words_csp(n: usize, cap: usize) -> Result<CSPReport> {
    if n == 0 {
        return domain("B_n needs n >= 1");
    }
    let action = bn_long_word_action(n, cap)?;
    let x = q_hook_formula(&Partition::rectangle(n, n))?;
    Ok(verify_csp(&action, &x, n * n)?.labelled("bnwords", &[("n", n.to_string())]))
}
