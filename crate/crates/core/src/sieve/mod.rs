//! Cyclic actions on finite sets, fixed-point counts of their powers, and
//! the comparison of those counts with a polynomial evaluated at roots of
//! unity.

mod catalan;
mod dihedral;
mod tableaux;
mod typeb;

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cyclo::eval_at_root;
use crate::error::{domain, Error, Result};
use crate::qpoly::IntPolynomial;

pub use catalan::{
    all_handshakes, all_noncrossing, ascent_set, handshake_action, handshake_csp, noncrossing_action,
    noncrossing_csp, noncrossing_to_handshake, reflection_report, HandshakePattern, NoncrossingPartition,
    ReflectionReport, MAX_CATALAN_RANK,
};
pub use dihedral::{dihedral_report, dihedral_syt_report, DihedralReport, DihedralRow};
pub use tableaux::{
    content_csp_check, cst_csp, multiset_csp, promotion_action, subset_csp, syt_csp, syt_csp_with_modulus,
};
pub use typeb::{
    bn_long_word_action, bn_words_csp, long_element_reduced_words, reduced_word_count, SignedPermutation,
    DEFAULT_BN_RANK_CAP,
};

/// A cyclic group acting on an explicit finite set through one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAction<T> {
    elements: Vec<T>,
    generator: Vec<usize>,
    order: usize,
}

impl<T> FiniteAction<T> {
    /// `generator[i]` is the index of the image of `elements[i]`.
    pub fn from_generator(elements: Vec<T>, generator: Vec<usize>) -> Result<Self> {
        if elements.len() != generator.len() {
            return domain("generator must have one image per element");
        }
        let mut seen = vec![false; generator.len()];
        for &g in &generator {
            if g >= generator.len() || seen[g] {
                return domain("generator is not a bijection");
            }
            seen[g] = true;
        }
        let order = cycle_lengths(&generator).into_iter().fold(1, |acc, l| acc.lcm(&l));
        Ok(FiniteAction {
            elements,
            generator,
            order,
        })
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn generator(&self) -> &[usize] {
        &self.generator
    }

    /// Smallest positive power acting as the identity.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of `generator^d` applied to element `i`.
    pub fn apply_power(&self, i: usize, d: usize) -> usize {
        (0..d % self.order.max(1)).fold(i, |x, _| self.generator[x])
    }

    /// Number of elements fixed by `generator^d`.
    pub fn fixed_points(&self, d: usize) -> usize {
        cycle_lengths(&self.generator).into_iter().filter(|&l| d.is_multiple_of(l)).sum()
    }

    /// Orbit sizes in increasing order.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut v = cycle_lengths(&self.generator);
        v.sort_unstable();
        v
    }

    /// Whether `generator^order` is the identity and no proper divisor of the
    /// order already is.
    pub fn order_is_minimal(&self) -> bool {
        let is_identity = |d: usize| (0..self.len()).all(|i| self.apply_power_slow(i, d) == i);
        is_identity(self.order) && (1..self.order).filter(|d| self.order.is_multiple_of(*d)).all(|d| !is_identity(d))
    }

    fn apply_power_slow(&self, i: usize, d: usize) -> usize {
        (0..d).fold(i, |x, _| self.generator[x])
    }
}

impl<T: Clone> FiniteAction<T> {
    /// The action of `generator^d`.
    pub fn power(&self, d: usize) -> FiniteAction<T> {
        let generator = (0..self.len()).map(|i| self.apply_power(i, d)).collect();
        FiniteAction::from_generator(self.elements.clone(), generator).expect("a power of a bijection is a bijection")
    }
}

impl<T: Clone + Eq + Hash> FiniteAction<T> {
    /// Builds the action of `f` on `elements`; every image must lie in the set.
    pub fn from_map(elements: Vec<T>, mut f: impl FnMut(&T) -> Result<T>) -> Result<Self> {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut generator = Vec::with_capacity(elements.len());
        for x in &elements {
            let y = f(x)?;
            match index.get(&y) {
                Some(&j) => generator.push(j),
                None => return Err(Error::Internal("map leaves the set".into())),
            }
        }
        drop(index);
        FiniteAction::from_generator(elements, generator)
    }
}

fn cycle_lengths(generator: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; generator.len()];
    let mut out = Vec::new();
    for start in 0..generator.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = generator[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// How fixed-point counts are compared with evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    /// The evaluation must be the integer count itself.
    Exact,
    /// The evaluation must be an integer whose absolute value is the count.
    Modulus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CSPRow {
    pub d: usize,
    pub fixed: u64,
    /// The evaluation, printed as an integer when it is one.
    pub eval: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CSPReport {
    pub family: String,
    pub parameters: BTreeMap<String, String>,
    pub m: usize,
    pub comparison: Comparison,
    pub rows: Vec<CSPRow>,
    pub verdict: bool,
}

impl CSPReport {
    pub fn labelled(mut self, family: &str, parameters: &[(&str, String)]) -> Self {
        self.family = family.to_string();
        self.parameters = parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        self
    }

    /// The rows whose evaluation is not an integer.
    pub fn non_integral_rows(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.eval.parse::<BigInt>().is_err())
            .map(|r| r.d)
            .collect()
    }

    pub fn fixed_counts(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.fixed).collect()
    }
}

fn sieve<T: Sync>(action: &FiniteAction<T>, x: &IntPolynomial, m: usize, comparison: Comparison) -> Result<CSPReport> {
    if m == 0 || !m.is_multiple_of(action.order()) {
        return domain(format!("action order {} does not divide {m}", action.order()));
    }
    let lengths = cycle_lengths(&action.generator);
    let row = |d: usize| {
        let fixed = lengths.iter().filter(|&&l| d.is_multiple_of(l)).sum::<usize>() as u64;
        let value = eval_at_root(x, m, d as i64);
        let matches = match (value.as_integer(), comparison) {
            (Some(v), Comparison::Exact) => v == BigInt::from(fixed),
            (Some(v), Comparison::Modulus) => v.abs() == BigInt::from(fixed),
            (None, _) => false,
        };
        CSPRow {
            d,
            fixed,
            eval: value.to_string(),
            matches,
        }
    };
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(m);
    let rows: Vec<CSPRow> = if workers <= 1 || m < 8 {
        (0..m).map(row).collect()
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let row = &row;
                    s.spawn(move || (w..m).step_by(workers).map(row).collect::<Vec<_>>())
                })
                .collect();
            let mut all: Vec<CSPRow> = handles.into_iter().flat_map(|h| h.join().expect("sieve worker")).collect();
            all.sort_by_key(|r| r.d);
            all
        })
    };
    let verdict = rows.iter().all(|r| r.matches);
    Ok(CSPReport {
        family: String::new(),
        parameters: BTreeMap::new(),
        m,
        comparison,
        rows,
        verdict,
    })
}

/// Compares the fixed points of every power `d < m` with `x(zeta_m^d)`.
pub fn verify_csp<T: Sync>(action: &FiniteAction<T>, x: &IntPolynomial, m: usize) -> Result<CSPReport> {
    sieve(action, x, m, Comparison::Exact)
}

/// As [`verify_csp`], up to sign of the evaluation.
pub fn verify_csp_modulus<T: Sync>(action: &FiniteAction<T>, x: &IntPolynomial, m: usize) -> Result<CSPReport> {
    sieve(action, x, m, Comparison::Modulus)
}

/// `sum_i a_i q^i` over `i < order`, where `a_i` counts orbits whose
/// stabilizer order divides `i`.
pub fn default_csp_polynomial<T>(action: &FiniteAction<T>) -> IntPolynomial {
    let m = action.order();
    let coeffs: Vec<i64> = (0..m)
        .map(|i| {
            cycle_lengths(&action.generator)
                .into_iter()
                .filter(|&l| i % (m / l) == 0)
                .count() as i64
        })
        .collect();
    IntPolynomial::from_i64s(&coeffs)
}
