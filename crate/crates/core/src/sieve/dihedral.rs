use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::jdt::{evacuate, promote, require_rectangle};
use crate::qpoly::{kappa, mn_character, schur_evaluate};
use crate::tabcore::{enumerate_cst, enumerate_syt, Partition, Tableau};

/// One operator of the dihedral group with its fixed points, the count
/// predicted by the case formula, and the count predicted by the revised
/// formula (they differ only for `e j` with `k` even and `a` odd).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralRow {
    pub operator: String,
    pub fixed: u64,
    pub predicted: String,
    #[serde(rename = "match")]
    pub matches: bool,
    pub revised: String,
    pub revised_match: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralReport {
    pub family: String,
    pub shape: Partition,
    pub bound: Option<usize>,
    pub rows: Vec<DihedralRow>,
    /// Every row matches the case formula.
    pub verdict: bool,
    /// Every row matches the revised formula.
    pub revised_verdict: bool,
}

fn neg_one_pow(e: usize) -> BigInt {
    BigInt::from(if e.is_multiple_of(2) { 1 } else { -1 })
}

fn fixed_count(set: &[Tableau], f: impl Fn(&Tableau) -> Result<Tableau>) -> Result<u64> {
    let mut count = 0;
    for t in set {
        if &f(t)? == t {
            count += 1;
        }
    }
    Ok(count)
}

fn row(operator: &str, fixed: u64, predicted: BigInt, revised: BigInt) -> DihedralRow {
    DihedralRow {
        operator: operator.to_string(),
        fixed,
        matches: predicted == BigInt::from(fixed),
        predicted: predicted.to_string(),
        revised_match: revised == BigInt::from(fixed),
        revised: revised.to_string(),
    }
}

fn report(family: &str, shape: &Partition, bound: Option<usize>, rows: Vec<DihedralRow>) -> DihedralReport {
    DihedralReport {
        family: family.into(),
        shape: shape.clone(),
        bound,
        verdict: rows.iter().all(|r| r.matches),
        revised_verdict: rows.iter().all(|r| r.revised_match),
        rows,
    }
}

/// Fixed points of `e` and `e j` on `CST(shape, k)` against signed Schur
/// evaluations at alternating signs.
pub fn dihedral_report(shape: &Partition, k: usize, cap: usize) -> Result<DihedralReport> {
    let (a, b) = require_rectangle(shape)?;
    let set = enumerate_cst(shape, k, None, cap)?;
    let fixed_e = fixed_count(&set, |t| evacuate(t, k))?;
    let fixed_ej = fixed_count(&set, |t| evacuate(&promote(t, k)?, k))?;

    let alternating: Vec<BigInt> = (0..k).map(neg_one_pow).collect();
    // alternating in the first k - 1 slots, the last slot repeating the one before
    let mut paired = alternating.clone();
    if k >= 2 {
        paired[k - 1] = paired[k - 2].clone();
    }
    let (s_alt, s_pair) = if k == 0 {
        (BigInt::from(u8::from(shape.is_empty())), BigInt::from(u8::from(shape.is_empty())))
    } else {
        (schur_evaluate(shape, &alternating, cap)?, schur_evaluate(shape, &paired, cap)?)
    };
    let kap = kappa(shape);
    let predicted_e = neg_one_pow(kap) * &s_alt;
    let predicted_ej = if k % 2 == 1 {
        predicted_e.clone()
    } else {
        match (a % 2 == 0, b % 2 == 0) {
            (true, true) => neg_one_pow(kap) * &s_pair,
            (true, false) => neg_one_pow(kap) * &s_alt,
            (false, true) => neg_one_pow(b / 2 - 1 + kap) * &s_alt,
            (false, false) => neg_one_pow(b / 2 + kap) * &s_pair,
        }
    };
    let revised_ej = if k % 2 == 1 || (a % 2 == 0 && b % 2 == 1) {
        neg_one_pow(kap) * &s_alt
    } else {
        neg_one_pow(kap) * &s_pair
    };
    let rows = vec![
        row("e", fixed_e, predicted_e.clone(), predicted_e),
        row("ej", fixed_ej, predicted_ej, revised_ej),
    ];
    Ok(report("cst", shape, Some(k), rows))
}

/// Cycle type of the longest element of `S_n`.
pub(super) fn longest_cycle_type(n: usize) -> Partition {
    let mut parts = vec![2; n / 2];
    parts.extend(std::iter::repeat_n(1, n % 2));
    Partition::from_unsorted(&parts)
}

/// Cycle type of `w_o c_n`.
pub(super) fn reflection_cycle_type(n: usize) -> Partition {
    if n % 2 == 1 {
        return longest_cycle_type(n);
    }
    let mut parts = vec![2; n / 2 - 1];
    parts.extend([1, 1]);
    Partition::from_unsorted(&parts)
}

/// Fixed points of `e` and `e j` on `SYT(shape)` against signed irreducible
/// character values.
pub fn dihedral_syt_report(shape: &Partition, cap: usize) -> Result<DihedralReport> {
    let (a, b) = require_rectangle(shape)?;
    let n = shape.size();
    let set = enumerate_syt(shape, cap)?;
    let fixed_e = fixed_count(&set, |t| evacuate(t, n))?;
    let fixed_ej = fixed_count(&set, |t| evacuate(&promote(t, n)?, n))?;
    let chi_e = mn_character(shape, &longest_cycle_type(n))?;
    let chi_ej = mn_character(shape, &reflection_cycle_type(n))?;
    let sign_e = if b % 2 == 0 { BigInt::from(1) } else { neg_one_pow(a / 2) };
    let sign_ej = match (b % 2 == 0, a % 2 == 0) {
        (true, _) => BigInt::from(1),
        (false, true) => neg_one_pow(a / 2 - 1),
        (false, false) => neg_one_pow(a / 2),
    };
    let (e, ej) = (sign_e * chi_e, sign_ej * chi_ej);
    let rows = vec![row("e", fixed_e, e.clone(), e), row("ej", fixed_ej, ej.clone(), ej)];
    Ok(report("syt", shape, None, rows))
}
