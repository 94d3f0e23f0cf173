use std::fmt::Write;

use serde::Serialize;
use tabsieve::klcells::{Immanant, KLTable, MuInvarianceReport, MultiPoly, PromotionIdentityReport, VanishingReport};
use tabsieve::permrsk::Permutation;
use tabsieve::ribbon::KfRootReport;
use tabsieve::sieve::{CSPReport, Comparison, DihedralReport, FiniteAction};
use tabsieve::tabcore::{Composition, Partition, Tableau};

/// Text for standard output and whether every claim held.
pub struct Outcome {
    pub text: String,
    pub pass: bool,
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn clip(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let head: String = s.chars().take(width - 3).collect();
        format!("{head}...")
    }
}

fn json_outcome<T: Serialize>(value: &T, pass: bool) -> Outcome {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    Outcome { text, pass }
}

pub fn csp(report: &CSPReport, json: bool) -> Outcome {
    if json {
        return json_outcome(report, report.verdict);
    }
    let mut s = String::new();
    let params: Vec<String> = report.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(s, "{} {}  m={}", report.family, params.join(" "), report.m);
    let head = match report.comparison {
        Comparison::Exact => "X(zeta^d)",
        Comparison::Modulus => "X(zeta^d) [modulus]",
    };
    let _ = writeln!(s, "{:>4}  {:>8}  {:<24}  match", "d", "fixed", head);
    for r in &report.rows {
        let _ = writeln!(s, "{:>4}  {:>8}  {:<24}  {}", r.d, r.fixed, clip(&r.eval, 24), if r.matches { "yes" } else { "no" });
    }
    let odd = report.non_integral_rows();
    if let Some(&d) = odd.first() {
        let _ = writeln!(
            s,
            "non-integer evaluation at {} of {} powers, first at d={d}: {}",
            odd.len(),
            report.m,
            clip(&report.rows[d].eval, 100)
        );
    }
    let _ = writeln!(s, "verdict: {}", verdict(report.verdict));
    Outcome { text: s, pass: report.verdict }
}

#[derive(Serialize)]
struct EnumerationJson<'a> {
    shape: &'a Partition,
    bound: usize,
    power: usize,
    count: usize,
    order: usize,
    orbit_sizes: Vec<usize>,
    tableaux: Option<&'a [Tableau]>,
}

pub fn enumeration(
    shape: &Partition,
    bound: usize,
    power: usize,
    action: &FiniteAction<Tableau>,
    list: bool,
    json: bool,
) -> Outcome {
    let value = EnumerationJson {
        shape,
        bound,
        power,
        count: action.len(),
        order: action.order(),
        orbit_sizes: action.orbit_sizes(),
        tableaux: list.then(|| action.elements()),
    };
    if json {
        return json_outcome(&value, true);
    }
    let mut s = String::new();
    let _ = writeln!(s, "shape {shape}, entries <= {bound}, promotion power {power}");
    let _ = writeln!(s, "tableaux: {}", value.count);
    let _ = writeln!(s, "order: {}", value.order);
    let _ = writeln!(s, "orbit sizes: {:?}", value.orbit_sizes);
    if list {
        for t in action.elements() {
            let _ = writeln!(s, "  {t}");
        }
    }
    Outcome { text: s, pass: true }
}

pub fn dihedral(report: &DihedralReport, revised: bool, json: bool) -> Outcome {
    let pass = if revised { report.revised_verdict } else { report.verdict };
    if json {
        return json_outcome(report, pass);
    }
    let mut s = String::new();
    let bound = report.bound.map(|k| format!(" k={k}")).unwrap_or_default();
    let _ = writeln!(s, "{} shape={}{}", report.family, report.shape, bound);
    let _ = writeln!(s, "{:<8}  {:>8}  {:>10}  {:>10}", "operator", "fixed", "predicted", "revised");
    for r in &report.rows {
        let _ = writeln!(s, "{:<8}  {:>8}  {:>10}  {:>10}", r.operator, r.fixed, r.predicted, r.revised);
    }
    let _ = writeln!(
        s,
        "case formula: {}, revised formula: {}",
        verdict(report.verdict),
        verdict(report.revised_verdict)
    );
    let _ = writeln!(s, "verdict: {}", verdict(pass));
    Outcome { text: s, pass }
}

pub fn kl_table(table: &KLTable, json: bool) -> Outcome {
    let violations = table.axiom_violations();
    let pass = violations.is_empty();
    if json {
        return json_outcome(&table.to_json(), pass);
    }
    let mut s = String::new();
    let entries = table.entries();
    let nontrivial = entries.iter().filter(|e| e.coefficients.len() > 1).count();
    let _ = writeln!(s, "S_{}: {} elements, {} nonzero polynomials, {} nonconstant", table.n(), table.perms().len(), entries.len(), nontrivial);
    for v in &violations {
        let _ = writeln!(s, "violation: {v}");
    }
    let _ = writeln!(s, "verdict: {}", verdict(pass));
    Outcome { text: s, pass }
}

pub fn promotion_identity(r: &PromotionIdentityReport, json: bool) -> Outcome {
    if json {
        return json_outcome(r, r.holds);
    }
    let mut s = String::new();
    let _ = writeln!(s, "shape {}: sign {}", r.shape, r.sign);
    let _ = writeln!(s, "long cycle matrix = sign * promotion: {}", verdict(r.long_cycle_holds));
    let _ = writeln!(s, "wrap-around generator rule: {}", verdict(r.wrap_generator_holds));
    let _ = writeln!(s, "leading coefficient {}: {}", r.leading_coefficient, verdict(r.leading_coefficient_holds));
    let _ = writeln!(s, "verdict: {}", verdict(r.holds));
    Outcome { text: s, pass: r.holds }
}

pub fn mu_invariance(r: &MuInvarianceReport, json: bool) -> Outcome {
    if json {
        return json_outcome(r, r.holds);
    }
    let mut s = String::new();
    let _ = writeln!(s, "shape {}: {} pairs, {} violations", r.shape, r.pairs_checked, r.violations.len());
    for v in &r.violations {
        let _ = writeln!(s, "  mu[{}, {}] = {} but {} after promotion", v.p, v.q, v.before, v.after);
    }
    let _ = writeln!(s, "verdict: {}", verdict(r.holds));
    Outcome { text: s, pass: r.holds }
}

#[derive(Serialize)]
struct TermJson {
    perm: String,
    coefficient: i64,
}

pub fn immanant(imm: &Immanant, json: bool) -> Outcome {
    let terms: Vec<TermJson> = imm
        .terms
        .iter()
        .map(|(p, &c)| TermJson { perm: p.to_string(), coefficient: c })
        .collect();
    if json {
        return json_outcome(&serde_json::json!({ "w": imm.w.to_string(), "terms": terms }), true);
    }
    let mut s = String::new();
    let _ = writeln!(s, "Imm_{} = sum over {} permutations", imm.w, terms.len());
    for t in &terms {
        let _ = writeln!(s, "  {:>4}  x[{}]", t.coefficient, t.perm);
    }
    Outcome { text: s, pass: true }
}

pub fn block_immanant(w: &Permutation, alpha: &Composition, beta: &Composition, poly: &MultiPoly, json: bool) -> Outcome {
    if json {
        let value = serde_json::json!({
            "w": w.to_string(),
            "alpha": alpha,
            "beta": beta,
            "polynomial": poly.to_string(),
        });
        return json_outcome(&value, true);
    }
    Outcome { text: format!("Imm_{w}(x_{{{alpha},{beta}}}) = {poly}\n"), pass: true }
}

pub fn vanishing(r: &VanishingReport, json: bool) -> Outcome {
    if json {
        return json_outcome(r, r.holds);
    }
    let mut s = String::new();
    let _ = writeln!(s, "S_{}: {} cases, {} mismatches", r.n, r.cases, r.mismatches.len());
    for (w, a) in &r.mismatches {
        let _ = writeln!(s, "  w={w} alpha={a}");
    }
    let _ = writeln!(s, "verdict: {}", verdict(r.holds));
    Outcome { text: s, pass: r.holds }
}

pub fn ribbon_count(shape: &Partition, m: usize, content: &Composition, count: u64, json: bool) -> Outcome {
    if json {
        let value = serde_json::json!({ "shape": shape, "m": m, "content": content, "count": count });
        return json_outcome(&value, true);
    }
    Outcome { text: format!("{m}-ribbon tableaux of shape {shape}, content {content}: {count}\n"), pass: true }
}

pub fn kf_check(r: &KfRootReport, json: bool) -> Outcome {
    if json {
        return json_outcome(r, r.holds);
    }
    let mut s = String::new();
    let _ = writeln!(s, "K[{}, {}] at a primitive {}-th root: {}", r.shape, r.content, r.d, r.value.as_deref().unwrap_or("?"));
    match r.ribbon_count {
        Some(c) => {
            let _ = writeln!(s, "ribbon tableaux: {c}");
        }
        None => {
            let _ = writeln!(s, "content not divisible; expecting zero");
        }
    }
    let _ = writeln!(s, "verdict: {}", verdict(r.holds));
    Outcome { text: s, pass: r.holds }
}
