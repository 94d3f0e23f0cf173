use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::qpoly::{mn_character, q_catalan};
use crate::tabcore::{Cell, Partition, Tableau};

use super::dihedral::{longest_cycle_type, reflection_cycle_type};
use super::{verify_csp, CSPReport, FiniteAction};

/// Largest `n` for which handshake patterns and noncrossing partitions are
/// enumerated.
pub const MAX_CATALAN_RANK: usize = 8;

fn check_rank(n: usize) -> Result<()> {
    if n > MAX_CATALAN_RANK {
        return Err(Error::Resource {
            what: "Catalan family rank".into(),
            needed: n as u64,
            cap: MAX_CATALAN_RANK as u64,
        });
    }
    Ok(())
}

/// A noncrossing perfect matching of `1..=2n` placed clockwise on a circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HandshakePattern {
    pairs: Vec<(usize, usize)>,
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

impl HandshakePattern {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n2 = 2 * pairs.len();
        let mut seen = vec![false; n2 + 1];
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(x, y) in &pairs {
            let (a, b) = (x.min(y), x.max(y));
            if a == 0 || b > n2 || a == b || seen[a] || seen[b] {
                return domain(format!("{pairs:?} is not a perfect matching of 1..={n2}"));
            }
            seen[a] = true;
            seen[b] = true;
            norm.push((a, b));
        }
        norm.sort_unstable();
        for (i, &p) in norm.iter().enumerate() {
            if norm[i + 1..].iter().any(|&q| crosses(p, q)) {
                return domain(format!("{pairs:?} has crossing arcs"));
            }
        }
        Ok(HandshakePattern { pairs: norm })
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    fn relabel(&self, f: impl Fn(usize) -> usize) -> HandshakePattern {
        HandshakePattern::new(self.pairs.iter().map(|&(a, b)| (f(a), f(b))).collect())
            .expect("circle symmetries keep matchings noncrossing")
    }

    /// Clockwise rotation by one seat: `i -> i + 1`, `2n -> 1`.
    pub fn rotate(&self) -> HandshakePattern {
        let m = 2 * self.n();
        self.relabel(|i| i % m + 1)
    }

    /// Reflection across the line separating `2n, 1` from `n, n + 1`.
    pub fn reflect(&self) -> HandshakePattern {
        let m = 2 * self.n();
        self.relabel(|i| m + 1 - i)
    }

    /// Two-row tableau: smaller hands on top, larger hands below.
    pub fn to_tableau(&self) -> Tableau {
        let top: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        let mut bottom: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        bottom.sort_unstable();
        let rows = if top.is_empty() { vec![] } else { vec![top, bottom] };
        Tableau::from_rows(rows).expect("noncrossing matchings give standard tableaux")
    }

    /// Inverse of [`HandshakePattern::to_tableau`]: each bottom entry shakes
    /// hands with the latest unmatched top entry.
    pub fn from_tableau(t: &Tableau) -> Result<HandshakePattern> {
        let shape = t.shape();
        if !t.is_standard() || shape.len() > 2 || shape.row_len(1) != shape.row_len(2) {
            return domain("handshakes come from standard two-row rectangles");
        }
        let top: BTreeSet<usize> = t.rows().first().map(|r| r.iter().copied().collect()).unwrap_or_default();
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        for i in 1..=t.size() {
            if top.contains(&i) {
                stack.push(i);
            } else {
                pairs.push((stack.pop().expect("standardness"), i));
            }
        }
        HandshakePattern::new(pairs)
    }
}

impl fmt::Display for HandshakePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All handshake patterns on `2n` seats.
pub fn all_handshakes(n: usize) -> Result<Vec<HandshakePattern>> {
    check_rank(n)?;
    fn rec(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let Some((&first, rest)) = points.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        // partner splits the remaining points into inside and outside runs
        for j in (0..rest.len()).step_by(2) {
            let (inside, tail) = rest.split_at(j);
            let outside = &tail[1..];
            for a in rec(inside) {
                for b in rec(outside) {
                    let mut v = vec![(first, tail[0])];
                    v.extend(a.iter().copied());
                    v.extend(b);
                    out.push(v);
                }
            }
        }
        out
    }
    let points: Vec<usize> = (1..=2 * n).collect();
    let mut out: Vec<HandshakePattern> =
        rec(&points).into_iter().map(HandshakePattern::new).collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// A set partition of `1..=n` with no two blocks crossing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let p = Self::canonical(n, blocks)?;
        if !p.is_noncrossing() {
            return domain(format!("{p} is crossing"));
        }
        Ok(p)
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x] {
                    return domain(format!("{blocks:?} is not a set partition of 1..={n}"));
                }
                seen[x] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) || blocks.iter().any(Vec::is_empty) {
            return domain(format!("{blocks:?} is not a set partition of 1..={n}"));
        }
        blocks.sort();
        Ok(NoncrossingPartition { n, blocks })
    }

    fn block_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                of[x] = i;
            }
        }
        of
    }

    fn is_noncrossing(&self) -> bool {
        let of = self.block_of();
        let n = self.n;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        if of[a] == of[c] && of[b] == of[d] && of[a] != of[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The coarsest noncrossing partition of the points `1'..n'`, with `i'`
    /// sitting between `i` and `i + 1`, whose blocks cross no block of
    /// `self`.
    pub fn kreweras(&self) -> NoncrossingPartition {
        let n = self.n;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 1..=n {
            for j in i + 1..=n {
                // the arc from i' to j' separates {i+1..j} from the rest
                let separated = self.blocks.iter().all(|b| {
                    let inside = b.iter().filter(|&&x| x > i && x <= j).count();
                    inside == 0 || inside == b.len()
                });
                if separated {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 1..=n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        NoncrossingPartition::new(n, groups.into_values().collect()).expect("complements are noncrossing")
    }

    /// Reflection through the diameter at `1`: `i -> 2 - i mod n`.
    pub fn reflect(&self) -> NoncrossingPartition {
        let n = self.n;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| (n + 1 - x) % n + 1).collect())
            .collect();
        NoncrossingPartition::new(n, blocks).expect("reflections keep partitions noncrossing")
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &NoncrossingPartition) -> bool {
        let of = other.block_of();
        self.blocks.iter().all(|b| b.iter().all(|&x| of[x] == of[b[0]]))
    }

    /// Common refinement; noncrossing whenever both inputs are.
    pub fn meet(&self, other: &NoncrossingPartition) -> NoncrossingPartition {
        let of = other.block_of();
        let mut blocks = Vec::new();
        for b in &self.blocks {
            let mut parts: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for &x in b {
                parts.entry(of[x]).or_default().push(x);
            }
            blocks.extend(parts.into_values());
        }
        NoncrossingPartition::new(self.n, blocks).expect("meets of noncrossing partitions are noncrossing")
    }

    /// Least noncrossing partition coarser than both.
    pub fn join(&self, other: &NoncrossingPartition) -> NoncrossingPartition {
        let n = self.n;
        let mut of: Vec<usize> = (0..=n).collect();
        let merge = |of: &mut Vec<usize>, x: usize, y: usize| {
            let (a, b) = (of[x], of[y]);
            if a != b {
                for v in of.iter_mut() {
                    if *v == a {
                        *v = b;
                    }
                }
            }
        };
        for p in [self, other] {
            for b in &p.blocks {
                for &x in &b[1..] {
                    merge(&mut of, b[0], x);
                }
            }
        }
        loop {
            let mut changed = false;
            'scan: for a in 1..=n {
                for b in a + 1..=n {
                    for c in b + 1..=n {
                        for d in c + 1..=n {
                            if of[a] == of[c] && of[b] == of[d] && of[a] != of[b] {
                                merge(&mut of, a, b);
                                changed = true;
                                break 'scan;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &g) in of.iter().enumerate().skip(1) {
            groups.entry(g).or_default().push(x);
        }
        NoncrossingPartition::new(n, groups.into_values().collect()).expect("closure is noncrossing")
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// All noncrossing partitions of `1..=n`.
pub fn all_noncrossing(n: usize) -> Result<Vec<NoncrossingPartition>> {
    check_rank(n)?;
    // restricted growth strings
    fn rec(i: usize, n: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let k = rgs.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); k];
            for (x, &b) in rgs.iter().enumerate() {
                blocks[b].push(x + 1);
            }
            out.push(blocks);
            return;
        }
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        for b in 0..=k {
            rgs.push(b);
            rec(i + 1, n, rgs, out);
            rgs.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, n, &mut Vec::new(), &mut raw);
    let mut out: Vec<NoncrossingPartition> = raw
        .into_iter()
        .filter_map(|b| NoncrossingPartition::new(n, b).ok())
        .collect();
    out.sort();
    Ok(out)
}

/// The doubling map read in mirror image: element `i` becomes seats
/// `2n - 2i + 2` and `2n - 2i + 1`, and consecutive members of a block are
/// joined across the gap between them. Kreweras complementation becomes
/// rotation by one seat.
pub fn noncrossing_to_handshake(p: &NoncrossingPartition) -> HandshakePattern {
    let mut pairs = Vec::with_capacity(p.n());
    for b in p.blocks() {
        let t = b.len();
        for j in 0..t {
            pairs.push((2 * b[j], 2 * b[(j + 1) % t] - 1));
        }
    }
    HandshakePattern::new(pairs).expect("block boundaries do not cross").reflect()
}

/// Rotation on handshake patterns of `2n` seats.
pub fn handshake_action(n: usize) -> Result<FiniteAction<HandshakePattern>> {
    FiniteAction::from_map(all_handshakes(n)?, |h| Ok(h.rotate()))
}

/// Kreweras complementation on noncrossing partitions of `n`.
pub fn noncrossing_action(n: usize) -> Result<FiniteAction<NoncrossingPartition>> {
    FiniteAction::from_map(all_noncrossing(n)?, |p| Ok(p.kreweras()))
}

pub fn handshake_csp(n: usize) -> Result<CSPReport> {
    if n == 0 {
        return domain("handshakes need at least one pair");
    }
    let a = handshake_action(n)?;
    Ok(verify_csp(&a, &q_catalan(n)?, 2 * n)?.labelled("handshake", &[("n", n.to_string())]))
}

pub fn noncrossing_csp(n: usize) -> Result<CSPReport> {
    if n == 0 {
        return domain("noncrossing partitions need n >= 1");
    }
    let a = noncrossing_action(n)?;
    Ok(verify_csp(&a, &q_catalan(n)?, 2 * n)?.labelled("noncrossing", &[("n", n.to_string())]))
}

/// `i` such that `i + 1` sits strictly north and weakly east of `i`.
pub fn ascent_set(t: &Tableau) -> Result<BTreeSet<usize>> {
    if !t.is_standard() {
        return domain("ascents need a standard tableau");
    }
    let pos: Vec<Cell> = t.positions();
    Ok((1..t.size())
        .filter(|&i| pos[i + 1].row < pos[i].row && pos[i + 1].col >= pos[i].col)
        .collect())
}

/// Fixed points of the reflection `r` and of `r s` against characters of
/// `S_{2n}` on the shape `(n, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionReport {
    pub family: String,
    pub n: usize,
    pub fixed_r: u64,
    pub predicted_r: String,
    pub fixed_rs: u64,
    pub predicted_rs: String,
    pub verdict: bool,
}

fn fixed<T: PartialEq>(set: &[T], f: impl Fn(&T) -> T) -> u64 {
    set.iter().filter(|x| &f(x) == *x).count() as u64
}

/// `family` is `"handshake"` (rotation and the seat reflection) or
/// `"noncrossing"` (Kreweras complement and the reflection through `1`).
pub fn reflection_report(family: &str, n: usize) -> Result<ReflectionReport> {
    if n == 0 {
        return domain("reflections need n >= 1");
    }
    let (fixed_r, fixed_rs) = match family {
        "handshake" => {
            let set = all_handshakes(n)?;
            (fixed(&set, HandshakePattern::reflect), fixed(&set, |h| h.rotate().reflect()))
        }
        "noncrossing" => {
            let set = all_noncrossing(n)?;
            (fixed(&set, NoncrossingPartition::reflect), fixed(&set, |p| p.kreweras().reflect()))
        }
        other => return domain(format!("unknown family {other}")),
    };
    let shape = Partition::rectangle(2, n);
    let sign = BigInt::from(if n.is_multiple_of(2) { 1 } else { -1 });
    let predicted_r = sign * mn_character(&shape, &longest_cycle_type(2 * n))?;
    let predicted_rs = mn_character(&shape, &reflection_cycle_type(2 * n))?;
    Ok(ReflectionReport {
        family: family.into(),
        n,
        verdict: predicted_r == BigInt::from(fixed_r) && predicted_rs == BigInt::from(fixed_rs),
        fixed_r,
        predicted_r: predicted_r.to_string(),
        fixed_rs,
        predicted_rs: predicted_rs.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt::{evacuate, promote};
    use crate::tabcore::{enumerate_syt, DEFAULT_ENUMERATION_CAP};
    use std::collections::{HashMap, HashSet};

    const CATALAN: [usize; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];

    #[test]
    fn catalan_counts() {
        for n in 0..=8 {
            assert_eq!(all_handshakes(n).unwrap().len(), CATALAN[n]);
            assert_eq!(all_noncrossing(n).unwrap().len(), CATALAN[n]);
        }
        assert!(all_handshakes(9).is_err());
        assert!(HandshakePattern::new(vec![(1, 3), (2, 4)]).is_err());
        assert!(NoncrossingPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
    }

    #[test]
    fn rotation_and_kreweras_sieve() {
        for n in 1..=6 {
            assert!(handshake_csp(n).unwrap().verdict, "H_{n}");
            assert!(noncrossing_csp(n).unwrap().verdict, "NC({n})");
            let a = noncrossing_action(n).unwrap();
            assert_eq!(2 * n % a.order(), 0);
            // the square of the complement rotates backwards
            for p in all_noncrossing(n).unwrap() {
                let rotated = NoncrossingPartition::new(
                    n,
                    p.blocks().iter().map(|b| b.iter().map(|&x| (x + n - 2) % n + 1).collect()).collect(),
                )
                .unwrap();
                assert_eq!(p.kreweras().kreweras(), rotated);
            }
        }
    }

    #[test]
    fn kreweras_is_a_lattice_complement() {
        for n in 1..=5 {
            let top = NoncrossingPartition::new(n, vec![(1..=n).collect()]).unwrap();
            let bottom = NoncrossingPartition::new(n, (1..=n).map(|i| vec![i]).collect()).unwrap();
            let all = all_noncrossing(n).unwrap();
            for p in &all {
                let k = p.kreweras();
                assert_eq!(p.join(&k), top, "{p}");
                assert_eq!(p.meet(&k), bottom, "{p}");
            }
            // join is the least upper bound inside NC(n)
            for p in &all {
                for q in &all {
                    let j = p.join(q);
                    assert!(p.refines(&j) && q.refines(&j));
                    for r in &all {
                        if p.refines(r) && q.refines(r) {
                            assert!(j.refines(r));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn doubling_conjugates_complement_to_rotation() {
        for n in 1..=6 {
            let all = all_noncrossing(n).unwrap();
            let images: HashSet<HandshakePattern> = all.iter().map(noncrossing_to_handshake).collect();
            assert_eq!(images.len(), CATALAN[n]);
            for p in &all {
                assert_eq!(noncrossing_to_handshake(&p.kreweras()), noncrossing_to_handshake(p).rotate(), "{p}");
            }
        }
    }

    #[test]
    fn tableau_bijection_intertwines_rotation_with_promotion() {
        for n in 1..=6 {
            let mut seen = HashSet::new();
            for h in all_handshakes(n).unwrap() {
                let t = h.to_tableau();
                assert!(t.is_standard());
                assert!(seen.insert(t.clone()));
                assert_eq!(HandshakePattern::from_tableau(&t).unwrap(), h);
                assert_eq!(promote(&t, 2 * n).unwrap(), h.rotate().to_tableau(), "{h}");
                assert_eq!(evacuate(&t, 2 * n).unwrap(), h.reflect().to_tableau(), "{h}");
            }
        }
    }

    #[test]
    fn ascents_and_extended_descents_separate_tableaux() {
        for n in 1..=6 {
            let shape = Partition::rectangle(2, n);
            let mut seen = HashMap::new();
            for t in enumerate_syt(&shape, DEFAULT_ENUMERATION_CAP).unwrap() {
                let key = (ascent_set(&t).unwrap(), t.extended_descent_set().unwrap());
                assert!(seen.insert(key, t.clone()).is_none());
            }
        }
    }

    #[test]
    fn reflection_counts() {
        for n in 1..=6 {
            let h = reflection_report("handshake", n).unwrap();
            let p = reflection_report("noncrossing", n).unwrap();
            assert!(h.verdict, "{h:?}");
            assert!(p.verdict, "{p:?}");
            assert_eq!((h.fixed_r, h.fixed_rs), (p.fixed_r, p.fixed_rs));
        }
        assert!(reflection_report("other", 2).is_err());
        for n in 1..=5 {
            let h = reflection_report("handshake", n).unwrap();
            let shape = Partition::rectangle(2, n);
            let d = super::super::dihedral_syt_report(&shape, DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!((d.rows[0].fixed, d.rows[1].fixed), (h.fixed_r, h.fixed_rs));
        }
    }
}
