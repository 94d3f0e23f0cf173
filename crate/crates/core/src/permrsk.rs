//! Permutations, Bruhat order, descents and row-insertion RSK.
//!
//! Composition is functional: `(u * v)(i) = u(v(i))`. Left multiplication
//! by `s_i` swaps the values `i, i+1` in one-line notation; right
//! multiplication swaps positions `i, i+1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::tabcore::{Partition, Tableau};

/// A bijection of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return domain(format!("{one_line:?} is not a permutation"));
            }
            seen[x] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The longest element `i -> n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// Adjacent transposition `(i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut one_line: Vec<usize> = (1..=n).collect();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    /// The long cycle `i -> i + 1`, `n -> 1`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).map(|i| i % n + 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Image of `i` (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            one_line: other.one_line.iter().map(|&x| self.one_line[x - 1]).collect(),
        }
    }

    /// `s_i * self`: swap the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        Permutation {
            one_line: self
                .one_line
                .iter()
                .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
                .collect(),
        }
    }

    /// `self * s_i`: swap positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// `(D_L, D_R)`: `i` with `s_i w < w`, and `i` with `w s_i < w`.
    pub fn left_right_descents(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let n = self.n();
        let pos = self.inverse();
        let left = (1..n).filter(|&i| pos.apply(i) > pos.apply(i + 1)).collect();
        let right = (1..n).filter(|&i| self.apply(i) > self.apply(i + 1)).collect();
        (left, right)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(&lens)
    }

    /// All of `S_n` in lexicographic order, so that `all(n)[rank(w)] == w`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { one_line: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Lexicographic rank via the Lehmer code.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.one_line[i + 1..].iter().filter(|&&x| x < self.one_line[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in &self.one_line {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.one_line.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

/// Accepts "623415" (single digits) or "10,2,3,...".
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parsed: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let v = parsed.ok_or_else(|| Error::Domain(format!("cannot parse permutation {s:?}")))?;
        Permutation::new(v)
    }
}

/// Row-insert `x`, returning the row where a new cell was created.
fn row_insert(p: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(c) => std::mem::swap(&mut row[c], &mut x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    p.push(vec![x]);
    p.len() - 1
}

/// Insertion and recording tableaux.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in w.one_line().iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i + 1);
    }
    (
        Tableau::from_rows(p).expect("insertion keeps a partition shape"),
        Tableau::from_rows(q).expect("recording keeps a partition shape"),
    )
}

/// The permutation with insertion tableau `p` and recording tableau `q`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return domain("insertion and recording tableaux must share a shape");
    }
    if !p.is_standard() || !q.is_standard() {
        return domain("RSK inverse needs standard tableaux");
    }
    let n = p.size();
    let mut rows: Vec<Vec<usize>> = p.rows().to_vec();
    let qpos = q.positions();
    let mut word = vec![0; n];
    for i in (1..=n).rev() {
        let r = qpos[i].row - 1;
        let mut x = rows[r].pop().expect("recorded cell");
        for rr in (0..r).rev() {
            let row = &mut rows[rr];
            let c = row.iter().rposition(|&y| y < x).expect("bumping entry");
            std::mem::swap(&mut row[c], &mut x);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        word[i - 1] = x;
    }
    Permutation::new(word)
}

/// Strong Bruhat order via the rank-matrix criterion.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return domain("Bruhat comparison needs permutations of one size");
    }
    let n = u.n();
    // cu[j] = #{a <= i : u(a) >= j}
    let mut cu = vec![0usize; n + 2];
    let mut cv = vec![0usize; n + 2];
    for i in 1..=n {
        for j in 1..=u.apply(i) {
            cu[j] += 1;
        }
        for j in 1..=v.apply(i) {
            cv[j] += 1;
        }
        if (1..=n).any(|j| cu[j] > cv[j]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Column reading word: each column bottom to top, columns left to right.
pub fn reading_word(t: &Tableau) -> Result<Permutation> {
    if !t.is_standard() {
        return domain("reading word needs a standard tableau");
    }
    let shape = t.shape();
    let mut word = Vec::with_capacity(t.size());
    for c in 1..=shape.row_len(1) {
        for r in (0..shape.col_len(c)).rev() {
            word.push(t.rows()[r][c - 1]);
        }
    }
    Permutation::new(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt::evacuate;
    use crate::tabcore::enumerate_syt;
    use std::collections::{HashMap, HashSet, VecDeque};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::from_slices(rows).unwrap()
    }

    #[test]
    fn composition_convention() {
        // s_1 * 123 swaps values; 123 * s_1 swaps positions: equal for identity.
        let w = perm("231");
        let s1 = Permutation::simple(3, 1);
        assert_eq!(s1.compose(&w), w.left_mul_simple(1));
        assert_eq!(s1.compose(&w).to_string(), "132");
        assert_eq!(w.compose(&s1), w.right_mul_simple(1));
        assert_eq!(w.compose(&s1).to_string(), "321");
        let c = Permutation::long_cycle(4);
        let word = (1..4).fold(Permutation::identity(4), |acc, i| acc.compose(&Permutation::simple(4, i)));
        assert_eq!(word, c);
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(4));
    }

    #[test]
    fn rsk_example() {
        let w = perm("623415");
        let (p, q) = rsk(&w);
        assert_eq!(p, t(&[&[1, 3, 4, 5], &[2], &[6]]));
        assert_eq!(q, t(&[&[1, 3, 4, 6], &[2], &[5]]));
        assert_eq!(rsk_inverse(&p, &q).unwrap(), w);
        let (p, q) = rsk(&Permutation::identity(4));
        assert_eq!(p, t(&[&[1, 2, 3, 4]]));
        assert_eq!(q, p);
        let (p, q) = rsk(&Permutation::longest(4));
        assert_eq!(p, t(&[&[1], &[2], &[3], &[4]]));
        assert_eq!(q, p);
        let (_, dr) = w.left_right_descents();
        assert_eq!(dr, q_desc(&w));
    }

    fn q_desc(w: &Permutation) -> BTreeSet<usize> {
        rsk(w).1.descent_set().unwrap()
    }

    #[test]
    fn rsk_round_trip_all() {
        for n in 0..=6 {
            let all = Permutation::all(n);
            let mut seen = HashSet::new();
            for (i, w) in all.iter().enumerate() {
                assert_eq!(w.rank(), i);
                let (p, q) = rsk(w);
                assert!(p.is_standard() && q.is_standard() && p.shape() == q.shape());
                assert_eq!(&rsk_inverse(&p, &q).unwrap(), w);
                assert!(seen.insert((p, q)));
            }
        }
        let shape = Partition::rectangle(2, 2);
        let syt = enumerate_syt(&shape, 10).unwrap();
        for p in &syt {
            for q in &syt {
                assert_eq!(rsk(&rsk_inverse(p, q).unwrap()), (p.clone(), q.clone()));
            }
            let w = rsk_inverse(p, p).unwrap();
            assert_eq!(w.compose(&w), Permutation::identity(4));
        }
    }

    #[test]
    fn rsk_symmetries() {
        for n in 1..=5 {
            let wo = Permutation::longest(n);
            for w in Permutation::all(n) {
                let (p, q) = rsk(&w);
                assert_eq!(rsk(&w.inverse()), (q.clone(), p.clone()));
                let ep = evacuate(&p, n).unwrap();
                let eq = evacuate(&q, n).unwrap();
                // Complementing values and reversing positions.
                assert_eq!(rsk(&wo.compose(&w)), (ep.transpose(), q.transpose()));
                assert_eq!(rsk(&w.compose(&wo)), (p.transpose(), eq.transpose()));
                assert_eq!(rsk(&wo.compose(&w).compose(&wo)), (ep, eq));
                let (dl, dr) = w.left_right_descents();
                assert_eq!(dl, p.descent_set().unwrap());
                assert_eq!(dr, q.descent_set().unwrap());
                for i in 1..n {
                    assert_eq!(dl.contains(&i), w.left_mul_simple(i).length() < w.length());
                    assert_eq!(dr.contains(&i), w.right_mul_simple(i).length() < w.length());
                }
            }
        }
        assert_eq!(Permutation::identity(3).left_right_descents(), (BTreeSet::new(), BTreeSet::new()));
        let all: BTreeSet<usize> = (1..5).collect();
        assert_eq!(Permutation::longest(5).left_right_descents(), (all.clone(), all));
    }

    /// Bruhat order as the transitive closure of `w < w t` for
    /// transpositions `t` raising length.
    fn bruhat_oracle(n: usize) -> HashMap<Permutation, HashSet<Permutation>> {
        let all = Permutation::all(n);
        let mut above: HashMap<Permutation, HashSet<Permutation>> = HashMap::new();
        for w in &all {
            let mut seen = HashSet::from([w.clone()]);
            let mut queue = VecDeque::from([w.clone()]);
            while let Some(x) = queue.pop_front() {
                for i in 0..n {
                    for j in i + 1..n {
                        let mut y = x.one_line.clone();
                        y.swap(i, j);
                        let y = Permutation { one_line: y };
                        if y.length() > x.length() && seen.insert(y.clone()) {
                            queue.push_back(y);
                        }
                    }
                }
            }
            above.insert(w.clone(), seen);
        }
        above
    }

    #[test]
    fn bruhat_matches_chain_oracle() {
        for n in 1..=4 {
            let oracle = bruhat_oracle(n);
            for u in Permutation::all(n) {
                for v in Permutation::all(n) {
                    assert_eq!(bruhat_leq(&u, &v).unwrap(), oracle[&u].contains(&v), "{u} {v}");
                }
            }
        }
        assert!(bruhat_leq(&perm("213"), &perm("231")).unwrap());
        assert!(!bruhat_leq(&perm("231"), &perm("312")).unwrap());
        assert!(bruhat_leq(&perm("12"), &perm("123")).is_err());
    }

    #[test]
    fn reading_words() {
        assert_eq!(reading_word(&t(&[&[1, 3], &[2, 4]])).unwrap(), perm("2143"));
        assert_eq!(reading_word(&t(&[&[1, 2, 3]])).unwrap(), perm("123"));
        let words = |ts: &[Tableau]| -> BTreeSet<String> {
            ts.iter().map(|x| reading_word(x).unwrap().to_string()).collect()
        };
        let three = [
            t(&[&[1, 4], &[2, 5], &[3, 6]]),
            t(&[&[1, 2], &[3, 5], &[4, 6]]),
            t(&[&[1, 3], &[2, 4], &[5, 6]]),
        ];
        let two = [t(&[&[1, 3], &[2, 5], &[4, 6]]), t(&[&[1, 2], &[3, 4], &[5, 6]])];
        assert_eq!(words(&three), BTreeSet::from(["321654", "521643", "431652"].map(String::from)));
        assert_eq!(words(&two), BTreeSet::from(["421653", "531642"].map(String::from)));
        for n in 1..=7 {
            for shape in Partition::all_of_size(n) {
                for x in enumerate_syt(&shape, 10_000).unwrap() {
                    assert_eq!(rsk(&reading_word(&x).unwrap()).0, x);
                }
            }
        }
    }

    #[test]
    fn knuth_classes_are_insertion_fibres() {
        // Elementary Knuth moves on adjacent triples preserve P, and the
        // classes they generate are exactly the fibres of P.
        for n in 1..=6 {
            let all = Permutation::all(n);
            let mut class_of: HashMap<Permutation, usize> = HashMap::new();
            let mut next = 0;
            for w in &all {
                if class_of.contains_key(w) {
                    continue;
                }
                let mut queue = VecDeque::from([w.clone()]);
                class_of.insert(w.clone(), next);
                while let Some(x) = queue.pop_front() {
                    let v = &x.one_line;
                    for i in 0..n.saturating_sub(2) {
                        let (a, b, c) = (v[i], v[i + 1], v[i + 2]);
                        let mut moves = Vec::new();
                        // yzx <-> yxz with x < y < z, and xzy <-> zxy with x < y < z.
                        if (c < a && a < b) || (b < a && a < c) {
                            moves.push(i + 1);
                        }
                        if (a < c && c < b) || (b < c && c < a) {
                            moves.push(i);
                        }
                        for m in moves {
                            let mut y = v.clone();
                            y.swap(m, m + 1);
                            let y = Permutation { one_line: y };
                            if !class_of.contains_key(&y) {
                                class_of.insert(y.clone(), next);
                                queue.push_back(y);
                            }
                        }
                    }
                }
                next += 1;
            }
            for u in &all {
                for v in &all {
                    assert_eq!(class_of[u] == class_of[v], rsk(u).0 == rsk(v).0);
                }
            }
        }
    }
}
