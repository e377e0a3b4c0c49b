//! The underlined action of the generators on involutions and the rank
//! calculus built on it.
//!
//! For an involution `w` and an adjacent transposition `s = s_i`,
//! `w s̲ = w s` when `s w s = w` and `w s̲ = s w s` otherwise. Every
//! involution of `S_n` is reached from the identity by a word of such
//! letters (an `S`-expression); the minimal length is the rank
//! `ρ(w) = (ℓ(w) + ℓ'(w)) / 2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Involution;

/// A word of generator indices `i` (each standing for `s̲_i`, `1 <= i < n`).
/// The ambient size is supplied separately at evaluation time.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SExpression {
    pub letters: Vec<usize>,
}

impl SExpression {
    pub fn new(letters: Vec<usize>) -> Self {
        SExpression { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_repeated_letter(&self) -> bool {
        let mut seen = BTreeSet::new();
        !self.letters.iter().all(|l| seen.insert(*l))
    }

    pub fn letter_set(&self) -> BTreeSet<usize> {
        self.letters.iter().copied().collect()
    }
}

impl From<Vec<usize>> for SExpression {
    fn from(letters: Vec<usize>) -> Self {
        SExpression { letters }
    }
}

impl FromStr for SExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SExpression::default());
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>()
                    .map_err(|_| Error::parse(t, "not a generator index"))
            })
            .collect::<Result<Vec<_>>>()
            .map(SExpression::new)
    }
}

impl fmt::Display for SExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub rank: usize,
    pub coxeter_length: usize,
    pub absolute_length: usize,
}

fn check_letter(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::domain(format!(
            "generator index {i} outside 1..{} for n = {n}",
            n.max(1)
        )));
    }
    Ok(())
}

pub fn apply_underline(w: &Involution, i: usize) -> Result<Involution> {
    check_letter(w.n(), i)?;
    let conj = w.mul_adjacent_left(i).mul_adjacent_right(i);
    let next = if conj == *w.as_permutation() {
        w.mul_adjacent_right(i)
    } else {
        conj
    };
    Ok(Involution::from_perm_unchecked(next))
}

/// Left-to-right fold of the action starting at the identity of `S_n`.
pub fn eval_sexpr(expr: &SExpression, n: usize) -> Result<Involution> {
    expr.letters
        .iter()
        .try_fold(Involution::identity(n), |w, &i| apply_underline(&w, i))
}

pub fn rank_profile(w: &Involution) -> RankProfile {
    let coxeter_length = w.inversion_count();
    let absolute_length = w.absolute_length();
    debug_assert_eq!((coxeter_length + absolute_length) % 2, 0);
    RankProfile {
        rank: (coxeter_length + absolute_length) / 2,
        coxeter_length,
        absolute_length,
    }
}

pub fn rank(w: &Involution) -> usize {
    rank_profile(w).rank
}

pub fn is_reduced(expr: &SExpression, n: usize) -> Result<bool> {
    Ok(expr.len() == rank(&eval_sexpr(expr, n)?))
}

/// A canonical reduced expression: peel off the smallest letter that lowers
/// the rank until the identity is reached, then reverse.
pub fn reduced_sexpr(w: &Involution) -> SExpression {
    let n = w.n();
    let mut current = w.clone();
    let mut r = rank(&current);
    let mut letters = Vec::with_capacity(r);
    while r > 0 {
        let (i, lower) = (1..n)
            .map(|i| (i, apply_underline(&current, i).expect("letter in range")))
            .find(|(_, u)| rank(u) + 1 == r)
            .expect("a non-identity involution has a descent");
        letters.push(i);
        current = lower;
        r -= 1;
    }
    letters.reverse();
    SExpression::new(letters)
}

/// Largest rank accepted by [`all_reduced_sexprs`].
pub const ALL_REDUCED_RANK_LIMIT: usize = 12;

/// Every reduced expression of `w`, sorted.
pub fn all_reduced_sexprs(w: &Involution) -> Result<Vec<SExpression>> {
    let r = rank(w);
    if r > ALL_REDUCED_RANK_LIMIT {
        return Err(Error::Resource(format!(
            "rank {r} exceeds the reduced-expression enumeration limit {ALL_REDUCED_RANK_LIMIT}"
        )));
    }
    fn dfs(w: &Involution, r: usize, suffix: &mut Vec<usize>, out: &mut Vec<SExpression>) {
        if r == 0 {
            out.push(SExpression::new(suffix.iter().rev().copied().collect()));
            return;
        }
        for i in 1..w.n() {
            let u = apply_underline(w, i).expect("letter in range");
            if rank(&u) + 1 == r {
                suffix.push(i);
                dfs(&u, r - 1, suffix, out);
                suffix.pop();
            }
        }
    }
    let mut out = Vec::new();
    dfs(w, r, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// The letters occurring in (every) reduced expression of `w`.
pub fn support(w: &Involution) -> BTreeSet<usize> {
    reduced_sexpr(w).letter_set()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn inv(s: &str) -> Involution {
        s.parse().unwrap()
    }

    fn ex(s: &str) -> SExpression {
        s.parse().unwrap()
    }

    #[test]
    fn action_examples() {
        assert_eq!(
            apply_underline(&Involution::identity(3), 1).unwrap(),
            inv("213")
        );
        assert_eq!(eval_sexpr(&ex("1,2,3,2"), 4).unwrap(), inv("4321"));
        assert_eq!(apply_underline(&inv("3214"), 3).unwrap(), inv("4231"));
        assert!(apply_underline(&inv("321"), 3).is_err());
        assert!(apply_underline(&inv("321"), 0).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            eval_sexpr(&SExpression::default(), 5).unwrap(),
            Involution::identity(5)
        );
        assert_eq!(eval_sexpr(&ex("1,3,2"), 4).unwrap(), inv("3412"));
        assert!(eval_sexpr(&ex("1,4"), 4).is_err());
    }

    #[test]
    fn rank_examples() {
        let zero = RankProfile {
            rank: 0,
            coxeter_length: 0,
            absolute_length: 0,
        };
        assert_eq!(rank_profile(&Involution::identity(4)), zero);
        let p = rank_profile(&inv("4321"));
        assert_eq!((p.rank, p.coxeter_length, p.absolute_length), (4, 6, 2));
        let p = rank_profile(&inv("321"));
        assert_eq!((p.rank, p.coxeter_length, p.absolute_length), (2, 3, 1));
    }

    #[test]
    fn reduced_examples() {
        assert!(is_reduced(&ex("1,2,3,2"), 4).unwrap());
        assert!(!is_reduced(&ex("1,1"), 4).unwrap());
        assert!(is_reduced(&ex("1,3,2"), 4).unwrap());

        assert!(reduced_sexpr(&Involution::identity(4)).is_empty());
        let e = reduced_sexpr(&inv("4321"));
        assert_eq!(e.len(), 4);
        assert_eq!(eval_sexpr(&e, 4).unwrap(), inv("4321"));
        let e = reduced_sexpr(&inv("2143"));
        assert_eq!(e.len(), 2);
        assert_eq!(e.letter_set(), BTreeSet::from([1, 3]));
    }

    #[test]
    fn all_reduced_examples() {
        let all = all_reduced_sexprs(&inv("4321")).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|e| e.has_repeated_letter()));
        assert!(all.iter().all(|e| eval_sexpr(e, 4).unwrap() == inv("4321")));

        let all = all_reduced_sexprs(&inv("3412")).unwrap();
        assert!(!all.is_empty());
        assert!(all
            .iter()
            .all(|e| !e.has_repeated_letter() && e.letter_set() == BTreeSet::from([1, 2, 3])));

        assert_eq!(all_reduced_sexprs(&inv("213")).unwrap(), vec![ex("1")]);

        let w0 = Permutation::new((1..=10).rev().collect()).unwrap();
        let w0 = Involution::try_from(w0).unwrap();
        assert!(matches!(all_reduced_sexprs(&w0), Err(Error::Resource(_))));
    }

    #[test]
    fn support_examples() {
        assert!(support(&Involution::identity(3)).is_empty());
        assert_eq!(support(&inv("2143")), BTreeSet::from([1, 3]));
        assert_eq!(support(&inv("4321")), BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn expression_text() {
        assert_eq!(ex("1,2,3,2").to_string(), "1,2,3,2");
        assert!("1,x".parse::<SExpression>().is_err());
    }
}
