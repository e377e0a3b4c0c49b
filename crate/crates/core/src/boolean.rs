//! Deciding whether an involution of `S_n` is Boolean.
//!
//! Four criteria are available and must agree:
//!
//! * avoidance of `4321`, `45312` and `456123`;
//! * absence of a long-crossing pair `(i, j)`, i.e. `i < j < w(j)` and
//!   `w(i) > j + 1`;
//! * the canonical reduced `S`-expression has no repeated letter;
//! * `B(w)` is a Boolean lattice (direct certification on the ideal).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bruhat::{ideal, is_boolean_lattice};
use crate::error::{Error, Result};
use crate::pattern::{self, is_induced, Occurrence, Pattern};
use crate::perm::{Involution, Permutation};
use crate::sexpr::{eval_sexpr, rank_profile, reduced_sexpr, RankProfile, SExpression};

/// Connected components as inclusive 1-based intervals `[a, b]`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub components: Vec<(usize, usize)>,
}

/// Classes of positions under the relation generated by
/// `sgn(i - j) = -sgn(w(i) - w(j))`, i.e. the components of the inversion graph.
pub fn connected_components(w: &Permutation) -> ComponentPartition {
    let n = w.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, j) in w.inversions().pairs {
        let (a, b) = (find(&mut parent, i - 1), find(&mut parent, j - 1));
        parent[a.max(b)] = a.min(b);
    }
    let mut components: Vec<(usize, usize)> = Vec::new();
    let mut last_root = usize::MAX;
    for k in 0..n {
        let root = find(&mut parent, k);
        if root == last_root {
            components.last_mut().expect("open component").1 = k + 1;
        } else {
            debug_assert_eq!(root, k, "components are intervals");
            components.push((k + 1, k + 1));
            last_root = root;
        }
    }
    ComponentPartition { components }
}

/// `w_D(i) = w(i)` for `i` in `D`, `i` otherwise.
pub fn restrict(w: &Permutation, d: &[usize]) -> Result<Permutation> {
    let mut word: Vec<usize> = (1..=w.n()).collect();
    for &i in d {
        if i == 0 || i > w.n() {
            return Err(Error::domain(format!("position {i} outside [1,{}]", w.n())));
        }
        word[i - 1] = w.at(i);
    }
    Permutation::new(word)
        .map_err(|_| Error::domain(format!("restriction of {w} to {d:?} is not a permutation")))
}

pub fn long_crossing_pairs(w: &Permutation) -> Vec<(usize, usize)> {
    let n = w.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if j < w.at(j) && w.at(i) > j + 1 {
                out.push((i, j));
            }
        }
    }
    out
}

fn first_long_crossing(w: &Permutation) -> Option<(usize, usize)> {
    let n = w.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| j < w.at(j) && w.at(i) > j + 1)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Patterns,
    #[default]
    LongCrossing,
    Sexpr,
    Poset,
    All,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "patterns" => Ok(Method::Patterns),
            "long-crossing" | "long_crossing" => Ok(Method::LongCrossing),
            "sexpr" => Ok(Method::Sexpr),
            "poset" => Ok(Method::Poset),
            "all" => Ok(Method::All),
            other => Err(Error::parse(
                other,
                "expected patterns, long-crossing, sexpr, poset or all",
            )),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Patterns => "patterns",
            Method::LongCrossing => "long-crossing",
            Method::Sexpr => "sexpr",
            Method::Poset => "poset",
            Method::All => "all",
        })
    }
}

/// Booleanness by a single criterion, no witnesses.
pub fn is_boolean_by(w: &Involution, method: Method) -> Result<bool> {
    match method {
        Method::Patterns => Ok(pattern::avoids_all(w, &Pattern::boolean_patterns())),
        Method::LongCrossing => Ok(first_long_crossing(w).is_none()),
        Method::Sexpr => Ok(!reduced_sexpr(w).has_repeated_letter()),
        Method::Poset => Ok(is_boolean_lattice(&ideal(w)?)),
        Method::All => {
            let results = [
                Method::Patterns,
                Method::LongCrossing,
                Method::Sexpr,
                Method::Poset,
            ]
            .into_iter()
            .map(|m| is_boolean_by(w, m).map(|b| (m, b)))
            .collect::<Result<Vec<_>>>()?;
            let first = results[0].1;
            if results.iter().any(|&(_, b)| b != first) {
                return Err(Error::InvariantViolation(format!(
                    "criteria disagree on {w}: {results:?}"
                )));
            }
            Ok(first)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub occurrence: Occurrence,
    pub induced: bool,
}

/// Outcome of [`is_boolean`] together with its certificates: a repeat-free
/// expression when Boolean, a long-crossing pair and a pattern occurrence
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanVerdict {
    pub element: Permutation,
    pub method: Method,
    pub is_boolean: bool,
    pub rank: RankProfile,
    pub long_crossing: Option<(usize, usize)>,
    pub pattern: Option<PatternWitness>,
    pub expression: Option<SExpression>,
}

/// An occurrence of one of the three forbidden patterns, preferring an
/// induced occurrence when one exists.
pub fn pattern_witness(w: &Permutation) -> Option<PatternWitness> {
    let patterns = Pattern::boolean_patterns();
    let mut fallback = None;
    for p in &patterns {
        for occ in pattern::occurrences(w, p) {
            let induced = is_induced(w, &occ).expect("occurrence comes from the search");
            if induced {
                return Some(PatternWitness {
                    pattern: p.clone(),
                    occurrence: occ,
                    induced,
                });
            }
            if fallback.is_none() {
                fallback = Some(PatternWitness {
                    pattern: p.clone(),
                    occurrence: occ,
                    induced,
                });
            }
        }
    }
    fallback
}

pub fn is_boolean(w: &Involution, method: Method) -> Result<BooleanVerdict> {
    let is_boolean = is_boolean_by(w, method)?;
    let mut verdict = BooleanVerdict {
        element: w.as_permutation().clone(),
        method,
        is_boolean,
        rank: rank_profile(w),
        long_crossing: None,
        pattern: None,
        expression: None,
    };
    if is_boolean {
        let expr = boolean_sexpr_builder(w).map_err(|e| {
            Error::InvariantViolation(format!("{method} says {w} is Boolean but: {e}"))
        })?;
        verdict.expression = Some(expr);
    } else {
        verdict.long_crossing = first_long_crossing(w);
        verdict.pattern = pattern_witness(w);
        if verdict.long_crossing.is_none() || verdict.pattern.is_none() {
            return Err(Error::InvariantViolation(format!(
                "{method} says {w} is not Boolean but witnesses are missing"
            )));
        }
    }
    Ok(verdict)
}

/// A repeat-free `S`-expression for a Boolean involution.
///
/// On a component `[a, b]` of local size `m` whose 2-cycles start at local
/// positions `i_1 < ... < i_k`, the expression is every letter of `1..m`
/// except `i_2, ..., i_k`, followed by `i_2, ..., i_k`; letters are shifted
/// by `a - 1` and components are concatenated in ascending order.
pub fn boolean_sexpr_builder(w: &Involution) -> Result<SExpression> {
    if let Some((i, j)) = first_long_crossing(w) {
        return Err(Error::domain(format!(
            "{w} is not Boolean: ({i},{j}) is a long-crossing pair"
        )));
    }
    let mut letters = Vec::with_capacity(w.n());
    for (a, b) in connected_components(w).components {
        let m = b - a + 1;
        if m == 1 {
            continue;
        }
        let starts: Vec<usize> = (a..=b)
            .filter(|&i| w.at(i) > i)
            .map(|i| i - a + 1)
            .collect();
        let tail = &starts[1..];
        letters.extend((1..m).filter(|l| !tail.contains(l)).map(|l| l + a - 1));
        letters.extend(tail.iter().map(|l| l + a - 1));
    }
    let expr = SExpression::new(letters);
    let check = eval_sexpr(&expr, w.n())?;
    if check != *w {
        return Err(Error::InvariantViolation(format!(
            "builder produced {expr} evaluating to {check}, not {w}"
        )));
    }
    Ok(expr)
}
