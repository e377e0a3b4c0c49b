//! Signed permutations (the hyperoctahedral group `S^B_n`) and their
//! Boolean involutions.
//!
//! A signed permutation is stored by its window `(pi(1), ..., pi(n))`; the
//! values on negative arguments follow from `pi(-i) = -pi(i)`.
//!
//! The embedding `phi` into the symmetric group on `[±n]` relabels the
//! domain `-n, ..., -1, 1, ..., n` as `1, ..., 2n` in that order, so the
//! image is an ordinary permutation of `[2n]`. Under this relabelling the
//! type-A generators become adjacent transpositions: `s_0 = (1, -1)` is
//! position `n`, `s_i = (i, i+1)` is position `n + i` and
//! `s'_i = (-i, -i-1)` is position `n - i`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolean::{self, BooleanVerdict, Method};
use crate::error::{Error, Result};
use crate::pattern::{self, SignedOccurrence, SignedPattern};
use crate::perm::{Involution, Permutation};
use crate::sexpr::apply_underline;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignedJson", into = "SignedJson")]
pub struct SignedPermutation {
    window: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SignedJson {
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<SignedJson> for SignedPermutation {
    type Error = Error;

    fn try_from(value: SignedJson) -> Result<Self> {
        if value.n != value.window.len() {
            return Err(Error::domain(format!(
                "declared n = {} but window has {} entries",
                value.n,
                value.window.len()
            )));
        }
        SignedPermutation::new(value.window)
    }
}

impl From<SignedPermutation> for SignedJson {
    fn from(p: SignedPermutation) -> Self {
        SignedJson {
            n: p.window.len(),
            window: p.window,
        }
    }
}

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::parse(
                    v.to_string(),
                    format!("|value| out of range 1..={n}"),
                ));
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::parse(v.to_string(), "absolute value repeated"));
            }
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    /// The Coxeter generator `s^B_i`: `s_0` negates 1, `s_i` (`i >= 1`)
    /// exchanges `i` and `i + 1` together with their negatives.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::domain(format!("generator s{i} out of range 0..{n}")));
        }
        let mut g = SignedPermutation::identity(n);
        if i == 0 {
            g.window[0] = -1;
        } else {
            g.window.swap(i - 1, i);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `pi(x)` for `x` in `[±n]`.
    pub fn eval(&self, x: i64) -> i64 {
        let v = self.window[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::domain(format!(
                "size mismatch: {} vs {}",
                self.n(),
                other.n()
            )));
        }
        Ok(SignedPermutation {
            window: other.window.iter().map(|&x| self.eval(x)).collect(),
        })
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n() as i64).all(|i| self.eval(self.eval(i)) == i)
    }

    pub fn phi_embed(&self) -> PhiImage {
        let n = self.n() as i64;
        let label = |x: i64| (if x < 0 { x + n + 1 } else { x + n }) as usize;
        let mut word = vec![0; 2 * self.n()];
        for x in (-n..=n).filter(|&x| x != 0) {
            word[label(x) - 1] = label(self.eval(x));
        }
        PhiImage {
            perm: Permutation::from_word_unchecked(word),
        }
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPermutation::identity(0));
        }
        let window = s
            .split(',')
            .map(|token| {
                let token = token.trim();
                if token.is_empty() {
                    return Err(Error::parse(token, "empty token"));
                }
                token
                    .parse::<i64>()
                    .map_err(|_| Error::parse(token, "not an integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// `phi(w)` as a permutation of `[2n]`; always centrally symmetric:
/// `perm(2n + 1 - i) = 2n + 1 - perm(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiImage {
    pub perm: Permutation,
}

impl PhiImage {
    pub fn is_centrally_symmetric(&self) -> bool {
        let m = self.perm.n();
        (1..=m).all(|i| self.perm.at(m + 1 - i) == m + 1 - self.perm.at(i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignedPermutation", into = "SignedPermutation")]
pub struct SignedInvolution(SignedPermutation);

impl SignedInvolution {
    pub fn identity(n: usize) -> Self {
        SignedInvolution(SignedPermutation::identity(n))
    }

    pub(crate) fn from_unchecked(w: SignedPermutation) -> Self {
        debug_assert!(w.is_involution());
        SignedInvolution(w)
    }

    pub fn as_signed(&self) -> &SignedPermutation {
        &self.0
    }

    pub fn phi_involution(&self) -> Involution {
        Involution::from_perm_unchecked(self.0.phi_embed().perm)
    }
}

impl TryFrom<SignedPermutation> for SignedInvolution {
    type Error = Error;

    fn try_from(w: SignedPermutation) -> Result<Self> {
        if w.is_involution() {
            Ok(SignedInvolution(w))
        } else {
            Err(Error::domain(format!("{w} is not an involution")))
        }
    }
}

impl From<SignedInvolution> for SignedPermutation {
    fn from(w: SignedInvolution) -> Self {
        w.0
    }
}

impl Deref for SignedInvolution {
    type Target = SignedPermutation;

    fn deref(&self) -> &SignedPermutation {
        &self.0
    }
}

impl FromStr for SignedInvolution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<SignedPermutation>()?.try_into()
    }
}

impl fmt::Display for SignedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The type-B action `w s^B_i`: multiply when `s w s = w`, conjugate otherwise.
pub fn apply_underline_b(w: &SignedInvolution, i: usize) -> Result<SignedInvolution> {
    let s = SignedPermutation::generator(w.n(), i)?;
    let conj = s.compose(&w.0)?.compose(&s)?;
    let next = if conj == w.0 { w.0.compose(&s)? } else { conj };
    Ok(SignedInvolution::from_unchecked(next))
}

/// Right-hand side of the transfer law for the type-B action, computed
/// entirely inside `S([±n])` from `phi(w)`:
///
/// * `i = 0`: `phi(w) s_0`
/// * `i >= 1`: `phi(w) s_i` when `s_i phi(w) s_i = s'_i phi(w) s'_i != phi(w)`,
///   otherwise `phi(w) s_i s'_i` (all with the underlined action).
pub fn phi_action_rhs(w: &SignedInvolution, i: usize) -> Result<Permutation> {
    let n = w.n();
    if i >= n {
        return Err(Error::domain(format!("generator s{i} out of range 0..{n}")));
    }
    let image = w.phi_involution();
    if i == 0 {
        return Ok(apply_underline(&image, n)?.into_permutation());
    }
    let (a, b) = (n + i, n - i);
    let conj_a = image.mul_adjacent_left(a).mul_adjacent_right(a);
    let conj_b = image.mul_adjacent_left(b).mul_adjacent_right(b);
    let rhs = if conj_a == conj_b && conj_a != *image.as_permutation() {
        apply_underline(&image, a)?
    } else {
        apply_underline(&apply_underline(&image, a)?, b)?
    };
    Ok(rhs.into_permutation())
}

/// A type-B `S`-expression without repeated letters evaluating to `w`, if
/// one exists. Exhaustive over repeat-free words; guarded at `n <= 8`.
pub fn repeat_free_expression_b(w: &SignedInvolution) -> Result<Option<Vec<usize>>> {
    let n = w.n();
    if n > 8 {
        return Err(Error::Resource(format!(
            "repeat-free search over S^B_{n} (limit n <= 8)"
        )));
    }
    fn dfs(
        current: &SignedInvolution,
        target: &SignedInvolution,
        used: &mut Vec<bool>,
        word: &mut Vec<usize>,
    ) -> Result<bool> {
        if current == target {
            return Ok(true);
        }
        for i in 0..used.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            word.push(i);
            if dfs(&apply_underline_b(current, i)?, target, used, word)? {
                return Ok(true);
            }
            word.pop();
            used[i] = false;
        }
        Ok(false)
    }
    let mut used = vec![false; n];
    let mut word = Vec::new();
    let found = dfs(&SignedInvolution::identity(n), w, &mut used, &mut word)?;
    Ok(found.then_some(word))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignedMethod {
    /// Booleanness of `phi(w)` in the symmetric group on `[±n]`.
    Phi,
    /// Avoidance of [`pattern::TYPE_B_PATTERNS`].
    SignedPatterns,
    /// Existence of a repeat-free type-B `S`-expression.
    Sexpr,
    /// Every method; disagreement is an invariant violation.
    All,
}

impl FromStr for SignedMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(SignedMethod::Phi),
            "signed-patterns" | "signed_patterns" | "patterns" => Ok(SignedMethod::SignedPatterns),
            "sexpr" => Ok(SignedMethod::Sexpr),
            "all" => Ok(SignedMethod::All),
            other => Err(Error::parse(
                other,
                "expected phi, signed-patterns, sexpr or all",
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedPatternWitness {
    pub pattern: SignedPattern,
    pub occurrence: SignedOccurrence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedVerdict {
    pub element: SignedPermutation,
    pub is_boolean: bool,
    pub phi_image: Permutation,
    /// Classical verdict (with witnesses) for `phi(w)`.
    pub phi_verdict: BooleanVerdict,
    /// Present exactly when `w` is not Boolean.
    pub signed_pattern: Option<SignedPatternWitness>,
    /// Repeat-free type-B expression; filled by the `sexpr` and `all` methods.
    pub expression: Option<Vec<usize>>,
}

/// Booleanness by a single criterion, without witnesses.
pub fn is_boolean_signed_by(w: &SignedInvolution, method: SignedMethod) -> Result<bool> {
    match method {
        SignedMethod::Phi => boolean::is_boolean_by(&w.phi_involution(), Method::LongCrossing),
        SignedMethod::SignedPatterns => Ok(pattern::avoids_all_signed(
            w,
            &SignedPattern::type_b_patterns(),
        )),
        SignedMethod::Sexpr => Ok(repeat_free_expression_b(w)?.is_some()),
        SignedMethod::All => {
            let phi = is_boolean_signed_by(w, SignedMethod::Phi)?;
            let pat = is_boolean_signed_by(w, SignedMethod::SignedPatterns)?;
            let sexpr = is_boolean_signed_by(w, SignedMethod::Sexpr)?;
            if phi != pat || phi != sexpr {
                return Err(Error::InvariantViolation(format!(
                    "{w}: phi={phi}, signed-patterns={pat}, sexpr={sexpr}"
                )));
            }
            Ok(phi)
        }
    }
}

pub fn is_boolean_signed(w: &SignedInvolution, method: SignedMethod) -> Result<SignedVerdict> {
    let is_boolean = is_boolean_signed_by(w, method)?;
    let image = w.phi_involution();
    let phi_verdict = boolean::is_boolean(&image, Method::LongCrossing)?;
    if phi_verdict.is_boolean != is_boolean {
        return Err(Error::InvariantViolation(format!(
            "{w}: method {method:?} says {is_boolean}, phi image says {}",
            phi_verdict.is_boolean
        )));
    }
    let patterns = SignedPattern::type_b_patterns();
    let signed_pattern =
        pattern::first_contained_signed(w, &patterns).map(|(p, occ)| SignedPatternWitness {
            pattern: p.clone(),
            occurrence: occ,
        });
    if signed_pattern.is_some() == is_boolean {
        return Err(Error::InvariantViolation(format!(
            "{w}: Boolean = {is_boolean} but signed pattern witness present = {}",
            signed_pattern.is_some()
        )));
    }
    let expression = match method {
        SignedMethod::Sexpr | SignedMethod::All if is_boolean => repeat_free_expression_b(w)?,
        _ => None,
    };
    Ok(SignedVerdict {
        element: w.0.clone(),
        is_boolean,
        phi_image: image.into_permutation(),
        phi_verdict,
        signed_pattern,
        expression,
    })
}
