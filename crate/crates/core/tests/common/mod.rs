//! Brute-force oracles shared by the integration tests. Everything here works
//! on plain `Vec<usize>` words (1-based values) and deliberately avoids the
//! library's algorithms.
#![allow(dead_code)]

use boolinv_core::{Involution, Permutation};

pub fn inv(s: &str) -> Involution {
    s.parse().unwrap()
}

pub fn word_of(w: &Involution) -> Vec<usize> {
    w.word().to_vec()
}

/// Every permutation of `[n]`, by recursion.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn is_inv(w: &[usize]) -> bool {
    w.iter().enumerate().all(|(k, &v)| w[v - 1] == k + 1)
}

pub fn all_involution_words(n: usize) -> Vec<Vec<usize>> {
    all_perms(n).into_iter().filter(|w| is_inv(w)).collect()
}

pub fn inversions(w: &[usize]) -> usize {
    let n = w.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

pub fn excedances(w: &[usize]) -> usize {
    w.iter().enumerate().filter(|(k, &v)| v > k + 1).count()
}

/// `(inv + #2-cycles) / 2`.
pub fn rank(w: &[usize]) -> usize {
    (inversions(w) + excedances(w)) / 2
}

/// `u <= w` iff `#{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}` for all `i, j`.
pub fn bruhat_leq(u: &[usize], w: &[usize]) -> bool {
    let n = u.len();
    for i in 1..=n {
        for j in 1..=n {
            let cu = u[..i].iter().filter(|&&x| x >= j).count();
            let cw = w[..i].iter().filter(|&&x| x >= j).count();
            if cu > cw {
                return false;
            }
        }
    }
    true
}

/// Involutions below `w`, in the involution order.
pub fn ideal(w: &[usize]) -> Vec<Vec<usize>> {
    all_involution_words(w.len())
        .into_iter()
        .filter(|u| bruhat_leq(u, w))
        .collect()
}

/// Boolean-lattice test on the ideal from first principles: the map sending
/// `u` to the set of atoms below it is an order isomorphism onto all subsets.
pub fn ideal_is_boolean(w: &[usize]) -> bool {
    let elems = ideal(w);
    let atoms: Vec<&Vec<usize>> = elems.iter().filter(|u| rank(u) == 1).collect();
    if atoms.len() >= usize::BITS as usize || elems.len() != 1 << atoms.len() {
        return false;
    }
    let masks: Vec<usize> = elems
        .iter()
        .map(|u| {
            atoms
                .iter()
                .enumerate()
                .filter(|(_, a)| bruhat_leq(a, u))
                .fold(0, |m, (k, _)| m | 1 << k)
        })
        .collect();
    let mut sorted = masks.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != elems.len() {
        return false;
    }
    for (a, ma) in elems.iter().zip(&masks) {
        for (b, mb) in elems.iter().zip(&masks) {
            if bruhat_leq(a, b) != (ma & mb == *ma) {
                return false;
            }
        }
    }
    true
}

/// Naive containment over all `C(n, m)` position subsets.
pub fn contains(w: &[usize], p: &[usize]) -> bool {
    occurrences(w, p).next().is_some()
}

pub fn occurrences<'a>(w: &'a [usize], p: &'a [usize]) -> impl Iterator<Item = Vec<usize>> + 'a {
    let n = w.len();
    let m = p.len();
    (0u32..1 << n).filter_map(move |mask| {
        if mask.count_ones() as usize != m {
            return None;
        }
        let pos: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        let ok = (0..m).all(|a| (0..m).all(|b| (w[pos[a]] < w[pos[b]]) == (p[a] < p[b])));
        ok.then(|| pos.iter().map(|k| k + 1).collect())
    })
}

/// The Boolean criterion by long-crossing pairs, scanned directly.
pub fn has_long_crossing(w: &[usize]) -> bool {
    let n = w.len();
    (1..=n).any(|i| (i + 1..=n).any(|j| j < w[j - 1] && w[i - 1] > j + 1))
}

/// Underlined action by the adjacent transposition swapping `i` and `i + 1`,
/// computed with explicit products.
pub fn underline(w: &[usize], i: usize) -> Vec<usize> {
    let n = w.len();
    let s: Vec<usize> = (1..=n)
        .map(|k| {
            if k == i {
                i + 1
            } else if k == i + 1 {
                i
            } else {
                k
            }
        })
        .collect();
    let mul = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x - 1]).collect() };
    let sws = mul(&mul(&s, w), &s);
    if sws == w {
        mul(w, &s)
    } else {
        sws
    }
}

pub fn eval(letters: &[usize], n: usize) -> Vec<usize> {
    letters
        .iter()
        .fold((1..=n).collect(), |w: Vec<usize>, &i| underline(&w, i))
}

pub fn perm(word: Vec<usize>) -> Permutation {
    Permutation::new(word).unwrap()
}

pub fn inv_of(word: &[usize]) -> Involution {
    Involution::try_from(perm(word.to_vec())).unwrap()
}
