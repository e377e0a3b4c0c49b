//! Bruhat order on involutions and principal ideals `B(w)`.
//!
//! `bruhat_leq` is the rank-matrix (dominance) test for the full Bruhat
//! order on `S_n`. Ideals are built from the subword property: the elements
//! below `w` are exactly the evaluations of subwords of one reduced
//! `S`-expression of `w`, and the same recursion yields the down-set of
//! every element of the ideal.

use std::collections::{BTreeSet, HashMap};
use std::io::Write;

use crate::boolean::{connected_components, restrict};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::perm::{Involution, Permutation};
use crate::sexpr::{apply_underline, rank, reduced_sexpr};

/// `u <= w` in the Bruhat order of `S_n`: for all `i, j`,
/// `#{k <= i : u(k) >= j} <= #{k <= i : w(k) >= j}`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    let n = u.n();
    if n != w.n() {
        return Err(Error::domain(format!("size mismatch: {} vs {}", n, w.n())));
    }
    // cu[j] / cw[j] count entries >= j + 1 among the first i positions.
    let mut cu = vec![0usize; n];
    let mut cw = vec![0usize; n];
    for i in 1..=n {
        cu[..u.at(i)].iter_mut().for_each(|c| *c += 1);
        cw[..w.at(i)].iter_mut().for_each(|c| *c += 1);
        if cu.iter().zip(&cw).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest rank of a root accepted by [`ideal`].
pub const IDEAL_RANK_LIMIT: usize = 20;
/// Largest ideal [`ideal`] will materialise with its order relation.
pub const IDEAL_SIZE_LIMIT: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| k * 64 + b)
        })
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// The principal ideal `B(w)` with its order relation.
#[derive(Clone, Debug)]
pub struct IdealPoset {
    root: Involution,
    /// Sorted by `(rank, one-line word)`; index 0 is the identity and the
    /// last index is the root.
    elements: Vec<Involution>,
    ranks: Vec<usize>,
    /// `down[v]` holds every `u` with `u <= v`.
    down: Vec<BitSet>,
}

impl IdealPoset {
    pub fn root(&self) -> &Involution {
        &self.root
    }

    pub fn elements(&self) -> &[Involution] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank_of(&self, idx: usize) -> usize {
        self.ranks[idx]
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.down[v].contains(u)
    }

    pub fn index_of(&self, w: &Involution) -> Option<usize> {
        let key = (rank(w), w);
        self.elements
            .binary_search_by(|e| (rank(e), e).cmp(&key))
            .ok()
    }

    /// Number of elements of each rank, starting at rank 0.
    pub fn rank_counts(&self) -> Vec<u64> {
        let top = self.ranks.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0u64; top + 1];
        for &r in &self.ranks {
            counts[r] += 1;
        }
        counts
    }
}

/// `B(w)`, built from the subwords of the canonical reduced expression.
pub fn ideal(w: &Involution) -> Result<IdealPoset> {
    let expr = reduced_sexpr(w);
    if expr.len() > IDEAL_RANK_LIMIT {
        return Err(Error::Resource(format!(
            "rank {} exceeds the ideal limit {IDEAL_RANK_LIMIT}",
            expr.len()
        )));
    }
    let mut set: BTreeSet<Involution> = BTreeSet::from([Involution::identity(w.n())]);
    for &letter in &expr.letters {
        let moved: Vec<Involution> = set
            .iter()
            .map(|u| apply_underline(u, letter))
            .collect::<Result<_>>()?;
        set.extend(moved);
        if set.len() > IDEAL_SIZE_LIMIT {
            return Err(Error::Resource(format!(
                "ideal of {w} has more than {IDEAL_SIZE_LIMIT} elements"
            )));
        }
    }
    let mut keyed: Vec<(usize, Involution)> = set.into_iter().map(|u| (rank(&u), u)).collect();
    keyed.sort();
    let (ranks, elements): (Vec<usize>, Vec<Involution>) = keyed.into_iter().unzip();
    let index: HashMap<&[usize], usize> = elements
        .iter()
        .enumerate()
        .map(|(k, e)| (e.word(), k))
        .collect();

    // down(v) = down(v') ∪ down(v')·s̲_i for a letter i with v = v'·s̲_i of
    // lower rank; processing by rank guarantees down(v') is ready.
    let m = elements.len();
    let mut down: Vec<BitSet> = Vec::with_capacity(m);
    for (v, elem) in elements.iter().enumerate() {
        let mut set = BitSet::new(m);
        set.insert(v);
        if ranks[v] > 0 {
            let (i, lower) = (1..w.n())
                .map(|i| (i, apply_underline(elem, i).expect("letter in range")))
                .find(|(_, u)| rank(u) + 1 == ranks[v])
                .expect("descent exists");
            let lower_idx = index[lower.word()];
            set.union_with(&down[lower_idx]);
            for u in down[lower_idx].iter() {
                let moved = apply_underline(&elements[u], i)?;
                let moved_idx = *index.get(moved.word()).ok_or_else(|| {
                    Error::InvariantViolation(format!("{moved} escaped the ideal of {w}"))
                })?;
                set.insert(moved_idx);
            }
        }
        down.push(set);
    }
    Ok(IdealPoset {
        root: w.clone(),
        elements,
        ranks,
        down,
    })
}

/// `{u in I(S_n) : u <= w}` by exhaustive filtering with [`bruhat_leq`].
pub fn ideal_by_filter(w: &Involution) -> Result<Vec<Involution>> {
    let mut out = Vec::new();
    for u in enumerate::involutions(w.n())? {
        if bruhat_leq(&u, w)? {
            out.push(u);
        }
    }
    out.sort_by_key(|u| (rank(u), u.clone()));
    Ok(out)
}

/// Boolean-lattice test for a finite poset with a minimum: with atoms the
/// elements covering the minimum, `u ↦ {atoms below u}` must be an order
/// isomorphism onto the power set of the atoms.
pub fn is_boolean_lattice(p: &IdealPoset) -> bool {
    let m = p.len();
    let Some(bottom) = (0..m).find(|&z| (0..m).all(|v| p.leq(z, v))) else {
        return false;
    };
    let atoms: Vec<usize> = (0..m)
        .filter(|&a| a != bottom && p.down[a].len() == 2)
        .collect();
    if atoms.len() >= 63 || m != 1usize << atoms.len() {
        return false;
    }
    let masks: Vec<u64> = (0..m)
        .map(|u| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| p.leq(a, u))
                .fold(0u64, |acc, (bit, _)| acc | 1 << bit)
        })
        .collect();
    let distinct: BTreeSet<u64> = masks.iter().copied().collect();
    if distinct.len() != m {
        return false;
    }
    (0..m).all(|u| (0..m).all(|v| p.leq(u, v) == (masks[u] & !masks[v] == 0)))
}

/// Cover relations `(lower, upper)` as index pairs, sorted.
pub fn hasse_edges(p: &IdealPoset) -> Vec<(usize, usize)> {
    let m = p.len();
    let mut edges = Vec::new();
    for v in 0..m {
        let mut strictly_below = p.down[v].clone();
        strictly_below.remove(v);
        let mut not_maximal = BitSet::new(m);
        for x in strictly_below.iter() {
            let mut below_x = p.down[x].clone();
            below_x.remove(x);
            not_maximal.union_with(&below_x);
        }
        strictly_below.difference_with(&not_maximal);
        edges.extend(strictly_below.iter().map(|u| (u, v)));
    }
    edges.sort_unstable();
    edges
}

/// Rank-clustered Graphviz rendering of the Hasse diagram.
pub fn dot_export<W: Write>(p: &IdealPoset, sink: &mut W) -> Result<()> {
    writeln!(sink, "digraph ideal {{")?;
    writeln!(sink, "  rankdir=BT;")?;
    writeln!(sink, "  node [shape=box];")?;
    let top = p.ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=top {
        write!(sink, "  {{ rank=same;")?;
        for (k, e) in p
            .elements
            .iter()
            .enumerate()
            .filter(|(k, _)| p.ranks[*k] == r)
        {
            write!(sink, " n{k} [label=\"{e} (ρ={r})\"];")?;
        }
        writeln!(sink, " }}")?;
    }
    for (u, v) in hasse_edges(p) {
        writeln!(sink, "  n{u} -> n{v};")?;
    }
    writeln!(sink, "}}")?;
    Ok(())
}

/// Checks `B(w) ≅ Π B(w_C)` over the connected components `C` of `w` at the
/// level of sizes and rank generating functions.
pub fn product_decomposition_check(w: &Involution) -> Result<bool> {
    let whole = ideal(w)?.rank_counts();
    let mut product = vec![1u64];
    for (a, b) in connected_components(w).components {
        let part = restrict(w, &(a..=b).collect::<Vec<_>>())?;
        let counts = ideal(&Involution::try_from(part)?)?.rank_counts();
        let mut next = vec![0u64; product.len() + counts.len() - 1];
        for (i, x) in product.iter().enumerate() {
            for (j, y) in counts.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        product = next;
    }
    while product.len() > 1 && product.last() == Some(&0) {
        product.pop();
    }
    Ok(product == whole)
}
