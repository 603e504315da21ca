//! Exhaustive trie enumeration of pseudo-power-free words.
//!
//! The root is the empty word. Every free node is expanded with all letters
//! in alphabet order; a child containing a pseudo k-th power is a counted
//! leaf and is not expanded. When the tree is finite and fully explored,
//! with `F` free words (the empty word included),
//!
//! ```text
//! total_nodes = 1 + |alphabet| * F
//! leaf_nodes  = total_nodes - F
//! depth       = longest free word length + 1
//! ```
//!
//! Since every proper prefix of a node is free, a child `w a` only needs to
//! be tested for pseudo-powers that are suffixes of `w a`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::detect::naive::suffix_hit;
use crate::detect::{check_exponent, first_hit, is_pseudo_square_free, Algorithm};
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::morphic::Builtin;
use crate::periodicity::square_letters;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    /// Free words of this length are not expanded.
    pub max_depth: Option<usize>,
    /// Stop once this many nodes (root included) have been counted.
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub total_nodes: u64,
    pub leaf_nodes: u64,
    /// Length of the longest word among the counted nodes.
    pub depth: usize,
    /// Number of free nodes, the empty word included.
    pub free_words: u64,
    /// Every free word of maximal length found, in lexicographic order.
    pub longest_free_words: Vec<Word>,
    /// The tree was explored completely without hitting the budget.
    pub exhausted: bool,
}

struct Dfs<'a> {
    size: Letter,
    phi: &'a [Letter],
    k: usize,
    budget: Budget,
    nodes: u64,
    leaves: u64,
    free: u64,
    depth: usize,
    longest_len: usize,
    longest: Vec<Vec<Letter>>,
    halted: bool,
}

impl Dfs<'_> {
    fn take_node(&mut self) -> bool {
        if self.budget.max_nodes.is_some_and(|cap| self.nodes >= cap) {
            self.halted = true;
            return false;
        }
        self.nodes += 1;
        true
    }

    /// `word` is free and already counted.
    fn visit_free(&mut self, word: &mut Vec<Letter>) {
        self.free += 1;
        match word.len().cmp(&self.longest_len) {
            std::cmp::Ordering::Greater => {
                self.longest_len = word.len();
                self.longest.clear();
                self.longest.push(word.clone());
            }
            std::cmp::Ordering::Equal => self.longest.push(word.clone()),
            std::cmp::Ordering::Less => {}
        }
        if self.budget.max_depth.is_some_and(|d| word.len() >= d) {
            self.halted = true;
            return;
        }
        for a in 0..self.size {
            if !self.take_node() {
                return;
            }
            word.push(a);
            self.depth = self.depth.max(word.len());
            if suffix_hit(word, self.phi, self.k).is_some() {
                self.leaves += 1;
            } else {
                self.visit_free(word);
            }
            word.pop();
            if self.halted && self.budget.max_nodes.is_some_and(|cap| self.nodes >= cap) {
                return;
            }
        }
    }
}

/// Runs the trie search below `prefix`, a free word. The node for `prefix`
/// itself is counted only when `count_prefix` is set.
fn explore(size: Letter, phi: &[Letter], k: usize, budget: Budget, prefix: Vec<Letter>, count_prefix: bool) -> Dfs<'_> {
    let mut dfs = Dfs {
        size,
        phi,
        k,
        budget,
        nodes: 0,
        leaves: 0,
        free: 0,
        depth: 0,
        longest_len: 0,
        longest: Vec::new(),
        halted: false,
    };
    if count_prefix && !dfs.take_node() {
        return dfs;
    }
    dfs.depth = prefix.len();
    let mut word = prefix;
    dfs.visit_free(&mut word);
    dfs
}

fn report(alphabet: &Arc<Alphabet>, parts: Vec<Dfs<'_>>, root: (u64, u64)) -> SearchReport {
    let (mut nodes, mut leaves) = root;
    let mut free = 0;
    let mut depth = 0;
    let mut halted = false;
    let mut longest_len = 0;
    let mut longest: Vec<Vec<Letter>> = Vec::new();
    for part in parts {
        nodes += part.nodes;
        leaves += part.leaves;
        free += part.free;
        depth = depth.max(part.depth);
        halted |= part.halted;
        if part.free > 0 {
            if part.longest_len > longest_len {
                longest_len = part.longest_len;
                longest = part.longest;
            } else if part.longest_len == longest_len {
                longest.extend(part.longest);
            }
        }
    }
    longest.sort_unstable();
    longest.dedup();
    SearchReport {
        total_nodes: nodes,
        leaf_nodes: leaves,
        depth,
        free_words: free,
        longest_free_words: longest
            .into_iter()
            .map(|l| Word::from_letters(Arc::clone(alphabet), l).expect("letters in range"))
            .collect(),
        exhausted: !halted,
    }
}

/// Depth-first trie search over pseudo-k-th-power-free words.
pub fn dfs_search(alphabet: &Arc<Alphabet>, phi: &Involution, k: usize, budget: Budget) -> Result<SearchReport> {
    check_exponent(k)?;
    if phi.alphabet() != alphabet {
        return Err(Error::AlphabetMismatch);
    }
    let dfs = explore(alphabet.size() as Letter, phi.letter_map(), k, budget, Vec::new(), true);
    Ok(report(alphabet, vec![dfs], (0, 0)))
}

/// As [`dfs_search`], fanning the root's subtrees out to `jobs` worker
/// threads. Node budgets depend on visiting order, so a search with
/// `max_nodes` set always runs sequentially; the result is identical to the
/// sequential search in every case.
pub fn dfs_search_parallel(
    alphabet: &Arc<Alphabet>,
    phi: &Involution,
    k: usize,
    budget: Budget,
    jobs: usize,
) -> Result<SearchReport> {
    check_exponent(k)?;
    if jobs <= 1 || budget.max_nodes.is_some() || budget.max_depth == Some(0) {
        return dfs_search(alphabet, phi, k, budget);
    }
    if phi.alphabet() != alphabet {
        return Err(Error::AlphabetMismatch);
    }
    let size = alphabet.size() as Letter;
    let map = phi.letter_map();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadSetting(e.to_string()))?;
    // Root plus its children; the empty word is free.
    let mut root_leaves = 0;
    let mut seeds = Vec::new();
    for a in 0..size {
        if suffix_hit(&[a], map, k).is_some() {
            root_leaves += 1;
        } else {
            seeds.push(vec![a]);
        }
    }
    let mut parts: Vec<Dfs<'_>> = pool.install(|| {
        seeds
            .into_par_iter()
            .map(|seed| explore(size, map, k, budget, seed, false))
            .collect()
    });
    // The empty word: free, counted above, children already classified.
    let mut root = explore(size, map, k, Budget { max_depth: Some(0), max_nodes: None }, Vec::new(), false);
    root.halted = false;
    root.depth = usize::from(size > 0);
    parts.push(root);
    Ok(report(alphabet, parts, (1 + size as u64, root_leaves)))
}

/// True iff `w` alternates between the two `phi`-orbits `{a, phi(a)}` and
/// `{c, phi(c)}` and is square-free. Requires a 4-letter alphabet on which
/// `phi` swaps two disjoint pairs.
pub fn check_alternation(w: &Word, phi: &Involution) -> Result<bool> {
    w.same_alphabet(phi.alphabet())?;
    if phi.alphabet().size() != 4 || phi.classify().trn.len() != 2 {
        return Err(Error::BadSetting(
            "alternation check needs 4 letters and an involution with two transpositions".into(),
        ));
    }
    let class: Vec<Letter> = {
        let first = phi.decompose().transpositions[0];
        phi.alphabet()
            .letters()
            .map(|a| u8::from(a != first.0 && a != first.1))
            .collect()
    };
    let s = w.letters();
    if s.windows(2).any(|p| class[p[0] as usize] == class[p[1] as usize]) {
        return Ok(false);
    }
    Ok(square_letters(s).is_none())
}

/// True iff the length-`prefix_len` prefix of the built-in fixed point from
/// seed `0` is pseudo-k-th-power-free under `phi`, decided with the
/// automatic algorithm choice.
pub fn verify_free_prefix(h: Builtin, phi: &Involution, k: usize, prefix_len: usize) -> Result<bool> {
    check_exponent(k)?;
    if prefix_len == 0 {
        return Err(Error::BadSetting("prefix length must be positive".into()));
    }
    let morphism = h.morphism();
    if morphism.alphabet() != phi.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let full = morphism.fixed_point_prefix(0, prefix_len)?;
    let prefix = full.factor(1, prefix_len).expect("prefix within bounds");
    let prefix = Word::from_letters(Arc::clone(phi.alphabet()), prefix.into_letters())?;
    if k == 2 {
        return Ok(is_pseudo_square_free(&prefix, phi)?.is_none());
    }
    Ok(first_hit(&prefix, phi, k, Algorithm::Auto)?.is_none())
}
