//! Dimensions of hom spaces in the labeled 2-category.

use super::matching::Matching;
use crate::label::{is_valid_from, Label};
use crate::sign_words::{matrix_rep, FockVector, SignWord};
use rayon::prelude::*;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Matchings from `bottom` to `top`, grouped into classes identified by the
/// saddle relation (a cap over a cup equals the identity on `-+` and `+-`).
pub fn hom_classes(bottom: &SignWord, top: &SignWord) -> Vec<Vec<Matching>> {
    let mut all = Matching::enumerate(bottom, top);
    all.sort();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    for (i, m) in all.iter().enumerate() {
        let arcs = m.arcs().len();
        for a in 0..arcs {
            for b in a + 1..arcs {
                if let Some(other) = m.saddle(a, b) {
                    if let Ok(j) = all.binary_search(&other) {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        parent[ri] = rj;
                    }
                }
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<Matching>> = Default::default();
    for (i, m) in all.iter().enumerate() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(m.clone());
    }
    classes.into_values().collect()
}

/// Dimension of the space of 2-morphisms from `bottom` to `top` with the
/// rightmost region labeled `source`.
pub fn hom_dim(bottom: &SignWord, top: &SignWord, source: Label) -> usize {
    if !is_valid_from(bottom, source) || !is_valid_from(top, source) {
        return 0;
    }
    hom_classes(bottom, top).len()
}

/// A disagreement between `hom_dim` and the Fock inner product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepMismatch {
    pub bottom: SignWord,
    pub top: SignWord,
    pub hom_dim: usize,
    pub oracle: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    pub pairs: usize,
    pub nonzero: usize,
    pub mismatches: Vec<SweepMismatch>,
}

/// Compares `hom_dim(b, t, source)` with `<t|b>` taken from the Fock state
/// `|source>` over all word pairs up to `max_len`. Results are ordered by
/// the word enumeration whatever the thread schedule.
pub fn oracle_sweep(max_len: usize, source: Label) -> SweepResult {
    let words = SignWord::enumerate(max_len);
    let start = FockVector::basis(source.value() as u8);
    // A_w |source>, once per word
    let kets: Vec<FockVector> = words.iter().map(|w| matrix_rep(w).apply(&start)).collect();
    let rows: Vec<(usize, Vec<SweepMismatch>)> = words
        .par_iter()
        .zip(&kets)
        .map(|(b, kb)| {
            let mut nonzero = 0;
            let mut bad = Vec::new();
            for (t, kt) in words.iter().zip(&kets) {
                let dim = hom_dim(b, t, source);
                let oracle: u64 = kt.dot(kb).to_integer().try_into().expect("inner products are 0 or 1");
                nonzero += usize::from(dim > 0);
                if dim as u64 != oracle {
                    bad.push(SweepMismatch { bottom: b.clone(), top: t.clone(), hom_dim: dim, oracle });
                }
            }
            (nonzero, bad)
        })
        .collect();
    SweepResult {
        pairs: words.len() * words.len(),
        nonzero: rows.iter().map(|r| r.0).sum(),
        mismatches: rows.into_iter().flat_map(|r| r.1).collect(),
    }
}
