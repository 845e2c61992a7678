#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use axial_core::walls::least_rotation;
use axial_core::word::{FormalWord, Letter};
use axial_core::{Gen, TrianglePresentation};

/// Necklace representatives of all cyclic positive wall words of length
/// `1..=max_len`, found by brute force over all words.
pub fn wall_words(pres: &TrianglePresentation, max_len: usize) -> Vec<Vec<Gen>> {
    let m = pres.generator_count() as Gen;
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut word = vec![0 as Gen; len];
        loop {
            let straight = (0..len).all(|k| pres.straight(word[k], word[(k + 1) % len]));
            if straight && least_rotation(&word) == word {
                out.push(word.clone());
            }
            let mut k = 0;
            while k < len && word[k] == m - 1 {
                word[k] = 0;
                k += 1;
            }
            if k == len {
                break;
            }
            word[k] += 1;
        }
    }
    out
}

type Cyc = Vec<i16>;

fn code(l: Letter) -> i16 {
    let g = l.generator as i16 + 1;
    if l.inverse {
        -g
    } else {
        g
    }
}

fn cyclic_normal(mut w: Cyc) -> Cyc {
    let mut out: Cyc = Vec::with_capacity(w.len());
    for x in w.drain(..) {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    while out.len() >= 2 && out[0] == -out[out.len() - 1] {
        out.pop();
        out.remove(0);
    }
    least_rotation(&out)
}

/// Pieces `(piece, replacement)` with `piece · replacement⁻¹` a cyclic
/// conjugate of a relator or its inverse, for pieces of length 1 to 3.
fn moves(pres: &TrianglePresentation) -> Vec<(Cyc, Cyc)> {
    let mut out = Vec::new();
    for r in pres.rotations() {
        let pos: Cyc = r.iter().map(|&g| g as i16 + 1).collect();
        let neg: Cyc = pos.iter().rev().map(|&x| -x).collect();
        for rel in [pos, neg] {
            for start in 0..3 {
                let rot: Cyc = (0..3).map(|k| rel[(start + k) % 3]).collect();
                for cut in 1..=3 {
                    let piece = rot[..cut].to_vec();
                    let rest: Cyc = rot[cut..].iter().rev().map(|&x| -x).collect();
                    out.push((piece, rest));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Searches for a derivation of `w = 1` by relator substitutions on cyclic
/// words of length at most `|w| + slack`. Sound: `true` is a proof. A
/// `false` only means the search budget ran out.
pub fn provably_trivial(pres: &TrianglePresentation, w: &FormalWord, slack: usize, budget: usize) -> bool {
    let start = cyclic_normal(w.letters().iter().map(|&l| code(l)).collect());
    let limit = start.len() + slack;
    let moves = moves(pres);
    let mut seen: HashSet<Cyc> = HashSet::from([start.clone()]);
    // shortest words first
    let mut queue = BinaryHeap::from([Reverse((start.len(), start))]);
    while let Some(Reverse((_, cur))) = queue.pop() {
        if cur.is_empty() {
            return true;
        }
        if seen.len() > budget {
            return false;
        }
        let n = cur.len();
        for i in 0..n {
            for (piece, rep) in &moves {
                if piece.len() > n || !(0..piece.len()).all(|k| cur[(i + k) % n] == piece[k]) {
                    continue;
                }
                let mut next: Cyc = rep.clone();
                next.extend((piece.len()..n).map(|k| cur[(i + k) % n]));
                let next = cyclic_normal(next);
                if next.len() <= limit && seen.insert(next.clone()) {
                    queue.push(Reverse((next.len(), next)));
                }
            }
        }
    }
    false
}

/// `w` lies in the centralizer of `g`: the commutator is provably trivial.
pub fn provably_commutes(pres: &TrianglePresentation, w: &FormalWord, g: &FormalWord) -> bool {
    let comm = w.mul(g).mul(&w.inverse()).mul(&g.inverse());
    provably_trivial(pres, &comm, 2, 400_000)
}

pub fn pow(w: &FormalWord, k: usize) -> FormalWord {
    (0..k).fold(FormalWord::identity(), |acc, _| acc.mul(w))
}
