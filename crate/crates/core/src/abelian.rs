//! Abelianization through the Smith normal form of a relation matrix.

use alloc::vec::Vec;
use core::fmt;

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with
/// invariant factors `d_1 | d_2 | … | d_k`, all `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    /// Cokernel of the integer matrix whose rows are relations among
    /// `columns` generators.
    pub fn from_relations(rows: &[Vec<i64>], columns: usize) -> Self {
        let diagonal = smith_diagonal(rows, columns);
        let rank = diagonal.len();
        AbelianGroup {
            free_rank: columns - rank,
            torsion: diagonal
                .into_iter()
                .map(|d| d.unsigned_abs() as u64)
                .filter(|&d| d > 1)
                .collect(),
        }
    }

    /// `Z^free_rank ⊕ ⊕ Z/o` for the given cyclic orders, normalized.
    pub fn from_cyclic(free_rank: usize, orders: &[usize]) -> Self {
        let k = orders.len();
        let rows: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .map(|(i, &o)| {
                let mut row = alloc::vec![0i64; k + free_rank];
                row[i] = o as i64;
                row
            })
            .collect();
        AbelianGroup::from_relations(&rows, k + free_rank)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(alloc::format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
pub fn smith_diagonal(rows: &[Vec<i64>], columns: usize) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<i128> = r.iter().map(|&x| i128::from(x)).collect();
            row.resize(columns, 0);
            row
        })
        .collect();
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(columns) {
        // smallest nonzero entry in the remaining block
        let mut pivot = None;
        for i in t..nrows {
            for j in t..columns {
                if m[i][j] != 0 && pivot.is_none_or(|(pi, pj): (usize, usize)| m[i][j].abs() < m[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..nrows {
                let q = m[i][t] / p;
                if q != 0 {
                    let pivot_row = m[t].clone();
                    for (x, y) in m[i][t..].iter_mut().zip(&pivot_row[t..]) {
                        *x -= q * y;
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..columns {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                // p must divide the rest of the block
                let bad = (t + 1..nrows)
                    .flat_map(|i| (t + 1..columns).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let row = m[i].clone();
                        for (x, y) in m[t][t..].iter_mut().zip(&row[t..]) {
                            *x += y;
                        }
                        continue;
                    }
                }
            }
            // move a smaller remainder into the pivot position
            let mut best = (t, t);
            for i in t..nrows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..columns {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
