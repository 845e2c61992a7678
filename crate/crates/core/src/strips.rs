//! Periodic strips adjacent to an axial wall.
//!
//! A strip between the wall `ℓ` (vertices `v_k`) and a parallel wall `ℓ'`
//! (vertices `w_k`) is a band of triangles. With all indices mod `n`:
//!
//! ```text
//!   lower L_k = {v_k, v_{k+1}, w_k}       reads (a_k, s_k, t_k)
//!   upper U_k = {v_{k+1}, w_k, w_{k+1}}   reads (s_k, b_k, u_k)
//!
//!   a_k : v_k → v_{k+1}     s_k : v_{k+1} → w_k     t_k : w_k → v_k
//!   b_k : w_k → w_{k+1}     u_k : w_{k+1} → v_{k+1}
//! ```
//!
//! and the seam `w_{k+1} → v_{k+1}` is shared, so `t_{k+1} = u_k`.
//! The vertex `w_k` sits half an edge further along than `v_k`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{describe, Error};
use crate::presentation::TrianglePresentation;
use crate::walls::{check_wall, least_rotation, minimal_period, Necklace};
use crate::word::{FormalWord, Letter};
use crate::Gen;

/// One g-period of a strip, read from the base vertex `v_0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strip {
    a: Vec<Gen>,
    s: Vec<Gen>,
    t: Vec<Gen>,
    b: Vec<Gen>,
    u: Vec<Gen>,
    period: usize,
}

/// Orbit key of a strip under shifts and swapping its two walls.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey(Vec<Gen>);

impl EdgeKey {
    pub fn as_slice(&self) -> &[Gen] {
        &self.0
    }
}

/// The glide reflections of a flip-symmetric strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Glide {
    /// Least flip shift; the shortest glide translates the median by `r_min + 1/2`.
    pub r_min: usize,
    /// `2 r_min + 1`, the shortest glide translation in half-edges.
    pub half_steps: usize,
    /// Order of the median stabilizer in `Z_Γ(g)/⟨g⟩`: `2n / (2 r_min + 1)`.
    pub order: usize,
}

fn rot(seq: &[Gen], k: usize) -> Vec<Gen> {
    let n = seq.len();
    (0..n).map(|j| seq[(j + k) % n]).collect()
}

impl Strip {
    /// Builds a strip from its five label sequences, checking every invariant.
    pub fn from_parts(
        pres: &TrianglePresentation,
        a: Vec<Gen>,
        s: Vec<Gen>,
        t: Vec<Gen>,
        b: Vec<Gen>,
        u: Vec<Gen>,
    ) -> Result<Strip, Error> {
        let n = a.len();
        if n == 0 || [&s, &t, &b, &u].iter().any(|x| x.len() != n) {
            return Err(Error::invariant("strip sequences must share one positive length"));
        }
        let strip = Strip::assemble(a, s, t, b, u);
        strip.validate(pres)?;
        Ok(strip)
    }

    fn assemble(a: Vec<Gen>, s: Vec<Gen>, t: Vec<Gen>, b: Vec<Gen>, u: Vec<Gen>) -> Strip {
        let n = a.len();
        let period = (1..=n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| {
                [&a, &s, &t, &b, &u]
                    .iter()
                    .all(|x| (0..n).all(|k| x[k] == x[(k + p) % n]))
            })
            .unwrap_or(n);
        Strip {
            a,
            s,
            t,
            b,
            u,
            period,
        }
    }

    /// Checks triangles, seams, straightness of both walls and the periods.
    pub fn validate(&self, pres: &TrianglePresentation) -> Result<(), Error> {
        let n = self.n();
        for k in 0..n {
            let lower = [self.a[k], self.s[k], self.t[k]];
            if !pres.is_rotation(lower) {
                return Err(Error::invariant(alloc::format!(
                    "lower triangle {k} reads {lower:?}, not a relator"
                )));
            }
            let upper = [self.s[k], self.b[k], self.u[k]];
            if !pres.is_rotation(upper) {
                return Err(Error::invariant(alloc::format!(
                    "upper triangle {k} reads {upper:?}, not a relator"
                )));
            }
            if self.t[(k + 1) % n] != self.u[k] {
                return Err(Error::invariant(alloc::format!("seam {k} does not close")));
            }
        }
        check_wall(pres, &self.a)
            .map_err(|e| Error::invariant(alloc::format!("base wall: {e}")))?;
        check_wall(pres, &self.b)
            .map_err(|e| Error::invariant(alloc::format!("opposite wall: {e}")))?;
        let pe = self.period;
        if !n.is_multiple_of(pe) || !pe.is_multiple_of(minimal_period(&self.a)) || !pe.is_multiple_of(minimal_period(&self.b)) {
            return Err(Error::invariant("strip period incompatible with wall periods"));
        }
        Ok(())
    }

    /// The g-length `n`.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Base-wall labels `a_k`, phase-aligned to `v_0`.
    pub fn base(&self) -> &[Gen] {
        &self.a
    }

    pub fn s(&self) -> &[Gen] {
        &self.s
    }

    pub fn t(&self) -> &[Gen] {
        &self.t
    }

    /// Opposite-wall labels `b_k`, phase-aligned to `w_0`.
    pub fn opposite(&self) -> &[Gen] {
        &self.b
    }

    pub fn u(&self) -> &[Gen] {
        &self.u
    }

    /// Minimal shift `p_e` leaving all five sequences invariant.
    pub fn period(&self) -> usize {
        self.period
    }

    /// Order of the edge stabilizer in `Z_Γ(g)/⟨g⟩`.
    pub fn group_order(&self) -> usize {
        self.n() / self.period
    }

    /// `L_0 = (a_0, s_0, t_0)`.
    pub fn initial_triangle(&self) -> [Gen; 3] {
        [self.a[0], self.s[0], self.t[0]]
    }

    pub fn opposite_necklace(&self) -> Necklace {
        Necklace::new(&self.b)
    }

    /// The same strip read from `v_k`.
    pub fn shift(&self, k: usize) -> Strip {
        let n = self.n();
        let k = k % n;
        Strip {
            a: rot(&self.a, k),
            s: rot(&self.s, k),
            t: rot(&self.t, k),
            b: rot(&self.b, k),
            u: rot(&self.u, k),
            period: self.period,
        }
    }

    /// The same strip read from the opposite wall at `w_0`. The new apex of
    /// the first lower triangle is `v_1`. `swap(swap(σ)) = shift(σ, 1)`.
    pub fn swap(&self) -> Strip {
        Strip {
            a: self.b.clone(),
            s: self.u.clone(),
            t: self.s.clone(),
            b: rot(&self.a, 1),
            u: rot(&self.s, 1),
            period: self.period,
        }
    }

    fn flat(&self) -> Vec<Gen> {
        let mut v = Vec::with_capacity(5 * self.n());
        for x in [&self.a, &self.s, &self.t, &self.b, &self.u] {
            v.extend_from_slice(x);
        }
        v
    }

    /// Least representative over all shifts of the strip and of its swap.
    pub fn edge_key(&self) -> EdgeKey {
        let swapped = self.swap();
        let best = (0..self.n())
            .flat_map(|k| [self.shift(k).flat(), swapped.shift(k).flat()])
            .min()
            .unwrap_or_default();
        EdgeKey(best)
    }

    /// Least representative over shifts by multiples of `step`, i.e. under
    /// the stabilizer of the base wall.
    pub fn class_key(&self, step: usize) -> Vec<Gen> {
        (0..self.n())
            .step_by(step.max(1))
            .map(|k| self.shift(k).flat())
            .min()
            .unwrap_or_default()
    }

    /// All `r` in `[0, n)` such that the strip read from `w_0` (across the
    /// strip) equals the strip read from `v_{-r}`. Each one is a glide
    /// reflection carrying `v_0` to `w_r`, translating the median line by
    /// `r + 1/2` edges. Nonempty exactly when the edge is inverted.
    pub fn flip_shifts(&self) -> Vec<usize> {
        let n = self.n();
        let swapped = self.swap();
        (0..n)
            .filter(|&r| swapped == self.shift((n - r) % n))
            .collect()
    }

    /// Shortest glide data, or `None` if the strip is not flip-symmetric.
    pub fn glide(&self) -> Result<Option<Glide>, Error> {
        let Some(&r_min) = self.flip_shifts().first() else {
            return Ok(None);
        };
        let n = self.n();
        let half_steps = 2 * r_min + 1;
        if !(2 * n).is_multiple_of(half_steps) {
            return Err(Error::invariant(alloc::format!(
                "glide of {half_steps} half-edges does not divide 2n = {}",
                2 * n
            )));
        }
        Ok(Some(Glide {
            r_min,
            half_steps,
            order: 2 * n / half_steps,
        }))
    }

    /// Witness for `w_0` given the witness `base` for `v_0`: `base · x_{t_0}⁻¹`.
    pub fn opposite_base(&self, base: &FormalWord) -> FormalWord {
        let mut w = base.clone();
        w.push(Letter::neg(self.t[0]));
        w
    }

    /// Word for the shortest glide, translating in the positive direction:
    /// `base · x_{a_0} ⋯ x_{a_{r-1}} · x_{t_r}⁻¹ · base⁻¹`.
    pub fn glide_witness(&self, base: &FormalWord, glide: &Glide) -> FormalWord {
        let r = glide.r_min;
        let mut inner = FormalWord::positive(&self.a[..r]);
        inner.push(Letter::neg(self.t[r]));
        base.conjugate(&inner)
    }

    /// Labels of the positive zigzag path `v_{k+1} → w_k → v_k → w_{k-1} …`
    /// across the median: `s_{n-1}, t_{n-1}, s_{n-2}, …, s_0, t_0`.
    pub fn zigzag(&self) -> Vec<Gen> {
        (0..self.n())
            .rev()
            .flat_map(|k| [self.s[k], self.t[k]])
            .collect()
    }

    /// Median label such as `[0]` or `[2,3,5]`: the cyclic word spelled by
    /// the zigzag over one shortest glide, which is conjugate to the glide.
    pub fn median_label(&self, glide: &Glide) -> String {
        let z = self.zigzag();
        let word = least_rotation(&z[..glide.half_steps]);
        alloc::format!("[{}]", describe(&word))
    }
}

/// Repeats a wall of length dividing `n` to one full g-period.
pub fn expand_to_length(wall: &[Gen], n: usize) -> Result<Vec<Gen>, Error> {
    if wall.is_empty() || n == 0 || !n.is_multiple_of(wall.len()) {
        return Err(Error::LengthMismatch {
            wall: wall.len(),
            n,
        });
    }
    Ok((0..n).map(|k| wall[k % wall.len()]).collect())
}

/// All strips adjacent to the wall with labels `wall` (read from `v_0`,
/// length `n`) whose labelling is `n`-periodic, in order of their initial
/// triangle.
///
/// Only the upper triangles branch; each next lower triangle is forced by
/// `complete(a_{k+1}, u_k)`.
pub fn enumerate_periodic_strips(
    pres: &TrianglePresentation,
    wall: &[Gen],
) -> Result<Vec<Strip>, Error> {
    check_wall(pres, wall)?;
    let n = wall.len();
    let mut out = Vec::new();
    for (s0, t0) in pres.relators_starting_with(wall[0]) {
        let mut found = Vec::new();
        let mut state = Partial {
            s: alloc::vec![s0],
            t: alloc::vec![t0],
            b: Vec::new(),
            u: Vec::new(),
        };
        extend(pres, wall, n, &mut state, &mut found);
        let mut strips = Vec::new();
        for (s, t, b, u) in found {
            strips.push(Strip::from_parts(pres, wall.to_vec(), s, t, b, u)?);
        }
        if strips.len() > 1 {
            return Err(Error::AmbiguousStrip {
                triangle: [wall[0], s0, t0],
                count: strips.len(),
            });
        }
        out.extend(strips);
    }
    Ok(out)
}

struct Partial {
    s: Vec<Gen>,
    t: Vec<Gen>,
    b: Vec<Gen>,
    u: Vec<Gen>,
}

type Parts = (Vec<Gen>, Vec<Gen>, Vec<Gen>, Vec<Gen>);

fn extend(
    pres: &TrianglePresentation,
    a: &[Gen],
    n: usize,
    st: &mut Partial,
    found: &mut Vec<Parts>,
) {
    let k = st.b.len();
    let (sk, tk) = (st.s[k], st.t[k]);
    for (bk, uk) in pres.relators_starting_with(sk) {
        // (s_k, t_k, a_k) is L_k itself
        if (bk, uk) == (tk, a[k]) {
            continue;
        }
        if k + 1 == n {
            if uk == st.t[0] {
                let mut b = st.b.clone();
                b.push(bk);
                let mut u = st.u.clone();
                u.push(uk);
                found.push((st.s.clone(), st.t.clone(), b, u));
            }
            continue;
        }
        let Some(next_s) = pres.complete(a[k + 1], uk) else {
            continue;
        };
        st.b.push(bk);
        st.u.push(uk);
        st.s.push(next_s);
        st.t.push(uk);
        extend(pres, a, n, st, found);
        st.b.pop();
        st.u.pop();
        st.s.pop();
        st.t.pop();
    }
}

/// Brute-force reference for [`enumerate_periodic_strips`]: tries every
/// choice of lower and upper triangle at every index and keeps the
/// labellings satisfying all strip invariants.
pub fn oracle_enumerate(pres: &TrianglePresentation, wall: &[Gen]) -> Result<Vec<Strip>, Error> {
    check_wall(pres, wall)?;
    let n = wall.len();
    let choices = pres.thickness() + 1;
    let size = (choices as u128).saturating_pow(2 * n as u32);
    if size > 2_000_000 {
        return Err(Error::SearchTooLarge { size });
    }
    let mut digits = alloc::vec![0usize; 2 * n];
    let mut out = Vec::new();
    'outer: loop {
        let mut s = Vec::with_capacity(n);
        let mut t = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        let mut u = Vec::with_capacity(n);
        for k in 0..n {
            let (sk, tk) = pres.relators_starting_with(wall[k])[digits[2 * k]];
            let (bk, uk) = pres.relators_starting_with(sk)[digits[2 * k + 1]];
            s.push(sk);
            t.push(tk);
            b.push(bk);
            u.push(uk);
        }
        if let Ok(strip) = Strip::from_parts(pres, wall.to_vec(), s, t, b, u) {
            out.push(strip);
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < choices {
                continue 'outer;
            }
            *d = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}
