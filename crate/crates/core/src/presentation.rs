//! Triangle presentations and the local geometry of their buildings.
//!
//! Generators are `x_0 … x_{m-1}`; each relator `x_i x_j x_k = 1` is stored as
//! its rotation class. The directed edge `[a, a·x_i]` of the Cayley graph is
//! labelled `i`, and every relator rotation `(i, j, k)` is a triangle
//! `a → a·x_i → a·x_i·x_j → a`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Gen;

/// Relators of the group C.1: seven generators, seven relators.
pub const C1_RELATORS: [[usize; 3]; 7] = [
    [0, 0, 6],
    [0, 2, 3],
    [1, 2, 6],
    [1, 3, 5],
    [1, 5, 4],
    [2, 4, 5],
    [3, 4, 6],
];

/// How to treat a link that is not a generalized 3-gon.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strictness {
    #[default]
    Strict,
    /// Girth and diameter failures of the link become warnings.
    Lenient,
}

/// One reason a relator list is not a triangle presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoGenerators,
    TooManyGenerators { count: usize },
    NoRelators,
    IndexOutOfRange { triple: [usize; 3] },
    /// `(i, i, i)` would make `x_i` an element of order 3.
    TorsionTriple { triple: [usize; 3] },
    DuplicateClass { first: [usize; 3], second: [usize; 3] },
    /// Two rotations agree on a pair of coordinates but not on the third.
    PairConflict { first: [Gen; 3], second: [Gen; 3] },
    /// Rotations starting with each generator, indexed by generator.
    NonUniformThickness { counts: Vec<usize> },
    /// Every edge must lie on at least three triangles.
    Thin { valency: usize },
    LinkGirth { girth: Option<usize> },
    LinkDiameter { diameter: Option<usize> },
}

impl Violation {
    pub fn is_link_shape(&self) -> bool {
        matches!(self, Violation::LinkGirth { .. } | Violation::LinkDiameter { .. })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoGenerators => write!(f, "generator count must be positive"),
            Violation::TooManyGenerators { count } => {
                write!(f, "{count} generators exceeds the supported maximum of 256")
            }
            Violation::NoRelators => write!(f, "no relators given"),
            Violation::IndexOutOfRange { triple } => {
                write!(f, "relator {triple:?} uses a generator index out of range")
            }
            Violation::TorsionTriple { triple } => write!(
                f,
                "relator {triple:?} forces a torsion element (x_i^3 = 1); the group must be torsion free"
            ),
            Violation::DuplicateClass { first, second } => {
                write!(f, "relators {first:?} and {second:?} are rotations of each other")
            }
            Violation::PairConflict { first, second } => write!(
                f,
                "rotations {first:?} and {second:?} share two coordinates but differ in the third"
            ),
            Violation::NonUniformThickness { counts } => write!(
                f,
                "non-uniform thickness: rotations starting with each generator are {counts:?}"
            ),
            Violation::Thin { valency } => {
                write!(f, "each edge lies on {valency} triangles; at least 3 are required")
            }
            Violation::LinkGirth { girth } => match girth {
                Some(g) => write!(f, "vertex link has girth {g}, expected 6"),
                None => write!(f, "vertex link is acyclic, expected girth 6"),
            },
            Violation::LinkDiameter { diameter } => match diameter {
                Some(d) => write!(f, "vertex link has diameter {d}, expected 3"),
                None => write!(f, "vertex link is disconnected, expected diameter 3"),
            },
        }
    }
}

/// All violations found while validating a presentation.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid triangle presentation ({} violation(s))", violations.len())]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

/// Shape of the vertex link: points `P_t` and lines `L_s`, with `P_t ~ L_s`
/// whenever some rotation `(s, t, ·)` exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkStats {
    pub nodes: usize,
    pub edges: usize,
    pub min_valency: usize,
    pub max_valency: usize,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
}

impl LinkStats {
    /// A thick generalized 3-gon: biregular of valency ≥ 3, girth 6, diameter 3.
    pub fn is_generalized_triangle(&self) -> bool {
        self.min_valency == self.max_valency
            && self.min_valency >= 3
            && self.girth == Some(6)
            && self.diameter == Some(3)
    }
}

/// A validated triangle presentation. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePresentation {
    generator_count: usize,
    /// Least rotation of each class, sorted.
    classes: Vec<[Gen; 3]>,
    /// All rotations, sorted.
    rotations: Vec<[Gen; 3]>,
    thickness: usize,
    /// `third[i*m + j] = k` for the rotation `(i, j, k)`.
    third: Vec<Option<Gen>>,
    /// `middle[i*m + k] = j` for the rotation `(i, j, k)`.
    middle: Vec<Option<Gen>>,
    warnings: Vec<Violation>,
}

fn rotations_of(t: [Gen; 3]) -> [[Gen; 3]; 3] {
    [t, [t[1], t[2], t[0]], [t[2], t[0], t[1]]]
}

fn least_rotation(t: [Gen; 3]) -> [Gen; 3] {
    let r = rotations_of(t);
    *r.iter().min().unwrap()
}

impl TrianglePresentation {
    /// Validates `relators` (any representative per rotation class) over
    /// `generator_count` generators.
    pub fn new(
        generator_count: usize,
        relators: &[[usize; 3]],
        strictness: Strictness,
    ) -> Result<Self, ValidationError> {
        let mut violations = Vec::new();
        if generator_count == 0 {
            violations.push(Violation::NoGenerators);
        }
        if generator_count > 256 {
            violations.push(Violation::TooManyGenerators { count: generator_count });
        }
        if relators.is_empty() {
            violations.push(Violation::NoRelators);
        }
        if !violations.is_empty() {
            return Err(ValidationError { violations });
        }
        let m = generator_count;

        let mut classes: Vec<([Gen; 3], [usize; 3])> = Vec::new();
        for &triple in relators {
            if triple.iter().any(|&i| i >= m) {
                violations.push(Violation::IndexOutOfRange { triple });
                continue;
            }
            if triple[0] == triple[1] && triple[1] == triple[2] {
                violations.push(Violation::TorsionTriple { triple });
                continue;
            }
            let t = [triple[0] as Gen, triple[1] as Gen, triple[2] as Gen];
            let key = least_rotation(t);
            if let Some((_, first)) = classes.iter().find(|(k, _)| *k == key) {
                violations.push(Violation::DuplicateClass {
                    first: *first,
                    second: triple,
                });
                continue;
            }
            classes.push((key, triple));
        }
        if !violations.is_empty() {
            return Err(ValidationError { violations });
        }

        let mut classes: Vec<[Gen; 3]> = classes.into_iter().map(|(k, _)| k).collect();
        classes.sort_unstable();
        let mut rotations: Vec<[Gen; 3]> = classes.iter().flat_map(|&c| rotations_of(c)).collect();
        rotations.sort_unstable();
        rotations.dedup();

        let mut third = vec![None; m * m];
        let mut middle = vec![None; m * m];
        for &r in &rotations {
            let [i, j, k] = r;
            let (iu, ju, ku) = (i as usize, j as usize, k as usize);
            match third[iu * m + ju] {
                Some(k2) if k2 != k => violations.push(Violation::PairConflict {
                    first: [i, j, k2],
                    second: r,
                }),
                _ => third[iu * m + ju] = Some(k),
            }
            match middle[iu * m + ku] {
                Some(j2) if j2 != j => violations.push(Violation::PairConflict {
                    first: [i, j2, k],
                    second: r,
                }),
                _ => middle[iu * m + ku] = Some(j),
            }
        }

        let mut counts = vec![0usize; m];
        for r in &rotations {
            counts[r[0] as usize] += 1;
        }
        let valency = counts.first().copied().unwrap_or(0);
        if counts.iter().any(|&c| c != valency) {
            violations.push(Violation::NonUniformThickness { counts });
        } else if valency < 3 {
            violations.push(Violation::Thin { valency });
        }

        let mut pres = TrianglePresentation {
            generator_count: m,
            classes,
            rotations,
            thickness: valency.saturating_sub(1),
            third,
            middle,
            warnings: Vec::new(),
        };

        // The link is only meaningful once the local tables are consistent.
        if violations.is_empty() {
            let stats = pres.link_stats();
            let mut link = Vec::new();
            if stats.girth != Some(6) {
                link.push(Violation::LinkGirth { girth: stats.girth });
            }
            if stats.diameter != Some(3) {
                link.push(Violation::LinkDiameter {
                    diameter: stats.diameter,
                });
            }
            match strictness {
                Strictness::Strict => violations.extend(link),
                Strictness::Lenient => pres.warnings = link,
            }
        }

        if violations.is_empty() {
            Ok(pres)
        } else {
            Err(ValidationError { violations })
        }
    }

    /// The group C.1 acting on the building of `PGL_3(Q_2)`.
    pub fn c1() -> Self {
        TrianglePresentation::new(7, &C1_RELATORS, Strictness::Strict)
            .expect("builtin C.1 presentation is valid")
    }

    /// Looks up a builtin presentation by name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "c1" | "C1" | "C.1" => Some(TrianglePresentation::c1()),
            _ => None,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    /// `q`: every edge lies on exactly `q + 1` triangles.
    pub fn thickness(&self) -> usize {
        self.thickness
    }

    /// One representative (the least rotation) per relator class, sorted.
    pub fn relator_classes(&self) -> &[[Gen; 3]] {
        &self.classes
    }

    pub fn rotations(&self) -> &[[Gen; 3]] {
        &self.rotations
    }

    /// Link-shape problems tolerated under [`Strictness::Lenient`].
    pub fn warnings(&self) -> &[Violation] {
        &self.warnings
    }

    pub fn is_generator(&self, i: usize) -> bool {
        i < self.generator_count
    }

    /// The `k` with rotation `(i, j, k)`.
    pub fn third(&self, i: Gen, j: Gen) -> Option<Gen> {
        self.third[i as usize * self.generator_count + j as usize]
    }

    /// The unique `j` with rotation `(i, j, k)`.
    pub fn complete(&self, i: Gen, k: Gen) -> Option<Gen> {
        self.middle[i as usize * self.generator_count + k as usize]
    }

    /// True iff an edge labelled `i` followed by an edge labelled `j`
    /// continues straight, i.e. no triangle contains both edges.
    pub fn straight(&self, i: Gen, j: Gen) -> bool {
        self.third(i, j).is_none()
    }

    pub fn is_rotation(&self, t: [Gen; 3]) -> bool {
        self.third(t[0], t[1]) == Some(t[2])
    }

    /// The `q + 1` pairs `(j, k)` with rotation `(i, j, k)`, sorted.
    pub fn relators_starting_with(&self, i: Gen) -> Vec<(Gen, Gen)> {
        let m = self.generator_count;
        (0..m)
            .filter_map(|j| self.third(i, j as Gen).map(|k| (j as Gen, k)))
            .collect()
    }

    /// Row `i` lists every `j` with a relator `x_i x_j x_k = 1`.
    pub fn first_table(&self) -> Vec<Vec<Gen>> {
        (0..self.generator_count)
            .map(|i| {
                self.relators_starting_with(i as Gen)
                    .into_iter()
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect()
    }

    /// Adjacency of the link: nodes `0..m` are lines `L_s`, `m..2m` points `P_t`.
    pub fn link_adjacency(&self) -> Vec<Vec<usize>> {
        let m = self.generator_count;
        let mut adj = vec![Vec::new(); 2 * m];
        for r in &self.rotations {
            let (s, t) = (r[0] as usize, r[1] as usize);
            adj[s].push(m + t);
            adj[m + t].push(s);
        }
        adj
    }

    pub fn link_stats(&self) -> LinkStats {
        let adj = self.link_adjacency();
        let nodes = adj.len();
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let min_valency = adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_valency = adj.iter().map(Vec::len).max().unwrap_or(0);

        let mut girth: Option<usize> = None;
        let mut diameter = Some(0);
        for source in 0..nodes {
            let mut dist = vec![usize::MAX; nodes];
            let mut parent = vec![usize::MAX; nodes];
            let mut queue = VecDeque::new();
            dist[source] = 0;
            queue.push_back(source);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let cycle = dist[x] + dist[y] + 1;
                        girth = Some(girth.map_or(cycle, |g| g.min(cycle)));
                    }
                }
            }
            let far = dist.iter().copied().max().unwrap_or(0);
            diameter = match diameter {
                Some(d) if far != usize::MAX => Some(d.max(far)),
                _ => None,
            };
        }
        LinkStats {
            nodes,
            edges,
            min_valency,
            max_valency,
            girth,
            diameter,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotations_brute(p: &TrianglePresentation) -> Vec<[Gen; 3]> {
        let mut all = Vec::new();
        for c in C1_RELATORS {
            let t = [c[0] as Gen, c[1] as Gen, c[2] as Gen];
            all.extend(rotations_of(t));
        }
        all.sort_unstable();
        assert_eq!(p.generator_count(), 7);
        all
    }

    #[test]
    fn c1_shape() {
        let p = TrianglePresentation::c1();
        assert_eq!(p.generator_count(), 7);
        assert_eq!(p.thickness(), 2);
        assert_eq!(p.relator_classes().len(), 7);
        assert_eq!(p.rotations(), rotations_brute(&p).as_slice());
        assert!(p.warnings().is_empty());
    }

    #[test]
    fn c1_first_table_matches_published_rows() {
        let expected: [[Gen; 3]; 7] = [
            [0, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [0, 4, 5],
            [1, 5, 6],
            [1, 2, 4],
            [0, 1, 3],
        ];
        let table = TrianglePresentation::c1().first_table();
        for (row, exp) in table.iter().zip(expected.iter()) {
            assert_eq!(row.as_slice(), exp.as_slice());
        }
    }

    #[test]
    fn straight_and_complete() {
        let p = TrianglePresentation::c1();
        assert!(p.straight(0, 5));
        assert!(!p.straight(0, 0));
        assert!(p.straight(0, 4));
        assert_eq!(p.complete(5, 3), Some(1));
        assert_eq!(p.complete(0, 6), Some(0));
        assert_eq!(p.complete(0, 4), None);
    }

    #[test]
    fn relators_starting_with_rows() {
        let p = TrianglePresentation::c1();
        assert_eq!(p.relators_starting_with(0), vec![(0, 6), (2, 3), (6, 0)]);
        assert_eq!(p.relators_starting_with(2), vec![(3, 0), (4, 5), (6, 1)]);
        assert_eq!(p.relators_starting_with(6), vec![(0, 0), (1, 2), (3, 4)]);
    }

    #[test]
    fn complete_agrees_with_rotation_scan() {
        let p = TrianglePresentation::c1();
        let rots = rotations_brute(&p);
        for i in 0..7u8 {
            let mut straight_count = 0;
            for k in 0..7u8 {
                let scan: Vec<Gen> = rots
                    .iter()
                    .filter(|r| r[0] == i && r[2] == k)
                    .map(|r| r[1])
                    .collect();
                assert!(scan.len() <= 1);
                assert_eq!(p.complete(i, k), scan.first().copied());
                let j = k;
                let bends = rots.iter().any(|r| r[0] == i && r[1] == j);
                assert_eq!(p.straight(i, j), !bends);
                if !bends {
                    straight_count += 1;
                }
            }
            assert_eq!(straight_count, 4);
        }
    }

    #[test]
    fn c1_link_is_fano_incidence_graph() {
        let stats = TrianglePresentation::c1().link_stats();
        assert_eq!(stats.nodes, 14);
        assert_eq!(stats.edges, 21);
        assert_eq!((stats.min_valency, stats.max_valency), (3, 3));
        assert_eq!(stats.girth, Some(6));
        assert_eq!(stats.diameter, Some(3));
        assert!(stats.is_generalized_triangle());
    }

    #[test]
    fn torsion_triple_rejected() {
        let err = TrianglePresentation::new(7, &[[0, 0, 0]], Strictness::Strict).unwrap_err();
        assert!(err
            .violations
            .contains(&Violation::TorsionTriple { triple: [0, 0, 0] }));
    }

    #[test]
    fn duplicate_class_rejected() {
        let mut rels = C1_RELATORS.to_vec();
        rels.push([0, 6, 0]);
        let err = TrianglePresentation::new(7, &rels, Strictness::Strict).unwrap_err();
        assert_eq!(
            err.violations,
            vec![Violation::DuplicateClass {
                first: [0, 0, 6],
                second: [0, 6, 0]
            }]
        );
    }

    #[test]
    fn any_representative_is_accepted() {
        let rels: Vec<[usize; 3]> = C1_RELATORS.iter().map(|r| [r[1], r[2], r[0]]).collect();
        let p = TrianglePresentation::new(7, &rels, Strictness::Strict).unwrap();
        assert_eq!(p, TrianglePresentation::c1());
    }

    #[test]
    fn pair_conflict_and_thickness_reported() {
        let mut rels = C1_RELATORS.to_vec();
        rels[6] = [3, 4, 5];
        let err = TrianglePresentation::new(7, &rels, Strictness::Strict).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, Violation::PairConflict { .. })));
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NonUniformThickness { .. })));
    }

    #[test]
    fn out_of_range_reported() {
        let err = TrianglePresentation::new(3, &[[0, 1, 7]], Strictness::Strict).unwrap_err();
        assert_eq!(
            err.violations,
            vec![Violation::IndexOutOfRange { triple: [0, 1, 7] }]
        );
    }

    #[test]
    fn lenient_downgrades_link_shape() {
        // Triples with i + j + k = 1 (mod 3): consistent local tables, but the
        // link is K_{3,3} (girth 4, diameter 2).
        let rels = [[0, 0, 1], [1, 1, 2], [2, 2, 0]];
        let strict = TrianglePresentation::new(3, &rels, Strictness::Strict);
        let lenient = TrianglePresentation::new(3, &rels, Strictness::Lenient);
        match (strict, lenient) {
            (Err(e), Ok(p)) => {
                assert!(e.violations.iter().all(|v| v.is_link_shape()));
                assert_eq!(p.warnings(), e.violations.as_slice());
            }
            (s, l) => panic!("unexpected: {s:?} / {l:?}"),
        }
    }
}
