//! The quotient of the tree of axial walls by `G = Z_Γ(g)/⟨g⟩`.
//!
//! Vertices of the tree are axial walls of `g`; edges are strips between
//! neighbouring axial walls. Inverted edges are subdivided at the median
//! line of their strip. The quotient is built by breadth-first search from
//! the axis through the base vertex; the discovery tree is the spanning tree.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::presentation::TrianglePresentation;
use crate::strips::{enumerate_periodic_strips, EdgeKey, Strip};
use crate::walls::{check_wall, minimal_period, stabilizer_generator_word, stabilizer_order, Necklace};
use crate::word::FormalWord;
use crate::Gen;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    Wall,
    Median,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKey {
    Wall(Necklace),
    Median(EdgeKey),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// The base wall has no periodic strips: `g` has a single axis and
    /// `Z_Γ(g)` is infinite cyclic.
    SingleAxis,
    GraphOfGroups,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientVertex {
    pub kind: VertexKind,
    pub key: VertexKey,
    /// `n/p` for a wall, `2n/(2 r_min + 1)` for a median.
    pub group_order: usize,
    /// Generator of the lifted stabilizer in `Z_Γ(g)`; identity if the
    /// group is trivial.
    pub generator_witness: FormalWord,
    pub display_label: String,
    /// Witness for the base vertex of the lifted wall (for a median, of the
    /// wall its strip was read from).
    pub base: FormalWord,
    /// Wall labels read from `base`, one g-period.
    pub labels: Vec<Gen>,
    /// Wall period `p`, or the shortest glide in half-edges for a median.
    pub period: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientEdge {
    pub endpoints: [usize; 2],
    pub key: EdgeKey,
    /// `n / p_e`.
    pub group_order: usize,
    /// The edge generator maps to `(vertex generator)^μ` at each endpoint.
    pub multipliers: [usize; 2],
    /// `γ_e` carrying the lift of the terminal vertex to the far end of the
    /// lifted edge; identity on tree edges.
    pub conjugator: FormalWord,
    pub in_tree: bool,
    /// The lifted strip, read from the base vertex of the first endpoint.
    pub strip: Strip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub element: Vec<Gen>,
    pub n: usize,
    pub thickness: usize,
    pub vertices: Vec<QuotientVertex>,
    pub edges: Vec<QuotientEdge>,
    pub classification: Classification,
}

/// Vertex records `(key, order)` and edge records `(key, endpoint data, order)`,
/// sorted; independent of the base point and discovery order.
pub type Signature = (
    Vec<(VertexKey, usize)>,
    Vec<(EdgeKey, [(VertexKey, usize); 2], usize)>,
);

impl QuotientGraph {
    /// The base vertex: the axis of `g` through the identity.
    pub fn base(&self) -> usize {
        0
    }

    pub fn betti_number(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertices.len())
    }

    /// Edge-ends at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| e.endpoints.iter().filter(|&&x| x == v).count())
            .sum()
    }

    /// Generator witnesses of the nontrivial vertex groups.
    pub fn vertex_witnesses(&self) -> Vec<(usize, FormalWord)> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.group_order > 1)
            .map(|(i, v)| (i, v.generator_witness.clone()))
            .collect()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.display_label == label)
    }

    pub fn signature(&self) -> Signature {
        let mut vs: Vec<(VertexKey, usize)> = self
            .vertices
            .iter()
            .map(|v| (v.key.clone(), v.group_order))
            .collect();
        vs.sort();
        let mut es: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let mut ends = [0, 1].map(|k| {
                    (
                        self.vertices[e.endpoints[k]].key.clone(),
                        e.multipliers[k],
                    )
                });
                ends.sort();
                (e.key.clone(), ends, e.group_order)
            })
            .collect();
        es.sort();
        (vs, es)
    }
}

fn wall_vertex(base: FormalWord, labels: Vec<Gen>) -> Result<QuotientVertex, Error> {
    let n = labels.len();
    let necklace = Necklace::new(&labels);
    let period = minimal_period(&labels);
    let group_order = stabilizer_order(n, period)?;
    let generator_witness = if group_order > 1 {
        stabilizer_generator_word(&base, &labels)
    } else {
        FormalWord::identity()
    };
    Ok(QuotientVertex {
        kind: VertexKind::Wall,
        display_label: necklace.display_label(),
        key: VertexKey::Wall(necklace),
        group_order,
        generator_witness,
        base,
        labels,
        period,
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn exact_div(num: usize, den: usize, what: &str) -> Result<usize, Error> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::invariant(alloc::format!(
            "{what}: {den} does not divide {num}"
        )));
    }
    Ok(num / den)
}

/// Builds the quotient graph of groups for the element spelled by the wall
/// word `g`.
pub fn build_quotient(pres: &TrianglePresentation, g: &[Gen]) -> Result<QuotientGraph, Error> {
    check_wall(pres, g)?;
    let n = g.len();

    let mut vertices = alloc::vec![wall_vertex(FormalWord::identity(), g.to_vec())?];
    let mut by_key: BTreeMap<VertexKey, usize> = BTreeMap::new();
    by_key.insert(vertices[0].key.clone(), 0);
    let mut edges: Vec<QuotientEdge> = Vec::new();
    let mut edge_by_key: BTreeMap<EdgeKey, usize> = BTreeMap::new();
    let mut ends: BTreeMap<EdgeKey, usize> = BTreeMap::new();
    let mut classification = Classification::GraphOfGroups;

    let mut queue = VecDeque::from([0usize]);
    while let Some(vi) = queue.pop_front() {
        let (base, labels, p) = {
            let v = &vertices[vi];
            (v.base.clone(), v.labels.clone(), v.period)
        };
        let strips = enumerate_periodic_strips(pres, &labels)?;
        if vi == 0 && strips.is_empty() {
            classification = Classification::SingleAxis;
        }
        if strips.len() > pres.thickness() + 1 {
            return Err(Error::invariant("more than q+1 strips at one wall"));
        }

        // S(ℓ) shifts the strips at ℓ by multiples of p.
        let mut classes: Vec<Vec<Gen>> = Vec::new();
        let mut reps: Vec<Strip> = Vec::new();
        for strip in strips {
            let ck = strip.class_key(p);
            if !classes.contains(&ck) {
                classes.push(ck);
                reps.push(strip);
            }
        }

        for strip in reps {
            let ek = strip.edge_key();
            *ends.entry(ek.clone()).or_default() += 1;
            if edge_by_key.contains_key(&ek) {
                continue;
            }
            let pe = strip.period();
            let mu_here = exact_div(pe, p, "wall period into strip period")?;

            let edge = if let Some(glide) = strip.glide()? {
                let mi = vertices.len();
                let key = VertexKey::Median(ek.clone());
                vertices.push(QuotientVertex {
                    kind: VertexKind::Median,
                    display_label: strip.median_label(&glide),
                    key: key.clone(),
                    group_order: glide.order,
                    generator_witness: strip.glide_witness(&base, &glide),
                    base: base.clone(),
                    labels: labels.clone(),
                    period: glide.half_steps,
                });
                by_key.insert(key, mi);
                *ends.entry(ek.clone()).or_default() += 1;
                QuotientEdge {
                    endpoints: [vi, mi],
                    key: ek.clone(),
                    group_order: strip.group_order(),
                    multipliers: [mu_here, exact_div(2 * pe, glide.half_steps, "glide into strip period")?],
                    conjugator: FormalWord::identity(),
                    in_tree: true,
                    strip,
                }
            } else {
                let far_base = strip.opposite_base(&base);
                let far_labels = strip.opposite().to_vec();
                let key = VertexKey::Wall(strip.opposite_necklace());
                match by_key.get(&key).copied() {
                    Some(wi) => {
                        let w = &vertices[wi];
                        let conjugator = align(&far_base, &far_labels, &w.base, &w.labels)?;
                        QuotientEdge {
                            endpoints: [vi, wi],
                            key: ek.clone(),
                            group_order: strip.group_order(),
                            multipliers: [mu_here, exact_div(pe, w.period, "wall period into strip period")?],
                            conjugator,
                            in_tree: false,
                            strip,
                        }
                    }
                    None => {
                        let wi = vertices.len();
                        let w = wall_vertex(far_base, far_labels)?;
                        let mu_far = exact_div(pe, w.period, "wall period into strip period")?;
                        by_key.insert(key, wi);
                        vertices.push(w);
                        queue.push_back(wi);
                        QuotientEdge {
                            endpoints: [vi, wi],
                            key: ek.clone(),
                            group_order: strip.group_order(),
                            multipliers: [mu_here, mu_far],
                            conjugator: FormalWord::identity(),
                            in_tree: true,
                            strip,
                        }
                    }
                }
            };
            edge_by_key.insert(ek, edges.len());
            edges.push(edge);
        }
    }

    for e in &edges {
        if ends.get(&e.key) != Some(&2) {
            return Err(Error::invariant(alloc::format!(
                "edge {:?} was met {:?} times from its endpoints",
                e.endpoints,
                ends.get(&e.key)
            )));
        }
        for (k, &v) in e.endpoints.iter().enumerate() {
            let order = vertices[v].group_order;
            if order % e.group_order != 0 || order / gcd(e.multipliers[k], order) != e.group_order {
                return Err(Error::invariant(alloc::format!(
                    "edge group of order {} does not embed in vertex group of order {order}",
                    e.group_order
                )));
            }
        }
    }

    Ok(QuotientGraph {
        element: g.to_vec(),
        n,
        thickness: pres.thickness(),
        vertices,
        edges,
        classification,
    })
}

/// The element carrying the wall `(to_base, to_labels)` onto the wall
/// `(from_base, from_labels)`, matching phases.
fn align(
    from_base: &FormalWord,
    from_labels: &[Gen],
    to_base: &FormalWord,
    to_labels: &[Gen],
) -> Result<FormalWord, Error> {
    let n = to_labels.len();
    let k = (0..n)
        .find(|&k| (0..n).all(|j| to_labels[(j + k) % n] == from_labels[j]))
        .ok_or_else(|| Error::invariant("walls with equal keys do not align"))?;
    let position = to_base.mul(&FormalWord::positive(&to_labels[..k]));
    Ok(from_base.mul(&position.inverse()))
}
