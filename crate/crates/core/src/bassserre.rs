//! Fundamental group of the quotient graph of groups, its simplification to
//! a free product of cyclic groups, and the central extension by `⟨g⟩`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::abelian::AbelianGroup;
use crate::quotient::QuotientGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Generator of the group at the given quotient vertex.
    Vertex(usize),
    /// Stable letter `γ_e` of the given non-tree edge.
    Conjugator(usize),
    /// The element `g` itself.
    Central,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
}

/// A syllable `x^e`: generator index and exponent.
pub type Syllable = (usize, i64);

/// `lhs = rhs`; an empty side is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<Syllable>,
    pub rhs: Vec<Syllable>,
}

impl Relation {
    fn new(lhs: Vec<Syllable>, rhs: Vec<Syllable>) -> Self {
        Relation { lhs, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

impl GroupPresentation {
    pub fn central(&self) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| g.kind == GeneratorKind::Central)
    }

    /// Exponent sums of `lhs · rhs⁻¹`, one row per relation.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relations
            .iter()
            .map(|r| {
                let mut row = alloc::vec![0i64; self.generators.len()];
                for &(g, e) in &r.lhs {
                    row[g] += e;
                }
                for &(g, e) in &r.rhs {
                    row[g] -= e;
                }
                row
            })
            .collect()
    }

    pub fn abelianization(&self) -> AbelianGroup {
        AbelianGroup::from_relations(&self.relation_matrix(), self.generators.len())
    }

    /// Sets the central letter to the identity and drops relations that
    /// become trivial.
    pub fn quotient_by_central(&self) -> GroupPresentation {
        let Some(c) = self.central() else {
            return self.clone();
        };
        let strip = |side: &[Syllable]| -> Vec<Syllable> {
            side.iter()
                .filter(|&&(g, _)| g != c)
                .map(|&(g, e)| (if g > c { g - 1 } else { g }, e))
                .collect()
        };
        let mut generators = self.generators.clone();
        generators.remove(c);
        let relations = self
            .relations
            .iter()
            .map(|r| Relation::new(strip(&r.lhs), strip(&r.rhs)))
            .filter(|r| r.lhs != r.rhs)
            .collect();
        GroupPresentation {
            generators,
            relations,
        }
    }

    fn render_side(&self, side: &[Syllable], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if side.is_empty() {
            return f.write_str("1");
        }
        for (k, &(g, e)) in side.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.generators[g].name)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupPresentation {
    /// `< h_(2), c_3 | h_(2)^2 = 1, ... >`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("< ")?;
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        f.write_str(&names.join(", "))?;
        f.write_str(" | ")?;
        for (k, r) in self.relations.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            self.render_side(&r.lhs, f)?;
            f.write_str(" = ")?;
            self.render_side(&r.rhs, f)?;
        }
        f.write_str(" >")
    }
}

/// Vertex generator names `h_<label>`, made unique if labels collide.
fn vertex_names(graph: &QuotientGraph) -> Vec<String> {
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for v in &graph.vertices {
        *seen.entry(v.display_label.as_str()).or_default() += 1;
    }
    graph
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if seen[v.display_label.as_str()] > 1 {
                alloc::format!("h_{}#{i}", v.display_label)
            } else {
                alloc::format!("h_{}", v.display_label)
            }
        })
        .collect()
}

/// Presentation of `π_1` of the graph of groups, i.e. of `Z_Γ(g)/⟨g⟩`.
///
/// `vertex_power` supplies the right-hand side of `h_v^{|G_v|} = …`.
fn presentation_with(graph: &QuotientGraph, central: bool) -> GroupPresentation {
    let names = vertex_names(graph);
    let mut generators = Vec::new();
    let mut vgen: Vec<Option<usize>> = alloc::vec![None; graph.vertices.len()];
    for (i, v) in graph.vertices.iter().enumerate() {
        if v.group_order > 1 {
            vgen[i] = Some(generators.len());
            generators.push(Generator {
                name: names[i].clone(),
                kind: GeneratorKind::Vertex(i),
            });
        }
    }
    let mut egen: Vec<Option<usize>> = alloc::vec![None; graph.edges.len()];
    for (i, e) in graph.edges.iter().enumerate() {
        if !e.in_tree {
            egen[i] = Some(generators.len());
            generators.push(Generator {
                name: alloc::format!("c_{i}"),
                kind: GeneratorKind::Conjugator(i),
            });
        }
    }
    let g = central.then(|| {
        generators.push(Generator {
            name: "g".into(),
            kind: GeneratorKind::Central,
        });
        generators.len() - 1
    });
    let g_side = || g.map(|g| alloc::vec![(g, 1)]).unwrap_or_default();

    let mut relations = Vec::new();
    for (i, v) in graph.vertices.iter().enumerate() {
        if let Some(h) = vgen[i] {
            relations.push(Relation::new(
                alloc::vec![(h, v.group_order as i64)],
                g_side(),
            ));
        }
    }
    for (i, e) in graph.edges.iter().enumerate() {
        if e.group_order <= 1 {
            continue;
        }
        let [o, t] = e.endpoints;
        let (Some(ho), Some(ht)) = (vgen[o], vgen[t]) else {
            continue;
        };
        let lhs_o = alloc::vec![(ho, e.multipliers[0] as i64)];
        let at_t = (ht, e.multipliers[1] as i64);
        match egen[i] {
            None => relations.push(Relation::new(lhs_o, alloc::vec![at_t])),
            Some(c) => relations.push(Relation::new(
                alloc::vec![(c, 1), at_t, (c, -1)],
                lhs_o,
            )),
        }
    }
    if let Some(g) = g {
        for x in 0..g {
            relations.push(Relation::new(alloc::vec![(g, 1), (x, 1)], alloc::vec![(x, 1), (g, 1)]));
        }
    }
    GroupPresentation {
        generators,
        relations,
    }
}

/// Presentation of `Z_Γ(g)/⟨g⟩` as the fundamental group of the graph of
/// groups: vertex generators `h_v`, a stable letter `c_e` per non-tree edge,
/// `h_v^{|G_v|} = 1`, and for every nontrivial edge group the identification
/// of its two images (conjugated by `c_e` off the tree).
pub fn fundamental_group(graph: &QuotientGraph) -> GroupPresentation {
    presentation_with(graph, false)
}

/// Presentation of `Z_Γ(g)` itself: adds the central letter `g`, with
/// `h_v^{|G_v|} = g` and `g` commuting with every generator.
pub fn full_centralizer_presentation(graph: &QuotientGraph) -> GroupPresentation {
    presentation_with(graph, true)
}

/// A free product `Z^{*a} * Z/n_1 * … * Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoType {
    pub free_rank: usize,
    /// Orders `≥ 2`, ascending.
    pub orders: Vec<usize>,
}

impl IsoType {
    pub fn new(free_rank: usize, mut orders: Vec<usize>) -> Self {
        orders.retain(|&o| o > 1);
        orders.sort_unstable();
        IsoType { free_rank, orders }
    }

    pub fn abelianization(&self) -> AbelianGroup {
        AbelianGroup::from_cyclic(self.free_rank, &self.orders)
    }
}

impl fmt::Display for IsoType {
    /// Renders as `Z * (Z/2)^{*2} * (Z/4)`; the trivial group is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            a => parts.push(alloc::format!("Z^{{*{a}}}")),
        }
        let mut k = 0;
        while k < self.orders.len() {
            let o = self.orders[k];
            let count = self.orders[k..].iter().take_while(|&&x| x == o).count();
            if count == 1 {
                parts.push(alloc::format!("(Z/{o})"));
            } else {
                parts.push(alloc::format!("(Z/{o})^{{*{count}}}"));
            }
            k += count;
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" * "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplified {
    Iso(IsoType),
    /// Some nontrivial edge group could not be collapsed.
    Unsimplified(GroupPresentation),
}

impl Simplified {
    pub fn iso(&self) -> Option<&IsoType> {
        match self {
            Simplified::Iso(t) => Some(t),
            Simplified::Unsimplified(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
struct WorkEdge {
    ends: [usize; 2],
    order: usize,
    mu: [usize; 2],
}

fn inverse_mod(a: usize, m: usize) -> Option<usize> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i64) as usize)
}

/// Collapses every non-loop edge whose group maps onto an endpoint group,
/// merging that endpoint into the other. When only trivial edge groups
/// remain the result is a free product of the surviving vertex groups and
/// a free group of rank `E - V + 1`.
pub fn simplify(graph: &QuotientGraph) -> Simplified {
    simplify_with(graph, |_| 0)
}

/// [`simplify`] with the collapse order chosen by `choose`, which receives
/// the number of collapsible edges and returns the index of one of them.
pub fn simplify_with<F: FnMut(usize) -> usize>(graph: &QuotientGraph, mut choose: F) -> Simplified {
    let mut orders: Vec<usize> = graph.vertices.iter().map(|v| v.group_order).collect();
    let mut alive = alloc::vec![true; orders.len()];
    let mut edges: Vec<WorkEdge> = graph
        .edges
        .iter()
        .map(|e| WorkEdge {
            ends: e.endpoints,
            order: e.group_order,
            mu: e.multipliers,
        })
        .collect();

    loop {
        let ord = &orders;
        let candidates: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.ends[0] != e.ends[1])
            .flat_map(|(i, e)| {
                (0..2)
                    .filter(move |&side| e.order == ord[e.ends[side]])
                    .map(move |side| (i, side))
            })
            .collect();
        if candidates.is_empty() {
            break;
        }
        let (ei, side) = candidates[choose(candidates.len()) % candidates.len()];
        let e = edges.remove(ei);
        let (gone, keep) = (e.ends[side], e.ends[1 - side]);
        // h_gone = e^{μ_gone⁻¹} ↦ h_keep^{μ_keep · μ_gone⁻¹}
        let inv = inverse_mod(e.mu[side], e.order).expect("edge map onto a cyclic group is invertible");
        let factor = (e.mu[1 - side] * inv) % orders[keep].max(1);
        for f in edges.iter_mut() {
            for k in 0..2 {
                if f.ends[k] == gone {
                    f.ends[k] = keep;
                    f.mu[k] = (f.mu[k] * factor) % orders[keep].max(1);
                }
            }
        }
        alive[gone] = false;
        orders[gone] = 1;
    }

    if edges.iter().any(|e| e.order > 1) {
        return Simplified::Unsimplified(fundamental_group(graph));
    }
    let vertex_count = alive.iter().filter(|&&a| a).count();
    let free_rank = (edges.len() + 1).saturating_sub(vertex_count);
    let surviving = orders
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(&o, _)| o)
        .collect();
    Simplified::Iso(IsoType::new(free_rank, surviving))
}
