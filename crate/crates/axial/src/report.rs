//! Structured run reports and their text and dot renderings.

use std::fmt::Write as _;

use axial_core::bassserre::Simplified;
use axial_core::quotient::VertexKind;
use axial_core::strips::{expand_to_length, Strip};
use axial_core::walls::minimal_period;
use axial_core::{
    build_quotient, enumerate_periodic_strips, full_centralizer_presentation, fundamental_group, simplify,
    Classification, Error, FormalWord, Gen, TrianglePresentation,
};
use serde::{Deserialize, Serialize};

use crate::format::presentation_hash;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationInfo {
    pub id: String,
    pub sha256: String,
    pub generators: usize,
    pub thickness: usize,
}

impl PresentationInfo {
    pub fn new(id: &str, pres: &TrianglePresentation) -> Self {
        PresentationInfo {
            id: id.to_string(),
            sha256: presentation_hash(pres),
            generators: pres.generator_count(),
            thickness: pres.thickness(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub index: usize,
    pub label: String,
    /// `wall` or `median`.
    pub kind: String,
    pub order: usize,
    /// Generator of the lifted stabilizer; `1` when trivial.
    pub witness: String,
    /// Element carrying the base vertex to this vertex's reference point.
    pub base: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub index: usize,
    pub endpoints: [usize; 2],
    pub order: usize,
    pub multipliers: [usize; 2],
    pub in_tree: bool,
    /// Stable letter of a non-tree edge; `1` on the spanning tree.
    pub conjugator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub betti_number: usize,
    pub vertices: Vec<VertexReport>,
    pub edges: Vec<EdgeReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupResult {
    IsoType(String),
    Unsimplified(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub presentation: PresentationInfo,
    pub element: Vec<Gen>,
    pub n: usize,
    /// `single_axis` or `graph_of_groups`.
    pub classification: String,
    pub graph: GraphReport,
    /// `Z_Γ(g)/⟨g⟩`.
    pub quotient_group: GroupResult,
    pub abelianization: String,
    pub quotient_presentation: String,
    pub centralizer_presentation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

fn kind_name(kind: VertexKind) -> &'static str {
    match kind {
        VertexKind::Wall => "wall",
        VertexKind::Median => "median",
    }
}

pub fn word_string(word: &FormalWord) -> String {
    word.to_string()
}

pub fn run_centralizer(id: &str, pres: &TrianglePresentation, g: &[Gen]) -> Result<RunReport, Error> {
    let q = build_quotient(pres, g)?;
    let vertices = q
        .vertices
        .iter()
        .enumerate()
        .map(|(index, v)| VertexReport {
            index,
            label: v.display_label.clone(),
            kind: kind_name(v.kind).into(),
            order: v.group_order,
            witness: word_string(&v.generator_witness),
            base: word_string(&v.base),
        })
        .collect();
    let edges = q
        .edges
        .iter()
        .enumerate()
        .map(|(index, e)| EdgeReport {
            index,
            endpoints: e.endpoints,
            order: e.group_order,
            multipliers: e.multipliers,
            in_tree: e.in_tree,
            conjugator: word_string(&e.conjugator),
        })
        .collect();
    let pi1 = fundamental_group(&q);
    let quotient_group = match simplify(&q) {
        Simplified::Iso(t) => GroupResult::IsoType(t.to_string()),
        Simplified::Unsimplified(p) => GroupResult::Unsimplified(p.to_string()),
    };
    Ok(RunReport {
        presentation: PresentationInfo::new(id, pres),
        element: g.to_vec(),
        n: q.n,
        classification: match q.classification {
            Classification::SingleAxis => "single_axis",
            Classification::GraphOfGroups => "graph_of_groups",
        }
        .into(),
        graph: GraphReport {
            vertex_count: q.vertices.len(),
            edge_count: q.edges.len(),
            betti_number: q.betti_number(),
            vertices,
            edges,
        },
        quotient_group,
        abelianization: pi1.abelianization().to_string(),
        quotient_presentation: pi1.to_string(),
        centralizer_presentation: full_centralizer_presentation(&q).to_string(),
        timing_ms: None,
    })
}

fn element_string(g: &[Gen]) -> String {
    word_string(&FormalWord::positive(g))
}

impl RunReport {
    pub fn iso_type(&self) -> Option<&str> {
        match &self.quotient_group {
            GroupResult::IsoType(s) => Some(s),
            GroupResult::Unsimplified(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = &self.presentation;
        let _ = writeln!(out, "presentation {} (m = {}, q = {})", p.id, p.generators, p.thickness);
        let _ = writeln!(out, "sha256 {}", p.sha256);
        let _ = writeln!(out, "element g = {} (n = {})", element_string(&self.element), self.n);
        let g = &self.graph;
        if self.classification == "single_axis" {
            let h = &g.vertices[0];
            let _ = writeln!(out, "classification: single axis");
            let _ = writeln!(out, "centralizer: Z, generated by h = {} with h^{} = g", if h.order > 1 { h.witness.as_str() } else { "g" }, h.order);
        } else {
            let _ = writeln!(out, "classification: graph of groups");
        }
        let _ = writeln!(
            out,
            "quotient graph: {} vertices, {} edges, Betti number {}",
            g.vertex_count, g.edge_count, g.betti_number
        );
        let width = g.vertices.iter().map(|v| v.label.len()).max().unwrap_or(0);
        let _ = writeln!(out, "vertices:");
        for v in &g.vertices {
            let _ = write!(out, "  {:<width$}  {:<6}  |G_v| = {}", v.label, v.kind, v.order);
            if v.order > 1 {
                let _ = write!(out, "  h = {}", v.witness);
            }
            out.push('\n');
        }
        if !g.edges.is_empty() {
            let _ = writeln!(out, "edges:");
        }
        for e in &g.edges {
            let ends = format!("{} -- {}", g.vertices[e.endpoints[0]].label, g.vertices[e.endpoints[1]].label);
            let _ = write!(out, "  {:<w$}  |G_e| = {}", ends, e.order, w = 2 * width + 4);
            if e.order > 1 {
                let _ = write!(out, "  multipliers {}, {}", e.multipliers[0], e.multipliers[1]);
            }
            if !e.in_tree {
                let _ = write!(out, "  c_{} = {}", e.index, e.conjugator);
            }
            out.push('\n');
        }
        match &self.quotient_group {
            GroupResult::IsoType(s) => {
                let _ = writeln!(out, "Z(g)/<g> = {s}");
            }
            GroupResult::Unsimplified(_) => {
                let _ = writeln!(out, "Z(g)/<g>: not a free product of cyclic groups after collapsing");
            }
        }
        let _ = writeln!(out, "abelianization: {}", self.abelianization);
        let _ = writeln!(out, "presentation of Z(g)/<g>: {}", self.quotient_presentation);
        let _ = writeln!(out, "presentation of Z(g): {}", self.centralizer_presentation);
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms:.3} ms");
        }
        out
    }

    /// Graphviz rendering: round labels for walls, square brackets and a
    /// diamond for medians, edge groups on edges, dashed non-tree edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph quotient {\n  node [fontname=\"Helvetica\"];\n");
        let _ = writeln!(out, "  label=\"g = {}\";", element_string(&self.element));
        for v in &self.graph.vertices {
            let shape = if v.kind == "median" { "diamond" } else { "ellipse" };
            let mut label = v.label.clone();
            if v.order > 1 {
                let _ = write!(label, "\\nZ/{}", v.order);
            }
            let _ = writeln!(out, "  v{} [label=\"{}\", shape={}];", v.index, label, shape);
        }
        for e in &self.graph.edges {
            let mut attrs = Vec::new();
            if e.order > 1 {
                attrs.push(format!("label=\"Z/{}\"", e.order));
            }
            if !e.in_tree {
                attrs.push("style=dashed".to_string());
            }
            let attrs = if attrs.is_empty() {
                String::new()
            } else {
                format!(" [{}]", attrs.join(", "))
            };
            let _ = writeln!(out, "  v{} -- v{}{};", e.endpoints[0], e.endpoints[1], attrs);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripReport {
    pub a: Vec<Gen>,
    pub s: Vec<Gen>,
    pub t: Vec<Gen>,
    pub b: Vec<Gen>,
    pub u: Vec<Gen>,
    pub opposite_wall: String,
    pub period: usize,
    pub edge_order: usize,
    /// Median label when the strip is flip-symmetric.
    pub median: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripsReport {
    pub presentation: PresentationInfo,
    pub wall: Vec<Gen>,
    pub n: usize,
    pub wall_period: usize,
    pub strips: Vec<StripReport>,
    /// Strips up to the stabilizer of the wall, i.e. edges at its vertex.
    pub classes: usize,
}

fn strip_report(strip: &Strip) -> Result<StripReport, Error> {
    Ok(StripReport {
        a: strip.base().to_vec(),
        s: strip.s().to_vec(),
        t: strip.t().to_vec(),
        b: strip.opposite().to_vec(),
        u: strip.u().to_vec(),
        opposite_wall: strip.opposite_necklace().display_label(),
        period: strip.period(),
        edge_order: strip.group_order(),
        median: strip.glide()?.map(|g| strip.median_label(&g)),
    })
}

pub fn run_strips(
    id: &str,
    pres: &TrianglePresentation,
    wall: &[Gen],
    length: Option<usize>,
) -> Result<StripsReport, Error> {
    let labels = expand_to_length(wall, length.unwrap_or(wall.len()))?;
    let strips = enumerate_periodic_strips(pres, &labels)?;
    let p = minimal_period(&labels);
    let mut keys: Vec<Vec<Gen>> = strips.iter().map(|s| s.class_key(p)).collect();
    keys.sort();
    keys.dedup();
    Ok(StripsReport {
        presentation: PresentationInfo::new(id, pres),
        wall: wall.to_vec(),
        n: labels.len(),
        wall_period: p,
        strips: strips.iter().map(strip_report).collect::<Result<_, _>>()?,
        classes: keys.len(),
    })
}

fn seq(v: &[Gen]) -> String {
    v.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
}

impl StripsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "wall ({}) at g-length {} (wall period {})",
            seq(&self.wall),
            self.n,
            self.wall_period
        );
        let _ = writeln!(
            out,
            "{} periodic strips, {} up to the wall stabilizer",
            self.strips.len(),
            self.classes
        );
        for (k, s) in self.strips.iter().enumerate() {
            let _ = writeln!(
                out,
                "strip {k}: L0 = ({},{},{}) opposite {} |G_e| = {}{}",
                s.a[0],
                s.s[0],
                s.t[0],
                s.opposite_wall,
                s.edge_order,
                s.median.as_ref().map(|m| format!(" flip-symmetric, median {m}")).unwrap_or_default()
            );
            for (name, v) in [("a", &s.a), ("s", &s.s), ("t", &s.t), ("b", &s.b), ("u", &s.u)] {
                let _ = writeln!(out, "  {name} = ({})", seq(v));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub presentation: PresentationInfo,
    pub nodes: usize,
    pub edges: usize,
    pub min_valency: usize,
    pub max_valency: usize,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub generalized_triangle: bool,
}

pub fn run_link(id: &str, pres: &TrianglePresentation) -> LinkReport {
    let stats = pres.link_stats();
    LinkReport {
        presentation: PresentationInfo::new(id, pres),
        nodes: stats.nodes,
        edges: stats.edges,
        min_valency: stats.min_valency,
        max_valency: stats.max_valency,
        girth: stats.girth,
        diameter: stats.diameter,
        generalized_triangle: stats.is_generalized_triangle(),
    }
}

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "infinite".into())
}

impl LinkReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let valency = if self.min_valency == self.max_valency {
            format!("{}-regular", self.min_valency)
        } else {
            format!("valency {}..{}", self.min_valency, self.max_valency)
        };
        format!(
            "link: {} nodes, {} edges, {}, girth {}, diameter {}\ngeneralized 3-gon: {}\n",
            self.nodes,
            self.edges,
            valency,
            opt(self.girth),
            opt(self.diameter),
            if self.generalized_triangle { "yes" } else { "no" }
        )
    }
}
