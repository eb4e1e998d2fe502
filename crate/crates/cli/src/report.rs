//! JSON and text reports. Every coefficient is an exact string.

use serde::Serialize;

use dicritical_core::algebra::{Field, FieldElement};
use dicritical_core::atypical::{extremality_flags, DicriticalAnalysis, PencilReport};
use dicritical_core::hensel::EdgeFactorization;
use dicritical_core::infinity::InfinityReport;
use dicritical_core::polygon::{edge_data, hull_vertices, EdgeKind};
use dicritical_core::resolver::{degree_identity, IncomingStep, ResolutionTree};

use crate::parse::{print_pencil, VarMap};

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rationals => "Q".into(),
        Field::Prime(p) => format!("F_{p}"),
    }
}

fn values(v: &[FieldElement]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepJson {
    Root,
    Toric { n: u32, m: u32, a: u32, b: u32, alpha: String, multiplicity: u32 },
    Absorb { root: String, m: u32 },
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct EdgeJson {
    pub top: [u32; 2],
    pub bottom: [u32; 2],
    pub n: u32,
    pub m: u32,
    pub omega: u32,
    pub kind: &'static str,
    pub q0: String,
    pub gamma: Option<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct PolygonJson {
    pub vertices: Vec<[u32; 2]>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct NodeJson {
    pub id: usize,
    pub parent: Option<usize>,
    pub depth: usize,
    pub step: StepJson,
    pub pencil: String,
    pub polygon: PolygonJson,
    pub residual_factors: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[allow(non_snake_case)]
pub struct DicriticalJson {
    pub id: usize,
    pub node: usize,
    pub path_ratios: Vec<u32>,
    pub n: u32,
    pub m: u32,
    pub d_E: u32,
    pub q_E: String,
    pub t0: String,
    pub separable: bool,
    pub atypical_poly: Option<String>,
    pub rational_atypical: Vec<String>,
    pub M_E: Option<u32>,
    pub residual: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct FlagsJson {
    pub per_dicritical: Vec<serde_json::Map<String, serde_json::Value>>,
    pub pairwise_disjoint: bool,
    pub all: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct DegreeJson {
    pub ord_y: u64,
    pub sum: u64,
    pub holds: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct SummaryJson {
    pub nu_gen: u64,
    pub bound_sum: u64,
    pub atypical_count: usize,
    pub atypical_union_poly: String,
    pub rational_atypical: Vec<String>,
    pub extremality_flags: Option<FlagsJson>,
    pub degree_identity: Option<DegreeJson>,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct LocalReportJson {
    pub field: String,
    pub input: String,
    pub tree: Vec<NodeJson>,
    pub dicriticals: Vec<DicriticalJson>,
    pub summary: SummaryJson,
}

fn node_json(tree: &ResolutionTree, k: usize) -> NodeJson {
    let node = &tree.nodes[k];
    let poly = node.pencil.poly();
    let step = match &node.step {
        IncomingStep::Root => StepJson::Root,
        IncomingStep::Toric(s) => StepJson::Toric {
            n: s.edge.n,
            m: s.edge.m,
            a: s.a,
            b: s.b,
            alpha: s.alpha.to_string(),
            multiplicity: s.multiplicity,
        },
        IncomingStep::Absorb(s) => StepJson::Absorb { root: s.root.to_string(), m: s.m },
    };
    let support: Vec<(u32, u32)> = poly.terms().keys().copied().collect();
    let vertices = hull_vertices(&support).into_iter().map(|(i, j)| [i, j]).collect();
    let edges = node
        .polygon
        .iter()
        .map(|e| {
            let sup = edge_data(poly, e);
            EdgeJson {
                top: [e.top.0, e.top.1],
                bottom: [e.bottom.0, e.bottom.1],
                n: e.n,
                m: e.m,
                omega: e.omega,
                kind: e.kind.name(),
                q0: sup.q0.to_text("z"),
                gamma: (e.kind == EdgeKind::Dicritical).then(|| sup.gamma.to_string()),
            }
        })
        .collect();
    NodeJson {
        id: node.id,
        parent: node.parent,
        depth: node.depth,
        step,
        pencil: print_pencil(poly, &VarMap::default()),
        polygon: PolygonJson { vertices, edges },
        residual_factors: node.residuals.iter().map(|r| r.factor.to_text("z")).collect(),
    }
}

fn dicritical_json(tree: &ResolutionTree, a: &DicriticalAnalysis) -> DicriticalJson {
    let rec = &tree.dicriticals[a.record_id];
    DicriticalJson {
        id: rec.id,
        node: rec.node,
        path_ratios: rec.ratio_chain.clone(),
        n: rec.n_e,
        m: rec.m_e,
        d_E: rec.d_e,
        q_E: a.q_e.to_text("z"),
        t0: a.t0.to_string(),
        separable: a.separable,
        atypical_poly: a.atypical_poly.as_ref().map(|p| p.to_text("t")),
        rational_atypical: values(&a.rational_atypical),
        M_E: a.m_e,
        residual: rec.residual_flag,
    }
}

fn flags_json(report: &PencilReport) -> Option<FlagsJson> {
    let flags = extremality_flags(report).ok()?;
    let per = flags
        .per_dicritical
        .iter()
        .map(|f| {
            let mut m = serde_json::Map::new();
            m.insert("id".into(), f.record_id.into());
            for (k, v) in f.named() {
                m.insert(k.into(), v.into());
            }
            m
        })
        .collect();
    Some(FlagsJson { per_dicritical: per, pairwise_disjoint: flags.pairwise_disjoint, all: flags.all() })
}

fn summary_json(report: &PencilReport, tree: Option<&ResolutionTree>) -> SummaryJson {
    let degree = tree.and_then(|t| degree_identity(t).ok()).map(|d| DegreeJson { ord_y: d.lhs, sum: d.rhs, holds: d.ok });
    SummaryJson {
        nu_gen: report.nu_gen,
        bound_sum: report.bound_sum,
        atypical_count: report.atypical_count(),
        atypical_union_poly: report.atypical_union_poly.to_text("t"),
        rational_atypical: values(&report.rational_atypical_union),
        extremality_flags: flags_json(report),
        degree_identity: degree,
        warnings: report.warnings.clone(),
    }
}

pub fn local_report(input: &str, tree: &ResolutionTree, report: &PencilReport) -> LocalReportJson {
    LocalReportJson {
        field: field_name(report.field),
        input: input.to_string(),
        tree: (0..tree.nodes.len()).map(|k| node_json(tree, k)).collect(),
        dicriticals: report.analyses.iter().map(|a| dicritical_json(tree, a)).collect(),
        summary: summary_json(report, Some(tree)),
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct PointJson {
    pub point: String,
    pub multiplicity: u32,
    pub local_pencil: String,
    pub report: LocalReportJson,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct InfinityJson {
    pub field: String,
    pub input: String,
    pub degree: u32,
    pub points: Vec<PointJson>,
    pub nu_inf_gen: u64,
    pub bound_attained: bool,
    pub summary: SummaryJson,
}

pub fn infinity_json(input: &str, r: &InfinityReport) -> InfinityJson {
    let points = r
        .points
        .iter()
        .map(|p| {
            let local = print_pencil(p.pencil.poly(), &VarMap::default());
            PointJson {
                point: p.point.to_string(),
                multiplicity: p.multiplicity,
                report: local_report(&local, &p.tree, &p.report),
                local_pencil: local,
            }
        })
        .collect();
    let mut summary = summary_json(&r.combined, None);
    summary.warnings = r.warnings.clone();
    InfinityJson {
        field: field_name(r.field),
        input: input.to_string(),
        degree: r.degree,
        points,
        nu_inf_gen: r.nu_inf_gen(),
        bound_attained: r.bound_attained(),
        summary,
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct FactorJson {
    pub edge: [[u32; 2]; 2],
    pub kind: &'static str,
    pub y_degree: u32,
    pub weight: [u32; 2],
    pub precision: u32,
    pub terms: Vec<(u32, u32, String)>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct FactorizationJson {
    pub field: String,
    pub input: String,
    pub factors: Vec<FactorJson>,
    pub unit_constant: String,
    pub product_verified: bool,
    pub y_degree_sum: u32,
}

pub fn factorization_json(input: &str, field: Field, f: &EdgeFactorization, verified: bool) -> FactorizationJson {
    let factors = f
        .factors
        .iter()
        .map(|x| FactorJson {
            edge: [[x.edge.top.0, x.edge.top.1], [x.edge.bottom.0, x.edge.bottom.1]],
            kind: x.edge.kind.name(),
            y_degree: x.y_degree,
            weight: [x.factor.n, x.factor.m],
            precision: x.factor.precision,
            terms: x.factor.terms.iter().map(|(k, c)| (k.0, k.1, c.to_text())).collect(),
        })
        .collect();
    FactorizationJson {
        field: field_name(field),
        input: input.to_string(),
        factors,
        unit_constant: f.unit.terms.get(&(0, 0)).map_or("0".into(), |c| c.to_text()),
        product_verified: verified,
        y_degree_sum: f.y_degree_sum(),
    }
}

fn list(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

pub fn summary_text(s: &SummaryJson) -> String {
    let mut out = String::new();
    out.push_str(&format!("nu_gen = {}\nsum M_E = {}\n", s.nu_gen, s.bound_sum));
    out.push_str(&format!("atypical polynomial: {} ({} values)\n", s.atypical_union_poly, s.atypical_count));
    out.push_str(&format!("rational atypical values: {}\n", list(&s.rational_atypical)));
    match &s.extremality_flags {
        Some(f) => out.push_str(&format!("extremal: {}\n", if f.all { "yes" } else { "no" })),
        None => out.push_str("extremal: undetermined (inseparable dicritical)\n"),
    }
    if let Some(d) = &s.degree_identity {
        out.push_str(&format!("degree identity: {} = {} ({})\n", d.ord_y, d.sum, if d.holds { "holds" } else { "fails" }));
    }
    for w in &s.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

pub fn local_text(r: &LocalReportJson) -> String {
    let mut out = format!("field {}\npencil {}\n", r.field, r.input);
    out.push_str(&format!("{} nodes, {} dicriticals\n", r.tree.len(), r.dicriticals.len()));
    for d in &r.dicriticals {
        out.push_str(&format!(
            "  E{}: q_E = {}, d_E = {}, n_E = {}, chain {:?}, t0 = {}, atypical {}\n",
            d.id,
            d.q_E,
            d.d_E,
            d.n,
            d.path_ratios,
            d.t0,
            list(&d.rational_atypical)
        ));
    }
    out.push_str(&summary_text(&r.summary));
    out
}

pub fn infinity_text(r: &InfinityJson) -> String {
    let mut out = format!("field {}\npolynomial {} of degree {}\n", r.field, r.input, r.degree);
    for p in &r.points {
        out.push_str(&format!("point {} (multiplicity {})\n", p.point, p.multiplicity));
        for line in local_text(&p.report).lines() {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out.push_str(&format!("nu_inf_gen = {}\nbound attained: {}\n", r.nu_inf_gen, r.bound_attained));
    out.push_str(&summary_text(&r.summary));
    out
}
