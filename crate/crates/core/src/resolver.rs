//! The recursive toric-Newton process and its tree of Newton polygons.

use thiserror::Error;

use crate::algebra::{rational_roots, FieldElement, KPoly};
use crate::pencil::{absorb_translation, toric_newton_child, AbsorbStep, PencilError, SpecialPencil, ToricStep};
use crate::polygon::{edge_data, newton_polygon, Edge, EdgeKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolverError {
    #[error("resolution exceeded depth {0}; the input truncation may be too low")]
    DepthExceeded(usize),
    #[error("resolution exceeded the node budget {0}")]
    NodeBudgetExceeded(usize),
    #[error("edge polynomial {factor} has no roots in the ground field (strict mode)")]
    IrrationalBranch { factor: String },
    #[error("a branch could not be followed; the degree identity cannot be certified")]
    ResidualPresent,
    #[error("polygon has {0} dicritical edges")]
    MultipleDicritical(usize),
    #[error(transparent)]
    Pencil(#[from] PencilError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    pub max_depth: usize,
    pub max_nodes: usize,
    /// Fail instead of flagging when an edge polynomial does not split over K.
    pub strict: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { max_depth: 64, max_nodes: 100_000, strict: false }
    }
}

/// How a node was reached from its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncomingStep {
    Root,
    Toric(ToricStep),
    Absorb(AbsorbStep),
}

/// Positive-degree factor without roots in K, found on an ordinary edge.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualBranch {
    pub edge_index: usize,
    pub factor: KPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub pencil: SpecialPencil,
    pub polygon: Vec<Edge>,
    pub step: IncomingStep,
    pub depth: usize,
    /// v-ratios of the toric steps from the root to this node.
    pub ratio_chain: Vec<u32>,
    pub residuals: Vec<ResidualBranch>,
}

/// One dicritical divisor; its fibre equation is `q_E(z) = t`.
#[derive(Clone, Debug, PartialEq)]
pub struct DicriticalRecord {
    pub id: usize,
    pub node: usize,
    pub q_e: KPoly,
    pub gamma: FieldElement,
    pub d_e: u32,
    pub n_e: u32,
    pub m_e: u32,
    pub t0: FieldElement,
    pub ratio_chain: Vec<u32>,
    /// Number of steps from the root.
    pub h: usize,
    pub residual_flag: bool,
}

impl DicriticalRecord {
    /// `d_E * n_E * prod(chain)`, the y-degree of the matching factor.
    pub fn weighted_degree(&self) -> u64 {
        self.ratio_chain
            .iter()
            .fold(self.d_e as u64 * self.n_e as u64, |acc, r| acc * *r as u64)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionTree {
    pub nodes: Vec<ResolutionNode>,
    pub dicriticals: Vec<DicriticalRecord>,
}

impl ResolutionTree {
    pub fn root(&self) -> &ResolutionNode {
        &self.nodes[0]
    }

    pub fn has_residuals(&self) -> bool {
        self.nodes.iter().any(|n| !n.residuals.is_empty())
    }

    /// Number of dicritical edges in each node's polygon.
    pub fn dicritical_edge_counts(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .map(|n| n.polygon.iter().filter(|e| e.kind == EdgeKind::Dicritical).count())
            .collect()
    }
}

struct Builder {
    opts: ResolveOptions,
    nodes: Vec<ResolutionNode>,
    dicriticals: Vec<DicriticalRecord>,
}

impl Builder {
    fn expand(
        &mut self,
        pencil: SpecialPencil,
        parent: Option<usize>,
        step: IncomingStep,
        depth: usize,
        chain: Vec<u32>,
        inherited_residual: bool,
    ) -> Result<(), ResolverError> {
        if depth > self.opts.max_depth {
            return Err(ResolverError::DepthExceeded(self.opts.max_depth));
        }
        if self.nodes.len() >= self.opts.max_nodes {
            return Err(ResolverError::NodeBudgetExceeded(self.opts.max_nodes));
        }
        let id = self.nodes.len();
        let polygon = newton_polygon(pencil.poly());
        let dicritical_count = polygon.iter().filter(|e| e.kind == EdgeKind::Dicritical).count();
        if dicritical_count > 1 {
            return Err(ResolverError::MultipleDicritical(dicritical_count));
        }

        // Roots and residuals per edge are computed before children so the node
        // records its residual flag.
        let mut plans: Vec<(usize, Vec<(FieldElement, u32)>)> = Vec::new();
        let mut residuals = Vec::new();
        for (k, e) in polygon.iter().enumerate() {
            if e.kind != EdgeKind::Ordinary {
                continue;
            }
            let split = rational_roots(&edge_data(pencil.poly(), e).q0);
            if split.has_residual() {
                if self.opts.strict {
                    return Err(ResolverError::IrrationalBranch { factor: split.residual.to_text("s") });
                }
                residuals.push(ResidualBranch { edge_index: k, factor: split.residual.clone() });
            }
            plans.push((k, split.roots));
        }
        let residual_here = inherited_residual || !residuals.is_empty();

        self.nodes.push(ResolutionNode {
            id,
            parent,
            pencil: pencil.clone(),
            polygon: polygon.clone(),
            step,
            depth,
            ratio_chain: chain.clone(),
            residuals,
        });

        for e in polygon.iter() {
            match e.kind {
                EdgeKind::Dicritical => {
                    let sup = edge_data(pencil.poly(), e);
                    let ginv = sup.gamma.inv().expect("dicritical gamma is nonzero");
                    let q_e = sup.q0.scale(&ginv);
                    let t0 = q_e.coeff(0);
                    self.dicriticals.push(DicriticalRecord {
                        id: self.dicriticals.len(),
                        node: id,
                        d_e: e.d,
                        n_e: e.n,
                        m_e: e.m,
                        t0,
                        q_e,
                        gamma: sup.gamma,
                        ratio_chain: chain.clone(),
                        h: depth,
                        residual_flag: residual_here,
                    });
                }
                EdgeKind::Absorbable => {
                    let (child, st) = absorb_translation(&pencil, e)?;
                    self.expand(child, Some(id), IncomingStep::Absorb(st), depth + 1, chain.clone(), residual_here)?;
                }
                EdgeKind::Ordinary => {}
            }
        }
        for (k, roots) in plans {
            let e = &polygon[k];
            for (alpha, mult) in roots {
                let (child, st) = toric_newton_child(&pencil, e, &alpha, mult)?;
                let mut next_chain = chain.clone();
                next_chain.push(e.n);
                self.expand(child, Some(id), IncomingStep::Toric(st), depth + 1, next_chain, residual_here)?;
            }
        }
        Ok(())
    }
}

/// Runs the toric-Newton process to completion.
pub fn resolve(s: &SpecialPencil, opts: &ResolveOptions) -> Result<ResolutionTree, ResolverError> {
    let mut b = Builder { opts: *opts, nodes: Vec::new(), dicriticals: Vec::new() };
    b.expand(s.clone(), None, IncomingStep::Root, 0, Vec::new(), false)?;
    Ok(ResolutionTree { nodes: b.nodes, dicriticals: b.dicriticals })
}

/// `ord_y = sum_i d_E n_E prod(chain)` over the dicriticals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeIdentity {
    pub lhs: u64,
    pub rhs: u64,
    pub ok: bool,
    pub per_dicritical: Vec<u64>,
}

pub fn degree_identity(tree: &ResolutionTree) -> Result<DegreeIdentity, ResolverError> {
    if tree.has_residuals() {
        return Err(ResolverError::ResidualPresent);
    }
    let lhs = tree.root().pencil.y_order() as u64;
    let per: Vec<u64> = tree.dicriticals.iter().map(|d| d.weighted_degree()).collect();
    let rhs = per.iter().sum();
    Ok(DegreeIdentity { lhs, rhs, ok: lhs == rhs, per_dicritical: per })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BiPoly, Field};
    use crate::pencil::make_pencil;

    fn local(p: &[(u32, u32, i64)], c: u32) -> SpecialPencil {
        let f = Field::Rationals;
        make_pencil(&BiPoly::from_i64s(f, p), c, &BiPoly::one(f)).unwrap()
    }

    #[test]
    fn depth_zero_dicritical() {
        let s = local(&[(0, 4, 1), (3, 2, 1), (7, 1, 1), (12, 0, 1)], 6);
        let t = resolve(&s, &ResolveOptions::default()).unwrap();
        assert_eq!(t.dicriticals.len(), 1);
        let d = &t.dicriticals[0];
        assert_eq!((d.d_e, d.n_e, d.h), (2, 2, 0));
        assert_eq!(d.q_e, KPoly::from_i64s(&[0, 1, 1], Field::Rationals));
        let id = degree_identity(&t).unwrap();
        assert_eq!((id.lhs, id.rhs, id.ok), (4, 4, true));
    }

    #[test]
    fn cubic_degree_identity() {
        let s = local(&[(0, 3, 1), (1, 2, 1), (4, 0, -1)], 3);
        let t = resolve(&s, &ResolveOptions::default()).unwrap();
        let id = degree_identity(&t).unwrap();
        assert_eq!((id.lhs, id.rhs), (3, 3));
        assert_eq!(t.dicriticals[0].n_e, 1);
    }

    #[test]
    fn residual_blocks_identity_and_strict_fails() {
        // (y^2 + x^2)^? : y^2 + x^2 - T x^3 has no rational branch
        let s = local(&[(0, 2, 1), (2, 0, 1)], 3);
        let t = resolve(&s, &ResolveOptions::default()).unwrap();
        assert!(t.has_residuals());
        assert_eq!(degree_identity(&t), Err(ResolverError::ResidualPresent));
        let strict = ResolveOptions { strict: true, ..Default::default() };
        assert!(matches!(resolve(&s, &strict), Err(ResolverError::IrrationalBranch { .. })));
    }

    #[test]
    fn depth_budget() {
        let s = local(&[(0, 4, 1), (3, 2, 1), (7, 1, 1), (12, 0, 1)], 6);
        let t = resolve(&s, &ResolveOptions { max_nodes: 0, ..Default::default() });
        assert_eq!(t, Err(ResolverError::NodeBudgetExceeded(0)));
    }
}
