//! Atypical values of a pencil at its dicritical divisors, and their bounds.

use thiserror::Error;

use crate::algebra::{critical_value_poly, rational_roots, squarefree_part, Field, FieldElement, KPoly};
use crate::resolver::{DicriticalRecord, ResolutionTree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AtypicalError {
    #[error("dicritical {0} is inseparable; extremality cannot be assessed")]
    InseparablePresent(usize),
}

/// Atypical data at one dicritical `E`.
#[derive(Clone, Debug, PartialEq)]
pub struct DicriticalAnalysis {
    pub record_id: usize,
    pub d_e: u32,
    pub n_e: u32,
    pub q_e: KPoly,
    pub t0: FieldElement,
    /// False when `q_E' = 0`; the fields below are then `None`.
    pub separable: bool,
    /// Critical values of `q_E`.
    pub a_e_poly: Option<KPoly>,
    /// Squarefree polynomial vanishing exactly on the atypical values at `E`.
    pub atypical_poly: Option<KPoly>,
    pub rational_atypical: Vec<FieldElement>,
    pub includes_t0: bool,
    /// Distinct nonzero roots of `q_E'` plus one.
    pub m_e: Option<u32>,
    pub warnings: Vec<String>,
}

impl DicriticalAnalysis {
    /// Number of distinct atypical values over the closure.
    pub fn atypical_count(&self) -> usize {
        self.atypical_poly.as_ref().map_or(0, |p| p.deg0())
    }
}

pub fn dicritical_analysis(rec: &DicriticalRecord) -> DicriticalAnalysis {
    let field = rec.q_e.field();
    let dq = rec.q_e.derivative();
    let mut out = DicriticalAnalysis {
        record_id: rec.id,
        d_e: rec.d_e,
        n_e: rec.n_e,
        q_e: rec.q_e.clone(),
        t0: rec.t0.clone(),
        separable: false,
        a_e_poly: None,
        atypical_poly: None,
        rational_atypical: Vec::new(),
        includes_t0: false,
        m_e: None,
        warnings: Vec::new(),
    };
    let a_e = match critical_value_poly(&rec.q_e) {
        Ok(a) => a,
        Err(_) => {
            out.warnings.push(format!(
                "dicritical {}: q_E = {} has identically zero derivative in characteristic {}; atypical values are not determined by q_E",
                rec.id,
                rec.q_e.to_text("z"),
                field.characteristic()
            ));
            return out;
        }
    };
    let dq_rad = squarefree_part(&dq);
    let nonzero_crit = dq_rad.deg0() - usize::from(dq_rad.coeff(0).is_zero() && dq_rad.deg0() > 0);
    let atyp = if rec.n_e > 1 {
        squarefree_part(&a_e.mul(&KPoly::linear_root(&rec.t0, field)))
    } else {
        a_e.clone()
    };
    if a_e.deg0() < dq_rad.deg0() {
        let shared: Vec<String> = rational_roots(&a_e)
            .roots
            .iter()
            .filter(|(v, _)| {
                let level = rec.q_e.sub(&KPoly::constant(v.clone(), field));
                squarefree_part(&level.gcd(&dq)).deg0() > 1
            })
            .map(|(v, _)| v.to_string())
            .collect();
        let detail = if shared.is_empty() {
            String::new()
        } else {
            format!(" (shared values: {})", shared.join(", "))
        };
        out.warnings.push(format!(
            "dicritical {}: {} distinct critical points of q_E give only {} distinct critical values{detail}",
            rec.id,
            dq_rad.deg0(),
            a_e.deg0()
        ));
    }
    out.separable = true;
    out.includes_t0 = atyp.eval(&rec.t0).is_zero();
    out.rational_atypical = rational_roots(&atyp).roots.into_iter().map(|(r, _)| r).collect();
    out.m_e = Some(nonzero_crit as u32 + 1);
    out.a_e_poly = Some(a_e);
    out.atypical_poly = Some(atyp);
    out
}

/// Pencil-level aggregation over all dicriticals of a resolution.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilReport {
    pub field: Field,
    pub analyses: Vec<DicriticalAnalysis>,
    /// Branches of a generic fibre: `sum d_E`.
    pub nu_gen: u64,
    /// `sum M_E` over separable dicriticals.
    pub bound_sum: u64,
    pub atypical_union_poly: KPoly,
    pub rational_atypical_union: Vec<FieldElement>,
    pub warnings: Vec<String>,
}

impl PencilReport {
    pub fn atypical_count(&self) -> usize {
        self.atypical_union_poly.deg0()
    }

    /// Generic-fibre arm of the min(nu_gen, nu_min + 1) bound.
    pub fn gw_bound_gen(&self) -> u64 {
        self.nu_gen
    }

    pub fn all_separable(&self) -> bool {
        self.analyses.iter().all(|a| a.separable)
    }
}

/// Squarefree product of several squarefree polynomials, i.e. the lcm.
pub fn union_poly(field: Field, polys: &[&KPoly]) -> KPoly {
    let prod = polys.iter().fold(KPoly::one(field), |acc, p| acc.mul(p));
    squarefree_part(&prod)
}

pub fn aggregate_report(tree: &ResolutionTree) -> PencilReport {
    let field = tree.root().pencil.poly().field();
    let analyses: Vec<DicriticalAnalysis> = tree.dicriticals.iter().map(dicritical_analysis).collect();
    report_from_analyses(field, analyses)
}

pub fn report_from_analyses(field: Field, analyses: Vec<DicriticalAnalysis>) -> PencilReport {
    let nu_gen = analyses.iter().map(|a| a.d_e as u64).sum();
    let bound_sum = analyses.iter().filter_map(|a| a.m_e).map(u64::from).sum();
    let polys: Vec<&KPoly> = analyses.iter().filter_map(|a| a.atypical_poly.as_ref()).collect();
    let union = union_poly(field, &polys);
    let rational = rational_roots(&union).roots.into_iter().map(|(r, _)| r).collect();
    let warnings = analyses.iter().flat_map(|a| a.warnings.iter().cloned()).collect();
    PencilReport {
        field,
        analyses,
        nu_gen,
        bound_sum,
        atypical_union_poly: union,
        rational_atypical_union: rational,
        warnings,
    }
}

/// Conditions under which the bound `sum M_E` is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicriticalFlags {
    pub record_id: usize,
    pub bamboo: bool,
    pub t0_not_critical: bool,
    pub derivative_squarefree: bool,
    pub critical_values_distinct: bool,
}

impl DicriticalFlags {
    pub fn all(&self) -> bool {
        self.bamboo && self.t0_not_critical && self.derivative_squarefree && self.critical_values_distinct
    }

    pub fn named(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("bamboo", self.bamboo),
            ("t0_not_critical", self.t0_not_critical),
            ("derivative_squarefree", self.derivative_squarefree),
            ("critical_values_distinct", self.critical_values_distinct),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalityFlags {
    pub per_dicritical: Vec<DicriticalFlags>,
    pub pairwise_disjoint: bool,
}

impl ExtremalityFlags {
    pub fn all(&self) -> bool {
        self.pairwise_disjoint && self.per_dicritical.iter().all(|f| f.all())
    }
}

pub fn dicritical_flags(a: &DicriticalAnalysis) -> Result<DicriticalFlags, AtypicalError> {
    let (Some(a_e), true) = (a.a_e_poly.as_ref(), a.separable) else {
        return Err(AtypicalError::InseparablePresent(a.record_id));
    };
    let dq = a.q_e.derivative();
    let dq_rad = squarefree_part(&dq);
    Ok(DicriticalFlags {
        record_id: a.record_id,
        bamboo: a.n_e > 1,
        t0_not_critical: !a_e.eval(&a.t0).is_zero(),
        derivative_squarefree: dq_rad.deg0() == dq.deg0(),
        critical_values_distinct: a_e.deg0() == dq_rad.deg0(),
    })
}

/// True when the polynomials have pairwise trivial gcd.
pub fn pairwise_disjoint(polys: &[&KPoly]) -> bool {
    for (i, a) in polys.iter().enumerate() {
        for b in &polys[i + 1..] {
            if a.gcd(b).deg0() > 0 {
                return false;
            }
        }
    }
    true
}

pub fn extremality_flags(report: &PencilReport) -> Result<ExtremalityFlags, AtypicalError> {
    let per = report.analyses.iter().map(dicritical_flags).collect::<Result<Vec<_>, _>>()?;
    let polys: Vec<&KPoly> = report.analyses.iter().filter_map(|a| a.atypical_poly.as_ref()).collect();
    Ok(ExtremalityFlags { per_dicritical: per, pairwise_disjoint: pairwise_disjoint(&polys) })
}
