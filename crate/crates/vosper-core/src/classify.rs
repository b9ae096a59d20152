//! Algebraic classifiers for Cayley digraphs: vosperianity via the
//! union-of-cosets and coprogression conditions, superconnectivity for
//! aperiodic connection sets, the arc-transitive characterization, and the
//! exhaustive audit harness that checks every classifier against the
//! combinatorial deciders and the brute-force oracles.

use crate::bitset::GroupSubset;
use crate::connectivity::{
    is_superconnected, is_vosperian, isoperimetric_connectivity, vertex_connectivity,
    ConnectivityError,
};
use crate::digraph::{degree_profile, Digraph};
use crate::group::{
    right_coprogression_witnesses, small_group_catalog, CoprogressionWitness, FiniteGroup,
    GroupError,
};
use crate::oracle::{
    confirm_vosperian_definition_gap, connectivity_bruteforce, kappa_k_bruteforce,
    superconnected_by_definition, vosperian_by_definition, OracleBudget,
};
use crate::symmetry::{is_arc_transitive, is_irreducible, SymmetryError};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("connection set must not contain the identity")]
    IdentityInSet,
    #[error("connection set does not generate the group")]
    NotGenerating,
    #[error("connection set is periodic; the characterization assumes an irreducible digraph, use the brute-force decider instead")]
    PeriodicSet,
    #[error("digraph is not arc-transitive")]
    NotArcTransitive,
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Which non-vosperianity condition fired, in evaluation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VosperianCondition {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "cond_i")]
    CondI,
    #[serde(rename = "cond_ii")]
    CondII,
    #[serde(rename = "cond_iii")]
    CondIII,
}

impl std::fmt::Display for VosperianCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            VosperianCondition::None => "none",
            VosperianCondition::CondI => "cond_i",
            VosperianCondition::CondII => "cond_ii",
            VosperianCondition::CondIII => "cond_iii",
        };
        f.write_str(s)
    }
}

/// The `(H, a)` pair of the union-of-cosets conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupWitness {
    pub subgroup: GroupSubset,
    pub element: usize,
}

/// Outcome of the vosperianity characterization, carrying a re-checkable
/// witness for the first condition that fired.
#[derive(Clone, Debug, Serialize)]
pub struct VosperianVerdict {
    pub vosperian: bool,
    pub condition: VosperianCondition,
    pub subgroup_witness: Option<SubgroupWitness>,
    pub coprogression_witness: Option<CoprogressionWitness>,
}

/// `|(H ∪ Ha) S̃| <= min(|G|-2, |H ∪ Ha| + |S|)` for condition (i); condition
/// (ii) flips the product to `S̃ (H ∪ aH)`. The bound always uses the size
/// of the coset union on its own side, which equals `|H ∪ Ha|` either way.
fn coset_union_bound_holds(
    g: &FiniteGroup,
    s: &GroupSubset,
    h: &GroupSubset,
    a: usize,
    flipped: bool,
) -> bool {
    let s_tilde = g.with_identity(s);
    let union = if flipped {
        h.union(&g.left_translate(a, h))
    } else {
        h.union(&g.right_translate(h, a))
    };
    let product = if flipped {
        g.minkowski(&s_tilde, &union)
    } else {
        g.minkowski(&union, &s_tilde)
    };
    product.len() <= (g.order() - 2).min(union.len() + s.len())
}

impl VosperianVerdict {
    fn vosperian() -> Self {
        VosperianVerdict {
            vosperian: true,
            condition: VosperianCondition::None,
            subgroup_witness: None,
            coprogression_witness: None,
        }
    }

    fn from_coset_union(
        g: &FiniteGroup,
        s: &GroupSubset,
        h: GroupSubset,
        a: usize,
        condition: VosperianCondition,
    ) -> Self {
        assert!(h.len() >= 2);
        assert!(coset_union_bound_holds(
            g,
            s,
            &h,
            a,
            condition == VosperianCondition::CondII
        ));
        VosperianVerdict {
            vosperian: false,
            condition,
            subgroup_witness: Some(SubgroupWitness {
                subgroup: h,
                element: a,
            }),
            coprogression_witness: None,
        }
    }

    fn from_coprogression(g: &FiniteGroup, s: &GroupSubset, witness: CoprogressionWitness) -> Self {
        assert!(s.len() + 4 <= g.order());
        assert!(witness.verify(g, &g.with_identity(s)));
        VosperianVerdict {
            vosperian: false,
            condition: VosperianCondition::CondIII,
            subgroup_witness: None,
            coprogression_witness: Some(witness),
        }
    }
}

fn check_cayley_preconditions(g: &FiniteGroup, s: &GroupSubset) -> Result<(), ClassifyError> {
    if s.contains(g.identity()) {
        return Err(ClassifyError::IdentityInSet);
    }
    if !g.is_generating(s) {
        return Err(ClassifyError::NotGenerating);
    }
    Ok(())
}

/// Characterizes vosperianity of `Cay(G, S)` algebraically. Conditions are
/// tried in order (i), (ii), (iii) and the first hit is reported.
pub fn classify_vosperian_cayley(
    g: &FiniteGroup,
    s: &GroupSubset,
) -> Result<VosperianVerdict, ClassifyError> {
    check_cayley_preconditions(g, s)?;
    let subgroups: Vec<GroupSubset> = g.subgroups().into_iter().filter(|h| h.len() >= 2).collect();
    for flipped in [false, true] {
        let condition = if flipped {
            VosperianCondition::CondII
        } else {
            VosperianCondition::CondI
        };
        for h in &subgroups {
            for a in 0..g.order() {
                if coset_union_bound_holds(g, s, h, a, flipped) {
                    return Ok(VosperianVerdict::from_coset_union(
                        g,
                        s,
                        h.clone(),
                        a,
                        condition,
                    ));
                }
            }
        }
    }
    if s.len() + 4 <= g.order() {
        if let Some(witness) = right_coprogression_witnesses(g, &g.with_identity(s))?
            .into_iter()
            .next()
        {
            return Ok(VosperianVerdict::from_coprogression(g, s, witness));
        }
    }
    Ok(VosperianVerdict::vosperian())
}

/// Route by which superconnectivity was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuperconnVia {
    Vosperian,
    Coprogression,
    None,
}

/// Outcome of the superconnectivity characterization for aperiodic
/// connection sets.
#[derive(Clone, Debug, Serialize)]
pub struct SuperconnVerdict {
    pub superconnected: bool,
    pub via: SuperconnVia,
    pub witness: Option<CoprogressionWitness>,
}

/// Characterizes superconnectivity of an irreducible `Cay(G, S)`:
/// vosperian, or `S̃` a right r-coprogression with `r^-1 ∉ S` and
/// `|S| <= |G| - 4`. Periodic connection sets are rejected; the theorem
/// does not cover them.
pub fn classify_superconnected_cayley(
    g: &FiniteGroup,
    s: &GroupSubset,
) -> Result<SuperconnVerdict, ClassifyError> {
    check_cayley_preconditions(g, s)?;
    if !g.is_aperiodic(s) {
        return Err(ClassifyError::PeriodicSet);
    }
    if classify_vosperian_cayley(g, s)?.vosperian {
        return Ok(SuperconnVerdict {
            superconnected: true,
            via: SuperconnVia::Vosperian,
            witness: None,
        });
    }
    if s.len() + 4 <= g.order() {
        let qualifying = right_coprogression_witnesses(g, &g.with_identity(s))?
            .into_iter()
            .find(|w| !s.contains(g.inverse(w.ratio)));
        if let Some(witness) = qualifying {
            assert!(witness.verify(g, &g.with_identity(s)));
            return Ok(SuperconnVerdict {
                superconnected: true,
                via: SuperconnVia::Coprogression,
                witness: Some(witness),
            });
        }
    }
    Ok(SuperconnVerdict {
        superconnected: false,
        via: SuperconnVia::None,
        witness: None,
    })
}

/// Equation check for coprogression witnesses: `|{1, r} S̃| = |S| + 2`.
pub fn coprogression_growth_holds(g: &FiniteGroup, s: &GroupSubset, ratio: usize) -> bool {
    let pair = g.subset([g.identity(), ratio]);
    g.minkowski(&pair, &g.with_identity(s)).len() == s.len() + 2
}

/// Prediction of the arc-transitive characterization: inside the covered
/// parameter range (degree at most `|V| - 4` and not 1, 2, 4 or 6) a
/// strongly connected arc-transitive digraph is vosperian exactly when it
/// is irreducible. Outside the range the theorem is silent.
pub fn classify_arc_transitive(d: &Digraph) -> Result<Option<bool>, ClassifyError> {
    let degree = degree_profile(d)
        .degree
        .ok_or(ConnectivityError::NotRegular)?;
    if !d.is_strongly_connected() {
        return Err(ConnectivityError::NotStronglyConnected.into());
    }
    if !is_arc_transitive(d)? {
        return Err(ClassifyError::NotArcTransitive);
    }
    let n = d.vertex_count();
    if degree + 4 <= n && ![1, 2, 4, 6].contains(&degree) {
        Ok(Some(is_irreducible(d)))
    } else {
        Ok(None)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coprimality corollary: a strongly connected arc-transitive digraph of
/// degree not in `{2, 4, 6}` with `gcd(|V|, d) = 1` is predicted vosperian.
/// `None` when any precondition fails (or cannot be established).
pub fn corollary_gcd_check(d: &Digraph) -> Option<bool> {
    let degree = degree_profile(d).degree?;
    if !d.is_strongly_connected() || [2, 4, 6].contains(&degree) {
        return None;
    }
    if gcd(d.vertex_count(), degree) != 1 {
        return None;
    }
    match is_arc_transitive(d) {
        Ok(true) => Some(true),
        _ => None,
    }
}

/// Outcome of the half-order corollary, cross-checked against the
/// superconnectivity classifier.
#[derive(Clone, Debug, Serialize)]
pub struct HalfOrderVerdict {
    pub superconnected_predicted: bool,
    pub vosperian: bool,
    pub progression_ratio: Option<usize>,
    pub classifier_superconnected: bool,
    pub agreement: bool,
}

/// For aperiodic generating `S` with `1 ∉ S` and `|S| <= |G| / 2`:
/// superconnected iff vosperian or (`G` cyclic and `S = {r, r², .., r^|S|}`
/// for some `r`). `None` when the preconditions fail.
pub fn corollary_half_order_check(
    g: &FiniteGroup,
    s: &GroupSubset,
) -> Result<Option<HalfOrderVerdict>, ClassifyError> {
    if s.contains(g.identity())
        || !g.is_generating(s)
        || !g.is_aperiodic(s)
        || 2 * s.len() > g.order()
    {
        return Ok(None);
    }
    let vosperian = classify_vosperian_cayley(g, s)?.vosperian;
    let progression_ratio = (0..g.order()).find(|&r| {
        r != g.identity() && {
            let powers = g.subset((1..=s.len()).map(|k| g.power(r, k)));
            powers == *s
        }
    });
    let predicted = vosperian || (g.is_cyclic() && progression_ratio.is_some());
    let classifier = classify_superconnected_cayley(g, s)?.superconnected;
    Ok(Some(HalfOrderVerdict {
        superconnected_predicted: predicted,
        vosperian,
        progression_ratio,
        classifier_superconnected: classifier,
        agreement: predicted == classifier,
    }))
}

/// One row of the exhaustive audit: the classifier verdicts next to the
/// combinatorial deciders and, when requested, the brute-force oracles.
///
/// `agreement` is true when every computed route matches, except that a
/// brute-force-confirmed occurrence of the documented gap between the
/// literal cutset wording of vosperianity and its isoperimetric form does
/// not count as a disagreement; `vosperian_thm` and `vosperian_oracle`
/// keep both values visible on such rows.
#[derive(Clone, Debug, Serialize)]
pub struct AuditRecord {
    pub group: String,
    pub subset: Vec<usize>,
    pub degree: usize,
    pub kappa: usize,
    pub kappa2: Option<usize>,
    pub vosperian_thm: bool,
    pub vosperian_oracle: Option<bool>,
    pub superconn_thm: Option<bool>,
    pub superconn_oracle: Option<bool>,
    pub condition: VosperianCondition,
    pub witness: Option<String>,
    pub agreement: bool,
}

impl AuditRecord {
    pub const CSV_HEADER: [&'static str; 12] = [
        "group",
        "subset",
        "degree",
        "kappa",
        "kappa2",
        "vosperian_thm",
        "vosperian_oracle",
        "superconn_thm",
        "superconn_oracle",
        "condition",
        "witness",
        "agreement",
    ];

    pub fn csv_fields(&self) -> [String; 12] {
        let opt_bool = |b: Option<bool>| b.map(|v| v.to_string()).unwrap_or_default();
        [
            self.group.clone(),
            self.subset
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.degree.to_string(),
            self.kappa.to_string(),
            self.kappa2.map(|v| v.to_string()).unwrap_or_default(),
            self.vosperian_thm.to_string(),
            opt_bool(self.vosperian_oracle),
            opt_bool(self.superconn_thm),
            opt_bool(self.superconn_oracle),
            self.condition.to_string(),
            self.witness.clone().unwrap_or_default(),
            self.agreement.to_string(),
        ]
    }
}

fn witness_string(
    verdict: &VosperianVerdict,
    superconn: Option<&SuperconnVerdict>,
) -> Option<String> {
    if let Some(sw) = &verdict.subgroup_witness {
        return Some(format!("H={} a={}", sw.subgroup, sw.element));
    }
    if let Some(cw) = &verdict.coprogression_witness {
        return Some(format!("r={} a={}", cw.ratio, cw.anchor));
    }
    if let Some(sc) = superconn {
        if let Some(cw) = &sc.witness {
            return Some(format!("r={} a={}", cw.ratio, cw.anchor));
        }
    }
    None
}

/// Audits a single Cayley instance. Preconditions (`1 ∉ S`, generating)
/// must already hold.
fn audit_one(g: &FiniteGroup, s: &GroupSubset, use_oracle: bool) -> AuditRecord {
    let d = Digraph::cayley(g, s).expect("no identity in S");
    let verdict = classify_vosperian_cayley(g, s).expect("preconditions checked");
    let vosperian_prod = is_vosperian(&d).expect("regular and strongly connected");
    let kappa = vertex_connectivity(&d);
    let kappa2 = isoperimetric_connectivity(&d, 2).expect("catalog scale");
    let superconn_prod = is_superconnected(&d).expect("catalog scale");
    let superconn_verdict = if g.is_aperiodic(s) {
        Some(classify_superconnected_cayley(g, s).expect("aperiodic"))
    } else {
        None
    };

    let mut agreement = verdict.vosperian == vosperian_prod;
    if let Some(sc) = &superconn_verdict {
        agreement &= sc.superconnected == superconn_prod;
    }

    let mut vosperian_oracle = None;
    let mut superconn_oracle = None;
    if use_oracle {
        let budget = OracleBudget::default();
        let vo = vosperian_by_definition(&d, budget).expect("within budget");
        let so = superconnected_by_definition(&d, budget).expect("within budget");
        vosperian_oracle = Some(vo);
        superconn_oracle = Some(so);
        if vo != verdict.vosperian {
            // A confirmed instance of the documented gap between the
            // literal cutset definition and the isoperimetric route is not
            // an implementation disagreement; both values stay visible in
            // the record.
            agreement &=
                confirm_vosperian_definition_gap(g.label(), &d, verdict.vosperian, vo).is_ok();
        }
        agreement &= so == superconn_prod;
        agreement &= connectivity_bruteforce(&d, budget).expect("within budget") == kappa;
        agreement &= kappa_k_bruteforce(&d, 2, budget).expect("within budget") == kappa2;
    }

    AuditRecord {
        group: g.label().to_string(),
        subset: s.to_vec(),
        degree: s.len(),
        kappa,
        kappa2,
        vosperian_thm: verdict.vosperian,
        vosperian_oracle,
        superconn_thm: superconn_verdict.as_ref().map(|v| v.superconnected),
        superconn_oracle,
        witness: witness_string(&verdict, superconn_verdict.as_ref()),
        condition: verdict.condition,
        agreement,
    }
}

/// Every generating connection set over every catalog group up to the
/// requested order, audited and sorted by (group label, subset).
pub fn enumerate_and_audit(
    catalog_max_order: usize,
    use_oracle: bool,
) -> Result<Vec<AuditRecord>, ClassifyError> {
    let groups = small_group_catalog(catalog_max_order)?;
    let mut jobs: Vec<(&FiniteGroup, GroupSubset)> = Vec::new();
    for g in &groups {
        let n = g.order();
        let elements: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
        for mask in 1u64..(1 << elements.len()) {
            let s = g.subset(
                elements
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x),
            );
            if g.is_generating(&s) {
                jobs.push((g, s));
            }
        }
    }
    let mut records: Vec<AuditRecord> = jobs
        .par_iter()
        .map(|(g, s)| audit_one(g, s, use_oracle))
        .collect();
    records.sort_by(|a, b| (&a.group, &a.subset).cmp(&(&b.group, &b.subset)));
    Ok(records)
}
