//! Report documents emitted by the CLI, with text and CSV renderings.
//! JSON renderings follow the versioned schemas under `docs/`.

use serde::Serialize;
use vosper_core::classify::{SuperconnVerdict, SuperconnVia, VosperianVerdict};
use vosper_core::connectivity::ConnectivityProfile;
use vosper_core::digraph::Fragment;
use vosper_core::symmetry::TwinPartition;
use vosper_core::VertexSet;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct InputSummary {
    pub kind: &'static str,
    pub source: String,
    pub group: Option<String>,
    pub subset: Option<Vec<usize>>,
    pub vertices: usize,
    pub arcs: usize,
}

#[derive(Serialize)]
pub struct OracleSection {
    pub vosperian: bool,
    pub superconnected: bool,
    pub kappa: usize,
    pub kappa2: Option<usize>,
}

/// Theorem verdicts for Cayley inputs. `superconn_via` is `oracle_only`
/// when the connection set is periodic and the characterization does not
/// apply; the value then comes from the direct decider.
#[derive(Serialize)]
pub struct CayleySection {
    pub aperiodic: bool,
    pub vosperian: bool,
    pub condition: String,
    pub subgroup_witness: Option<SubgroupWitnessReport>,
    pub coprogression_witness: Option<CoprogressionReport>,
    pub superconnected: bool,
    pub superconn_via: String,
    pub superconn_witness: Option<CoprogressionReport>,
}

#[derive(Serialize)]
pub struct SubgroupWitnessReport {
    pub subgroup: Vec<usize>,
    pub element: usize,
}

#[derive(Serialize)]
pub struct CoprogressionReport {
    pub ratio: usize,
    pub anchor: usize,
    pub complement: Vec<usize>,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub schema_version: &'static str,
    pub input: InputSummary,
    pub degree: usize,
    pub kappa: usize,
    pub kappa2: Option<usize>,
    pub vosperian: bool,
    pub superconnected: bool,
    pub irreducible: bool,
    pub twin_classes: Vec<Vec<usize>>,
    pub witness_fragment: Option<FragmentReport>,
    pub witness_cutset: Option<Vec<usize>>,
    pub cayley: Option<CayleySection>,
    pub oracle: Option<OracleSection>,
}

#[derive(Serialize)]
pub struct FragmentReport {
    pub vertices: Vec<usize>,
    pub boundary: Vec<usize>,
    pub exterior: Vec<usize>,
}

#[derive(Serialize)]
pub struct AtomsReport {
    pub schema_version: &'static str,
    pub input: InputSummary,
    pub k: usize,
    pub kappa_k: usize,
    pub positive_atoms: Vec<Vec<usize>>,
    pub negative_atoms: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub schema_version: &'static str,
    pub suite: String,
    pub seed: Option<u64>,
    pub instances: usize,
    pub passed: bool,
    pub violations: Vec<String>,
    pub findings: Vec<String>,
}

impl FragmentReport {
    pub fn from_fragment(f: &Fragment) -> Self {
        FragmentReport {
            vertices: f.vertices.to_vec(),
            boundary: f.boundary.to_vec(),
            exterior: f.exterior.to_vec(),
        }
    }
}

impl CoprogressionReport {
    fn from_witness(w: &vosper_core::group::CoprogressionWitness) -> Self {
        CoprogressionReport {
            ratio: w.ratio,
            anchor: w.anchor,
            complement: w.complement.clone(),
        }
    }
}

impl CayleySection {
    pub fn build(
        aperiodic: bool,
        vosperian: &VosperianVerdict,
        superconn: Option<&SuperconnVerdict>,
        direct_superconnected: bool,
    ) -> Self {
        let (superconnected, via, witness) = match superconn {
            Some(v) => (
                v.superconnected,
                match v.via {
                    SuperconnVia::Vosperian => "vosperian",
                    SuperconnVia::Coprogression => "coprogression",
                    SuperconnVia::None => "none",
                }
                .to_string(),
                v.witness.as_ref().map(CoprogressionReport::from_witness),
            ),
            None => (direct_superconnected, "oracle_only".to_string(), None),
        };
        CayleySection {
            aperiodic,
            vosperian: vosperian.vosperian,
            condition: vosperian.condition.to_string(),
            subgroup_witness: vosperian
                .subgroup_witness
                .as_ref()
                .map(|w| SubgroupWitnessReport {
                    subgroup: w.subgroup.to_vec(),
                    element: w.element,
                }),
            coprogression_witness: vosperian
                .coprogression_witness
                .as_ref()
                .map(CoprogressionReport::from_witness),
            superconnected,
            superconn_via: via,
            superconn_witness: witness,
        }
    }
}

impl AnalyzeReport {
    pub fn build(
        input: InputSummary,
        profile: &ConnectivityProfile,
        twins: &TwinPartition,
        irreducible: bool,
        cayley: Option<CayleySection>,
        oracle: Option<OracleSection>,
    ) -> Self {
        AnalyzeReport {
            schema_version: SCHEMA_VERSION,
            input,
            degree: profile.degree,
            kappa: profile.kappa,
            kappa2: profile.kappa2,
            vosperian: profile.vosperian,
            superconnected: profile.superconnected,
            irreducible,
            twin_classes: twins.classes.iter().map(VertexSet::to_vec).collect(),
            witness_fragment: profile
                .witness_fragment
                .as_ref()
                .map(FragmentReport::from_fragment),
            witness_cutset: profile.witness_cutset.as_ref().map(VertexSet::to_vec),
            cayley,
            oracle,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("input: {}", self.input.source));
        push(
            &mut out,
            format!(
                "vertices: {}  arcs: {}  degree: {}",
                self.input.vertices, self.input.arcs, self.degree
            ),
        );
        push(
            &mut out,
            format!(
                "kappa: {}  kappa_2: {}",
                self.kappa,
                self.kappa2
                    .map_or("none (not 2-separable)".to_string(), |k| k.to_string())
            ),
        );
        push(
            &mut out,
            format!(
                "vosperian: {}  superconnected: {}  irreducible: {}",
                self.vosperian, self.superconnected, self.irreducible
            ),
        );
        if let Some(f) = &self.witness_fragment {
            push(
                &mut out,
                format!(
                    "2-fragment witness: X={:?} boundary={:?} exterior={:?}",
                    f.vertices, f.boundary, f.exterior
                ),
            );
        }
        if let Some(t) = &self.witness_cutset {
            push(&mut out, format!("non-trivial cutset witness: {t:?}"));
        }
        if let Some(c) = &self.cayley {
            push(
                &mut out,
                format!(
                    "characterization: vosperian={} condition={}",
                    c.vosperian, c.condition
                ),
            );
            if let Some(w) = &c.subgroup_witness {
                push(
                    &mut out,
                    format!("  subgroup witness: H={:?} a={}", w.subgroup, w.element),
                );
            }
            if let Some(w) = &c.coprogression_witness {
                push(
                    &mut out,
                    format!(
                        "  coprogression witness: r={} a={} complement={:?}",
                        w.ratio, w.anchor, w.complement
                    ),
                );
            }
            push(
                &mut out,
                format!(
                    "characterization: superconnected={} via={}",
                    c.superconnected, c.superconn_via
                ),
            );
            if let Some(w) = &c.superconn_witness {
                push(
                    &mut out,
                    format!(
                        "  coprogression witness: r={} a={} complement={:?}",
                        w.ratio, w.anchor, w.complement
                    ),
                );
            }
        }
        if let Some(o) = &self.oracle {
            push(
                &mut out,
                format!(
                    "oracle: vosperian={} superconnected={} kappa={} kappa2={:?}",
                    o.vosperian, o.superconnected, o.kappa, o.kappa2
                ),
            );
        }
        out
    }

    pub fn csv_header() -> [&'static str; 11] {
        [
            "input",
            "vertices",
            "degree",
            "kappa",
            "kappa2",
            "vosperian",
            "superconnected",
            "irreducible",
            "condition",
            "superconn_via",
            "witness",
        ]
    }

    pub fn csv_fields(&self) -> [String; 11] {
        let (condition, via, witness) = match &self.cayley {
            Some(c) => {
                let witness = if let Some(w) = &c.subgroup_witness {
                    format!("H={:?} a={}", w.subgroup, w.element)
                } else if let Some(w) = c
                    .coprogression_witness
                    .as_ref()
                    .or(c.superconn_witness.as_ref())
                {
                    format!("r={} a={}", w.ratio, w.anchor)
                } else {
                    String::new()
                };
                (c.condition.clone(), c.superconn_via.clone(), witness)
            }
            None => (String::new(), String::new(), String::new()),
        };
        [
            self.input.source.clone(),
            self.input.vertices.to_string(),
            self.degree.to_string(),
            self.kappa.to_string(),
            self.kappa2.map(|k| k.to_string()).unwrap_or_default(),
            self.vosperian.to_string(),
            self.superconnected.to_string(),
            self.irreducible.to_string(),
            condition,
            via,
            witness,
        ]
    }
}

impl AtomsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input: {}\n", self.input.source));
        out.push_str(&format!("kappa_{} = {}\n", self.k, self.kappa_k));
        out.push_str(&format!(
            "positive {}-atoms ({}):\n",
            self.k,
            self.positive_atoms.len()
        ));
        for a in &self.positive_atoms {
            out.push_str(&format!("  {a:?}\n"));
        }
        out.push_str(&format!(
            "negative {}-atoms ({}):\n",
            self.k,
            self.negative_atoms.len()
        ));
        for a in &self.negative_atoms {
            out.push_str(&format!("  {a:?}\n"));
        }
        out
    }
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "suite {}: {status} ({} instances, {} violations, {} findings)\n",
            self.suite,
            self.instances,
            self.violations.len(),
            self.findings.len()
        ));
        for v in &self.violations {
            out.push_str(&format!("violation: {v}\n"));
        }
        for f in &self.findings {
            out.push_str(&format!("finding: {f}\n"));
        }
        out
    }
}
