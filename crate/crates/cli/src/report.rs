//! Machine-readable results. Every polynomial is stored as canonical text,
//! so a report survives a JSON round trip unchanged.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::context::ContextSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// The arguments the command was invoked with, program name excluded.
    pub command: Vec<String>,
    pub context: Option<ContextSpec>,
    pub results: Results,
    pub flags: Flags,
    pub timing_us: u64,
}

/// Stability and soundness flags. `None` means not applicable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub stable: Option<bool>,
    pub sound: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub soundness_failures: Vec<String>,
    /// `P^q` fits in the coefficient box for all `q·deg P <= D`.
    pub powers_in_box: Option<bool>,
    pub verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub max_xdeg: usize,
    pub ydeg_bound: usize,
    pub stability_delta: usize,
}

/// Dimension of the leading-coefficient space in one x-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDim {
    pub degree: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleDegree {
    pub m: usize,
    pub k: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum PurePowerReport {
    ViolationFound { a: String, i: u32, j: u32 },
    NoViolationUpTo { max_exp: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteInfo {
    pub name: String,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub seed: u64,
    pub checks: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Results {
    /// `mul`, `pow`, `commutator`, `normalize`.
    Value { value: String },
    Centralizer {
        p: String,
        bounds: BoxSpec,
        dim: usize,
        stability_dim: usize,
        basis: Vec<String>,
        /// Per basis element: does it lie in K[P]?
        in_k_p: Vec<bool>,
        module_generators: Vec<String>,
        generator_count: usize,
        leading_space_dims: Vec<DegreeDim>,
        commutative: bool,
        base_ring_part_is_constants: bool,
        special_case: Option<String>,
    },
    Generators {
        p: String,
        bounds: BoxSpec,
        generators: Vec<String>,
        count: usize,
    },
    Analysis {
        p: String,
        n: usize,
        rho: usize,
        s: usize,
        prime_degree: bool,
        small_leading: bool,
        guarantees_polynomial_in_p: bool,
        pure_power: Option<PurePowerReport>,
        monomial_generator: Option<String>,
        admissible: Vec<AdmissibleDegree>,
    },
    MonomialGenerator {
        i: usize,
        j: usize,
        s: u64,
        l: usize,
        k: usize,
        generator: String,
        commutes: bool,
    },
    Classification {
        set: Vec<String>,
        verdict: String,
        centralizer_of: Option<String>,
        bounds: BoxSpec,
        bounded_dim: usize,
        expected_dim: usize,
        consistent: bool,
    },
    Verification { suites: Vec<SuiteResult> },
    SuiteList { suites: Vec<SuiteInfo> },
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Plain-text summary for standard output.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        if let Some(c) = &self.context {
            let _ = writeln!(
                out,
                "context: field={} sigma(y)={} delta(y)={}",
                c.field, c.sigma_y, c.delta_y
            );
        }
        match &self.results {
            Results::Value { value } => {
                let _ = writeln!(out, "{value}");
            }
            Results::Centralizer {
                p,
                bounds,
                dim,
                stability_dim,
                basis,
                in_k_p,
                module_generators,
                leading_space_dims,
                commutative,
                special_case,
                ..
            } => {
                let _ = writeln!(out, "P = {p}");
                let _ = writeln!(out, "box: {}", box_text(bounds));
                if let Some(sc) = special_case {
                    let _ = writeln!(out, "special case: {sc}");
                }
                let _ = writeln!(
                    out,
                    "dimension {dim} (at B+{}: {stability_dim})",
                    bounds.stability_delta
                );
                for (q, inside) in basis.iter().zip(in_k_p) {
                    let tag = if *inside { "" } else { "   [not in K[P]]" };
                    let _ = writeln!(out, "  {q}{tag}");
                }
                let _ = writeln!(out, "module generators ({}):", module_generators.len());
                for g in module_generators {
                    let _ = writeln!(out, "  {g}");
                }
                let dims: Vec<String> =
                    leading_space_dims.iter().map(|d| format!("{}:{}", d.degree, d.dim)).collect();
                let _ = writeln!(out, "leading-space dims by degree: {}", dims.join(" "));
                let _ = writeln!(out, "commutative: {commutative}");
            }
            Results::Generators {
                p,
                bounds,
                generators,
                count,
            } => {
                let _ = writeln!(out, "P = {p}");
                let _ = writeln!(out, "box: {}", box_text(bounds));
                let _ = writeln!(out, "{count} module generators:");
                for g in generators {
                    let _ = writeln!(out, "  {g}");
                }
            }
            Results::Analysis {
                p,
                n,
                rho,
                s,
                prime_degree,
                small_leading,
                guarantees_polynomial_in_p,
                pure_power,
                monomial_generator,
                admissible,
            } => {
                let _ = writeln!(out, "P = {p}");
                let _ = writeln!(out, "n = {n}, rho = {rho}, s = {s}");
                let _ = writeln!(out, "prime-degree criterion: {prime_degree}");
                let _ = writeln!(out, "small-leading criterion: {small_leading}");
                match pure_power {
                    Some(PurePowerReport::ViolationFound { a, i, j }) => {
                        let _ = writeln!(out, "pure-power sigma: violation a={a} i={i} j={j}");
                    }
                    Some(PurePowerReport::NoViolationUpTo { max_exp }) => {
                        let _ = writeln!(out, "pure-power sigma: no violation in K up to exponent {max_exp}");
                    }
                    None => {}
                }
                if let Some(g) = monomial_generator {
                    let _ = writeln!(out, "monomial generator: {g}");
                }
                let _ = writeln!(out, "C(P) = K[P] guaranteed: {guarantees_polynomial_in_p}");
                let ms: Vec<String> = admissible.iter().map(|a| format!("m={} k={}", a.m, a.k)).collect();
                let _ = writeln!(out, "admissible degrees: {}", ms.join(", "));
            }
            Results::MonomialGenerator {
                i,
                j,
                s,
                l,
                k,
                generator,
                commutes,
            } => {
                let _ = writeln!(out, "P = y^{i} x^{j}, s = {s}");
                let _ = writeln!(out, "l = {l}, k = {k}");
                let _ = writeln!(out, "generator: {generator}");
                let _ = writeln!(out, "commutes with P: {commutes}");
            }
            Results::Classification {
                set,
                verdict,
                centralizer_of,
                bounds,
                bounded_dim,
                expected_dim,
                consistent,
            } => {
                let _ = writeln!(out, "set: {{{}}}", set.join(", "));
                match centralizer_of {
                    Some(p) => {
                        let _ = writeln!(out, "verdict: {verdict} {p}");
                    }
                    None => {
                        let _ = writeln!(out, "verdict: {verdict}");
                    }
                }
                let _ = writeln!(
                    out,
                    "box {}: dimension {bounded_dim}, predicted {expected_dim}, consistent: {consistent}",
                    box_text(bounds)
                );
            }
            Results::Verification { suites } => {
                for r in suites {
                    let status = if r.failures.is_empty() { "ok" } else { "FAILED" };
                    let _ = writeln!(
                        out,
                        "{:<22} {status:<6} checks={} failures={} seed={}",
                        r.suite,
                        r.checks,
                        r.failures.len(),
                        r.seed
                    );
                    for f in r.failures.iter().take(10) {
                        let _ = writeln!(out, "    {f}");
                    }
                }
            }
            Results::SuiteList { suites } => {
                for s in suites {
                    let _ = writeln!(out, "{:<22} {}", s.name, s.description);
                }
            }
        }
        if let Some(false) = self.flags.stable {
            let _ = writeln!(out, "UNSTABLE: dimension changed when the y-degree bound grew");
        }
        if let Some(false) = self.flags.powers_in_box {
            let _ = writeln!(out, "note: some power of P does not fit in the box");
        }
        for f in &self.flags.soundness_failures {
            let _ = writeln!(out, "SOUNDNESS: {f}");
        }
        out
    }
}

fn box_text(b: &BoxSpec) -> String {
    format!("D={} B={}", b.max_xdeg, b.ydeg_bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centralizer_report_round_trips() {
        let out = crate::run_command(["orecent", "centralizer", "--sigma", "y^2", "y^3*x^2", "--max-xdeg", "4", "--ydeg-bound", "16"]);
        let r = out.report.unwrap();
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
