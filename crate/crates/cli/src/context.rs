//! Context files: which field, and the images `σ(y)`, `δ(y)`.
//!
//! Two layouts are accepted. A JSON object
//!
//! ```text
//! {"field": "rationals", "sigma_y": "y^2", "delta_y": "1"}
//! ```
//!
//! or `key = value` lines (`#` starts a comment). Missing `field` means
//! the rationals, missing `delta_y` means zero.

use std::collections::BTreeMap;

use orecent_core::scalar::is_prime;
use orecent_core::{format_ypoly, parse_ypoly, DynContext, DynPoly, FieldDescriptor};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextSpec {
    #[serde(default = "default_field")]
    pub field: String,
    pub sigma_y: String,
    #[serde(default = "default_delta")]
    pub delta_y: String,
}

fn default_field() -> String {
    "rationals".into()
}

fn default_delta() -> String {
    "0".into()
}

impl ContextSpec {
    pub fn new(field: &str, sigma_y: &str, delta_y: &str) -> Self {
        ContextSpec {
            field: field.into(),
            sigma_y: sigma_y.into(),
            delta_y: delta_y.into(),
        }
    }

    /// The spec of a validated context, polynomials in canonical form.
    pub fn of(ctx: &DynContext) -> Self {
        ContextSpec {
            field: ctx.field().to_string(),
            sigma_y: format_ypoly(ctx.sigma_y()),
            delta_y: format_ypoly(ctx.delta_y()),
        }
    }

    /// Parse the text of a context file.
    pub fn from_text(text: &str) -> Result<Self, CliError> {
        if text.trim_start().starts_with('{') {
            return serde_json::from_str(text)
                .map_err(|e| CliError::Usage(format!("malformed context file: {e}")));
        }
        let mut kv = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .or_else(|| line.split_once(':'))
                .ok_or_else(|| {
                    CliError::Usage(format!("context line {}: expected key = value", lineno + 1))
                })?;
            kv.insert(k.trim().to_string(), v.trim().trim_matches('"').to_string());
        }
        for k in kv.keys() {
            if !matches!(k.as_str(), "field" | "sigma_y" | "delta_y") {
                return Err(CliError::Usage(format!("unknown context key `{k}`")));
            }
        }
        Ok(ContextSpec {
            field: kv.remove("field").unwrap_or_else(default_field),
            sigma_y: kv
                .remove("sigma_y")
                .ok_or_else(|| CliError::Usage("context needs sigma_y".into()))?,
            delta_y: kv.remove("delta_y").unwrap_or_else(default_delta),
        })
    }
}

/// `rationals`, `Q`, or `fp:<prime>`.
pub fn parse_field(text: &str) -> Result<FieldDescriptor, CliError> {
    let t = text.trim();
    if matches!(t, "rationals" | "Q" | "q") {
        return Ok(FieldDescriptor::Rationals);
    }
    let digits = t
        .strip_prefix("fp:")
        .ok_or_else(|| CliError::Usage(format!("unknown field `{t}`: use rationals or fp:<prime>")))?;
    let p: u64 = digits
        .parse()
        .map_err(|_| CliError::Usage(format!("bad modulus in `{t}`")))?;
    // Primality is checked by trial division, which stays instant below 2^40.
    if p >= 1 << 40 {
        return Err(CliError::Usage(format!("modulus {p} is too large")));
    }
    if !is_prime(p) {
        return Err(CliError::Usage(format!("modulus {p} is not prime")));
    }
    Ok(FieldDescriptor::Prime(p))
}

/// Validate a spec into a context. Rejects `deg σ(y) < 2` and non-prime
/// moduli.
pub fn parse_context(spec: &ContextSpec) -> Result<DynContext, CliError> {
    let field = parse_field(&spec.field)?;
    let sigma: DynPoly = parse_ypoly(&spec.sigma_y, &field)
        .map_err(|e| CliError::Usage(format!("sigma_y: {e}")))?;
    let delta: DynPoly = parse_ypoly(&spec.delta_y, &field)
        .map_err(|e| CliError::Usage(format!("delta_y: {e}")))?;
    DynContext::new(field, sigma, delta).map_err(|e| CliError::Usage(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_standard_contexts() {
        let ctx = parse_context(&ContextSpec::new("rationals", "y^2", "1")).unwrap();
        assert_eq!(ctx.s(), 2);
        let ctx = parse_context(&ContextSpec::new("fp:7", "y^3 + 8*y", "-1")).unwrap();
        assert_eq!(ContextSpec::of(&ctx), ContextSpec::new("fp:7", "y^3 + y", "6"));
    }

    #[test]
    fn rejects_degree_one_and_composite_moduli() {
        let err = parse_context(&ContextSpec::new("rationals", "y", "0")).unwrap_err();
        assert!(err.to_string().contains("deg_y sigma(y) > 1"), "{err}");
        let err = parse_context(&ContextSpec::new("rationals", "3", "0")).unwrap_err();
        assert!(err.to_string().contains("at least 2"));
        let err = parse_context(&ContextSpec::new("fp:6", "y^2", "0")).unwrap_err();
        assert!(err.to_string().contains("not prime"));
        assert!(parse_context(&ContextSpec::new("reals", "y^2", "0")).is_err());
    }

    #[test]
    fn both_file_layouts() {
        let a = ContextSpec::from_text(r#"{"field": "fp:5", "sigma_y": "y^2", "delta_y": "1"}"#).unwrap();
        let b = ContextSpec::from_text("# demo\nfield = fp:5\nsigma_y = y^2\ndelta_y = 1\n").unwrap();
        assert_eq!(a, b);
        let c = ContextSpec::from_text("sigma_y: y^2").unwrap();
        assert_eq!(ContextSpec::from_text("field: fp:5\nsigma_y: y^2\ndelta_y: 1").unwrap(), a);
        assert_eq!(c, ContextSpec::new("rationals", "y^2", "0"));
        assert!(ContextSpec::from_text("sigma = y^2").is_err());
        assert!(ContextSpec::from_text("field = rationals").is_err());
    }
}
