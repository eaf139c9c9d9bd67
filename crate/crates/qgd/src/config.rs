//! JSON run configuration.
//!
//! Parsing happens in three passes: the file text is deserialized directly
//! (so syntax and type errors carry line and column), dot-path overrides are
//! applied to the JSON tree, and the result is validated by building the
//! core types.

use std::path::{Path, PathBuf};

use qgd_core::experiments::{
    BetaGrid, OscillationRule, Primitive, RiemannSetup, SweepPlan, SweepSettings,
};
use qgd_core::{Boundary, GasModel, Mesh, Regularization, SchemeConfig, SchemeKind};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The shipped default: the paper's Riemann problem with the enthalpy scheme.
pub const DEFAULT_CONFIG: &str = include_str!("../configs/paper_fig1b.json");

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{origin}:{line}:{column}: {message}")]
    Parse {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{origin}:{line}: {key}: {message}")]
    Invalid {
        origin: String,
        line: usize,
        key: String,
        message: String,
    },
    #[error("override `{spec}`: {message}")]
    Override { spec: String, message: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeName {
    Standard,
    Enthalpy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantName {
    FullQgd,
    SimplifiedQhd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryName {
    Periodic,
    CopyOutflow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Svg,
}

impl From<SchemeName> for SchemeKind {
    fn from(s: SchemeName) -> Self {
        match s {
            SchemeName::Standard => SchemeKind::Standard,
            SchemeName::Enthalpy => SchemeKind::Enthalpy,
        }
    }
}

impl From<VariantName> for Regularization {
    fn from(v: VariantName) -> Self {
        match v {
            VariantName::FullQgd => Regularization::FullQgd,
            VariantName::SimplifiedQhd => Regularization::SimplifiedQhd,
        }
    }
}

impl From<BoundaryName> for Boundary {
    fn from(b: BoundaryName) -> Self {
        match b {
            BoundaryName::Periodic => Boundary::Periodic,
            BoundaryName::CopyOutflow => Boundary::CopyOutflow,
        }
    }
}

/// p(ρ) = p1 ρ^γ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GasBlock {
    pub p1: f64,
    pub gamma: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeBlock {
    pub kind: SchemeName,
    pub variant: VariantName,
    pub alpha: f64,
    pub alpha_s: f64,
    pub beta: f64,
    /// Defaults to the sound speed at the larger initial density.
    #[serde(default)]
    pub c_ref: Option<f64>,
}

/// Cell-centred nodes `x_min + (k + ½)h`, `k < n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshBlock {
    pub x_min: f64,
    pub h: f64,
    pub n: usize,
    pub boundary: BoundaryName,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateBlock {
    pub rho: f64,
    pub u: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OscillationBlock {
    pub tv_ratio: f64,
    pub floor_factor: f64,
    pub ceil_factor: f64,
}

impl Default for OscillationBlock {
    fn default() -> Self {
        let r = OscillationRule::default();
        Self {
            tv_ratio: r.tv_ratio,
            floor_factor: r.floor_factor,
            ceil_factor: r.ceil_factor,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentBlock {
    pub left: StateBlock,
    pub right: StateBlock,
    pub x0: f64,
    pub t_end: f64,
    pub record_every: usize,
    #[serde(default)]
    pub oscillation: OscillationBlock,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BetaGridBlock {
    Absolute(Vec<f64>),
    RelativeToCriterion(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepBlock {
    pub alphas: Vec<f64>,
    pub betas: BetaGridBlock,
    /// 0 means one worker per available core.
    #[serde(default)]
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    pub directory: PathBuf,
    pub formats: Vec<Format>,
}

impl Default for OutputBlock {
    fn default() -> Self {
        Self {
            directory: PathBuf::from("out"),
            formats: vec![Format::Csv, Format::Svg],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub gas: GasBlock,
    pub scheme: SchemeBlock,
    pub mesh: MeshBlock,
    pub experiment: ExperimentBlock,
    pub sweep: SweepBlock,
    #[serde(default)]
    pub output: OutputBlock,
}

impl RunConfig {
    pub fn from_json(text: &str, origin: &str) -> Result<Self, ConfigError> {
        Self::from_json_with(text, origin, &[])
    }

    /// Parses `text` and applies `key.path=value` overrides in order.
    pub fn from_json_with(
        text: &str,
        origin: &str,
        overrides: &[String],
    ) -> Result<Self, ConfigError> {
        let parse_err = |e: serde_json::Error| ConfigError::Parse {
            origin: origin.to_string(),
            line: e.line(),
            column: e.column(),
            message: strip_position(&e),
        };
        let mut cfg: RunConfig = serde_json::from_str(text).map_err(parse_err)?;
        if !overrides.is_empty() {
            let mut tree: Value = serde_json::from_str(text).map_err(parse_err)?;
            for spec in overrides {
                apply_override(&mut tree, spec)?;
            }
            cfg = serde_json::from_value(tree).map_err(|e| ConfigError::Override {
                spec: overrides.join(" "),
                message: e.to_string(),
            })?;
        }
        cfg.validate()
            .map_err(|(key, message)| ConfigError::Invalid {
                origin: origin.to_string(),
                line: locate_key(text, &key),
                key,
                message,
            })?;
        Ok(cfg)
    }

    pub fn load(path: &Path, overrides: &[String]) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json_with(&text, &path.display().to_string(), overrides)
    }

    pub fn default_paper(overrides: &[String]) -> Result<Self, ConfigError> {
        Self::from_json_with(DEFAULT_CONFIG, "paper_fig1b.json", overrides)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Checks every constraint by building the core types; the error names
    /// the offending key.
    pub fn validate(&self) -> Result<(), (String, String)> {
        fn at(key: &str) -> impl Fn(qgd_core::Error) -> (String, String) + '_ {
            move |e| match e {
                qgd_core::Error::InvalidParameter { name, .. } => {
                    (format!("{key}.{name}"), e.to_string())
                }
                _ => (key.to_string(), e.to_string()),
            }
        }
        let gas = self.gas_model().map_err(at("gas"))?;
        self.setup().map_err(at("experiment"))?;
        self.mesh().map_err(at("mesh"))?;
        if self.experiment.record_every == 0 {
            return Err((
                "experiment.record_every".into(),
                "must be at least 1".into(),
            ));
        }
        let o = &self.experiment.oscillation;
        if !(o.tv_ratio > 0.0 && o.floor_factor >= 0.0 && o.ceil_factor > o.floor_factor) {
            return Err((
                "experiment.oscillation".into(),
                "need tv_ratio > 0, 0 ≤ floor_factor < ceil_factor".into(),
            ));
        }
        if let Some(c) = self.scheme.c_ref {
            if !(c > 0.0 && c.is_finite()) {
                return Err(("scheme.c_ref".into(), format!("must be positive, got {c}")));
            }
        }
        self.scheme_config(&gas).map_err(at("scheme"))?;
        let settings = self.sweep_settings();
        SweepPlan::new(&self.sweep.alphas, &self.beta_grid(), &settings).map_err(at("sweep"))?;
        if self.output.formats.is_empty() {
            return Err(("output.formats".into(), "at least one format".into()));
        }
        Ok(())
    }

    pub fn gas_model(&self) -> qgd_core::Result<GasModel> {
        GasModel::isentropic(self.gas.p1, self.gas.gamma)
    }

    pub fn setup(&self) -> qgd_core::Result<RiemannSetup> {
        let m = &self.mesh;
        let e = &self.experiment;
        let prim = |s: StateBlock| Primitive { rho: s.rho, u: s.u };
        RiemannSetup::new(
            prim(e.left),
            prim(e.right),
            e.x0,
            m.x_min,
            m.x_min + m.n as f64 * m.h,
            m.h,
            e.t_end,
        )
    }

    pub fn mesh(&self) -> qgd_core::Result<Mesh> {
        let m = &self.mesh;
        Mesh::new(m.n, m.h, m.x_min + 0.5 * m.h, m.boundary.into())
    }

    pub fn c_ref(&self, gas: &GasModel) -> qgd_core::Result<f64> {
        match self.scheme.c_ref {
            Some(c) => Ok(c),
            None => self.setup()?.default_c_ref(gas),
        }
    }

    pub fn scheme_config(&self, gas: &GasModel) -> qgd_core::Result<SchemeConfig> {
        let s = &self.scheme;
        SchemeConfig::new(
            s.alpha,
            s.alpha_s,
            s.variant.into(),
            s.kind.into(),
            s.beta,
            self.c_ref(gas)?,
        )
    }

    pub fn rule(&self) -> OscillationRule {
        let o = &self.experiment.oscillation;
        OscillationRule {
            tv_ratio: o.tv_ratio,
            floor_factor: o.floor_factor,
            ceil_factor: o.ceil_factor,
        }
    }

    pub fn sweep_settings(&self) -> SweepSettings {
        SweepSettings {
            scheme: self.scheme.kind.into(),
            regularization: self.scheme.variant.into(),
            alpha_s: self.scheme.alpha_s,
            c_ref: self.scheme.c_ref,
            record_every: self.experiment.record_every,
            rule: self.rule(),
        }
    }

    pub fn beta_grid(&self) -> BetaGrid {
        match &self.sweep.betas {
            BetaGridBlock::Absolute(v) => BetaGrid::Absolute(v.clone()),
            BetaGridBlock::RelativeToCriterion(v) => BetaGrid::RelativeToCriterion(v.clone()),
        }
    }
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

/// Applies `a.b.c=value`. The value is read as JSON when it parses, and as a
/// string otherwise, so `scheme.kind=standard` works unquoted.
pub fn apply_override(tree: &mut Value, spec: &str) -> Result<(), ConfigError> {
    let err = |message: &str| ConfigError::Override {
        spec: spec.to_string(),
        message: message.to_string(),
    };
    let (path, raw) = spec
        .split_once('=')
        .ok_or_else(|| err("expected key.path=value"))?;
    let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    let keys: Vec<&str> = path.split('.').collect();
    if keys.iter().any(|k| k.is_empty()) {
        return Err(err("empty key segment"));
    }
    let (last, parents) = keys.split_last().expect("split yields one segment");
    let mut node = tree;
    for key in parents {
        node = node
            .as_object_mut()
            .ok_or_else(|| err("path crosses a non-object value"))?
            .entry(key.to_string())
            .or_insert_with(|| Value::Object(Default::default()));
    }
    node.as_object_mut()
        .ok_or_else(|| err("path crosses a non-object value"))?
        .insert(last.to_string(), value);
    Ok(())
}

/// 1-based line of the last segment of `key` (searched in order of the
/// segments), or 1 when it cannot be found.
fn locate_key(text: &str, key: &str) -> usize {
    let mut pos = 0;
    for seg in key.split('.') {
        match text[pos..].find(&format!("\"{seg}\"")) {
            Some(i) => pos += i,
            None => break,
        }
    }
    text[..pos].matches('\n').count() + 1
}
