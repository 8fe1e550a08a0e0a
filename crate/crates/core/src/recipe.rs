//! JSON construction recipes and code files.
//!
//! A recipe names a family and its parameters; building it yields a code and
//! a *resolved* recipe whose `alpha` is always explicit. A code file stores
//! the generator as integer encodings next to that resolved recipe, so
//! rebuilding from the recipe alone reproduces the generator.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{self, CodeError, CodeReport, DistanceMode, LinearCode, ReportParams};
use crate::gf::{Elem, Field, FieldSpec, GfError};
use crate::linalg::Matrix;
use crate::trs::{self, Family, TrsError, TwistedRsParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecipeError {
    #[error(transparent)]
    Trs(#[from] TrsError),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecipeFamily {
    Lemma31,
    Lemma32,
    Grs,
    Trs,
}

impl From<Family> for RecipeFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Lemma31 => RecipeFamily::Lemma31,
            Family::Lemma32 => RecipeFamily::Lemma32,
        }
    }
}

impl std::str::FromStr for RecipeFamily {
    type Err = RecipeError;
    fn from_str(s: &str) -> Result<Self, RecipeError> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| RecipeError::Malformed(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Recipe {
    pub family: RecipeFamily,
    pub field: FieldSpec,
    /// Order of the subfield holding the evaluation points (lemma families).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subfield: Option<u64>,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Elem>>,
    /// Column multipliers (grs only; all ones when absent).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<Elem>>,
}

/// A built recipe: the code, its twisted parameters (if any) and the resolved recipe.
#[derive(Debug, Clone)]
pub struct Built {
    pub code: LinearCode,
    pub params: Option<TwistedRsParams>,
    pub recipe: Recipe,
}

impl Recipe {
    /// Recipe for a lemma family member.
    pub fn one_hull(family: Family, field: &Field, subfield: Option<u64>, k: usize, t: usize, h: usize, eta: Elem) -> Recipe {
        Recipe {
            family: family.into(),
            field: field.spec(),
            subfield,
            k,
            t: Some(t),
            h: Some(h),
            eta: Some(eta),
            alpha: None,
            v: None,
        }
    }

    pub fn build(&self) -> Result<Built, RecipeError> {
        let field = Field::new(&self.field)?;
        let check = |x: Elem| field.element(x.value());
        for x in self.eta.iter().chain(self.alpha.iter().flatten()).chain(self.v.iter().flatten()) {
            check(*x)?;
        }
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| RecipeError::Malformed(format!("{:?} recipe needs {name}", self.family)))
        };
        let mut resolved = self.clone();
        match self.family {
            RecipeFamily::Lemma31 | RecipeFamily::Lemma32 => {
                let family = if self.family == RecipeFamily::Lemma31 { Family::Lemma31 } else { Family::Lemma32 };
                let (t, h) = (need(self.t, "t")?, need(self.h, "h")?);
                let eta = self.eta.ok_or_else(|| RecipeError::Malformed("lemma recipe needs eta".into()))?;
                let s = self.subfield.unwrap_or(field.order() as u64);
                let built = trs::construct_one_hull(family, &field, s, self.k, t, h, eta)?;
                if let Some(alpha) = &self.alpha {
                    if alpha.as_slice() != built.params.alpha() {
                        return Err(TrsError::ParamViolation("alpha equals the lemma layout fails".into()).into());
                    }
                }
                resolved.alpha = Some(built.params.alpha().to_vec());
                Ok(Built { code: built.code, params: Some(built.params), recipe: resolved })
            }
            RecipeFamily::Trs => {
                let (t, h) = (need(self.t, "t")?, need(self.h, "h")?);
                let eta = self.eta.ok_or_else(|| RecipeError::Malformed("trs recipe needs eta".into()))?;
                let alpha = self.alpha.clone().ok_or_else(|| RecipeError::Malformed("trs recipe needs alpha".into()))?;
                let params = TwistedRsParams::new(&field, alpha, self.k, t, h, eta)?;
                let code = LinearCode::new(trs::trs_generator(&field, &params))?;
                Ok(Built { code, params: Some(params), recipe: resolved })
            }
            RecipeFamily::Grs => {
                if self.t.is_some() || self.h.is_some() || self.eta.is_some() || self.subfield.is_some() {
                    return Err(RecipeError::Malformed("grs recipe takes only k, alpha and v".into()));
                }
                let alpha = self.alpha.clone().ok_or_else(|| RecipeError::Malformed("grs recipe needs alpha".into()))?;
                let v = self.v.clone().unwrap_or_else(|| vec![Elem::ONE; alpha.len()]);
                let code = LinearCode::new(trs::grs_generator(&field, &alpha, &v, self.k)?)?;
                Ok(Built { code, params: None, recipe: resolved })
            }
        }
    }

    /// Parameters echoed into reports; `None` for grs recipes.
    pub fn report_params(&self) -> Option<ReportParams> {
        Some(ReportParams { t: self.t?, h: self.h?, eta: self.eta?, alpha: self.alpha.clone()? })
    }
}

/// On-disk code: `{field, n, k, G, recipe?}` with `G` as integer encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "G")]
    pub g: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

impl CodeFile {
    pub fn new(code: &LinearCode, recipe: Option<Recipe>) -> CodeFile {
        let g = code.generator().row_vecs().into_iter().map(|r| r.into_iter().map(Elem::value).collect()).collect();
        CodeFile { field: code.field().spec(), n: code.length(), k: code.dimension(), g, recipe }
    }

    pub fn from_json(text: &str) -> Result<CodeFile, RecipeError> {
        serde_json::from_str(text).map_err(|e| RecipeError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code files serialize")
    }

    /// The stored generator as a code; shape, encodings and rank are validated.
    pub fn to_code(&self) -> Result<LinearCode, RecipeError> {
        let field = Field::new(&self.field)?;
        if self.g.len() != self.k || self.g.iter().any(|r| r.len() != self.n) {
            return Err(RecipeError::Malformed(format!("G is not {}×{}", self.k, self.n)));
        }
        let values: Vec<u32> = self.g.iter().flatten().copied().collect();
        for &v in &values {
            field.element(v)?;
        }
        let m = Matrix::from_values(&field, self.k, self.n, &values).map_err(|e| RecipeError::Malformed(e.to_string()))?;
        Ok(LinearCode::new(m)?)
    }
}

/// `CodeReport` plus the recipe it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    #[serde(flatten)]
    pub report: CodeReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

/// Analyzes a code file, echoing its recipe.
pub fn analyze_file(file: &CodeFile, mode: DistanceMode) -> Result<Analysis, RecipeError> {
    let code = file.to_code()?;
    let params = file.recipe.as_ref().and_then(Recipe::report_params);
    let report = code::analyze(&code, mode, params)?;
    Ok(Analysis { report, recipe: file.recipe.clone() })
}
