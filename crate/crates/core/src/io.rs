//! JSON files for braidings, realizations and double data.
//!
//! Every file carries `"version": 1` and a `"kind"` tag. Scalars are
//! strings in the literal grammar of [`Field::parse`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braiding::{AbelianGroup, BraidingError, Character, DiagonalBraiding, GroupElem, Realization};
use crate::double::{DoubleData, DoubleError};
use crate::scalars::{Field, FieldSpec, Scalar, ScalarError};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("field {field}: {source}")]
    Scalar { field: String, source: ScalarError },
    #[error(transparent)]
    Braiding(#[from] BraidingError),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error("{0}")]
    Shape(String),
    #[error("expected a {expected} file, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingFile {
    pub version: u32,
    pub field: FieldSpec,
    pub n: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationFile {
    pub version: u32,
    pub field: FieldSpec,
    pub group: AbelianGroup,
    pub degrees_k: Vec<Vec<i64>>,
    pub degrees_l: Vec<Vec<i64>>,
    /// characters[j][g] = λ_j(generator g).
    pub characters: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleFile {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub group: AbelianGroup,
    pub degrees_k: Vec<Vec<i64>>,
    pub degrees_l: Vec<Vec<i64>>,
    pub characters: Vec<Vec<String>>,
    pub gamma: Vec<Vec<String>>,
    pub pairing: Vec<Vec<String>>,
    #[serde(default = "yes")]
    pub separable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sqrt: Option<Vec<String>>,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InputFile {
    Braiding(BraidingFile),
    Realization(RealizationFile),
    Double(DoubleFile),
}

/// A parsed input of any kind.
#[derive(Clone, Debug)]
pub enum Input {
    Braiding(DiagonalBraiding),
    Realization(Realization),
    Double(DoubleData),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Braiding(_) => "braiding",
            Input::Realization(_) => "realization",
            Input::Double(_) => "double",
        }
    }

    /// The braiding matrix, computed from the realization when there is one.
    pub fn braiding(&self) -> Result<DiagonalBraiding, IoError> {
        match self {
            Input::Braiding(b) => Ok(b.clone()),
            Input::Realization(r) => Ok(DiagonalBraiding::from_realization(r.clone())?),
            Input::Double(d) => Ok(d.braiding()),
        }
    }

    pub fn double(self) -> Result<DoubleData, IoError> {
        match self {
            Input::Double(d) => Ok(d),
            other => Err(IoError::WrongKind { expected: "double", found: other.kind() }),
        }
    }
}

fn scalar(field: &Field, what: &str, s: &str) -> Result<Scalar, IoError> {
    field.parse(s).map_err(|source| IoError::Scalar { field: what.to_string(), source })
}

fn matrix(field: &Field, what: &str, m: &[Vec<String>], n: usize) -> Result<Vec<Vec<Scalar>>, IoError> {
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(IoError::Shape(format!("{what} must be {n}x{n}")));
    }
    m.iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, s)| scalar(field, &format!("{what}[{i}][{j}]"), s)).collect())
        .collect()
}

fn strings(m: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

fn field_of(spec: &FieldSpec) -> Result<Field, IoError> {
    Field::new(spec.clone()).map_err(|source| IoError::Scalar { field: "field".into(), source })
}

fn realization(
    field: &Field,
    group: &AbelianGroup,
    degrees_k: &[Vec<i64>],
    degrees_l: &[Vec<i64>],
    characters: &[Vec<String>],
) -> Result<Realization, IoError> {
    let group = AbelianGroup::new(group.free_rank, group.torsion_orders.clone())?;
    let chars = characters
        .iter()
        .enumerate()
        .map(|(j, row)| {
            let vals = row
                .iter()
                .enumerate()
                .map(|(g, s)| scalar(field, &format!("characters[{j}][{g}]"), s))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Character::new(&group, vals)?)
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    let elems = |v: &[Vec<i64>]| v.iter().map(|e| group.element(e.clone())).collect::<Result<Vec<_>, _>>();
    let (k, l) = (elems(degrees_k)?, elems(degrees_l)?);
    Ok(Realization::new(field.clone(), group, k, l, chars)?)
}

fn realization_parts(r: &Realization) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<String>>) {
    let elems = |v: &[GroupElem]| v.iter().map(|g| g.0.clone()).collect();
    let chars = r.characters.iter().map(|c| c.values.iter().map(|x| x.to_string()).collect()).collect();
    (elems(&r.degrees_k), elems(&r.degrees_l), chars)
}

impl InputFile {
    pub fn build(&self) -> Result<Input, IoError> {
        match self {
            InputFile::Braiding(b) => {
                if b.version != FORMAT_VERSION {
                    return Err(IoError::Version(b.version));
                }
                let field = field_of(&b.field)?;
                let q = matrix(&field, "matrix", &b.matrix, b.n)?;
                Ok(Input::Braiding(DiagonalBraiding::new(field, q)?))
            }
            InputFile::Realization(r) => {
                if r.version != FORMAT_VERSION {
                    return Err(IoError::Version(r.version));
                }
                let field = field_of(&r.field)?;
                Ok(Input::Realization(realization(&field, &r.group, &r.degrees_k, &r.degrees_l, &r.characters)?))
            }
            InputFile::Double(d) => {
                if d.version != FORMAT_VERSION {
                    return Err(IoError::Version(d.version));
                }
                let field = field_of(&d.field)?;
                let real = realization(&field, &d.group, &d.degrees_k, &d.degrees_l, &d.characters)?;
                let n = real.rank();
                let gamma = matrix(&field, "gamma", &d.gamma, n)?;
                let pairing = matrix(&field, "pairing", &d.pairing, n)?;
                let mut data = DoubleData::new(real, gamma, pairing)?;
                data.separable = d.separable;
                data.name = d.name.clone();
                if let Some(roots) = &d.sqrt {
                    let roots = roots
                        .iter()
                        .enumerate()
                        .map(|(i, s)| scalar(&field, &format!("sqrt[{i}]"), s))
                        .collect::<Result<Vec<_>, _>>()?;
                    data = data.with_sqrt(roots)?;
                }
                Ok(Input::Double(data))
            }
        }
    }
}

pub fn parse_input(json: &str) -> Result<Input, IoError> {
    serde_json::from_str::<InputFile>(json)?.build()
}

pub fn braiding_file(b: &DiagonalBraiding) -> InputFile {
    InputFile::Braiding(BraidingFile {
        version: FORMAT_VERSION,
        field: b.field.spec().clone(),
        n: b.rank(),
        matrix: strings(&b.q),
    })
}

pub fn realization_file(r: &Realization) -> InputFile {
    let (degrees_k, degrees_l, characters) = realization_parts(r);
    InputFile::Realization(RealizationFile {
        version: FORMAT_VERSION,
        field: r.field.spec().clone(),
        group: r.group.clone(),
        degrees_k,
        degrees_l,
        characters,
    })
}

pub fn double_file(d: &DoubleData) -> InputFile {
    let (degrees_k, degrees_l, characters) = realization_parts(&d.realization);
    InputFile::Double(DoubleFile {
        version: FORMAT_VERSION,
        name: d.name.clone(),
        field: d.field().spec().clone(),
        group: d.realization.group.clone(),
        degrees_k,
        degrees_l,
        characters,
        gamma: strings(&d.gamma),
        pairing: strings(&d.pairing),
        separable: d.separable,
        sqrt: d.sqrt.as_ref().map(|r| r.iter().map(|x| x.to_string()).collect()),
    })
}

pub fn to_json(file: &InputFile) -> String {
    serde_json::to_string_pretty(file).expect("plain data serializes")
}
