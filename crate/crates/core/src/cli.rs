//! Command-line front end: beam files in, JSON reports and SVG figures out.
//!
//! Exit codes: 0 ok, 1 a residual above tolerance, 2 invalid input,
//! 3 nonphysical beam or degenerate emittances, 4 degenerate direction,
//! eigenvector or singular block.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bunch::{emittances, normalize_eigen};
use crate::clifford::CliffordElement4;
use crate::dirac::{
    decouple_pair, decouple_single, diagonalize4, emittances4, normalize4, BeamMatrix4, Coordinate,
    DiagonalizeStrategy, ElementaryTransform, Pairing, TransformPipeline,
};
use crate::error::Error;
use crate::pauli::{emittance2, normalize2, BeamMatrix2, Normalize2Strategy, PauliPipeline};
use crate::pipeline::Transform;
use crate::random::random_physical_seeded;
use crate::smallmat::{
    det_oracle, is_positive_definite, symplectic_form, symplectic_inverse, symplectic_residual,
    Mat2, Mat6, Matrix,
};
use crate::viz::{render_svg, scene_of, RenderOptions};

pub const DEFAULT_TOL: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Lib(#[from] Error),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("residual {value:.3e} in {name} exceeds tolerance {tol:.1e}")]
    Residual { name: String, value: f64, tol: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Residual { .. } => 1,
            CliError::Io { .. } | CliError::Json(_) | CliError::Input(_) => 2,
            CliError::Lib(e) => match e {
                Error::InvalidArgument(_) => 2,
                Error::NonPhysical(_) | Error::DegenerateEmittance(_) => 3,
                Error::DegenerateDirection(_)
                | Error::DegenerateEigenvector(_)
                | Error::SingularMatrix(_) => 4,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// `{"dof": 1|2|3, "matrix": [...]}` (row-major) or
/// `{"dof": 2, "components": [[...]; 4]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamFile {
    pub dof: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<[[f64; 4]; 4]>,
}

/// A validated beam of one, two or three degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Beam {
    One(Mat2),
    Two(BeamMatrix4),
    Three(Mat6),
}

fn symmetric<const N: usize>(values: &[f64]) -> CliResult<Matrix<N>> {
    let m = Matrix::<N>::from_row_major(values)?;
    let tol = 1e-9 * m.max_abs().max(1.0);
    if !m.is_finite() || !m.is_symmetric(tol) {
        return Err(CliError::Input(format!(
            "matrix is not finite and symmetric (asymmetry {:.3e})",
            m.asymmetry()
        )));
    }
    Ok(m.symmetrized())
}

impl BeamFile {
    pub fn from_beam(beam: &Beam) -> Self {
        let (dof, matrix) = match beam {
            Beam::One(m) => (1, m.to_row_major()),
            Beam::Two(b) => (2, b.representative().to_row_major()),
            Beam::Three(m) => (3, m.to_row_major()),
        };
        BeamFile {
            dof,
            matrix: Some(matrix),
            components: None,
        }
    }

    pub fn beam(&self) -> CliResult<Beam> {
        match (&self.matrix, &self.components) {
            (Some(_), Some(_)) => Err(CliError::Input(
                "give either \"matrix\" or \"components\", not both".into(),
            )),
            (None, None) => Err(CliError::Input(
                "missing \"matrix\" or \"components\"".into(),
            )),
            (None, Some(c)) => {
                if self.dof != 2 {
                    return Err(CliError::Input(
                        "\"components\" are only defined for dof 2".into(),
                    ));
                }
                Ok(Beam::Two(BeamMatrix4::from_components(
                    &CliffordElement4::from_components(*c),
                )?))
            }
            (Some(m), None) => {
                let order = 2 * self.dof as usize;
                if m.len() != order * order {
                    return Err(CliError::Input(format!(
                        "dof {} needs {} matrix entries, got {}",
                        self.dof,
                        order * order,
                        m.len()
                    )));
                }
                match self.dof {
                    1 => Ok(Beam::One(symmetric::<2>(m)?)),
                    2 => Ok(Beam::Two(BeamMatrix4::from_matrix(&symmetric::<4>(m)?)?)),
                    3 => Ok(Beam::Three(symmetric::<6>(m)?)),
                    d => Err(CliError::Input(format!("dof must be 1, 2 or 3, got {d}"))),
                }
            }
        }
    }
}

impl Beam {
    pub fn dof(&self) -> u8 {
        match self {
            Beam::One(_) => 1,
            Beam::Two(_) => 2,
            Beam::Three(_) => 3,
        }
    }

    pub fn matrix_rows(&self) -> Vec<Vec<f64>> {
        match self {
            Beam::One(m) => m.to_rows(),
            Beam::Two(b) => b.representative().to_rows(),
            Beam::Three(m) => m.to_rows(),
        }
    }

    pub fn emittances(&self) -> crate::Result<Vec<f64>> {
        match self {
            Beam::One(m) => Ok(vec![emittance2(&BeamMatrix2::from_matrix(m)?)?]),
            Beam::Two(b) => {
                let (a, c) = emittances4(b)?;
                Ok(vec![a, c])
            }
            Beam::Three(m) => emittances(m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub dof: u8,
    pub determinant: f64,
    pub symmetric: bool,
    pub positive_definite: bool,
    /// Largest first; empty for a nonphysical beam.
    pub emittances: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
}

pub fn cmd_invariants(file: &BeamFile) -> CliResult<InvariantsReport> {
    let beam = file.beam()?;
    let (determinant, pd) = match &beam {
        Beam::One(m) => (det_oracle(m), is_positive_definite(m)),
        Beam::Two(b) => {
            let r = b.representative();
            (det_oracle(&r), is_positive_definite(&r))
        }
        Beam::Three(m) => (det_oracle(m), is_positive_definite(m)),
    };
    let (emittances, problem) = match beam.emittances() {
        Ok(e) => (e, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    Ok(InvariantsReport {
        dof: beam.dof(),
        determinant,
        symmetric: true,
        positive_definite: pd,
        emittances,
        problem,
    })
}

/// One recorded transform and the beam right after it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<[f64; 4]>,
    pub representative: Vec<Vec<f64>>,
    pub beam: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<[[f64; 4]; 4]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    /// `max |MγMᵀ − γ|` of the accumulated map.
    pub symplectic: f64,
    /// Map against the ordered product of the step representatives.
    pub map_consistency: f64,
    /// `M Σ Mᵀ` against the output, relative to the input size.
    pub reconstruction: f64,
    /// Change of the emittances, relative to the largest.
    pub emittance_drift: f64,
    /// Entries that should vanish (or match) in the output, relative.
    pub target: f64,
    /// Imaginary part dropped from an eigen-based map.
    pub imag_residue: f64,
}

impl Residuals {
    pub fn entries(&self) -> [(&'static str, f64); 6] {
        [
            ("symplectic", self.symplectic),
            ("map_consistency", self.map_consistency),
            ("reconstruction", self.reconstruction),
            ("emittance_drift", self.emittance_drift),
            ("target", self.target),
            ("imag_residue", self.imag_residue),
        ]
    }

    pub fn check(&self, tol: f64) -> CliResult<()> {
        for (name, value) in self.entries() {
            if value.is_nan() || value > tol {
                return Err(CliError::Residual {
                    name: name.into(),
                    value,
                    tol,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputForms {
    pub matrix: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<[[f64; 4]; 4]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecipeReport {
    pub recipe: String,
    pub dof: u8,
    pub input: Vec<Vec<f64>>,
    pub input_emittances: Vec<f64>,
    pub steps: Vec<StepReport>,
    pub output: OutputForms,
    /// Accumulated map `M` with output `= M Σ Mᵀ`.
    pub map: Vec<Vec<f64>>,
    /// Representative entries `[i, j]` the recipe drives to zero.
    pub zero_pattern: Vec<[usize; 2]>,
    /// Whether the diagonal comes in equal pairs (normal forms).
    pub paired_diagonal: bool,
    pub residuals: Residuals,
}

fn rows_to<const N: usize>(rows: &[Vec<f64>]) -> CliResult<Matrix<N>> {
    if rows.len() != N || rows.iter().any(|r| r.len() != N) {
        return Err(CliError::Input(format!("expected a {N}×{N} matrix")));
    }
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    Ok(Matrix::from_row_major(&flat)?)
}

fn residuals_of<const N: usize>(
    report: &RecipeReport,
    emit_out: &[f64],
    imag_residue: f64,
) -> CliResult<Residuals> {
    let input = rows_to::<N>(&report.input)?;
    let output = rows_to::<N>(&report.output.matrix)?;
    let map = rows_to::<N>(&report.map)?;
    let mut product = Matrix::<N>::identity();
    for s in &report.steps {
        product = rows_to::<N>(&s.representative)? * product;
    }
    let scale = input.max_abs().max(1.0);
    let top = report
        .input_emittances
        .iter()
        .fold(1.0, |m: f64, e| m.max(*e));
    let drift = report
        .input_emittances
        .iter()
        .zip(emit_out)
        .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()));
    let mut target = report
        .zero_pattern
        .iter()
        .fold(0.0, |m: f64, [i, j]| m.max(output[(*i, *j)].abs()));
    if report.paired_diagonal {
        for p in (0..N).step_by(2) {
            target = target.max((output[(p, p)] - output[(p + 1, p + 1)]).abs());
        }
    }
    Ok(Residuals {
        symplectic: symplectic_residual(&map, &symplectic_form::<N>()),
        map_consistency: (map - product).max_abs() / map.max_abs().max(1.0),
        reconstruction: (map.congruence(&input) - output).max_abs() / scale,
        emittance_drift: drift / top,
        target: target / scale,
        imag_residue,
    })
}

impl RecipeReport {
    /// Recomputes every residual from the stored matrices.
    pub fn recompute_residuals(&self) -> CliResult<Residuals> {
        let imag = self.residuals.imag_residue;
        match self.dof {
            1 => {
                let out = rows_to::<2>(&self.output.matrix)?;
                let e = emittance2(&BeamMatrix2::from_matrix(&out)?)?;
                residuals_of::<2>(self, &[e], imag)
            }
            2 => {
                let out = BeamMatrix4::from_matrix(&rows_to::<4>(&self.output.matrix)?)?;
                let (a, b) = emittances4(&out)?;
                residuals_of::<4>(self, &[a, b], imag)
            }
            3 => {
                let out = rows_to::<6>(&self.output.matrix)?;
                residuals_of::<6>(self, &emittances(&out)?, imag)
            }
            d => Err(CliError::Input(format!("dof must be 1, 2 or 3, got {d}"))),
        }
    }

    /// Per-step beams in component form, input first (2-DoF reports only).
    pub fn beams4(&self) -> CliResult<Vec<(String, BeamMatrix4)>> {
        if self.dof != 2 {
            return Err(CliError::Input("only 2-DoF reports can be rendered".into()));
        }
        let mut out = vec![(
            format!("{}: input", self.recipe),
            BeamMatrix4::from_matrix(&rows_to::<4>(&self.input)?)?,
        )];
        for (i, s) in self.steps.iter().enumerate() {
            out.push((
                format!("{}: step {} ({})", self.recipe, i + 1, s.kind),
                BeamMatrix4::from_matrix(&rows_to::<4>(&s.beam)?)?,
            ));
        }
        Ok(out)
    }
}

fn finish<const N: usize>(
    mut report: RecipeReport,
    emit_out: &[f64],
    imag_residue: f64,
) -> CliResult<RecipeReport> {
    report.residuals = residuals_of::<N>(&report, emit_out, imag_residue)?;
    Ok(report)
}

fn empty_residuals() -> Residuals {
    Residuals {
        symplectic: 0.0,
        map_consistency: 0.0,
        reconstruction: 0.0,
        emittance_drift: 0.0,
        target: 0.0,
        imag_residue: 0.0,
    }
}

fn report4(
    recipe: String,
    input: &BeamMatrix4,
    pipeline: &TransformPipeline,
    output: &BeamMatrix4,
    zero_pattern: Vec<[usize; 2]>,
    paired_diagonal: bool,
) -> CliResult<RecipeReport> {
    let (a, b) = emittances4(input)?;
    let mut cur = *input;
    let steps = pipeline
        .steps()
        .iter()
        .map(|t| {
            cur = t.apply(&cur);
            StepReport {
                kind: t.kind().into(),
                axis: t.axis().map(|e| e.to_vec()),
                angle: t.angle(),
                factors: match t {
                    ElementaryTransform::Scale { factors } => Some(*factors),
                    _ => None,
                },
                representative: t.representative().to_rows(),
                beam: cur.representative().to_rows(),
                components: Some(cur.components().c),
            }
        })
        .collect();
    let (c, d) = emittances4(output)?;
    let report = RecipeReport {
        recipe,
        dof: 2,
        input: input.representative().to_rows(),
        input_emittances: vec![a, b],
        steps,
        output: OutputForms {
            matrix: output.representative().to_rows(),
            components: Some(output.components().c),
        },
        map: pipeline.map().to_rows(),
        zero_pattern,
        paired_diagonal,
        residuals: empty_residuals(),
    };
    finish::<4>(report, &[c, d], 0.0)
}

fn off_diagonal(n: usize) -> Vec<[usize; 2]> {
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| [i, j]))
        .collect()
}

fn require_two(file: &BeamFile) -> CliResult<BeamMatrix4> {
    match file.beam()? {
        Beam::Two(b) => Ok(b),
        other => Err(CliError::Input(format!(
            "this recipe needs a dof 2 beam, got dof {}",
            other.dof()
        ))),
    }
}

fn report2(
    input: &Mat2,
    strategy: Normalize2Strategy,
    pipeline: &PauliPipeline,
    output: &BeamMatrix2,
) -> CliResult<RecipeReport> {
    let b = BeamMatrix2::from_matrix(input)?;
    let mut cur = b;
    let steps = pipeline
        .steps()
        .iter()
        .map(|t| {
            cur = t.apply(&cur);
            let (kind, axis) = match t {
                crate::pauli::PauliTransform::Boost { axis, .. } => ("boost", Some(axis.to_vec())),
                crate::pauli::PauliTransform::Rotation { .. } => ("rotation", None),
            };
            StepReport {
                kind: kind.into(),
                axis,
                angle: Some(t.angle()),
                factors: None,
                representative: t.representative().to_rows(),
                beam: cur.representative().to_rows(),
                components: None,
            }
        })
        .collect();
    let report = RecipeReport {
        recipe: format!("normalize2/{}", serde_plain(&strategy)),
        dof: 1,
        input: input.to_rows(),
        input_emittances: vec![emittance2(&b)?],
        steps,
        output: OutputForms {
            matrix: output.representative().to_rows(),
            components: None,
        },
        map: pipeline.map().to_rows(),
        zero_pattern: vec![[0, 1], [1, 0]],
        paired_diagonal: true,
        residuals: empty_residuals(),
    };
    finish::<2>(report, &[emittance2(output)?], 0.0)
}

fn report6(input: &Mat6) -> CliResult<RecipeReport> {
    let nd = normalize_eigen(input)?;
    let map = symplectic_inverse(&nd.n, &symplectic_form::<6>());
    let output = map.congruence(input);
    let report = RecipeReport {
        recipe: "normalize6".into(),
        dof: 3,
        input: input.to_rows(),
        input_emittances: nd.emittances.clone(),
        steps: vec![StepReport {
            kind: "eigen_normalize".into(),
            axis: None,
            angle: None,
            factors: None,
            representative: map.to_rows(),
            beam: output.to_rows(),
            components: None,
        }],
        output: OutputForms {
            matrix: output.to_rows(),
            components: None,
        },
        map: map.to_rows(),
        zero_pattern: off_diagonal(6),
        paired_diagonal: true,
        residuals: empty_residuals(),
    };
    let out_e = emittances(&output)?;
    finish::<6>(report, &out_e, nd.imag_residue)
}

fn serde_plain<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::new(),
    }
}

pub fn cmd_normalize(file: &BeamFile, strategy2: Normalize2Strategy) -> CliResult<RecipeReport> {
    match file.beam()? {
        Beam::One(m) => {
            let (p, out) = normalize2(&BeamMatrix2::from_matrix(&m)?, strategy2)?;
            report2(&m, strategy2, &p, &out)
        }
        Beam::Two(b) => {
            let (p, out) = normalize4(&b)?;
            report4("normalize4".into(), &b, &p, &out, off_diagonal(4), true)
        }
        Beam::Three(m) => report6(&m),
    }
}

/// What `decouple` removes: a pair of planes or a single coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoupleTarget {
    Pair(Pairing),
    Single(Coordinate),
}

pub fn cmd_decouple(file: &BeamFile, target: DecoupleTarget) -> CliResult<RecipeReport> {
    let b = require_two(file)?;
    match target {
        DecoupleTarget::Pair(p) => {
            let (pipe, out) = decouple_pair(&b, p)?;
            let zeros = p
                .zero_pattern()
                .iter()
                .flat_map(|&(i, j)| [[i, j], [j, i]])
                .collect();
            report4(
                format!("decouple/{}", p.name()),
                &b,
                &pipe,
                &out,
                zeros,
                false,
            )
        }
        DecoupleTarget::Single(c) => {
            let (pipe, out) = decouple_single(&b, c)?;
            let zeros = c
                .zero_pattern()
                .iter()
                .flat_map(|&(i, j)| [[i, j], [j, i]])
                .collect();
            report4(
                format!("decouple/{}", serde_plain(&c)),
                &b,
                &pipe,
                &out,
                zeros,
                false,
            )
        }
    }
}

pub fn cmd_diagonalize(file: &BeamFile, strategy: DiagonalizeStrategy) -> CliResult<RecipeReport> {
    let b = require_two(file)?;
    let (pipe, out) = diagonalize4(&b, strategy)?;
    report4(
        format!("diagonalize/{}", serde_plain(&strategy)),
        &b,
        &pipe,
        &out,
        off_diagonal(4),
        false,
    )
}

pub fn cmd_gen(dof: u8, seed: u64) -> CliResult<BeamFile> {
    let beam = match dof {
        1 => Beam::One(random_physical_seeded::<2>(seed)),
        2 => Beam::Two(BeamMatrix4::from_matrix(&random_physical_seeded::<4>(
            seed,
        ))?),
        3 => Beam::Three(random_physical_seeded::<6>(seed)),
        d => return Err(CliError::Input(format!("dof must be 1, 2 or 3, got {d}"))),
    };
    Ok(BeamFile::from_beam(&beam))
}

/// SVG documents for a beam file (one) or a 2-DoF report (input, then one
/// per step), each with its title.
pub fn cmd_render(input: &serde_json::Value) -> CliResult<Vec<String>> {
    let opts = |title: String| RenderOptions {
        title: Some(title),
        ..RenderOptions::default()
    };
    if input.get("steps").is_some() {
        let report: RecipeReport = serde_json::from_value(input.clone())?;
        Ok(report
            .beams4()?
            .into_iter()
            .map(|(t, b)| render_svg(&scene_of(&b), &opts(t)))
            .collect())
    } else {
        let file: BeamFile = serde_json::from_value(input.clone())?;
        let b = require_two(&file)?;
        Ok(vec![render_svg(&scene_of(&b), &opts("beam".into()))])
    }
}

/// `out.svg` → `out-03.svg`.
pub fn numbered_path(base: &Path, index: usize) -> PathBuf {
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "figure".into());
    let ext = base
        .extension()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "svg".into());
    base.with_file_name(format!("{stem}-{index:02}.{ext}"))
}

fn parse_pairing(s: &str) -> std::result::Result<Pairing, String> {
    Pairing::ALL
        .into_iter()
        .find(|p| p.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| format!("unknown pairing {s:?}; use XX_YY, XY_XpYp or XYp_XpY"))
}

fn parse_coord(s: &str) -> std::result::Result<Coordinate, String> {
    serde_json::from_value(serde_json::Value::String(s.to_ascii_lowercase()))
        .map_err(|_| format!("unknown coordinate {s:?}; use x, xp, y or yp"))
}

fn parse_diag(s: &str) -> std::result::Result<DiagonalizeStrategy, String> {
    serde_json::from_value(serde_json::Value::String(s.replace('-', "_")))
        .map_err(|_| format!("unknown strategy {s:?}; use block-first or direct"))
}

fn parse_norm2(s: &str) -> std::result::Result<Normalize2Strategy, String> {
    serde_json::from_value(serde_json::Value::String(s.replace('-', "_")))
        .map_err(|_| format!("unknown strategy {s:?}; use two-step or direct"))
}

#[derive(Debug, Parser)]
#[command(
    name = "symplectica",
    version,
    about = "Normalize, decouple and diagonalize beam matrices"
)]
pub struct Cli {
    /// Residual tolerance for the exit status.
    #[arg(long, global = true, env = "SYMPLECTICA_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emittances, determinant and physicality of a beam file.
    Invariants {
        file: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Normal form (dispatches on dof).
    Normalize {
        file: String,
        /// 1-DoF strategy: two-step or direct.
        #[arg(long, value_parser = parse_norm2, default_value = "two-step")]
        strategy: Normalize2Strategy,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Decouple a pair of planes or a single coordinate (dof 2).
    Decouple {
        file: String,
        #[arg(long, value_parser = parse_pairing, conflicts_with = "coord", required_unless_present = "coord")]
        pairing: Option<Pairing>,
        #[arg(long, value_parser = parse_coord)]
        coord: Option<Coordinate>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Diagonalize a dof 2 beam.
    Diagonalize {
        file: String,
        #[arg(long, value_parser = parse_diag, default_value = "block-first")]
        strategy: DiagonalizeStrategy,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Stereo SVG of a beam file, or one SVG per step of a report.
    Render {
        file: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random physical beam file.
    Gen {
        #[arg(long)]
        dof: u8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

fn read_input(path: &str) -> CliResult<String> {
    let io_err = |source| CliError::Io {
        path: path.into(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn write_output(path: &str, text: &str) -> CliResult<()> {
    let io_err = |source| CliError::Io {
        path: path.into(),
        source,
    };
    if path == "-" {
        io::stdout().write_all(text.as_bytes()).map_err(io_err)
    } else {
        fs::write(path, text).map_err(io_err)
    }
}

fn write_json<T: Serialize>(path: &str, v: &T) -> CliResult<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    write_output(path, &s)
}

fn load(path: &str) -> CliResult<BeamFile> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> CliResult<()> {
    let emit = |report: RecipeReport, out: &str| -> CliResult<()> {
        write_json(out, &report)?;
        report.residuals.check(cli.tol)
    };
    match &cli.command {
        Command::Invariants { file, out } => {
            let r = cmd_invariants(&load(file)?)?;
            write_json(out, &r)?;
            match &r.problem {
                Some(p) => Err(CliError::Lib(Error::NonPhysical(p.clone()))),
                None => Ok(()),
            }
        }
        Command::Normalize {
            file,
            strategy,
            out,
        } => emit(cmd_normalize(&load(file)?, *strategy)?, out),
        Command::Decouple {
            file,
            pairing,
            coord,
            out,
        } => {
            let target = match (pairing, coord) {
                (Some(p), _) => DecoupleTarget::Pair(*p),
                (None, Some(c)) => DecoupleTarget::Single(*c),
                (None, None) => return Err(CliError::Input("need --pairing or --coord".into())),
            };
            emit(cmd_decouple(&load(file)?, target)?, out)
        }
        Command::Diagonalize {
            file,
            strategy,
            out,
        } => emit(cmd_diagonalize(&load(file)?, *strategy)?, out),
        Command::Render { file, out } => {
            let value: serde_json::Value = serde_json::from_str(&read_input(file)?)?;
            let svgs = cmd_render(&value)?;
            if svgs.len() == 1 && value.get("steps").is_none() {
                return write_output(&out.to_string_lossy(), &svgs[0]);
            }
            for (i, svg) in svgs.iter().enumerate() {
                write_output(&numbered_path(out, i).to_string_lossy(), svg)?;
            }
            Ok(())
        }
        Command::Gen { dof, seed, out } => write_json(out, &cmd_gen(*dof, *seed)?),
    }
}

/// Parses arguments, runs, reports errors on stderr and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("symplectica: {e}");
            e.exit_code()
        }
    }
}
