//! JSON file formats and input resolution.
//!
//! Algebras, modules, and complexes travel as JSON with rational entries
//! written as strings ("3", "-1/2").  Anywhere a file path is accepted, a
//! preset name is accepted too.

use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use findim_core::algebra::{
    quotient_algebra, triangular_matrix_algebra, Algebra, AlgebraHom, ARef, Bimodule,
};
use findim_core::context::{simple_bimodule, Instance};
use findim_core::module::{simple, Module, ModuleHom, ProjectiveModule, Side};
use findim_core::presets;
use findim_core::{Mat, Rat};

pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| anyhow!("bad rational literal `{s}`: {e}"))
}

fn dense_row(entries: &[String], cols: usize, what: &str) -> Result<Mat> {
    if entries.len() != cols {
        bail!("{what} has {} entries, expected {cols}", entries.len());
    }
    let mut m = Mat::zeros(1, cols);
    for (c, s) in entries.iter().enumerate() {
        m[(0, c)] = parse_rat(s)?;
    }
    Ok(m)
}

fn dense_rows(rows: &[Vec<String>], cols: usize, what: &str) -> Result<Mat> {
    let mut out = Mat::zeros(rows.len(), cols);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            bail!("{what} row {r} has {} entries, expected {cols}", row.len());
        }
        for (c, s) in row.iter().enumerate() {
            out[(r, c)] = parse_rat(s)?;
        }
    }
    Ok(out)
}

fn sparse_matrix(entries: &[(usize, usize, String)], rows: usize, cols: usize, what: &str) -> Result<Mat> {
    let mut m = Mat::zeros(rows, cols);
    for &(r, c, ref s) in entries {
        if r >= rows || c >= cols {
            bail!("{what} entry ({r},{c}) is outside a {rows}x{cols} matrix");
        }
        m[(r, c)] = parse_rat(s)?;
    }
    Ok(m)
}

/// Algebra file: multiplication table as sparse entries
/// `[i, j, k, "coeff"]` = coefficient of basis element k in (b_i * b_j),
/// absent entries are zero; unit and idempotents as dense coefficient rows.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub idempotents: Vec<Vec<String>>,
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<ARef> {
        let n = self.dim;
        if self.labels.len() != n {
            bail!("algebra file has {} labels for dim {n}", self.labels.len());
        }
        let mut mult = vec![Mat::zeros(n, n); n];
        for &(i, j, k, ref s) in &self.mult {
            if i >= n || j >= n || k >= n {
                bail!("mult entry ({i},{j},{k}) is outside dim {n}");
            }
            mult[i][(j, k)] = parse_rat(s)?;
        }
        let unit = dense_row(&self.unit, n, "unit")?;
        let idempotents = self
            .idempotents
            .iter()
            .enumerate()
            .map(|(t, row)| dense_row(row, n, &format!("idempotent {t}")))
            .collect::<Result<Vec<_>>>()?;
        Algebra::new(self.labels.clone(), mult, unit, idempotents).map_err(|e| anyhow!("{e}"))
    }

    pub fn from_algebra(a: &ARef) -> AlgebraFile {
        let n = a.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            let table = a.left_mult_operator(&a.basis_elem(i));
            for j in 0..n {
                for k in 0..n {
                    let v = &table[(j, k)];
                    if !v.is_zero() {
                        mult.push((i, j, k, v.to_string()));
                    }
                }
            }
        }
        let row_strings = |m: &Mat| (0..m.cols()).map(|c| m[(0, c)].to_string()).collect();
        AlgebraFile {
            dim: n,
            labels: a.labels().to_vec(),
            mult,
            unit: row_strings(&a.unit()),
            idempotents: a.idempotents().iter().map(row_strings).collect(),
        }
    }
}

/// Module file: the algebra is a preset name or a path to an algebra file;
/// the action is one sparse dim x dim matrix per algebra basis element.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ModuleFile {
    pub algebra: String,
    pub side: String,
    pub dim: usize,
    pub action: Vec<Vec<(usize, usize, String)>>,
}

impl ModuleFile {
    pub fn to_module(&self, near: Option<&Path>) -> Result<Module> {
        let a = load_algebra_near(&self.algebra, near)?;
        let side = parse_side(&self.side)?;
        if self.action.len() != a.dim() {
            bail!("module file has {} action matrices for an algebra of dim {}", self.action.len(), a.dim());
        }
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(i, entries)| sparse_matrix(entries, self.dim, self.dim, &format!("action of basis element {i}")))
            .collect::<Result<Vec<_>>>()?;
        Module::new(a, side, self.dim, action).map_err(|e| anyhow!("{e}"))
    }

    pub fn from_module(m: &Module, algebra_spec: &str) -> ModuleFile {
        let action = (0..m.algebra.dim())
            .map(|i| {
                let mat = m.action(i);
                let mut entries = Vec::new();
                for r in 0..mat.rows() {
                    for c in 0..mat.cols() {
                        if !mat[(r, c)].is_zero() {
                            entries.push((r, c, mat[(r, c)].to_string()));
                        }
                    }
                }
                entries
            })
            .collect();
        ModuleFile {
            algebra: algebra_spec.to_string(),
            side: match m.side {
                Side::Left => "left".to_string(),
                Side::Right => "right".to_string(),
            },
            dim: m.dim(),
            action,
        }
    }
}

/// Complex file: consecutive degrees with a module spec per term and one
/// sparse differential per adjacent pair (rows = source dim, cols = target
/// dim).
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ComplexFile {
    pub algebra: String,
    pub side: String,
    pub terms: Vec<(i64, String)>,
    pub differentials: Vec<Vec<(usize, usize, String)>>,
}

pub fn parse_side(s: &str) -> Result<Side> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        _ => bail!("side must be \"left\" or \"right\", got `{s}`"),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {}", path.display()))
}

fn load_algebra_near(spec: &str, near: Option<&Path>) -> Result<ARef> {
    if let Some(a) = presets::by_name(spec) {
        return Ok(a);
    }
    let direct = Path::new(spec);
    let path = if direct.exists() {
        direct.to_path_buf()
    } else if let Some(dir) = near.and_then(|p| p.parent()) {
        let sibling = dir.join(spec);
        if sibling.exists() {
            sibling
        } else {
            bail!("unknown preset or missing algebra file `{spec}` (presets: {})", presets::names().join(", "));
        }
    } else {
        bail!("unknown preset or missing algebra file `{spec}` (presets: {})", presets::names().join(", "));
    };
    let file: AlgebraFile = read_json(&path)?;
    file.to_algebra().with_context(|| format!("invalid algebra in {}", path.display()))
}

pub fn load_algebra(spec: &str) -> Result<ARef> {
    load_algebra_near(spec, None)
}

/// Read an algebra file without requiring the table to be valid; used by
/// `validate` so the failure itself is the report.
pub fn read_algebra_file(spec: &str) -> Result<AlgebraFile> {
    read_json(Path::new(spec))
}

/// Module specs: `regular`, `zero`, `S<n>` / `P<n>` (1-based vertex), or a
/// path to a module file.  Named specs need an algebra from context.
pub fn load_module(spec: &str, algebra: Option<&ARef>, side: Side) -> Result<Module> {
    let named = |a: Option<&ARef>| -> Result<ARef> {
        a.cloned().ok_or_else(|| anyhow!("module spec `{spec}` needs --algebra"))
    };
    if spec == "regular" {
        return Ok(Module::regular(&named(algebra)?, side));
    }
    if spec == "zero" {
        let a = named(algebra)?;
        let action = vec![Mat::zeros(0, 0); a.dim()];
        return Module::new(a, side, 0, action).map_err(|e| anyhow!("{e}"));
    }
    if let Some(rest) = spec.strip_prefix('S').or_else(|| spec.strip_prefix('P')) {
        if let Ok(n) = rest.parse::<usize>() {
            let a = named(algebra)?;
            if n == 0 || n > a.idempotents().len() {
                bail!("`{spec}` is out of range: the algebra has {} vertices", a.idempotents().len());
            }
            return if spec.starts_with('S') {
                simple(&a, side, n - 1).map_err(|e| anyhow!("{e}"))
            } else {
                Ok(ProjectiveModule::build(&a, side, vec![n - 1]).module)
            };
        }
    }
    let path = Path::new(spec);
    if !path.exists() {
        bail!("module spec `{spec}` is not a named module or a readable file");
    }
    let file: ModuleFile = read_json(path)?;
    let m = file.to_module(Some(path))?;
    if let Some(a) = algebra {
        if **a != *m.algebra {
            bail!("module file {spec} is over a different algebra than --algebra");
        }
    }
    Ok(m)
}

pub fn load_complex(path_str: &str) -> Result<findim_core::complex::BoundedComplex> {
    let path = Path::new(path_str);
    let file: ComplexFile = read_json(path)?;
    let a = load_algebra_near(&file.algebra, Some(path))?;
    let side = parse_side(&file.side)?;
    if file.terms.is_empty() {
        return Ok(findim_core::complex::BoundedComplex::zero(a, side));
    }
    let lo = file.terms[0].0;
    for (t, &(deg, _)) in file.terms.iter().enumerate() {
        if deg != lo + t as i64 {
            bail!("complex degrees must be consecutive: term {t} has degree {deg}, expected {}", lo + t as i64);
        }
    }
    let terms = file
        .terms
        .iter()
        .map(|(_, spec)| load_module(spec, Some(&a), side))
        .collect::<Result<Vec<_>>>()?;
    if file.differentials.len() + 1 != terms.len() {
        bail!("{} terms need {} differentials, file has {}", terms.len(), terms.len() - 1, file.differentials.len());
    }
    let diffs = file
        .differentials
        .iter()
        .enumerate()
        .map(|(t, entries)| {
            sparse_matrix(entries, terms[t].dim(), terms[t + 1].dim(), &format!("differential {t}"))
        })
        .collect::<Result<Vec<_>>>()?;
    findim_core::complex::BoundedComplex::new(a, side, lo, terms, diffs).map_err(|e| anyhow!("{e}"))
}

/// Bimodule specs for verification slots: `zero`, `k` (vertex 0 on both
/// sides), or `i:j` picking source and target vertices (0-based).
pub fn load_bimodule(spec: &str, s: &ARef, t: &ARef) -> Result<Bimodule> {
    match spec {
        "zero" => {
            let left_act = vec![Mat::zeros(0, 0); s.dim()];
            let right_act = vec![Mat::zeros(0, 0); t.dim()];
            Bimodule::new(s.clone(), t.clone(), 0, left_act, right_act).map_err(|e| anyhow!("{e}"))
        }
        "k" => simple_bimodule(s, 0, t, 0).map_err(|e| anyhow!("{e}")),
        _ => {
            let (i, j) = spec
                .split_once(':')
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .ok_or_else(|| anyhow!("bimodule spec must be `zero`, `k`, or `i:j`, got `{spec}`"))?;
            simple_bimodule(s, i, t, j).map_err(|e| anyhow!("{e}"))
        }
    }
}

/// Ideal slots inside instance files.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum IdealSpec {
    Name(String),
    ClosureOf { closure_of_idempotent: usize },
    Rows { rows: Vec<Vec<String>> },
}

impl IdealSpec {
    pub fn to_rows(&self, a: &ARef) -> Result<Mat> {
        match self {
            IdealSpec::Name(s) if s == "zero" => Ok(Mat::zeros(0, a.dim())),
            IdealSpec::Name(s) => bail!("unknown ideal spec `{s}` (use \"zero\", closure_of_idempotent, or rows)"),
            IdealSpec::ClosureOf { closure_of_idempotent: i } => {
                let idems = a.idempotents();
                if *i >= idems.len() {
                    bail!("idempotent index {i} is out of range (the algebra has {})", idems.len());
                }
                Ok(a.ideal_closure(&idems[*i]))
            }
            IdealSpec::Rows { rows } => Ok(dense_rows(rows, a.dim(), "ideal")?.row_basis()),
        }
    }
}

/// Instance file: names the bound, the shape, and a value for each slot;
/// cap and seed may be pinned here and override the command line.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct InstanceFile {
    pub bound_id: String,
    #[serde(default)]
    pub cap: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
    pub instance: InstanceSpec,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum InstanceSpec {
    Triangular {
        #[serde(rename = "S")]
        s: String,
        #[serde(rename = "T")]
        t: String,
        #[serde(rename = "M")]
        m: String,
    },
    Stratifying {
        algebra: String,
        idempotent: usize,
    },
    MilnorSquare {
        algebra: String,
        i1: IdealSpec,
        i2: IdealSpec,
    },
    TrivialExtension {
        algebra: String,
        #[serde(default)]
        source: Option<String>,
        #[serde(default)]
        map: Option<Vec<Vec<String>>>,
        #[serde(rename = "M")]
        m: String,
    },
    RingSurjection {
        algebra: String,
        ideal: IdealSpec,
    },
    RingExtension {
        sub: String,
        algebra: String,
        #[serde(default)]
        map: Option<Vec<Vec<String>>>,
    },
    IdempotentIdeal {
        algebra: String,
        idempotent: usize,
    },
    CovariantPair {
        algebra: String,
        #[serde(default)]
        idempotent: Option<usize>,
        #[serde(default)]
        rows: Option<Vec<Vec<String>>>,
    },
}

fn checked_idempotent(a: &ARef, i: usize) -> Result<Mat> {
    let idems = a.idempotents();
    if i >= idems.len() {
        bail!("idempotent index {i} is out of range (the algebra has {})", idems.len());
    }
    Ok(idems[i].clone())
}

fn embedding_hom(sub: &ARef, big: &ARef, map: Option<&Vec<Vec<String>>>) -> Result<AlgebraHom> {
    let matrix = match map {
        Some(rows) => dense_rows(rows, big.dim(), "embedding")?,
        None if sub.dim() == 1 => big.unit(),
        None => bail!("a subalgebra of dim > 1 needs an explicit `map` (rows = images of its basis)"),
    };
    if matrix.rows() != sub.dim() {
        bail!("embedding has {} rows for a subalgebra of dim {}", matrix.rows(), sub.dim());
    }
    AlgebraHom::new(sub.clone(), big.clone(), matrix).map_err(|e| anyhow!("{e}"))
}

impl InstanceSpec {
    pub fn to_instance(&self) -> Result<Instance> {
        match self {
            InstanceSpec::Triangular { s, t, m } => {
                let s = load_algebra(s)?;
                let t = load_algebra(t)?;
                let m = load_bimodule(m, &s, &t)?;
                Ok(Instance::Triangular { s, t, m })
            }
            InstanceSpec::Stratifying { algebra, idempotent } => {
                let r = load_algebra(algebra)?;
                let e = checked_idempotent(&r, *idempotent)?;
                Ok(Instance::Stratifying { r, e })
            }
            InstanceSpec::MilnorSquare { algebra, i1, i2 } => {
                let r = load_algebra(algebra)?;
                let i1 = i1.to_rows(&r)?;
                let i2 = i2.to_rows(&r)?;
                Ok(Instance::MilnorSquare { r, i1, i2 })
            }
            InstanceSpec::TrivialExtension { algebra, source, map, m } => {
                let target = load_algebra(algebra)?;
                let lambda = match source {
                    Some(src) => {
                        let src = load_algebra(src)?;
                        let matrix = match map {
                            Some(rows) => dense_rows(rows, target.dim(), "map")?,
                            None => bail!("trivial-extension instances with a `source` need a `map`"),
                        };
                        AlgebraHom::new(src, target.clone(), matrix).map_err(|e| anyhow!("{e}"))?
                    }
                    None => AlgebraHom::new(target.clone(), target.clone(), Mat::identity(target.dim()))
                        .map_err(|e| anyhow!("{e}"))?,
                };
                let m = load_bimodule(m, &target, &target)?;
                Ok(Instance::TrivialExtension { lambda, m })
            }
            InstanceSpec::RingSurjection { algebra, ideal } => {
                let r = load_algebra(algebra)?;
                let rows = ideal.to_rows(&r)?;
                let (_, f) = quotient_algebra(&r, &rows).map_err(|e| anyhow!("{e}"))?;
                Ok(Instance::RingSurjection { f })
            }
            InstanceSpec::RingExtension { sub, algebra, map } => {
                let s = load_algebra(sub)?;
                let r = load_algebra(algebra)?;
                Ok(Instance::RingExtension { f: embedding_hom(&s, &r, map.as_ref())? })
            }
            InstanceSpec::IdempotentIdeal { algebra, idempotent } => {
                let r = load_algebra(algebra)?;
                let e = checked_idempotent(&r, *idempotent)?;
                Ok(Instance::IdempotentIdeal { r, e })
            }
            InstanceSpec::CovariantPair { algebra, idempotent, rows } => {
                let r = load_algebra(algebra)?;
                let span = match (rows, idempotent) {
                    (Some(rows), _) => dense_rows(rows, r.dim(), "submodule")?,
                    (None, Some(i)) => checked_idempotent(&r, *i).map(|e| r.ideal_closure(&e))?,
                    (None, None) => bail!("covariant-pair instances need `idempotent` or `rows`"),
                };
                let reg = Module::regular(&r, Side::Left);
                let (_, inc) = reg.submodule(&span).map_err(|e| anyhow!("{e}"))?;
                Ok(Instance::CovariantPair { f: inc })
            }
        }
    }
}

pub fn load_instance_file(path_str: &str) -> Result<InstanceFile> {
    read_json(Path::new(path_str))
}

/// Build the triangular algebra an instance describes; `verify` reuses this
/// to show the glued algebra's dimension in reports.
pub fn glued_triangular(s: &ARef, t: &ARef, m: &Bimodule) -> Result<ARef> {
    triangular_matrix_algebra(s, t, m).map_err(|e| anyhow!("{e}"))
}

/// Submodule inclusion used by `verify covariant --algebra A --idempotent i`.
pub fn closure_inclusion(r: &ARef, e_index: usize) -> Result<ModuleHom> {
    let e = checked_idempotent(r, e_index)?;
    let span = r.ideal_closure(&e);
    let reg = Module::regular(r, Side::Left);
    let (_, inc) = reg.submodule(&span).map_err(|e| anyhow!("{e}"))?;
    Ok(inc)
}
