//! Command line front end for findim-core.
//!
//! Exit codes: 0 for success (including verified bounds), 2 when a verified
//! inequality is violated, 1 for usage or data errors.

pub mod formats;
pub mod report;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use findim_core::algebra::{quotient_algebra, AlgebraHom};
use findim_core::complex::{homological_cowidth, homological_width, projective_normalize_module};
use findim_core::context::{self, Instance};
use findim_core::dimension::{
    bound_ids, finitistic_dimension, global_dimension, VerificationStatus,
};
use findim_core::module::{injective_dimension, projective_dimension, Module, Side};
use findim_core::tensor::{ext_dims, tor_dims};
use findim_core::Mat;

#[derive(Parser, Debug)]
#[command(
    name = "findim",
    version,
    about = "Exact homological dimensions for finite-dimensional algebras over the rationals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Longest resolution computed before giving up
    #[arg(long, global = true, default_value_t = 24)]
    pub cap: usize,
    /// Seed for randomized searches (isomorphism tests, module sampling)
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
    /// Highest Tor/Ext degree reported
    #[arg(long = "max-i", global = true, default_value_t = 8)]
    pub max_i: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    /// Preset name or algebra file (needed for named module specs)
    #[arg(long)]
    pub algebra: Option<String>,
    /// `regular`, `zero`, `S<n>`, `P<n>` (1-based), or a module file
    #[arg(long)]
    pub module: String,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    /// Complex file to measure
    #[arg(long)]
    pub complex: Option<String>,
    /// Measure a module instead (its minimal resolution or coresolution)
    #[arg(long)]
    pub module: Option<String>,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long = "M")]
    pub m: String,
    #[arg(long = "N")]
    pub n: String,
    /// Side for named specs (ext only; tor fixes M right, N left)
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Bound identifier, e.g. `triangular`, `stratifying`, `mod1b_a`
    pub bound: Option<String>,
    /// Instance file naming the bound and a value for each slot
    #[arg(long)]
    pub instance: Option<String>,
    /// Left factor for `triangular`
    #[arg(long = "S")]
    pub s: Option<String>,
    /// Right factor for `triangular`
    #[arg(long = "T")]
    pub t: Option<String>,
    /// Linking bimodule: `zero`, `k`, or `i:j`
    #[arg(long = "M")]
    pub m: Option<String>,
    /// Base algebra for idempotent-driven instances
    #[arg(long)]
    pub algebra: Option<String>,
    /// Idempotent index (0-based) cutting out the corner or ideal
    #[arg(long)]
    pub idempotent: Option<usize>,
    /// Subalgebra for ring-extension bounds
    #[arg(long)]
    pub sub: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an algebra file: associativity, unit law, idempotents
    Validate {
        #[arg(long)]
        algebra: String,
    },
    /// Projective dimension with resolution witnesses
    Pd(ModuleArgs),
    /// Injective dimension (computed through the dual module)
    Injdim(ModuleArgs),
    /// Minimal projective resolution, step by step
    Resolve(ModuleArgs),
    /// Homological width of a complex, or of a module's resolution
    Width(ComplexArgs),
    /// Homological cowidth of a complex, or of a module's coresolution
    Cowidth(ComplexArgs),
    /// dim Tor_i(M, N) for i = 0..max-i (M right, N left)
    Tor(PairArgs),
    /// dim Ext^i(M, N) for i = 0..max-i (modules on the same side)
    Ext(PairArgs),
    /// Certified interval for the finitistic dimension
    Findim {
        #[arg(long)]
        algebra: String,
    },
    /// Global dimension of a split basic algebra
    Gldim {
        #[arg(long)]
        algebra: String,
    },
    /// Verify a named upper bound on an instance
    Verify(VerifyArgs),
    /// Verify every shipped instance and tabulate the verdicts
    ReportSuite,
}

fn load_module_args(args: &ModuleArgs) -> Result<Module> {
    let a = args.algebra.as_deref().map(formats::load_algebra).transpose()?;
    formats::load_module(&args.module, a.as_ref(), args.side.into())
}

fn render(json_out: bool, value: serde_json::Value, text: String) -> Result<String> {
    if json_out {
        Ok(serde_json::to_string_pretty(&value)? + "\n")
    } else {
        Ok(text)
    }
}

/// Build an instance from convenience flags; which flags apply is decided by
/// the bound's shape.
fn instance_from_flags(bound: &str, args: &VerifyArgs) -> Result<Instance> {
    let need = |opt: &Option<String>, flag: &str| -> Result<String> {
        opt.clone().ok_or_else(|| anyhow!("bound `{bound}` needs {flag}"))
    };
    let algebra = || -> Result<_> { formats::load_algebra(&need(&args.algebra, "--algebra")?) };
    let idempotent = |r: &findim_core::algebra::ARef| -> Result<Mat> {
        let i = args.idempotent.ok_or_else(|| anyhow!("bound `{bound}` needs --idempotent"))?;
        let idems = r.idempotents();
        if i >= idems.len() {
            bail!("idempotent index {i} is out of range (the algebra has {})", idems.len());
        }
        Ok(idems[i].clone())
    };
    match bound {
        "triangular" => {
            let s = formats::load_algebra(&need(&args.s, "--S")?)?;
            let t = formats::load_algebra(&need(&args.t, "--T")?)?;
            let m = formats::load_bimodule(args.m.as_deref().unwrap_or("k"), &s, &t)?;
            Ok(Instance::Triangular { s, t, m })
        }
        "stratifying" | "main_2b" | "finitistic_b" | "finitistic_2a" | "finitistic_1"
        | "gldim_2" => {
            let r = algebra()?;
            let e = idempotent(&r)?;
            Ok(Instance::Stratifying { r, e })
        }
        "homdim_1" | "homdim_2a" | "homdim_2b" | "mod1a_1" | "mod1a_2a" | "mod1a_2b" => {
            let r = algebra()?;
            let e = idempotent(&r)?;
            let i1 = r.ideal_closure(&e);
            let i2 = Mat::zeros(0, r.dim());
            Ok(Instance::MilnorSquare { r, i1, i2 })
        }
        "mod1b_a" | "mod1b_b" | "star" => {
            let r = algebra()?;
            let lambda = AlgebraHom::new(r.clone(), r.clone(), Mat::identity(r.dim()))
                .map_err(|e| anyhow!("{e}"))?;
            let m = formats::load_bimodule(args.m.as_deref().unwrap_or("k"), &r, &r)?;
            Ok(Instance::TrivialExtension { lambda, m })
        }
        "homo_ring" => {
            let r = algebra()?;
            let f = match args.idempotent {
                Some(i) => {
                    let idems = r.idempotents();
                    if i >= idems.len() {
                        bail!("idempotent index {i} is out of range (the algebra has {})", idems.len());
                    }
                    let rows = r.ideal_closure(&idems[i]);
                    quotient_algebra(&r, &rows).map_err(|e| anyhow!("{e}"))?.1
                }
                None => AlgebraHom::new(r.clone(), r.clone(), Mat::identity(r.dim()))
                    .map_err(|e| anyhow!("{e}"))?,
            };
            Ok(Instance::RingSurjection { f })
        }
        "ringext_1" => {
            let sub = formats::load_algebra(&need(&args.sub, "--sub")?)?;
            let big = algebra()?;
            if sub.dim() != 1 {
                bail!("command-line ring extensions only cover one-dimensional subalgebras; use an instance file with an explicit map");
            }
            let f = AlgebraHom::new(sub, big.clone(), big.unit()).map_err(|e| anyhow!("{e}"))?;
            Ok(Instance::RingExtension { f })
        }
        "ars_1" => {
            let r = algebra()?;
            let e = idempotent(&r)?;
            Ok(Instance::IdempotentIdeal { r, e })
        }
        "covariant" => {
            let r = algebra()?;
            let i = args.idempotent.ok_or_else(|| anyhow!("bound `covariant` needs --idempotent"))?;
            let f = formats::closure_inclusion(&r, i)?;
            Ok(Instance::CovariantPair { f })
        }
        _ => bail!(
            "bound `{bound}` takes no command-line slots; use --instance with an instance file"
        ),
    }
}

pub fn execute(cli: Cli) -> Result<(i32, String)> {
    let (cap, seed, max_i) = (cli.cap, cli.seed, cli.max_i);
    let json_out = cli.format == OutFormat::Json;
    match cli.command {
        Command::Validate { algebra } => {
            let file = formats::read_algebra_file(&algebra)?;
            match file.to_algebra() {
                Ok(a) => {
                    let out = render(
                        json_out,
                        json!({
                            "command": "validate",
                            "valid": true,
                            "dim": a.dim(),
                            "labels": a.labels(),
                            "idempotents": a.idempotents().len(),
                        }),
                        format!("valid: dim {} with {} idempotents\n", a.dim(), a.idempotents().len()),
                    )?;
                    Ok((0, out))
                }
                Err(e) => {
                    let out = render(
                        json_out,
                        json!({"command": "validate", "valid": false, "error": e.to_string()}),
                        format!("invalid: {e}\n"),
                    )?;
                    Ok((1, out))
                }
            }
        }
        Command::Pd(ref args) => {
            let m = load_module_args(args)?;
            let r = projective_dimension(&m, cap, seed);
            let out = render(json_out, report::pd_json("pd", &r), report::pd_text("pd", &r))?;
            Ok((0, out))
        }
        Command::Injdim(ref args) => {
            let m = load_module_args(args)?;
            let r = injective_dimension(&m, cap, seed);
            let out =
                render(json_out, report::pd_json("injdim", &r), report::pd_text("injdim", &r))?;
            Ok((0, out))
        }
        Command::Resolve(ref args) => {
            let m = load_module_args(args)?;
            let r = projective_dimension(&m, cap, seed);
            let out =
                render(json_out, report::pd_json("resolve", &r), report::pd_text("resolve", &r))?;
            Ok((0, out))
        }
        Command::Width(ref args) | Command::Cowidth(ref args) => {
            let cowidth = matches!(cli.command, Command::Cowidth(_));
            let name = if cowidth { "cowidth" } else { "width" };
            let c = match (&args.complex, &args.module) {
                (Some(path), None) => formats::load_complex(path)?,
                (None, Some(spec)) => {
                    let a = args.algebra.as_deref().map(formats::load_algebra).transpose()?;
                    let m = formats::load_module(spec, a.as_ref(), args.side.into())?;
                    if cowidth {
                        // injective coresolution = dual of the resolution of the dual
                        projective_normalize_module(&m.dual(), cap, seed)
                            .map_err(|e| anyhow!("{e}"))?
                            .dual()
                    } else {
                        projective_normalize_module(&m, cap, seed).map_err(|e| anyhow!("{e}"))?
                    }
                }
                _ => bail!("{name} needs exactly one of --complex or --module"),
            };
            let value = if cowidth {
                homological_cowidth(&c, cap, seed).map_err(|e| anyhow!("{e}"))?
            } else {
                homological_width(&c, cap, seed).map_err(|e| anyhow!("{e}"))?
            };
            let out = render(
                json_out,
                json!({"command": name, "value": report::ext_nat_json(&value)}),
                format!("{name}: {value}\n"),
            )?;
            Ok((0, out))
        }
        Command::Tor(ref args) => {
            let a = args.algebra.as_deref().map(formats::load_algebra).transpose()?;
            let m = formats::load_module(&args.m, a.as_ref(), Side::Right)?;
            let n = formats::load_module(&args.n, a.as_ref(), Side::Left)?;
            if m.side != Side::Right || n.side != Side::Left {
                bail!("tor needs --M on the right and --N on the left");
            }
            if *m.algebra != *n.algebra {
                bail!("--M and --N must live over the same algebra");
            }
            let dims = tor_dims(&m, &n, max_i, seed);
            let out = render(
                json_out,
                json!({"command": "tor", "dims": dims}),
                format!("tor dims (degrees 0..={max_i}): {dims:?}\n"),
            )?;
            Ok((0, out))
        }
        Command::Ext(ref args) => {
            let a = args.algebra.as_deref().map(formats::load_algebra).transpose()?;
            let side: Side = args.side.into();
            let m = formats::load_module(&args.m, a.as_ref(), side)?;
            let n = formats::load_module(&args.n, a.as_ref(), side)?;
            if m.side != n.side {
                bail!("ext needs --M and --N on the same side");
            }
            if *m.algebra != *n.algebra {
                bail!("--M and --N must live over the same algebra");
            }
            let dims = ext_dims(&m, &n, max_i, seed);
            let out = render(
                json_out,
                json!({"command": "ext", "dims": dims}),
                format!("ext dims (degrees 0..={max_i}): {dims:?}\n"),
            )?;
            Ok((0, out))
        }
        Command::Findim { ref algebra } => {
            let a = formats::load_algebra(algebra)?;
            let r = finitistic_dimension(&a, cap, seed);
            let out = render(json_out, report::findim_json(&r), report::findim_text(&r))?;
            Ok((0, out))
        }
        Command::Gldim { ref algebra } => {
            let a = formats::load_algebra(algebra)?;
            if !a.is_split_basic() {
                bail!("global dimension via vertex simples needs a split basic algebra");
            }
            let v = global_dimension(&a, cap, seed);
            let out = render(
                json_out,
                json!({"command": "gldim", "value": report::ext_nat_json(&v)}),
                format!("gldim: {v}\n"),
            )?;
            Ok((0, out))
        }
        Command::Verify(ref args) => {
            let (bound, instance, cap, seed) = match &args.instance {
                Some(path) => {
                    let file = formats::load_instance_file(path)?;
                    if let Some(b) = &args.bound {
                        if *b != file.bound_id {
                            bail!("bound `{b}` differs from the instance file's `{}`", file.bound_id);
                        }
                    }
                    let inst = file.instance.to_instance()?;
                    (file.bound_id, inst, file.cap.unwrap_or(cap), file.seed.unwrap_or(seed))
                }
                None => {
                    let b = args
                        .bound
                        .clone()
                        .ok_or_else(|| anyhow!("verify needs a bound id or --instance"))?;
                    let inst = instance_from_flags(&b, args)?;
                    (b, inst, cap, seed)
                }
            };
            if !bound_ids().contains(&bound.as_str()) {
                bail!("unknown bound `{bound}` (known: {})", bound_ids().join(", "));
            }
            let r = context::verify_inequality(&bound, &instance, cap, seed)
                .map_err(|e| anyhow!("{e}"))?;
            let code = if r.verdict == VerificationStatus::Violated { 2 } else { 0 };
            let out =
                render(json_out, report::verification_json(&r), report::verification_text(&r))?;
            Ok((code, out))
        }
        Command::ReportSuite => {
            let rows = context::report_suite(cap, seed);
            let code =
                if rows.iter().any(|r| r.verdict == VerificationStatus::Violated) { 2 } else { 0 };
            let out = render(json_out, report::suite_json(&rows), report::suite_text(&rows))?;
            Ok((code, out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::formats::{AlgebraFile, ModuleFile};
    use findim_core::module::{Module, Side};
    use findim_core::presets;

    #[test]
    fn presets_round_trip_through_the_file_format() {
        for name in presets::names() {
            let a = presets::by_name(name).unwrap();
            let file = AlgebraFile::from_algebra(&a);
            let text = serde_json::to_string(&file).unwrap();
            let back: AlgebraFile = serde_json::from_str(&text).unwrap();
            let b = back.to_algebra().unwrap();
            assert!(*a == *b, "preset {name} must survive serialization");
        }
    }

    #[test]
    fn modules_round_trip_through_the_file_format() {
        let a = presets::by_name("ut2").unwrap();
        let m = Module::regular(&a, Side::Left);
        let file = ModuleFile::from_module(&m, "ut2");
        let text = serde_json::to_string(&file).unwrap();
        let back: ModuleFile = serde_json::from_str(&text).unwrap();
        let n = back.to_module(None).unwrap();
        assert_eq!(m.dim(), n.dim());
        for i in 0..a.dim() {
            assert_eq!(m.action(i), n.action(i));
        }
    }

    #[test]
    fn bad_rationals_are_rejected() {
        assert!(super::formats::parse_rat("1/2").is_ok());
        assert!(super::formats::parse_rat("-7").is_ok());
        assert!(super::formats::parse_rat("x").is_err());
    }
}
