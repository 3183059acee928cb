use std::path::PathBuf;

use serde::Deserialize;
use serde_json::json;

use selfext_core::hybrid::{catalog, verify};
use selfext_core::lab::{self, CheckKind, SweepConfig};
use selfext_core::oracle::{BoundQuiverPresentation, Oracle, PeriodResult};
use selfext_core::{NakayamaAlgebra, SerialModule, Shape};

use crate::modexpr::{parse_module, resolve_vertex};
use crate::report::{Report, TextTable, SCHEMA_VERSION};
use crate::{
    AlgebraArgs, CatalogOp, Cli, CliError, Command, KupischOp, ModuleArgs, PresentationArgs, QuiverOp, SweepArgs,
};

/// Runs a command; the second value is the requested CSV summary path.
pub fn run(cli: &Cli) -> Result<(Report, Option<PathBuf>), CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Kupisch { op } => kupisch(op, seed).map(|r| (r, None)),
        Command::Sweep(args) => Ok((sweep(args, seed)?, args.summary.clone())),
        Command::Quiver { op } => quiver(op, seed).map(|r| (r, None)),
        Command::Catalog { op } => {
            let summary = match op {
                CatalogOp::Verify { summary, .. } => summary.clone(),
                _ => None,
            };
            Ok((catalog_cmd(op, seed)?, summary))
        }
    }
}

#[derive(Deserialize)]
struct KupischFile {
    schema_version: u32,
    shape: Shape,
    kupisch: Vec<usize>,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(args: &AlgebraArgs) -> Result<NakayamaAlgebra, CliError> {
    let (series, shape) = match (&args.series, &args.file) {
        (Some(series), _) => (series.clone(), args.shape.parse::<Shape>().map_err(CliError::Input)?),
        (None, Some(path)) => {
            let file: KupischFile =
                toml::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            if file.schema_version != SCHEMA_VERSION {
                return Err(CliError::Input(format!(
                    "unsupported schema_version {}",
                    file.schema_version
                )));
            }
            (file.kupisch, file.shape)
        }
        (None, None) => return Err(CliError::Input("give --series or --file".into())),
    };
    NakayamaAlgebra::new(&series, shape).map_err(CliError::typed)
}

fn parse_serial(alg: &NakayamaAlgebra, text: &str) -> Result<SerialModule, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [v, k] = parts.as_slice() else {
        return Err(CliError::Input(format!(
            "module `{text}` is not of the form vertex,length"
        )));
    };
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Input(format!("bad number `{s}` in module `{text}`")))
    };
    alg.check(SerialModule::new(parse(v)?, parse(k)?))
        .map_err(CliError::typed)
}

fn kupisch(op: &KupischOp, seed: u64) -> Result<Report, CliError> {
    match op {
        KupischOp::Validate(args) => {
            let alg = load_algebra(args)?;
            let gldim = alg.global_dim();
            let text = format!(
                "valid {alg}: dimension {}, Loewy length {}, global dimension {gldim}, self-injective {}\n",
                alg.dimension(),
                alg.loewy_length(),
                alg.is_self_injective()
            );
            Ok(Report::new("kupisch validate", seed, text)
                .with("algebra", &alg)
                .with("dimension", alg.dimension())
                .with("loewy_length", alg.loewy_length())
                .with("global_dim", gldim)
                .with("self_injective", alg.is_self_injective()))
        }
        KupischOp::Hom {
            algebra,
            module,
            target,
        } => {
            let alg = load_algebra(algebra)?;
            let (m, n) = (parse_serial(&alg, module)?, parse_serial(&alg, target)?);
            let d = alg.hom_dim(m, n);
            Ok(scalar("kupisch hom", seed, &alg, d.to_string())
                .with("module", m)
                .with("target", n)
                .with("hom_dim", d))
        }
        KupischOp::Ext {
            algebra,
            module,
            target,
            i,
        } => {
            let alg = load_algebra(algebra)?;
            if *i == 0 {
                return Err(CliError::Input("Ext degree starts at 1".into()));
            }
            let (m, n) = (parse_serial(&alg, module)?, parse_serial(&alg, target)?);
            let d = alg.ext_dim(m, n, *i);
            Ok(scalar("kupisch ext", seed, &alg, d.to_string())
                .with("module", m)
                .with("target", n)
                .with("i", i)
                .with("ext_dim", d))
        }
        KupischOp::Rigid { algebra, module } => {
            let alg = load_algebra(algebra)?;
            let m = parse_serial(&alg, module)?;
            let rigid = alg.is_rigid(m);
            let word = if rigid { "rigid" } else { "non-rigid" };
            Ok(scalar("kupisch rigid", seed, &alg, word.into())
                .with("module", m)
                .with("rigid", rigid))
        }
        KupischOp::Pd { algebra, module } => {
            let alg = load_algebra(algebra)?;
            let m = parse_serial(&alg, module)?;
            let pd = alg.proj_dim(m);
            Ok(scalar("kupisch pd", seed, &alg, pd.to_string())
                .with("module", m)
                .with("proj_dim", pd))
        }
        KupischOp::Report { algebra, module, depth } => {
            let alg = load_algebra(algebra)?;
            let m = parse_serial(&alg, module)?;
            let r = alg.report(m, *depth);
            let mut table = TextTable::new(["quantity", "value"]);
            table.row(["module".to_string(), m.to_string()]);
            table.row(["projective dimension".to_string(), r.proj_dim.to_string()]);
            table.row(["injective dimension".to_string(), r.inj_dim.to_string()]);
            table.row(["rigid".to_string(), r.rigid.to_string()]);
            for (j, d) in r.ext_dims.iter().enumerate() {
                table.row([format!("dim Ext^{}(M,M)", j + 1), d.to_string()]);
            }
            let text = format!("{alg}\n{}", table.render());
            Ok(Report::new("kupisch report", seed, text)
                .with("algebra", &alg)
                .with("report", &r)
                .with_table(table))
        }
        KupischOp::Tate { algebra, module, i } => {
            let alg = load_algebra(algebra)?;
            let m = parse_serial(&alg, module)?;
            let d = alg.tate_ext_dim(m, *i).map_err(CliError::typed)?;
            Ok(scalar("kupisch tate", seed, &alg, d.to_string())
                .with("module", m)
                .with("i", i)
                .with("tate_ext_dim", d))
        }
    }
}

fn scalar(command: &str, seed: u64, alg: &NakayamaAlgebra, value: String) -> Report {
    Report::new(command, seed, format!("{value}\n")).with("algebra", alg)
}

fn sweep(args: &SweepArgs, seed: u64) -> Result<Report, CliError> {
    let shapes = args
        .shapes
        .iter()
        .map(|s| s.parse::<Shape>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::Input)?;
    let checks = match &args.checks {
        None => CheckKind::ALL.to_vec(),
        Some(names) => names
            .iter()
            .filter(|n| !n.trim().is_empty())
            .map(|n| n.parse::<CheckKind>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::Input)?,
    };
    let config = SweepConfig {
        n_max: args.n_max,
        c_max: args.c_max,
        shapes,
        ext_depth: args.depth,
        field_chars: args.primes.clone(),
        checks,
        seed,
    };
    config.validate().map_err(CliError::Input)?;
    Ok(Report::stream("sweep", seed, lab::sweep(&config)))
}

fn load_presentation(args: &PresentationArgs) -> Result<BoundQuiverPresentation, CliError> {
    match (&args.file, &args.catalog) {
        (Some(path), _) => BoundQuiverPresentation::from_toml(&read(path)?).map_err(CliError::typed),
        (None, Some(name)) => catalog::presentation(name).map_err(CliError::typed),
        (None, None) => Err(CliError::Input("give --file or --catalog".into())),
    }
}

fn module_expr(oracle: &Oracle, args: &ModuleArgs) -> Result<(String, selfext_core::oracle::QuiverModule), CliError> {
    let expr = match (&args.module, &args.simple) {
        (Some(m), _) => m.clone(),
        (None, Some(v)) => {
            resolve_vertex(oracle, v)?;
            format!("S{v}")
        }
        (None, None) => return Err(CliError::Input("give --module or --simple".into())),
    };
    let m = parse_module(oracle, &expr)?;
    Ok((expr, m))
}

fn quiver(op: &QuiverOp, seed: u64) -> Result<Report, CliError> {
    let presentation = match op {
        QuiverOp::Build(p) => p,
        QuiverOp::Ext { presentation, .. }
        | QuiverOp::Period { presentation, .. }
        | QuiverOp::Resolve { presentation, .. } => presentation,
    };
    let pres = load_presentation(presentation)?;
    let oracle = Oracle::build(&pres).map_err(CliError::typed)?;
    let q = oracle.algebra().quiver().clone();
    match op {
        QuiverOp::Build(_) => {
            let cartan = oracle.algebra().cartan().to_vec();
            let mut table = TextTable::new(std::iter::once("P \\ S".to_string()).chain(q.vertices.iter().cloned()));
            for (v, row) in cartan.iter().enumerate() {
                table.row(std::iter::once(q.vertices[v].clone()).chain(row.iter().map(|c| c.to_string())));
            }
            let loewy = (0..q.vertex_count())
                .map(|v| oracle.projective(v).loewy_length())
                .max()
                .unwrap_or(0);
            let symmetric = oracle.is_weakly_symmetric();
            let text = format!(
                "{} over F_{}: dimension {}, Loewy length {loewy}, weakly symmetric {symmetric}\nCartan matrix:\n{}",
                pres.name,
                pres.char_p,
                oracle.algebra().dimension(),
                table.render()
            );
            Ok(Report::new("quiver build", seed, text)
                .with("name", &pres.name)
                .with("char", pres.char_p)
                .with("dimension", oracle.algebra().dimension())
                .with("loewy_length", loewy)
                .with("weakly_symmetric", symmetric)
                .with("cartan", cartan))
        }
        QuiverOp::Ext { module, target, i, .. } => {
            if *i == 0 {
                return Err(CliError::Input("Ext degree starts at 1".into()));
            }
            let (expr, m) = module_expr(&oracle, module)?;
            let n = parse_module(&oracle, target)?;
            let d = oracle.ext_dim(&m, &n, *i);
            Ok(Report::new("quiver ext", seed, format!("{d}\n"))
                .with("name", &pres.name)
                .with("module", expr)
                .with("target", target)
                .with("i", i)
                .with("ext_dim", d))
        }
        QuiverOp::Period { module, bound, .. } => {
            let (expr, m) = module_expr(&oracle, module)?;
            let result = oracle.omega_period(&m, *bound, seed).map_err(CliError::typed)?;
            let text = match result {
                PeriodResult::Period(k) => format!("{k}\n"),
                PeriodResult::NoneFound => format!("not periodic up to {bound}\n"),
                PeriodResult::NotCertified => format!("not certified up to {bound}\n"),
            };
            Ok(Report::new("quiver period", seed, text)
                .with("name", &pres.name)
                .with("module", expr)
                .with("bound", bound)
                .with("period", result.period()))
        }
        QuiverOp::Resolve { module, depth, .. } => {
            let (expr, m) = module_expr(&oracle, module)?;
            let res = oracle.resolution(&m, *depth);
            let mut table = TextTable::new(["step", "syzygy dims", "cover multiplicities"]);
            let mut steps = Vec::new();
            for (i, om) in res.syzygies.iter().enumerate() {
                let mult = res.multiplicities.get(i).cloned();
                let shown = mult.as_ref().map_or("-".to_string(), |m| format!("{m:?}"));
                table.row([i.to_string(), format!("{:?}", om.dims()), shown]);
                steps.push(json!({"step": i, "dims": om.dims(), "cover": mult}));
            }
            let text = format!("vertices {:?}\n{}", q.vertices, table.render());
            Ok(Report::new("quiver resolve", seed, text)
                .with("name", &pres.name)
                .with("module", expr)
                .with("vertices", &q.vertices)
                .with("steps", steps)
                .with_table(table))
        }
    }
}

fn catalog_cmd(op: &CatalogOp, seed: u64) -> Result<Report, CliError> {
    match op {
        CatalogOp::List => {
            let entries = catalog::entries();
            let mut table = TextTable::new(["name", "char", "summary"]);
            for e in &entries {
                table.row([e.name.to_string(), e.char_p.to_string(), e.summary.to_string()]);
            }
            Ok(Report::new("catalog list", seed, table.render())
                .with("entries", &entries)
                .with_table(table))
        }
        CatalogOp::Verify { name, depth, .. } => {
            if *depth == 0 {
                return Err(CliError::Input("depth must be positive".into()));
            }
            let verdicts = if name == "all" {
                let mut all = Vec::new();
                for (_, result) in verify::verify_all(*depth, seed) {
                    all.extend(result.map_err(CliError::typed)?);
                }
                all
            } else {
                verify::verify_entry(name, *depth, seed).map_err(CliError::typed)?
            };
            Ok(Report::stream("catalog verify", seed, verdicts))
        }
        CatalogOp::Export { name } => {
            let pres = catalog::presentation(name).map_err(CliError::typed)?;
            Ok(Report::new("catalog export", seed, pres.to_toml()).with("presentation", pres.to_toml()))
        }
    }
}
