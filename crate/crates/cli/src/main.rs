//! `qha`: verify quasi-Hopf structures from JSON files or the built-in
//! catalog, derive their distinguished elements, compute integrals, build
//! Morita contexts and Galois maps, and run the full equivalence suite.
//!
//! Exit codes: 0 — every mathematical check passed (verdicts such as "not
//! Galois" are results, not failures); 1 — a mathematical check failed;
//! 2 — input or usage error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use quasihopf::catalog::{self, Payload};
use quasihopf::comodule::{
    q_rho_identities, quasi_smash, quasismash_can_inverse, quasismash_total_integral,
    verify_comodule_algebra, ComoduleAlgebra,
};
use quasihopf::derived::{compute_pq, verify_pq_identities, verify_uv};
use quasihopf::error::Error;
use quasihopf::files;
use quasihopf::integrals::{check_s_of_t, integral_data, verify_integral_identities, verify_theta};
use quasihopf::module_algebra::{invariants, verify_module_algebra, ModuleAlgebra};
use quasihopf::morita::{
    can_maps, can_matrix, equivalence_suite, gauge_twist, morita_bundle, phi_iso, theta_relation,
    uv_elements,
};
use quasihopf::quasihopf::{compute_gauge_f, verify_quasi_hopf, QuasiHopfAlgebra};
use quasihopf::report::{coords_string, Report};
use quasihopf::scalar::Field;
use quasihopf::tensor::Tensor;

#[derive(Parser)]
#[command(name = "qha", version, about = "Exact verifier for quasi-Hopf algebra structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Override the field: `rational` or `fp:<prime>`.
    #[arg(long)]
    field: Option<String>,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the quasi-bialgebra and quasi-Hopf axioms.
    Verify {
        /// Algebra file or catalog:NAME.
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the p/q elements, the gauge element and the U/V elements,
    /// and verify all their identities.
    Derive {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Left integrals, the modular element, the antipode-of-integral law and
    /// the Frobenius isomorphism.
    Integrals {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Build and verify the full Morita context for a module algebra.
    Morita {
        /// Module-algebra catalog entry, or an algebra file followed by a
        /// module-algebra file.
        inputs: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Canonical Galois maps and verdict for a module algebra.
    Galois {
        inputs: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Build and check the quasi-smash product of a comodule algebra.
    Quasismash {
        inputs: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Twist by a gauge transformation and compare verdicts.
    Twist {
        /// Gauge catalog entry, or an algebra file followed by a gauge file.
        inputs: Vec<String>,
        /// Module algebra to carry along (catalog entry or file).
        #[arg(long)]
        algebra: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run every equivalence-theorem flag and check the implications.
    Suite {
        inputs: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Emit a catalog entry's files, or list the entries.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Output directory for the emitted files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Serialize)]
struct Output {
    format: &'static str,
    #[serde(flatten)]
    report: Report,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    data: BTreeMap<String, String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_field(common: &Common) -> Result<Option<Field>, Error> {
    common.field.as_deref().map(str::parse).transpose()
}

fn finish(report: Report, data: BTreeMap<String, String>, common: &Common) -> ExitCode {
    let ok = report.all_passed();
    if common.json {
        let out = Output {
            format: files::REPORT_FORMAT,
            report,
            data,
        };
        print!("{}", files::emit(&out));
    } else {
        print!("{report}");
        for (k, v) in &data {
            println!("  {k} = {v}");
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

enum Resolved {
    Hopf(QuasiHopfAlgebra),
    Module(QuasiHopfAlgebra, ModuleAlgebra),
    Comodule(QuasiHopfAlgebra, ComoduleAlgebra),
    Gauge(QuasiHopfAlgebra, Tensor),
}

fn read_json(path: &str) -> Result<serde_json::Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{path}: {e}")))
}

fn value_format(value: &serde_json::Value) -> Result<&str, Error> {
    value
        .get("format")
        .and_then(|f| f.as_str())
        .ok_or_else(|| Error::Format("missing \"format\" key".to_string()))
}

/// Resolves a standalone input: `catalog:NAME`, an algebra file, or a
/// catalog file.
fn resolve(input: &str, field: Option<Field>) -> Result<Resolved, Error> {
    if let Some(name) = input.strip_prefix("catalog:") {
        let entry = catalog::catalog_get(name, field.unwrap_or(Field::Rational))?;
        return Ok(match entry.payload {
            Payload::Hopf(h) => Resolved::Hopf(h),
            Payload::Module(h, a) => Resolved::Module(h, a),
            Payload::Comodule(h, c) => Resolved::Comodule(h, c),
            Payload::Gauge(h, f) => Resolved::Gauge(h, f),
        });
    }
    let value = read_json(input)?;
    match value_format(&value)? {
        files::ALGEBRA_FORMAT => {
            let file: files::AlgebraFile = serde_json::from_value(value)
                .map_err(|e| Error::Format(format!("{input}: {e}")))?;
            Ok(Resolved::Hopf(files::hopf_from_file(&file, field)?))
        }
        files::CATALOG_FORMAT => {
            let file: files::CatalogFile = serde_json::from_value(value)
                .map_err(|e| Error::Format(format!("{input}: {e}")))?;
            let h = files::hopf_from_file(&file.hopf, field)?;
            if let Some(m) = &file.module_algebra {
                let m = reparse_module(m, &h)?;
                return Ok(Resolved::Module(h, m));
            }
            if let Some(c) = &file.comodule {
                let c = reparse_comodule(c, &h)?;
                return Ok(Resolved::Comodule(h, c));
            }
            if let Some(g) = &file.gauge {
                let g = reparse_gauge(g, &h)?;
                return Ok(Resolved::Gauge(h, g));
            }
            Ok(Resolved::Hopf(h))
        }
        other => Err(Error::Format(format!(
            "{input}: cannot use a {other:?} file here"
        ))),
    }
}

fn reparse_module(
    file: &files::ModuleAlgebraFile,
    h: &QuasiHopfAlgebra,
) -> Result<ModuleAlgebra, Error> {
    let mut file = file.clone();
    file.field = h.field().to_string();
    files::module_algebra_from_file(&file, h)
}

fn reparse_comodule(
    file: &files::ComoduleAlgebraFile,
    h: &QuasiHopfAlgebra,
) -> Result<ComoduleAlgebra, Error> {
    let mut file = file.clone();
    file.field = h.field().to_string();
    files::comodule_from_file(&file, h)
}

fn reparse_gauge(file: &files::GaugeFile, h: &QuasiHopfAlgebra) -> Result<Tensor, Error> {
    let mut file = file.clone();
    file.field = h.field().to_string();
    files::gauge_from_file(&file, h)
}

fn resolve_hopf(input: &str, field: Option<Field>) -> Result<QuasiHopfAlgebra, Error> {
    match resolve(input, field)? {
        Resolved::Hopf(h)
        | Resolved::Module(h, _)
        | Resolved::Comodule(h, _)
        | Resolved::Gauge(h, _) => Ok(h),
    }
}

/// Resolves a pair: one module-algebra entry, or algebra + module file.
fn resolve_module_pair(
    inputs: &[String],
    field: Option<Field>,
) -> Result<(QuasiHopfAlgebra, ModuleAlgebra), Error> {
    match inputs {
        [one] => match resolve(one, field)? {
            Resolved::Module(h, a) => Ok((h, a)),
            _ => Err(Error::Format(format!(
                "{one} does not provide a module algebra"
            ))),
        },
        [hopf, module] => {
            let h = resolve_hopf(hopf, field)?;
            let value = read_json(module)?;
            let file: files::ModuleAlgebraFile = serde_json::from_value(value)
                .map_err(|e| Error::Format(format!("{module}: {e}")))?;
            let a = reparse_module(&file, &h)?;
            Ok((h, a))
        }
        _ => Err(Error::Format(
            "expected a module-algebra entry or an algebra file plus a module-algebra file"
                .to_string(),
        )),
    }
}

fn resolve_comodule_pair(
    inputs: &[String],
    field: Option<Field>,
) -> Result<(QuasiHopfAlgebra, ComoduleAlgebra), Error> {
    match inputs {
        [one] => match resolve(one, field)? {
            Resolved::Comodule(h, c) => Ok((h, c)),
            _ => Err(Error::Format(format!(
                "{one} does not provide a comodule algebra"
            ))),
        },
        [hopf, comodule] => {
            let h = resolve_hopf(hopf, field)?;
            let value = read_json(comodule)?;
            let file: files::ComoduleAlgebraFile = serde_json::from_value(value)
                .map_err(|e| Error::Format(format!("{comodule}: {e}")))?;
            let c = reparse_comodule(&file, &h)?;
            Ok((h, c))
        }
        _ => Err(Error::Format(
            "expected a comodule entry or an algebra file plus a comodule file".to_string(),
        )),
    }
}

fn resolve_gauge_pair(
    inputs: &[String],
    field: Option<Field>,
) -> Result<(QuasiHopfAlgebra, Tensor), Error> {
    match inputs {
        [one] => match resolve(one, field)? {
            Resolved::Gauge(h, f) => Ok((h, f)),
            _ => Err(Error::Format(format!(
                "{one} does not provide a gauge transformation"
            ))),
        },
        [hopf, gauge] => {
            let h = resolve_hopf(hopf, field)?;
            let value = read_json(gauge)?;
            let file: files::GaugeFile = serde_json::from_value(value)
                .map_err(|e| Error::Format(format!("{gauge}: {e}")))?;
            let f = reparse_gauge(&file, &h)?;
            Ok((h, f))
        }
        _ => Err(Error::Format(
            "expected a gauge entry or an algebra file plus a gauge file".to_string(),
        )),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Verify { input, common } => {
            let field = parse_field(&common)?;
            let h = resolve_hopf(&input, field)?;
            let report = verify_quasi_hopf(&h, &input);
            Ok(finish(report, BTreeMap::new(), &common))
        }
        Command::Derive { input, common } => {
            let field = parse_field(&common)?;
            let h = resolve_hopf(&input, field)?;
            let mut report = Report::new(input.clone());
            let pq = compute_pq(&h)?;
            report.absorb("pq", verify_pq_identities(&h, &pq));
            let mut data = BTreeMap::new();
            data.insert("p_l".into(), coords_string(pq.p_l.coords()));
            data.insert("q_l".into(), coords_string(pq.q_l.coords()));
            data.insert("p_r".into(), coords_string(pq.p_r.coords()));
            data.insert("q_r".into(), coords_string(pq.q_r.coords()));
            let (f, f_inv) = compute_gauge_f(&h)?;
            data.insert("f".into(), coords_string(f.coords()));
            let uv = quasihopf::derived::compute_uv(&h, &f, &f_inv, &pq)?;
            report.absorb("uv", verify_uv(&h, &uv));
            Ok(finish(report, data, &common))
        }
        Command::Integrals { input, common } => {
            let field = parse_field(&common)?;
            let h = resolve_hopf(&input, field)?;
            let mut report = Report::new(input.clone());
            let data_int = integral_data(&h)?;
            report.absorb("integral", check_s_of_t(&h, &data_int));
            report.absorb("frobenius", verify_theta(&h, &data_int)?);
            report.absorb(
                "identities",
                verify_integral_identities(&h, &data_int.t)?,
            );
            let mut data = BTreeMap::new();
            data.insert("t".into(), coords_string(&data_int.t));
            data.insert("integral_dim".into(), data_int.integral_dim.to_string());
            data.insert("gamma".into(), coords_string(&data_int.gamma));
            data.insert("lambda".into(), coords_string(&data_int.lambda));
            Ok(finish(report, data, &common))
        }
        Command::Morita { inputs, common } => {
            let field = parse_field(&common)?;
            let (h, a) = resolve_module_pair(&inputs, field)?;
            let mut report = verify_module_algebra(&h, &a);
            let bundle = morita_bundle(&h, &a)?;
            let (_, _, iso_report) = phi_iso(&h, &a, &bundle.smash, &bundle.pq)?;
            report.absorb("linking", iso_report);
            report.absorb("context", bundle.context.report.clone());
            Ok(finish(report, BTreeMap::new(), &common))
        }
        Command::Galois { inputs, common } => {
            let field = parse_field(&common)?;
            let (h, a) = resolve_module_pair(&inputs, field)?;
            let mut report = verify_module_algebra(&h, &a);
            let pq = compute_pq(&h)?;
            let b = invariants(&h, &a)?;
            let uv = uv_elements(&h, &pq)?;
            let galois = can_maps(&h, &a, &b, &pq, &uv)?;
            report.absorb("galois", galois.report.clone());
            // (I⊗θ_t)∘can = [−,−].
            let data_int = integral_data(&h)?;
            let theta =
                quasihopf::integrals::frobenius_theta_t(&h, &data_int.t, &pq)?;
            let bundle = morita_bundle(&h, &a)?;
            report.absorb(
                "bridge",
                theta_relation(&h, &a, &theta, &galois.can, &bundle.context.pairing_smash),
            );
            let mut data = BTreeMap::new();
            data.insert("galois".into(), galois.galois.to_string());
            data.insert("can_rank".into(), galois.can_rank.to_string());
            Ok(finish(report, data, &common))
        }
        Command::Quasismash { inputs, common } => {
            let field = parse_field(&common)?;
            let (h, c) = resolve_comodule_pair(&inputs, field)?;
            let mut report = verify_comodule_algebra(&h, &c);
            let (qs, qs_report) = quasi_smash(&h, &c)?;
            report.absorb("quasi-smash", qs_report);
            report.absorb("q-rho", q_rho_identities(&h, &c, &qs.q_rho)?);
            let pq = compute_pq(&h)?;
            let b = invariants(&h, &qs.module_algebra)?;
            let (quotient, can, can_report) = can_matrix(&h, &qs.module_algebra, &b, &pq)?;
            report.absorb("can", can_report);
            let (_, inv_report) = quasismash_can_inverse(&h, &qs, &quotient, &can)?;
            report.absorb("can-inverse", inv_report);
            let (_, total_report) = quasismash_total_integral(&h, &qs)?;
            report.absorb("total-integral", total_report);
            Ok(finish(report, BTreeMap::new(), &common))
        }
        Command::Twist {
            inputs,
            algebra,
            common,
        } => {
            let field = parse_field(&common)?;
            let (h, f) = resolve_gauge_pair(&inputs, field)?;
            let module = match &algebra {
                None => None,
                Some(src) => {
                    let (h2, a) = resolve_module_pair(std::slice::from_ref(src), field)
                        .or_else(|_| {
                            // Allow a plain module file against the same H.
                            let value = read_json(src)?;
                            let file: files::ModuleAlgebraFile = serde_json::from_value(value)
                                .map_err(|e| Error::Format(format!("{src}: {e}")))?;
                            reparse_module(&file, &h).map(|a| (h.clone(), a))
                        })?;
                    if h2.field() != h.field() || h2.dim() != h.dim() {
                        return Err(Error::Format(
                            "module algebra does not match the algebra being twisted"
                                .to_string(),
                        ));
                    }
                    Some(a)
                }
            };
            let twist = gauge_twist(&h, module.as_ref(), &f)?;
            Ok(finish(twist.report, BTreeMap::new(), &common))
        }
        Command::Suite { inputs, common } => {
            let field = parse_field(&common)?;
            let (h, a) = resolve_module_pair(&inputs, field)?;
            let outcome = equivalence_suite(&h, &a)?;
            let mut data = BTreeMap::new();
            for (k, v) in &outcome.flags {
                data.insert(k.clone(), v.to_string());
            }
            Ok(finish(outcome.report, data, &common))
        }
        Command::Catalog {
            name,
            list,
            out,
            common,
        } => {
            let field = parse_field(&common)?;
            if list || name.is_none() {
                for n in catalog::catalog_names() {
                    println!("{n}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let name = name.expect("checked above");
            let field = field.unwrap_or(Field::Rational);
            let entry = catalog::catalog_get(&name, field)?;
            std::fs::create_dir_all(&out)
                .map_err(|e| Error::Format(format!("cannot create {}: {e}", out.display())))?;
            let slug = match field {
                Field::Rational => slugify(&entry.name),
                Field::Fp(p) => format!("{}_fp{p}", slugify(&entry.name)),
            };
            write_file(&out, &format!("{slug}.json"), &files::emit(&entry.file))?;
            write_file(
                &out,
                &format!("{slug}.hopf.json"),
                &files::emit(&entry.file.hopf),
            )?;
            if let Some(m) = &entry.file.module_algebra {
                write_file(&out, &format!("{slug}.module.json"), &files::emit(m))?;
            }
            if let Some(c) = &entry.file.comodule {
                write_file(&out, &format!("{slug}.comodule.json"), &files::emit(c))?;
            }
            if let Some(g) = &entry.file.gauge {
                write_file(&out, &format!("{slug}.gauge.json"), &files::emit(g))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn slugify(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                '_'
            }
        })
        .collect::<String>()
        .trim_matches('_')
        .to_string()
}

fn write_file(dir: &Path, name: &str, content: &str) -> Result<(), Error> {
    let path = dir.join(name);
    std::fs::write(&path, content)
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}
