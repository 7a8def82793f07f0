//! varops: check law properties of tabulated variadic operations, synthesize
//! extensions from unary/binary parts, enumerate quasi-inverses, and run the
//! built-in numeric demos.
//!
//! Exit codes: 0 all requested properties pass, 1 a property fails, 2 usage
//! or input error.

mod docs;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use docs::{
    CheckDoc, DemoAssertion, DemoDoc, KernelSummary, QinvDoc, QinvMember, ReportDoc, RunManifest,
    SynthDoc,
};
use varops::construct::{
    check_associative_extension, check_preassociative_extension, extend_associative,
    extend_preassociative,
};
use varops::io::{PartsFile, TableFile, UnaryMapFile};
use varops::oracle;
use varops::quasi_inverse::{enumerate_quasi_inverses, is_quasi_inverse};
use varops::real_families::{
    check_associativity_identity, exp_sequence_demo, RealFamily, RealValue,
};
use varops::report::property;
use varops::{TabulatedVariadic, UnaryMap, Value};

const EXIT_PASS: u8 = 0;
const EXIT_PROPERTY_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "varops", version, about = "workbench for variadic operations on finite carriers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Horizon to check at (defaults to the input's own horizon, or 4)
    #[arg(long)]
    horizon: Option<usize>,
    /// Seed for sampled checks, recorded in every report
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Absolute tolerance for sampled checks
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Write the primary output document to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the oracle suite on an operation-definition file
    Check {
        /// JSON operation-definition file
        file: PathBuf,
        /// Comma-separated list of properties that gate the exit code
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Synthesize the variadic extension of unary/binary parts
    Synth {
        /// JSON parts file (carrier, codomain, f1, f2, optional f0)
        file: PathBuf,
        /// Extension mode
        #[arg(long, value_parser = ["assoc", "preassoc"])]
        mode: String,
        /// Quasi-inverse of f1 (JSON unary-map file); canonical when absent
        #[arg(long)]
        g: Option<PathBuf>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Enumerate the quasi-inverses of a unary map
    Qinv {
        /// JSON unary-map file
        file: PathBuf,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Reproduce one of the built-in numeric demos
    Demo {
        /// One of: remark-relu, remark-abs, remark-expseq, pnorm, semigroup-count
        name: String,
        /// Family parameters as key=value pairs
        #[arg(long = "param")]
        params: Vec<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Run the sampled checks applicable to a real-valued family
    Family {
        /// Family name, e.g. sum, pnorm, exp-sum, relu-sum
        name: String,
        /// Family parameters as key=value pairs
        #[arg(long = "param")]
        params: Vec<String>,
        /// Number of samples per check
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            file,
            properties,
            common,
        } => cmd_check(&file, &properties, &common),
        Command::Synth {
            file,
            mode,
            g,
            common,
        } => cmd_synth(&file, &mode, g.as_deref(), &common),
        Command::Qinv { file, common } => cmd_qinv(&file, &common),
        Command::Demo {
            name,
            params,
            common,
        } => cmd_demo(&name, &params, &common),
        Command::Family {
            name,
            params,
            count,
            common,
        } => cmd_family(&name, &params, count, &common),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn validate_common(common: &CommonFlags) -> Result<()> {
    if let Some(h) = common.horizon {
        if h < 2 {
            bail!("--horizon must be at least 2, got {h}");
        }
    }
    if !common.tol.is_finite() || common.tol <= 0.0 {
        bail!("--tol must be positive and finite, got {}", common.tol);
    }
    Ok(())
}

fn manifest(command: &str, inputs: Vec<String>, horizon: usize, common: &CommonFlags) -> RunManifest {
    RunManifest {
        command: command.to_string(),
        inputs,
        horizon,
        seed: common.seed,
        tolerance: common.tol,
        output_path: common
            .out
            .as_ref()
            .map(|p| p.display().to_string()),
    }
}

fn emit(doc: &impl serde::Serialize, out: Option<&std::path::Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(doc)?;
    match out {
        Some(path) => fs::write(path, text.as_bytes())
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn load_table(path: &std::path::Path, horizon: Option<usize>) -> Result<TabulatedVariadic> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: TableFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let table = file.to_table()?;
    match horizon {
        None => Ok(table),
        Some(h) if h == table.horizon() => Ok(table),
        Some(h) if h < table.horizon() => {
            TabulatedVariadic::from_fn(
                table.carrier().clone(),
                table.codomain().clone(),
                h,
                |w| table.value(w).expect("within the original horizon"),
            )
            .map_err(Into::into)
        }
        Some(h) => bail!(
            "--horizon {h} exceeds the horizon {} materialized in the file",
            table.horizon()
        ),
    }
}

fn cmd_check(path: &std::path::Path, gate_request: &[String], common: &CommonFlags) -> Result<u8> {
    validate_common(common)?;
    let table = load_table(path, common.horizon)?;
    let carrier = table.carrier().clone();
    let horizon = table.horizon();

    let mut reports: Vec<varops::CheckReport> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();
    let mut run = |result: varops::Result<varops::CheckReport>| match result {
        Ok(report) => reports.push(report),
        Err(err) => skipped.push(err.to_string()),
    };
    run(Ok(oracle::is_standard(&table)));
    run(oracle::is_epsilon_standard(&table).map_err(|e| annotate(property::EPSILON_STANDARD, e)));
    run(oracle::is_associative(&table).map_err(|e| annotate(property::ASSOCIATIVE, e)));
    run(oracle::is_associative_short(&table).map_err(|e| annotate(property::ASSOCIATIVE_SHORT, e)));
    run(Ok(oracle::is_preassociative(&table)));
    run(Ok(oracle::is_preassociative_pairwise(&table)));
    run(Ok(oracle::is_preassociative_single_context(&table)));
    run(oracle::is_strongly_preassociative(&table)
        .map_err(|e| annotate(property::STRONGLY_PREASSOCIATIVE, e)));
    run(Ok(oracle::is_symmetric(&table)));
    match oracle::idempotence_profile(&table) {
        Ok(profile) => {
            reports.push(profile.idempotent);
            reports.push(profile.unarily_idempotent);
            reports.push(profile.unarily_range_idempotent);
            reports.push(profile.unarily_quasi_range_idempotent);
        }
        Err(err) => {
            skipped.push(annotate("idempotence-profile", err).to_string());
            reports.push(oracle::is_unarily_quasi_range_idempotent(&table));
        }
    }

    let partition = oracle::kernel_partition(&table);
    let kernel = KernelSummary {
        classes: partition.class_count(),
        single_letter_congruence: partition.is_single_letter_congruence(),
    };

    // Default gate: the laws every table here is expected to satisfy.
    // Classification facts (associativity, symmetry, idempotence) are
    // reported but gate the exit code only when requested explicitly.
    let gate: Vec<String> = if gate_request.is_empty() {
        let mut names = vec![property::STANDARD.to_string()];
        if table.codomain().has_epsilon() {
            names.push(property::EPSILON_STANDARD.to_string());
        }
        names.push(property::PREASSOCIATIVE.to_string());
        names.push(property::PREASSOCIATIVE_PAIRWISE.to_string());
        names
    } else {
        gate_request.to_vec()
    };
    for name in &gate {
        if !reports.iter().any(|r| &r.property == name) {
            bail!("requested property `{name}` was not produced for this table");
        }
    }
    let overall_pass = gate
        .iter()
        .all(|name| reports.iter().any(|r| &r.property == name && r.verdict));

    let doc = CheckDoc {
        manifest: manifest("check", vec![path.display().to_string()], horizon, common),
        reports: reports
            .iter()
            .map(|r| ReportDoc::from_report(r, Some(&carrier)))
            .collect(),
        skipped,
        kernel,
        gate,
        overall_pass,
    };
    emit(&doc, common.out.as_deref())?;
    for r in &reports {
        eprintln!("{r}");
    }
    Ok(if overall_pass {
        EXIT_PASS
    } else {
        EXIT_PROPERTY_FAILURE
    })
}

fn annotate(property: &str, err: varops::Error) -> varops::Error {
    varops::Error::Malformed(format!("{property}: {err}"))
}

fn cmd_synth(
    path: &std::path::Path,
    mode: &str,
    g_path: Option<&std::path::Path>,
    common: &CommonFlags,
) -> Result<u8> {
    validate_common(common)?;
    let horizon = common.horizon.unwrap_or(4);
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: PartsFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let parts = file.to_parts()?;

    let (report, table) = match mode {
        "assoc" => {
            let report = check_associative_extension(&parts.f1, &parts.f2)?;
            let table = if report.overall() {
                Some(extend_associative(&parts.f1, &parts.f2, horizon)?)
            } else {
                None
            };
            (report, table)
        }
        "preassoc" => {
            let f0 = parts
                .f0
                .ok_or_else(|| anyhow!("preassoc mode requires an `f0` value in the parts file"))?;
            let g: UnaryMap = match g_path {
                Some(p) => {
                    let text =
                        fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    let file: UnaryMapFile = serde_json::from_str(&text)
                        .with_context(|| format!("parsing {}", p.display()))?;
                    file.to_unary_map()?
                }
                None => enumerate_quasi_inverses(&parts.f1).canonical().clone(),
            };
            let report = check_preassociative_extension(&parts.f1, &parts.f2, &g)?;
            let table = if report.overall() {
                Some(extend_preassociative(f0, &parts.f1, &parts.f2, &g, horizon)?)
            } else {
                None
            };
            (report, table)
        }
        other => bail!("unknown mode `{other}`"),
    };

    let overall = report.overall();
    let doc = SynthDoc {
        manifest: manifest("synth", vec![path.display().to_string()], horizon, common),
        mode: mode.to_string(),
        conditions: report
            .conditions
            .iter()
            .map(|r| ReportDoc::from_report(r, Some(&parts.carrier)))
            .collect(),
        overall,
        chosen_g: report.chosen_g.as_ref().map(UnaryMapFile::of),
        table: table.as_ref().map(TableFile::of),
    };
    // --out receives the bare table file so it feeds straight into `check`;
    // the full document always goes to stdout.
    let table_json = table.as_ref().map(|t| {
        serde_json::to_string_pretty(&TableFile::of(t)).expect("table serializes")
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    if let (Some(out), Some(json)) = (common.out.as_deref(), table_json.as_deref()) {
        fs::write(out, json.as_bytes()).with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(if overall { EXIT_PASS } else { EXIT_PROPERTY_FAILURE })
}

fn cmd_qinv(path: &std::path::Path, common: &CommonFlags) -> Result<u8> {
    validate_common(common)?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: UnaryMapFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let base = file.to_unary_map()?;
    let set = enumerate_quasi_inverses(&base);
    let members: Vec<QinvMember> = set
        .members()
        .iter()
        .map(|g| QinvMember {
            map: UnaryMapFile::of(g),
            symmetric: is_quasi_inverse(g, &base)
                .map(|r| r.verdict)
                .unwrap_or(false),
        })
        .collect();
    let doc = QinvDoc {
        manifest: manifest("qinv", vec![path.display().to_string()], 2, common),
        base: UnaryMapFile::of(&base),
        count: members.len(),
        members,
    };
    emit(&doc, common.out.as_deref())?;
    Ok(EXIT_PASS)
}

fn cmd_family(
    name: &str,
    param_pairs: &[String],
    count: usize,
    common: &CommonFlags,
) -> Result<u8> {
    validate_common(common)?;
    let params = parse_params(param_pairs)?;
    let family = RealFamily::from_name(name, &params)?;
    let mut reports: Vec<varops::CheckReport> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();
    if family.is_epsilon_standard() {
        reports.push(check_associativity_identity(
            &family,
            common.seed,
            count,
            common.tol,
        )?);
    } else {
        skipped.push("associativity-identity-sampled: family is not ε-standard".to_string());
    }
    if family.has_witness_generator() {
        reports.push(varops::real_families::check_preassociativity_witnessed(
            &family,
            common.seed,
            count,
            common.tol,
        )?);
    } else {
        skipped.push("preassociativity-sampled: family has no witness generator".to_string());
    }
    let factorization =
        match varops::real_families::factorize_family(&family, common.seed, count, common.tol) {
            Ok(f) => Some(docs::FamilyFactorizationDoc {
                inner: f.inner.name().to_string(),
                outer: f.outer.describe(),
                max_sample_error: f.max_sample_error,
            }),
            Err(err) => {
                skipped.push(format!("family-factorization-sampled: {err}"));
                None
            }
        };
    // associativity is a classification fact for families (the scaled sum is
    // a law-abiding family that is not associative), so only the
    // preassociativity verdict gates the exit code
    let overall_pass = reports
        .iter()
        .filter(|r| r.property == property::PREASSOCIATIVITY_SAMPLED)
        .all(|r| r.verdict);
    let doc = docs::FamilyDoc {
        manifest: manifest("family", vec![name.to_string()], common.horizon.unwrap_or(4), common),
        family: family.name().to_string(),
        parameters: params,
        epsilon_standard: family.is_epsilon_standard(),
        reports: reports
            .iter()
            .map(|r| ReportDoc::from_report(r, None))
            .collect(),
        skipped,
        factorization,
        overall_pass,
    };
    emit(&doc, common.out.as_deref())?;
    Ok(if overall_pass {
        EXIT_PASS
    } else {
        EXIT_PROPERTY_FAILURE
    })
}

fn parse_params(pairs: &[String]) -> Result<BTreeMap<String, f64>> {
    let mut map = BTreeMap::new();
    for pair in pairs {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| anyhow!("--param expects key=value, got `{pair}`"))?;
        let value: f64 = value
            .parse()
            .with_context(|| format!("parsing parameter `{pair}`"))?;
        map.insert(key.to_string(), value);
    }
    Ok(map)
}

fn num(value: RealValue) -> f64 {
    match value {
        RealValue::Num(x) => x,
        RealValue::Epsilon => f64::NAN,
    }
}

fn cmd_demo(name: &str, param_pairs: &[String], common: &CommonFlags) -> Result<u8> {
    validate_common(common)?;
    let params = parse_params(param_pairs)?;
    let mut values = serde_json::Map::new();
    let mut assertions: Vec<DemoAssertion> = Vec::new();
    let mut assert_that = |name: &str, pass: bool| {
        assertions.push(DemoAssertion {
            name: name.to_string(),
            pass,
        });
    };
    let put = |values: &mut serde_json::Map<String, serde_json::Value>, k: &str, v: f64| {
        values.insert(k.to_string(), serde_json::json!(v));
    };

    match name {
        "remark-relu" => {
            let f = RealFamily::ReluSum;
            let h2a = num(f.evaluate(&[-1.0, -2.0])?);
            let h2b = num(f.evaluate(&[-1.0, 1.0])?);
            let h3a = num(f.evaluate(&[-1.0, -2.0, 1.0])?);
            let h3b = num(f.evaluate(&[-1.0, 1.0, 1.0])?);
            put(&mut values, "H(-1,-2)", h2a);
            put(&mut values, "H(-1,1)", h2b);
            put(&mut values, "H(-1,-2,1)", h3a);
            put(&mut values, "H(-1,1,1)", h3b);
            assert_that("H(-1,-2) = 0", (h2a - 0.0).abs() <= 1e-12);
            assert_that("H(-1,1) = 0", (h2b - 0.0).abs() <= 1e-12);
            assert_that("H(-1,-2,1) = 0", (h3a - 0.0).abs() <= 1e-12);
            assert_that("H(-1,1,1) = 1", (h3b - 1.0).abs() <= 1e-12);
        }
        "remark-abs" => {
            let f = RealFamily::AbsSum;
            let v1 = num(f.evaluate(&[1.0])?);
            let v2 = num(f.evaluate(&[-1.0])?);
            let v3 = num(f.evaluate(&[1.0, 1.0])?);
            let v4 = num(f.evaluate(&[1.0, -1.0])?);
            put(&mut values, "F(1)", v1);
            put(&mut values, "F(-1)", v2);
            put(&mut values, "F(1,1)", v3);
            put(&mut values, "F(1,-1)", v4);
            assert_that("F(1) = F(-1) = 1", v1 == 1.0 && v2 == 1.0);
            assert_that("F(1,1) = 2", (v3 - 2.0).abs() <= 1e-12);
            assert_that("F(1,-1) = 0", (v4 - 0.0).abs() <= 1e-12);
        }
        "remark-expseq" => {
            let demo = exp_sequence_demo();
            put(&mut values, "H2(log1,log2)", demo.h2_log_pair);
            put(&mut values, "H2(log3/2,log2/2)", demo.h2_half_log_pair);
            put(&mut values, "H3(log1,log2,0)", demo.h3_log_triple);
            put(&mut values, "H3(log3/2,log2/2,0)", demo.h3_half_log_triple);
            assert_that(
                "arity-2 values agree at 5",
                (demo.h2_log_pair - 5.0).abs() <= 1e-9
                    && (demo.h2_half_log_pair - 5.0).abs() <= 1e-9,
            );
            assert_that(
                "arity-3 values separate",
                (demo.h3_log_triple - demo.h3_half_log_triple).abs() > 0.5,
            );
        }
        "pnorm" => {
            let family = RealFamily::from_name("pnorm", &params)?;
            let report = check_associativity_identity(&family, common.seed, 1000, common.tol)?;
            let f1_minus_one = num(family.evaluate(&[-1.0])?);
            put(&mut values, "F1(-1)", f1_minus_one);
            values.insert(
                "associativity_identity".to_string(),
                serde_json::json!(report.verdict),
            );
            assert_that("sampled associativity identity holds", report.verdict);
            assert_that(
                "unary idempotence fails at -1",
                f1_minus_one == 1.0 && f1_minus_one != -1.0,
            );
        }
        "semigroup-count" => {
            let x = varops::Carrier::new(["0", "1"])?;
            let id = UnaryMap::identity(&x.to_codomain());
            let mut count = 0usize;
            let n = x.len();
            let mut images = vec![0usize; n * n];
            loop {
                let f2 = varops::BinaryMap::new(
                    x.clone(),
                    x.to_codomain(),
                    images.iter().map(|&i| Value::Val(i)).collect(),
                )?;
                if check_associative_extension(&id, &f2)?.overall() {
                    count += 1;
                }
                let mut carry = true;
                for slot in images.iter_mut().rev() {
                    if carry {
                        *slot += 1;
                        if *slot == n {
                            *slot = 0;
                        } else {
                            carry = false;
                        }
                    }
                }
                if carry {
                    break;
                }
            }
            values.insert("associative_count".to_string(), serde_json::json!(count));
            values.insert("total".to_string(), serde_json::json!(16));
            assert_that("exactly 8 of 16 binary operations extend", count == 8);
        }
        other => bail!("unknown demo `{other}`"),
    }

    let overall = assertions.iter().all(|a| a.pass);
    let doc = DemoDoc {
        manifest: manifest("demo", vec![name.to_string()], common.horizon.unwrap_or(4), common),
        demo: name.to_string(),
        values,
        assertions,
        overall,
    };
    emit(&doc, common.out.as_deref())?;
    Ok(if overall { EXIT_PASS } else { EXIT_PROPERTY_FAILURE })
}
