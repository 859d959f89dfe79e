//! Command-line driver exposing every verification as a reproducible,
//! machine-readable run.
//!
//! Exit codes: 0 on success or verification pass, 1 on verification
//! failure, 2 on usage errors. All orderings are deterministic, so
//! identical invocations on an identical build produce byte-identical
//! output. JSON reports carry a top-level `"schema": "1"` key.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use wreath_mckay::exterior;
use wreath_mckay::fock;
use wreath_mckay::grouplib::{build_group, GroupFamily, GroupSpec, MatrixGroup};
use wreath_mckay::invariants;
use wreath_mckay::mckay;
use wreath_mckay::wreath;

#[derive(Parser)]
#[command(
    name = "wmckay",
    about = "Exact wreath-product McKay correspondence computations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group catalog: orders, classes, character tables
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// McKay data: ξ, the Cartan matrix, the affine diagram
    Mckay {
        #[command(subcommand)]
        command: McKayCommand,
    },
    /// Wreath products: conjugacy types, irreducibles, the weighted Gram matrix
    Wreath {
        #[command(subcommand)]
        command: WreathCommand,
    },
    /// Structural verifications
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Fock-space structure checks
    Fock {
        #[command(subcommand)]
        command: FockCommand,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order and conjugacy classes
    Info(GroupArgs),
    /// Full character table
    Table(GroupArgs),
}

#[derive(Subcommand)]
enum McKayCommand {
    /// The affine Cartan matrix a_ij = ⟨ξ·γi, γj⟩
    Matrix(GroupArgs),
    /// The McKay graph in DOT format
    Graph(GroupArgs),
    /// Full verification: symmetry, affine type, A·δ = 0, PSD, Hom dimension
    Check(GroupArgs),
}

#[derive(Subcommand)]
enum WreathCommand {
    /// Conjugacy types of Γₙ with centralizer orders and class sizes
    Types(WreathArgs),
    /// Irreducible characters of Γₙ indexed by 𝒫ₙ(Γ*)
    Irreps(WreathArgs),
    /// Weighted Gram matrix on the irreducible basis
    Gram(WreathArgs),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// λ(ℂ^{kn}) = η_n(λ(π)) type-by-type
    ThEqual(ThEqualArgs),
    /// Γₙ-invariants are generated by lifts of Γ-invariants, degree by degree
    WeylLemma(WeylArgs),
}

#[derive(Subcommand)]
enum FockCommand {
    /// Graded dimensions against type counts
    Dims(FockDimsArgs),
    /// Heisenberg commutation relations on a truncation
    HeisenbergCheck(FockHeisenbergArgs),
    /// Θ intertwining for a color bijection
    ThetaCheck(FockThetaArgs),
}

#[derive(Args, Clone)]
struct GroupSelector {
    /// Group family: cyclic, binary-dihedral, binary-tetrahedral,
    /// binary-octahedral, binary-icosahedral
    #[arg(long)]
    family: String,
    /// Order parameter (cyclic: order n; binary-dihedral: order 4n)
    #[arg(long, default_value_t = 1)]
    param: u64,
}

impl GroupSelector {
    fn build(&self) -> Result<MatrixGroup, String> {
        let family = GroupFamily::from_kebab(&self.family)
            .ok_or_else(|| format!("unknown family {:?}", self.family))?;
        if family.uses_parameter() && self.param < 1 {
            return Err("parameter must be ≥ 1".into());
        }
        build_group(&GroupSpec::new(family, self.param)).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of standard output
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    group: GroupSelector,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct WreathArgs {
    #[command(flatten)]
    group: GroupSelector,
    /// Number of wreath factors
    #[arg(short, long, default_value_t = 2)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ThEqualArgs {
    #[command(flatten)]
    group: GroupSelector,
    /// Dimension of the defining representation (catalog: 2)
    #[arg(short, long, default_value_t = 2)]
    k: usize,
    /// Number of wreath factors
    #[arg(short, long, default_value_t = 2)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct WeylArgs {
    #[command(flatten)]
    group: GroupSelector,
    /// Number of wreath factors
    #[arg(short, long, default_value_t = 2)]
    n: usize,
    /// Verify all degrees d ≤ dmax
    #[arg(long, default_value_t = 4)]
    dmax: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FockDimsArgs {
    #[command(flatten)]
    group: GroupSelector,
    /// Largest graded degree to report
    #[arg(long, default_value_t = 6)]
    degree: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FockHeisenbergArgs {
    #[command(flatten)]
    group: GroupSelector,
    /// Bilinear form on colors
    #[arg(long, value_enum, default_value_t = FormKind::Standard)]
    form: FormKind,
    /// Degree bound of the checked truncation
    #[arg(long, default_value_t = 5)]
    truncation: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FockThetaArgs {
    #[command(flatten)]
    group: GroupSelector,
    /// Color bijection as comma-separated images, e.g. "1,2,0"; identity if omitted
    #[arg(long)]
    perm: Option<String>,
    /// Bilinear form on colors
    #[arg(long, value_enum, default_value_t = FormKind::Standard)]
    form: FormKind,
    /// Degree bound of the checked truncation
    #[arg(long, default_value_t = 4)]
    truncation: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormKind {
    Standard,
    Weighted,
}

fn emit(out: &OutputArgs, text: String) -> Result<(), String> {
    match &out.output {
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| e.to_string())?;
            file.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
            if !text.ends_with('\n') {
                file.write_all(b"\n").map_err(|e| e.to_string())?;
            }
        }
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
        }
    }
    Ok(())
}

fn emit_json(out: &OutputArgs, value: &serde_json::Value) -> Result<(), String> {
    emit(out, serde_json::to_string_pretty(value).expect("serializable"))
}

// Verification subcommands return whether the verdict passed.
fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Group { command } => match command {
            GroupCommand::Info(args) => {
                let group = args.group.build()?;
                match args.out.format {
                    Format::Json => {
                        let mut v = group.to_json();
                        v.as_object_mut().unwrap().remove("table");
                        emit_json(&args.out, &v)?;
                    }
                    _ => {
                        let mut text = format!(
                            "{} (parameter {}), order {}\n",
                            group.spec.family.kebab_name(),
                            group.spec.parameter,
                            group.order()
                        );
                        for (i, c) in group.conjugacy_classes().iter().enumerate() {
                            text.push_str(&format!(
                                "class c{i}: size {}, element order {}, trace {}\n",
                                c.size,
                                c.element_order,
                                group.matrix(c.representative).trace()
                            ));
                        }
                        emit(&args.out, text)?;
                    }
                }
                Ok(true)
            }
            GroupCommand::Table(args) => {
                let group = args.group.build()?;
                match args.out.format {
                    Format::Json => emit_json(&args.out, &group.to_json())?,
                    _ => {
                        let table = group.character_table();
                        let mut text = String::new();
                        for (i, row) in table.rows.iter().enumerate() {
                            let values: Vec<String> =
                                row.values.iter().map(|v| v.to_string()).collect();
                            text.push_str(&format!(
                                "γ{i} (degree {}): [{}]\n",
                                table.degrees[i],
                                values.join(", ")
                            ));
                        }
                        emit(&args.out, text)?;
                    }
                }
                Ok(true)
            }
        },
        Command::Mckay { command } => match command {
            McKayCommand::Matrix(args) => {
                let group = args.group.build()?;
                let table = group.character_table();
                let cartan = mckay::cartan_matrix(&group, &table).map_err(|e| e.to_string())?;
                match args.out.format {
                    Format::Json => emit_json(
                        &args.out,
                        &json!({
                            "schema": "1",
                            "group": group.spec.family.kebab_name(),
                            "cartan": cartan.entries,
                            "degrees": table.degrees,
                        }),
                    )?,
                    _ => {
                        let mut text = String::new();
                        for row in &cartan.entries {
                            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                            text.push_str(&format!("[{}]\n", cells.join(", ")));
                        }
                        emit(&args.out, text)?;
                    }
                }
                Ok(true)
            }
            McKayCommand::Graph(args) => {
                let group = args.group.build()?;
                let table = group.character_table();
                let cartan = mckay::cartan_matrix(&group, &table).map_err(|e| e.to_string())?;
                emit(&args.out, mckay::export_graph(&cartan, &table.degrees))?;
                Ok(true)
            }
            McKayCommand::Check(args) => {
                let group = args.group.build()?;
                let report = mckay::report(&group);
                let pass = report["symmetric"] == json!(true)
                    && report["positive_semidefinite"] == json!(true)
                    && report["affine_type"].get("label").is_some()
                    && report["hom_dim_check"]["equal"] == json!(true);
                match args.out.format {
                    Format::Json => emit_json(&args.out, &report)?,
                    _ => emit(
                        &args.out,
                        format!(
                            "affine type {}; symmetric {}; PSD {}; hom-dim {}\n",
                            report["affine_type"]["label"],
                            report["symmetric"],
                            report["positive_semidefinite"],
                            report["hom_dim_check"]["equal"]
                        ),
                    )?,
                }
                Ok(pass)
            }
        },
        Command::Wreath { command } => match command {
            WreathCommand::Types(args) => {
                let group = args.group.build()?;
                let types = wreath::enumerate_types(group.num_classes(), args.n);
                let order = wreath::wreath_order(&group, args.n);
                let entries: Vec<serde_json::Value> = types
                    .iter()
                    .map(|rho| {
                        let z = wreath::centralizer_order(rho, &group);
                        json!({
                            "type": rho.to_string(),
                            "centralizer_order": z.to_string(),
                            "class_size": (&order / z).to_string(),
                        })
                    })
                    .collect();
                let v = json!({
                    "schema": "1",
                    "group": group.spec.family.kebab_name(),
                    "n": args.n,
                    "wreath_order": order.to_string(),
                    "num_types": types.len(),
                    "types": entries,
                });
                match args.out.format {
                    Format::Json => emit_json(&args.out, &v)?,
                    _ => {
                        let mut text = format!("{} types of weight {}\n", types.len(), args.n);
                        for e in v["types"].as_array().unwrap() {
                            text.push_str(&format!(
                                "{}  Z = {}, class size {}\n",
                                e["type"].as_str().unwrap(),
                                e["centralizer_order"].as_str().unwrap(),
                                e["class_size"].as_str().unwrap()
                            ));
                        }
                        emit(&args.out, text)?;
                    }
                }
                Ok(true)
            }
            WreathCommand::Irreps(args) => {
                let group = args.group.build()?;
                let table = group.character_table();
                let irreps = wreath::irreducibles(&group, &table, args.n);
                let entries: Vec<serde_json::Value> = irreps
                    .iter()
                    .map(|(rho, chi)| {
                        json!({
                            "index": rho.to_string(),
                            "degree": wreath::irreducible_degree(rho, &table).to_string(),
                            "values": chi.to_json(),
                        })
                    })
                    .collect();
                emit_json(
                    &args.out,
                    &json!({
                        "schema": "1",
                        "group": group.spec.family.kebab_name(),
                        "n": args.n,
                        "irreducibles": entries,
                    }),
                )?;
                Ok(true)
            }
            WreathCommand::Gram(args) => {
                let group = args.group.build()?;
                let table = group.character_table();
                let (labels, gram) = wreath::weighted_gram(&group, &table, args.n);
                let k = labels.len();
                let symmetric = (0..k).all(|i| (0..k).all(|j| gram[i][j] == gram[j][i]));
                let psd = wreath_mckay::linalg::is_positive_semidefinite(&gram);
                let v = json!({
                    "schema": "1",
                    "group": group.spec.family.kebab_name(),
                    "n": args.n,
                    "labels": labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                    "gram": gram.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "symmetric": symmetric,
                    "positive_semidefinite": psd,
                });
                match args.out.format {
                    Format::Json => emit_json(&args.out, &v)?,
                    _ => emit(
                        &args.out,
                        format!("{k}×{k} Gram matrix: symmetric {symmetric}, PSD {psd}\n"),
                    )?,
                }
                Ok(symmetric && psd)
            }
        },
        Command::Verify { command } => match command {
            VerifyCommand::ThEqual(args) => {
                let group = args.group.build()?;
                if group.order() > 1 && args.k != 2 {
                    return Err("catalog groups only embed in SL₂ (k = 2)".into());
                }
                let report = exterior::verify_identity(&group, args.k, args.n);
                match args.out.format {
                    Format::Json => emit_json(&args.out, &report.to_json())?,
                    _ => {
                        let mut text = String::new();
                        for t in &report.types {
                            text.push_str(&format!(
                                "{}: λ = {}, η = {} [{}]\n",
                                t.conjugacy_type,
                                t.lambda_value,
                                t.eta_value,
                                if t.equal { "equal" } else { "UNEQUAL" }
                            ));
                        }
                        text.push_str(&format!(
                            "verdict: {}\n",
                            if report.verdict { "equal" } else { "unequal" }
                        ));
                        emit(&args.out, text)?;
                    }
                }
                Ok(report.verdict)
            }
            VerifyCommand::WeylLemma(args) => {
                let group = args.group.build()?;
                let report = invariants::verify_lemma(&group, args.n, args.dmax)
                    .map_err(|e| e.to_string())?;
                match args.out.format {
                    Format::Json => emit_json(&args.out, &report.to_json())?,
                    _ => {
                        let mut text = String::new();
                        for d in &report.degrees {
                            text.push_str(&format!(
                                "degree {}: invariants {}, generated {} [{}]\n",
                                d.degree,
                                d.dim_invariants,
                                d.dim_generated,
                                if d.equal { "equal" } else { "UNEQUAL" }
                            ));
                        }
                        text.push_str(&format!(
                            "verdict: {}\n",
                            if report.verdict { "pass" } else { "fail" }
                        ));
                        emit(&args.out, text)?;
                    }
                }
                Ok(report.verdict)
            }
        },
        Command::Fock { command } => match command {
            FockCommand::Dims(args) => {
                let group = args.group.build()?;
                let table = group.character_table();
                let colors = table.rows.len();
                let dims = fock::graded_dims(colors, args.degree);
                let counts: Vec<BigInt> = (0..=args.degree)
                    .map(|d| BigInt::from(wreath::enumerate_types(colors, d).len()))
                    .collect();
                let equal = dims == counts;
                emit_json(
                    &args.out,
                    &json!({
                        "schema": "1",
                        "group": group.spec.family.kebab_name(),
                        "num_colors": colors,
                        "graded_dims": dims.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "type_counts": counts.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "equal": equal,
                    }),
                )?;
                Ok(equal)
            }
            FockCommand::HeisenbergCheck(args) => {
                let group = args.group.build()?;
                let table = group.character_table();
                let colors = table.rows.len();
                let form = match args.form {
                    FormKind::Standard => fock::FormChoice::Standard,
                    FormKind::Weighted => {
                        let cartan =
                            mckay::cartan_matrix(&group, &table).map_err(|e| e.to_string())?;
                        fock::FormChoice::weighted(cartan)
                    }
                };
                let holds = fock::heisenberg_commutation_holds(colors, &form, args.truncation);
                emit_json(
                    &args.out,
                    &json!({
                        "schema": "1",
                        "group": group.spec.family.kebab_name(),
                        "form": match args.form { FormKind::Standard => "standard", FormKind::Weighted => "weighted" },
                        "truncation": args.truncation,
                        "commutation_holds": holds,
                    }),
                )?;
                Ok(holds)
            }
            FockCommand::ThetaCheck(args) => {
                let group = args.group.build()?;
                let table = group.character_table();
                let colors = table.rows.len();
                let bijection = match &args.perm {
                    Some(s) => {
                        let image: Result<Vec<usize>, _> =
                            s.split(',').map(|x| x.trim().parse::<usize>()).collect();
                        let image = image.map_err(|e| format!("bad --perm: {e}"))?;
                        if image.len() != colors {
                            return Err(format!(
                                "--perm must list {colors} images, got {}",
                                image.len()
                            ));
                        }
                        fock::ColorBijection::new(image)
                    }
                    None => fock::ColorBijection::identity(colors),
                };
                let cartan = mckay::cartan_matrix(&group, &table).map_err(|e| e.to_string())?;
                let (form, predicted) = match args.form {
                    FormKind::Standard => (fock::FormChoice::Standard, true),
                    FormKind::Weighted => {
                        let preserved = bijection.preserves_matrix(&cartan);
                        (fock::FormChoice::weighted(cartan.clone()), preserved)
                    }
                };
                let observed = fock::theta_intertwines_heisenberg(
                    &bijection,
                    colors,
                    &form,
                    args.truncation,
                );
                let consistent = observed == predicted;
                emit_json(
                    &args.out,
                    &json!({
                        "schema": "1",
                        "group": group.spec.family.kebab_name(),
                        "form": match args.form { FormKind::Standard => "standard", FormKind::Weighted => "weighted" },
                        "truncation": args.truncation,
                        "preserves_cartan": match args.form { FormKind::Standard => json!(null), FormKind::Weighted => json!(predicted) },
                        "intertwines_heisenberg": observed,
                        "matches_prediction": consistent,
                    }),
                )?;
                Ok(consistent)
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
