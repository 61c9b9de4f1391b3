//! Command-line front end. One verb per construction; JSON on stdout by
//! default, TSV with `--format tsv`, diagnostics on stderr. Exit codes:
//! 0 success, 1 mathematical inapplicability (not interior, not simplicial,
//! not an interval building set) or verification failure, 2 bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nestocone::building::{graphical_building, BuildingSet};
use nestocone::error::Error;
use nestocone::io;
use nestocone::nested::{enumerate_maximal_nested_sets, flips};
use nestocone::oracle::{brute_cone, irredundant};
use nestocone::realize::{kinematic_polytope, realize_polytope, KinematicInput, Polytope};
use nestocone::typecone::{
    classic_height, facet_cone, facet_count, height_membership, interval_profile, is_simplicial,
    redundant_cone, ConeDescription, HeightVariant, IntervalKind, Membership,
};
use nestocone::verify;

#[derive(Parser)]
#[command(
    name = "nestocone",
    version,
    about = "Nested fans and deformation cones of graph associahedra and nestohedra, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct InputArgs {
    /// Graph JSON file: {"n": 4, "edges": [[1,2],[2,3]]}
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Building-set JSON file: {"n": 9, "blocks": [...]} or generators
    #[arg(long, value_name = "FILE")]
    building: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// List all tubes of a graph (as a building-set file).
    Tubes(InputArgs),
    /// Validate or close a building set and print its canonical form.
    Building(InputArgs),
    /// Enumerate the maximal nested sets.
    Nested {
        #[command(flatten)]
        input: InputArgs,
        /// Print only the number of maximal nested sets.
        #[arg(long)]
        count: bool,
    },
    /// All flips of all maximal nested sets, with their exchange frames.
    Flips {
        #[command(flatten)]
        input: InputArgs,
        /// Restrict to one maximal nested set, given as {"blocks": [...]}.
        #[arg(long, value_name = "FILE")]
        nested: Option<PathBuf>,
    },
    /// Type-cone inequality descriptions.
    Typecone {
        #[command(flatten)]
        input: InputArgs,
        /// All wall-crossing inequalities from flips (deduplicated).
        #[arg(long)]
        redundant: bool,
        /// The irredundant facet description (default).
        #[arg(long)]
        irredundant: bool,
        /// Facets recomputed by the brute-force oracle (nullspaces + LP).
        #[arg(long)]
        oracle: bool,
    },
    /// Facet count, ray count, dimension, and simpliciality.
    Count(InputArgs),
    /// Whether the type cone is simplicial.
    Simplicial(InputArgs),
    /// Classical height vectors and membership checks.
    Heights {
        #[command(flatten)]
        input: InputArgs,
        /// The height h_B = -3^|B|.
        #[arg(long)]
        devadoss: bool,
        /// The height h_B = -#{blocks inside B}.
        #[arg(long)]
        postnikov: bool,
        /// Classify the heights in FILE against the type cone.
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
    },
    /// Vertex realization from an interior height vector.
    Realize {
        #[command(flatten)]
        input: InputArgs,
        /// Height file; mutually exclusive with the named variants.
        #[arg(long, value_name = "FILE")]
        heights: Option<PathBuf>,
        #[arg(long)]
        devadoss: bool,
        #[arg(long)]
        postnikov: bool,
    },
    /// Kinematic realization of a simplicial type cone.
    Kinematic {
        #[command(flatten)]
        input: InputArgs,
        /// Positive rationals per facet (array or index map); default all 1.
        #[arg(long, value_name = "FILE")]
        p: Option<PathBuf>,
    },
    /// Interval building-set profile and its facet description.
    Interval(InputArgs),
    /// Run the verification suites.
    Verify {
        /// Size cap for the exhaustive instance families.
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        /// Seed for the random building-set closures.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::BadInput(format!("cannot read {}: {e}", path.display())))
}

impl InputArgs {
    fn load(&self) -> Result<BuildingSet, Error> {
        match (&self.graph, &self.building) {
            (Some(path), None) => Ok(graphical_building(&io::graph_from_json(&read_file(path)?)?)),
            (None, Some(path)) => io::building_from_json(&read_file(path)?),
            _ => Err(Error::BadInput(
                "give exactly one of --graph FILE or --building FILE".into(),
            )),
        }
    }

    fn load_graph(&self) -> Result<nestocone::graph::Graph, Error> {
        match (&self.graph, &self.building) {
            (Some(path), None) => io::graph_from_json(&read_file(path)?),
            _ => Err(Error::BadInput("this verb needs --graph FILE".into())),
        }
    }
}

fn blocks_tsv(blocks: &[nestocone::vset::Block]) -> String {
    let mut out = String::new();
    for b in blocks {
        out.push_str(&b.to_string());
        out.push('\n');
    }
    out
}

fn emit(format: Format, value: &Value, tsv: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("valid JSON")),
        Format::Tsv => print!("{}", tsv()),
    }
}

fn height_variant(devadoss: bool, postnikov: bool) -> Result<HeightVariant, Error> {
    match (devadoss, postnikov) {
        (true, false) => Ok(HeightVariant::Devadoss),
        (false, true) => Ok(HeightVariant::Postnikov),
        _ => Err(Error::BadInput(
            "choose exactly one of --devadoss or --postnikov".into(),
        )),
    }
}

fn cone_output(format: Format, cone: &ConeDescription) {
    emit(format, &io::cone_to_json(cone), || io::cone_to_tsv(cone));
}

fn polytope_output(format: Format, poly: &Polytope) {
    emit(format, &io::polytope_to_json(poly), || {
        let mut out = String::new();
        for v in &poly.vertices {
            let coords = v
                .coords
                .iter()
                .map(io::rational_string)
                .collect::<Vec<_>>()
                .join("\t");
            out.push_str(&coords);
            out.push('\n');
        }
        out
    });
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Tubes(input) => {
            let g = input.load_graph()?;
            let b = graphical_building(&g);
            emit(input.format, &io::building_to_json(&b), || blocks_tsv(b.blocks()));
        }
        Command::Building(input) => {
            let b = input.load()?;
            emit(input.format, &io::building_to_json(&b), || blocks_tsv(b.blocks()));
        }
        Command::Nested { input, count } => {
            let b = input.load()?;
            let mns = enumerate_maximal_nested_sets(&b);
            let value = if count {
                json!({ "count": mns.len() })
            } else {
                json!({
                    "count": mns.len(),
                    "nested_sets": mns
                        .iter()
                        .map(|s| json!({ "blocks": io::nested_set_value(s.blocks()) }))
                        .collect::<Vec<_>>(),
                })
            };
            emit(input.format, &value, || {
                let mut out = format!("count\t{}\n", mns.len());
                if !count {
                    for s in &mns {
                        let row = s
                            .blocks()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join("\t");
                        out.push_str(&row);
                        out.push('\n');
                    }
                }
                out
            });
        }
        Command::Flips { input, nested } => {
            let b = input.load()?;
            let mns = enumerate_maximal_nested_sets(&b);
            let only: Option<nestocone::nested::NestedSet> = match nested {
                Some(path) => {
                    let blocks = io::nested_blocks_from_json(&read_file(&path)?)?;
                    Some(nestocone::nested::NestedSet::new(&b, &blocks)?)
                }
                None => None,
            };
            let mut rows = Vec::new();
            for (i, s) in mns.iter().enumerate() {
                if let Some(target) = &only {
                    if s != target {
                        continue;
                    }
                }
                for (frame, adjacent) in flips(&b, s)? {
                    let j = mns
                        .iter()
                        .position(|t| *t == adjacent)
                        .expect("adjacent sets are maximal");
                    rows.push(json!({
                        "from": i,
                        "to": j,
                        "out": frame.block_out.to_string(),
                        "in": frame.block_in.to_string(),
                        "parent": frame.parent.to_string(),
                        "pivots": [frame.pivots.0, frame.pivots.1],
                    }));
                }
            }
            let value = json!({
                "nested_sets": mns
                    .iter()
                    .map(|s| io::nested_set_value(s.blocks()))
                    .collect::<Vec<_>>(),
                "flips": rows,
            });
            emit(input.format, &value, || {
                let mut out = String::from("from\tto\tout\tin\tparent\tpivots\n");
                for r in value["flips"].as_array().unwrap() {
                    out.push_str(&format!(
                        "{}\t{}\t{}\t{}\t{}\t({},{})\n",
                        r["from"], r["to"],
                        r["out"].as_str().unwrap(),
                        r["in"].as_str().unwrap(),
                        r["parent"].as_str().unwrap(),
                        r["pivots"][0], r["pivots"][1],
                    ));
                }
                out
            });
        }
        Command::Typecone {
            input,
            redundant,
            irredundant: irre,
            oracle,
        } => {
            let b = input.load()?;
            let chosen = (redundant as u8) + (irre as u8) + (oracle as u8);
            if chosen > 1 {
                return Err(Error::BadInput(
                    "choose at most one of --redundant, --irredundant, --oracle".into(),
                ));
            }
            let cone = if redundant {
                redundant_cone(&b)
            } else if oracle {
                irredundant(&brute_cone(&b))
            } else {
                facet_cone(&b)
            };
            cone_output(input.format, &cone);
        }
        Command::Count(input) => {
            let b = input.load()?;
            let value = json!({
                "facets": facet_count(&b),
                "rays": b.len() - b.components().len(),
                "dim": b.ground().len() as usize - b.components().len(),
                "simplicial": is_simplicial(&b),
            });
            emit(input.format, &value, || {
                format!(
                    "facets\t{}\nrays\t{}\ndim\t{}\nsimplicial\t{}\n",
                    value["facets"], value["rays"], value["dim"], value["simplicial"]
                )
            });
        }
        Command::Simplicial(input) => {
            let b = input.load()?;
            let value = json!({ "simplicial": is_simplicial(&b) });
            emit(input.format, &value, || {
                format!("simplicial\t{}\n", value["simplicial"])
            });
        }
        Command::Heights {
            input,
            devadoss,
            postnikov,
            check,
        } => {
            let b = input.load()?;
            if let Some(path) = check {
                if devadoss || postnikov {
                    return Err(Error::BadInput(
                        "--check is mutually exclusive with the named variants".into(),
                    ));
                }
                let h = io::heights_from_json(&b, &read_file(&path)?)?;
                let m = height_membership(&b, &h)?;
                let name = match m {
                    Membership::Interior => "interior",
                    Membership::Boundary => "boundary",
                    Membership::Outside => "outside",
                };
                let value = json!({ "membership": name });
                emit(input.format, &value, || format!("membership\t{name}\n"));
            } else {
                let variant = height_variant(devadoss, postnikov)?;
                let h = classic_height(&b, variant);
                emit(input.format, &io::heights_to_json(&h), || {
                    let mut out = String::new();
                    for (blk, v) in h.values() {
                        out.push_str(&format!("{blk}\t{}\n", io::rational_string(v)));
                    }
                    out
                });
            }
        }
        Command::Realize {
            input,
            heights,
            devadoss,
            postnikov,
        } => {
            let b = input.load()?;
            let h = match heights {
                Some(path) => {
                    if devadoss || postnikov {
                        return Err(Error::BadInput(
                            "--heights is mutually exclusive with the named variants".into(),
                        ));
                    }
                    io::heights_from_json(&b, &read_file(&path)?)?
                }
                None => classic_height(&b, height_variant(devadoss, postnikov)?),
            };
            let poly = realize_polytope(&b, &h)?;
            polytope_output(input.format, &poly);
        }
        Command::Kinematic { input, p } => {
            let b = input.load()?;
            let m = facet_cone(&b).inequalities().len();
            let kin = match p {
                Some(path) => {
                    KinematicInput::new(io::kinematic_values_from_json(&read_file(&path)?, m)?)?
                }
                None => KinematicInput::ones(m),
            };
            let poly = kinematic_polytope(&b, &kin)?;
            polytope_output(input.format, &poly);
        }
        Command::Interval(input) => {
            let b = input.load()?;
            let profile = interval_profile(&b)?;
            let entries: Vec<Value> = profile
                .entries
                .iter()
                .map(|e| {
                    let (kind, cuts) = match &e.kind {
                        IntervalKind::Elementary { cuts } => ("elementary", cuts),
                        IntervalKind::Composite { cuts } => ("composite", cuts),
                    };
                    json!({
                        "block": e.block.to_vec(),
                        "left": e.left,
                        "right": e.right,
                        "kind": kind,
                        "cuts": cuts,
                    })
                })
                .collect();
            let value = json!({
                "entries": entries,
                "cone": io::cone_to_json(&profile.cone),
            });
            emit(input.format, &value, || {
                let mut out = String::from("block\tleft\tright\tkind\tcuts\n");
                for e in &profile.entries {
                    let (kind, cuts) = match &e.kind {
                        IntervalKind::Elementary { cuts } => ("elementary", cuts),
                        IntervalKind::Composite { cuts } => ("composite", cuts),
                    };
                    out.push_str(&format!(
                        "{}\t{}\t{}\t{kind}\t{:?}\n",
                        e.block, e.left, e.right, cuts
                    ));
                }
                out.push('\n');
                out.push_str(&io::cone_to_tsv(&profile.cone));
                out
            });
        }
        Command::Verify { max_n, seed, format } => {
            let reports = verify::run_all(max_n, seed);
            let instances: usize = reports.iter().map(|r| r.instances).sum();
            let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
            let value = json!({
                "instances": instances,
                "failures": failures,
                "suites": reports
                    .iter()
                    .map(|r| json!({
                        "name": r.name,
                        "instances": r.instances,
                        "failures": r.failures,
                    }))
                    .collect::<Vec<_>>(),
            });
            emit(format, &value, || {
                let mut out = String::from("suite\tinstances\tfailures\n");
                for r in &reports {
                    out.push_str(&format!("{}\t{}\t{}\n", r.name, r.instances, r.failures.len()));
                }
                out
            });
            for r in &reports {
                for f in &r.failures {
                    eprintln!("FAIL [{}] {f}", r.name);
                }
            }
            if failures > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
