use std::collections::BTreeSet;
use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use torus_atlas::covers::{
    classify_covers_up_to_iso, enumerate_covers, minimal_cover_with_orbits, DEFAULT_SEARCH_BOUND,
};
use torus_atlas::geom::{q_to_string, Vec2};
use torus_atlas::lattice::{hnfs_of_index, Mat2};
use torus_atlas::oracle::{automorphism_group, orbit_count_oracle, quotient_flag_graph};
use torus_atlas::tiling::{atlas, TilingType};
use torus_atlas::torus::ToroidalMap;

mod render;

const SURVEY_MAX_INDEX: u64 = 100;

#[derive(Parser)]
#[command(
    name = "torus-atlas",
    version,
    about = "Flag orbits and covers of toroidal Archimedean maps"
)]
struct Cli {
    /// Render aligned text instead of line-delimited JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts and flag orbits of E/K.
    Classify {
        #[arg(long = "type")]
        ttype: String,
        /// Row-major a,b,c,d for [[a,b],[c,d]]; columns generate K.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// All n-sheeted covers of E/K.
    Covers {
        #[arg(long = "type")]
        ttype: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        n: u64,
        /// Label covers by isomorphism class.
        #[arg(long)]
        classify_iso: bool,
    },
    /// Fewest-sheeted cover with exactly k flag orbits.
    MinimalCover {
        #[arg(long = "type")]
        ttype: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        k: usize,
        /// Largest sheet count to search.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Orbit counts over every lattice up to an index.
    Survey {
        #[arg(long = "type")]
        ttype: String,
        #[arg(long)]
        max_index: u64,
    },
    /// SVG of a block of cells, flags coloured by orbit.
    Render {
        #[arg(long = "type")]
        ttype: String,
        #[arg(long, default_value_t = 3)]
        cells: u32,
        /// Output file; stdout if omitted.
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
    },
    /// Cell geometry and symmetries as JSON.
    DumpTiling {
        #[arg(value_name = "TYPE")]
        ttype: String,
    },
    /// Cross-check orbit counts against brute-force automorphism groups.
    #[command(hide = true)]
    OracleCheck {
        #[arg(long, default_value_t = 8)]
        max_index: u64,
    },
}

/// An input error: reported on stderr with exit status 2.
struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn parse_type(s: &str) -> Result<TilingType, InputError> {
    Ok(s.parse::<TilingType>()?)
}

fn parse_matrix(s: &str) -> Result<Mat2, InputError> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| InputError(format!("--matrix expects four integers a,b,c,d, got {s:?}")))?;
    match v[..] {
        [a, b, c, d] => Ok(Mat2::new(a, b, c, d)),
        _ => Err(InputError(format!(
            "--matrix expects four integers a,b,c,d, got {s:?}"
        ))),
    }
}

fn parse_map(ttype: &str, matrix: &str) -> Result<(ToroidalMap, Mat2), InputError> {
    let t = parse_type(ttype)?;
    let m = parse_matrix(matrix)?;
    Ok((ToroidalMap::from_matrix(t, m)?, m))
}

fn vec_json(v: &Vec2) -> Value {
    json!([q_to_string(&v.x), q_to_string(&v.y)])
}

fn print_table(headers: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        println!("{}", padded.join("  ").trim_end());
    };
    line(headers.iter().map(|h| h.to_string()).collect());
    for r in rows {
        line(r.clone());
    }
}

fn classify_json(x: &ToroidalMap, input: Mat2) -> Value {
    let c = x.counts();
    json!({
        "type": x.ttype(),
        "input": input,
        "hnf": x.hnf(),
        "sheets": x.sheets(),
        "V": c.vertices,
        "E": c.edges,
        "F": c.faces,
        "flags": c.flags,
        "orbit_count": x.orbit_count(),
        "point_group_order": x.point_group_order(),
    })
}

fn emit(table: bool, v: &Value) {
    if table {
        let obj = v.as_object().expect("object output");
        let rows: Vec<Vec<String>> = obj
            .iter()
            .map(|(k, v)| vec![k.clone(), v.to_string()])
            .collect();
        print_table(&["field", "value"], &rows);
    } else {
        println!("{v}");
    }
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Classify { ttype, matrix } => {
            let (x, m) = parse_map(&ttype, &matrix)?;
            emit(cli.table, &classify_json(&x, m));
        }
        Command::Covers {
            ttype,
            matrix,
            n,
            classify_iso,
        } => {
            let (x, _) = parse_map(&ttype, &matrix)?;
            let covers = enumerate_covers(&x, n)?;
            let labels = if classify_iso {
                Some(classify_covers_up_to_iso(&covers)?.labels)
            } else {
                None
            };
            let rows: Vec<Value> = covers
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut row = json!({
                        "S": c.s.matrix(),
                        "sheets": c.sheets(),
                        "orbits": c.orbit_count(),
                    });
                    if let Some(l) = &labels {
                        row["iso_class"] = json!(l[i]);
                    }
                    row
                })
                .collect();
            if cli.table {
                let mut headers = vec!["S", "sheets", "orbits"];
                if labels.is_some() {
                    headers.push("iso_class");
                }
                let table: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| headers.iter().map(|h| r[*h].to_string()).collect())
                    .collect();
                print_table(&headers, &table);
            } else {
                println!("{}", Value::Array(rows));
            }
        }
        Command::MinimalCover {
            ttype,
            matrix,
            k,
            bound,
        } => {
            let (x, _) = parse_map(&ttype, &matrix)?;
            let plane = atlas(x.ttype()).plane_orbits;
            let effective = bound.unwrap_or(if k == plane {
                x.sheets() * x.sheets()
            } else {
                DEFAULT_SEARCH_BOUND
            });
            let found = minimal_cover_with_orbits(&x, k, Some(effective))?;
            let mut out = json!({
                "type": x.ttype(),
                "hnf": x.hnf(),
                "k": k,
                "bound": effective,
                "found": found.is_some(),
            });
            match found {
                Some(c) => {
                    out["S"] = json!(c.s.matrix());
                    out["sheets"] = json!(c.sheets());
                    out["cover_hnf"] = json!(c.cover().hnf());
                }
                None => out["message"] = json!(format!("none <= bound {effective}")),
            }
            emit(cli.table, &out);
        }
        Command::Survey { ttype, max_index } => {
            let t = parse_type(&ttype)?;
            if max_index == 0 || max_index > SURVEY_MAX_INDEX {
                return Err(InputError(format!(
                    "--max-index must be in 1..={SURVEY_MAX_INDEX}"
                )));
            }
            let lattices: Vec<_> = (1..=max_index).flat_map(hnfs_of_index).collect();
            // Ordered collect keeps rows in (index, d, b, a) order.
            let rows: Vec<Value> = lattices
                .par_iter()
                .map(|h| {
                    let x = ToroidalMap::from_hnf(t, *h);
                    json!({
                        "type": t,
                        "hnf": h,
                        "sheets": h.index(),
                        "orbit_count": x.orbit_count(),
                        "point_group_order": x.point_group_order(),
                    })
                })
                .collect();
            let achieved: BTreeSet<u64> = rows
                .iter()
                .map(|r| r["orbit_count"].as_u64().unwrap())
                .collect();
            let summary = json!({
                "summary": {
                    "type": t,
                    "max_index": max_index,
                    "lattices": rows.len(),
                    "achieved": achieved,
                    "max": achieved.iter().max(),
                }
            });
            if cli.table {
                let headers = ["sheets", "hnf", "orbit_count", "point_group_order"];
                let table: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| headers.iter().map(|h| r[*h].to_string()).collect())
                    .collect();
                print_table(&headers, &table);
                println!(
                    "achieved {:?}, max {}",
                    achieved,
                    achieved.iter().max().unwrap()
                );
            } else {
                for r in &rows {
                    println!("{r}");
                }
                println!("{summary}");
            }
        }
        Command::Render {
            ttype,
            cells,
            output,
        } => {
            let t = parse_type(&ttype)?;
            if cells == 0 || cells > 6 {
                return Err(InputError("--cells must be in 1..=6".into()));
            }
            let svg = render::svg(t, cells);
            match output {
                Some(p) => std::fs::write(&p, svg)
                    .map_err(|e| InputError(format!("{}: {e}", p.display())))?,
                None => print!("{svg}"),
            }
        }
        Command::DumpTiling { ttype } => {
            let t = parse_type(&ttype)?;
            println!("{}", dump_tiling(t));
        }
        Command::OracleCheck { max_index } => {
            let maps: Vec<ToroidalMap> = TilingType::ALL
                .iter()
                .flat_map(|&t| {
                    (1..=max_index).flat_map(move |n| {
                        hnfs_of_index(n)
                            .into_iter()
                            .map(move |h| ToroidalMap::from_hnf(t, h))
                    })
                })
                .collect();
            let mismatches: Vec<Value> = maps
                .par_iter()
                .filter_map(|x| {
                    let cm = quotient_flag_graph(x);
                    let aut = automorphism_group(&cm).len() as u64;
                    let model = x.surviving_symmetries().len() as u64 * x.sheets();
                    let (geo, brute) = (x.orbit_count(), orbit_count_oracle(&cm));
                    (geo != brute || aut != model).then(|| {
                        json!({"map": x, "orbit_count": geo, "oracle": brute, "aut": aut, "nor_mod_k": model})
                    })
                })
                .collect();
            println!("{}", json!({"maps": maps.len(), "mismatches": mismatches}));
            if !mismatches.is_empty() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dump_tiling(t: TilingType) -> Value {
    let a = atlas(t);
    let tl = &a.tiling;
    json!({
        "type": t,
        "vertex_type": t.bracket_name(),
        "faces": tl.faces().iter().map(|f| json!({
            "vertices": f.vertices.iter().map(vec_json).collect::<Vec<_>>(),
            "barycenter": vec_json(&f.barycenter),
        })).collect::<Vec<_>>(),
        "vertices": tl.vertices().iter().map(vec_json).collect::<Vec<_>>(),
        "edges": tl.edges().iter().map(|e| json!({
            "ends": e.ends.iter().map(vec_json).collect::<Vec<_>>(),
            "midpoint": vec_json(&e.midpoint),
        })).collect::<Vec<_>>(),
        "flags": tl.flags().len(),
        "symmetries": a.symmetries.iter().map(|g| json!({"P": g.p, "t": vec_json(&g.t)})).collect::<Vec<_>>(),
        "plane_orbits": a.plane_orbits,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("TORUS_ATLAS_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // Only fails if a global pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
