//! Command-line surface. Exit codes are a stable contract:
//! 0 yes/pass, 1 no/fail-with-certificate, 2 input error,
//! 3 resource-limited/unknown.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wordrep_cli::campaigns::{self, TheoremId};
use wordrep_cli::input::{load_file, Input, Kind};
use wordrep_cli::report::config_json;
use wordrep_core::config::Config;
use wordrep_core::error::Error;
use wordrep_core::graph::{
    articulation_points, connected_components, contains_k4, chromatic_number,
    find_induced_wheels, parse_graph, write_graph, Colouring, Graph,
};
use wordrep_core::orientation::{decide_word_representable, Answer, Certificate, Decision};
use wordrep_core::planar::{
    classify_vertices, decide_wr_near_triangulation, is_internally_even, odd_inner_vertices,
    three_colour_ent_with, write_embedding, Embedding,
};
use wordrep_core::polyomino::{
    enumerate_polyominoes, has_internal_hole, internal_hole_witness, is_column_convex,
    is_convex, is_row_convex, random_tiling, random_triangulation, Polyomino,
};
use wordrep_core::words::{find_representing_word, graph_from_word, represents, Word};

#[derive(Parser)]
#[command(
    name = "wordrep",
    about = "Word-representability and 3-colourability of near-triangulations and polyomino triangulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Human,
    Json,
}

#[derive(Args, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "human", global = false)]
    format: Format,
    /// Global seed for sampled campaigns and generators.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge cap for the orientation search.
    #[arg(long = "cap-edges", default_value_t = 24)]
    cap_edges: usize,
    /// Vertex cap for the colouring oracles.
    #[arg(long = "cap-vertices", default_value_t = 24)]
    cap_vertices: usize,
    /// Fall back to the backtracking oracle when the constructive colourer
    /// reports an invariant violation.
    #[arg(long = "oracle-fallback", default_value_t = false)]
    oracle_fallback: bool,
}

impl Common {
    fn config(&self) -> Config {
        Config {
            edge_cap: self.cap_edges,
            oracle_vertex_cap: self.cap_vertices,
            seed: self.seed,
            oracle_fallback: self.oracle_fallback,
            ..Config::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide word-representability of a graph, embedding or triangulation.
    Decide {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Constructively 3-colour an internally even near-triangulation.
    Colour {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Report the structural predicates of an input with certificates.
    Recognize {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a theorem-audit campaign (T2 T3 T4 T5 T6 T7 C1 L1).
    Verify {
        id: String,
        /// Census size override for campaigns that enumerate polyominoes.
        #[arg(long = "max-cells")]
        max_cells: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a representing word of a graph by bounded uniform search.
    Witness {
        file: String,
        /// Largest per-letter multiplicity tried (default: vertex count).
        #[arg(long = "k-max")]
        k_max: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Emit instances: census polyominoes, random triangulations, wheels,
    /// or the alternation graph of a word.
    Generate {
        #[command(subcommand)]
        what: GenerateCmd,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// All fixed polyominoes with up to the given number of cells.
    Polyominoes {
        #[arg(long = "max-cells", default_value_t = 4)]
        max_cells: usize,
        #[command(flatten)]
        common: Common,
    },
    /// A seeded random triangulation of a random polyomino.
    Triangulation {
        #[arg(long, default_value_t = 4)]
        cells: usize,
        /// Merge cells into tiles of up to this size.
        #[arg(long = "max-tile", default_value_t = 1)]
        max_tile: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Hub-inner wheel embedding with the given rim size.
    Wheel {
        #[arg(long, default_value_t = 5)]
        rim: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The alternation graph of a word.
    GraphFromWord {
        word: String,
        #[command(flatten)]
        common: Common,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn dispatch(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Decide { file, common } => cmd_decide(&file, &common),
        Command::Colour { file, common } => cmd_colour(&file, &common),
        Command::Recognize { file, common } => cmd_recognize(&file, &common),
        Command::Verify { id, max_cells, common } => cmd_verify(&id, max_cells, &common),
        Command::Witness { file, k_max, common } => cmd_witness(&file, k_max, &common),
        Command::Generate { what } => cmd_generate(what),
    }
}

fn colouring_json(c: &Colouring) -> Value {
    Value::Object(
        c.assignment()
            .iter()
            .map(|(v, col)| (v.to_string(), json!(col)))
            .collect(),
    )
}

fn certificate_json(cert: &Certificate) -> Value {
    match cert {
        Certificate::SemiTransitive(o) => json!({
            "type": "semi-transitive-orientation",
            "arcs": o.arcs(),
        }),
        Certificate::OddWheel { hub, rim } => json!({
            "type": "odd-wheel", "hub": hub, "rim": rim,
        }),
        Certificate::WitnessWord(w) => json!({
            "type": "witness-word", "word": w.to_string(),
        }),
        Certificate::InternallyEven { colouring } => json!({
            "type": "internally-even",
            "colouring": colouring.as_ref().map(colouring_json),
        }),
        Certificate::OddInnerVertex { vertex, degree } => json!({
            "type": "odd-inner-vertex", "vertex": vertex, "degree": degree,
        }),
        Certificate::SearchExhausted => json!({ "type": "search-exhausted" }),
        Certificate::ResourceLimit => json!({ "type": "resource-limit" }),
    }
}

fn certificate_human(cert: &Certificate) -> String {
    match cert {
        Certificate::SemiTransitive(o) => {
            let arcs: Vec<String> =
                o.arcs().iter().map(|(a, b)| format!("{a}->{b}")).collect();
            format!("semi-transitive orientation: {}", arcs.join(" "))
        }
        Certificate::OddWheel { hub, rim } => {
            format!("induced odd wheel: hub {hub}, rim {rim:?}")
        }
        Certificate::WitnessWord(w) => format!("witness word: {w}"),
        Certificate::InternallyEven { colouring } => match colouring {
            Some(c) => format!(
                "internally even; constructive 3-colouring: {}",
                c.assignment()
                    .iter()
                    .map(|(v, col)| format!("{v}={col}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            None => "internally even".into(),
        },
        Certificate::OddInnerVertex { vertex, degree } => {
            format!("inner vertex {vertex} has odd degree {degree}")
        }
        Certificate::SearchExhausted => "orientation search exhausted".into(),
        Certificate::ResourceLimit => "resource cap reached".into(),
    }
}

fn emit_decision(d: &Decision, common: &Common) -> i32 {
    if common.format == Format::Json {
        let v = json!({
            "command": "decide",
            "answer": d.answer.as_str(),
            "strategy": d.strategy.as_str(),
            "open_problem": d.open_problem_flag,
            "certificate": certificate_json(&d.certificate),
            "config": config_json(&common.config()),
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("answer: {}", d.answer.as_str());
        println!("strategy: {}", d.strategy.as_str());
        if d.open_problem_flag {
            println!("open problem: input contains K4; classification of such graphs is open");
        }
        println!("certificate: {}", certificate_human(&d.certificate));
    }
    match d.answer {
        Answer::Yes => 0,
        Answer::No => 1,
        Answer::Unknown => 3,
    }
}

fn cmd_decide(file: &str, common: &Common) -> Result<i32, Error> {
    let cfg = common.config();
    let decision = match load_file(file)? {
        Input::Graph(g) => decide_word_representable(&g, &cfg)?,
        Input::Embedding(e) => {
            if e.is_near_triangulation() {
                decide_wr_near_triangulation(&e, &cfg)?
            } else {
                decide_word_representable(e.graph(), &cfg)?
            }
        }
        Input::Triangulation { compiled, .. } => {
            if compiled.embedding.is_near_triangulation() {
                decide_wr_near_triangulation(&compiled.embedding, &cfg)?
            } else {
                decide_word_representable(compiled.embedding.graph(), &cfg)?
            }
        }
        Input::Polyomino(_) => {
            return Err(Error::invalid(
                "polyomino grid without diagonals; triangulate it first (see `generate triangulation`)",
            ))
        }
    };
    Ok(emit_decision(&decision, common))
}

fn cmd_colour(file: &str, common: &Common) -> Result<i32, Error> {
    let cfg = common.config();
    let e = match load_file(file)? {
        Input::Embedding(e) => e,
        Input::Triangulation { compiled, .. } => compiled.embedding,
        _ => return Err(Error::invalid("colouring needs an embedding or triangulation input")),
    };
    if !e.is_near_triangulation() {
        return Err(Error::invalid("input is not a near-triangulation"));
    }
    if is_internally_even(&e)? {
        let c = three_colour_ent_with(&e, &cfg)?;
        if common.format == Format::Json {
            let v = json!({
                "command": "colour",
                "colourable": true,
                "colouring": colouring_json(&c),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        } else {
            println!("3-colourable: yes");
            for (v, col) in c.assignment() {
                println!("{v} {col}");
            }
        }
        Ok(0)
    } else {
        let v = odd_inner_vertices(&e)[0];
        let deg = e.graph().degree(v);
        if common.format == Format::Json {
            let out = json!({
                "command": "colour",
                "colourable": false,
                "odd_inner_vertex": v,
                "degree": deg,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        } else {
            println!("3-colourable: no");
            println!("certificate: inner vertex {v} has odd degree {deg}");
        }
        Ok(1)
    }
}

fn graph_predicates(g: &Graph, cfg: &Config) -> Value {
    let k4 = contains_k4(g);
    let wheels = find_induced_wheels(g, 4);
    let odd_wheels: Vec<&(usize, Vec<usize>)> =
        wheels.iter().filter(|(_, rim)| rim.len() % 2 == 1 && rim.len() >= 5).collect();
    let chromatic = if g.vertex_count() >= 1 && g.vertex_count() <= cfg.oracle_vertex_cap {
        chromatic_number(g, cfg).ok()
    } else {
        None
    };
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "contains_k4": k4.is_some(),
        "k4_witness": k4,
        "induced_wheels": wheels.iter().map(|(h, r)| json!({"hub": h, "rim": r})).collect::<Vec<_>>(),
        "induced_odd_wheels": odd_wheels.iter().map(|(h, r)| json!({"hub": h, "rim": r})).collect::<Vec<_>>(),
        "chromatic_number": chromatic,
        "articulation_points": articulation_points(g),
        "component_count": connected_components(g).len(),
    })
}

fn embedding_predicates(e: &Embedding) -> Value {
    let nt = e.is_near_triangulation();
    let (inner, boundary) = classify_vertices(e);
    json!({
        "near_triangulation": nt,
        "internally_even": if nt { Some(odd_inner_vertices(e).is_empty()) } else { None },
        "odd_inner_vertices": if nt { Some(odd_inner_vertices(e)) } else { None },
        "inner_vertices": inner,
        "boundary_vertices": boundary,
        "faces": e.faces().len(),
    })
}

fn polyomino_predicates(p: &Polyomino) -> Value {
    json!({
        "cells": p.cell_count(),
        "tiles": p.tiles().len(),
        "internal_hole": has_internal_hole(p),
        "hole_witness_cell": internal_hole_witness(p),
        "row_convex": is_row_convex(p),
        "column_convex": is_column_convex(p),
        "convex": is_convex(p),
    })
}

fn cmd_recognize(file: &str, common: &Common) -> Result<i32, Error> {
    let cfg = common.config();
    let input = load_file(file)?;
    let (kind, body) = match &input {
        Input::Graph(g) => (Kind::Graph, json!({ "graph": graph_predicates(g, &cfg) })),
        Input::Embedding(e) => (
            Kind::Embedding,
            json!({
                "graph": graph_predicates(e.graph(), &cfg),
                "embedding": embedding_predicates(e),
            }),
        ),
        Input::Triangulation { tri, compiled } => (
            Kind::Triangulation,
            json!({
                "polyomino": polyomino_predicates(tri.base()),
                "graph": graph_predicates(compiled.embedding.graph(), &cfg),
                "embedding": embedding_predicates(&compiled.embedding),
            }),
        ),
        Input::Polyomino(p) => (Kind::Polyomino, json!({ "polyomino": polyomino_predicates(p) })),
    };
    let v = json!({ "command": "recognize", "kind": kind.as_str(), "predicates": body });
    if common.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("kind: {}", kind.as_str());
        print_human_value(&v["predicates"], 0);
    }
    Ok(0)
}

fn print_human_value(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        println!("{pad}{k}:");
                        print_human_value(val, indent + 1);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        println!("{pad}{k}:");
                        for item in items {
                            println!("{pad}  - {item}");
                        }
                    }
                    _ => println!("{pad}{k}: {val}"),
                }
            }
        }
        _ => println!("{pad}{v}"),
    }
}

fn cmd_verify(id: &str, max_cells: Option<usize>, common: &Common) -> Result<i32, Error> {
    let cfg = common.config();
    let id: TheoremId = id.parse()?;
    let report = campaigns::run(id, &cfg, max_cells)?;
    if common.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&report.to_json(&cfg)).unwrap());
    } else {
        print!("{}", report.render_human());
    }
    Ok(report.exit_code())
}

fn cmd_witness(file: &str, k_max: Option<usize>, common: &Common) -> Result<i32, Error> {
    let cfg = common.config();
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::invalid(format!("cannot read {file}: {e}")))?;
    let g = parse_graph(&text)?;
    let k_max = k_max.unwrap_or(g.vertex_count().max(1));
    match find_representing_word(&g, k_max, &cfg)? {
        Some(w) => {
            let verified = represents(&w, &g)?;
            if common.format == Format::Json {
                let v = json!({
                    "command": "witness",
                    "found": true,
                    "word": w.to_string(),
                    "compact": w.to_compact(),
                    "verified": verified,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("word: {w}");
                if let Some(c) = w.to_compact() {
                    println!("compact: {c}");
                }
                println!("verified: {verified}");
            }
            Ok(if verified { 0 } else { 2 })
        }
        None => {
            if common.format == Format::Json {
                let v = json!({
                    "command": "witness",
                    "found": false,
                    "k_max": k_max,
                    "note": "absence of a uniform witness proves nothing; use `decide` for a verdict",
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("no uniform witness up to k_max = {k_max}");
                println!("note: this is not a proof of non-representability; use `decide` for a verdict");
            }
            Ok(1)
        }
    }
}

fn cmd_generate(what: GenerateCmd) -> Result<i32, Error> {
    match what {
        GenerateCmd::Polyominoes { max_cells, common } => {
            let cfg = common.config();
            for p in enumerate_polyominoes(max_cells, &cfg)? {
                println!("{}", p.to_grid_string());
            }
            Ok(0)
        }
        GenerateCmd::Triangulation { cells, max_tile, common } => {
            let cfg = common.config();
            let census = enumerate_polyominoes(cells, &cfg)?;
            let shapes: Vec<&Polyomino> =
                census.iter().filter(|p| p.cell_count() == cells).collect();
            if shapes.is_empty() {
                return Err(Error::invalid(format!("no polyominoes with {cells} cells")));
            }
            use rand::Rng;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
            let shape = shapes[rng.random_range(0..shapes.len())];
            let tiled = random_tiling(shape, rng.random(), max_tile.max(1), &cfg)?;
            let tri = random_triangulation(&tiled, rng.random(), &cfg)?;
            print!("{}", tri.to_text());
            Ok(0)
        }
        GenerateCmd::Wheel { rim, common } => {
            let _ = common;
            let e = Embedding::wheel(rim)?;
            print!("{}", write_embedding(&e));
            Ok(0)
        }
        GenerateCmd::GraphFromWord { word, common } => {
            let _ = common;
            let w = Word::parse(&word)?;
            let wg = graph_from_word(&w);
            print!("{}", write_graph(&wg.graph));
            for (i, letter) in wg.letter_of.iter().enumerate() {
                println!("# vertex {} = letter {letter}", i + 1);
            }
            Ok(0)
        }
    }
}
