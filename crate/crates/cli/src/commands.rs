use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use zagreb_core::extremal::{admissible_ks, class_params, closed_form_bound, QUADRANTS};
use zagreb_core::graph_core::{emit_edgelist, emit_graph6};
use zagreb_core::indices::{m1, m2, pi1, pi2_edge, pi2_vertex};
use zagreb_core::oracle::{enumerate_free_trees, verify_grid, MAX_ORDER};
use zagreb_core::{
    degree_sequence_of, extremal_spec, is_admissible, max_degree_count, realize, DegreeSequence,
    Goal, Index, IndexValue, Tree,
};

use crate::input::for_each_tree;
use crate::{CliError, ComputeFormat, TableFormat, TreeFormat};

const MIN_VERIFY_ORDER: usize = 4;

fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Domain(format!("cannot start worker threads: {e}")))
}

/// Per-tree row of `compute`.
#[derive(Debug, Serialize)]
struct TreeRecord {
    line: usize,
    n: usize,
    sequence: DegreeSequence,
    max_degree: usize,
    k: usize,
    m1: u64,
    m2: u64,
    pi1: IndexValue,
    pi2: IndexValue,
}

impl TreeRecord {
    fn new(line: usize, t: &Tree) -> Self {
        let sequence = degree_sequence_of(t);
        let (max_degree, k) = max_degree_count(t);
        TreeRecord {
            line,
            n: t.n(),
            max_degree,
            k,
            m1: m1(&sequence),
            m2: m2(t),
            pi1: pi1(&sequence),
            pi2: pi2_vertex(&sequence),
            sequence,
        }
    }
}

const TABLE_HEADER: &str =
    "line      n    Δ    k        M1        M2  log2(Π1)  log2(Π2)  Π1  Π2  sequence";

fn write_table_row(out: &mut impl Write, r: &TreeRecord) -> io::Result<()> {
    writeln!(
        out,
        "{:>4} {:>6} {:>4} {:>4} {:>9} {:>9} {:>9.3} {:>9.3}  {}  {}  ({})",
        r.line,
        r.n,
        r.max_degree,
        r.k,
        r.m1,
        r.m2,
        r.pi1.log2(),
        r.pi2.log2(),
        r.pi1,
        r.pi2,
        r.sequence.compact()
    )
}

pub fn compute(input: &str, format: ComputeFormat) -> Result<(), CliError> {
    let reader: Box<dyn BufRead> = if input == "-" {
        Box::new(io::stdin().lock())
    } else {
        let file = File::open(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
        Box::new(BufReader::new(file))
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if let ComputeFormat::Table = format {
        writeln!(out, "{TABLE_HEADER}")?;
    }
    let result = for_each_tree(reader, |line, t| {
        let record = TreeRecord::new(line, &t);
        match format {
            ComputeFormat::Json => {
                serde_json::to_writer(&mut out, &record).map_err(io::Error::from)?;
                writeln!(out)?;
            }
            ComputeFormat::Table => write_table_row(&mut out, &record)?,
        }
        Ok(())
    });
    // rows already produced stay visible even when a later line is bad
    out.flush()?;
    result.map(|_| ())
}

#[derive(Debug, Serialize)]
struct ConstructRecord<'a> {
    n: usize,
    k: usize,
    index: Index,
    goal: Goal,
    max_degree: u32,
    sequence: &'a DegreeSequence,
    bound: &'a IndexValue,
    graph6: String,
    edges: Vec<(usize, usize)>,
}

pub fn construct(
    n: usize,
    k: usize,
    index: Index,
    goal: Goal,
    format: TreeFormat,
) -> Result<(), CliError> {
    let spec = extremal_spec(n, k, index, goal).map_err(|e| CliError::Domain(e.to_string()))?;
    let tree = realize(&spec.sequence).map_err(|e| CliError::Domain(e.to_string()))?;

    // check the witness from the tree itself before printing anything
    let got = match index {
        Index::Pi1 => pi1(&degree_sequence_of(&tree)),
        Index::Pi2 => pi2_edge(&tree),
    };
    if degree_sequence_of(&tree) != spec.sequence
        || max_degree_count(&tree).1 != k
        || got != spec.bound
    {
        return Err(CliError::Mismatch(format!(
            "constructed tree has {index} = {got}, sequence {}, expected {} and {}",
            degree_sequence_of(&tree),
            spec.bound,
            spec.sequence
        )));
    }

    let mut out = BufWriter::new(io::stdout().lock());
    match format {
        TreeFormat::Json => {
            let record = ConstructRecord {
                n,
                k,
                index,
                goal,
                max_degree: spec.sequence.max_degree(),
                sequence: &spec.sequence,
                bound: &spec.bound,
                graph6: emit_graph6(&tree),
                edges: tree.edges().collect(),
            };
            serde_json::to_writer_pretty(&mut out, &record).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        TreeFormat::Graph6 | TreeFormat::Edgelist => {
            writeln!(out, "# n={n} k={k} {index} {goal}")?;
            writeln!(out, "# sequence ({})", spec.sequence.compact())?;
            writeln!(
                out,
                "# bound {} (log2 {:.6})",
                spec.bound,
                spec.bound.log2()
            )?;
            if let TreeFormat::Graph6 = format {
                writeln!(out, "{}", emit_graph6(&tree))?;
            } else {
                write!(out, "{}", emit_edgelist(&tree))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

pub fn enumerate(n: usize, k: Option<usize>, format: TreeFormat) -> Result<(), CliError> {
    if n == 0 || n > MAX_ORDER {
        return Err(CliError::Domain(format!(
            "n = {n} is outside the enumeration range 1..={MAX_ORDER}"
        )));
    }
    if let Some(k) = k {
        if !is_admissible(n, k) {
            return Err(CliError::Domain(
                class_params(n, k).expect_err("inadmissible").to_string(),
            ));
        }
    }
    let trees = enumerate_free_trees(n).map_err(|e| CliError::Domain(e.to_string()))?;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut first = true;
    for t in trees.filter(|t| k.is_none_or(|k| max_degree_count(t).1 == k)) {
        match format {
            TreeFormat::Graph6 => writeln!(out, "{}", emit_graph6(&t))?,
            TreeFormat::Edgelist => {
                if !first {
                    writeln!(out)?;
                }
                write!(out, "{}", emit_edgelist(&t))?;
            }
            TreeFormat::Json => {
                let edges: Vec<(usize, usize)> = t.edges().collect();
                serde_json::to_writer(&mut out, &edges).map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
        first = false;
    }
    out.flush()?;
    Ok(())
}

pub fn verify(n_max: usize, report: Option<&Path>, jobs: Option<usize>) -> Result<(), CliError> {
    if !(MIN_VERIFY_ORDER..=MAX_ORDER).contains(&n_max) {
        return Err(CliError::Domain(format!(
            "--n-max {n_max} is outside the supported range {MIN_VERIFY_ORDER}..={MAX_ORDER}"
        )));
    }
    let grid = thread_pool(jobs)?
        .install(|| verify_grid(n_max))
        .map_err(|e| CliError::Domain(e.to_string()))?;

    let mut out = BufWriter::new(io::stdout().lock());
    for r in &grid.classes {
        writeln!(
            out,
            "n={:<3} k={:<3} trees={:<7} sequences={:<3} {}",
            r.n,
            r.k,
            r.class_size,
            r.distinct_sequences,
            if r.all_match() { "ok" } else { "MISMATCH" }
        )?;
    }
    writeln!(
        out,
        "{} classes checked for 4 <= n <= {n_max}",
        grid.classes.len()
    )?;
    out.flush()?;

    if let Some(path) = report {
        let body = if path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
        {
            grid.to_csv()
        } else {
            grid.to_json()
        };
        fs::write(path, body)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))?;
    }

    let failures = grid.failures();
    if failures.is_empty() {
        return Ok(());
    }
    let listed: Vec<String> = failures
        .iter()
        .map(|f| format!("({}, {}, {}, {})", f.n, f.k, f.index, f.goal))
        .collect();
    Err(CliError::Mismatch(format!(
        "{} failing cells (n, k, index, goal): {}",
        failures.len(),
        listed.join(" ")
    )))
}

struct TableRow {
    n: usize,
    k: usize,
    delta: u32,
    values: Vec<IndexValue>,
}

pub fn table(
    n_from: usize,
    n_to: usize,
    format: TableFormat,
    jobs: Option<usize>,
) -> Result<(), CliError> {
    if n_from > n_to {
        return Err(CliError::Domain(format!(
            "empty range: --n-from {n_from} is greater than --n-to {n_to}"
        )));
    }
    let rows: Vec<TableRow> = thread_pool(jobs)?.install(|| {
        (n_from..=n_to)
            .into_par_iter()
            .flat_map_iter(|n| {
                admissible_ks(n).into_iter().map(move |k| {
                    let params = class_params(n, k).expect("admissible by construction");
                    TableRow {
                        n,
                        k,
                        delta: params.max_degree,
                        values: QUADRANTS
                            .iter()
                            .map(|&(index, goal)| closed_form_bound(&params, index, goal))
                            .collect(),
                    }
                })
            })
            .collect()
    });

    let mut out = BufWriter::new(io::stdout().lock());
    match format {
        TableFormat::Csv => {
            writeln!(out, "n,k,delta,pi1_min,pi1_max,pi2_min,pi2_max")?;
            for r in &rows {
                let values: Vec<String> = r.values.iter().map(ToString::to_string).collect();
                writeln!(out, "{},{},{},{}", r.n, r.k, r.delta, values.join(","))?;
            }
        }
        TableFormat::Text => write_text_table(&mut out, &rows)?,
    }
    out.flush()?;
    Ok(())
}

fn write_text_table(out: &mut impl Write, rows: &[TableRow]) -> io::Result<()> {
    let mut header: Vec<String> = ["n", "k", "delta"].map(String::from).to_vec();
    for (index, goal) in QUADRANTS {
        header.push(format!("{index}_{goal}"));
    }
    for (index, goal) in QUADRANTS {
        header.push(format!("log2_{index}_{goal}"));
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut line = vec![r.n.to_string(), r.k.to_string(), r.delta.to_string()];
            line.extend(r.values.iter().map(ToString::to_string));
            line.extend(r.values.iter().map(|v| format!("{:.4}", v.log2())));
            line
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            cells
                .iter()
                .map(|line| line[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    for line in std::iter::once(&header).chain(&cells) {
        let padded: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  "))?;
    }
    Ok(())
}
