use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use anyhow::Context;
use serde::Serialize;
use trilist::alloc::AllocProbe;
use trilist::analysis::{
    clustering_coefficients, default_k_ladder, degree_distribution, fit_alpha, transitivity, tune_k,
};
use trilist::counting::count_from_stream;
use trilist::{AdjacencyMatrix, Algorithm, Error, Graph, TriangleReport};

use crate::input;
use crate::{AlgoArgs, BenchArgs, ConvertArgs, Mode, RunArgs, Source, Target};

fn open_output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(source: &Source) -> anyhow::Result<Graph> {
    let g = input::load(source.input.as_deref(), source.gen.as_ref(), source.format)?;
    log::info!("graph: n = {}, m = {}, d_max = {}", g.n(), g.m(), g.max_degree());
    Ok(g)
}

fn guard_matrix(algo: Algorithm, g: &Graph, cap: usize) -> anyhow::Result<()> {
    if algo.needs_matrix() && g.n() > cap {
        let mib = AdjacencyMatrix::bytes_for(g.n()) as f64 / (1 << 20) as f64;
        return Err(Error::Usage(format!(
            "{algo} needs a {mib:.0} MiB adjacency matrix for n = {}; raise --max-matrix-n above {cap} to allow it",
            g.n()
        ))
        .into());
    }
    Ok(())
}

/// `K` for algorithms that take one; a `--k` for any other is a usage error.
fn resolve_k(algo: Algorithm, g: &Graph, t: &AlgoArgs, explicit_ok: bool) -> anyhow::Result<Option<usize>> {
    if !algo.takes_k() {
        if t.k.is_some() && !explicit_ok {
            return Err(Error::Usage(format!("{algo} takes no degree threshold; drop --k")).into());
        }
        return Ok(None);
    }
    let k = t.k.unwrap_or_default().resolve(g, t.alpha, t.omega)?;
    log::info!("{algo}: K = {k}");
    Ok(Some(k))
}

/// Runs `algo` to completion. Compact-forward sorts `g` in place.
fn compute(g: &mut Graph, algo: Algorithm, k: usize, per_vertex: bool) -> anyhow::Result<TriangleReport> {
    let mut matrix = if algo.needs_matrix() { Some(AdjacencyMatrix::new(g)?) } else { None };
    if !algo.lists() {
        return Ok(algo.report(g, matrix.as_ref(), k)?);
    }
    let n = g.n();
    let stream = algo.list_in_place(g, matrix.as_mut(), k)?;
    Ok(if per_vertex { count_from_stream(stream, n) } else { TriangleReport::total_only(stream.count() as u64) })
}

fn checked(g: &Graph, algo: Algorithm, r: TriangleReport) -> anyhow::Result<TriangleReport> {
    if !r.is_consistent_with(g) {
        return Err(Error::Consistency(format!("{algo} produced inconsistent per-vertex counts")).into());
    }
    Ok(r)
}

#[derive(Serialize)]
struct Summary {
    source: String,
    n: usize,
    m: usize,
    algorithm: Algorithm,
    k: Option<usize>,
    triangles: u64,
    runtime_ms: f64,
    peak_aux_bytes: u64,
}

pub fn run(args: RunArgs, default_mode: Mode) -> anyhow::Result<()> {
    let mode = args.output.unwrap_or(default_mode);
    let algo = args.algo;
    let mut g = load(&args.source)?;
    guard_matrix(algo, &g, args.tuning.max_matrix_n)?;
    let k = resolve_k(algo, &g, &args.tuning, false)?;
    let k_value = k.unwrap_or(0);
    let mut out = open_output(args.out.as_deref())?;

    match mode {
        Mode::Count => {
            let r = compute(&mut g, algo, k_value, false)?;
            writeln!(out, "{}", r.total)?;
        }
        Mode::List => {
            if !algo.lists() {
                return Err(Error::Usage(format!("{algo} counts but does not list; pick a listing algorithm")).into());
            }
            let mut matrix = if algo.needs_matrix() { Some(AdjacencyMatrix::new(&g)?) } else { None };
            let stream = algo.list_in_place(&mut g, matrix.as_mut(), k_value)?;
            if args.sorted {
                let mut all: Vec<_> = stream.collect();
                all.sort_unstable();
                for t in all {
                    writeln!(out, "{t}")?;
                }
            } else {
                for t in stream {
                    writeln!(out, "{t}")?;
                }
            }
        }
        Mode::PerVertex => {
            let r = compute(&mut g, algo, k_value, true)?;
            let r = checked(&g, algo, r)?;
            for (v, t) in r.per_vertex.unwrap_or_default().iter().enumerate() {
                writeln!(out, "{v} {t}")?;
            }
        }
        Mode::Stats => {
            let r = compute(&mut g, algo, k_value, true)?;
            let r = checked(&g, algo, r)?;
            write_stats(&mut out, &g, &r)?;
        }
        Mode::JsonSummary => {
            let source = match (&args.source.gen, &args.source.input) {
                (Some(spec), _) => spec.to_string(),
                (None, Some(path)) => path.display().to_string(),
                (None, None) => String::new(),
            };
            let (n, m) = (g.n(), g.m());
            let probe = AllocProbe::start();
            let start = Instant::now();
            let r = compute(&mut g, algo, k_value, false)?;
            let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
            let peak_aux_bytes = probe.peak_bytes();
            if !trilist::alloc::is_active() {
                log::warn!("allocation counter inactive; peak_aux_bytes is meaningless");
            }
            let summary = Summary { source, n, m, algorithm: algo, k, triangles: r.total, runtime_ms, peak_aux_bytes };
            serde_json::to_writer(&mut out, &summary)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn write_stats(out: &mut dyn Write, g: &Graph, r: &TriangleReport) -> anyhow::Result<()> {
    writeln!(out, "n {}", g.n())?;
    writeln!(out, "m {}", g.m())?;
    writeln!(out, "triangles {}", r.total)?;
    match transitivity(g, r.total) {
        Ok(t) => writeln!(out, "transitivity {t:.6}")?,
        Err(Error::UndefinedStatistic(_)) => writeln!(out, "transitivity undefined")?,
        Err(e) => return Err(e.into()),
    }
    match clustering_coefficients(g, r)?.average {
        Some(c) => writeln!(out, "average_clustering {c:.6}")?,
        None => writeln!(out, "average_clustering undefined")?,
    }
    let hist = degree_distribution(g);
    match fit_alpha(&hist) {
        Ok(alpha) => writeln!(out, "alpha_fit {alpha:.6}")?,
        Err(Error::UndefinedFit(_)) => writeln!(out, "alpha_fit undefined")?,
        Err(e) => return Err(e.into()),
    }
    writeln!(out, "# degree histogram: k count")?;
    for (k, c) in hist.iter() {
        writeln!(out, "{k} {c}")?;
    }
    Ok(())
}

pub fn bench(args: BenchArgs) -> anyhow::Result<()> {
    let mut g = load(&args.source)?;
    let repeat = args.repeat.max(1);
    let mut out = open_output(args.out.as_deref())?;

    if let Some(list) = args.compare {
        let algos: Vec<Algorithm> = if list.is_empty() {
            Algorithm::ALL
                .into_iter()
                .filter(|a| !a.needs_matrix() || g.n() <= args.tuning.max_matrix_n)
                .collect()
        } else {
            list
        };
        let mut rows = Vec::new();
        for algo in algos {
            guard_matrix(algo, &g, args.tuning.max_matrix_n)?;
            let k = resolve_k(algo, &g, &args.tuning, true)?;
            let mut best = f64::INFINITY;
            let mut total = None;
            for _ in 0..repeat {
                let start = Instant::now();
                let t = compute(&mut g, algo, k.unwrap_or(0), false)?.total;
                best = best.min(start.elapsed().as_secs_f64() * 1e3);
                if *total.get_or_insert(t) != t {
                    return Err(Error::Consistency(format!("{algo} is not deterministic")).into());
                }
            }
            rows.push((algo, k, best, total.unwrap()));
        }
        if let Some(bad) = rows.iter().find(|r| r.3 != rows[0].3) {
            return Err(Error::Consistency(format!(
                "{} found {} triangles but {} found {}",
                rows[0].0, rows[0].3, bad.0, bad.3
            ))
            .into());
        }
        writeln!(out, "# algorithm\tK\tmillis\ttriangles")?;
        for (algo, k, ms, total) in &rows {
            let k = k.map_or("-".to_string(), |k| k.to_string());
            writeln!(out, "{algo}\t{k}\t{ms:.3}\t{total}")?;
        }
        if let Some((algo, _, ms, _)) = rows.iter().min_by(|a, b| a.2.total_cmp(&b.2)) {
            writeln!(out, "# fastest: {algo} ({ms:.3} ms)")?;
        }
    } else {
        let algo = args.algo;
        if !algo.takes_k() {
            return Err(Error::Usage(format!("{algo} has no K to sweep; use --compare to time it")).into());
        }
        guard_matrix(algo, &g, args.tuning.max_matrix_n)?;
        let ks = args.ks.unwrap_or_else(|| default_k_ladder(&g));
        let sweep = tune_k(&g, algo, &ks, repeat)?;
        writeln!(out, "# K\tn_K\tmillis")?;
        out.write_all(sweep.to_tsv().as_bytes())?;
        let best = sweep.best();
        writeln!(
            out,
            "# fastest: {algo} K={} ({:.3} ms, {} triangles, best of {repeat})",
            best.k, best.millis, best.total
        )?;
    }
    out.flush()?;
    Ok(())
}

pub fn convert(args: ConvertArgs) -> anyhow::Result<()> {
    let g = load(&args.source)?;
    let mut out = open_output(Some(&args.out))?;
    match args.to {
        Target::Binary => g.write_binary(&mut out)?,
        Target::Text => {
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
