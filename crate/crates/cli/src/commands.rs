use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use hyperweave::analytics::{connected_components, degree_summary, graph_modularity, hypergraph_modularity};
use hyperweave::centrality::{classic_betweenness, pearson, s_betweenness};
use hyperweave::community::{graph_label_propagation, hypergraph_label_propagation, nmi, LpConfig};
use hyperweave::forecast::{average_error, forecast_graph, forecast_hypergraph, RatingTable};
use hyperweave::io::{
    read_partition_csv, read_partition_json, write_hgf, write_json, write_partition_csv, write_partition_json,
    Assignment,
};
use hyperweave::{BipartiteView, CentralityVector, Error, Partition, TwoSectionView};

use crate::input::{self, Dataset};
use crate::manifest::Parameters;
use crate::render;
use crate::{Algorithm, Cli, CliError, Command, Method, OutputFormat, Source};

/// What a command produced: the primary output, an optional summary for
/// the console, and what the manifest needs.
pub struct Run {
    pub command: &'static str,
    pub primary: Vec<u8>,
    pub report: Option<String>,
    pub inputs: Vec<PathBuf>,
    pub parameters: Parameters,
}

fn name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn load(source: &Source, params: &mut Parameters) -> Result<Dataset, CliError> {
    let (d, format) = input::load(&source.input, source.format, &source.stars, source.lcc)?;
    params.input_format = Some(name(format));
    params.star_filter = source.stars.clone();
    params.lcc = source.lcc;
    Ok(d)
}

pub fn run(cli: &Cli) -> Result<Run, CliError> {
    let full = cli.common.full_precision;
    let mut params = Parameters {
        full_precision: full,
        deterministic: cli.common.deterministic,
        ..Parameters::default()
    };
    let (command, primary, report, inputs) = match &cli.command {
        Command::Stats { source } => {
            let d = load(source, &mut params)?;
            ("stats", stats(&d).into_bytes(), None, vec![source.input.clone()])
        }
        Command::Convert { source, to } => {
            let d = load(source, &mut params)?;
            params.output_format = Some(name(*to));
            ("convert", convert(&d, *to).into_bytes(), None, vec![source.input.clone()])
        }
        Command::Communities {
            source,
            algo,
            seed,
            max_iter,
        } => {
            let d = load(source, &mut params)?;
            params.algorithm = Some(name(*algo));
            params.seed = Some(*seed);
            params.max_iterations = Some(*max_iter);
            let cfg = LpConfig {
                max_iterations: *max_iter,
                seed: *seed,
                ..LpConfig::default()
            };
            let as_csv = cli.common.output.as_deref().is_some_and(is_csv);
            let (primary, report) = communities(&d, *algo, &cfg, as_csv, full)?;
            ("communities", primary, Some(report), vec![source.input.clone()])
        }
        Command::Nmi { first, second } => {
            let value = compare_partitions(first, second)?;
            let out = format!("{}\n", render::float(value, full));
            ("nmi", out.into_bytes(), None, vec![first.clone(), second.clone()])
        }
        Command::Betweenness {
            source,
            s,
            top_k,
            method,
        } => {
            let d = load(source, &mut params)?;
            params.s = Some(*s);
            params.top_k = *top_k;
            params.algorithm = Some(name(*method));
            let out = betweenness(&d, *s, *top_k, *method, full)?;
            ("betweenness", out, None, vec![source.input.clone()])
        }
        Command::Forecast { source } => {
            let d = load(source, &mut params)?;
            let (primary, report) = forecast(&d, full)?;
            ("forecast", primary, Some(report), vec![source.input.clone()])
        }
        Command::Correlate { first, second } => {
            let r = pearson(&read_scores(first)?, &read_scores(second)?)?;
            let out = format!("{}\n", render::float(r, full));
            ("correlate", out.into_bytes(), None, vec![first.clone(), second.clone()])
        }
        Command::Replay { .. } => unreachable!("replay is handled before dispatch"),
    };
    Ok(Run {
        command,
        primary,
        report,
        inputs,
        parameters: params,
    })
}

fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

fn histogram<I: IntoIterator<Item = usize>>(values: I) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

fn pairs<'a, I: IntoIterator<Item = (&'a usize, &'a usize)>>(it: I) -> String {
    let parts: Vec<String> = it.into_iter().map(|(k, v)| format!("{k}:{v}")).collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(" ")
    }
}

fn stats(d: &Dataset) -> String {
    let h = &d.hypergraph;
    let summary = degree_summary(h);
    let components = connected_components(h);
    let component_sizes = histogram(components.iter().map(Vec::len));
    let mut out = String::new();
    let _ = writeln!(out, "n {}", h.nhv());
    let _ = writeln!(out, "k {}", h.nhe());
    let _ = writeln!(out, "incidences {}", h.incidence_count());
    let _ = writeln!(out, "volume {}", summary.volume);
    let _ = writeln!(out, "hyperedge_sizes {}", pairs(&summary.size_counts));
    let _ = writeln!(out, "degrees {}", pairs(&histogram(summary.degrees.iter().copied())));
    let _ = writeln!(out, "components {}", components.len());
    let _ = writeln!(out, "component_sizes {}", pairs(component_sizes.iter().rev()));
    out
}

fn convert(d: &Dataset, to: OutputFormat) -> String {
    let h = &d.hypergraph;
    match to {
        OutputFormat::Hgf => write_hgf(h),
        OutputFormat::Json => write_json(h),
        OutputFormat::DotBipartite => {
            let labels: Vec<String> = d.vertex_labels.iter().chain(&d.hyperedge_labels).cloned().collect();
            BipartiteView::new(h).materialize().to_dot(Some(&labels))
        }
        OutputFormat::DotTwosection => TwoSectionView::new(h).materialize().to_dot(Some(&d.vertex_labels)),
    }
}

fn communities(
    d: &Dataset,
    algo: Algorithm,
    cfg: &LpConfig,
    as_csv: bool,
    full: bool,
) -> Result<(Vec<u8>, String), CliError> {
    let h = &d.hypergraph;
    let (outcome, modularity) = match algo {
        Algorithm::HyperLp => {
            let out = hypergraph_label_propagation(h, cfg)?;
            let q = hypergraph_modularity(h, &out.partition);
            (out, q)
        }
        Algorithm::GraphLp => {
            let view = TwoSectionView::new(h);
            let out = graph_label_propagation(&view, cfg)?;
            let q = graph_modularity(&view, &out.partition);
            (out, q)
        }
    };
    let modularity = match modularity {
        Ok(q) => render::float(q, full),
        Err(Error::NoHyperedges | Error::NoUsableHyperedges | Error::EmptyGraph) => "undefined".into(),
        Err(e) => return Err(e.into()),
    };
    let p = &outcome.partition;
    let primary = if as_csv {
        write_partition_csv(p)
    } else {
        write_partition_json(p)
    };
    let report = format!(
        "algorithm {}\ncommunities {}\nmodularity {modularity}\niterations {}\nconverged {}\n",
        name(algo),
        p.community_count(),
        outcome.iterations,
        outcome.converged
    );
    Ok((primary.into_bytes(), report))
}

fn read_assignment(path: &Path) -> Result<Assignment, CliError> {
    let text = input::read_text(path)?;
    Ok(if is_csv(path) {
        read_partition_csv(text.as_bytes())?
    } else {
        read_partition_json(&text)?
    })
}

fn compare_partitions(first: &Path, second: &Path) -> Result<f64, CliError> {
    let a = read_assignment(first)?;
    let b = read_assignment(second)?;
    if !a.keys().eq(b.keys()) {
        return Err(Error::DomainMismatch(format!(
            "{} and {} label different vertex sets",
            first.display(),
            second.display()
        ))
        .into());
    }
    Ok(nmi(&Partition::from_assignment(&a)?, &Partition::from_assignment(&b)?)?)
}

fn betweenness(
    d: &Dataset,
    s: usize,
    top_k: Option<usize>,
    method: Method,
    full: bool,
) -> Result<Vec<u8>, CliError> {
    let h = &d.hypergraph;
    let scores = match method {
        Method::S => s_betweenness(h, s)?,
        Method::TwoSection if s == 1 => classic_betweenness(&TwoSectionView::new(h)),
        Method::TwoSection => return Err(CliError::Usage("--method two-section requires --s 1".into())),
    };
    let ranking = match top_k {
        Some(k) => scores.top_k(k),
        None => scores.ranking(),
    };
    let rows = ranking
        .into_iter()
        .map(|(v, x)| [v.to_string(), d.vertex_label(v).to_string(), render::float(x, full)]);
    Ok(render::csv(&["vertex", "label", "score"], rows))
}

fn forecast(d: &Dataset, full: bool) -> Result<(Vec<u8>, String), CliError> {
    let stars = d
        .ratings
        .clone()
        .ok_or_else(|| CliError::Usage("forecast needs reviews-csv input".into()))?;
    let h = &d.hypergraph;
    let ratings = RatingTable::new(stars)?;
    let hyper = forecast_hypergraph(h, &ratings)?;
    let graph = forecast_graph(&TwoSectionView::new(h), &ratings)?;
    let err_hyper = average_error(&hyper, &ratings)?;
    let err_graph = average_error(&graph, &ratings)?;

    let cell = |p: Option<f64>| p.map(|x| render::float(x, full)).unwrap_or_default();
    let rows = h.vertices().map(|v| {
        let i = v.index();
        [
            v.to_string(),
            d.vertex_label(v).to_string(),
            render::float(ratings.values()[i], full),
            cell(hyper[i]),
            cell(graph[i]),
        ]
    });
    let primary = render::csv(&["vertex", "label", "true_stars", "pred_hyper", "pred_graph"], rows);
    let report = format!(
        "err_hyper {} evaluated {}\nerr_graph {} evaluated {}\n",
        render::float(err_hyper.mean_abs_error, full),
        err_hyper.evaluated,
        render::float(err_graph.mean_abs_error, full),
        err_graph.evaluated
    );
    Ok((primary, report))
}

fn read_scores(path: &Path) -> Result<CentralityVector, CliError> {
    let text = input::read_text(path)?;
    let bad = |msg: String| CliError::from(Error::InvalidRecord(format!("{}: {msg}", path.display())));
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(|e| bad(e.to_string()))?.clone();
    let column = |want: &str| {
        headers
            .iter()
            .position(|h| h == want)
            .ok_or_else(|| bad(format!("missing column {want:?}")))
    };
    let (vi, si) = (column("vertex")?, column("score")?);
    let mut scores = BTreeMap::new();
    for row in rdr.records() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        let v: usize = row[vi].parse().map_err(|_| bad(format!("bad vertex {:?}", &row[vi])))?;
        let x: f64 = row[si].parse().map_err(|_| bad(format!("bad score {:?}", &row[si])))?;
        if !x.is_finite() {
            return Err(bad(format!("non-finite score for vertex {v}")));
        }
        if scores.insert(v, x).is_some() {
            return Err(bad(format!("vertex {v} listed twice")));
        }
    }
    let expected: BTreeSet<usize> = (1..=scores.len()).collect();
    if !scores.keys().copied().eq(expected) {
        return Err(Error::DomainMismatch(format!("{} does not score vertices 1..{}", path.display(), scores.len())).into());
    }
    Ok(CentralityVector::from_scores(scores.into_values().collect()))
}
