use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_core::classify::{check_closures, check_partition};
use thompson_core::diagrams::diagram_to_dot;
use thompson_core::folner::{ball_profile, ball_with_limit, subgraph_to_dot, write_density_csv, DensityRow};
use thompson_core::sample::{random_element, random_subset};
use thompson_core::{
    class_histogram, class_of, deletion_bound_check, drop_classes, nf_to_diagram, parse_word,
    reduce_to_normal_form, subgraph_density, NormalForm,
};

use crate::{CheckKind, Cli, Command};

pub enum Outcome {
    Success,
    ChecksFailed,
}

const DEFAULT_LEMMA_DEL_SAMPLES: usize = 1000;

pub fn run(cli: &Cli) -> Result<Outcome> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Reduce { word } => {
            writeln!(out, "{}", element(word)?)?;
        }
        Command::Classify { word } => {
            writeln!(out, "{}", class_of(&element(word)?))?;
        }
        Command::Diagram { word, dot } => {
            let d = nf_to_diagram(&element(word)?);
            writeln!(out, "{d}")?;
            if let Some(path) = dot {
                write_file(path, diagram_to_dot(&d).as_bytes())?;
            }
        }
        Command::Ball { n, csv, dot, limit } => {
            let profile = ball_profile(*n, *limit)?;
            let last = profile.last().expect("profile covers radius 0");
            writeln!(out, "ball({n}): {last}")?;
            if let Some(path) = csv {
                let rows: Vec<DensityRow> = profile
                    .iter()
                    .enumerate()
                    .map(|(r, &stats)| DensityRow { label: format!("ball({r})"), stats: Some(stats) })
                    .collect();
                let file = create(path)?;
                write_density_csv(BufWriter::new(file), &rows)?;
            }
            if let Some(path) = dot {
                let s = ball_with_limit(*n, *limit)?;
                write_file(path, subgraph_to_dot(&s).as_bytes())?;
            }
        }
        Command::Density { n, drop, csv, limit } => {
            let s = drop_classes(&ball_with_limit(*n, *limit)?, drop);
            // dropping every class present leaves an empty row rather than an error
            let stats = if s.is_empty() { None } else { Some(subgraph_density(&s)?) };
            let mut label = format!("ball({n})");
            for c in drop {
                label.push_str(&format!("-{c}"));
            }
            let rows = [DensityRow { label, stats }];
            write_density_csv(&mut out, &rows)?;
            if let Some(path) = csv {
                write_density_csv(BufWriter::new(create(path)?), &rows)?;
            }
        }
        Command::Histogram { n, csv, limit } => {
            let h = class_histogram(&ball_with_limit(*n, *limit)?);
            h.write_csv(&mut out)?;
            if let Some(path) = csv {
                h.write_csv(BufWriter::new(create(path)?))?;
            }
        }
        Command::Check { what, radius, samples, limit } => {
            return check(&mut out, *what, *radius, *samples, *limit, cli.seed);
        }
    }
    Ok(Outcome::Success)
}

fn check(
    out: &mut impl Write,
    what: CheckKind,
    radius: usize,
    samples: Option<usize>,
    limit: usize,
    seed: u64,
) -> Result<Outcome> {
    let ball = ball_with_limit(radius, limit)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let violations: Vec<String> = match what {
        CheckKind::Partition | CheckKind::Closures => {
            let mut s = ball;
            for _ in 0..samples.unwrap_or(0) {
                s.insert(random_element(&mut rng, 20, 8));
            }
            writeln!(out, "checking {} elements", s.len())?;
            if what == CheckKind::Partition {
                check_partition(&s).iter().map(ToString::to_string).collect()
            } else {
                check_closures(&s).iter().map(ToString::to_string).collect()
            }
        }
        CheckKind::LemmaDel => {
            anyhow::ensure!(ball.len() >= 2, "lemma-del needs a ball with at least 2 elements");
            let instances = samples.unwrap_or(DEFAULT_LEMMA_DEL_SAMPLES);
            writeln!(out, "checking {instances} random deletions inside ball({radius})")?;
            let mut failures = Vec::new();
            let mut half_failures = 0;
            for i in 0..instances {
                let s = random_subset(&mut rng, &ball, 2, ball.len());
                let k = random_subset(&mut rng, &s, 0, s.len() - 1);
                let report = deletion_bound_check(&s, &k)?;
                if !report.holds {
                    failures.push(format!("instance {i} (|S|={}, |K|={}): {report}", s.len(), k.len()));
                }
                half_failures += usize::from(!report.half_bound_holds);
            }
            writeln!(out, "{half_failures} instances below the half bound (informational)")?;
            failures
        }
    };
    for v in &violations {
        writeln!(out, "{v}")?;
    }
    writeln!(out, "{} violations", violations.len())?;
    Ok(if violations.is_empty() { Outcome::Success } else { Outcome::ChecksFailed })
}

fn element(word: &str) -> Result<NormalForm> {
    let w = parse_word(word).with_context(|| format!("cannot parse word `{word}`"))?;
    Ok(reduce_to_normal_form(&w))
}

fn create(path: &Path) -> Result<File> {
    File::create(path).with_context(|| format!("cannot create {}", path.display()))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
}
