//! File formats.
//!
//! - report CSV: `policy,metric,max,min,avg`
//! - event log CSV: `t,mt_id,event,old_bs,new_bs` (empty cell = no station)
//! - JSON: the report as `{"rows": [...]}` with the same fields, and the event
//!   log as newline-delimited objects.

use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::report::{Metric, PolicyMetrics, Stat};
use super::{Comparison, ExperimentError, MetricsReport};
use crate::netsim::{EventLog, EventRecord};
use crate::policy::PolicyKind;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn report_extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }

    pub fn log_extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "ndjson",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown output format {s:?} (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct ReportRow {
    policy: PolicyKind,
    metric: Metric,
    max: f64,
    min: f64,
    avg: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct ReportJson {
    rows: Vec<ReportRow>,
}

fn rows(report: &MetricsReport) -> Vec<ReportRow> {
    report
        .policies
        .iter()
        .flat_map(|p| {
            Metric::ALL.into_iter().map(move |metric| {
                let s = p.get(metric);
                ReportRow {
                    policy: p.policy,
                    metric,
                    max: s.max,
                    min: s.min,
                    avg: s.avg,
                }
            })
        })
        .collect()
}

fn from_rows(rows: Vec<ReportRow>) -> Result<MetricsReport, ExperimentError> {
    let mut policies: Vec<(PolicyKind, [Option<Stat>; 3])> = Vec::new();
    for row in rows {
        let idx = match policies.iter().position(|(k, _)| *k == row.policy) {
            Some(i) => i,
            None => {
                policies.push((row.policy, [None; 3]));
                policies.len() - 1
            }
        };
        let slot = Metric::ALL.iter().position(|&m| m == row.metric).expect("known metric");
        policies[idx].1[slot] = Some(Stat {
            max: row.max,
            min: row.min,
            avg: row.avg,
        });
    }
    let policies = policies
        .into_iter()
        .map(|(policy, stats)| match stats {
            [Some(h), Some(c), Some(e)] => Ok(PolicyMetrics {
                policy,
                runs: 0,
                number_of_handoffs: h,
                connection_time_pct: c,
                energy_wastage_pct: e,
            }),
            _ => Err(ExperimentError::Format(format!(
                "report is missing metrics for {policy}"
            ))),
        })
        .collect::<Result<_, _>>()?;
    Ok(MetricsReport { policies })
}

pub fn write_report<W: Write>(
    report: &MetricsReport,
    format: OutputFormat,
    out: W,
) -> Result<(), ExperimentError> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows(report) {
                w.serialize(row)?;
            }
            w.flush().map_err(|e| ExperimentError::Format(e.to_string()))?;
        }
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &ReportJson { rows: rows(report) })?;
            writeln!(out).map_err(|e| ExperimentError::Format(e.to_string()))?;
        }
    }
    Ok(())
}

/// Parses a report written by [`write_report`]. The per-policy run count is
/// not part of the file format and comes back as zero.
pub fn read_report<R: Read>(format: OutputFormat, input: R) -> Result<MetricsReport, ExperimentError> {
    let rows = match format {
        OutputFormat::Csv => csv::Reader::from_reader(input)
            .deserialize()
            .collect::<Result<Vec<ReportRow>, _>>()?,
        OutputFormat::Json => serde_json::from_reader::<_, ReportJson>(input)?.rows,
    };
    from_rows(rows)
}

const LOG_HEADER: [&str; 5] = ["t", "mt_id", "event", "old_bs", "new_bs"];

pub fn write_event_log<W: Write>(
    log: &EventLog,
    format: OutputFormat,
    out: W,
) -> Result<(), ExperimentError> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(LOG_HEADER)?;
            for r in log.records() {
                w.serialize(r)?;
            }
            w.flush().map_err(|e| ExperimentError::Format(e.to_string()))?;
        }
        OutputFormat::Json => {
            let mut out = out;
            for r in log.records() {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out).map_err(|e| ExperimentError::Format(e.to_string()))?;
            }
        }
    }
    Ok(())
}

pub fn read_event_log<R: Read>(format: OutputFormat, input: R) -> Result<EventLog, ExperimentError> {
    match format {
        OutputFormat::Csv => {
            let records = csv::Reader::from_reader(input)
                .deserialize()
                .collect::<Result<Vec<EventRecord>, _>>()?;
            Ok(records.into_iter().collect())
        }
        OutputFormat::Json => {
            let mut log = EventLog::new();
            for line in BufReader::new(input).lines() {
                let line = line.map_err(|e| ExperimentError::Format(e.to_string()))?;
                if !line.trim().is_empty() {
                    log.push(serde_json::from_str(&line)?);
                }
            }
            Ok(log)
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, ExperimentError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| ExperimentError::Io {
            path: path.to_path_buf(),
            source,
        })
}

pub fn export_report(
    report: &MetricsReport,
    format: OutputFormat,
    path: impl AsRef<Path>,
) -> Result<(), ExperimentError> {
    write_report(report, format, create(path.as_ref())?)
}

pub fn export_event_log(
    log: &EventLog,
    format: OutputFormat,
    path: impl AsRef<Path>,
) -> Result<(), ExperimentError> {
    write_event_log(log, format, create(path.as_ref())?)
}

#[derive(Serialize)]
struct EvolutionLine<'a> {
    policy: PolicyKind,
    seed: u64,
    t: u32,
    incumbent_fitness: f64,
    fitness: f64,
    genes: &'a [u8],
}

/// Writes every output of a comparison under `dir` and returns the paths:
/// the report, one event log per run, and `evolution.jsonl` with each
/// installed chromosome.
pub fn write_outputs(
    cmp: &Comparison,
    dir: impl AsRef<Path>,
    format: OutputFormat,
) -> Result<Vec<PathBuf>, ExperimentError> {
    let dir = dir.as_ref();
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| ExperimentError::Io { path, source }
    };
    let events_dir = dir.join("events");
    fs::create_dir_all(&events_dir).map_err(io(&events_dir))?;

    let mut written = Vec::new();
    let report_path = dir.join(format!("report.{}", format.report_extension()));
    export_report(&cmp.report, format, &report_path)?;
    written.push(report_path);

    for run in &cmp.runs {
        let path = events_dir.join(format!(
            "{}_seed{}.{}",
            run.policy.as_str(),
            run.seed,
            format.log_extension()
        ));
        export_event_log(&run.log, format, &path)?;
        written.push(path);
    }

    let evo_path = dir.join("evolution.jsonl");
    let mut evo = create(&evo_path)?;
    for run in &cmp.runs {
        for inst in &run.installations {
            let line = EvolutionLine {
                policy: run.policy,
                seed: run.seed,
                t: inst.t,
                incumbent_fitness: inst.incumbent_fitness,
                fitness: inst.fitness,
                genes: inst.genes.genes(),
            };
            serde_json::to_writer(&mut evo, &line)?;
            writeln!(evo).map_err(io(&evo_path))?;
        }
    }
    evo.flush().map_err(io(&evo_path))?;
    written.push(evo_path);
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netsim::EventKind;

    fn sample_report() -> MetricsReport {
        let stat = |a: f64| Stat {
            max: a + 1.0,
            min: a - 1.0,
            avg: a + 0.1,
        };
        MetricsReport {
            policies: vec![PolicyMetrics {
                policy: PolicyKind::Gfls,
                runs: 0,
                number_of_handoffs: stat(23.0),
                connection_time_pct: stat(29.38),
                energy_wastage_pct: stat(1.0 / 3.0),
            }],
        }
    }

    #[test]
    fn report_round_trips_in_both_formats() {
        let report = sample_report();
        for format in [OutputFormat::Csv, OutputFormat::Json] {
            let mut buf = Vec::new();
            write_report(&report, format, &mut buf).unwrap();
            assert_eq!(read_report(format, &buf[..]).unwrap(), report);
        }
    }

    #[test]
    fn report_csv_layout() {
        let mut buf = Vec::new();
        write_report(&sample_report(), OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("policy,metric,max,min,avg"));
        assert_eq!(lines.next(), Some("gfls,number_of_handoffs,24.0,22.0,23.1"));
    }

    #[test]
    fn empty_log_is_header_only() {
        let mut buf = Vec::new();
        write_event_log(&EventLog::new(), OutputFormat::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "t,mt_id,event,old_bs,new_bs\n");
    }

    #[test]
    fn event_log_round_trips() {
        let log: EventLog = [
            EventRecord {
                t: 1,
                mt_id: 3,
                event: EventKind::Connected,
                old_bs: None,
                new_bs: Some(2),
            },
            EventRecord {
                t: 4,
                mt_id: 0,
                event: EventKind::HandoffInitiated,
                old_bs: Some(2),
                new_bs: Some(5),
            },
        ]
        .into_iter()
        .collect();
        for format in [OutputFormat::Csv, OutputFormat::Json] {
            let mut buf = Vec::new();
            write_event_log(&log, format, &mut buf).unwrap();
            assert_eq!(read_event_log(format, &buf[..]).unwrap(), log);
        }
        let mut buf = Vec::new();
        write_event_log(&log, OutputFormat::Csv, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().contains("1,3,Connected,,2\n"));
    }

    #[test]
    fn unwritable_path_is_io_error() {
        let err = export_report(&sample_report(), OutputFormat::Csv, "/nonexistent/dir/r.csv");
        assert!(matches!(err, Err(ExperimentError::Io { .. })));
    }

    #[test]
    fn unknown_format_is_rejected() {
        assert!("xml".parse::<OutputFormat>().is_err());
        assert_eq!("JSON".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
    }
}
