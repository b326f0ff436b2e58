use std::io;

use rayon::prelude::*;
use serde::Serialize;

use crate::hilbert::HVector;
use crate::level::{check_bounds, BoundReport, Verdict};

/// Where a batch's h-vectors come from. Enumerated sequences are only
/// candidates: nothing is claimed about their being level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceLabel {
    Family,
    #[default]
    Candidate,
    Input,
}

#[derive(Debug, Clone)]
pub struct BatchOptions {
    pub assume_level: bool,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
    /// Keep every report, not only failures.
    pub keep_reports: bool,
    pub label: SourceLabel,
}

impl Default for BatchOptions {
    fn default() -> Self {
        BatchOptions {
            assume_level: false,
            jobs: 1,
            keep_reports: false,
            label: SourceLabel::Candidate,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BoundCounts {
    pub lower: u64,
    pub upper: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub h: HVector,
    pub report: BoundReport,
}

/// An input line that could not be checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ItemError {
    pub line: Option<usize>,
    pub input: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BatchResult {
    pub label: SourceLabel,
    pub total: u64,
    pub holds: BoundCounts,
    pub fails: BoundCounts,
    pub inapplicable: BoundCounts,
    pub failures: Vec<Failure>,
    pub sharp_hits: Vec<HVector>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<ItemError>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<BoundReport>,
}

fn bump(counts: (&mut BoundCounts, &mut BoundCounts, &mut BoundCounts), v: Verdict, lower: bool) {
    let slot = match v {
        Verdict::Holds => counts.0,
        Verdict::Fails => counts.1,
        Verdict::Inapplicable => counts.2,
    };
    if lower {
        slot.lower += 1;
    } else {
        slot.upper += 1;
    }
}

impl BatchResult {
    pub fn any_failure(&self) -> bool {
        !self.failures.is_empty()
    }

    fn absorb(&mut self, report: BoundReport, keep: bool) {
        self.total += 1;
        for (v, lower) in [(report.lower_holds, true), (report.upper_holds, false)] {
            bump((&mut self.holds, &mut self.fails, &mut self.inapplicable), v, lower);
        }
        if report.any_sharp() {
            self.sharp_hits.push(report.h.clone());
        }
        if report.any_failure() {
            self.failures.push(Failure {
                h: report.h.clone(),
                report: report.clone(),
            });
        }
        if keep {
            self.reports.push(report);
        }
    }

    /// Appends `other`, which covers inputs after those of `self`.
    pub fn merge(mut self, other: BatchResult) -> BatchResult {
        self.total += other.total;
        for (a, b) in [
            (&mut self.holds, other.holds),
            (&mut self.fails, other.fails),
            (&mut self.inapplicable, other.inapplicable),
        ] {
            a.lower += b.lower;
            a.upper += b.upper;
        }
        self.failures.extend(other.failures);
        self.sharp_hits.extend(other.sharp_hits);
        self.errors.extend(other.errors);
        self.reports.extend(other.reports);
        self
    }
}

const CHUNK: usize = 1024;

/// Runs [`check_bounds`] over every item. Items are processed in chunks,
/// each chunk in parallel, and folded back in input order, so the result
/// does not depend on `jobs`.
pub fn run_batch<I>(items: I, opts: &BatchOptions) -> BatchResult
where
    I: IntoIterator<Item = Result<HVector, ItemError>>,
{
    let pool = (opts.jobs > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool")
    });
    let mut result = BatchResult {
        label: opts.label,
        ..BatchResult::default()
    };
    let mut items = items.into_iter().peekable();
    while items.peek().is_some() {
        let chunk: Vec<_> = items.by_ref().take(CHUNK).collect();
        let check = |item: &Result<HVector, ItemError>| match item {
            Ok(h) => check_bounds(h, opts.assume_level).map_err(|e| ItemError {
                line: None,
                input: h.to_string(),
                message: e.to_string(),
            }),
            Err(e) => Err(e.clone()),
        };
        let checked: Vec<_> = match &pool {
            Some(pool) => pool.install(|| chunk.par_iter().map(check).collect()),
            None => chunk.iter().map(check).collect(),
        };
        for c in checked {
            match c {
                Ok(report) => result.absorb(report, opts.keep_reports),
                Err(e) => result.errors.push(e),
            }
        }
    }
    result
}

/// Parses one h-vector per line. Blank lines and `#` comments are skipped;
/// malformed lines become per-line errors.
pub fn read_hvector_lines(text: &str) -> Vec<Result<HVector, ItemError>> {
    text.lines()
        .enumerate()
        .filter_map(|(k, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                return None;
            }
            Some(body.parse::<HVector>().map_err(|e| ItemError {
                line: Some(k + 1),
                input: body.to_string(),
                message: e.to_string(),
            }))
        })
        .collect()
}

/// One CSV row per report, with a header.
pub fn write_csv<W: io::Write>(reports: &[BoundReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BoundReport::CSV_HEADER)?;
    for r in reports {
        w.write_record(r.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{enumerate_osequences, type2_grid};

    fn hv(s: &str) -> HVector {
        s.parse().unwrap()
    }

    #[test]
    fn type2_grid_has_no_failures() {
        let items = type2_grid(3..=5, 12).into_iter().map(|(_, _, h)| Ok(h));
        let opts = BatchOptions {
            assume_level: true,
            label: SourceLabel::Family,
            ..Default::default()
        };
        let r = run_batch(items, &opts);
        assert!(r.total > 0);
        assert_eq!(r.fails, BoundCounts::default());
        assert_eq!(r.holds.lower, r.total);
        assert_eq!(r.holds.upper, r.total);
    }

    #[test]
    fn extreme_nonlevel_lower_failure() {
        let r = run_batch([Ok(hv("1,3,6,10,15,21,13,7,3,1"))], &BatchOptions::default());
        assert_eq!(r.total, 1);
        assert_eq!(r.fails.lower, 1);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].h, hv("1,3,6,10,15,21,13,7,3,1"));
    }

    #[test]
    fn empty_input() {
        let r = run_batch(read_hvector_lines(""), &BatchOptions::default());
        assert_eq!(r.total, 0);
        assert!(r.failures.is_empty());
        let json = serde_json::to_value(&r).unwrap();
        for key in ["total", "holds", "fails", "inapplicable", "failures", "sharp_hits"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn bad_lines_are_reported_and_skipped() {
        let text = "# header\n1,3,4,4,3,1\n1,3,x\n\n1,2,1   # not codimension three\n1,3,3,2\n";
        let r = run_batch(read_hvector_lines(text), &BatchOptions::default());
        assert_eq!(r.total, 2);
        assert_eq!(r.errors.len(), 2);
        assert_eq!(r.errors[0].line, Some(3));
        assert_eq!(r.errors[1].input, "1,2,1");
    }

    #[test]
    fn parallelism_does_not_change_result() {
        let items = || enumerate_osequences(6, 12, Some(&[1, 3])).map(Ok);
        let one = run_batch(items(), &BatchOptions { keep_reports: true, ..Default::default() });
        let many = run_batch(
            items(),
            &BatchOptions { jobs: 4, keep_reports: true, ..Default::default() },
        );
        assert!(one.total > CHUNK as u64);
        assert_eq!(one, many);
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&many).unwrap()
        );
    }

    #[test]
    fn merge_matches_single_run() {
        let all: Vec<HVector> = enumerate_osequences(5, 8, Some(&[1, 3])).collect();
        let (a, b) = all.split_at(all.len() / 3);
        let opts = BatchOptions::default();
        let whole = run_batch(all.iter().cloned().map(Ok), &opts);
        let parts = run_batch(a.iter().cloned().map(Ok), &opts)
            .merge(run_batch(b.iter().cloned().map(Ok), &opts));
        assert_eq!(whole, parts);
    }

    #[test]
    fn csv_has_one_row_per_report() {
        let opts = BatchOptions { keep_reports: true, ..Default::default() };
        let r = run_batch([Ok(hv("1,3,4,4,3,1")), Ok(hv("1,3,3,2"))], &opts);
        let mut buf = Vec::new();
        write_csv(&r.reports, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("h,e,t,i,j,m,lower,upper,flags,tags\n"));
        assert!(text.contains("\"1,3,4,4,3,1\",16,2,6,6,2,16/1,16/1"));
    }
}
