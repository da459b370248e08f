//! Loading rosters, edge lists, adjacency matrices, and authorship records
//! from delimited text, plus the canonical re-emit of the same schemas.
//!
//! File schemas (comma-delimited UTF-8 with a header row; the delimiter is
//! overridable):
//!
//! - nodes: `id,label,gender,education,discipline,employer,country_origin,country_residence,race_ethnicity,lat,lon`
//! - edges: `src,dst,weight,layer`
//! - authorship: `paper_id,author_id`
//! - adjacency: square matrix whose first row and column carry node ids
//!
//! Canonical re-emit writes rows sorted by id, so emitting a loaded file a
//! second time is byte-identical.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{Read, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{
    Education, Layer, Location, Network, Researcher, Roster,
};

/// One author-on-paper incidence row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AuthorshipRecord {
    pub paper_id: String,
    pub author_id: String,
}

/// A dropped input row and why it was dropped.
#[derive(Debug, Clone, Serialize)]
pub struct DroppedRow {
    /// 1-based data-row number (excluding the header).
    pub row: usize,
    pub reason: String,
}

/// What a load saw: row accounting, unresolved ids, and per-field missing
/// value counts. `rows_read == rows_kept + dropped.len()` always holds.
#[derive(Debug, Clone, Default, Serialize)]
pub struct IngestReport {
    pub rows_read: usize,
    pub rows_kept: usize,
    pub dropped: Vec<DroppedRow>,
    pub unknown_ids: Vec<String>,
    pub missing_values: BTreeMap<String, usize>,
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

impl IngestReport {
    fn drop_row(&mut self, row: usize, reason: impl Into<String>) {
        self.dropped.push(DroppedRow {
            row,
            reason: reason.into(),
        });
    }
}

const NODE_COLUMNS: [&str; 11] = [
    "id",
    "label",
    "gender",
    "education",
    "discipline",
    "employer",
    "country_origin",
    "country_residence",
    "race_ethnicity",
    "lat",
    "lon",
];

fn reader_from_path(path: &Path, delimiter: u8) -> Result<csv::Reader<std::fs::File>> {
    let file = std::fs::File::open(path)?;
    Ok(csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .flexible(true)
        .from_reader(file))
}

fn header_positions(headers: &csv::StringRecord) -> HashMap<String, usize> {
    headers
        .iter()
        .enumerate()
        .map(|(i, h)| (h.trim().to_ascii_lowercase(), i))
        .collect()
}

fn field<'a>(record: &'a csv::StringRecord, pos: Option<&usize>) -> Option<&'a str> {
    pos.and_then(|&i| record.get(i))
        .map(str::trim)
        .filter(|s| !s.is_empty())
}

/// Loads a researcher roster. The header must name at least `id`; the other
/// node columns are optional and empty cells become missing values.
///
/// Duplicate ids and unrecognized education levels are hard errors; malformed
/// or out-of-range coordinates drop the row into the report instead.
pub fn load_roster<R: Read>(input: R, delimiter: u8) -> Result<(Roster, IngestReport)> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .flexible(true)
        .from_reader(input);
    let headers = rdr.headers()?.clone();
    let pos = header_positions(&headers);
    if !pos.contains_key("id") {
        return Err(Error::Shape("nodes file has no `id` column".into()));
    }

    let mut report = IngestReport::default();
    let mut researchers = Vec::new();
    for (row_idx, record) in rdr.records().enumerate() {
        let record = record?;
        let row = row_idx + 1;
        report.rows_read += 1;

        let id = match field(&record, pos.get("id")) {
            Some(id) => id.to_string(),
            None => {
                return Err(Error::Parse {
                    row,
                    message: "empty id".into(),
                })
            }
        };

        let education = match field(&record, pos.get("education")) {
            Some(s) => match Education::parse(s) {
                Some(e) => Some(e),
                None => {
                    return Err(Error::Parse {
                        row,
                        message: format!(
                            "education `{s}` is not one of: high school, bachelor, masters, doctorate"
                        ),
                    })
                }
            },
            None => None,
        };

        let lat = field(&record, pos.get("lat"));
        let lon = field(&record, pos.get("lon"));
        let location = match (lat, lon) {
            (None, None) => None,
            (Some(lat_s), Some(lon_s)) => {
                let parsed = lat_s
                    .parse::<f64>()
                    .and_then(|lat| lon_s.parse::<f64>().map(|lon| (lat, lon)));
                match parsed {
                    Ok((lat, lon)) => match Location::new(lat, lon) {
                        Ok(loc) => Some(loc),
                        Err(_) => {
                            report.drop_row(row, format!("coordinates out of range: {lat},{lon}"));
                            continue;
                        }
                    },
                    Err(_) => {
                        report.drop_row(row, format!("malformed coordinates: {lat_s},{lon_s}"));
                        continue;
                    }
                }
            }
            _ => {
                report.drop_row(row, "one of lat/lon missing");
                continue;
            }
        };

        let researcher = Researcher {
            id,
            label: field(&record, pos.get("label")).map(str::to_string),
            gender: field(&record, pos.get("gender")).map(str::to_string),
            education,
            discipline: field(&record, pos.get("discipline")).map(str::to_string),
            employer: field(&record, pos.get("employer")).map(str::to_string),
            country_origin: field(&record, pos.get("country_origin")).map(str::to_string),
            country_residence: field(&record, pos.get("country_residence")).map(str::to_string),
            race_ethnicity: field(&record, pos.get("race_ethnicity")).map(str::to_string),
            location,
        };
        for col in &NODE_COLUMNS[1..] {
            let missing = match *col {
                "label" => researcher.label.is_none(),
                "gender" => researcher.gender.is_none(),
                "education" => researcher.education.is_none(),
                "discipline" => researcher.discipline.is_none(),
                "employer" => researcher.employer.is_none(),
                "country_origin" => researcher.country_origin.is_none(),
                "country_residence" => researcher.country_residence.is_none(),
                "race_ethnicity" => researcher.race_ethnicity.is_none(),
                "lat" | "lon" => researcher.location.is_none(),
                _ => unreachable!(),
            };
            if missing {
                *report.missing_values.entry(col.to_string()).or_insert(0) += 1;
            }
        }
        researchers.push(researcher);
        report.rows_kept += 1;
    }

    let roster = Roster::new(researchers)?;
    Ok((roster, report))
}

pub fn load_roster_path(path: &Path, delimiter: u8) -> Result<(Roster, IngestReport)> {
    load_roster(std::fs::File::open(path)?, delimiter)
}

/// Loads an edge list into the given layer. Unknown endpoints, non-positive
/// weights, self-loops, and rows tagged with a different layer are dropped
/// and reported; surviving rows are canonicalized per the layer's rules.
pub fn load_edge_list<R: Read>(
    input: R,
    layer: Layer,
    roster: &Roster,
    delimiter: u8,
) -> Result<(Network, IngestReport)> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .flexible(true)
        .from_reader(input);
    let headers = rdr.headers()?.clone();
    let pos = header_positions(&headers);
    for required in ["src", "dst"] {
        if !pos.contains_key(required) {
            return Err(Error::Shape(format!("edges file has no `{required}` column")));
        }
    }

    let ids: Vec<String> = roster.iter().map(|r| r.id.clone()).collect();
    let mut report = IngestReport::default();
    let mut raw: Vec<(usize, usize, f64)> = Vec::new();
    for (row_idx, record) in rdr.records().enumerate() {
        let record = record?;
        let row = row_idx + 1;
        report.rows_read += 1;

        if let Some(row_layer) = field(&record, pos.get("layer")) {
            match Layer::parse(row_layer) {
                Ok(l) if l == layer => {}
                Ok(other) => {
                    report.drop_row(row, format!("layer `{}` does not match `{}`", other, layer));
                    continue;
                }
                Err(_) => {
                    report.drop_row(row, format!("unrecognized layer `{row_layer}`"));
                    continue;
                }
            }
        }

        let src = field(&record, pos.get("src")).unwrap_or_default();
        let dst = field(&record, pos.get("dst")).unwrap_or_default();
        if src.is_empty() || dst.is_empty() {
            report.drop_row(row, "empty endpoint");
            continue;
        }
        let (si, di) = match (roster.position(src), roster.position(dst)) {
            (Some(s), Some(d)) => (s, d),
            _ => {
                for id in [src, dst] {
                    if roster.position(id).is_none() && !report.unknown_ids.iter().any(|u| u == id)
                    {
                        report.unknown_ids.push(id.to_string());
                    }
                }
                report.drop_row(row, format!("unknown endpoint in ({src}, {dst})"));
                continue;
            }
        };

        let weight = match field(&record, pos.get("weight")) {
            Some(w) => match w.parse::<f64>() {
                Ok(w) if w.is_finite() && w > 0.0 => w,
                Ok(w) => {
                    report.drop_row(row, format!("non-positive weight {w}"));
                    continue;
                }
                Err(_) => {
                    report.drop_row(row, format!("malformed weight `{w}`"));
                    continue;
                }
            },
            None => 1.0,
        };

        if si == di {
            report.self_loops_dropped += 1;
            report.drop_row(row, format!("self-loop on `{src}`"));
            continue;
        }

        raw.push((si, di, weight));
        report.rows_kept += 1;
    }

    let (net, notes) = Network::from_index_edges(layer, ids, &raw)?;
    report.duplicates_collapsed = notes.duplicates_collapsed;
    Ok((net, report))
}

pub fn load_edge_list_path(
    path: &Path,
    layer: Layer,
    roster: &Roster,
    delimiter: u8,
) -> Result<(Network, IngestReport)> {
    load_edge_list(std::fs::File::open(path)?, layer, roster, delimiter)
}

/// Loads a square adjacency matrix whose first row and first column carry
/// node ids. `cell(i, j) != 0` produces the edge i→j; the diagonal is
/// ignored. Directed layers require 0/1 entries; the co-authorship layer
/// accepts non-negative counts and requires a symmetric matrix.
pub fn load_adjacency_matrix<R: Read>(
    input: R,
    layer: Layer,
    roster: &Roster,
    delimiter: u8,
) -> Result<Network> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .flexible(true)
        .has_headers(false)
        .from_reader(input);
    let mut rows: Vec<csv::StringRecord> = Vec::new();
    for record in rdr.records() {
        rows.push(record?);
    }
    if rows.is_empty() {
        return Err(Error::Shape("empty adjacency file".into()));
    }

    let header = &rows[0];
    let col_ids: Vec<String> = header
        .iter()
        .skip(1)
        .map(|s| s.trim().to_string())
        .collect();
    let n = col_ids.len();
    if rows.len() - 1 != n {
        return Err(Error::Shape(format!(
            "adjacency matrix is not square: {} columns, {} rows",
            n,
            rows.len() - 1
        )));
    }
    for id in &col_ids {
        if roster.position(id).is_none() {
            return Err(Error::UnknownId(id.clone()));
        }
    }

    let mut values = vec![vec![0.0f64; n]; n];
    for (i, record) in rows[1..].iter().enumerate() {
        let row_id = record.get(0).map(str::trim).unwrap_or_default();
        if row_id != col_ids[i] {
            return Err(Error::Shape(format!(
                "adjacency row id `{}` does not match column id `{}`",
                row_id, col_ids[i]
            )));
        }
        if record.len() != n + 1 {
            return Err(Error::Shape(format!(
                "adjacency row `{row_id}` has {} entries, expected {n}",
                record.len() - 1
            )));
        }
        for j in 0..n {
            let cell = record.get(j + 1).map(str::trim).unwrap_or_default();
            let value: f64 = cell.parse().map_err(|_| Error::Parse {
                row: i + 1,
                message: format!("malformed adjacency cell `{cell}`"),
            })?;
            if layer.directed() && value != 0.0 && value != 1.0 {
                return Err(Error::Parse {
                    row: i + 1,
                    message: format!("binary layer cell must be 0 or 1, got {value}"),
                });
            }
            if !value.is_finite() || value < 0.0 {
                return Err(Error::Parse {
                    row: i + 1,
                    message: format!("negative or non-finite adjacency cell {value}"),
                });
            }
            values[i][j] = value;
        }
    }

    let mut raw: Vec<(usize, usize, f64)> = Vec::new();
    if layer.directed() {
        for i in 0..n {
            for j in 0..n {
                if i != j && values[i][j] != 0.0 {
                    raw.push((i, j, 1.0));
                }
            }
        }
    } else {
        for i in 0..n {
            for j in (i + 1)..n {
                if values[i][j] != values[j][i] {
                    return Err(Error::Shape(format!(
                        "asymmetric matrix for undirected layer at ({}, {})",
                        col_ids[i], col_ids[j]
                    )));
                }
                if values[i][j] != 0.0 {
                    raw.push((i, j, values[i][j]));
                }
            }
        }
    }

    let (net, _) = Network::from_index_edges(layer, col_ids, &raw)?;
    Ok(net)
}

pub fn load_adjacency_matrix_path(
    path: &Path,
    layer: Layer,
    roster: &Roster,
    delimiter: u8,
) -> Result<Network> {
    load_adjacency_matrix(std::fs::File::open(path)?, layer, roster, delimiter)
}

/// Loads `paper_id,author_id` incidence rows, de-duplicating exact pairs.
pub fn load_authorship<R: Read>(
    input: R,
    delimiter: u8,
) -> Result<(Vec<AuthorshipRecord>, IngestReport)> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .flexible(true)
        .from_reader(input);
    let headers = rdr.headers()?.clone();
    let pos = header_positions(&headers);
    for required in ["paper_id", "author_id"] {
        if !pos.contains_key(required) {
            return Err(Error::Shape(format!(
                "authorship file has no `{required}` column"
            )));
        }
    }

    let mut report = IngestReport::default();
    let mut seen = BTreeSet::new();
    let mut records = Vec::new();
    for (row_idx, record) in rdr.records().enumerate() {
        let record = record?;
        let row = row_idx + 1;
        report.rows_read += 1;
        let paper = field(&record, pos.get("paper_id")).unwrap_or_default();
        let author = field(&record, pos.get("author_id")).unwrap_or_default();
        if paper.is_empty() || author.is_empty() {
            report.drop_row(row, "empty paper_id or author_id");
            continue;
        }
        if seen.insert((paper.to_string(), author.to_string())) {
            records.push(AuthorshipRecord {
                paper_id: paper.to_string(),
                author_id: author.to_string(),
            });
            report.rows_kept += 1;
        } else {
            report.duplicates_collapsed += 1;
            report.drop_row(row, format!("duplicate pair ({paper}, {author})"));
        }
    }
    Ok((records, report))
}

pub fn load_authorship_path(
    path: &Path,
    delimiter: u8,
) -> Result<(Vec<AuthorshipRecord>, IngestReport)> {
    load_authorship(std::fs::File::open(path)?, delimiter)
}

/// Projects author-paper incidences onto the co-authorship layer: nodes are
/// the distinct authors, and each unordered author pair is weighted by the
/// number of distinct papers they share. Authors with no co-authors stay as
/// isolated nodes.
pub fn project_bipartite(records: &[AuthorshipRecord]) -> Network {
    let mut authors: BTreeSet<&str> = BTreeSet::new();
    let mut papers: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for rec in records {
        authors.insert(&rec.author_id);
        papers
            .entry(&rec.paper_id)
            .or_default()
            .insert(&rec.author_id);
    }
    let ids: Vec<String> = authors.iter().map(|s| s.to_string()).collect();
    let index: HashMap<&str, usize> = authors.iter().enumerate().map(|(i, s)| (*s, i)).collect();

    let mut weights: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for authors_on_paper in papers.values() {
        let members: Vec<usize> = authors_on_paper.iter().map(|a| index[a]).collect();
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                *weights.entry((i.min(j), i.max(j))).or_insert(0.0) += 1.0;
            }
        }
    }
    let raw: Vec<(usize, usize, f64)> = weights.into_iter().map(|((i, j), w)| (i, j, w)).collect();
    let (net, _) = Network::from_index_edges(Layer::Coauthorship, ids, &raw)
        .expect("projection produces canonical edges");
    net
}

fn format_f64(x: f64) -> String {
    // Shortest round-trip representation keeps re-emit lossless.
    format!("{x}")
}

/// Canonical nodes re-emit: full schema header, rows sorted by id.
pub fn write_roster<W: Write>(out: &mut W, roster: &Roster) -> Result<()> {
    writeln!(out, "{}", NODE_COLUMNS.join(","))?;
    let mut rows: Vec<&Researcher> = roster.iter().collect();
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    for r in rows {
        let (lat, lon) = match r.location {
            Some(loc) => (format_f64(loc.lat), format_f64(loc.lon)),
            None => (String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.id,
            r.label.as_deref().unwrap_or(""),
            r.gender.as_deref().unwrap_or(""),
            r.education.map(|e| e.as_str()).unwrap_or(""),
            r.discipline.as_deref().unwrap_or(""),
            r.employer.as_deref().unwrap_or(""),
            r.country_origin.as_deref().unwrap_or(""),
            r.country_residence.as_deref().unwrap_or(""),
            r.race_ethnicity.as_deref().unwrap_or(""),
            lat,
            lon
        )?;
    }
    Ok(())
}

/// Canonical edges re-emit: rows sorted by (src, dst) id.
pub fn write_edge_list<W: Write>(out: &mut W, net: &Network) -> Result<()> {
    writeln!(out, "src,dst,weight,layer")?;
    let mut rows: Vec<(&str, &str, f64)> = net
        .edges()
        .iter()
        .map(|e| (net.id(e.src), net.id(e.dst), e.weight))
        .collect();
    rows.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    for (src, dst, weight) in rows {
        writeln!(out, "{},{},{},{}", src, dst, format_f64(weight), net.layer())?;
    }
    Ok(())
}

/// Canonical authorship re-emit: rows sorted by (paper_id, author_id).
pub fn write_authorship<W: Write>(out: &mut W, records: &[AuthorshipRecord]) -> Result<()> {
    writeln!(out, "paper_id,author_id")?;
    let mut rows: Vec<&AuthorshipRecord> = records.iter().collect();
    rows.sort();
    for r in rows {
        writeln!(out, "{},{}", r.paper_id, r.author_id)?;
    }
    Ok(())
}
