//! CSV ingestion for discharge series, station metadata, and relations.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;

use super::{Relation, RelationTable, StationRecord};
use crate::error::{Error, Result};

/// Parsed discharge files: per-station daily observations plus row-level
/// warnings (malformed rows are skipped, never fatal).
#[derive(Debug, Clone, Default)]
pub struct DischargeData {
    pub series: BTreeMap<String, Vec<(NaiveDate, f64)>>,
    pub warnings: Vec<String>,
}

/// Station metadata row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StationMeta {
    pub basin_id: String,
    pub name: String,
}

fn reader(path: &Path) -> Result<csv::Reader<std::fs::File>> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(file))
}

/// Column indices by required header names; unknown extra columns are
/// tolerated, missing ones are an error naming the field.
fn required_columns(
    path: &Path,
    reader: &mut csv::Reader<std::fs::File>,
    names: &[&str],
) -> Result<Vec<usize>> {
    let headers = reader
        .headers()
        .map_err(|e| Error::format(path, format!("unreadable header: {e}")))?;
    names
        .iter()
        .map(|&name| {
            headers
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| Error::format(path, format!("missing column '{name}'")))
        })
        .collect()
}

/// Loads daily discharge observations from one CSV file or a directory of
/// CSV files. Expected columns: `station_id,date,flow_m3s`; dates are
/// `YYYY-MM-DD`, an empty flow field is a gap.
///
/// Malformed rows (bad date, unparseable or negative flow) are skipped with
/// a warning carrying the file and line number. Duplicate or decreasing
/// dates within a station are a hard error.
pub fn load_discharge(path: &Path) -> Result<DischargeData> {
    let mut files: Vec<PathBuf> = Vec::new();
    if path.is_dir() {
        for entry in std::fs::read_dir(path).map_err(|e| Error::io(path, e))? {
            let entry = entry.map_err(|e| Error::io(path, e))?;
            let p = entry.path();
            if p.extension().is_some_and(|e| e == "csv") {
                files.push(p);
            }
        }
        files.sort();
        if files.is_empty() {
            return Err(Error::format(path, "directory contains no .csv files"));
        }
    } else {
        files.push(path.to_path_buf());
    }

    let mut data = DischargeData::default();
    // (date, line, file) per station, for the monotonicity check
    let mut rows: BTreeMap<String, Vec<(NaiveDate, Option<f64>, u64, usize)>> = BTreeMap::new();
    for (file_idx, file) in files.iter().enumerate() {
        let mut rdr = reader(file)?;
        let cols = required_columns(file, &mut rdr, &["station_id", "date", "flow_m3s"])?;
        for record in rdr.records() {
            let record = record.map_err(|e| Error::format(file, format!("unreadable row: {e}")))?;
            let line = record.position().map_or(0, |p| p.line());
            let station = record.get(cols[0]).unwrap_or("").to_string();
            if station.is_empty() {
                data.warnings
                    .push(format!("{}:{line}: empty station_id, row skipped", file.display()));
                continue;
            }
            let date_str = record.get(cols[1]).unwrap_or("");
            let date = match NaiveDate::parse_from_str(date_str, "%Y-%m-%d") {
                Ok(d) => d,
                Err(_) => {
                    data.warnings.push(format!(
                        "{}:{line}: unparseable date '{date_str}', row skipped",
                        file.display()
                    ));
                    continue;
                }
            };
            let flow_str = record.get(cols[2]).unwrap_or("");
            let flow = if flow_str.is_empty() {
                None
            } else {
                match flow_str.parse::<f64>() {
                    Ok(v) if v.is_finite() && v >= 0.0 => Some(v),
                    Ok(v) if v < 0.0 => {
                        data.warnings.push(format!(
                            "{}:{line}: negative discharge {v}, row rejected",
                            file.display()
                        ));
                        continue;
                    }
                    _ => {
                        data.warnings.push(format!(
                            "{}:{line}: unparseable flow '{flow_str}', row skipped",
                            file.display()
                        ));
                        continue;
                    }
                }
            };
            rows.entry(station)
                .or_default()
                .push((date, flow, line, file_idx));
        }
    }

    for (station, series) in rows {
        for w in series.windows(2) {
            if w[1].0 <= w[0].0 {
                let file = &files[w[1].3];
                return Err(Error::format(
                    file,
                    format!(
                        "non-monotone dates for station {station} at line {} ({} after {})",
                        w[1].2, w[1].0, w[0].0
                    ),
                ));
            }
        }
        let observed: Vec<(NaiveDate, f64)> = series
            .into_iter()
            .filter_map(|(d, v, _, _)| v.map(|v| (d, v)))
            .collect();
        data.series.insert(station, observed);
    }
    Ok(data)
}

/// Loads station metadata (`station_id,basin_id,name`).
pub fn load_station_metadata(path: &Path) -> Result<HashMap<String, StationMeta>> {
    let mut rdr = reader(path)?;
    let cols = required_columns(path, &mut rdr, &["station_id", "basin_id", "name"])?;
    let mut out = HashMap::new();
    for record in rdr.records() {
        let record = record.map_err(|e| Error::format(path, format!("unreadable row: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let id = record.get(cols[0]).unwrap_or("").to_string();
        let basin = record.get(cols[1]).unwrap_or("").to_string();
        if id.is_empty() || basin.is_empty() {
            return Err(Error::format(
                path,
                format!("line {line}: station_id and basin_id must be non-empty"),
            ));
        }
        let meta = StationMeta {
            basin_id: basin,
            name: record.get(cols[2]).unwrap_or("").to_string(),
        };
        if out.insert(id.clone(), meta).is_some() {
            return Err(Error::format(path, format!("duplicate station_id '{id}'")));
        }
    }
    Ok(out)
}

/// Loads the pairwise relation table (`station_a,station_b,relation`).
pub fn load_relations(path: &Path) -> Result<RelationTable> {
    let mut rdr = reader(path)?;
    let cols = required_columns(path, &mut rdr, &["station_a", "station_b", "relation"])?;
    let mut table = RelationTable::new();
    for record in rdr.records() {
        let record = record.map_err(|e| Error::format(path, format!("unreadable row: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let a = record.get(cols[0]).unwrap_or("");
        let b = record.get(cols[1]).unwrap_or("");
        let rel_str = record.get(cols[2]).unwrap_or("");
        let relation = Relation::parse(rel_str).ok_or_else(|| {
            Error::format(path, format!("line {line}: unknown relation '{rel_str}'"))
        })?;
        table.insert(a, b, relation)?;
    }
    Ok(table)
}

/// Joins discharge series with metadata into station records, sorted by id.
///
/// Discharge data without metadata is an error (the basin is required);
/// metadata without discharge only warns.
pub fn assemble_stations(
    discharge: &DischargeData,
    metadata: &HashMap<String, StationMeta>,
) -> Result<(Vec<StationRecord>, Vec<String>)> {
    let mut warnings = Vec::new();
    let mut stations = Vec::with_capacity(discharge.series.len());
    for (id, series) in &discharge.series {
        let meta = metadata.get(id).ok_or_else(|| {
            Error::Data(format!("station {id} has discharge data but no metadata"))
        })?;
        stations.push(StationRecord {
            station_id: id.clone(),
            basin_id: meta.basin_id.clone(),
            name: meta.name.clone(),
            series: series.clone(),
        });
    }
    for id in metadata.keys() {
        if !discharge.series.contains_key(id) {
            warnings.push(format!("station {id} has metadata but no discharge data"));
        }
    }
    stations.sort_by(|a, b| a.station_id.cmp(&b.station_id));
    Ok((stations, warnings))
}
