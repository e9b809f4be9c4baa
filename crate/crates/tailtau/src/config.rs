//! Key=value configuration files.
//!
//! A config file holds `key=value` lines where each key is the long name of
//! a command-line option (without the leading `--`). Values are injected
//! into the argument list before parsing, so explicit flags always win over
//! the file and the file wins over built-in defaults. Unknown keys surface
//! as ordinary usage errors.

use std::path::Path;

use crate::error::{Error, Result};

/// Scans `args` for `--config FILE` / `--config=FILE` and, when present,
/// appends the file's entries as flags that are not already given.
pub fn merge_config_into_args(args: Vec<String>) -> Result<Vec<String>> {
    let Some(path) = find_config_path(&args)? else {
        return Ok(args);
    };
    let entries = parse_config_file(Path::new(&path))?;
    let mut merged = args.clone();
    for (key, value) in entries {
        let flag = format!("--{key}");
        let prefix = format!("--{key}=");
        let already = args.iter().any(|a| *a == flag || a.starts_with(&prefix));
        if !already {
            merged.push(flag);
            // bare keys (no '=') act as boolean switches
            if let Some(v) = value {
                merged.push(v);
            }
        }
    }
    Ok(merged)
}

fn find_config_path(args: &[String]) -> Result<Option<String>> {
    let mut iter = args.iter().peekable();
    while let Some(arg) = iter.next() {
        if arg == "--config" {
            return match iter.peek() {
                Some(v) => Ok(Some((*v).clone())),
                None => Err(Error::Config("--config requires a file path".into())),
            };
        }
        if let Some(v) = arg.strip_prefix("--config=") {
            return Ok(Some(v.to_string()));
        }
    }
    Ok(None)
}

fn parse_config_file(path: &Path) -> Result<Vec<(String, Option<String>)>> {
    let body = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut entries = Vec::new();
    for (i, raw) in body.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once('=') {
            Some((key, value)) => {
                let key = key.trim();
                if key.is_empty() {
                    return Err(Error::format(path, format!("line {}: empty key", i + 1)));
                }
                entries.push((key.to_string(), Some(value.trim().to_string())));
            }
            None => entries.push((line.to_string(), None)),
        }
    }
    Ok(entries)
}
