//! Edge-list and label files.
//!
//! Edge lists: a header line `n m`, then exactly `m` lines `u v` with 0-based
//! decimal endpoints. Label files: one decimal value per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::{check_size, EdgeList, NodeId};
use crate::error::{Error, Result};

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<EdgeList> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(BufReader::new(file), path)
}

pub(crate) fn parse_edge_list(reader: impl BufRead, path: &Path) -> Result<EdgeList> {
    let parse_err = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (n, m) = match lines.next() {
        Some((no, line)) => {
            let line = line.map_err(|e| Error::io(path, e))?;
            let (n, m) = parse_pair(&line).map_err(|msg| parse_err(no, msg))?;
            (n as usize, m as usize)
        }
        None => return Err(parse_err(1, "missing header line \"n m\"".into())),
    };
    check_size(n, m)?;

    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines.by_ref() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if edges.len() == m {
            if line.trim().is_empty() {
                continue;
            }
            return Err(parse_err(no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(&line).map_err(|msg| parse_err(no, msg))?;
        if u >= n as u64 || v >= n as u64 {
            return Err(parse_err(
                no,
                format!("endpoint of ({u}, {v}) not in [0, {n})"),
            ));
        }
        edges.push((u as NodeId, v as NodeId));
    }
    if edges.len() < m {
        return Err(parse_err(
            edges.len() + 2,
            format!("truncated: expected {m} edges, found {}", edges.len()),
        ));
    }
    Ok(EdgeList::new(n, edges))
}

fn parse_pair(line: &str) -> std::result::Result<(u64, u64), String> {
    let mut fields = line.split_ascii_whitespace();
    let mut next = || -> std::result::Result<u64, String> {
        let field = fields
            .next()
            .ok_or_else(|| format!("expected two integers in {line:?}"))?;
        field
            .parse()
            .map_err(|_| format!("not a nonnegative integer: {field:?}"))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(format!("trailing fields in {line:?}"));
    }
    Ok((a, b))
}

pub fn write_edge_list(el: &EdgeList, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let wrap = |e| Error::io(path, e);
    let mut out = BufWriter::new(File::create(path).map_err(wrap)?);
    writeln!(out, "{} {}", el.n, el.edges.len()).map_err(wrap)?;
    for &(u, v) in &el.edges {
        writeln!(out, "{u} {v}").map_err(wrap)?;
    }
    out.flush().map_err(wrap)
}

pub fn write_labels(labels: &[u32], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let wrap = |e| Error::io(path, e);
    let mut out = BufWriter::new(File::create(path).map_err(wrap)?);
    for l in labels {
        writeln!(out, "{l}").map_err(wrap)?;
    }
    out.flush().map_err(wrap)
}

pub fn read_labels(path: impl AsRef<Path>) -> Result<Vec<u32>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut labels = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let value = line.trim().parse().map_err(|_| Error::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            message: format!("not a label: {line:?}"),
        })?;
        labels.push(value);
    }
    Ok(labels)
}
