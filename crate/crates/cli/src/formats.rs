//! Text file formats: Cayley tables, permutation generators, and plain
//! edge-list graphs. All three reject bad input with the line number.

use gengraph::graph::Graph;
use gengraph::group::FiniteGroup;
use gengraph::perm::Permutation;
use gengraph::permgroup::PermGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FileError {}

fn err(line: usize, message: impl Into<String>) -> FileError {
    FileError {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn parse_counted<T: std::str::FromStr>(
    line: usize,
    text: &str,
    expected: usize,
    what: &str,
) -> Result<Vec<T>, FileError> {
    let parsed: Result<Vec<T>, _> = text.split_whitespace().map(str::parse).collect();
    let values = parsed.map_err(|_| err(line, format!("expected {what}")))?;
    if values.len() != expected {
        return Err(err(
            line,
            format!("expected {expected} entries, found {}", values.len()),
        ));
    }
    Ok(values)
}

/// Cayley table: first line `n`, then `n` rows of `n` 0-based element
/// indices, row `i` column `j` holding the product `i * j`. Element 0
/// must be the identity; the group axioms are validated.
pub fn parse_cayley_table(text: &str) -> Result<FiniteGroup, FileError> {
    let lines = content_lines(text);
    let (first_line, first) = *lines
        .first()
        .ok_or_else(|| err(1, "empty file, expected group order"))?;
    let n: usize = first
        .parse()
        .map_err(|_| err(first_line, "expected the group order"))?;
    if n == 0 {
        return Err(err(first_line, "group order must be positive"));
    }
    if lines.len() != n + 1 {
        return Err(err(
            lines.last().map(|&(l, _)| l).unwrap_or(first_line),
            format!("expected {n} table rows, found {}", lines.len() - 1),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for &(line, text) in &lines[1..] {
        let row: Vec<usize> = parse_counted(line, text, n, "0-based element indices")?;
        if let Some(&bad) = row.iter().find(|&&e| e >= n) {
            return Err(err(
                line,
                format!("element index {bad} out of range 0..{n}"),
            ));
        }
        rows.push(row);
    }
    FiniteGroup::from_table(rows).map_err(|e| err(first_line, e.to_string()))
}

/// Permutation generators: first line the degree `d`, each later line
/// `d` whitespace-separated 0-based images.
pub fn parse_perm_file(text: &str) -> Result<PermGroup, FileError> {
    let lines = content_lines(text);
    let (first_line, first) = *lines
        .first()
        .ok_or_else(|| err(1, "empty file, expected the degree"))?;
    let degree: usize = first
        .parse()
        .map_err(|_| err(first_line, "expected the degree"))?;
    if degree == 0 {
        return Err(err(first_line, "degree must be positive"));
    }
    let mut gens = Vec::new();
    for &(line, text) in &lines[1..] {
        let images: Vec<usize> = parse_counted(line, text, degree, "0-based images")?;
        let perm = Permutation::from_images(images).map_err(|e| err(line, e.to_string()))?;
        gens.push(perm);
    }
    PermGroup::new(degree, gens).map_err(|e| err(first_line, e.to_string()))
}

/// Plain graph: first line `n m`, then `m` lines `u v` with 0-based
/// endpoints.
pub fn parse_graph_file(text: &str) -> Result<Graph, FileError> {
    let lines = content_lines(text);
    let (first_line, first) = *lines
        .first()
        .ok_or_else(|| err(1, "empty file, expected 'n m'"))?;
    let header: Vec<usize> = parse_counted(first_line, first, 2, "'n m'")?;
    let (n, m) = (header[0], header[1]);
    if lines.len() != m + 1 {
        return Err(err(
            lines.last().map(|&(l, _)| l).unwrap_or(first_line),
            format!("expected {m} edge lines, found {}", lines.len() - 1),
        ));
    }
    let mut graph = Graph::new(n);
    for &(line, text) in &lines[1..] {
        let pair: Vec<usize> = parse_counted(line, text, 2, "edge 'u v'")?;
        let (u, v) = (pair[0], pair[1]);
        if u >= n || v >= n {
            return Err(err(line, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line, "self-loops are not allowed"));
        }
        graph.add_edge(u, v);
    }
    Ok(graph)
}
