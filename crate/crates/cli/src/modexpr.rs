//! Module expressions for the bound quiver commands.
//!
//! Grammar: `expr := term ('+' term)*`, where a term is a defined module
//! name, `S<v>`, `P<v>`, `arrow:<label>`, `path:<a>.<b>...`,
//! `omega<k>:<term>`, or a bare vertex name (the simple at that vertex).
//! Vertices are matched by name first, then by index.

use selfext_core::hybrid::verify::path_element;
use selfext_core::oracle::{Oracle, QuiverModule};

use crate::CliError;

pub fn resolve_vertex(oracle: &Oracle, text: &str) -> Result<usize, CliError> {
    let q = oracle.algebra().quiver();
    if let Some(v) = q.vertex_index(text) {
        return Ok(v);
    }
    match text.parse::<usize>() {
        Ok(v) if v < q.vertex_count() => Ok(v),
        _ => Err(CliError::Input(format!(
            "unknown vertex `{text}` (vertices: {})",
            q.vertices.join(", ")
        ))),
    }
}

pub fn parse_module(oracle: &Oracle, expr: &str) -> Result<QuiverModule, CliError> {
    let mut acc: Option<QuiverModule> = None;
    for term in expr.split('+') {
        let m = parse_term(oracle, term.trim())?;
        acc = Some(match acc {
            None => m,
            Some(a) => a.direct_sum(&m),
        });
    }
    acc.ok_or_else(|| CliError::Input("empty module expression".into()))
}

fn parse_term(oracle: &Oracle, term: &str) -> Result<QuiverModule, CliError> {
    if term.is_empty() {
        return Err(CliError::Input("empty module term".into()));
    }
    if let Ok(m) = oracle.defined_module(term) {
        return Ok(m);
    }
    if let Some(rest) = term.strip_prefix("omega") {
        let (k, inner) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Input(format!("expected omega<k>:<module> in `{term}`")))?;
        let k: usize = if k.is_empty() {
            1
        } else {
            k.parse()
                .map_err(|_| CliError::Input(format!("bad syzygy power in `{term}`")))?
        };
        let mut m = parse_term(oracle, inner)?;
        for _ in 0..k {
            m = oracle.syzygy(&m);
        }
        return Ok(m);
    }
    if let Some(label) = term.strip_prefix("arrow:") {
        let a = oracle
            .algebra()
            .quiver()
            .arrow_index(label)
            .ok_or_else(|| CliError::Input(format!("unknown arrow `{label}`")))?;
        return Ok(oracle.arrow_module(a));
    }
    if let Some(word) = term.strip_prefix("path:") {
        let labels: Vec<&str> = word.split('.').collect();
        let q = oracle.algebra().quiver();
        let path = q.path(&labels).map_err(CliError::typed)?;
        let x = path_element(oracle, path.clone());
        return Ok(oracle.element_module(path.start, &x));
    }
    if let Some(v) = term.strip_prefix('S').filter(|v| !v.is_empty()) {
        return Ok(oracle.simple(resolve_vertex(oracle, v)?));
    }
    if let Some(v) = term.strip_prefix('P').filter(|v| !v.is_empty()) {
        return Ok(oracle.projective(resolve_vertex(oracle, v)?).clone());
    }
    match resolve_vertex(oracle, term) {
        Ok(v) => Ok(oracle.simple(v)),
        Err(_) => Err(CliError::Input(format!("cannot parse module expression `{term}`"))),
    }
}
