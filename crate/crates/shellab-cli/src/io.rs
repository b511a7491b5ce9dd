//! Text formats.
//!
//! Complexes: a header `n <count>` naming the ambient vertex count, then one
//! facet per line as strictly ascending positive integers. Posets: a header
//! `p <count>` naming the element count (isolated elements are legal, so the
//! count cannot be inferred), then one `a < b` relation per line. Both
//! formats skip blank lines and `#` comments. Serialization emits the
//! canonical form — facets in their stored order, covers ascending — and
//! parsing a canonical file round-trips byte-identically.

use shellab::complex::DropReport;
use shellab::gamma::CodimGraph;
use shellab::poset::Poset;
use shellab::shelling::FacetOrder;
use shellab::{Face, SimplicialComplex};

use crate::FormatError;

/// A complex file as written: the header count and the facet lines in file
/// order, before canonicalization.
#[derive(Debug, Clone)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

/// Lines that carry content, with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_header(line_no: usize, line: &str, tag: &str) -> Result<usize, FormatError> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(t), Some(count), None) if t == tag => count
            .parse()
            .map_err(|_| FormatError::at(line_no, format!("invalid count `{count}`"))),
        _ => Err(FormatError::at(line_no, format!("expected header `{tag} <count>`"))),
    }
}

pub fn parse_complex(text: &str) -> Result<ComplexFile, FormatError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| FormatError::Structure("empty file: expected header `n <count>`".into()))?;
    let n = parse_header(line_no, header, "n")?;
    let mut facets = Vec::new();
    for (line_no, line) in lines {
        let mut vertices: Vec<usize> = Vec::new();
        for token in line.split_whitespace() {
            let v: usize = token
                .parse()
                .map_err(|_| FormatError::at(line_no, format!("invalid vertex `{token}`")))?;
            if v == 0 {
                return Err(FormatError::at(line_no, "vertices are positive"));
            }
            if v > n {
                return Err(FormatError::at(line_no, format!("vertex {v} exceeds n={n}")));
            }
            if vertices.last().is_some_and(|&last| v <= last) {
                return Err(FormatError::at(
                    line_no,
                    "vertices must be strictly ascending within a facet",
                ));
            }
            vertices.push(v);
        }
        facets.push(vertices);
    }
    Ok(ComplexFile { n, facets })
}

impl ComplexFile {
    /// Canonicalizes into a complex; the report names any lines that were
    /// duplicates or absorbed by larger facets.
    pub fn complex(&self) -> Result<(SimplicialComplex, DropReport), FormatError> {
        Ok(SimplicialComplex::from_facets_with_report(
            self.n,
            self.facets.iter().map(|f| f.iter().copied()),
        )?)
    }

    /// The facet order given by the file's line order, as indices into the
    /// canonical facet list; every line must name a distinct facet.
    pub fn listing_order(&self, complex: &SimplicialComplex) -> Result<FacetOrder, FormatError> {
        let mut indices = Vec::with_capacity(self.facets.len());
        for listed in &self.facets {
            let face = Face::from_vertices(self.n, listed.iter().copied())?;
            let index = complex.facet_index(&face).ok_or_else(|| {
                FormatError::Structure(format!(
                    "listed set {listed:?} is not a facet of the complex"
                ))
            })?;
            indices.push(index);
        }
        Ok(FacetOrder::new(indices)?)
    }
}

/// The canonical text form: header, then one facet per line in canonical
/// order. `parse_complex` on this output reproduces it byte-for-byte.
pub fn serialize_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", complex.n());
    for facet in complex.facets() {
        let mut sep = "";
        for v in facet.to_vec() {
            out.push_str(sep);
            out.push_str(&v.to_string());
            sep = " ";
        }
        out.push('\n');
    }
    out
}

pub fn parse_poset(text: &str) -> Result<Poset, FormatError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| FormatError::Structure("empty file: expected header `p <count>`".into()))?;
    let m = parse_header(line_no, header, "p")?;
    let mut relations = Vec::new();
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let pair = match tokens.as_slice() {
            [a, "<", b] => a.parse().ok().zip(b.parse().ok()),
            _ => None,
        };
        let (a, b) = pair
            .ok_or_else(|| FormatError::at(line_no, format!("expected `a < b`, got `{line}`")))?;
        relations.push((a, b));
    }
    Ok(Poset::new(m, &relations)?)
}

/// Header plus the cover relations in ascending order; `parse_poset` on this
/// output rebuilds an identical poset.
pub fn serialize_poset(poset: &Poset) -> String {
    let mut out = format!("p {}\n", poset.element_count());
    for (a, b) in poset.cover_pairs() {
        out.push_str(&format!("{a} < {b}\n"));
    }
    out
}

fn facet_label(facet: &Face) -> String {
    let vertices = facet.to_vec();
    let sep = if vertices.last().copied().unwrap_or(0) > 9 { "," } else { "" };
    vertices
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// DOT rendering of the codimension-one graph, nodes labeled by facets.
pub fn gamma_dot(complex: &SimplicialComplex, gamma: &CodimGraph) -> String {
    let mut out = String::from("graph gamma {\n");
    for (i, facet) in complex.facets().iter().enumerate() {
        out.push_str(&format!("  f{i} [label=\"{}\"];\n", facet_label(facet)));
    }
    for (i, j) in gamma.edges() {
        out.push_str(&format!("  f{i} -- f{j};\n"));
    }
    out.push_str("}\n");
    out
}
