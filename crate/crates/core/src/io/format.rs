//! The line-oriented `.mag` text format.
//!
//! ```text
//! # comment
//! *mag transit
//! *aspect Location
//! 1
//! 2
//! *aspect Mode
//! Bus
//! Subway
//! *edges
//! 1,Bus -> 2,Bus
//! 2,Bus -> 2,Subway : 0.5
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Blank lines are
//! ignored and labels are trimmed. The `*mag` line is optional; every
//! `*aspect` section must come before `*edges`.

use std::fmt::Write as _;

use crate::error::{MagError, Result};
use crate::model::{Aspect, AspectList, LabeledEdge, Mag};

/// Parsed but not yet validated contents of a `.mag` file, with source line
/// numbers (1-based) kept for diagnostics.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MagDocument {
    pub name: String,
    pub aspects: Vec<AspectRecord>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AspectRecord {
    pub name: String,
    pub line: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeRecord {
    pub origin: Vec<String>,
    pub destination: Vec<String>,
    pub weight: Option<f64>,
    pub line: usize,
}

#[derive(PartialEq)]
enum Section {
    Start,
    Aspect,
    Edges,
}

pub fn parse_mag_document(text: &str) -> Result<MagDocument> {
    let mut doc = MagDocument::default();
    let mut section = Section::Start;
    let mut named = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: String| MagError::Syntax { line, message };
        if let Some(directive) = content.strip_prefix('*') {
            let (keyword, arg) = match directive.split_once(char::is_whitespace) {
                Some((kw, rest)) => (kw, rest.trim()),
                None => (directive, ""),
            };
            match keyword {
                "mag" => {
                    if named || section != Section::Start {
                        return Err(syntax("`*mag` must appear once, before any section".into()));
                    }
                    named = true;
                    doc.name = arg.to_string();
                }
                "aspect" => {
                    if section == Section::Edges {
                        return Err(syntax("`*aspect` after `*edges`".into()));
                    }
                    if arg.is_empty() {
                        return Err(syntax("`*aspect` needs a name".into()));
                    }
                    doc.aspects.push(AspectRecord {
                        name: arg.to_string(),
                        line,
                        elements: Vec::new(),
                    });
                    section = Section::Aspect;
                }
                "edges" => {
                    if section == Section::Edges {
                        return Err(syntax("duplicate `*edges` section".into()));
                    }
                    if !arg.is_empty() {
                        return Err(syntax("`*edges` takes no argument".into()));
                    }
                    section = Section::Edges;
                }
                other => return Err(syntax(format!("unknown directive `*{other}`"))),
            }
            continue;
        }
        match section {
            Section::Start => return Err(syntax("content before any `*aspect` or `*edges` section".into())),
            Section::Aspect => doc.aspects.last_mut().unwrap().elements.push(content.to_string()),
            Section::Edges => doc.edges.push(parse_edge(content, line)?),
        }
    }
    Ok(doc)
}

fn parse_edge(content: &str, line: usize) -> Result<EdgeRecord> {
    let syntax = |message: String| MagError::Syntax { line, message };
    let (origin, rest) = content
        .split_once("->")
        .ok_or_else(|| syntax("edge line needs `->`".into()))?;
    let (destination, weight) = match rest.split_once(':') {
        Some((d, w)) => {
            let w = w.trim();
            let weight: f64 = w.parse().map_err(|_| syntax(format!("invalid weight `{w}`")))?;
            (d, Some(weight))
        }
        None => (rest, None),
    };
    if destination.contains("->") {
        return Err(syntax("edge line has more than one `->`".into()));
    }
    let labels = |s: &str| s.split(',').map(|l| l.trim().to_string()).collect::<Vec<_>>();
    Ok(EdgeRecord {
        origin: labels(origin),
        destination: labels(destination),
        weight,
        line,
    })
}

impl MagDocument {
    /// Validates the document into a [`Mag`]. Errors carry the line of the
    /// offending aspect or edge.
    pub fn build(&self) -> Result<Mag> {
        let at = |line: usize| move |e: MagError| MagError::AtLine { line, source: Box::new(e) };
        let aspects = self
            .aspects
            .iter()
            .map(|a| Aspect::new(a.name.clone(), a.elements.iter().cloned()).map_err(at(a.line)))
            .collect::<Result<Vec<_>>>()?;
        let first_line = self.aspects.first().map_or(1, |a| a.line);
        let aspects = AspectList::new(aspects).map_err(|e| {
            let line = match &e {
                MagError::NoAspects => return e,
                MagError::DuplicateAspect(name) => self
                    .aspects
                    .iter()
                    .filter(|a| &a.name == name)
                    .nth(1)
                    .map_or(first_line, |a| a.line),
                _ => first_line,
            };
            at(line)(e)
        })?;
        let p = aspects.order();
        for e in &self.edges {
            if e.origin.len() != p || e.destination.len() != p {
                return Err(at(e.line)(MagError::EdgeArityMismatch {
                    edge: 0,
                    expected: 2 * p,
                    found: e.origin.len() + e.destination.len(),
                }));
            }
        }
        let edges = self.edges.iter().map(|e| {
            let edge = LabeledEdge::new(e.origin.iter().chain(&e.destination).cloned());
            match e.weight {
                Some(w) => edge.weighted(w),
                None => edge,
            }
        });
        Mag::build(self.name.clone(), aspects, edges).map_err(|e| {
            let line = match &e {
                MagError::SelfLoopEdge { edge }
                | MagError::UnknownElement { edge, .. }
                | MagError::DuplicateEdge { edge, .. }
                | MagError::EdgeArityMismatch { edge, .. }
                | MagError::NonPositiveWeight { edge, .. } => self.edges[*edge].line,
                _ => first_line,
            };
            at(line)(e)
        })
    }
}

pub fn parse_mag(text: &str) -> Result<Mag> {
    parse_mag_document(text)?.build()
}

/// Serializes a MAG so that [`parse_mag`] returns an identical value.
/// Weights equal to 1 are omitted.
pub fn write_mag(mag: &Mag) -> String {
    let mut out = String::new();
    let name = mag.name();
    if name.is_empty() {
        out.push_str("*mag\n");
    } else {
        let _ = writeln!(out, "*mag {name}");
    }
    for a in mag.aspects().aspects() {
        let _ = writeln!(out, "*aspect {}", a.name());
        for e in a.elements() {
            let _ = writeln!(out, "{e}");
        }
    }
    out.push_str("*edges\n");
    let aspects = mag.aspects();
    for e in mag.edges() {
        let _ = write!(
            out,
            "{} -> {}",
            aspects.labels(&e.origin).join(","),
            aspects.labels(&e.destination).join(",")
        );
        if e.weight != 1.0 {
            let _ = write!(out, " : {}", e.weight);
        }
        out.push('\n');
    }
    out
}
