//! The MAG data model: aspects, composite vertices, edges and the validated
//! [`Mag`] itself.

use std::collections::HashMap;
use std::fmt;

use crate::error::{MagError, Result};
use crate::index::CompanionTuple;

/// Returns true when `label` can be used as an aspect/element label or name.
///
/// Labels are non-empty, carry no surrounding whitespace, never start with
/// `*`, and contain none of `,`, `:`, `#`, `->` or line breaks.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label.trim() == label
        && !label.starts_with('*')
        && !label.contains([',', ':', '#', '\n', '\r'])
        && !label.contains("->")
}

/// One aspect: a name and an ordered list of unique element labels.
///
/// The zero-based position of an element is its numerical index.
#[derive(Debug, Clone, PartialEq)]
pub struct Aspect {
    name: String,
    elements: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Aspect {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        elements: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let name = name.into();
        if !is_valid_label(&name) {
            return Err(MagError::InvalidLabel(name));
        }
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(MagError::EmptyAspect(name));
        }
        let mut lookup = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if !is_valid_label(e) {
                return Err(MagError::InvalidLabel(e.clone()));
            }
            if lookup.insert(e.clone(), i).is_some() {
                return Err(MagError::DuplicateElement {
                    aspect: name,
                    element: e.clone(),
                });
            }
        }
        Ok(Aspect {
            name,
            elements,
            lookup,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }
}

/// Ordered list of aspects with unique names. Never empty.
#[derive(Debug, Clone, PartialEq)]
pub struct AspectList {
    aspects: Vec<Aspect>,
}

impl AspectList {
    pub fn new(aspects: Vec<Aspect>) -> Result<Self> {
        if aspects.is_empty() {
            return Err(MagError::NoAspects);
        }
        for (i, a) in aspects.iter().enumerate() {
            if aspects[..i].iter().any(|b| b.name == a.name) {
                return Err(MagError::DuplicateAspect(a.name.clone()));
            }
        }
        Ok(AspectList { aspects })
    }

    pub fn aspects(&self) -> &[Aspect] {
        &self.aspects
    }

    /// The MAG order `p`.
    pub fn order(&self) -> usize {
        self.aspects.len()
    }

    /// Sublist of aspects at the given zero-based positions.
    pub fn select(&self, positions: &[usize]) -> Result<AspectList> {
        AspectList::new(positions.iter().map(|&i| self.aspects[i].clone()).collect())
    }

    /// Converts element labels (one per aspect) into a numerical tuple.
    pub fn vertex<S: AsRef<str>>(&self, labels: &[S]) -> Result<CompositeVertex> {
        if labels.len() != self.order() {
            return Err(MagError::UnknownVertex(join(labels)));
        }
        labels
            .iter()
            .zip(&self.aspects)
            .map(|(l, a)| {
                a.index_of(l.as_ref().trim())
                    .ok_or_else(|| MagError::UnknownVertex(join(labels)))
            })
            .collect::<Result<Vec<_>>>()
            .map(CompositeVertex)
    }

    /// Parses comma-separated labels such as `"2,Bus,t1"`.
    pub fn parse_vertex(&self, text: &str) -> Result<CompositeVertex> {
        let labels: Vec<&str> = text.split(',').map(str::trim).collect();
        self.vertex(&labels)
    }

    /// Element labels of a numerical tuple.
    pub fn labels(&self, v: &CompositeVertex) -> Vec<&str> {
        v.0.iter()
            .zip(&self.aspects)
            .map(|(&i, a)| a.elements[i].as_str())
            .collect()
    }
}

fn join<S: AsRef<str>>(labels: &[S]) -> String {
    labels
        .iter()
        .map(AsRef::as_ref)
        .collect::<Vec<_>>()
        .join(",")
}

/// A composite vertex in numerical form: one zero-based element index per
/// aspect, in aspect order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositeVertex(Vec<usize>);

impl CompositeVertex {
    pub fn new(indices: Vec<usize>) -> Self {
        CompositeVertex(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for CompositeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A directed MAG edge between two distinct composite vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct MagEdge {
    pub origin: CompositeVertex,
    pub destination: CompositeVertex,
    pub weight: f64,
}

impl MagEdge {
    pub fn new(origin: CompositeVertex, destination: CompositeVertex) -> Self {
        MagEdge {
            origin,
            destination,
            weight: 1.0,
        }
    }

    pub fn with_weight(mut self, weight: f64) -> Self {
        self.weight = weight;
        self
    }
}

/// An edge given by labels: `2p` element labels (origin then destination)
/// and an optional weight.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledEdge {
    pub labels: Vec<String>,
    pub weight: Option<f64>,
}

impl LabeledEdge {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        LabeledEdge {
            labels: labels.into_iter().map(Into::into).collect(),
            weight: None,
        }
    }

    pub fn weighted(mut self, weight: f64) -> Self {
        self.weight = Some(weight);
        self
    }
}

/// A validated MultiAspect Graph `H = (A, E)`.
///
/// Edges keep their insertion order, which is also their edge id in the
/// incidence matrix and in weight vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Mag {
    name: String,
    aspects: AspectList,
    edges: Vec<MagEdge>,
}

impl Mag {
    /// Builds a MAG from labeled edges, rejecting self-loops, unknown labels,
    /// wrong arities and duplicates.
    pub fn build(
        name: impl Into<String>,
        aspects: AspectList,
        edges: impl IntoIterator<Item = LabeledEdge>,
    ) -> Result<Mag> {
        let p = aspects.order();
        let mut numeric = Vec::new();
        for (k, e) in edges.into_iter().enumerate() {
            if e.labels.len() != 2 * p {
                return Err(MagError::EdgeArityMismatch {
                    edge: k,
                    expected: 2 * p,
                    found: e.labels.len(),
                });
            }
            let mut idx = Vec::with_capacity(2 * p);
            for (j, label) in e.labels.iter().enumerate() {
                let aspect = &aspects.aspects[j % p];
                let label = label.trim();
                match aspect.index_of(label) {
                    Some(i) => idx.push(i),
                    None => {
                        return Err(MagError::UnknownElement {
                            edge: k,
                            aspect: aspect.name.clone(),
                            element: label.to_string(),
                        })
                    }
                }
            }
            let destination = CompositeVertex(idx.split_off(p));
            let edge = MagEdge::new(CompositeVertex(idx), destination);
            numeric.push(match e.weight {
                Some(w) => edge.with_weight(w),
                None => edge,
            });
        }
        Mag::from_numeric(name, aspects, numeric)
    }

    /// Builds a MAG from edges already in numerical form.
    pub fn from_numeric(
        name: impl Into<String>,
        aspects: AspectList,
        edges: Vec<MagEdge>,
    ) -> Result<Mag> {
        let name = name.into();
        if !name.is_empty() && !is_valid_label(&name) {
            return Err(MagError::InvalidLabel(name));
        }
        let tau = aspects.companion_tuple();
        let mut seen: HashMap<(usize, usize), usize> = HashMap::with_capacity(edges.len());
        for (k, e) in edges.iter().enumerate() {
            if e.origin.order() != tau.order() || e.destination.order() != tau.order() {
                return Err(MagError::EdgeArityMismatch {
                    edge: k,
                    expected: 2 * tau.order(),
                    found: e.origin.order() + e.destination.order(),
                });
            }
            let o = tau.index_of(&e.origin.0)?;
            let d = tau.index_of(&e.destination.0)?;
            if o == d {
                return Err(MagError::SelfLoopEdge { edge: k });
            }
            if !(e.weight > 0.0 && e.weight.is_finite()) {
                return Err(MagError::NonPositiveWeight {
                    edge: k,
                    weight: e.weight,
                });
            }
            if let Some(&first) = seen.get(&(o, d)) {
                return Err(MagError::DuplicateEdge { edge: k, first });
            }
            seen.insert((o, d), k);
        }
        Ok(Mag {
            name,
            aspects,
            edges,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn aspects(&self) -> &AspectList {
        &self.aspects
    }

    pub fn edges(&self) -> &[MagEdge] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.aspects.order()
    }

    /// Companion tuple `τ(H)`: the size of every aspect.
    pub fn companion_tuple(&self) -> CompanionTuple {
        self.aspects.companion_tuple()
    }

    /// Number of composite vertices `|𝕍(H)|`.
    pub fn vertex_count(&self) -> usize {
        self.companion_tuple().vertex_count()
    }

    /// Edge weights in edge-id order.
    pub fn weights(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.weight).collect()
    }

    /// 1-based (origin, destination) numerical representations of every
    /// edge, in edge-id order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let tau = self.companion_tuple();
        self.edges
            .iter()
            .map(|e| {
                // endpoints were validated at construction
                (
                    tau.index_of(&e.origin.0).expect("validated origin"),
                    tau.index_of(&e.destination.0).expect("validated destination"),
                )
            })
            .collect()
    }
}

impl AspectList {
    pub fn companion_tuple(&self) -> CompanionTuple {
        CompanionTuple::new(self.aspects.iter().map(Aspect::len).collect())
    }
}
