//! Sub-determination of composite vertices, edges and whole MAGs.

use crate::error::Result;
use crate::index::SubDetermination;
use crate::model::{CompositeVertex, Mag, MagEdge};

/// `S_ζ`: keeps the aspects selected by `zeta`, in their original order.
pub fn sub_determine_vertex(v: &CompositeVertex, zeta: SubDetermination) -> Result<CompositeVertex> {
    zeta.check_order(v.order())?;
    Ok(CompositeVertex::new(
        zeta.kept().into_iter().map(|i| v.indices()[i]).collect(),
    ))
}

/// `E_ζ`: sub-determines both endpoints. Returns `None` when the result
/// would be a self-loop, which a MAG cannot hold.
pub fn sub_determine_edge(e: &MagEdge, zeta: SubDetermination) -> Result<Option<MagEdge>> {
    let origin = sub_determine_vertex(&e.origin, zeta)?;
    let destination = sub_determine_vertex(&e.destination, zeta)?;
    if origin == destination {
        return Ok(None);
    }
    Ok(Some(MagEdge {
        origin,
        destination,
        weight: e.weight,
    }))
}

/// `M_ζ(H)`: the MAG over the kept aspects whose edges are the image of
/// `E_ζ`, with self-loops dropped and parallel edges collapsed into the
/// first occurrence. Collapsed edges get weight 1; edge multiplicities are
/// only available from the sub-determined adjacency matrix.
pub fn sub_determine_mag(mag: &Mag, zeta: SubDetermination) -> Result<Mag> {
    zeta.check_order(mag.order())?;
    let aspects = mag.aspects().select(&zeta.kept())?;
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::new();
    for e in mag.edges() {
        if let Some(sub) = sub_determine_edge(e, zeta)? {
            if seen.insert((sub.origin.clone(), sub.destination.clone())) {
                edges.push(MagEdge::new(sub.origin, sub.destination));
            }
        }
    }
    Mag::from_numeric(mag.name(), aspects, edges)
}
