use crate::error::{MagError, Result};
use crate::model::{Aspect, AspectList, Mag, MagEdge};

/// Edges of the transit example as `(origin, destination)` numerical
/// representations over `(3, 2, 3)`. The first six are the mode transfers.
const T_EDGES: [(usize, usize); 22] = [
    (2, 5),
    (5, 2),
    (8, 11),
    (11, 8),
    (14, 17),
    (17, 14),
    (2, 8),
    (3, 9),
    (4, 10),
    (5, 11),
    (8, 14),
    (9, 15),
    (10, 16),
    (11, 17),
    (2, 9),
    (3, 8),
    (4, 11),
    (5, 10),
    (8, 15),
    (9, 14),
    (10, 17),
    (11, 16),
];

const T_TRANSFER_WEIGHT: f64 = 0.5;

const R_EDGES: [(usize, usize); 5] = [(1, 4), (2, 3), (2, 5), (3, 6), (4, 5)];

/// The builtin example MAGs:
///
/// * `T`: a small transit network over aspects Location `{1,2,3}`, Mode
///   `{Bus,Subway}` and Time `{t1,t2,t3}`, with 22 edges. Mode transfers
///   carry weight 0.5, every other edge weight 1.
/// * `R`: a 3x2 MAG with five edges whose sub-determination to its first
///   aspect has a path that the original MAG lacks.
pub fn builtin_example(name: &str) -> Result<Mag> {
    match name {
        "T" => {
            let aspects = AspectList::new(vec![
                Aspect::new("Location", ["1", "2", "3"])?,
                Aspect::new("Mode", ["Bus", "Subway"])?,
                Aspect::new("Time", ["t1", "t2", "t3"])?,
            ])?;
            let edges = numeric_edges(&aspects, &T_EDGES, |k| if k < 6 { T_TRANSFER_WEIGHT } else { 1.0 })?;
            Mag::from_numeric("T", aspects, edges)
        }
        "R" => {
            let aspects = AspectList::new(vec![
                Aspect::new("Node", ["1", "2", "3"])?,
                Aspect::new("Layer", ["1", "2"])?,
            ])?;
            let edges = numeric_edges(&aspects, &R_EDGES, |_| 1.0)?;
            Mag::from_numeric("R", aspects, edges)
        }
        other => Err(MagError::UnknownExample(other.to_string())),
    }
}

fn numeric_edges(
    aspects: &AspectList,
    pairs: &[(usize, usize)],
    weight: impl Fn(usize) -> f64,
) -> Result<Vec<MagEdge>> {
    let tau = aspects.companion_tuple();
    pairs
        .iter()
        .enumerate()
        .map(|(k, &(o, d))| Ok(MagEdge::new(tau.vertex_at(o)?, tau.vertex_at(d)?).with_weight(weight(k))))
        .collect()
}
