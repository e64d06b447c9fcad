//! Diameter and radius by breadth-first search from every vertex.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(diameter, radius)` of a connected graph.
pub fn diameter_radius(g: &Graph) -> Result<(usize, usize)> {
    if g.n() == 0 {
        return Err(Error::Precondition("the empty graph has no eccentricities".into()));
    }
    let (mut diam, mut rad) = (0, usize::MAX);
    for v in 0..g.n() {
        let mut ecc = 0;
        for d in g.bfs_distances(v) {
            ecc = ecc.max(d.ok_or(Error::Disconnected)?);
        }
        diam = diam.max(ecc);
        rad = rad.min(ecc);
    }
    Ok((diam, rad))
}
