//! Local graphs compared up to color-preserving isomorphism.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color};
use crate::iso::{canonical_form, Certificate};

/// Certificates of the local graphs of one graph, split by vertex color.
#[derive(Debug, Clone)]
pub struct LocalProfile {
    pub homogeneous: bool,
    pub short_local: Option<Certificate>,
    pub long_local: Option<Certificate>,
    /// First short and first long vertex, whose local graphs the
    /// certificates describe.
    pub short_vertex: Option<usize>,
    pub long_vertex: Option<usize>,
    /// Two vertices of one color with non-isomorphic local graphs.
    pub witness: Option<(usize, usize)>,
}

fn local_certificates(g: &BichromaticGraph) -> Result<Vec<Certificate>> {
    (0..g.len())
        .into_par_iter()
        .map(|v| canonical_form(&g.local_graph(v).graph))
        .collect()
}

pub fn local_profile(g: &BichromaticGraph) -> Result<LocalProfile> {
    let certs = local_certificates(g)?;
    let first = |c: Color| (0..g.len()).find(|&v| g.color(v) == c);
    let (short_vertex, long_vertex) = (first(Color::Short), first(Color::Long));
    let mut witness = None;
    for rep in [short_vertex, long_vertex].into_iter().flatten() {
        let c = g.color(rep);
        if let Some(w) = (rep + 1..g.len()).find(|&w| g.color(w) == c && certs[w] != certs[rep]) {
            witness = Some(witness.map_or((rep, w), |old: (usize, usize)| old.min((rep, w))));
        }
    }
    Ok(LocalProfile {
        homogeneous: witness.is_none(),
        short_local: short_vertex.map(|v| certs[v].clone()),
        long_local: long_vertex.map(|v| certs[v].clone()),
        short_vertex,
        long_vertex,
        witness,
    })
}

/// Expected local graphs per color. A missing entry means vertices of that
/// color are not allowed.
#[derive(Debug, Clone)]
pub struct LocalTarget {
    short: Option<Certificate>,
    long: Option<Certificate>,
}

/// Outcome of a locally-like check; `witness` is the first failing vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalCheck {
    pub holds: bool,
    pub witness: Option<usize>,
}

impl LocalTarget {
    pub fn new(short: Option<&BichromaticGraph>, long: Option<&BichromaticGraph>) -> Result<Self> {
        Ok(LocalTarget {
            short: short.map(canonical_form).transpose()?,
            long: long.map(canonical_form).transpose()?,
        })
    }

    /// The local graphs of a locally homogeneous reference graph.
    pub fn of(reference: &BichromaticGraph) -> Result<Self> {
        let p = local_profile(reference)?;
        if let Some((a, b)) = p.witness {
            return Err(Error::structure(
                "reference graph is not locally homogeneous",
                vec![a, b],
            ));
        }
        Ok(LocalTarget {
            short: p.short_local,
            long: p.long_local,
        })
    }

    pub fn check(&self, g: &BichromaticGraph) -> Result<LocalCheck> {
        let failures: Vec<bool> = (0..g.len())
            .into_par_iter()
            .map(|v| {
                let target = match g.color(v) {
                    Color::Short => &self.short,
                    Color::Long => &self.long,
                };
                let Some(target) = target else {
                    return Ok(true);
                };
                let local = g.local_graph(v).graph;
                // cheap size test before canonical labeling
                if local.len() != target.order().len() {
                    return Ok(true);
                }
                Ok(canonical_form(&local)? != *target)
            })
            .collect::<Result<_>>()?;
        let witness = failures.iter().position(|&f| f);
        Ok(LocalCheck {
            holds: witness.is_none(),
            witness,
        })
    }
}

/// Whether every short local graph is isomorphic to `short` and every long
/// one to `long`.
pub fn is_locally_like(
    g: &BichromaticGraph,
    short: Option<&BichromaticGraph>,
    long: Option<&BichromaticGraph>,
) -> Result<LocalCheck> {
    LocalTarget::new(short, long)?.check(g)
}
