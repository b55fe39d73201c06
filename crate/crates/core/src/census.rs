//! Brute-force counts on an explicit diagram.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::UndirectedGraph;
use crate::lattice::{filter_lattice, LatticeDiagram, Reachability};
use crate::poly::IntPoly;
use crate::poset::Poset;

/// Largest diagram whose cubes [`enumerate_cubes`] will list.
pub const MAX_CUBE_VERTICES: usize = 1 << 15;

/// Limits for [`generic_cube_count`].
pub const MAX_GENERIC_VERTICES: usize = 64;
pub const MAX_GENERIC_DIM: usize = 4;

/// A Boolean interval `[bottom, top]` whose atoms cover `bottom`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeInterval {
    pub bottom: usize,
    pub top: usize,
    pub dim: usize,
    pub atoms: Vec<usize>,
}

fn counts_poly(values: impl Iterator<Item = usize>) -> IntPoly {
    let mut counts = Vec::new();
    for d in values {
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    IntPoly::from_counts(&counts)
}

pub fn rank_polynomial(l: &LatticeDiagram) -> IntPoly {
    counts_poly((0..l.len()).map(|v| l.rank(v)))
}

pub fn degree_polynomial(l: &LatticeDiagram) -> IntPoly {
    counts_poly((0..l.len()).map(|v| l.indegree(v) + l.outdegree(v)))
}

/// `Σ x^{#covers of v}`.
pub fn indegree_polynomial(l: &LatticeDiagram) -> IntPoly {
    counts_poly((0..l.len()).map(|v| l.indegree(v)))
}

/// `Σ x^{#elements v covers}`.
pub fn outdegree_polynomial(l: &LatticeDiagram) -> IntPoly {
    counts_poly((0..l.len()).map(|v| l.outdegree(v)))
}

/// Every cube of the diagram, grouped by bottom vertex and then by atom
/// mask over `up(bottom)` in increasing order.
///
/// A cube grows one atom at a time: adding atom `s` to a cube with top `j`
/// gives the unique cover of `j` above `s`. Anything other than exactly
/// one such cover means the diagram is not distributive at that spot.
pub fn enumerate_cubes(l: &LatticeDiagram) -> Result<Vec<CubeInterval>> {
    Ok(CubeTable::build(l)?.cubes)
}

struct CubeTable {
    cubes: Vec<CubeInterval>,
    /// Atom mask of each cube over `up(bottom)`.
    masks: Vec<u64>,
    /// `(bottom, mask)` to index into `cubes`.
    by_mask: HashMap<(usize, u64), usize>,
}

impl CubeTable {
    fn build(l: &LatticeDiagram) -> Result<Self> {
        if l.len() > MAX_CUBE_VERTICES {
            return Err(Error::Capacity {
                what: "diagram for cube enumeration",
                size: l.len(),
                limit: MAX_CUBE_VERTICES,
            });
        }
        let reach = l.reachability();
        let mut cubes = Vec::new();
        let mut masks = Vec::new();
        let mut by_mask = HashMap::new();
        for a in 0..l.len() {
            let up = l.up(a);
            if up.len() >= 64 {
                return Err(Error::Capacity {
                    what: "covers of one vertex",
                    size: up.len(),
                    limit: 63,
                });
            }
            // Masks in increasing order: each one extends `mask & (mask - 1)`.
            let mut tops = vec![a; 1usize << up.len()];
            for mask in 1u64..(1 << up.len()) {
                let low = mask.trailing_zeros() as usize;
                let rest = mask & (mask - 1);
                let top = if rest == 0 {
                    up[low]
                } else {
                    join_step(l, &reach, tops[rest as usize], up[low])?
                };
                tops[mask as usize] = top;
            }
            for (mask, &top) in tops.iter().enumerate() {
                let atoms: Vec<usize> = (0..up.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| up[i])
                    .collect();
                by_mask.insert((a, mask as u64), cubes.len());
                masks.push(mask as u64);
                cubes.push(CubeInterval {
                    bottom: a,
                    top,
                    dim: atoms.len(),
                    atoms,
                });
            }
        }
        Ok(Self {
            cubes,
            masks,
            by_mask,
        })
    }
}

fn join_step(l: &LatticeDiagram, reach: &Reachability, j: usize, s: usize) -> Result<usize> {
    let mut hits = l.up(j).iter().filter(|&&u| reach.leq(s, u));
    match (hits.next(), hits.next()) {
        (Some(&u), None) => Ok(u),
        _ => Err(Error::InvalidLattice(format!(
            "vertex {j} has no unique cover above {s}"
        ))),
    }
}

pub fn cube_polynomial(l: &LatticeDiagram) -> Result<IntPoly> {
    Ok(counts_poly(enumerate_cubes(l)?.iter().map(|c| c.dim)))
}

/// Cubes not contained in a larger cube.
///
/// A cube inside a larger one is inside one of dimension one more, as a
/// facet. Each `(k+1)`-cube `(a, S)` marks its lower facets `(a, S ∖ s)`
/// and its upper facets `[s, top]`.
pub fn maximal_cubes(l: &LatticeDiagram) -> Result<Vec<CubeInterval>> {
    let table = CubeTable::build(l)?;
    let mut covered: HashSet<(usize, usize)> = HashSet::new();
    for (c, &mask) in table.cubes.iter().zip(&table.masks) {
        for bit in 0..64 {
            if mask >> bit & 1 == 1 {
                let lower = &table.cubes[table.by_mask[&(c.bottom, mask & !(1 << bit))]];
                covered.insert((lower.bottom, lower.top));
            }
        }
        for &s in &c.atoms {
            covered.insert((s, c.top));
        }
    }
    Ok(table
        .cubes
        .into_iter()
        .filter(|c| !covered.contains(&(c.bottom, c.top)))
        .collect())
}

pub fn maximal_cube_polynomial(l: &LatticeDiagram) -> Result<IntPoly> {
    Ok(counts_poly(maximal_cubes(l)?.iter().map(|c| c.dim)))
}

/// Maximal cubes by comparing every pair of cubes; quadratic, for checks.
pub fn maximal_cube_polynomial_exhaustive(l: &LatticeDiagram) -> Result<IntPoly> {
    let cubes = enumerate_cubes(l)?;
    let reach = l.reachability();
    let inside = |c: &CubeInterval, d: &CubeInterval| {
        reach.leq(d.bottom, c.bottom) && reach.leq(c.top, d.top)
    };
    Ok(counts_poly(
        cubes
            .iter()
            .filter(|c| !cubes.iter().any(|d| d.dim > c.dim && inside(c, d)))
            .map(|c| c.dim),
    ))
}

/// Number of induced subgraphs isomorphic to `Q_k`, found without using
/// any order structure: labelled embeddings of `Q_k` divided by
/// `|Aut(Q_k)| = 2^k k!`.
pub fn generic_cube_count(g: &UndirectedGraph, k: usize) -> Result<u64> {
    if g.vertex_count() > MAX_GENERIC_VERTICES {
        return Err(Error::Capacity {
            what: "graph for generic cube count",
            size: g.vertex_count(),
            limit: MAX_GENERIC_VERTICES,
        });
    }
    if k > MAX_GENERIC_DIM {
        return Err(Error::Capacity {
            what: "cube dimension for generic count",
            size: k,
            limit: MAX_GENERIC_DIM,
        });
    }
    let size = 1usize << k;
    let mut image = vec![usize::MAX; size];
    let mut used = vec![false; g.vertex_count()];
    let mut total = 0u64;
    for v in 0..g.vertex_count() {
        if g.degree(v) < k {
            continue;
        }
        image[0] = v;
        used[v] = true;
        total += embed(g, k, 1, &mut image, &mut used);
        used[v] = false;
    }
    let aut = (1..=k as u64).product::<u64>() << k;
    debug_assert_eq!(total % aut, 0);
    Ok(total / aut)
}

/// Counts extensions of `image[..i]`. Label `i` is placed next to the image
/// of `i` with its lowest set bit cleared, which is always earlier.
fn embed(g: &UndirectedGraph, k: usize, i: usize, image: &mut [usize], used: &mut [bool]) -> u64 {
    if i == image.len() {
        return 1;
    }
    let anchor = image[i & (i - 1)];
    let mut count = 0;
    for &w in g.neighbors(anchor) {
        if used[w] || g.degree(w) < k {
            continue;
        }
        let consistent = (0..i).all(|j| g.has_edge(image[j], w) == ((i ^ j).count_ones() == 1));
        if consistent {
            image[i] = w;
            used[w] = true;
            count += embed(g, k, i + 1, image, used);
            used[w] = false;
        }
    }
    count
}

/// All six census polynomials of one filter lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub vertices: usize,
    pub rank: IntPoly,
    pub cube: IntPoly,
    pub maxcube: IntPoly,
    pub degree: IntPoly,
    pub indegree: IntPoly,
    pub outdegree: IntPoly,
}

impl CensusRow {
    pub fn of_lattice(l: &LatticeDiagram) -> Result<Self> {
        Ok(Self {
            vertices: l.len(),
            rank: rank_polynomial(l),
            cube: cube_polynomial(l)?,
            maxcube: maximal_cube_polynomial(l)?,
            degree: degree_polynomial(l),
            indegree: indegree_polynomial(l),
            outdegree: outdegree_polynomial(l),
        })
    }

    pub fn of_poset(p: &Poset) -> Result<Self> {
        Self::of_lattice(&filter_lattice(p)?)
    }

    pub fn get(&self, family: Family) -> &IntPoly {
        match family {
            Family::Rank => &self.rank,
            Family::Cube => &self.cube,
            Family::MaxCube => &self.maxcube,
            Family::Degree => &self.degree,
            Family::Indegree => &self.indegree,
            Family::Outdegree => &self.outdegree,
        }
    }
}

/// One family's census polynomial, computing only what it needs.
pub fn census_poly(p: &Poset, family: Family) -> Result<IntPoly> {
    let l = filter_lattice(p)?;
    match family {
        Family::Rank => Ok(rank_polynomial(&l)),
        Family::Cube => cube_polynomial(&l),
        Family::MaxCube => maximal_cube_polynomial(&l),
        Family::Degree => Ok(degree_polynomial(&l)),
        Family::Indegree => Ok(indegree_polynomial(&l)),
        Family::Outdegree => Ok(outdegree_polynomial(&l)),
    }
}
