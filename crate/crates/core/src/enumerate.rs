//! Every topology on a small universe, via specialization preorders.
//!
//! A finite topology is determined by the minimal open neighbourhood `U_x`
//! of each point, and a vector `(U_x)` arises from a topology exactly when
//! `x ∈ U_x` and `y ∈ U_x ⇒ U_y ⊆ U_x` (reflexive and transitive). The
//! opens are then the up-closed sets: `A` is open iff `U_x ⊆ A` for all
//! `x ∈ A`.

use crate::error::{Error, Result};
use crate::mask::{SubsetFamily, SubsetMask, Universe};
use crate::space::Topology;

/// Largest universe [`enumerate_topologies`] accepts.
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// All topologies on `{a, b, ...}` with `n` points, each exactly once.
///
/// Order is lexicographic on the neighbourhood vector `(U_a, U_b, ...)`,
/// each `U_x` compared as a mask. The returned iterator owns its items, so
/// restarting means calling again and sharding means `skip`/`take`.
pub fn enumerate_topologies(n: usize) -> Result<std::vec::IntoIter<Topology>> {
    Ok(topologies(n)?.into_iter())
}

pub fn topologies(n: usize) -> Result<Vec<Topology>> {
    let universe = check_size(n)?;
    let mut out = Vec::new();
    let mut rows = vec![SubsetMask::EMPTY; n];
    search(n, 0, &mut rows, &mut |rows| {
        let opens = up_closed_sets(n, rows);
        out.push(Topology::from_valid_family(universe.clone(), opens));
    });
    Ok(out)
}

/// Number of topologies on `n` points, without building them.
pub fn count_topologies(n: usize) -> Result<usize> {
    check_size(n)?;
    let mut count = 0;
    let mut rows = vec![SubsetMask::EMPTY; n];
    search(n, 0, &mut rows, &mut |_| count += 1);
    Ok(count)
}

/// Minimal open neighbourhoods `(U_x)` of a topology; `y ∈ U_x` iff `x ≤ y`
/// in the specialization preorder.
pub fn specialization_rows(topology: &Topology) -> Vec<SubsetMask> {
    (0..topology.size())
        .map(|x| topology.minimal_neighbourhood(x))
        .collect()
}

fn check_size(n: usize) -> Result<Universe> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::UniverseTooLarge {
            got: n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    Universe::standard(n)
}

fn search(n: usize, x: usize, rows: &mut [SubsetMask], emit: &mut dyn FnMut(&[SubsetMask])) {
    if x == n {
        emit(rows);
        return;
    }
    for row in SubsetMask::singleton(x).supersets(n) {
        let consistent = (0..x).all(|y| {
            (!rows[y].contains(x) || row.is_subset_of(rows[y]))
                && (!row.contains(y) || rows[y].is_subset_of(row))
        });
        if consistent {
            rows[x] = row;
            search(n, x + 1, rows, emit);
        }
    }
}

fn up_closed_sets(n: usize, rows: &[SubsetMask]) -> SubsetFamily {
    SubsetMask::all(n)
        .filter(|a| a.points().all(|x| rows[x].is_subset_of(*a)))
        .collect()
}
