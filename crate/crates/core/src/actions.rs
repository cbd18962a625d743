//! Cyclic rotation actions, fixed points and orbits.
//!
//! The generator always sends point `i` to `i + 1`, wrapping the last point
//! to 1. Rotating by `s` applies the generator `s` times; negative `s` rotates
//! the other way.

use rayon::prelude::*;

use crate::objects::{
    configuration_ground, CatalanObject, Configuration, Family, Matching, Triangulation,
};
use crate::{Error, Result};

/// An object carrying a rotation action on its labeled points.
pub trait CyclicObject: Clone + Ord + Send + Sync {
    /// Number of rotated points; rotation by `s` depends on `s` modulo this.
    fn period(&self) -> usize;

    fn rotate(&self, s: i64) -> Self;

    /// The family's validity predicate (disjointness, noncrossing, canonical form).
    fn is_valid(&self) -> bool;
}

fn relabel(point: usize, s: usize, m: usize) -> usize {
    (point - 1 + s) % m + 1
}

fn reduce(s: i64, m: usize) -> usize {
    s.rem_euclid(m as i64) as usize
}

fn rotate_pairs(pairs: &[(usize, usize)], s: usize, m: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = pairs
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (relabel(i, s, m), relabel(j, s, m));
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

pub fn rotate_configuration(f: &Configuration, s: i64) -> Configuration {
    let m = f.ground_size();
    if m == 0 {
        return f.clone();
    }
    let s = reduce(s, m);
    let mut balls: Vec<_> = f.balls().iter().map(|&b| relabel(b, s, m)).collect();
    balls.sort_unstable();
    Configuration::from_canonical_parts(m, balls, rotate_pairs(f.arcs(), s, m))
}

pub fn rotate_matching(matching: &Matching, s: i64) -> Matching {
    let m = 2 * matching.n();
    if m == 0 {
        return matching.clone();
    }
    Matching::from_canonical_parts(matching.n(), rotate_pairs(matching.arcs(), reduce(s, m), m))
}

pub fn rotate_triangulation(t: &Triangulation, s: i64) -> Triangulation {
    let m = t.gon();
    Triangulation::new(m, rotate_pairs(t.diagonals(), reduce(s, m), m))
        .expect("rotation preserves triangulations")
}

impl CyclicObject for Configuration {
    fn period(&self) -> usize {
        self.ground_size()
    }

    fn rotate(&self, s: i64) -> Self {
        rotate_configuration(self, s)
    }

    fn is_valid(&self) -> bool {
        Configuration::is_valid(self)
    }
}

impl CyclicObject for Matching {
    fn period(&self) -> usize {
        2 * self.n()
    }

    fn rotate(&self, s: i64) -> Self {
        rotate_matching(self, s)
    }

    fn is_valid(&self) -> bool {
        Matching::is_valid(self)
    }
}

impl CyclicObject for Triangulation {
    fn period(&self) -> usize {
        self.gon()
    }

    fn rotate(&self, s: i64) -> Self {
        rotate_triangulation(self, s)
    }

    fn is_valid(&self) -> bool {
        Triangulation::is_valid(self)
    }
}

impl CyclicObject for CatalanObject {
    fn period(&self) -> usize {
        match self {
            CatalanObject::Configuration(c) => c.period(),
            CatalanObject::Matching(m) => m.period(),
            CatalanObject::Triangulation(t) => t.period(),
        }
    }

    fn rotate(&self, s: i64) -> Self {
        match self {
            CatalanObject::Configuration(c) => CatalanObject::Configuration(c.rotate(s)),
            CatalanObject::Matching(m) => CatalanObject::Matching(m.rotate(s)),
            CatalanObject::Triangulation(t) => CatalanObject::Triangulation(t.rotate(s)),
        }
    }

    fn is_valid(&self) -> bool {
        match self {
            CatalanObject::Configuration(c) => CyclicObject::is_valid(c),
            CatalanObject::Matching(m) => CyclicObject::is_valid(m),
            CatalanObject::Triangulation(t) => CyclicObject::is_valid(t),
        }
    }
}

/// The rotation group acting on the family of Catalan index `n`.
///
/// Group orders: `n - 1` on configurations of `[n-1]`, `2n` on matchings of
/// `[2n]`, `n + 2` on triangulations of the `(n+2)`-gon. An empty ground set
/// gets the trivial group of order 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    pub family: Family,
    pub n: usize,
    pub ground_size: usize,
    pub order: usize,
}

impl CyclicAction {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let ground_size = match family {
            Family::Configuration => configuration_ground(n)?,
            Family::Matching => 2 * n,
            Family::Triangulation if n == 0 => {
                return Err(Error::Domain("triangulations are indexed by n >= 1".into()));
            }
            Family::Triangulation => n + 2,
        };
        Ok(CyclicAction {
            family,
            n,
            ground_size,
            order: ground_size.max(1),
        })
    }
}

/// Number of objects with `g^k(x) = x`.
pub fn count_fixed<T: CyclicObject>(objects: &[T], k: i64) -> u64 {
    objects.par_iter().filter(|x| x.rotate(k) == **x).count() as u64
}

/// Fixed points of `g^k` on the family of Catalan index `n`, by enumeration.
pub fn fixed_point_count(family: Family, n: usize, k: i64) -> Result<u64> {
    CyclicAction::new(family, n)?;
    Ok(count_fixed(&family.enumerate(n, None)?, k))
}

/// Splits a sorted, rotation-closed list into orbits under the generator.
///
/// Each orbit lists its smallest element first followed by successive images.
/// Panics if some image is missing from `objects`.
pub fn orbits<T: CyclicObject>(objects: &[T]) -> Vec<Vec<T>> {
    orbits_with(objects, |x| x.rotate(1)).expect("object set must be closed under rotation")
}

/// Orbits of a sorted list under an arbitrary permutation `step`.
///
/// Fails if `step` leaves the list or is not injective on it.
pub fn orbits_with<T, F>(objects: &[T], step: F) -> Result<Vec<Vec<T>>>
where
    T: Ord + Clone,
    F: Fn(&T) -> T,
{
    debug_assert!(objects.windows(2).all(|w| w[0] < w[1]));
    let not_closed = || Error::Domain("object set is not permuted by the action".into());
    let mut seen = vec![false; objects.len()];
    let mut out = Vec::new();
    for start in 0..objects.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut idx = start;
        while !seen[idx] {
            seen[idx] = true;
            orbit.push(objects[idx].clone());
            idx = objects
                .binary_search(&step(&objects[idx]))
                .map_err(|_| not_closed())?;
        }
        if idx != start {
            return Err(not_closed());
        }
        out.push(orbit);
    }
    Ok(out)
}

pub fn orbit_decomposition(family: Family, n: usize) -> Result<Vec<Vec<CatalanObject>>> {
    CyclicAction::new(family, n)?;
    Ok(orbits(&family.enumerate(n, None)?))
}
