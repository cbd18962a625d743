//! The three Catalan families: noncrossing (1,2)-configurations, noncrossing
//! perfect matchings, and triangulations of a convex polygon.
//!
//! Every object is stored in a canonical form (sorted balls, arcs sorted by
//! first endpoint, each pair as `(low, high)`), so equality of values is
//! equality of objects. Points are labeled from 1.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Default enumeration limit on the ground set size of configurations.
pub const CONFIGURATION_GROUND_CAP: usize = 16;
/// Default enumeration limit on `n` for matchings of `[2n]`.
pub const MATCHING_CAP: usize = 8;
/// Default enumeration limit on the number of polygon vertices.
pub const TRIANGULATION_GON_CAP: usize = 12;

/// Selector for one of the Catalan families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Configuration,
    Matching,
    Triangulation,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::Configuration,
        Family::Matching,
        Family::Triangulation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Configuration => "config",
            Family::Matching => "matching",
            Family::Triangulation => "triangulation",
        }
    }

    /// The family's own size parameter for Catalan index `n` and its default cap.
    fn size_and_cap(self, n: usize) -> Result<(usize, usize)> {
        Ok(match self {
            Family::Configuration => (configuration_ground(n)?, CONFIGURATION_GROUND_CAP),
            Family::Matching => (n, MATCHING_CAP),
            Family::Triangulation => (n + 2, TRIANGULATION_GON_CAP),
        })
    }

    /// Fails with [`Error::SizeLimit`] if enumerating index `n` would exceed the cap.
    pub fn check_size(self, n: usize, cap: Option<usize>) -> Result<()> {
        let (size, default_cap) = self.size_and_cap(n)?;
        let cap = cap.unwrap_or(default_cap);
        if size > cap {
            return Err(Error::SizeLimit {
                family: self,
                size,
                cap,
            });
        }
        Ok(())
    }

    /// All objects of the family whose cardinality is the Catalan number `C_n`.
    ///
    /// `cap` bounds the family's own size parameter (ground set size, `n`, or
    /// number of vertices); `None` uses the default cap.
    pub fn enumerate(self, n: usize, cap: Option<usize>) -> Result<Vec<CatalanObject>> {
        Ok(match self {
            Family::Configuration => {
                let m = configuration_ground(n)?;
                let cap = cap.unwrap_or(CONFIGURATION_GROUND_CAP);
                enumerate_configurations_with_cap(m, cap)?
                    .into_iter()
                    .map(CatalanObject::Configuration)
                    .collect()
            }
            Family::Matching => enumerate_matchings_with_cap(n, cap.unwrap_or(MATCHING_CAP))?
                .into_iter()
                .map(CatalanObject::Matching)
                .collect(),
            Family::Triangulation => {
                let cap = cap.unwrap_or(TRIANGULATION_GON_CAP);
                enumerate_triangulations_with_cap(n + 2, cap)?
                    .into_iter()
                    .map(CatalanObject::Triangulation)
                    .collect()
            }
        })
    }
}

/// Ground set size `n - 1` of the configurations counted by `C_n`.
pub(crate) fn configuration_ground(n: usize) -> Result<usize> {
    n.checked_sub(1)
        .ok_or_else(|| Error::Domain("configurations are indexed by n >= 1".into()))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "config" | "configuration" => Ok(Family::Configuration),
            "matching" => Ok(Family::Matching),
            "triangulation" => Ok(Family::Triangulation),
            _ => Err(Error::Parse {
                kind: "family",
                input: s.to_owned(),
            }),
        }
    }
}

/// Arcs `(a, b)` and `(c, d)`, each with low endpoint first, interleave.
pub(crate) fn interleave(x: (usize, usize), y: (usize, usize)) -> bool {
    let ((a, b), (c, d)) = (x, y);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn any_crossing(arcs: &[(usize, usize)]) -> bool {
    arcs.iter()
        .enumerate()
        .any(|(i, &x)| arcs[i + 1..].iter().any(|&y| interleave(x, y)))
}

fn ordered(pair: (usize, usize)) -> (usize, usize) {
    (pair.0.min(pair.1), pair.0.max(pair.1))
}

fn invalid(kind: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidObject {
        kind,
        reason: reason.into(),
    }
}

/// Validates labels in `1..=size`, non-loop pairs and pairwise disjointness.
/// Returns the pairs ordered and sorted.
fn check_pairs(
    kind: &'static str,
    size: usize,
    singles: &[usize],
    pairs: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>> {
    let mut seen = vec![false; size + 1];
    let mut mark = |p: usize| -> Result<()> {
        if p == 0 || p > size {
            return Err(invalid(kind, format!("point {p} outside [1, {size}]")));
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(invalid(kind, format!("point {p} used twice")));
        }
        Ok(())
    };
    for &b in singles {
        mark(b)?;
    }
    for &(i, j) in pairs {
        if i == j {
            return Err(invalid(kind, format!("degenerate pair ({i},{i})")));
        }
        mark(i)?;
        mark(j)?;
    }
    let mut pairs: Vec<_> = pairs.iter().copied().map(ordered).collect();
    pairs.sort_unstable();
    Ok(pairs)
}

/// A (1,2)-configuration on `[m]`: pairwise disjoint balls (singletons) and
/// arcs (pairs). Points covered by neither are uncovered.
///
/// Construction enforces disjointness only, so crossing configurations can be
/// represented; the enumerator yields only noncrossing ones.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    ground_size: usize,
    balls: Vec<usize>,
    arcs: Vec<(usize, usize)>,
}

impl Configuration {
    pub fn new(ground_size: usize, balls: Vec<usize>, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let arcs = check_pairs("configuration", ground_size, &balls, &arcs)?;
        let mut balls = balls;
        balls.sort_unstable();
        Ok(Configuration {
            ground_size,
            balls,
            arcs,
        })
    }

    pub(crate) fn from_canonical_parts(
        ground_size: usize,
        balls: Vec<usize>,
        arcs: Vec<(usize, usize)>,
    ) -> Self {
        debug_assert!(balls.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        Configuration {
            ground_size,
            balls,
            arcs,
        }
    }

    pub fn empty(ground_size: usize) -> Self {
        Self::from_canonical_parts(ground_size, Vec::new(), Vec::new())
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn balls(&self) -> &[usize] {
        &self.balls
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn is_noncrossing(&self) -> bool {
        !any_crossing(&self.arcs)
    }

    /// Disjoint, in range, canonical, and noncrossing.
    pub fn is_valid(&self) -> bool {
        Configuration::new(self.ground_size, self.balls.clone(), self.arcs.clone())
            .is_ok_and(|c| c == *self && c.is_noncrossing())
    }
}

/// Canonical text form, e.g. `m=6; balls=[6]; arcs=[(1,3),(4,5)]`.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={}; balls=[{}]; arcs=[{}]",
            self.ground_size,
            join_points(&self.balls),
            join_pairs(&self.arcs)
        )
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "configuration",
            input: s.to_owned(),
        };
        let [m, balls, arcs] = fields(s, ["m", "balls", "arcs"]).ok_or_else(err)?;
        let m = m.parse().map_err(|_| err())?;
        let balls = parse_points(balls).ok_or_else(err)?;
        let arcs = parse_pairs(arcs).ok_or_else(err)?;
        Configuration::new(m, balls, arcs)
    }
}

/// A noncrossing perfect matching of `[2n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let arcs = check_pairs("matching", 2 * n, &[], &arcs)?;
        if arcs.len() != n {
            return Err(invalid(
                "matching",
                format!("{} arcs do not cover [{}]", arcs.len(), 2 * n),
            ));
        }
        if any_crossing(&arcs) {
            return Err(invalid("matching", "arcs cross"));
        }
        Ok(Matching { n, arcs })
    }

    pub(crate) fn from_canonical_parts(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        Matching { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn is_valid(&self) -> bool {
        Matching::new(self.n, self.arcs.clone()).is_ok_and(|m| m == *self)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; arcs=[{}]", self.n, join_pairs(&self.arcs))
    }
}

impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "matching",
            input: s.to_owned(),
        };
        let [n, arcs] = fields(s, ["n", "arcs"]).ok_or_else(err)?;
        Matching::new(
            n.parse().map_err(|_| err())?,
            parse_pairs(arcs).ok_or_else(err)?,
        )
    }
}

/// A triangulation of the convex polygon with vertices `1..=gon`, stored as
/// its `gon - 3` diagonals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    gon: usize,
    diagonals: Vec<(usize, usize)>,
}

impl Triangulation {
    pub fn new(gon: usize, diagonals: Vec<(usize, usize)>) -> Result<Self> {
        if gon < 3 {
            return Err(invalid(
                "triangulation",
                format!("a polygon needs 3 vertices, got {gon}"),
            ));
        }
        let mut ds: Vec<_> = diagonals.into_iter().map(ordered).collect();
        ds.sort_unstable();
        if ds.len() != gon - 3 {
            return Err(invalid(
                "triangulation",
                format!("{} diagonals, expected {}", ds.len(), gon - 3),
            ));
        }
        if ds.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("triangulation", "repeated diagonal"));
        }
        for &(i, j) in &ds {
            if i == 0 || j > gon {
                return Err(invalid(
                    "triangulation",
                    format!("vertex outside [1, {gon}]"),
                ));
            }
            if j - i <= 1 || (i == 1 && j == gon) {
                return Err(invalid(
                    "triangulation",
                    format!("({i},{j}) is not a diagonal"),
                ));
            }
        }
        if any_crossing(&ds) {
            return Err(invalid("triangulation", "diagonals cross"));
        }
        Ok(Triangulation { gon, diagonals: ds })
    }

    pub fn gon(&self) -> usize {
        self.gon
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn is_valid(&self) -> bool {
        Triangulation::new(self.gon, self.diagonals.clone()).is_ok_and(|t| t == *self)
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gon={}; diagonals=[{}]",
            self.gon,
            join_pairs(&self.diagonals)
        )
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "triangulation",
            input: s.to_owned(),
        };
        let [gon, ds] = fields(s, ["gon", "diagonals"]).ok_or_else(err)?;
        Triangulation::new(
            gon.parse().map_err(|_| err())?,
            parse_pairs(ds).ok_or_else(err)?,
        )
    }
}

/// An object of any of the three families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalanObject {
    Configuration(Configuration),
    Matching(Matching),
    Triangulation(Triangulation),
}

impl CatalanObject {
    pub fn family(&self) -> Family {
        match self {
            CatalanObject::Configuration(_) => Family::Configuration,
            CatalanObject::Matching(_) => Family::Matching,
            CatalanObject::Triangulation(_) => Family::Triangulation,
        }
    }
}

impl fmt::Display for CatalanObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalanObject::Configuration(c) => c.fmt(f),
            CatalanObject::Matching(m) => m.fmt(f),
            CatalanObject::Triangulation(t) => t.fmt(f),
        }
    }
}

fn join_points(points: &[usize]) -> String {
    points
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn join_pairs(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Splits `k1=v1; k2=v2; …` checking the keys in order.
fn fields<'a, const N: usize>(s: &'a str, keys: [&str; N]) -> Option<[&'a str; N]> {
    let mut parts = s.trim().split(';').map(str::trim);
    let mut out = [""; N];
    for (slot, key) in out.iter_mut().zip(keys) {
        let (k, v) = parts.next()?.split_once('=')?;
        if k.trim() != key {
            return None;
        }
        *slot = v.trim();
    }
    parts.next().is_none().then_some(out)
}

fn parse_points(s: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?.trim();
    if inner.is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse().ok()).collect()
}

fn parse_pairs(s: &str) -> Option<Vec<(usize, usize)>> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?.trim();
    if inner.is_empty() {
        return Some(Vec::new());
    }
    let inner = inner.strip_prefix('(')?.strip_suffix(')')?;
    inner
        .split(')')
        .map(|chunk| {
            let chunk = chunk.trim_start_matches([',', ' ', '(']);
            let (a, b) = chunk.split_once(',')?;
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Free,
    Uncovered,
    Ball,
    Arc(usize),
}

/// Left-to-right scan shared by configurations and matchings.
///
/// At the smallest free position `i` the point is left uncovered, made a ball
/// (when `with_singles`), or joined to a free `j > i`. Every position between
/// `i` and the next already-assigned point is free; an assigned point there
/// would be the right end of an arc opened before `i`, and joining `i` past it
/// would cross that arc.
struct Scanner<F: FnMut(&[Mark])> {
    marks: Vec<Mark>,
    with_singles: bool,
    emit: F,
}

impl<F: FnMut(&[Mark])> Scanner<F> {
    fn run(&mut self, mut i: usize) {
        while i < self.marks.len() && self.marks[i] != Mark::Free {
            i += 1;
        }
        if i == self.marks.len() {
            (self.emit)(&self.marks);
            return;
        }
        if self.with_singles {
            for mark in [Mark::Uncovered, Mark::Ball] {
                self.marks[i] = mark;
                self.run(i + 1);
            }
        }
        let mut j = i + 1;
        while j < self.marks.len() && self.marks[j] == Mark::Free {
            self.marks[i] = Mark::Arc(j);
            self.marks[j] = Mark::Arc(i);
            self.run(i + 1);
            self.marks[j] = Mark::Free;
            j += 1;
        }
        self.marks[i] = Mark::Free;
    }
}

fn parts_from_marks(marks: &[Mark]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut balls = Vec::new();
    let mut arcs = Vec::new();
    for (i, &mark) in marks.iter().enumerate() {
        match mark {
            Mark::Ball => balls.push(i + 1),
            Mark::Arc(j) if j > i => arcs.push((i + 1, j + 1)),
            _ => {}
        }
    }
    (balls, arcs)
}

/// All noncrossing (1,2)-configurations of `[m]`, sorted.
pub fn enumerate_configurations(m: usize) -> Result<Vec<Configuration>> {
    enumerate_configurations_with_cap(m, CONFIGURATION_GROUND_CAP)
}

pub fn enumerate_configurations_with_cap(m: usize, cap: usize) -> Result<Vec<Configuration>> {
    if m > cap {
        return Err(Error::SizeLimit {
            family: Family::Configuration,
            size: m,
            cap,
        });
    }
    let mut out = Vec::new();
    Scanner {
        marks: vec![Mark::Free; m],
        with_singles: true,
        emit: |marks: &[Mark]| {
            let (balls, arcs) = parts_from_marks(marks);
            out.push(Configuration::from_canonical_parts(m, balls, arcs));
        },
    }
    .run(0);
    out.sort_unstable();
    Ok(out)
}

/// All noncrossing perfect matchings of `[2n]`, sorted.
pub fn enumerate_matchings(n: usize) -> Result<Vec<Matching>> {
    enumerate_matchings_with_cap(n, MATCHING_CAP)
}

pub fn enumerate_matchings_with_cap(n: usize, cap: usize) -> Result<Vec<Matching>> {
    if n > cap {
        return Err(Error::SizeLimit {
            family: Family::Matching,
            size: n,
            cap,
        });
    }
    let mut out = Vec::new();
    Scanner {
        marks: vec![Mark::Free; 2 * n],
        with_singles: false,
        emit: |marks: &[Mark]| {
            out.push(Matching::from_canonical_parts(n, parts_from_marks(marks).1));
        },
    }
    .run(0);
    out.sort_unstable();
    Ok(out)
}

/// All triangulations of the convex `gon`-gon, sorted.
pub fn enumerate_triangulations(gon: usize) -> Result<Vec<Triangulation>> {
    enumerate_triangulations_with_cap(gon, TRIANGULATION_GON_CAP)
}

pub fn enumerate_triangulations_with_cap(gon: usize, cap: usize) -> Result<Vec<Triangulation>> {
    if gon < 3 {
        return Err(Error::Domain(format!(
            "a polygon needs at least 3 vertices, got {gon}"
        )));
    }
    if gon > cap {
        return Err(Error::SizeLimit {
            family: Family::Triangulation,
            size: gon,
            cap,
        });
    }
    let vertices: Vec<usize> = (1..=gon).collect();
    let mut out: Vec<Triangulation> = triangulate(&vertices)
        .into_iter()
        .map(|mut diagonals| {
            diagonals.sort_unstable();
            Triangulation { gon, diagonals }
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Diagonal sets of the convex polygon on `vertices` (in cyclic order). The
/// edge from first to last vertex lies in exactly one triangle, whose apex
/// splits the polygon in two.
fn triangulate(vertices: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let len = vertices.len();
    if len <= 3 {
        return vec![Vec::new()];
    }
    let (first, last) = (vertices[0], vertices[len - 1]);
    let mut out = Vec::new();
    for apex in 1..len - 1 {
        let left = triangulate(&vertices[..=apex]);
        let right = triangulate(&vertices[apex..]);
        let mut base = Vec::new();
        if apex != 1 {
            base.push((first, vertices[apex]));
        }
        if apex != len - 2 {
            base.push((vertices[apex], last));
        }
        for l in &left {
            for r in &right {
                let mut ds = base.clone();
                ds.extend_from_slice(l);
                ds.extend_from_slice(r);
                out.push(ds);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn catalan(n: u64) -> u64 {
        (0..n).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }

    fn config(m: usize, balls: &[usize], arcs: &[(usize, usize)]) -> Configuration {
        Configuration::new(m, balls.to_vec(), arcs.to_vec()).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(!config(4, &[], &[(1, 3), (2, 4)]).is_noncrossing());
        assert!(Configuration::empty(0).is_noncrossing());
        assert!(config(4, &[], &[(1, 4), (2, 3)]).is_noncrossing());
        assert!(config(4, &[], &[(1, 2), (3, 4)]).is_noncrossing());
    }

    #[test]
    fn constructor_rejects_overlaps() {
        assert!(Configuration::new(3, vec![1], vec![(1, 2)]).is_err());
        assert!(Configuration::new(3, vec![], vec![(1, 2), (2, 3)]).is_err());
        assert!(Configuration::new(3, vec![4], vec![]).is_err());
        assert!(Configuration::new(3, vec![0], vec![]).is_err());
        assert!(Configuration::new(3, vec![], vec![(2, 2)]).is_err());
        // endpoints are reordered
        assert_eq!(config(3, &[], &[(3, 1)]).arcs(), &[(1, 3)]);
    }

    #[test]
    fn enumerate_small_configurations() {
        assert_eq!(
            enumerate_configurations(0).unwrap(),
            vec![Configuration::empty(0)]
        );
        let two = enumerate_configurations(2).unwrap();
        let expected = vec![
            config(2, &[], &[]),
            config(2, &[], &[(1, 2)]),
            config(2, &[1], &[]),
            config(2, &[1, 2], &[]),
            config(2, &[2], &[]),
        ];
        assert_eq!(two, expected);
    }

    #[test]
    fn figure_example_is_enumerated() {
        let f = config(6, &[6], &[(1, 3), (4, 5)]);
        assert!(enumerate_configurations(6)
            .unwrap()
            .binary_search(&f)
            .is_ok());
    }

    #[test]
    fn configuration_counts() {
        for m in 0..=12usize {
            let all = enumerate_configurations(m).unwrap();
            assert_eq!(all.len() as u64, catalan(m as u64 + 1), "m={m}");
            let by_arcs: u64 = (0..=m as u64 / 2)
                .map(|a| binomial(m as u64, 2 * a) * catalan(a) * (1 << (m as u64 - 2 * a)))
                .sum();
            assert_eq!(all.len() as u64, by_arcs);
        }
    }

    #[test]
    fn enumerated_configurations_are_valid_and_sorted() {
        for m in 0..=9 {
            let all = enumerate_configurations(m).unwrap();
            assert!(all.iter().all(Configuration::is_valid));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn matching_examples_and_counts() {
        assert_eq!(enumerate_matchings(0).unwrap().len(), 1);
        let two = enumerate_matchings(2).unwrap();
        assert_eq!(
            two,
            vec![
                Matching::new(2, vec![(1, 2), (3, 4)]).unwrap(),
                Matching::new(2, vec![(1, 4), (2, 3)]).unwrap(),
            ]
        );
        for n in 0..=7 {
            let all = enumerate_matchings(n).unwrap();
            assert_eq!(all.len() as u64, catalan(n as u64));
            assert!(all.iter().all(Matching::is_valid));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(Matching::new(2, vec![(1, 3), (2, 4)]).is_err());
        assert!(Matching::new(2, vec![(1, 2)]).is_err());
    }

    #[test]
    fn triangulation_examples_and_counts() {
        let tri = enumerate_triangulations(3).unwrap();
        assert_eq!(tri.len(), 1);
        assert!(tri[0].diagonals().is_empty());
        let square = enumerate_triangulations(4).unwrap();
        assert_eq!(square[0].diagonals(), &[(1, 3)]);
        assert_eq!(square[1].diagonals(), &[(2, 4)]);
        assert_eq!(enumerate_triangulations(6).unwrap().len(), 14);
        for gon in 3..=10 {
            let all = enumerate_triangulations(gon).unwrap();
            assert_eq!(all.len() as u64, catalan(gon as u64 - 2));
            assert!(all.iter().all(Triangulation::is_valid));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(Triangulation::new(4, vec![(1, 2)]).is_err());
        assert!(Triangulation::new(4, vec![(1, 4)]).is_err());
        assert!(Triangulation::new(5, vec![(1, 3), (2, 4)]).is_err());
        assert!(Triangulation::new(5, vec![(1, 3)]).is_err());
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            enumerate_configurations(17),
            Err(Error::SizeLimit { cap: 16, .. })
        ));
        assert!(matches!(
            enumerate_matchings(9),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(
            enumerate_triangulations(13),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(enumerate_triangulations(2), Err(Error::Domain(_))));
        assert!(enumerate_configurations_with_cap(4, 3).is_err());
        assert!(Family::Configuration.enumerate(0, None).is_err());
    }

    #[test]
    fn text_forms() {
        let f = config(6, &[6], &[(1, 3), (4, 5)]);
        assert_eq!(f.to_string(), "m=6; balls=[6]; arcs=[(1,3),(4,5)]");
        assert_eq!(
            Configuration::empty(0).to_string(),
            "m=0; balls=[]; arcs=[]"
        );
        let m: Matching = "n=2; arcs=[(1,4),(2,3)]".parse().unwrap();
        assert_eq!(m.to_string(), "n=2; arcs=[(1,4),(2,3)]");
        let t: Triangulation = "gon=4; diagonals=[(2,4)]".parse().unwrap();
        assert_eq!(t.diagonals(), &[(2, 4)]);
        assert!("m=2; arcs=[]".parse::<Configuration>().is_err());
        assert!("m=2; balls=[1]; arcs=[(1,2)]"
            .parse::<Configuration>()
            .is_err());
        assert_eq!(
            "triangulation".parse::<Family>().unwrap(),
            Family::Triangulation
        );
    }

    proptest! {
        #[test]
        fn configuration_text_round_trips(m in 0usize..=8, idx in any::<prop::sample::Index>()) {
            let all = enumerate_configurations(m).unwrap();
            let f = &all[idx.index(all.len())];
            prop_assert_eq!(&f.to_string().parse::<Configuration>().unwrap(), f);
        }
    }
}
