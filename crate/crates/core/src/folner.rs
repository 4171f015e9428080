//! Finite subsets of F viewed as subgraphs of the Cayley graph on
//! `x0^(+-1), x1^(+-1)`, with exact-rational density and the finite
//! quantities behind zero-measured sets: class shares, frequency quotients,
//! and the density loss caused by deleting vertices.

use std::collections::btree_set;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::io;

use num_rational::Ratio;
use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{class_of, ClassLabel};
use crate::words::{Letter, NormalForm};

pub type Rational = Ratio<i64>;

/// Right multiplication by these labels the out-edges of every vertex.
pub const GENERATORS: [Letter; 4] = [Letter::pos(0), Letter::neg(0), Letter::pos(1), Letter::neg(1)];

/// Twice the number of standard generators: the largest possible degree.
pub const MAX_DEGREE: i64 = 4;

pub const DEFAULT_ELEMENT_LIMIT: usize = 5_000_000;

#[derive(Error, Debug)]
pub enum FolnerError {
    #[error("the set is empty")]
    EmptySet,

    #[error("ball exceeds the element limit of {limit}; completed radius {radius_reached}")]
    ElementLimit { limit: usize, radius_reached: usize },

    #[error("deleted set is not a subset of the vertex set")]
    NotSubset,

    #[error("deleting every vertex leaves no graph")]
    EmptyRemainder,

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A finite set of group elements keyed by normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElementSet {
    members: BTreeSet<NormalForm>,
}

impl ElementSet {
    pub fn new() -> ElementSet {
        ElementSet::default()
    }

    pub fn singleton(g: NormalForm) -> ElementSet {
        std::iter::once(g).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &NormalForm) -> bool {
        self.members.contains(g)
    }

    pub fn insert(&mut self, g: NormalForm) -> bool {
        self.members.insert(g)
    }

    pub fn iter(&self) -> btree_set::Iter<'_, NormalForm> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.members.union(&other.members).cloned().collect()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.members.intersection(&other.members).cloned().collect()
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.members.difference(&other.members).cloned().collect()
    }

    /// Out-degree of `v` inside this set.
    pub fn degree(&self, v: &NormalForm) -> usize {
        GENERATORS.iter().filter(|&&l| self.contains(&v.mul_letter(l))).count()
    }
}

impl FromIterator<NormalForm> for ElementSet {
    fn from_iter<I: IntoIterator<Item = NormalForm>>(iter: I) -> Self {
        ElementSet { members: iter.into_iter().collect() }
    }
}

impl IntoIterator for ElementSet {
    type Item = NormalForm;
    type IntoIter = btree_set::IntoIter<NormalForm>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a NormalForm;
    type IntoIter = btree_set::Iter<'a, NormalForm>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgraphStats {
    pub vertex_count: u64,
    pub oriented_edge_count: u64,
    pub density: Rational,
}

impl SubgraphStats {
    pub fn new(vertex_count: u64, oriented_edge_count: u64) -> Result<SubgraphStats, FolnerError> {
        if vertex_count == 0 {
            return Err(FolnerError::EmptySet);
        }
        let density = Rational::new(oriented_edge_count as i64, vertex_count as i64);
        Ok(SubgraphStats { vertex_count, oriented_edge_count, density })
    }
}

impl fmt::Display for SubgraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices={} oriented_edges={} density={}",
            self.vertex_count, self.oriented_edge_count, self.density
        )
    }
}

pub fn ball(n: usize) -> Result<ElementSet, FolnerError> {
    ball_with_limit(n, DEFAULT_ELEMENT_LIMIT)
}

/// All elements of word length at most `n` in the standard generators.
pub fn ball_with_limit(n: usize, limit: usize) -> Result<ElementSet, FolnerError> {
    Ok(bfs(n, limit)?.into_keys().collect())
}

/// Breadth-first search from the identity; maps each element to its distance.
fn bfs(n: usize, limit: usize) -> Result<HashMap<NormalForm, usize>, FolnerError> {
    let mut dist = HashMap::new();
    dist.insert(NormalForm::identity(), 0);
    if limit == 0 {
        return Err(FolnerError::ElementLimit { limit, radius_reached: 0 });
    }
    let mut frontier = vec![NormalForm::identity()];
    for radius in 1..=n {
        let candidates: Vec<NormalForm> = frontier
            .par_iter()
            .flat_map_iter(|g| GENERATORS.iter().map(move |&l| g.mul_letter(l)))
            .collect();
        let mut next = Vec::new();
        for h in candidates {
            if !dist.contains_key(&h) {
                dist.insert(h.clone(), radius);
                next.push(h);
            }
        }
        if dist.len() > limit {
            return Err(FolnerError::ElementLimit { limit, radius_reached: radius - 1 });
        }
        frontier = next;
    }
    Ok(dist)
}

/// Statistics of `ball(r)` for every `r` in `0..=n`, computed from a single
/// search: the edge `v -> v*s` lies in `ball(r)` iff both ends are within
/// distance `r`.
pub fn ball_profile(n: usize, limit: usize) -> Result<Vec<SubgraphStats>, FolnerError> {
    let dist = bfs(n, limit)?;
    let mut vertices = vec![0u64; n + 1];
    let mut edges = vec![0u64; n + 1];
    let per_vertex: Vec<(usize, Vec<usize>)> = dist
        .par_iter()
        .map(|(v, &d)| {
            let levels = GENERATORS
                .iter()
                .filter_map(|&l| dist.get(&v.mul_letter(l)).map(|&e| e.max(d)))
                .collect();
            (d, levels)
        })
        .collect();
    for (d, levels) in per_vertex {
        vertices[d] += 1;
        for level in levels {
            edges[level] += 1;
        }
    }
    let (mut v, mut e) = (0, 0);
    (0..=n)
        .map(|r| {
            v += vertices[r];
            e += edges[r];
            SubgraphStats::new(v, e)
        })
        .collect()
}

/// Density = oriented out-edges per vertex, as an exact rational.
pub fn subgraph_density(s: &ElementSet) -> Result<SubgraphStats, FolnerError> {
    if s.is_empty() {
        return Err(FolnerError::EmptySet);
    }
    let members: Vec<&NormalForm> = s.iter().collect();
    let edges: usize = members.par_iter().map(|v| s.degree(v)).sum();
    SubgraphStats::new(s.len() as u64, edges as u64)
}

/// Counts per class, indexed `M1..M7`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassHistogram(pub [u64; 7]);

impl ClassHistogram {
    pub fn count(&self, class: ClassLabel) -> u64 {
        self.0[class.ordinal()]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Share of `class` among all counted elements.
    pub fn share(&self, class: ClassLabel) -> Option<Rational> {
        let total = self.total();
        (total > 0).then(|| Rational::new(self.count(class) as i64, total as i64))
    }

    /// Writes `class,count,share_num,share_den`; shares of an empty
    /// histogram are written as `0/1`.
    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<(), FolnerError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["class", "count", "share_num", "share_den"])?;
        for c in ClassLabel::ALL {
            let share = self.share(c).unwrap_or_default();
            w.write_record([
                c.to_string(),
                self.count(c).to_string(),
                share.numer().to_string(),
                share.denom().to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn class_histogram(s: &ElementSet) -> ClassHistogram {
    let members: Vec<&NormalForm> = s.iter().collect();
    let classes: Vec<ClassLabel> = members.par_iter().map(|g| class_of(g)).collect();
    let mut h = ClassHistogram::default();
    for c in classes {
        h.0[c.ordinal()] += 1;
    }
    h
}

/// `|S ∩ Z| / |S|`, the finite frequency of `Z` inside `S`.
pub fn mu_hat(s: &ElementSet, z: &ElementSet) -> Result<Rational, FolnerError> {
    if s.is_empty() {
        return Err(FolnerError::EmptySet);
    }
    let hits = s.iter().filter(|g| z.contains(g)).count();
    Ok(Rational::new(hits as i64, s.len() as i64))
}

pub fn drop_classes(s: &ElementSet, classes: &[ClassLabel]) -> ElementSet {
    if classes.is_empty() {
        return s.clone();
    }
    let members: Vec<&NormalForm> = s.iter().collect();
    members
        .par_iter()
        .filter(|g| !classes.contains(&class_of(g)))
        .map(|&g| g.clone())
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// `{ s * g : s in S }`.
pub fn translate_set(s: &ElementSet, g: &NormalForm) -> ElementSet {
    s.iter().map(|x| x.multiply(g)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeletionReport {
    pub density_before: Rational,
    pub density_after: Rational,
    /// `density_before - 8 |K| / |S|`.
    pub bound: Rational,
    pub holds: bool,
    /// `density_before - 4 |K| / |S|`, which counts only the edges the
    /// remaining vertices lose and so can fail.
    pub half_bound: Rational,
    pub half_bound_holds: bool,
}

impl fmt::Display for DeletionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "before={} after={} bound={} holds={} half_bound={} half_bound_holds={}",
            self.density_before, self.density_after, self.bound, self.holds, self.half_bound, self.half_bound_holds
        )
    }
}

/// Deleting `k` of `n` vertices costs at most `8k/n` of density: each deleted
/// vertex takes its own out-edges (at most 4) and the edges pointing at it
/// (at most 4). Deleting the centre of ball(1) attains this.
pub fn deletion_bound_check(s: &ElementSet, k: &ElementSet) -> Result<DeletionReport, FolnerError> {
    if !k.is_subset(s) {
        return Err(FolnerError::NotSubset);
    }
    if k.len() == s.len() {
        return Err(FolnerError::EmptyRemainder);
    }
    let before = subgraph_density(s)?.density;
    let after = subgraph_density(&s.difference(k))?.density;
    let per_vertex = Rational::new(k.len() as i64, s.len() as i64);
    let bound = before - per_vertex * (2 * MAX_DEGREE);
    let half_bound = before - per_vertex * MAX_DEGREE;
    Ok(DeletionReport {
        density_before: before,
        density_after: after,
        bound,
        holds: after >= bound,
        half_bound,
        half_bound_holds: after >= half_bound,
    })
}

/// One row of the density CSV; `None` stands for the empty set, which has no
/// density.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityRow {
    pub label: String,
    pub stats: Option<SubgraphStats>,
}

/// Writes `label,vertices,oriented_edges,density_num,density_den` rows with a
/// header line.
pub fn write_density_csv<W: io::Write>(out: W, rows: &[DensityRow]) -> Result<(), FolnerError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["label", "vertices", "oriented_edges", "density_num", "density_den"])?;
    for row in rows {
        let record = match &row.stats {
            Some(s) => [
                row.label.clone(),
                s.vertex_count.to_string(),
                s.oriented_edge_count.to_string(),
                s.density.numer().to_string(),
                s.density.denom().to_string(),
            ],
            None => [row.label.clone(), "0".into(), "0".into(), String::new(), String::new()],
        };
        w.write_record(record)?;
    }
    w.flush()?;
    Ok(())
}

/// Directed subgraph with one edge per `x0` and `x1` step that stays inside
/// the set; vertices are labelled by normal form.
pub fn subgraph_to_dot(s: &ElementSet) -> String {
    let index: HashMap<&NormalForm, usize> = s.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut out = String::from("digraph subgraph {\n");
    for (g, i) in s.iter().zip(0..) {
        writeln!(out, "  n{i} [label=\"{g}\"];").unwrap();
    }
    let mut seen = HashSet::new();
    for (g, i) in s.iter().zip(0..) {
        for l in [Letter::pos(0), Letter::pos(1)] {
            if let Some(&j) = index.get(&g.mul_letter(l)) {
                if seen.insert((i, j, l.index)) {
                    writeln!(out, "  n{i} -> n{j} [label=\"x{}\"];", l.index).unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
