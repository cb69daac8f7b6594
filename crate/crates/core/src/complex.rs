//! Finite abstract simplicial complexes.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Label;

/// Largest admissible set cardinality.
pub const MAX_SET_SIZE: usize = 16;

/// A non-empty finite set of vertex labels, stored sorted.
///
/// Ordering is by cardinality first, then lexicographic, which is the
/// canonical order of sets inside a [`Complex`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Label>);

impl Simplex {
    /// Builds a simplex from arbitrary labels; duplicates are dropped.
    pub fn new(labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        let set: BTreeSet<Label> = labels.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(Simplex(set.into_iter().collect()))
    }

    pub(crate) fn from_sorted(labels: Vec<Label>) -> Self {
        debug_assert!(!labels.is_empty() && labels.windows(2).all(|w| w[0] < w[1]));
        Simplex(labels)
    }

    pub fn point(v: Label) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Label) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Comparable under inclusion, in either direction.
    pub fn is_nested(&self, other: &Simplex) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    pub fn intersects(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    }

    /// All non-empty subsets, the simplex itself included.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u32..(1u32 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Faces of codimension one.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Simplex {
        Simplex::new(self.0.iter().map(|&v| f(v))).expect("non-empty")
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Counts of sets by dimension. Index `k` holds the number of sets of
/// cardinality `k + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn from_counts(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        FVector(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }
}

/// A finite abstract simplicial complex: a downward-closed family of
/// non-empty sets, kept in canonical (cardinality, lexicographic) order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Complex {
    sets: Vec<Simplex>,
}

impl Complex {
    /// The downward closure of `facets`.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Label>,
    {
        let mut all = BTreeSet::new();
        for facet in facets {
            let s = Simplex::new(facet).map_err(|_| Error::InvalidInput("empty facet".into()))?;
            if s.len() > MAX_SET_SIZE {
                return Err(Error::DimensionCap(s, MAX_SET_SIZE));
            }
            if all.contains(&s) {
                continue;
            }
            all.extend(s.faces());
        }
        Ok(Complex { sets: all.into_iter().collect() })
    }

    /// Accepts `sets` iff the family is downward closed and free of empty
    /// sets and duplicates.
    ///
    /// When faces are missing, the smallest missing face in canonical order is
    /// reported together with the smallest member that contains it.
    pub fn validate<I, F>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Label>,
    {
        let mut seen = BTreeSet::new();
        for raw in sets {
            let raw: Vec<Label> = raw.into_iter().collect();
            if raw.is_empty() {
                return Err(Error::EmptySet);
            }
            let s = Simplex::new(raw.iter().copied())?;
            if s.len() != raw.len() {
                return Err(Error::InvalidInput(format!("set {s} lists a vertex twice")));
            }
            if s.len() > MAX_SET_SIZE {
                return Err(Error::DimensionCap(s, MAX_SET_SIZE));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::Duplicate(s));
            }
        }
        let mut missing: Option<(Simplex, Simplex)> = None;
        for s in &seen {
            for face in s.faces() {
                if seen.contains(&face) {
                    continue;
                }
                let better = match &missing {
                    None => true,
                    Some((m, parent)) => face < *m || (face == *m && s < parent),
                };
                if better {
                    missing = Some((face, s.clone()));
                }
            }
        }
        if let Some((missing, set)) = missing {
            return Err(Error::MissingFace { set, missing });
        }
        Ok(Complex { sets: seen.into_iter().collect() })
    }

    pub fn sets(&self) -> &[Simplex] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.sets.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    /// Labels of the zero-dimensional sets, ascending.
    pub fn vertices(&self) -> Vec<Label> {
        self.sets.iter().take_while(|s| s.len() == 1).map(|s| s.vertices()[0]).collect()
    }

    /// Dimension of the largest set; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.sets.last().map(Simplex::dim)
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0; self.dim().map_or(0, |d| d + 1)];
        for s in &self.sets {
            counts[s.dim()] += 1;
        }
        FVector::from_counts(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn f0(&self) -> usize {
        self.f_vector().get(0)
    }

    /// Maximal sets under inclusion.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = Vec::new();
        for s in self.sets.iter().rev() {
            if !out.iter().any(|f| s.is_subset(f)) {
                out.push(s.clone());
            }
        }
        out.sort();
        out
    }

    /// Applies a vertex relabeling, which must be injective on the vertices.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Result<Complex> {
        let sets: Vec<Vec<Label>> = self.sets.iter().map(|s| s.vertices().iter().map(|&v| f(v)).collect()).collect();
        Complex::validate(sets)
    }

    /// The Whitney complex of `graph`: all vertex sets of its cliques,
    /// written with the graph's vertex labels.
    pub fn whitney(graph: &Graph) -> Result<Complex> {
        let mut sets = Vec::new();
        let mut err = None;
        graph.for_each_clique(|clique| {
            if clique.len() > MAX_SET_SIZE {
                err = Some(Error::DimensionCap(
                    Simplex::new(clique.iter().map(|&i| graph.label(i))).expect("non-empty clique"),
                    MAX_SET_SIZE,
                ));
                return false;
            }
            sets.push(Simplex::new(clique.iter().map(|&i| graph.label(i))).expect("non-empty clique"));
            true
        });
        if let Some(e) = err {
            return Err(e);
        }
        sets.sort();
        Ok(Complex { sets })
    }

    /// The Barycentric refinement: vertices are the sets of `self`, labelled
    /// by their canonical index, and simplices are the chains
    /// `x_1 ⊂ x_2 ⊂ … ⊂ x_k`.
    pub fn barycentric_refine(&self) -> Result<Complex> {
        let n = self.sets.len();
        // strict supersets, by index
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, x) in self.sets.iter().enumerate() {
            for (j, y) in self.sets.iter().enumerate().skip(i + 1) {
                if x.len() < y.len() && x.is_subset(y) {
                    up[i].push(j);
                }
            }
        }
        let mut chains = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        fn extend(up: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<Simplex>) -> Result<()> {
            if stack.len() > MAX_SET_SIZE {
                let s = Simplex::from_sorted(stack.iter().map(|&i| i as Label).collect());
                return Err(Error::DimensionCap(s, MAX_SET_SIZE));
            }
            out.push(Simplex::from_sorted(stack.iter().map(|&i| i as Label).collect()));
            let last = *stack.last().expect("non-empty chain");
            for &next in &up[last] {
                stack.push(next);
                extend(up, stack, out)?;
                stack.pop();
            }
            Ok(())
        }
        for i in 0..n {
            stack.push(i);
            extend(&up, &mut stack, &mut chains)?;
            stack.pop();
        }
        chains.sort();
        Ok(Complex { sets: chains })
    }

    /// The cells of the set product `self × other` in row-major order.
    pub fn product_cells(&self, other: &Complex) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|i| (0..other.len()).map(move |j| (i, j))).collect()
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sets.iter()).finish()
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}
