use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Number of 64-bit words that hold vertices 1..=n.
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// A face: a subset of the ambient vertex set [n], packed into 64-bit words.
///
/// Vertices are 1-based; vertex v occupies bit v−1. All faces of one complex
/// share the same word count (fixed by the ambient n), and the set operations
/// assume equal widths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Face {
    words: SmallVec<[u64; 2]>,
}

impl Face {
    /// The empty face sized for ambient vertex count n.
    pub fn empty(n: usize) -> Face {
        Face { words: smallvec![0; words_for(n)] }
    }

    /// The full vertex set [n].
    pub fn full(n: usize) -> Face {
        let mut face = Face::empty(n);
        for v in 1..=n {
            face.insert(v);
        }
        face
    }

    /// Builds a face from 1-based vertices, validating the range.
    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Face>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut face = Face::empty(n);
        for v in vertices {
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            face.insert(v);
        }
        Ok(face)
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v >= 1);
        self.words[(v - 1) / 64] |= 1u64 << ((v - 1) % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v >= 1);
        self.words[(v - 1) / 64] &= !(1u64 << ((v - 1) % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v >= 1);
        let idx = (v - 1) / 64;
        idx < self.words.len() && self.words[idx] & (1u64 << ((v - 1) % 64)) != 0
    }

    /// Number of vertices in the face.
    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Dimension: |F| − 1, so the empty face has dimension −1.
    pub fn dim(&self) -> isize {
        self.cardinality() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending 1-based vertices.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit + 1)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.vertices().collect()
    }

    fn zip_words(&self, other: &Face, op: impl Fn(u64, u64) -> u64) -> Face {
        debug_assert_eq!(self.words.len(), other.words.len());
        Face {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Face) -> Face {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        self.zip_words(other, |a, b| a & b)
    }

    /// Set difference self ∖ other.
    pub fn difference(&self, other: &Face) -> Face {
        self.zip_words(other, |a, b| a & !b)
    }

    /// |self ∖ other| without building the difference.
    pub fn difference_size(&self, other: &Face) -> usize {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        debug_assert_eq!(self.words.len(), other.words.len());
        self.words.iter().zip(other.words.iter()).all(|(&a, &b)| a & !b == 0)
    }

    /// dis(F, G) = min(|F ∖ G|, |G ∖ F|).
    pub fn distance(&self, other: &Face) -> usize {
        self.difference_size(other).min(other.difference_size(self))
    }

    /// All subsets of the face with exactly k vertices.
    pub fn subsets_of_size(&self, k: usize) -> Vec<Face> {
        let vertices = self.to_vec();
        if k > vertices.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(k);
        fn rec(
            vertices: &[usize],
            k: usize,
            start: usize,
            pick: &mut Vec<usize>,
            template: &Face,
            out: &mut Vec<Face>,
        ) {
            if pick.len() == k {
                let mut face = template.clone();
                for &v in pick.iter() {
                    face.insert(v);
                }
                out.push(face);
                return;
            }
            let needed = k - pick.len();
            for i in start..=vertices.len().saturating_sub(needed) {
                pick.push(vertices[i]);
                rec(vertices, k, i + 1, pick, template, out);
                pick.pop();
            }
        }
        let template = Face { words: smallvec![0; self.words.len()] };
        rec(&vertices, k, 0, &mut pick, &template, &mut out);
        out
    }
}

impl Ord for Face {
    /// Orders faces by their value as little-endian integers, i.e. by the
    /// highest vertex where they differ. This is the canonical facet order.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
