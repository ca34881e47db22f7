//! Streaming enumeration of integer compositions.

use std::fmt;

/// An ordered tuple of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Panics if a part is zero.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive");
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `j`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `Σ (i−1)·l_i` with 1-based `i`.
    pub fn staircase_weight(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, l)| i * l).sum()
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// All compositions of `total` with at most `max_parts` parts, in
/// colexicographic order.
///
/// Internally this walks the reversed compositions in lexicographic order:
/// the successor bumps the second-to-last part and refills the tail with
/// the smallest composition of what is left.
pub struct Compositions {
    max_parts: usize,
    // reversed parts of the next composition to yield
    next: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(total: usize, max_parts: Option<usize>) -> Self {
        let max_parts = max_parts.unwrap_or(total);
        let next = (total > 0 && max_parts > 0).then(|| smallest(total, max_parts));
        Compositions { max_parts, next }
    }
}

/// Lexicographically smallest composition of `r` into at most `slots` parts.
fn smallest(r: usize, slots: usize) -> Vec<usize> {
    if r == 0 {
        return Vec::new();
    }
    if r <= slots {
        return vec![1; r];
    }
    let mut v = vec![1; slots - 1];
    v.push(r - (slots - 1));
    v
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.next.take()?;
        let out = Composition {
            parts: cur.iter().rev().copied().collect(),
        };
        if cur.len() > 1 {
            let mut succ = cur;
            let last = succ.pop().expect("len > 1");
            *succ.last_mut().expect("len > 1") += 1;
            let slots = self.max_parts - succ.len();
            succ.extend(smallest(last - 1, slots));
            self.next = Some(succ);
        }
        Some(out)
    }
}

/// Shorthand for [`Compositions::new`].
pub fn compositions(total: usize, max_parts: Option<usize>) -> Compositions {
    Compositions::new(total, max_parts)
}
