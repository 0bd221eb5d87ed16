use std::fmt;

use serde::{Deserialize, Serialize};

use super::{pair_count, Graph};

/// Label-independent identity of a graph: the order plus the
/// lexicographically least upper-triangle bit string (graph6 bit order)
/// over all vertex relabelings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    order: u8,
    /// Bit string packed most-significant-first, `pair_count(order)` bits.
    code: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Order byte followed by the bit string, big-endian, zero-padded.
    pub fn bytes(&self) -> Vec<u8> {
        let bits = pair_count(self.order());
        let nbytes = bits.div_ceil(8);
        let mut out = vec![self.order];
        let padded = if bits == 0 {
            0
        } else {
            self.code << (nbytes * 8 - bits)
        };
        out.extend((0..nbytes).rev().map(|i| (padded >> (8 * i)) as u8));
        out
    }

    /// The graph whose natural labeling realizes this form.
    pub fn graph(&self) -> Graph {
        Graph::from_lex_code(self.order(), self.code)
    }

    pub(crate) fn from_parts(order: usize, code: u64) -> Self {
        Self {
            order: order as u8,
            code,
        }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph().to_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph().to_graph6())
    }
}

impl Graph {
    /// Bit string in graph6 order, first pair most significant.
    pub(crate) fn lex_code(&self) -> u64 {
        let bits = pair_count(self.order());
        (0..bits).fold(0u64, |acc, idx| acc << 1 | (self.raw_edges() >> idx & 1))
    }

    pub(crate) fn from_lex_code(order: usize, code: u64) -> Graph {
        let bits = pair_count(order);
        let edges = (0..bits).fold(0u64, |acc, idx| {
            acc | ((code >> (bits - 1 - idx) & 1) << idx)
        });
        Graph::from_raw(order, edges)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let (code, _) = self.canonical_labeling();
        CanonicalForm::from_parts(self.order(), code)
    }

    /// Minimal code and a labeling achieving it: `labeling[pos]` is the
    /// original vertex placed at position `pos`.
    ///
    /// Positions are filled in order; placing position `j` fixes the `j`
    /// bits of column `j`, so any branch whose prefix already exceeds the
    /// best complete code is cut.
    pub fn canonical_labeling(&self) -> (u64, Vec<usize>) {
        let n = self.order();
        let total = pair_count(n);
        let rows: Vec<u16> = (0..n).map(|v| self.neighbors(v).bits()).collect();
        let mut search = Search {
            rows: &rows,
            n,
            total,
            placed: [0; super::MAX_ORDER],
            best: None,
        };
        search.descend(0, 0, 0);
        let (code, labeling) = search.best.expect("at least one labeling");
        (code, labeling[..n].iter().map(|&v| v as usize).collect())
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }
}

struct Search<'a> {
    rows: &'a [u16],
    n: usize,
    total: usize,
    placed: [u8; super::MAX_ORDER],
    best: Option<(u64, [u8; super::MAX_ORDER])>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, used: u16, prefix: u64) {
        if depth == self.n {
            if self.best.is_none_or(|(b, _)| prefix < b) {
                self.best = Some((prefix, self.placed));
            }
            return;
        }
        let bits_after = depth * (depth + 1) / 2;
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let row = self.rows[v];
            let mut code = prefix;
            for &u in &self.placed[..depth] {
                code = code << 1 | u64::from(row >> u & 1);
            }
            if let Some((b, _)) = self.best {
                if code > b >> (self.total - bits_after) {
                    continue;
                }
            }
            self.placed[depth] = v as u8;
            self.descend(depth + 1, used | 1 << v, code);
        }
    }
}
