use super::{pair_count, Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

impl Graph {
    /// Standard graph6 encoding: one size byte, then the upper triangle
    /// column by column, six bits per printable byte (offset 63).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let bits = pair_count(n);
        let mut out = String::with_capacity(1 + bits.div_ceil(6));
        out.push((n as u8 + 63) as char);
        for chunk in 0..bits.div_ceil(6) {
            let mut byte = 0u8;
            for k in 0..6 {
                let idx = chunk * 6 + k;
                let bit = idx < bits && self.raw_edges() >> idx & 1 == 1;
                byte = byte << 1 | bit as u8;
            }
            out.push((byte + 63) as char);
        }
        out
    }

    pub fn from_graph6(s: &str) -> Result<Self> {
        let fail = |detail: &str| Error::Graph6 {
            input: s.to_string(),
            detail: detail.to_string(),
        };
        let body = s.trim();
        let body = body.strip_prefix(HEADER).unwrap_or(body).as_bytes();
        let (&first, rest) = body.split_first().ok_or_else(|| fail("empty string"))?;
        if !(63..=126).contains(&first) {
            return Err(fail("size byte outside 63..=126"));
        }
        let n = (first - 63) as usize;
        if n == 0 || n > MAX_ORDER {
            return Err(fail("only orders 1..=10 are supported"));
        }
        let bits = pair_count(n);
        if rest.len() != bits.div_ceil(6) {
            return Err(fail(&format!(
                "expected {} data bytes for order {n}, found {}",
                bits.div_ceil(6),
                rest.len()
            )));
        }
        let mut edges = 0u64;
        for (chunk, &c) in rest.iter().enumerate() {
            if !(63..=126).contains(&c) {
                return Err(fail("data byte outside 63..=126"));
            }
            let six = c - 63;
            for k in 0..6 {
                let idx = chunk * 6 + k;
                if six >> (5 - k) & 1 == 1 {
                    if idx >= bits {
                        return Err(fail("nonzero padding bits"));
                    }
                    edges |= 1 << idx;
                }
            }
        }
        Ok(Self::from_raw(n, edges))
    }
}
