//! The graph6 text format.
//!
//! A header `N(n)` (one byte `n + 63` for `n <= 62`, otherwise `126`
//! followed by three 6-bit bytes), then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six
//! bits per byte, most significant bit first, each byte offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid byte 0x{b:02x}")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6("graph too large".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for {n} vertices, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(encode(&Graph::path(3).unwrap()), "Bg");
        assert_eq!(decode("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(decode(">>graph6<<Dhc\n").unwrap(), Graph::cycle(5).unwrap());
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("Dh").is_err());
        assert!(decode("Dhcc").is_err());
        assert!(decode("A`").is_err());
        assert!(decode("A\x20").is_err());
    }

    #[test]
    fn long_header_for_63_vertices() {
        let g = Graph::cycle(63).unwrap();
        let s = encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 0, 63 + 63]);
        assert_eq!(decode(&s).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=62).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn roundtrip(g in arb_graph()) {
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g.clone());
            prop_assert_eq!(encode(&decode(&s).unwrap()), s);
        }
    }
}
