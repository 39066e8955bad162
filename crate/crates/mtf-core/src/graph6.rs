//! graph6 text codec: column-major upper-triangle bits in 6-bit chunks,
//! each offset by 63. Short header for `n <= 62`, the `~`-prefixed long
//! header for 63 and 64.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Encodes a graph in graph6 form. Requires `1 <= n <= 64`.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            if g.has_edge(u, v) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes a graph6 string. Accepts `1 <= n <= 64` and requires the exact
/// body length with zero padding bits.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside graph6 range")));
        }
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated long-form header".into()));
        }
        if bytes[1] == b'~' {
            return Err(Error::Graph6("8-byte headers not supported".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "body length {} does not match n = {n} (expected {expected})",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = (body[idx / 6] - 63) as u32;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
        }
    }
    // trailing padding must be zero
    if nbits % 6 != 0 {
        let last = (body[expected - 1] - 63) as u32;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Reference strings below were produced with networkx's graph6 writer.
    #[test]
    fn reference_encodings() {
        let cases: Vec<(Graph, &str)> = vec![
            (Graph::path(3).unwrap(), "Bg"),
            (Graph::empty(1).unwrap(), "@"),
            (Graph::path(2).unwrap(), "A_"),
            (Graph::cycle(5).unwrap(), "Dhc"),
            (
                Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap(),
                "DQc",
            ),
            (Graph::complete(4).unwrap(), "C~"),
            (Graph::empty(5).unwrap(), "D??"),
            (Graph::complete_bipartite(3, 3).unwrap(), "EFz_"),
            (Graph::path(7).unwrap(), "FhCGG"),
            (Graph::cycle(10).unwrap(), "IhCGGC@_G"),
        ];
        for (g, s) in cases {
            assert_eq!(encode(&g).unwrap(), s);
            assert_eq!(decode(s).unwrap(), g);
        }
    }

    #[test]
    fn exhaustive_roundtrip_up_to_n5() {
        for n in 1..=5usize {
            let slots: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << slots.len() {
                let edges: Vec<_> = slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
            }
        }
    }

    #[test]
    fn long_form_for_63_and_64() {
        for n in [63usize, 64] {
            let mut g = Graph::empty(n).unwrap();
            for v in 1..n {
                g.add_edge(v - 1, v).unwrap();
            }
            let s = encode(&g).unwrap();
            assert!(s.starts_with('~'));
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("?").is_err()); // n = 0
        assert!(decode("B").is_err()); // missing body
        assert!(decode("Bgg").is_err()); // body too long
        assert!(decode("B\u{7f}").is_err()); // byte out of range
        assert!(decode("Bh").is_err()); // nonzero padding
        assert!(decode("~~~~~~~~").is_err()); // 8-byte header
    }

    proptest! {
        #[test]
        fn roundtrip_random_graphs(n in 1usize..=10, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut state = seed | 1;
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 62 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }
}
