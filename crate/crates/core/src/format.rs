//! Graph input/output: a bit-exact graph6 codec and a line-oriented
//! edge-list format.
//!
//! graph6 follows the de facto standard used by nauty and friends: a
//! header byte `63 + n`, then the upper triangle of the adjacency matrix
//! in column-major order — (0,1), (0,2), (1,2), (0,3), ... — packed six
//! bits per byte, most significant bit first, each byte offset by 63,
//! with the final partial group zero-padded. That body bit order is the
//! same order [`crate::graph::upper_triangle_pairs`] yields and the same
//! order the verification sweep uses for its edge codes.
//!
//! Only the short (single-byte) header is supported, so `n <= 62`; the
//! long multi-byte headers would serve graphs this crate cannot hold
//! anyway. Decoding is strict by default: every byte must be in
//! `63..=126`, the body length must match the header exactly, and the
//! padding bits must be zero. [`decode_graph6_lenient`] ignores padding
//! bits, for salvaging sloppily produced third-party files.
//!
//! The edge-list format is line oriented ASCII: a header line `n <count>`
//! (so isolated vertices are representable), then one `u v` pair per
//! line, 0-based; `#` starts a comment. Duplicate edges are tolerated;
//! self-loops and out-of-range endpoints are rejected.

use std::error::Error;
use std::fmt;

use crate::graph::{upper_triangle_pairs, Graph, MAX_VERTICES};

/// Largest order the single-byte graph6 header can express.
pub const GRAPH6_MAX_VERTICES: usize = 62;

/// Errors from the graph6 codec and the edge-list parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    /// Encoding a graph with more vertices than the short header covers.
    Graph6TooLarge { n: usize },
    /// Empty input where a graph6 string was expected.
    Graph6Empty,
    /// Header byte 126 announces the unsupported long form.
    Graph6LongForm,
    /// A byte outside the printable range 63..=126.
    Graph6ByteOutOfRange { byte: u8, position: usize },
    /// Fewer body bytes than the declared order requires.
    Graph6Truncated { expected: usize, got: usize },
    /// More body bytes than the declared order requires.
    Graph6TrailingData { expected: usize, got: usize },
    /// Padding bits after the edge bits are not zero (strict mode).
    Graph6NonZeroPadding,
    /// Edge list did not start with an `n <count>` header line.
    EdgeListMissingHeader,
    /// Vertex count in the header exceeds capacity.
    TooManyVertices { n: usize },
    /// A token failed to parse where an integer was expected.
    EdgeListParse { line: usize, message: String },
    /// An edge joins a vertex to itself.
    EdgeListSelfLoop { line: usize, vertex: usize },
    /// An endpoint is not below the declared vertex count.
    EdgeListVertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Graph6TooLarge { n } => {
                write!(
                    f,
                    "graph6 short form encodes at most {GRAPH6_MAX_VERTICES} vertices, got {n}"
                )
            }
            FormatError::Graph6Empty => write!(f, "empty graph6 string"),
            FormatError::Graph6LongForm => {
                write!(f, "graph6 long-form header (n >= 63) is not supported")
            }
            FormatError::Graph6ByteOutOfRange { byte, position } => {
                write!(
                    f,
                    "graph6 byte {byte:#04x} at position {position} outside 63..=126"
                )
            }
            FormatError::Graph6Truncated { expected, got } => {
                write!(
                    f,
                    "graph6 body truncated: expected {expected} bytes, got {got}"
                )
            }
            FormatError::Graph6TrailingData { expected, got } => {
                write!(
                    f,
                    "graph6 body too long: expected {expected} bytes, got {got}"
                )
            }
            FormatError::Graph6NonZeroPadding => {
                write!(
                    f,
                    "graph6 padding bits are not zero (corrupt or non-canonical encoding)"
                )
            }
            FormatError::EdgeListMissingHeader => {
                write!(f, "edge list must start with an 'n <count>' header line")
            }
            FormatError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceed the {MAX_VERTICES}-vertex capacity")
            }
            FormatError::EdgeListParse { line, message } => {
                write!(f, "edge list line {line}: {message}")
            }
            FormatError::EdgeListSelfLoop { line, vertex } => {
                write!(f, "edge list line {line}: self-loop at vertex {vertex}")
            }
            FormatError::EdgeListVertexOutOfRange { line, vertex, n } => {
                write!(
                    f,
                    "edge list line {line}: vertex {vertex} out of range for n = {n}"
                )
            }
        }
    }
}

impl Error for FormatError {}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes a graph as a canonical graph6 string.
pub fn encode_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(FormatError::Graph6TooLarge { n });
    }
    let mut bytes = Vec::with_capacity(1 + body_len(n));
    bytes.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for (u, v) in upper_triangle_pairs(n) {
        acc = acc << 1 | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            bytes.push(63 + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(bytes).expect("all bytes are printable ASCII"))
}

fn decode_impl(s: &str, strict: bool) -> Result<Graph, FormatError> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::Graph6ByteOutOfRange { byte, position });
        }
    }
    if bytes[0] == 126 {
        return Err(FormatError::Graph6LongForm);
    }
    let n = (bytes[0] - 63) as usize;
    let body = &bytes[1..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(FormatError::Graph6Truncated {
            expected,
            got: body.len(),
        });
    }
    if body.len() > expected {
        return Err(FormatError::Graph6TrailingData {
            expected,
            got: body.len(),
        });
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    for (k, (u, v)) in upper_triangle_pairs(n).enumerate() {
        if bit_at(k) {
            edges.push((u, v));
        }
    }
    if strict {
        let edge_bits = n * n.saturating_sub(1) / 2;
        for k in edge_bits..expected * 6 {
            if bit_at(k) {
                return Err(FormatError::Graph6NonZeroPadding);
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("upper-triangle pairs are always valid"))
}

/// Decodes a graph6 string, rejecting malformed input including nonzero
/// padding bits. Inverse of [`encode_graph6`] in both directions.
pub fn decode_graph6(s: &str) -> Result<Graph, FormatError> {
    decode_impl(s, true)
}

/// Like [`decode_graph6`] but ignores the padding bits.
pub fn decode_graph6_lenient(s: &str) -> Result<Graph, FormatError> {
    decode_impl(s, false)
}

/// Parses the `n <count>` / `u v` edge-list format described in the
/// module docs.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some(count) = n else {
            if tokens.len() != 2 || tokens[0] != "n" {
                return Err(FormatError::EdgeListMissingHeader);
            }
            let declared = tokens[1]
                .parse::<usize>()
                .map_err(|_| FormatError::EdgeListParse {
                    line,
                    message: format!("invalid vertex count '{}'", tokens[1]),
                })?;
            if declared > MAX_VERTICES {
                return Err(FormatError::TooManyVertices { n: declared });
            }
            n = Some(declared);
            continue;
        };
        if tokens.len() != 2 {
            return Err(FormatError::EdgeListParse {
                line,
                message: format!("expected 'u v', got {} tokens", tokens.len()),
            });
        }
        let mut pair = [0usize; 2];
        for (slot, token) in pair.iter_mut().zip(&tokens) {
            *slot = token
                .parse::<usize>()
                .map_err(|_| FormatError::EdgeListParse {
                    line,
                    message: format!("invalid vertex '{token}'"),
                })?;
        }
        let [u, v] = pair;
        if u == v {
            return Err(FormatError::EdgeListSelfLoop { line, vertex: u });
        }
        for w in pair {
            if w >= count {
                return Err(FormatError::EdgeListVertexOutOfRange {
                    line,
                    vertex: w,
                    n: count,
                });
            }
        }
        edges.push((u, v));
    }
    let Some(count) = n else {
        return Err(FormatError::EdgeListMissingHeader);
    };
    Ok(Graph::from_edges(count, edges).expect("edges validated above"))
}

/// Formats a graph as an edge list: `n <count>` header then sorted
/// `u v` pairs with u < v.
pub fn format_edge_list(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut pairs: Vec<(usize, usize)> = upper_triangle_pairs(n)
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect();
    pairs.sort_unstable();
    let mut out = format!("n {n}\n");
    for (u, v) in pairs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_fixed_vectors() {
        assert_eq!(encode_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode_graph6(&Graph::edgeless(2).unwrap()).unwrap(), "A?");
        assert_eq!(decode_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(decode_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(decode_graph6("A?").unwrap(), Graph::edgeless(2).unwrap());
    }

    #[test]
    fn graph6_tiny_orders() {
        assert_eq!(encode_graph6(&Graph::edgeless(0).unwrap()).unwrap(), "?");
        assert_eq!(encode_graph6(&Graph::edgeless(1).unwrap()).unwrap(), "@");
        assert_eq!(decode_graph6("?").unwrap().vertex_count(), 0);
        assert_eq!(decode_graph6("@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn graph6_exhaustive_round_trip() {
        for n in 0..=5usize {
            for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_edge_code(n, code);
                let s = encode_graph6(&g).unwrap();
                assert_eq!(decode_graph6(&s).unwrap(), g, "n={n} code={code}");
                assert_eq!(encode_graph6(&decode_graph6(&s).unwrap()).unwrap(), s);
            }
        }
    }

    #[test]
    fn graph6_body_order_matches_edge_codes() {
        // The packed body bits must be exactly the sweep's edge-code bits.
        for code in 0..1u64 << 10 {
            let g = Graph::from_edge_code(5, code);
            let s = encode_graph6(&g).unwrap();
            let body = &s.as_bytes()[1..];
            let mut unpacked = 0u64;
            for k in 0..10 {
                if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                    unpacked |= 1 << k;
                }
            }
            assert_eq!(unpacked, code);
        }
    }

    #[test]
    fn graph6_malformed_inputs() {
        assert_eq!(
            decode_graph6("B"),
            Err(FormatError::Graph6Truncated {
                expected: 1,
                got: 0
            })
        );
        assert_eq!(
            decode_graph6("Bww"),
            Err(FormatError::Graph6TrailingData {
                expected: 1,
                got: 2
            })
        );
        assert_eq!(decode_graph6(""), Err(FormatError::Graph6Empty));
        assert_eq!(
            decode_graph6("B w"),
            Err(FormatError::Graph6ByteOutOfRange {
                byte: b' ',
                position: 1
            })
        );
        assert_eq!(decode_graph6("~??"), Err(FormatError::Graph6LongForm));
    }

    #[test]
    fn graph6_padding_strictness() {
        // n = 2 has one edge bit and five pad bits; 'C' = 000100 sets a pad bit.
        assert_eq!(decode_graph6("AC"), Err(FormatError::Graph6NonZeroPadding));
        assert_eq!(
            decode_graph6_lenient("AC").unwrap(),
            Graph::edgeless(2).unwrap()
        );
        // '_' = 100000 sets the edge bit and no pad bits.
        assert_eq!(decode_graph6("A_").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn graph6_capacity() {
        assert_eq!(
            encode_graph6(&Graph::edgeless(63).unwrap()),
            Err(FormatError::Graph6TooLarge { n: 63 })
        );
        assert!(encode_graph6(&Graph::edgeless(62).unwrap()).is_ok());
    }

    #[test]
    fn edge_list_parses_k3() {
        let g = parse_edge_list("n 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn edge_list_comments_duplicates_isolated() {
        let text = "# a triangle plus an isolated vertex\nn 4\n0 1 # dup below\n0 1\n1 2\n0 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn edge_list_rejections() {
        assert_eq!(
            parse_edge_list("n 2\n0 0\n"),
            Err(FormatError::EdgeListSelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("n 2\n0 7\n"),
            Err(FormatError::EdgeListVertexOutOfRange {
                line: 2,
                vertex: 7,
                n: 2
            })
        );
        assert!(matches!(
            parse_edge_list("n 2\n0 x\n"),
            Err(FormatError::EdgeListParse { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("0 1\n"),
            Err(FormatError::EdgeListMissingHeader)
        );
        assert_eq!(parse_edge_list(""), Err(FormatError::EdgeListMissingHeader));
        assert_eq!(
            parse_edge_list("n 65\n"),
            Err(FormatError::TooManyVertices { n: 65 })
        );
    }

    #[test]
    fn edge_list_round_trip_m7() {
        let m7 = Graph::moon_moser(7).unwrap();
        let text = format_edge_list(&m7);
        assert!(text.starts_with("n 7\n"));
        assert_eq!(text.lines().count(), 10); // header + 9 edges
        assert_eq!(parse_edge_list(&text).unwrap(), m7);
    }

    #[test]
    fn cross_format_agreement() {
        for n in 0..=5usize {
            for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_edge_code(n, code);
                assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
            }
        }
    }
}
