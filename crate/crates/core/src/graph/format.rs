//! graph6 and the plain `n; u-v,u-v` edge-list text form.

use super::{bit, Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

impl Graph {
    /// graph6 encoding (no header, no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
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
                acc = (acc << 1) | self.has_edge(i, j) as u8;
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

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        let bad = |why: &str| GraphError::Graph6(format!("{why} in {text:?}"));
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(bad("byte outside 63..=126"));
        }
        let (n, body) = match bytes {
            [] => return Err(bad("empty string")),
            [126, 126, ..] => return Err(bad("vertex count too large")),
            [126, a, b, c, rest @ ..] => {
                let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
                (n, rest)
            }
            [126, ..] => return Err(bad("truncated vertex count")),
            [first, rest @ ..] => (*first as usize - 63, rest),
        };
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let pairs = n * (n - 1) / 2;
        let expected = pairs.div_ceil(6);
        if body.len() != expected {
            return Err(bad(&format!(
                "expected {expected} adjacency bytes, found {}",
                body.len()
            )));
        }
        let mut g = Graph::new_empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte & (1 << (5 - k % 6)) != 0 {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                    g.m += 1;
                }
                k += 1;
            }
        }
        if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(bad("non-zero padding bits"));
        }
        Ok(g)
    }

    /// `"n; u-v,u-v,..."` with edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        if edges.is_empty() {
            format!("{};", self.n())
        } else {
            format!("{}; {}", self.n(), edges.join(","))
        }
    }

    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let bad = |why: String| GraphError::EdgeList(why);
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| bad(format!("missing ';' in {text:?}")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad vertex count {:?}", head.trim())))?;
        let mut g = Graph::new_empty(n)?;
        for item in tail.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| bad(format!("bad edge {item:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad vertex {s:?}")))
            };
            g = g.add_edge(parse(a)?, parse(b)?)?;
        }
        Ok(g)
    }
}
