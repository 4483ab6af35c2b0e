//! graph6 text encoding, bit-exact: every byte is a 6-bit value plus 63, the
//! order uses the standard short/long headers, and the upper-triangle
//! adjacency bits run column by column, zero-padded to a 6-bit boundary.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orders above this are rejected by the parser; corpus files and oracle
/// inputs are all far smaller.
pub const MAX_ORDER: usize = 4096;

fn err(msg: impl Into<String>, offset: usize) -> Error {
    Error::Graph6 { msg: msg.into(), offset }
}

/// Decode one graph6 line (no trailing newline, no `>>graph6<<` header).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty line", 0));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(format!("byte {b} outside the printable range 63..=126"), i));
        }
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();

    let (n, header_len) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 2 && vals[1] < 63 {
        if vals.len() < 4 {
            return Err(err("truncated 18-bit order header", vals.len()));
        }
        (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
    } else {
        if vals.len() < 8 {
            return Err(err("truncated 36-bit order header", vals.len()));
        }
        let mut n = 0u64;
        for &v in &vals[2..8] {
            n = (n << 6) | v;
        }
        (n as usize, 8)
    };
    if n == 0 {
        return Err(err("order 0 is not representable here", 0));
    }
    if n > MAX_ORDER {
        return Err(Error::SizeLimit { what: "graph6 order", n, limit: MAX_ORDER });
    }

    let bit_count = n * (n - 1) / 2;
    let payload_len = bit_count.div_ceil(6);
    if vals.len() != header_len + payload_len {
        return Err(err(
            format!(
                "payload length {} does not match the {} bytes needed for n = {n}",
                vals.len() - header_len,
                payload_len
            ),
            header_len,
        ));
    }

    let bit = |k: usize| -> bool {
        let byte = vals[header_len + k / 6];
        byte >> (5 - k % 6) & 1 == 1
    };
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits must be zero for a bit-exact round trip
    for pad in bit_count..payload_len * 6 {
        if bit(pad) {
            return Err(err("nonzero padding bit", header_len + pad / 6));
        }
    }
    Ok(g)
}

/// Encode to one graph6 line.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).expect("all bytes printable")
}
