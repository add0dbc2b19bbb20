//! Plain-text file formats shared by the library and the CLI.
//!
//! * Graph: first non-comment line `n m`, then `m` lines `u v` with
//!   0-based ids; `#` starts a comment line.
//! * Coloring: one line of `n` space-separated integers.
//! * Interval scene: one `L R` pair per line, decimal rationals.
//! * Point scene: one `x y` pair per line, decimal rationals.
//! * Extension sequence: first line `n`, then lines `i OP j` with
//!   `OP` one of `P`, `T`, `F`.
//! * Split partition: one line of `n` tokens `K` or `I`.

use crate::classes::geom::{IntervalScene, PointScene, Rational};
use crate::generators::{ExtOp, ExtStep, ExtensionSequence};
use crate::graph::{Coloring, Graph};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    }
}

/// Parses a decimal rational such as `-12`, `3.25` or `0.001`; explicit
/// fractions `p/q` are accepted as well for exactness.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.parse().ok()?;
        let q: BigInt = q.parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (sign, rest) = match s.as_bytes().first()? {
        b'-' => (-1, &s[1..]),
        b'+' => (1, &s[1..]),
        _ => (1, s),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, f),
        None => (rest, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().ok()?
    };
    let mut denom = BigInt::from(1);
    for d in frac_part.bytes() {
        numer = numer * 10 + (d - b'0');
        denom *= 10;
    }
    Some(BigRational::new(numer * sign, denom))
}

/// Formats a rational as a finite decimal when the denominator divides a
/// power of ten, exact `p/q` notation otherwise.
pub fn format_rational(r: &Rational) -> String {
    let mut denom = r.denom().clone();
    let (mut twos, mut fives) = (0u32, 0u32);
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if denom != BigInt::from(1) {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let shift = twos.max(fives);
    let scale = BigInt::from(10).pow(shift);
    let v = (r * BigRational::from_integer(scale)).to_integer();
    let sign = if v.is_negative() { "-" } else { "" };
    let digits = v.abs().to_string();
    if shift == 0 {
        return format!("{sign}{digits}");
    }
    let digits = format!("{:0>width$}", digits, width = shift as usize + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - shift as usize);
    format!("{sign}{int_part}.{frac_part}")
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing `n m` header line"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(ln, "bad vertex count"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(ln, "bad edge count"))?;
    let mut g = Graph::new(n);
    let mut seen = 0usize;
    for (ln, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad edge endpoint"))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad edge endpoint"))?;
        if u == v || u >= n || v >= n {
            return Err(parse_err(ln, format!("edge ({u},{v}) out of range")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m || g.m() != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges, file has {seen} ({} distinct)", g.m()),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_coloring(text: &str, k: u32) -> Result<Coloring> {
    let (ln, line) = data_lines(text)
        .next()
        .ok_or_else(|| parse_err(0, "missing coloring line"))?;
    let mut assignment = Vec::new();
    for tok in line.split_whitespace() {
        let c: u32 = tok
            .parse()
            .map_err(|_| parse_err(ln, format!("bad color `{tok}`")))?;
        assignment.push(c);
    }
    let max = assignment.iter().copied().max().unwrap_or(0);
    Ok(Coloring::new(assignment, k.max(max)))
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = c
        .assignment()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

pub fn read_intervals(text: &str) -> Result<IntervalScene> {
    let mut iv = Vec::new();
    for (ln, line) in data_lines(text) {
        let mut it = line.split_whitespace();
        let l = it
            .next()
            .and_then(parse_decimal)
            .ok_or_else(|| parse_err(ln, "bad left endpoint"))?;
        let r = it
            .next()
            .and_then(parse_decimal)
            .ok_or_else(|| parse_err(ln, "bad right endpoint"))?;
        iv.push((l, r));
    }
    Ok(IntervalScene::new(iv))
}

pub fn write_intervals(scene: &IntervalScene) -> String {
    scene
        .intervals()
        .iter()
        .map(|(l, r)| format!("{} {}\n", format_rational(l), format_rational(r)))
        .collect()
}

pub fn read_points(text: &str) -> Result<PointScene> {
    let mut pts = Vec::new();
    for (ln, line) in data_lines(text) {
        let mut it = line.split_whitespace();
        let x = it
            .next()
            .and_then(parse_decimal)
            .ok_or_else(|| parse_err(ln, "bad x coordinate"))?;
        let y = it
            .next()
            .and_then(parse_decimal)
            .ok_or_else(|| parse_err(ln, "bad y coordinate"))?;
        pts.push((x, y));
    }
    Ok(PointScene::new(pts))
}

pub fn write_points(scene: &PointScene) -> String {
    scene
        .points()
        .iter()
        .map(|(x, y)| format!("{} {}\n", format_rational(x), format_rational(y)))
        .collect()
}

pub fn read_sequence(text: &str) -> Result<ExtensionSequence> {
    let mut lines = data_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing vertex count line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(ln, "bad vertex count"))?;
    let mut steps = Vec::new();
    for (ln, line) in lines {
        let mut it = line.split_whitespace();
        let vertex: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad vertex"))?;
        let op = it
            .next()
            .and_then(|t| t.chars().next())
            .and_then(ExtOp::from_letter)
            .ok_or_else(|| parse_err(ln, "bad operation, expected P, T or F"))?;
        let anchor: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(ln, "bad anchor vertex"))?;
        steps.push(ExtStep { vertex, op, anchor });
    }
    let seq = ExtensionSequence::new(n, steps);
    seq.validate()?;
    Ok(seq)
}

pub fn write_sequence(seq: &ExtensionSequence) -> String {
    let mut out = format!("{}\n", seq.n());
    for s in seq.steps() {
        out.push_str(&format!("{} {} {}\n", s.vertex, s.op.letter(), s.anchor));
    }
    out
}

/// Reads a `K`/`I` token per vertex, returning the two sorted parts.
pub fn read_partition(text: &str, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let (ln, line) = data_lines(text)
        .next()
        .ok_or_else(|| parse_err(0, "missing partition line"))?;
    let mut clique = Vec::new();
    let mut independent = Vec::new();
    let mut count = 0usize;
    for (v, tok) in line.split_whitespace().enumerate() {
        match tok {
            "K" => clique.push(v),
            "I" => independent.push(v),
            other => return Err(parse_err(ln, format!("bad partition token `{other}`"))),
        }
        count += 1;
    }
    if count != n {
        return Err(parse_err(
            ln,
            format!("partition has {count} entries for {n} vertices"),
        ));
    }
    Ok((clique, independent))
}

pub fn write_partition(n: usize, clique: &[usize]) -> String {
    let mut tokens = vec!["I"; n];
    for &v in clique {
        tokens[v] = "K";
    }
    let mut out = tokens.join(" ");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph_roundtrip_with_comments() {
        let text = "# a triangle\n3 3\n0 1\n# middle comment\n1 2\n0 2\n";
        let g = read_graph(text).unwrap();
        assert_eq!(g, crate::named::named_graph("k3").unwrap());
        assert_eq!(read_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_header_mismatch() {
        assert!(read_graph("2 2\n0 1\n").is_err());
        assert!(read_graph("2 1\n0 1\n0 1\n").is_err());
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(
            parse_decimal("3.25").unwrap(),
            BigRational::new(13.into(), 4.into())
        );
        assert_eq!(
            parse_decimal("-0.5").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_decimal("1.2.3").is_none());
        assert!(parse_decimal("x").is_none());
    }

    #[test]
    fn sequence_roundtrip() {
        let seq = crate::generators::random_extension_seq(
            9,
            &[ExtOp::Pendant, ExtOp::TrueTwin, ExtOp::FalseTwin],
            5,
        );
        let text = write_sequence(&seq);
        assert_eq!(read_sequence(&text).unwrap(), seq);
    }

    #[test]
    fn partition_roundtrip() {
        let text = write_partition(4, &[1, 3]);
        let (k, i) = read_partition(&text, 4).unwrap();
        assert_eq!(k, vec![1, 3]);
        assert_eq!(i, vec![0, 2]);
    }

    proptest! {
        #[test]
        fn coloring_roundtrips(colors in proptest::collection::vec(0u32..9, 1..40)) {
            let k = colors.iter().copied().max().unwrap_or(0).max(1);
            let c = Coloring::new(colors, k);
            let text = write_coloring(&c);
            let back = read_coloring(&text, k).unwrap();
            prop_assert_eq!(back.assignment(), c.assignment());
        }

        #[test]
        fn rational_decimal_roundtrips(num in -100_000i64..100_000, scale in 0u32..5) {
            let denom = 10i64.pow(scale);
            let r = BigRational::new(num.into(), denom.into());
            let s = format_rational(&r);
            let back = parse_decimal(&s).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
