//! Text format for colourings.
//!
//! ```text
//! <kind> <n> [r] [palette]
//! <one digit per edge in canonical order>
//! ```
//!
//! `kind` is `h3` (triples), `kn` (complete graph), `b2` (complete bipartite;
//! `bnn` is accepted as an alias) or `rxn` (transversal, followed by `r`).
//! Digits are `0` = red, `1` = blue, `2` = green; the palette field is only
//! written when it is 3. A rule-backed transversal colouring replaces the
//! digit line with `split s_1 ... s_r`.

use crate::colour::Colour;
use crate::colouring::{
    Colouring, HyperSplitSizes, PairColouring, PairShape, TransversalBacking, TransversalColouring, TripleColouring,
};
use crate::error::{parse_err, Result};
use crate::index::Shape;
use crate::packed::PackedColours;

pub fn serialize_colouring(c: &Colouring) -> String {
    let mut out = String::new();
    match c {
        Colouring::Triples(t) => {
            out.push_str(&format!("h3 {}\n", t.n()));
            push_digits(&mut out, t.store());
        }
        Colouring::Pairs(p) => {
            let kind = match p.shape() {
                PairShape::Complete(_) => "kn",
                PairShape::Bipartite(_) => "b2",
            };
            out.push_str(&format!("{kind} {}", p.n()));
            if p.palette() == 3 {
                out.push_str(" 3");
            }
            out.push('\n');
            push_digits(&mut out, p.store());
        }
        Colouring::Transversal(t) => {
            out.push_str(&format!("rxn {} {}\n", t.n(), t.r()));
            match t.backing() {
                TransversalBacking::Materialized(store) => push_digits(&mut out, store),
                TransversalBacking::Rule(sizes) => {
                    out.push_str("split");
                    for s in sizes.sizes() {
                        out.push_str(&format!(" {s}"));
                    }
                }
            }
        }
    }
    out
}

fn push_digits(out: &mut String, store: &PackedColours) {
    out.extend(store.iter().map(|d| (b'0' + d) as char));
}

fn number(tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(1, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(1, format!("{what} '{tok}' is not a number")))
}

fn digits(line: &str, palette: u8, len: usize) -> Result<PackedColours> {
    let count = line.chars().count();
    if count != len {
        return Err(parse_err(2, format!("expected {len} edge colours, found {count}")));
    }
    let mut store = PackedColours::new(palette, len);
    for (i, ch) in line.chars().enumerate() {
        match Colour::from_digit(ch) {
            Some(c) if c.in_palette(palette) => store.set(i, c.index()),
            _ => {
                return Err(parse_err(
                    2,
                    format!("character '{ch}' at position {i} is outside palette {palette}"),
                ))
            }
        }
    }
    Ok(store)
}

pub fn parse_colouring(text: &str) -> Result<Colouring> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let body = lines.next().unwrap_or("").trim();
    if let Some((i, _)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(parse_err(i + 3, "unexpected trailing content"));
    }
    let mut toks = header.split_whitespace();
    let kind = toks.next().ok_or_else(|| parse_err(1, "missing kind"))?;
    let n = number(toks.next(), "n")?;
    let (r, palette) = match kind {
        "rxn" => {
            let r = number(toks.next(), "r")?;
            (
                r,
                toks.next()
                    .map(|t| number(Some(t), "palette"))
                    .transpose()?
                    .unwrap_or(2),
            )
        }
        _ => (
            0,
            toks.next()
                .map(|t| number(Some(t), "palette"))
                .transpose()?
                .unwrap_or(2),
        ),
    };
    if toks.next().is_some() {
        return Err(parse_err(1, "too many header fields"));
    }
    if !(2..=3).contains(&palette) {
        return Err(parse_err(1, format!("palette {palette} not in 2..=3")));
    }
    let palette = palette as u8;
    match kind {
        "h3" => {
            if palette != 2 {
                return Err(parse_err(1, "triple colourings use two colours"));
            }
            let store = digits(body, 2, Shape::Triples(n).edge_count())?;
            Ok(Colouring::Triples(TripleColouring::from_store(n, store)))
        }
        "kn" | "b2" | "bnn" => {
            let shape = if kind == "kn" {
                PairShape::Complete(n)
            } else {
                PairShape::Bipartite(n)
            };
            let store = digits(body, palette, shape.shape().edge_count())?;
            Ok(Colouring::Pairs(PairColouring::from_store(shape, palette, store)))
        }
        "rxn" => {
            if palette != 2 {
                return Err(parse_err(1, "transversal colourings use two colours"));
            }
            if r == 0 {
                return Err(parse_err(1, "r must be positive"));
            }
            if let Some(rest) = body.strip_prefix("split") {
                let s = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| parse_err(2, format!("bad size '{t}'"))))
                    .collect::<Result<Vec<_>>>()?;
                if s.len() != r {
                    return Err(parse_err(2, format!("expected {r} part sizes, found {}", s.len())));
                }
                let sizes = HyperSplitSizes::new(n, s).map_err(|e| parse_err(2, e.to_string()))?;
                Ok(Colouring::Transversal(TransversalColouring::rule(sizes)))
            } else {
                let len = Shape::Transversal { r, n }.edge_count();
                if len > TransversalColouring::MATERIALIZE_CAP {
                    return Err(parse_err(1, "materialized colouring exceeds the cap"));
                }
                let store = digits(body, 2, len)?;
                Ok(Colouring::Transversal(TransversalColouring::from_store(r, n, store)))
            }
        }
        other => Err(parse_err(1, format!("unknown kind '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_triples() {
        let c = parse_colouring("h3 5\n0011001100").unwrap();
        let Colouring::Triples(t) = c else { panic!() };
        let blue: Vec<usize> = (0..10).filter(|&i| t.colour_at(i) == Colour::Blue).collect();
        assert_eq!(blue, vec![2, 3, 6, 7]);
    }

    #[test]
    fn serializes_bipartite() {
        let c = PairColouring::uniform(PairShape::Bipartite(2), 2, Colour::Red).unwrap();
        assert_eq!(serialize_colouring(&c.into()), "b2 2\n0000");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_colouring("b2 2\n00X0").is_err());
        assert!(parse_colouring("b2 2\n000").is_err());
        assert!(parse_colouring("b2 2\n0020").is_err());
        assert!(parse_colouring("b2 2 3\n0020").is_ok());
        assert!(parse_colouring("h3 4 3\n0000").is_err());
        assert!(parse_colouring("zz 4\n").is_err());
        assert!(parse_colouring("rxn 3 2\nsplit 1").is_err());
        assert!(parse_colouring("rxn 3 2\nsplit 1 3").is_err());
    }

    #[test]
    fn accepts_bnn_alias_and_rule() {
        assert!(parse_colouring("bnn 1\n1\n").is_ok());
        let c = parse_colouring("rxn 4 2\nsplit 1 2").unwrap();
        assert_eq!(serialize_colouring(&c), "rxn 4 2\nsplit 1 2");
    }

    #[test]
    fn tiny_hosts_have_empty_bodies() {
        let c = parse_colouring("h3 2").unwrap();
        assert_eq!(serialize_colouring(&c), "h3 2\n");
        assert_eq!(parse_colouring("h3 2\n").unwrap(), c);
    }
}
