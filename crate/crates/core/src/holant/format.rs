//! Text format for signature graphs:
//!
//! ```text
//! v <n>
//! sig <vertex> hw1 | annot | table <r_0> <r_1> ..
//! col <color>                           (declared color)
//! e <u> <v> c=<color> [a=<annotation>]
//! d <u> <label> c=<color> [a=<annotation>]
//! ```
//!
//! Vertices default to `hw1`. Table entries are rationals such as `3` or
//! `-1/2`. Matchgate signatures cannot be written.

use std::fmt::Write;

use super::{Signature, SignatureGraph};
use crate::error::{Error, Result};
use crate::numeric::Rational;

pub fn serialize_signature_graph(sg: &SignatureGraph) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "v {}", sg.n()).unwrap();
    for v in 0..sg.n() {
        match sg.sig(v) {
            Signature::HwLeq1 => {}
            Signature::AnnotationEq => writeln!(out, "sig {v} annot").unwrap(),
            Signature::Table(values) => {
                write!(out, "sig {v} table").unwrap();
                for x in values {
                    write!(out, " {x}").unwrap();
                }
                out.push('\n');
            }
            Signature::Matchgate(_) => {
                return Err(Error::Precondition(format!(
                    "vertex {v} carries a matchgate signature, which has no text form"
                )))
            }
        }
    }
    for c in sg.declared() {
        writeln!(out, "col {c}").unwrap();
    }
    for e in sg.edges() {
        match (e.v, e.label) {
            (Some(v), _) => write!(out, "e {} {v} c={}", e.u, e.color).unwrap(),
            (None, Some(l)) => write!(out, "d {} {l} c={}", e.u, e.color).unwrap(),
            (None, None) => unreachable!("dangling edges carry labels"),
        }
        if let Some(a) = e.annotation {
            write!(out, " a={a}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_signature_graph(text: &str) -> Result<SignatureGraph> {
    let mut sg: Option<SignatureGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        let num = |i: usize| -> Result<usize> {
            toks.get(i)
                .ok_or_else(|| err("missing field".into()))?
                .parse()
                .map_err(|_| err(format!("bad integer {:?}", toks[i])))
        };
        if toks[0] == "v" {
            if sg.is_some() {
                return Err(err("repeated v header".into()));
            }
            let mut s = SignatureGraph::new();
            for _ in 0..num(1)? {
                s.add_vertex(Signature::HwLeq1);
            }
            sg = Some(s);
            continue;
        }
        let s = sg.as_mut().ok_or_else(|| err("missing v header".into()))?;
        match toks[0] {
            "sig" => {
                let v = num(1)?;
                if v >= s.n() {
                    return Err(err(format!("no vertex {v}")));
                }
                let sig = match toks.get(2).copied() {
                    Some("hw1") => Signature::HwLeq1,
                    Some("annot") => Signature::AnnotationEq,
                    Some("table") => {
                        let values = toks[3..]
                            .iter()
                            .map(|t| t.parse::<Rational>().map_err(|_| err(format!("bad value {t:?}"))))
                            .collect::<Result<Vec<_>>>()?;
                        Signature::Table(values)
                    }
                    other => return Err(err(format!("unknown signature {other:?}"))),
                };
                s.set_sig(v, sig);
            }
            "col" => {
                let c = num(1)?;
                if c == 0 {
                    return Err(err("colors are 1-based".into()));
                }
                s.declare_color(c as u32);
            }
            "e" | "d" => {
                let (a, b) = (num(1)?, num(2)?);
                let mut color = None;
                let mut annotation = None;
                for attr in &toks[3..] {
                    if let Some(c) = attr.strip_prefix("c=") {
                        color = Some(c.parse::<u32>().map_err(|_| err(format!("bad color {c:?}")))?);
                    } else if let Some(x) = attr.strip_prefix("a=") {
                        annotation = Some(x.parse::<usize>().map_err(|_| err(format!("bad annotation {x:?}")))?);
                    } else {
                        return Err(err(format!("unknown attribute {attr:?}")));
                    }
                }
                let color = color.ok_or_else(|| err("edge needs c=<color>".into()))?;
                let res = if toks[0] == "e" {
                    s.add_edge(a, b, color, annotation)
                } else {
                    s.add_dangling(a, color, b, annotation)
                };
                res.map_err(|e| err(e.to_string()))?;
            }
            other => return Err(err(format!("unknown line type {other:?}"))),
        }
    }
    sg.ok_or(Error::Parse {
        line: 0,
        msg: "missing v header".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn round_trip() {
        let mut s = SignatureGraph::new();
        for _ in 0..3 {
            s.add_vertex(Signature::HwLeq1);
        }
        s.set_sig(1, Signature::AnnotationEq);
        s.set_sig(2, Signature::Table(vec![rat(1), Rational::new(rat(-1).to_integer(), rat(2).to_integer())]));
        s.add_edge(0, 1, 2, Some(4)).unwrap();
        s.add_dangling(2, 1, 1, None).unwrap();
        s.declare_color(5);
        let text = serialize_signature_graph(&s).unwrap();
        assert!(text.contains("-1/2"));
        let back = parse_signature_graph(&text).unwrap();
        assert_eq!(serialize_signature_graph(&back).unwrap(), text);
        assert_eq!(back.edges(), s.edges());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_signature_graph("e 0 1 c=1").is_err());
        assert!(parse_signature_graph("v 2\ne 0 1").is_err());
        assert!(parse_signature_graph("v 2\nsig 5 hw1").is_err());
        assert!(parse_signature_graph("v 2\nsig 0 weird").is_err());
    }
}
