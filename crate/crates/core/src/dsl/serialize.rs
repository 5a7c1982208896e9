//! Canonical text form. Serializing a parsed file and parsing the result
//! gives back an equal workspace; serializing twice gives identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::Workspace;
use crate::algebra::{AlgebraInstance, LinearFamily};
use crate::linalg::{format_rational, Rational};
use crate::semigroup::SemigroupTable;

pub const HEADER: &str = "# bihomega workspace v1";

fn term(out: &mut String, c: &Rational, k: usize, first: bool) {
    let mag = c.abs();
    match (first, c.is_negative()) {
        (true, false) => {}
        (true, true) => out.push('-'),
        (false, false) => out.push_str(" + "),
        (false, true) => out.push_str(" - "),
    }
    if !mag.is_one() {
        out.push_str(&format_rational(&mag));
        out.push(' ');
    }
    let _ = write!(out, "e{}", k + 1);
}

/// `1/2 e2 - e1` style linear combination; `0` when empty.
pub fn format_combination(v: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let first = out.is_empty();
        term(&mut out, c, k, first);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn write_semigroup(out: &mut String, t: &SemigroupTable) {
    let _ = writeln!(out, "semigroup {} {{", t.name());
    let _ = writeln!(out, "  elements {};", t.elements().join(" "));
    out.push_str("  table {\n");
    for a in t.iter() {
        out.push_str("   ");
        for b in t.iter() {
            let _ = write!(out, " {}*{}={};", t.label(a), t.label(b), t.label(t.mul(a, b)));
        }
        out.push('\n');
    }
    out.push_str("  }\n");
    if t.declared_commutative() {
        out.push_str("  commutative;\n");
    }
    out.push_str("}\n");
}

fn write_entries(out: &mut String, f: &LinearFamily, indent: &str) {
    let w = f.omega();
    for a in w.iter() {
        let _ = writeln!(out, "{indent}{}: {};", w.label(a), f.get(a));
    }
}

fn write_algebra(out: &mut String, name: &str, a: &AlgebraInstance) {
    let w = a.omega();
    let d = a.dim();
    let _ = writeln!(out, "algebra {name} : {} over {} dim {d} {{", a.kind(), w.name());
    for (c, comp) in a.kind().components().iter().enumerate() {
        let f = a.product(c);
        let _ = writeln!(out, "  product {comp} {{");
        for x in w.iter() {
            for y in w.iter() {
                for i in 0..d {
                    for j in 0..d {
                        let v = f.basis_product(x, y, i, j);
                        if v.iter().all(Zero::is_zero) {
                            continue;
                        }
                        let _ = writeln!(
                            out,
                            "    ({},{}): e{}*e{} = {};",
                            w.label(x),
                            w.label(y),
                            i + 1,
                            j + 1,
                            format_combination(v)
                        );
                    }
                }
            }
        }
        out.push_str("  }\n");
    }
    for (m, fam) in [("p", a.p()), ("q", a.q())] {
        if fam.is_identity() {
            continue;
        }
        let _ = writeln!(out, "  map {m} {{");
        write_entries(out, fam, "    ");
        out.push_str("  }\n");
    }
    out.push_str("}\n");
}

pub fn serialize_workspace(ws: &Workspace) -> String {
    // Semigroups referenced only through an object still get a definition.
    let mut sgs: BTreeMap<&str, &Arc<SemigroupTable>> = ws.semigroups.iter().map(|(k, v)| (k.as_str(), v)).collect();
    let referenced = ws
        .algebras
        .values()
        .map(|a| a.omega())
        .chain(ws.linear.values().map(|f| f.omega()))
        .chain(ws.rota_baxter.values().map(|r| r.maps.omega()));
    for w in referenced {
        sgs.entry(w.name()).or_insert(w);
    }

    let mut blocks = Vec::new();
    for t in sgs.values() {
        let mut s = String::new();
        write_semigroup(&mut s, t);
        blocks.push(s);
    }
    for (name, a) in &ws.algebras {
        let mut s = String::new();
        write_algebra(&mut s, name, a);
        blocks.push(s);
    }
    for (name, f) in &ws.linear {
        let mut s = format!("linear {name} over {} dim {} {{\n", f.omega().name(), f.dim());
        write_entries(&mut s, f, "  ");
        s.push_str("}\n");
        blocks.push(s);
    }
    for (name, r) in &ws.rota_baxter {
        let f = &r.maps;
        let mut s = format!(
            "rota_baxter {name} over {} dim {} weight {} {{\n",
            f.omega().name(),
            f.dim(),
            format_rational(&r.weight)
        );
        write_entries(&mut s, f, "  ");
        s.push_str("}\n");
        blocks.push(s);
    }

    let mut out = String::from(HEADER);
    out.push('\n');
    for b in blocks {
        out.push('\n');
        out.push_str(&b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_workspace;
    use crate::forge;
    use crate::linalg::{int, rat};

    #[test]
    fn combinations() {
        assert_eq!(format_combination(&[int(0), int(0)]), "0");
        assert_eq!(format_combination(&[int(0), int(1)]), "e2");
        assert_eq!(format_combination(&[int(0), int(-1)]), "-e2");
        assert_eq!(format_combination(&[rat(-1, 2), rat(1, 2)]), "-1/2 e1 + 1/2 e2");
        assert_eq!(format_combination(&[int(1), int(-3)]), "e1 - 3 e2");
    }

    #[test]
    fn corpus_round_trips() {
        let mut ws = Workspace::new();
        for entry in forge::corpus() {
            ws.add_algebra(&entry.name.replace('-', "_"), entry.instance).unwrap();
        }
        let text = serialize_workspace(&ws);
        let back = parse_workspace(&text).unwrap();
        assert_eq!(back, ws);
        assert_eq!(serialize_workspace(&back), text);
    }

    #[test]
    fn empty_workspace() {
        assert_eq!(serialize_workspace(&Workspace::new()), "# bihomega workspace v1\n");
        assert!(parse_workspace(HEADER).unwrap().is_empty());
    }

    #[test]
    fn layout() {
        let src = "semigroup T { elements e; table { e*e=e; } }
                   algebra D : associative over T dim 2 { product mul { (e,e): e1*e1 = e1; (e,e): e1*e2 = e2; (e,e): e2*e1 = e2; } }
                   rota_baxter R over T dim 2 weight 1/2 { e: [[0,0],[0,-1]]; }";
        let text = serialize_workspace(&parse_workspace(src).unwrap());
        let want = "# bihomega workspace v1

semigroup T {
  elements e;
  table {
    e*e=e;
  }
}

algebra D : associative over T dim 2 {
  product mul {
    (e,e): e1*e1 = e1;
    (e,e): e1*e2 = e2;
    (e,e): e2*e1 = e2;
  }
}

rota_baxter R over T dim 2 weight 1/2 {
  e: [[0,0],[0,-1]];
}
";
        assert_eq!(text, want);
    }
}
