//! LL(1) recursive descent into a raw syntax tree, then name resolution.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ResolutionError, Workspace, WorkspaceError};
use crate::algebra::{new_instance, AlgebraKind, BilinearFamily, LinearFamily, RotaBaxterFamily};
use crate::linalg::{Matrix, Rational};
use crate::semigroup::SemigroupTable;

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug, Clone)]
struct Name {
    text: String,
    pos: Pos,
}

struct RawSemigroup {
    name: Name,
    elements: Vec<Name>,
    table: Vec<(Name, Name, Name)>,
    commutative: bool,
}

struct RawCell {
    a: Name,
    b: Name,
    i: (usize, Pos),
    j: (usize, Pos),
    rhs: Vec<(Rational, usize, Pos)>,
}

struct RawMatrix {
    rows: Vec<Vec<Rational>>,
    pos: Pos,
}

struct RawAlgebra {
    name: Name,
    kind: AlgebraKind,
    over: Name,
    dim: usize,
    products: Vec<(Name, Vec<RawCell>)>,
    maps: Vec<(Name, Vec<(Name, RawMatrix)>)>,
}

struct RawFamily {
    name: Name,
    over: Name,
    dim: usize,
    weight: Option<Rational>,
    entries: Vec<(Name, RawMatrix)>,
}

enum Item {
    Semigroup(RawSemigroup),
    Algebra(RawAlgebra),
    Linear(RawFamily),
    RotaBaxter(RawFamily),
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn pos(&self) -> Pos {
        let t = self.peek();
        Pos { line: t.line, col: t.col }
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: impl Into<String>) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError {
            line: t.line,
            column: t.col,
            expected: expected.into(),
            found: t.tok.describe(),
        })
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.at_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("`{c}`"))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.at_keyword(kw) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("`{kw}`"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<Name, ParseError> {
        let pos = self.pos();
        match &self.peek().tok {
            Tok::Ident(s) => {
                let text = s.clone();
                self.bump();
                Ok(Name { text, pos })
            }
            _ => self.error(what),
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match &self.peek().tok {
            Tok::Int(s) => {
                let v = s.parse().expect("digits");
                self.bump();
                Ok(v)
            }
            _ => self.error(what),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<usize, ParseError> {
        match &self.peek().tok {
            Tok::Int(s) => match s.parse::<usize>() {
                Ok(v) => {
                    self.bump();
                    Ok(v)
                }
                Err(_) => self.error(what),
            },
            _ => self.error(what),
        }
    }

    /// `INT ('/' INT)?`, the denominator nonzero.
    fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.int("a number")?;
        if self.at_sym('/') {
            self.bump();
            if matches!(&self.peek().tok, Tok::Int(s) if s.bytes().all(|b| b == b'0')) {
                return self.error("a nonzero denominator");
            }
            let den = self.int("a denominator")?;
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        if self.at_sym('-') {
            self.bump();
            Ok(-self.unsigned_rational()?)
        } else {
            self.unsigned_rational()
        }
    }

    /// `e<k>` with `k ≥ 1`; returns the 0-based index.
    fn basis(&mut self) -> Result<(usize, Pos), ParseError> {
        let pos = self.pos();
        if let Tok::Ident(s) = &self.peek().tok {
            if let Some(k) = s.strip_prefix('e').and_then(|d| d.parse::<usize>().ok()) {
                if k >= 1 && !s[1..].starts_with('0') {
                    self.bump();
                    return Ok((k - 1, pos));
                }
            }
        }
        self.error("a basis vector `e1`, `e2`, ...")
    }

    fn workspace(&mut self) -> Result<Vec<Item>, ParseError> {
        let mut items = Vec::new();
        loop {
            let item = match &self.peek().tok {
                Tok::Eof => return Ok(items),
                Tok::Ident(s) if s == "semigroup" => Item::Semigroup(self.semigroup()?),
                Tok::Ident(s) if s == "algebra" => Item::Algebra(self.algebra()?),
                Tok::Ident(s) if s == "linear" => Item::Linear(self.family("linear", false)?),
                Tok::Ident(s) if s == "rota_baxter" => Item::RotaBaxter(self.family("rota_baxter", true)?),
                _ => return self.error("`semigroup`, `algebra`, `linear` or `rota_baxter`"),
            };
            items.push(item);
        }
    }

    fn semigroup(&mut self) -> Result<RawSemigroup, ParseError> {
        self.keyword("semigroup")?;
        let name = self.ident("a semigroup name")?;
        self.sym('{')?;
        self.keyword("elements")?;
        let mut elements = vec![self.ident("an element label")?];
        while !self.at_sym(';') {
            elements.push(self.ident("an element label or `;`")?);
        }
        self.sym(';')?;
        self.keyword("table")?;
        self.sym('{')?;
        let mut table = Vec::new();
        while !self.at_sym('}') {
            let a = self.ident("an element label or `}`")?;
            self.sym('*')?;
            let b = self.ident("an element label")?;
            self.sym('=')?;
            let c = self.ident("an element label")?;
            self.sym(';')?;
            table.push((a, b, c));
        }
        self.sym('}')?;
        let commutative = self.at_keyword("commutative");
        if commutative {
            self.bump();
            self.sym(';')?;
        }
        self.sym('}')?;
        Ok(RawSemigroup {
            name,
            elements,
            table,
            commutative,
        })
    }

    fn header(&mut self) -> Result<(Name, usize), ParseError> {
        self.keyword("over")?;
        let over = self.ident("a semigroup name")?;
        self.keyword("dim")?;
        let dim = self.small_int("a dimension")?;
        Ok((over, dim))
    }

    fn algebra(&mut self) -> Result<RawAlgebra, ParseError> {
        self.keyword("algebra")?;
        let name = self.ident("an algebra name")?;
        self.sym(':')?;
        let kinds = AlgebraKind::ALL.map(AlgebraKind::keyword).join(", ");
        let kind = match &self.peek().tok {
            Tok::Ident(s) => match AlgebraKind::from_keyword(s) {
                Some(k) => k,
                None => return self.error(format!("an algebra kind ({kinds})")),
            },
            _ => return self.error(format!("an algebra kind ({kinds})")),
        };
        self.bump();
        let (over, dim) = self.header()?;
        self.sym('{')?;
        let mut products = Vec::new();
        let mut maps = Vec::new();
        loop {
            if self.at_keyword("product") {
                self.bump();
                let pname = self.ident("a product name")?;
                self.sym('{')?;
                let mut cells = Vec::new();
                while !self.at_sym('}') {
                    cells.push(self.cell()?);
                }
                self.sym('}')?;
                products.push((pname, cells));
            } else if self.at_keyword("map") {
                self.bump();
                let mname = self.ident("`p` or `q`")?;
                self.sym('{')?;
                let entries = self.matrix_entries()?;
                self.sym('}')?;
                maps.push((mname, entries));
            } else if self.at_sym('}') {
                self.bump();
                break;
            } else {
                return self.error("`product`, `map` or `}`");
            }
        }
        Ok(RawAlgebra {
            name,
            kind,
            over,
            dim,
            products,
            maps,
        })
    }

    /// `(a,b): e1*e2 = 1/2 e2 - e1;`
    fn cell(&mut self) -> Result<RawCell, ParseError> {
        if !self.at_sym('(') {
            return self.error("`(` or `}`");
        }
        self.bump();
        let a = self.ident("an element label")?;
        self.sym(',')?;
        let b = self.ident("an element label")?;
        self.sym(')')?;
        self.sym(':')?;
        let i = self.basis()?;
        self.sym('*')?;
        let j = self.basis()?;
        self.sym('=')?;
        let rhs = self.combination()?;
        self.sym(';')?;
        Ok(RawCell { a, b, i, j, rhs })
    }

    /// A signed sum of `coef e_k` terms, or a lone `0`.
    fn combination(&mut self) -> Result<Vec<(Rational, usize, Pos)>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.at_sym('-') {
            self.bump();
            negative = true;
        }
        loop {
            let coef = if matches!(self.peek().tok, Tok::Int(_)) {
                let c = self.unsigned_rational()?;
                if terms.is_empty() && !negative && c.is_zero() && self.at_sym(';') {
                    return Ok(terms);
                }
                c
            } else {
                Rational::from_integer(1.into())
            };
            let (k, pos) = self.basis()?;
            terms.push((if negative { -coef } else { coef }, k, pos));
            if self.at_sym('+') {
                negative = false;
            } else if self.at_sym('-') {
                negative = true;
            } else {
                return Ok(terms);
            }
            self.bump();
        }
    }

    fn matrix(&mut self) -> Result<RawMatrix, ParseError> {
        let pos = self.pos();
        self.sym('[')?;
        let mut rows = Vec::new();
        loop {
            self.sym('[')?;
            let mut row = vec![self.rational()?];
            while self.at_sym(',') {
                self.bump();
                row.push(self.rational()?);
            }
            self.sym(']')?;
            rows.push(row);
            if self.at_sym(',') {
                self.bump();
            } else {
                break;
            }
        }
        self.sym(']')?;
        Ok(RawMatrix { rows, pos })
    }

    /// `label: [[..]];` repeated until `}`.
    fn matrix_entries(&mut self) -> Result<Vec<(Name, RawMatrix)>, ParseError> {
        let mut out = Vec::new();
        while !self.at_sym('}') {
            let label = self.ident("an element label or `}`")?;
            self.sym(':')?;
            let m = self.matrix()?;
            self.sym(';')?;
            out.push((label, m));
        }
        Ok(out)
    }

    fn family(&mut self, kw: &str, weighted: bool) -> Result<RawFamily, ParseError> {
        self.keyword(kw)?;
        let name = self.ident("a family name")?;
        let (over, dim) = self.header()?;
        let weight = if weighted {
            self.keyword("weight")?;
            Some(self.rational()?)
        } else {
            None
        };
        self.sym('{')?;
        let entries = self.matrix_entries()?;
        self.sym('}')?;
        Ok(RawFamily {
            name,
            over,
            dim,
            weight,
            entries,
        })
    }
}

fn res<T>(pos: Pos, message: impl Into<String>) -> Result<T, ResolutionError> {
    Err(ResolutionError {
        line: pos.line,
        column: pos.col,
        message: message.into(),
    })
}

fn element(w: &SemigroupTable, n: &Name) -> Result<usize, ResolutionError> {
    match w.index_of(&n.text) {
        Some(i) => Ok(i),
        None => res(n.pos, format!("`{}` is not an element of semigroup `{}`", n.text, w.name())),
    }
}

fn resolve_semigroup(raw: &RawSemigroup) -> Result<SemigroupTable, ResolutionError> {
    let labels: Vec<String> = raw.elements.iter().map(|e| e.text.clone()).collect();
    for (i, e) in raw.elements.iter().enumerate() {
        if labels[..i].contains(&e.text) {
            return res(e.pos, format!("duplicate element `{}`", e.text));
        }
    }
    let n = labels.len();
    let find = |x: &Name| match labels.iter().position(|l| *l == x.text) {
        Some(i) => Ok(i),
        None => res(x.pos, format!("`{}` is not an element of semigroup `{}`", x.text, raw.name.text)),
    };
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    for (a, b, c) in &raw.table {
        let (i, j, k) = (find(a)?, find(b)?, find(c)?);
        if table[i * n + j].replace(k).is_some() {
            return res(a.pos, format!("product `{}*{}` given twice", a.text, b.text));
        }
    }
    let mut full = Vec::with_capacity(n * n);
    for (ij, v) in table.iter().enumerate() {
        match v {
            Some(k) => full.push(*k),
            None => {
                return res(
                    raw.name.pos,
                    format!("table of `{}` misses `{}*{}`", raw.name.text, labels[ij / n], labels[ij % n]),
                )
            }
        }
    }
    Ok(SemigroupTable::new(raw.name.text.clone(), labels, full, raw.commutative).expect("validated above"))
}

fn resolve_matrix(m: &RawMatrix, dim: usize) -> Result<Matrix, ResolutionError> {
    if m.rows.len() != dim || m.rows.iter().any(|r| r.len() != dim) {
        return res(m.pos, format!("expected a {dim}x{dim} matrix"));
    }
    Ok(Matrix::from_rows(m.rows.clone()).expect("square"))
}

/// Matrices for every element, each listed exactly once.
fn resolve_family(
    w: &Arc<SemigroupTable>,
    dim: usize,
    owner: &Name,
    entries: &[(Name, RawMatrix)],
) -> Result<LinearFamily, ResolutionError> {
    let mut maps: Vec<Option<Matrix>> = vec![None; w.order()];
    for (label, m) in entries {
        let e = element(w, label)?;
        if maps[e].replace(resolve_matrix(m, dim)?).is_some() {
            return res(label.pos, format!("element `{}` given twice", label.text));
        }
    }
    let mut out = Vec::with_capacity(maps.len());
    for (e, m) in maps.into_iter().enumerate() {
        match m {
            Some(m) => out.push(m),
            None => return res(owner.pos, format!("`{}` has no matrix for element `{}`", owner.text, w.label(e))),
        }
    }
    Ok(LinearFamily::new(w.clone(), out).expect("shapes checked"))
}

fn lookup(sgs: &BTreeMap<String, Arc<SemigroupTable>>, over: &Name) -> Result<Arc<SemigroupTable>, ResolutionError> {
    match sgs.get(&over.text) {
        Some(w) => Ok(w.clone()),
        None => res(over.pos, format!("undefined semigroup `{}`", over.text)),
    }
}

fn positive_dim(dim: usize, name: &Name) -> Result<(), ResolutionError> {
    if dim == 0 {
        return res(name.pos, format!("`{}` must have positive dimension", name.text));
    }
    Ok(())
}

fn resolve_algebra(
    raw: &RawAlgebra,
    sgs: &BTreeMap<String, Arc<SemigroupTable>>,
) -> Result<crate::algebra::AlgebraInstance, ResolutionError> {
    let w = lookup(sgs, &raw.over)?;
    let d = raw.dim;
    positive_dim(d, &raw.name)?;
    let comps = raw.kind.components();
    let mut products: Vec<Option<BilinearFamily>> = vec![None; comps.len()];
    for (pname, cells) in &raw.products {
        let Some(c) = comps.iter().position(|x| *x == pname.text) else {
            return res(
                pname.pos,
                format!("{} has no product `{}` (expected {})", raw.kind, pname.text, comps.join(", ")),
            );
        };
        if products[c].is_some() {
            return res(pname.pos, format!("product `{}` given twice", pname.text));
        }
        let mut f = BilinearFamily::zero(w.clone(), d);
        let mut seen = vec![false; w.order() * w.order() * d * d];
        for cell in cells {
            let (a, b) = (element(&w, &cell.a)?, element(&w, &cell.b)?);
            for (k, pos) in [cell.i, cell.j] {
                if k >= d {
                    return res(pos, format!("basis vector e{} exceeds dimension {d}", k + 1));
                }
            }
            let slot = ((a * w.order() + b) * d + cell.i.0) * d + cell.j.0;
            if std::mem::replace(&mut seen[slot], true) {
                return res(
                    cell.a.pos,
                    format!("cell ({},{}): e{}*e{} given twice", cell.a.text, cell.b.text, cell.i.0 + 1, cell.j.0 + 1),
                );
            }
            for (coef, k, pos) in &cell.rhs {
                if *k >= d {
                    return res(*pos, format!("basis vector e{} exceeds dimension {d}", k + 1));
                }
                let v = f.get(a, b, cell.i.0, cell.j.0, *k) + coef;
                f.set(a, b, cell.i.0, cell.j.0, *k, v);
            }
        }
        products[c] = Some(f);
    }
    let products = products
        .into_iter()
        .map(|p| p.unwrap_or_else(|| BilinearFamily::zero(w.clone(), d)))
        .collect();
    let mut p = None;
    let mut q = None;
    for (mname, entries) in &raw.maps {
        let slot = match mname.text.as_str() {
            "p" => &mut p,
            "q" => &mut q,
            other => return res(mname.pos, format!("unknown structure map `{other}` (expected p or q)")),
        };
        if slot.is_some() {
            return res(mname.pos, format!("map `{}` given twice", mname.text));
        }
        *slot = Some(resolve_family(&w, d, mname, entries)?);
    }
    let id = || LinearFamily::identity(w.clone(), d);
    match new_instance(raw.kind, w.clone(), products, p.unwrap_or_else(id), q.unwrap_or_else(id)) {
        Ok(a) => Ok(a),
        Err(e) => res(raw.name.pos, format!("algebra `{}`: {e}", raw.name.text)),
    }
}

/// Parses and resolves a whole workspace. Definitions may appear in any
/// order; names must be unique within each namespace.
pub fn parse_workspace(text: &str) -> Result<Workspace, WorkspaceError> {
    let toks = tokenize(text)?;
    let items = Parser { toks, at: 0 }.workspace()?;
    let mut ws = Workspace::new();
    let dup = |n: &Name, what: &str| res::<()>(n.pos, format!("duplicate {what} `{}`", n.text));
    for item in &items {
        if let Item::Semigroup(s) = item {
            if ws.semigroups.contains_key(&s.name.text) {
                dup(&s.name, "semigroup")?;
            }
            ws.semigroups.insert(s.name.text.clone(), Arc::new(resolve_semigroup(s)?));
        }
    }
    for item in &items {
        match item {
            Item::Semigroup(_) => {}
            Item::Algebra(a) => {
                if ws.algebras.contains_key(&a.name.text) {
                    dup(&a.name, "algebra")?;
                }
                let inst = resolve_algebra(a, &ws.semigroups)?;
                ws.algebras.insert(a.name.text.clone(), inst);
            }
            Item::Linear(f) | Item::RotaBaxter(f) => {
                let w = lookup(&ws.semigroups, &f.over)?;
                positive_dim(f.dim, &f.name)?;
                let fam = resolve_family(&w, f.dim, &f.name, &f.entries)?;
                match &f.weight {
                    None => {
                        if ws.linear.contains_key(&f.name.text) {
                            dup(&f.name, "linear family")?;
                        }
                        ws.linear.insert(f.name.text.clone(), fam);
                    }
                    Some(weight) => {
                        if ws.rota_baxter.contains_key(&f.name.text) {
                            dup(&f.name, "rota_baxter family")?;
                        }
                        ws.rota_baxter
                            .insert(f.name.text.clone(), RotaBaxterFamily::new(fam, weight.clone()));
                    }
                }
            }
        }
    }
    Ok(ws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    const SAMPLE: &str = "
        # the affine Lie algebra over C2
        semigroup C2 {
          elements u g;
          table { u*u=u; u*g=g; g*u=g; g*g=u; }
          commutative;
        }
        algebra A : lie over C2 dim 2 {
          product bracket {
            (u,u): e1*e2 = e2;
            (u,u): e2*e1 = -e2;
            (g,g): e1*e2 = 1/2 e2 - e1;
          }
        }
        linear F over C2 dim 2 { u: [[1,0],[0,-1]]; g: [[1,0],[0,1]]; }
        rota_baxter R over C2 dim 2 weight -1 { u: [[0,0],[0,0]]; g: [[1,0],[0,1]]; }
    ";

    fn parse_err(src: &str) -> ParseError {
        match parse_workspace(src) {
            Err(WorkspaceError::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    fn res_err(src: &str) -> ResolutionError {
        match parse_workspace(src) {
            Err(WorkspaceError::Resolution(e)) => e,
            other => panic!("expected resolution error, got {other:?}"),
        }
    }

    #[test]
    fn empty_file_is_empty_workspace() {
        assert!(parse_workspace("").unwrap().is_empty());
        assert!(parse_workspace("  # only a comment\n").unwrap().is_empty());
    }

    #[test]
    fn sample_parses() {
        let ws = parse_workspace(SAMPLE).unwrap();
        let a = &ws.algebras["A"];
        assert_eq!(a.kind(), AlgebraKind::Lie);
        assert_eq!(a.product(0).get(0, 0, 0, 1, 1), &int(1));
        assert_eq!(a.product(0).get(1, 1, 0, 1, 1), &rat(1, 2));
        assert_eq!(a.product(0).get(1, 1, 0, 1, 0), &int(-1));
        assert!(a.has_identity_maps());
        assert_eq!(ws.rota_baxter["R"].weight, int(-1));
        assert!(ws.semigroups["C2"].declared_commutative());
    }

    #[test]
    fn dangling_semigroup_is_named() {
        let e = res_err("algebra A : lie over W dim 2 { }");
        assert!(e.message.contains("`W`"), "{e}");
        assert_eq!((e.line, e.column), (1, 22));
    }

    #[test]
    fn parse_error_points_at_token() {
        let src = "semigroup S {\n  elements a;\n  table { a*a=a }\n}";
        let e = parse_err(src);
        assert_eq!((e.line, e.column), (3, 17));
        assert_eq!(e.expected, "`;`");
        assert_eq!(e.found, "`}`");
    }

    #[test]
    fn unknown_kind_rejected() {
        let e = parse_err("semigroup S { elements a; table { a*a=a; } } algebra A : jordan over S dim 1 { }");
        assert!(e.expected.starts_with("an algebra kind"));
        assert_eq!(e.found, "`jordan`");
    }

    #[test]
    fn zero_denominator_rejected() {
        let e = parse_err("semigroup S { elements a; table { a*a=a; } } linear F over S dim 1 { a: [[1/0]]; }");
        assert_eq!(e.expected, "a nonzero denominator");
    }

    #[test]
    fn duplicate_cells_rejected() {
        let e = res_err(
            "semigroup S { elements a; table { a*a=a; } }
             algebra A : associative over S dim 1 { product mul { (a,a): e1*e1 = e1; (a,a): e1*e1 = 0; } }",
        );
        assert!(e.message.contains("given twice"));
    }

    #[test]
    fn basis_out_of_range() {
        let e = res_err(
            "semigroup S { elements a; table { a*a=a; } }
             algebra A : associative over S dim 1 { product mul { (a,a): e1*e1 = e2; } }",
        );
        assert!(e.message.contains("e2 exceeds dimension 1"));
    }

    #[test]
    fn incomplete_table_rejected() {
        let e = res_err("semigroup S { elements a b; table { a*a=a; a*b=b; b*a=b; } }");
        assert!(e.message.contains("misses `b*b`"));
    }

    #[test]
    fn noncommuting_maps_rejected() {
        let e = res_err(
            "semigroup S { elements a; table { a*a=a; } }
             algebra A : associative over S dim 2 { map p { a: [[0,1],[0,0]]; } map q { a: [[0,0],[1,0]]; } }",
        );
        assert!(e.message.contains("do not commute"));
    }

    #[test]
    fn definitions_may_follow_use() {
        let ws = parse_workspace("linear F over S dim 1 { a: [[2]]; } semigroup S { elements a; table { a*a=a; } }").unwrap();
        assert_eq!(ws.linear["F"].get(0).get(0, 0), &int(2));
    }

    #[test]
    fn zero_rhs_and_explicit_coefficients() {
        let ws = parse_workspace(
            "semigroup S { elements a; table { a*a=a; } }
             algebra A : associative over S dim 2 { product mul { (a,a): e1*e1 = 0; (a,a): e1*e2 = -3/4 e1 + 2 e2 - e2; } }",
        )
        .unwrap();
        let f = ws.algebras["A"].product(0);
        assert_eq!(f.basis_product(0, 0, 0, 0), &[int(0), int(0)]);
        assert_eq!(f.basis_product(0, 0, 0, 1), &[rat(-3, 4), int(1)]);
    }
}
