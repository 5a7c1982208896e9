//! Independent reference implementations for integration and acceptance
//! tests. Nothing here calls the library's checkers or constructions; it
//! only reads tensors and matrices out of instances and evaluates the
//! defining identities directly.

#![allow(dead_code, clippy::needless_range_loop)]

use bihomega_core::algebra::{AlgebraInstance, AlgebraKind, LinearFamily, RotaBaxterFamily};
use bihomega_core::linalg::Rational;
use num_traits::Zero;

pub type V = Vec<Rational>;

fn add(x: &V, y: &V) -> V {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &V, y: &V) -> V {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn scale(c: &Rational, x: &V) -> V {
    x.iter().map(|a| c * a).collect()
}

fn is_zero(x: &V) -> bool {
    x.iter().all(Zero::is_zero)
}

/// Plain-data copy of an instance.
#[derive(Clone, Debug)]
pub struct Alg {
    pub n: usize,
    pub table: Vec<usize>,
    pub commutative: bool,
    pub d: usize,
    /// `ops[c][(((a*n + b)*d + i)*d + j)*d + k]`
    pub ops: Vec<Vec<Rational>>,
    /// `p[a][r*d + c]`
    pub p: Vec<Vec<Rational>>,
    pub q: Vec<Vec<Rational>>,
}

fn matrices(f: &LinearFamily) -> Vec<Vec<Rational>> {
    f.maps().iter().map(|m| m.entries().to_vec()).collect()
}

impl Alg {
    pub fn of(a: &AlgebraInstance) -> Self {
        let w = a.omega();
        let n = w.order();
        let d = a.dim();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(w.mul(x, y));
            }
        }
        let commutative = (0..n).all(|x| (0..n).all(|y| table[x * n + y] == table[y * n + x]));
        let ops = a
            .products()
            .iter()
            .map(|f| {
                let mut t = Vec::with_capacity(n * n * d * d * d);
                for al in 0..n {
                    for be in 0..n {
                        for i in 0..d {
                            for j in 0..d {
                                for k in 0..d {
                                    t.push(f.get(al, be, i, j, k).clone());
                                }
                            }
                        }
                    }
                }
                t
            })
            .collect();
        Alg {
            n,
            table,
            commutative,
            d,
            ops,
            p: matrices(a.p()),
            q: matrices(a.q()),
        }
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn e(&self, i: usize) -> V {
        let mut v = vec![Rational::zero(); self.d];
        v[i] = Rational::from_integer(1.into());
        v
    }

    fn idx(&self, a: usize, b: usize, i: usize, j: usize, k: usize) -> usize {
        (((a * self.n + b) * self.d + i) * self.d + j) * self.d + k
    }

    pub fn op(&self, c: usize, a: usize, b: usize, x: &V, y: &V) -> V {
        let mut out = vec![Rational::zero(); self.d];
        for i in 0..self.d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.d {
                if y[j].is_zero() {
                    continue;
                }
                let coef = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let t = &self.ops[c][self.idx(a, b, i, j, k)];
                    if !t.is_zero() {
                        *o += &coef * t;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, m: &[Rational], x: &V) -> V {
        (0..self.d)
            .map(|r| (0..self.d).fold(Rational::zero(), |acc, c| acc + &m[r * self.d + c] * &x[c]))
            .collect()
    }

    pub fn p(&self, a: usize, x: &V) -> V {
        self.apply(&self.p[a], x)
    }

    pub fn q(&self, a: usize, x: &V) -> V {
        self.apply(&self.q[a], x)
    }

    pub fn has_identity_maps(&self) -> bool {
        let d = self.d;
        let id = |m: &Vec<Rational>| (0..d * d).all(|ix| m[ix] == Rational::from_integer(((ix / d == ix % d) as i64).into()));
        self.p.iter().all(id) && self.q.iter().all(id)
    }

    /// A tensor built cell by cell from `f(α, β, e_i, e_j)`.
    pub fn build(&self, f: impl Fn(usize, usize, &V, &V) -> V) -> Vec<Rational> {
        let mut t = Vec::with_capacity(self.n * self.n * self.d.pow(3));
        for a in 0..self.n {
            for b in 0..self.n {
                for i in 0..self.d {
                    for j in 0..self.d {
                        t.extend(f(a, b, &self.e(i), &self.e(j)));
                    }
                }
            }
        }
        t
    }
}

fn component(kind: AlgebraKind, name: &str) -> usize {
    kind.components()
        .iter()
        .position(|c| *c == name)
        .unwrap_or_else(|| panic!("{kind} has no component {name}"))
}

/// `lhs - rhs` of the named BiHom identity at one basis tuple, written out
/// from the definitions. Names follow the reports: `p-multiplicative[c]`,
/// `bihom-associativity`, `dendriform-N`, `prelie[c]`, `lie-skew[c]`,
/// `lie-jacobi[c]`, `postlie-N`, `zinbiel[c]`, `prepoisson-N`.
pub fn bihom_defect(g: &Alg, kind: AlgebraKind, axiom: &str, om: &[usize], basis: &[usize]) -> V {
    let (name, comp) = match axiom.split_once('[') {
        Some((n, rest)) => (n, Some(component(kind, rest.trim_end_matches(']')))),
        None => (axiom, None),
    };
    let x = g.e(basis[0]);
    let y = g.e(basis[1]);
    let (a, b) = (om[0], om[1]);
    if let Some(c) = comp {
        match name {
            "p-multiplicative" | "q-multiplicative" => {
                let f = if name.starts_with('p') { &g.p } else { &g.q };
                let lhs = g.apply(&f[g.m(a, b)], &g.op(c, a, b, &x, &y));
                let rhs = g.op(c, a, b, &g.apply(&f[a], &x), &g.apply(&f[b], &y));
                return sub(&lhs, &rhs);
            }
            "lie-skew" => {
                let lhs = g.op(c, a, b, &g.q(a, &x), &g.p(b, &y));
                let rhs = g.op(c, b, a, &g.q(b, &y), &g.p(a, &x));
                return add(&lhs, &rhs);
            }
            _ => {}
        }
    }
    let z = g.e(basis[2]);
    let gm = om[2];
    let m = |u: usize, v: usize| g.m(u, v);
    let pq = |s: usize, v: &V| g.p(s, &g.q(s, v));
    match (name, comp) {
        ("bihom-associativity", _) => {
            let lhs = g.op(0, a, m(b, gm), &g.p(a, &x), &g.op(0, b, gm, &y, &z));
            let rhs = g.op(0, m(a, b), gm, &g.op(0, a, b, &x, &y), &g.q(gm, &z));
            sub(&lhs, &rhs)
        }
        (dend, _) if dend.starts_with("dendriform-") => {
            let (pr, su) = (0, 1);
            let both = |u: usize, v: usize, s: &V, t: &V| add(&g.op(pr, u, v, s, t), &g.op(su, u, v, s, t));
            match dend {
                "dendriform-1" => sub(
                    &g.op(pr, m(a, b), gm, &g.op(pr, a, b, &x, &y), &g.q(gm, &z)),
                    &g.op(pr, a, m(b, gm), &g.p(a, &x), &both(b, gm, &y, &z)),
                ),
                "dendriform-2" => sub(
                    &g.op(pr, m(a, b), gm, &g.op(su, a, b, &x, &y), &g.q(gm, &z)),
                    &g.op(su, a, m(b, gm), &g.p(a, &x), &g.op(pr, b, gm, &y, &z)),
                ),
                "dendriform-3" => sub(
                    &g.op(su, a, m(b, gm), &g.p(a, &x), &g.op(su, b, gm, &y, &z)),
                    &g.op(su, m(a, b), gm, &both(a, b, &x, &y), &g.q(gm, &z)),
                ),
                other => panic!("unknown axiom {other}"),
            }
        }
        ("prelie", Some(c)) => prelie_defect(g, c, om, &x, &y, &z),
        ("lie-jacobi", Some(c)) => {
            let term = |s: usize, t: usize, u: usize, xs: &V, yt: &V, zu: &V| {
                let q2 = g.q(s, &g.q(s, xs));
                let inner = g.op(c, t, u, &g.q(t, yt), &g.p(u, zu));
                g.op(c, s, m(t, u), &q2, &inner)
            };
            let s1 = term(a, b, gm, &x, &y, &z);
            let s2 = term(b, gm, a, &y, &z, &x);
            let s3 = term(gm, a, b, &z, &x, &y);
            add(&add(&s1, &s2), &s3)
        }
        ("postlie-1", _) => {
            let (br, tri) = (0, 1);
            let lhs = g.op(tri, m(a, b), gm, &g.op(br, a, b, &g.q(a, &x), &g.p(b, &y)), &g.q(gm, &z));
            let t1 = g.op(tri, a, m(b, gm), &pq(a, &x), &g.op(tri, b, gm, &g.p(b, &y), &z));
            let t2 = g.op(tri, m(a, b), gm, &g.op(tri, a, b, &g.q(a, &x), &g.p(b, &y)), &g.q(gm, &z));
            let t3 = g.op(tri, b, m(a, gm), &pq(b, &y), &g.op(tri, a, gm, &g.p(a, &x), &z));
            let t4 = g.op(tri, m(b, a), gm, &g.op(tri, b, a, &g.q(b, &y), &g.p(a, &x)), &g.q(gm, &z));
            sub(&lhs, &add(&sub(&sub(&t1, &t2), &t3), &t4))
        }
        ("postlie-2", _) => {
            let (br, tri) = (0, 1);
            let lhs = g.op(tri, a, m(b, gm), &pq(a, &x), &g.op(br, b, gm, &y, &z));
            let r1 = g.op(br, m(a, b), gm, &g.op(tri, a, b, &g.q(a, &x), &y), &g.q(gm, &z));
            let r2 = g.op(br, b, m(a, gm), &g.q(b, &y), &g.op(tri, a, gm, &g.p(a, &x), &z));
            sub(&lhs, &add(&r1, &r2))
        }
        ("zinbiel", Some(c)) => zinbiel_defect(g, c, om, &x, &y, &z),
        ("prepoisson-1", _) => {
            let (tri, star) = (0, 1);
            let inner = sub(
                &g.op(tri, a, b, &g.q(a, &x), &g.p(b, &y)),
                &g.op(tri, b, a, &g.q(b, &y), &g.p(a, &x)),
            );
            let lhs = g.op(star, m(a, b), gm, &inner, &g.q(gm, &z));
            let r1 = g.op(tri, a, m(b, gm), &pq(a, &x), &g.op(star, b, gm, &g.p(b, &y), &z));
            let r2 = g.op(star, b, m(a, gm), &pq(b, &y), &g.op(tri, a, gm, &g.p(a, &x), &z));
            sub(&lhs, &sub(&r1, &r2))
        }
        ("prepoisson-2", _) => {
            let (tri, star) = (0, 1);
            let inner = add(
                &g.op(star, a, b, &g.q(a, &x), &g.p(b, &y)),
                &g.op(star, b, a, &g.q(b, &y), &g.p(a, &x)),
            );
            let lhs = g.op(tri, m(a, b), gm, &inner, &g.q(gm, &z));
            let r1 = g.op(star, a, m(b, gm), &pq(a, &x), &g.op(tri, b, gm, &g.p(b, &y), &z));
            let r2 = g.op(star, b, m(a, gm), &pq(b, &y), &g.op(tri, a, gm, &g.p(a, &x), &z));
            sub(&lhs, &add(&r1, &r2))
        }
        (other, _) => panic!("unknown axiom {other}"),
    }
}

fn prelie_defect(g: &Alg, c: usize, om: &[usize], x: &V, y: &V, z: &V) -> V {
    let (a, b, gm) = (om[0], om[1], om[2]);
    let pq = |s: usize, v: &V| g.p(s, &g.q(s, v));
    let side = |s: usize, t: usize, u: &V, v: &V| {
        let first = g.op(c, s, g.m(t, gm), &pq(s, u), &g.op(c, t, gm, &g.p(t, v), z));
        let second = g.op(c, g.m(s, t), gm, &g.op(c, s, t, &g.q(s, u), &g.p(t, v)), &g.q(gm, z));
        sub(&first, &second)
    };
    sub(&side(a, b, x, y), &side(b, a, y, x))
}

fn zinbiel_defect(g: &Alg, c: usize, om: &[usize], x: &V, y: &V, z: &V) -> V {
    let (a, b, gm) = (om[0], om[1], om[2]);
    let pq = |s: usize, v: &V| g.p(s, &g.q(s, v));
    let lhs = g.op(c, a, g.m(b, gm), &pq(a, x), &g.op(c, b, gm, &g.p(b, y), z));
    let r1 = g.op(c, g.m(a, b), gm, &g.op(c, a, b, &g.q(a, x), &g.p(b, y)), &g.q(gm, z));
    let r2 = g.op(c, g.m(b, a), gm, &g.op(c, b, a, &g.q(b, y), &g.p(a, x)), &g.q(gm, z));
    sub(&lhs, &add(&r1, &r2))
}

/// Every identity name that defines `kind`, with its arity.
pub fn bihom_axioms(kind: AlgebraKind) -> Vec<(String, usize)> {
    use AlgebraKind::*;
    let mut out = Vec::new();
    for c in kind.components() {
        out.push((format!("p-multiplicative[{c}]"), 2));
        out.push((format!("q-multiplicative[{c}]"), 2));
    }
    let mut ternary = |s: &str| out.push((s.to_string(), 3));
    match kind {
        OmegaAssociative | BiHomOmegaAssociative => ternary("bihom-associativity"),
        Dendriform => {
            for i in 1..=3 {
                ternary(&format!("dendriform-{i}"));
            }
        }
        PreLie => ternary("prelie[tri]"),
        Lie => {
            out.push(("lie-skew[bracket]".into(), 2));
            out.push(("lie-jacobi[bracket]".into(), 3));
        }
        PostLie => {
            out.push(("lie-skew[bracket]".into(), 2));
            out.push(("lie-jacobi[bracket]".into(), 3));
            out.push(("postlie-1".into(), 3));
            out.push(("postlie-2".into(), 3));
        }
        Zinbiel => ternary("zinbiel[star]"),
        PrePoisson => {
            ternary("prelie[tri]");
            ternary("zinbiel[star]");
            ternary("prepoisson-1");
            ternary("prepoisson-2");
        }
    }
    out
}

fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Whether every defining BiHom identity holds on all basis tuples.
pub fn bihom_passes(g: &Alg, kind: AlgebraKind) -> bool {
    bihom_axioms(kind).iter().all(|(ax, arity)| {
        tuples(g.n, *arity)
            .iter()
            .all(|om| tuples(g.d, *arity).iter().all(|b| is_zero(&bihom_defect(g, kind, ax, om, b))))
    })
}

/// The untwisted Ω-identities, ignoring structure maps entirely.
pub fn classical_passes(g: &Alg, kind: AlgebraKind) -> bool {
    use AlgebraKind::*;
    let n = g.n;
    let d = g.d;
    let m = |u: usize, v: usize| g.m(u, v);
    for om in tuples(n, 3) {
        let (a, b, c) = (om[0], om[1], om[2]);
        for ix in tuples(d, 3) {
            let (x, y, z) = (g.e(ix[0]), g.e(ix[1]), g.e(ix[2]));
            let o = |k: usize, s: usize, t: usize, u: &V, v: &V| g.op(k, s, t, u, v);
            // x ▷ (y ▷ z) - (x ▷ y) ▷ z, for pre-Lie style identities
            let assoc = |k: usize, s: usize, t: usize, u: &V, v: &V| {
                sub(&o(k, s, m(t, c), u, &o(k, t, c, v, &z)), &o(k, m(s, t), c, &o(k, s, t, u, v), &z))
            };
            let prelie = |k: usize| is_zero(&sub(&assoc(k, a, b, &x, &y), &assoc(k, b, a, &y, &x)));
            let zinbiel = |k: usize| {
                let lhs = o(k, a, m(b, c), &x, &o(k, b, c, &y, &z));
                let rhs = add(&o(k, m(a, b), c, &o(k, a, b, &x, &y), &z), &o(k, m(b, a), c, &o(k, b, a, &y, &x), &z));
                is_zero(&sub(&lhs, &rhs))
            };
            let jacobi = |k: usize| {
                let s1 = o(k, a, m(b, c), &x, &o(k, b, c, &y, &z));
                let s2 = o(k, b, m(c, a), &y, &o(k, c, a, &z, &x));
                let s3 = o(k, c, m(a, b), &z, &o(k, a, b, &x, &y));
                is_zero(&add(&add(&s1, &s2), &s3))
            };
            let skew = |k: usize| is_zero(&add(&o(k, a, b, &x, &y), &o(k, b, a, &y, &x)));
            let ok = match kind {
                OmegaAssociative | BiHomOmegaAssociative => {
                    is_zero(&sub(&o(0, a, m(b, c), &x, &o(0, b, c, &y, &z)), &o(0, m(a, b), c, &o(0, a, b, &x, &y), &z)))
                }
                Dendriform => {
                    let both = |s: usize, t: usize, u: &V, v: &V| add(&o(0, s, t, u, v), &o(1, s, t, u, v));
                    is_zero(&sub(&o(0, m(a, b), c, &o(0, a, b, &x, &y), &z), &o(0, a, m(b, c), &x, &both(b, c, &y, &z))))
                        && is_zero(&sub(
                            &o(0, m(a, b), c, &o(1, a, b, &x, &y), &z),
                            &o(1, a, m(b, c), &x, &o(0, b, c, &y, &z)),
                        ))
                        && is_zero(&sub(&o(1, m(a, b), c, &both(a, b, &x, &y), &z), &o(1, a, m(b, c), &x, &o(1, b, c, &y, &z))))
                }
                PreLie => prelie(0),
                Lie => skew(0) && jacobi(0),
                PostLie => {
                    let lhs1 = o(1, m(a, b), c, &o(0, a, b, &x, &y), &z);
                    let rhs1 = sub(&assoc(1, a, b, &x, &y), &assoc(1, b, a, &y, &x));
                    let lhs2 = o(1, a, m(b, c), &x, &o(0, b, c, &y, &z));
                    let rhs2 = add(&o(0, m(a, b), c, &o(1, a, b, &x, &y), &z), &o(0, b, m(a, c), &y, &o(1, a, c, &x, &z)));
                    skew(0) && jacobi(0) && is_zero(&sub(&lhs1, &rhs1)) && is_zero(&sub(&lhs2, &rhs2))
                }
                Zinbiel => zinbiel(0),
                PrePoisson => {
                    let comm = sub(&o(0, a, b, &x, &y), &o(0, b, a, &y, &x));
                    let lhs1 = o(1, m(a, b), c, &comm, &z);
                    let rhs1 = sub(&o(0, a, m(b, c), &x, &o(1, b, c, &y, &z)), &o(1, b, m(a, c), &y, &o(0, a, c, &x, &z)));
                    let anti = add(&o(1, a, b, &x, &y), &o(1, b, a, &y, &x));
                    let lhs2 = o(0, m(a, b), c, &anti, &z);
                    let rhs2 = add(&o(1, a, m(b, c), &x, &o(0, b, c, &y, &z)), &o(1, b, m(a, c), &y, &o(0, a, c, &x, &z)));
                    prelie(0) && zinbiel(1) && is_zero(&sub(&lhs1, &rhs1)) && is_zero(&sub(&lhs2, &rhs2))
                }
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn family(f: &LinearFamily) -> Vec<Vec<Rational>> {
    matrices(f)
}

/// Untwisted formulas of every construction, on instances with identity
/// structure maps. Each returns the output tensors in component order.
pub mod classical {
    use super::*;

    pub fn yau_twist(g: &Alg, p2: &LinearFamily, q2: &LinearFamily) -> Vec<Vec<Rational>> {
        let (p2, q2) = (family(p2), family(q2));
        (0..g.ops.len())
            .map(|c| g.build(|a, b, x, y| g.op(c, a, b, &g.apply(&p2[a], x), &g.apply(&q2[b], y))))
            .collect()
    }

    fn rb(r: &RotaBaxterFamily) -> (Vec<Vec<Rational>>, Rational) {
        (family(&r.maps), r.weight.clone())
    }

    /// `R(x) y + x R(y) + λ x y` on component `c`.
    fn rb_sum(g: &Alg, c: usize, r: &RotaBaxterFamily) -> Vec<Rational> {
        let (rm, w) = rb(r);
        g.build(|a, b, x, y| {
            let s = add(&g.op(c, a, b, &g.apply(&rm[a], x), y), &g.op(c, a, b, x, &g.apply(&rm[b], y)));
            add(&s, &scale(&w, &g.op(c, a, b, x, y)))
        })
    }

    pub fn rb_star_associative(g: &Alg, r: &RotaBaxterFamily) -> Vec<Vec<Rational>> {
        vec![rb_sum(g, 0, r)]
    }

    pub fn rb_split_dendriform(g: &Alg, r: &RotaBaxterFamily) -> Vec<Vec<Rational>> {
        let (rm, w) = rb(r);
        let prec = g.build(|a, b, x, y| add(&g.op(0, a, b, x, &g.apply(&rm[b], y)), &scale(&w, &g.op(0, a, b, x, y))));
        let succ = g.build(|a, b, x, y| g.op(0, a, b, &g.apply(&rm[a], x), y));
        vec![prec, succ]
    }

    pub fn dendriform_total(g: &Alg) -> Vec<Vec<Rational>> {
        vec![g.build(|a, b, x, y| add(&g.op(0, a, b, x, y), &g.op(1, a, b, x, y)))]
    }

    pub fn dendriform_to_prelie(g: &Alg) -> Vec<Vec<Rational>> {
        vec![g.build(|a, b, x, y| sub(&g.op(1, a, b, x, y), &g.op(0, b, a, y, x)))]
    }

    pub fn assoc_as_prelie(g: &Alg) -> Vec<Vec<Rational>> {
        vec![g.ops[0].clone()]
    }

    /// `x ∘ y - y ∘ x` on component `c`.
    pub fn commutator(g: &Alg, c: usize) -> Vec<Vec<Rational>> {
        vec![g.build(|a, b, x, y| sub(&g.op(c, a, b, x, y), &g.op(c, b, a, y, x)))]
    }

    pub fn rb_bracket_lie(g: &Alg, r: &RotaBaxterFamily) -> Vec<Vec<Rational>> {
        vec![rb_sum(g, 0, r)]
    }

    pub fn rb_lie_to_prelie(g: &Alg, r: &RotaBaxterFamily) -> Vec<Vec<Rational>> {
        let rm = family(&r.maps);
        vec![g.build(|a, b, x, y| g.op(0, a, b, &g.apply(&rm[a], x), y))]
    }

    pub fn postlie_to_lie(g: &Alg) -> Vec<Vec<Rational>> {
        vec![g.build(|a, b, x, y| add(&sub(&g.op(1, a, b, x, y), &g.op(1, b, a, y, x)), &g.op(0, a, b, x, y)))]
    }

    pub fn lie_rb_to_postlie(g: &Alg, r: &RotaBaxterFamily) -> Vec<Vec<Rational>> {
        let rm = family(&r.maps);
        let bracket = g.build(|a, b, x, y| scale(&r.weight, &g.op(0, a, b, x, y)));
        let tri = g.build(|a, b, x, y| g.op(0, a, b, &g.apply(&rm[a], x), y));
        vec![bracket, tri]
    }
}

/// The example's three side conditions, evaluated directly.
pub fn side_conditions_hold(table: &[usize], n: usize, c: &[Rational], r: &[Rational], l: &[Rational]) -> bool {
    let m = |a: usize, b: usize| table[a * n + b];
    let cc = |a: usize, b: usize| &c[a * n + b];
    for a in 0..n {
        for b in 0..n {
            if r[m(a, b)] != &r[a] * &r[b] || l[m(a, b)] != &l[a] * &l[b] {
                return false;
            }
            for g in 0..n {
                if cc(a, b) * &l[g] * cc(m(a, b), g) != cc(a, m(b, g)) * &r[a] * cc(b, g) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every instance obtained from `a` by adding one to a single structure
/// constant, in component, Ω and basis order.
pub fn perturbations(a: &AlgebraInstance) -> Vec<AlgebraInstance> {
    let n = a.omega().order();
    let d = a.dim();
    let one = Rational::from_integer(1.into());
    let mut out = Vec::new();
    for c in 0..a.products().len() {
        for al in 0..n {
            for be in 0..n {
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let mut products = a.products().to_vec();
                            let v = products[c].get(al, be, i, j, k) + &one;
                            products[c].set(al, be, i, j, k, v);
                            out.push(a.with_products(products).expect("same shape"));
                        }
                    }
                }
            }
        }
    }
    out
}

/// The classical formula of the named construction, for identity-map input.
pub fn classical_construction(name: &str, g: &Alg, r: Option<&RotaBaxterFamily>) -> Vec<Vec<Rational>> {
    let r = || r.expect("needs a Rota-Baxter family");
    match name {
        "rb_star_associative" => classical::rb_star_associative(g, r()),
        "dendriform_total" => classical::dendriform_total(g),
        "rb_split_dendriform" => classical::rb_split_dendriform(g, r()),
        "dendriform_to_prelie" => classical::dendriform_to_prelie(g),
        "assoc_as_prelie" => classical::assoc_as_prelie(g),
        "prelie_to_lie" | "assoc_to_lie" => classical::commutator(g, 0),
        "rb_bracket_lie" => classical::rb_bracket_lie(g, r()),
        "rb_lie_to_prelie" => classical::rb_lie_to_prelie(g, r()),
        "postlie_to_lie" => classical::postlie_to_lie(g),
        "lie_rb_to_postlie" => classical::lie_rb_to_postlie(g, r()),
        other => panic!("no classical formula for {other}"),
    }
}

/// The input kind each construction expects.
pub fn construction_input(name: &str) -> &'static [AlgebraKind] {
    use AlgebraKind::*;
    match name {
        "rb_star_associative" | "rb_split_dendriform" | "assoc_as_prelie" | "assoc_to_lie" => {
            &[OmegaAssociative, BiHomOmegaAssociative]
        }
        "dendriform_total" | "dendriform_to_prelie" => &[Dendriform],
        "prelie_to_lie" => &[PreLie],
        "rb_bracket_lie" | "rb_lie_to_prelie" | "lie_rb_to_postlie" => &[Lie],
        "postlie_to_lie" => &[PostLie],
        _ => &[],
    }
}

pub fn needs_rb(name: &str) -> bool {
    matches!(
        name,
        "rb_star_associative" | "rb_split_dendriform" | "rb_bracket_lie" | "rb_lie_to_prelie" | "lie_rb_to_postlie"
    )
}

/// Runs a library construction by name (`yau_twist` excluded).
pub fn run_construction(
    name: &str,
    a: &AlgebraInstance,
    r: Option<&RotaBaxterFamily>,
    opts: &bihomega_core::constructions::ConstructOptions,
) -> Result<bihomega_core::constructions::Constructed, bihomega_core::constructions::ConstructionError> {
    use bihomega_core::constructions as cons;
    let r = || r.expect("needs a Rota-Baxter family");
    match name {
        "rb_star_associative" => cons::rb_star_associative(a, r(), opts),
        "dendriform_total" => cons::dendriform_total(a, opts),
        "rb_split_dendriform" => cons::rb_split_dendriform(a, r(), opts),
        "dendriform_to_prelie" => cons::dendriform_to_prelie(a, opts),
        "assoc_as_prelie" => cons::assoc_as_prelie(a, opts),
        "prelie_to_lie" => cons::prelie_to_lie(a, opts),
        "assoc_to_lie" => cons::assoc_to_lie(a, opts),
        "rb_bracket_lie" => cons::rb_bracket_lie(a, r(), opts),
        "rb_lie_to_prelie" => cons::rb_lie_to_prelie(a, r(), opts),
        "postlie_to_lie" => cons::postlie_to_lie(a, opts),
        "lie_rb_to_postlie" => cons::lie_rb_to_postlie(a, r(), opts),
        other => panic!("unknown construction {other}"),
    }
}

/// Whether the oracle recomputes the reported difference of a witness, up
/// to the order in which the two sides are written.
pub fn witness_reproduces(g: &Alg, kind: AlgebraKind, axiom: &str, w: &bihomega_core::report::Witness) -> bool {
    let defect = bihom_defect(g, kind, axiom, &w.omega, &w.basis);
    let reported = sub(&w.lhs, &w.rhs);
    !is_zero(&defect) && (defect == reported || defect == scale(&Rational::from_integer((-1).into()), &reported))
}
