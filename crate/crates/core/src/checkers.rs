//! Exhaustive axiom checks on basis tuples.
//!
//! Every identity is multilinear, so checking it on all basis tuples
//! `(α, β, γ, i, j, k)` decides it. Tuples are scanned in lexicographic
//! order; witnesses come back in that order whatever the thread count.

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraInstance, AlgebraKind, LinearFamily, RotaBaxterFamily};
use crate::linalg::{basis_vector, vec_add, vec_scale, vec_sub, zero_vector, Rational, Vector};
use crate::report::{CheckConfig, CheckReport, Verdict, Witness};
use crate::semigroup::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("expected {expected} instance, found {found}")]
    KindMismatch { expected: String, found: AlgebraKind },
    #[error("{kind} requires a commutative semigroup, `{omega}` is not")]
    NonCommutativeOmega { kind: AlgebraKind, omega: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapSel {
    P,
    Q,
}

impl MapSel {
    fn letter(self) -> &'static str {
        match self {
            MapSel::P => "p",
            MapSel::Q => "q",
        }
    }
}

/// One defining identity of some structure class. Component indices refer
/// to the instance's product list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `m_{αβ}(x ∘_{α,β} y) = m_α(x) ∘_{α,β} m_β(y)` for `m ∈ {p, q}`.
    Multiplicative { map: MapSel, component: usize },
    /// `p_α(x) •_{α,βγ} (y •_{β,γ} z) = (x •_{α,β} y) •_{αβ,γ} q_γ(z)`.
    BiHomAssociativity,
    /// The three dendriform identities, numbered 1 to 3.
    Dendriform(u8),
    PreLie { component: usize },
    LieSkew { component: usize },
    LieJacobi { component: usize },
    /// The two PostLie compatibilities between `bracket` and `tri`.
    PostLie(u8),
    Zinbiel { component: usize },
    /// The two compatibilities between `tri` and `star`.
    PrePoisson(u8),
}

impl Axiom {
    /// Number of arguments: 2 or 3.
    pub fn arity(self) -> usize {
        match self {
            Axiom::Multiplicative { .. } | Axiom::LieSkew { .. } => 2,
            _ => 3,
        }
    }

    pub fn name(self, kind: AlgebraKind) -> String {
        let comp = |c: usize| kind.components().get(c).copied().unwrap_or("?");
        match self {
            Axiom::Multiplicative { map, component } => {
                format!("{}-multiplicative[{}]", map.letter(), comp(component))
            }
            Axiom::BiHomAssociativity => "bihom-associativity".into(),
            Axiom::Dendriform(n) => format!("dendriform-{n}"),
            Axiom::PreLie { component } => format!("prelie[{}]", comp(component)),
            Axiom::LieSkew { component } => format!("lie-skew[{}]", comp(component)),
            Axiom::LieJacobi { component } => format!("lie-jacobi[{}]", comp(component)),
            Axiom::PostLie(n) => format!("postlie-{n}"),
            Axiom::Zinbiel { component } => format!("zinbiel[{}]", comp(component)),
            Axiom::PrePoisson(n) => format!("prepoisson-{n}"),
        }
    }

    /// Both sides of the identity at one cell. `omega` and `basis` have
    /// length [`Self::arity`].
    pub fn evaluate(self, a: &AlgebraInstance, omega: &[Element], basis: &[usize]) -> (Vector, Vector) {
        let ev = Ev { a };
        let d = a.dim();
        let x = basis_vector(d, basis[0]);
        let y = basis_vector(d, basis[1]);
        let (al, be) = (omega[0], omega[1]);
        if self.arity() == 2 {
            return match self {
                Axiom::Multiplicative { map, component: c } => {
                    let m = |e, v: &[Rational]| ev.map(map, e, v);
                    (m(ev.m(al, be), &ev.mu(c, al, be, &x, &y)), ev.mu(c, al, be, &m(al, &x), &m(be, &y)))
                }
                Axiom::LieSkew { component: c } => (
                    ev.mu(c, al, be, &ev.q(al, &x), &ev.p(be, &y)),
                    vec_neg(&ev.mu(c, be, al, &ev.q(be, &y), &ev.p(al, &x))),
                ),
                _ => unreachable!("binary axioms handled above"),
            };
        }
        let z = basis_vector(d, basis[2]);
        let ga = omega[2];
        let m = |s, t| ev.m(s, t);
        match self {
            Axiom::BiHomAssociativity => (
                ev.mu(0, al, m(be, ga), &ev.p(al, &x), &ev.mu(0, be, ga, &y, &z)),
                ev.mu(0, m(al, be), ga, &ev.mu(0, al, be, &x, &y), &ev.q(ga, &z)),
            ),
            Axiom::Dendriform(1) => (
                ev.mu(0, m(al, be), ga, &ev.mu(0, al, be, &x, &y), &ev.q(ga, &z)),
                ev.mu(0, al, m(be, ga), &ev.p(al, &x), &ev.sum(be, ga, &y, &z)),
            ),
            Axiom::Dendriform(2) => (
                ev.mu(0, m(al, be), ga, &ev.mu(1, al, be, &x, &y), &ev.q(ga, &z)),
                ev.mu(1, al, m(be, ga), &ev.p(al, &x), &ev.mu(0, be, ga, &y, &z)),
            ),
            Axiom::Dendriform(3) => (
                ev.mu(1, al, m(be, ga), &ev.p(al, &x), &ev.mu(1, be, ga, &y, &z)),
                ev.mu(1, m(al, be), ga, &ev.sum(al, be, &x, &y), &ev.q(ga, &z)),
            ),
            Axiom::PreLie { component: c } => {
                let (l1, l2, r1, r2) = ev.prelie_terms(c, [al, be, ga], &x, &y, &z);
                (vec_sub(&l1, &l2), vec_sub(&r1, &r2))
            }
            Axiom::LieJacobi { component: c } => {
                let term = |s: Element, t: Element, u: Element, xs: &[Rational], ys: &[Rational], zs: &[Rational]| {
                    let inner = ev.mu(c, t, u, &ev.q(t, ys), &ev.p(u, zs));
                    ev.mu(c, s, m(t, u), &ev.q(s, &ev.q(s, xs)), &inner)
                };
                let lhs = vec_add(
                    &vec_add(&term(al, be, ga, &x, &y, &z), &term(be, ga, al, &y, &z, &x)),
                    &term(ga, al, be, &z, &x, &y),
                );
                (lhs, zero_vector(d))
            }
            Axiom::PostLie(1) => {
                let lhs = ev.mu(1, m(al, be), ga, &ev.mu(0, al, be, &ev.q(al, &x), &ev.p(be, &y)), &ev.q(ga, &z));
                let (l1, l2, r1, r2) = ev.prelie_terms(1, [al, be, ga], &x, &y, &z);
                (lhs, vec_add(&vec_sub(&vec_sub(&l1, &l2), &r1), &r2))
            }
            Axiom::PostLie(2) => {
                let lhs = ev.mu(1, al, m(be, ga), &ev.pq(al, &x), &ev.mu(0, be, ga, &y, &z));
                let t1 = ev.mu(0, m(al, be), ga, &ev.mu(1, al, be, &ev.q(al, &x), &y), &ev.q(ga, &z));
                let t2 = ev.mu(0, be, m(al, ga), &ev.q(be, &y), &ev.mu(1, al, ga, &ev.p(al, &x), &z));
                (lhs, vec_add(&t1, &t2))
            }
            Axiom::Zinbiel { component: c } => {
                let lhs = ev.mu(c, al, m(be, ga), &ev.pq(al, &x), &ev.mu(c, be, ga, &ev.p(be, &y), &z));
                let t1 = ev.mu(c, m(al, be), ga, &ev.mu(c, al, be, &ev.q(al, &x), &ev.p(be, &y)), &ev.q(ga, &z));
                let t2 = ev.mu(c, m(be, al), ga, &ev.mu(c, be, al, &ev.q(be, &y), &ev.p(al, &x)), &ev.q(ga, &z));
                (lhs, vec_add(&t1, &t2))
            }
            Axiom::PrePoisson(1) => {
                let tri = vec_sub(
                    &ev.mu(0, al, be, &ev.q(al, &x), &ev.p(be, &y)),
                    &ev.mu(0, be, al, &ev.q(be, &y), &ev.p(al, &x)),
                );
                let lhs = ev.mu(1, m(al, be), ga, &tri, &ev.q(ga, &z));
                let t1 = ev.mu(0, al, m(be, ga), &ev.pq(al, &x), &ev.mu(1, be, ga, &ev.p(be, &y), &z));
                let t2 = ev.mu(1, be, m(al, ga), &ev.pq(be, &y), &ev.mu(0, al, ga, &ev.p(al, &x), &z));
                (lhs, vec_sub(&t1, &t2))
            }
            Axiom::PrePoisson(2) => {
                let star = vec_add(
                    &ev.mu(1, al, be, &ev.q(al, &x), &ev.p(be, &y)),
                    &ev.mu(1, be, al, &ev.q(be, &y), &ev.p(al, &x)),
                );
                let lhs = ev.mu(0, m(al, be), ga, &star, &ev.q(ga, &z));
                let t1 = ev.mu(1, al, m(be, ga), &ev.pq(al, &x), &ev.mu(0, be, ga, &ev.p(be, &y), &z));
                let t2 = ev.mu(1, be, m(al, ga), &ev.pq(be, &y), &ev.mu(0, al, ga, &ev.p(al, &x), &z));
                (lhs, vec_add(&t1, &t2))
            }
            other => panic!("axiom {other:?} has no ternary form"),
        }
    }
}

fn vec_neg(v: &[Rational]) -> Vector {
    v.iter().map(|x| -x).collect()
}

struct Ev<'a> {
    a: &'a AlgebraInstance,
}

impl Ev<'_> {
    fn m(&self, s: Element, t: Element) -> Element {
        self.a.omega().mul(s, t)
    }

    fn mu(&self, c: usize, s: Element, t: Element, x: &[Rational], y: &[Rational]) -> Vector {
        self.a.product(c).apply(s, t, x, y)
    }

    /// `x ≺ y + x ≻ y` for a two-component instance.
    fn sum(&self, s: Element, t: Element, x: &[Rational], y: &[Rational]) -> Vector {
        vec_add(&self.mu(0, s, t, x, y), &self.mu(1, s, t, x, y))
    }

    fn map(&self, which: MapSel, s: Element, v: &[Rational]) -> Vector {
        match which {
            MapSel::P => self.p(s, v),
            MapSel::Q => self.q(s, v),
        }
    }

    fn p(&self, s: Element, v: &[Rational]) -> Vector {
        self.a.p().apply(s, v)
    }

    fn q(&self, s: Element, v: &[Rational]) -> Vector {
        self.a.q().apply(s, v)
    }

    fn pq(&self, s: Element, v: &[Rational]) -> Vector {
        self.p(s, &self.q(s, v))
    }

    /// The four terms of the twisted left-symmetry identity
    /// `l1 - l2 = r1 - r2`.
    fn prelie_terms(
        &self,
        c: usize,
        [al, be, ga]: [Element; 3],
        x: &[Rational],
        y: &[Rational],
        z: &[Rational],
    ) -> (Vector, Vector, Vector, Vector) {
        let m = |s, t| self.m(s, t);
        let l1 = self.mu(c, al, m(be, ga), &self.pq(al, x), &self.mu(c, be, ga, &self.p(be, y), z));
        let l2 = self.mu(c, m(al, be), ga, &self.mu(c, al, be, &self.q(al, x), &self.p(be, y)), &self.q(ga, z));
        let r1 = self.mu(c, be, m(al, ga), &self.pq(be, y), &self.mu(c, al, ga, &self.p(al, x), z));
        let r2 = self.mu(c, m(be, al), ga, &self.mu(c, be, al, &self.q(be, y), &self.p(al, x)), &self.q(ga, z));
        (l1, l2, r1, r2)
    }
}

fn decode(mut t: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = t % base;
        t /= base;
    }
    out
}

/// Scans every `(omega tuple, basis tuple)` cell of the given arity in
/// lexicographic order and records the cells where the sides differ.
fn scan(
    name: String,
    n: usize,
    d: usize,
    arity: usize,
    cfg: &CheckConfig,
    eval: impl Fn(&[Element], &[usize]) -> (Vector, Vector) + Sync,
) -> CheckReport {
    let cap = cfg.cap();
    let omega_count = n.pow(arity as u32);
    let basis_count = d.pow(arity as u32);
    let cell = |o: usize, stop: bool| {
        let omega = decode(o, n, arity);
        let mut count = 0;
        let mut found = Vec::new();
        for b in 0..basis_count {
            let basis = decode(b, d, arity);
            let (lhs, rhs) = eval(&omega, &basis);
            if lhs != rhs {
                count += 1;
                if found.len() < cap {
                    found.push(Witness {
                        omega: omega.clone(),
                        basis,
                        lhs,
                        rhs,
                    });
                }
                if stop {
                    break;
                }
            }
        }
        (count, found)
    };
    let mut report = CheckReport::new(name);
    if cfg.stop_at_first {
        for o in 0..omega_count {
            let (_, found) = cell(o, true);
            if let Some(w) = found.into_iter().next() {
                report.record(w, cap);
                break;
            }
        }
        return report;
    }
    let parts: Vec<(usize, Vec<Witness>)> = (0..omega_count).into_par_iter().map(|o| cell(o, false)).collect();
    for (count, found) in parts {
        if count == 0 {
            continue;
        }
        let extra = count - found.len();
        for w in found {
            report.record(w, cap);
        }
        report.violations += extra;
    }
    report
}

/// Runs one axiom over all cells.
pub fn check_axiom(a: &AlgebraInstance, axiom: Axiom, cfg: &CheckConfig) -> CheckReport {
    scan(
        axiom.name(a.kind()),
        a.omega().order(),
        a.dim(),
        axiom.arity(),
        cfg,
        |o, b| axiom.evaluate(a, o, b),
    )
}

fn multiplicative(component: usize) -> [Axiom; 2] {
    [
        Axiom::Multiplicative { map: MapSel::P, component },
        Axiom::Multiplicative { map: MapSel::Q, component },
    ]
}

fn prelie_axioms(component: usize) -> Vec<Axiom> {
    let mut v = multiplicative(component).to_vec();
    v.push(Axiom::PreLie { component });
    v
}

fn lie_axioms(component: usize) -> Vec<Axiom> {
    let mut v = multiplicative(component).to_vec();
    v.push(Axiom::LieSkew { component });
    v.push(Axiom::LieJacobi { component });
    v
}

fn zinbiel_axioms(component: usize) -> Vec<Axiom> {
    let mut v = multiplicative(component).to_vec();
    v.push(Axiom::Zinbiel { component });
    v
}

/// Every axiom the checker for `kind` runs, in report order.
pub fn axioms_for(kind: AlgebraKind) -> Vec<Axiom> {
    match kind {
        AlgebraKind::OmegaAssociative | AlgebraKind::BiHomOmegaAssociative => {
            let mut v = multiplicative(0).to_vec();
            v.push(Axiom::BiHomAssociativity);
            v
        }
        AlgebraKind::Dendriform => {
            let mut v = multiplicative(0).to_vec();
            v.extend(multiplicative(1));
            v.extend((1..=3).map(Axiom::Dendriform));
            v
        }
        AlgebraKind::PreLie => prelie_axioms(0),
        AlgebraKind::Lie => lie_axioms(0),
        AlgebraKind::PostLie => {
            let mut v = lie_axioms(0);
            v.extend(multiplicative(1));
            v.extend([Axiom::PostLie(1), Axiom::PostLie(2)]);
            v
        }
        AlgebraKind::Zinbiel => zinbiel_axioms(0),
        AlgebraKind::PrePoisson => {
            let mut v = prelie_axioms(0);
            v.extend(zinbiel_axioms(1));
            v.extend([Axiom::PrePoisson(1), Axiom::PrePoisson(2)]);
            v
        }
    }
}

fn require(a: &AlgebraInstance, allowed: &[AlgebraKind], expected: &str) -> Result<(), CheckError> {
    if !allowed.contains(&a.kind()) {
        return Err(CheckError::KindMismatch {
            expected: expected.into(),
            found: a.kind(),
        });
    }
    if a.kind().requires_commutative_omega() && !a.omega().is_commutative() {
        return Err(CheckError::NonCommutativeOmega {
            kind: a.kind(),
            omega: a.omega().name().into(),
        });
    }
    Ok(())
}

fn run_all(a: &AlgebraInstance, cfg: &CheckConfig) -> Verdict {
    let mut verdict = Verdict::new(a.kind().keyword());
    for axiom in axioms_for(a.kind()) {
        verdict.push(check_axiom(a, axiom, cfg));
    }
    verdict
}

pub fn check_bihom_associative(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    require(
        a,
        &[AlgebraKind::OmegaAssociative, AlgebraKind::BiHomOmegaAssociative],
        "an associative",
    )?;
    Ok(run_all(a, cfg))
}

pub fn check_dendriform(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    require(a, &[AlgebraKind::Dendriform], "a dendriform")?;
    Ok(run_all(a, cfg))
}

pub fn check_prelie(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    require(a, &[AlgebraKind::PreLie], "a pre-Lie")?;
    Ok(run_all(a, cfg))
}

pub fn check_lie(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    require(a, &[AlgebraKind::Lie], "a Lie")?;
    Ok(run_all(a, cfg))
}

/// Re-verifies the Lie axioms of the bracket before the compatibilities.
pub fn check_postlie(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    require(a, &[AlgebraKind::PostLie], "a PostLie")?;
    Ok(run_all(a, cfg))
}

pub fn check_zinbiel(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    require(a, &[AlgebraKind::Zinbiel], "a zinbiel")?;
    Ok(run_all(a, cfg))
}

pub fn check_prepoisson(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    require(a, &[AlgebraKind::PrePoisson], "a pre-Poisson")?;
    Ok(run_all(a, cfg))
}

/// Dispatches on the instance's kind tag.
pub fn check_instance(a: &AlgebraInstance, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    match a.kind() {
        AlgebraKind::OmegaAssociative | AlgebraKind::BiHomOmegaAssociative => check_bihom_associative(a, cfg),
        AlgebraKind::Dendriform => check_dendriform(a, cfg),
        AlgebraKind::PreLie => check_prelie(a, cfg),
        AlgebraKind::Lie => check_lie(a, cfg),
        AlgebraKind::PostLie => check_postlie(a, cfg),
        AlgebraKind::Zinbiel => check_zinbiel(a, cfg),
        AlgebraKind::PrePoisson => check_prepoisson(a, cfg),
    }
}

fn same_shape(a: &AlgebraInstance, f: &LinearFamily, what: &str) -> Result<(), CheckError> {
    if f.dim() != a.dim() || **f.omega() != **a.omega() {
        return Err(CheckError::ShapeMismatch(format!(
            "{what} does not match the algebra's dimension or semigroup"
        )));
    }
    Ok(())
}

/// Both sides of the Rota-Baxter identity for product `c` at `(α, β, i, j)`.
pub fn rota_baxter_sides(
    a: &AlgebraInstance,
    r: &RotaBaxterFamily,
    c: usize,
    omega: &[Element],
    basis: &[usize],
) -> (Vector, Vector) {
    let d = a.dim();
    let (al, be) = (omega[0], omega[1]);
    let x = basis_vector(d, basis[0]);
    let y = basis_vector(d, basis[1]);
    let mu = |u: &[Rational], v: &[Rational]| a.product(c).apply(al, be, u, v);
    let rx = r.maps.apply(al, &x);
    let ry = r.maps.apply(be, &y);
    let lhs = mu(&rx, &ry);
    let inner = vec_add(&vec_add(&mu(&rx, &y), &mu(&x, &ry)), &vec_scale(&r.weight, &mu(&x, &y)));
    (lhs, r.maps.apply(a.omega().mul(al, be), &inner))
}

/// Checks elementwise commutation `f_α g_α = g_α f_α`; witnesses carry the
/// flattened matrices.
fn commute_report(name: &str, f: &LinearFamily, g: &LinearFamily, cfg: &CheckConfig) -> CheckReport {
    intertwine_report(name, f, g, g, f, cfg)
}

/// Checks `a_α b_α = c_α d_α` for every α.
fn intertwine_report(
    name: &str,
    a: &LinearFamily,
    b: &LinearFamily,
    c: &LinearFamily,
    d: &LinearFamily,
    cfg: &CheckConfig,
) -> CheckReport {
    let mut report = CheckReport::new(name);
    for al in a.omega().iter() {
        let lhs = a.get(al) * b.get(al);
        let rhs = c.get(al) * d.get(al);
        if lhs != rhs {
            report.record(
                Witness {
                    omega: vec![al],
                    basis: vec![],
                    lhs: lhs.entries().to_vec(),
                    rhs: rhs.entries().to_vec(),
                },
                cfg.cap(),
            );
            if cfg.stop_at_first {
                break;
            }
        }
    }
    report
}

/// The Rota-Baxter identity on every product of `a`, then commutation of
/// `R` with `p` and `q`.
pub fn check_rota_baxter(a: &AlgebraInstance, r: &RotaBaxterFamily, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    same_shape(a, &r.maps, "Rota-Baxter family")?;
    let mut verdict = Verdict::new(format!("rota-baxter on {}", a.kind()));
    for (c, name) in a.kind().components().iter().enumerate() {
        verdict.push(scan(
            format!("rota-baxter[{name}]"),
            a.omega().order(),
            a.dim(),
            2,
            cfg,
            |o, b| rota_baxter_sides(a, r, c, o, b),
        ));
    }
    verdict.push(commute_report("rb-commutes-p", &r.maps, a.p(), cfg));
    verdict.push(commute_report("rb-commutes-q", &r.maps, a.q(), cfg));
    Ok(verdict)
}

/// Both sides of `f_{αβ}(e_i ∘ e_j) = f_α(e_i) ∘' f_β(e_j)` for product `c`.
pub fn morphism_sides(
    f: &LinearFamily,
    src: &AlgebraInstance,
    dst: &AlgebraInstance,
    c: usize,
    omega: &[Element],
    basis: &[usize],
) -> (Vector, Vector) {
    let d = src.dim();
    let (al, be) = (omega[0], omega[1]);
    let x = basis_vector(d, basis[0]);
    let y = basis_vector(d, basis[1]);
    let lhs = f.apply(src.omega().mul(al, be), &src.product(c).apply(al, be, &x, &y));
    let rhs = dst.product(c).apply(al, be, &f.apply(al, &x), &f.apply(be, &y));
    (lhs, rhs)
}

/// Product compatibility for every component, then `p' f = f p` and
/// `q' f = f q`.
pub fn check_morphism(
    f: &LinearFamily,
    src: &AlgebraInstance,
    dst: &AlgebraInstance,
    cfg: &CheckConfig,
) -> Result<Verdict, CheckError> {
    let compatible = src.kind() == dst.kind() || (src.kind().is_associative() && dst.kind().is_associative());
    if !compatible {
        return Err(CheckError::KindMismatch {
            expected: format!("a {} target", src.kind()),
            found: dst.kind(),
        });
    }
    if src.dim() != dst.dim() || **src.omega() != **dst.omega() {
        return Err(CheckError::ShapeMismatch("source and target differ in shape".into()));
    }
    same_shape(src, f, "morphism family")?;
    let mut verdict = Verdict::new(format!("morphism of {}", src.kind()));
    for (c, name) in src.kind().components().iter().enumerate() {
        verdict.push(scan(
            format!("morphism[{name}]"),
            src.omega().order(),
            src.dim(),
            2,
            cfg,
            |o, b| morphism_sides(f, src, dst, c, o, b),
        ));
    }
    verdict.push(intertwine_report("morphism-intertwines-p", dst.p(), f, f, src.p(), cfg));
    verdict.push(intertwine_report("morphism-intertwines-q", dst.q(), f, f, src.q(), cfg));
    Ok(verdict)
}
