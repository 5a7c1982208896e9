//! Transforms between structure classes. Each one re-checks its inputs
//! and, unless told otherwise, certifies its output with the target checker.

use num_traits::Zero;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::algebra::{new_instance, AlgebraError, AlgebraInstance, AlgebraKind, BilinearFamily, LinearFamily, RotaBaxterFamily};
use crate::checkers::{check_instance, check_morphism, check_rota_baxter, CheckError};
use crate::linalg::{basis_vector, format_rational, vec_add, vec_scale, Rational, Vector};
use crate::report::{CheckConfig, Verdict};
use crate::semigroup::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {what}")]
    PreconditionCheckFailed { what: String, verdict: Verdict },
    #[error("{construction} produced an output failing its checker")]
    PostconditionFailed { construction: &'static str, verdict: Verdict },
    #[error("structure map {map} is not invertible at `{element}`")]
    Singular { map: &'static str, element: String },
    #[error("{construction} needs a commutative semigroup, `{omega}` is not")]
    NonCommutativeOmega { construction: &'static str, omega: String },
    #[error("{construction} needs weight 0, got {weight}")]
    NonzeroWeight { construction: &'static str, weight: String },
    #[error("{which} is not a morphism of the input")]
    MorphismCheckFailed { which: &'static str, verdict: Verdict },
    #[error("families {left} and {right} do not commute at `{element}`")]
    NonCommutingFamilies {
        left: &'static str,
        right: &'static str,
        element: String,
    },
    #[error("expected {expected} input, found {found}")]
    KindMismatch { expected: &'static str, found: AlgebraKind },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConstructOptions {
    /// Skip the post-check of the output.
    pub unchecked: bool,
    pub cfg: CheckConfig,
}

impl ConstructOptions {
    pub fn unchecked() -> Self {
        Self {
            unchecked: true,
            ..Self::default()
        }
    }
}

/// Inverses of the structure maps, computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inverses {
    pub p_inv: LinearFamily,
    pub q_inv: LinearFamily,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub construction: &'static str,
    /// SHA-256 of each input's canonical encoding, in argument order.
    pub inputs: Vec<String>,
    pub weight: Option<Rational>,
    pub inverses: Option<Inverses>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constructed {
    pub instance: AlgebraInstance,
    pub provenance: Provenance,
}

/// Construction names, as accepted on the command line.
pub const CONSTRUCTIONS: [&str; 12] = [
    "yau_twist",
    "rb_star_associative",
    "dendriform_total",
    "rb_split_dendriform",
    "dendriform_to_prelie",
    "assoc_as_prelie",
    "prelie_to_lie",
    "assoc_to_lie",
    "rb_bracket_lie",
    "rb_lie_to_prelie",
    "postlie_to_lie",
    "lie_rb_to_postlie",
];

fn encode_family(out: &mut String, tag: &str, f: &LinearFamily) {
    out.push_str(tag);
    for m in f.maps() {
        for v in m.entries() {
            out.push(' ');
            out.push_str(&format_rational(v));
        }
        out.push(';');
    }
    out.push('\n');
}

/// SHA-256 over a canonical text encoding of the instance data (names of
/// the semigroup and instance do not enter).
pub fn instance_digest(a: &AlgebraInstance) -> String {
    let mut s = format!("kind {}\ndim {}\nomega", a.kind(), a.dim());
    let w = a.omega();
    for x in w.iter() {
        for y in w.iter() {
            s.push_str(&format!(" {}", w.mul(x, y)));
        }
    }
    s.push('\n');
    for (name, f) in a.kind().components().iter().zip(a.products()) {
        s.push_str(name);
        for v in f.entries() {
            s.push(' ');
            s.push_str(&format_rational(v));
        }
        s.push('\n');
    }
    encode_family(&mut s, "p", a.p());
    encode_family(&mut s, "q", a.q());
    hex::encode(Sha256::digest(s.as_bytes()))
}

pub fn family_digest(f: &LinearFamily, weight: Option<&Rational>) -> String {
    let mut s = String::new();
    encode_family(&mut s, "maps", f);
    if let Some(w) = weight {
        s.push_str(&format!("weight {}\n", format_rational(w)));
    }
    hex::encode(Sha256::digest(s.as_bytes()))
}

fn require_kind(a: &AlgebraInstance, allowed: &[AlgebraKind], expected: &'static str) -> Result<(), ConstructionError> {
    if allowed.contains(&a.kind()) {
        Ok(())
    } else {
        Err(ConstructionError::KindMismatch {
            expected,
            found: a.kind(),
        })
    }
}

const ASSOCIATIVE: [AlgebraKind; 2] = [AlgebraKind::OmegaAssociative, AlgebraKind::BiHomOmegaAssociative];

fn require_passes(a: &AlgebraInstance, opts: &ConstructOptions) -> Result<(), ConstructionError> {
    let verdict = check_instance(a, &opts.cfg)?;
    if verdict.passed() {
        Ok(())
    } else {
        Err(ConstructionError::PreconditionCheckFailed {
            what: format!("input does not satisfy the {} axioms", a.kind()),
            verdict,
        })
    }
}

fn require_rb(a: &AlgebraInstance, r: &RotaBaxterFamily, opts: &ConstructOptions) -> Result<(), ConstructionError> {
    let verdict = check_rota_baxter(a, r, &opts.cfg)?;
    if verdict.passed() {
        Ok(())
    } else {
        Err(ConstructionError::PreconditionCheckFailed {
            what: "family is not a Rota-Baxter family of the input".into(),
            verdict,
        })
    }
}

fn require_commutative(a: &AlgebraInstance, construction: &'static str) -> Result<(), ConstructionError> {
    if a.omega().is_commutative() {
        Ok(())
    } else {
        Err(ConstructionError::NonCommutativeOmega {
            construction,
            omega: a.omega().name().into(),
        })
    }
}

fn invert_maps(a: &AlgebraInstance) -> Result<Inverses, ConstructionError> {
    let singular = |map, e: Element| ConstructionError::Singular {
        map,
        element: a.omega().label(e).into(),
    };
    let p_inv = a.p().inverse().map_err(|e| singular("p", e))?;
    let q_inv = a.q().inverse().map_err(|e| singular("q", e))?;
    Ok(Inverses { p_inv, q_inv })
}

fn finish(
    construction: &'static str,
    instance: AlgebraInstance,
    provenance: Provenance,
    opts: &ConstructOptions,
    extra: Option<&RotaBaxterFamily>,
) -> Result<Constructed, ConstructionError> {
    if !opts.unchecked {
        let mut verdict = check_instance(&instance, &opts.cfg)?;
        if let Some(r) = extra {
            verdict.extend(check_rota_baxter(&instance, r, &opts.cfg)?);
        }
        if !verdict.passed() {
            return Err(ConstructionError::PostconditionFailed { construction, verdict });
        }
    }
    Ok(Constructed { instance, provenance })
}

fn provenance(
    construction: &'static str,
    a: &AlgebraInstance,
    r: Option<&RotaBaxterFamily>,
    inverses: Option<Inverses>,
) -> Provenance {
    let mut inputs = vec![instance_digest(a)];
    if let Some(r) = r {
        inputs.push(family_digest(&r.maps, Some(&r.weight)));
    }
    Provenance {
        construction,
        inputs,
        weight: r.map(|r| r.weight.clone()),
        inverses,
    }
}

/// A new bilinear family from `f(α, β, e_i, e_j)`.
fn build(a: &AlgebraInstance, f: impl Fn(Element, Element, &[Rational], &[Rational]) -> Vector) -> BilinearFamily {
    let d = a.dim();
    BilinearFamily::from_fn(a.omega().clone(), d, |al, be, i, j| {
        f(al, be, &basis_vector(d, i), &basis_vector(d, j))
    })
}

fn assoc_kind(p: &LinearFamily, q: &LinearFamily) -> AlgebraKind {
    if p.is_identity() && q.is_identity() {
        AlgebraKind::OmegaAssociative
    } else {
        AlgebraKind::BiHomOmegaAssociative
    }
}

/// `x ∘ R_β y + R_α x ∘ y + λ x ∘ y` for product `c`. This is the Rota-Baxter
/// star product and, on a Lie bracket, the Rota-Baxter bracket.
fn rb_combination(a: &AlgebraInstance, c: usize, r: &RotaBaxterFamily) -> BilinearFamily {
    let mu = a.product(c);
    build(a, |al, be, x, y| {
        let t1 = mu.apply(al, be, x, &r.maps.apply(be, y));
        let t2 = mu.apply(al, be, &r.maps.apply(al, x), y);
        vec_add(&vec_add(&t1, &t2), &vec_scale(&r.weight, &mu.apply(al, be, x, y)))
    })
}

/// `(p_β⁻¹ q_β y) ∘_{β,α} (p_α q_α⁻¹ x)`: the twisted swap of `x ∘_{α,β} y`.
fn twisted_swap(a: &AlgebraInstance, c: usize, inv: &Inverses) -> BilinearFamily {
    let mu = a.product(c);
    build(a, |al, be, x, y| {
        let left = inv.p_inv.apply(be, &a.q().apply(be, y));
        let right = a.p().apply(al, &inv.q_inv.apply(al, x));
        mu.apply(be, al, &left, &right)
    })
}

/// Twisted commutator `x ∘ y − (p_β⁻¹ q_β y) ∘_{β,α} (p_α q_α⁻¹ x)`.
fn twisted_commutator(a: &AlgebraInstance, c: usize, inv: &Inverses) -> BilinearFamily {
    a.product(c).sub(&twisted_swap(a, c, inv))
}

/// `{R_α x, y}` for product `c`.
fn left_rb(a: &AlgebraInstance, c: usize, r: &RotaBaxterFamily) -> BilinearFamily {
    let mu = a.product(c);
    build(a, |al, be, x, y| mu.apply(al, be, &r.maps.apply(al, x), y))
}

fn noncommuting(
    left: (&'static str, &LinearFamily),
    right: (&'static str, &LinearFamily),
    a: &AlgebraInstance,
) -> Result<(), ConstructionError> {
    match left.1.first_noncommuting(right.1) {
        None => Ok(()),
        Some(e) => Err(ConstructionError::NonCommutingFamilies {
            left: left.0,
            right: right.0,
            element: a.omega().label(e).into(),
        }),
    }
}

/// Yau twist: every product becomes `p2_α(x) ∘_{α,β} q2_β(y)` and the
/// structure maps become `p_α p2_α`, `q_α q2_α`.
pub fn yau_twist(
    a: &AlgebraInstance,
    p2: &LinearFamily,
    q2: &LinearFamily,
    opts: &ConstructOptions,
) -> Result<Constructed, ConstructionError> {
    for f in [p2, q2] {
        if !f.same_shape(a.p()) {
            return Err(AlgebraError::ShapeMismatch("twisting maps do not match the input".into()).into());
        }
    }
    require_passes(a, opts)?;
    let (p, q) = (("p", a.p()), ("q", a.q()));
    let (p2n, q2n) = (("p2", p2), ("q2", q2));
    for (l, r) in [(p, p2n), (p, q2n), (q, p2n), (q, q2n), (p2n, q2n)] {
        noncommuting(l, r, a)?;
    }
    for (which, f) in [("p2", p2), ("q2", q2)] {
        let verdict = check_morphism(f, a, a, &opts.cfg)?;
        if !verdict.passed() {
            return Err(ConstructionError::MorphismCheckFailed { which, verdict });
        }
    }
    let products = (0..a.products().len())
        .map(|c| {
            let mu = a.product(c);
            build(a, |al, be, x, y| mu.apply(al, be, &p2.apply(al, x), &q2.apply(be, y)))
        })
        .collect();
    let new_p = a.p().compose(p2);
    let new_q = a.q().compose(q2);
    let kind = match a.kind() {
        AlgebraKind::OmegaAssociative => assoc_kind(&new_p, &new_q),
        k => k,
    };
    let instance = new_instance(kind, a.omega().clone(), products, new_p, new_q)?;
    let mut prov = provenance("yau_twist", a, None, None);
    prov.inputs.push(family_digest(p2, None));
    prov.inputs.push(family_digest(q2, None));
    finish("yau_twist", instance, prov, opts, None)
}

/// `x ⋆ y = x • R_β y + R_α x • y + λ x • y`, same structure maps. The
/// post-check also confirms `R` is still Rota-Baxter for `⋆`.
pub fn rb_star_associative(
    a: &AlgebraInstance,
    r: &RotaBaxterFamily,
    opts: &ConstructOptions,
) -> Result<Constructed, ConstructionError> {
    require_kind(a, &ASSOCIATIVE, "an associative")?;
    require_passes(a, opts)?;
    require_rb(a, r, opts)?;
    let instance = a.with_products(vec![rb_combination(a, 0, r)])?;
    finish(
        "rb_star_associative",
        instance,
        provenance("rb_star_associative", a, Some(r), None),
        opts,
        Some(r),
    )
}

/// `x • y = x ≺ y + x ≻ y`.
pub fn dendriform_total(a: &AlgebraInstance, opts: &ConstructOptions) -> Result<Constructed, ConstructionError> {
    require_kind(a, &[AlgebraKind::Dendriform], "a dendriform")?;
    require_passes(a, opts)?;
    let total = a.product(0).add(a.product(1));
    let instance = new_instance(
        assoc_kind(a.p(), a.q()),
        a.omega().clone(),
        vec![total],
        a.p().clone(),
        a.q().clone(),
    )?;
    finish("dendriform_total", instance, provenance("dendriform_total", a, None, None), opts, None)
}

/// `x ≺ y = x • R_β y + λ x • y`, `x ≻ y = R_α x • y`.
pub fn rb_split_dendriform(
    a: &AlgebraInstance,
    r: &RotaBaxterFamily,
    opts: &ConstructOptions,
) -> Result<Constructed, ConstructionError> {
    require_kind(a, &ASSOCIATIVE, "an associative")?;
    require_passes(a, opts)?;
    require_rb(a, r, opts)?;
    let mu = a.product(0);
    let prec = build(a, |al, be, x, y| {
        vec_add(&mu.apply(al, be, x, &r.maps.apply(be, y)), &vec_scale(&r.weight, &mu.apply(al, be, x, y)))
    });
    let succ = left_rb(a, 0, r);
    let instance = new_instance(
        AlgebraKind::Dendriform,
        a.omega().clone(),
        vec![prec, succ],
        a.p().clone(),
        a.q().clone(),
    )?;
    finish(
        "rb_split_dendriform",
        instance,
        provenance("rb_split_dendriform", a, Some(r), None),
        opts,
        None,
    )
}

/// `x ▶ y = x ≻ y − (p_β⁻¹ q_β y) ≺_{β,α} (p_α q_α⁻¹ x)`.
pub fn dendriform_to_prelie(a: &AlgebraInstance, opts: &ConstructOptions) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "dendriform_to_prelie";
    require_kind(a, &[AlgebraKind::Dendriform], "a dendriform")?;
    require_commutative(a, NAME)?;
    let inv = invert_maps(a)?;
    require_passes(a, opts)?;
    let tri = a.product(1).sub(&twisted_swap(a, 0, &inv));
    let instance = new_instance(AlgebraKind::PreLie, a.omega().clone(), vec![tri], a.p().clone(), a.q().clone())?;
    finish(NAME, instance, provenance(NAME, a, None, Some(inv)), opts, None)
}

/// The associative product itself, read as a pre-Lie product.
pub fn assoc_as_prelie(a: &AlgebraInstance, opts: &ConstructOptions) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "assoc_as_prelie";
    require_kind(a, &ASSOCIATIVE, "an associative")?;
    require_commutative(a, NAME)?;
    require_passes(a, opts)?;
    let instance = a.retag(AlgebraKind::PreLie)?;
    finish(NAME, instance, provenance(NAME, a, None, None), opts, None)
}

/// `{x, y} = x ▶ y − (p_β⁻¹ q_β y) ▶_{β,α} (p_α q_α⁻¹ x)`.
pub fn prelie_to_lie(a: &AlgebraInstance, opts: &ConstructOptions) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "prelie_to_lie";
    require_kind(a, &[AlgebraKind::PreLie], "a pre-Lie")?;
    require_commutative(a, NAME)?;
    let inv = invert_maps(a)?;
    require_passes(a, opts)?;
    let bracket = twisted_commutator(a, 0, &inv);
    let instance = new_instance(AlgebraKind::Lie, a.omega().clone(), vec![bracket], a.p().clone(), a.q().clone())?;
    finish(NAME, instance, provenance(NAME, a, None, Some(inv)), opts, None)
}

/// `{x, y} = x • y − (p_β⁻¹ q_β y) •_{β,α} (p_α q_α⁻¹ x)`.
pub fn assoc_to_lie(a: &AlgebraInstance, opts: &ConstructOptions) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "assoc_to_lie";
    require_kind(a, &ASSOCIATIVE, "an associative")?;
    require_commutative(a, NAME)?;
    let inv = invert_maps(a)?;
    require_passes(a, opts)?;
    let bracket = twisted_commutator(a, 0, &inv);
    let instance = new_instance(AlgebraKind::Lie, a.omega().clone(), vec![bracket], a.p().clone(), a.q().clone())?;
    finish(NAME, instance, provenance(NAME, a, None, Some(inv)), opts, None)
}

/// `⟨x, y⟩ = {R_α x, y} + {x, R_β y} + λ {x, y}`.
pub fn rb_bracket_lie(
    a: &AlgebraInstance,
    r: &RotaBaxterFamily,
    opts: &ConstructOptions,
) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "rb_bracket_lie";
    require_kind(a, &[AlgebraKind::Lie], "a Lie")?;
    require_passes(a, opts)?;
    require_rb(a, r, opts)?;
    let instance = a.with_products(vec![rb_combination(a, 0, r)])?;
    finish(NAME, instance, provenance(NAME, a, Some(r), None), opts, None)
}

/// `x ▶ y = {R_α x, y}` for a weight-0 family.
pub fn rb_lie_to_prelie(
    a: &AlgebraInstance,
    r: &RotaBaxterFamily,
    opts: &ConstructOptions,
) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "rb_lie_to_prelie";
    require_kind(a, &[AlgebraKind::Lie], "a Lie")?;
    if !r.weight.is_zero() {
        return Err(ConstructionError::NonzeroWeight {
            construction: NAME,
            weight: format_rational(&r.weight),
        });
    }
    require_passes(a, opts)?;
    require_rb(a, r, opts)?;
    let instance = new_instance(
        AlgebraKind::PreLie,
        a.omega().clone(),
        vec![left_rb(a, 0, r)],
        a.p().clone(),
        a.q().clone(),
    )?;
    finish(NAME, instance, provenance(NAME, a, Some(r), None), opts, None)
}

/// `<x, y> = x ▶ y − (p_β⁻¹ q_β y) ▶_{β,α} (p_α q_α⁻¹ x) + {x, y}`.
pub fn postlie_to_lie(a: &AlgebraInstance, opts: &ConstructOptions) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "postlie_to_lie";
    require_kind(a, &[AlgebraKind::PostLie], "a PostLie")?;
    require_commutative(a, NAME)?;
    let inv = invert_maps(a)?;
    require_passes(a, opts)?;
    let bracket = twisted_commutator(a, 1, &inv).add(a.product(0));
    let instance = new_instance(AlgebraKind::Lie, a.omega().clone(), vec![bracket], a.p().clone(), a.q().clone())?;
    finish(NAME, instance, provenance(NAME, a, None, Some(inv)), opts, None)
}

/// Bracket `λ {x, y}` and `x ▶ y = {R_α x, y}`.
pub fn lie_rb_to_postlie(
    a: &AlgebraInstance,
    r: &RotaBaxterFamily,
    opts: &ConstructOptions,
) -> Result<Constructed, ConstructionError> {
    const NAME: &str = "lie_rb_to_postlie";
    require_kind(a, &[AlgebraKind::Lie], "a Lie")?;
    require_passes(a, opts)?;
    require_rb(a, r, opts)?;
    let bracket = a.product(0).scale(&r.weight);
    let instance = new_instance(
        AlgebraKind::PostLie,
        a.omega().clone(),
        vec![bracket, left_rb(a, 0, r)],
        a.p().clone(),
        a.q().clone(),
    )?;
    finish(NAME, instance, provenance(NAME, a, Some(r), None), opts, None)
}
