//! Instance supply: the two-dimensional example, closed families, a fixed
//! corpus, and exhaustive small-entry searches with the checkers as oracles.

use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{new_instance, AlgebraError, AlgebraInstance, AlgebraKind, BilinearFamily, LinearFamily, RotaBaxterFamily};
use crate::checkers::{check_bihom_associative, check_instance, check_morphism, check_rota_baxter, CheckError};
use crate::linalg::{format_rational, int, zero_vector, Matrix, Rational};
use crate::report::{CheckConfig, Verdict};
use crate::semigroup::{Element, SemigroupTable};

/// Abort searches whose candidate space exceeds this.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForgeError {
    #[error("side condition `{condition}` fails at ({})", indices.join(","))]
    ConditionViolated { condition: &'static str, indices: Vec<String> },
    #[error("search space of {space} candidates exceeds the budget of {budget}")]
    BudgetExceeded { space: u128, budget: u64 },
    #[error("parameter shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Parameters of the two-dimensional example: `c` on `Ω × Ω` (row-major),
/// `rthree(α)` the scalar `α ⋌ 1` and `lthree(α)` the scalar `1 ⋋ α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDimExampleParams {
    pub omega: Arc<SemigroupTable>,
    pub c: Vec<Rational>,
    pub rthree: Vec<Rational>,
    pub lthree: Vec<Rational>,
}

impl TwoDimExampleParams {
    pub fn c(&self, a: Element, b: Element) -> &Rational {
        &self.c[a * self.omega.order() + b]
    }

    /// All parameters equal to one.
    pub fn ones(omega: Arc<SemigroupTable>) -> Self {
        let n = omega.order();
        Self {
            c: vec![Rational::one(); n * n],
            rthree: vec![Rational::one(); n],
            lthree: vec![Rational::one(); n],
            omega,
        }
    }
}

/// The two ways of reading `q_α(e₂)` in the example.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QReading {
    /// `q_α(e₂) = (1 ⋋ α) e₁`, the verbatim reading.
    Verbatim,
    /// `q_α(e₂) = (1 ⋋ α) e₂`.
    Corrected,
}

impl QReading {
    pub const BOTH: [QReading; 2] = [QReading::Verbatim, QReading::Corrected];

    pub fn label(self) -> &'static str {
        match self {
            QReading::Verbatim => "verbatim: q(e2) = (1<a) e1",
            QReading::Corrected => "corrected: q(e2) = (1<a) e2",
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            QReading::Verbatim => "verbatim",
            QReading::Corrected => "corrected",
        }
    }
}

/// Checks the three side conditions in a fixed order and reports the
/// first failure.
pub fn validate_two_dim_params(params: &TwoDimExampleParams) -> Result<(), ForgeError> {
    let w = &params.omega;
    let n = w.order();
    if params.c.len() != n * n || params.rthree.len() != n || params.lthree.len() != n {
        return Err(ForgeError::Shape(format!(
            "expected {} values of c and {n} of each scalar map",
            n * n
        )));
    }
    let labels = |ix: &[Element]| ix.iter().map(|&e| w.label(e).to_string()).collect::<Vec<_>>();
    for (condition, f) in [
        ("(ab > 1) = (a > 1)(b > 1)", &params.rthree),
        ("(1 < ab) = (1 < a)(1 < b)", &params.lthree),
    ] {
        for a in w.iter() {
            for b in w.iter() {
                if f[w.mul(a, b)] != &f[a] * &f[b] {
                    return Err(ForgeError::ConditionViolated {
                        condition,
                        indices: labels(&[a, b]),
                    });
                }
            }
        }
    }
    for a in w.iter() {
        for b in w.iter() {
            for g in w.iter() {
                let lhs = params.c(a, b) * &params.lthree[g] * params.c(w.mul(a, b), g);
                let rhs = params.c(a, w.mul(b, g)) * &params.rthree[a] * params.c(b, g);
                if lhs != rhs {
                    return Err(ForgeError::ConditionViolated {
                        condition: "c(a,b)(1 < g)c(ab,g) = c(a,bg)(a > 1)c(b,g)",
                        indices: labels(&[a, b, g]),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Builds the example without validating the side conditions.
pub fn two_dim_instance(params: &TwoDimExampleParams, reading: QReading) -> Result<AlgebraInstance, ForgeError> {
    let w = params.omega.clone();
    let n = w.order();
    if params.c.len() != n * n || params.rthree.len() != n || params.lthree.len() != n {
        return Err(ForgeError::Shape("parameter lengths do not match the semigroup".into()));
    }
    // e_i • e_j = c(α,β) e_i
    let product = BilinearFamily::from_fn(w.clone(), 2, |a, b, i, _| {
        let mut v = zero_vector(2);
        v[i] = params.c(a, b).clone();
        v
    });
    let p = LinearFamily::from_fn(w.clone(), 2, |a| Matrix::scalar(2, &params.rthree[a]));
    let q = LinearFamily::from_fn(w.clone(), 2, |a| {
        let l = params.lthree[a].clone();
        let z = Rational::zero();
        // columns are the images of e1 and e2
        let rows = match reading {
            QReading::Verbatim => vec![vec![l.clone(), l], vec![z.clone(), z]],
            QReading::Corrected => vec![vec![l.clone(), z.clone()], vec![z, l]],
        };
        Matrix::from_rows(rows).expect("2x2")
    });
    Ok(new_instance(AlgebraKind::BiHomOmegaAssociative, w, vec![product], p, q)?)
}

/// The example with validated side conditions and the verbatim `q`.
pub fn make_two_dim_example(params: &TwoDimExampleParams) -> Result<AlgebraInstance, ForgeError> {
    make_two_dim_example_reading(params, QReading::Verbatim)
}

pub fn make_two_dim_example_reading(
    params: &TwoDimExampleParams,
    reading: QReading,
) -> Result<AlgebraInstance, ForgeError> {
    validate_two_dim_params(params)?;
    two_dim_instance(params, reading)
}

/// Verdict of one reading of the example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingOutcome {
    pub reading: QReading,
    pub instance: AlgebraInstance,
    pub verdict: Verdict,
}

/// Builds and checks both readings of `q_α(e₂)`.
pub fn two_dim_reading_report(
    params: &TwoDimExampleParams,
    cfg: &CheckConfig,
) -> Result<Vec<ReadingOutcome>, ForgeError> {
    validate_two_dim_params(params)?;
    QReading::BOTH
        .into_iter()
        .map(|reading| {
            let instance = two_dim_instance(params, reading)?;
            let verdict = check_bihom_associative(&instance, cfg)?;
            Ok(ReadingOutcome {
                reading,
                instance,
                verdict,
            })
        })
        .collect()
}

/// Every tuple `(c, rthree, lthree)` over `entries` on the given semigroup,
/// in lexicographic order of `c ++ rthree ++ lthree`.
pub fn two_dim_param_space(omega: &Arc<SemigroupTable>, entries: &[Rational]) -> Vec<TwoDimExampleParams> {
    let n = omega.order();
    let slots = n * n + 2 * n;
    let count = entries.len().pow(slots as u32);
    (0..count)
        .map(|t| {
            let digits = decode(t as u128, entries.len(), slots);
            let vals: Vec<Rational> = digits.iter().map(|&d| entries[d].clone()).collect();
            TwoDimExampleParams {
                omega: omega.clone(),
                c: vals[..n * n].to_vec(),
                rthree: vals[n * n..n * n + n].to_vec(),
                lthree: vals[n * n + n..].to_vec(),
            }
        })
        .collect()
}

/// Reattaches identity structure maps and the BiHom tag of the same class.
pub fn embed_omega_as_bihom(a: &AlgebraInstance) -> Result<AlgebraInstance, ForgeError> {
    if let Some(e) = a.p().first_non_identity().or_else(|| a.q().first_non_identity()) {
        return Err(ForgeError::Shape(format!(
            "structure maps are not the identity at `{}`",
            a.omega().label(e)
        )));
    }
    let kind = match a.kind() {
        AlgebraKind::OmegaAssociative => AlgebraKind::BiHomOmegaAssociative,
        k => k,
    };
    let id = LinearFamily::identity(a.omega().clone(), a.dim());
    Ok(new_instance(kind, a.omega().clone(), a.products().to_vec(), id.clone(), id)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_dim: usize,
    pub max_omega: usize,
    pub entries: Vec<Rational>,
    pub weight: Rational,
    /// Keep at most this many results (in enumeration order).
    pub target: Option<usize>,
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_dim: 4,
            max_omega: 3,
            entries: vec![int(-1), int(0), int(1)],
            weight: Rational::zero(),
            target: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SearchConfig {
    pub fn with_weight(weight: Rational) -> Self {
        Self {
            weight,
            ..Self::default()
        }
    }

    fn validate(&self, a: &AlgebraInstance) -> Result<u64, ForgeError> {
        if self.entries.is_empty() || self.max_dim == 0 || self.max_omega == 0 {
            return Err(ForgeError::Shape("search bounds must be positive and entries nonempty".into()));
        }
        if a.dim() > self.max_dim || a.omega().order() > self.max_omega {
            return Err(ForgeError::Shape(format!(
                "instance of dimension {} over {} elements exceeds the search bounds",
                a.dim(),
                a.omega().order()
            )));
        }
        let slots = (a.omega().order() * a.dim() * a.dim()) as u32;
        let space = (self.entries.len() as u128).checked_pow(slots).unwrap_or(u128::MAX);
        if space > self.budget as u128 {
            return Err(ForgeError::BudgetExceeded {
                space,
                budget: self.budget,
            });
        }
        Ok(space as u64)
    }
}

fn decode(mut t: u128, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (t % base as u128) as usize;
        t /= base as u128;
    }
    out
}

/// Candidate `t` of the family enumeration: matrices for `α = 0, 1, ...`,
/// each row-major, most significant entry first.
fn candidate_family(a: &AlgebraInstance, entries: &[Rational], t: u64) -> LinearFamily {
    let d = a.dim();
    let digits = decode(t as u128, entries.len(), a.omega().order() * d * d);
    let maps = digits
        .chunks(d * d)
        .map(|chunk| Matrix::new(d, d, chunk.iter().map(|&i| entries[i].clone()).collect()).expect("square"))
        .collect();
    LinearFamily::new(a.omega().clone(), maps).expect("well formed")
}

fn search<T: Send>(
    space: u64,
    target: Option<usize>,
    probe: impl Fn(u64) -> Option<T> + Sync + Send,
) -> Vec<T> {
    let Some(target) = target else {
        return (0..space).into_par_iter().filter_map(probe).collect();
    };
    // Growing chunks so a small target stops early; order is still
    // enumeration order.
    let mut out = Vec::new();
    let (mut start, mut chunk) = (0, 64);
    while start < space && out.len() < target {
        let end = space.min(start + chunk);
        out.extend((start..end).into_par_iter().filter_map(&probe).collect::<Vec<_>>());
        start = end;
        chunk *= 2;
    }
    out.truncate(target);
    out
}

/// Every family with entries from `cfg.entries` that is a Rota-Baxter family
/// of weight `cfg.weight` for `a` and commutes with its structure maps.
pub fn brute_force_rb_search(a: &AlgebraInstance, cfg: &SearchConfig) -> Result<Vec<RotaBaxterFamily>, ForgeError> {
    let space = cfg.validate(a)?;
    let fast = CheckConfig::fast();
    let verdict = check_instance(a, &fast)?;
    if !verdict.passed() {
        return Err(ForgeError::Shape(format!("search input fails its {} checker", a.kind())));
    }
    Ok(search(space, cfg.target, |t| {
        let r = RotaBaxterFamily::new(candidate_family(a, &cfg.entries, t), cfg.weight.clone());
        check_rota_baxter(a, &r, &fast).ok().filter(Verdict::passed).map(|_| r)
    }))
}

/// Pairs `(p', q')` for Yau twists: `(id, id)` first, then for every found
/// endomorphism `f` other than `0` and `id`, the pairs `(f, id)`, `(id, f)`,
/// `(f, f)` and `(f, f²)`. Each `f` is a morphism of `a` commuting with its
/// structure maps, so every pair listed commutes pairwise.
pub fn make_endomorphism_pairs(
    a: &AlgebraInstance,
    cfg: &SearchConfig,
) -> Result<Vec<(LinearFamily, LinearFamily)>, ForgeError> {
    let space = cfg.validate(a)?;
    let fast = CheckConfig::fast();
    let morphisms = search(space, cfg.target, |t| {
        let f = candidate_family(a, &cfg.entries, t);
        if f.is_identity() || f.maps().iter().all(Matrix::is_zero) {
            return None;
        }
        check_morphism(&f, a, a, &fast).ok().filter(Verdict::passed).map(|_| f)
    });
    let id = LinearFamily::identity(a.omega().clone(), a.dim());
    let mut pairs = vec![(id.clone(), id.clone())];
    for f in morphisms {
        let f2 = f.compose(&f);
        pairs.push((f.clone(), id.clone()));
        pairs.push((id.clone(), f.clone()));
        pairs.push((f.clone(), f.clone()));
        pairs.push((f, f2));
    }
    Ok(pairs)
}

/// The shipped semigroups.
pub mod semigroups {
    use super::*;

    pub fn trivial() -> Arc<SemigroupTable> {
        Arc::new(SemigroupTable::trivial("T"))
    }

    pub fn c2() -> Arc<SemigroupTable> {
        Arc::new(SemigroupTable::cyclic("C2", 2))
    }

    pub fn c3() -> Arc<SemigroupTable> {
        Arc::new(SemigroupTable::cyclic("C3", 3))
    }

    pub fn chain2() -> Arc<SemigroupTable> {
        Arc::new(SemigroupTable::chain("S2", 2))
    }

    pub fn left_zero2() -> Arc<SemigroupTable> {
        Arc::new(SemigroupTable::left_zero("L2", 2))
    }

    pub fn null2() -> Arc<SemigroupTable> {
        Arc::new(SemigroupTable::null("N2", 2))
    }

    /// Right-zero band `x * y = y`.
    pub fn right_zero2() -> Arc<SemigroupTable> {
        let labels = vec!["r0".to_string(), "r1".to_string()];
        Arc::new(SemigroupTable::new("R2", labels, vec![0, 1, 0, 1], false).expect("valid"))
    }

    /// One semigroup of each isomorphism type of order at most two.
    pub fn small() -> Vec<Arc<SemigroupTable>> {
        vec![trivial(), c2(), chain2(), null2(), left_zero2(), right_zero2()]
    }
}

/// Product from a list of nonzero structure constants `(i, j, k, value)`,
/// 0-based, identical on every `(α, β)`.
pub fn constant_product(omega: &Arc<SemigroupTable>, dim: usize, entries: &[(usize, usize, usize, i64)]) -> BilinearFamily {
    let mut f = BilinearFamily::zero(omega.clone(), dim);
    for a in omega.iter() {
        for b in omega.iter() {
            for &(i, j, k, v) in entries {
                f.set(a, b, i, j, k, int(v));
            }
        }
    }
    f
}

/// `c(α, β) · f_{α,β}` with the coboundary `c(α, β) = h(α) h(β) / h(αβ)`.
pub fn coboundary_scaled(f: &BilinearFamily, h: &[Rational]) -> BilinearFamily {
    let w = f.omega().clone();
    let d = f.dim();
    BilinearFamily::from_fn(w.clone(), d, |a, b, i, j| {
        let c = &h[a] * &h[b] / &h[w.mul(a, b)];
        f.basis_product(a, b, i, j).iter().map(|v| v * &c).collect()
    })
}

fn untwisted(kind: AlgebraKind, products: Vec<BilinearFamily>) -> AlgebraInstance {
    let w = products[0].omega().clone();
    AlgebraInstance::untwisted(kind, w, products).expect("corpus instance is well formed")
}

/// Dual numbers `k[ε]/ε²`: `e1` unit, `e2² = 0`.
pub fn dual_numbers(omega: &Arc<SemigroupTable>) -> BilinearFamily {
    constant_product(omega, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

/// Upper-triangular 2×2 matrices on `E11, E12, E22`.
pub fn upper_triangular(omega: &Arc<SemigroupTable>) -> BilinearFamily {
    constant_product(omega, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)])
}

/// `[e1, e2] = e2`.
pub fn affine_lie(omega: &Arc<SemigroupTable>) -> BilinearFamily {
    constant_product(omega, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

/// `sl2` on `h, e, f`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2(omega: &Arc<SemigroupTable>) -> BilinearFamily {
    constant_product(
        omega,
        3,
        &[(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)],
    )
}

/// Heisenberg: `[e1, e2] = e3`.
pub fn heisenberg(omega: &Arc<SemigroupTable>) -> BilinearFamily {
    constant_product(omega, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// One named corpus instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub instance: AlgebraInstance,
}

fn entry(name: &str, instance: AlgebraInstance) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        instance,
    }
}

fn chi(omega: &Arc<SemigroupTable>, values: &[i64]) -> LinearFamily {
    LinearFamily::from_fn(omega.clone(), 2, |a| Matrix::scalar(2, &int(values[a])))
}

fn twisted(a: &AlgebraInstance, p: LinearFamily, q: LinearFamily) -> AlgebraInstance {
    crate::constructions::yau_twist(a, &p, &q, &Default::default())
        .expect("corpus twist is certified")
        .instance
}

/// The two-dimensional example on several semigroups. Each parameter set satisfies
/// the side conditions.
pub fn two_dim_examples() -> Vec<(String, TwoDimExampleParams)> {
    let mut out = Vec::new();
    let t = semigroups::trivial();
    out.push(("two-dim-ones".into(), TwoDimExampleParams::ones(t.clone())));
    out.push((
        "two-dim-c2".into(),
        TwoDimExampleParams {
            omega: t,
            c: vec![int(2)],
            rthree: vec![int(1)],
            lthree: vec![int(1)],
        },
    ));
    // c(α, β) = r(α) with a multiplicative r and l = 1
    for (name, w, r) in [
        ("two-dim-sign", semigroups::c2(), [1, -1]),
        ("two-dim-chain", semigroups::chain2(), [0, 1]),
        ("two-dim-left-zero", semigroups::left_zero2(), [1, 1]),
    ] {
        let n = w.order();
        let c = (0..n * n).map(|ab| int(r[ab / n])).collect();
        out.push((
            name.into(),
            TwoDimExampleParams {
                omega: w,
                c,
                rthree: r.iter().map(|&v| int(v)).collect(),
                lthree: vec![int(1); n],
            },
        ));
    }
    out
}

/// The shared corpus. Every instance passes its checker; instances stay
/// within `d ≤ 2, |Ω| ≤ 2` or `d = 3, |Ω| = 1` so searches fit the budget.
pub fn corpus() -> Vec<CorpusEntry> {
    use AlgebraKind::*;
    let t = semigroups::trivial();
    let c2 = semigroups::c2();
    let s2 = semigroups::chain2();
    let l2 = semigroups::left_zero2();
    let h = [int(1), int(2)];
    let mut out = Vec::new();

    for (w, tag) in [(&t, "T"), (&c2, "C2")] {
        for kind in AlgebraKind::ALL {
            out.push(entry(&format!("zero-{kind}-{tag}"), AlgebraInstance::zero(kind, w.clone(), 2)));
        }
    }

    // associative
    let dual_c2 = untwisted(OmegaAssociative, vec![dual_numbers(&c2)]);
    out.push(entry("dual-T", untwisted(OmegaAssociative, vec![dual_numbers(&t)])));
    out.push(entry("dual-C2", dual_c2.clone()));
    out.push(entry(
        "dual-coboundary-C2",
        untwisted(OmegaAssociative, vec![coboundary_scaled(&dual_numbers(&c2), &h)]),
    ));
    out.push(entry("dual-S2", untwisted(OmegaAssociative, vec![dual_numbers(&s2)])));
    out.push(entry("dual-L2", untwisted(OmegaAssociative, vec![dual_numbers(&l2)])));
    out.push(entry("upper-T", untwisted(OmegaAssociative, vec![upper_triangular(&t)])));
    for (name, params) in two_dim_examples() {
        for reading in QReading::BOTH {
            let inst = make_two_dim_example_reading(&params, reading).expect("valid parameters");
            out.push(entry(&format!("{name}-{}", reading.short()), inst));
        }
    }
    let flip = LinearFamily::constant(c2.clone(), Matrix::from_ints(&[&[1, 0], &[0, -1]]));
    out.push(entry(
        "dual-C2-twist-sign",
        twisted(&dual_c2, chi(&c2, &[1, -1]), LinearFamily::identity(c2.clone(), 2)),
    ));
    out.push(entry("dual-C2-twist-flip", twisted(&dual_c2, flip.clone(), flip.clone())));

    // dendriform: x ≺ y = xy on d = 1 and the dual-number split
    let d1 = |w: &Arc<SemigroupTable>| constant_product(w, 1, &[(0, 0, 0, 1)]);
    out.push(entry("dend-left-T", untwisted(Dendriform, vec![d1(&t), BilinearFamily::zero(t.clone(), 1)])));
    out.push(entry("dend-right-C2", untwisted(Dendriform, vec![BilinearFamily::zero(c2.clone(), 1), d1(&c2)])));
    out.push(entry(
        "dend-dual-C2",
        untwisted(Dendriform, vec![BilinearFamily::zero(c2.clone(), 2), dual_numbers(&c2)]),
    ));

    // pre-Lie: e1 ▶ e2 = e2 is not associative
    let tri = |w: &Arc<SemigroupTable>| constant_product(w, 2, &[(0, 1, 1, 1)]);
    let prelie_c2 = untwisted(PreLie, vec![tri(&c2)]);
    out.push(entry("prelie-T", untwisted(PreLie, vec![tri(&t)])));
    out.push(entry("prelie-C2", prelie_c2.clone()));
    out.push(entry("prelie-dual-C2", untwisted(PreLie, vec![dual_numbers(&c2)])));
    out.push(entry(
        "prelie-C2-twist-sign",
        twisted(&prelie_c2, chi(&c2, &[1, -1]), chi(&c2, &[1, -1])),
    ));

    // Lie
    let lie_c2 = untwisted(Lie, vec![affine_lie(&c2)]);
    out.push(entry("affine-T", untwisted(Lie, vec![affine_lie(&t)])));
    out.push(entry("affine-C2", lie_c2.clone()));
    out.push(entry("affine-coboundary-C2", untwisted(Lie, vec![coboundary_scaled(&affine_lie(&c2), &h)])));
    out.push(entry("sl2-T", untwisted(Lie, vec![sl2(&t)])));
    out.push(entry("heisenberg-T", untwisted(Lie, vec![heisenberg(&t)])));
    out.push(entry("affine-C2-twist-flip", twisted(&lie_c2, flip.clone(), LinearFamily::identity(c2.clone(), 2))));

    // PostLie: pure bracket and pure pre-Lie
    out.push(entry(
        "postlie-bracket-C2",
        untwisted(PostLie, vec![affine_lie(&c2), BilinearFamily::zero(c2.clone(), 2)]),
    ));
    out.push(entry(
        "postlie-tri-C2",
        untwisted(PostLie, vec![BilinearFamily::zero(c2.clone(), 2), tri(&c2)]),
    ));

    // zinbiel: e1 ⊛ e1 = e2
    let star = |w: &Arc<SemigroupTable>| constant_product(w, 2, &[(0, 0, 1, 1)]);
    let zin_c2 = untwisted(Zinbiel, vec![star(&c2)]);
    out.push(entry("zinbiel-T", untwisted(Zinbiel, vec![star(&t)])));
    out.push(entry("zinbiel-C2", zin_c2.clone()));
    out.push(entry("zinbiel-coboundary-C2", untwisted(Zinbiel, vec![coboundary_scaled(&star(&c2), &h)])));
    out.push(entry("zinbiel-C2-twist-sign", twisted(&zin_c2, chi(&c2, &[1, -1]), LinearFamily::identity(c2.clone(), 2))));

    // pre-Poisson: dual numbers as ▶ with e1 ⊛ e1 = e2
    let pp_c2 = untwisted(PrePoisson, vec![dual_numbers(&c2), star(&c2)]);
    out.push(entry("prepoisson-T", untwisted(PrePoisson, vec![dual_numbers(&t), star(&t)])));
    out.push(entry("prepoisson-C2", pp_c2.clone()));
    out.push(entry("prepoisson-C2-twist-sign", twisted(&pp_c2, chi(&c2, &[1, -1]), chi(&c2, &[1, -1]))));

    out
}

/// Renders a parameter tuple compactly, e.g. `c=[1,2] r=[1] l=[1]`.
pub fn describe_params(p: &TwoDimExampleParams) -> String {
    let list = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(",");
    format!("c=[{}] r=[{}] l=[{}]", list(&p.c), list(&p.rthree), list(&p.lthree))
}
