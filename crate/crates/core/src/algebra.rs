//! Ω-indexed bilinear families, structure-map families and tagged instances.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{zero_vector, LinalgError, Matrix, Rational, Vector};
use crate::semigroup::{Element, SemigroupTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("structure maps p and q do not commute at `{element}`")]
    NonCommutingStructureMaps { element: String },
    #[error("{kind} requires identity structure maps (violated at `{element}`)")]
    NonIdentityStructureMaps { kind: AlgebraKind, element: String },
}

fn shape(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::ShapeMismatch(msg.into())
}

/// Structure constants of an Ω-indexed family of bilinear maps.
///
/// `tensor[α][β][i][j][k]` is the coefficient of `e_k` in `e_i ∘_{α,β} e_j`,
/// stored densely in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearFamily {
    omega: Arc<SemigroupTable>,
    dim: usize,
    data: Vec<Rational>,
}

impl BilinearFamily {
    pub fn zero(omega: Arc<SemigroupTable>, dim: usize) -> Self {
        let n = omega.order();
        Self {
            data: vec![Rational::zero(); n * n * dim * dim * dim],
            omega,
            dim,
        }
    }

    /// Builds a family from `f(α, β, i, j)`, the vector `e_i ∘_{α,β} e_j`.
    pub fn from_fn(
        omega: Arc<SemigroupTable>,
        dim: usize,
        mut f: impl FnMut(Element, Element, usize, usize) -> Vector,
    ) -> Self {
        let mut out = Self::zero(omega, dim);
        let n = out.omega.order();
        for a in 0..n {
            for b in 0..n {
                for i in 0..dim {
                    for j in 0..dim {
                        let v = f(a, b, i, j);
                        assert_eq!(v.len(), dim, "product vector has wrong length");
                        let start = out.offset(a, b, i, j);
                        out.data[start..start + dim].clone_from_slice(&v);
                    }
                }
            }
        }
        out
    }

    /// The same tensor on every `(α, β)`.
    pub fn constant(omega: Arc<SemigroupTable>, dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        Self::from_fn(omega, dim, |_, _, i, j| f(i, j))
    }

    fn offset(&self, a: Element, b: Element, i: usize, j: usize) -> usize {
        let n = self.omega.order();
        let d = self.dim;
        (((a * n + b) * d + i) * d + j) * d
    }

    pub fn omega(&self) -> &Arc<SemigroupTable> {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: Element, b: Element, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[self.offset(a, b, i, j) + k]
    }

    pub fn set(&mut self, a: Element, b: Element, i: usize, j: usize, k: usize, v: Rational) {
        let at = self.offset(a, b, i, j) + k;
        self.data[at] = v;
    }

    /// `e_i ∘_{α,β} e_j` as a slice of length `d`.
    pub fn basis_product(&self, a: Element, b: Element, i: usize, j: usize) -> &[Rational] {
        let start = self.offset(a, b, i, j);
        &self.data[start..start + self.dim]
    }

    /// Raw entries in `[α][β][i][j][k]` order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `x ∘_{α,β} y`. Panics on length mismatch; see [`apply_product`].
    pub fn apply(&self, a: Element, b: Element, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(self.basis_product(a, b, i, j)) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert!(self.same_shape(other), "bilinear families differ in shape");
        Self {
            omega: self.omega.clone(),
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            omega: self.omega.clone(),
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.dim == other.dim && *self.omega == *other.omega
    }
}

/// `x ∘_{α,β} y`, with lengths and indices validated.
pub fn apply_product(
    f: &BilinearFamily,
    alpha: Element,
    beta: Element,
    x: &[Rational],
    y: &[Rational],
) -> Result<Vector, AlgebraError> {
    let d = f.dim();
    if x.len() != d || y.len() != d {
        return Err(shape(format!(
            "operands of length {} and {} for a product of dimension {d}",
            x.len(),
            y.len()
        )));
    }
    let n = f.omega().order();
    if alpha >= n || beta >= n {
        return Err(shape(format!("semigroup index out of range for order {n}")));
    }
    Ok(f.apply(alpha, beta, x, y))
}

/// One `d × d` matrix per element of Ω.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFamily {
    omega: Arc<SemigroupTable>,
    dim: usize,
    maps: Vec<Matrix>,
}

impl LinearFamily {
    pub fn new(omega: Arc<SemigroupTable>, maps: Vec<Matrix>) -> Result<Self, AlgebraError> {
        if maps.len() != omega.order() {
            return Err(shape(format!(
                "{} matrices for a semigroup of order {}",
                maps.len(),
                omega.order()
            )));
        }
        let dim = maps[0].rows();
        for m in &maps {
            if m.rows() != dim || m.cols() != dim {
                return Err(shape(format!("expected {dim}x{dim} matrices, found {}x{}", m.rows(), m.cols())));
            }
        }
        Ok(Self { omega, dim, maps })
    }

    pub fn from_fn(omega: Arc<SemigroupTable>, dim: usize, f: impl Fn(Element) -> Matrix) -> Self {
        let maps: Vec<Matrix> = omega.iter().map(f).collect();
        assert!(maps.iter().all(|m| m.rows() == dim), "generated matrix has wrong size");
        Self::new(omega, maps).expect("generated family is well formed")
    }

    pub fn constant(omega: Arc<SemigroupTable>, m: Matrix) -> Self {
        let dim = m.rows();
        Self::from_fn(omega, dim, |_| m.clone())
    }

    pub fn identity(omega: Arc<SemigroupTable>, dim: usize) -> Self {
        Self::from_fn(omega, dim, |_| Matrix::identity(dim))
    }

    pub fn zero(omega: Arc<SemigroupTable>, dim: usize) -> Self {
        Self::from_fn(omega, dim, |_| Matrix::zero(dim, dim))
    }

    pub fn omega(&self) -> &Arc<SemigroupTable> {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: Element) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn apply(&self, a: Element, v: &[Rational]) -> Vector {
        self.maps[a].apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.maps.iter().all(Matrix::is_identity)
    }

    /// First element whose matrix is not the identity.
    pub fn first_non_identity(&self) -> Option<Element> {
        self.maps.iter().position(|m| !m.is_identity())
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.dim == other.dim && *self.omega == *other.omega
    }

    /// Elementwise product `self_α · other_α`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert!(self.same_shape(other), "linear families differ in shape");
        Self {
            omega: self.omega.clone(),
            dim: self.dim,
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            omega: self.omega.clone(),
            dim: self.dim,
            maps: self.maps.iter().map(|m| m.scale(s)).collect(),
        }
    }

    /// First element at which the two families fail to commute.
    pub fn first_noncommuting(&self, other: &Self) -> Option<Element> {
        self.maps
            .iter()
            .zip(&other.maps)
            .position(|(a, b)| !(a * b == b * a))
    }

    /// Elementwise inverse; on failure returns the first singular element.
    pub fn inverse(&self) -> Result<Self, Element> {
        let mut maps = Vec::with_capacity(self.maps.len());
        for (a, m) in self.maps.iter().enumerate() {
            match m.inverse() {
                Ok(inv) => maps.push(inv),
                Err(LinalgError::Singular) => return Err(a),
                Err(e) => panic!("square matrix reported {e}"),
            }
        }
        Ok(Self {
            omega: self.omega.clone(),
            dim: self.dim,
            maps,
        })
    }
}

/// The eight structure classes. Ω-versions are BiHom-versions with identity
/// structure maps; only the associative class has a separate tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    OmegaAssociative,
    BiHomOmegaAssociative,
    Dendriform,
    PreLie,
    Lie,
    PostLie,
    Zinbiel,
    PrePoisson,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 8] = [
        AlgebraKind::OmegaAssociative,
        AlgebraKind::BiHomOmegaAssociative,
        AlgebraKind::Dendriform,
        AlgebraKind::PreLie,
        AlgebraKind::Lie,
        AlgebraKind::PostLie,
        AlgebraKind::Zinbiel,
        AlgebraKind::PrePoisson,
    ];

    /// Names of the product components, in storage order.
    pub fn components(self) -> &'static [&'static str] {
        match self {
            AlgebraKind::OmegaAssociative | AlgebraKind::BiHomOmegaAssociative => &["mul"],
            AlgebraKind::Dendriform => &["prec", "succ"],
            AlgebraKind::PreLie => &["tri"],
            AlgebraKind::Lie => &["bracket"],
            AlgebraKind::PostLie => &["bracket", "tri"],
            AlgebraKind::Zinbiel => &["star"],
            AlgebraKind::PrePoisson => &["tri", "star"],
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            AlgebraKind::OmegaAssociative => "omega_associative",
            AlgebraKind::BiHomOmegaAssociative => "associative",
            AlgebraKind::Dendriform => "dendriform",
            AlgebraKind::PreLie => "prelie",
            AlgebraKind::Lie => "lie",
            AlgebraKind::PostLie => "postlie",
            AlgebraKind::Zinbiel => "zinbiel",
            AlgebraKind::PrePoisson => "prepoisson",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == s)
    }

    pub fn is_associative(self) -> bool {
        matches!(self, AlgebraKind::OmegaAssociative | AlgebraKind::BiHomOmegaAssociative)
    }

    /// Classes whose definition assumes a commutative Ω.
    pub fn requires_commutative_omega(self) -> bool {
        !matches!(
            self,
            AlgebraKind::OmegaAssociative | AlgebraKind::BiHomOmegaAssociative | AlgebraKind::Dendriform
        )
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A tagged instance: products plus structure maps `p`, `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraInstance {
    kind: AlgebraKind,
    omega: Arc<SemigroupTable>,
    dim: usize,
    products: Vec<BilinearFamily>,
    p: LinearFamily,
    q: LinearFamily,
}

/// Validates shapes and the commuting-pair invariant. Does not check axioms.
pub fn new_instance(
    kind: AlgebraKind,
    omega: Arc<SemigroupTable>,
    products: Vec<BilinearFamily>,
    p: LinearFamily,
    q: LinearFamily,
) -> Result<AlgebraInstance, AlgebraError> {
    let want = kind.components().len();
    if products.len() != want {
        return Err(shape(format!("{kind} takes {want} product(s), found {}", products.len())));
    }
    let dim = p.dim();
    if dim == 0 {
        return Err(shape("dimension must be positive"));
    }
    for (name, fam) in kind.components().iter().zip(&products) {
        if fam.dim() != dim || *fam.omega() != omega {
            return Err(shape(format!("product `{name}` does not match the instance shape")));
        }
    }
    for (name, fam) in [("p", &p), ("q", &q)] {
        if fam.dim() != dim || *fam.omega() != omega {
            return Err(shape(format!("map `{name}` does not match the instance shape")));
        }
    }
    if let Some(a) = p.first_noncommuting(&q) {
        return Err(AlgebraError::NonCommutingStructureMaps {
            element: omega.label(a).to_string(),
        });
    }
    if kind == AlgebraKind::OmegaAssociative {
        if let Some(a) = p.first_non_identity().or_else(|| q.first_non_identity()) {
            return Err(AlgebraError::NonIdentityStructureMaps {
                kind,
                element: omega.label(a).to_string(),
            });
        }
    }
    Ok(AlgebraInstance {
        kind,
        omega,
        dim,
        products,
        p,
        q,
    })
}

impl AlgebraInstance {
    /// Instance with identity structure maps.
    pub fn untwisted(
        kind: AlgebraKind,
        omega: Arc<SemigroupTable>,
        products: Vec<BilinearFamily>,
    ) -> Result<Self, AlgebraError> {
        let dim = products.first().map_or(0, BilinearFamily::dim);
        let id = LinearFamily::identity(omega.clone(), dim.max(1));
        new_instance(kind, omega, products, id.clone(), id)
    }

    /// Every product zero, identity maps.
    pub fn zero(kind: AlgebraKind, omega: Arc<SemigroupTable>, dim: usize) -> Self {
        let products = kind
            .components()
            .iter()
            .map(|_| BilinearFamily::zero(omega.clone(), dim))
            .collect();
        Self::untwisted(kind, omega, products).expect("zero instance is well formed")
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn omega(&self) -> &Arc<SemigroupTable> {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn products(&self) -> &[BilinearFamily] {
        &self.products
    }

    pub fn product(&self, component: usize) -> &BilinearFamily {
        &self.products[component]
    }

    pub fn product_named(&self, name: &str) -> Option<&BilinearFamily> {
        let idx = self.kind.components().iter().position(|c| *c == name)?;
        Some(&self.products[idx])
    }

    pub fn p(&self) -> &LinearFamily {
        &self.p
    }

    pub fn q(&self) -> &LinearFamily {
        &self.q
    }

    pub fn has_identity_maps(&self) -> bool {
        self.p.is_identity() && self.q.is_identity()
    }

    /// Same data under another tag, re-validated.
    pub fn retag(&self, kind: AlgebraKind) -> Result<Self, AlgebraError> {
        new_instance(kind, self.omega.clone(), self.products.clone(), self.p.clone(), self.q.clone())
    }

    /// Same tag and maps with the given products.
    pub fn with_products(&self, products: Vec<BilinearFamily>) -> Result<Self, AlgebraError> {
        new_instance(self.kind, self.omega.clone(), products, self.p.clone(), self.q.clone())
    }

    pub fn into_parts(self) -> (AlgebraKind, Arc<SemigroupTable>, Vec<BilinearFamily>, LinearFamily, LinearFamily) {
        (self.kind, self.omega, self.products, self.p, self.q)
    }
}

/// Operators `R_α` together with the weight λ. The Rota-Baxter identity is
/// a checkable property, not an invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotaBaxterFamily {
    pub maps: LinearFamily,
    pub weight: Rational,
}

impl RotaBaxterFamily {
    pub fn new(maps: LinearFamily, weight: Rational) -> Self {
        Self { maps, weight }
    }

    pub fn get(&self, a: Element) -> &Matrix {
        self.maps.get(a)
    }
}
