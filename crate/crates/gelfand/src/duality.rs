//! The two functors of finite Gelfand duality and their comparison maps.
//!
//! `C` sends a finite discrete space `X` to the function algebra `F^X` and
//! a map of spaces to its pullback; `M` sends an algebra to its character
//! space and an algebra morphism to composition with characters. The
//! Gelfand transform `G_X: X -> Max(C(X))` matches points with evaluation
//! characters; the Gelfand map `I_A: A -> C(Max(A))` evaluates elements on
//! characters. `characterize` decides whether an algebra is isomorphic to
//! a full function algebra and either exhibits the isomorphism or lists
//! the failing conditions.

use crate::algebra::{AlgElement, Algebra};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement};
use crate::linalg::{in_span, Matrix};
use crate::spectrum::{check_gelfand, enumerate_characters, value_matrix, Character};

/// A finite discrete space: a list of distinct point labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
}

impl FiniteSpace {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::SchemaError {
                    location: format!("points[{i}]"),
                    message: format!("duplicate point label {l:?}"),
                });
            }
        }
        Ok(FiniteSpace { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// A function between finite spaces, stored by point indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap {
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    /// `images[x]` is the target index of source point `x`.
    pub images: Vec<usize>,
}

impl SpaceMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::SchemaError {
                location: "map.images".into(),
                message: format!(
                    "expected one image per source point ({}), got {}",
                    source.len(),
                    images.len()
                ),
            });
        }
        for (x, &y) in images.iter().enumerate() {
            if y >= target.len() {
                return Err(Error::SchemaError {
                    location: format!("map.images[{x}]"),
                    message: format!("image index {y} out of range 0..{}", target.len()),
                });
            }
        }
        Ok(SpaceMap { source, target, images })
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        SpaceMap {
            source: space.clone(),
            target: space.clone(),
            images: (0..space.len()).collect(),
        }
    }

    /// Composite `g . self` (first `self`, then `g`).
    pub fn then(&self, g: &SpaceMap) -> SpaceMap {
        assert_eq!(self.target, g.source, "composable maps");
        SpaceMap {
            source: self.source.clone(),
            target: g.target.clone(),
            images: self.images.iter().map(|&y| g.images[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        for &y in &self.images {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }
}

/// A unital algebra morphism, stored as the matrix taking source
/// coordinates to target coordinates. Construction verifies unitality and
/// multiplicativity on all basis pairs, exactly.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism {
    source: Algebra,
    target: Algebra,
    matrix: Matrix,
}

impl AlgebraMorphism {
    pub fn new(source: Algebra, target: Algebra, matrix: Matrix) -> Result<Self> {
        assert_eq!(matrix.rows(), target.dim(), "matrix rows = target dimension");
        assert_eq!(matrix.cols(), source.dim(), "matrix cols = source dimension");
        let phi = AlgebraMorphism { source, target, matrix };
        phi.validate()?;
        Ok(phi)
    }

    fn validate(&self) -> Result<()> {
        let unit_image = self.apply(&self.source.one());
        if !self.target.elements_eq(&unit_image, &self.target.one())? {
            return Err(Error::NotMorphism("the unit is not preserved".into()));
        }
        let n = self.source.dim();
        let images: Vec<AlgElement> = (0..n).map(|j| self.matrix.col_vec(j)).collect();
        for i in 0..n {
            for j in 0..=i {
                let lhs = self.apply(&self.source.table_row(i, j).to_vec());
                let rhs = self.target.mul(&images[i], &images[j]);
                if !self.target.elements_eq(&lhs, &rhs)? {
                    return Err(Error::NotMorphism(format!(
                        "multiplicativity fails at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[FieldElement]) -> AlgElement {
        self.matrix.mul_vec(x)
    }

    pub fn identity(a: &Algebra) -> Result<Self> {
        AlgebraMorphism::new(a.clone(), a.clone(), Matrix::identity(a.field(), a.dim()))
    }

    /// Composite `self . inner` (first `inner`, then `self`).
    pub fn compose(&self, inner: &AlgebraMorphism) -> Result<Self> {
        assert_eq!(inner.target.dim(), self.source.dim(), "composable morphisms");
        AlgebraMorphism::new(
            inner.source.clone(),
            self.target.clone(),
            self.matrix.mul(&inner.matrix),
        )
    }

    pub fn is_bijective(&self) -> Result<bool> {
        if self.matrix.rows() != self.matrix.cols() {
            return Ok(false);
        }
        Ok(self.matrix.rank()? == self.matrix.rows())
    }

    /// Whether this morphism equals the identity matrix (same dimensions,
    /// entries match exactly).
    pub fn is_identity(&self) -> Result<bool> {
        if self.matrix.rows() != self.matrix.cols() {
            return Ok(false);
        }
        let id = Matrix::identity(self.target.field(), self.matrix.rows());
        for r in 0..self.matrix.rows() {
            for c in 0..self.matrix.cols() {
                if !self.matrix.get(r, c).try_eq(id.get(r, c))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The function algebra `C_F(X) = F^X` on a finite discrete space.
pub fn function_algebra(field: &FieldDescriptor, space: &FiniteSpace) -> Result<Algebra> {
    Algebra::pointwise(field, space.labels())
}

/// The pullback `C(f): C(Y) -> C(X)` of a space map `f: X -> Y`:
/// indicator of `y` pulls back to the indicator of its preimage.
pub fn pullback(field: &FieldDescriptor, f: &SpaceMap) -> Result<AlgebraMorphism> {
    let cy = function_algebra(field, &f.target)?;
    let cx = function_algebra(field, &f.source)?;
    let mut m = Matrix::zeros(field, f.source.len(), f.target.len());
    for (x, &y) in f.images.iter().enumerate() {
        m.set(x, y, field.one());
    }
    AlgebraMorphism::new(cy, cx, m)
}

/// The maximal spectrum as a labeled finite space (labels `M0, M1, ...` in
/// canonical character order) together with the characters themselves.
pub fn max_spectrum(a: &Algebra, budget: u64) -> Result<(FiniteSpace, Vec<Character>)> {
    let chars = enumerate_characters(a, budget)?;
    let labels = (0..chars.len()).map(|i| format!("M{i}")).collect();
    Ok((FiniteSpace::new(labels)?, chars))
}

/// The spectrum functor on morphisms: `Max(phi): Max(B) -> Max(A)` for
/// `phi: A -> B`, by composing characters with `phi`. Both algebras must
/// be Gelfand for the duality to apply.
pub fn spectrum_map(phi: &AlgebraMorphism, budget: u64) -> Result<SpaceMap> {
    for (role, alg) in [("source", phi.source()), ("target", phi.target())] {
        let check = check_gelfand(alg, budget)?;
        if !check.holds {
            return Err(Error::NotGelfandUnsplit(format!(
                "spectrum functor needs Gelfand algebras; the {role} has {} characters \
                 but semisimple dimension {}",
                check.characters, check.semisimple_dim
            )));
        }
    }
    let (space_a, chars_a) = max_spectrum(phi.source(), budget)?;
    let (space_b, chars_b) = max_spectrum(phi.target(), budget)?;
    let mut images = Vec::with_capacity(chars_b.len());
    for chi in &chars_b {
        // chi . phi has values chi(phi(b_j)) on the source basis.
        let composed: Vec<FieldElement> =
            (0..phi.source().dim()).map(|j| chi.evaluate(&phi.matrix().col_vec(j))).collect();
        let mut found = None;
        'scan: for (idx, psi) in chars_a.iter().enumerate() {
            for (u, v) in composed.iter().zip(psi.values()) {
                if !u.try_eq(v)? {
                    continue 'scan;
                }
            }
            found = Some(idx);
            break;
        }
        let idx = found.ok_or_else(|| {
            Error::Internal("composed character missing from enumeration".into())
        })?;
        images.push(idx);
    }
    SpaceMap::new(space_b, space_a, images)
}

/// The Gelfand transform `G_X: X -> Max(C(X))`: each point goes to its
/// evaluation character. Returns the map and whether it is bijective
/// (always, for finite discrete `X` and these fields).
#[derive(Debug, Clone)]
pub struct GelfandTransform {
    pub map: SpaceMap,
    pub bijective: bool,
}

pub fn gelfand_transform(
    field: &FieldDescriptor,
    space: &FiniteSpace,
    budget: u64,
) -> Result<GelfandTransform> {
    let cx = function_algebra(field, space)?;
    let (max_space, chars) = max_spectrum(&cx, budget)?;
    let mut images = Vec::with_capacity(space.len());
    for x in 0..space.len() {
        // Evaluation at x has values delta_x on the indicator basis.
        let mut found = None;
        'scan: for (idx, chi) in chars.iter().enumerate() {
            for (j, v) in chi.values().iter().enumerate() {
                let expected = if j == x { field.one() } else { field.zero() };
                if !v.try_eq(&expected)? {
                    continue 'scan;
                }
            }
            found = Some(idx);
            break;
        }
        images.push(found.ok_or_else(|| {
            Error::Internal("evaluation character missing from enumeration".into())
        })?);
    }
    let map = SpaceMap::new(space.clone(), max_space, images)?;
    let bijective = map.is_bijective();
    Ok(GelfandTransform { map, bijective })
}

/// The Gelfand map `I_A: A -> C(Max(A))` with its kernel analysis.
#[derive(Debug, Clone)]
pub struct GelfandMapData {
    pub morphism: AlgebraMorphism,
    pub kernel: Vec<AlgElement>,
    pub kernel_equals_radical: bool,
    pub injective: bool,
    pub surjective: bool,
}

pub fn gelfand_map(a: &Algebra, budget: u64) -> Result<GelfandMapData> {
    let (space, chars) = max_spectrum(a, budget)?;
    if chars.is_empty() {
        return Err(Error::NotGelfandUnsplit(
            "no characters: the function algebra on an empty spectrum is the zero ring"
                .into(),
        ));
    }
    let target = function_algebra(a.field(), &space)?;
    let matrix = value_matrix(a.field(), &chars);
    let morphism = AlgebraMorphism::new(a.clone(), target, matrix)?;

    let kernel = morphism.matrix().kernel_basis()?;
    let radical = a.jacobson_radical()?;
    let mut kernel_equals_radical = kernel.len() == radical.len();
    if kernel_equals_radical {
        for v in &kernel {
            if !in_span(a.field(), &radical, v)? {
                kernel_equals_radical = false;
                break;
            }
        }
    }
    let injective = kernel.is_empty();
    let surjective = morphism.matrix().rank()? == chars.len();
    Ok(GelfandMapData { morphism, kernel, kernel_equals_radical, injective, surjective })
}

/// Both triangle identities of the adjunction, checked exactly.
#[derive(Debug, Clone)]
pub struct TriangleChecks {
    /// `C(G_X) . I_{C(X)} = id` on the function algebra.
    pub function_side: bool,
    /// `Max(I_A) . G_{Max(A)} = id` on the character space.
    pub spectrum_side: bool,
}

pub fn triangle_on_space(
    field: &FieldDescriptor,
    space: &FiniteSpace,
    budget: u64,
) -> Result<bool> {
    let cx = function_algebra(field, space)?;
    let i_cx = gelfand_map(&cx, budget)?;
    let g_x = gelfand_transform(field, space, budget)?;
    let c_of_g = pullback(field, &g_x.map)?;
    c_of_g.compose(&i_cx.morphism)?.is_identity()
}

pub fn triangle_on_algebra(a: &Algebra, budget: u64) -> Result<bool> {
    let i_a = gelfand_map(a, budget)?;
    let (max_space, _) = max_spectrum(a, budget)?;
    let g = gelfand_transform(a.field(), &max_space, budget)?;
    let m_of_i = spectrum_map(&i_a.morphism, budget)?;
    Ok(g.map.then(&m_of_i).is_identity())
}

pub fn triangle_checks(a: &Algebra, budget: u64) -> Result<TriangleChecks> {
    let (max_space, _) = max_spectrum(a, budget)?;
    Ok(TriangleChecks {
        function_side: triangle_on_space(a.field(), &max_space, budget)?,
        spectrum_side: triangle_on_algebra(a, budget)?,
    })
}

/// The final verdict of the characterization: either an explicit
/// isomorphism onto the function algebra of the character space, or the
/// list of failed conditions.
#[derive(Debug)]
pub enum Verdict {
    IsContinuousFunctionAlgebra {
        space: FiniteSpace,
        iso: AlgebraMorphism,
        justification: String,
    },
    Fails {
        reasons: Vec<String>,
    },
}

pub fn characterize(a: &Algebra, budget: u64) -> Result<Verdict> {
    let check = check_gelfand(a, budget)?;
    let radical = a.jacobson_radical()?;
    let spans = a.idempotents_span_algebra(budget)?;

    let mut reasons = Vec::new();
    if !check.holds {
        reasons.push(format!(
            "not Gelfand: {} characters but dim(A/Jrad) = {}",
            check.characters, check.semisimple_dim
        ));
    }
    if !radical.is_empty() {
        reasons.push(format!(
            "not semisimple: Jacobson radical has rank {}",
            radical.len()
        ));
    }
    if !spans {
        reasons.push("idempotents do not span the algebra".to_string());
    }
    if !reasons.is_empty() {
        return Ok(Verdict::Fails { reasons });
    }

    let data = gelfand_map(a, budget)?;
    if !(data.injective && data.surjective && data.morphism.is_bijective()?) {
        return Err(Error::Internal(
            "conditions hold but the Gelfand map is not bijective".into(),
        ));
    }
    let (space, _) = max_spectrum(a, budget)?;
    let completeness_note = match a.field() {
        FieldDescriptor::Rational => {
            "Q is not complete, so completeness of the base field is not assumed: \
             surjectivity is verified directly by finite linear algebra"
        }
        FieldDescriptor::Prime { .. } => {
            "the base field is discrete, hence complete, and at finite dimension \
             the dense image is automatically closed"
        }
        FieldDescriptor::Padic { .. } => {
            "the base field is complete, and at finite dimension the dense image \
             is automatically closed"
        }
    };
    let justification = format!(
        "Gelfand ({} characters = dim(A/Jrad) = {}), semisimple (radical rank 0), \
         idempotents span; the Gelfand map is a verified unital multiplicative \
         bijection onto the function algebra of the {}-point character space; {}",
        check.characters,
        check.semisimple_dim,
        space.len(),
        completeness_note
    );
    Ok(Verdict::IsContinuousFunctionAlgebra { space, iso: data.morphism, justification })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::spectrum::DEFAULT_SEARCH_BUDGET as BUDGET;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rational()
    }

    fn space(labels: &[&str]) -> FiniteSpace {
        FiniteSpace::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let err = FiniteSpace::new(vec!["a".into(), "a".into()]).unwrap_err();
        assert!(matches!(err, Error::SchemaError { .. }));
    }

    #[test]
    fn pullback_of_a_constant_map_is_the_diagonal() {
        let f = q();
        let x = space(&["p", "q"]);
        let y = space(&["z"]);
        let map = SpaceMap::new(x, y, vec![0, 0]).unwrap();
        let phi = pullback(&f, &map).unwrap();
        // C(Y) = F, C(X) = F^2: the pullback sends c to (c, c).
        let image = phi.apply(&[f.from_integer(5)]);
        assert!(image[0].try_eq(&f.from_integer(5)).unwrap());
        assert!(image[1].try_eq(&f.from_integer(5)).unwrap());
    }

    #[test]
    fn pullback_is_contravariantly_functorial() {
        let f = q();
        let x = space(&["a", "b"]);
        let y = space(&["c", "d", "e"]);
        let z = space(&["f", "g"]);
        let fmap = SpaceMap::new(x.clone(), y.clone(), vec![2, 0]).unwrap();
        let gmap = SpaceMap::new(y.clone(), z.clone(), vec![1, 1, 0]).unwrap();
        let composite = fmap.then(&gmap);
        let lhs = pullback(&f, &composite).unwrap();
        let rhs = pullback(&f, &fmap).unwrap().compose(&pullback(&f, &gmap).unwrap()).unwrap();
        for r in 0..lhs.matrix().rows() {
            for c in 0..lhs.matrix().cols() {
                assert!(lhs.matrix().get(r, c).try_eq(rhs.matrix().get(r, c)).unwrap());
            }
        }
    }

    #[test]
    fn gelfand_transform_is_a_bijection_on_three_points() {
        let f = q();
        let x = space(&["a", "b", "c"]);
        let g = gelfand_transform(&f, &x, BUDGET).unwrap();
        assert!(g.bijective);
        assert_eq!(g.map.source.len(), 3);
        assert_eq!(g.map.target.len(), 3);
    }

    #[test]
    fn gelfand_map_of_split_quadratic_is_bijective_with_trivial_kernel() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-1, 0, 1])).unwrap();
        let data = gelfand_map(&a, BUDGET).unwrap();
        assert!(data.injective);
        assert!(data.surjective);
        assert!(data.kernel_equals_radical);
        assert!(data.kernel.is_empty());
    }

    #[test]
    fn gelfand_map_kernel_of_dual_numbers_is_the_radical() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[0, 0, 1])).unwrap();
        let data = gelfand_map(&a, BUDGET).unwrap();
        assert!(!data.injective);
        assert_eq!(data.kernel.len(), 1);
        assert!(data.kernel_equals_radical);
        assert!(data.surjective);
    }

    #[test]
    fn triangle_identities_hold_for_function_algebras() {
        let f = q();
        let x = space(&["a", "b", "c"]);
        assert!(triangle_on_space(&f, &x, BUDGET).unwrap());
        let a = function_algebra(&f, &x).unwrap();
        let checks = triangle_checks(&a, BUDGET).unwrap();
        assert!(checks.function_side);
        assert!(checks.spectrum_side);
    }

    #[test]
    fn triangle_identities_hold_for_a_split_polynomial_quotient() {
        let f = q();
        // t(t-1)(t-2): three rational characters.
        let a =
            Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[0, 2, -3, 1])).unwrap();
        let checks = triangle_checks(&a, BUDGET).unwrap();
        assert!(checks.function_side);
        assert!(checks.spectrum_side);
    }

    #[test]
    fn spectrum_map_of_an_inclusion_is_a_surjection_of_spectra() {
        let f = q();
        // Diagonal embedding F -> F^2 (pullback of the constant map).
        let x = space(&["p", "q"]);
        let y = space(&["z"]);
        let map = SpaceMap::new(x, y, vec![0, 0]).unwrap();
        let phi = pullback(&f, &map).unwrap();
        let m = spectrum_map(&phi, BUDGET).unwrap();
        // Max(F^2) has two points, both mapping to the single point of Max(F).
        assert_eq!(m.source.len(), 2);
        assert_eq!(m.target.len(), 1);
        assert_eq!(m.images, vec![0, 0]);
    }

    #[test]
    fn characterize_accepts_the_pointwise_algebra() {
        let f = q();
        let x = space(&["a", "b"]);
        let a = function_algebra(&f, &x).unwrap();
        match characterize(&a, BUDGET).unwrap() {
            Verdict::IsContinuousFunctionAlgebra { space, iso, justification } => {
                assert_eq!(space.len(), 2);
                assert!(iso.is_bijective().unwrap());
                assert!(justification.contains("Q is not complete"));
            }
            Verdict::Fails { reasons } => panic!("unexpected failure: {reasons:?}"),
        }
    }

    #[test]
    fn characterize_rejects_dual_numbers_for_semisimplicity() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[0, 0, 1])).unwrap();
        match characterize(&a, BUDGET).unwrap() {
            Verdict::Fails { reasons } => {
                assert!(reasons.iter().any(|r| r.contains("not semisimple")));
                assert!(reasons.iter().any(|r| r.contains("idempotents do not span")));
            }
            _ => panic!("dual numbers are not a function algebra"),
        }
    }

    #[test]
    fn characterize_rejects_unsplit_extensions_as_not_gelfand() {
        let f = FieldDescriptor::prime(5).unwrap();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-2, 0, 1])).unwrap();
        match characterize(&a, BUDGET).unwrap() {
            Verdict::Fails { reasons } => {
                assert!(reasons.iter().any(|r| r.contains("not Gelfand")));
            }
            _ => panic!("F_25 is not a function algebra over F_5"),
        }
    }

    #[test]
    fn morphism_validation_rejects_non_multiplicative_matrices() {
        let f = q();
        let x = space(&["a", "b"]);
        let cx = function_algebra(&f, &x).unwrap();
        // Swap-and-sum matrix: linear, unital on (1,1), but not
        // multiplicative.
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_integer(1), f.from_integer(0)],
                vec![f.from_integer(2), f.from_integer(-1)],
            ],
        );
        assert!(AlgebraMorphism::new(cx.clone(), cx, m).is_err());
    }

    fn matrices_eq(a: &Matrix, b: &Matrix) -> bool {
        a.rows() == b.rows()
            && a.cols() == b.cols()
            && (0..a.rows())
                .all(|r| (0..a.cols()).all(|c| a.get(r, c).try_eq(b.get(r, c)).unwrap()))
    }

    #[test]
    fn full_faithfulness_between_two_point_spaces_over_f3() {
        // Every unital morphism C(Y) -> C(X) is the pullback of exactly
        // one space map X -> Y; enumerate all matrices exhaustively.
        let f = FieldDescriptor::prime(3).unwrap();
        let x = space(&["a", "b"]);
        let y = space(&["c", "d"]);
        let cx = function_algebra(&f, &x).unwrap();
        let cy = function_algebra(&f, &y).unwrap();
        let elems = f.enumerate().unwrap();
        let entries = x.len() * y.len();

        let mut valid: Vec<AlgebraMorphism> = Vec::new();
        for code in 0..elems.len().pow(entries as u32) {
            let mut rem = code;
            let mut m = Matrix::zeros(&f, x.len(), y.len());
            for pos in 0..entries {
                m.set(pos / y.len(), pos % y.len(), elems[rem % elems.len()].clone());
                rem /= elems.len();
            }
            if let Ok(phi) = AlgebraMorphism::new(cy.clone(), cx.clone(), m) {
                valid.push(phi);
            }
        }
        let expected = y.len().pow(x.len() as u32);
        assert_eq!(valid.len(), expected);

        // Each space map pulls back to exactly one of the valid morphisms.
        for code in 0..expected {
            let images = vec![code % y.len(), code / y.len()];
            let map = SpaceMap::new(x.clone(), y.clone(), images).unwrap();
            let pb = pullback(&f, &map).unwrap();
            let hits =
                valid.iter().filter(|phi| matrices_eq(phi.matrix(), pb.matrix())).count();
            assert_eq!(hits, 1);
        }
    }
}
