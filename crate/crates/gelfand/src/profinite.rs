//! Profinite towers of finite discrete spaces and Van der Put
//! approximation of continuous functions by locally constant ones.
//!
//! A tower is a chain `X_0 <- X_1 <- ... <- X_L` of surjections; its
//! inverse limit is approximated at truncation depth `L`. A continuous
//! function is presented as an oracle: its values on the finest level plus
//! a claimed modulus of continuity `k -> m(k)` ("values within one
//! level-`m(k)` cell differ by at most the `k`-th neighborhood"). The
//! modulus is verified against the data, never trusted: a violation is
//! reported with the witnessing pair of points. The approximation `g` at
//! index `k` is the locally constant function taking, on each level-`m(k)`
//! cell, the oracle's value at the cell's minimal point.

use crate::algebra::Algebra;
use crate::duality::{function_algebra, FiniteSpace, SpaceMap};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement, Magnitude, Valuation};

/// A finite truncation of a profinite space: levels and surjective
/// bonding maps downward.
#[derive(Debug, Clone)]
pub struct ProfiniteTower {
    levels: Vec<FiniteSpace>,
    /// `bonding[k][x]` is the level-`k` image of point `x` of level `k+1`.
    bonding: Vec<Vec<usize>>,
}

impl ProfiniteTower {
    pub fn new(levels: Vec<FiniteSpace>, bonding: Vec<Vec<usize>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::SchemaError {
                location: "tower.levels".into(),
                message: "a tower needs at least one level".into(),
            });
        }
        if bonding.len() + 1 != levels.len() {
            return Err(Error::SchemaError {
                location: "tower.bonding".into(),
                message: format!(
                    "expected {} bonding maps for {} levels, got {}",
                    levels.len() - 1,
                    levels.len(),
                    bonding.len()
                ),
            });
        }
        for (k, map) in bonding.iter().enumerate() {
            if map.len() != levels[k + 1].len() {
                return Err(Error::SchemaError {
                    location: format!("tower.bonding[{k}]"),
                    message: format!(
                        "expected one image per level-{} point ({}), got {}",
                        k + 1,
                        levels[k + 1].len(),
                        map.len()
                    ),
                });
            }
            let mut seen = vec![false; levels[k].len()];
            for (x, &y) in map.iter().enumerate() {
                if y >= levels[k].len() {
                    return Err(Error::SchemaError {
                        location: format!("tower.bonding[{k}][{x}]"),
                        message: format!("image {y} out of range 0..{}", levels[k].len()),
                    });
                }
                seen[y] = true;
            }
            if let Some(miss) = seen.iter().position(|&s| !s) {
                return Err(Error::SchemaError {
                    location: format!("tower.bonding[{k}]"),
                    message: format!(
                        "bonding map is not surjective: level-{k} point {miss} is never hit"
                    ),
                });
            }
        }
        Ok(ProfiniteTower { levels, bonding })
    }

    /// The standard truncation of `Z_p`: level `k` is `Z/p^k` with numeric
    /// labels, bonding by reduction.
    pub fn standard_zp(p: u64, depth: usize) -> Result<Self> {
        assert!(p >= 2, "prime base");
        let mut levels = Vec::with_capacity(depth + 1);
        let mut bonding = Vec::with_capacity(depth);
        let mut size: u64 = 1;
        for k in 0..=depth {
            levels.push(FiniteSpace::new((0..size).map(|j| j.to_string()).collect())?);
            if k < depth {
                let next = size.checked_mul(p).ok_or_else(|| Error::SchemaError {
                    location: "tower.levels".into(),
                    message: format!("p^{} overflows", k + 1),
                })?;
                bonding.push((0..next).map(|j| (j % size) as usize).collect());
                size = next;
            }
        }
        ProfiniteTower::new(levels, bonding)
    }

    /// Truncation depth `L` (the finest level index).
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> Result<&FiniteSpace> {
        self.levels.get(k).ok_or(Error::DepthExceeded {
            requested: k,
            available: self.depth(),
        })
    }

    /// Projects a level-`from` point down to level `to <= from`.
    pub fn project_point(&self, from: usize, point: usize, to: usize) -> usize {
        assert!(to <= from && from <= self.depth(), "levels in range");
        let mut x = point;
        for j in (to..from).rev() {
            x = self.bonding[j][x];
        }
        x
    }

    /// The partition of the finest level into level-`m` cells:
    /// `cells[i]` lists the finest points over level-`m` point `i`, in
    /// ascending index order.
    pub fn cells_at(&self, m: usize) -> Result<Vec<Vec<usize>>> {
        let level = self.level(m)?;
        let mut cells = vec![Vec::new(); level.len()];
        for x in 0..self.level(self.depth())?.len() {
            cells[self.project_point(self.depth(), x, m)].push(x);
        }
        Ok(cells)
    }

    /// The canonical surjection `X_k -> X_j` for `j <= k` as a space map.
    pub fn inflation(&self, j: usize, k: usize) -> Result<SpaceMap> {
        let fine = self.level(k)?.clone();
        let coarse = self.level(j)?.clone();
        assert!(j <= k, "inflation goes down the tower");
        let images = (0..fine.len()).map(|x| self.project_point(k, x, j)).collect();
        SpaceMap::new(fine, coarse, images)
    }

    /// The function algebra on level `k` (subject to the dimension cap).
    pub fn level_algebra(&self, field: &FieldDescriptor, k: usize) -> Result<Algebra> {
        function_algebra(field, self.level(k)?)
    }
}

/// A locally constant function: constant on the cells of its level.
#[derive(Debug, Clone)]
pub struct LCFunction {
    pub level: usize,
    pub values: Vec<FieldElement>,
}

impl LCFunction {
    pub fn new(tower: &ProfiniteTower, level: usize, values: Vec<FieldElement>) -> Result<Self> {
        let expected = tower.level(level)?.len();
        if values.len() != expected {
            return Err(Error::SchemaError {
                location: "function.values".into(),
                message: format!("expected {expected} values at level {level}, got {}", values.len()),
            });
        }
        Ok(LCFunction { level, values })
    }

    /// Rewrites the function over a finer level.
    pub fn inflate(&self, tower: &ProfiniteTower, to_level: usize) -> Result<LCFunction> {
        assert!(to_level >= self.level, "inflation goes up the tower");
        let fine = tower.level(to_level)?;
        let values = (0..fine.len())
            .map(|x| self.values[tower.project_point(to_level, x, self.level)].clone())
            .collect();
        Ok(LCFunction { level: to_level, values })
    }

    /// The largest absolute value attained (the sup gauge); equals the
    /// spectral radius of the function in its level algebra.
    pub fn sup_gauge(&self) -> Result<Magnitude> {
        assert!(!self.values.is_empty(), "spaces are nonempty");
        let mut best = Magnitude::Zero;
        for v in &self.values {
            let mag = v.abs_value()?;
            let ord = best.partial_cmp(&mag).ok_or_else(|| {
                Error::Internal("incomparable magnitudes in one field".into())
            })?;
            if ord == std::cmp::Ordering::Less {
                best = mag;
            }
        }
        Ok(best)
    }
}

/// How an oracle's modulus of continuity is given.
#[derive(Debug, Clone)]
enum ModulusSpec {
    /// Explicit pairs `(k, m(k))`.
    Table(Vec<(i64, usize)>),
    /// `m(k) = max(0, k + shift)` (builtin oracles on `Z_p` towers).
    Linear { shift: i64 },
}

/// A continuous function presented by its finest-level values and a
/// claimed modulus of continuity. The claim is verified at use.
#[derive(Debug, Clone)]
pub struct ContFnOracle {
    values: Vec<FieldElement>,
    modulus: ModulusSpec,
}

impl ContFnOracle {
    /// An oracle from explicit data: values on the finest level and a
    /// modulus table.
    pub fn from_data(
        tower: &ProfiniteTower,
        values: Vec<FieldElement>,
        modulus: Vec<(i64, usize)>,
    ) -> Result<Self> {
        let expected = tower.level(tower.depth())?.len();
        if values.len() != expected {
            return Err(Error::SchemaError {
                location: "oracle.values".into(),
                message: format!("expected {expected} values, got {}", values.len()),
            });
        }
        Ok(ContFnOracle { values, modulus: ModulusSpec::Table(modulus) })
    }

    /// The identity function on a `Z_p`-style tower: point labels must be
    /// integers, and the base field must be p-adic (where the 1-Lipschitz
    /// modulus `m(k) = k` is justified).
    pub fn identity(tower: &ProfiniteTower, field: &FieldDescriptor) -> Result<Self> {
        Self::polynomial(tower, field, &[field.zero(), field.one()])
    }

    /// A polynomial function of the point label. The modulus is
    /// `m(k) = k + max(0, -min coefficient valuation)`; integral
    /// coefficients give the 1-Lipschitz `m(k) = k`.
    pub fn polynomial(
        tower: &ProfiniteTower,
        field: &FieldDescriptor,
        coeffs: &[FieldElement],
    ) -> Result<Self> {
        if !matches!(field, FieldDescriptor::Padic { .. }) {
            return Err(Error::SchemaError {
                location: "oracle".into(),
                message: "builtin oracles need a p-adic base field".into(),
            });
        }
        let finest = tower.level(tower.depth())?;
        let mut values = Vec::with_capacity(finest.len());
        for label in finest.labels() {
            let n: i64 = label.parse().map_err(|_| Error::SchemaError {
                location: "tower.levels".into(),
                message: format!("builtin oracles need integer point labels, got {label:?}"),
            })?;
            let x = field.from_integer(n);
            // Horner evaluation.
            let mut acc = field.zero();
            for c in coeffs.iter().rev() {
                acc = acc.mul(&x).add(c);
            }
            values.push(acc);
        }
        let mut min_val: i64 = 0;
        for c in coeffs {
            match c.padic_valuation() {
                Some(Valuation::Exact(v)) | Some(Valuation::AtLeast(v)) => {
                    min_val = min_val.min(v);
                }
                Some(Valuation::Infinite) => {}
                None => unreachable!("field checked above"),
            }
        }
        Ok(ContFnOracle { values, modulus: ModulusSpec::Linear { shift: -min_val } })
    }

    pub fn value_at(&self, point: usize) -> &FieldElement {
        &self.values[point]
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    /// The claimed level for neighborhood index `k`.
    pub fn modulus(&self, k: i64) -> Result<usize> {
        match &self.modulus {
            ModulusSpec::Table(t) => t
                .iter()
                .find(|(kk, _)| *kk == k)
                .map(|(_, m)| *m)
                .ok_or_else(|| Error::SchemaError {
                    location: "oracle.modulus".into(),
                    message: format!("no modulus entry for neighborhood index {k}"),
                }),
            ModulusSpec::Linear { shift } => {
                let m = (k + shift).max(0);
                Ok(m as usize)
            }
        }
    }
}

/// The Van der Put approximation at neighborhood index `k`: locally
/// constant at level `m(k)`, taking on each cell the oracle's value at the
/// cell's minimal point. The modulus claim is verified on every pair of
/// points sharing a cell; a violation is reported with the witness pair.
pub fn vdp_approximate(
    tower: &ProfiniteTower,
    oracle: &ContFnOracle,
    k: i64,
) -> Result<LCFunction> {
    let m = oracle.modulus(k)?;
    if m > tower.depth() {
        return Err(Error::DepthExceeded { requested: m, available: tower.depth() });
    }
    let cells = tower.cells_at(m)?;
    let mut values = Vec::with_capacity(cells.len());
    for cell in &cells {
        for (a_pos, &x) in cell.iter().enumerate() {
            for &y in &cell[a_pos + 1..] {
                let diff = oracle.value_at(x).sub(oracle.value_at(y));
                if !diff.in_neighborhood(k)? {
                    return Err(Error::ModulusViolated { level: m, x, y, index: k });
                }
            }
        }
        let rep = *cell.first().expect("surjective bonding keeps cells nonempty");
        values.push(oracle.value_at(rep).clone());
    }
    Ok(LCFunction { level: m, values })
}

/// Verifies the approximation guarantee directly: `(f - g)(x)` lies in
/// the `k`-th neighborhood at every finest-level point.
pub fn approximation_within(
    tower: &ProfiniteTower,
    oracle: &ContFnOracle,
    g: &LCFunction,
    k: i64,
) -> Result<bool> {
    let fine = g.inflate(tower, tower.depth())?;
    for (x, gv) in fine.values.iter().enumerate() {
        if !oracle.value_at(x).sub(gv).in_neighborhood(k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Entourage membership for locally constant functions: `(f, g)` lies in
/// the index-`k` entourage when `(g - f)(x)` is in the `k`-th neighborhood
/// at every point of the common refinement.
pub fn in_entourage_fn(
    tower: &ProfiniteTower,
    f: &LCFunction,
    g: &LCFunction,
    k: i64,
) -> Result<bool> {
    let level = f.level.max(g.level);
    let fi = f.inflate(tower, level)?;
    let gi = g.inflate(tower, level)?;
    for (a, b) in fi.values.iter().zip(&gi.values) {
        if !b.sub(a).in_neighborhood(k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The indicator functions of the level-`k` cells: verified to be
/// orthogonal idempotents that sum to one and span the level algebra.
/// Inflated along the tower they witness density of the idempotent span.
pub fn indicator_basis(
    tower: &ProfiniteTower,
    field: &FieldDescriptor,
    k: usize,
) -> Result<Vec<LCFunction>> {
    let n = tower.level(k)?.len();
    let algebra = tower.level_algebra(field, k)?;
    let mut out = Vec::with_capacity(n);
    let mut total = algebra.zero();
    for i in 0..n {
        let e = algebra.basis_element(i);
        if !algebra.is_idempotent(&e)? {
            return Err(Error::Internal("indicator is not idempotent".into()));
        }
        for j in 0..i {
            let other = algebra.basis_element(j);
            if !algebra.is_zero_element(&algebra.mul(&e, &other)) {
                return Err(Error::Internal("indicators are not orthogonal".into()));
            }
        }
        total = algebra.add(&total, &e);
        out.push(LCFunction { level: k, values: e });
    }
    if !algebra.elements_eq(&total, &algebra.one())? {
        return Err(Error::Internal("indicators do not sum to one".into()));
    }
    Ok(out)
}

/// A finite cover of a spectrum by neighborhood translates: the centers
/// are spectrum values, greedily merged when they share a translate.
#[derive(Debug, Clone)]
pub struct CosetCover {
    pub k: i64,
    pub centers: Vec<FieldElement>,
}

/// Total boundedness of a spectrum at index `k`: returns the explicit
/// finite cover by `k`-neighborhood translates centered at spectrum
/// values. Finite spectra are always totally bounded; the value is the
/// certified cover itself.
pub fn total_boundedness_check(
    algebra: &Algebra,
    element: &[FieldElement],
    k: i64,
) -> Result<CosetCover> {
    let spectrum = algebra.spectrum(element)?;
    let mut centers: Vec<FieldElement> = Vec::new();
    'next: for lambda in &spectrum {
        for c in &centers {
            if lambda.sub(c).in_neighborhood(k)? {
                continue 'next;
            }
        }
        centers.push(lambda.clone());
    }
    Ok(CosetCover { k, centers })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3(prec: u32) -> FieldDescriptor {
        FieldDescriptor::padic(3, prec).unwrap()
    }

    #[test]
    fn standard_tower_projects_by_reduction() {
        let t = ProfiniteTower::standard_zp(3, 3).unwrap();
        assert_eq!(t.depth(), 3);
        assert_eq!(t.level(3).unwrap().len(), 27);
        // 22 = 4 mod 9 = 1 mod 3.
        assert_eq!(t.project_point(3, 22, 2), 4);
        assert_eq!(t.project_point(3, 22, 1), 1);
        assert_eq!(t.project_point(3, 22, 0), 0);
    }

    #[test]
    fn non_surjective_bonding_is_rejected() {
        let l0 = FiniteSpace::new(vec!["a".into(), "b".into()]).unwrap();
        let l1 = FiniteSpace::new(vec!["x".into(), "y".into()]).unwrap();
        let err = ProfiniteTower::new(vec![l0, l1], vec![vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::SchemaError { .. }));
    }

    #[test]
    fn identity_oracle_is_approximated_by_residues() {
        let f = q3(8);
        let t = ProfiniteTower::standard_zp(3, 3).unwrap();
        let oracle = ContFnOracle::identity(&t, &f).unwrap();
        let g = vdp_approximate(&t, &oracle, 2).unwrap();
        assert_eq!(g.level, 2);
        assert_eq!(g.values.len(), 9);
        // Cell of level-2 point j holds {j, j+9, j+18}; minimal point is j.
        for (j, v) in g.values.iter().enumerate() {
            assert!(v.try_eq(&f.from_integer(j as i64)).unwrap());
        }
        assert!(approximation_within(&t, &oracle, &g, 2).unwrap());
    }

    #[test]
    fn approximations_form_a_cauchy_sequence() {
        let f = q3(8);
        let t = ProfiniteTower::standard_zp(3, 3).unwrap();
        let oracle =
            ContFnOracle::polynomial(&t, &f, &[f.from_integer(3), f.from_integer(0), f.from_integer(1)])
                .unwrap();
        let g1 = vdp_approximate(&t, &oracle, 1).unwrap();
        let g2 = vdp_approximate(&t, &oracle, 2).unwrap();
        let g3 = vdp_approximate(&t, &oracle, 3).unwrap();
        assert!(in_entourage_fn(&t, &g1, &g2, 1).unwrap());
        assert!(in_entourage_fn(&t, &g2, &g3, 2).unwrap());
        assert!(in_entourage_fn(&t, &g1, &g3, 1).unwrap());
    }

    #[test]
    fn wrong_modulus_claim_is_reported_with_a_witness_pair() {
        let f = q3(8);
        let t = ProfiniteTower::standard_zp(3, 2).unwrap();
        // Identity values but a modulus claiming level 1 suffices for k=2:
        // the level-1 cell of 0 contains 0 and 3 with f(0)-f(3) = -3,
        // valuation 1 < 2.
        let values = (0..9).map(|j| f.from_integer(j)).collect();
        let oracle = ContFnOracle::from_data(&t, values, vec![(2, 1)]).unwrap();
        let err = vdp_approximate(&t, &oracle, 2).unwrap_err();
        match err {
            Error::ModulusViolated { level, x, y, index } => {
                assert_eq!(level, 1);
                assert_eq!(index, 2);
                assert_eq!(t.project_point(2, x, 1), t.project_point(2, y, 1));
            }
            other => panic!("expected ModulusViolated, got {other:?}"),
        }
    }

    #[test]
    fn requests_beyond_the_truncation_fail_with_depth_exceeded() {
        let f = q3(8);
        let t = ProfiniteTower::standard_zp(3, 2).unwrap();
        let oracle = ContFnOracle::identity(&t, &f).unwrap();
        let err = vdp_approximate(&t, &oracle, 5).unwrap_err();
        assert!(matches!(err, Error::DepthExceeded { requested: 5, available: 2 }));
    }

    #[test]
    fn negative_valuation_coefficients_shift_the_modulus() {
        let f = q3(8);
        let t = ProfiniteTower::standard_zp(3, 3).unwrap();
        // f(x) = x/3: dividing by 3 loses one level.
        let third = f.from_integer(3).inverse().unwrap();
        let oracle = ContFnOracle::polynomial(&t, &f, &[f.zero(), third]).unwrap();
        assert_eq!(oracle.modulus(1).unwrap(), 2);
        assert_eq!(oracle.modulus(2).unwrap(), 3);
        let g = vdp_approximate(&t, &oracle, 2).unwrap();
        assert_eq!(g.level, 3);
        assert!(approximation_within(&t, &oracle, &g, 2).unwrap());
    }

    #[test]
    fn sup_gauge_matches_the_spectral_radius_on_the_level_algebra() {
        let f = q3(8);
        let t = ProfiniteTower::standard_zp(3, 1).unwrap();
        let g = LCFunction::new(
            &t,
            1,
            vec![f.from_integer(0), f.from_integer(3), f.from_integer(9)],
        )
        .unwrap();
        let gauge = g.sup_gauge().unwrap();
        let algebra = t.level_algebra(&f, 1).unwrap();
        let rho = algebra.spectral_radius(&g.values).unwrap().unwrap();
        assert!(gauge.partial_cmp(&rho) == Some(std::cmp::Ordering::Equal));
        // |3|_3 = 3^-1 is the largest of {0, 3^-1, 3^-2}.
        assert!(gauge.partial_cmp(&Magnitude::PPower { p: 3, val: 1 })
            == Some(std::cmp::Ordering::Equal));
    }

    #[test]
    fn indicator_basis_is_an_orthogonal_partition_of_unity() {
        let f = q3(6);
        let t = ProfiniteTower::standard_zp(3, 2).unwrap();
        let basis = indicator_basis(&t, &f, 2).unwrap();
        assert_eq!(basis.len(), 9);
        // Inflation to the finest level preserves values on cells.
        let e0 = basis[0].inflate(&t, 2).unwrap();
        assert!(e0.values[0].try_eq(&f.one()).unwrap());
        assert!(e0.values[1].is_zero().unwrap());
    }

    #[test]
    fn spectrum_cover_merges_cosets_at_low_resolution() {
        // sigma = {0, 3, 9} over Q_3: one center at k = 1 (all three lie in
        // 3 Z_3), two centers at k = 2 (0 and 9 share 9 Z_3, but 3 does
        // not), three at k = 3.
        let f = q3(8);
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let a = Algebra::pointwise(&f, &labels).unwrap();
        let x = vec![f.from_integer(0), f.from_integer(3), f.from_integer(9)];
        assert_eq!(total_boundedness_check(&a, &x, 1).unwrap().centers.len(), 1);
        assert_eq!(total_boundedness_check(&a, &x, 2).unwrap().centers.len(), 2);
        assert_eq!(total_boundedness_check(&a, &x, 3).unwrap().centers.len(), 3);
    }

    #[test]
    fn inflation_space_map_composes_with_pullback() {
        let f = q3(6);
        let t = ProfiniteTower::standard_zp(3, 2).unwrap();
        let inf = t.inflation(1, 2).unwrap();
        assert_eq!(inf.source.len(), 9);
        assert_eq!(inf.target.len(), 3);
        let phi = crate::duality::pullback(&f, &inf).unwrap();
        // The pullback of the indicator of residue 1 is the indicator of
        // {1, 4, 7}.
        let e1 = vec![f.zero(), f.one(), f.zero()];
        let lifted = phi.apply(&e1);
        for (j, v) in lifted.iter().enumerate() {
            let expect = if j % 3 == 1 { f.one() } else { f.zero() };
            assert!(v.try_eq(&expect).unwrap());
        }
    }
}
