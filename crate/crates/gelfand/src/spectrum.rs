//! Characters, the maximal spectrum as a finite point set, and the two
//! topologies it carries.
//!
//! A character is a unital multiplicative linear functional `A -> F`; its
//! kernel is a maximal ideal with residue field `F`, and every such maximal
//! ideal arises this way. Characters are enumerated by a depth-first search
//! over the per-basis-element root candidates (roots of the characteristic
//! polynomial of multiplication by that basis vector), pruned by every
//! product relation that becomes decidable as the prefix grows, under an
//! explicit node budget.
//!
//! The Zariski topology is computed from the closure operator
//! `S -> V(I(S))` (vanishing locus of the common kernel), the Gelfand
//! topology from separability of evaluation values; on these finite
//! spectra both are discrete exactly when points are separable, and the
//! comparison produces explicit witness elements.

use crate::algebra::{AlgElement, Algebra};
use crate::error::{Error, Result};
use crate::field::roots::distinct_roots;
use crate::field::{FieldDescriptor, FieldElement};
use crate::linalg::Matrix;

/// Largest point count for which topology families are materialized.
pub const TOPOLOGY_ENUMERATION_CAP: usize = 16;

/// Default node budget for the character search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// A unital multiplicative linear functional, stored by its values on the
/// basis (linearity determines it everywhere).
#[derive(Debug, Clone)]
pub struct Character {
    values: Vec<FieldElement>,
}

impl Character {
    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    /// Evaluates the character on a coordinate vector.
    pub fn evaluate(&self, a: &[FieldElement]) -> FieldElement {
        assert_eq!(a.len(), self.values.len());
        let field = self.values[0].field();
        let mut acc = field.zero();
        for (c, v) in a.iter().zip(&self.values) {
            acc = acc.add(&c.mul(v));
        }
        acc
    }

    /// A reduced basis of the kernel (a maximal ideal of codimension one).
    pub fn kernel_basis(&self) -> Result<Vec<AlgElement>> {
        let field = self.values[0].field();
        let m = Matrix::from_rows(&field, vec![self.values.clone()]);
        m.kernel_basis()
    }
}

/// One product (or unit) constraint used by the search, ready once all
/// participating coordinates are assigned.
struct Relation {
    /// `Some((i, j))` for `chi(b_i) chi(b_j) = chi(b_i b_j)`; `None` for
    /// `chi(1) = 1`.
    factors: Option<(usize, usize)>,
    /// Coordinates of the right-hand side element.
    rhs: Vec<FieldElement>,
    /// Depth at which every referenced coordinate is assigned.
    ready_at: usize,
}

/// Enumerates all characters in canonical order (lexicographic by value
/// tuple). Fails with `SearchBudgetExceeded` when the pruned search visits
/// more than `budget` nodes.
pub fn enumerate_characters(a: &Algebra, budget: u64) -> Result<Vec<Character>> {
    let n = a.dim();
    let field = a.field().clone();

    // Root candidates per coordinate: chi(b_i) must be an eigenvalue of
    // multiplication by b_i.
    let mut candidates: Vec<Vec<FieldElement>> = Vec::with_capacity(n);
    for i in 0..n {
        candidates.push(distinct_roots(&a.charpoly_of(&a.basis_element(i)))?);
    }

    // Relations: every basis product plus the unit constraint. A relation
    // can be checked once its two factors and the support of its
    // right-hand side are all assigned; coordinates that merely might be
    // nonzero (approximate zeros) count as support.
    let support_end = |v: &[FieldElement]| -> usize {
        let mut end = 0;
        for (k, c) in v.iter().enumerate() {
            if !matches!(c.is_zero(), Ok(true)) {
                end = k + 1;
            }
        }
        end
    };
    let mut relations: Vec<Relation> = Vec::new();
    for i in 0..n {
        for j in 0..=i {
            let rhs = a.table_row(i, j).to_vec();
            let ready_at = (i + 1).max(support_end(&rhs));
            relations.push(Relation { factors: Some((i, j)), rhs, ready_at });
        }
    }
    relations.push(Relation {
        factors: None,
        rhs: a.one(),
        ready_at: support_end(&a.one()),
    });
    let mut by_depth: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (idx, rel) in relations.iter().enumerate() {
        by_depth[rel.ready_at].push(idx);
    }

    let check = |rel: &Relation, assigned: &[FieldElement]| -> Result<bool> {
        let lhs = match rel.factors {
            Some((i, j)) => assigned[i].mul(&assigned[j]),
            None => field.one(),
        };
        let mut rhs = field.zero();
        for (k, c) in rel.rhs.iter().enumerate() {
            if matches!(c.is_zero(), Ok(true)) {
                continue;
            }
            rhs = rhs.add(&c.mul(&assigned[k]));
        }
        lhs.try_eq(&rhs)
    };

    let mut found: Vec<Vec<FieldElement>> = Vec::new();
    let mut assigned: Vec<FieldElement> = Vec::with_capacity(n);
    let mut visited: u64 = 0;
    // Iterative DFS: stack of candidate indices per depth.
    let mut cursor: Vec<usize> = vec![0];
    'search: loop {
        let depth = assigned.len();
        if depth == n {
            found.push(assigned.clone());
            // Backtrack.
            assigned.pop();
            cursor.pop();
            if let Some(last) = cursor.last_mut() {
                *last += 1;
            } else {
                break;
            }
            continue;
        }
        let idx = *cursor.last().expect("cursor tracks depth");
        if idx >= candidates[depth].len() {
            // Exhausted this level.
            cursor.pop();
            if assigned.pop().is_none() {
                break;
            }
            if let Some(last) = cursor.last_mut() {
                *last += 1;
            } else {
                break;
            }
            continue;
        }
        visited += 1;
        if visited > budget {
            return Err(Error::SearchBudgetExceeded { visited, budget });
        }
        assigned.push(candidates[depth][idx].clone());
        // Check every relation that just became decidable.
        for &r in &by_depth[depth + 1] {
            if !check(&relations[r], &assigned)? {
                assigned.pop();
                *cursor.last_mut().expect("cursor") += 1;
                continue 'search;
            }
        }
        if depth == 0 {
            // Depth-0-ready relations (constant support) are checked once.
            for &r in &by_depth[0] {
                if !check(&relations[r], &assigned)? {
                    assigned.pop();
                    *cursor.last_mut().expect("cursor") += 1;
                    continue 'search;
                }
            }
        }
        cursor.push(0);
    }

    found.sort_by(|x, y| {
        for (a, b) in x.iter().zip(y) {
            let ord = a.canonical_cmp(b);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    });
    // Audit: distinct value tuples must stay distinguishable at working
    // precision, otherwise the enumeration would overcount.
    for w in found.windows(2) {
        let mut all_eq = true;
        for (a, b) in w[0].iter().zip(&w[1]) {
            if !a.try_eq(b)? {
                all_eq = false;
                break;
            }
        }
        if all_eq {
            return Err(Error::precision(
                "two enumerated characters are indistinguishable at working precision",
            ));
        }
    }
    Ok(found.into_iter().map(|values| Character { values }).collect())
}

/// The value matrix of a character list: row `r`, column `j` holds
/// `chi_r(b_j)`.
pub fn value_matrix(field: &FieldDescriptor, chars: &[Character]) -> Matrix {
    let rows = chars.iter().map(|c| c.values.clone()).collect();
    Matrix::from_rows(field, rows)
}

/// Result of the Gelfand-property check: the algebra is Gelfand exactly
/// when its character count matches the dimension of the semisimple
/// quotient.
#[derive(Debug, Clone)]
pub struct GelfandCheck {
    pub holds: bool,
    pub characters: usize,
    pub semisimple_dim: usize,
}

pub fn check_gelfand(a: &Algebra, budget: u64) -> Result<GelfandCheck> {
    let chars = enumerate_characters(a, budget)?;
    let rad = a.jacobson_radical()?;
    let semisimple_dim = a.dim() - rad.len();
    Ok(GelfandCheck { holds: chars.len() == semisimple_dim, characters: chars.len(), semisimple_dim })
}

/// Finite-dimensional algebras are Artinian, so every prime ideal is
/// maximal; the check records that argument rather than recomputing it.
pub fn check_pm(_a: &Algebra) -> (bool, String) {
    (true, "Artinian ring: every prime ideal is maximal, so Spec = Max".to_string())
}

/// A topology on the finite point set `0..points`, stored as its family of
/// closed sets (each sorted ascending, family sorted lexicographically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    pub points: usize,
    pub closed_sets: Vec<Vec<usize>>,
}

impl Topology {
    pub fn discrete(points: usize) -> Self {
        assert!(points <= TOPOLOGY_ENUMERATION_CAP, "family size 2^points");
        let mut closed_sets: Vec<Vec<usize>> = (0u32..(1 << points))
            .map(|mask| (0..points).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        closed_sets.sort();
        Topology { points, closed_sets }
    }

    pub fn is_closed(&self, s: &[usize]) -> bool {
        let mut key = s.to_vec();
        key.sort_unstable();
        key.dedup();
        self.closed_sets.iter().any(|c| *c == key)
    }

    /// Finite space: Hausdorff iff discrete iff every singleton is open.
    pub fn is_hausdorff(&self) -> bool {
        (0..self.points).all(|x| {
            let complement: Vec<usize> = (0..self.points).filter(|&y| y != x).collect();
            self.is_closed(&complement)
        })
    }
}

/// Decides whether `s` is Zariski-closed: the vanishing locus of the
/// common kernel `I(s)` must not contain any outside character.
pub fn zariski_closed(a: &Algebra, chars: &[Character], s: &[usize]) -> Result<bool> {
    let field = a.field().clone();
    let rows: Vec<Vec<FieldElement>> = s.iter().map(|&i| chars[i].values.clone()).collect();
    let ideal_basis = if rows.is_empty() {
        // I(empty set) is the whole algebra.
        (0..a.dim()).map(|i| a.basis_element(i)).collect()
    } else {
        Matrix::from_rows(&field, rows).kernel_basis()?
    };
    for (j, chi) in chars.iter().enumerate() {
        if s.contains(&j) {
            continue;
        }
        let mut vanishes_on_all = true;
        for v in &ideal_basis {
            if !chi.evaluate(v).is_zero()? {
                vanishes_on_all = false;
                break;
            }
        }
        if vanishes_on_all {
            // chi lies in the closure of s but outside s.
            return Ok(false);
        }
    }
    Ok(true)
}

/// Materializes the Zariski topology (closed-set family) on the character
/// set. Point counts above the enumeration cap are refused.
pub fn zariski_topology(a: &Algebra, chars: &[Character]) -> Result<Topology> {
    let n = chars.len();
    if n > TOPOLOGY_ENUMERATION_CAP {
        return Err(Error::UnsupportedAlgebra(format!(
            "topology family enumeration is capped at {TOPOLOGY_ENUMERATION_CAP} points, got {n}"
        )));
    }
    let mut closed_sets = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if zariski_closed(a, chars, &s)? {
            closed_sets.push(s);
        }
    }
    closed_sets.sort();
    Ok(Topology { points: n, closed_sets })
}

/// Checks that two characters are separable by evaluation: some basis
/// coordinate takes certifiably different values. Errs when the only
/// difference is below working precision.
fn separable(x: &Character, y: &Character) -> Result<bool> {
    for (a, b) in x.values.iter().zip(&y.values) {
        if !a.try_eq(b)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Materializes the Gelfand (evaluation) topology: generated by preimages
/// of basic field neighborhoods under all evaluation maps. On a finite
/// spectrum with pairwise separable points it is discrete.
pub fn gelfand_topology(_a: &Algebra, chars: &[Character]) -> Result<Topology> {
    let n = chars.len();
    if n > TOPOLOGY_ENUMERATION_CAP {
        return Err(Error::UnsupportedAlgebra(format!(
            "topology family enumeration is capped at {TOPOLOGY_ENUMERATION_CAP} points, got {n}"
        )));
    }
    for i in 0..n {
        for j in 0..i {
            if !separable(&chars[i], &chars[j])? {
                return Err(Error::precision(
                    "two characters are inseparable at working precision",
                ));
            }
        }
    }
    // Pairwise separable finite set: every singleton is an intersection of
    // finitely many basic opens, hence open; the topology is discrete.
    Ok(Topology::discrete(n))
}

/// Comparison of the two topologies with explicit witnesses: for every
/// Gelfand-closed set `C` and point `M` outside it, an element vanishing
/// on `C` and evaluating to 1 at `M` (which exhibits `C` as
/// Zariski-closed around `M`).
#[derive(Debug, Clone)]
pub struct TopologyComparison {
    pub coincide: bool,
    /// `(closed set, outside point, witness coordinates)`.
    pub witnesses: Vec<(Vec<usize>, usize, AlgElement)>,
    pub justification: String,
}

pub fn topologies_coincide(a: &Algebra, chars: &[Character]) -> Result<TopologyComparison> {
    let field = a.field().clone();
    let zar = zariski_topology(a, chars)?;
    let gel = gelfand_topology(a, chars)?;

    // Direction 1: Zariski-opens are Gelfand-open, via D(b) being the
    // evaluation preimage of the (open) nonzero locus; with both families
    // materialized this is a containment check.
    let zariski_in_gelfand = zar.closed_sets.iter().all(|s| gel.is_closed(s));

    // Direction 2: every Gelfand-closed set is Zariski-closed, witnessed
    // pointwise by elements separating the set from an outside point.
    let mut witnesses = Vec::new();
    let mut gelfand_in_zariski = true;
    'outer: for c in &gel.closed_sets {
        for m in 0..chars.len() {
            if c.contains(&m) {
                continue;
            }
            // Solve ev(a) = 0 on C, ev_M(a) = 1.
            let mut rows: Vec<Vec<FieldElement>> =
                c.iter().map(|&i| chars[i].values.clone()).collect();
            rows.push(chars[m].values.clone());
            let mut rhs = vec![field.zero(); c.len()];
            rhs.push(field.one());
            let system = Matrix::from_rows(&field, rows);
            match system.solve(&rhs)? {
                Some(w) => witnesses.push((c.clone(), m, w)),
                None => {
                    gelfand_in_zariski = false;
                    break 'outer;
                }
            }
        }
    }

    let coincide = zariski_in_gelfand && gelfand_in_zariski && zar == gel;
    let justification = if coincide {
        format!(
            "both topologies are discrete on {} points; {} vanishing witnesses \
             realize every Gelfand-closed set as a Zariski-closed set, and \
             Zariski-basic opens are evaluation preimages of the nonzero locus",
            chars.len(),
            witnesses.len()
        )
    } else {
        "the closed-set families differ".to_string()
    };
    Ok(TopologyComparison { coincide, witnesses, justification })
}

/// One verdict line of the property report.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub holds: bool,
    pub justification: String,
}

/// The bundle of shadow-level properties reported by the `report` command.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub gelfand: Outcome,
    pub semisimple: Outcome,
    pub spectra_compact: Outcome,
    pub pm: Outcome,
    pub zariski_hausdorff: Outcome,
    pub topologies_coincide: Outcome,
}

pub fn property_report(a: &Algebra, budget: u64) -> Result<PropertyReport> {
    let check = check_gelfand(a, budget)?;
    let chars = enumerate_characters(a, budget)?;
    let rad = a.jacobson_radical()?;
    let zar = zariski_topology(a, &chars)?;
    let hausdorff = zar.is_hausdorff();
    let cmp = topologies_coincide(a, &chars)?;

    Ok(PropertyReport {
        gelfand: Outcome {
            holds: check.holds,
            justification: format!(
                "{} characters vs dim(A/Jrad) = {}",
                check.characters, check.semisimple_dim
            ),
        },
        semisimple: Outcome {
            holds: rad.is_empty(),
            justification: format!("Jacobson radical has rank {}", rad.len()),
        },
        spectra_compact: Outcome {
            holds: true,
            justification: "every spectrum is a finite set, hence compact".to_string(),
        },
        pm: Outcome { holds: check_pm(a).0, justification: check_pm(a).1 },
        zariski_hausdorff: Outcome {
            holds: hausdorff,
            justification: if hausdorff {
                format!("Zariski topology on {} points is discrete", chars.len())
            } else {
                "some singleton is not open in the Zariski topology".to_string()
            },
        },
        topologies_coincide: Outcome { holds: cmp.coincide, justification: cmp.justification },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rational()
    }

    #[test]
    fn split_quadratic_has_evaluation_characters_at_plus_minus_one() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-1, 0, 1])).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(chars.len(), 2);
        // Canonical order sorts by value tuple; both send 1 -> 1.
        assert!(chars[0].values()[0].try_eq(&f.from_integer(1)).unwrap());
        assert!(chars[0].values()[1].try_eq(&f.from_integer(-1)).unwrap());
        assert!(chars[1].values()[1].try_eq(&f.from_integer(1)).unwrap());
    }

    #[test]
    fn unsplit_quadratic_has_no_characters() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[1, 0, 1])).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(chars.is_empty());
        let check = check_gelfand(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(!check.holds);
        assert_eq!(check.semisimple_dim, 2);
    }

    #[test]
    fn nonresidue_quadratic_over_f5_is_not_gelfand() {
        // 2 is not a square mod 5: F_5[x]/(x^2 - 2) = F_25, no characters.
        let f = FieldDescriptor::prime(5).unwrap();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-2, 0, 1])).unwrap();
        let check = check_gelfand(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(check.characters, 0);
        assert!(!check.holds);
    }

    #[test]
    fn dual_numbers_are_gelfand_with_one_character() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[0, 0, 1])).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(chars.len(), 1);
        assert!(chars[0].values()[1].is_zero().unwrap());
        let check = check_gelfand(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(check.holds);
        assert_eq!(check.semisimple_dim, 1);
    }

    #[test]
    fn character_kernel_is_a_hyperplane_avoiding_the_unit() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-1, 0, 1])).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        for chi in &chars {
            let ker = chi.kernel_basis().unwrap();
            assert_eq!(ker.len(), 1);
            assert!(chi.evaluate(&ker[0]).is_zero().unwrap());
            assert!(chi.evaluate(&a.one()).try_eq(&f.from_integer(1)).unwrap());
        }
    }

    #[test]
    fn tiny_budget_fails_loudly_instead_of_truncating() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-1, 0, 1])).unwrap();
        let err = enumerate_characters(&a, 1).unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExceeded { budget: 1, .. }));
    }

    #[test]
    fn zariski_topology_on_split_points_is_discrete_and_hausdorff() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-1, 0, 1])).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        let zar = zariski_topology(&a, &chars).unwrap();
        assert_eq!(zar.closed_sets.len(), 4);
        assert!(zar.is_hausdorff());
    }

    #[test]
    fn gelfand_and_zariski_topologies_coincide_with_witnesses() {
        let f = q();
        let a = Algebra::polynomial_quotient(&f, &Poly::from_integers(&f, &[-1, 0, 1])).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        let cmp = topologies_coincide(&a, &chars).unwrap();
        assert!(cmp.coincide);
        // Each witness evaluates to 0 on its closed set and 1 outside.
        for (c, m, w) in &cmp.witnesses {
            for &i in c {
                assert!(chars[i].evaluate(w).is_zero().unwrap());
            }
            assert!(chars[*m].evaluate(w).try_eq(&f.from_integer(1)).unwrap());
        }
    }

    #[test]
    fn three_point_function_algebra_has_three_characters_over_f3() {
        let f = FieldDescriptor::prime(3).unwrap();
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let a = Algebra::pointwise(&f, &labels).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(chars.len(), 3);
        let report = property_report(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(report.gelfand.holds);
        assert!(report.semisimple.holds);
        assert!(report.pm.holds);
        assert!(report.zariski_hausdorff.holds);
        assert!(report.topologies_coincide.holds);
    }

    #[test]
    fn characters_over_q3_separate_at_reported_precision() {
        let f = FieldDescriptor::padic(3, 8).unwrap();
        let labels: Vec<String> = ["p", "q"].iter().map(|s| s.to_string()).collect();
        let a = Algebra::pointwise(&f, &labels).unwrap();
        let chars = enumerate_characters(&a, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(chars.len(), 2);
        let gel = gelfand_topology(&a, &chars).unwrap();
        assert!(gel.is_hausdorff());
    }
}
