//! Three independent classification routes, the combined report, orbit census
//! and prime-set search.

mod census;
mod search;

pub use census::{
    enumerate_orbits, gaussian_binomial, grassmannian, CensusLabel, OrbitCensus, OrbitClass,
    CENSUS_LIMIT,
};
pub use search::{search_prime_sets, tame_primes, PrimeSetSearch, SearchHit, SEARCH_BOUND_LIMIT};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exterior::{pluecker_form, pluecker_polar, GroupWord};
use crate::field_linalg::{FieldCtx, FieldElem, SquareClass, Subspace};
use crate::koch::{
    linking_matrix, linking_matrix_with_roots, presentation_from_linking, validate, LinkingData,
};
use crate::lie::{
    has_five_dim_centralizer, is_mild, quotient_dims, series_check, GradedDims,
    QuadraticPresentation,
};
use crate::reduction::{reduce_plane, OrbitLabel, ReductionResult};

/// Degree through which the report computes `a_n`; enough to separate the orbits.
pub const REPORT_DEGREE: usize = 4;

/// Note attached when the relators are linearly dependent.
pub const CUP_PRODUCT_NOTE: &str = "CupProductNotSurjective";

/// Reduces the complement plane to its canonical form.
pub fn classify_by_reduction(q: &QuadraticPresentation) -> Result<ReductionResult<OrbitLabel>> {
    q.require_full_rank()?;
    reduce_plane(q.ctx(), &q.complement())
}

/// Reads the orbit off `a_3`, `a_4` and, for the mild pair, the centralizer test.
pub fn classify_by_invariants(q: &QuadraticPresentation) -> Result<OrbitLabel> {
    let dims = quotient_dims(q, REPORT_DEGREE)?;
    label_from_invariants(q, &dims)
}

fn label_from_invariants(q: &QuadraticPresentation, dims: &GradedDims) -> Result<OrbitLabel> {
    match (dims.get(3), dims.get(4)) {
        (Some(5), _) => Ok(OrbitLabel::O2),
        (Some(4), Some(7)) => Ok(OrbitLabel::O3),
        (Some(4), Some(6)) => {
            if has_five_dim_centralizer(q)? {
                Ok(OrbitLabel::O1)
            } else {
                Ok(OrbitLabel::O4 {
                    g: q.ctx().smallest_generator(),
                })
            }
        }
        _ => Err(Error::InternalInvariantViolation(format!(
            "dimensions {:?} match none of the four orbits",
            dims.as_slice()
        ))),
    }
}

/// Restricts the Pluecker form to the complement plane and reads off its type.
pub fn classify_by_quadric(q: &QuadraticPresentation) -> Result<OrbitLabel> {
    q.require_full_rank()?;
    quadric_label(q.ctx(), &q.complement())
}

/// Orbit of a plane from the Gram matrix of `Q` on it.
pub fn quadric_label(ctx: &FieldCtx, plane: &Subspace) -> Result<OrbitLabel> {
    if plane.dim() != 2 || plane.ambient_dim() != 6 {
        return Err(Error::BadDimension {
            expected: 2,
            found: plane.dim(),
        });
    }
    let u = plane.basis().row(0);
    let v = plane.basis().row(1);
    let half = ctx.inv(2);
    let b11 = pluecker_form(ctx, u);
    let b22 = pluecker_form(ctx, v);
    let b12 = ctx.mul(pluecker_polar(ctx, u, v), half);
    let det = ctx.sub(ctx.mul(b11, b22), ctx.mul(b12, b12));
    Ok(if det != 0 {
        match ctx.square_class(ctx.neg(det)) {
            SquareClass::NonSquare => OrbitLabel::O4 {
                g: ctx.smallest_generator(),
            },
            _ => OrbitLabel::O1,
        }
    } else if b11 == 0 && b22 == 0 && b12 == 0 {
        OrbitLabel::O2
    } else {
        OrbitLabel::O3
    })
}

/// How much of the cross-checking `classify_with` performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Quadric label, reduction witness and dimensions.
    Fast,
    /// Adds the invariant route and requires all three labels to agree.
    Verify,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportInput {
    Matrix(Vec<Vec<FieldElem>>),
    PrimeSet { p: u64, primes: [u64; 4] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodLabels {
    pub reduction: Option<OrbitLabel>,
    pub invariants: Option<OrbitLabel>,
    pub quadric: Option<OrbitLabel>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub input: ReportInput,
    pub p: u32,
    pub orbit: Option<OrbitLabel>,
    pub mild: bool,
    pub dims: GradedDims,
    #[serde(serialize_with = "word_as_string")]
    pub witness: Option<GroupWord>,
    #[serde(serialize_with = "subspace_rows")]
    pub complement: Subspace,
    pub linking: Option<LinkingData>,
    pub methods: MethodLabels,
    pub notes: Vec<String>,
}

fn word_as_string<S: Serializer>(
    w: &Option<GroupWord>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(w) => s.serialize_str(&w.to_string()),
        None => s.serialize_none(),
    }
}

fn subspace_rows<S: Serializer>(u: &Subspace, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(u.basis().row_vecs())
}

/// Full classification with all three routes.
pub fn classify(q: &QuadraticPresentation) -> Result<ClassificationReport> {
    classify_with(q, Mode::Verify)
}

pub fn classify_with(q: &QuadraticPresentation, mode: Mode) -> Result<ClassificationReport> {
    let ctx = q.ctx();
    let input = ReportInput::Matrix(q.relators().row_vecs());
    let complement = q.complement();
    let rank = q.rank();
    if rank < 4 {
        return Ok(ClassificationReport {
            input,
            p: ctx.p(),
            orbit: None,
            mild: false,
            dims: GradedDims::new(Vec::new()),
            witness: None,
            complement,
            linking: None,
            methods: MethodLabels {
                reduction: None,
                invariants: None,
                quadric: None,
                agree: true,
            },
            notes: vec![format!("{CUP_PRODUCT_NOTE}: relator rank {rank} < 4")],
        });
    }

    let quadric = quadric_label(ctx, &complement)?;
    let reduced = reduce_plane(ctx, &complement)?;
    let dims = quotient_dims(q, REPORT_DEGREE)?;
    let invariants = match mode {
        Mode::Verify => Some(label_from_invariants(q, &dims)?),
        Mode::Fast => None,
    };
    let agree = reduced.label == quadric && invariants.is_none_or(|l| l == quadric);
    if !agree {
        return Err(Error::InternalInvariantViolation(format!(
            "routes disagree: reduction {}, invariants {:?}, quadric {}",
            reduced.label, invariants, quadric
        )));
    }
    let mild = quadric.is_mild();
    if is_mild(&dims)? != mild || series_check(&dims, 4) != mild {
        return Err(Error::InternalInvariantViolation(format!(
            "orbit {} contradicts dimensions {:?}",
            quadric,
            dims.as_slice()
        )));
    }
    Ok(ClassificationReport {
        input,
        p: ctx.p(),
        orbit: Some(quadric),
        mild,
        dims,
        witness: Some(reduced.witness),
        complement,
        linking: None,
        methods: MethodLabels {
            reduction: Some(reduced.label),
            invariants,
            quadric: Some(quadric),
            agree,
        },
        notes: Vec::new(),
    })
}

/// Classifies the presentation attached to given linking data.
pub fn classify_linking(d: &LinkingData, mode: Mode) -> Result<ClassificationReport> {
    let ctx = FieldCtx::new(d.primes.p)?;
    let q = presentation_from_linking(d, ctx);
    let mut report = classify_with(&q, mode)?;
    report.input = ReportInput::PrimeSet {
        p: d.primes.p,
        primes: d.primes.q,
    };
    report.linking = Some(d.clone());
    Ok(report)
}

/// Validates the primes, builds the linking matrix with the smallest primitive
/// roots and classifies.
pub fn classify_prime_set(p: u64, q: [u64; 4]) -> Result<ClassificationReport> {
    classify_prime_set_with(p, q, Mode::Verify)
}

pub fn classify_prime_set_with(p: u64, q: [u64; 4], mode: Mode) -> Result<ClassificationReport> {
    let s = validate(p, q)?;
    classify_linking(&linking_matrix(&s)?, mode)
}

/// As `classify_prime_set` with caller-chosen primitive roots.
pub fn classify_prime_set_with_roots(
    p: u64,
    q: [u64; 4],
    roots: [u64; 4],
) -> Result<ClassificationReport> {
    let s = validate(p, q)?;
    classify_linking(&linking_matrix_with_roots(&s, roots)?, Mode::Verify)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koch::primitive_roots;
    use crate::reduction::canonical_plane;

    fn k(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    #[test]
    fn reduction_route_examples() {
        let k3 = k(3);
        let q = QuadraticPresentation::from_int_rows(
            k3,
            &[
                [0, 1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 1, 0],
            ],
        );
        let r = classify_by_reduction(&q).unwrap();
        assert_eq!(r.label, OrbitLabel::O1);
        assert_eq!(
            q.complement(),
            Subspace::from_int_rows(&k3, &[[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1]])
        );

        for p in [3u64, 5, 7, 11] {
            let kp = k(p);
            let g = kp.smallest_generator() as i64;
            let r2 = QuadraticPresentation::from_int_rows(
                kp,
                &[
                    [1, 0, 0, 0, 0, 0],
                    [0, 0, 0, 0, 0, 1],
                    [0, 0, 1, -1, 0, 0],
                    [0, g, 0, 0, -1, 0],
                ],
            );
            assert_eq!(classify_by_reduction(&r2).unwrap().label.number(), 4);
        }

        let cycle = QuadraticPresentation::from_int_rows(
            k3,
            &[
                [1, 0, 0, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 0, 1],
                [0, 0, -1, 0, 0, 0],
            ],
        );
        assert_eq!(classify_by_reduction(&cycle).unwrap().label, OrbitLabel::O1);
        assert_eq!(classify_by_invariants(&cycle).unwrap(), OrbitLabel::O1);
    }

    #[test]
    fn quadric_on_canonical_planes() {
        for p in [3u64, 5, 7, 11, 13] {
            let kp = k(p);
            for n in 1..=4 {
                let l = OrbitLabel::from_number(&kp, n).unwrap();
                assert_eq!(quadric_label(&kp, &canonical_plane(&kp, l)).unwrap(), l);
            }
        }
    }

    #[test]
    fn invariant_route_on_canonical_planes() {
        for p in [3u64, 5, 7] {
            let kp = k(p);
            for n in 1..=4 {
                let l = OrbitLabel::from_number(&kp, n).unwrap();
                let q =
                    QuadraticPresentation::from_complement(kp, &canonical_plane(&kp, l)).unwrap();
                assert_eq!(classify_by_invariants(&q).unwrap(), l);
            }
        }
    }

    #[test]
    fn invariant_route_rejects_impossible_dims() {
        let k3 = k(3);
        let q = QuadraticPresentation::from_complement(k3, &canonical_plane(&k3, OrbitLabel::O1))
            .unwrap();
        let bad = GradedDims::new(vec![4, 2, 3, 1]);
        assert!(matches!(
            label_from_invariants(&q, &bad),
            Err(Error::InternalInvariantViolation(_))
        ));
    }

    #[test]
    fn prime_set_examples() {
        let expected = [
            ([31, 37, 43, 67], 1, true),
            ([67, 79, 97, 127], 2, false),
            ([61, 73, 79, 97], 3, false),
            ([31, 37, 61, 67], 4, true),
        ];
        for (q, orbit, mild) in expected {
            let r = classify_prime_set(3, q).unwrap();
            assert_eq!(r.orbit.map(|o| o.number()), Some(orbit), "{q:?}");
            assert_eq!(r.mild, mild);
            assert!(r.methods.agree);
            assert!(r.linking.is_some());
        }
    }

    #[test]
    fn second_primitive_roots_give_same_orbit() {
        let q = [31, 37, 43, 67];
        let roots = q.map(|x| primitive_roots(x).nth(1).unwrap());
        let r = classify_prime_set_with_roots(3, q, roots).unwrap();
        assert_eq!(r.orbit, Some(OrbitLabel::O1));
    }

    #[test]
    fn rank_deficient_report() {
        let s = validate(3, [31, 37, 43, 67]).unwrap();
        let mut d = linking_matrix(&s).unwrap();
        d.l = [[0; 4]; 4];
        let r = classify_linking(&d, Mode::Verify).unwrap();
        assert_eq!(r.orbit, None);
        assert!(!r.mild);
        assert!(r.notes[0].starts_with(CUP_PRODUCT_NOTE));
        assert!(matches!(
            classify_by_quadric(&presentation_from_linking(&d, k(3))),
            Err(Error::RankDeficient { rank: 0 })
        ));
    }

    #[test]
    fn json_key_order() {
        let r = classify_prime_set(3, [31, 37, 43, 67]).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let keys = [
            "\"input\"",
            "\"p\"",
            "\"orbit\"",
            "\"mild\"",
            "\"dims\"",
            "\"witness\"",
            "\"complement\"",
            "\"linking\"",
            "\"methods\"",
            "\"notes\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
        assert!(s.contains("\"orbit\":1"));
    }
}
