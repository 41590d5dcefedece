//! Graded pieces of homogeneous ideals, computed degree by degree with
//! linear algebra only.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::ExactMatrix;
use crate::monomial::monomial_basis;
use crate::poly::{Poly, PolyRing};
use crate::subspace::Subspace;

/// A subspace of the degree-`k` part of a polynomial ring, held as a
/// reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    degree: usize,
    space: Subspace,
}

impl GradedPiece {
    /// Span of `polys`, each of which must be zero or homogeneous of degree `degree`.
    pub fn new<I: IntoIterator<Item = Poly>>(
        ring: PolyRing,
        degree: usize,
        polys: I,
    ) -> Result<Self> {
        let mut space = Subspace::new(ring);
        for p in polys {
            if p.ring() != ring {
                return Err(if p.field() != ring.field {
                    Error::FieldMismatch
                } else if p.nvars() != ring.nvars {
                    Error::VariableCountMismatch {
                        left: p.nvars(),
                        right: ring.nvars,
                    }
                } else {
                    Error::SideMismatch {
                        expected: ring.side,
                        found: p.side(),
                    }
                });
            }
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            if p.degree() != Some(degree) {
                return Err(Error::InvalidArgument(format!(
                    "expected degree {degree}, got {}",
                    p.degree().unwrap_or(0)
                )));
            }
            space.insert(p);
        }
        Ok(GradedPiece { degree, space })
    }

    pub fn zero(ring: PolyRing, degree: usize) -> Self {
        GradedPiece {
            degree,
            space: Subspace::new(ring),
        }
    }

    /// The whole degree-`degree` part of the ring.
    pub fn full(ring: PolyRing, degree: usize) -> Self {
        let polys = monomial_basis(ring.nvars, degree)
            .into_iter()
            .map(|m| ring.term(ring.field.one(), m));
        GradedPiece {
            degree,
            space: Subspace::spanned_by(ring, polys),
        }
    }

    /// Span of coefficient vectors over `monomial_basis(nvars, degree)`.
    pub fn from_coordinates(ring: PolyRing, degree: usize, vectors: &[Vec<Scalar>]) -> Self {
        let basis = monomial_basis(ring.nvars, degree);
        GradedPiece {
            degree,
            space: Subspace::spanned_by(
                ring,
                vectors.iter().map(|v| ring.from_coordinates(&basis, v)),
            ),
        }
    }

    pub fn ring(&self) -> PolyRing {
        self.space.ring()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension of the ambient degree-`k` space minus this piece.
    pub fn codim(&self) -> usize {
        monomial_basis(self.ring().nvars, self.degree).len() - self.dim()
    }

    /// Echelon basis, greatest leading monomial first.
    pub fn basis(&self) -> Vec<Poly> {
        self.space.basis().cloned().collect()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.space.contains(p)
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    fn check_comparable(&self, other: &GradedPiece) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::InvalidArgument(format!(
                "degree mismatch: {} vs {}",
                self.degree, other.degree
            )));
        }
        if self.ring() != other.ring() {
            return Err(Error::VariableCountMismatch {
                left: self.ring().nvars,
                right: other.ring().nvars,
            });
        }
        Ok(())
    }
}

/// Echelon basis of the right null space of `m`.
pub fn kernel(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    m.kernel()
}

/// Degree-`t` piece of the ideal generated by the given pieces:
/// the span of `m * g` over generators `g` of degree `k <= t` and monomials
/// `m` of degree `t - k`.
pub fn ideal_piece(ring: PolyRing, generators: &[GradedPiece], t: usize) -> Result<GradedPiece> {
    if !generators.is_empty() && generators.iter().all(|g| g.degree() > t) {
        return Err(Error::DegreeBelowGenerators { t });
    }
    let mut space = Subspace::new(ring);
    for gens in generators {
        if gens.ring() != ring {
            return Err(Error::VariableCountMismatch {
                left: gens.ring().nvars,
                right: ring.nvars,
            });
        }
        if gens.degree() > t {
            continue;
        }
        let shifts = monomial_basis(ring.nvars, t - gens.degree());
        for g in gens.space.basis() {
            for m in &shifts {
                space.insert(g.shift(m));
            }
        }
    }
    Ok(GradedPiece { degree: t, space })
}

/// Whether `a` is a subspace of `b`.
pub fn piece_contained(a: &GradedPiece, b: &GradedPiece) -> Result<bool> {
    a.check_comparable(b)?;
    Ok(a.space.is_subspace_of(&b.space))
}

/// Outcome of the degreewise emptiness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Emptiness {
    /// The ideal contains every form of this degree, so the generators have
    /// no common zero in projective space over the algebraic closure.
    CertifiedEmpty { degree: usize },
    /// No certificate up to `t_max`; `(t, dim T_t - dim I_t)` for each `t`
    /// tried. This never asserts that a common zero exists.
    Undetermined { quotient_dims: Vec<(usize, usize)> },
}

impl Emptiness {
    pub fn is_certified(&self) -> bool {
        matches!(self, Emptiness::CertifiedEmpty { .. })
    }
}

/// Default search bound `2 * (max generator degree) + 4`.
pub fn default_tmax(generators: &[GradedPiece]) -> usize {
    2 * generators
        .iter()
        .map(GradedPiece::degree)
        .max()
        .unwrap_or(0)
        + 4
}

/// Look for the first `t` between the top generator degree and `t_max` at
/// which the generated ideal fills the whole degree-`t` space.
pub fn empty_projective(
    ring: PolyRing,
    generators: &[GradedPiece],
    t_max: usize,
) -> Result<Emptiness> {
    let start = generators
        .iter()
        .map(GradedPiece::degree)
        .max()
        .unwrap_or(0);
    let mut quotient_dims = Vec::new();
    for t in start..=t_max {
        let piece = ideal_piece(ring, generators, t)?;
        let q = piece.codim();
        if q == 0 {
            return Ok(Emptiness::CertifiedEmpty { degree: t });
        }
        quotient_dims.push((t, q));
    }
    Ok(Emptiness::Undetermined { quotient_dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolar::annihilator_piece;
    use crate::field::Field;

    fn ops(n: usize) -> PolyRing {
        PolyRing::operators(Field::Rational, n)
    }

    fn piece(ring: PolyRing, polys: Vec<Poly>) -> GradedPiece {
        let d = polys[0].degree().unwrap();
        GradedPiece::new(ring, d, polys).unwrap()
    }

    #[test]
    fn ideal_piece_examples() {
        let r = ops(2);
        let (y0, y1) = (r.var(0), r.var(1));
        let p = ideal_piece(r, &[piece(r, vec![y0.clone()])], 2).unwrap();
        assert_eq!(p.basis(), vec![y0.pow(2), &y0 * &y1]);
        let z = ideal_piece(r, &[], 3).unwrap();
        assert_eq!(z.dim(), 0);
        assert_eq!(
            ideal_piece(r, &[piece(r, vec![y0.pow(2)])], 1),
            Err(Error::DegreeBelowGenerators { t: 1 })
        );
    }

    #[test]
    fn reducible_cubic_generates_nine_cubics() {
        // F = x0(x0^2 + x1^2 + x2^2): three quadric generators times three variables
        let f = PolyRing::forms(Field::Rational, 3);
        let (x0, x1, x2) = (f.var(0), f.var(1), f.var(2));
        let form = &x0 * &(&(&x0.pow(2) + &x1.pow(2)) + &x2.pow(2));
        let perp2 = annihilator_piece(&form, 2).unwrap();
        assert_eq!(perp2.dim(), 3);
        let i3 = ideal_piece(ops(3), &[perp2], 3).unwrap();
        assert_eq!(i3.dim(), 9);
    }

    #[test]
    fn containment() {
        let r = ops(2);
        let (y0, y1) = (r.var(0), r.var(1));
        let a = piece(r, vec![y0.clone()]);
        let b = piece(r, vec![y1.clone()]);
        assert!(piece_contained(&a, &a).unwrap());
        assert!(!piece_contained(&a, &b).unwrap());
        let full = GradedPiece::full(r, 1);
        assert!(piece_contained(&a, &full).unwrap());
        assert!(piece_contained(&GradedPiece::zero(r, 2), &GradedPiece::full(r, 2)).unwrap());
        assert!(piece_contained(&a, &GradedPiece::full(r, 2)).is_err());
    }

    #[test]
    fn emptiness_examples() {
        let r = ops(2);
        let (y0, y1) = (r.var(0), r.var(1));
        match empty_projective(r, &[piece(r, vec![y0.clone()])], 4).unwrap() {
            Emptiness::Undetermined { quotient_dims } => {
                assert_eq!(quotient_dims, vec![(1, 1), (2, 1), (3, 1), (4, 1)]);
            }
            other => panic!("planted zero certified empty: {other:?}"),
        }
        assert_eq!(
            empty_projective(r, &[piece(r, vec![y0, y1])], 2).unwrap(),
            Emptiness::CertifiedEmpty { degree: 1 }
        );
    }

    #[test]
    fn planted_zero_never_certified() {
        // quadrics vanishing at [1:1:1]
        let r = ops(3);
        let (y0, y1, y2) = (r.var(0), r.var(1), r.var(2));
        let gens = vec![
            &y0.pow(2) - &(&y1 * &y2),
            &y1.pow(2) - &(&y0 * &y2),
            &y2.pow(2) - &(&y0 * &y1),
            &(&y0 * &y1) - &(&y1 * &y2),
        ];
        let e = empty_projective(r, &[piece(r, gens)], 8).unwrap();
        assert!(!e.is_certified());
    }

    #[test]
    fn dim_monotone_in_generators() {
        let r = ops(3);
        let vars: Vec<Poly> = (0..3).map(|i| r.var(i)).collect();
        let mut gens = Vec::new();
        let mut last = 0;
        for v in &vars {
            gens.push(piece(r, vec![v.pow(2)]));
            let d = ideal_piece(r, &gens, 3).unwrap().dim();
            assert!(d >= last);
            last = d;
        }
        assert_eq!(last, 10 - 1);
    }

    #[test]
    fn mutual_containment_iff_equal() {
        let r = ops(3);
        let (y0, y1, y2) = (r.var(0), r.var(1), r.var(2));
        let a = piece(r, vec![&y0 + &y1, y2.clone()]);
        let b = piece(r, vec![&(&y0 + &y1) + &y2, &y2 - &(&y0 + &y1)]);
        assert!(piece_contained(&a, &b).unwrap() && piece_contained(&b, &a).unwrap());
        assert_eq!(a, b);
    }
}
