//! The differentiation action of `T` on `S`, linear changes of coordinates,
//! dehomogenization with respect to a linear form, and homogenization of
//! affine operators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::ExactMatrix;
use crate::monomial::{monomial_basis, Monomial};
use crate::poly::{Poly, PolyRing, Side};

/// Random rational coefficients are drawn from `[-RATIONAL_COEFF_BOUND, RATIONAL_COEFF_BOUND]`.
pub const RATIONAL_COEFF_BOUND: i64 = 1000;

/// Apply the operator `g` to the form `F`.
///
/// `y^a` acts on `x^b` as `prod_i b_i!/(b_i - a_i)! * x^(b-a)` when
/// `a <= b` componentwise and as zero otherwise; the action is extended
/// bilinearly. Neither argument has to be homogeneous.
pub fn apply_op(g: &Poly, f: &Poly) -> Result<Poly> {
    g.check_side(Side::Operator)?;
    f.check_side(Side::Form)?;
    g.check_same_space(f)?;
    let field = f.field();
    if let Some(d) = f.degree() {
        field.check_degree(d)?;
    }
    let mut out = f.ring().zero();
    for (a, c) in g.terms() {
        for (b, v) in f.terms() {
            let Some(rest) = b.checked_div(a) else {
                continue;
            };
            let coeff = &(c * v) * &falling_factorial_product(field, b, a);
            out.add_term(rest, &coeff);
        }
    }
    Ok(out)
}

/// `prod_i b_i (b_i - 1) ... (b_i - a_i + 1)`.
fn falling_factorial_product(field: Field, b: &Monomial, a: &Monomial) -> Scalar {
    let mut acc = field.one();
    for (&bi, &ai) in b.exponents().iter().zip(a.exponents()) {
        for t in 0..ai {
            acc = &acc * &field.from_i64((bi - t) as i64);
        }
    }
    acc
}

/// An invertible change of coordinates on `S_1`.
///
/// Row `i` of the matrix holds the coefficients of the basis form `l_i` in
/// the standard coordinates; row 0 is the distinguished form `l`. New
/// coordinates `z_i = l_i` relate to old ones by `z = M x`, so that
/// `x = M^{-1} z`. The dual basis `l'_i` of `T_1` is given by the columns of
/// `M^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubstitution {
    matrix: ExactMatrix,
    inverse: ExactMatrix,
}

impl LinearSubstitution {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::MatrixShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected: matrix.rows(),
            });
        }
        let inverse = matrix.inverse().ok_or(Error::SingularMatrix)?;
        Ok(LinearSubstitution { matrix, inverse })
    }

    pub fn identity(field: Field, nvars: usize) -> Self {
        LinearSubstitution {
            matrix: ExactMatrix::identity(field, nvars),
            inverse: ExactMatrix::identity(field, nvars),
        }
    }

    /// Extend `l` to a basis: `l` first, then the coordinate forms other than
    /// the one at the first nonzero coefficient of `l` (the pivot), in order.
    pub fn from_linear_form(l: &Poly) -> Result<Self> {
        l.check_side(Side::Form)?;
        let coeffs = linear_coefficients(l)?;
        let field = l.field();
        let n = coeffs.len();
        let pivot = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroLinearForm)?;
        let mut rows = vec![coeffs];
        for j in (0..n).filter(|&j| j != pivot) {
            let mut e = vec![field.zero(); n];
            e[j] = field.one();
            rows.push(e);
        }
        Self::new(ExactMatrix::from_rows(field, n, rows))
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn nvars(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &ExactMatrix {
        &self.inverse
    }

    /// Index of the first nonzero coefficient of the distinguished form.
    pub fn pivot(&self) -> usize {
        self.matrix
            .row(0)
            .iter()
            .position(|c| !c.is_zero())
            .expect("invertible matrix has nonzero rows")
    }

    pub fn inverse(&self) -> LinearSubstitution {
        LinearSubstitution {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// The basis form `l_i` (with `l_0 = l`) in standard coordinates.
    pub fn basis_form(&self, i: usize) -> Poly {
        PolyRing::forms(self.field(), self.nvars()).linear(self.matrix.row(i))
    }

    pub fn distinguished_form(&self) -> Poly {
        self.basis_form(0)
    }

    /// The dual basis operator `l'_i = sum_k (M^{-1})_{k,i} y_k`.
    pub fn dual_form(&self, i: usize) -> Poly {
        let col: Vec<Scalar> = (0..self.nvars())
            .map(|k| self.inverse.get(k, i).clone())
            .collect();
        PolyRing::operators(self.field(), self.nvars()).linear(&col)
    }

    /// Rewrite an operator given in the dual coordinates `(l', l'_1, ...)`
    /// in the standard coordinates `y_0..y_n`.
    pub fn operator_to_standard(&self, g: &Poly) -> Result<Poly> {
        g.check_side(Side::Operator)?;
        self.check_nvars(g)?;
        let images: Vec<Poly> = (0..self.nvars()).map(|i| self.dual_form(i)).collect();
        Ok(substitute_variables(g, &images))
    }

    fn check_nvars(&self, p: &Poly) -> Result<()> {
        if p.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if p.nvars() != self.nvars() {
            return Err(Error::VariableCountMismatch {
                left: p.nvars(),
                right: self.nvars(),
            });
        }
        Ok(())
    }
}

/// Coefficients of a linear form, one per variable.
pub fn linear_coefficients(l: &Poly) -> Result<Vec<Scalar>> {
    if l.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    match l.degree() {
        Some(1) if l.is_homogeneous() => {}
        Some(d) => return Err(Error::NotLinear(d)),
        None => unreachable!(),
    }
    Ok((0..l.nvars())
        .map(|i| l.coefficient(&Monomial::var(l.nvars(), i)))
        .collect())
}

/// Replace variable `i` of `p` by `images[i]`.
pub fn substitute_variables(p: &Poly, images: &[Poly]) -> Poly {
    assert_eq!(images.len(), p.nvars());
    let ring = images.first().map(Poly::ring).unwrap_or(p.ring());
    let mut powers: Vec<Vec<Poly>> = images
        .iter()
        .map(|im| vec![ring.one(), im.clone()])
        .collect();
    let mut out = ring.zero();
    for (m, c) in p.terms() {
        let mut term = ring.constant(c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = &powers[i][powers[i].len() - 1] * &images[i];
                powers[i].push(next);
            }
            term = &term * &powers[i][e as usize];
        }
        out.add_scaled(&ring.field.one(), &term);
    }
    out
}

/// Rewrite `p` in the coordinates `z = M x`, i.e. return `p(M^{-1} z)`.
///
/// Degree and homogeneity are preserved; substituting by `M` and then by
/// `M^{-1}` is the identity.
pub fn substitute(p: &Poly, m: &LinearSubstitution) -> Result<Poly> {
    m.check_nvars(p)?;
    let ring = p.ring();
    let images: Vec<Poly> = (0..p.nvars())
        .map(|j| ring.linear(m.inverse.row(j)))
        .collect();
    Ok(substitute_variables(p, &images))
}

/// Dehomogenize the form `F` with respect to the linear form `l`.
///
/// Returns `F_l`, the form rewritten in the basis of
/// [`LinearSubstitution::from_linear_form`] with the `l` coordinate set to
/// 1, stored with variable 0 absent, together with the substitution used.
pub fn dehomogenize(f: &Poly, l: &Poly) -> Result<(Poly, LinearSubstitution)> {
    f.check_side(Side::Form)?;
    f.check_same_space(l)?;
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let m = LinearSubstitution::from_linear_form(l)?;
    let g = substitute(f, &m)?;
    let affine = g.ring().from_terms(g.terms().map(|(mon, c)| {
        let mut e = mon.exponents().to_vec();
        e[0] = 0;
        (Monomial::new(e), c.clone())
    }));
    Ok((affine, m))
}

/// Homogenize an affine polynomial (variable 0 absent) to degree `r` using
/// variable 0: `sum_i v0^(r-i) g_i` over the graded parts `g_i`.
///
/// For an operator `g = g_1 + ... + g_r` this is `(l')^(r-1) g_1 + ... + g_r`
/// in the dual coordinates of the accompanying substitution.
pub fn homogenize_element(g: &Poly, r: usize) -> Result<Poly> {
    if g.involves(0) {
        return Err(Error::InvalidArgument(
            "affine polynomial must not involve variable 0".into(),
        ));
    }
    if let Some(d) = g.degree() {
        if d > r {
            return Err(Error::HomogenizationDegree {
                target: r,
                degree: d,
            });
        }
    }
    Ok(g.ring().from_terms(g.terms().map(|(m, c)| {
        let mut e = m.exponents().to_vec();
        e[0] = (r - m.degree()) as u32;
        (Monomial::new(e), c.clone())
    })))
}

/// Random homogeneous form of degree `d` in the ring, one coefficient per
/// monomial: uniform over `F_p`, or an integer from the fixed box over `Q`.
pub fn random_form_with<R: Rng>(ring: PolyRing, d: usize, rng: &mut R) -> Poly {
    let basis = monomial_basis(ring.nvars, d);
    loop {
        let p = ring.from_terms(
            basis
                .iter()
                .map(|m| (m.clone(), random_scalar(ring.field, rng))),
        );
        if !p.is_zero() || basis.is_empty() {
            return p;
        }
    }
}

pub fn random_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Rational => {
            field.from_i64(rng.gen_range(-RATIONAL_COEFF_BOUND..=RATIONAL_COEFF_BOUND))
        }
        Field::Prime(p) => Scalar::Modular {
            value: rng.gen_range(0..p),
            modulus: p,
        },
    }
}

/// Seeded random form of degree `d` in `x0..xn`.
pub fn random_form(n: usize, d: usize, seed: u64, field: Field) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_form_with(PolyRing::forms(field, n + 1), d, &mut rng)
}

/// Seeded random nonzero linear form in `x0..xn`.
pub fn random_linear_form(n: usize, seed: u64, field: Field) -> Poly {
    random_form(n, 1, seed, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolar::hilbert_function;
    use crate::field::DEFAULT_PRIME;
    use proptest::prelude::*;

    fn q(n: usize) -> PolyRing {
        PolyRing::forms(Field::Rational, n)
    }

    fn op(p: &Poly) -> Poly {
        p.to_side(Side::Operator)
    }

    #[test]
    fn action_examples() {
        let r = q(2);
        let (x0, x1) = (r.var(0), r.var(1));
        let six = Field::Rational.from_i64(6);
        let two = Field::Rational.from_i64(2);
        assert_eq!(
            apply_op(&op(&x0.pow(2)), &x0.pow(3)).unwrap(),
            x0.scale(&six)
        );
        assert_eq!(
            apply_op(&op(&(&x0 * &x1)), &(&x0.pow(2) * &x1)).unwrap(),
            x0.scale(&two)
        );
        assert!(apply_op(&op(&x1), &x0.pow(2)).unwrap().is_zero());
    }

    #[test]
    fn action_errors() {
        let r = PolyRing::forms(Field::Prime(3), 2);
        let x0 = r.var(0);
        assert_eq!(
            apply_op(&op(&x0), &x0.pow(3)),
            Err(Error::CharacteristicTooSmall {
                characteristic: 3,
                degree: 3
            })
        );
        let a = q(2).var(0);
        let b = q(3).var(0);
        assert!(matches!(
            apply_op(&op(&a), &b),
            Err(Error::VariableCountMismatch { .. })
        ));
        assert!(matches!(apply_op(&a, &a), Err(Error::SideMismatch { .. })));
    }

    #[test]
    fn substitution_examples() {
        let r = q(2);
        let f = r.var(0).pow(3);
        let id = LinearSubstitution::identity(Field::Rational, 2);
        assert_eq!(substitute(&f, &id).unwrap(), f);
        let z = Field::Rational.zero();
        let o = Field::Rational.one();
        let swap = LinearSubstitution::new(ExactMatrix::from_rows(
            Field::Rational,
            2,
            vec![vec![z.clone(), o.clone()], vec![o, z]],
        ))
        .unwrap();
        assert_eq!(substitute(&f, &swap).unwrap(), r.var(1).pow(3));
    }

    #[test]
    fn singular_substitution_rejected() {
        let f = Field::Rational;
        let m = ExactMatrix::from_rows(f, 2, vec![vec![f.one(), f.one()], vec![f.one(), f.one()]]);
        assert_eq!(LinearSubstitution::new(m), Err(Error::SingularMatrix));
    }

    #[test]
    fn dehomogenize_examples() {
        let r = q(2);
        let (x0, x1) = (r.var(0), r.var(1));
        let (f, m) = dehomogenize(&(&x0.pow(3) + &x1.pow(3)), &x0).unwrap();
        assert_eq!(f, &r.one() + &x1.pow(3));
        assert_eq!(m, LinearSubstitution::identity(Field::Rational, 2));

        let r3 = q(3);
        let (x0, x1, x2) = (r3.var(0), r3.var(1), r3.var(2));
        let big = &x0 * &(&(&x0.pow(2) + &x1.pow(2)) + &x2.pow(2));
        let (f, _) = dehomogenize(&big, &x0).unwrap();
        assert_eq!(f, &(&r3.one() + &x1.pow(2)) + &x2.pow(2));

        let l = &(&x0 + &x1.scale(&Field::Rational.from_i64(2))) - &x2;
        let (f, m) = dehomogenize(&l.pow(3), &l).unwrap();
        assert_eq!(f, r3.one());
        assert_eq!(m.distinguished_form(), l);
        assert_eq!(dehomogenize(&big, &r3.zero()), Err(Error::ZeroLinearForm));
    }

    #[test]
    fn pivot_rule() {
        let r = q(3);
        let l = &r.var(1) + &r.var(2);
        let m = LinearSubstitution::from_linear_form(&l).unwrap();
        assert_eq!(m.pivot(), 1);
        assert_eq!(m.basis_form(1), r.var(0));
        assert_eq!(m.basis_form(2), r.var(2));
        // dual basis pairs with the basis
        for i in 0..3 {
            for j in 0..3 {
                let v = apply_op(&m.dual_form(i), &m.basis_form(j)).unwrap();
                let expect = if i == j { r.one() } else { r.zero() };
                assert_eq!(v, expect);
            }
        }
    }

    #[test]
    fn homogenize_examples() {
        let r = PolyRing::operators(Field::Rational, 3);
        let (y0, y1, y2) = (r.var(0), r.var(1), r.var(2));
        assert_eq!(
            homogenize_element(&(&y2 - &y1.pow(2)), 2).unwrap(),
            &(&y0 * &y2) - &y1.pow(2)
        );
        assert_eq!(homogenize_element(&y1, 1).unwrap(), y1);
        assert_eq!(
            homogenize_element(&(&r.one() + &y1), 3).unwrap(),
            &y0.pow(3) + &(&y0.pow(2) * &y1)
        );
        assert_eq!(
            homogenize_element(&y1.pow(2), 1),
            Err(Error::HomogenizationDegree {
                target: 1,
                degree: 2
            })
        );
        assert!(homogenize_element(&y0, 1).is_err());
    }

    #[test]
    fn random_forms() {
        let p = random_form(2, 3, 7, Field::default_prime());
        assert_eq!(p.degree(), Some(3));
        assert!(p.is_homogeneous());
        assert!(p.num_terms() <= 10);
        assert_eq!(p, random_form(2, 3, 7, Field::default_prime()));
        assert_ne!(p, random_form(2, 3, 8, Field::default_prime()));
        let r = random_form(2, 3, 7, Field::Rational);
        assert!(r.terms().all(|(_, c)| {
            let v = c.as_rational().unwrap();
            v.is_integer() && v.numer().magnitude() <= &1000u32.into()
        }));
    }

    #[test]
    fn generic_cubic_in_nine_variables() {
        let mut good = 0;
        for seed in 0..100 {
            let f = random_form(8, 3, seed, Field::Prime(DEFAULT_PRIME));
            if hilbert_function(&f).unwrap().values() == [1, 9, 9, 1] {
                good += 1;
            }
        }
        assert!(good >= 99, "{good}/100");
    }

    fn arb_poly(nvars: usize, side: Side, max_deg: usize) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u32..=max_deg as u32, nvars),
                -5i64..=5,
            ),
            0..6,
        )
        .prop_map(move |terms| {
            let ring = PolyRing::new(Field::Rational, nvars, side);
            ring.from_terms(
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::new(e), Field::Rational.from_i64(c))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn action_is_a_ring_action(g1 in arb_poly(3, Side::Operator, 2),
                                   g2 in arb_poly(3, Side::Operator, 2),
                                   f in arb_poly(3, Side::Form, 3)) {
            let lhs = apply_op(&(&g1 * &g2), &f).unwrap();
            let rhs = apply_op(&g1, &apply_op(&g2, &f).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn action_is_bilinear(g1 in arb_poly(3, Side::Operator, 2),
                              g2 in arb_poly(3, Side::Operator, 2),
                              f1 in arb_poly(3, Side::Form, 3),
                              f2 in arb_poly(3, Side::Form, 3),
                              c in -4i64..4) {
            let c = Field::Rational.from_i64(c);
            let lhs = apply_op(&(&g1.scale(&c) + &g2), &f1).unwrap();
            let rhs = &apply_op(&g1, &f1).unwrap().scale(&c) + &apply_op(&g2, &f1).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = apply_op(&g1, &(&f1 + &f2.scale(&c))).unwrap();
            let rhs = &apply_op(&g1, &f1).unwrap() + &apply_op(&g1, &f2).unwrap().scale(&c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn substitution_round_trip(seed in 0u64..1000, d in 1usize..4) {
            let f = random_form(2, d, seed, Field::Rational);
            let mut rng = ChaCha8Rng::seed_from_u64(seed + 1);
            let rows: Vec<Vec<Scalar>> = (0..3)
                .map(|_| (0..3).map(|_| Field::Rational.from_i64(rand::Rng::gen_range(&mut rng, -3..=3))).collect())
                .collect();
            let Ok(m) = LinearSubstitution::new(ExactMatrix::from_rows(Field::Rational, 3, rows)) else {
                return Ok(());
            };
            let g = substitute(&f, &m).unwrap();
            prop_assert_eq!(g.degree(), Some(d));
            prop_assert!(g.is_homogeneous());
            prop_assert_eq!(substitute(&g, &m.inverse()).unwrap(), f.clone());
            prop_assert_eq!(hilbert_function(&g).unwrap(), hilbert_function(&f).unwrap());
        }

        #[test]
        fn dehomogenize_then_rehomogenize(seed in 0u64..1000, d in 1usize..5) {
            let f = random_form(2, d, seed, Field::Rational);
            let l = random_linear_form(2, seed + 17, Field::Rational);
            let (affine, m) = dehomogenize(&f, &l).unwrap();
            let in_new = homogenize_element(&affine, d).unwrap();
            prop_assert_eq!(substitute(&in_new, &m.inverse()).unwrap(), f);
        }
    }
}
