//! The apolarity engine.
//!
//! Catalecticants and Hilbert functions of `T_F = T / F^⊥`, graded pieces of
//! `F^⊥`, the space `Diff(f)` of all partials of an affine polynomial, the
//! affine annihilator `f^⊥`, the local Gorenstein scheme `Γ(F_l)` with a
//! check that its homogenized ideal lies in `F^⊥`, and the apolarity-lemma
//! check for sums of powers of linear forms.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::graded::{ideal_piece, piece_contained, GradedPiece};
use crate::linalg::ExactMatrix;
use crate::monomial::{affine_monomials, monomial_basis, Monomial};
use crate::poly::{Poly, PolyRing, Side};
use crate::ring::{
    apply_op, dehomogenize, homogenize_element, linear_coefficients, substitute, LinearSubstitution,
};
use crate::subspace::Subspace;

fn check_form(f: &Poly) -> Result<usize> {
    f.check_side(Side::Form)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = f.degree().expect("nonzero");
    f.field().check_degree(d)?;
    Ok(d)
}

fn index_of(basis: &[Monomial]) -> HashMap<&Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Matrix of `T_k -> S_{d-k}`, `g -> g(F)`.
///
/// Columns are indexed by `monomial_basis` in degree `k` on the operator
/// side, rows by `monomial_basis` in degree `d - k` on the form side.
pub fn catalecticant(f: &Poly, k: usize) -> Result<ExactMatrix> {
    let d = check_form(f)?;
    if k > d {
        return Err(Error::DegreeOutOfRange { k, max: d });
    }
    let n = f.nvars();
    let field = f.field();
    let cols = monomial_basis(n, k);
    let rows = monomial_basis(n, d - k);
    let row_index = index_of(&rows);
    let mut m = ExactMatrix::zeros(field, rows.len(), cols.len());
    let g_ring = f.ring().dual();
    for (j, a) in cols.iter().enumerate() {
        let image = apply_op(&g_ring.term(field.one(), a.clone()), f)?;
        for (b, c) in image.terms() {
            m.set(row_index[b], j, c.clone());
        }
    }
    Ok(m)
}

/// Hilbert function `(h_0, ..., h_d)` of `T_F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction(Vec<usize>);

impl HilbertFunction {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Socle degree `d`.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    /// `h_k = h_{d-k}` for all `k`.
    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `dim T_F`, the sum of all values.
    pub fn length(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn hilbert_function(f: &Poly) -> Result<HilbertFunction> {
    let d = check_form(f)?;
    (0..=d)
        .map(|k| catalecticant(f, k).map(|m| m.rank()))
        .collect::<Result<Vec<_>>>()
        .map(HilbertFunction)
}

/// `F^⊥_k`, the kernel of the degree-`k` catalecticant; all of `T_k` when
/// `k = d + 1`.
pub fn annihilator_piece(f: &Poly, k: usize) -> Result<GradedPiece> {
    let d = check_form(f)?;
    let ring = f.ring().dual();
    if k == d + 1 {
        return Ok(GradedPiece::full(ring, k));
    }
    if k > d + 1 {
        return Err(Error::DegreeOutOfRange { k, max: d + 1 });
    }
    let cat = catalecticant(f, k)?;
    Ok(GradedPiece::from_coordinates(ring, k, &cat.kernel()))
}

/// The span of all partial derivatives, of every order, of an affine
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffSpace {
    space: Subspace,
}

impl DiffSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<Poly> {
        self.space.basis().cloned().collect()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.space.contains(p)
    }
}

/// Close `{f}` under first partials: derive in variable order, breadth
/// first, keeping whatever is independent of the span so far.
pub fn diff_space(f: &Poly) -> Result<DiffSpace> {
    f.check_side(Side::Form)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut space = Subspace::new(f.ring());
    let mut queue = VecDeque::from([f.clone()]);
    space.insert(f.clone());
    while let Some(p) = queue.pop_front() {
        for i in 0..p.nvars() {
            let d = p.derivative(i);
            if space.insert(d.clone()) {
                queue.push_back(d);
            }
        }
    }
    Ok(DiffSpace { space })
}

fn check_affine(f: &Poly) -> Result<usize> {
    f.check_side(Side::Form)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.involves(0) {
        return Err(Error::InvalidArgument(
            "affine polynomial must not involve variable 0".into(),
        ));
    }
    let d = f.degree().expect("nonzero");
    f.field().check_degree(d)?;
    Ok(d)
}

/// The linear map from operators of degree `<= k` in `y1..yn` to
/// polynomials of degree `<= deg f`, `g -> g(f)`, with its column monomials.
fn affine_action_matrix(f: &Poly, k: usize) -> Result<(ExactMatrix, Vec<Monomial>)> {
    let d = check_affine(f)?;
    let field = f.field();
    let cols = affine_monomials(f.nvars(), k);
    let rows = affine_monomials(f.nvars(), d);
    let row_index = index_of(&rows);
    let g_ring = f.ring().dual();
    let mut m = ExactMatrix::zeros(field, rows.len(), cols.len());
    for (j, a) in cols.iter().enumerate() {
        let image = apply_op(&g_ring.term(field.one(), a.clone()), f)?;
        for (b, c) in image.terms() {
            m.set(row_index[b], j, c.clone());
        }
    }
    Ok((m, cols))
}

/// Echelon basis of `{g : deg g <= k, g(f) = 0}` for an affine `f`
/// (variable 0 absent), as operators in `y1..yn`.
///
/// `y`-monomials differentiate every graded part of `f` at once and
/// constants act as the identity.
pub fn affine_annihilator(f: &Poly, k: usize) -> Result<Vec<Poly>> {
    let (m, cols) = affine_action_matrix(f, k)?;
    let ring = f.ring().dual();
    Ok(m.kernel()
        .iter()
        .map(|v| ring.from_coordinates(&cols, v))
        .collect())
}

/// Number of operators of degree `<= k` in `y1..yn` minus the dimension of
/// the affine annihilator in that range.
pub fn affine_codimension(f: &Poly, k: usize) -> Result<usize> {
    let (m, _) = affine_action_matrix(f, k)?;
    Ok(m.rank())
}

/// The local Gorenstein scheme `Γ(F_l)` defined by `F_l^⊥`.
#[derive(Clone, Debug)]
pub struct ApolarScheme {
    pub witness: Poly,
    pub substitution: LinearSubstitution,
    /// `F_l`, variable 0 absent.
    pub affine: Poly,
    /// `dim Diff(F_l)`, the length of the scheme.
    pub length: usize,
    /// Echelon basis of `F_l^⊥` through degree `deg F_l + 1`, in the dual
    /// coordinates `(l', l'_1, ..., l'_n)` of the substitution.
    pub affine_annihilator: Vec<Poly>,
    /// Each annihilator element homogenized to its own degree and rewritten
    /// in `y0..yn`.
    pub homogenized: Vec<Poly>,
    /// Every homogenized element annihilates `F`.
    pub verified: bool,
}

impl ApolarScheme {
    /// The homogenized generators grouped into graded pieces of `T`.
    pub fn homogenized_pieces(&self) -> Vec<GradedPiece> {
        let ring = self.witness.ring().dual();
        let mut by_degree: BTreeMap<usize, Vec<Poly>> = BTreeMap::new();
        for g in &self.homogenized {
            by_degree
                .entry(g.degree().unwrap_or(0))
                .or_default()
                .push(g.clone());
        }
        by_degree
            .into_iter()
            .map(|(d, gs)| GradedPiece::new(ring, d, gs).expect("homogeneous generators"))
            .collect()
    }
}

/// Build `Γ(F_l)` and check that its homogenized ideal annihilates `F`.
///
/// A failed check is reported as [`Error::Internal`]: it cannot happen for
/// a correct implementation.
pub fn gamma_scheme(f: &Poly, l: &Poly) -> Result<ApolarScheme> {
    check_form(f)?;
    let (affine, substitution) = dehomogenize(f, l)?;
    let length = diff_space(&affine)?.dim();
    let top = affine.degree().expect("nonzero") + 1;
    let (m, cols) = affine_action_matrix(&affine, top)?;
    let rank = m.rank();
    if rank != length {
        return Err(Error::Internal(format!(
            "codimension of the affine annihilator is {rank}, Diff has dimension {length}"
        )));
    }
    let op_ring = affine.ring().dual();
    let annihilator: Vec<Poly> = m
        .kernel()
        .iter()
        .map(|v| op_ring.from_coordinates(&cols, v))
        .collect();
    let mut homogenized = Vec::with_capacity(annihilator.len());
    for g in &annihilator {
        let r = g.degree().expect("kernel vectors are nonzero");
        let h = substitution.operator_to_standard(&homogenize_element(g, r)?)?;
        if !apply_op(&h, f)?.is_zero() {
            return Err(Error::Internal(format!(
                "homogenized annihilator {h} does not annihilate {f}"
            )));
        }
        homogenized.push(h);
    }
    Ok(ApolarScheme {
        witness: l.clone(),
        substitution,
        affine,
        length,
        affine_annihilator: annihilator,
        homogenized,
        verified: true,
    })
}

/// Result of [`remark2_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remark2Report {
    /// `d - e`.
    pub reduced_degree: usize,
    /// `l^(d-e) F'`, of degree `2(d-e)`.
    pub doubled_form: Poly,
    pub annihilator_dim: usize,
    /// Every element of `(l^(d-e) F')^⊥_(d-e)` annihilates `l^(d-e)`.
    pub kills_power_of_l: bool,
    /// `(t, dim I_t, dim H_t, I_t ⊂ H_t)` where `I` is generated by that
    /// annihilator piece and `H` by the homogenized generators of `Γ(F_l)`.
    pub degrees: Vec<(usize, usize, usize, bool)>,
    /// First `t` with `I_t = H_t`.
    pub agreement_degree: Option<usize>,
}

impl Remark2Report {
    pub fn contained_throughout(&self) -> bool {
        self.degrees.iter().all(|&(_, _, _, c)| c)
    }
}

/// Compare the ideal generated by `(l^(d-e) F')^⊥_(d-e)`, where
/// `F = l^e F'` with `l` not dividing `F'`, against the homogenized
/// annihilator of `F_l`, degree by degree.
pub fn remark2_check(
    f: &Poly,
    l: &Poly,
    e: usize,
    t_range: RangeInclusive<usize>,
) -> Result<Remark2Report> {
    let d = check_form(f)?;
    if e >= d {
        return Err(Error::Factorization(format!(
            "need d - e >= 1, got d = {d}, e = {e}"
        )));
    }
    let m = LinearSubstitution::from_linear_form(l)?;
    let in_new = substitute(f, &m)?;
    let lowest = in_new
        .terms()
        .map(|(mon, _)| mon.exponents()[0] as usize)
        .min()
        .expect("nonzero");
    if lowest < e {
        return Err(Error::Factorization(format!(
            "l^{e} does not divide F (highest power is {lowest})"
        )));
    }
    if lowest > e {
        return Err(Error::Factorization(format!(
            "l divides F' (F is divisible by l^{lowest})"
        )));
    }
    let cofactor_new = in_new.ring().from_terms(in_new.terms().map(|(mon, c)| {
        let mut ex = mon.exponents().to_vec();
        ex[0] -= e as u32;
        (Monomial::new(ex), c.clone())
    }));
    let cofactor = substitute(&cofactor_new, &m.inverse())?;
    let reduced_degree = d - e;
    let l_power = l.pow(reduced_degree as u32);
    let doubled_form = &l_power * &cofactor;
    let piece = annihilator_piece(&doubled_form, reduced_degree)?;
    let mut kills_power_of_l = true;
    for g in piece.basis() {
        if !apply_op(&g, &l_power)?.is_zero() {
            kills_power_of_l = false;
        }
    }

    let scheme = gamma_scheme(f, l)?;
    let homogenized = scheme.homogenized_pieces();
    let ring = f.ring().dual();
    let generated = [piece.clone()];
    let mut degrees = Vec::new();
    let mut agreement_degree = None;
    for t in t_range {
        let i_t = ideal_or_zero(ring, &generated, t)?;
        let h_t = ideal_or_zero(ring, &homogenized, t)?;
        let contained = piece_contained(&i_t, &h_t)?;
        if contained && i_t.dim() == h_t.dim() && agreement_degree.is_none() {
            agreement_degree = Some(t);
        }
        degrees.push((t, i_t.dim(), h_t.dim(), contained));
    }
    Ok(Remark2Report {
        reduced_degree,
        doubled_form,
        annihilator_dim: piece.dim(),
        kills_power_of_l,
        degrees,
        agreement_degree,
    })
}

fn ideal_or_zero(ring: PolyRing, gens: &[GradedPiece], t: usize) -> Result<GradedPiece> {
    if gens.iter().all(|g| g.degree() > t) {
        Ok(GradedPiece::zero(ring, t))
    } else {
        ideal_piece(ring, gens, t)
    }
}

fn check_points(points: &[Poly]) -> Result<Vec<Vec<Scalar>>> {
    let coords = points
        .iter()
        .map(|p| {
            p.check_side(Side::Form)?;
            linear_coefficients(p)
        })
        .collect::<Result<Vec<_>>>()?;
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            if points[i].check_same_space(&points[j]).is_err() {
                return Err(Error::VariableCountMismatch {
                    left: points[i].nvars(),
                    right: points[j].nvars(),
                });
            }
            let pair = ExactMatrix::from_rows(
                points[i].field(),
                coords[i].len(),
                vec![coords[i].clone(), coords[j].clone()],
            );
            if pair.rank() < 2 {
                return Err(Error::ProportionalPoints(i, j));
            }
        }
    }
    Ok(coords)
}

/// `I_{Γ,k}` for the reduced set of points `[l_i]`: operators of degree `k`
/// vanishing at the coefficient vector of every `l_i`.
pub fn point_ideal_piece(points: &[Poly], k: usize) -> Result<GradedPiece> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidArgument("no points given".into()));
    };
    let coords = check_points(points)?;
    let ring = first.ring().dual();
    let basis = monomial_basis(ring.nvars, k);
    let rows = coords
        .iter()
        .map(|c| {
            basis
                .iter()
                .map(|m| ring.term(ring.field.one(), m.clone()).evaluate(c))
                .collect()
        })
        .collect();
    let eval = ExactMatrix::from_rows(ring.field, basis.len(), rows);
    Ok(GradedPiece::from_coordinates(ring, k, &eval.kernel()))
}

/// Outcome of [`decompose_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `F = sum c_i l_i^d`, and `I_{Γ,k} ⊂ F^⊥_k` for every `k <= d`.
    Sum { coefficients: Vec<Scalar> },
    /// `F` is not in the span of the `l_i^d`; containment fails in these degrees.
    NotInSpan { failing_degrees: Vec<usize> },
}

/// Solve `F = sum c_i l_i^d` exactly and cross-check the answer against
/// the containment `I_Γ ⊂ F^⊥` in every degree `k <= d`.
///
/// Disagreement between the two is reported as [`Error::Internal`].
pub fn decompose_check(f: &Poly, points: &[Poly]) -> Result<Decomposition> {
    let d = check_form(f)?;
    if points.is_empty() {
        return Err(Error::InvalidArgument("no points given".into()));
    }
    check_points(points)?;
    for p in points {
        p.check_same_space(f)?;
    }
    let basis = monomial_basis(f.nvars(), d);
    let powers: Vec<Vec<Scalar>> = points
        .iter()
        .map(|l| l.pow(d as u32).coordinates(&basis))
        .collect();
    let system = ExactMatrix::from_rows(f.field(), basis.len(), powers).transpose();
    let solution = system.solve(&f.coordinates(&basis));

    let mut failing_degrees = Vec::new();
    for k in 0..=d {
        let ideal = point_ideal_piece(points, k)?;
        let perp = annihilator_piece(f, k)?;
        if !piece_contained(&ideal, &perp)? {
            failing_degrees.push(k);
        }
    }
    match (solution, failing_degrees.is_empty()) {
        (Some(coefficients), true) => Ok(Decomposition::Sum { coefficients }),
        (None, false) => Ok(Decomposition::NotInSpan { failing_degrees }),
        (Some(_), false) => Err(Error::Internal(format!(
            "F is a sum of powers but I_Γ ⊄ F^⊥ in degrees {failing_degrees:?}"
        ))),
        (None, true) => Err(Error::Internal(
            "I_Γ ⊂ F^⊥ in all degrees but F is not a sum of powers".into(),
        )),
    }
}
