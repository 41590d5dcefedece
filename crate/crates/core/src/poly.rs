//! Sparse multivariate polynomials over an exact field.
//!
//! Forms `F` live on the `x` side (`S = k[x0..xn]`) and differential
//! operators on the `y` side (`T = k[y0..yn]`). Affine polynomials, such as
//! a dehomogenization `F_l`, are stored in the same ring with variable 0
//! absent; variable 0 then plays the role of the distinguished coordinate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::monomial::Monomial;

/// Which of the two dual polynomial rings a polynomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Forms in `x0..xn`.
    Form,
    /// Differential operators in `y0..yn`.
    Operator,
}

impl Side {
    pub fn prefix(self) -> char {
        match self {
            Side::Form => 'x',
            Side::Operator => 'y',
        }
    }

    pub fn dual(self) -> Side {
        match self {
            Side::Form => Side::Operator,
            Side::Operator => Side::Form,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Form => write!(f, "x"),
            Side::Operator => write!(f, "y"),
        }
    }
}

/// Field, number of variables and side: everything two polynomials must
/// share before they can be combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: Field,
    pub nvars: usize,
    pub side: Side,
}

impl PolyRing {
    pub fn new(field: Field, nvars: usize, side: Side) -> Self {
        PolyRing { field, nvars, side }
    }

    pub fn forms(field: Field, nvars: usize) -> Self {
        Self::new(field, nvars, Side::Form)
    }

    pub fn operators(field: Field, nvars: usize) -> Self {
        Self::new(field, nvars, Side::Operator)
    }

    /// The same coordinates on the other side (`x_i <-> y_i`).
    pub fn dual(self) -> Self {
        PolyRing {
            side: self.side.dual(),
            ..self
        }
    }

    pub fn zero(self) -> Poly {
        Poly {
            ring: self,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(self, c: Scalar) -> Poly {
        self.term(c, Monomial::one(self.nvars))
    }

    pub fn one(self) -> Poly {
        self.constant(self.field.one())
    }

    pub fn var(self, i: usize) -> Poly {
        self.term(self.field.one(), Monomial::var(self.nvars, i))
    }

    pub fn term(self, c: Scalar, m: Monomial) -> Poly {
        assert_eq!(m.nvars(), self.nvars, "monomial has wrong variable count");
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(self, terms: I) -> Poly
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = self.zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * var_i`.
    pub fn linear(self, coeffs: &[Scalar]) -> Poly {
        assert_eq!(coeffs.len(), self.nvars);
        self.from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(self.nvars, i), c.clone())),
        )
    }

    /// Polynomial with the given coefficients on the listed monomials.
    pub fn from_coordinates(self, basis: &[Monomial], coords: &[Scalar]) -> Poly {
        self.from_terms(basis.iter().cloned().zip(coords.iter().cloned()))
    }
}

/// Sparse polynomial; no zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn side(&self) -> Side {
        self.ring.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the greatest monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field().zero())
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        // the greatest monomial in graded order has the top degree
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, k: usize) -> Poly {
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[i] > 0)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars());
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Poly) {
        self.assert_compatible(other);
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &(c * v));
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiply by a monomial with coefficient one.
    pub fn shift(&self, m: &Monomial) -> Poly {
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// First partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let field = self.field();
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), &(c * &field.from_i64(e as i64)));
        }
        out
    }

    /// Evaluate at a point given by one scalar per variable.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars());
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v = &v * x;
                }
            }
            acc = &acc + &v;
        }
        acc
    }

    /// The same polynomial read on the other side (`x_i <-> y_i`).
    pub fn to_side(&self, side: Side) -> Poly {
        Poly {
            ring: PolyRing { side, ..self.ring },
            terms: self.terms.clone(),
        }
    }

    /// Embed into a ring with at least as many variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Poly> {
        if nvars < self.nvars()
            && self
                .terms
                .keys()
                .any(|m| m.exponents()[nvars..].iter().any(|&e| e > 0))
        {
            return Err(Error::VariableCountMismatch {
                left: self.nvars(),
                right: nvars,
            });
        }
        let ring = PolyRing { nvars, ..self.ring };
        Ok(ring.from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.resize(nvars, 0);
            (Monomial::new(e), c.clone())
        })))
    }

    /// Coefficients on the listed monomials; terms outside the list are dropped.
    pub fn coordinates(&self, basis: &[Monomial]) -> Vec<Scalar> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    /// Fail unless both polynomials live in the same field with the same
    /// variable count.
    pub fn check_same_space(&self, other: &Poly) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.nvars() != other.nvars() {
            return Err(Error::VariableCountMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn check_side(&self, side: Side) -> Result<()> {
        if self.side() != side {
            return Err(Error::SideMismatch {
                expected: side,
                found: self.side(),
            });
        }
        Ok(())
    }

    fn assert_compatible(&self, other: &Poly) {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&self.field().one(), rhs);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&(-self.field().one()), rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&(-self.field().one()))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_compatible(rhs);
        let mut out = self.ring.zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), &(c * d));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    /// Terms greatest first, with explicit `*` and `^`, e.g.
    /// `x0^3 - 2/3*x1*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let prefix = self.side().prefix();
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("{prefix}{i}")
                    } else {
                        format!("{prefix}{i}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
