//! Sparse reduced echelon bases of polynomial subspaces.

use std::collections::BTreeMap;

use crate::monomial::Monomial;
use crate::poly::{Poly, PolyRing};

/// A finite-dimensional subspace of a polynomial ring, kept in reduced
/// row-echelon form with respect to the monomial order: every basis element
/// has leading coefficient 1, leading monomials are distinct, and no basis
/// element contains another element's leading monomial.
///
/// The stored basis depends only on the span, never on insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ring: PolyRing,
    rows: BTreeMap<Monomial, Poly>,
}

impl Subspace {
    pub fn new(ring: PolyRing) -> Self {
        Subspace {
            ring,
            rows: BTreeMap::new(),
        }
    }

    pub fn spanned_by<I: IntoIterator<Item = Poly>>(ring: PolyRing, polys: I) -> Self {
        let mut s = Self::new(ring);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Basis, greatest leading monomial first.
    pub fn basis(&self) -> impl Iterator<Item = &Poly> + '_ {
        self.rows.values().rev()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.rows.keys().rev()
    }

    /// Normal form of `p`: the unique representative of `p` modulo the
    /// subspace that contains no leading monomial of the basis.
    pub fn reduce(&self, p: &Poly) -> Poly {
        assert_eq!(p.ring(), self.ring, "polynomial from a different ring");
        let mut out = p.clone();
        // rows are fully reduced, so subtracting one never reintroduces
        // another row's leading monomial
        let hits: Vec<(Monomial, _)> = p
            .terms()
            .filter(|(m, _)| self.rows.contains_key(*m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        for (m, c) in hits {
            out.add_scaled(&(-&c), &self.rows[&m]);
        }
        out
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Add `p` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, p: Poly) -> bool {
        let r = self.reduce(&p);
        let Some((lead, c)) = r.leading_term() else {
            return false;
        };
        let lead = lead.clone();
        let r = r.scale(&c.inv().expect("nonzero leading coefficient"));
        for row in self.rows.values_mut() {
            let c = row.coefficient(&lead);
            if !c.is_zero() {
                row.add_scaled(&(-&c), &r);
            }
        }
        self.rows.insert(lead, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().all(|p| other.contains(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn canonical_regardless_of_order() {
        let r = PolyRing::forms(Field::Rational, 2);
        let (x, y) = (r.var(0), r.var(1));
        let a = &x + &y;
        let b = &x - &y;
        let s1 = Subspace::spanned_by(r, [a.clone(), b.clone()]);
        let s2 = Subspace::spanned_by(r, [b, a.clone(), a]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        let basis: Vec<_> = s1.basis().cloned().collect();
        assert_eq!(basis, vec![x, y]);
    }

    #[test]
    fn reduction_and_containment() {
        let r = PolyRing::forms(Field::Prime(101), 3);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let s = Subspace::spanned_by(r, [&x + &y, &y + &z]);
        assert!(s.contains(&(&x - &z)));
        assert!(!s.contains(&x));
        let nf = s.reduce(&x);
        assert!(!nf.involves(0));
        let t = Subspace::spanned_by(r, [&x - &z]);
        assert!(t.is_subspace_of(&s));
        assert!(!s.is_subspace_of(&t));
    }

    #[test]
    fn reinserting_basis_is_idempotent() {
        let r = PolyRing::forms(Field::Rational, 3);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let s = Subspace::spanned_by(
            r,
            [&(&x * &y) + &z.pow(2), &y.pow(2) - &(&x * &z), x.pow(2)],
        );
        let again = Subspace::spanned_by(r, s.basis().cloned());
        assert_eq!(s, again);
    }
}
