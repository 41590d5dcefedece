use std::cmp::Ordering;

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically with variable 0 greatest: first by total
/// degree, then by the exponent of variable 0, then variable 1, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All degree-`k` monomials in `nvars` variables, greatest first.
///
/// Has length `C(nvars - 1 + k, k)`.
pub fn monomial_basis(nvars: usize, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, k);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut [u32], pos: usize, remaining: usize) {
    if pos == current.len() {
        if remaining == 0 {
            out.push(Monomial(current.to_vec()));
        }
        return;
    }
    if pos + 1 == current.len() {
        current[pos] = remaining as u32;
        out.push(Monomial(current.to_vec()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e as u32;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Monomials of degree `0..=k` not involving variable 0, greatest first.
///
/// These index affine polynomials and operators after dehomogenizing with
/// respect to the distinguished coordinate.
pub fn affine_monomials(nvars: usize, k: usize) -> Vec<Monomial> {
    if nvars == 0 {
        return if k == 0 {
            vec![Monomial(vec![])]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    for deg in (0..=k).rev() {
        for m in monomial_basis(nvars - 1, deg) {
            let mut e = Vec::with_capacity(nvars);
            e.push(0);
            e.extend_from_slice(m.exponents());
            out.push(Monomial(e));
        }
    }
    out
}
