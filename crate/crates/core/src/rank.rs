//! Bounds on the cactus rank.
//!
//! The differential length `ldiff(F)` bounds `cr(F)` from below, and for
//! every linear form `l`, `dim Diff(F_l)` bounds it from above, which in turn
//! never exceeds the closed-form `N_d`. Generic ranks come from the
//! Alexander-Hirschowitz count, with the defective cases checked by a
//! Terracini rank computation.

use num_integer::binomial;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apolar::{diff_space, gamma_scheme, hilbert_function, ApolarScheme, HilbertFunction};
use crate::error::{Error, Result};
use crate::field::{Field, DEFAULT_PRIME};
use crate::linalg::ExactMatrix;
use crate::monomial::monomial_basis;
use crate::poly::{Poly, PolyRing};
use crate::ring::{dehomogenize, random_form_with};

/// Pairs `(n, d)` with `d > 2` where the generic rank exceeds the count
/// `ceil(C(n+d, d) / (n+1))` by one.
pub const EXCEPTIONAL_CASES: [(usize, usize); 4] = [(2, 4), (3, 4), (4, 3), (4, 4)];

/// `N_d`: `2 C(n+k, k)` for `d = 2k+1`, `C(n+k, k) + C(n+k+1, k+1)` for
/// `d = 2k+2`.
pub fn nd_bound(n: usize, d: usize) -> u64 {
    assert!(d >= 1, "degree must be positive");
    let k = (d - 1) / 2;
    if d % 2 == 1 {
        2 * binomial(n + k, k) as u64
    } else {
        (binomial(n + k, k) + binomial(n + k + 1, k + 1)) as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericRank {
    pub value: u64,
    /// One of the four defective Alexander-Hirschowitz cases.
    pub exceptional: bool,
    /// `d = 2`, reported as `n + 1` by convention.
    pub quadric: bool,
}

/// Rank of a general form of degree `d` in `n + 1` variables.
pub fn generic_rank(n: usize, d: usize) -> Result<GenericRank> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidArgument(format!(
            "generic rank needs n >= 1 and d >= 2, got n = {n}, d = {d}"
        )));
    }
    if d == 2 {
        return Ok(GenericRank {
            value: n as u64 + 1,
            exceptional: false,
            quadric: true,
        });
    }
    let count = binomial(n + d, d) as u64;
    let base = count.div_ceil(n as u64 + 1);
    let exceptional = EXCEPTIONAL_CASES.contains(&(n, d));
    Ok(GenericRank {
        value: base + exceptional as u64,
        exceptional,
        quadric: false,
    })
}

/// Projective dimension of the span of the tangent spaces to the degree-`d`
/// Veronese of `P^n` at `r` random points: `rank{l_j^(d-1) x_i} - 1`,
/// computed over `F_p` with `p = 2^31 - 1`.
pub fn secant_dimension(n: usize, d: usize, r: usize, seed: u64) -> Result<usize> {
    if r == 0 || d == 0 {
        return Err(Error::InvalidArgument("need r >= 1 and d >= 1".into()));
    }
    let field = Field::Prime(DEFAULT_PRIME);
    let ring = PolyRing::forms(field, n + 1);
    let basis = monomial_basis(n + 1, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(r * (n + 1));
    for _ in 0..r {
        let l = random_form_with(ring, 1, &mut rng);
        let power = l.pow(d as u32 - 1);
        for i in 0..=n {
            rows.push((&power * &ring.var(i)).coordinates(&basis));
        }
    }
    let rank = ExactMatrix::from_rows(field, basis.len(), rows).rank();
    Ok(rank - 1)
}

/// `min(r (n+1), C(n+d, d)) - 1`, the dimension a non-defective secant
/// variety has.
pub fn expected_secant_dimension(n: usize, d: usize, r: usize) -> usize {
    (r * (n + 1)).min(binomial(n + d, d)) - 1
}

/// `ldiff(F)`: the largest catalecticant rank.
pub fn diff_length(f: &Poly) -> Result<usize> {
    Ok(hilbert_function(f)?.max())
}

/// Coordinate forms `x0..xn` followed by `extra` seeded random linear forms.
pub fn default_candidates(ring: PolyRing, extra: usize, seed: u64) -> Vec<Poly> {
    let mut out: Vec<Poly> = (0..ring.nvars).map(|i| ring.var(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra {
        out.push(random_form_with(ring, 1, &mut rng));
    }
    out
}

#[derive(Clone, Debug)]
pub struct CactusBound {
    pub bound: usize,
    pub witness: Poly,
    /// `dim Diff(F_l)` for every candidate, in candidate order.
    pub lengths: Vec<usize>,
    /// `Γ(F_l)` for the witness, with the apolarity check done.
    pub scheme: ApolarScheme,
}

/// The smallest `dim Diff(F_l)` over the candidates; ties go to the
/// earliest candidate.
pub fn cactus_upper_bound(f: &Poly, candidates: &[Poly]) -> Result<CactusBound> {
    if candidates.is_empty() {
        return Err(Error::InvalidArgument("no candidate linear forms".into()));
    }
    let mut lengths = Vec::with_capacity(candidates.len());
    for l in candidates {
        let (affine, _) = dehomogenize(f, l)?;
        lengths.push(diff_space(&affine)?.dim());
    }
    let (best, &bound) = lengths
        .iter()
        .enumerate()
        .min_by_key(|&(i, v)| (*v, i))
        .expect("nonempty");
    let witness = candidates[best].clone();
    let scheme = gamma_scheme(f, &witness)?;
    if scheme.length != bound {
        return Err(Error::Internal(format!(
            "scheme length {} differs from dim Diff {bound}",
            scheme.length
        )));
    }
    Ok(CactusBound {
        bound,
        witness,
        lengths,
        scheme,
    })
}

#[derive(Clone, Debug)]
pub struct RankOptions {
    /// Random linear forms added after the coordinate forms.
    pub extra_candidates: usize,
    pub seed: u64,
    /// Replaces the default candidate list when set.
    pub candidates: Option<Vec<Poly>>,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            extra_candidates: 8,
            seed: 0,
            candidates: None,
        }
    }
}

/// The bracket `ldiff(F) <= cr(F) <= min_l dim Diff(F_l) <= N_d`, with the
/// generic rank alongside for comparison.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub n: usize,
    pub d: usize,
    pub field: Field,
    pub seed: u64,
    pub hilbert: HilbertFunction,
    pub ldiff: usize,
    pub upper_bound: usize,
    pub witness: Poly,
    pub candidate_lengths: Vec<(Poly, usize)>,
    pub candidates: String,
    pub nd_bound: u64,
    pub generic_rank: Option<GenericRank>,
}

pub fn rank_report(f: &Poly, options: &RankOptions) -> Result<RankReport> {
    let hilbert = hilbert_function(f)?;
    let d = hilbert.degree();
    let n = f.nvars() - 1;
    let (candidates, description) = match &options.candidates {
        Some(c) => (c.clone(), format!("{} user-supplied forms", c.len())),
        None => (
            default_candidates(f.ring(), options.extra_candidates, options.seed),
            format!(
                "coordinate forms x0..x{n} plus {} random forms (seed {})",
                options.extra_candidates, options.seed
            ),
        ),
    };
    let bound = cactus_upper_bound(f, &candidates)?;
    let ldiff = hilbert.max();
    let nd = nd_bound(n, d);
    if ldiff > bound.bound || bound.bound as u64 > nd {
        return Err(Error::Internal(format!(
            "bracket violated: ldiff {ldiff}, upper bound {}, N_d {nd}",
            bound.bound
        )));
    }
    Ok(RankReport {
        n,
        d,
        field: f.field(),
        seed: options.seed,
        ldiff,
        upper_bound: bound.bound,
        witness: bound.witness,
        candidate_lengths: candidates.into_iter().zip(bound.lengths).collect(),
        candidates: description,
        nd_bound: nd,
        generic_rank: if n >= 1 && d >= 2 {
            Some(generic_rank(n, d)?)
        } else {
            None
        },
        hilbert,
    })
}
