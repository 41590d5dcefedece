//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! of them fails.

use std::process::ExitCode;
use std::time::Instant;

use apolarity::ring::{random_form_with, substitute_variables};
use apolarity::{
    annihilator_piece, apply_op, cactus_upper_bound, decompose_check, default_candidates,
    dehomogenize, diff_space, empty_projective, gamma_scheme, generic_rank, hilbert_function,
    nd_bound, random_form, remark2_check, secant_dimension, Decomposition, Emptiness, Field,
    GradedPiece, Poly, PolyRing, DEFAULT_PRIME,
};
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn fp() -> Field {
    Field::Prime(DEFAULT_PRIME)
}

/// `x0 (x0^2 + ... + xn^2)`.
fn reducible_cubic(n: usize) -> Poly {
    let r = PolyRing::forms(Field::Rational, n + 1);
    let q = (0..=n).fold(r.zero(), |acc, i| &acc + &r.var(i).pow(2));
    &r.var(0) * &q
}

/// `y_i y_j` for `1 <= i < j <= n` and `y0^2 - y_i^2` for `1 <= i <= n`.
fn unit_weight_basis(n: usize) -> Vec<Poly> {
    let y = PolyRing::operators(Field::Rational, n + 1);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(&y.var(i) * &y.var(j));
        }
    }
    for i in 1..=n {
        out.push(&y.var(0).pow(2) - &y.var(i).pow(2));
    }
    out
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn nd_crossover() -> Outcome {
    let nd8 = nd_bound(8, 3);
    let gr8 = generic_rank(8, 3).unwrap().value;
    let mut ok = nd8 == 18 && gr8 == 19;
    let mut first_strict = None;
    for n in 2..=12 {
        let nd = nd_bound(n, 3);
        let gr = generic_rank(n, 3).unwrap().value;
        // independent counts: 2n+2 and the Alexander-Hirschowitz ceiling
        let oracle_gr = ceil_div(binomial(n + 3, 3), n + 1) + usize::from(n == 4);
        ok &= nd == 2 * n as u64 + 2 && gr == oracle_gr as u64;
        if n <= 7 {
            ok &= nd >= gr;
        }
        if nd < gr && first_strict.is_none() {
            first_strict = Some(n);
        }
    }
    ok &= first_strict == Some(8);
    outcome(
        ok,
        format!("nd(8,3)={nd8} generic rank={gr8}; first n with N_3 < r is {first_strict:?}, expected Some(8)"),
    )
}

fn diff_bound_attained() -> Outcome {
    let mut hits = 0;
    let mut bounds = Vec::new();
    for seed in 0..20 {
        let f = random_form(8, 3, seed, fp());
        let candidates = default_candidates(f.ring(), 0, 0);
        let b = cactus_upper_bound(&f, &candidates).unwrap();
        if b.bound == 18 && b.scheme.verified {
            hits += 1;
        }
        bounds.push(b.bound);
    }
    outcome(
        hits >= 19,
        format!("{hits}/20 cubics with n=8 give bound 18 (need >= 19); bounds {bounds:?}"),
    )
}

fn homogenized_annihilator_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut failures = 0;
    let mut elements = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(2..=4);
        let ring = PolyRing::forms(Field::Rational, n + 1);
        let f = random_form_with(ring, d, &mut rng);
        let l = random_form_with(ring, 1, &mut rng);
        let scheme = match gamma_scheme(&f, &l) {
            Ok(s) => s,
            Err(_) => {
                failures += 1;
                continue;
            }
        };
        let length = diff_space(&dehomogenize(&f, &l).unwrap().0).unwrap().dim();
        if scheme.length != length {
            failures += 1;
        }
        for h in &scheme.homogenized {
            elements += 1;
            if !apply_op(h, &f).unwrap().is_zero() {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!(
            "100 pairs, {elements} homogenized annihilator elements checked, {failures} failures"
        ),
    )
}

fn reducible_cubic_check() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 2..=6 {
        let f = reducible_cubic(n);
        let perp = annihilator_piece(&f, 2).unwrap();
        let y = PolyRing::operators(Field::Rational, n + 1);
        let unit = GradedPiece::new(y, 2, unit_weight_basis(n)).unwrap();
        let dim_ok = perp.dim() == binomial(n + 1, 2);
        let span_ok = perp == unit;
        let t = match empty_projective(y, std::slice::from_ref(&perp), 8).unwrap() {
            Emptiness::CertifiedEmpty { degree } => Some(degree),
            Emptiness::Undetermined { .. } => None,
        };
        let length = gamma_scheme(&f, &PolyRing::forms(Field::Rational, n + 1).var(0))
            .unwrap()
            .length;
        ok &= dim_ok && span_ok && t.is_some() && length == n + 2;
        let missing = unit_weight_basis(n)
            .into_iter()
            .filter(|g| !perp.contains(g))
            .count();
        let three = Field::Rational.from_i64(3);
        let weighted =
            (1..=n).all(|i| perp.contains(&(&y.var(0).pow(2) - &y.var(i).pow(2).scale(&three))));
        notes.push(format!(
            "n={n}: dim {} (want {}), span of y_iy_j, y0^2 - y_i^2 {}{}, empty at t={t:?}, length {length}",
            perp.dim(),
            binomial(n + 1, 2),
            if span_ok { "equal" } else { "differs" },
            if missing > 0 {
                format!(" ({missing} of y0^2 - y_i^2 do not annihilate F; y0^2 - 3 y_i^2 do: {weighted})")
            } else {
                String::new()
            },
        ));
    }
    outcome(ok, notes.join("; "))
}

fn construction_with_g() -> Outcome {
    let m = 6;
    let nvars = 2 * m + 2;
    let small = PolyRing::forms(Field::Rational, m);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g_small = loop {
        let g = random_form_with(small, 3, &mut rng);
        if hilbert_function(&g).unwrap().values() == [1, 6, 6, 1] {
            break g;
        }
    };
    let r = PolyRing::forms(Field::Rational, nvars);
    let x = |i: usize| r.var(i);
    let g = substitute_variables(&g_small, &(1..=m).map(x).collect::<Vec<_>>());
    let mut f = g.clone();
    for i in 1..=m {
        f = &f + &(&(&x(0) * &x(i)) * &x(m + i));
    }
    f = &f + &(&x(0).pow(2) * &x(2 * m + 1));
    let (affine, _) = dehomogenize(&f, &x(0)).unwrap();
    let diff = diff_space(&affine).unwrap();
    // spanning set F_x0, dG/dx_i + x_{m+i}, x_1..x_m, 1
    let mut listed = vec![affine.clone(), r.one()];
    for i in 1..=m {
        listed.push(&g.derivative(i) + &x(m + i));
        listed.push(x(i));
    }
    let spans = listed.iter().all(|p| diff.contains(p));
    outcome(
        diff.dim() == 2 * m + 2 && spans,
        format!(
            "dim Diff(F_x0) = {} (want 14), listed partials lie in it: {spans}",
            diff.dim()
        ),
    )
}

fn apolarity_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut good = 0;
    let mut perturbed_rejected = 0;
    let mut errors = Vec::new();
    for instance in 0..50 {
        let n = rng.gen_range(2..=4);
        let r = rng.gen_range(1..=5);
        let ring = PolyRing::forms(Field::Rational, n + 1);
        let points: Vec<Poly> = (0..r)
            .map(|_| {
                ring.linear(
                    &(0..=n)
                        .map(|_| Field::Rational.from_i64(rng.gen_range(-5..=5)))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let f = points.iter().fold(ring.zero(), |acc, l| &acc + &l.pow(3));
        match decompose_check(&f, &points) {
            Ok(Decomposition::Sum { coefficients }) if coefficients.iter().all(|c| c.is_one()) => {
                good += 1
            }
            other => errors.push(format!("instance {instance}: {other:?}")),
        }
        let extra = random_form_with(ring, 3, &mut rng);
        let (mono, c) = extra.leading_term().unwrap();
        let term = ring.term(c.clone(), mono.clone());
        let perturbed = &f + &term;
        match decompose_check(&perturbed, &points) {
            Ok(Decomposition::NotInSpan { failing_degrees }) if !failing_degrees.is_empty() => {
                perturbed_rejected += 1
            }
            other => errors.push(format!("perturbed {instance}: {other:?}")),
        }
    }
    let mut detail = format!("{good}/50 sums recovered with containment in all degrees, {perturbed_rejected}/50 perturbations rejected");
    if !errors.is_empty() {
        detail.push_str(&format!("; first problem: {}", errors[0]));
    }
    outcome(good == 50 && perturbed_rejected == 50, detail)
}

fn remark2() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 2..=4 {
        let f = reducible_cubic(n);
        let l = f.ring().var(0);
        let report = remark2_check(&f, &l, 1, 1..=6).unwrap();
        ok &= report.kills_power_of_l && report.agreement_degree.is_some();
        notes.push(format!(
            "n={n}: part (a) {}, agreement from t={:?}",
            report.kills_power_of_l, report.agreement_degree
        ));
    }
    outcome(ok, notes.join("; "))
}

fn gorenstein_symmetry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    let mut bad = Vec::new();
    for i in 0..200 {
        let n = rng.gen_range(1..=5);
        let d = rng.gen_range(1..=6);
        for field in [Field::Rational, fp()] {
            let f = random_form_with(PolyRing::forms(field, n + 1), d, &mut rng);
            let h = hilbert_function(&f).unwrap();
            let v = h.values();
            checked += 1;
            if (0..=d).any(|k| v[k] != v[d - k]) || v[0] != 1 || v[d] != 1 {
                bad.push(format!("form {i} over {field:?}: {v:?}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{checked} Hilbert functions, {} asymmetric {:?}",
            bad.len(),
            bad.first()
        ),
    )
}

fn secant_oracle() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (n, d, r) in [(2, 4, 5), (3, 4, 9), (4, 4, 14), (4, 3, 7)] {
        let expected = (r * (n + 1)).min(binomial(n + d, d)) - 1;
        let actual = secant_dimension(n, d, r, 0).unwrap();
        ok &= expected == actual + 1;
        notes.push(format!(
            "({n},{d},{r}) defect {}",
            expected as i64 - actual as i64
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut plain = 0;
    while plain < 10 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(3..=4);
        if [(2, 4), (3, 4), (4, 3), (4, 4)].contains(&(n, d)) {
            continue;
        }
        let r = rng.gen_range(1..=ceil_div(binomial(n + d, d), n + 1) + 1);
        let expected = (r * (n + 1)).min(binomial(n + d, d)) - 1;
        let actual = secant_dimension(n, d, r, plain as u64).unwrap();
        ok &= expected == actual;
        notes.push(format!(
            "({n},{d},{r}) defect {}",
            expected as i64 - actual as i64
        ));
        plain += 1;
    }
    outcome(ok, notes.join(" "))
}

fn not_reproduced() -> Outcome {
    for line in [
        "exact cactus rank of generic cubics for n >= 7: bracketed by ldiff and min dim Diff(F_l) only",
        "smoothability of the apolar schemes: cited, not computed",
        "smoothable rank and border rank values: not computed",
    ] {
        println!("      not reproduced: {line}");
    }
    outcome(
        true,
        "stated; criteria 1-9 check the bracketing invariants instead",
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("N_d and crossover at n=8", nd_crossover),
        ("Diff bound 18 for random cubics, n=8", diff_bound_attained),
        (
            "homogenized annihilators kill F",
            homogenized_annihilator_sweep,
        ),
        ("reducible cubic x0(x0^2+...+xn^2)", reducible_cubic_check),
        ("Diff(F_x0) of dimension 2m+2", construction_with_g),
        ("apolarity lemma round trip", apolarity_round_trip),
        ("degreewise comparison for l^(d-e) F'", remark2),
        ("Gorenstein symmetry", gorenstein_symmetry),
        ("secant defects", secant_oracle),
        ("results out of reach", not_reproduced),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name} ({:.1}s): {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
