//! Acceptance criteria, one line of output per criterion.
//!
//! Each check compares the library against an oracle computed here from
//! first principles (explicit formulas, direct integration, independent
//! recurrences) wherever one exists.

use std::process::{Command, ExitCode};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsphere::families::{family_q, q_prime_at_one, star_p};
use qsphere::haar::{ebi, haar_moment, phi, star_word_moment, Word};
use qsphere::levy::{
    central_eigenvalue, eigenvalue, is_conditionally_positive, laplace, psi, Generator, LevyPair,
};
use qsphere::measures::{LevyMeasure, MomentFunctional};
use qsphere::spectral::{multiplicity, spectral_dimension, DimensionMethod, DimensionValue};
use qsphere::{Family, Poly, Rational, SphereKind};

type Check = Result<(), String>;

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn poly(cs: &[Rational]) -> Poly {
    Poly::from_coeffs(cs.to_vec())
}

fn d1(p: &Poly) -> Rational {
    p.derivative().eval(&int(1))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fam(kind: SphereKind, n: u32) -> Family {
    Family::new(kind, n).expect("valid dimension")
}

/// `U_0(x), ..., U_smax(x)` at an integer point, by the recurrence.
fn chebyshev_at(x: i64, smax: usize) -> Vec<BigInt> {
    let mut u = vec![BigInt::one(), BigInt::from(x)];
    while u.len() <= smax {
        let k = u.len();
        let next = BigInt::from(x) * &u[k - 1] - &u[k - 2];
        u.push(next);
    }
    u.truncate(smax + 1);
    u
}

fn criterion_1() -> Check {
    for n in 2..=8i64 {
        let want = poly(&[ratio(-1, n - 1), int(0), ratio(n, n - 1)]);
        for kind in SphereKind::ALL {
            let got = family_q(fam(kind, n as u32), 2);
            ensure(got == want, || format!("{kind} N={n}: {got}"))?;
        }
    }
    Ok(())
}

fn criterion_2() -> Check {
    for n in 3..=8i64 {
        let f = fam(SphereKind::Classical, n as u32);
        for s in 0..=20i64 {
            let want = ratio(s * (s + n - 2), n - 1);
            let q = family_q(f, s as usize);
            ensure(q_prime_at_one(f, s as usize) == want && d1(&q) == want, || {
                format!("N={n} s={s}")
            })?;
            if s <= 15 {
                // (1 - x^2) y'' - (N - 1) x y' + s (s + N - 2) y = 0
                let y1 = q.derivative();
                let y2 = y1.derivative();
                let lhs = &(&(&poly(&[int(1), int(0), int(-1)]) * &y2)
                    - &(&poly(&[int(0), int(n - 1)]) * &y1))
                    + &q.scale(&int(s * (s + n - 2)));
                ensure(lhs.is_zero(), || format!("ODE fails at N={n} s={s}"))?;
            }
        }
    }
    Ok(())
}

/// `∫ p dμ` for `μ(dt) = (N-1)(1-t^2)^{N-2}|t| dt`, integrating the even
/// part of `p` against the density on `[0, 1]` and doubling.
fn half_integral(n: i64, p: &Poly) -> Rational {
    let even = poly(
        &p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { int(0) })
            .collect::<Vec<_>>(),
    );
    let density = poly(&[int(1), int(0), int(-1)]).pow((n - 2) as u32);
    let weight = &(&density * &poly(&[int(0), int(1)])).scale(&int(2 * (n - 1))) * &even;
    weight.integrate(&int(0), &int(1))
}

fn omega(n: i64, l: i64) -> Rational {
    ratio(((l + 2) / 2) * (n - 1 + l / 2), (n + l) * (n + l - 1))
}

fn criterion_3() -> Check {
    for n in 2..=6i64 {
        let ps: Vec<Poly> = (0..=12).map(|s| star_p(n as u32, s)).collect();
        ensure(half_integral(n, &Poly::one()) == int(1), || format!("mass N={n}"))?;
        for i in 0..=12 {
            for j in 0..=12 {
                let got = half_integral(n, &(&ps[i] * &ps[j]));
                let want = if i == j {
                    (0..i as i64).map(|l| omega(n, l)).product()
                } else {
                    int(0)
                };
                ensure(got == want, || format!("N={n} <P_{i},P_{j}> = {got}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for n in 2..=8i64 {
        let f = fam(SphereKind::HalfLiberated, n as u32);
        for s in 0..=25usize {
            let k = (s / 2) as i64;
            let want = if s % 2 == 0 {
                ratio(2 * k * (n + k - 1), n - 1)
            } else {
                ratio((2 * k + 1) * n + 2 * k * k - 1, n - 1)
            };
            ensure(d1(&family_q(f, s)) == want, || format!("N={n} s={s}"))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    for n in 2..=6i64 {
        let f = fam(SphereKind::Free, n as u32);
        let u = chebyshev_at(n, 60);
        // a_r = Σ_{k<=r} (-1)^{r+k} U_k(N)
        let a: Vec<BigInt> = (0..60)
            .map(|r| {
                (0..=r)
                    .map(|k| if (r + k) % 2 == 0 { u[k].clone() } else { -u[k].clone() })
                    .sum()
            })
            .collect();
        let nested = |s: usize| -> Rational {
            (0..s)
                .map(|r| {
                    let partial: BigInt = u[..=r].iter().sum();
                    Rational::new(partial, a[r].clone())
                })
                .sum()
        };
        for s in 0..=30 {
            let got = d1(&family_q(f, s));
            ensure(got == nested(s), || format!("N={n} s={s}: {got}"))?;
        }
        if n >= 3 {
            for s in 0..=50i64 {
                let d = q_prime_at_one(f, s as usize);
                ensure(d >= int(s) && d <= ratio(s * (n + 2), n - 2), || {
                    format!("bound N={n} s={s}: {d}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let f = fam(SphereKind::Free, 2);
    let g = Generator::new(f, LevyPair::drift(int(1)).map_err(|e| e.to_string())?);
    for k in 0..=10i64 {
        for (s, want) in [(2 * k, 2 * k * k + 2 * k), (2 * k + 1, 2 * k * k + 4 * k + 1)] {
            let fast = -eigenvalue(&g, s as usize);
            let slow = -psi(&g.pair, &family_q(f, s as usize));
            ensure(fast == int(want) && slow == int(want), || format!("s={s}: {fast}"))?;
        }
    }
    Ok(())
}

fn parse(text: &str, kind: SphereKind, n: u32) -> Result<Word, String> {
    Word::parse(text, kind, n).map_err(|e| e.to_string())
}

fn moment(w: &Word) -> Result<Rational, String> {
    haar_moment(w).map_err(|e| e.to_string())
}

fn criterion_7() -> Check {
    for n in 3..=6u32 {
        let ni = n as i64;
        let h = |t: &str| moment(&parse(t, SphereKind::Free, n)?);
        ensure(h("u22^2")? == ratio(1, ni), || format!("h(u22^2), N={n}"))?;
        ensure(h("u11^2 u22^2")? == ratio(1, ni * ni - 1), || format!("h(u11^2 u22^2), N={n}"))?;
        for k in 0..=3 {
            let text = format!("u11^{k} u22 u11 u22");
            let text = if k == 0 { "u22 u11 u22".to_string() } else { text };
            ensure(h(&text)?.is_zero(), || format!("h({text}), N={n}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    for kind in [SphereKind::Free, SphereKind::HalfLiberated] {
        for n in 3..=5u32 {
            let ni = n as i64;
            let a = parse("u11 u22^2", kind, n)?;
            let b = parse("u22 u11 u22", kind, n)?;
            let pa = phi(&a).map_err(|e| e.to_string())?;
            let pb = phi(&b).map_err(|e| e.to_string())?;
            ensure(pa == ratio(1, ni - 1) && pb.is_zero(), || {
                format!("{kind} N={n}: phi = {pa}, {pb}")
            })?;
            let e = ebi(&a, 3).map_err(|e| e.to_string())?;
            let want = poly(&[int(0), ratio(ni - 2, (ni - 1) * (ni - 1)), int(0), ratio(1, (ni - 1) * (ni - 1))]);
            ensure(e == want, || format!("{kind} N={n}: E_bi = {e}"))?;
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let n = 3u32;
    for kind in SphereKind::ALL {
        for _ in 0..50 {
            let len = rng.gen_range(1..=6);
            let letters: Vec<(u32, u32)> = (0..len)
                .map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n)))
                .collect();
            let w = Word::new(letters, kind, n).map_err(|e| e.to_string())?;
            let h = moment(&w)?;
            for s in 1..len {
                let r = moment(&w.rotated(s))?;
                ensure(r == h, || format!("{kind} {w}: rotation {s} gives {r}, not {h}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    for n in 2..=6u32 {
        let ni = n as i64;
        let mf = MomentFunctional::new(fam(SphereKind::Free, n));
        for k in 1..=4 {
            let h = moment(&Word::u11_power(2 * k, SphereKind::Free, n).map_err(|e| e.to_string())?)?;
            ensure(h == mf.moment(2 * k), || format!("N={n} k={k}: {h}"))?;
        }
        let h4 = moment(&parse("u11^4", SphereKind::Free, n)?)?;
        ensure(h4 == ratio(2, ni * (ni + 1)), || format!("N={n}: h(u11^4) = {h4}"))?;
    }
    for n in [3u32, 4] {
        for len in [1usize, 2, 3, 4, 5, 6] {
            for code in 0..(n as usize).pow(len as u32) {
                let mut c = code;
                let cols: Vec<u32> = (0..len)
                    .map(|_| {
                        let i = (c % n as usize) as u32 + 1;
                        c /= n as usize;
                        i
                    })
                    .collect();
                let letters = cols.iter().map(|&c| (1, c)).collect();
                let w = Word::new(letters, SphereKind::HalfLiberated, n).map_err(|e| e.to_string())?;
                let h = moment(&w)?;
                let want = star_word_moment(&cols, n);
                ensure(h == want, || format!("N={n} cols {cols:?}: {h} vs {want}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_11() -> Check {
    for s in 0..=30usize {
        let c3 = multiplicity(fam(SphereKind::Classical, 3), s);
        ensure(c3 == BigInt::from(2 * s + 1), || format!("classical N=3 s={s}: {c3}"))?;
        let h = multiplicity(fam(SphereKind::HalfLiberated, 2), s);
        let f = multiplicity(fam(SphereKind::Free, 2), s);
        ensure(h == f && f == BigInt::from(s + 1), || format!("N=2 s={s}: {h} vs {f}"))?;
    }
    for n in 2..=10u32 {
        let m = multiplicity(fam(SphereKind::Classical, n), 1);
        ensure(m == BigInt::from(n), || format!("classical s=1 N={n}: {m}"))?;
    }
    Ok(())
}

fn criterion_12() -> Check {
    let mut cases: Vec<(Family, Option<i64>)> = Vec::new();
    for n in 3..=6u32 {
        cases.push((fam(SphereKind::Classical, n), Some(n as i64 - 1)));
    }
    for n in 2..=5u32 {
        cases.push((fam(SphereKind::HalfLiberated, n), Some(2 * (n as i64 - 1))));
    }
    cases.push((fam(SphereKind::Free, 2), Some(2)));
    for n in 3..=5u32 {
        cases.push((fam(SphereKind::Free, n), None));
    }
    for (f, want) in cases {
        let d = spectral_dimension(&laplace(f)).map_err(|e| e.to_string())?;
        ensure(d.method == DimensionMethod::ExactOrder, || format!("{f}: method {:?}", d.method))?;
        match want {
            Some(v) => {
                ensure(d.value == DimensionValue::Finite(int(v)), || format!("{f}: {}", d.value))?;
                let gap = ((d.regressed - v as f64) / v as f64).abs();
                ensure(gap <= 0.05, || format!("{f}: regression {} vs {v}", d.regressed))?;
            }
            None => ensure(d.value == DimensionValue::Infinite, || format!("{f}: {}", d.value))?,
        }
    }
    Ok(())
}

fn criterion_13() -> Check {
    let pairs = [
        (int(1), LevyMeasure::zero()),
        (int(0), LevyMeasure::atom(int(-1), int(1))),
        (int(0), LevyMeasure::atom(ratio(1, 2), int(1))),
        (int(0), LevyMeasure::uniform()),
        (int(2), LevyMeasure::atom(int(0), int(1))),
    ];
    for (b, nu) in pairs {
        let pair = LevyPair::new(b.clone(), nu.clone()).map_err(|e| e.to_string())?;
        let out = is_conditionally_positive(&pair, 5);
        ensure(out.psd, || format!("b={b}, nu={}: not PSD", nu.to_json()))?;
    }
    for n in 2..=6u32 {
        for kind in SphereKind::ALL {
            let g = laplace(fam(kind, n));
            for s in 1..=40 {
                let l = eigenvalue(&g, s);
                ensure(l.is_negative(), || format!("{kind} N={n} s={s}: {l}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_14() -> Check {
    for n in 2..=6u32 {
        let mut u = vec![Poly::one(), poly(&[int(0), int(1)])];
        for s in 2..=15 {
            let next = &(&poly(&[int(0), int(1)]) * &u[s - 1]) - &u[s - 2];
            u.push(next);
        }
        let mut last = Rational::zero();
        for (s, us) in u.iter().enumerate() {
            let x = int(n as i64);
            let want = -(us.derivative().eval(&x) / us.eval(&x));
            let got = central_eigenvalue(n, &int(1), &LevyMeasure::zero(), s).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("N={n} s={s}: {got} vs {want}"))?;
            ensure(!got.is_positive() && got.abs() >= last, || format!("N={n} s={s}: {got}"))?;
            last = got.abs();
        }
    }
    Ok(())
}

fn criterion_15() -> Check {
    let bin = env!("CARGO_BIN_EXE_qsphere");
    let run = |args: &[&str]| -> Result<String, String> {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let json_args = ["spectrum", "--family", "free", "--N", "4", "--b", "1", "--smax", "30", "--format", "json"];
    let first = run(&json_args)?;
    for _ in 0..2 {
        ensure(run(&json_args)? == first, || "spectrum JSON differs between runs".into())?;
    }
    let csv = run(&["spectrum", "--family", "free", "--N", "2", "--b", "1", "--smax", "21", "--format", "csv"])?;
    let golden = include_str!("golden/free_n2_b1_s21.csv");
    ensure(csv == golden, || format!("CSV differs from golden file:\n{csv}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 15] = [
        ("q_2 coincides across families", criterion_1),
        ("classical derivative law and Jacobi ODE", criterion_2),
        ("half-liberated orthogonality", criterion_3),
        ("half-liberated derivative closed forms", criterion_4),
        ("free derivative nested sum and bounds", criterion_5),
        ("free N=2 eigenvalues", criterion_6),
        ("free Weingarten golden values", criterion_7),
        ("non-traciality of the idempotent state", criterion_8),
        ("Haar traciality on random words", criterion_9),
        ("cross-oracle moments", criterion_10),
        ("multiplicities", criterion_11),
        ("spectral dimensions", criterion_12),
        ("conditional positivity and negative Laplace spectrum", criterion_13),
        ("central eigenvalues", criterion_14),
        ("CLI determinism and golden CSV", criterion_15),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
