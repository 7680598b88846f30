use num_traits::Signed;

use qsphere::families::family_q;
use qsphere::haar::{haar_moment, Word};
use qsphere::levy::{eigenvalues, laplace, Generator, LevyPair};
use qsphere::measures::{LevyMeasure, MomentFunctional};
use qsphere::ratpoly::{int, parse_rational, ratio};
use qsphere::spectral::{spectrum, Spectrum};
use qsphere::{Family, SphereKind};

#[test]
fn classical_laplace_matches_spherical_harmonics() {
    for n in 3..=6u32 {
        let g = laplace(Family::classical(n).unwrap());
        let sp = spectrum(&g, 12);
        for e in &sp.entries {
            let s = e.s as i64;
            assert_eq!(e.lambda, int(-s * (s + n as i64 - 2)));
        }
    }
}

#[test]
fn moments_agree_with_haar_state_on_u11() {
    for kind in SphereKind::ALL {
        for n in 3..=4u32 {
            let mf = MomentFunctional::new(Family::new(kind, n).unwrap());
            for k in 0..=3 {
                let w = Word::u11_power(2 * k, kind, n).unwrap();
                assert_eq!(haar_moment(&w).unwrap(), mf.moment(2 * k), "{kind} N={n} k={k}");
            }
        }
    }
}

#[test]
fn jump_generator_spectrum_from_json() {
    let nu = LevyMeasure::from_json(r#"{"atoms":[{"x":"1/2","w":"1"}],"pieces":[{"lo":"-1","hi":"0","coeffs":["1"]}]}"#).unwrap();
    let f = Family::half_liberated(3).unwrap();
    let g = Generator::new(f, LevyPair::new(parse_rational("3/2").unwrap(), nu).unwrap());
    let lambdas = eigenvalues(&g, 10);
    assert_eq!(lambdas[0], int(0));
    assert!(lambdas[1..].iter().all(|l| l.is_negative()));
    let sp = spectrum(&g, 10);
    assert_eq!(Spectrum::from_json(&sp.to_json()).unwrap(), sp);
}

#[test]
fn q1_is_x_everywhere() {
    for kind in SphereKind::ALL {
        let q1 = family_q(Family::new(kind, 5).unwrap(), 1);
        assert_eq!(q1.eval(&ratio(1, 3)), ratio(1, 3));
    }
}
