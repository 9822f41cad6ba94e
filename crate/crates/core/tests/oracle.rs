use yangian_gz::catalog::{catalog, lookup};
use yangian_gz::exact::{frac, int, Poly};
use yangian_gz::oracle::{drinfeld_from_singular, oracle_families, verify, Realization, Suite, ReflectTwist, TensorOracle};
use yangian_gz::spec::ModuleSpec;

#[test]
fn every_suite_passes_on_the_catalog() {
    for entry in catalog() {
        let o = TensorOracle::new(&entry.spec).unwrap();
        for suite in Suite::ALL {
            let r = verify(&o, suite, 2, 11).unwrap();
            assert!(r.all_passed(), "{} / {}:\n{r}", entry.name, suite.name());
        }
    }
}

#[test]
fn pinned_factor_satisfies_rtt_at_five_points() {
    let o = TensorOracle::new(&lookup("pinned-n2").unwrap()).unwrap();
    let r = verify(&o, Suite::Rtt, 5, 3).unwrap();
    assert!(r.all_passed(), "{r}");
}

#[test]
fn rescaled_families_are_polynomial_and_satisfy_relations() {
    for name in ["c2", "c2xc2", "pinned-n2", "adjoint-n3"] {
        let o = TensorOracle::new(&lookup(name).unwrap()).unwrap();
        let f = oracle_families(&o, 5).unwrap();
        let r = f.check_relations().unwrap();
        assert!(r.all_passed(), "{name}:\n{r}");
    }
}

#[test]
fn vector_representation_families() {
    let o = TensorOracle::new(&lookup("c2").unwrap()).unwrap();
    let f = oracle_families(&o, 1).unwrap();
    let e21 = o.factors()[0].gl().e(2, 1).clone();
    assert_eq!(f.b(1).coeffs(), &[e21]);
    let u = frac(3, 7);
    assert_eq!(f.a(1).eval(&u), yangian_gz::exact::ExactMatrix::diag(vec![&u + int(1), u.clone()]));
}

#[test]
fn quantum_determinant_of_vector_representation() {
    let o = TensorOracle::new(&lookup("c2").unwrap()).unwrap();
    let f = oracle_families(&o, 2).unwrap();
    // u(u-1)·(u+1)/u
    let u = frac(5, 11);
    let expect = (&u + int(1)) * (&u - int(1));
    assert_eq!(f.a(2).eval(&u), yangian_gz::exact::ExactMatrix::scalar(2, expect));
}

#[test]
fn drinfeld_polynomials_from_singular_vectors() {
    let cases: Vec<(ModuleSpec, Vec<Poly>)> = vec![
        (ModuleSpec::vectors(2, &[frac(2, 5)]).unwrap(), vec![Poly::linear(frac(2, 5))]),
        (lookup("adjoint-n3").unwrap(), vec![Poly::linear(int(1)), Poly::linear(int(-1))]),
        (lookup("c2xc2").unwrap(), vec![&Poly::var() * &Poly::linear(frac(1, 2))]),
    ];
    for (spec, expect) in cases {
        let o = TensorOracle::new(&spec).unwrap();
        let d = drinfeld_from_singular(&o, spec.rescaling_degree(spec.rank()), 9).unwrap();
        assert_eq!(d.polys, expect, "{spec}");
        assert!(d.report.all_passed());
    }
}

#[test]
fn reflected_module_has_shifted_reversed_polynomials() {
    for name in ["adjoint-n3", "c3xc3", "pinned-n3"] {
        let spec = lookup(name).unwrap();
        let o = TensorOracle::new(&spec).unwrap();
        let bound = spec.rescaling_degree(spec.rank());
        let plain = drinfeld_from_singular(&o, bound, 4).unwrap().polys;
        let reflect = ReflectTwist::new(&o);
        assert_eq!(reflect.dim(), o.dim());
        let twisted = drinfeld_from_singular(&reflect, 2 * bound + 2, 4).unwrap().polys;
        let n = spec.rank();
        for m in 1..n {
            assert_eq!(twisted[m - 1], plain[n - m - 1].shift(&-int(m as i64)), "{name} m={m}");
        }
    }
}
