use num_rational::BigRational;
use qg2::free::{CartanData, Gen, NcPoly};
use qg2::lusztig::*;
use qg2::pairing::Pairing;
use qg2::relations::{Params, RELATION_IDS};
use qg2::rewrite::RuleSet;
use qg2::scalar::RatFunc;
use std::sync::OnceLock;

fn lz() -> &'static Lusztig {
    static L: OnceLock<Lusztig> = OnceLock::new();
    L.get_or_init(Lusztig::standard)
}

fn run(list: &[Identity]) {
    let p = Pairing::new(Params::Standard);
    let failed: Vec<_> = list
        .iter()
        .map(|id| check_identity(lz(), &p, id))
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {} ({:?})", r.id, r.text, r.error))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn bracket_catalogue() {
    run(BRACKET_CATALOGUE);
}

#[test]
fn lemma_suite() {
    run(LEMMA_SUITE);
}

#[test]
fn one_sided_identities_by_both_methods() {
    let p = Pairing::new(Params::Standard);
    let both: Vec<_> = LEMMA_SUITE.iter().filter(|id| id.method == Method::Both).collect();
    assert!(both.len() >= 10);
    for id in both {
        let diff = identity_difference(lz(), id).unwrap();
        assert!(p.zero_oracle(&diff).unwrap(), "{}", id.id);
        assert!(lz().rules().is_zero(&diff).unwrap(), "{}", id.id);
    }
}

#[test]
fn perturbed_identities_fail() {
    // a wrong coefficient must be caught by both methods
    let p = Pairing::new(Params::Standard);
    let wrong = Identity { id: "wrong", lhs: "E12*e2", rhs: "s^3*e2*E12", method: Method::Both };
    let r = check_identity(lz(), &p, &wrong);
    assert_eq!((r.rewriter, r.oracle), (Some(false), Some(false)));
}

#[test]
fn preservation_matrix() {
    let m = t_preservation_matrix(lz()).unwrap();
    assert_eq!(m.len(), 2 * RELATION_IDS.len());
    for c in &m {
        assert!(c.passed(), "T{} {} {:?}", c.map + 1, c.relation_id, c.failures);
    }
}

#[test]
fn swapped_target_rules_do_not_hold() {
    // the images satisfy the (r, s) relations, not their (s^-1, r^-1) substitution
    let swapped = Lusztig::new(RuleSet::shared(Params::Swapped)).unwrap();
    let m = t_preservation_matrix(&swapped).unwrap();
    assert!(m.iter().any(|c| !c.passed()));
    assert!(m.iter().filter(|c| c.relation_id.starts_with("serre")).all(|c| !c.passed()));
}

#[test]
fn pairing_is_transported() {
    assert!(pairing_transport_holds());
}

#[test]
fn root_vectors_match_adjoint_action() {
    let rules = RuleSet::shared(Params::Standard);
    let reg = RootVectorRegistry::new(&rules).unwrap();
    assert_eq!(reg.vectors.len(), ROOT_VECTOR_NAMES.len());
    assert!(reg.get("E1112").is_some());
    for (name, x) in adjoint_serre_elements(&rules).unwrap() {
        assert!(x.is_zero(), "{name}");
    }
}

#[test]
fn divided_power_brackets_numerically() {
    let dp = DividedPowerCtx::target();
    let (r, s) = (BigRational::from_integer(2.into()), BigRational::from_integer(3.into()));
    // <k>_i = (s_i^-k - r_i^-k) / (s_i^-1 - r_i^-1) with r_i = r^d_i
    for i in 0..2 {
        let d = CartanData::D[i] as i32;
        let ri = num_traits::pow::Pow::pow(&r, d);
        let si = num_traits::pow::Pow::pow(&s, d);
        for k in 1..=4 {
            let num = num_traits::pow::Pow::pow(&si, -k) - num_traits::pow::Pow::pow(&ri, -k);
            let den = num_traits::pow::Pow::pow(&si, -1) - num_traits::pow::Pow::pow(&ri, -1);
            assert_eq!(dp.bracket(i, k as u32).eval(&r, &s).unwrap(), num / den);
        }
    }
    let three = dp.factorial(0, 3);
    let want = RatFunc::r().add(&RatFunc::s()).mul(&qg2::scalar::delta()).div(&RatFunc::rs_pow(3, 3)).unwrap();
    assert_eq!(three, want);
}

#[test]
fn images_have_reflected_weights() {
    for i in 0..2 {
        let t = LusztigMap::new(i);
        for g in Gen::ALL {
            assert_eq!(t.image(g).weight(), Some(CartanData::reflect(i, g.weight())), "T{}({g})", i + 1);
        }
    }
}

#[test]
fn t1_images_of_e2_f2() {
    let e = lz().eval("T1(e2) + E1112/(s^3*(r + s)*Delta)").unwrap();
    assert!(lz().rules().is_zero(&e).unwrap());
    let f = lz().eval("T1(f2) + r^3*s^6/((r + s)*Delta)*F1112").unwrap();
    assert!(lz().rules().is_zero(&f).unwrap());
}

#[test]
fn inverse_images() {
    for i in 0..2 {
        for g in Gen::ALL.into_iter().filter(|g| g.is_group_like()) {
            let x = NcPoly::gen(g).mul(&NcPoly::gen(g.inverse().unwrap()));
            assert!(lz().apply(i, &x).unwrap().as_scalar().is_some_and(|c| c.is_one()));
        }
    }
}

#[test]
fn oracle_and_rewriter_agree_on_random_elements() {
    let rules = RuleSet::shared(Params::Standard);
    let p = Pairing::new(Params::Standard);
    let sample = qg2::suite::oracle_sample();
    assert_eq!(sample.len(), 50);
    for (x, member) in sample {
        let w = x.weight().unwrap();
        assert!(w.0 <= 5 && w.1 <= 2);
        let rw = rules.is_zero(&x).unwrap();
        assert_eq!(rw, p.zero_oracle(&x).unwrap(), "{}", x.render());
        if member {
            assert!(rw);
        }
    }
}
