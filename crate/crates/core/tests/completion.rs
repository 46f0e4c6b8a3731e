use qg2::relations::Params;
use qg2::rewrite::{RuleSet, DEFAULT_DEGREE_BOUND};

// The longest leading word has 8 letters, so every overlap has at most 15.
// Completing to 15 checks all of them.
#[test]
fn completion_is_stable_past_the_default_bound() {
    for params in [Params::Standard, Params::Swapped] {
        let small = RuleSet::new(params, DEFAULT_DEGREE_BOUND).unwrap();
        let large = RuleSet::new(params, 15).unwrap();
        for (a, b) in [(small.e_system(), large.e_system()), (small.f_system(), large.f_system())] {
            assert_eq!(a.rules().len(), 6);
            assert_eq!(a.stable_degree(), 8);
            assert_eq!(b.stable_degree(), 8);
            let leads = |s: &qg2::rewrite::SerreSystem| s.rules().iter().map(|r| r.lead.clone()).collect::<Vec<_>>();
            assert_eq!(leads(a), leads(b));
            assert!(b.overlaps_checked() > a.overlaps_checked());
        }
    }
}
