use qg2::double::*;
use qg2::free::{Gen, NcPoly, Word};
use qg2::relations::Params;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const A_LETTERS: [Gen; 6] = [Gen::E1, Gen::E2, Gen::W1, Gen::W2, Gen::W1Inv, Gen::W2Inv];
const F_LETTERS: [Gen; 6] = [Gen::F1, Gen::F2, Gen::W1p, Gen::W2p, Gen::W1pInv, Gen::W2pInv];

fn random_word(rng: &mut ChaCha8Rng, letters: &[Gen], max: usize) -> Word {
    let n = rng.gen_range(0..=max);
    Word::from_gens(&(0..n).map(|_| letters[rng.gen_range(0..letters.len())]).collect::<Vec<_>>())
}

fn random_elem(d: &Double, rng: &mut ChaCha8Rng) -> DoubleElem {
    let a = random_word(rng, &A_LETTERS, 2);
    let f = random_word(rng, &F_LETTERS, 2);
    d.pure(&a, &f).unwrap()
}

#[test]
fn all_sixteen_cross_pairs() {
    for params in [Params::Standard, Params::Swapped] {
        let d = Double::new(params);
        let report = verify_double_presentation(&d).unwrap();
        assert_eq!(report.len(), 16);
        for r in &report {
            assert!(r.passed(), "{params:?} {}", r.to_json());
        }
    }
}

#[test]
fn cross_relations_on_longer_words_agree() {
    let d = Double::new(Params::Standard);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let f = random_word(&mut rng, &F_LETTERS, 2);
        let a = random_word(&mut rng, &A_LETTERS, 2);
        let (lhs, rhs) = d.cross_relation_alt(&f, &a).unwrap();
        assert_eq!(lhs, rhs, "{} {}", f.render(), a.render());
        let got = d.cross_relation(&f, &a).unwrap();
        assert!(d.rules().equal(&NcPoly::word(f.concat(&a)), &got.embed()).unwrap());
    }
}

#[test]
fn product_is_associative() {
    let d = Double::new(Params::Standard);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let x = random_elem(&d, &mut rng);
        let y = random_elem(&d, &mut rng);
        let z = random_elem(&d, &mut rng);
        let l = d.mul(&d.mul(&x, &y).unwrap(), &z).unwrap();
        let r = d.mul(&x, &d.mul(&y, &z).unwrap()).unwrap();
        assert_eq!(l, r);
    }
}

#[test]
fn embeddings_are_multiplicative() {
    let d = Double::new(Params::Standard);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let a = random_word(&mut rng, &A_LETTERS, 3);
        let b = random_word(&mut rng, &A_LETTERS, 3);
        let prod = d.mul(&d.pure(&a, &Word::empty()).unwrap(), &d.pure(&b, &Word::empty()).unwrap()).unwrap();
        assert_eq!(prod, d.pure(&a.concat(&b), &Word::empty()).unwrap());
        let f = random_word(&mut rng, &F_LETTERS, 3);
        let g = random_word(&mut rng, &F_LETTERS, 3);
        let prod = d.mul(&d.pure(&Word::empty(), &f).unwrap(), &d.pure(&Word::empty(), &g).unwrap()).unwrap();
        assert_eq!(prod, d.pure(&Word::empty(), &f.concat(&g)).unwrap());
    }
}

#[test]
fn antipode_axiom_on_generators() {
    let d = Double::new(Params::Standard);
    for g in A_LETTERS {
        assert!(d.antipode_axiom_holds(&d.pure(&Word::letter(g), &Word::empty()).unwrap()).unwrap(), "{}", g.name());
    }
    for g in F_LETTERS {
        assert!(d.antipode_axiom_holds(&d.pure(&Word::empty(), &Word::letter(g)).unwrap()).unwrap(), "{}", g.name());
    }
    let mixed = d.pure(&Word::letter(Gen::E1), &Word::letter(Gen::F1)).unwrap();
    assert!(d.antipode_axiom_holds(&mixed).unwrap());
}
