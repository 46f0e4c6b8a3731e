//! The defining presentation of `U_{rho,sigma}(G2)`.
//!
//! All structure constants are stored for `(rho, sigma) = (r, s)`. The
//! presentation at `(s^-1, r^-1)` is obtained by applying the field
//! automorphism `r -> s^-1, s -> r^-1` to every coefficient.

use crate::free::{CartanData, Gen, NcPoly};
use crate::scalar::{delta, RatFunc};

/// Exponents `(a, b)` of a Laurent monomial `r^a s^b`.
pub type RsExp = (i32, i32);

/// Parameter choice for the presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Params {
    /// `(rho, sigma) = (r, s)`
    Standard,
    /// `(rho, sigma) = (s^-1, r^-1)`
    Swapped,
}

impl Params {
    pub fn name(self) -> &'static str {
        match self {
            Params::Standard => "rs",
            Params::Swapped => "swapped",
        }
    }

    pub fn parse(s: &str) -> Option<Params> {
        match s {
            "rs" | "standard" => Some(Params::Standard),
            "swapped" | "sr" => Some(Params::Swapped),
            _ => None,
        }
    }

    /// Move a coefficient written in `r, s` into this presentation.
    pub fn apply(self, c: &RatFunc) -> RatFunc {
        match self {
            Params::Standard => c.clone(),
            Params::Swapped => c.swap(),
        }
    }

    pub fn apply_exp(self, e: RsExp) -> RsExp {
        match self {
            Params::Standard => e,
            Params::Swapped => (-e.1, -e.0),
        }
    }

    pub fn rho(self) -> RatFunc {
        self.apply(&RatFunc::r())
    }

    pub fn sigma(self) -> RatFunc {
        self.apply(&RatFunc::s())
    }

    /// `rho_i = rho^{d_i}`.
    pub fn rho_i(self, i: usize) -> RatFunc {
        self.rho().pow(CartanData::D[i] as i64).unwrap()
    }

    pub fn sigma_i(self, i: usize) -> RatFunc {
        self.sigma().pow(CartanData::D[i] as i64).unwrap()
    }

    /// `1 / (rho_i - sigma_i)`.
    pub fn ef_factor(self, i: usize) -> RatFunc {
        self.rho_i(i).sub(&self.sigma_i(i)).inv().unwrap()
    }
}

/// `w_j e_i w_j^-1 = r^a s^b e_i`, indexed `[j][i]`.
pub const OMEGA_E: [[RsExp; 2]; 2] = [[(1, -1), (0, 3)], [(-3, 0), (3, -3)]];
/// `w_j f_i w_j^-1`.
pub const OMEGA_F: [[RsExp; 2]; 2] = [[(-1, 1), (0, -3)], [(3, 0), (-3, 3)]];
/// `w_j' e_i w_j'^-1`.
pub const OMEGA_PRIME_E: [[RsExp; 2]; 2] = [[(-1, 1), (3, 0)], [(0, -3), (-3, 3)]];
/// `w_j' f_i w_j'^-1`.
pub const OMEGA_PRIME_F: [[RsExp; 2]; 2] = [[(1, -1), (-3, 0)], [(0, 3), (3, -3)]];

/// Identifiers of the relation families.
pub const RELATION_IDS: [&str; 10] = [
    "group-commute",
    "omega-conj-e",
    "omega-conj-f",
    "omega-prime-conj-e",
    "omega-prime-conj-f",
    "ef-commutator",
    "serre-e2-e1",
    "serre-e1-e2",
    "serre-f2-f1",
    "serre-f1-f2",
];

/// One family of defining relations; each element is meant to vanish.
#[derive(Clone, Debug)]
pub struct DefiningRelation {
    pub id: &'static str,
    pub elements: Vec<NcPoly>,
}

fn g(x: Gen) -> NcPoly {
    NcPoly::gen(x)
}

fn word(gs: &[Gen]) -> NcPoly {
    gs.iter().fold(NcPoly::one(), |acc, &x| acc.mul(&g(x)))
}

fn rs(e: RsExp) -> RatFunc {
    RatFunc::rs_pow(e.0, e.1)
}

fn group_likes() -> [Gen; 8] {
    [Gen::W1, Gen::W1Inv, Gen::W2, Gen::W2Inv, Gen::W1p, Gen::W1pInv, Gen::W2p, Gen::W2pInv]
}

/// Coefficients `(c1, c2)` of `x^2 y - c1 x y x + c2 y x^2` for the cubic
/// Serre relation, written in `r, s`.
fn cubic_coeffs() -> (RatFunc, RatFunc) {
    let c1 = RatFunc::rs_pow(-3, 0).add(&RatFunc::rs_pow(0, -3));
    let c2 = RatFunc::rs_pow(-3, -3);
    (c1, c2)
}

/// Coefficients of the quintic Serre relation, written in `r, s`.
pub fn quintic_coeffs() -> [RatFunc; 5] {
    let r = RatFunc::r();
    let s = RatFunc::s();
    let rps = r.add(&s);
    let r2s2 = r.mul(&r).add(&s.mul(&s));
    let rs1 = r.mul(&s);
    [
        RatFunc::one(),
        rps.mul(&r2s2).neg(),
        rs1.mul(&r2s2).mul(&delta()),
        rs1.pow(3).unwrap().mul(&rps).mul(&r2s2).neg(),
        rs1.pow(6).unwrap(),
    ]
}

/// The `e`-side cubic relation.
pub fn serre_e2_e1(p: Params) -> NcPoly {
    let (c1, c2) = cubic_coeffs();
    use Gen::*;
    word(&[E2, E2, E1]).sub(&word(&[E2, E1, E2]).scale(&p.apply(&c1))).add(&word(&[E1, E2, E2]).scale(&p.apply(&c2)))
}

/// The `e`-side quintic relation.
pub fn serre_e1_e2(p: Params) -> NcPoly {
    use Gen::*;
    let c = quintic_coeffs();
    let words: [&[Gen]; 5] = [
        &[E1, E1, E1, E1, E2],
        &[E1, E1, E1, E2, E1],
        &[E1, E1, E2, E1, E1],
        &[E1, E2, E1, E1, E1],
        &[E2, E1, E1, E1, E1],
    ];
    words.iter().zip(c.iter()).fold(NcPoly::zero(), |acc, (w, k)| acc.add(&word(w).scale(&p.apply(k))))
}

/// The `f`-side cubic relation.
pub fn serre_f2_f1(p: Params) -> NcPoly {
    let (c1, c2) = cubic_coeffs();
    use Gen::*;
    word(&[F1, F2, F2]).sub(&word(&[F2, F1, F2]).scale(&p.apply(&c1))).add(&word(&[F2, F2, F1]).scale(&p.apply(&c2)))
}

/// The `f`-side quintic relation.
pub fn serre_f1_f2(p: Params) -> NcPoly {
    use Gen::*;
    let c = quintic_coeffs();
    let words: [&[Gen]; 5] = [
        &[F2, F1, F1, F1, F1],
        &[F1, F2, F1, F1, F1],
        &[F1, F1, F2, F1, F1],
        &[F1, F1, F1, F2, F1],
        &[F1, F1, F1, F1, F2],
    ];
    words.iter().zip(c.iter()).fold(NcPoly::zero(), |acc, (w, k)| acc.add(&word(w).scale(&p.apply(k))))
}

fn conj_family(p: Params, table: &[[RsExp; 2]; 2], conj: fn(usize) -> Gen, target: fn(usize) -> Gen) -> Vec<NcPoly> {
    let mut out = Vec::new();
    for j in 0..2 {
        for i in 0..2 {
            let c = rs(p.apply_exp(table[j][i]));
            // w x - c x w
            let lhs = g(conj(j)).mul(&g(target(i)));
            let rhs = g(target(i)).mul(&g(conj(j))).scale(&c);
            out.push(lhs.sub(&rhs));
        }
    }
    out
}

/// All defining relations of `U_{rho,sigma}(G2)` for the given parameters.
pub fn defining_relations(p: Params) -> Vec<DefiningRelation> {
    let gl = group_likes();
    let mut commute = Vec::new();
    for (a, &x) in gl.iter().enumerate() {
        for &y in &gl[a + 1..] {
            if Some(y) == x.inverse() {
                commute.push(g(x).mul(&g(y)).sub(&NcPoly::one()));
                commute.push(g(y).mul(&g(x)).sub(&NcPoly::one()));
            } else {
                commute.push(g(x).mul(&g(y)).sub(&g(y).mul(&g(x))));
            }
        }
    }
    let mut ef = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut el = g(Gen::e(i)).commutator(&g(Gen::f(j)));
            if i == j {
                let k = g(Gen::w(i, 1)).sub(&g(Gen::wp(i, 1))).scale(&p.ef_factor(i));
                el = el.sub(&k);
            }
            ef.push(el);
        }
    }
    vec![
        DefiningRelation { id: "group-commute", elements: commute },
        DefiningRelation { id: "omega-conj-e", elements: conj_family(p, &OMEGA_E, |j| Gen::w(j, 1), Gen::e) },
        DefiningRelation { id: "omega-conj-f", elements: conj_family(p, &OMEGA_F, |j| Gen::w(j, 1), Gen::f) },
        DefiningRelation {
            id: "omega-prime-conj-e",
            elements: conj_family(p, &OMEGA_PRIME_E, |j| Gen::wp(j, 1), Gen::e),
        },
        DefiningRelation {
            id: "omega-prime-conj-f",
            elements: conj_family(p, &OMEGA_PRIME_F, |j| Gen::wp(j, 1), Gen::f),
        },
        DefiningRelation { id: "ef-commutator", elements: ef },
        DefiningRelation { id: "serre-e2-e1", elements: vec![serre_e2_e1(p)] },
        DefiningRelation { id: "serre-e1-e2", elements: vec![serre_e1_e2(p)] },
        DefiningRelation { id: "serre-f2-f1", elements: vec![serre_f2_f1(p)] },
        DefiningRelation { id: "serre-f1-f2", elements: vec![serre_f1_f2(p)] },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_tables_invert_e_tables() {
        for j in 0..2 {
            for i in 0..2 {
                assert_eq!(OMEGA_E[j][i], (-OMEGA_F[j][i].0, -OMEGA_F[j][i].1));
                assert_eq!(OMEGA_PRIME_E[j][i], (-OMEGA_PRIME_F[j][i].0, -OMEGA_PRIME_F[j][i].1));
            }
        }
    }

    #[test]
    fn swapped_ef_factor() {
        // 1 / (s^-1 - r^-1) = r s / (r - s)
        let want = RatFunc::r().mul(&RatFunc::s()).div(&RatFunc::r().sub(&RatFunc::s())).unwrap();
        assert_eq!(Params::Swapped.ef_factor(0), want);
    }

    #[test]
    fn ids_cover_all_families() {
        let ids: Vec<_> = defining_relations(Params::Standard).iter().map(|r| r.id).collect();
        assert_eq!(ids, RELATION_IDS.to_vec());
    }
}
