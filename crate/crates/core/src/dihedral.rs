//! Integral cohomology of the dihedral group D8, its mod 2 reduction,
//! the connecting homomorphism of the Bockstein exact sequence, and the
//! verifier for the relation-proving strategy that pushes elements from
//! H*(BD8) down to H*(B(P^m,2)).
//!
//! The ring H*(BD8) is Z[a2, b2, c3, d4] modulo 2a2 = 2b2 = 2c3 = 0,
//! 4d4 = 0, b2^2 = a2 b2, c3^2 = a2 d4 (signs immaterial on 2-torsion).
//! Monomials a2^i b2^eb c3^ec d4^j with eb, ec <= 1 form an additive
//! generating set; the pure d4-powers carry Z4, everything else Z2.

use crate::exactalg::{binom_mod2, binom_mod4, F2Matrix};
use crate::intrings::{add_term_b, BIntRing, IntClassB, IntMonB};
use crate::mod2rings::{project_d8_to_b, Mod2Class, RingTag};
use std::collections::BTreeMap;
use std::fmt;

/// Element of H*(BD8): integer coefficient on 1, residue coefficients on
/// torsion monomials (mod 4 on pure d4-powers, mod 2 elsewhere).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct D8IntClass {
    pub coeff_one: i64,
    pub torsion: BTreeMap<IntMonB, u8>,
}

impl D8IntClass {
    pub fn zero() -> Self {
        D8IntClass::default()
    }

    pub fn one() -> Self {
        D8IntClass {
            coeff_one: 1,
            torsion: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_one == 0 && self.torsion.is_empty()
    }

    /// c * a2^i b2^eb c3^ec d4^j (already an additive generator; only the
    /// coefficient is reduced).
    pub fn monomial_scaled(i: u32, eb: u8, ec: u8, j: u32, c: u8) -> Self {
        assert!(eb <= 1 && ec <= 1);
        let mut torsion = BTreeMap::new();
        add_term_b(&mut torsion, IntMonB { i, eb, ec, j }, c);
        D8IntClass {
            coeff_one: 0,
            torsion,
        }
    }

    pub fn monomial(i: u32, eb: u8, ec: u8, j: u32) -> Self {
        Self::monomial_scaled(i, eb, ec, j, 1)
    }

    pub fn a2() -> Self {
        Self::monomial(1, 0, 0, 0)
    }

    pub fn b2() -> Self {
        Self::monomial(0, 1, 0, 0)
    }

    pub fn c3() -> Self {
        Self::monomial(0, 0, 1, 0)
    }

    pub fn d4() -> Self {
        Self::monomial(0, 0, 0, 1)
    }

    pub fn add(&self, other: &D8IntClass) -> D8IntClass {
        let mut out = self.clone();
        out.coeff_one += other.coeff_one;
        for (mon, c) in &other.torsion {
            add_term_b(&mut out.torsion, *mon, *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> D8IntClass {
        let km = k.rem_euclid(4) as u8;
        let mut torsion = BTreeMap::new();
        for (mon, c) in &self.torsion {
            add_term_b(&mut torsion, *mon, (c * km) % 4);
        }
        D8IntClass {
            coeff_one: self.coeff_one * k,
            torsion,
        }
    }
}

impl fmt::Display for D8IntClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.coeff_one != 0 {
            parts.push(self.coeff_one.to_string());
        }
        for (mon, c) in &self.torsion {
            let mut factors = Vec::new();
            if *c != 1 {
                factors.push(c.to_string());
            }
            if mon.i > 0 {
                factors.push(if mon.i == 1 {
                    "a2".into()
                } else {
                    format!("a2^{}", mon.i)
                });
            }
            if mon.eb == 1 {
                factors.push("b2".into());
            }
            if mon.ec == 1 {
                factors.push("c3".into());
            }
            if mon.j > 0 {
                factors.push(if mon.j == 1 {
                    "d4".into()
                } else {
                    format!("d4^{}", mon.j)
                });
            }
            parts.push(format!("{} (mod {})", factors.join("*"), mon.modulus()));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Product in H*(BD8): distributes and folds b2^2 -> a2 b2 and
/// c3^2 -> a2 d4; no truncation (the ring is infinite).
pub fn mul_d8(a: &D8IntClass, b: &D8IntClass) -> D8IntClass {
    let mut out = D8IntClass::zero();
    out.coeff_one = a.coeff_one * b.coeff_one;
    let a1 = a.coeff_one.rem_euclid(4) as u8;
    let b1 = b.coeff_one.rem_euclid(4) as u8;
    for (mon, c) in &b.torsion {
        add_term_b(&mut out.torsion, *mon, (a1 * c) % 4);
    }
    for (mon, c) in &a.torsion {
        add_term_b(&mut out.torsion, *mon, (b1 * c) % 4);
    }
    for (ma, ca) in &a.torsion {
        for (mb, cb) in &b.torsion {
            let mut i = ma.i + mb.i;
            let mut eb = ma.eb + mb.eb;
            let mut ec = ma.ec + mb.ec;
            let mut j = ma.j + mb.j;
            if eb == 2 {
                eb = 1;
                i += 1;
            }
            if ec == 2 {
                ec = 0;
                i += 1;
                j += 1;
            }
            add_term_b(&mut out.torsion, IntMonB { i, eb, ec, j }, (ca * cb) % 4);
        }
    }
    out
}

/// Mod 2 reduction H*(BD8) -> H*(BD8; F2).
pub fn rho_d8(a: &D8IntClass) -> Mod2Class {
    let mut raws: Vec<(u32, u32, u32)> = Vec::new();
    if a.coeff_one.rem_euclid(2) == 1 {
        raws.push((0, 0, 0));
    }
    for (mon, c) in &a.torsion {
        if c % 2 == 1 {
            raws.push((
                mon.eb as u32,
                2 * mon.i + mon.eb as u32 + mon.ec as u32,
                mon.ec as u32 + 2 * mon.j,
            ));
        }
    }
    Mod2Class::from_uvw_raw(RingTag::D8, &raws)
}

/// Connecting map of the Bockstein exact sequence of BD8, on the basis
/// monomials u1^eps v1^{2i1+e1} w2^{2i2+e2} (four parity cases).
pub fn partial(c: &Mod2Class) -> D8IntClass {
    assert_eq!(c.tag(), RingTag::D8, "partial is defined on H*(BD8; F2)");
    let mut out = D8IntClass::zero();
    for mon in c.uvw_terms() {
        let eps = mon.eps as u32;
        let (i1, e1) = (mon.r / 2, mon.r % 2);
        let (i2, e2) = (mon.s / 2, mon.s % 2);
        let (coeff, i, eb, ec, j) = match (e1, e2) {
            (0, 0) => (eps, i1, 1, 0, i2),
            (1, 1) => (eps, i1, 1, 1, i2),
            (1, 0) => (1 + eps, i1 + 1, 0, 0, i2),
            _ => (1 + eps, i1, 0, 1 - eps, i2 + eps),
        };
        add_term_b(
            &mut out.torsion,
            IntMonB {
                i,
                eb: eb as u8,
                ec: ec as u8,
                j,
            },
            coeff as u8,
        );
    }
    out
}

/// sigma_{2r} in H*(BD8).
pub fn sigma_d8(r: u32) -> D8IntClass {
    let mut out = D8IntClass::zero();
    if r == 0 {
        out.coeff_one = 1;
        return out;
    }
    for j in 0..=r / 2 {
        let i = r - 2 * j;
        let c = binom_mod4((i + j) as u64, j as u64).value as u8;
        add_term_b(&mut out.torsion, IntMonB { i, eb: 0, ec: 0, j }, c);
    }
    out
}

/// iota_{2r} in H*(BD8).
pub fn iota_d8(r: u32) -> D8IntClass {
    let mut out = D8IntClass::zero();
    if r % 2 == 1 {
        return out;
    }
    if r == 0 {
        out.coeff_one = 2;
        return out;
    }
    add_term_b(
        &mut out.torsion,
        IntMonB {
            i: 0,
            eb: 0,
            ec: 0,
            j: r / 2,
        },
        2,
    );
    out
}

/// R_{r,s} in H*(BD8).
pub fn rpoly_d8(r: u32, s: u32) -> D8IntClass {
    assert!(s <= r);
    let mut out = D8IntClass::zero();
    if r == 0 {
        out.coeff_one = 1;
        return out;
    }
    let top = r - s;
    for k in 0..=top / 2 {
        let c = binom_mod4((top - k) as u64, k as u64).value as u8;
        add_term_b(
            &mut out.torsion,
            IntMonB {
                i: top - 2 * k,
                eb: 0,
                ec: 0,
                j: s + k,
            },
            c,
        );
    }
    out
}

/// Restriction of a class of H*(BD8) along the classifying map of
/// B(P^m,2): substitute generators and normal-form.
pub fn ambient_map_b(a: &D8IntClass, ring: &BIntRing) -> IntClassB {
    let mut out = IntClassB {
        coeff_one: a.coeff_one,
        ..IntClassB::zero()
    };
    for (mon, c) in &a.torsion {
        out = out.add(&ring.monomial_scaled(mon.i, mon.eb, mon.ec, mon.j, *c));
    }
    out
}

/// The additive generator monomials of H^d(BD8), sorted.
pub fn d8_monomials_of_degree(d: u32) -> Vec<IntMonB> {
    let mut out = Vec::new();
    for ec in 0..=1u32 {
        for eb in 0..=1u32 {
            for j in 0..=d / 4 {
                let used = 2 * eb + 3 * ec + 4 * j;
                if d >= used && (d - used) % 2 == 0 {
                    let i = (d - used) / 2;
                    if i == 0 && eb == 0 && ec == 0 && j == 0 {
                        continue; // the unit
                    }
                    out.push(IntMonB {
                        i,
                        eb: eb as u8,
                        ec: ec as u8,
                        j,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Per-degree kernel dimension (GF(2) layer) of the restriction
/// H*(BD8) -> H*(B(P^m,2)) in degrees 0..=max_degree.
///
/// A homomorphism of abelian 2-groups of exponent <= 4 is injective iff
/// it is injective on the 2-torsion subgroup, which is an F2 vector
/// space spanned by the order-2 monomials together with twice the pure
/// d4-power; the reported number is the kernel dimension of that layer.
pub fn ambient_kernel_dims_b(m: u32, max_degree: u32) -> Vec<usize> {
    let ring = BIntRing::new(m);
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mons = d8_monomials_of_degree(d);
        if mons.is_empty() {
            out.push(0);
            continue;
        }
        // images of the order-2 generators of the source
        let mut images: Vec<IntClassB> = Vec::new();
        for mon in &mons {
            if mon.is_pure_d4() {
                images.push(ring.monomial_scaled(mon.i, mon.eb, mon.ec, mon.j, 2));
            } else {
                images.push(ring.monomial_scaled(mon.i, mon.eb, mon.ec, mon.j, 1));
            }
        }
        // coordinates over the 2-torsion of the target: order-2 basis
        // monomials contribute their coefficient mod 2, the pure slot
        // contributes coefficient/2
        let basis = ring.torsion_basis(d);
        let index: BTreeMap<IntMonB, usize> =
            basis.iter().enumerate().map(|(k, mon)| (*mon, k)).collect();
        let rows: Vec<Vec<bool>> = images
            .iter()
            .map(|img| {
                let mut row = vec![false; basis.len()];
                for (mon, c) in &img.torsion {
                    let bit = if mon.is_pure_d4() {
                        assert!(c % 2 == 0, "order-2 source with odd pure image");
                        (c / 2) % 2 == 1
                    } else {
                        c % 2 == 1
                    };
                    if bit {
                        row[index[mon]] = true;
                    }
                }
                row
            })
            .collect();
        let mat = F2Matrix::from_rows(&rows, basis.len().max(1));
        out.push(mons.len() - mat.rank());
    }
    out
}

/// The (m, case) pairs with m <= max_m covered by the five construction
/// bullets: cases 1-2 for even m with t odd >= 3, case 3 for even m with
/// t even >= 4, case 4 for m = 3, case 5 for m = 5.
pub fn strategy_cases_in_range(max_m: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        if m == 3 {
            out.push((m, 4));
        } else if m == 5 {
            out.push((m, 5));
        } else if m % 2 == 0 {
            let t = m / 2;
            if t >= 3 && t % 2 == 1 {
                out.push((m, 1));
                out.push((m, 2));
            } else if t >= 4 && t % 2 == 0 {
                out.push((m, 3));
            }
        }
    }
    out
}

/// Verifies one bullet of the relation-proving strategy: constructs the
/// classes zeta (in H*(BD8)), eta (in H*(BD8; F2)), and xi (in H*(BD8)),
/// then checks
///
/// (a) rho(xi) + eta restricts to zero in H*(B(P^m,2); F2), and
/// (b) partial(eta) = zeta exactly in H*(BD8), and both restrict to the
///     zero class of H*(B(P^m,2)) (the relation asserted to hold there).
pub fn verify_strategy(m: u32, case_id: u32) -> bool {
    let ring = BIntRing::new(m);
    let t = ring.t;
    let mk_eta = |terms: &[(u32, u32, u32)]| Mod2Class::from_uvw_raw(RingTag::D8, terms);
    let (zeta, eta, xi) = match case_id {
        1 => {
            assert!(m % 2 == 0 && t % 2 == 1 && t >= 3, "case 1 needs even m, odd t >= 3");
            let ell = (t - 1) / 2;
            let zeta = mul_d8(&D8IntClass::a2(), &sigma_d8(t));
            let mut eta_terms = Vec::new();
            let mut xi = D8IntClass::zero();
            for j in 0..=ell {
                if binom_mod2((2 * t - 2 * j) as u64, (2 * j) as u64) {
                    eta_terms.push((0, 2 * t + 1 - 4 * j, 2 * j));
                }
                if binom_mod2((2 * t - 1 - 2 * j) as u64, (2 * j + 1) as u64) {
                    xi = xi.add(&D8IntClass::monomial(t - 1 - 2 * j, 0, 1, j));
                }
            }
            (zeta, mk_eta(&eta_terms), xi)
        }
        2 => {
            assert!(m % 2 == 0 && t % 2 == 1 && t >= 3, "case 2 needs even m, odd t >= 3");
            let ell = (t - 1) / 2;
            let zeta = mul_d8(&D8IntClass::b2(), &sigma_d8(t)).add(&iota_d8(t + 1));
            let mut eta_terms = vec![(1, 0, t)];
            let mut xi = D8IntClass::zero();
            for j in 0..=ell {
                if binom_mod2((2 * t - 2 * j) as u64, (2 * j) as u64) {
                    eta_terms.push((1, 2 * t - 4 * j, 2 * j));
                }
                if j < ell && binom_mod2((2 * t - 1 - 2 * j) as u64, (2 * j + 1) as u64) {
                    xi = xi.add(&D8IntClass::monomial(t - 2 - 2 * j, 1, 1, j));
                }
            }
            (zeta, mk_eta(&eta_terms), xi)
        }
        3 => {
            assert!(m % 2 == 0 && t % 2 == 0 && t >= 4, "case 3 needs even m, even t >= 4");
            let ell = t / 2;
            let zeta = mul_d8(
                &mul_d8(&D8IntClass::b2(), &D8IntClass::d4()),
                &sigma_d8(t - 1),
            )
            .add(&iota_d8(t + 2));
            let mut eta_terms = vec![(1, 0, t + 1)];
            let mut xi = D8IntClass::zero();
            for j in 0..ell {
                if binom_mod2((2 * t - 2 - 2 * j) as u64, (2 * j) as u64) {
                    eta_terms.push((1, 2 * t - 2 - 4 * j, 2 + 2 * j));
                }
                if j + 1 < ell && binom_mod2((2 * t - 3 - 2 * j) as u64, (2 * j + 1) as u64) {
                    xi = xi.add(&D8IntClass::monomial(t - 3 - 2 * j, 1, 1, j + 1));
                }
            }
            (zeta, mk_eta(&eta_terms), xi)
        }
        4 => {
            assert!(m == 3, "case 4 is the m = 3 bullet");
            let zeta = mul_d8(&D8IntClass::a2(), &sigma_d8(1));
            (zeta, mk_eta(&[(0, 3, 0)]), D8IntClass::zero())
        }
        5 => {
            assert!(m == 5, "case 5 is the m = 5 bullet");
            let zeta = mul_d8(
                &mul_d8(&D8IntClass::b2(), &D8IntClass::d4()),
                &sigma_d8(1),
            )
            .add(&iota_d8(4));
            (
                zeta,
                mk_eta(&[(1, 2, 2), (1, 0, 3)]),
                D8IntClass::monomial(1, 1, 1, 0),
            )
        }
        other => panic!("unknown strategy case {other}"),
    };

    // (a) rho(xi) agrees with eta after restriction to B(m)
    let check_a = project_d8_to_b(&rho_d8(&xi).add(&eta), m).is_zero();
    // (b) the connecting map sends eta to zeta upstairs, and the
    // restriction downstairs kills it (the asserted relation)
    let d_eta = partial(&eta);
    let check_b = d_eta == zeta
        && ambient_map_b(&zeta, &ring).is_zero()
        && ambient_map_b(&d_eta, &ring).is_zero();
    check_a && check_b
}

/// Spot checks of exactness of the Bockstein sequence of BD8 on all
/// monomials of degree <= max_degree: partial(rho(x)) = 0, and the only
/// basis monomials whose connecting image is divisible by 2 (yet nonzero)
/// are u1 w2^{odd}, with image 2 d4^{(s+1)/2}.
pub fn exactness_spot_check(max_degree: u32) -> bool {
    for d in 1..=max_degree {
        for mon in d8_monomials_of_degree(d) {
            let x = D8IntClass::monomial(mon.i, mon.eb, mon.ec, mon.j);
            if !partial(&rho_d8(&x)).is_zero() {
                return false;
            }
        }
        for eps in 0..=1u32 {
            if eps > d {
                continue;
            }
            for s in 0..=(d - eps) / 2 {
                let r = d - eps - 2 * s;
                let c = Mod2Class::from_uvw_raw(RingTag::D8, &[(eps, r, s)]);
                let image = partial(&c);
                let has_even_pure = image
                    .torsion
                    .iter()
                    .any(|(mon, c)| mon.is_pure_d4() && c % 2 == 0);
                let expected = eps == 1 && r == 0 && s % 2 == 1;
                if has_even_pure != expected {
                    return false;
                }
                if expected {
                    let want = D8IntClass::monomial_scaled(0, 0, 0, (s + 1) / 2, 2);
                    if image != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mod2rings::{mul_mod2, sq1};

    #[test]
    fn d8_products() {
        // c3^2 = a2 d4
        assert_eq!(
            mul_d8(&D8IntClass::c3(), &D8IntClass::c3()),
            D8IntClass::monomial(1, 0, 0, 1)
        );
        // b2^2 = a2 b2
        assert_eq!(
            mul_d8(&D8IntClass::b2(), &D8IntClass::b2()),
            D8IntClass::monomial(1, 1, 0, 0)
        );
        // 2 a2 annihilates
        assert!(mul_d8(&D8IntClass::a2().scale(2), &D8IntClass::d4()).is_zero());
        // d4^2 keeps its Z4 coefficient slot
        let d4sq = mul_d8(&D8IntClass::d4(), &D8IntClass::d4());
        assert_eq!(d4sq, D8IntClass::monomial(0, 0, 0, 2));
        assert!(!d4sq.scale(2).is_zero());
    }

    #[test]
    fn partial_pinned_values() {
        // partial(w2) = c3
        let w2 = Mod2Class::from_uvw_raw(RingTag::D8, &[(0, 0, 1)]);
        assert_eq!(partial(&w2), D8IntClass::c3());
        // partial(v1) = a2
        let v1 = Mod2Class::from_uvw_raw(RingTag::D8, &[(0, 1, 0)]);
        assert_eq!(partial(&v1), D8IntClass::a2());
        // partial(u1 w2^{2i+1}) = 2 d4^{i+1}
        for i in 0..4u32 {
            let c = Mod2Class::from_uvw_raw(RingTag::D8, &[(1, 0, 2 * i + 1)]);
            assert_eq!(
                partial(&c),
                D8IntClass::monomial_scaled(0, 0, 0, i + 1, 2)
            );
        }
        // partial(u1 v1^{2i1} w2^{2i2+1}) = 0 for i1 > 0
        let c = Mod2Class::from_uvw_raw(RingTag::D8, &[(1, 2, 1)]);
        assert!(partial(&c).is_zero());
    }

    #[test]
    fn partial_compatible_with_sq1() {
        // rho(partial(c)) = Sq1(c) on every monomial of degree <= 40
        for d in 1..=40u32 {
            for eps in 0..=1u32 {
                if eps > d {
                    continue;
                }
                for s in 0..=(d - eps) / 2 {
                    let r = d - eps - 2 * s;
                    let c = Mod2Class::from_uvw_raw(RingTag::D8, &[(eps, r, s)]);
                    assert_eq!(rho_d8(&partial(&c)), sq1(&c), "eps={eps} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn exactness_checks() {
        assert!(exactness_spot_check(40));
    }

    #[test]
    fn identities_exact_in_d8() {
        // R_{r,0} = sigma_{2r}; R_{r,1} = sigma_{2r+2} - a2 sigma_{2r};
        // R_{r,s+2} = d4 R_{r,s} - a2 R_{r,s+1} — exactly in H*(BD8)
        for r in 0..=8u32 {
            assert_eq!(rpoly_d8(r, 0), sigma_d8(r));
            if r >= 1 {
                let rhs = sigma_d8(r + 1).add(&mul_d8(&D8IntClass::a2(), &sigma_d8(r)).scale(-1));
                assert_eq!(rpoly_d8(r, 1), rhs, "r={r}");
            }
            if r >= 2 {
                for s in 0..=r - 2 {
                    let rhs = mul_d8(&D8IntClass::d4(), &rpoly_d8(r, s))
                        .add(&mul_d8(&D8IntClass::a2(), &rpoly_d8(r, s + 1)).scale(-1));
                    assert_eq!(rpoly_d8(r, s + 2), rhs, "r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn strategy_all_cases_small() {
        for (m, case) in strategy_cases_in_range(12) {
            assert!(verify_strategy(m, case), "m={m} case={case}");
        }
    }

    #[test]
    fn ambient_kernel_trivial_b() {
        for m in 1..=12 {
            let dims = ambient_kernel_dims_b(m, m);
            assert!(dims.iter().all(|&k| k == 0), "m={m}: {dims:?}");
        }
    }

    #[test]
    fn ambient_restriction_examples() {
        // a2 b2 restricts to 2 d4 at m = 3
        let r3 = BIntRing::new(3);
        let img = ambient_map_b(&mul_d8(&D8IntClass::a2(), &D8IntClass::b2()), &r3);
        assert_eq!(img, r3.monomial_scaled(0, 0, 0, 1, 2));
        // b2^3 = a2^2 b2 restricts to 0
        let b2 = D8IntClass::b2();
        let b2cubed = mul_d8(&mul_d8(&b2, &b2), &b2);
        assert!(ambient_map_b(&b2cubed, &r3).is_zero());
    }

    #[test]
    fn rho_d4e_expansion() {
        // the displayed expansion of rho(d4 e_m) for m = 7, 9, 11
        for m in [7u32, 9, 11] {
            let ring = BIntRing::new(m);
            let (t, ell) = (ring.t, ring.ell);
            let lhs = ring.rho(&ring.mul(&ring.d4(), &ring.e()));
            let mut terms = Vec::new();
            for i in 1..=ell {
                if binom_mod2((t - i) as u64, (i - 1) as u64) {
                    terms.push((1, 2 * t - 4 * i + 2, 2 * i + 1));
                }
            }
            let rhs = Mod2Class::from_uvw_raw(RingTag::B(m), &terms);
            assert_eq!(lhs, rhs, "m={m}");
            // and the mod 2 product agrees
            let prod = mul_mod2(&ring.rho(&ring.d4()), &ring.rho(&ring.e()));
            assert_eq!(prod, rhs, "m={m}");
        }
    }
}
