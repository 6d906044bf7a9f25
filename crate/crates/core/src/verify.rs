//! Batch verification suites behind `confcoh verify`.
//!
//! Each check returns `Ok(())` or a message describing the first
//! failure. The confluence checks re-implement every rewriting system
//! as a single-step relation applied at randomly chosen positions in a
//! randomly chosen order, and compare the resulting normal forms with
//! the recursive normalizers used by the library.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bockstein::{closed_form, derive_groups};
use crate::dihedral::{
    ambient_kernel_dims_b, exactness_spot_check, strategy_cases_in_range, verify_strategy,
};
use crate::exactalg::binom_mod2;
use crate::intrings::{
    ambient_kernel_dims_f, wprime_check, BIntRing, FIntRing, IntClassB, IntClassF, IntMonB,
    IntMonF,
};
use crate::mod2rings::{basis_of_degree, mul_mod2, sq1, Mod2Class, MonUVW, MonXY, RingTag};
use crate::tcs::cup_length_b2;
use crate::Space;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Rings,
    Bss,
    Tcs,
    Strategy,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rings" => Ok(Suite::Rings),
            "bss" => Ok(Suite::Bss),
            "tcs" => Ok(Suite::Tcs),
            "strategy" => Ok(Suite::Strategy),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected rings, bss, tcs, strategy, or all)"
            )),
        }
    }
}

pub struct CheckOutcome {
    pub name: &'static str,
    pub result: Result<(), String>,
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

// ---------------------------------------------------------------------------
// bss suite
// ---------------------------------------------------------------------------

pub fn check_oracle_equivalence(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(1)..=hi {
        for space in [Space::F, Space::B] {
            ensure!(
                derive_groups(space, m) == closed_form(space, m),
                "spectral-sequence table differs from closed form at {space}, m={m}"
            );
        }
    }
    Ok(())
}

pub fn check_mod2_dimension_tables(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(1)..=hi {
        let dim_f: Vec<usize> = (0..=2 * m)
            .map(|d| basis_of_degree(RingTag::F(m), d).len())
            .collect();
        let dim_b: Vec<usize> = (0..=2 * m)
            .map(|d| basis_of_degree(RingTag::B(m), d).len())
            .collect();
        for i in 0..=2 * m {
            let expect = if i <= m - 1 {
                (i + 1) as usize
            } else if i <= 2 * m - 1 {
                (2 * m - i) as usize
            } else {
                0
            };
            ensure!(
                dim_b[i as usize] == expect,
                "dim H^{i}(B; F2) = {} but expected {expect} at m={m}",
                dim_b[i as usize]
            );
        }
        let total: usize = dim_f.iter().sum();
        ensure!(
            total == (m * (m + 1)) as usize,
            "total mod-2 dimension of F is {total}, expected m(m+1) at m={m}"
        );
        for i in 0..=2 * m - 1 {
            let dual = 2 * m - 1 - i;
            ensure!(
                dim_f[i as usize] == dim_f[dual as usize],
                "Poincare symmetry fails for F at m={m}, degree {i}"
            );
            ensure!(
                dim_b[i as usize] == dim_b[dual as usize],
                "Poincare symmetry fails for B at m={m}, degree {i}"
            );
        }
    }
    Ok(())
}

pub fn check_sq1_squares_to_zero(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(1)..=hi.min(20) {
        for tag in [RingTag::F(m), RingTag::B(m)] {
            for d in 0..=2 * m {
                for b in basis_of_degree(tag, d) {
                    ensure!(
                        sq1(&sq1(&b)).is_zero(),
                        "Sq1 Sq1 ({b}) != 0 in {tag:?}, m={m}"
                    );
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// rings suite: presented relations
// ---------------------------------------------------------------------------

pub fn check_displayed_relations_f(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(3)..=hi.min(25) {
        let ring = FIntRing::new(m);
        let (t, delta) = (ring.t, ring.delta);
        ensure!(ring.monomial(t + 1, 0, 0).is_zero(), "x2^{{t+1}} != 0, m={m}");
        ensure!(ring.monomial(0, t + 1, 0).is_zero(), "y2^{{t+1}} != 0, m={m}");
        let mut s = ring.zero();
        for i in 0..=t {
            s = s.add(&ring.monomial(i, t - i, 1));
        }
        ensure!(s.is_zero(), "sum_{{i+j=t}} x2^i y2^j z3 != 0, m={m}");
        if delta == 0 {
            ensure!(ring.monomial(t, t, 0).is_zero(), "x2^t y2^t != 0, m={m}");
            let mut s = ring.zero();
            for i in 0..t {
                s = s.add(&ring.monomial(i, t - 1 - i, 1));
            }
            ensure!(s.is_zero(), "sum_{{i+j=t-1}} x2^i y2^j z3 != 0, m={m}");
            for mu in [ring.x2(), ring.y2(), ring.z3(), ring.w()] {
                ensure!(
                    ring.mul(&ring.w(), &mu).is_zero(),
                    "w does not annihilate the generators, m={m}"
                );
            }
        } else {
            let lhs = ring.mul(&ring.w(), &ring.y2()).add(&ring.monomial(t, 0, 1));
            ensure!(lhs.is_zero(), "w y2 != x2^t z3, m={m}");
            for mu in [ring.x2(), ring.z3(), ring.w()] {
                ensure!(
                    ring.mul(&ring.w(), &mu).is_zero(),
                    "w x2 / w z3 / w^2 != 0, m={m}"
                );
            }
        }
    }
    Ok(())
}

pub fn check_displayed_relations_b(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(3)..=hi.min(25) {
        let r = BIntRing::new(m);
        let (t, delta) = (r.t, r.delta);
        ensure!(r.mul(&r.a2(), &r.sigma(t)).is_zero(), "a2 sigma_2t != 0, m={m}");
        ensure!(
            r.mul(&r.b2(), &r.sigma(t)).add(&r.iota(t + 1)).is_zero(),
            "b2 sigma_2t + iota != 0, m={m}"
        );
        ensure!(r.mul(&r.c3(), &r.sigma(t)).is_zero(), "c3 sigma_2t != 0, m={m}");
        if delta == 0 {
            ensure!(
                r.mul(&r.c3(), &r.sigma(t - 1)).is_zero(),
                "c3 sigma_{{2t-2}} != 0, m={m}"
            );
            let lhs = r
                .mul(&r.mul(&r.b2(), &r.d4()), &r.sigma(t - 1))
                .add(&r.iota(t + 2));
            ensure!(lhs.is_zero(), "b2 d4 sigma_{{2t-2}} + iota != 0, m={m}");
            ensure!(r.monomial(0, 0, 0, t).is_zero(), "d4^t != 0, m={m}");
            for mu in [r.a2(), r.b2(), r.c3(), r.d4(), r.e()] {
                ensure!(
                    r.mul(&r.e(), &mu).is_zero(),
                    "e_{{2m-1}} does not annihilate generators, m={m}"
                );
            }
        } else {
            ensure!(
                r.mul(&r.a2(), &r.sigma(t + 1)).is_zero(),
                "a2 sigma_{{2t+2}} != 0, m={m}"
            );
            ensure!(
                r.mul(&r.b2(), &r.sigma(t + 1)).add(&r.iota(t + 2)).is_zero(),
                "b2 sigma_{{2t+2}} + iota != 0, m={m}"
            );
            ensure!(
                r.mul(&r.c3(), &r.sigma(t + 1)).is_zero(),
                "c3 sigma_{{2t+2}} != 0, m={m}"
            );
            ensure!(r.monomial(0, 0, 0, t + 1).is_zero(), "d4^{{t+1}} != 0, m={m}");
            ensure!(r.mul(&r.e(), &r.e()).is_zero(), "e^2 != 0, m={m}");
            let rhs = if r.kappa == 1 {
                r.monomial(0, 1, 1, r.ell)
            } else {
                r.zero()
            };
            ensure!(r.mul(&r.a2(), &r.e()) == rhs, "a2 e mismatch, m={m}");
            ensure!(r.mul(&r.b2(), &r.e()) == rhs, "b2 e mismatch, m={m}");
            let ce = if r.kappa == 1 {
                r.monomial(0, 1, 0, r.ell + 1)
            } else {
                r.monomial_scaled(0, 0, 0, r.ell + 1, 2)
            };
            ensure!(r.mul(&r.c3(), &r.e()) == ce, "c3 e mismatch, m={m}");
            let mut de = r.zero();
            for k in 1..=r.ell {
                if binom_mod2((t - k) as u64, (k - 1) as u64) {
                    de = de.add(&r.monomial(t - 2 * k, 1, 1, k));
                }
            }
            ensure!(r.mul(&r.d4(), &r.e()) == de, "d4 e mismatch, m={m}");
        }
    }
    Ok(())
}

pub fn check_relation_family(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(3)..=hi.min(25) {
        let r = BIntRing::new(m);
        let (t, delta) = (r.t, r.delta);
        for s in 0..=t {
            ensure!(
                r.mul(&r.a2(), &r.rpoly(t, s)).is_zero(),
                "a2 R(t,s) != 0, m={m} s={s}"
            );
            let lhs = r.mul(&r.b2(), &r.rpoly(t, s)).add(&r.iota(t + s + 1));
            ensure!(lhs.is_zero(), "b2 R(t,s) + iota != 0, m={m} s={s}");
        }
        for s in 0..=t - 1 + delta {
            ensure!(
                r.mul(&r.c3(), &r.rpoly(t - 1 + delta, s)).is_zero(),
                "c3 R(t-1+delta,s) != 0, m={m} s={s}"
            );
        }
    }
    Ok(())
}

pub fn check_sigma_r_identities(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(3)..=hi.min(25) {
        let r = BIntRing::new(m);
        for rr in 0..=8u32 {
            ensure!(r.rpoly(rr, 0) == r.sigma(rr), "R(r,0) != sigma, m={m} r={rr}");
            if rr >= 1 {
                let rhs = r.sigma(rr + 1).add(&r.mul(&r.a2(), &r.sigma(rr)).scale(-1));
                ensure!(r.rpoly(rr, 1) == rhs, "R(r,1) identity fails, m={m} r={rr}");
            }
            if rr < 2 {
                continue;
            }
            for s in 0..=rr - 2 {
                let rhs = r
                    .mul(&r.d4(), &r.rpoly(rr, s))
                    .add(&r.mul(&r.a2(), &r.rpoly(rr, s + 1)).scale(-1));
                ensure!(
                    r.rpoly(rr, s + 2) == rhs,
                    "R recursion fails, m={m} r={rr} s={s}"
                );
            }
        }
    }
    Ok(())
}

pub fn check_wprime_relations(lo: u32, hi: u32) -> Result<(), String> {
    let mut m = 5;
    while m <= hi.min(29) {
        if m >= lo {
            ensure!(wprime_check(m), "w' relations fail at m={m}");
        }
        m += 4;
    }
    Ok(())
}

pub fn check_pinned_products(_lo: u32, hi: u32) -> Result<(), String> {
    if hi >= 3 {
        let r = BIntRing::new(3);
        let two_d4 = r.monomial_scaled(0, 0, 0, 1, 2);
        ensure!(r.mul(&r.b2(), &r.b2()) == two_d4, "b2^2 != 2 d4 at m=3");
        ensure!(
            r.mul(&r.mul(&r.b2(), &r.b2()), &r.b2()).is_zero(),
            "b2^3 != 0 at m=3"
        );
        let rf = FIntRing::new(3);
        let z3sq = rf.mul(&rf.z3(), &rf.z3());
        ensure!(
            z3sq == rf.monomial(2, 1, 0).add(&rf.monomial(1, 2, 0)),
            "z3^2 != x2 y2 (x2 + y2) at m=3"
        );
    }
    if hi >= 5 {
        for eta in [0u8, 2] {
            let r = BIntRing::with_eta(5, eta);
            let mut p = r.one();
            for _ in 0..4 {
                p = r.mul(&p, &r.b2());
            }
            ensure!(
                p == r.monomial_scaled(0, 0, 0, 2, 2),
                "b2^4 != 2 d4^2 at m=5, eta={eta}"
            );
            ensure!(r.mul(&p, &r.b2()).is_zero(), "b2^5 != 0 at m=5, eta={eta}");
            let d4sq = r.mul(&r.d4(), &r.d4());
            ensure!(
                !d4sq.add(&d4sq).is_zero(),
                "d4^2 does not have order 4 at m=5"
            );
        }
        let rf = FIntRing::new(5);
        ensure!(
            rf.mul(&rf.w(), &rf.y2()) == rf.monomial(2, 0, 1),
            "w y2 != x2^2 z3 at m=5"
        );
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// rings suite: confluence under random rewrite orders
// ---------------------------------------------------------------------------

/// One rewriting pass over raw F(m) monomials: apply a single relation
/// step at a randomly chosen reducible monomial until none is left.
fn random_order_nf_f_mod2(m: u32, raw: &[MonXY], rng: &mut StdRng) -> BTreeSet<MonXY> {
    let mut set = BTreeSet::new();
    for mon in raw {
        toggle(&mut set, *mon);
    }
    loop {
        let reducible: Vec<MonXY> = set
            .iter()
            .copied()
            .filter(|mon| mon.i > m || mon.j >= m)
            .collect();
        if reducible.is_empty() {
            return set;
        }
        let mon = reducible[rng.gen_range(0..reducible.len())];
        set.remove(&mon);
        if mon.i > m {
            continue; // x1^{m+1} = 0
        }
        // y1^m = sum_{a=1..m} x1^a y1^{m-a}, applied once
        for a in 1..=m {
            toggle(
                &mut set,
                MonXY {
                    i: mon.i + a,
                    j: mon.j - a,
                },
            );
        }
    }
}

fn random_order_nf_b_mod2(m: u32, raw: &[(u32, u32, u32)], rng: &mut StdRng) -> BTreeSet<MonUVW> {
    let mut set = BTreeSet::new();
    for &(mut e, mut r, s) in raw {
        while e >= 2 {
            e -= 1;
            r += 1;
        }
        toggle(&mut set, MonUVW { eps: e as u8, r, s });
    }
    loop {
        let reducible: Vec<MonUVW> = set
            .iter()
            .copied()
            .filter(|mon| mon.s >= m || mon.r + mon.s >= m)
            .collect();
        if reducible.is_empty() {
            return set;
        }
        let mon = reducible[rng.gen_range(0..reducible.len())];
        set.remove(&mon);
        // prefer either applicable rule at random when both fire
        let drop_rule = mon.s >= m;
        let expand_rule = mon.r + mon.s >= m && mon.s < m;
        if drop_rule && (!expand_rule || rng.gen::<bool>()) {
            continue; // w2^m = 0
        }
        let head = m - mon.s;
        for k in 1..=head / 2 {
            if binom_mod2((head - k) as u64, k as u64) {
                toggle(
                    &mut set,
                    MonUVW {
                        eps: mon.eps,
                        r: mon.r - 2 * k,
                        s: mon.s + k,
                    },
                );
            }
        }
    }
}

fn random_order_nf_f_int(ring: &FIntRing, raw: &[IntMonF], rng: &mut StdRng) -> BTreeSet<IntMonF> {
    let (t, delta) = (ring.t, ring.delta);
    let drop_applies = |mon: &IntMonF| {
        if mon.ez == 0 {
            mon.i > t
                || mon.j > t
                || (mon.i == 0 && mon.j == 0)
                || (delta == 0 && mon.i == t && mon.j == t)
        } else if delta == 1 {
            mon.i > t
        } else {
            mon.i >= t || mon.j >= t
        }
    };
    let expand_applies = |mon: &IntMonF| {
        mon.ez == 1
            && if delta == 1 {
                mon.j >= t
            } else {
                mon.j + 1 == t
            }
    };
    let mut set = BTreeSet::new();
    for mon in raw {
        toggle(&mut set, *mon);
    }
    loop {
        let reducible: Vec<IntMonF> = set
            .iter()
            .copied()
            .filter(|mon| drop_applies(mon) || expand_applies(mon))
            .collect();
        if reducible.is_empty() {
            return set;
        }
        let mon = reducible[rng.gen_range(0..reducible.len())];
        set.remove(&mon);
        let can_drop = drop_applies(&mon);
        let can_expand = expand_applies(&mon);
        if can_drop && (!can_expand || rng.gen::<bool>()) {
            continue;
        }
        // the oriented z3-relation, applied once
        let top = t - 1 + delta;
        for a in 1..=top {
            toggle(
                &mut set,
                IntMonF {
                    i: mon.i + a,
                    j: mon.j - a,
                    ez: 1,
                },
            );
        }
    }
}

fn add_mod4(map: &mut BTreeMap<IntMonB, u8>, mon: IntMonB, c: u8) {
    let c = c % 4;
    if c == 0 {
        return;
    }
    let entry = map.entry(mon).or_insert(0);
    *entry = (*entry + c) % 4;
    if *entry == 0 {
        map.remove(&mon);
    }
}

fn random_order_nf_b_int(
    ring: &BIntRing,
    raw: &[(IntMonB, u8)],
    rng: &mut StdRng,
) -> BTreeMap<IntMonB, u8> {
    let (t, delta) = (ring.t, ring.delta);
    let mut map: BTreeMap<IntMonB, u8> = BTreeMap::new();
    for &(mon, c) in raw {
        add_mod4(&mut map, mon, c);
    }
    loop {
        let reducible: Vec<(IntMonB, u8)> = map
            .iter()
            .map(|(mon, c)| (*mon, *c))
            .filter(|(mon, c)| {
                let pure = mon.i == 0 && mon.eb == 0 && mon.ec == 0;
                mon.j >= t + delta
                    || (!pure && *c >= 2)
                    || (mon.ec == 1 && mon.i + mon.j + 1 >= t + delta)
                    || (mon.ec == 0 && mon.eb == 1 && mon.i + 1 + mon.j > t)
                    || (mon.ec == 0 && mon.eb == 0 && mon.i >= 1 && mon.i + mon.j > t)
            })
            .collect();
        if reducible.is_empty() {
            return map;
        }
        let (mon, c) = reducible[rng.gen_range(0..reducible.len())];
        let pure = mon.i == 0 && mon.eb == 0 && mon.ec == 0;
        // gather the applicable single-step rules and pick one at random
        let mut rules: Vec<u8> = Vec::new();
        if mon.j >= t + delta {
            rules.push(0); // d4 truncation
        }
        if !pure && c >= 2 {
            rules.push(1); // non-pure monomials are 2-torsion
        }
        if mon.j < t + delta {
            if mon.ec == 1 && mon.i + mon.j + 1 >= t + delta {
                rules.push(2);
            }
            if mon.ec == 0 && mon.eb == 1 && mon.i + 1 + mon.j > t {
                rules.push(3);
            }
            if mon.ec == 0 && mon.eb == 0 && mon.i >= 1 && mon.i + mon.j > t {
                rules.push(4);
            }
        }
        let rule = rules[rng.gen_range(0..rules.len())];
        map.remove(&mon);
        match rule {
            0 => {}
            // 2x = 0 for non-pure monomials: strip one factor of 2
            1 => add_mod4(&mut map, mon, c % 2),
            2 => {
                let head = t + delta - 1 - mon.j;
                let excess = mon.i - head;
                for k in 1..=head / 2 {
                    if binom_mod2((head - k) as u64, k as u64) {
                        add_mod4(
                            &mut map,
                            IntMonB {
                                i: excess + head - 2 * k,
                                eb: mon.eb,
                                ec: 1,
                                j: mon.j + k,
                            },
                            c,
                        );
                    }
                }
            }
            3 => {
                let head = t - mon.j;
                let excess = mon.i - head;
                for k in 1..=head / 2 {
                    if binom_mod2((head - k) as u64, k as u64) {
                        add_mod4(
                            &mut map,
                            IntMonB {
                                i: excess + head - 2 * k,
                                eb: 1,
                                ec: 0,
                                j: mon.j + k,
                            },
                            c,
                        );
                    }
                }
                if excess == 0 && (t + mon.j + 1) % 2 == 0 {
                    add_mod4(
                        &mut map,
                        IntMonB {
                            i: 0,
                            eb: 0,
                            ec: 0,
                            j: (t + mon.j + 1) / 2,
                        },
                        (2 * c) % 4,
                    );
                }
            }
            _ => {
                let head = t + 1 - mon.j;
                let excess = mon.i - head;
                for k in 1..=head / 2 {
                    if binom_mod2((head - 1 - k) as u64, k as u64) {
                        add_mod4(
                            &mut map,
                            IntMonB {
                                i: excess + head - 2 * k,
                                eb: 0,
                                ec: 0,
                                j: mon.j + k,
                            },
                            c,
                        );
                    }
                }
            }
        }
    }
}

fn toggle<T: Ord + Copy>(set: &mut BTreeSet<T>, m: T) {
    if !set.insert(m) {
        set.remove(&m);
    }
}

const CONFLUENCE_SAMPLES: usize = 500;

pub fn check_confluence(lo: u32, hi: u32) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_c0ff);
    for m in lo.max(3)..=hi.min(12) {
        let rf = FIntRing::new(m);
        let rb = BIntRing::new(m);
        for sample in 0..CONFLUENCE_SAMPLES {
            // F(m) over GF(2)
            let raw_xy: Vec<MonXY> = (0..rng.gen_range(1..=5))
                .map(|_| MonXY {
                    i: rng.gen_range(0..=m + 4),
                    j: rng.gen_range(0..=m + 4),
                })
                .collect();
            let random = random_order_nf_f_mod2(m, &raw_xy, &mut rng);
            let builtin = Mod2Class::from_xy(RingTag::F(m), &raw_xy);
            let builtin_set: BTreeSet<MonXY> = builtin.xy_terms().copied().collect();
            ensure!(
                random == builtin_set,
                "confluence fails for F(m) mod 2 at m={m}, sample {sample}"
            );

            // B(m) over GF(2)
            let raw_uvw: Vec<(u32, u32, u32)> = (0..rng.gen_range(1..=5))
                .map(|_| {
                    (
                        rng.gen_range(0..=2),
                        rng.gen_range(0..=m + 4),
                        rng.gen_range(0..=m / 2 + 2),
                    )
                })
                .collect();
            let random = random_order_nf_b_mod2(m, &raw_uvw, &mut rng);
            let builtin = Mod2Class::from_uvw_raw(RingTag::B(m), &raw_uvw);
            let builtin_set: BTreeSet<MonUVW> = builtin.uvw_terms().copied().collect();
            ensure!(
                random == builtin_set,
                "confluence fails for B(m) mod 2 at m={m}, sample {sample}"
            );

            // integral F(m) torsion
            let raw_f: Vec<IntMonF> = (0..rng.gen_range(1..=5))
                .map(|_| IntMonF {
                    i: rng.gen_range(0..=rf.t + 3),
                    j: rng.gen_range(0..=rf.t + 3),
                    ez: rng.gen_range(0..=1),
                })
                .collect();
            let random = random_order_nf_f_int(&rf, &raw_f, &mut rng);
            let mut builtin = IntClassF::zero();
            for mon in &raw_f {
                builtin = builtin.add(&rf.monomial(mon.i, mon.j, mon.ez));
            }
            ensure!(
                random == builtin.torsion,
                "confluence fails for integral F at m={m}, sample {sample}"
            );

            // integral B(m) torsion
            let raw_b: Vec<(IntMonB, u8)> = (0..rng.gen_range(1..=5))
                .map(|_| {
                    let mut mon = IntMonB {
                        i: rng.gen_range(0..=rb.t + 3),
                        eb: rng.gen_range(0..=1),
                        ec: rng.gen_range(0..=1),
                        j: rng.gen_range(0..=rb.t + 2),
                    };
                    if mon.degree() == 0 {
                        // the unit lives in the free part, not the torsion map
                        mon.j = 1;
                    }
                    (mon, rng.gen_range(1..=3))
                })
                .collect();
            let random = random_order_nf_b_int(&rb, &raw_b, &mut rng);
            let mut builtin = IntClassB::zero();
            for &(mon, c) in &raw_b {
                builtin = builtin.add(&rb.monomial_scaled(mon.i, mon.eb, mon.ec, mon.j, c));
            }
            ensure!(
                random == builtin.torsion,
                "confluence fails for integral B at m={m}, sample {sample}: raw={raw_b:?} random={random:?} builtin={:?}",
                builtin.torsion
            );
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// rings suite: mod-2 reduction
// ---------------------------------------------------------------------------

fn random_class_f(ring: &FIntRing, rng: &mut StdRng) -> IntClassF {
    let mut c = IntClassF::zero();
    c.coeff_one = rng.gen_range(0..4);
    c.coeff_w = rng.gen_range(0..2);
    let d = rng.gen_range(2..=2 * ring.m + 1);
    for mon in ring.torsion_basis(d) {
        if rng.gen::<bool>() {
            c = c.add(&ring.monomial(mon.i, mon.j, mon.ez));
        }
    }
    c
}

fn random_class_b(ring: &BIntRing, rng: &mut StdRng) -> IntClassB {
    let mut c = IntClassB::zero();
    c.coeff_one = rng.gen_range(0..4);
    c.coeff_e = rng.gen_range(0..2);
    let d = rng.gen_range(2..=2 * ring.m + 1);
    for mon in ring.torsion_basis(d) {
        let k = rng.gen_range(0..mon.modulus());
        c = c.add(&ring.monomial_scaled(mon.i, mon.eb, mon.ec, mon.j, k));
    }
    c
}

const RHO_HOM_SAMPLES: usize = 1000;

pub fn check_rho_ring_homomorphism(lo: u32, hi: u32) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x0a0b_c0de);
    for m in lo.max(3)..=hi.min(12) {
        let rf = FIntRing::new(m);
        let rb = BIntRing::new(m);
        for sample in 0..RHO_HOM_SAMPLES {
            let a = random_class_f(&rf, &mut rng);
            let b = random_class_f(&rf, &mut rng);
            ensure!(
                rf.rho(&rf.mul(&a, &b)) == mul_mod2(&rf.rho(&a), &rf.rho(&b)),
                "rho is not multiplicative on F at m={m}, sample {sample}"
            );
            let a = random_class_b(&rb, &mut rng);
            let b = random_class_b(&rb, &mut rng);
            ensure!(
                rb.rho(&rb.mul(&a, &b)) == mul_mod2(&rb.rho(&a), &rb.rho(&b)),
                "rho is not multiplicative on B at m={m}, sample {sample}"
            );
        }
    }
    Ok(())
}

pub fn check_rho_injectivity(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(1)..=hi.min(20) {
        let rf = FIntRing::new(m);
        let rb = BIntRing::new(m);
        for d in 0..=2 * m {
            ensure!(
                rf.rho_injective_on_torsion(d),
                "rho not injective on F torsion at m={m}, degree {d}"
            );
            // injectivity on the B torsion can only fail where a Z/4
            // summand lives, i.e. on pure d4 powers in degrees 0 mod 4
            if rb.torsion_basis(d).iter().all(|mon| !mon.is_pure_d4()) {
                ensure!(
                    rb.rho_monomials_independent(d),
                    "rho not injective on B torsion at m={m}, degree {d}"
                );
            }
        }
    }
    Ok(())
}

pub fn check_ambient_kernels(lo: u32, hi: u32) -> Result<(), String> {
    for m in lo.max(1)..=hi.min(20) {
        for (d, dim) in ambient_kernel_dims_f(m, m).iter().enumerate() {
            ensure!(
                *dim == 0,
                "ambient kernel for F is nonzero at m={m}, degree {d}"
            );
        }
        for (d, dim) in ambient_kernel_dims_b(m, m).iter().enumerate() {
            ensure!(
                *dim == 0,
                "ambient kernel for B is nonzero at m={m}, degree {d}"
            );
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// strategy suite
// ---------------------------------------------------------------------------

pub fn check_strategy_cases(lo: u32, hi: u32) -> Result<(), String> {
    for (m, case_id) in strategy_cases_in_range(hi.min(25)) {
        if m < lo {
            continue;
        }
        ensure!(
            verify_strategy(m, case_id),
            "strategy verification fails at m={m}, case {case_id}"
        );
    }
    Ok(())
}

pub fn check_d4e_expansion(lo: u32, hi: u32) -> Result<(), String> {
    for m in [7u32, 9, 11] {
        if m < lo || m > hi {
            continue;
        }
        let r = BIntRing::new(m);
        let lhs = r.rho(&r.mul(&r.d4(), &r.e()));
        ensure!(
            lhs == mul_mod2(&r.rho(&r.d4()), &r.rho(&r.e())),
            "rho(d4 e) is not rho(d4) rho(e) at m={m}"
        );
        let mut raws = Vec::new();
        for i in 1..=r.ell {
            if binom_mod2((r.t - i) as u64, (i - 1) as u64) {
                raws.push((1u32, 2 * r.t - 4 * i + 2, 2 * i + 1));
            }
        }
        let expect = Mod2Class::from_uvw_raw(RingTag::B(m), &raws);
        ensure!(lhs == expect, "rho(d4 e) expansion mismatch at m={m}");
    }
    Ok(())
}

pub fn check_exactness(_lo: u32, _hi: u32) -> Result<(), String> {
    ensure!(
        exactness_spot_check(40),
        "connecting-map exactness spot check fails"
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// tcs suite
// ---------------------------------------------------------------------------

pub fn check_tcs_pinned(_lo: u32, _hi: u32) -> Result<(), String> {
    for (m, expect) in [(3u32, 5u32), (5, 9), (6, 9)] {
        for eta in [0u8, 2] {
            let cert = cup_length_b2(m, eta);
            ensure!(
                cert.lower_bound == expect,
                "tcs lower bound at m={m} is {}, expected {expect}",
                cert.lower_bound
            );
            ensure!(!cert.eta_dependent, "tcs bound depends on eta at m={m}");
        }
    }
    Ok(())
}

pub fn check_tcs_monotone(lo: u32, hi: u32) -> Result<(), String> {
    let mut prev = 0;
    for m in lo.max(1)..=hi.min(25) {
        let bound = cup_length_b2(m, 2).lower_bound;
        ensure!(bound >= prev, "tcs lower bound decreases at m={m}");
        prev = bound;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

type Check = fn(u32, u32) -> Result<(), String>;

pub fn run_suite(suite: Suite, m_lo: u32, m_hi: u32) -> Vec<CheckOutcome> {
    let mut checks: Vec<(&'static str, Check)> = Vec::new();
    if matches!(suite, Suite::Bss | Suite::All) {
        checks.push(("oracle-equivalence", check_oracle_equivalence));
        checks.push(("mod2-dimension-tables", check_mod2_dimension_tables));
        checks.push(("sq1-squares-to-zero", check_sq1_squares_to_zero));
    }
    if matches!(suite, Suite::Rings | Suite::All) {
        checks.push(("displayed-relations-f", check_displayed_relations_f));
        checks.push(("displayed-relations-b", check_displayed_relations_b));
        checks.push(("relation-family", check_relation_family));
        checks.push(("sigma-r-identities", check_sigma_r_identities));
        checks.push(("wprime-relations", check_wprime_relations));
        checks.push(("pinned-products", check_pinned_products));
        checks.push(("confluence-random-orders", check_confluence));
        checks.push(("rho-ring-homomorphism", check_rho_ring_homomorphism));
        checks.push(("rho-injective-on-torsion", check_rho_injectivity));
        checks.push(("ambient-kernels", check_ambient_kernels));
    }
    if matches!(suite, Suite::Strategy | Suite::All) {
        checks.push(("strategy-cases", check_strategy_cases));
        checks.push(("d4e-expansion", check_d4e_expansion));
        checks.push(("exactness-spot-check", check_exactness));
    }
    if matches!(suite, Suite::Tcs | Suite::All) {
        checks.push(("tcs-pinned-bounds", check_tcs_pinned));
        checks.push(("tcs-monotone", check_tcs_monotone));
    }
    checks
        .into_iter()
        .map(|(name, f)| CheckOutcome {
            name,
            result: f(m_lo, m_hi),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn confluence_small() {
        check_confluence(3, 5).unwrap();
    }

    #[test]
    fn all_suites_small_range() {
        for outcome in run_suite(Suite::All, 1, 8) {
            assert!(
                outcome.result.is_ok(),
                "{}: {:?}",
                outcome.name,
                outcome.result
            );
        }
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("rings".parse::<Suite>().unwrap(), Suite::Rings);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }
}
