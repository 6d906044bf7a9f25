//! The four GF(2) cohomology algebras with normal forms and the Sq^1
//! derivation:
//!
//! * `PxP`  — H*(P^inf x P^inf; F2) = F2[x1, y1]
//! * `F(m)` — H*(F(P^m, 2); F2), quotient of `PxP` by the diagonal ideal
//! * `D8`   — H*(BD8; F2) = F2[u1, v1, w2] / (u1^2 + u1 v1)
//! * `B(m)` — H*(B(P^m, 2); F2), quotient of `D8`
//!
//! Classes are stored as sets of exponent tuples (GF(2) coefficients are
//! presence/absence) and are kept in normal form on the chosen monomial
//! bases: x1^i y1^j with i <= m, j <= m-1 for `F(m)`, and
//! u1^e v1^r w2^s with e <= 1, r + s < m for `B(m)`.

use crate::exactalg::binom_mod2;
use std::collections::BTreeSet;
use std::fmt;

/// Monomial x1^i y1^j.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MonXY {
    pub i: u32,
    pub j: u32,
}

impl MonXY {
    pub fn degree(&self) -> u32 {
        self.i + self.j
    }
}

/// Monomial u1^eps v1^r w2^s with eps in {0, 1}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MonUVW {
    pub eps: u8,
    pub r: u32,
    pub s: u32,
}

impl MonUVW {
    pub fn degree(&self) -> u32 {
        self.eps as u32 + self.r + 2 * self.s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingTag {
    PxP,
    F(u32),
    D8,
    B(u32),
}

impl RingTag {
    fn uses_uvw(&self) -> bool {
        matches!(self, RingTag::D8 | RingTag::B(_))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Terms {
    Xy(BTreeSet<MonXY>),
    Uvw(BTreeSet<MonUVW>),
}

/// An element of one of the four presented GF(2) algebras.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mod2Class {
    tag: RingTag,
    terms: Terms,
}

fn toggle<T: Ord + Copy>(set: &mut BTreeSet<T>, m: T) {
    if !set.insert(m) {
        set.remove(&m);
    }
}

/// Normal form of x1^i y1^j in F(m): truncate x1 past m, rewrite
/// y1^m = sum_{a=1..m} x1^a y1^{m-a} (the oriented diagonal relation).
fn nf_xy_f(m: u32, i: u32, j: u32, out: &mut BTreeSet<MonXY>) {
    if i > m {
        return;
    }
    if j >= m {
        for a in 1..=m {
            nf_xy_f(m, i + a, j - a, out);
        }
    } else {
        toggle(out, MonXY { i, j });
    }
}

/// Normal form of u1^eps v1^r w2^s in B(m): rewrite the leading term of
/// R_{m+s} (Lemma-style relation family) while r + s >= m.
fn nf_uvw_b(m: u32, eps: u8, r: u32, s: u32, out: &mut BTreeSet<MonUVW>) {
    if s >= m {
        return; // w2^m = 0 (the s = m member of the relation family)
    }
    if r + s >= m {
        // v1^{m-s} w2^s -> sum_{i>=1} C(m-s-i, i) v1^{m-s-2i} w2^{s+i}
        let head = m - s;
        for k in 1..=head / 2 {
            if binom_mod2((head - k) as u64, k as u64) {
                nf_uvw_b(m, eps, r - 2 * k, s + k, out);
            }
        }
    } else {
        toggle(out, MonUVW { eps, r, s });
    }
}

impl Mod2Class {
    pub fn zero(tag: RingTag) -> Self {
        let terms = if tag.uses_uvw() {
            Terms::Uvw(BTreeSet::new())
        } else {
            Terms::Xy(BTreeSet::new())
        };
        Mod2Class { tag, terms }
    }

    pub fn one(tag: RingTag) -> Self {
        match tag.uses_uvw() {
            true => Mod2Class::from_uvw(tag, &[MonUVW { eps: 0, r: 0, s: 0 }]),
            false => Mod2Class::from_xy(tag, &[MonXY { i: 0, j: 0 }]),
        }
    }

    /// Builds a class from raw xy-monomials and normalizes.
    pub fn from_xy(tag: RingTag, monos: &[MonXY]) -> Self {
        let mut set = BTreeSet::new();
        for m in monos {
            match tag {
                RingTag::PxP => toggle(&mut set, *m),
                RingTag::F(dim) => nf_xy_f(dim, m.i, m.j, &mut set),
                _ => panic!("xy monomials in a uvw ring"),
            }
        }
        Mod2Class {
            tag,
            terms: Terms::Xy(set),
        }
    }

    /// Builds a class from raw uvw-monomials (eps may exceed 1; the
    /// relation u1^2 = u1 v1 is applied) and normalizes.
    pub fn from_uvw_raw(tag: RingTag, monos: &[(u32, u32, u32)]) -> Self {
        let mut set = BTreeSet::new();
        for &(mut e, mut r, s) in monos {
            while e >= 2 {
                e -= 1;
                r += 1;
            }
            match tag {
                RingTag::D8 => toggle(
                    &mut set,
                    MonUVW {
                        eps: e as u8,
                        r,
                        s,
                    },
                ),
                RingTag::B(dim) => nf_uvw_b(dim, e as u8, r, s, &mut set),
                _ => panic!("uvw monomials in an xy ring"),
            }
        }
        Mod2Class {
            tag,
            terms: Terms::Uvw(set),
        }
    }

    pub fn from_uvw(tag: RingTag, monos: &[MonUVW]) -> Self {
        let raw: Vec<_> = monos.iter().map(|m| (m.eps as u32, m.r, m.s)).collect();
        Mod2Class::from_uvw_raw(tag, &raw)
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        match &self.terms {
            Terms::Xy(s) => s.is_empty(),
            Terms::Uvw(s) => s.is_empty(),
        }
    }

    pub fn xy_terms(&self) -> impl Iterator<Item = &MonXY> {
        match &self.terms {
            Terms::Xy(s) => s.iter(),
            Terms::Uvw(_) => panic!("not an xy class"),
        }
    }

    pub fn uvw_terms(&self) -> impl Iterator<Item = &MonUVW> {
        match &self.terms {
            Terms::Uvw(s) => s.iter(),
            Terms::Xy(_) => panic!("not a uvw class"),
        }
    }

    pub fn add(&self, other: &Mod2Class) -> Mod2Class {
        assert_eq!(self.tag, other.tag, "ring tag mismatch");
        let mut out = self.clone();
        match (&mut out.terms, &other.terms) {
            (Terms::Xy(a), Terms::Xy(b)) => {
                for m in b {
                    toggle(a, *m);
                }
            }
            (Terms::Uvw(a), Terms::Uvw(b)) => {
                for m in b {
                    toggle(a, *m);
                }
            }
            _ => unreachable!(),
        }
        out
    }

    /// Degree of a homogeneous class; None for 0 or inhomogeneous input.
    pub fn degree(&self) -> Option<u32> {
        let degs: BTreeSet<u32> = match &self.terms {
            Terms::Xy(s) => s.iter().map(|m| m.degree()).collect(),
            Terms::Uvw(s) => s.iter().map(|m| m.degree()).collect(),
        };
        if degs.len() == 1 {
            degs.into_iter().next()
        } else {
            None
        }
    }

    /// Re-normalizes the class; a no-op for classes built through the
    /// public constructors, exposed for direct use on hand-built data.
    pub fn normalize(&self) -> Mod2Class {
        match &self.terms {
            Terms::Xy(s) => {
                let monos: Vec<_> = s.iter().copied().collect();
                Mod2Class::from_xy(self.tag, &monos)
            }
            Terms::Uvw(s) => {
                let monos: Vec<_> = s.iter().copied().collect();
                Mod2Class::from_uvw(self.tag, &monos)
            }
        }
    }
}

/// Product of two classes of the same ring, in normal form.
pub fn mul_mod2(a: &Mod2Class, b: &Mod2Class) -> Mod2Class {
    assert_eq!(a.tag, b.tag, "ring tag mismatch");
    match (&a.terms, &b.terms) {
        (Terms::Xy(sa), Terms::Xy(sb)) => {
            let mut out = BTreeSet::new();
            for ma in sa {
                for mb in sb {
                    match a.tag {
                        RingTag::PxP => toggle(
                            &mut out,
                            MonXY {
                                i: ma.i + mb.i,
                                j: ma.j + mb.j,
                            },
                        ),
                        RingTag::F(m) => nf_xy_f(m, ma.i + mb.i, ma.j + mb.j, &mut out),
                        _ => unreachable!(),
                    }
                }
            }
            Mod2Class {
                tag: a.tag,
                terms: Terms::Xy(out),
            }
        }
        (Terms::Uvw(sa), Terms::Uvw(sb)) => {
            let mut out = BTreeSet::new();
            for ma in sa {
                for mb in sb {
                    // u1^2 = u1 v1
                    let (eps, extra_r) = match ma.eps + mb.eps {
                        2 => (1u8, 1u32),
                        e => (e, 0),
                    };
                    let r = ma.r + mb.r + extra_r;
                    let s = ma.s + mb.s;
                    match a.tag {
                        RingTag::D8 => toggle(&mut out, MonUVW { eps, r, s }),
                        RingTag::B(m) => nf_uvw_b(m, eps, r, s, &mut out),
                        _ => unreachable!(),
                    }
                }
            }
            Mod2Class {
                tag: a.tag,
                terms: Terms::Uvw(out),
            }
        }
        _ => unreachable!(),
    }
}

/// First Steenrod square, extended to products as a derivation.
///
/// On generators: Sq1 x1 = x1^2, Sq1 y1 = y1^2, Sq1 u1 = u1^2,
/// Sq1 v1 = v1^2, Sq1 w2 = v1 w2; on a uvw monomial this collapses to
/// the Cartan coefficient (eps + r + s).
pub fn sq1(c: &Mod2Class) -> Mod2Class {
    match &c.terms {
        Terms::Xy(s) => {
            let mut out = BTreeSet::new();
            for m in s {
                let mut emit = |i: u32, j: u32| match c.tag {
                    RingTag::PxP => toggle(&mut out, MonXY { i, j }),
                    RingTag::F(dim) => nf_xy_f(dim, i, j, &mut out),
                    _ => unreachable!(),
                };
                if m.i % 2 == 1 {
                    emit(m.i + 1, m.j);
                }
                if m.j % 2 == 1 {
                    emit(m.i, m.j + 1);
                }
            }
            Mod2Class {
                tag: c.tag,
                terms: Terms::Xy(out),
            }
        }
        Terms::Uvw(s) => {
            let mut out = BTreeSet::new();
            for m in s {
                if (m.eps as u32 + m.r + m.s) % 2 == 1 {
                    match c.tag {
                        RingTag::D8 => toggle(
                            &mut out,
                            MonUVW {
                                eps: m.eps,
                                r: m.r + 1,
                                s: m.s,
                            },
                        ),
                        RingTag::B(dim) => nf_uvw_b(dim, m.eps, m.r + 1, m.s, &mut out),
                        _ => unreachable!(),
                    }
                }
            }
            Mod2Class {
                tag: c.tag,
                terms: Terms::Uvw(out),
            }
        }
    }
}

/// Monomial basis of the given ring in one degree, in lexicographic
/// order on exponent tuples.
pub fn basis_of_degree(tag: RingTag, d: u32) -> Vec<Mod2Class> {
    let mut out = Vec::new();
    match tag {
        RingTag::PxP => {
            for i in 0..=d {
                out.push(Mod2Class::from_xy(tag, &[MonXY { i, j: d - i }]));
            }
        }
        RingTag::F(m) => {
            for i in 0..=d.min(m) {
                let j = d - i;
                if j <= m.saturating_sub(1) && (m > 0 || j == 0) {
                    out.push(Mod2Class::from_xy(tag, &[MonXY { i, j }]));
                }
            }
        }
        RingTag::D8 | RingTag::B(_) => {
            for eps in 0..=1u32.min(d) {
                let rest = d - eps;
                for s in 0..=rest / 2 {
                    let r = rest - 2 * s;
                    if let RingTag::B(m) = tag {
                        if r + s >= m {
                            continue;
                        }
                    }
                    out.push(Mod2Class::from_uvw(
                        tag,
                        &[MonUVW {
                            eps: eps as u8,
                            r,
                            s,
                        }],
                    ));
                }
            }
        }
    }
    out.sort_by_key(|c| match &c.terms {
        Terms::Xy(s) => {
            let m = s.iter().next().unwrap();
            (m.i, m.j, 0)
        }
        Terms::Uvw(s) => {
            let m = s.iter().next().unwrap();
            (m.eps as u32, m.r, m.s)
        }
    });
    out
}

/// Monomials of the basis of one degree, as exponent tuples.
pub fn basis_monomials_uvw(tag: RingTag, d: u32) -> Vec<MonUVW> {
    basis_of_degree(tag, d)
        .iter()
        .map(|c| *c.uvw_terms().next().unwrap())
        .collect()
}

pub fn basis_monomials_xy(tag: RingTag, d: u32) -> Vec<MonXY> {
    basis_of_degree(tag, d)
        .iter()
        .map(|c| *c.xy_terms().next().unwrap())
        .collect()
}

/// Coordinate vector of a normal-form class with respect to the
/// monomial basis of its degree.
pub fn coordinates(c: &Mod2Class, d: u32) -> Vec<bool> {
    match &c.terms {
        Terms::Xy(s) => {
            let basis = basis_monomials_xy(c.tag, d);
            let mut v = vec![false; basis.len()];
            for m in s {
                let pos = basis
                    .iter()
                    .position(|b| b == m)
                    .expect("term outside the degree basis");
                v[pos] = true;
            }
            v
        }
        Terms::Uvw(s) => {
            let basis = basis_monomials_uvw(c.tag, d);
            let mut v = vec![false; basis.len()];
            for m in s {
                let pos = basis
                    .iter()
                    .position(|b| b == m)
                    .expect("term outside the degree basis");
                v[pos] = true;
            }
            v
        }
    }
}

/// Image of a D8-tagged class in B(m) under the classifying map: same
/// exponent tuples, reduced by the B(m) relations.
pub fn project_d8_to_b(c: &Mod2Class, m: u32) -> Mod2Class {
    assert_eq!(c.tag, RingTag::D8);
    let monos: Vec<_> = c.uvw_terms().copied().collect();
    Mod2Class::from_uvw(RingTag::B(m), &monos)
}

/// Image of a PxP-tagged class in F(m).
pub fn project_pxp_to_f(c: &Mod2Class, m: u32) -> Mod2Class {
    assert_eq!(c.tag, RingTag::PxP);
    let monos: Vec<_> = c.xy_terms().copied().collect();
    Mod2Class::from_xy(RingTag::F(m), &monos)
}

fn fmt_pow(f: &mut fmt::Formatter<'_>, name: &str, e: u32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for Mod2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first_term = true;
        match &self.terms {
            Terms::Xy(s) => {
                for m in s {
                    if !first_term {
                        write!(f, " + ")?;
                    }
                    first_term = false;
                    if m.i == 0 && m.j == 0 {
                        write!(f, "1")?;
                        continue;
                    }
                    let mut first = true;
                    fmt_pow(f, "x1", m.i, &mut first)?;
                    fmt_pow(f, "y1", m.j, &mut first)?;
                }
            }
            Terms::Uvw(s) => {
                for m in s {
                    if !first_term {
                        write!(f, " + ")?;
                    }
                    first_term = false;
                    if m.eps == 0 && m.r == 0 && m.s == 0 {
                        write!(f, "1")?;
                        continue;
                    }
                    let mut first = true;
                    fmt_pow(f, "u1", m.eps as u32, &mut first)?;
                    fmt_pow(f, "v1", m.r, &mut first)?;
                    fmt_pow(f, "w2", m.s, &mut first)?;
                }
            }
        }
        Ok(())
    }
}
