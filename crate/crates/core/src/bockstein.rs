//! Integral group tables for the two configuration-space families,
//! derived two independent ways:
//!
//! * `derive_groups_*` runs the Bockstein spectral sequence engine on
//!   the mod-2 ring: Z2-ranks from Sq^1 matrices, Z4-ranks from the
//!   second differential beta_2(u1 w2^{2l-1}) = w2^{2l}, free ranks
//!   from the third page (which must be concentrated in two degrees).
//! * `closed_form_*` transcribes the closed additive tables.
//!
//! Agreement of the two is the core oracle test of the crate.

use crate::exactalg::{pack_bits, F2Matrix, F2Span};
use crate::mod2rings::{basis_of_degree, coordinates, sq1, Mod2Class, MonUVW, RingTag};
use crate::Space;

/// Additive structure of one cohomology degree: Z^free + Z2^z2 + Z4^z4.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct GroupRow {
    pub free: u32,
    pub z2: u32,
    pub z4: u32,
}

/// Integral cohomology groups per degree 0..=2m-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupTable {
    pub space: Space,
    pub m: u32,
    pub rows: Vec<GroupRow>,
}

impl GroupTable {
    pub fn row(&self, degree: u32) -> GroupRow {
        self.rows
            .get(degree as usize)
            .copied()
            .unwrap_or_default()
    }
}

/// Dimension bookkeeping of the spectral-sequence pages, per degree.
#[derive(Clone, Debug)]
pub struct BssReport {
    pub space: Space,
    pub m: u32,
    pub dim_sq1_image: Vec<usize>,
    pub dim_e2: Vec<usize>,
    pub dim_beta2_image: Vec<usize>,
    pub dim_e3: Vec<usize>,
}

/// Matrix of Sq^1 from the degree-d basis to the degree-(d+1) basis.
fn sq1_matrix(tag: RingTag, d: u32) -> F2Matrix {
    let from = basis_of_degree(tag, d);
    let to_len = basis_of_degree(tag, d + 1).len();
    let mut m = F2Matrix::zero(from.len(), to_len);
    for (r, b) in from.iter().enumerate() {
        let img = sq1(b);
        if img.is_zero() {
            continue;
        }
        for (c, bit) in coordinates(&img, d + 1).iter().enumerate() {
            if *bit {
                m.set(r, c, true);
            }
        }
    }
    m
}

struct Sq1Data {
    dims: Vec<usize>,
    /// rank of Sq^1 out of each degree
    rank_out: Vec<usize>,
    /// reduced span of the Sq^1-image inside each degree
    image_spans: Vec<F2Span>,
}

fn sq1_data(tag: RingTag, top: u32) -> Sq1Data {
    let dims: Vec<usize> = (0..=top).map(|d| basis_of_degree(tag, d).len()).collect();
    let mats: Vec<F2Matrix> = (0..=top).map(|d| sq1_matrix(tag, d)).collect();
    let rank_out: Vec<usize> = mats.iter().map(|m| m.rank()).collect();
    let mut image_spans = Vec::with_capacity(top as usize + 1);
    for n in 0..=top as usize {
        let mut span = F2Span::new(dims[n].max(1));
        if n > 0 {
            let mat = &mats[n - 1];
            for r in 0..mat.rows() {
                let row: Vec<bool> = (0..mat.cols()).map(|c| mat.get(r, c)).collect();
                span.insert(&pack_bits(&row));
            }
        }
        image_spans.push(span);
    }
    Sq1Data {
        dims,
        rank_out,
        image_spans,
    }
}

fn sq1_in(data: &Sq1Data, n: usize) -> usize {
    if n == 0 {
        0
    } else {
        data.rank_out[n - 1]
    }
}

fn e2_dims(data: &Sq1Data, top: u32) -> Vec<usize> {
    (0..=top as usize)
        .map(|n| data.dims[n] - data.rank_out[n] - sq1_in(data, n))
        .collect()
}

fn derive_f_full(m: u32) -> (GroupTable, BssReport) {
    assert!(m >= 1);
    let tag = RingTag::F(m);
    let top = 2 * m - 1;
    let data = sq1_data(tag, top);
    let e2 = e2_dims(&data, top);

    // no beta_2 differentials: F carries no Z4 summands
    let e3 = e2.clone();
    let free_at = if m % 2 == 0 { top } else { m };
    for (n, &dim) in e3.iter().enumerate() {
        let expected = usize::from(n == 0 || n as u32 == free_at);
        assert_eq!(
            dim, expected,
            "E3 concentration failed for F, m={m}, degree {n}"
        );
    }

    let rows: Vec<GroupRow> = (0..=top as usize)
        .map(|n| GroupRow {
            free: e3[n] as u32,
            z2: sq1_in(&data, n) as u32,
            z4: 0,
        })
        .collect();
    let report = BssReport {
        space: Space::F,
        m,
        dim_sq1_image: (0..=top as usize).map(|n| sq1_in(&data, n)).collect(),
        dim_e2: e2,
        dim_beta2_image: vec![0; top as usize + 1],
        dim_e3: e3,
    };
    (
        GroupTable {
            space: Space::F,
            m,
            rows,
        },
        report,
    )
}

fn derive_b_full(m: u32) -> (GroupTable, BssReport) {
    assert!(m >= 1);
    let tag = RingTag::B(m);
    let top = 2 * m - 1;
    let data = sq1_data(tag, top);
    let e2 = e2_dims(&data, top);

    // beta_2 family: u1 w2^{2l-1} |-> w2^{2l}, wherever both monomials
    // exist in the quotient (their Cartan coefficients are even, so
    // both are Sq^1-cycles; assert they also avoid the Sq^1-image).
    let mut beta2_in = vec![0usize; top as usize + 1];
    let mut beta2_out = vec![0usize; top as usize + 1];
    let mut l = 1;
    while 2 * l < m {
        let deg_src = (4 * l - 1) as usize;
        let deg_tgt = (4 * l) as usize;
        let src = Mod2Class::from_uvw(
            tag,
            &[MonUVW {
                eps: 1,
                r: 0,
                s: 2 * l - 1,
            }],
        );
        let tgt = Mod2Class::from_uvw(
            tag,
            &[MonUVW {
                eps: 0,
                r: 0,
                s: 2 * l,
            }],
        );
        let src_bits = pack_bits(&coordinates(&src, deg_src as u32));
        let tgt_bits = pack_bits(&coordinates(&tgt, deg_tgt as u32));
        assert!(
            !data.image_spans[deg_src].contains(&src_bits),
            "beta_2 source died on page 2 (m={m}, l={l})"
        );
        assert!(
            !data.image_spans[deg_tgt].contains(&tgt_bits),
            "beta_2 target died on page 2 (m={m}, l={l})"
        );
        beta2_out[deg_src] = 1;
        beta2_in[deg_tgt] = 1;
        l += 1;
    }

    let e3: Vec<usize> = (0..=top as usize)
        .map(|n| e2[n] - beta2_in[n] - beta2_out[n])
        .collect();
    let free_at = if m % 2 == 0 { top } else { m };
    for (n, &dim) in e3.iter().enumerate() {
        let expected = usize::from(n == 0 || n as u32 == free_at);
        assert_eq!(
            dim, expected,
            "E3 concentration failed for B, m={m}, degree {n}"
        );
    }

    let rows: Vec<GroupRow> = (0..=top as usize)
        .map(|n| GroupRow {
            free: e3[n] as u32,
            z2: sq1_in(&data, n) as u32,
            z4: beta2_in[n] as u32,
        })
        .collect();
    let report = BssReport {
        space: Space::B,
        m,
        dim_sq1_image: (0..=top as usize).map(|n| sq1_in(&data, n)).collect(),
        dim_e2: e2,
        dim_beta2_image: beta2_in.clone(),
        dim_e3: e3,
    };
    (
        GroupTable {
            space: Space::B,
            m,
            rows,
        },
        report,
    )
}

pub fn derive_groups_f(m: u32) -> GroupTable {
    derive_f_full(m).0
}

pub fn derive_groups_b(m: u32) -> GroupTable {
    derive_b_full(m).0
}

pub fn bss_report_f(m: u32) -> BssReport {
    derive_f_full(m).1
}

pub fn bss_report_b(m: u32) -> BssReport {
    derive_b_full(m).1
}

/// Closed additive table for the ordered configuration space.
pub fn closed_form_f(m: u32) -> GroupTable {
    assert!(m >= 1);
    let t = m / 2;
    let top = 2 * m - 1;
    let rows: Vec<GroupRow> = (0..=top)
        .map(|i| {
            let row = |free: u32, z2: u32| GroupRow { free, z2, z4: 0 };
            if m % 2 == 0 {
                // m = 2t, t >= 1
                if i == 0 || i == 4 * t - 1 {
                    row(1, 0)
                } else if i % 2 == 0 && i <= 2 * t {
                    row(0, i / 2 + 1)
                } else if i % 2 == 1 && i <= 2 * t {
                    row(0, (i - 1) / 2)
                } else if i % 2 == 0 && 2 * t < i && i < 4 * t - 1 {
                    row(0, 2 * t + 1 - i / 2)
                } else if i % 2 == 1 && 2 * t < i && i < 4 * t - 1 {
                    row(0, 2 * t - (i + 1) / 2)
                } else {
                    row(0, 0)
                }
            } else {
                // m = 2t + 1, t >= 0
                if i == 0 {
                    row(1, 0)
                } else if i == 2 * t + 1 {
                    row(1, t)
                } else if i % 2 == 0 && i <= 2 * t {
                    row(0, i / 2 + 1)
                } else if i % 2 == 1 && i <= 2 * t {
                    row(0, (i - 1) / 2)
                } else if i % 2 == 0 && 2 * t + 1 < i && i <= 4 * t + 1 {
                    row(0, 2 * t + 1 - i / 2)
                } else if i % 2 == 1 && 2 * t + 1 < i && i <= 4 * t + 1 {
                    row(0, 2 * t + 1 - (i - 1) / 2)
                } else {
                    row(0, 0)
                }
            }
        })
        .collect();
    GroupTable {
        space: Space::F,
        m,
        rows,
    }
}

/// Closed additive table for the unordered configuration space.
pub fn closed_form_b(m: u32) -> GroupTable {
    assert!(m >= 1);
    let t = m / 2;
    let top = 2 * m - 1;
    let rows: Vec<GroupRow> = (0..=top)
        .map(|n| {
            let b = n % 4;
            let a = n / 4;
            let row = |free: u32, z2: u32, z4: u32| GroupRow { free, z2, z4 };
            if m % 2 == 0 {
                // m = 2t, t >= 1
                if n == 0 || n == 4 * t - 1 {
                    row(1, 0, 0)
                } else if n <= 2 * t {
                    match b {
                        0 => row(0, 2 * a, 1), // {2a}, a > 0 here since n > 0
                        1 => row(0, 2 * a, 0),
                        2 => row(0, 2 * a + 2, 0),
                        _ => row(0, 2 * a + 1, 0),
                    }
                } else if n < 4 * t - 1 {
                    match b {
                        0 => row(0, 2 * t - 2 * a, 1),
                        1 => row(0, 2 * t - 2 * a - 1, 0),
                        2 => row(0, 2 * t - 2 * a, 0),
                        _ => row(0, 2 * t - 2 * a - 2, 0),
                    }
                } else {
                    row(0, 0, 0)
                }
            } else {
                // m = 2t + 1, t >= 0
                if n == 0 {
                    row(1, 0, 0)
                } else if n == 2 * t + 1 {
                    row(1, t, 0)
                } else if n <= 2 * t {
                    match b {
                        0 => row(0, 2 * a, 1),
                        1 => row(0, 2 * a, 0),
                        2 => row(0, 2 * a + 2, 0),
                        _ => row(0, 2 * a + 1, 0),
                    }
                } else if n <= 4 * t + 1 {
                    match b {
                        0 => row(0, 2 * t - 2 * a, 1),
                        1 => row(0, 2 * t - 2 * a + 1, 0),
                        _ => row(0, 2 * t - 2 * a, 0),
                    }
                } else {
                    row(0, 0, 0)
                }
            }
        })
        .collect();
    GroupTable {
        space: Space::B,
        m,
        rows,
    }
}

pub fn closed_form(space: Space, m: u32) -> GroupTable {
    match space {
        Space::F => closed_form_f(m),
        Space::B => closed_form_b(m),
    }
}

pub fn derive_groups(space: Space, m: u32) -> GroupTable {
    match space {
        Space::F => derive_groups_f(m),
        Space::B => derive_groups_b(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_cases() {
        // Both configuration spaces of the circle'd projective line are
        // homotopy circles: Z in degrees 0 and 1.
        for table in [derive_groups_f(1), derive_groups_b(1)] {
            assert_eq!(table.row(0), GroupRow { free: 1, z2: 0, z4: 0 });
            assert_eq!(table.row(1), GroupRow { free: 1, z2: 0, z4: 0 });
        }
    }

    #[test]
    fn pinned_rows() {
        let f4 = derive_groups_f(4);
        assert_eq!(f4.row(3), GroupRow { free: 0, z2: 1, z4: 0 });
        assert_eq!(f4.row(7), GroupRow { free: 1, z2: 0, z4: 0 });

        let f2 = derive_groups_f(2);
        assert_eq!(f2.row(1), GroupRow::default());
        assert_eq!(f2.row(2), GroupRow { free: 0, z2: 2, z4: 0 });
        assert_eq!(f2.row(3), GroupRow { free: 1, z2: 0, z4: 0 });

        let b5 = derive_groups_b(5);
        assert_eq!(b5.row(8), GroupRow { free: 0, z2: 0, z4: 1 });
        assert_eq!(b5.row(5), GroupRow { free: 1, z2: 2, z4: 0 });
        assert_eq!(b5.row(9), GroupRow { free: 0, z2: 1, z4: 0 });
    }

    #[test]
    fn closed_form_pinned_rows() {
        assert_eq!(closed_form_f(4).row(5), GroupRow { free: 0, z2: 1, z4: 0 });
        assert_eq!(closed_form_b(5).row(9), GroupRow { free: 0, z2: 1, z4: 0 });
        for t in 1..=6 {
            assert_eq!(
                closed_form_b(2 * t).row(4 * t - 1),
                GroupRow { free: 1, z2: 0, z4: 0 }
            );
        }
    }

    #[test]
    fn oracle_equivalence_small() {
        for m in 1..=12 {
            assert_eq!(derive_groups_f(m), closed_form_f(m), "F, m={m}");
            assert_eq!(derive_groups_b(m), closed_form_b(m), "B, m={m}");
        }
    }

    #[test]
    fn universal_coefficient_consistency() {
        for m in 1..=14u32 {
            for (space, tag) in [(Space::F, RingTag::F(m)), (Space::B, RingTag::B(m))] {
                let table = derive_groups(space, m);
                for n in 0..=2 * m - 1 {
                    let here = table.row(n);
                    let next = table.row(n + 1);
                    let mod2 = basis_of_degree(tag, n).len() as u32;
                    assert_eq!(
                        here.free + here.z2 + here.z4 + next.z2 + next.z4,
                        mod2,
                        "UCT mismatch {space:?} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn z4_total_count() {
        for m in 1..=20u32 {
            let table = derive_groups_b(m);
            let total: u32 = table.rows.iter().map(|r| r.z4).sum();
            let expected = (1..2 * m - 1).filter(|n| n % 4 == 0).count() as u32;
            assert_eq!(total, expected, "m={m}");
        }
    }

    #[test]
    fn alternating_sum_of_mod2_dims_vanishes() {
        for m in 1..=20u32 {
            for tag in [RingTag::F(m), RingTag::B(m)] {
                let mut sum = 0i64;
                for d in 0..=2 * m - 1 {
                    let dim = basis_of_degree(tag, d).len() as i64;
                    sum += if d % 2 == 0 { dim } else { -dim };
                }
                assert_eq!(sum, 0, "Euler characteristic of odd manifold, m={m}");
            }
        }
    }
}
