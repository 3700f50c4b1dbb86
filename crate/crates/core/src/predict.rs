//! Closed-form homotopy types of `I(Γ_{n,6})` and of the auxiliary families
//! `X_n`, `Y_n`, `A_n`, `B_n`, as wedges of spheres.

use crate::error::{Error, Result};
use crate::graph::Family;
use crate::homology::WedgeOfSpheres;

/// `ν(k)` for `k = 0..=6`.
pub const NU: [u64; 7] = [0, 0, 0, 2, 2, 4, 4];
/// `μ(k)` for `k = 0..=3`; undefined above.
pub const MU: [u64; 4] = [2, 2, 4, 4];
/// `a(k)` for `k = 0..=6`.
pub const A_COEFF: [u64; 7] = [0, 1, 1, 2, 2, 3, 3];
/// `b(k)` for `k = 2..=6`, stored at index `k - 2`.
pub const B_COEFF: [u64; 5] = [0, 0, 0, 1, 1];

/// `f_6(n)` for `n = 1..=28`; the sequence repeats with period 28.
pub const F6_TABLE: [i64; 28] = [
    0, 2, 2, -2, 0, 4, 0, -4, 2, 6, -2, -4, 4, 4, //
    -4, -2, 6, 2, -4, 0, 4, 0, -2, 2, 2, 0, 0, 0,
];

/// `n = 14m + 2k + 1` with `0 <= k <= 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddDecomposition {
    pub m: u32,
    pub k: u32,
}

impl OddDecomposition {
    pub fn of(n: u32) -> Option<Self> {
        (n % 2 == 1).then(|| Self {
            m: (n - 1) / 14,
            k: ((n - 1) % 14) / 2,
        })
    }

    /// `21m + 3k + 1`.
    pub fn n_prime(&self) -> i32 {
        (21 * self.m + 3 * self.k + 1) as i32
    }
}

/// `n = 14m + 2k` with `0 <= k <= 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvenDecomposition {
    pub m: u32,
    pub k: u32,
}

impl EvenDecomposition {
    pub fn of(n: u32) -> Option<Self> {
        n.is_multiple_of(2).then_some(Self {
            m: n / 14,
            k: (n % 14) / 2,
        })
    }

    /// `21m + 3k - 1`.
    pub fn n_prime(&self) -> i32 {
        (21 * self.m + 3 * self.k) as i32 - 1
    }
}

/// `count` spheres in each dimension of `lo..=hi` (nothing if empty).
fn band(w: &mut WedgeOfSpheres, lo: i32, hi: i32, count: u64) {
    for d in lo..=hi {
        w.add(d, count);
    }
}

fn predict_x(n: u32) -> WedgeOfSpheres {
    if n % 2 == 1 {
        WedgeOfSpheres::point()
    } else {
        WedgeOfSpheres::sphere(3 * (n / 2) as i32 - 1)
    }
}

fn predict_y(n: u32) -> WedgeOfSpheres {
    let k = (n / 2) as i32;
    if n % 2 == 1 {
        WedgeOfSpheres::sphere(3 * k + 1)
    } else {
        WedgeOfSpheres::sphere(3 * k - 1)
    }
}

fn predict_a(n: u32) -> WedgeOfSpheres {
    let mut w = WedgeOfSpheres::point();
    if let Some(OddDecomposition { m, k }) = OddDecomposition::of(n) {
        let (m, k, a) = (m as i32, k as i32, A_COEFF[k as usize]);
        band(&mut w, 20 * m + 3 * k + 1, 21 * m + 3 * k, 3);
        w.add(20 * m + 3 * k, a);
        return w;
    }
    if n == 2 {
        return WedgeOfSpheres::sphere(2);
    }
    let EvenDecomposition { m, k } = EvenDecomposition::of(n).expect("n is even");
    let (m, k) = (m as i32, k as i32);
    w.add(21 * m + 3 * k - 1, 2);
    if k <= 1 {
        band(&mut w, 20 * m + 3 * k, 21 * m + 3 * k - 2, 3);
        w.add(20 * m + 3 * k - 1, 2);
    } else {
        band(&mut w, 20 * m + 3 * k - 1, 21 * m + 3 * k - 2, 3);
        w.add(20 * m + 3 * k - 2, B_COEFF[k as usize - 2]);
    }
    w
}

fn predict_b(n: u32) -> WedgeOfSpheres {
    match n {
        1 => WedgeOfSpheres::sphere(1),
        2 => WedgeOfSpheres::sphere(2),
        3 => WedgeOfSpheres::sphere(4),
        4 => WedgeOfSpheres::spheres(5, 2),
        _ => predict_y(n).wedge(&predict_a(n - 4).suspend(6)),
    }
}

/// Homotopy type of the independence complex of a family member.
///
/// `Gamma` is only supported with `k = 6`.
pub fn predict_family(family: Family) -> Result<WedgeOfSpheres> {
    family.validate()?;
    Ok(match family {
        Family::Gamma { n, k: 6 } => predict_gamma(n)?,
        Family::Gamma { n, k } => {
            return Err(Error::MalformedGraph(format!(
                "no closed form for the {n}x{k} grid (only height 6)"
            )))
        }
        Family::X(n) => predict_x(n),
        Family::Y(n) => predict_y(n),
        Family::A(n) => predict_a(n),
        Family::B(n) => predict_b(n),
    })
}

/// Homotopy type of `I(Γ_{n,6})`.
pub fn predict_gamma(n: u32) -> Result<WedgeOfSpheres> {
    if n == 0 {
        return Err(Error::EmptyGrid { n, k: 6 });
    }
    let mut w = WedgeOfSpheres::point();
    if let Some(d @ OddDecomposition { m, k }) = OddDecomposition::of(n) {
        let (np, m) = (d.n_prime(), m as i32);
        w.add(np, 1);
        band(&mut w, np - m, np - 1, 6);
        w.add(np - m - 1, NU[k as usize]);
        return Ok(w);
    }
    match n {
        2 => return Ok(WedgeOfSpheres::sphere(2)),
        4 => return Ok(WedgeOfSpheres::spheres(5, 3)),
        6 => return Ok(WedgeOfSpheres::spheres(8, 3)),
        _ => {}
    }
    let d @ EvenDecomposition { m, k } = EvenDecomposition::of(n).expect("n is even");
    let (np, m) = (d.n_prime(), m as i32);
    w.add(np, 5);
    if k <= 3 {
        assert!(m >= 1, "even n > 6 with k <= 3 forces m >= 1");
        band(&mut w, np - m + 1, np - 1, 6);
        w.add(np - m, MU[k as usize]);
    } else {
        band(&mut w, np - m, np - 1, 6);
    }
    Ok(w)
}

/// Unreduced Euler characteristic of a wedge of spheres.
pub fn chi_of_wedge(w: &WedgeOfSpheres) -> i64 {
    w.chi()
}

/// `f_6(n)` read from the 28-entry table, extended periodically.
pub fn expected_f6(n: u32) -> Result<i64> {
    if n == 0 {
        return Err(Error::EmptyGrid { n, k: 6 });
    }
    Ok(F6_TABLE[((n - 1) % 28) as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[(i32, u64)]) -> WedgeOfSpheres {
        let mut out = WedgeOfSpheres::point();
        for &(d, c) in entries {
            out.add(d, c);
        }
        out
    }

    #[test]
    fn decompositions() {
        assert_eq!(
            OddDecomposition::of(7),
            Some(OddDecomposition { m: 0, k: 3 })
        );
        assert_eq!(
            OddDecomposition::of(15),
            Some(OddDecomposition { m: 1, k: 0 })
        );
        assert_eq!(OddDecomposition::of(8), None);
        assert_eq!(
            EvenDecomposition::of(8),
            Some(EvenDecomposition { m: 0, k: 4 })
        );
        assert_eq!(
            EvenDecomposition::of(14),
            Some(EvenDecomposition { m: 1, k: 0 })
        );
        for n in 1..2000u32 {
            if let Some(d) = OddDecomposition::of(n) {
                assert_eq!(14 * d.m + 2 * d.k + 1, n);
                assert!(d.k <= 6);
            } else {
                let d = EvenDecomposition::of(n).unwrap();
                assert_eq!(14 * d.m + 2 * d.k, n);
                assert!(d.k <= 6);
            }
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(predict_family(Family::A(4)).unwrap(), w(&[(5, 2)]));
        assert_eq!(predict_family(Family::A(9)).unwrap(), w(&[(12, 2)]));
        assert_eq!(predict_family(Family::B(7)).unwrap(), w(&[(10, 1), (9, 1)]));
        assert_eq!(predict_family(Family::X(6)).unwrap(), w(&[(8, 1)]));
        assert!(predict_family(Family::X(7)).unwrap().is_point());
        assert!(predict_family(Family::A(0)).is_err());
        assert!(predict_family(Family::Gamma { n: 3, k: 5 }).is_err());
    }

    #[test]
    fn small_a_values() {
        let expected = [
            w(&[]),
            w(&[(2, 1)]),
            w(&[(3, 1)]),
            w(&[(5, 2)]),
            w(&[(6, 1)]),
            w(&[(8, 2)]),
            w(&[(9, 2)]),
        ];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(&predict_a(i as u32 + 1), e, "A({})", i + 1);
        }
        assert_eq!(predict_a(11), w(&[(15, 3)]));
        assert_eq!(predict_a(13), w(&[(18, 3)]));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(predict_gamma(1).unwrap(), w(&[(1, 1)]));
        assert_eq!(predict_gamma(2).unwrap(), w(&[(2, 1)]));
        assert_eq!(predict_gamma(6).unwrap(), w(&[(8, 3)]));
        let g7 = predict_gamma(7).unwrap();
        assert_eq!(g7, w(&[(10, 1), (9, 2)]));
        assert_eq!(chi_of_wedge(&g7), 0);
        let g8 = predict_gamma(8).unwrap();
        assert_eq!(g8, w(&[(11, 5)]));
        assert_eq!(chi_of_wedge(&g8), -4);
        assert!(predict_gamma(0).is_err());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_of_wedge(&w(&[(2, 1)])), 2);
        assert_eq!(chi_of_wedge(&WedgeOfSpheres::point()), 1);
        assert_eq!(chi_of_wedge(&w(&[(5, 3)])), -2);
        assert_eq!(expected_f6(10).unwrap(), 6);
        assert_eq!(expected_f6(38).unwrap(), 6);
        assert_eq!(expected_f6(28).unwrap(), 0);
        assert_eq!(expected_f6(4).unwrap(), -2);
    }

    #[test]
    fn chi_matches_table() {
        for n in 1..=500 {
            assert_eq!(
                chi_of_wedge(&predict_gamma(n).unwrap()),
                expected_f6(n).unwrap(),
                "n = {n}"
            );
        }
    }
}
