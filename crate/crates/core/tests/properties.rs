//! Property tests for the arithmetic, group and root-system layers, and the ribbon theorem
//! on random small data.

use num_integer::Integer;
use pointed_hopf::abelian::{Character, FiniteAbelianGroup, GroupElement};
use pointed_hopf::algebra::{build_algebra, BuildOptions};
use pointed_hopf::cartan::{cartan_of_type, dual_datum, rho_identity_check, two_param_datum, validate_datum, RawDatum};
use pointed_hopf::cyclotomic::{euler_phi, qbinom, qint, CycNum};
use pointed_hopf::hopf::dual_build;
use pointed_hopf::hopf::integrals::integrals;
use pointed_hopf::ribbon::{kr_criterion, Verdict};
use proptest::prelude::*;

const CONDUCTORS: [u32; 6] = [1, 2, 3, 4, 5, 12];

fn cyc() -> impl Strategy<Value = CycNum> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| {
        prop::collection::vec((-6i64..=6, 1i64..=4), euler_phi(n)).prop_map(move |cs| {
            cs.iter()
                .enumerate()
                .fold(CycNum::from_int(0), |acc, (k, &(p, q))| acc + CycNum::from_ratio(p, q) * CycNum::zeta(n, k as i64))
        })
    })
}

/// A primitive `m`-th root of unity, `2 ≤ m ≤ 12`.
fn root_of_unity() -> impl Strategy<Value = (u32, CycNum)> {
    (2u32..=12, 1i64..12).prop_filter_map("coprime exponent", |(m, e)| {
        (e < m as i64 && e.gcd(&(m as i64)) == 1).then(|| (m, CycNum::zeta(m, e)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + c.clone(), &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &CycNum::from_int(1), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    #[test]
    fn roots_of_unity_have_their_order((m, q) in root_of_unity(), k in -20i64..20) {
        prop_assert_eq!(q.root_of_unity_order(), Some(m));
        prop_assert!(q.pow(m as i64).is_one());
        prop_assert_eq!(q.pow(k) * q.pow(-k), CycNum::from_int(1));
    }

    #[test]
    fn q_integers_and_binomials((_, q) in root_of_unity(), n in 0u32..=9, t in cyc()) {
        // (1 − q)(n)_q = 1 − q^n
        let one = CycNum::from_int(1);
        prop_assert_eq!((&one - &q) * qint(n, &q).unwrap(), &one - &q.pow(n as i64));
        for k in 0..=n {
            prop_assert_eq!(qbinom(n, k, &q).unwrap(), qbinom(n, n - k, &q).unwrap());
        }
        // Π_{i<n} (1 + q^i t) = Σ_k q^(k(k-1)/2) {n k}_q t^k
        let mut lhs = one.clone();
        for i in 0..n {
            lhs = lhs * (&one + &(q.pow(i as i64) * &t));
        }
        let mut rhs = CycNum::from_int(0);
        for k in 0..=n {
            rhs = rhs + q.pow((k * k.saturating_sub(1) / 2) as i64) * qbinom(n, k, &q).unwrap() * t.pow(k as i64);
        }
        prop_assert_eq!(lhs, rhs);
    }
}

fn group_with_elements() -> impl Strategy<Value = (FiniteAbelianGroup, Vec<Vec<i64>>)> {
    prop::collection::vec(2u32..=6, 1..=3).prop_flat_map(|inv| {
        let r = inv.len();
        (Just(inv), prop::collection::vec(prop::collection::vec(-12i64..12, r), 4))
    })
    .prop_map(|(inv, v)| (FiniteAbelianGroup::new(inv).unwrap(), v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairing_is_bicharacter((grp, v) in group_with_elements()) {
        let g = grp.element(&v[0]).unwrap();
        let h = grp.element(&v[1]).unwrap();
        let chi = grp.character(&v[2]).unwrap();
        let psi = grp.character(&v[3]).unwrap();
        let p = |c: &Character, x: &GroupElement| grp.pair(c, x).unwrap();
        prop_assert_eq!(p(&chi, &grp.mul(&g, &h)), p(&chi, &g) * p(&chi, &h));
        prop_assert_eq!(p(&grp.char_mul(&chi, &psi), &g), p(&chi, &g) * p(&psi, &g));
        prop_assert_eq!(p(&grp.char_inv(&chi), &g) * p(&chi, &g), CycNum::from_int(1));
    }

    #[test]
    fn pairing_is_nondegenerate_and_orthogonal((grp, v) in group_with_elements()) {
        let g = grp.element(&v[0]).unwrap();
        let chi = grp.character(&v[2]).unwrap();
        let chars = grp.enumerate_characters(10_000).unwrap();
        let elems = grp.enumerate(10_000).unwrap();
        if g != grp.identity() {
            prop_assert!(chars.iter().any(|c| !grp.pair(c, &g).unwrap().is_one()));
        }
        let sum = elems.iter().fold(CycNum::from_int(0), |acc, x| acc + grp.pair(&chi, x).unwrap());
        let expect = if chi == grp.trivial_character() { CycNum::from_int(grp.order() as i64) } else { CycNum::from_int(0) };
        prop_assert_eq!(sum, expect);
    }
}

/// `(type, N, r_exp, s_exp)` obeying the parity restrictions of each type.
fn two_param() -> impl Strategy<Value = (&'static str, u32, i64, i64)> {
    (prop::sample::select(vec!["A1", "A2", "B2", "G2", "A3", "A1xA1", "A2xA1"]), 2u32..=11, 0i64..11, 0i64..11)
        .prop_filter("admissible", |&(t, n, r, s)| {
            let single = matches!(t, "A1" | "A1xA1");
            (r - s).gcd(&(n as i64)) == 1 && (single || n % 2 == 1) && (t != "G2" || n % 3 != 0)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn root_data((t, n, r, s) in two_param()) {
        let cartan = cartan_of_type(t).unwrap();
        let d = two_param_datum(&cartan, &cartan.symmetrizer().unwrap(), n, r, s).unwrap();
        let roots = d.roots();
        let count = match t { "A1" => 1, "A1xA1" => 2, "A2" => 3, "B2" | "A2xA1" => 4, _ => 6 };
        prop_assert_eq!(roots.len(), count);
        prop_assert!(roots.is_convex());
        prop_assert_eq!(roots.pbw_dimension() as u64, (n as u64).pow(count as u32));
        for i in 0..d.rank() {
            prop_assert_eq!(rho_identity_check(&d.cartan, &roots, i), 2);
        }
        // The dual datum is again of finite Cartan type with the same orders.
        let dd = dual_datum(&d);
        for i in 0..d.rank() {
            prop_assert_eq!(dd.order_n(i), d.order_n(i));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Odd-order rank-one data and odd-order `A1×A1` data always give a ribbon double.
    #[test]
    fn odd_order_data_are_ribbon(m in 3u32..=9, g in 1i64..9, chi in 1i64..9, two in any::<bool>()) {
        let raw = if two {
            RawDatum {
                group: vec![m, m],
                g: vec![vec![g, 0], vec![0, g]],
                chi: vec![vec![chi, 0], vec![0, chi]],
                cartan: vec![vec![2, 0], vec![0, 2]],
                lambda: None,
                mu: None,
            }
        } else {
            RawDatum { group: vec![m], g: vec![vec![g]], chi: vec![vec![chi]], cartan: vec![vec![2]], lambda: None, mu: None }
        };
        // Keep dim A ≤ 625 so the tabulated dual stays small.
        prop_assume!(!two || m <= 5);
        let Ok(d) = validate_datum(&raw) else { return Ok(()) };
        prop_assume!(d.order_n(0) % 2 == 1);
        let a = build_algebra(&d, BuildOptions::default()).unwrap();
        let dual = dual_build(&a);
        let ir = integrals(&a, &dual).unwrap();
        let rep = kr_criterion(&a, &dual, &ir).unwrap();
        prop_assert_eq!(rep.verdict, Verdict::Ribbon);
        prop_assert_eq!(rep.theorem_witness_among_passing, Some(true));
    }
}
