use std::collections::BTreeMap;

use pontrjagin::chern::{invert_pontrjagin_series, GradedSeries, Polynomial};
use pontrjagin::linalg::{int, Rational};

/// `p̃_k = Σ over compositions (a₁, …, a_r) of k of (−1)^r p_{a₁} ⋯ p_{a_r}`.
fn by_compositions(k: usize) -> Polynomial {
    fn go(rest: usize, parts: &mut Vec<usize>, out: &mut BTreeMap<Vec<u32>, Rational>) {
        if rest == 0 {
            let mut e = vec![0u32; parts.iter().copied().max().unwrap_or(0)];
            for &a in parts.iter() {
                e[a - 1] += 1;
            }
            let sign = if parts.len() % 2 == 0 { 1 } else { -1 };
            *out.entry(e).or_insert_with(|| int(0)) += int(sign);
            return;
        }
        for a in 1..=rest {
            parts.push(a);
            go(rest - a, parts, out);
            parts.pop();
        }
    }
    let mut out = BTreeMap::new();
    go(k, &mut Vec::new(), &mut out);
    out.retain(|_, c| *c != int(0));
    Polynomial(out)
}

#[test]
fn low_degree_dual_classes() {
    let s = invert_pontrjagin_series(4).unwrap();
    assert_eq!(s.components[0].to_string(), "-p1");
    assert_eq!(s.components[1].to_string(), "p1^2 - p2");
    assert_eq!(s.components[2].to_string(), "-p1^3 + 2*p1*p2 - p3");
    for k in 1..=6 {
        assert_eq!(invert_pontrjagin_series(6).unwrap().components[k - 1], by_compositions(k), "k = {k}");
    }
}

#[test]
fn inversion_is_an_involution_and_an_inverse() {
    let p = GradedSeries::total_pontrjagin(4);
    let inv = p.inverse();
    assert_eq!(inv.inverse(), p);
    assert!(p.mul(&inv).components.iter().all(Polynomial::is_zero));
    assert!(invert_pontrjagin_series(0).is_err());
}
