use std::collections::BTreeSet;

use pontrjagin::linalg::{int, Rational};
use pontrjagin::topology::{
    boundary, cap, coboundary, cup, numbered_labels, pullback_cochain, pushforward, standard, Chain, Cochain,
    LocalSystem, SimplicialComplex, SimplicialMap,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let count = rng.gen_range(2..6);
    let tops: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=n.min(4));
            let mut s: BTreeSet<usize> = BTreeSet::new();
            while s.len() < k {
                s.insert(rng.gen_range(0..n));
            }
            s.into_iter().collect()
        })
        .collect();
    SimplicialComplex::from_simplices(numbered_labels(n), tops).unwrap()
}

/// A system `s(u,v) = g(u)·g(v)` from random vertex signs; always a cocycle.
fn random_gauge(rng: &mut ChaCha8Rng, x: &SimplicialComplex) -> LocalSystem {
    let g: Vec<bool> = (0..x.labels().len()).map(|_| rng.gen()).collect();
    LocalSystem::from_negative_edges(x.simplices(1).iter().filter(|e| g[e[0]] != g[e[1]]).map(|e| (e[0], e[1])))
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Rational {
    int(rng.gen_range(-3..=3))
}

fn random_cochain(rng: &mut ChaCha8Rng, x: &SimplicialComplex, k: usize, sys: &LocalSystem) -> Cochain {
    let terms: Vec<_> = x.simplices(k).iter().map(|s| (s.clone(), random_coeff(rng))).collect();
    Cochain::from_terms(k, sys.clone(), terms).unwrap()
}

fn random_chain(rng: &mut ChaCha8Rng, x: &SimplicialComplex, k: usize, sys: &LocalSystem) -> Chain {
    let terms: Vec<_> = x.simplices(k).iter().map(|s| (s.clone(), random_coeff(rng))).collect();
    Chain::from_terms(k, sys.clone(), terms).unwrap()
}

/// Complexes with their systems: random subcomplexes with random gauges, plus a
/// non-trivializable system on the projective plane.
fn corpus() -> Vec<(SimplicialComplex, LocalSystem)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    for _ in 0..40 {
        let n = rng.gen_range(3..=8);
        let x = random_complex(&mut rng, n);
        let l = random_gauge(&mut rng, &x);
        out.push((x, l));
    }
    let rp2 = standard::projective_plane();
    let d = pontrjagin::topology::orientation_system(&rp2).unwrap();
    out.push((rp2, d));
    out.push((standard::sphere(3), LocalSystem::trivial()));
    out
}

#[test]
fn boundary_and_coboundary_square_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (x, l) in corpus() {
        let top = x.dim().unwrap();
        for k in 2..=top {
            let c = random_chain(&mut rng, &x, k, &l);
            let dd = boundary(&x, &boundary(&x, &c).unwrap()).unwrap();
            assert!(dd.is_zero());
        }
        for k in 0..=top {
            let a = random_cochain(&mut rng, &x, k, &l);
            let dd = coboundary(&x, &coboundary(&x, &a).unwrap()).unwrap();
            assert!(dd.is_zero());
        }
    }
}

#[test]
fn cup_leibniz_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (x, l) in corpus() {
        let top = x.dim().unwrap();
        let l2 = random_gauge(&mut rng, &x);
        for p in 0..=top {
            for q in 0..=top - p {
                let a = random_cochain(&mut rng, &x, p, &l);
                let b = random_cochain(&mut rng, &x, q, &l2);
                let lhs = coboundary(&x, &cup(&x, &a, &b).unwrap()).unwrap();
                let t1 = cup(&x, &coboundary(&x, &a).unwrap(), &b).unwrap();
                let t2 = cup(&x, &a, &coboundary(&x, &b).unwrap()).unwrap();
                let rhs = if p % 2 == 0 { t1.add(&t2) } else { t1.sub(&t2) }.unwrap();
                assert_eq!(lhs, rhs, "p={p} q={q}");
            }
        }
    }
}

#[test]
fn cap_boundary_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (x, l) in corpus() {
        let top = x.dim().unwrap();
        let l2 = random_gauge(&mut rng, &x);
        for k in 1..=top {
            for p in 0..k {
                let a = random_cochain(&mut rng, &x, p, &l2);
                let c = random_chain(&mut rng, &x, k, &l);
                let lhs = boundary(&x, &cap(&x, &a, &c).unwrap()).unwrap();
                let t1 = cap(&x, &a, &boundary(&x, &c).unwrap()).unwrap();
                let t2 = cap(&x, &coboundary(&x, &a).unwrap(), &c).unwrap();
                let rhs = if (k - p) % 2 == 0 { t1.add(&t2) } else { t1.sub(&t2) }.unwrap();
                assert_eq!(lhs, rhs, "k={k} p={p}");
            }
        }
    }
}

#[test]
fn cup_then_cap_associates() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (x, l) in corpus() {
        let top = x.dim().unwrap();
        let la = random_gauge(&mut rng, &x);
        let lb = random_gauge(&mut rng, &x);
        for k in 0..=top {
            for p in 0..=k {
                for q in 0..=k - p {
                    let a = random_cochain(&mut rng, &x, p, &la);
                    let b = random_cochain(&mut rng, &x, q, &lb);
                    let c = random_chain(&mut rng, &x, k, &l);
                    let lhs = cap(&x, &cup(&x, &a, &b).unwrap(), &c).unwrap();
                    let rhs = cap(&x, &a, &cap(&x, &b, &c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

fn random_map(rng: &mut ChaCha8Rng, x: &SimplicialComplex, m: usize) -> (SimplicialComplex, SimplicialMap) {
    let map: Vec<usize> = (0..x.labels().len()).map(|_| rng.gen_range(0..m)).collect();
    let f = SimplicialMap::unchecked(map);
    let images: Vec<Vec<usize>> = x.all_simplices().map(|s| f.image(s)).collect();
    let y = SimplicialComplex::from_simplices(numbered_labels(m), images).unwrap();
    f.validate(x, &y).unwrap();
    (y, f)
}

#[test]
fn pushforward_is_a_functorial_chain_map_adjoint_to_pullback() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (x, _) in corpus() {
        let m1 = rng.gen_range(3..7);
        let (y, f) = random_map(&mut rng, &x, m1);
        let m2 = rng.gen_range(3..6);
        let (w, g) = random_map(&mut rng, &y, m2);
        let lw = random_gauge(&mut rng, &w);
        let ly = lw.pullback(&y, &g);
        let lx = ly.pullback(&x, &f);
        for k in 0..=x.dim().unwrap() {
            let c = random_chain(&mut rng, &x, k, &lx);
            let fc = pushforward(&x, &f, &ly, &c).unwrap();
            if k > 0 {
                let d1 = boundary(&y, &fc).unwrap();
                let d2 = pushforward(&x, &f, &ly, &boundary(&x, &c).unwrap()).unwrap();
                assert_eq!(d1, d2);
            }
            let gf = f.then(&g);
            assert_eq!(pushforward(&x, &gf, &lw, &c).unwrap(), pushforward(&y, &g, &lw, &fc).unwrap());
            let a = random_cochain(&mut rng, &y, k, &ly);
            let fa = pullback_cochain(&x, &f, &a).unwrap();
            assert_eq!(fa.evaluate(&c).unwrap(), a.evaluate(&fc).unwrap());
        }
    }
}

#[test]
fn pushforward_checks_the_system() {
    let x = standard::polygon(3);
    let f = SimplicialMap::identity(&x);
    let c = Chain::from_terms(1, LocalSystem::trivial(), [(vec![0, 1], int(1))]).unwrap();
    let l = LocalSystem::from_negative_edges([(0, 1), (0, 2)]);
    assert!(pushforward(&x, &f, &l, &c).is_err());
    assert_eq!(pushforward(&x, &f, &LocalSystem::trivial(), &c).unwrap(), c);
}
