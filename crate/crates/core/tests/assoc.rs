use std::collections::BTreeSet;

use pontrjagin::assoc::{
    assemble, build_local_y, build_u_delta, glue_map, validate_diagram, validate_y_vertex, validate_z_vertex,
    AssemblyOptions, YVertex, ZVertex, DEFAULT_SAMPLES,
};
use pontrjagin::matroid::{from_vectors, rank1_strong_quotients, OrientedMatroid, SignVector, VectorConfiguration};
use pontrjagin::topology::{standard, SimplicialComplex};
use pontrjagin::Error;

fn om(x: &SimplicialComplex, v: &[&[i64]]) -> OrientedMatroid {
    let c = VectorConfiguration::from_i64(v);
    let c = VectorConfiguration::new(x.labels().to_vec(), c.vectors().to_vec()).unwrap();
    from_vectors(&c, 12).unwrap()
}

/// Hand-built tangent data at vertex 0 of the triangle circle: 1 → +2, 2 → −3 on the line.
fn vertex_data(x: &SimplicialComplex) -> ZVertex {
    let t = om(x, &[&[0, 1], &[2, 1], &[-3, 1]]);
    let z = rank1_strong_quotients(&t)[0].clone();
    ZVertex { delta: vec![0], t: t.clone(), y: t, z }
}

#[test]
fn hand_built_vertex_passes_and_each_check_can_fail() {
    let x = standard::polygon(3);
    let good = vertex_data(&x);
    assert!(validate_z_vertex(&x, 1, &good).passed());

    let with = |f: &dyn Fn(&mut ZVertex)| {
        let mut v = good.clone();
        f(&mut v);
        validate_z_vertex(&x, 1, &v).failed_check().map(str::to_string)
    };
    let fails = |f: &dyn Fn(&mut ZVertex), check: &str| assert_eq!(with(f).as_deref(), Some(check));

    fails(&|v| v.delta = vec![0, 1, 2], "delta");
    fails(&|v| v.t = OrientedMatroid::trivial(vec!["a".into(); 3]), "ground_set");
    fails(&|v| v.t = om(&x, &[&[1, 1], &[2, 2], &[3, 3]]), "rank_t");
    // Positive combination summing to zero: no nonnegative covector.
    fails(&|v| v.t = om(&x, &[&[1, 0], &[-1, 1], &[0, -1]]), "positive_covector");
    // The star of the edge {0,1} does not contain 2.
    fails(&|v| v.delta = vec![0, 1], "condition_1");
    // 2 lies between 0 and 1, inside the hull of the edge {0,1}.
    fails(&|v| v.t = om(&x, &[&[0, 1], &[4, 1], &[2, 1]]), "condition_2_hull");
    fails(&|v| v.y = OrientedMatroid::trivial(x.labels().to_vec()), "rank_y");
    fails(&|v| v.y = om(&x, &[&[0, 1], &[1, 0], &[1, 1]]), "t_to_y");
    fails(&|v| v.z = v.t.clone(), "rank_z");
    // No functional is positive on 0, negative on 1 and zero on 2.
    let c = SignVector::parse("+-0").unwrap();
    let foreign = OrientedMatroid::new(x.labels().to_vec(), [SignVector::zero(3), -&c, c]).unwrap();
    fails(&|v| v.z = foreign.clone(), "y_to_z");
}

#[test]
fn gluing_zeroes_the_outer_star_and_revalidates() {
    let x = standard::polygon(3);
    let v = vertex_data(&x);
    let g = glue_map(&x, 1, &[0], &[0, 1], &v.t, &v.y).unwrap();
    assert_eq!(g.delta, vec![0, 1]);
    assert!(g.t.covectors().iter().all(|c| c.0[2].is_zero()));
    assert!(validate_y_vertex(&x, 1, &g).passed());
    assert!(v.t.is_weak_specialization(&g.t).unwrap());
    assert!(matches!(glue_map(&x, 1, &[0, 1], &[0], &v.t, &v.y), Err(Error::InvalidImage(_))));
    // A vertex over {1,2} glued "up" from 0 is not a coface relation.
    assert!(matches!(glue_map(&x, 1, &[0], &[1, 2], &v.t, &v.y), Err(Error::InvalidImage(_))));
}

#[test]
fn diagrams() {
    let x = standard::polygon(3);
    let v = vertex_data(&x);
    assert!(validate_diagram(&x, 1, &[v.clone(), v.clone()]).passed());
    let g = glue_map(&x, 1, &[0], &[0, 1], &v.t, &v.y).unwrap();
    let z = rank1_strong_quotients(&g.y)
        .into_iter()
        .find(|z| v.z.is_weak_specialization(z).unwrap())
        .expect("the chosen z specializes somewhere over the edge");
    let up = ZVertex { delta: g.delta, t: g.t, y: g.y, z };
    assert!(validate_diagram(&x, 1, &[v.clone(), up.clone()]).passed());
    let back = validate_diagram(&x, 1, &[up, v]);
    assert_eq!(back.failed_check(), Some("delta_chain"));
    assert_eq!(validate_diagram(&x, 1, &[]).failed_check(), Some("length"));
}

#[test]
fn u_delta_on_the_circle_is_a_point() {
    let x = standard::polygon(3);
    for d in x.all_simplices() {
        let u = build_u_delta(&x, 1, d, DEFAULT_SAMPLES).unwrap();
        assert!(u.incomplete);
        assert_eq!(u.elements.len(), 1, "{d:?}");
        let (t, y) = &u.elements[0];
        assert!(validate_y_vertex(&x, 1, &YVertex { delta: d.clone(), t: t.clone(), y: y.clone() }).passed());
    }
    assert!(matches!(build_u_delta(&x, 1, &[0], 0), Err(Error::BudgetExceeded(_))));
}

#[test]
fn local_y_is_the_product_with_the_closed_dual_cell() {
    let x = standard::polygon(3);
    let edge = build_local_y(&x, 1, &[0, 1], DEFAULT_SAMPLES).unwrap();
    assert_eq!(edge.complex.f_vector(), vec![1]);
    let vertex = build_local_y(&x, 1, &[0], DEFAULT_SAMPLES).unwrap();
    assert_eq!(vertex.complex.f_vector(), vec![3, 2]);

    let a = assemble(&x, 1, &AssemblyOptions::default()).unwrap();
    for d in x.all_simplices() {
        let local = build_local_y(&x, 1, d, DEFAULT_SAMPLES).unwrap();
        let over: usize = a.y.vertices.iter().filter(|v| d.iter().all(|i| v.delta.contains(i))).count();
        assert_eq!(local.complex.labels().len(), over, "{d:?}");
    }
}

/// Fiber of `ρ` over a vertex of `Y`: two vertices per distinct line of the star vectors.
#[test]
fn circle_assembly() {
    let x = standard::polygon(3);
    let a = assemble(&x, 1, &AssemblyOptions::default()).unwrap();
    assert_eq!(a.y.complex.f_vector(), vec![6, 6]);
    let image: BTreeSet<usize> = a.y.pi.vertex_map().iter().copied().collect();
    assert_eq!(image.len(), 6);
    for e in a.y.complex.simplices(1) {
        assert!(a.y.subdivision.subdivision().contains(&a.y.pi.image(e)));
    }
    for (i, v) in a.y.vertices.iter().enumerate() {
        assert!(validate_y_vertex(&x, 1, v).passed());
        let fiber: Vec<usize> = (0..a.z.vertices.len()).filter(|&p| a.z.rho.apply(p) == i).collect();
        let lines = if v.delta.len() == 1 { 3 } else { 2 };
        assert_eq!(fiber.len(), 2 * lines);
        let sub = a.z.complex.subcomplex(|s| s.iter().all(|p| fiber.contains(p)));
        assert_eq!(sub.f_vector(), vec![2 * lines, 2 * lines]);
    }
    for v in &a.z.vertices {
        assert!(validate_z_vertex(&x, 1, v).passed());
    }
    for s in a.z.complex.maximal_simplices() {
        let diagram: Vec<ZVertex> = s.iter().map(|&p| a.z.vertices[p].clone()).collect();
        assert!(validate_diagram(&x, 1, &diagram).passed(), "{s:?}");
    }
    // Deterministic under reassembly.
    let b = assemble(&x, 1, &AssemblyOptions::default()).unwrap();
    assert_eq!(serde_json::to_string(&a.to_json()).unwrap(), serde_json::to_string(&b.to_json()).unwrap());
}

#[test]
fn simplex_budget_is_enforced() {
    let x = standard::polygon(3);
    let opts = AssemblyOptions { max_simplices: 5, ..AssemblyOptions::default() };
    assert!(matches!(assemble(&x, 1, &opts), Err(Error::BudgetExceeded(_))));
}
