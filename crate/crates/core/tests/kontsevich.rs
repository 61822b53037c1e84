mod common;

use proptest::prelude::*;
use superchord::diagrams::{ChordDiagram, DiagramSum, Kind};
use superchord::harness::{defining_colorings, fixtures};
use superchord::kontsevich::horizontal::Elem;
use superchord::kontsevich::*;
use superchord::liesuper::{build_gl, links_gould_tensor, v_alpha, v_alpha_at};
use superchord::scalars::{AlphaScalar, HSeries, Poly, Rational, Ring};
use superchord::weightsys::{ws_link, ws_tangle11};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn alpha_poly(c: &[i64]) -> AlphaScalar {
    AlphaScalar::from_poly(Poly::from_coeffs(c.iter().map(|&x| Rational::from_int(x)).collect()))
}

#[test]
fn conway_oracle_values() {
    assert_eq!(common::conway(1, &[]), vec![1, 0, 0]);
    assert_eq!(common::conway(2, &[1, 1, 1]), vec![1, 0, 1]);
    assert_eq!(common::conway(3, &[1, -2, 1, -2]), vec![1, 0, -1]);
    assert_eq!(common::conway(2, &[1, 1]), vec![0, 1, 0]);
    assert_eq!(common::conway(3, &[1, 1, 1, 2]), vec![1, 0, 1]);
}

#[test]
fn parse_examples() {
    let t = fixtures::word("trefoil");
    assert!(t.is_closed());
    assert_eq!(word_kinds(&t), vec![Kind::Circle]);
    assert_eq!(framings(&t), vec![3]);
    let id = parse_word("id(+)").unwrap();
    assert_eq!(id.top(), &[Sign::Plus]);
    assert_eq!(id.bottom(), vec![Sign::Plus]);
    assert!(parse_word("braid[2]: s1 ; close ; close").is_err());
    assert!(parse_word("obj: + +\nslice: cap(+-)").is_err());
    assert!(parse_word("slice: frob(+)").is_err());
}

#[test]
fn word_text_roundtrip() {
    for (name, _) in fixtures::WORDS {
        let w = fixtures::word(name);
        assert_eq!(parse_word(&w.to_text()).unwrap(), w, "{name}");
    }
}

#[test]
fn resolution_signs() {
    let plain = fixtures::word("trefoil");
    assert_eq!(plain.resolve_singular(), vec![(1, plain.clone())]);
    let s1: Vec<i64> = fixtures::word("sing1").resolve_singular().iter().map(|r| r.0).collect();
    assert_eq!(s1, vec![1, -1]);
    let s2: Vec<i64> = fixtures::word("sing2_crossed").resolve_singular().iter().map(|r| r.0).collect();
    assert_eq!(s2, vec![1, -1, -1, 1]);
}

#[test]
fn singular_diagrams() {
    assert_eq!(diagram_of_singular(&fixtures::word("trefoil")), ChordDiagram::empty(&[Kind::Circle]));
    assert_eq!(diagram_of_singular(&fixtures::word("sing1")), ChordDiagram::circle(&[0, 0]).canonical());
    assert_eq!(diagram_of_singular(&fixtures::word("sing2_parallel")), ChordDiagram::circle(&[0, 0, 1, 1]).canonical());
    assert_eq!(diagram_of_singular(&fixtures::word("sing2_crossed")), ChordDiagram::circle(&[0, 1, 0, 1]).canonical());
}

fn degree_part(e: &Elem, k: usize) -> Elem {
    e.iter().filter(|(w, _)| w.len() == k).map(|(w, c)| (w.clone(), c.clone())).collect()
}

#[test]
fn associator_low_degrees() {
    let a = build_associator(3).unwrap();
    assert!(a.residuals().iter().all(Elem::is_empty));
    assert!(degree_part(a.phi(), 1).is_empty());
    assert!(degree_part(a.phi(), 3).is_empty());
    // frozen from the degree-2 hexagon system
    assert_eq!(a.c2(), q(1, 24));
    assert_eq!(degree_part(a.phi(), 2), Elem::from([(vec![0, 1], q(1, 24)), (vec![1, 0], q(-1, 24))]));
    assert!(build_associator(MAX_ASSOCIATOR_DEGREE + 1).is_err());
}

#[test]
fn associator_degree_four() {
    let a = build_associator(4).unwrap();
    assert!(a.residuals().iter().all(Elem::is_empty));
    let fresh = Associator::solve(4).unwrap();
    assert_eq!(fresh.phi(), a.phi());
}

#[test]
fn z_of_identity_and_crossing() {
    let id = parse_word("id(+)").unwrap();
    let z = z_eval(&id, 3).unwrap();
    assert_eq!(z.sum(), &DiagramSum::single(ChordDiagram::empty(&[Kind::Interval]), Rational::one()));

    let x = parse_word("obj: + +\nslice: X+").unwrap();
    let z = z_eval(&x, 3).unwrap();
    assert_eq!(z.kinds(), &[Kind::Interval, Kind::Interval]);
    // exp(h t/2): k parallel chords between the strands, coefficient (1/2)^k/k!
    for (k, c) in [(0, q(1, 1)), (1, q(1, 2)), (2, q(1, 8)), (3, q(1, 48))] {
        let part = z.degree_part(k);
        assert_eq!(part.len(), 1, "degree {k}");
        let (d, got) = part.iter().next().unwrap();
        assert_eq!(got, &c);
        assert!(d.chords().values().all(|(p, q)| p.comp != q.comp));
    }
}

#[test]
fn singular_leading_term() {
    for (name, m) in fixtures::singular() {
        let w = fixtures::word(name);
        let z = z_eval(&w, m + 1).unwrap();
        for k in 0..m {
            assert!(z.degree_part(k).is_zero(), "{name} degree {k}");
        }
        assert_eq!(z.degree_part(m), DiagramSum::single(diagram_of_singular(&w), Rational::one()), "{name}");
        assert_eq!(z.leading_degree(), Some(m));
    }
}

#[test]
fn reidemeister_moves() {
    let pairs = [
        ("braid[2]: s1 s1^-1", "braid[2]: "),
        ("braid[3]: s1 s2 s1", "braid[3]: s2 s1 s2"),
        ("braid[3]: s1^-1 s2 s1", "braid[3]: s2 s1 s2^-1"),
        ("obj: -\nslice: id(-) cup(+-)\nslice: cap(-+) id(-)", "id(-)"),
        ("obj: +\nslice: cup(+-) id(+)\nslice: id(+) cap(-+)", "id(+)"),
    ];
    for (a, b) in pairs {
        let za = z_eval(&parse_word(a).unwrap(), 3).unwrap();
        let zb = z_eval(&parse_word(b).unwrap(), 3).unwrap();
        assert!(za.equivalent(&zb), "{a} vs {b}");
    }
    // a curl changes the value only through the framing
    let curl = parse_word("obj: +\nslice: id(+) cup(+-)\nslice: X+ id(-)\nslice: id(+) cap(+-)").unwrap();
    let kink = parse_word("obj: +\nslice: kink+").unwrap();
    assert!(z_eval(&curl, 3).unwrap().equivalent(&z_eval(&kink, 3).unwrap()));
    assert!(!z_eval(&kink, 3).unwrap().equivalent(&z_eval(&parse_word("id(+)").unwrap(), 3).unwrap()));
}

#[test]
fn presentations_agree_as_z() {
    let a = z_eval(&fixtures::word("trefoil"), 3).unwrap();
    let b = z_eval(&fixtures::word("trefoil_slices"), 3).unwrap();
    assert!(a.equivalent(&b));
}

#[test]
fn two_paths_on_fixtures() {
    for (cname, t, v) in defining_colorings() {
        for (name, _) in fixtures::WORDS {
            let w = fixtures::word(name);
            let fused = wz_eval(&w, &t, &v, 3).unwrap().scalar_series().unwrap();
            let composed = ws_of_z(&t, &v, &z_eval(&w, 3).unwrap()).unwrap();
            assert_eq!(fused, composed, "{cname} {name}");
            let long = match long_knot(&w) {
                Ok(l) => l,
                Err(_) => continue,
            };
            let fused = wz_series(&long, &t, &v, 3).unwrap();
            let composed = ws_of_z(&t, &v, &z_eval(&long, 3).unwrap()).unwrap();
            assert_eq!(fused, composed, "{cname} {name} slit");
        }
    }
}

#[test]
fn wz_unknot_and_framing() {
    let (_, t, v) = defining_colorings().pop().unwrap();
    let u = wz_series(&fixtures::word("unknot"), &t, &v, 3).unwrap();
    assert!(u.coeff(0).is_one());
    // gl(2|1) defining on a framing-3 trefoil: only the framing survives
    let tre = wz_series(&long_knot(&fixtures::word("trefoil")).unwrap(), &t, &v, 3).unwrap();
    assert_eq!(tre.coeffs(), &[q(1, 1), q(3, 2), q(9, 8), q(9, 16)]);
}

#[test]
fn v_alpha_closed_vanishes() {
    let g = build_gl(2, 1).unwrap();
    let t = links_gould_tensor(&g).unwrap();
    let v = v_alpha(&g).unwrap();
    let z = wz_series(&fixtures::word("trefoil"), &t, &v, 3).unwrap();
    assert!(z.is_zero());
}

#[test]
fn lg_values() {
    let one = lg_invariant(&fixtures::word("unknot"), 3).unwrap();
    assert_eq!(one, HSeries::one(3));
    let tre = lg_invariant(&fixtures::word("trefoil"), 3).unwrap();
    let fig = lg_invariant(&fixtures::word("figure8"), 3).unwrap();
    for s in [&tre, &fig] {
        assert!(s.coeff(0).is_one());
        assert!(s.coeffs().iter().all(AlphaScalar::is_polynomial));
    }
    // frozen regression values
    assert_eq!(tre.coeffs(), &[alpha_poly(&[1]), alpha_poly(&[]), alpha_poly(&[0, 2, 2]), alpha_poly(&[0, -2, -2])]);
    assert_eq!(fig.coeffs(), &[alpha_poly(&[1]), alpha_poly(&[]), alpha_poly(&[0, -2, -2]), alpha_poly(&[])]);
    // degree-2 ratio against the skein oracle
    let c_tre = common::conway_c2(2, &[1, 1, 1]);
    let c_fig = common::conway_c2(3, &[1, -2, 1, -2]);
    let lam = tre.coeff(2).scale(&c_tre.inv().unwrap());
    assert_eq!(fig.coeff(2), lam.scale(&c_fig));
}

#[test]
fn lg_independent_of_framing_and_slit() {
    let base = lg_invariant(&fixtures::word("trefoil"), 3).unwrap();
    for name in ["trefoil_slices", "trefoil_w0", "trefoil_w2", "trefoil_w4"] {
        assert_eq!(lg_invariant(&fixtures::word(name), 3).unwrap(), base, "{name}");
    }
    assert!(matches!(lg_invariant(&fixtures::word("hopf"), 2), Err(KontsevichError::NotKnot(2))));
}

#[test]
fn lg_matches_specialized_rep_side() {
    let g = build_gl(2, 1).unwrap();
    let al = q(3, 2);
    let t = links_gould_tensor(&g).unwrap().map(|x| x.eval(&al).unwrap());
    let v = v_alpha_at(&g, &al).unwrap();
    for name in ["trefoil", "figure8"] {
        let w = fixtures::word(name);
        let lg = lg_invariant(&w, 3).unwrap();
        let rep = wz_series(&long_knot(&w).unwrap(), &t, &v, 3).unwrap();
        let specialized: Vec<Rational> = lg.coeffs().iter().map(|c| c.eval(&al).unwrap()).collect();
        assert_eq!(rep.coeffs(), specialized.as_slice(), "{name}");
    }
}

#[test]
fn gl11_long_knots_give_conway() {
    let (_, t, v) = defining_colorings().remove(0);
    for (name, n, braid) in [("trefoil_w0", 2, vec![1, 1, 1]), ("figure8", 3, vec![1, -2, 1, -2])] {
        let s = wz_series(&long_knot(&fixtures::word(name)).unwrap(), &t, &v, 3).unwrap();
        let c = common::conway(n, &braid);
        assert_eq!(s.coeff(2), Rational::from_int(c[2]), "{name}");
        assert!(s.coeff(1).is_zero());
    }
}

#[test]
fn vassiliev_examples() {
    let (_, t, v) = defining_colorings().pop().unwrap();
    let w = fixtures::word("sing1");
    let d = vassiliev_defect(&t, &v, &w, 2).unwrap();
    assert!(d.coeff(0).is_zero());
    assert_eq!(d.coeff(1), ws_link(&t, &v, &diagram_of_singular(&w)).unwrap());
    let w = fixtures::word("sing2_crossed");
    let d = vassiliev_defect(&t, &v, &w, 3).unwrap();
    assert!(d.coeff(0).is_zero() && d.coeff(1).is_zero());
    assert_eq!(d.coeff(2), ws_link(&t, &v, &ChordDiagram::circle(&[0, 1, 0, 1])).unwrap());
    let odd = parse_word("braid[2]: s1 sing ; close").unwrap();
    assert!(matches!(vassiliev_defect(&t, &v, &odd, 2), Err(KontsevichError::OddFraming(_))));
}

#[test]
fn ribbon_fixtures() {
    let trivial = RibbonData::from_json(&fixtures::ribbon("trivial")).unwrap();
    for (name, _) in fixtures::WORDS {
        let w = fixtures::word(name);
        if w.double_points() == 0 && word_kinds(&w).len() == 1 {
            assert!(rt_invariant(&w, &trivial).unwrap().is_one(), "{name}");
        }
    }
    for r in ["trivial", "jones_q2", "alexander_q2"] {
        let data = RibbonData::from_json(&fixtures::ribbon(r)).unwrap();
        let a = rt_invariant(&fixtures::word("trefoil"), &data).unwrap();
        let b = rt_invariant(&fixtures::word("trefoil_slices"), &data).unwrap();
        assert_eq!(a, b, "{r}");
        assert_eq!(RibbonData::from_json(&data.to_json()).unwrap(), data);
    }
}

#[test]
fn ribbon_rejections() {
    let j = RibbonData::jones(&Rational::from_int(2));
    let mut r = j.braiding().clone();
    r.add_at(1, 2, &Rational::one());
    let e = RibbonData::new(j.space().clone(), r, j.twist().clone(), j.pivot().clone()).unwrap_err();
    assert_eq!(e, RibbonError::YangBaxter);
    let e = RibbonData::new(j.space().clone(), j.braiding().clone(), j.twist().scale(&q(1, 2)), j.pivot().clone());
    assert_eq!(e.unwrap_err(), RibbonError::Twist);
    let w = parse_word("braid[2]: s1 sing ; close").unwrap();
    assert!(rt_invariant(&w, &j).is_err());
}

#[test]
fn alexander_data_matches_conway() {
    // Δ(q²) = ∇(q − q⁻¹) at q = 2
    let data = RibbonData::from_json(&fixtures::ribbon("alexander_q2")).unwrap();
    let z = q(3, 2);
    for (name, n, braid) in [("trefoil", 2, vec![1, 1, 1]), ("figure8", 3, vec![1, -2, 1, -2])] {
        let c = common::conway(n, &braid);
        let mut expect = Rational::zero();
        let mut pw = Rational::one();
        for x in &c {
            expect.add_assign(&pw.mul(&Rational::from_int(*x)));
            pw = pw.mul(&z);
        }
        let op = data.evaluate(&long_knot(&fixtures::word(name)).unwrap()).unwrap();
        assert_eq!(op.scalar_value(), Some(expect), "{name}");
        assert!(rt_invariant(&fixtures::word(name), &data).unwrap().is_zero());
    }
}

fn braid_strategy() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (2usize..=3).prop_flat_map(|n| {
        let gen = (1..n as i64).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        (Just(n), prop::collection::vec(gen, 0..5))
    })
}

fn braid_text(n: usize, b: &[i64], close: bool) -> String {
    let toks: Vec<String> =
        b.iter().map(|&g| if g > 0 { format!("s{g}") } else { format!("s{}^-1", -g) }).collect();
    format!("braid[{n}]: {}{}", toks.join(" "), if close { " ; close" } else { "" })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_braids_two_paths((n, b) in braid_strategy()) {
        let w = parse_word(&braid_text(n, &b, true)).unwrap();
        let (_, t, v) = defining_colorings().remove(0);
        let fused = wz_series(&w, &t, &v, 2).unwrap();
        let composed = ws_of_z(&t, &v, &z_eval(&w, 2).unwrap()).unwrap();
        prop_assert_eq!(fused, composed);
    }

    #[test]
    fn random_braids_inverse_is_trivial((n, b) in braid_strategy()) {
        let mut both = b.clone();
        both.extend(b.iter().rev().map(|g| -g));
        let w = parse_word(&braid_text(n, &both, false)).unwrap();
        let id = parse_word(&braid_text(n, &[], false)).unwrap();
        prop_assert!(z_eval(&w, 2).unwrap().equivalent(&z_eval(&id, 2).unwrap()));
    }

    #[test]
    fn jones_invariant_under_conjugation((n, b) in braid_strategy(), k in 1i64..3) {
        prop_assume!((k as usize) < n);
        let data = RibbonData::jones(&Rational::from_int(2));
        let mut conj = vec![k];
        conj.extend(&b);
        conj.push(-k);
        let a = rt_invariant(&parse_word(&braid_text(n, &b, true)).unwrap(), &data).unwrap();
        let c = rt_invariant(&parse_word(&braid_text(n, &conj, true)).unwrap(), &data).unwrap();
        prop_assert_eq!(a, c);
    }
}

#[test]
fn tangle11_weight_of_z_is_scalar() {
    let (_, t, v) = defining_colorings().pop().unwrap();
    let z = z_eval(&long_knot(&fixtures::word("figure8")).unwrap(), 2).unwrap();
    for (d, _) in z.sum().iter() {
        assert!(ws_tangle11(&t, &v, d).is_ok());
    }
}
