mod common;

use common::brute_weight;
use superchord::diagrams::*;
use superchord::liesuper::*;
use superchord::scalars::{AlphaScalar, Rational, Ring};
use superchord::supergraded::Mat;
use superchord::weightsys::*;

const C: Kind = Kind::Circle;
const I: Kind = Kind::Interval;

fn colorings() -> Vec<(&'static str, InvariantTensor<Rational>, Representation<Rational>)> {
    let mut out = Vec::new();
    for (name, m, n) in [("gl1_1", 1, 1), ("gl2_1", 2, 1), ("gl1_2", 1, 2)] {
        let g = build_gl(m, n).unwrap();
        out.push((name, casimir_tensor(&g).unwrap(), defining(&g)));
    }
    let g = build_gl(2, 1).unwrap();
    let al = Rational::new(3, 2);
    let s = links_gould_tensor(&g).unwrap().map(|x| x.eval(&al).unwrap());
    out.push(("v_alpha@3/2", s, v_alpha_at(&g, &al).unwrap()));
    out
}

#[test]
fn state_sum_matches_brute_force() {
    for (name, t, v) in colorings() {
        for m in 0..=3 {
            for d in enumerate_diagrams(&[C], m) {
                assert_eq!(&ws_link(&t, &v, &d).unwrap(), common::brute_weight(&t, &v, &d).get(0, 0), "{name} {d:?}");
            }
            for d in enumerate_diagrams(&[I], m) {
                let op = eval_diagram(&t, &[&v], &d).unwrap().operator().unwrap();
                assert_eq!(op, brute_weight(&t, &v, &d), "{name} {d:?}");
            }
        }
        for m in 0..=2 {
            for d in enumerate_diagrams(&[C, C], m) {
                assert_eq!(&ws_link(&t, &v, &d).unwrap(), brute_weight(&t, &v, &d).get(0, 0), "{name} {d:?}");
            }
        }
    }
}

#[test]
fn symbolic_state_sum_matches_brute_force() {
    let ctx = lg_context();
    for m in 0..=2 {
        for d in enumerate_diagrams(&[I], m) {
            let brute = brute_weight(&ctx.tensor, &ctx.module, &d);
            assert_eq!(wlg(&d).unwrap(), brute.scalar_value().unwrap_or_else(AlphaScalar::zero), "{d:?}");
        }
    }
}

#[test]
fn gl11_long_values() {
    let g = build_gl(1, 1).unwrap();
    let (t, v) = (casimir_tensor(&g).unwrap(), defining::<Rational>(&g));
    let w = |s: &[u16]| ws_tangle11(&t, &v, &ChordDiagram::interval(s)).unwrap();
    assert_eq!(w(&[0, 0]), Rational::zero());
    assert_eq!(w(&[0, 0, 1, 1]), Rational::zero());
    assert_eq!(w(&[0, 1, 1, 0]), Rational::zero());
    assert_eq!(w(&[0, 1, 0, 1]), Rational::one());
}

#[test]
fn lg_low_degree_values() {
    let a = AlphaScalar::alpha();
    let two = AlphaScalar::from_int(2);
    let base = two.mul(&a).add(&two.mul(&a).mul(&a));
    assert!(wlg(&ChordDiagram::empty(&[I])).unwrap().is_one());
    assert!(wlg(&ChordDiagram::interval(&[0, 0])).unwrap().is_zero());
    assert!(wlg(&ChordDiagram::interval(&[0, 1, 1, 0])).unwrap().is_zero());
    assert_eq!(wlg(&ChordDiagram::interval(&[0, 1, 0, 1])).unwrap(), base);
    assert_eq!(wlg(&ChordDiagram::interval(&[0, 1, 2, 0, 1, 2])).unwrap(), base.mul(&two).neg());
}

#[test]
fn v_alpha_closed_values_vanish() {
    let ctx = lg_context();
    for m in 0..=3 {
        for d in enumerate_diagrams(&[C], m) {
            assert!(ws_link(&ctx.tensor, &ctx.module, &d).unwrap().is_zero(), "{d:?}");
        }
    }
}

#[test]
fn four_term_relators_vanish() {
    for (name, t, v) in colorings() {
        for m in 2..=3 {
            for r in four_term_relators(&[C], m) {
                let mut acc = Rational::zero();
                for (d, c) in r.iter() {
                    acc.add_assign(&ws_link(&t, &v, d).unwrap().mul(c));
                }
                assert!(acc.is_zero(), "{name} {r:?}");
            }
            for r in four_term_relators(&[I], m) {
                let mut acc = Mat::zeros(v.dim(), v.dim());
                for (d, c) in r.iter() {
                    acc = acc.add(&eval_diagram(&t, &[&v], d).unwrap().operator().unwrap().scale(c));
                }
                assert!(acc.is_zero(), "{name} {r:?}");
            }
        }
    }
}

#[test]
fn multiplicative_under_disjoint_union() {
    for (name, t, v) in colorings() {
        let ds = enumerate_diagrams(&[C], 2);
        for a in &ds {
            for b in &ds {
                let ab = ws_link(&t, &v, &a.disjoint_union(b)).unwrap();
                assert_eq!(ab, ws_link(&t, &v, a).unwrap().mul(&ws_link(&t, &v, b).unwrap()), "{name}");
            }
        }
    }
}

#[test]
fn rotation_does_not_matter() {
    for (name, t, v) in colorings() {
        let d = ChordDiagram::circle(&[0, 1, 2, 0, 2, 1]);
        let w = ws_link(&t, &v, &d).unwrap();
        for r in 1..6 {
            let rot = d.rotated(0, r);
            assert_eq!(ws_link(&t, &v, &rot).unwrap(), w, "{name} r={r}");
            assert_eq!(brute_weight(&t, &v, &rot).get(0, 0), &w, "{name} r={r}");
        }
    }
}

#[test]
fn cabling_is_coloring_by_tensor_square() {
    for (name, t, v) in colorings().into_iter().take(2) {
        let g = if name == "gl1_1" { build_gl(1, 1) } else { build_gl(2, 1) }.unwrap();
        let vv = rep_combine(Combine::Tensor, &[&v, &v]).unwrap();
        vv.check(&g).unwrap();
        for m in 0..=2 {
            for d in enumerate_diagrams(&[C], m) {
                let lhs = eval_diagram(&t, &[&vv], &d).unwrap().scalar().unwrap();
                let mut rhs = Rational::zero();
                for (e, c) in cable_diagram(&d, 0, 2).unwrap().iter() {
                    rhs.add_assign(&ws_link(&t, &v, e).unwrap().mul(c));
                }
                assert_eq!(lhs, rhs, "{name} {d:?}");
            }
        }
    }
}

#[test]
fn wrong_shapes_rejected() {
    let (_, t, v) = colorings().remove(0);
    assert!(ws_link(&t, &v, &ChordDiagram::interval(&[0, 0])).is_err());
    assert!(ws_tangle11(&t, &v, &ChordDiagram::circle(&[0, 0])).is_err());
    assert!(eval_diagram(&t, &[&v, &v], &ChordDiagram::circle(&[0, 0])).is_err());
}
