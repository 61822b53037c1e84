use proptest::prelude::*;
use superchord::scalars::{Rational, Ring};
use superchord::supergraded::*;

type Q = Rational;

fn q(n: i64) -> Q {
    Rational::from_int(n)
}

fn even_map(space: &SuperSpace, entries: &[i64]) -> SuperMap<Q> {
    let n = space.dim();
    let par = space.parities();
    let mut k = 0;
    let m = Mat::from_fn(n, n, |i, j| {
        k += 1;
        if par[i] == par[j] {
            q(entries[(k - 1) % entries.len()])
        } else {
            Q::zero()
        }
    });
    SuperMap::new(space.clone(), space.clone(), m).unwrap()
}

#[test]
fn flip_examples() {
    let v = SuperSpace::even_odd(2, 0);
    let f: SuperMap<Q> = koszul_flip(&v, &v);
    assert!(f.matrix().triplets().all(|(_, _, x)| x.is_one()));
    let odd = SuperSpace::even_odd(0, 1);
    let f: SuperMap<Q> = koszul_flip(&odd, &odd);
    assert_eq!(f.matrix().get(0, 0), &q(-1));
    let (a, b) = (SuperSpace::even_odd(2, 1), SuperSpace::even_odd(1, 2));
    let back: SuperMap<Q> = koszul_flip(&b, &a);
    let there: SuperMap<Q> = koszul_flip(&a, &b);
    assert_eq!(back.compose(&there).unwrap(), SuperMap::identity(&a.tensor(&b)));
}

#[test]
fn tensor_examples() {
    let v = SuperSpace::even_odd(2, 1);
    let w = SuperSpace::even_odd(1, 1);
    let id: SuperMap<Q> = tensor_map(&SuperMap::identity(&v), &SuperMap::identity(&w));
    assert_eq!(id, SuperMap::identity(&v.tensor(&w)));
    assert_eq!(v.tensor(&v).split(), (5, 4));
}

#[test]
fn supertrace_examples() {
    assert_eq!(supertrace::<Q>(&SuperMap::identity(&SuperSpace::even_odd(2, 1))).unwrap(), q(1));
    assert_eq!(supertrace::<Q>(&SuperMap::identity(&SuperSpace::even_odd(2, 2))).unwrap(), q(0));
}

#[test]
fn close_strand_examples() {
    let v = SuperSpace::even_odd(2, 1);
    let w = SuperSpace::even_odd(1, 2);
    let c = close_strand::<Q>(&SuperMap::identity(&v.tensor(&w)), &v, &w).unwrap();
    assert_eq!(c, SuperMap::identity(&v).scale(&q(w.sdim())));
    // brute force over index pairs on (1|1)⊗(1|1)
    let s = SuperSpace::even_odd(1, 1);
    let ss = s.tensor(&s);
    let f = even_map(&ss, &[3, -1, 4, 1, -5, 9, 2, 6]);
    let closed = close_strand(&f, &s, &s).unwrap();
    for a in 0..2 {
        for b in 0..2 {
            let mut acc = Q::zero();
            for k in 0..2 {
                let x = f.matrix().get(a * 2 + k, b * 2 + k);
                acc = if k == 1 { acc.sub(x) } else { acc.add(x) };
            }
            assert_eq!(closed.matrix().get(a, b), &acc);
        }
    }
    assert_eq!(supertrace(&closed).unwrap(), supertrace(&f).unwrap());
}

#[test]
fn pairing_examples() {
    for v in [SuperSpace::even_odd(2, 1), SuperSpace::even_odd(2, 2), SuperSpace::even_odd(0, 1)] {
        let p: Pairings<Q> = dual_pairings(&v);
        let n = v.dim();
        for i in 0..n {
            for j in 0..n {
                let x = p.eval.matrix().get(0, i * n + j);
                assert_eq!(x.is_one(), i == j);
            }
        }
        // (id_V ⊗ ev) ∘ (coev ⊗ id_V) = id_V
        let id = SuperMap::identity(&v);
        let zig = tensor_map(&id, &p.eval).compose(&tensor_map(&p.coeval, &id)).unwrap();
        assert_eq!(zig.matrix(), id.matrix());
        // (ev ⊗ id_{V*}) ∘ (id_{V*} ⊗ coev) = id_{V*}
        let idd = SuperMap::identity(&v.dual());
        let zag = tensor_map(&p.eval, &idd).compose(&tensor_map(&idd, &p.coeval)).unwrap();
        assert_eq!(zag.matrix(), idd.matrix());
        // d ∘ τ ∘ b is the superdimension
        let circle = p.eval.compose(&koszul_flip(&v, &v.dual()).compose(&p.coeval).unwrap()).unwrap();
        assert_eq!(circle.matrix().get(0, 0), &q(v.sdim()));
    }
}

#[test]
fn odd_maps_rejected() {
    let v = SuperSpace::even_odd(1, 1);
    assert!(SuperMap::new(v.clone(), v, Mat::<Q>::unit(2, 2, 0, 1)).is_err());
}

fn space() -> impl Strategy<Value = SuperSpace> {
    (0usize..3, 0usize..3).prop_filter("nonempty", |(a, b)| a + b > 0).prop_map(|(a, b)| SuperSpace::even_odd(a, b))
}

fn map_on(v: SuperSpace) -> impl Strategy<Value = SuperMap<Q>> {
    prop::collection::vec(-4i64..5, 9).prop_map(move |e| even_map(&v, &e))
}

proptest! {
    #[test]
    fn interchange_law((f, f2, g, g2) in (space(), space()).prop_flat_map(|(v, w)| (map_on(v.clone()), map_on(v), map_on(w.clone()), map_on(w)))) {
        let lhs = tensor_map(&f, &g).compose(&tensor_map(&f2, &g2)).unwrap();
        let rhs = tensor_map(&f.compose(&f2).unwrap(), &g.compose(&g2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn supertrace_is_cyclic((f, g) in space().prop_flat_map(|v| (map_on(v.clone()), map_on(v)))) {
        prop_assert!(f.is_even() && g.is_even());
        prop_assert_eq!(supertrace(&f.compose(&g).unwrap()).unwrap(), supertrace(&g.compose(&f).unwrap()).unwrap());
    }

    #[test]
    fn closing_order_is_irrelevant(a in space(), b in space(), c in space(), e in prop::collection::vec(-3i64..4, 11)) {
        let abc = a.tensor(&b).tensor(&c);
        let f = even_map(&abc, &e);
        // close c then b, versus moving b to the end by flips and closing b then c
        let first = close_strand(&close_strand(&f, &a.tensor(&b), &c).unwrap(), &a, &b).unwrap();
        let swap = tensor_map(&SuperMap::identity(&a), &koszul_flip(&b, &c));
        let swap_back = tensor_map(&SuperMap::identity(&a), &koszul_flip(&c, &b));
        let g = swap.compose(&f).unwrap().compose(&swap_back).unwrap();
        let second = close_strand(&close_strand(&g, &a.tensor(&c), &b).unwrap(), &a, &c).unwrap();
        prop_assert_eq!(first, second);
    }
}
