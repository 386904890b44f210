use std::collections::BTreeSet;
use std::sync::Arc;

use pgx_core::constructions::{
    alternating, frobenius_field, paper_g2, paper_g3, pgl2, psl2, symmetric,
};
use pgx_core::spectra::{mu, prime_graph, spectrum};
use pgx_core::{Group, GroupElement, Permutation};
use proptest::prelude::*;

fn primes_dividing(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Nilpotent iff every Sylow subgroup is unique and the group is their
/// direct product: the p-elements number exactly |G|_p for every p, and
/// p-elements commute with q-elements.
fn direct_product_of_sylows(g: &Group) -> bool {
    let n = g.order().unwrap();
    let elements = g.elements().unwrap();
    let orders = g.element_orders().unwrap();
    let mut parts: Vec<Vec<&GroupElement>> = Vec::new();
    for p in primes_dividing(n) {
        let part: Vec<&GroupElement> = elements
            .iter()
            .zip(orders)
            .filter(|(_, &o)| is_p_power(o, p))
            .map(|(x, _)| x)
            .collect();
        if part.len() as u64 != p_part(n, p) {
            return false;
        }
        parts.push(part);
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            for x in a {
                for y in b {
                    if g.mul(x, y) != g.mul(y, x) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn random_perm_group() -> impl Strategy<Value = Arc<Group>> {
    (2usize..=6)
        .prop_flat_map(|n| {
            let images: Vec<u32> = (0..n as u32).collect();
            (
                Just(n),
                prop::collection::vec(Just(images).prop_shuffle(), 1..=3),
            )
        })
        .prop_map(|(n, gens)| {
            let gens = gens
                .into_iter()
                .map(|im| Permutation::from_images(im).unwrap())
                .collect();
            Group::permutations("random", n, gens, None).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn spectrum_is_divisor_closed(g in random_perm_group()) {
        let s = spectrum(&g).unwrap();
        let orders = s.orders();
        prop_assert!(orders.contains(&1));
        for &n in orders {
            prop_assert_eq!(s.source_order() % n, 0);
            for d in 1..=n {
                if n % d == 0 {
                    prop_assert!(orders.contains(&d), "{} in spectrum but {} missing", n, d);
                }
            }
        }
    }

    #[test]
    fn mu_is_a_covering_antichain(g in random_perm_group()) {
        let s = spectrum(&g).unwrap();
        let m = mu(&s);
        for &a in m.maxima() {
            for &b in m.maxima() {
                prop_assert!(a == b || b % a != 0);
            }
        }
        for &n in s.orders() {
            prop_assert!(m.maxima().iter().any(|&x| x % n == 0));
        }
        prop_assert!(m.maxima().is_subset(s.orders()));
    }

    #[test]
    fn edges_are_products_in_the_spectrum(g in random_perm_group()) {
        let s = spectrum(&g).unwrap();
        let graph = prime_graph(&s);
        let expected: BTreeSet<u64> = primes_dividing(g.order().unwrap()).into_iter().collect();
        prop_assert_eq!(graph.vertices(), &expected);
        for &p in graph.vertices() {
            for &q in graph.vertices() {
                if p < q {
                    prop_assert_eq!(graph.adjacent(p, q), s.contains(p * q));
                }
            }
        }
    }

    #[test]
    fn nilpotency_matches_sylow_oracle(g in random_perm_group()) {
        prop_assert_eq!(g.is_nilpotent().unwrap(), direct_product_of_sylows(&g));
    }

    #[test]
    fn semidirect_multiplication_is_associative(
        which in 0usize..4,
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        k in any::<prop::sample::Index>(),
    ) {
        let g = semidirect_fleet()[which].clone();
        let xs = g.elements().unwrap();
        let (a, b, c) = (&xs[i.index(xs.len())], &xs[j.index(xs.len())], &xs[k.index(xs.len())]);
        prop_assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
        prop_assert_eq!(g.mul(a, &g.inv(a)), g.identity());
    }
}

fn semidirect_fleet() -> &'static [Arc<Group>] {
    static FLEET: std::sync::OnceLock<Vec<Arc<Group>>> = std::sync::OnceLock::new();
    FLEET.get_or_init(|| {
        vec![
            paper_g2().unwrap(),
            paper_g3().unwrap(),
            frobenius_field(3, 2, 8).unwrap(),
            frobenius_field(2, 3, 7).unwrap(),
        ]
    })
}

#[test]
fn nilpotency_matches_sylow_oracle_on_the_fleet() {
    let mut fleet = vec![
        pgl2(3).unwrap(),
        pgl2(4).unwrap(),
        pgl2(5).unwrap(),
        pgl2(7).unwrap(),
        pgl2(9).unwrap(),
        pgl2(11).unwrap(),
        psl2(7).unwrap(),
        psl2(9).unwrap(),
        psl2(13).unwrap(),
        alternating(4).unwrap(),
        alternating(5).unwrap(),
        alternating(6).unwrap(),
        symmetric(3).unwrap(),
        symmetric(4).unwrap(),
        symmetric(5).unwrap(),
        symmetric(6).unwrap(),
        paper_g2().unwrap(),
        paper_g3().unwrap(),
    ];
    for p in [2u32, 3, 5, 7] {
        let mut k = 1;
        while (p as u64).pow(k) <= 2401 {
            let q = (p as u64).pow(k);
            for m in 1..q {
                if (q - 1) % m == 0 && q * m <= 2000 {
                    fleet.push(frobenius_field(p, k, m).unwrap());
                }
            }
            k += 1;
        }
    }
    // Abelian and nilpotent members of the fleet must be recognized too.
    let sub = {
        let g = pgl2(9).unwrap();
        let x = g
            .elements()
            .unwrap()
            .iter()
            .find(|x| g.element_order(x) == 8)
            .unwrap()
            .clone();
        g.subgroup_generated("C8", &[x]).unwrap()
    };
    fleet.push(sub);

    let mut nilpotent = 0;
    for g in &fleet {
        assert!(g.order().unwrap() <= 2000);
        let oracle = direct_product_of_sylows(g);
        assert_eq!(g.is_nilpotent().unwrap(), oracle, "{}", g.name());
        nilpotent += oracle as usize;
    }
    assert!(nilpotent >= 5, "fleet should contain nilpotent groups");
}
