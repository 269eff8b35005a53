use std::collections::BTreeSet;

use fakeplanes::fwpp::{self, DegreeMatrix, GeneratorMatrix, SeriesId};
use fakeplanes::{markov, BigInt};
use num_traits::ToPrimitive;

mod common;
use common::{constellations, EXAMPLES, EXCEPTION_SETS, MISPRINTS, PAIRS, SERIES};

fn q(mu: u64, u: [i64; 3], eta: i64) -> DegreeMatrix {
    let row = if mu == 1 { [0, 0, 0] } else { [0, 1, eta] };
    DegreeMatrix::from_i64(mu, u, row).unwrap()
}

fn b3(v: [i64; 3]) -> [BigInt; 3] {
    v.map(BigInt::from)
}

/// Least `n >= 1` with `n * w_Z` a multiple of column `k` in `Z + Z/mu`.
fn iota_by_scan(m: &DegreeMatrix, k: usize) -> i64 {
    let mu = m.mu as i64;
    let u: Vec<i64> = m.u.iter().map(|x| x.to_i64().unwrap()).collect();
    let wf: i64 = u.iter().sum();
    let wt: i64 = m.eta.iter().map(|&e| e as i64).sum();
    (1..=mu * u[k])
        .find(|&n| n * wf % u[k] == 0 && (n * wt - (n * wf / u[k]) * m.eta[k] as i64).rem_euclid(mu) == 0)
        .unwrap()
}

#[test]
fn worked_examples() {
    for ex in &EXAMPLES {
        let ms: Vec<DegreeMatrix> = ex.etas.iter().map(|&e| q(ex.mu, ex.u, e)).collect();
        let printed: Vec<GeneratorMatrix> =
            ex.generators.iter().map(|g| GeneratorMatrix::from_i64(*g).unwrap()).collect();
        // match printed generators to degree matrices by correspondence
        for (i, m) in ms.iter().enumerate() {
            let hits: Vec<usize> = (0..printed.len()).filter(|&j| fwpp::corresponds(m, &printed[j])).collect();
            assert_eq!(hits.len(), 1, "{}: {:?}", m, hits);
            let p = &printed[hits[0]];
            let w = fwpp::fake_weights_of_generator(p);
            assert_eq!(w, b3(ex.u.map(|x| x * ex.mu as i64)), "{}", m);
            let computed = fwpp::generator_matrix(m).unwrap();
            assert_eq!(fwpp::fake_weights_of_generator(&computed), w);
            assert!(fwpp::corresponds(m, &computed));
            let r = fwpp::singularity_report(m).unwrap();
            assert_eq!(r.iotas(), b3(ex.iotas[i]), "{}", m);
            assert_eq!(r.t_signs(), ex.signs[i], "{}", m);
            assert_eq!(r.curves(), ex.curves[i], "{}", m);
            let from_printed: Vec<usize> = (0..3)
                .map(|k| {
                    let (v, w) = p.cone(k);
                    fwpp::resolution_curve_count(&v, &w).unwrap()
                })
                .collect();
            assert_eq!(from_printed, ex.curves[i].to_vec(), "{}", m);
        }
        for i in 0..ms.len() {
            for j in 0..ms.len() {
                let same = ex.classes.iter().any(|c| c.contains(&i) && c.contains(&j));
                assert_eq!(fwpp::is_isomorphic(&ms[i], &ms[j]), same, "{} vs {}", ms[i], ms[j]);
            }
        }
    }
}

#[test]
fn listed_generator_degree_pairs() {
    for (mu, g, u, eta) in PAIRS {
        let m = q(mu, u, eta);
        let p = GeneratorMatrix::from_i64(g).unwrap();
        assert!(fwpp::corresponds(&m, &p), "{} / {}", m, p);
        assert_eq!(fwpp::degree_matrix_of(&p).map(|d| fwpp::adjust(&d).unwrap().0), fwpp::adjust(&m).map(|x| x.0));
    }
    // as printed, these are either not generator matrices or do not correspond
    for (mu, g, u, eta) in MISPRINTS {
        if let Ok(p) = GeneratorMatrix::from_i64(g) {
            assert!(!fwpp::corresponds(&q(mu, u, eta), &p), "{}", p);
        }
    }
}

#[test]
fn twenty_four_series() {
    let mut seen = BTreeSet::new();
    for a in markov::SOLVABLE {
        for p in fwpp::classify(a, &BigInt::from(5_000)).unwrap() {
            assert_eq!(fwpp::series_id(&p.q).unwrap().a, a);
            seen.extend(p.series_set());
        }
    }
    let expected: BTreeSet<SeriesId> = SERIES.iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(seen, expected);
    assert_eq!(fwpp::all_series().into_iter().collect::<BTreeSet<_>>(), expected);
}

#[test]
fn exception_sets_and_class_counts() {
    let sets = EXCEPTION_SETS;
    for (mu, u, etas) in sets {
        for &e in etas {
            for &f in etas {
                assert!(fwpp::is_isomorphic(&q(mu, u, e), &q(mu, u, f)));
            }
        }
    }
    let bound = BigInt::from(200_000);
    for &(a, mu, etas) in fwpp::FAMILIES.iter() {
        let planes = fwpp::classify_family(a, mu, &bound, None).unwrap();
        let nodes: BTreeSet<[BigInt; 3]> = planes.iter().map(|p| p.q.u.clone()).collect();
        for u in nodes {
            let here: Vec<_> = planes.iter().filter(|p| p.q.u == u).collect();
            let merged: usize = here.iter().map(|p| p.merged.len()).sum();
            let expected_merges = sets
                .iter()
                .filter(|s| s.0 == mu && a == 1 && b3(s.1) == u)
                .map(|s| s.2.len() - 1)
                .sum::<usize>();
            assert_eq!(merged, expected_merges, "{}-{} at {:?}", a, mu, u);
            assert_eq!(here.len(), etas.len() - merged, "{}-{} at {:?}", a, mu, u);
            for i in 0..here.len() {
                for j in 0..i {
                    assert!(!fwpp::is_isomorphic(&here[i].q, &here[j].q));
                }
            }
        }
    }
}

#[test]
fn constellation_tables() {
    let bound = 10_000i64;
    let mut exactly_one_t = BTreeSet::new();
    for s in fwpp::all_series() {
        let (allowed, signs) = constellations(&s.to_string());
        let reduced = s.a * s.mu;
        let tree = markov::enumerate_tree::<BigInt>(reduced, &BigInt::from(bound / s.mu as i64)).unwrap();
        assert!(!tree.nodes.is_empty());
        for u in &tree.nodes {
            let adj = fwpp::adjusted_weight(u, reduced).unwrap();
            let xi = markov::xi_of(reduced).unwrap();
            let x: Vec<BigInt> = (0..3).map(|k| num_integer::Roots::sqrt(&(&adj[k] / xi[k]))).collect();
            let m = fwpp::series_matrix(&adj, s.mu, s.eta).unwrap();
            let r = fwpp::singularity_report(&m).unwrap();
            let iotas = r.iotas();
            let fits = allowed.iter().any(|c| (0..3).all(|k| iotas[k] == BigInt::from(c[k]) * &x[k]));
            assert!(fits, "{} at {:?}: {:?}", s, adj, iotas);
            assert_eq!(r.t_signs(), signs, "{} at {:?}", s, adj);
            if r.t_flags().iter().filter(|&&t| t).count() == 1 {
                exactly_one_t.insert(s.to_string());
            }
            let p = fwpp::generator_matrix(&m).unwrap();
            for k in 0..3 {
                assert_eq!(iotas[k], BigInt::from(iota_by_scan(&m, k)), "{} at {:?} slot {}", s, adj, k);
                let (v, w) = p.cone(k);
                assert_eq!(fwpp::cone_gorenstein_index(&v, &w).unwrap(), iotas[k]);
            }
        }
    }
    let seven: BTreeSet<String> = common::EXACTLY_ONE_T.iter().map(|s| s.to_string()).collect();
    assert_eq!(exactly_one_t, seven);
}

#[test]
fn smooth_plane_report() {
    let r = fwpp::singularity_report(&q(1, [1, 1, 1], 0)).unwrap();
    assert_eq!(r.iotas(), b3([1, 1, 1]));
    assert_eq!(r.curves(), [0, 0, 0]);
    assert_eq!(r.t_signs(), "+++");
}
