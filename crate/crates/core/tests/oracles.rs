// Library results against independent brute-force reimplementations.

use std::collections::BTreeSet;

use catalan::boolean_matrix::{enumerate_matrices, mat_mul, Shape};
use catalan::chain_maps::{bar, compose, enumerate, hasse_edges, MonoidClass};
use catalan::counting::{catalan, order_preserving_count};
use catalan::representations::enumerate_staircase_partitions;
use catalan::{BoolMatrix, Partition, Transformation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every map [n] -> [n] as an image vector, in lexicographic order.
fn all_maps(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![1u32; n];
    loop {
        out.push(v.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < n as u32 {
                v[i] += 1;
                break;
            }
            v[i] = 1;
        }
    }
}

fn catalan_by_recurrence(n: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for k in 1..=n {
        let next = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
        c.push(next);
    }
    c
}

#[test]
fn enumeration_matches_filtered_brute_force() {
    for n in 1..=6 {
        let maps = all_maps(n);
        let monotone = |v: &Vec<u32>| v.windows(2).all(|w| w[0] <= w[1]);
        type Filter = Box<dyn Fn(&Vec<u32>) -> bool>;
        let filters: [(MonoidClass, Filter); 3] = [
            (MonoidClass::O, Box::new(monotone)),
            (MonoidClass::C, Box::new(move |v| monotone(v) && v.iter().enumerate().all(|(i, &x)| x as usize > i))),
            (MonoidClass::Cminus, Box::new(move |v| monotone(v) && v.iter().enumerate().all(|(i, &x)| x as usize <= i + 1))),
        ];
        for (class, keep) in filters {
            let want: Vec<Vec<u32>> = maps.iter().filter(|v| keep(v)).cloned().collect();
            let got: Vec<Vec<u32>> = enumerate(n, class).unwrap().iter().map(|a| a.images().to_vec()).collect();
            assert_eq!(got, want, "{class} n={n}");
        }
    }
}

#[test]
fn catalan_numbers_match_the_recurrence() {
    let rec = catalan_by_recurrence(20);
    for (n, &c) in rec.iter().enumerate() {
        assert_eq!(catalan(n as u64), c, "n={n}");
    }
    for (n, &c) in rec.iter().enumerate().take(11).skip(1) {
        assert_eq!(enumerate(n, MonoidClass::C).unwrap().len() as u128, c);
        assert_eq!(enumerate(n, MonoidClass::Cminus).unwrap().len() as u128, c);
    }
    for n in 1..=12 {
        assert_eq!(enumerate_staircase_partitions(n).unwrap().len() as u128, rec[n + 1]);
    }
    // |O_n| by counting weakly increasing sequences directly
    for n in 1..=6 {
        let direct = all_maps(n).iter().filter(|v| v.windows(2).all(|w| w[0] <= w[1])).count();
        assert_eq!(order_preserving_count(n as u64), direct as u128);
    }
}

fn naive_product(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    let mut c = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j] = c[i][j] || (a[i][k] && b[k][j]);
            }
        }
    }
    c
}

fn random_grid(rng: &mut StdRng, n: usize) -> Vec<Vec<bool>> {
    let density: f64 = rng.gen_range(0.05..0.95);
    (0..n).map(|_| (0..n).map(|_| rng.gen_bool(density)).collect()).collect()
}

fn to_matrix(g: &[Vec<bool>]) -> BoolMatrix {
    BoolMatrix::from_fn(g.len(), |i, j| g[i - 1][j - 1])
}

#[test]
fn packed_product_matches_triple_loop() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in 1..=6 {
        for _ in 0..1000 {
            let a = random_grid(&mut rng, n);
            let b = random_grid(&mut rng, n);
            assert_eq!(mat_mul(&to_matrix(&a), &to_matrix(&b)).unwrap(), to_matrix(&naive_product(&a, &b)));
        }
    }
    for n in [7, 31, 32, 33, 63, 64] {
        for _ in 0..20 {
            let a = random_grid(&mut rng, n);
            let b = random_grid(&mut rng, n);
            assert_eq!(mat_mul(&to_matrix(&a), &to_matrix(&b)).unwrap(), to_matrix(&naive_product(&a, &b)));
        }
    }
}

/// Covering pairs as `R - R^2` for the strict order relation `R`.
fn transitive_reduction(elements: &[Transformation]) -> BTreeSet<(usize, usize)> {
    let m = elements.len();
    let below = |a: &Transformation, b: &Transformation| a != b && a.images().iter().zip(b.images()).all(|(x, y)| x <= y);
    let r: Vec<Vec<bool>> = elements.iter().map(|a| elements.iter().map(|b| below(a, b)).collect()).collect();
    let r2 = naive_product(&r, &r);
    let mut out = BTreeSet::new();
    for i in 0..m {
        for j in 0..m {
            if r[i][j] && !r2[i][j] {
                out.insert((i, j));
            }
        }
    }
    out
}

#[test]
fn hasse_edges_are_the_transitive_reduction() {
    for (n, class) in [(3, MonoidClass::O), (4, MonoidClass::O), (3, MonoidClass::C), (4, MonoidClass::Cminus), (2, MonoidClass::Cminus)] {
        let elements = enumerate(n, class).unwrap();
        let got: BTreeSet<(usize, usize)> = hasse_edges(&elements).into_iter().collect();
        assert_eq!(got, transitive_reduction(&elements), "{class} n={n}");
    }
    assert_eq!(hasse_edges(&enumerate(2, MonoidClass::Cminus).unwrap()).len(), 1);
    assert_eq!(hasse_edges(&enumerate(3, MonoidClass::O).unwrap()).len(), 12);
}

/// Stair triangularity straight from the definition: unit diagonal, and a 1
/// at (i, j) with i < j forces 1s along row i from i to j and along column j
/// from i to j.
fn is_stair(m: &BoolMatrix) -> bool {
    let n = m.n();
    for i in 1..=n {
        if !m.get(i, i) {
            return false;
        }
        for j in 1..i {
            if m.get(i, j) {
                return false;
            }
        }
        for j in i + 1..=n {
            if m.get(i, j) && !((i..=j).all(|k| m.get(i, k)) && (i..=j).all(|k| m.get(k, j))) {
                return false;
            }
        }
    }
    true
}

#[test]
fn stair_enumeration_matches_definition() {
    for n in 1..=5 {
        let all_upper = enumerate_matrices(n, Shape::Upper).unwrap();
        let want: BTreeSet<BoolMatrix> = all_upper.into_iter().filter(is_stair).collect();
        let got: BTreeSet<BoolMatrix> = enumerate_matrices(n, Shape::Stair).unwrap().into_iter().collect();
        assert_eq!(got, want, "n={n}");
        assert_eq!(got.len() as u128, catalan(n as u64));
    }
}

#[test]
fn full_enumeration_counts_every_bit_pattern() {
    for n in 1..=4 {
        let all = enumerate_matrices(n, Shape::Full).unwrap();
        assert_eq!(all.len(), 1 << (n * n));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn staircase_partitions_match_brute_force() {
    for n in 1..=7usize {
        // every row-length vector with row k (bottom = 1) at most n + 1 - k
        let mut want = BTreeSet::new();
        let mut rows = vec![0u32; n];
        loop {
            if rows.windows(2).all(|w| w[0] >= w[1]) {
                let parts: Vec<u32> = rows.iter().copied().filter(|&r| r > 0).collect();
                want.insert(Partition::new(parts).unwrap());
            }
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                if rows[k] < (n - k) as u32 {
                    rows[k] += 1;
                    break;
                }
                rows[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        let got: BTreeSet<Partition> = enumerate_staircase_partitions(n).unwrap().into_iter().collect();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn bar_and_composition_from_the_definitions() {
    for n in 1..=5 {
        let maps = enumerate(n, MonoidClass::O).unwrap();
        let m = n as u32;
        for a in &maps {
            let direct: Vec<u32> = (1..=m).map(|i| m + 1 - a.apply((m + 1 - i) as usize)).collect();
            assert_eq!(bar(a).images(), &direct[..]);
        }
        for a in maps.iter().step_by(3) {
            for b in &maps {
                let direct: Vec<u32> = (1..=n).map(|i| b.apply(a.apply(i) as usize)).collect();
                assert_eq!(compose(a, b).unwrap().images(), &direct[..]);
            }
        }
    }
}
