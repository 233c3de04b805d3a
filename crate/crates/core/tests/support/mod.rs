//! Shared helpers for the integration suites.
//!
//! Every fact asserted against the library is recomputed here by a separate,
//! deliberately naive method — coordinate enumeration, exhaustive search,
//! cofactor determinants — so the two sides can only agree when both are
//! right. Nothing in this module calls the algorithms it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::Rng;

use almostsimple::intlat::IntMat;
use almostsimple::{parse_index, CartanDatum, Permutation, SimpleType, TitsIndex, TorusElement};

// ---------------------------------------------------------------------------
// Root systems from Euclidean coordinate models
// ---------------------------------------------------------------------------

/// All roots of the given simple type, enumerated from the classical
/// Euclidean coordinate models (doubled throughout so half-integer entries
/// become integers). This never touches a Cartan matrix or a root string:
/// the vectors are written down directly.
pub fn euclidean_roots(ty: SimpleType, n: usize) -> BTreeSet<Vec<i64>> {
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    match ty {
        // e_i - e_j in R^{n+1}, i != j
        SimpleType::A => {
            for i in 0..=n {
                for j in 0..=n {
                    if i != j {
                        let mut v = vec![0i64; n + 1];
                        v[i] = 2;
                        v[j] = -2;
                        out.insert(v);
                    }
                }
            }
        }
        // ±e_i and ±e_i ± e_j
        SimpleType::B => {
            insert_single_axis(&mut out, n, 2);
            insert_pair_sums(&mut out, n, 2);
        }
        // ±2e_i and ±e_i ± e_j
        SimpleType::C => {
            insert_single_axis(&mut out, n, 4);
            insert_pair_sums(&mut out, n, 2);
        }
        // ±e_i ± e_j only
        SimpleType::D => {
            insert_pair_sums(&mut out, n, 2);
        }
        // E8: ±e_i ± e_j together with half-sum vectors having an even
        // number of minus signs; E7 and E6 are cut out of E8 by hyperplanes.
        SimpleType::E => {
            let mut e8: BTreeSet<Vec<i64>> = BTreeSet::new();
            insert_pair_sums(&mut e8, 8, 2);
            for mask in 0u32..256 {
                if mask.count_ones() % 2 != 0 {
                    continue;
                }
                let v: Vec<i64> = (0..8)
                    .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                    .collect();
                e8.insert(v);
            }
            out = match n {
                8 => e8,
                // orthogonal to e7 + e8
                7 => e8.into_iter().filter(|v| v[6] + v[7] == 0).collect(),
                // additionally orthogonal to e6 - e7
                6 => e8
                    .into_iter()
                    .filter(|v| v[6] + v[7] == 0 && v[5] == v[6])
                    .collect(),
                _ => panic!("no E{n}"),
            };
        }
        // ±e_i, ±e_i ± e_j, and (±e1 ± e2 ± e3 ± e4)/2
        SimpleType::F => {
            assert_eq!(n, 4);
            insert_single_axis(&mut out, 4, 2);
            insert_pair_sums(&mut out, 4, 2);
            for mask in 0u32..16 {
                let v: Vec<i64> = (0..4)
                    .map(|k| if mask & (1 << k) != 0 { -1 } else { 1 })
                    .collect();
                out.insert(v);
            }
        }
        // in the plane x + y + z = 0: the six e_i - e_j and the six
        // ±(2e_i - e_j - e_k)
        SimpleType::G => {
            assert_eq!(n, 2);
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut v = vec![0i64; 3];
                        v[i] = 1;
                        v[j] = -1;
                        out.insert(v);
                    }
                }
            }
            for i in 0..3 {
                for s in [1i64, -1] {
                    let mut v = vec![-s; 3];
                    v[i] = 2 * s;
                    out.insert(v);
                }
            }
        }
    }
    out
}

fn insert_single_axis(out: &mut BTreeSet<Vec<i64>>, n: usize, scale: i64) {
    for i in 0..n {
        for s in [scale, -scale] {
            let mut v = vec![0i64; n];
            v[i] = s;
            out.insert(v);
        }
    }
}

fn insert_pair_sums(out: &mut BTreeSet<Vec<i64>>, n: usize, scale: i64) {
    for i in 0..n {
        for j in (i + 1)..n {
            for si in [scale, -scale] {
                for sj in [scale, -scale] {
                    let mut v = vec![0i64; n];
                    v[i] = si;
                    v[j] = sj;
                    out.insert(v);
                }
            }
        }
    }
}

/// Total number of roots from the coordinate model. Positive roots are half
/// of these (the models are symmetric under negation by construction).
pub fn euclidean_root_count(ty: SimpleType, n: usize) -> usize {
    let roots = euclidean_roots(ty, n);
    for v in &roots {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        assert!(roots.contains(&neg), "coordinate model not symmetric");
    }
    roots.len()
}

// ---------------------------------------------------------------------------
// Integer matrices: determinantal divisors, exhaustive torsion
// ---------------------------------------------------------------------------

/// Determinant by cofactor expansion along the first row. Exponential and
/// proud of it — this is the oracle, not the algorithm.
pub fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0i128;
    for (j, &top) in m[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * top * cofactor_det(&minor);
    }
    det
}

fn small_entries(m: &IntMat) -> Vec<Vec<i128>> {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| i128::try_from(m.at(i, j)).expect("oracle needs small entries"))
                .collect()
        })
        .collect()
}

fn index_combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pick = (0..k).collect::<Vec<usize>>();
    if k > n {
        return out;
    }
    loop {
        out.push(pick.clone());
        // advance the rightmost index that can still move
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pick[i] + 1 <= n - (k - i) {
                pick[i] += 1;
                for j in (i + 1)..k {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k x k` minors and the `k`-th factor is `d_k / d_{k-1}`. Completely
/// independent of any elimination strategy.
pub fn minor_invariant_factors(m: &IntMat) -> Vec<i128> {
    let a = small_entries(m);
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut factors = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        'outer: for rsel in index_combinations(rows, k) {
            for csel in index_combinations(cols, k) {
                let sub: Vec<Vec<i128>> = rsel
                    .iter()
                    .map(|&i| csel.iter().map(|&j| a[i][j]).collect())
                    .collect();
                g = g.gcd(&cofactor_det(&sub).abs());
                if g == 1 {
                    break 'outer;
                }
            }
        }
        if g == 0 {
            break;
        }
        factors.push(g / prev);
        prev = g;
    }
    factors
}

/// Counts the solutions of `m x = 0 (mod 1)` among the `modulus^cols`
/// vectors whose entries all have denominator dividing `modulus`, by trying
/// every single one.
pub fn brute_torsion_count(m: &IntMat, modulus: i128) -> i128 {
    let a = small_entries(m);
    let cols = m.ncols();
    let mut k = vec![0i128; cols];
    let mut count = 0i128;
    loop {
        let ok = a.iter().all(|row| {
            let s: i128 = row.iter().zip(&k).map(|(c, x)| c * x).sum();
            s.rem_euclid(modulus) == 0
        });
        if ok {
            count += 1;
        }
        // mixed-radix increment
        let mut pos = 0;
        loop {
            if pos == cols {
                return count;
            }
            k[pos] += 1;
            if k[pos] < modulus {
                break;
            }
            k[pos] = 0;
            pos += 1;
        }
    }
}

/// Order of the finite group generated by the given elements under
/// exponent-wise addition mod 1, found by closure enumeration.
pub fn generated_group_order(gens: &[TorusElement]) -> usize {
    if gens.is_empty() {
        return 1;
    }
    let rank = gens[0].ambient_rank();
    let key = |e: &TorusElement| e.exponents().to_vec();
    let mut seen: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let mut frontier = vec![TorusElement::identity(rank)];
    seen.insert(key(&frontier[0]));
    while let Some(e) = frontier.pop() {
        for g in gens {
            let next = e.mul(g);
            if seen.insert(key(&next)) {
                frontier.push(next);
            }
        }
    }
    seen.len()
}

/// Exhaustive membership test: is `e` a sum of rational multiples of the
/// basis vectors mod 1? Because the basis spans a saturated lattice and `e`
/// has finite order L, it suffices to try every coefficient in (1/L)Z/Z.
pub fn brute_in_span_mod_one(basis: &[Vec<BigInt>], e: &TorusElement) -> bool {
    let l = i128::try_from(e.order()).expect("oracle needs small order");
    let k = basis.len();
    let n = e.ambient_rank();
    let want: Vec<BigRational> = e.exponents().to_vec();
    let big_l = BigInt::from(l);
    let mut lam = vec![0i128; k];
    loop {
        let matches = (0..n).all(|j| {
            let mut s = BigInt::from(0);
            for (i, b) in basis.iter().enumerate() {
                s += &b[j] * BigInt::from(lam[i]);
            }
            let frac = BigRational::new(s.mod_floor(&big_l), big_l.clone());
            frac == want[j]
        });
        if matches {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return false;
            }
            lam[pos] += 1;
            if lam[pos] < l {
                break;
            }
            lam[pos] = 0;
            pos += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Diagram symmetries by exhaustive search
// ---------------------------------------------------------------------------

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (1..=n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Number of vertex permutations preserving every Cartan pairing, found by
/// testing all `rank!` of them.
pub fn brute_automorphism_count(datum: &CartanDatum) -> usize {
    let n = datum.rank();
    all_permutations(n)
        .into_iter()
        .filter(|img| {
            (1..=n).all(|i| {
                (1..=n).all(|j| datum.pairing(img[i - 1], img[j - 1]) == datum.pairing(i, j))
            })
        })
        .count()
}

/// Order of the permutation group generated by the given elements, found by
/// closure under composition.
pub fn perm_group_order(gens: &[Permutation]) -> usize {
    if gens.is_empty() {
        return 1;
    }
    let n = gens[0].degree();
    let key = |p: &Permutation| (1..=n).map(|v| p.apply(v)).collect::<Vec<usize>>();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(n)];
    seen.insert(key(&frontier[0]));
    while let Some(p) = frontier.pop() {
        for g in gens {
            let next = g.compose(&p);
            if seen.insert(key(&next)) {
                frontier.push(next);
            }
        }
    }
    seen.len()
}

// ---------------------------------------------------------------------------
// Golden corpus for the classifier
// ---------------------------------------------------------------------------

pub struct GoldenCase {
    pub index: &'static str,
    pub isogeny: &'static str,
    pub field: &'static str,
    pub class: &'static str,
    /// Exact list of rule ids expected to fire, in table order.
    pub rules: &'static [&'static str],
    /// Expected largest anisotropic-kernel component rank.
    pub m: usize,
}

macro_rules! gc {
    ($ix:expr, $iso:expr, $field:expr, $class:expr, [$($r:expr),*], $m:expr) => {
        GoldenCase {
            index: $ix,
            isogeny: $iso,
            field: $field,
            class: $class,
            rules: &[$($r),*],
            m: $m,
        }
    };
}

/// Hand-checked verdicts: each entry pins the full rule-id set, the verdict
/// class, and the kernel invariant m for one (index, isogeny, field) triple.
pub fn golden_corpus() -> Vec<GoldenCase> {
    vec![
        // split and quasi-split groups
        gc!("^1A1:[1]", "sc", "general", "rational", ["R1", "R2", "R5"], 0),
        gc!("^1A5:[1,2,3,4,5]", "adjoint", "padic", "rational", ["R1", "R3", "R8", "R9"], 0),
        gc!("^1G2:[1,2]", "sc", "general", "rational", ["R1", "R2", "R6"], 0),
        gc!("^2A3:[1,2,3]", "sc", "general", "rational", ["R1", "R2"], 0),
        // small anisotropic kernel over a general field
        gc!("^1B3:[1]", "sc", "general", "stably_rational", ["R2", "R5"], 2),
        gc!("^1C4(2):[2,4]", "sc", "general", "stably_rational", ["R2", "R5"], 1),
        gc!("^1A8(3):[3,6]", "sc", "general", "stably_rational", ["R2", "R5"], 2),
        gc!("^1A8(3):[3,6]", "adjoint", "general", "rational", ["R2", "R3", "R5"], 2),
        gc!("^2A8(3):[3,6]", "sc", "general", "stably_rational", ["R2"], 2),
        gc!("^2A4:[1,4]", "sc", "general", "rational", ["R2", "R4"], 2),
        gc!("^2A4:[1,4]", "other", "general", "stably_rational", ["R2"], 2),
        // beyond the easy window
        gc!("^1C6(2):[2]", "sc", "general", "unknown", [], 4),
        gc!("^2A5:[1,5]", "sc", "general", "unknown", [], 3),
        gc!("^1A9(5):[5]", "sc", "general", "unknown", [], 4),
        // exceptional isotropic indices
        gc!("^3D4:[2]:(1 3 4)", "sc", "general", "rational", ["R2", "R6"], 1),
        gc!("^6D4:[1,3,4]:(1 3 4)", "sc", "general", "rational", ["R2", "R6"], 1),
        gc!("^1F4:[1]", "sc", "padic", "rational", ["R6", "R9"], 3),
        gc!("^1E6:[2,4]", "sc", "padic", "stably_rational", ["R7", "R9"], 2),
        gc!("^2E6:[2,4]", "sc", "general", "stably_rational", ["R2"], 2),
        gc!("^2E6:[2,4]", "adjoint", "general", "stably_rational", ["R2", "R7"], 2),
        gc!("^2E6:[1,2,6]", "sc", "general", "stably_rational", ["R7"], 3),
        gc!("^2E6:[1,2,6]", "adjoint", "general", "stably_rational", ["R7"], 3),
        gc!("^1E7:[1]", "sc", "general", "rational", ["R7"], 6),
        gc!("^1E7:[1]", "adjoint", "general", "unknown", [], 6),
        gc!("^1E7:[1,6]", "sc", "general", "stably_rational", ["R7"], 4),
        gc!("^1E7:[1,6]", "adjoint", "general", "unknown", [], 4),
        gc!("^1E7:[7]", "sc", "general", "unknown", [], 6),
        // p-adic ground field
        gc!("^1D6(2):[2,4]", "sc", "padic", "stably_rational", ["R9"], 1),
        gc!("^1D7(2):[2,4]", "sc", "padic", "unknown", [], 3),
        gc!("^2D6(2):[2,4]", "sc", "padic", "stably_rational", ["R9"], 1),
        gc!("^2D8(2):[2,4,6]", "sc", "padic", "unknown", [], 1),
        gc!("^2D8(2):[2,4,6]", "adjoint", "padic", "rational", ["R8", "R9"], 1),
        // real ground field
        gc!("^1E8:[8]", "sc", "real", "stably_rational", ["R10"], 7),
        gc!("^2A3:[2]", "sc", "real", "stably_rational", ["R10"], 1),
        gc!("^1A7(4):[4]", "sc", "real", "not_stably_rational", ["R11"], 3),
        // the negative family
        gc!("^1A7(4):[4]", "sc", "general", "not_stably_rational", ["R11"], 3),
        gc!("^1A15(8):[8]", "sc", "general", "not_stably_rational", ["R11"], 7),
    ]
}

// ---------------------------------------------------------------------------
// Random valid indices
// ---------------------------------------------------------------------------

/// Draws a valid index by sampling the raw grammar and keeping whatever the
/// validator accepts; the sampler is biased toward acceptance but relies on
/// the parser as the final arbiter.
pub fn random_valid_index<R: Rng>(rng: &mut R) -> TitsIndex {
    loop {
        if let Ok(ix) = parse_index(&random_candidate(rng)) {
            return ix;
        }
    }
}

fn random_candidate<R: Rng>(rng: &mut R) -> String {
    let ty = *['A', 'B', 'C', 'D', 'E', 'F', 'G']
        .get(rng.gen_range(0..7))
        .unwrap();
    let rank: usize = match ty {
        'A' => rng.gen_range(1..=8),
        'B' | 'C' => rng.gen_range(2..=8),
        'D' => rng.gen_range(4..=8),
        'E' => rng.gen_range(6..=8),
        'F' => 4,
        _ => 2,
    };
    let g: usize = match (ty, rank) {
        ('A', r) if r >= 2 => [1, 1, 2][rng.gen_range(0..3)],
        ('D', 4) => [1, 1, 2, 3, 6][rng.gen_range(0..5)],
        ('D', _) => [1, 1, 2][rng.gen_range(0..3)],
        ('E', 6) => [1, 1, 2][rng.gen_range(0..3)],
        _ => 1,
    };
    let orbits: Vec<Vec<usize>> = match (ty, g) {
        (_, 1) => (1..=rank).map(|v| vec![v]).collect(),
        ('A', 2) => {
            let mut o = Vec::new();
            for i in 1..=(rank + 1) / 2 {
                if i == rank + 1 - i {
                    o.push(vec![i]);
                } else {
                    o.push(vec![i, rank + 1 - i]);
                }
            }
            o
        }
        ('D', 2) => {
            let mut o: Vec<Vec<usize>> = (1..=rank - 2).map(|v| vec![v]).collect();
            o.push(vec![rank - 1, rank]);
            o
        }
        ('E', 2) => vec![vec![1, 6], vec![3, 5], vec![2], vec![4]],
        ('D', _) => vec![vec![1, 3, 4], vec![2]],
        _ => unreachable!(),
    };
    let random_orbit_union = |rng: &mut R| -> Vec<usize> {
        let mut vs: Vec<usize> = orbits
            .iter()
            .filter(|_| rng.gen_bool(0.45))
            .flatten()
            .copied()
            .collect();
        vs.sort_unstable();
        vs
    };

    let mut degree = String::new();
    let dist: Vec<usize>;
    if ty == 'A' && g == 1 && rng.gen_bool(0.5) {
        // declared degree: distinguished set is forced to the multiples
        let divisors: Vec<usize> = (1..=rank + 1).filter(|d| (rank + 1) % d == 0).collect();
        let d = divisors[rng.gen_range(0..divisors.len())];
        if d >= 2 {
            degree = format!("({d})");
        }
        dist = (1..=rank).filter(|v| v % d == 0).collect();
    } else if ty == 'A' && g == 2 && rng.gen_bool(0.4) {
        let half = (rank + 1) / 2;
        let divisors: Vec<usize> = (1..=half).filter(|d| (rank + 1) % d == 0).collect();
        if divisors.is_empty() {
            dist = random_orbit_union(rng);
        } else {
            let d = divisors[rng.gen_range(0..divisors.len())];
            let r = rng.gen_range(1..=half / d);
            degree = format!("({d})");
            let mut vs = Vec::new();
            for i in 1..=r {
                vs.push(i * d);
                if rank + 1 - i * d != i * d {
                    vs.push(rank + 1 - i * d);
                }
            }
            vs.sort_unstable();
            dist = vs;
        }
    } else if (ty == 'C' || ty == 'D') && g <= 2 && rng.gen_bool(0.4) {
        degree = format!("({})", rng.gen_range(1..=2));
        dist = random_orbit_union(rng);
    } else {
        dist = random_orbit_union(rng);
    }

    let action = if g >= 3 { ":(1 3 4)" } else { "" };
    let verts = dist
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("^{g}{ty}{rank}{degree}:[{verts}]{action}")
}

// ---------------------------------------------------------------------------
// Round-trip corpus for the grammar
// ---------------------------------------------------------------------------

/// Pairs of (input, canonical form). Most inputs are already canonical; a
/// few exercise normalisation (vertex order, suppressed degree 1 on type A,
/// the rotation picked as the stored triality generator).
pub const ROUND_TRIP: &[(&str, &str)] = &[
    ("^1A1:[1]", "^1A1:[1]"),
    ("^1A1:[]", "^1A1(2):[]"),
    ("^1A5(1):[1,2,3,4,5]", "^1A5:[1,2,3,4,5]"),
    ("^1A5(6):[]", "^1A5(6):[]"),
    ("^1A5(3):[3]", "^1A5(3):[3]"),
    ("^1A5(2):[2,4]", "^1A5(2):[2,4]"),
    ("^1A7(4):[4]", "^1A7(4):[4]"),
    ("^1A7(2):[2,4,6]", "^1A7(2):[2,4,6]"),
    ("^1A15(8):[8]", "^1A15(8):[8]"),
    ("^1A9(5):[5]", "^1A9(5):[5]"),
    ("^1A6:[2,5]", "^1A6:[2,5]"),
    ("^2A2:[1,2]", "^2A2:[1,2]"),
    ("^2A3:[2]", "^2A3(2):[2]"),
    ("^2A3:[3,2,1]", "^2A3:[1,2,3]"),
    ("^2A4:[1,4]", "^2A4:[1,4]"),
    ("^2A5:[1,5]", "^2A5:[1,5]"),
    ("^2A5:[1,3,5]", "^2A5:[1,3,5]"),
    ("^2A8(3):[3,6]", "^2A8(3):[3,6]"),
    ("^2A9(2):[2,8]", "^2A9(2):[2,8]"),
    ("^1B2:[1]", "^1B2:[1]"),
    ("^1B3:[1]", "^1B3:[1]"),
    ("^1B4:[]", "^1B4:[]"),
    ("^1B8:[1,2,3,4,5,6,7,8]", "^1B8:[1,2,3,4,5,6,7,8]"),
    ("^1C2:[1]", "^1C2:[1]"),
    ("^1C3:[1,2,3]", "^1C3:[1,2,3]"),
    ("^1C4(1):[2]", "^1C4(1):[2]"),
    ("^1C4(2):[2,4]", "^1C4(2):[2,4]"),
    ("^1C6(2):[2]", "^1C6(2):[2]"),
    ("^1D4:[]", "^1D4:[]"),
    ("^1D4:[2]", "^1D4:[2]"),
    ("^1D5(2):[1]", "^1D5(2):[1]"),
    ("^1D6(2):[2,4]", "^1D6(2):[2,4]"),
    ("^1D7(2):[2,4]", "^1D7(2):[2,4]"),
    ("^1D8:[2,4,6,8]", "^1D8:[2,4,6,8]"),
    ("^2D4:[1]", "^2D4:[1]"),
    ("^2D5:[1,2]", "^2D5:[1,2]"),
    ("^2D6(2):[2,4]", "^2D6(2):[2,4]"),
    ("^2D8(2):[2,4,6]", "^2D8(2):[2,4,6]"),
    ("^3D4:[2]:(1 3 4)", "^3D4:[2]:(1 3 4)"),
    ("^3D4:[]:(1 4 3)", "^3D4:[]:(1 3 4)"),
    ("^6D4:[1,3,4]:(1 3 4)", "^6D4:[1,3,4]:(1 3 4)"),
    ("^1E6:[]", "^1E6:[]"),
    ("^1E6:[2,4]", "^1E6:[2,4]"),
    ("^2E6:[2,4]", "^2E6:[2,4]"),
    ("^2E6:[1,2,6]", "^2E6:[1,2,6]"),
    ("^2E6:[1,6]", "^2E6:[1,6]"),
    ("^1E7:[1]", "^1E7:[1]"),
    ("^1E7:[1,6]", "^1E7:[1,6]"),
    ("^1E7:[7]", "^1E7:[7]"),
    ("^1E8:[8]", "^1E8:[8]"),
    ("^1E8:[]", "^1E8:[]"),
    ("^1F4:[1]", "^1F4:[1]"),
    ("^1F4:[1,2,3,4]", "^1F4:[1,2,3,4]"),
    ("^1G2:[1,2]", "^1G2:[1,2]"),
    ("^1G2:[]", "^1G2:[]"),
];
