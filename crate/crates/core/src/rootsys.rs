//! Dynkin diagrams, Cartan matrices, and positive roots.
//!
//! Vertices are numbered `1..=rank` in Bourbaki order throughout the crate:
//!
//! * `A_n` — the chain `1 - 2 - ... - n`.
//! * `B_n` / `C_n` — the same chain with a double edge between `n-1` and `n`;
//!   in `B_n` vertex `n` is the short root, in `C_n` it is the long one.
//! * `D_n` — the chain `1 - ... - (n-2)` with both `n-1` and `n` attached to
//!   `n-2`.
//! * `E_n` — the chain `1 - 3 - 4 - 5 - 6 (- 7 (- 8))` with `2` attached
//!   to `4`.
//! * `F_4` — `1 - 2 = 3 - 4` with `1, 2` long.
//! * `G_2` — `1 ≡ 2` with `1` short.
//!
//! Everything downstream (indices, centralizers, the classifier) speaks in
//! these labels, so the tables here are the single place where the numbering
//! convention lives.

use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// The seven families of connected Dynkin diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn letter(self) -> char {
        match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'A' => SimpleType::A,
            'B' => SimpleType::B,
            'C' => SimpleType::C,
            'D' => SimpleType::D,
            'E' => SimpleType::E,
            'F' => SimpleType::F,
            'G' => SimpleType::G,
            _ => return None,
        })
    }

    /// Ranks for which the type names a connected diagram. `D_3` is accepted
    /// by [`cartan_datum`] as a synonym for `A_3` and is not listed here.
    pub fn rank_valid(self, rank: usize) -> bool {
        match self {
            SimpleType::A => rank >= 1,
            SimpleType::B | SimpleType::C => rank >= 2,
            SimpleType::D => rank >= 4,
            SimpleType::E => (6..=8).contains(&rank),
            SimpleType::F => rank == 4,
            SimpleType::G => rank == 2,
        }
    }

    const ALL: [SimpleType; 7] = [
        SimpleType::A,
        SimpleType::B,
        SimpleType::C,
        SimpleType::D,
        SimpleType::E,
        SimpleType::F,
        SimpleType::G,
    ];
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A connected diagram together with its Cartan matrix.
///
/// `cartan[i][j]` (0-based storage) is the pairing of the root `alpha_{j+1}`
/// with the coroot of `alpha_{i+1}`, so row `i` records how every simple root
/// evaluates on the `i`-th coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    base_type: SimpleType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

/// Builds the datum for a simple type, normalising `D_3` to `A_3` (the two
/// name the same diagram, and the `D`-shape turns up naturally when vertices
/// are removed from a larger `D_n`).
pub fn cartan_datum(ty: SimpleType, rank: usize) -> Result<CartanDatum> {
    if ty == SimpleType::D && rank == 3 {
        return cartan_datum(SimpleType::A, 3);
    }
    if !ty.rank_valid(rank) {
        return Err(Error::InvalidRank { ty, rank });
    }
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let simple_edge = |c: &mut Vec<Vec<i64>>, a: usize, b: usize| {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    match ty {
        SimpleType::A => {
            for v in 1..n {
                simple_edge(&mut c, v, v + 1);
            }
        }
        SimpleType::B => {
            for v in 1..n - 1 {
                simple_edge(&mut c, v, v + 1);
            }
            // vertex n is short: its coroot row carries the -2
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
        }
        SimpleType::C => {
            for v in 1..n - 1 {
                simple_edge(&mut c, v, v + 1);
            }
            // vertex n is long
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        SimpleType::D => {
            for v in 1..n - 2 {
                simple_edge(&mut c, v, v + 1);
            }
            simple_edge(&mut c, n - 2, n - 1);
            simple_edge(&mut c, n - 2, n);
        }
        SimpleType::E => {
            simple_edge(&mut c, 1, 3);
            simple_edge(&mut c, 2, 4);
            for v in 3..n {
                simple_edge(&mut c, v, v + 1);
            }
        }
        SimpleType::F => {
            simple_edge(&mut c, 1, 2);
            simple_edge(&mut c, 3, 4);
            // 2 long, 3 short
            c[1][2] = -1;
            c[2][1] = -2;
        }
        SimpleType::G => {
            // 1 short, 2 long
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    Ok(CartanDatum {
        base_type: ty,
        rank,
        cartan: c,
    })
}

impl CartanDatum {
    pub fn base_type(&self) -> SimpleType {
        self.base_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Raw Cartan matrix, 0-based.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Pairing of `alpha_j` with the coroot of `alpha_i` (vertices 1-based).
    pub fn pairing(&self, j: usize, i: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.cartan[a - 1][b - 1] != 0
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }
}

/// A root written in simple-root coordinates: `coeffs[i]` multiplies
/// `alpha_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootVector {
    pub coeffs: Vec<i64>,
}

impl RootVector {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// All positive roots of the datum, derived from the Cartan matrix alone by
/// closing the simple roots under root strings.
///
/// For a root `beta` and simple root `alpha_i`, the string
/// `beta - p*alpha_i, ..., beta + q*alpha_i` satisfies
/// `q - p = -<beta, alpha_i^vee>`; `p` is read off by walking down through
/// roots already found (all of smaller height), and `beta + alpha_i` is a
/// root exactly when `q > 0`. The result is sorted by height, then
/// lexicographically by coefficients.
pub fn positive_roots(datum: &CartanDatum) -> Vec<RootVector> {
    let n = datum.rank;
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        known.insert(v.clone());
        layer.push(v);
    }
    while !layer.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // beta == alpha_i has no string upward through 2*alpha_i
                if beta.iter().sum::<i64>() == 1 && beta[i] == 1 {
                    continue;
                }
                let pairing: i64 = (0..n).map(|j| datum.cartan[i][j] * beta[j]).sum();
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        known.extend(layer.iter().cloned());
    }
    let mut out: Vec<RootVector> = known.into_iter().map(|coeffs| RootVector { coeffs }).collect();
    out.sort_by_key(|r| (r.height(), r.coeffs.clone()));
    out
}

/// A permutation of the vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>, // image[i] = image of vertex i+1
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::BadPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation of `1..=n` from disjoint cycles; vertices not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange(v));
                }
                if touched[v - 1] {
                    return Err(Error::BadPermutation);
                }
                touched[v - 1] = true;
                let w = cycle[(k + 1) % cycle.len()];
                image[v - 1] = w;
            }
        }
        Permutation::from_images(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self.compose(other)` applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let image = (1..=self.degree()).map(|v| self.apply(other.apply(v))).collect();
        Permutation { image }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    /// Nontrivial cycles, each starting at its least element, sorted by that
    /// element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut v = self.apply(start);
            while v != start {
                seen[v - 1] = true;
                cycle.push(v);
                v = self.apply(v);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Does the permutation preserve the Cartan matrix (equivalently, the
    /// decorated diagram)?
    pub fn preserves_cartan(&self, datum: &CartanDatum) -> bool {
        if self.degree() != datum.rank() {
            return false;
        }
        for i in 1..=datum.rank() {
            for j in 1..=datum.rank() {
                if datum.pairing(j, i) != datum.pairing(self.apply(j), self.apply(i)) {
                    return false;
                }
            }
        }
        true
    }

    /// Orbits of the group generated by `gens` on `1..=n`, each sorted,
    /// ordered by least element.
    pub fn orbits(gens: &[Permutation], n: usize) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                parent[x] = find(parent, parent[x]);
            }
            parent[x]
        }
        for g in gens {
            for v in 1..=n {
                let a = find(&mut parent, v - 1);
                let b = find(&mut parent, g.apply(v) - 1);
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 1..=n {
            let r = find(&mut parent, v - 1);
            buckets[r].push(v);
        }
        let mut out: Vec<Vec<usize>> = buckets.into_iter().filter(|b| !b.is_empty()).collect();
        out.sort_by_key(|b| b[0]);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Canonical generators of the symmetry group of the diagram:
///
/// * `A_n` (n ≥ 2): the flip `i -> n+1-i`;
/// * `D_4`: the transposition `(3 4)` and the rotation `(1 3 4)`, generating
///   the full symmetric group on the three outer vertices;
/// * `D_n` (n ≥ 5): the fork swap `(n-1 n)`;
/// * `E_6`: `(1 6)(3 5)`;
/// * everything else: only the identity.
pub fn diagram_automorphisms(datum: &CartanDatum) -> Vec<Permutation> {
    let n = datum.rank();
    match (datum.base_type(), n) {
        (SimpleType::A, _) if n >= 2 => {
            let flip = Permutation::from_images((1..=n).map(|i| n + 1 - i).collect()).unwrap();
            vec![flip]
        }
        (SimpleType::D, 4) => vec![
            Permutation::from_cycles(4, &[vec![3, 4]]).unwrap(),
            Permutation::from_cycles(4, &[vec![1, 3, 4]]).unwrap(),
        ],
        (SimpleType::D, _) if n >= 5 => {
            vec![Permutation::from_cycles(n, &[vec![n - 1, n]]).unwrap()]
        }
        (SimpleType::E, 6) => vec![Permutation::from_cycles(6, &[vec![1, 6], vec![3, 5]]).unwrap()],
        _ => vec![Permutation::identity(n)],
    }
}

/// A connected component of an induced subdiagram, identified as a simple
/// type with a relabelling onto Bourbaki numbering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramComponent {
    pub base_type: SimpleType,
    pub rank: usize,
    /// Original vertex labels, ascending.
    pub vertices: Vec<usize>,
    /// `to_bourbaki[k]` is the original vertex playing Bourbaki role `k+1`.
    #[serde(skip)]
    pub to_bourbaki: Vec<usize>,
}

impl DiagramComponent {
    /// Bourbaki label of an original vertex, if it lies in this component.
    pub fn bourbaki_label(&self, original: usize) -> Option<usize> {
        self.to_bourbaki.iter().position(|&v| v == original).map(|p| p + 1)
    }
}

/// Splits the induced subdiagram on `subset` into connected components and
/// identifies each one.
pub fn components(datum: &CartanDatum, subset: &BTreeSet<usize>) -> Result<Vec<DiagramComponent>> {
    components_with_constraint(datum, subset, &|_| true)
}

/// Like [`components`], but only accepts relabellings passing `constraint`
/// (used when a symmetry of the ambient diagram must land on a canonical
/// symmetry of the component).
pub fn components_with_constraint(
    datum: &CartanDatum,
    subset: &BTreeSet<usize>,
    constraint: &dyn Fn(&DiagramComponent) -> bool,
) -> Result<Vec<DiagramComponent>> {
    for &v in subset {
        if v == 0 || v > datum.rank() {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let mut remaining: BTreeSet<usize> = subset.clone();
    let mut out = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        // flood fill one component
        let mut comp = vec![start];
        remaining.remove(&start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let adjacent: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&w| datum.adjacent(v, w))
                .collect();
            for w in adjacent {
                remaining.remove(&w);
                comp.push(w);
                queue.push(w);
            }
        }
        comp.sort_unstable();
        out.push(identify_component(datum, &comp, constraint)?);
    }
    Ok(out)
}

/// Matches one connected component against the catalogue of simple diagrams
/// of its rank, returning the first hit in type order A..G with the
/// lexicographically least relabelling. Rank-2 double-edge components match
/// `B_2` (the abstract diagram does not distinguish `B_2` from `C_2`), and
/// three-vertex forks match `A_3`.
fn identify_component(
    datum: &CartanDatum,
    comp: &[usize],
    constraint: &dyn Fn(&DiagramComponent) -> bool,
) -> Result<DiagramComponent> {
    let k = comp.len();
    for ty in SimpleType::ALL {
        if !ty.rank_valid(k) {
            continue;
        }
        let target = cartan_datum(ty, k)?;
        let mut assignment: Vec<usize> = Vec::with_capacity(k);
        if search_relabelling(datum, comp, &target, &mut assignment, constraint) {
            return Ok(DiagramComponent {
                base_type: ty,
                rank: k,
                vertices: comp.to_vec(),
                to_bourbaki: assignment,
            });
        }
    }
    Err(Error::Internal(format!(
        "component {comp:?} does not match any simple diagram"
    )))
}

fn search_relabelling(
    datum: &CartanDatum,
    comp: &[usize],
    target: &CartanDatum,
    assignment: &mut Vec<usize>,
    constraint: &dyn Fn(&DiagramComponent) -> bool,
) -> bool {
    let k = comp.len();
    if assignment.len() == k {
        let candidate = DiagramComponent {
            base_type: target.base_type(),
            rank: k,
            vertices: comp.to_vec(),
            to_bourbaki: assignment.clone(),
        };
        return constraint(&candidate);
    }
    let pos = assignment.len() + 1; // Bourbaki label being assigned
    for &orig in comp {
        if assignment.contains(&orig) {
            continue;
        }
        let ok = assignment.iter().enumerate().all(|(q0, &prev)| {
            let q = q0 + 1;
            datum.pairing(orig, prev) == target.pairing(pos, q)
                && datum.pairing(prev, orig) == target.pairing(q, pos)
        });
        if ok {
            assignment.push(orig);
            if search_relabelling(datum, comp, target, assignment, constraint) {
                return true;
            }
            assignment.pop();
        }
    }
    false
}

/// Closed-form count of positive roots, used as a cross-check on the
/// string-closure enumeration.
pub fn positive_root_count(ty: SimpleType, rank: usize) -> usize {
    let n = rank;
    match ty {
        SimpleType::A => n * (n + 1) / 2,
        SimpleType::B | SimpleType::C => n * n,
        SimpleType::D => n * (n - 1),
        SimpleType::E => match n {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
        SimpleType::F => 24,
        SimpleType::G => 6,
    }
}
