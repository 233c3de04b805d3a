//! The index of an almost simple group: diagram, twisting action,
//! distinguished orbits, and an optional division-algebra degree.
//!
//! # Text grammar
//!
//! ```text
//! INDEX   := '^' ORDER TYPE RANK DEGREE? ':' VERTICES ACTION?
//! ORDER   := '1' | '2' | '3' | '6'          (order of the twisting image)
//! TYPE    := 'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G'
//! RANK    := decimal
//! DEGREE  := '(' decimal ')'
//! VERTICES:= '[' (decimal (',' decimal)*)? ']'
//! ACTION  := ':' ( '(' decimal (' ' decimal)* ')' )+
//! ```
//!
//! Examples: `^1A8(3):[3,6]`, `^2E6:[2,4]`, `^3D4:[2]:(1 3 4)`. Whitespace
//! is allowed only between the numbers of an action cycle.
//!
//! # Conventions baked into validation
//!
//! * Order 2 actions are always the canonical diagram flip for the chosen
//!   labels: `v -> n+1-v` on `A_n`, the swap of the fork tips `(n-1 n)` on
//!   `D_n`, and `(1 6)(3 5)` on `E_6`. An explicit action may be supplied
//!   but must equal that flip; relabelled variants are rejected rather than
//!   silently renamed.
//! * Orders 3 and 6 occur only on `D_4`. The stored generator is an order-3
//!   rotation, normalised to `(1 3 4)`; for order 6 the full image group is
//!   generated by that rotation together with the flip `(3 4)`.
//! * The distinguished set must be a union of orbits of the image group.
//! * A declared degree is checked per type: on inner `A_n` it must divide
//!   `n+1` and force the circling pattern `d, 2d, ...`; on outer `A_n` it
//!   must divide `n+1` and match the low half of the pattern; on `C`/`D` it
//!   must be 1 or 2 (and is never inferred); on `B`, `E`, `F`, `G` (and on
//!   trialitarian `D_4`) declaring a degree is an error.

use crate::rootsys::{
    cartan_datum, components, positive_root_count, CartanDatum, DiagramComponent, Permutation,
    SimpleType,
};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Which group in the central isogeny class is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsogenyTag {
    SimplyConnected,
    Adjoint,
    Other,
}

impl IsogenyTag {
    pub fn label(self) -> &'static str {
        match self {
            IsogenyTag::SimplyConnected => "simply-connected",
            IsogenyTag::Adjoint => "adjoint",
            IsogenyTag::Other => "other",
        }
    }
}

impl fmt::Display for IsogenyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IsogenyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sc" | "simply-connected" | "simplyconnected" => Ok(IsogenyTag::SimplyConnected),
            "adjoint" | "adj" => Ok(IsogenyTag::Adjoint),
            "other" => Ok(IsogenyTag::Other),
            _ => Err(Error::Syntax {
                position: 0,
                expected: "one of sc, adjoint, other".into(),
                found: s.into(),
            }),
        }
    }
}

/// What is assumed about the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldContext {
    /// No assumption beyond perfection.
    General,
    /// Finite extension of a p-adic field.
    Padic,
    /// Real closed field.
    Real,
}

impl FieldContext {
    pub fn label(self) -> &'static str {
        match self {
            FieldContext::General => "general",
            FieldContext::Padic => "p-adic",
            FieldContext::Real => "real",
        }
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FieldContext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "general" => Ok(FieldContext::General),
            "padic" | "p-adic" => Ok(FieldContext::Padic),
            "real" => Ok(FieldContext::Real),
            _ => Err(Error::Syntax {
                position: 0,
                expected: "one of general, padic, real".into(),
                found: s.into(),
            }),
        }
    }
}

/// A single reason an index failed validation. A parse can report several.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { vertex: usize, rank: usize },
    ImageOrderInvalid { order: usize },
    ActionUnsupported { ty: SimpleType, rank: usize, order: usize },
    ActionNotAutomorphism { found: String },
    ActionOrderMismatch { expected: usize, actual: usize },
    ActionNotCanonical { expected: String, found: String },
    OrbitNotClosed { vertex: usize, image: usize },
    DegreeNotAllowed { ty: SimpleType },
    DegreeWithTriality,
    DegreeOutOfRange { degree: usize },
    DegreeDoesNotDivide { degree: usize, modulus: usize },
    DegreePatternMismatch { degree: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { vertex, rank } => {
                write!(f, "vertex {vertex} is outside 1..={rank}")
            }
            Violation::ImageOrderInvalid { order } => {
                write!(f, "twisting image order {order} is not one of 1, 2, 3, 6")
            }
            Violation::ActionUnsupported { ty, rank, order } => {
                write!(f, "{ty}{rank} has no twisting action of order {order}")
            }
            Violation::ActionNotAutomorphism { found } => {
                write!(f, "permutation {found} does not preserve the diagram")
            }
            Violation::ActionOrderMismatch { expected, actual } => {
                write!(
                    f,
                    "action generator has order {actual}, expected order {expected}"
                )
            }
            Violation::ActionNotCanonical { expected, found } => {
                write!(
                    f,
                    "action {found} is not the canonical flip {expected} for these labels"
                )
            }
            Violation::OrbitNotClosed { vertex, image } => {
                write!(
                    f,
                    "vertex {vertex} is distinguished but its image {image} is not"
                )
            }
            Violation::DegreeNotAllowed { ty } => {
                write!(f, "type {ty} does not carry a division-algebra degree")
            }
            Violation::DegreeWithTriality => {
                write!(f, "trialitarian D4 does not carry a division-algebra degree")
            }
            Violation::DegreeOutOfRange { degree } => {
                write!(f, "degree {degree} is out of range for this type")
            }
            Violation::DegreeDoesNotDivide { degree, modulus } => {
                write!(f, "degree {degree} does not divide {modulus}")
            }
            Violation::DegreePatternMismatch { degree } => {
                write!(
                    f,
                    "distinguished vertices do not match the multiples-of-{degree} pattern"
                )
            }
        }
    }
}

/// The canonical order-2 diagram symmetry for the given labels, if the type
/// has one.
pub fn canonical_flip(datum: &CartanDatum) -> Option<Permutation> {
    let n = datum.rank();
    match (datum.base_type(), n) {
        (SimpleType::A, n) if n >= 2 => {
            Some(Permutation::from_images((1..=n).rev().collect()).unwrap())
        }
        (SimpleType::D, n) => Some(Permutation::from_cycles(n, &[vec![n - 1, n]]).unwrap()),
        (SimpleType::E, 6) => {
            Some(Permutation::from_cycles(6, &[vec![1, 6], vec![3, 5]]).unwrap())
        }
        _ => None,
    }
}

fn d4_rotation() -> Permutation {
    Permutation::from_cycles(4, &[vec![1, 3, 4]]).unwrap()
}

/// A validated index: diagram, twisting action, distinguished orbits, and
/// (where meaningful) a division-algebra degree.
///
/// Construction normalises the presentation — the stored action generator is
/// canonical for its order, and for type `A` an inferable degree is filled
/// in — so equal indices compare equal and print identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TitsIndex {
    datum: CartanDatum,
    image_order: usize,
    action: Permutation,
    distinguished: BTreeSet<usize>,
    degree: Option<usize>,
}

impl TitsIndex {
    /// Validates and canonicalises. `action` may be omitted whenever the
    /// order determines it (always, except that `D_4` admits two mutually
    /// inverse order-3 rotations — these are normalised to `(1 3 4)`, so the
    /// argument only matters as a consistency check).
    pub fn new(
        ty: SimpleType,
        rank: usize,
        image_order: usize,
        action: Option<Permutation>,
        distinguished: BTreeSet<usize>,
        degree: Option<usize>,
    ) -> Result<TitsIndex> {
        let datum = cartan_datum(ty, rank)?;
        let ty = datum.base_type();
        let rank = datum.rank();
        let mut violations = Vec::new();

        for &v in &distinguished {
            if v == 0 || v > rank {
                violations.push(Violation::VertexOutOfRange { vertex: v, rank });
            }
        }
        if !violations.is_empty() {
            return Err(Error::InvalidIndex(violations));
        }

        let stored_action = match image_order {
            1 => {
                if let Some(p) = &action {
                    if !p.is_identity() {
                        violations.push(Violation::ActionOrderMismatch {
                            expected: 1,
                            actual: p.order(),
                        });
                    }
                }
                Permutation::identity(rank)
            }
            2 => match canonical_flip(&datum) {
                None => {
                    violations.push(Violation::ActionUnsupported {
                        ty,
                        rank,
                        order: 2,
                    });
                    Permutation::identity(rank)
                }
                Some(flip) => {
                    if let Some(p) = &action {
                        if !p.preserves_cartan(&datum) {
                            violations.push(Violation::ActionNotAutomorphism {
                                found: p.to_string(),
                            });
                        } else if p != &flip {
                            violations.push(Violation::ActionNotCanonical {
                                expected: flip.to_string(),
                                found: p.to_string(),
                            });
                        }
                    }
                    flip
                }
            },
            3 | 6 => {
                if ty != SimpleType::D || rank != 4 {
                    violations.push(Violation::ActionUnsupported {
                        ty,
                        rank,
                        order: image_order,
                    });
                    Permutation::identity(rank)
                } else {
                    let rot = d4_rotation();
                    match &action {
                        None => rot,
                        Some(p) => {
                            if !p.preserves_cartan(&datum) {
                                violations.push(Violation::ActionNotAutomorphism {
                                    found: p.to_string(),
                                });
                                rot
                            } else if p.order() != 3 {
                                violations.push(Violation::ActionOrderMismatch {
                                    expected: 3,
                                    actual: p.order(),
                                });
                                rot
                            } else {
                                // the two rotations generate the same group;
                                // keep the lexicographically smaller one
                                let square = p.compose(p);
                                let key =
                                    |q: &Permutation| (1..=4).map(|v| q.apply(v)).collect::<Vec<_>>();
                                if key(p) <= key(&square) {
                                    p.clone()
                                } else {
                                    square
                                }
                            }
                        }
                    }
                }
            }
            other => {
                violations.push(Violation::ImageOrderInvalid { order: other });
                Permutation::identity(rank)
            }
        };

        // distinguished must be a union of orbits
        let gens = generators_for(&stored_action, image_order, rank);
        for g in &gens {
            for &v in &distinguished {
                let w = g.apply(v);
                if !distinguished.contains(&w) {
                    violations.push(Violation::OrbitNotClosed { vertex: v, image: w });
                }
            }
        }

        let inner = image_order == 1;
        if let Some(d) = degree {
            if d == 0 {
                violations.push(Violation::DegreeOutOfRange { degree: 0 });
            } else {
                match ty {
                    SimpleType::A => {
                        let modulus = rank + 1;
                        if modulus % d != 0 {
                            violations.push(Violation::DegreeDoesNotDivide { degree: d, modulus });
                        } else if inner {
                            if distinguished != inner_a_pattern(rank, d) {
                                violations.push(Violation::DegreePatternMismatch { degree: d });
                            }
                        } else if !distinguished.is_empty()
                            && infer_outer_a_degree(rank, &distinguished) != Some(d)
                        {
                            violations.push(Violation::DegreePatternMismatch { degree: d });
                        }
                    }
                    SimpleType::C | SimpleType::D => {
                        if image_order >= 3 {
                            violations.push(Violation::DegreeWithTriality);
                        } else if d > 2 {
                            violations.push(Violation::DegreeOutOfRange { degree: d });
                        }
                    }
                    _ => violations.push(Violation::DegreeNotAllowed { ty }),
                }
            }
        }

        if !violations.is_empty() {
            return Err(Error::InvalidIndex(violations));
        }

        let degree = match ty {
            SimpleType::A if inner => degree.or_else(|| infer_inner_a_degree(rank, &distinguished)),
            SimpleType::A => degree.or_else(|| infer_outer_a_degree(rank, &distinguished)),
            SimpleType::C | SimpleType::D => degree,
            _ => None,
        };

        Ok(TitsIndex {
            datum,
            image_order,
            action: stored_action,
            distinguished,
            degree,
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn base_type(&self) -> SimpleType {
        self.datum.base_type()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Order of the image of the twisting action: 1, 2, 3 or 6.
    pub fn image_order(&self) -> usize {
        self.image_order
    }

    pub fn is_inner(&self) -> bool {
        self.image_order == 1
    }

    /// The stored generator: identity, the canonical flip, or the `D_4`
    /// rotation `(1 3 4)` (also for order 6, where the image additionally
    /// contains the flip).
    pub fn action(&self) -> &Permutation {
        &self.action
    }

    /// Generators of the full image group.
    pub fn action_generators(&self) -> Vec<Permutation> {
        generators_for(&self.action, self.image_order, self.rank())
    }

    /// Every element of the image group, identity first, closed under
    /// composition (at most 6 elements).
    pub fn image_group(&self) -> Vec<Permutation> {
        let mut elements = vec![Permutation::identity(self.rank())];
        let gens = self.action_generators();
        let mut frontier = elements.clone();
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = g.compose(&p);
                if !elements.contains(&q) {
                    elements.push(q.clone());
                    frontier.push(q);
                }
            }
        }
        elements
    }

    pub fn distinguished(&self) -> &BTreeSet<usize> {
        &self.distinguished
    }

    /// Division-algebra degree, declared or inferred; `None` when unknown.
    pub fn division_degree(&self) -> Option<usize> {
        self.degree
    }

    /// Orbits of the image group on the vertices, sorted by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        Permutation::orbits(&self.action_generators(), self.rank())
    }

    pub fn distinguished_orbits(&self) -> Vec<Vec<usize>> {
        self.orbits()
            .into_iter()
            .filter(|o| o.iter().all(|v| self.distinguished.contains(v)))
            .collect()
    }

    /// Relative rank: the number of distinguished orbits.
    pub fn k_rank(&self) -> usize {
        self.distinguished_orbits().len()
    }

    pub fn is_anisotropic(&self) -> bool {
        self.distinguished.is_empty()
    }

    pub fn is_quasi_split(&self) -> bool {
        self.distinguished.len() == self.rank()
    }

    pub fn is_split(&self) -> bool {
        self.is_inner() && self.is_quasi_split()
    }

    /// Vertices outside the distinguished set.
    pub fn kernel_vertices(&self) -> BTreeSet<usize> {
        self.datum
            .vertices()
            .filter(|v| !self.distinguished.contains(v))
            .collect()
    }

    /// Connected components of the subdiagram on the non-distinguished
    /// vertices, each identified as a simple type.
    pub fn anisotropic_kernel(&self) -> Result<Vec<DiagramComponent>> {
        components(&self.datum, &self.kernel_vertices())
    }

    /// Largest rank among the anisotropic-kernel components (0 when
    /// quasi-split). Several classification rules threshold on this number.
    pub fn max_kernel_component_rank(&self) -> Result<usize> {
        Ok(self
            .anisotropic_kernel()?
            .iter()
            .map(|c| c.rank)
            .max()
            .unwrap_or(0))
    }

    /// Whether some element of the twisting image maps a kernel component
    /// onto a different one (so the components are permuted, not just
    /// preserved, by the Galois action).
    pub fn action_permutes_kernel_components(&self) -> Result<bool> {
        let comps = self.anisotropic_kernel()?;
        for g in self.action_generators() {
            for c in &comps {
                let image: BTreeSet<usize> = c.vertices.iter().map(|&v| g.apply(v)).collect();
                let original: BTreeSet<usize> = c.vertices.iter().copied().collect();
                if image != original {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Classical name of the index, when the data pin one down: types `A`,
    /// `C`, `D` need a known degree; exceptional types use the superscript
    /// `(rank - relative rank) + 2 * (positive roots of the kernel)`. The
    /// two outer `E_6` indices sharing superscript 16 are told apart by a
    /// prime (kernel `A_3`) and a double prime (kernel `A_2 + A_2`).
    pub fn recognized_name(&self) -> Result<Option<String>> {
        let n = self.rank();
        let r = self.k_rank();
        let g = self.image_order;
        let name = match self.base_type() {
            SimpleType::A => self.degree.map(|d| {
                let prefix = if n >= 2 { format!("{g}") } else { String::new() };
                format!("{prefix}A^{{({d})}}_{{{n},{r}}}")
            }),
            SimpleType::B => Some(format!("B_{{{n},{r}}}")),
            SimpleType::C => self.degree.map(|d| format!("C^{{({d})}}_{{{n},{r}}}")),
            SimpleType::D if g <= 2 => {
                self.degree.map(|d| format!("{g}D^{{({d})}}_{{{n},{r}}}"))
            }
            SimpleType::D => Some(format!("{g}D^{{{}}}_{{{n},{r}}}", self.superscript()?)),
            SimpleType::E => {
                let s = self.superscript()?;
                let prefix = if n == 6 { format!("{g}") } else { String::new() };
                let tick = if n == 6 && g == 2 && s == 16 {
                    let kernel = self.anisotropic_kernel()?;
                    if kernel.len() == 1 { "'" } else { "''" }
                } else {
                    ""
                };
                Some(format!("{prefix}E^{{{s}{tick}}}_{{{n},{r}}}"))
            }
            SimpleType::F => Some(format!("F^{{{}}}_{{{n},{r}}}", self.superscript()?)),
            SimpleType::G => Some(format!("G^{{{}}}_{{{n},{r}}}", self.superscript()?)),
        };
        Ok(name)
    }

    /// `(rank - relative rank) + 2 * (positive roots of the kernel)`: the
    /// dimension of the anisotropic kernel as a group, counting its central
    /// torus part.
    fn superscript(&self) -> Result<usize> {
        let kernel_roots: usize = self
            .anisotropic_kernel()?
            .iter()
            .map(|c| positive_root_count(c.base_type, c.rank))
            .sum();
        Ok((self.rank() - self.k_rank()) + 2 * kernel_roots)
    }
}

fn generators_for(action: &Permutation, image_order: usize, rank: usize) -> Vec<Permutation> {
    match image_order {
        1 => Vec::new(),
        6 => vec![
            action.clone(),
            Permutation::from_cycles(rank, &[vec![3, 4]]).unwrap(),
        ],
        _ => vec![action.clone()],
    }
}

/// Distinguished pattern of an inner `A_rank` index with degree `d`
/// (`d` divides `rank+1`): every multiple of `d` up to `rank`.
fn inner_a_pattern(rank: usize, d: usize) -> BTreeSet<usize> {
    (1..)
        .map(|i| i * d)
        .take_while(|&v| v <= rank)
        .collect()
}

fn infer_inner_a_degree(rank: usize, distinguished: &BTreeSet<usize>) -> Option<usize> {
    let r = distinguished.len();
    if (rank + 1) % (r + 1) != 0 {
        return None;
    }
    let d = (rank + 1) / (r + 1);
    (*distinguished == inner_a_pattern(rank, d)).then_some(d)
}

/// For an outer `A_rank` index (distinguished set already mirror-closed),
/// the degree readable off the low half of the pattern, if consistent.
fn infer_outer_a_degree(rank: usize, distinguished: &BTreeSet<usize>) -> Option<usize> {
    if distinguished.is_empty() {
        return None;
    }
    let low: Vec<usize> = distinguished
        .iter()
        .copied()
        .filter(|&v| 2 * v <= rank + 1)
        .collect();
    let d = *low.first()?;
    let r = low.len();
    let pattern: Vec<usize> = (1..=r).map(|i| i * d).collect();
    (low == pattern && 2 * r * d <= rank + 1 && (rank + 1) % d == 0).then_some(d)
}

impl fmt::Display for TitsIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "^{}{}{}",
            self.image_order,
            self.base_type().letter(),
            self.rank()
        )?;
        if let Some(d) = self.degree {
            let show = match self.base_type() {
                SimpleType::C | SimpleType::D => true,
                SimpleType::A => d >= 2,
                _ => false,
            };
            if show {
                write!(f, "({d})")?;
            }
        }
        write!(f, ":[")?;
        for (i, v) in self.distinguished.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")?;
        if self.base_type() == SimpleType::D && self.rank() == 4 && self.image_order >= 3 {
            write!(f, ":{}", self.action)?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(b) => format!("{:?}", b as char),
        }
    }

    fn err(&self, expected: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            expected: expected.into(),
            found: self.found(),
        }
    }

    fn expect(&mut self, b: u8, desc: &str) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(desc))
        }
    }

    fn number(&mut self, desc: &str) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(desc));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse().map_err(|_| Error::Syntax {
            position: start,
            expected: format!("{desc} small enough to fit a machine integer"),
            found: text.into(),
        })
    }

    fn skip_spaces(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }
}

/// Parses the index grammar and validates the result.
pub fn parse_index(input: &str) -> Result<TitsIndex> {
    let mut c = Cursor::new(input);
    c.expect(b'^', "'^'")?;
    let order = c.number("image order")?;
    let ty = match c.peek() {
        Some(b @ b'A'..=b'G') => {
            c.bump();
            SimpleType::from_letter(b as char).unwrap()
        }
        _ => return Err(c.err("type letter A-G")),
    };
    let rank = c.number("rank")?;
    let degree = if c.peek() == Some(b'(') {
        c.bump();
        let d = c.number("degree")?;
        c.expect(b')', "')'")?;
        Some(d)
    } else {
        None
    };
    c.expect(b':', "':'")?;
    c.expect(b'[', "'['")?;
    let mut distinguished = BTreeSet::new();
    if c.peek() != Some(b']') {
        loop {
            distinguished.insert(c.number("vertex")?);
            if c.peek() == Some(b',') {
                c.bump();
            } else {
                break;
            }
        }
    }
    c.expect(b']', "']' or ','")?;
    let action = if c.peek() == Some(b':') {
        c.bump();
        let mut cycles = Vec::new();
        c.expect(b'(', "'('")?;
        loop {
            let mut cycle = Vec::new();
            c.skip_spaces();
            while c.peek() != Some(b')') {
                cycle.push(c.number("vertex")?);
                c.skip_spaces();
            }
            c.expect(b')', "')'")?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            if c.peek() == Some(b'(') {
                c.bump();
            } else {
                break;
            }
        }
        Some(Permutation::from_cycles(rank, &cycles)?)
    } else {
        None
    };
    if c.peek().is_some() {
        return Err(c.err("end of input"));
    }
    TitsIndex::new(ty, rank, order, action, distinguished, degree)
}

impl FromStr for TitsIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_index(s)
    }
}
