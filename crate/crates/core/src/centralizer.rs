//! Centralizers of split subtori and the structure they induce.
//!
//! Three views of the same situation are computed here, for a group with a
//! given index and a split subtorus spanned by some of its distinguished
//! orbits:
//!
//! * [`centralizer_index`] — the index induced on the centralizer of the
//!   subtorus spanned by the orbits being *removed*: the diagram keeps the
//!   non-removed vertices, components are identified and regrouped under the
//!   twisting action, and a central torus of known rank splits off.
//! * [`commuting_torus`] — the diagonalizable subgroup of the maximal torus
//!   commuting with a chosen set of root subgroups, described by a saturated
//!   cocharacter basis for its connected part plus finite-order generators
//!   of its component group.
//! * [`center_of_sc`] / [`center_contained`] — the center of the simply
//!   connected group built on a subset of the simple roots, written in
//!   ambient torus coordinates, and the test of whether that center lies
//!   inside the connected commuting torus.
//!
//! [`anisotropic_quotient_descriptor`] specialises the first view to the
//! full anisotropic kernel and describes how its factors are glued along
//! their centers, which depends on the isogeny type of the ambient group.

use crate::intlat::{in_connected_part, kernel_basis, torsion_solutions, IntMat, TorusElement};
use crate::rootsys::{
    cartan_datum, components_with_constraint, positive_root_count, CartanDatum, DiagramComponent,
    Permutation, SimpleType,
};
use crate::titsindex::{canonical_flip, IsogenyTag, TitsIndex, Violation};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::BTreeSet;
use std::fmt;

/// A diagonalizable subgroup of a split torus: a connected part given by a
/// saturated cocharacter lattice, and a finite component group given by
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalizableGroupDescriptor {
    pub ambient_rank: usize,
    /// Rank of the connected part.
    pub torus_rank: usize,
    /// Hermite-form basis of the cocharacter lattice of the connected part.
    pub cocharacter_basis: Vec<Vec<BigInt>>,
    /// Finite-order elements whose classes generate the component group,
    /// sorted by decreasing order.
    pub component_generators: Vec<TorusElement>,
}

impl DiagonalizableGroupDescriptor {
    pub fn is_connected(&self) -> bool {
        self.component_generators.is_empty()
    }

    /// Orders of the component-group generators (the invariant factors of
    /// the component group, largest first).
    pub fn component_orders(&self) -> Vec<BigInt> {
        self.component_generators
            .iter()
            .map(|g| g.order().clone())
            .collect()
    }
}

/// One factor of an induced index: a component of the remaining diagram,
/// its index in its own Bourbaki labels, and how many components of the
/// ambient diagram the twisting action merges into this factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexComponent {
    pub component: DiagramComponent,
    pub index: TitsIndex,
    pub conjugates: usize,
}

/// The index induced on the centralizer of a split subtorus: semisimple
/// factors plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedIndex {
    pub ambient_rank: usize,
    pub factors: Vec<IndexComponent>,
    pub central_torus_rank: usize,
}

impl InducedIndex {
    /// Dimension of the centralizer as an algebraic group.
    pub fn dimension(&self) -> usize {
        let roots: usize = self
            .factors
            .iter()
            .map(|f| {
                f.conjugates * positive_root_count(f.component.base_type, f.component.rank)
            })
            .sum();
        self.ambient_rank + 2 * roots
    }
}

impl fmt::Display for InducedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for factor in &self.factors {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if factor.conjugates > 1 {
                write!(f, "{}x({})", factor.conjugates, factor.index)?;
            } else {
                write!(f, "{}", factor.index)?;
            }
        }
        if self.central_torus_rank > 0 || self.factors.is_empty() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "T^{}", self.central_torus_rank)?;
        }
        Ok(())
    }
}

/// Restriction of an ambient vertex permutation to a component, in the
/// component's own labels; `None` if the permutation does not map the
/// component onto itself.
fn restrict_to_component(sigma: &Permutation, comp: &DiagramComponent) -> Option<Permutation> {
    let mut images = Vec::with_capacity(comp.rank);
    for role in 1..=comp.rank {
        let original = comp.to_bourbaki[role - 1];
        images.push(comp.bourbaki_label(sigma.apply(original))?);
    }
    Permutation::from_images(images).ok()
}

/// The index of the centralizer of the split subtorus spanned by the
/// distinguished orbits *not* in `keep`.
///
/// `keep` must be a union of distinguished orbits; the vertices that stay in
/// the diagram are `keep` plus all non-distinguished vertices. Components
/// are identified so that any induced order-2 action is the canonical flip
/// of the component's labels, then grouped into orbits under the twisting
/// action; each orbit contributes one factor whose `conjugates` count is the
/// orbit size.
pub fn centralizer_index(index: &TitsIndex, keep: &BTreeSet<usize>) -> Result<InducedIndex> {
    let datum = index.datum();
    let rank = index.rank();
    for &v in keep {
        if !index.distinguished().contains(&v) {
            return Err(Error::NotDistinguished(v));
        }
    }
    let elements = index.image_group();
    for sigma in &elements {
        for &v in keep {
            let w = sigma.apply(v);
            if !keep.contains(&w) {
                return Err(Error::InvalidIndex(vec![Violation::OrbitNotClosed {
                    vertex: v,
                    image: w,
                }]));
            }
        }
    }

    let removed: BTreeSet<usize> = index
        .distinguished()
        .iter()
        .copied()
        .filter(|v| !keep.contains(v))
        .collect();
    let kept_vertices: BTreeSet<usize> = datum.vertices().filter(|v| !removed.contains(v)).collect();

    // identify components so that every induced involution is canonical
    let constraint = |comp: &DiagramComponent| -> bool {
        let comp_datum = match cartan_datum(comp.base_type, comp.rank) {
            Ok(d) => d,
            Err(_) => return false,
        };
        for sigma in &elements {
            if let Some(restricted) = restrict_to_component(sigma, comp) {
                if restricted.order() == 2 {
                    match canonical_flip(&comp_datum) {
                        Some(flip) if restricted == flip => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    };
    let comps = components_with_constraint(datum, &kept_vertices, &constraint)?;

    // group components into orbits of the twisting action
    let mut assigned = vec![false; comps.len()];
    let mut factors = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let vertex_set: BTreeSet<usize> = comp.vertices.iter().copied().collect();
        let mut orbit = Vec::new();
        for sigma in &elements {
            let image: BTreeSet<usize> = vertex_set.iter().map(|&v| sigma.apply(v)).collect();
            let j = comps
                .iter()
                .position(|c| c.vertices.iter().copied().collect::<BTreeSet<_>>() == image)
                .ok_or_else(|| {
                    Error::Internal("twisting action does not permute the components".into())
                })?;
            if !orbit.contains(&j) {
                orbit.push(j);
            }
        }
        for &j in &orbit {
            assigned[j] = true;
        }

        // induced action on the representative: restrictions of the
        // stabilizing elements
        let mut restricted_group = Vec::new();
        for sigma in &elements {
            if let Some(r) = restrict_to_component(sigma, comp) {
                if !restricted_group.contains(&r) {
                    restricted_group.push(r);
                }
            }
        }
        let image_order = restricted_group.len();
        let generator = match image_order {
            1 => None,
            2 => restricted_group.iter().find(|p| p.order() == 2).cloned(),
            3 | 6 => restricted_group.iter().find(|p| p.order() == 3).cloned(),
            other => {
                return Err(Error::Internal(format!(
                    "induced action group has impossible order {other}"
                )))
            }
        };
        let distinguished: BTreeSet<usize> = keep
            .iter()
            .filter_map(|&v| comp.bourbaki_label(v))
            .collect();
        let induced = TitsIndex::new(
            comp.base_type,
            comp.rank,
            image_order,
            generator,
            distinguished,
            None,
        )?;
        factors.push(IndexComponent {
            component: comp.clone(),
            index: induced,
            conjugates: orbit.len(),
        });
    }

    let kept_orbit_count = Permutation::orbits(&index.action_generators(), rank)
        .into_iter()
        .filter(|o| o.iter().all(|v| keep.contains(v)))
        .count();
    let central_torus_rank = index.k_rank() - kept_orbit_count;
    Ok(InducedIndex {
        ambient_rank: rank,
        factors,
        central_torus_rank,
    })
}

/// Character matrix of the root set `j` on the maximal torus in coroot
/// coordinates: row for each root in `j`, column `i` holding its pairing
/// with the `i`-th simple coroot.
fn commuting_matrix(datum: &CartanDatum, j: &BTreeSet<usize>) -> Result<IntMat> {
    let n = datum.rank();
    for &v in j {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let rows: Vec<Vec<i64>> = j
        .iter()
        .map(|&root| (1..=n).map(|i| datum.pairing(root, i)).collect())
        .collect();
    Ok(if rows.is_empty() {
        IntMat::zero(0, n)
    } else {
        IntMat::from_rows(&rows)
    })
}

/// The diagonalizable subgroup of the maximal torus on which every simple
/// root in `j` vanishes — the part of the torus commuting with the root
/// subgroups of `j`.
pub fn commuting_torus(
    datum: &CartanDatum,
    j: &BTreeSet<usize>,
) -> Result<DiagonalizableGroupDescriptor> {
    let m = commuting_matrix(datum, j)?;
    let basis = kernel_basis(&m);
    Ok(DiagonalizableGroupDescriptor {
        ambient_rank: datum.rank(),
        torus_rank: basis.len(),
        cocharacter_basis: basis,
        component_generators: torsion_solutions(&m),
    })
}

/// Generators of the center of the simply connected group on the simple
/// roots `j`, written as finite-order elements of the ambient torus (the
/// coroots of `j` are coroots of the ambient datum, so the element lives at
/// those coordinates and is zero elsewhere).
pub fn center_of_sc(datum: &CartanDatum, j: &BTreeSet<usize>) -> Result<Vec<TorusElement>> {
    let n = datum.rank();
    for &v in j {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let positions: Vec<usize> = j.iter().copied().collect();
    let rows: Vec<Vec<i64>> = positions
        .iter()
        .map(|&i| positions.iter().map(|&jj| datum.pairing(i, jj)).collect())
        .collect();
    let m = if rows.is_empty() {
        IntMat::zero(0, 0)
    } else {
        IntMat::from_rows(&rows)
    };
    let embedded = torsion_solutions(&m)
        .into_iter()
        .map(|gen| {
            let mut exps = vec![num_rational::BigRational::from(BigInt::from(0)); n];
            for (k, &pos) in positions.iter().enumerate() {
                exps[pos - 1] = gen.exponents()[k].clone();
            }
            TorusElement::new(exps)
        })
        .collect();
    Ok(embedded)
}

/// Whether the center of the simply connected group on `j` lies inside the
/// connected part of the commuting torus of `j`.
pub fn center_contained(datum: &CartanDatum, j: &BTreeSet<usize>) -> Result<bool> {
    let m = commuting_matrix(datum, j)?;
    for gen in center_of_sc(datum, j)? {
        if !in_connected_part(&m, &gen)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One factor of the anisotropic kernel, as a group over the ground field:
/// `conjugates > 1` means the twisting action merges that many components
/// into a single factor obtained by restriction of scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientFactor {
    pub index: TitsIndex,
    pub conjugates: usize,
}

/// The anisotropic kernel presented as an almost direct product: factors,
/// and what is known about the central subgroup they are glued along. The
/// gluing depends on the isogeny type of the ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedProductDescriptor {
    pub factors: Vec<QuotientFactor>,
    /// Order of the glued central subgroup, when the shape pins it down.
    pub glue_order: Option<usize>,
    /// `Some(true)`: the factors share a single central subgroup along which
    /// they are glued. `Some(false)`: the product is direct. `None`: not
    /// determined by the index and isogeny alone.
    pub common_center: Option<bool>,
    pub notes: Vec<String>,
}

impl fmt::Display for GluedProductDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " . ")?;
            }
            if factor.conjugates > 1 {
                write!(f, "{}x({})", factor.conjugates, factor.index)?;
            } else {
                write!(f, "{}", factor.index)?;
            }
        }
        match (self.glue_order, self.common_center) {
            (Some(d), Some(true)) if d > 1 => write!(f, " glued along a center of order {d}")?,
            (_, Some(false)) => write!(f, " (direct product)")?,
            _ => {}
        }
        Ok(())
    }
}

/// Describes the anisotropic kernel of `index` as a product of factors
/// glued along central subgroups, as far as the index and the isogeny type
/// determine it.
pub fn anisotropic_quotient_descriptor(
    index: &TitsIndex,
    isogeny: IsogenyTag,
) -> Result<GluedProductDescriptor> {
    let induced = centralizer_index(index, &BTreeSet::new())?;
    let factors: Vec<QuotientFactor> = induced
        .factors
        .iter()
        .map(|f| QuotientFactor {
            index: f.index.clone(),
            conjugates: f.conjugates,
        })
        .collect();

    let mut notes = Vec::new();
    if factors.is_empty() {
        notes.push("the anisotropic kernel is trivial".into());
        return Ok(GluedProductDescriptor {
            factors,
            glue_order: None,
            common_center: None,
            notes,
        });
    }

    let ty = index.base_type();
    let degree = index.division_degree();
    let kernel = index.anisotropic_kernel()?;
    // shapes whose gluing data the index determines
    let recognized: Option<usize> = match (ty, index.image_order()) {
        (SimpleType::A, 1) => {
            degree.inspect(|d| {
                if *d >= 2 {
                    notes.push(format!(
                        "every factor is the norm-one group of the same degree-{d} division algebra"
                    ));
                }
            })
        }
        (SimpleType::A, 2) => degree.inspect(|d| {
            if *d >= 2 {
                notes.push(format!(
                    "the glued central subgroup has order dividing {d}, not necessarily equal to it"
                ));
            }
        }),
        (SimpleType::D, 1) | (SimpleType::D, 2)
            if degree == Some(2)
                && kernel
                    .iter()
                    .all(|c| c.base_type == SimpleType::A && c.rank % 2 == 1) =>
        {
            notes.push(
                "every factor is a special linear group over the same quaternion algebra".into(),
            );
            if factors.iter().any(|f| f.conjugates > 1) {
                notes.push(
                    "the swapped fork components form one factor by restriction of scalars along a quadratic extension"
                        .into(),
                );
            }
            Some(2)
        }
        _ => None,
    };

    let (glue_order, common_center) = match isogeny {
        IsogenyTag::Adjoint => {
            notes.push(
                "in the adjoint group the centers of the factors are killed, so the product is direct"
                    .into(),
            );
            (Some(1), Some(false))
        }
        IsogenyTag::SimplyConnected => match recognized {
            Some(d) if d >= 2 => (Some(d), Some(true)),
            Some(_) => (Some(1), Some(false)),
            None => (None, None),
        },
        IsogenyTag::Other => {
            notes.push(
                "an intermediate isogeny glues the factors along an unspecified quotient of their centers"
                    .into(),
            );
            if ty == SimpleType::D && index.rank() % 2 == 0 {
                notes.push(
                    "the center of the even spin group is not cyclic: quotients by the two half-spin kernels need not be isomorphic"
                        .into(),
                );
            }
            (None, None)
        }
    };

    Ok(GluedProductDescriptor {
        factors,
        glue_order,
        common_center,
        notes,
    })
}
