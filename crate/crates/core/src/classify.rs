//! Rule-based rationality classification.
//!
//! The classifier evaluates a fixed table of rules against an index, an
//! isogeny tag, and a field context.  Each rule encodes one published
//! rationality criterion for almost simple groups; a fired rule contributes
//! its guaranteed class to the verdict, and the verdict reports the strongest
//! class any fired rule guarantees.  Rules never speculate: where only
//! "rational or stably rational" is known, the guaranteed class is
//! `StablyRational`, and shapes no rule covers stay `Unknown`.
//!
//! The rule ids `R1`..`R11` carry a rationality class; `N1`/`N2` are
//! class-free notes about birational invariance inside an isogeny class.

use serde::Serialize;

use crate::rootsys::SimpleType;
use crate::titsindex::{FieldContext, IsogenyTag, TitsIndex};
use crate::Result;

/// Rationality class of a verdict, ordered by strength of the guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictClass {
    /// The underlying variety is rational over the ground field.
    Rational,
    /// The group is stably rational (rational after multiplying by an
    /// affine space), but plain rationality is not guaranteed.
    StablyRational,
    /// The group is provably not stably rational.
    NotStablyRational,
    /// No rule in the table covers this shape.
    Unknown,
}

impl VerdictClass {
    /// Stable lower-case label, identical to the JSON encoding.
    pub fn label(self) -> &'static str {
        match self {
            VerdictClass::Rational => "rational",
            VerdictClass::StablyRational => "stably_rational",
            VerdictClass::NotStablyRational => "not_stably_rational",
            VerdictClass::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for VerdictClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Class a rule guarantees when it fires.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleClass {
    /// Fires with a rationality guarantee.
    Rational,
    /// Fires with a stable-rationality guarantee.
    StablyRational,
    /// Fires with a proof of non-stable-rationality.
    NotStablyRational,
    /// Contributes a note but no class.
    Note,
}

/// One entry of the classification rule table.
#[derive(Debug, Clone, Copy)]
pub struct Rule {
    /// Stable identifier (`R1`..`R11`, `N1`, `N2`).
    pub id: &'static str,
    /// Class guaranteed when the rule fires.  For `R7` the guarantee is
    /// upgraded to rational on the one shape whose criterion proves
    /// rationality outright (simply connected `E^{66}_{7,1}`).
    pub class: RuleClass,
    /// Human-readable firing condition over index invariants.
    pub condition: &'static str,
    /// Self-contained statement of the criterion the rule encodes.
    pub citation: &'static str,
}

static RULE_TABLE: [Rule; 13] = [
    Rule {
        id: "R1",
        class: RuleClass::Rational,
        condition: "quasi-split (empty anisotropic kernel); any isogeny, any field",
        citation: "the trivial cases of split and quasi-split groups are rational over the \
                   ground field",
    },
    Rule {
        id: "R2",
        class: RuleClass::StablyRational,
        condition: "m(G) <= 2; field = general",
        citation: "an almost simple k-group G with m(G) <= 2 is rational or stably rational \
                   over k",
    },
    Rule {
        id: "R3",
        class: RuleClass::Rational,
        condition: "inner type A, isotropic, division degree <= 3, adjoint",
        citation: "an isotropic inner group of type A with division degree at most 3 is stably \
                   rational over k, and it is rational over k if it is adjoint",
    },
    Rule {
        id: "R4",
        class: RuleClass::Rational,
        condition: "outer type A, division degree 1, n even, isotropic; isogeny simply \
                    connected or adjoint",
        citation: "for an outer form of type A with division degree 1, if n is even then G is \
                   k-rational",
    },
    Rule {
        id: "R5",
        class: RuleClass::StablyRational,
        condition: "field = general, isotropic, and one of: inner A with division degree <= 3; \
                    B; C with declared degree d <= 2 and n - d*r <= 2; D (image order <= 2) \
                    with declared degree d <= 2 and n <= r+2 (d = 1) or n <= 2r+1 (d = 2)",
        citation: "an isotropic almost simple k-group of inner type A with division degree at \
                   most 3, of type B, of type C with n - dr <= 2 and d <= 2, or of type D with \
                   d <= 2 and n <= r+2 (d = 1) or n <= 2r+1 (d = 2) is either rational or \
                   stably rational over k",
    },
    Rule {
        id: "R6",
        class: RuleClass::Rational,
        condition: "isotropic of type D_4 (any *-image order), F_4, or G_2",
        citation: "if an isotropic almost simple group is of type D_4, F, G then G is k-rational",
    },
    Rule {
        id: "R7",
        class: RuleClass::StablyRational,
        condition: "isotropic E-series: inner E_6; outer E_6 with k-rank >= 2 (adjoint \
                    required for the shape 2E^{16''}_{6,2}); E_7 with distinguished set {1} \
                    and simply connected (shape E^{66}_{7,1}, fires as rational); E_7 with \
                    k-rank >= 2 (simply connected required for the shape E^{31}_{7,2}); \
                    E_8 with k-rank >= 3",
        citation: "an isotropic group of inner type E_6; of outer type E_6 with k-rank at \
                   least 2 (adjoint for the shape 2E^{16''}_{6,2}); simply connected of shape \
                   E^{66}_{7,1} (where G is rational); of type E_7 with k-rank at least 2 \
                   (simply connected for the shape E^{31}_{7,2}); or of type E_8 with k-rank \
                   at least 3 is either k-rational or stably rational over k",
    },
    Rule {
        id: "R8",
        class: RuleClass::Rational,
        condition: "field = padic, adjoint",
        citation: "over a p-adic field, if G is adjoint then G is k-rational",
    },
    Rule {
        id: "R9",
        class: RuleClass::StablyRational,
        condition: "field = padic; not inner type A with division degree >= 4 (or \
                    undetermined); not simply connected type D with declared degree 2 in the \
                    excluded rank patterns n = 2r+3 (inner) or n = 2r+2 with r odd (outer)",
        citation: "over a p-adic field, an almost simple group of type different from inner \
                   A with division degree at least 4 and from the simply connected degree-2 \
                   type D patterns n = 2r+3 (inner) and n = 2r+2 with r odd (outer) is \
                   rational or stably rational over k",
    },
    Rule {
        id: "R10",
        class: RuleClass::StablyRational,
        condition: "field = real; not an anisotropic group of type E_6/E_7/E_8; skipped with \
                    a warning when a declared division degree exceeds 2 (vacuous over the \
                    reals)",
        citation: "a semisimple real group with no anisotropic factors of types E_6, E_7, \
                   E_8 is stably rational over the reals",
    },
    Rule {
        id: "R11",
        class: RuleClass::NotStablyRational,
        condition: "inner type A, simply connected, division degree divisible by 4; any field \
                    where the index is posed",
        citation: "if G is simply connected of inner type A given by the reduced-norm-one \
                   elements of a division algebra whose index is divisible by 4 then G is not \
                   stably rational over k; this family yields non stably rational groups G \
                   with anisotropic-kernel components of 4n-1 vertices",
    },
    Rule {
        id: "N1",
        class: RuleClass::Note,
        condition: "outer type A, division degree 1, n odd (note only)",
        citation: "for an outer form of type A with division degree 1 and n odd, any almost \
                   simple k-group which is isogenous to G is also k-birationally isomorphic \
                   (as varieties) to G",
    },
    Rule {
        id: "N2",
        class: RuleClass::Note,
        condition: "type E_7 with distinguished set {7} (shape E^{78}_{7,1}; note only)",
        citation: "for the shape E^{78}_{7,1}, any k-group which is k-isogenous to G is also \
                   birationally isomorphic to G over k as k-varieties",
    },
];

/// The full classification rule table: eleven class-bearing rules and two
/// notes, in id order.
pub fn rule_table() -> &'static [Rule] {
    &RULE_TABLE
}

fn rule(id: &str) -> &'static Rule {
    RULE_TABLE
        .iter()
        .find(|r| r.id == id)
        .unwrap_or_else(|| panic!("unknown rule id {id}"))
}

/// A rule instance that fired, with its citation text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiredRule {
    /// Rule identifier from the table.
    pub id: String,
    /// Citation text of the rule.
    pub cite: String,
}

/// Outcome of classification: the strongest guaranteed class, the rules that
/// fired, and any notes and warnings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    /// Strongest class guaranteed by the fired rules.
    pub class: VerdictClass,
    /// Class-bearing rules that fired, in table order.
    pub rules: Vec<FiredRule>,
    /// Notes (isogeny-invariance facts and similar class-free statements).
    pub notes: Vec<String>,
    /// Caveats about the evaluation itself (excluded shapes, vacuous
    /// degrees, components merged by the *-action).  Serialized at the
    /// report level, not inside the verdict object.
    #[serde(skip_serializing)]
    pub warnings: Vec<String>,
}

fn dist_is(index: &TitsIndex, want: &[usize]) -> bool {
    index.distinguished().iter().copied().eq(want.iter().copied())
}

/// Classify one (index, isogeny, field) triple against the rule table.
///
/// The verdict class is `Rational` if any rational-guarantee rule fires,
/// else `StablyRational` if any stable-rationality rule fires, else
/// `NotStablyRational` if the negative rule fires, else `Unknown`.
pub fn classify(index: &TitsIndex, isogeny: IsogenyTag, field: FieldContext) -> Result<Verdict> {
    let ty = index.base_type();
    let n = index.rank();
    let g = index.image_order();
    let r = index.k_rank();
    let m = index.max_kernel_component_rank()?;
    let d = index.division_degree();
    let isotropic = !index.is_anisotropic();
    let inner_a = ty == SimpleType::A && g == 1;
    let outer_a = ty == SimpleType::A && g == 2;
    let sc = isogeny == IsogenyTag::SimplyConnected;
    let adjoint = isogeny == IsogenyTag::Adjoint;

    let mut fired: Vec<(&'static str, RuleClass)> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    let mut warnings: Vec<String> = Vec::new();

    // A declared degree above 2 cannot be realized by a real division
    // algebra, so degree-sensitive real rules must not fire on such input.
    let real_vacuous_degree =
        field == FieldContext::Real && matches!(d, Some(deg) if deg >= 3);
    if real_vacuous_degree {
        warnings.push(
            "division algebras over the reals have degree at most 2, so no real group \
             carries this index; degree-sensitive real rules are skipped"
                .to_string(),
        );
    }

    if index.action_permutes_kernel_components()? {
        warnings.push(
            "the *-action permutes the components of the anisotropic kernel; the \
             components are conjugate over the ground field"
                .to_string(),
        );
    }

    // R1: quasi-split groups are rational, over any field and isogeny.
    if index.is_quasi_split() {
        fired.push(("R1", RuleClass::Rational));
    }

    // R2: small anisotropic kernel over a general field.
    if field == FieldContext::General && m <= 2 {
        fired.push(("R2", RuleClass::StablyRational));
    }

    // R3: adjoint isotropic inner type A of small division degree.
    if inner_a && adjoint && isotropic && matches!(d, Some(deg) if deg <= 3) {
        fired.push(("R3", RuleClass::Rational));
    }

    // R4: outer type A, degree 1, even rank.  Isogeny-sensitive, so the
    // indeterminate `other` tag does not fire it.
    if outer_a && d == Some(1) && n % 2 == 0 && isotropic && (sc || adjoint) {
        fired.push(("R4", RuleClass::Rational));
    }

    // R5: the general-field classical list.
    if field == FieldContext::General && isotropic {
        let covered = (inner_a && matches!(d, Some(deg) if deg <= 3))
            || ty == SimpleType::B
            || (ty == SimpleType::C
                && matches!(d, Some(deg) if deg <= 2 && n.saturating_sub(deg * r) <= 2))
            || (ty == SimpleType::D
                && g <= 2
                && match d {
                    Some(1) => n <= r + 2,
                    Some(2) => n <= 2 * r + 1,
                    _ => false,
                });
        if covered {
            fired.push(("R5", RuleClass::StablyRational));
        }
    }

    // R6: isotropic D_4 (any *-image order), F_4, G_2.
    if isotropic && ((ty == SimpleType::D && n == 4) || ty == SimpleType::F || ty == SimpleType::G)
    {
        fired.push(("R6", RuleClass::Rational));
    }

    // R7: the E-series list.  Conditional shapes stay isogeny-sensitive.
    if isotropic && ty == SimpleType::E {
        match n {
            6 if g == 1 => fired.push(("R7", RuleClass::StablyRational)),
            6 if g == 2 && r >= 2 => {
                let shape_16pp = dist_is(index, &[2, 4]);
                if !shape_16pp || adjoint {
                    fired.push(("R7", RuleClass::StablyRational));
                }
            }
            7 => {
                if dist_is(index, &[1]) {
                    if sc {
                        fired.push(("R7", RuleClass::Rational));
                    }
                } else if r >= 2 {
                    let shape_31 = dist_is(index, &[1, 6]);
                    if !shape_31 || sc {
                        fired.push(("R7", RuleClass::StablyRational));
                    }
                }
            }
            8 if r >= 3 => fired.push(("R7", RuleClass::StablyRational)),
            _ => {}
        }
    }

    // R8: p-adic adjoint groups.
    if field == FieldContext::Padic && adjoint {
        fired.push(("R8", RuleClass::Rational));
    }

    // R9: the p-adic list, minus its excluded families.
    if field == FieldContext::Padic {
        let mut excluded = false;
        if inner_a {
            match d {
                None => {
                    excluded = true;
                    warnings.push(
                        "the division degree of this inner type A index is not determined \
                         by its circled vertices; the p-adic criterion needs degree < 4, \
                         so the index is treated as unknown"
                            .to_string(),
                    );
                }
                Some(deg) if deg >= 4 => excluded = true,
                _ => {}
            }
        }
        if ty == SimpleType::D && g <= 2 && sc {
            let shape = (g == 1 && n == 2 * r + 3) || (g == 2 && n == 2 * r + 2 && r % 2 == 1);
            if shape {
                match d {
                    Some(2) => {
                        excluded = true;
                        warnings.push(
                            "simply connected type D with declared degree 2 in this rank \
                             pattern is excluded from the p-adic stable-rationality \
                             criterion; whether the exclusion is necessary is open, so \
                             the index is treated as unknown"
                                .to_string(),
                        );
                    }
                    None => {
                        excluded = true;
                        warnings.push(
                            "this rank pattern is excluded from the p-adic \
                             stable-rationality criterion when the division degree is 2, \
                             but no degree is declared; the index is treated as unknown"
                                .to_string(),
                        );
                    }
                    _ => {}
                }
            }
        }
        if !excluded {
            fired.push(("R9", RuleClass::StablyRational));
        }
    }

    // R10: real groups without anisotropic exceptional E-factors.
    if field == FieldContext::Real
        && !(r == 0 && ty == SimpleType::E)
        && !real_vacuous_degree
    {
        fired.push(("R10", RuleClass::StablyRational));
    }

    // R11: the negative family (reduced norm one of algebras of index 4k).
    if inner_a && sc && matches!(d, Some(deg) if deg % 4 == 0) {
        fired.push(("R11", RuleClass::NotStablyRational));
    }
    if inner_a && adjoint && matches!(d, Some(deg) if deg % 4 == 0) {
        warnings.push(
            "no rule covers adjoint inner type A with degree divisible by 4: adjoint \
             groups of type A_3 which are not stably rational exist over some fields, \
             so the status depends on the field"
                .to_string(),
        );
    }

    // N1: odd-rank counterpart of R4 — birational invariance in the
    // isogeny class, without a rationality class.
    if outer_a && d == Some(1) && n % 2 == 1 {
        notes.push(format!("N1: {}", rule("N1").citation));
    }

    // N2: the E_7 shape whose whole isogeny class shares one birational type.
    if ty == SimpleType::E && n == 7 && dist_is(index, &[7]) {
        notes.push(format!("N2: {}", rule("N2").citation));
    }

    let class = if fired.iter().any(|(_, c)| *c == RuleClass::Rational) {
        VerdictClass::Rational
    } else if fired.iter().any(|(_, c)| *c == RuleClass::StablyRational) {
        VerdictClass::StablyRational
    } else if fired.iter().any(|(_, c)| *c == RuleClass::NotStablyRational) {
        VerdictClass::NotStablyRational
    } else {
        VerdictClass::Unknown
    };

    let rules = fired
        .iter()
        .map(|(id, _)| FiredRule {
            id: (*id).to_string(),
            cite: rule(id).citation.to_string(),
        })
        .collect();

    Ok(Verdict {
        class,
        rules,
        notes,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::titsindex::parse_index;

    fn verdict(s: &str, isogeny: IsogenyTag, field: FieldContext) -> Verdict {
        classify(&parse_index(s).unwrap(), isogeny, field).unwrap()
    }

    fn ids(v: &Verdict) -> Vec<&str> {
        v.rules.iter().map(|r| r.id.as_str()).collect()
    }

    use FieldContext::{General, Padic, Real};
    use IsogenyTag::{Adjoint, Other, SimplyConnected as Sc};

    #[test]
    fn table_shape() {
        let table = rule_table();
        assert_eq!(table.len(), 13);
        assert_eq!(
            table.iter().filter(|r| r.class != RuleClass::Note).count(),
            11
        );
        let mut ids: Vec<_> = table.iter().map(|r| r.id).collect();
        ids.dedup();
        assert_eq!(ids.len(), 13);
        assert!(rule("R11").citation.contains("non stably rational groups G"));
        assert!(rule("R1").citation.contains("split and quasi-split groups"));
    }

    #[test]
    fn split_a1_is_rational() {
        let v = verdict("^1A1:[1]", Sc, General);
        assert_eq!(v.class, VerdictClass::Rational);
        assert_eq!(ids(&v), ["R1", "R2", "R5"]);
    }

    #[test]
    fn merkurjev_family_is_negative() {
        let v = verdict("^1A7(4):[4]", Sc, General);
        assert_eq!(v.class, VerdictClass::NotStablyRational);
        assert_eq!(ids(&v), ["R11"]);
        // The negative rule must also fire over the fields where the index
        // is posed, and must not co-fire with the real-field rule.
        let v = verdict("^1A7(4):[4]", Sc, Real);
        assert_eq!(v.class, VerdictClass::NotStablyRational);
        assert_eq!(ids(&v), ["R11"]);
        assert!(!v.warnings.is_empty());
    }

    #[test]
    fn adjoint_grid_of_degree_three() {
        let v = verdict("^1A8(3):[3,6]", Sc, General);
        assert_eq!(v.class, VerdictClass::StablyRational);
        assert_eq!(ids(&v), ["R2", "R5"]);
        let v = verdict("^1A8(3):[3,6]", Adjoint, General);
        assert_eq!(v.class, VerdictClass::Rational);
        assert_eq!(ids(&v), ["R2", "R3", "R5"]);
    }

    #[test]
    fn outer_a_even_rank() {
        let v = verdict("^2A4:[1,4]", Sc, General);
        assert_eq!(v.class, VerdictClass::Rational);
        assert_eq!(ids(&v), ["R2", "R4"]);
        // The indeterminate isogeny tag blocks the isogeny-sensitive rule.
        let v = verdict("^2A4:[1,4]", Other, General);
        assert_eq!(v.class, VerdictClass::StablyRational);
        assert_eq!(ids(&v), ["R2"]);
    }

    #[test]
    fn outer_a_odd_rank_notes_invariance() {
        let v = verdict("^2A5:[1,5]", Sc, General);
        assert_eq!(v.class, VerdictClass::Unknown);
        assert!(ids(&v).is_empty());
        assert_eq!(v.notes.len(), 1);
        assert!(v.notes[0].starts_with("N1:"));
    }

    #[test]
    fn e7_rank_one_shapes() {
        let v = verdict("^1E7:[1]", Sc, General);
        assert_eq!(v.class, VerdictClass::Rational);
        assert_eq!(ids(&v), ["R7"]);
        let v = verdict("^1E7:[1]", Adjoint, General);
        assert_eq!(v.class, VerdictClass::Unknown);
        let v = verdict("^1E7:[7]", Sc, General);
        assert_eq!(v.class, VerdictClass::Unknown);
        assert!(v.notes.iter().any(|s| s.starts_with("N2:")));
    }

    #[test]
    fn e7_rank_two_gate() {
        let v = verdict("^1E7:[1,6]", Sc, General);
        assert_eq!(v.class, VerdictClass::StablyRational);
        assert_eq!(ids(&v), ["R7"]);
        let v = verdict("^1E7:[1,6]", Adjoint, General);
        assert_eq!(v.class, VerdictClass::Unknown);
    }

    #[test]
    fn outer_e6_shape_gate() {
        let sc = verdict("^2E6:[2,4]", Sc, General);
        assert_eq!(sc.class, VerdictClass::StablyRational);
        assert_eq!(ids(&sc), ["R2"]);
        assert!(sc
            .warnings
            .iter()
            .any(|w| w.contains("permutes the components")));
        let adj = verdict("^2E6:[2,4]", Adjoint, General);
        assert_eq!(ids(&adj), ["R2", "R7"]);
        let other_shape = verdict("^2E6:[1,2,6]", Sc, General);
        assert_eq!(ids(&other_shape), ["R7"]);
    }

    #[test]
    fn trialitarian_d4_is_rational() {
        let v = verdict("^3D4:[2]:(1 3 4)", Sc, General);
        assert_eq!(v.class, VerdictClass::Rational);
        assert_eq!(ids(&v), ["R2", "R6"]);
    }

    #[test]
    fn padic_adjoint_split() {
        let v = verdict("^1A5:[1,2,3,4,5]", Adjoint, Padic);
        assert_eq!(v.class, VerdictClass::Rational);
        assert_eq!(ids(&v), ["R1", "R3", "R8", "R9"]);
    }

    #[test]
    fn padic_excluded_d_shapes() {
        let v = verdict("^1D7(2):[2,4]", Sc, Padic);
        assert_eq!(v.class, VerdictClass::Unknown);
        assert!(!v.warnings.is_empty());
        let v = verdict("^2D8(2):[2,4,6]", Sc, Padic);
        assert_eq!(v.class, VerdictClass::Unknown);
        // The exclusion names simply connected groups only.
        let v = verdict("^2D8(2):[2,4,6]", Adjoint, Padic);
        assert_eq!(v.class, VerdictClass::Rational);
        assert_eq!(ids(&v), ["R8", "R9"]);
        // Non-excluded rank patterns pass.
        let v = verdict("^1D6(2):[2,4]", Sc, Padic);
        assert_eq!(v.class, VerdictClass::StablyRational);
        assert_eq!(ids(&v), ["R9"]);
    }

    #[test]
    fn real_isotropic_e8() {
        let v = verdict("^1E8:[8]", Sc, Real);
        assert_eq!(v.class, VerdictClass::StablyRational);
        assert_eq!(ids(&v), ["R10"]);
    }

    #[test]
    fn unknown_degree_five() {
        let v = verdict("^1A9(5):[5]", Sc, General);
        assert_eq!(v.class, VerdictClass::Unknown);
        assert!(ids(&v).is_empty());
        assert!(v.notes.is_empty());
    }

    #[test]
    fn fired_rules_carry_table_citations() {
        let v = verdict("^1G2:[1,2]", Sc, General);
        assert_eq!(ids(&v), ["R1", "R2", "R6"]);
        for fr in &v.rules {
            assert_eq!(fr.cite, rule(&fr.id).citation);
        }
    }
}
